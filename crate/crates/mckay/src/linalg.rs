//! Small exact linear algebra over cyclotomic fields.
//!
//! Subspaces are held as row matrices in reduced row echelon form, which
//! makes every span canonical and comparisons deterministic.

use crate::cyclo::Cyclotomic;

/// Dense rectangular matrix of cyclotomic numbers, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct CMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Cyclotomic>,
}

impl CMatrix {
    pub fn zero(rows: usize, cols: usize) -> CMatrix {
        CMatrix {
            rows,
            cols,
            data: vec![Cyclotomic::zero(1); rows * cols],
        }
    }

    pub fn identity(n: usize) -> CMatrix {
        let mut m = CMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, Cyclotomic::one(1));
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Cyclotomic>>) -> CMatrix {
        let r = rows.len();
        let c = rows.first().map(Vec::len).unwrap_or(0);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c);
            data.extend(row);
        }
        CMatrix { rows: r, cols: c, data }
    }

    pub fn at(&self, r: usize, c: usize) -> &Cyclotomic {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Cyclotomic) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Cyclotomic] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul(&self, other: &CMatrix) -> CMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = CMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if !b.is_zero() {
                        let v = out.at(i, j).add(&a.mul(b));
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Cyclotomic]) -> Vec<Cyclotomic> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = Cyclotomic::zero(1);
                for j in 0..self.cols {
                    let a = self.at(i, j);
                    if !a.is_zero() && !v[j].is_zero() {
                        acc = acc.add(&a.mul(&v[j]));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &CMatrix) -> CMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.add(b))
            .collect();
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn scale(&self, c: &Cyclotomic) -> CMatrix {
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.mul(c)).collect(),
        }
    }

    pub fn trace(&self) -> Cyclotomic {
        assert_eq!(self.rows, self.cols);
        let mut acc = Cyclotomic::zero(1);
        for i in 0..self.rows {
            acc = acc.add(self.at(i, i));
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Cyclotomic::is_zero)
    }

    /// In-place reduced row echelon form; returns pivot column indices.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut lead = 0usize;
        for col in 0..self.cols {
            let Some(p) = (lead..self.rows).find(|&r| !self.at(r, col).is_zero()) else {
                continue;
            };
            self.swap_rows(lead, p);
            let inv = self.at(lead, col).inv().expect("pivot is nonzero");
            for c in 0..self.cols {
                let v = self.at(lead, c).mul(&inv);
                self.set(lead, c, v);
            }
            for r in 0..self.rows {
                if r != lead && !self.at(r, col).is_zero() {
                    let f = self.at(r, col).clone();
                    for c in 0..self.cols {
                        let v = self.at(r, c).sub(&f.mul(self.at(lead, c)));
                        self.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            lead += 1;
            if lead == self.rows {
                break;
            }
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }
}

/// Canonical basis of the span of the given vectors: nonzero rows of the
/// reduced row echelon form.
pub fn span_basis(vectors: &[Vec<Cyclotomic>]) -> Vec<Vec<Cyclotomic>> {
    if vectors.is_empty() {
        return vec![];
    }
    let mut m = CMatrix::from_rows(vectors.to_vec());
    let pivots = m.rref();
    (0..pivots.len()).map(|r| m.row(r).to_vec()).collect()
}

/// Solve basis^T * x = v for a row-basis matrix, i.e. express `v` as a
/// linear combination of the basis rows. Returns None when v is outside
/// the span.
pub fn express_in_basis(basis: &[Vec<Cyclotomic>], v: &[Cyclotomic]) -> Option<Vec<Cyclotomic>> {
    let k = basis.len();
    if k == 0 {
        return if v.iter().all(Cyclotomic::is_zero) {
            Some(vec![])
        } else {
            None
        };
    }
    let n = v.len();
    // augmented system with columns = basis vectors
    let mut aug = CMatrix::zero(n, k + 1);
    for (j, b) in basis.iter().enumerate() {
        for i in 0..n {
            aug.set(i, j, b[i].clone());
        }
    }
    for i in 0..n {
        aug.set(i, k, v[i].clone());
    }
    let pivots = aug.rref();
    if pivots.contains(&k) {
        return None; // inconsistent
    }
    let mut x = vec![Cyclotomic::zero(1); k];
    for (row, &col) in pivots.iter().enumerate() {
        x[col] = aug.at(row, k).clone();
    }
    Some(x)
}

/// Is v inside the span of the basis rows?
pub fn in_span(basis: &[Vec<Cyclotomic>], v: &[Cyclotomic]) -> bool {
    express_in_basis(basis, v).is_some()
}

/// Matrix of a linear map restricted to an invariant subspace: returns T
/// with image_of(basis_i) = sum_j T[j][i] basis_j. Panics if the subspace
/// is not invariant.
pub fn restriction_matrix(
    basis: &[Vec<Cyclotomic>],
    image_of: impl Fn(&[Cyclotomic]) -> Vec<Cyclotomic>,
) -> CMatrix {
    let k = basis.len();
    let mut t = CMatrix::zero(k, k);
    for (i, b) in basis.iter().enumerate() {
        let img = image_of(b);
        let coords = express_in_basis(basis, &img).expect("subspace is not invariant");
        for (j, c) in coords.into_iter().enumerate() {
            t.set(j, i, c);
        }
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: i64) -> Cyclotomic {
        Cyclotomic::from_integer(4, v)
    }

    #[test]
    fn rref_and_span() {
        let rows = vec![
            vec![c(1), c(2), c(3)],
            vec![c(2), c(4), c(6)],
            vec![c(0), c(1), c(1)],
        ];
        let basis = span_basis(&rows);
        assert_eq!(basis.len(), 2);
        assert!(in_span(&basis, &[c(1), c(3), c(4)]));
        assert!(!in_span(&basis, &[c(0), c(0), c(1)]));
    }

    #[test]
    fn express_coordinates() {
        let basis = vec![vec![c(1), c(0)], vec![c(0), c(1)]];
        let x = express_in_basis(&basis, &[c(7), c(-2)]).unwrap();
        assert_eq!(x, vec![c(7), c(-2)]);
    }

    #[test]
    fn restriction() {
        // the map (x, y) -> (y, -x) restricted to the whole plane
        let basis = vec![vec![c(1), c(0)], vec![c(0), c(1)]];
        let t = restriction_matrix(&basis, |v| vec![v[1].clone(), v[0].neg()]);
        assert_eq!(t.at(0, 1), &c(1));
        assert_eq!(t.at(1, 0), &c(-1));
        assert!(t.trace().is_zero());
    }
}
