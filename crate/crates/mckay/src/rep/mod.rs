//! Irreducible characters, purity classification and McKay quivers.

pub mod dixon;
pub mod quiver;

use std::sync::Arc;

use crate::cyclo::{Cyclotomic, Rat};
use crate::error::{Error, Result};
use crate::group::{MatrixGroup, QuotientMap};
use crate::linalg::CMatrix;

/// A class function: one cyclotomic value per conjugacy class, in the
/// class order of the group.
#[derive(Clone, PartialEq, Eq)]
pub struct ClassFunction {
    pub values: Vec<Cyclotomic>,
}

impl ClassFunction {
    pub fn pointwise_mul(&self, other: &ClassFunction) -> ClassFunction {
        ClassFunction {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a.mul(b))
                .collect(),
        }
    }

    /// Hermitian inner product (1/|G|) sum_g f(g) conj(h(g)).
    pub fn inner(&self, other: &ClassFunction, group: &MatrixGroup) -> Cyclotomic {
        let cls = group.conjugacy_classes();
        let mut acc = Cyclotomic::zero(1);
        for j in 0..self.values.len() {
            let term = self.values[j]
                .mul(&other.values[j].conj())
                .scale(&Rat::from_integer((cls.sizes[j] as i64).into()));
            acc = acc.add(&term);
        }
        acc.scale(&Rat::new(1.into(), (group.order() as i64).into()))
    }

    /// Is the function constant on conjugacy classes of a finer grouping?
    /// (Trivially true by construction; kept for raw trace vectors.)
    pub fn at_class(&self, j: usize) -> &Cyclotomic {
        &self.values[j]
    }
}

/// Complete irreducible character table, rows sorted by dimension and
/// then lexicographically by value vectors.
pub struct CharTable {
    group: Arc<MatrixGroup>,
    rows: Vec<ClassFunction>,
    dims: Vec<usize>,
    trivial: usize,
}

impl CharTable {
    pub fn compute(group: &Arc<MatrixGroup>) -> Result<CharTable> {
        let mut raw = dixon::character_rows(group)?;
        raw.sort_by(|a, b| {
            a.dim.cmp(&b.dim).then_with(|| {
                for (x, y) in a.values.iter().zip(&b.values) {
                    let c = x.cmp_lex(y);
                    if c != std::cmp::Ordering::Equal {
                        return c;
                    }
                }
                std::cmp::Ordering::Equal
            })
        });
        let dims: Vec<usize> = raw.iter().map(|r| r.dim).collect();
        let rows: Vec<ClassFunction> = raw
            .into_iter()
            .map(|r| ClassFunction { values: r.values })
            .collect();
        let trivial = rows
            .iter()
            .position(|r| r.values.iter().all(Cyclotomic::is_one))
            .expect("trivial character is present");
        Ok(CharTable {
            group: Arc::clone(group),
            rows,
            dims,
            trivial,
        })
    }

    pub fn group(&self) -> &Arc<MatrixGroup> {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn row(&self, i: usize) -> &ClassFunction {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[ClassFunction] {
        &self.rows
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn trivial_index(&self) -> usize {
        self.trivial
    }

    /// Multiplicity vector of a character: m_i = <f, chi_i>. Errors when
    /// any multiplicity fails to be a non-negative integer, which means
    /// the input was not a genuine character.
    pub fn decompose(&self, f: &ClassFunction) -> Result<Vec<usize>> {
        let mut out = Vec::with_capacity(self.rows.len());
        for (i, chi) in self.rows.iter().enumerate() {
            let m = f.inner(chi, &self.group);
            let as_int = m
                .to_rational()
                .filter(|r| r.is_integer() && !num_traits::Signed::is_negative(r))
                .map(|r| {
                    use num_traits::ToPrimitive;
                    r.to_integer().to_usize()
                })
                .flatten();
            match as_int {
                Some(v) => out.push(v),
                None => return Err(Error::NonIntegerMultiplicity { row: i }),
            }
        }
        Ok(out)
    }

    /// Multiset of labels with multiplicity, for generator modules.
    pub fn decompose_multiset(&self, f: &ClassFunction) -> Result<Vec<usize>> {
        let m = self.decompose(f)?;
        let mut labels = Vec::new();
        for (i, &k) in m.iter().enumerate() {
            for _ in 0..k {
                labels.push(i);
            }
        }
        Ok(labels)
    }

    /// Exact row orthogonality check, for tests and self-validation.
    pub fn verify_orthogonality(&self) -> Result<()> {
        for i in 0..self.rows.len() {
            for j in 0..self.rows.len() {
                let v = self.rows[i].inner(&self.rows[j], &self.group);
                let expect = if i == j { 1 } else { 0 };
                if v != Cyclotomic::from_integer(1, expect) {
                    return Err(Error::Invalid(format!(
                        "orthogonality fails at rows {i}, {j}"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Trace of the defining representation on each class.
pub fn natural_character(group: &Arc<MatrixGroup>) -> ClassFunction {
    let cls = group.conjugacy_classes();
    ClassFunction {
        values: cls
            .reps
            .iter()
            .map(|&r| group.element(r).trace())
            .collect(),
    }
}

/// |G| at the identity, zero elsewhere.
pub fn regular_character(group: &Arc<MatrixGroup>) -> ClassFunction {
    let cls = group.conjugacy_classes();
    let mut values = vec![Cyclotomic::zero(1); cls.reps.len()];
    values[0] = Cyclotomic::from_integer(1, group.order() as i64);
    ClassFunction { values }
}

/// Purity flags for a binary polyhedral group: a representation is pure
/// when chi(-I) = chi(I), i.e. it factors through the polyhedral quotient.
pub fn purity_flags(table: &CharTable) -> Result<Vec<bool>> {
    let group = table.group();
    let Some(minus) = group.minus_identity_index() else {
        return Err(Error::MissingMinusIdentity);
    };
    let cls = group.conjugacy_classes();
    let minus_class = cls.class_of[minus];
    Ok(table
        .rows()
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.values[minus_class] == Cyclotomic::from_integer(1, table.dims()[i] as i64)
        })
        .collect())
}

/// Match each pure 2D irreducible with the 3D irreducible it descends to:
/// result[i] = Some(row in the quotient table) iff row i is pure. The
/// matching must be a bijection onto the quotient table or an error is
/// returned.
pub fn match_pure_to_quotient(
    table2: &CharTable,
    map: &QuotientMap,
    table3: &CharTable,
) -> Result<Vec<Option<usize>>> {
    let flags = purity_flags(table2)?;
    let g2 = table2.group();
    let g3 = table3.group();
    let cls2 = g2.conjugacy_classes();
    let cls3 = g3.conjugacy_classes();
    // pull each 3D row back to a class function on the 2D group
    let pullbacks: Vec<ClassFunction> = table3
        .rows()
        .iter()
        .map(|row| ClassFunction {
            values: cls2
                .reps
                .iter()
                .map(|&r| row.values[cls3.class_of[map.element_map[r]]].clone())
                .collect(),
        })
        .collect();
    let mut used = vec![false; table3.len()];
    let mut out = vec![None; table2.len()];
    for (i, row) in table2.rows().iter().enumerate() {
        if !flags[i] {
            continue;
        }
        let j = pullbacks
            .iter()
            .position(|p| p == row)
            .ok_or_else(|| Error::Invalid(format!("pure row {i} has no quotient match")))?;
        if used[j] {
            return Err(Error::Invalid(format!(
                "quotient row {j} matched twice through the covering map"
            )));
        }
        used[j] = true;
        out[i] = Some(j);
    }
    if used.iter().any(|u| !u) {
        return Err(Error::Invalid(
            "some quotient irreducible is not hit by a pure representation".into(),
        ));
    }
    Ok(out)
}

/// Seed for the randomized Schur averaging; fixed so builds and curve
/// parameterizations are reproducible.
pub const INTERTWINER_SEED: u64 = 0x6d63_6b61_79;
const INTERTWINER_RETRIES: usize = 4;

/// Averaged intertwiner between two explicit modules given by their
/// per-element action matrices: T = (1/|G|) sum_g A_w(g) T0 A_u(g)^{-1}.
/// By Schur's lemma the result is invertible or zero; zero after the
/// retry budget reports "not isomorphic".
pub fn equivariant_isomorphism(
    group: &MatrixGroup,
    act_u: &dyn Fn(usize) -> CMatrix,
    act_w: &dyn Fn(usize) -> CMatrix,
    dim: usize,
) -> Result<CMatrix> {
    use rand::{Rng, SeedableRng};
    let n = group.order();
    let scale = Rat::new(1.into(), (n as i64).into());
    // Cache per-element action matrices once.
    let us: Vec<CMatrix> = (0..n).map(|g| act_u(group.inv_index(g))).collect();
    let ws: Vec<CMatrix> = (0..n).map(&*act_w).collect();
    for attempt in 0..=INTERTWINER_RETRIES {
        let mut rng =
            rand_chacha::ChaCha8Rng::seed_from_u64(INTERTWINER_SEED + attempt as u64);
        let mut t0 = CMatrix::zero(dim, dim);
        for r in 0..dim {
            for c in 0..dim {
                let v: i64 = rng.gen_range(1..=16);
                t0.set(r, c, Cyclotomic::from_integer(1, v));
            }
        }
        let mut acc = CMatrix::zero(dim, dim);
        for g in 0..n {
            acc = acc.add(&ws[g].mul(&t0).mul(&us[g]));
        }
        let avg = acc.scale(&Cyclotomic::from_rational(1, scale.clone()));
        if avg.is_zero() {
            continue;
        }
        if avg.rank() < dim {
            // nonzero singular average contradicts Schur for irreducibles
            return Err(Error::Invalid(
                "averaged intertwiner is singular; modules are not irreducible".into(),
            ));
        }
        return Ok(avg);
    }
    Err(Error::NotIsomorphic {
        i: 0,
        j: 1,
        retries: INTERTWINER_RETRIES,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::builtin::{build_binary_polyhedral, GroupKind};
    use crate::group::build_polyhedral_quotient;

    fn dims_sorted(t: &CharTable) -> Vec<usize> {
        let mut d = t.dims().to_vec();
        d.sort_unstable();
        d
    }

    #[test]
    fn abelian_binary_cyclic_two() {
        let g = build_binary_polyhedral(GroupKind::Cyclic, 2, None).unwrap();
        let t = CharTable::compute(&g).unwrap();
        assert_eq!(t.dims(), &[1, 1, 1, 1]);
        t.verify_orthogonality().unwrap();
    }

    #[test]
    fn binary_tetrahedral_dimensions() {
        let g = build_binary_polyhedral(GroupKind::Tetrahedral, 0, None).unwrap();
        let t = CharTable::compute(&g).unwrap();
        assert_eq!(dims_sorted(&t), vec![1, 1, 1, 2, 2, 2, 3]);
        t.verify_orthogonality().unwrap();
    }

    #[test]
    fn binary_dihedral_two_dimensions() {
        let g = build_binary_polyhedral(GroupKind::Dihedral, 2, None).unwrap();
        let t = CharTable::compute(&g).unwrap();
        assert_eq!(dims_sorted(&t), vec![1, 1, 1, 1, 2]);
        t.verify_orthogonality().unwrap();
    }

    #[test]
    fn regular_character_decomposes_into_degrees() {
        let g = build_binary_polyhedral(GroupKind::Dihedral, 3, None).unwrap();
        let t = CharTable::compute(&g).unwrap();
        let reg = regular_character(&g);
        let m = t.decompose(&reg).unwrap();
        assert_eq!(m, t.dims().to_vec());
        // the trivial character decomposes as a delta
        let triv = t.row(t.trivial_index()).clone();
        let m = t.decompose(&triv).unwrap();
        let mut expect = vec![0usize; t.len()];
        expect[t.trivial_index()] = 1;
        assert_eq!(m, expect);
    }

    #[test]
    fn natural_character_values() {
        let g = build_binary_polyhedral(GroupKind::Cyclic, 2, None).unwrap();
        let nat = natural_character(&g);
        // identity has trace 2
        assert_eq!(nat.values[0], Cyclotomic::from_integer(1, 2));
        // -I has trace -2
        let minus_class =
            g.conjugacy_classes().class_of[g.minus_identity_index().unwrap()];
        assert_eq!(nat.values[minus_class], Cyclotomic::from_integer(1, -2));
        // natural character of a binary cyclic group selects two adjacent
        // one-dimensional binary representations
        let g4 = build_binary_polyhedral(GroupKind::Cyclic, 4, None).unwrap();
        let t4 = CharTable::compute(&g4).unwrap();
        let m = t4.decompose(&natural_character(&g4)).unwrap();
        assert_eq!(m.iter().sum::<usize>(), 2);
        let flags = purity_flags(&t4).unwrap();
        for (i, &mult) in m.iter().enumerate() {
            if mult > 0 {
                assert_eq!(mult, 1);
                assert!(!flags[i], "natural constituents are binary");
            }
        }
    }

    #[test]
    fn purity_counts_match_quotient() {
        for (kind, n) in [
            (GroupKind::Cyclic, 3),
            (GroupKind::Dihedral, 2),
            (GroupKind::Tetrahedral, 0),
        ] {
            let gt = build_binary_polyhedral(kind, n, None).unwrap();
            let (gq, map) = build_polyhedral_quotient(&gt).unwrap();
            let t2 = CharTable::compute(&gt).unwrap();
            let t3 = CharTable::compute(&gq).unwrap();
            let flags = purity_flags(&t2).unwrap();
            let pure = flags.iter().filter(|&&b| b).count();
            assert_eq!(pure, t3.len());
            assert_eq!(flags.len() - pure, t2.len() - t3.len());
            // the trivial character is always pure
            assert!(flags[t2.trivial_index()]);
            let matches = match_pure_to_quotient(&t2, &map, &t3).unwrap();
            assert_eq!(matches.iter().flatten().count(), t3.len());
        }
    }

    #[test]
    fn tetrahedral_purity_split() {
        let gt = build_binary_polyhedral(GroupKind::Tetrahedral, 0, None).unwrap();
        let t = CharTable::compute(&gt).unwrap();
        let flags = purity_flags(&t).unwrap();
        // pure: dims {1,1,1,3}; binary: dims {2,2,2}
        let mut pure_dims: Vec<usize> = flags
            .iter()
            .zip(t.dims())
            .filter(|(f, _)| **f)
            .map(|(_, d)| *d)
            .collect();
        pure_dims.sort_unstable();
        assert_eq!(pure_dims, vec![1, 1, 1, 3]);
        let binary_dims: Vec<usize> = flags
            .iter()
            .zip(t.dims())
            .filter(|(f, _)| !**f)
            .map(|(_, d)| *d)
            .collect();
        assert_eq!(binary_dims, vec![2, 2, 2]);
    }
}
