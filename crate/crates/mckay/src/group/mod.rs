//! Finite matrix groups over cyclotomic fields.
//!
//! Groups are built once by breadth-first closure of a generating set and
//! are immutable afterwards; multiplication/inverse tables and conjugacy
//! classes are derived lazily and cached. Element identity is exact
//! matrix equality, and elements keep their BFS insertion order so that
//! indices are reproducible across runs.

pub mod builtin;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::cyclo::Cyclotomic;
use crate::error::{Error, Result};

/// Dense square matrix of cyclotomic numbers, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    dim: usize,
    entries: Vec<Cyclotomic>,
}

impl Matrix {
    pub fn new(dim: usize, entries: Vec<Cyclotomic>) -> Matrix {
        assert_eq!(entries.len(), dim * dim);
        Matrix { dim, entries }
    }

    pub fn identity(dim: usize, conductor: u32) -> Matrix {
        let mut entries = Vec::with_capacity(dim * dim);
        for r in 0..dim {
            for c in 0..dim {
                entries.push(if r == c {
                    Cyclotomic::one(conductor)
                } else {
                    Cyclotomic::zero(conductor)
                });
            }
        }
        Matrix { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn at(&self, r: usize, c: usize) -> &Cyclotomic {
        &self.entries[r * self.dim + c]
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.dim, other.dim);
        let d = self.dim;
        let mut entries = Vec::with_capacity(d * d);
        for r in 0..d {
            for c in 0..d {
                let mut acc = self.at(r, 0).mul(other.at(0, c));
                for k in 1..d {
                    acc = acc.add(&self.at(r, k).mul(other.at(k, c)));
                }
                entries.push(acc);
            }
        }
        Matrix { dim: d, entries }
    }

    pub fn neg(&self) -> Matrix {
        Matrix {
            dim: self.dim,
            entries: self.entries.iter().map(|e| e.neg()).collect(),
        }
    }

    pub fn transpose(&self) -> Matrix {
        let d = self.dim;
        let mut entries = Vec::with_capacity(d * d);
        for r in 0..d {
            for c in 0..d {
                entries.push(self.at(c, r).clone());
            }
        }
        Matrix { dim: d, entries }
    }

    pub fn trace(&self) -> Cyclotomic {
        let mut acc = self.at(0, 0).clone();
        for k in 1..self.dim {
            acc = acc.add(self.at(k, k));
        }
        acc
    }

    /// Determinant by cofactor expansion; only used for dim <= 3 checks.
    pub fn det(&self) -> Cyclotomic {
        match self.dim {
            1 => self.at(0, 0).clone(),
            2 => self
                .at(0, 0)
                .mul(self.at(1, 1))
                .sub(&self.at(0, 1).mul(self.at(1, 0))),
            3 => {
                let m = |r: usize, c: usize| self.at(r, c);
                let t1 = m(0, 0).mul(&m(1, 1).mul(m(2, 2)).sub(&m(1, 2).mul(m(2, 1))));
                let t2 = m(0, 1).mul(&m(1, 0).mul(m(2, 2)).sub(&m(1, 2).mul(m(2, 0))));
                let t3 = m(0, 2).mul(&m(1, 0).mul(m(2, 1)).sub(&m(1, 1).mul(m(2, 0))));
                t1.sub(&t2).add(&t3)
            }
            _ => panic!("determinant implemented for dim <= 3 only"),
        }
    }

    pub fn is_identity(&self) -> bool {
        for r in 0..self.dim {
            for c in 0..self.dim {
                let e = self.at(r, c);
                if r == c {
                    if !e.is_one() {
                        return false;
                    }
                } else if !e.is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.dim {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.dim {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.at(r, c))?;
            }
        }
        write!(f, "]")
    }
}

/// Multiplication/inverse tables, built on first use.
struct Tables {
    mult: Vec<u32>,
    inv: Vec<u32>,
}

/// Conjugacy class data. Classes are sorted by their smallest member
/// index, so the identity class comes first.
pub struct ConjClasses {
    pub class_of: Vec<usize>,
    pub reps: Vec<usize>,
    pub sizes: Vec<usize>,
    pub members: Vec<Vec<usize>>,
}

pub struct MatrixGroup {
    name: String,
    conductor: u32,
    elements: Vec<Matrix>,
    index: HashMap<Matrix, usize>,
    generators: Vec<usize>,
    tables: OnceLock<Tables>,
    classes: OnceLock<ConjClasses>,
}

/// Hard cap on closure size; generators that do not close below this
/// bound are reported as an error rather than looping.
pub const CLOSURE_BOUND: usize = 20_000;

impl MatrixGroup {
    /// Breadth-first closure of a generating set, starting at the identity.
    pub fn closure(name: &str, conductor: u32, gens: &[Matrix]) -> Result<Arc<MatrixGroup>> {
        assert!(!gens.is_empty());
        let dim = gens[0].dim();
        let id = Matrix::identity(dim, conductor);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::new();
        index.insert(id, 0usize);

        // register generators first so their indices are small and stable
        let mut gen_indices = Vec::new();
        for g in gens {
            let next = elements.len();
            let idx = *index.entry(g.clone()).or_insert_with(|| {
                elements.push(g.clone());
                next
            });
            gen_indices.push(idx);
        }

        let mut cursor = 0;
        while cursor < elements.len() {
            let current = elements[cursor].clone();
            for g in gens {
                let prod = current.mul(g);
                if !index.contains_key(&prod) {
                    if elements.len() >= CLOSURE_BOUND {
                        return Err(Error::ClosureDiverged {
                            bound: CLOSURE_BOUND,
                        });
                    }
                    index.insert(prod.clone(), elements.len());
                    elements.push(prod);
                }
            }
            cursor += 1;
        }

        Ok(Arc::new(MatrixGroup {
            name: name.to_string(),
            conductor,
            elements,
            index,
            generators: gen_indices,
            tables: OnceLock::new(),
            classes: OnceLock::new(),
        }))
    }

    /// Wrap an element list that is already known to be closed (for
    /// example the image of a homomorphism). The first element must be
    /// the identity. Closure is still checked lazily: building the
    /// multiplication table fails loudly if a product is missing.
    pub fn from_elements(
        name: &str,
        conductor: u32,
        elements: Vec<Matrix>,
        generators: Vec<usize>,
    ) -> Arc<MatrixGroup> {
        assert!(elements[0].is_identity(), "first element must be identity");
        let mut index = HashMap::new();
        for (i, m) in elements.iter().enumerate() {
            let prev = index.insert(m.clone(), i);
            assert!(prev.is_none(), "duplicate element in listing");
        }
        Arc::new(MatrixGroup {
            name: name.to_string(),
            conductor,
            elements,
            index,
            generators,
            tables: OnceLock::new(),
            classes: OnceLock::new(),
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn dim(&self) -> usize {
        self.elements[0].dim()
    }

    pub fn element(&self, i: usize) -> &Matrix {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[Matrix] {
        &self.elements
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn index_of(&self, m: &Matrix) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn identity_index(&self) -> usize {
        0
    }

    fn tables(&self) -> &Tables {
        self.tables.get_or_init(|| {
            let n = self.order();
            let mut mult = vec![0u32; n * n];
            for i in 0..n {
                for j in 0..n {
                    let prod = self.elements[i].mul(&self.elements[j]);
                    let k = self
                        .index
                        .get(&prod)
                        .copied()
                        .expect("group not closed under multiplication");
                    mult[i * n + j] = k as u32;
                }
            }
            let mut inv = vec![0u32; n];
            for i in 0..n {
                let j = (0..n)
                    .find(|&j| mult[i * n + j] == 0)
                    .expect("element without inverse");
                inv[i] = j as u32;
            }
            Tables { mult, inv }
        })
    }

    pub fn mul_index(&self, i: usize, j: usize) -> usize {
        let t = self.tables();
        t.mult[i * self.order() + j] as usize
    }

    pub fn inv_index(&self, i: usize) -> usize {
        self.tables().inv[i] as usize
    }

    /// Order of the element at index `i`.
    pub fn element_order(&self, i: usize) -> usize {
        let mut k = 1;
        let mut cur = i;
        while cur != 0 {
            cur = self.mul_index(cur, i);
            k += 1;
        }
        k
    }

    /// Exponent of the group: lcm of element orders.
    pub fn exponent(&self) -> u64 {
        let mut e: u64 = 1;
        for i in 0..self.order() {
            e = num_integer::lcm(e, self.element_order(i) as u64);
        }
        e
    }

    /// Index of -I, when present (binary polyhedral groups).
    pub fn minus_identity_index(&self) -> Option<usize> {
        let m = Matrix::identity(self.dim(), self.conductor).neg();
        self.index_of(&m)
    }

    pub fn conjugacy_classes(&self) -> &ConjClasses {
        self.classes.get_or_init(|| {
            let n = self.order();
            let mut class_of = vec![usize::MAX; n];
            let mut reps = Vec::new();
            let mut members: Vec<Vec<usize>> = Vec::new();
            for x in 0..n {
                if class_of[x] != usize::MAX {
                    continue;
                }
                let cls_id = reps.len();
                let mut mem = Vec::new();
                for t in 0..n {
                    let y = self.mul_index(self.mul_index(t, x), self.inv_index(t));
                    if class_of[y] == usize::MAX {
                        class_of[y] = cls_id;
                        mem.push(y);
                    }
                }
                mem.sort_unstable();
                reps.push(x);
                members.push(mem);
            }
            let sizes = members.iter().map(Vec::len).collect();
            ConjClasses {
                class_of,
                reps,
                sizes,
                members,
            }
        })
    }

    /// Power map on classes: class index of rep(class)^k.
    pub fn class_power(&self, class: usize, k: usize) -> usize {
        let rep = self.conjugacy_classes().reps[class];
        let mut cur = 0usize;
        for _ in 0..k {
            cur = self.mul_index(cur, rep);
        }
        self.conjugacy_classes().class_of[cur]
    }
}

impl fmt::Debug for MatrixGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "MatrixGroup({}, order {}, dim {})",
            self.name,
            self.order(),
            self.dim()
        )
    }
}

/// The two-to-one map from a binary polyhedral group onto its polyhedral
/// quotient acting on the cone coordinates.
pub struct QuotientMap {
    pub source: Arc<MatrixGroup>,
    pub target: Arc<MatrixGroup>,
    /// element_map[i] = index in `target` of the image of source element i.
    pub element_map: Vec<usize>,
    /// Indices of the kernel {I, -I} in the source.
    pub kernel: Vec<usize>,
}

impl QuotientMap {
    /// Check the homomorphism property on all pairs and the 2:1 fiber
    /// structure. Intended for tests; cost is |G|^2 table lookups.
    pub fn verify(&self) -> Result<()> {
        let n = self.source.order();
        for i in 0..n {
            for j in 0..n {
                let lhs = self.element_map[self.source.mul_index(i, j)];
                let rhs = self
                    .target
                    .mul_index(self.element_map[i], self.element_map[j]);
                if lhs != rhs {
                    return Err(Error::Invalid(format!(
                        "quotient map is not a homomorphism at pair ({i}, {j})"
                    )));
                }
            }
        }
        let mut fibers = vec![0usize; self.target.order()];
        for &img in &self.element_map {
            fibers[img] += 1;
        }
        if fibers.iter().any(|&c| c != 2) {
            return Err(Error::Invalid("quotient map is not 2:1".into()));
        }
        if self.kernel.len() != 2 {
            return Err(Error::Invalid("kernel is not {I, -I}".into()));
        }
        Ok(())
    }
}

/// Image of a 2x2 matrix under the symmetric-square action on the cone
/// coordinates (a, b, c) = (x^2, y^2, xy): the unique 3x3 matrix N with
/// q(Mv) = N q(v) for q(x, y) = (x^2, y^2, xy).
pub fn cone_action_matrix(m: &Matrix) -> Matrix {
    assert_eq!(m.dim(), 2);
    let a = m.at(0, 0);
    let b = m.at(0, 1);
    let c = m.at(1, 0);
    let d = m.at(1, 1);
    let two = Cyclotomic::from_integer(1, 2);
    Matrix::new(
        3,
        vec![
            a.mul(a),
            b.mul(b),
            a.mul(b).mul(&two),
            c.mul(c),
            d.mul(d),
            c.mul(d).mul(&two),
            a.mul(c),
            b.mul(d),
            a.mul(d).add(&b.mul(c)),
        ],
    )
}

/// Construct the polyhedral quotient of a binary polyhedral group, acting
/// on the cone coordinates. The source must contain -I; elements g and -g
/// map to the same image and the kernel is exactly {I, -I}.
pub fn build_polyhedral_quotient(gt: &Arc<MatrixGroup>) -> Result<(Arc<MatrixGroup>, QuotientMap)> {
    if gt.dim() != 2 {
        return Err(Error::DimensionMismatch {
            left: gt.dim(),
            right: 2,
        });
    }
    let Some(_minus) = gt.minus_identity_index() else {
        return Err(Error::MissingMinusIdentity);
    };

    let mut images: Vec<Matrix> = Vec::new();
    let mut img_index: HashMap<Matrix, usize> = HashMap::new();
    let mut element_map = Vec::with_capacity(gt.order());
    for m in gt.elements() {
        let n = cone_action_matrix(m);
        let next = images.len();
        let idx = *img_index.entry(n.clone()).or_insert_with(|| {
            images.push(n);
            next
        });
        element_map.push(idx);
    }

    let gens = gt
        .generators()
        .iter()
        .map(|&g| element_map[g])
        .filter(|&g| g != 0)
        .collect::<Vec<_>>();
    let name = format!("{}/±1", gt.name());
    let target = MatrixGroup::from_elements(&name, gt.conductor(), images, gens);

    let kernel: Vec<usize> = element_map
        .iter()
        .enumerate()
        .filter(|(_, &img)| img == 0)
        .map(|(i, _)| i)
        .collect();
    if kernel.len() != 2 || element_map.len() != 2 * target.order() {
        return Err(Error::Invalid(
            "quotient construction produced a non 2:1 map".into(),
        ));
    }

    let map = QuotientMap {
        source: Arc::clone(gt),
        target: Arc::clone(&target),
        element_map,
        kernel,
    };
    Ok((target, map))
}

/// Quaternion coordinates (a, b, c, d) of an SU(2) element under the
/// identification q = [[a+ib, c+id], [-c+id, a-ib]].
fn quaternion_coords(m: &Matrix, conductor: u32) -> [Cyclotomic; 4] {
    assert_eq!(conductor % 4, 0, "conductor must contain i");
    let i_unit = Cyclotomic::root_of_unity(conductor as i64 / 4, conductor);
    let half = Cyclotomic::from_rational(conductor, crate::cyclo::Rat::new(1.into(), 2.into()));
    let two_i = i_unit.scale(&crate::cyclo::Rat::from_integer(2.into()));
    let m11 = m.at(0, 0);
    let m12 = m.at(0, 1);
    let m21 = m.at(1, 0);
    let m22 = m.at(1, 1);
    let a = m11.add(m22).mul(&half);
    let b = m11.sub(m22).div(&two_i).expect("2i is invertible");
    let c = m12.sub(m21).mul(&half);
    let d = m12.add(m21).div(&two_i).expect("2i is invertible");
    [a, b, c, d]
}

/// Left-multiplication matrix of a quaternion on the basis (1, i, j, k).
fn quat_left_mul(p: &[Cyclotomic; 4]) -> Matrix {
    let (a, b, c, d) = (&p[0], &p[1], &p[2], &p[3]);
    Matrix::new(
        4,
        vec![
            a.clone(), b.neg(), c.neg(), d.neg(),
            b.clone(), a.clone(), d.neg(), c.clone(),
            c.clone(), d.clone(), a.clone(), b.neg(),
            d.clone(), c.neg(), b.clone(), a.clone(),
        ],
    )
}

/// Right-multiplication matrix of a quaternion on the basis (1, i, j, k).
fn quat_right_mul(r: &[Cyclotomic; 4]) -> Matrix {
    let (a, b, c, d) = (&r[0], &r[1], &r[2], &r[3]);
    Matrix::new(
        4,
        vec![
            a.clone(), b.neg(), c.neg(), d.neg(),
            b.clone(), a.clone(), d.clone(), c.neg(),
            c.clone(), d.neg(), a.clone(), b.clone(),
            d.clone(), c.clone(), b.neg(), a.clone(),
        ],
    )
}

/// The bipolyhedral group sigma(Gt x Gt) of isometries x -> p x q^{-1} of
/// the quaternions, as 4x4 matrices. Order is |Gt|^2 / 2.
pub fn build_bipolyhedral(gt: &Arc<MatrixGroup>) -> Arc<MatrixGroup> {
    let n = gt.conductor();
    let coords: Vec<[Cyclotomic; 4]> = gt
        .elements()
        .iter()
        .map(|m| quaternion_coords(m, n))
        .collect();
    let lefts: Vec<Matrix> = coords.iter().map(quat_left_mul).collect();
    let rights_inv: Vec<Matrix> = coords
        .iter()
        .map(|q| {
            let conj = [q[0].clone(), q[1].neg(), q[2].neg(), q[3].neg()];
            quat_right_mul(&conj)
        })
        .collect();

    let mut elements: Vec<Matrix> = Vec::new();
    let mut index: HashMap<Matrix, usize> = HashMap::new();
    // (identity, identity) comes first so the identity lands at index 0
    for l in &lefts {
        for r in &rights_inv {
            let m = l.mul(r);
            if !index.contains_key(&m) {
                index.insert(m.clone(), elements.len());
                elements.push(m);
            }
        }
    }
    let gens: Vec<usize> = gt
        .generators()
        .iter()
        .flat_map(|&g| {
            let left = index[&lefts[g].mul(&rights_inv[0])];
            let right = index[&lefts[0].mul(&rights_inv[g])];
            [left, right]
        })
        .filter(|&i| i != 0)
        .collect();
    let name = format!("sigma({0}x{0})", gt.name());
    MatrixGroup::from_elements(&name, n, elements, gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::builtin::{build_binary_polyhedral, GroupKind};

    #[test]
    fn matrix_algebra_basics() {
        let id = Matrix::identity(2, 4);
        assert!(id.is_identity());
        let j = builtin::quaternion_j_matrix(4);
        assert_eq!(j.mul(&j), id.neg());
        assert!(j.det().is_one());
    }

    #[test]
    fn cyclic_closure_and_tables() {
        let g = build_binary_polyhedral(GroupKind::Cyclic, 3, None).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.exponent(), 6);
        // associativity spot-check on all triples of a small group
        for a in 0..6 {
            for b in 0..6 {
                for c in 0..6 {
                    assert_eq!(
                        g.mul_index(g.mul_index(a, b), c),
                        g.mul_index(a, g.mul_index(b, c))
                    );
                }
            }
        }
        // abelian: 6 singleton classes
        assert_eq!(g.conjugacy_classes().reps.len(), 6);
    }

    #[test]
    fn quotient_of_cyclic_four() {
        let gt = build_binary_polyhedral(GroupKind::Cyclic, 4, None).unwrap();
        assert_eq!(gt.order(), 8);
        let (g, map) = build_polyhedral_quotient(&gt).unwrap();
        assert_eq!(g.order(), 4);
        map.verify().unwrap();
        // -I maps to the identity
        let minus = gt.minus_identity_index().unwrap();
        assert_eq!(map.element_map[minus], 0);
        // the generator image is diag(xi^2, xi^-2, 1) with xi = zeta_8
        let n = gt.conductor();
        let xi2 = Cyclotomic::root_of_unity(2 * (n as i64 / 8), n);
        let gen_img = g.element(map.element_map[gt.generators()[0]]);
        assert_eq!(gen_img.at(0, 0), &xi2.pow(1));
        assert_eq!(gen_img.at(1, 1), &xi2.inv().unwrap());
        assert!(gen_img.at(2, 2).is_one());
        assert!(gen_img.det().is_one());
    }

    #[test]
    fn missing_minus_identity_is_reported() {
        // the trivial group {I} is not binary
        let id = Matrix::identity(2, 4);
        let g = MatrixGroup::closure("trivial", 4, &[id]).unwrap();
        assert!(matches!(
            build_polyhedral_quotient(&g),
            Err(Error::MissingMinusIdentity)
        ));
    }
}
