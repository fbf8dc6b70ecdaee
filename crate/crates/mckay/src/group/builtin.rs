//! Generator matrices for the binary polyhedral groups.
//!
//! Generators are unit quaternions written through the identification
//! q = a + bi + cj + dk  <->  [[a+ib, c+id], [-c+id, a-ib]],
//! which lands every group in SU(2) with entries in a small cyclotomic
//! field: conductor 4n for the cyclic and dihedral series, 8 for the
//! tetrahedral and octahedral groups and 20 for the icosahedral one.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::cyclo::{Cyclotomic, Rat};
use crate::error::Result;
use crate::group::{Matrix, MatrixGroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupKind {
    Cyclic,
    Dihedral,
    Tetrahedral,
    Octahedral,
    Icosahedral,
}

impl GroupKind {
    pub fn needs_index(self) -> bool {
        matches!(self, GroupKind::Cyclic | GroupKind::Dihedral)
    }

    /// Default conductor: smallest 4 | N field containing all generator
    /// entries (and i, which the quaternion identification needs).
    pub fn default_conductor(self, n: u32) -> u32 {
        match self {
            GroupKind::Cyclic | GroupKind::Dihedral => 4 * n,
            GroupKind::Tetrahedral | GroupKind::Octahedral => 8,
            GroupKind::Icosahedral => 20,
        }
    }

    /// Expected order of the binary group, used as a closure sanity check.
    pub fn binary_order(self, n: u32) -> usize {
        match self {
            GroupKind::Cyclic => 2 * n as usize,
            GroupKind::Dihedral => 4 * n as usize,
            GroupKind::Tetrahedral => 24,
            GroupKind::Octahedral => 48,
            GroupKind::Icosahedral => 120,
        }
    }

    /// Degree bound for minimal invariant generators of the binary group
    /// acting on the plane; the classical generator degrees are
    /// (2, 2n, 2n), (4, 2n, 2n+2), (6, 8, 12), (8, 12, 18), (12, 20, 30).
    pub fn invariant_degree_bound_2d(self, n: u32) -> u32 {
        match self {
            GroupKind::Cyclic => 2 * n,
            GroupKind::Dihedral => 2 * n + 2,
            GroupKind::Tetrahedral => 12,
            GroupKind::Octahedral => 18,
            GroupKind::Icosahedral => 30,
        }
    }

    /// Degree bound for the polyhedral quotient acting on the cone
    /// coordinates; classical degrees (1, 2, n, n), (2, 2, n, n+1),
    /// (2, 3, 4, 6), (2, 4, 6, 9), (2, 6, 10, 15).
    pub fn invariant_degree_bound_3d(self, n: u32) -> u32 {
        match self {
            GroupKind::Cyclic => n.max(2),
            GroupKind::Dihedral => n + 2,
            GroupKind::Tetrahedral => 6,
            GroupKind::Octahedral => 9,
            GroupKind::Icosahedral => 15,
        }
    }

    pub fn binary_name(self, n: u32) -> String {
        match self {
            GroupKind::Cyclic => format!("Ctilde{n}"),
            GroupKind::Dihedral => format!("Dtilde{n}"),
            GroupKind::Tetrahedral => "Ttilde".into(),
            GroupKind::Octahedral => "Otilde".into(),
            GroupKind::Icosahedral => "Itilde".into(),
        }
    }
}

fn half(n: u32) -> Rat {
    let _ = n;
    Rat::new(1.into(), 2.into())
}

/// Matrix of the quaternion a + bi + cj + dk.
pub fn quaternion_matrix(n: u32, a: Cyclotomic, b: Cyclotomic, c: Cyclotomic, d: Cyclotomic) -> Matrix {
    let i = Cyclotomic::root_of_unity(n as i64 / 4, n);
    Matrix::new(
        2,
        vec![
            a.add(&i.mul(&b)),
            c.add(&i.mul(&d)),
            c.neg().add(&i.mul(&d)),
            a.sub(&i.mul(&b)),
        ],
    )
}

/// The quaternion j as an SU(2) matrix: [[0, 1], [-1, 0]].
pub fn quaternion_j_matrix(n: u32) -> Matrix {
    let zero = Cyclotomic::zero(n);
    let one = Cyclotomic::one(n);
    Matrix::new(2, vec![zero.clone(), one.clone(), one.neg(), zero])
}

/// The quaternion i as an SU(2) matrix: diag(i, -i).
pub fn quaternion_i_matrix(n: u32) -> Matrix {
    let i = Cyclotomic::root_of_unity(n as i64 / 4, n);
    let zero = Cyclotomic::zero(n);
    Matrix::new(2, vec![i.clone(), zero.clone(), zero, i.neg()])
}

fn generators(kind: GroupKind, n: u32, conductor: u32) -> Vec<Matrix> {
    let zero = Cyclotomic::zero(conductor);
    match kind {
        GroupKind::Cyclic => {
            // diag(xi, xi^{-1}) with xi = zeta_{2n} = zeta_conductor^{conductor/2n}
            let xi = Cyclotomic::root_of_unity(conductor as i64 / (2 * n as i64), conductor);
            vec![Matrix::new(
                2,
                vec![xi.clone(), zero.clone(), zero, xi.inv().unwrap()],
            )]
        }
        GroupKind::Dihedral => {
            let mut gens = generators(GroupKind::Cyclic, n, conductor);
            gens.push(quaternion_j_matrix(conductor));
            gens
        }
        GroupKind::Tetrahedral => {
            // i, j and omega = (1 + i + j + k)/2 which cycles the three
            // quaternion units.
            let h = Cyclotomic::from_rational(conductor, half(conductor));
            let omega = quaternion_matrix(conductor, h.clone(), h.clone(), h.clone(), h);
            vec![
                quaternion_i_matrix(conductor),
                quaternion_j_matrix(conductor),
                omega,
            ]
        }
        GroupKind::Octahedral => {
            // the tetrahedral group plus the octahedral seam
            // (1 + i)/sqrt(2) = diag(zeta_8, zeta_8^{-1}).
            let z8 = Cyclotomic::root_of_unity(conductor as i64 / 8, conductor);
            let mut gens = generators(GroupKind::Tetrahedral, 0, conductor);
            gens.push(Matrix::new(
                2,
                vec![z8.clone(), zero.clone(), zero, z8.inv().unwrap()],
            ));
            gens
        }
        GroupKind::Icosahedral => {
            // i together with the vertex rotation of order 10:
            // (phi + phi^{-1} i + j)/2, phi the golden ratio in Q(zeta_5).
            let z5 = Cyclotomic::root_of_unity(conductor as i64 / 5, conductor);
            let sqrt5 = z5
                .clone()
                .sub(&z5.pow(2))
                .sub(&z5.pow(3))
                .add(&z5.pow(4));
            let one = Cyclotomic::one(conductor);
            let h = half(conductor);
            let phi_half = one.add(&sqrt5).scale(&h).scale(&h);
            let phi_inv_half = sqrt5.sub(&one).scale(&h).scale(&h);
            let q5 = quaternion_matrix(
                conductor,
                phi_half,
                phi_inv_half,
                Cyclotomic::from_rational(conductor, h),
                Cyclotomic::zero(conductor),
            );
            vec![quaternion_i_matrix(conductor), q5]
        }
    }
}

/// Build a binary polyhedral group by closing its generator set.
///
/// `n` is the index for the cyclic and dihedral series and is ignored
/// otherwise. An explicit conductor must be a multiple of the default.
pub fn build_binary_polyhedral(
    kind: GroupKind,
    n: u32,
    conductor_override: Option<u32>,
) -> Result<Arc<MatrixGroup>> {
    assert!(
        !kind.needs_index() || n >= 1,
        "cyclic/dihedral groups need n >= 1"
    );
    let default = kind.default_conductor(n);
    let conductor = match conductor_override {
        None => default,
        Some(c) => {
            assert!(
                c % default == 0,
                "conductor {c} does not contain the default field {default}"
            );
            c
        }
    };
    let gens = generators(kind, n, conductor);
    let name = kind.binary_name(n);
    MatrixGroup::closure(&name, conductor, &gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::build_polyhedral_quotient;

    #[test]
    fn binary_orders_match_the_classical_list() {
        for (kind, n, expect) in [
            (GroupKind::Cyclic, 1, 2),
            (GroupKind::Cyclic, 3, 6),
            (GroupKind::Cyclic, 4, 8),
            (GroupKind::Dihedral, 2, 8),
            (GroupKind::Dihedral, 3, 12),
            (GroupKind::Tetrahedral, 0, 24),
        ] {
            let g = build_binary_polyhedral(kind, n, None).unwrap();
            assert_eq!(g.order(), expect, "{kind:?} n={n}");
            assert_eq!(g.order(), kind.binary_order(n));
        }
    }

    #[test]
    fn octahedral_and_icosahedral_orders() {
        let o = build_binary_polyhedral(GroupKind::Octahedral, 0, None).unwrap();
        assert_eq!(o.order(), 48);
        let i = build_binary_polyhedral(GroupKind::Icosahedral, 0, None).unwrap();
        assert_eq!(i.order(), 120);
    }

    #[test]
    fn determinants_are_one() {
        let g = build_binary_polyhedral(GroupKind::Dihedral, 2, None).unwrap();
        for m in g.elements() {
            assert!(m.det().is_one());
        }
    }

    #[test]
    fn quotient_orders_are_halved() {
        for (kind, n) in [
            (GroupKind::Cyclic, 4),
            (GroupKind::Dihedral, 2),
            (GroupKind::Tetrahedral, 0),
        ] {
            let gt = build_binary_polyhedral(kind, n, None).unwrap();
            let (g, map) = build_polyhedral_quotient(&gt).unwrap();
            assert_eq!(2 * g.order(), gt.order());
            map.verify().unwrap();
            for m in g.elements() {
                assert!(m.det().is_one());
            }
        }
    }

    #[test]
    fn conjugacy_class_counts() {
        // binary tetrahedral: 7 classes; binary octahedral: 8 classes
        let t = build_binary_polyhedral(GroupKind::Tetrahedral, 0, None).unwrap();
        assert_eq!(t.conjugacy_classes().reps.len(), 7);
        let o = build_binary_polyhedral(GroupKind::Octahedral, 0, None).unwrap();
        assert_eq!(o.conjugacy_classes().reps.len(), 8);
        // class sizes sum to the group order
        let sum: usize = t.conjugacy_classes().sizes.iter().sum();
        assert_eq!(sum, 24);
    }
}
