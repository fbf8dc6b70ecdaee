//! Group actions on polynomials, Reynolds averaging, minimal invariant
//! generators, and the G-cluster test.

use std::sync::Arc;

use crate::cyclo::{Cyclotomic, Rat};
use crate::error::{Error, Result};
use crate::group::MatrixGroup;
use crate::linalg::{in_span, span_basis};
use crate::poly::groebner::Ideal;
use crate::poly::{Monomial, Poly, PolyRing};
use crate::rep::{regular_character, ClassFunction};

/// Left action g.f = f o g^{-1}: substitute the rows of the inverse
/// matrix for the variables.
pub fn act(group: &MatrixGroup, elem: usize, f: &Poly) -> Poly {
    let ring = f.ring();
    assert_eq!(group.dim(), ring.nvars(), "matrix size vs variable count");
    let minv = group.element(group.inv_index(elem));
    let images: Vec<Poly> = (0..ring.nvars())
        .map(|i| {
            let mut terms = Vec::new();
            for j in 0..ring.nvars() {
                let c = minv.at(i, j);
                if !c.is_zero() {
                    let mut m = vec![0u32; ring.nvars()];
                    m[j] = 1;
                    terms.push((m, c.clone()));
                }
            }
            Poly::from_terms(ring, terms)
        })
        .collect();
    f.substitute(&images, ring)
}

/// Reynolds operator: average of the orbit of f under the group.
pub fn reynolds(group: &MatrixGroup, f: &Poly) -> Poly {
    let mut acc = Poly::zero(f.ring());
    for g in 0..group.order() {
        acc = acc.add(&act(group, g, f));
    }
    acc.scale_rat(&Rat::new(1.into(), (group.order() as i64).into()))
}

fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; nvars];
    fn rec(out: &mut Vec<Monomial>, cur: &mut Vec<u32>, pos: usize, left: u32) {
        if pos + 1 == cur.len() {
            cur[pos] = left;
            out.push(cur.clone());
            return;
        }
        for e in (0..=left).rev() {
            cur[pos] = e;
            rec(out, cur, pos + 1, left - e);
        }
    }
    rec(&mut out, &mut cur, 0, d);
    out
}

fn coeff_vector(f: &Poly, basis: &[Monomial]) -> Vec<Cyclotomic> {
    let mut v = vec![Cyclotomic::zero(1); basis.len()];
    for (m, c) in f.terms() {
        let idx = basis
            .iter()
            .position(|b| b == m)
            .expect("monomial outside slice basis");
        v[idx] = c.clone();
    }
    v
}

fn poly_from_coeffs(ring: &Arc<PolyRing>, basis: &[Monomial], v: &[Cyclotomic]) -> Poly {
    let terms = basis
        .iter()
        .zip(v)
        .filter(|(_, c)| !c.is_zero())
        .map(|(m, c)| (m.clone(), c.clone()))
        .collect();
    Poly::from_terms(ring, terms)
}

/// Minimal homogeneous generators of the invariant ring up to the degree
/// bound, computed degree by degree: Reynolds-average the monomials, then
/// discard invariants already inside the subalgebra generated so far.
///
/// Returns the generators and a completeness warning flag: `true` when
/// the bound lies below the Noether bound |G| and the generator count
/// differs from nvars + 1 (the expected count for these group actions).
pub fn invariant_generators(
    group: &MatrixGroup,
    ring: &Arc<PolyRing>,
    degree_bound: u32,
) -> (Vec<Poly>, bool) {
    assert!(degree_bound >= 1);
    let mut gens: Vec<Poly> = Vec::new();
    for d in 1..=degree_bound {
        let slice = monomials_of_degree(ring.nvars(), d);
        // invariant subspace of the degree-d slice
        let mut inv_vectors: Vec<Vec<Cyclotomic>> = Vec::new();
        for m in &slice {
            let avg = reynolds(
                group,
                &Poly::monomial(ring, m.clone(), Cyclotomic::one(group.conductor())),
            );
            if !avg.is_zero() {
                inv_vectors.push(coeff_vector(&avg, &slice));
            }
        }
        if inv_vectors.is_empty() {
            continue;
        }
        let inv_basis = span_basis(&inv_vectors);
        // subalgebra span in degree d: all products of chosen generators
        // with total degree d
        let mut products: Vec<Vec<Cyclotomic>> = Vec::new();
        collect_products(&gens, d, ring, &mut products, &slice);
        let mut alg_span = span_basis(&products);
        for v in inv_basis {
            if !in_span(&alg_span, &v) {
                let g = poly_from_coeffs(ring, &slice, &v).monic();
                gens.push(g);
                alg_span.push(v);
                alg_span = span_basis(&alg_span);
            }
        }
    }
    let warn = degree_bound < group.order() as u32 && gens.len() != ring.nvars() + 1;
    (gens, warn)
}

/// All products of the generators with total degree exactly `d`, as
/// coefficient vectors over the degree-d monomial slice.
fn collect_products(
    gens: &[Poly],
    d: u32,
    ring: &Arc<PolyRing>,
    out: &mut Vec<Vec<Cyclotomic>>,
    slice: &[Monomial],
) {
    fn rec(
        gens: &[Poly],
        from: usize,
        left: u32,
        acc: &Poly,
        out: &mut Vec<Poly>,
    ) {
        for i in from..gens.len() {
            let deg = gens[i].total_degree().unwrap_or(0);
            if deg == 0 || deg > left {
                continue;
            }
            let next = acc.mul(&gens[i]);
            if deg == left {
                out.push(next);
            } else {
                rec(gens, i, left - deg, &next, out);
            }
        }
    }
    let mut polys = Vec::new();
    let one_conductor = gens
        .first()
        .and_then(|g| g.terms().first())
        .map(|(_, c)| c.conductor())
        .unwrap_or(1);
    rec(gens, 0, d, &Poly::one(ring, one_conductor), &mut polys);
    out.extend(polys.iter().map(|p| coeff_vector(p, slice)));
}

/// Verify the ideal is globally stable under the group: every basis
/// element, acted on by every generator, must reduce to zero.
pub fn check_invariant(group: &MatrixGroup, ideal: &Ideal) -> Result<()> {
    for &g in group.generators() {
        for f in ideal.basis() {
            if !ideal.contains(&act(group, g, f)) {
                return Err(Error::NotInvariant {
                    generator: f.to_string(),
                    element: g,
                });
            }
        }
    }
    Ok(())
}

/// Character of the group action on S/I for a stable ideal with finite
/// quotient: the trace of each class representative acting on the
/// standard monomial basis through normal forms.
pub fn quotient_character(group: &Arc<MatrixGroup>, ideal: &Ideal) -> Result<ClassFunction> {
    check_invariant(group, ideal)?;
    let qbasis = ideal.quotient_basis()?;
    let cls = group.conjugacy_classes();
    let ring = ideal.ring();
    let mut values = Vec::with_capacity(cls.reps.len());
    for &rep in &cls.reps {
        let mut trace = Cyclotomic::zero(1);
        for m in &qbasis {
            let moved = act(
                group,
                rep,
                &Poly::monomial(ring, m.clone(), Cyclotomic::one(group.conductor())),
            );
            let nf = ideal.normal_form(&moved);
            for (mm, c) in nf.terms() {
                if mm == m {
                    trace = trace.add(c);
                }
            }
        }
        values.push(trace);
    }
    Ok(ClassFunction { values })
}

/// Outcome of the cluster test, with the two facts the decision rests on.
#[derive(Debug)]
pub struct ClusterReport {
    pub dimension: usize,
    pub dimension_matches: bool,
    pub character_is_regular: bool,
}

impl ClusterReport {
    pub fn is_cluster(&self) -> bool {
        self.dimension_matches && self.character_is_regular
    }
}

/// Is S/I the regular representation? True exactly when the quotient
/// dimension equals |G| and the quotient character is the regular one.
pub fn is_cluster(group: &Arc<MatrixGroup>, ideal: &Ideal) -> Result<ClusterReport> {
    let dim = ideal.quotient_dimension()?;
    let dimension_matches = dim == group.order();
    if !dimension_matches {
        return Ok(ClusterReport {
            dimension: dim,
            dimension_matches,
            character_is_regular: false,
        });
    }
    let chi = quotient_character(group, ideal)?;
    let reg = regular_character(group);
    let character_is_regular = chi
        .values
        .iter()
        .zip(&reg.values)
        .all(|(a, b)| a == b);
    Ok(ClusterReport {
        dimension: dim,
        dimension_matches,
        character_is_regular,
    })
}

/// Vanishing ideal of the orbit of a point, by evaluation kernels degree
/// by degree until the quotient dimension drops to the orbit size.
pub fn orbit_ideal(group: &Arc<MatrixGroup>, point: &[Cyclotomic]) -> Result<Ideal> {
    let ring: Arc<PolyRing> = match point.len() {
        2 => PolyRing::xy(),
        3 => PolyRing::abc(),
        n => {
            return Err(Error::DimensionMismatch { left: n, right: 2 });
        }
    };
    // orbit points (deduplicated: the orbit may be non-free)
    let mut pts: Vec<Vec<Cyclotomic>> = Vec::new();
    for g in 0..group.order() {
        // points transform by the matrix itself
        let m = group.element(g);
        let img: Vec<Cyclotomic> = (0..point.len())
            .map(|i| {
                let mut acc = Cyclotomic::zero(group.conductor());
                for j in 0..point.len() {
                    acc = acc.add(&m.at(i, j).mul(&point[j]));
                }
                acc
            })
            .collect();
        if !pts.contains(&img) {
            pts.push(img);
        }
    }
    let orbit_len = pts.len();
    for d in 1..=(group.order() as u32 + 1) {
        // kernel of the evaluation map on all monomials of degree <= d
        let mut monos: Vec<Monomial> = Vec::new();
        for dd in 0..=d {
            monos.extend(monomials_of_degree(ring.nvars(), dd));
        }
        let rows: Vec<Vec<Cyclotomic>> = pts
            .iter()
            .map(|p| {
                monos
                    .iter()
                    .map(|m| {
                        let mut acc = Cyclotomic::one(group.conductor());
                        for (i, &e) in m.iter().enumerate() {
                            if e > 0 {
                                acc = acc.mul(&p[i].pow(e as u64));
                            }
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        // kernel via rref of the transposed system
        let kernel = evaluation_kernel(&rows, monos.len());
        let gens: Vec<Poly> = kernel
            .iter()
            .map(|v| poly_from_coeffs(&ring, &monos, v))
            .collect();
        if !gens.is_empty() {
            let ideal = Ideal::groebner(&ring, &gens);
            if let Ok(dim) = ideal.quotient_dimension() {
                if dim == orbit_len {
                    return Ok(ideal);
                }
            }
        }
    }
    Err(Error::Invalid(
        "orbit ideal did not stabilize below the degree cap".into(),
    ))
}

/// Basis of {v : rows * v = 0} over the cyclotomic field.
fn evaluation_kernel(rows: &[Vec<Cyclotomic>], ncols: usize) -> Vec<Vec<Cyclotomic>> {
    use crate::linalg::CMatrix;
    let mut m = CMatrix::from_rows(rows.to_vec());
    let pivots = m.rref();
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    let mut out = Vec::new();
    for &fc in &free {
        let mut v = vec![Cyclotomic::zero(1); ncols];
        v[fc] = Cyclotomic::one(1);
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = m.at(row, fc).neg();
        }
        out.push(v);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::builtin::{build_binary_polyhedral, GroupKind};
    use crate::group::build_polyhedral_quotient;

    #[test]
    fn action_is_an_algebra_homomorphism() {
        let g = build_binary_polyhedral(GroupKind::Dihedral, 2, None).unwrap();
        let ring = PolyRing::xy();
        let n = g.conductor();
        let x = Poly::var(&ring, 0, n);
        let y = Poly::var(&ring, 1, n);
        let f1 = x.mul(&x).add(&y.scale(&Cyclotomic::from_integer(n, 3)));
        let f2 = x.mul(&y).sub(&Poly::one(&ring, n));
        for e in [0usize, 1, 3, 5] {
            let lhs = act(&g, e, &f1.mul(&f2));
            let rhs = act(&g, e, &f1).mul(&act(&g, e, &f2));
            assert_eq!(lhs, rhs);
        }
        // identity acts trivially
        assert_eq!(act(&g, 0, &f1), f1);
    }

    #[test]
    fn cyclic_generator_acts_diagonally() {
        let g = build_binary_polyhedral(GroupKind::Cyclic, 4, None).unwrap();
        let ring = PolyRing::xy();
        let n = g.conductor();
        let x = Poly::var(&ring, 0, n);
        // generator is diag(xi, xi^{-1}); g.x = xi^{-1} x
        let gen = g.generators()[0];
        let moved = act(&g, gen, &x);
        let xi_inv = Cyclotomic::root_of_unity(-(n as i64) / 8, n);
        assert_eq!(moved, x.scale(&xi_inv));
    }

    #[test]
    fn cone_polynomial_is_fixed_by_quotient_action() {
        for (kind, n) in [(GroupKind::Cyclic, 3), (GroupKind::Tetrahedral, 0)] {
            let gt = build_binary_polyhedral(kind, n, None).unwrap();
            let (gq, _) = build_polyhedral_quotient(&gt).unwrap();
            let ring = PolyRing::abc();
            let k = gq.conductor();
            let a = Poly::var(&ring, 0, k);
            let b = Poly::var(&ring, 1, k);
            let c = Poly::var(&ring, 2, k);
            let cone = a.mul(&b).sub(&c.mul(&c));
            for g in 0..gq.order() {
                assert_eq!(act(&gq, g, &cone), cone, "cone moved by element {g}");
            }
        }
    }

    #[test]
    fn invariants_of_binary_cyclic() {
        let g = build_binary_polyhedral(GroupKind::Cyclic, 3, None).unwrap();
        let ring = PolyRing::xy();
        let (gens, warn) = invariant_generators(&g, &ring, 6);
        assert!(!warn);
        // {xy, x^6, y^6}
        let n = g.conductor();
        let expect = [
            Poly::monomial(&ring, vec![1, 1], Cyclotomic::one(n)),
            Poly::monomial(&ring, vec![6, 0], Cyclotomic::one(n)),
            Poly::monomial(&ring, vec![0, 6], Cyclotomic::one(n)),
        ];
        assert_eq!(gens.len(), 3);
        for e in &expect {
            assert!(gens.contains(e), "missing invariant {e}");
        }
    }

    #[test]
    fn invariants_of_cyclic_quotient_on_the_cone() {
        let gt = build_binary_polyhedral(GroupKind::Cyclic, 3, None).unwrap();
        let (gq, _) = build_polyhedral_quotient(&gt).unwrap();
        let ring = PolyRing::abc();
        let (gens, warn) = invariant_generators(&gq, &ring, 3);
        assert!(!warn);
        // {c, ab, a^3, b^3}
        let n = gq.conductor();
        let expect = [
            Poly::monomial(&ring, vec![0, 0, 1], Cyclotomic::one(n)),
            Poly::monomial(&ring, vec![1, 1, 0], Cyclotomic::one(n)),
            Poly::monomial(&ring, vec![3, 0, 0], Cyclotomic::one(n)),
            Poly::monomial(&ring, vec![0, 3, 0], Cyclotomic::one(n)),
        ];
        assert_eq!(gens.len(), 4);
        for e in &expect {
            assert!(gens.contains(e), "missing invariant {e}");
        }
    }

    #[test]
    fn trivial_group_invariants_are_the_variables() {
        let id = crate::group::Matrix::identity(2, 4);
        let g = crate::group::MatrixGroup::closure("trivial", 4, &[id]).unwrap();
        let ring = PolyRing::xy();
        let (gens, _) = invariant_generators(&g, &ring, 2);
        assert_eq!(gens.len(), 2);
        assert_eq!(gens[0], Poly::var(&ring, 0, 4));
        assert_eq!(gens[1], Poly::var(&ring, 1, 4));
    }

    #[test]
    fn free_orbit_is_a_cluster() {
        let g = build_binary_polyhedral(GroupKind::Cyclic, 2, None).unwrap();
        let pt = vec![
            Cyclotomic::from_integer(g.conductor(), 1),
            Cyclotomic::from_integer(g.conductor(), 1),
        ];
        let ideal = orbit_ideal(&g, &pt).unwrap();
        let report = is_cluster(&g, &ideal).unwrap();
        assert!(report.is_cluster(), "{report:?}");
        assert_eq!(report.dimension, 4);
    }

    #[test]
    fn point_ideal_is_not_a_cluster_of_a_larger_group() {
        // the origin-supported maximal ideal has dimension 1 != |G|
        let g = build_binary_polyhedral(GroupKind::Cyclic, 2, None).unwrap();
        let ring = PolyRing::xy();
        let m = Ideal::groebner(
            &ring,
            &[Poly::var(&ring, 0, 8), Poly::var(&ring, 1, 8)],
        );
        let report = is_cluster(&g, &m).unwrap();
        assert!(!report.is_cluster());
        assert_eq!(report.dimension, 1);
    }

    #[test]
    fn non_invariant_ideal_is_reported() {
        let g = build_binary_polyhedral(GroupKind::Cyclic, 2, None).unwrap();
        let ring = PolyRing::xy();
        // <x> is not stable under diag(xi, xi^-1)... it is; use <x - 1>
        let ideal = Ideal::groebner(
            &ring,
            &[Poly::var(&ring, 0, 8).sub(&Poly::one(&ring, 8))],
        );
        assert!(matches!(
            quotient_character(&g, &ideal),
            Err(Error::NotInvariant { .. })
        ));
    }
}
