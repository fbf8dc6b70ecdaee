//! The double-cover substitution sigma: C[a,b,c] -> C[x,y] given by
//! a = x^2, b = y^2, c = xy, and its ideal preimage via elimination.

use std::sync::Arc;

use crate::cyclo::Cyclotomic;
use crate::poly::groebner::Ideal;
use crate::poly::{Poly, PolyRing};

/// Apply sigma to a polynomial in a, b, c, producing one in x, y.
pub fn sigma_apply(f: &Poly, xy: &Arc<PolyRing>) -> Poly {
    assert_eq!(f.ring().nvars(), 3);
    let n = f
        .terms()
        .first()
        .map(|(_, c)| c.conductor())
        .unwrap_or(4);
    let x = Poly::var(xy, 0, n);
    let y = Poly::var(xy, 1, n);
    let images = vec![x.mul(&x), y.mul(&y), x.mul(&y)];
    f.substitute(&images, xy)
}

/// Image of a plane point under the quotient map to the cone:
/// (x, y) -> (x^2, y^2, xy).
pub fn sigma_point(p: &[Cyclotomic]) -> Vec<Cyclotomic> {
    assert_eq!(p.len(), 2);
    vec![p[0].mul(&p[0]), p[1].mul(&p[1]), p[0].mul(&p[1])]
}

/// Preimage sigma^{-1}(I) of an ideal of C[x,y] as an ideal of C[a,b,c].
///
/// Computed by elimination: form I + <a - x^2, b - y^2, c - xy> in the
/// joined ring with the {x, y} block dominant, take the Groebner basis, and
/// keep the elements free of x and y.
pub fn preimage_sigma(ideal_2d: &Ideal, abc: &Arc<PolyRing>) -> Ideal {
    let elim = PolyRing::elim_xy_abc();
    let conductor = ideal_2d
        .basis()
        .first()
        .and_then(|g| g.terms().first())
        .map(|(_, c)| c.conductor())
        .unwrap_or(4);

    let mut gens: Vec<Poly> = ideal_2d
        .basis()
        .iter()
        .map(|g| g.remap(&elim, &[0, 1]))
        .collect();
    let x = Poly::var(&elim, 0, conductor);
    let y = Poly::var(&elim, 1, conductor);
    let a = Poly::var(&elim, 2, conductor);
    let b = Poly::var(&elim, 3, conductor);
    let c = Poly::var(&elim, 4, conductor);
    gens.push(a.sub(&x.mul(&x)));
    gens.push(b.sub(&y.mul(&y)));
    gens.push(c.sub(&x.mul(&y)));

    let gb = Ideal::groebner(&elim, &gens);
    let projected: Vec<Poly> = gb
        .basis()
        .iter()
        .filter(|g| g.terms().iter().all(|(m, _)| m[0] == 0 && m[1] == 0))
        .map(|g| {
            let terms = g
                .terms()
                .iter()
                .map(|(m, cf)| (vec![m[2], m[3], m[4]], cf.clone()))
                .collect();
            Poly::from_terms(abc, terms)
        })
        .collect();
    Ideal::groebner(abc, &projected)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::Cyclotomic;

    fn c(v: i64) -> Cyclotomic {
        Cyclotomic::from_integer(4, v)
    }

    #[test]
    fn preimage_of_maximal_ideal_is_maximal() {
        let xy = PolyRing::xy();
        let abc = PolyRing::abc();
        let m_a = Ideal::groebner(&xy, &[Poly::var(&xy, 0, 4), Poly::var(&xy, 1, 4)]);
        let m_b = preimage_sigma(&m_a, &abc);
        let expect = Ideal::groebner(
            &abc,
            &[
                Poly::var(&abc, 0, 4),
                Poly::var(&abc, 1, 4),
                Poly::var(&abc, 2, 4),
            ],
        );
        assert_eq!(m_b, expect);
    }

    #[test]
    fn cone_relation_always_in_preimage_of_zero() {
        // sigma^{-1}(0) contains ab - c^2
        let xy = PolyRing::xy();
        let abc = PolyRing::abc();
        let zero = Ideal::groebner(&xy, &[]);
        let j = preimage_sigma(&zero, &abc);
        let a = Poly::var(&abc, 0, 4);
        let b = Poly::var(&abc, 1, 4);
        let cc = Poly::var(&abc, 2, 4);
        let cone = a.mul(&b).sub(&cc.mul(&cc));
        assert!(j.contains(&cone));
        assert_eq!(j.basis().len(), 1);
    }

    #[test]
    fn sigma_apply_matches_point_map() {
        let xy = PolyRing::xy();
        let abc = PolyRing::abc();
        let f = Poly::var(&abc, 0, 4)
            .mul(&Poly::var(&abc, 1, 4))
            .sub(&Poly::var(&abc, 2, 4).scale(&c(3)));
        let g = sigma_apply(&f, &xy);
        let p = vec![c(2), c(5)];
        assert_eq!(g.eval(&p), f.eval(&sigma_point(&p)));
    }
}
