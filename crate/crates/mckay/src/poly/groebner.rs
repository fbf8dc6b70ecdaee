//! Buchberger's algorithm and reduced Groebner bases.
//!
//! Ideals are held as the unique monic auto-reduced basis for the ring's
//! monomial order, so ideal equality is plain structural equality of the
//! sorted basis vectors.

use std::sync::Arc;

use crate::cyclo::Cyclotomic;
use crate::error::{Error, Result};
use crate::poly::{
    monomial_degree, monomial_div, monomial_divides, monomial_lcm, Monomial, Poly, PolyRing,
};

/// An ideal in canonical form: a reduced Groebner basis, monic and sorted
/// ascending by leading monomial.
#[derive(Clone, PartialEq, Eq)]
pub struct Ideal {
    ring: Arc<PolyRing>,
    basis: Vec<Poly>,
}

impl Ideal {
    /// Run Buchberger's algorithm on the generators and reduce the result.
    pub fn groebner(ring: &Arc<PolyRing>, generators: &[Poly]) -> Ideal {
        let mut basis: Vec<Poly> = generators
            .iter()
            .filter(|g| !g.is_zero())
            .map(|g| g.monic())
            .collect();
        if basis.is_empty() {
            return Ideal {
                ring: Arc::clone(ring),
                basis: vec![],
            };
        }

        let order = ring.order();
        // Pair queue keyed by (lcm degree, lcm, i, j) for a deterministic
        // normal selection strategy.
        let mut pairs: Vec<(usize, usize, Monomial)> = Vec::new();
        let mut done: Vec<(usize, usize)> = Vec::new();
        for i in 0..basis.len() {
            for j in 0..i {
                pairs.push((j, i, pair_lcm(&basis[j], &basis[i])));
            }
        }

        while !pairs.is_empty() {
            // pick the pair with the smallest lcm in the ring order
            let mut best = 0;
            for k in 1..pairs.len() {
                let c = order.compare(&pairs[k].2, &pairs[best].2);
                if c == std::cmp::Ordering::Less
                    || (c == std::cmp::Ordering::Equal
                        && (pairs[k].0, pairs[k].1) < (pairs[best].0, pairs[best].1))
                {
                    best = k;
                }
            }
            let (i, j, lcm) = pairs.swap_remove(best);
            done.push((i, j));

            let (lm_i, _) = basis[i].leading().unwrap();
            let (lm_j, _) = basis[j].leading().unwrap();
            // Product criterion: coprime leading monomials reduce to zero.
            if monomial_mul_eq(lm_i, lm_j, &lcm) {
                continue;
            }
            // Chain criterion: some k with lm_k | lcm and both sub-pairs
            // already handled.
            let mut skip = false;
            for (k, g) in basis.iter().enumerate() {
                if k == i || k == j {
                    continue;
                }
                let (lm_k, _) = g.leading().unwrap();
                if monomial_divides(lm_k, &lcm)
                    && done.contains(&key(i, k))
                    && done.contains(&key(j, k))
                {
                    skip = true;
                    break;
                }
            }
            if skip {
                continue;
            }

            let s = s_polynomial(&basis[i], &basis[j], &lcm);
            let h = normal_form_full(&s, &basis);
            if h.is_zero() {
                continue;
            }
            let h = h.monic();
            let new_idx = basis.len();
            for k in 0..new_idx {
                pairs.push((k, new_idx, pair_lcm(&basis[k], &h)));
            }
            basis.push(h);
        }

        Ideal::reduce_basis(ring, basis)
    }

    /// Inter-reduce a Groebner basis into the canonical reduced form.
    fn reduce_basis(ring: &Arc<PolyRing>, mut basis: Vec<Poly>) -> Ideal {
        // Minimalize: drop elements whose leading monomial is divisible by
        // another's.
        let mut keep: Vec<Poly> = Vec::new();
        basis.sort_by(|a, b| {
            ring.order()
                .compare(a.leading().unwrap().0, b.leading().unwrap().0)
        });
        for (idx, g) in basis.iter().enumerate() {
            let lm = g.leading().unwrap().0;
            let dominated = basis.iter().enumerate().any(|(k, h)| {
                k != idx && {
                    let lm_h = h.leading().unwrap().0;
                    monomial_divides(lm_h, lm) && (lm_h != lm || k < idx)
                }
            });
            if !dominated {
                keep.push(g.clone());
            }
        }
        // Auto-reduce tails against the whole set.
        let mut reduced: Vec<Poly> = Vec::with_capacity(keep.len());
        for i in 0..keep.len() {
            let others: Vec<Poly> = keep
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != i)
                .map(|(_, p)| p.clone())
                .collect();
            let r = normal_form_full(&keep[i], &others).monic();
            if !r.is_zero() {
                reduced.push(r);
            }
        }
        reduced.sort_by(|a, b| {
            ring.order()
                .compare(a.leading().unwrap().0, b.leading().unwrap().0)
        });
        Ideal {
            ring: Arc::clone(ring),
            basis: reduced,
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn basis(&self) -> &[Poly] {
        &self.basis
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.basis.len() == 1 && monomial_degree(self.basis[0].leading().unwrap().0) == 0
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.basis.is_empty()
    }

    /// Full normal form of a polynomial against this basis.
    pub fn normal_form(&self, f: &Poly) -> Poly {
        normal_form_full(f, &self.basis)
    }

    pub fn contains(&self, f: &Poly) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Do all generators of `other` reduce to zero here?
    pub fn contains_ideal(&self, other: &Ideal) -> bool {
        other.basis.iter().all(|g| self.contains(g))
    }

    /// Groebner basis of this ideal plus extra generators.
    pub fn sum_with(&self, extra: &[Poly]) -> Ideal {
        let mut gens = self.basis.clone();
        gens.extend(extra.iter().cloned());
        Ideal::groebner(&self.ring, &gens)
    }

    /// The staircase basis of the quotient ring: all monomials not
    /// divisible by a leading term. Errors when the quotient is
    /// infinite-dimensional.
    pub fn quotient_basis(&self) -> Result<Vec<Monomial>> {
        if self.is_unit_ideal() {
            return Ok(vec![]);
        }
        let n = self.ring.nvars();
        let leads: Vec<&Monomial> = self.basis.iter().map(|g| g.leading().unwrap().0).collect();
        // Finite iff every variable has a pure power among the leads.
        for v in 0..n {
            let has_pure = leads
                .iter()
                .any(|m| m.iter().enumerate().all(|(i, &e)| i == v || e == 0));
            if !has_pure {
                return Err(Error::InfiniteQuotient {
                    variable: self.ring.vars()[v].clone(),
                });
            }
        }
        let mut out: Vec<Monomial> = Vec::new();
        let mut stack = vec![vec![0u32; n]];
        let mut seen = std::collections::BTreeSet::new();
        seen.insert(vec![0u32; n]);
        while let Some(m) = stack.pop() {
            if leads.iter().any(|l| monomial_divides(l, &m)) {
                continue;
            }
            out.push(m.clone());
            for v in 0..n {
                let mut next = m.clone();
                next[v] += 1;
                if seen.insert(next.clone()) {
                    stack.push(next);
                }
            }
        }
        let order = self.ring.order();
        out.sort_by(|a, b| {
            monomial_degree(a)
                .cmp(&monomial_degree(b))
                .then_with(|| order.compare(a, b))
        });
        Ok(out)
    }

    /// Quotient dimension, if finite.
    pub fn quotient_dimension(&self) -> Result<usize> {
        Ok(self.quotient_basis()?.len())
    }
}

fn key(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

fn pair_lcm(f: &Poly, g: &Poly) -> Monomial {
    monomial_lcm(f.leading().unwrap().0, g.leading().unwrap().0)
}

fn monomial_mul_eq(a: &[u32], b: &[u32], lcm: &[u32]) -> bool {
    a.iter()
        .zip(b)
        .zip(lcm)
        .all(|((x, y), l)| x + y == *l)
}

/// S-polynomial u_f*f/lc(f) - u_g*g/lc(g) with the given leading lcm.
fn s_polynomial(f: &Poly, g: &Poly, lcm: &Monomial) -> Poly {
    let (lm_f, lc_f) = f.leading().unwrap();
    let (lm_g, lc_g) = g.leading().unwrap();
    let uf = monomial_div(lcm, lm_f);
    let ug = monomial_div(lcm, lm_g);
    let a = f.mul_term(&uf, &lc_f.inv().expect("nonzero lc"));
    let b = g.mul_term(&ug, &lc_g.inv().expect("nonzero lc"));
    a.sub(&b)
}

/// Fully reduce `f` against `basis`: every term of the result is divisible
/// by no leading monomial of the basis.
pub fn normal_form_full(f: &Poly, basis: &[Poly]) -> Poly {
    if basis.is_empty() {
        return f.clone();
    }
    let ring = Arc::clone(f.ring());
    let mut rest = f.clone();
    let mut out_terms: Vec<(Monomial, Cyclotomic)> = Vec::new();
    'outer: while let Some((lm, lc)) = rest.leading().map(|(m, c)| (m.clone(), c.clone())) {
        for g in basis {
            let (lm_g, lc_g) = g.leading().unwrap();
            if monomial_divides(lm_g, &lm) {
                let u = monomial_div(&lm, lm_g);
                let factor = lc.div(lc_g).expect("nonzero leading coefficient");
                rest = rest.sub(&g.mul_term(&u, &factor));
                continue 'outer;
            }
        }
        // leading term is irreducible; move it to the output
        out_terms.push((lm.clone(), lc.clone()));
        rest = rest.sub(&Poly::monomial(&ring, lm, lc));
    }
    Poly::from_terms(&ring, out_terms)
}

impl std::fmt::Debug for Ideal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.basis.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::Cyclotomic;
    use crate::poly::MonomialOrder;

    fn c(v: i64) -> Cyclotomic {
        Cyclotomic::from_integer(4, v)
    }

    #[test]
    fn already_reduced_monomial_ideal() {
        let r = PolyRing::xy();
        let x2 = Poly::monomial(&r, vec![2, 0], c(1));
        let xy = Poly::monomial(&r, vec![1, 1], c(1));
        let i = Ideal::groebner(&r, &[x2.clone(), xy.clone()]);
        assert_eq!(i.basis(), &[xy, x2]);
    }

    #[test]
    fn unit_ideal() {
        let r = PolyRing::xy();
        let i = Ideal::groebner(&r, &[Poly::constant(&r, c(5))]);
        assert!(i.is_unit_ideal());
        assert_eq!(i.basis().len(), 1);
        assert!(i.basis()[0].leading().unwrap().1.is_one());
    }

    #[test]
    fn cluster_shape_ideal_has_dimension_four() {
        // <x - y^3, xy, x^2, y^4> for the binary cyclic group of order 4
        let r = PolyRing::xy();
        let gens = vec![
            Poly::from_terms(&r, vec![(vec![1, 0], c(1)), (vec![0, 3], c(-1))]),
            Poly::monomial(&r, vec![1, 1], c(1)),
            Poly::monomial(&r, vec![2, 0], c(1)),
            Poly::monomial(&r, vec![0, 4], c(1)),
        ];
        let i = Ideal::groebner(&r, &gens);
        assert_eq!(i.quotient_dimension().unwrap(), 4);
        // under degrevlex the pencil generator points y^3 at x
        let x = Poly::var(&r, 0, 4);
        let y3 = Poly::monomial(&r, vec![0, 3], c(1));
        assert_eq!(i.normal_form(&y3), x);
        assert_eq!(i.normal_form(&x), x);
    }

    #[test]
    fn quotient_basis_of_maximal_ideal() {
        let r = PolyRing::xy();
        let i = Ideal::groebner(&r, &[Poly::var(&r, 0, 4), Poly::var(&r, 1, 4)]);
        assert_eq!(i.quotient_basis().unwrap(), vec![vec![0, 0]]);
    }

    #[test]
    fn infinite_quotient_detected() {
        let r = PolyRing::xy();
        let i = Ideal::groebner(&r, &[Poly::var(&r, 0, 4)]);
        match i.quotient_basis() {
            Err(Error::InfiniteQuotient { variable }) => assert_eq!(variable, "y"),
            other => panic!("expected infinite quotient, got {other:?}"),
        }
    }

    #[test]
    fn katsura_like_reduction_is_confluent() {
        // reduced GB does not depend on generator order or scaling
        let r = PolyRing::new(&["x", "y", "z"], MonomialOrder::DegRevLex);
        let x = Poly::var(&r, 0, 4);
        let y = Poly::var(&r, 1, 4);
        let z = Poly::var(&r, 2, 4);
        let g1 = x.mul(&x).add(&y.mul(&z)).sub(&Poly::one(&r, 4));
        let g2 = y.mul(&y).sub(&x.mul(&z));
        let g3 = z.mul(&z).add(&x.mul(&y)).sub(&y.scale(&c(2)));
        let a = Ideal::groebner(&r, &[g1.clone(), g2.clone(), g3.clone()]);
        let b = Ideal::groebner(
            &r,
            &[g3.scale(&c(7)), g1.scale(&c(-2)), g2.clone()],
        );
        assert_eq!(a, b);
        // Every S-polynomial of the reduced basis reduces to zero.
        for i in 0..a.basis().len() {
            for j in 0..i {
                let lcm = pair_lcm(&a.basis()[j], &a.basis()[i]);
                let s = s_polynomial(&a.basis()[j], &a.basis()[i], &lcm);
                assert!(a.normal_form(&s).is_zero());
            }
        }
    }
}
