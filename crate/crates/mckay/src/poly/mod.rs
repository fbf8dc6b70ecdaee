//! Multivariate polynomials over cyclotomic fields.
//!
//! A polynomial carries a shared ring descriptor (ordered variable names
//! plus a monomial order). Terms are kept sorted descending in the ring
//! order with no zero coefficients, so the representation is canonical.

pub mod action;
pub mod coinv;
pub mod groebner;
pub mod sigma;

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_traits::One;

use crate::cyclo::{Cyclotomic, Rat};

pub type Monomial = Vec<u32>;

/// Monomial orders used by the toolkit. `Elim { block }` is the block
/// elimination order in which the first `block` variables dominate;
/// degrevlex breaks ties inside each block.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MonomialOrder {
    DegRevLex,
    Elim { block: usize },
}

fn degrevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    // Equal degree: the monomial with the smaller exponent at the last
    // position where they differ is the larger one.
    for i in (0..a.len()).rev() {
        if a[i] != b[i] {
            return b[i].cmp(&a[i]);
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn compare(&self, a: &[u32], b: &[u32]) -> Ordering {
        match *self {
            MonomialOrder::DegRevLex => degrevlex(a, b),
            MonomialOrder::Elim { block } => match degrevlex(&a[..block], &b[..block]) {
                Ordering::Equal => degrevlex(&a[block..], &b[block..]),
                o => o,
            },
        }
    }

    pub fn name(&self) -> String {
        match *self {
            MonomialOrder::DegRevLex => "degrevlex".into(),
            MonomialOrder::Elim { block } => format!("elim{block}+degrevlex"),
        }
    }
}

#[derive(Debug, PartialEq, Eq)]
pub struct PolyRing {
    vars: Vec<String>,
    order: MonomialOrder,
}

impl PolyRing {
    pub fn new(vars: &[&str], order: MonomialOrder) -> Arc<PolyRing> {
        Arc::new(PolyRing {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            order,
        })
    }

    /// The plane ring C[x, y] under degrevlex with x > y.
    pub fn xy() -> Arc<PolyRing> {
        PolyRing::new(&["x", "y"], MonomialOrder::DegRevLex)
    }

    /// The cone ambient ring C[a, b, c] under degrevlex with a > b > c.
    pub fn abc() -> Arc<PolyRing> {
        PolyRing::new(&["a", "b", "c"], MonomialOrder::DegRevLex)
    }

    /// Joined ring C[x, y, a, b, c] with the {x, y} block eliminated first.
    pub fn elim_xy_abc() -> Arc<PolyRing> {
        PolyRing::new(&["x", "y", "a", "b", "c"], MonomialOrder::Elim { block: 2 })
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn monomial_string(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for (i, &e) in m.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(self.vars[i].clone()),
                _ => parts.push(format!("{}^{}", self.vars[i], e)),
            }
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

pub fn monomial_degree(m: &[u32]) -> u32 {
    m.iter().sum()
}

pub fn monomial_divides(d: &[u32], m: &[u32]) -> bool {
    d.iter().zip(m).all(|(a, b)| a <= b)
}

pub fn monomial_mul(a: &[u32], b: &[u32]) -> Monomial {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn monomial_div(m: &[u32], d: &[u32]) -> Monomial {
    m.iter().zip(d).map(|(x, y)| x - y).collect()
}

pub fn monomial_lcm(a: &[u32], b: &[u32]) -> Monomial {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

#[derive(Clone)]
pub struct Poly {
    ring: Arc<PolyRing>,
    /// Sorted descending in the ring order; no zero coefficients.
    terms: Vec<(Monomial, Cyclotomic)>,
}

impl Poly {
    pub fn zero(ring: &Arc<PolyRing>) -> Poly {
        Poly {
            ring: Arc::clone(ring),
            terms: vec![],
        }
    }

    pub fn constant(ring: &Arc<PolyRing>, c: Cyclotomic) -> Poly {
        Poly::from_terms(ring, vec![(vec![0; ring.nvars()], c)])
    }

    pub fn one(ring: &Arc<PolyRing>, conductor: u32) -> Poly {
        Poly::constant(ring, Cyclotomic::one(conductor))
    }

    pub fn var(ring: &Arc<PolyRing>, i: usize, conductor: u32) -> Poly {
        let mut m = vec![0; ring.nvars()];
        m[i] = 1;
        Poly::from_terms(ring, vec![(m, Cyclotomic::one(conductor))])
    }

    pub fn monomial(ring: &Arc<PolyRing>, m: Monomial, c: Cyclotomic) -> Poly {
        Poly::from_terms(ring, vec![(m, c)])
    }

    /// Build from raw terms: merges duplicates, drops zeros, sorts.
    pub fn from_terms(ring: &Arc<PolyRing>, mut terms: Vec<(Monomial, Cyclotomic)>) -> Poly {
        for (m, _) in &terms {
            assert_eq!(m.len(), ring.nvars(), "monomial arity mismatch");
        }
        let order = ring.order();
        terms.sort_by(|a, b| order.compare(&b.0, &a.0));
        let mut merged: Vec<(Monomial, Cyclotomic)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            if let Some(last) = merged.last_mut() {
                if last.0 == m {
                    last.1 = last.1.add(&c);
                    continue;
                }
            }
            merged.push((m, c));
        }
        merged.retain(|(_, c)| !c.is_zero());
        Poly {
            ring: Arc::clone(ring),
            terms: merged,
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Cyclotomic)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<(&Monomial, &Cyclotomic)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| monomial_degree(m)).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.iter().map(|(m, _)| monomial_degree(m));
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    /// Constant coefficient (zero if absent).
    pub fn constant_term(&self) -> Cyclotomic {
        for (m, c) in &self.terms {
            if monomial_degree(m) == 0 {
                return c.clone();
            }
        }
        Cyclotomic::zero(1)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        assert!(Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring);
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Poly::from_terms(&self.ring, terms)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        Poly {
            ring: Arc::clone(&self.ring),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Cyclotomic) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        Poly::from_terms(
            &self.ring,
            self.terms
                .iter()
                .map(|(m, k)| (m.clone(), k.mul(c)))
                .collect(),
        )
    }

    pub fn scale_rat(&self, r: &Rat) -> Poly {
        Poly::from_terms(
            &self.ring,
            self.terms
                .iter()
                .map(|(m, k)| (m.clone(), k.scale(r)))
                .collect(),
        )
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                terms.push((monomial_mul(ma, mb), ca.mul(cb)));
            }
        }
        Poly::from_terms(&self.ring, terms)
    }

    pub fn mul_term(&self, m: &Monomial, c: &Cyclotomic) -> Poly {
        Poly::from_terms(
            &self.ring,
            self.terms
                .iter()
                .map(|(mm, cc)| (monomial_mul(mm, m), cc.mul(c)))
                .collect(),
        )
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => self.clone(),
            Some((_, lc)) => {
                let inv = lc.inv().expect("leading coefficient is nonzero");
                self.scale(&inv)
            }
        }
    }

    /// Substitute each variable by the given image polynomial. Images live
    /// in the target ring; their count must match this ring's arity.
    pub fn substitute(&self, images: &[Poly], target: &Arc<PolyRing>) -> Poly {
        assert_eq!(images.len(), self.ring.nvars());
        // Cache powers of each image up to the largest exponent used.
        let mut max_exp = vec![0u32; images.len()];
        for (m, _) in &self.terms {
            for (i, &e) in m.iter().enumerate() {
                max_exp[i] = max_exp[i].max(e);
            }
        }
        let one_cond = self
            .terms
            .first()
            .map(|(_, c)| c.conductor())
            .unwrap_or(1);
        let mut powers: Vec<Vec<Poly>> = Vec::with_capacity(images.len());
        for (i, img) in images.iter().enumerate() {
            let mut p = vec![Poly::one(target, one_cond)];
            for e in 1..=max_exp[i] {
                let next = p[(e - 1) as usize].mul(img);
                p.push(next);
            }
            powers.push(p);
        }
        let mut acc = Poly::zero(target);
        for (m, c) in &self.terms {
            let mut t = Poly::constant(target, c.clone());
            for (i, &e) in m.iter().enumerate() {
                if e > 0 {
                    t = t.mul(&powers[i][e as usize]);
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Evaluate at a point with cyclotomic coordinates.
    pub fn eval(&self, point: &[Cyclotomic]) -> Cyclotomic {
        assert_eq!(point.len(), self.ring.nvars());
        let mut acc = Cyclotomic::zero(1);
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.iter().enumerate() {
                if e > 0 {
                    t = t.mul(&point[i].pow(e as u64));
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Homogeneous part of the given degree.
    pub fn homogeneous_part(&self, d: u32) -> Poly {
        Poly {
            ring: Arc::clone(&self.ring),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| monomial_degree(m) == d)
                .cloned()
                .collect(),
        }
    }

    /// Map into another ring by a variable-index mapping: exponent of
    /// variable `i` here lands on variable `map[i]` there. All unmapped
    /// target exponents are zero.
    pub fn remap(&self, target: &Arc<PolyRing>, map: &[usize]) -> Poly {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut mm = vec![0u32; target.nvars()];
                for (i, &e) in m.iter().enumerate() {
                    if e > 0 {
                        mm[map[i]] += e;
                    }
                }
                (mm, c.clone())
            })
            .collect();
        Poly::from_terms(target, terms)
    }
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.terms == other.terms
    }
}

impl Eq for Poly {}

impl std::hash::Hash for Poly {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        for (m, c) in &self.terms {
            m.hash(state);
            c.hash(state);
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let is_const = monomial_degree(m) == 0;
            // Rational coefficients print bare; true cyclotomic values are
            // parenthesized so that `+` stays unambiguous in the grammar.
            let (sign_neg, body) = match c.to_rational() {
                Some(r) => {
                    use num_traits::Signed;
                    let neg = r.is_negative();
                    let mag = if neg { -r } else { r };
                    let mag_c = Cyclotomic::from_rational(c.conductor(), mag.clone());
                    let body = if is_const {
                        format!("{mag_c}")
                    } else if mag.is_one() {
                        self.ring.monomial_string(m)
                    } else {
                        format!("{mag_c}*{}", self.ring.monomial_string(m))
                    };
                    (neg, body)
                }
                None => {
                    let body = if is_const {
                        format!("({c})")
                    } else {
                        format!("({c})*{}", self.ring.monomial_string(m))
                    };
                    (false, body)
                }
            };
            if idx == 0 {
                if sign_neg {
                    write!(f, "-")?;
                }
            } else if sign_neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "{body}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c1(n: u32, v: i64) -> Cyclotomic {
        Cyclotomic::from_integer(n, v)
    }

    #[test]
    fn degrevlex_order() {
        let o = MonomialOrder::DegRevLex;
        // x^2 > xy > y^2 > x > y > 1 in two variables
        assert_eq!(o.compare(&[2, 0], &[1, 1]), Ordering::Greater);
        assert_eq!(o.compare(&[1, 1], &[0, 2]), Ordering::Greater);
        assert_eq!(o.compare(&[0, 2], &[1, 0]), Ordering::Greater);
        assert_eq!(o.compare(&[1, 0], &[0, 1]), Ordering::Greater);
        assert_eq!(o.compare(&[0, 1], &[0, 1]), Ordering::Equal);
        // degrevlex on three variables: a*c < b^2
        assert_eq!(o.compare(&[1, 0, 1], &[0, 2, 0]), Ordering::Less);
    }

    #[test]
    fn elimination_order_dominates_block() {
        let o = MonomialOrder::Elim { block: 2 };
        // any positive x,y part beats any pure a,b,c part
        assert_eq!(o.compare(&[1, 0, 0, 0, 0], &[0, 0, 5, 5, 5]), Ordering::Greater);
        assert_eq!(o.compare(&[0, 0, 1, 0, 0], &[0, 0, 0, 1, 0]), Ordering::Greater);
    }

    #[test]
    fn arithmetic_and_canonical_form() {
        let r = PolyRing::xy();
        let x = Poly::var(&r, 0, 4);
        let y = Poly::var(&r, 1, 4);
        let p = x.add(&y).mul(&x.sub(&y));
        let expect = x.mul(&x).sub(&y.mul(&y));
        assert_eq!(p, expect);
        let z = p.sub(&expect);
        assert!(z.is_zero());
        // combining duplicate monomials cancels exactly
        let q = Poly::from_terms(
            &r,
            vec![
                (vec![1, 1], c1(4, 2)),
                (vec![1, 1], c1(4, -2)),
                (vec![0, 0], c1(4, 7)),
            ],
        );
        assert_eq!(q.terms().len(), 1);
    }

    #[test]
    fn substitution_is_ring_homomorphism() {
        let r = PolyRing::xy();
        let x = Poly::var(&r, 0, 4);
        let y = Poly::var(&r, 1, 4);
        let f = x.mul(&x).add(&y.scale(&c1(4, 3)));
        let g = x.add(&y);
        // images x -> x + y, y -> x*y
        let images = vec![x.add(&y), x.mul(&y)];
        let lhs = f.mul(&g).substitute(&images, &r);
        let rhs = f.substitute(&images, &r).mul(&g.substitute(&images, &r));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn display_round_shape() {
        let r = PolyRing::xy();
        let x = Poly::var(&r, 0, 8);
        let y = Poly::var(&r, 1, 8);
        let p = x
            .mul(&x)
            .sub(&y.scale(&Cyclotomic::root_of_unity(1, 8)))
            .add(&Poly::one(&r, 8));
        assert_eq!(p.to_string(), "x^2 + (-z)*y + 1");
        assert_eq!(Poly::zero(&r).to_string(), "0");
    }

    #[test]
    fn evaluation() {
        let r = PolyRing::abc();
        let a = Poly::var(&r, 0, 4);
        let c = Poly::var(&r, 2, 4);
        let f = a.mul(&a).add(&c.scale(&c1(4, -1)));
        let pt = vec![c1(4, 2), c1(4, 0), c1(4, 4)];
        assert_eq!(f.eval(&pt), c1(4, 0));
    }
}
