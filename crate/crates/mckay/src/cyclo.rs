//! Exact arithmetic in cyclotomic fields Q(zeta_N).
//!
//! Elements are residues modulo the N-th cyclotomic polynomial Phi_N with
//! arbitrary-precision rational coefficients, so equality of values is
//! equality of coefficient vectors at a fixed conductor. No floating point
//! enters any computation here; the `approx` helper exists for display only.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, LazyLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rat = BigRational;

/// Largest conductor the field cache will construct. Generous for every
/// built-in group (icosahedral needs 60) while bounding memory for parsers.
pub const MAX_CONDUCTOR: u32 = 4096;

fn rat_i64(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Shared per-conductor data: the cyclotomic polynomial and reduction tables.
#[derive(Debug)]
pub struct CycloField {
    conductor: u32,
    degree: usize,
    /// Monic Phi_N as coefficient vector of length degree+1.
    min_poly: Vec<Rat>,
    /// Residue of t^k for k = 0..conductor (length = conductor), each of
    /// length `degree`. Since Phi_N divides t^N - 1, exponents reduce mod N.
    power_residues: Vec<Vec<Rat>>,
}

static FIELD_CACHE: LazyLock<RwLock<HashMap<u32, Arc<CycloField>>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

impl CycloField {
    /// Fetch (or build and cache) the field of conductor `n`.
    ///
    /// Reads are concurrent; a miss computes outside the lock and inserts
    /// under a short write lock.
    pub fn get(n: u32) -> Arc<CycloField> {
        assert!(
            n >= 1 && n <= MAX_CONDUCTOR,
            "conductor {n} outside supported range 1..={MAX_CONDUCTOR}"
        );
        if let Some(f) = FIELD_CACHE.read().unwrap().get(&n) {
            return Arc::clone(f);
        }
        let built = Arc::new(CycloField::build(n));
        let mut cache = FIELD_CACHE.write().unwrap();
        Arc::clone(cache.entry(n).or_insert(built))
    }

    fn build(n: u32) -> CycloField {
        let min_poly = cyclotomic_polynomial(n);
        let degree = min_poly.len() - 1;
        // Residues of t^k: for k < degree the unit vectors, then repeatedly
        // multiply by t and fold the overflow through the monic relation.
        let mut power_residues = Vec::with_capacity(n as usize);
        let mut cur = vec![Rat::zero(); degree];
        if degree > 0 {
            cur[0] = Rat::one();
        }
        for _ in 0..n {
            power_residues.push(cur.clone());
            // cur <- t * cur mod Phi_N
            let top = cur[degree - 1].clone();
            for i in (1..degree).rev() {
                cur[i] = cur[i - 1].clone();
            }
            cur[0] = Rat::zero();
            if !top.is_zero() {
                for i in 0..degree {
                    cur[i] -= &top * &min_poly[i];
                }
            }
        }
        CycloField {
            conductor: n,
            degree,
            min_poly,
            power_residues,
        }
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Degree of Phi_N, i.e. Euler phi(N).
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn min_poly(&self) -> &[Rat] {
        &self.min_poly
    }

    /// Reduce an arbitrary-degree coefficient vector modulo Phi_N.
    fn reduce(&self, coeffs: &[Rat]) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); self.degree];
        for (k, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let res = &self.power_residues[k % self.conductor as usize];
            for i in 0..self.degree {
                if !res[i].is_zero() {
                    out[i] += c * &res[i];
                }
            }
        }
        out
    }
}

/// Phi_N by the recursive division Phi_N = (t^N - 1) / prod_{d|N, d<N} Phi_d.
fn cyclotomic_polynomial(n: u32) -> Vec<Rat> {
    if n == 1 {
        return vec![-rat_i64(1), rat_i64(1)];
    }
    let mut num = vec![Rat::zero(); n as usize + 1];
    num[0] = -rat_i64(1);
    num[n as usize] = rat_i64(1);
    let mut quot = num;
    for d in 1..n {
        if n % d == 0 {
            let phi_d = cyclotomic_polynomial(d);
            quot = poly_div_exact(&quot, &phi_d);
        }
    }
    quot
}

/// Exact division of polynomials with rational coefficients (monic divisor).
fn poly_div_exact(num: &[Rat], den: &[Rat]) -> Vec<Rat> {
    let dn = num.len() - 1;
    let dd = den.len() - 1;
    assert!(den[dd].is_one(), "divisor must be monic");
    let mut rem = num.to_vec();
    let mut quot = vec![Rat::zero(); dn - dd + 1];
    for k in (0..=dn - dd).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        quot[k] = c.clone();
        for i in 0..=dd {
            rem[k + i] -= &c * &den[i];
        }
    }
    debug_assert!(rem.iter().all(Rat::is_zero), "non-exact division");
    quot
}

/// An element of Q(zeta_N) in canonical form: a residue of degree < phi(N).
#[derive(Clone)]
pub struct Cyclotomic {
    field: Arc<CycloField>,
    coeffs: Vec<Rat>,
}

impl Cyclotomic {
    pub fn zero(n: u32) -> Self {
        let field = CycloField::get(n);
        let coeffs = vec![Rat::zero(); field.degree()];
        Cyclotomic { field, coeffs }
    }

    pub fn one(n: u32) -> Self {
        Self::from_rational(n, Rat::one())
    }

    pub fn from_rational(n: u32, r: Rat) -> Self {
        let field = CycloField::get(n);
        let mut coeffs = vec![Rat::zero(); field.degree()];
        if field.degree() > 0 {
            coeffs[0] = r;
        }
        Cyclotomic { field, coeffs }
    }

    pub fn from_integer(n: u32, v: i64) -> Self {
        Self::from_rational(n, rat_i64(v))
    }

    /// zeta_N^k in canonical form; k may be any integer.
    pub fn root_of_unity(k: i64, n: u32) -> Self {
        let field = CycloField::get(n);
        let k = k.rem_euclid(n as i64) as usize;
        let coeffs = field.power_residues[k].clone();
        Cyclotomic { field, coeffs }
    }

    pub fn from_coeffs(n: u32, coeffs: Vec<Rat>) -> Self {
        let field = CycloField::get(n);
        let reduced = field.reduce(&coeffs);
        Cyclotomic {
            field,
            coeffs: reduced,
        }
    }

    pub fn conductor(&self) -> u32 {
        self.field.conductor()
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rat::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.is_rational() && self.coeffs.first().map(Rat::is_one).unwrap_or(false)
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().skip(1).all(Rat::is_zero)
    }

    /// The rational value, if the element lies in Q.
    pub fn to_rational(&self) -> Option<Rat> {
        if self.is_rational() {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Lift into the field of conductor `m` (the current conductor must
    /// divide `m`). Lifting and descending back is the identity.
    pub fn lift(&self, m: u32) -> Cyclotomic {
        let n = self.conductor();
        assert!(m % n == 0, "cannot lift conductor {n} into {m}");
        if m == n {
            return self.clone();
        }
        let field = CycloField::get(m);
        let step = (m / n) as usize;
        let mut out = vec![Rat::zero(); field.degree()];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let res = &field.power_residues[(i * step) % m as usize];
            for j in 0..field.degree() {
                if !res[j].is_zero() {
                    out[j] += c * &res[j];
                }
            }
        }
        Cyclotomic { field, coeffs: out }
    }

    /// Express the value in the subfield of conductor `m` (with `m`
    /// dividing the current conductor), if it lies there.
    pub fn descend(&self, m: u32) -> Result<Cyclotomic> {
        let n = self.conductor();
        assert!(n % m == 0, "conductor {m} is not a divisor of {n}");
        if m == n {
            return Ok(self.clone());
        }
        let sub = CycloField::get(m);
        // Columns: lifts of zeta_m^i for i < phi(m); solve for rational
        // coordinates by Gaussian elimination over Q.
        let cols: Vec<Vec<Rat>> = (0..sub.degree())
            .map(|i| {
                Cyclotomic {
                    field: Arc::clone(&sub),
                    coeffs: sub.power_residues[i].clone(),
                }
                .lift(n)
                .coeffs
            })
            .collect();
        let rows = self.coeffs.len();
        let ncols = cols.len();
        let mut aug: Vec<Vec<Rat>> = (0..rows)
            .map(|r| {
                let mut row: Vec<Rat> = (0..ncols).map(|c| cols[c][r].clone()).collect();
                row.push(self.coeffs[r].clone());
                row
            })
            .collect();
        let mut pivot_of_col = vec![usize::MAX; ncols];
        let mut rank = 0usize;
        for col in 0..ncols {
            let Some(p) = (rank..rows).find(|&r| !aug[r][col].is_zero()) else {
                continue;
            };
            aug.swap(rank, p);
            let inv = aug[rank][col].clone();
            for c in col..=ncols {
                let v = aug[rank][c].clone() / &inv;
                aug[rank][c] = v;
            }
            for r in 0..rows {
                if r != rank && !aug[r][col].is_zero() {
                    let f = aug[r][col].clone();
                    for c in col..=ncols {
                        let v = aug[r][c].clone() - &f * &aug[rank][c];
                        aug[r][c] = v;
                    }
                }
            }
            pivot_of_col[col] = rank;
            rank += 1;
        }
        // Inconsistent rows mean the value is not in the subfield.
        for r in rank..rows {
            if !aug[r][ncols].is_zero() {
                return Err(Error::NotInSubfield { target: m });
            }
        }
        let mut coeffs = vec![Rat::zero(); sub.degree()];
        for col in 0..ncols {
            if pivot_of_col[col] != usize::MAX {
                coeffs[col] = aug[pivot_of_col[col]][ncols].clone();
            }
        }
        Ok(Cyclotomic { field: sub, coeffs })
    }

    /// Bring two elements to the lcm of their conductors.
    pub fn unify(a: &Cyclotomic, b: &Cyclotomic) -> (Cyclotomic, Cyclotomic) {
        let (n, m) = (a.conductor(), b.conductor());
        if n == m {
            return (a.clone(), b.clone());
        }
        let l = num_integer::lcm(n, m);
        (a.lift(l), b.lift(l))
    }

    pub fn add(&self, other: &Cyclotomic) -> Cyclotomic {
        let (mut a, b) = Cyclotomic::unify(self, other);
        for i in 0..a.coeffs.len() {
            a.coeffs[i] += &b.coeffs[i];
        }
        a
    }

    pub fn sub(&self, other: &Cyclotomic) -> Cyclotomic {
        let (mut a, b) = Cyclotomic::unify(self, other);
        for i in 0..a.coeffs.len() {
            a.coeffs[i] -= &b.coeffs[i];
        }
        a
    }

    pub fn neg(&self) -> Cyclotomic {
        let mut a = self.clone();
        for c in &mut a.coeffs {
            *c = -c.clone();
        }
        a
    }

    pub fn mul(&self, other: &Cyclotomic) -> Cyclotomic {
        let (a, b) = Cyclotomic::unify(self, other);
        let d = a.field.degree();
        let mut conv = vec![Rat::zero(); 2 * d.max(1)];
        for (i, ca) in a.coeffs.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (j, cb) in b.coeffs.iter().enumerate() {
                if !cb.is_zero() {
                    conv[i + j] += ca * cb;
                }
            }
        }
        let coeffs = a.field.reduce(&conv);
        Cyclotomic {
            field: a.field,
            coeffs,
        }
    }

    pub fn scale(&self, r: &Rat) -> Cyclotomic {
        let mut a = self.clone();
        for c in &mut a.coeffs {
            *c = &*c * r;
        }
        a
    }

    /// Multiplicative inverse via the extended Euclidean algorithm in Q[t]
    /// against Phi_N. Division by zero is an error, not a panic.
    pub fn inv(&self) -> Result<Cyclotomic> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.to_rational() {
            return Ok(Cyclotomic::from_rational(
                self.conductor(),
                Rat::one() / r,
            ));
        }
        // gcd(a, Phi) = 1 since Phi_N is irreducible over Q; track the
        // Bezout coefficient of `a` only.
        let modulus = self.field.min_poly().to_vec();
        let mut r0 = modulus;
        let mut r1 = trim(self.coeffs.clone());
        let mut s0: Vec<Rat> = vec![];
        let mut s1: Vec<Rat> = vec![Rat::one()];
        while !r1.is_empty() {
            let (q, rem) = poly_div_rem(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = r1;
            r1 = rem;
            s0 = s1;
            s1 = s2;
        }
        // r0 is a nonzero constant gcd; normalize.
        debug_assert_eq!(r0.len(), 1);
        let c = r0[0].clone();
        let inv_coeffs: Vec<Rat> = s0.iter().map(|x| x / &c).collect();
        Ok(Cyclotomic::from_coeffs(self.conductor(), inv_coeffs))
    }

    pub fn div(&self, other: &Cyclotomic) -> Result<Cyclotomic> {
        Ok(self.mul(&other.inv()?))
    }

    /// The Galois automorphism zeta_N -> zeta_N^k for k coprime to N.
    pub fn galois(&self, k: u32) -> Cyclotomic {
        let n = self.conductor();
        assert_eq!(
            num_integer::gcd(k % n, n),
            1,
            "galois exponent must be coprime to the conductor"
        );
        let mut out = vec![Rat::zero(); self.field.degree()];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = ((i as u64 * k as u64) % n as u64) as usize;
            let res = &self.field.power_residues[e];
            for j in 0..out.len() {
                if !res[j].is_zero() {
                    out[j] += c * &res[j];
                }
            }
        }
        Cyclotomic {
            field: Arc::clone(&self.field),
            coeffs: out,
        }
    }

    /// Complex conjugation: zeta_N -> zeta_N^(N-1).
    pub fn conj(&self) -> Cyclotomic {
        let n = self.conductor();
        if n <= 2 {
            return self.clone();
        }
        self.galois(n - 1)
    }

    pub fn pow(&self, mut e: u64) -> Cyclotomic {
        let mut base = self.clone();
        let mut acc = Cyclotomic::one(self.conductor());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Coefficientwise lexicographic comparison after unifying conductors.
    /// This is a deterministic total order for sorting, not the order of
    /// the real embedding.
    pub fn cmp_lex(&self, other: &Cyclotomic) -> std::cmp::Ordering {
        let (a, b) = Cyclotomic::unify(self, other);
        for (x, y) in a.coeffs.iter().zip(&b.coeffs) {
            let c = x.cmp(y);
            if c != std::cmp::Ordering::Equal {
                return c;
            }
        }
        std::cmp::Ordering::Equal
    }

    /// Floating-point approximation (re, im) under zeta_N = exp(2 pi i/N).
    /// Display and diagnostics only; nothing exact consumes this.
    pub fn approx(&self) -> (f64, f64) {
        let n = self.conductor() as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let v = rat_to_f64(c);
            let ang = 2.0 * std::f64::consts::PI * (i as f64) / n;
            re += v * ang.cos();
            im += v * ang.sin();
        }
        (re, im)
    }
}

fn rat_to_f64(r: &Rat) -> f64 {
    let num = r.numer();
    let den = r.denom();
    // Good enough for display: convert through string for magnitudes that
    // fit, falling back to a ratio of truncated doubles.
    num.to_string().parse::<f64>().unwrap_or(f64::NAN)
        / den.to_string().parse::<f64>().unwrap_or(f64::NAN)
}

fn trim(mut v: Vec<Rat>) -> Vec<Rat> {
    while v.last().map(Rat::is_zero).unwrap_or(false) {
        v.pop();
    }
    v
}

fn poly_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    trim(out)
}

fn poly_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(out)
}

fn poly_div_rem(num: &[Rat], den: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let dd = den.len() - 1;
    let lead = den[dd].clone();
    let mut rem = num.to_vec();
    if num.len() <= dd {
        return (vec![], trim(rem));
    }
    let mut quot = vec![Rat::zero(); num.len() - dd];
    for k in (0..=num.len() - 1 - dd).rev() {
        let c = rem[k + dd].clone() / &lead;
        if c.is_zero() {
            continue;
        }
        quot[k] = c.clone();
        for i in 0..=dd {
            rem[k + i] -= &c * &den[i];
        }
    }
    (trim(quot), trim(rem))
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor() == other.conductor() {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = Cyclotomic::unify(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

/// Hashing uses the raw (conductor, coefficients) pair. Collections mixing
/// conductors must unify first; group and ideal internals keep one conductor.
impl std::hash::Hash for Cyclotomic {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.conductor().hash(state);
        for c in &self.coeffs {
            c.hash(state);
        }
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclo[{}]({})", self.conductor(), self)
    }
}

fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Cyclotomic {
    /// Textual form `c0 + c1*z + c2*z^2 + ...` with zero terms omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let coeff_one = mag.is_one();
            if i == 0 {
                write!(f, "{}", fmt_rat(&mag))?;
            } else {
                if !coeff_one {
                    write!(f, "{}*", fmt_rat(&mag))?;
                }
                if i == 1 {
                    write!(f, "z")?;
                } else {
                    write!(f, "z^{i}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zeta(k: i64, n: u32) -> Cyclotomic {
        Cyclotomic::root_of_unity(k, n)
    }

    #[test]
    fn phi_polynomials() {
        let f = CycloField::get(1);
        assert_eq!(f.degree(), 1);
        let f = CycloField::get(4);
        assert_eq!(f.degree(), 2); // t^2 + 1
        assert_eq!(f.min_poly()[0], rat_i64(1));
        assert_eq!(f.min_poly()[1], rat_i64(0));
        let f = CycloField::get(8);
        assert_eq!(f.degree(), 4); // t^4 + 1
        let f = CycloField::get(12);
        assert_eq!(f.degree(), 4); // t^4 - t^2 + 1
        assert_eq!(f.min_poly()[2], rat_i64(-1));
        let f = CycloField::get(20);
        assert_eq!(f.degree(), 8);
    }

    #[test]
    fn roots_of_unity() {
        // zeta_4^2 = -1
        assert_eq!(zeta(2, 4), Cyclotomic::from_integer(4, -1));
        // zeta_5^5 = 1, full rotation
        assert_eq!(zeta(5, 5), Cyclotomic::one(5));
        // zeta_N^0 = 1
        assert_eq!(zeta(0, 7), Cyclotomic::one(7));
        // zeta_N^N = 1 for a few conductors
        for n in [2u32, 3, 6, 8, 12, 16, 20] {
            assert_eq!(zeta(n as i64, n), Cyclotomic::one(n));
        }
    }

    #[test]
    fn golden_ratio_relation() {
        // u = zeta_5 + zeta_5^4 satisfies u^2 + u - 1 = 0 and u > 0.
        let u = zeta(1, 5).add(&zeta(4, 5));
        let rel = u.mul(&u).add(&u).sub(&Cyclotomic::one(5));
        assert!(rel.is_zero());
        assert!(u.approx().0 > 0.0);
    }

    #[test]
    fn sum_of_all_roots_vanishes() {
        for n in [2u32, 3, 4, 5, 6, 8, 9, 12, 15] {
            let mut s = Cyclotomic::zero(n);
            for k in 0..n {
                s = s.add(&zeta(k as i64, n));
            }
            assert!(s.is_zero(), "sum of roots for N={n}");
        }
    }

    #[test]
    fn inverse_of_root() {
        // inv(zeta_8) = zeta_8^7
        assert_eq!(zeta(1, 8).inv().unwrap(), zeta(7, 8));
        // a * inv(a) = 1 for a composite element
        let a = zeta(1, 12).add(&Cyclotomic::from_integer(12, 3));
        assert!(a.mul(&a.inv().unwrap()).is_one());
        // division by zero reports an error
        assert!(matches!(
            Cyclotomic::zero(8).inv(),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn eisenstein_reduction() {
        // zeta_3 + zeta_3^2 = -1 via reduction mod Phi_3 = t^2 + t + 1
        let s = zeta(1, 3).add(&zeta(2, 3));
        assert_eq!(s, Cyclotomic::from_integer(3, -1));
    }

    #[test]
    fn conjugation() {
        // conj(zeta_4) = -zeta_4
        assert_eq!(zeta(1, 4).conj(), zeta(1, 4).neg());
        // conj fixes rationals
        let r = Cyclotomic::from_rational(8, Rat::new(BigInt::from(3), BigInt::from(7)));
        assert_eq!(r.conj(), r);
        // a * conj(a) for a = 1 + zeta_8 equals 2 + zeta_8 + zeta_8^7
        let a = Cyclotomic::one(8).add(&zeta(1, 8));
        let prod = a.mul(&a.conj());
        let expect = Cyclotomic::from_integer(8, 2)
            .add(&zeta(1, 8))
            .add(&zeta(7, 8));
        assert_eq!(prod, expect);
        // involution and ring homomorphism
        let b = zeta(3, 8).scale(&rat_i64(2)).add(&Cyclotomic::one(8));
        assert_eq!(a.conj().conj(), a);
        assert_eq!(a.mul(&b).conj(), a.conj().mul(&b.conj()));
        assert_eq!(a.add(&b).conj(), a.conj().add(&b.conj()));
    }

    #[test]
    fn lift_descend_roundtrip() {
        let a = zeta(1, 6).add(&Cyclotomic::from_integer(6, 2));
        let lifted = a.lift(24);
        assert_eq!(lifted.conductor(), 24);
        let back = lifted.descend(6).unwrap();
        assert_eq!(back, a);
        // cross-conductor equality of the same value
        assert_eq!(a, lifted);
        // zeta_24^4 = zeta_6
        assert_eq!(zeta(1, 6).lift(24), zeta(4, 24));
        // zeta_8 does not lie in Q(zeta_4)
        assert!(zeta(1, 8).descend(4).is_err());
        // but zeta_8^2 does
        assert_eq!(zeta(2, 8).descend(4).unwrap(), zeta(1, 4));
    }

    #[test]
    fn mixed_conductor_arithmetic() {
        // zeta_3 * zeta_4 = zeta_12^7
        let p = zeta(1, 3).mul(&zeta(1, 4));
        assert_eq!(p.conductor(), 12);
        assert_eq!(p, zeta(7, 12));
    }

    #[test]
    fn display_form() {
        assert_eq!(Cyclotomic::zero(8).to_string(), "0");
        assert_eq!(Cyclotomic::from_integer(8, -3).to_string(), "-3");
        let a = Cyclotomic::one(8)
            .add(&zeta(2, 8).scale(&Rat::new(BigInt::from(-3), BigInt::from(2))));
        assert_eq!(a.to_string(), "1 - 3/2*z^2");
        assert_eq!(zeta(1, 8).to_string(), "z");
    }
}
