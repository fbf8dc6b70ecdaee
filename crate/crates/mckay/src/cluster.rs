//! G-clusters at the origin and the exceptional curve families.
//!
//! A curve family realizes one nontrivial irreducible rho as a pencil
//! between two isotypic copies inside m_S/n_G: the point at (p : q) is
//! the cluster generated by p v - q phi(v) together with n_G, completed
//! by m_S times the two copies at the pencil's degenerate endpoints.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::cyclo::Cyclotomic;
use crate::error::{Error, Result};
use crate::linalg::{span_basis, CMatrix};
use crate::poly::action::is_cluster;
use crate::poly::coinv::CoinvariantAlgebra;
use crate::poly::groebner::Ideal;
use crate::poly::{Poly, PolyRing};
use crate::rep::{equivariant_isomorphism, ClassFunction};

/// A projective parameter (p : q), not both zero.
#[derive(Clone, PartialEq, Eq)]
pub struct Param {
    pub p: Cyclotomic,
    pub q: Cyclotomic,
}

impl Param {
    pub fn int(p: i64, q: i64) -> Param {
        assert!(p != 0 || q != 0, "(0 : 0) is not a projective point");
        Param {
            p: Cyclotomic::from_integer(1, p),
            q: Cyclotomic::from_integer(1, q),
        }
    }

    pub fn is_endpoint(&self) -> bool {
        self.p.is_zero() || self.q.is_zero()
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} : {})", self.p, self.q)
    }
}

impl fmt::Debug for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Default sample parameters: both endpoints plus three generic points.
pub fn default_params() -> Vec<Param> {
    vec![
        Param::int(1, 0),
        Param::int(0, 1),
        Param::int(1, 1),
        Param::int(1, 2),
        Param::int(2, 3),
    ]
}

/// Fallback generic parameters used when a sample fails genericity.
pub fn fallback_params() -> Vec<Param> {
    vec![Param::int(3, 5), Param::int(1, 3), Param::int(2, 5), Param::int(5, 7)]
}

/// The minimal generator module V(I) = I/(m_S I + n_G) as a multiset of
/// representation rows, via the character of the quotient of spans inside
/// the coinvariant algebra.
pub fn generator_module(coinv: &CoinvariantAlgebra, ideal: &Ideal) -> Result<Vec<usize>> {
    // preconditions: n_G inside I inside m_S
    for g in coinv.nideal().basis() {
        if !ideal.contains(g) {
            return Err(Error::Containment {
                message: format!("invariant generator {g} is not in the ideal"),
            });
        }
    }
    for f in ideal.basis() {
        if !f.constant_term().is_zero() {
            return Err(Error::Containment {
                message: format!("generator {f} has a constant term; ideal not inside m_S"),
            });
        }
    }
    // span of the image of I inside S/n_G, closed under multiplication
    let mut basis = span_basis(
        &ideal
            .basis()
            .iter()
            .map(|g| coinv.coords_of(g))
            .collect::<Vec<_>>(),
    );
    loop {
        let mut grown = basis.clone();
        for v in &basis {
            for t in 0..coinv.ring().nvars() {
                grown.push(coinv.multiply_by_var(t, v));
            }
        }
        let grown = span_basis(&grown);
        if grown.len() == basis.len() {
            break;
        }
        basis = grown;
    }
    // m_S * I image
    let mut w_rows = Vec::new();
    for v in &basis {
        for t in 0..coinv.ring().nvars() {
            w_rows.push(coinv.multiply_by_var(t, v));
        }
    }
    let w = span_basis(&w_rows);

    // character of the quotient basis/W
    let group = coinv.group();
    let cls = group.conjugacy_classes();
    let mut values = Vec::with_capacity(cls.reps.len());
    for &rep in &cls.reps {
        let tr_i = trace_on(coinv, rep, &basis)?;
        let tr_w = trace_on(coinv, rep, &w)?;
        values.push(tr_i.sub(&tr_w));
    }
    coinv
        .table()
        .decompose_multiset(&ClassFunction { values })
}

fn trace_on(
    coinv: &CoinvariantAlgebra,
    element: usize,
    basis: &[Vec<Cyclotomic>],
) -> Result<Cyclotomic> {
    if basis.is_empty() {
        return Ok(Cyclotomic::zero(1));
    }
    let mut acc = Cyclotomic::zero(1);
    for (i, v) in basis.iter().enumerate() {
        let img = coinv.apply_element(element, v);
        let coords = crate::linalg::express_in_basis(basis, &img).ok_or(Error::NotInvariant {
            generator: coinv.poly_of_coords(v).to_string(),
            element,
        })?;
        acc = acc.add(&coords[i]);
    }
    Ok(acc)
}

/// The pencil between two copies of an irreducible: basis of the source
/// copy and its image under a fixed equivariant isomorphism.
pub struct Pencil {
    pub rho: usize,
    pub copy_pair: (usize, usize),
    pub from: Vec<Poly>,
    pub to: Vec<Poly>,
}

impl Pencil {
    pub fn build(coinv: &CoinvariantAlgebra, rho: usize, i: usize, j: usize) -> Result<Pencil> {
        if i == j {
            return Err(Error::Invalid(
                "copy pair must consist of two distinct copies".into(),
            ));
        }
        let copies = coinv.copies(rho);
        let (u, w) = (&copies[i], &copies[j]);
        let dim = coinv.table().dims()[rho];
        let phi = equivariant_isomorphism(
            coinv.group(),
            &|g| u.actions[g].clone(),
            &|g| w.actions[g].clone(),
            dim,
        )
        .map_err(|e| match e {
            Error::NotIsomorphic { retries, .. } => Error::NotIsomorphic { i, j, retries },
            other => other,
        })?;
        let to = (0..dim)
            .map(|k| {
                let mut acc = Poly::zero(coinv.ring());
                for s in 0..dim {
                    let c = phi.at(s, k);
                    if !c.is_zero() {
                        acc = acc.add(&w.polys[s].scale(c));
                    }
                }
                acc
            })
            .collect();
        Ok(Pencil {
            rho,
            copy_pair: (i, j),
            from: u.polys.clone(),
            to,
        })
    }

    /// Pencil generators p*v_k - q*phi(v_k).
    pub fn generators_at(&self, param: &Param) -> Vec<Poly> {
        self.from
            .iter()
            .zip(&self.to)
            .map(|(v, w)| v.scale(&param.p).sub(&w.scale(&param.q)))
            .collect()
    }
}

/// The cluster at one pencil parameter, when it exists. The ideal is
/// first tried as pencil + n_G; at degenerate parameters the forced
/// completion by m_S times both copies is added before giving up.
pub fn cluster_from_choice(
    coinv: &CoinvariantAlgebra,
    pencil: &Pencil,
    param: &Param,
) -> Result<Option<Ideal>> {
    if param.p.is_zero() && param.q.is_zero() {
        return Err(Error::Invalid("(0 : 0) is not a projective point".into()));
    }
    let group = coinv.group();
    let ring = coinv.ring();
    let mut gens = pencil.generators_at(param);
    gens.extend(coinv.nideal().basis().iter().cloned());
    let first = Ideal::groebner(ring, &gens);
    if is_cluster(group, &first)?.is_cluster() {
        return Ok(Some(first));
    }
    // completion: m_S * (both copies)
    let copies = coinv.copies(pencil.rho);
    for &which in &[pencil.copy_pair.0, pencil.copy_pair.1] {
        for v in &copies[which].polys {
            for t in 0..ring.nvars() {
                let n = group.conductor();
                gens.push(Poly::var(ring, t, n).mul(v));
            }
        }
    }
    let completed = Ideal::groebner(ring, &gens);
    if is_cluster(group, &completed)?.is_cluster() {
        return Ok(Some(completed));
    }
    Ok(None)
}

/// One sampled point of an exceptional family.
#[derive(Clone)]
pub struct CurvePoint {
    pub param: Param,
    pub ideal: Ideal,
    /// decomposition of V(ideal) as representation rows, sorted
    pub v_module: Vec<usize>,
}

/// A parameterized family of clusters realizing one irreducible.
pub struct CurveFamily {
    pub rho: usize,
    pub copy_pair: (usize, usize),
    pub pencil: Pencil,
    pub samples: Vec<CurvePoint>,
    /// parameters whose generator module contains a second irreducible
    pub endpoints: Vec<(Param, Vec<usize>)>,
}

impl CurveFamily {
    /// The cluster ideal at an arbitrary parameter.
    pub fn ideal_at(&self, coinv: &CoinvariantAlgebra, param: &Param) -> Result<Option<Ideal>> {
        cluster_from_choice(coinv, &self.pencil, param)
    }
}

pub struct CurveSearch {
    pub families: Vec<CurveFamily>,
    /// human-readable anomaly records (empty on a clean run)
    pub anomalies: Vec<String>,
}

/// Find the exceptional curve families: for each nontrivial rho, search
/// the copy pairs for the one whose pencil produces clusters at the
/// generic parameters with singleton generator module.
pub fn exceptional_curves(coinv: &CoinvariantAlgebra, params: &[Param]) -> Result<CurveSearch> {
    let table = coinv.table();
    let trivial = table.trivial_index();
    let generics: Vec<&Param> = params.iter().filter(|p| !p.is_endpoint()).collect();
    assert!(
        generics.len() >= 2 && params.iter().any(|p| p.is_endpoint()),
        "need both endpoints and at least two generic parameters"
    );
    let mut families = Vec::new();
    let mut anomalies = Vec::new();

    for rho in 0..table.len() {
        if rho == trivial {
            continue;
        }
        let ncopies = coinv.copies(rho).len();
        let mut valid: Vec<(Pencil, Vec<CurvePoint>)> = Vec::new();
        for i in 0..ncopies {
            for j in (i + 1)..ncopies {
                let pencil = match Pencil::build(coinv, rho, i, j) {
                    Ok(p) => p,
                    Err(Error::NotIsomorphic { .. }) => continue,
                    Err(e) => return Err(e),
                };
                match test_pencil(coinv, &pencil, &generics)? {
                    Some(points) => valid.push((pencil, points)),
                    None => continue,
                }
            }
        }
        if valid.is_empty() {
            anomalies.push(format!(
                "row {rho} ({}): no copy pair yields a generically valid family",
                table.dims()[rho]
            ));
            continue;
        }
        if valid.len() > 1 {
            // distinct pairs defining distinct ideal sets are a genuine
            // anomaly; identical sets are the same family found twice
            let first_ideals: Vec<&Ideal> = valid[0].1.iter().map(|p| &p.ideal).collect();
            for other in &valid[1..] {
                let same = other
                    .1
                    .iter()
                    .zip(&first_ideals)
                    .all(|(a, b)| &&a.ideal == b);
                if !same {
                    anomalies.push(format!(
                        "row {rho}: copy pairs {:?} and {:?} both yield families with different ideals",
                        valid[0].0.copy_pair, other.0.copy_pair
                    ));
                }
            }
        }
        let (pencil, _) = valid.swap_remove(0);
        // sample the family over the full parameter list
        let mut samples = Vec::new();
        let mut endpoints = Vec::new();
        for param in params {
            match cluster_from_choice(coinv, &pencil, param)? {
                Some(ideal) => {
                    let v_module = generator_module(coinv, &ideal)?;
                    if v_module.len() > 1 {
                        endpoints.push((param.clone(), v_module.clone()));
                    }
                    samples.push(CurvePoint {
                        param: param.clone(),
                        ideal,
                        v_module,
                    });
                }
                None => anomalies.push(format!(
                    "row {rho}: sample at {param} is not a cluster"
                )),
            }
        }
        families.push(CurveFamily {
            rho,
            copy_pair: pencil.copy_pair,
            pencil,
            samples,
            endpoints,
        });
    }
    Ok(CurveSearch {
        families,
        anomalies,
    })
}

/// Test a pencil at the generic parameters: all of them must give
/// clusters whose generator module is exactly {rho}. Falls back to spare
/// generic parameters when a generic sample accidentally degenerates.
fn test_pencil(
    coinv: &CoinvariantAlgebra,
    pencil: &Pencil,
    generics: &[&Param],
) -> Result<Option<Vec<CurvePoint>>> {
    let mut points = Vec::new();
    let mut spare = fallback_params().into_iter();
    for &param in generics {
        let mut param = param.clone();
        loop {
            match cluster_from_choice(coinv, pencil, &param)? {
                None => return Ok(None),
                Some(ideal) => {
                    let v_module = generator_module(coinv, &ideal)?;
                    if v_module == [pencil.rho] {
                        points.push(CurvePoint {
                            param,
                            ideal,
                            v_module,
                        });
                        break;
                    }
                    // a non-generic hit inside the family: try a spare
                    match spare.next() {
                        Some(next) => param = next,
                        None => return Ok(None),
                    }
                }
            }
        }
    }
    Ok(Some(points))
}

/// Intersection graph of the families: representation rows are vertices,
/// and two families meet when they share a sampled ideal or an endpoint
/// generator module contains both rows.
pub fn intersection_graph(families: &[CurveFamily]) -> Vec<(usize, usize)> {
    let mut edges = std::collections::BTreeSet::new();
    for (a, fa) in families.iter().enumerate() {
        for fb in families.iter().skip(a + 1) {
            let mut meet = false;
            for pa in &fa.samples {
                if fb.samples.iter().any(|pb| pb.ideal == pa.ideal) {
                    meet = true;
                    break;
                }
            }
            if !meet {
                for (_, vm) in &fa.endpoints {
                    if vm.contains(&fa.rho) && vm.contains(&fb.rho) {
                        meet = true;
                        break;
                    }
                }
                for (_, vm) in &fb.endpoints {
                    if vm.contains(&fa.rho) && vm.contains(&fb.rho) {
                        meet = true;
                        break;
                    }
                }
            }
            if meet {
                let (x, y) = (fa.rho.min(fb.rho), fa.rho.max(fb.rho));
                edges.insert((x, y));
            }
        }
    }
    edges.into_iter().collect()
}

/// The cyclic family formulas on the plane:
/// I_j(p:q) = <p x^j - q y^{2n-j}, xy, x^{j+1}, y^{2n-j+1}>.
pub fn cyclic_cluster_2d(n: u32, j: u32, param: &Param) -> Result<Ideal> {
    if j < 1 || j > 2 * n - 1 {
        return Err(Error::Invalid(format!(
            "index {j} outside 1..={}",
            2 * n - 1
        )));
    }
    let conductor = 4 * n;
    let ring = PolyRing::xy();
    let one = Cyclotomic::one(conductor);
    let gens = vec![
        Poly::monomial(&ring, vec![j, 0], one.clone())
            .scale(&param.p)
            .sub(&Poly::monomial(&ring, vec![0, 2 * n - j], one.clone()).scale(&param.q)),
        Poly::monomial(&ring, vec![1, 1], one.clone()),
        Poly::monomial(&ring, vec![j + 1, 0], one.clone()),
        Poly::monomial(&ring, vec![0, 2 * n - j + 1], one),
    ];
    Ok(Ideal::groebner(&ring, &gens))
}

/// The cyclic family formulas on the cone:
/// J_k(s:t) = <s a^k - t b^{n-k}, c, a^{k+1}, b^{n-k+1}, ab>.
pub fn cyclic_cluster_3d(n: u32, k: u32, param: &Param) -> Result<Ideal> {
    if k < 1 || k > n - 1 {
        return Err(Error::Invalid(format!("index {k} outside 1..={}", n - 1)));
    }
    let conductor = 4 * n;
    let ring = PolyRing::abc();
    let one = Cyclotomic::one(conductor);
    let gens = vec![
        Poly::monomial(&ring, vec![k, 0, 0], one.clone())
            .scale(&param.p)
            .sub(&Poly::monomial(&ring, vec![0, n - k, 0], one.clone()).scale(&param.q)),
        Poly::monomial(&ring, vec![0, 0, 1], one.clone()),
        Poly::monomial(&ring, vec![k + 1, 0, 0], one.clone()),
        Poly::monomial(&ring, vec![0, n - k + 1, 0], one.clone()),
        Poly::monomial(&ring, vec![1, 1, 0], one),
    ];
    Ok(Ideal::groebner(&ring, &gens))
}

/// Locate a cluster on a family: solve for the parameter whose pencil
/// element lies in the ideal and verify exact ideal equality. Returns the
/// parameter on success.
pub fn locate_on_family(
    coinv: &CoinvariantAlgebra,
    family: &CurveFamily,
    ideal: &Ideal,
) -> Result<Option<Param>> {
    // p * NF(v_1) = q * NF(phi(v_1)) determines (p : q)
    let v = &family.pencil.from[0];
    let w = &family.pencil.to[0];
    let nf_v = ideal.normal_form(v);
    let nf_w = ideal.normal_form(w);
    let param = if nf_v.is_zero() && nf_w.is_zero() {
        // both copies inside: cannot happen for clusters (V would contain
        // rho twice); treat as not on the family
        return Ok(None);
    } else if nf_v.is_zero() {
        Param::int(1, 0)
    } else if nf_w.is_zero() {
        Param::int(0, 1)
    } else {
        // nf_w = lambda nf_v needed; read lambda off the leading terms
        let (lm_v, lc_v) = nf_v.leading().unwrap();
        let found = nf_w
            .terms()
            .iter()
            .find(|(m, _)| m == lm_v)
            .map(|(_, c)| c.clone());
        let Some(cw) = found else {
            return Ok(None);
        };
        let lambda = cw.div(lc_v)?;
        if nf_w != nf_v.scale(&lambda) {
            return Ok(None);
        }
        // p v - q w in ideal with q = 1 forces p = lambda
        Param {
            p: lambda,
            q: Cyclotomic::one(1),
        }
    };
    match cluster_from_choice(coinv, &family.pencil, &param)? {
        Some(candidate) if &candidate == ideal => Ok(Some(param)),
        _ => Ok(None),
    }
}

/// Solve for the parameter identifying an ideal with a pencil of the
/// shape p*v - q*w (v, w monomial generators): returns the parameter when
/// the proportionality p NF(v) = q NF(w) has a solution.
fn solve_pencil_param(ideal: &Ideal, v: &Poly, w: &Poly) -> Option<Param> {
    let nf_v = ideal.normal_form(v);
    let nf_w = ideal.normal_form(w);
    if nf_v.is_zero() && nf_w.is_zero() {
        None
    } else if nf_v.is_zero() {
        Some(Param::int(1, 0))
    } else if nf_w.is_zero() {
        Some(Param::int(0, 1))
    } else {
        let (lm_v, lc_v) = nf_v.leading().unwrap();
        let cw = nf_w
            .terms()
            .iter()
            .find(|(m, _)| m == lm_v)
            .map(|(_, c)| c.clone())?;
        let lambda = cw.div(lc_v).ok()?;
        if nf_w != nf_v.scale(&lambda) {
            return None;
        }
        Some(Param {
            p: lambda,
            q: Cyclotomic::one(1),
        })
    }
}

/// Identify a plane cluster with a point of the cyclic family formulas:
/// returns (j, parameter) such that the ideal equals I_j(p:q) exactly.
pub fn match_cyclic_formula_2d(n: u32, ideal: &Ideal) -> Result<Option<(u32, Param)>> {
    let ring = PolyRing::xy();
    let one = Cyclotomic::one(4 * n);
    for j in 1..=(2 * n - 1) {
        let v = Poly::monomial(&ring, vec![j, 0], one.clone());
        let w = Poly::monomial(&ring, vec![0, 2 * n - j], one.clone());
        if let Some(param) = solve_pencil_param(ideal, &v, &w) {
            if &cyclic_cluster_2d(n, j, &param)? == ideal {
                return Ok(Some((j, param)));
            }
        }
    }
    Ok(None)
}

/// Identify a cone cluster with a point of the cyclic family formulas:
/// returns (k, parameter) such that the ideal equals J_k(s:t) exactly.
pub fn match_cyclic_formula_3d(n: u32, ideal: &Ideal) -> Result<Option<(u32, Param)>> {
    let ring = PolyRing::abc();
    let one = Cyclotomic::one(4 * n);
    for k in 1..=(n - 1) {
        let v = Poly::monomial(&ring, vec![k, 0, 0], one.clone());
        let w = Poly::monomial(&ring, vec![0, n - k, 0], one.clone());
        if let Some(param) = solve_pencil_param(ideal, &v, &w) {
            if &cyclic_cluster_3d(n, k, &param)? == ideal {
                return Ok(Some((k, param)));
            }
        }
    }
    Ok(None)
}

/// JSON-facing summary of a curve family.
#[derive(Serialize)]
pub struct FamilyRecord {
    pub rho: String,
    pub dim: usize,
    pub pure: bool,
    pub copy_pair: (usize, usize),
    pub samples: Vec<SampleRecord>,
}

#[derive(Serialize)]
pub struct SampleRecord {
    pub param: String,
    pub generators: Vec<String>,
    pub v_module: Vec<String>,
}

#[allow(unused)]
fn _assert_send_sync()
where
    CMatrix: Sized,
{
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::builtin::{build_binary_polyhedral, GroupKind};
    use crate::poly::action::orbit_ideal;
    use crate::rep::CharTable;

    fn coinv_2d(kind: GroupKind, n: u32) -> CoinvariantAlgebra {
        let g = build_binary_polyhedral(kind, n, None).unwrap();
        let t = Arc::new(CharTable::compute(&g).unwrap());
        CoinvariantAlgebra::build(&g, &t, &PolyRing::xy(), kind.invariant_degree_bound_2d(n))
            .unwrap()
    }

    #[test]
    fn generator_module_of_the_maximal_ideal() {
        let coinv = coinv_2d(GroupKind::Cyclic, 2);
        let ring = coinv.ring().clone();
        let n = coinv.group().conductor();
        let m = Ideal::groebner(
            &ring,
            &[Poly::var(&ring, 0, n), Poly::var(&ring, 1, n)],
        );
        let v = generator_module(&coinv, &m).unwrap();
        // V(m_A) for the binary cyclic group of order 4: both degree-1
        // monomials are minimal generators (xy and higher lie in n + m^2)
        assert_eq!(v.len(), 2);
    }

    #[test]
    fn cyclic_formula_ideals_are_clusters() {
        let g = build_binary_polyhedral(GroupKind::Cyclic, 2, None).unwrap();
        for j in 1..=3 {
            for param in default_params() {
                let ideal = cyclic_cluster_2d(2, j, &param).unwrap();
                let rep = is_cluster(&g, &ideal).unwrap();
                assert!(rep.is_cluster(), "I_{j}({param}) is a cluster");
            }
        }
    }

    #[test]
    fn cyclic_3d_formula_ideals_are_clusters() {
        let gt = build_binary_polyhedral(GroupKind::Cyclic, 4, None).unwrap();
        let (gq, _) = crate::group::build_polyhedral_quotient(&gt).unwrap();
        for k in 1..=3 {
            for param in default_params() {
                let ideal = cyclic_cluster_3d(4, k, &param).unwrap();
                let rep = is_cluster(&gq, &ideal).unwrap();
                assert!(rep.is_cluster(), "J_{k}({param}) is a cluster");
            }
        }
        // the corner identity J_k(0:1) = J_{k+1}(1:0)
        for k in 1..=2 {
            let a = cyclic_cluster_3d(4, k, &Param::int(0, 1)).unwrap();
            let b = cyclic_cluster_3d(4, k + 1, &Param::int(1, 0)).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn param_scaling_gives_identical_ideals() {
        let ideal1 = cyclic_cluster_2d(2, 1, &Param::int(1, 2)).unwrap();
        let ideal2 = cyclic_cluster_2d(2, 1, &Param::int(3, 6)).unwrap();
        assert_eq!(ideal1, ideal2);
    }

    #[test]
    fn cyclic_two_families_match_the_formulas() {
        let coinv = coinv_2d(GroupKind::Cyclic, 2);
        let params = default_params();
        let search = exceptional_curves(&coinv, &params).unwrap();
        assert!(search.anomalies.is_empty(), "{:?}", search.anomalies);
        // 2n - 1 = 3 families
        assert_eq!(search.families.len(), 3);
        for fam in &search.families {
            // generic samples have singleton generator module
            for pt in &fam.samples {
                assert!(pt.v_module.contains(&fam.rho));
                if !pt.param.is_endpoint() {
                    assert_eq!(pt.v_module, vec![fam.rho]);
                }
            }
            // every sample ideal is a point of exactly one formula family
            let mut seen_j = None;
            for pt in &fam.samples {
                let hit = match_cyclic_formula_2d(2, &pt.ideal).unwrap();
                let (j, _) = hit.unwrap_or_else(|| {
                    panic!("sample {} not of the formula shape", pt.param)
                });
                if !pt.param.is_endpoint() {
                    match seen_j {
                        None => seen_j = Some(j),
                        Some(prev) => assert_eq!(prev, j, "family straddles formulas"),
                    }
                }
            }
        }
        // intersection graph is the chain with 2 edges
        let edges = intersection_graph(&search.families);
        assert_eq!(edges.len(), 2);
    }

    #[test]
    fn free_orbit_cluster_recognized() {
        let g = build_binary_polyhedral(GroupKind::Cyclic, 2, None).unwrap();
        let n = g.conductor();
        let pt = vec![
            Cyclotomic::from_integer(n, 1),
            Cyclotomic::from_integer(n, 2),
        ];
        let ideal = orbit_ideal(&g, &pt).unwrap();
        assert!(is_cluster(&g, &ideal).unwrap().is_cluster());
    }
}
