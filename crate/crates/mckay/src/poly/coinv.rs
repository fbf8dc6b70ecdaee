//! The coinvariant algebra S/n_G and its isotypic structure.
//!
//! n_G is the ideal generated by the positive-degree invariants. The
//! quotient is graded and finite dimensional of dimension 2|G| - 1, and
//! its positive part carries every nontrivial irreducible exactly
//! 2 dim(rho) times. The copies are extracted per degree through the
//! isotypic projection, and blocks of higher multiplicity are split into
//! genuine submodule copies with intertwiners from a multiplicity-one
//! reference copy.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::cyclo::{Cyclotomic, Rat};
use crate::error::{Error, Result};
use crate::group::MatrixGroup;
use crate::linalg::{span_basis, CMatrix};
use crate::poly::action::{act, invariant_generators};
use crate::poly::groebner::Ideal;
use crate::poly::{monomial_degree, Monomial, Poly, PolyRing};
use crate::rep::{CharTable, ClassFunction};

/// One copy of an irreducible inside a graded slice of m_S/n_G.
pub struct IsotypicCopy {
    pub degree: u32,
    /// Basis as coordinate rows over the full standard-monomial basis.
    pub rows: Vec<Vec<Cyclotomic>>,
    /// The same basis as polynomials (normal forms).
    pub polys: Vec<Poly>,
    /// Action matrix of each group element in this basis.
    pub actions: Vec<CMatrix>,
}

pub struct CoinvariantAlgebra {
    group: Arc<MatrixGroup>,
    table: Arc<CharTable>,
    ring: Arc<PolyRing>,
    invariant_gens: Vec<Poly>,
    pub incomplete_warning: bool,
    nideal: Ideal,
    std_monomials: Vec<Monomial>,
    mono_index: BTreeMap<Monomial, usize>,
    /// monomial indices per degree
    degrees: Vec<Vec<usize>>,
    /// per element, per degree: action matrix on the degree slice
    actions: Vec<Vec<CMatrix>>,
    /// multiplication by each variable on full coordinates
    var_mult: Vec<CMatrix>,
    /// copies[rho] = copies of the table row rho, sorted by degree
    copies: Vec<Vec<IsotypicCopy>>,
    /// graded multiplicities: graded_mult[rho][d]
    graded_mult: Vec<Vec<usize>>,
}

impl CoinvariantAlgebra {
    pub fn build(
        group: &Arc<MatrixGroup>,
        table: &Arc<CharTable>,
        ring: &Arc<PolyRing>,
        degree_bound: u32,
    ) -> Result<CoinvariantAlgebra> {
        let (invariant_gens, incomplete_warning) = invariant_generators(group, ring, degree_bound);
        let nideal = Ideal::groebner(ring, &invariant_gens);
        let std_monomials = nideal.quotient_basis()?;
        let dim = std_monomials.len();
        let mono_index: BTreeMap<Monomial, usize> = std_monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        let top = std_monomials
            .iter()
            .map(|m| monomial_degree(m))
            .max()
            .unwrap_or(0);
        let mut degrees: Vec<Vec<usize>> = vec![vec![]; top as usize + 1];
        for (i, m) in std_monomials.iter().enumerate() {
            degrees[monomial_degree(m) as usize].push(i);
        }

        // per-element, per-degree action matrices
        let conductor = group.conductor();
        let mut actions: Vec<Vec<CMatrix>> = Vec::with_capacity(group.order());
        for g in 0..group.order() {
            let mut per_degree = Vec::with_capacity(degrees.len());
            for slice in &degrees {
                let mut mat = CMatrix::zero(slice.len(), slice.len());
                for (col, &mi) in slice.iter().enumerate() {
                    let moved = act(
                        group,
                        g,
                        &Poly::monomial(
                            ring,
                            std_monomials[mi].clone(),
                            Cyclotomic::one(conductor),
                        ),
                    );
                    let nf = nideal.normal_form(&moved);
                    for (m, c) in nf.terms() {
                        let idx = mono_index[m];
                        let row = slice
                            .iter()
                            .position(|&s| s == idx)
                            .expect("graded action stays in its degree");
                        mat.set(row, col, c.clone());
                    }
                }
                per_degree.push(mat);
            }
            actions.push(per_degree);
        }

        // multiplication-by-variable matrices on full coordinates
        let mut var_mult = Vec::with_capacity(ring.nvars());
        for t in 0..ring.nvars() {
            let mut mat = CMatrix::zero(dim, dim);
            for (col, m) in std_monomials.iter().enumerate() {
                let mut bumped = m.clone();
                bumped[t] += 1;
                let nf = nideal.normal_form(&Poly::monomial(
                    ring,
                    bumped,
                    Cyclotomic::one(conductor),
                ));
                for (mm, c) in nf.terms() {
                    mat.set(mono_index[mm], col, c.clone());
                }
            }
            var_mult.push(mat);
        }

        // graded characters and multiplicities
        let cls = group.conjugacy_classes();
        let nrows = table.len();
        let mut graded_mult = vec![vec![0usize; degrees.len()]; nrows];
        for (d, slice) in degrees.iter().enumerate() {
            if slice.is_empty() {
                continue;
            }
            let chi = ClassFunction {
                values: cls
                    .reps
                    .iter()
                    .map(|&r| actions[r][d].trace())
                    .collect(),
            };
            let mult = table.decompose(&chi)?;
            for rho in 0..nrows {
                graded_mult[rho][d] = mult[rho];
            }
        }

        let mut coinv = CoinvariantAlgebra {
            group: Arc::clone(group),
            table: Arc::clone(table),
            ring: Arc::clone(ring),
            invariant_gens,
            incomplete_warning,
            nideal,
            std_monomials,
            mono_index,
            degrees,
            actions,
            var_mult,
            copies: Vec::new(),
            graded_mult,
        };
        coinv.extract_copies()?;
        Ok(coinv)
    }

    fn extract_copies(&mut self) -> Result<()> {
        let nrows = self.table.len();
        let trivial = self.table.trivial_index();
        let mut all_copies: Vec<Vec<IsotypicCopy>> = Vec::with_capacity(nrows);
        for rho in 0..nrows {
            if rho == trivial {
                all_copies.push(Vec::new());
                continue;
            }
            let dim_rho = self.table.dims()[rho];
            // isotypic blocks per degree, in slice coordinates
            let mut blocks: Vec<(u32, Vec<Vec<Cyclotomic>>)> = Vec::new();
            for d in 1..self.degrees.len() {
                let m = self.graded_mult[rho][d];
                if m == 0 {
                    continue;
                }
                let rows = self.isotypic_block(rho, d);
                debug_assert_eq!(rows.len(), m * dim_rho, "block dimension");
                blocks.push((d as u32, rows));
            }
            // split blocks into copies
            let mut copies: Vec<IsotypicCopy> = Vec::new();
            for (d, rows) in &blocks {
                let m = rows.len() / dim_rho;
                if dim_rho == 1 {
                    for r in rows {
                        copies.push(self.finish_copy(*d, vec![r.clone()]));
                    }
                } else if m == 1 {
                    copies.push(self.finish_copy(*d, rows.clone()));
                } else {
                    // reference copy from a multiplicity-one degree
                    let reference = blocks
                        .iter()
                        .find(|(_, r)| r.len() == dim_rho)
                        .ok_or_else(|| {
                            Error::Invalid(format!(
                                "representation row {rho}: no multiplicity-one degree to split a block of multiplicity {m}"
                            ))
                        })?;
                    let split = self.split_block(dim_rho, &reference.1, reference.0, rows, *d)?;
                    for part in split {
                        copies.push(self.finish_copy(*d, part));
                    }
                }
            }
            copies.sort_by_key(|c| c.degree);
            all_copies.push(copies);
        }
        self.copies = all_copies;
        Ok(())
    }

    /// Canonical row basis of the rho-isotypic part of the degree-d slice.
    fn isotypic_block(&self, rho: usize, d: usize) -> Vec<Vec<Cyclotomic>> {
        let slice = &self.degrees[d];
        let k = slice.len();
        let cls = self.group.conjugacy_classes();
        let chi = self.table.row(rho);
        let mut proj = CMatrix::zero(k, k);
        for g in 0..self.group.order() {
            let coef = chi.values[cls.class_of[g]].conj();
            if coef.is_zero() {
                continue;
            }
            proj = proj.add(&self.actions[g][d].scale(&coef));
        }
        let scale = Rat::new(
            (self.table.dims()[rho] as i64).into(),
            (self.group.order() as i64).into(),
        );
        proj = proj.scale(&Cyclotomic::from_rational(1, scale));
        // canonical basis of the column space
        let cols: Vec<Vec<Cyclotomic>> = (0..k)
            .map(|c| (0..k).map(|r| proj.at(r, c).clone()).collect())
            .collect();
        span_basis(&cols)
    }

    /// Split a multiplicity-m block into m copies using the intertwiner
    /// space from a clean reference copy of the same irreducible.
    fn split_block(
        &self,
        dim_rho: usize,
        ref_rows: &[Vec<Cyclotomic>],
        ref_degree: u32,
        block_rows: &[Vec<Cyclotomic>],
        block_degree: u32,
    ) -> Result<Vec<Vec<Vec<Cyclotomic>>>> {
        let k = block_rows.len();
        let m = k / dim_rho;
        let order = self.group.order();
        // restricted actions on the reference copy and the block
        let ref_act: Vec<CMatrix> = (0..order)
            .map(|g| self.restrict_action(g, ref_degree, ref_rows))
            .collect::<Result<_>>()?;
        let block_act: Vec<CMatrix> = (0..order)
            .map(|g| self.restrict_action(g, block_degree, block_rows))
            .collect::<Result<_>>()?;
        // average matrix units into the intertwiner space Hom(ref, block)
        let scale = Cyclotomic::from_rational(1, Rat::new(1.into(), (order as i64).into()));
        let mut flat: Vec<Vec<Cyclotomic>> = Vec::new();
        for s in 0..k {
            for t in 0..dim_rho {
                let mut acc = CMatrix::zero(k, dim_rho);
                for g in 0..order {
                    let ginv = self.group.inv_index(g);
                    // A_B(g) * E_st * A_ref(g^{-1})
                    let mut prod = CMatrix::zero(k, dim_rho);
                    for r in 0..k {
                        let a = block_act[g].at(r, s);
                        if a.is_zero() {
                            continue;
                        }
                        for c in 0..dim_rho {
                            let b = ref_act[ginv].at(t, c);
                            if !b.is_zero() {
                                prod.set(r, c, prod.at(r, c).add(&a.mul(&b)));
                            }
                        }
                    }
                    acc = acc.add(&prod);
                }
                let avg = acc.scale(&scale);
                if !avg.is_zero() {
                    flat.push(avg.data.clone());
                }
            }
        }
        let hom_basis = span_basis(&flat);
        if hom_basis.len() != m {
            return Err(Error::Invalid(format!(
                "intertwiner space has dimension {} but multiplicity is {m}",
                hom_basis.len()
            )));
        }
        // each intertwiner's image is one copy, in ambient coordinates
        let mut out = Vec::with_capacity(m);
        let mut stacked: Vec<Vec<Cyclotomic>> = Vec::new();
        for h in &hom_basis {
            let mut part: Vec<Vec<Cyclotomic>> = Vec::with_capacity(dim_rho);
            for col in 0..dim_rho {
                // ambient vector: sum over block rows with psi coefficients
                let n = self.std_monomials.len();
                let mut v = vec![Cyclotomic::zero(1); n];
                for s in 0..k {
                    let coef = &h[s * dim_rho + col];
                    if coef.is_zero() {
                        continue;
                    }
                    for (j, entry) in block_rows[s].iter().enumerate() {
                        if !entry.is_zero() {
                            v[j] = v[j].add(&coef.mul(entry));
                        }
                    }
                }
                part.push(v);
            }
            stacked.extend(part.iter().cloned());
            out.push(part);
        }
        if span_basis(&stacked).len() != k {
            return Err(Error::Invalid(
                "intertwiner images do not span the isotypic block".into(),
            ));
        }
        Ok(out)
    }

    /// Restriction of the degree-slice action to a row subspace, with the
    /// rows given in slice coordinates.
    fn restrict_action(&self, g: usize, degree: u32, rows: &[Vec<Cyclotomic>]) -> Result<CMatrix> {
        let mat = &self.actions[g][degree as usize];
        let k = rows.len();
        let mut t = CMatrix::zero(k, k);
        for (i, r) in rows.iter().enumerate() {
            let img = mat.mul_vec(r);
            let coords = crate::linalg::express_in_basis(rows, &img).ok_or_else(|| {
                Error::Invalid("subspace is not stable under the group action".into())
            })?;
            for (j, c) in coords.into_iter().enumerate() {
                t.set(j, i, c);
            }
        }
        Ok(t)
    }

    /// Blow slice-coordinate rows up to full coordinates and cache the
    /// polynomial forms and per-element action matrices.
    fn finish_copy(&self, degree: u32, slice_rows: Vec<Vec<Cyclotomic>>) -> IsotypicCopy {
        let slice = &self.degrees[degree as usize];
        let full_dim = self.std_monomials.len();
        let to_full = |r: &Vec<Cyclotomic>| {
            let mut v = vec![Cyclotomic::zero(1); full_dim];
            // rows may arrive in slice coordinates or full coordinates
            if r.len() == slice.len() {
                for (pos, c) in r.iter().enumerate() {
                    v[slice[pos]] = c.clone();
                }
            } else {
                debug_assert_eq!(r.len(), full_dim);
                v.clone_from(r);
            }
            v
        };
        let rows: Vec<Vec<Cyclotomic>> = slice_rows.iter().map(to_full).collect();
        let rows = span_basis(&rows);
        let polys: Vec<Poly> = rows.iter().map(|r| self.poly_of_coords(r)).collect();
        // per-element action in this basis, via the slice matrices
        let slice_rows_back: Vec<Vec<Cyclotomic>> = rows
            .iter()
            .map(|r| slice.iter().map(|&i| r[i].clone()).collect())
            .collect();
        let actions: Vec<CMatrix> = (0..self.group.order())
            .map(|g| {
                self.restrict_action(g, degree, &slice_rows_back)
                    .expect("isotypic copies are stable")
            })
            .collect();
        IsotypicCopy {
            degree,
            rows,
            polys,
            actions,
        }
    }

    pub fn group(&self) -> &Arc<MatrixGroup> {
        &self.group
    }

    pub fn table(&self) -> &Arc<CharTable> {
        &self.table
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn invariant_gens(&self) -> &[Poly] {
        &self.invariant_gens
    }

    pub fn nideal(&self) -> &Ideal {
        &self.nideal
    }

    pub fn dimension(&self) -> usize {
        self.std_monomials.len()
    }

    pub fn std_monomials(&self) -> &[Monomial] {
        &self.std_monomials
    }

    pub fn graded_dimensions(&self) -> Vec<usize> {
        self.degrees.iter().map(Vec::len).collect()
    }

    pub fn graded_multiplicity(&self, rho: usize, d: usize) -> usize {
        self.graded_mult
            .get(rho)
            .and_then(|v| v.get(d))
            .copied()
            .unwrap_or(0)
    }

    /// Total multiplicity of a representation row in m_S/n_G.
    pub fn total_multiplicity(&self, rho: usize) -> usize {
        self.graded_mult[rho].iter().sum()
    }

    pub fn copies(&self, rho: usize) -> &[IsotypicCopy] {
        &self.copies[rho]
    }

    /// Full coordinates of the normal form of a polynomial.
    pub fn coords_of(&self, f: &Poly) -> Vec<Cyclotomic> {
        let nf = self.nideal.normal_form(f);
        let mut v = vec![Cyclotomic::zero(1); self.std_monomials.len()];
        for (m, c) in nf.terms() {
            v[self.mono_index[m]] = c.clone();
        }
        v
    }

    pub fn poly_of_coords(&self, coords: &[Cyclotomic]) -> Poly {
        let terms = coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (self.std_monomials[i].clone(), c.clone()))
            .collect();
        Poly::from_terms(&self.ring, terms)
    }

    /// Apply a group element to full coordinates (degreewise).
    pub fn apply_element(&self, g: usize, coords: &[Cyclotomic]) -> Vec<Cyclotomic> {
        let mut out = vec![Cyclotomic::zero(1); coords.len()];
        for (d, slice) in self.degrees.iter().enumerate() {
            if slice.is_empty() {
                continue;
            }
            let local: Vec<Cyclotomic> = slice.iter().map(|&i| coords[i].clone()).collect();
            if local.iter().all(Cyclotomic::is_zero) {
                continue;
            }
            let img = self.actions[g][d].mul_vec(&local);
            for (pos, &i) in slice.iter().enumerate() {
                out[i] = img[pos].clone();
            }
        }
        out
    }

    /// Multiply full coordinates by a variable.
    pub fn multiply_by_var(&self, t: usize, coords: &[Cyclotomic]) -> Vec<Cyclotomic> {
        self.var_mult[t].mul_vec(coords)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::build_polyhedral_quotient;
    use crate::group::builtin::{build_binary_polyhedral, GroupKind};

    fn coinv_for(kind: GroupKind, n: u32) -> CoinvariantAlgebra {
        let g = build_binary_polyhedral(kind, n, None).unwrap();
        let t = Arc::new(CharTable::compute(&g).unwrap());
        let ring = PolyRing::xy();
        CoinvariantAlgebra::build(&g, &t, &ring, kind.invariant_degree_bound_2d(n)).unwrap()
    }

    #[test]
    fn binary_cyclic_two_structure() {
        let coinv = coinv_for(GroupKind::Cyclic, 2);
        // dim = 2|G| - 1 = 7: {1, x, y, x^2, y^2, x^3, y^3}
        assert_eq!(coinv.dimension(), 7);
        assert_eq!(coinv.graded_dimensions(), vec![1, 2, 2, 2]);
        assert!(!coinv.incomplete_warning);
        // each nontrivial rho appears exactly twice
        let table = coinv.table();
        for rho in 0..table.len() {
            if rho == table.trivial_index() {
                continue;
            }
            assert_eq!(coinv.total_multiplicity(rho), 2);
            assert_eq!(coinv.copies(rho).len(), 2);
        }
    }

    #[test]
    fn binary_dihedral_two_copies_and_multiplicity() {
        let coinv = coinv_for(GroupKind::Dihedral, 2);
        // |G| = 8: dimension 15, graded 1,2,3,4,3,2
        assert_eq!(coinv.dimension(), 15);
        assert_eq!(coinv.graded_dimensions(), vec![1, 2, 3, 4, 3, 2]);
        let table = coinv.table();
        for rho in 0..table.len() {
            if rho == table.trivial_index() {
                continue;
            }
            let d = table.dims()[rho];
            assert_eq!(coinv.total_multiplicity(rho), 2 * d, "row {rho}");
            assert_eq!(coinv.copies(rho).len(), 2 * d);
            // every copy is a genuine submodule of the right dimension
            for c in coinv.copies(rho) {
                assert_eq!(c.rows.len(), d);
                assert_eq!(c.actions.len(), 8);
            }
        }
        // the 2-dimensional representation has two copies inside degree 3
        let two_dim = (0..table.len())
            .find(|&r| table.dims()[r] == 2)
            .unwrap();
        let degrees: Vec<u32> = coinv.copies(two_dim).iter().map(|c| c.degree).collect();
        assert_eq!(degrees, vec![1, 3, 3, 5]);
    }

    #[test]
    fn quotient_coinvariants_on_the_cone() {
        let gt = build_binary_polyhedral(GroupKind::Cyclic, 3, None).unwrap();
        let (gq, _) = build_polyhedral_quotient(&gt).unwrap();
        let t = Arc::new(CharTable::compute(&gq).unwrap());
        let ring = PolyRing::abc();
        let coinv = CoinvariantAlgebra::build(
            &gq,
            &t,
            &ring,
            GroupKind::Cyclic.invariant_degree_bound_3d(3),
        )
        .unwrap();
        // dim = 2|G| - 1 = 5
        assert_eq!(coinv.dimension(), 5);
        for rho in 0..t.len() {
            if rho == t.trivial_index() {
                continue;
            }
            assert_eq!(coinv.total_multiplicity(rho), 2);
        }
    }

    #[test]
    fn coordinates_round_trip() {
        let coinv = coinv_for(GroupKind::Cyclic, 3);
        let ring = coinv.ring().clone();
        let n = coinv.group().conductor();
        let f = Poly::var(&ring, 0, n).add(&Poly::var(&ring, 1, n).scale(
            &Cyclotomic::root_of_unity(1, n),
        ));
        let coords = coinv.coords_of(&f);
        assert_eq!(coinv.poly_of_coords(&coords), f);
        // multiplication matrices agree with polynomial multiplication
        let xf = coinv.multiply_by_var(0, &coords);
        let expect = coinv.coords_of(&Poly::var(&ring, 0, n).mul(&f));
        assert_eq!(xf, expect);
    }
}
