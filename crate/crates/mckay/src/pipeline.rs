//! Assembly of the full toolchain for one built-in group: the binary
//! group, its polyhedral quotient, both character tables, purity data and
//! both McKay quivers.

use std::sync::Arc;

use crate::error::Result;
use crate::group::builtin::{build_binary_polyhedral, GroupKind};
use crate::group::{build_polyhedral_quotient, MatrixGroup, QuotientMap};
use crate::poly::coinv::CoinvariantAlgebra;
use crate::poly::PolyRing;
use crate::rep::quiver::{mckay_quiver, McKayQuiver};
use crate::rep::{match_pure_to_quotient, purity_flags, CharTable};

pub struct Toolchain {
    pub kind: GroupKind,
    pub n: u32,
    pub gt: Arc<MatrixGroup>,
    pub gq: Arc<MatrixGroup>,
    pub map: QuotientMap,
    pub table2: Arc<CharTable>,
    pub table3: Arc<CharTable>,
    /// purity flag per 2D table row
    pub purity: Vec<bool>,
    /// 2D row -> matching 3D row for pure rows
    pub pure_match: Vec<Option<usize>>,
    pub quiver2: McKayQuiver,
    pub quiver3: McKayQuiver,
}

impl Toolchain {
    pub fn build(kind: GroupKind, n: u32, conductor: Option<u32>) -> Result<Toolchain> {
        let gt = build_binary_polyhedral(kind, n, conductor)?;
        let (gq, map) = build_polyhedral_quotient(&gt)?;
        let table2 = Arc::new(CharTable::compute(&gt)?);
        let table3 = Arc::new(CharTable::compute(&gq)?);
        let purity = purity_flags(&table2)?;
        let pure_match = match_pure_to_quotient(&table2, &map, &table3)?;
        let quiver2 = mckay_quiver(&table2)?;
        let quiver3 = mckay_quiver(&table3)?;
        Ok(Toolchain {
            kind,
            n,
            gt,
            gq,
            map,
            table2,
            table3,
            purity,
            pure_match,
            quiver2,
            quiver3,
        })
    }

    /// Coinvariant algebra of the plane action.
    pub fn coinv_2d(&self) -> Result<CoinvariantAlgebra> {
        CoinvariantAlgebra::build(
            &self.gt,
            &self.table2,
            &PolyRing::xy(),
            self.kind.invariant_degree_bound_2d(self.n),
        )
    }

    /// Coinvariant algebra of the cone action of the quotient.
    pub fn coinv_3d(&self) -> Result<CoinvariantAlgebra> {
        CoinvariantAlgebra::build(
            &self.gq,
            &self.table3,
            &PolyRing::abc(),
            self.kind.invariant_degree_bound_3d(self.n),
        )
    }
}
