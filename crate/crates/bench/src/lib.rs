//! Benchmark kernels shared by the criterion harness and the smoke tests.

use fpp_core::bounds::{default_x_grid, frak_n, phi2};
use fpp_core::census::{search_configurations, SearchResult, SearchSpace};
use fpp_core::datasets::{Dataset, NumberFieldRecord};
use fpp_core::ffpoly::{ddf_degree_multiset, PrimeFieldPoly};
use fpp_core::lvalues::{euler_product, Fold, LocalDegrees};
use fpp_core::real::CertifiedReal;
use fpp_core::volume::mu_from_values;
use fpp_core::Result;
use num_rational::BigRational;

/// Prime limit of the Euler product kernel.
pub const EULER_LIMIT: u64 = 100_000;

/// Prime of the factorisation kernel.
pub const DDF_PRIME: u64 = 1_000_003;

pub struct Kernels {
    pub ds: Dataset,
    pub degrees: LocalDegrees,
}

impl Kernels {
    /// Loads the bundled tables and the local degrees of the octic field of `C35`.
    pub fn new() -> Result<Self> {
        let ds = Dataset::bundled()?;
        let degrees = LocalDegrees::compute(&ds.pair("C35")?.ell, EULER_LIMIT)?;
        Ok(Kernels { ds, degrees })
    }

    pub fn field(&self, pair: &str) -> Result<&NumberFieldRecord> {
        Ok(&self.ds.pair(pair)?.ell)
    }

    /// `zeta_ell(2)` truncated at `EULER_LIMIT`, without the tail.
    pub fn euler(&self, fold: Fold) -> CertifiedReal {
        euler_product(&self.degrees, None, self.degrees.len(), 2, 192, fold)
    }

    /// Distinct-degree factorisation of a defining polynomial modulo `DDF_PRIME`.
    pub fn ddf(&self, pair: &str) -> Result<Vec<(u32, u32)>> {
        let poly = PrimeFieldPoly::from_integer_poly(&self.field(pair)?.poly, DDF_PRIME);
        ddf_degree_multiset(&poly)
    }

    pub fn local_degrees(&self, pair: &str, limit: u64) -> Result<LocalDegrees> {
        LocalDegrees::compute(self.field(pair)?, limit)
    }

    pub fn phi2(&self, d: u32, h3: u64) -> Result<CertifiedReal> {
        phi2(d, h3, 128)
    }

    pub fn frak_n(&self, d: u32) -> Result<CertifiedReal> {
        Ok(frak_n(d, &default_x_grid(), 128)?.1)
    }

    /// Configuration search for a pair using its tabulated `mu`.
    pub fn search(&self, pair: &str, space: SearchSpace) -> Result<SearchResult> {
        let pr = self.ds.pair(pair)?;
        let e = &pr.expected;
        let mu: BigRational = match (&e.zeta_k_m1, &e.l_m2) {
            (Some(z), Some(l)) => mu_from_values(pr.d(), z, l),
            _ => return Err(fpp_core::Error::MissingDatum { label: pair.into(), field: "expected values".into() }),
        };
        search_configurations(pr, &mu, pr.ell.h3_required()?, space)
    }
}
