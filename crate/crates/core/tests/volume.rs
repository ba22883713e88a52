//! Euler factors, covolumes and Euler characteristics.

mod common;

use fpp_core::datasets::Dataset;
use fpp_core::ffpoly::{classified_places_up_to_symmetry, RelativePlaceClass};
use fpp_core::lvalues::{rel_l, zeta_k, LConfig, Qmax};
use fpp_core::real::{pi, CertifiedReal};
use fpp_core::volume::{
    chi_lambda_and_gamma_lower, chi_picard, euler_factor, LocalDatum, ParahoricChoice, ParahoricKind, VolumeContext,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use proptest::prelude::*;

fn datum(pair: &fpp_core::datasets::FieldPairRecord, p: u64, kind: ParahoricKind) -> LocalDatum {
    let (place, class) = classified_places_up_to_symmetry(pair, p).unwrap().into_iter().next().unwrap();
    LocalDatum { choice: ParahoricChoice::new(kind, place.q.clone()), place, class }
}

proptest! {
    #[test]
    fn second_factor_is_at_least_one(k in 1usize..8, q in prop::sample::select(vec![2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 49])) {
        let choice = ParahoricChoice::new(ParahoricKind::ALL[k], q);
        let (e1, e2) = euler_factor(&choice);
        prop_assert!(e2 >= BigRational::one());
        prop_assert!(e1 >= BigInt::one());
    }

    #[test]
    fn names_round_trip(k in 0usize..8) {
        let kind = ParahoricKind::ALL[k];
        prop_assert_eq!(ParahoricKind::parse(kind.name()).unwrap(), kind);
    }
}

#[test]
fn hyperspecial_data_change_nothing() {
    let ds = Dataset::bundled().unwrap();
    let pair = ds.pair("C2").unwrap();
    let mu = common::q("1/135");
    let base = VolumeContext::new(pair.clone(), mu.clone(), vec![datum(pair, 2, ParahoricKind::Anisotropic)]).unwrap();
    let with = VolumeContext::new(
        pair.clone(),
        mu,
        vec![datum(pair, 2, ParahoricKind::Anisotropic), datum(pair, 11, ParahoricKind::Hyperspecial)],
    )
    .unwrap();
    assert_eq!(chi_lambda_and_gamma_lower(&base, 1), chi_lambda_and_gamma_lower(&with, 1));
}

#[test]
fn division_algebra_characteristics() {
    let ds = Dataset::bundled().unwrap();
    for &(label, p, q, chi) in &common::DIVISION_TABLE {
        let pair = ds.pair(label).unwrap();
        let mu = pair.expected.mu.clone().unwrap();
        let d = datum(pair, p, ParahoricKind::Anisotropic);
        assert_eq!(d.class, RelativePlaceClass::SplitInL, "{label}");
        assert_eq!(d.place.q, BigInt::from(q), "{label}");
        let ctx = VolumeContext::new(pair.clone(), mu, vec![d]).unwrap();
        let r = chi_lambda_and_gamma_lower(&ctx, 1);
        assert_eq!(r.chi_lambda, common::q(chi), "{label}");
        assert!(r.power_of_3, "{label}");
        assert_eq!(r.index_upper, BigInt::from(9), "{label}");
    }
}

#[test]
fn anisotropic_needs_a_split_place() {
    let ds = Dataset::bundled().unwrap();
    let pair = ds.pair("C2").unwrap();
    let (place, class) = classified_places_up_to_symmetry(pair, 3)
        .unwrap()
        .into_iter()
        .find(|(_, c)| *c != RelativePlaceClass::SplitInL)
        .unwrap();
    let bad = LocalDatum { choice: ParahoricChoice::new(ParahoricKind::Anisotropic, place.q.clone()), place, class };
    assert!(VolumeContext::new(pair.clone(), common::q("1/135"), vec![bad]).is_err());
}

#[test]
fn picard_characteristics() {
    let ds = Dataset::bundled().unwrap();
    let cfg = LConfig { prime_limit: 200_000, precision_bits: 160 };
    for (a, chi) in [(1, "1/32"), (3, "1/72"), (23, "3")] {
        assert_eq!(chi_picard(&ds, a, &cfg, Qmax::default()).unwrap(), common::q(chi), "a={a}");
    }
    assert!(chi_picard(&ds, 4, &cfg, Qmax::default()).is_err());
}

/// `mu = D_ell^{5/2} zeta_k(2) L(3) / ((16 pi^5)^d D_k)`.
#[test]
fn functional_equation_consistency() {
    let ds = Dataset::bundled().unwrap();
    let cfg = LConfig { prime_limit: 100_000, precision_bits: 160 };
    for label in ["a=1", "a=23", "C2", "C18", "C31", "C39"] {
        let pair = ds.pair(label).unwrap();
        let d = pair.d() as i64;
        let dl = CertifiedReal::from_int(pair.ell.disc.clone(), 160);
        let dk = CertifiedReal::from_int(pair.k.disc.clone(), 160);
        let z = zeta_k(&pair.k, 2, &cfg).unwrap();
        let l = rel_l(pair, 3, &cfg).unwrap();
        let denom = pi(160).powi(5).unwrap().mul_int(16).powi(d).unwrap().mul(&dk);
        let v = dl.powi(5).unwrap().sqrt().unwrap().mul(&z).mul(&l).div(&denom).unwrap();
        let mu = pair.expected.mu.clone().unwrap();
        assert!(v.contains_rational(&mu), "{label}: {} vs {}", v.to_f64(), mu);
    }
}
