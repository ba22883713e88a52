//! Analytic bounds: monotonicity, precision stability and named evaluation.

use fpp_core::arith::rat;
use fpp_core::bounds::{
    default_x_grid, eval_named, f_delta, frak_n_from_parts, frak_p, odlyzko_grid_parts, phi1, phi2, xi, BoundArgs,
    BOUND_NAMES,
};
use fpp_core::datasets::Dataset;
use fpp_core::real::CertifiedReal;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn stable(lo: &CertifiedReal, hi: &CertifiedReal) -> bool {
    lo.overlaps(hi) && hi.rad_f64() <= lo.rad_f64()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn phi2_grows_with_h3(d in 1u32..12, h in 1u64..40) {
        let a = phi2(d, h, 128).unwrap();
        let b = phi2(d, h + 1, 128).unwrap();
        prop_assert!(a.certainly_lt(&b));
    }

    #[test]
    fn bounds_agree_across_precisions(d in 2u32..10, h in 1u64..10, k in 1i64..150) {
        let delta = rat(k, 100);
        let rw = rat(1, 10);
        let pairs = [
            (phi1(d, &rw, &delta, 128).unwrap(), phi1(d, &rw, &delta, 256).unwrap()),
            (phi2(d, h, 128).unwrap(), phi2(d, h, 256).unwrap()),
            (frak_p(d, &rat(5, 1), h, 128).unwrap(), frak_p(d, &rat(5, 1), h, 256).unwrap()),
            (xi(d, &rat(1000, 1), &rw, &delta, 128).unwrap(), xi(d, &rat(1000, 1), &rw, &delta, 256).unwrap()),
        ];
        for (a, b) in &pairs {
            prop_assert!(stable(a, b));
        }
        if k >= 2 {
            prop_assert!(stable(&f_delta(&delta, d, 128).unwrap(), &f_delta(&delta, d, 256).unwrap()));
        }
    }
}

#[test]
fn frak_n_increases_on_small_degrees() {
    let parts = odlyzko_grid_parts(&default_x_grid(), 128).unwrap();
    let vals: Vec<CertifiedReal> = (2..=8).map(|d| frak_n_from_parts(d, &parts).unwrap().1).collect();
    assert!(vals.windows(2).all(|w| w[0].certainly_lt(&w[1])));
}

#[test]
fn minkowski_bound_below_minimal_discriminants() {
    let ds = Dataset::bundled().unwrap();
    for d in 2u32..=8 {
        let dd = BigRational::from_integer(BigInt::from(d).pow(d));
        let fact: BigInt = (1..=d).map(BigInt::from).product();
        let mink = CertifiedReal::from_rational(&(dd / fact), 128).pow_rational(&rat(2, d as i64)).unwrap();
        let mr = CertifiedReal::from_int(ds.constants.mr(d).unwrap().clone(), 128)
            .pow_rational(&rat(1, d as i64))
            .unwrap();
        assert!(mink.certainly_lt(&mr), "d = {d}");
    }
}

#[test]
fn every_named_bound_evaluates() {
    let args = BoundArgs {
        d: Some(3),
        h3: Some(1),
        dk: Some(rat(49, 1)),
        dl: Some(rat(49 * 49 * 7, 1)),
        rw: Some(rat(1, 5)),
        delta: Some(rat(1, 2)),
        x: Some(rat(3, 2)),
        w: Some(2),
    };
    for name in BOUND_NAMES {
        let (v, _) = eval_named(name, &args, 128).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert!(v.is_positive(), "{name}");
    }
    assert!(eval_named("nope", &args, 128).is_err());
    assert!(eval_named("phi2", &BoundArgs::default(), 128).is_err());
}

#[test]
fn phi2_spot_value() {
    let (v, arg) = eval_named("phi2", &BoundArgs { d: Some(7), h3: Some(9), ..Default::default() }, 128).unwrap();
    assert!(arg.is_none());
    approx::assert_abs_diff_eq!(v.to_f64(), 9.047882483, epsilon = 1e-8);
}
