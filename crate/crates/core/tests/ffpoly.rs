//! Finite-field factorisation and prime splitting.

use fpp_core::arith::primes_up_to;
use fpp_core::datasets::Dataset;
use fpp_core::ffpoly::{
    classified_places_up_to_symmetry, consistent_assignments, ddf_degree_multiset, kronecker_class, splitting_pattern,
    PrimeFieldPoly, RelativePlaceClass,
};
use num_bigint::BigInt;
use proptest::prelude::*;

fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    out
}

/// Irreducible polynomials of degree 1 and 2 over F_p by brute force.
fn small_irreducibles(p: u64) -> Vec<Vec<u64>> {
    let mut out: Vec<Vec<u64>> = (0..p).map(|c| vec![c, 1]).collect();
    for b in 0..p {
        for c in 0..p {
            if (0..p).all(|x| (x * x + b * x + c) % p != 0) {
                out.push(vec![c, b, 1]);
            }
        }
    }
    out
}

proptest! {
    #[test]
    fn ddf_recovers_product_of_distinct_factors(idx in prop::collection::btree_set(0usize..30, 1..5), pi in 0usize..3) {
        let p = [5u64, 7, 11][pi];
        let irr = small_irreducibles(p);
        let chosen: Vec<&Vec<u64>> = idx.iter().map(|&i| &irr[i % irr.len()]).collect();
        let mut distinct: Vec<&Vec<u64>> = chosen.clone();
        distinct.sort();
        distinct.dedup();
        let poly = distinct.iter().fold(vec![1u64], |acc, f| mul(&acc, f, p));
        let got = ddf_degree_multiset(&PrimeFieldPoly::new(p, poly)).unwrap();
        let mut want = std::collections::BTreeMap::new();
        for f in &distinct {
            *want.entry((f.len() - 1) as u32).or_insert(0u32) += 1;
        }
        let want: Vec<(u32, u32)> = want.into_iter().collect();
        prop_assert_eq!(got, want);
    }

    #[test]
    fn squares_are_rejected(c in 0u64..7) {
        let poly = mul(&[c, 1], &[c, 1], 7);
        prop_assert!(ddf_degree_multiset(&PrimeFieldPoly::new(7, poly)).is_err());
    }

    #[test]
    fn quadratic_splitting_follows_kronecker(ai in 0usize..11, pi in 0usize..200) {
        let ds = Dataset::bundled().unwrap();
        let pair = &ds.kq_pairs()[ai];
        let a = pair.kq_a().unwrap();
        let p = primes_up_to(1300)[pi];
        let pat = splitting_pattern(&pair.ell, p).unwrap();
        let class = kronecker_class(a, p);
        let expected = match class {
            RelativePlaceClass::SplitInL => vec![(1, 1), (1, 1)],
            RelativePlaceClass::InertInL => vec![(1, 2)],
            RelativePlaceClass::RamifiedInL => vec![(2, 1)],
        };
        prop_assert_eq!(pat.places, expected);
    }
}

#[test]
fn from_integer_poly_reduces_coefficients() {
    let f = PrimeFieldPoly::from_integer_poly(&[BigInt::from(-1), BigInt::from(0), BigInt::from(1)], 5);
    assert_eq!(ddf_degree_multiset(&f).unwrap(), vec![(1, 2)]);
}

#[test]
fn relative_classes_are_matchable_for_small_primes() {
    let ds = Dataset::bundled().unwrap();
    for pair in &ds.pairs {
        for p in primes_up_to(2000) {
            let (_, assignments) = consistent_assignments(pair, p).unwrap();
            assert!(!assignments.is_empty(), "{} at {p}", pair.label);
        }
    }
}

#[test]
fn ramified_places_have_unique_classes_up_to_symmetry() {
    let ds = Dataset::bundled().unwrap();
    for pair in ds.c_pairs() {
        for p in pair.ell.disc_primes() {
            let places = classified_places_up_to_symmetry(pair, p).unwrap();
            let pattern = splitting_pattern(&pair.k, p).unwrap();
            assert_eq!(places.len(), pattern.places.len(), "{} at {p}", pair.label);
        }
    }
}
