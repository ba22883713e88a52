//! Bundled tables: loading, validation and text round trips.

mod common;

use fpp_core::datasets::{
    parse_field_table, parse_pair_table, validate_constants, write_field_table, write_pair_table, Dataset,
};
use fpp_core::ffpoly::places_over;

#[test]
fn bundled_matches_source_directory() {
    let a = Dataset::bundled().unwrap();
    let b = Dataset::load(&Dataset::source_dir()).unwrap();
    assert_eq!(a.fields, b.fields);
    assert_eq!(a.pairs, b.pairs);
    assert_eq!(a.constants, b.constants);
}

#[test]
fn every_record_validates() {
    let ds = Dataset::bundled().unwrap();
    for f in &ds.fields {
        f.validate().unwrap_or_else(|e| panic!("{}: {e}", f.label));
    }
    for p in &ds.pairs {
        p.validate().unwrap_or_else(|e| panic!("{}: {e}", p.label));
    }
    let report = validate_constants(&ds.constants);
    assert!(report.all_passed(), "{:?}", report.failures());
}

#[test]
fn tables_round_trip_through_text() {
    let ds = Dataset::bundled().unwrap();
    let fields: Vec<_> = ds.fields.iter().map(|f| (**f).clone()).collect();
    let text = write_field_table(&fields);
    let back = parse_field_table(&text, "round trip").unwrap();
    assert_eq!(back, fields);
    let text = write_pair_table(&ds.pairs);
    let back = parse_pair_table(&text, "round trip", &fields).unwrap();
    assert_eq!(back, ds.pairs);
}

#[test]
fn published_values_are_bundled() {
    let ds = Dataset::bundled().unwrap();
    assert_eq!(ds.kq_pairs().len(), 11);
    assert_eq!(ds.c_pairs().len(), 40);
    for &(a, l, mu) in &common::KQ_TABLE {
        let p = ds.pair(&format!("a={a}")).unwrap();
        assert_eq!(p.expected.l_m2.as_ref(), Some(&common::q(l)), "a={a}");
        assert_eq!(p.expected.mu.as_ref(), Some(&common::q(mu)), "a={a}");
    }
    for &(label, z, l, mu) in &common::PAIR_TABLE {
        let p = ds.pair(label).unwrap();
        assert_eq!(p.expected.zeta_k_m1.as_ref(), Some(&common::q(z)), "{label}");
        assert_eq!(p.expected.l_m2.as_ref(), Some(&common::q(l)), "{label}");
        assert_eq!(p.expected.mu.as_ref(), Some(&common::q(mu)), "{label}");
    }
}

#[test]
fn filtered_fields_have_trivial_3_part() {
    let ds = Dataset::bundled().unwrap();
    for label in common::FILTERED {
        assert_eq!(ds.pair(label).unwrap().ell.h3_required().unwrap(), 1, "{label}");
    }
}

#[test]
fn place_lists_are_deterministic() {
    let ds = Dataset::bundled().unwrap();
    for f in &ds.fields {
        for p in [2u64, 3, 5, 7, 41] {
            assert_eq!(places_over(f, p).unwrap(), places_over(f, p).unwrap());
        }
    }
}

#[test]
fn malformed_tables_are_rejected() {
    let header = "label\tdegree\tr1\tr2\tpoly\tdisc\th\tn3\th3\treg_over_w\tramified\ttorsion\n";
    let bad_degree = format!("{header}X\t3\t1\t0\t-2,0,1\t8\t1\t-\t-\t-\t2:2/1\t-\n");
    assert!(parse_field_table(&bad_degree, "bad").is_err());
    let bad_number = format!("{header}X\t2\t2\t0\t-2,zero,1\t8\t1\t-\t-\t-\t2:2/1\t-\n");
    assert!(parse_field_table(&bad_number, "bad").is_err());
}
