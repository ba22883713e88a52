//! Census stages on a reduced dataset: traces, statuses and report emission.

mod common;

use std::sync::OnceLock;

use fpp_core::census::{
    emit_report, emit_stage, label_key, load_report, search_configurations, Census, CensusConfig, CensusReport, Form,
    ReportFormat, SearchSpace, Status, SCHEMA, STAGES,
};
use fpp_core::datasets::Dataset;
use fpp_core::lvalues::LConfig;

const KEPT: [&str; 6] = ["C1", "C2", "C5", "C10", "C18", "C21"];
const PAIR_AXIOMS: [&str; 3] = ["hermitian_candidate", "hermitian_pair_excluded", "division_algebra_pair_excluded"];

fn reduced() -> Dataset {
    let mut ds = Dataset::bundled().unwrap();
    ds.pairs.retain(|p| p.is_over_q() || KEPT.contains(&p.label.as_str()));
    ds.constants.axioms.retain(|a| {
        !PAIR_AXIOMS.contains(&a.name.as_str()) || KEPT.contains(&format!("C{}", a.key).as_str())
    });
    ds
}

fn config() -> CensusConfig {
    CensusConfig { lvalues: LConfig { prime_limit: 300_000, precision_bits: 160 }, ..Default::default() }
}

fn report() -> &'static (Dataset, CensusReport) {
    static R: OnceLock<(Dataset, CensusReport)> = OnceLock::new();
    R.get_or_init(|| {
        let ds = reduced();
        let r = Census::new(&ds, config()).run().unwrap();
        (ds, r)
    })
}

#[test]
fn stages_are_complete_and_sorted() {
    let (_, r) = report();
    assert_eq!(r.schema, SCHEMA);
    let names: Vec<&str> = r.stages.iter().map(|s| s.stage.as_str()).collect();
    assert_eq!(names, STAGES);
    for s in &r.stages {
        let keys: Vec<_> = s.cuts.iter().map(|c| label_key(&c.candidate)).collect();
        assert!(keys.windows(2).all(|w| w[0] <= w[1]), "{}", s.stage);
        for c in s.cuts.iter().filter(|c| !c.kept) {
            assert!(!c.detail.is_empty(), "{}: {} rejected without reason", s.stage, c.candidate);
        }
    }
    assert!(r.checkpoints_certified);
}

#[test]
fn rational_stages_reproduce_the_published_sets() {
    let (_, r) = report();
    let kq = r.stage("kq-discriminant-cut").unwrap();
    let want: Vec<String> = common::KQ_TABLE.iter().map(|(a, _, _)| format!("a={a}")).collect();
    assert_eq!(kq.outputs, want);
    let pairs = &r.stage("kq-pairs").unwrap().outputs;
    let want: Vec<String> = common::KQ_PAIRS.iter().map(|(a, p, _)| format!("({a},{p})")).collect();
    assert_eq!(pairs, &want);
    let kq_classes: u64 = r
        .entries
        .iter()
        .filter(|e| e.pair.starts_with("a=") && e.status == Status::Confirmed)
        .map(|e| e.class_count)
        .sum();
    assert_eq!(kq_classes, common::CONFIRMED_KQ);
}

#[test]
fn reduced_pair_statuses() {
    let (_, r) = report();
    let filter = &r.stage("pair-filter").unwrap().outputs;
    assert_eq!(filter, &["C1", "C2", "C10", "C18", "C21"]);
    let division: Vec<&str> = r.tables.division.iter().map(|d| d.pair.as_str()).collect();
    assert_eq!(division, ["C2", "C10", "C18"]);
    let find = |pair: &str, form: Form| r.entries.iter().find(|e| e.pair == pair && e.form == form).unwrap();
    assert_eq!(find("C1", Form::Hermitian).status, Status::Open);
    assert_eq!(find("C18", Form::Hermitian).status, Status::Open);
    let c21 = find("C21", Form::Hermitian);
    assert_eq!(c21.status, Status::Excluded);
    assert!(c21.citation.is_some());
    assert_eq!(find("C18", Form::CubicDivisionAlgebra).class_count, 1);
    assert_eq!(find("C2", Form::CubicDivisionAlgebra).class_count, 2);
    assert_eq!(find("C10", Form::CubicDivisionAlgebra).class_count, 2);
    assert_eq!(r.total_confirmed, 12 + 5);
}

#[test]
fn json_round_trip_and_other_formats() {
    let (_, r) = report();
    let json = emit_report(r, ReportFormat::Json).unwrap();
    assert_eq!(&load_report(&json).unwrap(), r);
    assert!(load_report(&json.replace(SCHEMA, "fppcensus/0")).is_err());
    let csv = emit_report(r, ReportFormat::Csv).unwrap();
    assert_eq!(csv.lines().count(), 1 + r.tables.pairs.len());
    assert!(csv.starts_with("label,k,ell,zeta_k_m1,l_m2,mu,mu_power_of_3,matches_table"));
    let md = emit_report(r, ReportFormat::Markdown).unwrap();
    assert!(md.contains("| 6 |") || md.contains("-46"), "markdown lacks the rational table");
    for s in &r.stages {
        assert!(!emit_stage(s, ReportFormat::Markdown).unwrap().is_empty());
        let j = emit_stage(s, ReportFormat::Json).unwrap();
        assert_eq!(&serde_json::from_str::<fpp_core::census::StageTrace>(&j).unwrap(), s);
    }
    assert!(ReportFormat::parse("yaml").is_err());
}

#[test]
fn runs_are_deterministic() {
    let (ds, r) = report();
    let again = Census::new(ds, config()).run().unwrap();
    assert_eq!(&again, r);
}

#[test]
fn single_stage_matches_full_run() {
    let (ds, r) = report();
    let c = Census::new(ds, config());
    for name in ["kq-discriminant-cut", "pair-filter"] {
        assert_eq!(&c.run_stage(name).unwrap(), r.stage(name).unwrap());
    }
    assert!(c.run_stage("nope").is_err());
}

#[test]
fn anisotropic_search_is_contained_in_the_full_search() {
    let ds = reduced();
    let pair = ds.pair("C2").unwrap();
    let mu = pair.expected.mu.clone().unwrap();
    let small = search_configurations(pair, &mu, 1, SearchSpace::AnisotropicAndRamified).unwrap();
    let full = search_configurations(pair, &mu, 1, SearchSpace::AllKinds).unwrap();
    assert!(small.examined <= full.examined);
    let kept_small: Vec<String> = small.kept().map(|c| c.describe()).collect();
    let kept_full: Vec<String> = full.kept().map(|c| c.describe()).collect();
    for k in &kept_small {
        assert!(kept_full.contains(k), "{k}");
    }
    assert!(kept_small.iter().any(|k| k.contains("v2")));
}
