//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so the lines are always printed.
//! The process fails when a criterion fails that is not listed in
//! `KNOWN_FAILING`, or when a listed one unexpectedly passes.

mod common;

use std::collections::BTreeSet;
use std::time::Instant;

use fpp_core::bounds::{default_x_grid, frak_n_from_parts, odlyzko_grid_parts};
use fpp_core::census::{
    emit_report, label_key, load_report, Census, CensusConfig, CensusReport, Form, ReportFormat, Status,
};
use fpp_core::datasets::Dataset;
use fpp_core::ffpoly::{consistent_assignments, splitting_pattern};
use fpp_core::ladder::checkpoints;
use fpp_core::lvalues::{
    bernoulli_l, cor28_check, real_quadratic_zeta_m1, rel_l_minus2_exact, remark29_check, zeta_k_minus1_exact, LConfig,
    Qmax, QuadraticCharacter,
};
use fpp_core::arith::primes_up_to;
use fpp_core::volume::{exact_triple, mu_from_values, KQ_VALUES};
use num_rational::BigRational;

use common::*;

const KQ_RUNTIME_S: f64 = 30.0;
const PAIR_RUNTIME_S: f64 = 600.0;
const CHECKPOINT_RUNTIME_S: f64 = 60.0;
const CHECKPOINT_RADIUS: f64 = 5e-5;
const SPLITTING_PRIME_LIMIT: u64 = 10_000;
const FRAK_N_DEGREES: std::ops::RangeInclusive<u32> = 2..=20;
const BOUNDS_PREC: u32 = 128;

/// Criteria that do not hold with the bundled data. Each is printed as
/// FAIL; see README, "Known deviations".
const KNOWN_FAILING: [&str; 2] = ["6b", "7b"];

struct Line {
    id: &'static str,
    title: &'static str,
    pass: bool,
    detail: String,
}

fn line(out: &mut Vec<Line>, id: &'static str, title: &'static str, pass: bool, detail: String) {
    let tag = if pass { "PASS" } else { "FAIL" };
    println!("criterion {id:<3} {tag}  {title}: {detail}");
    out.push(Line { id, title, pass, detail });
}

fn fmt(q: &BigRational) -> String {
    fpp_core::arith::fmt_rational(q, true)
}

fn main() {
    let ds = Dataset::bundled().expect("bundled data");
    let lcfg = LConfig::default();
    let qmax = Qmax::default();
    let mut out = Vec::new();
    println!(
        "acceptance: P = {}, {} bits, bounds at {} bits",
        lcfg.prime_limit, lcfg.precision_bits, BOUNDS_PREC
    );

    // 1. L(-2) and mu over the rationals.
    let t = Instant::now();
    let mut kq_l = Vec::new();
    let mut bad = Vec::new();
    for &(a, l, mu) in &KQ_TABLE {
        let pair = ds.pair(&format!("a={a}")).unwrap();
        match exact_triple(pair, &lcfg, qmax, false) {
            Ok(tr) => {
                if tr.l_m2 != q(l) || tr.mu != q(mu) {
                    bad.push(format!("a={a}: {} {}", fmt(&tr.l_m2), fmt(&tr.mu)));
                }
                kq_l.push((a, pair.ell.disc.clone(), tr.l_m2));
            }
            Err(e) => bad.push(format!("a={a}: {e}")),
        }
    }
    let secs = t.elapsed().as_secs_f64();
    line(
        &mut out,
        "1",
        "eleven L(-2) and mu over Q exact",
        bad.is_empty() && kq_l.len() == KQ_VALUES.len() && secs < KQ_RUNTIME_S,
        format!("{} of 11 exact, {secs:.1} s (limit {KQ_RUNTIME_S} s) {}", 11 - bad.len(), bad.join("; ")),
    );

    // 2. The forty triples, each recovered twice.
    let t = Instant::now();
    let mut zetas = Vec::new();
    let mut bad = Vec::new();
    let mut rechecked = 0;
    for &(label, z, l, mu) in &PAIR_TABLE {
        let pair = ds.pair(label).unwrap();
        let zr = zeta_k_minus1_exact(&pair.k, &lcfg, qmax, true);
        let lr = rel_l_minus2_exact(pair, &lcfg, qmax, true);
        match (zr, lr) {
            (Ok(zr), Ok(lr)) => {
                if zr.recheck.is_some() && lr.recheck.is_some() {
                    rechecked += 1;
                }
                let m = mu_from_values(pair.d(), &zr.value, &lr.value);
                if zr.value != q(z) || lr.value != q(l) || m != q(mu) {
                    bad.push(format!("{label}: {} {} {}", fmt(&zr.value), fmt(&lr.value), fmt(&m)));
                }
                zetas.push((label, pair.k.degree, pair.k.disc.clone(), zr.value));
            }
            (Err(e), _) | (_, Err(e)) => bad.push(format!("{label}: {e}")),
        }
    }
    let secs = t.elapsed().as_secs_f64();
    line(
        &mut out,
        "2",
        "forty triples exact, two-precision re-check identical",
        bad.is_empty() && rechecked == 40 && secs < PAIR_RUNTIME_S,
        format!(
            "{} of 40 exact, {rechecked} of 40 re-checked at P = {}, {secs:.1} s (limit {PAIR_RUNTIME_S} s) {}",
            40 - bad.len(),
            lcfg.recheck().prime_limit,
            bad.join("; ")
        ),
    );

    // 3. Bernoulli numbers against reconstruction.
    let mut compared = 0;
    let mut bad = Vec::new();
    for (a, disc, l) in &kq_l {
        let d: i64 = i64::try_from(disc).unwrap();
        let oracle = QuadraticCharacter::from_discriminant(-d).and_then(|c| bernoulli_l(&c, 3));
        match oracle {
            Ok(o) if &o == l => compared += 1,
            Ok(o) => bad.push(format!("a={a}: {} vs {}", fmt(&o), fmt(l))),
            Err(e) => bad.push(format!("a={a}: {e}")),
        }
    }
    let mut real_quadratic = 0;
    for (label, degree, disc, z) in &zetas {
        let n: u32 = label[1..].parse().unwrap();
        if *degree != 2 || n > 30 {
            continue;
        }
        real_quadratic += 1;
        match real_quadratic_zeta_m1(i64::try_from(disc).unwrap()) {
            Ok(o) if &o == z => compared += 1,
            Ok(o) => bad.push(format!("{label}: {} vs {}", fmt(&o), fmt(z))),
            Err(e) => bad.push(format!("{label}: {e}")),
        }
    }
    line(
        &mut out,
        "3",
        "Bernoulli route equals reconstruction",
        bad.is_empty() && compared == 11 + real_quadratic && real_quadratic > 0,
        format!("{compared} equal (11 imaginary quadratic, {real_quadratic} real quadratic) {}", bad.join("; ")),
    );

    // Full census; its stages feed criteria 4 to 7.
    let t = Instant::now();
    let cfg = CensusConfig::default();
    let report = Census::new(&ds, cfg).run();
    let census_secs = t.elapsed().as_secs_f64();
    let report = match report {
        Ok(r) => r,
        Err(e) => {
            println!("census failed: {e}");
            std::process::exit(1);
        }
    };
    println!("census: {census_secs:.1} s");

    // 4. Pairs over the rationals and their covolumes.
    let got: BTreeSet<(u64, u64)> =
        report.tables.kq_pairs.iter().map(|r| (r.pair.trim_start_matches("a=").parse().unwrap(), r.q)).collect();
    let want: BTreeSet<(u64, u64)> = KQ_PAIRS.iter().map(|&(a, p, _)| (a, p)).collect();
    let mut covol: Vec<(u64, BigRational)> = report
        .tables
        .kq_pairs
        .iter()
        .map(|r| (r.pair.trim_start_matches("a=").parse().unwrap(), r.mu_lambda.clone()))
        .collect();
    covol.sort();
    let want_covol: Vec<(u64, BigRational)> = KQ_PAIRS.iter().map(|&(a, _, c)| (a, q(c))).collect();
    line(
        &mut out,
        "4",
        "pairs (a, p) and covolumes",
        got == want && covol == want_covol,
        format!(
            "{:?}, covolumes {}",
            got,
            covol.iter().map(|(_, c)| fmt(c)).collect::<Vec<_>>().join(", ")
        ),
    );

    // 5. q and chi(Lambda) for the five pairs.
    let mut bad = Vec::new();
    let mut shown = Vec::new();
    for &(label, _, qv, chi) in &DIVISION_TABLE {
        let rows: Vec<_> = report.tables.division.iter().filter(|r| r.pair == label).collect();
        match rows.as_slice() {
            [r] => {
                shown.push(format!("{label} q={} chi={}", r.q, fmt(&r.chi_lambda)));
                if r.q != qv || r.chi_lambda != q(chi) {
                    bad.push(label);
                }
            }
            _ => bad.push(label),
        }
    }
    line(&mut out, "5", "q and chi(Lambda) for C2 C10 C18 C31 C39", bad.is_empty(), shown.join(", "));

    // 6. Filters.
    let filtered: BTreeSet<&str> =
        report.stage("pair-filter").unwrap().outputs.iter().map(String::as_str).collect();
    let want: BTreeSet<&str> = FILTERED.into_iter().collect();
    line(
        &mut out,
        "6a",
        "power-of-3 filter yields the fifteen pairs",
        filtered == want,
        format!("{} pairs: {}", filtered.len(), sorted_labels(filtered.iter().copied())),
    );
    let survivors: BTreeSet<String> =
        report.stage("division-algebra-search").unwrap().outputs.iter().cloned().collect();
    let want: BTreeSet<String> = DIVISION_TABLE
        .iter()
        .map(|&(label, p, qv, _)| format!("{label} T0=v{p}(q={qv})"))
        .collect();
    let extra: Vec<&String> = survivors.difference(&want).collect();
    let missing: Vec<&String> = want.difference(&survivors).collect();
    line(
        &mut out,
        "6b",
        "division-algebra search yields exactly the five pairs",
        survivors == want,
        format!("{} survivors; extra {:?}; missing {:?}", survivors.len(), extra, missing),
    );

    // 7. Class counts.
    let (kq_confirmed, c_confirmed) = confirmed_split(&report);
    let status_ok = HERMITIAN_OPEN.iter().all(|p| {
        report.entries.iter().any(|e| e.pair == *p && e.form == Form::Hermitian && e.status == Status::Open)
    }) && EXCLUDED.iter().all(|p| {
        report.entries.iter().any(|e| e.pair == *p && e.status == Status::Excluded && e.citation.is_some())
    });
    line(
        &mut out,
        "7a",
        "confirmed classes 12 + 5, hermitian open, exclusions cited",
        kq_confirmed == CONFIRMED_KQ && c_confirmed == CONFIRMED_C && report.total_confirmed == 17 && status_ok,
        format!("{kq_confirmed} + {c_confirmed} = {} confirmed", report.total_confirmed),
    );
    let open: Vec<String> = report
        .entries
        .iter()
        .filter(|e| e.status == Status::Open)
        .map(|e| format!("{}({})", e.pair, e.class_count))
        .collect();
    line(
        &mut out,
        "7b",
        "upper total 20",
        report.total_upper == UPPER_TOTAL,
        format!("upper total {}; open {}", report.total_upper, open.join(" ")),
    );

    // 8. Numeric checkpoints of the bounds.
    let t = Instant::now();
    let cps = checkpoints(&ds.constants, BOUNDS_PREC).expect("checkpoints");
    let rows_ok = {
        let (_, rows, _) = Census::new(&ds, cfg).stage_degree_elimination().expect("ladder");
        DEGREE_ROWS.iter().all(|&(d, b, h3, x)| {
            rows.iter().any(|r| r.d == d && r.root_bound == b && r.h3 == h3 && r.x_d == x)
        }) && rows.len() == DEGREE_ROWS.len()
    };
    let secs = t.elapsed().as_secs_f64();
    let failing: Vec<&str> = cps
        .iter()
        .filter(|c| !(c.certified() && c.digits_agree() && c.radius_below(CHECKPOINT_RADIUS)))
        .map(|c| c.id.as_str())
        .collect();
    let max_rad = cps.iter().map(|c| c.value.rad_f64()).fold(0.0, f64::max);
    line(
        &mut out,
        "8",
        "bound checkpoints certified with agreeing digits",
        failing.is_empty() && rows_ok && secs < CHECKPOINT_RUNTIME_S,
        format!(
            "{} checkpoints, max radius {max_rad:.1e} (limit {CHECKPOINT_RADIUS:.0e}), degree rows {}, {secs:.1} s \
             (limit {CHECKPOINT_RUNTIME_S} s) {}",
            cps.len(),
            if rows_ok { "match" } else { "differ" },
            failing.join(" ")
        ),
    );

    // 9a. No decision changes when every precision is doubled.
    let doubled = Census::new(&ds, cfg.doubled()).run().expect("doubled census");
    let a = report.decisions();
    let b = doubled.decisions();
    let flips = a.iter().zip(&b).filter(|(x, y)| x != y).count() + a.len().abs_diff(b.len());
    line(
        &mut out,
        "9a",
        "no decision flips under precision doubling",
        flips == 0,
        format!("{} decisions compared, {flips} differ", a.len()),
    );

    // 9b. Splitting degrees add up to the field degree.
    let primes = primes_up_to(SPLITTING_PRIME_LIMIT);
    let mut checked = 0usize;
    let mut bad = Vec::new();
    for f in &ds.fields {
        for &p in &primes {
            match splitting_pattern(f, p) {
                Ok(s) if s.degree() == f.degree => checked += 1,
                Ok(s) => bad.push(format!("{} at {p}: {:?}", f.label, s.places)),
                Err(e) => bad.push(format!("{} at {p}: {e}", f.label)),
            }
        }
    }
    for pair in &ds.pairs {
        for &p in &primes {
            match consistent_assignments(pair, p) {
                Ok((_, a)) if !a.is_empty() => {}
                Ok(_) => bad.push(format!("{} at {p}: no relative assignment", pair.label)),
                Err(e) => bad.push(format!("{} at {p}: {e}", pair.label)),
            }
        }
    }
    line(
        &mut out,
        "9b",
        "splitting-degree conservation for p <= 10^4",
        bad.is_empty(),
        format!("{} fields x {} primes, {checked} patterns, {} pairs consistent {}", ds.fields.len(), primes.len(), ds.pairs.len(), bad.join("; ")),
    );

    // 9c. The lower bounds on zeta_k(2) and L(3).
    let mut bad = Vec::new();
    for pair in ds.c_pairs() {
        let ok = matches!(cor28_check(pair, &lcfg), Ok((true, true)))
            && matches!(remark29_check(&pair.k, &lcfg), Ok(true))
            && matches!(remark29_check(&pair.ell, &lcfg), Ok(true));
        if !ok {
            bad.push(pair.label.clone());
        }
    }
    line(
        &mut out,
        "9c",
        "zeta_k(2), L(3) inequalities certified for all forty pairs",
        bad.is_empty() && ds.c_pairs().len() == 40,
        format!("{} pairs certified {}", 40 - bad.len(), bad.join(" ")),
    );

    // 9d. The Odlyzko-type bound increases with the degree.
    let parts = odlyzko_grid_parts(&default_x_grid(), BOUNDS_PREC).expect("grid");
    let vals: Vec<_> = FRAK_N_DEGREES.map(|d| frak_n_from_parts(d, &parts).expect("frak_n").1).collect();
    let increasing = vals.windows(2).all(|w| w[0].certainly_lt(&w[1]));
    line(
        &mut out,
        "9d",
        "frak N(d) increasing on d = 2..20",
        increasing,
        format!("{:.4} .. {:.4}", vals[0].to_f64(), vals[vals.len() - 1].to_f64()),
    );

    // Report emission for the full census.
    let csv = emit_report(&report, ReportFormat::Csv).expect("csv");
    let json = emit_report(&report, ReportFormat::Json).expect("json");
    let round_trip = load_report(&json).map(|r| r == report).unwrap_or(false);
    line(
        &mut out,
        "r",
        "report emission",
        csv.lines().count() == 41 && round_trip,
        format!("csv {} data rows, json round trip {}", csv.lines().count() - 1, if round_trip { "identical" } else { "differs" }),
    );

    summarise(&out);
}

fn sorted_labels<'a>(labels: impl Iterator<Item = &'a str>) -> String {
    let mut v: Vec<&str> = labels.collect();
    v.sort_by_key(|l| label_key(l));
    v.join(" ")
}

fn confirmed_split(r: &CensusReport) -> (u64, u64) {
    let mut kq = 0;
    let mut c = 0;
    for e in r.entries.iter().filter(|e| e.status == Status::Confirmed) {
        if e.pair.starts_with("a=") {
            kq += e.class_count;
        } else {
            c += e.class_count;
        }
    }
    (kq, c)
}

fn summarise(out: &[Line]) {
    let failed: Vec<&Line> = out.iter().filter(|l| !l.pass).collect();
    let unexpected: Vec<&str> = failed.iter().map(|l| l.id).filter(|id| !KNOWN_FAILING.contains(id)).collect();
    let fixed: Vec<&str> =
        KNOWN_FAILING.iter().copied().filter(|id| out.iter().any(|l| l.id == *id && l.pass)).collect();
    println!(
        "acceptance: {} of {} passed; failing {:?} (known {:?})",
        out.len() - failed.len(),
        out.len(),
        failed.iter().map(|l| l.id).collect::<Vec<_>>(),
        KNOWN_FAILING
    );
    for l in &failed {
        println!("  FAIL {} {}: {}", l.id, l.title, l.detail);
    }
    if !unexpected.is_empty() || !fixed.is_empty() {
        println!("acceptance: unexpected failures {unexpected:?}; known failures now passing {fixed:?}");
        std::process::exit(1);
    }
}
