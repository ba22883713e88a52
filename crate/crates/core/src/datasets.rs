//! Loaders and validators for the bundled tables: number fields, candidate
//! pairs and analytic constants.

use crate::arith::{factor_u64, is_power_of_3, is_prime, poly_discriminant, valuation};
use crate::error::{Error, Result};
use crate::real::parse_rational;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::sync::Arc;

const FIELDS_TSV: &str = include_str!("../../../data/fields.tsv");
const PAIRS_TSV: &str = include_str!("../../../data/pairs.tsv");
const CONSTANTS_TSV: &str = include_str!("../../../data/constants.tsv");

const FIELD_HEADER: [&str; 12] =
    ["label", "degree", "r1", "r2", "poly", "disc", "h", "n3", "h3", "reg_over_w", "ramified", "torsion"];
const PAIR_HEADER: [&str; 7] = ["label", "k", "ell", "rel_disc_norm", "zeta_k_m1", "l_m2", "mu"];
const CONSTANT_HEADER: [&str; 4] = ["kind", "key", "value", "extra"];

/// Minimal discriminants of totally real fields of degree 2..8.
pub const MR_REFERENCE: [(u32, u64); 7] =
    [(2, 5), (3, 49), (4, 725), (5, 14641), (6, 300125), (7, 20134393), (8, 282300416)];

/// Decomposition `p O = prod P_i^{e_i}` with residue degrees `f_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RamifiedPrimeDecomposition {
    pub p: u64,
    pub factors: Vec<(u32, u32)>,
}

impl RamifiedPrimeDecomposition {
    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|&(e, f)| e * f).sum()
    }

    pub fn is_ramified(&self) -> bool {
        self.factors.iter().any(|&(e, _)| e > 1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NumberFieldRecord {
    pub label: String,
    pub degree: u32,
    pub r1: u32,
    pub r2: u32,
    pub poly: Vec<BigInt>,
    pub disc: BigInt,
    pub class_number: Option<u64>,
    pub n3: Option<u64>,
    pub h3: Option<u64>,
    pub reg_over_w: Option<BigRational>,
    pub ramified: Vec<RamifiedPrimeDecomposition>,
    pub torsion: Option<String>,
}

impl NumberFieldRecord {
    pub fn is_totally_real(&self) -> bool {
        self.r2 == 0
    }

    pub fn is_totally_complex(&self) -> bool {
        self.r1 == 0
    }

    pub fn ramified_at(&self, p: u64) -> Option<&RamifiedPrimeDecomposition> {
        self.ramified.iter().find(|r| r.p == p)
    }

    /// Primes dividing the absolute discriminant.
    pub fn disc_primes(&self) -> Vec<u64> {
        self.ramified.iter().filter(|r| r.is_ramified()).map(|r| r.p).collect()
    }

    pub fn h3_required(&self) -> Result<u64> {
        self.h3.ok_or_else(|| missing(&self.label, "h3"))
    }

    pub fn n3_required(&self) -> Result<u64> {
        self.n3.ok_or_else(|| missing(&self.label, "n3"))
    }

    pub fn class_number_required(&self) -> Result<u64> {
        self.class_number.ok_or_else(|| missing(&self.label, "h"))
    }

    pub fn reg_over_w_required(&self) -> Result<&BigRational> {
        self.reg_over_w.as_ref().ok_or_else(|| missing(&self.label, "reg_over_w"))
    }

    /// Checks the record invariants.
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::Invariant { label: self.label.clone(), message: m });
        let n = self.degree as usize;
        if n == 0 || self.poly.len() != n + 1 {
            return bad(format!("polynomial degree {} differs from field degree {n}", self.poly.len() as i64 - 1));
        }
        if !self.poly[n].is_one() {
            return bad("polynomial is not monic".into());
        }
        if self.r1 + 2 * self.r2 != self.degree {
            return bad("signature does not match the degree".into());
        }
        if !self.disc.is_positive() {
            return bad("discriminant must be positive".into());
        }
        for (name, v) in [("n3", self.n3), ("h3", self.h3)] {
            if let Some(v) = v {
                if !is_power_of_3(&BigInt::from(v)) {
                    return bad(format!("{name} = {v} is not a power of 3"));
                }
            }
        }
        if let (Some(h3), Some(n3)) = (self.h3, self.n3) {
            if n3 % h3 != 0 {
                return bad(format!("h3 = {h3} does not divide n3 = {n3}"));
            }
        }
        if let (Some(n3), Some(h)) = (self.n3, self.class_number) {
            if h % n3 != 0 {
                return bad(format!("n3 = {n3} does not divide h = {h}"));
            }
        }
        if let (Some(h3), Some(h)) = (self.h3, self.class_number) {
            if h % h3 != 0 {
                return bad(format!("h3 = {h3} does not divide h = {h}"));
            }
        }
        if let Some(rw) = &self.reg_over_w {
            if rw.is_negative() {
                return bad("reg_over_w must be nonnegative".into());
            }
        }
        let pdisc = if n == 1 { BigInt::one() } else { poly_discriminant(&self.poly) };
        if !(&pdisc % &self.disc).is_zero() {
            return bad("field discriminant does not divide the polynomial discriminant".into());
        }
        let index_sq = (&pdisc / &self.disc).abs();
        let index = index_sq.sqrt();
        if &index * &index != index_sq {
            return bad("polynomial discriminant / field discriminant is not a square".into());
        }
        let mut rest = pdisc.abs();
        let mut seen = Vec::new();
        for r in &self.ramified {
            if !is_prime(r.p) {
                return bad(format!("{} is not prime", r.p));
            }
            if seen.contains(&r.p) {
                return bad(format!("prime {} listed twice", r.p));
            }
            seen.push(r.p);
            if r.degree() != self.degree {
                return bad(format!("sum of e*f over {} is {} (degree {})", r.p, r.degree(), self.degree));
            }
            let pb = BigInt::from(r.p);
            if !(&rest % &pb).is_zero() {
                return bad(format!("listed prime {} does not divide the polynomial discriminant", r.p));
            }
            while (&rest % &pb).is_zero() {
                rest /= &pb;
            }
            let vd = if (&self.disc % &pb).is_zero() { valuation(&self.disc, r.p) } else { 0 };
            if r.is_ramified() != (vd > 0) {
                return bad(format!("ramification at {} disagrees with the discriminant", r.p));
            }
            let tame: u32 = r.factors.iter().map(|&(e, f)| (e - 1) * f).sum();
            let all_tame = r.factors.iter().all(|&(e, _)| e as u64 % r.p != 0);
            if (all_tame && vd != tame) || (!all_tame && vd <= tame) {
                return bad(format!("discriminant valuation {vd} at {} inconsistent with e/f data", r.p));
            }
        }
        if !rest.is_one() {
            return bad(format!("primes of the polynomial discriminant lack bundled data (cofactor {rest})"));
        }
        Ok(())
    }
}

fn missing(label: &str, field: &str) -> Error {
    Error::MissingDatum { label: label.into(), field: field.into() }
}

/// Published exact values attached to a pair.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectedValues {
    pub zeta_k_m1: Option<BigRational>,
    pub l_m2: Option<BigRational>,
    pub mu: Option<BigRational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldPairRecord {
    pub label: String,
    pub k: Arc<NumberFieldRecord>,
    pub ell: Arc<NumberFieldRecord>,
    pub rel_disc_norm: BigInt,
    pub expected: ExpectedValues,
}

impl FieldPairRecord {
    /// Degree of `k` over the rationals.
    pub fn d(&self) -> u32 {
        self.k.degree
    }

    pub fn is_over_q(&self) -> bool {
        self.k.degree == 1
    }

    /// For `k = Q`, the squarefree `a` with `ell = Q(sqrt(-a))`.
    pub fn kq_a(&self) -> Option<u64> {
        self.label.strip_prefix("a=").and_then(|s| s.parse().ok())
    }

    pub fn validate(&self) -> Result<()> {
        if self.ell.degree != 2 * self.k.degree {
            return Err(Error::Invariant {
                label: self.label.clone(),
                message: "ell must have twice the degree of k".into(),
            });
        }
        if !self.k.is_totally_real() || !self.ell.is_totally_complex() {
            return Err(Error::Invariant {
                label: self.label.clone(),
                message: "k must be totally real and ell totally complex".into(),
            });
        }
        let dk2 = &self.k.disc * &self.k.disc;
        if !(&self.ell.disc % &dk2).is_zero() {
            return Err(Error::Divisibility {
                pair: self.label.clone(),
                dk2: dk2.to_string(),
                dl: self.ell.disc.to_string(),
            });
        }
        if &self.rel_disc_norm * &dk2 != self.ell.disc {
            return Err(Error::Invariant {
                label: self.label.clone(),
                message: format!("rel_disc_norm {} != D_ell / D_k^2", self.rel_disc_norm),
            });
        }
        Ok(())
    }
}

/// Comparison used by a root-discriminant bound entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    /// Tabulated value.
    Eq,
    /// Strict lower bound.
    Gt,
    /// Non-strict lower bound.
    Ge,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NcEntry {
    pub n0: u64,
    pub value: BigRational,
    pub relation: Relation,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FriedmanEntry {
    pub complex_places: u32,
    pub rw: BigRational,
    pub threshold: BigRational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AppendixTriple {
    pub disc: u64,
    pub h: u64,
    pub n3: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Axiom {
    pub key: BigInt,
    pub value: Option<BigInt>,
    pub name: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MrRange {
    pub dmin: u32,
    pub dmax: u32,
    pub value: BigRational,
}

/// Tabulated analytic constants and externally established facts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalyticConstantTables {
    pub nc: Vec<NcEntry>,
    pub mc: BTreeMap<u64, BigRational>,
    pub mr: BTreeMap<u32, BigInt>,
    pub mr_range: Vec<MrRange>,
    pub friedman_rw: BTreeMap<u32, FriedmanEntry>,
    pub friedman_general: Option<BigRational>,
    pub friedman_exceptions: Vec<(i64, String)>,
    pub regulator_k: BTreeMap<u32, BigRational>,
    pub zimmert: Option<(BigRational, BigRational)>,
    pub slavutskii: Option<(BigRational, BigRational)>,
    pub appendix: Vec<AppendixTriple>,
    pub axioms: Vec<Axiom>,
}

impl AnalyticConstantTables {
    pub fn nc(&self, n0: u64) -> Result<&NcEntry> {
        self.nc.iter().find(|e| e.n0 == n0).ok_or_else(|| missing("constants", &format!("nc {n0}")))
    }

    pub fn mc(&self, n0: u64) -> Result<&BigRational> {
        self.mc.get(&n0).ok_or_else(|| missing("constants", &format!("mc {n0}")))
    }

    pub fn mr(&self, d: u32) -> Result<&BigInt> {
        self.mr.get(&d).ok_or_else(|| missing("constants", &format!("mr {d}")))
    }

    pub fn friedman(&self, r2: u32) -> Result<&FriedmanEntry> {
        self.friedman_rw.get(&r2).ok_or_else(|| missing("constants", &format!("friedman {r2}")))
    }

    pub fn axiom(&self, name: &str) -> Result<&Axiom> {
        self.axioms.iter().find(|a| a.name == name).ok_or_else(|| missing("constants", &format!("axiom {name}")))
    }

    /// Every axiom row with the given name, in file order.
    pub fn axioms_named<'a>(&'a self, name: &'a str) -> impl Iterator<Item = &'a Axiom> + 'a {
        self.axioms.iter().filter(move |a| a.name == name)
    }

    pub fn appendix_entry(&self, disc: u64) -> Option<&AppendixTriple> {
        self.appendix.iter().find(|t| t.disc == disc)
    }
}

/// Outcome of one consistency check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }

    fn push(&mut self, name: &str, passed: bool, detail: String) {
        self.checks.push(Check { name: name.into(), passed, detail });
    }
}

/// Cross-checks the constant tables.
pub fn validate_constants(t: &AnalyticConstantTables) -> ValidationReport {
    let mut r = ValidationReport::default();
    let mr_ok = MR_REFERENCE.iter().all(|&(d, v)| t.mr.get(&d) == Some(&BigInt::from(v))) && t.mr.len() == 7;
    let detail = if mr_ok {
        "M_r(2..8) match".to_string()
    } else {
        let diffs: Vec<String> = MR_REFERENCE
            .iter()
            .filter(|&&(d, v)| t.mr.get(&d) != Some(&BigInt::from(v)))
            .map(|&(d, v)| format!("d={d}: expected {v}, found {}", t.mr.get(&d).map_or("-".into(), |x| x.to_string())))
            .collect();
        format!("Mr mismatch: {}", diffs.join("; "))
    };
    r.push("mr_table", mr_ok, detail);

    let count = t.appendix.len();
    r.push("appendix_count", count == 25, format!("appendix has {count} entries (expected 25)"));

    let bad_triples: Vec<String> = t
        .appendix
        .iter()
        .filter(|a| a.h == 0 || a.n3 == 0 || a.h % a.n3 != 0 || !is_power_of_3(&BigInt::from(a.n3)))
        .map(|a| format!("({}, {}, {})", a.disc, a.h, a.n3))
        .collect();
    r.push(
        "appendix_triples",
        bad_triples.is_empty(),
        if bad_triples.is_empty() { "n3 is a power of 3 dividing h".into() } else { bad_triples.join(", ") },
    );

    let sorted = t.appendix.windows(2).all(|w| w[0].disc < w[1].disc);
    let in_range = t.appendix.iter().all(|a| a.disc <= 79);
    r.push("appendix_order", sorted && in_range, "discriminants strictly increasing and <= 79".into());

    let fundamental = t.appendix.iter().all(|a| is_fundamental_discriminant(-(a.disc as i64)));
    r.push("appendix_fundamental", fundamental, "every entry is a fundamental discriminant".into());

    let mut nc = t.nc.clone();
    nc.sort_by_key(|e| e.n0);
    let nc_mono = nc.windows(2).all(|w| w[0].value <= w[1].value);
    r.push("nc_monotone", nc_mono && !nc.is_empty(), format!("{} entries nondecreasing in degree", nc.len()));

    let mc_ok = t.mc.get(&4000) == Some(&BigRational::new(217825.into(), 10000.into()));
    r.push("mc4000", mc_ok, "M_c(4000) = 21.7825".into());

    let fr_ok = (2..=7).all(|d| t.friedman_rw.contains_key(&d));
    r.push("friedman_rw", fr_ok, "R/w bounds for 2..7 complex places".into());

    let exc = t.friedman_exceptions.len();
    r.push("friedman_exceptions", exc == 9, format!("{exc} exceptional discriminants (expected 9)"));

    let zs = t.zimmert.is_some() && t.slavutskii.is_some();
    r.push("regulator_constants", zs, "Zimmert and Slavutskii constants present".into());
    r
}

/// Whether `d` is the discriminant of a quadratic field.
pub fn is_fundamental_discriminant(d: i64) -> bool {
    if d == 0 || d == 1 {
        return false;
    }
    let m4 = d.rem_euclid(4);
    let sqfree = |n: i64| factor_u64(n.unsigned_abs()).iter().all(|&(_, e)| e == 1);
    if m4 == 1 {
        return sqfree(d);
    }
    if m4 == 0 {
        let m = d / 4;
        let mm = m.rem_euclid(4);
        return (mm == 2 || mm == 3) && sqfree(m);
    }
    false
}

/// All tables together.
#[derive(Clone, Debug)]
pub struct Dataset {
    pub fields: Vec<Arc<NumberFieldRecord>>,
    pub pairs: Vec<FieldPairRecord>,
    pub constants: AnalyticConstantTables,
}

impl Dataset {
    /// Tables compiled into the library.
    pub fn bundled() -> Result<Self> {
        let fields = parse_field_table(FIELDS_TSV, "fields.tsv")?;
        let pairs = parse_pair_table(PAIRS_TSV, "pairs.tsv", &fields)?;
        let constants = parse_constants(CONSTANTS_TSV, "constants.tsv")?;
        Ok(Dataset { fields: fields.into_iter().map(Arc::new).collect(), pairs, constants })
    }

    /// Tables read from `dir/{fields,pairs,constants}.tsv`.
    pub fn load(dir: &Path) -> Result<Self> {
        let fields = load_field_table(&dir.join("fields.tsv"))?;
        let pairs = load_pair_table(&dir.join("pairs.tsv"), &fields)?;
        let constants = load_constants(&dir.join("constants.tsv"))?;
        Ok(Dataset { fields: fields.into_iter().map(Arc::new).collect(), pairs, constants })
    }

    /// Path of the source data directory of this crate.
    pub fn source_dir() -> PathBuf {
        Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data")
    }

    pub fn pair(&self, label: &str) -> Result<&FieldPairRecord> {
        self.pairs.iter().find(|p| p.label == label).ok_or_else(|| Error::unknown("pair", label))
    }

    pub fn field(&self, label: &str) -> Result<&Arc<NumberFieldRecord>> {
        self.fields.iter().find(|f| f.label == label).ok_or_else(|| Error::unknown("field", label))
    }

    /// The k = Q pairs, in table order.
    pub fn kq_pairs(&self) -> Vec<&FieldPairRecord> {
        self.pairs.iter().filter(|p| p.is_over_q()).collect()
    }

    /// The pairs C1..C40, in table order.
    pub fn c_pairs(&self) -> Vec<&FieldPairRecord> {
        self.pairs.iter().filter(|p| !p.is_over_q()).collect()
    }
}

fn reader(text: &str) -> csv::Reader<&[u8]> {
    csv::ReaderBuilder::new()
        .delimiter(b'\t')
        .comment(Some(b'#'))
        .has_headers(true)
        .flexible(false)
        .from_reader(text.as_bytes())
}

struct Cursor<'a> {
    path: &'a str,
    line: usize,
    rec: &'a csv::StringRecord,
}

impl Cursor<'_> {
    fn err(&self, column: usize, message: impl Into<String>) -> Error {
        Error::ParseAt { path: self.path.into(), line: self.line, column: column + 1, message: message.into() }
    }

    fn raw(&self, column: usize) -> &str {
        self.rec.get(column).unwrap_or("").trim()
    }

    fn opt(&self, column: usize) -> Option<&str> {
        let s = self.raw(column);
        if s == "-" || s.is_empty() {
            None
        } else {
            Some(s)
        }
    }

    fn parse<T: FromStr>(&self, column: usize) -> Result<T> {
        self.raw(column).parse().map_err(|_| self.err(column, format!("cannot parse '{}'", self.raw(column))))
    }

    fn parse_opt<T: FromStr>(&self, column: usize) -> Result<Option<T>> {
        match self.opt(column) {
            None => Ok(None),
            Some(s) => s.parse().map(Some).map_err(|_| self.err(column, format!("cannot parse '{s}'"))),
        }
    }

    fn rational_opt(&self, column: usize) -> Result<Option<BigRational>> {
        match self.opt(column) {
            None => Ok(None),
            Some(s) => parse_rational(s).map(Some).map_err(|e| self.err(column, e.to_string())),
        }
    }
}

fn check_header(rdr: &mut csv::Reader<&[u8]>, path: &str, expected: &[&str]) -> Result<()> {
    let h = rdr.headers().map_err(|e| csv_err(path, e))?;
    let got: Vec<&str> = h.iter().collect();
    if got != expected {
        return Err(Error::ParseAt {
            path: path.into(),
            line: h.position().map_or(0, |p| p.line() as usize),
            column: 1,
            message: format!("unexpected header {got:?}, expected {expected:?}"),
        });
    }
    Ok(())
}

fn csv_err(path: &str, e: csv::Error) -> Error {
    let (line, column) = match e.kind() {
        csv::ErrorKind::UnequalLengths { pos, .. } => (pos.as_ref().map_or(0, |p| p.line() as usize), 0),
        _ => (e.position().map_or(0, |p| p.line() as usize), 0),
    };
    Error::ParseAt { path: path.into(), line, column, message: e.to_string() }
}

fn parse_ramified(s: &str) -> std::result::Result<Vec<RamifiedPrimeDecomposition>, String> {
    if s == "-" || s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(';')
        .map(|part| {
            let (p, facs) = part.split_once(':').ok_or_else(|| format!("missing ':' in '{part}'"))?;
            let p: u64 = p.trim().parse().map_err(|_| format!("bad prime '{p}'"))?;
            let factors = facs
                .split(',')
                .map(|ef| {
                    let (e, f) = ef.split_once('/').ok_or_else(|| format!("bad e/f '{ef}'"))?;
                    let e: u32 = e.trim().parse().map_err(|_| format!("bad e '{e}'"))?;
                    let f: u32 = f.trim().parse().map_err(|_| format!("bad f '{f}'"))?;
                    if e == 0 || f == 0 {
                        return Err(format!("zero e or f in '{ef}'"));
                    }
                    Ok((e, f))
                })
                .collect::<std::result::Result<Vec<_>, String>>()?;
            Ok(RamifiedPrimeDecomposition { p, factors })
        })
        .collect()
}

fn format_ramified(r: &[RamifiedPrimeDecomposition]) -> String {
    if r.is_empty() {
        return "-".into();
    }
    r.iter()
        .map(|d| {
            let f: Vec<String> = d.factors.iter().map(|(e, f)| format!("{e}/{f}")).collect();
            format!("{}:{}", d.p, f.join(","))
        })
        .collect::<Vec<_>>()
        .join(";")
}

/// Parses a field table from text; `path` is used in error messages.
pub fn parse_field_table(text: &str, path: &str) -> Result<Vec<NumberFieldRecord>> {
    let mut rdr = reader(text);
    check_header(&mut rdr, path, &FIELD_HEADER)?;
    let mut out: Vec<NumberFieldRecord> = Vec::new();
    for rec in rdr.records() {
        let rec = rec.map_err(|e| csv_err(path, e))?;
        let c = Cursor { path, line: rec.position().map_or(0, |p| p.line() as usize), rec: &rec };
        let poly = c
            .raw(4)
            .split(',')
            .map(|s| BigInt::from_str(s.trim()))
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| c.err(4, "bad polynomial coefficient"))?;
        let ramified = parse_ramified(c.raw(10)).map_err(|m| c.err(10, m))?;
        let record = NumberFieldRecord {
            label: c.raw(0).to_string(),
            degree: c.parse(1)?,
            r1: c.parse(2)?,
            r2: c.parse(3)?,
            poly,
            disc: c.parse(5)?,
            class_number: c.parse_opt(6)?,
            n3: c.parse_opt(7)?,
            h3: c.parse_opt(8)?,
            reg_over_w: c.rational_opt(9)?,
            ramified,
            torsion: c.opt(11).map(str::to_string),
        };
        if out.iter().any(|r| r.label == record.label) {
            return Err(c.err(0, format!("duplicate label '{}'", record.label)));
        }
        record.validate()?;
        out.push(record);
    }
    Ok(out)
}

pub fn load_field_table(path: &Path) -> Result<Vec<NumberFieldRecord>> {
    let text = std::fs::read_to_string(path)?;
    parse_field_table(&text, &path.display().to_string())
}

fn opt_str<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or("-".into(), |x| x.to_string())
}

fn opt_rat(v: &Option<BigRational>) -> String {
    v.as_ref().map_or("-".into(), |q| crate::arith::fmt_rational(q, true))
}

/// Serialises field records in the bundled TSV layout.
pub fn write_field_table(records: &[NumberFieldRecord]) -> String {
    let mut s = String::from("# number fields\n");
    s.push_str(&FIELD_HEADER.join("\t"));
    s.push('\n');
    for r in records {
        let poly: Vec<String> = r.poly.iter().map(|c| c.to_string()).collect();
        let row = [
            r.label.clone(),
            r.degree.to_string(),
            r.r1.to_string(),
            r.r2.to_string(),
            poly.join(","),
            r.disc.to_string(),
            opt_str(&r.class_number),
            opt_str(&r.n3),
            opt_str(&r.h3),
            opt_rat(&r.reg_over_w),
            format_ramified(&r.ramified),
            opt_str(&r.torsion),
        ];
        s.push_str(&row.join("\t"));
        s.push('\n');
    }
    s
}

/// Parses a pair table, resolving field labels against `fields`.
pub fn parse_pair_table(text: &str, path: &str, fields: &[NumberFieldRecord]) -> Result<Vec<FieldPairRecord>> {
    let index: HashMap<&str, Arc<NumberFieldRecord>> =
        fields.iter().map(|f| (f.label.as_str(), Arc::new(f.clone()))).collect();
    let mut rdr = reader(text);
    check_header(&mut rdr, path, &PAIR_HEADER)?;
    let mut out: Vec<FieldPairRecord> = Vec::new();
    for rec in rdr.records() {
        let rec = rec.map_err(|e| csv_err(path, e))?;
        let c = Cursor { path, line: rec.position().map_or(0, |p| p.line() as usize), rec: &rec };
        let label = c.raw(0).to_string();
        let resolve = |col: usize| {
            index
                .get(c.raw(col))
                .cloned()
                .ok_or_else(|| Error::DanglingLabel { pair: label.clone(), field: c.raw(col).to_string() })
        };
        let pair = FieldPairRecord {
            label: label.clone(),
            k: resolve(1)?,
            ell: resolve(2)?,
            rel_disc_norm: c.parse(3)?,
            expected: ExpectedValues {
                zeta_k_m1: c.rational_opt(4)?,
                l_m2: c.rational_opt(5)?,
                mu: c.rational_opt(6)?,
            },
        };
        if out.iter().any(|p| p.label == pair.label) {
            return Err(c.err(0, format!("duplicate pair label '{label}'")));
        }
        pair.validate()?;
        out.push(pair);
    }
    Ok(out)
}

pub fn load_pair_table(path: &Path, fields: &[NumberFieldRecord]) -> Result<Vec<FieldPairRecord>> {
    let text = std::fs::read_to_string(path)?;
    parse_pair_table(&text, &path.display().to_string(), fields)
}

pub fn write_pair_table(pairs: &[FieldPairRecord]) -> String {
    let mut s = String::from("# candidate pairs\n");
    s.push_str(&PAIR_HEADER.join("\t"));
    s.push('\n');
    for p in pairs {
        let row = [
            p.label.clone(),
            p.k.label.clone(),
            p.ell.label.clone(),
            p.rel_disc_norm.to_string(),
            opt_rat(&p.expected.zeta_k_m1),
            opt_rat(&p.expected.l_m2),
            opt_rat(&p.expected.mu),
        ];
        s.push_str(&row.join("\t"));
        s.push('\n');
    }
    s
}

/// Parses the constants table.
pub fn parse_constants(text: &str, path: &str) -> Result<AnalyticConstantTables> {
    let mut rdr = reader(text);
    check_header(&mut rdr, path, &CONSTANT_HEADER)?;
    let mut t = AnalyticConstantTables::default();
    for rec in rdr.records() {
        let rec = rec.map_err(|e| csv_err(path, e))?;
        let c = Cursor { path, line: rec.position().map_or(0, |p| p.line() as usize), rec: &rec };
        let rat = |col: usize| -> Result<BigRational> {
            parse_rational(c.raw(col)).map_err(|e| c.err(col, e.to_string()))
        };
        match c.raw(0) {
            "nc" => {
                let relation = match c.raw(3) {
                    "=" => Relation::Eq,
                    ">" => Relation::Gt,
                    ">=" => Relation::Ge,
                    other => return Err(c.err(3, format!("unknown relation '{other}'"))),
                };
                t.nc.push(NcEntry { n0: c.parse(1)?, value: rat(2)?, relation });
            }
            "mc" => {
                t.mc.insert(c.parse(1)?, rat(2)?);
            }
            "mr" => {
                t.mr.insert(c.parse(1)?, c.parse(2)?);
            }
            "mr_range" => t.mr_range.push(MrRange { dmin: c.parse(1)?, dmax: c.parse(3)?, value: rat(2)? }),
            "friedman" => {
                let r2: u32 = c.parse(1)?;
                t.friedman_rw.insert(r2, FriedmanEntry { complex_places: r2, rw: rat(2)?, threshold: rat(3)? });
            }
            "friedman_general" => t.friedman_general = Some(rat(2)?),
            "friedman_exception" => t.friedman_exceptions.push((c.parse(1)?, c.raw(3).to_string())),
            "regulator_k" => {
                t.regulator_k.insert(c.parse(1)?, rat(2)?);
            }
            "zimmert" => t.zimmert = Some((rat(2)?, rat(3)?)),
            "slavutskii" => t.slavutskii = Some((rat(2)?, rat(3)?)),
            "appendix" => t.appendix.push(AppendixTriple { disc: c.parse(1)?, h: c.parse(2)?, n3: c.parse(3)? }),
            "axiom" => t.axioms.push(Axiom { key: c.parse(1)?, value: c.parse_opt(2)?, name: c.raw(3).to_string() }),
            other => return Err(c.err(0, format!("unknown row kind '{other}'"))),
        }
    }
    Ok(t)
}

pub fn load_constants(path: &Path) -> Result<AnalyticConstantTables> {
    let text = std::fs::read_to_string(path)?;
    parse_constants(&text, &path.display().to_string())
}

/// Converts a small exact integer to `u64`.
pub fn disc_u64(r: &NumberFieldRecord) -> Result<u64> {
    r.disc.to_u64().ok_or_else(|| Error::Domain(format!("discriminant of {} exceeds 64 bits", r.label)))
}

/// Largest `p` such that `p^k <= n`.
pub fn int_root_floor(n: &BigInt, k: u32) -> BigInt {
    n.nth_root(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_tables_load() {
        let ds = Dataset::bundled().unwrap();
        assert_eq!(ds.kq_pairs().len(), 11);
        assert_eq!(ds.c_pairs().len(), 40);
        assert!(validate_constants(&ds.constants).all_passed());
    }

    #[test]
    fn ramified_format_round_trip() {
        let s = "2:2/1,2/1;7:2/2";
        assert_eq!(format_ramified(&parse_ramified(s).unwrap()), s);
        assert!(parse_ramified("2:2-1").is_err());
    }

    #[test]
    fn fundamental_discriminants() {
        assert!(is_fundamental_discriminant(-4) && is_fundamental_discriminant(-23));
        assert!(!is_fundamental_discriminant(-12) && is_fundamental_discriminant(-24));
        assert!(is_fundamental_discriminant(5) && !is_fundamental_discriminant(9));
    }
}
