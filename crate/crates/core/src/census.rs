//! The staged census pipeline: discriminant cuts over the rationals, the
//! parahoric configuration searches, the degree ladder, the pair filter and
//! the final class counts, each with a trace of every kept or rejected
//! candidate.

use crate::arith::{factor_u64, fmt_rational, numerator_is_power_of_3, primes_up_to};
use crate::datasets::{is_fundamental_discriminant, Dataset, FieldPairRecord};
use crate::error::{Error, Result};
use crate::ffpoly::{classified_places_up_to_symmetry, PlaceOfK, RelativePlaceClass};
use crate::ladder::{all_ladders, DegreeLadder, LadderOutcome, SurvivorRow};
use crate::lvalues::{rel_l_minus2_exact, zeta_k_minus1_exact, LConfig, Qmax};
use crate::real::{parse_rational, CertifiedReal};
use crate::volume::{
    chi_lambda_and_gamma_lower, euler_factor, mu_from_values, LocalDatum, ParahoricChoice, ParahoricKind,
    VolumeContext,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt::Write as _;

/// Version tag of the JSON report.
pub const SCHEMA: &str = "fppcensus/1";

/// Stage names, in pipeline order.
pub const STAGES: [&str; 6] = [
    "kq-discriminant-cut",
    "kq-pairs",
    "degree-elimination",
    "pair-filter",
    "division-algebra-search",
    "final-census",
];

const SIG: usize = 15;

/// `BigRational` as a `"num/den"` string.
pub mod rat_str {
    use super::*;
    use serde::de::Error as _;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(q: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&fmt_rational(q, false))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BigRational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(D::Error::custom)
    }
}

fn interval(x: &CertifiedReal) -> [String; 2] {
    let (lo, hi) = x.interval_strings(SIG);
    [lo, hi]
}

fn interval_text(x: &CertifiedReal) -> String {
    let [lo, hi] = interval(x);
    format!("[{lo}, {hi}]")
}

/// Sort key splitting a label into prefix, number and rest (`C2 < C10`).
pub fn label_key(s: &str) -> (String, u64, String) {
    let i = s.find(|c: char| c.is_ascii_digit()).unwrap_or(s.len());
    let j = s[i..].find(|c: char| !c.is_ascii_digit()).map_or(s.len(), |j| i + j);
    (s[..i].to_string(), s[i..j].parse().unwrap_or(0), s[j..].to_string())
}

/// One kept or rejected candidate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cut {
    pub candidate: String,
    pub bound: String,
    pub values: Vec<String>,
    pub kept: bool,
    /// For rejections, the inequality or test that failed.
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageTrace {
    pub stage: String,
    pub inputs: String,
    pub cuts: Vec<Cut>,
    pub outputs: Vec<String>,
    pub notes: Vec<String>,
}

impl StageTrace {
    fn new(stage: &str, inputs: String) -> Self {
        StageTrace { stage: stage.into(), inputs, cuts: Vec::new(), outputs: Vec::new(), notes: Vec::new() }
    }

    fn cut(&mut self, candidate: String, bound: &str, values: Vec<String>, kept: bool, detail: String) {
        self.cuts.push(Cut { candidate, bound: bound.into(), values, kept, detail });
    }

    fn finish(mut self) -> Self {
        self.cuts.sort_by_key(|c| label_key(&c.candidate));
        self.outputs.sort_by_key(|o| label_key(o));
        self
    }

    /// `(stage/candidate/bound, kept)` for every decision.
    pub fn decisions(&self) -> Vec<(String, bool)> {
        self.cuts.iter().map(|c| (format!("{}/{}/{}", self.stage, c.candidate, c.bound), c.kept)).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Form {
    Hermitian,
    CubicDivisionAlgebra,
}

impl Form {
    pub fn name(self) -> &'static str {
        match self {
            Form::Hermitian => "hermitian",
            Form::CubicDivisionAlgebra => "cubic-division-algebra",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Confirmed,
    Excluded,
    Open,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Confirmed => "confirmed",
            Status::Excluded => "excluded",
            Status::Open => "open",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusEntry {
    pub pair: String,
    pub form: Form,
    pub t0: Option<String>,
    pub ramified: u32,
    pub class_count: u64,
    pub status: Status,
    #[serde(with = "rat_str")]
    pub chi_lambda: BigRational,
    /// External fact or missing datum behind an excluded or open status.
    pub citation: Option<String>,
}

/// Row of the table of `L(-2)` and `mu` over the rationals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KqRow {
    pub a: u64,
    pub d_ell: u64,
    pub h3: u64,
    #[serde(with = "rat_str")]
    pub l_m2: BigRational,
    #[serde(with = "rat_str")]
    pub mu: BigRational,
    pub l_m2_interval: [String; 2],
}

/// Row of the table of `zeta_k(-1)`, `L(-2)` and `mu` for the pairs `C_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairRow {
    pub label: String,
    pub k: String,
    pub ell: String,
    #[serde(with = "rat_str")]
    pub zeta_k_m1: BigRational,
    #[serde(with = "rat_str")]
    pub l_m2: BigRational,
    #[serde(with = "rat_str")]
    pub mu: BigRational,
    pub zeta_k_m1_interval: [String; 2],
    pub l_m2_interval: [String; 2],
    pub matches_table: bool,
    pub recheck_identical: Option<bool>,
}

/// A surviving configuration with one anisotropic place.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisionRow {
    pub pair: String,
    pub t0: String,
    pub q: u64,
    #[serde(with = "rat_str")]
    pub mu: BigRational,
    #[serde(with = "rat_str")]
    pub mu_lambda: BigRational,
    #[serde(with = "rat_str")]
    pub chi_lambda: BigRational,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportTables {
    pub kq: Vec<KqRow>,
    pub kq_pairs: Vec<DivisionRow>,
    pub degree_rows: Vec<SurvivorRow>,
    pub pairs: Vec<PairRow>,
    pub division: Vec<DivisionRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportConfig {
    pub prime_limit: u64,
    pub precision_bits: u32,
    pub bounds_precision_bits: u32,
    pub qmax: String,
    pub recheck: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusReport {
    pub schema: String,
    pub config: ReportConfig,
    pub stages: Vec<StageTrace>,
    pub entries: Vec<CensusEntry>,
    pub total_confirmed: u64,
    pub total_upper: u64,
    pub tables: ReportTables,
    /// Names of the external facts the report relies on.
    pub axioms_used: Vec<String>,
    /// Whether every quoted numeric checkpoint of the ladder is certified.
    pub checkpoints_certified: bool,
}

impl CensusReport {
    pub fn stage(&self, name: &str) -> Option<&StageTrace> {
        self.stages.iter().find(|s| s.stage == name)
    }

    /// Every kept/rejected decision and every entry status.
    pub fn decisions(&self) -> Vec<(String, String)> {
        let mut out: Vec<(String, String)> =
            self.stages.iter().flat_map(|s| s.decisions()).map(|(k, v)| (k, v.to_string())).collect();
        for e in &self.entries {
            out.push((
                format!("entry/{}/{}/{}", e.pair, e.form.name(), e.t0.as_deref().unwrap_or("-")),
                format!("{}:{}", e.status.name(), e.class_count),
            ));
        }
        out
    }
}

/// Parameters of a census run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CensusConfig {
    pub lvalues: LConfig,
    pub qmax: Qmax,
    pub bounds_prec: u32,
    /// Recompute every L-value at the re-check configuration and compare.
    pub recheck: bool,
}

impl Default for CensusConfig {
    fn default() -> Self {
        CensusConfig { lvalues: LConfig::default(), qmax: Qmax::default(), bounds_prec: 128, recheck: false }
    }
}

impl CensusConfig {
    /// The same run at twice the working precision.
    pub fn doubled(&self) -> Self {
        CensusConfig {
            lvalues: LConfig { precision_bits: 2 * self.lvalues.precision_bits, ..self.lvalues },
            bounds_prec: 2 * self.bounds_prec,
            ..*self
        }
    }
}

/// Exact special values of one pair with their enclosures.
#[derive(Clone, Debug)]
pub struct PairValues {
    pub zeta_m1: BigRational,
    pub l_m2: BigRational,
    pub mu: BigRational,
    pub zeta_ball: CertifiedReal,
    pub l_ball: CertifiedReal,
    pub recheck_identical: Option<bool>,
}

/// Which non-default parahorics the configuration search may use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchSpace {
    /// Anisotropic kinds at split places and Iwahori kinds at ramified places.
    AnisotropicAndRamified,
    /// Every non-default kind compatible with the place.
    AllKinds,
}

impl SearchSpace {
    fn options(self, class: RelativePlaceClass) -> &'static [ParahoricKind] {
        use ParahoricKind::*;
        match (self, class) {
            (_, RelativePlaceClass::RamifiedInL) => &[RamifiedIwahori],
            (SearchSpace::AnisotropicAndRamified, RelativePlaceClass::SplitInL) => &[Anisotropic],
            (SearchSpace::AnisotropicAndRamified, RelativePlaceClass::InertInL) => &[],
            (SearchSpace::AllKinds, RelativePlaceClass::SplitInL) => {
                &[Anisotropic, SplitNonHyperspecialMaximal, SplitIwahori]
            }
            (SearchSpace::AllKinds, RelativePlaceClass::InertInL) => &[InertNonHyperspecialMaximal, InertIwahori],
        }
    }

    /// Smallest `e''` of a non-default kind at an unramified place of norm `q`.
    fn min_cost(self, q: u64) -> BigRational {
        let q = BigInt::from(q);
        let aniso = euler_factor(&ParahoricChoice::new(ParahoricKind::Anisotropic, q.clone())).1;
        match self {
            SearchSpace::AnisotropicAndRamified => aniso,
            SearchSpace::AllKinds => {
                let inert = euler_factor(&ParahoricChoice::new(ParahoricKind::InertNonHyperspecialMaximal, q)).1;
                aniso.min(inert)
            }
        }
    }
}

/// A place of `k` with the non-default kinds the search may put there.
#[derive(Clone, Debug)]
pub struct SearchPlace {
    pub place: PlaceOfK,
    pub class: RelativePlaceClass,
    pub options: Vec<ParahoricChoice>,
}

/// Outcome of the tests on one configuration with a nonempty anisotropic set.
#[derive(Clone, Debug)]
pub struct ConfigOutcome {
    pub locals: Vec<LocalDatum>,
    pub mu_lambda: BigRational,
    pub chi_gamma_lower: BigRational,
    pub power_of_3: bool,
    pub within_budget: bool,
    /// Every parahoric is maximal, and hyperspecial where one exists.
    pub standard: bool,
}

impl ConfigOutcome {
    pub fn kept(&self) -> bool {
        self.power_of_3 && self.within_budget && self.standard
    }

    pub fn t0(&self) -> Vec<&LocalDatum> {
        self.locals.iter().filter(|l| l.choice.kind == ParahoricKind::Anisotropic).collect()
    }

    pub fn describe(&self) -> String {
        let parts: Vec<String> =
            self.locals.iter().map(|l| format!("{}:{}", place_name(&l.place), l.choice.kind.name())).collect();
        format!("{{{}}}", parts.join(", "))
    }
}

/// Result of the configuration search for one pair.
#[derive(Clone, Debug)]
pub struct SearchResult {
    pub pair: String,
    pub mu: BigRational,
    pub h3: u64,
    /// `h3 / mu`: the largest admissible `prod e''`.
    pub budget: BigRational,
    /// Largest norm of an unramified place that can carry a non-default kind.
    pub norm_bound: u64,
    pub places: Vec<SearchPlace>,
    /// Configurations reached within the budget.
    pub examined: u64,
    /// Branches cut because `prod e''` exceeded the budget.
    pub pruned: u64,
    /// Configurations with a nonempty anisotropic set.
    pub configurations: Vec<ConfigOutcome>,
}

impl SearchResult {
    pub fn kept(&self) -> impl Iterator<Item = &ConfigOutcome> {
        self.configurations.iter().filter(|c| c.kept())
    }
}

/// Short name of a place: `v{p}(q=..)`, with `#tag` for repeated `(e, f)`.
pub fn place_name(pl: &PlaceOfK) -> String {
    if pl.multiplicity_tag == 0 {
        format!("v{}(q={})", pl.p, pl.q)
    } else {
        format!("v{}(q={})#{}", pl.p, pl.q, pl.multiplicity_tag)
    }
}

/// Places of `k` ramified in `ell`.
pub fn ramified_places(pair: &FieldPairRecord) -> Result<Vec<PlaceOfK>> {
    let n = pair
        .rel_disc_norm
        .to_u64()
        .ok_or_else(|| Error::Domain(format!("relative discriminant of {} exceeds 64 bits", pair.label)))?;
    let mut out = Vec::new();
    for (p, _) in factor_u64(n) {
        for (pl, class) in classified_places_up_to_symmetry(pair, p)? {
            if class == RelativePlaceClass::RamifiedInL {
                out.push(pl);
            }
        }
    }
    Ok(out)
}

/// Enumerates every coherent parahoric configuration with `mu prod e'' <= h3`
/// and tests those with a nonempty anisotropic set.
pub fn search_configurations(
    pair: &FieldPairRecord,
    mu: &BigRational,
    h3: u64,
    space: SearchSpace,
) -> Result<SearchResult> {
    let budget = BigRational::from_integer(h3.into()) / mu;
    let mut norm_bound = 1u64;
    while space.min_cost(norm_bound + 1) <= budget {
        norm_bound += 1;
    }
    let ramified = ramified_places(pair)?;
    let bound = BigInt::from(norm_bound);
    let mut candidates: Vec<(PlaceOfK, RelativePlaceClass)> = Vec::new();
    for p in primes_up_to(norm_bound) {
        for (pl, class) in classified_places_up_to_symmetry(pair, p)? {
            if class != RelativePlaceClass::RamifiedInL && pl.q <= bound {
                candidates.push((pl, class));
            }
        }
    }
    candidates.extend(ramified.iter().cloned().map(|pl| (pl, RelativePlaceClass::RamifiedInL)));
    candidates.sort_by(|a, b| a.0.cmp(&b.0));

    let places: Vec<SearchPlace> = candidates
        .into_iter()
        .map(|(place, class)| {
            let options = space
                .options(class)
                .iter()
                .map(|&k| ParahoricChoice::new(k, place.q.clone()))
                .filter(|c| euler_factor(c).1 <= budget)
                .collect();
            SearchPlace { place, class, options }
        })
        .filter(|p: &SearchPlace| !p.options.is_empty())
        .collect();

    let mut res = SearchResult {
        pair: pair.label.clone(),
        mu: mu.clone(),
        h3,
        budget: budget.clone(),
        norm_bound,
        places: places.clone(),
        examined: 0,
        pruned: 0,
        configurations: Vec::new(),
    };
    let mut chosen = Vec::new();
    dfs(pair, &places, 0, &mut chosen, BigRational::one(), &mut res)?;
    Ok(res)
}

fn dfs(
    pair: &FieldPairRecord,
    places: &[SearchPlace],
    i: usize,
    chosen: &mut Vec<LocalDatum>,
    cost: BigRational,
    res: &mut SearchResult,
) -> Result<()> {
    if i == places.len() {
        res.examined += 1;
        if chosen.iter().any(|l| l.choice.kind == ParahoricKind::Anisotropic) {
            let ctx = VolumeContext::new(pair.clone(), res.mu.clone(), chosen.clone())?;
            let chi = chi_lambda_and_gamma_lower(&ctx, res.h3);
            let standard = chosen.iter().all(|l| {
                matches!(l.choice.kind, ParahoricKind::Anisotropic | ParahoricKind::RamifiedMaximal)
            });
            res.configurations.push(ConfigOutcome {
                locals: chosen.clone(),
                within_budget: chi.chi_gamma_lower <= BigRational::one(),
                power_of_3: chi.power_of_3,
                mu_lambda: chi.mu_lambda,
                chi_gamma_lower: chi.chi_gamma_lower,
                standard,
            });
        }
        return Ok(());
    }
    dfs(pair, places, i + 1, chosen, cost.clone(), res)?;
    let sp = &places[i];
    for opt in &sp.options {
        let c = &cost * euler_factor(opt).1;
        if c > res.budget {
            res.pruned += 1;
            continue;
        }
        chosen.push(LocalDatum { place: sp.place.clone(), class: sp.class, choice: opt.clone() });
        dfs(pair, places, i + 1, chosen, c, res)?;
        chosen.pop();
    }
    Ok(())
}

/// A field over the rationals surviving the discriminant cuts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KqCandidate {
    pub d_ell: u64,
    pub a: u64,
    pub n3: u64,
}

/// A configuration surviving a search, with the data of its pair.
#[derive(Clone, Debug)]
pub struct Survivor {
    pub pair: FieldPairRecord,
    pub mu: BigRational,
    pub config: ConfigOutcome,
}

impl Survivor {
    pub fn t0_name(&self) -> String {
        self.config.t0().iter().map(|l| place_name(&l.place)).collect::<Vec<_>>().join(",")
    }

    fn row(&self) -> DivisionRow {
        let t0 = self.config.t0();
        DivisionRow {
            pair: self.pair.label.clone(),
            t0: self.t0_name(),
            q: t0.first().and_then(|l| l.place.q_u64()).unwrap_or(0),
            mu: self.mu.clone(),
            mu_lambda: self.config.mu_lambda.clone(),
            chi_lambda: &self.config.mu_lambda * BigInt::from(3),
        }
    }
}

/// The census driver over a dataset.
pub struct Census<'a> {
    pub ds: &'a Dataset,
    pub cfg: CensusConfig,
}

impl<'a> Census<'a> {
    pub fn new(ds: &'a Dataset, cfg: CensusConfig) -> Self {
        Census { ds, cfg }
    }

    /// Exact `zeta_k(-1)`, `L(-2)` and `mu` by reconstruction.
    pub fn values(&self, pair: &FieldPairRecord) -> Result<PairValues> {
        let c = &self.cfg;
        let z = zeta_k_minus1_exact(&pair.k, &c.lvalues, c.qmax, false)?;
        let l = rel_l_minus2_exact(pair, &c.lvalues, c.qmax, false)?;
        let recheck_identical = if c.recheck {
            let rc = c.lvalues.recheck();
            let z2 = zeta_k_minus1_exact(&pair.k, &rc, c.qmax, false)?;
            let l2 = rel_l_minus2_exact(pair, &rc, c.qmax, false)?;
            Some(z2.value == z.value && l2.value == l.value)
        } else {
            None
        };
        let mu = mu_from_values(pair.d(), &z.value, &l.value);
        Ok(PairValues { zeta_m1: z.value, l_m2: l.value, mu, zeta_ball: z.ball, l_ball: l.ball, recheck_identical })
    }

    fn values_all(&self, pairs: &[&FieldPairRecord]) -> Result<Vec<PairValues>> {
        pairs.par_iter().map(|p| self.values(p)).collect()
    }

    pub fn ladders(&self) -> Result<Vec<DegreeLadder>> {
        all_ladders(&self.ds.constants, self.cfg.bounds_prec)
    }

    /// Discriminant cuts for `k` the rationals.
    pub fn stage_kq_discriminant_cut(&self) -> Result<(StageTrace, Vec<KqCandidate>)> {
        let c = &self.ds.constants;
        let l1 = crate::ladder::ladder(1, c, self.cfg.bounds_prec)?;
        let (d_max, cuts) = match &l1.outcome {
            LadderOutcome::RationalCuts { d_ell_max, cuts } => (*d_ell_max, cuts.clone()),
            other => return Err(Error::Domain(format!("unexpected outcome {other:?} for the rationals"))),
        };
        let mut balls = Vec::new();
        for &(n3, _) in &cuts {
            balls.push((n3, crate::bounds::kq_n3_cut(n3, self.cfg.bounds_prec)?.0));
        }
        let cut_for = |n3: u64| cuts.iter().find(|c| c.0 >= n3).map(|c| c.1);
        let ball_for = |n3: u64| balls.iter().find(|b| b.0 >= n3).map(|b| interval_text(&b.1)).unwrap_or_default();
        let ax = c.axiom("imag_quadratic_max_class_number")?;
        let hmax = ax.value.as_ref().and_then(|v| v.to_u64()).unwrap_or(0);
        let n3_max = crate::ladder::max_power_of_3(hmax);
        let widest = cut_for(n3_max).ok_or_else(|| Error::Domain(format!("no cut for n3 = {n3_max}")))?;

        let mut t = StageTrace::new(
            STAGES[0],
            format!(
                "imaginary quadratic fields with D_ell <= {d_max}; cuts n3 -> D_ell: {}; appendix of {} class numbers",
                cuts.iter().map(|(n, d)| format!("{n} -> {d}")).collect::<Vec<_>>().join(", "),
                c.appendix.len()
            ),
        );
        t.notes.push(format!("D_ell <= {d_max} from boundKQ(0.34); h_ell <= {hmax} (external: {}), so n3 <= {n3_max}", ax.name));
        let mut kept = Vec::new();
        for d in 3..=d_max {
            if !is_fundamental_discriminant(-(d as i64)) {
                continue;
            }
            let cand = format!("D={d}");
            match c.appendix_entry(d) {
                None => {
                    if d <= widest {
                        return Err(Error::MissingDatum { label: cand, field: "appendix class number".into() });
                    }
                    t.cut(
                        cand,
                        "n3 cut",
                        vec![format!("n3 <= {n3_max}"), format!("bound {}", ball_for(n3_max))],
                        false,
                        format!("D_ell = {d} > {widest}, the cut for n3 <= {n3_max}"),
                    );
                }
                Some(e) => {
                    let cut = cut_for(e.n3).ok_or_else(|| Error::Domain(format!("no cut for n3 = {}", e.n3)))?;
                    let values = vec![format!("h = {}", e.h), format!("n3 = {}", e.n3), format!("bound {}", ball_for(e.n3))];
                    if d <= cut {
                        let a = if d % 4 == 0 { d / 4 } else { d };
                        t.cut(cand, "n3 cut", values, true, String::new());
                        t.outputs.push(format!("a={a}"));
                        kept.push(KqCandidate { d_ell: d, a, n3: e.n3 });
                    } else {
                        t.cut(cand, "n3 cut", values, false, format!("D_ell = {d} > {cut}, the cut for n3 = {}", e.n3));
                    }
                }
            }
        }
        kept.sort_by_key(|k| k.a);
        Ok((t.finish(), kept))
    }

    /// The configuration search for `k` the rationals.
    pub fn stage_kq_pairs(&self, fields: &[KqCandidate]) -> Result<(StageTrace, Vec<Survivor>, Vec<KqRow>)> {
        let pairs: Vec<&FieldPairRecord> =
            fields.iter().map(|f| self.ds.pair(&format!("a={}", f.a))).collect::<Result<_>>()?;
        let vals = self.values_all(&pairs)?;
        let mut t = StageTrace::new(
            STAGES[1],
            format!("{} fields; anisotropic kinds at split primes, Iwahori kinds at ramified primes", pairs.len()),
        );
        let mut survivors = Vec::new();
        let mut rows = Vec::new();
        for ((f, pair), v) in fields.iter().zip(&pairs).zip(&vals) {
            let h3 = pair.ell.h3_required()?;
            rows.push(KqRow {
                a: f.a,
                d_ell: f.d_ell,
                h3,
                l_m2: v.l_m2.clone(),
                mu: v.mu.clone(),
                l_m2_interval: interval(&v.l_ball),
            });
            let s = search_configurations(pair, &v.mu, h3, SearchSpace::AnisotropicAndRamified)?;
            self.record_search(&mut t, &s);
            for cfg in s.kept() {
                let sv = Survivor { pair: (*pair).clone(), mu: v.mu.clone(), config: cfg.clone() };
                let p = cfg.t0().iter().map(|l| l.place.p.to_string()).collect::<Vec<_>>().join(",");
                t.outputs.push(format!("({},{p})", f.a));
                survivors.push(sv);
            }
        }
        Ok((t.finish(), survivors, rows))
    }

    fn record_search(&self, t: &mut StageTrace, s: &SearchResult) {
        let places: Vec<String> = s
            .places
            .iter()
            .map(|p| {
                let kinds: Vec<&str> = p.options.iter().map(|o| o.kind.name()).collect();
                format!("{}[{}: {}]", place_name(&p.place), p.class.name(), kinds.join("|"))
            })
            .collect();
        t.notes.push(format!(
            "{}: mu = {}, h3 = {}, prod e'' <= {}, unramified places up to norm {}; places {}; {} configurations examined, {} branches pruned",
            s.pair,
            fmt_rational(&s.mu, true),
            s.h3,
            fmt_rational(&s.budget, true),
            s.norm_bound,
            if places.is_empty() { "none".into() } else { places.join(" ") },
            s.examined,
            s.pruned
        ));
        if s.configurations.is_empty() {
            t.cut(
                s.pair.clone(),
                "anisotropic place within budget",
                vec![format!("mu = {}", fmt_rational(&s.mu, true))],
                false,
                format!("no split place with (q-1)^2(q+1)/3 <= {}", fmt_rational(&s.budget, true)),
            );
        }
        for c in &s.configurations {
            let values = vec![
                format!("mu prod e' = {}", fmt_rational(&c.mu_lambda, true)),
                format!("mu prod e'' / h3 = {}", fmt_rational(&c.chi_gamma_lower, true)),
            ];
            let (bound, detail) = if !c.power_of_3 {
                ("numerator of mu prod e' is a power of 3", format!("numerator {} has a prime factor other than 3", c.mu_lambda.numer()))
            } else if !c.within_budget {
                ("mu prod e'' / h3 <= 1", format!("{} > 1", fmt_rational(&c.chi_gamma_lower, true)))
            } else if !c.standard {
                ("parahorics maximal, hyperspecial where available", "a non-maximal or non-hyperspecial parahoric at an unramified place".into())
            } else {
                ("all tests", String::new())
            };
            t.cut(format!("{} T={}", s.pair, c.describe()), bound, values, c.kept(), detail);
        }
    }

    /// The ladder over the degree of `k`.
    pub fn stage_degree_elimination(&self) -> Result<(StageTrace, Vec<SurvivorRow>, bool)> {
        let ladders = self.ladders()?;
        let mut t = StageTrace::new(STAGES[2], format!("{} ladders over the degree of k", ladders.len()));
        let mut rows = Vec::new();
        let mut certified = true;
        for l in &ladders {
            certified &= l.certified();
            let values: Vec<String> = l
                .checkpoints()
                .map(|c| format!("{} {} {}: {}", c.expr, c.rel.symbol(), c.displayed, interval_text(&c.value)))
                .collect();
            let failed: Vec<&str> = l.steps.iter().filter(|s| !s.holds).map(|s| s.text.as_str()).collect();
            if !failed.is_empty() {
                t.notes.push(format!("{}: uncertified steps: {}", l.label, failed.join("; ")));
            }
            for s in l.steps.iter().filter(|s| s.external.is_some()) {
                t.notes.push(format!("{}: external ({}): {}", l.label, s.external.as_deref().unwrap_or(""), s.text));
            }
            let last = l.steps.last().map(|s| s.text.clone()).unwrap_or_default();
            let cand = l.label.clone();
            match &l.outcome {
                LadderOutcome::Eliminated => t.cut(cand, "degree ladder", values, false, last),
                LadderOutcome::EliminatedExternally(ax) => {
                    t.cut(cand, "degree ladder", values, false, format!("externally eliminated ({ax}): {last}"))
                }
                LadderOutcome::Survives(row) => {
                    t.cut(cand, "degree ladder", values, true, String::new());
                    t.outputs.push(format!("d={} (D_k^(1/d) < {}, h3 = {}, D_ell/D_k^2 <= {}, D_k <= {})", row.d, row.root_bound, row.h3, row.x_d, row.r_d));
                    rows.push(row.clone());
                }
                LadderOutcome::RationalCuts { d_ell_max, .. } => {
                    t.cut(cand, "degree ladder", values, true, String::new());
                    t.outputs.push(format!("d=1 (D_ell <= {d_ell_max})"));
                }
            }
        }
        Ok((t.finish(), rows, certified))
    }

    /// Exact values for `C1..C40` and the power-of-3 test on `mu`.
    pub fn stage_pair_filter(&self) -> Result<(StageTrace, Vec<(FieldPairRecord, PairValues)>, Vec<PairRow>)> {
        let pairs = self.ds.c_pairs();
        let vals = self.values_all(&pairs)?;
        let mut t = StageTrace::new(STAGES[3], format!("{} pairs with exact zeta_k(-1), L(-2) and mu", pairs.len()));
        let mut kept = Vec::new();
        let mut rows = Vec::new();
        for (pair, v) in pairs.iter().zip(vals) {
            let e = &pair.expected;
            let matches = e.zeta_k_m1.as_ref() == Some(&v.zeta_m1)
                && e.l_m2.as_ref() == Some(&v.l_m2)
                && e.mu.as_ref() == Some(&v.mu);
            if !matches {
                t.notes.push(format!("{}: recomputed values differ from the bundled table", pair.label));
            }
            rows.push(PairRow {
                label: pair.label.clone(),
                k: pair.k.label.clone(),
                ell: pair.ell.label.clone(),
                zeta_k_m1: v.zeta_m1.clone(),
                l_m2: v.l_m2.clone(),
                mu: v.mu.clone(),
                zeta_k_m1_interval: interval(&v.zeta_ball),
                l_m2_interval: interval(&v.l_ball),
                matches_table: matches,
                recheck_identical: v.recheck_identical,
            });
            let values = vec![
                format!("zeta_k(-1) = {}", fmt_rational(&v.zeta_m1, true)),
                format!("L(-2) = {}", fmt_rational(&v.l_m2, true)),
                format!("mu = {}", fmt_rational(&v.mu, true)),
            ];
            if numerator_is_power_of_3(&v.mu) {
                match pair.ell.h3 {
                    Some(1) => t.notes.push(format!("{}: h3 = 1", pair.label)),
                    other => t.notes.push(format!("{}: h3 = {:?}, expected 1", pair.label, other)),
                }
                t.cut(pair.label.clone(), "numerator of mu is a power of 3", values, true, String::new());
                t.outputs.push(pair.label.clone());
                kept.push(((*pair).clone(), v));
            } else {
                let detail = format!("numerator {} has a prime factor other than 3", v.mu.numer());
                t.cut(pair.label.clone(), "numerator of mu is a power of 3", values, false, detail);
            }
        }
        Ok((t.finish(), kept, rows))
    }

    /// The configuration search over the pairs surviving the filter.
    pub fn stage_division_algebra_search(
        &self,
        pairs: &[(FieldPairRecord, PairValues)],
    ) -> Result<(StageTrace, Vec<Survivor>)> {
        let mut t = StageTrace::new(
            STAGES[4],
            format!("{} pairs; every non-default parahoric kind within prod e'' <= h3 / mu", pairs.len()),
        );
        let mut survivors = Vec::new();
        let mut total = 0u64;
        for (pair, v) in pairs {
            let h3 = pair.ell.h3_required()?;
            let s = search_configurations(pair, &v.mu, h3, SearchSpace::AllKinds)?;
            total += s.examined;
            self.record_search(&mut t, &s);
            for cfg in s.kept() {
                let sv = Survivor { pair: pair.clone(), mu: v.mu.clone(), config: cfg.clone() };
                t.outputs.push(format!("{} T0={}", pair.label, sv.t0_name()));
                survivors.push(sv);
            }
        }
        t.notes.push(format!("search space: {total} configurations examined in total"));
        Ok((t.finish(), survivors))
    }

    /// Runs one stage (with its prerequisites) and returns its trace.
    pub fn run_stage(&self, name: &str) -> Result<StageTrace> {
        let idx = STAGES.iter().position(|s| *s == name).ok_or_else(|| Error::unknown("stage", name))?;
        match idx {
            0 => Ok(self.stage_kq_discriminant_cut()?.0),
            1 => {
                let (_, f) = self.stage_kq_discriminant_cut()?;
                Ok(self.stage_kq_pairs(&f)?.0)
            }
            2 => Ok(self.stage_degree_elimination()?.0),
            3 => Ok(self.stage_pair_filter()?.0),
            4 => {
                let (_, kept, _) = self.stage_pair_filter()?;
                Ok(self.stage_division_algebra_search(&kept)?.0)
            }
            _ => {
                let r = self.run()?;
                Ok(r.stages.into_iter().last().expect("final stage"))
            }
        }
    }

    /// The whole pipeline.
    pub fn run(&self) -> Result<CensusReport> {
        let (s0, fields) = self.stage_kq_discriminant_cut()?;
        let (s1, kq_survivors, kq_rows) = self.stage_kq_pairs(&fields)?;
        let (s2, degree_rows, certified) = self.stage_degree_elimination()?;
        let (s3, filtered, pair_rows) = self.stage_pair_filter()?;
        let (s4, survivors) = self.stage_division_algebra_search(&filtered)?;
        let (s5, entries, axioms) = self.stage_final_census(&kq_survivors, &survivors, &filtered)?;
        let total_confirmed = entries.iter().filter(|e| e.status == Status::Confirmed).map(|e| e.class_count).sum();
        let total_upper =
            entries.iter().filter(|e| e.status != Status::Excluded).map(|e| e.class_count).sum();
        let mut axioms_used: BTreeSet<String> = axioms.into_iter().collect();
        for l in self.ladders()? {
            axioms_used.extend(l.steps.iter().filter_map(|s| s.external.clone()));
        }
        axioms_used.insert("imag_quadratic_max_class_number".into());
        let c = &self.cfg;
        Ok(CensusReport {
            schema: SCHEMA.into(),
            config: ReportConfig {
                prime_limit: c.lvalues.prime_limit,
                precision_bits: c.lvalues.precision_bits,
                bounds_precision_bits: c.bounds_prec,
                qmax: match c.qmax {
                    Qmax::Fixed(q) => q.to_string(),
                    Qmax::Auto { cap } => format!("auto:{cap}"),
                },
                recheck: c.recheck,
            },
            stages: vec![s0, s1, s2, s3, s4, s5],
            entries,
            total_confirmed,
            total_upper,
            tables: ReportTables {
                kq: kq_rows,
                kq_pairs: kq_survivors.iter().map(Survivor::row).collect(),
                degree_rows,
                pairs: pair_rows,
                division: survivors.iter().map(Survivor::row).collect(),
            },
            axioms_used: axioms_used.into_iter().collect(),
            checkpoints_certified: certified,
        })
    }

    /// Class counts for the configurations over the rationals.
    pub fn class_count_kq(&self, survivors: &[Survivor]) -> Result<Vec<CensusEntry>> {
        survivors.iter().map(|s| self.division_entry(s, None)).collect()
    }

    fn division_entry(&self, s: &Survivor, excluded: Option<String>) -> Result<CensusEntry> {
        let r = ramified_places(&s.pair)?.len() as u32;
        let (status, citation) = match excluded {
            Some(ax) => (Status::Excluded, Some(ax)),
            None if s.pair.ell.torsion.is_some() => (Status::Confirmed, None),
            None => (Status::Open, Some(format!("no torsion data for {}", s.pair.ell.label))),
        };
        Ok(CensusEntry {
            pair: s.pair.label.clone(),
            form: Form::CubicDivisionAlgebra,
            t0: Some(s.t0_name()),
            ramified: r,
            class_count: 1u64 << r,
            status,
            chi_lambda: &s.config.mu_lambda * BigInt::from(3),
            citation,
        })
    }

    fn pair_axiom(&self, name: &str, label: &str) -> bool {
        self.ds.constants.axioms_named(name).any(|a| format!("C{}", a.key) == label)
    }

    /// Final entries: division-algebra classes and the hermitian candidates.
    pub fn stage_final_census(
        &self,
        kq: &[Survivor],
        division: &[Survivor],
        filtered: &[(FieldPairRecord, PairValues)],
    ) -> Result<(StageTrace, Vec<CensusEntry>, Vec<String>)> {
        const DA_EXCLUDED: &str = "division_algebra_pair_excluded";
        const H_CAND: &str = "hermitian_candidate";
        const H_EXCLUDED: &str = "hermitian_pair_excluded";
        let mut t = StageTrace::new(
            STAGES[5],
            format!("{} configurations over the rationals, {} over larger k, hermitian candidates", kq.len(), division.len()),
        );
        let mut axioms = Vec::new();
        let mut entries = self.class_count_kq(kq)?;
        for s in division {
            let ex = self.pair_axiom(DA_EXCLUDED, &s.pair.label).then(|| DA_EXCLUDED.to_string());
            if ex.is_some() {
                axioms.push(DA_EXCLUDED.to_string());
            }
            entries.push(self.division_entry(s, ex)?);
        }
        let mut hermitian: Vec<String> = self.ds.constants.axioms_named(H_CAND).map(|a| format!("C{}", a.key)).collect();
        hermitian.sort_by_key(|l| label_key(l));
        if !hermitian.is_empty() {
            axioms.push(H_CAND.to_string());
        }
        for label in hermitian {
            let (pair, v) = filtered
                .iter()
                .find(|(p, _)| p.label == label)
                .ok_or_else(|| Error::Domain(format!("hermitian candidate {label} did not pass the pair filter")))?;
            let excluded = self.pair_axiom(H_EXCLUDED, &label);
            if excluded {
                axioms.push(H_EXCLUDED.to_string());
            }
            entries.push(CensusEntry {
                pair: pair.label.clone(),
                form: Form::Hermitian,
                t0: None,
                ramified: ramified_places(pair)?.len() as u32,
                class_count: 1,
                status: if excluded { Status::Excluded } else { Status::Open },
                chi_lambda: &v.mu * BigInt::from(3),
                citation: Some(if excluded { H_EXCLUDED } else { H_CAND }.to_string()),
            });
        }
        entries.sort_by(|a, b| {
            (a.form != Form::CubicDivisionAlgebra, !a.pair.starts_with("a="), label_key(&a.pair), &a.t0)
                .cmp(&(b.form != Form::CubicDivisionAlgebra, !b.pair.starts_with("a="), label_key(&b.pair), &b.t0))
        });
        for e in &entries {
            let values = vec![
                format!("class count {}", e.class_count),
                format!("chi(Lambda) = {}", fmt_rational(&e.chi_lambda, true)),
                format!("ramified places {}", e.ramified),
            ];
            let cand = format!("{} {}{}", e.pair, e.form.name(), e.t0.as_ref().map(|t| format!(" T0={t}")).unwrap_or_default());
            let detail = match e.status {
                Status::Confirmed => String::new(),
                _ => format!("{}: {}", e.status.name(), e.citation.clone().unwrap_or_default()),
            };
            t.cut(cand.clone(), "final status", values, e.status == Status::Confirmed, detail);
            if e.status == Status::Confirmed {
                t.outputs.push(cand);
            }
        }
        let confirmed: u64 = entries.iter().filter(|e| e.status == Status::Confirmed).map(|e| e.class_count).sum();
        let open: u64 = entries.iter().filter(|e| e.status == Status::Open).map(|e| e.class_count).sum();
        t.notes.push(format!("confirmed classes {confirmed}; open at most {open}; upper total {}", confirmed + open));
        axioms.sort();
        axioms.dedup();
        Ok((t.finish(), entries, axioms))
    }
}

/// Report output format.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Markdown,
    Csv,
}

impl ReportFormat {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "markdown" | "md" => Ok(ReportFormat::Markdown),
            "csv" => Ok(ReportFormat::Csv),
            other => Err(Error::unknown("report format", other)),
        }
    }
}

/// Renders a report. The CSV form is the table of exact values for `C1..C40`.
pub fn emit_report(r: &CensusReport, fmt: ReportFormat) -> Result<String> {
    match fmt {
        ReportFormat::Json => Ok(serde_json::to_string_pretty(r)? + "\n"),
        ReportFormat::Markdown => Ok(markdown(r)),
        ReportFormat::Csv => pairs_csv(&r.tables.pairs),
    }
}

/// Parses a JSON report and checks its schema tag.
pub fn load_report(text: &str) -> Result<CensusReport> {
    let r: CensusReport = serde_json::from_str(text)?;
    if r.schema != SCHEMA {
        return Err(Error::Parse { context: "report".into(), message: format!("schema '{}' is not {SCHEMA}", r.schema) });
    }
    Ok(r)
}

/// Renders one stage trace as JSON or Markdown.
pub fn emit_stage(t: &StageTrace, fmt: ReportFormat) -> Result<String> {
    match fmt {
        ReportFormat::Json => Ok(serde_json::to_string_pretty(t)? + "\n"),
        _ => {
            let mut s = String::new();
            stage_markdown(&mut s, t);
            Ok(s)
        }
    }
}

fn pairs_csv(rows: &[PairRow]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Parse { context: "csv".into(), message: e.to_string() };
    w.write_record(["label", "k", "ell", "zeta_k_m1", "l_m2", "mu", "mu_power_of_3", "matches_table"]).map_err(io)?;
    for r in rows {
        w.write_record([
            r.label.clone(),
            r.k.clone(),
            r.ell.clone(),
            fmt_rational(&r.zeta_k_m1, false),
            fmt_rational(&r.l_m2, false),
            fmt_rational(&r.mu, false),
            numerator_is_power_of_3(&r.mu).to_string(),
            r.matches_table.to_string(),
        ])
        .map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Parse { context: "csv".into(), message: e.to_string() })?;
    String::from_utf8(bytes).map_err(|e| Error::Parse { context: "csv".into(), message: e.to_string() })
}

fn q(x: &BigRational) -> String {
    fmt_rational(x, true)
}

fn stage_markdown(s: &mut String, t: &StageTrace) {
    let _ = writeln!(s, "### {}\n\n{}\n", t.stage, t.inputs);
    let _ = writeln!(s, "| candidate | test | values | kept | detail |\n|---|---|---|---|---|");
    for c in &t.cuts {
        let _ = writeln!(
            s,
            "| {} | {} | {} | {} | {} |",
            c.candidate,
            c.bound,
            c.values.join("; "),
            if c.kept { "yes" } else { "no" },
            c.detail
        );
    }
    let _ = writeln!(s, "\nOutputs: {}\n", if t.outputs.is_empty() { "none".into() } else { t.outputs.join(", ") });
    for n in &t.notes {
        let _ = writeln!(s, "- {n}");
    }
    s.push('\n');
}

fn markdown(r: &CensusReport) -> String {
    let mut s = String::new();
    let c = &r.config;
    let _ = writeln!(s, "# Census report ({})\n", r.schema);
    let _ = writeln!(
        s,
        "Prime limit {}, precision {} bits, bounds precision {} bits, qmax {}, re-check {}.\n",
        c.prime_limit, c.precision_bits, c.bounds_precision_bits, c.qmax, c.recheck
    );
    let _ = writeln!(s, "## Totals\n\nConfirmed classes: {}\n\nUpper total: {}\n", r.total_confirmed, r.total_upper);
    let _ = writeln!(s, "Checkpoints certified: {}\n", r.checkpoints_certified);

    let _ = writeln!(s, "## Imaginary quadratic fields\n\n| a | D_ell | h3 | L(-2) | mu |\n|---|---|---|---|---|");
    for k in &r.tables.kq {
        let _ = writeln!(s, "| {} | {} | {} | {} | {} |", k.a, k.d_ell, k.h3, q(&k.l_m2), q(&k.mu));
    }
    let _ = writeln!(s, "\n## Configurations over the rationals\n\n| pair | T0 | q | mu | mu(G/Lambda) | chi(Lambda) |\n|---|---|---|---|---|---|");
    for d in &r.tables.kq_pairs {
        let _ = writeln!(s, "| {} | {} | {} | {} | {} | {} |", d.pair, d.t0, d.q, q(&d.mu), q(&d.mu_lambda), q(&d.chi_lambda));
    }
    let _ = writeln!(s, "\n## Surviving degrees\n\n| d | D_k^(1/d) < | h3 | D_ell/D_k^2 <= | D_k <= |\n|---|---|---|---|---|");
    for row in &r.tables.degree_rows {
        let _ = writeln!(s, "| {} | {} | {} | {} | {} |", row.d, row.root_bound, row.h3, row.x_d, row.r_d);
    }
    let _ = writeln!(
        s,
        "\n## Pairs of degree at least two\n\n| pair | k | zeta_k(-1) | L(-2) | mu | matches table | re-check |\n|---|---|---|---|---|---|---|"
    );
    for p in &r.tables.pairs {
        let rc = p.recheck_identical.map_or("-".to_string(), |b| b.to_string());
        let _ = writeln!(
            s,
            "| {} | {} | {} | {} | {} | {} | {} |",
            p.label,
            p.k,
            q(&p.zeta_k_m1),
            q(&p.l_m2),
            q(&p.mu),
            p.matches_table,
            rc
        );
    }
    let _ = writeln!(s, "\n## Division algebra configurations\n\n| pair | T0 | q | mu | chi(Lambda) |\n|---|---|---|---|---|");
    for d in &r.tables.division {
        let _ = writeln!(s, "| {} | {} | {} | {} | {} |", d.pair, d.t0, d.q, q(&d.mu), q(&d.chi_lambda));
    }
    let _ = writeln!(s, "\n## Entries\n\n| pair | form | T0 | ramified | classes | status | chi(Lambda) | citation |\n|---|---|---|---|---|---|---|---|");
    for e in &r.entries {
        let _ = writeln!(
            s,
            "| {} | {} | {} | {} | {} | {} | {} | {} |",
            e.pair,
            e.form.name(),
            e.t0.as_deref().unwrap_or("-"),
            e.ramified,
            e.class_count,
            e.status.name(),
            q(&e.chi_lambda),
            e.citation.as_deref().unwrap_or("-")
        );
    }
    let _ = writeln!(s, "\nExternal facts used: {}\n", r.axioms_used.join(", "));
    let _ = writeln!(s, "## Stages\n");
    for t in &r.stages {
        stage_markdown(&mut s, t);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_sort_naturally() {
        let mut v = vec!["C10", "C2", "a=15", "a=2", "C1 T={x}"];
        v.sort_by_key(|s| label_key(s));
        assert_eq!(v, vec!["C1 T={x}", "C2", "C10", "a=2", "a=15"]);
    }

    #[test]
    fn kq_cut_and_search() {
        let ds = Dataset::bundled().unwrap();
        let c = Census::new(&ds, CensusConfig::default());
        let (t, f) = c.stage_kq_discriminant_cut().unwrap();
        let a: Vec<u64> = f.iter().map(|k| k.a).collect();
        assert_eq!(a, vec![1, 2, 3, 5, 6, 7, 11, 15, 19, 23, 31]);
        let c59 = t.cuts.iter().find(|c| c.candidate == "D=59").unwrap();
        assert!(!c59.kept && c59.detail.contains("> 40"));

        let pair = ds.pair("a=1").unwrap();
        let s = search_configurations(pair, &crate::arith::rat(1, 96), 1, SearchSpace::AnisotropicAndRamified).unwrap();
        let kept: Vec<_> = s.kept().collect();
        assert_eq!(kept.len(), 1);
        assert_eq!(kept[0].t0()[0].place.p, 5);
        assert_eq!(kept[0].mu_lambda, BigRational::one());
    }
}
