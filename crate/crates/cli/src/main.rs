//! `fpp`: command-line driver for the census and its building blocks.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use fpp_core::arith::fmt_rational;
use fpp_core::bounds::{eval_named, BoundArgs, BOUND_NAMES, DEFAULT_PREC};
use fpp_core::census::{emit_report, emit_stage, Census, CensusConfig, ReportFormat, STAGES};
use fpp_core::datasets::{Dataset, FieldPairRecord};
use fpp_core::ffpoly::{classified_places_up_to_symmetry, splitting_pattern, RelativePlaceClass};
use fpp_core::ladder::{checkpoints, ladder};
use fpp_core::lvalues::{
    ball_strings, bernoulli_l, real_quadratic_zeta_m1, rel_l, rel_l_minus2_exact, zeta_k, zeta_k_minus1_exact,
    ExactRecovery, LConfig, Qmax, QuadraticCharacter,
};
use fpp_core::real::parse_rational;
use fpp_core::volume::{chi_lambda_and_gamma_lower, mu_base, LocalDatum, ParahoricChoice, ParahoricKind, VolumeContext};
use num_rational::BigRational;

#[derive(Parser)]
#[command(name = "fpp", version, about = "Certified census of fake projective planes")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Working precision in bits (default 192 for L-values, 128 for bounds).
    #[arg(long, global = true)]
    precision_bits: Option<u32>,
    /// Largest prime in the Euler products.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    prime_limit: u64,
    /// Denominator bound for reconstruction: an integer or `auto`.
    #[arg(long, global = true, default_value = "auto")]
    qmax: String,
    /// Directory holding fields.tsv, pairs.tsv and constants.tsv (default: bundled tables).
    #[arg(long, global = true)]
    data_dir: Option<PathBuf>,
}

impl Global {
    fn dataset(&self) -> Result<Dataset> {
        Ok(match &self.data_dir {
            Some(d) => Dataset::load(d).with_context(|| format!("loading tables from {}", d.display()))?,
            None => Dataset::bundled()?,
        })
    }

    fn lconfig(&self) -> LConfig {
        let d = LConfig::default();
        LConfig { prime_limit: self.prime_limit, precision_bits: self.precision_bits.unwrap_or(d.precision_bits) }
    }

    fn qmax(&self) -> Result<Qmax> {
        Ok(Qmax::parse(&self.qmax)?)
    }

    fn bounds_prec(&self) -> u32 {
        self.precision_bits.unwrap_or(DEFAULT_PREC)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run the staged census.
    Census {
        #[command(subcommand)]
        action: CensusAction,
    },
    /// Evaluate L_{ell|k}(s) or zeta_k(s) for a pair.
    Lvalue(LvalueArgs),
    /// Covolumes and Euler characteristics.
    Volume {
        #[command(subcommand)]
        action: VolumeAction,
    },
    /// Analytic discriminant bounds.
    Bounds {
        #[command(subcommand)]
        action: BoundsAction,
    },
    /// Splitting of a rational prime in a field or pair.
    Split(SplitArgs),
}

#[derive(Subcommand)]
enum CensusAction {
    /// Run all stages, or one stage with --stage.
    Run {
        /// One of the stage names; all stages when omitted.
        #[arg(long)]
        stage: Option<String>,
        /// json, markdown or csv.
        #[arg(long, default_value = "markdown")]
        report: String,
        /// Write the report here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Recompute every L-value at twice the prime limit and compare.
        #[arg(long)]
        recheck: bool,
    },
}

#[derive(Args)]
struct LvalueArgs {
    /// Pair label, e.g. C7 or a=6.
    #[arg(long)]
    pair: String,
    /// Integer argument: -2 or >= 2 for L, -1 or >= 2 with --zeta.
    #[arg(long, allow_hyphen_values = true)]
    s: i32,
    /// Evaluate the Dedekind zeta function of k instead.
    #[arg(long)]
    zeta: bool,
}

#[derive(Subcommand)]
enum VolumeAction {
    /// mu, mu(G/Lambda) and chi(Lambda) for an anisotropic place over a prime.
    Chi {
        #[arg(long)]
        pair: String,
        /// Rational prime under the anisotropic place; none for the default collection.
        #[arg(long)]
        t0: Option<u64>,
    },
}

#[derive(Subcommand)]
enum BoundsAction {
    /// Evaluate one named bound.
    Eval {
        /// Bound name.
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(BOUND_NAMES))]
        name: String,
        #[arg(long)]
        d: Option<u32>,
        #[arg(long)]
        h3: Option<u64>,
        #[arg(long)]
        dk: Option<String>,
        #[arg(long)]
        dl: Option<String>,
        /// Regulator over roots of unity.
        #[arg(long)]
        rw: Option<String>,
        #[arg(long)]
        delta: Option<String>,
        #[arg(long)]
        x: Option<String>,
        #[arg(long)]
        w: Option<u32>,
    },
    /// Print the elimination chain for a degree.
    Ladder {
        #[arg(long)]
        degree: u32,
    },
}

#[derive(Args)]
struct SplitArgs {
    /// Field label (absolute splitting).
    #[arg(long, conflicts_with = "pair", required_unless_present = "pair")]
    field: Option<String>,
    /// Pair label (relative classes of the places of k).
    #[arg(long)]
    pair: Option<String>,
    #[arg(long)]
    p: u64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode> {
    let g = &cli.global;
    let ds = g.dataset()?;
    match &cli.command {
        Command::Census { action: CensusAction::Run { stage, report, out, recheck } } => {
            census_run(g, &ds, stage.as_deref(), report, out.as_ref(), *recheck)
        }
        Command::Lvalue(a) => lvalue(g, &ds, a).map(|_| ExitCode::SUCCESS),
        Command::Volume { action: VolumeAction::Chi { pair, t0 } } => {
            volume_chi(g, &ds, pair, *t0).map(|_| ExitCode::SUCCESS)
        }
        Command::Bounds { action } => bounds(g, &ds, action),
        Command::Split(a) => split(&ds, a).map(|_| ExitCode::SUCCESS),
    }
}

fn census_run(
    g: &Global,
    ds: &Dataset,
    stage: Option<&str>,
    report: &str,
    out: Option<&PathBuf>,
    recheck: bool,
) -> Result<ExitCode> {
    let fmt = ReportFormat::parse(report)?;
    let cfg = CensusConfig {
        lvalues: g.lconfig(),
        qmax: g.qmax()?,
        bounds_prec: g.bounds_prec(),
        recheck,
    };
    let census = Census::new(ds, cfg);
    let (text, certified) = match stage {
        Some(name) => {
            if !STAGES.contains(&name) {
                bail!("unknown stage {name}; expected one of {}", STAGES.join(", "));
            }
            let trace = census.run_stage(name)?;
            let certified = checkpoints(&ds.constants, cfg.bounds_prec)?.iter().all(|c| c.certified());
            (emit_stage(&trace, fmt)?, certified)
        }
        None => {
            let r = census.run()?;
            (emit_report(&r, fmt)?, r.checkpoints_certified)
        }
    };
    match out {
        Some(p) => std::fs::write(p, &text).with_context(|| format!("writing {}", p.display()))?,
        None => print!("{text}"),
    }
    if !certified {
        eprintln!("some bound checkpoints are not certified");
        return Ok(ExitCode::FAILURE);
    }
    Ok(ExitCode::SUCCESS)
}

fn print_recovery(name: &str, r: &ExactRecovery) {
    let (lo, hi) = ball_strings(&r.ball);
    println!("{name} in [{lo}, {hi}]");
    println!("reconstructed {} (qmax {})", fmt_rational(&r.value, true), r.qmax);
}

fn print_oracle(value: &BigRational, oracle: Option<BigRational>) {
    match oracle {
        Some(o) => {
            let verdict = if &o == value { "agrees" } else { "DISAGREES" };
            println!("Bernoulli oracle {} ({verdict})", fmt_rational(&o, true));
        }
        None => println!("Bernoulli oracle: not applicable"),
    }
}

fn lvalue(g: &Global, ds: &Dataset, a: &LvalueArgs) -> Result<()> {
    let pair = ds.pair(&a.pair)?;
    let cfg = g.lconfig();
    let qmax = g.qmax()?;
    println!("pair {} (k = {}, ell = {}), P = {}, {} bits", pair.label, pair.k.label, pair.ell.label, cfg.prime_limit, cfg.precision_bits);
    match (a.zeta, a.s) {
        (false, -2) => {
            let r = rel_l_minus2_exact(pair, &cfg, qmax, false)?;
            print_recovery("L(-2)", &r);
            let oracle = if pair.is_over_q() {
                let d = i64::try_from(&pair.ell.disc)?;
                Some(bernoulli_l(&QuadraticCharacter::from_discriminant(-d)?, 3)?)
            } else {
                None
            };
            print_oracle(&r.value, oracle);
        }
        (true, -1) => {
            let r = zeta_k_minus1_exact(&pair.k, &cfg, qmax, false)?;
            print_recovery("zeta_k(-1)", &r);
            let oracle = match pair.k.degree {
                1 => Some(BigRational::new((-1).into(), 12.into())),
                2 => Some(real_quadratic_zeta_m1(i64::try_from(&pair.k.disc)?)?),
                _ => None,
            };
            print_oracle(&r.value, oracle);
        }
        (zeta, s) if s >= 2 => {
            let (name, v) = if zeta {
                ("zeta_k", zeta_k(&pair.k, s as u32, &cfg)?)
            } else {
                ("L", rel_l(pair, s as u32, &cfg)?)
            };
            let (lo, hi) = ball_strings(&v);
            println!("{name}({s}) in [{lo}, {hi}]");
        }
        (zeta, s) => bail!("s = {s} is not supported for {}", if zeta { "zeta_k" } else { "L" }),
    }
    Ok(())
}

fn anisotropic_at(pair: &FieldPairRecord, p: u64) -> Result<LocalDatum> {
    let places = classified_places_up_to_symmetry(pair, p)?;
    let (place, class) = places
        .into_iter()
        .find(|(_, c)| *c == RelativePlaceClass::SplitInL)
        .with_context(|| format!("no place of k over {p} splits in ell"))?;
    let choice = ParahoricChoice::new(ParahoricKind::Anisotropic, place.q.clone());
    Ok(LocalDatum { place, class, choice })
}

fn volume_chi(g: &Global, ds: &Dataset, label: &str, t0: Option<u64>) -> Result<()> {
    let pair = ds.pair(label)?;
    let mu = mu_base(pair, &g.lconfig(), g.qmax()?)?;
    let locals = match t0 {
        Some(p) => vec![anisotropic_at(pair, p)?],
        None => Vec::new(),
    };
    let h3 = pair.ell.h3_required()?;
    if let Some(l) = locals.first() {
        println!("T0 place over {} with q = {}", l.place.p, l.place.q);
    }
    let ctx = VolumeContext::new(pair.clone(), mu, locals)?;
    let r = chi_lambda_and_gamma_lower(&ctx, h3);
    println!("muBase      {}", fmt_rational(&r.mu_base, true));
    println!("muLambda    {}", fmt_rational(&r.mu_lambda, true));
    println!("chiLambda   {}", fmt_rational(&r.chi_lambda, true));
    println!("indexUpper  {}", r.index_upper);
    println!("powerOf3    {}", r.power_of_3);
    Ok(())
}

fn opt_rational(s: &Option<String>) -> Result<Option<BigRational>> {
    Ok(match s {
        Some(s) => Some(parse_rational(s)?),
        None => None,
    })
}

fn bounds(g: &Global, ds: &Dataset, action: &BoundsAction) -> Result<ExitCode> {
    let prec = g.bounds_prec();
    match action {
        BoundsAction::Eval { name, d, h3, dk, dl, rw, delta, x, w } => {
            let args = BoundArgs {
                d: *d,
                h3: *h3,
                dk: opt_rational(dk)?,
                dl: opt_rational(dl)?,
                rw: opt_rational(rw)?,
                delta: opt_rational(delta)?,
                x: opt_rational(x)?,
                w: *w,
            };
            let (v, arg) = eval_named(name, &args, prec)?;
            let (lo, hi) = ball_strings(&v);
            println!("{name} in [{lo}, {hi}]");
            if let Some(a) = arg {
                println!("at argument {}", fmt_rational(&a, true));
            }
            Ok(ExitCode::SUCCESS)
        }
        BoundsAction::Ladder { degree } => {
            let l = ladder(*degree, &ds.constants, prec)?;
            println!("{}", l.label);
            for s in &l.steps {
                let mark = if s.holds { "ok " } else { "NO " };
                match (&s.checkpoint, &s.external) {
                    (Some(c), _) => {
                        let cert = if c.certified() && c.digits_agree() { "certified" } else { "NOT certified" };
                        println!("  {mark}{}  [{cert}]", c.line());
                    }
                    (None, Some(ext)) => println!("  {mark}{}  [external: {ext}]", s.text),
                    (None, None) => println!("  {mark}{}", s.text),
                }
            }
            println!("outcome: {:?}", l.outcome);
            Ok(if l.certified() { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }
    }
}

fn split(ds: &Dataset, a: &SplitArgs) -> Result<()> {
    if let Some(label) = &a.field {
        let f = ds.field(label)?;
        let s = splitting_pattern(f, a.p)?;
        let places: Vec<String> = s.places.iter().map(|(e, f)| format!("e={e} f={f}")).collect();
        println!("{} over {}: {} ({:?})", f.label, a.p, places.join(", "), s.source);
    } else if let Some(label) = &a.pair {
        let pair = ds.pair(label)?;
        for (pl, class) in classified_places_up_to_symmetry(pair, a.p)? {
            println!("{} place over {} (e={} f={} q={} tag {}): {}", pair.label, pl.p, pl.e, pl.f, pl.q, pl.multiplicity_tag, class.name());
        }
    }
    Ok(())
}
