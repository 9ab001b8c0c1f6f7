//! Command-line front end. Exit status: 0 on PASS, 1 on a failed
//! verification, 2 on a usage error.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::afweyl::{fold_to_alcove, LexPoint};
use crate::demchar::cache::{clear_entries, list_entries, validate_entries};
use crate::demchar::{
    highest_weight_violation, verify_fusion, verify_qsystem_with, CharacterCache,
    CharacterRecord, Grading,
};
use crate::error::Error;
use crate::rational::fmt_coords;
use crate::rootsys::{FiniteWeight, RootSystemData};
use crate::selftest::all_sweeps;
use crate::serial::{certificate_from_json, weight_strings, AlcoveRecord, CertificateRecord};
use crate::steinberg::{canonical_decomposition, steinberg_certificate, verify_certificate};

const NODE_HELP: &str = "\
Weights are given in fundamental-weight coordinates, comma separated, in the
Bourbaki node order of the finite type (node 0 is the affine node):

  A_n   1 - 2 - ... - n
  B_n   1 - 2 - ... - (n-1) => n          node n short
  C_n   1 - 2 - ... - (n-1) <= n          node n long
  D_n   1 - 2 - ... - (n-2) < (n-1), n    nodes n-1, n are the fork
  E_6   1 - 3 - 4 - 5 - 6, 2 attached to 4
  E_7   1 - 3 - 4 - 5 - 6 - 7, 2 attached to 4
  E_8   1 - 3 - 4 - 5 - 6 - 7 - 8, 2 attached to 4
  F_4   1 - 2 => 3 - 4                    nodes 1, 2 long
  G_2   1 <= 2                            node 1 short

Twisted labels use their finite part: A2^2 -> A_1, A2n^2 -> C_n,
A(2n-1)^2 -> C_n, D(n+1)^2 -> B_n, E6^2 -> F_4, D4^3 -> G_2.

Rationals are written as integers or p/q. The cache directory may also be
set with ALCOVE_CACHE_DIR.";

#[derive(Debug, Parser)]
#[command(
    name = "alcove",
    version,
    about = "Alcove folding, dominance certificates and Demazure characters",
    after_long_help = NODE_HELP
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Directory for cached characters.
    #[arg(long, global = true, value_name = "DIR")]
    cache_dir: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Target {
    /// Affine label such as A2^1, E6^2 or D4^3.
    #[arg(long, short = 'a')]
    algebra: String,
    #[arg(long, short = 'l')]
    level: i64,
    /// Dominant weight, e.g. 1,0,2.
    #[arg(long, short = 'w', allow_hyphen_values = true)]
    weight: String,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GradingArg {
    Current,
    Extremal,
}

impl From<GradingArg> for Grading {
    fn from(g: GradingArg) -> Self {
        match g {
            GradingArg::Current => Grading::Current,
            GradingArg::Extremal => Grading::FromExtremal,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Dominance certificate w t_mu (l Lambda_0 - lambda), with verification.
    Certificate {
        #[arg(long, short = 'a', required_unless_present = "verify_only")]
        algebra: Option<String>,
        #[arg(long, short = 'l', required_unless_present = "verify_only")]
        level: Option<i64>,
        #[arg(long, short = 'w', allow_hyphen_values = true, required_unless_present = "verify_only")]
        weight: Option<String>,
        /// Verify a JSON certificate from FILE, or stdin for "-".
        #[arg(long, alias = "verify", value_name = "FILE", conflicts_with_all = ["algebra", "level", "weight"])]
        verify_only: Option<String>,
    },
    /// Fold a rational point into the fundamental alcove.
    Locate {
        #[arg(long, short = 'a')]
        algebra: String,
        /// Rational point, e.g. 1/2,-3.
        #[arg(long, short = 'p', allow_hyphen_values = true)]
        point: String,
    },
    /// Canonical decomposition lambda = l * sum(parts) + remainder.
    Decompose(Target),
    /// Demazure character of D(l, lambda).
    Character {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value = "current")]
        grading: GradingArg,
    },
    /// Compare D(l, lambda) with the product of its fusion factors.
    VerifyFusion(Target),
    /// Check the Q-system relation at node i.
    VerifyQsystem {
        #[command(flatten)]
        target: Target,
        #[arg(long, short = 'i')]
        node: usize,
        #[arg(long, value_enum, default_value = "current")]
        grading: GradingArg,
    },
    /// Randomized invariant sweeps.
    Selftest {
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Inspect the character cache.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(Debug, Clone, Copy, Subcommand)]
enum CacheAction {
    List,
    Validate,
    Clear,
}

enum Failure {
    Usage(String),
    Other(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Cache(_) => Failure::Other(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Other(e.to_string())
    }
}

type Outcome = std::result::Result<bool, Failure>;

struct Ctx<'a> {
    json: bool,
    cache_dir: Option<PathBuf>,
    out: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn emit_json<T: Serialize>(&mut self, value: &T) -> std::io::Result<()> {
        let text = serde_json::to_string_pretty(value).expect("records serialize");
        writeln!(self.out, "{text}")
    }

    fn cache(&self) -> Result<CharacterCache, Failure> {
        match &self.cache_dir {
            Some(d) => Ok(CharacterCache::with_dir(d)?),
            None => Ok(CharacterCache::in_memory()),
        }
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    let cache_dir = cli
        .cache_dir
        .or_else(|| std::env::var_os("ALCOVE_CACHE_DIR").map(PathBuf::from));
    let mut ctx = Ctx {
        json: cli.json,
        cache_dir,
        out,
    };
    match dispatch(&mut ctx, cli.command) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Other(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}

fn parse_target(algebra: &str, level: i64, weight: &str) -> Result<(RootSystemData, i64, FiniteWeight), Failure> {
    let rs = RootSystemData::from_label_str(algebra)?;
    let w = FiniteWeight::parse(weight)?;
    rs.check_rank(&w)?;
    Ok((rs, level, w))
}

fn dispatch(ctx: &mut Ctx<'_>, cmd: Command) -> Outcome {
    match cmd {
        Command::Certificate {
            verify_only: Some(src),
            ..
        } => verify_only(ctx, &src),
        Command::Certificate {
            algebra,
            level,
            weight,
            ..
        } => {
            let (rs, level, lam) = parse_target(
                algebra.as_deref().unwrap_or_default(),
                level.unwrap_or_default(),
                weight.as_deref().unwrap_or_default(),
            )?;
            certificate(ctx, &rs, level, &lam)
        }
        Command::Locate { algebra, point } => {
            let rs = RootSystemData::from_label_str(&algebra)?;
            let x = FiniteWeight::parse(&point)?;
            rs.check_rank(&x)?;
            locate(ctx, &rs, &x)
        }
        Command::Decompose(t) => {
            let (rs, level, lam) = parse_target(&t.algebra, t.level, &t.weight)?;
            decompose(ctx, &rs, level, &lam)
        }
        Command::Character { target: t, grading } => {
            let (rs, level, lam) = parse_target(&t.algebra, t.level, &t.weight)?;
            character(ctx, &rs, level, &lam, grading.into())
        }
        Command::VerifyFusion(t) => {
            let (rs, level, lam) = parse_target(&t.algebra, t.level, &t.weight)?;
            fusion(ctx, &rs, level, &lam)
        }
        Command::VerifyQsystem {
            target: t,
            node,
            grading,
        } => {
            let (rs, level, lam) = parse_target(&t.algebra, t.level, &t.weight)?;
            qsystem(ctx, &rs, level, &lam, node, grading.into())
        }
        Command::Selftest { samples, seed } => selftest(ctx, samples, seed),
        Command::Cache { action } => cache_admin(ctx, action),
    }
}

fn certificate(ctx: &mut Ctx<'_>, rs: &RootSystemData, level: i64, lam: &FiniteWeight) -> Outcome {
    let cert = steinberg_certificate(rs, level, lam)?;
    let verdict = verify_certificate(rs, &cert);
    let mut rec = CertificateRecord::new(&cert);
    rec.verified = Some(verdict.is_ok());
    rec.failure = verdict.as_ref().err().map(ToString::to_string);
    if ctx.json {
        ctx.emit_json(&rec)?;
    } else {
        let o = &mut ctx.out;
        writeln!(o, "label      {}", cert.label)?;
        writeln!(o, "level      {}", cert.level)?;
        writeln!(o, "lambda     {}", fmt_coords(&cert.lambda.coords))?;
        writeln!(o, "mu         {}", fmt_coords(&cert.mu.coords))?;
        writeln!(o, "w          {:?}", cert.w.word())?;
        writeln!(
            o,
            "Lambda     {} + {} Lambda_0 + ({}) delta",
            fmt_coords(&cert.dominant.classical.coords),
            cert.dominant.level,
            rec.dominant.delta_degree
        )?;
        writeln!(o, "v_D word   {:?} (length {})", cert.v_d_word, cert.v_d_word.len())?;
        match &verdict {
            Ok(()) => writeln!(o, "verified   true")?,
            Err(why) => writeln!(o, "verified   false ({why})")?,
        }
    }
    Ok(verdict.is_ok())
}

fn verify_only(ctx: &mut Ctx<'_>, src: &str) -> Outcome {
    let text = if src == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        s
    } else {
        std::fs::read_to_string(src).map_err(|e| Failure::Usage(format!("{src}: {e}")))?
    };
    let rec = certificate_from_json(&text)?;
    let rs = RootSystemData::new(rec.label);
    let verdict = match rec.to_certificate(&rs) {
        Ok(cert) => verify_certificate(&rs, &cert).map_err(|e| e.to_string()),
        Err(e) => Err(e.to_string()),
    };
    if ctx.json {
        let v = serde_json::json!({
            "label": rec.label,
            "verified": verdict.is_ok(),
            "failure": verdict.as_ref().err(),
        });
        ctx.emit_json(&v)?;
    } else {
        match &verdict {
            Ok(()) => writeln!(ctx.out, "PASS: certificate for {} verified", rec.label)?,
            Err(why) => writeln!(ctx.out, "FAIL: {why}")?,
        }
    }
    Ok(verdict.is_ok())
}

fn locate(ctx: &mut Ctx<'_>, rs: &RootSystemData, x: &FiniteWeight) -> Outcome {
    let a = fold_to_alcove(rs, &LexPoint::perturbed(rs, x.clone()))?;
    let rec = AlcoveRecord::new(rs, x, &a);
    if ctx.json {
        ctx.emit_json(&rec)?;
    } else {
        let o = &mut ctx.out;
        writeln!(o, "point           {}", rec.point.join(","))?;
        writeln!(o, "alcove word     {:?} (length {})", rec.word, rec.length)?;
        writeln!(o, "mu'             {}", rec.mu_prime_coords.join(","))?;
        writeln!(o, "u               {:?}", rec.linear_word)?;
        writeln!(o, "representative  {}", rec.representative.join(","))?;
    }
    Ok(true)
}

fn decompose(ctx: &mut Ctx<'_>, rs: &RootSystemData, level: i64, lam: &FiniteWeight) -> Outcome {
    let d = canonical_decomposition(rs, level, lam)?;
    let valid = d.validate(rs, lam).is_ok();
    if ctx.json {
        let v = serde_json::json!({
            "label": rs.label,
            "level": level,
            "lambda": weight_strings(lam),
            "parts": d.parts.iter().map(weight_strings).collect::<Vec<_>>(),
            "remainder": weight_strings(&d.remainder),
            "valid": valid,
        });
        ctx.emit_json(&v)?;
    } else {
        let parts: Vec<String> = d.parts.iter().map(|p| format!("[{}]", fmt_coords(&p.coords))).collect();
        let parts = if parts.is_empty() { "0".to_string() } else { parts.join(" + ") };
        writeln!(
            ctx.out,
            "[{}] = {level} * ({parts}) + [{}]",
            fmt_coords(&lam.coords),
            fmt_coords(&d.remainder.coords)
        )?;
        let factors: Vec<String> = d
            .factor_weights()
            .iter()
            .map(|w| format!("D({level}, [{}])", fmt_coords(&w.coords)))
            .chain((!d.remainder_is_trivial()).then(|| format!("D({level}, [{}])", fmt_coords(&d.remainder.coords))))
            .collect();
        if !factors.is_empty() {
            writeln!(ctx.out, "fusion factors: {}", factors.join(" * "))?;
        }
    }
    Ok(valid)
}

fn character(
    ctx: &mut Ctx<'_>,
    rs: &RootSystemData,
    level: i64,
    lam: &FiniteWeight,
    grading: Grading,
) -> Outcome {
    let cache = ctx.cache()?;
    let f = cache.character(rs, level, lam)?;
    let violation = highest_weight_violation(rs, &f, lam);
    if ctx.json {
        let key = crate::demchar::CacheKey {
            label: rs.label,
            level,
            lambda: lam.to_ints().expect("parsed as dominant integral"),
        };
        ctx.emit_json(&CharacterRecord::new(&key, &f))?;
    } else {
        let o = &mut ctx.out;
        writeln!(o, "D({level}, [{}]) for {}", fmt_coords(&lam.coords), rs.label)?;
        writeln!(o, "dimension  {}", f.dimension())?;
        writeln!(o, "terms      {}", f.len())?;
        writeln!(o, "classical  {}", f.classical())?;
        writeln!(o, "graded     {}", f.graded(grading))?;
        if let Some(why) = &violation {
            writeln!(o, "highest-weight check failed: {why}")?;
        }
    }
    Ok(violation.is_none())
}

fn fusion(ctx: &mut Ctx<'_>, rs: &RootSystemData, level: i64, lam: &FiniteWeight) -> Outcome {
    let cache = ctx.cache()?;
    let rep = verify_fusion(&cache, rs, level, lam, None)?;
    if ctx.json {
        let v = serde_json::json!({
            "label": rs.label,
            "level": level,
            "lambda": weight_strings(lam),
            "parts": rep.decomposition.parts.iter().map(weight_strings).collect::<Vec<_>>(),
            "remainder": weight_strings(&rep.decomposition.remainder),
            "lhs_dimension": rep.lhs_dimension,
            "factor_dimensions": rep.factors.iter().map(|f| f.dimension).collect::<Vec<_>>(),
            "rhs_dimension": rep.rhs_dimension,
            "first_difference": rep.difference,
            "passed": rep.passed(),
        });
        ctx.emit_json(&v)?;
    } else {
        writeln!(ctx.out, "{rep}")?;
    }
    Ok(rep.passed())
}

fn qsystem(
    ctx: &mut Ctx<'_>,
    rs: &RootSystemData,
    level: i64,
    lam: &FiniteWeight,
    node: usize,
    grading: Grading,
) -> Outcome {
    let cache = ctx.cache()?;
    let rep = verify_qsystem_with(&cache, rs, level, lam, node, grading)?;
    if ctx.json {
        let v = serde_json::json!({
            "label": rs.label,
            "level": level,
            "lambda": weight_strings(lam),
            "node": node,
            "mu": weight_strings(&rep.mu),
            "shift": rep.shift,
            "grading": format!("{:?}", rep.grading),
            "dimensions": [rep.dim_top, rep.dim_sub, rep.dim_quotient],
            "ungraded_passed": rep.ungraded_passed(),
            "graded_passed": rep.graded_passed(),
        });
        ctx.emit_json(&v)?;
    } else {
        writeln!(ctx.out, "{rep}")?;
    }
    Ok(rep.passed())
}

fn selftest(ctx: &mut Ctx<'_>, samples: usize, seed: u64) -> Outcome {
    let reports = all_sweeps(samples, seed);
    let ok = reports.iter().all(|r| r.passed());
    if ctx.json {
        let v: Vec<_> = reports
            .iter()
            .map(|r| {
                serde_json::json!({
                    "name": r.name,
                    "total": r.total,
                    "failures": r.failures,
                })
            })
            .collect();
        ctx.emit_json(&serde_json::json!({ "seed": seed, "samples": samples, "sweeps": v, "passed": ok }))?;
    } else {
        for r in &reports {
            writeln!(ctx.out, "{r}")?;
        }
    }
    Ok(ok)
}

fn cache_admin(ctx: &mut Ctx<'_>, action: CacheAction) -> Outcome {
    let dir = ctx
        .cache_dir
        .clone()
        .ok_or_else(|| Failure::Usage("cache commands need --cache-dir or ALCOVE_CACHE_DIR".into()))?;
    match action {
        CacheAction::List => {
            let entries = list_entries(&dir)?;
            let ok = entries.iter().all(|e| e.record.is_ok());
            if ctx.json {
                let v: Vec<_> = entries
                    .iter()
                    .map(|e| match &e.record {
                        Ok(r) => serde_json::json!({
                            "file": e.file_name(), "label": r.label, "level": r.level,
                            "lambda_coords": r.lambda_coords, "terms": r.terms.len(),
                        }),
                        Err(why) => serde_json::json!({ "file": e.file_name(), "invalid": why }),
                    })
                    .collect();
                ctx.emit_json(&v)?;
            } else {
                for e in &entries {
                    match &e.record {
                        Ok(r) => writeln!(
                            ctx.out,
                            "{}  {} l={} lambda={:?} terms={}",
                            e.file_name(),
                            r.label,
                            r.level,
                            r.lambda_coords,
                            r.terms.len()
                        )?,
                        Err(why) => writeln!(ctx.out, "{}  INVALID: {why}", e.file_name())?,
                    }
                }
            }
            Ok(ok)
        }
        CacheAction::Validate => {
            let results = validate_entries(&dir)?;
            let ok = results.iter().all(|(_, v)| v.is_ok());
            if ctx.json {
                let v: Vec<_> = results
                    .iter()
                    .map(|(e, v)| match v {
                        Ok(dim) => serde_json::json!({ "file": e.file_name(), "valid": true, "dimension": dim }),
                        Err(why) => serde_json::json!({ "file": e.file_name(), "valid": false, "reason": why }),
                    })
                    .collect();
                ctx.emit_json(&v)?;
            } else {
                for (e, v) in &results {
                    match v {
                        Ok(dim) => writeln!(ctx.out, "PASS {}  dimension {dim}", e.file_name())?,
                        Err(why) => writeln!(ctx.out, "FAIL {}  {why}", e.file_name())?,
                    }
                }
            }
            Ok(ok)
        }
        CacheAction::Clear => {
            let rep = clear_entries(&dir)?;
            if ctx.json {
                let kept: Vec<_> = rep
                    .kept
                    .iter()
                    .map(|(p, why)| serde_json::json!({ "file": p.display().to_string(), "invalid": why }))
                    .collect();
                ctx.emit_json(&serde_json::json!({ "removed": rep.removed.len(), "kept": kept }))?;
            } else {
                writeln!(ctx.out, "removed {} entries", rep.removed.len())?;
                for (p, why) in &rep.kept {
                    writeln!(ctx.out, "kept unreadable {}: {why}", p.display())?;
                }
            }
            Ok(rep.kept.is_empty())
        }
    }
}
