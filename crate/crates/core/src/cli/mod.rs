//! The `pushout` command-line front end.
//!
//! ```text
//! pushout <FILE> homology <NAME> <A..B>
//! pushout <FILE> verify <NAME>
//! pushout <FILE> inspect <NAME>
//! ```
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 when the
//! arguments or the document cannot be parsed or a name does not resolve.

mod document;
mod resolve;

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::chain_core::{ChainComplex, VerifyConfig};
use crate::error::Error;
use crate::homology::{homology_effective, homology_via_equivalence, AbelianGroup};
use crate::pipeline::efhm_of_finite_pushout;

pub use document::{Binding, MorphismSpec, ParseError, SpaceDescription};
pub use resolve::{Resolved, Resolver};

#[derive(Debug, Parser)]
#[command(name = "pushout", version, about = "Effective homology of simplicial pushouts")]
pub struct Args {
    /// Space-description document (TOML).
    pub file: PathBuf,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Debug, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Print H_n for every n in an inclusive range `a..b` (or a single `n`).
    Homology { name: String, range: String },
    /// Check simplicial identities, reductions and pipeline invariants.
    Verify { name: String },
    /// Dump basis counts and pipeline intermediates.
    Inspect { name: String },
}

/// What a run printed and how it ended.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

#[derive(Debug, thiserror::Error)]
enum Failure {
    #[error("{0}")]
    Usage(String),
    #[error("parse error at {0}")]
    Parse(ParseError),
    #[error("{0}")]
    Resolve(Error),
    #[error("verification failed: {0}")]
    Verification(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Verification(_) => 1,
            _ => 2,
        }
    }
}

/// Parses command-line arguments (program name first) and runs them.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args = match Args::try_parse_from(args) {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { stdout: text, stderr: String::new(), code }
            } else {
                Outcome { stdout: String::new(), stderr: text, code }
            };
        }
    };
    match std::fs::read_to_string(&args.file) {
        Ok(text) => execute(&text, &args.command),
        Err(e) => Outcome {
            stdout: String::new(),
            stderr: format!("error: cannot read {}: {e}\n", args.file.display()),
            code: 2,
        },
    }
}

/// Runs one command against the text of a description document.
pub fn execute(text: &str, command: &Command) -> Outcome {
    let mut stdout = String::new();
    match dispatch(text, command, &mut stdout) {
        Ok(()) => Outcome { stdout, stderr: String::new(), code: 0 },
        Err(f) => Outcome { stdout, stderr: format!("error: {f}\n"), code: f.code() },
    }
}

fn dispatch(text: &str, command: &Command, out: &mut String) -> Result<(), Failure> {
    let doc = SpaceDescription::parse(text).map_err(Failure::Parse)?;
    let mut resolver = Resolver::new(&doc);
    match command {
        Command::Homology { name, range } => {
            let (lo, hi) = parse_range(range)?;
            let r = resolver.resolve(name).map_err(Failure::Resolve)?;
            let groups = homology(&r, lo, hi)?;
            let blocks: Vec<String> = groups.iter().map(|(n, g)| homology_block(*n, g)).collect();
            out.push_str(&blocks.join("\n"));
            Ok(())
        }
        Command::Verify { name } => {
            let r = resolver.resolve(name).map_err(Failure::Resolve)?;
            verify(&r, out)
        }
        Command::Inspect { name } => {
            let r = resolver.resolve(name).map_err(Failure::Resolve)?;
            inspect(name, &r, out)
        }
    }
}

fn parse_range(text: &str) -> Result<(i32, i32), Failure> {
    let bad = || Failure::Usage(format!("invalid degree range {text:?}, expected a..b"));
    let (lo, hi) = match text.split_once("..") {
        Some((a, b)) => (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?),
        None => {
            let n = text.trim().parse().map_err(|_| bad())?;
            (n, n)
        }
    };
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

/// One report block: the header line and one `Component` line per summand.
pub fn homology_block(n: i32, g: &AbelianGroup) -> String {
    let mut s = format!("Homology in dimension {n}:\n");
    for c in g.components() {
        let _ = writeln!(s, "Component {c}");
    }
    s
}

fn complex_of(r: &Resolved) -> Result<std::sync::Arc<ChainComplex>, Failure> {
    r.space.normalized_chain_complex().map_err(|e| Failure::Verification(e.to_string()))
}

fn homology(r: &Resolved, lo: i32, hi: i32) -> Result<Vec<(i32, AbelianGroup)>, Failure> {
    match &r.pushout {
        Some(p) => {
            let e = efhm_of_finite_pushout(p.clone()).map_err(|e| Failure::Verification(e.to_string()))?;
            Ok((lo..=hi).map(|n| (n, homology_via_equivalence(&e.equivalence, n))).collect())
        }
        None => {
            let c = complex_of(r)?;
            Ok((lo..=hi).map(|n| (n, homology_effective(&c, n))).collect())
        }
    }
}

fn status(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}

fn verify(r: &Resolved, out: &mut String) -> Result<(), Failure> {
    let report = r.space.verify();
    let _ = writeln!(out, "simplicial identities: {} ({} checked)", status(report.passed()), report.checked);
    for v in &report.violations {
        let _ = writeln!(out, "  {v}");
    }
    if !report.passed() {
        return Err(Failure::Verification("simplicial identities".into()));
    }
    let c = complex_of(r)?;
    let d2 = c.is_d_squared_zero();
    let _ = writeln!(out, "d^2 = 0: {}", status(d2));
    if !d2 {
        return Err(Failure::Verification("d^2 = 0".into()));
    }
    let Some(p) = &r.pushout else { return Ok(()) };
    let e = match efhm_of_finite_pushout(p.clone()) {
        Ok(e) => e,
        Err(err) => {
            let _ = writeln!(out, "pushout pipeline: FAIL ({err})");
            return Err(Failure::Verification(err.to_string()));
        }
    };
    let _ = writeln!(out, "short exact sequence identities: pass");
    let chi = e.chi.commutes_with_differentials();
    let _ = writeln!(out, "connecting morphism is a chain map: {}", status(chi));
    let _ = writeln!(out, "comparison isomorphisms: pass");
    let (left, right) = e.equivalence.verify(&VerifyConfig::default());
    for (leg, rep) in [("left", &left), ("right", &right)] {
        let how = if rep.sampled { "sampled" } else { "exhaustive" };
        let _ = writeln!(
            out,
            "{leg} reduction: {} ({} + {} generators, {how})",
            status(rep.passed()),
            rep.checked_big,
            rep.checked_small
        );
        for v in &rep.violations {
            let _ = writeln!(out, "  {v}");
        }
    }
    let top = r.space.top_dim().map_or(0, |t| t as i32 + 1);
    let agree = (0..=top).all(|n| homology_via_equivalence(&e.equivalence, n) == homology_effective(&c, n));
    let _ = writeln!(out, "homology through the equivalence matches C(P): {}", status(agree));
    if chi && left.passed() && right.passed() && agree {
        Ok(())
    } else {
        Err(Failure::Verification("pushout pipeline".into()))
    }
}

fn ranks(c: &ChainComplex) -> String {
    let parts: Vec<String> = c.ranks().iter().map(|(n, r)| format!("{n}:{r}")).collect();
    if parts.is_empty() {
        "(zero)".into()
    } else {
        parts.join(" ")
    }
}

fn inspect(name: &str, r: &Resolved, out: &mut String) -> Result<(), Failure> {
    let counts: Vec<String> = r.space.counts().iter().map(ToString::to_string).collect();
    let _ = writeln!(out, "space {name}");
    let _ = writeln!(out, "nondegenerate simplices by dimension: {}", counts.join(" "));
    let c = complex_of(r)?;
    let _ = writeln!(out, "chain complex ranks: {}", ranks(&c));
    let Some(p) = &r.pushout else { return Ok(()) };
    let e = efhm_of_finite_pushout(p.clone()).map_err(|e| Failure::Verification(e.to_string()))?;
    let nonzero = e.rc.all_generators().filter(|g| !e.chi.image(*g).is_zero()).count();
    let _ = writeln!(out, "cylinder simplices by dimension: {:?}", p.cylinder().space().counts());
    let _ = writeln!(out, "rc ranks: {}", ranks(&e.rc));
    let _ = writeln!(out, "ds ranks: {}", ranks(&e.ds));
    let _ = writeln!(out, "sds ranks: {}", ranks(&e.sds));
    let _ = writeln!(out, "chi: {nonzero} of {} generators with nonzero image", e.rc.total_rank());
    let _ = writeln!(out, "cone2(chi) ranks: {}", ranks(e.cone2_of_chi.complex()));
    let _ = writeln!(out, "big complex ranks: {}", ranks(e.equivalence.big()));
    let _ = writeln!(out, "effective complex ranks: {}", ranks(e.equivalence.right()));
    Ok(())
}
