//! `gtsuper`: build Gelfand-Tsetlin modules of gl(m|n) and Y(gl(m|n)) and
//! report on them as JSON.

mod commands;
mod job;

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use job::{CliError, Job, RawArgs};

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(name = "gtsuper", version, about = "Exact Gelfand-Tsetlin computations for gl(m|n) and its Yangian")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    /// Even rank.
    #[arg(long, global = true, default_value_t = 1)]
    m: usize,
    /// Odd rank.
    #[arg(long, global = true, default_value_t = 1)]
    n: usize,
    /// Weight "even|odd", e.g. "2,1|1". Repeat for tensor factors.
    #[arg(long, global = true, allow_hyphen_values = true)]
    weight: Vec<String>,
    /// Skew parameter "a,b,..." for skew factors; once for all factors or once per factor.
    #[arg(long, global = true, allow_hyphen_values = true)]
    mu: Vec<String>,
    /// Length of mu; skew weights live over gl(m+r|n).
    #[arg(long, global = true)]
    r: Option<usize>,
    /// Spectral shift "p/q"; once for all factors or once per factor.
    #[arg(long, global = true, allow_hyphen_values = true)]
    shift: Vec<String>,
    /// Write the JSON report to this file.
    #[arg(long, global = true)]
    out: Option<String>,
    /// Print the JSON report on stdout.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// List Gelfand-Tsetlin patterns of a weight (or a skew weight with --mu).
    Patterns,
    /// Matrices of the generators E_kk, E_k,k+1, E_k+1,k in the pattern basis.
    Module,
    /// Tensor product of evaluation and skew factors.
    Tensor,
    /// Simultaneous diagonalization of the d_k(u) with eigenvalue functions.
    Spectrum,
    /// Tame / not tame verdict with a Jordan witness when not tame.
    Tame,
    /// Drinfeld polynomials of the highest-weight vector.
    Drinfeld,
    /// Strong and arithmetic non-crossing conditions of a weight collection.
    Noncross,
    /// Skew module L(lambda/mu), or the admissible mu for --r.
    Skew,
    /// Tensor-product vectors xi built by lowering the highest vector.
    Xi {
        /// Use leading Laurent coefficients at poles.
        #[arg(long)]
        regularized: bool,
    },
    /// Run an identity suite: superalgebra, defrel, lemma-dx, lemma-relations, berezinian, skew-invariance or all.
    Verify { suite: String },
}

impl Cmd {
    fn name(&self) -> String {
        match self {
            Cmd::Patterns => "patterns",
            Cmd::Module => "module",
            Cmd::Tensor => "tensor",
            Cmd::Spectrum => "spectrum",
            Cmd::Tame => "tame",
            Cmd::Drinfeld => "drinfeld",
            Cmd::Noncross => "noncross",
            Cmd::Skew => "skew",
            Cmd::Xi { .. } => "xi",
            Cmd::Verify { .. } => "verify",
        }
        .to_string()
    }
}

fn run(cli: Cli) -> Result<bool, CliError> {
    let job = Job::parse(RawArgs {
        command: cli.command.name(),
        m: cli.m,
        n: cli.n,
        weights: cli.weight,
        mu: cli.mu,
        r: cli.r,
        shifts: cli.shift,
        out: cli.out,
        json: cli.json,
    })?;
    let outcome = match &cli.command {
        Cmd::Patterns => commands::patterns(&job),
        Cmd::Module => commands::module(&job),
        Cmd::Tensor => commands::tensor(&job),
        Cmd::Spectrum => commands::spectrum(&job),
        Cmd::Tame => commands::tame(&job),
        Cmd::Drinfeld => commands::drinfeld(&job),
        Cmd::Noncross => commands::noncross(&job),
        Cmd::Skew => commands::skew(&job),
        Cmd::Xi { regularized } => commands::xi(&job, *regularized),
        Cmd::Verify { suite } => {
            let mut o = commands::verify(&job, suite)?;
            o.result["suite"] = json!(suite);
            Ok(o)
        }
    }?;
    let report = json!({
        "schema_version": SCHEMA_VERSION,
        "job": job.spec,
        "result": outcome.result,
    });
    let text = serde_json::to_string_pretty(&report).expect("serializable") + "\n";
    if let Some(path) = &job.spec.out {
        std::fs::write(path, &text).map_err(|e| CliError::Input(format!("cannot write {path}: {e}")))?;
    }
    if job.spec.json {
        print!("{text}");
    } else {
        println!("{}", outcome.summary);
    }
    Ok(!outcome.violated)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(3),
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
