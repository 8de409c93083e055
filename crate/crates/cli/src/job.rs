use std::sync::Arc;

use gtsuper::arith::rat::{parse_rat, rat_str};
use gtsuper::glmn::Module;
use gtsuper::yangian::YangianModule;
use gtsuper::{Rat, SuperShape, Weight};
use serde::Serialize;

/// A failed job: bad input (exit 2) or a bug (exit 3).
#[derive(Debug)]
pub enum CliError {
    Input(String),
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Internal(_) => 3,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Input(s) | CliError::Internal(s) => s,
        }
    }
}

impl From<gtsuper::Error> for CliError {
    fn from(e: gtsuper::Error) -> Self {
        if e.is_internal() {
            CliError::Internal(e.to_string())
        } else {
            CliError::Input(e.to_string())
        }
    }
}

impl From<gtsuper::GtError> for CliError {
    fn from(e: gtsuper::GtError) -> Self {
        CliError::Input(e.to_string())
    }
}

pub fn input<T>(msg: impl Into<String>) -> Result<T, CliError> {
    Err(CliError::Input(msg.into()))
}

/// The job as given on the command line, in canonical form. Embedded in
/// every report.
#[derive(Clone, Debug, Serialize)]
pub struct JobSpec {
    pub command: String,
    pub m: usize,
    pub n: usize,
    pub weights: Vec<String>,
    pub mu: Vec<String>,
    pub r: Option<usize>,
    pub shifts: Vec<String>,
    pub out: Option<String>,
    pub json: bool,
}

/// One factor `L_h(lambda / mu)`; `lambda` lives over gl(m + r | n).
#[derive(Clone, Debug)]
pub struct FactorSpec {
    pub weight: Weight,
    pub mu: Vec<i64>,
    pub h: Rat,
}

#[derive(Clone, Debug)]
pub struct Job {
    pub spec: JobSpec,
    pub shape: SuperShape,
    pub factors: Vec<FactorSpec>,
}

fn parse_mu(s: &str) -> Result<Vec<i64>, CliError> {
    if s.trim().is_empty() {
        return Ok(vec![]);
    }
    s.split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|_| CliError::Input(format!("cannot parse mu {s:?}"))))
        .collect()
}

/// Spreads a list given once, per factor, or not at all over `count` factors.
fn per_factor<T: Clone>(what: &str, v: Vec<T>, count: usize, default: T) -> Result<Vec<T>, CliError> {
    match v.len() {
        0 => Ok(vec![default; count]),
        1 => Ok(vec![v[0].clone(); count]),
        k if k == count => Ok(v),
        k => input(format!("{k} values of --{what} for {count} weights")),
    }
}

pub struct RawArgs {
    pub command: String,
    pub m: usize,
    pub n: usize,
    pub weights: Vec<String>,
    pub mu: Vec<String>,
    pub r: Option<usize>,
    pub shifts: Vec<String>,
    pub out: Option<String>,
    pub json: bool,
}

impl Job {
    pub fn parse(a: RawArgs) -> Result<Job, CliError> {
        let shape = SuperShape::new(a.m, a.n)?;
        let shifts: Vec<Rat> = a
            .shifts
            .iter()
            .map(|s| parse_rat(s).map_err(|e| CliError::Input(e.to_string())))
            .collect::<Result<_, _>>()?;
        let mus: Vec<Vec<i64>> = a.mu.iter().map(|s| parse_mu(s)).collect::<Result<_, _>>()?;
        if let Some(r) = a.r {
            if let Some(bad) = mus.iter().find(|mu| mu.len() != r) {
                return input(format!("mu {bad:?} does not have r = {r} entries"));
            }
        }
        if a.r.is_some_and(|r| r > 0) && mus.is_empty() && a.command != "skew" {
            return input("--r without --mu is only meaningful for skew");
        }
        let count = a.weights.len();
        let mus = per_factor("mu", mus, count, vec![])?;
        let hs = per_factor("shift", shifts.clone(), count, Rat::from_integer(0.into()))?;
        let mut factors = vec![];
        for ((w, mu), h) in a.weights.iter().zip(mus).zip(hs) {
            let r = if mu.is_empty() { a.r.unwrap_or(0) } else { mu.len() };
            let big = SuperShape::new(a.m + r, a.n)?;
            let weight = Weight::parse(big, w)?;
            if !weight.is_covariant() {
                return input(format!("weight {w} is not covariant"));
            }
            factors.push(FactorSpec { weight, mu, h });
        }
        let spec = JobSpec {
            command: a.command,
            m: a.m,
            n: a.n,
            weights: factors.iter().map(|f| f.weight.to_string()).collect(),
            mu: a.mu.iter().map(|s| parse_mu(s).map(|v| join(&v))).collect::<Result<_, _>>()?,
            r: a.r,
            shifts: shifts.iter().map(rat_str).collect(),
            out: a.out,
            json: a.json,
        };
        Ok(Job { spec, shape, factors })
    }

    pub fn single(&self) -> Result<&FactorSpec, CliError> {
        match self.factors.as_slice() {
            [f] => Ok(f),
            fs => input(format!("{} needs exactly one --weight, got {}", self.spec.command, fs.len())),
        }
    }

    pub fn evaluation_only(&self) -> Result<(), CliError> {
        if self.factors.iter().any(|f| !f.mu.is_empty()) {
            return input(format!("{} takes evaluation factors only (no --mu)", self.spec.command));
        }
        Ok(())
    }

    /// The tensor product of all factors, in order.
    pub fn module(&self) -> Result<YangianModule, CliError> {
        if self.factors.is_empty() {
            return input("at least one --weight is required");
        }
        let mut fs = vec![];
        for f in &self.factors {
            fs.push(factor_module(f)?);
        }
        if fs.len() == 1 {
            return Ok(fs.pop().unwrap());
        }
        Ok(YangianModule::tensor(fs)?)
    }
}

pub fn factor_module(f: &FactorSpec) -> Result<YangianModule, CliError> {
    if f.mu.is_empty() {
        let md = Module::build(&f.weight)?;
        Ok(YangianModule::evaluation(Arc::new(md), f.h.clone()))
    } else {
        gtsuper::gt::check_admissible(&f.weight, &f.mu)?;
        Ok(YangianModule::skew(&f.weight, &f.mu, f.h.clone())?)
    }
}

pub fn join(v: &[i64]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}
