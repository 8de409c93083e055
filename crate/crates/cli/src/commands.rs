use gtsuper::arith::rat::rat_str;
use gtsuper::drinfeld::{
    arithmetic_noncrossing_with, drinfeld_data, drinfeld_of_factors, highest_weight_series, noncrossing_collision,
    theta_to_skew, PairReading, ThetaCollection,
};
use gtsuper::glmn::{verify_superalgebra, Module};
use gtsuper::gt::{admissible_mus, enumerate_patterns, enumerate_skew_patterns};
use gtsuper::spectra::{build_xi, gt_spectrum, XiMode};
use gtsuper::yangian::{
    verify_berezinian, verify_defining_relations, verify_lemma_dx, verify_lemma_relations, verify_skew_invariance,
};
use gtsuper::{rq, Error, Rat, Report};
use serde_json::{json, Value};

use crate::job::{input, join, CliError, Job};

/// Result JSON plus a one-line human summary.
pub struct Outcome {
    pub result: Value,
    pub summary: String,
    /// Exit code 3 after writing the report, for verification failures.
    pub violated: bool,
}

fn done(result: Value, summary: String) -> Result<Outcome, CliError> {
    Ok(Outcome { result, summary, violated: false })
}

fn strs(v: &[Rat]) -> Vec<String> {
    v.iter().map(rat_str).collect()
}

pub fn patterns(job: &Job) -> Result<Outcome, CliError> {
    let f = job.single()?;
    let ps = if f.mu.is_empty() { enumerate_patterns(&f.weight)? } else { enumerate_skew_patterns(&f.weight, &f.mu)? };
    done(json!({ "count": ps.len(), "patterns": ps }), format!("count {}", ps.len()))
}

pub fn module(job: &Job) -> Result<Outcome, CliError> {
    job.evaluation_only()?;
    let md = Module::build(&job.single()?.weight)?;
    let js = serde_json::to_value(md.to_json()).expect("serializable");
    done(js, format!("dim {}", md.dim()))
}

pub fn tensor(job: &Job) -> Result<Outcome, CliError> {
    let ym = job.module()?;
    let factors: Vec<Value> = job
        .factors
        .iter()
        .map(|f| json!({ "weight": f.weight.to_string(), "mu": join(&f.mu), "shift": rat_str(&f.h) }))
        .collect();
    let res = json!({
        "dim": ym.dim(),
        "factors": factors,
        "labels": ym.labels,
        "parity": ym.parity,
    });
    done(res, format!("dim {}", ym.dim()))
}

fn verdict_line(rep: &Value) -> String {
    let v = rep["verdict"].as_str().unwrap_or("?");
    match &rep["separation"] {
        Value::String(s) => format!("{v} ({s} spectrum)"),
        _ => format!("{v} (eigenvalue collisions)"),
    }
}

pub fn spectrum(job: &Job) -> Result<Outcome, CliError> {
    let rep = gt_spectrum(&job.module()?)?.to_json();
    let line = verdict_line(&rep);
    done(rep, line)
}

pub fn tame(job: &Job) -> Result<Outcome, CliError> {
    let mut rep = gt_spectrum(&job.module()?)?.to_json();
    if let Value::Object(o) = &mut rep {
        o.remove("eigen");
    }
    let line = rep["verdict"].as_str().unwrap_or("?").to_string();
    done(rep, line)
}

pub fn drinfeld(job: &Job) -> Result<Outcome, CliError> {
    let ym = job.module()?;
    let data = drinfeld_data(&highest_weight_series(&ym)?)?;
    let mut res = json!({ "drinfeld": data.to_json() });
    if job.factors.iter().all(|f| f.mu.is_empty()) {
        let fs: Vec<_> = job.factors.iter().map(|f| (f.weight.clone(), f.h.clone())).collect();
        let closed = drinfeld_of_factors(job.shape, &fs);
        if closed != data {
            return Err(CliError::Internal(format!(
                "closed form {} differs from highest-weight route {}",
                closed.to_json(),
                data.to_json()
            )));
        }
        res["closed_form_agrees"] = json!(true);
    }
    let n_p = data.p.values().filter(|v| !v.is_empty()).count();
    done(res, format!("{} nontrivial P, Q0 degree {}, Q1 degree {}", n_p, data.q0.len(), data.q1.len()))
}

fn theta(job: &Job) -> Result<ThetaCollection, CliError> {
    job.evaluation_only()?;
    let h = match job.factors.first() {
        Some(f) => f.h.clone(),
        None => return input("at least one --weight is required"),
    };
    if job.factors.iter().any(|f| f.h != h) {
        return input("noncross takes a single common shift");
    }
    Ok(ThetaCollection::new(job.factors.iter().map(|f| f.weight.clone()).collect(), h)?)
}

pub fn noncross(job: &Job) -> Result<Outcome, CliError> {
    let t = theta(job)?;
    let collision = noncrossing_collision(&t)?;
    let strong = collision.is_none();
    let mut arithmetic = json!({});
    for (name, reading) in [("all_pairs", PairReading::AllPairs), ("adjacent_sorted", PairReading::AdjacentSorted)] {
        arithmetic[name] = match arithmetic_noncrossing_with(&t, reading) {
            Ok(b) => json!(b),
            Err(Error::HypothesisNotMet(s)) => json!({ "not_applicable": s }),
            Err(e) => return Err(e.into()),
        };
    }
    let skew = if strong {
        match theta_to_skew(&t) {
            Ok(p) => json!({
                "lambda": p.lambda.to_string(),
                "mu": join(&p.mu),
                "r": p.r,
                "q": p.q,
                "tail": p.tail.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
            }),
            Err(e) if !e.is_internal() => json!({ "unavailable": e.to_string() }),
            Err(e) => return Err(e.into()),
        }
    } else {
        Value::Null
    };
    let res = json!({
        "strong": strong,
        "arithmetic": arithmetic,
        "collision": collision.map(|(a, b)| json!([a, b])),
        "skew_presentation": skew,
    });
    done(res, format!("strong non-crossing: {strong}"))
}

pub fn skew(job: &Job) -> Result<Outcome, CliError> {
    let f = job.single()?;
    if f.mu.is_empty() {
        let Some(r) = job.spec.r.filter(|&r| r > 0) else {
            return input("skew needs --mu, or --r to list the admissible mu");
        };
        let mus: Vec<String> = admissible_mus(&f.weight, r).iter().map(|m| join(m)).collect();
        let line = format!("{} admissible mu", mus.len());
        return done(json!({ "admissible_mu": mus }), line);
    }
    let ym = crate::job::factor_module(f)?;
    let pts = points();
    let rep = verify_skew_invariance(&ym, &pts);
    let patterns: Vec<_> = ym.labels.iter().map(|l| l[0].clone()).collect();
    let res = json!({
        "dim": ym.dim(),
        "r": f.mu.len(),
        "patterns": patterns,
        "invariance": rep,
    });
    let violated = !rep.is_clean();
    Ok(Outcome { result: res, summary: format!("dim {}", ym.dim()), violated })
}

pub fn xi(job: &Job, regularized: bool) -> Result<Outcome, CliError> {
    let ym = job.module()?;
    let mode = if regularized { XiMode::Regularized } else { XiMode::Literal };
    let mut out = vec![];
    let mut zero = 0;
    for labels in &ym.labels {
        let entry = match build_xi(&ym, labels, mode) {
            Ok(v) => {
                let z = v.iter().all(|x| *x == Rat::from_integer(0.into()));
                zero += usize::from(z);
                json!({ "labels": labels, "xi": strs(&v), "zero": z })
            }
            Err(e) if e.is_internal() => return Err(e.into()),
            Err(e) => json!({ "labels": labels, "error": e.to_string() }),
        };
        out.push(entry);
    }
    let res = json!({ "mode": if regularized { "regularized" } else { "literal" }, "vectors": out });
    done(res, format!("{} vectors, {} zero", ym.labels.len(), zero))
}

fn points() -> Vec<Rat> {
    vec![rq(31, 7), rq(-23, 13), rq(53, 17)]
}

fn pairs() -> Vec<(Rat, Rat)> {
    let p = points();
    vec![(p[0].clone(), p[1].clone()), (p[1].clone(), p[2].clone()), (p[2].clone(), p[0].clone())]
}

pub const SUITES: [&str; 6] =
    ["superalgebra", "defrel", "lemma-dx", "lemma-relations", "berezinian", "skew-invariance"];

pub fn verify(job: &Job, suite: &str) -> Result<Outcome, CliError> {
    let names: Vec<&str> = if suite == "all" {
        SUITES.to_vec()
    } else if SUITES.contains(&suite) {
        vec![suite]
    } else {
        return input(format!("unknown suite {suite:?}; expected one of {} or all", SUITES.join(", ")));
    };
    let ym = job.module()?;
    let mut reps: Vec<Report> = vec![];
    for name in names {
        reps.push(match name {
            "superalgebra" => {
                if job.factors.len() != 1 || !job.factors[0].mu.is_empty() {
                    if suite == "all" {
                        continue;
                    }
                    return input("superalgebra checks a single evaluation module");
                }
                verify_superalgebra(&Module::build(&job.factors[0].weight)?)
            }
            "defrel" => verify_defining_relations(&ym, &pairs()),
            "lemma-dx" => verify_lemma_dx(&ym, &points()),
            "lemma-relations" => verify_lemma_relations(&ym, &pairs()),
            "berezinian" => verify_berezinian(&ym, &points(), &points()),
            _ => verify_skew_invariance(&ym, &points()),
        });
    }
    let bad: usize = reps.iter().map(|r| r.violations.len()).sum();
    let checked: usize = reps.iter().map(|r| r.checked).sum();
    let res = json!({ "reports": reps, "clean": bad == 0 });
    Ok(Outcome { result: res, summary: format!("{checked} checks, {bad} violations"), violated: bad > 0 })
}
