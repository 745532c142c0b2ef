//! Batch runs: load a tensor, apply operations left to right, write reports.
//!
//! ```json
//! {
//!   "tensor": "p.json",
//!   "operations": [
//!     { "op": "act", "matrix": "a.json", "side": 1 },
//!     { "op": "mul", "operand": "q.json", "rule": "w", "weights": [0.3, 0.7] },
//!     { "op": "power", "m": 2, "rule": "star" },
//!     { "op": "transpose" }
//!   ],
//!   "outputs": [
//!     { "report": "marginals" },
//!     { "report": "bmc", "lambda": [0.5, 0.5, 0.5, 0.5] }
//!   ]
//! }
//! ```
//!
//! Relative paths resolve against the configuration's directory.

use std::fs;
use std::path::{Path, PathBuf};

use cubic_core::{
    accompanying_first, accompanying_second, act, power, transpose12, CubicStochastic12, IterateOptions, MulRule,
    Tolerance, Weights,
};
use serde::Deserialize;

use crate::cli::{bivariate, side, Axis, Which};
use crate::error::{CliError, Result};
use crate::io::{self, Document};

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    pub tensor: PathBuf,
    #[serde(default)]
    pub operations: Vec<Operation>,
    #[serde(default)]
    pub outputs: Vec<Report>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "op", rename_all = "lowercase", deny_unknown_fields)]
pub enum Operation {
    Mul {
        operand: PathBuf,
        rule: String,
        weights: Option<[f64; 2]>,
    },
    Act {
        matrix: PathBuf,
        side: u8,
    },
    Power {
        m: usize,
        #[serde(default = "dot")]
        rule: String,
        weights: Option<[f64; 2]>,
    },
    Transpose,
}

fn dot() -> String {
    "dot".into()
}

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "report", rename_all = "lowercase", deny_unknown_fields)]
pub enum Report {
    Marginals,
    Slices {
        axis: Axis,
    },
    Matricization,
    Bmc {
        lambda: [f64; 4],
        mutate: Option<PathBuf>,
        which: Option<Which>,
    },
    Iterate {
        lambda: [f64; 4],
        mutate: Option<PathBuf>,
        which: Option<Which>,
        x0: PathBuf,
        tol: Option<f64>,
        max_steps: Option<usize>,
    },
}

/// Final tensor plus named report files.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub result: Document,
    pub reports: Vec<(String, String)>,
}

impl Outcome {
    /// Writes `result.json` and every report into `dir`, creating it.
    pub fn write_to(&self, dir: &Path) -> Result<()> {
        fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
        let files = std::iter::once(("result.json".to_string(), self.result.to_text())).chain(self.reports.clone());
        for (name, text) in files {
            let path = dir.join(name);
            fs::write(&path, text).map_err(|e| CliError::io(&path, e))?;
        }
        Ok(())
    }
}

fn rule(name: &str, weights: Option<[f64; 2]>, tol: Tolerance) -> Result<MulRule> {
    match (name, weights) {
        ("dot", None) => Ok(MulRule::Dot),
        ("star", None) => Ok(MulRule::Star),
        ("w", Some([l1, l2])) => Ok(MulRule::Weighted(Weights::with_tolerance(l1, l2, tol)?)),
        _ => Err(CliError::Usage(format!("rule `{name}` needs weights exactly when it is `w`"))),
    }
}

pub fn load_config(path: &Path) -> Result<ScenarioConfig> {
    serde_json::from_str(&io::read_text(path)?).map_err(|e| CliError::parse(path, e))
}

pub fn run(config_path: &Path, tol: Tolerance) -> Result<Outcome> {
    let config = load_config(config_path)?;
    run_config(&config, config_path.parent().unwrap_or(Path::new(".")), tol)
}

pub fn run_config(config: &ScenarioConfig, base: &Path, tol: Tolerance) -> Result<Outcome> {
    let resolve = |p: &Path| base.join(p);
    let mut p = io::load_cs12(&resolve(&config.tensor), tol)?;
    for op in &config.operations {
        p = match op {
            Operation::Mul { operand, rule: name, weights } => {
                let q = io::load_cs12(&resolve(operand), tol)?;
                p.mul(&q, rule(name, *weights, tol)?)?
            }
            Operation::Act { matrix, side: s } => act(&io::load_stochastic(&resolve(matrix), tol)?, &p, side(*s)?)?,
            Operation::Power { m, rule: name, weights } => power(&p, *m, rule(name, *weights, tol)?)?,
            Operation::Transpose => transpose12(&p),
        };
        p = CubicStochastic12::new(p.into_cubic(), tol)?;
    }

    let mut reports = Vec::new();
    for (pos, report) in config.outputs.iter().enumerate() {
        let tag = pos + 1;
        match report {
            Report::Marginals => {
                let doc = Document::Marginals { first: accompanying_first(&p), second: accompanying_second(&p) };
                reports.push((format!("{tag:02}-marginals.json"), doc.to_text()));
            }
            Report::Slices { axis } => {
                for h in 0..p.n() {
                    let slice = p.as_cubic().slice((*axis).into(), h)?;
                    let name = format!("{tag:02}-slice-{}-{}.json", axis.as_str(), h + 1);
                    reports.push((name, Document::Matrix(slice).to_text()));
                }
            }
            Report::Matricization => {
                reports.push((format!("{tag:02}-matricization.csv"), io::matricized_csv(p.as_cubic())));
            }
            Report::Bmc { lambda, mutate, which } => {
                let model = model(&p, lambda, mutate.as_deref(), *which, &resolve, tol)?;
                reports.push((format!("{tag:02}-bmc.json"), Document::Model(model).to_text()));
            }
            Report::Iterate { lambda, mutate, which, x0, tol: stop, max_steps } => {
                let model = model(&p, lambda, mutate.as_deref(), *which, &resolve, tol)?;
                let x0 = io::load_state(&resolve(x0), tol)?;
                let defaults = IterateOptions::default();
                let options = IterateOptions {
                    max_steps: max_steps.unwrap_or(defaults.max_steps),
                    tol: stop.unwrap_or(defaults.tol),
                };
                let run = model.iterate(&x0, options)?;
                let doc = Document::State { state: run.state, steps: Some(run.steps), converged: Some(run.converged) };
                reports.push((format!("{tag:02}-iterate.json"), doc.to_text()));
            }
        }
    }
    Ok(Outcome { result: Document::Cs12(p), reports })
}

fn model(
    p: &CubicStochastic12,
    lambda: &[f64; 4],
    mutate: Option<&Path>,
    which: Option<Which>,
    resolve: &dyn Fn(&Path) -> PathBuf,
    tol: Tolerance,
) -> Result<cubic_core::BlockModel> {
    match (mutate, which) {
        (Some(path), Some(which)) => {
            let a = io::load_stochastic(&resolve(path), tol)?;
            bivariate(p, lambda, Some((&a, which)), tol)
        }
        (None, None) => bivariate(p, lambda, None, tol),
        _ => Err(CliError::Usage("`mutate` and `which` go together".into())),
    }
}
