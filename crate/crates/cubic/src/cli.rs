use std::ffi::OsString;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use cubic_core::{
    accompanying_first, accompanying_second, act, apply_qso, apply_qso_symmetric, build_bivariate, induced_chain,
    permute_frontal, power, transpose12, ActionSide, BlockModel, ChainVariant, CubicStochastic12, IterateOptions,
    MixingWeights, MulRule, Permutation, SimplexVector, SliceAxis, StochasticMatrix, Tolerance, Weights,
};
use serde::Deserialize;

use crate::error::{CliError, Result};
use crate::io::{self, Document, Kind};
use crate::scenario;

#[derive(Debug, Parser)]
#[command(name = "cubic", version, about = "Algebra of cubic stochastic matrices of type (1,2)")]
pub struct Cli {
    /// Tolerance for stochasticity checks.
    #[arg(long, global = true)]
    pub eps: Option<f64>,
    /// Output file (a directory for `scenario`); stdout when omitted.
    #[arg(long, short, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Product of two cs12 tensors.
    Mul {
        lhs: PathBuf,
        rhs: PathBuf,
        /// `dot`, `star`, or `w λ1 λ2`.
        #[arg(long, num_args = 1..=3, required = true, allow_negative_numbers = true)]
        rule: Vec<String>,
    },
    /// Action of a column-stochastic matrix on a cs12 tensor.
    Act {
        matrix: PathBuf,
        tensor: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        side: u8,
    },
    /// m-th power under a multiplication rule.
    Power {
        tensor: PathBuf,
        #[arg(short)]
        m: usize,
        #[arg(long, num_args = 1..=3, default_value = "dot", allow_negative_numbers = true)]
        rule: Vec<String>,
    },
    /// (1,2)-transpose.
    Transpose { tensor: PathBuf },
    /// Accompanying matrices.
    Marginals {
        tensor: PathBuf,
        #[arg(long, conflicts_with = "second")]
        first: bool,
        #[arg(long)]
        second: bool,
    },
    /// One slice as a raw matrix; `--index` is 1-based.
    Slice {
        tensor: PathBuf,
        #[arg(long, value_enum)]
        axis: Axis,
        #[arg(long)]
        index: usize,
    },
    /// Frontal unfolding, as CSV or an aligned table.
    Matricize {
        tensor: PathBuf,
        #[arg(long)]
        csv: bool,
    },
    /// Bivariate Markov model, optionally mutated by an action.
    Bmc {
        tensor: PathBuf,
        /// l11 l12 l21 l22
        #[arg(long, num_args = 4, required = true, allow_negative_numbers = true)]
        lambda: Vec<f64>,
        #[arg(long, requires = "which")]
        mutate: Option<PathBuf>,
        #[arg(long, value_enum, requires = "mutate")]
        which: Option<Which>,
    },
    /// Iterate a model until the L1 change drops below `--tol`.
    Iterate {
        model: PathBuf,
        #[arg(long)]
        x0: PathBuf,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        #[arg(long, default_value_t = 10_000)]
        max_steps: usize,
    },
    /// Quadratic stochastic operator of a 3-stochastic tensor at a point.
    QsoApply {
        tensor: PathBuf,
        /// Comma-separated point of the simplex.
        #[arg(long, value_delimiter = ',', required = true, allow_negative_numbers = true)]
        x: Vec<f64>,
        /// Reject tensors with p_ijk != p_jik.
        #[arg(long)]
        symmetric: bool,
    },
    /// Permute frontal slices; `--sigma` is 1-based one-line notation.
    QsoPermute {
        tensor: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        sigma: Vec<usize>,
    },
    /// Check a document against a kind (default: its declared kind).
    Validate {
        file: PathBuf,
        #[arg(long)]
        kind: Option<String>,
    },
    /// Run a scenario configuration.
    Scenario { config: PathBuf },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Axis {
    Horizontal,
    Lateral,
    Frontal,
}

impl Axis {
    pub fn as_str(self) -> &'static str {
        match self {
            Axis::Horizontal => "horizontal",
            Axis::Lateral => "lateral",
            Axis::Frontal => "frontal",
        }
    }
}

impl From<Axis> for SliceAxis {
    fn from(axis: Axis) -> Self {
        match axis {
            Axis::Horizontal => SliceAxis::Horizontal,
            Axis::Lateral => SliceAxis::Lateral,
            Axis::Frontal => SliceAxis::Frontal,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Which {
    Q1,
    Q2,
    Q3,
}

impl From<Which> for ChainVariant {
    fn from(which: Which) -> Self {
        match which {
            Which::Q1 => ChainVariant::Q1,
            Which::Q2 => ChainVariant::Q2,
            Which::Q3 => ChainVariant::Q3,
        }
    }
}

pub fn side(value: u8) -> Result<ActionSide> {
    match value {
        1 => Ok(ActionSide::First),
        2 => Ok(ActionSide::Second),
        other => Err(CliError::Usage(format!("side must be 1 or 2, got {other}"))),
    }
}

fn decimal(text: &str) -> Result<f64> {
    text.parse().map_err(|_| CliError::Usage(format!("`{text}` is not a decimal number")))
}

/// Parses `dot`, `star` or `w λ1 λ2`.
pub fn parse_rule(words: &[String], tol: Tolerance) -> Result<MulRule> {
    match words {
        [name] if name == "dot" => Ok(MulRule::Dot),
        [name] if name == "star" => Ok(MulRule::Star),
        [name, l1, l2] if name == "w" => Ok(MulRule::Weighted(Weights::with_tolerance(decimal(l1)?, decimal(l2)?, tol)?)),
        _ => Err(CliError::Usage(format!("unrecognized rule `{}`; use dot, star, or w <l1> <l2>", words.join(" ")))),
    }
}

pub fn bivariate(
    p: &CubicStochastic12,
    lambda: &[f64],
    mutate: Option<(&StochasticMatrix, Which)>,
    tol: Tolerance,
) -> Result<BlockModel> {
    let &[l11, l12, l21, l22] = lambda else {
        return Err(CliError::Usage(format!("expected 4 mixing weights, got {}", lambda.len())));
    };
    let weights = MixingWeights::bivariate(l11, l12, l21, l22, tol)?;
    Ok(match mutate {
        Some((a, which)) => induced_chain(a, p, &weights, which.into())?,
        None => build_bivariate(p, &weights)?,
    })
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| CliError::io(path, e)),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes()).map_err(|e| CliError::io("<stdout>", e))
        }
    }
}

pub fn execute(cli: Cli) -> Result<()> {
    let tol = match cli.eps {
        Some(eps) => Tolerance::new(eps)?,
        None => Tolerance::default(),
    };
    let out = cli.out.as_deref();
    let text = match cli.command {
        Command::Mul { lhs, rhs, rule } => {
            let rule = parse_rule(&rule, tol)?;
            let a = io::load_cs12(&lhs, tol)?;
            let b = io::load_cs12(&rhs, tol)?;
            Document::Cs12(a.mul(&b, rule)?).to_text()
        }
        Command::Act { matrix, tensor, side: s } => {
            let a = io::load_stochastic(&matrix, tol)?;
            let p = io::load_cs12(&tensor, tol)?;
            Document::Cs12(act(&a, &p, side(s)?)?).to_text()
        }
        Command::Power { tensor, m, rule } => {
            let rule = parse_rule(&rule, tol)?;
            Document::Cs12(power(&io::load_cs12(&tensor, tol)?, m, rule)?).to_text()
        }
        Command::Transpose { tensor } => Document::Cs12(transpose12(&io::load_cs12(&tensor, tol)?)).to_text(),
        Command::Marginals { tensor, first, second } => {
            let p = io::load_cs12(&tensor, tol)?;
            if first {
                Document::Stochastic(accompanying_first(&p)).to_text()
            } else if second {
                Document::Stochastic(accompanying_second(&p)).to_text()
            } else {
                Document::Marginals { first: accompanying_first(&p), second: accompanying_second(&p) }.to_text()
            }
        }
        Command::Slice { tensor, axis, index } => {
            let grid = io::load_grid(&tensor, tol)?;
            if index == 0 {
                return Err(cubic_core::Error::IndexOutOfRange { index, n: grid.n() }.into());
            }
            Document::Matrix(grid.slice(axis.into(), index - 1)?).to_text()
        }
        Command::Matricize { tensor, csv } => {
            let grid = io::load_grid(&tensor, tol)?;
            if csv {
                io::matricized_csv(&grid)
            } else {
                io::matricized_table(&grid)
            }
        }
        Command::Bmc { tensor, lambda, mutate, which } => {
            let p = io::load_cs12(&tensor, tol)?;
            let a = mutate.as_deref().map(|path| io::load_stochastic(path, tol)).transpose()?;
            let mutation = a.as_ref().zip(which);
            Document::Model(bivariate(&p, &lambda, mutation, tol)?).to_text()
        }
        Command::Iterate { model, x0, tol: stop, max_steps } => {
            let model = io::load_model(&model, tol)?;
            let x0 = io::load_state(&x0, tol)?;
            let run = model.iterate(&x0, IterateOptions { max_steps, tol: stop })?;
            Document::State { state: run.state, steps: Some(run.steps), converged: Some(run.converged) }.to_text()
        }
        Command::QsoApply { tensor, x, symmetric } => {
            let p = io::load_3stoch(&tensor, tol)?;
            let x = SimplexVector::new(x, tol)?;
            let image = if symmetric { apply_qso_symmetric(&p, &x, tol)? } else { apply_qso(&p, &x)? };
            Document::Simplex(image).to_text()
        }
        Command::QsoPermute { tensor, sigma } => {
            let p = io::load_3stoch(&tensor, tol)?;
            let sigma = Permutation::from_one_based(&sigma)?;
            Document::ThreeStochastic(permute_frontal(&sigma, &p)?).to_text()
        }
        Command::Validate { file, kind } => {
            let raw = io::parse_raw(&io::read_text(&file)?, &file)?;
            let target = match kind {
                Some(k) => k.parse::<Kind>().map_err(CliError::Usage)?,
                None => raw.declared_kind(&file)?,
            };
            let doc = io::interpret(&raw, target, tol, &file)?;
            format!("valid {target} n={}\n", doc.n())
        }
        Command::Scenario { config } => {
            let outcome = scenario::run(&config, tol)?;
            return match out {
                Some(dir) => outcome.write_to(dir),
                None if outcome.reports.is_empty() => emit(None, &outcome.result.to_text()),
                None => Err(CliError::Usage("scenario reports need an output directory (--out)".into())),
            };
        }
    };
    emit(out, &text)
}

/// Parses arguments, runs, prints any error, and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 4 } else { 0 };
        }
    };
    match execute(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
