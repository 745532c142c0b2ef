//! Document and CSV formats.
//!
//! Tensors are JSON objects
//!
//! ```json
//! { "kind": "cs12", "n": 2, "order": 3, "layout": "frontal-major", "values": [ ... ] }
//! ```
//!
//! with `values` in `(k, i, j)` order for order 3 and row-major for order 2.
//! An optional `eps` overrides the loading tolerance for that document.
//! Numbers are written as shortest round-trip decimals, so `save ∘ load` is
//! value-exact.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use cubic_core::{
    BlockModel, Cubic, Cubic3Stochastic, CubicStochastic12, Matrix, MixingWeights, SimplexVector, StackedState,
    StochasticMatrix, StochasticType, Tolerance, Unfolding,
};
use serde::Deserialize;

use crate::error::{CliError, Result};

pub const LAYOUT: &str = "frontal-major";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    /// Column-stochastic square matrix.
    Ns,
    Cs12,
    ThreeStochastic,
    /// Unvalidated matrix or cubic grid.
    Raw,
    Simplex,
    Marginals,
    Model,
    State,
    /// Validation target only; loads as a raw grid.
    Type23,
    /// Validation target only; loads as a raw grid.
    Type13,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Ns => "ns",
            Kind::Cs12 => "cs12",
            Kind::ThreeStochastic => "3stoch",
            Kind::Raw => "raw",
            Kind::Simplex => "simplex",
            Kind::Marginals => "marginals",
            Kind::Model => "model",
            Kind::State => "state",
            Kind::Type23 => "type23",
            Kind::Type13 => "type13",
        }
    }
}

impl FromStr for Kind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Ok(match s {
            "ns" => Kind::Ns,
            "cs12" => Kind::Cs12,
            "3stoch" => Kind::ThreeStochastic,
            "raw" => Kind::Raw,
            "simplex" => Kind::Simplex,
            "marginals" => Kind::Marginals,
            "model" => Kind::Model,
            "state" => Kind::State,
            "type23" => Kind::Type23,
            "type13" => Kind::Type13,
            other => return Err(format!("unknown document kind `{other}`")),
        })
    }
}

impl std::fmt::Display for Kind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A loaded, validated document.
#[derive(Debug, Clone, PartialEq)]
pub enum Document {
    Stochastic(StochasticMatrix),
    Matrix(Matrix),
    Cs12(CubicStochastic12),
    ThreeStochastic(Cubic3Stochastic),
    Cubic(Cubic),
    Simplex(SimplexVector),
    Marginals { first: StochasticMatrix, second: StochasticMatrix },
    Model(BlockModel),
    State { state: StackedState, steps: Option<usize>, converged: Option<bool> },
}

impl Document {
    pub fn kind(&self) -> Kind {
        match self {
            Document::Stochastic(_) => Kind::Ns,
            Document::Matrix(_) | Document::Cubic(_) => Kind::Raw,
            Document::Cs12(_) => Kind::Cs12,
            Document::ThreeStochastic(_) => Kind::ThreeStochastic,
            Document::Simplex(_) => Kind::Simplex,
            Document::Marginals { .. } => Kind::Marginals,
            Document::Model(_) => Kind::Model,
            Document::State { .. } => Kind::State,
        }
    }

    pub fn n(&self) -> usize {
        match self {
            Document::Stochastic(m) => m.n(),
            Document::Matrix(m) => m.n(),
            Document::Cs12(p) => p.n(),
            Document::ThreeStochastic(p) => p.n(),
            Document::Cubic(p) => p.n(),
            Document::Simplex(x) => x.n(),
            Document::Marginals { first, .. } => first.n(),
            Document::Model(m) => m.n(),
            Document::State { state, .. } => state.n(),
        }
    }

    /// Renders the document in its canonical text form.
    pub fn to_text(&self) -> String {
        let mut w = Writer::new(self.kind(), self.n());
        match self {
            Document::Stochastic(m) => w.matrix(m.as_matrix()),
            Document::Matrix(m) => w.matrix(m),
            Document::Cs12(p) => w.cubic(p.as_cubic()),
            Document::ThreeStochastic(p) => w.cubic(p.as_cubic()),
            Document::Cubic(p) => w.cubic(p),
            Document::Simplex(x) => w.list("values", x.as_slice()),
            Document::Marginals { first, second } => {
                w.rows("first", first.as_matrix().as_slice(), first.n());
                w.rows("second", second.as_matrix().as_slice(), second.n());
            }
            Document::Model(m) => {
                w.scalar("s", m.s());
                w.rows("lambda", m.weights().as_slice(), m.s());
                let blocks: Vec<&[f64]> = m.blocks().iter().map(|b| b.as_matrix().as_slice()).collect();
                w.nested("blocks", &blocks, m.n());
                w.rows("assembled", m.assembled().as_slice(), m.assembled().n());
            }
            Document::State { state, steps, converged } => {
                w.scalar("s", state.parts().len());
                let parts: Vec<&[f64]> = state.parts().iter().map(|x| x.as_slice()).collect();
                w.nested("parts", &parts, state.n());
                if let Some(steps) = steps {
                    w.scalar("steps", steps);
                }
                if let Some(converged) = converged {
                    w.scalar("converged", converged);
                }
            }
        }
        w.finish()
    }
}

/// Shortest decimal that parses back to the same `f64`.
pub fn format_number(x: f64) -> String {
    serde_json::to_string(&x).unwrap_or_else(|_| String::from("null"))
}

struct Writer {
    out: String,
}

impl Writer {
    fn new(kind: Kind, n: usize) -> Self {
        let mut out = String::from("{\n");
        let _ = write!(out, "  \"kind\": \"{kind}\",\n  \"n\": {n}");
        Self { out }
    }

    fn scalar(&mut self, key: &str, value: impl std::fmt::Display) {
        let _ = write!(self.out, ",\n  \"{key}\": {value}");
    }

    fn matrix(&mut self, m: &Matrix) {
        self.scalar("order", 2);
        self.scalar("layout", format_args!("\"{LAYOUT}\""));
        self.rows("values", m.as_slice(), m.n());
    }

    fn cubic(&mut self, p: &Cubic) {
        let n = p.n();
        self.scalar("order", 3);
        self.scalar("layout", format_args!("\"{LAYOUT}\""));
        let _ = write!(self.out, ",\n  \"values\": [");
        for (k, slice) in p.as_slice().chunks(n * n).enumerate() {
            if k > 0 {
                self.out.push_str(",\n");
            }
            for (i, row) in slice.chunks(n).enumerate() {
                self.out.push_str(if i > 0 { ",\n    " } else { "\n    " });
                self.out.push_str(&join(row));
            }
        }
        self.out.push_str("\n  ]");
    }

    fn list(&mut self, key: &str, values: &[f64]) {
        let _ = write!(self.out, ",\n  \"{key}\": [{}]", join(values));
    }

    fn rows(&mut self, key: &str, values: &[f64], width: usize) {
        let _ = write!(self.out, ",\n  \"{key}\": [");
        for (i, row) in values.chunks(width).enumerate() {
            self.out.push_str(if i > 0 { ",\n    " } else { "\n    " });
            self.out.push_str(&join(row));
        }
        self.out.push_str("\n  ]");
    }

    fn nested(&mut self, key: &str, items: &[&[f64]], width: usize) {
        let _ = write!(self.out, ",\n  \"{key}\": [");
        for (b, item) in items.iter().enumerate() {
            self.out.push_str(if b > 0 { ",\n    [" } else { "\n    [" });
            for (i, row) in item.chunks(width).enumerate() {
                self.out.push_str(if i > 0 { ",\n      " } else { "\n      " });
                self.out.push_str(&join(row));
            }
            self.out.push_str("\n    ]");
        }
        self.out.push_str("\n  ]");
    }

    fn finish(mut self) -> String {
        self.out.push_str("\n}\n");
        self.out
    }
}

fn join(values: &[f64]) -> String {
    values.iter().map(|&x| format_number(x)).collect::<Vec<_>>().join(", ")
}

/// Structural view of a document before any validation.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawDocument {
    pub kind: String,
    pub n: usize,
    pub order: Option<u8>,
    pub layout: Option<String>,
    pub values: Option<Vec<f64>>,
    pub eps: Option<f64>,
    pub first: Option<Vec<f64>>,
    pub second: Option<Vec<f64>>,
    pub s: Option<usize>,
    pub lambda: Option<Vec<f64>>,
    pub blocks: Option<Vec<Vec<f64>>>,
    pub assembled: Option<Vec<f64>>,
    pub parts: Option<Vec<Vec<f64>>>,
    pub steps: Option<usize>,
    pub converged: Option<bool>,
}

impl RawDocument {
    pub fn declared_kind(&self, path: &Path) -> Result<Kind> {
        self.kind.parse().map_err(|e| CliError::parse(path, e))
    }
}

pub fn parse_raw(text: &str, path: &Path) -> Result<RawDocument> {
    serde_json::from_str(text).map_err(|e| CliError::parse(path, e))
}

fn field<'a, T>(value: &'a Option<T>, name: &str, path: &Path) -> Result<&'a T> {
    value.as_ref().ok_or_else(|| CliError::parse(path, format!("missing field `{name}`")))
}

fn tensor_values(raw: &RawDocument, order: u8, path: &Path) -> Result<Vec<f64>> {
    if let Some(layout) = &raw.layout {
        if layout != LAYOUT {
            return Err(CliError::parse(path, format!("unsupported layout `{layout}`")));
        }
    }
    let declared = raw.order.unwrap_or(order);
    if declared != order {
        return Err(CliError::parse(path, format!("expected order {order}, found {declared}")));
    }
    Ok(field(&raw.values, "values", path)?.clone())
}

/// Interprets `raw` as a document of kind `target`, running that kind's
/// validator. The declared kind is not consulted.
pub fn interpret(raw: &RawDocument, target: Kind, tol: Tolerance, path: &Path) -> Result<Document> {
    let tol = match raw.eps {
        Some(eps) => Tolerance::new(eps)?,
        None => tol,
    };
    let n = raw.n;
    let cubic = |values| Cubic::new(n, values);
    Ok(match target {
        Kind::Ns => Document::Stochastic(StochasticMatrix::new(Matrix::new(n, tensor_values(raw, 2, path)?)?, tol)?),
        Kind::Cs12 => Document::Cs12(CubicStochastic12::new(cubic(tensor_values(raw, 3, path)?)?, tol)?),
        Kind::ThreeStochastic => {
            Document::ThreeStochastic(Cubic3Stochastic::new(cubic(tensor_values(raw, 3, path)?)?, tol)?)
        }
        Kind::Type23 | Kind::Type13 => {
            let grid = cubic(tensor_values(raw, 3, path)?)?;
            let kind = if target == Kind::Type23 { StochasticType::Type23 } else { StochasticType::Type13 };
            grid.validate(kind, tol).map_err(cubic_core::Error::from)?;
            Document::Cubic(grid)
        }
        Kind::Raw => match raw.order {
            Some(2) => Document::Matrix(Matrix::new(n, tensor_values(raw, 2, path)?)?),
            Some(3) => Document::Cubic(cubic(tensor_values(raw, 3, path)?)?),
            Some(other) => return Err(CliError::parse(path, format!("raw documents have order 2 or 3, found {other}"))),
            None => return Err(CliError::parse(path, "missing field `order`")),
        },
        Kind::Simplex => {
            let values = tensor_values(raw, 1, path)?;
            if values.len() != n {
                return Err(cubic_core::Error::Length { expected: n, found: values.len() }.into());
            }
            Document::Simplex(SimplexVector::new(values, tol)?)
        }
        Kind::Marginals => {
            let first = StochasticMatrix::new(Matrix::new(n, field(&raw.first, "first", path)?.clone())?, tol)?;
            let second = StochasticMatrix::new(Matrix::new(n, field(&raw.second, "second", path)?.clone())?, tol)?;
            Document::Marginals { first, second }
        }
        Kind::Model => {
            let s = *field(&raw.s, "s", path)?;
            let weights = MixingWeights::new(s, field(&raw.lambda, "lambda", path)?.clone(), tol)?;
            let blocks = field(&raw.blocks, "blocks", path)?
                .iter()
                .map(|b| Ok(StochasticMatrix::new(Matrix::new(n, b.clone())?, tol)?))
                .collect::<Result<Vec<_>>>()?;
            let model = cubic_core::build_general(blocks, &weights)?;
            if let Some(assembled) = &raw.assembled {
                let given = Matrix::new(n * s, assembled.clone())?;
                if given.max_abs_diff(model.assembled()) > tol.eps() {
                    return Err(CliError::parse(path, "`assembled` disagrees with `blocks` and `lambda`"));
                }
            }
            Document::Model(model)
        }
        Kind::State => {
            let parts = field(&raw.parts, "parts", path)?.clone();
            if let Some(s) = raw.s {
                if s != parts.len() {
                    return Err(cubic_core::Error::Length { expected: s, found: parts.len() }.into());
                }
            }
            for part in &parts {
                if part.len() != n {
                    return Err(cubic_core::Error::Length { expected: n, found: part.len() }.into());
                }
            }
            Document::State { state: StackedState::from_vecs(parts, tol)?, steps: raw.steps, converged: raw.converged }
        }
    })
}

/// Parses `text` as a document of kind `expected`. The declared kind must
/// match, except that `raw` tensors may be loaded as any tensor kind.
pub fn parse_document(text: &str, expected: Kind, tol: Tolerance, path: &Path) -> Result<Document> {
    let raw = parse_raw(text, path)?;
    let declared = raw.declared_kind(path)?;
    let convertible = declared == Kind::Raw && matches!(expected, Kind::Ns | Kind::Cs12 | Kind::ThreeStochastic);
    if declared != expected && !convertible {
        return Err(CliError::KindMismatch {
            path: path.to_path_buf(),
            expected: expected.to_string(),
            found: raw.kind.clone(),
        });
    }
    interpret(&raw, expected, tol, path)
}

pub fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| CliError::io(path, e))
}

fn is_csv(path: &Path) -> bool {
    path.extension().is_some_and(|e| e.eq_ignore_ascii_case("csv"))
}

/// Loads a document of kind `expected`. Paths ending in `.csv` are read as
/// matricized tensors.
pub fn load(path: &Path, expected: Kind, tol: Tolerance) -> Result<Document> {
    if is_csv(path) {
        let grid = load_matricized_csv_any(path)?;
        return Ok(match expected {
            Kind::Cs12 => Document::Cs12(CubicStochastic12::new(grid, tol)?),
            Kind::ThreeStochastic => Document::ThreeStochastic(Cubic3Stochastic::new(grid, tol)?),
            Kind::Raw => Document::Cubic(grid),
            other => {
                return Err(CliError::KindMismatch {
                    path: path.to_path_buf(),
                    expected: other.to_string(),
                    found: "matricized csv".into(),
                })
            }
        });
    }
    parse_document(&read_text(path)?, expected, tol, path)
}

/// Loads any order-3 tensor document (validated as declared) or matricized
/// CSV as a bare grid.
pub fn load_grid(path: &Path, tol: Tolerance) -> Result<Cubic> {
    if is_csv(path) {
        return load_matricized_csv_any(path);
    }
    let raw = parse_raw(&read_text(path)?, path)?;
    let declared = raw.declared_kind(path)?;
    match interpret(&raw, declared, tol, path)? {
        Document::Cs12(p) => Ok(p.into_cubic()),
        Document::ThreeStochastic(p) => Ok(p.into_cubic()),
        Document::Cubic(grid) => Ok(grid),
        other => Err(CliError::KindMismatch {
            path: path.to_path_buf(),
            expected: "order-3 tensor".into(),
            found: other.kind().to_string(),
        }),
    }
}

pub fn load_cs12(path: &Path, tol: Tolerance) -> Result<CubicStochastic12> {
    match load(path, Kind::Cs12, tol)? {
        Document::Cs12(p) => Ok(p),
        _ => unreachable!(),
    }
}

pub fn load_3stoch(path: &Path, tol: Tolerance) -> Result<Cubic3Stochastic> {
    match load(path, Kind::ThreeStochastic, tol)? {
        Document::ThreeStochastic(p) => Ok(p),
        _ => unreachable!(),
    }
}

pub fn load_stochastic(path: &Path, tol: Tolerance) -> Result<StochasticMatrix> {
    match load(path, Kind::Ns, tol)? {
        Document::Stochastic(m) => Ok(m),
        _ => unreachable!(),
    }
}

pub fn load_model(path: &Path, tol: Tolerance) -> Result<BlockModel> {
    match load(path, Kind::Model, tol)? {
        Document::Model(m) => Ok(m),
        _ => unreachable!(),
    }
}

pub fn load_state(path: &Path, tol: Tolerance) -> Result<StackedState> {
    match load(path, Kind::State, tol)? {
        Document::State { state, .. } => Ok(state),
        _ => unreachable!(),
    }
}

pub fn save(path: &Path, doc: &Document) -> Result<()> {
    fs::write(path, doc.to_text()).map_err(|e| CliError::io(path, e))
}

fn read_csv_rows(path: &Path) -> Result<Vec<Vec<f64>>> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_path(path)
        .map_err(|e| CliError::parse(path, e))?;
    let mut rows = Vec::new();
    for (r, record) in reader.records().enumerate() {
        let record = record.map_err(|e| CliError::parse(path, e))?;
        let row = record
            .iter()
            .enumerate()
            .map(|(c, cell)| {
                cell.parse::<f64>()
                    .map_err(|_| CliError::parse(path, format!("row {}, column {}: `{cell}` is not a number", r + 1, c + 1)))
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    Ok(rows)
}

fn fold_rows(rows: Vec<Vec<f64>>, n: usize, path: &Path) -> Result<Cubic> {
    if rows.len() != n {
        return Err(CliError::parse(path, format!("expected {n} rows, found {}", rows.len())));
    }
    for (r, row) in rows.iter().enumerate() {
        if row.len() != n * n {
            return Err(CliError::parse(path, format!("row {} has {} columns, expected {}", r + 1, row.len(), n * n)));
        }
    }
    Ok(Unfolding::new(n, n * n, rows.concat())?.fold()?)
}

/// Reads an `n × n²` matricized CSV; columns `k·n .. (k+1)·n` hold frontal
/// slice `k`.
pub fn load_matricized_csv(path: &Path, n: usize) -> Result<Cubic> {
    fold_rows(read_csv_rows(path)?, n, path)
}

/// [`load_matricized_csv`] with `n` taken from the row count.
pub fn load_matricized_csv_any(path: &Path) -> Result<Cubic> {
    let rows = read_csv_rows(path)?;
    let n = rows.len();
    if n == 0 {
        return Err(CliError::parse(path, "empty csv"));
    }
    fold_rows(rows, n, path)
}

pub fn matricized_csv(p: &Cubic) -> String {
    let unfolding = cubic_core::matricize_frontal(p);
    let mut writer = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
    for r in 0..unfolding.rows() {
        writer.write_record(unfolding.row(r).iter().map(|&x| format_number(x))).expect("in-memory write");
    }
    String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("ascii output")
}

pub fn save_matricized_csv(path: &Path, p: &Cubic) -> Result<()> {
    fs::write(path, matricized_csv(p)).map_err(|e| CliError::io(path, e))
}

/// Aligned plain-text view of the frontal unfolding, blocks separated by `|`.
pub fn matricized_table(p: &Cubic) -> String {
    let n = p.n();
    let unfolding = cubic_core::matricize_frontal(p);
    let cells: Vec<Vec<String>> =
        (0..n).map(|r| unfolding.row(r).iter().map(|&x| format_number(x)).collect()).collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    let mut out = String::new();
    for row in &cells {
        let blocks: Vec<String> = row
            .chunks(n)
            .map(|b| b.iter().map(|c| format!("{c:>width$}")).collect::<Vec<_>>().join(" "))
            .collect();
        out.push_str(&blocks.join(" | "));
        out.push('\n');
    }
    out
}
