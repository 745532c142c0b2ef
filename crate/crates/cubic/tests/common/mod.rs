//! Shared helpers: binary runner, fixture paths and naive summation oracles.
#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use cubic_core::{Cubic, CubicStochastic12, Matrix, StochasticMatrix, Weights};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn fixture(rel: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(rel)
}

pub fn cubic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cubic")).args(args).output().expect("spawn cubic")
}

pub fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

pub fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

/// Every number in a JSON document, in document order.
pub fn numbers(text: &str) -> Vec<f64> {
    fn walk(v: &serde_json::Value, key: &str, out: &mut Vec<f64>) {
        match v {
            serde_json::Value::Array(items) => items.iter().for_each(|i| walk(i, key, out)),
            serde_json::Value::Number(x) if !matches!(key, "n" | "s" | "order" | "steps") => {
                out.push(x.as_f64().unwrap())
            }
            serde_json::Value::Object(map) => map.iter().for_each(|(k, v)| walk(v, k, out)),
            _ => {}
        }
    }
    let mut out = Vec::new();
    walk(&serde_json::from_str(text).expect("json"), "", &mut out);
    out
}

pub fn max_diff(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

pub fn dot(a: &CubicStochastic12, b: &CubicStochastic12) -> Cubic {
    let n = a.n();
    Cubic::from_fn(n, |i, j, s| {
        let mut acc = 0.0;
        for k in 0..n {
            for m in 0..n {
                for r in 0..n {
                    if k == m {
                        acc += a.get(i, j, k) * b.get(m, r, s);
                    }
                }
            }
        }
        acc
    })
}

pub fn weighted(a: &CubicStochastic12, b: &CubicStochastic12, w: Weights) -> Cubic {
    let n = a.n();
    Cubic::from_fn(n, |i, j, k| {
        let mut acc = 0.0;
        for r in 0..n {
            for s in 0..n {
                acc += a.get(i, j, r) * (w.first() * b.get(r, s, k) + w.second() * b.get(s, r, k));
            }
        }
        acc
    })
}

pub fn star(a: &CubicStochastic12, b: &CubicStochastic12) -> Cubic {
    let n = a.n();
    Cubic::from_fn(n, |i, j, k| {
        let mut acc = 0.0;
        for r in 0..n {
            for s in 0..n {
                acc += 0.5 * a.get(i, j, r) * b.get(r, s, k) + 0.5 * a.get(i, j, r) * b.get(s, r, k);
            }
        }
        acc
    })
}

pub fn act_first(a: &StochasticMatrix, p: &CubicStochastic12) -> Cubic {
    let n = p.n();
    Cubic::from_fn(n, |i, s, t| (0..n).map(|r| a.get(i, r) * p.get(r, s, t)).sum())
}

pub fn act_second(a: &StochasticMatrix, p: &CubicStochastic12) -> Cubic {
    let n = p.n();
    Cubic::from_fn(n, |r, i, t| (0..n).map(|s| a.get(i, s) * p.get(r, s, t)).sum())
}

pub fn marginal_first(p: &Cubic) -> Matrix {
    let n = p.n();
    Matrix::from_fn(n, |i, k| (0..n).map(|j| p.get(i, j, k)).sum())
}

pub fn marginal_second(p: &Cubic) -> Matrix {
    let n = p.n();
    Matrix::from_fn(n, |j, k| (0..n).map(|i| p.get(i, j, k)).sum())
}

pub fn matmul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.n();
    Matrix::from_fn(n, |i, j| (0..n).map(|r| a.get(i, r) * b.get(r, j)).sum())
}

pub fn block_diag(blocks: &[&Matrix]) -> Matrix {
    let n = blocks[0].n();
    Matrix::from_fn(n * blocks.len(), |r, c| if r / n == c / n { blocks[r / n].get(r % n, c % n) } else { 0.0 })
}

pub fn transpose12(p: &Cubic) -> Cubic {
    Cubic::from_fn(p.n(), |i, j, k| p.get(j, i, k))
}

/// `diag(λ_jk B_jk)` assembled by hand.
pub fn assemble(blocks: &[&Matrix], lambda: &[f64], s: usize) -> Matrix {
    let n = blocks[0].n();
    Matrix::from_fn(n * s, |r, c| lambda[(r / n) * s + c / n] * blocks[(r / n) * s + c / n].get(r % n, c % n))
}

pub fn worked_p() -> CubicStochastic12 {
    CubicStochastic12::from_frontal_slices(
        &[[[0.5, 0.1], [0.2, 0.2]], [[0.25, 0.25], [0.25, 0.25]]],
        cubic_core::Tolerance::default(),
    )
    .unwrap()
}

pub fn worked_a() -> StochasticMatrix {
    StochasticMatrix::from_rows(&[[0.9, 0.3], [0.1, 0.7]], cubic_core::Tolerance::default()).unwrap()
}

pub fn worked_b() -> StochasticMatrix {
    StochasticMatrix::from_rows(&[[0.2, 0.6], [0.8, 0.4]], cubic_core::Tolerance::default()).unwrap()
}

pub const WORKED_LAMBDA: [f64; 4] = [0.6, 0.4, 0.3, 0.7];

/// Golden files for the worked instance and the command line that
/// regenerates each, relative to `fixtures/worked`.
pub const GOLDEN: &[(&str, &[&str])] = &[
    ("golden/act-side1.json", &["act", "a.json", "p.json", "--side", "1"]),
    ("golden/act-side2.json", &["act", "a.json", "p.json", "--side", "2"]),
    ("golden/marginals.json", &["marginals", "p.json"]),
    ("golden/bmc.json", &["bmc", "p.json", "--lambda", "0.6", "0.4", "0.3", "0.7"]),
    ("golden/bmc-q1.json", &["bmc", "p.json", "--lambda", "0.6", "0.4", "0.3", "0.7", "--mutate", "a.json", "--which", "q1"]),
    ("golden/bmc-q2.json", &["bmc", "p.json", "--lambda", "0.6", "0.4", "0.3", "0.7", "--mutate", "a.json", "--which", "q2"]),
    ("golden/bmc-q3.json", &["bmc", "p.json", "--lambda", "0.6", "0.4", "0.3", "0.7", "--mutate", "a.json", "--which", "q3"]),
    ("golden/iterate.json", &["iterate", "golden/bmc.json", "--x0", "state.json"]),
];

/// Runs `args` inside `fixtures/worked` and returns stdout.
pub fn run_worked(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cubic"))
        .args(args)
        .current_dir(fixture("worked"))
        .output()
        .expect("spawn cubic")
}

/// Numbers under one top-level key, flattened.
pub fn field(text: &str, key: &str) -> Vec<f64> {
    let doc: serde_json::Value = serde_json::from_str(text).expect("json");
    let mut out = Vec::new();
    fn flat(v: &serde_json::Value, out: &mut Vec<f64>) {
        match v {
            serde_json::Value::Array(items) => items.iter().for_each(|i| flat(i, out)),
            serde_json::Value::Number(x) => out.push(x.as_f64().unwrap()),
            _ => {}
        }
    }
    flat(&doc[key], &mut out);
    out
}
