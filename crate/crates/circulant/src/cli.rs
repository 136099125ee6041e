//! Command execution behind the `circulant` binary.
//!
//! Each command produces one report on stdout, as a single JSON document
//! (`--format json`, the default) or as plain text (`--format table`).
//! Exit status: 0 on success, 1 when a verification disagreed, 2 on usage
//! errors. JSON output is deterministic for identical inputs and seeds,
//! except for the wall-clock fields of `bench`.

use std::fmt::Write as _;
use std::time::Instant;

use num_traits::Zero;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::families::{FamilyKind, GraphFamily};
use crate::matrix::{parse_row, Circulant};
use crate::oracle::{bareiss_det, sweep_family, sweep_random_rows};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Circulant(#[from] crate::matrix::CirculantError),
    #[error(transparent)]
    Family(#[from] crate::families::FamilyError),
    #[error("invalid row: {0}")]
    Row(String),
    #[error("row length {len} does not match --n {n}")]
    RowLength { len: usize, n: usize },
    #[error("unknown verify target {0:?}; expected `all`, a family kind, or `random`")]
    VerifyTarget(String),
    #[error("{0}")]
    Usage(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Json,
    Table,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerifyTarget {
    AllFamilies,
    Family(FamilyKind),
    Random,
}

#[derive(Debug, Clone)]
pub enum Command {
    Classify {
        spec: Circulant,
    },
    Det {
        spec: Circulant,
        check: bool,
    },
    Spectrum {
        spec: Circulant,
        tolerance: f64,
    },
    Predict {
        family: GraphFamily,
    },
    Verify {
        target: VerifyTarget,
        n_max: usize,
        samples: usize,
        seed: u64,
    },
    Bench {
        n_max: usize,
        samples: usize,
        seed: u64,
    },
}

/// One fully validated invocation.
#[derive(Debug, Clone)]
pub struct CommandRequest {
    pub command: Command,
    pub format: OutputFormat,
}

/// Exit status plus the rendered report.
#[derive(Debug, Clone)]
pub struct RunOutput {
    pub status: i32,
    pub body: String,
}

/// Parse a `--row`/`--n` pair into a circulant, enforcing the declared
/// order when given.
pub fn spec_from_flags(row_text: &str, n: Option<usize>) -> Result<Circulant, CliError> {
    let row = parse_row(row_text).map_err(CliError::Row)?;
    if let Some(n) = n {
        if row.len() != n {
            return Err(CliError::RowLength { len: row.len(), n });
        }
    }
    Ok(Circulant::from_row(row)?)
}

pub fn parse_verify_target(text: &str) -> Result<VerifyTarget, CliError> {
    match text {
        "all" => Ok(VerifyTarget::AllFamilies),
        "random" => Ok(VerifyTarget::Random),
        other => other
            .parse::<FamilyKind>()
            .map(VerifyTarget::Family)
            .map_err(|_| CliError::VerifyTarget(other.to_string())),
    }
}

/// Execute one request and render its report.
pub fn run(request: &CommandRequest) -> Result<RunOutput, CliError> {
    match &request.command {
        Command::Classify { spec } => {
            let report = spec.singularity();
            let body = render(
                request.format,
                "classify",
                &spec.to_string(),
                json!(report),
                None,
                |out| {
                    writeln!(out, "singular: {}", report.singular).unwrap();
                    writeln!(out, "witness_divisors: {}", join(&report.witness_divisors)).unwrap();
                    writeln!(out, "zero_exponents: {}", join(&report.zero_exponents)).unwrap();
                },
            );
            Ok(RunOutput { status: 0, body })
        }
        Command::Det { spec, check } => {
            let report = spec.exact_determinant();
            let mut result = serde_json::to_value(&report).expect("report serializes");
            let mut status = 0;
            let mut oracle_line = String::new();
            if *check {
                let oracle = bareiss_det(spec);
                let agree = oracle == report.determinant;
                result["oracle"] = json!(oracle.to_string());
                result["agree"] = json!(agree);
                if !agree {
                    status = 1;
                }
                oracle_line = format!("oracle: {oracle}\nagree: {agree}\n");
            }
            let body = render(
                request.format,
                "det",
                &spec.to_string(),
                result,
                None,
                |out| {
                    writeln!(out, "determinant: {}", report.determinant).unwrap();
                    for (d, v) in &report.factors {
                        writeln!(out, "factor d={d}: {v}").unwrap();
                    }
                    out.push_str(&oracle_line);
                },
            );
            Ok(RunOutput { status, body })
        }
        Command::Spectrum { spec, tolerance } => {
            let eigenvalues = spec.spectrum_numeric();
            let zero_indices: Vec<usize> = eigenvalues
                .iter()
                .enumerate()
                .filter(|(_, v)| v.norm() < *tolerance)
                .map(|(k, _)| k)
                .collect();
            let result = json!({
                "eigenvalues": eigenvalues
                    .iter()
                    .map(|v| json!({"re": v.re, "im": v.im}))
                    .collect::<Vec<_>>(),
                "zero_indices": zero_indices,
                "tolerance": tolerance,
            });
            let body = render(
                request.format,
                "spectrum",
                &spec.to_string(),
                result,
                None,
                |out| {
                    for (k, v) in eigenvalues.iter().enumerate() {
                        writeln!(out, "k={k}: {:+.12e} {:+.12e}i", v.re, v.im).unwrap();
                    }
                    writeln!(out, "zero_indices: {}", join(&zero_indices)).unwrap();
                },
            );
            Ok(RunOutput { status: 0, body })
        }
        Command::Predict { family } => {
            let prediction = family.predict()?;
            let body = render(
                request.format,
                "predict",
                &family.to_string(),
                json!(prediction),
                None,
                |out| {
                    let kind = match prediction.kind {
                        crate::families::PredictionKind::Exact => "exact",
                        crate::families::PredictionKind::SufficientOnly => "sufficient-only",
                    };
                    writeln!(out, "kind: {kind}").unwrap();
                    writeln!(out, "singular: {}", prediction.singular).unwrap();
                    writeln!(out, "rule: {}", prediction.rule).unwrap();
                },
            );
            Ok(RunOutput { status: 0, body })
        }
        Command::Verify {
            target,
            n_max,
            samples,
            seed,
        } => run_verify(request, target, *n_max, *samples, *seed),
        Command::Bench {
            n_max,
            samples,
            seed,
        } => run_bench(request, *n_max, *samples, *seed),
    }
}

fn run_verify(
    request: &CommandRequest,
    target: &VerifyTarget,
    n_max: usize,
    samples: usize,
    seed: u64,
) -> Result<RunOutput, CliError> {
    match target {
        VerifyTarget::Random => {
            let sweep = sweep_random_rows(n_max, samples, seed);
            let failures = sweep.failures.len();
            let body = render(
                request.format,
                "verify",
                "random",
                serde_json::to_value(&sweep).expect("sweep serializes"),
                Some(seed),
                |out| {
                    writeln!(
                        out,
                        "random rows: n_max={} samples={} seed={} passes={} failures={}",
                        sweep.n_max, sweep.samples, sweep.seed, sweep.passes, failures
                    )
                    .unwrap();
                },
            );
            Ok(RunOutput {
                status: i32::from(failures > 0),
                body,
            })
        }
        _ => {
            let kinds: Vec<FamilyKind> = match target {
                VerifyTarget::AllFamilies => FamilyKind::ALL.to_vec(),
                VerifyTarget::Family(kind) => vec![*kind],
                VerifyTarget::Random => unreachable!(),
            };
            let summaries: Vec<_> = kinds
                .iter()
                .map(|&kind| sweep_family(kind, n_max).summary())
                .collect();
            let total: usize = summaries.iter().map(|s| s.total).sum();
            let disagreements: usize = summaries.iter().map(|s| s.disagreements.len()).sum();
            let input = match target {
                VerifyTarget::AllFamilies => "all".to_string(),
                VerifyTarget::Family(kind) => kind.to_string(),
                VerifyTarget::Random => unreachable!(),
            };
            let result = json!({
                "sweeps": summaries,
                "total": total,
                "disagreements": disagreements,
            });
            let body = render(request.format, "verify", &input, result, None, |out| {
                for s in &summaries {
                    writeln!(
                        out,
                        "{}: n_max={} total={} disagreements={}",
                        s.kind.name(),
                        s.n_max,
                        s.total,
                        s.disagreements.len()
                    )
                    .unwrap();
                    for o in &s.disagreements {
                        writeln!(
                            out,
                            "  DISAGREE {} predicted={} oracle_det={}",
                            o.family, o.prediction.singular, o.oracle_det
                        )
                        .unwrap();
                    }
                }
                writeln!(out, "total: {total}").unwrap();
                writeln!(out, "disagreements: {disagreements}").unwrap();
            });
            Ok(RunOutput {
                status: i32::from(disagreements > 0),
                body,
            })
        }
    }
}

/// Sizes of the determinant ladder; trimmed by `--n-max`.
const BENCH_LADDER: [usize; 4] = [64, 128, 256, 512];
/// Order used for the singularity-classification timing row.
const BENCH_CLASSIFY_N: usize = 4096;

#[derive(Debug, Serialize)]
pub struct BenchSizeReport {
    pub n: usize,
    pub exact_ms: f64,
    pub bareiss_ms: f64,
    pub speedup: f64,
}

#[derive(Debug, Serialize)]
pub struct BenchReport {
    pub sizes: Vec<BenchSizeReport>,
    pub classify_n: usize,
    pub classify_ms: f64,
}

/// Median wall time of `runs` executions, in milliseconds.
fn median_ms<T>(runs: usize, mut f: impl FnMut() -> T) -> f64 {
    let mut times: Vec<f64> = (0..runs)
        .map(|_| {
            let start = Instant::now();
            std::hint::black_box(f());
            start.elapsed().as_secs_f64() * 1e3
        })
        .collect();
    times.sort_by(f64::total_cmp);
    times[times.len() / 2]
}

/// Seeded 0/1 row of exact order `n` with `a_0 = 0`.
pub fn bench_spec(n: usize, seed: u64) -> Circulant {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed ^ n as u64);
    let mut row = vec![0i64; n];
    for e in row.iter_mut().skip(1) {
        *e = rng.gen_range(0..=1);
    }
    Circulant::from_row(row).expect("n >= 1")
}

/// Time the resultant-path determinant against the Bareiss oracle on one
/// seeded random 0/1 row per ladder size, and the exact singularity
/// classification at order 4096.
pub fn bench_report(n_max: usize, samples: usize, seed: u64) -> BenchReport {
    let samples = samples.max(1);
    let mut sizes = Vec::new();
    let ladder: Vec<usize> = BENCH_LADDER
        .iter()
        .copied()
        .filter(|&n| n <= n_max)
        .collect();
    for n in if ladder.is_empty() {
        vec![n_max]
    } else {
        ladder
    } {
        let spec = bench_spec(n, seed);
        let exact_ms = median_ms(samples, || spec.exact_determinant());
        let bareiss_ms = median_ms(samples, || bareiss_det(&spec));
        sizes.push(BenchSizeReport {
            n,
            exact_ms,
            bareiss_ms,
            speedup: bareiss_ms / exact_ms,
        });
    }
    let spec = bench_spec(BENCH_CLASSIFY_N, seed);
    let classify_ms = median_ms(samples, || spec.singularity());
    BenchReport {
        sizes,
        classify_n: BENCH_CLASSIFY_N,
        classify_ms,
    }
}

fn run_bench(
    request: &CommandRequest,
    n_max: usize,
    samples: usize,
    seed: u64,
) -> Result<RunOutput, CliError> {
    if n_max < 2 {
        return Err(CliError::Usage("bench needs --n-max >= 2".to_string()));
    }
    let report = bench_report(n_max, samples, seed);
    let body = render(
        request.format,
        "bench",
        "ladder",
        serde_json::to_value(&report).expect("report serializes"),
        Some(seed),
        |out| {
            for s in &report.sizes {
                writeln!(
                    out,
                    "n={}: exact={:.3}ms bareiss={:.3}ms speedup={:.1}x",
                    s.n, s.exact_ms, s.bareiss_ms, s.speedup
                )
                .unwrap();
            }
            writeln!(
                out,
                "classify n={}: {:.3}ms",
                report.classify_n, report.classify_ms
            )
            .unwrap();
        },
    );
    Ok(RunOutput { status: 0, body })
}

fn join(values: &[usize]) -> String {
    if values.is_empty() {
        return "-".to_string();
    }
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn render(
    format: OutputFormat,
    command: &str,
    input: &str,
    result: Value,
    seed: Option<u64>,
    table: impl FnOnce(&mut String),
) -> String {
    match format {
        OutputFormat::Json => {
            let mut meta = json!({"version": env!("CARGO_PKG_VERSION")});
            if let Some(seed) = seed {
                meta["seed"] = json!(seed);
            }
            let doc = json!({
                "command": command,
                "input": input,
                "result": result,
                "meta": meta,
            });
            let mut text = serde_json::to_string_pretty(&doc).expect("valid JSON");
            text.push('\n');
            text
        }
        OutputFormat::Table => {
            let mut out = String::new();
            table(&mut out);
            out
        }
    }
}

/// True iff the determinant report and singularity verdict agree; exposed
/// for the CLI consistency tests.
pub fn classify_det_consistent(spec: &Circulant) -> bool {
    spec.singularity().singular == spec.exact_determinant().determinant.is_zero()
}
