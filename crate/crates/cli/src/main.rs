//! Command-line front end: single-knot and batch computation, fixture
//! verification and axiom fuzzing.
//!
//! Exit codes: 0 success, 1 violation or counterexample, 2 input error.

use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use flatknot::diagram::{knot_invariant_bundle, parse_gauss_code};
use flatknot::io::{matrix_from_json, matrix_to_json};
use flatknot::parity::{verify_parity_axioms, ParityKind};
use flatknot::pipeline::{batch_map, fuzz, summarize_matrix, FuzzParams};
use flatknot::{BasedMatrix, Ring};

#[derive(Parser)]
#[command(name = "flatknot", version, about = "Based matrices and parities of virtual and flat knots")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RingArg {
    Z,
    Z2,
}

impl From<RingArg> for Ring {
    fn from(r: RingArg) -> Ring {
        match r {
            RingArg::Z => Ring::Z,
            RingArg::Z2 => Ring::Z2,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Human-readable parity matrix in the appendix layout.
    Report,
    /// One JSON document per record.
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the invariant bundle of one code, one matrix file, or a table.
    Compute {
        /// Gauss code, e.g. O1+O2+U1+U2+ (virtual) or 1+2+1+2+ (flat).
        #[arg(long, conflicts_with_all = ["matrix", "table"])]
        code: Option<String>,
        /// Path to a based-matrix JSON document.
        #[arg(long, conflicts_with = "table")]
        matrix: Option<String>,
        /// Path to a tab-separated table of `name<TAB>code` rows.
        #[arg(long)]
        table: Option<String>,
        #[arg(long, value_enum, default_value = "z")]
        ring: RingArg,
        #[arg(long, value_enum, default_value = "report")]
        format: Format,
    },
    /// Check the parity axioms (P0)-(P3) on a matrix file.
    Verify {
        /// Path to a based-matrix JSON document.
        #[arg(long)]
        matrix: String,
        /// Random forward moves used to sample axiom (P0).
        #[arg(long, default_value_t = 8)]
        moves: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Fuzz the homology invariants on random matrices and move walks.
    Fuzz {
        #[arg(long, value_enum, default_value = "z2")]
        ring: RingArg,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        moves: usize,
        #[arg(long, default_value_t = 200)]
        count: usize,
        #[arg(long, default_value_t = 6)]
        max_size: usize,
    },
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Compute {
            code,
            matrix,
            table,
            ring,
            format,
        } => cmd_compute(code, matrix, table, ring.into(), format),
        Command::Verify {
            matrix,
            moves,
            seed,
        } => cmd_verify(&matrix, moves, seed),
        Command::Fuzz {
            ring,
            seed,
            moves,
            count,
            max_size,
        } => cmd_fuzz(FuzzParams {
            ring: ring.into(),
            count,
            max_size,
            moves,
            seed,
        }),
    }
}

struct Record {
    name: String,
    input: String,
    body: Result<Value, String>,
    report: String,
}

fn cmd_compute(
    code: Option<String>,
    matrix: Option<String>,
    table: Option<String>,
    ring: Ring,
    format: Format,
) -> ExitCode {
    let records: Vec<Record> = if let Some(text) = code {
        vec![code_record("code".into(), &text, ring)]
    } else if let Some(path) = matrix {
        vec![matrix_record(&path, ring)]
    } else if let Some(path) = table {
        match std::fs::read_to_string(&path) {
            Ok(content) => {
                let rows: Vec<(usize, String)> = content
                    .lines()
                    .enumerate()
                    .filter(|(_, l)| !l.trim().is_empty())
                    .map(|(i, l)| (i + 1, l.to_string()))
                    .collect();
                batch_map(rows, |(line, row)| match row.split_once('\t') {
                    Some((name, code)) => code_record(name.trim().into(), code.trim(), ring),
                    None => Record {
                        name: format!("line {line}"),
                        input: row.clone(),
                        body: Err("expected `name<TAB>code`".into()),
                        report: String::new(),
                    },
                })
            }
            Err(e) => return input_error(&format!("table {path}: {e}")),
        }
    } else {
        return input_error("one of --code, --matrix or --table is required");
    };

    let mut failed = false;
    for r in &records {
        match (&r.body, format) {
            (Ok(body), Format::Structured) => println!("{body}"),
            (Ok(_), Format::Report) => {
                println!("== {} ({})", r.name, r.input);
                println!("{}", r.report);
            }
            (Err(e), Format::Structured) => {
                failed = true;
                println!(
                    "{}",
                    json!({ "name": r.name, "input": r.input, "error": e })
                );
            }
            (Err(e), Format::Report) => {
                failed = true;
                println!("== {} ({})", r.name, r.input);
                println!("error: {e}");
            }
        }
    }
    if failed {
        ExitCode::from(2)
    } else {
        ExitCode::SUCCESS
    }
}

fn code_record(name: String, text: &str, ring: Ring) -> Record {
    let build = || -> flatknot::Result<(Value, String)> {
        let code = parse_gauss_code(text)?;
        let bundle = knot_invariant_bundle(&code, ring)?;
        let body = record_body(
            &name,
            text,
            &bundle.based_matrix,
            bundle.primitive.size(),
            &bundle.stable_partition,
            &bundle.tribes,
            bundle.automorphism_count,
            &bundle.parity,
            Some(bundle.genus),
        );
        let mut report = format!("genus: {}\n", bundle.genus);
        report.push_str(&bundle.report);
        Ok((body, report))
    };
    match build() {
        Ok((body, report)) => Record {
            name,
            input: text.into(),
            body: Ok(body),
            report,
        },
        Err(e) => Record {
            name,
            input: text.into(),
            body: Err(e.to_string()),
            report: String::new(),
        },
    }
}

fn matrix_record(path: &str, ring: Ring) -> Record {
    let build = || -> Result<(Value, String), String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
        let t = matrix_from_json(&text).map_err(|e| e.to_string())?;
        if t.ring() != ring {
            return Err(format!(
                "matrix document is over {}, but --ring requested {}",
                t.ring(),
                ring
            ));
        }
        let s = summarize_matrix(&t);
        let body = record_body(
            path,
            path,
            &s.matrix,
            s.primitive.size(),
            &s.stable_partition,
            &s.tribes,
            s.automorphism_count,
            &s.parity,
            None,
        );
        Ok((body, s.report))
    };
    match build() {
        Ok((body, report)) => Record {
            name: path.into(),
            input: path.into(),
            body: Ok(body),
            report,
        },
        Err(e) => Record {
            name: path.into(),
            input: path.into(),
            body: Err(e),
            report: String::new(),
        },
    }
}

#[allow(clippy::too_many_arguments)]
fn record_body(
    name: &str,
    input: &str,
    matrix: &BasedMatrix,
    primitive_size: usize,
    partition: &flatknot::partition::Partition,
    tribes: &flatknot::tribes::TribeTags,
    automorphism_count: usize,
    parity: &flatknot::parity::ParityAssignment,
    genus: Option<usize>,
) -> Value {
    let parities: BTreeMap<String, &[i64]> = matrix
        .interior()
        .iter()
        .map(|g| (g.to_string(), parity.value_of(g).unwrap()))
        .collect();
    let mut body = json!({
        "name": name,
        "input": input,
        "ring": matrix.ring(),
        "matrix": serde_json::from_str::<Value>(&matrix_to_json(matrix)).unwrap(),
        "primitive_size": primitive_size,
        "stable_partition": partition,
        "tribes": tribes,
        "automorphism_count": automorphism_count,
        "group": parity.group.to_string(),
        "columns": parity.column_legend(),
        "parities": parities,
    });
    if let Some(g) = genus {
        body["genus"] = json!(g);
    }
    body
}

fn cmd_verify(path: &str, moves: usize, seed: u64) -> ExitCode {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return input_error(&format!("{path}: {e}")),
    };
    let t = match matrix_from_json(&text) {
        Ok(t) => t,
        Err(e) => return input_error(&e.to_string()),
    };
    let mut clean = true;
    for kind in [ParityKind::Gaussian, ParityKind::Reduced] {
        let report = verify_parity_axioms(&t, kind, moves, seed);
        if report.is_empty() {
            println!("{kind:?}: ok");
        } else {
            clean = false;
            println!("{kind:?}: {report}");
        }
    }
    if clean {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn cmd_fuzz(params: FuzzParams) -> ExitCode {
    let report = fuzz(params);
    println!(
        "checked {} matrices over {} (max size {}, {} moves, seed {})",
        report.checked, params.ring, params.max_size, params.moves, params.seed
    );
    if report.is_clean() {
        println!("all assertions hold");
        ExitCode::SUCCESS
    } else {
        for f in &report.failures {
            println!(
                "counterexample at index {} (reproduce with seed {}): {}",
                f.index, f.seed, f.message
            );
        }
        ExitCode::from(1)
    }
}

fn input_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}
