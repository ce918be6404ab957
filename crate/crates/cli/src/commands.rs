use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use harmonic_core::enumeration::{classify_all, for_each_harmonic, EnumerationOptions};
use harmonic_core::generators::{alpha_pi6, beta_pi};
use harmonic_core::harmonic::{
    build_by_powers, build_fundamental_closed, classify_family, gaussian_check, is_harmonic,
    standardize, symmetry_profile, transitions, Axis, SymmetryProfile,
};
use harmonic_core::isomorphism::{are_isomorphic, canonical_form};
use harmonic_core::reduction::{nesting_chain, reduce_mu};
use harmonic_core::sudoku::build_sudoku;
use harmonic_core::{Error, Family, GridDocument, HarmonicMatrix, Permutation, SquareGrid};
use serde_json::json;

use crate::{AxisArg, Command, Format};

pub struct Outcome {
    pub stdout: String,
    pub code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { stdout, code: 0 }
    }
}

pub struct CliError {
    pub message: String,
    pub code: u8,
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        let code = match err {
            Error::Parse { .. } | Error::Domain(_) | Error::InvalidOrder(_) | Error::Refused(_) => {
                2
            }
            _ => 1,
        };
        Self {
            message: err.to_string(),
            code,
        }
    }
}

type CliResult<T> = Result<T, CliError>;

fn read_grid(path: &Path) -> CliResult<SquareGrid> {
    let text = fs::read_to_string(path).map_err(|e| CliError {
        message: format!("cannot read {}: {e}", path.display()),
        code: 2,
    })?;
    SquareGrid::parse(&text).map_err(|e| CliError {
        message: format!("{}: {e}", path.display()),
        code: 2,
    })
}

fn read_harmonic(path: &Path) -> CliResult<HarmonicMatrix> {
    let grid = read_grid(path)?;
    HarmonicMatrix::new(grid).map_err(|e| CliError {
        message: format!("{}: {e}", path.display()),
        code: 1,
    })
}

fn emit_grid(grid: &SquareGrid, family: Option<Family>, format: Format) -> String {
    match format {
        Format::Text => grid.to_text(),
        Format::Json => {
            let doc = GridDocument {
                grid: grid.clone(),
                family,
            };
            format!("{}\n", doc.to_json())
        }
    }
}

fn symmetry_text(p: &SymmetryProfile) -> String {
    format!(
        "symmetry: transpose={} anti-transpose={} horizontal={} vertical={}\n",
        p.transpose_sym, p.anti_transpose_sym, p.horizontal_sym, p.vertical_sym
    )
}

pub fn run(command: &Command) -> CliResult<Outcome> {
    match command {
        Command::Generate { n, powers, format } => {
            let m = if *powers {
                let grid = standardize(&build_by_powers(&beta_pi(*n)?))?;
                HarmonicMatrix::classified(grid)?
            } else {
                build_fundamental_closed(*n)?
            };
            Ok(Outcome::ok(emit_grid(m.grid(), Some(m.family()), *format)))
        }
        Command::Verify { file, format } => verify(&read_grid(file)?, *format),
        Command::Transitions { file, axis, format } => {
            let grid = read_grid(file)?;
            let axis = match axis {
                AxisArg::Rows => Axis::Rows,
                AxisArg::Columns => Axis::Columns,
            };
            let ts = transitions(&grid, axis);
            let stdout = match format {
                Format::Text => {
                    let mut out = String::new();
                    for ((a, b), count) in ts.pairs() {
                        let _ = writeln!(out, "{a} {b} {count}");
                    }
                    let _ = writeln!(
                        out,
                        "distinct: {} total: {} complete-once: {}",
                        ts.distinct(),
                        ts.total(),
                        ts.is_complete_once()
                    );
                    out
                }
                Format::Json => {
                    let pairs: Vec<_> = ts
                        .pairs()
                        .map(|((a, b), count)| json!({"a": a, "b": b, "count": count}))
                        .collect();
                    format!(
                        "{}\n",
                        json!({
                            "n": ts.n(),
                            "pairs": pairs,
                            "distinct": ts.distinct(),
                            "complete_once": ts.is_complete_once(),
                        })
                    )
                }
            };
            Ok(Outcome::ok(stdout))
        }
        Command::Symmetry { file, format } => {
            let profile = symmetry_profile(&read_grid(file)?);
            Ok(Outcome::ok(match format {
                Format::Text => symmetry_text(&profile),
                Format::Json => format!("{}\n", json!(profile)),
            }))
        }
        Command::Canon { file, format } => {
            let m = read_harmonic(file)?;
            let canonical = canonical_form(&m);
            Ok(Outcome::ok(emit_grid(canonical.grid(), None, *format)))
        }
        Command::Iso {
            first,
            second,
            format,
        } => {
            let a = read_harmonic(first)?;
            let b = read_harmonic(second)?;
            let result = are_isomorphic(&a, &b);
            let stdout = match format {
                Format::Text => match &result.witness {
                    Some(w) => format!("isomorphic\nsigma: {}\ntau: {}\n", w.sigma, w.tau),
                    None => "not-isomorphic\n".to_string(),
                },
                Format::Json => format!(
                    "{}\n",
                    json!({
                        "isomorphic": result.equal,
                        "sigma": result.witness.as_ref().map(|w| w.sigma.to_one_based()),
                        "tau": result.witness.as_ref().map(|w| w.tau.to_one_based()),
                    })
                ),
            };
            Ok(Outcome::ok(stdout))
        }
        Command::Enumerate {
            n,
            classes,
            count,
            raw,
            allow_large,
            sequential,
        } => {
            let options = EnumerationOptions {
                normalize_first_row: !raw,
                allow_large: *allow_large,
                parallel: !sequential,
            };
            if *classes {
                let catalog = classify_all(*n, options)?;
                if let Some((claimed, found)) = catalog.discrepancy() {
                    eprintln!(
                        "warning: found {found} isomorphism classes at order {n}, expected {claimed}"
                    );
                }
                return Ok(Outcome::ok(format!("{}\n", catalog.to_json_value())));
            }
            let mut out = String::new();
            let mut total = 0u64;
            for_each_harmonic(*n, options, |g| {
                total += 1;
                if !count {
                    if total > 1 {
                        out.push('\n');
                    }
                    out.push_str(&g.to_text());
                }
            })?;
            if *count {
                let _ = writeln!(out, "{total}");
            }
            Ok(Outcome::ok(out))
        }
        Command::Reduce {
            file,
            n,
            chain,
            format,
        } => {
            let m = match (file, n) {
                (Some(path), _) => read_harmonic(path)?,
                (None, Some(n)) => build_fundamental_closed(*n)?,
                (None, None) => unreachable!("clap requires one of file or --n"),
            };
            let steps = if *chain {
                nesting_chain(&m)?
            } else {
                vec![reduce_mu(&m)?]
            };
            let stdout = match format {
                Format::Text => steps
                    .iter()
                    .map(|s| s.grid().to_text())
                    .collect::<Vec<_>>()
                    .join("\n"),
                Format::Json => {
                    let docs: Vec<_> = steps
                        .iter()
                        .map(|s| {
                            GridDocument {
                                grid: s.grid().clone(),
                                family: None,
                            }
                            .to_json_value()
                        })
                        .collect();
                    format!("{}\n", serde_json::Value::Array(docs))
                }
            };
            Ok(Outcome::ok(stdout))
        }
        Command::Sudoku { k, format, relabel } => {
            let mut board = build_sudoku(*k)?;
            if let Some(path) = relabel {
                let text = fs::read_to_string(path).map_err(|e| CliError {
                    message: format!("cannot read {}: {e}", path.display()),
                    code: 2,
                })?;
                let sigma: Permutation = text.trim().parse().map_err(|e: Error| CliError {
                    message: format!("{}: {e}", path.display()),
                    code: 2,
                })?;
                board = board.relabel(&sigma)?;
            }
            Ok(Outcome::ok(match format {
                Format::Text => board.grid().to_string(),
                Format::Json => format!("{}\n", board.to_json_value()),
            }))
        }
        Command::Degenerate { format } => {
            let grid = standardize(&build_by_powers(&alpha_pi6()))?;
            let family = classify_family(&grid)?;
            Ok(Outcome::ok(emit_grid(&grid, Some(family), *format)))
        }
    }
}

fn verify(grid: &SquareGrid, format: Format) -> CliResult<Outcome> {
    let report = is_harmonic(grid);
    let profile = symmetry_profile(grid);
    let gaussian = gaussian_check(grid);
    let family = if report.ok {
        Some(classify_family(grid)?)
    } else {
        None
    };
    let stdout = match format {
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "harmonic: {}", if report.ok { "yes" } else { "no" });
            for v in &report.row_violations {
                let _ = writeln!(
                    out,
                    "  row {}: repeated {:?}, missing {:?}",
                    v.row, v.repeated, v.missing
                );
            }
            for v in &report.pair_multiplicity_violations {
                let _ = writeln!(out, "  pair ({}, {}) occurs {} times", v.a, v.b, v.count);
            }
            out.push_str(&symmetry_text(&profile));
            let _ = writeln!(out, "gaussian: {gaussian}");
            if let Some(f) = family {
                let _ = writeln!(out, "family: {}", f.as_str());
            }
            out
        }
        Format::Json => format!(
            "{}\n",
            json!({
                "ok": report.ok,
                "report": report,
                "symmetry": profile,
                "gaussian": gaussian,
                "family": family,
            })
        ),
    };
    Ok(Outcome {
        stdout,
        code: if report.ok { 0 } else { 1 },
    })
}
