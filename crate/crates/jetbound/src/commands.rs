//! Subcommand bodies. Each writes to `out` and returns the process exit code.

use std::io::Write;

use jetbound_core::checks::{self, CheckOutcome};
use jetbound_core::morse;
use jetbound_core::{default_weights, GeometryKind, GeometrySpec, TowerContext, WeightVector};
use rayon::prelude::*;
use serde::Serialize;

use crate::args::{Command, Common, Format, RunArgs, SweepArgs, TableArgs, VerifyArgs};
use crate::cache::Cache;
use crate::engine::{run_checked, Engine};
use crate::error::CliError;
use crate::report::{join, ReportRecord, TimedRecord};
use crate::sweep;

pub fn dispatch(cmd: &Command, out: &mut dyn Write) -> Result<i32, CliError> {
    match cmd {
        Command::Bound(a) => bound(a, out),
        Command::Poly(a) => poly(a, out),
        Command::Table(a) => table(a, out),
        Command::Sweep(a) => sweep_cmd(a, out),
        Command::Verify(a) => verify(a, out),
    }
}

fn with_threads<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t.max(1))
            .build()
            .expect("thread pool")
            .install(f),
        None => f(),
    }
}

fn engine(common: &Common) -> Engine {
    Engine::new((!common.no_cache).then(Cache::from_env))
}

fn weights_for(k: u32, given: &Option<Vec<u64>>) -> Result<WeightVector, CliError> {
    match given {
        None => Ok(default_weights(k as usize)),
        Some(a) if a.len() != k as usize => Err(CliError::Input(format!(
            "--weights has {} entries, --order is {k}",
            a.len()
        ))),
        Some(a) => Ok(WeightVector::new(a.clone())?),
    }
}

fn check_dims(n: u32, k: u32) -> Result<(), CliError> {
    if n < 2 {
        return Err(CliError::Input(format!(
            "--dim must be at least 2, got {n}"
        )));
    }
    TowerContext::new(n, k).map_err(|e| CliError::Input(e.to_string()))?;
    Ok(())
}

const CSV_HEADER: [&str; 8] = [
    "dim",
    "order",
    "geometry",
    "weights",
    "total_dim",
    "leading_coeff",
    "threshold",
    "polynomial",
];

fn csv_row(r: &ReportRecord) -> [String; 8] {
    [
        r.dim.to_string(),
        r.order.to_string(),
        r.geometry.clone(),
        join(&r.weights, ";"),
        r.total_dim.to_string(),
        r.leading_coeff.clone(),
        r.threshold.map_or_else(String::new, |t| t.to_string()),
        r.polynomial.join(";"),
    ]
}

fn write_records(out: &mut dyn Write, rows: &[ReportRecord]) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in rows {
        w.write_record(csv_row(r))?;
    }
    w.flush()?;
    Ok(())
}

fn write_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), CliError> {
    serde_json::to_writer(&mut *out, value).map_err(|e| CliError::Invariant(e.to_string()))?;
    writeln!(out)?;
    Ok(())
}

fn threshold_text(r: &ReportRecord) -> String {
    match r.threshold {
        Some(t) => t.to_string(),
        None => format!("none (leading coefficient {} <= 0)", r.leading_coeff),
    }
}

fn exit_for(r: &ReportRecord) -> i32 {
    if r.threshold.is_some() {
        0
    } else {
        3
    }
}

fn bound(a: &RunArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    check_dims(a.dim, a.order)?;
    let w = weights_for(a.order, &a.weights)?;
    let c = engine(&a.common).compute(a.common.geometry.into(), a.dim, a.order, &w)?;
    let r = &c.record;
    match a.common.format {
        Format::Json => write_json(
            out,
            &TimedRecord {
                record: r.clone(),
                elapsed_ms: c.elapsed.as_millis() as u64,
            },
        )?,
        Format::Csv => write_records(out, std::slice::from_ref(r))?,
        Format::Text => {
            writeln!(out, "geometry   {}", r.geometry)?;
            writeln!(out, "dim        {}", r.dim)?;
            writeln!(out, "order      {}", r.order)?;
            writeln!(out, "weights    {}", join(&r.weights, ","))?;
            writeln!(out, "total_dim  {}", r.total_dim)?;
            writeln!(out, "P(d)       {}", r.polynomial_text())?;
            writeln!(out, "threshold  {}", threshold_text(r))?;
            if r.order == 1 {
                writeln!(
                    out,
                    "note       order 1 is degenerate; threshold shown for completeness"
                )?;
            }
            writeln!(
                out,
                "elapsed    {} ms{}",
                c.elapsed.as_millis(),
                if c.cache_hit { " (cached)" } else { "" }
            )?;
        }
    }
    Ok(exit_for(r))
}

#[derive(Serialize)]
struct PolyOutput {
    #[serde(flatten)]
    timed: TimedRecord,
    integrated_class: String,
}

fn poly(a: &RunArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    check_dims(a.dim, a.order)?;
    let w = weights_for(a.order, &a.weights)?;
    let start = std::time::Instant::now();
    let report = run_checked(a.common.geometry.into(), a.dim, a.order, &w)?;
    let elapsed_ms = start.elapsed().as_millis() as u64;
    let ctx = TowerContext::new(a.dim, a.order).map_err(|e| CliError::Input(e.to_string()))?;
    let record = ReportRecord::from_report(&report)?;
    let class = ctx.render(&report.integrated_class);
    match a.common.format {
        Format::Json => write_json(
            out,
            &PolyOutput {
                timed: TimedRecord { record, elapsed_ms },
                integrated_class: class,
            },
        )?,
        Format::Csv => write_records(out, std::slice::from_ref(&record))?,
        Format::Text => {
            writeln!(out, "class  {class}")?;
            writeln!(out, "P(d)   {}", record.polynomial_text())?;
        }
    }
    Ok(0)
}

fn table(a: &TableArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    if a.max_dim < 2 {
        return Err(CliError::Input(format!(
            "--max-dim must be at least 2, got {}",
            a.max_dim
        )));
    }
    let cells: Vec<(u32, u32)> = (2..=a.max_dim)
        .flat_map(|n| (n..=a.max_order).map(move |k| (n, k)))
        .collect();
    for &(n, k) in &cells {
        check_dims(n, k)?;
    }
    let eng = engine(&a.common);
    let geometry: GeometryKind = a.common.geometry.into();
    let rows: Vec<ReportRecord> = with_threads(a.common.threads, || {
        cells
            .par_iter()
            .map(|&(n, k)| {
                eng.compute(geometry, n, k, &default_weights(k as usize))
                    .map(|c| c.record)
            })
            .collect::<Result<_, _>>()
    })?;
    match a.common.format {
        Format::Json => write_json(out, &rows)?,
        Format::Csv => write_records(out, &rows)?,
        Format::Text => {
            write!(out, "{:>6}", "n\\k")?;
            for k in 2..=a.max_order {
                write!(out, "{k:>8}")?;
            }
            writeln!(out)?;
            for n in 2..=a.max_dim {
                write!(out, "{n:>6}")?;
                for k in 2..=a.max_order {
                    let cell = rows
                        .iter()
                        .find(|r| r.dim == n && r.order == k)
                        .map_or_else(String::new, |r| {
                            r.threshold.map_or_else(|| "-".into(), |t| t.to_string())
                        });
                    write!(out, "{cell:>8}")?;
                }
                writeln!(out)?;
            }
        }
    }
    Ok(0)
}

#[derive(Serialize)]
struct SweepOutput<'a> {
    evaluated: usize,
    best: &'a ReportRecord,
}

fn sweep_cmd(a: &SweepArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    check_dims(a.dim, a.order)?;
    if a.budget == 0 {
        return Err(CliError::Input("--budget must be at least 1".into()));
    }
    let eng = engine(&a.common);
    let geometry: GeometryKind = a.common.geometry.into();
    let cands = sweep::candidates(a.order as usize, a.budget);
    let rows: Vec<ReportRecord> = with_threads(a.common.threads, || {
        cands
            .par_iter()
            .map(|w| eng.compute(geometry, a.dim, a.order, w).map(|c| c.record))
            .collect::<Result<_, _>>()
    })?;
    let best = rows
        .iter()
        .min_by(|x, y| sweep::rank(x, y))
        .expect("budget >= 1");
    match a.common.format {
        Format::Json => write_json(
            out,
            &SweepOutput {
                evaluated: rows.len(),
                best,
            },
        )?,
        Format::Csv => write_records(out, &rows)?,
        Format::Text => {
            writeln!(out, "evaluated  {}", rows.len())?;
            writeln!(out, "best       {}", join(&best.weights, ","))?;
            writeln!(out, "threshold  {}", threshold_text(best))?;
            writeln!(out, "P(d)       {}", best.polynomial_text())?;
        }
    }
    Ok(0)
}

fn verify(a: &VerifyArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let results: Vec<CheckOutcome> = with_threads(a.threads, checks::standard_suite);
    let all = results.iter().all(|c| c.passed);
    match a.format {
        Format::Json => {
            #[derive(Serialize)]
            struct Row<'a> {
                name: &'a str,
                passed: bool,
                detail: &'a str,
            }
            let rows: Vec<Row> = results
                .iter()
                .map(|c| Row {
                    name: &c.name,
                    passed: c.passed,
                    detail: &c.detail,
                })
                .collect();
            write_json(out, &rows)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["name", "passed", "detail"])?;
            for c in &results {
                w.write_record([
                    c.name.as_str(),
                    if c.passed { "true" } else { "false" },
                    c.detail.as_str(),
                ])?;
            }
            w.flush()?;
        }
        Format::Text => {
            for c in &results {
                writeln!(
                    out,
                    "{}  {}  ({})",
                    if c.passed { "PASS" } else { "FAIL" },
                    c.name,
                    c.detail
                )?;
            }
            let failed = results.iter().filter(|c| !c.passed).count();
            writeln!(out, "{} checks, {failed} failed", results.len())?;
        }
    }
    Ok(if all { 0 } else { 4 })
}

/// Morse report for the default weights, bypassing the cache.
pub fn default_report(geometry: GeometryKind, n: u32, k: u32) -> Result<ReportRecord, CliError> {
    let report = morse::run(
        &GeometrySpec::new(geometry, n),
        k,
        &default_weights(k as usize),
    )?;
    ReportRecord::from_report(&report)
}
