//! Cached, invariant-checked pipeline runs.

use std::time::{Duration, Instant};

use jetbound_core::morse::{self, MorseReport};
use jetbound_core::{GeometryKind, GeometrySpec, WeightVector};
use num_bigint::{BigInt, Sign};

use crate::cache::{cache_key, Cache};
use crate::error::CliError;
use crate::report::ReportRecord;

pub struct Engine {
    cache: Option<Cache>,
}

pub struct Computed {
    pub record: ReportRecord,
    pub elapsed: Duration,
    pub cache_hit: bool,
}

impl Engine {
    pub fn new(cache: Option<Cache>) -> Self {
        Engine { cache }
    }

    pub fn uncached() -> Self {
        Engine { cache: None }
    }

    pub fn compute(
        &self,
        geometry: GeometryKind,
        n: u32,
        k: u32,
        weights: &WeightVector,
    ) -> Result<Computed, CliError> {
        let start = Instant::now();
        let key = match &self.cache {
            Some(_) => Some(cache_key(n, k, geometry, weights)?),
            None => None,
        };
        if let (Some(cache), Some(key)) = (&self.cache, &key) {
            if let Some(record) = cache.load(key) {
                return Ok(Computed {
                    record,
                    elapsed: start.elapsed(),
                    cache_hit: true,
                });
            }
        }
        let report = run_checked(geometry, n, k, weights)?;
        let record = ReportRecord::from_report(&report)?;
        if let (Some(cache), Some(key)) = (&self.cache, &key) {
            cache.store(key, &record)?;
        }
        Ok(Computed {
            record,
            elapsed: start.elapsed(),
            cache_hit: false,
        })
    }
}

/// Pipeline run plus the report invariants: threshold present iff the leading
/// coefficient is positive, `P(δ) > 0`, and `P(δ - 1) <= 0` unless `δ = 1`.
pub fn run_checked(
    geometry: GeometryKind,
    n: u32,
    k: u32,
    weights: &WeightVector,
) -> Result<MorseReport, CliError> {
    let spec = GeometrySpec::new(geometry, n);
    let report = morse::run(&spec, k, weights)?;
    let p = &report.morse_poly;
    let positive = report.leading_coeff.sign() == Sign::Plus;
    match &report.threshold {
        None if positive => {
            return Err(CliError::Invariant(
                "positive leading coefficient without threshold".into(),
            ))
        }
        Some(_) if !positive => {
            return Err(CliError::Invariant(
                "threshold without positive leading coefficient".into(),
            ))
        }
        Some(t) => {
            let one = BigInt::from(1);
            if !p.is_positive_at(t) || (*t > one && p.is_positive_at(&(t - &one))) {
                return Err(CliError::Invariant(format!("threshold {t} is not tight")));
            }
        }
        None => {}
    }
    Ok(report)
}
