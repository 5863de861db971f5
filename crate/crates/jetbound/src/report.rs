//! Serialized form of a pipeline run.

use jetbound_core::MorseReport;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// Deterministic part of a report. Integers that may exceed 64 bits are
/// decimal strings; `polynomial` is ascending in `d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub dim: u32,
    pub order: u32,
    pub geometry: String,
    pub weights: Vec<u64>,
    pub total_dim: u32,
    pub polynomial: Vec<String>,
    pub leading_coeff: String,
    pub threshold: Option<u64>,
}

/// A record as emitted, with wall time attached.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TimedRecord {
    #[serde(flatten)]
    pub record: ReportRecord,
    pub elapsed_ms: u64,
}

impl ReportRecord {
    pub fn from_report(r: &MorseReport) -> Result<Self, CliError> {
        let threshold = match &r.threshold {
            None => None,
            Some(t) => Some(
                u64::try_from(t)
                    .map_err(|_| CliError::Invariant(format!("threshold {t} exceeds 64 bits")))?,
            ),
        };
        Ok(ReportRecord {
            dim: r.n,
            order: r.k,
            geometry: r.geometry.as_str().to_owned(),
            weights: r.weights.as_slice().to_vec(),
            total_dim: r.total_dim,
            polynomial: r
                .morse_poly
                .coefficients()
                .iter()
                .map(BigInt::to_string)
                .collect(),
            leading_coeff: r.leading_coeff.to_string(),
            threshold,
        })
    }

    pub fn coefficients(&self) -> Result<Vec<BigInt>, CliError> {
        self.polynomial
            .iter()
            .map(|s| {
                s.parse()
                    .map_err(|_| CliError::Invariant(format!("bad coefficient {s:?}")))
            })
            .collect()
    }

    /// `12*d^3 - 153*d^2 - 378*d`.
    pub fn polynomial_text(&self) -> String {
        let mut out = String::new();
        for (e, c) in self.polynomial.iter().enumerate().rev() {
            if c == "0" {
                continue;
            }
            let (neg, mag) = match c.strip_prefix('-') {
                Some(m) => (true, m),
                None => (false, c.as_str()),
            };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let var = match e {
                0 => String::new(),
                1 => "d".to_owned(),
                _ => format!("d^{e}"),
            };
            match (mag, var.is_empty()) {
                (_, true) => out.push_str(mag),
                ("1", false) => out.push_str(&var),
                _ => {
                    out.push_str(mag);
                    out.push('*');
                    out.push_str(&var);
                }
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }
}

pub fn join<T: ToString>(xs: &[T], sep: &str) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rec(p: &[&str]) -> ReportRecord {
        ReportRecord {
            dim: 2,
            order: 2,
            geometry: "log".into(),
            weights: vec![2, 1],
            total_dim: 4,
            polynomial: p.iter().map(|s| s.to_string()).collect(),
            leading_coeff: p.last().unwrap_or(&"0").to_string(),
            threshold: Some(15),
        }
    }

    #[test]
    fn polynomial_text_forms() {
        assert_eq!(
            rec(&["0", "-378", "-153", "12"]).polynomial_text(),
            "12*d^3 - 153*d^2 - 378*d"
        );
        assert_eq!(rec(&["-3", "1"]).polynomial_text(), "d - 3");
        assert_eq!(rec(&["5", "0", "-1"]).polynomial_text(), "-d^2 + 5");
        assert_eq!(rec(&[]).polynomial_text(), "0");
    }

    #[test]
    fn json_field_order_is_fixed() {
        let j = rec(&["0", "-378", "-153", "12"]).to_json();
        assert_eq!(
            j,
            r#"{"dim":2,"order":2,"geometry":"log","weights":[2,1],"total_dim":4,"polynomial":["0","-378","-153","12"],"leading_coeff":"12","threshold":15}"#
        );
        let back: ReportRecord = serde_json::from_str(&j).unwrap();
        assert_eq!(back, rec(&["0", "-378", "-153", "12"]));
    }
}
