//! Machine-readable verification reports.
//!
//! One record per checked inequality instance. Serialized as JSON lines with
//! the field order fixed as declared, and as CSV with identical columns.
//! Comparisons are exact: `lhs` and `rhs` are rationals rendered as `p` or
//! `p/q`, never floats.

use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub type Rational = Ratio<i64>;

/// Which inequality a report row checks. The serialized names are the wire
/// identifiers of the report schema.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Inequality {
    Prop1,
    ThmAffine,
    CorSs,
    CorHalf,
    CorSqrtAffine,
    ThmProjLinear,
    ThmProjSqrt,
    CorProjSs,
}

impl Inequality {
    /// Strict inequalities fail on zero slack; non-strict ones pass.
    pub fn is_strict(self) -> bool {
        matches!(self, Inequality::CorSqrtAffine | Inequality::ThmProjSqrt)
    }

    pub fn wire_name(self) -> &'static str {
        match self {
            Inequality::Prop1 => "prop1",
            Inequality::ThmAffine => "thm_affine",
            Inequality::CorSs => "cor_ss",
            Inequality::CorHalf => "cor_half",
            Inequality::CorSqrtAffine => "cor_sqrt_affine",
            Inequality::ThmProjLinear => "thm_proj_linear",
            Inequality::ThmProjSqrt => "thm_proj_sqrt",
            Inequality::CorProjSs => "cor_proj_ss",
        }
    }
}

impl fmt::Display for Inequality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.wire_name())
    }
}

/// One verified instance: `lhs ≤ rhs` (or `<` for strict inequalities).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub instance_id: String,
    #[serde(rename = "dim_X")]
    pub dim_x: u64,
    pub picard_bound: u64,
    pub inequality: Inequality,
    #[serde(with = "rational_str")]
    pub lhs: Rational,
    #[serde(with = "rational_str")]
    pub rhs: Rational,
    pub passed: bool,
    #[serde(with = "rational_str")]
    pub slack: Rational,
}

impl VerificationReport {
    /// Evaluates the comparison and records slack `rhs − lhs`.
    pub fn check(
        instance_id: impl Into<String>,
        dim_x: u64,
        picard_bound: u64,
        inequality: Inequality,
        lhs: Rational,
        rhs: Rational,
    ) -> Self {
        let passed = if inequality.is_strict() {
            lhs < rhs
        } else {
            lhs <= rhs
        };
        VerificationReport {
            instance_id: instance_id.into(),
            dim_x,
            picard_bound,
            inequality,
            lhs,
            rhs,
            passed,
            slack: rhs - lhs,
        }
    }

    pub const CSV_HEADER: &'static str =
        "instance_id,dim_X,picard_bound,inequality,lhs,rhs,passed,slack";

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{}",
            self.instance_id,
            self.dim_x,
            self.picard_bound,
            self.inequality,
            self.lhs,
            self.rhs,
            self.passed,
            self.slack
        )
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// Writes reports as JSON lines, one per row.
pub fn write_jsonl<W: Write>(mut w: W, reports: &[VerificationReport]) -> io::Result<()> {
    for r in reports {
        writeln!(w, "{}", r.to_json_line())?;
    }
    Ok(())
}

/// Writes reports as CSV with a header row.
pub fn write_csv<W: Write>(mut w: W, reports: &[VerificationReport]) -> io::Result<()> {
    writeln!(w, "{}", VerificationReport::CSV_HEADER)?;
    for r in reports {
        writeln!(w, "{}", r.csv_row())?;
    }
    Ok(())
}

mod rational_str {
    use super::*;

    pub fn serialize<S: Serializer>(v: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        Rational::from_str(&s).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strictness() {
        let zero_slack = |ineq| {
            VerificationReport::check(
                "x",
                1,
                1,
                ineq,
                Rational::from_integer(5),
                Rational::from_integer(5),
            )
        };
        assert!(zero_slack(Inequality::ThmAffine).passed);
        assert!(zero_slack(Inequality::ThmProjLinear).passed);
        assert!(!zero_slack(Inequality::ThmProjSqrt).passed);
        assert!(!zero_slack(Inequality::CorSqrtAffine).passed);
    }

    #[test]
    fn json_field_order_and_roundtrip() {
        let r = VerificationReport::check(
            "A3/I=1,3",
            5,
            1,
            Inequality::ThmProjLinear,
            Rational::from_integer(4),
            Rational::new(10, 1),
        );
        let line = r.to_json_line();
        let keys: Vec<usize> = [
            "instance_id",
            "dim_X",
            "picard_bound",
            "inequality",
            "lhs",
            "rhs",
            "passed",
            "slack",
        ]
        .iter()
        .map(|k| line.find(&format!("\"{k}\"")).unwrap())
        .collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]), "field order: {line}");
        let back: VerificationReport = serde_json::from_str(&line).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn csv_matches_declared_columns() {
        let r = VerificationReport::check(
            "G2/t=1",
            10,
            1,
            Inequality::ThmAffine,
            Rational::from_integer(3),
            Rational::from_integer(10),
        );
        assert_eq!(r.csv_row(), "G2/t=1,10,1,thm_affine,3,10,true,7");
    }

    #[test]
    fn rational_rendering() {
        let r = VerificationReport::check(
            "x",
            3,
            1,
            Inequality::CorHalf,
            Rational::from_integer(1),
            Rational::new(3, 2),
        );
        assert_eq!(r.slack, Rational::new(1, 2));
        assert!(r.to_json_line().contains("\"1/2\""));
    }
}
