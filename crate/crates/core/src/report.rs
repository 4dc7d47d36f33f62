//! Tabular scenario output and its CSV rendering.
//!
//! A report renders as `#`-prefixed `key: value` metadata lines, a header
//! row, then one line per row. Fields are separated by `,`, lines end in a
//! single `\n`, and reals are printed like C's `%.17g`, which round-trips
//! every finite double.

use std::io::{self, Write};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioReport {
    scenario: String,
    metadata: Vec<(String, String)>,
    columns: Vec<String>,
    rows: Vec<Vec<f64>>,
}

impl ScenarioReport {
    pub fn new<S: Into<String>>(
        scenario: impl Into<String>,
        columns: impl IntoIterator<Item = S>,
    ) -> Self {
        ScenarioReport {
            scenario: scenario.into(),
            metadata: Vec::new(),
            columns: columns.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn with_metadata(mut self, key: impl Into<String>, value: impl Into<String>) -> Self {
        self.metadata.push((key.into(), value.into()));
        self
    }

    pub fn push_row(&mut self, row: Vec<f64>) -> Result<()> {
        if row.len() != self.columns.len() {
            return Err(Error::Config(format!(
                "row has {} fields, report declares {} columns",
                row.len(),
                self.columns.len()
            )));
        }
        self.rows.push(row);
        Ok(())
    }

    pub fn scenario(&self) -> &str {
        &self.scenario
    }

    pub fn metadata(&self) -> &[(String, String)] {
        &self.metadata
    }

    pub fn columns(&self) -> &[String] {
        &self.columns
    }

    pub fn rows(&self) -> &[Vec<f64>] {
        &self.rows
    }

    /// Values of one column, by name.
    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let idx = self.columns.iter().position(|c| c == name)?;
        Some(self.rows.iter().map(|r| r[idx]).collect())
    }
}

/// Formats `value` with 17 significant digits, trailing zeros removed.
pub fn format_real(value: f64) -> String {
    if value.is_nan() {
        return "nan".into();
    }
    if value.is_infinite() {
        return if value > 0.0 { "inf" } else { "-inf" }.into();
    }
    if value == 0.0 {
        return if value.is_sign_negative() { "-0" } else { "0" }.into();
    }

    let sci = format!("{value:.16e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent in scientific format");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-4..17).contains(&exp) {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{sign}{:02}", trim_fraction(mantissa), exp.abs())
    } else {
        let decimals = (16 - exp) as usize;
        trim_fraction(&format!("{value:.decimals$}")).to_string()
    }
}

fn trim_fraction(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

pub fn emit_csv<W: Write>(report: &ScenarioReport, out: &mut W) -> io::Result<()> {
    writeln!(out, "# scenario: {}", report.scenario)?;
    for (key, value) in &report.metadata {
        writeln!(out, "# {key}: {value}")?;
    }
    writeln!(out, "{}", report.columns.join(","))?;
    let mut line = String::new();
    for row in &report.rows {
        line.clear();
        for (k, v) in row.iter().enumerate() {
            if k > 0 {
                line.push(',');
            }
            line.push_str(&format_real(*v));
        }
        line.push('\n');
        out.write_all(line.as_bytes())?;
    }
    out.flush()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn render(report: &ScenarioReport) -> String {
        let mut buf = Vec::new();
        emit_csv(report, &mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn formats_like_printf_g17() {
        assert_eq!(format_real(1.0), "1");
        assert_eq!(format_real(-2.0), "-2");
        assert_eq!(format_real(0.5), "0.5");
        assert_eq!(format_real(0.1), "0.10000000000000001");
        assert_eq!(format_real(1.0 / 3.0), "0.33333333333333331");
        assert_eq!(format_real(std::f64::consts::PI), "3.1415926535897931");
        assert_eq!(format_real(123456.0), "123456");
        assert_eq!(format_real(1e-5), "1.0000000000000001e-05");
        assert_eq!(format_real(2.5e-4), "0.00025000000000000001");
        assert_eq!(format_real(1e17), "1e+17");
        assert_eq!(format_real(1e16), "10000000000000000");
        assert_eq!(format_real(1.5e300), "1.5000000000000001e+300");
        assert_eq!(format_real(-3e-7), "-2.9999999999999999e-07");
        assert_eq!(format_real(0.0), "0");
        assert_eq!(format_real(-0.0), "-0");
        assert_eq!(format_real(f64::NAN), "nan");
        assert_eq!(format_real(f64::NEG_INFINITY), "-inf");
    }

    #[test]
    fn empty_report_has_metadata_and_header_only() {
        let report = ScenarioReport::new("demo", ["a", "b"]).with_metadata("n", "4");
        assert_eq!(render(&report), "# scenario: demo\n# n: 4\na,b\n");
    }

    #[test]
    fn one_row() {
        let mut report = ScenarioReport::new("demo", ["a", "b"]);
        report.push_row(vec![1.0, 2.0]).unwrap();
        let text = render(&report);
        assert_eq!(text.lines().last(), Some("1,2"));
        assert_eq!(text.lines().filter(|l| !l.starts_with('#')).count(), 2);
        assert!(text.ends_with("1,2\n"));
    }

    #[test]
    fn rejects_ragged_rows() {
        let mut report = ScenarioReport::new("demo", ["a", "b"]);
        assert!(report.push_row(vec![1.0]).is_err());
        assert!(report.rows().is_empty());
    }

    #[test]
    fn column_lookup() {
        let mut report = ScenarioReport::new("demo", ["a", "b"]);
        report.push_row(vec![1.0, 2.0]).unwrap();
        report.push_row(vec![3.0, 4.0]).unwrap();
        assert_eq!(report.column("b"), Some(vec![2.0, 4.0]));
        assert_eq!(report.column("c"), None);
    }

    proptest! {
        #[test]
        fn formatting_round_trips(bits in any::<u64>()) {
            let v = f64::from_bits(bits);
            prop_assume!(v.is_finite());
            let text = format_real(v);
            let back: f64 = text.parse().unwrap();
            prop_assert_eq!(back.to_bits(), v.to_bits(), "{}", text);
        }
    }
}
