//! File formats: matrix JSON, signal CSV (`x,re,im`), sample CSV (`k,re,im,provenance`),
//! and long-form profile CSV (`x,re,im,series`).
//!
//! Floats are written in Rust's shortest round-trip form, so re-reading any emitted file
//! gives bit-identical values.

use num_complex::Complex64;
use std::io::{Read, Write};

use crate::dirichlet_interp::{DirichletSamples, Provenance};
use crate::error::{Error, Result};
use crate::frac_calculus::SampledSignal;
use crate::frfrt::{ProfileRow, Signal};
use crate::operator_powers::ComplexMatrix;

const GRID_TOL: f64 = 1e-9;

pub fn read_matrix_json<R: Read>(reader: R) -> Result<ComplexMatrix> {
    Ok(serde_json::from_reader(reader)?)
}

pub fn write_matrix_json<W: Write>(mut writer: W, m: &ComplexMatrix) -> Result<()> {
    serde_json::to_writer(&mut writer, m)?;
    writeln!(writer)?;
    Ok(())
}

/// Rows of a signal CSV: abscissae and complex values.
#[derive(Debug, Clone, PartialEq)]
pub struct SignalTable {
    pub x: Vec<f64>,
    pub values: Vec<Complex64>,
}

impl SignalTable {
    /// Uniform step, checked.
    pub fn step(&self) -> Result<f64> {
        if self.x.len() < 2 {
            return Err(Error::Parse("a signal needs at least two rows".into()));
        }
        let n = self.x.len();
        let h = (self.x[n - 1] - self.x[0]) / (n - 1) as f64;
        if !(h > 0.0) {
            return Err(Error::Parse("x must be strictly increasing".into()));
        }
        for (j, w) in self.x.windows(2).enumerate() {
            if !(w[1] > w[0]) {
                return Err(Error::Parse(format!("x is not strictly increasing at row {}", j + 2)));
            }
            let expected = self.x[0] + (j + 1) as f64 * h;
            if (w[1] - expected).abs() > GRID_TOL * h.max(w[1].abs()) {
                return Err(Error::Parse(format!("x is not uniformly spaced at row {}", j + 2)));
            }
        }
        Ok(h)
    }

    pub fn into_sampled(self) -> Result<SampledSignal> {
        self.step()?;
        let a = self.x[0];
        let b = self.x[self.x.len() - 1];
        SampledSignal::new(a, b, self.values)
    }

    /// As a centered-grid signal; requires `x_j = (j − ⌊M/2⌋)·step`.
    pub fn into_centered(self) -> Result<Signal> {
        let h = self.step()?;
        let c = self.x.len() / 2;
        if self.x[c].abs() > GRID_TOL * h.max(1.0) {
            return Err(Error::Parse(format!(
                "signal grid must be centered: row {} should have x = 0, found {}",
                c + 2,
                self.x[c]
            )));
        }
        Signal::new(self.values, h)
    }

    pub fn from_sampled(s: &SampledSignal) -> Self {
        Self {
            x: s.grid(),
            values: s.values().to_vec(),
        }
    }

    pub fn from_centered(s: &Signal) -> Self {
        Self {
            x: s.grid(),
            values: s.samples().to_vec(),
        }
    }
}

fn parse_f64(field: Option<&str>, name: &str, row: usize) -> Result<f64> {
    let text = field.ok_or_else(|| Error::Parse(format!("row {row}: missing column {name}")))?;
    text.trim()
        .parse::<f64>()
        .map_err(|_| Error::Parse(format!("row {row}: bad number {text:?} in column {name}")))
}

fn check_header(reader: &mut csv::Reader<impl Read>, expected: &[&str]) -> Result<()> {
    let headers = reader.headers()?;
    let got: Vec<&str> = headers.iter().map(str::trim).collect();
    if got != expected {
        return Err(Error::Parse(format!(
            "expected header {}, found {}",
            expected.join(","),
            got.join(",")
        )));
    }
    Ok(())
}

pub fn read_signal_csv<R: Read>(reader: R) -> Result<SignalTable> {
    let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(reader);
    check_header(&mut rdr, &["x", "re", "im"])?;
    let mut x = Vec::new();
    let mut values = Vec::new();
    for (i, rec) in rdr.records().enumerate() {
        let rec = rec?;
        let row = i + 2;
        x.push(parse_f64(rec.get(0), "x", row)?);
        values.push(Complex64::new(
            parse_f64(rec.get(1), "re", row)?,
            parse_f64(rec.get(2), "im", row)?,
        ));
    }
    let table = SignalTable { x, values };
    table.step()?;
    Ok(table)
}

pub fn write_signal_csv<W: Write>(mut writer: W, table: &SignalTable) -> Result<()> {
    writeln!(writer, "x,re,im")?;
    for (x, v) in table.x.iter().zip(&table.values) {
        writeln!(writer, "{x:?},{:?},{:?}", v.re, v.im)?;
    }
    Ok(())
}

pub fn read_samples_csv<R: Read>(reader: R) -> Result<DirichletSamples> {
    let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(reader);
    check_header(&mut rdr, &["k", "re", "im", "provenance"])?;
    let mut values = Vec::new();
    let mut provenance = Vec::new();
    for (i, rec) in rdr.records().enumerate() {
        let rec = rec?;
        let row = i + 2;
        let k: usize = rec
            .get(0)
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::Parse(format!("row {row}: bad index")))?;
        if k != i {
            return Err(Error::Parse(format!("row {row}: expected k = {i}, found {k}")));
        }
        values.push(Complex64::new(
            parse_f64(rec.get(1), "re", row)?,
            parse_f64(rec.get(2), "im", row)?,
        ));
        provenance.push(Provenance::parse(rec.get(3).unwrap_or("user_supplied"))?);
    }
    DirichletSamples::new(values, provenance).map_err(|e| Error::Parse(e.to_string()))
}

pub fn write_samples_csv<W: Write>(mut writer: W, samples: &DirichletSamples) -> Result<()> {
    writeln!(writer, "k,re,im,provenance")?;
    for (k, (v, p)) in samples.values().iter().zip(samples.provenance()).enumerate() {
        writeln!(writer, "{k},{:?},{:?},{}", v.re, v.im, p.as_str())?;
    }
    Ok(())
}

pub fn write_profile_csv<W: Write>(mut writer: W, rows: &[ProfileRow]) -> Result<()> {
    writeln!(writer, "x,re,im,series")?;
    for r in rows {
        writeln!(writer, "{:?},{:?},{:?},{}", r.x, r.re, r.im, r.series)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn signal_csv_round_trip() {
        let s = SampledSignal::from_real_fn(0.0, 1.0, 7, |x| (x * 10.0).sin() / 3.0).unwrap();
        let table = SignalTable::from_sampled(&s);
        let mut buf = Vec::new();
        write_signal_csv(&mut buf, &table).unwrap();
        let back = read_signal_csv(buf.as_slice()).unwrap();
        assert_eq!(back, table);
        assert_eq!(back.into_sampled().unwrap(), s);
    }

    #[test]
    fn signal_csv_rejects_bad_grids() {
        let bad = "x,re,im\n0,1,0\n1,1,0\n1.5,1,0\n";
        assert!(matches!(read_signal_csv(bad.as_bytes()), Err(Error::Parse(_))));
        let dec = "x,re,im\n0,1,0\n-1,1,0\n";
        assert!(read_signal_csv(dec.as_bytes()).is_err());
        let header = "t,re,im\n0,1,0\n1,1,0\n";
        assert!(read_signal_csv(header.as_bytes()).is_err());
        let not_centered = "x,re,im\n0,1,0\n1,1,0\n2,1,0\n3,1,0\n";
        let t = read_signal_csv(not_centered.as_bytes()).unwrap();
        assert!(t.into_centered().is_err());
    }

    #[test]
    fn samples_csv_round_trip() {
        let s = crate::dirichlet_interp::eta_integer_values(5);
        let mut buf = Vec::new();
        write_samples_csv(&mut buf, &s).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("k,re,im,provenance\n0,0.5,0.0,closed_form\n"));
        assert_eq!(read_samples_csv(buf.as_slice()).unwrap(), s);
    }

    #[test]
    fn matrix_json_round_trip() {
        let m = ComplexMatrix::new(
            2,
            vec![
                Complex64::new(0.1, -1e-300),
                Complex64::new(1.0 / 3.0, 0.0),
                Complex64::new(-2.5e10, 7.0),
                Complex64::new(0.0, 0.0),
            ],
        )
        .unwrap();
        let mut buf = Vec::new();
        write_matrix_json(&mut buf, &m).unwrap();
        assert_eq!(read_matrix_json(buf.as_slice()).unwrap(), m);
    }
}
