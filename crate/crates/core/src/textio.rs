//! Shared pieces of the whitespace-separated text formats.
//!
//! Floats are written with Rust's shortest round-trip representation in
//! exponent form, so a write/read cycle reproduces every value bit for bit.
//! Lines starting with `#` and blank lines are skipped by the readers.

use std::io::BufRead;

use num_complex::Complex64;

use crate::error::{Error, Result};

pub fn format_f64(x: f64) -> String {
    format!("{x:e}")
}

pub fn format_complex(z: Complex64) -> String {
    format!("{:e} {:e}", z.re, z.im)
}

/// `%g`-style formatting with six significant digits.
pub fn format_sig6(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let exp = x.abs().log10().floor() as i32;
    // Rounding to six digits can carry into the next decade (e.g. 999999.7).
    let rounded: f64 = format!("{x:.5e}").parse().unwrap();
    let exp = exp.max(rounded.abs().log10().floor() as i32);
    if (-5..6).contains(&exp) {
        let decimals = (5 - exp).max(0) as usize;
        trim_zeros(format!("{x:.decimals$}"))
    } else {
        let s = format!("{x:.5e}");
        let (mant, e) = s.split_once('e').unwrap();
        let e: i32 = e.parse().unwrap();
        let sign = if e < 0 { '-' } else { '+' };
        format!("{}e{}{:02}", trim_zeros(mant.to_string()), sign, e.abs())
    }
}

fn trim_zeros(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

/// Line reader that skips comments and blank lines and remembers line numbers.
pub struct Lines<R> {
    inner: R,
    line: usize,
}

impl<R: BufRead> Lines<R> {
    pub fn new(inner: R) -> Self {
        Self { inner, line: 0 }
    }

    pub fn line(&self) -> usize {
        self.line
    }

    /// Next non-comment, non-blank line with its 1-based number.
    pub fn next_record(&mut self) -> Result<Option<(usize, String)>> {
        loop {
            let mut buf = String::new();
            if self.inner.read_line(&mut buf)? == 0 {
                return Ok(None);
            }
            self.line += 1;
            let t = buf.trim();
            if t.is_empty() || t.starts_with('#') {
                continue;
            }
            return Ok(Some((self.line, t.to_string())));
        }
    }
}

pub fn parse_usizes(line: &str, lineno: usize) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>().map_err(|e| Error::Parse {
                line: lineno,
                message: format!("bad integer `{tok}`: {e}"),
            })
        })
        .collect()
}

pub fn parse_f64s(line: &str, lineno: usize) -> Result<Vec<f64>> {
    line.split_whitespace()
        .map(|tok| {
            let v = tok.parse::<f64>().map_err(|e| Error::Parse {
                line: lineno,
                message: format!("bad number `{tok}`: {e}"),
            })?;
            if v.is_finite() {
                Ok(v)
            } else {
                Err(Error::Parse {
                    line: lineno,
                    message: format!("non-finite value `{tok}`"),
                })
            }
        })
        .collect()
}

/// Parses `re im re im ...` into complex values.
pub fn parse_complexes(line: &str, lineno: usize) -> Result<Vec<Complex64>> {
    let vals = parse_f64s(line, lineno)?;
    if vals.len() % 2 != 0 {
        return Err(Error::Parse {
            line: lineno,
            message: "odd number of reals in a complex list".into(),
        });
    }
    Ok(vals.chunks(2).map(|p| Complex64::new(p[0], p[1])).collect())
}
