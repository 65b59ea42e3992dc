//! Text format for named complex matrices.
//!
//! ```text
//! # comments run to the end of the line
//! S = [[0, -1], [0, 1]]
//! T = [[1+2i, -i], [0.5, 3e-2-1.5i]]
//! ```
//!
//! Whitespace is ignored everywhere outside comments. Entries are `a`,
//! `a+bi`, `a-bi` or `bi` with `b` optional in front of `i`. Rendering
//! writes every number in shortest round-trip form, so
//! `parse(render(m)) == m` bit for bit.

use std::fmt::{self, Write as _};
use std::path::Path;

use num_complex::Complex64;
use omegaorth_core::DenseMatrix;

#[derive(Debug, Clone, PartialEq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct MatrixFile {
    pub entries: Vec<(String, DenseMatrix)>,
}

impl MatrixFile {
    pub fn load(path: &Path) -> Result<Self, ParseError> {
        let text = std::fs::read_to_string(path).map_err(|e| ParseError {
            line: 0,
            message: format!("cannot read {}: {e}", path.display()),
        })?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self, ParseError> {
        Parser::new(text).file()
    }

    pub fn get(&self, name: &str) -> Option<&DenseMatrix> {
        self.entries.iter().find(|(n, _)| n == name).map(|(_, m)| m)
    }

    pub fn push(&mut self, name: &str, m: DenseMatrix) {
        self.entries.push((name.to_string(), m));
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for (name, m) in &self.entries {
            out.push_str(&render_entry(name, m));
            out.push('\n');
        }
        out
    }
}

/// `name = [[..], ..]` on one line.
pub fn render_entry(name: &str, m: &DenseMatrix) -> String {
    let rows: Vec<String> = m
        .rows()
        .map(|row| {
            let cells: Vec<String> = row.iter().map(|&z| render_complex(z)).collect();
            format!("[{}]", cells.join(", "))
        })
        .collect();
    format!("{name} = [{}]", rows.join(", "))
}

pub fn render_complex(z: Complex64) -> String {
    let mut s = format!("{:?}", z.re);
    if z.im.to_bits() != 0 {
        let sign = if z.im.is_sign_negative() { '-' } else { '+' };
        let _ = write!(s, "{sign}{:?}i", z.im.abs());
    }
    s
}

/// Parses one complex literal (no whitespace).
pub fn parse_complex(lit: &str) -> Result<Complex64, String> {
    let bad = || format!("malformed number `{lit}`");
    let number = |s: &str| -> Result<f64, String> {
        let v: f64 = s.parse().map_err(|_| bad())?;
        if v.is_finite() {
            Ok(v)
        } else {
            Err(format!("non-finite number `{lit}`"))
        }
    };
    if lit.is_empty() || lit.contains(|c: char| c.is_ascii_alphabetic() && !matches!(c, 'e' | 'E' | 'i')) {
        return Err(bad());
    }
    let Some(body) = lit.strip_suffix('i') else {
        return Ok(Complex64::new(number(lit)?, 0.0));
    };
    // the split is the last sign that does not belong to an exponent
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (number(&body[..k])?, &body[k..]),
        None => (0.0, body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        s => number(s)?,
    };
    Ok(Complex64::new(re, im))
}

struct Parser {
    /// Non-whitespace characters outside comments, with their line.
    chars: Vec<(char, usize)>,
    pos: usize,
}

impl Parser {
    fn new(text: &str) -> Self {
        let mut chars = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let code = line.split('#').next().unwrap_or("");
            chars.extend(code.chars().filter(|c| !c.is_whitespace()).map(|c| (c, i + 1)));
        }
        Parser { chars, pos: 0 }
    }

    fn line(&self) -> usize {
        self.chars.get(self.pos).or(self.chars.last()).map_or(1, |&(_, l)| l)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            line: self.line(),
            message: message.into(),
        })
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(c, _)| c)
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        match self.peek() {
            Some(d) if d == c => {
                self.pos += 1;
                Ok(())
            }
            Some(d) => self.error(format!("expected `{c}`, found `{d}`")),
            None => self.error(format!("expected `{c}`, found end of input")),
        }
    }

    fn file(mut self) -> Result<MatrixFile, ParseError> {
        let mut file = MatrixFile::default();
        while self.peek().is_some() {
            let line = self.line();
            let name = self.name()?;
            if file.get(&name).is_some() {
                return Err(ParseError {
                    line,
                    message: format!("duplicate matrix `{name}`"),
                });
            }
            self.expect('=')?;
            let m = self.matrix(line)?;
            file.entries.push((name, m));
        }
        Ok(file)
    }

    fn name(&mut self) -> Result<String, ParseError> {
        let start = self.pos;
        while let Some(c) = self.peek() {
            let ok = c == '_' || c.is_ascii_alphabetic() || (self.pos > start && (c.is_ascii_digit() || c == '\''));
            if !ok {
                break;
            }
            self.pos += 1;
        }
        if self.pos == start {
            return self.error("expected a matrix name");
        }
        Ok(self.chars[start..self.pos].iter().map(|&(c, _)| c).collect())
    }

    fn matrix(&mut self, line: usize) -> Result<DenseMatrix, ParseError> {
        self.expect('[')?;
        let mut rows: Vec<Vec<Complex64>> = Vec::new();
        loop {
            rows.push(self.row()?);
            match self.peek() {
                Some(',') => self.pos += 1,
                Some(']') => {
                    self.pos += 1;
                    break;
                }
                _ => return self.error("expected `,` or `]` after a row"),
            }
        }
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(ParseError {
                line,
                message: format!("matrix is not square ({n} rows)"),
            });
        }
        DenseMatrix::from_row_major(n, rows.concat()).map_err(|e| ParseError {
            line,
            message: e.to_string(),
        })
    }

    fn row(&mut self) -> Result<Vec<Complex64>, ParseError> {
        self.expect('[')?;
        let mut row = Vec::new();
        loop {
            let start = self.pos;
            while let Some(c) = self.peek() {
                if matches!(c, ',' | ']' | '[' | '=') {
                    break;
                }
                self.pos += 1;
            }
            let lit: String = self.chars[start..self.pos].iter().map(|&(c, _)| c).collect();
            let line = self.chars.get(start).map_or(self.line(), |&(_, l)| l);
            let z = parse_complex(&lit).map_err(|message| ParseError { line, message })?;
            row.push(z);
            match self.peek() {
                Some(',') => self.pos += 1,
                Some(']') => {
                    self.pos += 1;
                    return Ok(row);
                }
                _ => return self.error("expected `,` or `]` in a row"),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn literals() {
        for (lit, z) in [
            ("1", c(1.0, 0.0)),
            ("-2.5", c(-2.5, 0.0)),
            ("i", c(0.0, 1.0)),
            ("-i", c(0.0, -1.0)),
            ("3i", c(0.0, 3.0)),
            ("1+i", c(1.0, 1.0)),
            ("1-2i", c(1.0, -2.0)),
            ("1e-3+2E+2i", c(1e-3, 200.0)),
            ("-1e-7-1e-8i", c(-1e-7, -1e-8)),
            ("+4", c(4.0, 0.0)),
        ] {
            assert_eq!(parse_complex(lit).unwrap(), z, "{lit}");
        }
        for lit in ["", "1+", "abc", "1..2", "inf", "NaN", "1+2j", "2ii"] {
            assert!(parse_complex(lit).is_err(), "{lit}");
        }
    }

    #[test]
    fn parses_files_with_comments_and_whitespace() {
        let text = "# two matrices\nS = [[0, -1],\n     [0, 1]]  # trailing\nT=[[ 1 + 2 i , -i ],[0,0]]\n";
        let f = MatrixFile::parse(text).unwrap();
        assert_eq!(f.entries.len(), 2);
        assert_eq!(
            f.get("S").unwrap(),
            &DenseMatrix::from_real_rows(&[&[0.0, -1.0], &[0.0, 1.0]]).unwrap()
        );
        assert_eq!(f.get("T").unwrap().get(0, 0), c(1.0, 2.0));
        assert_eq!(f.get("T").unwrap().get(0, 1), c(0.0, -1.0));
    }

    #[test]
    fn reports_errors_with_lines() {
        let e = MatrixFile::parse("A = [[1, 2]]").unwrap_err();
        assert!(e.message.contains("square"), "{e}");
        let e = MatrixFile::parse("A = [[1]]\n\nB = [[1, x]]").unwrap_err();
        assert_eq!(e.line, 3);
        assert!(MatrixFile::parse("A = [[1]] A = [[2]]").is_err());
        assert!(MatrixFile::parse("= [[1]]").is_err());
        assert!(MatrixFile::parse("A = [[1]").is_err());
    }

    #[test]
    fn renders_and_round_trips() {
        let m =
            DenseMatrix::from_row_major(2, vec![c(0.1, 0.0), c(-0.0, -0.0), c(1e-300, 2.5), c(-3.0, -1e20)]).unwrap();
        let mut f = MatrixFile::default();
        f.push("M", m.clone());
        let text = f.render();
        assert_eq!(text, "M = [[0.1, -0.0-0.0i], [1e-300+2.5i, -3.0-1e20i]]\n");
        let back = MatrixFile::parse(&text).unwrap();
        let got = back.get("M").unwrap();
        for (a, b) in got.entries().iter().zip(m.entries()) {
            assert_eq!(a.re.to_bits(), b.re.to_bits());
            assert_eq!(a.im.to_bits(), b.im.to_bits());
        }
    }
}
