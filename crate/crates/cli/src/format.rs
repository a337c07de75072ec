//! Number formatting and CSV/JSON emission.

use std::fmt::Write as _;

/// `%g`-style rendering with `digits` significant digits, trailing zeros
/// trimmed.
pub fn sig(x: f64, digits: usize) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -4 || exp >= digits as i32 {
        format!("{}e{exp}", trim(mantissa))
    } else {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        trim(&format!("{x:.decimals$}")).to_string()
    }
}

fn trim(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Energies carry six significant digits.
pub fn energy(e: f64) -> String {
    sig(e, 6)
}

/// Wave-function samples carry ten.
pub fn sample(x: f64) -> String {
    sig(x, 10)
}

pub struct Csv {
    buf: String,
}

impl Csv {
    pub fn new(header: &[&str]) -> Self {
        let mut buf = header.join(",");
        buf.push('\n');
        Csv { buf }
    }

    pub fn row<S: AsRef<str>>(&mut self, fields: &[S]) {
        for (i, f) in fields.iter().enumerate() {
            if i > 0 {
                self.buf.push(',');
            }
            let _ = write!(self.buf, "{}", f.as_ref());
        }
        self.buf.push('\n');
    }

    pub fn finish(self) -> String {
        self.buf
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digits() {
        assert_eq!(sig(3.976047, 6), "3.97605");
        assert_eq!(sig(37.08251506, 6), "37.0825");
        assert_eq!(sig(-97.9619, 6), "-97.9619");
        assert_eq!(sig(-2.2476e-3, 6), "-0.0022476");
        assert_eq!(sig(1.5e-7, 6), "1.5e-7");
        assert_eq!(sig(1234567.0, 6), "1.23457e6");
        assert_eq!(sig(3.0, 10), "3");
        assert_eq!(sig(0.0, 6), "0");
        assert_eq!(sig(99.99999, 6), "100");
    }

    #[test]
    fn csv_layout() {
        let mut c = Csv::new(&["index", "e"]);
        c.row(&["0", "3.97605"]);
        assert_eq!(c.finish(), "index,e\n0,3.97605\n");
    }
}
