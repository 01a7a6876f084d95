//! Number formatting and parsing shared by every output and input path.

use core::f64::consts::PI;

use crate::error::{CliError, CliResult};

/// Significant digits in all printed numbers.
pub const DIGITS: usize = 12;

/// Shortest-form decimal with 12 significant digits, like C's `%.12g`.
///
/// Negative zero prints as `0`.
pub fn fmt_num(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let sci = format!("{:.*e}", DIGITS - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -5 || exp >= DIGITS as i32 {
        let m = trim(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        return format!("{m}e{sign}{:02}", exp.abs());
    }
    let decimals = (DIGITS as i32 - 1 - exp).max(0) as usize;
    let fixed = format!("{x:.decimals$}");
    let s = trim(&fixed);
    if s == "-0" { "0".into() } else { s.into() }
}

fn trim(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Parses a real, accepting `pi`, `-pi`, `pi/N` and `K*pi` literals.
pub fn parse_num(s: &str) -> CliResult<f64> {
    let t = s.trim();
    let bad = || CliError::Usage(format!("not a number: '{s}'"));
    let (neg, body) = match t.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, t),
    };
    let v = if let Some(rest) = body.strip_prefix("pi") {
        if rest.is_empty() {
            PI
        } else {
            let d: f64 = rest.strip_prefix('/').ok_or_else(bad)?.parse().map_err(|_| bad())?;
            PI / d
        }
    } else if let Some(k) = body.strip_suffix("*pi") {
        k.parse::<f64>().map_err(|_| bad())? * PI
    } else {
        let v: f64 = body.parse().map_err(|_| bad())?;
        if !v.is_finite() {
            return Err(bad());
        }
        v
    };
    Ok(if neg { -v } else { v })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn printed_numbers_parse_back(x in -1e6..1e6f64, e in -20i32..20) {
            let v = x * 10f64.powi(e);
            let back = parse_num(&fmt_num(v)).unwrap();
            prop_assert!((back - v).abs() <= 1e-11 * v.abs());
        }
    }

    #[test]
    fn formatting() {
        assert_eq!(fmt_num(1.0), "1");
        assert_eq!(fmt_num(-0.0), "0");
        assert_eq!(fmt_num(0.25), "0.25");
        assert_eq!(fmt_num(PI), "3.14159265359");
        assert_eq!(fmt_num(1.0 / 3.0), "0.333333333333");
        assert_eq!(fmt_num(2.5e-7), "2.5e-07");
        assert_eq!(fmt_num(1.2345e13), "1.2345e+13");
        assert_eq!(fmt_num(-1.5), "-1.5");
        assert_eq!(fmt_num(0.99999999999999), "1");
        assert_eq!(fmt_num(-1e-17), "-1e-17");
        assert_eq!(fmt_num(123456.0), "123456");
    }

    #[test]
    fn parsing() {
        assert_eq!(parse_num("pi").unwrap(), PI);
        assert_eq!(parse_num("pi/2").unwrap(), PI / 2.0);
        assert_eq!(parse_num("-pi").unwrap(), -PI);
        assert_eq!(parse_num("0.5*pi").unwrap(), PI / 2.0);
        assert_eq!(parse_num(" 0.25 ").unwrap(), 0.25);
        for bad in ["", "pie", "pi/x", "nan", "inf", "1,2"] {
            assert!(parse_num(bad).is_err(), "{bad}");
        }
    }
}
