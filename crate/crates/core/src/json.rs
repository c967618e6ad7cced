//! Float formatting for JSON output.

use serde::ser::{Serialize, Serializer};
use serde_json::value::RawValue;

/// Formats `x` with 17 significant digits in plain decimal notation when the
/// exponent is moderate, scientific otherwise. Non-finite values become
/// `null`.
pub fn sig17(x: f64) -> String {
    if !x.is_finite() {
        return "null".to_string();
    }
    if x == 0.0 {
        return if x.is_sign_negative() { "-0.0" } else { "0.0" }.to_string();
    }
    let sci = format!("{x:.16e}");
    let (mantissa, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("integer exponent");
    let (sign, mantissa) = match mantissa.strip_prefix('-') {
        Some(m) => ("-", m),
        None => ("", mantissa),
    };
    let digits: String = mantissa.chars().filter(|c| *c != '.').collect();
    if !(-6..=20).contains(&exp) {
        return format!("{sign}{}.{}e{exp}", &digits[..1], &digits[1..]);
    }
    if exp < 0 {
        let zeros = "0".repeat((-exp - 1) as usize);
        format!("{sign}0.{zeros}{digits}")
    } else {
        let point = exp as usize + 1;
        if point >= digits.len() {
            let zeros = "0".repeat(point - digits.len());
            format!("{sign}{digits}{zeros}.0")
        } else {
            format!("{sign}{}.{}", &digits[..point], &digits[point..])
        }
    }
}

/// Serializes an `f64` through [`sig17`].
#[derive(Debug, Clone, Copy)]
pub struct Sig17(pub f64);

impl Serialize for Sig17 {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let raw = RawValue::from_string(sig17(self.0)).map_err(serde::ser::Error::custom)?;
        raw.serialize(serializer)
    }
}

pub(crate) fn serialize_sig17<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    Sig17(*x).serialize(s)
}

pub(crate) fn serialize_sig17_vec<S: Serializer>(xs: &[f64], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(xs.iter().map(|&x| Sig17(x)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    #[allow(clippy::excessive_precision)]
    fn formats() {
        assert_eq!(sig17(5.0), "5.0000000000000000");
        assert_eq!(sig17(2.7320508075688772), "2.7320508075688772");
        assert_eq!(sig17(-0.25), "-0.25000000000000000");
        assert_eq!(sig17(1234.5), "1234.5000000000000");
        assert_eq!(sig17(0.001), "0.0010000000000000000");
        assert_eq!(sig17(1e-12), "9.9999999999999998e-13");
        assert_eq!(sig17(2f64.powi(-30)), "9.3132257461547852e-10");
        assert_eq!(sig17(f64::NAN), "null");
    }

    #[test]
    fn round_trips_exactly() {
        for x in [1.0 / 3.0, std::f64::consts::PI * 1e5, 2.0f64.sqrt() * 1e-3, 7e-300] {
            let parsed: f64 = sig17(x).parse().unwrap();
            assert_eq!(parsed, x);
        }
    }

    #[test]
    fn embeds_in_json() {
        let s = serde_json::to_string(&vec![Sig17(1.5), Sig17(f64::INFINITY)]).unwrap();
        assert_eq!(s, "[1.5000000000000000,null]");
    }
}
