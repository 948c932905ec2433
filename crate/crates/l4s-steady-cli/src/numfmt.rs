//! Decimal formatting for emitted data: '.' separator, no grouping, at most
//! nine significant digits.

/// Round to nine significant digits, then take the shortest decimal that
/// round-trips the rounded value; never longer than the nine-digit form.
pub fn sig9(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return if x.is_nan() {
            "nan".to_string()
        } else if x > 0.0 {
            "inf".to_string()
        } else {
            "-inf".to_string()
        };
    }
    let rounded: f64 = format!("{x:.8e}").parse().expect("9-digit form re-parses");
    format!("{rounded}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integers_stay_plain() {
        assert_eq!(sig9(2.0), "2");
        assert_eq!(sig9(1e9), "1000000000");
        assert_eq!(sig9(-80.0), "-80");
        assert_eq!(sig9(0.0), "0");
    }

    #[test]
    fn nine_digit_cap() {
        assert_eq!(sig9(1.980198019801980), "1.98019802");
        assert_eq!(sig9(0.000121544511548), "0.000121544512");
        assert_eq!(sig9(12.6923461712), "12.6923462");
    }

    #[test]
    fn no_thousands_separators_or_commas() {
        for x in [1234567.89, 1e15, 2773.281812] {
            let s = sig9(x);
            assert!(!s.contains(','));
            assert!(s.parse::<f64>().is_ok());
        }
    }

    #[test]
    fn value_survives_to_nine_digits() {
        for x in [
            core::f64::consts::PI,
            1.0 / 3.0,
            2772.5887222397812,
            9.999999999e8,
            1.2154451154479918e-4,
            -6.626e-34,
        ] {
            let back: f64 = sig9(x).parse().unwrap();
            assert!((back - x).abs() <= 5e-9 * x.abs(), "{x} -> {back}");
        }
    }
}
