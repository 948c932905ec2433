//! Quantity strings with mandatory unit suffixes.
//!
//! Bare numbers are rejected wherever a dimension is expected; silent unit
//! mistakes are the main input hazard in this tool. Suffixes are
//! case-sensitive. Canonical units are seconds, bits and bits per second.

// (suffix, multiplier, divisor): sub-unit scales divide by the exact power
// of ten, so "10 us" lands on the same float as the literal 1e-5.
const TIME: [(&str, f64, f64); 3] = [("ms", 1.0, 1e3), ("us", 1.0, 1e6), ("s", 1.0, 1.0)];
const SIZE: [(&str, f64, f64); 4] =
    [("kb", 1e3, 1.0), ("Mb", 1e6, 1.0), ("Gb", 1e9, 1.0), ("b", 1.0, 1.0)];
const RATE: [(&str, f64, f64); 4] = [
    ("kb/s", 1e3, 1.0),
    ("Mb/s", 1e6, 1.0),
    ("Gb/s", 1e9, 1.0),
    ("b/s", 1.0, 1.0),
];

fn parse_with(s: &str, table: &[(&str, f64, f64)], dim: &str) -> Result<f64, String> {
    let s = s.trim();
    for &(suffix, mul, div) in table {
        if let Some(num) = s.strip_suffix(suffix) {
            let num = num.trim_end();
            if num.is_empty() {
                return Err(format!("missing number in {dim} quantity `{s}`"));
            }
            let v: f64 = num
                .parse()
                .map_err(|_| format!("bad number `{num}` in {dim} quantity `{s}`"))?;
            if !v.is_finite() {
                return Err(format!("{dim} quantity `{s}` must be finite"));
            }
            return Ok(v * mul / div);
        }
    }
    Err(format!(
        "{dim} quantity `{s}` needs a unit suffix ({})",
        table
            .iter()
            .map(|t| t.0)
            .collect::<Vec<_>>()
            .join(", ")
    ))
}

/// "10 ms" / "500us" / "0.001 s" -> seconds.
pub fn parse_time(s: &str) -> Result<f64, String> {
    parse_with(s, &TIME, "time")
}

/// "12 kb" / "1500 b" -> bits.
pub fn parse_size(s: &str) -> Result<f64, String> {
    parse_with(s, &SIZE, "size")
}

/// "1 Gb/s" / "250 kb/s" -> bits per second.
pub fn parse_rate(s: &str) -> Result<f64, String> {
    parse_with(s, &RATE, "rate")
}

/// Canonical serialization; `{}` on f64 round-trips exactly.
pub fn fmt_time(x: f64) -> String {
    format!("{x} s")
}

pub fn fmt_size(x: f64) -> String {
    format!("{x} b")
}

pub fn fmt_rate(x: f64) -> String {
    format!("{x} b/s")
}
