//! Thin wrappers over libm so the crate stays no_std.

pub fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

pub fn log2(x: f64) -> f64 {
    libm::log2(x)
}

pub fn powf(x: f64, y: f64) -> f64 {
    libm::pow(x, y)
}
