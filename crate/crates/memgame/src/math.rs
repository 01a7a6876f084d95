//! Thin wrappers so the rest of the crate reads like ordinary float code
//! without `std`.

#[inline]
pub fn sin(x: f64) -> f64 {
    libm::sin(x)
}

#[inline]
pub fn cos(x: f64) -> f64 {
    libm::cos(x)
}

#[inline]
pub fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

#[inline]
pub fn abs(x: f64) -> f64 {
    libm::fabs(x)
}

/// `e^{i x}`.
#[inline]
pub fn cis(x: f64) -> num_complex::Complex64 {
    num_complex::Complex64::new(cos(x), sin(x))
}
