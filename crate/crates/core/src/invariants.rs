//! Characteristic numbers of closed oriented 4-manifolds.
//!
//! A [`CharNumbers`] value carries the Euler characteristic `e`, the
//! signature `sigma`, the holomorphic Euler characteristic
//! `chi_h = (e + sigma) / 4` and the Chern number `c1_sq = 3 sigma + 2 e`.
//! The last two are derived, so every constructor keeps the quadruple
//! consistent. `chi_h` is an exact rational: points off the integer lattice
//! are representable and reported through [`CharNumbers::integral_chi`].

use std::fmt;

use num_rational::Rational64;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CharNumbers {
    e: i64,
    sigma: i64,
    chi_h: Rational64,
    c1_sq: i64,
}

impl CharNumbers {
    pub fn from_e_sigma(e: i64, sigma: i64) -> Self {
        CharNumbers {
            e,
            sigma,
            chi_h: Rational64::new(e + sigma, 4),
            c1_sq: 3 * sigma + 2 * e,
        }
    }

    /// Inverts `chi_h = (e + sigma)/4`, `c1_sq = 3 sigma + 2 e`:
    /// `e = 12 chi_h - c1_sq`, `sigma = c1_sq - 8 chi_h`.
    pub fn from_chi_c1(chi_h: Rational64, c1_sq: i64) -> Result<Self> {
        let c1 = Rational64::from_integer(c1_sq);
        let e = Rational64::from_integer(12) * chi_h - c1;
        let sigma = c1 - Rational64::from_integer(8) * chi_h;
        if !e.is_integer() || !sigma.is_integer() {
            return Err(Error::NonIntegralInvariant(format!(
                "chi_h = {chi_h}, c1^2 = {c1_sq} gives e = {e}, sigma = {sigma}"
            )));
        }
        Ok(CharNumbers {
            e: e.to_integer(),
            sigma: sigma.to_integer(),
            chi_h,
            c1_sq,
        })
    }

    pub fn zero() -> Self {
        Self::from_e_sigma(0, 0)
    }

    pub fn e(&self) -> i64 {
        self.e
    }

    pub fn sigma(&self) -> i64 {
        self.sigma
    }

    pub fn chi_h(&self) -> Rational64 {
        self.chi_h
    }

    pub fn c1_sq(&self) -> i64 {
        self.c1_sq
    }

    /// True when `e + sigma` is divisible by 4.
    pub fn integral_chi(&self) -> bool {
        self.chi_h.denom().is_one()
    }

    /// Checks both defining identities.
    pub fn is_consistent(&self) -> bool {
        self.c1_sq - 3 * self.sigma - 2 * self.e == 0
            && (self.chi_h * 4 - Rational64::from_integer(self.e + self.sigma)).is_zero()
    }
}

impl fmt::Display for CharNumbers {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "e = {}, sigma = {}, chi_h = {}, c1^2 = {}",
            self.e, self.sigma, self.chi_h, self.c1_sq
        )
    }
}

/// Fiber sum along a square-zero surface of genus `g`, computed with
/// `c1^2 -> c1^2(X) + c1^2(Y) + 8(g-1)` and `chi_h -> chi_h(X) + chi_h(Y) + (g-1)`.
pub fn fiber_sum(x: &CharNumbers, y: &CharNumbers, g: i64) -> Result<CharNumbers> {
    if g < 1 {
        return Err(Error::GenusOutOfRange(g));
    }
    let chi = x.chi_h + y.chi_h + Rational64::from_integer(g - 1);
    let c1 = x.c1_sq + y.c1_sq + 8 * (g - 1);
    CharNumbers::from_chi_c1(chi, c1)
}

/// Same fiber sum through the Euler characteristic and signature:
/// `e -> e(X) + e(Y) - 2 e(Sigma_g)` and `sigma -> sigma(X) + sigma(Y)`.
pub fn fiber_sum_via_euler(x: &CharNumbers, y: &CharNumbers, g: i64) -> Result<CharNumbers> {
    if g < 1 {
        return Err(Error::GenusOutOfRange(g));
    }
    let surface_euler = 2 - 2 * g;
    Ok(CharNumbers::from_e_sigma(
        x.e + y.e - 2 * surface_euler,
        x.sigma + y.sigma,
    ))
}
