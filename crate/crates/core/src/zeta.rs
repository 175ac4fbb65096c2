//! Double-precision evaluation of the Riemann and Hurwitz zeta functions,
//! the Dirichlet series D(s) = (1 + 8^{-s} - 2^{1-2s}) zeta(2s), and the
//! handful of constants the rest of the crate leans on.
//!
//! Everything here is Euler-Maclaurin with a fixed number of explicit terms
//! and Bernoulli corrections through B_12. With 50 explicit terms the first
//! dropped correction is below 1e-20 throughout the ranges used, so scheme
//! error never competes with f64 rounding.

use once_cell::sync::Lazy;

use crate::error::{Error, Result};

/// Number of explicit terms before the Euler-Maclaurin tail kicks in.
const EM_TERMS: usize = 50;

/// B_{2j} / (2j)! for j = 1..=6.
const BERNOULLI_OVER_FACTORIAL: [f64; 6] = [
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30_240.0,
    -1.0 / 1_209_600.0,
    1.0 / 47_900_160.0,
    -691.0 / 1_307_674_368_000.0,
];

/// Hurwitz zeta via Euler-Maclaurin, no domain checks.
fn hurwitz_zeta_unchecked(s: f64, q: f64) -> f64 {
    let mut sum = 0.0;
    for n in 0..EM_TERMS {
        sum += (q + n as f64).powf(-s);
    }
    let x = q + EM_TERMS as f64;
    sum += x.powf(1.0 - s) / (s - 1.0);
    sum += 0.5 * x.powf(-s);
    // Correction terms B_{2j}/(2j)! * s(s+1)...(s+2j-2) * x^{1-s-2j}.
    let mut rising = s;
    let mut power = x.powf(-s - 1.0);
    let inv_x2 = 1.0 / (x * x);
    for (j, coeff) in BERNOULLI_OVER_FACTORIAL.iter().enumerate() {
        sum += coeff * rising * power;
        let k = 2.0 * (j + 1) as f64;
        rising *= (s + k - 1.0) * (s + k);
        power *= inv_x2;
    }
    sum
}

/// Riemann zeta for real s > 1.
pub fn riemann_zeta(s: f64) -> Result<f64> {
    if !(s > 1.0) {
        return Err(Error::ZetaDomain { s });
    }
    Ok(hurwitz_zeta_unchecked(s, 1.0))
}

/// Hurwitz zeta `zeta(s, q) = sum_{n>=0} (q + n)^{-s}` for s > 1 and 0 < q <= 1.
pub fn hurwitz_zeta(s: f64, q: f64) -> Result<f64> {
    if !(s > 1.0) {
        return Err(Error::ZetaDomain { s });
    }
    if !(q > 0.0 && q <= 1.0) {
        return Err(Error::HurwitzShiftDomain { q });
    }
    Ok(hurwitz_zeta_unchecked(s, q))
}

/// The prefactor 1 + 8^{-s} - 2^{1-2s} of D(s).
fn dirichlet_prefactor(s: f64) -> f64 {
    1.0 + (8.0f64).powf(-s) - (2.0f64).powf(1.0 - 2.0 * s)
}

/// D(s) = (1 + 8^{-s} - 2^{1-2s}) zeta(2s), valid for s > 1/2.
pub fn dirichlet_d(s: f64) -> Result<f64> {
    if s == 0.5 {
        return Err(Error::DirichletPole);
    }
    if s < 0.5 {
        return Err(Error::DirichletDomain { s });
    }
    Ok(dirichlet_prefactor(s) * hurwitz_zeta_unchecked(2.0 * s, 1.0))
}

/// Probe of the simple pole of D at s = 1/2.
#[derive(Debug, Clone)]
pub struct ResidueProbe {
    /// Offsets s - 1/2 at which (s - 1/2) D(s) was sampled.
    pub offsets: [f64; 3],
    /// The sampled values of (s - 1/2) D(s).
    pub values: [f64; 3],
    /// Richardson extrapolate from the two smallest offsets.
    pub extrapolated: f64,
}

/// Samples (s - 1/2) D(s) at s - 1/2 in {1e-3, 1e-4, 1e-5} and extrapolates
/// to the residue. The extrapolate lands within ~1e-8 of 1/(4 sqrt 2).
pub fn dirichlet_residue_probe() -> ResidueProbe {
    let offsets = [1e-3, 1e-4, 1e-5];
    let values = offsets.map(|h| {
        let s = 0.5 + h;
        h * dirichlet_prefactor(s) * hurwitz_zeta_unchecked(2.0 * s, 1.0)
    });
    // (s-1/2) D(s) = A + B (s-1/2) + O((s-1/2)^2); offsets shrink by 10x.
    let extrapolated = (10.0 * values[2] - values[1]) / 9.0;
    ResidueProbe {
        offsets,
        values,
        extrapolated,
    }
}

/// D(0) and D'(0) through the factor form.
///
/// At s = 0 the prefactor is 1 + 1 - 2 = 0, so D(0) = 0 and
/// D'(0) = phi'(0) zeta(0) with phi'(0) = -3 log 2 + 4 log 2.
pub fn dirichlet_d_at_zero() -> (f64, f64) {
    let ln2 = std::f64::consts::LN_2;
    let prefactor_at_zero = dirichlet_prefactor(0.0);
    let prefactor_derivative = -3.0 * ln2 + 4.0 * ln2;
    let zeta_zero = -0.5;
    (prefactor_at_zero * zeta_zero, prefactor_derivative * zeta_zero)
}

/// Euler-Mascheroni constant from H_M - log M with Euler-Maclaurin corrections.
pub fn euler_gamma() -> f64 {
    const M: usize = 100;
    let mut harmonic = 0.0;
    for n in 1..=M {
        harmonic += 1.0 / n as f64;
    }
    let m = M as f64;
    harmonic - m.ln() - 0.5 / m + 1.0 / (12.0 * m * m) - 1.0 / (120.0 * m.powi(4))
        + 1.0 / (252.0 * m.powi(6))
}

/// Constants shared across the crate, computed once from the schemes above.
#[derive(Debug, Clone)]
pub struct SpecialConstants {
    /// zeta(3/2).
    pub zeta_3_2: f64,
    /// Gamma(3/2) = sqrt(pi) / 2.
    pub gamma_3_2: f64,
    /// Euler-Mascheroni constant.
    pub euler_gamma: f64,
    /// zeta(3/2) / (1.14 * 2 sqrt 2), the ceiling for max{|Re l*|, |Im l*|}.
    pub bound_constant: f64,
}

static CONSTANTS: Lazy<SpecialConstants> = Lazy::new(|| {
    let zeta_3_2 = hurwitz_zeta_unchecked(1.5, 1.0);
    SpecialConstants {
        zeta_3_2,
        gamma_3_2: std::f64::consts::PI.sqrt() / 2.0,
        euler_gamma: euler_gamma(),
        bound_constant: zeta_3_2 / (1.14 * 2.0 * std::f64::consts::SQRT_2),
    }
});

impl SpecialConstants {
    pub fn get() -> &'static SpecialConstants {
        &CONSTANTS
    }
}
