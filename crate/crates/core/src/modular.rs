//! Numerical verification of Wright's modular transformation for H_2, the
//! factorization G = H(q) H(q^8) / H(q^4)^2, and the small-tau expansion of
//! log G. All square roots and logarithms take the principal branch.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::gauss::ReducedFraction;
use crate::lambda;
use crate::series::{g_coefficients, CoefficientSeries};
use crate::zeta::SpecialConstants;

/// Default cap on the correction-product truncation index.
pub const P_PRODUCT_CAP: u64 = 10_000;

/// Factors below this magnitude are dropped from the correction product.
const P_PRODUCT_TOL: f64 = 1e-16;

/// A point tau = y - 2 pi i x with y > 0, so q = e^{-tau} lies in the disk.
#[derive(Debug, Clone, Copy)]
pub struct TauPoint {
    pub y: f64,
    pub x: f64,
}

impl TauPoint {
    pub fn new(y: f64, x: f64) -> Result<Self> {
        if !(y > 0.0) {
            return Err(Error::NonpositiveY { y });
        }
        Ok(TauPoint { y, x })
    }

    /// The point with q = modulus * e^{i phase}.
    pub fn from_q_polar(modulus: f64, phase: f64) -> Result<Self> {
        if !(modulus > 0.0 && modulus < 1.0) {
            return Err(Error::OutsideUnitDisk { modulus });
        }
        TauPoint::new(-modulus.ln(), phase / (2.0 * std::f64::consts::PI))
    }

    pub fn tau(&self) -> Complex64 {
        Complex64::new(self.y, -2.0 * std::f64::consts::PI * self.x)
    }

    pub fn q(&self) -> Complex64 {
        (-self.tau()).exp()
    }
}

/// Least positive b1 with b | b1^2, via the prime factorization of b.
pub fn least_b1(b: u64) -> u64 {
    debug_assert!(b >= 1);
    let mut rem = b;
    let mut b1 = 1u64;
    let mut p = 2u64;
    while p * p <= rem {
        if rem.is_multiple_of(p) {
            let mut exp = 0u32;
            while rem.is_multiple_of(p) {
                rem /= p;
                exp += 1;
            }
            b1 *= p.pow(exp.div_ceil(2));
        }
        p += 1;
    }
    if rem > 1 {
        b1 *= rem;
    }
    b1
}

/// The residue d_h in a h^2 = d_h (mod b).
pub fn d_h_residue(frac: ReducedFraction, h: u64) -> u64 {
    let b = frac.denominator() as u128;
    (frac.numerator() as u128 * (h as u128 % b) * (h as u128 % b) % b) as u64
}

/// Ingredients of the right-hand side of Wright's transformation at a/b.
#[derive(Debug, Clone, Copy)]
pub struct WrightFactors {
    pub frac: ReducedFraction,
    pub b1: u64,
    /// C_b = b1 / (2 pi).
    pub c_b: f64,
    /// Lambda_{a,b} = Gamma(3/2) Lambda*_{a,b}.
    pub lambda: Complex64,
    /// The truncated correction product P_{a,b}(tau').
    pub p_value: Complex64,
}

/// The triple product P_{a,b}(tau') = prod_{h,s,l} (1 - g(h,l,s))^{-1},
/// truncated adaptively: each (h, s) strand stops once |g| < 1e-16, and
/// `l_cap` bounds the strand length. |g| >= 1 for a retained factor is a
/// refusal (the regime does not converge).
pub fn p_product(frac: ReducedFraction, tau_prime: Complex64, l_cap: u64) -> Result<Complex64> {
    if !(tau_prime.re > 0.0) {
        return Err(Error::NonpositiveRealPart { re: tau_prime.re });
    }
    let b = frac.denominator();
    let sqrt_tp = tau_prime.sqrt();
    debug_assert!(sqrt_tp.re > 0.0, "principal branch");
    let scale = (2.0 * std::f64::consts::PI).powf(1.5) / (b as f64 * sqrt_tp);
    let mut log_p = Complex64::new(0.0, 0.0);
    for h in 1..=b {
        let dh = d_h_residue(frac, h);
        let rotation =
            Complex64::from_polar(1.0, -2.0 * std::f64::consts::PI * h as f64 / b as f64);
        for s in 1u8..=2 {
            let mu = if dh == 0 {
                1.0
            } else if s == 1 {
                dh as f64 / b as f64
            } else {
                (b - dh) as f64 / b as f64
            };
            let direction = Complex64::from_polar(
                1.0,
                std::f64::consts::PI * (2.0 * s as f64 + 1.0) / 4.0,
            );
            let mut l = 0u64;
            loop {
                let g = (scale * direction * (l as f64 + mu).sqrt()).exp() * rotation;
                let mag = g.norm();
                if mag >= 1.0 {
                    return Err(Error::DivergentFactor {
                        h,
                        l,
                        s,
                        magnitude: mag,
                    });
                }
                log_p -= (Complex64::new(1.0, 0.0) - g).ln();
                if mag < P_PRODUCT_TOL {
                    break;
                }
                l += 1;
                if l > l_cap {
                    return Err(Error::ProductCap { h, s, cap: l_cap });
                }
            }
        }
    }
    Ok(log_p.exp())
}

/// Smallest product length N with |q|^{N^2} below 1e-18.
pub fn h2_order_for(q: Complex64) -> usize {
    let r = q.norm();
    if r == 0.0 {
        return 1;
    }
    let n = ((1e-18f64.ln() / r.ln()).sqrt().ceil()) as usize;
    n.max(1) + 1
}

/// H_2 as the finite product prod_{n<=n_factors} (1 - q^{n^2})^{-1}.
pub fn h2_truncated(q: Complex64, n_factors: usize) -> Result<Complex64> {
    if q.norm() >= 1.0 {
        return Err(Error::OutsideUnitDisk { modulus: q.norm() });
    }
    let mut value = Complex64::new(1.0, 0.0);
    for n in 1..=n_factors {
        value /= Complex64::new(1.0, 0.0) - cpow(q, (n * n) as u64);
    }
    Ok(value)
}

/// H_2 with the product length chosen automatically from |q|.
pub fn h2_auto(q: Complex64) -> Result<Complex64> {
    h2_truncated(q, h2_order_for(q))
}

/// H_2 through the coefficient route: sum of p_2(n) q^n over the series.
pub fn h2_series_eval(q: Complex64, series: &CoefficientSeries) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for n in (0..=series.truncation_order()).rev() {
        let c = bigint_to_f64(series.coeff(n));
        acc = acc * q + c;
    }
    acc
}

fn bigint_to_f64(v: &num_bigint::BigInt) -> f64 {
    use num_traits::ToPrimitive;
    v.to_f64().expect("finite conversion")
}

/// q^k by polar decomposition; exact magnitude handling for |q| < 1.
fn cpow(q: Complex64, k: u64) -> Complex64 {
    let (r, theta) = q.to_polar();
    Complex64::from_polar(r.powi(k as i32), theta * k as f64)
}

/// Assembles the right-hand side factors of Wright's transformation.
pub fn wright_factors(frac: ReducedFraction, tau_prime: Complex64) -> Result<WrightFactors> {
    let b1 = least_b1(frac.denominator());
    let lambda = lambda::lambda_big_star(frac) * SpecialConstants::get().gamma_3_2;
    let p_value = p_product(frac, tau_prime, P_PRODUCT_CAP)?;
    Ok(WrightFactors {
        frac,
        b1,
        c_b: b1 as f64 / (2.0 * std::f64::consts::PI),
        lambda,
        p_value,
    })
}

/// Relative error between H_2(e^{2 pi i a/b - tau'}) and
/// C_b sqrt(tau') exp(Lambda_{a,b}/sqrt(tau')) P_{a,b}(tau').
pub fn verify_wright_transform(frac: ReducedFraction, tau_prime: Complex64) -> Result<f64> {
    if !(tau_prime.re > 0.0) {
        return Err(Error::NonpositiveRealPart { re: tau_prime.re });
    }
    let (a, b) = (frac.numerator(), frac.denominator());
    let exponent = Complex64::new(
        0.0,
        2.0 * std::f64::consts::PI * a as f64 / b as f64,
    ) - tau_prime;
    let q = exponent.exp();
    let lhs = h2_auto(q)?;
    let factors = wright_factors(frac, tau_prime)?;
    let sqrt_tp = tau_prime.sqrt();
    let rhs = factors.c_b * sqrt_tp * (factors.lambda / sqrt_tp).exp() * factors.p_value;
    Ok((lhs - rhs).norm() / lhs.norm())
}

/// Relative error between the coefficient evaluation of G and the
/// eta-quotient route H(q) H(q^8) / H(q^4)^2.
pub fn verify_g_factorization(tau: TauPoint) -> Result<f64> {
    if tau.y < 0.05 {
        return Err(Error::RadiusTooSmall {
            y: tau.y,
            min: 0.05,
        });
    }
    let q = tau.q();
    let series = g_coefficients(200);
    let lhs = h2_series_eval(q, &series);
    let rhs = h2_auto(q)? * h2_auto(cpow(q, 8))? / h2_auto(cpow(q, 4))?.powi(2);
    Ok((lhs - rhs).norm() / lhs.norm())
}

/// Log G(e^{-tau}) as a convergent sum of principal logarithms.
pub fn log_g_product(tau: Complex64) -> Result<Complex64> {
    let q = (-tau).exp();
    let r = q.norm();
    if r >= 1.0 {
        return Err(Error::OutsideUnitDisk { modulus: r });
    }
    let one = Complex64::new(1.0, 0.0);
    let mut acc = Complex64::new(0.0, 0.0);
    let mut n = 1u64;
    while r.powi((n * n) as i32) > 1e-25 {
        acc -= (one - cpow(q, n * n)).ln();
        acc += 2.0 * (one - cpow(q, 4 * n * n)).ln();
        acc -= (one - cpow(q, 8 * n * n)).ln();
        n += 1;
    }
    Ok(acc)
}

/// Residual |log G(e^{-tau}) - (sqrt(pi) zeta(3/2) / (4 sqrt 2 sqrt tau) - log 2 / 2)|.
/// Shrinks toward zero as y -> 0 inside the wedge |Arg tau| <= pi/4.
pub fn verify_small_tau_expansion(tau_point: TauPoint) -> Result<f64> {
    let tau = tau_point.tau();
    if tau.arg().abs() > std::f64::consts::FRAC_PI_4 + 1e-15 {
        return Err(Error::OutsideWedge {
            re: tau.re,
            im: tau.im,
        });
    }
    let c = SpecialConstants::get();
    let main = c.zeta_3_2 * std::f64::consts::PI.sqrt()
        / (4.0 * std::f64::consts::SQRT_2 * tau.sqrt())
        - std::f64::consts::LN_2 / 2.0;
    Ok((log_g_product(tau)? - main).norm())
}
