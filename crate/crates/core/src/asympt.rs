//! Saddle-point parameters, closed-form asymptotic main terms, the internal
//! constant identities (Wright's constants against the general Meinardus
//! formulas), and comparison of predictions with exact counts.
//!
//! Main terms are carried in log-space: the exponents reach e^{Lambda n^{1/3}}
//! and a naive double overflows past n ~ 10^7.

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::series::ParityRow;
use crate::zeta::{riemann_zeta, SpecialConstants};

/// E = Gamma(3/2) zeta(3/2) / (4 sqrt 2); the growth exponent constant.
fn growth_constant() -> f64 {
    let c = SpecialConstants::get();
    c.gamma_3_2 * c.zeta_3_2 / (4.0 * std::f64::consts::SQRT_2)
}

/// B = Gamma(3/2) zeta(3/2) / (2 sqrt 2) = 2E.
pub fn saddle_b() -> f64 {
    2.0 * growth_constant()
}

/// Wright's exponent Lambda = 3 (Gamma(3/2) zeta(3/2) / 2)^{2/3} = 6 E^{2/3}.
pub fn wright_lambda() -> f64 {
    let c = SpecialConstants::get();
    3.0 * (c.gamma_3_2 * c.zeta_3_2 / 2.0).powf(2.0 / 3.0)
}

/// Wright's prefactor B_0 = Lambda / (2 (3 pi)^{3/2}).
pub fn wright_b0() -> f64 {
    wright_lambda() / (2.0 * (3.0 * std::f64::consts::PI).powf(1.5))
}

/// The explicit parity-class constant: E^{2/3} / (2 pi sqrt(3 pi)).
/// Coincides with B_0 / 2.
pub fn explicit_parity_prefactor() -> f64 {
    growth_constant().powf(2.0 / 3.0)
        / (2.0 * std::f64::consts::PI * (3.0 * std::f64::consts::PI).sqrt())
}

/// Saddle-point data at n: radius y, m = ny, and B with B = 2 n y^{3/2}.
#[derive(Debug, Clone, Copy)]
pub struct SaddleParams {
    pub n: u64,
    pub y: f64,
    pub m: f64,
    pub b: f64,
}

/// y = n^{-2/3} (sqrt(pi) zeta(3/2) / (8 sqrt 2))^{2/3} and friends.
pub fn saddle_params(n: u64) -> SaddleParams {
    let c = SpecialConstants::get();
    let base = std::f64::consts::PI.sqrt() * c.zeta_3_2 / (8.0 * std::f64::consts::SQRT_2);
    let y = (n as f64).powf(-2.0 / 3.0) * base.powf(2.0 / 3.0);
    SaddleParams {
        n,
        y,
        m: n as f64 * y,
        b: saddle_b(),
    }
}

/// log of the main term for a_2(n):
/// log B / 3 - log(3 pi)/2 - (5/6) log(2n) + 3 n^{1/3} E^{2/3}.
pub fn a2_main_log(n: u64) -> f64 {
    let b = saddle_b();
    let e23 = growth_constant().powf(2.0 / 3.0);
    b.ln() / 3.0 - 0.5 * (3.0 * std::f64::consts::PI).ln() - 5.0 / 6.0 * (2.0 * n as f64).ln()
        + 3.0 * (n as f64).cbrt() * e23
}

/// Main term for a_2(n) in its final closed form. Overflows to infinity
/// only past n ~ 10^7; use [`a2_main_log`] for ratios.
pub fn a2_main_term(n: u64) -> f64 {
    a2_main_log(n).exp()
}

/// The pre-Gauss-integral form of the same main term:
/// y/(2 sqrt 2 pi) e^{3 n^{1/3} E^{2/3}} * 2 sqrt 2 sqrt pi / (sqrt 3 (2n)^{1/6} B^{1/3}).
pub fn a2_main_term_integral_form(n: u64) -> f64 {
    let p = saddle_params(n);
    let e23 = growth_constant().powf(2.0 / 3.0);
    let gauss = 2.0 * std::f64::consts::SQRT_2 * std::f64::consts::PI.sqrt()
        / (3.0f64.sqrt() * (2.0 * n as f64).powf(1.0 / 6.0) * p.b.powf(1.0 / 3.0));
    p.y / (2.0 * std::f64::consts::SQRT_2 * std::f64::consts::PI)
        * (3.0 * (n as f64).cbrt() * e23).exp()
        * gauss
}

/// log of Wright's main term for p_2(n): log B_0 - (7/6) log n + Lambda n^{1/3}.
pub fn p2_main_log(n: u64) -> f64 {
    wright_b0().ln() - 7.0 / 6.0 * (n as f64).ln() + wright_lambda() * (n as f64).cbrt()
}

/// Main term for p_2(n).
pub fn p2_main_term(n: u64) -> f64 {
    p2_main_log(n).exp()
}

/// Main term for either parity class: half of [`p2_main_term`].
pub fn p2_parity_main_term(n: u64) -> f64 {
    0.5 * p2_main_term(n)
}

/// Inputs to the general Meinardus formulas: pole position alpha, residue A,
/// and the values D(0), D'(0) of the driving Dirichlet series.
#[derive(Debug, Clone, Copy)]
pub struct MeinardusData {
    pub alpha: f64,
    pub residue: f64,
    pub d0: f64,
    pub d0_prime: f64,
}

impl MeinardusData {
    /// Data for H_2: D(s) = zeta(2s), pole at 1/2 with residue 1/2,
    /// D(0) = zeta(0), D'(0) = 2 zeta'(0).
    pub fn for_h2() -> Self {
        MeinardusData {
            alpha: 0.5,
            residue: 0.5,
            d0: -0.5,
            d0_prime: -(2.0 * std::f64::consts::PI).ln(),
        }
    }

    /// Data for G: D(s) = (1 + 8^{-s} - 2^{1-2s}) zeta(2s), pole at 1/2 with
    /// residue 1/(4 sqrt 2), D(0) = 0, D'(0) = -log(2)/2.
    pub fn for_g() -> Self {
        MeinardusData {
            alpha: 0.5,
            residue: 1.0 / (4.0 * std::f64::consts::SQRT_2),
            d0: 0.0,
            d0_prime: -std::f64::consts::LN_2 / 2.0,
        }
    }
}

/// The constants of the Meinardus asymptotic r(n) ~ C n^kappa exp(coeff n^{alpha/(alpha+1)}).
#[derive(Debug, Clone, Copy)]
pub struct MeinardusConstants {
    pub c: f64,
    pub kappa: f64,
    pub exp_coeff: f64,
}

/// C = e^{D'(0)} (2 pi (1+alpha))^{-1/2} (A Gamma(alpha+1) zeta(alpha+1))^{(1-2D(0))/(2+2alpha)},
/// kappa = (D(0) - 1 - alpha/2) / (1 + alpha),
/// exp_coeff = (1 + 1/alpha) (A Gamma(alpha+1) zeta(alpha+1))^{1/(alpha+1)}.
pub fn meinardus_constants(data: MeinardusData) -> MeinardusConstants {
    let MeinardusData {
        alpha,
        residue,
        d0,
        d0_prime,
    } = data;
    let agz = residue * gamma(alpha + 1.0) * riemann_zeta(alpha + 1.0).expect("alpha > 0");
    MeinardusConstants {
        c: d0_prime.exp()
            * (2.0 * std::f64::consts::PI * (1.0 + alpha)).powf(-0.5)
            * agz.powf((1.0 - 2.0 * d0) / (2.0 + 2.0 * alpha)),
        kappa: (d0 - 1.0 - alpha / 2.0) / (1.0 + alpha),
        exp_coeff: (1.0 + 1.0 / alpha) * agz.powf(1.0 / (alpha + 1.0)),
    }
}

/// kappa_1 = alpha/(alpha+1) min{c0/alpha - delta/4, 1/2 - delta}. Reported
/// for completeness; the continuation constant c0 is a free choice here.
pub fn meinardus_kappa1(alpha: f64, c0: f64, delta: f64) -> f64 {
    alpha / (alpha + 1.0) * (c0 / alpha - delta / 4.0).min(0.5 - delta)
}

/// Gamma for positive arguments. Integer and half-integer inputs (the cases
/// the Dirichlet-series data actually produces) recurse exactly from
/// Gamma(1) or Gamma(1/2); anything else falls back to Lanczos.
fn gamma(x: f64) -> f64 {
    debug_assert!(x > 0.0);
    let doubled = 2.0 * x;
    if (doubled - doubled.round()).abs() < 1e-9 && doubled.round() >= 1.0 {
        let target = doubled.round() as i64;
        let (mut acc, mut k) = if target % 2 == 0 {
            (1.0, 2i64)
        } else {
            (std::f64::consts::PI.sqrt(), 1i64)
        };
        while k < target {
            acc *= k as f64 / 2.0;
            k += 2;
        }
        return acc;
    }
    lanczos_gamma(x)
}

fn lanczos_gamma(x: f64) -> f64 {
    const G: f64 = 7.0;
    const COEFFS: [f64; 9] = [
        0.999_999_999_999_809_9,
        676.520_368_121_885_1,
        -1_259.139_216_722_402_8,
        771.323_428_777_653_1,
        -176.615_029_162_140_6,
        12.507_343_278_686_905,
        -0.138_571_095_265_720_1,
        9.984_369_578_019_572e-6,
        1.505_632_735_149_312e-7,
    ];
    let z = x - 1.0;
    let mut series = COEFFS[0];
    for (i, &c) in COEFFS.iter().enumerate().skip(1) {
        series += c / (z + i as f64);
    }
    let t = z + G + 0.5;
    (2.0 * std::f64::consts::PI).sqrt() * t.powf(z + 0.5) * (-t).exp() * series
}

/// Residual |{-B/(2 sqrt(y scale))} + n y|: zero at the saddle (scale = 1),
/// and a sensitivity probe for perturbed scales.
pub fn taylor_cancellation_residual(n: u64, y_scale: f64) -> f64 {
    let p = saddle_params(n);
    (p.n as f64 * p.y - p.b / (2.0 * (p.y * y_scale).sqrt())).abs()
}

/// The linear-term cancellation at the saddle, |{-B/(2 sqrt y)} + n y|.
pub fn taylor_cancellation_check(n: u64) -> f64 {
    taylor_cancellation_residual(n, 1.0)
}

/// Per-n comparison of exact counts against the main terms.
#[derive(Debug, Clone)]
pub struct AsymptoticReport {
    pub n: u64,
    pub exact_a2: BigInt,
    pub a2_main: f64,
    pub exact_p2: BigUint,
    pub p2_main: f64,
    pub ratio_a2: f64,
    pub ratio_p2: f64,
}

/// Natural log of a positive big integer.
pub fn ln_big(v: &BigUint) -> f64 {
    assert!(!v.is_zero(), "log of zero");
    let bits = v.bits();
    if bits <= 52 {
        use num_traits::ToPrimitive;
        return v.to_f64().expect("small").ln();
    }
    let shift = bits - 52;
    let top = v >> shift;
    use num_traits::ToPrimitive;
    top.to_f64().expect("52 bits").ln() + shift as f64 * std::f64::consts::LN_2
}

/// Builds one report per grid point from a precomputed parity table.
pub fn error_report(rows: &[ParityRow], grid: &[u64]) -> Result<Vec<AsymptoticReport>> {
    let table_max = rows.len() as u64 - 1;
    let mut reports = Vec::with_capacity(grid.len());
    for &n in grid {
        if n > table_max {
            return Err(Error::GridBeyondTable { n, table_max });
        }
        let row = &rows[n as usize];
        let exact_p2 = row.even_count.clone() + row.odd_count.clone();
        let ratio_a2 = match row.a2.sign() {
            Sign::NoSign => 0.0,
            sign => {
                let magnitude = row.a2.magnitude();
                let r = (ln_big(magnitude) - a2_main_log(n)).exp();
                if sign == Sign::Minus {
                    -r
                } else {
                    r
                }
            }
        };
        let ratio_p2 = (ln_big(&exact_p2) - p2_main_log(n)).exp();
        reports.push(AsymptoticReport {
            n,
            exact_a2: row.a2.clone(),
            a2_main: a2_main_term(n),
            exact_p2,
            p2_main: p2_main_term(n),
            ratio_a2,
            ratio_p2,
        });
    }
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::count_by_parity;

    #[test]
    fn saddle_identity() {
        for n in [1u64, 1_000, 1_000_000] {
            let p = saddle_params(n);
            let check = 2.0 * n as f64 * p.y.powf(1.5);
            assert!(
                (p.b - check).abs() < 1e-12 * p.b,
                "n = {n}: B = {} vs 2ny^{{3/2}} = {check}",
                p.b
            );
            let m_expected = (n as f64).cbrt() * growth_constant().powf(2.0 / 3.0);
            assert!((p.m - m_expected).abs() < 1e-12 * m_expected);
        }
        let p1 = saddle_params(1);
        assert!((p1.y - 0.551_235_297_266_109).abs() < 1e-12);
        assert!((p1.b - 0.818_531_739_120_508).abs() < 1e-12);
        let p1000 = saddle_params(1000);
        assert!((p1000.y - 0.551_235_297_266_109e-2).abs() < 1e-14);
    }

    #[test]
    fn main_term_forms_agree() {
        for n in [100u64, 10_000] {
            let final_form = a2_main_term(n);
            let integral_form = a2_main_term_integral_form(n);
            assert!(
                (final_form - integral_form).abs() < 1e-12 * final_form,
                "n = {n}"
            );
        }
        assert!((a2_main_term(1000) - 8_221.884_715_214_3).abs() < 1e-6);
    }

    #[test]
    fn wright_constants() {
        let lambda = wright_lambda();
        assert!((lambda - 3.307_411_783_596_652).abs() < 1e-12);
        let e23 = growth_constant().powf(2.0 / 3.0);
        assert!((lambda - 6.0 * e23).abs() < 1e-12);
        assert!((wright_b0() - 0.057_154_651_709_542_586).abs() < 1e-14);
        assert!((explicit_parity_prefactor() - wright_b0() / 2.0).abs() < 1e-12 * wright_b0());
    }

    #[test]
    fn meinardus_recovers_wright() {
        let c = meinardus_constants(MeinardusData::for_h2());
        assert!((c.c - wright_b0()).abs() < 1e-10);
        assert!((c.kappa - (-7.0 / 6.0)).abs() < 1e-14);
        assert!((c.exp_coeff - wright_lambda()).abs() < 1e-10);
    }

    #[test]
    fn meinardus_recovers_a2_main_term() {
        let c = meinardus_constants(MeinardusData::for_g());
        let prefactor = saddle_b().powf(1.0 / 3.0)
            / ((3.0 * std::f64::consts::PI).sqrt() * 2.0f64.powf(5.0 / 6.0));
        assert!((c.c - prefactor).abs() < 1e-10);
        assert!((c.kappa - (-5.0 / 6.0)).abs() < 1e-14);
        let e23 = growth_constant().powf(2.0 / 3.0);
        assert!((c.exp_coeff - 3.0 * e23).abs() < 1e-10);
    }

    #[test]
    fn meinardus_simple_instance() {
        let c = meinardus_constants(MeinardusData {
            alpha: 1.0,
            residue: 1.0,
            d0: 0.0,
            d0_prime: 0.0,
        });
        assert!((c.kappa - (-0.75)).abs() < 1e-14);
        let expected = 2.0 * (std::f64::consts::PI.powi(2) / 6.0).sqrt();
        assert!((c.exp_coeff - expected).abs() < 1e-12);
    }

    #[test]
    fn cancellation_at_the_saddle() {
        for n in [1u64, 1_000_000] {
            let p = saddle_params(n);
            let residual = taylor_cancellation_check(n);
            assert!(residual < 1e-10 * p.n as f64 * p.y, "n = {n}: {residual}");
        }
        // Perturbing y inside the square root breaks cancellation by ~5e-4 ny.
        let n = 1000u64;
        let p = saddle_params(n);
        let residual = taylor_cancellation_residual(n, 1.001);
        let relative = residual / (n as f64 * p.y);
        assert!((4e-4..6e-4).contains(&relative), "relative = {relative}");
    }

    #[test]
    fn ln_big_matches_f64() {
        use num_traits::One;
        let v = BigUint::from(12_345_678_901_234_567_890u64);
        assert!((ln_big(&v) - 12_345_678_901_234_567_890f64.ln()).abs() < 1e-12);
        let big = BigUint::one() << 400;
        assert!((ln_big(&big) - 400.0 * std::f64::consts::LN_2).abs() < 1e-9);
    }

    #[test]
    fn report_on_small_table() {
        let rows = count_by_parity(1200);
        let reports = error_report(&rows, &[1000, 1100]).unwrap();
        assert_eq!(reports.len(), 2);
        let r = &reports[0];
        assert_eq!(r.exact_a2, BigInt::from(9323));
        assert!((r.ratio_a2 - 1.133_924_9).abs() < 1e-4);
        assert!(r.ratio_p2 > 0.0);
        assert!(error_report(&rows, &[5000]).is_err());
    }
}
