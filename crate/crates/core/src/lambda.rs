//! The singular series Lambda*_{a,b} and its three-term combination
//! lambda*_{a,b}, the exhaustive bound scan, the divisor-sum inequality,
//! the per-case analytic envelopes, and the profile function f(t).
//!
//! The engine evaluates Lambda* through the divisor-sum rewrite
//!
//!   Lambda*_{a,b} = b^{-3/2} sum_{d|b} (1/d) sum_{(l,d)=1} S_{la mod d, d} zeta(3/2, l/d),
//!
//! valid because S_{ma,d} depends only on ma mod d. This single code path
//! replaces the four case-wise Hurwitz rewrites, which survive here as
//! independent cross-checks (see `lambda_case2_closed` and the tests).

use num_complex::Complex64;
use num_integer::Integer;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gauss::{epsilon_factor, gauss_sum_closed, gauss_sum_direct, jacobi_symbol, ReducedFraction};
use crate::zeta::{hurwitz_zeta, SpecialConstants};

/// Lambda* and lambda* at one rational point.
#[derive(Debug, Clone, Copy)]
pub struct LambdaValue {
    pub frac: ReducedFraction,
    /// Lambda*_{a,b} = Lambda_{a,b} / Gamma(3/2).
    pub big_star: Complex64,
    /// lambda*_{a,b} = lambda_{a,b} / Gamma(3/2).
    pub small_star: Complex64,
}

/// Per-denominator table: closed Gauss sums by residue and Hurwitz zeta
/// values on the coprime residues.
struct DenominatorTable {
    /// S_{r,d} for r coprime to d (zero elsewhere, and for d = 2 mod 4).
    gauss_by_residue: Vec<Complex64>,
    /// (l, zeta(3/2, l/d)) over coprime residues l.
    zeta_by_residue: Vec<(u64, f64)>,
}

struct LambdaTables {
    tables: Vec<Option<DenominatorTable>>,
}

impl LambdaTables {
    /// Tables for every d <= d_max. Denominators = 2 (mod 4) contribute
    /// nothing (their Gauss sums vanish on coprime residues) and are skipped.
    fn build(d_max: u64) -> Self {
        let tables: Vec<Option<DenominatorTable>> = (0..=d_max)
            .into_par_iter()
            .map(|d| {
                if d == 0 || d % 4 == 2 {
                    return None;
                }
                let mut gauss_by_residue = vec![Complex64::new(0.0, 0.0); d as usize];
                let mut zeta_by_residue = Vec::new();
                if d == 1 {
                    gauss_by_residue[0] = Complex64::new(1.0, 0.0);
                    zeta_by_residue.push((1, hurwitz_zeta(1.5, 1.0).expect("in domain")));
                } else {
                    for r in 1..d {
                        if r.gcd(&d) == 1 {
                            gauss_by_residue[r as usize] =
                                gauss_sum_closed(ReducedFraction::new(r, d).expect("coprime"));
                        }
                    }
                    for l in 1..=d {
                        if l.gcd(&d) == 1 {
                            let z = hurwitz_zeta(1.5, l as f64 / d as f64).expect("in domain");
                            zeta_by_residue.push((l, z));
                        }
                    }
                }
                Some(DenominatorTable {
                    gauss_by_residue,
                    zeta_by_residue,
                })
            })
            .collect();
        LambdaTables { tables }
    }

    /// sum over l coprime to d of S_{la mod d, d} zeta(3/2, l/d), divided by d.
    fn divisor_term(&self, a: u64, d: u64) -> Complex64 {
        match &self.tables[d as usize] {
            None => Complex64::new(0.0, 0.0),
            Some(table) => {
                let mut acc = Complex64::new(0.0, 0.0);
                for &(l, z) in &table.zeta_by_residue {
                    let r = (l as u128 * a as u128 % d as u128) as usize;
                    acc += table.gauss_by_residue[r] * z;
                }
                acc / d as f64
            }
        }
    }

    fn big_star(&self, frac: ReducedFraction) -> Complex64 {
        let (a, b) = (frac.numerator(), frac.denominator());
        let mut acc = Complex64::new(0.0, 0.0);
        for d in 1..=b {
            if b % d == 0 {
                acc += self.divisor_term(a, d);
            }
        }
        acc / (b as f64).powf(1.5)
    }

    fn small_star(&self, frac: ReducedFraction) -> Complex64 {
        let (a, b) = (frac.numerator(), frac.denominator());
        let g8 = b.gcd(&8);
        let g4 = b.gcd(&4);
        let part8 = ReducedFraction::reduce(8 * a / g8, b / g8);
        let part4 = ReducedFraction::reduce(4 * a / g4, b / g4);
        self.big_star(frac) + self.big_star(part8) / (2.0 * std::f64::consts::SQRT_2)
            - self.big_star(part4)
    }
}

/// Reusable evaluator: precomputes the per-denominator tables once and
/// serves any fraction with denominator <= b_max. Use this for batch scans;
/// the free functions below rebuild tables per call.
pub struct LambdaScanner {
    tables: LambdaTables,
    b_max: u64,
}

impl LambdaScanner {
    pub fn new(b_max: u64) -> Self {
        LambdaScanner {
            tables: LambdaTables::build(b_max),
            b_max,
        }
    }

    pub fn big_star(&self, frac: ReducedFraction) -> Complex64 {
        assert!(frac.denominator() <= self.b_max, "denominator beyond table");
        self.tables.big_star(frac)
    }

    pub fn small_star(&self, frac: ReducedFraction) -> Complex64 {
        assert!(frac.denominator() <= self.b_max, "denominator beyond table");
        self.tables.small_star(frac)
    }
}

/// Lambda*_{a,b} by the divisor-sum rewrite with closed Gauss sums.
pub fn lambda_big_star(frac: ReducedFraction) -> Complex64 {
    LambdaTables::build(frac.denominator()).big_star(frac)
}

/// lambda*_{a,b} = Lambda*_{a,b} + Lambda*_{8a/(b,8), b/(b,8)} / (2 sqrt 2)
///               - Lambda*_{4a/(b,4), b/(b,4)}, indices reduced mod 1.
pub fn lambda_small_star(frac: ReducedFraction) -> Complex64 {
    LambdaTables::build(frac.denominator()).small_star(frac)
}

/// Both starred values at once.
pub fn lambda_value(frac: ReducedFraction) -> LambdaValue {
    let tables = LambdaTables::build(frac.denominator());
    LambdaValue {
        frac,
        big_star: tables.big_star(frac),
        small_star: tables.small_star(frac),
    }
}

/// Truncated direct series (1/b) sum_{m<=M} S_{ma,b} m^{-3/2} with S by
/// direct summation. Independent of the closed-form path; tail bounded by
/// 2 sqrt(b) / sqrt(M).
pub fn lambda_series_oracle(frac: ReducedFraction, m_terms: u64) -> Complex64 {
    let (a, b) = (frac.numerator(), frac.denominator());
    // S_{ma,b} has period b in m; tabulate one period by direct summation.
    let period: Vec<Complex64> = (0..b)
        .map(|r| gauss_sum_direct((r as u128 * a as u128 % b as u128) as i64, b))
        .collect();
    let mut sum_re = Neumaier::default();
    let mut sum_im = Neumaier::default();
    for m in 1..=m_terms {
        let s = period[(m % b) as usize];
        let mf = m as f64;
        let w = 1.0 / (mf * mf.sqrt());
        sum_re.add(s.re * w);
        sum_im.add(s.im * w);
    }
    Complex64::new(sum_re.value(), sum_im.value()) / b as f64
}

/// Documented tail bound for [`lambda_series_oracle`].
pub fn oracle_tail_bound(b: u64, m_terms: u64) -> f64 {
    2.0 * (b as f64).sqrt() / (m_terms as f64).sqrt()
}

#[derive(Default)]
struct Neumaier {
    sum: f64,
    compensation: f64,
}

impl Neumaier {
    fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.compensation += (self.sum - t) + x;
        } else {
            self.compensation += (x - t) + self.sum;
        }
        self.sum = t;
    }

    fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

/// Maximum of max{|Re lambda*|, |Im lambda*|} for one denominator.
#[derive(Debug, Clone, Copy)]
pub struct PerDenominatorMax {
    pub b: u64,
    pub max_value: f64,
    pub argmax_a: u64,
}

/// Outcome of the exhaustive scan over coprime pairs with 2 <= b <= b_max.
#[derive(Debug, Clone)]
pub struct ScanReport {
    pub b_max: u64,
    /// Largest observed max{|Re lambda*|, |Im lambda*|}.
    pub max_value: f64,
    pub argmax: ReducedFraction,
    /// The analytic ceiling zeta(3/2) / (1.14 * 2 sqrt 2).
    pub bound: f64,
    pub per_b: Vec<PerDenominatorMax>,
    /// Whether max_value < bound. A violation is reported, never swallowed.
    pub within_bound: bool,
}

/// Exhaustive check of the lambda* ceiling over all coprime (a, b),
/// 2 <= b <= b_max. Deterministic: per-b maxima take the smallest attaining
/// a, the global maximum the smallest attaining (b, a).
pub fn verify_lemma_bound(b_max: u64) -> ScanReport {
    assert!(b_max >= 2, "scan needs b_max >= 2");
    let scanner = LambdaScanner::new(b_max);
    let per_b: Vec<PerDenominatorMax> = (2..=b_max)
        .into_par_iter()
        .map(|b| {
            let mut best = (0.0f64, 0u64);
            for a in 1..b {
                if a.gcd(&b) != 1 {
                    continue;
                }
                let frac = ReducedFraction::new(a, b).expect("coprime");
                let v = scanner.small_star(frac);
                let m = v.re.abs().max(v.im.abs());
                if m > best.0 {
                    best = (m, a);
                }
            }
            PerDenominatorMax {
                b,
                max_value: best.0,
                argmax_a: best.1,
            }
        })
        .collect();
    let mut max_value = 0.0f64;
    let mut argmax = ReducedFraction::new(1, 2).expect("valid");
    for row in &per_b {
        if row.max_value > max_value {
            max_value = row.max_value;
            argmax = ReducedFraction::new(row.argmax_a, row.b).expect("coprime");
        }
    }
    let bound = SpecialConstants::get().bound_constant;
    ScanReport {
        b_max,
        max_value,
        argmax,
        bound,
        per_b,
        within_bound: max_value < bound,
    }
}

/// Exact divisor sum sum_{d | beta, d = residue (mod modulus)} 1/d together
/// with its analytic bound
/// 1/residue + (log(beta/modulus) + gamma + 1/(2 beta/modulus + 1/3)) / modulus.
pub fn divisor_sum_bound(beta: u64, modulus: u64, residue: u64) -> Result<(f64, f64)> {
    if modulus == 0 || residue == 0 || beta < modulus {
        return Err(Error::DivisorBoundDomain {
            beta,
            modulus,
            residue,
        });
    }
    let mut exact = 0.0f64;
    let mut d = 1u64;
    while d * d <= beta {
        if beta.is_multiple_of(d) {
            let other = beta / d;
            if d % modulus == residue % modulus {
                exact += 1.0 / d as f64;
            }
            if other != d && other % modulus == residue % modulus {
                exact += 1.0 / other as f64;
            }
        }
        d += 1;
    }
    let x = beta as f64 / modulus as f64;
    let bound = 1.0 / residue as f64 + harmonic_bound(x) / modulus as f64;
    Ok((exact, bound))
}

/// log x + gamma + 1 / (2x + 1/3), the harmonic-sum majorant.
fn harmonic_bound(x: f64) -> f64 {
    x.ln() + SpecialConstants::get().euler_gamma + 1.0 / (2.0 * x + 1.0 / 3.0)
}

/// The congruence class of b that selects the analytic envelope.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnvelopeCase {
    /// b odd.
    Odd,
    /// b = 2 (mod 4).
    TwiceOdd,
    /// b = 4 (mod 8).
    FourTimesOdd,
    /// 8 | b.
    EightDivides,
}

impl EnvelopeCase {
    pub fn of(b: u64) -> Self {
        if b % 2 == 1 {
            EnvelopeCase::Odd
        } else if b % 4 == 2 {
            EnvelopeCase::TwiceOdd
        } else if b % 8 == 4 {
            EnvelopeCase::FourTimesOdd
        } else {
            EnvelopeCase::EightDivides
        }
    }
}

/// The decreasing analytic majorant of max{|Re lambda*|, |Im lambda*|} for
/// the given case, evaluated at b. Each formula composes [`harmonic_bound`]
/// pieces exactly as the per-case divisor-sum estimates do, with the worst
/// admissible residue class (the crossing thresholds are near b = 124, 390
/// and 527 for the even cases).
pub fn case_envelope_for(case: EnvelopeCase, b: u64) -> f64 {
    let z = SpecialConstants::get().zeta_3_2;
    let b = b as f64;
    let sqrt2 = std::f64::consts::SQRT_2;
    match case {
        EnvelopeCase::Odd => {
            z / (2.0 * sqrt2 * b.sqrt()) * (1.0 + harmonic_bound(b / 4.0) / 4.0)
        }
        EnvelopeCase::TwiceOdd => {
            let h = harmonic_bound(b / 16.0) / 8.0;
            z / b.sqrt() * ((sqrt2 - 1.0) * (0.2 + h) + (sqrt2 + 1.0) * (1.0 + h))
        }
        EnvelopeCase::FourTimesOdd => {
            let h = harmonic_bound(b / 32.0) / 8.0;
            let tail = 4.0 * (1.0 - 2.0f64.powf(-1.5)) * (1.0 + harmonic_bound(b / 8.0) / 2.0);
            z / (4.0 * b.sqrt())
                * ((7.0 + 2.0 * sqrt2) * (1.0 + h) + (7.0 - 2.0 * sqrt2) * (0.2 + h) + tail)
        }
        EnvelopeCase::EightDivides => {
            let head = (1.0 + harmonic_bound(b / 32.0) / 4.0) / 8.0;
            let tail = 3.5 * (1.0 - 2.0f64.powf(-1.5)) * (1.0 + harmonic_bound(b / 16.0) / 2.0);
            z / b.sqrt() * (head + tail)
        }
    }
}

/// Envelope for the case b itself belongs to.
pub fn case_envelope(b: u64) -> f64 {
    case_envelope_for(EnvelopeCase::of(b), b)
}

/// Case 2 closed form (2 || b): an independent route to lambda*_{a,b} via
/// Jacobi characters and Hurwitz zeta over the divisors of b/2.
pub fn lambda_case2_closed(frac: ReducedFraction) -> Complex64 {
    let (a, b) = (frac.numerator(), frac.denominator());
    assert!(b % 4 == 2, "case 2 needs b = 2 (mod 4)");
    let half = b / 2;
    let mut acc = Complex64::new(0.0, 0.0);
    for d in 1..=half {
        if half % d != 0 {
            continue;
        }
        // d odd here since b/2 is odd.
        let eps = epsilon_factor(d).expect("odd divisor");
        let twist = 1.0 - std::f64::consts::SQRT_2 * jacobi_symbol(2, d).expect("odd") as f64;
        let mut inner = 0.0;
        for l in 1..=d {
            let chi = jacobi_symbol((l as u128 * a as u128 % d as u128) as i64, d).expect("odd");
            if chi != 0 {
                inner += chi as f64 * hurwitz_zeta(1.5, l as f64 / d as f64).expect("in domain");
            }
        }
        acc += eps * twist * inner / (d as f64).sqrt();
    }
    acc * 2.0 / (b as f64).powf(1.5)
}

/// f(t) = ((1/sqrt(1+t^2) + 1/(1+t^2))^{1/2} + (1/sqrt(1+t^2) - 1/(1+t^2))^{1/2}) / sqrt 2.
pub fn f_profile(t: f64) -> f64 {
    let u = 1.0 / (1.0 + t * t).sqrt();
    let v = u * u;
    ((u + v).sqrt() + (u - v).max(0.0).sqrt()) / std::f64::consts::SQRT_2
}

/// Global maximizer of f on [0, 10] by golden-section search, |dt| < 1e-10.
pub fn maximize_f() -> (f64, f64) {
    let inv_phi = (5.0f64.sqrt() - 1.0) / 2.0;
    let (mut lo, mut hi) = (0.0f64, 10.0f64);
    let mut c = hi - inv_phi * (hi - lo);
    let mut d = lo + inv_phi * (hi - lo);
    let (mut fc, mut fd) = (f_profile(c), f_profile(d));
    while hi - lo > 1e-11 {
        if fc > fd {
            hi = d;
            d = c;
            fd = fc;
            c = hi - inv_phi * (hi - lo);
            fc = f_profile(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + inv_phi * (hi - lo);
            fd = f_profile(d);
        }
    }
    let t = 0.5 * (lo + hi);
    (t, f_profile(t))
}

/// Checks Re(lambda_{a,b} / sqrt(1+it)) against its cos/sin decomposition,
/// with lambda = Gamma(3/2) lambda*. True when the two routes agree to 1e-10.
pub fn real_part_decomposition_check(frac: ReducedFraction, t: f64) -> bool {
    let lambda = lambda_small_star(frac) * SpecialConstants::get().gamma_3_2;
    let direct = (lambda / Complex64::new(1.0, t).sqrt()).re;
    let theta = t.atan() / 2.0;
    let decomposed =
        (theta.cos() * lambda.re + theta.sin() * lambda.im) / (1.0 + t * t).powf(0.25);
    (direct - decomposed).abs() < 1e-10
}
