//! Quadratic Gauss sums S_{a,b} = sum_{n=1}^{b} e^{2 pi i a n^2 / b}.
//!
//! The closed form of Gauss (Jacobi symbols and the epsilon_b factor) is the
//! primary evaluator; the direct sum serves as its oracle and for inputs that
//! are not reduced fractions.

use num_complex::Complex64;
use num_integer::Integer;

use crate::error::{Error, Result};

/// A rational point a/b on the unit circle with 0 <= a < b and gcd(a, b) = 1.
///
/// The only admissible numerator-zero case is 0/1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReducedFraction {
    a: u64,
    b: u64,
}

impl ReducedFraction {
    pub fn new(a: u64, b: u64) -> Result<Self> {
        let zero_case_ok = a == 0 && b == 1;
        if b == 0 || (a >= b && !zero_case_ok) || a.gcd(&b) != 1 {
            return Err(Error::InvalidFraction { a, b });
        }
        Ok(ReducedFraction { a, b })
    }

    /// Reduces an arbitrary numerator modulo `den` and divides out the gcd.
    /// Total for den >= 1; (anything, 1) collapses to 0/1.
    pub fn reduce(num: u64, den: u64) -> Self {
        debug_assert!(den >= 1);
        let num = num % den;
        if num == 0 {
            return ReducedFraction { a: 0, b: 1 };
        }
        let g = num.gcd(&den);
        ReducedFraction {
            a: num / g,
            b: den / g,
        }
    }

    pub fn numerator(&self) -> u64 {
        self.a
    }

    pub fn denominator(&self) -> u64 {
        self.b
    }
}

impl std::fmt::Display for ReducedFraction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.a, self.b)
    }
}

/// Jacobi symbol (a/n) for odd positive n, by binary reciprocity.
pub fn jacobi_symbol(a: i64, n: u64) -> Result<i32> {
    if n == 0 || n.is_multiple_of(2) {
        return Err(Error::EvenModulus(n));
    }
    let mut a = a.rem_euclid(n as i64) as u64;
    let mut n = n;
    let mut sign = 1i32;
    while a != 0 {
        while a.is_multiple_of(2) {
            a /= 2;
            if n % 8 == 3 || n % 8 == 5 {
                sign = -sign;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            sign = -sign;
        }
        a %= n;
    }
    Ok(if n == 1 { sign } else { 0 })
}

/// epsilon_b = 1 for b = 1 (mod 4), i for b = 3 (mod 4).
pub fn epsilon_factor(b: u64) -> Result<Complex64> {
    if b.is_multiple_of(2) {
        return Err(Error::EvenModulus(b));
    }
    Ok(if b % 4 == 1 {
        Complex64::new(1.0, 0.0)
    } else {
        Complex64::new(0.0, 1.0)
    })
}

/// Direct evaluation of S_{a,b}; depends on a only through a mod b.
///
/// Terms are accumulated pairwise so the rounding error stays far below
/// 1e-12 * b even at b = 10^4.
pub fn gauss_sum_direct(a: i64, b: u64) -> Complex64 {
    debug_assert!(b >= 1);
    let r = a.rem_euclid(b as i64) as u64;
    let step = 2.0 * std::f64::consts::PI / b as f64;
    let terms: Vec<Complex64> = (1..=b)
        .map(|n| {
            let sq = (n as u128 * n as u128 % b as u128) as u64;
            let idx = (r as u128 * sq as u128 % b as u128) as u64;
            Complex64::from_polar(1.0, step * idx as f64)
        })
        .collect();
    pairwise_sum(&terms)
}

fn pairwise_sum(terms: &[Complex64]) -> Complex64 {
    if terms.len() <= 32 {
        return terms.iter().sum();
    }
    let mid = terms.len() / 2;
    pairwise_sum(&terms[..mid]) + pairwise_sum(&terms[mid..])
}

/// Closed form of Gauss for a reduced fraction a/b:
///
/// - 0 when b = 2 (mod 4),
/// - epsilon_b sqrt(b) (a/b) for odd b,
/// - (1 + i) epsilon_a^{-1} sqrt(b) (b/a) when 4 | b (a is odd there).
pub fn gauss_sum_closed(frac: ReducedFraction) -> Complex64 {
    let (a, b) = (frac.numerator(), frac.denominator());
    let sqrt_b = (b as f64).sqrt();
    if b % 4 == 2 {
        Complex64::new(0.0, 0.0)
    } else if b % 2 == 1 {
        let chi = jacobi_symbol(a as i64, b).expect("odd b") as f64;
        epsilon_factor(b).expect("odd b") * sqrt_b * chi
    } else {
        // 4 | b; coprimality forces a odd.
        let chi = jacobi_symbol(b as i64, a).expect("odd a") as f64;
        let eps_inv = epsilon_factor(a % 4).expect("odd a").inv();
        Complex64::new(1.0, 1.0) * eps_inv * sqrt_b * chi
    }
}

/// Fallible wrapper over [`gauss_sum_closed`] for unvalidated pairs.
pub fn gauss_sum_closed_checked(a: u64, b: u64) -> Result<Complex64> {
    let frac = ReducedFraction::new(a, b).map_err(|_| Error::NotCoprime { a, b })?;
    Ok(gauss_sum_closed(frac))
}

/// Largest closed-vs-direct deviation for one denominator.
#[derive(Debug, Clone, Copy)]
pub struct PerDenominatorError {
    pub b: u64,
    pub max_abs_error: f64,
    pub argmax_a: u64,
}

/// Closed-form-versus-direct-sum comparison over all coprime pairs.
#[derive(Debug, Clone)]
pub struct GaussScanReport {
    pub b_max: u64,
    /// Largest |direct - closed| / b over the scan.
    pub max_scaled_error: f64,
    pub argmax_a: u64,
    pub argmax_b: u64,
    pub per_b: Vec<PerDenominatorError>,
}

/// Compares the closed form against the direct sum for every coprime (a, b)
/// with 2 <= b <= b_max. Deterministic: ties resolve to the smallest (b, a).
pub fn closed_vs_direct_scan(b_max: u64) -> GaussScanReport {
    use rayon::prelude::*;
    let per_b: Vec<PerDenominatorError> = (2..=b_max)
        .into_par_iter()
        .map(|b| {
            // One period of exp(2 pi i k / b) and of n^2 mod b, shared by all a.
            let step = 2.0 * std::f64::consts::PI / b as f64;
            let roots: Vec<Complex64> = (0..b)
                .map(|k| Complex64::from_polar(1.0, step * k as f64))
                .collect();
            let squares: Vec<u64> = (1..=b)
                .map(|n| (n as u128 * n as u128 % b as u128) as u64)
                .collect();
            let mut best = (0.0f64, 0u64);
            let mut terms = vec![Complex64::new(0.0, 0.0); b as usize];
            for a in 1..b {
                if a.gcd(&b) != 1 {
                    continue;
                }
                for (term, &sq) in terms.iter_mut().zip(&squares) {
                    *term = roots[(a as u128 * sq as u128 % b as u128) as usize];
                }
                let direct = pairwise_sum(&terms);
                let closed = gauss_sum_closed(ReducedFraction { a, b });
                let err = (direct - closed).norm();
                if err > best.0 {
                    best = (err, a);
                }
            }
            PerDenominatorError {
                b,
                max_abs_error: best.0,
                argmax_a: best.1,
            }
        })
        .collect();
    let mut max_scaled_error = 0.0f64;
    let (mut argmax_a, mut argmax_b) = (0u64, 0u64);
    for row in &per_b {
        let scaled = row.max_abs_error / row.b as f64;
        if scaled > max_scaled_error {
            max_scaled_error = scaled;
            argmax_a = row.argmax_a;
            argmax_b = row.b;
        }
    }
    GaussScanReport {
        b_max,
        max_scaled_error,
        argmax_a,
        argmax_b,
        per_b,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn close(z: Complex64, w: Complex64, tol: f64) -> bool {
        (z - w).norm() < tol
    }

    #[test]
    fn reduced_fraction_validation() {
        assert!(ReducedFraction::new(0, 1).is_ok());
        assert!(ReducedFraction::new(1, 2).is_ok());
        assert!(ReducedFraction::new(0, 2).is_err());
        assert!(ReducedFraction::new(2, 4).is_err());
        assert!(ReducedFraction::new(3, 3).is_err());
        assert!(ReducedFraction::new(1, 0).is_err());
        assert_eq!(ReducedFraction::reduce(8, 4), ReducedFraction::new(0, 1).unwrap());
        assert_eq!(ReducedFraction::reduce(6, 4), ReducedFraction::new(1, 2).unwrap());
    }

    #[test]
    fn jacobi_values() {
        assert_eq!(jacobi_symbol(1, 1).unwrap(), 1);
        assert_eq!(jacobi_symbol(0, 1).unwrap(), 1);
        assert_eq!(jacobi_symbol(2, 15).unwrap(), 1);
        assert_eq!(jacobi_symbol(3, 9).unwrap(), 0);
        assert_eq!(jacobi_symbol(2, 3).unwrap(), -1);
        assert_eq!(jacobi_symbol(2, 5).unwrap(), -1);
        assert_eq!(jacobi_symbol(-1, 3).unwrap(), -1);
        assert_eq!(jacobi_symbol(-1, 5).unwrap(), 1);
        assert!(jacobi_symbol(3, 4).is_err());
    }

    #[test]
    fn jacobi_is_multiplicative_in_modulus() {
        for a in 1..40i64 {
            let lhs = jacobi_symbol(a, 15).unwrap();
            let rhs = jacobi_symbol(a, 3).unwrap() * jacobi_symbol(a, 5).unwrap();
            assert_eq!(lhs, rhs, "a = {a}");
        }
    }

    #[test]
    fn epsilon_values() {
        assert_eq!(epsilon_factor(1).unwrap(), Complex64::new(1.0, 0.0));
        assert_eq!(epsilon_factor(3).unwrap(), Complex64::new(0.0, 1.0));
        assert_eq!(epsilon_factor(5).unwrap(), Complex64::new(1.0, 0.0));
        assert!(epsilon_factor(2).is_err());
    }

    #[test]
    fn direct_sum_spot_values() {
        assert!(close(gauss_sum_direct(0, 1), Complex64::new(1.0, 0.0), 1e-15));
        assert!(close(
            gauss_sum_direct(1, 3),
            Complex64::new(0.0, 3.0f64.sqrt()),
            1e-14
        ));
        assert!(close(gauss_sum_direct(1, 4), Complex64::new(2.0, 2.0), 1e-14));
        assert!(close(gauss_sum_direct(1, 2), Complex64::new(0.0, 0.0), 1e-14));
    }

    #[test]
    fn closed_form_spot_values() {
        let f = |a, b| gauss_sum_closed(ReducedFraction::new(a, b).unwrap());
        assert!(close(f(0, 1), Complex64::new(1.0, 0.0), 1e-15));
        assert!(close(f(1, 2), Complex64::new(0.0, 0.0), 1e-15));
        assert!(close(f(1, 3), Complex64::new(0.0, 3.0f64.sqrt()), 1e-15));
        assert!(close(f(1, 4), Complex64::new(2.0, 2.0), 1e-15));
        assert!(gauss_sum_closed_checked(2, 4).is_err());
    }

    #[test]
    fn closed_matches_direct_to_small_b() {
        for b in 2..=400u64 {
            for a in 1..b {
                if a.gcd(&b) != 1 {
                    continue;
                }
                let direct = gauss_sum_direct(a as i64, b);
                let closed = gauss_sum_closed(ReducedFraction::new(a, b).unwrap());
                assert!(
                    close(direct, closed, 1e-9 * b as f64),
                    "mismatch at ({a},{b}): {direct} vs {closed}"
                );
            }
        }
    }

    #[test]
    fn magnitude_case_split() {
        for b in 2..=100u64 {
            for a in 1..b {
                if a.gcd(&b) != 1 {
                    continue;
                }
                let m = gauss_sum_direct(a as i64, b).norm();
                let expected = if b % 4 == 2 {
                    0.0
                } else if b % 2 == 1 {
                    (b as f64).sqrt()
                } else {
                    (2.0 * b as f64).sqrt()
                };
                assert!((m - expected).abs() < 1e-9, "({a},{b}): |S| = {m}");
            }
        }
    }

    proptest! {
        // S_{ma,b} = d S_{ma/d, b/d} with d = gcd(m, b).
        #[test]
        fn scaling_law(b in 1u64..300, m in 1u64..40, a in 0u64..300) {
            let a = a % b;
            prop_assume!(a.gcd(&b) == 1 && (a > 0 || b == 1));
            let d = m.gcd(&b);
            let lhs = gauss_sum_direct((m * a) as i64, b);
            let rhs = gauss_sum_direct((m * a / d) as i64, b / d) * d as f64;
            prop_assert!(close(lhs, rhs, 1e-10 * b as f64));
        }

        // Periodicity in the numerator.
        #[test]
        fn periodic_in_a(a in -500i64..500, k in -3i64..3, b in 1u64..200) {
            let lhs = gauss_sum_direct(a, b);
            let rhs = gauss_sum_direct(a + k * b as i64, b);
            prop_assert!(close(lhs, rhs, 1e-11 * b as f64));
        }
    }
}
