//! Exact power-series expansion of the products behind the parity-refined
//! square-partition counts, plus the counting dynamic programs and a
//! brute-force enumeration oracle.
//!
//! Everything is arbitrary-precision: the totals reach ~160 bits by
//! n = 50,000 and fixed-width arithmetic would overflow silently.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Hard ceiling for the recursive enumeration oracle.
pub const BRUTE_FORCE_CAP: u64 = 120;

/// A power series truncated at order N, with exact integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientSeries {
    coeffs: Vec<BigInt>,
}

impl CoefficientSeries {
    fn one(truncation_order: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); truncation_order + 1];
        coeffs[0] = BigInt::one();
        CoefficientSeries { coeffs }
    }

    pub fn truncation_order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &BigInt {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// In-place multiplication by (1 - q^k): c[n] -= c[n-k], descending.
    fn mul_one_minus_qk(&mut self, k: usize) {
        for n in (k..self.coeffs.len()).rev() {
            let sub = self.coeffs[n - k].clone();
            self.coeffs[n] -= sub;
        }
    }

    /// In-place multiplication by 1/(1 - q^k): c[n] += c[n-k], ascending.
    fn mul_inv_one_minus_qk(&mut self, k: usize) {
        for n in k..self.coeffs.len() {
            let add = self.coeffs[n - k].clone();
            self.coeffs[n] += add;
        }
    }
}

/// A finite product of factors (1 - q^k)^e with k >= 1 and signed e.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductSpec {
    factors: Vec<(u64, i64)>,
}

impl ProductSpec {
    pub fn new(factors: Vec<(u64, i64)>) -> Result<Self> {
        for &(k, _) in &factors {
            if k == 0 {
                return Err(Error::InvalidProductFactor);
            }
        }
        Ok(ProductSpec { factors })
    }

    pub fn factors(&self) -> &[(u64, i64)] {
        &self.factors
    }

    /// G(q) = prod (1-q^{4n^2})^2 / ((1-q^{n^2})(1-q^{8n^2})), factors up to q^n_max.
    pub fn g_product(n_max: u64) -> Self {
        let mut factors = Vec::new();
        let mut n = 1u64;
        while n * n <= n_max {
            factors.push((n * n, -1));
            n += 1;
        }
        n = 1;
        while 4 * n * n <= n_max {
            factors.push((4 * n * n, 2));
            n += 1;
        }
        n = 1;
        while 8 * n * n <= n_max {
            factors.push((8 * n * n, -1));
            n += 1;
        }
        ProductSpec { factors }
    }

    /// H_2(q) = prod (1-q^{n^2})^{-1}, the square-partition generating function.
    pub fn squares_inverse(n_max: u64) -> Self {
        let mut factors = Vec::new();
        let mut n = 1u64;
        while n * n <= n_max {
            factors.push((n * n, -1));
            n += 1;
        }
        ProductSpec { factors }
    }

    /// prod_{m odd} (1 + q^m), written as (1-q^{2m})/(1-q^m).
    pub fn distinct_odd_parts(n_max: u64) -> Self {
        let mut factors = Vec::new();
        let mut m = 1u64;
        while m <= n_max {
            if 2 * m <= n_max {
                factors.push((2 * m, 1));
            }
            factors.push((m, -1));
            m += 2;
        }
        ProductSpec { factors }
    }
}

/// Expands prod (1-q^k)^e to order `n`, exactly. Factors with k > n are inert.
pub fn expand_product(spec: &ProductSpec, n: usize) -> CoefficientSeries {
    let mut series = CoefficientSeries::one(n);
    for &(k, e) in &spec.factors {
        let k = k as usize;
        if k > n {
            continue;
        }
        if e >= 0 {
            for _ in 0..e {
                series.mul_one_minus_qk(k);
            }
        } else {
            for _ in 0..(-e) {
                series.mul_inv_one_minus_qk(k);
            }
        }
    }
    series
}

/// Exact parity-refined counts for one n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityRow {
    pub n: u64,
    /// p_2(0,2,n): partitions of n into squares with an even number of parts.
    pub even_count: BigUint,
    /// p_2(1,2,n): partitions of n into squares with an odd number of parts.
    pub odd_count: BigUint,
    /// a_2(n) = even - odd for even n, odd - even for odd n.
    pub a2: BigInt,
}

/// Parity-refined square-partition counts for n = 0..=n_max.
///
/// DP over square parts with two parity lanes; adding one copy of a part
/// swaps lanes. Row 0 is the empty partition, counted as even.
pub fn count_by_parity(n_max: usize) -> Vec<ParityRow> {
    let mut even = vec![BigUint::zero(); n_max + 1];
    let mut odd = vec![BigUint::zero(); n_max + 1];
    even[0] = BigUint::one();
    let mut s = 1usize;
    while s * s <= n_max {
        let sq = s * s;
        for n in sq..=n_max {
            let from_odd = odd[n - sq].clone();
            let from_even = even[n - sq].clone();
            even[n] += from_odd;
            odd[n] += from_even;
        }
        s += 1;
    }
    even.into_iter()
        .zip(odd)
        .enumerate()
        .map(|(n, (even_count, odd_count))| {
            let diff = BigInt::from(even_count.clone()) - BigInt::from(odd_count.clone());
            let a2 = if n % 2 == 0 { diff } else { -diff };
            ParityRow {
                n: n as u64,
                even_count,
                odd_count,
                a2,
            }
        })
        .collect()
}

/// a_2(0..=n) computed purely from the product side.
pub fn g_coefficients(n: usize) -> CoefficientSeries {
    expand_product(&ProductSpec::g_product(n as u64), n)
}

/// All n in [1, n_max] with p_2(0,2,n) = p_2(1,2,n).
pub fn exceptional_set(n_max: usize) -> Vec<u64> {
    count_by_parity(n_max)
        .iter()
        .skip(1)
        .filter(|row| row.a2.is_zero())
        .map(|row| row.n)
        .collect()
}

/// Parity-refined counts over *all* parts (r = 1), used by the Glaisher check.
fn count_by_parity_all_parts(n_max: usize) -> (Vec<BigUint>, Vec<BigUint>) {
    let mut even = vec![BigUint::zero(); n_max + 1];
    let mut odd = vec![BigUint::zero(); n_max + 1];
    even[0] = BigUint::one();
    for part in 1..=n_max {
        for n in part..=n_max {
            let from_odd = odd[n - part].clone();
            let from_even = even[n - part].clone();
            even[n] += from_odd;
            odd[n] += from_even;
        }
    }
    (even, odd)
}

/// One n of the Glaisher identity: the parity difference over all parts
/// against the signed count of partitions into distinct odd parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlaisherRow {
    pub n: u64,
    /// p_1(0,2,n) - p_1(1,2,n).
    pub parity_difference: BigInt,
    /// (-1)^n p_odd(n).
    pub signed_distinct_odd: BigInt,
}

/// Both sides of p_1(0,2,n) - p_1(1,2,n) = (-1)^n p_odd(n) for n = 0..=n_max.
pub fn glaisher_table(n_max: usize) -> Vec<GlaisherRow> {
    let (even, odd) = count_by_parity_all_parts(n_max);
    let distinct_odd = expand_product(&ProductSpec::distinct_odd_parts(n_max as u64), n_max);
    (0..=n_max)
        .map(|n| GlaisherRow {
            n: n as u64,
            parity_difference: BigInt::from(even[n].clone()) - BigInt::from(odd[n].clone()),
            signed_distinct_odd: if n % 2 == 0 {
                distinct_odd.coeff(n).clone()
            } else {
                -distinct_odd.coeff(n)
            },
        })
        .collect()
}

/// Checks the Glaisher identity for all n <= n_max.
pub fn glaisher_check(n_max: usize) -> bool {
    glaisher_table(n_max)
        .iter()
        .all(|row| row.parity_difference == row.signed_distinct_odd)
}

/// Enumeration oracle: walks every non-increasing sequence of squares
/// summing to n and tallies by parity of the part count.
pub fn brute_force_parity(n: u64) -> Result<(u64, u64)> {
    if n > BRUTE_FORCE_CAP {
        return Err(Error::BruteForceCap {
            n,
            cap: BRUTE_FORCE_CAP,
        });
    }
    let mut squares: Vec<u64> = (1..).map(|k| k * k).take_while(|&s| s <= n.max(1)).collect();
    squares.reverse();
    let mut counts = (0u64, 0u64);
    fn recurse(rem: u64, parts: u64, start: usize, squares: &[u64], counts: &mut (u64, u64)) {
        if rem == 0 {
            if parts.is_multiple_of(2) {
                counts.0 += 1;
            } else {
                counts.1 += 1;
            }
            return;
        }
        for i in start..squares.len() {
            if squares[i] <= rem {
                recurse(rem - squares[i], parts + 1, i, squares, counts);
            }
        }
    }
    recurse(n, 0, 0, &squares, &mut counts);
    Ok(counts)
}

/// Part-count-resolved DP: table[m][n] = partitions of n into squares with
/// exactly m parts. Quadratic in n_max; meant for the orthogonality test.
pub fn count_by_exact_parts(n_max: usize) -> Vec<Vec<BigUint>> {
    let mut table = vec![vec![BigUint::zero(); n_max + 1]; n_max + 1];
    table[0][0] = BigUint::one();
    let mut s = 1usize;
    while s * s <= n_max {
        let sq = s * s;
        for m in 1..=n_max {
            for n in sq..=n_max {
                let prev = table[m - 1][n - sq].clone();
                table[m][n] += prev;
            }
        }
        s += 1;
    }
    table
}
