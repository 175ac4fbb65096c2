//! Cross-module invariants at full scale: the oracle agreement for the
//! singular series, the composed gap chain behind the coefficient-positivity
//! argument, and the growth of the correction products.

use num_complex::Complex64;
use num_integer::Integer;
use rayon::prelude::*;

use sqparity::asympt::{error_report, ln_big};
use sqparity::gauss::jacobi_symbol;
use sqparity::lambda::{
    f_profile, lambda_series_oracle, maximize_f, oracle_tail_bound, LambdaScanner,
};
use sqparity::modular::{p_product, P_PRODUCT_CAP};
use sqparity::series::count_by_parity;
use sqparity::zeta::{hurwitz_zeta, SpecialConstants};
use sqparity::ReducedFraction;

fn coprime_pairs(b_max: u64) -> Vec<ReducedFraction> {
    let mut pairs = Vec::new();
    for b in 2..=b_max {
        for a in 1..b {
            if a.gcd(&b) == 1 {
                pairs.push(ReducedFraction::new(a, b).unwrap());
            }
        }
    }
    pairs
}

#[test]
fn oracle_agreement_to_b_40() {
    let m_terms = 1_000_000u64;
    let scanner = LambdaScanner::new(40);
    let pairs = coprime_pairs(40);
    let worst = pairs
        .par_iter()
        .map(|&frac| {
            let engine = scanner.big_star(frac);
            let oracle = lambda_series_oracle(frac, m_terms);
            let err = (engine - oracle).norm();
            let tail = oracle_tail_bound(frac.denominator(), m_terms);
            assert!(
                err <= tail,
                "{frac}: |engine - oracle| = {err} exceeds tail bound {tail}"
            );
            err / tail
        })
        .reduce(|| 0.0, f64::max);
    println!("oracle agreement b <= 40: worst error/tail = {worst:.3}");
}

#[test]
fn gap_chain_to_b_600() {
    // Re(lambda / sqrt(1+it)) <= f(t) Gamma(3/2) max{|Re l*|, |Im l*|}
    //                          <= 1.1398 Gamma(3/2) 0.81019 < lambda_{0,1}.
    let constants = SpecialConstants::get();
    let gamma_3_2 = constants.gamma_3_2;
    let lambda_01 = gamma_3_2 * constants.zeta_3_2 / (2.0 * std::f64::consts::SQRT_2);
    let literal_ceiling = 1.1398 * gamma_3_2 * 0.81019;
    assert!(literal_ceiling < lambda_01);

    let (_, f_max) = maximize_f();
    assert!(f_max < 1.1398);

    let t_grid: Vec<(f64, Complex64, f64)> = (-1000..=1000)
        .map(|k| {
            let t = k as f64 / 100.0;
            (t, Complex64::new(1.0, t).sqrt(), f_profile(t))
        })
        .collect();

    let scanner = LambdaScanner::new(600);
    let pairs = coprime_pairs(600);
    pairs.par_iter().for_each(|&frac| {
        let small = scanner.small_star(frac);
        let max_ri = small.re.abs().max(small.im.abs());
        assert!(
            max_ri < constants.bound_constant,
            "{frac}: max component {max_ri} at the bound"
        );
        let lambda = small * gamma_3_2;
        let pair_ceiling = gamma_3_2 * max_ri;
        for &(t, sqrt_one_it, f_t) in &t_grid {
            let lhs = (lambda / sqrt_one_it).re;
            let mid = f_t * pair_ceiling;
            assert!(
                lhs <= mid + 1e-12,
                "{frac} at t = {t}: Re = {lhs} above decomposition bound {mid}"
            );
            assert!(mid <= literal_ceiling, "{frac} at t = {t}");
        }
    });
    println!(
        "gap chain b <= 600: ceiling {literal_ceiling:.6} < lambda_01 = {lambda_01:.6}"
    );
}

#[test]
fn character_sum_hurwitz_decomposition() {
    // sum over residues of (la/d) zeta(3/2, l/d) d^{-3/2} equals the
    // truncated character series sum_{(m,d)=1} (ma/d) m^{-3/2} within the
    // truncation tail 2/sqrt(M).
    let m_terms = 250_000u64;
    let tail = 2.0 / (m_terms as f64).sqrt();
    let pairs: Vec<(u64, u64)> = (3..=50u64)
        .step_by(2)
        .flat_map(|d| (1..d).filter(move |a| a.gcd(&d) == 1).map(move |a| (a, d)))
        .collect();
    pairs.par_iter().for_each(|&(a, d)| {
        let lhs: f64 = (1..=d)
            .map(|l| {
                let chi = jacobi_symbol((l as u128 * a as u128 % d as u128) as i64, d).unwrap();
                chi as f64 * hurwitz_zeta(1.5, l as f64 / d as f64).unwrap()
            })
            .sum::<f64>()
            / (d as f64).powf(1.5);
        let chi_table: Vec<f64> = (0..d)
            .map(|r| jacobi_symbol((r as u128 * a as u128 % d as u128) as i64, d).unwrap() as f64)
            .collect();
        let mut rhs = 0.0;
        for m in 1..=m_terms {
            let mf = m as f64;
            rhs += chi_table[(m % d) as usize] / (mf * mf.sqrt());
        }
        assert!(
            (lhs - rhs).abs() <= tail,
            "({a},{d}): |{lhs} - {rhs}| above tail {tail}"
        );
    });
}

#[test]
fn parity_balance_tightens_across_decades() {
    let rows = count_by_parity(10_000);
    let balance = |n: usize| -> f64 {
        (ln_big(&rows[n].even_count) - ln_big(&rows[n].odd_count)).exp()
    };
    let deviations: Vec<f64> = [100, 1_000, 10_000]
        .iter()
        .map(|&n| (balance(n) - 1.0).abs())
        .collect();
    assert!(deviations[1] < deviations[0] && deviations[2] < deviations[1]);
    assert!(balance(10_000) > 0.99 && balance(10_000) < 1.01);
    // Wright's main term tracks the total count at the same scale.
    let reports = error_report(&rows, &[1_000, 5_000, 10_000]).unwrap();
    for r in &reports {
        assert!(
            r.ratio_a2.is_finite() && r.ratio_a2 > 0.0,
            "n = {}: a2 ratio {}",
            r.n,
            r.ratio_a2
        );
        assert!(
            r.ratio_p2.is_finite() && r.ratio_p2 > 0.0,
            "n = {}: p2 ratio {}",
            r.n,
            r.ratio_p2
        );
    }
    let p2_ratio = reports.last().unwrap().ratio_p2;
    assert!(p2_ratio > 0.5 && p2_ratio < 1.5, "p2 ratio = {p2_ratio}");
    println!("parity balance |ratio - 1| across decades: {deviations:?}");
}

#[test]
fn correction_product_log_growth_is_linear_in_b() {
    // max_a |log|P_{a,b}(1/2)|| against b for b <= 40: bounded by a straight
    // line through the origin, and the least-squares slope stays finite.
    let tau = Complex64::new(0.5, 0.0);
    let rows: Vec<(u64, f64)> = (1..=40u64)
        .into_par_iter()
        .map(|b| {
            let mut worst = 0.0f64;
            for a in 0..b.max(1) {
                if let Ok(frac) = ReducedFraction::new(a, b) {
                    let p = p_product(frac, tau, P_PRODUCT_CAP).unwrap();
                    worst = worst.max(p.norm().ln().abs());
                }
            }
            (b, worst)
        })
        .collect();
    let n = rows.len() as f64;
    let sum_b: f64 = rows.iter().map(|&(b, _)| b as f64).sum();
    let sum_m: f64 = rows.iter().map(|&(_, m)| m).sum();
    let sum_bb: f64 = rows.iter().map(|&(b, _)| (b as f64) * (b as f64)).sum();
    let sum_bm: f64 = rows.iter().map(|&(b, m)| b as f64 * m).sum();
    let slope = (n * sum_bm - sum_b * sum_m) / (n * sum_bb - sum_b * sum_b);
    let intercept = (sum_m - slope * sum_b) / n;
    assert!(slope.is_finite());
    let max_residual = rows
        .iter()
        .map(|&(b, m)| (m - (slope * b as f64 + intercept)).abs())
        .fold(0.0, f64::max);
    for &(b, m) in &rows {
        assert!(
            m <= b as f64,
            "b = {b}: |log|P|| = {m} above the linear envelope b"
        );
    }
    println!(
        "correction products: slope {slope:.4}, intercept {intercept:.4}, max residual {max_residual:.4}"
    );
    // Observed fit: slope ~0.05, max residual ~0.9.
    assert!(slope < 0.5, "slope = {slope}");
    assert!(max_residual < 3.0, "max residual = {max_residual}");
}
