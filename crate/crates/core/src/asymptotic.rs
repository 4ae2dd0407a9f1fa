//! The asymptotic growth constant `c(p)` with `b(l_p^d) >= (c(p)+o(1))^sqrt(d)`.
//!
//! With `k = kappa n` and `t0 = tau n`, Stirling's approximation turns the
//! finite bound `C(n,k) / C(n, k - t1 - 1)` (with `t1 = t0 - o(n)`, prime
//! gaps being small) into
//!
//! ```text
//! c = 2^( sqrt(2) * (H(kappa) - H(kappa - tau)) ),      d = C(n,2) ~ n^2/2,
//! ```
//!
//! where `H` is the binary entropy and `tau` the limit of the parabola
//! vertex. Optimizing over `(kappa, lambda)` yields the curve `c(p)`; at
//! `kappa = 1/2, lambda = -1/2` the exponent is the classical Kahn–Kalai
//! constant `(3^(3/4)/2)^sqrt(2) = 1.2032...`, and `c(p)` increases to
//! `((1+sqrt(2))/2)^sqrt(2) = 1.30498...` as `p -> infinity`.

use thiserror::Error;

use crate::numeric::binary_entropy;

#[derive(Debug, Error, PartialEq)]
pub enum AsymptoticError {
    #[error("kappa = {0} outside (0, 1/2]")]
    KappaDomain(f64),
    #[error("lambda = {0} outside [-1/2, 0]")]
    LambdaDomain(f64),
    #[error("p = {0} outside [1, {MAX_P}]")]
    PDomain(f64),
    #[error("infeasible: tau = {tau} violates 0 < tau <= kappa/2 at kappa = {kappa}")]
    Infeasible { kappa: f64, tau: f64 },
}

/// Exponent cap: beyond this, `|lambda|^p` conditioning degrades; the
/// `p -> infinity` value is available in closed form instead.
pub const MAX_P: f64 = 64.0;

/// Optima returned by [`optimize_c`] stay strictly inside the feasible box;
/// this inset keeps `kappa < 1/2` while staying within Table-level accuracy.
const KAPPA_MAX: f64 = 0.5 - 1e-7;
const KAPPA_MIN: f64 = 1e-7;

/// One optimized point of the curve: `kappa = lim k/n`, `tau = lim t0/n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymptoticOptimum {
    pub p: f64,
    pub lambda_star: f64,
    pub kappa_star: f64,
    pub tau_star: f64,
    pub c_value: f64,
}

/// Limit of `t0 / n`: the finite vertex formula with `k = kappa n`, keeping
/// only the leading terms in `n`.
pub fn tau_limit(kappa: f64, lambda: f64, p: f64) -> Result<f64, AsymptoticError> {
    if !(kappa > 0.0 && kappa <= 0.5) {
        return Err(AsymptoticError::KappaDomain(kappa));
    }
    if !(-0.5..=0.0).contains(&lambda) {
        return Err(AsymptoticError::LambdaDomain(lambda));
    }
    if !(p >= 1.0 && p.is_finite()) {
        return Err(AsymptoticError::PDomain(p));
    }
    let pow_l = lambda.abs().powf(p);
    let pow_m = (1.0 + lambda).abs().powf(p);
    let pow_n = (1.0 + 2.0 * lambda).abs().powf(p);
    Ok(((3.0 * kappa - 1.0) * pow_l + kappa * pow_m - kappa * pow_n)
        / (2.0 * pow_l + 2.0 * pow_m - pow_n))
}

/// The limit constant `c = 2^(sqrt(2) (H(kappa) - H(kappa - tau)))`.
///
/// Feasibility follows the Frankl–Wilson constraint `2t < k` in the limit;
/// the boundary `tau = kappa/2` itself is admitted (the finite constraint
/// has `o(n)` slack), which covers the closure point `kappa = 1/2`.
pub fn exponent_c(kappa: f64, lambda: f64, p: f64) -> Result<f64, AsymptoticError> {
    Ok(2f64.powf(log2_c(kappa, lambda, p)?))
}

fn log2_c(kappa: f64, lambda: f64, p: f64) -> Result<f64, AsymptoticError> {
    let tau = tau_limit(kappa, lambda, p)?;
    let boundary_tol = 1e-12 * (1.0 + kappa);
    if tau <= 0.0 || tau - kappa / 2.0 > boundary_tol || kappa - tau <= 0.0 {
        return Err(AsymptoticError::Infeasible { kappa, tau });
    }
    let h_k = binary_entropy(kappa).expect("kappa in (0, 1/2]");
    let h_kt = binary_entropy(kappa - tau).expect("kappa - tau in (0, kappa)");
    Ok(2f64.sqrt() * (h_k - h_kt))
}

/// Strict-interior objective for the optimizer; infeasible points map to
/// negative infinity so returned optima satisfy `0 < tau < kappa/2` strictly.
fn objective(kappa: f64, lambda: f64, p: f64) -> f64 {
    match tau_limit(kappa, lambda, p) {
        Ok(tau) if tau > 0.0 && tau < kappa / 2.0 && kappa - tau > 0.0 => {
            let h_k = binary_entropy(kappa).unwrap();
            let h_kt = binary_entropy(kappa - tau).unwrap();
            2f64.sqrt() * (h_k - h_kt)
        }
        _ => f64::NEG_INFINITY,
    }
}

/// Golden-section maximization on `[a, b]`; returns the best point evaluated,
/// including the endpoints, so boundary optima (e.g. `lambda = -1/2`) are
/// reported exactly.
fn golden_max(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> (f64, f64) {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut best = (a, f(a));
    let fb = f(b);
    if fb > best.1 {
        best = (b, fb);
    }
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while b - a > 1e-12 {
        if f1 >= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = f(x2);
        }
        let (x, fx) = if f1 >= f2 { (x1, f1) } else { (x2, f2) };
        if fx > best.1 {
            best = (x, fx);
        }
    }
    best
}

/// Maximizes the exponent over `(kappa, lambda) in (0, 1/2) x [-1/2, 0]`:
/// coarse grid with step 1/256, then coordinate-wise golden-section passes
/// on shrinking brackets until they are below 1e-10. Deterministic for a
/// fixed `p`, and never worse than the best coarse-grid point.
pub fn optimize_c(p: f64) -> Result<AsymptoticOptimum, AsymptoticError> {
    if !(1.0..=MAX_P).contains(&p) {
        return Err(AsymptoticError::PDomain(p));
    }
    const STEP: f64 = 1.0 / 256.0;
    let mut kappa = KAPPA_MAX;
    let mut lambda = -0.5;
    let mut best = f64::NEG_INFINITY;
    for i in 1..=128 {
        let kap = (i as f64 * STEP).min(KAPPA_MAX);
        for j in 0..=128 {
            let lam = -(j as f64) * STEP;
            let v = objective(kap, lam, p);
            if v > best {
                best = v;
                kappa = kap;
                lambda = lam;
            }
        }
    }
    let coarse_best = best;
    assert!(
        coarse_best.is_finite(),
        "feasible points exist for every p >= 1"
    );

    let mut width = 2.0 * STEP;
    while width > 1e-10 {
        let (kap, vk) = golden_max(
            |x| objective(x, lambda, p),
            (kappa - width).max(KAPPA_MIN),
            (kappa + width).min(KAPPA_MAX),
        );
        if vk > best {
            best = vk;
            kappa = kap;
        }
        let (lam, vl) = golden_max(
            |x| objective(kappa, x, p),
            (lambda - width).max(-0.5),
            (lambda + width).min(0.0),
        );
        if vl > best {
            best = vl;
            lambda = lam;
        }
        width *= 0.25;
    }
    debug_assert!(best >= coarse_best);

    let tau_star = tau_limit(kappa, lambda, p)?;
    Ok(AsymptoticOptimum {
        p,
        lambda_star: lambda,
        kappa_star: kappa,
        tau_star,
        c_value: 2f64.powf(best),
    })
}

/// The closed-form limit of `c(p)` as `p -> infinity`:
/// `((1 + sqrt(2)) / 2)^sqrt(2)`.
pub fn limit_p_infinity() -> f64 {
    ((1.0 + 2f64.sqrt()) / 2.0).powf(2f64.sqrt())
}

/// One optimum per requested `p`, in input order; per-row failures do not
/// abort the batch.
pub fn emit_curve(p_values: &[f64]) -> Vec<(f64, Result<AsymptoticOptimum, AsymptoticError>)> {
    use rayon::prelude::*;
    p_values
        .par_iter()
        .map(|&p| (p, optimize_c(p)))
        .collect()
}

/// CSV serialization of a curve: header `p,c,lambda,kappa,tau`, six decimal
/// places, rows for successful optima only.
pub fn curve_csv(rows: &[(f64, Result<AsymptoticOptimum, AsymptoticError>)]) -> String {
    let mut out = String::from("p,c,lambda,kappa,tau\n");
    for (p, row) in rows {
        if let Ok(opt) = row {
            out.push_str(&format!(
                "{:.6},{:.6},{:.6},{:.6},{:.6}\n",
                p, opt.c_value, opt.lambda_star, opt.kappa_star, opt.tau_star
            ));
        }
    }
    out
}

/// The `p` grid of the reference curve tabulation (32 points on [1, 9.99]).
pub fn reference_p_grid() -> Vec<f64> {
    let mut grid = vec![1.0, 2.0];
    let mut p = 2.25;
    while p < 2.501 {
        grid.push(p);
        p += 0.05;
    }
    let mut p = 2.75;
    while p < 7.001 {
        grid.push(p);
        p += 0.25;
    }
    grid.extend([7.5, 8.0, 8.5, 9.0, 9.5, 9.99]);
    grid
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tau_limit_anchors() {
        // kappa = 1/2, lambda = -1/2 gives exactly 1/4 for every p
        for p in [1.0, 2.0, 3.0, 17.0] {
            assert_eq!(tau_limit(0.5, -0.5, p).unwrap(), 0.25, "p={p}");
        }
        // tabulated row p = 4
        let tau = tau_limit(0.3215, -0.3095, 4.0).unwrap();
        assert!((tau - 0.1460).abs() < 1e-4, "tau={tau}");
        // degenerate lambda = 0 collapses tau to 0
        assert_eq!(tau_limit(0.3, 0.0, 2.0).unwrap(), 0.0);

        assert!(tau_limit(0.0, -0.5, 2.0).is_err());
        assert!(tau_limit(0.6, -0.5, 2.0).is_err());
        assert!(tau_limit(0.3, -0.6, 2.0).is_err());
        assert!(tau_limit(0.3, -0.5, 0.5).is_err());
    }

    #[test]
    fn exponent_anchors() {
        // the Kahn-Kalai constant, two independent expressions
        let c = exponent_c(0.5, -0.5, 2.0).unwrap();
        let reference = (3f64.powf(0.75) / 2.0).powf(2f64.sqrt());
        assert!((c - reference).abs() < 1e-9, "{c} vs {reference}");
        assert!((c - 1.20321).abs() < 5e-5);
        // p-independence of the boundary value
        for p in [1.0, 1.5, 2.0, 5.0, 30.0] {
            let v = exponent_c(0.5, -0.5, p).unwrap();
            assert!((v - reference).abs() < 1e-9, "p={p}");
        }
        // infeasible: lambda = 0 gives tau = 0
        assert_eq!(
            exponent_c(0.3, 0.0, 2.0).unwrap_err(),
            AsymptoticError::Infeasible { kappa: 0.3, tau: 0.0 }
        );
    }

    #[test]
    fn optimize_plateau_and_tabulated_rows() {
        let one = optimize_c(1.0).unwrap();
        let two = optimize_c(2.0).unwrap();
        assert!((one.c_value - 1.2032).abs() < 5e-4);
        assert!((two.c_value - one.c_value).abs() < 2e-4);
        assert!((one.lambda_star + 0.5).abs() < 1e-2);
        assert!((one.kappa_star - 0.5).abs() < 1e-2);
        assert!((one.tau_star - 0.25).abs() < 1e-2);

        let mid = optimize_c(4.5).unwrap();
        assert!((mid.c_value - 1.2724).abs() < 5e-4);
        assert!((mid.lambda_star + 0.3085).abs() < 1e-2);
        assert!((mid.kappa_star - 0.3120).abs() < 1e-2);
        assert!((mid.tau_star - 0.1455).abs() < 1e-2);

        let high = optimize_c(9.99).unwrap();
        assert!((high.c_value - 1.3042).abs() < 5e-4);

        assert!(optimize_c(0.9).is_err());
        assert!(optimize_c(65.0).is_err());
    }

    #[test]
    fn optimum_strictly_feasible() {
        for p in [1.0, 2.0, 2.5, 4.0, 10.0, 30.0, 64.0] {
            let opt = optimize_c(p).unwrap();
            assert!(opt.tau_star > 0.0, "p={p}");
            assert!(opt.tau_star < opt.kappa_star / 2.0, "p={p}");
            let c_check =
                exponent_c(opt.kappa_star, opt.lambda_star, p).unwrap();
            assert!((c_check - opt.c_value).abs() <= 1e-9, "p={p}");
        }
    }

    #[test]
    fn infinity_limit_constant() {
        let lim = limit_p_infinity();
        assert!((lim - 1.3049860314033803).abs() < 1e-12);
        // at the p cap the optimum touches the limit to within rounding
        let c64 = optimize_c(64.0).unwrap().c_value;
        assert!(c64 <= lim + 1e-12 && lim - c64 < 3e-3);
    }

    #[test]
    fn curve_batch_and_csv() {
        let rows = emit_curve(&[1.0, 2.0, 0.5]);
        assert_eq!(rows.len(), 3);
        assert!(rows[0].1.is_ok());
        assert!(rows[2].1.is_err());
        let plateau_a = rows[0].1.as_ref().unwrap().c_value;
        let plateau_b = rows[1].1.as_ref().unwrap().c_value;
        assert!((plateau_a - plateau_b).abs() < 2e-4);

        let csv = curve_csv(&rows);
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("p,c,lambda,kappa,tau"));
        assert_eq!(csv.lines().count(), 3); // header + two ok rows
        let first = lines.next().unwrap();
        assert!(first.starts_with("1.000000,1.2032"));
    }

    #[test]
    fn reference_grid_shape() {
        let grid = reference_p_grid();
        assert_eq!(grid.len(), 32);
        assert_eq!(grid[0], 1.0);
        assert!((grid[31] - 9.99).abs() < 1e-12);
        assert!(grid.windows(2).all(|w| w[0] < w[1]));
    }
}
