//! Exact and floating-point combinatorial primitives.
//!
//! Everything here is a pure function. Counts that can overflow machine words
//! (binomial coefficients, certificate ratios) are kept exact in [`BigCount`];
//! logarithmic and entropy quantities are `f64`.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

/// Arbitrary-precision non-negative count. Exact everywhere; no rounding.
pub type BigCount = BigUint;

#[derive(Debug, Error, PartialEq)]
pub enum NumericError {
    #[error("log2_binomial: k = {k} out of range 0..={n}")]
    BinomialDomain { n: u64, k: i64 },
    #[error("binary_entropy: argument {0} outside [0, 1]")]
    EntropyDomain(f64),
    #[error("is_prime_power: argument must be >= 1")]
    PrimePowerDomain,
}

/// Exact binomial coefficient C(n, k). Returns 0 when `k < 0` or `k > n`.
pub fn binomial_exact(n: u64, k: i64) -> BigCount {
    if k < 0 || k as u64 > n {
        return BigUint::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigUint::one();
    for i in 0..k {
        // The prefix product C(n, i+1) stays integral, so division is exact.
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// log2 C(n, k) via summed logarithms of the multiplicative formula.
///
/// Deliberately not Stirling-based: the asymptotic module's entropy
/// approximation is validated against this independently exact route.
pub fn log2_binomial(n: u64, k: i64) -> Result<f64, NumericError> {
    if k < 0 || k as u64 > n {
        return Err(NumericError::BinomialDomain { n, k });
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = 0.0f64;
    for i in 0..k {
        acc += ((n - i) as f64).log2() - ((i + 1) as f64).log2();
    }
    Ok(acc)
}

/// Binary entropy H(x) = -x log2 x - (1-x) log2 (1-x), with H(0) = H(1) = 0.
pub fn binary_entropy(x: f64) -> Result<f64, NumericError> {
    if !(0.0..=1.0).contains(&x) {
        return Err(NumericError::EntropyDomain(x));
    }
    if x == 0.0 || x == 1.0 {
        return Ok(0.0);
    }
    Ok(-x * x.log2() - (1.0 - x) * (1.0 - x).log2())
}

/// True iff `m = q^e` for a prime `q` and integer `e >= 1`. `m = 1` is not a
/// prime power (the Frankl–Wilson modulus needs a genuine prime base).
pub fn is_prime_power(m: u64) -> Result<bool, NumericError> {
    if m == 0 {
        return Err(NumericError::PrimePowerDomain);
    }
    if m == 1 {
        return Ok(false);
    }
    let p = smallest_prime_factor(m);
    let mut rest = m;
    while rest % p == 0 {
        rest /= p;
    }
    Ok(rest == 1)
}

fn smallest_prime_factor(m: u64) -> u64 {
    if m % 2 == 0 {
        return 2;
    }
    let mut d = 3;
    while d * d <= m {
        if m % d == 0 {
            return d;
        }
        d += 2;
    }
    m
}

/// Ceiling of `a / b` in exact integer arithmetic. `b` must be nonzero.
pub fn ceil_div(a: &BigCount, b: &BigCount) -> BigCount {
    assert!(!b.is_zero(), "ceil_div by zero");
    (a + b - 1u32) / b
}

/// log2 of a positive big count, accurate to ~1 ulp of the 53-bit mantissa.
pub fn log2_bigcount(x: &BigCount) -> f64 {
    assert!(!x.is_zero(), "log2 of zero");
    let bits = x.bits();
    if bits <= 53 {
        return x.to_u64().unwrap().to_f64().unwrap().log2();
    }
    let shift = bits - 53;
    let top = (x >> shift).to_u64().unwrap() as f64;
    top.log2() + shift as f64
}
