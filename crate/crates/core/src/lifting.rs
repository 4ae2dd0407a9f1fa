//! The point set `V`, the lifting map into dimension C(n,2), and the
//! quadratic law turning intersection sizes into `l_p` distances.
//!
//! `V` is the set of all C(n,k) points of `{0,1}^n` with exactly `k` unit
//! coordinates. Each `x` lifts to `x*` with pair coordinates
//! `x_{i,j} = x_i x_j + lambda (x_i + x_j)`, so a lifted point takes only the
//! three values `0`, `lambda`, `1 + 2 lambda`. For `x, y` sharing `t` units,
//! `||x* - y*||_p^p = a t^2 + b t + c` with coefficients depending only on
//! `(n, k, p, lambda)`.

use std::fmt;
use std::io::{self, BufRead, Write};

use num_rational::Ratio;
use num_traits::ToPrimitive;
use thiserror::Error;

use crate::numeric::{binomial_exact, BigCount};

/// Points enumerated by [`enumerate_v`] are capped to guard memory; the bound
/// engine never enumerates, only the desk-scale oracles do.
pub const DEFAULT_ENUM_CAP: u64 = 10_000_000;

#[derive(Debug, Error)]
pub enum LiftingError {
    #[error("enumeration of C({n},{k}) = {count} points exceeds cap {cap}")]
    EnumerationCap { n: u32, k: u32, count: BigCount, cap: u64 },
    #[error("pair type counts undefined for n={n} k={k} t={t} (need t <= k and 2k-t <= n)")]
    PairTypeDomain { n: u32, k: u32, t: u32 },
    #[error("lambda denominator must be nonzero")]
    ZeroDenominator,
    #[error("cannot parse `{0}` as a rational or decimal lambda")]
    LambdaParse(String),
    #[error("quadratic is not concave (a = {a}); parameters outside the valid box")]
    NotConcave { a: f64 },
    #[error("distance vectors have mismatched lengths {0} and {1}")]
    LengthMismatch(usize, usize),
    #[error("quadratic value {value} at t={t} is significantly negative")]
    NegativeDistance { t: u32, value: f64 },
    #[error("malformed lifted-configuration text: {0}")]
    ConfigFormat(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

/// The shift parameter of the lifting map, kept as an exact rational so that
/// coordinate-census checks can compare values exactly. Real-valued lambdas
/// produced by bisection convert losslessly via [`Lambda::from_f64`] (every
/// finite f64 is dyadic).
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Lambda(Ratio<i64>);

impl Lambda {
    pub const ZERO: Lambda = Lambda(Ratio::new_raw(0, 1));

    pub fn new(num: i64, den: i64) -> Result<Self, LiftingError> {
        if den == 0 {
            return Err(LiftingError::ZeroDenominator);
        }
        Ok(Lambda(Ratio::new(num, den)))
    }

    /// Exact dyadic representation of a finite f64 (denominator capped at
    /// 2^62, far below the resolution any bisection output needs).
    pub fn from_f64(x: f64) -> Self {
        assert!(x.is_finite(), "lambda must be finite");
        let mut scaled = x;
        let mut den: i64 = 1;
        while scaled.fract() != 0.0 && den < (1i64 << 62) {
            scaled *= 2.0;
            den *= 2;
        }
        Lambda(Ratio::new(scaled.round() as i64, den))
    }

    /// Accepts `a/b` rationals and plain decimals (`-0.25`), both exact.
    pub fn parse(s: &str) -> Result<Self, LiftingError> {
        let s = s.trim();
        let bad = || LiftingError::LambdaParse(s.to_string());
        if let Some((num, den)) = s.split_once('/') {
            let num: i64 = num.trim().parse().map_err(|_| bad())?;
            let den: i64 = den.trim().parse().map_err(|_| bad())?;
            return Lambda::new(num, den);
        }
        let (sign, digits) = match s.strip_prefix('-') {
            Some(rest) => (-1i64, rest),
            None => (1i64, s.strip_prefix('+').unwrap_or(s)),
        };
        let (int_part, frac_part) = match digits.split_once('.') {
            Some((i, f)) => (i, f),
            None => (digits, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(bad());
        }
        if frac_part.len() > 15 {
            return Err(bad());
        }
        let int_val: i64 = if int_part.is_empty() { 0 } else { int_part.parse().map_err(|_| bad())? };
        let frac_val: i64 = if frac_part.is_empty() { 0 } else { frac_part.parse().map_err(|_| bad())? };
        let den = 10i64.pow(frac_part.len() as u32);
        Lambda::new(sign * (int_val * den + frac_val), den)
    }

    pub fn value(&self) -> f64 {
        self.0.to_f64().expect("i64 ratio always converts")
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    /// The third coordinate value of a lifted point, `1 + 2 lambda`, exact.
    pub fn one_plus_two(&self) -> Ratio<i64> {
        Ratio::from_integer(1) + self.0 * 2
    }

    pub fn in_range(&self) -> bool {
        let half = Ratio::new(-1, 2);
        self.0 >= half && self.0 <= Ratio::from_integer(0)
    }
}

impl fmt::Display for Lambda {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self.0.denom() == 1 {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Lambda {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// One instance of the construction. Theorem hypotheses (`1 < k < n/2`,
/// `p >= 1` finite, `-1/2 <= lambda <= 0`) are validated by the bound engine,
/// not at construction time, so that rejections can be reported structurally.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Parameters {
    pub n: u32,
    pub k: u32,
    /// Finite exponent only; the `p = infinity` sentinel is accepted by
    /// [`lp_distance`] for oracle experiments but never by the bound engine.
    pub p: f64,
    pub lambda: Lambda,
}

impl Parameters {
    pub fn new(n: u32, k: u32, p: f64, lambda: Lambda) -> Self {
        Parameters { n, k, p, lambda }
    }

    /// Ambient dimension d = C(n, 2).
    pub fn dimension(&self) -> u64 {
        let n = self.n as u64;
        n * (n - 1) / 2
    }

    pub fn k_in_range(&self) -> bool {
        self.k > 1 && 2 * self.k < self.n
    }

    pub fn p_in_range(&self) -> bool {
        self.p.is_finite() && self.p >= 1.0
    }

    pub fn with_lambda(&self, lambda: Lambda) -> Self {
        Parameters { lambda, ..*self }
    }
}

/// A (0,1)-vector; members of `V` have exactly `k` unit coordinates.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CharacteristicVector {
    bits: Vec<u8>,
}

impl CharacteristicVector {
    pub fn from_bits(bits: Vec<u8>) -> Self {
        debug_assert!(bits.iter().all(|&b| b <= 1));
        CharacteristicVector { bits }
    }

    pub fn from_support(n: u32, support: &[u32]) -> Self {
        let mut bits = vec![0u8; n as usize];
        for &i in support {
            bits[i as usize] = 1;
        }
        CharacteristicVector { bits }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bit(&self, i: usize) -> u8 {
        self.bits[i]
    }

    pub fn ones(&self) -> u32 {
        self.bits.iter().map(|&b| b as u32).sum()
    }

    /// Number of common unit coordinates, the `t` of the distance law.
    pub fn intersection(&self, other: &CharacteristicVector) -> u32 {
        self.bits
            .iter()
            .zip(&other.bits)
            .filter(|(&a, &b)| a == 1 && b == 1)
            .count() as u32
    }
}

impl fmt::Display for CharacteristicVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

/// All k-subsets of {1..n} in lexicographic order, as characteristic vectors.
pub fn enumerate_v(n: u32, k: u32) -> Result<Vec<CharacteristicVector>, LiftingError> {
    enumerate_v_capped(n, k, DEFAULT_ENUM_CAP)
}

pub fn enumerate_v_capped(
    n: u32,
    k: u32,
    cap: u64,
) -> Result<Vec<CharacteristicVector>, LiftingError> {
    let count = binomial_exact(n as u64, k as i64);
    if count > BigCount::from(cap) {
        return Err(LiftingError::EnumerationCap { n, k, count, cap });
    }
    if k > n {
        return Ok(Vec::new());
    }
    let mut out = Vec::with_capacity(count.to_usize().unwrap_or(0));
    let k = k as usize;
    let n = n as usize;
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let mut bits = vec![0u8; n];
        for &i in &idx {
            bits[i] = 1;
        }
        out.push(CharacteristicVector { bits });
        // advance to next combination in lexicographic order
        let mut pos = k;
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            if idx[pos] != pos + n - k {
                break;
            }
            if pos == 0 {
                return Ok(out);
            }
        }
        idx[pos] += 1;
        for j in pos + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Lift `x` to the C(n,2) pair coordinates `x_i x_j + lambda (x_i + x_j)`,
/// ordered (1,2),(1,3),...,(1,n),(2,3),...,(n-1,n).
pub fn lift(x: &CharacteristicVector, lambda: Lambda) -> Vec<f64> {
    let n = x.len();
    let lam = lambda.value();
    // The three class values, computed once, so equal classes produce
    // bit-identical coordinates.
    let class = [0.0, lam, 1.0 + 2.0 * lam];
    let mut out = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            out.push(class[(x.bits[i] + x.bits[j]) as usize]);
        }
    }
    out
}

/// The 3x3 census of Table-type pair counts: entry `[r][s]` is the number of
/// coordinate pairs (i,j) where `x_{i,j}` falls in class `r` and `y_{i,j}` in
/// class `s`, classes ordered (0, lambda, 1+2lambda), for any `x, y` in `V`
/// with `|x ∩ y| = t`.
pub fn pair_type_counts(n: u32, k: u32, t: u32) -> Result<[[u64; 3]; 3], LiftingError> {
    if t > k || 2 * k - t > n {
        return Err(LiftingError::PairTypeDomain { n, k, t });
    }
    let n = n as u64;
    let k = k as u64;
    let t = t as u64;
    let c2 = |m: u64| m * m.saturating_sub(1) / 2;
    let out_both = n - 2 * k + t; // coordinates outside both supports
    let only = k - t; // in exactly one support
    Ok([
        [c2(out_both), out_both * only, c2(only)],
        [out_both * only, only * only + t * out_both, t * only],
        [c2(only), t * only, c2(t)],
    ])
}

/// The coefficients of `||x* - y*||_p^p = a t^2 + b t + c` and the parabola
/// vertex `t0 = -b / (2a)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadraticForm {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub t0: f64,
}

impl QuadraticForm {
    pub fn eval(&self, t: f64) -> f64 {
        (self.a * t + self.b) * t + self.c
    }
}

pub fn quadratic_coefficients(params: &Parameters) -> Result<QuadraticForm, LiftingError> {
    let (n, k, p) = (params.n as f64, params.k as f64, params.p);
    let lam = params.lambda.value();
    let pow_l = lam.abs().powf(p);
    let pow_m = (1.0 + lam).abs().powf(p);
    let pow_n = (1.0 + 2.0 * lam).abs().powf(p);
    let a = -2.0 * pow_l - 2.0 * pow_m + pow_n;
    let b = 2.0 * (3.0 * k - n) * pow_l + 2.0 * k * pow_m + (1.0 - 2.0 * k) * pow_n;
    let c = 2.0 * k * (n - 2.0 * k) * pow_l + k * (k - 1.0) * pow_n;
    if a >= 0.0 {
        return Err(LiftingError::NotConcave { a });
    }
    Ok(QuadraticForm { a, b, c, t0: -b / (2.0 * a) })
}

/// `l_p` distance between equal-length vectors. `p = f64::INFINITY` gives the
/// max norm (oracle use only).
pub fn lp_distance(u: &[f64], v: &[f64], p: f64) -> Result<f64, LiftingError> {
    if u.len() != v.len() {
        return Err(LiftingError::LengthMismatch(u.len(), v.len()));
    }
    debug_assert!(p >= 1.0);
    if p.is_infinite() {
        return Ok(u
            .iter()
            .zip(v)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max));
    }
    let sum: f64 = if p == 1.0 {
        u.iter().zip(v).map(|(a, b)| (a - b).abs()).sum()
    } else if p == 2.0 {
        u.iter().zip(v).map(|(a, b)| (a - b) * (a - b)).sum()
    } else {
        u.iter().zip(v).map(|(a, b)| (a - b).abs().powf(p)).sum()
    };
    Ok(match p {
        1.0 => sum,
        2.0 => sum.sqrt(),
        _ => sum.powf(1.0 / p),
    })
}

/// Distance between lifted points sharing `t` units, via the quadratic law.
/// Values in [-1e-6, 0) clamp to 0 (the root at `t = k` is exact only in
/// algebra); anything lower signals inconsistent inputs.
pub fn distance_from_intersection(
    t: u32,
    q: &QuadraticForm,
    p: f64,
) -> Result<f64, LiftingError> {
    let value = q.eval(t as f64);
    if value < -1e-6 {
        return Err(LiftingError::NegativeDistance { t, value });
    }
    Ok(value.max(0.0).powf(1.0 / p))
}

/// The fully materialized lifted point set, for oracle verification.
#[derive(Clone, Debug)]
pub struct LiftedConfiguration {
    pub n: u32,
    pub k: u32,
    pub lambda: Lambda,
    pub vectors: Vec<CharacteristicVector>,
    pub points: Vec<Vec<f64>>,
}

impl LiftedConfiguration {
    pub fn build(n: u32, k: u32, lambda: Lambda) -> Result<Self, LiftingError> {
        Self::build_capped(n, k, lambda, DEFAULT_ENUM_CAP)
    }

    pub fn build_capped(n: u32, k: u32, lambda: Lambda, cap: u64) -> Result<Self, LiftingError> {
        let vectors = enumerate_v_capped(n, k, cap)?;
        let points = vectors.iter().map(|x| lift(x, lambda)).collect();
        Ok(LiftedConfiguration { n, k, lambda, vectors, points })
    }

    /// Ambient dimension C(n, 2).
    pub fn dimension(&self) -> usize {
        let n = self.n as usize;
        n * (n - 1) / 2
    }

    /// Text format: header `n k lambda_num lambda_den`, then one point per
    /// line as space-separated decimal coordinates (shortest round-trip
    /// float formatting, so files are bit-reproducible).
    pub fn write_text(&self, w: &mut impl Write) -> io::Result<()> {
        writeln!(
            w,
            "{} {} {} {}",
            self.n,
            self.k,
            self.lambda.numer(),
            self.lambda.denom()
        )?;
        for point in &self.points {
            let mut first = true;
            for c in point {
                if first {
                    first = false;
                } else {
                    write!(w, " ")?;
                }
                write!(w, "{c}")?;
            }
            writeln!(w)?;
        }
        Ok(())
    }

    /// Parses the text format back. Vectors are re-derived from the canonical
    /// enumeration order; callers compare stored points against fresh lifts.
    pub fn read_text(r: &mut impl BufRead) -> Result<Self, LiftingError> {
        let mut lines = r.lines();
        let header = lines
            .next()
            .ok_or_else(|| LiftingError::ConfigFormat("empty file".into()))??;
        let fields: Vec<&str> = header.split_whitespace().collect();
        if fields.len() != 4 {
            return Err(LiftingError::ConfigFormat(format!(
                "header needs `n k lambda_num lambda_den`, got `{header}`"
            )));
        }
        let parse_err = |what: &str| LiftingError::ConfigFormat(format!("bad {what} in header"));
        let n: u32 = fields[0].parse().map_err(|_| parse_err("n"))?;
        let k: u32 = fields[1].parse().map_err(|_| parse_err("k"))?;
        let num: i64 = fields[2].parse().map_err(|_| parse_err("lambda_num"))?;
        let den: i64 = fields[3].parse().map_err(|_| parse_err("lambda_den"))?;
        let lambda = Lambda::new(num, den)?;
        let d = (n as usize) * (n as usize - 1) / 2;
        let mut points = Vec::new();
        for line in lines {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let coords: Result<Vec<f64>, _> =
                line.split_whitespace().map(|s| s.parse::<f64>()).collect();
            let coords =
                coords.map_err(|_| LiftingError::ConfigFormat(format!("bad point `{line}`")))?;
            if coords.len() != d {
                return Err(LiftingError::ConfigFormat(format!(
                    "point has {} coordinates, expected {d}",
                    coords.len()
                )));
            }
            points.push(coords);
        }
        let vectors = enumerate_v(n, k)?;
        if vectors.len() != points.len() {
            return Err(LiftingError::ConfigFormat(format!(
                "{} points stored, C({n},{k}) = {} expected",
                points.len(),
                vectors.len()
            )));
        }
        Ok(LiftedConfiguration { n, k, lambda, vectors, points })
    }
}
