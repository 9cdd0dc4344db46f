//! Exact arithmetic in ℤ[ζ_m].
//!
//! A [`CyclotomicInt`] is stored as `Σ c_k ζ_m^k` with `m` coefficients.
//! That representation is not unique; equality and the zero test reduce
//! modulo the cyclotomic polynomial `Φ_m`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use crate::group::{gcd, lcm};

fn divisors(m: usize) -> Vec<usize> {
    (1..=m).filter(|d| m.is_multiple_of(*d)).collect()
}

/// Exact quotient of `num` by a monic `den` (coefficients low to high).
fn div_exact_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qlen = rem.len() - dd;
    let mut quot = vec![0i64; qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dd];
        quot[i] = c;
        if c != 0 {
            for (j, &d) in den.iter().enumerate() {
                rem[i + j] -= c * d;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0), "division is not exact");
    quot
}

/// `Φ_m`, coefficients low to high. Computed by dividing `x^m − 1` by `Φ_d`
/// for every proper divisor `d` of `m`; cached per conductor.
pub fn cyclotomic_polynomial(m: usize) -> Arc<Vec<i64>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<i64>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&m) {
        return p.clone();
    }
    let mut poly = vec![0i64; m + 1];
    poly[0] = -1;
    poly[m] = 1;
    for d in divisors(m) {
        if d < m {
            poly = div_exact_monic(&poly, &cyclotomic_polynomial(d));
        }
    }
    let poly = Arc::new(poly);
    cache.lock().unwrap().insert(m, poly.clone());
    poly
}

/// Remainder of `coeffs` modulo the monic `modulus`.
fn reduce_mod(coeffs: &[i64], modulus: &[i64]) -> Vec<i64> {
    let deg = modulus.len() - 1;
    let mut rem = coeffs.to_vec();
    for i in (deg..rem.len()).rev() {
        let c = rem[i];
        if c != 0 {
            for (j, &d) in modulus.iter().enumerate() {
                rem[i - deg + j] -= c * d;
            }
        }
    }
    rem.truncate(deg);
    rem
}

#[derive(Clone)]
pub struct CyclotomicInt {
    conductor: usize,
    coeffs: Vec<i64>,
}

impl CyclotomicInt {
    pub fn new(conductor: usize, coeffs: Vec<i64>) -> CyclotomicInt {
        assert!(conductor > 0, "conductor must be positive");
        assert_eq!(coeffs.len(), conductor, "need one coefficient per power of ζ_m");
        CyclotomicInt { conductor, coeffs }
    }

    pub fn from_int(k: i64) -> CyclotomicInt {
        CyclotomicInt::new(1, vec![k])
    }

    pub fn zero() -> CyclotomicInt {
        CyclotomicInt::from_int(0)
    }

    /// `ζ_m^k`.
    pub fn root_of_unity(m: usize, k: usize) -> CyclotomicInt {
        let mut coeffs = vec![0; m];
        coeffs[k % m] = 1;
        CyclotomicInt::new(m, coeffs)
    }

    pub fn conductor(&self) -> usize {
        self.conductor
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Rewrites the value over a multiple of its conductor.
    pub fn lift(&self, conductor: usize) -> CyclotomicInt {
        assert_eq!(
            conductor % self.conductor,
            0,
            "can only lift to a multiple of the conductor"
        );
        let step = conductor / self.conductor;
        let mut coeffs = vec![0; conductor];
        for (k, &c) in self.coeffs.iter().enumerate() {
            coeffs[k * step] = c;
        }
        CyclotomicInt::new(conductor, coeffs)
    }

    /// Canonical coefficients: the remainder modulo `Φ_m`, of length `φ(m)`.
    pub fn reduced(&self) -> Vec<i64> {
        reduce_mod(&self.coeffs, &cyclotomic_polynomial(self.conductor))
    }

    pub fn is_zero(&self) -> bool {
        if self.coeffs.iter().all(|&c| c == 0) {
            return true;
        }
        self.reduced().iter().all(|&c| c == 0)
    }

    /// Complex conjugate: `ζ^k ↦ ζ^{-k}`.
    pub fn conj(&self) -> CyclotomicInt {
        let m = self.conductor;
        let mut coeffs = vec![0; m];
        for (k, &c) in self.coeffs.iter().enumerate() {
            coeffs[(m - k) % m] = c;
        }
        CyclotomicInt::new(m, coeffs)
    }

    pub fn scale(&self, k: i64) -> CyclotomicInt {
        CyclotomicInt::new(self.conductor, self.coeffs.iter().map(|&c| c * k).collect())
    }

    /// If the value is an integer multiple `d·ζ_m^k` of a root of unity with
    /// the given `d`, returns `k/m` as a reduced [`Root`].
    pub fn as_multiple_of_root(&self, d: i64) -> Option<Root> {
        let m = self.conductor;
        (0..m)
            .find(|&k| (self - &CyclotomicInt::root_of_unity(m, k).scale(d)).is_zero())
            .map(|k| Root::new(k as u64, m as u64))
    }

    /// `|z|²` as an element of the same ring.
    pub fn norm_squared(&self) -> CyclotomicInt {
        self * &self.conj()
    }

    /// Floating-point value, for display and sanity checks only.
    pub fn to_complex(&self) -> (f64, f64) {
        let m = self.conductor as f64;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .fold((0.0, 0.0), |(re, im), (k, &c)| {
                let theta = 2.0 * std::f64::consts::PI * k as f64 / m;
                (re + c as f64 * theta.cos(), im + c as f64 * theta.sin())
            })
    }

    fn nonzero(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| (k, c))
    }

    fn combine(&self, other: &CyclotomicInt, sign: i64) -> CyclotomicInt {
        let m = lcm(self.conductor, other.conductor);
        let mut coeffs = vec![0; m];
        let (sa, sb) = (m / self.conductor, m / other.conductor);
        for (k, c) in self.nonzero() {
            coeffs[k * sa] += c;
        }
        for (k, c) in other.nonzero() {
            coeffs[k * sb] += sign * c;
        }
        CyclotomicInt::new(m, coeffs)
    }
}

impl fmt::Debug for CyclotomicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Dump format `m:c_0,c_1,...,c_{m-1}`.
impl fmt::Display for CyclotomicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.conductor)?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseCyclotomicError(pub String);

impl fmt::Display for ParseCyclotomicError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid cyclotomic value: {}", self.0)
    }
}

impl std::error::Error for ParseCyclotomicError {}

impl FromStr for CyclotomicInt {
    type Err = ParseCyclotomicError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseCyclotomicError(s.to_string());
        let (m, rest) = s.split_once(':').ok_or_else(err)?;
        let m: usize = m.parse().map_err(|_| err())?;
        let coeffs = rest
            .split(',')
            .map(|t| t.parse::<i64>().map_err(|_| err()))
            .collect::<Result<Vec<_>, _>>()?;
        if m == 0 || coeffs.len() != m {
            return Err(err());
        }
        Ok(CyclotomicInt::new(m, coeffs))
    }
}

impl PartialEq for CyclotomicInt {
    fn eq(&self, other: &Self) -> bool {
        (self - other).is_zero()
    }
}

impl Eq for CyclotomicInt {}

impl std::ops::Add for &CyclotomicInt {
    type Output = CyclotomicInt;
    fn add(self, rhs: &CyclotomicInt) -> CyclotomicInt {
        self.combine(rhs, 1)
    }
}

impl std::ops::Sub for &CyclotomicInt {
    type Output = CyclotomicInt;
    fn sub(self, rhs: &CyclotomicInt) -> CyclotomicInt {
        self.combine(rhs, -1)
    }
}

impl std::ops::Neg for &CyclotomicInt {
    type Output = CyclotomicInt;
    fn neg(self) -> CyclotomicInt {
        self.scale(-1)
    }
}

impl std::ops::Mul for &CyclotomicInt {
    type Output = CyclotomicInt;
    fn mul(self, rhs: &CyclotomicInt) -> CyclotomicInt {
        let m = lcm(self.conductor, rhs.conductor);
        let (sa, sb) = (m / self.conductor, m / rhs.conductor);
        let mut coeffs = vec![0; m];
        for (i, a) in self.nonzero() {
            for (j, b) in rhs.nonzero() {
                coeffs[(i * sa + j * sb) % m] += a * b;
            }
        }
        CyclotomicInt::new(m, coeffs)
    }
}

/// Dense accumulator for sums of products over a fixed conductor, used by
/// the orthogonality checks.
pub(crate) struct Accumulator {
    conductor: usize,
    coeffs: Vec<i64>,
}

impl Accumulator {
    pub(crate) fn new(conductor: usize) -> Accumulator {
        Accumulator {
            conductor,
            coeffs: vec![0; conductor],
        }
    }

    /// Adds `weight · a · conj(b)`.
    pub(crate) fn add_product_conj(&mut self, weight: i64, a: &CyclotomicInt, b: &CyclotomicInt) {
        let m = self.conductor;
        let (sa, sb) = (m / a.conductor, m / b.conductor);
        for (i, x) in a.nonzero() {
            for (j, y) in b.nonzero() {
                let idx = (i * sa + m - (j * sb) % m) % m;
                self.coeffs[idx] += weight * x * y;
            }
        }
    }

    pub(crate) fn add_int(&mut self, k: i64) {
        self.coeffs[0] += k;
    }

    pub(crate) fn into_value(self) -> CyclotomicInt {
        CyclotomicInt::new(self.conductor, self.coeffs)
    }
}

/// A root of unity `exp(2πi·num/den)` stored as a reduced fraction in [0, 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    num: u64,
    den: u64,
}

impl Root {
    pub fn new(num: u64, den: u64) -> Root {
        assert!(den > 0);
        let num = num % den;
        let g = gcd(num as usize, den as usize) as u64;
        Root {
            num: num / g,
            den: den / g,
        }
    }

    pub fn one() -> Root {
        Root { num: 0, den: 1 }
    }

    pub fn is_one(&self) -> bool {
        self.num == 0
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    /// Multiplicative order.
    pub fn order(&self) -> u64 {
        self.den
    }
}

impl std::ops::Mul for Root {
    type Output = Root;

    fn mul(self, other: Root) -> Root {
        let den = lcm(self.den as usize, other.den as usize) as u64;
        Root::new(self.num * (den / self.den) + other.num * (den / other.den), den)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            write!(f, "1")
        } else {
            write!(f, "e({}/{})", self.num, self.den)
        }
    }
}
