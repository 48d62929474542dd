use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::Matrix;
use super::rational::{format_rational, rational_to_f64, Rational};
use crate::error::{Error, Result};

/// An element `Σ a_k ζ_N^k` of the cyclotomic field `Q(ζ_N)`.
///
/// Values are kept in the raw power basis: exponents are reduced mod `N` and
/// zero coefficients dropped, but no reduction modulo the cyclotomic polynomial
/// is applied to the stored terms. Equality lifts both operands to the lcm
/// conductor and tests the difference for zero by polynomial remainder
/// modulo `Φ_N`.
#[derive(Clone)]
pub struct Cyclotomic {
    conductor: u32,
    terms: BTreeMap<u32, Rational>,
}

/// Returns `-cos(π/m)` exactly; `None` stands for the label ∞ and yields `-1`.
pub fn cyc_real_cos(m: Option<u32>) -> Result<Cyclotomic> {
    match m {
        None => Ok(Cyclotomic::from_int(-1)),
        Some(m) if m < 2 => Err(Error::InvalidLabel(m)),
        Some(m) => {
            let n = 2 * m;
            let half = Rational::new((-1).into(), 2.into());
            let v = Cyclotomic::new(n, [(1, half.clone()), (n - 1, half)]);
            Ok(v.simplify())
        }
    }
}

impl Cyclotomic {
    /// Builds `Σ c ζ_N^k` from `(k, c)` pairs; exponents are taken mod `N`.
    pub fn new(conductor: u32, terms: impl IntoIterator<Item = (u32, Rational)>) -> Self {
        assert!(conductor > 0, "conductor must be positive");
        let mut map = BTreeMap::new();
        for (k, c) in terms {
            accumulate(&mut map, k % conductor, c);
        }
        Cyclotomic { conductor, terms: map }
    }

    pub fn zero() -> Self {
        Cyclotomic { conductor: 1, terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n.into()))
    }

    pub fn from_rational(q: Rational) -> Self {
        Self::new(1, [(0, q)])
    }

    /// `ζ_N^k`.
    pub fn zeta(conductor: u32, k: i64) -> Self {
        let k = k.rem_euclid(conductor as i64) as u32;
        Self::new(conductor, [(k, Rational::one())])
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Raw `(exponent, coefficient)` terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &Rational)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    /// Re-expresses the value with conductor `n`, which must be a multiple of
    /// the current conductor.
    pub fn lift(&self, n: u32) -> Self {
        assert!(n.is_multiple_of(self.conductor), "{n} is not a multiple of {}", self.conductor);
        let step = n / self.conductor;
        Cyclotomic {
            conductor: n,
            terms: self.terms.iter().map(|(k, c)| (k * step, c.clone())).collect(),
        }
    }

    /// Complex conjugation, `ζ ↦ ζ⁻¹`.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    /// The Galois automorphism `ζ_N ↦ ζ_N^k`; `k` must be coprime to `N`.
    pub fn galois(&self, k: i64) -> Self {
        let n = self.conductor as i64;
        Self::new(
            self.conductor,
            self.terms
                .iter()
                .map(|(e, c)| (((*e as i64) * k).rem_euclid(n) as u32, c.clone())),
        )
    }

    /// Coefficients of the remainder modulo `Φ_N`, a vector of length `φ(N)`.
    pub fn reduced_coefficients(&self) -> Vec<Rational> {
        let n = self.conductor as usize;
        let phi = cyclotomic_polynomial(self.conductor);
        let d = phi.len() - 1;
        let mut poly = vec![Rational::zero(); n.max(d)];
        for (k, c) in &self.terms {
            poly[*k as usize] += c;
        }
        for deg in (d..poly.len()).rev() {
            if poly[deg].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut poly[deg]);
            for (i, p) in phi.iter().enumerate().take(d) {
                if *p != 0 {
                    poly[deg - d + i] -= &c * Rational::from_integer((*p).into());
                }
            }
        }
        poly.truncate(d);
        poly
    }

    pub fn is_zero(&self) -> bool {
        if self.terms.is_empty() {
            return true;
        }
        if self.conductor == 1 || self.terms.keys().all(|k| *k == 0) {
            return false;
        }
        self.reduced_coefficients().iter().all(Zero::is_zero)
    }

    /// The value as a rational number, if it is one.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.terms.is_empty() {
            return Some(Rational::zero());
        }
        if self.terms.keys().all(|k| *k == 0) {
            return self.terms.get(&0).cloned();
        }
        let red = self.reduced_coefficients();
        red[1..].iter().all(Zero::is_zero).then(|| red[0].clone())
    }

    /// Real part of the value at `ζ_N = e^{2πi/N}`.
    pub fn to_f64(&self) -> f64 {
        let n = self.conductor as f64;
        self.terms
            .iter()
            .map(|(k, c)| rational_to_f64(c) * (std::f64::consts::TAU * (*k as f64) / n).cos())
            .sum()
    }

    /// Imaginary part of the value at `ζ_N = e^{2πi/N}`.
    pub fn imag_f64(&self) -> f64 {
        let n = self.conductor as f64;
        self.terms
            .iter()
            .map(|(k, c)| rational_to_f64(c) * (std::f64::consts::TAU * (*k as f64) / n).sin())
            .sum()
    }

    /// Sign of a real value: exact zero test first, then the float value
    /// with tolerance `1e-9`. Returns `None` if the value is not real or the
    /// float is too close to zero to decide.
    pub fn real_sign(&self) -> Option<std::cmp::Ordering> {
        use std::cmp::Ordering;
        if self.is_zero() {
            return Some(Ordering::Equal);
        }
        if let Some(q) = self.as_rational() {
            return Some(if q.is_positive() { Ordering::Greater } else { Ordering::Less });
        }
        if *self != self.conj() {
            return None;
        }
        let v = self.to_f64();
        if v > 1e-9 {
            Some(Ordering::Greater)
        } else if v < -1e-9 {
            Some(Ordering::Less)
        } else {
            None
        }
    }

    /// Multiplicative inverse, by solving `x·y = 1` over the power basis of `Q(ζ_N)`.
    pub fn inv(&self) -> Option<Self> {
        if let Some(q) = self.as_rational() {
            if q.is_zero() {
                return None;
            }
            return Some(Self::from_rational(q.recip()));
        }
        let n = self.conductor;
        let d = cyclotomic_polynomial(n).len() - 1;
        let mut m = Matrix::<Rational>::zeros(d, d);
        for j in 0..d {
            let col = (self * &Self::zeta(n, j as i64)).reduced_coefficients();
            for (i, c) in col.into_iter().enumerate() {
                m.set(i, j, c);
            }
        }
        let mut rhs = vec![Rational::zero(); d];
        rhs[0] = Rational::one();
        let y = m.solve(&rhs)?;
        Some(Self::new(n, y.into_iter().enumerate().map(|(k, c)| (k as u32, c))).simplify())
    }

    /// A shorter representation of the same value: rationals drop to
    /// conductor 1 and common factors of the exponents shrink the conductor.
    pub fn simplify(&self) -> Self {
        if let Some(q) = self.as_rational() {
            return Self::from_rational(q);
        }
        let g = self
            .terms
            .keys()
            .fold(self.conductor, |acc, k| acc.gcd(k));
        if g > 1 {
            Cyclotomic {
                conductor: self.conductor / g,
                terms: self.terms.iter().map(|(k, c)| (k / g, c.clone())).collect(),
            }
        } else {
            self.clone()
        }
    }

    fn binary(&self, rhs: &Self, f: impl Fn(&mut BTreeMap<u32, Rational>, u32, Rational)) -> Self {
        let n = self.conductor.lcm(&rhs.conductor);
        let mut out = self.lift(n).terms;
        for (k, c) in rhs.lift(n).terms {
            f(&mut out, k, c);
        }
        Cyclotomic { conductor: n, terms: out }
    }
}

fn accumulate(map: &mut BTreeMap<u32, Rational>, k: u32, c: Rational) {
    if c.is_zero() {
        return;
    }
    let e = map.entry(k).or_insert_with(Rational::zero);
    *e += c;
    if e.is_zero() {
        map.remove(&k);
    }
}

/// Integer coefficients of the `n`-th cyclotomic polynomial, lowest degree first.
pub(crate) fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Vec<i64>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by Φ_d for every proper divisor d.
    let mut p = vec![0i64; n as usize + 1];
    p[0] = -1;
    p[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            p = divide_monic(&p, &cyclotomic_polynomial(d));
        }
    }
    cache.lock().unwrap().insert(n, p.clone());
    p
}

fn divide_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let mut q = vec![0i64; num.len() - dn];
    for i in (0..q.len()).rev() {
        let c = rem[i + dn];
        q[i] = c;
        if c != 0 {
            for (j, dc) in den.iter().enumerate() {
                rem[i + j] -= c * dc;
            }
        }
    }
    debug_assert!(rem.iter().all(|c| *c == 0), "inexact cyclotomic division");
    q
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        (self - other).is_zero()
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic({self})")
    }
}

/// Text form: `0`, a rational such as `-1/2`, or a sum of terms `c*zN^k`
/// (`z5+z5^4`, `-1/2*z8-1/2*z8^7`). A coefficient of 1 is omitted, `-1`
/// prints as a bare `-`, and `^1` is omitted.
impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.simplify();
        if v.terms.is_empty() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (k, c) in &v.terms {
            let term = if *k == 0 {
                format_rational(c)
            } else {
                let atom = if *k == 1 {
                    format!("z{}", v.conductor)
                } else {
                    format!("z{}^{}", v.conductor, k)
                };
                if c.is_one() {
                    atom
                } else if (-c).is_one() {
                    format!("-{atom}")
                } else {
                    format!("{}*{atom}", format_rational(c))
                }
            };
            if !out.is_empty() && !term.starts_with('-') {
                out.push('+');
            }
            out.push_str(&term);
        }
        f.write_str(&out)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse cyclotomic value {0:?}")]
pub struct ParseCyclotomicError(pub String);

impl FromStr for Cyclotomic {
    type Err = ParseCyclotomicError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let err = || ParseCyclotomicError(s.to_string());
        let s = s.trim();
        if s.is_empty() {
            return Err(err());
        }
        let mut terms = Vec::new();
        let mut start = 0;
        for (i, ch) in s.char_indices() {
            if (ch == '+' || ch == '-') && i > start {
                terms.push(&s[start..i]);
                start = i;
            }
        }
        terms.push(&s[start..]);
        let mut acc = Cyclotomic::zero();
        for t in terms {
            acc = &acc + &parse_term(t).ok_or_else(err)?;
        }
        Ok(acc)
    }
}

fn parse_term(t: &str) -> Option<Cyclotomic> {
    let (neg, body) = match t.as_bytes().first()? {
        b'-' => (true, &t[1..]),
        b'+' => (false, &t[1..]),
        _ => (false, t),
    };
    let (coef, atom) = match body.find('z') {
        None => (body, None),
        Some(0) => ("1", Some(&body[1..])),
        Some(i) => (body[..i].strip_suffix('*')?, Some(&body[i + 1..])),
    };
    let mut coef = parse_rational(coef)?;
    if neg {
        coef = -coef;
    }
    match atom {
        None => Some(Cyclotomic::from_rational(coef)),
        Some(a) => {
            let (n, k) = match a.split_once('^') {
                Some((n, k)) => (n.parse::<u32>().ok()?, k.parse::<u32>().ok()?),
                None => (a.parse::<u32>().ok()?, 1),
            };
            if n == 0 {
                return None;
            }
            Some(Cyclotomic::new(n, [(k, coef)]))
        }
    }
}

fn parse_rational(s: &str) -> Option<Rational> {
    if s.is_empty() || s.starts_with(['+', '-']) {
        return None;
    }
    match s.split_once('/') {
        Some((n, d)) => {
            let n: num_bigint::BigInt = n.parse().ok()?;
            let d: num_bigint::BigInt = d.parse().ok()?;
            (!d.is_zero()).then(|| Rational::new(n, d))
        }
        None => Some(Rational::from_integer(s.parse().ok()?)),
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&Cyclotomic> for &Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: &Cyclotomic) -> Cyclotomic {
                $body(self, rhs)
            }
        }
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic {
                $body(&self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &Cyclotomic, b: &Cyclotomic| a.binary(b, accumulate));
forward_binop!(Sub, sub, |a: &Cyclotomic, b: &Cyclotomic| a
    .binary(b, |m: &mut BTreeMap<u32, Rational>, k, c: Rational| accumulate(m, k, -c)));
forward_binop!(Mul, mul, |a: &Cyclotomic, b: &Cyclotomic| {
    let n = a.conductor.lcm(&b.conductor);
    let (x, y) = (a.lift(n), b.lift(n));
    let mut out = BTreeMap::new();
    for (i, c) in &x.terms {
        for (j, d) in &y.terms {
            accumulate(&mut out, (i + j) % n, c * d);
        }
    }
    Cyclotomic { conductor: n, terms: out }
});

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl From<Rational> for Cyclotomic {
    fn from(q: Rational) -> Self {
        Cyclotomic::from_rational(q)
    }
}

impl From<i64> for Cyclotomic {
    fn from(n: i64) -> Self {
        Cyclotomic::from_int(n)
    }
}

impl std::iter::Sum for Cyclotomic {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Cyclotomic::zero(), |a, b| &a + &b)
    }
}
