//! Exact scalar arithmetic over the rationals, prime fields and cyclotomic
//! fields Q(zeta_N) = Q[t]/Phi_N(t).
//!
//! Every scalar knows which field it lives in; mixing scalars from different
//! fields is a programming error and panics in the arithmetic operators.
//! Boundary code (parsers, table validation) checks fields explicitly and
//! reports [`Error::FieldMismatch`] instead.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Largest cyclotomic order accepted; keeps Phi_N degrees at desk scale.
pub const MAX_CYCLOTOMIC_ORDER: u32 = 1000;

/// Description of the coefficient field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    /// The rational numbers.
    Rational,
    /// The prime field F_p, p < 2^31 and prime.
    PrimeField(u32),
    /// Q(zeta_N) realized as Q[t]/Phi_N(t); the distinguished root is the
    /// class of t.
    Cyclotomic(u32),
}

impl FieldSpec {
    pub fn rational() -> Self {
        FieldSpec::Rational
    }

    /// Prime field constructor with a deterministic primality check.
    pub fn prime(p: u32) -> Result<Self> {
        if p >= 1 << 31 {
            return Err(Error::InvalidField(format!("p = {p} is not < 2^31")));
        }
        if !is_prime_u32(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        Ok(FieldSpec::PrimeField(p))
    }

    pub fn cyclotomic(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidField("cyclotomic order must be >= 1".into()));
        }
        if n > MAX_CYCLOTOMIC_ORDER {
            return Err(Error::ResourceLimit(format!(
                "cyclotomic order {n} exceeds the supported maximum {MAX_CYCLOTOMIC_ORDER}"
            )));
        }
        Ok(FieldSpec::Cyclotomic(n))
    }

    /// Field characteristic; 0 for Q and Q(zeta_N).
    pub fn characteristic(&self) -> u32 {
        match self {
            FieldSpec::PrimeField(p) => *p,
            _ => 0,
        }
    }

    /// Degree of the field over its prime field (phi(N) for cyclotomics).
    pub fn extension_degree(&self) -> usize {
        match self {
            FieldSpec::Cyclotomic(n) => euler_phi(*n) as usize,
            _ => 1,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Rational => Scalar::Rational(BigRational::zero()),
            FieldSpec::PrimeField(p) => Scalar::Prime { p: *p, value: 0 },
            FieldSpec::Cyclotomic(n) => Scalar::Cyclotomic {
                n: *n,
                coeffs: vec![BigRational::zero(); euler_phi(*n) as usize],
            },
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self {
            FieldSpec::Rational => Scalar::Rational(BigRational::from(BigInt::from(v))),
            FieldSpec::PrimeField(p) => {
                let m = v.rem_euclid(*p as i64) as u32;
                Scalar::Prime { p: *p, value: m }
            }
            FieldSpec::Cyclotomic(n) => {
                let mut coeffs = vec![BigRational::zero(); euler_phi(*n) as usize];
                if coeffs.is_empty() {
                    // phi(1) = 0 cannot happen: phi(n) >= 1 for n >= 1
                    unreachable!("phi(n) >= 1");
                }
                coeffs[0] = BigRational::from(BigInt::from(v));
                Scalar::Cyclotomic { n: *n, coeffs }
            }
        }
    }

    pub fn from_rational(&self, q: BigRational) -> Result<Scalar> {
        match self {
            FieldSpec::Rational => Ok(Scalar::Rational(q)),
            FieldSpec::PrimeField(p) => {
                let num = reduce_bigint_mod(q.numer(), *p);
                let den = reduce_bigint_mod(q.denom(), *p);
                if den == 0 {
                    return Err(Error::parse(format!(
                        "denominator divisible by {p} in prime-field scalar"
                    )));
                }
                let inv = mod_inverse(den, *p).ok_or(Error::DivisionByZero)?;
                Ok(Scalar::Prime {
                    p: *p,
                    value: mod_mul(num, inv, *p),
                })
            }
            FieldSpec::Cyclotomic(n) => {
                let mut coeffs = vec![BigRational::zero(); euler_phi(*n) as usize];
                coeffs[0] = q;
                Ok(Scalar::Cyclotomic { n: *n, coeffs })
            }
        }
    }

    /// The distinguished root of unity zeta_N (class of t); `None` for Q and F_p.
    pub fn generator(&self) -> Option<Scalar> {
        match self {
            FieldSpec::Cyclotomic(n) => Some(cyclotomic_from_power(*n, 1)),
            _ => None,
        }
    }

    /// Assemble a cyclotomic scalar from rational power-basis coordinates
    /// (padded or reduced mod Phi_N as needed).
    pub fn from_generator_coords(&self, coords: &[BigRational]) -> Result<Scalar> {
        match self {
            FieldSpec::Cyclotomic(n) => {
                let mut v = coords.to_vec();
                let phi = euler_phi(*n) as usize;
                if v.len() < phi {
                    v.resize(phi, BigRational::zero());
                }
                Ok(Scalar::Cyclotomic {
                    n: *n,
                    coeffs: reduce_mod_cyclotomic(*n, v),
                })
            }
            _ => Err(Error::Unsupported(format!(
                "generator coordinates only exist over a cyclotomic field, not {self}"
            ))),
        }
    }

    /// Parse a scalar in the text syntax of this field.
    ///
    /// Rationals: `-3/4`; prime-field residues: `2`; cyclotomic elements:
    /// `1/2*z^2 - 1` where `z` (or `zeta`) denotes zeta_N.
    pub fn parse_scalar(&self, s: &str) -> Result<Scalar> {
        parse_scalar_str(self, s)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "Q"),
            FieldSpec::PrimeField(p) => write!(f, "F_{p}"),
            FieldSpec::Cyclotomic(n) => write!(f, "Q(zeta_{n})"),
        }
    }
}

/// An exact field element. The representation matches the field:
/// a reduced fraction, a residue in `[0, p)`, or a polynomial of degree
/// `< phi(N)` in the class of `t`, reduced mod `Phi_N`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Prime { p: u32, value: u32 },
    Cyclotomic { n: u32, coeffs: Vec<BigRational> },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rational,
            Scalar::Prime { p, .. } => FieldSpec::PrimeField(*p),
            Scalar::Cyclotomic { n, .. } => FieldSpec::Cyclotomic(*n),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Prime { value, .. } => *value == 0,
            Scalar::Cyclotomic { coeffs, .. } => coeffs.iter().all(|c| c.is_zero()),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Prime { value, .. } => *value == 1,
            Scalar::Cyclotomic { coeffs, .. } => {
                coeffs[0].is_one() && coeffs[1..].iter().all(|c| c.is_zero())
            }
        }
    }

    /// Multiplicative inverse; `Err(DivisionByZero)` on zero.
    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match self {
            Scalar::Rational(q) => Ok(Scalar::Rational(q.recip())),
            Scalar::Prime { p, value } => {
                let inv = mod_inverse(*value, *p).ok_or(Error::DivisionByZero)?;
                Ok(Scalar::Prime { p: *p, value: inv })
            }
            Scalar::Cyclotomic { n, coeffs } => {
                let inv = cyclotomic_inverse(*n, coeffs)?;
                Ok(Scalar::Cyclotomic { n: *n, coeffs: inv })
            }
        }
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        Ok(self * &other.inv()?)
    }

    /// Nonnegative integer power by repeated squaring.
    pub fn pow(&self, mut e: u64) -> Scalar {
        let field = self.field();
        let mut base = self.clone();
        let mut acc = field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Multiplicative order if finite and at most `limit`.
    pub fn multiplicative_order(&self, limit: u64) -> Option<u64> {
        if self.is_zero() {
            return None;
        }
        let mut acc = self.clone();
        for k in 1..=limit {
            if acc.is_one() {
                return Some(k);
            }
            acc = &acc * self;
        }
        None
    }

    /// Total order used only for deterministic sorting of output.
    pub fn canonical_cmp(&self, other: &Scalar) -> Ordering {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => a.cmp(b),
            (Scalar::Prime { value: a, .. }, Scalar::Prime { value: b, .. }) => a.cmp(b),
            (Scalar::Cyclotomic { coeffs: a, .. }, Scalar::Cyclotomic { coeffs: b, .. }) => {
                a.cmp(b)
            }
            _ => panic!("canonical_cmp across fields"),
        }
    }

    /// The underlying rational, for `Rational` scalars.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(q) => Some(q),
            _ => None,
        }
    }

    /// Rational coordinates over the power basis 1, zeta, ..., zeta^(phi-1),
    /// for cyclotomic scalars.
    pub fn generator_coords(&self) -> Option<&[BigRational]> {
        match self {
            Scalar::Cyclotomic { coeffs, .. } => Some(coeffs),
            _ => None,
        }
    }

    /// If the element is `q * zeta^k` for a single power `k`, return `(q, k)`.
    /// Rationals and prime residues report power 0.
    pub fn as_single_generator_term(&self) -> Option<(String, u32)> {
        match self {
            Scalar::Rational(_) | Scalar::Prime { .. } => Some((self.to_string(), 0)),
            Scalar::Cyclotomic { coeffs, .. } => {
                let nonzero: Vec<usize> = (0..coeffs.len())
                    .filter(|&i| !coeffs[i].is_zero())
                    .collect();
                match nonzero.len() {
                    0 => Some(("0".to_string(), 0)),
                    1 => {
                        let i = nonzero[0];
                        Some((format_rational(&coeffs[i]), i as u32))
                    }
                    _ => None,
                }
            }
        }
    }

    fn assert_same_field(&self, other: &Scalar) {
        debug_assert_eq!(
            self.field(),
            other.field(),
            "scalar arithmetic across distinct fields"
        );
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.assert_same_field(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Prime { p, value: a }, Scalar::Prime { value: b, .. }) => Scalar::Prime {
                p: *p,
                value: ((*a as u64 + *b as u64) % (*p as u64)) as u32,
            },
            (Scalar::Cyclotomic { n, coeffs: a }, Scalar::Cyclotomic { coeffs: b, .. }) => {
                Scalar::Cyclotomic {
                    n: *n,
                    coeffs: a.iter().zip(b.iter()).map(|(x, y)| x + y).collect(),
                }
            }
            _ => panic!("scalar addition across fields"),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Prime { p, value } => Scalar::Prime {
                p: *p,
                value: if *value == 0 { 0 } else { p - value },
            },
            Scalar::Cyclotomic { n, coeffs } => Scalar::Cyclotomic {
                n: *n,
                coeffs: coeffs.iter().map(|c| -c).collect(),
            },
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.assert_same_field(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Prime { p, value: a }, Scalar::Prime { value: b, .. }) => Scalar::Prime {
                p: *p,
                value: mod_mul(*a, *b, *p),
            },
            (Scalar::Cyclotomic { n, coeffs: a }, Scalar::Cyclotomic { coeffs: b, .. }) => {
                let phi = a.len();
                let mut prod = vec![BigRational::zero(); 2 * phi.max(1) - 1];
                for (i, x) in a.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    for (j, y) in b.iter().enumerate() {
                        if y.is_zero() {
                            continue;
                        }
                        prod[i + j] = &prod[i + j] + &(x * y);
                    }
                }
                let coeffs = reduce_mod_cyclotomic(*n, prod);
                Scalar::Cyclotomic { n: *n, coeffs }
            }
            _ => panic!("scalar multiplication across fields"),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_scalar(self, "z"))
    }
}

/// Render a scalar with a chosen symbol for the cyclotomic generator
/// (`z` in scalar-only contexts, `zeta` inside polynomial strings).
pub fn format_scalar(s: &Scalar, gen_symbol: &str) -> String {
    match s {
        Scalar::Rational(q) => format_rational(q),
        Scalar::Prime { value, .. } => value.to_string(),
        Scalar::Cyclotomic { coeffs, .. } => {
            let mut out = String::new();
            for i in (0..coeffs.len()).rev() {
                let c = &coeffs[i];
                if c.is_zero() {
                    continue;
                }
                let mag = c.abs();
                let negative = c.is_negative();
                if out.is_empty() {
                    if negative {
                        out.push('-');
                    }
                } else if negative {
                    out.push_str(" - ");
                } else {
                    out.push_str(" + ");
                }
                let power = if i == 0 {
                    String::new()
                } else if i == 1 {
                    gen_symbol.to_string()
                } else {
                    format!("{gen_symbol}^{i}")
                };
                if power.is_empty() {
                    out.push_str(&format_rational(&mag));
                } else if mag.is_one() {
                    out.push_str(&power);
                } else {
                    out.push_str(&format!("{}*{}", format_rational(&mag), power));
                }
            }
            if out.is_empty() {
                out.push('0');
            }
            out
        }
    }
}

fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn reduce_bigint_mod(v: &BigInt, p: u32) -> u32 {
    let m = v % BigInt::from(p);
    let m = if m.is_negative() {
        m + BigInt::from(p)
    } else {
        m
    };
    // fits: 0 <= m < p < 2^31
    let digits = m.to_u32_digits();
    if digits.1.is_empty() {
        0
    } else {
        digits.1[0]
    }
}

fn mod_mul(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

/// Inverse mod p by the extended Euclidean algorithm.
fn mod_inverse(a: u32, p: u32) -> Option<u32> {
    if a == 0 {
        return None;
    }
    let (mut r0, mut r1) = (p as i64, a as i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(t0.rem_euclid(p as i64) as u32)
}

/// Deterministic primality by trial division (p < 2^31, so sqrt(p) < 46341).
pub fn is_prime_u32(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut d = 3u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Euler's totient via trial-division factorization.
pub fn euler_phi(n: u32) -> u32 {
    let mut n = n;
    let mut phi = n;
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n.is_multiple_of(d) {
            phi = phi / d * (d - 1);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        phi = phi / n * (n - 1);
    }
    phi
}

/// Positive divisors in increasing order.
pub fn divisors(n: u32) -> Vec<u32> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

// ---------------------------------------------------------------------------
// Cyclotomic modulus arithmetic on raw rational coefficient vectors.
// The public polynomial type lives in `unipoly`; the field representation
// only needs these private helpers plus a cached Phi_N table.
// ---------------------------------------------------------------------------

fn cyclo_cache() -> &'static Mutex<HashMap<u32, Arc<Vec<BigRational>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<BigRational>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Coefficients of Phi_N, lowest degree first, monic of degree phi(N).
pub(crate) fn cyclotomic_modulus(n: u32) -> Arc<Vec<BigRational>> {
    if let Some(hit) = cyclo_cache().lock().unwrap().get(&n) {
        return hit.clone();
    }
    let computed = Arc::new(compute_cyclotomic(n));
    cyclo_cache()
        .lock()
        .unwrap()
        .entry(n)
        .or_insert(computed)
        .clone()
}

/// Phi_N = (t^N - 1) / prod_{d | N, d < N} Phi_d, by exact long division.
fn compute_cyclotomic(n: u32) -> Vec<BigRational> {
    if n == 1 {
        return vec![-BigRational::one(), BigRational::one()];
    }
    // t^N - 1
    let mut num = vec![BigRational::zero(); n as usize + 1];
    num[0] = -BigRational::one();
    num[n as usize] = BigRational::one();
    for d in divisors(n) {
        if d == n {
            continue;
        }
        let phi_d = cyclotomic_modulus(d);
        num = poly_div_exact(&num, &phi_d);
    }
    num
}

/// Exact division of polynomials with rational coefficients (monic divisor
/// in all uses here); panics if the division is not exact.
fn poly_div_exact(num: &[BigRational], den: &[BigRational]) -> Vec<BigRational> {
    let mut rem: Vec<BigRational> = num.to_vec();
    let dd = den.len() - 1;
    let lead = den[dd].clone();
    assert!(!lead.is_zero());
    let mut quot = vec![BigRational::zero(); rem.len().saturating_sub(dd)];
    for i in (dd..rem.len()).rev() {
        if rem[i].is_zero() {
            continue;
        }
        let c = &rem[i] / &lead;
        quot[i - dd] = c.clone();
        for (j, dc) in den.iter().enumerate() {
            rem[i - dd + j] = &rem[i - dd + j] - &(&c * dc);
        }
    }
    assert!(
        rem.iter().all(|c| c.is_zero()),
        "non-exact polynomial division"
    );
    while quot.len() > 1 && quot.last().unwrap().is_zero() {
        quot.pop();
    }
    quot
}

/// Reduce a coefficient vector mod Phi_N and trim to length phi(N).
fn reduce_mod_cyclotomic(n: u32, mut coeffs: Vec<BigRational>) -> Vec<BigRational> {
    let modulus = cyclotomic_modulus(n);
    let phi = modulus.len() - 1;
    for i in (phi..coeffs.len()).rev() {
        if coeffs[i].is_zero() {
            continue;
        }
        let c = coeffs[i].clone();
        coeffs[i] = BigRational::zero();
        for (j, mc) in modulus.iter().take(phi).enumerate() {
            coeffs[i - phi + j] = &coeffs[i - phi + j] - &(&c * mc);
        }
    }
    coeffs.truncate(phi.max(1));
    coeffs.resize(phi.max(1), BigRational::zero());
    coeffs
}

/// zeta^k as a reduced scalar.
pub(crate) fn cyclotomic_from_power(n: u32, k: u32) -> Scalar {
    let mut coeffs = vec![BigRational::zero(); (k % n.max(1)) as usize + 1];
    let last = coeffs.len() - 1;
    coeffs[last] = BigRational::one();
    Scalar::Cyclotomic {
        n,
        coeffs: reduce_mod_cyclotomic(n, coeffs),
    }
}

/// Inverse in Q[t]/Phi_N via the extended Euclidean algorithm.
fn cyclotomic_inverse(n: u32, coeffs: &[BigRational]) -> Result<Vec<BigRational>> {
    let modulus = cyclotomic_modulus(n);
    // Extended Euclid on (a, Phi_N): maintain r = s*a mod Phi_N.
    let mut r0: Vec<BigRational> = modulus.as_ref().clone();
    let mut r1: Vec<BigRational> = coeffs.to_vec();
    trim(&mut r1);
    let mut s0 = vec![BigRational::zero()];
    let mut s1 = vec![BigRational::one()];
    while !(r1.len() == 1 && r1[0].is_zero()) {
        let (q, r) = poly_divrem(&r0, &r1);
        let s = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
    }
    // r0 = gcd; Phi_N irreducible over Q so gcd is a nonzero constant.
    if r0.len() != 1 || r0[0].is_zero() {
        return Err(Error::DivisionByZero);
    }
    let c = r0[0].clone();
    let inv: Vec<BigRational> = s0.iter().map(|x| x / &c).collect();
    Ok(reduce_mod_cyclotomic(n, inv))
}

fn trim(v: &mut Vec<BigRational>) {
    while v.len() > 1 && v.last().unwrap().is_zero() {
        v.pop();
    }
}

fn poly_divrem(num: &[BigRational], den: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem = num.to_vec();
    trim(&mut rem);
    let mut d = den.to_vec();
    trim(&mut d);
    let dd = d.len() - 1;
    let lead = d[dd].clone();
    if rem.len() <= dd && !(dd == 0) {
        return (vec![BigRational::zero()], rem);
    }
    let qlen = rem.len().saturating_sub(dd).max(1);
    let mut quot = vec![BigRational::zero(); qlen];
    for i in (dd..rem.len()).rev() {
        if rem[i].is_zero() {
            continue;
        }
        let c = &rem[i] / &lead;
        quot[i - dd] = c.clone();
        for (j, dc) in d.iter().enumerate() {
            rem[i - dd + j] = &rem[i - dd + j] - &(&c * dc);
        }
    }
    trim(&mut rem);
    trim(&mut quot);
    (quot, rem)
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    trim(&mut out);
    out
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] = x.clone();
    }
    for (i, y) in b.iter().enumerate() {
        out[i] = &out[i] - y;
    }
    trim(&mut out);
    out
}

// ---------------------------------------------------------------------------
// Scalar text syntax.
// ---------------------------------------------------------------------------

/// Parse the scalar text syntax. Accepts a sum of terms; each term is a
/// product of `*`-separated factors, each factor a rational constant or a
/// power of the cyclotomic generator written `z` or `zeta`.
fn parse_scalar_str(field: &FieldSpec, input: &str) -> Result<Scalar> {
    let normalized: String = input.replace('\u{2212}', "-");
    let s: String = normalized.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::parse("empty scalar"));
    }
    let mut acc = field.zero();
    for (term, negative) in split_terms(&s)? {
        let value = parse_scalar_term(field, &term)?;
        if negative {
            acc = &acc - &value;
        } else {
            acc = &acc + &value;
        }
    }
    Ok(acc)
}

/// Split on top-level `+`/`-`, returning (term, is_negative) pairs.
pub(crate) fn split_terms(s: &str) -> Result<Vec<(String, bool)>> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut neg = false;
    let mut depth = 0usize;
    let mut prev: Option<char> = None;
    for c in s.chars() {
        match c {
            '(' => {
                depth += 1;
                cur.push(c);
            }
            ')' => {
                depth = depth
                    .checked_sub(1)
                    .ok_or_else(|| Error::parse("unbalanced ')'"))?;
                cur.push(c);
            }
            '+' | '-'
                if depth == 0 && prev != Some('^') && prev != Some('*') && prev != Some('/') =>
            {
                if cur.is_empty() {
                    if c == '-' {
                        neg = !neg;
                    }
                } else {
                    out.push((std::mem::take(&mut cur), neg));
                    neg = c == '-';
                }
            }
            _ => cur.push(c),
        }
        prev = Some(c);
    }
    if depth != 0 {
        return Err(Error::parse("unbalanced '('"));
    }
    if cur.is_empty() {
        return Err(Error::parse("dangling sign in expression"));
    }
    out.push((cur, neg));
    Ok(out)
}

fn parse_scalar_term(field: &FieldSpec, term: &str) -> Result<Scalar> {
    let mut acc = field.one();
    for factor in term.split('*') {
        if factor.is_empty() {
            return Err(Error::parse(format!("empty factor in term '{term}'")));
        }
        let (base, exp) = split_power(factor)?;
        let value = if base == "z" || base == "zeta" {
            match field {
                FieldSpec::Cyclotomic(n) => cyclotomic_from_power(*n, exp % *n),
                _ => {
                    return Err(Error::parse(format!(
                        "generator '{base}' is only valid in a cyclotomic field"
                    )))
                }
            }
        } else {
            let q = parse_rational(&base)?;
            field.from_rational(q)?.pow(exp as u64)
        };
        acc = &acc * &value;
    }
    Ok(acc)
}

pub(crate) fn split_power(factor: &str) -> Result<(String, u32)> {
    match factor.split_once('^') {
        None => Ok((factor.to_string(), 1)),
        Some((base, exp)) => {
            let e: u32 = exp
                .parse()
                .map_err(|_| Error::parse(format!("bad exponent '{exp}'")))?;
            Ok((base.to_string(), e))
        }
    }
}

pub(crate) fn parse_rational(s: &str) -> Result<BigRational> {
    let (num, den) = match s.split_once('/') {
        None => (s, "1"),
        Some((n, d)) => (n, d),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| Error::parse(format!("bad integer '{num}'")))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| Error::parse(format!("bad integer '{den}'")))?;
    if d.is_zero() {
        return Err(Error::parse("zero denominator"));
    }
    Ok(BigRational::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_and_phi() {
        assert!(FieldSpec::prime(2).is_ok());
        assert!(FieldSpec::prime(2147483647).is_ok());
        assert!(FieldSpec::prime(9).is_err());
        assert!(FieldSpec::prime(1).is_err());
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(6), 2);
        assert_eq!(euler_phi(8), 4);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
    }

    #[test]
    fn rational_arithmetic_canonical() {
        let f = FieldSpec::Rational;
        let a = f.parse_scalar("-3/4").unwrap();
        let b = f.parse_scalar("1/4").unwrap();
        assert_eq!((&a + &b).to_string(), "-1/2");
        assert_eq!((&a * &b).to_string(), "-3/16");
        assert_eq!(a.inv().unwrap().to_string(), "-4/3");
        assert_eq!(f.parse_scalar("6/4").unwrap().to_string(), "3/2");
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = FieldSpec::prime(7).unwrap();
        let a = f.parse_scalar("5").unwrap();
        let b = f.parse_scalar("-1").unwrap();
        assert_eq!(b.to_string(), "6");
        assert_eq!((&a + &b).to_string(), "4");
        assert_eq!((&a * &b).to_string(), "2");
        assert!((&a * &a.inv().unwrap()).is_one());
        // 3/2 = 3 * inverse(2) = 3*4 = 12 = 5
        assert_eq!(f.parse_scalar("3/2").unwrap().to_string(), "5");
    }

    #[test]
    fn cyclotomic_reduction_and_inverse() {
        let f = FieldSpec::cyclotomic(4).unwrap();
        // z^9 = z modulo Phi_4 = z^2 + 1
        let z9 = f.parse_scalar("z^9").unwrap();
        assert_eq!(z9.to_string(), "z");
        let x = f.parse_scalar("1/2*z^2 - 1").unwrap();
        // z^2 = -1, so x = -3/2
        assert_eq!(x.to_string(), "-3/2");
        let z = f.generator().unwrap();
        assert!(z.pow(4).is_one());
        assert!(!z.pow(2).is_one());
        let zi = z.inv().unwrap();
        assert!((&z * &zi).is_one());
        assert_eq!(zi, z.pow(3));
    }

    #[test]
    fn zeta_alias_and_root_of_modulus() {
        let f = FieldSpec::cyclotomic(6).unwrap();
        let z = f.parse_scalar("zeta").unwrap();
        assert_eq!(z, f.generator().unwrap());
        // Phi_6(z) = z^2 - z + 1 = 0
        let val = &(&z * &z) - &(&z - &f.one());
        assert!(val.is_zero());
        assert_eq!(z.multiplicative_order(10), Some(6));
    }

    #[test]
    fn display_round_trip() {
        let f = FieldSpec::cyclotomic(5).unwrap();
        let x = f.parse_scalar("2/3*z^3 - z + 4").unwrap();
        let back = f.parse_scalar(&x.to_string()).unwrap();
        assert_eq!(x, back);
    }
}
