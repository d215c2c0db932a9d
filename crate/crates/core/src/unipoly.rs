//! Dense univariate polynomials over an exact field, plus the cyclotomic
//! polynomials and root finding used by the group-like solver.

use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::field::{cyclotomic_modulus, FieldSpec, Scalar};

/// Budget for divisor enumeration in the rational-root search; protects
/// against pathological coefficient sizes.
const DIVISOR_BUDGET: u64 = 10_000_000;

/// Coefficients lowest degree first; trailing zeros stripped, so the leading
/// coefficient is nonzero unless the polynomial is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    field: FieldSpec,
    coeffs: Vec<Scalar>,
}

impl UniPoly {
    pub fn zero(field: FieldSpec) -> Self {
        UniPoly {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn from_coeffs(field: FieldSpec, mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        UniPoly { field, coeffs }
    }

    pub fn constant(field: FieldSpec, c: Scalar) -> Self {
        Self::from_coeffs(field, vec![c])
    }

    /// c * t^d
    pub fn monomial(field: FieldSpec, c: Scalar, d: usize) -> Self {
        let mut coeffs = vec![field.zero(); d + 1];
        coeffs[d] = c;
        Self::from_coeffs(field, coeffs)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> Scalar {
        self.coeffs
            .get(d)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn add(&self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(&self.coeff(i) + &rhs.coeff(i));
        }
        UniPoly::from_coeffs(self.field.clone(), out)
    }

    pub fn sub(&self, rhs: &UniPoly) -> UniPoly {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero(self.field.clone());
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        UniPoly::from_coeffs(self.field.clone(), out)
    }

    pub fn scale(&self, c: &Scalar) -> UniPoly {
        UniPoly::from_coeffs(
            self.field.clone(),
            self.coeffs.iter().map(|a| a * c).collect(),
        )
    }

    /// Euclidean division; errors on a zero divisor.
    pub fn divrem(&self, den: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let dd = match den.degree() {
            None => return Err(Error::DivisionByZero),
            Some(d) => d,
        };
        let lead_inv = den.leading().unwrap().inv()?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((UniPoly::zero(self.field.clone()), self.clone()));
        }
        let mut quot = vec![self.field.zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let c = &rem[i] * &lead_inv;
            for (j, dc) in den.coeffs.iter().enumerate() {
                rem[i - dd + j] = &rem[i - dd + j] - &(&c * dc);
            }
            quot[i - dd] = c;
        }
        Ok((
            UniPoly::from_coeffs(self.field.clone(), quot),
            UniPoly::from_coeffs(self.field.clone(), rem),
        ))
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &UniPoly) -> Result<UniPoly> {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b)?;
            a = b;
            b = r;
        }
        if a.is_zero() {
            return Ok(a);
        }
        let li = a.leading().unwrap().inv()?;
        Ok(a.scale(&li))
    }
}

/// The N-th cyclotomic polynomial Phi_N over Q, computed by dividing
/// t^N - 1 by the product of the Phi_d for proper divisors d of N.
/// Monic of degree phi(N) with integer coefficients.
pub fn cyclotomic_polynomial(n: u32) -> UniPoly {
    let raw = cyclotomic_modulus(n);
    UniPoly::from_coeffs(
        FieldSpec::Rational,
        raw.iter().map(|c| Scalar::Rational(c.clone())).collect(),
    )
}

/// Complete list of roots of `f` in the given field.
///
/// Over Q this is the rational-root theorem applied to the integer-cleared
/// polynomial; over F_p an exhaustive scan. Roots are returned sorted, without
/// multiplicities. Cyclotomic fields are not supported here (group-like
/// solving over Q(zeta) goes through restriction of scalars instead).
pub fn roots_in_field(f: &UniPoly, spec: &FieldSpec) -> Result<Vec<Scalar>> {
    if f.is_zero() {
        return Err(Error::parse("roots_in_field requires a nonzero polynomial"));
    }
    match spec {
        FieldSpec::Rational => rational_roots(f),
        FieldSpec::PrimeField(p) => {
            let mut out = Vec::new();
            for r in 0..*p {
                let x = Scalar::Prime { p: *p, value: r };
                if f.eval(&x).is_zero() {
                    out.push(x);
                }
            }
            Ok(out)
        }
        FieldSpec::Cyclotomic(_) => Err(Error::Unsupported(
            "root enumeration over a cyclotomic field; restrict scalars to Q first".into(),
        )),
    }
}

fn rational_roots(f: &UniPoly) -> Result<Vec<Scalar>> {
    let mut coeffs: Vec<BigRational> = f
        .coeffs()
        .iter()
        .map(|c| match c {
            Scalar::Rational(q) => q.clone(),
            _ => unreachable!("rational_roots on non-rational polynomial"),
        })
        .collect();

    let mut roots = Vec::new();
    // Strip t^k: zero is a root iff the constant term vanishes.
    let first_nonzero = coeffs.iter().position(|c| !c.is_zero()).unwrap();
    if first_nonzero > 0 {
        roots.push(Scalar::Rational(BigRational::zero()));
        coeffs.drain(..first_nonzero);
    }
    if coeffs.len() == 1 {
        roots.sort_by(|a, b| a.canonical_cmp(b));
        return Ok(roots);
    }

    // Clear denominators to a primitive integer polynomial.
    let mut lcm = num::BigInt::one();
    for c in &coeffs {
        lcm = num::integer::lcm(lcm, c.denom().clone());
    }
    let ints: Vec<num::BigInt> = coeffs
        .iter()
        .map(|c| (c * BigRational::from(lcm.clone())).to_integer())
        .collect();

    let a0 = ints[0].abs();
    let ad = ints.last().unwrap().abs();
    let p_divs = bigint_divisors(&a0)?;
    let q_divs = bigint_divisors(&ad)?;

    let poly = UniPoly::from_coeffs(
        FieldSpec::Rational,
        ints.iter()
            .map(|c| Scalar::Rational(BigRational::from(c.clone())))
            .collect(),
    );
    for p in &p_divs {
        for q in &q_divs {
            for sign in [1i32, -1] {
                let cand = BigRational::new(p * num::BigInt::from(sign), q.clone());
                let s = Scalar::Rational(cand);
                if poly.eval(&s).is_zero() && !roots.contains(&s) {
                    roots.push(s);
                }
            }
        }
    }
    roots.sort_by(|a, b| a.canonical_cmp(b));
    Ok(roots)
}

/// Positive divisors of a positive BigInt by trial division, budgeted.
fn bigint_divisors(n: &num::BigInt) -> Result<Vec<num::BigInt>> {
    use num::BigInt;
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    let mut steps = 0u64;
    while &d * &d <= *n {
        steps += 1;
        if steps > DIVISOR_BUDGET {
            return Err(Error::BudgetExceeded(
                "divisor enumeration in rational root search".into(),
            ));
        }
        if (n % &d).is_zero() {
            small.push(d.clone());
            let co = n / &d;
            if co != d {
                large.push(co);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    Ok(small)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Scalar {
        FieldSpec::Rational.parse_scalar(s).unwrap()
    }

    #[test]
    fn cyclotomic_base_cases() {
        // Phi_1 = t - 1, Phi_2 = t + 1
        assert_eq!(cyclotomic_polynomial(1).coeffs(), &[q("-1"), q("1")]);
        assert_eq!(cyclotomic_polynomial(2).coeffs(), &[q("1"), q("1")]);
    }

    #[test]
    fn cyclotomic_six() {
        // Phi_6 = t^2 - t + 1; cross-check by multiplying the full factor
        // decomposition of t^6 - 1 back together.
        let phi6 = cyclotomic_polynomial(6);
        assert_eq!(phi6.coeffs(), &[q("1"), q("-1"), q("1")]);
        let product = cyclotomic_polynomial(1)
            .mul(&cyclotomic_polynomial(2))
            .mul(&cyclotomic_polynomial(3))
            .mul(&phi6);
        let mut t6 = vec![q("0"); 7];
        t6[0] = q("-1");
        t6[6] = q("1");
        assert_eq!(product, UniPoly::from_coeffs(FieldSpec::Rational, t6));
    }

    #[test]
    fn cyclotomic_degrees_match_phi() {
        for n in 1..=30u32 {
            let f = cyclotomic_polynomial(n);
            assert_eq!(f.degree(), Some(crate::field::euler_phi(n) as usize));
            assert!(f.leading().unwrap().is_one());
        }
    }

    #[test]
    fn divrem_and_gcd() {
        let field = FieldSpec::Rational;
        // (t^2 - 1) = (t - 1)(t + 1)
        let f = UniPoly::from_coeffs(field.clone(), vec![q("-1"), q("0"), q("1")]);
        let g = UniPoly::from_coeffs(field.clone(), vec![q("-1"), q("1")]);
        let (quot, rem) = f.divrem(&g).unwrap();
        assert!(rem.is_zero());
        assert_eq!(quot.coeffs(), &[q("1"), q("1")]);
        let h = UniPoly::from_coeffs(field.clone(), vec![q("1"), q("1")]);
        let gc = f.gcd(&h).unwrap();
        assert_eq!(gc.coeffs(), &[q("1"), q("1")]);
    }

    #[test]
    fn rational_roots_basic() {
        let field = FieldSpec::Rational;
        // t^2 - 1 -> {-1, 1}
        let f = UniPoly::from_coeffs(field.clone(), vec![q("-1"), q("0"), q("1")]);
        let roots = roots_in_field(&f, &field).unwrap();
        assert_eq!(roots, vec![q("-1"), q("1")]);
        // t^2 - 2 has no rational roots
        let g = UniPoly::from_coeffs(field.clone(), vec![q("-2"), q("0"), q("1")]);
        assert!(roots_in_field(&g, &field).unwrap().is_empty());
        // 2t^2 - t = t(2t - 1) -> {0, 1/2}
        let h = UniPoly::from_coeffs(field.clone(), vec![q("0"), q("-1"), q("2")]);
        let roots = roots_in_field(&h, &field).unwrap();
        assert_eq!(roots, vec![q("0"), q("1/2")]);
    }

    #[test]
    fn prime_field_roots_exhaustive() {
        let f5 = FieldSpec::prime(5).unwrap();
        // t^2 + 1 over F_5 -> {2, 3}
        let f = UniPoly::from_coeffs(f5.clone(), vec![f5.one(), f5.zero(), f5.one()]);
        let roots = roots_in_field(&f, &f5).unwrap();
        let vals: Vec<String> = roots.iter().map(|r| r.to_string()).collect();
        assert_eq!(vals, vec!["2", "3"]);
    }

    #[test]
    fn cyclotomic_field_unsupported() {
        let f = UniPoly::from_coeffs(FieldSpec::Rational, vec![q("1"), q("1")]);
        assert!(matches!(
            roots_in_field(&f, &FieldSpec::cyclotomic(3).unwrap()),
            Err(Error::Unsupported(_))
        ));
    }
}
