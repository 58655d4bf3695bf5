//! Exact arithmetic in a fixed real algebraic number field K = Q(alpha).
//!
//! The field is given by a monic integer polynomial together with an
//! isolating interval with rational endpoints that selects one real root as
//! the embedding of `alpha`. Elements are stored as rational coordinate
//! vectors in the power basis `1, alpha, ..., alpha^(D-1)`.
//!
//! Irreducibility of the minimal polynomial is not checked up front: a
//! reducible polynomial is detected lazily when an inversion runs into a
//! zero divisor (`ReducibleMinimalPolynomial`). Degree 1 is allowed and
//! denotes K = Q.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::rational::{format_rational, sign, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumFieldError {
    #[error("minimal polynomial must be monic of degree >= 1")]
    NonMonic,
    #[error("minimal polynomial does not change sign over the given interval")]
    NoRealRootIsolated,
    #[error("coefficient vector length {got} does not match field degree {expected}")]
    CoefficientLength { expected: usize, got: usize },
    #[error("operands belong to different number fields")]
    FieldMismatch,
    #[error("division by zero in number field")]
    DivisionByZero,
    #[error("minimal polynomial is reducible (zero divisor found during inversion)")]
    ReducibleMinimalPolynomial,
}

#[derive(Debug)]
struct FieldData {
    /// Monic integer coefficients `c_0 .. c_D`, `c_D = 1`.
    minpoly: Vec<BigInt>,
    /// `minpoly` changes sign over `(lo, hi)`, isolating the chosen real root.
    root_interval: (Rational, Rational),
}

/// Handle to a real number field; cheap to clone, structurally comparable.
#[derive(Debug, Clone)]
pub struct NumberField(Arc<FieldData>);

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.minpoly == other.0.minpoly
                && self.0.root_interval == other.0.root_interval)
    }
}
impl Eq for NumberField {}

impl NumberField {
    pub fn new(
        minpoly: Vec<BigInt>,
        root_interval: (Rational, Rational),
    ) -> Result<Self, NumFieldError> {
        if minpoly.len() < 2 || !minpoly.last().unwrap().is_one() {
            return Err(NumFieldError::NonMonic);
        }
        let (lo, hi) = &root_interval;
        if lo >= hi {
            return Err(NumFieldError::NoRealRootIsolated);
        }
        let poly_q: Vec<Rational> = minpoly.iter().map(|c| Rational::from_integer(c.clone())).collect();
        let s_lo = sign(&eval_poly(&poly_q, lo));
        let s_hi = sign(&eval_poly(&poly_q, hi));
        if s_lo == 0 || s_hi == 0 || s_lo == s_hi {
            return Err(NumFieldError::NoRealRootIsolated);
        }
        Ok(NumberField(Arc::new(FieldData { minpoly, root_interval })))
    }

    /// K = Q, presented as the root of `x - 1` in `(0, 2)`.
    pub fn rationals() -> Self {
        NumberField::new(
            vec![BigInt::from(-1), BigInt::from(1)],
            (Rational::zero(), Rational::from_integer(BigInt::from(2))),
        )
        .unwrap()
    }

    /// K = Q(sqrt(2)), the field required by the hard-coded counterexample
    /// families.
    pub fn sqrt2() -> Self {
        NumberField::new(
            vec![BigInt::from(-2), BigInt::zero(), BigInt::one()],
            (
                Rational::one(),
                Rational::from_integer(BigInt::from(2)),
            ),
        )
        .unwrap()
    }

    pub fn degree(&self) -> usize {
        self.0.minpoly.len() - 1
    }

    pub fn minpoly(&self) -> &[BigInt] {
        &self.0.minpoly
    }

    pub fn root_interval(&self) -> &(Rational, Rational) {
        &self.0.root_interval
    }

    pub fn element(&self, coeffs: Vec<Rational>) -> Result<FieldElement, NumFieldError> {
        if coeffs.len() != self.degree() {
            return Err(NumFieldError::CoefficientLength {
                expected: self.degree(),
                got: coeffs.len(),
            });
        }
        Ok(FieldElement { field: self.clone(), coeffs })
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            field: self.clone(),
            coeffs: vec![Rational::zero(); self.degree()],
        }
    }

    pub fn one(&self) -> FieldElement {
        self.from_rational(Rational::one())
    }

    pub fn from_rational(&self, x: Rational) -> FieldElement {
        let mut coeffs = vec![Rational::zero(); self.degree()];
        coeffs[0] = x;
        FieldElement { field: self.clone(), coeffs }
    }

    pub fn from_int(&self, n: i64) -> FieldElement {
        self.from_rational(Rational::from_integer(BigInt::from(n)))
    }

    /// The generator `alpha`. For degree 1 this is the (rational) root itself.
    pub fn generator(&self) -> FieldElement {
        if self.degree() == 1 {
            // Root of the monic linear polynomial x + c_0.
            let c0 = Rational::from_integer(self.0.minpoly[0].clone());
            self.from_rational(-c0)
        } else {
            let mut coeffs = vec![Rational::zero(); self.degree()];
            coeffs[1] = Rational::one();
            FieldElement { field: self.clone(), coeffs }
        }
    }

    /// `alpha^t`, reduced modulo the minimal polynomial.
    pub fn monomial(&self, t: usize) -> FieldElement {
        let mut x = self.one();
        let alpha = self.generator();
        for _ in 0..t {
            x = x.mul(&alpha);
        }
        x
    }

    fn minpoly_q(&self) -> Vec<Rational> {
        self.0.minpoly.iter().map(|c| Rational::from_integer(c.clone())).collect()
    }
}

/// An element of a fixed `NumberField`, as a power-basis coordinate vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: NumberField,
    coeffs: Vec<Rational>,
}

impl FieldElement {
    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    pub fn rational_part(&self) -> Rational {
        self.coeffs[0].clone()
    }

    /// True when the element is a rational integer.
    pub fn is_integer(&self) -> bool {
        self.is_rational() && self.coeffs[0].is_integer()
    }

    fn assert_same_field(&self, other: &FieldElement) {
        assert!(
            self.field == other.field,
            "field mismatch: operands belong to different number fields"
        );
    }

    pub fn add(&self, other: &FieldElement) -> FieldElement {
        self.assert_same_field(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        FieldElement { field: self.field.clone(), coeffs }
    }

    pub fn sub(&self, other: &FieldElement) -> FieldElement {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> FieldElement {
        FieldElement {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, s: &Rational) -> FieldElement {
        FieldElement {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    pub fn mul(&self, other: &FieldElement) -> FieldElement {
        self.assert_same_field(other);
        let d = self.field.degree();
        let mut prod = vec![Rational::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        // Reduce modulo the monic minimal polynomial.
        let m = self.field.minpoly_q();
        for i in (d..prod.len()).rev() {
            if prod[i].is_zero() {
                continue;
            }
            let c = std::mem::replace(&mut prod[i], Rational::zero());
            for j in 0..d {
                let t = &c * &m[j];
                prod[i - d + j] -= t;
            }
        }
        prod.truncate(d);
        FieldElement { field: self.field.clone(), coeffs: prod }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm on the
    /// coefficient polynomial and the minimal polynomial. A nontrivial gcd
    /// witnesses that the supplied minimal polynomial was reducible.
    pub fn invert(&self) -> Result<FieldElement, NumFieldError> {
        if self.is_zero() {
            return Err(NumFieldError::DivisionByZero);
        }
        if self.is_rational() {
            return Ok(self.field.from_rational(self.coeffs[0].recip()));
        }
        let (g, s) = poly_half_egcd(&self.coeffs, &self.field.minpoly_q());
        if poly_degree(&g) != Some(0) {
            return Err(NumFieldError::ReducibleMinimalPolynomial);
        }
        // s * self == g (mod minpoly), so self^(-1) = s / g.
        let ginv = g[0].recip();
        let mut coeffs = vec![Rational::zero(); self.field.degree()];
        for (i, c) in s.iter().enumerate() {
            if !c.is_zero() {
                debug_assert!(i < coeffs.len(), "egcd cofactor degree exceeds field degree");
                coeffs[i] = c * &ginv;
            }
        }
        Ok(self.field.element(coeffs).unwrap())
    }

    /// A rational interval of width `< eps` certified to contain the real
    /// value of the element under the chosen embedding.
    pub fn approx(&self, eps: &Rational) -> (Rational, Rational) {
        assert!(eps.is_positive(), "approx requires eps > 0");
        if self.is_rational() {
            return (self.coeffs[0].clone(), self.coeffs[0].clone());
        }
        let m = self.field.minpoly_q();
        let (mut lo, mut hi) = self.field.root_interval().clone();
        let s_lo = sign(&eval_poly(&m, &lo));
        loop {
            let (vlo, vhi) = eval_poly_interval(&self.coeffs, &lo, &hi);
            if &(&vhi - &vlo) < eps {
                return (vlo, vhi);
            }
            let mid = (&lo + &hi) / Rational::from_integer(BigInt::from(2));
            let s_mid = sign(&eval_poly(&m, &mid));
            if s_mid == 0 {
                // The root is exactly rational; evaluate there.
                let v = eval_poly(&self.coeffs, &mid);
                return (v.clone(), v);
            }
            if s_mid == s_lo {
                lo = mid;
            } else {
                hi = mid;
            }
        }
    }

    /// Midpoint of a tight `approx` interval; feeds the statistical oracle.
    pub fn to_f64(&self) -> f64 {
        let eps = Rational::new(BigInt::one(), BigInt::from(1u64 << 45));
        let (lo, hi) = self.approx(&eps);
        let mid = (&lo + &hi) / Rational::from_integer(BigInt::from(2));
        num_traits::ToPrimitive::to_f64(&mid).unwrap()
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{}", format_rational(c))?,
                1 => write!(f, "{}*a", format_rational(c))?,
                _ => write!(f, "{}*a^{}", format_rational(c), i)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

fn poly_degree(p: &[Rational]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

fn eval_poly(p: &[Rational], x: &Rational) -> Rational {
    let mut acc = Rational::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Interval Horner evaluation of `p` over `[lo, hi]`.
fn eval_poly_interval(p: &[Rational], lo: &Rational, hi: &Rational) -> (Rational, Rational) {
    let mut alo = Rational::zero();
    let mut ahi = Rational::zero();
    for c in p.iter().rev() {
        let products = [&alo * lo, &alo * hi, &ahi * lo, &ahi * hi];
        let mut plo = products[0].clone();
        let mut phi = products[0].clone();
        for q in &products[1..] {
            if q < &plo {
                plo = q.clone();
            }
            if q > &phi {
                phi = q.clone();
            }
        }
        alo = plo + c;
        ahi = phi + c;
    }
    (alo, ahi)
}

/// Extended Euclid on polynomials, returning `(g, s)` with
/// `s*a + t*b = g` for some `t`. Coefficient vectors are low-to-high.
fn poly_half_egcd(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut r0 = a.to_vec();
    let mut r1 = b.to_vec();
    let mut s0 = vec![Rational::one()];
    let mut s1 = vec![Rational::zero()];
    while poly_degree(&r1).is_some() {
        let (q, rem) = poly_divmod(&r0, &r1);
        let s_new = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = s_new;
    }
    (r0, s0)
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let mut out = vec![Rational::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    out
}

fn poly_divmod(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let db = poly_degree(b).expect("division by zero polynomial");
    let mut rem = a.to_vec();
    let mut quot = vec![Rational::zero(); a.len().saturating_sub(db).max(1)];
    let lead = b[db].clone();
    loop {
        match poly_degree(&rem) {
            Some(dr) if dr >= db => {
                let c = &rem[dr] / &lead;
                quot[dr - db] = c.clone();
                for j in 0..=db {
                    let t = &c * &b[j];
                    rem[dr - db + j] -= t;
                }
            }
            _ => break,
        }
    }
    (quot, rem)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn cbrt2() -> NumberField {
        // x^3 - 2 has exactly one real root, in (1, 3/2): the sign
        // evaluations -1 and 11/8 confirm the isolation.
        NumberField::new(
            vec![BigInt::from(-2), BigInt::zero(), BigInt::zero(), BigInt::one()],
            (rat_int(1), rat(3, 2)),
        )
        .unwrap()
    }

    #[test]
    fn make_field_examples() {
        assert_eq!(NumberField::sqrt2().degree(), 2);
        assert_eq!(NumberField::rationals().degree(), 1);
        assert_eq!(cbrt2().degree(), 3);
    }

    #[test]
    fn make_field_rejects_bad_input() {
        let err = NumberField::new(vec![BigInt::from(-2), BigInt::from(2)], (rat_int(0), rat_int(2)));
        assert_eq!(err.unwrap_err(), NumFieldError::NonMonic);
        // x^2 + 1 has no real root.
        let err = NumberField::new(
            vec![BigInt::one(), BigInt::zero(), BigInt::one()],
            (rat_int(-2), rat_int(2)),
        );
        assert_eq!(err.unwrap_err(), NumFieldError::NoRealRootIsolated);
    }

    #[test]
    fn ring_arithmetic() {
        let k = NumberField::sqrt2();
        let a = k.generator();
        assert_eq!(a.mul(&a), k.from_int(2));
        let one = k.one();
        assert_eq!(one.add(&a).add(&one.sub(&a)), k.from_int(2));

        let k3 = cbrt2();
        let a2 = k3.monomial(2);
        // alpha^4 = 2*alpha by reduction.
        assert_eq!(a2.mul(&a2), k3.generator().scale(&rat_int(2)));
    }

    #[test]
    fn inversion() {
        let k = NumberField::sqrt2();
        let x = k.one().add(&k.generator()); // 1 + sqrt(2)
        let inv = x.invert().unwrap();
        // (1+sqrt2)(sqrt2-1) = 1, checked through mul.
        assert_eq!(inv, k.generator().sub(&k.one()));
        assert_eq!(x.mul(&inv), k.one());

        assert_eq!(
            k.from_int(2).invert().unwrap(),
            k.from_rational(rat(1, 2))
        );
        assert_eq!(k.zero().invert().unwrap_err(), NumFieldError::DivisionByZero);
    }

    #[test]
    fn reducible_polynomial_detected() {
        // "Field" built from x^2 - 1: 1 + alpha is a zero divisor.
        let k = NumberField::new(
            vec![BigInt::from(-1), BigInt::zero(), BigInt::one()],
            (rat(1, 2), rat(3, 2)),
        )
        .unwrap();
        let x = k.one().add(&k.generator());
        assert_eq!(x.invert().unwrap_err(), NumFieldError::ReducibleMinimalPolynomial);
    }

    #[test]
    fn approx_intervals() {
        let k = NumberField::sqrt2();
        let eps = rat(1, 100);
        let (lo, hi) = k.generator().approx(&eps);
        assert!(&hi - &lo < eps);
        assert!(lo < rat(1415, 1000) && hi > rat(1414, 1000));

        let (lo, hi) = k.from_rational(rat(3, 4)).approx(&rat_int(1));
        assert_eq!((lo, hi), (rat(3, 4), rat(3, 4)));

        let x = k.one().add(&k.generator());
        let (lo, hi) = x.approx(&rat(1, 10));
        assert!(lo < rat(2415, 1000) && hi > rat(2414, 1000));
        assert!(&hi - &lo < rat(1, 10));

        let v = x.to_f64();
        assert!((v - 2.41421356).abs() < 1e-7);
    }

    #[test]
    fn rational_part_queries() {
        let k = NumberField::sqrt2();
        let x = k.element(vec![rat(3, 4), rat_int(2)]).unwrap();
        assert_eq!(x.rational_part(), rat(3, 4));
        assert!(!x.is_rational());
        assert!(k.generator().scale(&rat_int(2)).rational_part().is_zero());
        assert!(k.zero().is_rational());
    }

    #[test]
    #[should_panic(expected = "field mismatch")]
    fn mixed_field_arithmetic_panics() {
        let a = NumberField::sqrt2().generator();
        let b = cbrt2().generator();
        let _ = a.add(&b);
    }

    #[test]
    fn degree_one_field_is_plain_rationals() {
        let q = NumberField::rationals();
        let x = q.from_rational(rat(2, 3));
        assert_eq!(x.mul(&x), q.from_rational(rat(4, 9)));
        assert!(q.generator().is_rational());
        let (lo, hi) = x.approx(&rat(1, 1000));
        assert_eq!(lo, hi);
    }
}
