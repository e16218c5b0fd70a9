//! The exact ground field of rational functions in a fractional power of q.
//!
//! A scalar is a reduced fraction of Laurent polynomials in one formal
//! variable `v` with arbitrary-precision rational coefficients.  A Cartan
//! datum with lattice constant `ell` fixes the reading `v = q^(1/(2*ell))`:
//! with that unit every power `q^((lambda,mu))` with lattice weights, and
//! every half power `q^((lambda,mu)/2)` needed by the extended bilinear form,
//! is an integer power of `v`.  [`QField`] performs that unit conversion; the
//! raw types below never see `ell`.
//!
//! Fractions are kept in a canonical representative so that structural
//! equality of scalars coincides with equality in the field: numerator and
//! denominator are coprime, the denominator is an ordinary polynomial in `v`
//! (lowest exponent zero) with coprime integer coefficients and positive
//! leading coefficient, and zero is stored as `0/1`.

use crate::error::{Error, Result};
use num::{BigInt, BigRational, One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

/// Laurent polynomial in `v`: a finite exponent-to-coefficient map.
///
/// Invariant: no explicit zero coefficients are stored, so structural
/// equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(0, BigRational::one())
    }

    pub fn monomial(exp: i64, coeff: BigRational) -> Self {
        let mut coeffs = BTreeMap::new();
        if !coeff.is_zero() {
            coeffs.insert(exp, coeff);
        }
        LaurentPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1
            && self
                .coeffs
                .get(&0)
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    /// Exponent of the lowest term; `None` for the zero polynomial.
    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    /// Exponent of the highest term; `None` for the zero polynomial.
    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coeff(&self, exp: i64) -> BigRational {
        self.coeffs.get(&exp).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &BigRational)> {
        self.coeffs.iter()
    }

    fn insert_add(&mut self, exp: i64, coeff: &BigRational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert_with(BigRational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    /// Multiply every exponent shift: `self * v^shift`.
    pub fn shifted(&self, shift: i64) -> Self {
        LaurentPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, c)| (e + shift, c.clone()))
                .collect(),
        }
    }

    pub fn scaled(&self, s: &BigRational) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, c)| (*e, c * s))
                .collect(),
        }
    }

    /// Value at `v = 1`: the sum of all coefficients.
    pub fn eval_at_one(&self) -> BigRational {
        self.coeffs.values().sum()
    }

    fn leading_coeff(&self) -> BigRational {
        self.max_exp()
            .map(|e| self.coeff(e))
            .unwrap_or_else(BigRational::zero)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.coeffs.iter() {
            out.insert_add(*e, c);
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.coeffs.iter() {
            out.insert_add(*e, &(-c));
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.coeffs.iter() {
            for (e2, c2) in rhs.coeffs.iter() {
                out.insert_add(e1 + e2, &(c1 * c2));
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match e {
                0 => write!(f, "{}", c)?,
                1 => write!(f, "{}*v", c)?,
                _ => write!(f, "{}*v^{}", c, e)?,
            }
        }
        Ok(())
    }
}

/// Quotient with exact remainder check; both arguments must be ordinary
/// polynomials (minimum exponent >= 0).  Panics if the division is inexact.
fn poly_div_exact(num: &LaurentPoly, den: &LaurentPoly) -> LaurentPoly {
    let (q, r) = poly_divmod(num, den);
    debug_assert!(r.is_zero(), "inexact polynomial division");
    q
}

fn poly_divmod(num: &LaurentPoly, den: &LaurentPoly) -> (LaurentPoly, LaurentPoly) {
    assert!(!den.is_zero(), "polynomial division by zero");
    let dlead = den.max_exp().unwrap();
    let dcoeff = den.leading_coeff();
    let mut rem = num.clone();
    let mut quot = LaurentPoly::zero();
    while let Some(rlead) = rem.max_exp() {
        if rlead < dlead {
            break;
        }
        let factor = rem.coeff(rlead) / &dcoeff;
        let shift = rlead - dlead;
        quot.insert_add(shift, &factor);
        let piece = den.shifted(shift).scaled(&factor);
        rem = &rem - &piece;
    }
    (quot, rem)
}

/// Monic gcd of two ordinary polynomials (Euclid over the rationals).
fn poly_gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let mut x = a.clone();
    let mut y = b.clone();
    while !y.is_zero() {
        let (_, r) = poly_divmod(&x, &y);
        x = y;
        y = r;
    }
    if x.is_zero() {
        return x;
    }
    let lead = x.leading_coeff();
    x.scaled(&lead.recip())
}

/// Reduced fraction of Laurent polynomials in the canonical representative.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QScalar {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl QScalar {
    pub fn zero() -> Self {
        QScalar {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        QScalar {
            num: LaurentPoly::one(),
            den: LaurentPoly::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(r: BigRational) -> Self {
        QScalar {
            num: LaurentPoly::monomial(0, r),
            den: LaurentPoly::one(),
        }
    }

    /// The monomial `v^k` in the raw exponent unit of the field.
    pub fn v_pow(k: i64) -> Self {
        QScalar {
            num: LaurentPoly::monomial(k, BigRational::one()),
            den: LaurentPoly::one(),
        }
    }

    /// Build and reduce a fraction from arbitrary numerator and denominator.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        Self::reduce(num, den)
    }

    fn reduce(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        // Strip powers of v so both parts become ordinary polynomials.
        let nshift = num.min_exp().unwrap();
        let dshift = den.min_exp().unwrap();
        let n0 = num.shifted(-nshift);
        let d0 = den.shifted(-dshift);
        if d0.is_one() {
            return QScalar {
                num: n0.shifted(nshift - dshift),
                den: LaurentPoly::one(),
            };
        }
        let g = poly_gcd(&n0, &d0);
        let (mut n1, d1) = if g.is_one() {
            (n0, d0)
        } else {
            (poly_div_exact(&n0, &g), poly_div_exact(&d0, &g))
        };
        // The unit v^(nshift - dshift) lives in the numerator.
        n1 = n1.shifted(nshift - dshift);
        Self::canonical_scale(n1, d1)
    }

    /// Scale so the denominator has coprime integer coefficients and positive
    /// leading coefficient.  Assumes gcd(num, den) = 1 and den(0) != 0.
    fn canonical_scale(num: LaurentPoly, den: LaurentPoly) -> Self {
        let mut denom_lcm = BigInt::one();
        for (_, c) in den.terms() {
            denom_lcm = num::integer::lcm(denom_lcm, c.denom().clone());
        }
        let mut numer_gcd = BigInt::zero();
        for (_, c) in den.terms() {
            numer_gcd = num::integer::gcd(numer_gcd, (c * BigRational::from_integer(denom_lcm.clone())).to_integer());
        }
        let mut mult = BigRational::new(denom_lcm, numer_gcd);
        if den.leading_coeff() * &mult < BigRational::zero() {
            mult = -mult;
        }
        QScalar {
            num: num.scaled(&mult),
            den: den.scaled(&mult),
        }
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the scalar is a Laurent polynomial (unit denominator).
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn inverse(&self) -> Result<QScalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, k: u32) -> QScalar {
        let mut out = QScalar::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Exact value at `v = 1`; errors if the reduced denominator vanishes
    /// there.
    pub fn classical_limit(&self) -> Result<BigRational> {
        let d = self.den.eval_at_one();
        if d.is_zero() {
            return Err(Error::PoleAtOne);
        }
        Ok(self.num.eval_at_one() / d)
    }
}

impl Default for QScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl Add for &QScalar {
    type Output = QScalar;
    fn add(self, rhs: &QScalar) -> QScalar {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            if self.den.is_one() {
                return QScalar {
                    num,
                    den: LaurentPoly::one(),
                };
            }
            return QScalar::reduce(num, self.den.clone());
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        QScalar::reduce(num, den)
    }
}

impl Sub for &QScalar {
    type Output = QScalar;
    fn sub(self, rhs: &QScalar) -> QScalar {
        self + &(-rhs)
    }
}

impl Neg for &QScalar {
    type Output = QScalar;
    fn neg(self) -> QScalar {
        QScalar {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul for &QScalar {
    type Output = QScalar;
    fn mul(self, rhs: &QScalar) -> QScalar {
        if self.is_zero() || rhs.is_zero() {
            return QScalar::zero();
        }
        if self.is_one() {
            return rhs.clone();
        }
        if rhs.is_one() {
            return self.clone();
        }
        // Cross-reduce before multiplying; the canonical invariant on the
        // inputs then guarantees the product is already reduced.
        let a = QScalar::reduce(self.num.clone(), rhs.den.clone());
        let b = QScalar::reduce(rhs.num.clone(), self.den.clone());
        QScalar::canonical_scale(&a.num * &b.num, &a.den * &b.den)
    }
}

macro_rules! forward_value_ops {
    ($trait:ident, $method:ident, $assign:ident, $assign_method:ident) => {
        impl $trait for QScalar {
            type Output = QScalar;
            fn $method(self, rhs: QScalar) -> QScalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&QScalar> for QScalar {
            type Output = QScalar;
            fn $method(self, rhs: &QScalar) -> QScalar {
                (&self).$method(rhs)
            }
        }
        impl $assign<&QScalar> for QScalar {
            fn $assign_method(&mut self, rhs: &QScalar) {
                *self = (&*self).$method(rhs);
            }
        }
        impl $assign for QScalar {
            fn $assign_method(&mut self, rhs: QScalar) {
                *self = (&*self).$method(&rhs);
            }
        }
    };
}

forward_value_ops!(Add, add, AddAssign, add_assign);
forward_value_ops!(Sub, sub, SubAssign, sub_assign);
forward_value_ops!(Mul, mul, MulAssign, mul_assign);

impl Neg for QScalar {
    type Output = QScalar;
    fn neg(self) -> QScalar {
        -&self
    }
}

impl fmt::Debug for QScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{:?}", self.num)
        } else {
            write!(f, "({:?})/({:?})", self.num, self.den)
        }
    }
}

impl fmt::Display for QScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self)
    }
}

/// Conversion context between powers of q and the raw exponent of `v`.
///
/// With lattice constant `ell` the field variable is `v = q^(1/(2*ell))`, so
/// `q^e = v^(2*ell*e)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QField {
    ell: i64,
}

impl QField {
    pub fn new(ell: i64) -> Self {
        assert!(ell >= 1);
        QField { ell }
    }

    pub fn ell(&self) -> i64 {
        self.ell
    }

    /// `q^e` for an exact rational exponent whose denominator divides `ell`.
    pub fn q_power(&self, e: &BigRational) -> Result<QScalar> {
        let scaled = e * BigRational::from_integer(BigInt::from(self.ell));
        if !scaled.is_integer() {
            return Err(Error::NonIntegralExponent(e.to_string()));
        }
        let k: BigInt = scaled.to_integer() * BigInt::from(2);
        Ok(QScalar::v_pow(Self::to_i64(&k)))
    }

    /// `q^e` for an exact rational exponent whose denominator divides
    /// `2*ell`; this is the variant used for the half powers of q that the
    /// extended bilinear form produces.
    pub fn q_power_half(&self, e: &BigRational) -> Result<QScalar> {
        let scaled = e * BigRational::from_integer(BigInt::from(2 * self.ell));
        if !scaled.is_integer() {
            return Err(Error::NonIntegralExponent(e.to_string()));
        }
        Ok(QScalar::v_pow(Self::to_i64(&scaled.to_integer())))
    }

    /// Raw `v`-exponent of `q_d = q^d`.
    fn qd_vexp(&self, d: i64) -> i64 {
        2 * self.ell * d
    }

    /// The q-integer `[m]` in the variable `q_d`, as an explicit Laurent
    /// polynomial (the defining quotient divides exactly).
    pub fn q_int(&self, m: u64, d: i64) -> QScalar {
        let u = self.qd_vexp(d);
        let mut num = LaurentPoly::zero();
        let m = m as i64;
        for k in 0..m {
            num.insert_add(u * (m - 1 - 2 * k), &BigRational::one());
        }
        QScalar {
            num,
            den: LaurentPoly::one(),
        }
    }

    /// The q-factorial `[m]!` in the variable `q_d`.
    pub fn q_factorial(&self, m: u64, d: i64) -> QScalar {
        let mut out = QScalar::one();
        for j in 1..=m {
            out = &out * &self.q_int(j, d);
        }
        out
    }

    /// Gaussian binomial in the variable `q_d`; always a Laurent polynomial.
    pub fn q_binom(&self, m: u64, k: u64, d: i64) -> Result<QScalar> {
        if k > m {
            return Err(Error::BinomialRange { m, k });
        }
        let num = self.q_factorial(m, d);
        let den = &self.q_factorial(k, d) * &self.q_factorial(m - k, d);
        let out = &num * &den.inverse()?;
        debug_assert!(out.is_laurent(), "Gaussian binomial failed to clear");
        Ok(out)
    }

    fn to_i64(k: &BigInt) -> i64 {
        use num::ToPrimitive;
        k.to_i64().expect("exponent overflow")
    }
}
