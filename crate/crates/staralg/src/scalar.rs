//! Exact arithmetic in Q(l), the field of rational functions of the
//! deformation parameter.
//!
//! Every coefficient in the engine is a [`RationalFunction`]: a quotient of
//! integer polynomials in `l`, kept in a canonical form so that equality is
//! a coefficient-wise comparison. There is no floating point anywhere.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Univariate integer polynomial in `l`, little-endian coefficients with no
/// trailing zeros. The zero polynomial is the empty vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LambdaPoly {
    coeffs: Vec<BigInt>,
}

impl LambdaPoly {
    pub fn zero() -> Self {
        LambdaPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        LambdaPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        let mut p = LambdaPoly { coeffs: vec![c] };
        p.trim();
        p
    }

    /// `c * l^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return LambdaPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        LambdaPoly { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = LambdaPoly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree; the zero polynomial reports None.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Number of nonzero coefficients.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Order of vanishing at l = 0 (index of the lowest nonzero coefficient).
    fn order_at_zero(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn add(&self, other: &LambdaPoly) -> LambdaPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) + other.coeff(k));
        }
        LambdaPoly::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &LambdaPoly) -> LambdaPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) - other.coeff(k));
        }
        LambdaPoly::from_coeffs(coeffs)
    }

    pub fn neg(&self) -> LambdaPoly {
        LambdaPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &LambdaPoly) -> LambdaPoly {
        if self.is_zero() || other.is_zero() {
            return LambdaPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LambdaPoly::from_coeffs(coeffs)
    }

    /// Positive gcd of all coefficients; 0 for the zero polynomial.
    fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divide every coefficient by `d`, which must divide exactly.
    fn div_scalar_exact(&self, d: &BigInt) -> LambdaPoly {
        debug_assert!(!d.is_zero());
        LambdaPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| {
                    let (q, r) = c.div_rem(d);
                    debug_assert!(r.is_zero());
                    q
                })
                .collect(),
        }
    }

    /// Exact polynomial division; the caller guarantees `d` divides `self`.
    fn div_exact(&self, d: &LambdaPoly) -> LambdaPoly {
        assert!(!d.is_zero());
        if self.is_zero() {
            return LambdaPoly::zero();
        }
        let mut rem = self.coeffs.clone();
        let dd = d.coeffs.len() - 1;
        let nd = rem.len() - 1;
        assert!(nd >= dd, "exact division with too-small dividend");
        let lead = d.coeffs.last().unwrap();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let top = std::mem::take(&mut rem[k + dd]);
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            debug_assert!(r.is_zero(), "inexact polynomial division");
            for (j, c) in d.coeffs.iter().enumerate().take(dd) {
                let prod = &q * c;
                rem[k + j] -= prod;
            }
            quot[k] = q;
        }
        debug_assert!(rem.iter().all(|c| c.is_zero()));
        LambdaPoly::from_coeffs(quot)
    }

    /// Pseudo-remainder of `self` by `d` (multiplies by a power of the
    /// leading coefficient of `d` so division stays integral).
    fn pseudo_rem(&self, d: &LambdaPoly) -> LambdaPoly {
        let dd = d.coeffs.len() - 1;
        let lead = d.coeffs.last().unwrap().clone();
        let mut rem = self.clone();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let top = rem.coeffs.last().unwrap().clone();
            // rem <- lead * rem - top * l^(rd-dd) * d
            let mut next = vec![BigInt::zero(); rd + 1];
            for (k, c) in rem.coeffs.iter().enumerate() {
                next[k] = c * &lead;
            }
            for (j, c) in d.coeffs.iter().enumerate() {
                next[rd - dd + j] -= &top * c;
            }
            rem = LambdaPoly::from_coeffs(next);
        }
        rem
    }

    /// Primitive positive-leading-coefficient gcd over the integers.
    fn gcd(&self, other: &LambdaPoly) -> LambdaPoly {
        if self.is_zero() {
            return other.primitive_positive();
        }
        if other.is_zero() {
            return self.primitive_positive();
        }
        let mut a = self.primitive_positive();
        let mut b = other.primitive_positive();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_positive();
            a = b;
            b = r;
        }
        a
    }

    fn primitive_positive(&self) -> LambdaPoly {
        if self.is_zero() {
            return LambdaPoly::zero();
        }
        let c = self.content();
        let mut p = self.div_scalar_exact(&c);
        if p.coeffs.last().unwrap().is_negative() {
            p = p.neg();
        }
        p
    }

    /// Substitute l -> -l.
    fn negate_variable(&self) -> LambdaPoly {
        LambdaPoly {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    fn evaluate(&self, at: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Sum of decimal digit lengths over all coefficients; the pivoting
    /// heuristic for exact elimination.
    fn digit_size(&self) -> usize {
        self.coeffs
            .iter()
            .map(|c| c.magnitude().to_string().len())
            .sum()
    }
}

impl fmt::Display for LambdaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            match (a.is_one(), k) {
                (_, 0) => write!(f, "{}", a)?,
                (true, 1) => write!(f, "l")?,
                (true, _) => write!(f, "l^{}", k)?,
                (false, 1) => write!(f, "{}*l", a)?,
                (false, _) => write!(f, "{}*l^{}", a, k)?,
            }
        }
        Ok(())
    }
}

/// An element of Q(l) in canonical form: numerator and denominator are
/// integer polynomials with no common polynomial factor, jointly coprime
/// integer contents, and a positive leading coefficient on the denominator.
/// Zero is 0/1, so derived equality decides field equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: LambdaPoly,
    den: LambdaPoly,
}

impl RationalFunction {
    fn canonical(num: LambdaPoly, den: LambdaPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RationalFunction {
                num: LambdaPoly::zero(),
                den: LambdaPoly::one(),
            };
        }
        let cn = num.content();
        let cd = den.content();
        let mut np = num.div_scalar_exact(&cn);
        let mut dp = den.div_scalar_exact(&cd);
        let g = np.gcd(&dp);
        if !g.is_one() {
            np = np.div_exact(&g);
            dp = dp.div_exact(&g);
        }
        let ci = cn.gcd(&cd);
        let cn = cn / &ci;
        let cd = cd / &ci;
        let mut num = np.mul(&LambdaPoly::constant(cn));
        let mut den = dp.mul(&LambdaPoly::constant(cd));
        if den.leading().unwrap().is_negative() {
            num = num.neg();
            den = den.neg();
        }
        RationalFunction { num, den }
    }

    pub fn from_parts(num: LambdaPoly, den: LambdaPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    pub fn zero() -> Self {
        RationalFunction {
            num: LambdaPoly::zero(),
            den: LambdaPoly::one(),
        }
    }

    pub fn one() -> Self {
        RationalFunction {
            num: LambdaPoly::one(),
            den: LambdaPoly::one(),
        }
    }

    pub fn from_big_int(v: BigInt) -> Self {
        RationalFunction {
            num: LambdaPoly::constant(v),
            den: LambdaPoly::one(),
        }
    }

    pub fn from_int(v: i64) -> Self {
        RationalFunction {
            num: LambdaPoly::constant(BigInt::from(v)),
            den: LambdaPoly::one(),
        }
    }

    /// Exact rational constant `p/q`.
    pub fn from_ratio(p: i64, q: i64) -> Self {
        assert!(q != 0);
        Self::canonical(
            LambdaPoly::constant(BigInt::from(p)),
            LambdaPoly::constant(BigInt::from(q)),
        )
    }

    pub fn from_big_rational(r: &BigRational) -> Self {
        Self::canonical(
            LambdaPoly::constant(r.numer().clone()),
            LambdaPoly::constant(r.denom().clone()),
        )
    }

    /// The deformation parameter itself.
    pub fn lambda() -> Self {
        RationalFunction {
            num: LambdaPoly::monomial(BigInt::one(), 1),
            den: LambdaPoly::one(),
        }
    }

    /// `l^k`, with negative `k` giving the reciprocal power.
    pub fn lambda_pow(k: i64) -> Self {
        if k >= 0 {
            RationalFunction {
                num: LambdaPoly::monomial(BigInt::one(), k as usize),
                den: LambdaPoly::one(),
            }
        } else {
            RationalFunction {
                num: LambdaPoly::one(),
                den: LambdaPoly::monomial(BigInt::one(), (-k) as usize),
            }
        }
    }

    /// `(2l)^k`, with negative `k` giving the reciprocal power.
    pub fn two_lambda_pow(k: i64) -> Self {
        let a = k.unsigned_abs() as u32;
        let c = BigInt::from(2).pow(a);
        if k >= 0 {
            RationalFunction {
                num: LambdaPoly::monomial(c, a as usize),
                den: LambdaPoly::one(),
            }
        } else {
            RationalFunction {
                num: LambdaPoly::one(),
                den: LambdaPoly::monomial(c, a as usize),
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn numerator(&self) -> &LambdaPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LambdaPoly {
        &self.den
    }

    pub fn invert(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut num = self.den.clone();
        let mut den = self.num.clone();
        if den.leading().unwrap().is_negative() {
            num = num.neg();
            den = den.neg();
        }
        Ok(RationalFunction { num, den })
    }

    pub fn divide(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.invert()?)
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.invert()? } else { self.clone() };
        let mut acc = RationalFunction::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Substitute l -> -l; a ring automorphism and an involution.
    pub fn negate_lambda(&self) -> Self {
        let mut num = self.num.negate_variable();
        let mut den = self.den.negate_variable();
        if den.leading().unwrap().is_negative() {
            num = num.neg();
            den = den.neg();
        }
        RationalFunction { num, den }
    }

    /// Order of vanishing at l = 0; negative values are pole orders.
    pub fn pole_order_at_zero(&self) -> Result<i64> {
        if self.is_zero() {
            return Err(Error::ZeroHasNoPoleOrder);
        }
        let on = self.num.order_at_zero().unwrap() as i64;
        let od = self.den.order_at_zero().unwrap() as i64;
        Ok(on - od)
    }

    /// Exact evaluation at a rational point.
    pub fn evaluate(&self, at: &BigRational) -> Result<BigRational> {
        let d = self.den.evaluate(at);
        if d.is_zero() {
            return Err(Error::EvaluationAtPole);
        }
        Ok(self.num.evaluate(at) / d)
    }

    /// True when the denominator is a constant times a power of l, so the
    /// element lies in the Laurent ring Z[l, 1/l] up to rational scalars.
    pub fn is_laurent(&self) -> bool {
        self.den.coeffs.iter().filter(|c| !c.is_zero()).count() <= 1
    }

    /// Sign of the leading numerator coefficient; used by the printer.
    pub fn is_negative_leading(&self) -> bool {
        self.num.leading().map_or(false, |c| c.is_negative())
    }

    /// True when the printed form must be parenthesized to act as a single
    /// factor of a product (multi-term numerator or nontrivial denominator).
    pub fn needs_parens_as_factor(&self) -> bool {
        self.num.term_count() > 1 || !self.den.is_one()
    }

    /// Pivot-size heuristic: total decimal digits across both polynomials.
    pub fn digit_size(&self) -> usize {
        self.num.digit_size() + self.den.digit_size()
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let num = self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den));
        let den = self.den.mul(&rhs.den);
        RationalFunction::canonical(num, den)
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        if rhs.is_zero() {
            return self.clone();
        }
        let num = self.num.mul(&rhs.den).sub(&rhs.num.mul(&self.den));
        let den = self.den.mul(&rhs.den);
        RationalFunction::canonical(num, den)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        RationalFunction::canonical(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

impl Add for RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: RationalFunction) -> RationalFunction {
        &self + &rhs
    }
}

impl Sub for RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: RationalFunction) -> RationalFunction {
        &self - &rhs
    }
}

impl Mul for RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: RationalFunction) -> RationalFunction {
        &self * &rhs
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let multi_term = |p: &LambdaPoly| p.coeffs.iter().filter(|c| !c.is_zero()).count() > 1;
        if multi_term(&self.num) {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        // The denominator needs parentheses unless it prints as a single
        // atom of the expression grammar (an integer, `l`, or `l^k`).
        let den_atom = !multi_term(&self.den) && {
            let lead = self.den.leading().unwrap();
            self.den.degree() == Some(0) || lead.is_one()
        };
        if den_atom {
            write!(f, "/{}", self.den)
        } else {
            write!(f, "/({})", self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(num: &[i64], den: &[i64]) -> RationalFunction {
        RationalFunction::from_parts(
            LambdaPoly::from_coeffs(num.iter().map(|&c| BigInt::from(c)).collect()),
            LambdaPoly::from_coeffs(den.iter().map(|&c| BigInt::from(c)).collect()),
        )
        .unwrap()
    }

    #[test]
    fn add_like_terms() {
        // 1/(2l) + 1/(2l) = 1/l
        let half_inv = rf(&[1], &[0, 2]);
        assert_eq!(&half_inv + &half_inv, rf(&[1], &[0, 1]));
    }

    #[test]
    fn add_identity() {
        let l = RationalFunction::lambda();
        assert_eq!(&l + &RationalFunction::zero(), l);
    }

    #[test]
    fn add_cancels_common_factor() {
        // (l^2 - 1)/(l - 1) + 1 = l + 2
        let a = rf(&[-1, 0, 1], &[-1, 1]);
        let expected = rf(&[2, 1], &[1]);
        assert_eq!(&a + &RationalFunction::one(), expected);
    }

    #[test]
    fn mul_and_invert() {
        let two_l = RationalFunction::two_lambda_pow(1);
        let inv = RationalFunction::two_lambda_pow(-1);
        assert!( (&two_l * &inv).is_one() );
        assert_eq!(two_l.invert().unwrap(), inv);
        assert_eq!(
            RationalFunction::lambda_pow(2).invert().unwrap(),
            RationalFunction::lambda_pow(-2)
        );
        // (2l)^2 * (1/(2l)) = 2l
        let sq = RationalFunction::two_lambda_pow(2);
        assert_eq!(&sq * &inv, two_l);
    }

    #[test]
    fn invert_zero_fails() {
        assert_eq!(
            RationalFunction::zero().invert(),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn negate_lambda_examples() {
        let two_l = RationalFunction::two_lambda_pow(1);
        assert_eq!(two_l.negate_lambda(), -&two_l);
        let l2 = RationalFunction::lambda_pow(2);
        assert_eq!(l2.negate_lambda(), l2);
        let inv = RationalFunction::two_lambda_pow(-1);
        assert_eq!(inv.negate_lambda(), -&inv);
    }

    #[test]
    fn negate_lambda_is_involution_and_automorphism() {
        let a = rf(&[3, -2, 1], &[0, 0, 5]);
        let b = rf(&[-1, 7], &[2, 1]);
        assert_eq!(a.negate_lambda().negate_lambda(), a);
        assert_eq!(
            (&a * &b).negate_lambda(),
            &a.negate_lambda() * &b.negate_lambda()
        );
        assert_eq!(
            (&a + &b).negate_lambda(),
            &a.negate_lambda() + &b.negate_lambda()
        );
    }

    #[test]
    fn pole_orders() {
        assert_eq!(rf(&[0, 0, 0, 1], &[2]).pole_order_at_zero().unwrap(), 3);
        assert_eq!(rf(&[1], &[0, 2]).pole_order_at_zero().unwrap(), -1);
        assert_eq!(rf(&[1, 1], &[1]).pole_order_at_zero().unwrap(), 0);
        assert!(RationalFunction::zero().pole_order_at_zero().is_err());
    }

    #[test]
    fn pole_order_additive() {
        let a = rf(&[0, 3], &[2, 1]);
        let b = rf(&[5], &[0, 0, 7]);
        let oa = a.pole_order_at_zero().unwrap();
        let ob = b.pole_order_at_zero().unwrap();
        assert_eq!((&a * &b).pole_order_at_zero().unwrap(), oa + ob);
    }

    #[test]
    fn evaluate_examples() {
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        assert_eq!(
            RationalFunction::two_lambda_pow(1).evaluate(&half).unwrap(),
            BigRational::one()
        );
        assert_eq!(
            RationalFunction::two_lambda_pow(-1)
                .evaluate(&half)
                .unwrap(),
            BigRational::one()
        );
        assert_eq!(
            RationalFunction::lambda_pow(-1).evaluate(&BigRational::zero()),
            Err(Error::EvaluationAtPole)
        );
    }

    #[test]
    fn canonical_display() {
        // (2*l^2 + 1)/(2*l)
        let v = rf(&[1, 0, 2], &[0, 2]);
        assert_eq!(v.to_string(), "(2*l^2 + 1)/(2*l)");
        assert_eq!(rf(&[1], &[0, 2]).to_string(), "1/(2*l)");
        assert_eq!(RationalFunction::lambda_pow(-2).to_string(), "1/l^2");
        assert_eq!(rf(&[0, -1], &[1]).to_string(), "-l");
        assert_eq!(rf(&[2, 1], &[1]).to_string(), "l + 2");
        assert_eq!(RationalFunction::zero().to_string(), "0");
        assert_eq!(rf(&[1], &[2]).to_string(), "1/2");
    }

    #[test]
    fn denominator_sign_normalized() {
        let v = rf(&[1], &[0, -2]);
        assert_eq!(v.to_string(), "-1/(2*l)");
        assert!(v.denominator().leading().unwrap() > &BigInt::zero());
    }

    #[test]
    fn content_convention() {
        // (2l + 2)/(4l) reduces to (l + 1)/(2l)
        let v = rf(&[2, 2], &[0, 4]);
        assert_eq!(v.to_string(), "(l + 1)/(2*l)");
    }

    #[test]
    fn laurent_detection() {
        assert!(rf(&[1, 2], &[0, 0, 4]).is_laurent());
        assert!(!rf(&[1], &[1, 1]).is_laurent());
    }
}
