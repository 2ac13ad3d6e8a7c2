//! The polynomial phase-space algebra over Q(l): sparse polynomials in
//! x_1..x_m, p_1..p_m with the Moyal star product, the classical product,
//! the Poisson bracket, and the pullback from the base.
//!
//! The star product follows the sign convention under which x ⋆ p = x*p + l
//! (so f ⋆ g − g ⋆ f = 2l{f,g} + higher order); the opposite convention is
//! recovered exactly by the substitution l → −l.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::scalar::RationalFunction;

/// A coordinate on phase space: `X(a)` is the a-th base coordinate, `P(a)`
/// the conjugate fibre coordinate (0-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variable {
    X(usize),
    P(usize),
}

impl Variable {
    pub fn name(&self, m: usize) -> String {
        match (self, m) {
            (Variable::X(0), 1) => "x".to_string(),
            (Variable::P(0), 1) => "p".to_string(),
            (Variable::X(a), _) => format!("x{}", a + 1),
            (Variable::P(a), _) => format!("p{}", a + 1),
        }
    }
}

/// Exponent vector: the first m entries are x-exponents, the last m are
/// p-exponents. Ordered graded-lexicographically with x-variables first,
/// so the order-maximum of a polynomial is its leading monomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn unit(m: usize) -> Self {
        Monomial {
            exps: vec![0; 2 * m],
        }
    }

    pub fn from_exps(exps: Vec<u32>) -> Self {
        debug_assert!(exps.len() % 2 == 0);
        Monomial { exps }
    }

    pub fn variable(m: usize, v: Variable) -> Self {
        let mut mono = Monomial::unit(m);
        match v {
            Variable::X(a) => mono.exps[a] += 1,
            Variable::P(a) => mono.exps[m + a] += 1,
        }
        mono
    }

    fn index(&self, v: Variable) -> usize {
        let m = self.exps.len() / 2;
        match v {
            Variable::X(a) => a,
            Variable::P(a) => m + a,
        }
    }

    pub fn exponent(&self, v: Variable) -> u32 {
        self.exps[self.index(v)]
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn x_degree(&self) -> u32 {
        self.exps[..self.exps.len() / 2].iter().sum()
    }

    pub fn p_degree(&self) -> u32 {
        self.exps[self.exps.len() / 2..].iter().sum()
    }

    pub fn product(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Element of Q(l)[x_1..x_m, p_1..p_m], stored as a sparse exponent-keyed
/// term map with no zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhasePolynomial {
    m: usize,
    terms: BTreeMap<Monomial, RationalFunction>,
}

impl PhasePolynomial {
    pub fn zero(m: usize) -> Self {
        PhasePolynomial {
            m,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(m: usize) -> Self {
        Self::constant(m, RationalFunction::one())
    }

    pub fn constant(m: usize, c: RationalFunction) -> Self {
        let mut p = Self::zero(m);
        if !c.is_zero() {
            p.terms.insert(Monomial::unit(m), c);
        }
        p
    }

    pub fn variable(m: usize, v: Variable) -> Self {
        let mut p = Self::zero(m);
        p.terms
            .insert(Monomial::variable(m, v), RationalFunction::one());
        p
    }

    pub fn monomial_term(m: usize, mono: Monomial, c: RationalFunction) -> Self {
        debug_assert_eq!(mono.exps.len(), 2 * m);
        let mut p = Self::zero(m);
        if !c.is_zero() {
            p.terms.insert(mono, c);
        }
        p
    }

    /// x^k in the one-dimensional algebra.
    pub fn x_power(k: u32) -> Self {
        Self::monomial_term(
            1,
            Monomial::from_exps(vec![k, 0]),
            RationalFunction::one(),
        )
    }

    /// p^k in the one-dimensional algebra.
    pub fn p_power(k: u32) -> Self {
        Self::monomial_term(
            1,
            Monomial::from_exps(vec![0, k]),
            RationalFunction::one(),
        )
    }

    pub fn dimensions(&self) -> usize {
        self.m
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &RationalFunction)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Total degree; None is the zero polynomial (degree −∞).
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|mono| mono.total_degree()).max()
    }

    pub fn x_degree(&self) -> Option<u32> {
        self.terms.keys().map(|mono| mono.x_degree()).max()
    }

    pub fn p_degree(&self) -> Option<u32> {
        self.terms.keys().map(|mono| mono.p_degree()).max()
    }

    pub fn is_p_free(&self) -> bool {
        self.p_degree().unwrap_or(0) == 0
    }

    pub fn is_x_free(&self) -> bool {
        self.x_degree().unwrap_or(0) == 0
    }

    /// Largest monomial in graded-lexicographic order.
    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.keys().next_back()
    }

    pub fn coefficient(&self, mono: &Monomial) -> RationalFunction {
        self.terms
            .get(mono)
            .cloned()
            .unwrap_or_else(RationalFunction::zero)
    }

    fn insert_add(&mut self, mono: Monomial, c: RationalFunction) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &RationalFunction) -> Self {
        if c.is_zero() {
            return Self::zero(self.m);
        }
        PhasePolynomial {
            m: self.m,
            terms: self
                .terms
                .iter()
                .map(|(mono, v)| (mono.clone(), v * c))
                .collect(),
        }
    }

    fn check_dims(&self, other: &Self) -> Result<()> {
        if self.m != other.m {
            return Err(Error::DimensionMismatch {
                left: self.m,
                right: other.m,
            });
        }
        Ok(())
    }

    /// Commutative pointwise product.
    pub fn classical_mul(&self, other: &Self) -> Result<Self> {
        self.check_dims(other)?;
        let mut out = Self::zero(self.m);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.insert_add(ma.product(mb), ca * cb);
            }
        }
        Ok(out)
    }

    /// Formal partial derivative.
    pub fn partial_derivative(&self, v: Variable) -> Result<Self> {
        let idx = match v {
            Variable::X(a) if a < self.m => a,
            Variable::P(a) if a < self.m => self.m + a,
            _ => return Err(Error::UnknownVariable(v.name(self.m))),
        };
        let mut out = Self::zero(self.m);
        for (mono, c) in &self.terms {
            let e = mono.exps[idx];
            if e == 0 {
                continue;
            }
            let mut exps = mono.exps.clone();
            exps[idx] -= 1;
            let factor = RationalFunction::from_int(e as i64);
            out.insert_add(Monomial::from_exps(exps), c * &factor);
        }
        Ok(out)
    }

    fn derive_multi(&self, xs: bool, orders: &[u32]) -> Self {
        let mut out = self.clone();
        for (a, &k) in orders.iter().enumerate() {
            for _ in 0..k {
                let v = if xs { Variable::X(a) } else { Variable::P(a) };
                out = out.partial_derivative(v).expect("in-range variable");
                if out.is_zero() {
                    return out;
                }
            }
        }
        out
    }

    fn max_exponents(&self, xs: bool) -> Vec<u32> {
        let mut maxes = vec![0u32; self.m];
        for mono in self.terms.keys() {
            for a in 0..self.m {
                let e = if xs {
                    mono.exps[a]
                } else {
                    mono.exps[self.m + a]
                };
                maxes[a] = maxes[a].max(e);
            }
        }
        maxes
    }

    /// The Moyal star product, as the exact terminating bidifferential sum
    ///
    /// f ⋆ g = Σ_{α,β} l^{|α|+|β|} (−1)^{|β|} / (α! β!)
    ///         · (∂_x^α ∂_p^β f) · (∂_p^α ∂_x^β g).
    pub fn moyal_star(&self, other: &Self) -> Result<Self> {
        self.check_dims(other)?;
        let m = self.m;
        let alpha_bound: Vec<u32> = self
            .max_exponents(true)
            .into_iter()
            .zip(other.max_exponents(false))
            .map(|(a, b)| a.min(b))
            .collect();
        let beta_bound: Vec<u32> = self
            .max_exponents(false)
            .into_iter()
            .zip(other.max_exponents(true))
            .map(|(a, b)| a.min(b))
            .collect();
        let mut out = Self::zero(m);
        for alpha in multi_indices(&alpha_bound) {
            let f_a = self.derive_multi(true, &alpha);
            if f_a.is_zero() {
                continue;
            }
            let g_a = other.derive_multi(false, &alpha);
            if g_a.is_zero() {
                continue;
            }
            for beta in multi_indices(&beta_bound) {
                let f_ab = f_a.derive_multi(false, &beta);
                if f_ab.is_zero() {
                    continue;
                }
                let g_ab = g_a.derive_multi(true, &beta);
                if g_ab.is_zero() {
                    continue;
                }
                let order: u32 = alpha.iter().sum::<u32>() + beta.iter().sum::<u32>();
                let mut denom = BigInt::one();
                for &k in alpha.iter().chain(beta.iter()) {
                    denom *= factorial(k);
                }
                let neg = beta.iter().sum::<u32>() % 2 == 1;
                let mut scalar = &RationalFunction::lambda_pow(order as i64)
                    * &RationalFunction::from_parts(
                        crate::scalar::LambdaPoly::one(),
                        crate::scalar::LambdaPoly::constant(denom),
                    )
                    .expect("nonzero factorial");
                if neg {
                    scalar = -scalar;
                }
                let prod = f_ab.classical_mul(&g_ab)?;
                out = &out + &prod.scale(&scalar);
            }
        }
        Ok(out)
    }

    /// Star product with the deformation parameter negated, i.e. the same
    /// series with l replaced by −l while the operands keep their
    /// coefficients.
    pub fn moyal_star_negated(&self, other: &Self) -> Result<Self> {
        Ok(self
            .negate_lambda()
            .moyal_star(&other.negate_lambda())?
            .negate_lambda())
    }

    /// {f,g} = Σ_a (∂f/∂x_a ∂g/∂p_a − ∂f/∂p_a ∂g/∂x_a), the classical
    /// limit structure: f ⋆ g − g ⋆ f = 2l{f,g} + (l-order ≥ 3 terms).
    pub fn poisson_bracket(&self, other: &Self) -> Result<Self> {
        self.check_dims(other)?;
        let mut out = Self::zero(self.m);
        for a in 0..self.m {
            let fx = self.partial_derivative(Variable::X(a))?;
            let gp = other.partial_derivative(Variable::P(a))?;
            let fp = self.partial_derivative(Variable::P(a))?;
            let gx = other.partial_derivative(Variable::X(a))?;
            out = &(&out + &fx.classical_mul(&gp)?) - &fp.classical_mul(&gx)?;
        }
        Ok(out)
    }

    /// Apply l → −l to every coefficient.
    pub fn negate_lambda(&self) -> Self {
        PhasePolynomial {
            m: self.m,
            terms: self
                .terms
                .iter()
                .map(|(mono, c)| (mono.clone(), c.negate_lambda()))
                .collect(),
        }
    }

    /// Decompose an m=1 polynomial by x-degree: f = Σ_j x^j · f_j(p) with
    /// the classical product; returns the nonzero slices f_j.
    pub fn x_slices(&self) -> BTreeMap<u32, PhasePolynomial> {
        debug_assert_eq!(self.m, 1);
        let mut slices: BTreeMap<u32, PhasePolynomial> = BTreeMap::new();
        for (mono, c) in &self.terms {
            let j = mono.exps[0];
            let p_part = Monomial::from_exps(vec![0, mono.exps[1]]);
            slices
                .entry(j)
                .or_insert_with(|| PhasePolynomial::zero(1))
                .insert_add(p_part, c.clone());
        }
        slices
    }

    /// Dense coefficient list by p-degree for an m=1, x-free polynomial.
    pub fn p_coefficients(&self) -> Vec<RationalFunction> {
        debug_assert_eq!(self.m, 1);
        debug_assert!(self.is_x_free());
        let deg = self.p_degree().map_or(0, |d| d as usize);
        let mut out = vec![RationalFunction::zero(); deg + 1];
        for (mono, c) in &self.terms {
            out[mono.exps[1] as usize] = c.clone();
        }
        if self.is_zero() {
            out.clear();
        }
        out
    }

    /// Build an m=1, x-free polynomial from p-degree coefficients.
    pub fn from_p_coefficients(coeffs: &[RationalFunction]) -> Self {
        let mut out = Self::zero(1);
        for (k, c) in coeffs.iter().enumerate() {
            out.insert_add(Monomial::from_exps(vec![0, k as u32]), c.clone());
        }
        out
    }
}

impl Add for &PhasePolynomial {
    type Output = PhasePolynomial;
    fn add(self, rhs: &PhasePolynomial) -> PhasePolynomial {
        assert_eq!(self.m, rhs.m, "phase-space dimension mismatch");
        let mut out = self.clone();
        for (mono, c) in &rhs.terms {
            out.insert_add(mono.clone(), c.clone());
        }
        out
    }
}

impl Sub for &PhasePolynomial {
    type Output = PhasePolynomial;
    fn sub(self, rhs: &PhasePolynomial) -> PhasePolynomial {
        assert_eq!(self.m, rhs.m, "phase-space dimension mismatch");
        let mut out = self.clone();
        for (mono, c) in &rhs.terms {
            out.insert_add(mono.clone(), -c);
        }
        out
    }
}

impl Neg for &PhasePolynomial {
    type Output = PhasePolynomial;
    fn neg(self) -> PhasePolynomial {
        PhasePolynomial {
            m: self.m,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), -v)).collect(),
        }
    }
}

fn monomial_string(mono: &Monomial, m: usize) -> String {
    let mut factors = Vec::new();
    for a in 0..m {
        let e = mono.exponent(Variable::X(a));
        if e == 1 {
            factors.push(Variable::X(a).name(m));
        } else if e > 1 {
            factors.push(format!("{}^{}", Variable::X(a).name(m), e));
        }
    }
    for a in 0..m {
        let e = mono.exponent(Variable::P(a));
        if e == 1 {
            factors.push(Variable::P(a).name(m));
        } else if e > 1 {
            factors.push(format!("{}^{}", Variable::P(a).name(m), e));
        }
    }
    factors.join("*")
}

impl fmt::Display for PhasePolynomial {
    /// Deterministic rendering: terms in descending graded-lexicographic
    /// order, coefficients parenthesized exactly when needed to reparse as
    /// a single product factor. The output is valid expression syntax.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (mono, c) in self.terms.iter().rev() {
            let negative = c.is_negative_leading();
            let magnitude = if negative { -c } else { c.clone() };
            if first {
                if negative {
                    write!(f, "-")?;
                }
                first = false;
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mono_str = monomial_string(mono, self.m);
            if mono_str.is_empty() {
                // Standalone constant term: parenthesize a multi-term
                // numerator so an extracted sign distributes correctly.
                if magnitude.numerator().term_count() > 1 && !negative && self.terms.len() == 1 {
                    write!(f, "{magnitude}")?;
                } else if magnitude.numerator().term_count() > 1 {
                    write!(f, "({magnitude})")?;
                } else {
                    write!(f, "{magnitude}")?;
                }
            } else if magnitude.is_one() {
                write!(f, "{mono_str}")?;
            } else if magnitude.needs_parens_as_factor() {
                write!(f, "({magnitude})*{mono_str}")?;
            } else {
                write!(f, "{magnitude}*{mono_str}")?;
            }
        }
        Ok(())
    }
}

/// A polynomial on the base: x-variables only, no fibre dependence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasePolynomial {
    inner: PhasePolynomial,
}

impl BasePolynomial {
    pub fn from_phase(p: PhasePolynomial) -> Result<Self> {
        if p.p_degree().unwrap_or(0) > 0 {
            return Err(Error::UnknownVariable(
                "fibre variable in a base polynomial".to_string(),
            ));
        }
        Ok(BasePolynomial { inner: p })
    }

    pub fn dimensions(&self) -> usize {
        self.inner.m
    }

    pub fn degree(&self) -> Option<u32> {
        self.inner.degree()
    }

    pub fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    pub fn mul(&self, other: &BasePolynomial) -> Result<BasePolynomial> {
        Ok(BasePolynomial {
            inner: self.inner.classical_mul(&other.inner)?,
        })
    }

    /// x^k on the one-dimensional base.
    pub fn x_power_1d(k: u32) -> Self {
        BasePolynomial {
            inner: PhasePolynomial::x_power(k),
        }
    }
}

impl TryFrom<PhasePolynomial> for BasePolynomial {
    type Error = Error;
    fn try_from(p: PhasePolynomial) -> Result<Self> {
        BasePolynomial::from_phase(p)
    }
}

impl fmt::Display for BasePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.inner.fmt(f)
    }
}

/// Lift of a base polynomial to phase space; p-degree stays zero. Pullbacks
/// star-commute with each other and multiply classically.
pub fn pullback(q: &BasePolynomial) -> PhasePolynomial {
    q.inner.clone()
}

pub(crate) fn factorial(k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=k {
        acc *= BigInt::from(i);
    }
    acc
}

pub(crate) fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return num_traits::Zero::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// All componentwise multi-indices 0 ≤ v ≤ bounds.
pub(crate) fn multi_indices(bounds: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for &b in bounds {
        let mut next = Vec::with_capacity(out.len() * (b as usize + 1));
        for prefix in &out {
            for v in 0..=b {
                let mut row = prefix.clone();
                row.push(v);
                next.push(row);
            }
        }
        out = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> PhasePolynomial {
        PhasePolynomial::variable(1, Variable::X(0))
    }

    fn p() -> PhasePolynomial {
        PhasePolynomial::variable(1, Variable::P(0))
    }

    fn lambda_c() -> PhasePolynomial {
        PhasePolynomial::constant(1, RationalFunction::lambda())
    }

    #[test]
    fn classical_product_examples() {
        let xp = x().classical_mul(&p()).unwrap();
        assert_eq!(xp.degree(), Some(2));
        let sum = &x() + &p();
        assert_eq!(sum.classical_mul(&PhasePolynomial::one(1)).unwrap(), sum);
        let x2 = x().classical_mul(&x()).unwrap();
        let x3 = x2.classical_mul(&x()).unwrap();
        assert_eq!(x2.classical_mul(&x3).unwrap(), PhasePolynomial::x_power(5));
    }

    #[test]
    fn derivative_examples() {
        let xp = x().classical_mul(&p()).unwrap();
        assert_eq!(xp.partial_derivative(Variable::P(0)).unwrap(), x());
        let x3 = PhasePolynomial::x_power(3);
        let three_x2 = PhasePolynomial::x_power(2).scale(&RationalFunction::from_int(3));
        assert_eq!(x3.partial_derivative(Variable::X(0)).unwrap(), three_x2);
        let p2 = PhasePolynomial::p_power(2);
        assert!(p2.partial_derivative(Variable::X(0)).unwrap().is_zero());
        assert!(matches!(
            p2.partial_derivative(Variable::X(1)),
            Err(Error::UnknownVariable(_))
        ));
    }

    #[test]
    fn star_product_reproduces_canonical_commutator() {
        // x ⋆ p = x*p + l and p ⋆ x = x*p − l
        let xp = x().classical_mul(&p()).unwrap();
        assert_eq!(x().moyal_star(&p()).unwrap(), &xp + &lambda_c());
        assert_eq!(p().moyal_star(&x()).unwrap(), &xp - &lambda_c());
    }

    #[test]
    fn star_of_base_pullbacks_is_classical() {
        let x2 = PhasePolynomial::x_power(2);
        let x3 = PhasePolynomial::x_power(3);
        assert_eq!(
            x2.moyal_star(&x3).unwrap(),
            PhasePolynomial::x_power(5)
        );
    }

    #[test]
    fn star_unit_law() {
        let f = &x().moyal_star(&p()).unwrap() + &PhasePolynomial::x_power(3);
        let one = PhasePolynomial::one(1);
        assert_eq!(one.moyal_star(&f).unwrap(), f);
        assert_eq!(f.moyal_star(&one).unwrap(), f);
    }

    #[test]
    fn star_dimension_mismatch() {
        let f = PhasePolynomial::variable(2, Variable::X(0));
        assert!(matches!(
            x().moyal_star(&f),
            Err(Error::DimensionMismatch { left: 1, right: 2 })
        ));
    }

    #[test]
    fn poisson_examples() {
        assert_eq!(
            x().poisson_bracket(&p()).unwrap(),
            PhasePolynomial::one(1)
        );
        let f = &x().classical_mul(&p()).unwrap() + &PhasePolynomial::x_power(2);
        assert!(f.poisson_bracket(&f).unwrap().is_zero());
        let x2 = PhasePolynomial::x_power(2);
        assert_eq!(
            x2.poisson_bracket(&p()).unwrap(),
            x().scale(&RationalFunction::from_int(2))
        );
    }

    #[test]
    fn commutator_matches_bracket_at_first_order() {
        let f = &x().classical_mul(&x()).unwrap() + &p();
        let g = x().classical_mul(&p()).unwrap();
        let comm = &f.moyal_star(&g).unwrap() - &g.moyal_star(&f).unwrap();
        let bracket = f
            .poisson_bracket(&g)
            .unwrap()
            .scale(&RationalFunction::two_lambda_pow(1));
        let rest = &comm - &bracket;
        for (_, c) in rest.terms() {
            assert!(c.pole_order_at_zero().unwrap() >= 3);
        }
    }

    #[test]
    fn pullback_examples() {
        let q = BasePolynomial::x_power_1d(3);
        let lifted = pullback(&q);
        assert_eq!(lifted, PhasePolynomial::x_power(3));
        assert!(lifted.is_p_free());

        let x1 = PhasePolynomial::variable(2, Variable::X(0));
        let x2 = PhasePolynomial::variable(2, Variable::X(1));
        let cross = BasePolynomial::try_from(x1.classical_mul(&x2).unwrap()).unwrap();
        assert_eq!(pullback(&cross).degree(), Some(2));

        assert!(BasePolynomial::try_from(p()).is_err());
    }

    #[test]
    fn pullback_transpose_identity() {
        // π*(q) ⋆ g = g ⋆_{−l} π*(q)
        let q = BasePolynomial::x_power_1d(2);
        let g = &x().moyal_star(&p()).unwrap() + &PhasePolynomial::p_power(3);
        let lhs = pullback(&q).moyal_star(&g).unwrap();
        let rhs = g.moyal_star_negated(&pullback(&q)).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn display_examples() {
        let star = x().moyal_star(&p()).unwrap();
        assert_eq!(star.to_string(), "x*p + l");
        let f = &PhasePolynomial::x_power(2).scale(&RationalFunction::from_ratio(1, 2))
            - &p().scale(&RationalFunction::two_lambda_pow(-1));
        assert_eq!(f.to_string(), "(1/2)*x^2 - (1/(2*l))*p");
        assert_eq!(PhasePolynomial::zero(1).to_string(), "0");
        let m2 = PhasePolynomial::variable(2, Variable::X(1))
            .classical_mul(&PhasePolynomial::variable(2, Variable::P(0)))
            .unwrap();
        assert_eq!(m2.to_string(), "x2*p1");
    }

    #[test]
    fn x_slices_roundtrip() {
        let f = &x().moyal_star(&p()).unwrap() + &PhasePolynomial::x_power(3);
        let slices = f.x_slices();
        let mut rebuilt = PhasePolynomial::zero(1);
        for (j, slice) in &slices {
            let xj = PhasePolynomial::x_power(*j);
            rebuilt = &rebuilt + &xj.classical_mul(slice).unwrap();
        }
        assert_eq!(rebuilt, f);
    }
}
