//! Reduction modulo left star-ideals.
//!
//! For the one-dimensional multiplicity ideal (generated by x^n) the
//! division algorithm is exact: every phase polynomial has a unique normal
//! form Σ_{i<n} h_i(p) ⋆ x^i. For arbitrary generator sets in any dimension
//! the module provides a degree-truncated ideal slice: a canonical echelon
//! basis of a subspace of the ideal, with a stabilization certificate.

use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::linalg::EchelonBasis;
use crate::phasepoly::{pullback, BasePolynomial, Monomial, PhasePolynomial};
use crate::scalar::RationalFunction;

/// Unique representative of a class modulo the left ideal generated by x^n
/// in the m = 1 algebra: the tuple (h_0, …, h_{n−1}) of fibre polynomials
/// with class representative Σ_i h_i ⋆ x^i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalForm {
    n: usize,
    components: Vec<PhasePolynomial>,
}

impl NormalForm {
    pub fn new(n: usize, components: Vec<PhasePolynomial>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidMultiplicity);
        }
        if components.len() != n {
            return Err(Error::Inconsistent(format!(
                "expected {n} components, got {}",
                components.len()
            )));
        }
        for c in &components {
            if c.dimensions() != 1 {
                return Err(Error::DimensionMismatch {
                    left: 1,
                    right: c.dimensions(),
                });
            }
            if !c.is_x_free() {
                return Err(Error::Inconsistent(
                    "normal form components must be fibre polynomials".to_string(),
                ));
            }
        }
        Ok(NormalForm { n, components })
    }

    pub fn zero(n: usize) -> Self {
        NormalForm {
            n,
            components: vec![PhasePolynomial::zero(1); n],
        }
    }

    pub fn multiplicity(&self) -> usize {
        self.n
    }

    pub fn components(&self) -> &[PhasePolynomial] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &PhasePolynomial {
        &self.components[i]
    }

    /// The coefficient of p^k in h_i.
    pub fn coefficient(&self, i: usize, k: u32) -> RationalFunction {
        self.components[i].coefficient(&Monomial::from_exps(vec![0, k]))
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(PhasePolynomial::is_zero)
    }

    /// The canonical class representative Σ_i h_i ⋆ x^i.
    pub fn expand(&self) -> PhasePolynomial {
        let mut out = PhasePolynomial::zero(1);
        for (i, h) in self.components.iter().enumerate() {
            if h.is_zero() {
                continue;
            }
            let xi = PhasePolynomial::x_power(i as u32);
            out = &out + &h.moyal_star(&xi).expect("m = 1 star product");
        }
        out
    }

    pub fn scale(&self, c: &RationalFunction) -> Self {
        NormalForm {
            n: self.n,
            components: self.components.iter().map(|h| h.scale(c)).collect(),
        }
    }
}

impl Add for &NormalForm {
    type Output = NormalForm;
    fn add(self, rhs: &NormalForm) -> NormalForm {
        assert_eq!(self.n, rhs.n, "multiplicity mismatch");
        NormalForm {
            n: self.n,
            components: self
                .components
                .iter()
                .zip(&rhs.components)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &NormalForm {
    type Output = NormalForm;
    fn sub(self, rhs: &NormalForm) -> NormalForm {
        assert_eq!(self.n, rhs.n, "multiplicity mismatch");
        NormalForm {
            n: self.n,
            components: self
                .components
                .iter()
                .zip(&rhs.components)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &NormalForm {
    type Output = NormalForm;
    fn neg(self) -> NormalForm {
        NormalForm {
            n: self.n,
            components: self.components.iter().map(|h| -h).collect(),
        }
    }
}

fn check_divisor(f: &PhasePolynomial, n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidMultiplicity);
    }
    if f.dimensions() != 1 {
        return Err(Error::DimensionMismatch {
            left: 1,
            right: f.dimensions(),
        });
    }
    Ok(())
}

/// Divide on the right by x^n in the m = 1 algebra:
///
/// f = Σ_{i<n} h_i ⋆ x^i + q ⋆ x^n,
///
/// peeling the top x-degree slice (the leading x-slice of h ⋆ x^d is h·x^d,
/// so each step strictly lowers the top x-degree). Both parts are unique.
pub fn right_divide_1d(f: &PhasePolynomial, n: usize) -> Result<(NormalForm, PhasePolynomial)> {
    check_divisor(f, n)?;
    let mut remainder = f.clone();
    let mut components = vec![PhasePolynomial::zero(1); n];
    let mut quotient = PhasePolynomial::zero(1);
    while !remainder.is_zero() {
        let (d, top) = remainder
            .x_slices()
            .into_iter()
            .next_back()
            .expect("nonzero remainder has a top slice");
        if (d as usize) >= n {
            let shift = top
                .moyal_star(&PhasePolynomial::x_power(d - n as u32))
                .expect("m = 1");
            quotient = &quotient + &shift;
        } else {
            components[d as usize] = top.clone();
        }
        let peel = top
            .moyal_star(&PhasePolynomial::x_power(d))
            .expect("m = 1");
        remainder = &remainder - &peel;
    }
    Ok((NormalForm::new(n, components)?, quotient))
}

/// Divide on the left by x^n in the m = 1 algebra:
///
/// f = Σ_{i<n} x^i ⋆ h_i + x^n ⋆ q.
///
/// Mirror of [`right_divide_1d`]; returned components are the x^i ⋆ h_i
/// coefficients in that order.
pub fn left_divide_1d(f: &PhasePolynomial, n: usize) -> Result<(Vec<PhasePolynomial>, PhasePolynomial)> {
    check_divisor(f, n)?;
    let mut remainder = f.clone();
    let mut components = vec![PhasePolynomial::zero(1); n];
    let mut quotient = PhasePolynomial::zero(1);
    while !remainder.is_zero() {
        let (d, top) = remainder
            .x_slices()
            .into_iter()
            .next_back()
            .expect("nonzero remainder has a top slice");
        if (d as usize) >= n {
            let shift = PhasePolynomial::x_power(d - n as u32)
                .moyal_star(&top)
                .expect("m = 1");
            quotient = &quotient + &shift;
        } else {
            components[d as usize] = top.clone();
        }
        let peel = PhasePolynomial::x_power(d)
            .moyal_star(&top)
            .expect("m = 1");
        remainder = &remainder - &peel;
    }
    Ok((components, quotient))
}

/// Membership in the left ideal A ⋆ x^n (exact, any degree).
pub fn is_in_left_ideal_1d(f: &PhasePolynomial, n: usize) -> Result<bool> {
    let (nf, _) = right_divide_1d(f, n)?;
    Ok(nf.is_zero())
}

/// Membership in the right ideal x^n ⋆ A (exact, any degree).
pub fn is_in_right_ideal_1d(f: &PhasePolynomial, n: usize) -> Result<bool> {
    let (components, _) = left_divide_1d(f, n)?;
    Ok(components.iter().all(PhasePolynomial::is_zero))
}

/// Degree-truncated picture of the left star-ideal Σ_α A ⋆ π*(φ_α) for an
/// arbitrary generator set in any dimension.
///
/// The basis spans combinations g ⋆ π*(φ_α) with deg g ≤ D + s − deg φ_α,
/// restricted to leading degree ≤ D; every row is a genuine ideal element.
/// `stabilized` certifies that raising the slack by one adds nothing below
/// degree D, the standard evidence that the slice has converged.
#[derive(Debug, Clone)]
pub struct IdealSlice {
    m: usize,
    degree_bound: u32,
    slack: u32,
    generators: Vec<BasePolynomial>,
    basis: EchelonBasis,
    stabilized: bool,
}

fn span_at(m: usize, generators: &[BasePolynomial], build_degree: u32) -> Result<EchelonBasis> {
    let mut basis = EchelonBasis::new(m);
    for phi in generators {
        let lifted = pullback(phi);
        let d_phi = lifted.degree().expect("nonzero generator");
        if d_phi > build_degree {
            continue;
        }
        for exps in degree_bounded_monomials(2 * m, build_degree - d_phi) {
            let g = PhasePolynomial::monomial_term(
                m,
                Monomial::from_exps(exps),
                RationalFunction::one(),
            );
            let row = g.moyal_star(&lifted)?;
            basis.insert(&row);
        }
    }
    Ok(basis)
}

/// All exponent vectors of length `vars` with total degree ≤ `bound`.
pub(crate) fn degree_bounded_monomials(vars: usize, bound: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = vec![0u32; vars];
    fn rec(out: &mut Vec<Vec<u32>>, current: &mut Vec<u32>, idx: usize, left: u32) {
        if idx == current.len() {
            out.push(current.clone());
            return;
        }
        for v in 0..=left {
            current[idx] = v;
            rec(out, current, idx + 1, left - v);
        }
        current[idx] = 0;
    }
    rec(&mut out, &mut current, 0, bound);
    out
}

impl IdealSlice {
    pub fn build(
        m: usize,
        generators: &[BasePolynomial],
        degree_bound: u32,
        slack: u32,
    ) -> Result<IdealSlice> {
        if generators.is_empty() {
            return Err(Error::Inconsistent(
                "an ideal slice needs at least one generator".to_string(),
            ));
        }
        for phi in generators {
            if phi.dimensions() != m {
                return Err(Error::DimensionMismatch {
                    left: m,
                    right: phi.dimensions(),
                });
            }
            if phi.is_zero() {
                return Err(Error::Inconsistent(
                    "ideal generators must be nonzero".to_string(),
                ));
            }
        }
        let at_slack = span_at(m, generators, degree_bound + slack)?.restricted(degree_bound);
        let above = span_at(m, generators, degree_bound + slack + 1)?.restricted(degree_bound);
        let stabilized = at_slack == above;
        Ok(IdealSlice {
            m,
            degree_bound,
            slack,
            generators: generators.to_vec(),
            basis: at_slack,
            stabilized,
        })
    }

    pub fn dimensions(&self) -> usize {
        self.m
    }

    pub fn degree_bound(&self) -> u32 {
        self.degree_bound
    }

    pub fn slack(&self) -> u32 {
        self.slack
    }

    pub fn generators(&self) -> &[BasePolynomial] {
        &self.generators
    }

    pub fn basis(&self) -> &EchelonBasis {
        &self.basis
    }

    pub fn stabilized(&self) -> bool {
        self.stabilized
    }

    pub fn dimension(&self) -> usize {
        self.basis.rank()
    }

    /// (degree, rank at that degree) for every degree up to the bound.
    pub fn dimension_profile(&self) -> Vec<(u32, usize)> {
        (0..=self.degree_bound)
            .map(|d| (d, self.basis.rank_at_degree(d)))
            .collect()
    }

    /// Canonical residue of `f` against the slice; `f` must fit under the
    /// degree bound for the answer to be meaningful.
    pub fn reduce(&self, f: &PhasePolynomial) -> Result<PhasePolynomial> {
        if f.dimensions() != self.m {
            return Err(Error::DimensionMismatch {
                left: self.m,
                right: f.dimensions(),
            });
        }
        let deg = f.degree().unwrap_or(0);
        if deg > self.degree_bound {
            return Err(Error::DegreeExceedsSlice {
                degree: deg,
                bound: self.degree_bound,
            });
        }
        Ok(self.basis.reduce(f))
    }

    pub fn contains(&self, f: &PhasePolynomial) -> Result<bool> {
        Ok(self.reduce(f)?.is_zero())
    }

    /// Rows as display strings, ascending leading monomial.
    pub fn basis_strings(&self) -> Vec<String> {
        self.basis.rows().map(|row| row.to_string()).collect()
    }
}

/// Serializable summary of a slice for reports.
#[derive(Debug, Clone, serde::Serialize)]
pub struct IdealSliceSummary {
    pub generators: Vec<String>,
    pub degree_bound: u32,
    pub slack: u32,
    pub dimension: usize,
    pub dimension_by_degree: BTreeMap<u32, usize>,
    pub stabilized: bool,
    pub basis: Vec<String>,
}

impl IdealSlice {
    pub fn summary(&self) -> IdealSliceSummary {
        IdealSliceSummary {
            generators: self.generators.iter().map(|g| g.to_string()).collect(),
            degree_bound: self.degree_bound,
            slack: self.slack,
            dimension: self.dimension(),
            dimension_by_degree: self
                .dimension_profile()
                .into_iter()
                .filter(|(_, rank)| *rank > 0)
                .collect(),
            stabilized: self.stabilized,
            basis: self.basis_strings(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::phasepoly::Variable;

    fn x() -> PhasePolynomial {
        PhasePolynomial::variable(1, Variable::X(0))
    }

    fn p() -> PhasePolynomial {
        PhasePolynomial::variable(1, Variable::P(0))
    }

    fn lam() -> RationalFunction {
        RationalFunction::lambda()
    }

    #[test]
    fn divide_star_xp_by_square() {
        // x ⋆ p = 2l ⋆ 1 + p ⋆ x (mod x ⋆ x): components (2l, p), quotient 0.
        let f = x().moyal_star(&p()).unwrap();
        let (nf, q) = right_divide_1d(&f, 2).unwrap();
        assert_eq!(
            nf.component(0),
            &PhasePolynomial::constant(1, &lam() + &lam())
        );
        assert_eq!(nf.component(1), &p());
        assert!(q.is_zero());
        assert_eq!(nf.expand(), f);
    }

    #[test]
    fn divide_classical_xp_by_square() {
        let f = x().classical_mul(&p()).unwrap();
        let (nf, q) = right_divide_1d(&f, 2).unwrap();
        assert_eq!(nf.component(0), &PhasePolynomial::constant(1, lam()));
        assert_eq!(nf.component(1), &p());
        assert!(q.is_zero());
    }

    #[test]
    fn divide_with_quotient() {
        // x² ⋆ p = 0 + 4l ⋆ x + p ⋆ x², so mod x² the class is (0, 4l), q = p.
        let f = PhasePolynomial::x_power(2).moyal_star(&p()).unwrap();
        let (nf, q) = right_divide_1d(&f, 2).unwrap();
        assert!(nf.component(0).is_zero());
        assert_eq!(
            nf.component(1),
            &PhasePolynomial::constant(1, &(&lam() + &lam()) + &(&lam() + &lam()))
        );
        assert_eq!(q, p());
        // Exactness: f = expand(nf) + q ⋆ x².
        let back = &nf.expand()
            + &q.moyal_star(&PhasePolynomial::x_power(2)).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn ideal_membership_examples() {
        let f = p().moyal_star(&PhasePolynomial::x_power(2)).unwrap();
        assert!(is_in_left_ideal_1d(&f, 2).unwrap());
        assert!(!is_in_left_ideal_1d(&f, 3).unwrap());
        assert!(!is_in_left_ideal_1d(&x(), 2).unwrap());
        assert!(is_in_left_ideal_1d(&PhasePolynomial::zero(1), 5).unwrap());
    }

    #[test]
    fn left_division_mirrors_right_division() {
        let f = x().moyal_star(&p()).unwrap();
        let (components, q) = left_divide_1d(&f, 2).unwrap();
        // x ⋆ p = x ⋆ p exactly: components (0, p), quotient 0? Peel:
        // top slice p at degree 1: x ⋆ p = x*p + l leaves constant l − l…
        let mut back = PhasePolynomial::zero(1);
        for (i, h) in components.iter().enumerate() {
            back = &back
                + &PhasePolynomial::x_power(i as u32).moyal_star(h).unwrap();
        }
        back = &back
            + &PhasePolynomial::x_power(2).moyal_star(&q).unwrap();
        assert_eq!(back, f);
        assert!(q.is_zero());
    }

    #[test]
    fn left_division_is_lambda_conjugate_of_right_division() {
        // With N the coefficient map l → −l: left components of f are
        // N(right components of N(f)) because N(a ⋆ b) = N(b) ⋆ N(a).
        let f = &PhasePolynomial::x_power(3).moyal_star(&p()).unwrap()
            + &x().moyal_star(&PhasePolynomial::p_power(2)).unwrap();
        let n = 2;
        let (left, lq) = left_divide_1d(&f, n).unwrap();
        let (right, rq) = right_divide_1d(&f.negate_lambda(), n).unwrap();
        for i in 0..n {
            assert_eq!(left[i], right.component(i).negate_lambda());
        }
        assert_eq!(lq, rq.negate_lambda());
    }

    #[test]
    fn normal_form_uniqueness_via_expand_roundtrip() {
        let nf = NormalForm::new(
            2,
            vec![
                &p() + &PhasePolynomial::constant(1, lam()),
                PhasePolynomial::p_power(2),
            ],
        )
        .unwrap();
        let (again, q) = right_divide_1d(&nf.expand(), 2).unwrap();
        assert_eq!(again, nf);
        assert!(q.is_zero());
    }

    #[test]
    fn normal_form_validation() {
        assert!(matches!(
            NormalForm::new(0, vec![]),
            Err(Error::InvalidMultiplicity)
        ));
        assert!(NormalForm::new(1, vec![x()]).is_err());
        assert!(matches!(
            right_divide_1d(&PhasePolynomial::variable(2, Variable::X(0)), 2),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn slice_of_double_point_ideal() {
        let gen = BasePolynomial::x_power_1d(2);
        let slice = IdealSlice::build(1, &[gen.clone()], 2, 0).unwrap();
        assert_eq!(slice.dimension(), 1);
        assert!(slice.stabilized());
        assert_eq!(slice.basis_strings(), vec!["x^2".to_string()]);

        let slice3 = IdealSlice::build(1, &[gen], 3, 0).unwrap();
        assert_eq!(slice3.dimension(), 3);
        let strings = slice3.basis_strings();
        assert!(strings.contains(&"x^2".to_string()));
        assert!(strings.contains(&"x^3".to_string()));
        assert!(strings.contains(&"x^2*p - 2*l*x".to_string()));
    }

    #[test]
    fn slice_reduction_examples() {
        let gen = BasePolynomial::x_power_1d(2);
        let slice = IdealSlice::build(1, &[gen], 3, 0).unwrap();
        let x2p = PhasePolynomial::x_power(2).classical_mul(&p()).unwrap();
        let reduced = slice.reduce(&x2p).unwrap();
        assert_eq!(reduced, x().scale(&(&lam() + &lam())));
        let too_big = PhasePolynomial::x_power(4);
        assert!(matches!(
            slice.reduce(&too_big),
            Err(Error::DegreeExceedsSlice { degree: 4, bound: 3 })
        ));
    }

    #[test]
    fn slice_membership_agrees_with_division() {
        let gen = BasePolynomial::x_power_1d(2);
        let slice = IdealSlice::build(1, &[gen], 6, 0).unwrap();
        let samples = vec![
            p().moyal_star(&PhasePolynomial::x_power(2)).unwrap(),
            PhasePolynomial::p_power(2)
                .moyal_star(&PhasePolynomial::x_power(3))
                .unwrap(),
            &x().moyal_star(&p()).unwrap() + &PhasePolynomial::x_power(2),
            PhasePolynomial::x_power(2).moyal_star(&p()).unwrap(),
        ];
        for f in samples {
            assert_eq!(
                slice.contains(&f).unwrap(),
                is_in_left_ideal_1d(&f, 2).unwrap(),
                "disagreement on {f}"
            );
        }
    }

    #[test]
    fn cross_ideal_slice() {
        let x1 = PhasePolynomial::variable(2, Variable::X(0));
        let x2 = PhasePolynomial::variable(2, Variable::X(1));
        let gen = BasePolynomial::try_from(x1.classical_mul(&x2).unwrap()).unwrap();
        let slice = IdealSlice::build(2, &[gen], 3, 1).unwrap();
        assert_eq!(slice.dimension(), 5);
        assert!(slice.stabilized());
        let member = x1
            .classical_mul(&x2)
            .unwrap()
            .classical_mul(&x1)
            .unwrap();
        assert!(slice.contains(&member).unwrap());
        assert!(!slice.contains(&x1).unwrap());
    }

    #[test]
    fn slice_rejects_bad_generators() {
        assert!(IdealSlice::build(1, &[], 3, 0).is_err());
        let zero = BasePolynomial::try_from(PhasePolynomial::zero(1)).unwrap();
        assert!(IdealSlice::build(1, &[zero], 3, 0).is_err());
    }
}
