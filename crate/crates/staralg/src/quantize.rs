//! The quotient observable algebra of the n-tuple point, and its
//! degree-truncated counterpart for arbitrary singular loci.
//!
//! For the multiplicity-n point on the line the normalizer of the left
//! ideal A ⋆ x^n is computed two independent ways — a closed-form family
//! parameterized by an n×n constants matrix, and a linear-algebra kernel —
//! and the two are required to agree before a quotient algebra is handed
//! out. The quotient is n²-dimensional with canonical basis indexed by the
//! unit constants matrices.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::linalg::{EchelonBasis, SparseMatrix};
use crate::phasepoly::{
    binomial, factorial, pullback, BasePolynomial, Monomial, PhasePolynomial, Variable,
};
use crate::reduction::{
    degree_bounded_monomials, is_in_right_ideal_1d, left_divide_1d, right_divide_1d, IdealSlice,
    NormalForm,
};
use crate::scalar::{LambdaPoly, RationalFunction};

/// The n×n matrix of free constants a[i][k] parameterizing the normalizer
/// family: row i feeds the fibre polynomial h_i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstantsMatrix {
    n: usize,
    entries: Vec<RationalFunction>,
}

impl ConstantsMatrix {
    pub fn zero(n: usize) -> Self {
        ConstantsMatrix {
            n,
            entries: vec![RationalFunction::zero(); n * n],
        }
    }

    /// The (i,k) unit matrix.
    pub fn unit(n: usize, i: usize, k: usize) -> Self {
        let mut m = Self::zero(n);
        m.entries[i * n + k] = RationalFunction::one();
        m
    }

    pub fn from_entries(n: usize, entries: Vec<RationalFunction>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::DimensionMismatch {
                left: n * n,
                right: entries.len(),
            });
        }
        Ok(ConstantsMatrix { n, entries })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, k: usize) -> &RationalFunction {
        &self.entries[i * self.n + k]
    }

    pub fn set(&mut self, i: usize, k: usize, value: RationalFunction) {
        self.entries[i * self.n + k] = value;
    }

    pub fn entries(&self) -> &[RationalFunction] {
        &self.entries
    }
}

/// The closed-form normalizer element attached to a constants matrix:
///
///   h_i = Σ_{k<n} a[i][k] p^k
///       + (2l)^{−i} Σ_{k<i} (2l)^k/(i−k)! Σ_{j≤i−k−1} (−1)^{j+1}
///                   C(i−k−1, j) a[k][n−i+k+j] p^{n+j}.
///
/// The tail terms only touch powers p^n and above, so the constants can be
/// read back off the low-degree coefficients.
pub fn closed_form_h(a: &ConstantsMatrix) -> Result<NormalForm> {
    let n = a.size();
    if n == 0 {
        return Err(Error::InvalidMultiplicity);
    }
    let mut components = Vec::with_capacity(n);
    for i in 0..n {
        let mut coeffs = vec![RationalFunction::zero(); n + i];
        for (k, c) in coeffs.iter_mut().enumerate().take(n) {
            *c = a.get(i, k).clone();
        }
        for k in 0..i {
            let outer = &RationalFunction::two_lambda_pow(k as i64 - i as i64)
                * &RationalFunction::from_parts(
                    LambdaPoly::one(),
                    LambdaPoly::constant(factorial((i - k) as u32)),
                )
                .expect("nonzero factorial");
            for j in 0..=(i - k - 1) {
                let mut weight = RationalFunction::from_big_int(binomial((i - k - 1) as u32, j as u32));
                if j % 2 == 0 {
                    weight = -weight;
                }
                let contribution = &(&outer * &weight) * a.get(k, n - i + k + j);
                coeffs[n + j] = &coeffs[n + j] + &contribution;
            }
        }
        components.push(PhasePolynomial::from_p_coefficients(&coeffs));
    }
    NormalForm::new(n, components)
}

/// Canonical basis of the quotient algebra: closed-form elements at the
/// unit constants matrices, ordered by (i, k) lexicographically.
pub fn closed_form_basis(n: usize) -> Result<Vec<NormalForm>> {
    let mut basis = Vec::with_capacity(n * n);
    for i in 0..n {
        for k in 0..n {
            basis.push(closed_form_h(&ConstantsMatrix::unit(n, i, k))?);
        }
    }
    Ok(basis)
}

/// Left-multiplication by x^n, followed by reduction: an element written in
/// normal form lies in the normalizer iff this vanishes.
fn normalizer_defect(f: &PhasePolynomial, n: usize) -> Result<NormalForm> {
    let w = PhasePolynomial::x_power(n as u32).moyal_star(f)?;
    let (nf, _) = right_divide_1d(&w, n)?;
    Ok(nf)
}

/// Normalizer basis found by pure linear algebra: unknowns are the p-power
/// coefficients of the normal-form components (degree of h_i capped at
/// n+i−1+extra), the conditions are that x^n ⋆ f reduces to zero.
fn kernel_at_bound(n: usize, extra: u32) -> Result<Vec<NormalForm>> {
    let mut columns: Vec<(usize, u32)> = Vec::new();
    for i in 0..n {
        for k in 0..=(n as u32 + i as u32 - 1 + extra) {
            columns.push((i, k));
        }
    }
    let mut per_column: Vec<BTreeMap<(usize, u32), RationalFunction>> = Vec::new();
    for &(i, k) in &columns {
        let unit = PhasePolynomial::p_power(k)
            .moyal_star(&PhasePolynomial::x_power(i as u32))?;
        let defect = normalizer_defect(&unit, n)?;
        let mut slots = BTreeMap::new();
        for (j, component) in defect.components().iter().enumerate() {
            for (mono, c) in component.terms() {
                slots.insert((j, mono.exponent(Variable::P(0))), c.clone());
            }
        }
        per_column.push(slots);
    }
    let equations: BTreeSet<(usize, u32)> = per_column
        .iter()
        .flat_map(|slots| slots.keys().copied())
        .collect();
    let mut matrix = SparseMatrix::new(columns.len());
    for key in equations {
        let row: BTreeMap<usize, RationalFunction> = per_column
            .iter()
            .enumerate()
            .filter_map(|(col, slots)| slots.get(&key).map(|c| (col, c.clone())))
            .collect();
        matrix.push_row(row);
    }
    let mut out = Vec::new();
    for v in matrix.kernel_basis() {
        let mut components = vec![Vec::new(); n];
        for (col, &(i, k)) in columns.iter().enumerate() {
            let c = &v[col];
            if !c.is_zero() {
                let row = &mut components[i];
                if row.len() <= k as usize {
                    row.resize(k as usize + 1, RationalFunction::zero());
                }
                row[k as usize] = c.clone();
            }
        }
        out.push(NormalForm::new(
            n,
            components
                .into_iter()
                .map(|coeffs| PhasePolynomial::from_p_coefficients(&coeffs))
                .collect(),
        )?);
    }
    Ok(out)
}

/// Kernel-method normalizer basis, with a degree-bound guard: recomputing
/// with the component degree caps raised by two must not enlarge the
/// solution space.
pub fn normalizer_kernel_basis(n: usize) -> Result<Vec<NormalForm>> {
    if n == 0 {
        return Err(Error::InvalidMultiplicity);
    }
    let base = kernel_at_bound(n, 0)?;
    let guarded = kernel_at_bound(n, 2)?;
    if base.len() != guarded.len() {
        return Err(Error::Inconsistent(format!(
            "normalizer kernel grew from {} to {} when the degree cap was raised",
            base.len(),
            guarded.len()
        )));
    }
    Ok(base)
}

fn expansion_span(elements: &[NormalForm]) -> EchelonBasis {
    let mut span = EchelonBasis::new(1);
    for f in elements {
        span.insert(&f.expand());
    }
    span
}

/// The quotient observable algebra of the multiplicity-n point: the
/// normalizer of the left ideal A ⋆ x^n modulo the ideal, carried by its
/// canonical basis of closed-form unit elements.
#[derive(Debug, Clone)]
pub struct QuotientAlgebra {
    n: usize,
    basis: Vec<NormalForm>,
}

/// Build the quotient algebra, cross-checking the closed-form family
/// against the independent kernel computation:
/// the two spans must coincide and have dimension n², and every basis
/// element must pass the direct membership test.
pub fn quotient_algebra(n: usize) -> Result<QuotientAlgebra> {
    if n == 0 {
        return Err(Error::InvalidMultiplicity);
    }
    let basis = closed_form_basis(n)?;
    for f in &basis {
        if !normalizer_defect(&f.expand(), n)?.is_zero() {
            return Err(Error::Inconsistent(
                "closed-form element fails the normalizer condition".to_string(),
            ));
        }
    }
    let kernel = normalizer_kernel_basis(n)?;
    let closed_span = expansion_span(&basis);
    let kernel_span = expansion_span(&kernel);
    if closed_span != kernel_span {
        return Err(Error::Inconsistent(
            "closed-form normalizer and kernel normalizer span different spaces".to_string(),
        ));
    }
    if closed_span.rank() != n * n {
        return Err(Error::Inconsistent(format!(
            "normalizer dimension {} differs from {}",
            closed_span.rank(),
            n * n
        )));
    }
    Ok(QuotientAlgebra { n, basis })
}

impl QuotientAlgebra {
    pub fn multiplicity(&self) -> usize {
        self.n
    }

    pub fn dimension(&self) -> usize {
        self.n * self.n
    }

    /// Canonical basis, index u = i·n + k for the (i,k) unit.
    pub fn basis(&self) -> &[NormalForm] {
        &self.basis
    }

    pub fn basis_element(&self, i: usize, k: usize) -> &NormalForm {
        &self.basis[i * self.n + k]
    }

    /// Coordinates of a normalizer element in the canonical basis: the
    /// constants are read off the sub-n p-coefficients, then the closed
    /// form is rebuilt and must reproduce the element exactly.
    pub fn express_in_basis(&self, f: &NormalForm) -> Result<Vec<RationalFunction>> {
        if f.multiplicity() != self.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: f.multiplicity(),
            });
        }
        let mut a = ConstantsMatrix::zero(self.n);
        for i in 0..self.n {
            for k in 0..self.n {
                a.set(i, k, f.coefficient(i, k as u32));
            }
        }
        let rebuilt = closed_form_h(&a)?;
        if &rebuilt != f {
            return Err(Error::NotInNormalizer);
        }
        Ok(a.entries().to_vec())
    }

    /// Star product in the quotient. Both operands must lie in the
    /// normalizer (checked); the product then does too.
    pub fn star(&self, f: &NormalForm, g: &NormalForm) -> Result<NormalForm> {
        self.express_in_basis(f)?;
        self.express_in_basis(g)?;
        let w = f.expand().moyal_star(&g.expand())?;
        let (nf, _) = right_divide_1d(&w, self.n)?;
        Ok(nf)
    }

    /// The full structure-constant tensor c[u][v][w] with
    /// e_u ⋆ e_v = Σ_w c[u][v][w] e_w over the canonical basis.
    pub fn structure_constants(&self) -> Result<StructureConstants> {
        let dim = self.dimension();
        let mut tensor = Vec::with_capacity(dim);
        for u in 0..dim {
            let mut row = Vec::with_capacity(dim);
            for v in 0..dim {
                let prod = self.star(&self.basis[u], &self.basis[v])?;
                row.push(self.express_in_basis(&prod)?);
            }
            tensor.push(row);
        }
        Ok(StructureConstants { n: self.n, tensor })
    }
}

/// Structure constants of the quotient algebra over its canonical basis.
#[derive(Debug, Clone)]
pub struct StructureConstants {
    n: usize,
    tensor: Vec<Vec<Vec<RationalFunction>>>,
}

impl StructureConstants {
    pub fn multiplicity(&self) -> usize {
        self.n
    }

    pub fn dimension(&self) -> usize {
        self.n * self.n
    }

    pub fn component(&self, u: usize, v: usize, w: usize) -> &RationalFunction {
        &self.tensor[u][v][w]
    }

    /// Basis label for index u: the (i,k) unit.
    pub fn label(&self, u: usize) -> (usize, usize) {
        (u / self.n, u % self.n)
    }

    pub fn nonzero_entries(&self) -> Vec<(usize, usize, usize, RationalFunction)> {
        let dim = self.dimension();
        let mut out = Vec::new();
        for u in 0..dim {
            for v in 0..dim {
                for w in 0..dim {
                    if !self.tensor[u][v][w].is_zero() {
                        out.push((u, v, w, self.tensor[u][v][w].clone()));
                    }
                }
            }
        }
        out
    }

    /// Full associativity contraction:
    /// Σ_w c[u][v][w] c[w][z][t] = Σ_w c[v][z][w] c[u][w][t].
    pub fn is_associative(&self) -> bool {
        let dim = self.dimension();
        for u in 0..dim {
            for v in 0..dim {
                for z in 0..dim {
                    for t in 0..dim {
                        let mut lhs = RationalFunction::zero();
                        let mut rhs = RationalFunction::zero();
                        for w in 0..dim {
                            lhs = &lhs + &(&self.tensor[u][v][w] * &self.tensor[w][z][t]);
                            rhs = &rhs + &(&self.tensor[v][z][w] * &self.tensor[u][w][t]);
                        }
                        if lhs != rhs {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Index of the multiplicative unit in the canonical basis (the (0,0)
    /// element, which is the constant 1).
    pub fn unit_index(&self) -> usize {
        0
    }
}

/// The identity x^i ⋆ g = g ⋆ x^i + Σ_{k=1}^{i} C(i,k) (2l)^k (∂_p^k g) ⋆ x^{i−k},
/// returned as the residual (zero iff the identity holds).
pub fn x_commutation_residual(i: u32, g: &PhasePolynomial) -> Result<PhasePolynomial> {
    if g.dimensions() != 1 {
        return Err(Error::DimensionMismatch {
            left: 1,
            right: g.dimensions(),
        });
    }
    let xi = PhasePolynomial::x_power(i);
    let lhs = xi.moyal_star(g)?;
    let mut rhs = g.moyal_star(&xi)?;
    let mut dg = g.clone();
    for k in 1..=i {
        dg = dg.partial_derivative(Variable::P(0))?;
        let weight = &RationalFunction::from_big_int(binomial(i, k))
            * &RationalFunction::two_lambda_pow(k as i64);
        let term = dg.moyal_star(&PhasePolynomial::x_power(i - k))?;
        rhs = &rhs + &term.scale(&weight);
    }
    Ok(&lhs - &rhs)
}

/// Evidence that the left- and right-sided theories are exchanged by the
/// coefficient involution l → −l.
#[derive(Debug, Clone, serde::Serialize)]
pub struct DualityReport {
    pub n: usize,
    pub left_dimension: usize,
    pub right_dimension: usize,
    pub spans_match: bool,
    pub samples_checked: usize,
    pub samples_passed: usize,
}

impl DualityReport {
    pub fn holds(&self) -> bool {
        self.left_dimension == self.right_dimension
            && self.spans_match
            && self.samples_checked == self.samples_passed
    }
}

/// Normalizer of the right ideal x^n ⋆ A, by the mirrored kernel method:
/// unknowns are left-normal-form coefficients x^i ⋆ p^k, the condition is
/// that f ⋆ x^n lies in the right ideal.
fn right_sided_kernel(n: usize, extra: u32) -> Result<Vec<PhasePolynomial>> {
    let mut columns: Vec<(usize, u32)> = Vec::new();
    for i in 0..n {
        for k in 0..=(n as u32 + i as u32 - 1 + extra) {
            columns.push((i, k));
        }
    }
    let xn = PhasePolynomial::x_power(n as u32);
    let mut per_column: Vec<BTreeMap<(usize, u32), RationalFunction>> = Vec::new();
    let mut units: Vec<PhasePolynomial> = Vec::new();
    for &(i, k) in &columns {
        let unit = PhasePolynomial::x_power(i as u32)
            .moyal_star(&PhasePolynomial::p_power(k))?;
        let w = unit.moyal_star(&xn)?;
        let (defect, _) = left_divide_1d(&w, n)?;
        let mut slots = BTreeMap::new();
        for (j, component) in defect.iter().enumerate() {
            for (mono, c) in component.terms() {
                slots.insert((j, mono.exponent(Variable::P(0))), c.clone());
            }
        }
        per_column.push(slots);
        units.push(unit);
    }
    let equations: BTreeSet<(usize, u32)> = per_column
        .iter()
        .flat_map(|slots| slots.keys().copied())
        .collect();
    let mut matrix = SparseMatrix::new(columns.len());
    for key in equations {
        let row: BTreeMap<usize, RationalFunction> = per_column
            .iter()
            .enumerate()
            .filter_map(|(col, slots)| slots.get(&key).map(|c| (col, c.clone())))
            .collect();
        matrix.push_row(row);
    }
    let mut out = Vec::new();
    for v in matrix.kernel_basis() {
        let mut f = PhasePolynomial::zero(1);
        for (col, c) in v.iter().enumerate() {
            if !c.is_zero() {
                f = &f + &units[col].scale(c);
            }
        }
        out.push(f);
    }
    Ok(out)
}

/// Check the two-sided duality at multiplicity n: the right-sided
/// normalizer must be exactly the l-negation of the left-sided one, both
/// as spans and on sampled members.
pub fn lambda_duality_report(
    n: usize,
    samples: &[ConstantsMatrix],
) -> Result<DualityReport> {
    let left = normalizer_kernel_basis(n)?;
    let right = right_sided_kernel(n, 0)?;
    let mut left_negated = EchelonBasis::new(1);
    for f in &left {
        left_negated.insert(&f.expand().negate_lambda());
    }
    let mut right_span = EchelonBasis::new(1);
    for g in &right {
        right_span.insert(g);
    }
    let spans_match = left_negated == right_span;
    let mut samples_passed = 0usize;
    for a in samples {
        let f = closed_form_h(a)?;
        let mirrored = f.expand().negate_lambda();
        let w = mirrored.moyal_star(&PhasePolynomial::x_power(n as u32))?;
        if is_in_right_ideal_1d(&w, n)? {
            samples_passed += 1;
        }
    }
    Ok(DualityReport {
        n,
        left_dimension: left.len(),
        right_dimension: right.len(),
        spans_match,
        samples_checked: samples.len(),
        samples_passed,
    })
}

/// Degree-truncated quotient of the observable algebra of an arbitrary
/// singular locus: normalizer elements of degree ≤ D modulo the ideal
/// slice, with stabilization and closure evidence.
#[derive(Debug, Clone)]
pub struct TruncatedQuotient {
    m: usize,
    degree_bound: u32,
    slack: u32,
    generators: Vec<BasePolynomial>,
    slice_dimension: usize,
    slice_stabilized: bool,
    representatives: EchelonBasis,
    stabilized: bool,
    closure_pairs: usize,
    closure_ok: bool,
}

fn truncated_at(
    m: usize,
    generators: &[BasePolynomial],
    degree_bound: u32,
    slack: u32,
) -> Result<(EchelonBasis, IdealSlice)> {
    let gen_degree = generators
        .iter()
        .filter_map(BasePolynomial::degree)
        .max()
        .unwrap_or(0);
    let test_bound = degree_bound + gen_degree;
    let slice = IdealSlice::build(m, generators, test_bound, slack)?;
    let mut monomials: Vec<Monomial> = degree_bounded_monomials(2 * m, degree_bound)
        .into_iter()
        .map(Monomial::from_exps)
        .collect();
    monomials.sort();
    let lifted: Vec<PhasePolynomial> = generators.iter().map(pullback).collect();
    let mut per_column: Vec<BTreeMap<(usize, Monomial), RationalFunction>> = Vec::new();
    for mono in &monomials {
        let e = PhasePolynomial::monomial_term(m, mono.clone(), RationalFunction::one());
        let mut slots = BTreeMap::new();
        for (alpha, phi) in lifted.iter().enumerate() {
            let w = phi.moyal_star(&e)?;
            let r = slice.reduce(&w)?;
            for (rm, c) in r.terms() {
                slots.insert((alpha, rm.clone()), c.clone());
            }
        }
        per_column.push(slots);
    }
    let equations: BTreeSet<(usize, Monomial)> = per_column
        .iter()
        .flat_map(|slots| slots.keys().cloned())
        .collect();
    let mut matrix = SparseMatrix::new(monomials.len());
    for key in equations {
        let row: BTreeMap<usize, RationalFunction> = per_column
            .iter()
            .enumerate()
            .filter_map(|(col, slots)| slots.get(&key).map(|c| (col, c.clone())))
            .collect();
        matrix.push_row(row);
    }
    let mut quotient = EchelonBasis::new(m);
    for v in matrix.kernel_basis() {
        let mut f = PhasePolynomial::zero(m);
        for (col, c) in v.iter().enumerate() {
            if !c.is_zero() {
                f = &f
                    + &PhasePolynomial::monomial_term(m, monomials[col].clone(), c.clone());
            }
        }
        let reduced = slice.reduce(&f)?;
        quotient.insert(&reduced);
    }
    Ok((quotient, slice))
}

/// Compute the truncated quotient at degree bound D. The kernel rows are
/// genuine normalizer certificates (the slice rows are genuine ideal
/// elements), so everything reported is a true subspace of the quotient;
/// `stabilized` records that one extra unit of construction slack changes
/// neither the slice nor the quotient.
pub fn quotient_truncated(
    m: usize,
    generators: &[BasePolynomial],
    degree_bound: u32,
    slack: u32,
) -> Result<TruncatedQuotient> {
    let (quotient, slice) = truncated_at(m, generators, degree_bound, slack)?;
    let (quotient_above, _) = truncated_at(m, generators, degree_bound, slack + 1)?;
    let stabilized = slice.stabilized() && quotient == quotient_above;
    let mut closure_pairs = 0usize;
    let mut closure_ok = true;
    let reps: Vec<PhasePolynomial> = quotient.rows().cloned().collect();
    for u in &reps {
        for v in &reps {
            let du = u.degree().unwrap_or(0);
            let dv = v.degree().unwrap_or(0);
            if du + dv > degree_bound {
                continue;
            }
            closure_pairs += 1;
            let w = u.moyal_star(v)?;
            let r = slice.reduce(&w)?;
            if !quotient.contains(&r) {
                closure_ok = false;
            }
        }
    }
    Ok(TruncatedQuotient {
        m,
        degree_bound,
        slack,
        generators: generators.to_vec(),
        slice_dimension: slice.basis().restricted(degree_bound).rank(),
        slice_stabilized: slice.stabilized(),
        representatives: quotient,
        stabilized,
        closure_pairs,
        closure_ok,
    })
}

impl TruncatedQuotient {
    pub fn dimensions(&self) -> usize {
        self.m
    }

    pub fn degree_bound(&self) -> u32 {
        self.degree_bound
    }

    pub fn slack(&self) -> u32 {
        self.slack
    }

    pub fn dimension(&self) -> usize {
        self.representatives.rank()
    }

    pub fn dimension_profile(&self) -> Vec<(u32, usize)> {
        (0..=self.degree_bound)
            .map(|d| (d, self.representatives.rank_at_degree(d)))
            .collect()
    }

    pub fn representatives(&self) -> &EchelonBasis {
        &self.representatives
    }

    pub fn representative_strings(&self) -> Vec<String> {
        self.representatives.rows().map(|r| r.to_string()).collect()
    }

    pub fn slice_dimension(&self) -> usize {
        self.slice_dimension
    }

    pub fn stabilized(&self) -> bool {
        self.stabilized
    }

    pub fn closure_pairs(&self) -> usize {
        self.closure_pairs
    }

    pub fn closure_ok(&self) -> bool {
        self.closure_ok
    }

    pub fn summary(&self) -> TruncatedQuotientSummary {
        TruncatedQuotientSummary {
            generators: self.generators.iter().map(|g| g.to_string()).collect(),
            base_dimension: self.m,
            degree_bound: self.degree_bound,
            slack: self.slack,
            dimension: self.dimension(),
            dimension_by_degree: self
                .dimension_profile()
                .into_iter()
                .filter(|(_, rank)| *rank > 0)
                .collect(),
            slice_dimension: self.slice_dimension,
            stabilized: self.stabilized,
            slice_stabilized: self.slice_stabilized,
            closure_pairs: self.closure_pairs,
            closure_ok: self.closure_ok,
            representatives: self.representative_strings(),
        }
    }
}

/// Serializable summary of a truncated quotient for reports.
#[derive(Debug, Clone, serde::Serialize)]
pub struct TruncatedQuotientSummary {
    pub generators: Vec<String>,
    pub base_dimension: usize,
    pub degree_bound: u32,
    pub slack: u32,
    pub dimension: usize,
    pub dimension_by_degree: BTreeMap<u32, usize>,
    pub slice_dimension: usize,
    pub stabilized: bool,
    pub slice_stabilized: bool,
    pub closure_pairs: usize,
    pub closure_ok: bool,
    pub representatives: Vec<String>,
}

/// Per-degree dimensions of the exactly-known quotient of the
/// multiplicity-n point, truncated at total degree D; the oracle the
/// truncated engine is measured against.
pub fn exact_truncated_profile(n: usize, degree_bound: u32) -> Result<Vec<(u32, usize)>> {
    let q = quotient_algebra(n)?;
    let span = expansion_span(q.basis()).restricted(degree_bound);
    Ok((0..=degree_bound)
        .map(|d| (d, span.rank_at_degree(d)))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(v: i64) -> RationalFunction {
        RationalFunction::from_int(v)
    }

    #[test]
    fn closed_form_n2_family() {
        // Unit (0,1): h_0 = p, h_1 = −(1/(2l)) p².
        let f = closed_form_h(&ConstantsMatrix::unit(2, 0, 1)).unwrap();
        assert_eq!(f.component(0), &PhasePolynomial::p_power(1));
        let expected = PhasePolynomial::p_power(2)
            .scale(&-&RationalFunction::two_lambda_pow(-1));
        assert_eq!(f.component(1), &expected);
        // The other three units have no correction tail.
        for (i, k) in [(0, 0), (1, 0), (1, 1)] {
            let g = closed_form_h(&ConstantsMatrix::unit(2, i, k)).unwrap();
            assert_eq!(g.component(i), &PhasePolynomial::p_power(k as u32));
            assert!(g.component(1 - i).is_zero());
        }
    }

    #[test]
    fn closed_form_elements_satisfy_normalizer_condition() {
        for n in 1..=4 {
            for i in 0..n {
                for k in 0..n {
                    let f = closed_form_h(&ConstantsMatrix::unit(n, i, k)).unwrap();
                    assert!(
                        normalizer_defect(&f.expand(), n).unwrap().is_zero(),
                        "unit ({i},{k}) fails at n = {n}"
                    );
                }
            }
        }
    }

    #[test]
    fn kernel_dimension_law() {
        for n in 1..=4 {
            assert_eq!(normalizer_kernel_basis(n).unwrap().len(), n * n);
        }
    }

    #[test]
    fn quotient_algebra_cross_checks() {
        for n in 1..=3 {
            let q = quotient_algebra(n).unwrap();
            assert_eq!(q.dimension(), n * n);
        }
    }

    #[test]
    fn unit_element_is_identity() {
        let q = quotient_algebra(2).unwrap();
        let one = q.basis_element(0, 0);
        for f in q.basis() {
            assert_eq!(&q.star(one, f).unwrap(), f);
            assert_eq!(&q.star(f, one).unwrap(), f);
        }
    }

    #[test]
    fn x_class_is_nilpotent() {
        let q = quotient_algebra(2).unwrap();
        let x_class = q.basis_element(1, 0);
        assert_eq!(x_class.expand(), PhasePolynomial::x_power(1));
        let square = q.star(x_class, x_class).unwrap();
        assert!(square.is_zero());
    }

    #[test]
    fn frozen_product_in_quotient_n2() {
        // e_{1,0} ⋆ e_{0,1} = 2l e_{0,0} − e_{1,1}.
        let q = quotient_algebra(2).unwrap();
        let prod = q
            .star(q.basis_element(1, 0), q.basis_element(0, 1))
            .unwrap();
        let coords = q.express_in_basis(&prod).unwrap();
        assert_eq!(coords[0], RationalFunction::two_lambda_pow(1));
        assert_eq!(coords[1], RationalFunction::zero());
        assert_eq!(coords[2], RationalFunction::zero());
        assert_eq!(coords[3], rf(-1));
        // And e_{0,1} ⋆ e_{1,0} = e_{1,1}.
        let flip = q
            .star(q.basis_element(0, 1), q.basis_element(1, 0))
            .unwrap();
        let coords = q.express_in_basis(&flip).unwrap();
        assert_eq!(coords, vec![rf(0), rf(0), rf(0), rf(1)]);
    }

    #[test]
    fn structure_constants_are_associative() {
        for n in 1..=2 {
            let c = quotient_algebra(n).unwrap().structure_constants().unwrap();
            assert!(c.is_associative());
            assert_eq!(c.component(0, 0, 0), &RationalFunction::one());
        }
    }

    #[test]
    fn membership_rejects_non_normalizer_elements() {
        let q = quotient_algebra(2).unwrap();
        // p alone is not in the normalizer of the double point.
        let bare_p = NormalForm::new(
            2,
            vec![PhasePolynomial::p_power(1), PhasePolynomial::zero(1)],
        )
        .unwrap();
        assert!(matches!(
            q.express_in_basis(&bare_p),
            Err(Error::NotInNormalizer)
        ));
    }

    #[test]
    fn x_commutation_identity_examples() {
        let g = &PhasePolynomial::p_power(3)
            + &PhasePolynomial::x_power(1)
                .classical_mul(&PhasePolynomial::p_power(1))
                .unwrap();
        for i in 0..=4 {
            assert!(x_commutation_residual(i, &g).unwrap().is_zero());
        }
    }

    #[test]
    fn duality_holds_at_small_multiplicity() {
        let samples = vec![
            ConstantsMatrix::unit(2, 0, 1),
            ConstantsMatrix::from_entries(
                2,
                vec![rf(1), RationalFunction::lambda(), rf(-3), rf(2)],
            )
            .unwrap(),
        ];
        let report = lambda_duality_report(2, &samples).unwrap();
        assert!(report.holds(), "{report:?}");
        assert_eq!(report.left_dimension, 4);
    }

    #[test]
    fn truncated_double_point_matches_exact_profile() {
        let gen = BasePolynomial::x_power_1d(2);
        let tq = quotient_truncated(1, &[gen], 5, 0).unwrap();
        assert!(tq.stabilized());
        assert!(tq.closure_ok());
        let exact = exact_truncated_profile(2, 5).unwrap();
        assert_eq!(tq.dimension_profile(), exact);
        let total: usize = exact.iter().map(|(_, r)| r).sum();
        assert_eq!(tq.dimension(), total);
    }

    #[test]
    fn truncated_cross_quotient_runs() {
        let x1 = PhasePolynomial::variable(2, Variable::X(0));
        let x2 = PhasePolynomial::variable(2, Variable::X(1));
        let gen = BasePolynomial::try_from(x1.classical_mul(&x2).unwrap()).unwrap();
        let tq = quotient_truncated(2, &[gen], 3, 1).unwrap();
        assert!(tq.dimension() > 0);
        assert!(tq.closure_ok());
    }
}
