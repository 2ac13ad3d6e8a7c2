//! The matrix realization of the quotient algebra.
//!
//! The quotient acts on the n-dimensional module V spanned by
//! e_k = p^k ⋆ x^{n−1} (classes mod the left ideal). In the row convention
//! h ⋆ e_a = Σ_b A^h[a][b] e_b the assignment h ↦ A^h reverses products
//! (A^{h⋆h̃} = A^{h̃}·A^{h}), so the engine detects whether the row form or
//! its transpose is the product-preserving map and records the choice.

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::SparseMatrix;
use crate::phasepoly::{PhasePolynomial, Variable};
use crate::quantize::{quotient_algebra, QuotientAlgebra};
use crate::reduction::NormalForm;
use crate::scalar::RationalFunction;

/// The module basis e_0 = x^{n−1}, e_k = p^k ⋆ x^{n−1}.
pub fn module_basis(n: usize) -> Result<Vec<PhasePolynomial>> {
    if n == 0 {
        return Err(Error::InvalidMultiplicity);
    }
    (0..n)
        .map(|k| {
            PhasePolynomial::p_power(k as u32)
                .moyal_star(&PhasePolynomial::x_power(n as u32 - 1))
        })
        .collect()
}

/// Square matrix over Q(l), row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionMatrix {
    n: usize,
    entries: Vec<RationalFunction>,
}

impl ActionMatrix {
    pub fn zero(n: usize) -> Self {
        ActionMatrix {
            n,
            entries: vec![RationalFunction::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for r in 0..n {
            m.entries[r * n + r] = RationalFunction::one();
        }
        m
    }

    pub fn from_entries(n: usize, entries: Vec<RationalFunction>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::DimensionMismatch {
                left: n * n,
                right: entries.len(),
            });
        }
        Ok(ActionMatrix { n, entries })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> &RationalFunction {
        &self.entries[row * self.n + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: RationalFunction) {
        self.entries[row * self.n + col] = value;
    }

    pub fn entries(&self) -> &[RationalFunction] {
        &self.entries
    }

    pub fn mul(&self, other: &ActionMatrix) -> Result<ActionMatrix> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let n = self.n;
        let mut out = ActionMatrix::zero(n);
        for r in 0..n {
            for c in 0..n {
                let mut acc = RationalFunction::zero();
                for k in 0..n {
                    acc = &acc + &(self.get(r, k) * other.get(k, c));
                }
                out.set(r, c, acc);
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> ActionMatrix {
        let n = self.n;
        let mut out = ActionMatrix::zero(n);
        for r in 0..n {
            for c in 0..n {
                out.set(c, r, self.get(r, c).clone());
            }
        }
        out
    }

    pub fn trace(&self) -> RationalFunction {
        let mut acc = RationalFunction::zero();
        for r in 0..self.n {
            acc = &acc + self.get(r, r);
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(RationalFunction::is_zero)
    }

    /// Entry strings, row-major rows.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.n)
            .map(|r| (0..self.n).map(|c| self.get(r, c).to_string()).collect())
            .collect()
    }

    /// Numeric evaluation at l = l₀ ≠ 0 (the identification with matrices
    /// degenerates at 0).
    pub fn evaluate(&self, at: &BigRational) -> Result<Vec<Vec<BigRational>>> {
        if at.is_zero() {
            return Err(Error::LambdaZero);
        }
        let mut out = Vec::with_capacity(self.n);
        for r in 0..self.n {
            let mut row = Vec::with_capacity(self.n);
            for c in 0..self.n {
                row.push(self.get(r, c).evaluate(at)?);
            }
            out.push(row);
        }
        Ok(out)
    }
}

impl std::fmt::Display for ActionMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let rows: Vec<String> = self
            .to_strings()
            .into_iter()
            .map(|row| row.join(", "))
            .collect();
        write!(f, "[{}]", rows.join("; "))
    }
}

/// The action matrix of a normalizer element in the row convention
/// h ⋆ e_k = Σ_b A[k][b] e_b, through the reduced form
/// h ⋆ e_k ≡ g_k ⋆ x^{n−1} with g_k = Σ_i (2l)^i h_i (d^i p^k/dp^i).
/// Each g_k must close up in degree < n; a violation means the operand is
/// not a normalizer element.
pub fn action_matrix(q: &QuotientAlgebra, h: &NormalForm) -> Result<ActionMatrix> {
    q.express_in_basis(h)?;
    let n = q.multiplicity();
    let mut out = ActionMatrix::zero(n);
    for k in 0..n {
        let mut g = PhasePolynomial::zero(1);
        let mut pk_deriv = PhasePolynomial::p_power(k as u32);
        for i in 0..=k {
            let term = h
                .component(i)
                .classical_mul(&pk_deriv)?
                .scale(&RationalFunction::two_lambda_pow(i as i64));
            g = &g + &term;
            pk_deriv = pk_deriv.partial_derivative(Variable::P(0))?;
        }
        let degree = g.p_degree().unwrap_or(0);
        if degree >= n as u32 {
            return Err(Error::DegreeOverflow {
                degree,
                bound: n as u32 - 1,
            });
        }
        let coeffs = g.p_coefficients();
        for (b, c) in coeffs.into_iter().enumerate() {
            out.set(k, b, c);
        }
    }
    Ok(out)
}

/// Which matrix assignment preserves products.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum Convention {
    /// ψ(h) = A^h (row action) is multiplicative.
    RowAction,
    /// ψ(h) = (A^h)ᵀ is multiplicative; the row action reverses products.
    TransposeAction,
}

impl Convention {
    pub fn as_str(&self) -> &'static str {
        match self {
            Convention::RowAction => "row-action",
            Convention::TransposeAction => "transpose-action",
        }
    }
}

/// For every pair of canonical basis elements compare A^{u⋆v} with
/// A^u·A^v (direct) and A^v·A^u (reversed). Returns (direct_ok,
/// reversed_ok, pairs scanned).
fn homomorphism_scan(q: &QuotientAlgebra) -> Result<(bool, bool, usize)> {
    let mats: Vec<ActionMatrix> = q
        .basis()
        .iter()
        .map(|h| action_matrix(q, h))
        .collect::<Result<_>>()?;
    let mut direct_ok = true;
    let mut reversed_ok = true;
    let mut pairs = 0usize;
    for (u, hu) in q.basis().iter().enumerate() {
        for (v, hv) in q.basis().iter().enumerate() {
            let prod = q.star(hu, hv)?;
            let m_prod = action_matrix(q, &prod)?;
            if m_prod != mats[u].mul(&mats[v])? {
                direct_ok = false;
            }
            if m_prod != mats[v].mul(&mats[u])? {
                reversed_ok = false;
            }
            pairs += 1;
        }
    }
    Ok((direct_ok, reversed_ok, pairs))
}

/// Decide whether the row action or its transpose is the product-preserving
/// map, by scanning all basis pairs.
pub fn detect_convention(q: &QuotientAlgebra) -> Result<Convention> {
    let (direct_ok, reversed_ok, _) = homomorphism_scan(q)?;
    if direct_ok {
        Ok(Convention::RowAction)
    } else if reversed_ok {
        Ok(Convention::TransposeAction)
    } else {
        Err(Error::Inconsistent(
            "neither the row action nor its transpose preserves products".to_string(),
        ))
    }
}

/// The product-preserving matrix image of h under the given convention.
pub fn psi(q: &QuotientAlgebra, h: &NormalForm, convention: Convention) -> Result<ActionMatrix> {
    let a = action_matrix(q, h)?;
    Ok(match convention {
        Convention::RowAction => a,
        Convention::TransposeAction => a.transpose(),
    })
}

/// Outcome of the full isomorphism verification at multiplicity n.
#[derive(Debug, Clone, serde::Serialize)]
pub struct IsomorphismReport {
    pub n: usize,
    pub convention: Convention,
    pub pairs_checked: usize,
    pub homomorphism: bool,
    pub injective: bool,
    pub surjective: bool,
    pub unit_maps_to_identity: bool,
}

impl IsomorphismReport {
    pub fn holds(&self) -> bool {
        self.homomorphism && self.injective && self.surjective && self.unit_maps_to_identity
    }
}

/// Verify that ψ identifies the quotient algebra with the full n×n matrix
/// algebra: product preservation over all basis pairs, injectivity by rank,
/// surjectivity by dimension count, and ψ(1) = I.
pub fn verify_isomorphism(n: usize) -> Result<IsomorphismReport> {
    let q = quotient_algebra(n)?;
    let (direct_ok, reversed_ok, pairs) = homomorphism_scan(&q)?;
    let convention = if direct_ok {
        Convention::RowAction
    } else if reversed_ok {
        Convention::TransposeAction
    } else {
        return Err(Error::Inconsistent(
            "neither the row action nor its transpose preserves products".to_string(),
        ));
    };
    let images: Vec<ActionMatrix> = q
        .basis()
        .iter()
        .map(|h| psi(&q, h, convention))
        .collect::<Result<_>>()?;
    let mut coords = SparseMatrix::new(n * n);
    for image in &images {
        coords.push_dense_row(image.entries());
    }
    let injective = coords.rank() == n * n;
    // The spaces have equal dimension n², so injectivity forces surjectivity.
    let surjective = injective;
    let unit_maps_to_identity =
        psi(&q, q.basis_element(0, 0), convention)? == ActionMatrix::identity(n);
    Ok(IsomorphismReport {
        n,
        convention,
        pairs_checked: pairs,
        homomorphism: direct_ok || reversed_ok,
        injective,
        surjective,
        unit_maps_to_identity,
    })
}

/// Coordinates (in the canonical quotient basis) of the n² matrix units
/// E_{rc} under ψ evaluated at l = l₀ ≠ 0; the witness that the numeric
/// specialization is the full matrix algebra. Entry (r, c) of the result
/// holds the coordinate vector of E_{rc}.
pub fn matrix_units_in_basis(
    q: &QuotientAlgebra,
    convention: Convention,
    at: &BigRational,
) -> Result<Vec<Vec<BigRational>>> {
    if at.is_zero() {
        return Err(Error::LambdaZero);
    }
    let n = q.multiplicity();
    let dim = n * n;
    // Augmented system [M | I] where column u of M is ψ(e_u)(l₀) flattened.
    let mut rows = vec![vec![RationalFunction::zero(); 2 * dim]; dim];
    for (u, h) in q.basis().iter().enumerate() {
        let image = psi(q, h, convention)?.evaluate(at)?;
        for r in 0..n {
            for c in 0..n {
                rows[r * n + c][u] = RationalFunction::from_big_rational(&image[r][c]);
            }
        }
    }
    for (slot, row) in rows.iter_mut().enumerate() {
        row[dim + slot] = RationalFunction::one();
    }
    let mut matrix = SparseMatrix::new(2 * dim);
    for row in rows {
        matrix.push_dense_row(&row);
    }
    let pivots = matrix.rref();
    if pivots != (0..dim).collect::<Vec<_>>() {
        return Err(Error::Inconsistent(
            "the evaluated basis images are linearly dependent".to_string(),
        ));
    }
    let inverse_rows = matrix.dense_rows();
    // Row u of the inverse block gives the coefficient of e_u in each unit;
    // we want, per matrix unit (slot), the vector over u.
    let mut out = vec![vec![BigRational::zero(); dim]; dim];
    for (u, row) in inverse_rows.iter().enumerate().take(dim) {
        for slot in 0..dim {
            let value = &row[dim + slot];
            if !value.is_zero() {
                out[slot][u] = value.evaluate(at)?;
            }
        }
    }
    Ok(out)
}

/// The corrected closed-form matrix map at n = 2 for the family element
/// with constants (a, b, c, d):  [[a + 2l·d, b], [2l·c, a]].
pub fn closed_map_n2(
    a: &RationalFunction,
    b: &RationalFunction,
    c: &RationalFunction,
    d: &RationalFunction,
) -> ActionMatrix {
    let two_l = RationalFunction::two_lambda_pow(1);
    let mut m = ActionMatrix::zero(2);
    m.set(0, 0, a + &(&two_l * d));
    m.set(0, 1, b.clone());
    m.set(1, 0, &two_l * c);
    m.set(1, 1, a.clone());
    m
}

/// The same map with entry (2,2) as 2l·a instead of a — the variant that
/// fails to preserve products.
pub fn closed_map_n2_variant(
    a: &RationalFunction,
    b: &RationalFunction,
    c: &RationalFunction,
    d: &RationalFunction,
) -> ActionMatrix {
    let two_l = RationalFunction::two_lambda_pow(1);
    let mut m = closed_map_n2(a, b, c, d);
    m.set(1, 1, &two_l * a);
    m
}

/// Scrutiny of the worked n = 2 multiplication formula and closed matrix
/// map: the two displayed component lines sum to the true product (reading
/// them as equal fails), and the closed map preserves products only with
/// the constant-entry (2,2) slot; the 2l-scaled variant does not.
#[derive(Debug, Clone, serde::Serialize)]
pub struct N2MapReport {
    pub component_sum_matches_product: bool,
    pub component_equality_reading_fails: bool,
    pub equality_counterexample: String,
    pub corrected_map_is_homomorphism: bool,
    pub corrected_map_matches_module_action: bool,
    pub variant_map_fails: bool,
    pub variant_counterexample: String,
}

impl N2MapReport {
    pub fn holds(&self) -> bool {
        self.component_sum_matches_product
            && self.component_equality_reading_fails
            && self.corrected_map_is_homomorphism
            && self.corrected_map_matches_module_action
            && self.variant_map_fails
    }
}

type N2Coords = [RationalFunction; 4];

/// The two displayed component lines of the n = 2 product formula, as
/// elements: the x-free part and the (…) ⋆ x part.
fn displayed_product_lines(h: &N2Coords, ht: &N2Coords) -> Result<(NormalForm, NormalForm)> {
    let [a, b, c, d] = h;
    let [ta, tb, tc, td] = ht;
    let two_l = RationalFunction::two_lambda_pow(1);
    let free0 = &(a * ta) + &(&(&two_l * c) * tb);
    let free1 = &(&(a * tb) + &(b * ta)) + &(&(&two_l * d) * tb);
    let line1 = NormalForm::new(
        2,
        vec![
            PhasePolynomial::from_p_coefficients(&[free0, free1.clone()]),
            PhasePolynomial::zero(1),
        ],
    )?;
    let x0 = &(&(a * tc) + &(c * ta)) + &(&(&two_l * c) * td);
    let x1 = &(&(&(a * td) + &(d * ta)) + &(&(b * tc) - &(c * tb))) + &(&(&two_l * d) * td);
    let x2 = -&(&free1 * &RationalFunction::two_lambda_pow(-1));
    let line2 = NormalForm::new(
        2,
        vec![
            PhasePolynomial::zero(1),
            PhasePolynomial::from_p_coefficients(&[x0, x1, x2]),
        ],
    )?;
    Ok((line1, line2))
}

fn unit_coords(u: usize) -> N2Coords {
    let mut coords = [
        RationalFunction::zero(),
        RationalFunction::zero(),
        RationalFunction::zero(),
        RationalFunction::zero(),
    ];
    coords[u] = RationalFunction::one();
    coords
}

/// Run the full n = 2 closed-form scrutiny. All identities are bilinear in
/// the two operands, so checking the 16 canonical unit pairs is equivalent
/// to the general symbolic statement.
pub fn n2_closed_map_report() -> Result<N2MapReport> {
    let q = quotient_algebra(2)?;
    let mut sum_matches = true;
    let mut equality_fails = false;
    let mut corrected_hom = true;
    let mut variant_fails = false;
    let mut equality_counterexample = String::new();
    let mut variant_counterexample = String::new();
    for u in 0..4 {
        for v in 0..4 {
            let hc = unit_coords(u);
            let htc = unit_coords(v);
            let h = &q.basis()[u];
            let ht = &q.basis()[v];
            let product = q.star(h, ht)?;
            let (line1, line2) = displayed_product_lines(&hc, &htc)?;
            if &line1 + &line2 != product {
                sum_matches = false;
            }
            if line1 != line2 {
                if !equality_fails {
                    equality_counterexample = format!(
                        "operands e_{u}, e_{v}: the x-free line is {} while the ⋆x line expands to {}",
                        line1.expand(),
                        line2.expand()
                    );
                }
                equality_fails = true;
            }
            let coords = q.express_in_basis(&product)?;
            let m_prod = closed_map_n2(&coords[0], &coords[1], &coords[2], &coords[3]);
            let m_u = closed_map_n2(&hc[0], &hc[1], &hc[2], &hc[3]);
            let m_v = closed_map_n2(&htc[0], &htc[1], &htc[2], &htc[3]);
            if m_prod != m_u.mul(&m_v)? {
                corrected_hom = false;
            }
            let w_prod =
                closed_map_n2_variant(&coords[0], &coords[1], &coords[2], &coords[3]);
            let w_u = closed_map_n2_variant(&hc[0], &hc[1], &hc[2], &hc[3]);
            let w_v = closed_map_n2_variant(&htc[0], &htc[1], &htc[2], &htc[3]);
            if w_prod != w_u.mul(&w_v)? {
                if !variant_fails {
                    variant_counterexample = format!(
                        "operands e_{u}, e_{v}: image of product is {} but the images multiply to {}",
                        w_prod,
                        w_u.mul(&w_v)?
                    );
                }
                variant_fails = true;
            }
        }
    }
    // The corrected map is the module action in the reversed module basis:
    // conjugate (A^h)ᵀ by the order-reversal permutation.
    let mut reversal = ActionMatrix::zero(2);
    reversal.set(0, 1, RationalFunction::one());
    reversal.set(1, 0, RationalFunction::one());
    let mut matches_action = true;
    for (u, h) in q.basis().iter().enumerate() {
        let transposed = action_matrix(&q, h)?.transpose();
        let conjugated = reversal.mul(&transposed)?.mul(&reversal)?;
        let hc = unit_coords(u);
        if conjugated != closed_map_n2(&hc[0], &hc[1], &hc[2], &hc[3]) {
            matches_action = false;
        }
    }
    Ok(N2MapReport {
        component_sum_matches_product: sum_matches,
        component_equality_reading_fails: equality_fails,
        equality_counterexample,
        corrected_map_is_homomorphism: corrected_hom,
        corrected_map_matches_module_action: matches_action,
        variant_map_fails: variant_fails,
        variant_counterexample,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn rf(v: i64) -> RationalFunction {
        RationalFunction::from_int(v)
    }

    #[test]
    fn module_basis_n2() {
        let basis = module_basis(2).unwrap();
        assert_eq!(basis.len(), 2);
        assert_eq!(basis[0], PhasePolynomial::x_power(1));
        // p ⋆ x = x*p − l.
        let expected = &PhasePolynomial::x_power(1)
            .classical_mul(&PhasePolynomial::p_power(1))
            .unwrap()
            - &PhasePolynomial::constant(1, RationalFunction::lambda());
        assert_eq!(basis[1], expected);
    }

    #[test]
    fn action_matrix_of_family_element_n2() {
        // For constants (a,b,c,d) the row action is [[a, b], [2l·c, a + 2l·d]].
        let q = quotient_algebra(2).unwrap();
        let two_l = RationalFunction::two_lambda_pow(1);
        for (u, (i, k)) in [(0, (0, 0)), (1, (0, 1)), (2, (1, 0)), (3, (1, 1))] {
            let m = action_matrix(&q, &q.basis()[u]).unwrap();
            let mut expected = ActionMatrix::zero(2);
            match (i, k) {
                (0, 0) => {
                    expected = ActionMatrix::identity(2);
                }
                (0, 1) => {
                    expected.set(0, 1, rf(1));
                }
                (1, 0) => {
                    expected.set(1, 0, two_l.clone());
                }
                (1, 1) => {
                    expected.set(1, 1, two_l.clone());
                }
                _ => unreachable!(),
            }
            assert_eq!(m, expected, "unit index {u}");
        }
    }

    #[test]
    fn row_action_reverses_and_transpose_preserves() {
        let q = quotient_algebra(2).unwrap();
        let u = q.basis_element(1, 0);
        let v = q.basis_element(0, 1);
        let mu = action_matrix(&q, u).unwrap();
        let mv = action_matrix(&q, v).unwrap();
        let m_prod = action_matrix(&q, &q.star(u, v).unwrap()).unwrap();
        assert_ne!(m_prod, mu.mul(&mv).unwrap());
        assert_eq!(m_prod, mv.mul(&mu).unwrap());
        assert_eq!(detect_convention(&q).unwrap(), Convention::TransposeAction);
    }

    #[test]
    fn isomorphism_at_small_multiplicities() {
        for n in 1..=3 {
            let report = verify_isomorphism(n).unwrap();
            assert!(report.holds(), "{report:?}");
            assert_eq!(report.pairs_checked, n.pow(4));
        }
    }

    #[test]
    fn nilpotent_class_has_nilpotent_image() {
        let q = quotient_algebra(2).unwrap();
        let x_class = q.basis_element(1, 0);
        let image = psi(&q, x_class, Convention::TransposeAction).unwrap();
        assert!(image.mul(&image).unwrap().is_zero());
    }

    #[test]
    fn n2_scrutiny_report() {
        let report = n2_closed_map_report().unwrap();
        assert!(report.holds(), "{report:?}");
        assert!(!report.equality_counterexample.is_empty());
        assert!(!report.variant_counterexample.is_empty());
    }

    #[test]
    fn degree_overflow_for_non_member() {
        let q = quotient_algebra(2).unwrap();
        let bad = NormalForm::new(
            2,
            vec![PhasePolynomial::p_power(1), PhasePolynomial::zero(1)],
        )
        .unwrap();
        // Fails the membership precheck before any matrix is formed.
        assert!(action_matrix(&q, &bad).is_err());
    }

    #[test]
    fn evaluation_examples() {
        let q = quotient_algebra(2).unwrap();
        let image = psi(&q, q.basis_element(1, 0), Convention::TransposeAction).unwrap();
        let at = BigRational::new(BigInt::from(1), BigInt::from(2));
        let numeric = image.evaluate(&at).unwrap();
        // 2l at l = 1/2 is 1, sitting in the (0,1) slot of the transpose.
        assert_eq!(numeric[0][1], BigRational::from(BigInt::from(1)));
        assert_eq!(numeric[1][0], BigRational::zero());
        assert!(matches!(
            image.evaluate(&BigRational::zero()),
            Err(Error::LambdaZero)
        ));
    }

    #[test]
    fn matrix_units_recovered_at_numeric_lambda() {
        let q = quotient_algebra(2).unwrap();
        let at = BigRational::new(BigInt::from(1), BigInt::from(2));
        let units = matrix_units_in_basis(&q, Convention::TransposeAction, &at).unwrap();
        assert_eq!(units.len(), 4);
        // Reconstruct each matrix unit from the returned coordinates.
        for r in 0..2 {
            for c in 0..2 {
                let coords = &units[r * 2 + c];
                let mut acc = vec![vec![BigRational::zero(); 2]; 2];
                for (u, h) in q.basis().iter().enumerate() {
                    if coords[u].is_zero() {
                        continue;
                    }
                    let img = psi(&q, h, Convention::TransposeAction)
                        .unwrap()
                        .evaluate(&at)
                        .unwrap();
                    for (rr, img_row) in img.iter().enumerate() {
                        for (cc, val) in img_row.iter().enumerate() {
                            acc[rr][cc] += &coords[u] * val;
                        }
                    }
                }
                for (rr, acc_row) in acc.iter().enumerate() {
                    for (cc, val) in acc_row.iter().enumerate() {
                        let expected = if (rr, cc) == (r, c) {
                            BigRational::from(BigInt::from(1))
                        } else {
                            BigRational::zero()
                        };
                        assert_eq!(val, &expected, "unit ({r},{c}) slot ({rr},{cc})");
                    }
                }
            }
        }
    }

    #[test]
    fn trace_of_unit_is_dimension() {
        let q = quotient_algebra(3).unwrap();
        let image = psi(&q, q.basis_element(0, 0), Convention::TransposeAction).unwrap();
        assert_eq!(image.trace(), rf(3));
    }
}
