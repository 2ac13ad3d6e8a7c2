//! Exact linear algebra over Q(l).
//!
//! Two workhorses: [`EchelonBasis`], a self-reducing dictionary of phase
//! polynomials keyed by leading monomial (the canonical reduced echelon
//! basis of a span, unique and independent of insertion order), and
//! [`SparseMatrix`], a sparse row matrix with canonical reduced row-echelon
//! form and kernel extraction.

use std::collections::BTreeMap;

use crate::phasepoly::{Monomial, PhasePolynomial};
use crate::scalar::RationalFunction;

/// Canonical reduced echelon basis of a subspace of phase polynomials.
///
/// Invariants: every row is monic in its leading monomial, no row contains
/// any other row's leading monomial, and rows are keyed by their leading
/// monomial. Two spans are equal iff the dictionaries are equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EchelonBasis {
    m: usize,
    rows: BTreeMap<Monomial, PhasePolynomial>,
}

impl EchelonBasis {
    pub fn new(m: usize) -> Self {
        EchelonBasis {
            m,
            rows: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Rows in ascending leading-monomial order.
    pub fn rows(&self) -> impl Iterator<Item = &PhasePolynomial> {
        self.rows.values()
    }

    pub fn lead_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.rows.keys()
    }

    /// Fully reduce `f` against the basis: repeatedly eliminate the largest
    /// term whose monomial is some row's leading monomial.
    pub fn reduce(&self, f: &PhasePolynomial) -> PhasePolynomial {
        let mut r = f.clone();
        loop {
            let hit = r
                .terms()
                .rev()
                .find(|(mono, _)| self.rows.contains_key(*mono))
                .map(|(mono, c)| (mono.clone(), c.clone()));
            match hit {
                None => return r,
                Some((mono, c)) => {
                    let row = &self.rows[&mono];
                    r = &r - &row.scale(&c);
                }
            }
        }
    }

    pub fn contains(&self, f: &PhasePolynomial) -> bool {
        self.reduce(f).is_zero()
    }

    /// Insert a polynomial, keeping the basis reduced; returns true when the
    /// rank grew.
    pub fn insert(&mut self, f: &PhasePolynomial) -> bool {
        let r = self.reduce(f);
        if r.is_zero() {
            return false;
        }
        let lead = r.leading_monomial().expect("nonzero").clone();
        let lead_coeff = r.coefficient(&lead);
        let monic = r.scale(&lead_coeff.invert().expect("nonzero leading coefficient"));
        // Back-substitute into existing rows so no row keeps the new lead.
        let keys: Vec<Monomial> = self.rows.keys().cloned().collect();
        for key in keys {
            let c = self.rows[&key].coefficient(&lead);
            if !c.is_zero() {
                let updated = &self.rows[&key] - &monic.scale(&c);
                self.rows.insert(key, updated);
            }
        }
        self.rows.insert(lead, monic);
        true
    }

    /// The sub-basis of rows with leading total degree ≤ `degree`. In a
    /// graded order every monomial of a row is bounded by its lead, so this
    /// is the canonical basis of (span ∩ {total degree ≤ degree}).
    pub fn restricted(&self, degree: u32) -> EchelonBasis {
        EchelonBasis {
            m: self.m,
            rows: self
                .rows
                .iter()
                .filter(|(lead, _)| lead.total_degree() <= degree)
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }

    /// Number of rows with leading total degree exactly `degree`.
    pub fn rank_at_degree(&self, degree: u32) -> usize {
        self.rows
            .keys()
            .filter(|lead| lead.total_degree() == degree)
            .count()
    }

    pub fn max_lead_degree(&self) -> Option<u32> {
        self.rows.keys().map(|lead| lead.total_degree()).max()
    }
}

/// Sparse matrix over Q(l): rows are column-indexed maps with no zero
/// entries. Reduction is exact Gauss–Jordan with full normalization, so the
/// reduced form (and everything derived from it) is canonical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    ncols: usize,
    rows: Vec<BTreeMap<usize, RationalFunction>>,
}

impl SparseMatrix {
    pub fn new(ncols: usize) -> Self {
        SparseMatrix {
            ncols,
            rows: Vec::new(),
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn push_row(&mut self, row: BTreeMap<usize, RationalFunction>) {
        debug_assert!(row.keys().all(|&c| c < self.ncols));
        let row: BTreeMap<usize, RationalFunction> =
            row.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        if !row.is_empty() {
            self.rows.push(row);
        }
    }

    pub fn push_dense_row(&mut self, row: &[RationalFunction]) {
        debug_assert_eq!(row.len(), self.ncols);
        self.push_row(
            row.iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(c, v)| (c, v.clone()))
                .collect(),
        );
    }

    /// Reduce to canonical reduced row-echelon form; returns the pivot
    /// columns in ascending order. Among candidate pivots for a column the
    /// entry with the smallest digit size is chosen (ties: earliest row) to
    /// keep intermediate coefficients small; the final form is unique
    /// regardless.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut done_rows = 0usize;
        for col in 0..self.ncols {
            let candidate = self
                .rows
                .iter()
                .enumerate()
                .skip(done_rows)
                .filter(|(_, row)| row.contains_key(&col))
                .min_by_key(|(idx, row)| (row[&col].digit_size(), *idx));
            let Some((pivot_idx, _)) = candidate else {
                continue;
            };
            self.rows.swap(done_rows, pivot_idx);
            let inv = self.rows[done_rows][&col]
                .invert()
                .expect("pivot entries are nonzero");
            let pivot_row: BTreeMap<usize, RationalFunction> = self.rows[done_rows]
                .iter()
                .map(|(&c, v)| (c, v * &inv))
                .collect();
            self.rows[done_rows] = pivot_row.clone();
            for (idx, row) in self.rows.iter_mut().enumerate() {
                if idx == done_rows {
                    continue;
                }
                let Some(factor) = row.get(&col).cloned() else {
                    continue;
                };
                for (&c, v) in &pivot_row {
                    let delta = &factor * v;
                    match row.entry(c) {
                        std::collections::btree_map::Entry::Vacant(e) => {
                            if !delta.is_zero() {
                                e.insert(-&delta);
                            }
                        }
                        std::collections::btree_map::Entry::Occupied(mut e) => {
                            let updated = e.get() - &delta;
                            if updated.is_zero() {
                                e.remove();
                            } else {
                                *e.get_mut() = updated;
                            }
                        }
                    }
                }
            }
            self.rows.retain(|row| !row.is_empty());
            pivots.push(col);
            done_rows = pivots.len();
        }
        self.rows.retain(|row| !row.is_empty());
        pivots
    }

    /// Rank via a reduced copy.
    pub fn rank(&self) -> usize {
        let mut copy = self.clone();
        copy.rref().len()
    }

    /// Canonical basis of the right kernel, one dense vector per free
    /// column, derived from the reduced row-echelon form: the vector for
    /// free column j has a 1 in slot j and −entry(r, j) in each pivot
    /// column of row r.
    pub fn kernel_basis(&self) -> Vec<Vec<RationalFunction>> {
        let mut copy = self.clone();
        let pivots = copy.rref();
        let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
        let mut kernel = Vec::new();
        for j in 0..self.ncols {
            if pivot_set.contains(&j) {
                continue;
            }
            let mut v = vec![RationalFunction::zero(); self.ncols];
            v[j] = RationalFunction::one();
            for (r, &pc) in pivots.iter().enumerate() {
                if let Some(entry) = copy.rows[r].get(&j) {
                    v[pc] = -entry;
                }
            }
            kernel.push(v);
        }
        kernel
    }

    /// Dense view of the reduced rows (for reporting and tests).
    pub fn dense_rows(&self) -> Vec<Vec<RationalFunction>> {
        self.rows
            .iter()
            .map(|row| {
                let mut dense = vec![RationalFunction::zero(); self.ncols];
                for (&c, v) in row {
                    dense[c] = v.clone();
                }
                dense
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::phasepoly::Variable;

    fn rf(v: i64) -> RationalFunction {
        RationalFunction::from_int(v)
    }

    fn x() -> PhasePolynomial {
        PhasePolynomial::variable(1, Variable::X(0))
    }

    fn p() -> PhasePolynomial {
        PhasePolynomial::variable(1, Variable::P(0))
    }

    #[test]
    fn echelon_insert_and_reduce() {
        let mut basis = EchelonBasis::new(1);
        let f = &x() + &p();
        let g = &x() - &p();
        assert!(basis.insert(&f));
        assert!(basis.insert(&g));
        assert_eq!(basis.rank(), 2);
        assert!(!basis.insert(&x().scale(&rf(5))));
        assert!(basis.contains(&p()));
        assert!(!basis.contains(&PhasePolynomial::one(1)));
    }

    #[test]
    fn echelon_is_insertion_order_independent() {
        let polys = vec![
            &x().moyal_star(&p()).unwrap() + &PhasePolynomial::x_power(2),
            &PhasePolynomial::x_power(2) - &PhasePolynomial::p_power(2),
            p().scale(&RationalFunction::lambda()),
        ];
        let mut a = EchelonBasis::new(1);
        for f in &polys {
            a.insert(f);
        }
        let mut b = EchelonBasis::new(1);
        for f in polys.iter().rev() {
            b.insert(f);
        }
        assert_eq!(a, b);
    }

    #[test]
    fn echelon_degree_restriction() {
        let mut basis = EchelonBasis::new(1);
        basis.insert(&PhasePolynomial::x_power(2));
        basis.insert(&PhasePolynomial::x_power(3));
        let low = basis.restricted(2);
        assert_eq!(low.rank(), 1);
        assert_eq!(basis.rank_at_degree(3), 1);
        assert_eq!(basis.max_lead_degree(), Some(3));
    }

    #[test]
    fn rref_and_rank() {
        let mut m = SparseMatrix::new(3);
        m.push_dense_row(&[rf(1), rf(2), rf(3)]);
        m.push_dense_row(&[rf(2), rf(4), rf(6)]);
        m.push_dense_row(&[rf(0), rf(1), rf(1)]);
        assert_eq!(m.rank(), 2);
        let pivots = m.rref();
        assert_eq!(pivots, vec![0, 1]);
        let dense = m.dense_rows();
        assert_eq!(dense[0], vec![rf(1), rf(0), rf(1)]);
        assert_eq!(dense[1], vec![rf(0), rf(1), rf(1)]);
    }

    #[test]
    fn kernel_of_rank_deficient_matrix() {
        let mut m = SparseMatrix::new(3);
        m.push_dense_row(&[rf(1), rf(1), rf(0)]);
        m.push_dense_row(&[rf(0), rf(0), rf(1)]);
        let kernel = m.kernel_basis();
        assert_eq!(kernel.len(), 1);
        assert_eq!(kernel[0], vec![rf(-1), rf(1), rf(0)]);
    }

    #[test]
    fn kernel_over_lambda_coefficients() {
        // a·(2l) + b·1 = 0: canonical kernel vector has 1 in the free slot.
        let mut m = SparseMatrix::new(2);
        m.push_dense_row(&[RationalFunction::two_lambda_pow(1), rf(1)]);
        let kernel = m.kernel_basis();
        assert_eq!(kernel.len(), 1);
        assert_eq!(kernel[0][0], -&RationalFunction::two_lambda_pow(-1));
        assert_eq!(kernel[0][1], rf(1));
    }

    #[test]
    fn full_rank_matrix_has_trivial_kernel() {
        let mut m = SparseMatrix::new(2);
        m.push_dense_row(&[rf(1), rf(1)]);
        m.push_dense_row(&[rf(1), rf(-1)]);
        assert!(m.kernel_basis().is_empty());
    }
}
