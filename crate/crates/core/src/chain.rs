//! The chain `Q ⊆ Q:m ⊆ Q:m^2 ⊆ ...` computed inside `R/Q`.
//!
//! `R/Q` has the monomial basis `B = {c ∈ G : c - b ∉ G}` of size `b`.
//! `(Q:m^g)/Q` is the common kernel of a constraint space `L_g` of functionals
//! on `B`, with `L_0` everything and `L_{g+1} = Σ_j L_g ∘ M_j`, `M_j` being
//! multiplication by `x^{a_j}`. The elements of `(Q:m^g)/Q` have as
//! valuations exactly the non-pivot columns of `L_g` in highest-pivot form.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::linalg::{Echelon, PivotOrder, SparseVec};
use crate::ring::{add_term, CanonicalIdeal, Series};
use crate::scalar::Field;
use crate::semigroup::NumericalSemigroup;
use crate::subspace::TruncatedSubspace;

pub struct ColonChain {
    semigroup: Arc<NumericalSemigroup>,
    field: Field,
    b: usize,
    truncation: usize,
    basis: Vec<usize>,
    /// `transposed[j][k]`: pairs `(c, γ)` with `γ` the `x^k` coefficient of
    /// the normal form of `x^{c + a_j}`.
    transposed: Vec<BTreeMap<usize, SparseVec>>,
    constraints: Echelon,
    step: u32,
}

impl ColonChain {
    /// Chain for `Q` with normal forms computed modulo `x^T`, `T >= b + f + 1`.
    pub fn new(q: &CanonicalIdeal, truncation: usize) -> Self {
        let semigroup = q.semigroup().clone();
        let field = q.field();
        let b = q.b();
        debug_assert!(truncation >= q.default_truncation());
        let basis: Vec<usize> = (0..truncation)
            .filter(|&c| semigroup.has(c) && !(c >= b && semigroup.has(c - b)))
            .collect();
        debug_assert_eq!(basis.len(), b);
        let unit = q.unit();
        let normal_form = |e: usize| -> Series {
            let mut acc = Series::new();
            acc.insert(e, field.one());
            let mut out = Series::new();
            while let Some((e, c)) = acc.pop_first() {
                if e >= truncation {
                    break;
                }
                if e >= b && semigroup.has(e - b) {
                    for (&k, uk) in unit.range(1..) {
                        if e + k < truncation {
                            add_term(&mut acc, e + k, &c.mul(uk).neg());
                        }
                    }
                } else {
                    out.insert(e, c);
                }
            }
            out
        };
        let transposed = semigroup
            .generators()
            .iter()
            .map(|&a| {
                let mut t: BTreeMap<usize, SparseVec> = BTreeMap::new();
                for &c in &basis {
                    for (k, gamma) in normal_form(c + a) {
                        t.entry(k).or_default().push((c, gamma));
                    }
                }
                t
            })
            .collect();
        let mut constraints = Echelon::new(PivotOrder::Highest);
        for &c in &basis {
            constraints.insert(&vec![(c, field.one())]);
        }
        Self {
            semigroup,
            field,
            b,
            truncation,
            basis,
            transposed,
            constraints,
            step: 0,
        }
    }

    /// Current exponent `g` of `Q:m^g`.
    pub fn step(&self) -> u32 {
        self.step
    }

    /// Moves from `Q:m^g` to `Q:m^{g+1}`.
    pub fn advance(&mut self) {
        let mut next = Echelon::new(PivotOrder::Highest);
        for (_, row) in self.constraints.rows() {
            for t in &self.transposed {
                if let [(k, lk)] = row.as_slice() {
                    // Rows are normalized, so a single entry is 1.
                    debug_assert!(lk.is_one());
                    if let Some(col) = t.get(k) {
                        next.insert(col);
                    }
                    continue;
                }
                let mut acc = Series::new();
                for (k, lk) in row {
                    if let Some(col) = t.get(k) {
                        for (c, gamma) in col {
                            add_term(&mut acc, *c, &lk.mul(gamma));
                        }
                    }
                }
                if !acc.is_empty() {
                    next.insert(&acc.into_iter().collect());
                }
            }
        }
        self.constraints = next;
        self.step += 1;
    }

    /// Smallest valuation of an element of `Q:m^g` outside `Q`.
    pub fn min_new_valuation(&self) -> Option<usize> {
        self.basis
            .iter()
            .copied()
            .find(|&c| !self.constraints.is_pivot(c))
    }

    /// Whether `Q:m^g` is integral over `Q`: it has no element of valuation
    /// below `b`.
    pub fn is_integral(&self) -> bool {
        self.min_new_valuation().is_none_or(|c| c >= self.b)
    }

    /// `Q:m^g` as a truncated subspace.
    pub fn subspace(&self, q: &CanonicalIdeal) -> TruncatedSubspace {
        let lifts = self.constraints.kernel(&self.basis, self.field);
        let image = TruncatedSubspace::principal_image(q, self.truncation);
        TruncatedSubspace::span(
            self.semigroup.clone(),
            self.field,
            self.truncation,
            image.basis().iter().cloned().chain(lifts),
        )
    }
}
