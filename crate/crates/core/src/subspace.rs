use std::sync::Arc;

use crate::linalg::{Echelon, PivotOrder, SparseVec};
use crate::ring::CanonicalIdeal;
use crate::scalar::Field;
use crate::semigroup::NumericalSemigroup;

/// A subspace of `R / (x^T V ∩ R)`, kept as a reduced echelon basis whose
/// pivots (lowest exponents) ascend.
#[derive(Clone, Debug)]
pub struct TruncatedSubspace {
    semigroup: Arc<NumericalSemigroup>,
    field: Field,
    truncation: usize,
    basis: Vec<SparseVec>,
}

impl TruncatedSubspace {
    /// Span of `vectors`, dropping coordinates at or above `truncation`.
    pub fn span(
        semigroup: Arc<NumericalSemigroup>,
        field: Field,
        truncation: usize,
        vectors: impl IntoIterator<Item = SparseVec>,
    ) -> Self {
        let mut ech = Echelon::new(PivotOrder::Lowest);
        for v in vectors {
            let v: SparseVec = v.into_iter().filter(|(c, _)| *c < truncation).collect();
            ech.insert(&v);
        }
        let basis = ech.into_reduced().rows().map(|(_, r)| r.clone()).collect();
        Self {
            semigroup,
            field,
            truncation,
            basis,
        }
    }

    /// Wraps a basis that is already reduced with ascending pivots.
    pub(crate) fn from_reduced(
        semigroup: Arc<NumericalSemigroup>,
        field: Field,
        truncation: usize,
        basis: Vec<SparseVec>,
    ) -> Self {
        debug_assert!(basis.windows(2).all(|w| w[0][0].0 < w[1][0].0));
        Self {
            semigroup,
            field,
            truncation,
            basis,
        }
    }

    /// Span of the monomials `x^e`, `e` in `exponents`.
    pub fn monomials(
        semigroup: Arc<NumericalSemigroup>,
        field: Field,
        truncation: usize,
        exponents: impl IntoIterator<Item = usize>,
    ) -> Self {
        let one = field.one();
        Self::span(
            semigroup,
            field,
            truncation,
            exponents.into_iter().map(|e| vec![(e, one.clone())]),
        )
    }

    /// The image of `q R`: span of `q x^e mod x^T`, `e ∈ G`.
    pub fn principal_image(q: &CanonicalIdeal, truncation: usize) -> Self {
        let s = q.semigroup().clone();
        let generator = q.generator_series();
        let shifts: Vec<usize> = (0..truncation.saturating_sub(q.b()))
            .filter(|&e| s.has(e))
            .collect();
        let vectors = shifts.into_iter().map(|e| {
            generator
                .iter()
                .map(|(k, c)| (k + e, c.clone()))
                .filter(|(k, _)| *k < truncation)
                .collect::<SparseVec>()
        });
        Self::span(s, q.field(), truncation, vectors)
    }

    pub fn semigroup(&self) -> &Arc<NumericalSemigroup> {
        &self.semigroup
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Smallest valuation of a nonzero element, `None` for the zero space.
    pub fn min_valuation(&self) -> Option<usize> {
        self.basis.first().map(|v| v[0].0)
    }

    fn echelon(&self) -> Echelon {
        let mut ech = Echelon::new(PivotOrder::Lowest);
        for v in &self.basis {
            ech.insert(v);
        }
        ech
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        let v: SparseVec = v
            .iter()
            .filter(|(c, _)| *c < self.truncation)
            .cloned()
            .collect();
        self.echelon().contains(&v)
    }

    /// Inclusion, comparing at the smaller of the two truncations.
    pub fn is_subspace_of(&self, other: &TruncatedSubspace) -> bool {
        let t = self.truncation.min(other.truncation);
        let mut ech = Echelon::new(PivotOrder::Lowest);
        for v in &other.basis {
            let v: SparseVec = v.iter().filter(|(c, _)| *c < t).cloned().collect();
            ech.insert(&v);
        }
        self.basis.iter().all(|v| {
            let v: SparseVec = v.iter().filter(|(c, _)| *c < t).cloned().collect();
            ech.contains(&v)
        })
    }

    pub fn same_as(&self, other: &TruncatedSubspace) -> bool {
        self.is_subspace_of(other) && other.is_subspace_of(self)
    }
}
