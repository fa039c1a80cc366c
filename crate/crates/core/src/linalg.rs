//! Sparse exact Gaussian elimination over [`Scalar`]s.
//!
//! Columns are exponents. An [`Echelon`] keeps one row per pivot column, the
//! pivot being either the lowest or the highest column of the row, and the
//! pivot coefficient normalized to 1.

use std::collections::BTreeMap;

use crate::ring::{add_term, Series};
use crate::scalar::{Field, Scalar};

/// Sparse vector sorted by ascending column, no zero entries.
pub type SparseVec = Vec<(usize, Scalar)>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PivotOrder {
    /// Pivot is the smallest column of a row.
    Lowest,
    /// Pivot is the largest column of a row.
    Highest,
}

#[derive(Clone, Debug)]
pub struct Echelon {
    order: PivotOrder,
    rows: BTreeMap<usize, SparseVec>,
}

fn subtract_multiple(acc: &mut Series, gamma: &Scalar, row: &SparseVec) {
    for (c, x) in row {
        add_term(acc, *c, &gamma.mul(x).neg());
    }
}

impl Echelon {
    pub fn new(order: PivotOrder) -> Self {
        Self {
            order,
            rows: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.rows.contains_key(&col)
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    pub fn rows(&self) -> impl Iterator<Item = (usize, &SparseVec)> + '_ {
        self.rows.iter().map(|(p, r)| (*p, r))
    }

    /// Forward elimination in pivot order. With `stop_at_free`, stops at the
    /// first leading column that is not a pivot.
    fn eliminate(&self, v: &SparseVec, stop_at_free: bool) -> Series {
        let mut acc: Series = v.iter().filter(|(_, c)| !c.is_zero()).cloned().collect();
        let mut cursor: Option<usize> = None;
        loop {
            let next = match self.order {
                PivotOrder::Lowest => match cursor {
                    None => acc.keys().next().copied(),
                    Some(c) => acc.range(c + 1..).next().map(|(k, _)| *k),
                },
                PivotOrder::Highest => match cursor {
                    None => acc.keys().next_back().copied(),
                    Some(c) => acc.range(..c).next_back().map(|(k, _)| *k),
                },
            };
            let Some(col) = next else { break };
            cursor = Some(col);
            match self.rows.get(&col) {
                Some(row) if row.len() == 1 => {
                    acc.remove(&col);
                }
                Some(row) => {
                    let gamma = acc[&col].clone();
                    subtract_multiple(&mut acc, &gamma, row);
                }
                None if stop_at_free => break,
                None => {}
            }
        }
        acc
    }

    /// Remainder of `v` after eliminating every pivot column.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        self.eliminate(v, false).into_iter().collect()
    }

    /// Whether `v` lies in the row space.
    pub fn contains(&self, v: &SparseVec) -> bool {
        self.eliminate(v, false).is_empty()
    }

    /// Adds `v` to the row space; returns whether the rank grew.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        if let [(col, x)] = v.as_slice() {
            match self.rows.get(col) {
                Some(row) if row.len() == 1 => return false,
                None if !x.is_zero() => {
                    self.rows.insert(*col, vec![(*col, x.field().one())]);
                    return true;
                }
                _ => {}
            }
        }
        let rem = self.eliminate(v, true);
        let pivot = match self.order {
            PivotOrder::Lowest => rem.keys().next().copied(),
            PivotOrder::Highest => rem.keys().next_back().copied(),
        };
        let Some(pivot) = pivot else { return false };
        let inv = rem[&pivot].inverse().expect("nonzero pivot");
        let row: SparseVec = if inv.is_one() {
            rem.into_iter().collect()
        } else {
            rem.into_iter().map(|(c, x)| (c, x.mul(&inv))).collect()
        };
        self.rows.insert(pivot, row);
        true
    }

    /// Back-substitutes so every row vanishes at every other pivot.
    pub fn into_reduced(mut self) -> Self {
        let pivots: Vec<usize> = self.rows.keys().copied().collect();
        let ordered: Vec<usize> = match self.order {
            PivotOrder::Lowest => pivots.iter().rev().copied().collect(),
            PivotOrder::Highest => pivots.clone(),
        };
        for p in ordered {
            let pivot_row = self.rows[&p].clone();
            for (&q, row) in self.rows.iter_mut() {
                if q == p {
                    continue;
                }
                let Ok(pos) = row.binary_search_by_key(&p, |(c, _)| *c) else {
                    continue;
                };
                let gamma = row[pos].1.clone();
                let mut acc: Series = row.drain(..).collect();
                subtract_multiple(&mut acc, &gamma, &pivot_row);
                *row = acc.into_iter().collect();
            }
        }
        self
    }

    /// Kernel basis of the row space viewed as constraints on `columns`.
    ///
    /// For a reduced [`PivotOrder::Highest`] echelon, the vector for free column
    /// `j` has lowest column `j`; the basis comes out sorted by that column and
    /// is itself a reduced echelon basis in [`PivotOrder::Lowest`].
    pub fn kernel(&self, columns: &[usize], field: Field) -> Vec<SparseVec> {
        let reduced = self.clone().into_reduced();
        let mut extra: BTreeMap<usize, SparseVec> = BTreeMap::new();
        for (&p, row) in &reduced.rows {
            for (c, x) in row {
                if *c != p {
                    extra.entry(*c).or_default().push((p, x.neg()));
                }
            }
        }
        columns
            .iter()
            .filter(|c| !reduced.rows.contains_key(c))
            .map(|&j| {
                let mut v: SparseVec = vec![(j, field.one())];
                if let Some(rest) = extra.remove(&j) {
                    v.extend(rest);
                }
                v.sort_by_key(|(c, _)| *c);
                v
            })
            .collect()
    }
}
