//! Numerical semigroups: membership, Frobenius number, gaps, m-adic orders
//! and the combinatorial descriptions of the stable Goto number.

use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};

/// A numerical semigroup `G = <a_1, ..., a_d>` with its membership table.
///
/// The table covers `[0, f + 2 a_d]`; everything above `f` is a member, so
/// [`contains`](Self::contains) answers any integer.
#[derive(Clone, Debug)]
pub struct NumericalSemigroup {
    generators: Vec<usize>,
    dropped: Vec<usize>,
    frobenius: i64,
    membership: Vec<bool>,
    orders: Vec<u32>,
    gaps: Vec<usize>,
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.generators == other.generators
    }
}

impl Eq for NumericalSemigroup {}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "<{}>", gens.join(","))
    }
}

/// Reachability of `[0, limit]` by non-negative combinations of `gens`.
fn representable(gens: &[usize], limit: usize) -> Vec<bool> {
    let mut reach = vec![false; limit + 1];
    reach[0] = true;
    for e in 1..=limit {
        reach[e] = gens.iter().any(|&a| a <= e && reach[e - a]);
    }
    reach
}

/// Longest factorization length over a membership table; 0 for non-members.
fn longest_factorizations(gens: &[usize], membership: &[bool]) -> Vec<u32> {
    let mut orders = vec![0u32; membership.len()];
    for e in 1..membership.len() {
        if !membership[e] {
            continue;
        }
        orders[e] = gens
            .iter()
            .filter(|&&a| a <= e && membership[e - a])
            .map(|&a| orders[e - a] + 1)
            .max()
            .unwrap_or(0);
    }
    orders
}

impl NumericalSemigroup {
    /// Builds the semigroup generated by `raw`, dropping redundant generators.
    pub fn new(raw: &[i64]) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::Empty);
        }
        if let Some(&bad) = raw.iter().find(|&&a| a <= 0) {
            return Err(Error::NonPositive(bad));
        }
        let gcd = raw.iter().fold(0u64, |g, &a| g.gcd(&(a as u64)));
        if gcd != 1 {
            return Err(Error::Gcd(gcd));
        }

        let mut sorted: Vec<usize> = raw.iter().map(|&a| a as usize).collect();
        sorted.sort_unstable();
        sorted.dedup();

        let max_raw = *sorted.last().expect("non-empty");
        let mut generators: Vec<usize> = Vec::new();
        let mut dropped = Vec::new();
        for &a in &sorted {
            if !generators.is_empty() && representable(&generators, a)[a] {
                dropped.push(a);
            } else {
                generators.push(a);
            }
        }
        debug_assert!(generators.iter().all(|&a| a <= max_raw));

        let a1 = generators[0];
        let ad = *generators.last().expect("non-empty");
        let frobenius = if a1 == 1 {
            -1
        } else {
            // Schur: f <= (a_1 - 1)(a_d - 1) - 1.
            let limit = (a1 - 1) * (ad - 1) + a1;
            let reach = representable(&generators, limit);
            (0..=limit).rev().find(|&e| !reach[e]).expect("some gap") as i64
        };

        let extent = (frobenius + 2 * ad as i64) as usize;
        let membership = representable(&generators, extent);
        let orders = longest_factorizations(&generators, &membership);
        let gaps = (1..membership.len()).filter(|&e| !membership[e]).collect();

        Ok(Self {
            generators,
            dropped,
            frobenius,
            membership,
            orders,
            gaps,
        })
    }

    /// Minimal generators, ascending.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// Input values that were removed because other generators produce them.
    pub fn dropped_generators(&self) -> &[usize] {
        &self.dropped
    }

    /// Multiplicity `a_1`.
    pub fn multiplicity(&self) -> usize {
        self.generators[0]
    }

    pub fn embedding_dimension(&self) -> usize {
        self.generators.len()
    }

    /// Largest integer outside the semigroup, `-1` for all of `N_0`.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    /// `f + 1`, the smallest exponent of the conductor.
    pub fn conductor(&self) -> usize {
        (self.frobenius + 1) as usize
    }

    /// True when the semigroup is `N_0` and the ring is a DVR.
    pub fn is_regular(&self) -> bool {
        self.generators[0] == 1
    }

    pub fn gaps(&self) -> &[usize] {
        &self.gaps
    }

    /// Exponents `f+1, ..., f+a_1` generating the conductor as an R-module.
    pub fn conductor_generators(&self) -> Vec<usize> {
        let c = self.conductor();
        (c..c + self.multiplicity()).collect()
    }

    /// Upper end of the stored membership table, `f + 2 a_d`.
    pub fn table_extent(&self) -> usize {
        self.membership.len() - 1
    }

    pub fn contains(&self, e: i64) -> bool {
        if e < 0 {
            false
        } else if e > self.frobenius {
            true
        } else {
            self.membership[e as usize]
        }
    }

    /// Membership for a non-negative exponent.
    pub fn has(&self, e: usize) -> bool {
        e as i64 > self.frobenius || self.membership[e]
    }

    /// Members of the semigroup in `[lo, hi]`, ascending.
    pub fn elements_in(&self, lo: usize, hi: usize) -> Vec<usize> {
        (lo..=hi).filter(|&e| self.has(e)).collect()
    }

    /// Largest element strictly below `a` (0 when `a <= a_1`).
    pub fn largest_below(&self, a: usize) -> usize {
        (0..a).rev().find(|&e| self.has(e)).unwrap_or(0)
    }

    /// Sums of exactly `t` generators (with repetition) that are at most `cap`.
    pub fn generator_sums(&self, t: u32, cap: usize) -> Vec<usize> {
        let mut levels = self.sum_levels(cap);
        let mut level = levels.next().expect("level 0");
        for _ in 0..t {
            level = levels.next().expect("levels are unbounded");
        }
        level
    }

    /// Successive levels `S_0, S_1, ...` of generator sums capped at `cap`.
    pub fn sum_levels(&self, cap: usize) -> SumLevels<'_> {
        SumLevels {
            generators: &self.generators,
            cap,
            current: None,
        }
    }

    /// m-adic order of `x^e`: the largest `t` with `x^e` in `m^t`.
    pub fn madic_order(&self, e: usize) -> Result<u32> {
        if !self.has(e) {
            return Err(Error::NotInSemigroup(e as i64));
        }
        if e < self.orders.len() {
            return Ok(self.orders[e]);
        }
        Ok(self.order_table(e)[e])
    }

    /// m-adic orders of every exponent in `[0, upto]` (0 for non-members).
    pub fn order_table(&self, upto: usize) -> Vec<u32> {
        if upto < self.orders.len() {
            return self.orders[..=upto].to_vec();
        }
        let membership: Vec<bool> = (0..=upto).map(|e| self.has(e)).collect();
        longest_factorizations(&self.generators, &membership)
    }

    /// Decides `m^t ⊆ x^alpha R` as R-modules.
    pub fn power_contained_in_shift(&self, t: u32, alpha: usize) -> bool {
        let cap = (self.frobenius + alpha as i64).max(0) as usize;
        self.generator_sums(t, cap)
            .into_iter()
            .all(|s| self.contains(s as i64 - alpha as i64))
    }

    /// Stable Goto number as the largest `t` with `m^t` in no `x^alpha R`.
    ///
    /// Returns 0 for the regular case.
    pub fn stable_goto_via_t(&self) -> u32 {
        if self.is_regular() {
            return 0;
        }
        let a1 = self.multiplicity();
        let mut t = 1;
        loop {
            if (1..=a1).any(|alpha| self.power_contained_in_shift(t, alpha)) {
                return t - 1;
            }
            t += 1;
        }
    }

    /// Stable Goto number as a min over `alpha` of max m-adic orders of
    /// exponents `beta` with `beta - alpha` outside the semigroup.
    pub fn stable_goto_via_t_prime(&self) -> u32 {
        if self.is_regular() {
            return 0;
        }
        let f = self.frobenius as usize;
        (1..=self.multiplicity())
            .map(|alpha| {
                (0..=f + alpha)
                    .filter(|&beta| self.has(beta) && !self.contains(beta as i64 - alpha as i64))
                    .map(|beta| self.orders[beta])
                    .max()
                    .unwrap_or(0)
            })
            .min()
            .expect("a_1 >= 1")
    }

    /// Exactly one of `n`, `f - n` lies in the semigroup for each `n` in `[0, f]`.
    pub fn is_symmetric(&self) -> bool {
        let f = self.frobenius;
        (0..=f).all(|n| self.contains(n) != self.contains(f - n))
    }

    /// m-adic order of the conductor ideal `C = x^{f+1} V`.
    pub fn conductor_order(&self) -> u32 {
        if self.is_regular() {
            return 0;
        }
        let c = self.conductor();
        let hi = self.table_extent();
        let min = (c..=hi).map(|e| self.orders[e]).min().expect("non-empty");
        // ord(x^{e + a_1}) > ord(x^e), so the first a_1 exponents decide it.
        debug_assert_eq!(
            min,
            (c..c + self.multiplicity())
                .map(|e| self.orders[e])
                .min()
                .unwrap()
        );
        min
    }
}

/// Iterator over capped generator-sum levels, see
/// [`NumericalSemigroup::sum_levels`]. Each level is ascending.
pub struct SumLevels<'a> {
    generators: &'a [usize],
    cap: usize,
    current: Option<Vec<usize>>,
}

impl Iterator for SumLevels<'_> {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let next = match &self.current {
            None => vec![0],
            Some(level) => {
                let mut hit = vec![false; self.cap + 1];
                for &s in level {
                    for &a in self.generators {
                        if s + a <= self.cap {
                            hit[s + a] = true;
                        }
                    }
                }
                (0..=self.cap).filter(|&e| hit[e]).collect()
            }
        };
        self.current = Some(next.clone());
        Some(next)
    }
}

/// `a_1 a_2 - a_1 - a_2` for coprime `1 < a1 < a2`.
pub fn frobenius_two_generated(a1: u64, a2: u64) -> Result<i64> {
    if !(1 < a1 && a1 < a2) {
        return Err(Error::InvalidArgument(format!(
            "need 1 < a1 < a2, got ({a1}, {a2})"
        )));
    }
    if a1.gcd(&a2) != 1 {
        return Err(Error::Coprimality { a1, a2 });
    }
    Ok((a1 * a2 - a1 - a2) as i64)
}

/// Summary of the invariants of a semigroup, as printed by `info`.
#[derive(Clone, Debug, Serialize)]
pub struct SemigroupInfo {
    pub generators: Vec<usize>,
    pub dropped_generators: Vec<usize>,
    pub regular: bool,
    pub frobenius: i64,
    pub gaps: Vec<usize>,
    pub conductor_generators: Vec<usize>,
    pub symmetric: bool,
    pub stable_goto: u32,
    pub conductor_order: u32,
}

impl NumericalSemigroup {
    pub fn info(&self) -> SemigroupInfo {
        SemigroupInfo {
            generators: self.generators.clone(),
            dropped_generators: self.dropped.clone(),
            regular: self.is_regular(),
            frobenius: self.frobenius,
            gaps: self.gaps.clone(),
            conductor_generators: self.conductor_generators(),
            symmetric: self.is_symmetric(),
            stable_goto: self.stable_goto_via_t(),
            conductor_order: self.conductor_order(),
        }
    }
}
