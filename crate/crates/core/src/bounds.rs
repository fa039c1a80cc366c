//! Closed-form upper bounds and exact formulas for Goto numbers, compared
//! against the engine.

use num_rational::Ratio;
use serde::Serialize;

use crate::colon::{goto_cap, goto_monomial};
use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

fn require_singular(s: &NumericalSemigroup) -> Result<()> {
    if s.is_regular() {
        return Err(Error::RegularRing);
    }
    Ok(())
}

fn frobenius(s: &NumericalSemigroup) -> usize {
    s.frobenius() as usize
}

/// `⌊f/a_1⌋ + 1`, bounding `g(Q)` for every parameter ideal.
pub fn bound_global(s: &NumericalSemigroup) -> Result<u32> {
    require_singular(s)?;
    Ok(goto_cap(s))
}

/// `⌊(a_j - b_j + f)/a_1⌋` with `b_j` the largest element below `a_j`,
/// bounding `g(x^{a_j})`. `j` is 1-based, `2 <= j <= d`.
pub fn bound_monomial_generator(s: &NumericalSemigroup, j: usize) -> Result<u32> {
    require_singular(s)?;
    let d = s.embedding_dimension();
    if !(2..=d).contains(&j) {
        return Err(Error::InvalidArgument(format!(
            "generator index {j} outside [2, {d}]"
        )));
    }
    let a = s.generators()[j - 1];
    Ok(((a - s.largest_below(a) + frobenius(s)) / s.multiplicity()) as u32)
}

/// `⌈(f + a_1 + 1)/a_2⌉ - 1`, bounding `g(x^{a_1})`.
pub fn bound_first_generator(s: &NumericalSemigroup) -> Result<u32> {
    require_singular(s)?;
    let a1 = s.multiplicity();
    let a2 = s.generators()[1];
    Ok(((frobenius(s) + a1 + 1).div_ceil(a2) - 1) as u32)
}

/// `(g(x^{a_1}), g(x^{a_2}))` for `G = <a_1, a_2>`:
/// `(a_1 - 1, a_2 - 1 - ⌊(a_2 - 1)/a_1⌋)`.
pub fn closed_form_two_generated(s: &NumericalSemigroup) -> Result<(u32, u32)> {
    let d = s.embedding_dimension();
    if d != 2 {
        return Err(Error::NotTwoGenerated(d));
    }
    let (a1, a2) = (s.generators()[0], s.generators()[1]);
    Ok(((a1 - 1) as u32, (a2 - 1 - (a2 - 1) / a1) as u32))
}

/// The common value of `g(x^e)` for `e >= f + a_1 + 1`, cross-checked
/// against the two generator-sum characterizations and, for two
/// generators, against `a_1 - 1`.
pub fn stable_goto(s: &NumericalSemigroup) -> Result<u32> {
    require_singular(s)?;
    let e = frobenius(s) + s.multiplicity() + 1;
    let value = goto_monomial(s, e)?;
    let via_t = s.stable_goto_via_t();
    let via_t_prime = s.stable_goto_via_t_prime();
    if via_t != value || via_t_prime != value {
        return Err(Error::CrossCheckMismatch(format!(
            "{s}: g(x^{e}) = {value}, via t = {via_t}, via t' = {via_t_prime}"
        )));
    }
    if s.embedding_dimension() == 2 && value as usize != s.multiplicity() - 1 {
        return Err(Error::CrossCheckMismatch(format!(
            "{s}: stable value {value} differs from a_1 - 1"
        )));
    }
    Ok(value)
}

/// `max_j g(x^{a_j})`, the supremum of monomial Goto numbers; checked to
/// dominate `g(x^e)` for `e ∈ G ∩ [1, f + 3a_1]`.
pub fn rho(s: &NumericalSemigroup) -> Result<u32> {
    require_singular(s)?;
    let mut best = 0;
    for &a in s.generators() {
        best = best.max(goto_monomial(s, a)?);
    }
    for e in 1..=frobenius(s) + 3 * s.multiplicity() {
        if s.has(e) {
            let g = goto_monomial(s, e)?;
            if g > best {
                return Err(Error::CrossCheckMismatch(format!(
                    "{s}: g(x^{e}) = {g} exceeds the generator maximum {best}"
                )));
            }
        }
    }
    Ok(best)
}

/// Maximum of the first-generator bound and the per-generator bounds; never
/// exceeds `1 + f/a_1`.
pub fn monomial_sup_bound(s: &NumericalSemigroup) -> Result<u32> {
    let mut best = bound_first_generator(s)?;
    for j in 2..=s.embedding_dimension() {
        best = best.max(bound_monomial_generator(s, j)?);
    }
    let ceiling = Ratio::new(frobenius(s) + s.multiplicity(), s.multiplicity());
    if Ratio::from_integer(best as usize) > ceiling {
        return Err(Error::CrossCheckMismatch(format!(
            "{s}: monomial bound {best} exceeds 1 + f/a_1 = {ceiling}"
        )));
    }
    Ok(best)
}

/// A bound next to the value it bounds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub bound: u32,
    pub truth: u32,
    pub slack: i64,
}

impl BoundCheck {
    fn new(bound: u32, truth: u32) -> Self {
        Self {
            bound,
            truth,
            slack: bound as i64 - truth as i64,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratorBound {
    pub index: usize,
    pub generator: usize,
    #[serde(flatten)]
    pub check: BoundCheck,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosedFormCheck {
    pub formula: (u32, u32),
    pub engine: (u32, u32),
}

/// Every bound and formula for one semigroup, with engine values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub schema: u32,
    pub generators: Vec<usize>,
    pub frobenius: i64,
    /// `⌊f/a_1⌋ + 1` against the monomial supremum `rho`.
    pub global_bound: BoundCheck,
    pub generator_bounds: Vec<GeneratorBound>,
    pub first_generator_bound: BoundCheck,
    pub two_generated_closed_form: Option<ClosedFormCheck>,
    pub stable_goto: u32,
    pub rho: u32,
    pub conductor_order: u32,
    /// The monomial-generator bound maximum against `rho`.
    pub monomial_sup_bound: BoundCheck,
}

impl BoundReport {
    pub fn new(s: &NumericalSemigroup) -> Result<Self> {
        require_singular(s)?;
        let rho = rho(s)?;
        let generator_bounds = (2..=s.embedding_dimension())
            .map(|j| {
                let a = s.generators()[j - 1];
                Ok(GeneratorBound {
                    index: j,
                    generator: a,
                    check: BoundCheck::new(bound_monomial_generator(s, j)?, goto_monomial(s, a)?),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let two_generated_closed_form = match closed_form_two_generated(s) {
            Ok(formula) => Some(ClosedFormCheck {
                formula,
                engine: (
                    goto_monomial(s, s.generators()[0])?,
                    goto_monomial(s, s.generators()[1])?,
                ),
            }),
            Err(Error::NotTwoGenerated(_)) => None,
            Err(e) => return Err(e),
        };
        Ok(Self {
            schema: 1,
            generators: s.generators().to_vec(),
            frobenius: s.frobenius(),
            global_bound: BoundCheck::new(bound_global(s)?, rho),
            generator_bounds,
            first_generator_bound: BoundCheck::new(
                bound_first_generator(s)?,
                goto_monomial(s, s.multiplicity())?,
            ),
            two_generated_closed_form,
            stable_goto: stable_goto(s)?,
            rho,
            conductor_order: s.conductor_order(),
            monomial_sup_bound: BoundCheck::new(monomial_sup_bound(s)?, rho),
        })
    }

    /// Whether every bound holds and every exact formula matches.
    pub fn consistent(&self) -> bool {
        let checks = [
            &self.global_bound,
            &self.first_generator_bound,
            &self.monomial_sup_bound,
        ];
        checks.iter().all(|c| c.slack >= 0)
            && self.generator_bounds.iter().all(|g| g.check.slack >= 0)
            && self
                .two_generated_closed_form
                .as_ref()
                .is_none_or(|c| c.formula == c.engine)
            && self.conductor_order <= self.stable_goto
            && self.stable_goto <= self.rho
    }
}
