//! Colon ideals `Q : m^g`, `Q : M`, and the Goto numbers built from them.

use std::sync::Arc;

use crate::chain::ColonChain;
use crate::error::{Error, Result};
use crate::linalg::{Echelon, PivotOrder, SparseVec};
use crate::ring::{invert_unit_mod, member_of_principal, CanonicalIdeal, RingElement};
use crate::semigroup::NumericalSemigroup;
use crate::subspace::TruncatedSubspace;

/// `⌊f/a_1⌋ + 1`, the largest Goto number any parameter ideal can have.
pub fn goto_cap(s: &NumericalSemigroup) -> u32 {
    if s.is_regular() {
        return 0;
    }
    (s.frobenius() as usize / s.multiplicity()) as u32 + 1
}

/// Kernel of the system `r x^s ∈ Q` for every `s` in `multipliers`, in the
/// coordinates `G ∩ [0, T)`.
fn colon_system(q: &CanonicalIdeal, multipliers: &[usize], truncation: usize) -> TruncatedSubspace {
    let s = q.semigroup();
    let field = q.field();
    let b = q.b();
    let f = s.frobenius();
    let columns: Vec<usize> = (0..truncation).filter(|&c| s.has(c)).collect();
    let inverse = if f >= 0 {
        invert_unit_mod(&q.unit(), f as usize + 1).expect("canonical unit")
    } else {
        Default::default()
    };
    let one = field.one();
    let mut ech = Echelon::new(PivotOrder::Highest);
    for &shift in multipliers {
        if (shift as i64) > b as i64 + f {
            // r x^shift ∈ x^{b+f+1} V ∩ R ⊆ x^b C ⊆ Q for every r in R.
            debug_assert!(s.has(shift - b));
            continue;
        }
        for &c in columns.iter().take_while(|&&c| c + shift < b) {
            ech.insert(&vec![(c, one.clone())]);
        }
        for &gap in s.gaps() {
            // Coefficient of x^gap in (r x^shift) u^{-1} x^{-b}.
            let row: SparseVec = (0..=gap)
                .filter_map(|k| {
                    let c = (b + k).checked_sub(shift)?;
                    if c >= truncation || !s.has(c) {
                        return None;
                    }
                    inverse.get(&(gap - k)).map(|w| (c, w.clone()))
                })
                .collect();
            if !row.is_empty() {
                ech.insert(&row);
            }
        }
    }
    let basis = ech.kernel(&columns, field);
    TruncatedSubspace::from_reduced(s.clone(), field, truncation, basis)
}

fn check_truncation(q: &CanonicalIdeal, truncation: usize) -> Result<()> {
    let need = q.default_truncation();
    if truncation < need {
        return Err(Error::TruncationTooSmall {
            have: truncation,
            need,
        });
    }
    Ok(())
}

/// `Q : m^g` modulo `x^{b+f+1}`.
pub fn colon_power(q: &CanonicalIdeal, g: u32) -> TruncatedSubspace {
    colon_power_at(q, g, q.default_truncation()).expect("default truncation suffices")
}

/// `Q : m^g` modulo `x^T`, `T >= b + f + 1`.
pub fn colon_power_at(q: &CanonicalIdeal, g: u32, truncation: usize) -> Result<TruncatedSubspace> {
    check_truncation(q, truncation)?;
    let s = q.semigroup();
    let cap = (q.b() as i64 + s.frobenius()).max(0) as usize;
    let sums = s.generator_sums(g, cap);
    Ok(colon_system(q, &sums, truncation))
}

/// `Q : (x^e : e ∈ M)` modulo `x^{b+f+1}`.
pub fn colon_by_monomials(q: &CanonicalIdeal, monomials: &[usize]) -> Result<TruncatedSubspace> {
    colon_by_monomials_at(q, monomials, q.default_truncation())
}

/// `Q : (x^e : e ∈ M)` modulo `x^T`, `T >= b + f + 1`.
pub fn colon_by_monomials_at(
    q: &CanonicalIdeal,
    monomials: &[usize],
    truncation: usize,
) -> Result<TruncatedSubspace> {
    check_truncation(q, truncation)?;
    if let Some(&e) = monomials.iter().find(|&&e| !q.semigroup().has(e)) {
        return Err(Error::NotInSemigroup(e as i64));
    }
    let mut m = monomials.to_vec();
    m.sort_unstable();
    m.dedup();
    Ok(colon_system(q, &m, truncation))
}

/// Decides `V ⊆ m^i + Q`.
pub fn contained_in_power_sum(v: &TruncatedSubspace, i: u32, q: &CanonicalIdeal) -> Result<bool> {
    if v.field() != q.field() {
        return Err(Error::MixedField);
    }
    let s = q.semigroup();
    if **v.semigroup() != **s {
        return Err(Error::MixedSemigroup);
    }
    let t = v.truncation();
    let need = (q.b().max(i as usize * s.multiplicity()) as i64 + s.frobenius() + 1) as usize;
    if t < need {
        return Err(Error::TruncationTooSmall { have: t, need });
    }
    if i == 0 {
        return Ok(true);
    }
    // m^i is spanned by the monomials of order >= i; project onto the rest.
    let orders = s.order_table(t - 1);
    debug_assert!(
        (i as usize * s.multiplicity() + (s.frobenius() + 1) as usize..t).all(|e| orders[e] >= i)
    );
    let low = |e: usize| s.has(e) && orders[e] < i;
    let project =
        |vec: &SparseVec| -> SparseVec { vec.iter().filter(|(e, _)| low(*e)).cloned().collect() };
    let mut ech = Echelon::new(PivotOrder::Lowest);
    let generator = q.generator_series();
    for shift in (0..t.saturating_sub(q.b())).filter(|&e| s.has(e)) {
        let row: SparseVec = generator
            .iter()
            .map(|(k, c)| (k + shift, c.clone()))
            .filter(|(k, _)| *k < t && low(*k))
            .collect();
        if !row.is_empty() {
            ech.insert(&row);
        }
    }
    Ok(v.basis().iter().all(|vec| ech.contains(&project(vec))))
}

/// Goto number `g(Q)`.
pub fn goto_number(q: &CanonicalIdeal) -> Result<u32> {
    goto_number_at(q, q.default_truncation())
}

/// Goto number with normal forms computed modulo `x^T`.
pub fn goto_number_at(q: &CanonicalIdeal, truncation: usize) -> Result<u32> {
    check_truncation(q, truncation)?;
    let s = q.semigroup();
    if s.is_regular() {
        return Ok(0);
    }
    let cap = goto_cap(s);
    let mut chain = ColonChain::new(q, truncation);
    while chain.step() <= cap {
        chain.advance();
        if !chain.is_integral() {
            return Ok(chain.step() - 1);
        }
    }
    Err(Error::BoundViolation {
        at: chain.step(),
        bound: cap,
    })
}

/// Goto number of `x^b R` by monomial combinatorics: `Q : m^g` is integral
/// unless some `x^c`, `c < b`, has `x^{c+s} ∈ x^b R` for every `s ∈ S_g`.
pub fn goto_monomial(s: &NumericalSemigroup, b: usize) -> Result<u32> {
    if b == 0 {
        return Err(Error::NotParameter);
    }
    if !s.has(b) {
        return Err(Error::NotInSemigroup(b as i64));
    }
    if s.is_regular() {
        return Ok(0);
    }
    let top = b + s.frobenius() as usize;
    let candidates: Vec<usize> = (0..b).filter(|&c| s.has(c)).collect();
    let cap = goto_cap(s);
    for (g, level) in s.sum_levels(top).enumerate().skip(1) {
        let g = g as u32;
        let escapes = candidates.iter().any(|&c| {
            level
                .iter()
                .take_while(|&&t| c + t <= top)
                .all(|&t| c + t >= b && s.has(c + t - b))
        });
        if escapes {
            return Ok(g - 1);
        }
        if g > cap {
            return Err(Error::BoundViolation { at: g, bound: cap });
        }
    }
    unreachable!("sum levels are unbounded")
}

fn scan_power_sums(v: &TruncatedSubspace, q: &CanonicalIdeal) -> Result<u32> {
    let cap = goto_cap(q.semigroup()) + 1;
    let mut i = 0;
    while i < cap && contained_in_power_sum(v, i + 1, q)? {
        i += 1;
    }
    if i == cap {
        return Err(Error::BoundViolation {
            at: cap,
            bound: cap - 1,
        });
    }
    Ok(i)
}

fn power_sum_truncation(q: &CanonicalIdeal) -> usize {
    let s = q.semigroup();
    let cap = goto_cap(s) as usize + 1;
    (q.b().max(cap * s.multiplicity()) as i64 + s.frobenius() + 1) as usize
}

/// Whether `Q` equals its integral closure `x^b V ∩ R`.
pub fn is_integrally_closed(q: &CanonicalIdeal) -> bool {
    let t = q.default_truncation();
    let s = q.semigroup().clone();
    let image = TruncatedSubspace::principal_image(q, t);
    let closure =
        TruncatedSubspace::monomials(s.clone(), q.field(), t, (q.b()..t).filter(|&e| s.has(e)));
    image.dim() == closure.dim() && closure.is_subspace_of(&image)
}

/// `g(Q) = max{i : Q : \bar Q ⊆ m^i + Q}`, valid when `R` is Gorenstein and
/// `Q` is not integrally closed.
pub fn dual_goto(q: &CanonicalIdeal) -> Result<u32> {
    let s = q.semigroup();
    if !s.is_symmetric() {
        return Err(Error::NotGorenstein);
    }
    if is_integrally_closed(q) {
        return Err(Error::ClosedIdeal);
    }
    let t = power_sum_truncation(q);
    let top = (q.b() as i64 + s.frobenius() + 1) as usize;
    let generators: Vec<usize> = (q.b()..=top).filter(|&e| s.has(e)).collect();
    let j = colon_by_monomials_at(q, &generators, t)?;
    debug_assert!({
        // Every x^e, e >= b, is an x^{a_1}-power multiple of a listed generator.
        let a1 = s.multiplicity();
        (q.b()..t).filter(|&e| s.has(e)).all(|e| {
            let mut e = e;
            while e > top {
                e -= a1;
            }
            generators.contains(&e) || e < q.b()
        })
    });
    scan_power_sums(&j, q)
}

/// `max{i : C ⊆ m^i + Q}` for `Q` inside the conductor `C`; equals `g(Q)`
/// when `R` is Gorenstein.
pub fn conductor_dual_goto(q: &CanonicalIdeal) -> Result<u32> {
    let s = q.semigroup();
    if q.b() as i64 <= s.frobenius() {
        return Err(Error::NotInConductor {
            b: q.b(),
            frobenius: s.frobenius(),
        });
    }
    let t = power_sum_truncation(q);
    let c = TruncatedSubspace::monomials(s.clone(), q.field(), t, s.conductor_generators());
    scan_power_sums(&c, q)
}

/// `min{i : m^{i+1} ⊆ Q}` for a reduction `Q` of `m` (`b = a_1`).
pub fn index_of_nilpotency(q: &CanonicalIdeal) -> Result<u32> {
    let s = q.semigroup();
    if q.b() != s.multiplicity() {
        return Err(Error::NotAReduction {
            b: q.b(),
            a1: s.multiplicity(),
        });
    }
    let t = q.default_truncation();
    let top = t - 1;
    let cap = goto_cap(s);
    for (i, level) in s.sum_levels(top).enumerate().skip(1) {
        let i = i as u32 - 1;
        let inside = level.iter().try_fold(true, |acc, &e| {
            let w = RingElement::monomial(s.clone(), q.field(), e, t)?;
            Ok::<bool, Error>(acc && member_of_principal(&w, q)?)
        })?;
        if inside {
            return Ok(i);
        }
        if i > cap {
            return Err(Error::BoundViolation { at: i, bound: cap });
        }
    }
    unreachable!("sum levels are unbounded")
}

/// Convenience: `g(x^b R)` through the linear-algebra engine.
pub fn goto_number_monomial(s: &Arc<NumericalSemigroup>, b: usize) -> Result<u32> {
    let q = CanonicalIdeal::monomial(s.clone(), Default::default(), b)?;
    goto_number(&q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Field;

    fn sg(gens: &[i64]) -> Arc<NumericalSemigroup> {
        Arc::new(NumericalSemigroup::new(gens).unwrap())
    }

    fn ideal(s: &Arc<NumericalSemigroup>, b: usize, unit: &[usize]) -> CanonicalIdeal {
        let one = Field::Rational.one();
        CanonicalIdeal::with_unit(
            s.clone(),
            Field::Rational,
            b,
            unit.iter().map(|&i| (i, one.clone())),
        )
        .unwrap()
    }

    #[test]
    fn three_five_colons() {
        let s = sg(&[3, 5]);
        let x5 = ideal(&s, 5, &[]);
        assert_eq!(colon_power(&x5, 3).min_valuation(), Some(5));
        assert!(colon_power(&x5, 4).min_valuation().unwrap() < 5);
        let x10 = ideal(&s, 10, &[]);
        let v = colon_power(&x10, 3);
        assert_eq!(v.min_valuation(), Some(9));
        assert!(v.contains(&vec![(9, Field::Rational.one())]));
        assert_eq!(goto_number(&x5).unwrap(), 3);
        assert_eq!(goto_number(&x10).unwrap(), 2);
    }

    #[test]
    fn colon_at_zero_is_the_ideal() {
        let s = sg(&[4, 7, 9]);
        let q = ideal(&s, 7, &[1, 2]);
        let t = q.default_truncation();
        let image = TruncatedSubspace::principal_image(&q, t);
        assert!(colon_power(&q, 0).same_as(&image));
        assert!(colon_by_monomials(&q, &[0]).unwrap().same_as(&image));
        assert_eq!(colon_power(&q, 3).min_valuation(), Some(7));
        assert_eq!(goto_number(&q).unwrap(), 3);
    }

    #[test]
    fn chain_matches_direct_colon() {
        let s = sg(&[4, 7, 9]);
        let q = ideal(&s, 11, &[3, 5]);
        let t = q.default_truncation();
        let mut chain = ColonChain::new(&q, t);
        for g in 0..4 {
            assert!(chain.subspace(&q).same_as(&colon_power(&q, g)), "g = {g}");
            chain.advance();
        }
    }

    #[test]
    fn general_goto_examples() {
        let s = sg(&[5, 11]);
        assert_eq!(goto_number(&ideal(&s, 40, &[])).unwrap(), 4);
        assert_eq!(goto_number(&ideal(&s, 40, &[4])).unwrap(), 5);
        assert_eq!(dual_goto(&ideal(&s, 40, &[])).unwrap(), 4);
        assert_eq!(dual_goto(&ideal(&s, 40, &[4])).unwrap(), 5);
        assert_eq!(conductor_dual_goto(&ideal(&s, 40, &[])).unwrap(), 4);
    }

    #[test]
    fn monomial_examples() {
        for (gens, b, g) in [
            (&[7, 11, 20][..], 45, 3),
            (&[7, 11, 20], 20, 5),
            (&[11, 14, 21], 85, 5),
            (&[9, 19, 21], 19, 8),
            (&[9, 19, 21], 21, 6),
            (&[3, 5], 5, 3),
        ] {
            let s = sg(gens);
            assert_eq!(goto_monomial(&s, b).unwrap(), g, "{s} b={b}");
            assert_eq!(goto_number_monomial(&s, b).unwrap(), g, "{s} b={b}");
        }
        assert_eq!(
            goto_monomial(&sg(&[3, 5]), 7),
            Err(Error::NotInSemigroup(7))
        );
    }

    #[test]
    fn dual_routes() {
        let s = sg(&[3, 5]);
        assert_eq!(dual_goto(&ideal(&s, 5, &[])).unwrap(), 3);
        let j = colon_by_monomials(&ideal(&s, 5, &[]), &[5, 6, 8, 9, 10, 11, 12, 13]).unwrap();
        assert_eq!(j.min_valuation(), Some(5));
        assert!(j.contains(&vec![(9, Field::Rational.one())]));
        assert!(!colon_power(&ideal(&s, 5, &[]), 0).contains(&vec![(9, Field::Rational.one())]));
        let s = sg(&[4, 5, 11]);
        assert_eq!(dual_goto(&ideal(&s, 12, &[])), Err(Error::NotGorenstein));
        assert_eq!(conductor_dual_goto(&ideal(&s, 12, &[])).unwrap(), 1);
        assert_eq!(goto_number(&ideal(&s, 12, &[])).unwrap(), 2);
        assert_eq!(
            conductor_dual_goto(&ideal(&s, 5, &[])),
            Err(Error::NotInConductor { b: 5, frobenius: 7 })
        );
        assert_eq!(
            conductor_dual_goto(&ideal(&sg(&[2, 3]), 4, &[])).unwrap(),
            1
        );
        assert!(dual_goto(&ideal(&sg(&[2, 3]), 2, &[])).is_ok());
    }

    #[test]
    fn closed_ideal_rejected() {
        // R/Q has length b while R/closure has length |G ∩ [0, b)|.
        assert!(!is_integrally_closed(&ideal(&sg(&[2, 3]), 2, &[1])));
        let v = sg(&[1]);
        assert!(is_integrally_closed(&ideal(&v, 3, &[])));
        assert_eq!(dual_goto(&ideal(&v, 3, &[])), Err(Error::ClosedIdeal));
    }

    #[test]
    fn conductor_sum_example() {
        let s = sg(&[4, 5, 11]);
        let q = ideal(&s, 12, &[]);
        let t = power_sum_truncation(&q);
        let c =
            TruncatedSubspace::monomials(s.clone(), Field::Rational, t, s.conductor_generators());
        assert!(contained_in_power_sum(&c, 0, &q).unwrap());
        assert!(contained_in_power_sum(&c, 1, &q).unwrap());
        assert!(!contained_in_power_sum(&c, 2, &q).unwrap());
        let image = TruncatedSubspace::principal_image(&q, t);
        assert!(contained_in_power_sum(&image, 3, &q).unwrap());
        let short = TruncatedSubspace::monomials(s.clone(), Field::Rational, 10, [8]);
        assert!(matches!(
            contained_in_power_sum(&short, 1, &q),
            Err(Error::TruncationTooSmall { .. })
        ));
    }

    #[test]
    fn nilpotency_index() {
        assert_eq!(
            index_of_nilpotency(&ideal(&sg(&[9, 19]), 9, &[])).unwrap(),
            8
        );
        assert_eq!(
            index_of_nilpotency(&ideal(&sg(&[3, 5]), 3, &[])).unwrap(),
            2
        );
        assert_eq!(
            index_of_nilpotency(&ideal(&sg(&[2, 3]), 2, &[])).unwrap(),
            1
        );
        assert_eq!(
            index_of_nilpotency(&ideal(&sg(&[3, 5]), 5, &[])),
            Err(Error::NotAReduction { b: 5, a1: 3 })
        );
    }

    #[test]
    fn regular_ring_is_trivial() {
        let s = sg(&[1]);
        assert_eq!(goto_number(&ideal(&s, 3, &[])).unwrap(), 0);
        assert_eq!(goto_monomial(&s, 3).unwrap(), 0);
    }
}
