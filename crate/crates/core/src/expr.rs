//! Element syntax: sums of terms `c*x^e`, e.g. `x^40 + x^44` or
//! `x^7 - 3/2*x^9 + 2`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ring::{canonicalize, CanonicalIdeal, RingElement};
use crate::scalar::{parse_scalar, Field, Scalar};
use crate::semigroup::NumericalSemigroup;

/// Splits on `+`/`-` that follow a complete term, keeping the sign with
/// each term. Repeated signs combine.
fn split_terms(text: &str) -> Result<Vec<(bool, String)>> {
    let mut terms = Vec::new();
    let mut negative = false;
    let mut current = String::new();
    for ch in text.chars() {
        let open = current.trim_end().ends_with(['/', '*', '^']);
        match ch {
            '+' | '-' if current.trim().is_empty() => negative ^= ch == '-',
            '+' | '-' if !open => {
                terms.push((negative, current.trim().to_string()));
                current.clear();
                negative = ch == '-';
            }
            c => current.push(c),
        }
    }
    if current.trim().is_empty() {
        return Err(Error::Parse(format!("missing term in `{text}`")));
    }
    terms.push((negative, current.trim().to_string()));
    Ok(terms)
}

fn parse_term(field: Field, term: &str) -> Result<(usize, Scalar)> {
    let bad = || Error::Parse(format!("bad term `{term}`"));
    let compact: String = term.chars().filter(|c| !c.is_whitespace()).collect();
    let (coef, power) = match compact.find('x') {
        None => (compact.as_str(), None),
        Some(pos) => {
            let coef = compact[..pos].strip_suffix('*').unwrap_or(&compact[..pos]);
            (coef, Some(&compact[pos + 1..]))
        }
    };
    let coef = if coef.is_empty() {
        if power.is_none() {
            return Err(bad());
        }
        field.one()
    } else {
        parse_scalar(field, coef)?
    };
    let exponent = match power {
        None => 0,
        Some("") => 1,
        Some(p) => p
            .strip_prefix('^')
            .and_then(|e| e.parse::<usize>().ok())
            .ok_or_else(bad)?,
    };
    Ok((exponent, coef))
}

/// Parses an element as `(exponent, coefficient)` terms.
pub fn parse_terms(field: Field, text: &str) -> Result<Vec<(usize, Scalar)>> {
    split_terms(text)?
        .into_iter()
        .map(|(negative, term)| {
            let (e, c) = parse_term(field, &term)?;
            Ok((e, if negative { c.neg() } else { c }))
        })
        .collect()
}

/// Parses an element of `R`, truncated at `x^{max + f + 1}` where `max` is
/// the largest exponent written.
pub fn parse_element(
    semigroup: &Arc<NumericalSemigroup>,
    field: Field,
    text: &str,
) -> Result<RingElement> {
    let terms = parse_terms(field, text)?;
    let top = terms.iter().map(|(e, _)| *e).max().unwrap_or(0);
    let truncation = (top as i64 + semigroup.frobenius() + 1).max(top as i64 + 1) as usize;
    RingElement::new(semigroup.clone(), field, terms, truncation)
}

/// Parses a generator and returns the canonical form of the ideal it spans.
pub fn parse_ideal(
    semigroup: &Arc<NumericalSemigroup>,
    field: Field,
    text: &str,
) -> Result<CanonicalIdeal> {
    canonicalize(&parse_element(semigroup, field, text)?)
}
