//! Truncated arithmetic in the numerical semigroup ring `R = k[[x^e : e ∈ G]]`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};
use crate::semigroup::NumericalSemigroup;

/// Sparse power series: exponent to nonzero coefficient.
pub type Series = BTreeMap<usize, Scalar>;

/// An element of `R` known modulo `x^T`.
#[derive(Clone, Debug, PartialEq)]
pub struct RingElement {
    semigroup: Arc<NumericalSemigroup>,
    field: Field,
    coeffs: Series,
    truncation: usize,
}

impl RingElement {
    /// Builds an element from `(exponent, coefficient)` terms, dropping zero
    /// coefficients and exponents at or above `truncation`. Repeated exponents
    /// are summed.
    pub fn new(
        semigroup: Arc<NumericalSemigroup>,
        field: Field,
        terms: impl IntoIterator<Item = (usize, Scalar)>,
        truncation: usize,
    ) -> Result<Self> {
        let mut coeffs = Series::new();
        for (e, c) in terms {
            if c.field() != field {
                return Err(Error::MixedField);
            }
            if !semigroup.has(e) {
                return Err(Error::NotInSemigroup(e as i64));
            }
            if e >= truncation {
                continue;
            }
            add_term(&mut coeffs, e, &c);
        }
        Ok(Self {
            semigroup,
            field,
            coeffs,
            truncation,
        })
    }

    pub fn monomial(
        semigroup: Arc<NumericalSemigroup>,
        field: Field,
        e: usize,
        truncation: usize,
    ) -> Result<Self> {
        Self::new(semigroup, field, [(e, field.one())], truncation)
    }

    pub fn zero(semigroup: Arc<NumericalSemigroup>, field: Field, truncation: usize) -> Self {
        Self {
            semigroup,
            field,
            coeffs: Series::new(),
            truncation,
        }
    }

    pub fn semigroup(&self) -> &Arc<NumericalSemigroup> {
        &self.semigroup
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn coeffs(&self) -> &Series {
        &self.coeffs
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Smallest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.keys().next().copied()
    }

    fn check_compatible(&self, other: &RingElement) -> Result<()> {
        if self.field != other.field {
            return Err(Error::MixedField);
        }
        if self.semigroup != other.semigroup {
            return Err(Error::MixedSemigroup);
        }
        Ok(())
    }

    /// Product modulo `x^{min(T_a, T_b)}`.
    pub fn multiply(&self, other: &RingElement) -> Result<RingElement> {
        self.check_compatible(other)?;
        let truncation = self.truncation.min(other.truncation);
        let mut coeffs = Series::new();
        for (i, a) in &self.coeffs {
            for (j, b) in &other.coeffs {
                if i + j >= truncation {
                    break;
                }
                add_term(&mut coeffs, i + j, &a.mul(b));
            }
        }
        Ok(RingElement {
            semigroup: self.semigroup.clone(),
            field: self.field,
            coeffs,
            truncation,
        })
    }

    /// Same element with a smaller truncation.
    pub fn truncate(&self, truncation: usize) -> RingElement {
        let truncation = truncation.min(self.truncation);
        RingElement {
            semigroup: self.semigroup.clone(),
            field: self.field,
            coeffs: self
                .coeffs
                .range(..truncation)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
            truncation,
        }
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_series(f, &self.coeffs)
    }
}

pub(crate) fn add_term(series: &mut Series, e: usize, c: &Scalar) {
    if c.is_zero() {
        return;
    }
    match series.get_mut(&e) {
        Some(existing) => {
            let sum = existing.add(c);
            if sum.is_zero() {
                series.remove(&e);
            } else {
                *existing = sum;
            }
        }
        None => {
            series.insert(e, c.clone());
        }
    }
}

/// Writes a series in the element syntax, e.g. `x^7 + x^8 - 3/2*x^9`.
pub fn write_series(f: &mut impl fmt::Write, series: &Series) -> fmt::Result {
    if series.is_empty() {
        return write!(f, "0");
    }
    for (k, (e, c)) in series.iter().enumerate() {
        let (sign, mag) = if c.is_negative() {
            ("-", c.neg())
        } else {
            ("+", c.clone())
        };
        if k == 0 {
            if sign == "-" {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {sign} ")?;
        }
        match (*e, mag.is_one()) {
            (0, _) => write!(f, "{mag}")?,
            (_, true) => write!(f, "x^{e}")?,
            (_, false) => write!(f, "{mag}*x^{e}")?,
        }
    }
    Ok(())
}

/// Inverse of a unit power series with constant term 1, modulo `x^T`.
pub fn invert_unit_mod(unit: &Series, truncation: usize) -> Result<Series> {
    let one = match unit.get(&0) {
        Some(c) if c.is_one() => c.clone(),
        _ => return Err(Error::NotAUnit),
    };
    let mut inverse: Vec<Option<Scalar>> = Vec::with_capacity(truncation);
    for n in 0..truncation {
        if n == 0 {
            inverse.push(Some(one.clone()));
            continue;
        }
        let mut acc: Option<Scalar> = None;
        for (&k, v) in unit.range(1..=n) {
            if let Some(w) = &inverse[n - k] {
                let term = v.mul(w);
                acc = Some(match acc {
                    Some(a) => a.add(&term),
                    None => term,
                });
            }
        }
        inverse.push(acc.map(|a| a.neg()).filter(|a| !a.is_zero()));
    }
    Ok(inverse
        .into_iter()
        .enumerate()
        .filter_map(|(e, c)| c.map(|c| (e, c)))
        .collect())
}

/// A principal parameter ideal `q R` with `q = x^b (1 + Σ u_i x^i)`,
/// `1 <= i <= f`, `b + i ∈ G` whenever `u_i != 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct CanonicalIdeal {
    semigroup: Arc<NumericalSemigroup>,
    field: Field,
    b: usize,
    unit_coeffs: Series,
}

impl CanonicalIdeal {
    /// The monomial ideal `x^b R`.
    pub fn monomial(semigroup: Arc<NumericalSemigroup>, field: Field, b: usize) -> Result<Self> {
        if b == 0 {
            return Err(Error::NotParameter);
        }
        if !semigroup.has(b) {
            return Err(Error::NotInSemigroup(b as i64));
        }
        Ok(Self {
            semigroup,
            field,
            b,
            unit_coeffs: Series::new(),
        })
    }

    /// Ideal with the given unit coefficients; validates the canonical-form
    /// invariants.
    pub fn with_unit(
        semigroup: Arc<NumericalSemigroup>,
        field: Field,
        b: usize,
        unit_coeffs: impl IntoIterator<Item = (usize, Scalar)>,
    ) -> Result<Self> {
        let mut ideal = Self::monomial(semigroup, field, b)?;
        let f = ideal.semigroup.frobenius();
        for (i, c) in unit_coeffs {
            if c.field() != field {
                return Err(Error::MixedField);
            }
            if c.is_zero() {
                continue;
            }
            if i == 0 || i as i64 > f {
                return Err(Error::InvalidArgument(format!(
                    "unit position {i} outside [1, {f}]"
                )));
            }
            if !ideal.semigroup.has(b + i) {
                return Err(Error::NotInSemigroup((b + i) as i64));
            }
            ideal.unit_coeffs.insert(i, c);
        }
        Ok(ideal)
    }

    pub fn semigroup(&self) -> &Arc<NumericalSemigroup> {
        &self.semigroup
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Valuation of the generator.
    pub fn b(&self) -> usize {
        self.b
    }

    pub fn unit_coeffs(&self) -> &Series {
        &self.unit_coeffs
    }

    pub fn is_monomial(&self) -> bool {
        self.unit_coeffs.is_empty()
    }

    /// `1 + Σ u_i x^i` as a series.
    pub fn unit(&self) -> Series {
        let mut u = self.unit_coeffs.clone();
        u.insert(0, self.field.one());
        u
    }

    /// `x^b (1 + Σ u_i x^i)`, as a series (exact polynomial).
    pub fn generator_series(&self) -> Series {
        self.unit()
            .into_iter()
            .map(|(i, c)| (self.b + i, c))
            .collect()
    }

    /// Default truncation `b + f + 1` for ideal computations.
    pub fn default_truncation(&self) -> usize {
        (self.b as i64 + self.semigroup.frobenius() + 1) as usize
    }

    /// The generator as a ring element modulo `x^T`.
    pub fn generator(&self, truncation: usize) -> RingElement {
        RingElement::new(
            self.semigroup.clone(),
            self.field,
            self.generator_series(),
            truncation,
        )
        .expect("canonical generator lies in R")
    }
}

impl fmt::Display for CanonicalIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_series(f, &self.generator_series())
    }
}

/// Canonical unit form of the principal ideal `r R`.
///
/// Scales the leading coefficient to 1 and discards coefficients at
/// `x^{b+j}`, `j > f`: they form a unit multiple `1 + β`, `β ∈ C`.
pub fn canonicalize(r: &RingElement) -> Result<CanonicalIdeal> {
    let b = r.valuation().ok_or(Error::ZeroElement)?;
    if b == 0 {
        return Err(Error::NotParameter);
    }
    let s = &r.semigroup;
    let need = (b as i64 + s.frobenius() + 1) as usize;
    if r.truncation < need {
        return Err(Error::TruncationTooSmall {
            have: r.truncation,
            need,
        });
    }
    let lead_inv = r.coeffs[&b]
        .inverse()
        .expect("stored coefficients are nonzero");
    let unit_coeffs: Vec<(usize, Scalar)> = r
        .coeffs
        .range(b + 1..need)
        .map(|(e, c)| (e - b, c.mul(&lead_inv)))
        .collect();
    CanonicalIdeal::with_unit(s.clone(), r.field, b, unit_coeffs)
}

/// Decides `w ∈ q R`.
///
/// `w u^{-1} x^{-b}` lies in `R` iff its coefficients at the gaps vanish,
/// because every series supported above `f` is in `R`.
pub fn member_of_principal(w: &RingElement, q: &CanonicalIdeal) -> Result<bool> {
    if w.field != q.field {
        return Err(Error::MixedField);
    }
    if *w.semigroup != *q.semigroup {
        return Err(Error::MixedSemigroup);
    }
    let need = q.default_truncation();
    if w.truncation < need {
        return Err(Error::TruncationTooSmall {
            have: w.truncation,
            need,
        });
    }
    let Some(v) = w.valuation() else {
        return Ok(true);
    };
    if v < q.b {
        return Ok(false);
    }
    let f = q.semigroup.frobenius();
    if f < 0 {
        return Ok(true);
    }
    let f = f as usize;
    let inverse = invert_unit_mod(&q.unit(), f + 1)?;
    let shifted: Series = w
        .coeffs
        .range(q.b..=q.b + f)
        .map(|(e, c)| (e - q.b, c.clone()))
        .collect();
    for &gap in q.semigroup.gaps() {
        let mut acc = q.field.zero();
        for (k, c) in shifted.range(..=gap) {
            if let Some(iv) = inverse.get(&(gap - k)) {
                acc = acc.add(&c.mul(iv));
            }
        }
        if !acc.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Decides whether `r` lies in the integral closure of `Q`, which is spanned
/// by the monomials of valuation at least `b`.
pub fn integral_closure_contains(q: &CanonicalIdeal, r: &RingElement) -> bool {
    r.valuation().is_none_or(|v| v >= q.b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::parse_scalar;

    fn sg(gens: &[i64]) -> Arc<NumericalSemigroup> {
        Arc::new(NumericalSemigroup::new(gens).unwrap())
    }

    fn elem(s: &Arc<NumericalSemigroup>, terms: &[(usize, i64)], t: usize) -> RingElement {
        let q = Field::Rational;
        RingElement::new(
            s.clone(),
            q,
            terms.iter().map(|&(e, c)| (e, q.from_i64(c))),
            t,
        )
        .unwrap()
    }

    fn series(terms: &[(usize, i64)]) -> Series {
        terms
            .iter()
            .map(|&(e, c)| (e, Field::Rational.from_i64(c)))
            .collect()
    }

    #[test]
    fn multiplication() {
        let s = sg(&[3, 5]);
        assert_eq!(
            elem(&s, &[(3, 1)], 50)
                .multiply(&elem(&s, &[(5, 1)], 50))
                .unwrap(),
            elem(&s, &[(8, 1)], 50)
        );
        assert_eq!(
            elem(&s, &[(3, 1)], 50)
                .multiply(&elem(&s, &[(3, 1), (5, 1)], 50))
                .unwrap(),
            elem(&s, &[(6, 1), (8, 1)], 50)
        );
        let s = sg(&[4, 7, 9]);
        let p = elem(&s, &[(7, 1), (8, 1), (9, 1)], 30)
            .multiply(&elem(&s, &[(4, 1)], 20))
            .unwrap();
        assert_eq!(p, elem(&s, &[(11, 1), (12, 1), (13, 1)], 20));
        assert_eq!(p.truncation(), 20);
    }

    #[test]
    fn mixed_operands_rejected() {
        let s = sg(&[3, 5]);
        let a = elem(&s, &[(3, 1)], 20);
        let other = elem(&sg(&[3, 4]), &[(3, 1)], 20);
        assert_eq!(a.multiply(&other), Err(Error::MixedSemigroup));
        let p = Field::prime(7).unwrap();
        let b = RingElement::monomial(s.clone(), p, 3, 20).unwrap();
        assert_eq!(a.multiply(&b), Err(Error::MixedField));
        assert_eq!(
            RingElement::monomial(s, Field::Rational, 4, 20),
            Err(Error::NotInSemigroup(4))
        );
    }

    #[test]
    fn unit_inversion() {
        assert_eq!(
            invert_unit_mod(&series(&[(0, 1)]), 5).unwrap(),
            series(&[(0, 1)])
        );
        assert_eq!(
            invert_unit_mod(&series(&[(0, 1), (4, 1)]), 9).unwrap(),
            series(&[(0, 1), (4, -1), (8, 1)])
        );
        assert_eq!(
            invert_unit_mod(&series(&[(0, 1), (1, 1), (2, 1)]), 5).unwrap(),
            series(&[(0, 1), (1, -1), (3, 1), (4, -1)])
        );
        assert_eq!(invert_unit_mod(&series(&[(0, 2)]), 5), Err(Error::NotAUnit));
        assert_eq!(invert_unit_mod(&series(&[(1, 1)]), 5), Err(Error::NotAUnit));
    }

    #[test]
    fn canonical_forms() {
        let s = sg(&[3, 5]);
        let q = canonicalize(&elem(&s, &[(3, 1), (100, 1)], 200)).unwrap();
        assert_eq!(q.b(), 3);
        assert!(q.is_monomial());
        // x^3 and x^3 + x^100 generate the same ideal
        assert!(member_of_principal(&elem(&s, &[(3, 1)], 200), &q).unwrap());
        let orig = canonicalize(&elem(&s, &[(3, 1)], 200)).unwrap();
        assert!(member_of_principal(&elem(&s, &[(3, 1), (100, 1)], 200), &orig).unwrap());

        let s = sg(&[5, 11]);
        let q = canonicalize(&elem(&s, &[(40, 1), (44, 1)], 100)).unwrap();
        assert_eq!(q.b(), 40);
        assert_eq!(q.unit_coeffs(), &series(&[(4, 1)]));

        let s = sg(&[4, 7, 9]);
        let q = canonicalize(&elem(&s, &[(7, 1), (8, 1), (9, 1)], 30)).unwrap();
        assert_eq!(q.b(), 7);
        assert_eq!(q.unit_coeffs(), &series(&[(1, 1), (2, 1)]));
        assert_eq!(q.to_string(), "x^7 + x^8 + x^9");
        // idempotent
        assert_eq!(canonicalize(&q.generator(30)).unwrap(), q);
    }

    #[test]
    fn canonical_form_scales_leading_coefficient() {
        let s = sg(&[3, 5]);
        let field = Field::Rational;
        let r = RingElement::new(
            s.clone(),
            field,
            [
                (5, parse_scalar(field, "2").unwrap()),
                (6, parse_scalar(field, "3").unwrap()),
            ],
            40,
        )
        .unwrap();
        let q = canonicalize(&r).unwrap();
        assert_eq!(q.unit_coeffs()[&1], parse_scalar(field, "3/2").unwrap());
        assert_eq!(q.to_string(), "x^5 + 3/2*x^6");
    }

    #[test]
    fn canonicalize_errors() {
        let s = sg(&[3, 5]);
        assert_eq!(canonicalize(&elem(&s, &[], 20)), Err(Error::ZeroElement));
        assert_eq!(
            canonicalize(&elem(&s, &[(0, 1), (3, 1)], 20)),
            Err(Error::NotParameter)
        );
        assert_eq!(
            canonicalize(&elem(&s, &[(5, 1)], 10)),
            Err(Error::TruncationTooSmall { have: 10, need: 13 })
        );
    }

    #[test]
    fn principal_membership() {
        let s = sg(&[3, 5]);
        let x5 = CanonicalIdeal::monomial(s.clone(), Field::Rational, 5).unwrap();
        assert!(member_of_principal(&elem(&s, &[(8, 1)], 13), &x5).unwrap());
        let x10 = CanonicalIdeal::monomial(s.clone(), Field::Rational, 10).unwrap();
        assert!(!member_of_principal(&elem(&s, &[(9, 1)], 18), &x10).unwrap());
        assert!(member_of_principal(&elem(&s, &[], 18), &x10).unwrap());
        assert_eq!(
            member_of_principal(&elem(&s, &[(9, 1)], 12), &x10),
            Err(Error::TruncationTooSmall { have: 12, need: 18 })
        );

        let s = sg(&[4, 7, 9]);
        let q = canonicalize(&elem(&s, &[(7, 1), (8, 1), (9, 1)], 30)).unwrap();
        assert!(member_of_principal(&elem(&s, &[(11, 1), (12, 1), (13, 1)], 30), &q).unwrap());
        assert!(!member_of_principal(&elem(&s, &[(11, 1)], 30), &q).unwrap());
    }

    #[test]
    fn closure_membership() {
        let s = sg(&[3, 5]);
        let x10 = CanonicalIdeal::monomial(s.clone(), Field::Rational, 10).unwrap();
        assert!(!integral_closure_contains(&x10, &elem(&s, &[(9, 1)], 30)));
        assert!(integral_closure_contains(&x10, &x10.generator(30)));
        let s = sg(&[5, 11]);
        let q = canonicalize(&elem(&s, &[(40, 1), (44, 1)], 100)).unwrap();
        assert!(integral_closure_contains(&q, &elem(&s, &[(41, 1)], 100)));
    }

    #[test]
    fn display_syntax() {
        let s = sg(&[3, 5]);
        assert_eq!(
            elem(&s, &[(0, 2), (3, -1), (6, 4)], 20).to_string(),
            "2 - x^3 + 4*x^6"
        );
        assert_eq!(elem(&s, &[], 20).to_string(), "0");
    }
}
