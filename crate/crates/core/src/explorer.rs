//! Monomial tables and exhaustive searches over canonical forms
//! `x^b (1 + Σ u_i x^i)` with coefficients from a finite set.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use crate::colon::{goto_monomial, goto_number};
use crate::error::{Error, Result};
use crate::par::ordered_map;
use crate::ring::{canonicalize, CanonicalIdeal};
use crate::scalar::{Field, Scalar};
use crate::semigroup::NumericalSemigroup;

pub const DEFAULT_CAP: u128 = 10_000_000;

/// Which unit positions `i` (with `b + i ∈ G`) may carry a nonzero
/// coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PositionPolicy {
    All,
    /// Only the listed positions.
    Positions(Vec<usize>),
    /// Any positions, at most this many nonzero at once.
    MaxNonzero(usize),
}

#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub semigroup: Arc<NumericalSemigroup>,
    pub field: Field,
    /// Contains zero, no repeats.
    pub coefficients: Vec<Scalar>,
    /// Inclusive range of valuations `b`; defaults to `[1, f + a_1 + 1]`.
    pub b_range: Option<(usize, usize)>,
    pub positions: PositionPolicy,
    /// `None` uses every available core, `Some(1)` runs sequentially.
    pub threads: Option<usize>,
    pub cap: u128,
    /// Stops after this many ideals, leaving the result incomplete.
    pub stop_after: Option<u64>,
}

impl SearchConfig {
    /// Coefficients `{0, 1}` over the rationals, default valuation range.
    pub fn new(semigroup: Arc<NumericalSemigroup>) -> Self {
        let field = Field::Rational;
        Self {
            semigroup,
            field,
            coefficients: vec![field.zero(), field.one()],
            b_range: None,
            positions: PositionPolicy::All,
            threads: None,
            cap: DEFAULT_CAP,
            stop_after: None,
        }
    }

    /// Replaces the field, mapping the coefficient set into it.
    pub fn with_field(mut self, field: Field, coefficients: &[i64]) -> Self {
        self.field = field;
        self.coefficients = coefficients.iter().map(|&c| field.from_i64(c)).collect();
        self
    }

    pub fn b_bounds(&self) -> (usize, usize) {
        self.b_range.unwrap_or_else(|| {
            let s = &self.semigroup;
            (1, (s.frobenius() + s.multiplicity() as i64 + 1) as usize)
        })
    }

    fn validate(&self) -> Result<()> {
        if !self.coefficients.iter().any(Scalar::is_zero) {
            return Err(Error::InvalidArgument(
                "coefficient set must contain 0".into(),
            ));
        }
        if self.coefficients.iter().any(|c| c.field() != self.field) {
            return Err(Error::MixedField);
        }
        for (k, c) in self.coefficients.iter().enumerate() {
            if self.coefficients[..k].contains(c) {
                return Err(Error::InvalidArgument(format!(
                    "coefficient {c} listed twice"
                )));
            }
        }
        if self.threads == Some(0) {
            return Err(Error::InvalidArgument(
                "thread count must be positive".into(),
            ));
        }
        let (lo, hi) = self.b_bounds();
        if lo == 0 || lo > hi {
            return Err(Error::InvalidArgument(format!(
                "bad valuation range [{lo}, {hi}]"
            )));
        }
        Ok(())
    }

    fn admissible_positions(&self, b: usize) -> Vec<usize> {
        let s = &self.semigroup;
        let f = s.frobenius().max(0) as usize;
        let all = (1..=f).filter(|&i| s.has(b + i));
        match &self.positions {
            PositionPolicy::Positions(list) => all.filter(|i| list.contains(i)).collect(),
            _ => all.collect(),
        }
    }

    fn nonzero(&self) -> Vec<Scalar> {
        self.coefficients
            .iter()
            .filter(|c| !c.is_zero())
            .cloned()
            .collect()
    }

    /// Number of canonical forms the search visits, saturating.
    pub fn size(&self) -> u128 {
        let (lo, hi) = self.b_bounds();
        let k = self.nonzero().len() as u128;
        let mut total: u128 = 0;
        for b in (lo..=hi).filter(|&b| self.semigroup.has(b)) {
            let n = self.admissible_positions(b).len() as u32;
            let per_b = match self.positions {
                PositionPolicy::MaxNonzero(m) => {
                    let mut acc: u128 = 0;
                    let mut binom: u128 = 1;
                    for j in 0..=(m as u32).min(n) {
                        if j > 0 {
                            binom = binom.saturating_mul((n - j + 1) as u128) / j as u128;
                        }
                        acc = acc.saturating_add(binom.saturating_mul(k.saturating_pow(j)));
                    }
                    acc
                }
                _ => (k + 1).saturating_pow(n),
            };
            total = total.saturating_add(per_b);
        }
        total
    }

    /// Unit coefficient vectors for valuation `b`, in lexicographic order of
    /// coefficient indices.
    fn units(&self, b: usize) -> Vec<Vec<(usize, Scalar)>> {
        fn walk(
            positions: &[usize],
            nonzero: &[Scalar],
            budget: usize,
            prefix: &mut Vec<(usize, Scalar)>,
            out: &mut Vec<Vec<(usize, Scalar)>>,
        ) {
            let Some((&p, rest)) = positions.split_first() else {
                out.push(prefix.clone());
                return;
            };
            walk(rest, nonzero, budget, prefix, out);
            if budget == 0 {
                return;
            }
            for c in nonzero {
                prefix.push((p, c.clone()));
                walk(rest, nonzero, budget - 1, prefix, out);
                prefix.pop();
            }
        }
        let positions = self.admissible_positions(b);
        let budget = match self.positions {
            PositionPolicy::MaxNonzero(m) => m,
            _ => positions.len(),
        };
        let mut out = Vec::new();
        walk(
            &positions,
            &self.nonzero(),
            budget,
            &mut Vec::new(),
            &mut out,
        );
        out
    }
}

/// One searched ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchRecord {
    pub b: usize,
    /// Nonzero unit coefficients `(i, u_i)`.
    pub coefficients: Vec<(usize, Scalar)>,
    pub goto: u32,
    /// The generator in element syntax.
    pub ideal: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub goto: u32,
    pub ideal: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchResult {
    pub schema: u32,
    pub generators: Vec<usize>,
    pub field: Field,
    pub coefficients: Vec<Scalar>,
    pub b_range: (usize, usize),
    pub positions: PositionPolicy,
    /// Number of ideals enumerated; a watermark when incomplete.
    pub count: u64,
    pub complete: bool,
    pub min: Option<u32>,
    pub max: Option<u32>,
    /// First ideal, in enumeration order, attaining each observed value.
    pub witnesses: Vec<Witness>,
    pub records: Vec<SearchRecord>,
}

/// Computes `g(Q)` for every canonical form allowed by `config`.
///
/// Results are exact for the chosen field and coefficient set and say
/// nothing about other coefficients.
pub fn search(config: &SearchConfig) -> Result<SearchResult> {
    config.validate()?;
    let size = config.size();
    if size > config.cap {
        return Err(Error::SearchSpaceTooLarge {
            count: size,
            cap: config.cap,
        });
    }
    let s = &config.semigroup;
    let (lo, hi) = config.b_bounds();
    let mut ideals: Vec<CanonicalIdeal> = Vec::new();
    'outer: for b in (lo..=hi).filter(|&b| s.has(b)) {
        for unit in config.units(b) {
            if config.stop_after.is_some_and(|n| ideals.len() as u64 >= n) {
                break 'outer;
            }
            ideals.push(CanonicalIdeal::with_unit(s.clone(), config.field, b, unit)?);
        }
    }
    let complete = ideals.len() as u128 == size;
    let values = ordered_map(&ideals, config.threads, goto_number);
    let mut records = Vec::with_capacity(ideals.len());
    let mut witnesses: BTreeMap<u32, String> = BTreeMap::new();
    for (q, g) in ideals.iter().zip(values) {
        let g = g?;
        let ideal = q.to_string();
        witnesses.entry(g).or_insert_with(|| ideal.clone());
        records.push(SearchRecord {
            b: q.b(),
            coefficients: q
                .unit_coeffs()
                .iter()
                .map(|(i, c)| (*i, c.clone()))
                .collect(),
            goto: g,
            ideal,
        });
    }
    Ok(SearchResult {
        schema: 1,
        generators: s.generators().to_vec(),
        field: config.field,
        coefficients: config.coefficients.clone(),
        b_range: (lo, hi),
        positions: config.positions.clone(),
        count: records.len() as u64,
        complete,
        min: witnesses.keys().next().copied(),
        max: witnesses.keys().next_back().copied(),
        witnesses: witnesses
            .into_iter()
            .map(|(goto, ideal)| Witness { goto, ideal })
            .collect(),
        records,
    })
}

impl SearchResult {
    /// Tab-separated records: `b`, coefficients as `i:u_i` joined by commas,
    /// `g`, generator.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("b\tcoefficients\tgoto\tideal\n");
        for r in &self.records {
            let coeffs: Vec<String> = r
                .coefficients
                .iter()
                .map(|(i, c)| format!("{i}:{c}"))
                .collect();
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\n",
                r.b,
                coeffs.join(","),
                r.goto,
                r.ideal
            ));
        }
        out
    }
}

/// `g(x^e)` for every `e ∈ G ∩ [1, e_max]`, ascending.
pub fn monomial_table(
    s: &NumericalSemigroup,
    e_max: usize,
    threads: Option<usize>,
) -> Result<Vec<(usize, u32)>> {
    if e_max < s.multiplicity() {
        return Err(Error::InvalidArgument(format!(
            "table bound {e_max} is below a_1 = {}",
            s.multiplicity()
        )));
    }
    let exps: Vec<usize> = (1..=e_max).filter(|&e| s.has(e)).collect();
    let values = ordered_map(&exps, threads, |&e| goto_monomial(s, e));
    exps.into_iter()
        .zip(values)
        .map(|(e, g)| Ok((e, g?)))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProductEntry {
    pub left: String,
    pub right: String,
    pub product: String,
    pub left_goto: u32,
    pub right_goto: u32,
    pub product_goto: u32,
    pub holds: bool,
    pub strict: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProductReport {
    pub entries: Vec<ProductEntry>,
    pub violations: usize,
    pub strict: usize,
}

/// The canonical form of `Q_1 Q_2`.
pub fn product_ideal(q1: &CanonicalIdeal, q2: &CanonicalIdeal) -> Result<CanonicalIdeal> {
    let t = (q1.b() + q2.b()) as i64 + q1.semigroup().frobenius() + 1;
    let t = t as usize;
    canonicalize(&q1.generator(t).multiply(&q2.generator(t))?)
}

/// Checks `g(Q_1 Q_2) <= min(g(Q_1), g(Q_2))` on each pair.
pub fn verify_product_inequality(
    pairs: &[(CanonicalIdeal, CanonicalIdeal)],
    threads: Option<usize>,
) -> Result<ProductReport> {
    let entries = ordered_map(pairs, threads, |(q1, q2)| -> Result<ProductEntry> {
        let product = product_ideal(q1, q2)?;
        let (g1, g2, g12) = (goto_number(q1)?, goto_number(q2)?, goto_number(&product)?);
        Ok(ProductEntry {
            left: q1.to_string(),
            right: q2.to_string(),
            product: product.to_string(),
            left_goto: g1,
            right_goto: g2,
            product_goto: g12,
            holds: g12 <= g1.min(g2),
            strict: g12 < g1.min(g2),
        })
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    Ok(ProductReport {
        violations: entries.iter().filter(|e| !e.holds).count(),
        strict: entries.iter().filter(|e| e.strict).count(),
        entries,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LowerBoundEntry {
    pub ideal: String,
    pub goto: u32,
    pub monomial_goto: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LowerBoundReport {
    pub checked: usize,
    pub violations: Vec<LowerBoundEntry>,
    pub strict: Vec<LowerBoundEntry>,
}

/// Checks `g(Q) >= g(x^b)` for every record of a search.
pub fn verify_monomial_lower_bound(
    s: &NumericalSemigroup,
    result: &SearchResult,
) -> Result<LowerBoundReport> {
    let mut monomial: BTreeMap<usize, u32> = BTreeMap::new();
    let mut report = LowerBoundReport {
        checked: 0,
        violations: Vec::new(),
        strict: Vec::new(),
    };
    for r in &result.records {
        let gm = match monomial.get(&r.b) {
            Some(&g) => g,
            None => {
                let g = goto_monomial(s, r.b)?;
                monomial.insert(r.b, g);
                g
            }
        };
        let entry = LowerBoundEntry {
            ideal: r.ideal.clone(),
            goto: r.goto,
            monomial_goto: gm,
        };
        report.checked += 1;
        if r.goto < gm {
            report.violations.push(entry);
        } else if r.goto > gm {
            report.strict.push(entry);
        }
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FieldMismatch {
    pub b: usize,
    pub positions: Vec<usize>,
    pub left: u32,
    pub right: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FieldComparison {
    pub left: Field,
    pub right: Field,
    pub compared: usize,
    pub mismatches: Vec<FieldMismatch>,
}

/// Runs the `{0, 1}` search over two fields and compares `g` ideal by ideal.
pub fn compare_fields(config: &SearchConfig, left: Field, right: Field) -> Result<FieldComparison> {
    let a = search(&config.clone().with_field(left, &[0, 1]))?;
    let b = search(&config.clone().with_field(right, &[0, 1]))?;
    debug_assert_eq!(a.records.len(), b.records.len());
    let mismatches = a
        .records
        .iter()
        .zip(&b.records)
        .filter(|(x, y)| x.goto != y.goto)
        .map(|(x, y)| FieldMismatch {
            b: x.b,
            positions: x.coefficients.iter().map(|(i, _)| *i).collect(),
            left: x.goto,
            right: y.goto,
        })
        .collect();
    Ok(FieldComparison {
        left,
        right,
        compared: a.records.len(),
        mismatches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[i64]) -> Arc<NumericalSemigroup> {
        Arc::new(NumericalSemigroup::new(gens).unwrap())
    }

    #[test]
    fn monomial_tables() {
        let t: BTreeMap<usize, u32> = monomial_table(&sg(&[7, 11, 20]), 45, Some(1))
            .unwrap()
            .into_iter()
            .collect();
        assert_eq!((t[&7], t[&11], t[&20], t[&45]), (4, 4, 5, 3));
        let t: BTreeMap<usize, u32> = monomial_table(&sg(&[3, 5]), 10, None)
            .unwrap()
            .into_iter()
            .collect();
        assert_eq!((t[&5], t[&10]), (3, 2));
        assert_eq!(
            monomial_table(&sg(&[2, 3]), 4, None).unwrap(),
            vec![(2, 1), (3, 1), (4, 1)]
        );
        assert!(monomial_table(&sg(&[2, 3]), 1, None).is_err());
    }

    #[test]
    fn search_size_matches_enumeration() {
        let mut c = SearchConfig::new(sg(&[4, 7, 9]));
        let r = search(&c).unwrap();
        assert_eq!(r.count as u128, c.size());
        assert!(r.complete);
        c.positions = PositionPolicy::MaxNonzero(1);
        c.coefficients = vec![
            Field::Rational.zero(),
            Field::Rational.one(),
            Field::Rational.from_i64(2),
        ];
        let r = search(&c).unwrap();
        assert_eq!(r.count as u128, c.size());
        c.stop_after = Some(5);
        let r = search(&c).unwrap();
        assert_eq!((r.count, r.complete), (5, false));
    }

    #[test]
    fn search_finds_known_witnesses() {
        let r = search(&SearchConfig::new(sg(&[4, 6, 7]))).unwrap();
        assert_eq!((r.min, r.max), (Some(2), Some(2)));
        let r = search(&SearchConfig::new(sg(&[4, 7, 9]))).unwrap();
        assert!(r
            .records
            .iter()
            .any(|x| x.ideal == "x^7 + x^8 + x^9" && x.goto == 3));
        let mut c = SearchConfig::new(sg(&[5, 11]));
        c.b_range = Some((40, 40));
        c.positions = PositionPolicy::MaxNonzero(1);
        let r = search(&c).unwrap();
        assert!(r
            .records
            .iter()
            .any(|x| x.ideal == "x^40 + x^44" && x.goto == 5));
        let lb = verify_monomial_lower_bound(&sg(&[5, 11]), &r).unwrap();
        assert!(lb.violations.is_empty());
        assert!(lb.strict.iter().any(|e| e.ideal == "x^40 + x^44"));
    }

    #[test]
    fn invalid_configs() {
        let mut c = SearchConfig::new(sg(&[3, 5]));
        c.coefficients = vec![Field::Rational.one()];
        assert!(search(&c).is_err());
        let mut c = SearchConfig::new(sg(&[5, 11]));
        c.b_range = Some((40, 40));
        assert!(matches!(search(&c), Err(Error::SearchSpaceTooLarge { .. })));
    }

    #[test]
    fn products() {
        let s = sg(&[3, 5]);
        let x5 = CanonicalIdeal::monomial(s.clone(), Field::Rational, 5).unwrap();
        let r = verify_product_inequality(&[(x5.clone(), x5)], Some(1)).unwrap();
        assert_eq!(r.entries[0].product, "x^10");
        assert_eq!(r.entries[0].product_goto, 2);
        assert_eq!((r.violations, r.strict), (0, 1));
    }
}
