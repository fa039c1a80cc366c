//! Known values for the named example semigroups, recomputed from scratch.

use std::sync::Arc;

use serde::Serialize;

use crate::bounds::{
    bound_first_generator, bound_global, bound_monomial_generator, closed_form_two_generated,
    monomial_sup_bound, rho, stable_goto,
};
use crate::colon::{
    colon_power, conductor_dual_goto, contained_in_power_sum, dual_goto, goto_monomial, goto_number,
};
use crate::error::Result;
use crate::explorer::{
    monomial_table, search, verify_monomial_lower_bound, verify_product_inequality, PositionPolicy,
    SearchConfig,
};
use crate::expr::parse_ideal;
use crate::regular_local::{goto_ratios, pure_power_goto, pure_power_integral, MonomialIdeal};
use crate::ring::{integral_closure_contains, member_of_principal, CanonicalIdeal, RingElement};
use crate::scalar::Field;
use crate::semigroup::{frobenius_two_generated, NumericalSemigroup};
use crate::subspace::TruncatedSubspace;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GoldenCheck {
    pub label: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

impl GoldenCheck {
    pub fn line(&self) -> String {
        let status = if self.pass { "PASS" } else { "FAIL" };
        if self.pass {
            format!("{status} {}: {}", self.label, self.actual)
        } else {
            format!(
                "{status} {}: expected {}, got {}",
                self.label, self.expected, self.actual
            )
        }
    }
}

fn sg(gens: &[i64]) -> Result<Arc<NumericalSemigroup>> {
    Ok(Arc::new(NumericalSemigroup::new(gens)?))
}

fn ideal(gens: &[i64], text: &str) -> Result<CanonicalIdeal> {
    parse_ideal(&sg(gens)?, Field::Rational, text)
}

fn goto_of(gens: &[i64], text: &str) -> Result<String> {
    Ok(goto_number(&ideal(gens, text)?)?.to_string())
}

fn monomials(gens: &[i64], exps: &[usize]) -> Result<String> {
    let s = sg(gens)?;
    let values = exps
        .iter()
        .map(|&e| goto_monomial(&s, e).map(|g| g.to_string()))
        .collect::<Result<Vec<_>>>()?;
    Ok(values.join(","))
}

type Compute = Box<dyn Fn() -> Result<String>>;

fn corpus() -> Vec<(&'static str, &'static str, Compute)> {
    vec![
        // Semigroup invariants.
        (
            "<4,7,9> frobenius",
            "10",
            Box::new(|| Ok(sg(&[4, 7, 9])?.frobenius().to_string())),
        ),
        (
            "[4,6,7,10] minimal generators and frobenius",
            "[4, 6, 7] f=9",
            Box::new(|| {
                let s = sg(&[4, 6, 7, 10])?;
                Ok(format!("{:?} f={}", s.generators(), s.frobenius()))
            }),
        ),
        (
            "<4,7,9> contains 10",
            "false",
            Box::new(|| Ok(sg(&[4, 7, 9])?.contains(10).to_string())),
        ),
        (
            "frobenius of <5,11>",
            "39",
            Box::new(|| Ok(frobenius_two_generated(5, 11)?.to_string())),
        ),
        (
            "frobenius of <9,19>",
            "143",
            Box::new(|| Ok(frobenius_two_generated(9, 19)?.to_string())),
        ),
        (
            "frobenius of <9,19,21>, <5,6,13>, <4,6,7>, <7,9,20>",
            "71,14,9,33",
            Box::new(|| {
                Ok(format!(
                    "{},{},{},{}",
                    sg(&[9, 19, 21])?.frobenius(),
                    sg(&[5, 6, 13])?.frobenius(),
                    sg(&[4, 6, 7])?.frobenius(),
                    sg(&[7, 9, 20])?.frobenius()
                ))
            }),
        ),
        (
            "<9,19,21> largest element below 21 and below 19",
            "19,18",
            Box::new(|| {
                let s = sg(&[9, 19, 21])?;
                Ok(format!("{},{}", s.largest_below(21), s.largest_below(19)))
            }),
        ),
        (
            "<7,9,20> m-adic orders of x^40 and x^38",
            "2,3",
            Box::new(|| {
                let s = sg(&[7, 9, 20])?;
                Ok(format!("{},{}", s.madic_order(40)?, s.madic_order(38)?))
            }),
        ),
        (
            "<9,19> m^8 inside some x^alpha R, alpha in 1..9",
            "false",
            Box::new(|| {
                let s = sg(&[9, 19])?;
                Ok((1..=9)
                    .any(|a| s.power_contained_in_shift(8, a))
                    .to_string())
            }),
        ),
        (
            "stable value via t and t' for <7,9,20> and <9,19>",
            "3,3,8,8",
            Box::new(|| {
                let a = sg(&[7, 9, 20])?;
                let b = sg(&[9, 19])?;
                Ok(format!(
                    "{},{},{},{}",
                    a.stable_goto_via_t(),
                    a.stable_goto_via_t_prime(),
                    b.stable_goto_via_t(),
                    b.stable_goto_via_t_prime()
                ))
            }),
        ),
        (
            "<7,9,20> conductor order",
            "2",
            Box::new(|| Ok(sg(&[7, 9, 20])?.conductor_order().to_string())),
        ),
        (
            "<4,5,11> symmetric",
            "false",
            Box::new(|| Ok(sg(&[4, 5, 11])?.is_symmetric().to_string())),
        ),
        // Canonical forms and membership.
        (
            "<5,11> canonical form of x^40 + x^44",
            "b=40 u={4:1}",
            Box::new(|| {
                let q = ideal(&[5, 11], "x^40 + x^44")?;
                Ok(format!("b={} u={}", q.b(), units(&q)))
            }),
        ),
        (
            "<4,7,9> canonical form of x^7 + x^8 + x^9",
            "b=7 u={1:1,2:1}",
            Box::new(|| {
                let q = ideal(&[4, 7, 9], "x^7 + x^8 + x^9")?;
                Ok(format!("b={} u={}", q.b(), units(&q)))
            }),
        ),
        (
            "<3,5> x^9 in x^10 R, x^9 integral over x^10 R",
            "false,false",
            Box::new(|| {
                let s = sg(&[3, 5])?;
                let q = ideal(&[3, 5], "x^10")?;
                let w = RingElement::monomial(s, Field::Rational, 9, q.default_truncation())?;
                Ok(format!(
                    "{},{}",
                    member_of_principal(&w, &q)?,
                    integral_closure_contains(&q, &w)
                ))
            }),
        ),
        // Colon ideals and Goto numbers.
        (
            "<3,5> x^10 R : m^3 contains x^9, least valuation",
            "true,9",
            Box::new(|| {
                let v = colon_power(&ideal(&[3, 5], "x^10")?, 3);
                let x9 = vec![(9, Field::Rational.one())];
                Ok(format!(
                    "{},{}",
                    v.contains(&x9),
                    fmt_opt(v.min_valuation())
                ))
            }),
        ),
        (
            "<4,7,9> (x^7 + x^8 + x^9) : m^3 least valuation",
            "7",
            Box::new(|| {
                Ok(fmt_opt(
                    colon_power(&ideal(&[4, 7, 9], "x^7+x^8+x^9")?, 3).min_valuation(),
                ))
            }),
        ),
        (
            "<3,5> g(x^5), g(x^10)",
            "3,2",
            Box::new(|| {
                Ok(format!(
                    "{},{}",
                    goto_of(&[3, 5], "x^5")?,
                    goto_of(&[3, 5], "x^10")?
                ))
            }),
        ),
        (
            "<5,11> g(x^40), g(x^40 + x^44)",
            "4,5",
            Box::new(|| {
                Ok(format!(
                    "{},{}",
                    goto_of(&[5, 11], "x^40")?,
                    goto_of(&[5, 11], "x^40+x^44")?
                ))
            }),
        ),
        (
            "<4,7,9> g(x^7 + x^8 + x^9)",
            "3",
            Box::new(|| goto_of(&[4, 7, 9], "x^7+x^8+x^9")),
        ),
        (
            "<7,11,20> g(x^7), g(x^11), g(x^20), g(x^45)",
            "4,4,5,3",
            Box::new(|| monomials(&[7, 11, 20], &[7, 11, 20, 45])),
        ),
        (
            "<11,14,21> g(x^11), g(x^14), g(x^21), g(x^85)",
            "6,6,7,5",
            Box::new(|| monomials(&[11, 14, 21], &[11, 14, 21, 85])),
        ),
        (
            "<9,19,21> g(x^9), g(x^19), g(x^21)",
            "4,8,6",
            Box::new(|| monomials(&[9, 19, 21], &[9, 19, 21])),
        ),
        (
            "<5,6,13> g(x^5)",
            "2",
            Box::new(|| monomials(&[5, 6, 13], &[5])),
        ),
        (
            "<9,19> g(x^152)",
            "9",
            Box::new(|| monomials(&[9, 19], &[152])),
        ),
        (
            "<4,5,11> conductor inside m^1 + x^12 R, inside m^2 + x^12 R",
            "true,false",
            Box::new(|| {
                let s = sg(&[4, 5, 11])?;
                let q = ideal(&[4, 5, 11], "x^12")?;
                let c = TruncatedSubspace::monomials(
                    s.clone(),
                    Field::Rational,
                    2 * 4 + 8 + 12,
                    s.conductor_generators(),
                );
                Ok(format!(
                    "{},{}",
                    contained_in_power_sum(&c, 1, &q)?,
                    contained_in_power_sum(&c, 2, &q)?
                ))
            }),
        ),
        (
            "<3,5> and <5,11> dual formula for x^5, x^40 + x^44, x^40",
            "3,5,4",
            Box::new(|| {
                Ok(format!(
                    "{},{},{}",
                    dual_goto(&ideal(&[3, 5], "x^5")?)?,
                    dual_goto(&ideal(&[5, 11], "x^40+x^44")?)?,
                    dual_goto(&ideal(&[5, 11], "x^40")?)?
                ))
            }),
        ),
        (
            "<4,5,11> conductor formula and g for x^12",
            "1,2",
            Box::new(|| {
                let q = ideal(&[4, 5, 11], "x^12")?;
                Ok(format!("{},{}", conductor_dual_goto(&q)?, goto_number(&q)?))
            }),
        ),
        (
            "<5,11> conductor formula for x^40",
            "4",
            Box::new(|| Ok(conductor_dual_goto(&ideal(&[5, 11], "x^40")?)?.to_string())),
        ),
        // Bounds.
        (
            "<4,6,7> global bound",
            "3",
            Box::new(|| Ok(bound_global(&*sg(&[4, 6, 7])?)?.to_string())),
        ),
        (
            "<5,11> global bound, g(x^11)",
            "8,8",
            Box::new(|| {
                Ok(format!(
                    "{},{}",
                    bound_global(&*sg(&[5, 11])?)?,
                    monomials(&[5, 11], &[11])?
                ))
            }),
        ),
        (
            "<9,19,21> generator bounds j=2, j=3, first-generator bound",
            "8,8,4",
            Box::new(|| {
                let s = sg(&[9, 19, 21])?;
                Ok(format!(
                    "{},{},{}",
                    bound_monomial_generator(&s, 2)?,
                    bound_monomial_generator(&s, 3)?,
                    bound_first_generator(&s)?
                ))
            }),
        ),
        (
            "<5,6,13> first-generator bound",
            "3",
            Box::new(|| Ok(bound_first_generator(&*sg(&[5, 6, 13])?)?.to_string())),
        ),
        (
            "<3,5> two-generator closed form",
            "(2, 3)",
            Box::new(|| Ok(format!("{:?}", closed_form_two_generated(&*sg(&[3, 5])?)?))),
        ),
        (
            "stable values of <9,19>, <7,9,20>, <7,11,20>",
            "8,3,3",
            Box::new(|| {
                Ok(format!(
                    "{},{},{}",
                    stable_goto(&*sg(&[9, 19])?)?,
                    stable_goto(&*sg(&[7, 9, 20])?)?,
                    stable_goto(&*sg(&[7, 11, 20])?)?
                ))
            }),
        ),
        (
            "rho of <4,7,9>, <7,11,20>, <11,14,21>",
            "2,5,7",
            Box::new(|| {
                Ok(format!(
                    "{},{},{}",
                    rho(&*sg(&[4, 7, 9])?)?,
                    rho(&*sg(&[7, 11, 20])?)?,
                    rho(&*sg(&[11, 14, 21])?)?
                ))
            }),
        ),
        (
            "monomial bound maximum of <4,7,9>, <9,19,21>",
            "3,8",
            Box::new(|| {
                Ok(format!(
                    "{},{}",
                    monomial_sup_bound(&*sg(&[4, 7, 9])?)?,
                    monomial_sup_bound(&*sg(&[9, 19, 21])?)?
                ))
            }),
        ),
        // Tables and searches.
        (
            "<7,11,20> table to 45 at 7, 11, 20, 45; <3,5> table to 10 at 5, 10",
            "4,4,5,3;3,2",
            Box::new(|| {
                let t = monomial_table(&*sg(&[7, 11, 20])?, 45, None)?;
                let u = monomial_table(&*sg(&[3, 5])?, 10, None)?;
                let pick = |t: &[(usize, u32)], es: &[usize]| {
                    es.iter()
                        .map(|e| {
                            t.iter()
                                .find(|(x, _)| x == e)
                                .map_or("-".into(), |(_, g)| g.to_string())
                        })
                        .collect::<Vec<_>>()
                        .join(",")
                };
                Ok(format!(
                    "{};{}",
                    pick(&t, &[7, 11, 20, 45]),
                    pick(&u, &[5, 10])
                ))
            }),
        ),
        (
            "<4,6,7> {0,1} search min and max",
            "2,2",
            Box::new(|| {
                let r = search(&SearchConfig::new(sg(&[4, 6, 7])?))?;
                Ok(format!("{},{}", fmt_opt(r.min), fmt_opt(r.max)))
            }),
        ),
        (
            "<4,7,9> {0,1} search max and a witness",
            "3 x^7 + x^8 + x^9",
            Box::new(|| {
                let r = search(&SearchConfig::new(sg(&[4, 7, 9])?))?;
                let hit = r.records.iter().find(|x| x.ideal == "x^7 + x^8 + x^9");
                Ok(format!(
                    "{} {}",
                    fmt_opt(r.max),
                    hit.map_or("missing".into(), |h| h.ideal.clone())
                ))
            }),
        ),
        (
            "<5,11> b=40 search: g(x^40 + x^44) above g(x^40)",
            "5>4",
            Box::new(|| {
                let s = sg(&[5, 11])?;
                let mut c = SearchConfig::new(s.clone());
                c.b_range = Some((40, 40));
                c.positions = PositionPolicy::MaxNonzero(1);
                let r = search(&c)?;
                let lb = verify_monomial_lower_bound(&s, &r)?;
                let hit = lb.strict.iter().find(|e| e.ideal == "x^40 + x^44");
                Ok(hit.map_or("missing".into(), |e| {
                    format!("{}>{}", e.goto, e.monomial_goto)
                }))
            }),
        ),
        (
            "<4,7,9> g(x^7 + x^8 + x^9) against g(x^7)",
            "3>2",
            Box::new(|| {
                let s = sg(&[4, 7, 9])?;
                Ok(format!(
                    "{}>{}",
                    goto_of(&[4, 7, 9], "x^7+x^8+x^9")?,
                    goto_monomial(&s, 7)?
                ))
            }),
        ),
        (
            "<3,5> product x^5 * x^5: g against min",
            "2<3",
            Box::new(|| {
                let q = ideal(&[3, 5], "x^5")?;
                let r = verify_product_inequality(&[(q.clone(), q)], Some(1))?;
                let e = &r.entries[0];
                Ok(format!(
                    "{}<{}",
                    e.product_goto,
                    e.left_goto.min(e.right_goto)
                ))
            }),
        ),
        // Regular local rings.
        (
            "(x1^2, x2^3, x3^3) : m^3 equals (x1^2) + m^3",
            "true",
            Box::new(|| {
                let q = MonomialIdeal::pure_power(&[2, 3, 3])?;
                let target = MonomialIdeal::new(3, [vec![2, 0, 0]])?
                    .sum(&MonomialIdeal::maximal_power(3, 3)?)?;
                Ok((q.colon_power_maximal(3) == target).to_string())
            }),
        ),
        (
            "x2^2 integral over (x1^2, x2^3, x3^3)",
            "false",
            Box::new(|| Ok(pure_power_integral(&[2, 3, 3], &[0, 2, 0]).to_string())),
        ),
        (
            "g of (x1^2, x2^5, x3^5) and of (x1^3, x2^3)",
            "5,2",
            Box::new(|| {
                Ok(format!(
                    "{},{}",
                    pure_power_goto(&[2, 5, 5])?,
                    pure_power_goto(&[3, 3])?
                ))
            }),
        ),
        (
            "ratios of (x1^2, x2^5, x3^5)",
            "5/2,5/2,5/2",
            Box::new(|| {
                let r = goto_ratios(&[2, 5, 5])?;
                Ok([r.ratio_q, r.ratio_colon_m, r.ratio_colon_g]
                    .iter()
                    .map(|x| x.as_ref().map_or("-".into(), |x| x.to_string()))
                    .collect::<Vec<_>>()
                    .join(","))
            }),
        ),
    ]
}

fn units(q: &CanonicalIdeal) -> String {
    let parts: Vec<String> = q
        .unit_coeffs()
        .iter()
        .map(|(i, c)| format!("{i}:{c}"))
        .collect();
    format!("{{{}}}", parts.join(","))
}

fn fmt_opt<T: ToString>(x: Option<T>) -> String {
    x.map_or("none".into(), |v| v.to_string())
}

/// Recomputes every known value, in a fixed order.
pub fn run_corpus() -> Vec<GoldenCheck> {
    corpus()
        .into_iter()
        .map(|(label, expected, compute)| {
            let actual = match compute() {
                Ok(v) => v,
                Err(e) => format!("error: {e}"),
            };
            GoldenCheck {
                label: label.to_string(),
                expected: expected.to_string(),
                pass: actual == expected,
                actual,
            }
        })
        .collect()
}
