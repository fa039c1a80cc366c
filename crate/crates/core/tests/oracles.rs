//! The library against brute-force oracles that share none of its code:
//! coin-change membership, dense modular linear algebra and point-by-point
//! monomial colons.

use std::collections::BTreeSet;
use std::sync::Arc;

use goto_core::family::small_family;
use goto_core::regular_local::{pure_power_goto, pure_power_integral, MonomialIdeal};
use goto_core::semigroup::frobenius_two_generated;
use goto_core::{goto_monomial, goto_number, CanonicalIdeal, Field, NumericalSemigroup};

// ---------------------------------------------------------------- semigroups

fn members(gens: &[usize], limit: usize) -> Vec<bool> {
    let mut m = vec![false; limit + 1];
    m[0] = true;
    for e in 1..=limit {
        m[e] = gens.iter().any(|&a| a <= e && m[e - a]);
    }
    m
}

fn brute_frobenius(gens: &[usize]) -> i64 {
    let limit = gens[0] * gens[gens.len() - 1] + gens[0];
    let m = members(gens, limit);
    (0..=limit).rev().find(|&e| !m[e]).map_or(-1, |e| e as i64)
}

fn longest_factorization(gens: &[usize], limit: usize) -> Vec<Option<u32>> {
    let mut l: Vec<Option<u32>> = vec![None; limit + 1];
    l[0] = Some(0);
    for e in 1..=limit {
        l[e] = gens
            .iter()
            .filter(|&&a| a <= e)
            .filter_map(|&a| l[e - a].map(|v| v + 1))
            .max();
    }
    l
}

/// Sums of exactly `g` generators, at most `cap`.
fn exact_sums(gens: &[usize], g: u32, cap: usize) -> BTreeSet<usize> {
    let mut level = BTreeSet::from([0]);
    for _ in 0..g {
        level = level
            .iter()
            .flat_map(|&s| gens.iter().map(move |&a| s + a))
            .filter(|&s| s <= cap)
            .collect();
    }
    level
}

#[test]
fn frobenius_of_pairs_matches_coin_change() {
    for a1 in 2..=30usize {
        for a2 in a1 + 1..=30 {
            if num_gcd(a1, a2) != 1 {
                continue;
            }
            let brute = brute_frobenius(&[a1, a2]);
            assert_eq!(
                frobenius_two_generated(a1 as u64, a2 as u64).unwrap(),
                brute
            );
            let s = NumericalSemigroup::new(&[a1 as i64, a2 as i64]).unwrap();
            assert_eq!(s.frobenius(), brute, "<{a1},{a2}>");
        }
    }
}

fn num_gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        num_gcd(b, a % b)
    }
}

#[test]
fn membership_frobenius_and_order_match_brute_force() {
    for s in small_family(14) {
        let gens = s.generators().to_vec();
        let f = s.frobenius();
        assert_eq!(f, brute_frobenius(&gens), "{s}");
        let limit = (f + 3 * gens[0] as i64) as usize;
        let m = members(&gens, limit);
        let orders = longest_factorization(&gens, limit);
        for e in 0..=limit {
            assert_eq!(s.has(e), m[e], "{s} at {e}");
            if m[e] {
                assert_eq!(
                    Some(s.madic_order(e).unwrap()),
                    orders[e],
                    "{s} order at {e}"
                );
            }
        }
        for t in 1..=4 {
            let cap = limit;
            let ours: BTreeSet<usize> = s.generator_sums(t, cap).into_iter().collect();
            assert_eq!(ours, exact_sums(&gens, t, cap), "{s} S_{t}");
        }
    }
}

// ---------------------------------------------------------- monomial ideals

/// `g(x^b)` from the definition, with `Q:m^g` computed on monomials.
fn brute_monomial_goto(gens: &[usize], b: usize) -> u32 {
    let f = brute_frobenius(gens);
    let top = (b as i64 + f + 1) as usize;
    let m = members(gens, top + gens[gens.len() - 1] * 4 + 64);
    let in_g = |e: usize| e < m.len() && m[e] || e as i64 > f;
    for g in 1.. {
        let sums = exact_sums(gens, g, top);
        let escapes = (0..b)
            .filter(|&c| in_g(c))
            .any(|c| sums.iter().all(|&s| c + s >= b && in_g(c + s - b)));
        if escapes {
            return g - 1;
        }
    }
    unreachable!()
}

#[test]
fn monomial_goto_matches_set_oracle() {
    for s in small_family(13) {
        let gens = s.generators().to_vec();
        let f = s.frobenius() as usize;
        for b in (1..=f + 2 * gens[0]).filter(|&b| s.has(b)) {
            assert_eq!(
                goto_monomial(&s, b).unwrap(),
                brute_monomial_goto(&gens, b),
                "{s} x^{b}"
            );
        }
    }
}

#[test]
fn linear_engine_matches_set_oracle_on_monomials() {
    for s in small_family(9) {
        let gens = s.generators().to_vec();
        let f = s.frobenius() as usize;
        let s = Arc::new(s);
        for b in (1..=f + 2 * gens[0]).filter(|&b| s.has(b)) {
            let q = CanonicalIdeal::monomial(s.clone(), Field::Rational, b).unwrap();
            assert_eq!(
                goto_number(&q).unwrap(),
                brute_monomial_goto(&gens, b),
                "{s} x^{b}"
            );
        }
    }
}

// --------------------------------------------------------- general ideals

fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut base, mut exp, mut acc) = (a % p, p - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Kernel basis of a dense matrix over `F_p`.
fn kernel_mod(rows: &[Vec<u64>], n: usize, p: u64) -> Vec<Vec<u64>> {
    let mut a: Vec<Vec<u64>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(i) = (r..a.len()).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, i);
        let inv = inv_mod(a[r][c], p);
        for x in a[r].iter_mut() {
            *x = *x * inv % p;
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let factor = row[c];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = (*x + p - factor * y % p) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (0..n)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![0; n];
            v[free] = 1;
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - a[row][free]) % p;
            }
            v
        })
        .collect()
}

/// `g(Q)` for `Q = (x^b + Σ u_i x^{b+i})` over `F_p`, from dense linear
/// algebra on `R / x^{b+f+1} R`.
fn brute_goto(gens: &[usize], b: usize, unit: &[(usize, u64)], p: u64) -> u32 {
    let f = brute_frobenius(gens);
    let t = (b as i64 + f + 1) as usize;
    let m = members(gens, t);
    let cols: Vec<usize> = (0..t).filter(|&c| m[c]).collect();
    let index = |e: usize| cols.iter().position(|&c| c == e);
    let mut q_rows = Vec::new();
    for &s in &cols {
        let mut row = vec![0; cols.len()];
        for &(e, c) in [(0usize, 1u64)].iter().chain(unit) {
            if let Some(k) = index(b + e + s) {
                row[k] = (row[k] + c) % p;
            }
        }
        q_rows.push(row);
    }
    // Functionals vanishing on Q.
    let annihilator = kernel_mod(&q_rows, cols.len(), p);
    for g in 1.. {
        let mut eqs = Vec::new();
        for s in exact_sums(gens, g, t) {
            for phi in &annihilator {
                let row: Vec<u64> = cols
                    .iter()
                    .map(|&c| index(c + s).map_or(0, |k| phi[k]))
                    .collect();
                eqs.push(row);
            }
        }
        let colon = kernel_mod(&eqs, cols.len(), p);
        let escapes = colon
            .iter()
            .any(|v| cols.iter().zip(v).any(|(&c, &x)| c < b && x != 0));
        if escapes {
            return g - 1;
        }
    }
    unreachable!()
}

/// Deterministic spread of `{0,1}` patterns over `positions`.
fn patterns(positions: &[usize], count: usize) -> Vec<Vec<usize>> {
    let n = positions.len().min(20);
    let total = 1u64 << n;
    let mut out: Vec<u64> = (0..count as u64)
        .map(|k| k.wrapping_mul(2_654_435_761) % total)
        .collect();
    out.push(total - 1);
    out.sort_unstable();
    out.dedup();
    out.into_iter()
        .map(|mask| {
            (0..n)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| positions[i])
                .collect()
        })
        .collect()
}

#[test]
fn linear_engine_matches_dense_oracle() {
    let primes = [
        (Field::Prime(7), 7u64),
        (Field::Prime(2), 2),
        (Field::Rational, 1_000_003),
    ];
    for s in small_family(8) {
        let gens = s.generators().to_vec();
        let f = s.frobenius() as usize;
        let s = Arc::new(s);
        for b in (gens[0]..=f + gens[0] + 1).filter(|&b| s.has(b)) {
            let positions: Vec<usize> = (1..=f).filter(|&i| s.has(b + i)).collect();
            for pattern in patterns(&positions, 6) {
                for &(field, p) in &primes {
                    let coeffs = pattern.iter().map(|&i| (i, field.one()));
                    let q = CanonicalIdeal::with_unit(s.clone(), field, b, coeffs).unwrap();
                    let unit: Vec<(usize, u64)> = pattern.iter().map(|&i| (i, 1)).collect();
                    assert_eq!(
                        goto_number(&q).unwrap(),
                        brute_goto(&gens, b, &unit, p),
                        "{s} {q} over {field}"
                    );
                }
            }
        }
    }
}

#[test]
fn signed_coefficients_match_dense_oracle() {
    let p = 1_000_003u64;
    for gens in [[3usize, 5], [4, 7], [5, 7]] {
        let s = Arc::new(NumericalSemigroup::new(&[gens[0] as i64, gens[1] as i64]).unwrap());
        let f = s.frobenius() as usize;
        for b in (gens[0]..=f + 1).filter(|&b| s.has(b)) {
            let positions: Vec<usize> = (1..=f).filter(|&i| s.has(b + i)).collect();
            for (k, pattern) in patterns(&positions, 5).into_iter().enumerate() {
                let values: Vec<i64> = pattern
                    .iter()
                    .enumerate()
                    .map(|(j, _)| if (j + k) % 2 == 0 { -1 } else { 2 })
                    .collect();
                let coeffs = pattern
                    .iter()
                    .zip(&values)
                    .map(|(&i, &c)| (i, Field::Rational.from_i64(c)));
                let q = CanonicalIdeal::with_unit(s.clone(), Field::Rational, b, coeffs).unwrap();
                let unit: Vec<(usize, u64)> = pattern
                    .iter()
                    .zip(&values)
                    .map(|(&i, &c)| (i, c.rem_euclid(p as i64) as u64))
                    .collect();
                assert_eq!(
                    goto_number(&q).unwrap(),
                    brute_goto(&gens, b, &unit, p),
                    "{s} {q}"
                );
            }
        }
    }
}

// ------------------------------------------------------ regular local rings

fn box_points(dim: usize, side: u32) -> Vec<Vec<u32>> {
    let mut pts = vec![vec![]];
    for _ in 0..dim {
        pts = pts
            .into_iter()
            .flat_map(|p| {
                (0..=side).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    pts
}

/// Exponent vectors of total degree `g`.
fn degree_vectors(dim: usize, g: u32) -> Vec<Vec<u32>> {
    box_points(dim, g)
        .into_iter()
        .filter(|v| v.iter().sum::<u32>() == g)
        .collect()
}

fn in_ideal(gens: &[Vec<u32>], p: &[u32]) -> bool {
    gens.iter().any(|g| g.iter().zip(p).all(|(a, b)| a <= b))
}

fn in_colon_power(gens: &[Vec<u32>], p: &[u32], g: u32) -> bool {
    degree_vectors(p.len(), g).iter().all(|v| {
        let shifted: Vec<u32> = p.iter().zip(v).map(|(a, b)| a + b).collect();
        in_ideal(gens, &shifted)
    })
}

fn sample_ideals() -> Vec<Vec<Vec<u32>>> {
    let mut out = Vec::new();
    for k in 0..40u32 {
        let dim = 2 + (k % 2) as usize;
        let count = 1 + (k % 4) as usize;
        let gens: Vec<Vec<u32>> = (0..count)
            .map(|j| {
                (0..dim)
                    .map(|i| (k * 7 + j as u32 * 5 + i as u32 * 3) % 5)
                    .collect()
            })
            .collect();
        out.push(gens);
    }
    out.push(vec![vec![2, 0], vec![0, 3]]);
    out.push(vec![vec![2, 0, 0], vec![0, 3, 0], vec![0, 0, 3]]);
    out
}

#[test]
fn monomial_colons_match_pointwise_oracle() {
    for gens in sample_ideals() {
        let dim = gens[0].len();
        let ideal = MonomialIdeal::new(dim, gens.clone()).unwrap();
        for g in 0..=3 {
            let colon = ideal.colon_power_maximal(g);
            for p in box_points(dim, 6) {
                assert_eq!(
                    colon.contains(&p),
                    in_colon_power(&gens, &p, g),
                    "{gens:?} : m^{g} at {p:?}"
                );
            }
        }
        let by_box = ideal.colon_maximal();
        assert_eq!(by_box, ideal.colon_maximal_by_intersection(), "{gens:?}");
    }
}

fn brute_integral(exponents: &[u32], p: &[u32]) -> bool {
    let l: u64 = exponents.iter().map(|&n| n as u64).product();
    p.iter()
        .zip(exponents)
        .map(|(&pi, &n)| pi as u64 * (l / n as u64))
        .sum::<u64>()
        >= l
}

#[test]
fn pure_power_goto_matches_pointwise_oracle() {
    let mut cases = Vec::new();
    for a in 2..=5u32 {
        for b in a..=5 {
            cases.push(vec![a, b]);
            for c in b..=4 {
                cases.push(vec![a, b, c]);
            }
        }
    }
    for exps in cases {
        let gens: Vec<Vec<u32>> = (0..exps.len())
            .map(|i| {
                (0..exps.len())
                    .map(|j| if i == j { exps[i] } else { 0 })
                    .collect()
            })
            .collect();
        let side = *exps.iter().max().unwrap();
        let pts = box_points(exps.len(), side);
        for p in &pts {
            assert_eq!(
                pure_power_integral(&exps, p),
                brute_integral(&exps, p),
                "{exps:?} {p:?}"
            );
        }
        let mut brute = 0;
        for g in 1.. {
            if pts
                .iter()
                .any(|p| in_colon_power(&gens, p, g) && !brute_integral(&exps, p))
            {
                brute = g - 1;
                break;
            }
        }
        assert_eq!(pure_power_goto(&exps).unwrap(), brute, "{exps:?}");
    }
}
