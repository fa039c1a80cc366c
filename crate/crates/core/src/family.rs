//! The semigroups used by the property suites.

use crate::semigroup::NumericalSemigroup;

/// Generator lists of the named example semigroups.
pub const NAMED: [&[i64]; 11] = [
    &[3, 5],
    &[5, 11],
    &[4, 7, 9],
    &[7, 11, 20],
    &[11, 14, 21],
    &[9, 19, 21],
    &[5, 6, 13],
    &[9, 19],
    &[4, 5, 11],
    &[4, 6, 7],
    &[7, 9, 20],
];

pub fn named() -> Vec<NumericalSemigroup> {
    NAMED
        .iter()
        .map(|g| NumericalSemigroup::new(g).expect("named semigroups are valid"))
        .collect()
}

/// Minimally generated semigroups with 2 or 3 generators, all at most
/// `max_generator`, in lexicographic order of generators.
pub fn small_family(max_generator: i64) -> Vec<NumericalSemigroup> {
    let mut out = Vec::new();
    for a1 in 2..=max_generator {
        for a2 in a1 + 1..=max_generator {
            if let Some(s) = minimal(&[a1, a2]) {
                out.push(s);
            }
            for a3 in a2 + 1..=max_generator {
                if let Some(s) = minimal(&[a1, a2, a3]) {
                    out.push(s);
                }
            }
        }
    }
    out
}

fn minimal(gens: &[i64]) -> Option<NumericalSemigroup> {
    let s = NumericalSemigroup::new(gens).ok()?;
    (s.embedding_dimension() == gens.len()).then_some(s)
}

/// [`small_family`] at 25 together with the named semigroups, without
/// repeats.
pub fn test_family() -> Vec<NumericalSemigroup> {
    let mut out = small_family(25);
    for s in named() {
        if !out.contains(&s) {
            out.push(s);
        }
    }
    out
}
