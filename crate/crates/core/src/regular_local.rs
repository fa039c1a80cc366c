//! Monomial ideals in `k[[x_1, ..., x_d]]` and Goto numbers of pure-power
//! parameter ideals `(x_1^{n_1}, ..., x_d^{n_d})`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// A monomial ideal given by its minimal generators, sorted ascending.
/// The empty generator list is the zero ideal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    dim: usize,
    generators: Vec<Vec<u32>>,
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

impl MonomialIdeal {
    /// Ideal generated by `generators`, minimalized.
    pub fn new(dim: usize, generators: impl IntoIterator<Item = Vec<u32>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidArgument("dimension must be positive".into()));
        }
        let mut gens: Vec<Vec<u32>> = generators.into_iter().collect();
        if let Some(g) = gens.iter().find(|g| g.len() != dim) {
            return Err(Error::InvalidArgument(format!(
                "exponent vector {g:?} does not have length {dim}"
            )));
        }
        gens.sort();
        gens.dedup();
        // Sorting by total degree first lets each kept generator be tested
        // only against earlier ones.
        gens.sort_by_key(|g| (g.iter().sum::<u32>(), g.clone()));
        let mut minimal: Vec<Vec<u32>> = Vec::new();
        for g in gens {
            if !minimal.iter().any(|m| divides(m, &g)) {
                minimal.push(g);
            }
        }
        minimal.sort();
        Ok(Self {
            dim,
            generators: minimal,
        })
    }

    /// `(x_1^{n_1}, ..., x_d^{n_d})`.
    pub fn pure_power(exponents: &[u32]) -> Result<Self> {
        if exponents.contains(&0) {
            return Err(Error::InvalidArgument(
                "pure-power exponents must be positive".into(),
            ));
        }
        let d = exponents.len();
        Self::new(
            d,
            exponents.iter().enumerate().map(|(i, &n)| {
                let mut v = vec![0; d];
                v[i] = n;
                v
            }),
        )
    }

    /// `m^n`.
    pub fn maximal_power(dim: usize, n: u32) -> Result<Self> {
        fn fill(prefix: &mut Vec<u32>, left: u32, dim: usize, out: &mut Vec<Vec<u32>>) {
            if prefix.len() + 1 == dim {
                prefix.push(left);
                out.push(prefix.clone());
                prefix.pop();
                return;
            }
            for k in 0..=left {
                prefix.push(k);
                fill(prefix, left - k, dim, out);
                prefix.pop();
            }
        }
        if dim == 0 {
            return Err(Error::InvalidArgument("dimension must be positive".into()));
        }
        let mut out = Vec::new();
        fill(&mut Vec::new(), n, dim, &mut out);
        Self::new(dim, out)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Vec<u32>] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(|g| g.iter().all(|&x| x == 0))
    }

    pub fn contains(&self, p: &[u32]) -> bool {
        self.generators.iter().any(|g| divides(g, p))
    }

    /// Sum of two ideals.
    pub fn sum(&self, other: &MonomialIdeal) -> Result<Self> {
        Self::new(
            self.dim,
            self.generators.iter().chain(&other.generators).cloned(),
        )
    }

    /// Intersection, by pairwise componentwise maxima.
    pub fn intersect(&self, other: &MonomialIdeal) -> Self {
        let lcms = self.generators.iter().flat_map(|a| {
            other
                .generators
                .iter()
                .map(move |b| a.iter().zip(b).map(|(x, y)| *x.max(y)).collect())
        });
        Self::new(self.dim, lcms).expect("same dimension")
    }

    /// `I : x_i`.
    pub fn colon_variable(&self, i: usize) -> Self {
        let gens = self.generators.iter().map(|g| {
            let mut g = g.clone();
            g[i] = g[i].saturating_sub(1);
            g
        });
        Self::new(self.dim, gens).expect("same dimension")
    }

    /// `I : m = ∩_i (I : x_i)`, by decrementing and pairwise intersection.
    pub fn colon_maximal_by_intersection(&self) -> Self {
        let mut acc = self.colon_variable(0);
        for i in 1..self.dim {
            acc = acc.intersect(&self.colon_variable(i));
        }
        acc
    }

    /// `I : m`, computed on the box `∏ [0, M_i]` spanned by the generators.
    ///
    /// Both `I` and `I : m` are generated inside the box, and a monomial `p`
    /// lies in either iff `min(p, M)` does; so `p ∈ I : m` iff
    /// `min(p + e_i, M) ∈ I` for every `i`.
    pub fn colon_maximal(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let grid = Grid::new(self);
        let inside = grid.membership(self);
        let colon: Vec<bool> = (0..grid.len())
            .map(|k| (0..self.dim).all(|i| inside[grid.step_up_clamped(k, i)]))
            .collect();
        let result = grid.minimal_points(&colon, self.dim);
        debug_assert!(self.generators.iter().all(|g| result.contains(g)));
        result
    }

    /// `I : m^g`, iterating [`MonomialIdeal::colon_maximal`].
    pub fn colon_power_maximal(&self, g: u32) -> Self {
        let bound = self.generators.iter().flatten().copied().max().unwrap_or(0);
        let mut acc = self.clone();
        for _ in 0..g {
            acc = acc.colon_maximal();
            debug_assert!(acc.generators.iter().flatten().all(|&x| x <= bound));
        }
        acc
    }

    /// Largest `t` with `I ⊆ m^t`: the least total degree of a generator.
    pub fn ord(&self) -> Option<u32> {
        self.generators.iter().map(|g| g.iter().sum()).min()
    }
}

/// Mixed-radix indexing of the box `∏ [0, M_i]`.
struct Grid {
    bounds: Vec<u32>,
    strides: Vec<usize>,
    len: usize,
}

impl Grid {
    fn new(ideal: &MonomialIdeal) -> Self {
        let bounds: Vec<u32> = (0..ideal.dim)
            .map(|i| ideal.generators.iter().map(|g| g[i]).max().unwrap_or(0))
            .collect();
        let mut strides = Vec::with_capacity(bounds.len());
        let mut len = 1usize;
        for &m in &bounds {
            strides.push(len);
            len *= m as usize + 1;
        }
        Self {
            bounds,
            strides,
            len,
        }
    }

    fn len(&self) -> usize {
        self.len
    }

    fn coord(&self, k: usize, i: usize) -> u32 {
        ((k / self.strides[i]) % (self.bounds[i] as usize + 1)) as u32
    }

    fn point(&self, k: usize) -> Vec<u32> {
        (0..self.bounds.len()).map(|i| self.coord(k, i)).collect()
    }

    fn index(&self, p: &[u32]) -> usize {
        p.iter()
            .zip(&self.strides)
            .map(|(&x, &s)| x as usize * s)
            .sum()
    }

    /// Index of `min(p + e_i, M)`.
    fn step_up_clamped(&self, k: usize, i: usize) -> usize {
        if self.coord(k, i) < self.bounds[i] {
            k + self.strides[i]
        } else {
            k
        }
    }

    /// Membership in `I` for every box point, spreading generators upward.
    fn membership(&self, ideal: &MonomialIdeal) -> Vec<bool> {
        let mut inside = vec![false; self.len];
        for g in &ideal.generators {
            inside[self.index(g)] = true;
        }
        // Indices increase along every coordinate, so one ascending pass
        // propagates from each predecessor.
        for k in 0..self.len {
            if !inside[k] {
                inside[k] = (0..self.bounds.len())
                    .any(|i| self.coord(k, i) > 0 && inside[k - self.strides[i]]);
            }
        }
        inside
    }

    /// Minimal generators of the upward-closed set `set`.
    fn minimal_points(&self, set: &[bool], dim: usize) -> MonomialIdeal {
        let gens = (0..self.len).filter(|&k| {
            set[k] && (0..dim).all(|i| self.coord(k, i) == 0 || !set[k - self.strides[i]])
        });
        MonomialIdeal::new(dim, gens.map(|k| self.point(k)).collect::<Vec<_>>())
            .expect("same dimension")
    }
}

impl std::fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (k, g) in self.generators.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            let factors: Vec<String> = g
                .iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(i, &x)| {
                    if x == 1 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^{x}", i + 1)
                    }
                })
                .collect();
            if factors.is_empty() {
                write!(f, "1")?;
            } else {
                write!(f, "{}", factors.join("*"))?;
            }
        }
        write!(f, ")")
    }
}

/// Whether `x^p` is integral over `(x_1^{n_1}, ..., x_d^{n_d})`:
/// `Σ p_i / n_i >= 1`.
pub fn pure_power_integral(exponents: &[u32], p: &[u32]) -> bool {
    assert_eq!(exponents.len(), p.len(), "dimension mismatch");
    let sum: BigRational = exponents
        .iter()
        .zip(p)
        .map(|(&n, &x)| BigRational::new(BigInt::from(x), BigInt::from(n)))
        .fold(BigRational::zero(), |a, b| a + b);
    sum >= BigRational::one()
}

fn check_pure_power(exponents: &[u32]) -> Result<()> {
    if exponents.len() < 2 {
        return Err(Error::InvalidArgument("need at least two exponents".into()));
    }
    if exponents.contains(&0) {
        return Err(Error::InvalidArgument(
            "pure-power exponents must be positive".into(),
        ));
    }
    Ok(())
}

/// Goto number of `(x_1^{n_1}, ..., x_d^{n_d})`.
///
/// `I : m^g` is integral iff every minimal generator is, since the
/// integral closure of a monomial ideal is monomial.
pub fn pure_power_goto(exponents: &[u32]) -> Result<u32> {
    check_pure_power(exponents)?;
    let q = MonomialIdeal::pure_power(exponents)?;
    let integral = |i: &MonomialIdeal| {
        i.generators()
            .iter()
            .all(|g| pure_power_integral(exponents, g))
    };
    // m^{Σ(n_i - 1) + 1} ⊆ Q, so the colon is R by then.
    let cap: u32 = exponents.iter().map(|n| n - 1).sum::<u32>() + 1;
    let mut colon = q;
    for g in 1..=cap {
        colon = colon.colon_maximal();
        if !integral(&colon) {
            return Ok(g - 1);
        }
    }
    unreachable!("Q : m^g is the unit ideal beyond the socle degree")
}

/// `g / ord(Q)`, `g / ord(Q : m)`, `g / ord(Q : m^g)` for a pure-power ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GotoRatios {
    pub exponents: Vec<u32>,
    pub goto: u32,
    pub ord_q: u32,
    pub ord_colon_m: u32,
    pub ord_colon_g: u32,
    #[serde(serialize_with = "ser_ratio")]
    pub ratio_q: Option<BigRational>,
    #[serde(serialize_with = "ser_ratio")]
    pub ratio_colon_m: Option<BigRational>,
    #[serde(serialize_with = "ser_ratio")]
    pub ratio_colon_g: Option<BigRational>,
}

fn ser_ratio<S: serde::Serializer>(
    r: &Option<BigRational>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.collect_str(r),
        None => s.serialize_none(),
    }
}

pub fn goto_ratios(exponents: &[u32]) -> Result<GotoRatios> {
    let goto = pure_power_goto(exponents)?;
    let q = MonomialIdeal::pure_power(exponents)?;
    let ord = |i: &MonomialIdeal| i.ord().expect("nonzero ideal");
    let ord_q = ord(&q);
    let ord_colon_m = ord(&q.colon_maximal());
    let ord_colon_g = ord(&q.colon_power_maximal(goto));
    let ratio = |d: u32| (d != 0).then(|| BigRational::new(BigInt::from(goto), BigInt::from(d)));
    Ok(GotoRatios {
        exponents: exponents.to_vec(),
        goto,
        ord_q,
        ord_colon_m,
        ord_colon_g,
        ratio_q: ratio(ord_q),
        ratio_colon_m: ratio(ord_colon_m),
        ratio_colon_g: ratio(ord_colon_g),
    })
}
