//! Monomial ideals, square-free detection and minimal primes via minimal
//! vertex covers of the support hypergraph.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::polyring::{Coefficient, Monomial, Polynomial, RingDescriptor};
use num_traits::One;

/// A monomial ideal stored by its minimal generators, sorted descending in
/// lex order. An empty generator list is the zero ideal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

fn lex_desc(a: &Monomial, b: &Monomial) -> Ordering {
    b.exponents().cmp(a.exponents())
}

impl MonomialIdeal {
    pub fn new(nvars: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let mut all = Vec::new();
        for m in gens {
            if m.nvars() != nvars {
                return Err(Error::DimensionMismatch {
                    expected: nvars,
                    found: m.nvars(),
                });
            }
            all.push(m);
        }
        Ok(MonomialIdeal {
            nvars,
            gens: minimalize(all),
        })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Monomial::is_one)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// True when every minimal generator has exponents in `{0, 1}`.
    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    pub fn radical(&self) -> MonomialIdeal {
        MonomialIdeal {
            nvars: self.nvars,
            gens: minimalize(self.gens.iter().map(Monomial::radical).collect()),
        }
    }

    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        MonomialIdeal {
            nvars: self.nvars,
            gens: minimalize(self.gens.iter().chain(&other.gens).cloned().collect()),
        }
    }

    /// Generated by pairwise lcms.
    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let lcms = self
            .gens
            .iter()
            .flat_map(|a| other.gens.iter().map(move |b| a.lcm(b)))
            .collect();
        MonomialIdeal {
            nvars: self.nvars,
            gens: minimalize(lcms),
        }
    }

    /// `(M : m)`, generated by `g / gcd(g, m)`.
    pub fn colon(&self, m: &Monomial) -> MonomialIdeal {
        let quotients = self
            .gens
            .iter()
            .map(|g| g.div(&g.gcd(m)).expect("gcd divides"))
            .collect();
        MonomialIdeal {
            nvars: self.nvars,
            gens: minimalize(quotients),
        }
    }

    pub fn to_ideal(&self) -> Ideal {
        let one = Coefficient::one();
        Ideal::new(
            self.nvars,
            self.gens.iter().map(|m| Polynomial::term(one.clone(), m.clone())),
        )
        .expect("generators share the ring")
    }

    fn edges(&self) -> Result<Vec<u64>> {
        if self.nvars > 64 {
            return Err(Error::Unsupported(
                "monomial combinatorics needs at most 64 variables".into(),
            ));
        }
        Ok(self.gens.iter().map(Monomial::support_mask).collect())
    }

    fn require_squarefree(&self) -> Result<()> {
        if !self.is_squarefree() {
            return Err(Error::Contract("monomial ideal is not square-free".into()));
        }
        Ok(())
    }

    /// Minimal primes of a square-free monomial ideal: the minimal vertex
    /// covers of the support hypergraph. The unit ideal has none; the zero
    /// ideal has none either, since `(0)` itself is not a variable prime.
    pub fn minimal_primes(&self) -> Result<Vec<VariablePrime>> {
        self.require_squarefree()?;
        let edges = self.edges()?;
        if edges.is_empty() {
            return Ok(Vec::new());
        }
        let mut primes: Vec<VariablePrime> = minimal_covers(&edges)
            .into_iter()
            .map(|mask| VariablePrime {
                nvars: self.nvars,
                mask,
            })
            .collect();
        primes.sort();
        Ok(primes)
    }

    /// `dim S/M`: `n` minus the minimum vertex cover size, `-1` for the unit ideal.
    pub fn dimension(&self) -> Result<i64> {
        let edges = self.edges()?;
        if self.is_unit() {
            return Ok(-1);
        }
        Ok((self.nvars - min_cover_size(&edges)) as i64)
    }

    /// True when all minimal covers have the same size.
    pub fn is_equidimensional(&self) -> Result<bool> {
        let primes = self.minimal_primes()?;
        Ok(primes.windows(2).all(|w| w[0].height() == w[1].height()))
    }

    pub fn display<'a>(&'a self, ring: &'a RingDescriptor) -> MonomialIdealDisplay<'a> {
        MonomialIdealDisplay { ideal: self, ring }
    }
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| lex_desc(a, b)));
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::new();
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept.sort_by(lex_desc);
    kept
}

pub struct MonomialIdealDisplay<'a> {
    ideal: &'a MonomialIdeal,
    ring: &'a RingDescriptor,
}

impl fmt::Display for MonomialIdealDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, m) in self.ideal.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            crate::polyring::write_monomial(f, m, self.ring)?;
        }
        f.write_str(")")
    }
}

pub fn is_squarefree(m: &MonomialIdeal) -> bool {
    m.is_squarefree()
}

pub fn minimal_primes_squarefree(m: &MonomialIdeal) -> Result<Vec<VariablePrime>> {
    m.minimal_primes()
}

pub fn monomial_dimension(m: &MonomialIdeal) -> Result<i64> {
    m.dimension()
}

pub fn is_equidimensional_monomial(m: &MonomialIdeal) -> Result<bool> {
    m.is_equidimensional()
}

/// A prime generated by a nonempty set of variables, stored as a bit set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VariablePrime {
    nvars: usize,
    mask: u64,
}

impl VariablePrime {
    pub fn new(nvars: usize, vars: impl IntoIterator<Item = usize>) -> Result<Self> {
        if nvars > 64 {
            return Err(Error::Unsupported("variable primes need at most 64 variables".into()));
        }
        let mut mask = 0u64;
        for v in vars {
            if v >= nvars {
                return Err(Error::InvalidRing(format!("variable index {v} out of range")));
            }
            mask |= 1 << v;
        }
        if mask == 0 {
            return Err(Error::Contract("a variable prime needs at least one variable".into()));
        }
        Ok(VariablePrime { nvars, mask })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn vars(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.nvars).filter(move |i| self.mask >> i & 1 == 1)
    }

    /// Number of variables, which is the height of the prime.
    pub fn height(&self) -> usize {
        self.mask.count_ones() as usize
    }

    /// Height of `self + other`.
    pub fn sum_height(&self, other: &VariablePrime) -> usize {
        (self.mask | other.mask).count_ones() as usize
    }

    pub fn contains_monomial(&self, m: &Monomial) -> bool {
        m.support_mask() & self.mask != 0
    }

    pub fn to_ideal(&self) -> Ideal {
        Ideal::variables(self.nvars, self.vars())
    }

    pub fn display<'a>(&'a self, ring: &'a RingDescriptor) -> VariablePrimeDisplay<'a> {
        VariablePrimeDisplay { prime: self, ring }
    }
}

impl Ord for VariablePrime {
    /// Lexicographic on the sorted list of variable indices.
    fn cmp(&self, other: &Self) -> Ordering {
        self.vars()
            .cmp(other.vars())
            .then(self.nvars.cmp(&other.nvars))
    }
}

impl PartialOrd for VariablePrime {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub struct VariablePrimeDisplay<'a> {
    prime: &'a VariablePrime,
    ring: &'a RingDescriptor,
}

impl fmt::Display for VariablePrimeDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, v) in self.prime.vars().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str(&self.ring.names()[v])?;
        }
        f.write_str(")")
    }
}

/// Drops edges that contain another edge; they never affect covers.
fn reduce_edges(edges: &[u64]) -> Vec<u64> {
    let mut sorted: Vec<u64> = edges.to_vec();
    sorted.sort_by_key(|e| (e.count_ones(), *e));
    sorted.dedup();
    let mut kept: Vec<u64> = Vec::new();
    for e in sorted {
        if !kept.iter().any(|k| k & e == *k) {
            kept.push(e);
        }
    }
    kept
}

/// All inclusion-minimal vertex sets meeting every edge.
///
/// An empty edge cannot be hit, so its presence yields no covers.
pub fn minimal_covers(edges: &[u64]) -> Vec<u64> {
    let edges = reduce_edges(edges);
    if edges.contains(&0) {
        return Vec::new();
    }
    let mut out = Vec::new();
    covers_rec(&edges, 0, 0, &mut out);
    out.sort_unstable();
    out.dedup();
    out
}

fn has_private_edges(edges: &[u64], chosen: u64) -> bool {
    let mut rest = chosen;
    while rest != 0 {
        let v = rest & rest.wrapping_neg();
        if !edges.iter().any(|e| e & chosen == v) {
            return false;
        }
        rest &= rest - 1;
    }
    true
}

fn covers_rec(edges: &[u64], chosen: u64, excluded: u64, out: &mut Vec<u64>) {
    let Some(&edge) = edges.iter().find(|e| *e & chosen == 0) else {
        out.push(chosen);
        return;
    };
    let mut excluded = excluded;
    let mut rest = edge & !excluded;
    while rest != 0 {
        let v = rest & rest.wrapping_neg();
        rest &= rest - 1;
        let next = chosen | v;
        if has_private_edges(edges, next) {
            covers_rec(edges, next, excluded, out);
        }
        excluded |= v;
    }
}

/// Size of a smallest vertex cover of the hypergraph.
pub fn min_cover_size(edges: &[u64]) -> usize {
    let edges = reduce_edges(edges);
    if edges.is_empty() {
        return 0;
    }
    let mut best = edges.iter().fold(0u64, |acc, e| acc | e).count_ones() as usize;
    min_cover_rec(&edges, 0, 0, &mut best);
    best
}

fn disjoint_unhit_lower_bound(edges: &[u64], chosen: u64) -> usize {
    let mut used = 0u64;
    let mut count = 0;
    for &e in edges {
        if e & chosen == 0 && e & used == 0 {
            used |= e;
            count += 1;
        }
    }
    count
}

fn min_cover_rec(edges: &[u64], chosen: u64, size: usize, best: &mut usize) {
    let Some(&edge) = edges.iter().find(|e| *e & chosen == 0) else {
        *best = (*best).min(size);
        return;
    };
    if size + disjoint_unhit_lower_bound(edges, chosen) >= *best {
        return;
    }
    let mut rest = edge;
    while rest != 0 {
        let v = rest & rest.wrapping_neg();
        rest &= rest - 1;
        min_cover_rec(edges, chosen | v, size + 1, best);
    }
}
