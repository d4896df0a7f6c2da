//! Γ_t graphs on the minimal primes of an equidimensional quotient ring,
//! their components, the connectedness dimension, and two partition-based
//! oracles.

use petgraph::unionfind::UnionFind;
use rayon::prelude::*;
use serde::Serialize;

use crate::combinatorics::{MonomialIdeal, VariablePrime};
use crate::error::{Error, Result};
use crate::groebner::{Engine, Ideal};

/// The primes of a family, either variable-generated or general.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyPrimes {
    Variables(Vec<VariablePrime>),
    General(Vec<Ideal>),
}

impl FamilyPrimes {
    pub fn len(&self) -> usize {
        match self {
            FamilyPrimes::Variables(v) => v.len(),
            FamilyPrimes::General(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn ideal(&self, i: usize) -> Ideal {
        match self {
            FamilyPrimes::Variables(v) => v[i].to_ideal(),
            FamilyPrimes::General(v) => v[i].clone(),
        }
    }
}

/// What was checked about one prime of a family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeCheck {
    pub contains_ambient: bool,
    pub radical_checked: bool,
    pub declared_prime: bool,
}

/// The minimal primes of `S/ambient` together with their pairwise heights.
#[derive(Clone, Debug)]
pub struct PrimeFamily {
    ambient: Ideal,
    primes: FamilyPrimes,
    verified: Vec<PrimeCheck>,
    quotient_dim: i64,
    heights: Vec<Vec<i64>>,
}

fn pairs(l: usize) -> Vec<(usize, usize)> {
    (0..l).flat_map(|i| (i + 1..l).map(move |j| (i, j))).collect()
}

fn height_table(l: usize, values: &[((usize, usize), i64)]) -> Vec<Vec<i64>> {
    let mut table = vec![vec![0; l]; l];
    for &((i, j), h) in values {
        table[i][j] = h;
        table[j][i] = h;
    }
    table
}

impl PrimeFamily {
    /// Minimal primes of a monomial ideal, computed from its radical.
    ///
    /// Heights use the fast path `ht(p + q) = d - (n - |p ∪ q|)`.
    pub fn from_monomial(ambient: &MonomialIdeal) -> Result<Self> {
        let radical = ambient.radical();
        let primes = radical.minimal_primes()?;
        if primes.is_empty() {
            return Err(Error::Contract("the unit and zero ideals have no variable primes".into()));
        }
        let n = ambient.nvars() as i64;
        let d = radical.dimension()?;
        let dims: Vec<i64> = primes.iter().map(|p| n - p.height() as i64).collect();
        if dims.iter().any(|&x| x != d) {
            return Err(Error::NotEquidimensional { dims, ambient: d });
        }
        let values: Vec<_> = pairs(primes.len())
            .into_iter()
            .map(|(i, j)| ((i, j), d - (n - primes[i].sum_height(&primes[j]) as i64)))
            .collect();
        let check = PrimeCheck {
            contains_ambient: true,
            radical_checked: true,
            declared_prime: false,
        };
        Ok(PrimeFamily {
            ambient: ambient.to_ideal(),
            heights: height_table(primes.len(), &values),
            verified: vec![check; primes.len()],
            primes: FamilyPrimes::Variables(primes),
            quotient_dim: d,
        })
    }

    /// A family of declared primes of `S/ambient`.
    ///
    /// Primality is trusted. Containment of `ambient` in each prime,
    /// `⋂ p_i ⊆ √ambient`, distinctness and equidimensionality are verified.
    pub fn declared(engine: &Engine, ambient: &Ideal, primes: Vec<Ideal>) -> Result<Self> {
        Self::build(engine, ambient, primes, true)
    }

    /// Like [`PrimeFamily::declared`] but without the radical containment
    /// check, for families whose primes are known to be minimal by
    /// construction.
    pub fn declared_unchecked_radical(engine: &Engine, ambient: &Ideal, primes: Vec<Ideal>) -> Result<Self> {
        Self::build(engine, ambient, primes, false)
    }

    fn build(engine: &Engine, ambient: &Ideal, primes: Vec<Ideal>, check_radical: bool) -> Result<Self> {
        if primes.is_empty() {
            return Err(Error::Contract("a prime family needs at least one prime".into()));
        }
        for p in &primes {
            if p.nvars() != ambient.nvars() {
                return Err(Error::DimensionMismatch {
                    expected: ambient.nvars(),
                    found: p.nvars(),
                });
            }
            if !engine.contains_ideal(p, ambient)? {
                return Err(Error::PrimeVerification(
                    "a declared prime does not contain the ideal".into(),
                ));
            }
        }
        if check_radical {
            let meet = primes[1..]
                .iter()
                .try_fold(primes[0].clone(), |acc, p| engine.intersect(&acc, p))?;
            for g in meet.gens() {
                if !engine.radical_member(g, ambient)? {
                    return Err(Error::PrimeVerification(
                        "the intersection of the declared primes is not contained in the radical".into(),
                    ));
                }
            }
        }
        for (i, j) in pairs(primes.len()) {
            if engine.same_ideal(&primes[i], &primes[j])? {
                return Err(Error::PrimeVerification(format!(
                    "declared primes {i} and {j} coincide"
                )));
            }
        }
        let d = engine.dimension(ambient)?;
        if d < 0 {
            return Err(Error::Contract("the ideal must be proper".into()));
        }
        let dims = primes
            .par_iter()
            .map(|p| engine.dimension(p))
            .collect::<Result<Vec<i64>>>()?;
        if dims.iter().any(|&x| x != d) {
            return Err(Error::NotEquidimensional { dims, ambient: d });
        }
        let values = pairs(primes.len())
            .into_par_iter()
            .map(|(i, j)| {
                let sum = ambient.sum(&primes[i].sum(&primes[j])?)?;
                Ok(((i, j), d - engine.dimension(&sum)?))
            })
            .collect::<Result<Vec<_>>>()?;
        let check = PrimeCheck {
            contains_ambient: true,
            radical_checked: check_radical,
            declared_prime: true,
        };
        Ok(PrimeFamily {
            ambient: ambient.clone(),
            heights: height_table(primes.len(), &values),
            verified: vec![check; primes.len()],
            primes: FamilyPrimes::General(primes),
            quotient_dim: d,
        })
    }

    pub fn ambient(&self) -> &Ideal {
        &self.ambient
    }

    pub fn primes(&self) -> &FamilyPrimes {
        &self.primes
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    pub fn verified(&self) -> &[PrimeCheck] {
        &self.verified
    }

    pub fn quotient_dim(&self) -> i64 {
        self.quotient_dim
    }

    /// `ht(p_i + p_j)` in the quotient ring.
    pub fn heights(&self) -> &[Vec<i64>] {
        &self.heights
    }
}

/// Γ_t: vertices are the primes, `{i, j}` is an edge iff `ht(p_i + p_j) ≤ t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GammaGraph {
    pub t: i64,
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
    pub heights: Vec<Vec<i64>>,
}

impl GammaGraph {
    pub fn component_count(&self) -> usize {
        self.component_partition().len()
    }

    /// Components as sorted vertex lists, ordered by smallest vertex.
    pub fn component_partition(&self) -> Vec<Vec<usize>> {
        let mut uf = UnionFind::<usize>::new(self.vertices);
        for &(i, j) in &self.edges {
            uf.union(i, j);
        }
        let labels = uf.into_labeling();
        let mut parts: Vec<Vec<usize>> = Vec::new();
        let mut slot_of_root = vec![usize::MAX; self.vertices];
        for (v, &root) in labels.iter().enumerate() {
            if slot_of_root[root] == usize::MAX {
                slot_of_root[root] = parts.len();
                parts.push(Vec::new());
            }
            parts[slot_of_root[root]].push(v);
        }
        parts
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }
}

fn check_level(family: &PrimeFamily, t: i64) -> Result<()> {
    if !(0..=family.quotient_dim).contains(&t) {
        return Err(Error::LevelOutOfRange {
            t,
            max: family.quotient_dim,
        });
    }
    Ok(())
}

pub fn build_gamma(family: &PrimeFamily, t: i64) -> Result<GammaGraph> {
    check_level(family, t)?;
    let edges = pairs(family.len())
        .into_iter()
        .filter(|&(i, j)| family.heights[i][j] <= t)
        .collect();
    Ok(GammaGraph {
        t,
        vertices: family.len(),
        edges,
        heights: family.heights.clone(),
    })
}

pub fn component_count(graph: &GammaGraph) -> usize {
    graph.component_count()
}

/// `#Γ_t` for every `t` in `0..=d`.
pub fn component_counts(family: &PrimeFamily) -> Vec<usize> {
    (0..=family.quotient_dim)
        .map(|t| build_gamma(family, t).expect("level in range").component_count())
        .collect()
}

/// `d - min { t in [0, d] : Γ_t connected }`, or `-1` when no such `t` exists.
pub fn connectedness_dimension_graphwise(family: &PrimeFamily) -> i64 {
    let d = family.quotient_dim;
    (0..=d)
        .find(|&t| build_gamma(family, t).expect("level in range").is_connected())
        .map_or(-1, |t| d - t)
}

const ORACLE_MAX: usize = 15;

/// Nontrivial two-block partitions `(S, T)` with prime 0 always in `S`.
pub(crate) fn partitions(l: usize) -> impl Iterator<Item = (Vec<usize>, Vec<usize>)> {
    (1u32..1 << (l - 1)).map(move |mask| {
        let (mut s, mut t) = (vec![0], Vec::new());
        for i in 1..l {
            if mask >> (i - 1) & 1 == 1 {
                t.push(i);
            } else {
                s.push(i);
            }
        }
        (s, t)
    })
}

fn check_oracle_size(family: &PrimeFamily, min: usize) -> Result<()> {
    let l = family.len();
    if !(min..=ORACLE_MAX).contains(&l) {
        return Err(Error::OracleSize {
            min,
            max: ORACLE_MAX,
            found: l,
        });
    }
    Ok(())
}

fn block_sum(engine: &Engine, family: &PrimeFamily, s: &[usize], t: &[usize]) -> Result<Ideal> {
    let meet = |idx: &[usize]| -> Result<Ideal> {
        idx[1..].iter().try_fold(family.primes.ideal(idx[0]), |acc, &k| {
            engine.intersect(&acc, &family.primes.ideal(k))
        })
    };
    meet(s)?.sum(&meet(t)?)
}

/// True iff `ht(⋂_S p + ⋂_T q) ≤ t` for every nontrivial partition `(S, T)`.
pub fn partition_connectivity_oracle(engine: &Engine, family: &PrimeFamily, t: i64) -> Result<bool> {
    check_oracle_size(family, 2)?;
    check_level(family, t)?;
    let heights = partitions(family.len())
        .collect::<Vec<_>>()
        .par_iter()
        .map(|(s, tt)| engine.height_in_quotient(&family.ambient, &block_sum(engine, family, s, tt)?))
        .collect::<Result<Vec<i64>>>()?;
    Ok(heights.iter().all(|&h| h <= t))
}

/// `min over nontrivial partitions (S, T) of dim S/(⋂_S p + ⋂_T q)`; a
/// single prime gives the quotient dimension.
pub fn c_direct_oracle(engine: &Engine, family: &PrimeFamily) -> Result<i64> {
    if family.len() == 1 {
        return Ok(family.quotient_dim);
    }
    check_oracle_size(family, 2)?;
    let dims = partitions(family.len())
        .collect::<Vec<_>>()
        .par_iter()
        .map(|(s, t)| engine.dimension(&block_sum(engine, family, s, t)?))
        .collect::<Result<Vec<i64>>>()?;
    Ok(dims.into_iter().min().expect("at least one partition"))
}
