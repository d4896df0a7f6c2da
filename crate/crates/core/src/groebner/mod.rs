//! Reduced Gröbner bases and the ideal operations built on them.

mod buchberger;
mod division;
mod ops;

pub use buchberger::satisfies_buchberger_criterion;
pub use division::normal_form;
pub use ops::member;

use std::fmt;

use crate::combinatorics::MonomialIdeal;
use crate::error::{Error, Result};
use crate::polyring::{Monomial, MonomialOrder, Polynomial, RingDescriptor, Term};

pub(crate) use division::{reduce_full, sorted_terms};

/// An ideal given by generators. The zero ideal has no generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ideal {
    nvars: usize,
    gens: Vec<Polynomial>,
}

impl Ideal {
    /// Zero generators are dropped.
    pub fn new(nvars: usize, gens: impl IntoIterator<Item = Polynomial>) -> Result<Self> {
        let mut out = Vec::new();
        for g in gens {
            if g.nvars() != nvars {
                return Err(Error::DimensionMismatch {
                    expected: nvars,
                    found: g.nvars(),
                });
            }
            if !g.is_zero() && !out.contains(&g) {
                out.push(g);
            }
        }
        Ok(Ideal { nvars, gens: out })
    }

    pub fn zero(nvars: usize) -> Self {
        Ideal {
            nvars,
            gens: Vec::new(),
        }
    }

    pub fn unit(nvars: usize) -> Self {
        Ideal {
            nvars,
            gens: vec![Polynomial::one(nvars)],
        }
    }

    pub fn principal(f: Polynomial) -> Self {
        let nvars = f.nvars();
        Ideal::new(nvars, [f]).expect("single generator")
    }

    /// The ideal generated by the given variables.
    pub fn variables(nvars: usize, vars: impl IntoIterator<Item = usize>) -> Self {
        Ideal {
            nvars,
            gens: vars.into_iter().map(|i| Polynomial::var(nvars, i)).collect(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// True when every generator is a single term.
    pub fn is_monomial(&self) -> bool {
        self.gens.iter().all(Polynomial::is_monomial)
    }

    /// Generators as monomials, if this is a monomial ideal.
    pub fn as_monomial_ideal(&self) -> Option<MonomialIdeal> {
        if !self.is_monomial() {
            return None;
        }
        let ms = self.gens.iter().map(|g| g.terms()[0].1.clone());
        MonomialIdeal::new(self.nvars, ms).ok()
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        if self.nvars != other.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: other.nvars,
            });
        }
        Ideal::new(self.nvars, self.gens.iter().chain(&other.gens).cloned())
    }

    pub fn with_generator(&self, f: Polynomial) -> Result<Ideal> {
        Ideal::new(self.nvars, self.gens.iter().cloned().chain([f]))
    }

    pub fn extend_vars(&self, extra: usize) -> Ideal {
        Ideal {
            nvars: self.nvars + extra,
            gens: self.gens.iter().map(|g| g.extend_vars(extra)).collect(),
        }
    }

    pub(crate) fn check_ring(&self, ring: &RingDescriptor) -> Result<()> {
        ring.check(self.nvars)
    }

    pub fn display<'a>(&'a self, ring: &'a RingDescriptor) -> IdealDisplay<'a> {
        IdealDisplay { ideal: self, ring }
    }
}

pub struct IdealDisplay<'a> {
    ideal: &'a Ideal,
    ring: &'a RingDescriptor,
}

impl fmt::Display for IdealDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, g) in self.ideal.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", g.display(self.ring))?;
        }
        f.write_str(")")
    }
}

/// The reduced Gröbner basis of an ideal under a fixed order.
///
/// Elements are monic; no monomial of an element is divisible by the leading
/// monomial of another; the list is sorted ascending by leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedGroebnerBasis {
    nvars: usize,
    order: MonomialOrder,
    basis: Vec<Polynomial>,
    sorted: Vec<Vec<Term>>,
}

impl ReducedGroebnerBasis {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.sorted.iter().map(|g| &g[0].1)
    }

    pub fn is_unit(&self) -> bool {
        self.sorted.len() == 1 && self.sorted[0][0].1.is_one()
    }

    /// Normal form of `f` with respect to this basis.
    pub fn reduce(&self, f: &Polynomial) -> Result<Polynomial> {
        if f.nvars() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: f.nvars(),
            });
        }
        let refs: Vec<&[Term]> = self.sorted.iter().map(Vec::as_slice).collect();
        let rem = reduce_full(sorted_terms(f, &self.order), &refs, &self.order);
        Ok(Polynomial::from_sorted_terms(self.nvars, rem, &self.order))
    }

    /// Ideal membership: `f` reduces to zero.
    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.reduce(f)?.is_zero())
    }

    pub fn to_ideal(&self) -> Ideal {
        Ideal {
            nvars: self.nvars,
            gens: self.basis.clone(),
        }
    }
}

/// Work limits for Gröbner computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of S-pair reductions in one Buchberger run.
    pub max_steps: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_steps: 1_000_000 }
    }
}

/// Entry point for every operation that runs Buchberger's algorithm.
///
/// Holds only configuration; all methods are pure.
#[derive(Debug, Clone, Copy, Default)]
pub struct Engine {
    limits: Limits,
}

impl Engine {
    pub fn new(limits: Limits) -> Self {
        Engine { limits }
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    /// Reduced Gröbner basis of `ideal` under `order`.
    pub fn groebner(&self, ideal: &Ideal, order: &MonomialOrder) -> Result<ReducedGroebnerBasis> {
        order.validate(ideal.nvars)?;
        let sorted = buchberger::reduced_basis(ideal.nvars, &ideal.gens, order, self.limits.max_steps)?;
        let basis = sorted
            .iter()
            .map(|t| Polynomial::from_sorted_terms(ideal.nvars, t.clone(), order))
            .collect();
        Ok(ReducedGroebnerBasis {
            nvars: ideal.nvars,
            order: order.clone(),
            basis,
            sorted,
        })
    }
}

/// The monomial ideal generated by the leading monomials of `basis`.
pub fn initial_ideal(basis: &ReducedGroebnerBasis) -> MonomialIdeal {
    MonomialIdeal::new(basis.nvars, basis.leading_monomials().cloned())
        .expect("leading monomials share the ring")
}

#[cfg(test)]
mod tests;
