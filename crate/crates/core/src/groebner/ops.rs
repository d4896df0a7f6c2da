//! Elimination, intersection, colon, radical membership, dimension and height.

use super::{initial_ideal, Engine, Ideal, ReducedGroebnerBasis};
use crate::combinatorics::{self, MonomialIdeal};
use crate::error::{Error, Result};
use crate::polyring::{MonomialOrder, Polynomial};

/// Membership test against a reduced basis.
pub fn member(f: &Polynomial, basis: &ReducedGroebnerBasis) -> Result<bool> {
    basis.contains(f)
}

fn same_ring(a: &Ideal, b: &Ideal) -> Result<()> {
    if a.nvars() != b.nvars() {
        return Err(Error::DimensionMismatch {
            expected: a.nvars(),
            found: b.nvars(),
        });
    }
    Ok(())
}

impl Engine {
    /// Generators of `ideal ∩ K[keep]`, from a two-block order with the
    /// eliminated variables in the dominant block.
    pub fn eliminate(&self, ideal: &Ideal, keep: &[bool]) -> Result<Ideal> {
        if keep.len() != ideal.nvars() {
            return Err(Error::DimensionMismatch {
                expected: ideal.nvars(),
                found: keep.len(),
            });
        }
        let order = MonomialOrder::Block {
            eliminate: keep.iter().map(|k| !k).collect(),
        };
        let gb = self.groebner(ideal, &order)?;
        let kept = gb.basis().iter().filter(|g| {
            g.terms()
                .iter()
                .all(|(_, m)| m.support().all(|v| keep[v]))
        });
        Ideal::new(ideal.nvars(), kept.cloned())
    }

    /// `I ∩ J`. Monomial inputs take the lcm route; everything else goes
    /// through [`Engine::intersect_by_elimination`].
    pub fn intersect(&self, i: &Ideal, j: &Ideal) -> Result<Ideal> {
        same_ring(i, j)?;
        if i.is_zero() || j.is_zero() {
            return Ok(Ideal::zero(i.nvars()));
        }
        if let (Some(a), Some(b)) = (i.as_monomial_ideal(), j.as_monomial_ideal()) {
            return Ok(a.intersect(&b).to_ideal());
        }
        self.intersect_by_elimination(i, j)
    }

    /// `I ∩ J = (u I + (1 - u) J) ∩ K[x]` with an auxiliary variable `u`.
    pub fn intersect_by_elimination(&self, i: &Ideal, j: &Ideal) -> Result<Ideal> {
        same_ring(i, j)?;
        let n = i.nvars();
        let u = Polynomial::var(n + 1, n);
        let one_minus_u = &Polynomial::one(n + 1) - &u;
        let gens = i
            .gens()
            .iter()
            .map(|f| &f.extend_vars(1) * &u)
            .chain(j.gens().iter().map(|g| &g.extend_vars(1) * &one_minus_u));
        let lifted = Ideal::new(n + 1, gens)?;
        let mut keep = vec![true; n + 1];
        keep[n] = false;
        let elim = self.eliminate(&lifted, &keep)?;
        let gens = elim
            .gens()
            .iter()
            .map(|g| g.drop_last_var().expect("eliminated variable is absent"));
        Ideal::new(n, gens)
    }

    /// `(I : f) = { g | g f ∈ I }`.
    pub fn colon(&self, i: &Ideal, f: &Polynomial) -> Result<Ideal> {
        if f.nvars() != i.nvars() {
            return Err(Error::DimensionMismatch {
                expected: i.nvars(),
                found: f.nvars(),
            });
        }
        if f.is_zero() {
            return Err(Error::Contract("colon by the zero polynomial".into()));
        }
        if f.is_constant() || i.is_zero() {
            return Ok(i.clone());
        }
        if let (Some(a), true) = (i.as_monomial_ideal(), f.is_monomial()) {
            return Ok(a.colon(&f.terms()[0].1).to_ideal());
        }
        self.colon_by_elimination(i, f)
    }

    /// `(I : f)` as `(I ∩ (f)) / f`.
    pub fn colon_by_elimination(&self, i: &Ideal, f: &Polynomial) -> Result<Ideal> {
        if f.is_zero() {
            return Err(Error::Contract("colon by the zero polynomial".into()));
        }
        let meet = self.intersect_by_elimination(i, &Ideal::principal(f.clone()))?;
        let mut gens = Vec::with_capacity(meet.gens().len());
        for h in meet.gens() {
            let q = h
                .div_exact(f)
                .ok_or_else(|| Error::Internal("intersection generator not divisible by f".into()))?;
            gens.push(q);
        }
        Ideal::new(i.nvars(), gens)
    }

    /// Decides `f ∈ √I` via `1 ∈ (I, 1 - u f)` in `S[u]`.
    pub fn radical_member(&self, f: &Polynomial, i: &Ideal) -> Result<bool> {
        if f.nvars() != i.nvars() {
            return Err(Error::DimensionMismatch {
                expected: i.nvars(),
                found: f.nvars(),
            });
        }
        if f.is_zero() {
            return Ok(true);
        }
        let n = i.nvars();
        let u = Polynomial::var(n + 1, n);
        let rabinowitsch = &Polynomial::one(n + 1) - &(&u * &f.extend_vars(1));
        let lifted = i.extend_vars(1).with_generator(rabinowitsch)?;
        Ok(self.groebner(&lifted, &MonomialOrder::GrevLex)?.is_unit())
    }

    /// `dim S/I`, read off the initial ideal as the largest set of variables
    /// supporting no minimal generator. The unit ideal gives `-1`.
    pub fn krull_dimension(&self, i: &Ideal, order: &MonomialOrder) -> Result<i64> {
        if i.nvars() > 64 {
            return Err(Error::Unsupported("dimension needs at most 64 variables".into()));
        }
        let gb = self.groebner(i, order)?;
        Ok(initial_dimension(&initial_ideal(&gb)))
    }

    /// `dim S/I` under grevlex.
    pub fn dimension(&self, i: &Ideal) -> Result<i64> {
        self.krull_dimension(i, &MonomialOrder::GrevLex)
    }

    /// Height of `J (S/ambient)` as `dim S/ambient - dim S/(ambient + J)`.
    ///
    /// The caller guarantees `S/ambient` is equidimensional; containment of
    /// `ambient` in `√J` is checked here.
    pub fn height_in_quotient(&self, ambient: &Ideal, j: &Ideal) -> Result<i64> {
        same_ring(ambient, j)?;
        let gb_j = self.groebner(j, &MonomialOrder::GrevLex)?;
        for g in ambient.gens() {
            if !gb_j.contains(g)? && !self.radical_member(g, j)? {
                return Err(Error::Contract(
                    "ideal does not contain the ambient ideal up to radical".into(),
                ));
            }
        }
        let d_ambient = self.dimension(ambient)?;
        if d_ambient < 0 {
            return Err(Error::Contract("ambient ideal must be proper".into()));
        }
        Ok(d_ambient - self.dimension(&ambient.sum(j)?)?)
    }

    /// `small ⊆ big`.
    pub fn contains_ideal(&self, big: &Ideal, small: &Ideal) -> Result<bool> {
        same_ring(big, small)?;
        let gb = self.groebner(big, &MonomialOrder::GrevLex)?;
        for g in small.gens() {
            if !gb.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality of ideals by mutual membership of generators.
    pub fn same_ideal(&self, a: &Ideal, b: &Ideal) -> Result<bool> {
        Ok(self.contains_ideal(a, b)? && self.contains_ideal(b, a)?)
    }
}

/// `dim S/M` for a monomial ideal `M` (`-1` for the unit ideal).
pub(crate) fn initial_dimension(m: &MonomialIdeal) -> i64 {
    if m.is_unit() {
        return -1;
    }
    let edges: Vec<u64> = m.gens().iter().map(|g| g.support_mask()).collect();
    (m.nvars() - combinatorics::min_cover_size(&edges)) as i64
}

