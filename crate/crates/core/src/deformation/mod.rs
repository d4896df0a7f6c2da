//! Deformation to the initial ideal: weight vectors, homogenization inside
//! `S[t]`, specializations at `t = 0, 1`, parameter checks, dust, and the
//! end-to-end comparison of Γ-graph invariants.

mod check;
mod weights;

pub use check::{
    theorem_check, DeformationInput, DeformationReport, DustValue, HeightPair, PrimeReport, Verdict,
};
pub use weights::{weight_vector, WeightVector};

use serde::{Deserialize, Serialize};

use crate::combinatorics::{MonomialIdeal, VariablePrime};
use crate::error::{Error, Result};
use crate::groebner::{initial_ideal, Engine, Ideal, ReducedGroebnerBasis};
use crate::polyring::{Coefficient, Monomial, MonomialOrder, Polynomial};

/// `f^w = t^{deg_w f} f(x_1 / t^{w_1}, ..., x_n / t^{w_n})`, with `t`
/// appended as the last variable.
pub fn homogenize_polynomial(f: &Polynomial, w: &WeightVector) -> Result<Polynomial> {
    let Some(top) = f.weight_degree(w.as_slice())? else {
        return Ok(f.extend_vars(1));
    };
    let mut terms = Vec::with_capacity(f.len());
    for (c, m) in f.terms() {
        let shift = top - crate::polyring::weight_degree(w.as_slice(), m)?;
        let shift = u32::try_from(shift).map_err(|_| Error::Unsupported("exponent of t overflows".into()))?;
        terms.push((c.clone(), m.extended(shift)));
    }
    Ok(Polynomial::from_terms(f.nvars() + 1, terms))
}

/// Generators of a homogenization in `S[t]`, `t` being the last variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogenizedIdeal {
    ideal: Ideal,
    w: WeightVector,
}

impl HomogenizedIdeal {
    /// The homogenization of `I` from its reduced basis, which generates
    /// `I^w` when `w` selects the leading terms of the basis.
    pub fn from_basis(basis: &ReducedGroebnerBasis, w: &WeightVector) -> Result<Self> {
        if !w.selects_leading_terms(basis)? {
            return Err(Error::Contract("weight does not select the leading terms of the basis".into()));
        }
        Self::from_generators(basis.basis(), w)
    }

    /// Homogenizes arbitrary generators. The result may generate less than
    /// `I^w`.
    pub fn from_generators(gens: &[Polynomial], w: &WeightVector) -> Result<Self> {
        let nvars = gens
            .first()
            .map(Polynomial::nvars)
            .ok_or_else(|| Error::Contract("no generators to homogenize".into()))?;
        if w.as_slice().len() != nvars {
            return Err(Error::DimensionMismatch {
                expected: nvars,
                found: w.as_slice().len(),
            });
        }
        let hom = gens
            .iter()
            .map(|g| homogenize_polynomial(g, w))
            .collect::<Result<Vec<_>>>()?;
        Ok(HomogenizedIdeal {
            ideal: Ideal::new(nvars + 1, hom)?,
            w: w.clone(),
        })
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn weights(&self) -> &WeightVector {
        &self.w
    }

    /// Index of `t`.
    pub fn t_index(&self) -> usize {
        self.ideal.nvars() - 1
    }

    pub fn t(&self) -> Polynomial {
        Polynomial::var(self.ideal.nvars(), self.t_index())
    }
}

/// Where to set `t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Specialization {
    Zero,
    One,
}

/// Substitutes `t = 0` or `t = 1` in every generator.
pub fn specialize(h: &HomogenizedIdeal, at: Specialization) -> Ideal {
    let value = match at {
        Specialization::Zero => Coefficient::from_integer(0.into()),
        Specialization::One => Coefficient::from_integer(1.into()),
    };
    let n = h.ideal.nvars() - 1;
    let gens = h.ideal.gens().iter().map(|g| g.substitute_last(&value));
    Ideal::new(n, gens).expect("same ring")
}

/// Checks `H|_{t=0} = in(I)` and `H|_{t=1} = I` by mutual membership.
pub fn check_specializations(engine: &Engine, h: &HomogenizedIdeal, basis: &ReducedGroebnerBasis) -> Result<()> {
    let at_zero = specialize(h, Specialization::Zero);
    if !engine.same_ideal(&at_zero, &initial_ideal(basis).to_ideal())? {
        return Err(Error::DeformationIntegrity("t = 0 does not give the initial ideal".into()));
    }
    let at_one = specialize(h, Specialization::One);
    if !engine.same_ideal(&at_one, &basis.to_ideal())? {
        return Err(Error::DeformationIntegrity("t = 1 does not give the original ideal".into()));
    }
    Ok(())
}

/// Whether `t` is a non-zero-divisor on `T/H` and `(t)` is radical there.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParameterChecks {
    pub nzd: bool,
    pub radical: bool,
}

/// `nzd` iff `(H : t) = H`; `radical` iff the initial ideal is square-free.
pub fn parameter_checks(engine: &Engine, h: &HomogenizedIdeal, initial: &MonomialIdeal) -> Result<ParameterChecks> {
    Ok(ParameterChecks {
        nzd: is_t_regular(engine, h.ideal(), &h.t())?,
        radical: initial.is_squarefree(),
    })
}

pub(crate) fn is_t_regular(engine: &Engine, ideal: &Ideal, t: &Polynomial) -> Result<bool> {
    let colon = engine.colon(ideal, t)?;
    engine.contains_ideal(ideal, &colon)
}

/// The order used for primes under the deformation: `w` first, then `tie`.
pub fn weight_order(w: &WeightVector, tie: &MonomialOrder) -> MonomialOrder {
    MonomialOrder::weight(w.as_slice().to_vec(), tie.clone())
}

/// `p^w`, homogenized from the reduced basis of `p` under `(w, tie)`.
pub fn homogenize_ideal(engine: &Engine, p: &Ideal, w: &WeightVector, tie: &MonomialOrder) -> Result<HomogenizedIdeal> {
    let gb = engine.groebner(p, &weight_order(w, tie))?;
    if gb.basis().is_empty() {
        return Ok(HomogenizedIdeal {
            ideal: Ideal::zero(p.nvars() + 1),
            w: w.clone(),
        });
    }
    HomogenizedIdeal::from_generators(gb.basis(), w)
}

/// Minimal primes of `p^w + (t)` as variable primes of `S`, available when
/// every `w`-initial form of the reduced basis of `p` under `(w, tie)` is a
/// single term.
pub fn dust(engine: &Engine, p: &Ideal, w: &WeightVector, tie: &MonomialOrder) -> Result<Option<Vec<VariablePrime>>> {
    let gb = engine.groebner(p, &weight_order(w, tie))?;
    let mut leads: Vec<Monomial> = Vec::with_capacity(gb.basis().len());
    for g in gb.basis() {
        let form = g.weight_initial_form(w.as_slice())?;
        if !form.is_monomial() {
            return Ok(None);
        }
        leads.push(form.terms()[0].1.clone());
    }
    let m = MonomialIdeal::new(p.nvars(), leads)?;
    Ok(Some(m.radical().minimal_primes()?))
}
