//! Corpus entries: one ideal per JSON file.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::parse_polynomial;
use crate::deformation::DeformationInput;
use crate::error::{Error, Result};
use crate::gamma::PrimeFamily;
use crate::groebner::{Engine, Ideal, Limits};
use crate::polyring::{MonomialOrder, RingDescriptor};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TieSpec {
    Lex,
    Grevlex,
}

/// `{"type": "lex"}`, `{"type": "grevlex"}` or
/// `{"type": "weight", "w": [...], "tie": "lex" | "grevlex"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum OrderSpec {
    Lex,
    Grevlex,
    Weight { w: Vec<u64>, tie: TieSpec },
}

impl OrderSpec {
    pub fn to_order(&self) -> MonomialOrder {
        let base = |t: TieSpec| match t {
            TieSpec::Lex => MonomialOrder::Lex,
            TieSpec::Grevlex => MonomialOrder::GrevLex,
        };
        match self {
            OrderSpec::Lex => MonomialOrder::Lex,
            OrderSpec::Grevlex => MonomialOrder::GrevLex,
            OrderSpec::Weight { w, tie } => MonomialOrder::weight(w.clone(), base(*tie)),
        }
    }

    /// Accepts `lex`, `grevlex`, `weight:3,5,6:lex`, or the JSON form.
    pub fn parse(s: &str) -> Result<OrderSpec> {
        let s = s.trim();
        if s.starts_with('{') {
            return serde_json::from_str(s).map_err(|e| Error::InvalidOrder(e.to_string()));
        }
        let tie = |t: &str| match t {
            "lex" => Ok(TieSpec::Lex),
            "grevlex" => Ok(TieSpec::Grevlex),
            other => Err(Error::InvalidOrder(format!("unknown tie order {other:?}"))),
        };
        match s.split(':').collect::<Vec<_>>().as_slice() {
            ["lex"] => Ok(OrderSpec::Lex),
            ["grevlex"] => Ok(OrderSpec::Grevlex),
            ["weight", w, t] => {
                let w = w
                    .split(',')
                    .map(|x| x.trim().parse::<u64>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|e| Error::InvalidOrder(format!("bad weight: {e}")))?;
                Ok(OrderSpec::Weight { w, tie: tie(t)? })
            }
            _ => Err(Error::InvalidOrder(format!("cannot parse order {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EntryLimits {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_steps: Option<u64>,
}

fn yes() -> bool {
    true
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorpusEntry {
    pub id: String,
    pub ring: RingDescriptor,
    pub ideal: Vec<String>,
    pub order: OrderSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub declared_min_primes: Option<Vec<Vec<String>>>,
    #[serde(default = "yes")]
    pub assume_absolutely_prime: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub limits: Option<EntryLimits>,
}

fn parse_ideal(ring: &RingDescriptor, gens: &[String], what: &str) -> Result<Ideal> {
    let polys = gens
        .iter()
        .enumerate()
        .map(|(k, s)| {
            parse_polynomial(s, ring).map_err(|e| match e {
                Error::Parse { line, column, message } => Error::Parse {
                    line,
                    column,
                    message: format!("{what}, generator {k}: {message}"),
                },
                other => other,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(ring.n(), polys)
}

impl CorpusEntry {
    pub fn from_json(src: &str) -> Result<CorpusEntry> {
        let entry: CorpusEntry = serde_json::from_str(src).map_err(|e| Error::InvalidEntry(e.to_string()))?;
        entry.validate()?;
        Ok(entry)
    }

    pub fn load(path: &Path) -> Result<CorpusEntry> {
        let src = fs::read_to_string(path)?;
        CorpusEntry::from_json(&src).map_err(|e| match e {
            Error::InvalidEntry(m) => Error::InvalidEntry(format!("{}: {m}", path.display())),
            other => other,
        })
    }

    /// Parses every polynomial and checks that non-monomial ideals come with
    /// declared primes.
    pub fn validate(&self) -> Result<()> {
        if self.ideal.is_empty() {
            return Err(Error::InvalidEntry(format!("{}: the ideal has no generators", self.id)));
        }
        self.order()?;
        let ideal = self.ideal()?;
        let primes = self.declared_primes()?;
        if primes.is_none() && !ideal.is_monomial() {
            return Err(Error::InvalidEntry(format!(
                "{}: a non-monomial ideal needs declared_min_primes",
                self.id
            )));
        }
        Ok(())
    }

    pub fn ideal(&self) -> Result<Ideal> {
        parse_ideal(&self.ring, &self.ideal, "ideal")
    }

    pub fn declared_primes(&self) -> Result<Option<Vec<Ideal>>> {
        self.declared_min_primes
            .as_ref()
            .map(|ps| {
                ps.iter()
                    .enumerate()
                    .map(|(k, p)| parse_ideal(&self.ring, p, &format!("prime {k}")))
                    .collect()
            })
            .transpose()
    }

    pub fn order(&self) -> Result<MonomialOrder> {
        let order = self.order.to_order();
        order.validate(self.ring.n())?;
        Ok(order)
    }

    /// An engine with this entry's overrides applied to `defaults`.
    pub fn engine(&self, defaults: Limits) -> Engine {
        let max_steps = self
            .limits
            .as_ref()
            .and_then(|l| l.max_steps)
            .unwrap_or(defaults.max_steps);
        Engine::new(Limits { max_steps })
    }

    pub fn to_input(&self) -> Result<DeformationInput> {
        Ok(DeformationInput {
            id: self.id.clone(),
            ring: self.ring.clone(),
            ideal: self.ideal()?,
            order: self.order()?,
            declared_primes: self.declared_primes()?,
            assume_absolutely_prime: self.assume_absolutely_prime,
        })
    }

    /// The minimal primes of `S/I`: the declared ones, or those of the
    /// radical of a monomial ideal.
    pub fn family(&self, engine: &Engine) -> Result<PrimeFamily> {
        let ideal = self.ideal()?;
        match self.declared_primes()? {
            Some(ps) => PrimeFamily::declared(engine, &ideal, ps),
            None => {
                let m = ideal
                    .as_monomial_ideal()
                    .ok_or_else(|| Error::InvalidEntry("a non-monomial ideal needs declared_min_primes".into()))?;
                PrimeFamily::from_monomial(&m)
            }
        }
    }
}

/// Every `*.json` file in `dir`, sorted by file name.
pub fn load_corpus(dir: &Path) -> Result<Vec<(PathBuf, CorpusEntry)>> {
    let mut paths: Vec<PathBuf> = fs::read_dir(dir)?
        .map(|e| e.map(|e| e.path()))
        .collect::<std::io::Result<Vec<_>>>()?
        .into_iter()
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    paths
        .into_iter()
        .map(|p| CorpusEntry::load(&p).map(|e| (p, e)))
        .collect()
}
