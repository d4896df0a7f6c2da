//! Positive integer weight vectors selecting the leading terms of a reduced
//! basis, found by exact Fourier–Motzkin elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::ReducedGroebnerBasis;
use crate::polyring::weight_degree;

/// A vector of positive integer weights, one per variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightVector(pub Vec<u64>);

impl WeightVector {
    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    /// True when, for every basis element, the weight of the leading
    /// monomial strictly exceeds the weight of every other monomial.
    pub fn selects_leading_terms(&self, basis: &ReducedGroebnerBasis) -> Result<bool> {
        if self.0.len() != basis.nvars() || self.0.contains(&0) {
            return Ok(false);
        }
        for (g, lead) in basis.basis().iter().zip(basis.leading_monomials()) {
            let top = weight_degree(&self.0, lead)?;
            for (_, m) in g.terms() {
                if m != lead && weight_degree(&self.0, m)? >= top {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// `a · w >= rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Constraint {
    a: Vec<BigRational>,
    rhs: BigRational,
}

impl Constraint {
    /// Scales so the first nonzero coefficient has absolute value one.
    fn normalized(mut self) -> Constraint {
        if let Some(pivot) = self.a.iter().find(|c| !c.is_zero()).map(|c| c.abs()) {
            for c in &mut self.a {
                *c /= &pivot;
            }
            self.rhs /= pivot;
        }
        self
    }
}

const MAX_CONSTRAINTS: usize = 50_000;

fn dedup(system: Vec<Constraint>) -> Vec<Constraint> {
    let mut out: Vec<Constraint> = Vec::with_capacity(system.len());
    let mut seen = std::collections::HashSet::new();
    for c in system {
        let c = c.normalized();
        if seen.insert(c.clone()) {
            out.push(c);
        }
    }
    out
}

fn eliminate(system: &[Constraint], v: usize) -> Result<Vec<Constraint>> {
    let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
    for c in system {
        if c.a[v].is_positive() {
            pos.push(c);
        } else if c.a[v].is_negative() {
            neg.push(c);
        } else {
            rest.push(c.clone());
        }
    }
    for p in &pos {
        for q in &neg {
            // p.a[v] > 0 > q.a[v]: combine so the v coefficient cancels
            let (sp, sq) = (-q.a[v].clone(), p.a[v].clone());
            let a = p
                .a
                .iter()
                .zip(&q.a)
                .map(|(x, y)| x * &sp + y * &sq)
                .collect();
            rest.push(Constraint {
                a,
                rhs: &p.rhs * &sp + &q.rhs * &sq,
            });
        }
    }
    let out = dedup(rest);
    if out.len() > MAX_CONSTRAINTS {
        return Err(Error::Internal(format!(
            "weight search exceeded {MAX_CONSTRAINTS} constraints"
        )));
    }
    Ok(out)
}

fn ceil(q: &BigRational) -> BigRational {
    BigRational::from_integer(q.ceil().to_integer())
}

fn solve(n: usize, system: Vec<Constraint>) -> Result<Vec<BigRational>> {
    let mut stages = vec![dedup(system)];
    let mut order = Vec::with_capacity(n);
    let mut remaining: Vec<usize> = (0..n).collect();
    while !remaining.is_empty() {
        let current = stages.last().expect("nonempty");
        // eliminate the variable producing the fewest new constraints
        let (slot, &v) = remaining
            .iter()
            .enumerate()
            .min_by_key(|(_, &v)| {
                let p = current.iter().filter(|c| c.a[v].is_positive()).count();
                let q = current.iter().filter(|c| c.a[v].is_negative()).count();
                (p * q, v)
            })
            .expect("nonempty");
        let next = eliminate(current, v)?;
        stages.push(next);
        order.push(v);
        remaining.remove(slot);
    }
    if stages.last().expect("nonempty").iter().any(|c| c.rhs.is_positive()) {
        return Err(Error::Internal("weight inequalities are infeasible".into()));
    }
    let mut w = vec![BigRational::zero(); n];
    for (k, &v) in order.iter().enumerate().rev() {
        let mut lower: Option<BigRational> = None;
        let mut upper: Option<BigRational> = None;
        for c in &stages[k] {
            if c.a[v].is_zero() {
                continue;
            }
            let others: BigRational = c
                .a
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != v)
                .map(|(i, x)| x * &w[i])
                .sum();
            let bound = (&c.rhs - others) / &c.a[v];
            if c.a[v].is_positive() {
                lower = Some(lower.map_or(bound.clone(), |l| l.max(bound)));
            } else {
                upper = Some(upper.map_or(bound.clone(), |u| u.min(bound)));
            }
        }
        let lower = lower.ok_or_else(|| Error::Internal("variable without a lower bound".into()))?;
        let value = match &upper {
            Some(u) if ceil(&lower) > *u => lower,
            _ => ceil(&lower),
        };
        if upper.as_ref().is_some_and(|u| value > *u) {
            return Err(Error::Internal("back substitution left an empty interval".into()));
        }
        w[v] = value;
    }
    Ok(w)
}

fn to_integers(w: &[BigRational]) -> Result<Vec<u64>> {
    let lcm = w.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let ints: Vec<BigInt> = w.iter().map(|q| (q * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let gcd = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    ints.iter()
        .map(|x| {
            (x / &gcd)
                .to_u64()
                .filter(|&v| v > 0)
                .ok_or_else(|| Error::Internal("weight does not fit a positive u64".into()))
        })
        .collect()
}

/// A positive integer weight vector `w` with `w · lead > w · m` for every
/// other monomial `m` of every basis element.
pub fn weight_vector(basis: &ReducedGroebnerBasis) -> Result<WeightVector> {
    let n = basis.nvars();
    let mut system = Vec::new();
    for v in 0..n {
        let mut a = vec![BigRational::zero(); n];
        a[v] = BigRational::one();
        system.push(Constraint {
            a,
            rhs: BigRational::one(),
        });
    }
    for (g, lead) in basis.basis().iter().zip(basis.leading_monomials()) {
        for (_, m) in g.terms() {
            if m == lead {
                continue;
            }
            let a = lead
                .exponents()
                .iter()
                .zip(m.exponents())
                .map(|(&x, &y)| BigRational::from_integer(BigInt::from(x as i64 - y as i64)))
                .collect();
            system.push(Constraint {
                a,
                rhs: BigRational::one(),
            });
        }
    }
    let w = WeightVector(to_integers(&solve(n, system)?)?);
    if !w.selects_leading_terms(basis)? {
        return Err(Error::Internal("computed weight does not select the leading terms".into()));
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::{Engine, Ideal};
    use crate::io::parse_polynomial;
    use crate::polyring::{Coefficient, Monomial, MonomialOrder, Polynomial, RingDescriptor};
    use proptest::prelude::*;

    fn basis(names: &[&str], gens: &[&str], order: MonomialOrder) -> ReducedGroebnerBasis {
        let r = RingDescriptor::new(names.iter().copied()).unwrap();
        let ideal = Ideal::new(r.n(), gens.iter().map(|s| parse_polynomial(s, &r).unwrap())).unwrap();
        Engine::default().groebner(&ideal, &order).unwrap()
    }

    #[test]
    fn twisted_cubic_lex() {
        let g = basis(&["x", "y", "z"], &["y - x^2", "z - x^3"], MonomialOrder::Lex);
        let w = weight_vector(&g).unwrap();
        assert!(w.selects_leading_terms(&g).unwrap());
        // (3, 5, 6) fails on x*z - y^2 but works for the grevlex basis
        assert!(!WeightVector(vec![3, 5, 6]).selects_leading_terms(&g).unwrap());
        assert!(!WeightVector(vec![1, 1, 1]).selects_leading_terms(&g).unwrap());
        let grevlex = basis(&["x", "y", "z"], &["y - x^2", "z - x^3"], MonomialOrder::GrevLex);
        assert!(WeightVector(vec![3, 5, 6]).selects_leading_terms(&grevlex).unwrap());
        assert!(weight_vector(&grevlex).unwrap().selects_leading_terms(&grevlex).unwrap());
    }

    #[test]
    fn monomial_basis_gets_unit_weights() {
        let g = basis(&["x", "y", "z"], &["x*y", "z^2"], MonomialOrder::Lex);
        assert_eq!(weight_vector(&g).unwrap(), WeightVector(vec![1, 1, 1]));
    }

    #[test]
    fn principal_quadric() {
        let g = basis(&["x", "y"], &["x^2 + y^2"], MonomialOrder::Lex);
        let w = weight_vector(&g).unwrap();
        assert!(w.0[0] > w.0[1]);
        assert!(WeightVector(vec![2, 1]).selects_leading_terms(&g).unwrap());
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec((-3i64..=3, prop::collection::vec(0u32..=2, 3)), 1..=3).prop_map(|terms| {
            Polynomial::from_terms(
                3,
                terms
                    .into_iter()
                    .map(|(c, e)| (Coefficient::from_integer(c.into()), Monomial::from_exponents(&e))),
            )
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn weights_select_leading_terms(
            gens in prop::collection::vec(arb_poly(), 1..=3),
            lex in any::<bool>(),
        ) {
            let order = if lex { MonomialOrder::Lex } else { MonomialOrder::GrevLex };
            let ideal = Ideal::new(3, gens).unwrap();
            let g = Engine::default().groebner(&ideal, &order).unwrap();
            let w = weight_vector(&g).unwrap();
            prop_assert!(w.selects_leading_terms(&g).unwrap());
            let weighted = Engine::default()
                .groebner(&ideal, &MonomialOrder::weight(w.0.clone(), order.clone()))
                .unwrap();
            let key = |b: &ReducedGroebnerBasis| {
                let mut v: Vec<String> = b.basis().iter().map(|p| format!("{p:?}")).collect();
                v.sort();
                v
            };
            prop_assert_eq!(key(&weighted), key(&g));
        }
    }
}
