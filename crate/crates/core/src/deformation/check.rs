//! End-to-end comparison of Γ-graph invariants of `S/I` and `S/in(I)`.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::{
    check_specializations, dust, homogenize_ideal, is_t_regular, parameter_checks, weight_vector,
    HomogenizedIdeal, ParameterChecks,
};
use crate::combinatorics::VariablePrime;
use crate::error::{Error, Result};
use crate::gamma::{
    build_gamma, component_counts, connectedness_dimension_graphwise, partitions, FamilyPrimes, PrimeFamily,
};
use crate::groebner::{initial_ideal, Engine, Ideal};
use crate::lyubeznik::{compare_triples, LyubeznikComparison};
use crate::polyring::{MonomialOrder, RingDescriptor};

/// Largest prime count for which every partition is colon-tested.
const TOR_MAX_PRIMES: usize = 12;

/// Everything needed to check one ideal.
#[derive(Clone, Debug)]
pub struct DeformationInput {
    pub id: String,
    pub ring: RingDescriptor,
    pub ideal: Ideal,
    pub order: MonomialOrder,
    /// Required unless the ideal is monomial.
    pub declared_primes: Option<Vec<Ideal>>,
    pub assume_absolutely_prime: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Pass,
    Fail,
    NotApplicable,
}

impl Verdict {
    fn from_bool(ok: bool) -> Verdict {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeReport {
    pub generators: Vec<String>,
    pub contains_ambient: bool,
    pub radical_checked: bool,
    pub declared_prime: bool,
}

/// `ht(p_i + p_j)` in `S/I` next to `ht(p_i^w + p_j^w)` in `T/I^w`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeightPair {
    pub i: usize,
    pub j: usize,
    pub ideal: i64,
    pub graded: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum DustValue {
    Available(Vec<String>),
    Unavailable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DustRecord {
    pub prime: usize,
    pub dust: DustValue,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeformationReport {
    pub id: String,
    pub ring: Vec<String>,
    pub order: String,
    pub generators: Vec<String>,
    pub groebner_basis: Vec<String>,
    pub initial_ideal: Vec<String>,
    pub squarefree: bool,
    pub equidimensional: bool,
    pub dimension: i64,
    pub assume_absolutely_prime: bool,
    pub primes: Vec<PrimeReport>,
    pub initial_primes: Vec<String>,
    pub weight: Vec<u64>,
    pub t_variable: String,
    pub homogenized: Vec<String>,
    /// `#Γ_t(S/I)` for `t = 0..=dim`.
    #[serde(rename = "counts_I")]
    pub counts_ideal: Vec<usize>,
    #[serde(rename = "counts_in")]
    pub counts_initial: Vec<usize>,
    /// `#Γ_t(T/I^w)` for `t = 0..=dim + 1`.
    #[serde(rename = "counts_T")]
    pub counts_graded: Vec<usize>,
    #[serde(rename = "c_I")]
    pub c_ideal: Option<i64>,
    #[serde(rename = "c_in")]
    pub c_initial: Option<i64>,
    #[serde(rename = "c_T")]
    pub c_graded: Option<i64>,
    pub height_pairs: Vec<HeightPair>,
    pub nzd_check: bool,
    pub radical_check: bool,
    pub dust: Vec<DustRecord>,
    pub lyubeznik: Option<LyubeznikComparison>,
    pub verdicts: BTreeMap<String, Verdict>,
    pub overall: Verdict,
    pub notes: Vec<String>,
}

impl DeformationReport {
    pub fn failures(&self) -> Vec<&str> {
        self.verdicts
            .iter()
            .filter(|(_, v)| **v == Verdict::Fail)
            .map(|(k, _)| k.as_str())
            .collect()
    }
}

fn show_ideal(ideal: &Ideal, ring: &RingDescriptor) -> Vec<String> {
    ideal.gens().iter().map(|g| g.display(ring).to_string()).collect()
}

fn show_prime(p: &VariablePrime, ring: &RingDescriptor) -> String {
    p.display(ring).to_string()
}

fn prime_reports(family: &PrimeFamily, ring: &RingDescriptor) -> Vec<PrimeReport> {
    (0..family.len())
        .map(|i| {
            let check = family.verified()[i];
            PrimeReport {
                generators: show_ideal(&family.primes().ideal(i), ring),
                contains_ambient: check.contains_ambient,
                radical_checked: check.radical_checked,
                declared_prime: check.declared_prime,
            }
        })
        .collect()
}

/// `min(c, d - 1)`: the connectedness dimension read only through the graphs
/// `Γ_t` with `1 <= t <= d`.
fn capped(c: i64, d: i64) -> i64 {
    c.min(d - 1)
}

struct Builder {
    verdicts: BTreeMap<String, Verdict>,
    notes: Vec<String>,
}

impl Builder {
    fn set(&mut self, key: &str, v: Verdict) {
        self.verdicts.insert(key.to_string(), v);
    }

    fn check(&mut self, key: &str, ok: bool, why: impl FnOnce() -> String) {
        self.set(key, Verdict::from_bool(ok));
        if !ok {
            self.notes.push(format!("{key}: {}", why()));
        }
    }
}

/// Compares the Γ-graph invariants of `S/I` and `S/in(I)` and checks the
/// supporting facts about the homogenization `I^w`.
///
/// A non-square-free initial ideal or a non-equidimensional `S/I` yields a
/// report whose overall verdict is `NotApplicable`. Declared primes that fail
/// verification are an error.
pub fn theorem_check(engine: &Engine, input: &DeformationInput) -> Result<DeformationReport> {
    let ring = &input.ring;
    let n = ring.n();
    input.ideal.check_ring(ring)?;
    input.order.validate(n)?;
    if input.ideal.is_zero() {
        return Err(Error::Contract("the zero ideal has no minimal primes to compare".into()));
    }
    let gb = engine.groebner(&input.ideal, &input.order)?;
    if gb.is_unit() {
        return Err(Error::Contract("the ideal is the unit ideal".into()));
    }
    let initial = initial_ideal(&gb);
    let squarefree = initial.is_squarefree();
    let t_name = ring.fresh_name("t");
    let t_ring = ring.extended(&t_name)?;
    let mut b = Builder {
        verdicts: BTreeMap::new(),
        notes: vec![
            "component counts are computed over the base field; no separably closed residue field is assumed"
                .into(),
            "component counts are compared for 1 <= t <= dim S/I - 1, against both S/I and T/I^w; other levels are informational"
                .into(),
        ],
    };
    if !input.assume_absolutely_prime {
        b.notes
            .push("declared primes are not assumed absolutely prime; ideal-side values hold over the base field only".into());
    }

    let w = weight_vector(&gb)?;
    b.set("weight_validity", Verdict::from_bool(w.selects_leading_terms(&gb)?));
    let h = HomogenizedIdeal::from_basis(&gb, &w)?;
    match check_specializations(engine, &h, &gb) {
        Ok(()) => b.set("homogenization_integrity", Verdict::Pass),
        Err(Error::DeformationIntegrity(why)) => b.check("homogenization_integrity", false, || why),
        Err(e) => return Err(e),
    }
    let ParameterChecks { nzd, radical } = parameter_checks(engine, &h, &initial)?;

    let d = engine.dimension(&input.ideal)?;
    b.check("dimension_agreement", initial.dimension()? == d, || {
        "dim S/I differs from dim S/in(I)".into()
    });

    let family = match &input.declared_primes {
        Some(ps) => PrimeFamily::declared(engine, &input.ideal, ps.clone()),
        None => match input.ideal.as_monomial_ideal() {
            Some(m) => PrimeFamily::from_monomial(&m),
            None => Err(Error::InvalidEntry(
                "a non-monomial ideal needs declared minimal primes".into(),
            )),
        },
    };
    let family = match family {
        Ok(f) => Some(f),
        Err(Error::NotEquidimensional { dims, ambient }) => {
            b.notes.push(format!(
                "S/I is not equidimensional: prime dimensions {dims:?}, ring dimension {ambient}"
            ));
            None
        }
        Err(e) => return Err(e),
    };
    let equidimensional = family.is_some();

    let mut report = DeformationReport {
        id: input.id.clone(),
        ring: ring.names().to_vec(),
        order: input.order.to_string(),
        generators: show_ideal(&input.ideal, ring),
        groebner_basis: show_ideal(&gb.to_ideal(), ring),
        initial_ideal: initial.gens().iter().map(|m| {
            let mut s = String::new();
            crate::polyring::write_monomial(&mut s, m, ring).expect("string write");
            s
        }).collect(),
        squarefree,
        equidimensional,
        dimension: d,
        assume_absolutely_prime: input.assume_absolutely_prime,
        primes: family.as_ref().map(|f| prime_reports(f, ring)).unwrap_or_default(),
        initial_primes: Vec::new(),
        weight: w.as_slice().to_vec(),
        t_variable: t_name,
        homogenized: show_ideal(h.ideal(), &t_ring),
        counts_ideal: family.as_ref().map(component_counts).unwrap_or_default(),
        counts_initial: Vec::new(),
        counts_graded: Vec::new(),
        c_ideal: family.as_ref().map(connectedness_dimension_graphwise),
        c_initial: None,
        c_graded: None,
        height_pairs: Vec::new(),
        nzd_check: nzd,
        radical_check: radical,
        dust: Vec::new(),
        lyubeznik: None,
        verdicts: BTreeMap::new(),
        overall: Verdict::NotApplicable,
        notes: Vec::new(),
    };
    b.set("parameter_nzd", Verdict::from_bool(nzd));
    b.set(
        "squarefree_initial_ideal",
        if squarefree { Verdict::Pass } else { Verdict::NotApplicable },
    );
    b.set(
        "equidimensional",
        if equidimensional { Verdict::Pass } else { Verdict::NotApplicable },
    );

    let gated = match family {
        Some(f) if squarefree => {
            compare(engine, input, &mut report, &mut b, &f, &initial, &h, &w)?;
            false
        }
        _ => true,
    };
    if !squarefree {
        b.notes
            .push("the initial ideal is not square-free; the comparison does not apply".into());
    }

    let any_fail = b.verdicts.values().any(|v| *v == Verdict::Fail);
    report.overall = if any_fail {
        Verdict::Fail
    } else if gated {
        Verdict::NotApplicable
    } else {
        Verdict::Pass
    };
    report.verdicts = b.verdicts;
    report.notes = b.notes;
    Ok(report)
}

#[allow(clippy::too_many_arguments)]
fn compare(
    engine: &Engine,
    input: &DeformationInput,
    report: &mut DeformationReport,
    b: &mut Builder,
    family: &PrimeFamily,
    initial: &crate::combinatorics::MonomialIdeal,
    h: &HomogenizedIdeal,
    w: &super::WeightVector,
) -> Result<()> {
    let ring = &input.ring;
    let d = family.quotient_dim();
    b.set("parameter_radical", Verdict::from_bool(report.radical_check));

    let initial_family = match PrimeFamily::from_monomial(initial) {
        Ok(f) => f,
        Err(Error::NotEquidimensional { dims, .. }) => {
            b.check("initial_equidimensional", false, || {
                format!("S/in(I) is not equidimensional: prime dimensions {dims:?}")
            });
            return Ok(());
        }
        Err(e) => return Err(e),
    };
    b.set("initial_equidimensional", Verdict::Pass);
    let FamilyPrimes::Variables(initial_primes) = initial_family.primes() else {
        unreachable!("monomial families hold variable primes")
    };
    report.initial_primes = initial_primes.iter().map(|p| show_prime(p, ring)).collect();
    report.counts_initial = component_counts(&initial_family);
    let c_ideal = connectedness_dimension_graphwise(family);
    let c_initial = connectedness_dimension_graphwise(&initial_family);
    report.c_initial = Some(c_initial);
    if family.len() == 1 {
        b.notes.push(format!(
            "single minimal prime: graph-derived c(S/I) = {c_ideal}; c values are compared after capping at dim - 1"
        ));
    }

    let range: Vec<usize> = (1..d.max(1)).map(|t| t as usize).collect();
    if range.is_empty() {
        b.set("component_counts", Verdict::NotApplicable);
    } else {
        let bad: Vec<usize> = range
            .iter()
            .copied()
            .filter(|&t| report.counts_ideal[t] != report.counts_initial[t])
            .collect();
        b.check("component_counts", bad.is_empty(), || format!("counts differ at t = {bad:?}"));
    }
    b.check(
        "connectedness_dimension",
        capped(c_ideal, d) == capped(c_initial, d),
        || format!("capped c(S/I) = {}, capped c(S/in(I)) = {}", capped(c_ideal, d), capped(c_initial, d)),
    );

    // The primes p_i^w of T/I^w.
    let lifted = (0..family.len())
        .map(|i| Ok(homogenize_ideal(engine, &family.primes().ideal(i), w, &input.order)?.ideal().clone()))
        .collect::<Result<Vec<Ideal>>>()?;
    let graded = match PrimeFamily::declared_unchecked_radical(engine, h.ideal(), lifted) {
        Ok(f) => f,
        Err(Error::NotEquidimensional { dims, .. }) => {
            b.check("graded_family", false, || {
                format!("T/I^w is not equidimensional over the lifted primes: {dims:?}")
            });
            return Ok(());
        }
        Err(e) => return Err(e),
    };
    let big_d = graded.quotient_dim();
    b.check("graded_dimension", big_d == d + 1, || {
        format!("dim T/I^w = {big_d}, expected {}", d + 1)
    });
    report.height_pairs = (0..family.len())
        .flat_map(|i| (i + 1..family.len()).map(move |j| (i, j)))
        .map(|(i, j)| HeightPair {
            i,
            j,
            ideal: family.heights()[i][j],
            graded: graded.heights()[i][j],
        })
        .collect();
    let bad_pairs: Vec<(usize, usize)> = report
        .height_pairs
        .iter()
        .filter(|p| p.ideal != p.graded)
        .map(|p| (p.i, p.j))
        .collect();
    b.check("height_pairs", bad_pairs.is_empty(), || format!("heights differ for pairs {bad_pairs:?}"));

    report.counts_graded = component_counts(&graded);
    let c_graded = connectedness_dimension_graphwise(&graded);
    report.c_graded = Some(c_graded);
    if big_d >= 3 && big_d == d + 1 {
        let bad: Vec<i64> = (1..=big_d - 2)
            .filter(|&t| report.counts_graded[t as usize] != report.counts_initial[t as usize])
            .collect();
        b.check("graded_component_counts", bad.is_empty(), || {
            format!("#Γ_t(T/I^w) and #Γ_t(S/in(I)) differ at t = {bad:?}")
        });
        let (lhs, rhs) = (capped(c_graded, big_d), capped(c_initial, d) + 1);
        b.check("graded_connectedness", lhs == rhs, || {
            format!("capped c(T/I^w) = {lhs}, capped c(S/in(I)) + 1 = {rhs}")
        });
    } else {
        b.set("graded_component_counts", Verdict::NotApplicable);
        b.set("graded_connectedness", Verdict::NotApplicable);
    }

    // Dust of each prime modulo t.
    let dusts = (0..family.len())
        .map(|i| dust(engine, &family.primes().ideal(i), w, &input.order))
        .collect::<Result<Vec<_>>>()?;
    report.dust = dusts
        .iter()
        .enumerate()
        .map(|(i, d)| DustRecord {
            prime: i,
            dust: match d {
                Some(ps) => DustValue::Available(ps.iter().map(|p| show_prime(p, ring)).collect()),
                None => DustValue::Unavailable,
            },
        })
        .collect();
    if dusts.iter().all(Option::is_some) {
        let dusts: Vec<BTreeSet<VariablePrime>> =
            dusts.into_iter().map(|d| d.expect("available").into_iter().collect()).collect();
        let union: BTreeSet<VariablePrime> = dusts.iter().flatten().copied().collect();
        let expected: BTreeSet<VariablePrime> = initial_primes.iter().copied().collect();
        let mut ok = union == expected;
        for t in 1..=big_d {
            let parts = build_gamma(&graded, t)?.component_partition();
            for (a, pa) in parts.iter().enumerate() {
                for pb in &parts[a + 1..] {
                    for &i in pa {
                        for &j in pb {
                            ok &= dusts[i].is_disjoint(&dusts[j]);
                        }
                    }
                }
            }
        }
        b.check("dust_partition", ok, || {
            "dusts do not partition the minimal primes of in(I) along the components".into()
        });
    } else {
        b.set("dust_partition", Verdict::NotApplicable);
    }

    // t must stay regular modulo the homogenized block intersections.
    let l = family.len();
    if (2..=TOR_MAX_PRIMES).contains(&l) {
        let meet = |idx: &[usize]| -> Result<Ideal> {
            idx[1..].iter().try_fold(family.primes().ideal(idx[0]), |acc, &k| {
                engine.intersect(&acc, &family.primes().ideal(k))
            })
        };
        let mut ok = true;
        for (s, t) in partitions(l) {
            let a = homogenize_ideal(engine, &meet(&s)?, w, &input.order)?;
            let bb = homogenize_ideal(engine, &meet(&t)?, w, &input.order)?;
            let sum = a.ideal().sum(bb.ideal())?.sum(h.ideal())?;
            if !is_t_regular(engine, &sum, &h.t())? {
                ok = false;
                b.notes.push(format!("t is a zero divisor modulo the blocks {s:?} | {t:?}"));
            }
        }
        b.set("tor_colon", Verdict::from_bool(ok));
    } else {
        b.set("tor_colon", Verdict::NotApplicable);
    }

    if d >= 2 {
        let cmp = compare_triples(family, &initial_family)?;
        b.check("lyubeznik", cmp.all_equal(), || "Lyubeznik triples differ".into());
        report.lyubeznik = Some(cmp);
    } else {
        b.set("lyubeznik", Verdict::NotApplicable);
    }
    Ok(())
}
