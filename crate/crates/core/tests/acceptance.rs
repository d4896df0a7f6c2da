//! Acceptance criteria, one line per criterion. Exits nonzero if any fails.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sqdeform::deformation::{
    check_specializations, theorem_check, weight_vector, HomogenizedIdeal, Verdict, WeightVector,
};
use sqdeform::gamma::{
    build_gamma, c_direct_oracle, component_counts, connectedness_dimension_graphwise,
    partition_connectivity_oracle, FamilyPrimes, PrimeFamily,
};
use sqdeform::io::{load_corpus, parse_polynomial, CorpusEntry};
use sqdeform::lyubeznik::lyubeznik_triple;
use sqdeform::{Engine, Ideal, Monomial, MonomialIdeal, MonomialOrder, Polynomial, RingDescriptor};

type Outcome = Result<String, String>;
type Criterion = (u32, Duration, fn() -> Outcome);

fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

fn entry(id: &str) -> CorpusEntry {
    CorpusEntry::load(&corpus_dir().join(format!("{id}.json"))).expect("corpus entry")
}

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn criterion_1() -> Outcome {
    let e = entry("xyz");
    let engine = Engine::default();
    let family = e.family(&engine).map_err(err)?;
    let g0 = build_gamma(&family, 0).map_err(err)?.component_count();
    let g1 = build_gamma(&family, 1).map_err(err)?.component_count();
    let c = connectedness_dimension_graphwise(&family);
    let oracle = c_direct_oracle(&engine, &family).map_err(err)?;
    ensure(g0 == 3, || format!("#Γ_0 = {g0}"))?;
    ensure(g1 == 1, || format!("#Γ_1 = {g1}"))?;
    ensure(c == 1 && oracle == 1, || format!("c = {c}, oracle = {oracle}"))?;
    Ok(format!("#Γ_0 = {g0}, #Γ_1 = {g1}, c = {c} = oracle"))
}

fn criterion_2() -> Outcome {
    let e = entry("x2y2");
    let engine = Engine::default();
    let family = e.family(&engine).map_err(err)?;
    let g0 = build_gamma(&family, 0).map_err(err)?;
    ensure(g0.vertices == 1 && g0.is_connected(), || format!("Γ_0 has {} vertices", g0.vertices))?;
    let report = theorem_check(&engine, &e.to_input().map_err(err)?).map_err(err)?;
    ensure(report.initial_ideal == ["x^2"], || format!("in(I) = {:?}", report.initial_ideal))?;
    ensure(!report.squarefree, || "in(I) reported square-free".into())?;
    ensure(report.overall == Verdict::NotApplicable, || format!("overall {:?}", report.overall))?;
    Ok("Γ_0 is one vertex, connected; in(I) = (x^2); NotApplicable".into())
}

fn criterion_3() -> Outcome {
    let e = entry("two_planes");
    let engine = Engine::default();
    let family = e.family(&engine).map_err(err)?;
    let FamilyPrimes::Variables(ps) = family.primes() else {
        return Err("expected variable primes".into());
    };
    let shown: Vec<String> = ps.iter().map(|p| p.display(&e.ring).to_string()).collect();
    ensure(shown == ["(x, y)", "(z, w)"], || format!("primes {shown:?}"))?;
    let g1 = build_gamma(&family, 1).map_err(err)?.component_count();
    ensure(g1 == 2, || format!("#Γ_1 = {g1}"))?;
    let c = connectedness_dimension_graphwise(&family);
    let oracle = c_direct_oracle(&engine, &family).map_err(err)?;
    ensure(c == 0 && oracle == 0, || format!("c = {c}, oracle = {oracle}"))?;
    let t = lyubeznik_triple(&family).map_err(err)?;
    ensure((t.lambda01, t.lambda12, t.lambda_top) == (1, 0, 1), || format!("triple {t:?}"))?;
    ensure(!t.caveats.is_empty(), || "missing d - 1 = 0 caveat".into())?;
    Ok("primes (x, y), (z, w); #Γ_1 = 2; c = 0 = oracle; λ = (1, 0, 1) with caveat".into())
}

fn criterion_4() -> Outcome {
    let e = entry("det2x3");
    let engine = Engine::default();
    let report = theorem_check(&engine, &e.to_input().map_err(err)?).map_err(err)?;
    ensure(report.initial_ideal == ["a*e", "a*f", "b*f"], || format!("in(I) = {:?}", report.initial_ideal))?;
    ensure(report.squarefree && report.equidimensional, || "hypotheses not met".into())?;
    ensure(report.dimension == 4, || format!("dim = {}", report.dimension))?;
    for t in 1..=3 {
        ensure(report.counts_ideal[t] == 1 && report.counts_initial[t] == 1, || {
            format!("counts at t = {t}: {} vs {}", report.counts_ideal[t], report.counts_initial[t])
        })?;
    }
    ensure(report.verdicts.get("connectedness_dimension") == Some(&Verdict::Pass), || "c differs".into())?;
    ensure(report.height_pairs.iter().all(|p| p.ideal == p.graded), || "height pairs differ".into())?;
    ensure(report.nzd_check && report.radical_check, || "parameter checks failed".into())?;
    let cmp = report.lyubeznik.as_ref().ok_or("no Lyubeznik comparison")?;
    ensure(cmp.all_equal() && cmp.lambda12_asserted, || format!("triples {cmp:?}"))?;
    ensure(report.overall == Verdict::Pass, || format!("verdicts {:?}", report.verdicts))?;
    Ok("in(I) = (ae, af, bf), dim 4, #Γ_t = 1 on [1, 3], c, heights, nzd, radical, λ all agree".into())
}

const PER_ENTRY_LIMIT: Duration = Duration::from_secs(10);

fn criterion_5() -> Outcome {
    let entries = load_corpus(&corpus_dir()).map_err(err)?;
    let engine = Engine::default();
    let mut slowest = Duration::ZERO;
    for (_, e) in &entries {
        let start = Instant::now();
        let gb = engine.groebner(&e.ideal().map_err(err)?, &e.order().map_err(err)?).map_err(err)?;
        let w = weight_vector(&gb).map_err(err)?;
        ensure(w.selects_leading_terms(&gb).map_err(err)?, || format!("{}: weight not strict", e.id))?;
        let h = HomogenizedIdeal::from_basis(&gb, &w).map_err(err)?;
        check_specializations(&engine, &h, &gb).map_err(|x| format!("{}: {x}", e.id))?;
        let elapsed = start.elapsed();
        ensure(elapsed < PER_ENTRY_LIMIT, || format!("{} took {elapsed:?}", e.id))?;
        slowest = slowest.max(elapsed);
    }
    Ok(format!("{} entries, slowest {slowest:?}", entries.len()))
}

fn criterion_6() -> Outcome {
    let entries = load_corpus(&corpus_dir()).map_err(err)?;
    let engine = Engine::default();
    let mut checked = 0;
    for (_, e) in &entries {
        let r = theorem_check(&engine, &e.to_input().map_err(err)?).map_err(err)?;
        let dusts_available = r.dust.iter().all(|d| matches!(d.dust, sqdeform::deformation::DustValue::Available(_)));
        if !r.squarefree || !r.equidimensional || !dusts_available {
            continue;
        }
        let big_d = r.dimension + 1;
        for t in 1..=(big_d - 2) {
            let t = t as usize;
            ensure(r.counts_graded[t] == r.counts_initial[t], || {
                format!("{}: #Γ_{t}(T/I^w) = {} vs {}", e.id, r.counts_graded[t], r.counts_initial[t])
            })?;
        }
        let (c_t, c_in) = (r.c_graded.ok_or("missing c_T")?, r.c_initial.ok_or("missing c_in")?);
        if r.primes.len() > 1 {
            ensure(c_t == c_in + 1, || format!("{}: c_T = {c_t}, c_in = {c_in}", e.id))?;
        } else {
            // one prime: both graphs are read through levels 1..=dim - 1
            ensure(c_t.min(big_d - 1) == c_in.min(r.dimension - 1) + 1, || {
                format!("{}: capped c_T = {c_t}, capped c_in = {c_in}", e.id)
            })?;
        }
        let union: BTreeSet<String> = r
            .dust
            .iter()
            .flat_map(|d| match &d.dust {
                sqdeform::deformation::DustValue::Available(v) => v.clone(),
                sqdeform::deformation::DustValue::Unavailable => Vec::new(),
            })
            .collect();
        let expected: BTreeSet<String> = r.initial_primes.iter().cloned().collect();
        ensure(union == expected, || format!("{}: dust union {union:?} vs {expected:?}", e.id))?;
        ensure(r.verdicts.get("dust_partition") == Some(&Verdict::Pass), || format!("{}: dust overlap", e.id))?;
        checked += 1;
    }
    ensure(checked >= 5, || format!("only {checked} entries qualified"))?;
    Ok(format!("{checked} square-free entries with dust"))
}

fn mask_to_vars(n: usize, s: u64) -> Vec<usize> {
    (0..n).filter(|i| s >> i & 1 == 1).collect()
}

/// Intersection of equal-height variable primes, so the ideal is
/// equidimensional with exactly those primes.
fn random_equidimensional(rng: &mut ChaCha8Rng) -> (usize, MonomialIdeal, BTreeSet<u64>) {
    let n = rng.gen_range(2..=6);
    let k = rng.gen_range(1..n);
    let mut subsets: Vec<u64> = (1u64..1 << n).filter(|s| s.count_ones() as usize == k).collect();
    subsets.shuffle(rng);
    let m = rng.gen_range(1..=subsets.len().min(5));
    let chosen: BTreeSet<u64> = subsets[..m].iter().copied().collect();
    let mut ideal: Option<MonomialIdeal> = None;
    for &s in &chosen {
        let p = MonomialIdeal::new(
            n,
            mask_to_vars(n, s).into_iter().map(|v| {
                let mut e = vec![0; n];
                e[v] = 1;
                Monomial::from_exponents(&e)
            }),
        )
        .expect("same ring");
        ideal = Some(match ideal {
            None => p,
            Some(acc) => acc.intersect(&p),
        });
    }
    (n, ideal.expect("at least one prime"), chosen)
}

fn brute_force_primes(m: &MonomialIdeal) -> BTreeSet<u64> {
    let n = m.nvars();
    let hits: Vec<u64> = (1u64..1 << n)
        .filter(|&s| m.gens().iter().all(|g| g.support_mask() & s != 0))
        .collect();
    hits.iter()
        .copied()
        .filter(|&s| !hits.iter().any(|&t| t != s && t & s == t))
        .collect()
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0007);
    let engine = Engine::default();
    let mut multi = 0;
    for round in 0..200 {
        let (n, m, chosen) = random_equidimensional(&mut rng);
        let family = PrimeFamily::from_monomial(&m).map_err(err)?;
        let FamilyPrimes::Variables(ps) = family.primes() else {
            return Err("expected variable primes".into());
        };
        let computed: BTreeSet<u64> = ps.iter().map(|p| p.mask()).collect();
        ensure(computed == brute_force_primes(&m) && computed == chosen, || {
            format!("round {round}: primes {computed:?} vs {chosen:?}")
        })?;
        let counts = component_counts(&family);
        ensure(counts.windows(2).all(|w| w[0] >= w[1]), || format!("round {round}: counts {counts:?}"))?;
        if family.len() >= 2 {
            multi += 1;
            for t in 0..=family.quotient_dim() {
                let graph = build_gamma(&family, t).map_err(err)?.is_connected();
                let oracle = partition_connectivity_oracle(&engine, &family, t).map_err(err)?;
                ensure(graph == oracle, || format!("round {round}, t = {t}: graph {graph}, oracle {oracle}"))?;
            }
            let c = connectedness_dimension_graphwise(&family);
            let direct = c_direct_oracle(&engine, &family).map_err(err)?;
            ensure(c == direct, || format!("round {round}: c = {c}, oracle = {direct}"))?;
        }

        // Height of a sum of intersections is the least pairwise height.
        let zero = Ideal::zero(n);
        let random_primes = |rng: &mut ChaCha8Rng| -> Vec<Ideal> {
            (0..rng.gen_range(1..=3))
                .map(|_| Ideal::variables(n, mask_to_vars(n, rng.gen_range(1u64..1 << n))))
                .collect()
        };
        let (left, right) = (random_primes(&mut rng), random_primes(&mut rng));
        let meet = |ps: &[Ideal]| -> Result<Ideal, String> {
            ps[1..].iter().try_fold(ps[0].clone(), |acc, q| engine.intersect(&acc, q).map_err(err))
        };
        let lhs = engine
            .height_in_quotient(&zero, &meet(&left)?.sum(&meet(&right)?).map_err(err)?)
            .map_err(err)?;
        let mut rhs = i64::MAX;
        for a in &left {
            for b in &right {
                rhs = rhs.min(engine.height_in_quotient(&zero, &a.sum(b).map_err(err)?).map_err(err)?);
            }
        }
        ensure(lhs == rhs, || format!("round {round}: ht of sum {lhs}, min pairwise {rhs}"))?;
    }
    Ok(format!("200 seeded ideals ({multi} with several primes)"))
}

fn criterion_8() -> Outcome {
    let r = RingDescriptor::new(["x", "y", "z"]).map_err(err)?;
    let rt = r.extended("t").map_err(err)?;
    let p = |ring: &RingDescriptor, s: &str| parse_polynomial(s, ring).map_err(err);
    let engine = Engine::default();
    let gens = vec![p(&r, "y - x^2")?, p(&r, "z - x^3")?];
    let w = WeightVector(vec![3, 5, 6]);
    let raw = HomogenizedIdeal::from_generators(&gens, &w).map_err(err)?;
    let expected = Ideal::new(4, [p(&rt, "x^2 - t*y")?, p(&rt, "x^3 - t^3*z")?]).map_err(err)?;
    ensure(engine.same_ideal(raw.ideal(), &expected).map_err(err)?, || "unexpected homogenization".into())?;
    let colon = engine.colon(raw.ideal(), &raw.t()).map_err(err)?;
    let witness: Polynomial = p(&rt, "x*y - t^2*z")?;
    let in_colon = engine.groebner(&colon, &MonomialOrder::GrevLex).map_err(err)?.contains(&witness).map_err(err)?;
    let in_ideal = engine.groebner(raw.ideal(), &MonomialOrder::GrevLex).map_err(err)?.contains(&witness).map_err(err)?;
    ensure(in_colon && !in_ideal, || "colon is not strictly larger".into())?;
    let gb = engine.groebner(&Ideal::new(3, gens).map_err(err)?, &MonomialOrder::GrevLex).map_err(err)?;
    let full = HomogenizedIdeal::from_basis(&gb, &w).map_err(err)?;
    let full_colon = engine.colon(full.ideal(), &full.t()).map_err(err)?;
    ensure(engine.same_ideal(&full_colon, full.ideal()).map_err(err)?, || "basis homogenization not saturated".into())?;
    Ok("raw generators: x*y - t^2*z in (H : t) \\ H; reduced basis: (H : t) = H".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        (1, Duration::from_secs(1), criterion_1),
        (2, Duration::from_secs(1), criterion_2),
        (3, Duration::from_secs(1), criterion_3),
        (4, Duration::from_secs(10), criterion_4),
        (5, Duration::from_secs(10 * 64), criterion_5),
        (6, Duration::from_secs(300), criterion_6),
        (7, Duration::from_secs(300), criterion_7),
        (8, Duration::from_secs(1), criterion_8),
    ];
    let mut failures = 0;
    for (k, limit, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|msg| {
            if elapsed <= limit {
                Ok(msg)
            } else {
                Err(format!("took {elapsed:?}, limit {limit:?}"))
            }
        });
        match outcome {
            Ok(msg) => println!("criterion {k}: PASS ({elapsed:.2?}) {msg}"),
            Err(msg) => {
                failures += 1;
                println!("criterion {k}: FAIL ({elapsed:.2?}) {msg}");
            }
        }
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
