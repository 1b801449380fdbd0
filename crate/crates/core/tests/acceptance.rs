//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::sync::Mutex;
use std::time::{Duration, Instant};

use antf_core::assprimes::{ass_of_powers, associated_primes, split_ass};
use antf_core::graphs::{
    classify_edge_ideal, connected_graphs_up_to_isomorphism, edge_ideal, eight_vertex_example,
    indecomposable_covers, minimal_vertex_covers, rees_generation_check, Graph,
};
use antf_core::irreducible::component_radicals;
use antf_core::simplicial::{
    facet_ideal, predicted_ass, step1_witness, verify_special_cycle_complex, SimplicialComplex,
};
use antf_core::tspread::{candidate_ass, classify, generate, BorelSpec};
use antf_core::{
    AssReport, Budget, Classification, Exp, Monomial, MonomialIdeal, MonomialPrime, PowersVerdict,
    PrimeSet,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

/// Every `AssReport` produced by criteria 2 to 6, for the persistence suite.
static REPORTS: Mutex<Vec<(String, AssReport)>> = Mutex::new(Vec::new());

fn record(label: impl Into<String>, report: &AssReport) {
    REPORTS.lock().unwrap().push((label.into(), report.clone()));
}

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn from_failures(failures: Vec<String>, summary: String) -> Self {
        if failures.is_empty() {
            Outcome {
                pass: true,
                detail: summary,
            }
        } else {
            let shown: Vec<_> = failures.iter().take(5).cloned().collect();
            Outcome {
                pass: false,
                detail: format!("{} failures; {}", failures.len(), shown.join("; ")),
            }
        }
    }
}

fn unlimited() -> Budget {
    Budget::unlimited()
}

fn prime(n: usize, vars: &[usize]) -> MonomialPrime {
    MonomialPrime::from_indices(n, vars.iter().copied()).unwrap()
}

fn complex(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
    SimplicialComplex::new(n, &facets.iter().map(|f| f.to_vec()).collect::<Vec<_>>()).unwrap()
}

fn criterion_1() -> Outcome {
    let spec = BorelSpec::new(3, 10, vec![3, 7, 10]).unwrap();
    let listed: PrimeSet = [
        &[7, 8, 9, 10][..],
        &[4, 8, 9, 10],
        &[4, 5, 9, 10],
        &[4, 5, 6, 10],
        &[1, 8, 9, 10],
        &[1, 5, 9, 10],
        &[1, 5, 6, 10],
        &[1, 2, 9, 10],
        &[1, 2, 6, 10],
        &[1, 2, 3],
        &[4, 5, 6, 7],
        &[1, 5, 6, 7],
        &[1, 2, 6, 7],
    ]
    .iter()
    .map(|p| prime(10, p))
    .collect();
    let oracle = associated_primes(&generate(&spec), &unlimited()).unwrap();
    let candidates = candidate_ass(&spec).unwrap();
    let mut failures = Vec::new();
    if oracle != listed {
        failures.push(format!("oracle has {} primes, differs from the list", oracle.len()));
    }
    if candidates != oracle {
        failures.push(format!("candidate_ass has {} primes", candidates.len()));
    }
    Outcome::from_failures(failures, format!("{} primes, oracle = list = candidates", oracle.len()))
}

fn criterion_2() -> Outcome {
    let g = eight_vertex_example();
    let ideal = edge_ideal(&g).unwrap();
    let report = ass_of_powers(&ideal, 3, &unlimited()).unwrap();
    record("eight-vertex graph", &report);
    let verdict = classify_edge_ideal(&g).unwrap();
    let min = report.min_primes.len();
    let ass2 = report.powers[&2].len();
    let mut failures = Vec::new();
    if min != 8 {
        failures.push(format!("|Min| = {min}"));
    }
    if ass2 != 13 {
        failures.push(format!("|Ass(I^2)| = {ass2}"));
    }
    if verdict.classification != Classification::NotAntf {
        failures.push(format!("classified {}", verdict.classification));
    }
    let cycle = verdict.failing_cycle.as_ref().map(|c| c.vertices().to_vec());
    if cycle != Some(vec![6, 7, 8]) {
        failures.push(format!("failing cycle {cycle:?}"));
    }
    if verdict.failing_closure != Some(vec![3, 4, 5, 6, 7, 8]) {
        failures.push(format!("closure {:?}", verdict.failing_closure));
    }
    Outcome::from_failures(
        failures,
        format!("|Min| = {min}, |Ass(I^2)| = {ass2}, NOT_ANTF via (6,7,8)"),
    )
}

/// Checks one connected graph against the oracle; `Err` describes a mismatch.
fn check_graph(g: &Graph) -> Result<Classification, String> {
    let label = format!("graph {:?}", g.edges());
    let verdict = classify_edge_ideal(g).map_err(|e| format!("{label}: {e}"))?;
    let ideal = edge_ideal(g).unwrap();
    let n = g.n();
    match verdict.classification {
        Classification::Ntf => {
            let report = ass_of_powers(&ideal, 4, &unlimited()).unwrap();
            record(label.clone(), &report);
            if report.verdict != (PowersVerdict::NtfUpToKmax { kmax: 4 }) {
                return Err(format!("{label}: NTF but oracle says {:?}", report.verdict));
            }
        }
        Classification::Antf => {
            let k = verdict.k_index.unwrap();
            let report = ass_of_powers(&ideal, (k + 2).max(3), &unlimited()).unwrap();
            record(label.clone(), &report);
            let mut with_max = report.min_primes.clone();
            with_max.insert(MonomialPrime::maximal(n));
            for m in 1..=k + 2 {
                let expected = if m <= k { &report.min_primes } else { &with_max };
                if &report.powers[&m] != expected {
                    return Err(format!("{label}: ANTF k={k} but Ass(I^{m}) differs"));
                }
            }
        }
        Classification::NotAntf => {
            let report = ass_of_powers(&ideal, 3, &unlimited()).unwrap();
            record(label.clone(), &report);
            let witness = |ass: &PrimeSet| {
                ass.iter()
                    .any(|p| !report.min_primes.contains(p) && !p.is_maximal())
            };
            let found = report.powers.values().any(witness)
                || witness(&associated_primes(&ideal.power(4), &unlimited()).unwrap());
            if !found {
                return Err(format!("{label}: NOT_ANTF but no intermediate prime up to power 4"));
            }
        }
        Classification::OracleOnly => return Err(format!("{label}: unexpected ORACLE_ONLY")),
    }
    Ok(verdict.classification)
}

fn criterion_3() -> Outcome {
    let graphs: Vec<Graph> = (2..=6).flat_map(connected_graphs_up_to_isomorphism).collect();
    let results: Vec<Result<Classification, String>> = graphs.par_iter().map(check_graph).collect();
    let failures: Vec<String> = results.iter().filter_map(|r| r.clone().err()).collect();
    let count = |c: Classification| results.iter().filter(|r| **r == Ok(c)).count();
    Outcome::from_failures(
        failures,
        format!(
            "{} graphs: {} NTF, {} ANTF, {} NOT_ANTF",
            graphs.len(),
            count(Classification::Ntf),
            count(Classification::Antf),
            count(Classification::NotAntf)
        ),
    )
}

fn criterion_4() -> Outcome {
    let cases = [
        ("triangle", complex(3, &[&[1, 2], &[2, 3], &[1, 3]])),
        ("125/236/134", complex(6, &[&[1, 2, 5], &[2, 3, 6], &[1, 3, 4]])),
        (
            "five facets",
            complex(8, &[&[1, 2, 6], &[2, 3], &[3, 4, 7], &[4, 5, 8], &[1, 5]]),
        ),
    ];
    let mut failures = Vec::new();
    for (name, delta) in &cases {
        let ideal = facet_ideal(delta);
        let report = ass_of_powers(&ideal, 3, &unlimited()).unwrap();
        record(*name, &report);
        for m in 1..=3 {
            if report.powers[&m] != predicted_ass(delta, m).unwrap() {
                failures.push(format!("{name}: Ass(I^{m}) differs from the prediction"));
            }
        }
        let verified = verify_special_cycle_complex(delta).unwrap();
        let s = verified.s() as u32;
        let u = step1_witness(delta).unwrap();
        let power = ideal.power(s + 1);
        let cycle_prime = MonomialIdeal::from_prime(&verified.cycle_prime(delta.n()));
        if power.contains(&u).unwrap() || power.colon(&u).unwrap() != cycle_prime {
            failures.push(format!("{name}: step-1 witness {u} fails"));
        }
    }
    let s_values: Vec<usize> = cases
        .iter()
        .map(|(_, d)| verify_special_cycle_complex(d).unwrap().s())
        .collect();
    Outcome::from_failures(
        failures,
        format!("3 complexes (s = {s_values:?}), powers 1..3 and step-1 witnesses match"),
    )
}

fn criterion_5() -> Outcome {
    let mut specs = Vec::new();
    for t in 1..=3 {
        for n in 2 * t..=9 {
            for i in t..=n - t {
                specs.push(BorelSpec::new(t, n, vec![i, n]).unwrap());
            }
        }
    }
    let results: Vec<Result<Classification, String>> = specs
        .par_iter()
        .map(|spec| {
            let verdict = classify(spec).map_err(|e| format!("{spec}: {e}"))?;
            let report = ass_of_powers(&generate(spec), 3, &unlimited()).unwrap();
            record(spec.to_string(), &report);
            let maximal = MonomialPrime::maximal(spec.n());
            let ok = match verdict.classification {
                Classification::Ntf => report.verdict == PowersVerdict::NtfUpToKmax { kmax: 3 },
                Classification::Antf => {
                    report.powers[&2].contains(&maximal)
                        && report.verdict
                            == PowersVerdict::AntfConsistent {
                                k: verdict.k_index.unwrap(),
                                prime: maximal,
                            }
                }
                _ => false,
            };
            if ok {
                Ok(verdict.classification)
            } else {
                Err(format!("{spec}: {} vs {:?}", verdict.classification, report.verdict))
            }
        })
        .collect();
    let failures: Vec<String> = results.iter().filter_map(|r| r.clone().err()).collect();
    let ntf = results.iter().filter(|r| **r == Ok(Classification::Ntf)).count();
    Outcome::from_failures(
        failures,
        format!("{} specs: {ntf} NTF, {} ANTF", specs.len(), specs.len() - ntf),
    )
}

fn criterion_6() -> Outcome {
    let mut specs = Vec::new();
    for t in 1..=2usize {
        for n in 3 * t..=3 * t + 3 {
            for i1 in t..=n {
                for i2 in i1 + t..=n {
                    if n >= i2 + t {
                        specs.push(BorelSpec::new(t, n, vec![i1, i2, n]).unwrap());
                    }
                }
            }
        }
    }
    let results: Vec<Result<Classification, String>> = specs
        .par_iter()
        .map(|spec| {
            let (t, n) = (spec.t(), spec.n());
            let verdict = classify(spec).map_err(|e| format!("{spec}: {e}"))?;
            let report = ass_of_powers(&generate(spec), 3, &unlimited()).unwrap();
            record(spec.to_string(), &report);
            let is_t2t = spec.indices() == [t, 2 * t, n];
            if is_t2t {
                if verdict.classification != Classification::Ntf
                    || report.verdict != (PowersVerdict::NtfUpToKmax { kmax: 3 })
                {
                    return Err(format!("{spec}: expected NTF, oracle {:?}", report.verdict));
                }
            } else {
                let p1: Vec<usize> = (t + 1..=n).collect();
                let p2: Vec<usize> = (1..t).chain(2 * t..=n).collect();
                for p in [prime(n, &p1), prime(n, &p2)] {
                    if !report.powers[&2].contains(&p) || report.powers[&1].contains(&p) {
                        return Err(format!("{spec}: {p} not in Ass(I^2) minus Ass(I)"));
                    }
                }
                if verdict.classification != Classification::NotAntf {
                    return Err(format!("{spec}: classified {}", verdict.classification));
                }
            }
            Ok(verdict.classification)
        })
        .collect();
    let failures: Vec<String> = results.iter().filter_map(|r| r.clone().err()).collect();
    let ntf = results.iter().filter(|r| **r == Ok(Classification::Ntf)).count();
    Outcome::from_failures(
        failures,
        format!("{} specs: {ntf} of the form x_t x_2t x_n, rest show both primes", specs.len()),
    )
}

/// All antichains of the exponent box `{0..=max}^n`, excluding the empty one.
fn antichains(n: usize, max: Exp) -> Vec<Vec<Monomial>> {
    let mut elems = Vec::new();
    let mut exps = vec![0 as Exp; n];
    loop {
        elems.push(Monomial::new(exps.clone()));
        let mut pos = 0;
        while pos < n && exps[pos] == max {
            exps[pos] = 0;
            pos += 1;
        }
        if pos == n {
            break;
        }
        exps[pos] += 1;
    }
    fn rec(elems: &[Monomial], i: usize, chosen: &mut Vec<Monomial>, out: &mut Vec<Vec<Monomial>>) {
        if i == elems.len() {
            if !chosen.is_empty() {
                out.push(chosen.clone());
            }
            return;
        }
        rec(elems, i + 1, chosen, out);
        let m = &elems[i];
        let comparable = chosen
            .iter()
            .any(|c| c.divides(m).unwrap() || m.divides(c).unwrap());
        if !comparable {
            chosen.push(m.clone());
            rec(elems, i + 1, chosen, out);
            chosen.pop();
        }
    }
    let mut out = Vec::new();
    rec(&elems, 0, &mut Vec::new(), &mut out);
    out
}

fn is_testable(ideal: &MonomialIdeal) -> bool {
    let n = ideal.ambient();
    let maximal = ideal.generators().len() == n && ideal.generators().iter().all(|g| g.degree() == 1);
    !ideal.is_zero() && !ideal.is_unit() && !maximal
}

fn compare_oracles(ideal: &MonomialIdeal) -> Option<String> {
    let b = unlimited();
    let direct = associated_primes(ideal, &b).unwrap();
    let radicals = component_radicals(ideal, &b).unwrap();
    (direct != radicals).then(|| format!("{ideal}: {direct:?} vs {radicals:?}"))
}

fn criterion_7() -> Outcome {
    let mut exhaustive = Vec::new();
    for n in 1..=3 {
        for gens in antichains(n, 2) {
            let ideal = MonomialIdeal::new(n, gens).unwrap();
            if is_testable(&ideal) {
                exhaustive.push(ideal);
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut random = Vec::new();
    while random.len() < 250 {
        let n = rng.gen_range(1..=5);
        let count = rng.gen_range(1..=6);
        let gens = (0..count)
            .map(|_| Monomial::new((0..n).map(|_| rng.gen_range(0..=3)).collect()))
            .collect();
        let ideal = MonomialIdeal::new(n, gens).unwrap();
        if is_testable(&ideal) {
            random.push(ideal);
        }
    }
    let failures: Vec<String> = exhaustive
        .par_iter()
        .chain(random.par_iter())
        .filter_map(compare_oracles)
        .collect();
    Outcome::from_failures(
        failures,
        format!("{} exhaustive + {} random ideals agree", exhaustive.len(), random.len()),
    )
}

fn random_block_ideal(rng: &mut ChaCha8Rng, ambient: usize, block: std::ops::Range<usize>) -> MonomialIdeal {
    loop {
        let count = rng.gen_range(1..=3);
        let gens = (0..count)
            .map(|_| {
                let mut exps = vec![0 as Exp; ambient];
                for v in block.clone() {
                    exps[v] = rng.gen_range(0..=2);
                }
                Monomial::new(exps)
            })
            .collect();
        let ideal = MonomialIdeal::new(ambient, gens).unwrap();
        if !ideal.is_unit() {
            return ideal;
        }
    }
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut pairs = Vec::new();
    while pairs.len() < 60 {
        let (n1, n2) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
        let n = n1 + n2;
        let first = random_block_ideal(&mut rng, n, 0..n1);
        let second = random_block_ideal(&mut rng, n, n1..n);
        if is_testable(&first.sum(&second).unwrap()) {
            pairs.push((first, second));
        }
    }
    let failures: Vec<String> = pairs
        .par_iter()
        .flat_map_iter(|(first, second)| {
            let b = unlimited();
            let sum = first.sum(second).unwrap();
            (1..=3u32).filter_map(move |k| {
                let combined = split_ass(first, second, k, &b).unwrap();
                let direct = associated_primes(&sum.power(k), &b).unwrap();
                (combined != direct).then(|| format!("{first} + {second}, k = {k}"))
            })
        })
        .collect();
    Outcome::from_failures(failures, format!("{} pairs, powers 1..3 agree", pairs.len()))
}

fn criterion_9() -> Outcome {
    let graphs: Vec<Graph> = (3..=6)
        .flat_map(connected_graphs_up_to_isomorphism)
        .filter(|g| !g.is_bipartite())
        .collect();
    let failures: Vec<String> = graphs
        .par_iter()
        .filter_map(|g| {
            let verdict = classify_edge_ideal(g).unwrap();
            let rees = rees_generation_check(g).unwrap();
            if rees != (verdict.classification != Classification::NotAntf) {
                return Some(format!("{:?}: rees {rees}, {}", g.edges(), verdict.classification));
            }
            let covers: BTreeSet<Vec<u32>> = indecomposable_covers(g, 1).into_iter().collect();
            let minimal: BTreeSet<Vec<u32>> = minimal_vertex_covers(g)
                .into_iter()
                .map(|c| (1..=g.n()).map(|v| c.contains(v) as u32).collect())
                .collect();
            (covers != minimal).then(|| format!("{:?}: order-1 covers differ", g.edges()))
        })
        .collect();
    Outcome::from_failures(
        failures,
        format!("{} non-bipartite connected graphs", graphs.len()),
    )
}

fn criterion_10() -> Outcome {
    let reports = REPORTS.lock().unwrap();
    let mut failures = Vec::new();
    for (label, report) in reports.iter() {
        if !report.powers.contains_key(&3) {
            failures.push(format!("{label}: power 3 missing"));
        }
        for k in report.persistence_violations() {
            if k <= 2 {
                failures.push(format!("{label}: Ass(I^{k}) not inside Ass(I^{})", k + 1));
            }
        }
    }
    Outcome::from_failures(failures, format!("{} ideals, no violations", reports.len()))
}

type Criterion = (u32, fn() -> Outcome, Duration);

fn main() {
    let criteria: [Criterion; 10] = [
        (1, criterion_1, Duration::from_secs(60)),
        (2, criterion_2, Duration::from_secs(300)),
        (3, criterion_3, Duration::from_secs(1800)),
        (4, criterion_4, Duration::from_secs(600)),
        (5, criterion_5, Duration::from_secs(1800)),
        (6, criterion_6, Duration::from_secs(1800)),
        (7, criterion_7, Duration::from_secs(600)),
        (8, criterion_8, Duration::from_secs(600)),
        (9, criterion_9, Duration::from_secs(600)),
        (10, criterion_10, Duration::from_secs(60)),
    ];
    let only: Option<u32> = std::env::var("ACCEPTANCE_ONLY").ok().and_then(|v| v.parse().ok());
    let mut failed = 0;
    for (id, run, limit) in criteria {
        if only.is_some_and(|o| o != id) {
            continue;
        }
        let start = Instant::now();
        let mut outcome = run();
        let elapsed = start.elapsed();
        if elapsed > limit {
            outcome.pass = false;
            outcome.detail.push_str(&format!("; exceeded {}s", limit.as_secs()));
        }
        let status = if outcome.pass { "PASS" } else { "FAIL" };
        if !outcome.pass {
            failed += 1;
        }
        println!(
            "criterion {id:>2}: {status} ({:.1}s) {}",
            elapsed.as_secs_f64(),
            outcome.detail
        );
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
