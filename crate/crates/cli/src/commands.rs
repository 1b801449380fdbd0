use std::collections::BTreeMap;

use antf_core::assprimes::{
    ass_of_powers, associated_primes, combine_disjoint_tables, minimal_primes, powers_verdict,
};
use antf_core::format::Input;
use antf_core::graphs::{
    classify_edge_ideal, edge_ideal, indecomposable_covers, minimal_vertex_covers,
    rees_generation_check, Cycle, Graph, GraphError, GraphVerdict,
};
use antf_core::irreducible::component_radicals;
use antf_core::simplicial::{classify_complex, facet_ideal, predicted_ass};
use antf_core::tspread::{self, candidate_ass, generate};
use antf_core::{
    AlgebraError, AssReport, Budget, Classification, MonomialIdeal, MonomialPrime, PowersVerdict,
    PrimeSet, VarSet,
};

use crate::report::{
    AssTable, CandidateCheck, CheckStatus, ClassificationReport, ComponentVerdict,
    CompositeVerdict, InputEcho, ObstructionCheck, PowerCheck, ReesReport, Report, Verification,
};
use crate::{CliError, Command, RunConfig, Theorem};

/// Largest graph for which order-1 covers are enumerated in `rees-check`.
const MAX_COVER_ENUMERATION: usize = 14;

pub(crate) fn dispatch(
    config: &RunConfig,
    input: &Input,
    budget: &Budget,
) -> Result<Report, CliError> {
    check_which(config.which, input)?;
    let echo = InputEcho {
        kind: input.kind(),
        text: input.to_text(),
    };
    let mut report = Report::new(config.command, echo, config.kmax);
    match config.command {
        Command::AssPowers => report.ass = Some(ass_table(input, config.kmax, budget)?),
        Command::Classify => report.classification = Some(classify(config, input)?),
        Command::Verify => verify(config, input, budget, &mut report)?,
        Command::OracleCompare => oracle_compare(input, config.kmax, budget, &mut report)?,
        Command::ReesCheck => report.rees = Some(rees(input)?),
    }
    report.settle();
    Ok(report)
}

fn check_which(which: Theorem, input: &Input) -> Result<(), CliError> {
    let ok = matches!(
        (which, input),
        (Theorem::Auto, _)
            | (Theorem::Graph, Input::Graph(_))
            | (Theorem::SpecialCycle, Input::Complex(_))
            | (Theorem::Deg2 | Theorem::Tspread | Theorem::Ass, Input::Tspread(_))
    );
    if !ok {
        return Err(CliError::Config(format!(
            "--which {} does not apply to a {} input",
            clap::ValueEnum::to_possible_value(&which)
                .map(|v| v.get_name().to_string())
                .unwrap_or_default(),
            input.kind()
        )));
    }
    Ok(())
}

fn ideal_of(input: &Input) -> Result<MonomialIdeal, CliError> {
    Ok(match input {
        Input::Graph(g) => edge_ideal(g)?,
        Input::Complex(c) => facet_ideal(c),
        Input::Tspread(s) => generate(s),
    })
}

/// Components with at least one edge, and the isolated vertices.
fn split_components(g: &Graph) -> (Vec<VarSet>, Vec<usize>) {
    let mut blocks = Vec::new();
    let mut isolated = Vec::new();
    for comp in g.components() {
        if comp.len() >= 2 {
            blocks.push(comp);
        } else {
            isolated.extend(comp.iter());
        }
    }
    (blocks, isolated)
}

fn block_ideal(ideal: &MonomialIdeal, block: VarSet) -> MonomialIdeal {
    let gens = ideal
        .generators()
        .iter()
        .filter(|m| m.support().is_subset_of(block))
        .cloned()
        .collect();
    MonomialIdeal::new(ideal.ambient(), gens).expect("same ambient")
}

fn table_from_report(report: AssReport, composite: bool) -> AssTable {
    AssTable {
        min_primes: report.min_primes,
        powers: report.powers,
        verdict: report.verdict,
        composite,
        budget_exhausted_at: report.budget_exhausted_at,
    }
}

fn ass_table(input: &Input, kmax: u32, budget: &Budget) -> Result<AssTable, CliError> {
    let ideal = ideal_of(input)?;
    if let Input::Graph(g) = input {
        let (blocks, _) = split_components(g);
        if blocks.len() > 1 {
            return composite_table(g, &ideal, &blocks, kmax, budget);
        }
    }
    Ok(table_from_report(ass_of_powers(&ideal, kmax, budget)?, false))
}

/// `Ass(I(G)^k)` from the components' tables, up to the depth every
/// component finished within the budget.
fn composite_table(
    g: &Graph,
    ideal: &MonomialIdeal,
    blocks: &[VarSet],
    kmax: u32,
    budget: &Budget,
) -> Result<AssTable, CliError> {
    let reports = blocks
        .iter()
        .map(|&b| ass_of_powers(&block_ideal(ideal, b), kmax, budget))
        .collect::<Result<Vec<_>, _>>()?;
    let depth = reports.iter().map(|r| r.powers.len()).min().unwrap_or(0);
    let tables: Vec<Vec<PrimeSet>> = reports
        .iter()
        .map(|r| r.powers.values().take(depth).cloned().collect())
        .collect();
    let combined = combine_disjoint_tables(&tables, g.n())?;
    let powers: BTreeMap<u32, PrimeSet> = (1..).zip(combined).collect();
    let min_primes = minimal_primes(ideal)?;
    let verdict = powers_verdict(&min_primes, &powers);
    Ok(AssTable {
        min_primes,
        powers,
        verdict,
        composite: true,
        budget_exhausted_at: ((depth as u32) < kmax).then_some(depth as u32 + 1),
    })
}

fn relabel_verdict(v: GraphVerdict, labels: &[usize]) -> GraphVerdict {
    let map = |x: usize| labels[x - 1];
    GraphVerdict {
        failing_cycle: v
            .failing_cycle
            .map(|c| Cycle::new(c.vertices().iter().map(|&x| map(x)).collect())),
        failing_closure: v.failing_closure.map(|cl| {
            let mut out: Vec<usize> = cl.into_iter().map(map).collect();
            out.sort_unstable();
            out
        }),
        ..v
    }
}

fn composite_verdict(g: &Graph) -> Result<CompositeVerdict, CliError> {
    let (blocks, isolated) = split_components(g);
    let components = blocks
        .into_iter()
        .map(|block| {
            let (sub, labels) = g.induced(block);
            let verdict = classify_edge_ideal(&sub)?;
            Ok(ComponentVerdict {
                vertices: labels.clone(),
                verdict: relabel_verdict(verdict, &labels),
            })
        })
        .collect::<Result<Vec<_>, GraphError>>()?;
    Ok(CompositeVerdict {
        classification: Classification::OracleOnly,
        components,
        isolated_vertices: isolated,
    })
}

fn classify(config: &RunConfig, input: &Input) -> Result<ClassificationReport, CliError> {
    match input {
        Input::Graph(g) => match classify_edge_ideal(g) {
            Ok(v) => Ok(ClassificationReport::Graph(v)),
            Err(GraphError::Disconnected(_) | GraphError::IsolatedVertices(_))
                if config.composite =>
            {
                Ok(ClassificationReport::Composite(composite_verdict(g)?))
            }
            Err(e @ (GraphError::Disconnected(_) | GraphError::IsolatedVertices(_))) => {
                Err(CliError::Hypothesis {
                    message: e.to_string(),
                    hint: "the classifier needs a connected graph without isolated vertices; \
                           rerun with --composite to work component by component"
                        .into(),
                })
            }
            Err(e) => Err(e.into()),
        },
        Input::Complex(c) => {
            let v = classify_complex(c);
            if config.which == Theorem::SpecialCycle && v.cycle_complex.is_none() {
                return Err(antf_core::simplicial::SimplicialError::NotSpecialOddCycle.into());
            }
            Ok(ClassificationReport::Complex(v))
        }
        Input::Tspread(s) => {
            let expected = match config.which {
                Theorem::Deg2 => Some(2),
                Theorem::Tspread => Some(3),
                _ => None,
            };
            if let Some(d) = expected {
                if s.degree() != d {
                    return Err(tspread::TspreadError::WrongDegree {
                        expected: d,
                        found: s.degree(),
                    }
                    .into());
                }
            }
            Ok(ClassificationReport::Tspread(tspread::classify(s)?))
        }
    }
}

fn with_prime(set: &PrimeSet, p: MonomialPrime) -> PrimeSet {
    let mut out = set.clone();
    out.insert(p);
    out
}

/// `Min` up to `k` and `Min ∪ {p}` beyond.
fn antf_table(min: &PrimeSet, k: u32, p: Option<MonomialPrime>, kmax: u32) -> Vec<PrimeSet> {
    (1..=kmax)
        .map(|m| match p {
            Some(p) if m > k => with_prime(min, p),
            _ => min.clone(),
        })
        .collect()
}

/// Closed-form `Ass(I^m)` for `m = 1..=kmax`, or `None` where nothing is
/// predicted.
fn predictions(
    input: &Input,
    cls: &ClassificationReport,
    which: Theorem,
    min: &PrimeSet,
    kmax: u32,
) -> Result<Vec<Option<PrimeSet>>, CliError> {
    let none = vec![None; kmax as usize];
    let wrap = |v: Vec<PrimeSet>| v.into_iter().map(Some).collect::<Vec<_>>();
    Ok(match (cls, input) {
        (ClassificationReport::Graph(v), Input::Graph(g)) => match v.classification {
            Classification::Ntf => wrap(antf_table(min, kmax, None, kmax)),
            Classification::Antf => wrap(antf_table(
                min,
                v.k_index.unwrap(),
                Some(MonomialPrime::maximal(g.n())),
                kmax,
            )),
            _ => none,
        },
        (ClassificationReport::Composite(c), Input::Graph(g)) => {
            let ideal = edge_ideal(g)?;
            let mut tables = Vec::new();
            for comp in &c.components {
                let block = VarSet::from_indices(comp.vertices.iter().copied());
                let block_min = minimal_primes(&block_ideal(&ideal, block))?;
                let cycle_prime = MonomialPrime::new(g.n(), block)?;
                let table = match comp.verdict.classification {
                    Classification::Ntf => antf_table(&block_min, kmax, None, kmax),
                    Classification::Antf => antf_table(
                        &block_min,
                        comp.verdict.k_index.unwrap(),
                        Some(cycle_prime),
                        kmax,
                    ),
                    _ => return Ok(none),
                };
                tables.push(table);
            }
            wrap(combine_disjoint_tables(&tables, g.n())?)
        }
        (ClassificationReport::Complex(v), Input::Complex(c)) => match v.classification {
            Classification::Ntf => wrap(antf_table(min, kmax, None, kmax)),
            Classification::Antf => (1..=kmax)
                .map(|m| predicted_ass(c, m).map(Some))
                .collect::<Result<_, _>>()?,
            _ => none,
        },
        (ClassificationReport::Tspread(v), Input::Tspread(_)) if which != Theorem::Ass => {
            match v.classification {
                Classification::Ntf => wrap(antf_table(min, kmax, None, kmax)),
                Classification::Antf => wrap(antf_table(
                    min,
                    v.k_index.unwrap(),
                    v.extra_prime,
                    kmax,
                )),
                _ => none,
            }
        }
        _ => none,
    })
}

fn compare(predicted: Option<&PrimeSet>, oracle: &PrimeSet) -> PowerCheck {
    let Some(predicted) = predicted else {
        return PowerCheck {
            status: CheckStatus::Unpredicted,
            predicted: None,
            missing: Vec::new(),
            unexpected: Vec::new(),
        };
    };
    let missing: Vec<_> = predicted.difference(oracle).copied().collect();
    let unexpected: Vec<_> = oracle.difference(predicted).copied().collect();
    let status = if missing.is_empty() && unexpected.is_empty() {
        CheckStatus::Match
    } else {
        CheckStatus::Mismatch
    };
    PowerCheck {
        status,
        predicted: Some(predicted.clone()),
        missing,
        unexpected,
    }
}

fn candidate_check(v: &tspread::TspreadVerdict, oracle: &PrimeSet) -> Option<CandidateCheck> {
    let norm = &v.normalized;
    if !norm.exact {
        return None;
    }
    let candidates: PrimeSet = candidate_ass(&norm.spec)
        .ok()?
        .iter()
        .map(|p| norm.prime_to_original(p))
        .collect();
    let unrealized: Vec<_> = candidates.difference(oracle).copied().collect();
    let unexpected: Vec<_> = oracle.difference(&candidates).copied().collect();
    let status = match (unexpected.is_empty(), unrealized.is_empty()) {
        (true, true) => CheckStatus::Match,
        (true, false) => CheckStatus::Superset,
        (false, _) => CheckStatus::Mismatch,
    };
    Some(CandidateCheck {
        status,
        candidates,
        unrealized,
        unexpected,
    })
}

fn obstruction_check(cls: &ClassificationReport, table: &AssTable) -> Option<ObstructionCheck> {
    match cls {
        ClassificationReport::Graph(v) if v.classification == Classification::NotAntf => {
            Some(match &table.verdict {
                PowersVerdict::Neither { extra_primes, .. } => ObstructionCheck {
                    status: CheckStatus::Match,
                    primes: extra_primes.clone(),
                },
                _ => ObstructionCheck {
                    status: CheckStatus::NotObserved,
                    primes: Vec::new(),
                },
            })
        }
        ClassificationReport::Tspread(v) if !v.obstruction_primes.is_empty() => {
            let (Some(first), Some(second)) = (table.powers.get(&1), table.powers.get(&2)) else {
                return Some(ObstructionCheck {
                    status: CheckStatus::NotObserved,
                    primes: v.obstruction_primes.clone(),
                });
            };
            let all_new = v
                .obstruction_primes
                .iter()
                .all(|p| second.contains(p) && !first.contains(p));
            Some(ObstructionCheck {
                status: if all_new {
                    CheckStatus::Match
                } else {
                    CheckStatus::Mismatch
                },
                primes: v.obstruction_primes.clone(),
            })
        }
        _ => None,
    }
}

fn verify(
    config: &RunConfig,
    input: &Input,
    budget: &Budget,
    report: &mut Report,
) -> Result<(), CliError> {
    let cls = classify(config, input)?;
    let table = ass_table(input, config.kmax, budget)?;
    let predicted = predictions(input, &cls, config.which, &table.min_primes, config.kmax)?;
    let powers = table
        .powers
        .iter()
        .map(|(&k, oracle)| (k, compare(predicted[k as usize - 1].as_ref(), oracle)))
        .collect();
    let candidates = match (&cls, table.powers.get(&1)) {
        (ClassificationReport::Tspread(v), Some(first)) => candidate_check(v, first),
        _ => None,
    };
    let obstruction = obstruction_check(&cls, &table);
    report.verification = Some(Verification {
        theorem: config.which,
        powers,
        candidates,
        obstruction,
    });
    report.classification = Some(cls);
    report.ass = Some(table);
    Ok(())
}

fn oracle_compare(
    input: &Input,
    kmax: u32,
    budget: &Budget,
    report: &mut Report,
) -> Result<(), CliError> {
    let ideal = ideal_of(input)?;
    let min_primes = minimal_primes(&ideal)?;
    let mut powers = BTreeMap::new();
    let mut statuses = BTreeMap::new();
    let mut exhausted = None;
    let mut current = ideal.clone();
    for k in 1..=kmax {
        if k > 1 {
            current = current.product(&ideal)?;
        }
        let pair = associated_primes(&current, budget)
            .and_then(|a| component_radicals(&current, budget).map(|b| (a, b)));
        match pair {
            Ok((direct, radicals)) => {
                let status = if direct == radicals {
                    CheckStatus::Match
                } else {
                    CheckStatus::Mismatch
                };
                statuses.insert(k, status);
                powers.insert(k, direct);
            }
            Err(AlgebraError::Budget(_)) => {
                exhausted = Some(k);
                break;
            }
            Err(e) => return Err(e.into()),
        }
    }
    let verdict = powers_verdict(&min_primes, &powers);
    report.ass = Some(AssTable {
        min_primes,
        powers,
        verdict,
        composite: false,
        budget_exhausted_at: exhausted,
    });
    report.oracle_compare = Some(statuses);
    Ok(())
}

fn rees(input: &Input) -> Result<ReesReport, CliError> {
    let Input::Graph(g) = input else {
        return Err(CliError::Config(format!(
            "rees-check needs a graph input, got {}",
            input.kind()
        )));
    };
    let hypothesis = |e: GraphError| CliError::Hypothesis {
        message: e.to_string(),
        hint: "rees-check needs a connected graph; run it on each component".into(),
    };
    let verdict = classify_edge_ideal(g).map_err(hypothesis)?;
    let generated = rees_generation_check(g).map_err(hypothesis)?;
    let expected = verdict.classification != Classification::NotAntf;
    let covers = minimal_vertex_covers(g);
    let order_one_covers = if g.n() <= MAX_COVER_ENUMERATION {
        let as_vectors: Vec<Vec<u32>> = covers
            .iter()
            .map(|c| (1..=g.n()).map(|v| u32::from(c.contains(v))).collect())
            .collect();
        let mut sorted = as_vectors;
        sorted.sort();
        if indecomposable_covers(g, 1) == sorted {
            CheckStatus::Match
        } else {
            CheckStatus::Mismatch
        }
    } else {
        CheckStatus::Unpredicted
    };
    Ok(ReesReport {
        rees_generated: generated,
        classification: verdict.classification,
        status: if generated == expected {
            CheckStatus::Match
        } else {
            CheckStatus::Mismatch
        },
        order_one_covers,
        minimal_vertex_covers: covers.iter().map(|c| c.iter().collect()).collect(),
    })
}
