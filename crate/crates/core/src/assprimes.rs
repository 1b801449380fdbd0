//! Minimal and associated primes of monomial ideals and of their powers.
//!
//! Associated primes are found with the depth-zero criterion: a monomial
//! prime `P ⊇ I` is associated to `I` exactly when the localization `I_P`
//! has a socle witness, a monomial `u ∉ I_P` with `x_i u ∈ I_P` for every
//! `x_i ∈ P`. The irreducible decomposition in [`crate::irreducible`] gives
//! an independent second route to the same set.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::budget::Budget;
use crate::error::{AlgebraError, BudgetExceeded};
use crate::monomial::{Exp, Monomial, MonomialIdeal, MonomialPrime};
use crate::transversal::minimal_transversals;
use crate::varset::VarSet;

pub type PrimeSet = BTreeSet<MonomialPrime>;

fn check_input(ideal: &MonomialIdeal) -> Result<(), AlgebraError> {
    if ideal.is_zero() {
        return Err(AlgebraError::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Err(AlgebraError::UnitIdeal);
    }
    let n = ideal.ambient();
    let maximal = n > 0
        && ideal.generators().len() == n
        && ideal.generators().iter().all(|g| g.degree() == 1);
    if maximal {
        return Err(AlgebraError::MaximalIdeal);
    }
    Ok(())
}

/// `Min(I)`: the minimal transversals of the generator supports, i.e. the
/// minimal primes of the radical of `I`.
pub fn minimal_primes(ideal: &MonomialIdeal) -> Result<PrimeSet, AlgebraError> {
    if ideal.is_zero() {
        return Err(AlgebraError::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Err(AlgebraError::UnitIdeal);
    }
    let supports: Vec<VarSet> = ideal.generators().iter().map(Monomial::support).collect();
    minimal_transversals(&supports)
        .into_iter()
        .map(|vars| MonomialPrime::new(ideal.ambient(), vars))
        .collect()
}

/// Searches for `u ∉ J` with `x_i u ∈ J` for every variable of the ambient
/// ring. Returns `None` when the graded maximal ideal is not associated.
pub fn socle_witness(ideal: &MonomialIdeal) -> Option<Monomial> {
    let all = VarSet::full(ideal.ambient());
    socle_witness_in(ideal, all, &Budget::unlimited()).expect("unlimited budget")
}

/// Socle witness search relative to the variables in `vars`; generators
/// of `ideal` are assumed to involve only those variables (as after
/// localization at the prime they generate).
///
/// Each coordinate of a witness satisfies `u_i = g_i - 1` for some
/// generator `g`: since `x_i u ∈ J` but `u ∉ J`, some generator divides
/// `x_i u` but not `u`, which pins its `x_i` exponent to `u_i + 1`. These
/// values never exceed the `lcm(G(J))` exponent minus one, so the search
/// is a finite sublattice of the divisors of the lcm and is complete.
pub fn socle_witness_in(
    ideal: &MonomialIdeal,
    vars: VarSet,
    budget: &Budget,
) -> Result<Option<Monomial>, BudgetExceeded> {
    if ideal.is_zero() {
        return Ok(None);
    }
    if ideal.is_unit() {
        return Ok(None);
    }
    let search = match WitnessSearch::new(ideal, vars) {
        Some(s) => s,
        None => return Ok(None),
    };
    search.run(budget).map(|found| {
        found.map(|local| {
            let mut exps = vec![0; ideal.ambient()];
            for (k, &pos) in search.positions.iter().enumerate() {
                exps[pos] = local[k];
            }
            Monomial::new(exps)
        })
    })
}

/// Backtracking over the candidate exponent lattice with two monotone
/// prunes: `u ∉ J` is inherited by smaller monomials, `x_i u ∈ J` by
/// larger ones.
struct WitnessSearch {
    /// 0-based ambient positions of the search variables.
    positions: Vec<usize>,
    /// Candidate values per search variable, ascending.
    candidates: Vec<Vec<Exp>>,
    /// Generators restricted to the search variables, row-major.
    gens: Vec<Exp>,
    width: usize,
}

const TICK_BATCH: u64 = 256;

impl WitnessSearch {
    fn new(ideal: &MonomialIdeal, vars: VarSet) -> Option<Self> {
        let positions: Vec<usize> = vars.iter().map(|i| i - 1).collect();
        let width = positions.len();
        let mut gens = Vec::with_capacity(ideal.generators().len() * width);
        for g in ideal.generators() {
            let e = g.exponents();
            gens.extend(positions.iter().map(|&p| e[p]));
        }
        let mut candidates = Vec::with_capacity(width);
        for k in 0..width {
            let mut vals: Vec<Exp> = gens
                .chunks_exact(width)
                .filter(|g| g[k] > 0)
                .map(|g| g[k] - 1)
                .collect();
            if vals.is_empty() {
                // x_i u ∈ J would force u ∈ J
                return None;
            }
            vals.sort_unstable();
            vals.dedup();
            candidates.push(vals);
        }
        Some(Self {
            positions,
            candidates,
            gens,
            width,
        })
    }

    #[inline]
    fn member(&self, u: &[Exp]) -> bool {
        self.gens
            .chunks_exact(self.width)
            .any(|g| g.iter().zip(u).all(|(a, b)| a <= b))
    }

    /// `x_k u ∈ J`, without materializing `x_k u`.
    #[inline]
    fn member_times_var(&self, u: &[Exp], k: usize) -> bool {
        self.gens.chunks_exact(self.width).any(|g| {
            g.iter()
                .zip(u)
                .enumerate()
                .all(|(j, (&a, &b))| if j == k { a <= b + 1 } else { a <= b })
        })
    }

    fn run(&self, budget: &Budget) -> Result<Option<Vec<Exp>>, BudgetExceeded> {
        if self.width == 0 {
            return Ok(None);
        }
        let mut low: Vec<Exp> = self.candidates.iter().map(|c| c[0]).collect();
        let mut high: Vec<Exp> = self.candidates.iter().map(|c| *c.last().unwrap()).collect();
        let mut pending = 0u64;
        let found = self.descend(0, &mut low, &mut high, budget, &mut pending)?;
        budget.tick(pending)?;
        Ok(found)
    }

    fn descend(
        &self,
        depth: usize,
        low: &mut Vec<Exp>,
        high: &mut Vec<Exp>,
        budget: &Budget,
        pending: &mut u64,
    ) -> Result<Option<Vec<Exp>>, BudgetExceeded> {
        if depth == self.width {
            // low == high == u; both prunes already passed for every coordinate
            return Ok(Some(low.clone()));
        }
        let saved_low = low[depth];
        let saved_high = high[depth];
        for &value in &self.candidates[depth] {
            *pending += 1;
            if *pending >= TICK_BATCH {
                budget.tick(*pending)?;
                *pending = 0;
            }
            low[depth] = value;
            high[depth] = value;
            if self.member(low) {
                // larger values stay inside J
                break;
            }
            if !(0..=depth).all(|k| self.member_times_var(high, k)) {
                continue;
            }
            if let Some(u) = self.descend(depth + 1, low, high, budget, pending)? {
                return Ok(Some(u));
            }
        }
        low[depth] = saved_low;
        high[depth] = saved_high;
        Ok(None)
    }
}

/// Candidate primes for `Ass(I)`: subsets of the support of `I` meeting
/// every generator, ordered by cardinality and then lexicographically.
fn candidate_primes(ideal: &MonomialIdeal) -> Vec<VarSet> {
    let supports: Vec<VarSet> = ideal.generators().iter().map(Monomial::support).collect();
    let mut cands: Vec<VarSet> = ideal
        .support()
        .subsets()
        .filter(|&s| supports.iter().all(|g| g.intersects(s)))
        .collect();
    cands.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.iter().cmp(b.iter())));
    cands
}

/// `Ass(I)` via localization and socle witnesses. Candidates are checked
/// in parallel on the current rayon pool; the result is sorted.
pub fn associated_primes(
    ideal: &MonomialIdeal,
    budget: &Budget,
) -> Result<PrimeSet, AlgebraError> {
    check_input(ideal)?;
    let n = ideal.ambient();
    let found: Vec<Option<VarSet>> = candidate_primes(ideal)
        .into_par_iter()
        .map(|vars| {
            let local = ideal.localize_vars(vars);
            socle_witness_in(&local, vars, budget).map(|w| w.map(|_| vars))
        })
        .collect::<Result<_, _>>()?;
    Ok(found
        .into_iter()
        .flatten()
        .map(|vars| MonomialPrime::new(n, vars).expect("subset of support"))
        .collect())
}

/// Witness monomial for `P ∈ Ass(I)`: some `u` with `I : u = P`, if any.
pub fn associated_prime_witness(
    ideal: &MonomialIdeal,
    prime: &MonomialPrime,
) -> Result<Option<Monomial>, AlgebraError> {
    check_input(ideal)?;
    let local = ideal.localize(prime)?;
    let Some(local_witness) = socle_witness_in(&local, prime.vars(), &Budget::unlimited())? else {
        return Ok(None);
    };
    // Lift: multiply by a large enough power of the inverted variables.
    let outside = VarSet::full(ideal.ambient()).difference(prime.vars());
    let lcm = ideal.lcm_exponents();
    let mut exps = local_witness.exponents().to_vec();
    for i in outside.iter() {
        exps[i - 1] = lcm[i - 1];
    }
    Ok(Some(Monomial::new(exps)))
}

/// How the sequence `Ass(I), Ass(I^2), ...` looks up to the computed bound.
/// These are observations over finitely many powers, never proofs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum PowersVerdict {
    /// `Ass(I^m) = Min(I)` for every computed power.
    NtfUpToKmax { kmax: u32 },
    /// `Ass(I^m) = Min(I)` for `m ≤ k` and `Ass(I^m) ⊆ Min(I) ∪ {P}` beyond,
    /// for every computed power.
    AntfConsistent { k: u32, prime: MonomialPrime },
    /// Some power already violates both shapes; `extra_primes` are the
    /// non-minimal primes seen up to and including `power`.
    Neither {
        power: u32,
        extra_primes: Vec<MonomialPrime>,
    },
    /// No power was completed within the budget.
    Undetermined,
}

#[derive(Debug, Clone, Serialize)]
pub struct AssReport {
    pub ideal: MonomialIdeal,
    pub min_primes: PrimeSet,
    /// Keyed by the power `k`.
    pub powers: BTreeMap<u32, PrimeSet>,
    pub kmax: u32,
    pub verdict: PowersVerdict,
    /// The first power whose computation ran out of budget; that power and
    /// all later ones are absent from `powers`.
    pub budget_exhausted_at: Option<u32>,
}

impl AssReport {
    pub fn is_complete(&self) -> bool {
        self.budget_exhausted_at.is_none()
    }

    /// Powers `k` (with `k + 1` also computed) where `Ass(I^k) ⊄ Ass(I^{k+1})`.
    pub fn persistence_violations(&self) -> Vec<u32> {
        self.powers
            .iter()
            .filter_map(|(&k, a)| {
                let next = self.powers.get(&(k + 1))?;
                (!a.is_subset(next)).then_some(k)
            })
            .collect()
    }
}

/// Classifies the observed sequence of associated-prime sets.
pub fn powers_verdict(min: &PrimeSet, powers: &BTreeMap<u32, PrimeSet>) -> PowersVerdict {
    let Some(&kmax) = powers.keys().max() else {
        return PowersVerdict::Undetermined;
    };
    let mut extras: PrimeSet = BTreeSet::new();
    let mut first_extra_power = None;
    for (&m, ass) in powers {
        let new_extra: Vec<_> = ass.difference(min).copied().collect();
        let missing_min = !min.is_subset(ass);
        if !new_extra.is_empty() && first_extra_power.is_none() {
            first_extra_power = Some(m);
        }
        extras.extend(new_extra);
        if extras.len() > 1 || missing_min || (m == 1 && ass != min) {
            return PowersVerdict::Neither {
                power: m,
                extra_primes: extras.into_iter().collect(),
            };
        }
    }
    match (extras.into_iter().next(), first_extra_power) {
        (None, _) => PowersVerdict::NtfUpToKmax { kmax },
        (Some(prime), Some(first)) => PowersVerdict::AntfConsistent {
            k: first - 1,
            prime,
        },
        (Some(_), None) => unreachable!("extra prime without a power"),
    }
}

/// `Ass(I^k)` for `k = 1..=kmax`. Running out of budget is recorded in the
/// report; the powers finished before that point are kept.
pub fn ass_of_powers(
    ideal: &MonomialIdeal,
    kmax: u32,
    budget: &Budget,
) -> Result<AssReport, AlgebraError> {
    if kmax == 0 {
        return Err(AlgebraError::ZeroPower);
    }
    check_input(ideal)?;
    let min_primes = minimal_primes(ideal)?;
    let mut powers = BTreeMap::new();
    let mut exhausted = None;
    let mut current = ideal.clone();
    for k in 1..=kmax {
        if k > 1 {
            current = current.product(ideal)?;
        }
        match associated_primes(&current, budget) {
            Ok(a) => {
                powers.insert(k, a);
            }
            Err(AlgebraError::Budget(_)) => {
                exhausted = Some(k);
                break;
            }
            Err(e) => return Err(e),
        }
    }
    let verdict = powers_verdict(&min_primes, &powers);
    Ok(AssReport {
        ideal: ideal.clone(),
        min_primes,
        powers,
        kmax,
        verdict,
        budget_exhausted_at: exhausted,
    })
}

/// `Ass((I_1 + I_2)^k)` for ideals in disjoint variable blocks, assembled
/// from `Ass(I_1^{k_1})` and `Ass(I_2^{k_2})` with `k_1 + k_2 = k + 1`.
pub fn split_ass(
    first: &MonomialIdeal,
    second: &MonomialIdeal,
    k: u32,
    budget: &Budget,
) -> Result<PrimeSet, AlgebraError> {
    if k == 0 {
        return Err(AlgebraError::ZeroPower);
    }
    if first.ambient() != second.ambient() {
        return Err(AlgebraError::AmbientMismatch {
            left: first.ambient(),
            right: second.ambient(),
        });
    }
    let overlap = first.support().intersection(second.support());
    if !overlap.is_empty() {
        return Err(AlgebraError::OverlappingBlocks(overlap.iter().collect()));
    }
    check_input(first)?;
    check_input(second)?;
    let ass_table = |ideal: &MonomialIdeal| -> Result<Vec<PrimeSet>, AlgebraError> {
        let mut out = Vec::with_capacity(k as usize);
        let mut current = ideal.clone();
        for j in 1..=k {
            if j > 1 {
                current = current.product(ideal)?;
            }
            out.push(associated_primes(&current, budget)?);
        }
        Ok(out)
    };
    let tables = [ass_table(first)?, ass_table(second)?];
    let combined = combine_disjoint_tables(&tables, first.ambient())?;
    Ok(combined.into_iter().last().expect("k ≥ 1"))
}

/// Given, for each ideal in pairwise disjoint variable blocks, the table
/// `[Ass(I_b^1), ..., Ass(I_b^K)]`, returns the same table for their sum:
/// `Ass((I + J)^k)` is the set of `P ∪ Q` with `P ∈ Ass(I^{k_1})`,
/// `Q ∈ Ass(J^{k_2})` and `k_1 + k_2 = k + 1`.
pub fn combine_disjoint_tables(
    tables: &[Vec<PrimeSet>],
    ambient: usize,
) -> Result<Vec<PrimeSet>, AlgebraError> {
    let Some((first, rest)) = tables.split_first() else {
        return Ok(Vec::new());
    };
    let depth = tables.iter().map(Vec::len).min().unwrap_or(0);
    let mut acc: Vec<PrimeSet> = first[..depth].to_vec();
    for table in rest {
        let mut next = Vec::with_capacity(depth);
        for k in 1..=depth {
            let mut out = BTreeSet::new();
            for k1 in 1..=k {
                let k2 = k + 1 - k1;
                for p in &acc[k1 - 1] {
                    for q in &table[k2 - 1] {
                        out.insert(MonomialPrime::new(ambient, p.vars().union(q.vars()))?);
                    }
                }
            }
            next.push(out);
        }
        acc = next;
    }
    Ok(acc)
}
