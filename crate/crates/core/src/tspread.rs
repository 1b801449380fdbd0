//! t-spread principal Borel ideals `B_t(u)`, the candidate associated
//! primes of `B_t(u)`, and closed-form classifiers in degrees 2 and 3.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::assprimes::PrimeSet;
use crate::error::AlgebraError;
use crate::graphs::{classify_edge_ideal, Graph, GraphError};
use crate::monomial::{Monomial, MonomialIdeal, MonomialPrime};
use crate::varset::{VarSet, MAX_VARS};
use crate::verdict::Classification;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TspreadError {
    #[error("t must be positive")]
    ZeroT,
    #[error("u must have degree at least 2")]
    DegreeTooSmall,
    #[error("n must be between 1 and {MAX_VARS}")]
    BadAmbient,
    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("u is not {t}-spread: x_{prev} is followed by x_{next}")]
    NotSpread { t: usize, prev: usize, next: usize },
    #[error("the last index of u must be n = {n}, found {last}")]
    LastIndexNotN { last: usize, n: usize },
    #[error("expected degree {expected}, found {found}")]
    WrongDegree { expected: usize, found: usize },
    #[error("spec is not normalized: i_1 = {i1} < t = {t}")]
    NotNormalized { i1: usize, t: usize },
    #[error("spec is not of the form x_t x_2t x_n")]
    NotT2tForm,
    #[error("monomial lives in {found} variables, expected {expected}")]
    AmbientMismatch { expected: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// `u = x_{i_1} ⋯ x_{i_d}` in `K[x_1..x_n]` together with the spread `t`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct BorelSpec {
    t: usize,
    n: usize,
    indices: Vec<usize>,
}

impl BorelSpec {
    pub fn new(t: usize, n: usize, indices: Vec<usize>) -> Result<Self, TspreadError> {
        if t == 0 {
            return Err(TspreadError::ZeroT);
        }
        if n == 0 || n > MAX_VARS {
            return Err(TspreadError::BadAmbient);
        }
        if indices.len() < 2 {
            return Err(TspreadError::DegreeTooSmall);
        }
        for &i in &indices {
            if i == 0 || i > n {
                return Err(TspreadError::IndexOutOfRange { index: i, n });
            }
        }
        for w in indices.windows(2) {
            if w[1] < w[0] + t {
                return Err(TspreadError::NotSpread {
                    t,
                    prev: w[0],
                    next: w[1],
                });
            }
        }
        Ok(Self { t, n, indices })
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn degree(&self) -> usize {
        self.indices.len()
    }

    pub fn is_normalized(&self) -> bool {
        self.indices[0] >= self.t
    }

    pub fn monomial(&self) -> Monomial {
        Monomial::squarefree(self.n, self.indices.iter().copied())
    }

    fn require_last_is_n(&self) -> Result<(), TspreadError> {
        let last = *self.indices.last().unwrap();
        if last != self.n {
            return Err(TspreadError::LastIndexNotN { last, n: self.n });
        }
        Ok(())
    }

    fn require_normalized(&self) -> Result<(), TspreadError> {
        if !self.is_normalized() {
            return Err(TspreadError::NotNormalized {
                i1: self.indices[0],
                t: self.t,
            });
        }
        Ok(())
    }

    /// Serializes in the `tspread` text format.
    pub fn to_text(&self) -> String {
        format!("{self}\n")
    }
}

impl fmt::Display for BorelSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let u: Vec<String> = self.indices.iter().map(usize::to_string).collect();
        write!(f, "tspread t={} n={} u={}", self.t, self.n, u.join(","))
    }
}

/// Result of [`normalize`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Normalized {
    pub spec: BorelSpec,
    /// `variable_map[j - 1]` is the original index of normalized variable `j`.
    pub variable_map: Vec<usize>,
    /// Whether `B_{t'}(u')` is exactly the relabeled `B_t(u)`. Dropping the
    /// unused variables keeps every gap `≥ i_1`, but the later gaps of the
    /// original ideal can be stricter than `i_1`, so this can fail in
    /// degree `≥ 3`.
    pub exact: bool,
}

impl Normalized {
    pub fn to_original(&self, j: usize) -> usize {
        self.variable_map[j - 1]
    }

    /// A prime of the normalized ring as a prime of the original ring.
    pub fn prime_to_original(&self, p: &MonomialPrime) -> MonomialPrime {
        let vars: VarSet = p.vars().iter().map(|j| self.to_original(j)).collect();
        MonomialPrime::new(self.original_n(), vars).expect("mapped prime in range")
    }

    /// `x_n` is never dropped, so the last entry is the original `n`.
    pub fn original_n(&self) -> usize {
        *self.variable_map.last().unwrap()
    }

    pub fn ideal_to_original(&self, ideal: &MonomialIdeal) -> MonomialIdeal {
        let original_n = self.original_n();
        let gens = ideal
            .generators()
            .iter()
            .map(|g| {
                let mut exps = vec![0; original_n];
                for (j, &e) in g.exponents().iter().enumerate() {
                    exps[self.to_original(j + 1) - 1] = e;
                }
                Monomial::new(exps)
            })
            .collect();
        MonomialIdeal::new(original_n, gens).expect("mapped ideal in range")
    }
}

/// If `i_1 < t`, drops the variables `i_1+1..=t` (which no generator uses)
/// and reads the ideal as `i_1`-spread. Identity otherwise.
pub fn normalize(spec: &BorelSpec) -> Normalized {
    let i1 = spec.indices[0];
    if i1 >= spec.t {
        return Normalized {
            spec: spec.clone(),
            variable_map: (1..=spec.n).collect(),
            exact: true,
        };
    }
    let shift = spec.t - i1;
    let variable_map: Vec<usize> = (1..=spec.n).filter(|&j| j <= i1 || j > spec.t).collect();
    let indices = spec
        .indices
        .iter()
        .map(|&i| if i <= i1 { i } else { i - shift })
        .collect();
    let new_spec =
        BorelSpec::new(i1, spec.n - shift, indices).expect("normalized spec stays spread");
    let mut normalized = Normalized {
        spec: new_spec,
        variable_map,
        exact: false,
    };
    let mapped = normalized.ideal_to_original(&generate(&normalized.spec));
    normalized.exact = mapped == generate(spec);
    normalized
}

/// All `(j_1, ..., j_m)` with `1 ≤ j_1`, `j_l ≤ bounds[l]` and gaps `≥ t`,
/// in lexicographic order.
fn spread_sequences(bounds: &[usize], t: usize) -> Vec<Vec<usize>> {
    spread_sequences_from(bounds, t, 1)
}

/// The generators of `B_t(u)`: the t-spread `x_{j_1} ⋯ x_{j_d}` with
/// `j_l ≤ i_l`.
pub fn generate(spec: &BorelSpec) -> MonomialIdeal {
    let (first, rest) = spec.indices.split_first().unwrap();
    let gens: Vec<Monomial> = (1..=*first)
        .into_par_iter()
        .flat_map_iter(|j1| {
            let tails = spread_sequences_from(rest, spec.t, j1 + spec.t);
            tails.into_iter().map(move |tail| {
                Monomial::squarefree(spec.n, std::iter::once(j1).chain(tail))
            })
        })
        .collect();
    MonomialIdeal::new(spec.n, gens).expect("generators in range")
}

fn spread_sequences_from(bounds: &[usize], t: usize, start: usize) -> Vec<Vec<usize>> {
    fn rec(bounds: &[usize], t: usize, lo: usize, seq: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let l = seq.len();
        if l == bounds.len() {
            out.push(seq.clone());
            return;
        }
        for j in lo..=bounds[l] {
            seq.push(j);
            rec(bounds, t, j + t, seq, out);
            seq.pop();
        }
    }
    let mut out = Vec::new();
    rec(bounds, t, start, &mut Vec::new(), &mut out);
    out
}

/// `{1..j_1-1} ∪ {j_1+t..j_2-1} ∪ ... ∪ {j_m+t..end}`.
fn gapped_prime_vars(js: &[usize], t: usize, end: usize) -> VarSet {
    let mut set = VarSet::empty();
    let mut lo = 1;
    for &j in js {
        for v in lo..j {
            set = set.with(v);
        }
        lo = j + t;
    }
    for v in lo..=end {
        set = set.with(v);
    }
    set
}

/// Every prime of the three shapes that can occur as an associated prime
/// of `B_t(u)` when `i_d = n`. This is a superset of `Ass`; no claim is
/// made that each shape is realized.
pub fn candidate_ass(spec: &BorelSpec) -> Result<PrimeSet, TspreadError> {
    spec.require_last_is_n()?;
    spec.require_normalized()?;
    let (t, n, idx) = (spec.t, spec.n, &spec.indices);
    let d = idx.len();
    let mut out = PrimeSet::new();
    let mut add = |vars: VarSet| {
        if !vars.is_empty() {
            out.insert(MonomialPrime::new(n, vars).expect("in range"));
        }
    };
    for js in spread_sequences(&idx[..d - 1], t) {
        add(gapped_prime_vars(&js, t, n));
    }
    add(VarSet::full(idx[0]));
    for s in 2..d {
        for js in spread_sequences(&idx[..s - 1], t) {
            add(gapped_prime_vars(&js, t, idx[s - 1]));
        }
    }
    Ok(out)
}

/// Closed-form verdict for a t-spread principal Borel ideal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TspreadVerdict {
    pub spec: BorelSpec,
    pub normalized: Normalized,
    pub classification: Classification,
    /// For ANTF: the last power with `Ass(I^m) = Min(I)`.
    pub k_index: Option<u32>,
    /// For ANTF: the prime that appears beyond `k_index`, in the original
    /// variables.
    pub extra_prime: Option<MonomialPrime>,
    /// For degree 3 outside `x_t x_2t x_n`: primes in `Ass(I^2) ∖ Ass(I)`,
    /// in the original variables.
    pub obstruction_primes: Vec<MonomialPrime>,
}

/// Degree 2, `u = x_i x_n` with `i ≥ t`: NTF iff `i = t`, otherwise ANTF
/// with extra prime `(x_1, ..., x_n)`. The index comes from the edge ideal
/// view of `B_t(u)`.
pub fn classify_deg2(spec: &BorelSpec) -> Result<TspreadVerdict, TspreadError> {
    check_degree(spec, 2)?;
    spec.require_normalized()?;
    spec.require_last_is_n()?;
    let normalized = normalize(spec);
    if spec.indices[0] == spec.t {
        return Ok(verdict(spec, normalized, Classification::Ntf));
    }
    let edges: Vec<(usize, usize)> = generate(spec)
        .generators()
        .iter()
        .map(|g| {
            let s = g.support();
            (s.min().unwrap(), s.max().unwrap())
        })
        .collect();
    let graph = Graph::new(spec.n, &edges)?;
    let gv = classify_edge_ideal(&graph)?;
    let mut v = verdict(spec, normalized, Classification::Antf);
    v.k_index = gv.k_index;
    v.extra_prime = Some(MonomialPrime::maximal(spec.n));
    Ok(v)
}

/// Degree 3, `u = x_{i_1} x_{i_2} x_n` with `i_1 ≥ t`: NTF iff ANTF iff
/// `u = x_t x_2t x_n`. Otherwise `i_2 ≥ 2t + 1` and the two obstruction
/// primes `(x_{t+1}..x_n)` and `(x_1..x_{t-1}, x_{2t}..x_n)` are attached.
pub fn classify_deg3(spec: &BorelSpec) -> Result<TspreadVerdict, TspreadError> {
    check_degree(spec, 3)?;
    spec.require_normalized()?;
    spec.require_last_is_n()?;
    let normalized = normalize(spec);
    let (t, n) = (spec.t, spec.n);
    if spec.indices[0] == t && spec.indices[1] == 2 * t {
        return Ok(verdict(spec, normalized, Classification::Ntf));
    }
    let p1: VarSet = (t + 1..=n).collect();
    let p2: VarSet = (1..t).chain(2 * t..=n).collect();
    let mut v = verdict(spec, normalized, Classification::NotAntf);
    v.obstruction_primes = vec![
        MonomialPrime::new(n, p1).expect("in range"),
        MonomialPrime::new(n, p2).expect("in range"),
    ];
    Ok(v)
}

/// Normalizes and dispatches on the degree. Specs whose normalization is
/// not exact, and degrees above 3, are reported as oracle-only.
pub fn classify(spec: &BorelSpec) -> Result<TspreadVerdict, TspreadError> {
    spec.require_last_is_n()?;
    let normalized = normalize(spec);
    if !normalized.exact || spec.degree() > 3 {
        return Ok(verdict(spec, normalized, Classification::OracleOnly));
    }
    let inner = match spec.degree() {
        2 => classify_deg2(&normalized.spec)?,
        _ => classify_deg3(&normalized.spec)?,
    };
    Ok(TspreadVerdict {
        spec: spec.clone(),
        extra_prime: inner.extra_prime.map(|p| normalized.prime_to_original(&p)),
        obstruction_primes: inner
            .obstruction_primes
            .iter()
            .map(|p| normalized.prime_to_original(p))
            .collect(),
        normalized,
        classification: inner.classification,
        k_index: inner.k_index,
    })
}

fn check_degree(spec: &BorelSpec, d: usize) -> Result<(), TspreadError> {
    if spec.degree() != d {
        return Err(TspreadError::WrongDegree {
            expected: d,
            found: spec.degree(),
        });
    }
    Ok(())
}

fn verdict(spec: &BorelSpec, normalized: Normalized, c: Classification) -> TspreadVerdict {
    TspreadVerdict {
        spec: spec.clone(),
        normalized,
        classification: c,
        k_index: None,
        extra_prime: None,
        obstruction_primes: Vec::new(),
    }
}

fn check_t2t(spec: &BorelSpec, v: &Monomial) -> Result<(), TspreadError> {
    let t = spec.t;
    if spec.indices != [t, 2 * t, spec.n] || spec.n < 3 * t {
        return Err(TspreadError::NotT2tForm);
    }
    if v.ambient() != spec.n {
        return Err(TspreadError::AmbientMismatch {
            expected: spec.n,
            found: v.ambient(),
        });
    }
    Ok(())
}

/// Indices of `v` in `lo..=hi`, repeated by multiplicity, ascending.
fn window(v: &Monomial, lo: usize, hi: usize) -> Vec<usize> {
    (lo..=hi)
        .flat_map(|i| std::iter::repeat_n(i, v.exp(i) as usize))
        .collect()
}

/// Membership of `v` in `B_t(x_t x_2t x_n)^k` without forming the power.
///
/// A generator is `x_a x_b x_c` with `a ≤ t`, `a + t ≤ b ≤ 2t` and
/// `b + t ≤ c`. Keep the `k` smallest `a`'s and the `k` largest `c`'s, pair
/// them in sorted order, and fill the intervals `[a + t, min(c - t, 2t)]`
/// greedily by right endpoint from the middle variables.
pub fn fast_membership_t2t(spec: &BorelSpec, v: &Monomial, k: u32) -> Result<bool, TspreadError> {
    check_t2t(spec, v)?;
    let (t, n, k) = (spec.t, spec.n, k as usize);
    if k == 0 {
        return Ok(true);
    }
    let low = window(v, 1, t);
    let mid = window(v, t + 1, 2 * t);
    let high = window(v, 2 * t + 1, n);
    if low.len() < k || mid.len() < k || high.len() < k {
        return Ok(false);
    }
    let a = &low[..k];
    let c = &high[high.len() - k..];
    let mut intervals: Vec<(usize, usize)> = a
        .iter()
        .zip(c)
        .map(|(&a, &c)| (a + t, (c - t).min(2 * t)))
        .collect();
    intervals.sort_by_key(|&(lo, hi)| (hi, lo));
    let mut available = mid;
    for (lo, hi) in intervals {
        let Some(pos) = available.iter().position(|&b| b >= lo && b <= hi) else {
            return Ok(false);
        };
        available.remove(pos);
    }
    Ok(true)
}

/// At least `k` variables of `v` (with multiplicity) in each of `[1, t]`,
/// `[t+1, 2t]` and `[2t+1, n]`. Necessary for `v ∈ B_t(x_t x_2t x_n)^k` but
/// not sufficient: for `t = 2`, `x_2 x_3 x_5` passes and is not in `I`.
pub fn window_counts_satisfied(
    spec: &BorelSpec,
    v: &Monomial,
    k: u32,
) -> Result<bool, TspreadError> {
    check_t2t(spec, v)?;
    let (t, n, k) = (spec.t, spec.n, k as usize);
    Ok(window(v, 1, t).len() >= k
        && window(v, t + 1, 2 * t).len() >= k
        && window(v, 2 * t + 1, n).len() >= k)
}
