//! Simplicial complexes given by their facets, special odd cycles, and the
//! associated primes of powers of the facet ideal of a special odd cycle.
//!
//! If `Δ` is itself a special odd cycle `v_1, F_1, ..., v_{2s+1}, F_{2s+1}`
//! then `Ass(I(Δ)^m) = Min(I(Δ))` for `m ≤ s` and gains exactly the prime
//! on the cycle vertices for `m ≥ s + 1`. A complex with no special odd
//! cycle has a normally torsionfree facet ideal.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::assprimes::{minimal_primes, PrimeSet};
use crate::error::AlgebraError;
use crate::monomial::{Monomial, MonomialIdeal, MonomialPrime};
use crate::varset::{VarSet, MAX_VARS};
use crate::verdict::Classification;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SimplicialError {
    #[error("complex has no vertices")]
    NoVertices,
    #[error("complex has more than {MAX_VARS} vertices")]
    TooManyVertices,
    #[error("empty facet")]
    EmptyFacet,
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("vertex {0} repeated inside a facet")]
    RepeatedVertex(usize),
    #[error("duplicate facet {0:?}")]
    DuplicateFacet(Vec<usize>),
    #[error("facet {inner:?} is contained in facet {outer:?}")]
    ComparableFacets { inner: Vec<usize>, outer: Vec<usize> },
    #[error("the complex is not a special odd cycle")]
    NotSpecialOddCycle,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// A simplicial complex on `[n]` given by pairwise incomparable facets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    n: usize,
    /// Sorted by their sorted vertex lists.
    facets: Vec<VarSet>,
}

fn sorted_vertices(f: VarSet) -> Vec<usize> {
    f.iter().collect()
}

impl SimplicialComplex {
    pub fn new(n: usize, facets: &[Vec<usize>]) -> Result<Self, SimplicialError> {
        if n == 0 {
            return Err(SimplicialError::NoVertices);
        }
        if n > MAX_VARS {
            return Err(SimplicialError::TooManyVertices);
        }
        let mut sets = Vec::with_capacity(facets.len());
        for f in facets {
            if f.is_empty() {
                return Err(SimplicialError::EmptyFacet);
            }
            let mut set = VarSet::empty();
            for &v in f {
                if v == 0 || v > n {
                    return Err(SimplicialError::VertexOutOfRange { vertex: v, n });
                }
                if set.contains(v) {
                    return Err(SimplicialError::RepeatedVertex(v));
                }
                set = set.with(v);
            }
            if sets.contains(&set) {
                return Err(SimplicialError::DuplicateFacet(sorted_vertices(set)));
            }
            sets.push(set);
        }
        for &a in &sets {
            for &b in &sets {
                if a != b && a.is_subset_of(b) {
                    return Err(SimplicialError::ComparableFacets {
                        inner: sorted_vertices(a),
                        outer: sorted_vertices(b),
                    });
                }
            }
        }
        sets.sort_by(|a, b| a.iter().cmp(b.iter()));
        Ok(Self { n, facets: sets })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[VarSet] {
        &self.facets
    }

    pub fn facet_lists(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|&f| sorted_vertices(f)).collect()
    }

    /// Serializes in the `complex <n>` text format.
    pub fn to_text(&self) -> String {
        let mut s = format!("complex {}\n", self.n);
        for f in self.facet_lists() {
            let line: Vec<String> = f.iter().map(usize::to_string).collect();
            s.push_str(&line.join(" "));
            s.push('\n');
        }
        s
    }
}

/// `I(Δ) = (x_F : F a facet)`.
pub fn facet_ideal(delta: &SimplicialComplex) -> MonomialIdeal {
    let gens = delta
        .facets
        .iter()
        .map(|f| Monomial::squarefree(delta.n, f.iter()))
        .collect();
    MonomialIdeal::new(delta.n, gens).expect("facets within ambient")
}

/// An alternating cycle `v_1, F_1, ..., v_r, F_r` with `v_i, v_{i+1} ∈ F_i`
/// in which no facet contains more than two cycle vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpecialCycle {
    vertices: Vec<usize>,
    facets: Vec<VarSet>,
}

impl SpecialCycle {
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn facets(&self) -> &[VarSet] {
        &self.facets
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// `s` with length `2s + 1`.
    pub fn s(&self) -> usize {
        (self.vertices.len() - 1) / 2
    }

    pub fn vertex_set(&self) -> VarSet {
        VarSet::from_indices(self.vertices.iter().copied())
    }

    /// Checks alternating incidence, distinctness and the special condition.
    pub fn is_valid(&self) -> bool {
        let r = self.vertices.len();
        let vs = self.vertex_set();
        let distinct_facets: BTreeSet<_> = self.facets.iter().collect();
        r >= 2
            && self.facets.len() == r
            && vs.len() == r
            && distinct_facets.len() == r
            && (0..r).all(|i| {
                let f = self.facets[i];
                f.contains(self.vertices[i])
                    && f.contains(self.vertices[(i + 1) % r])
                    && f.intersection(vs).len() == 2
            })
    }
}

impl Serialize for SpecialCycle {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("SpecialCycle", 3)?;
        st.serialize_field("s", &self.s())?;
        st.serialize_field("vertices", &self.vertices)?;
        let facets: Vec<Vec<usize>> = self.facets.iter().map(|&f| sorted_vertices(f)).collect();
        st.serialize_field("facets", &facets)?;
        st.end()
    }
}

impl fmt::Display for SpecialCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (v, facet) in self.vertices.iter().zip(&self.facets) {
            write!(f, "{v}, {:?}, ", sorted_vertices(*facet))?;
        }
        write!(f, "{}", self.vertices[0])
    }
}

/// Every special cycle of odd length `≥ 3` (exactly `exact_len` if given),
/// each reported once: starting at its smallest vertex, oriented
/// so that the second vertex is smaller than the last. Sorted by length,
/// then vertex sequence, then facet sequence.
fn special_odd_cycles(delta: &SimplicialComplex, exact_len: Option<usize>) -> Vec<SpecialCycle> {
    struct Search<'a> {
        facets: &'a [VarSet],
        exact_len: Option<usize>,
        out: Vec<SpecialCycle>,
    }

    impl Search<'_> {
        fn extend(&mut self, verts: &mut Vec<usize>, used: &mut Vec<usize>) {
            let r = verts.len();
            let root = verts[0];
            let last = *verts.last().unwrap();
            let on_cycle = VarSet::from_indices(verts.iter().copied());
            if let Some(len) = self.exact_len {
                if r > len {
                    return;
                }
            }
            for (fi, &f) in self.facets.iter().enumerate() {
                if used.contains(&fi) || !f.contains(last) {
                    continue;
                }
                // closing facet: contains last and root, no other cycle vertex
                let closes = r >= 3
                    && r % 2 == 1
                    && f.contains(root)
                    && f.intersection(on_cycle).len() == 2
                    && verts[1] < last
                    && self.exact_len.is_none_or(|len| len == r);
                if closes {
                    let mut facets: Vec<VarSet> = used.iter().map(|&i| self.facets[i]).collect();
                    facets.push(f);
                    self.out.push(SpecialCycle {
                        vertices: verts.clone(),
                        facets,
                    });
                }
                // F_r may contain only `last` among the vertices so far
                if f.intersection(on_cycle) != VarSet::singleton(last) {
                    continue;
                }
                for w in f.difference(on_cycle).iter() {
                    if w <= root {
                        continue;
                    }
                    // earlier facets must avoid the new vertex
                    if used.iter().any(|&i| self.facets[i].contains(w)) {
                        continue;
                    }
                    verts.push(w);
                    used.push(fi);
                    self.extend(verts, used);
                    used.pop();
                    verts.pop();
                }
            }
        }
    }

    let mut search = Search {
        facets: &delta.facets,
        exact_len,
        out: Vec::new(),
    };
    for root in 1..=delta.n {
        let mut verts = vec![root];
        let mut used = Vec::new();
        search.extend(&mut verts, &mut used);
    }
    let mut out = search.out;
    out.sort_by(|a, b| {
        a.len()
            .cmp(&b.len())
            .then_with(|| a.vertices.cmp(&b.vertices))
            .then_with(|| {
                let fa: Vec<Vec<usize>> = a.facets.iter().map(|&f| sorted_vertices(f)).collect();
                let fb: Vec<Vec<usize>> = b.facets.iter().map(|&f| sorted_vertices(f)).collect();
                fa.cmp(&fb)
            })
    });
    out
}

/// All special odd cycles of `Δ`.
pub fn enumerate_special_odd_cycles(delta: &SimplicialComplex) -> Vec<SpecialCycle> {
    special_odd_cycles(delta, None)
}

/// The first special odd cycle of `Δ` in canonical order, if any. `None`
/// means the facet ideal is normally torsionfree.
pub fn find_special_odd_cycle(delta: &SimplicialComplex) -> Option<SpecialCycle> {
    special_odd_cycles(delta, None).into_iter().next()
}

/// A complex recognized as a special odd cycle, with the relabeling that
/// sends the cycle vertices to `1, ..., 2s+1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifiedCycle {
    pub cycle: SpecialCycle,
    /// `relabel[v - 1]` is the new label of vertex `v`; cycle vertex `v_i`
    /// goes to `i`, the others follow in increasing order.
    pub relabel: Vec<usize>,
}

impl VerifiedCycle {
    pub fn s(&self) -> usize {
        self.cycle.s()
    }

    /// The prime generated by the cycle vertices.
    pub fn cycle_prime(&self, n: usize) -> MonomialPrime {
        MonomialPrime::new(n, self.cycle.vertex_set()).expect("cycle vertices in range")
    }

    fn original_label(&self, new: usize) -> usize {
        self.relabel.iter().position(|&x| x == new).unwrap() + 1
    }
}

/// Recognizes `Δ` as one special odd cycle using every facet.
pub fn verify_special_cycle_complex(delta: &SimplicialComplex) -> Option<VerifiedCycle> {
    let r = delta.facets.len();
    if r < 3 || r.is_multiple_of(2) {
        return None;
    }
    let cycle = special_odd_cycles(delta, Some(r)).into_iter().next()?;
    let mut relabel = vec![0; delta.n];
    for (i, &v) in cycle.vertices.iter().enumerate() {
        relabel[v - 1] = i + 1;
    }
    let mut next = cycle.len();
    for v in 1..=delta.n {
        if relabel[v - 1] == 0 {
            next += 1;
            relabel[v - 1] = next;
        }
    }
    Some(VerifiedCycle { cycle, relabel })
}

/// Closed-form `Ass(I(Δ)^m)` for a special odd cycle complex.
pub fn predicted_ass(delta: &SimplicialComplex, m: u32) -> Result<PrimeSet, SimplicialError> {
    let verified = verify_special_cycle_complex(delta).ok_or(SimplicialError::NotSpecialOddCycle)?;
    let mut out = minimal_primes(&facet_ideal(delta))?;
    if m as usize > verified.s() {
        out.insert(verified.cycle_prime(delta.n));
    }
    Ok(out)
}

/// The monomial `u = x_1 x_{F_1∖{1,2}} x_2 x_{F_2∖{2,3}} ⋯ x_{2s+1}
/// x_{F_{2s+1}∖{2s+1,1}}` in the relabeled complex, mapped back to the
/// original labels. It satisfies `I^{s+1} : u = P_cycle` and `u ∉ I^{s+1}`.
pub fn step1_witness(delta: &SimplicialComplex) -> Result<Monomial, SimplicialError> {
    let verified = verify_special_cycle_complex(delta).ok_or(SimplicialError::NotSpecialOddCycle)?;
    let n = delta.n;
    let r = verified.cycle.len();
    let relabeled_facets: Vec<VarSet> = verified
        .cycle
        .facets
        .iter()
        .map(|f| f.iter().map(|v| verified.relabel[v - 1]).collect())
        .collect();
    let mut exps = vec![0; n];
    for i in 1..=r {
        let next = i % r + 1;
        exps[i - 1] += 1;
        let rest = relabeled_facets[i - 1].without(i).without(next);
        for w in rest.iter() {
            exps[w - 1] += 1;
        }
    }
    // back to the original labels
    let mut original = vec![0; n];
    for (new_minus_one, &e) in exps.iter().enumerate() {
        original[verified.original_label(new_minus_one + 1) - 1] = e;
    }
    Ok(Monomial::new(original))
}

/// Closed-form verdict for a facet ideal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComplexVerdict {
    pub classification: Classification,
    /// The first special odd cycle in canonical order, if any.
    pub special_odd_cycle: Option<SpecialCycle>,
    /// Set when the whole complex is one special odd cycle.
    pub cycle_complex: Option<VerifiedCycle>,
    /// For ANTF: the last power with `Ass(I^m) = Min(I)`, i.e. `s`.
    pub k_index: Option<u32>,
    pub extra_prime: Option<MonomialPrime>,
}

/// NTF when there is no special odd cycle, ANTF when `Δ` is itself a
/// special odd cycle, and oracle-only otherwise.
pub fn classify_complex(delta: &SimplicialComplex) -> ComplexVerdict {
    let special = find_special_odd_cycle(delta);
    let cycle_complex = verify_special_cycle_complex(delta);
    let (classification, k_index, extra_prime) = match (&special, &cycle_complex) {
        (None, _) => (Classification::Ntf, None, None),
        (Some(_), Some(v)) => (
            Classification::Antf,
            Some(v.s() as u32),
            Some(v.cycle_prime(delta.n)),
        ),
        (Some(_), None) => (Classification::OracleOnly, None, None),
    };
    ComplexVerdict {
        classification,
        special_odd_cycle: special,
        cycle_complex,
        k_index,
        extra_prime,
    }
}
