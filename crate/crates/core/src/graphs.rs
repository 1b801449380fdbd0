//! Simple graphs, their odd cycles, and the edge-ideal classifier.
//!
//! For a connected graph `G` with an odd cycle, `I(G)` is almost normally
//! torsionfree (with extra prime `𝔪`) exactly when every odd cycle `C`
//! satisfies `V(C) ∪ N(C) = [n]`; then `Ass(I^m) = Min(I)` for `m ≤ k` and
//! `Min(I) ∪ {𝔪}` for `m > k`, where `2k + 1` is the odd girth. Bipartite
//! graphs give normally torsionfree edge ideals.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::assprimes::{associated_primes, combine_disjoint_tables, PrimeSet};
use crate::budget::Budget;
use crate::error::AlgebraError;
use crate::monomial::{Monomial, MonomialIdeal};
use crate::transversal::minimal_transversals;
use crate::varset::{VarSet, MAX_VARS};
use crate::verdict::Classification;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has no vertices")]
    NoVertices,
    #[error("graph has more than {MAX_VARS} vertices")]
    TooManyVertices,
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("graph has no edges")]
    NoEdges,
    #[error("isolated vertices {0:?}; the classifier needs every vertex on an edge")]
    IsolatedVertices(Vec<usize>),
    #[error("graph is disconnected ({} components); classify the components and combine them with split_ass", .0.len())]
    Disconnected(Vec<Vec<usize>>),
    #[error("{0:?} is not a cycle of the graph")]
    NotACycle(Vec<usize>),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// A finite simple graph on the vertex set `[n]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<VarSet>,
}

impl Graph {
    /// Builds a graph; edges are unordered and stored as `(i, j)` with `i < j`.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        if n > MAX_VARS {
            return Err(GraphError::TooManyVertices);
        }
        let mut set = BTreeSet::new();
        let mut adj = vec![VarSet::empty(); n + 1];
        for &(a, b) in edges {
            for v in [a, b] {
                if v == 0 || v > n {
                    return Err(GraphError::VertexOutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(GraphError::Loop(a));
            }
            let e = (a.min(b), a.max(b));
            if !set.insert(e) {
                return Err(GraphError::DuplicateEdge(e.0, e.1));
            }
            adj[a] = adj[a].with(b);
            adj[b] = adj[b].with(a);
        }
        Ok(Self {
            n,
            edges: set.into_iter().collect(),
            adj,
        })
    }

    pub fn cycle_graph(n: usize) -> Self {
        let edges: Vec<_> = (1..=n).map(|i| (i, i % n + 1)).collect();
        Self::new(n, &edges).expect("valid cycle")
    }

    pub fn path_graph(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        Self::new(n, &edges).expect("valid path")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> VarSet {
        self.adj[v]
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a >= 1 && a <= self.n && self.adj[a].contains(b)
    }

    pub fn vertices(&self) -> VarSet {
        VarSet::full(self.n)
    }

    /// `N(A)`: every vertex adjacent to some vertex of `A`.
    pub fn neighborhood(&self, set: VarSet) -> VarSet {
        set.iter()
            .fold(VarSet::empty(), |acc, v| acc.union(self.adj[v]))
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (1..=self.n).filter(|&v| self.adj[v].is_empty()).collect()
    }

    /// Vertex sets of the connected components, ordered by smallest vertex.
    pub fn components(&self) -> Vec<VarSet> {
        let mut seen = VarSet::empty();
        let mut out = Vec::new();
        for start in 1..=self.n {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VarSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let next = self.neighborhood(frontier).difference(comp);
                comp = comp.union(next);
                frontier = next;
            }
            seen = seen.union(comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Induced subgraph on `keep`, relabeled to `1..=|keep|` in increasing
    /// order. Returns the graph and the original label of each new vertex.
    pub fn induced(&self, keep: VarSet) -> (Graph, Vec<usize>) {
        let labels: Vec<usize> = keep.iter().collect();
        let pos = |v: usize| labels.iter().position(|&x| x == v).unwrap() + 1;
        let edges: Vec<_> = self
            .edges
            .iter()
            .filter(|(a, b)| keep.contains(*a) && keep.contains(*b))
            .map(|&(a, b)| (pos(a), pos(b)))
            .collect();
        (
            Graph::new(labels.len(), &edges).expect("induced subgraph"),
            labels,
        )
    }

    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![0u8; self.n + 1];
        for start in 1..=self.n {
            if color[start] != 0 {
                continue;
            }
            color[start] = 1;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for w in self.adj[v].iter() {
                    if color[w] == 0 {
                        color[w] = 3 - color[v];
                        stack.push(w);
                    } else if color[w] == color[v] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Serializes in the `graph <n>` text format.
    pub fn to_text(&self) -> String {
        let mut s = format!("graph {}\n", self.n);
        for (a, b) in &self.edges {
            s.push_str(&format!("{a} {b}\n"));
        }
        s
    }
}

/// An elementary cycle `(i_0, ..., i_{r-1})`, stored in canonical form: the
/// rotation starting at the smallest vertex, in the direction whose second
/// vertex is smaller.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Cycle {
    vertices: Vec<usize>,
}

impl Cycle {
    /// Canonicalizes a cyclic vertex sequence. Does not check edges.
    pub fn new(vertices: Vec<usize>) -> Self {
        let r = vertices.len();
        if r == 0 {
            return Self { vertices };
        }
        let start = (0..r).min_by_key(|&i| vertices[i]).unwrap();
        let forward: Vec<usize> = (0..r).map(|k| vertices[(start + k) % r]).collect();
        let backward: Vec<usize> = (0..r).map(|k| vertices[(start + r - k) % r]).collect();
        Self {
            vertices: forward.min(backward),
        }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_odd(&self) -> bool {
        self.vertices.len() % 2 == 1
    }

    pub fn vertex_set(&self) -> VarSet {
        VarSet::from_indices(self.vertices.iter().copied())
    }

    /// Whether this is an elementary cycle of `g`.
    pub fn is_cycle_of(&self, g: &Graph) -> bool {
        let r = self.vertices.len();
        r >= 3
            && self.vertex_set().len() == r
            && self.vertices.iter().all(|&v| v >= 1 && v <= g.n())
            && (0..r).all(|i| g.has_edge(self.vertices[i], self.vertices[(i + 1) % r]))
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// Every elementary cycle of `g`, each reported once in canonical form.
pub fn enumerate_cycles(g: &Graph) -> Vec<Cycle> {
    fn extend(g: &Graph, root: usize, path: &mut Vec<usize>, on_path: VarSet, out: &mut Vec<Cycle>) {
        let last = *path.last().unwrap();
        for w in g.neighbors(last).iter() {
            if w == root && path.len() >= 3 && path[1] < last {
                out.push(Cycle {
                    vertices: path.clone(),
                });
            } else if w > root && !on_path.contains(w) {
                path.push(w);
                extend(g, root, path, on_path.with(w), out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    for root in 1..=g.n() {
        let mut path = vec![root];
        extend(g, root, &mut path, VarSet::singleton(root), &mut out);
    }
    out.sort();
    out
}

/// Every odd elementary cycle, not only induced ones.
pub fn enumerate_odd_cycles(g: &Graph) -> Vec<Cycle> {
    enumerate_cycles(g).into_iter().filter(Cycle::is_odd).collect()
}

/// `V(C) ∪ N(V(C))`.
pub fn neighborhood_closure(g: &Graph, c: &Cycle) -> Result<VarSet, GraphError> {
    if !c.is_cycle_of(g) {
        return Err(GraphError::NotACycle(c.vertices.clone()));
    }
    let vc = c.vertex_set();
    Ok(vc.union(g.neighborhood(vc)))
}

pub fn edge_ideal(g: &Graph) -> Result<MonomialIdeal, GraphError> {
    if g.edges.is_empty() {
        return Err(GraphError::NoEdges);
    }
    let gens = g
        .edges
        .iter()
        .map(|&(a, b)| Monomial::squarefree(g.n, [a, b]))
        .collect();
    Ok(MonomialIdeal::new(g.n, gens)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphVerdict {
    pub connected: bool,
    pub bipartite: bool,
    pub classification: Classification,
    /// For ANTF: the last power with `Ass(I^m) = Min(I)`.
    pub k_index: Option<u32>,
    pub failing_cycle: Option<Cycle>,
    /// `V(C) ∪ N(C)` of the failing cycle, as sorted vertices.
    pub failing_closure: Option<Vec<usize>>,
    /// Length of the shortest odd cycle, when there is one.
    pub odd_girth: Option<usize>,
}

fn check_classifiable(g: &Graph) -> Result<(), GraphError> {
    if g.edges.is_empty() {
        return Err(GraphError::NoEdges);
    }
    let isolated = g.isolated_vertices();
    if !isolated.is_empty() {
        return Err(GraphError::IsolatedVertices(isolated));
    }
    let comps = g.components();
    if comps.len() > 1 {
        return Err(GraphError::Disconnected(
            comps.into_iter().map(|c| c.iter().collect()).collect(),
        ));
    }
    Ok(())
}

/// Closed-form classification of `I(G)` for a connected graph.
///
/// When several odd cycles fail the closure condition, the reported one
/// has the smallest closure, then the shortest length, then the smallest
/// canonical vertex sequence.
pub fn classify_edge_ideal(g: &Graph) -> Result<GraphVerdict, GraphError> {
    check_classifiable(g)?;
    let odd = enumerate_odd_cycles(g);
    if odd.is_empty() {
        return Ok(GraphVerdict {
            connected: true,
            bipartite: true,
            classification: Classification::Ntf,
            k_index: None,
            failing_cycle: None,
            failing_closure: None,
            odd_girth: None,
        });
    }
    let odd_girth = odd.iter().map(Cycle::len).min().unwrap();
    let full = g.vertices();
    let failing = odd
        .iter()
        .map(|c| (c, neighborhood_closure(g, c).expect("enumerated cycle")))
        .filter(|(_, closure)| *closure != full)
        .min_by(|(c1, s1), (c2, s2)| {
            s1.len()
                .cmp(&s2.len())
                .then(c1.len().cmp(&c2.len()))
                .then_with(|| c1.cmp(c2))
        });
    let verdict = match failing {
        None => GraphVerdict {
            connected: true,
            bipartite: false,
            classification: Classification::Antf,
            k_index: Some(((odd_girth - 1) / 2) as u32),
            failing_cycle: None,
            failing_closure: None,
            odd_girth: Some(odd_girth),
        },
        Some((c, closure)) => GraphVerdict {
            connected: true,
            bipartite: false,
            classification: Classification::NotAntf,
            k_index: None,
            failing_cycle: Some(c.clone()),
            failing_closure: Some(closure.iter().collect()),
            odd_girth: Some(odd_girth),
        },
    };
    Ok(verdict)
}

/// Inclusion-minimal vertex covers, sorted.
pub fn minimal_vertex_covers(g: &Graph) -> Vec<VarSet> {
    let edges: Vec<VarSet> = g
        .edges
        .iter()
        .map(|&(a, b)| VarSet::from_indices([a, b]))
        .collect();
    minimal_transversals(&edges)
}

/// `a_i + a_j ≥ b` on every edge.
pub fn is_cover_of_order(g: &Graph, a: &[u32], b: u32) -> bool {
    g.edges.iter().all(|&(i, j)| a[i - 1] + a[j - 1] >= b)
}

/// Whether `a` splits as `a_1 + a_2` (both nonzero) with `a_t` a cover of
/// order `b_t` and `b_1 + b_2 = b`.
pub fn is_decomposable(g: &Graph, a: &[u32], b: u32) -> bool {
    let n = a.len();
    let mut part = vec![0u32; n];
    let mut rest = a.to_vec();
    loop {
        // advance `part` through the box [0, a] like an odometer
        let mut pos = 0;
        while pos < n && part[pos] == a[pos] {
            part[pos] = 0;
            rest[pos] = a[pos];
            pos += 1;
        }
        if pos == n {
            return false;
        }
        part[pos] += 1;
        rest[pos] -= 1;
        if rest.iter().all(|&x| x == 0) {
            continue;
        }
        if (0..=b).any(|b1| is_cover_of_order(g, &part, b1) && is_cover_of_order(g, &rest, b - b1)) {
            return true;
        }
    }
}

/// All indecomposable vertex covers of order `b ≥ 1`, sorted. Entries are
/// at most `b`: an entry above `b` leaves room to split off the order-0
/// cover `e_i`.
pub fn indecomposable_covers(g: &Graph, b: u32) -> Vec<Vec<u32>> {
    let n = g.n;
    let mut out = Vec::new();
    let mut a = vec![0u32; n];
    loop {
        if a.iter().any(|&x| x > 0) && is_cover_of_order(g, &a, b) && !is_decomposable(g, &a, b) {
            out.push(a.clone());
        }
        let mut pos = 0;
        while pos < n && a[pos] == b {
            a[pos] = 0;
            pos += 1;
        }
        if pos == n {
            break;
        }
        a[pos] += 1;
    }
    out.sort();
    out
}

/// Whether the symbolic Rees algebra of `I(G)` is generated by
/// `x_1 ⋯ x_n t^2` together with the minimal vertex covers in degree one:
/// every vertex is adjacent to every odd cycle.
pub fn rees_generation_check(g: &Graph) -> Result<bool, GraphError> {
    check_classifiable(g)?;
    let odd = enumerate_odd_cycles(g);
    Ok(odd.iter().all(|c| {
        let vc = c.vertex_set();
        (1..=g.n).all(|i| g.neighbors(i).intersects(vc))
    }))
}

/// `Ass(I(G)^k)` for `k = 1..=kmax` on a graph with several components,
/// assembled from the components' tables. Isolated vertices are ignored.
pub fn composite_ass_table(
    g: &Graph,
    kmax: u32,
    budget: &Budget,
) -> Result<Vec<PrimeSet>, GraphError> {
    let ideal = edge_ideal(g)?;
    let mut tables = Vec::new();
    for comp in g.components() {
        if comp.len() < 2 {
            continue;
        }
        let gens: Vec<Monomial> = ideal
            .generators()
            .iter()
            .filter(|m| m.support().is_subset_of(comp))
            .cloned()
            .collect();
        let block = MonomialIdeal::new(g.n, gens)?;
        let mut table = Vec::with_capacity(kmax as usize);
        let mut current = block.clone();
        for k in 1..=kmax {
            if k > 1 {
                current = current.product(&block)?;
            }
            table.push(associated_primes(&current, budget)?);
        }
        tables.push(table);
    }
    Ok(combine_disjoint_tables(&tables, g.n)?)
}

/// All connected graphs on `n` vertices up to isomorphism, each in the
/// labeling with the lexicographically smallest sorted edge list.
pub fn connected_graphs_up_to_isomorphism(n: usize) -> Vec<Graph> {
    assert!((1..=7).contains(&n), "exhaustive enumeration limited to n ≤ 7");
    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|a| (a + 1..=n).map(move |b| (a, b)))
        .collect();
    let perms = permutations(n);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::new(n, &edges).expect("valid edges");
        if (n > 1 && !g.isolated_vertices().is_empty()) || !g.is_connected() {
            continue;
        }
        let canon = perms
            .iter()
            .map(|p| {
                let mut e: Vec<(usize, usize)> = edges
                    .iter()
                    .map(|&(a, b)| {
                        let (x, y) = (p[a - 1], p[b - 1]);
                        (x.min(y), x.max(y))
                    })
                    .collect();
                e.sort();
                e
            })
            .min()
            .unwrap();
        if seen.insert(canon.clone()) {
            out.push(Graph::new(n, &canon).expect("relabeled graph"));
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (1..=n).collect();
    fn heap(k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(cur.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, cur, out);
            let j = if k.is_multiple_of(2) { i } else { 0 };
            cur.swap(j, k - 1);
        }
    }
    heap(n, &mut cur, &mut out);
    out
}

/// The 8-vertex, 14-edge graph whose triangle `(6,7,8)` fails the closure
/// condition while `(5,6,7)` satisfies it: the 4-cycle `1-2-3-4`, a `K_4`
/// on `{5,6,7,8}`, and the edges `1-5, 2-5, 3-6, 4-7`.
pub fn eight_vertex_example() -> Graph {
    Graph::new(
        8,
        &[
            (1, 2),
            (2, 3),
            (3, 4),
            (1, 4),
            (4, 7),
            (6, 7),
            (3, 6),
            (1, 5),
            (2, 5),
            (5, 7),
            (5, 6),
            (6, 8),
            (7, 8),
            (5, 8),
        ],
    )
    .expect("valid example graph")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::assprimes::minimal_primes;

    fn triangle() -> Graph {
        Graph::cycle_graph(3)
    }

    /// Odd cycles by brute force: every vertex subset, every cyclic order.
    fn brute_force_odd_cycles(g: &Graph) -> BTreeSet<Cycle> {
        let mut out = BTreeSet::new();
        for subset in g.vertices().subsets() {
            let r = subset.len();
            if r < 3 || r % 2 == 0 {
                continue;
            }
            let verts: Vec<usize> = subset.iter().collect();
            for p in permutations(r) {
                let order: Vec<usize> = p.iter().map(|&i| verts[i - 1]).collect();
                let c = Cycle::new(order);
                if c.is_cycle_of(g) {
                    out.insert(c);
                }
            }
        }
        out
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Graph::new(3, &[(3, 3)]), Err(GraphError::Loop(3)));
        assert_eq!(
            Graph::new(3, &[(1, 4)]),
            Err(GraphError::VertexOutOfRange { vertex: 4, n: 3 })
        );
        assert_eq!(
            Graph::new(3, &[(1, 2), (2, 1)]),
            Err(GraphError::DuplicateEdge(1, 2))
        );
    }

    #[test]
    fn edge_ideal_examples() {
        let t = edge_ideal(&triangle()).unwrap();
        assert_eq!(t.to_string(), "(x2*x3, x1*x3, x1*x2)");
        assert_eq!(edge_ideal(&eight_vertex_example()).unwrap().generators().len(), 14);
        assert_eq!(
            edge_ideal(&Graph::path_graph(3)).unwrap().to_string(),
            "(x2*x3, x1*x2)"
        );
        assert_eq!(
            edge_ideal(&Graph::new(2, &[]).unwrap()),
            Err(GraphError::NoEdges)
        );
    }

    #[test]
    fn odd_cycles_examples() {
        assert!(enumerate_odd_cycles(&Graph::path_graph(5)).is_empty());
        assert!(enumerate_odd_cycles(&Graph::cycle_graph(6)).is_empty());
        let c5 = enumerate_odd_cycles(&Graph::cycle_graph(5));
        assert_eq!(c5, vec![Cycle::new(vec![1, 2, 3, 4, 5])]);
        let fig = enumerate_odd_cycles(&eight_vertex_example());
        assert!(fig.contains(&Cycle::new(vec![5, 6, 7])));
        assert!(fig.contains(&Cycle::new(vec![6, 7, 8])));
    }

    #[test]
    fn cycle_canonical_form() {
        assert_eq!(Cycle::new(vec![7, 5, 6]).vertices(), &[5, 6, 7]);
        assert_eq!(Cycle::new(vec![3, 1, 4, 2]).vertices(), &[1, 3, 2, 4]);
        assert_eq!(Cycle::new(vec![2, 1, 3]), Cycle::new(vec![1, 2, 3]));
    }

    #[test]
    fn odd_cycle_enumeration_is_exhaustive() {
        let mut seed = 12345u64;
        for n in 3..=7 {
            for _ in 0..15 {
                let mut edges = Vec::new();
                for a in 1..=n {
                    for b in a + 1..=n {
                        seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1);
                        if (seed >> 40) % 100 < 45 {
                            edges.push((a, b));
                        }
                    }
                }
                let g = Graph::new(n, &edges).unwrap();
                let fast: BTreeSet<Cycle> = enumerate_odd_cycles(&g).into_iter().collect();
                assert_eq!(fast, brute_force_odd_cycles(&g), "{edges:?}");
            }
        }
    }

    #[test]
    fn complete_graph_cycle_count() {
        // K_5: C(5,3)·1 + C(5,4)·3 + 12 = 10 + 15 + 12
        let edges: Vec<_> = (1..=5)
            .flat_map(|a| (a + 1..=5).map(move |b| (a, b)))
            .collect();
        let k5 = Graph::new(5, &edges).unwrap();
        assert_eq!(enumerate_cycles(&k5).len(), 37);
    }

    #[test]
    fn closure_examples() {
        let g = eight_vertex_example();
        let c1 = neighborhood_closure(&g, &Cycle::new(vec![5, 6, 7])).unwrap();
        assert_eq!(c1, VarSet::full(8));
        let c2 = neighborhood_closure(&g, &Cycle::new(vec![6, 7, 8])).unwrap();
        assert_eq!(c2, VarSet::from_indices([3, 4, 5, 6, 7, 8]));
        let t = neighborhood_closure(&triangle(), &Cycle::new(vec![1, 2, 3])).unwrap();
        assert_eq!(t, VarSet::full(3));
        assert!(matches!(
            neighborhood_closure(&g, &Cycle::new(vec![1, 2, 8])),
            Err(GraphError::NotACycle(_))
        ));
    }

    #[test]
    fn classify_examples() {
        let v = classify_edge_ideal(&triangle()).unwrap();
        assert_eq!(v.classification, Classification::Antf);
        assert_eq!(v.k_index, Some(1));

        let v = classify_edge_ideal(&Graph::cycle_graph(5)).unwrap();
        assert_eq!(v.classification, Classification::Antf);
        assert_eq!(v.k_index, Some(2));

        let v = classify_edge_ideal(&Graph::path_graph(4)).unwrap();
        assert_eq!(v.classification, Classification::Ntf);
        assert!(v.bipartite);

        let v = classify_edge_ideal(&eight_vertex_example()).unwrap();
        assert_eq!(v.classification, Classification::NotAntf);
        assert_eq!(v.failing_cycle, Some(Cycle::new(vec![6, 7, 8])));
        assert_eq!(v.failing_closure, Some(vec![3, 4, 5, 6, 7, 8]));
    }

    #[test]
    fn classify_rejects_bad_hypotheses() {
        let two_edges = Graph::new(4, &[(1, 2), (3, 4)]).unwrap();
        assert!(matches!(
            classify_edge_ideal(&two_edges),
            Err(GraphError::Disconnected(c)) if c == vec![vec![1, 2], vec![3, 4]]
        ));
        let isolated = Graph::new(4, &[(1, 2), (2, 3), (1, 3)]).unwrap();
        assert_eq!(
            classify_edge_ideal(&isolated),
            Err(GraphError::IsolatedVertices(vec![4]))
        );
        assert_eq!(
            classify_edge_ideal(&Graph::new(3, &[]).unwrap()),
            Err(GraphError::NoEdges)
        );
    }

    #[test]
    fn minimal_cover_examples() {
        assert_eq!(minimal_vertex_covers(&triangle()).len(), 3);
        assert_eq!(
            minimal_vertex_covers(&Graph::path_graph(3)),
            vec![VarSet::from_indices([2]), VarSet::from_indices([1, 3])]
        );
        let fig = eight_vertex_example();
        let covers = minimal_vertex_covers(&fig);
        assert_eq!(covers.len(), 8);
        let from_ideal: Vec<VarSet> = minimal_primes(&edge_ideal(&fig).unwrap())
            .unwrap()
            .iter()
            .map(|p| p.vars())
            .collect();
        let mut covers_sorted = covers.clone();
        covers_sorted.sort_by(|a, b| a.iter().cmp(b.iter()));
        assert_eq!(covers_sorted, from_ideal);
    }

    #[test]
    fn indecomposable_cover_examples() {
        let t = triangle();
        let b1 = indecomposable_covers(&t, 1);
        let expected: Vec<Vec<u32>> = vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]];
        assert_eq!(b1, expected);
        let b2 = indecomposable_covers(&t, 2);
        assert!(b2.contains(&vec![1, 1, 1]));
        assert_eq!(b2, vec![vec![1, 1, 1]]);

        let edge = Graph::new(2, &[(1, 2)]).unwrap();
        assert!(is_decomposable(&edge, &[1, 1], 2));
        assert!(indecomposable_covers(&edge, 2).is_empty());
        // an entry above the order splits off e_i
        assert!(is_decomposable(&t, &[3, 1, 1], 2));
    }

    #[test]
    fn rees_examples() {
        assert!(rees_generation_check(&triangle()).unwrap());
        assert!(rees_generation_check(&Graph::cycle_graph(5)).unwrap());
        assert!(rees_generation_check(&Graph::path_graph(4)).unwrap());
        assert!(!rees_generation_check(&eight_vertex_example()).unwrap());
    }

    #[test]
    fn isomorphism_class_counts() {
        // OEIS A001349: 1, 1, 2, 6, 21, 112
        let counts: Vec<usize> = (1..=6)
            .map(|n| connected_graphs_up_to_isomorphism(n).len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn composite_table_matches_direct_oracle() {
        let g = Graph::new(6, &[(1, 2), (2, 3), (1, 3), (4, 5), (5, 6)]).unwrap();
        let b = Budget::unlimited();
        let table = composite_ass_table(&g, 3, &b).unwrap();
        let i = edge_ideal(&g).unwrap();
        for k in 1..=3u32 {
            let direct = associated_primes(&i.power(k), &b).unwrap();
            assert_eq!(table[(k - 1) as usize], direct, "k = {k}");
        }
    }
}
