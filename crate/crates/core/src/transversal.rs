//! Minimal transversals (minimal hitting sets) of a hypergraph, computed
//! incrementally edge by edge.

use crate::varset::VarSet;

/// All inclusion-minimal sets meeting every edge, sorted by bit pattern.
/// With no edges the empty set is the unique transversal; an empty edge
/// admits none.
pub fn minimal_transversals(edges: &[VarSet]) -> Vec<VarSet> {
    let mut edges: Vec<VarSet> = edges.to_vec();
    edges.sort_by_key(|e| (e.len(), e.bits()));
    edges.dedup();
    let mut current = vec![VarSet::empty()];
    for &edge in &edges {
        let mut next = Vec::with_capacity(current.len() * 2);
        for &t in &current {
            if t.intersects(edge) {
                next.push(t);
            } else {
                next.extend(edge.iter().map(|v| t.with(v)));
            }
        }
        current = keep_minimal(next);
    }
    current.sort();
    current
}

fn keep_minimal(mut sets: Vec<VarSet>) -> Vec<VarSet> {
    sets.sort_by_key(|s| (s.len(), s.bits()));
    sets.dedup();
    let mut kept: Vec<VarSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| k.is_subset_of(s)) {
            kept.push(s);
        }
    }
    kept
}

pub fn is_transversal(set: VarSet, edges: &[VarSet]) -> bool {
    edges.iter().all(|&e| e.intersects(set))
}
