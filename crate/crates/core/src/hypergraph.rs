//! Set-family helpers over [`VertexSet`]: inclusion-extremal filtering and
//! minimal transversals.

use crate::vertex_set::VertexSet;

/// Inclusion-minimal members of `sets`, deduplicated and sorted.
pub fn minimal_sets(sets: impl IntoIterator<Item = VertexSet>) -> Vec<VertexSet> {
    let mut sorted: Vec<VertexSet> = sets.into_iter().collect();
    sorted.sort_by_key(|s| (s.len(), *s));
    sorted.dedup();
    let mut kept: Vec<VertexSet> = Vec::new();
    for s in sorted {
        if !kept.iter().any(|k| k.is_subset(s)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}

/// Inclusion-maximal members of `sets`, deduplicated and sorted.
pub fn maximal_sets(sets: impl IntoIterator<Item = VertexSet>) -> Vec<VertexSet> {
    let mut sorted: Vec<VertexSet> = sets.into_iter().collect();
    sorted.sort_by_key(|s| (std::cmp::Reverse(s.len()), *s));
    sorted.dedup();
    let mut kept: Vec<VertexSet> = Vec::new();
    for s in sorted {
        if !kept.iter().any(|k| s.is_subset(*k)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}

/// Minimal sets meeting every edge (Berge's incremental algorithm).
///
/// Returns an empty family when some edge is empty, since nothing meets it.
pub fn minimal_transversals(edges: &[VertexSet]) -> Vec<VertexSet> {
    let mut edges = minimal_sets(edges.iter().copied());
    if edges.first().is_some_and(|e| e.is_empty()) {
        return Vec::new();
    }
    // small edges first keeps the intermediate families narrow
    edges.sort_by_key(|e| (e.len(), *e));
    let mut current = vec![VertexSet::EMPTY];
    for edge in edges {
        let mut next = Vec::with_capacity(current.len());
        for t in &current {
            if !t.is_disjoint(edge) {
                next.push(*t);
            } else {
                next.extend(edge.iter().map(|v| t.with(v)));
            }
        }
        current = minimal_sets(next);
    }
    current
}
