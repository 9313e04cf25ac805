//! Facet-based simplicial complexes.
//!
//! A [`SimplicialComplex`] is stored as an explicit ground set together with
//! its inclusion-maximal faces. Ground vertices that lie in no facet are
//! *unsupported*: they take no part in `f_0`, connectivity or purity.

use serde::{Deserialize, Serialize};

use crate::combinatorics::{binomial, Partition};
use crate::hypergraph::{maximal_sets, minimal_transversals};
use crate::vertex_set::VertexSet;
use crate::{Error, Result};

/// Face counts `(f_{-1}, f_0, ..., f_d)`; `counts[i]` is the number of faces
/// with `i` vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FVector(pub Vec<u128>);

/// `(h_0, ..., h_{d+1})`. Entries may be negative.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HVector(pub Vec<i128>);

impl FVector {
    pub fn counts(&self) -> &[u128] {
        &self.0
    }

    /// Dimension `d` of the complex this vector describes.
    pub fn dim(&self) -> i64 {
        self.0.len() as i64 - 2
    }

    /// Number of top-dimensional faces `f_d`.
    pub fn top(&self) -> u128 {
        *self.0.last().expect("f-vector always holds f_{-1}")
    }
}

impl HVector {
    pub fn entries(&self) -> &[i128] {
        &self.0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    ground: VertexSet,
    facets: Vec<VertexSet>,
}

#[derive(Serialize, Deserialize)]
struct ComplexJson {
    facets: Vec<VertexSet>,
    ground: VertexSet,
}

impl Serialize for SimplicialComplex {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        ComplexJson {
            facets: self.facets.clone(),
            ground: self.ground,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SimplicialComplex {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = ComplexJson::deserialize(deserializer)?;
        SimplicialComplex::from_facet_candidates(raw.ground, raw.facets).map_err(serde::de::Error::custom)
    }
}

impl SimplicialComplex {
    /// `<sets>`: the complex generated by `sets`, keeping only the
    /// inclusion-maximal candidates as facets.
    pub fn from_facet_candidates(ground: VertexSet, sets: impl IntoIterator<Item = VertexSet>) -> Result<Self> {
        let sets: Vec<VertexSet> = sets.into_iter().collect();
        if let Some(bad) = sets.iter().find(|s| !s.is_subset(ground)) {
            return Err(Error::Domain(format!(
                "candidate {bad} is not contained in ground set {ground}"
            )));
        }
        if sets.is_empty() {
            return Err(Error::Domain(
                "a complex needs at least one candidate set (use {{}} for the empty complex)".into(),
            ));
        }
        Ok(SimplicialComplex {
            ground,
            facets: maximal_sets(sets),
        })
    }

    /// The complex `{ {} }` whose only face is the empty set.
    pub fn empty_face_only(ground: VertexSet) -> Self {
        SimplicialComplex {
            ground,
            facets: vec![VertexSet::EMPTY],
        }
    }

    /// The full simplex on `vertices`.
    pub fn simplex(vertices: VertexSet) -> Self {
        SimplicialComplex {
            ground: vertices,
            facets: vec![vertices],
        }
    }

    pub fn ground(&self) -> VertexSet {
        self.ground
    }

    /// Facets in lexicographic order.
    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    /// Vertices lying in at least one facet.
    pub fn supported_vertices(&self) -> VertexSet {
        self.facets.iter().fold(VertexSet::EMPTY, |acc, f| acc.union(*f))
    }

    /// `-1` for the complex `{ {} }`.
    pub fn dim(&self) -> i64 {
        self.facets.iter().map(|f| f.len() as i64).max().unwrap_or(0) - 1
    }

    pub fn contains_face(&self, s: VertexSet) -> bool {
        self.facets.iter().any(|f| s.is_subset(*f))
    }

    /// Counts faces by size without materialising the whole complex.
    ///
    /// Faces are generated in increasing-vertex order while tracking which
    /// facets still contain the partial face. Once only one facet remains,
    /// the rest of that branch is a simplex and is counted with binomials.
    pub fn faces_by_dimension(&self) -> FVector {
        let top = (self.dim() + 2) as usize;
        let mut counts = vec![0u128; top];
        counts[0] = 1;
        let all: Vec<usize> = (0..self.facets.len()).collect();
        self.count_faces(0, None, &all, &mut counts);
        FVector(counts)
    }

    fn count_faces(&self, size: usize, last: Option<u32>, holders: &[usize], counts: &mut [u128]) {
        let reach = holders
            .iter()
            .fold(VertexSet::EMPTY, |acc, &i| acc.union(self.facets[i]));
        let reach = match last {
            Some(v) => reach.above(v),
            None => reach,
        };
        for v in reach {
            let next: Vec<usize> = holders
                .iter()
                .copied()
                .filter(|&i| self.facets[i].contains(v))
                .collect();
            if let [only] = next[..] {
                let rest = self.facets[only].above(v).len() as u64;
                for j in 0..=rest {
                    let slot = &mut counts[size + 1 + j as usize];
                    *slot = slot.checked_add(binomial(rest, j as i64)).expect("face count overflow");
                }
            } else {
                counts[size + 1] += 1;
                self.count_faces(size + 1, Some(v), &next, counts);
            }
        }
    }

    pub fn h_vector(&self) -> HVector {
        f_to_h(&self.faces_by_dimension())
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    /// Graph connectivity of the 1-skeleton on the supported vertices.
    pub fn is_connected(&self) -> bool {
        let vertices = self.supported_vertices();
        let mut parent: Vec<u32> = (0..64).collect();
        fn find(parent: &mut [u32], mut x: u32) -> u32 {
            while parent[x as usize] != x {
                parent[x as usize] = parent[parent[x as usize] as usize];
                x = parent[x as usize];
            }
            x
        }
        for f in &self.facets {
            if let Some(root) = f.first() {
                for v in f.iter() {
                    let (a, b) = (find(&mut parent, root), find(&mut parent, v));
                    parent[a as usize] = b;
                }
            }
        }
        let mut roots = vertices.iter().map(|v| find(&mut parent, v));
        match roots.next() {
            None => true,
            Some(first) => roots.all(|r| r == first),
        }
    }

    /// Vertices that are facets by themselves.
    pub fn isolated_vertices(&self) -> VertexSet {
        self.facets
            .iter()
            .filter(|f| f.len() == 1)
            .fold(VertexSet::EMPTY, |acc, f| acc.union(*f))
    }

    /// If the facets are pairwise disjoint, the partition of facet sizes.
    pub fn decompose_disjoint_simplices(&self) -> Option<Partition> {
        let mut seen = VertexSet::EMPTY;
        for f in &self.facets {
            if !seen.is_disjoint(*f) {
                return None;
            }
            seen = seen.union(*f);
        }
        let sizes = self.facets.iter().map(|f| f.len()).filter(|&s| s > 0).collect();
        Some(Partition::from_parts(sizes).expect("sizes are positive"))
    }

    /// Inclusion-minimal subsets of the ground set that are not faces.
    ///
    /// `S` is a non-face exactly when it meets the complement of every facet,
    /// so these are the minimal transversals of the facet complements.
    pub fn minimal_nonfaces(&self) -> Vec<VertexSet> {
        let complements: Vec<VertexSet> = self.facets.iter().map(|f| self.ground.difference(*f)).collect();
        minimal_transversals(&complements)
    }

    /// `{ S ⊆ ground : ground \ S is not a face }`.
    ///
    /// Its facets are the complements of the minimal non-faces. Fails with
    /// [`Error::VoidDual`] for the full simplex on the ground set, whose dual
    /// has no faces at all.
    pub fn alexander_dual(&self) -> Result<SimplicialComplex> {
        let nonfaces = self.minimal_nonfaces();
        if nonfaces.is_empty() {
            return Err(Error::VoidDual);
        }
        let facets = nonfaces.into_iter().map(|n| self.ground.difference(n));
        SimplicialComplex::from_facet_candidates(self.ground, facets)
    }
}

/// Applies `h_k = sum_{i=0}^{k} (-1)^{k-i} C(d+1-i, d+1-k) f_{i-1}` verbatim.
pub fn f_to_h(f: &FVector) -> HVector {
    let top = f.0.len() as u64 - 1; // d + 1
    let mut h = Vec::with_capacity(f.0.len());
    for k in 0..=top {
        let mut acc: i128 = 0;
        for i in 0..=k {
            let term = binomial(top - i, (top - k) as i64)
                .checked_mul(f.0[i as usize])
                .and_then(|t| i128::try_from(t).ok())
                .expect("h-vector term overflows i128");
            acc = if (k - i) % 2 == 0 {
                acc.checked_add(term)
            } else {
                acc.checked_sub(term)
            }
            .expect("h-vector overflow");
        }
        h.push(acc);
    }
    HVector(h)
}

/// f-vector of the disjoint union of `(lambda_i - 1)`-simplices:
/// `f_{k-1} = sum_i C(lambda_i, k)`.
pub fn f_vector_disjoint_simplices(lambda: &Partition) -> FVector {
    let mut f = vec![1u128];
    for k in 1..=lambda.largest() as i64 {
        f.push(lambda.parts().iter().map(|&p| binomial(p as u64, k)).sum());
    }
    FVector(f)
}

/// h-vector of the disjoint union of `(lambda_i - 1)`-simplices through the
/// conjugate partition `mu`:
/// `(-1)^{k-1} h_k = sum_{m=1}^{L-k+1} C(L-m, k-1) (mu_m - 1)`, `L = lambda_1`.
pub fn h_vector_disjoint_simplices(lambda: &Partition) -> HVector {
    let largest = lambda.largest() as u64;
    let mu = lambda.conjugate();
    let mut h = vec![1i128];
    for k in 1..=largest {
        let mut acc: i128 = 0;
        for m in 1..=(largest - k + 1) {
            let excess = mu.parts()[m as usize - 1] as i128 - 1;
            acc += binomial(largest - m, k as i64 - 1) as i128 * excess;
        }
        h.push(if k % 2 == 1 { acc } else { -acc });
    }
    HVector(h)
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;

    fn vs(xs: &[u32]) -> VertexSet {
        VertexSet::try_from_slice(xs).unwrap()
    }

    fn cx(ground: &[u32], facets: &[&[u32]]) -> SimplicialComplex {
        SimplicialComplex::from_facet_candidates(vs(ground), facets.iter().map(|f| vs(f))).unwrap()
    }

    fn part(xs: &[u32]) -> Partition {
        Partition::from_parts(xs.to_vec()).unwrap()
    }

    /// Direct subset enumeration with deduplication.
    fn brute_f(c: &SimplicialComplex) -> FVector {
        let mut faces = HashSet::new();
        for f in c.facets() {
            let bits = f.bits();
            let mut sub = bits;
            loop {
                faces.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & bits;
            }
        }
        let mut counts = vec![0u128; (c.dim() + 2) as usize];
        for s in faces {
            counts[s.count_ones() as usize] += 1;
        }
        FVector(counts)
    }

    /// Disjoint union of simplices of the given sizes on fresh labels.
    fn explicit_union(lambda: &Partition) -> SimplicialComplex {
        let mut next = 0;
        let mut facets = Vec::new();
        for &p in lambda.parts() {
            facets.push(VertexSet::from_iter(next..next + p));
            next += p;
        }
        SimplicialComplex::from_facet_candidates(VertexSet::range(next), facets).unwrap()
    }

    fn corpus() -> Vec<SimplicialComplex> {
        vec![
            cx(&[1, 2, 3, 4, 5], &[&[1, 3, 5]]),
            cx(&(0..12).collect::<Vec<_>>(), &[&[1, 5, 9], &[3, 7, 11]]),
            cx(&(0..9).collect::<Vec<_>>(), &[&[1, 4, 7], &[2, 5, 8], &[3], &[6]]),
            cx(&[1, 2, 3, 4, 5, 6], &[&[1, 2, 3], &[3, 4], &[5, 6]]),
            cx(&[1, 2, 3, 4], &[&[1, 2], &[2, 3], &[3, 4], &[1, 4]]),
            cx(&[0, 1, 2, 3, 4, 5], &[&[1, 4], &[2, 5], &[1, 3, 5]]),
            cx(&[1, 2, 3], &[&[]]),
            cx(
                &[0, 1, 2, 3, 4, 5, 6, 7],
                &[&[0, 1, 2, 3], &[2, 3, 4, 5], &[4, 5, 6, 7], &[0, 6]],
            ),
            cx(
                &(0..12).collect::<Vec<_>>(),
                &[&[0, 1, 2, 3, 4, 5, 6], &[5, 6, 7, 8, 9], &[9, 10, 11], &[0, 11]],
            ),
        ]
    }

    #[test]
    fn candidates_are_reduced_to_facets() {
        assert_eq!(cx(&[1, 2, 3], &[&[1, 2], &[1]]).facets(), &[vs(&[1, 2])]);
        assert_eq!(cx(&[1, 3, 5], &[&[1, 3, 5]]).facets(), &[vs(&[1, 3, 5])]);
        assert_eq!(cx(&[1, 2], &[&[]]).facets(), &[VertexSet::EMPTY]);
        assert!(SimplicialComplex::from_facet_candidates(vs(&[1, 2]), [vs(&[3])]).is_err());
    }

    #[test]
    fn f_vector_examples() {
        assert_eq!(cx(&[1, 3, 5], &[&[1, 3, 5]]).faces_by_dimension().0, vec![1, 3, 3, 1]);
        assert_eq!(
            cx(&(0..12).collect::<Vec<_>>(), &[&[1, 5, 9], &[3, 7, 11]])
                .faces_by_dimension()
                .0,
            vec![1, 6, 6, 2]
        );
        assert_eq!(cx(&[1], &[&[]]).faces_by_dimension().0, vec![1]);
    }

    #[test]
    fn f_to_h_examples() {
        assert_eq!(f_to_h(&FVector(vec![1, 6, 6, 2])).0, vec![1, 3, -3, 1]);
        assert_eq!(f_to_h(&FVector(vec![1, 3, 3, 1])).0, vec![1, 0, 0, 0]);
        assert_eq!(f_to_h(&FVector(vec![1, 4, 3, 1])).0, vec![1, 1, -2, 1]);
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(f_vector_disjoint_simplices(&part(&[3, 3])).0, vec![1, 6, 6, 2]);
        assert_eq!(f_vector_disjoint_simplices(&part(&[1])).0, vec![1, 1]);
        assert_eq!(f_vector_disjoint_simplices(&part(&[3, 1])).0, vec![1, 4, 3, 1]);
        assert_eq!(h_vector_disjoint_simplices(&part(&[3, 1])).0, vec![1, 1, -2, 1]);
        assert_eq!(h_vector_disjoint_simplices(&part(&[3, 3])).0, vec![1, 3, -3, 1]);
        assert_eq!(h_vector_disjoint_simplices(&part(&[5])).0, vec![1, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn f_vector_of_large_simplex_uses_binomials() {
        let c = SimplicialComplex::simplex(VertexSet::range(64).without(0));
        let f = c.faces_by_dimension();
        assert_eq!(f.0.len(), 64);
        assert_eq!(f.0[32], binomial(63, 32));
        assert!(c.h_vector().0.iter().skip(1).all(|&h| h == 0));
    }

    #[test]
    fn f_vector_matches_brute_force_on_corpus() {
        for c in corpus() {
            assert_eq!(c.faces_by_dimension(), brute_f(&c), "{c:?}");
        }
    }

    #[test]
    fn h_sum_is_top_face_count() {
        for c in corpus() {
            let f = c.faces_by_dimension();
            let h: i128 = c.h_vector().0.iter().sum();
            assert_eq!(h, f.top() as i128, "{c:?}");
        }
    }

    #[test]
    fn f0_counts_supported_vertices() {
        for c in corpus() {
            let f = c.faces_by_dimension();
            let f0 = f.0.get(1).copied().unwrap_or(0);
            assert_eq!(f0, c.supported_vertices().len() as u128);
        }
    }

    #[test]
    fn dual_examples() {
        let c = cx(&[1, 2, 3], &[&[1, 2]]);
        assert_eq!(c.alexander_dual().unwrap().facets(), &[vs(&[1, 2])]);
        let void = cx(&[1], &[&[]]);
        assert_eq!(void.alexander_dual().unwrap().facets(), &[VertexSet::EMPTY]);
        assert_eq!(
            SimplicialComplex::simplex(vs(&[1, 2])).alexander_dual(),
            Err(Error::VoidDual)
        );
    }

    #[test]
    fn dual_matches_definition_by_brute_force() {
        for c in corpus() {
            let ground = c.ground();
            let dual = c.alexander_dual().unwrap();
            let ground_bits = ground.bits();
            let mut sub = ground_bits;
            loop {
                let s = VertexSet::from_bits(sub);
                let expected = !c.contains_face(ground.difference(s));
                assert_eq!(dual.contains_face(s), expected, "{c:?} at {s}");
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & ground_bits;
            }
        }
    }

    #[test]
    fn dual_is_an_involution_on_corpus() {
        for c in corpus() {
            assert_eq!(c.alexander_dual().unwrap().alexander_dual().unwrap(), c);
        }
    }

    #[test]
    fn purity_connectivity_isolation() {
        let two = cx(&(0..12).collect::<Vec<_>>(), &[&[1, 5, 9], &[3, 7, 11]]);
        assert!(two.is_pure());
        assert!(!two.is_connected());
        assert!(!cx(&[1, 3, 4, 7], &[&[1, 4, 7], &[3]]).is_pure());
        assert!(cx(&[1], &[&[]]).is_pure());
        assert!(cx(&[1, 3, 5], &[&[1, 3, 5]]).is_connected());
        assert!(cx(&[1], &[&[]]).is_connected());
        assert!(cx(&[1, 2, 3, 4], &[&[1, 2], &[2, 3], &[3, 4]]).is_connected());

        let nine = cx(&(0..9).collect::<Vec<_>>(), &[&[1, 4, 7], &[2, 5, 8], &[3], &[6]]);
        assert_eq!(nine.isolated_vertices(), vs(&[3, 6]));
        assert_eq!(cx(&[1, 3, 5], &[&[1, 3, 5]]).isolated_vertices(), VertexSet::EMPTY);
        assert_eq!(cx(&[2, 5], &[&[2], &[5]]).isolated_vertices(), vs(&[2, 5]));
    }

    #[test]
    fn decomposition() {
        let nine = cx(&(0..9).collect::<Vec<_>>(), &[&[1, 4, 7], &[2, 5, 8], &[3], &[6]]);
        assert_eq!(nine.decompose_disjoint_simplices(), Some(part(&[3, 3, 1, 1])));
        assert_eq!(cx(&[1, 2, 3], &[&[1, 2], &[2, 3]]).decompose_disjoint_simplices(), None);
    }

    #[test]
    fn json_layout() {
        let c = cx(&[0, 1, 2, 3, 4, 5], &[&[2, 5], &[1, 4]]);
        assert_eq!(
            serde_json::to_string(&c).unwrap(),
            r#"{"facets":[[1,4],[2,5]],"ground":[0,1,2,3,4,5]}"#
        );
        let back: SimplicialComplex =
            serde_json::from_str(r#"{"ground":[0,1,2,3,4,5],"facets":[[2,5],[1,4],[1]]}"#).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn disjoint_union_formulas_over_small_partitions() {
        for total in 1..=25u32 {
            for lambda in crate::combinatorics::enumerate_partitions(total, 10, 10) {
                let f = f_vector_disjoint_simplices(&lambda);
                assert_eq!(f, explicit_union(&lambda).faces_by_dimension(), "{lambda}");
                assert_eq!(h_vector_disjoint_simplices(&lambda), f_to_h(&f), "{lambda}");
            }
        }
    }

    #[test]
    fn equal_parts_h_vector_shortcut() {
        for alpha in 1..=8u32 {
            for d in 0..=8u32 {
                let lambda = part(&vec![d + 1; alpha as usize]);
                let h = h_vector_disjoint_simplices(&lambda);
                for k in 1..=(d + 1) {
                    let sign = if (k + 1) % 2 == 0 { 1 } else { -1 };
                    let expected = sign * (alpha as i128 - 1) * binomial(d as u64 + 1, k as i64) as i128;
                    assert_eq!(h.0[k as usize], expected, "alpha={alpha} d={d} k={k}");
                }
            }
        }
    }
}
