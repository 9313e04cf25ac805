//! The complex of `ell`-zero-sumfree subsets of `Z/nZ`.
//!
//! A set `S ⊆ Z/nZ` is a face when no multiset of exactly `ell` elements of
//! `S` (repetition allowed) sums to `0 mod n`. Three independent
//! constructions live here:
//!
//! * [`build_complex`]: branch-and-bound over maximal faces with the
//!   reachable-residue oracle [`is_face`] as pruning predicate;
//! * [`build_complex_via_dual`]: congruent-partition enumeration
//!   ([`enumerate_nlc`]), minimalisation, complementation and Alexander
//!   duality;
//! * [`brute_force_complex`]: an exhaustive scan of all `2^n` subsets.

use std::collections::{HashMap, HashSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::hypergraph::minimal_sets;
use crate::vertex_set::{VertexSet, MAX_VERTICES};
use crate::{Error, Result};

/// Largest `n` accepted by the facet constructions (one machine word of residues).
pub const MAX_BUILD_N: u32 = MAX_VERTICES;

/// Largest `n` accepted by [`brute_force_complex`].
pub const MAX_BRUTE_FORCE_N: u32 = 24;

/// The pair `(n, ell)` with `0 < ell < n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ZsfParams {
    n: u32,
    ell: u32,
}

impl ZsfParams {
    pub fn new(n: u32, ell: u32) -> Result<Self> {
        if n < 2 || ell == 0 || ell >= n {
            return Err(Error::InvalidParams { n, ell });
        }
        Ok(ZsfParams { n, ell })
    }

    pub fn n(self) -> u32 {
        self.n
    }

    pub fn ell(self) -> u32 {
        self.ell
    }

    /// Residues `0..n` as a vertex set; requires `n <= 64`.
    pub fn residues(self) -> Result<VertexSet> {
        self.check_build_capacity()?;
        Ok(VertexSet::range(self.n))
    }

    fn check_build_capacity(self) -> Result<()> {
        if self.n > MAX_BUILD_N {
            return Err(Error::Capacity {
                what: "modulus n",
                value: self.n,
                max: MAX_BUILD_N,
            });
        }
        Ok(())
    }
}

/// Reachable-residue oracle over one machine word (`n <= 64`).
///
/// `R_0 = {0}`, `R_{t+1} = { r + x mod n : r ∈ R_t, x ∈ S }`; `S` is a
/// face iff `0 ∉ R_ell`.
#[derive(Debug, Clone, Copy)]
struct ResidueOracle {
    n: u32,
    ell: u32,
    mask: u64,
}

impl ResidueOracle {
    fn new(params: ZsfParams) -> Self {
        debug_assert!(params.n <= 64);
        ResidueOracle {
            n: params.n,
            ell: params.ell,
            mask: VertexSet::range(params.n).bits(),
        }
    }

    #[inline]
    fn rotate(&self, r: u64, by: u32) -> u64 {
        if by == 0 {
            r
        } else {
            ((r << by) | (r >> (self.n - by))) & self.mask
        }
    }

    fn is_face(&self, s: VertexSet) -> bool {
        if s.is_empty() {
            return true;
        }
        let mut reach = 1u64;
        for _ in 0..self.ell {
            let mut next = 0u64;
            for x in s.iter() {
                next |= self.rotate(reach, x);
            }
            if next == reach {
                // fixed point: every later layer is the same set
                break;
            }
            reach = next;
        }
        reach & 1 == 0
    }
}

/// True iff no multiset of exactly `ell` elements of `s` sums to `0 mod n`.
///
/// Costs `O(ell * n * |s|)` at worst. Works for any `n`, although a
/// [`VertexSet`] only carries residues below 64.
pub fn is_face(params: ZsfParams, s: VertexSet) -> Result<bool> {
    if let Some(max) = s.last() {
        if max >= params.n {
            return Err(Error::Domain(format!("residue {max} is not below n = {}", params.n)));
        }
    }
    if params.n <= 64 {
        return Ok(ResidueOracle::new(params).is_face(s));
    }
    let n = params.n as usize;
    let mut reach = vec![false; n];
    reach[0] = true;
    for _ in 0..params.ell {
        let mut next = vec![false; n];
        for (r, _) in reach.iter().enumerate().filter(|(_, &on)| on) {
            for x in s.iter() {
                next[(r + x as usize) % n] = true;
            }
        }
        reach = next;
    }
    Ok(!reach[0])
}

/// Underlying sets of the `(n, ell)`-congruent partitions.
///
/// For every `m` with `m*n <= (n-1)*ell`, every partition of `m*n` into at
/// most `ell` parts of size at most `n-1` contributes its set of parts, plus
/// the residue `0` whenever it has fewer than `ell` parts (the multiset is
/// padded with zeros up to size `ell`). `m = 0` contributes `{0}`.
///
/// Subtrees of the partition walk that share the same remaining sum, part
/// budget, part cap and partial set produce identical sets, so each such
/// state is expanded once.
pub fn enumerate_nlc(params: ZsfParams) -> Result<Vec<VertexSet>> {
    params.check_build_capacity()?;
    let (n, ell) = (params.n, params.ell);
    let mut out: HashSet<VertexSet> = HashSet::new();
    let mut seen: HashSet<(u32, u32, u32, u64)> = HashSet::new();
    let m_max = (n - 1) as u64 * ell as u64 / n as u64;
    for m in 0..=m_max as u32 {
        nlc_walk(m * n, ell, n - 1, VertexSet::EMPTY, &mut seen, &mut out);
    }
    let mut sets: Vec<VertexSet> = out.into_iter().collect();
    sets.sort();
    Ok(sets)
}

fn nlc_walk(
    remaining: u32,
    parts_left: u32,
    cap: u32,
    sigma: VertexSet,
    seen: &mut HashSet<(u32, u32, u32, u64)>,
    out: &mut HashSet<VertexSet>,
) {
    if remaining == 0 {
        out.insert(if parts_left > 0 { sigma.with(0) } else { sigma });
        return;
    }
    if (parts_left as u64) * (cap as u64) < remaining as u64 || !seen.insert((remaining, parts_left, cap, sigma.bits()))
    {
        return;
    }
    let mut part = cap.min(remaining);
    while part >= 1 && parts_left as u64 * part as u64 >= remaining as u64 {
        nlc_walk(remaining - part, parts_left - 1, part, sigma.with(part), seen, out);
        part -= 1;
    }
}

/// Inclusion-minimal congruent-partition sets: the minimal non-faces.
pub fn minimal_nonfaces(params: ZsfParams) -> Result<Vec<VertexSet>> {
    Ok(minimal_sets(enumerate_nlc(params)?))
}

/// Maximal faces by branch and bound over the supported residues.
///
/// Top-level branches run in parallel; the result is sorted, so the output
/// does not depend on scheduling.
pub fn build_complex(params: ZsfParams) -> Result<SimplicialComplex> {
    let ground = params.residues()?;
    let oracle = ResidueOracle::new(params);
    let vertices: Vec<u32> = ground
        .iter()
        .filter(|&v| oracle.is_face(VertexSet::singleton(v)))
        .collect();
    if vertices.is_empty() {
        return Ok(SimplicialComplex::empty_face_only(ground));
    }
    let all: VertexSet = vertices.iter().copied().collect();
    let facets: Vec<VertexSet> = vertices
        .par_iter()
        .enumerate()
        .flat_map_iter(|(i, &v)| {
            let mut search = FacetSearch::new(oracle);
            let start = VertexSet::singleton(v);
            let later = all.above(v);
            let earlier: VertexSet = vertices[..i].iter().copied().collect();
            let cand = search.extendable(start, later);
            let excl = search.extendable(start, earlier);
            search.descend(start, cand, excl);
            search.found
        })
        .collect();
    SimplicialComplex::from_facet_candidates(ground, facets)
}

struct FacetSearch {
    oracle: ResidueOracle,
    memo: HashMap<u64, bool>,
    found: Vec<VertexSet>,
}

impl FacetSearch {
    fn new(oracle: ResidueOracle) -> Self {
        FacetSearch {
            oracle,
            memo: HashMap::new(),
            found: Vec::new(),
        }
    }

    fn face(&mut self, s: VertexSet) -> bool {
        let oracle = self.oracle;
        *self.memo.entry(s.bits()).or_insert_with(|| oracle.is_face(s))
    }

    /// Members `v` of `pool` with `base ∪ {v}` a face.
    fn extendable(&mut self, base: VertexSet, pool: VertexSet) -> VertexSet {
        pool.iter().filter(|&v| self.face(base.with(v))).collect()
    }

    /// `current` is a face; every member of `cand` and of `excl` extends it.
    /// Members of `excl` were already branched on, so a maximal face reached
    /// from here must leave each of them unable to join.
    fn descend(&mut self, current: VertexSet, mut cand: VertexSet, mut excl: VertexSet) {
        let reach = current.union(cand);
        for x in excl.iter() {
            if self.face(reach.with(x)) {
                // every leaf below is a subset of `reach`, so `x` stays addable
                return;
            }
        }
        if cand.is_empty() {
            if excl.is_empty() {
                self.found.push(current);
            }
            return;
        }
        if self.face(reach) {
            // excl was just checked against reach, so reach is maximal
            self.found.push(reach);
            return;
        }
        while let Some(v) = cand.first() {
            cand = cand.without(v);
            let next = current.with(v);
            let next_cand = self.extendable(next, cand);
            let next_excl = self.extendable(next, excl);
            self.descend(next, next_cand, next_excl);
            excl = excl.with(v);
            if excl.iter().any(|x| {
                let r = current.union(cand).with(x);
                self.face(r)
            }) {
                return;
            }
        }
    }
}

/// The complex computed from congruent partitions: minimal non-faces `N`,
/// the complement complex `< ground \ N >`, then its Alexander dual.
pub fn build_complex_via_dual(params: ZsfParams) -> Result<SimplicialComplex> {
    let ground = params.residues()?;
    let nonfaces = minimal_nonfaces(params)?;
    let complements = nonfaces.iter().map(|s| ground.difference(*s));
    let complement_complex = SimplicialComplex::from_facet_candidates(ground, complements)?;
    complement_complex.alexander_dual()
}

/// Exhaustive scan of every subset of `0..n`, `n <= 24`.
///
/// Each subset is tested with [`is_face`]; a subset whose lowest member is
/// removable to a non-face is skipped, as faces are closed under inclusion.
pub fn brute_force_complex(params: ZsfParams) -> Result<SimplicialComplex> {
    if params.n > MAX_BRUTE_FORCE_N {
        return Err(Error::Capacity {
            what: "brute-force modulus n",
            value: params.n,
            max: MAX_BRUTE_FORCE_N,
        });
    }
    let n = params.n;
    let oracle = ResidueOracle::new(params);
    let total = 1usize << n;
    let mut faces = vec![0u64; total.div_ceil(64)];
    let get = |faces: &[u64], i: usize| faces[i >> 6] >> (i & 63) & 1 == 1;
    faces[0] |= 1;
    for mask in 1..total {
        let rest = mask & (mask - 1);
        if get(&faces, rest) && oracle.is_face(VertexSet::from_bits(mask as u64)) {
            faces[mask >> 6] |= 1 << (mask & 63);
        }
    }
    let facets: Vec<VertexSet> = (0..total)
        .filter(|&mask| get(&faces, mask) && (0..n).all(|v| mask >> v & 1 == 1 || !get(&faces, mask | 1 << v)))
        .map(|mask| VertexSet::from_bits(mask as u64))
        .collect();
    SimplicialComplex::from_facet_candidates(VertexSet::range(n), facets)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::for_each_partition;

    fn vs(xs: &[u32]) -> VertexSet {
        VertexSet::try_from_slice(xs).unwrap()
    }

    fn p(n: u32, ell: u32) -> ZsfParams {
        ZsfParams::new(n, ell).unwrap()
    }

    /// Exhaustive multiset check: all size-`ell` multisets over `s`.
    fn multiset_face(n: u32, ell: u32, s: &[u32]) -> bool {
        fn rec(s: &[u32], start: usize, left: u32, sum: u32, n: u32) -> bool {
            if left == 0 {
                return !sum.is_multiple_of(n);
            }
            (start..s.len()).all(|i| rec(s, i, left - 1, (sum + s[i]) % n, n))
        }
        s.is_empty() || rec(s, 0, ell, 0, n)
    }

    /// Literal partition walk with no state sharing.
    fn naive_nlc(params: ZsfParams) -> Vec<VertexSet> {
        let (n, ell) = (params.n(), params.ell());
        let mut out = HashSet::new();
        for m in 0..=(n - 1) * ell / n {
            for_each_partition(m * n, ell, n - 1, |parts| {
                let mut sigma: VertexSet = parts.iter().copied().collect();
                if (parts.len() as u32) < ell {
                    sigma = sigma.with(0);
                }
                out.insert(sigma);
            });
        }
        let mut v: Vec<_> = out.into_iter().collect();
        v.sort();
        v
    }

    #[test]
    fn params_validation() {
        assert!(ZsfParams::new(6, 3).is_ok());
        assert!(ZsfParams::new(6, 6).is_err());
        assert!(ZsfParams::new(6, 0).is_err());
        assert!(ZsfParams::new(1, 1).is_err());
        assert!(matches!(build_complex(p(65, 3)), Err(Error::Capacity { .. })));
        assert!(matches!(brute_force_complex(p(25, 3)), Err(Error::Capacity { .. })));
    }

    #[test]
    fn face_oracle_examples() {
        assert!(is_face(p(6, 3), vs(&[1, 3, 5])).unwrap());
        assert!(!is_face(p(6, 3), vs(&[0])).unwrap());
        assert!(!is_face(p(6, 3), vs(&[2])).unwrap());
        assert!(!is_face(p(9, 8), vs(&[3, 6])).unwrap());
        assert!(is_face(p(9, 8), vs(&[3])).unwrap());
        assert!(is_face(p(6, 3), vs(&[6])).is_err());
    }

    #[test]
    fn face_oracle_for_large_modulus() {
        // n = 100, ell = 4: 25 * 4 = 100
        assert!(!is_face(p(100, 4), vs(&[25])).unwrap());
        assert!(is_face(p(100, 4), vs(&[1])).unwrap());
        // 10 + 30 + 30 + 30 = 100
        assert!(!is_face(p(100, 4), vs(&[10, 30])).unwrap());
    }

    #[test]
    fn face_oracle_matches_multiset_enumeration() {
        for n in 2..=9u32 {
            for ell in 1..n {
                for bits in 0u64..(1 << n) {
                    let s = VertexSet::from_bits(bits);
                    assert_eq!(
                        is_face(p(n, ell), s).unwrap(),
                        multiset_face(n, ell, &s.to_vec()),
                        "n={n} ell={ell} s={s}"
                    );
                }
            }
        }
    }

    #[test]
    fn nlc_examples() {
        let nlc = enumerate_nlc(p(6, 3)).unwrap();
        for s in [
            &[0][..],
            &[2],
            &[4],
            &[4, 1],
            &[3, 0],
            &[3, 2, 1],
            &[5, 4, 3],
            &[5, 2],
            &[5, 1, 0],
            &[4, 2, 0],
        ] {
            assert!(nlc.contains(&vs(s)), "missing {s:?}");
        }
        assert_eq!(nlc.len(), 10);
        for n in 2..12 {
            assert_eq!(enumerate_nlc(p(n, 1)).unwrap(), vec![vs(&[0])]);
        }
        let four = enumerate_nlc(p(4, 2)).unwrap();
        assert!(four.contains(&vs(&[0])) && four.contains(&vs(&[2])) && four.contains(&vs(&[1, 3])));
    }

    #[test]
    fn nlc_sharing_matches_literal_walk() {
        for n in 2..=13u32 {
            for ell in 1..n {
                assert_eq!(
                    enumerate_nlc(p(n, ell)).unwrap(),
                    naive_nlc(p(n, ell)),
                    "n={n} ell={ell}"
                );
            }
        }
    }

    #[test]
    fn nlc_sets_are_non_faces() {
        for n in 2..=12u32 {
            for ell in 1..n {
                for s in enumerate_nlc(p(n, ell)).unwrap() {
                    assert!(!is_face(p(n, ell), s).unwrap());
                }
            }
        }
    }

    #[test]
    fn minimal_nonface_examples() {
        assert_eq!(minimal_nonfaces(p(6, 3)).unwrap(), vec![vs(&[0]), vs(&[2]), vs(&[4])]);
        assert_eq!(
            minimal_nonfaces(p(4, 2)).unwrap(),
            vec![vs(&[0]), vs(&[1, 3]), vs(&[2])]
        );
        assert_eq!(minimal_nonfaces(p(17, 1)).unwrap(), vec![vs(&[0])]);
    }

    #[test]
    fn minimal_nonfaces_are_bounded_by_ell() {
        for n in 2..=14u32 {
            for ell in 1..n {
                for s in minimal_nonfaces(p(n, ell)).unwrap() {
                    assert!(s.len() <= ell);
                }
            }
        }
    }

    #[test]
    fn figure_complexes() {
        let facets = |n, ell| build_complex(p(n, ell)).unwrap().facets().to_vec();
        assert_eq!(facets(6, 3), vec![vs(&[1, 3, 5])]);
        assert_eq!(facets(12, 6), vec![vs(&[1, 5, 9]), vs(&[3, 7, 11])]);
        assert_eq!(facets(9, 8), vec![vs(&[1, 4, 7]), vs(&[2, 5, 8]), vs(&[3]), vs(&[6])]);
        assert_eq!(
            facets(24, 12),
            vec![vs(&[1, 9, 17]), vs(&[3, 11, 19]), vs(&[5, 13, 21]), vs(&[7, 15, 23])]
        );
        assert_eq!(facets(4, 2), vec![vs(&[1]), vs(&[3])]);
        assert_eq!(facets(64, 1), vec![VertexSet::range(64).without(0)]);
    }

    #[test]
    fn twelve_nine_is_two_simplices() {
        let c = brute_force_complex(p(12, 9)).unwrap();
        let lambda = c.decompose_disjoint_simplices().unwrap();
        assert_eq!(lambda.parts(), &[6, 3]);
        assert_eq!(c, build_complex(p(12, 9)).unwrap());
    }

    #[test]
    fn three_constructions_agree() {
        for n in 2..=12u32 {
            for ell in 1..n {
                let params = p(n, ell);
                let bb = build_complex(params).unwrap();
                assert_eq!(bb, brute_force_complex(params).unwrap(), "n={n} ell={ell}");
                assert_eq!(bb, build_complex_via_dual(params).unwrap(), "n={n} ell={ell}");
            }
        }
    }

    #[test]
    fn facets_are_faces_and_maximal() {
        for n in 2..=14u32 {
            for ell in 1..n {
                let params = p(n, ell);
                let c = build_complex(params).unwrap();
                for f in c.facets() {
                    let bits = f.bits();
                    let mut sub = bits;
                    loop {
                        assert!(is_face(params, VertexSet::from_bits(sub)).unwrap());
                        if sub == 0 {
                            break;
                        }
                        sub = (sub - 1) & bits;
                    }
                    for v in 0..n {
                        if !f.contains(v) {
                            assert!(!is_face(params, f.with(v)).unwrap(), "n={n} ell={ell} {f} + {v}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn zero_never_supported_and_doubling_uses_odd_residues() {
        for n in 2..=16u32 {
            for ell in 1..n {
                let c = build_complex(p(n, ell)).unwrap();
                assert!(!c.supported_vertices().contains(0));
                if n == 2 * ell {
                    let odds: VertexSet = (0..n).filter(|v| v % 2 == 1).collect();
                    assert_eq!(c.supported_vertices(), odds, "n={n}");
                }
            }
        }
    }
}
