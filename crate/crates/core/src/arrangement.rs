//! Coordinate subspace arrangements of simplicial complexes.
//!
//! Each facet `F` of a complex on the supported vertex set `V` gives the
//! coordinate subspace `S_F ⊆ K^V` of vectors vanishing off `F`. Since
//! `S_F ∩ S_G = S_{F∩G}`, every element of the intersection poset is
//! determined by its support, so the poset is built purely combinatorially.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::vertex_set::VertexSet;
use crate::{Error, Result};

/// A node of the intersection poset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PosetElement {
    /// The whole space `K^V`, the bottom element.
    Ambient,
    /// The coordinate subspace supported on the given vertices.
    Subspace(VertexSet),
}

/// Integer polynomial, `coeffs[k]` is the coefficient of `x^k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CharPoly(Vec<i64>);

impl CharPoly {
    /// Trailing zero coefficients are dropped.
    pub fn from_coeffs(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        CharPoly(coeffs)
    }

    /// Sum of `coeff * x^degree`.
    pub fn from_terms(terms: &[(i64, u32)]) -> Self {
        let top = terms.iter().map(|&(_, d)| d as usize).max().unwrap_or(0);
        let mut coeffs = vec![0i64; top + 1];
        for &(c, d) in terms {
            coeffs[d as usize] = coeffs[d as usize].checked_add(c).expect("coefficient overflow");
        }
        CharPoly::from_coeffs(coeffs)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn coeff(&self, degree: u32) -> i64 {
        self.0.get(degree as usize).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degrees at which `self` and `other` have different coefficients.
    pub fn differing_degrees(&self, other: &CharPoly) -> Vec<u32> {
        let top = self.0.len().max(other.0.len()) as u32;
        (0..top).filter(|&d| self.coeff(d) != other.coeff(d)).collect()
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, &c) in self.0.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let mag = c.unsigned_abs();
            match (deg, mag) {
                (0, m) => write!(f, "{m}")?,
                (1, 1) => write!(f, "x")?,
                (1, m) => write!(f, "{m}x")?,
                (d, 1) => write!(f, "x^{d}")?,
                (d, m) => write!(f, "{m}x^{d}")?,
            }
            first = false;
        }
        Ok(())
    }
}

/// Intersection poset ordered by reverse inclusion of supports.
///
/// Element 0 is [`PosetElement::Ambient`]; the rest are sorted by
/// decreasing dimension, then lexicographically by support, which is a
/// linear extension of the order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionPoset {
    ambient_dim: u32,
    elements: Vec<PosetElement>,
    mobius: Vec<i64>,
    covers: Vec<(usize, usize)>,
}

impl IntersectionPoset {
    pub fn elements(&self) -> &[PosetElement] {
        &self.elements
    }

    /// `mu(0̂, t)` for each element, aligned with [`Self::elements`].
    pub fn mobius(&self) -> &[i64] {
        &self.mobius
    }

    /// Hasse diagram edges `(lower, upper)` as element indices.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn ambient_dim(&self) -> u32 {
        self.ambient_dim
    }

    pub fn dim(&self, index: usize) -> u32 {
        match self.elements[index] {
            PosetElement::Ambient => self.ambient_dim,
            PosetElement::Subspace(s) => s.len(),
        }
    }

    /// Atoms: elements covering the bottom.
    pub fn atoms(&self) -> Vec<PosetElement> {
        self.covers
            .iter()
            .filter(|&&(lo, _)| lo == 0)
            .map(|&(_, hi)| self.elements[hi])
            .collect()
    }

    /// The arrangement is a single subspace equal to the ambient space.
    pub fn is_degenerate(&self) -> bool {
        self.elements.len() == 2 && matches!(self.elements[1], PosetElement::Subspace(s) if s.len() == self.ambient_dim)
    }

    /// `a < b`: `a` is ambient and `b` is not, or `b`'s support is a proper
    /// subset of `a`'s.
    pub fn less(&self, a: usize, b: usize) -> bool {
        less(&self.elements[a], &self.elements[b])
    }
}

fn less(a: &PosetElement, b: &PosetElement) -> bool {
    match (a, b) {
        (PosetElement::Ambient, PosetElement::Subspace(_)) => true,
        (PosetElement::Subspace(sa), PosetElement::Subspace(sb)) => sb.is_subset(*sa) && sa != sb,
        _ => false,
    }
}

/// Builds the intersection poset of the facet subspaces of `c`, with
/// Möbius values `mu(0̂, 0̂) = 1`, `mu(0̂, t) = -sum_{0̂ <= z < t} mu(0̂, z)`.
///
/// The ambient dimension is the number of supported vertices. A facet whose
/// support is all of `V` is kept as an element distinct from the ambient
/// bottom, which makes the characteristic polynomial of a single simplex 0.
pub fn build_poset(c: &SimplicialComplex) -> Result<IntersectionPoset> {
    let facets: Vec<VertexSet> = c.facets().iter().copied().filter(|f| !f.is_empty()).collect();
    if facets.is_empty() {
        return Err(Error::DegenerateArrangement);
    }
    let ambient_dim = c.supported_vertices().len();

    let mut supports: HashSet<VertexSet> = facets.iter().copied().collect();
    let mut frontier: Vec<VertexSet> = facets.clone();
    while !frontier.is_empty() {
        let mut fresh = Vec::new();
        for s in &frontier {
            for f in &facets {
                let meet = s.intersection(*f);
                if supports.insert(meet) {
                    fresh.push(meet);
                }
            }
        }
        frontier = fresh;
    }
    // closure under meets with facets already contains the total intersection
    let total = facets.iter().fold(facets[0], |acc, f| acc.intersection(*f));
    debug_assert!(supports.contains(&total));

    let mut sorted: Vec<VertexSet> = supports.into_iter().collect();
    sorted.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
    let mut elements = vec![PosetElement::Ambient];
    elements.extend(sorted.into_iter().map(PosetElement::Subspace));

    let count = elements.len();
    let mut mobius = vec![0i64; count];
    mobius[0] = 1;
    for t in 1..count {
        let mut acc = 0i64;
        for z in 0..t {
            if less(&elements[z], &elements[t]) {
                acc = acc.checked_add(mobius[z]).expect("Möbius overflow");
            }
        }
        mobius[t] = -acc;
    }

    let mut covers = Vec::new();
    for hi in 1..count {
        for lo in 0..hi {
            if less(&elements[lo], &elements[hi])
                && !(lo + 1..hi).any(|w| less(&elements[lo], &elements[w]) && less(&elements[w], &elements[hi]))
            {
                covers.push((lo, hi));
            }
        }
    }
    covers.sort_unstable();

    Ok(IntersectionPoset {
        ambient_dim,
        elements,
        mobius,
        covers,
    })
}

/// `sum_t mu(0̂, t) x^{dim t}` over every element, ambient included.
pub fn characteristic_polynomial(p: &IntersectionPoset) -> CharPoly {
    let terms: Vec<(i64, u32)> = (0..p.elements.len()).map(|i| (p.mobius[i], p.dim(i))).collect();
    CharPoly::from_terms(&terms)
}

/// Lengths of all maximal chains, which run from the ambient bottom to the
/// total intersection at the top.
pub fn maximal_chain_lengths(p: &IntersectionPoset) -> BTreeSet<u32> {
    let count = p.elements.len();
    let mut ups: Vec<Vec<usize>> = vec![Vec::new(); count];
    for &(lo, hi) in &p.covers {
        ups[lo].push(hi);
    }
    // elements are in a linear extension, so process from the top down
    let mut lengths: Vec<BTreeSet<u32>> = vec![BTreeSet::new(); count];
    for i in (0..count).rev() {
        if ups[i].is_empty() {
            lengths[i].insert(0);
        } else {
            let merged: BTreeSet<u32> = ups[i].iter().flat_map(|&u| lengths[u].iter().map(|l| l + 1)).collect();
            lengths[i] = merged;
        }
    }
    std::mem::take(&mut lengths[0])
}

/// `(true, Some(r))` when every maximal chain has length `r`.
pub fn rank_and_gradedness(p: &IntersectionPoset) -> (bool, Option<u32>) {
    let lengths = maximal_chain_lengths(p);
    if lengths.len() == 1 {
        (true, lengths.first().copied())
    } else {
        (false, None)
    }
}

/// `x^{|V|} - sum_F x^{|F|} + (alpha - 1)` for a complex whose `alpha`
/// facets are pairwise disjoint.
pub fn disjoint_union_char_poly(c: &SimplicialComplex) -> Result<CharPoly> {
    if c.decompose_disjoint_simplices().is_none() {
        return Err(Error::Domain("facets are not pairwise disjoint".into()));
    }
    let alpha = c.facets().len() as i64;
    let mut terms = vec![(1, c.supported_vertices().len()), (alpha - 1, 0)];
    terms.extend(c.facets().iter().map(|f| (-1, f.len())));
    Ok(CharPoly::from_terms(&terms))
}

/// Compares the Möbius-computed characteristic polynomial with
/// [`disjoint_union_char_poly`].
pub fn verify_disjoint_union_char_poly(c: &SimplicialComplex) -> Result<bool> {
    let formula = disjoint_union_char_poly(c)?;
    Ok(characteristic_polynomial(&build_poset(c)?) == formula)
}

/// Machine-readable view of a poset.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetReport {
    pub char_poly: Vec<i64>,
    pub elements: Vec<PosetElementReport>,
    pub graded: bool,
    pub hasse: Vec<[usize; 2]>,
    pub rank: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetElementReport {
    pub dim: u32,
    pub mobius: i64,
    pub support: SupportReport,
}

/// Either the literal string `"ambient"` or a sorted vertex list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SupportReport {
    Ambient(AmbientTag),
    Vertices(Vec<u32>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AmbientTag {
    Ambient,
}

impl PosetReport {
    pub fn new(p: &IntersectionPoset) -> Self {
        let (graded, rank) = rank_and_gradedness(p);
        let elements = (0..p.elements.len())
            .map(|i| PosetElementReport {
                dim: p.dim(i),
                mobius: p.mobius[i],
                support: match p.elements[i] {
                    PosetElement::Ambient => SupportReport::Ambient(AmbientTag::Ambient),
                    PosetElement::Subspace(s) => SupportReport::Vertices(s.to_vec()),
                },
            })
            .collect();
        let mut char_poly = characteristic_polynomial(p).coeffs().to_vec();
        char_poly.resize(p.ambient_dim as usize + 1, 0);
        PosetReport {
            char_poly,
            elements,
            graded,
            hasse: p.covers.iter().map(|&(a, b)| [a, b]).collect(),
            rank,
        }
    }
}
