//! f- and h-vectors of disjoint unions of simplices, from the closed
//! formulas and from the explicit complex.

use zerosumfree::combinatorics::{alternating_binomial_identity_lhs, binomial, Partition};
use zerosumfree::complex::{f_to_h, f_vector_disjoint_simplices, h_vector_disjoint_simplices, SimplicialComplex};
use zerosumfree::vertex_set::VertexSet;

fn explicit(lambda: &Partition) -> SimplicialComplex {
    let mut next = 0;
    let facets: Vec<VertexSet> = lambda
        .parts()
        .iter()
        .map(|&k| {
            let f = (next..next + k).collect();
            next += k;
            f
        })
        .collect();
    SimplicialComplex::from_facet_candidates(VertexSet::range(next), facets).expect("facets fit the ground set")
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for parts in [vec![3, 1], vec![3, 3], vec![5, 4, 1, 1], vec![4, 4, 4, 4]] {
        let lambda = Partition::from_parts(parts)?;
        let f = f_vector_disjoint_simplices(&lambda);
        let h = h_vector_disjoint_simplices(&lambda);
        assert_eq!(explicit(&lambda).faces_by_dimension(), f);
        assert_eq!(f_to_h(&f), h);
        println!(
            "{lambda:<10} conj {:?}  f {:?}  h {:?}",
            lambda.conjugate().parts(),
            f.counts(),
            h.entries()
        );
    }
    let (a, b, k) = (4, 4, 3);
    println!(
        "alternating sum at ({a},{b},{k}) = {} = C({a},{k}) = {}",
        alternating_binomial_identity_lhs(a, b, k),
        binomial(a, k as i64)
    );
    Ok(())
}
