//! Alexander duals and minimal non-faces.

use zerosumfree::complex::SimplicialComplex;
use zerosumfree::vertex_set::VertexSet;
use zerosumfree::zsf::{build_complex, ZsfParams};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ground = VertexSet::try_from_slice(&[1, 2, 3])?;
    let c = SimplicialComplex::from_facet_candidates(ground, [VertexSet::try_from_slice(&[1, 2])?])?;
    println!("dual of <{{1,2}}> on {ground}: {:?}", c.alexander_dual()?.facets());

    let delta = build_complex(ZsfParams::new(9, 8)?)?;
    let dual = delta.alexander_dual()?;
    println!("Δ_{{9,8}} minimal non-faces: {:?}", delta.minimal_nonfaces());
    println!(
        "dual has {} facets; dual of dual equals Δ: {}",
        dual.facets().len(),
        dual.alexander_dual()? == delta
    );

    let full = SimplicialComplex::simplex(ground);
    println!("dual of the full simplex: {:?}", full.alexander_dual());
    Ok(())
}
