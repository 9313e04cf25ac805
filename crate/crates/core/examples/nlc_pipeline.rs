//! The partition route to the minimal non-faces.
//!
//! Each partition of a multiple of n into at most ell parts below n gives a
//! witness set; padding with 0 covers partitions with fewer than ell parts.
//! The inclusion-minimal witnesses are the minimal non-faces, and the
//! complex is recovered from them by Alexander duality.

use zerosumfree::zsf::{build_complex, build_complex_via_dual, enumerate_nlc, is_face, minimal_nonfaces, ZsfParams};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let params = ZsfParams::new(6, 3)?;

    let witnesses = enumerate_nlc(params)?;
    println!("{} witness sets for (6,3):", witnesses.len());
    for w in &witnesses {
        println!("  {w}  face? {}", is_face(params, *w)?);
    }

    let minimal = minimal_nonfaces(params)?;
    println!("minimal non-faces: {minimal:?}");

    let via_dual = build_complex_via_dual(params)?;
    let direct = build_complex(params)?;
    println!("facets via duality: {:?}", via_dual.facets());
    assert_eq!(via_dual, direct);
    Ok(())
}
