//! Intersection poset, Möbius values and characteristic polynomial of the
//! coordinate subspace arrangement attached to a complex.

use zerosumfree::arrangement::{build_poset, characteristic_polynomial, rank_and_gradedness, CharPoly, PosetElement};
use zerosumfree::zsf::{build_complex, ZsfParams};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (n, ell) in [(12, 6), (10, 9), (10, 7)] {
        let c = build_complex(ZsfParams::new(n, ell)?)?;
        let poset = build_poset(&c)?;
        println!("Δ_{{{n},{ell}}}: {} poset elements", poset.elements().len());
        for (i, e) in poset.elements().iter().enumerate() {
            let label = match e {
                PosetElement::Ambient => "ambient".to_string(),
                PosetElement::Subspace(s) => s.to_string(),
            };
            println!("  {label:<14} dim {:<2} mu {}", poset.dim(i), poset.mobius()[i]);
        }
        let chi: CharPoly = characteristic_polynomial(&poset);
        println!("  chi(x) = {chi}");
        println!("  graded, rank = {:?}", rank_and_gradedness(&poset));
    }
    Ok(())
}
