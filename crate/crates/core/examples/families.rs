//! Compare the closed-form families with computed complexes.

use zerosumfree::families::{verify_family, FamilySpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let specs = [
        FamilySpec::Doubling { rho: 3, m: 2 },
        FamilySpec::Doubling { rho: 5, m: 1 },
        FamilySpec::PrimePower { p: 2, e: 4 },
        FamilySpec::PrimePower { p: 3, e: 2 },
        FamilySpec::ArmsLegs { p: 7, s: 1 },
        FamilySpec::ArmsLegs { p: 7, s: 2 },
        FamilySpec::ArmsLegs { p: 7, s: 3 },
    ];
    for spec in specs {
        let r = verify_family(spec)?;
        println!(
            "{spec:<28} n={:<2} ell={:<2} facets_match={} rank={:?} deviations={:?}",
            r.n, r.ell, r.facets_match, r.rank, r.char_poly_deviations
        );
        for note in &r.notes {
            println!("    {note}");
        }
    }
    Ok(())
}
