//! Compare the three constructions of Δ_{n,ell} over a small range.

use std::time::Instant;

use zerosumfree::zsf::{brute_force_complex, build_complex, build_complex_via_dual, ZsfParams};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n_max: u32 = std::env::args().nth(1).map(|a| a.parse()).transpose()?.unwrap_or(14);
    let started = Instant::now();
    let mut checked = 0;
    for n in 2..=n_max {
        for ell in 1..n {
            let p = ZsfParams::new(n, ell)?;
            let search = build_complex(p)?;
            assert_eq!(search, brute_force_complex(p)?, "brute force disagrees at {n},{ell}");
            assert_eq!(search, build_complex_via_dual(p)?, "dual route disagrees at {n},{ell}");
            checked += 1;
        }
    }
    println!("{checked} instances agree (n <= {n_max}) in {:?}", started.elapsed());
    Ok(())
}
