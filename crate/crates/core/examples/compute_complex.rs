//! Build Δ_{n,ell} and print its facets, f-vector and h-vector.
//!
//! cargo run --example compute_complex -- 24 12

use zerosumfree::zsf::{build_complex, ZsfParams};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<u32> = std::env::args().skip(1).map(|a| a.parse()).collect::<Result<_, _>>()?;
    let (n, ell) = match args[..] {
        [n, ell] => (n, ell),
        _ => (9, 8),
    };
    let params = ZsfParams::new(n, ell)?;
    let c = build_complex(params)?;

    println!("Δ_{{{n},{ell}}}: {} facets, dim {}", c.facets().len(), c.dim());
    for f in c.facets() {
        println!("  {f}");
    }
    println!("f = {:?}", c.faces_by_dimension().counts());
    println!("h = {:?}", c.h_vector().entries());
    println!("pure = {}, connected = {}", c.is_pure(), c.is_connected());
    match c.decompose_disjoint_simplices() {
        Some(lambda) => println!("disjoint union of simplices of sizes {lambda}"),
        None => println!("facets overlap"),
    }
    Ok(())
}
