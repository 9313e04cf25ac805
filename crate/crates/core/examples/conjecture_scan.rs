//! Run every conjecture scan over its default range.

use zerosumfree::conjectures::{
    scan_connectivity, scan_hvector_purity, scan_log_concavity, scan_no_isolated_vertices, scan_purity_prime,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let reports = [
        scan_no_isolated_vertices(11)?,
        scan_purity_prime(19)?,
        scan_hvector_purity(19)?,
        scan_connectivity(16)?,
        scan_log_concavity(30, false)?,
        scan_log_concavity(30, true)?,
    ];
    for r in &reports {
        println!(
            "{:<30} checked {:>6}  counterexamples {:>3}  {:>5} ms",
            r.conjecture,
            r.checked,
            r.counterexamples.len(),
            r.elapsed_ms
        );
    }
    Ok(())
}
