//! Exhaustive scanners for open conjectures about `Δ_{n,ell}` and about
//! disjoint unions of simplices.
//!
//! A scan never claims a conjecture holds; it reports how many instances it
//! checked and which ones failed.

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::combinatorics::{for_each_partition, Partition};
use crate::complex::{h_vector_disjoint_simplices, SimplicialComplex};
use crate::families::is_prime;
use crate::zsf::{self, ZsfParams};
use crate::{Error, Result};

/// Largest modulus a scan will build.
pub const SCAN_MAX_N: u32 = 24;
/// Largest prime for the isolated-vertex scan (`2p <= 24`).
pub const SCAN_MAX_P: u32 = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ScanStatus {
    ConfirmedInRange,
    CounterexampleFound,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    pub params: Value,
    pub witness: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanReport {
    pub conjecture: String,
    pub range: Value,
    pub checked: u64,
    pub counterexamples: Vec<Counterexample>,
    pub elapsed_ms: u64,
    pub status: ScanStatus,
}

impl ScanReport {
    fn finish(conjecture: &str, range: Value, outcomes: Vec<Option<Counterexample>>, started: Instant) -> Self {
        let checked = outcomes.len() as u64;
        let counterexamples: Vec<Counterexample> = outcomes.into_iter().flatten().collect();
        let status = if counterexamples.is_empty() {
            ScanStatus::ConfirmedInRange
        } else {
            ScanStatus::CounterexampleFound
        };
        ScanReport {
            conjecture: conjecture.to_string(),
            range,
            checked,
            counterexamples,
            elapsed_ms: started.elapsed().as_millis() as u64,
            status,
        }
    }

    pub fn confirmed(&self) -> bool {
        self.status == ScanStatus::ConfirmedInRange
    }
}

fn check_cap(what: &'static str, value: u32, max: u32) -> Result<()> {
    if value > max {
        return Err(Error::Capacity { what, value, max });
    }
    Ok(())
}

fn params_json(p: ZsfParams) -> Value {
    json!({ "n": p.n(), "ell": p.ell() })
}

/// Builds every instance in parallel; results keep the input order.
fn scan_instances<F>(instances: Vec<ZsfParams>, check: F) -> Result<Vec<Option<Counterexample>>>
where
    F: Fn(ZsfParams, &SimplicialComplex) -> Option<Value> + Sync,
{
    instances
        .into_par_iter()
        .map(|p| {
            let c = zsf::build_complex(p)?;
            Ok(check(p, &c).map(|witness| Counterexample {
                params: params_json(p),
                witness,
            }))
        })
        .collect()
}

/// Instances `Δ_{2p,ell}` for primes `p <= p_max` and even `ell` with
/// `(p-1)/2 <= ell < p`.
pub fn isolated_vertex_instances(p_max: u32) -> Vec<ZsfParams> {
    let mut out = Vec::new();
    for p in (2..=p_max).filter(|&p| is_prime(p)) {
        for ell in (1..p).filter(|&l| l % 2 == 0 && 2 * l >= p - 1) {
            out.push(ZsfParams::new(2 * p, ell).expect("0 < ell < 2p"));
        }
    }
    out
}

/// Expects no isolated vertices in the instances of
/// [`isolated_vertex_instances`].
pub fn scan_no_isolated_vertices(p_max: u32) -> Result<ScanReport> {
    check_cap("p_max", p_max, SCAN_MAX_P)?;
    let started = Instant::now();
    let outcomes = scan_instances(isolated_vertex_instances(p_max), |_, c| {
        let iso = c.isolated_vertices();
        (!iso.is_empty()).then(|| json!({ "isolated_vertices": iso }))
    })?;
    Ok(ScanReport::finish(
        "isolated",
        json!({ "p_max": p_max }),
        outcomes,
        started,
    ))
}

/// Expects `Δ_{n,(n-1)/2}` and `Δ_{n,(n+1)/2}` to be pure exactly when the
/// odd modulus `n` is prime; each of the two complexes is checked on its own.
pub fn scan_purity_prime(n_max: u32) -> Result<ScanReport> {
    check_cap("n_max", n_max, SCAN_MAX_N)?;
    let started = Instant::now();
    let instances: Vec<ZsfParams> = (3..=n_max)
        .step_by(2)
        .flat_map(|n| [(n - 1) / 2, n.div_ceil(2)].map(|l| ZsfParams::new(n, l).expect("0 < ell < n")))
        .collect();
    let outcomes = scan_instances(instances, |p, c| {
        let (pure, prime) = (c.is_pure(), is_prime(p.n()));
        (pure != prime).then(|| {
            json!({
                "pure": pure,
                "prime": prime,
                "facet_sizes": c.facets().iter().map(|f| f.len()).collect::<Vec<_>>(),
            })
        })
    })?;
    Ok(ScanReport::finish(
        "purity-prime",
        json!({ "n_max": n_max }),
        outcomes,
        started,
    ))
}

/// Every `(n, ell)` with `2 <= n <= n_max`, `1 <= ell < n`.
fn all_instances(n_max: u32) -> Vec<ZsfParams> {
    (2..=n_max)
        .flat_map(|n| (1..n).map(move |l| ZsfParams::new(n, l).expect("0 < ell < n")))
        .collect()
}

/// Expects purity whenever the whole h-vector `h_1, ..., h_{d+1}` is
/// nonnegative. Stopping at `h_d` is refuted already by `Δ_{4,3}`, whose
/// h-vector is `(1, 1, -1)`.
pub fn scan_hvector_purity(n_max: u32) -> Result<ScanReport> {
    check_cap("n_max", n_max, SCAN_MAX_N)?;
    let started = Instant::now();
    let outcomes = scan_instances(all_instances(n_max), |_, c| {
        let h = c.h_vector();
        let nonneg = h.entries().iter().all(|&x| x >= 0);
        (nonneg && !c.is_pure())
            .then(|| json!({ "h_vector": h.entries().iter().map(|x| x.to_string()).collect::<Vec<_>>() }))
    })?;
    Ok(ScanReport::finish(
        "hvec-purity",
        json!({ "n_max": n_max }),
        outcomes,
        started,
    ))
}

/// Expects `Δ_{n,ell}` to be connected whenever `n > 2 ell`.
pub fn scan_connectivity(n_max: u32) -> Result<ScanReport> {
    check_cap("n_max", n_max, SCAN_MAX_N)?;
    let started = Instant::now();
    let instances: Vec<ZsfParams> = all_instances(n_max)
        .into_iter()
        .filter(|p| p.n() > 2 * p.ell())
        .collect();
    let outcomes = scan_instances(instances, |_, c| {
        (!c.is_connected()).then(|| json!({ "facets": c.facets() }))
    })?;
    Ok(ScanReport::finish(
        "connectivity",
        json!({ "n_max": n_max }),
        outcomes,
        started,
    ))
}

/// `|h_k|^2 >= |h_{k-1}| |h_{k+1}|` for `2 <= k <= lambda_1 - 1`; returns the
/// first failing `k`.
pub fn log_concavity_violation(lambda: &Partition) -> Option<usize> {
    let h = h_vector_disjoint_simplices(lambda);
    let a: Vec<u128> = h.entries().iter().map(|x| x.unsigned_abs()).collect();
    let top = lambda.largest() as usize;
    (2..top).find(|&k| {
        let sq = a[k].checked_mul(a[k]).expect("h-vector square overflow");
        let prod = a[k - 1].checked_mul(a[k + 1]).expect("h-vector product overflow");
        sq < prod
    })
}

/// Checks log-concavity of `(|h_1|, ..., |h_{lambda_1}|)` for every
/// partition with distinct parts and sum at most `max_sum`. With
/// `include_repeated`, partitions with repeated parts are scanned too and
/// the report carries a separate id.
pub fn scan_log_concavity(max_sum: u32, include_repeated: bool) -> Result<ScanReport> {
    let started = Instant::now();
    let mut partitions = Vec::new();
    for total in 1..=max_sum {
        for_each_partition(total, total, total, |parts| {
            let p = Partition::from_parts(parts.to_vec()).expect("positive parts");
            if include_repeated || p.has_distinct_parts() {
                partitions.push(p);
            }
        });
    }
    let outcomes: Vec<Option<Counterexample>> = partitions
        .par_iter()
        .map(|lambda| {
            log_concavity_violation(lambda).map(|k| Counterexample {
                params: json!({ "lambda": lambda }),
                witness: json!({
                    "k": k,
                    "h_vector": h_vector_disjoint_simplices(lambda).entries().iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                }),
            })
        })
        .collect();
    let id = if include_repeated {
        "log-concavity-all-partitions"
    } else {
        "log-concavity"
    };
    Ok(ScanReport::finish(
        id,
        json!({ "max_sum": max_sum, "distinct_parts_only": !include_repeated }),
        outcomes,
        started,
    ))
}
