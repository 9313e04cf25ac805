//! Command-line front end behind the `zsf` binary.
//!
//! [`run_from_args`] does all the work and returns the exit code with the
//! captured output, so it can be driven in-process.
//!
//! Exit codes: 0 success, 1 I/O failure, 2 invalid input, 3 mismatch,
//! 4 capacity exceeded, 5 counterexample found.

pub mod cache;

use std::ffi::OsString;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::arrangement::{self, PosetReport};
use crate::complex::SimplicialComplex;
use crate::conjectures::{self, ScanReport};
use crate::families::{self, FamilySpec};
use crate::zsf::{self, ZsfParams, MAX_BRUTE_FORCE_N};
use crate::Error;

use cache::Cache;

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;
pub const EXIT_CAPACITY: i32 = 4;
pub const EXIT_COUNTEREXAMPLE: i32 = 5;

#[derive(Debug, Parser)]
#[command(name = "zsf", version, about = "Complexes of zero-sumfree subsets of Z/nZ")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build Δ_{n,ell} and print it as JSON.
    Compute {
        n: u32,
        ell: u32,
        /// Add the intersection poset and characteristic polynomial.
        #[arg(long)]
        arrangement: bool,
        /// Cross-check against the brute-force oracle (n <= 24).
        #[arg(long)]
        oracle: bool,
        /// Neither read nor write the cache.
        #[arg(long)]
        no_cache: bool,
    },
    /// Verify a closed-form family against the computed complex.
    Family {
        #[command(subcommand)]
        kind: FamilyKind,
    },
    /// Scan a parameter range for counterexamples to a conjecture.
    Scan {
        conjecture: ConjectureId,
        #[arg(long)]
        n_max: Option<u32>,
        #[arg(long)]
        p_max: Option<u32>,
        #[arg(long)]
        max_sum: Option<u32>,
        /// log-concavity only: also scan partitions with repeated parts.
        #[arg(long)]
        include_repeated: bool,
    },
    /// Summarise every Δ_{n,ell} with n <= n-max.
    Table {
        #[arg(long, default_value_t = 19)]
        n_max: u32,
        #[arg(long)]
        json: bool,
    },
    /// Delete all cached payloads.
    CacheClear,
}

#[derive(Debug, Subcommand)]
pub enum FamilyKind {
    Doubling {
        #[arg(long)]
        rho: u32,
        #[arg(long)]
        m: u32,
    },
    PrimePower {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        e: u32,
    },
    ArmsLegs {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        s: u32,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConjectureId {
    Isolated,
    PurityPrime,
    HvecPurity,
    Connectivity,
    LogConcavity,
}

/// Exit code plus everything the command would print.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn with_code(mut self, code: i32, message: impl Into<String>) -> Self {
        self.code = code;
        self.stderr = message.into();
        self
    }
}

fn error_outcome(e: &Error) -> Outcome {
    let code = match e {
        Error::InvalidParams { .. } | Error::Domain(_) => EXIT_INVALID,
        Error::Capacity { .. } => EXIT_CAPACITY,
        Error::DegenerateArrangement | Error::VoidDual => EXIT_INVALID,
        Error::Io(_) => EXIT_IO,
    };
    Outcome::default().with_code(code, format!("error: {e}\n"))
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_from_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome::default().with_code(EXIT_INVALID, text)
            } else {
                Outcome::ok(text)
            }
        }
    }
}

pub fn run(cli: Cli) -> Outcome {
    let result = match cli.command {
        Command::Compute {
            n,
            ell,
            arrangement,
            oracle,
            no_cache,
        } => cmd_compute(
            n,
            ell,
            arrangement,
            oracle,
            (!no_cache).then(cache::default_dir).flatten().map(Cache::new),
        ),
        Command::Family { kind } => cmd_family(match kind {
            FamilyKind::Doubling { rho, m } => FamilySpec::Doubling { rho, m },
            FamilyKind::PrimePower { p, e } => FamilySpec::PrimePower { p, e },
            FamilyKind::ArmsLegs { p, s } => FamilySpec::ArmsLegs { p, s },
        }),
        Command::Scan {
            conjecture,
            n_max,
            p_max,
            max_sum,
            include_repeated,
        } => cmd_scan(conjecture, n_max, p_max, max_sum, include_repeated),
        Command::Table { n_max, json } => cmd_table(n_max, json),
        Command::CacheClear => cmd_cache_clear(cache::default_dir().map(Cache::new)),
    };
    result.unwrap_or_else(|e| error_outcome(&e))
}

fn to_json<T: Serialize>(value: &T) -> crate::Result<Value> {
    serde_json::to_value(value).map_err(|e| Error::Domain(format!("serialization: {e}")))
}

/// Pretty JSON with sorted keys and a trailing newline.
fn render(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("Value always serializes");
    s.push('\n');
    s
}

fn overflow(what: &str) -> Error {
    Error::Domain(format!("{what} does not fit in a 64-bit JSON integer"))
}

/// The `compute` payload without the optional poset and oracle parts.
pub fn complex_payload(params: ZsfParams, c: &SimplicialComplex) -> crate::Result<Value> {
    let f: Vec<u64> = c
        .faces_by_dimension()
        .counts()
        .iter()
        .map(|&x| u64::try_from(x).map_err(|_| overflow("f-vector entry")))
        .collect::<crate::Result<_>>()?;
    let h: Vec<i64> = c
        .h_vector()
        .entries()
        .iter()
        .map(|&x| i64::try_from(x).map_err(|_| overflow("h-vector entry")))
        .collect::<crate::Result<_>>()?;
    Ok(json!({
        "n": params.n(),
        "ell": params.ell(),
        "ground": c.ground(),
        "facets": c.facets(),
        "min_nonfaces": c.minimal_nonfaces(),
        "f_vector": f,
        "h_vector": h,
        "pure": c.is_pure(),
        "connected": c.is_connected(),
        "decomposition": c.decompose_disjoint_simplices(),
    }))
}

fn poset_fields(c: &SimplicialComplex) -> crate::Result<(Value, Value)> {
    match arrangement::build_poset(c) {
        Ok(p) => {
            let report = PosetReport::new(&p);
            let chi = to_json(&report.char_poly)?;
            Ok((to_json(&report)?, chi))
        }
        Err(Error::DegenerateArrangement) => Ok((Value::Null, Value::Null)),
        Err(e) => Err(e),
    }
}

fn cmd_compute(n: u32, ell: u32, with_arrangement: bool, oracle: bool, cache: Option<Cache>) -> crate::Result<Outcome> {
    let params = ZsfParams::new(n, ell)?;
    if oracle && n > MAX_BRUTE_FORCE_N {
        return Err(Error::Capacity {
            what: "oracle modulus n",
            value: n,
            max: MAX_BRUTE_FORCE_N,
        });
    }
    let cached = cache.as_ref().and_then(|c| c.load(n, ell));
    let mut dirty = cached.is_none();
    let mut payload = match cached {
        Some(p) => p,
        None => complex_payload(params, &zsf::build_complex(params)?)?,
    };
    let complex: SimplicialComplex = serde_json::from_value(json!({
        "ground": payload["ground"],
        "facets": payload["facets"],
    }))
    .map_err(|e| Error::Io(format!("malformed cached complex: {e}")))?;

    if with_arrangement && payload.get("poset").is_none() {
        let (poset, chi) = poset_fields(&complex)?;
        let obj = payload.as_object_mut().expect("payload is an object");
        obj.insert("poset".into(), poset);
        obj.insert("char_poly".into(), chi);
        dirty = true;
    }
    if dirty {
        if let Some(c) = &cache {
            c.store(n, ell, &payload)?;
        }
    }

    let mut out: Map<String, Value> = payload.as_object().cloned().unwrap_or_default();
    if !with_arrangement {
        out.remove("poset");
        out.remove("char_poly");
    }
    let mut outcome_code = EXIT_OK;
    let mut message = String::new();
    if oracle {
        let truth = zsf::brute_force_complex(params)?;
        let matches = truth == complex;
        out.insert(
            "oracle".into(),
            json!({ "brute_force_facets": truth.facets(), "match": matches }),
        );
        if !matches {
            outcome_code = EXIT_MISMATCH;
            message = format!("error: facets of Δ_{{{n},{ell}}} disagree with the brute-force oracle\n");
        }
    }
    let outcome = Outcome::ok(render(&Value::Object(out)));
    Ok(if outcome_code == EXIT_OK {
        outcome
    } else {
        outcome.with_code(outcome_code, message)
    })
}

fn cmd_family(spec: FamilySpec) -> crate::Result<Outcome> {
    let report = families::verify_family(spec)?;
    let outcome = Outcome::ok(render(&to_json(&report)?));
    Ok(if report.passes() {
        outcome
    } else {
        outcome.with_code(EXIT_MISMATCH, format!("error: {spec} deviates from its closed forms\n"))
    })
}

fn cmd_scan(
    id: ConjectureId,
    n_max: Option<u32>,
    p_max: Option<u32>,
    max_sum: Option<u32>,
    include_repeated: bool,
) -> crate::Result<Outcome> {
    let report: ScanReport = match id {
        ConjectureId::Isolated => conjectures::scan_no_isolated_vertices(p_max.unwrap_or(11))?,
        ConjectureId::PurityPrime => conjectures::scan_purity_prime(n_max.unwrap_or(19))?,
        ConjectureId::HvecPurity => conjectures::scan_hvector_purity(n_max.unwrap_or(19))?,
        ConjectureId::Connectivity => conjectures::scan_connectivity(n_max.unwrap_or(16))?,
        ConjectureId::LogConcavity => conjectures::scan_log_concavity(max_sum.unwrap_or(30), include_repeated)?,
    };
    let outcome = Outcome::ok(render(&to_json(&report)?));
    Ok(if report.confirmed() {
        outcome
    } else {
        let k = report.counterexamples.len();
        outcome.with_code(
            EXIT_COUNTEREXAMPLE,
            format!("{} counterexample(s) found for {}\n", k, report.conjecture),
        )
    })
}

/// One line of `table`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub n: u32,
    pub ell: u32,
    pub facets: usize,
    pub dim: i64,
    pub pure: bool,
    pub connected: bool,
    pub decomposition: Option<Vec<u32>>,
}

impl TableRow {
    pub fn new(params: ZsfParams, c: &SimplicialComplex) -> Self {
        TableRow {
            n: params.n(),
            ell: params.ell(),
            facets: c.facets().len(),
            dim: c.dim(),
            pure: c.is_pure(),
            connected: c.is_connected(),
            decomposition: c.decompose_disjoint_simplices().map(|p| p.parts().to_vec()),
        }
    }

    /// `9 8 | 4 facets | dim 2 | pure=no | conn=no | (3,3,1,1)`
    pub fn text(&self) -> String {
        let yn = |b: bool| if b { "yes" } else { "no" };
        let noun = if self.facets == 1 { "facet" } else { "facets" };
        let decomposition = match &self.decomposition {
            Some(parts) => format!("({})", parts.iter().map(u32::to_string).collect::<Vec<_>>().join(",")),
            None => "-".to_string(),
        };
        format!(
            "{} {} | {} {} | dim {} | pure={} | conn={} | {}",
            self.n,
            self.ell,
            self.facets,
            noun,
            self.dim,
            yn(self.pure),
            yn(self.connected),
            decomposition
        )
    }
}

pub fn table_rows(n_max: u32) -> crate::Result<Vec<TableRow>> {
    if n_max > conjectures::SCAN_MAX_N {
        return Err(Error::Capacity {
            what: "table n_max",
            value: n_max,
            max: conjectures::SCAN_MAX_N,
        });
    }
    let instances: Vec<ZsfParams> = (2..=n_max)
        .flat_map(|n| (1..n).map(move |l| ZsfParams::new(n, l).expect("0 < ell < n")))
        .collect();
    instances
        .into_par_iter()
        .map(|p| zsf::build_complex(p).map(|c| TableRow::new(p, &c)))
        .collect()
}

fn cmd_table(n_max: u32, as_json: bool) -> crate::Result<Outcome> {
    let rows = table_rows(n_max)?;
    let text = if as_json {
        render(&to_json(&rows)?)
    } else {
        rows.iter().map(|r| r.text() + "\n").collect()
    };
    Ok(Outcome::ok(text))
}

fn cmd_cache_clear(cache: Option<Cache>) -> crate::Result<Outcome> {
    let cache = cache.ok_or_else(|| Error::Io("no cache directory: set ZSF_CACHE_DIR or HOME".into()))?;
    let removed = cache.clear()?;
    Ok(Outcome::ok(render(&json!({
        "cache_dir": cache.dir().display().to_string(),
        "removed": removed,
    }))))
}
