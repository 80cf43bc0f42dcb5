//! `ehrmagic` — exact magic-positivity analysis of (Ehrhart) polynomials
//! from the command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
//! 3 domain error (zero polynomial, invalid parameters, enumeration guard,
//! no dilation found).

mod parse;
mod render;

use clap::{Args, Parser, Subcommand};
use ehrmagic_core::families::{self, ConjectureReport, FamilySpec};
use ehrmagic_core::hstar;
use ehrmagic_core::magic;
use ehrmagic_core::poly::{rat_int, Polynomial};
use ehrmagic_core::{cl, Error};
use num_bigint::BigInt;
use render::{approx_str, json_bigint, json_rat, Format, Report, Table};
use serde_json::{json, Value};
use std::path::PathBuf;
use std::process::ExitCode;

const SCAN_CAP_ENV: &str = "EHRHART_SCAN_CAP";

#[derive(Parser)]
#[command(
    name = "ehrmagic",
    version,
    about = "Exact analysis of polynomials in the basis {x^i (x+1)^(d-i)}: \
             magic positivity, m-indices of polytope families, h*-vectors, \
             real-rootedness and CL certificates"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Markdown)]
    format: Format,
    /// Write output to a file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Add a decimal column (clearly marked approximate; computations stay exact)
    #[arg(long, global = true)]
    approx: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// Expand f(kx) in the basis {x^i (x+1)^(d-i)} and report positivity
    Expand(ExpandArgs),
    /// Least integer dilation k making the polynomial magic positive
    Mindex(SelArgs),
    /// m-index tables over a parameter range
    Table(TableArgs),
    /// h*-vector (binomial-basis coefficients) of the polynomial
    Hstar(SelArgs),
    /// Exact real-rootedness certificate (Sturm)
    Realrooted(RealRootedArgs),
    /// CL certificate: are all roots on Re(z) = -1/2, and the m-index bounds
    Cl(SelArgs),
    /// Check closed-form Ehrhart formulas against brute-force lattice counts
    Verify(VerifyArgs),
    /// Scan the open-question parameter grids and report matches
    Conjecture(ConjectureArgs),
}

/// Family / polynomial selector shared by most commands (`--k` is the rank
/// parameter here; dilation factors are command-specific flags).
#[derive(Args, Clone, Default)]
struct SelArgs {
    /// Family: simplex | spiked | minimal-matroid | multipartite | hypersimplex | cross | reflexive-simplex
    #[arg(long, conflicts_with = "poly")]
    family: Option<String>,
    /// Polynomial expression, e.g. "binom(x+2,2)" or "x^2 + 3/2*x + 1"
    #[arg(long)]
    poly: Option<String>,
    /// Dimension parameter d
    #[arg(long)]
    d: Option<usize>,
    /// Part sizes (multipartite, comma-separated) or the spike parameter q
    #[arg(long, value_delimiter = ',')]
    q: Option<Vec<u64>>,
    /// Rank parameter k (hypersimplex, minimal-matroid)
    #[arg(long = "k", alias = "rank")]
    rank: Option<usize>,
    /// Ground-set size n (hypersimplex, minimal-matroid)
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Args)]
struct ExpandArgs {
    #[arg(long, conflicts_with = "poly")]
    family: Option<String>,
    /// Polynomial expression, e.g. "binom(x+2,2)" or "x^2 + 3/2*x + 1"
    #[arg(long)]
    poly: Option<String>,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long, value_delimiter = ',')]
    q: Option<Vec<u64>>,
    /// Rank parameter k (hypersimplex, minimal-matroid)
    #[arg(long = "rank")]
    rank: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    /// Dilation factor k (rational, e.g. 2 or 3/2)
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    k: String,
}

#[derive(Args)]
struct RealRootedArgs {
    #[command(flatten)]
    sel: SelArgs,
    /// Check the h*-numerator of the input instead of the input itself
    #[arg(long)]
    numerator: bool,
}

#[derive(Args)]
struct TableArgs {
    /// Family: simplex | spiked | cross | reflexive-simplex | multipartite | hypersimplex | minimal-matroid
    #[arg(long)]
    family: String,
    /// Inclusive d range, e.g. 1..16
    #[arg(long)]
    d: Option<String>,
    /// Multipartite types (repeat --q per type) or the spike parameter q
    #[arg(long)]
    q: Vec<String>,
    /// Rank parameter k (hypersimplex, minimal-matroid)
    #[arg(long = "k", alias = "rank")]
    rank: Option<usize>,
    /// Inclusive n range, e.g. 4..12
    #[arg(long)]
    n: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    sel: SelArgs,
    /// Polytope dilation factor
    #[arg(long)]
    dilation: Option<u64>,
    /// Ehrhart argument: count points of (points * dilation) * P
    #[arg(long)]
    points: Option<u64>,
    /// Also compare against this expected count
    #[arg(long)]
    expect: Option<String>,
    /// Run the full standard sweep instead of a single tuple
    #[arg(long, conflicts_with_all = ["dilation", "points", "expect"])]
    sweep: bool,
}

#[derive(Args)]
struct ConjectureArgs {
    /// Which conjecture to scan: q5.4 (alias minimal-matroid: m-index = n-k),
    /// q5.6 (alias multipartite: m-index among max/half candidates), or
    /// q5.7 (alias hypersimplex: m-index = k+2)
    #[arg(long)]
    which: String,
    /// Inclusive n range (default 4..8 for q5.4, 4..10 for q5.7)
    #[arg(long)]
    n: Option<String>,
    /// Multipartite types for q5.6 (repeat --q per type; defaults to the
    /// eight types tabulated for the edge-polytope family)
    #[arg(long)]
    q: Vec<String>,
}

enum CliError {
    Usage(String),
    Domain(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

type CmdResult = Result<(Report, u8), CliError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(CliError::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(CliError::Domain(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(3)
        }
    }
}

fn run(cli: &Cli) -> Result<u8, CliError> {
    let (report, code) = match &cli.command {
        Cmd::Expand(args) => cmd_expand(args, cli.approx),
        Cmd::Mindex(sel) => cmd_mindex(sel),
        Cmd::Table(args) => cmd_table(args),
        Cmd::Hstar(sel) => cmd_hstar(sel, cli.approx),
        Cmd::Realrooted(args) => cmd_realrooted(args),
        Cmd::Cl(sel) => cmd_cl(sel, cli.approx),
        Cmd::Verify(args) => cmd_verify(args),
        Cmd::Conjecture(args) => cmd_conjecture(args),
    }?;
    let text = report.render(cli.format);
    match &cli.out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Domain(format!("cannot write {}: {e}", path.display())))?,
        None => print!("{text}"),
    }
    Ok(code)
}

// ---------------------------------------------------------------------------
// family / polynomial resolution

struct Selection {
    spec: Option<FamilySpec>,
    poly: Polynomial,
    inputs: Value,
}

fn resolve(sel: &SelArgs) -> Result<Selection, CliError> {
    if let Some(expr) = &sel.poly {
        let poly = parse::parse_poly(expr).map_err(CliError::Usage)?;
        return Ok(Selection {
            spec: None,
            poly,
            inputs: json!({ "poly": expr }),
        });
    }
    let family = sel
        .family
        .as_deref()
        .ok_or_else(|| CliError::Usage("provide --family or --poly".into()))?;
    let need_d = || {
        sel.d
            .ok_or_else(|| CliError::Usage(format!("--d is required for family `{family}`")))
    };
    let need_rank = || {
        sel.rank
            .ok_or_else(|| CliError::Usage(format!("--k is required for family `{family}`")))
    };
    let need_n = || {
        sel.n
            .ok_or_else(|| CliError::Usage(format!("--n is required for family `{family}`")))
    };
    let spec = match family {
        "simplex" => FamilySpec::StandardSimplex { d: need_d()? },
        "spiked" => {
            let q = match sel.q.as_deref() {
                Some([q]) => *q,
                _ => {
                    return Err(CliError::Usage(
                        "spiked needs a single --q value".into(),
                    ))
                }
            };
            FamilySpec::SpikedSimplex { q, d: need_d()? }
        }
        "minimal-matroid" => FamilySpec::MinimalMatroid {
            k: need_rank()?,
            n: need_n()?,
        },
        "multipartite" => {
            let parts = sel
                .q
                .clone()
                .ok_or_else(|| CliError::Usage("multipartite needs --q, e.g. --q 1,2,3".into()))?;
            FamilySpec::CompleteMultipartite { parts }
        }
        "hypersimplex" => FamilySpec::Hypersimplex {
            k: need_rank()?,
            n: need_n()?,
        },
        "cross" => FamilySpec::CrossPolytope { d: need_d()? },
        "reflexive-simplex" => FamilySpec::StandardReflexiveSimplex { d: need_d()? },
        other => {
            return Err(CliError::Usage(format!(
                "unknown family `{other}` (try simplex, spiked, minimal-matroid, multipartite, hypersimplex, cross, reflexive-simplex)"
            )))
        }
    };
    let poly = families::ehrhart(&spec)?;
    Ok(Selection {
        inputs: json!({ "family": spec.label() }),
        spec: Some(spec),
        poly,
    })
}

fn scan_cap() -> Result<u64, CliError> {
    match std::env::var(SCAN_CAP_ENV) {
        Ok(v) => v.parse::<u64>().map_err(|_| {
            CliError::Usage(format!("{SCAN_CAP_ENV} must be a positive integer, got `{v}`"))
        }),
        Err(_) => Ok(magic::DEFAULT_SCAN_CAP),
    }
}

const REFERENCE_MULTIPARTITE_TYPES: [&[u64]; 8] = [
    &[1, 1, 1],
    &[2, 2, 2],
    &[3, 3, 3],
    &[1, 2, 3],
    &[1, 2, 4],
    &[1, 2, 5],
    &[1, 2, 3, 4],
    &[1, 1, 1, 5],
];

// ---------------------------------------------------------------------------
// commands

fn cmd_expand(args: &ExpandArgs, approx: bool) -> CmdResult {
    let sel = SelArgs {
        family: args.family.clone(),
        poly: args.poly.clone(),
        d: args.d,
        q: args.q.clone(),
        rank: args.rank,
        n: args.n,
    };
    let resolved = resolve(&sel)?;
    let k = parse::parse_rat(&args.k).map_err(CliError::Usage)?;
    let e = magic::to_magic(&resolved.poly, &k)?;
    let positive = e.is_nonnegative();
    let d = e.basis_degree();

    let mut inputs = resolved.inputs.clone();
    inputs["k"] = json_rat(&k);
    let mut report = Report::new("expand", inputs);
    report.result = json!({
        "d": d,
        "coefficients": e.coeffs().iter().map(json_rat).collect::<Vec<_>>(),
        "magic_positive": positive,
    });
    report.line("input", resolved.spec.map_or_else(|| resolved.poly.to_string(), |s| s.label()));
    report.line("k", &k);
    report.line("d", d);
    report.line("magic positive", positive);
    let mut headers = vec!["i".into(), "basis".into(), "coefficient".into()];
    if approx {
        headers.push("approx (decimal, inexact)".into());
    }
    let rows = e
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let mut row = vec![
                i.to_string(),
                format!("x^{i}(x+1)^{}", d - i),
                c.to_string(),
            ];
            if approx {
                row.push(approx_str(c));
            }
            row
        })
        .collect();
    report.table = Some(Table { headers, rows });
    Ok((report, 0))
}

fn cmd_mindex(sel: &SelArgs) -> CmdResult {
    let resolved = resolve(sel)?;
    let cap = scan_cap()?;
    let r = magic::m_index_with_cap(&resolved.poly, cap)?;
    let mut report = Report::new("mindex", resolved.inputs.clone());
    report.result = json!({
        "m_index": r.value.as_ref().map(json_bigint),
        "search_bound_used": json_bigint(&r.search_bound_used),
        "monotone_search": r.monotone_search,
    });
    report.line(
        "input",
        resolved
            .spec
            .map_or_else(|| resolved.poly.to_string(), |s| s.label()),
    );
    let code = match &r.value {
        Some(v) => {
            report.line("m-index", v);
            report.line("search bound", &r.search_bound_used);
            report.line("monotone search", r.monotone_search);
            0
        }
        None => {
            report.line("m-index", "NOT_FOUND");
            report.warnings.push(format!(
                "no magic-positive dilation found up to the scan cap {} \
                 (non-monotone fallback; raise {SCAN_CAP_ENV} to scan further)",
                r.search_bound_used
            ));
            3
        }
    };
    Ok((report, code))
}

fn mindex_of(spec: &FamilySpec, cap: u64) -> Result<Option<BigInt>, CliError> {
    let f = families::ehrhart(spec)?;
    Ok(magic::m_index_with_cap(&f, cap)?.value)
}

fn cmd_table(args: &TableArgs) -> CmdResult {
    let cap = scan_cap()?;
    let mut rows_json = Vec::new();
    let mut rows = Vec::new();
    let mut param_header = "d";
    let mut push = |param: String, spec: FamilySpec| -> Result<(), CliError> {
        let v = mindex_of(&spec, cap)?;
        let cell = v
            .as_ref()
            .map_or_else(|| "NOT_FOUND".to_string(), |v| v.to_string());
        rows_json.push(json!({
            "param": param,
            "m_index": v.as_ref().map(json_bigint),
        }));
        rows.push(vec![param, cell]);
        Ok(())
    };

    match args.family.as_str() {
        "simplex" | "cross" | "reflexive-simplex" | "spiked" => {
            let range = args
                .d
                .as_deref()
                .ok_or_else(|| CliError::Usage("--d a..b is required".into()))?;
            let (lo, hi) = parse::parse_range(range).map_err(CliError::Usage)?;
            for d in lo..=hi {
                let d = d as usize;
                let spec = match args.family.as_str() {
                    "simplex" => FamilySpec::StandardSimplex { d },
                    "cross" => FamilySpec::CrossPolytope { d },
                    "reflexive-simplex" => FamilySpec::StandardReflexiveSimplex { d },
                    _ => {
                        let q = args
                            .q
                            .first()
                            .ok_or_else(|| CliError::Usage("spiked needs --q".into()))?
                            .parse::<u64>()
                            .map_err(|_| CliError::Usage("bad --q".into()))?;
                        FamilySpec::SpikedSimplex { q, d }
                    }
                };
                push(d.to_string(), spec)?;
            }
        }
        "multipartite" => {
            param_header = "q";
            let types: Vec<Vec<u64>> = if args.q.is_empty() {
                REFERENCE_MULTIPARTITE_TYPES
                    .iter()
                    .map(|t| t.to_vec())
                    .collect()
            } else {
                args.q
                    .iter()
                    .map(|s| parse_parts(s))
                    .collect::<Result<_, _>>()?
            };
            for parts in types {
                let label = parts
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                push(format!("({label})"), FamilySpec::CompleteMultipartite { parts })?;
            }
        }
        "hypersimplex" | "minimal-matroid" => {
            param_header = "n";
            let k = args
                .rank
                .ok_or_else(|| CliError::Usage("--k is required".into()))?;
            let range = args
                .n
                .as_deref()
                .ok_or_else(|| CliError::Usage("--n a..b is required".into()))?;
            let (lo, hi) = parse::parse_range(range).map_err(CliError::Usage)?;
            for n in lo..=hi {
                let n = n as usize;
                let spec = if args.family == "hypersimplex" {
                    FamilySpec::Hypersimplex { k, n }
                } else {
                    FamilySpec::MinimalMatroid { k, n }
                };
                push(n.to_string(), spec)?;
            }
        }
        other => {
            return Err(CliError::Usage(format!(
                "no table for family `{other}`"
            )))
        }
    }

    let mut report = Report::new(
        "table",
        json!({
            "family": args.family,
            "d": args.d,
            "q": args.q,
            "k": args.rank,
            "n": args.n,
        }),
    );
    report.result = json!({ "rows": rows_json });
    report.table = Some(Table {
        headers: vec![param_header.to_string(), "m-index".to_string()],
        rows,
    });
    Ok((report, 0))
}

fn parse_parts(s: &str) -> Result<Vec<u64>, CliError> {
    s.split(',')
        .map(|v| {
            v.trim()
                .parse::<u64>()
                .map_err(|_| CliError::Usage(format!("bad part size `{v}`")))
        })
        .collect()
}

fn cmd_hstar(sel: &SelArgs, approx: bool) -> CmdResult {
    let resolved = resolve(sel)?;
    let h = hstar::hstar_from_ehrhart(&resolved.poly)?;
    let mut report = Report::new("hstar", resolved.inputs.clone());
    report.result = json!({
        "d": h.ambient_degree(),
        "hstar": h.entries().iter().map(json_rat).collect::<Vec<_>>(),
    });
    report.line(
        "input",
        resolved
            .spec
            .map_or_else(|| resolved.poly.to_string(), |s| s.label()),
    );
    report.line(
        "h*",
        format!(
            "({})",
            h.entries()
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        ),
    );
    report.line("palindromic", hstar::is_palindromic(&h));
    let mut headers = vec!["i".to_string(), "h*_i".to_string()];
    if approx {
        headers.push("approx (decimal, inexact)".into());
    }
    report.table = Some(Table {
        headers,
        rows: h
            .entries()
            .iter()
            .enumerate()
            .map(|(i, v)| {
                let mut row = vec![i.to_string(), v.to_string()];
                if approx {
                    row.push(approx_str(v));
                }
                row
            })
            .collect(),
    });
    report.warnings = h.integrality_warnings();
    Ok((report, 0))
}

fn cmd_realrooted(args: &RealRootedArgs) -> CmdResult {
    let resolved = resolve(&args.sel)?;
    let (target, label) = if args.numerator {
        let h = hstar::hstar_from_ehrhart(&resolved.poly)?;
        (h.polynomial(), "h*-numerator")
    } else {
        (resolved.poly.clone(), "input")
    };
    let verdict = hstar::is_real_rooted(&target)?;
    let mut inputs = resolved.inputs.clone();
    inputs["numerator"] = json!(args.numerator);
    let mut report = Report::new("realrooted", inputs);
    report.result = json!({
        "real_rooted": verdict,
        "checked": label,
        "polynomial": target.to_string(),
    });
    report.line("checked", format!("{label}: {target}"));
    report.line("real-rooted", verdict);
    Ok((report, 0))
}

fn cmd_cl(sel: &SelArgs, approx: bool) -> CmdResult {
    let resolved = resolve(sel)?;
    let cert = cl::cl_check(&resolved.poly)?;
    let d = resolved.poly.degree().expect("nonzero checked") as u64;
    let bound = if cert.is_cl {
        Some(cl::cl_mindex_bound(&resolved.poly)?)
    } else {
        None
    };
    let dim_bound = cl::dimension_only_bound(d.max(1));
    let mut report = Report::new("cl", resolved.inputs.clone());
    report.result = json!({
        "is_cl": cert.is_cl,
        "odd_degree_half_root": cert.odd_degree_half_root,
        "squared_parts": cert
            .squared_parts
            .iter()
            .map(|iv| json!({ "lo": json_rat(&iv.lo), "hi": json_rat(&iv.hi) }))
            .collect::<Vec<_>>(),
        "max_b_squared_upper": json_rat(&cert.max_b_squared_upper),
        "mindex_bound": bound.as_ref().map(json_bigint),
        "dimension_bound": json_bigint(&dim_bound),
    });
    report.line(
        "input",
        resolved
            .spec
            .map_or_else(|| resolved.poly.to_string(), |s| s.label()),
    );
    report.line("is_cl", cert.is_cl);
    if cert.is_cl {
        report.line("odd-degree half root", cert.odd_degree_half_root);
        report.line(
            "m-index bound (ceil(1/2 + 2 max b^2))",
            bound.as_ref().expect("bound computed for CL input"),
        );
    }
    report.line(format!("dimension-only bound (d={d})").as_str(), &dim_bound);
    if cert.is_cl && !cert.squared_parts.is_empty() {
        let mut headers = vec!["root pair".to_string(), "b^2 in".to_string()];
        if approx {
            headers.push("approx (decimal, inexact)".into());
        }
        report.table = Some(Table {
            headers,
            rows: cert
                .squared_parts
                .iter()
                .enumerate()
                .map(|(i, iv)| {
                    let mut row = vec![
                        i.to_string(),
                        if iv.is_exact() {
                            format!("= {}", iv.lo)
                        } else {
                            format!("[{}, {}]", iv.lo, iv.hi)
                        },
                    ];
                    if approx {
                        row.push(approx_str(&iv.hi));
                    }
                    row
                })
                .collect(),
        });
    }
    Ok((report, 0))
}

fn cmd_verify(args: &VerifyArgs) -> CmdResult {
    let mut tuples = Vec::new();
    let mut rows = Vec::new();
    let mut all_pass = true;
    let mut check = |spec: &FamilySpec, dilation: u64, points: u64, expect: Option<&BigInt>| -> Result<(), CliError> {
        let f = families::ehrhart(spec)?;
        let count = families::lattice_count(spec, dilation, points)?.count;
        let value = f.eval(&rat_int((dilation * points) as i64));
        let formula = if value.is_integer() {
            value.to_integer()
        } else {
            // a non-integer Ehrhart value at an integer point is itself a failure
            BigInt::from(-1)
        };
        let mut pass = value.is_integer() && formula == count;
        if let Some(e) = expect {
            pass = pass && &count == e;
        }
        all_pass &= pass;
        tuples.push(json!({
            "family": spec.label(),
            "dilation": dilation,
            "points": points,
            "formula": json_bigint(&formula),
            "enumerated": json_bigint(&count),
            "expected": expect.map(json_bigint),
            "pass": pass,
        }));
        rows.push(vec![
            spec.label(),
            dilation.to_string(),
            points.to_string(),
            formula.to_string(),
            count.to_string(),
            if pass { "PASS".into() } else { "FAIL".into() },
        ]);
        Ok(())
    };

    if args.sweep {
        for spec in families::verification_sweep() {
            for dilation in 1..=3 {
                for points in 1..=3 {
                    check(&spec, dilation, points, None)?;
                }
            }
        }
    } else {
        let resolved = resolve(&args.sel)?;
        let spec = resolved
            .spec
            .ok_or_else(|| CliError::Usage("verify needs --family (or --sweep)".into()))?;
        let dilation = args.dilation.unwrap_or(1);
        let points = args
            .points
            .ok_or_else(|| CliError::Usage("verify needs --points (or --sweep)".into()))?;
        let expect = match &args.expect {
            Some(s) => Some(
                s.parse::<BigInt>()
                    .map_err(|_| CliError::Usage(format!("bad --expect `{s}`")))?,
            ),
            None => None,
        };
        check(&spec, dilation, points, expect.as_ref())?;
    }

    let mut report = Report::new(
        "verify",
        json!({ "sweep": args.sweep, "dilation": args.dilation, "points": args.points, "expect": args.expect }),
    );
    report.result = json!({ "tuples": tuples, "all_pass": all_pass });
    report.table = Some(Table {
        headers: ["family", "dilation", "points", "formula", "enumerated", "status"]
            .iter()
            .map(|s| s.to_string())
            .collect(),
        rows,
    });
    report.line("all pass", all_pass);
    Ok((report, if all_pass { 0 } else { 1 }))
}

fn cmd_conjecture(args: &ConjectureArgs) -> CmdResult {
    let scan: ConjectureReport = match args.which.as_str() {
        "q5.4" | "Q5.4" | "minimal-matroid" => {
            let (lo, hi) = match &args.n {
                Some(r) => parse::parse_range(r).map_err(CliError::Usage)?,
                None => (4, 8),
            };
            families::scan_minimal_matroid(lo as usize, hi as usize)
        }
        "q5.6" | "Q5.6" | "multipartite" => {
            let types: Vec<Vec<u64>> = if args.q.is_empty() {
                REFERENCE_MULTIPARTITE_TYPES
                    .iter()
                    .map(|t| t.to_vec())
                    .collect()
            } else {
                args.q
                    .iter()
                    .map(|s| parse_parts(s))
                    .collect::<Result<_, _>>()?
            };
            families::scan_multipartite(&types)
        }
        "q5.7" | "Q5.7" | "hypersimplex" => {
            let (lo, hi) = match &args.n {
                Some(r) => parse::parse_range(r).map_err(CliError::Usage)?,
                None => (4, 10),
            };
            families::scan_hypersimplex(lo as usize, hi as usize)
        }
        other => {
            return Err(CliError::Usage(format!(
                "unknown question `{other}` (use q5.4/minimal-matroid, q5.6/multipartite or q5.7/hypersimplex)"
            )))
        }
    };

    let entries: Vec<Value> = scan
        .entries
        .iter()
        .map(|e| {
            json!({
                "params": e.label,
                "computed": e.computed.as_ref().map(json_bigint),
                "conjectured": e.conjectured.iter().map(json_bigint).collect::<Vec<_>>(),
                "matched": e.matched,
                "note": e.note,
            })
        })
        .collect();
    let matches = scan
        .entries
        .iter()
        .filter(|e| e.matched == Some(true))
        .count();
    let mismatches = scan
        .entries
        .iter()
        .filter(|e| e.matched == Some(false))
        .count();

    let mut report = Report::new(
        "conjecture",
        json!({ "which": args.which, "n": args.n, "q": args.q }),
    );
    report.result = json!({ "entries": entries, "matches": matches, "mismatches": mismatches });
    report.line("question", &args.which);
    report.line("tuples", scan.entries.len());
    report.line("matches", matches);
    report.line("mismatches", mismatches);
    report.table = Some(Table {
        headers: ["params", "computed", "conjectured", "status"]
            .iter()
            .map(|s| s.to_string())
            .collect(),
        rows: scan
            .entries
            .iter()
            .map(|e| {
                vec![
                    e.label.clone(),
                    e.computed
                        .as_ref()
                        .map_or_else(|| "-".into(), |v| v.to_string()),
                    e.conjectured
                        .iter()
                        .map(|v| v.to_string())
                        .collect::<Vec<_>>()
                        .join(" or "),
                    match (e.matched, &e.note) {
                        (Some(true), _) => "match".into(),
                        (Some(false), _) => "mismatch".into(),
                        (None, Some(note)) => note.clone(),
                        (None, None) => "skipped".into(),
                    },
                ]
            })
            .collect(),
    });
    Ok((report, 0))
}
