//! `sphsys`: command-line access to spherical-system combinatorics.
//!
//! Exit codes: 0 success, 1 invalid input or failed validation, 2 usage or
//! I/O error, 3 internal consistency failure.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand};
use serde_json::json;
use spherical::enumerate::modulo_diagram_automorphisms;
use spherical::io::SystemDocument;
use spherical::{
    build_root_system, emit_system, enumerate_systems, faithful_couples, format_root, parse_root,
    quotient_edges, quotient_forest, quotient_lattice, render_dot, render_text, Error,
    LatticeScope, RootSystemSpec, SimpleSet, SphericalSystem, F4_CENSUS,
};

#[derive(Parser)]
#[command(
    name = "sphsys",
    version,
    about = "Spherical systems: census, validation, colors, quotients"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate all spherical systems of a root system, counted by rank.
    Census {
        /// Root system type, e.g. F4 or A2xA1.
        #[arg(long = "type", value_name = "TYPE")]
        kind: String,
        /// Only report systems of this rank.
        #[arg(long)]
        rank: Option<usize>,
        /// Add per-rank counts of cuspidal, strongly solvable, spherically closed and strict systems.
        #[arg(long)]
        flags: bool,
        /// Print the census as JSON, one document per system.
        #[arg(long)]
        json: bool,
        /// Count systems up to automorphisms of the Dynkin diagram.
        #[arg(long)]
        mod_diagram_auts: bool,
    },
    /// Check the axioms and report every violation.
    Validate {
        /// System document in JSON schema version 1.
        file: PathBuf,
    },
    /// Print the Cartan pairing of every color.
    Colors {
        /// System document in JSON schema version 1.
        file: PathBuf,
    },
    /// List the quotients by distinguished subsets of colors.
    Quotients {
        /// System document in JSON schema version 1.
        file: PathBuf,
        /// Write the lattice of iterated quotients as a DOT graph.
        #[arg(long, value_name = "OUT")]
        dot: Option<PathBuf>,
        /// Include quotients without spherical roots in the lattice.
        #[arg(long)]
        all: bool,
    },
    /// Localize at a subset of spherical roots or of simple roots and print the result as JSON.
    Localize {
        /// System document in JSON schema version 1.
        file: PathBuf,
        /// Comma-separated spherical roots, e.g. "a1+a2,a3".
        #[arg(long, conflicts_with = "s", required_unless_present = "s")]
        sigma: Option<String>,
        /// Comma-separated 1-based simple-root labels, e.g. "1,2".
        #[arg(long)]
        s: Option<String>,
    },
    /// Faithful couples whose weight is the dual of the given dominant weight.
    Faithful {
        /// Root system type, e.g. F4 or A3.
        #[arg(long = "type", value_name = "TYPE")]
        kind: String,
        /// Dominant weight on fundamental weights, e.g. w2, w1+w3 or 2w1.
        #[arg(long)]
        weight: String,
    },
    /// Census systems reaching the given system through minimal quotients of type P.
    Forest {
        /// System document in JSON schema version 1.
        file: PathBuf,
        /// Write the forest as a DOT graph.
        #[arg(long, value_name = "OUT")]
        dot: Option<PathBuf>,
    },
    /// Print the textual diagram of a system.
    Render {
        /// System document in JSON schema version 1.
        file: PathBuf,
    },
}

/// Failure carrying its exit code.
struct Exit(u8, anyhow::Error);

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::NotFree { .. } | Error::ForeignQuotientRoot(_) | Error::QuotientInvalid(_) => 3,
        _ => 1,
    }
}

fn lib(e: Error) -> Exit {
    Exit(exit_code(&e), e.into())
}

fn input(e: anyhow::Error) -> Exit {
    Exit(1, e)
}

fn read_system(path: &Path) -> Result<SphericalSystem, Exit> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))
        .map_err(|e| Exit(2, e))?;
    spherical::parse_system(&text, false).map_err(lib)
}

fn root_system(kind: &str) -> Result<Arc<spherical::RootSystem>, Exit> {
    let spec: RootSystemSpec = kind.parse().map_err(lib)?;
    Ok(Arc::new(build_root_system(&spec).map_err(lib)?))
}

/// Parses `w1+w3`, `2w1` or `0` into fundamental-weight coordinates.
fn parse_weight(text: &str, n: usize) -> anyhow::Result<Vec<i64>> {
    let mut w = vec![0i64; n];
    let text: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if text == "0" {
        return Ok(w);
    }
    for term in text.split('+') {
        let (coef, label) = term
            .split_once(['w', 'W'])
            .ok_or_else(|| anyhow!("bad weight term {term:?}"))?;
        let coef: i64 = if coef.is_empty() {
            1
        } else {
            coef.parse()
                .with_context(|| format!("bad coefficient in {term:?}"))?
        };
        let label: usize = label
            .parse()
            .with_context(|| format!("bad label in {term:?}"))?;
        if label == 0 || label > n {
            bail!("fundamental weight w{label} out of range for rank {n}");
        }
        w[label - 1] += coef;
    }
    Ok(w)
}

fn format_weight(w: &[i64]) -> String {
    let terms: Vec<String> = w
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| {
            if c == 1 {
                format!("w{}", i + 1)
            } else {
                format!("{c}w{}", i + 1)
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

fn row_text(row: &[i64]) -> String {
    row.iter().map(|x| format!("{x:>3}")).collect::<String>()
}

fn census(
    kind: &str,
    rank: Option<usize>,
    flags: bool,
    as_json: bool,
    mod_auts: bool,
) -> Result<(), Exit> {
    let rs = root_system(kind)?;
    let mut report = enumerate_systems(rs.clone(), rank);
    if mod_auts {
        report = modulo_diagram_automorphisms(report);
    }
    if let Some(k) = rank {
        report.systems.retain(|s| s.rank() == k);
        report.by_rank.retain(|&r, _| r == k);
        report.total = report.systems.len();
    }
    if flags {
        report.compute_flags();
    }
    if as_json {
        let systems: Vec<SystemDocument> = report
            .systems
            .iter()
            .map(|s| SystemDocument::from_system(s, None))
            .collect();
        let mut doc = json!({
            "root_system": rs.spec,
            "by_rank": report.by_rank,
            "total": report.total,
            "systems": systems,
        });
        if flags {
            doc["flags"] = report
                .flags
                .iter()
                .map(|f| {
                    json!({
                        "cuspidal": f.cuspidal,
                        "strongly_solvable": f.strongly_solvable,
                        "spherically_closed": f.spherically_closed,
                        "strict": f.strict,
                    })
                })
                .collect();
        }
        println!(
            "{}",
            serde_json::to_string_pretty(&doc).expect("census serializes")
        );
    } else {
        let suffix = if mod_auts {
            " modulo diagram automorphisms"
        } else {
            ""
        };
        println!("census of {}{}", rs.spec, suffix);
        if flags {
            println!("rank  count  cuspidal  strongly-solvable  closed  strict");
        }
        for (&r, &count) in &report.by_rank {
            if flags {
                let of_rank = || {
                    report
                        .systems
                        .iter()
                        .zip(&report.flags)
                        .filter(|(s, _)| s.rank() == r)
                        .map(|(_, f)| f)
                };
                let cusp = of_rank().filter(|f| f.cuspidal).count();
                let ss = of_rank().filter(|f| f.strongly_solvable).count();
                let closed = of_rank().filter(|f| f.spherically_closed).count();
                let strict = of_rank().filter(|f| f.strict).count();
                println!("{r:>4}  {count:>5}  {cusp:>8}  {ss:>17}  {closed:>6}  {strict:>6}");
            } else {
                println!("rank {r}: {count}");
            }
        }
        println!("total {}", report.total);
    }
    let single_f4 = rs.spec.components.len() == 1 && rs.spec.to_string() == "F4";
    if single_f4 && !mod_auts {
        let expected: Vec<(usize, usize)> = F4_CENSUS
            .iter()
            .copied()
            .filter(|&(r, _)| rank.is_none_or(|k| r == k))
            .collect();
        let diff = report.diff(&expected);
        if !diff.is_empty() {
            for d in &diff {
                eprintln!(
                    "rank {}: expected {}, found {}",
                    d.rank, d.expected, d.found
                );
            }
            return Err(Exit(
                3,
                anyhow!("census of F4 differs from the known counts"),
            ));
        }
    }
    Ok(())
}

fn validate(path: &Path) -> Result<(), Exit> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))
        .map_err(|e| Exit(2, e))?;
    let sys = spherical::parse_system(&text, true).map_err(lib)?;
    let violations = sys.validate();
    if violations.is_empty() {
        println!("valid: {} rank {}", sys.rs.spec, sys.rank());
        return Ok(());
    }
    for v in &violations {
        println!("{v}");
    }
    Err(Exit(1, anyhow!("{} violation(s)", violations.len())))
}

fn colors(path: &Path) -> Result<(), Exit> {
    let sys = read_system(path)?;
    let cs = sys.colors().map_err(lib)?;
    let header: Vec<String> = sys.sigma.iter().map(|s| format_root(s)).collect();
    println!("columns: {}", header.join(", "));
    for c in &cs.colors {
        println!(
            "{:<12} {:<10} {}",
            c.label(),
            c.owners().to_string(),
            row_text(&c.row)
        );
    }
    println!("{} colors", cs.len());
    Ok(())
}

fn quotients(path: &Path, dot: Option<&Path>, all: bool) -> Result<(), Exit> {
    let sys = read_system(path)?;
    let cs = sys.colors().map_err(lib)?;
    let edges = quotient_edges(&sys).map_err(lib)?;
    for e in &edges {
        let labels: Vec<String> = e
            .dset
            .members
            .iter()
            .map(|&i| cs.colors[i].label())
            .collect();
        let kind = e.kind.map_or_else(|| "-".to_string(), |k| k.to_string());
        let minimal = if e.minimal { "minimal" } else { "non-minimal" };
        println!("Delta* = {{{}}} {minimal} type {kind}", labels.join(", "));
        for line in render_text(&e.target).lines() {
            println!("  {line}");
        }
    }
    println!("{} distinguished subsets", edges.len());
    if let Some(out) = dot {
        let scope = if all {
            LatticeScope::All
        } else {
            LatticeScope::NonHomogeneous
        };
        let lattice = quotient_lattice(&sys, scope).map_err(lib)?;
        fs::write(out, render_dot(&lattice))
            .with_context(|| format!("writing {}", out.display()))
            .map_err(|e| Exit(2, e))?;
        let minimal = lattice.edges.iter().filter(|e| e.minimal).count();
        println!(
            "lattice: {} nodes, {} minimal edges written to {}",
            lattice.nodes.len(),
            minimal,
            out.display()
        );
    }
    Ok(())
}

fn localize(path: &Path, sigma: Option<&str>, s: Option<&str>) -> Result<(), Exit> {
    let sys = read_system(path)?;
    let n = sys.rs.rank();
    let local = match (sigma, s) {
        (Some(text), _) => {
            let keep = text
                .split(',')
                .filter(|t| !t.trim().is_empty())
                .map(|t| parse_root(t, n))
                .collect::<spherical::Result<Vec<_>>>()
                .map_err(lib)?;
            sys.localize_sigma(&keep).map_err(lib)?
        }
        (None, Some(text)) => {
            let mut subset = SimpleSet::EMPTY;
            for t in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
                let l: usize = t
                    .parse()
                    .with_context(|| format!("bad simple-root label {t:?}"))
                    .map_err(input)?;
                if l == 0 || l > n {
                    return Err(lib(Error::IndexOutOfRange { index: l, rank: n }));
                }
                subset.insert(l - 1);
            }
            sys.localize_s(subset)
        }
        (None, None) => return Err(Exit(2, anyhow!("one of --sigma or --s is required"))),
    };
    print!("{}", emit_system(&local));
    Ok(())
}

fn forest(path: &Path, dot: Option<&Path>) -> Result<(), Exit> {
    let sys = read_system(path)?;
    let report = enumerate_systems(sys.rs.clone(), None);
    let forest = quotient_forest(&report.systems, &sys).map_err(lib)?;
    for (i, node) in forest.nodes.iter().enumerate().skip(1) {
        println!("system {i}:");
        for line in render_text(node).lines() {
            println!("  {line}");
        }
    }
    println!(
        "{} systems over the given one, {} edges of type P",
        forest.nodes.len() - 1,
        forest.edges.len()
    );
    if let Some(out) = dot {
        fs::write(out, render_dot(&forest))
            .with_context(|| format!("writing {}", out.display()))
            .map_err(|e| Exit(2, e))?;
    }
    Ok(())
}

fn faithful(kind: &str, weight: &str) -> Result<(), Exit> {
    let rs = root_system(kind)?;
    let pi = parse_weight(weight, rs.rank()).map_err(input)?;
    let couples = faithful_couples(rs.clone(), &pi).map_err(lib)?;
    println!(
        "faithful couples for {} with weight dual to {}",
        rs.spec,
        format_weight(&pi)
    );
    for (i, c) in couples.iter().enumerate() {
        let cs = c.system.colors().map_err(lib)?;
        let support: Vec<String> = cs
            .colors
            .iter()
            .zip(&c.delta)
            .filter(|(_, &k)| k > 0)
            .map(|(col, &k)| {
                if k == 1 {
                    col.label()
                } else {
                    format!("{k}{}", col.label())
                }
            })
            .collect();
        println!(
            "couple {}: delta = {} omega = {} |Gamma| = {} orbit {}{}",
            i + 1,
            support.join(" + "),
            format_weight(&c.omega),
            c.gamma_order,
            c.orbit_size,
            if c.wonderful_closure {
                " wonderful closure"
            } else {
                ""
            }
        );
        for line in render_text(&c.system).lines() {
            println!("  {line}");
        }
    }
    println!("count {}", couples.len());
    println!("note: counts assume every spherical system is realized by a wonderful variety");
    Ok(())
}

fn run(cli: Cli) -> Result<(), Exit> {
    match cli.command {
        Command::Census {
            kind,
            rank,
            flags,
            json,
            mod_diagram_auts,
        } => census(&kind, rank, flags, json, mod_diagram_auts),
        Command::Validate { file } => validate(&file),
        Command::Colors { file } => colors(&file),
        Command::Quotients { file, dot, all } => quotients(&file, dot.as_deref(), all),
        Command::Localize { file, sigma, s } => localize(&file, sigma.as_deref(), s.as_deref()),
        Command::Forest { file, dot } => forest(&file, dot.as_deref()),
        Command::Faithful { kind, weight } => faithful(&kind, &weight),
        Command::Render { file } => {
            let sys = read_system(&file)?;
            print!("{}", render_text(&sys));
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Exit(code, e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(code)
        }
    }
}
