//! `nestcob` — cobordism of nested submanifolds and links of spheres.
//!
//! Every library operation is exposed as a subcommand with text and JSON
//! output. Exit codes: 0 on success, 1 on a domain error (bad dimensions,
//! unparseable terms, missing framed directions), 2 on usage errors.

use clap::{Parser, Subcommand, ValueEnum};
use nestcob::{
    cob, generate_system, hilton_milnor, lcob, ncob, nested_chain, parse_space, parse_structure,
    stable_cob, stable_ncob, CobordismAnswer, SpaceExpr, SphereTable, ThomStructure,
};
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "nestcob",
    version,
    about = "Cobordism of nested submanifolds and links of spheres, computed through \
             Thom spaces and the Hilton-Milnor splitting"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Sphere-table file overriding the shipped default.
    #[arg(long, global = true, env = "NESTCOB_TABLE")]
    table: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Ambient {
    Sphere,
    Generic,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate a system of basic Whitehead products.
    Hall {
        #[arg(long)]
        generators: u32,
        #[arg(long)]
        max_weight: u32,
    },
    /// Hilton-Milnor decomposition of pi_m of a wedge of suspensions.
    Pi {
        #[arg(long)]
        m: u64,
        /// Term in the space grammar, e.g. "(S2 v S2)".
        #[arg(long)]
        space: String,
    },
    /// Cobordism classes of submanifolds with a normal structure.
    Cob {
        #[arg(long)]
        m: u64,
        /// Codimension (the structure rank); required with --framed.
        #[arg(long)]
        codim: Option<u64>,
        /// Use the trivial (framed) structure.
        #[arg(long)]
        framed: bool,
        /// Structure as `fr:<rank>` or `<name>:<rank>:<fdirs>`.
        #[arg(long)]
        structure: Option<String>,
        #[arg(long, value_enum, default_value_t = Ambient::Sphere)]
        ambient: Ambient,
    },
    /// Cobordism classes of two-component links in S^m.
    Lcob {
        #[arg(long)]
        m: u64,
        /// Dimension of the component K (structure theta, codim m-k1).
        #[arg(long)]
        k1: u64,
        /// Dimension of the component K' (structure theta', codim m-k2).
        #[arg(long)]
        k2: u64,
        /// Both structures framed.
        #[arg(long)]
        framed: bool,
        /// Structure of K, as `fr:<rank>` or `<name>:<rank>:<fdirs>`.
        #[arg(long)]
        theta: Option<String>,
        /// Structure of K'.
        #[arg(long)]
        theta_prime: Option<String>,
    },
    /// Cobordism classes of nested submanifolds K' in K in S^m.
    Ncob {
        #[arg(long)]
        m: u64,
        /// Dimension of the outer manifold K (theta has rank m-k1).
        #[arg(long)]
        k1: u64,
        /// Dimension of the inner manifold K' (theta' has rank k1-k2).
        #[arg(long)]
        k2: u64,
        #[arg(long)]
        framed: bool,
        #[arg(long)]
        theta: Option<String>,
        #[arg(long)]
        theta_prime: Option<String>,
    },
    /// Iterated nested cobordism for a chain of submanifolds.
    Nested {
        #[arg(long)]
        m: u64,
        /// Dimensions from the innermost manifold outward, e.g. 0,1,4.
        #[arg(long, value_delimiter = ',')]
        dims: Vec<u64>,
        #[arg(long)]
        framed: bool,
        /// Structures, innermost first; repeat once per chain level.
        #[arg(long)]
        structure: Vec<String>,
    },
    /// Stable cobordism groups.
    Stable {
        /// Dimension k (or k1 when --k2 is given).
        #[arg(long)]
        k: u64,
        /// Inner dimension: compute the stable nested group of (k, k2).
        #[arg(long)]
        k2: Option<u64>,
        /// Stable structure Θ (default fr).
        #[arg(long)]
        theta: Option<String>,
        /// Structure θ' of the inner manifold (default fr:(k-k2)).
        #[arg(long)]
        theta_prime: Option<String>,
    },
    /// Validate a sphere-table file.
    Table {
        #[arg(long)]
        validate: PathBuf,
    },
}

fn main() {
    let cli = Cli::parse();
    if let Err(message) = run(&cli) {
        eprintln!("error: {message}");
        std::process::exit(1);
    }
}

/// Dimensions far beyond anything meaningful are rejected up front so the
/// arithmetic downstream never approaches the integer limits.
fn bounded(name: &str, value: u64) -> Result<u64, String> {
    const CAP: u64 = 1_000_000_000;
    if value > CAP {
        return Err(format!(
            "{name} = {value} exceeds the supported bound {CAP}"
        ));
    }
    Ok(value)
}

fn load_table(cli: &Cli) -> Result<SphereTable, String> {
    match &cli.table {
        Some(path) => SphereTable::load(path).map_err(|e| e.to_string()),
        None => Ok(SphereTable::shipped()),
    }
}

fn structure_arg(
    flag: &str,
    value: &Option<String>,
    framed: bool,
    framed_rank: u64,
) -> Result<ThomStructure, String> {
    match (value, framed) {
        (Some(text), _) => parse_structure(text).map_err(|e| format!("{flag}: {e}")),
        (None, true) => Ok(ThomStructure::Framed(framed_rank)),
        (None, false) => Err(format!(
            "missing {flag} (or pass --framed for trivial structures)"
        )),
    }
}

fn check_rank(flag: &str, s: &ThomStructure, expected: u64) -> Result<(), String> {
    if s.rank() != expected {
        return Err(format!(
            "{flag} has rank {}, but the dimensions require rank {expected}",
            s.rank()
        ));
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<(), String> {
    match &cli.command {
        Command::Hall {
            generators,
            max_weight,
        } => {
            let system = generate_system(*generators, *max_weight).map_err(|e| e.to_string())?;
            match cli.format {
                Format::Text => {
                    for p in system.iter() {
                        let deg: Vec<String> =
                            p.multidegree().iter().map(|d| d.to_string()).collect();
                        println!("w={} deg=({}) {}", p.weight(), deg.join(","), p);
                    }
                }
                Format::Json => {
                    let products: Vec<_> = system
                        .iter()
                        .map(|p| {
                            serde_json::json!({
                                "weight": p.weight(),
                                "multidegree": p.multidegree(),
                                "bracket": p.to_string(),
                            })
                        })
                        .collect();
                    print_json(&serde_json::json!({
                        "generators": generators,
                        "max_weight": max_weight,
                        "order_policy": system.policy().to_string(),
                        "products": products,
                    }));
                }
            }
            Ok(())
        }
        Command::Pi { m, space } => {
            let m = bounded("--m", *m)?;
            let table = load_table(cli)?;
            let term = parse_space(space).map_err(|e| format!("--space: {e}"))?;
            let normalized = nestcob::normalize(&term);
            if normalized == SpaceExpr::Point {
                match cli.format {
                    Format::Text => println!("total: 0"),
                    Format::Json => print_json(&serde_json::json!({
                        "degree": m,
                        "route": "hilton",
                        "summands": [],
                        "total": { "rank": 0, "torsion": [] },
                    })),
                }
                return Ok(());
            }
            let bases: Vec<SpaceExpr> = normalized
                .clauses()
                .iter()
                .map(|c| {
                    c.desuspend_clause().ok_or_else(|| {
                        format!("clause {c} is not a suspension; pi needs a wedge of suspensions")
                    })
                })
                .collect::<Result<_, _>>()?;
            let dec = hilton_milnor(m, &bases, &table).map_err(|e| e.to_string())?;
            match cli.format {
                Format::Text => {
                    for s in &dec.summands {
                        println!("{}  {}  {}", s.label, s.space, s.group);
                    }
                    println!("total: {}", dec.total());
                }
                Format::Json => print_json(&dec.to_json()),
            }
            Ok(())
        }
        Command::Cob {
            m,
            codim,
            framed,
            structure,
            ambient,
        } => {
            let m = bounded("--m", *m)?;
            let table = load_table(cli)?;
            let theta = match (structure, framed, codim) {
                (Some(text), _, maybe_codim) => {
                    let s = parse_structure(text).map_err(|e| format!("--structure: {e}"))?;
                    if let Some(d) = maybe_codim {
                        check_rank("--structure", &s, *d)?;
                    }
                    s
                }
                (None, true, Some(d)) => ThomStructure::Framed(*d),
                (None, true, None) => return Err("--framed needs --codim".to_string()),
                (None, false, _) => {
                    return Err("pass --framed with --codim, or --structure".to_string())
                }
            };
            let answer =
                cob(m, &theta, *ambient == Ambient::Sphere, &table).map_err(|e| e.to_string())?;
            emit_answer(cli, &answer);
            Ok(())
        }
        Command::Lcob {
            m,
            k1,
            k2,
            framed,
            theta,
            theta_prime,
        } => {
            let m = bounded("--m", *m)?;
            let (k1, k2) = (bounded("--k1", *k1)?, bounded("--k2", *k2)?);
            let table = load_table(cli)?;
            if k1 >= m || k2 >= m {
                return Err(format!("need k1, k2 < m, got k1={k1}, k2={k2}, m={m}"));
            }
            let d = m - k1;
            let d_prime = m - k2;
            let theta = structure_arg("--theta", theta, *framed, d)?;
            let theta_prime = structure_arg("--theta-prime", theta_prime, *framed, d_prime)?;
            check_rank("--theta", &theta, d)?;
            check_rank("--theta-prime", &theta_prime, d_prime)?;
            let answer = lcob(m, &theta_prime, &theta, &table).map_err(|e| e.to_string())?;
            emit_answer(cli, &answer);
            Ok(())
        }
        Command::Ncob {
            m,
            k1,
            k2,
            framed,
            theta,
            theta_prime,
        } => {
            let m = bounded("--m", *m)?;
            let (k1, k2) = (bounded("--k1", *k1)?, bounded("--k2", *k2)?);
            let table = load_table(cli)?;
            if !(k2 < k1 && k1 < m) {
                return Err(format!(
                    "need 0 <= k2 < k1 < m, got k2={k2}, k1={k1}, m={m}"
                ));
            }
            let d = m - k1;
            let d_prime = k1 - k2;
            let theta = structure_arg("--theta", theta, *framed, d)?;
            let theta_prime = structure_arg("--theta-prime", theta_prime, *framed, d_prime)?;
            check_rank("--theta", &theta, d)?;
            check_rank("--theta-prime", &theta_prime, d_prime)?;
            let answer = ncob(m, &theta_prime, &theta, &table).map_err(|e| e.to_string())?;
            emit_answer(cli, &answer);
            Ok(())
        }
        Command::Nested {
            m,
            dims,
            framed,
            structure,
        } => {
            let m = bounded("--m", *m)?;
            let table = load_table(cli)?;
            if dims.is_empty() {
                return Err("--dims needs at least one dimension".to_string());
            }
            for &d in dims {
                bounded("--dims", d)?;
            }
            if !dims.windows(2).all(|w| w[0] < w[1]) {
                return Err(format!(
                    "--dims must increase strictly from the innermost manifold out, got {dims:?}"
                ));
            }
            let deepest = *dims.last().expect("nonempty");
            if deepest >= m {
                return Err(format!("outermost dimension {deepest} must be < m = {m}"));
            }
            // rank of each level is the gap to the next dimension up
            let mut ranks = Vec::with_capacity(dims.len());
            for pair in dims.windows(2) {
                ranks.push(pair[1] - pair[0]);
            }
            ranks.push(m - deepest);
            let structures: Vec<ThomStructure> = if structure.is_empty() {
                if !*framed {
                    return Err("pass --framed or one --structure per level".to_string());
                }
                ranks.iter().map(|&r| ThomStructure::Framed(r)).collect()
            } else {
                if structure.len() != ranks.len() {
                    return Err(format!(
                        "{} dims need {} structures, got {}",
                        dims.len(),
                        ranks.len(),
                        structure.len()
                    ));
                }
                let mut out = Vec::with_capacity(structure.len());
                for (i, (text, &rank)) in structure.iter().zip(&ranks).enumerate() {
                    let s = parse_structure(text)
                        .map_err(|e| format!("--structure #{}: {e}", i + 1))?;
                    check_rank(&format!("--structure #{}", i + 1), &s, rank)?;
                    out.push(s);
                }
                out
            };
            let answer = nested_chain(m, &structures, &table).map_err(|e| e.to_string())?;
            emit_answer(cli, &answer);
            Ok(())
        }
        Command::Stable {
            k,
            k2,
            theta,
            theta_prime,
        } => {
            let k = bounded("--k", *k)?;
            let table = load_table(cli)?;
            let theta_stable = match theta {
                Some(text) if text == "fr" => ThomStructure::Framed(0),
                Some(text) => parse_structure(text).map_err(|e| format!("--theta: {e}"))?,
                None => ThomStructure::Framed(0),
            };
            let answer = match k2 {
                None => stable_cob(k, &theta_stable, &table).map_err(|e| e.to_string())?,
                Some(k2) => {
                    let k2 = bounded("--k2", *k2)?;
                    if k2 >= k {
                        return Err(format!("need k2 < k, got k2={k2}, k={k}"));
                    }
                    let theta_prime = match theta_prime {
                        Some(text) => {
                            parse_structure(text).map_err(|e| format!("--theta-prime: {e}"))?
                        }
                        None => ThomStructure::Framed(k - k2),
                    };
                    stable_ncob(k, k2, &theta_prime, &theta_stable, &table)
                        .map_err(|e| e.to_string())?
                }
            };
            emit_answer(cli, &answer);
            Ok(())
        }
        Command::Table { validate } => {
            let table = SphereTable::load(validate).map_err(|e| e.to_string())?;
            let stems: Vec<u64> = table.stems().collect();
            match cli.format {
                Format::Text => println!("ok: {} stable stems", stems.len()),
                Format::Json => {
                    print_json(&serde_json::json!({ "ok": true, "stable_stems": stems }))
                }
            }
            Ok(())
        }
    }
}

fn emit_answer(cli: &Cli, answer: &CobordismAnswer) {
    match cli.format {
        Format::Json => print_json(&answer.to_json()),
        Format::Text => {
            println!("space: {}", answer.space);
            if let Some(dec) = &answer.decomposition {
                for s in &dec.summands {
                    let label = s.label.to_string();
                    match answer.geometric_name(&label) {
                        Some(name) => println!("{label}  {}  {}  [{name}]", s.space, s.group),
                        None => println!("{label}  {}  {}", s.space, s.group),
                    }
                }
            }
            if let Some(total) = answer.total() {
                println!("total: {total}");
            }
            println!("status: {}", answer.status);
        }
    }
}

fn print_json(value: &serde_json::Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("serializable")
    );
}
