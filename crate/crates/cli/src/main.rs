use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;
use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::{json, Value};

use ty_core::chain::{scd, split_generic, transversal, transversal_family, Scd};
use ty_core::factorization::canonical_tableau;
use ty_core::level_sets::{enumerate_level, extremes, signature};
use ty_core::poset::{enumerate, hasse_edges};
use ty_core::tropical::{components, deg_vector, f_vector, facets, generators, max_cover};
use ty_core::verify::{check_chains, verify_slice};
use ty_core::{ChainFamily, Config, Error, FamilyKind, Monomial, Side, Signature};

#[derive(Parser)]
#[command(name = "ty", version, about = "Level-set decomposition of Young's lattice L(m,n)")]
struct Cli {
    /// Largest slice size C(n+m, n) any command may enumerate.
    #[arg(long, global = true, env = "TY_MAX_POSET", default_value_t = 2_000_000)]
    max_poset: u64,
    /// Largest poset handed to the antichain computation.
    #[arg(long, global = true, default_value_t = 2000)]
    max_sperner: usize,
    /// Pretty-print JSON.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct MonomialArg {
    #[arg(long)]
    n: usize,
    /// Exponent vector, e.g. 1,1,1,0,1,1
    #[arg(long, allow_hyphen_values = true)]
    monomial: Monomial,
}

#[derive(Args)]
struct SignatureArg {
    #[arg(long)]
    n: usize,
    /// Level-set label d_0,...,d_k
    #[arg(long, value_delimiter = ',')]
    signature: Vec<u32>,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// List the monomials of A_n(m).
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: u32,
    },
    /// Level-set label of a monomial.
    Signature(MonomialArg),
    /// Tropical values f_{n,r}, deg_r and maximal covers.
    Tropical(MonomialArg),
    /// Generators, components and facets for the r-th secant ideal.
    Ideal {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },
    /// Canonical factorization tableau.
    Tableau(MonomialArg),
    /// Members of a level set.
    Levelset(SignatureArg),
    /// Transversal chain through a monomial.
    Chain {
        #[command(flatten)]
        mono: MonomialArg,
        #[arg(long, value_enum, default_value = "left")]
        side: SideArg,
    },
    /// Transversal chain family of a level set.
    Decompose(SignatureArg),
    /// Symmetric chain decompositions of every level set of A_n(m), or of one.
    Scd {
        #[arg(long)]
        n: usize,
        #[arg(long, required_unless_present = "signature")]
        m: Option<u32>,
        #[arg(long, value_delimiter = ',')]
        signature: Option<Vec<u32>>,
    },
    /// Check a whole slice, or a chain family read from a JSON file.
    Verify {
        #[arg(long, required_unless_present = "input")]
        n: Option<usize>,
        #[arg(long, required_unless_present = "input")]
        m: Option<u32>,
        /// Add per-level rank profiles and the antichain check.
        #[arg(long)]
        full: bool,
        /// Chain family as written by `decompose` or `scd --signature`.
        #[arg(long, conflicts_with_all = ["m", "full"])]
        input: Option<String>,
    },
    /// Hasse diagram with chain families drawn on top.
    Export {
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: u32,
        /// Restrict to one level set.
        #[arg(long, value_delimiter = ',')]
        signature: Option<Vec<u32>>,
    },
}

enum Failure {
    Usage(String),
    Verification(Value),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<Value, Failure>;

fn check_n(arg: &MonomialArg) -> Result<&Monomial, Failure> {
    if arg.monomial.n() != arg.n {
        return Err(Failure::Usage(format!(
            "--monomial has {} exponents but --n {} needs {}",
            arg.monomial.n() + 1,
            arg.n,
            arg.n + 1
        )));
    }
    Ok(&arg.monomial)
}

fn family_json(fam: &ChainFamily, n: usize) -> Value {
    let mut v = serde_json::to_value(fam).expect("families serialize");
    v["n"] = json!(n);
    v
}

fn run(cli: &Cli) -> Outcome {
    let cfg = Config {
        max_poset: cli.max_poset,
        max_sperner: cli.max_sperner,
    };
    match &cli.command {
        Command::Enumerate { n, m } => {
            let size = ty_core::poset::slice_size(*n, *m);
            if size > cfg.max_poset {
                return Err(Error::SizeCap { size, cap: cfg.max_poset }.into());
            }
            let all: Vec<Monomial> = enumerate(*n, *m).collect();
            Ok(json!({ "n": n, "m": m, "count": all.len(), "monomials": all }))
        }
        Command::Signature(arg) => {
            let mu = check_n(arg)?;
            Ok(json!({ "signature": signature(mu) }))
        }
        Command::Tropical(arg) => {
            let mu = check_n(arg)?;
            let covers = (1..f_vector(mu).len())
                .map(|r| {
                    let (amount, facet) = max_cover(mu, r)?;
                    Ok(json!({ "r": r, "covered": amount, "facet": facet }))
                })
                .collect::<Result<Vec<_>, Error>>()?;
            Ok(json!({
                "monomial": mu,
                "f": &*f_vector(mu),
                "deg": deg_vector(mu),
                "max_cover": covers,
            }))
        }
        Command::Ideal { n, r } => {
            let comps = if *r == 0 { vec![] } else { components(*n, *r)? };
            Ok(json!({
                "n": n,
                "r": r,
                "generators": generators(*n, *r)?,
                "components": comps,
                "facets": facets(*n, *r)?,
            }))
        }
        Command::Tableau(arg) => {
            let mu = check_n(arg)?;
            let t = canonical_tableau(mu)?;
            Ok(json!({ "rows": t.rows(), "census": t.census(mu.n()) }))
        }
        Command::Levelset(arg) => {
            let sig = Signature::new(arg.n, arg.signature.clone())?;
            let level = enumerate_level(&sig, &cfg)?;
            let (top, bottom) = extremes(&sig);
            Ok(json!({
                "n": arg.n,
                "signature": sig,
                "size": level.len(),
                "top": top,
                "bottom": bottom,
                "members": level.members(),
            }))
        }
        Command::Chain { mono, side } => {
            let mu = check_n(mono)?;
            let side = match side {
                SideArg::Left => Side::Left,
                SideArg::Right => Side::Right,
            };
            Ok(serde_json::to_value(transversal(mu, side)?).expect("chains serialize"))
        }
        Command::Decompose(arg) => {
            let sig = Signature::new(arg.n, arg.signature.clone())?;
            Ok(family_json(&transversal_family(&sig, &cfg)?, arg.n))
        }
        Command::Scd { n, m, signature } => match signature {
            Some(d) => {
                let sig = Signature::new(*n, d.clone())?;
                match scd(&sig, &cfg)? {
                    Scd::Available { family, strategy } => {
                        let mut v = family_json(&family, *n);
                        v["strategy"] = json!(strategy);
                        Ok(v)
                    }
                    Scd::Unavailable { reason, .. } => {
                        Ok(json!({ "n": n, "signature": sig, "available": false, "reason": reason }))
                    }
                }
            }
            None => {
                let m = m.expect("clap requires --m");
                let split = split_generic(*n, m, &cfg)?;
                let generic: Vec<Value> = split
                    .generic
                    .iter()
                    .map(|(f, s)| {
                        let mut v = family_json(f, *n);
                        v["strategy"] = json!(s);
                        v
                    })
                    .collect();
                let singular: Vec<Value> = split
                    .singular
                    .iter()
                    .map(|(f, reason)| {
                        let mut v = family_json(f, *n);
                        v["reason"] = json!(reason);
                        v
                    })
                    .collect();
                let size = ty_core::poset::slice_size(*n, m);
                Ok(json!({
                    "n": n,
                    "m": m,
                    "generic": generic,
                    "singular": singular,
                    "generic_fraction": split.generic_size() as f64 / size as f64,
                }))
            }
        },
        Command::Verify { n, m, full, input } => match input {
            Some(path) => verify_input(path, *n, &cfg),
            None => {
                let (n, m) = (n.expect("clap requires --n"), m.expect("clap requires --m"));
                let rep = verify_slice(n, m, &cfg, *full)?;
                let v = serde_json::to_value(&rep).expect("reports serialize");
                if rep.ok {
                    Ok(v)
                } else {
                    Err(Failure::Verification(v))
                }
            }
        },
        Command::Export { format, n, m, signature } => {
            let only = signature
                .as_ref()
                .map(|d| Signature::new(*n, d.clone()))
                .transpose()?;
            export(*format, *n, *m, only.as_ref(), &cfg)
        }
    }
}

#[derive(Deserialize)]
struct ChainIn {
    elements: Vec<Monomial>,
}

#[derive(Deserialize)]
struct FamilyIn {
    #[serde(default)]
    n: Option<usize>,
    signature: Vec<u32>,
    kind: String,
    chains: Vec<ChainIn>,
}

fn verify_input(path: &str, n_flag: Option<usize>, cfg: &Config) -> Outcome {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{path}: {e}")))?;
    let fam: FamilyIn =
        serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{path}: {e}")))?;
    let n = fam
        .n
        .or(n_flag)
        .or_else(|| fam.chains.first().and_then(|c| c.elements.first()).map(Monomial::n))
        .ok_or_else(|| Failure::Usage("cannot infer n; pass --n".into()))?;
    let kind = FamilyKind::parse(&fam.kind)
        .ok_or_else(|| Failure::Usage(format!("unknown family kind {:?}", fam.kind)))?;
    let sig = Signature::new(n, fam.signature)?;
    let rep = check_chains(&sig, kind, fam.chains.iter().map(|c| c.elements.as_slice()), cfg)?;
    let v = serde_json::to_value(&rep).expect("reports serialize");
    if rep.ok {
        Ok(v)
    } else {
        Err(Failure::Verification(v))
    }
}

const PALETTE: [&str; 10] = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
    "#bcbd22", "#17becf",
];

fn export(format: Format, n: usize, m: u32, only: Option<&Signature>, cfg: &Config) -> Outcome {
    let mut edges = hasse_edges(n, m, cfg.max_poset)?;
    let mut families = Vec::new();
    match only {
        Some(sig) => {
            let level: HashSet<Monomial> = enumerate_level(sig, cfg)?.members().iter().cloned().collect();
            edges.retain(|(a, b, _)| level.contains(a) && level.contains(b));
            families.push(match scd(sig, cfg)? {
                Scd::Available { family, .. } => family,
                Scd::Unavailable { .. } => transversal_family(sig, cfg)?,
            });
        }
        None => {
            let split = split_generic(n, m, cfg)?;
            families.extend(split.generic.into_iter().map(|(f, _)| f));
            families.extend(split.singular.into_iter().map(|(f, _)| f));
        }
    }
    let on_chain: HashSet<(&Monomial, &Monomial)> = families
        .iter()
        .flat_map(|f| f.chains())
        .flat_map(|c| c.elements().windows(2).map(|w| (&w[0], &w[1])))
        .collect();

    if let Format::Json = format {
        let list: Vec<Value> = edges
            .iter()
            .map(|(a, b, c)| {
                json!({ "from": a, "to": b, "color": c, "on_chain": on_chain.contains(&(a, b)) })
            })
            .collect();
        return Ok(json!({ "n": n, "m": m, "edges": list, "families": families }));
    }

    let mut nodes: BTreeMap<std::cmp::Reverse<i64>, Vec<&Monomial>> = BTreeMap::new();
    let mut seen = HashSet::new();
    for (a, b, _) in &edges {
        for x in [a, b] {
            if seen.insert(x) {
                nodes.entry(std::cmp::Reverse(x.weight())).or_default().push(x);
            }
        }
    }
    for f in &families {
        for x in f.chains().iter().flat_map(|c| c.elements()) {
            if seen.insert(x) {
                nodes.entry(std::cmp::Reverse(x.weight())).or_default().push(x);
            }
        }
    }
    let mut out = String::new();
    writeln!(out, "digraph hasse {{").unwrap();
    writeln!(out, "  rankdir=TB;").unwrap();
    writeln!(out, "  node [shape=box, fontsize=10];").unwrap();
    for (w, xs) in &nodes {
        let mut xs = xs.clone();
        xs.sort();
        let names: Vec<String> = xs.iter().map(|x| format!("\"{x}\"")).collect();
        writeln!(out, "  {{ rank=same; /* weight {} */ {}; }}", w.0, names.join("; ")).unwrap();
    }
    for (a, b, c) in &edges {
        let color = PALETTE[(c.get() - 1) % PALETTE.len()];
        let style = if on_chain.contains(&(a, b)) {
            ", penwidth=3, style=bold"
        } else {
            ", style=dashed"
        };
        writeln!(out, "  \"{a}\" -> \"{b}\" [color=\"{color}\", label=\"{}\"{style}];", c.get()).unwrap();
    }
    writeln!(out, "}}").unwrap();
    Ok(Value::String(out))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let emit = |v: &Value| match v {
        Value::String(s) => print!("{s}"),
        other if cli.pretty => println!("{}", serde_json::to_string_pretty(other).unwrap()),
        other => println!("{other}"),
    };
    match run(&cli) {
        Ok(v) => {
            emit(&v);
            ExitCode::SUCCESS
        }
        Err(Failure::Verification(v)) => {
            emit(&v);
            eprintln!("verification failed");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
