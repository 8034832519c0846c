use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use ravenel_core::degree::{minimal_vq_exponent, minimal_vq_exponent_by_scan, IdealSpec};
use ravenel_core::l33::l33_scan;
use ravenel_core::suite::{check_ids, run_all, run_check, CheckReport};
use ravenel_core::{
    CoefficientProfile, CohomologyEngine, RavenelComplex, SkeletonCells, TodaTable,
};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "ravenel",
    version,
    about = "Exact computations in the Ravenel complex C(n) and related degree tables"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Height {
    #[arg(long)]
    p: u64,
    #[arg(long)]
    n: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Monomial basis of C(n)^{s,t}.
    Basis {
        #[command(flatten)]
        h: Height,
        #[arg(long)]
        s: usize,
        #[arg(long, allow_hyphen_values = true)]
        t: i64,
    },
    /// Differential of an element, e.g. "h1,0 h2,1 - 2*h3,0".
    Diff {
        #[command(flatten)]
        h: Height,
        #[arg(long)]
        element: String,
    },
    /// Dimension and ranks of H^{s,t}, over K(n)_* or a truncation.
    Cohomology {
        #[command(flatten)]
        h: Height,
        #[arg(long)]
        s: usize,
        #[arg(long, allow_hyphen_values = true)]
        t: i64,
        /// Exponents e_1,...,e_{n-1} of E(n)_*/(p, v_1^{e_1}, ...).
        #[arg(long, value_delimiter = ',')]
        truncate: Option<Vec<u64>>,
    },
    /// Run one registered check, or all of them.
    Check {
        id: Option<String>,
        #[arg(long, conflicts_with = "id")]
        all: bool,
        /// Write the JSON report to a file.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Generator-table queries.
    Toda {
        #[command(subcommand)]
        command: TodaCommand,
    },
    /// L(3,3) degree queries.
    L33 {
        #[command(subcommand)]
        command: L33Command,
    },
    /// Invariant-ideal queries.
    Ideal {
        #[command(subcommand)]
        command: IdealCommand,
    },
    /// Least a with |v_{n-1}^a| = q mod q_n.
    Minexp {
        #[command(flatten)]
        h: Height,
    },
}

#[derive(Subcommand)]
enum TodaCommand {
    /// All classes up to the bound.
    Enumerate {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        bound: Option<u64>,
    },
    /// Classes of one total degree.
    Search {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        bound: Option<u64>,
        #[arg(long, allow_hyphen_values = true)]
        degree: i64,
    },
    /// Classes in degrees s + a + offset, for s and a in the given sets.
    Scan {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        bound: Option<u64>,
        /// Comma-separated integers, or `Z<k>` for the cells of V(k).
        #[arg(long)]
        s_set: String,
        #[arg(long)]
        a_set: String,
        #[arg(long, allow_hyphen_values = true)]
        offset: i64,
    },
}

#[derive(Subcommand)]
enum L33Command {
    /// Generators of H^3, H^4, H^5 in a degree mod 248.
    Scan {
        #[arg(long, allow_hyphen_values = true)]
        degree: i64,
    },
}

#[derive(Subcommand)]
enum IdealCommand {
    /// Invariance of (p^{e0}, v_1^{s_1 p^{e_1}}, ...).
    Check {
        #[arg(long)]
        p: u64,
        /// "<e0>;<s1>*p^<e1>,<s2>*p^<e2>,..."
        #[arg(long)]
        spec: String,
        /// Exponent e_n, making the last condition strict.
        #[arg(long)]
        top_exponent: Option<u32>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn emit(json_mode: bool, value: &Value, text: impl FnOnce() -> String) {
    if json_mode {
        // serde_json's default map is ordered, so keys come out sorted.
        println!(
            "{}",
            serde_json::to_string_pretty(value).expect("serializable")
        );
    } else {
        print!("{}", text());
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let json_mode = cli.json;
    match cli.command {
        Command::Basis { h, s, t } => {
            let cx = RavenelComplex::new(h.p, h.n)?;
            let params = cx.params();
            let basis = cx.basis_in_bidegree(s, t);
            let names: Vec<String> = basis
                .iter()
                .map(|&m| params.display_monomial(m).to_string())
                .collect();
            let value = json!({
                "p": h.p, "n": h.n, "s": s, "t": t,
                "t_normalized": params.normalize_t(t),
                "dimension": names.len(),
                "basis": names,
            });
            emit(json_mode, &value, || {
                let mut out = format!(
                    "C({})^{{{s},{t}}} (t = {} mod {}), dimension {}\n",
                    h.n,
                    params.normalize_t(t),
                    params.q_n(),
                    names.len()
                );
                for n in &names {
                    out.push_str(&format!("  {n}\n"));
                }
                out
            });
        }
        Command::Diff { h, element } => {
            let cx = RavenelComplex::new(h.p, h.n)?;
            let params = cx.params();
            let x = params.parse_element(&element)?;
            let dx = cx.diff(&x)?;
            let shown = params.display_element(&dx).to_string();
            let value = json!({
                "p": h.p, "n": h.n,
                "element": params.display_element(&x).to_string(),
                "differential": shown,
            });
            emit(json_mode, &value, || format!("{shown}\n"));
        }
        Command::Cohomology { h, s, t, truncate } => {
            let cx = RavenelComplex::new(h.p, h.n)?;
            let engine = CohomologyEngine::new(&cx);
            let profile = match truncate {
                Some(e) => CoefficientProfile::truncated(e)?,
                None => CoefficientProfile::MoravaK,
            };
            let r = engine.slice_cohomology(&profile, s, t)?;
            let t_norm = cx.params().normalize_t(t);
            let value = json!({
                "p": h.p, "n": h.n, "s": s, "t": t,
                "t_normalized": t_norm,
                "profile": profile,
                "slice_dim": r.slice_dim,
                "incoming_rank": r.incoming_rank,
                "outgoing_rank": r.outgoing_rank,
                "dimension": r.cohomology_dim,
            });
            emit(json_mode, &value, || {
                format!(
                    "H^{{{s},{t}}} (t = {t_norm}): dim {}, slice {}, incoming rank {}, outgoing rank {}\n",
                    r.cohomology_dim, r.slice_dim, r.incoming_rank, r.outgoing_rank
                )
            });
        }
        Command::Check { id, all, output } => {
            let reports: Vec<CheckReport> = match (id, all) {
                (Some(id), false) => match run_check(&id) {
                    Ok(r) => vec![r],
                    Err(e) => bail!("{e}; known checks: {}", check_ids().join(", ")),
                },
                (None, true) => run_all(),
                _ => bail!("give a check id or --all"),
            };
            let value = serde_json::to_value(&reports)?;
            if let Some(path) = output {
                fs::write(&path, serde_json::to_string_pretty(&value)?)
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            emit(json_mode, &value, || {
                let mut out = String::new();
                for r in &reports {
                    out.push_str(&format!("{:<20} {}\n", r.id, r.status.as_str()));
                }
                out
            });
            if !reports.iter().all(CheckReport::passed) {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Toda { command } => toda(json_mode, command)?,
        Command::L33 {
            command: L33Command::Scan { degree },
        } => {
            let hits = l33_scan(degree);
            let value =
                json!({ "degree": degree, "normalized": degree.rem_euclid(248), "hits": hits });
            emit(json_mode, &value, || {
                if hits.is_empty() {
                    return format!("no generator in degree {}\n", degree.rem_euclid(248));
                }
                hits.iter()
                    .map(|h| {
                        format!(
                            "H^{} {:<9} {}\n",
                            h.cohomological_degree,
                            h.stratum.label(),
                            h.name
                        )
                    })
                    .collect()
            });
        }
        Command::Ideal {
            command:
                IdealCommand::Check {
                    p,
                    spec,
                    top_exponent,
                },
        } => {
            let mut ideal = IdealSpec::parse(p, &spec)?;
            if let Some(e) = top_exponent {
                ideal = ideal.with_top_exponent(e);
            }
            let inv = ideal.is_invariant();
            let value = json!({ "ideal": ideal.to_string(), "invariant": inv, "spec": ideal });
            emit(json_mode, &value, || {
                format!(
                    "{ideal}: {}\n",
                    if inv { "invariant" } else { "not invariant" }
                )
            });
        }
        Command::Minexp { h } => {
            let closed = minimal_vq_exponent(h.p, h.n)?;
            let scan = minimal_vq_exponent_by_scan(h.p, h.n)?;
            let value = json!({ "p": h.p, "n": h.n, "closed_form": closed, "brute_force": scan });
            emit(json_mode, &value, || format!("{closed}\n"));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn table(p: u64, bound: Option<u64>) -> Result<TodaTable> {
    Ok(match bound {
        Some(b) => TodaTable::new(p, b)?,
        None => TodaTable::full(p)?,
    })
}

/// `1,2,3` or `Z3` (cells of V(3)), optionally `Z3<=686` / `Z3>686`.
fn parse_set(p: u64, text: &str) -> Result<Vec<u64>> {
    let text = text.trim();
    if let Some(rest) = text.strip_prefix('Z') {
        let (k, filter) = match rest.find(['<', '>']) {
            Some(i) => (&rest[..i], Some(&rest[i..])),
            None => (rest, None),
        };
        let cells = SkeletonCells::new(p, k.parse().context("skeleton index")?)?;
        return Ok(match filter {
            None => cells.to_vec(),
            Some(f) => match f.strip_prefix("<=") {
                Some(m) => cells.at_most(m.parse().context("skeleton filter")?),
                None => cells.above(
                    f.trim_start_matches('>')
                        .parse()
                        .context("skeleton filter")?,
                ),
            },
        });
    }
    text.split(',')
        .map(|x| {
            x.trim()
                .parse::<u64>()
                .with_context(|| format!("bad set element `{x}`"))
        })
        .collect()
}

fn toda(json_mode: bool, command: TodaCommand) -> Result<()> {
    match command {
        TodaCommand::Enumerate { p, bound } => {
            let t = table(p, bound)?;
            let value = json!({ "p": p, "bound": t.bound(), "entries": t.entries() });
            emit(json_mode, &value, || {
                t.entries()
                    .iter()
                    .map(|e| format!("{:>6}({:>3})  s={:<3} {}\n", e.w, e.u, e.s, e.name))
                    .collect()
            });
        }
        TodaCommand::Search { p, bound, degree } => {
            let t = table(p, bound)?;
            let hits = t.search(degree)?;
            let names: Vec<String> = hits.iter().map(|h| h.to_string()).collect();
            let value = json!({ "p": p, "bound": t.bound(), "degree": degree, "hits": names });
            emit(json_mode, &value, || {
                if names.is_empty() {
                    format!("no class in degree {degree}\n")
                } else {
                    names.iter().map(|n| format!("{n}\n")).collect()
                }
            });
        }
        TodaCommand::Scan {
            p,
            bound,
            s_set,
            a_set,
            offset,
        } => {
            let t = table(p, bound)?;
            let s = parse_set(p, &s_set)?;
            let a = parse_set(p, &a_set)?;
            let scan = t.vanishing_scan(&s, &a, offset)?;
            let rows: Vec<Value> = scan
                .iter()
                .map(|(d, hits)| {
                    json!({
                        "degree": d,
                        "residue": d.rem_euclid(t.modulus() as i64),
                        "hits": hits.iter().map(|h| h.to_string()).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let value = json!({ "p": p, "bound": t.bound(), "offset": offset, "degrees": rows });
            emit(json_mode, &value, || {
                scan.iter()
                    .map(|(d, hits)| {
                        let names: Vec<String> = hits.iter().map(|h| h.to_string()).collect();
                        format!(
                            "{d}({}): {}\n",
                            d.rem_euclid(t.modulus() as i64),
                            if names.is_empty() {
                                "-".into()
                            } else {
                                names.join(", ")
                            }
                        )
                    })
                    .collect()
            });
        }
    }
    Ok(())
}
