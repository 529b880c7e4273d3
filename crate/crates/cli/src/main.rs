//! Command-line surface for the sieve: root-system info, involutions,
//! families, strings, spherical candidates, table assembly, verification.

use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use spinsieve_cli::oracle::{load_oracle, parse_appendix};
use spinsieve_cli::tables::{assemble_table, TableId};
use spinsieve_cli::verify::verify_spin_lkt_claims;
use spinsieve_core::families::spherical_candidates;
use spinsieve_core::rat;
use spinsieve_core::root::{RootSystem, Weight};
use spinsieve_core::sieve::{strings_for, FamilyContext};
use spinsieve_core::weyl::{attach_appendix_indices, involutions, Involution};

#[derive(Parser)]
#[command(name = "spinsieve", version, about = "Exact Dirac-inequality sieve for complex simple groups")]
struct Cli {
    /// Worker threads for table assembly (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Directory holding oracle.txt / appendix_f4.txt overrides
    /// (default: embedded copies; also honors SPINSIEVE_DATA).
    #[arg(long, global = true)]
    data_dir: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Md,
    Csv,
    Records,
}

#[derive(Args)]
struct FamilyAddress {
    /// Involution key: s acting on rho, comma-separated integers.
    #[arg(long, value_name = "INTS", allow_hyphen_values = true)]
    s_rho: Option<String>,
    /// F4 appendix index (1..=140).
    #[arg(long)]
    index: Option<u32>,
}

#[derive(Subcommand)]
enum Command {
    /// Print rank, Cartan matrix, Gram matrix, rho, and basic constants.
    Rootinfo {
        #[arg(long)]
        group: String,
    },
    /// List involutions with s(rho) and the fixed fundamental-weight set.
    Involutions {
        #[arg(long)]
        group: String,
        /// Print only the count.
        #[arg(long)]
        count: bool,
        /// Restrict to involutions with nonempty fixed set.
        #[arg(long)]
        nonempty_fixed: bool,
    },
    /// Inspect one s-family; `--sieve` enumerates scattered survivors.
    Family {
        #[arg(long)]
        group: String,
        #[command(flatten)]
        address: FamilyAddress,
        #[arg(long)]
        sieve: bool,
    },
    /// List lifted strings for an involution (or all of them).
    Strings {
        #[arg(long)]
        group: String,
        #[command(flatten)]
        address: FamilyAddress,
    },
    /// Enumerate spherical candidates (2*lambda vectors).
    Spherical {
        #[arg(long)]
        group: String,
        #[arg(long)]
        count: bool,
    },
    /// Assemble a published table from the sieve plus the verdict data.
    Tables {
        #[arg(long, value_name = "g2|f4-strings|f4-scattered|appendix")]
        which: String,
        #[arg(long, value_enum, default_value = "md")]
        format: Format,
    },
    /// Re-derive every table and check all spin-LKT claims; exit 1 on diff.
    Verify,
}

fn parse_group(label: &str) -> Result<RootSystem, String> {
    RootSystem::parse(label).map_err(|e| format!("unknown group {label:?}: {e:?}"))
}

fn data_files(dir: &Option<String>) -> Result<(String, String), String> {
    let dir = dir
        .clone()
        .or_else(|| std::env::var("SPINSIEVE_DATA").ok());
    match dir {
        None => Ok((
            spinsieve_cli::ORACLE_DATA.to_string(),
            spinsieve_cli::APPENDIX_F4.to_string(),
        )),
        Some(d) => {
            let oracle = std::fs::read_to_string(format!("{d}/oracle.txt"))
                .map_err(|e| format!("missing data file {d}/oracle.txt: {e}"))?;
            let appendix = std::fs::read_to_string(format!("{d}/appendix_f4.txt"))
                .map_err(|e| format!("missing data file {d}/appendix_f4.txt: {e}"))?;
            Ok((oracle, appendix))
        }
    }
}

fn resolve_involution<'a>(
    rs: &RootSystem,
    invs: &'a [Involution],
    address: &FamilyAddress,
) -> Result<&'a Involution, String> {
    match (&address.s_rho, address.index) {
        (Some(text), None) => {
            let coords: Result<Vec<i64>, _> = text.split(',').map(|t| t.trim().parse()).collect();
            let coords = coords.map_err(|_| format!("bad --s-rho {text:?}"))?;
            if coords.len() != rs.rank {
                return Err(format!("--s-rho needs {} coordinates", rs.rank));
            }
            let w = Weight(coords.into_iter().map(|n| rat(n, 1)).collect());
            spinsieve_core::weyl::involution_by_s_rho(invs, &w)
                .ok_or_else(|| format!("no involution with s_rho {text}"))
        }
        (None, Some(idx)) => invs
            .iter()
            .find(|i| i.appendix_index == Some(idx))
            .ok_or_else(|| format!("no involution with index {idx}")),
        _ => Err("give exactly one of --s-rho or --index".into()),
    }
}

fn involutions_with_indices(rs: &RootSystem, appendix_text: &str) -> Result<Vec<Involution>, String> {
    let mut invs = involutions(rs).map_err(|e| format!("{e:?}"))?;
    if rs.label == "F4" {
        let appendix = parse_appendix(appendix_text).map_err(|e| e.to_string())?;
        attach_appendix_indices(&appendix, &mut invs).map_err(|e| format!("{e:?}"))?;
    }
    Ok(invs)
}

fn fmt_fixed(inv: &Involution) -> String {
    format!(
        "{{{}}}",
        inv.fixed_set.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(",")
    )
}

fn run(cli: &Cli) -> Result<bool, String> {
    if let Some(n) = cli.threads {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    let (oracle_text, appendix_text) = data_files(&cli.data_dir)?;
    match &cli.command {
        Command::Rootinfo { group } => {
            let rs = parse_group(group)?;
            println!("label: {}", rs.label);
            println!("rank: {}", rs.rank);
            println!("cartan: {:?}", rs.cartan);
            println!("rho: {:?}", rs.rho);
            println!("beta: {:?}", rs.beta);
            println!("positive roots: {}", rs.positive_roots.len());
            println!("|2 rho|^2: {}", rs.norm_sq(&rs.rho.double()));
            println!("w0 = -1: {}", rs.w0.act(&rs.rho) == -&rs.rho);
        }
        Command::Involutions { group, count, nonempty_fixed } => {
            let rs = parse_group(group)?;
            let invs = involutions_with_indices(&rs, &appendix_text)?;
            let picked: Vec<&Involution> = invs
                .iter()
                .filter(|i| !nonempty_fixed || !i.fixed_set.is_empty())
                .collect();
            if *count {
                println!("{}", picked.len());
            } else {
                for inv in picked {
                    let idx = inv
                        .appendix_index
                        .map(|i| format!("{i:>3} "))
                        .unwrap_or_default();
                    println!("{idx}s_rho={:?} fixed={}", inv.s_rho, fmt_fixed(inv));
                }
            }
        }
        Command::Family { group, address, sieve } => {
            let rs = parse_group(group)?;
            let invs = involutions_with_indices(&rs, &appendix_text)?;
            let inv = resolve_involution(&rs, &invs, address)?;
            println!("s_rho: {:?}", inv.s_rho);
            println!("fixed set: {}", fmt_fixed(inv));
            if inv.fixed_set.is_empty() {
                let fam = FamilyContext::new(&rs, inv.clone());
                println!("quad form: {:?}", fam.quad_form());
                if *sieve {
                    for cand in fam.enumerate_scattered().map_err(|e| format!("{e:?}"))? {
                        println!(
                            "survivor 2lambda={:?} lambda={:?} mu={:?} delta1={} delta2={}",
                            cand.lambda.double(),
                            cand.lambda,
                            cand.mu,
                            cand.delta1,
                            cand.delta2
                        );
                    }
                }
            } else if *sieve {
                return Err("--sieve needs an involution with empty fixed set; try `strings`".into());
            }
        }
        Command::Strings { group, address } => {
            let rs = parse_group(group)?;
            let invs = involutions_with_indices(&rs, &appendix_text)?;
            let picked: Vec<&Involution> = if address.s_rho.is_none() && address.index.is_none() {
                invs.iter().filter(|i| !i.fixed_set.is_empty()).collect()
            } else {
                vec![resolve_involution(&rs, &invs, address)?]
            };
            for inv in picked {
                for family in strings_for(&rs, inv).map_err(|e| format!("{e:?}"))? {
                    let sample: BTreeMap<usize, spinsieve_core::Rat> =
                        family.free_indices.iter().map(|&i| (i, rat(1, 2))).collect();
                    println!(
                        "s_rho={:?} lambda={} t_param={:?}+2*free a_param={:?} (at 1/2: {:?})",
                        family.s_rho,
                        {
                            let parts: Vec<String> = family
                                .base_lambda
                                .iter()
                                .enumerate()
                                .map(|(i, v)| match v {
                                    Some(x) => format!("{x}"),
                                    None => spinsieve_cli::templates::LETTERS[i].to_string(),
                                })
                                .collect();
                            format!("[{}]", parts.join(","))
                        },
                        family.t_param.constant,
                        family.a_param,
                        family.lambda_at(&sample)
                    );
                }
            }
        }
        Command::Spherical { group, count } => {
            let rs = parse_group(group)?;
            let cands = spherical_candidates(&rs).map_err(|e| format!("{e:?}"))?;
            if *count {
                println!("{}", cands.len());
            } else {
                for c in cands {
                    println!(
                        "two_lambda={:?} norm_sq={} in_root_lattice={}",
                        c.two_lambda, c.norm_sq, c.in_root_lattice
                    );
                }
            }
        }
        Command::Tables { which, format } => {
            let id = TableId::parse(which).ok_or_else(|| format!("unknown table {which:?}"))?;
            let oracle = load_oracle(&oracle_text).map_err(|e| e.to_string())?;
            let appendix = parse_appendix(&appendix_text).map_err(|e| e.to_string())?;
            let table = assemble_table(id, &oracle, &appendix).map_err(|e| e.to_string())?;
            if id != TableId::Appendix {
                if let Err(e) = table.check_coverage() {
                    eprintln!("error: {e}");
                    return Ok(false);
                }
            }
            match format {
                Format::Md => print!("{}", table.to_markdown()),
                Format::Csv => print!("{}", table.to_csv()),
                Format::Records => print!("{}", table.to_records()),
            }
        }
        Command::Verify => {
            let oracle = load_oracle(&oracle_text).map_err(|e| e.to_string())?;
            let appendix = parse_appendix(&appendix_text).map_err(|e| e.to_string())?;
            let mut ok = true;
            for (id, members) in [
                (TableId::G2, 6usize),
                (TableId::F4Strings, 30),
                (TableId::F4Scattered, 10),
            ] {
                let table = assemble_table(id, &oracle, &appendix).map_err(|e| e.to_string())?;
                let covered = table.check_coverage().is_ok();
                let count_ok = table.member_rows().count() == members;
                let report = verify_spin_lkt_claims(&table, 3);
                let claims_ok = report.all_pass();
                let pass = covered && count_ok && claims_ok;
                ok &= pass;
                println!(
                    "{} {:?}: coverage={covered} rows={} (want {members}) spin-claims={claims_ok}",
                    if pass { "ok  " } else { "FAIL" },
                    id,
                    table.member_rows().count(),
                );
                if !claims_ok {
                    print!("{}", report.render());
                }
            }
            return Ok(ok);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
