//! Batch command-line interface over JSON files for composing, decomposing
//! and verifying bisets and group data.
//!
//! Every positional argument accepts either a file path or inline JSON
//! (anything starting with `{` or `[`). Output is canonical JSON with
//! sorted keys, so identical inputs produce byte-identical output.
//!
//! Exit codes: 0 on success, 1 on validation errors (malformed JSON,
//! invalid groups or bisets), 2 on usage errors.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use bisetcat::json::{ActionPairJson, ClassTableJson, ProductSubgroupJson};
use bisetcat::{
    elementary_biset, goursat_bouc, mackey_rhs, naive_compose, ActionPair, ElementaryBiset,
    ExplicitBiset, PermGroup, Permutation, Subgroup, SubgroupClassTable,
};

#[derive(Parser)]
#[command(name = "bisetcat", version, about = "Bisets of finite groups: compose, decompose, verify")]
struct Cli {
    /// Pretty-print the JSON output
    #[arg(long, global = true)]
    pretty: bool,

    /// Write output to this file instead of standard output
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Conjugacy classes of subgroups with normalizers and table of marks
    Subgroups {
        /// Group as a file or inline JSON {"degree": n, "generators": [...]}
        group: String,
    },
    /// Table of Burnside marks of a group
    Marks {
        group: String,
    },
    /// Kleisli composite of two bisets: X is G -> H, Y is H -> K
    Compose {
        x: String,
        y: String,
    },
    /// Reference composite computed on explicit sets
    OracleCompose {
        x: String,
        y: String,
    },
    /// Biset isomorphism test between two bisets with equal groups
    Iso {
        x: String,
        y: String,
    },
    /// Goursat decomposition of a subgroup of a direct product
    Goursat {
        /// {"left_group": ..., "right_group": ..., "generators": [...]}
        d: String,
    },
    /// Mackey check for a group and two subgroups
    Mackey {
        group: String,
        /// Subgroup: class index into the canonical table (stable
        /// interface) or a JSON array of generator image lists
        u: String,
        v: String,
    },
}

enum CliError {
    Invalid(String),
}

impl CliError {
    fn invalid(context: &str, detail: impl std::fmt::Display) -> Self {
        CliError::Invalid(format!("{context}: {detail}"))
    }
}

type CliResult<T> = Result<T, CliError>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap prints help to stdout and usage errors to stderr
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };

    match run(&cli.command) {
        Ok(value) => {
            let rendered = if cli.pretty {
                let mut s = serde_json::to_string_pretty(&value).expect("value renders");
                s.push('\n');
                s
            } else {
                let mut s = serde_json::to_string(&value).expect("value renders");
                s.push('\n');
                s
            };
            match &cli.output {
                None => {
                    print!("{rendered}");
                    ExitCode::SUCCESS
                }
                Some(path) => match fs::write(path, rendered) {
                    Ok(()) => ExitCode::SUCCESS,
                    Err(e) => {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        ExitCode::from(1)
                    }
                },
            }
        }
        Err(CliError::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(command: &Command) -> CliResult<Value> {
    match command {
        Command::Subgroups { group } => {
            let g = load_group(group)?;
            let table = SubgroupClassTable::new(&g)
                .map_err(|e| CliError::invalid("invalid group", e))?;
            to_value(&ClassTableJson::from(&table))
        }
        Command::Marks { group } => {
            let g = load_group(group)?;
            let table = SubgroupClassTable::new(&g)
                .map_err(|e| CliError::invalid("invalid group", e))?;
            Ok(json!({ "marks": table.marks() }))
        }
        Command::Compose { x, y } => {
            let (x, y) = load_composable_pair(x, y)?;
            let z = x
                .kleisli_compose(&y)
                .map_err(|e| CliError::invalid("composition failed", e))?;
            to_value(&ActionPairJson::from(&z))
        }
        Command::OracleCompose { x, y } => {
            let (x, y) = load_composable_pair(x, y)?;
            let ex = ExplicitBiset::from_action_pair(&x)
                .map_err(|e| CliError::invalid("invalid biset", e))?;
            let ey = ExplicitBiset::from_action_pair(&y)
                .map_err(|e| CliError::invalid("invalid biset", e))?;
            let oracle = naive_compose(&ey, &ex)
                .map_err(|e| CliError::invalid("oracle composition failed", e))?;
            let z = oracle
                .to_action_pair()
                .map_err(|e| CliError::invalid("oracle conversion failed", e))?;
            to_value(&ActionPairJson::from(&z))
        }
        Command::Iso { x, y } => {
            let x = load_pair(x)?;
            let y = load_pair(y)?;
            let iso = x
                .is_isomorphic_to(&y)
                .map_err(|e| CliError::invalid("isomorphism test failed", e))?;
            Ok(json!({ "isomorphic": iso }))
        }
        Command::Goursat { d } => {
            let wire: ProductSubgroupJson = parse_arg(d, "subgroup of a direct product")?;
            let (prod, subgroup) = wire
                .into_parts()
                .map_err(|e| CliError::invalid("invalid subgroup data", e))?;
            let dec = goursat_bouc(&prod, &subgroup)
                .map_err(|e| CliError::invalid("decomposition failed", e))?;
            let reconstructed = dec
                .data()
                .reconstruct(&prod)
                .map_err(|e| CliError::invalid("reconstruction failed", e))?;
            let composite = dec
                .composite()
                .map_err(|e| CliError::invalid("composite failed", e))?;
            let back = composite
                .to_subgroup_in(&prod)
                .map_err(|e| CliError::invalid("stabilizer extraction failed", e))?;
            let conjugate = bisetcat::conjugator(prod.group(), &back, &subgroup)
                .map_err(|e| CliError::invalid("conjugacy test failed", e))?
                .is_some();
            let verified = reconstructed == subgroup && composite.is_transitive() && conjugate;
            let factors: Vec<Value> = dec
                .factors()
                .iter()
                .map(|f| to_value(&ActionPairJson::from(f)))
                .collect::<CliResult<_>>()?;
            Ok(json!({
                "p1": dec.data().p1().generators(),
                "k1": dec.data().k1().generators(),
                "p2": dec.data().p2().generators(),
                "k2": dec.data().k2().generators(),
                "iso_images": dec.data().iso().images(),
                "factors": factors,
                "verified": verified,
            }))
        }
        Command::Mackey { group, u, v } => {
            let g = load_group(group)?;
            let table = SubgroupClassTable::new(&g)
                .map_err(|e| CliError::invalid("invalid group", e))?;
            let u = load_subgroup(&g, &table, u)?;
            let v = load_subgroup(&g, &table, v)?;
            let ind = elementary_biset(&ElementaryBiset::Ind(u.clone()))
                .map_err(|e| CliError::invalid("induction failed", e))?;
            let res = elementary_biset(&ElementaryBiset::Res(v.clone()))
                .map_err(|e| CliError::invalid("restriction failed", e))?;
            let lhs = ind
                .kleisli_compose(&res)
                .map_err(|e| CliError::invalid("composition failed", e))?;
            let rhs = mackey_rhs(&g, &u, &v)
                .map_err(|e| CliError::invalid("decomposition failed", e))?;
            let mut rhs_sum = rhs[0].clone();
            for s in &rhs[1..] {
                rhs_sum = rhs_sum
                    .coproduct(s)
                    .map_err(|e| CliError::invalid("coproduct failed", e))?;
            }
            let equal = lhs
                .is_isomorphic_to(&rhs_sum)
                .map_err(|e| CliError::invalid("isomorphism test failed", e))?;
            Ok(json!({ "equal": equal, "summands": rhs.len() }))
        }
    }
}

/// Reads an argument that is either inline JSON or a path.
fn read_arg(arg: &str) -> CliResult<String> {
    let trimmed = arg.trim_start();
    if trimmed.starts_with('{') || trimmed.starts_with('[') {
        return Ok(arg.to_string());
    }
    fs::read_to_string(arg).map_err(|e| CliError::invalid(&format!("cannot read {arg}"), e))
}

fn parse_arg<T: serde::de::DeserializeOwned>(arg: &str, what: &str) -> CliResult<T> {
    let text = read_arg(arg)?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::invalid(&format!("malformed JSON for {what}"), e))
}

fn load_group(arg: &str) -> CliResult<PermGroup> {
    parse_arg(arg, "group")
}

fn load_pair(arg: &str) -> CliResult<ActionPair> {
    let wire: ActionPairJson = parse_arg(arg, "biset")?;
    wire.into_pair()
        .map_err(|e| CliError::invalid("invalid biset", e))
}

fn load_composable_pair(x: &str, y: &str) -> CliResult<(ActionPair, ActionPair)> {
    let x = load_pair(x)?;
    let y = load_pair(y)?;
    if x.target_group() != y.source_group() {
        return Err(CliError::Invalid(
            "middle groups do not match (including generator designation)".into(),
        ));
    }
    Ok((x, y))
}

/// Subgroup argument: a class index into the canonical table, or a JSON
/// array of generator image lists.
fn load_subgroup(g: &PermGroup, table: &SubgroupClassTable, arg: &str) -> CliResult<Subgroup> {
    if let Ok(index) = arg.parse::<usize>() {
        if index >= table.len() {
            return Err(CliError::Invalid(format!(
                "class index {index} out of range: the table has {} classes",
                table.len()
            )));
        }
        return Ok(table.rep(index).clone());
    }
    let gens: Vec<Permutation> = parse_arg(arg, "subgroup generators")?;
    Subgroup::new(g, gens).map_err(|e| CliError::invalid("invalid subgroup", e))
}

/// Canonical JSON: routing through `Value` sorts all object keys.
fn to_value<T: serde::Serialize>(t: &T) -> CliResult<Value> {
    serde_json::to_value(t).map_err(|e| CliError::invalid("serialization failed", e))
}
