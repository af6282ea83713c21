//! The `hookforest` command line.
//!
//! Every subcommand prints exactly one compact JSON document on standard
//! output. Numbers are written as strings. Exit status is 0 on success, 1 when
//! `verify` falsifies an identity, and 2 on usage errors or malformed input.

use std::collections::BTreeMap;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::algebra::{closed_hookp, closed_hookp2, Polynomial};
use crate::bijection::{decode, encode, psi, CodeSequence, PsiCase};
use crate::colored::{
    for_each_colored, prop_cf_count, thm_cfs_count, ColoredFilter, ColoredLabelledForest, ColoredNode, PartitionS,
};
use crate::degree::DegreeSequence;
use crate::enumerate::{count_forests, enumerate_forests};
use crate::error::Error;
use crate::forest::PlaneForest;
use crate::hook::{brute_hookp, brute_hookp2};
use crate::sweep::{self, Check, Counterexample, VerifySweepConfig};

/// Environment variable capping the number of worker threads.
pub const THREADS_ENV: &str = "HOOKFOREST_THREADS";

#[derive(Debug, Parser)]
#[command(name = "hookforest", version, about = "Plane forests, hook length polynomials and colored forest bijections")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Form {
    #[value(name = "1")]
    First,
    #[value(name = "2")]
    Second,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Brute,
    Closed,
    Both,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List every plane forest of a type.
    Enumerate {
        #[arg(long = "type", value_name = "R0,R1,...")]
        r: DegreeSequence,
    },
    /// Count plane forests of a type by formula.
    Count {
        #[arg(long = "type", value_name = "R0,R1,...")]
        r: DegreeSequence,
    },
    /// Hook length polynomial of a type, by enumeration and/or closed form.
    Hookpoly {
        #[arg(long = "type", value_name = "R0,R1,...")]
        r: DegreeSequence,
        #[arg(long, value_enum, default_value = "1")]
        form: Form,
        #[arg(long, value_enum, default_value = "both")]
        mode: Mode,
    },
    /// Count proper k-colored labelled forests by enumeration.
    ColoredCount {
        #[arg(long = "type", value_name = "R0,R1,...")]
        r: DegreeSequence,
        #[arg(short)]
        k: u32,
        /// Partition as inline JSON or a file path.
        #[arg(long)]
        partition: Option<String>,
        #[arg(long)]
        first_tree_min: bool,
    },
    /// Apply ψ between two adjacent partitions.
    Psi {
        #[arg(long)]
        input: String,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(short)]
        k: u32,
    },
    /// Code sequence of a colored forest with label 1 in its first tree.
    Encode {
        #[arg(long)]
        input: String,
        #[arg(long)]
        partition: String,
        #[arg(short)]
        k: u32,
    },
    /// Colored forest with the given code sequence.
    Decode {
        #[arg(long)]
        input: String,
        #[arg(long)]
        partition: String,
        /// Number of trees.
        #[arg(long)]
        trees: u64,
    },
    /// Run identity sweeps.
    Verify {
        #[arg(long, default_value_t = 7)]
        max_total_vertices: u64,
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
        #[arg(long, value_delimiter = ',', default_value = "0,1,2")]
        k_values: Vec<u32>,
        #[arg(long, value_delimiter = ',')]
        checks: Vec<Check>,
        /// Largest n for the binary-tree identities.
        #[arg(long, default_value_t = 5)]
        max_n: u64,
        /// Largest n for the code bijection sweep.
        #[arg(long, default_value_t = 4)]
        max_code_internal: u64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerateOutput {
    pub count: String,
    pub forests: Vec<PlaneForest>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountOutput {
    pub count: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HookpolyOutput {
    pub r: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub brute: Option<Polynomial>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub closed: Option<Polynomial>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub equal: Option<bool>,
    pub count: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoredCountOutput {
    pub count: String,
    pub formula: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PsiOutput {
    pub case: PsiCase,
    pub forest: Vec<ColoredNode>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecodeOutput {
    pub forest: Vec<ColoredNode>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: Check,
    pub passed: bool,
    pub instances: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub values: Vec<String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub psi_cases: BTreeMap<PsiCase, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyOutput {
    pub passed: bool,
    pub checks: Vec<CheckReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorOutput {
    pub error: String,
}

/// A finished command: exit status and the JSON document to print.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub json: String,
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("output types serialize")
}

fn usage(err: impl std::fmt::Display) -> Outcome {
    Outcome { code: 2, json: json(&ErrorOutput { error: err.to_string() }) }
}

/// Reads `arg` as inline JSON when it starts with `{` or `[`, else as a path.
fn load_text(arg: &str) -> Result<String, Error> {
    let trimmed = arg.trim_start();
    if trimmed.starts_with('{') || trimmed.starts_with('[') {
        Ok(arg.to_string())
    } else {
        std::fs::read_to_string(arg).map_err(|e| Error::Parse(format!("{arg}: {e}")))
    }
}

fn load_json<T: DeserializeOwned>(arg: &str, what: &str) -> Result<T, Error> {
    let text = load_text(arg)?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{what}: {e}")))
}

fn load_forest(arg: &str, k: u32) -> Result<ColoredLabelledForest, Error> {
    ColoredLabelledForest::from_json(&load_text(arg)?, k)
}

fn hookpoly(r: &DegreeSequence, form: Form, mode: Mode) -> HookpolyOutput {
    let brute = matches!(mode, Mode::Brute | Mode::Both).then(|| match form {
        Form::First => brute_hookp(r),
        Form::Second => brute_hookp2(r),
    });
    let closed = matches!(mode, Mode::Closed | Mode::Both).then(|| match form {
        Form::First => closed_hookp(r),
        Form::Second => closed_hookp2(r),
    });
    let equal = match (&brute, &closed) {
        (Some(b), Some(c)) => Some(b == c),
        _ => None,
    };
    HookpolyOutput {
        r: r.counts().iter().map(u64::to_string).collect(),
        brute,
        closed,
        equal,
        count: count_forests(r).to_string(),
    }
}

fn colored_count(
    r: &DegreeSequence,
    k: u32,
    partition: Option<PartitionS>,
    first_tree_min: bool,
) -> Result<ColoredCountOutput, Error> {
    let mut formula = match &partition {
        Some(_) => thm_cfs_count(r, k),
        None => prop_cf_count(r, k),
    };
    if first_tree_min {
        formula /= r.trees();
    }
    let filter = ColoredFilter { partition, first_tree_min };
    let mut count = 0u64;
    for_each_colored(r, k, &filter, |_| count += 1)?;
    Ok(ColoredCountOutput { count: count.to_string(), formula: formula.to_string() })
}

fn verify(config: VerifySweepConfig) -> Outcome {
    if let Err(e) = config.validate() {
        return usage(e);
    }
    let checks: Vec<CheckReport> = sweep::run(&config)
        .into_iter()
        .map(|(check, outcome)| CheckReport {
            check,
            passed: outcome.passed(),
            instances: outcome.instances.to_string(),
            values: outcome.values,
            psi_cases: outcome.psi_cases.into_iter().map(|(c, n)| (c, n.to_string())).collect(),
            counterexample: outcome.counterexample,
        })
        .collect();
    let passed = checks.iter().all(|c| c.passed);
    Outcome { code: if passed { 0 } else { 1 }, json: json(&VerifyOutput { passed, checks }) }
}

fn execute(command: Command) -> Result<Outcome, Error> {
    let ok = |json: String| Outcome { code: 0, json };
    Ok(match command {
        Command::Enumerate { r } => {
            let forests = enumerate_forests(&r);
            ok(json(&EnumerateOutput { count: forests.len().to_string(), forests }))
        }
        Command::Count { r } => ok(json(&CountOutput { count: count_forests(&r).to_string() })),
        Command::Hookpoly { r, form, mode } => ok(json(&hookpoly(&r, form, mode))),
        Command::ColoredCount { r, k, partition, first_tree_min } => {
            let partition = partition.map(|p| load_json::<PartitionS>(&p, "partition")).transpose()?;
            ok(json(&colored_count(&r, k, partition, first_tree_min)?))
        }
        Command::Psi { input, from, to, k } => {
            let forest = load_forest(&input, k)?;
            let s1: PartitionS = load_json(&from, "source partition")?;
            let s2: PartitionS = load_json(&to, "target partition")?;
            let (image, case) = psi(&forest, &s1, &s2)?;
            ok(json(&PsiOutput { case, forest: image.to_nodes() }))
        }
        Command::Encode { input, partition, k } => {
            let forest = load_forest(&input, k)?;
            let s: PartitionS = load_json(&partition, "partition")?;
            ok(json(&encode(&forest, &s)?))
        }
        Command::Decode { input, partition, trees } => {
            let codes: CodeSequence = load_json(&input, "code sequence")?;
            let s: PartitionS = load_json(&partition, "partition")?;
            let forest = decode(&s, codes.k, trees, &codes)?;
            ok(json(&DecodeOutput { forest: forest.to_nodes() }))
        }
        Command::Verify { max_total_vertices, max_degree, k_values, checks, max_n, max_code_internal } => {
            let checks = if checks.is_empty() { Check::ALL.to_vec() } else { checks };
            verify(VerifySweepConfig { max_total_vertices, max_degree, k_values, checks, max_n, max_code_internal })
        }
    })
}

/// Caps the global worker pool from [`THREADS_ENV`], if set.
pub fn configure_threads() {
    if let Some(n) = std::env::var(THREADS_ENV).ok().and_then(|v| v.trim().parse::<usize>().ok()) {
        // a pool may already exist when called twice in one process
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(cli.command).unwrap_or_else(usage),
        Err(e) => match e.kind() {
            clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                print!("{e}");
                Outcome { code: 0, json: String::new() }
            }
            _ => {
                eprint!("{e}");
                usage(e.kind())
            }
        },
    }
}

/// Entry point for the binary: runs, prints, and returns the exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    configure_threads();
    let outcome = run_args(args);
    if !outcome.json.is_empty() {
        let mut stdout = std::io::stdout().lock();
        let _ = writeln!(stdout, "{}", outcome.json);
    }
    if outcome.code == 2 {
        eprintln!("error: {}", outcome.json);
    }
    outcome.code
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_ok(args: &[&str]) -> String {
        let out = run_args(std::iter::once("hookforest").chain(args.iter().copied()));
        assert_eq!(out.code, 0, "{}", out.json);
        out.json
    }

    #[test]
    fn count_and_hookpoly() {
        assert_eq!(run_ok(&["count", "--type", "4,0,3"]), r#"{"count":"5"}"#);
        let text = run_ok(&["hookpoly", "--type", "1,2", "--form", "2", "--mode", "both"]);
        let out: HookpolyOutput = serde_json::from_str(&text).unwrap();
        assert_eq!(out.equal, Some(true));
        assert_eq!(serde_json::to_string(&out.closed).unwrap(), r#"["1","1/2"]"#);
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_args(["hookforest", "count", "--type", "1,0,1"]).code, 2);
        assert_eq!(run_args(["hookforest", "frobnicate"]).code, 2);
        assert_eq!(run_args(["hookforest", "verify", "--checks", "nope"]).code, 2);
        assert_eq!(run_args(["hookforest", "verify", "--max-degree", "0"]).code, 2);
        let bad = run_args(["hookforest", "colored-count", "--type", "1,2", "-k", "1", "--partition", "{\"1\":[1]}"]);
        assert_eq!(bad.code, 2);
    }

    #[test]
    fn colored_count_matches_formula() {
        let text = run_ok(&["colored-count", "--type", "3,1,1", "-k", "0", "--partition", r#"{"1":[1],"2":[2]}"#]);
        assert_eq!(text, r#"{"count":"16","formula":"16"}"#);
        let text = run_ok(&["colored-count", "--type", "3,1,1", "-k", "1", "--first-tree-min"]);
        let out: ColoredCountOutput = serde_json::from_str(&text).unwrap();
        assert_eq!(out.count, out.formula);
    }
}
