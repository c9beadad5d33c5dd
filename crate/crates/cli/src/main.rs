//! `sasmall`: command-line front end for the module-theory engine.
//!
//! Subcommands construct rings, modules, and submodules from text, run
//! smallness predicates, export submodule lattices, reproduce the worked
//! examples, and drive the statement verifier over the default corpus.
//!
//! Exit codes: 0 success (falsified statements are findings, not failures),
//! 2 parse/usage error, 3 enumeration bound exceeded or infinite object,
//! 4 worked-example regression.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use sasmall_core::matrix::Elt;
use sasmall_core::module::{hasse_edges, FgModule, Submodule};
use sasmall_core::predicates::{self, Verdict, VerdictValue};
use sasmall_core::ring::Ring;
use sasmall_core::verify::{
    registry, reproduce_paper_examples, run_statement, Corpus, CorpusConfig, ExampleBlock, Report,
};
use sasmall_core::Error as CoreError;

const EXIT_PARSE: u8 = 2;
const EXIT_BOUND: u8 = 3;
const EXIT_EXAMPLE_REGRESSION: u8 = 4;

#[derive(Parser)]
#[command(
    name = "sasmall",
    version,
    about = "Exact smallness / sa-smallness computations for modules over Z and Z/n"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Cmd {
    /// Enumerate the submodule lattice of a finite module.
    Lattice {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        module: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Decide a smallness predicate (small | sa-small | t-sa-small).
    Check {
        /// One of: small, sa-small, t-sa-small.
        predicate: String,
        #[arg(long)]
        ring: String,
        #[arg(long)]
        module: String,
        #[arg(long)]
        sub: String,
        /// Reference submodule T (t-sa-small only).
        #[arg(long = "T")]
        t: Option<String>,
        /// Candidate refuting submodule X; required on backends where the
        /// full lattice cannot be enumerated.
        #[arg(long)]
        witness: Option<String>,
        /// Quantify over nonzero X only (the definition-literal reading).
        #[arg(long = "strict-nonzero-X")]
        strict_nonzero_x: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Reproduce every worked example bit-exactly.
    Examples {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run one registry statement, or all of them, over the corpus.
    Verify {
        /// A statement id, or "all".
        target: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Largest finite-module order admitted into the corpus.
        #[arg(long)]
        max_order: Option<Elt>,
        /// Seed reserved for sampled corpus slots (the default corpus is
        /// exhaustive, so this does not change results).
        #[arg(long)]
        seed: Option<u64>,
        /// Worker threads for statement fan-out (default: all cores).
        #[arg(long)]
        jobs: Option<usize>,
        /// Prefix the report with the wall-clock start time (off by default
        /// so repeated runs are byte-identical).
        #[arg(long)]
        timestamp: bool,
    },
    /// Describe the verification corpus.
    Corpus {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        max_order: Option<Elt>,
        #[arg(long)]
        seed: Option<u64>,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn parse(message: impl Into<String>) -> Failure {
        Failure {
            code: EXIT_PARSE,
            message: message.into(),
        }
    }
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Failure {
        let code = match e {
            CoreError::BoundExceeded
            | CoreError::InfiniteLattice
            | CoreError::InfiniteEnumeration
            | CoreError::InfiniteQuotient => EXIT_BOUND,
            _ => EXIT_PARSE,
        };
        let message = match e {
            CoreError::UnsupportedBackend => {
                format!("{e}; supply --witness to refute or confirm a single instance")
            }
            _ => e.to_string(),
        };
        Failure { code, message }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.cmd {
        Cmd::Lattice {
            ring,
            module,
            format,
        } => cmd_lattice(&ring, &module, format),
        Cmd::Check {
            predicate,
            ring,
            module,
            sub,
            t,
            witness,
            strict_nonzero_x,
            format,
        } => cmd_check(
            &predicate,
            &ring,
            &module,
            &sub,
            t.as_deref(),
            witness.as_deref(),
            strict_nonzero_x,
            format,
        ),
        Cmd::Examples { format } => cmd_examples(format),
        Cmd::Verify {
            target,
            format,
            max_order,
            seed,
            jobs,
            timestamp,
        } => cmd_verify(&target, format, max_order, seed, jobs, timestamp),
        Cmd::Corpus {
            format,
            max_order,
            seed,
        } => cmd_corpus(format, max_order, seed),
    }
}

// ---------------------------------------------------------------- parsing

fn squeeze(s: &str) -> String {
    s.chars().filter(|c| !c.is_whitespace()).collect()
}

fn parse_int(s: &str, what: &str) -> Result<Elt, Failure> {
    s.parse::<Elt>()
        .map_err(|_| Failure::parse(format!("invalid {what}: `{s}`")))
}

fn parse_ring(s: &str) -> Result<Ring, Failure> {
    let s = squeeze(s);
    if s == "Z" {
        return Ok(Ring::Z);
    }
    if let Some(rest) = s.strip_prefix("Z/") {
        let n = parse_int(rest, "ring modulus")?;
        if n < 2 {
            return Err(Failure::parse(format!("ring modulus must be >= 2, got {n}")));
        }
        return Ok(Ring::Zn(n));
    }
    Err(Failure::parse(format!(
        "unrecognized ring `{s}` (expected \"Z\" or \"Z/n\")"
    )))
}

/// A single direct-sum factor: `Z` or `kZ` (free), `Z/m` (torsion `m`).
fn parse_factor(f: &str, free_allowed: bool) -> Result<Elt, Failure> {
    if let Some(rest) = f.strip_prefix("Z/") {
        let m = parse_int(rest, "torsion factor")?;
        if m < 1 {
            return Err(Failure::parse(format!("torsion factor must be >= 1, got {m}")));
        }
        return Ok(m);
    }
    if free_allowed {
        if f == "Z" {
            return Ok(0);
        }
        if let Some(k) = f.strip_suffix('Z') {
            let k = parse_int(k, "free factor")?;
            if k != 0 {
                // kZ with k != 0 is free of rank one, whatever k is.
                return Ok(0);
            }
        }
    }
    Err(Failure::parse(format!("unrecognized module factor `{f}`")))
}

fn parse_module(ring: Ring, s: &str) -> Result<FgModule, Failure> {
    let s = squeeze(s);
    if s.is_empty() {
        return Err(Failure::parse("empty module description"));
    }
    if s == "Z" {
        if ring != Ring::Z {
            return Err(Failure::parse("the module Z is only available over the ring Z"));
        }
        return Ok(FgModule::z_line());
    }
    if let Some(rest) = s.strip_prefix("presented:") {
        if ring != Ring::Z {
            return Err(Failure::parse("presented modules are only available over the ring Z"));
        }
        let factors: Vec<Elt> = rest
            .split('x')
            .map(|f| parse_factor(f, true))
            .collect::<Result<_, _>>()?;
        let k = factors.len();
        let rows: Vec<Vec<Elt>> = factors
            .iter()
            .enumerate()
            .filter(|(_, &d)| d != 0)
            .map(|(i, &d)| {
                let mut row = vec![0; k];
                row[i] = d;
                row
            })
            .collect();
        return Ok(FgModule::new(ring, k, &rows));
    }
    if let Some(rest) = s.strip_prefix("presented") {
        if ring != Ring::Z {
            return Err(Failure::parse("presented modules are only available over the ring Z"));
        }
        let rows = parse_matrix(rest)?;
        let ngens = rows.first().map_or(0, Vec::len);
        if ngens == 0 || rows.iter().any(|r| r.len() != ngens) {
            return Err(Failure::parse("presentation matrix rows must be nonempty and equal-length"));
        }
        return Ok(FgModule::new(ring, ngens, &rows));
    }
    // Direct sum of torsion factors: "Z/2 x Z/8".
    let factors: Vec<Elt> = s
        .split('x')
        .map(|f| parse_factor(f, false))
        .collect::<Result<_, _>>()?;
    let k = factors.len();
    let rows: Vec<Vec<Elt>> = factors
        .iter()
        .enumerate()
        .map(|(i, &d)| {
            let mut row = vec![0; k];
            row[i] = d;
            row
        })
        .collect();
    Ok(FgModule::new(ring, k, &rows))
}

/// Parse `[[a,b],[c,d]]` into rows of integers.
fn parse_matrix(s: &str) -> Result<Vec<Vec<Elt>>, Failure> {
    let inner = s
        .strip_prefix("[[")
        .and_then(|t| t.strip_suffix("]]"))
        .ok_or_else(|| Failure::parse(format!("expected a matrix like [[0,8]], got `{s}`")))?;
    inner
        .split("],[")
        .map(|row| row.split(',').map(|x| parse_int(x, "matrix entry")).collect())
        .collect()
}

fn parse_sub(m: &FgModule, s: &str) -> Result<Submodule, Failure> {
    let s = squeeze(s);
    if s.is_empty() {
        return Err(Failure::parse("empty submodule description"));
    }
    if s == "0" {
        return Ok(m.zero_sub());
    }
    if s == "M" {
        return Ok(m.full_sub());
    }
    if let Some(k) = s.strip_suffix('Z') {
        if m.is_z_line() {
            let k = parse_int(k, "submodule generator")?;
            return Ok(m.cyclic(&[k]));
        }
        return Err(Failure::parse(format!(
            "`{s}` denotes a subgroup of the line Z; this module expects generator lists like <(0,2)>"
        )));
    }
    let gens = if let Some(inner) = s.strip_prefix('<').and_then(|t| t.strip_suffix('>')) {
        parse_gen_list(inner)?
    } else {
        // A bare integer is a cyclic generator of a one-generator module.
        vec![vec![parse_int(&s, "submodule generator")?]]
    };
    for g in &gens {
        if g.len() != m.ngens {
            return Err(Failure::parse(format!(
                "generator ({}) has {} coordinate(s); the module has {}",
                g.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","),
                g.len(),
                m.ngens
            )));
        }
    }
    Ok(m.submodule(&gens))
}

/// Parse `"(0,2),(1,0)"` or `"2,4"` (scalars = one-coordinate generators).
fn parse_gen_list(s: &str) -> Result<Vec<Vec<Elt>>, Failure> {
    if s.is_empty() {
        return Err(Failure::parse("empty generator list"));
    }
    if !s.starts_with('(') {
        return s
            .split(',')
            .map(|x| Ok(vec![parse_int(x, "submodule generator")?]))
            .collect();
    }
    let inner = s
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| Failure::parse(format!("unbalanced parentheses in `{s}`")))?;
    inner
        .split("),(")
        .map(|tuple| tuple.split(',').map(|x| parse_int(x, "generator coordinate")).collect())
        .collect()
}

// ------------------------------------------------------------------- json

fn json_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\t' => out.push_str("\\t"),
            '\r' => out.push_str("\\r"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out
}

fn json_str(s: &str) -> String {
    format!("\"{}\"", json_escape(s))
}

fn json_str_list(items: &[String]) -> String {
    let body: Vec<String> = items.iter().map(|s| json_str(s)).collect();
    format!("[{}]", body.join(","))
}

// ---------------------------------------------------------------- lattice

fn cmd_lattice(ring: &str, module: &str, format: Format) -> Result<u8, Failure> {
    let ring = parse_ring(ring)?;
    let m = parse_module(ring, module)?;
    let subs = m.submodules(predicates::LATTICE_BOUND)?;
    let edges = hasse_edges(&m, &subs)?;
    let name = m.display();
    match format {
        Format::Text => {
            println!("{} over {}: {} submodule(s)", name, m.ring.display(), subs.len());
            for (i, s) in subs.iter().enumerate() {
                let order = m.sub_order(s)?.expect("finite lattice");
                println!("  [{i}] {} (order {order})", m.display_sub(s));
            }
            for (i, j) in &edges {
                println!("  {} < {}", m.display_sub(&subs[*i]), m.display_sub(&subs[*j]));
            }
        }
        Format::Json => {
            let nodes: Vec<String> = subs.iter().map(|s| m.display_sub(s)).collect();
            let edge_body: Vec<String> = edges.iter().map(|(i, j)| format!("[{i},{j}]")).collect();
            println!(
                "{{\"schema\":1,\"module\":{},\"ring\":{},\"nodes\":{},\"edges\":[{}]}}",
                json_str(&name),
                json_str(&m.ring.display()),
                json_str_list(&nodes),
                edge_body.join(",")
            );
        }
        Format::Dot => {
            println!("digraph lattice {{");
            println!("  rankdir=BT;");
            println!("  label={};", json_str(&format!("{} over {}", name, m.ring.display())));
            for (i, s) in subs.iter().enumerate() {
                println!("  n{i} [label={}];", json_str(&m.display_sub(s)));
            }
            for (i, j) in &edges {
                println!("  n{i} -> n{j};");
            }
            println!("}}");
        }
    }
    Ok(0)
}

// ------------------------------------------------------------------ check

#[allow(clippy::too_many_arguments)]
fn cmd_check(
    predicate: &str,
    ring: &str,
    module: &str,
    sub: &str,
    t: Option<&str>,
    witness: Option<&str>,
    strict: bool,
    format: Format,
) -> Result<u8, Failure> {
    if format == Format::Dot {
        return Err(Failure::parse("DOT output is only available for the lattice command"));
    }
    let ring = parse_ring(ring)?;
    let m = parse_module(ring, module)?;
    let n = parse_sub(&m, sub)?;
    let mut inputs: Vec<(String, String)> = vec![
        (String::from("ring"), m.ring.display()),
        (String::from("module"), m.display()),
        (String::from("sub"), m.display_sub(&n)),
    ];
    let verdict = match predicate {
        "small" => predicates::is_small(&m, &n)?,
        "sa-small" => predicates::is_sa_small(&m, &n)?,
        "t-sa-small" => {
            let t = t.ok_or_else(|| Failure::parse("t-sa-small requires --T"))?;
            let t = parse_sub(&m, t)?;
            inputs.push((String::from("T"), m.display_sub(&t)));
            match witness {
                Some(x) => {
                    let x = parse_sub(&m, x)?;
                    inputs.push((String::from("witness"), m.display_sub(&x)));
                    predicates::refute_or_confirm_t_sa_small_with_witness(&m, &n, &t, &x)?
                }
                None => predicates::is_t_sa_small(&m, &n, &t, strict)?,
            }
        }
        other => {
            return Err(Failure::parse(format!(
                "unknown predicate `{other}` (expected small, sa-small, or t-sa-small)"
            )))
        }
    };
    if t.is_some() && predicate != "t-sa-small" {
        return Err(Failure::parse(format!("--T does not apply to the predicate `{predicate}`")));
    }
    emit_verdict(predicate, &m, &inputs, &verdict, format);
    Ok(0)
}

fn emit_verdict(
    predicate: &str,
    m: &FgModule,
    inputs: &[(String, String)],
    v: &Verdict,
    format: Format,
) {
    let value = match v.value {
        VerdictValue::Holds => "holds",
        VerdictValue::Fails => "fails",
        VerdictValue::UndecidableHere => "undecidable_here",
    };
    let witness = v.witness.as_ref().map(|w| m.display_sub(w));
    match format {
        Format::Text => {
            let args: Vec<String> = inputs.iter().map(|(k, val)| format!("{k} = {val}")).collect();
            match &witness {
                Some(w) if v.value == VerdictValue::Fails => {
                    println!("{predicate}({}): {value} [witness {w}] — {}", args.join(", "), v.reason)
                }
                _ => println!("{predicate}({}): {value} — {}", args.join(", "), v.reason),
            }
        }
        _ => {
            let input_body: Vec<String> = inputs
                .iter()
                .map(|(k, val)| format!("{}:{}", json_str(k), json_str(val)))
                .collect();
            println!(
                "{{\"schema\":1,\"predicate\":{},\"inputs\":{{{}}},\"value\":{},\"witness\":{},\"reason\":{}}}",
                json_str(predicate),
                input_body.join(","),
                json_str(value),
                witness.as_deref().map_or(String::from("null"), json_str),
                json_str(&v.reason)
            );
        }
    }
}

// --------------------------------------------------------------- examples

fn emit_example_blocks(blocks: &[ExampleBlock], format: Format) {
    let passed = blocks.iter().filter(|b| b.pass).count();
    match format {
        Format::Text => {
            for b in blocks {
                println!("{} {}", if b.pass { "PASS" } else { "FAIL" }, b.name);
                for d in &b.details {
                    println!("    {d}");
                }
            }
            println!("{passed}/{} paper examples reproduced", blocks.len());
        }
        _ => {
            for b in blocks {
                println!(
                    "{{\"schema\":1,\"example\":{},\"pass\":{},\"details\":{}}}",
                    json_str(b.name),
                    b.pass,
                    json_str_list(&b.details)
                );
            }
        }
    }
}

fn cmd_examples(format: Format) -> Result<u8, Failure> {
    if format == Format::Dot {
        return Err(Failure::parse("DOT output is only available for the lattice command"));
    }
    let blocks = reproduce_paper_examples()?;
    emit_example_blocks(&blocks, format);
    Ok(if blocks.iter().all(|b| b.pass) {
        0
    } else {
        EXIT_EXAMPLE_REGRESSION
    })
}

// ----------------------------------------------------------------- verify

fn corpus_config(max_order: Option<Elt>, seed: Option<u64>) -> CorpusConfig {
    let mut cfg = CorpusConfig::default();
    if let Some(b) = max_order {
        cfg.max_order = b;
    }
    if let Some(s) = seed {
        cfg.seed = s;
    }
    cfg
}

fn report_json(r: &Report) -> String {
    format!(
        "{{\"schema\":1,\"id\":{},\"status\":{},\"instances_checked\":{},\"hypothesis_hits\":{},\"holds_count\":{},\"skipped\":{},\"counterexamples\":{},\"notes\":{}}}",
        json_str(r.id),
        json_str(r.status.as_str()),
        r.instances_checked,
        r.hypothesis_hits,
        r.holds_count,
        r.skipped,
        json_str_list(&r.counterexamples),
        json_str(&r.notes)
    )
}

fn cmd_verify(
    target: &str,
    format: Format,
    max_order: Option<Elt>,
    seed: Option<u64>,
    jobs: Option<usize>,
    timestamp: bool,
) -> Result<u8, Failure> {
    if format == Format::Dot {
        return Err(Failure::parse("DOT output is only available for the lattice command"));
    }
    let all = registry();
    let selected: Vec<_> = if target == "all" {
        all
    } else {
        let found: Vec<_> = all.into_iter().filter(|s| s.id == target).collect();
        if found.is_empty() {
            return Err(Failure::parse(format!(
                "unknown statement id `{target}` (use `verify all` to list every report)"
            )));
        }
        found
    };
    if timestamp {
        let now = std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .map_or(0, |d| d.as_secs());
        match format {
            Format::Text => println!("# run started at unix time {now}"),
            _ => println!("{{\"schema\":1,\"timestamp\":{now}}}"),
        }
    }
    let corpus = Corpus::generate(corpus_config(max_order, seed))?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.unwrap_or(0))
        .build()
        .map_err(|e| Failure::parse(format!("cannot build worker pool: {e}")))?;
    // Fan out over statements; collect preserves registry order, so the
    // report stream is deterministic regardless of schedule.
    let reports: Vec<Report> = pool.install(|| {
        selected
            .par_iter()
            .map(|s| run_statement(s, &corpus))
            .collect::<Result<_, _>>()
    })?;
    match format {
        Format::Text => {
            println!(
                "{:<26} {:<20} {:>12} {:>10} {:>10} {:>8}",
                "id", "status", "checked", "hits", "holds", "skipped"
            );
            for r in &reports {
                println!(
                    "{:<26} {:<20} {:>12} {:>10} {:>10} {:>8}",
                    r.id,
                    r.status.as_str(),
                    r.instances_checked,
                    r.hypothesis_hits,
                    r.holds_count,
                    r.skipped
                );
                for ce in &r.counterexamples {
                    println!("    counterexample: {ce}");
                }
            }
            let verified = reports
                .iter()
                .filter(|r| r.status.as_str() == "verified_on_corpus")
                .count();
            let falsified = reports.iter().filter(|r| r.status.as_str() == "falsified").count();
            let vacuous = reports.iter().filter(|r| r.status.as_str() == "vacuous").count();
            println!(
                "{} report(s): {verified} verified on corpus, {falsified} falsified, {vacuous} vacuous",
                reports.len()
            );
        }
        _ => {
            for r in &reports {
                println!("{}", report_json(r));
            }
        }
    }
    // Falsified statements are findings; only a worked-example regression
    // makes the process fail.
    let blocks = reproduce_paper_examples()?;
    Ok(if blocks.iter().all(|b| b.pass) {
        0
    } else {
        EXIT_EXAMPLE_REGRESSION
    })
}

// ----------------------------------------------------------------- corpus

fn cmd_corpus(format: Format, max_order: Option<Elt>, seed: Option<u64>) -> Result<u8, Failure> {
    if format == Format::Dot {
        return Err(Failure::parse("DOT output is only available for the lattice command"));
    }
    let cfg = corpus_config(max_order, seed);
    let corpus = Corpus::generate(cfg)?;
    match format {
        Format::Text => {
            for c in &corpus.ctxs {
                println!(
                    "{} — order {}, {} submodule(s)",
                    c.tag(),
                    c.sub_order[c.full],
                    c.nsubs()
                );
            }
            println!("{} context(s)", corpus.ctxs.len());
        }
        _ => {
            for c in &corpus.ctxs {
                println!(
                    "{{\"schema\":1,\"module\":{},\"ring\":{},\"order\":{},\"submodules\":{}}}",
                    json_str(&c.m.display()),
                    json_str(&c.m.ring.display()),
                    c.sub_order[c.full],
                    c.nsubs()
                );
            }
        }
    }
    Ok(0)
}
