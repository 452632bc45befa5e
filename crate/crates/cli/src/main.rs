//! `hurwitz`: genus arithmetic for branching data, witness search and
//! verification, fixity reports, and the admissibility-table sweep.
//!
//! Exit codes: 0 affirmative (PASS, identity holds), 1 negative (FAIL or
//! IMPOSSIBLE), 2 inconclusive (NOT_FOUND after budget exhaustion),
//! 3 usage or input error.

mod output;

use std::fs;
use std::path::PathBuf;
use std::process::exit;
use std::thread;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use group_atlas::AtlasGroup;
use hurwitz_engine::{
    fixity_report, global_fixity, read_tuple, reproduce_table, search_constructive,
    search_witness, validate, verify_psl3_lemma, write_tuple, Datum, EngineError, LineVerdict,
    Outcome, Strategy, TableOptions, DEFAULT_BUDGET,
};
use perm_core::RandomStream;

use output::{
    fmt_branches, print_check_marks, print_witness, Certificate, Report, FAIL, IMPOSSIBLE,
    NOT_FOUND, PASS,
};

#[derive(Parser)]
#[command(
    name = "hurwitz",
    version,
    about = "Branching data of finite group actions on surfaces: genus \
             arithmetic, witness tuples, fixity"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Facts about one named group.
    #[command(subcommand)]
    Group(GroupCmd),
    /// Genus arithmetic for branching data.
    #[command(subcommand)]
    Datum(DatumCmd),
    /// Witness tuples: search for one, or verify a tuple file.
    #[command(subcommand)]
    Witness(WitnessCmd),
    /// Fixed-point counts on one coset action or over a whole witness.
    Fixity(FixityArgs),
    /// Parametric family checks.
    #[command(subcommand)]
    Lemma(LemmaCmd),
    /// The admissibility-table sweep.
    #[command(subcommand)]
    Table(TableCmd),
}

#[derive(Subcommand)]
enum GroupCmd {
    /// Order, permutation degree, and designated stabilizer orders.
    Info(GroupInfoArgs),
}

#[derive(Args)]
struct GroupInfoArgs {
    /// Group name: A<n>, S<n>, M22, L<d>(<q>), or U<d>(<q>).
    name: String,
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum DatumCmd {
    /// Check the genus identity for a fully specified datum.
    Check(DatumCheckArgs),
    /// Solve the genus identity for the surface genus.
    Genus(DatumGenusArgs),
}

/// Group, orbit genus, and branch list: the shape every datum command needs.
#[derive(Args)]
struct ShapeArgs {
    /// Acting group by name.
    #[arg(long)]
    group: String,
    /// Orbit surface genus.
    #[arg(long, default_value_t = 0)]
    cogenus: u32,
    /// N branch points of multiplicity M, as M:N; repeat per multiplicity.
    #[arg(long = "branch", value_name = "M:N", value_parser = parse_branch)]
    branch: Vec<(u64, u32)>,
}

#[derive(Args)]
struct DatumCheckArgs {
    #[command(flatten)]
    shape: ShapeArgs,
    /// Surface genus the datum claims.
    #[arg(long)]
    genus: i64,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct DatumGenusArgs {
    #[command(flatten)]
    shape: ShapeArgs,
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum WitnessCmd {
    /// Search for a witness tuple realizing a datum.
    Search(WitnessSearchArgs),
    /// Verify a tuple file against its embedded datum.
    Verify(WitnessVerifyArgs),
}

#[derive(Args)]
struct WitnessSearchArgs {
    #[command(flatten)]
    shape: ShapeArgs,
    /// auto, random-product, constructive, random-commutator, or exhaustive.
    #[arg(long, default_value_t = Strategy::Auto)]
    strategy: Strategy,
    /// Random stream seed; fixed seed means identical output.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Relation attempts before giving up.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Auxiliary element order for the constructive strategy.
    #[arg(long)]
    aux_order: Option<u64>,
    /// Parallel workers splitting the budget; the verdict kind does not
    /// depend on the worker count.
    #[arg(long, default_value_t = 1)]
    workers: u32,
    /// Write the found tuple to this file.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct WitnessVerifyArgs {
    /// Tuple file: a datum header line, then one permutation per line.
    file: PathBuf,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct FixityArgs {
    /// Acting group by name.
    #[arg(long)]
    group: String,
    /// Cyclic stabilizer order; reports per-class fixed points on the
    /// corresponding coset action.
    #[arg(long, conflicts_with = "tuple", required_unless_present = "tuple")]
    order: Option<u64>,
    /// Tuple file; reports fixed points summed over every branch orbit of
    /// the witness.
    #[arg(long, value_name = "FILE")]
    tuple: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum LemmaCmd {
    /// Dimension-3 linear and unitary families: stabilizer-order arithmetic
    /// plus a searched witness.
    Psl3(LemmaArgs),
}

#[derive(Args)]
struct LemmaArgs {
    /// Prime power in [3, 9].
    #[arg(long)]
    q: u32,
    /// +1 for the linear family, -1 for the unitary family.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_epsilon)]
    epsilon: i32,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum TableCmd {
    /// Run every table line and report a verdict per line.
    Reproduce(TableArgs),
}

#[derive(Args)]
struct TableArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Run the billion-element line instead of skipping it.
    #[arg(long)]
    allow_large: bool,
    /// Parallel line workers; verdicts are worker-count independent.
    #[arg(long, default_value_t = 1)]
    workers: u32,
    /// Also write the JSON report to this file.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

fn parse_branch(s: &str) -> Result<(u64, u32), String> {
    let (m, n) = s
        .split_once(':')
        .ok_or_else(|| format!("expected M:N, got {s:?}"))?;
    let m: u64 = m.trim().parse().map_err(|_| format!("bad multiplicity in {s:?}"))?;
    let n: u32 = n.trim().parse().map_err(|_| format!("bad point count in {s:?}"))?;
    Ok((m, n))
}

fn parse_epsilon(s: &str) -> Result<i32, String> {
    match s.trim() {
        "1" | "+1" => Ok(1),
        "-1" => Ok(-1),
        other => Err(format!("expected +1 or -1, got {other:?}")),
    }
}

fn main() {
    let started = Instant::now();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            exit(0);
        }
        Err(e) => {
            eprint!("{e}");
            exit(3);
        }
    };
    match run(cli, started) {
        Ok(code) => exit(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            exit(3);
        }
    }
}

fn run(cli: Cli, started: Instant) -> Result<i32, String> {
    match cli.command {
        Cmd::Group(GroupCmd::Info(a)) => group_info(a, started),
        Cmd::Datum(DatumCmd::Check(a)) => datum_check(a, started),
        Cmd::Datum(DatumCmd::Genus(a)) => datum_genus(a, started),
        Cmd::Witness(WitnessCmd::Search(a)) => witness_search(a, started),
        Cmd::Witness(WitnessCmd::Verify(a)) => witness_verify(a, started),
        Cmd::Fixity(a) => fixity_cmd(a, started),
        Cmd::Lemma(LemmaCmd::Psl3(a)) => lemma_psl3(a, started),
        Cmd::Table(TableCmd::Reproduce(a)) => table_reproduce(a, started),
    }
}

fn lookup_group(name: &str) -> Result<AtlasGroup, String> {
    group_atlas::lookup(name).map_err(|e| e.to_string())
}

fn group_order(atlas: &AtlasGroup) -> Result<u64, String> {
    atlas
        .group
        .order_u64()
        .ok_or_else(|| format!("{} is too large for datum arithmetic", atlas.name))
}

fn branches_value(branches: &[(u64, u32)]) -> Value {
    Value::Array(branches.iter().map(|&(m, n)| json!([m, n])).collect())
}

fn group_info(a: GroupInfoArgs, started: Instant) -> Result<i32, String> {
    let atlas = lookup_group(&a.name)?;
    #[derive(Serialize)]
    struct Payload {
        order: Value,
        degree: usize,
        fixity3_stab: Option<u64>,
        fixity2_stabs: Vec<u64>,
    }
    let payload = Payload {
        order: atlas
            .group
            .order_u64()
            .map(Value::from)
            .unwrap_or_else(|| Value::String(atlas.group.order().to_string())),
        degree: atlas.group.degree(),
        fixity3_stab: atlas.fixity3_order,
        fixity2_stabs: atlas.fixity2_orders.clone(),
    };
    let report = Report {
        command: "group info",
        inputs: json!({ "group": atlas.name }),
        verdict: PASS,
        certificate: None,
    };
    Ok(report.emit(a.json, &payload, started, || {
        println!(
            "{}: order {}, degree {}",
            atlas.name,
            atlas.group.order(),
            atlas.group.degree()
        );
        match atlas.fixity3_order {
            Some(m) => println!("  fixity-3 stabilizer order {m}"),
            None => println!("  no designated fixity-3 stabilizer"),
        }
        if !atlas.fixity2_orders.is_empty() {
            let orders: Vec<String> =
                atlas.fixity2_orders.iter().map(u64::to_string).collect();
            println!("  fixity-2 stabilizer orders {}", orders.join(", "));
        }
    }))
}

#[derive(Serialize)]
struct GenusPayload {
    #[serde(skip_serializing_if = "Option::is_none")]
    datum: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    genus: Option<i128>,
    #[serde(skip_serializing_if = "Option::is_none")]
    expected_genus: Option<i128>,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<String>,
}

fn datum_check(a: DatumCheckArgs, started: Instant) -> Result<i32, String> {
    let atlas = lookup_group(&a.shape.group)?;
    let order = group_order(&atlas)?;
    let datum = Datum::new(
        &atlas.name,
        i128::from(a.genus),
        a.shape.cogenus,
        &a.shape.branch,
    )
    .map_err(|e| e.to_string())?;
    let (verdict, expected, reason) = match datum.expected_genus(order) {
        Ok(g) if g == datum.genus => (PASS, Some(g), None),
        Ok(g) => (FAIL, Some(g), Some(format!("the identity forces genus {g}"))),
        Err(e) => (FAIL, None, Some(e.to_string())),
    };
    let payload = GenusPayload {
        datum: Some(datum.to_string()),
        genus: Some(datum.genus),
        expected_genus: expected,
        reason: reason.clone(),
    };
    let report = Report {
        command: "datum check",
        inputs: json!({
            "group": atlas.name,
            "genus": a.genus,
            "cogenus": a.shape.cogenus,
            "branches": branches_value(&datum.branches),
        }),
        verdict,
        certificate: None,
    };
    Ok(report.emit(a.json, &payload, started, || match &reason {
        None => println!("PASS: {datum} satisfies the genus identity"),
        Some(why) => println!("FAIL: {datum}: {why}"),
    }))
}

fn datum_genus(a: DatumGenusArgs, started: Instant) -> Result<i32, String> {
    let atlas = lookup_group(&a.shape.group)?;
    let order = group_order(&atlas)?;
    let solved = Datum::solved(&atlas.name, order, a.shape.cogenus, &a.shape.branch);
    let (verdict, payload) = match &solved {
        Ok(d) => (
            PASS,
            GenusPayload {
                datum: Some(d.to_string()),
                genus: Some(d.genus),
                expected_genus: None,
                reason: None,
            },
        ),
        Err(e) => (
            FAIL,
            GenusPayload {
                datum: None,
                genus: None,
                expected_genus: None,
                reason: Some(e.to_string()),
            },
        ),
    };
    let report = Report {
        command: "datum genus",
        inputs: json!({
            "group": atlas.name,
            "cogenus": a.shape.cogenus,
            "branches": branches_value(&a.shape.branch),
        }),
        verdict,
        certificate: None,
    };
    Ok(report.emit(a.json, &payload, started, || match &solved {
        Ok(d) => println!("genus {}\n  datum: {d}", d.genus),
        Err(e) => println!("FAIL: {e}"),
    }))
}

/// Runs the configured search; with several workers, each gets an
/// independent derived stream and an equal budget share, and the lowest
/// worker index that finds a witness wins.  All workers run to completion,
/// so the outcome does not depend on scheduling.
fn run_search(atlas: &AtlasGroup, a: &WitnessSearchArgs) -> Result<Outcome, EngineError> {
    let g = &atlas.group;
    let name = atlas.name.as_str();
    let single = |rng: &mut RandomStream, budget: u64| match a.aux_order {
        Some(k) => search_constructive(g, name, &a.shape.branch, k, rng, budget),
        None => search_witness(
            g,
            name,
            a.shape.cogenus,
            &a.shape.branch,
            a.strategy,
            rng,
            budget,
        ),
    };
    if a.workers <= 1 {
        return single(&mut RandomStream::new(a.seed), a.budget);
    }
    let share = (a.budget / u64::from(a.workers)).max(1);
    let results: Vec<Result<Outcome, EngineError>> = thread::scope(|s| {
        let handles: Vec<_> = (0..a.workers)
            .map(|i| {
                let single = &single;
                s.spawn(move || single(&mut RandomStream::for_worker(a.seed, u64::from(i)), share))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("search worker panicked"))
            .collect()
    });
    for r in results {
        match r {
            Ok(Outcome::NotFound) => continue,
            decided => return decided,
        }
    }
    Ok(Outcome::NotFound)
}

#[derive(Serialize)]
struct SearchPayload {
    strategy: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    datum: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    genus: Option<i128>,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<String>,
}

fn witness_search(a: WitnessSearchArgs, started: Instant) -> Result<i32, String> {
    let atlas = lookup_group(&a.shape.group)?;
    if a.aux_order.is_some() && !matches!(a.strategy, Strategy::Auto | Strategy::Constructive) {
        return Err(format!(
            "--aux-order only applies to the constructive strategy, not {}",
            a.strategy
        ));
    }
    let outcome = match run_search(&atlas, &a) {
        Ok(outcome) => outcome,
        // An unsolvable genus identity means no witness can exist.
        Err(EngineError::Datum(why)) => Outcome::Impossible(why),
        Err(e) => return Err(e.to_string()),
    };
    let (verdict, witness, reason) = match outcome {
        Outcome::Found(w) => (PASS, Some(w), None),
        Outcome::Impossible(why) => (IMPOSSIBLE, None, Some(why)),
        Outcome::NotFound => (
            NOT_FOUND,
            None,
            Some(format!("budget of {} attempts exhausted", a.budget)),
        ),
    };
    if let (Some(w), Some(path)) = (&witness, &a.out) {
        fs::write(path, write_tuple(w)).map_err(|e| format!("writing {}: {e}", path.display()))?;
    }
    let payload = SearchPayload {
        strategy: a.strategy.to_string(),
        datum: witness.as_ref().map(|w| w.datum.to_string()),
        genus: witness.as_ref().map(|w| w.datum.genus),
        reason: reason.clone(),
    };
    let report = Report {
        command: "witness search",
        inputs: json!({
            "group": atlas.name,
            "cogenus": a.shape.cogenus,
            "branches": branches_value(&a.shape.branch),
            "strategy": a.strategy.to_string(),
            "seed": a.seed,
            "budget": a.budget,
            "workers": a.workers,
            "aux_order": a.aux_order,
        }),
        verdict,
        certificate: witness.as_ref().map(Certificate::from_witness),
    };
    Ok(report.emit(a.json, &payload, started, || match (&witness, &reason) {
        (Some(w), _) => {
            println!("PASS: witness found");
            print_check_marks();
            print_witness(w);
            if let Some(path) = &a.out {
                println!("  wrote tuple to {}", path.display());
            }
        }
        (None, Some(why)) => println!("{verdict}: {why}"),
        (None, None) => unreachable!(),
    }))
}

fn witness_verify(a: WitnessVerifyArgs, started: Instant) -> Result<i32, String> {
    let text = fs::read_to_string(&a.file)
        .map_err(|e| format!("reading {}: {e}", a.file.display()))?;
    let header = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .ok_or("empty tuple file")?;
    let datum: Datum = header
        .strip_prefix("datum:")
        .ok_or("first line must be a `datum:` header")?
        .trim()
        .parse()
        .map_err(|e: EngineError| e.to_string())?;
    let atlas = lookup_group(&datum.name)?;
    let w = read_tuple(&text, atlas.group.degree()).map_err(|e| e.to_string())?;
    let (verdict, reason) = match validate(&atlas.group, &w) {
        Ok(()) => (PASS, None),
        Err(e) => (FAIL, Some(e.to_string())),
    };
    let payload = SearchPayload {
        strategy: String::new(),
        datum: Some(w.datum.to_string()),
        genus: Some(w.datum.genus),
        reason: reason.clone(),
    };
    let report = Report {
        command: "witness verify",
        inputs: json!({ "file": a.file.display().to_string() }),
        verdict,
        certificate: (verdict == PASS).then(|| Certificate::from_witness(&w)),
    };
    Ok(report.emit(a.json, &payload, started, || match &reason {
        None => {
            println!("PASS: {}", w.datum);
            print_check_marks();
        }
        Some(why) => println!("FAIL: {why}"),
    }))
}

#[derive(Serialize)]
struct ClassRow {
    element_order: u64,
    class_size: u64,
    fixed_points: u64,
}

#[derive(Serialize)]
struct FixityPayload {
    #[serde(skip_serializing_if = "Option::is_none")]
    stabilizer_order: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    orbit_size: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    datum: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    fixity: Option<u64>,
    classes: Vec<ClassRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<String>,
}

fn fixity_cmd(a: FixityArgs, started: Instant) -> Result<i32, String> {
    let atlas = lookup_group(&a.group)?;
    let mut rng = RandomStream::new(a.seed);
    let inputs = json!({
        "group": atlas.name,
        "order": a.order,
        "tuple": a.tuple.as_ref().map(|p| p.display().to_string()),
        "seed": a.seed,
    });
    let (verdict, payload, human): (_, FixityPayload, Box<dyn FnOnce()>) =
        if let Some(path) = &a.tuple {
            let text = fs::read_to_string(path)
                .map_err(|e| format!("reading {}: {e}", path.display()))?;
            let w = read_tuple(&text, atlas.group.degree()).map_err(|e| e.to_string())?;
            match global_fixity(&atlas.group, &w, &mut rng) {
                Ok(gf) => {
                    let classes: Vec<ClassRow> = gf
                        .classes
                        .iter()
                        .map(|c| ClassRow {
                            element_order: c.element_order,
                            class_size: c.class_size,
                            fixed_points: c.fixed_points,
                        })
                        .collect();
                    let payload = FixityPayload {
                        stabilizer_order: None,
                        orbit_size: None,
                        datum: Some(w.datum.to_string()),
                        fixity: Some(gf.fixity),
                        classes,
                        reason: None,
                    };
                    let datum = w.datum.clone();
                    let human: Box<dyn FnOnce()> = Box::new(move || {
                        println!("totals over all branch orbits of {datum}:");
                        for c in &gf.classes {
                            println!(
                                "  class of order {} (size {}): {} fixed points",
                                c.element_order, c.class_size, c.fixed_points
                            );
                        }
                        println!("fixity {}", gf.fixity);
                    });
                    (PASS, payload, human)
                }
                Err(e) => fixity_failure(e.to_string()),
            }
        } else {
            let m = a.order.expect("clap requires --order without --tuple");
            match fixity_report(&atlas.group, &atlas.name, m, &mut rng) {
                Ok(r) => {
                    let classes: Vec<ClassRow> = r
                        .classes
                        .iter()
                        .map(|c| ClassRow {
                            element_order: c.element_order,
                            class_size: c.class_size,
                            fixed_points: c.fixed_points,
                        })
                        .collect();
                    let payload = FixityPayload {
                        stabilizer_order: Some(r.stabilizer_order),
                        orbit_size: Some(r.orbit_size),
                        datum: None,
                        fixity: Some(r.fixity),
                        classes,
                        reason: None,
                    };
                    let human: Box<dyn FnOnce()> = Box::new(move || {
                        println!(
                            "{} on the cosets of a cyclic subgroup of order {}: orbit size {}",
                            r.group, r.stabilizer_order, r.orbit_size
                        );
                        for c in &r.classes {
                            println!(
                                "  class of order {} (size {}): {} fixed points",
                                c.element_order, c.class_size, c.fixed_points
                            );
                        }
                        println!("fixity {}", r.fixity);
                    });
                    (PASS, payload, human)
                }
                Err(e) => fixity_failure(e.to_string()),
            }
        };
    let report = Report {
        command: "fixity",
        inputs,
        verdict,
        certificate: None,
    };
    Ok(report.emit(a.json, &payload, started, human))
}

fn fixity_failure(why: String) -> (&'static str, FixityPayload, Box<dyn FnOnce()>) {
    let payload = FixityPayload {
        stabilizer_order: None,
        orbit_size: None,
        datum: None,
        fixity: None,
        classes: Vec::new(),
        reason: Some(why.clone()),
    };
    (FAIL, payload, Box::new(move || println!("FAIL: {why}")))
}

fn lemma_psl3(a: LemmaArgs, started: Instant) -> Result<i32, String> {
    let mut rng = RandomStream::new(a.seed);
    let inputs = json!({
        "q": a.q,
        "epsilon": a.epsilon,
        "seed": a.seed,
        "budget": a.budget,
    });
    #[derive(Serialize)]
    struct Payload {
        #[serde(skip_serializing_if = "Option::is_none")]
        group: Option<String>,
        #[serde(skip_serializing_if = "Option::is_none")]
        alpha: Option<u64>,
        #[serde(skip_serializing_if = "Option::is_none")]
        beta: Option<u64>,
        #[serde(skip_serializing_if = "Option::is_none")]
        datum: Option<String>,
        #[serde(skip_serializing_if = "Option::is_none")]
        reason: Option<String>,
    }
    match verify_psl3_lemma(a.q, a.epsilon, &mut rng, a.budget) {
        Ok(rep) => {
            let payload = Payload {
                group: Some(rep.group_name.clone()),
                alpha: Some(rep.alpha),
                beta: Some(rep.beta),
                datum: Some(rep.datum.to_string()),
                reason: None,
            };
            let report = Report {
                command: "lemma psl3",
                inputs,
                verdict: PASS,
                certificate: Some(Certificate::from_witness(&rep.witness)),
            };
            Ok(report.emit(a.json, &payload, started, || {
                println!(
                    "PASS: {} has stabilizer order {} and commutator order {}",
                    rep.group_name, rep.alpha, rep.beta
                );
                print_check_marks();
                print_witness(&rep.witness);
            }))
        }
        // Parameter-domain failures are usage errors; a exhausted budget is
        // an inconclusive verdict.
        Err(EngineError::Datum(why)) => Err(why),
        Err(EngineError::Search(why)) => {
            let payload = Payload {
                group: None,
                alpha: None,
                beta: None,
                datum: None,
                reason: Some(why.clone()),
            };
            let report = Report {
                command: "lemma psl3",
                inputs,
                verdict: NOT_FOUND,
                certificate: None,
            };
            Ok(report.emit(a.json, &payload, started, || {
                println!("NOT_FOUND: {why}");
            }))
        }
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Serialize)]
struct RowPayload {
    number: u32,
    group: String,
    cogenus: u32,
    branches: Vec<(u64, u32)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    genus: Option<i128>,
    verdict: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    global_fixity: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<Certificate>,
    #[serde(skip_serializing_if = "String::is_empty")]
    detail: String,
}

fn table_reproduce(a: TableArgs, started: Instant) -> Result<i32, String> {
    let options = TableOptions {
        seed: a.seed,
        budget: a.budget,
        allow_large: a.allow_large,
        workers: a.workers,
        ..TableOptions::default()
    };
    let lines = reproduce_table(&options);
    let verdict = if lines.iter().any(|l| l.verdict == LineVerdict::Fail) {
        FAIL
    } else if lines.iter().any(|l| l.verdict == LineVerdict::NotFound) {
        NOT_FOUND
    } else {
        PASS
    };
    #[derive(Serialize)]
    struct Payload {
        lines: Vec<RowPayload>,
    }
    let payload = Payload {
        lines: lines
            .iter()
            .map(|l| RowPayload {
                number: l.number,
                group: l.group.clone(),
                cogenus: l.cogenus,
                branches: l.branches.clone(),
                genus: l.datum.as_ref().map(|d| d.genus),
                verdict: l.verdict.as_str(),
                global_fixity: l.global_fixity,
                certificate: l.witness.as_ref().map(Certificate::from_witness),
                detail: l.detail.clone(),
            })
            .collect(),
    };
    let report = Report {
        command: "table reproduce",
        inputs: json!({
            "seed": a.seed,
            "budget": a.budget,
            "allow_large": a.allow_large,
            "workers": a.workers,
        }),
        verdict,
        certificate: None,
    };
    if let Some(path) = &a.out {
        let mut text = report.render_json(&payload, started);
        text.push('\n');
        fs::write(path, text).map_err(|e| format!("writing {}: {e}", path.display()))?;
    }
    Ok(report.emit(a.json, &payload, started, || {
        for l in &lines {
            let genus = l
                .datum
                .as_ref()
                .map(|d| format!("genus {}", d.genus))
                .unwrap_or_default();
            let fixity = l
                .global_fixity
                .map(|f| format!("fixity {f}"))
                .unwrap_or_default();
            let note = if l.verdict == LineVerdict::Pass || l.detail.is_empty() {
                String::new()
            } else {
                format!("  ({})", l.detail)
            };
            println!(
                "line {:>2}  {:<6} cogenus {}  {:<18} {:<11} {:<16} {:<9}{}",
                l.number,
                l.group,
                l.cogenus,
                fmt_branches(&l.branches),
                l.verdict.as_str(),
                genus,
                fixity,
                note
            );
        }
        println!("overall: {verdict}");
    }))
}
