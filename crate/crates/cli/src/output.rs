//! Report emission.  Every subcommand answers through one envelope so the
//! JSON schema stays uniform: `{command, inputs, verdict, certificate?,
//! <payload fields>, timings}`.  Runs with the same argv and seed produce
//! byte-identical JSON except for the timings field.

use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

use hurwitz_engine::Witness;

pub const PASS: &str = "PASS";
pub const FAIL: &str = "FAIL";
pub const IMPOSSIBLE: &str = "IMPOSSIBLE";
pub const NOT_FOUND: &str = "NOT_FOUND";

/// Exit code for a verdict: 0 affirmative, 1 negative, 2 inconclusive.
pub fn exit_code(verdict: &str) -> i32 {
    match verdict {
        PASS => 0,
        FAIL | IMPOSSIBLE => 1,
        NOT_FOUND => 2,
        other => unreachable!("verdict {other}"),
    }
}

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    command: &'a str,
    inputs: &'a Value,
    verdict: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<&'a Certificate>,
    #[serde(flatten)]
    payload: &'a T,
    timings: Timings,
}

#[derive(Serialize)]
struct Timings {
    total_ms: u128,
}

/// A witness tuple in transportable form: the datum header plus one cycle
/// string per element, in tuple file order.
#[derive(Serialize)]
pub struct Certificate {
    pub datum: String,
    pub elements: Vec<String>,
}

impl Certificate {
    pub fn from_witness(w: &Witness) -> Certificate {
        Certificate {
            datum: w.datum.to_string(),
            elements: w.elements().iter().map(|p| p.cycle_string()).collect(),
        }
    }
}

/// One report per process: either the JSON envelope on stdout or the
/// human rendering produced by `human`.  Returns the process exit code.
pub struct Report<'a> {
    pub command: &'a str,
    pub inputs: Value,
    pub verdict: &'a str,
    pub certificate: Option<Certificate>,
}

impl Report<'_> {
    pub fn render_json<T: Serialize>(&self, payload: &T, started: Instant) -> String {
        let envelope = Envelope {
            command: self.command,
            inputs: &self.inputs,
            verdict: self.verdict,
            certificate: self.certificate.as_ref(),
            payload,
            timings: Timings {
                total_ms: started.elapsed().as_millis(),
            },
        };
        serde_json::to_string(&envelope).expect("serializable")
    }

    pub fn emit<T: Serialize>(
        &self,
        json: bool,
        payload: &T,
        started: Instant,
        human: impl FnOnce(),
    ) -> i32 {
        if json {
            println!("{}", self.render_json(payload, started));
        } else {
            human();
        }
        exit_code(self.verdict)
    }
}

/// `[3:1, 7:1]` rendering for branch lists.
pub fn fmt_branches(branches: &[(u64, u32)]) -> String {
    let entries: Vec<String> = branches
        .iter()
        .map(|(m, n)| format!("{m}:{n}"))
        .collect();
    format!("[{}]", entries.join(", "))
}

/// The three validated conditions, printed after any successful witness
/// check.
pub fn print_check_marks() {
    println!("  \u{2713} branch element orders match the datum");
    println!("  \u{2713} defining relator reduces to the identity");
    println!("  \u{2713} tuple generates the full group");
}

/// Prints a found tuple in file format, indented for the terminal.
pub fn print_witness(w: &Witness) {
    println!("  datum: {}", w.datum);
    for e in w.elements() {
        println!("  {}", e.cycle_string());
    }
}
