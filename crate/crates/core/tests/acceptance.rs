//! Acceptance gate: one pass/fail line per criterion, nonzero exit if any
//! criterion fails.

use std::path::Path;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use fjl_core::harness::{run_suite, Suite, SuiteOptions, SuiteReport};
use fjl_core::kernel::golden::golden_proofs;
use fjl_core::kernel::{check_derivation, parse_derivation, ConstantSpecification};

struct Gate {
    failed: usize,
}

impl Gate {
    fn record(&mut self, name: &str, ok: bool, detail: String) {
        let tag = if ok { "PASS" } else { "FAIL" };
        println!("[{tag}] {name}: {detail}");
        if !ok {
            self.failed += 1;
        }
    }
}

fn summary(reports: &[&SuiteReport]) -> String {
    reports
        .iter()
        .map(|r| {
            format!("{} {} cases {} failures {:.2}s", r.suite, r.cases, r.failures.len(), r.wall_time.as_secs_f64())
        })
        .collect::<Vec<_>>()
        .join("; ")
}

fn first_failure(reports: &[&SuiteReport]) -> String {
    reports
        .iter()
        .flat_map(|r| {
            r.failures.first().map(|f| {
                format!(
                    " first failure in {}: {} (expected {}, observed {})",
                    r.suite, f.inputs, f.expected, f.observed
                )
            })
        })
        .next()
        .unwrap_or_default()
}

fn suites(gate: &mut Gate, name: &str, which: &[Suite], limit: Option<Duration>, min_cases: &[u64]) {
    let options = SuiteOptions::default();
    let reports: Vec<SuiteReport> = which.iter().map(|s| run_suite(*s, &options)).collect();
    let refs: Vec<&SuiteReport> = reports.iter().collect();
    let total: Duration = reports.iter().map(|r| r.wall_time).sum();
    let in_time = limit.is_none_or(|l| total < l);
    let enough = reports.iter().zip(min_cases).all(|(r, m)| r.cases >= *m);
    let ok = reports.iter().all(SuiteReport::passed) && in_time && enough;
    let mut detail = summary(&refs);
    if let Some(l) = limit {
        detail.push_str(&format!("; limit {}s", l.as_secs()));
    }
    detail.push_str(&first_failure(&refs));
    gate.record(name, ok, detail);
}

/// The shipped proof files equal the generated ones and check.
fn shipped_proofs() -> Result<usize, String> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("golden");
    let proofs = golden_proofs();
    for g in &proofs {
        let text = std::fs::read_to_string(dir.join(&g.file)).map_err(|e| format!("{}: {e}", g.file))?;
        if text != g.text {
            return Err(format!("{} differs from the generated proof", g.file));
        }
        let d = parse_derivation(&text, &g.logic).map_err(|e| format!("{}: {e}", g.file))?;
        check_derivation(&d, &g.logic, &ConstantSpecification::total()).map_err(|e| format!("{}: {e}", g.file))?;
    }
    Ok(proofs.len())
}

fn main() -> ExitCode {
    let start = Instant::now();
    let mut gate = Gate { failed: 0 };
    suites(
        &mut gate,
        "residuum adjunction on the denominator-8 grid",
        &[Suite::Adjunction],
        Some(Duration::from_secs(5)),
        &[3 * 23 * 23 * 23],
    );
    suites(
        &mut gate,
        "soundness of every axiom on 500 models per logic",
        &[Suite::Soundness],
        Some(Duration::from_secs(60)),
        &[7 * 500],
    );

    let shipped = shipped_proofs();
    let reports: Vec<SuiteReport> = [Suite::PropositionalTheorems, Suite::GradedTheorems]
        .iter()
        .map(|s| run_suite(*s, &SuiteOptions::default()))
        .collect();
    let refs: Vec<&SuiteReport> = reports.iter().collect();
    let ok = shipped.is_ok() && reports.iter().all(|r| r.passed() && r.cases >= 200);
    let files = match &shipped {
        Ok(n) => format!("{n} shipped proofs check"),
        Err(e) => e.clone(),
    };
    gate.record(
        "reference theorems: shipped proofs and validity on 200 models",
        ok,
        format!("{files}; {}{}", summary(&refs), first_failure(&refs)),
    );

    suites(
        &mut gate,
        "Lukasiewicz residuum laws and graded-assertion semantics",
        &[Suite::LukasiewiczResiduum, Suite::GradedSemantics],
        None,
        &[200, 200],
    );
    suites(
        &mut gate,
        "lifting of 100 random derivations of depth at most 6",
        &[Suite::Lifting],
        Some(Duration::from_secs(30)),
        &[100],
    );
    suites(
        &mut gate,
        "factivity on reflexive and consistency on serial frames, with countermodels",
        &[Suite::Frames],
        None,
        &[402],
    );
    suites(&mut gate, "fuzzy and crisp evaluation agree on all small Boolean models", &[Suite::Crisp], None, &[1]);
    suites(
        &mut gate,
        "single-world embedding preserves justification-free values",
        &[Suite::Conservativity],
        None,
        &[200],
    );
    suites(
        &mut gate,
        "graded application, sum and weakening principles on 200 models",
        &[Suite::Milnikel],
        None,
        &[200],
    );
    suites(
        &mut gate,
        "degree lower bound at most upper bound on 30 cases, exact on 10",
        &[Suite::Degrees],
        None,
        &[30],
    );

    println!("{} criteria failed, {:.1}s", gate.failed, start.elapsed().as_secs_f64());
    if gate.failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
