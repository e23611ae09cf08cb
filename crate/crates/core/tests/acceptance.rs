//! Acceptance suite: one line per criterion, non-zero exit on any required failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use so41_core::invariants::{independence_check_with, invariant_dimension, predicted_dimension, Method};
use so41_core::sym_ext::build_st_catalog;
use so41_core::tensor::{rank16_check, TensorAlgebra};
use so41_core::verify::{
    best_run, consistency_checks, form_label, generator_suite, invariance_suite, relations_suite, sign_label,
    structural_checks, table_suite, FormChoice, SignChoice,
};
use so41_core::{Convention, PForm};

const SEED: u64 = 20_240_611;

enum Outcome {
    Pass(String),
    Fail(String),
    /// Strict statement fails; the documented fallback requirements hold.
    Finding(String),
}

struct Criterion {
    id: u32,
    title: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

fn pass_if(ok: bool, detail: String) -> Outcome {
    if ok {
        Outcome::Pass(detail)
    } else {
        Outcome::Fail(detail)
    }
}

/// The convention that zeroes the most identities, found by search.
fn working_convention() -> Convention {
    let r = relations_suite(SignChoice::Auto, FormChoice::Auto).expect("relations");
    best_run(&r.runs).expect("candidates").convention.clone()
}

fn c1() -> Outcome {
    let t = table_suite().expect("table suite");
    let brackets = t.lines.iter().filter(|l| l.starts_with("TABLE") && l.ends_with("PASS")).count();
    let mats = t.lines.iter().filter(|l| l.starts_with("MATRIX") && l.ends_with("PASS")).count();
    pass_if(t.pass, format!("brackets {brackets}/45, matrices {mats}/10"))
}

fn c2() -> Outcome {
    let form = PForm::new(Convention::default());
    let r = consistency_checks(&form, SEED, 1000);
    pass_if(
        r.pass(),
        format!(
            "jacobi violations {}, clifford {}/{} associative, uea {}/{} associative",
            r.jacobi_violations,
            r.clifford_triples - r.clifford_violations,
            r.clifford_triples,
            r.uea_triples - r.uea_violations,
            r.uea_triples
        ),
    )
}

fn c3() -> Outcome {
    let mut details = Vec::new();
    let mut ok = true;
    for conv in [Convention::default(), working_convention()] {
        let r = invariance_suite(&conv).expect("invariance suite");
        let zeros = r.lines.iter().filter(|l| l.starts_with("INVARIANCE") && l.ends_with("PASS")).count();
        let reading = r.lines[0].trim_start_matches("DK ").to_string();
        ok &= r.pass && zeros == 78;
        details.push(format!(
            "sign={} form={}: {zeros}/78 zero, {reading}",
            sign_label(&conv),
            form_label(&conv)
        ));
    }
    pass_if(ok, details.join("; "))
}

fn c4() -> Outcome {
    let r = relations_suite(SignChoice::Auto, FormChoice::Auto).expect("relations suite");
    if let Some(c) = &r.accepted {
        return Outcome::Pass(format!(
            "all eight vanish under sign={} form={}",
            sign_label(c),
            form_label(c)
        ));
    }
    let best = best_run(&r.runs).expect("candidates");
    let counts: Vec<String> = best.residual_terms.iter().map(|(n, k)| format!("{n}:{k}")).collect();
    let reported = r.runs.iter().all(|run| run.residual_terms.len() == 8)
        && r.output.lines.iter().filter(|l| l.starts_with("RELATION")).count() == 8 * r.runs.len();
    let detail = format!(
        "no convention zeroes all eight; best sign={} form={} vanishing {}/8, residual terms [{}]",
        sign_label(&best.convention),
        form_label(&best.convention),
        best.zeros(),
        counts.join(" ")
    );
    if reported {
        Outcome::Finding(detail)
    } else {
        Outcome::Fail(detail)
    }
}

fn c5() -> Outcome {
    let conv = working_convention();
    let r = generator_suite(&conv).expect("generator suite");
    let exact: Vec<&str> = r
        .lines
        .iter()
        .filter(|l| l.contains(" exact "))
        .filter_map(|l| l.split_whitespace().nth(1))
        .collect();
    let corrected: Vec<&str> = r
        .lines
        .iter()
        .filter(|l| l.contains(" corrected "))
        .filter_map(|l| l.split_whitespace().nth(1))
        .collect();
    pass_if(
        r.pass,
        format!(
            "all eight generated; printed chain exact for [{}], in-span correction for [{}]",
            exact.join(","),
            corrected.join(",")
        ),
    )
}

fn c6() -> Outcome {
    let mut parts = Vec::new();
    let mut ok = true;
    for n in 0..=7 {
        let method = if n <= 5 { Method::Exact } else { Method::ModP { seed: SEED } };
        let r = invariant_dimension(n, method, false).expect("invariant dimension");
        ok &= r.pass() && (n <= 5 || r.mod_p_ranks.len() >= 3);
        parts.push(format!("{}={}", n, r.invariant_dim));
    }
    let expected: Vec<u64> = (0..=7).map(predicted_dimension).collect();
    ok &= expected == [1, 0, 4, 4, 13, 16, 32, 40];
    pass_if(ok, format!("computed [{}], predicted {expected:?}", parts.join(" ")))
}

fn c7() -> Outcome {
    let st = build_st_catalog().expect("catalog");
    let r = independence_check_with(&st, 6).expect("independence");
    let counts: Vec<String> = r.per_degree.iter().map(|c| format!("{}/{}", c.rank, c.count)).collect();
    pass_if(r.pass(), format!("rank/count per degree 0..6: {}", counts.join(" ")))
}

fn c8() -> Outcome {
    let mut ok = true;
    let mut details = Vec::new();
    for conv in [Convention::default(), working_convention()] {
        let r = structural_checks(&PForm::new(conv.clone()), SEED, 200).expect("structural");
        ok &= r.pass() && r.alpha_pairs == 24;
        details.push(format!(
            "sign={} form={}: {} samples, alpha {}/{}",
            sign_label(&conv),
            form_label(&conv),
            r.samples,
            r.alpha_pairs - r.alpha_violations,
            r.alpha_pairs
        ));
    }
    pass_if(ok, details.join("; "))
}

fn c9() -> Outcome {
    let conv = working_convention();
    let st = build_st_catalog().expect("catalog");
    let r = rank16_check(&TensorAlgebra::new(conv.clone()), &st, 6);
    pass_if(
        r.independent() && r.count == 70,
        format!(
            "{} products of degree <= 6, rank {} (sign={} form={})",
            r.count,
            r.rank,
            sign_label(&conv),
            form_label(&conv)
        ),
    )
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { id: 1, title: "commutator table", limit: Duration::from_secs(1), run: c1 },
        Criterion { id: 2, title: "consistency", limit: Duration::from_secs(30), run: c2 },
        Criterion { id: 3, title: "invariance", limit: Duration::from_secs(30), run: c3 },
        Criterion { id: 4, title: "identity suite", limit: Duration::from_secs(120), run: c4 },
        Criterion { id: 5, title: "generator theorem", limit: Duration::from_secs(120), run: c5 },
        Criterion { id: 6, title: "invariant dimensions", limit: Duration::from_secs(300), run: c6 },
        Criterion { id: 7, title: "basis independence", limit: Duration::from_secs(600), run: c7 },
        Criterion { id: 8, title: "structural properties", limit: Duration::from_secs(60), run: c8 },
        Criterion { id: 9, title: "rank-16 truncation", limit: Duration::from_secs(600), run: c9 },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let within = elapsed <= c.limit;
        let (word, detail) = match &outcome {
            Outcome::Pass(d) => ("PASS", d.clone()),
            Outcome::Fail(d) => ("FAIL", d.clone()),
            Outcome::Finding(d) => ("FAIL (documented finding)", d.clone()),
        };
        if matches!(outcome, Outcome::Fail(_)) {
            failed += 1;
        }
        let timing = if within { "" } else { " over time budget" };
        println!(
            "criterion {} [{}]: {word} in {:.2?} (limit {:?}){timing}: {detail}",
            c.id, c.title, elapsed, c.limit
        );
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
