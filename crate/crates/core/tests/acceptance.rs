//! Acceptance run: one `[PASS]` / `[FAIL]` line per criterion.
//!
//! `cargo test -p zsum-core --test acceptance` runs criteria 1-10 and the
//! two stretch runs. Stretch runs may end partial under their budgets.
//! Exits nonzero if any criterion or stretch run fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use zsum_core::extremal::with_workers;
use zsum_core::{
    compute_f, compute_h, reach_table, verify_theorem, Budget, ExtremalKind, ExtremalResult, Seq,
    TheoremId, VerificationReport, VerifyParams,
};

struct Outcome {
    pass: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome {
        pass: true,
        detail: detail.into(),
    }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome {
        pass: false,
        detail: detail.into(),
    }
}

fn minutes(m: u64) -> Duration {
    Duration::from_secs(60 * m)
}

fn summarize(r: &VerificationReport) -> String {
    let first = r
        .findings
        .first()
        .map(|f| {
            format!(
                "; first finding p={} k={:?} S={} ({})",
                f.modulus, f.k, f.sequence, f.detail
            )
        })
        .unwrap_or_default();
    format!(
        "instances={} findings={} exact={}{}",
        r.instances(),
        r.finding_count,
        r.exact,
        first
    )
}

fn verified(r: &VerificationReport) -> Outcome {
    if r.verified() {
        pass(summarize(r))
    } else {
        fail(summarize(r))
    }
}

fn exhaustive(theorem: TheoremId, moduli: Vec<u32>, limit: Duration) -> VerificationReport {
    let params = VerifyParams::new(moduli).with_budget(Budget::of(limit));
    verify_theorem(theorem, &params).expect("valid parameters")
}

/// `(n, k, expected)` rows of the `f` table.
fn f_table() -> Vec<(u32, u32, u32)> {
    let mut rows = Vec::new();
    for n in 5..=10 {
        rows.push((n, 2, 2 * n - 1));
        rows.push((n, 3, 2 * n - 2));
        rows.push((n, 4, 2 * n - 3));
    }
    for n in [5, 7, 9] {
        rows.push((n, n, n));
    }
    for n in [6, 8] {
        rows.push((n, n, n + 1));
    }
    for n in 5..=9u32 {
        for k in 1..n {
            if 2 * k > n + 2 {
                rows.push((n, k, n + 2));
            }
        }
    }
    rows.sort_unstable();
    rows.dedup();
    rows
}

fn h_table() -> Vec<(u32, u32, u32)> {
    let mut rows = Vec::new();
    for n in 5..=7 {
        rows.push((n, n - 2, n - 1));
        rows.push((n, n - 3, n - 1));
    }
    rows
}

fn compute_rows(
    rows: &[(u32, u32, u32)],
    compute: fn(u32, u32, Budget) -> zsum_core::Result<ExtremalResult>,
) -> Vec<ExtremalResult> {
    rows.iter()
        .map(|&(n, k, _)| compute(n, k, Budget::unlimited()).expect("valid range"))
        .collect()
}

/// Independent check that `w` has exactly `k` distinct residues and no
/// `n`-term zero-sum, by enumerating index subsets.
fn witness_is_bad_sequence(w: &Seq, n: u32, k: u32) -> bool {
    let values = w.sorted_values();
    w.distinct_count() == k as usize
        && brute_force_rows(&values, n)
            .get(n as usize)
            .is_none_or(|row| row & 1 == 0)
}

fn check_values(rows: &[(u32, u32, u32)], results: &[ExtremalResult]) -> Outcome {
    let mut bad = Vec::new();
    let mut bound_notes = Vec::new();
    for (&(n, k, want), r) in rows.iter().zip(results) {
        if !r.exact || r.value != want {
            bad.push(format!(
                "({n},{k}): got {} exact={}, want {want}",
                r.value, r.exact
            ));
        }
        let witness_ok = match (r.kind, &r.witness) {
            (ExtremalKind::F, Some(w)) => {
                w.len() + 1 == r.value as usize && witness_is_bad_sequence(w, n, k)
            }
            (ExtremalKind::F, None) => r.value == k,
            (ExtremalKind::H, Some(w)) => {
                w.len() == (n + k) as usize
                    && w.height() == r.value
                    && witness_is_bad_sequence(w, n, w.distinct_count() as u32)
            }
            (ExtremalKind::H, None) => false,
        };
        if !witness_ok {
            bad.push(format!(
                "({n},{k}): witness {:?} does not certify the value",
                r.witness
            ));
        }
        for c in r.bound_checks().into_iter().filter(|c| !c.holds) {
            bound_notes.push(format!("({n},{k}) value {} violates {}", r.value, c.name));
        }
    }
    let notes = if bound_notes.is_empty() {
        String::new()
    } else {
        format!(
            "; stated bounds violated by exact values: {}",
            bound_notes.join(", ")
        )
    };
    if bad.is_empty() {
        pass(format!(
            "{} values match, witnesses certified{notes}",
            rows.len()
        ))
    } else {
        fail(format!("{}{notes}", bad.join("; ")))
    }
}

fn criterion_1() -> Outcome {
    verified(&exhaustive(TheoremId::Egz, (2..=9).collect(), minutes(2)))
}

fn criterion_2() -> Outcome {
    let rows = f_table();
    check_values(&rows, &compute_rows(&rows, compute_f))
}

fn criterion_3() -> Outcome {
    let rows = h_table();
    check_values(&rows, &compute_rows(&rows, compute_h))
}

fn criterion_4() -> Outcome {
    verified(&exhaustive(TheoremId::T22, vec![5, 7, 11], minutes(15)))
}

fn criterion_5() -> Outcome {
    verified(&exhaustive(TheoremId::T23, (5..=13).collect(), minutes(5)))
}

fn criterion_6() -> Outcome {
    let mut reports = Vec::new();
    for p in [5, 7] {
        for k in [2, 3] {
            let params = VerifyParams::new(vec![p])
                .with_k(k)
                .with_budget(Budget::of(minutes(2)));
            reports.push(verify_theorem(TheoremId::T31, &params).expect("valid parameters"));
        }
    }
    let ok = reports.iter().all(VerificationReport::verified);
    let detail: Vec<String> = reports.iter().map(summarize).collect();
    Outcome {
        pass: ok,
        detail: detail.join(" | "),
    }
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let budget = minutes(20);
    let mut parts = Vec::new();
    let mut ok = true;
    for (p, k) in [(7, 3), (11, 4), (11, 5)] {
        let remaining = budget.saturating_sub(start.elapsed());
        let params = VerifyParams::new(vec![p])
            .with_k(k)
            .with_budget(Budget::of(remaining));
        let r = verify_theorem(TheoremId::T32, &params).expect("valid parameters");
        ok &= r.verified();
        parts.push(format!("p={p} k={k}: {}", summarize(&r)));
    }
    Outcome {
        pass: ok,
        detail: parts.join(" | "),
    }
}

fn criterion_8() -> Outcome {
    // normal forms for p in {5,7,11,13}; claim tuples run for p >= 11
    verified(&exhaustive(
        TheoremId::L24,
        vec![5, 7, 11, 13, 17],
        minutes(2),
    ))
}

/// All `2^len` subsequences, bucketed by length.
fn brute_force_rows(values: &[u32], n: u32) -> Vec<u64> {
    let len = values.len();
    let mut rows = vec![0u64; len + 1];
    for mask in 0u32..1 << len {
        let mut sum = 0;
        for (i, v) in values.iter().enumerate() {
            if mask >> i & 1 == 1 {
                sum = (sum + v) % n;
            }
        }
        rows[mask.count_ones() as usize] |= 1 << sum;
    }
    rows
}

fn criterion_9() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed_0009);
    for case in 0..1000 {
        let n = rng.gen_range(2..=13);
        let len = rng.gen_range(0..=14);
        let values: Vec<u32> = (0..len).map(|_| rng.gen_range(0..n)).collect();
        let table = reach_table(&Seq::from_values(n, &values).unwrap());
        let expected = brute_force_rows(&values, n);
        for (j, &row) in expected.iter().enumerate() {
            if table.row(j).mask() != row {
                return fail(format!("case {case}: n={n} {values:?} row {j} differs"));
            }
        }
        if table.row(len + 1).mask() != 0 {
            return fail(format!("case {case}: row beyond the length is nonempty"));
        }
    }
    pass("1000 random sequences agree")
}

fn result_fields(results: &[ExtremalResult]) -> String {
    let rows: Vec<serde_json::Value> = results
        .iter()
        .map(|r| {
            let mut v = serde_json::to_value(r).unwrap();
            v.as_object_mut().unwrap().remove("elapsed_ms");
            v
        })
        .collect();
    serde_json::to_string(&rows).unwrap()
}

fn report_fields(r: &VerificationReport) -> String {
    let mut v = serde_json::to_value(r).unwrap();
    v.as_object_mut().unwrap().remove("elapsed_ms");
    serde_json::to_string(&v).unwrap()
}

fn criterion_10() -> Outcome {
    let run = |workers: usize| {
        with_workers(workers, || {
            let f = result_fields(&compute_rows(&f_table(), compute_f));
            let h = result_fields(&compute_rows(&h_table(), compute_h));
            let t22 = report_fields(&exhaustive(TheoremId::T22, vec![5, 7, 11], minutes(15)));
            (f, h, t22)
        })
        .expect("thread pool")
    };
    let one = run(1);
    let four = run(4);
    let mut diffs = Vec::new();
    if one.0 != four.0 {
        diffs.push("f values");
    }
    if one.1 != four.1 {
        diffs.push("h values");
    }
    if one.2 != four.2 {
        diffs.push("exhaustive h-bound report");
    }
    if diffs.is_empty() {
        pass(format!(
            "workers 1 and 4 agree ({} bytes of result fields)",
            one.0.len() + one.1.len() + one.2.len()
        ))
    } else {
        fail(format!("differs: {}", diffs.join(", ")))
    }
}

fn stretch_t31() -> Outcome {
    let params = VerifyParams::new(vec![11]).with_budget(Budget::of(minutes(30)));
    let r = verify_theorem(TheoremId::T31, &params).expect("valid parameters");
    if !r.exact && r.finding_count == 0 {
        return Outcome {
            pass: true,
            detail: format!("partial: {}", summarize(&r)),
        };
    }
    verified(&r)
}

fn stretch_f_12_5() -> Outcome {
    let r = compute_f(12, 5, Budget::of(minutes(60))).expect("valid range");
    match (r.exact, r.value) {
        (true, 19) => pass("f(12,5) = 19"),
        (true, v) => fail(format!("f(12,5) = {v}, expected 19")),
        (false, v) => pass(format!(
            "partial: f(12,5) <= {v} after {} nodes",
            r.sequences_examined
        )),
    }
}

type Criterion = (&'static str, &'static str, Duration, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        ("1", "EGZ exhaustive, n = 2..9", minutes(2), criterion_1),
        ("2", "f table", minutes(10), criterion_2),
        (
            "3",
            "h(n,n-2) = h(n,n-3) = n-1, n = 5..7",
            minutes(5),
            criterion_3,
        ),
        (
            "4",
            "height bound h >= k+1, p = 5,7,11",
            minutes(15),
            criterion_4,
        ),
        (
            "5",
            "zero-free normal form, n = 5..13",
            minutes(5),
            criterion_5,
        ),
        (
            "6",
            "two-block structure, p = 5,7, k = 2,3",
            minutes(2),
            criterion_6,
        ),
        (
            "7",
            "distinct-residue threshold, p = 7 (k=3), 11 (k=4,5)",
            minutes(20),
            criterion_7,
        ),
        (
            "8",
            "normal-form targets and subset-sum claim",
            minutes(2),
            criterion_8,
        ),
        (
            "9",
            "reachability table vs brute force",
            minutes(1),
            criterion_9,
        ),
        (
            "10",
            "determinism across worker counts",
            minutes(60),
            criterion_10,
        ),
    ];
    let mut failed = 0;
    for (id, name, limit, run) in criteria {
        let start = Instant::now();
        let mut outcome = run();
        let elapsed = start.elapsed();
        if elapsed > limit {
            outcome.pass = false;
            outcome.detail = format!("over time limit {limit:?}; {}", outcome.detail);
        }
        let tag = if outcome.pass { "PASS" } else { "FAIL" };
        failed += usize::from(!outcome.pass);
        println!(
            "[{tag}] {id} {name} ({:.1}s): {}",
            elapsed.as_secs_f64(),
            outcome.detail
        );
    }
    let stretch: [Criterion; 2] = [
        (
            "6s",
            "two-block structure, p = 11, k = 2..5",
            minutes(30),
            stretch_t31,
        ),
        ("f12", "f(12,5) = 19", minutes(60), stretch_f_12_5),
    ];
    for (id, name, _budget, run) in stretch {
        let start = Instant::now();
        let outcome = run();
        let tag = if outcome.pass { "PASS" } else { "FAIL" };
        failed += usize::from(!outcome.pass);
        println!(
            "[{tag}] {id} {name} ({:.1}s): {}",
            start.elapsed().as_secs_f64(),
            outcome.detail
        );
    }
    if failed == 0 {
        println!("all criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("{failed} failed");
        ExitCode::FAILURE
    }
}
