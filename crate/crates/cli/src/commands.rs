use std::fmt::Write as _;
use std::time::{Duration, Instant};

use anyhow::{bail, Context};
use serde_json::{json, Value};
use zsum_core::cache::{CacheRecord, ResultsCache};
use zsum_core::extremal::{ConjectureReport, ConjectureStatus};
use zsum_core::sumset::is_prime;
use zsum_core::{
    canonicalize, compute_f, compute_h, scan_conjecture, sums_all, sums_exact, verify_theorem,
    zero_sum_witness, Budget, ExtremalKind, ExtremalResult, Seq, TheoremId, VerificationReport,
    VerifyParams,
};

use crate::output::{opt, Report, Status};

fn ms(d: Duration) -> u64 {
    d.as_millis() as u64
}

fn seq_json(s: &Seq) -> Value {
    json!({ "text": s.to_string(), "mult": s.to_mult_text() })
}

pub fn check(text: &str, n: Option<u32>, m: Option<usize>) -> anyhow::Result<Report> {
    let start = Instant::now();
    let s = Seq::parse(text, n)?;
    let m = m.unwrap_or(s.modulus() as usize);
    let witness = zero_sum_witness(&s, m)?.map(|w| w.sub);
    let n = s.modulus();
    let human = match &witness {
        Some(w) => format!("S = {s}\nzero-sum of length {m}: {w}\n"),
        None => format!("S = {s}\nno zero-sum of length {m}\n"),
    };
    Ok(Report {
        command: "check",
        inputs: json!({ "n": n, "m": m, "sequence": seq_json(&s) }),
        result: json!({
            "zero_sum": witness.is_some(),
            "witness": witness.as_ref().map(seq_json),
        }),
        exact: true,
        elapsed_ms: ms(start.elapsed()),
        human,
        csv_header: vec!["n", "m", "sequence", "zero_sum", "witness"],
        csv_rows: vec![vec![
            n.to_string(),
            m.to_string(),
            s.to_mult_text(),
            witness.is_some().to_string(),
            opt(witness.as_ref().map(Seq::to_mult_text)),
        ]],
        status: if witness.is_some() {
            Status::Ok
        } else {
            Status::False
        },
    })
}

pub fn extremal(
    kind: ExtremalKind,
    n: u32,
    k: u32,
    budget: Budget,
    cache: Option<&ResultsCache>,
) -> anyhow::Result<Report> {
    let start = Instant::now();
    let cached = match cache {
        Some(c) => c.lookup(kind, n, k)?,
        None => None,
    };
    let (r, source) = match cached {
        Some(rec) => (rec.to_result()?, "cache"),
        None => {
            let r = match kind {
                ExtremalKind::F => compute_f(n, k, budget)?,
                ExtremalKind::H => compute_h(n, k, budget)?,
            };
            if let Some(c) = cache {
                c.append(&CacheRecord::from_result(&r))
                    .context("writing the results cache")?;
            }
            (r, "search")
        }
    };
    Ok(extremal_report(&r, source, ms(start.elapsed())))
}

fn extremal_report(r: &ExtremalResult, source: &str, elapsed_ms: u64) -> Report {
    let checks = r.bound_checks();
    let violated: Vec<&str> = checks
        .iter()
        .filter(|c| !c.holds)
        .map(|c| c.name.as_str())
        .collect();
    let mut human = String::new();
    let relation = match (r.exact, r.kind) {
        (true, _) => "=",
        (false, ExtremalKind::F) => "<=",
        (false, ExtremalKind::H) => ">=",
    };
    let _ = writeln!(human, "{}({},{}) {relation} {}", r.kind, r.n, r.k, r.value);
    match &r.witness {
        Some(w) => {
            let _ = writeln!(human, "witness: {w} (length {})", w.len());
        }
        None if r.exact => {
            let _ = writeln!(human, "witness: none needed");
        }
        None => {}
    }
    if !r.exact {
        let _ = writeln!(human, "partial: budget exhausted");
    }
    for c in &violated {
        let _ = writeln!(human, "FINDING: exact value violates the stated bound {c}");
    }
    let _ = writeln!(human, "{} nodes examined ({source})", r.sequences_examined);
    let status = if !r.exact {
        Status::Partial
    } else if !violated.is_empty() {
        Status::Finding
    } else {
        Status::Ok
    };
    Report {
        command: match r.kind {
            ExtremalKind::F => "f",
            ExtremalKind::H => "h",
        },
        inputs: json!({ "n": r.n, "k": r.k }),
        result: json!({
            "value": r.value,
            "witness": r.witness.as_ref().map(seq_json),
            "sequences_examined": r.sequences_examined,
            "bound_checks": checks,
        }),
        exact: r.exact,
        elapsed_ms,
        human,
        csv_header: vec![
            "kind",
            "n",
            "k",
            "value",
            "exact",
            "witness",
            "sequences_examined",
            "source",
        ],
        csv_rows: vec![vec![
            r.kind.to_string(),
            r.n.to_string(),
            r.k.to_string(),
            r.value.to_string(),
            r.exact.to_string(),
            opt(r.witness.as_ref().map(Seq::to_mult_text)),
            r.sequences_examined.to_string(),
            source.to_string(),
        ]],
        status,
    }
}

/// Smallest modulus with a nonempty case for `theorem`.
fn smallest_modulus(theorem: TheoremId) -> u32 {
    match theorem {
        TheoremId::Egz | TheoremId::T23 => 2,
        _ => 3,
    }
}

fn needs_prime(theorem: TheoremId) -> bool {
    matches!(
        theorem,
        TheoremId::T22 | TheoremId::L24 | TheoremId::T31 | TheoremId::T32
    )
}

pub fn moduli_for(
    theorem: TheoremId,
    n: Option<u32>,
    max_n: Option<u32>,
) -> anyhow::Result<Vec<u32>> {
    match (n, max_n) {
        (Some(n), None) => Ok(vec![n]),
        (None, Some(max)) => {
            let lo = smallest_modulus(theorem);
            if max < lo {
                bail!("--max-n must be at least {lo} for {theorem}");
            }
            Ok((lo..=max)
                .filter(|&m| !needs_prime(theorem) || is_prime(m))
                .collect())
        }
        (Some(_), Some(_)) => bail!("give either --n/--p or --max-n, not both"),
        (None, None) => bail!("give a modulus with --n/--p or a range with --max-n"),
    }
}

pub fn verify(
    theorem: TheoremId,
    moduli: Vec<u32>,
    k: Option<u32>,
    budget: Budget,
) -> anyhow::Result<Report> {
    let mut params = VerifyParams::new(moduli.clone()).with_budget(budget);
    params.k = k;
    let r = verify_theorem(theorem, &params)?;
    Ok(verify_report(&r, &moduli, k))
}

fn verify_report(r: &VerificationReport, moduli: &[u32], k: Option<u32>) -> Report {
    let mut human = String::new();
    for c in &r.cases {
        let _ = writeln!(
            human,
            "{} n={} k={} [{}]: {} instances, {} findings{}",
            r.theorem,
            c.modulus,
            opt(c.k),
            c.label,
            c.instances,
            c.findings,
            if c.complete { "" } else { " (incomplete)" }
        );
    }
    for f in &r.findings {
        let _ = writeln!(
            human,
            "FINDING n={} k={}: S = {} ({}): {}",
            f.modulus,
            opt(f.k),
            f.sequence,
            f.sequence.to_mult_text(),
            f.detail
        );
    }
    let status = if r.finding_count > 0 {
        let _ = writeln!(human, "{}: {} findings", r.theorem, r.finding_count);
        Status::Finding
    } else if !r.exact {
        let _ = writeln!(human, "{}: partial, no findings so far", r.theorem);
        Status::Partial
    } else {
        let _ = writeln!(
            human,
            "{}: verified on {} instances",
            r.theorem,
            r.instances()
        );
        Status::Ok
    };
    let findings: Vec<Value> = r
        .findings
        .iter()
        .map(|f| {
            json!({
                "n": f.modulus,
                "k": f.k,
                "sequence": seq_json(&f.sequence),
                "detail": f.detail,
            })
        })
        .collect();
    Report {
        command: "verify",
        inputs: json!({ "theorem": r.theorem, "moduli": moduli, "k": k }),
        result: json!({
            "verified": r.verified(),
            "instances": r.instances(),
            "finding_count": r.finding_count,
            "cases": r.cases,
            "findings": findings,
        }),
        exact: r.exact,
        elapsed_ms: r.elapsed_ms,
        human,
        csv_header: vec![
            "theorem",
            "n",
            "k",
            "label",
            "instances",
            "findings",
            "complete",
        ],
        csv_rows: r
            .cases
            .iter()
            .map(|c| {
                vec![
                    r.theorem.to_string(),
                    c.modulus.to_string(),
                    opt(c.k),
                    c.label.clone(),
                    c.instances.to_string(),
                    c.findings.to_string(),
                    c.complete.to_string(),
                ]
            })
            .collect(),
        status,
    }
}

fn status_name(s: ConjectureStatus) -> &'static str {
    match s {
        ConjectureStatus::Holds => "holds",
        ConjectureStatus::Counterexample => "counterexample",
        ConjectureStatus::OutsideHolds => "outside-holds",
        ConjectureStatus::OutsideFails => "outside-fails",
        ConjectureStatus::Unknown => "unknown",
    }
}

pub fn scan(max_n: u32, budget: Budget) -> anyhow::Result<Report> {
    let r = scan_conjecture(max_n, budget)?;
    Ok(scan_report(&r))
}

fn scan_report(r: &ConjectureReport) -> Report {
    let mut human = String::from("   n   k   p  range  h(n,k)  status\n");
    for row in &r.rows {
        let h = match (row.h, row.exact) {
            (Some(h), true) => h.to_string(),
            (Some(h), false) => format!(">={h}"),
            (None, _) => "?".into(),
        };
        let _ = writeln!(
            human,
            "{:>4} {:>3} {:>3}  {:<5}  {:>6}  {}",
            row.n,
            row.k,
            row.smallest_prime,
            if row.in_range { "yes" } else { "no" },
            h,
            status_name(row.status)
        );
    }
    let counter = r.counterexamples();
    for row in &counter {
        let _ = writeln!(
            human,
            "COUNTEREXAMPLE n={} k={}: h = {} <= k, witness {}",
            row.n,
            row.k,
            opt(row.h),
            opt(row.witness.as_ref())
        );
    }
    let status = if !counter.is_empty() {
        Status::Finding
    } else if !r.exact {
        let _ = writeln!(human, "partial: {} rows unsettled", r.unsettled().len());
        Status::Partial
    } else {
        let _ = writeln!(human, "no counterexample for n <= {}", r.max_n);
        Status::Ok
    };
    let rows: Vec<Value> = r
        .rows
        .iter()
        .map(|row| {
            json!({
                "n": row.n,
                "k": row.k,
                "smallest_prime": row.smallest_prime,
                "in_range": row.in_range,
                "h": row.h,
                "exact": row.exact,
                "status": row.status,
                "witness": row.witness.as_ref().map(seq_json),
            })
        })
        .collect();
    Report {
        command: "scan",
        inputs: json!({ "max_n": r.max_n }),
        result: json!({
            "rows": rows,
            "counterexamples": counter.iter().map(|row| json!([row.n, row.k])).collect::<Vec<_>>(),
        }),
        exact: r.exact,
        elapsed_ms: r.elapsed_ms,
        human,
        csv_header: vec![
            "n",
            "k",
            "smallest_prime",
            "in_range",
            "h",
            "exact",
            "status",
            "witness",
        ],
        csv_rows: r
            .rows
            .iter()
            .map(|row| {
                vec![
                    row.n.to_string(),
                    row.k.to_string(),
                    row.smallest_prime.to_string(),
                    row.in_range.to_string(),
                    opt(row.h),
                    row.exact.to_string(),
                    status_name(row.status).to_string(),
                    opt(row.witness.as_ref().map(Seq::to_mult_text)),
                ]
            })
            .collect(),
        status,
    }
}

pub fn canon(text: &str, n: Option<u32>) -> anyhow::Result<Report> {
    let start = Instant::now();
    let s = Seq::parse(text, n)?;
    let (c, t) = canonicalize(&s);
    Ok(Report {
        command: "canon",
        inputs: json!({ "n": s.modulus(), "sequence": seq_json(&s) }),
        result: json!({
            "canonical": seq_json(&c),
            "transform": { "c": t.c(), "x": t.x().value() },
        }),
        exact: true,
        elapsed_ms: ms(start.elapsed()),
        human: format!("S = {s}\ncanonical: {c}\ntransform: {t}\n"),
        csv_header: vec!["n", "sequence", "canonical", "c", "x"],
        csv_rows: vec![vec![
            s.modulus().to_string(),
            s.to_mult_text(),
            c.to_mult_text(),
            t.c().to_string(),
            t.x().value().to_string(),
        ]],
        status: Status::Ok,
    })
}

pub fn sums(text: &str, n: Option<u32>, k: Option<usize>) -> anyhow::Result<Report> {
    let start = Instant::now();
    let s = Seq::parse(text, n)?;
    let set = match k {
        Some(k) => sums_exact(&s, k)?,
        None => sums_all(&s)?,
    };
    let label = match k {
        Some(k) => format!("sums of {k}-term subsequences"),
        None => "sums of nonempty subsequences".to_string(),
    };
    Ok(Report {
        command: "sums",
        inputs: json!({ "n": s.modulus(), "k": k, "sequence": seq_json(&s) }),
        result: json!({ "sums": set.values() }),
        exact: true,
        elapsed_ms: ms(start.elapsed()),
        human: format!("S = {s}\n{label}: {set}\n"),
        csv_header: vec!["n", "k", "sequence", "sums"],
        csv_rows: vec![vec![
            s.modulus().to_string(),
            opt(k),
            s.to_mult_text(),
            set.to_string(),
        ]],
        status: Status::Ok,
    })
}
