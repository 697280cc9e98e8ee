//! Exhaustive verification of the structural statements over small moduli.
//!
//! Each statement is checked on every instance of its hypothesis (up to the
//! symmetry the statement is invariant under). A finding is an instance
//! where the checker's conclusion fails; findings are critical.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::enumerate::{EnumSpec, Plan};
use super::Budget;
use crate::error::{Error, Result};
use crate::structure::{
    check_3_2, check_h_bound, check_repeated_element, claim_subset, decompose_3_1,
    find_subseq_with_sum, lemma_by_table, normal_form_2_3, two_block_k_max, NormalForm23,
};
use crate::sumset::{is_prime, ReachTable};
use crate::zerosum::has_zero_sum_of_length;
use crate::zmod::{check_modulus, Residue, Seq};

/// Findings kept in a report; the total is always counted.
pub const MAX_FINDINGS: usize = 50;

/// Largest tail length of the subset-sum claim cases. Claim tuples have
/// values up to `CLAIM_MAX_LEN + 1`, so they run only for larger moduli.
const CLAIM_MAX_LEN: u32 = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TheoremId {
    /// Every sequence of length `2n - 1` has an `n`-term zero-sum.
    Egz,
    /// Zero-free of length `n - k`, `k <= (n-1)/2`: some residue repeats `n - 2k + 1` times.
    T21,
    /// No `p`-term zero-sum in length `p + k`: height at least `k + 1`.
    T22,
    /// Zero-free of length `n - k`, `k <= (n+1)/3`: affine normal form.
    T23,
    /// Subsequence sums of the normal form cover the target range.
    L24,
    /// Two-block structure of length `2p - k` sequences without a `p`-term zero-sum.
    T31,
    /// Enough distinct residues in length `2p - k` force a `p`-term zero-sum.
    T32,
}

impl TheoremId {
    pub const ALL: [TheoremId; 7] = [
        TheoremId::Egz,
        TheoremId::T21,
        TheoremId::T22,
        TheoremId::T23,
        TheoremId::L24,
        TheoremId::T31,
        TheoremId::T32,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::Egz => "egz",
            TheoremId::T21 => "t21",
            TheoremId::T22 => "t22",
            TheoremId::T23 => "t23",
            TheoremId::L24 => "l24",
            TheoremId::T31 => "t31",
            TheoremId::T32 => "t32",
        }
    }

    fn needs_prime(self) -> bool {
        matches!(
            self,
            TheoremId::T22 | TheoremId::L24 | TheoremId::T31 | TheoremId::T32
        )
    }

    fn needs_odd(self) -> bool {
        matches!(self, TheoremId::L24 | TheoremId::T31 | TheoremId::T32)
    }

    /// Values of `k` covered for modulus `n` by default.
    pub fn k_range(self, n: u32) -> Vec<u32> {
        match self {
            TheoremId::Egz => vec![],
            TheoremId::T21 => (1..=(n - 1) / 2).collect(),
            TheoremId::T22 => (1..n.saturating_sub(1)).collect(),
            TheoremId::T23 | TheoremId::L24 => (1..=(n + 1) / 3).collect(),
            TheoremId::T31 | TheoremId::T32 => (2..=two_block_k_max(n)).collect(),
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase();
        TheoremId::ALL
            .into_iter()
            .find(|t| t.name() == key)
            .ok_or_else(|| {
                Error::Parse(format!(
                    "unknown theorem '{s}' (expected one of egz, t21, t22, t23, l24, t31, t32)"
                ))
            })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyParams {
    pub moduli: Vec<u32>,
    /// Restricts to one `k`; all admissible `k` otherwise.
    pub k: Option<u32>,
    pub budget: Budget,
}

impl VerifyParams {
    pub fn new(moduli: Vec<u32>) -> Self {
        VerifyParams {
            moduli,
            k: None,
            budget: Budget::unlimited(),
        }
    }

    pub fn with_k(mut self, k: u32) -> Self {
        self.k = Some(k);
        self
    }

    pub fn with_budget(mut self, budget: Budget) -> Self {
        self.budget = budget;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseSummary {
    pub modulus: u32,
    pub k: Option<u32>,
    pub label: String,
    pub instances: u64,
    pub findings: u64,
    pub complete: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    pub theorem: TheoremId,
    pub modulus: u32,
    pub k: Option<u32>,
    pub sequence: Seq,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub theorem: TheoremId,
    pub cases: Vec<CaseSummary>,
    /// The first [`MAX_FINDINGS`] findings in case order.
    pub findings: Vec<Finding>,
    pub finding_count: u64,
    pub exact: bool,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn instances(&self) -> u64 {
        self.cases.iter().map(|c| c.instances).sum()
    }

    /// Every case completed without findings.
    pub fn verified(&self) -> bool {
        self.exact && self.finding_count == 0
    }
}

/// Outcome of running a checker over one enumeration.
struct Sweep {
    instances: u64,
    findings: Vec<(Seq, String)>,
    finding_count: u64,
    complete: bool,
}

fn sweep<F>(plan: &Plan, check: F) -> Sweep
where
    F: Fn(&Seq) -> Option<String> + Sync,
{
    let n = plan.spec.modulus;
    let parts: Vec<Sweep> = plan
        .partitions()
        .par_iter()
        .map(|prefix| {
            let mut e = plan.enumerator(prefix);
            let mut out = Sweep {
                instances: 0,
                findings: Vec::new(),
                finding_count: 0,
                complete: true,
            };
            while let Some(mult) = e.next_mult() {
                let s = Seq::from_multiplicities(n, mult.to_vec()).expect("valid modulus");
                out.instances += 1;
                if let Some(detail) = check(&s) {
                    out.finding_count += 1;
                    if out.findings.len() < MAX_FINDINGS {
                        out.findings.push((s, detail));
                    }
                }
            }
            out.complete = !e.timed_out();
            out
        })
        .collect();
    let mut total = Sweep {
        instances: 0,
        findings: Vec::new(),
        finding_count: 0,
        complete: true,
    };
    for p in parts {
        total.instances += p.instances;
        total.finding_count += p.finding_count;
        total.complete &= p.complete;
        let room = MAX_FINDINGS - total.findings.len();
        total.findings.extend(p.findings.into_iter().take(room));
    }
    total
}

fn describe(e: &Error) -> String {
    format!("checker error: {e}")
}

struct Runner {
    theorem: TheoremId,
    start: Instant,
    budget: Budget,
    cases: Vec<CaseSummary>,
    findings: Vec<Finding>,
    finding_count: u64,
}

impl Runner {
    fn deadline(&self) -> Option<Instant> {
        self.budget.deadline(self.start)
    }

    fn out_of_time(&self) -> bool {
        self.deadline().is_some_and(|d| Instant::now() >= d)
    }

    fn record(&mut self, modulus: u32, k: Option<u32>, label: String, sweep: Sweep) {
        self.finding_count += sweep.finding_count;
        for (sequence, detail) in sweep.findings {
            if self.findings.len() < MAX_FINDINGS {
                self.findings.push(Finding {
                    theorem: self.theorem,
                    modulus,
                    k,
                    sequence,
                    detail,
                });
            }
        }
        self.cases.push(CaseSummary {
            modulus,
            k,
            label,
            instances: sweep.instances,
            findings: sweep.finding_count,
            complete: sweep.complete,
        });
    }

    fn run<F>(
        &mut self,
        modulus: u32,
        k: Option<u32>,
        label: String,
        spec: EnumSpec,
        check: F,
    ) -> Result<()>
    where
        F: Fn(&Seq) -> Option<String> + Sync,
    {
        if self.out_of_time() {
            self.record(modulus, k, label, skipped());
            return Ok(());
        }
        let symmetry = spec.symmetry();
        let mut plan = Plan::new(spec, symmetry)?;
        plan.deadline = self.deadline();
        let result = sweep(&plan, check);
        self.record(modulus, k, label, result);
        Ok(())
    }
}

fn skipped() -> Sweep {
    Sweep {
        instances: 0,
        findings: Vec::new(),
        finding_count: 0,
        complete: false,
    }
}

fn validate(theorem: TheoremId, params: &VerifyParams) -> Result<()> {
    if params.moduli.is_empty() {
        return Err(Error::InvalidSpec("no moduli given".into()));
    }
    for &n in &params.moduli {
        check_modulus(n)?;
        if theorem.needs_prime() && !is_prime(n) {
            return Err(Error::NotPrime(n));
        }
        if theorem.needs_odd() && n == 2 {
            return Err(Error::HypothesisNotMet(format!(
                "{theorem} needs an odd prime"
            )));
        }
        if let Some(k) = params.k {
            if theorem == TheoremId::Egz {
                return Err(Error::InvalidSpec("egz takes no k".into()));
            }
            if !theorem.k_range(n).contains(&k) {
                return Err(Error::HypothesisNotMet(format!(
                    "k={k} is outside the range of {theorem} for n={n}"
                )));
            }
        }
    }
    Ok(())
}

/// Checks `theorem` exhaustively for every modulus (and admissible `k`) in
/// `params`.
pub fn verify_theorem(theorem: TheoremId, params: &VerifyParams) -> Result<VerificationReport> {
    validate(theorem, params)?;
    let mut runner = Runner {
        theorem,
        start: Instant::now(),
        budget: params.budget,
        cases: Vec::new(),
        findings: Vec::new(),
        finding_count: 0,
    };
    for &n in &params.moduli {
        let ks = match params.k {
            Some(k) => vec![k],
            None => theorem.k_range(n),
        };
        match theorem {
            TheoremId::Egz => {
                let len = 2 * n as usize - 1;
                runner.run(
                    n,
                    None,
                    format!("length {len}"),
                    EnumSpec::new(n, len).canonical(),
                    |s| match has_zero_sum_of_length(s, n as usize) {
                        Ok(true) => None,
                        Ok(false) => Some(format!("no {n}-term zero-sum")),
                        Err(e) => Some(describe(&e)),
                    },
                )?;
            }
            TheoremId::T21 => {
                for k in ks {
                    let spec = EnumSpec::new(n, (n - k) as usize).zero_free();
                    runner.run(n, Some(k), "zero-free".into(), spec, |s| {
                        match check_repeated_element(s, k) {
                            Ok(Some(_)) => None,
                            Ok(None) => {
                                Some(format!("no residue repeated {} times", n - 2 * k + 1))
                            }
                            Err(e) => Some(describe(&e)),
                        }
                    })?;
                }
            }
            TheoremId::T22 => {
                for k in ks {
                    let spec = EnumSpec::new(n, (n + k) as usize)
                        .forbid_length(n as usize)
                        .canonical();
                    runner.run(n, Some(k), format!("no {n}-term zero-sum"), spec, |s| {
                        match check_h_bound(s, n, k) {
                            Ok(true) => None,
                            Ok(false) => Some(format!("height {} < k + 1", s.height())),
                            Err(e) => Some(describe(&e)),
                        }
                    })?;
                }
            }
            TheoremId::T23 => {
                for k in ks {
                    let spec = EnumSpec::new(n, (n - k) as usize).zero_free();
                    runner.run(n, Some(k), "zero-free".into(), spec, |s| {
                        normal_form_2_3(s, n, k).err().map(|e| describe(&e))
                    })?;
                }
            }
            TheoremId::L24 => {
                for k in ks {
                    if runner.out_of_time() {
                        runner.record(n, Some(k), "normal-form targets".into(), skipped());
                        continue;
                    }
                    let result = sweep_lemma(n, k)?;
                    runner.record(n, Some(k), "normal-form targets".into(), result);
                }
                if params.k.is_none() && n > CLAIM_MAX_LEN + 1 {
                    for len in 1..=CLAIM_MAX_LEN {
                        if runner.out_of_time() {
                            runner.record(n, Some(len), "subset-sum claim".into(), skipped());
                            continue;
                        }
                        let result = sweep_claim(n, len)?;
                        runner.record(n, Some(len), "subset-sum claim".into(), result);
                    }
                }
            }
            TheoremId::T31 => {
                for k in ks {
                    let spec = EnumSpec::new(n, (2 * n - k) as usize)
                        .forbid_length(n as usize)
                        .canonical();
                    runner.run(n, Some(k), format!("no {n}-term zero-sum"), spec, |s| {
                        match decompose_3_1(s, n, k) {
                            Ok(r) if r.holds() => None,
                            Ok(r) => Some(format!(
                                "best blocks {}^{} {}^{} give u+v={} < 2p-2k+2={}",
                                r.a,
                                r.u,
                                r.b,
                                r.v,
                                r.u + r.v,
                                2 * n + 2 - 2 * k
                            )),
                            Err(e) => Some(describe(&e)),
                        }
                    })?;
                }
            }
            TheoremId::T32 => {
                for k in ks {
                    let spec = EnumSpec::new(n, (2 * n - k) as usize)
                        .forbid_length(n as usize)
                        .canonical();
                    runner.run(n, Some(k), format!("no {n}-term zero-sum"), spec, |s| {
                        check_3_2(s, n, k).err().map(|e| match e {
                            Error::ConclusionFailed(_) => format!(
                                "{} distinct residues meet the threshold but no {n}-term zero-sum exists",
                                s.distinct_count()
                            ),
                            other => describe(&other),
                        })
                    })?;
                }
            }
        }
    }
    let exact = runner.cases.iter().all(|c| c.complete);
    Ok(VerificationReport {
        theorem,
        cases: runner.cases,
        findings: runner.findings,
        finding_count: runner.finding_count,
        exact,
        elapsed_ms: runner.start.elapsed().as_millis() as u64,
    })
}

/// Non-decreasing tuples of `len` values in `1..=max_value` with sum at
/// most `max_sum`.
fn bounded_tuples(len: u32, max_value: u32, max_sum: u32) -> Vec<Vec<u32>> {
    fn go(
        len: u32,
        lo: u32,
        max_value: u32,
        budget: u32,
        cur: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if len == 0 {
            out.push(cur.clone());
            return;
        }
        // the remaining `len` values are all >= v
        let mut v = lo;
        while v <= max_value && v * len <= budget {
            cur.push(v);
            go(len - 1, v, max_value, budget - v, cur, out);
            cur.pop();
            v += 1;
        }
    }
    let mut out = Vec::new();
    go(len, 1, max_value, max_sum, &mut Vec::new(), &mut out);
    out
}

/// Every normal form for `(p, k)` and every target `x` in range: the
/// constructed subsequence must be valid, and must exist exactly when the
/// reachability table says so.
fn sweep_lemma(p: u32, k: u32) -> Result<Sweep> {
    let mut out = Sweep {
        instances: 0,
        findings: Vec::new(),
        finding_count: 0,
        complete: true,
    };
    let limit = 2 * k - 2;
    for tail in bounded_tuples(k - 1, p - 1, limit) {
        let nf = NormalForm23::from_tail(p, k, &tail)?;
        let (lo, hi) = crate::structure::lemma_target_range(&nf);
        for bar in lo..=hi.min(p) {
            let x = Residue::new(bar % p, p)?;
            out.instances += 1;
            let detail = match find_subseq_with_sum(&nf, x) {
                Ok(_) if lemma_by_table(&nf, x).is_none() => Some(format!(
                    "target {x}: construction disagrees with the reachability table"
                )),
                Ok(_) => None,
                Err(e) => Some(format!("target {x}: {}", describe(&e))),
            };
            if let Some(d) = detail {
                out.finding_count += 1;
                if out.findings.len() < MAX_FINDINGS {
                    out.findings.push((nf.image(), d));
                }
            }
        }
    }
    Ok(out)
}

/// Subset-sum claim on positive integers: `len` values with sum at most
/// `2 * len` hit `y` or `y + 1` for each `1 <= y <= sum`. Values are taken
/// below `p` so the tuple is also a sequence over `Z_p`.
fn sweep_claim(p: u32, len: u32) -> Result<Sweep> {
    let mut out = Sweep {
        instances: 0,
        findings: Vec::new(),
        finding_count: 0,
        complete: true,
    };
    for bars in bounded_tuples(len, p - 1, 2 * len) {
        let total: u32 = bars.iter().sum();
        // integer subset sums, independent of the construction
        let mut reachable = vec![false; total as usize + 2];
        reachable[0] = true;
        for &b in &bars {
            for s in (b as usize..reachable.len()).rev() {
                reachable[s] |= reachable[s - b as usize];
            }
        }
        let seq = Seq::from_values(p, &bars)?;
        let mod_sums = ReachTable::build(&seq).nonempty_sums();
        for y in 1..=total {
            out.instances += 1;
            let detail = match claim_subset(&bars, y) {
                Some((pick, over)) => {
                    let sum: u32 = pick.iter().sum();
                    let sub_ok =
                        Seq::from_values(p, &pick).is_ok_and(|t| t.is_subsequence_of(&seq));
                    if over > 1 || sum != y + over || !sub_ok {
                        Some(format!("y={y}: bad subset {pick:?}"))
                    } else if !(reachable[y as usize] || reachable[y as usize + 1]) {
                        Some(format!("y={y}: subset found but not reachable"))
                    } else if y < p && !mod_sums.contains(y) && !mod_sums.contains((y + 1) % p) {
                        Some(format!("y={y}: residues {y}, {} both missing", y + 1))
                    } else {
                        None
                    }
                }
                None => Some(format!("y={y}: no subset with sum y or y+1")),
            };
            if let Some(d) = detail {
                out.finding_count += 1;
                if out.findings.len() < MAX_FINDINGS {
                    out.findings.push((seq.clone(), d));
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theorem_ids_parse() {
        for t in TheoremId::ALL {
            assert_eq!(t.name().parse::<TheoremId>().unwrap(), t);
        }
        assert_eq!("T21".parse::<TheoremId>().unwrap(), TheoremId::T21);
        assert!("t99".parse::<TheoremId>().is_err());
    }

    #[test]
    fn small_egz() {
        let r = verify_theorem(TheoremId::Egz, &VerifyParams::new(vec![2, 3, 4, 5])).unwrap();
        assert!(r.verified());
        assert_eq!(r.cases.len(), 4);
        assert!(r.instances() > 0);
    }

    #[test]
    fn small_structural_statements() {
        for t in [
            TheoremId::T21,
            TheoremId::T22,
            TheoremId::T23,
            TheoremId::L24,
            TheoremId::T31,
        ] {
            let moduli = if t.needs_prime() {
                vec![5, 7]
            } else {
                vec![5, 6, 7]
            };
            let r = verify_theorem(t, &VerifyParams::new(moduli)).unwrap();
            assert!(r.verified(), "{t}: {:?}", r.findings.first());
        }
    }

    #[test]
    fn threshold_statement_fails_at_seven() {
        let r = verify_theorem(TheoremId::T32, &VerifyParams::new(vec![7]).with_k(3)).unwrap();
        assert!(r.exact);
        assert!(r.finding_count > 0);
        assert!(!r.verified());
    }

    #[test]
    fn parameter_validation() {
        assert!(matches!(
            verify_theorem(TheoremId::T22, &VerifyParams::new(vec![6])),
            Err(Error::NotPrime(6))
        ));
        assert!(verify_theorem(TheoremId::T31, &VerifyParams::new(vec![2])).is_err());
        assert!(verify_theorem(TheoremId::T21, &VerifyParams::new(vec![7]).with_k(4)).is_err());
        assert!(verify_theorem(TheoremId::Egz, &VerifyParams::new(vec![])).is_err());
    }

    #[test]
    fn tuples_are_bounded() {
        let t = bounded_tuples(2, 4, 4);
        assert_eq!(t, vec![vec![1, 1], vec![1, 2], vec![1, 3], vec![2, 2]]);
        assert_eq!(bounded_tuples(0, 4, 0), vec![Vec::<u32>::new()]);
    }
}
