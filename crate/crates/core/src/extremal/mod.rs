//! Extremal constants `f(n, k)` and `h(n, k)` by exhaustive pruned search,
//! the conjecture scanner, and the theorem verification driver.
//!
//! Searches split the enumeration tree into prefix partitions and hand them
//! to rayon. Results are merged in partition order, and "first witness"
//! searches pick the lowest partition index that produced one, so values,
//! witnesses and node counts do not depend on the number of workers.

mod enumerate;
mod verify;

use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use enumerate::{enumerate, EnumSpec, Enumerator, ZeroSumConstraint};
pub use verify::{
    verify_theorem, CaseSummary, Finding, TheoremId, VerificationReport, VerifyParams,
};

use crate::error::{Error, Result};
use crate::sumset::{is_prime, smallest_prime_divisor};
use crate::zerosum::has_zero_sum_of_length;
use crate::zmod::{canonicalize, check_modulus, Seq};
use enumerate::{Plan, Symmetry};

/// Wall-clock limit for a search; `None` means unlimited.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Budget {
    limit: Option<Duration>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget { limit: None }
    }

    pub fn of(limit: Duration) -> Self {
        Budget { limit: Some(limit) }
    }

    pub fn limit(&self) -> Option<Duration> {
        self.limit
    }

    pub(crate) fn deadline(&self, start: Instant) -> Option<Instant> {
        self.limit.map(|d| start + d)
    }

    /// What is left of this budget after `spent`.
    pub fn remaining(&self, spent: Duration) -> Budget {
        Budget {
            limit: self.limit.map(|d| d.saturating_sub(spent)),
        }
    }

    pub fn is_exhausted(&self) -> bool {
        self.limit.is_some_and(|d| d.is_zero())
    }
}

/// Runs `f` on a dedicated rayon pool with `workers` threads.
pub fn with_workers<T: Send>(workers: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::InvalidSpec(format!("thread pool: {e}")))?;
    Ok(pool.install(f))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ExtremalKind {
    F,
    H,
}

impl fmt::Display for ExtremalKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtremalKind::F => write!(f, "f"),
            ExtremalKind::H => write!(f, "h"),
        }
    }
}

/// A computed constant with its certificate.
///
/// A partial result (`exact == false`) carries the bound established before
/// the budget ran out: an upper bound for `f`, a lower bound for `h`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalResult {
    pub kind: ExtremalKind,
    pub n: u32,
    pub k: u32,
    pub value: u32,
    /// For `f`: a sequence of length `value - 1` with exactly `k` distinct
    /// residues and no `n`-term zero-sum (absent when `value = k`).
    /// For `h`: a sequence of length `n + k` without an `n`-term zero-sum and
    /// height `value`.
    pub witness: Option<Seq>,
    pub exact: bool,
    pub sequences_examined: u64,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundCheck {
    pub name: String,
    pub holds: bool,
}

impl ExtremalResult {
    /// Bounds every exact value must satisfy.
    pub fn bound_checks(&self) -> Vec<BoundCheck> {
        let mut out = Vec::new();
        if !self.exact {
            return out;
        }
        let (n, k, v) = (self.n, self.k, self.value);
        match self.kind {
            ExtremalKind::F => {
                out.push(BoundCheck {
                    name: format!("f <= 2n-1 = {}", 2 * n - 1),
                    holds: v < 2 * n,
                });
                if (2..=n).contains(&k) {
                    out.push(BoundCheck {
                        name: format!("f <= 2n-k+1 = {}", 2 * n + 1 - k),
                        holds: v <= 2 * n + 1 - k,
                    });
                }
                if is_prime(n) && k >= 5 && 3 * k <= n + 15 {
                    let bound = (2 * n + 11) as i64 - 3 * k as i64;
                    out.push(BoundCheck {
                        name: format!("f(p,k) <= 2p-3k+11 = {bound}"),
                        holds: i64::from(v) <= bound,
                    });
                }
            }
            ExtremalKind::H => {
                if is_prime(n) && k >= 1 && k + 2 <= n {
                    out.push(BoundCheck {
                        name: format!("h(p,k) >= k+1 = {}", k + 1),
                        holds: v > k,
                    });
                }
            }
        }
        out
    }

    pub fn bounds_hold(&self) -> bool {
        self.bound_checks().iter().all(|c| c.holds)
    }
}

/// Values of `f(n, k)` stated in the literature table, as
/// `(item, value)` pairs. Several items may apply to the same `(n, k)`.
pub fn known_f_values(n: u32, k: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    if k == n {
        out.push((2, if n % 2 == 1 { n } else { n + 1 }));
    }
    if n >= 5 && 2 * k > n + 2 && k < n {
        out.push((3, n + 2));
    }
    if n.is_multiple_of(2) && k == n / 2 + 1 {
        out.push((4, n + 3));
    }
    if k >= 5 && k % 2 == 1 && (n + 4) >= (k - 1) * (k - 1) {
        let half = (k - 1) / 2;
        out.push((5, 2 * n - half * half - 1));
    }
    if k >= 6 && k.is_multiple_of(2) && n + 4 >= k * (k - 2) {
        out.push((6, 2 * n - k * (k - 2) / 4 - 1));
    }
    match k {
        2 => out.push((7, 2 * n - 1)),
        3 => out.push((7, 2 * n - 2)),
        4 => out.push((7, 2 * n - 3)),
        _ => {}
    }
    out
}

/// First multiset of one partition, its node count, and whether it timed out.
type PartitionHit = (Option<Vec<u32>>, u64, bool);

struct FirstHit {
    witness: Option<Vec<u32>>,
    nodes: u64,
    timed_out: bool,
}

/// First qualifying multiset in enumeration order, searched in parallel.
fn first_in_order(plan: &Plan) -> FirstHit {
    let parts = plan.partitions();
    let best = AtomicUsize::new(usize::MAX);
    let results: Vec<Option<PartitionHit>> = parts
        .par_iter()
        .enumerate()
        .map(|(i, prefix)| {
            if i > best.load(Ordering::Relaxed) {
                return None;
            }
            let mut e = plan.enumerator(prefix);
            let hit = e.next_mult().map(<[u32]>::to_vec);
            if hit.is_some() {
                best.fetch_min(i, Ordering::Relaxed);
            }
            Some((hit, e.nodes(), e.timed_out()))
        })
        .collect();
    let mut out = FirstHit {
        witness: None,
        nodes: 0,
        timed_out: false,
    };
    for (hit, nodes, timed_out) in results.into_iter().flatten() {
        out.nodes += nodes;
        out.timed_out |= timed_out;
        if hit.is_some() {
            out.witness = hit;
            break;
        }
    }
    out
}

fn elapsed_ms(start: Instant) -> u64 {
    start.elapsed().as_millis() as u64
}

/// Drops one copy of the most repeated residue. The distinct count is kept
/// and zero-sum-freeness is inherited by the sub-multiset.
pub fn shorten_keeping_distinct(s: &Seq) -> Option<Seq> {
    let mult = s.multiplicities();
    let (v, &m) = mult
        .iter()
        .enumerate()
        .max_by_key(|&(v, &m)| (m, std::cmp::Reverse(v)))?;
    if m < 2 {
        return None;
    }
    let mut out = mult.to_vec();
    out[v] -= 1;
    Seq::from_multiplicities(s.modulus(), out).ok()
}

fn check_shortening_chain(w: &Seq, n: u32, k: u32) -> Result<()> {
    let mut cur = w.clone();
    while cur.len() > k as usize {
        cur = shorten_keeping_distinct(&cur).ok_or_else(|| {
            Error::ConclusionFailed(format!(
                "cannot shorten {cur} keeping {k} distinct residues"
            ))
        })?;
        let bad = cur.len() >= n as usize && has_zero_sum_of_length(&cur, n as usize)?;
        if cur.distinct_count() != k as usize || bad {
            return Err(Error::ConclusionFailed(format!(
                "shortening {w} broke the witness at {cur}"
            )));
        }
    }
    Ok(())
}

/// `f(n, k)`: one more than the longest sequence with exactly `k` distinct
/// residues and no `n`-term zero-sum, and at least `k`.
pub fn compute_f(n: u32, k: u32, budget: Budget) -> Result<ExtremalResult> {
    check_modulus(n)?;
    if k == 0 || k > n {
        return Err(Error::range("k", k, 1, n.into()));
    }
    let start = Instant::now();
    let deadline = budget.deadline(start);
    let mut examined = 0;
    let top = 2 * n as usize - 2;
    for len in (k as usize..=top).rev() {
        let spec = EnumSpec::new(n, len)
            .distinct(k as usize)
            .forbid_length(n as usize);
        let mut plan = Plan::new(spec, Symmetry::Translated)?;
        plan.deadline = deadline;
        let hit = first_in_order(&plan);
        examined += hit.nodes;
        if hit.timed_out {
            return Ok(ExtremalResult {
                kind: ExtremalKind::F,
                n,
                k,
                value: len as u32 + 1,
                witness: None,
                exact: false,
                sequences_examined: examined,
                elapsed_ms: elapsed_ms(start),
            });
        }
        if let Some(mult) = hit.witness {
            let raw = Seq::from_multiplicities(n, mult)?;
            let witness = canonicalize(&raw).0;
            check_shortening_chain(&witness, n, k)?;
            return Ok(ExtremalResult {
                kind: ExtremalKind::F,
                n,
                k,
                value: len as u32 + 1,
                witness: Some(witness),
                exact: true,
                sequences_examined: examined,
                elapsed_ms: elapsed_ms(start),
            });
        }
    }
    Ok(ExtremalResult {
        kind: ExtremalKind::F,
        n,
        k,
        value: k,
        witness: None,
        exact: true,
        sequences_examined: examined,
        elapsed_ms: elapsed_ms(start),
    })
}

/// `h(n, k)`: the least height of a sequence of length `n + k` without an
/// `n`-term zero-sum.
pub fn compute_h(n: u32, k: u32, budget: Budget) -> Result<ExtremalResult> {
    check_modulus(n)?;
    if k == 0 {
        return Err(Error::range("k", k, 1, i64::from(n) - 2));
    }
    if k + 2 > n {
        return Err(Error::NoQualifyingSequence { n, k });
    }
    let start = Instant::now();
    let deadline = budget.deadline(start);
    let len = (n + k) as usize;
    let mut examined = 0;
    let lowest = len.div_ceil(n as usize) as u32;
    // n copies of one residue always sum to zero
    for height in lowest..n {
        let spec = EnumSpec::new(n, len)
            .forbid_length(n as usize)
            .max_multiplicity(height);
        let mut plan = Plan::new(spec, Symmetry::Translated)?;
        plan.pin_first = Some(height);
        plan.deadline = deadline;
        let hit = first_in_order(&plan);
        examined += hit.nodes;
        if hit.timed_out {
            return Ok(ExtremalResult {
                kind: ExtremalKind::H,
                n,
                k,
                value: height,
                witness: None,
                exact: false,
                sequences_examined: examined,
                elapsed_ms: elapsed_ms(start),
            });
        }
        if let Some(mult) = hit.witness {
            let witness = canonicalize(&Seq::from_multiplicities(n, mult)?).0;
            return Ok(ExtremalResult {
                kind: ExtremalKind::H,
                n,
                k,
                value: height,
                witness: Some(witness),
                exact: true,
                sequences_examined: examined,
                elapsed_ms: elapsed_ms(start),
            });
        }
    }
    Err(Error::NoQualifyingSequence { n, k })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConjectureStatus {
    /// In the conjectured range and `h(n,k) >= k + 1`.
    Holds,
    /// In the conjectured range and `h(n,k) <= k`.
    Counterexample,
    /// Below the conjectured range; `h(n,k) >= k + 1` anyway.
    OutsideHolds,
    /// Below the conjectured range with `h(n,k) <= k`.
    OutsideFails,
    /// Budget ran out before the value was settled.
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureRow {
    pub n: u32,
    pub k: u32,
    pub smallest_prime: u32,
    pub in_range: bool,
    pub h: Option<u32>,
    pub exact: bool,
    pub status: ConjectureStatus,
    pub witness: Option<Seq>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureReport {
    pub max_n: u32,
    pub rows: Vec<ConjectureRow>,
    pub exact: bool,
    pub elapsed_ms: u64,
}

impl ConjectureReport {
    pub fn counterexamples(&self) -> Vec<&ConjectureRow> {
        self.rows
            .iter()
            .filter(|r| r.status == ConjectureStatus::Counterexample)
            .collect()
    }

    /// Rows the budget left unsettled.
    pub fn unsettled(&self) -> Vec<&ConjectureRow> {
        self.rows.iter().filter(|r| !r.exact).collect()
    }
}

/// Computes `h(n, k)` for every `4 <= n <= max_n`, `1 <= k <= n - 2`, and
/// classifies each row against the bound `h(n,k) >= k + 1`, which is
/// conjectured for `k >= n/p - 1` with `p` the smallest prime divisor of `n`.
pub fn scan_conjecture(max_n: u32, budget: Budget) -> Result<ConjectureReport> {
    if max_n < 4 {
        return Err(Error::range(
            "max_n",
            max_n,
            4,
            crate::zmod::MAX_MODULUS.into(),
        ));
    }
    check_modulus(max_n)?;
    let start = Instant::now();
    let mut rows = Vec::new();
    for n in 4..=max_n {
        let p = smallest_prime_divisor(n).expect("n >= 2");
        let threshold = (n / p).saturating_sub(1).max(1);
        for k in 1..=n - 2 {
            let remaining = budget.remaining(start.elapsed());
            let in_range = k >= threshold;
            let result = if remaining.is_exhausted() {
                None
            } else {
                Some(compute_h(n, k, remaining)?)
            };
            let row = match result {
                Some(r) if r.exact => {
                    let ok = r.value > k;
                    ConjectureRow {
                        n,
                        k,
                        smallest_prime: p,
                        in_range,
                        h: Some(r.value),
                        exact: true,
                        status: match (in_range, ok) {
                            (true, true) => ConjectureStatus::Holds,
                            (true, false) => ConjectureStatus::Counterexample,
                            (false, true) => ConjectureStatus::OutsideHolds,
                            (false, false) => ConjectureStatus::OutsideFails,
                        },
                        witness: r.witness,
                    }
                }
                partial => ConjectureRow {
                    n,
                    k,
                    smallest_prime: p,
                    in_range,
                    h: partial.map(|r| r.value),
                    exact: false,
                    status: ConjectureStatus::Unknown,
                    witness: None,
                },
            };
            rows.push(row);
        }
    }
    let exact = rows.iter().all(|r| r.exact);
    Ok(ConjectureReport {
        max_n,
        rows,
        exact,
        elapsed_ms: elapsed_ms(start),
    })
}
