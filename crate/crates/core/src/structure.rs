//! Checkers for the structure theorems on zero-sum-free sequences.
//!
//! Every checker validates its hypotheses first and reports a violation as
//! [`Error::HypothesisNotMet`]. A failed conclusion on valid input is a
//! counterexample and comes back as [`Error::ConclusionFailed`] (or as a
//! `false`/`None` field where the result type has room for it).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sumset::{cd_bound, is_prime, rotate, ReachTable};
use crate::zerosum::{has_zero_sum_of_length, is_zero_free, subsequence_with_sum};
use crate::zmod::{apply_transform, Residue, Seq, Transform};

fn hypothesis(msg: impl Into<String>) -> Error {
    Error::HypothesisNotMet(msg.into())
}

fn require_odd_prime(p: u32) -> Result<()> {
    if p < 3 || !is_prime(p) {
        return Err(hypothesis(format!("{p} is not an odd prime")));
    }
    Ok(())
}

fn require_modulus(s: &Seq, n: u32) -> Result<()> {
    if s.modulus() != n {
        return Err(Error::ModulusMismatch {
            left: n,
            right: s.modulus(),
        });
    }
    Ok(())
}

/// Largest `k` accepted by the two-block decomposition: `floor((p+1)/3) + 1`.
pub fn two_block_k_max(p: u32) -> u32 {
    (p + 1) / 3 + 1
}

/// Number of residues that occur in `s`.
pub fn distinct_count(s: &Seq) -> usize {
    s.distinct_count()
}

/// A zero-free sequence of length `n - k` with `n - 2k >= 1` repeats some
/// nonzero residue at least `n - 2k + 1` times. Returns the smallest such
/// residue, or `None` if there is none.
pub fn check_repeated_element(s: &Seq, k: u32) -> Result<Option<Residue>> {
    let n = s.modulus();
    if k == 0 || n < 2 * k + 1 {
        return Err(hypothesis(format!("need n - 2k >= 1 (n={n}, k={k})")));
    }
    if s.len() != (n - k) as usize {
        return Err(hypothesis(format!(
            "length {} != n - k = {}",
            s.len(),
            n - k
        )));
    }
    if !is_zero_free(s)? {
        return Err(hypothesis(format!("{s} has a zero-sum subsequence")));
    }
    let need = n - 2 * k + 1;
    Ok((1..n)
        .find(|&a| s.multiplicity(a) >= need)
        .map(|a| Residue::raw(a, n)))
}

/// For `|S| = p + k` without a `p`-term zero-sum, `h(S) >= k + 1`.
pub fn check_h_bound(s: &Seq, p: u32, k: u32) -> Result<bool> {
    if !is_prime(p) {
        return Err(hypothesis(format!("{p} is not prime")));
    }
    require_modulus(s, p)?;
    if k == 0 || k + 2 > p {
        return Err(hypothesis(format!("k={k} outside 1..=p-2")));
    }
    if s.len() != (p + k) as usize {
        return Err(hypothesis(format!(
            "length {} != p + k = {}",
            s.len(),
            p + k
        )));
    }
    if has_zero_sum_of_length(s, p as usize)? {
        return Err(hypothesis(format!("{s} has a {p}-term zero-sum")));
    }
    Ok(s.height() > k)
}

/// Splits `s` round-robin into `k` sets of pairwise distinct elements.
/// Requires `h(S) <= k`.
pub fn split_into_distinct_sets(s: &Seq, k: usize) -> Result<Vec<Vec<u32>>> {
    if k == 0 || s.height() as usize > k {
        return Err(hypothesis(format!(
            "h(S) = {} exceeds the number of sets {k}",
            s.height()
        )));
    }
    let mut sets = vec![Vec::new(); k];
    for (i, v) in s.sorted_values().into_iter().enumerate() {
        sets[i % k].push(v);
    }
    Ok(sets)
}

/// Builds a `p`-term zero-sum of `s` (length `p + k`, `h(S) <= k`) by
/// picking one element from each of `k` distinct-element sets so that the
/// picks sum to `sigma(S)`; Cauchy-Davenport guarantees the `k`-fold sumset is
/// all of `Z_p`. The complement of the picks is the zero-sum.
pub fn zero_sum_via_cauchy_davenport(s: &Seq, p: u32, k: u32) -> Result<Seq> {
    if !is_prime(p) {
        return Err(hypothesis(format!("{p} is not prime")));
    }
    require_modulus(s, p)?;
    if k == 0 || s.len() != (p + k) as usize {
        return Err(hypothesis(format!("length {} != p + k", s.len())));
    }
    let sets = split_into_distinct_sets(s, k as usize)?;
    let sizes: Vec<u32> = sets.iter().map(|a| a.len() as u32).collect();
    if sets.iter().any(Vec::is_empty) {
        return Err(hypothesis("a set of the split is empty"));
    }
    let bound = cd_bound(&sizes, p)?;
    // reachable[t]: sums of one pick from each of the first t sets
    let mut reachable = vec![1u64];
    for a in &sets {
        let prev = *reachable.last().expect("nonempty");
        let next = a.iter().fold(0, |acc, &v| acc | rotate(prev, v, p));
        reachable.push(next);
    }
    let last = *reachable.last().expect("nonempty");
    if (last.count_ones()) < bound {
        return Err(Error::ConclusionFailed(format!(
            "sumset of the split of {s} has {} elements, below the bound {bound}",
            last.count_ones()
        )));
    }
    let target = s.sum().value();
    if last >> target & 1 == 0 {
        return Err(Error::ConclusionFailed(format!(
            "sigma(S) = {target} is not a sum of one element per set for {s}"
        )));
    }
    let mut picks = Seq::empty(p)?;
    let mut t = target;
    for (i, a) in sets.iter().enumerate().rev() {
        let prev = reachable[i];
        let v = *a
            .iter()
            .find(|&&v| prev >> ((t + p - v) % p) & 1 == 1)
            .expect("reachable by construction");
        picks.push(v, 1);
        t = (t + p - v) % p;
    }
    s.remove(&picks)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalForm23 {
    pub modulus: u32,
    pub k: u32,
    /// Maps the source sequence onto `(1^ones_count, tail)`.
    pub transform: Transform,
    pub ones_count: u32,
    pub tail: Vec<Residue>,
    pub tail_bar_sum: u32,
}

impl NormalForm23 {
    /// A normal form given directly by its tail, with the identity transform.
    pub fn from_tail(n: u32, k: u32, tail: &[u32]) -> Result<Self> {
        if k == 0 || 2 * k > n + 1 {
            return Err(hypothesis(format!("k={k} too large for n={n}")));
        }
        if tail.len() != (k - 1) as usize {
            return Err(hypothesis(format!(
                "tail has {} terms, expected k - 1 = {}",
                tail.len(),
                k - 1
            )));
        }
        let tail = tail
            .iter()
            .map(|&v| Residue::new(v, n))
            .collect::<Result<Vec<_>>>()?;
        let tail_bar_sum = tail.iter().map(|r| r.bar()).sum();
        Ok(NormalForm23 {
            modulus: n,
            k,
            transform: Transform::identity(n)?,
            ones_count: n - 2 * k + 1,
            tail,
            tail_bar_sum,
        })
    }

    /// The normalized sequence `(1^ones_count, x_1, ..., x_{k-1})`.
    pub fn image(&self) -> Seq {
        let mut s = Seq::empty(self.modulus).expect("valid modulus");
        s.push(1, self.ones_count);
        for r in &self.tail {
            s.push(r.value(), 1);
        }
        s
    }
}

/// Finds `(c, x)` with `c(S - x) = (1^{n-2k+1}, x_1, ..., x_{k-1})` and
/// `sum bar(x_i) <= 2k - 2`, minimizing that sum (ties: smallest `c`, then
/// smallest `x`).
pub fn normal_form_2_3(s: &Seq, n: u32, k: u32) -> Result<NormalForm23> {
    require_modulus(s, n)?;
    if k == 0 || k > (n + 1) / 3 {
        return Err(hypothesis(format!("k={k} outside 1..=floor((n+1)/3)")));
    }
    if s.len() != (n - k) as usize {
        return Err(hypothesis(format!(
            "length {} != n - k = {}",
            s.len(),
            n - k
        )));
    }
    if !is_zero_free(s)? {
        return Err(hypothesis(format!("{s} has a zero-sum subsequence")));
    }
    let ones = n - 2 * k + 1;
    let limit = 2 * k - 2;
    let mut best: Option<NormalForm23> = None;
    for t in Transform::all(n)? {
        let image = apply_transform(s, &t)?;
        if image.multiplicity(1) < ones {
            continue;
        }
        let mut mult = image.multiplicities().to_vec();
        mult[1] -= ones;
        let tail: Vec<Residue> = Seq::from_multiplicities(n, mult)?.residues().collect();
        let sum: u32 = tail.iter().map(|r| r.bar()).sum();
        if sum > limit || best.as_ref().is_some_and(|b| b.tail_bar_sum <= sum) {
            continue;
        }
        best = Some(NormalForm23 {
            modulus: n,
            k,
            transform: t,
            ones_count: ones,
            tail,
            tail_bar_sum: sum,
        });
    }
    best.ok_or_else(|| {
        Error::ConclusionFailed(format!(
            "no transform brings {s} (n={n}, k={k}) into the form (1^{ones}, tail) with tail bar-sum <= {limit}"
        ))
    })
}

/// For positive integers `bars` (ascending) with `sum <= 2 * len` and
/// `1 <= y <= sum`, a sub-multiset summing to `y` or `y + 1`; the second
/// component is the overshoot (0 or 1).
pub(crate) fn claim_subset(bars: &[u32], y: u32) -> Option<(Vec<u32>, u32)> {
    let total: u32 = bars.iter().sum();
    let k = bars.len();
    if y == 0 || y > total {
        return None;
    }
    if k <= 2 {
        let mut best: Option<(Vec<u32>, u32)> = None;
        for mask in 1u32..(1 << k) {
            let pick: Vec<u32> = (0..k)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| bars[i])
                .collect();
            let s: u32 = pick.iter().sum();
            if s == y {
                return Some((pick, 0));
            }
            if s == y + 1 && best.is_none() {
                best = Some((pick, 1));
            }
        }
        return best;
    }
    if bars[k - 2] == 1 {
        let ones = (k - 1) as u32;
        let big = bars[k - 1];
        if y <= ones {
            return Some((vec![1; y as usize], 0));
        }
        if y >= big {
            let mut pick = vec![1; (y - big) as usize];
            pick.push(big);
            return Some((pick, 0));
        }
        if y + 1 == big {
            return Some((vec![big], 1));
        }
        return None;
    }
    let pivot = bars[k - 2];
    let mut rest = bars.to_vec();
    rest.remove(k - 2);
    let rest_total = total - pivot;
    if y <= rest_total {
        claim_subset(&rest, y)
    } else {
        let (mut pick, over) = claim_subset(&rest, y - pivot)?;
        pick.push(pivot);
        Some((pick, over))
    }
}

fn lemma_by_recursion(nf: &NormalForm23, x: Residue) -> Option<Seq> {
    let p = nf.modulus;
    let y = x.bar().checked_sub(nf.ones_count)?;
    let mut out = Seq::empty(p).ok()?;
    if y == 0 {
        out.push(1, nf.ones_count);
        return Some(out);
    }
    let mut bars: Vec<u32> = nf.tail.iter().map(|r| r.bar()).collect();
    bars.sort_unstable();
    let (pick, over) = claim_subset(&bars, y)?;
    out.push(1, nf.ones_count.checked_sub(over)?);
    for b in pick {
        out.push(b % p, 1);
    }
    Some(out)
}

/// Reachability-table route: the lexicographically smallest subsequence
/// with sum `x` among the shortest admissible lengths.
pub(crate) fn lemma_by_table(nf: &NormalForm23, x: Residue) -> Option<Seq> {
    let s = nf.image();
    let table = ReachTable::build(&s);
    (nf.ones_count as usize..=s.len())
        .find(|&len| table.reaches(len, x.value()))
        .and_then(|len| subsequence_with_sum(&s, len, x.value()))
}

/// Lower and upper bound on `bar(x)` accepted by [`find_subseq_with_sum`].
pub fn lemma_target_range(nf: &NormalForm23) -> (u32, u32) {
    (nf.ones_count, nf.ones_count + nf.tail_bar_sum)
}

/// A subsequence `T` of `(1^{p-2k+1}, x_1, ..., x_{k-1})` with `sigma(T) = x`
/// and `|T| >= p - 2k + 1`, built by the subset recursion on the tail. The
/// reachability table is consulted only if the recursion comes back empty.
pub fn find_subseq_with_sum(nf: &NormalForm23, x: Residue) -> Result<Seq> {
    let p = nf.modulus;
    require_odd_prime(p)?;
    if x.modulus() != p {
        return Err(Error::ModulusMismatch {
            left: p,
            right: x.modulus(),
        });
    }
    let k = nf.k;
    if k == 0 || k > (p + 1) / 3 || nf.ones_count != p - 2 * k + 1 {
        return Err(hypothesis(format!("not a normal form for p={p}, k={k}")));
    }
    if nf.tail.len() != (k - 1) as usize || nf.tail.iter().any(|r| r.is_zero()) {
        return Err(hypothesis("tail must hold k - 1 nonzero residues"));
    }
    let bar_sum: u32 = nf.tail.iter().map(|r| r.bar()).sum();
    if bar_sum != nf.tail_bar_sum || bar_sum > 2 * k - 2 {
        return Err(hypothesis(format!("tail bar-sum {bar_sum} exceeds 2k - 2")));
    }
    let (lo, hi) = lemma_target_range(nf);
    if x.bar() < lo || x.bar() > hi {
        return Err(hypothesis(format!(
            "bar(x) = {} outside {lo}..={hi}",
            x.bar()
        )));
    }
    let valid = |t: &Seq| {
        t.sum() == x && t.len() >= nf.ones_count as usize && t.is_subsequence_of(&nf.image())
    };
    if let Some(t) = lemma_by_recursion(nf, x).filter(valid) {
        return Ok(t);
    }
    lemma_by_table(nf, x).filter(valid).ok_or_else(|| {
        Error::ConclusionFailed(format!(
            "no subsequence of {} with sum {x} and length >= {}",
            nf.image(),
            nf.ones_count
        ))
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureReport {
    pub p: u32,
    pub k: u32,
    pub a: Residue,
    pub u: u32,
    pub b: Residue,
    pub v: u32,
    pub rest: Seq,
    pub diff_is_generator: bool,
    pub inequality_ok: bool,
}

impl StructureReport {
    pub fn holds(&self) -> bool {
        self.diff_is_generator && self.inequality_ok
    }
}

/// Two-block decomposition `(a^u, b^v, rest)` of a sequence of length
/// `2p - k` without a `p`-term zero-sum. Picks the pair of distinct residues
/// with unit difference maximizing `u + v` subject to `u >= v` (ties: smallest
/// `a`, then smallest `b`).
pub fn decompose_3_1(s: &Seq, p: u32, k: u32) -> Result<StructureReport> {
    require_odd_prime(p)?;
    require_modulus(s, p)?;
    if k < 2 || k > two_block_k_max(p) {
        return Err(hypothesis(format!(
            "k={k} outside 2..={}",
            two_block_k_max(p)
        )));
    }
    if s.len() != (2 * p - k) as usize {
        return Err(hypothesis(format!(
            "length {} != 2p - k = {}",
            s.len(),
            2 * p - k
        )));
    }
    if has_zero_sum_of_length(s, p as usize)? {
        return Err(hypothesis(format!("{s} has a {p}-term zero-sum")));
    }
    let mut best: Option<(u32, u32, u32)> = None;
    for a in 0..p {
        for b in 0..p {
            if a == b {
                continue;
            }
            let (u, v) = (s.multiplicity(a), s.multiplicity(b));
            if u < v || !Residue::raw((a + p - b) % p, p).is_unit() {
                continue;
            }
            if best.is_none_or(|(_, _, total)| u + v > total) {
                best = Some((a, b, u + v));
            }
        }
    }
    let (a, b, _) = best.expect("Z_p has two distinct residues");
    let (u, v) = (s.multiplicity(a), s.multiplicity(b));
    let mut block = Seq::empty(p)?;
    block.push(a, u);
    block.push(b, v);
    let a = Residue::raw(a, p);
    let b = Residue::raw(b, p);
    Ok(StructureReport {
        p,
        k,
        a,
        u,
        b,
        v,
        rest: s.remove(&block)?,
        diff_is_generator: (a - b).is_unit(),
        inequality_ok: u + v + 2 * k >= 2 * p + 2,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict32 {
    /// Enough distinct residues: a `p`-term zero-sum was asserted and found.
    GuaranteedZeroSum,
    BelowThreshold,
    /// `k = 2` makes the threshold zero; nothing is asserted.
    Degenerate,
}

/// `g^2 >= 8(k - 2)`, the integer form of `g >= 2 sqrt(2) sqrt(k - 2)`.
pub fn meets_distinct_threshold(g: usize, k: u32) -> bool {
    (g * g) as u64 >= 8 * u64::from(k.saturating_sub(2))
}

/// Distinct-residue threshold for sequences of length `2p - k`.
pub fn check_3_2(s: &Seq, p: u32, k: u32) -> Result<Verdict32> {
    require_odd_prime(p)?;
    require_modulus(s, p)?;
    if k < 2 || k > two_block_k_max(p) {
        return Err(hypothesis(format!(
            "k={k} outside 2..={}",
            two_block_k_max(p)
        )));
    }
    if s.len() != (2 * p - k) as usize {
        return Err(hypothesis(format!(
            "length {} != 2p - k = {}",
            s.len(),
            2 * p - k
        )));
    }
    if k == 2 {
        return Ok(Verdict32::Degenerate);
    }
    let g = s.distinct_count();
    if !meets_distinct_threshold(g, k) {
        return Ok(Verdict32::BelowThreshold);
    }
    if has_zero_sum_of_length(s, p as usize)? {
        Ok(Verdict32::GuaranteedZeroSum)
    } else {
        Err(Error::ConclusionFailed(format!(
            "{s} (p={p}, k={k}) has {g} distinct residues, g^2 >= {} , but no {p}-term zero-sum",
            8 * (k - 2)
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(n: u32, v: &[u32]) -> Seq {
        Seq::from_values(n, v).unwrap()
    }

    fn pw(n: u32, p: &[(u32, u32)]) -> Seq {
        Seq::from_powers(n, p).unwrap()
    }

    #[test]
    fn repeated_element() {
        let r = check_repeated_element(&seq(7, &[3, 3, 3, 3, 6]), 2).unwrap();
        assert_eq!(r, Some(Residue::new(3, 7).unwrap()));
        let r = check_repeated_element(&seq(7, &[1; 6]), 1).unwrap();
        assert_eq!(r, Some(Residue::new(1, 7).unwrap()));
        assert!(matches!(
            check_repeated_element(&seq(7, &[1, 2]), 3),
            Err(Error::HypothesisNotMet(_))
        ));
        // not zero-free
        assert!(matches!(
            check_repeated_element(&seq(7, &[1, 6, 2, 2, 2]), 2),
            Err(Error::HypothesisNotMet(_))
        ));
    }

    #[test]
    fn h_bound() {
        assert!(check_h_bound(&pw(7, &[(0, 6), (1, 5)]), 7, 4).unwrap());
        assert!(check_h_bound(&pw(5, &[(0, 4), (1, 4)]), 5, 3).unwrap());
        // k = 1: sigma = 2 is not a term, so dropping one term never leaves a zero-sum
        assert!(check_h_bound(&pw(5, &[(0, 4), (1, 2)]), 5, 1).unwrap());
        assert!(check_h_bound(&pw(5, &[(0, 2), (1, 2), (2, 2)]), 5, 1).is_err());
        assert!(check_h_bound(&pw(5, &[(0, 4), (1, 4)]), 5, 4).is_err());
        assert!(check_h_bound(&pw(6, &[(0, 4), (1, 4)]), 6, 2).is_err());
        assert!(matches!(
            check_h_bound(&seq(5, &[0, 1, 2, 3, 4, 0]), 5, 1),
            Err(Error::HypothesisNotMet(_))
        ));
    }

    #[test]
    fn cauchy_davenport_construction() {
        // h = 2 <= k = 2, length 7 = p + 2
        let s = seq(5, &[0, 0, 1, 1, 2, 3, 4]);
        let z = zero_sum_via_cauchy_davenport(&s, 5, 2).unwrap();
        assert_eq!(z.len(), 5);
        assert_eq!(z.sum().value(), 0);
        assert!(z.is_subsequence_of(&s));
        assert!(zero_sum_via_cauchy_davenport(&pw(5, &[(0, 4), (1, 3)]), 5, 2).is_err());
    }

    #[test]
    fn normal_form_examples() {
        let nf = normal_form_2_3(&seq(7, &[3, 3, 3, 3, 6]), 7, 2).unwrap();
        assert_eq!((nf.transform.c(), nf.transform.x().value()), (5, 0));
        assert_eq!(nf.image(), seq(7, &[1, 1, 1, 1, 2]));
        assert_eq!(nf.tail_bar_sum, 2);

        let nf = normal_form_2_3(&seq(7, &[1; 5]), 7, 2).unwrap();
        assert_eq!(nf.transform, Transform::identity(7).unwrap());
        assert_eq!(nf.tail, vec![Residue::new(1, 7).unwrap()]);
        assert_eq!(nf.tail_bar_sum, 1);

        let nf = normal_form_2_3(&seq(5, &[1, 1, 2]), 5, 2).unwrap();
        assert_eq!(nf.tail, vec![Residue::new(2, 5).unwrap()]);
        assert_eq!(nf.tail_bar_sum, 2);

        assert!(normal_form_2_3(&seq(7, &[1, 6, 1, 1, 1]), 7, 2).is_err());
        assert!(normal_form_2_3(&seq(7, &[1, 1, 1]), 7, 3).is_err());
    }

    #[test]
    fn lemma_examples() {
        let nf = NormalForm23::from_tail(7, 2, &[2]).unwrap();
        let x = |v| Residue::new(v, 7).unwrap();
        let t = find_subseq_with_sum(&nf, x(5)).unwrap();
        assert_eq!(t, seq(7, &[1, 1, 1, 2]));
        let t = find_subseq_with_sum(&nf, x(4)).unwrap();
        assert_eq!(t, seq(7, &[1, 1, 1, 1]));
        let t = find_subseq_with_sum(&nf, x(6)).unwrap();
        assert_eq!(t, seq(7, &[1, 1, 1, 1, 2]));
        assert!(find_subseq_with_sum(&nf, x(3)).is_err());
        assert!(find_subseq_with_sum(&nf, x(0)).is_err());
    }

    #[test]
    fn claim_small_cases() {
        assert_eq!(claim_subset(&[2], 1), Some((vec![2], 1)));
        assert_eq!(claim_subset(&[1, 1, 1, 5], 4), Some((vec![5], 1)));
        assert_eq!(claim_subset(&[1, 1, 1, 5], 7), Some((vec![1, 1, 5], 0)));
        let (pick, over) = claim_subset(&[2, 3, 3], 7).unwrap();
        assert_eq!(pick.iter().sum::<u32>(), 7 + over);
        assert_eq!(claim_subset(&[2, 3], 6), None);
    }

    #[test]
    fn decompose_examples() {
        let r = decompose_3_1(&pw(5, &[(0, 4), (1, 4)]), 5, 2).unwrap();
        assert_eq!((r.a.value(), r.u, r.b.value(), r.v), (0, 4, 1, 4));
        assert!(r.rest.is_empty());
        assert!(r.holds());

        let r = decompose_3_1(&pw(7, &[(0, 6), (1, 5)]), 7, 3).unwrap();
        assert_eq!((r.a.value(), r.u, r.b.value(), r.v), (0, 6, 1, 5));
        assert!(r.holds());

        let r = decompose_3_1(&pw(7, &[(0, 6), (1, 4), (2, 1)]), 7, 3).unwrap();
        assert_eq!((r.u, r.v), (6, 4));
        assert_eq!(r.rest, seq(7, &[2]));
        assert!(r.inequality_ok);

        assert!(matches!(
            decompose_3_1(&pw(5, &[(0, 4), (1, 4), (2, 1)]), 5, 1),
            Err(Error::HypothesisNotMet(_))
        ));
        // length 2p - 1 always has a zero-sum
        assert!(matches!(
            decompose_3_1(&pw(7, &[(0, 6), (1, 6), (2, 1)]), 7, 1),
            Err(Error::HypothesisNotMet(_))
        ));
        assert!(decompose_3_1(&pw(9, &[(0, 8), (1, 8)]), 9, 2).is_err());
    }

    #[test]
    fn distinct_threshold() {
        assert_eq!(distinct_count(&pw(5, &[(0, 4), (1, 4)])), 2);
        assert_eq!(distinct_count(&Seq::empty(5).unwrap()), 0);
        assert_eq!(distinct_count(&seq(5, &[0, 1, 2, 3, 4])), 5);
        assert!(!meets_distinct_threshold(2, 3));
        assert!(meets_distinct_threshold(3, 3));
        assert!(meets_distinct_threshold(4, 4));
        assert!(!meets_distinct_threshold(4, 5));
        assert!(meets_distinct_threshold(0, 2));
    }

    #[test]
    fn threshold_verdicts() {
        let s = pw(7, &[(0, 6), (1, 5)]);
        assert_eq!(check_3_2(&s, 7, 3).unwrap(), Verdict32::BelowThreshold);
        assert_eq!(
            check_3_2(&pw(7, &[(0, 6), (1, 6)]), 7, 2).unwrap(),
            Verdict32::Degenerate
        );
        let s = pw(11, &[(0, 9), (1, 5), (2, 2), (5, 2)]);
        assert_eq!(check_3_2(&s, 11, 4).unwrap(), Verdict32::GuaranteedZeroSum);
        assert!(check_3_2(&pw(11, &[(0, 9)]), 11, 4).is_err());
    }

    #[test]
    fn threshold_counterexample_at_small_k() {
        // three distinct residues meet g^2 >= 8, yet every 7-term sum is i + 2j
        // with 1 <= i + 2j <= 6
        let s = pw(7, &[(0, 6), (1, 4), (2, 1)]);
        assert!(!has_zero_sum_of_length(&s, 7).unwrap());
        assert!(check_3_2(&s, 7, 3).unwrap_err().is_critical());
    }
}
