//! Zero-sum predicates and witnesses.
//!
//! Witnesses are deterministic: among all valid subsequences the one with the
//! lexicographically smallest multiplicity vector (residue order `0 < 1 < ...`)
//! is returned. It is found greedily against suffix reachability tables, so a
//! prefix choice is only kept when the remaining residues can still finish it.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sumset::{rotate, ReachTable};
use crate::zmod::Seq;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZeroSumWitness {
    pub sub: Seq,
}

impl ZeroSumWitness {
    pub fn length(&self) -> usize {
        self.sub.len()
    }
}

fn check_length(s: &Seq, m: usize) -> Result<()> {
    let len = s.len();
    if m == 0 || m > len {
        return Err(Error::range("m", m, 1, len as i64));
    }
    Ok(())
}

/// `0 in Sigma_m(S)`.
pub fn has_zero_sum_of_length(s: &Seq, m: usize) -> Result<bool> {
    check_length(s, m)?;
    Ok(ReachTable::build(s).reaches(m, 0))
}

/// Lexicographically smallest sub-multiset of `s` with `m` terms summing to
/// `target`, if any.
pub(crate) fn subsequence_with_sum(s: &Seq, m: usize, target: u32) -> Option<Seq> {
    let n = s.modulus();
    let mult = s.multiplicities();
    let width = m + 1;
    // suffix[i * width + j]: sums of j-term subsequences using residues >= i
    let mut suffix = vec![0u64; (n as usize + 1) * width];
    suffix[n as usize * width] = 1;
    for i in (0..n as usize).rev() {
        let (head, tail) = suffix.split_at_mut((i + 1) * width);
        let cur = &mut head[i * width..];
        cur.copy_from_slice(&tail[..width]);
        for _ in 0..mult[i].min(m as u32) {
            for j in (1..width).rev() {
                cur[j] |= rotate(cur[j - 1], i as u32, n);
            }
        }
    }
    if suffix[m] >> target & 1 == 0 {
        return None;
    }
    let mut out = vec![0u32; n as usize];
    let (mut need, mut t) = (m, target % n);
    for i in 0..n as usize {
        let next = &suffix[(i + 1) * width..(i + 2) * width];
        let mut chosen = None;
        for c in 0..=mult[i].min(need as u32) {
            let shift = ((c as u64 * i as u64) % n as u64) as u32;
            let rest = (t + n - shift) % n;
            if next[need - c as usize] >> rest & 1 == 1 {
                chosen = Some((c, rest));
                break;
            }
        }
        let (c, rest) = chosen.expect("suffix table guarantees completion");
        out[i] = c;
        need -= c as usize;
        t = rest;
    }
    debug_assert_eq!(need, 0);
    Some(Seq::from_multiplicities(n, out).expect("valid modulus"))
}

pub fn zero_sum_witness(s: &Seq, m: usize) -> Result<Option<ZeroSumWitness>> {
    check_length(s, m)?;
    Ok(subsequence_with_sum(s, m, 0).map(|sub| ZeroSumWitness { sub }))
}

/// `0 not in Sigma(S)`.
pub fn is_zero_free(s: &Seq) -> Result<bool> {
    if s.is_empty() {
        return Err(Error::EmptySequence);
    }
    Ok(!ReachTable::build(s).nonempty_sums().contains(0))
}

/// A longest zero-sum subsequence, or `None` when `s` is zero-free.
pub fn max_zero_sum_subseq(s: &Seq) -> Result<Option<ZeroSumWitness>> {
    if s.is_empty() {
        return Err(Error::EmptySequence);
    }
    let table = ReachTable::build(s);
    let Some(len) = (1..=table.len()).rev().find(|&j| table.reaches(j, 0)) else {
        return Ok(None);
    };
    Ok(subsequence_with_sum(s, len, 0).map(|sub| ZeroSumWitness { sub }))
}
