//! Multiset enumeration over `Z_n` with pruning.
//!
//! Multiplicities are assigned residue by residue (`0, 1, ..., n-1`), each
//! from its largest feasible value downwards, so multisets come out in
//! increasing order of their sorted value tuples. A reachability state is
//! carried along the assignment; any prefix that already contains a forbidden
//! zero-sum is cut, since every extension would contain it too.
//!
//! Orbit reduction uses translations first: some residue of maximal
//! multiplicity can always be moved to 0, so only vectors with `mult[0]`
//! maximal are generated. Canonical mode additionally keeps a leaf only if it
//! is the lexicographically largest vector of its orbit.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sumset::rotate;
use crate::zmod::{check_modulus, CanonTable, Seq};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ZeroSumConstraint {
    /// No subsequence of exactly this many terms sums to zero.
    ForbidLength(usize),
    /// No nonempty subsequence sums to zero.
    ZeroFree,
}

impl ZeroSumConstraint {
    /// Affine-unit transforms preserve fixed-length zero-sums but translations
    /// do not preserve zero-freeness.
    pub fn transform_invariant(self) -> bool {
        matches!(self, ZeroSumConstraint::ForbidLength(_))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumSpec {
    pub modulus: u32,
    pub length: usize,
    /// Exact number of distinct residues.
    pub distinct: Option<usize>,
    pub constraint: Option<ZeroSumConstraint>,
    /// One representative per orbit. Ignored (raw multisets are produced)
    /// when the constraint is not transform-invariant.
    pub canonical_only: bool,
    /// Upper bound on every multiplicity.
    pub max_multiplicity: Option<u32>,
}

impl EnumSpec {
    pub fn new(modulus: u32, length: usize) -> Self {
        EnumSpec {
            modulus,
            length,
            distinct: None,
            constraint: None,
            canonical_only: false,
            max_multiplicity: None,
        }
    }

    pub fn distinct(mut self, d: usize) -> Self {
        self.distinct = Some(d);
        self
    }

    pub fn forbid_length(mut self, m: usize) -> Self {
        self.constraint = Some(ZeroSumConstraint::ForbidLength(m));
        self
    }

    pub fn zero_free(mut self) -> Self {
        self.constraint = Some(ZeroSumConstraint::ZeroFree);
        self
    }

    pub fn canonical(mut self) -> Self {
        self.canonical_only = true;
        self
    }

    pub fn max_multiplicity(mut self, cap: u32) -> Self {
        self.max_multiplicity = Some(cap);
        self
    }

    pub fn validate(&self) -> Result<()> {
        check_modulus(self.modulus)?;
        if let Some(d) = self.distinct {
            if d > (self.modulus as usize).min(self.length) {
                return Err(Error::InvalidSpec(format!(
                    "distinct = {d} exceeds min(n, length) = {}",
                    (self.modulus as usize).min(self.length)
                )));
            }
        }
        if let Some(ZeroSumConstraint::ForbidLength(0)) = self.constraint {
            return Err(Error::InvalidSpec(
                "forbidden length must be positive".into(),
            ));
        }
        Ok(())
    }

    /// The orbit reduction that is sound for this spec.
    pub(crate) fn symmetry(&self) -> Symmetry {
        let invariant = self
            .constraint
            .is_none_or(ZeroSumConstraint::transform_invariant);
        if self.canonical_only && invariant {
            Symmetry::Canonical
        } else {
            Symmetry::Raw
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Symmetry {
    Raw,
    /// `mult[0]` is a maximal multiplicity; no leaf filter.
    Translated,
    Canonical,
}

/// Search plan shared by all partitions of one enumeration.
#[derive(Clone, Debug)]
pub(crate) struct Plan {
    pub(crate) spec: EnumSpec,
    pub(crate) symmetry: Symmetry,
    /// Forces `mult[0]` to this value (translated and canonical modes only).
    pub(crate) pin_first: Option<u32>,
    pub(crate) deadline: Option<Instant>,
}

impl Plan {
    pub(crate) fn new(spec: EnumSpec, symmetry: Symmetry) -> Result<Self> {
        spec.validate()?;
        Ok(Plan {
            spec,
            symmetry,
            pin_first: None,
            deadline: None,
        })
    }

    pub(crate) fn enumerator(&self, prefix: &[u32]) -> Enumerator {
        Enumerator::start(self.clone(), prefix.to_vec())
    }

    /// Assignments of the first residues that split the search into
    /// independent subtrees, in enumeration order.
    pub(crate) fn partitions(&self) -> Vec<Vec<u32>> {
        let n = self.spec.modulus as usize;
        let len = self.spec.length as u32;
        let cap = self.spec.max_multiplicity.unwrap_or(len).min(len);
        let first: Vec<u32> = match (self.symmetry, self.pin_first) {
            (Symmetry::Raw, _) | (_, None) => (0..=cap).rev().collect(),
            (_, Some(p)) => vec![p],
        };
        if n <= 2 {
            return first.into_iter().map(|a| vec![a]).collect();
        }
        let mut out = Vec::new();
        for a in first {
            let second_cap = match self.symmetry {
                Symmetry::Raw => cap,
                _ => cap.min(a),
            };
            for b in (0..=second_cap.min(len - a)).rev() {
                out.push(vec![a, b]);
            }
        }
        out
    }
}

#[derive(Clone, Copy, Debug)]
struct Frame {
    r: usize,
    next: i64,
    lo: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Tracker {
    None,
    /// Rows `0..=m` of the reachability table.
    Length(usize),
    /// Mask of nonempty subsequence sums.
    ZeroFree,
}

impl Tracker {
    fn width(self) -> usize {
        match self {
            Tracker::None => 0,
            Tracker::Length(m) => m + 1,
            Tracker::ZeroFree => 1,
        }
    }
}

/// Iterator over the multisets of a [`Plan`], optionally restricted to a
/// fixed assignment of the first residues.
pub struct Enumerator {
    plan: Plan,
    n: usize,
    len: usize,
    cap: u32,
    prefix: Vec<u32>,
    tracker: Tracker,
    width: usize,
    mult: Vec<u32>,
    placed: Vec<usize>,
    distinct: Vec<usize>,
    state: Vec<u64>,
    stack: Vec<Frame>,
    canon: Option<CanonTable>,
    nodes: u64,
    leaves: u64,
    timed_out: bool,
}

const DEADLINE_STRIDE: u64 = 1 << 12;

impl Enumerator {
    fn start(plan: Plan, prefix: Vec<u32>) -> Self {
        let spec = &plan.spec;
        let n = spec.modulus as usize;
        let len = spec.length;
        let tracker = match spec.constraint {
            None => Tracker::None,
            Some(ZeroSumConstraint::ForbidLength(m)) if m > len => Tracker::None,
            Some(ZeroSumConstraint::ForbidLength(m)) => Tracker::Length(m),
            Some(ZeroSumConstraint::ZeroFree) => Tracker::ZeroFree,
        };
        let width = tracker.width();
        let mut state = vec![0u64; (n + 1) * width];
        if let Tracker::Length(_) = tracker {
            state[0] = 1;
        }
        let canon = (plan.symmetry == Symmetry::Canonical).then(|| CanonTable::new(spec.modulus));
        let cap = spec.max_multiplicity.unwrap_or(len as u32).min(len as u32);
        let mut e = Enumerator {
            n,
            len,
            cap,
            prefix,
            tracker,
            width,
            mult: vec![0; n],
            placed: vec![0; n + 1],
            distinct: vec![0; n + 1],
            state,
            stack: Vec::with_capacity(n),
            canon,
            nodes: 0,
            leaves: 0,
            timed_out: false,
            plan,
        };
        e.push_frame(0);
        e
    }

    /// Search-tree nodes visited so far.
    pub fn nodes(&self) -> u64 {
        self.nodes
    }

    pub fn leaves(&self) -> u64 {
        self.leaves
    }

    /// True if iteration stopped because the deadline passed.
    pub fn timed_out(&self) -> bool {
        self.timed_out
    }

    fn cap_at(&self, r: usize) -> u32 {
        match self.plan.symmetry {
            Symmetry::Raw => self.cap,
            _ if r == 0 => self.plan.pin_first.map_or(self.cap, |p| p.min(self.cap)),
            _ => self.cap.min(self.mult[0]),
        }
    }

    fn push_frame(&mut self, r: usize) {
        let rem = (self.len - self.placed[r]) as i64;
        let cap = i64::from(self.cap_at(r));
        let (mut lo, mut hi) = if r + 1 == self.n {
            (rem, if rem <= cap { rem } else { -1 })
        } else {
            let others = (self.n - 1 - r) as i64;
            let rest_cap = if r == 0 { i64::MAX / 4 } else { cap };
            ((rem - others.saturating_mul(rest_cap)).max(0), rem.min(cap))
        };
        if r == 0 && self.plan.symmetry != Symmetry::Raw {
            if let Some(p) = self.plan.pin_first {
                lo = lo.max(i64::from(p));
                hi = hi.min(i64::from(p));
            }
        }
        if let Some(&fixed) = self.prefix.get(r) {
            let f = i64::from(fixed);
            if f < lo || f > hi {
                hi = -1;
                lo = 0;
            } else {
                lo = f;
                hi = f;
            }
        }
        self.stack.push(Frame { r, next: hi, lo });
    }

    /// Assigns `c` copies of residue `r`; false if the prefix is pruned.
    fn assign(&mut self, r: usize, c: u32) -> bool {
        self.mult[r] = c;
        let placed = self.placed[r] + c as usize;
        let distinct = self.distinct[r] + usize::from(c > 0);
        self.placed[r + 1] = placed;
        self.distinct[r + 1] = distinct;
        if let Some(d) = self.plan.spec.distinct {
            let left = (self.n - 1 - r).min(self.len - placed);
            if distinct > d || distinct + left < d {
                return false;
            }
        }
        if r == 0 && self.plan.symmetry != Symmetry::Raw {
            // every later residue is capped by mult[0]
            let others = (self.n - 1) as u64 * u64::from(c.min(self.cap));
            if ((self.len - placed) as u64) > others {
                return false;
            }
        }
        let w = self.width;
        if w == 0 {
            return true;
        }
        let n = self.n as u32;
        let (before, after) = self.state.split_at_mut((r + 1) * w);
        let prev = &before[r * w..];
        let cur = &mut after[..w];
        cur.copy_from_slice(prev);
        match self.tracker {
            Tracker::Length(m) => {
                for t in 0..c as usize {
                    // rows above the current prefix length stay empty
                    let top = (self.placed[r] + t + 1).min(m);
                    for j in (1..=top).rev() {
                        cur[j] |= rotate(cur[j - 1], r as u32, n);
                    }
                    if cur[m] & 1 == 1 {
                        return false;
                    }
                }
                true
            }
            Tracker::ZeroFree => {
                let mut mask = cur[0];
                for _ in 0..c {
                    mask |= rotate(mask, r as u32, n) | 1 << r;
                    if mask & 1 == 1 {
                        return false;
                    }
                }
                cur[0] = mask;
                true
            }
            Tracker::None => true,
        }
    }

    fn accept_leaf(&self, last: usize) -> bool {
        if let Some(d) = self.plan.spec.distinct {
            if self.distinct[last + 1] != d {
                return false;
            }
        }
        if self.plan.symmetry == Symmetry::Raw {
            if let Some(p) = self.plan.pin_first {
                if self.mult.iter().max().copied() != Some(p) {
                    return false;
                }
            }
        }
        match &self.canon {
            Some(table) => table.is_canonical(&self.mult),
            None => true,
        }
    }

    /// The next qualifying multiplicity vector, without allocating a `Seq`.
    pub(crate) fn next_mult(&mut self) -> Option<&[u32]> {
        loop {
            let top = self.stack.last_mut()?;
            if top.next < top.lo {
                self.stack.pop();
                continue;
            }
            let (r, c) = (top.r, top.next as u32);
            top.next -= 1;
            self.nodes += 1;
            if self.nodes.is_multiple_of(DEADLINE_STRIDE) {
                if let Some(deadline) = self.plan.deadline {
                    if Instant::now() >= deadline {
                        self.timed_out = true;
                        self.stack.clear();
                        return None;
                    }
                }
            }
            if !self.assign(r, c) {
                continue;
            }
            let placed = self.placed[r + 1];
            if r + 1 == self.n || placed == self.len {
                for m in &mut self.mult[r + 1..] {
                    *m = 0;
                }
                if self.prefix.len() > r + 1 && self.prefix[r + 1..].iter().any(|&f| f != 0) {
                    continue;
                }
                if self.accept_leaf(r) {
                    self.leaves += 1;
                    return Some(&self.mult);
                }
                continue;
            }
            self.push_frame(r + 1);
        }
    }
}

impl Iterator for Enumerator {
    type Item = Seq;

    fn next(&mut self) -> Option<Seq> {
        let modulus = self.plan.spec.modulus;
        self.next_mult()
            .map(|m| Seq::from_multiplicities(modulus, m.to_vec()).expect("valid modulus"))
    }
}

/// Every multiset described by `spec`, each exactly once (one per orbit in
/// canonical mode).
pub fn enumerate(spec: &EnumSpec) -> Result<Enumerator> {
    let plan = Plan::new(spec.clone(), spec.symmetry())?;
    Ok(plan.enumerator(&[]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn collect(spec: EnumSpec) -> Vec<String> {
        enumerate(&spec)
            .unwrap()
            .map(|s| s.to_list_text())
            .collect()
    }

    #[test]
    fn small_raw_enumeration() {
        let all = collect(EnumSpec::new(3, 2));
        assert_eq!(all, vec!["0,0", "0,1", "0,2", "1,1", "1,2", "2,2"]);
    }

    #[test]
    fn small_canonical_enumeration() {
        assert_eq!(collect(EnumSpec::new(3, 2).canonical()), vec!["0,0", "0,1"]);
    }

    #[test]
    fn egz_length_has_no_zero_sum_free_sequences() {
        assert!(collect(EnumSpec::new(5, 9).forbid_length(5)).is_empty());
        assert!(collect(EnumSpec::new(5, 9).forbid_length(5).canonical()).is_empty());
        assert_eq!(
            collect(EnumSpec::new(5, 8).forbid_length(5).canonical()),
            vec!["0,0,0,0,1,1,1,1"]
        );
    }

    #[test]
    fn distinct_and_caps() {
        let all = collect(EnumSpec::new(4, 3).distinct(2));
        assert!(all.iter().all(|s| {
            let seq = Seq::parse(s, Some(4)).unwrap();
            seq.distinct_count() == 2
        }));
        assert_eq!(all.len(), 12);
        let capped = collect(EnumSpec::new(3, 3).max_multiplicity(1));
        assert_eq!(capped, vec!["0,1,2"]);
        assert!(EnumSpec::new(3, 2).distinct(3).validate().is_err());
    }

    #[test]
    fn zero_free_enumeration() {
        // zero-free sequences of length 4 over Z_5 are exactly a^4, a != 0
        let all = collect(EnumSpec::new(5, 4).zero_free());
        assert_eq!(all, vec!["1,1,1,1", "2,2,2,2", "3,3,3,3", "4,4,4,4"]);
        // canonical mode falls back to raw multisets for zero-freeness
        assert_eq!(
            collect(EnumSpec::new(5, 4).zero_free().canonical()).len(),
            4
        );
    }

    #[test]
    fn partitions_cover_the_sequential_order() {
        let spec = EnumSpec::new(5, 6).forbid_length(5).canonical();
        let plan = Plan::new(spec.clone(), spec.symmetry()).unwrap();
        let seq: Vec<Seq> = plan.enumerator(&[]).collect();
        let parts: Vec<Seq> = plan
            .partitions()
            .iter()
            .flat_map(|p| plan.enumerator(p).collect::<Vec<_>>())
            .collect();
        assert_eq!(seq, parts);
    }

    #[test]
    fn deadline_stops_iteration() {
        let spec = EnumSpec::new(13, 20);
        let mut plan = Plan::new(spec, Symmetry::Raw).unwrap();
        plan.deadline = Some(Instant::now());
        let mut e = plan.enumerator(&[]);
        let count = e.by_ref().count();
        assert!(e.timed_out());
        assert!(count < 10_000);
    }
}
