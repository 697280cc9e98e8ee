//! Residue sets, sumsets, and the `(length, residue)` reachability table
//! behind every zero-sum query.
//!
//! A row of the table is a `u64` mask over `Z_n`; inserting a term `a`
//! rotates row `j - 1` by `a` and ORs it into row `j`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::zmod::{check_modulus, Residue, Seq};

#[inline]
pub(crate) fn full_mask(n: u32) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Translate every member of `mask` by `a` in `Z_n`.
#[inline]
pub(crate) fn rotate(mask: u64, a: u32, n: u32) -> u64 {
    if a == 0 {
        return mask;
    }
    ((mask << a) | (mask >> (n - a))) & full_mask(n)
}

pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn smallest_prime_divisor(n: u32) -> Option<u32> {
    (2..=n).find(|d| n.is_multiple_of(*d))
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ResidueSet {
    modulus: u32,
    mask: u64,
}

impl ResidueSet {
    pub fn empty(modulus: u32) -> Result<Self> {
        check_modulus(modulus)?;
        Ok(ResidueSet { modulus, mask: 0 })
    }

    pub fn full(modulus: u32) -> Result<Self> {
        check_modulus(modulus)?;
        Ok(ResidueSet {
            modulus,
            mask: full_mask(modulus),
        })
    }

    pub fn from_values(modulus: u32, values: &[u32]) -> Result<Self> {
        let mut s = ResidueSet::empty(modulus)?;
        for &v in values {
            if v >= modulus {
                return Err(Error::InvalidResidue {
                    value: v.into(),
                    modulus,
                });
            }
            s.mask |= 1 << v;
        }
        Ok(s)
    }

    pub(crate) fn from_mask(modulus: u32, mask: u64) -> Self {
        ResidueSet {
            modulus,
            mask: mask & full_mask(modulus),
        }
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn contains(&self, v: u32) -> bool {
        v < self.modulus && self.mask >> v & 1 == 1
    }

    pub fn insert(&mut self, v: u32) {
        self.mask |= 1 << (v % self.modulus);
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn values(&self) -> Vec<u32> {
        (0..self.modulus).filter(|&v| self.contains(v)).collect()
    }

    pub fn residues(&self) -> Vec<Residue> {
        self.values()
            .into_iter()
            .map(|v| Residue::raw(v, self.modulus))
            .collect()
    }

    /// `a + self`.
    pub fn translate(&self, a: u32) -> ResidueSet {
        ResidueSet {
            modulus: self.modulus,
            mask: rotate(self.mask, a % self.modulus, self.modulus),
        }
    }

    pub fn union(&self, other: &ResidueSet) -> ResidueSet {
        assert_eq!(self.modulus, other.modulus);
        ResidueSet {
            modulus: self.modulus,
            mask: self.mask | other.mask,
        }
    }
}

impl fmt::Debug for ResidueSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} (mod {})", self.modulus)
    }
}

impl fmt::Display for ResidueSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vals: Vec<String> = self.values().iter().map(u32::to_string).collect();
        write!(f, "{{{}}}", vals.join(","))
    }
}

/// `A + B = {a + b : a in A, b in B}`.
pub fn sumset(a: &ResidueSet, b: &ResidueSet) -> Result<ResidueSet> {
    if a.modulus != b.modulus {
        return Err(Error::ModulusMismatch {
            left: a.modulus,
            right: b.modulus,
        });
    }
    let mut mask = 0;
    for v in a.values() {
        mask |= rotate(b.mask, v, a.modulus);
    }
    Ok(ResidueSet::from_mask(a.modulus, mask))
}

/// Cauchy-Davenport lower bound `min(p, sum |A_i| - t + 1)`.
pub fn cd_bound(sizes: &[u32], p: u32) -> Result<u32> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if sizes.is_empty() {
        return Err(Error::range("number of sets", 0, 1, i64::MAX));
    }
    for &s in sizes {
        if s == 0 || s > p {
            return Err(Error::range("set size", s, 1, p.into()));
        }
    }
    let total: u64 = sizes.iter().map(|&s| u64::from(s)).sum();
    let bound = total - sizes.len() as u64 + 1;
    Ok(bound.min(p.into()) as u32)
}

/// `reach[j]` is the set of sums of `j`-term subsequences, i.e. row `j` is
/// `Sigma_j(S)` for `j >= 1` and row 0 is `{0}`.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReachTable {
    modulus: u32,
    rows: Vec<u64>,
}

impl fmt::Debug for ReachTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut d = f.debug_map();
        for j in 0..self.rows.len() {
            d.entry(&j, &self.row(j));
        }
        d.finish()
    }
}

impl ReachTable {
    /// Table of the empty sequence.
    pub fn new(modulus: u32) -> Result<Self> {
        check_modulus(modulus)?;
        Ok(ReachTable {
            modulus,
            rows: vec![1],
        })
    }

    pub fn build(s: &Seq) -> Self {
        let mut t = ReachTable {
            modulus: s.modulus(),
            rows: Vec::with_capacity(s.len() + 1),
        };
        t.rows.push(1);
        for (v, &m) in s.multiplicities().iter().enumerate() {
            for _ in 0..m {
                t.insert(v as u32);
            }
        }
        t
    }

    /// Appends one term to the source sequence.
    pub fn insert(&mut self, a: u32) {
        let n = self.modulus;
        let a = a % n;
        self.rows.push(0);
        for j in (1..self.rows.len()).rev() {
            self.rows[j] |= rotate(self.rows[j - 1], a, n);
        }
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Length of the source sequence.
    pub fn len(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn row(&self, j: usize) -> ResidueSet {
        ResidueSet::from_mask(self.modulus, self.rows.get(j).copied().unwrap_or(0))
    }

    pub fn reaches(&self, j: usize, r: u32) -> bool {
        self.rows.get(j).is_some_and(|&row| row >> r & 1 == 1)
    }

    /// `Sigma(S)`: union of rows `1..=len`.
    pub fn nonempty_sums(&self) -> ResidueSet {
        let mask = self.rows[1..].iter().fold(0, |acc, &r| acc | r);
        ResidueSet::from_mask(self.modulus, mask)
    }
}

pub fn reach_table(s: &Seq) -> ReachTable {
    ReachTable::build(s)
}

/// `Sigma_k(S)`.
pub fn sums_exact(s: &Seq, k: usize) -> Result<ResidueSet> {
    let len = s.len();
    if k == 0 || k > len {
        return Err(Error::range("k", k, 1, len as i64));
    }
    Ok(ReachTable::build(s).row(k))
}

/// `Sigma(S)`.
pub fn sums_all(s: &Seq) -> Result<ResidueSet> {
    if s.is_empty() {
        return Err(Error::EmptySequence);
    }
    Ok(ReachTable::build(s).nonempty_sums())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: u32, v: &[u32]) -> ResidueSet {
        ResidueSet::from_values(n, v).unwrap()
    }

    fn seq(n: u32, v: &[u32]) -> Seq {
        Seq::from_values(n, v).unwrap()
    }

    #[test]
    fn sumset_examples() {
        assert_eq!(
            sumset(&set(5, &[1, 2]), &set(5, &[1, 3])).unwrap(),
            set(5, &[0, 2, 3, 4])
        );
        let b = set(7, &[1, 5, 6]);
        assert_eq!(sumset(&set(7, &[0]), &b).unwrap(), b);
        let full = ResidueSet::full(5).unwrap();
        assert_eq!(sumset(&full, &set(5, &[2])).unwrap(), full);
        assert!(sumset(&set(5, &[1]), &set(7, &[1])).is_err());
    }

    #[test]
    fn rotate_wraps() {
        assert_eq!(rotate(0b10001, 1, 5), 0b00011);
        assert_eq!(rotate(1 << 63, 1, 64), 1);
        assert_eq!(rotate(0b1, 0, 5), 0b1);
    }

    #[test]
    fn cd_bound_examples() {
        assert_eq!(cd_bound(&[2, 2], 5).unwrap(), 3);
        for p in [2, 3, 5, 7, 31] {
            assert_eq!(cd_bound(&[p], p).unwrap(), p);
        }
        assert_eq!(cd_bound(&[3, 3, 3], 7).unwrap(), 7);
        assert_eq!(cd_bound(&[2, 2], 6), Err(Error::NotPrime(6)));
        assert!(cd_bound(&[0, 2], 5).is_err());
        assert!(cd_bound(&[], 5).is_err());
    }

    #[test]
    fn reach_rows() {
        let s = seq(5, &[1, 1, 2]);
        let t = reach_table(&s);
        assert_eq!(t.row(0), set(5, &[0]));
        assert_eq!(t.row(2), set(5, &[2, 3]));
        assert_eq!(t.nonempty_sums(), set(5, &[1, 2, 3, 4]));
        assert_eq!(reach_table(&seq(3, &[1, 1, 1])).row(3), set(3, &[0]));
    }

    #[test]
    fn sums_exact_examples() {
        let s = seq(5, &[0, 0, 0, 0, 1, 1, 1, 1]);
        assert_eq!(sums_exact(&s, 5).unwrap(), set(5, &[1, 2, 3, 4]));
        assert_eq!(sums_exact(&s, 8).unwrap(), set(5, &[s.sum().value()]));
        assert_eq!(
            sums_exact(&seq(7, &[1, 2, 3, 4, 5, 6, 0]), 7).unwrap(),
            set(7, &[0])
        );
        assert!(sums_exact(&s, 0).is_err());
        assert!(sums_exact(&s, 9).is_err());
    }

    #[test]
    fn sums_all_examples() {
        assert_eq!(
            sums_all(&seq(7, &[3, 3, 3, 3, 6])).unwrap(),
            set(7, &[1, 2, 3, 4, 5, 6])
        );
        assert_eq!(sums_all(&seq(9, &[0])).unwrap(), set(9, &[0]));
        assert_eq!(
            sums_all(&seq(5, &[1, 1, 2])).unwrap(),
            set(5, &[1, 2, 3, 4])
        );
        assert_eq!(sums_all(&Seq::empty(5).unwrap()), Err(Error::EmptySequence));
    }

    #[test]
    fn primes() {
        let ps: Vec<u32> = (0..32).filter(|&p| is_prime(p)).collect();
        assert_eq!(ps, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31]);
        assert_eq!(smallest_prime_divisor(9), Some(3));
        assert_eq!(smallest_prime_divisor(10), Some(2));
    }
}
