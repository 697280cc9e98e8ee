//! Residues of `Z_n`, sequences stored as multiplicity vectors, and the
//! affine-unit action `v -> c(v - x)` that defines sequence equivalence.
//!
//! A sequence is a multiset: the order of terms never matters for any
//! zero-sum question, so `Seq` only records how often each residue occurs.
//! Canonical representatives pick, inside an orbit of the affine-unit group,
//! the member whose sorted value tuple is lexicographically smallest. For two
//! multisets of equal length that is the same as the lexicographically
//! *largest* multiplicity vector, which is what the code compares.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported modulus; residue sets are single `u64` masks.
pub const MAX_MODULUS: u32 = 64;

pub(crate) fn check_modulus(n: u32) -> Result<()> {
    if (2..=MAX_MODULUS).contains(&n) {
        Ok(())
    } else {
        Err(Error::InvalidModulus(n))
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Inverse of `a` modulo `n`, if it exists.
pub fn mod_inverse(a: u32, n: u32) -> Option<u32> {
    let (mut old_r, mut r) = (i64::from(a % n), i64::from(n));
    let (mut old_s, mut s) = (1i64, 0i64);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(i64::from(n)) as u32)
}

/// The units of `Z_n` in increasing order.
pub fn units(n: u32) -> Vec<u32> {
    (1..n).filter(|&c| gcd(c as u64, n as u64) == 1).collect()
}

/// An element of `Z_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Residue {
    value: u32,
    modulus: u32,
}

impl Residue {
    pub fn new(value: u32, modulus: u32) -> Result<Self> {
        check_modulus(modulus)?;
        if value >= modulus {
            return Err(Error::InvalidResidue {
                value: value.into(),
                modulus,
            });
        }
        Ok(Residue { value, modulus })
    }

    /// Reduces an arbitrary integer into `Z_n`.
    pub fn reduce(value: i64, modulus: u32) -> Result<Self> {
        check_modulus(modulus)?;
        Ok(Residue {
            value: value.rem_euclid(i64::from(modulus)) as u32,
            modulus,
        })
    }

    pub(crate) fn raw(value: u32, modulus: u32) -> Self {
        debug_assert!(value < modulus);
        Residue { value, modulus }
    }

    pub fn zero(modulus: u32) -> Result<Self> {
        Self::new(0, modulus)
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn modulus(self) -> u32 {
        self.modulus
    }

    /// Least positive integer representative: `bar(0) = n`.
    pub fn bar(self) -> u32 {
        if self.value == 0 {
            self.modulus
        } else {
            self.value
        }
    }

    /// True iff the residue generates `Z_n`, i.e. `gcd(value, n) = 1`.
    pub fn is_unit(self) -> bool {
        gcd(self.value.into(), self.modulus.into()) == 1
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    fn same_modulus(self, other: Residue) {
        assert_eq!(
            self.modulus, other.modulus,
            "residue arithmetic across different moduli"
        );
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for Residue {
    type Output = Residue;
    fn add(self, rhs: Residue) -> Residue {
        self.same_modulus(rhs);
        Residue::raw((self.value + rhs.value) % self.modulus, self.modulus)
    }
}

impl Sub for Residue {
    type Output = Residue;
    fn sub(self, rhs: Residue) -> Residue {
        self.same_modulus(rhs);
        Residue::raw(
            (self.value + self.modulus - rhs.value) % self.modulus,
            self.modulus,
        )
    }
}

impl Neg for Residue {
    type Output = Residue;
    fn neg(self) -> Residue {
        Residue::raw((self.modulus - self.value) % self.modulus, self.modulus)
    }
}

impl Mul for Residue {
    type Output = Residue;
    fn mul(self, rhs: Residue) -> Residue {
        self.same_modulus(rhs);
        Residue::raw(
            ((self.value as u64 * rhs.value as u64) % self.modulus as u64) as u32,
            self.modulus,
        )
    }
}

impl Mul<u32> for Residue {
    type Output = Residue;
    fn mul(self, rhs: u32) -> Residue {
        Residue::raw(
            ((self.value as u64 * rhs as u64) % self.modulus as u64) as u32,
            self.modulus,
        )
    }
}

/// A finite sequence over `Z_n`, stored as the multiplicity of each residue.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Seq {
    modulus: u32,
    mult: Vec<u32>,
}

impl Seq {
    pub fn empty(modulus: u32) -> Result<Self> {
        check_modulus(modulus)?;
        Ok(Seq {
            modulus,
            mult: vec![0; modulus as usize],
        })
    }

    pub fn from_values(modulus: u32, values: &[u32]) -> Result<Self> {
        let mut s = Seq::empty(modulus)?;
        for &v in values {
            if v >= modulus {
                return Err(Error::InvalidResidue {
                    value: v.into(),
                    modulus,
                });
            }
            s.mult[v as usize] += 1;
        }
        Ok(s)
    }

    pub fn from_residues(modulus: u32, values: &[Residue]) -> Result<Self> {
        let mut s = Seq::empty(modulus)?;
        for r in values {
            if r.modulus != modulus {
                return Err(Error::ModulusMismatch {
                    left: modulus,
                    right: r.modulus,
                });
            }
            s.mult[r.value as usize] += 1;
        }
        Ok(s)
    }

    pub fn from_multiplicities(modulus: u32, mult: Vec<u32>) -> Result<Self> {
        check_modulus(modulus)?;
        if mult.len() != modulus as usize {
            return Err(Error::Parse(format!(
                "expected {} multiplicities, got {}",
                modulus,
                mult.len()
            )));
        }
        Ok(Seq { modulus, mult })
    }

    /// `(value^count, ...)` pairs, e.g. `&[(0, 4), (1, 4)]`.
    pub fn from_powers(modulus: u32, powers: &[(u32, u32)]) -> Result<Self> {
        let mut s = Seq::empty(modulus)?;
        for &(v, c) in powers {
            if v >= modulus {
                return Err(Error::InvalidResidue {
                    value: v.into(),
                    modulus,
                });
            }
            s.mult[v as usize] += c;
        }
        Ok(s)
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn multiplicities(&self) -> &[u32] {
        &self.mult
    }

    /// `v_g(S)`.
    pub fn multiplicity(&self, g: u32) -> u32 {
        self.mult[(g % self.modulus) as usize]
    }

    pub fn len(&self) -> usize {
        self.mult.iter().map(|&m| m as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.mult.iter().all(|&m| m == 0)
    }

    /// `h(S)`, the largest multiplicity.
    pub fn height(&self) -> u32 {
        self.mult.iter().copied().max().unwrap_or(0)
    }

    pub fn distinct_count(&self) -> usize {
        self.mult.iter().filter(|&&m| m > 0).count()
    }

    /// `sigma(S)`.
    pub fn sum(&self) -> Residue {
        let n = self.modulus as u64;
        let s = self
            .mult
            .iter()
            .enumerate()
            .map(|(v, &m)| (v as u64 * m as u64) % n)
            .sum::<u64>()
            % n;
        Residue::raw(s as u32, self.modulus)
    }

    /// Values in non-decreasing order.
    pub fn sorted_values(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.len());
        for (v, &m) in self.mult.iter().enumerate() {
            out.extend(std::iter::repeat_n(v as u32, m as usize));
        }
        out
    }

    pub fn residues(&self) -> impl Iterator<Item = Residue> + '_ {
        let n = self.modulus;
        self.mult
            .iter()
            .enumerate()
            .flat_map(move |(v, &m)| std::iter::repeat_n(Residue::raw(v as u32, n), m as usize))
    }

    pub fn push(&mut self, value: u32, count: u32) {
        self.mult[(value % self.modulus) as usize] += count;
    }

    /// True iff `self` is a subsequence (sub-multiset) of `other`.
    pub fn is_subsequence_of(&self, other: &Seq) -> bool {
        self.modulus == other.modulus && self.mult.iter().zip(&other.mult).all(|(a, b)| a <= b)
    }

    /// `S T^{-1}`: delete the terms of `sub` from `self`.
    pub fn remove(&self, sub: &Seq) -> Result<Seq> {
        if sub.modulus != self.modulus {
            return Err(Error::ModulusMismatch {
                left: self.modulus,
                right: sub.modulus,
            });
        }
        if !sub.is_subsequence_of(self) {
            return Err(Error::HypothesisNotMet(format!(
                "{sub} is not a subsequence of {self}"
            )));
        }
        let mult = self
            .mult
            .iter()
            .zip(&sub.mult)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Seq {
            modulus: self.modulus,
            mult,
        })
    }

    /// Concatenation (multiset union).
    pub fn join(&self, other: &Seq) -> Result<Seq> {
        if other.modulus != self.modulus {
            return Err(Error::ModulusMismatch {
                left: self.modulus,
                right: other.modulus,
            });
        }
        let mult = self
            .mult
            .iter()
            .zip(&other.mult)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Seq {
            modulus: self.modulus,
            mult,
        })
    }

    /// Comma-separated sorted values, e.g. `0,0,1,1`.
    pub fn to_list_text(&self) -> String {
        self.sorted_values()
            .iter()
            .map(u32::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Multiplicity form, e.g. `n=5;m=4,4,0,0,0`.
    pub fn to_mult_text(&self) -> String {
        let m = self
            .mult
            .iter()
            .map(u32::to_string)
            .collect::<Vec<_>>()
            .join(",");
        format!("n={};m={}", self.modulus, m)
    }

    /// Parses either multiplicity form, or a value list when `modulus` is given.
    pub fn parse(text: &str, modulus: Option<u32>) -> Result<Seq> {
        let text = text.trim();
        if let Some(rest) = text.strip_prefix("n=") {
            let (n_part, m_part) = rest
                .split_once(';')
                .ok_or_else(|| Error::Parse(format!("missing ';' in {text:?}")))?;
            let n: u32 = n_part
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad modulus {n_part:?}")))?;
            if let Some(given) = modulus {
                if given != n {
                    return Err(Error::ModulusMismatch {
                        left: given,
                        right: n,
                    });
                }
            }
            let m_part = m_part
                .trim()
                .strip_prefix("m=")
                .ok_or_else(|| Error::Parse(format!("missing 'm=' in {text:?}")))?;
            let mult = parse_list(m_part)?;
            return Seq::from_multiplicities(n, mult);
        }
        let n = modulus
            .ok_or_else(|| Error::Parse("value list needs an explicit modulus".to_string()))?;
        let values = parse_list(text)?;
        Seq::from_values(n, &values)
    }
}

fn parse_list(text: &str) -> Result<Vec<u32>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad integer {t:?}")))
        })
        .collect()
}

impl FromStr for Seq {
    type Err = Error;
    fn from_str(s: &str) -> Result<Seq> {
        Seq::parse(s, None)
    }
}

/// Exponent notation, `0^4 1^4 2`; the empty sequence prints as `()`.
impl fmt::Display for Seq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "()");
        }
        let mut first = true;
        for (v, &m) in self.mult.iter().enumerate() {
            if m == 0 {
                continue;
            }
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if m == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{m}")?;
            }
        }
        Ok(())
    }
}

/// The map `v -> c(v - x)` with `c` a unit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Transform {
    c: u32,
    x: Residue,
}

impl Transform {
    pub fn new(c: u32, x: Residue) -> Result<Self> {
        let n = x.modulus();
        let c = c % n;
        if gcd(c.into(), n.into()) != 1 {
            return Err(Error::InvalidTransform { c, modulus: n });
        }
        Ok(Transform { c, x })
    }

    pub fn identity(modulus: u32) -> Result<Self> {
        Transform::new(1, Residue::zero(modulus)?)
    }

    pub fn c(&self) -> u32 {
        self.c
    }

    pub fn x(&self) -> Residue {
        self.x
    }

    pub fn modulus(&self) -> u32 {
        self.x.modulus()
    }

    pub fn apply(&self, v: Residue) -> Residue {
        (v - self.x) * self.c
    }

    /// `w -> c^{-1} w + x`, written in the same `c'(w - x')` form.
    pub fn inverse(&self) -> Transform {
        let n = self.modulus();
        let c_inv = mod_inverse(self.c, n).expect("transform multiplier is a unit");
        Transform {
            c: c_inv,
            x: -(self.x * self.c),
        }
    }

    /// `self` after `first`.
    pub fn compose(&self, first: &Transform) -> Transform {
        // c2(c1(v - x1) - x2) = c2 c1 (v - (x1 + c1^{-1} x2))
        let n = self.modulus();
        let c1_inv = mod_inverse(first.c, n).expect("unit");
        let c = ((self.c as u64 * first.c as u64) % n as u64) as u32;
        Transform {
            c,
            x: first.x + self.x * c1_inv,
        }
    }

    /// All `n * phi(n)` transforms ordered by `c`, then `x`.
    pub fn all(modulus: u32) -> Result<Vec<Transform>> {
        check_modulus(modulus)?;
        let mut out = Vec::new();
        for c in units(modulus) {
            for x in 0..modulus {
                out.push(Transform {
                    c,
                    x: Residue::raw(x, modulus),
                });
            }
        }
        Ok(out)
    }
}

impl fmt::Display for Transform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v -> {}(v - {})", self.c, self.x)
    }
}

pub fn apply_transform(s: &Seq, t: &Transform) -> Result<Seq> {
    if t.modulus() != s.modulus {
        return Err(Error::ModulusMismatch {
            left: s.modulus,
            right: t.modulus(),
        });
    }
    let n = s.modulus as u64;
    let mut mult = vec![0u32; s.modulus as usize];
    for (v, &m) in s.mult.iter().enumerate() {
        let w = ((v as u64 + n - t.x.value() as u64) % n * t.c as u64) % n;
        mult[w as usize] = m;
    }
    Ok(Seq {
        modulus: s.modulus,
        mult,
    })
}

/// Orders multisets of equal length by their sorted value tuples.
pub fn sorted_tuple_cmp(a: &Seq, b: &Seq) -> Ordering {
    a.sorted_values().cmp(&b.sorted_values())
}

/// The orbit member with the lexicographically smallest sorted value tuple,
/// and the first transform (by `c`, then `x`) that reaches it.
pub fn canonicalize(s: &Seq) -> (Seq, Transform) {
    let n = s.modulus;
    let mut best: Option<(Seq, Transform)> = None;
    for t in Transform::all(n).expect("valid modulus") {
        let image = apply_transform(s, &t).expect("same modulus");
        let better = match &best {
            None => true,
            Some((b, _)) => image.mult > b.mult,
        };
        if better {
            best = Some((image, t));
        }
    }
    best.expect("at least the identity transform")
}

pub fn equivalent(s: &Seq, t: &Seq) -> Result<bool> {
    if s.modulus != t.modulus {
        return Err(Error::ModulusMismatch {
            left: s.modulus,
            right: t.modulus,
        });
    }
    if s.len() != t.len() {
        return Ok(false);
    }
    Ok(canonicalize(s).0 == canonicalize(t).0)
}

/// Precomputed unit multipliers for fast canonicity tests on raw
/// multiplicity slices.
#[derive(Clone, Debug)]
pub(crate) struct CanonTable {
    n: usize,
    /// For each unit `c`, the map `w -> c^{-1} w mod n`.
    inv_maps: Vec<Vec<u32>>,
}

impl CanonTable {
    pub(crate) fn new(modulus: u32) -> Self {
        let n = modulus as usize;
        let inv_maps = units(modulus)
            .into_iter()
            .map(|c| {
                let ci = mod_inverse(c, modulus).expect("unit") as usize;
                (0..n).map(|w| ((ci * w) % n) as u32).collect()
            })
            .collect();
        CanonTable { n, inv_maps }
    }

    /// True iff `mult` is the lexicographically largest multiplicity vector
    /// of its orbit.
    pub(crate) fn is_canonical(&self, mult: &[u32]) -> bool {
        let n = self.n;
        let top = mult[0];
        if mult.iter().any(|&m| m > top) {
            return false;
        }
        for x in 0..n {
            if mult[x] != top {
                continue;
            }
            for map in &self.inv_maps {
                for w in 1..n {
                    let mut src = map[w] as usize + x;
                    if src >= n {
                        src -= n;
                    }
                    let image = mult[src];
                    if image > mult[w] {
                        return false;
                    }
                    if image < mult[w] {
                        break;
                    }
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(n: u32, v: &[u32]) -> Seq {
        Seq::from_values(n, v).unwrap()
    }

    #[test]
    fn bar_map() {
        assert_eq!(Residue::new(0, 7).unwrap().bar(), 7);
        assert_eq!(Residue::new(3, 7).unwrap().bar(), 3);
        assert_eq!(Residue::new(5, 6).unwrap().bar(), 5);
        assert!(Residue::new(6, 6).is_err());
    }

    #[test]
    fn units_and_generators() {
        assert!(Residue::new(3, 7).unwrap().is_unit());
        assert!(!Residue::new(2, 6).unwrap().is_unit());
        assert!(!Residue::new(0, 5).unwrap().is_unit());
        assert_eq!(units(12), vec![1, 5, 7, 11]);
        assert_eq!(mod_inverse(3, 7), Some(5));
        assert_eq!(mod_inverse(2, 6), None);
    }

    #[test]
    fn transform_examples() {
        let s = seq(5, &[2, 2, 2, 2, 3, 3, 3, 3]);
        let t = Transform::new(1, Residue::new(2, 5).unwrap()).unwrap();
        assert_eq!(
            apply_transform(&s, &t).unwrap(),
            seq(5, &[0, 0, 0, 0, 1, 1, 1, 1])
        );

        let id = Transform::identity(5).unwrap();
        assert_eq!(apply_transform(&s, &id).unwrap(), s);

        let t = Transform::new(2, Residue::zero(3).unwrap()).unwrap();
        assert_eq!(
            apply_transform(&seq(3, &[1, 1]), &t).unwrap(),
            seq(3, &[2, 2])
        );
    }

    #[test]
    fn non_coprime_multiplier_is_rejected() {
        let err = Transform::new(2, Residue::zero(6).unwrap()).unwrap_err();
        assert_eq!(err, Error::InvalidTransform { c: 2, modulus: 6 });
        assert!(Transform::new(0, Residue::zero(5).unwrap()).is_err());
    }

    #[test]
    fn transform_modulus_mismatch() {
        let t = Transform::identity(7).unwrap();
        assert!(apply_transform(&seq(5, &[1]), &t).is_err());
    }

    #[test]
    fn inverse_and_compose() {
        let n = 9;
        for t in Transform::all(n).unwrap() {
            let s = seq(n, &[0, 1, 1, 4, 7, 8, 8, 8]);
            let back = apply_transform(&apply_transform(&s, &t).unwrap(), &t.inverse()).unwrap();
            assert_eq!(back, s);
            for u in Transform::all(n).unwrap().iter().step_by(5) {
                let two_step = apply_transform(&apply_transform(&s, &t).unwrap(), u).unwrap();
                assert_eq!(apply_transform(&s, &u.compose(&t)).unwrap(), two_step);
            }
        }
    }

    #[test]
    fn canonical_examples() {
        let (c, t) = canonicalize(&seq(5, &[2, 2, 2, 2, 3, 3, 3, 3]));
        assert_eq!(c, seq(5, &[0, 0, 0, 0, 1, 1, 1, 1]));
        assert_eq!(
            apply_transform(&seq(5, &[2, 2, 2, 2, 3, 3, 3, 3]), &t).unwrap(),
            c
        );

        let already = seq(5, &[0, 0, 0, 0, 1, 1, 1, 1]);
        assert_eq!(canonicalize(&already).0, already);

        let empty = Seq::empty(5).unwrap();
        assert_eq!(canonicalize(&empty).0, empty);
    }

    #[test]
    fn equivalence_examples() {
        let a = seq(5, &[2, 2, 2, 2, 3, 3, 3, 3]);
        let b = seq(5, &[0, 0, 0, 0, 1, 1, 1, 1]);
        assert!(equivalent(&a, &b).unwrap());
        assert!(equivalent(&a, &a).unwrap());
        assert!(!equivalent(&seq(3, &[0, 0]), &seq(3, &[0, 1])).unwrap());
        assert!(equivalent(&seq(3, &[0]), &seq(5, &[0])).is_err());
    }

    #[test]
    fn fast_canonical_test_agrees_with_canonicalize() {
        let table = CanonTable::new(6);
        // every multiset of length 4 over Z_6
        let mut count = 0;
        let mut stack = vec![(0usize, 4u32, vec![0u32; 6])];
        while let Some((r, rem, mult)) = stack.pop() {
            if r == 5 {
                let mut m = mult.clone();
                m[5] = rem;
                let s = Seq::from_multiplicities(6, m.clone()).unwrap();
                assert_eq!(table.is_canonical(&m), canonicalize(&s).0 == s, "{s}");
                count += 1;
                continue;
            }
            for c in 0..=rem {
                let mut m = mult.clone();
                m[r] = c;
                stack.push((r + 1, rem - c, m));
            }
        }
        assert_eq!(count, 126);
    }

    #[test]
    fn text_formats() {
        let s = Seq::parse("n=5;m=4,4,0,0,0", None).unwrap();
        assert_eq!(s, seq(5, &[0, 0, 0, 0, 1, 1, 1, 1]));
        assert_eq!(s.to_mult_text(), "n=5;m=4,4,0,0,0");
        assert_eq!(s.to_list_text(), "0,0,0,0,1,1,1,1");
        assert_eq!(s.to_string(), "0^4 1^4");
        assert_eq!(
            Seq::parse("1,1,2,4", Some(5)).unwrap().to_string(),
            "1^2 2 4"
        );
        assert!(Seq::parse("1,2", None).is_err());
        assert!(Seq::parse("1,7", Some(5)).is_err());
        assert!(Seq::parse("n=5;m=1,2", None).is_err());
        assert!(Seq::parse("n=5;m=1,1,1,1,1", Some(7)).is_err());
        assert_eq!(Seq::parse("", Some(4)).unwrap(), Seq::empty(4).unwrap());
        assert_eq!(Seq::empty(4).unwrap().to_string(), "()");
    }

    #[test]
    fn sequence_statistics() {
        let s = seq(7, &[3, 3, 3, 3, 6]);
        assert_eq!(s.len(), 5);
        assert_eq!(s.height(), 4);
        assert_eq!(s.multiplicity(3), 4);
        assert_eq!(s.distinct_count(), 2);
        assert_eq!(s.sum().value(), 4);
        let sub = seq(7, &[3, 6]);
        assert_eq!(s.remove(&sub).unwrap(), seq(7, &[3, 3, 3]));
        assert!(sub.remove(&s).is_err());
    }
}
