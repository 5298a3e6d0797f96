//! The cyclic group Z_n, its elements, and finite multisets ("sequences") over it.
//!
//! A [`Sequence`] is stored as a dense multiplicity vector indexed by residue,
//! with its length and sum cached. Everything downstream (subset-sum DP,
//! index scans, enumeration) indexes by residue, so the dense form keeps
//! multiplicity queries O(1).

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest group order accepted by the dense representation.
pub const MAX_ORDER: u32 = 1 << 16;

/// The additive group Z_n.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CyclicGroup {
    order: u32,
    is_prime: bool,
}

impl CyclicGroup {
    pub fn new(order: u64) -> Result<Self> {
        if order < 2 {
            return Err(Error::OrderTooSmall(order));
        }
        if order > MAX_ORDER as u64 {
            return Err(Error::OrderTooLarge {
                order,
                cap: MAX_ORDER,
            });
        }
        let order = order as u32;
        Ok(CyclicGroup {
            order,
            is_prime: is_prime(order),
        })
    }

    #[inline]
    pub fn order(&self) -> u32 {
        self.order
    }

    #[inline]
    pub fn is_prime(&self) -> bool {
        self.is_prime
    }

    pub fn element(&self, residue: u64) -> Result<Element> {
        if residue >= self.order as u64 {
            return Err(Error::ResidueOutOfRange {
                residue,
                order: self.order,
            });
        }
        Ok(Element {
            residue: residue as u32,
            group: *self,
        })
    }

    /// Reduces an arbitrary integer into `[0, n)`.
    #[inline]
    pub fn reduce(&self, value: i64) -> u32 {
        value.rem_euclid(self.order as i64) as u32
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        ((a as u64 + b as u64) % self.order as u64) as u32
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.order - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.order as u64) as u32
    }

    pub fn is_unit(&self, a: u32) -> bool {
        a < self.order && a.gcd(&self.order) == 1
    }

    /// Units of Z_n in ascending order.
    pub fn units(&self) -> Vec<u32> {
        units_mod(self.order)
    }

    pub fn unit_count(&self) -> usize {
        totient(self.order) as usize
    }

    /// Multiplicative inverse of a unit.
    pub fn inverse(&self, u: u32) -> Option<u32> {
        inverse_mod(u, self.order)
    }

    /// Order of `a` as a group element, `n / gcd(a, n)`.
    pub fn element_order(&self, a: u32) -> u32 {
        self.order / a.gcd(&self.order)
    }
}

/// An element of Z_n.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Element {
    residue: u32,
    group: CyclicGroup,
}

impl Element {
    #[inline]
    pub fn residue(&self) -> u32 {
        self.residue
    }

    #[inline]
    pub fn group(&self) -> CyclicGroup {
        self.group
    }

    pub fn order(&self) -> u32 {
        self.group.element_order(self.residue)
    }

    pub fn is_unit(&self) -> bool {
        self.group.is_unit(self.residue)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.residue)
    }
}

/// Trial division.
pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u32;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

pub(crate) fn units_mod(m: u32) -> Vec<u32> {
    if m == 1 {
        return vec![0];
    }
    (1..m).filter(|u| u.gcd(&m) == 1).collect()
}

pub(crate) fn totient(m: u32) -> u32 {
    let mut result = m;
    let mut rest = m;
    let mut d = 2u32;
    while d * d <= rest {
        if rest.is_multiple_of(d) {
            while rest.is_multiple_of(d) {
                rest /= d;
            }
            result -= result / d;
        }
        d += 1;
    }
    if rest > 1 {
        result -= result / rest;
    }
    result
}

pub(crate) fn inverse_mod(u: u32, m: u32) -> Option<u32> {
    if m == 1 {
        return Some(0);
    }
    let e = (u as i64).extended_gcd(&(m as i64));
    if e.gcd != 1 {
        return None;
    }
    Some(e.x.rem_euclid(m as i64) as u32)
}

/// A finite multiset over Z_n.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Sequence {
    group: CyclicGroup,
    mult: Vec<u32>,
    len: usize,
    sum: u32,
}

impl Sequence {
    pub fn empty(group: CyclicGroup) -> Self {
        Sequence {
            group,
            mult: vec![0; group.order as usize],
            len: 0,
            sum: 0,
        }
    }

    pub fn from_residues(group: CyclicGroup, residues: &[u32]) -> Result<Self> {
        let mut seq = Sequence::empty(group);
        for &r in residues {
            if r >= group.order {
                return Err(Error::ResidueOutOfRange {
                    residue: r as u64,
                    order: group.order,
                });
            }
            seq.push(r);
        }
        Ok(seq)
    }

    pub fn from_multiplicities(group: CyclicGroup, mult: Vec<u32>) -> Result<Self> {
        if mult.len() != group.order as usize {
            return Err(Error::InvalidSpec(format!(
                "multiplicity vector has length {}, expected {}",
                mult.len(),
                group.order
            )));
        }
        let mut len = 0usize;
        let mut sum = 0u64;
        for (a, &m) in mult.iter().enumerate() {
            len += m as usize;
            sum = (sum + a as u64 * m as u64) % group.order as u64;
        }
        Ok(Sequence {
            group,
            mult,
            len,
            sum: sum as u32,
        })
    }

    /// Parses `term ("," term)*` where a term is `residue` or `residue^mult`.
    pub fn parse(text: &str, n: u64) -> Result<Self> {
        let group = CyclicGroup::new(n)?;
        let mut seq = Sequence::empty(group);
        for raw in text.split(',') {
            let term = raw.trim();
            let bad = |reason: &str| Error::Parse {
                term: raw.to_string(),
                reason: reason.to_string(),
            };
            if term.is_empty() {
                return Err(bad("empty term"));
            }
            let (res_text, mult_text) = match term.split_once('^') {
                Some((r, m)) => (r.trim(), Some(m.trim())),
                None => (term, None),
            };
            let residue: u64 = res_text
                .parse()
                .map_err(|_| bad("residue is not a non-negative integer"))?;
            let count: u32 = match mult_text {
                Some(m) => m
                    .parse()
                    .map_err(|_| bad("multiplicity is not a positive integer"))?,
                None => 1,
            };
            if count == 0 {
                return Err(bad("multiplicity must be at least 1"));
            }
            let residue = group.element(residue)?.residue();
            seq.push_many(residue, count);
        }
        Ok(seq)
    }

    #[inline]
    pub fn group(&self) -> CyclicGroup {
        self.group
    }

    #[inline]
    pub fn order(&self) -> u32 {
        self.group.order
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// σ(S).
    #[inline]
    pub fn sum(&self) -> u32 {
        self.sum
    }

    pub fn is_zero_sum(&self) -> bool {
        self.sum == 0
    }

    #[inline]
    pub fn multiplicity(&self, a: u32) -> u32 {
        self.mult.get(a as usize).copied().unwrap_or(0)
    }

    pub fn multiplicities(&self) -> &[u32] {
        &self.mult
    }

    pub fn contains(&self, a: u32) -> bool {
        self.multiplicity(a) > 0
    }

    /// supp(S), ascending.
    pub fn support(&self) -> impl Iterator<Item = u32> + '_ {
        self.mult
            .iter()
            .enumerate()
            .filter(|(_, &m)| m > 0)
            .map(|(a, _)| a as u32)
    }

    pub fn support_size(&self) -> usize {
        self.mult.iter().filter(|&&m| m > 0).count()
    }

    /// h(S), the largest multiplicity (0 for the empty sequence).
    pub fn max_multiplicity(&self) -> u32 {
        self.mult.iter().copied().max().unwrap_or(0)
    }

    /// Elements in ascending order, repeated by multiplicity.
    pub fn elements(&self) -> impl Iterator<Item = u32> + '_ {
        self.mult
            .iter()
            .enumerate()
            .flat_map(|(a, &m)| std::iter::repeat_n(a as u32, m as usize))
    }

    pub fn to_vec(&self) -> Vec<u32> {
        self.elements().collect()
    }

    pub fn push(&mut self, a: u32) {
        self.push_many(a, 1);
    }

    fn push_many(&mut self, a: u32, count: u32) {
        debug_assert!(a < self.group.order);
        self.mult[a as usize] += count;
        self.len += count as usize;
        let n = self.group.order as u64;
        self.sum = ((self.sum as u64 + (a as u64 * count as u64) % n) % n) as u32;
    }

    /// Removes one copy of `a`.
    pub fn remove_one(&mut self, a: u32) -> Result<()> {
        if !self.contains(a) {
            return Err(Error::NotInSupport(a));
        }
        self.mult[a as usize] -= 1;
        self.len -= 1;
        self.sum = self.group.add(self.sum, self.group.neg(a));
        Ok(())
    }

    /// S·a⁻¹.
    pub fn without(&self, a: u32) -> Result<Sequence> {
        let mut out = self.clone();
        out.remove_one(a)?;
        Ok(out)
    }

    /// Whether `other` divides `self` as a multiset.
    pub fn contains_subsequence(&self, other: &Sequence) -> bool {
        self.group == other.group && self.mult.iter().zip(&other.mult).all(|(a, b)| b <= a)
    }

    /// { u·s : s ∈ S } for a unit u.
    pub fn scale(&self, u: u32) -> Result<Sequence> {
        if !self.group.is_unit(u) {
            return Err(Error::NotAUnit(u, self.group.order));
        }
        Ok(self.scale_unchecked(u))
    }

    pub(crate) fn scale_unchecked(&self, u: u32) -> Sequence {
        let mut mult = vec![0u32; self.mult.len()];
        for (a, &m) in self.mult.iter().enumerate() {
            if m > 0 {
                mult[self.group.mul(a as u32, u) as usize] += m;
            }
        }
        Sequence {
            group: self.group,
            mult,
            len: self.len,
            sum: self.group.mul(self.sum, u),
        }
    }

    /// Lexicographic comparison of the ascending element tuples.
    pub fn cmp_tuple(&self, other: &Sequence) -> Ordering {
        self.elements().cmp(other.elements())
    }
}

impl fmt::Debug for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Sequence[Z_{}]({})", self.group.order, self)
    }
}

/// Canonical text form `a1^m1,a2^m2,...` with ascending residues and `^1` omitted.
impl fmt::Display for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (a, &m) in self.mult.iter().enumerate() {
            if m == 0 {
                continue;
            }
            if !first {
                f.write_str(",")?;
            }
            first = false;
            if m == 1 {
                write!(f, "{a}")?;
            } else {
                write!(f, "{a}^{m}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for Sequence {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A unit-scaling orbit, represented by a chosen member.
///
/// Built by [`canonical_class`] or a deduplicating enumeration, `canonical`
/// is the orbit member whose ascending tuple is lexicographically smallest.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SequenceClass {
    #[serde(rename = "seq")]
    pub canonical: Sequence,
    #[serde(rename = "orbit")]
    pub orbit_size: usize,
}

/// Scans all unit scalings of `seq` and returns its orbit minimum.
pub fn canonical_class(seq: &Sequence) -> SequenceClass {
    let group = seq.group();
    let mut best = seq.clone();
    let mut stabilizer = 0usize;
    for u in group.units() {
        let scaled = seq.scale_unchecked(u);
        if scaled == *seq {
            stabilizer += 1;
        }
        if scaled.cmp_tuple(&best) == Ordering::Less {
            best = scaled;
        }
    }
    SequenceClass {
        canonical: best,
        orbit_size: group.unit_count() / stabilizer,
    }
}

/// Reusable scratch for orbit-minimality tests on ascending residue tuples.
#[derive(Debug, Clone)]
pub(crate) struct UnitScan {
    group: CyclicGroup,
    units: Vec<u32>,
    scratch: Vec<u32>,
}

impl UnitScan {
    pub(crate) fn new(group: CyclicGroup) -> Self {
        UnitScan {
            group,
            units: group.units(),
            scratch: Vec::new(),
        }
    }

    /// True iff the ascending `tuple` is the smallest member of its unit orbit.
    pub(crate) fn is_orbit_minimal(&mut self, tuple: &[u32]) -> bool {
        let Some(&head) = tuple.first() else {
            return true;
        };
        for &u in &self.units[1..] {
            // cheap reject: the smallest scaled element already undercuts the head
            let mut lowest = u32::MAX;
            for &a in tuple {
                lowest = lowest.min(self.group.mul(a, u));
            }
            if lowest > head {
                continue;
            }
            self.scratch.clear();
            self.scratch
                .extend(tuple.iter().map(|&a| self.group.mul(a, u)));
            self.scratch.sort_unstable();
            if self.scratch.as_slice() < tuple {
                return false;
            }
        }
        true
    }

    /// Orbit size of an ascending tuple.
    pub(crate) fn orbit_size(&mut self, tuple: &[u32]) -> usize {
        let mut stabilizer = 0usize;
        for &u in &self.units {
            self.scratch.clear();
            self.scratch
                .extend(tuple.iter().map(|&a| self.group.mul(a, u)));
            self.scratch.sort_unstable();
            if self.scratch.as_slice() == tuple {
                stabilizer += 1;
            }
        }
        self.units.len() / stabilizer
    }
}
