//! Subset-sum sets Σ(S) over Z_n by word-parallel bitset DP.
//!
//! Σ(S) only counts nonempty subsequences. The DP tracks the nonempty sums
//! directly: pushing an element `a` maps a set N to `N ∪ (N + a) ∪ {a}`, so
//! the empty sum never enters the set and `0 ∈ Σ(S)` means a genuine
//! nonempty zero-sum subsequence.

use std::collections::BTreeMap;

use crate::cyclic::{CyclicGroup, Sequence};

const WORD: u32 = 64;

#[inline]
pub(crate) fn words_for(n: u32) -> usize {
    n.div_ceil(WORD) as usize
}

#[inline]
fn tail_mask(n: u32) -> u64 {
    match n % WORD {
        0 => u64::MAX,
        r => (1u64 << r) - 1,
    }
}

/// `dst[i] |= src[i - k]` for `k <= i`; bits past the group order are
/// cleared afterwards by the caller.
#[inline]
fn or_shifted_up(dst: &mut [u64], src: &[u64], k: u32) {
    let ws = (k / WORD) as usize;
    let bs = k % WORD;
    let nw = dst.len();
    if ws >= nw {
        return;
    }
    if bs == 0 {
        for w in ws..nw {
            dst[w] |= src[w - ws];
        }
    } else {
        dst[ws] |= src[0] << bs;
        for w in ws + 1..nw {
            dst[w] |= (src[w - ws] << bs) | (src[w - ws - 1] >> (WORD - bs));
        }
    }
}

/// `dst[i] |= src[i + k]`; relies on `src` having no bits past the order.
#[inline]
fn or_shifted_down(dst: &mut [u64], src: &[u64], k: u32) {
    let ws = (k / WORD) as usize;
    let bs = k % WORD;
    let nw = dst.len();
    if ws >= nw {
        return;
    }
    if bs == 0 {
        for w in 0..nw - ws {
            dst[w] |= src[w + ws];
        }
    } else {
        for (w, d) in dst[..nw - ws].iter_mut().enumerate() {
            let idx = w + ws;
            let mut v = src[idx] >> bs;
            if idx + 1 < nw {
                v |= src[idx + 1] << (WORD - bs);
            }
            *d |= v;
        }
    }
}

/// `dst = src ∪ (src + a) ∪ {a}` in Z_n, allocation-free.
#[inline]
pub(crate) fn extend_sums(dst: &mut [u64], src: &[u64], a: u32, n: u32) {
    dst.copy_from_slice(src);
    if a != 0 {
        or_shifted_up(dst, src, a);
        or_shifted_down(dst, src, n - a);
        if let Some(last) = dst.last_mut() {
            *last &= tail_mask(n);
        }
    }
    dst[(a / WORD) as usize] |= 1u64 << (a % WORD);
}

#[inline]
pub(crate) fn has_bit(words: &[u64], a: u32) -> bool {
    words[(a / WORD) as usize] >> (a % WORD) & 1 == 1
}

/// Σ(S) as an n-bit membership set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SumSet {
    group: CyclicGroup,
    bits: Vec<u64>,
}

impl SumSet {
    pub fn group(&self) -> CyclicGroup {
        self.group
    }

    pub fn contains(&self, a: u32) -> bool {
        a < self.group.order() && has_bit(&self.bits, a)
    }

    /// |Σ(S)|.
    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        (0..self.group.order()).filter(move |&a| has_bit(&self.bits, a))
    }

    pub fn to_vec(&self) -> Vec<u32> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &SumSet) -> bool {
        self.group == other.group && self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    pub fn words(&self) -> &[u64] {
        &self.bits
    }
}

/// Incremental Σ builder: push elements one copy at a time.
#[derive(Debug, Clone)]
pub struct SigmaBuilder {
    group: CyclicGroup,
    cur: Vec<u64>,
    tmp: Vec<u64>,
}

impl SigmaBuilder {
    pub fn new(group: CyclicGroup) -> Self {
        let nw = words_for(group.order());
        SigmaBuilder {
            group,
            cur: vec![0; nw],
            tmp: vec![0; nw],
        }
    }

    pub fn push(&mut self, a: u32) {
        extend_sums(&mut self.tmp, &self.cur, a, self.group.order());
        std::mem::swap(&mut self.cur, &mut self.tmp);
    }

    pub fn push_sequence(&mut self, seq: &Sequence) {
        for a in seq.elements() {
            self.push(a);
        }
    }

    pub fn contains(&self, a: u32) -> bool {
        has_bit(&self.cur, a)
    }

    pub fn finish(self) -> SumSet {
        SumSet {
            group: self.group,
            bits: self.cur,
        }
    }
}

/// Σ(S), the set of sums of nonempty subsequences.
pub fn sigma_set(seq: &Sequence) -> SumSet {
    let mut builder = SigmaBuilder::new(seq.group());
    builder.push_sequence(seq);
    builder.finish()
}

pub fn is_zero_sum_free(seq: &Sequence) -> bool {
    !sigma_set(seq).contains(0)
}

/// σ(S) = 0 and no proper nonempty subsequence sums to 0.
///
/// A proper zero-sum T has a nonempty zero-sum complement, and one of the two
/// misses any fixed g ∈ supp(S), so it suffices that S·g⁻¹ is zero-sum free.
pub fn is_minimal_zero_sum(seq: &Sequence) -> bool {
    if seq.is_empty() || !seq.is_zero_sum() {
        return false;
    }
    let g = seq.support().next().expect("nonempty sequence has support");
    let mut builder = SigmaBuilder::new(seq.group());
    let mut skipped = false;
    for a in seq.elements() {
        if a == g && !skipped {
            skipped = true;
            continue;
        }
        builder.push(a);
    }
    !builder.contains(0)
}

/// |Σ(S·g⁻¹)| for every g ∈ supp(S).
pub fn sigma_complement_sizes(seq: &Sequence) -> BTreeMap<u32, usize> {
    seq.support()
        .map(|g| {
            let rest = seq.without(g).expect("g is in the support");
            (g, sigma_set(&rest).len())
        })
        .collect()
}

/// Stack of Σ bitsets for depth-first search, one level per pushed element.
#[derive(Debug, Clone)]
pub(crate) struct SigmaStack {
    n: u32,
    nw: usize,
    levels: Vec<u64>,
}

impl SigmaStack {
    pub(crate) fn new(n: u32, max_depth: usize) -> Self {
        let nw = words_for(n);
        SigmaStack {
            n,
            nw,
            levels: vec![0; nw * (max_depth + 1)],
        }
    }

    /// Writes level `depth + 1` as level `depth` extended by `a`.
    #[inline]
    pub(crate) fn extend(&mut self, depth: usize, a: u32) {
        let (lo, hi) = self.levels.split_at_mut((depth + 1) * self.nw);
        let src = &lo[depth * self.nw..];
        extend_sums(&mut hi[..self.nw], src, a, self.n);
    }

    #[inline]
    pub(crate) fn level(&self, depth: usize) -> &[u64] {
        &self.levels[depth * self.nw..(depth + 1) * self.nw]
    }

    #[inline]
    pub(crate) fn contains(&self, depth: usize, a: u32) -> bool {
        has_bit(self.level(depth), a)
    }
}
