//! Definition-level reference implementations. Exponential in the sequence
//! length and kept deliberately simple so they can serve as oracles for the
//! fast routines.

use std::collections::BTreeSet;

use crate::cyclic::{CyclicGroup, Sequence};

/// Every multiset of exactly `length` residues over Z_n, in ascending tuple order.
pub fn multisets(group: CyclicGroup, length: usize) -> Vec<Sequence> {
    let n = group.order();
    let mut out = Vec::new();
    let mut tuple = vec![0u32; length];
    fn rec(
        group: CyclicGroup,
        n: u32,
        pos: usize,
        start: u32,
        tuple: &mut Vec<u32>,
        out: &mut Vec<Sequence>,
    ) {
        if pos == tuple.len() {
            out.push(Sequence::from_residues(group, tuple).expect("residues in range"));
            return;
        }
        for a in start..n {
            tuple[pos] = a;
            rec(group, n, pos + 1, a, tuple, out);
        }
    }
    rec(group, n, 0, 0, &mut tuple, &mut out);
    out
}

/// Sums of all nonempty subsequences, by walking every sub-multiplicity vector.
pub fn subset_sums(seq: &Sequence) -> BTreeSet<u32> {
    let n = seq.order() as u64;
    let terms: Vec<(u64, u32)> = seq
        .support()
        .map(|a| (a as u64, seq.multiplicity(a)))
        .collect();
    let mut sums = BTreeSet::new();
    let mut counts = vec![0u32; terms.len()];
    loop {
        // odometer increment
        let mut i = 0;
        while i < terms.len() && counts[i] == terms[i].1 {
            counts[i] = 0;
            i += 1;
        }
        if i == terms.len() {
            break;
        }
        counts[i] += 1;
        let sum = terms
            .iter()
            .zip(&counts)
            .map(|(&(a, _), &c)| a * c as u64)
            .sum::<u64>()
            % n;
        sums.insert(sum as u32);
    }
    sums
}

/// Sums of all nonempty subsets of positions, treating equal terms as distinct copies.
pub fn subset_sums_by_mask(seq: &Sequence) -> BTreeSet<u32> {
    let n = seq.order() as u64;
    let terms = seq.to_vec();
    assert!(
        terms.len() < 32,
        "mask enumeration needs fewer than 32 terms"
    );
    (1u32..1 << terms.len())
        .map(|mask| {
            let sum: u64 = terms
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &a)| a as u64)
                .sum();
            (sum % n) as u32
        })
        .collect()
}

/// Zero-sum and no proper nonempty zero-sum subsequence, checked subsequence by subsequence.
pub fn is_minimal_zero_sum(seq: &Sequence) -> bool {
    if seq.is_empty() || !seq.is_zero_sum() {
        return false;
    }
    let n = seq.order() as u64;
    let terms: Vec<(u64, u32)> = seq
        .support()
        .map(|a| (a as u64, seq.multiplicity(a)))
        .collect();
    let mut counts = vec![0u32; terms.len()];
    let mut taken = 0usize;
    loop {
        let mut i = 0;
        while i < terms.len() && counts[i] == terms[i].1 {
            taken -= counts[i] as usize;
            counts[i] = 0;
            i += 1;
        }
        if i == terms.len() {
            return true;
        }
        counts[i] += 1;
        taken += 1;
        if taken == seq.len() {
            continue;
        }
        let sum: u64 = terms
            .iter()
            .zip(&counts)
            .map(|(&(a, _), &c)| a * c as u64)
            .sum();
        if sum.is_multiple_of(n) {
            return false;
        }
    }
}

/// Canonical text and orbit size, by scaling with every unit and sorting.
pub fn canonical(seq: &Sequence) -> (String, usize) {
    let group = seq.group();
    let images: BTreeSet<Vec<u32>> = group
        .units()
        .into_iter()
        .map(|u| {
            let mut v: Vec<u32> = seq.elements().map(|a| group.mul(a, u)).collect();
            v.sort_unstable();
            v
        })
        .collect();
    let least = images.first().expect("at least one unit").clone();
    let text = Sequence::from_residues(group, &least)
        .expect("residues in range")
        .to_string();
    (text, images.len())
}

/// Splittable iff some g = x + y with g in the support turns S into a minimal
/// zero-sum sequence, checked with the definition-level minimality test.
pub fn is_splittable(seq: &Sequence) -> bool {
    let group = seq.group();
    let n = group.order();
    seq.support().any(|g| {
        (1..n).any(|x| {
            let y = group.add(g, group.neg(x));
            let mut t = seq.without(g).expect("g in support");
            t.push(x);
            t.push(y);
            is_minimal_zero_sum(&t)
        })
    })
}
