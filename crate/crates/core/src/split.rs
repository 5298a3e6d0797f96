//! The splitting move `S ↦ S·g⁻¹·x·y` (x + y = g) and splittability tests.

use std::fmt;

use serde::Serialize;

use crate::cyclic::Sequence;
use crate::error::{Error, Result};
use crate::sigma::{is_minimal_zero_sum, sigma_complement_sizes};

/// Replace one copy of `target` by `part_x` and `part_y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct SplitMove {
    pub target: u32,
    pub part_x: u32,
    pub part_y: u32,
}

impl fmt::Display for SplitMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}={}+{}", self.target, self.part_x, self.part_y)
    }
}

pub fn split(seq: &Sequence, mv: SplitMove) -> Result<Sequence> {
    let group = seq.group();
    let n = group.order();
    for r in [mv.target, mv.part_x, mv.part_y] {
        if r >= n {
            return Err(Error::ResidueOutOfRange {
                residue: r as u64,
                order: n,
            });
        }
    }
    if group.add(mv.part_x, mv.part_y) != mv.target {
        return Err(Error::BadSplit {
            target: mv.target,
            x: mv.part_x,
            y: mv.part_y,
            order: n,
        });
    }
    let mut out = seq.without(mv.target)?;
    out.push(mv.part_x);
    out.push(mv.part_y);
    Ok(out)
}

/// Searches every move `g = x + y` with g ∈ supp(S), x ∈ [1, n−1], x ≤ y and
/// returns the first, ordered by smallest `x` and then smallest `g`, whose
/// result is minimal zero-sum.
pub fn is_splittable_bruteforce(seq: &Sequence) -> Result<Option<SplitMove>> {
    if !is_minimal_zero_sum(seq) {
        return Err(Error::NotMinimalZeroSum);
    }
    let group = seq.group();
    let n = group.order();
    let support: Vec<u32> = seq.support().collect();
    for x in 1..n {
        for &g in &support {
            let y = group.add(g, group.neg(x));
            if x > y {
                continue;
            }
            let mv = SplitMove {
                target: g,
                part_x: x,
                part_y: y,
            };
            if is_minimal_zero_sum(&split(seq, mv)?) {
                return Ok(Some(mv));
            }
        }
    }
    Ok(None)
}

/// Prime-order criterion: S is unsplittable iff |Σ(S·g⁻¹)| = p − 1 for all g ∈ supp(S).
pub fn is_unsplittable_fast(seq: &Sequence) -> Result<bool> {
    let group = seq.group();
    if !group.is_prime() {
        return Err(Error::CompositeOrder(group.order()));
    }
    if !is_minimal_zero_sum(seq) {
        return Err(Error::NotMinimalZeroSum);
    }
    let target = group.order() as usize - 1;
    Ok(sigma_complement_sizes(seq)
        .values()
        .all(|&size| size == target))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    /// Σ-size criterion (prime order only).
    SigmaCriterion,
    /// Exhaustive search over all moves.
    BruteForce,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub method: Method,
    pub unsplittable: bool,
    pub witness: Option<SplitMove>,
}

/// Decides splittability with the fastest method licensed for the group order.
pub fn is_unsplittable(seq: &Sequence) -> Result<(bool, Method)> {
    if seq.group().is_prime() {
        Ok((is_unsplittable_fast(seq)?, Method::SigmaCriterion))
    } else {
        Ok((is_splittable_bruteforce(seq)?.is_none(), Method::BruteForce))
    }
}

/// Like [`is_unsplittable`], and also produces a witness move when splittable.
pub fn classify(seq: &Sequence) -> Result<Classification> {
    let (unsplittable, method) = is_unsplittable(seq)?;
    let witness = if unsplittable {
        None
    } else {
        is_splittable_bruteforce(seq)?
    };
    Ok(Classification {
        method,
        unsplittable,
        witness,
    })
}
