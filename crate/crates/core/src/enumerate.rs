//! Exhaustive enumeration of minimal zero-sum (and zero-sum free) sequences
//! over Z_n up to unit scaling, and the invariants computed from it.
//!
//! Sequences are generated as ascending residue tuples. For a minimal
//! zero-sum target of length ℓ only the first ℓ−1 entries are searched: every
//! proper prefix must stay zero-sum free (checked on an incremental Σ bitset),
//! and the last entry is forced to be −σ(prefix). A leaf is kept when the
//! forced entry keeps the tuple ascending and the tuple is the smallest member
//! of its unit orbit.
//!
//! The search forest is cut into blocks by the first two entries. Blocks are
//! independent and are merged in block order, so output is identical for any
//! number of worker threads.

use std::ops::RangeInclusive;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::cyclic::{CyclicGroup, Sequence, SequenceClass, UnitScan};
use crate::error::{Error, Result};
use crate::index::{index, index_ceil};
use crate::sigma::{is_minimal_zero_sum, SigmaStack};
use crate::split::is_unsplittable;

/// Default bound on n for the invariant computations.
pub const DESK_CAP: u32 = 16;
/// Default bound on n for the Davenport constant search.
pub const DAVENPORT_CAP: u32 = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Filter {
    All,
    Unsplittable,
    Splittable,
}

impl Filter {
    pub fn as_str(&self) -> &'static str {
        match self {
            Filter::All => "all",
            Filter::Unsplittable => "unsplittable",
            Filter::Splittable => "splittable",
        }
    }
}

impl std::str::FromStr for Filter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(Filter::All),
            "unsplittable" => Ok(Filter::Unsplittable),
            "splittable" => Ok(Filter::Splittable),
            other => Err(Error::InvalidSpec(format!("unknown filter {other:?}"))),
        }
    }
}

/// What an enumeration is asked to produce.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumSpec {
    pub n: u32,
    pub min_length: usize,
    pub max_length: usize,
    pub filter: Filter,
    /// Leave the zero element out of the search (default).
    pub exclude_zero: bool,
    /// Emit one representative per unit orbit (default). When off, every
    /// multiset is emitted as its own representative.
    pub dedupe_units: bool,
    pub jobs: usize,
    /// Abort after visiting this many search nodes.
    pub node_budget: Option<u64>,
    /// Abort after this much wall-clock time.
    pub time_budget: Option<Duration>,
    /// Prune prefixes that already contain a zero-sum subsequence. Turning
    /// this off walks every ascending tuple; it exists to cross-check pruning.
    pub prune: bool,
}

impl EnumSpec {
    pub fn new(n: u32, length: usize) -> Self {
        EnumSpec {
            n,
            min_length: length,
            max_length: length,
            filter: Filter::All,
            exclude_zero: true,
            dedupe_units: true,
            jobs: 1,
            node_budget: None,
            time_budget: None,
            prune: true,
        }
    }

    pub fn lengths(n: u32, lengths: RangeInclusive<usize>) -> Self {
        let mut spec = EnumSpec::new(n, *lengths.start());
        spec.max_length = *lengths.end();
        spec
    }

    pub fn filter(mut self, filter: Filter) -> Self {
        self.filter = filter;
        self
    }

    pub fn jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs;
        self
    }

    pub fn node_budget(mut self, budget: Option<u64>) -> Self {
        self.node_budget = budget;
        self
    }

    pub fn validate(&self) -> Result<CyclicGroup> {
        let group = CyclicGroup::new(self.n as u64)?;
        if self.min_length < 1 || self.min_length > self.max_length {
            return Err(Error::InvalidSpec(format!(
                "length range {}..={} is empty or starts below 1",
                self.min_length, self.max_length
            )));
        }
        if self.max_length > self.n as usize {
            return Err(Error::InvalidSpec(format!(
                "length {} exceeds D(Z_{}) = {}",
                self.max_length, self.n, self.n
            )));
        }
        if self.jobs == 0 {
            return Err(Error::InvalidSpec("jobs must be at least 1".into()));
        }
        Ok(group)
    }
}

/// Result of an enumeration. `complete` is false when a budget ran out.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumeration {
    pub classes: Vec<SequenceClass>,
    pub complete: bool,
    pub nodes: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Target {
    MinimalZeroSum,
    ZeroSumFree,
}

struct Shared {
    nodes: AtomicU64,
    aborted: AtomicBool,
    budget: Option<u64>,
    deadline: Option<Instant>,
    flush_every: u64,
}

impl Shared {
    fn charge(&self, count: u64) -> bool {
        let total = self.nodes.fetch_add(count, Ordering::Relaxed) + count;
        let over_nodes = self.budget.is_some_and(|b| total > b);
        let over_time = self.deadline.is_some_and(|d| Instant::now() > d);
        if over_nodes || over_time {
            self.aborted.store(true, Ordering::Relaxed);
        }
        !self.aborted.load(Ordering::Relaxed)
    }
}

#[derive(Debug, Clone)]
struct Block {
    length: usize,
    prefix: Vec<u32>,
}

const FLUSH_EVERY: u64 = 1 << 12;

struct Walker<'a, A, V> {
    group: CyclicGroup,
    target: Target,
    spec: &'a EnumSpec,
    free: usize,
    lo: u32,
    stack: SigmaStack,
    tuple: Vec<u32>,
    scan: UnitScan,
    pending: u64,
    shared: &'a Shared,
    visit: &'a V,
    acc: A,
}

impl<A, V> Walker<'_, A, V>
where
    V: Fn(&mut A, SequenceClass),
{
    fn tick(&mut self) -> bool {
        self.pending += 1;
        if self.pending >= self.shared.flush_every {
            let pending = std::mem::take(&mut self.pending);
            return self.shared.charge(pending);
        }
        true
    }

    fn flush(&mut self) {
        let pending = std::mem::take(&mut self.pending);
        self.shared.charge(pending);
    }

    fn prunes(&self) -> bool {
        self.spec.prune || self.target == Target::ZeroSumFree
    }

    /// Depth-first from a tuple of `depth` entries. Returns false on abort.
    fn descend(&mut self, depth: usize) -> bool {
        if depth == self.free {
            self.leaf();
            return true;
        }
        let n = self.group.order();
        let start = self.tuple.last().copied().unwrap_or(self.lo);
        for a in start..n {
            if !self.tick() {
                return false;
            }
            self.stack.extend(depth, a);
            if self.prunes() && self.stack.contains(depth + 1, 0) {
                continue;
            }
            self.tuple.push(a);
            let ok = self.descend(depth + 1);
            self.tuple.pop();
            if !ok {
                return false;
            }
        }
        true
    }

    fn leaf(&mut self) {
        let n = self.group.order();
        if self.target == Target::MinimalZeroSum && self.spec.prune {
            let sum = self
                .tuple
                .iter()
                .fold(0u32, |acc, &a| self.group.add(acc, a));
            let last = self.group.neg(sum);
            let floor = self.tuple.last().copied().unwrap_or(self.lo);
            if last < floor || last >= n {
                return;
            }
            self.tuple.push(last);
            self.accept();
            self.tuple.pop();
        } else {
            self.accept();
        }
    }

    fn accept(&mut self) {
        if self.spec.dedupe_units && !self.scan.is_orbit_minimal(&self.tuple) {
            return;
        }
        let seq = Sequence::from_residues(self.group, &self.tuple).expect("residues reduced");
        if self.target == Target::MinimalZeroSum {
            if !self.spec.prune && !is_minimal_zero_sum(&seq) {
                return;
            }
            let keep = match self.spec.filter {
                Filter::All => true,
                Filter::Unsplittable => is_unsplittable(&seq).expect("minimal zero-sum").0,
                Filter::Splittable => !is_unsplittable(&seq).expect("minimal zero-sum").0,
            };
            if !keep {
                return;
            }
        }
        let orbit_size = self.scan.orbit_size(&self.tuple);
        (self.visit)(
            &mut self.acc,
            SequenceClass {
                canonical: seq,
                orbit_size,
            },
        );
    }
}

fn free_positions(target: Target, spec: &EnumSpec, length: usize) -> usize {
    match target {
        Target::MinimalZeroSum if spec.prune => length - 1,
        _ => length,
    }
}

/// Ascending prefixes of length `min(2, free)` that survive pruning, in
/// lexicographic order.
fn blocks(group: CyclicGroup, target: Target, spec: &EnumSpec) -> Vec<Block> {
    let n = group.order();
    let lo = if spec.exclude_zero { 1 } else { 0 };
    let prunes = spec.prune || target == Target::ZeroSumFree;
    let mut out = Vec::new();
    for length in spec.min_length..=spec.max_length {
        let depth = free_positions(target, spec, length).min(2);
        match depth {
            0 => out.push(Block {
                length,
                prefix: Vec::new(),
            }),
            1 => {
                for a in lo..n {
                    if prunes && a == 0 {
                        continue;
                    }
                    out.push(Block {
                        length,
                        prefix: vec![a],
                    });
                }
            }
            _ => {
                for a in lo..n {
                    if prunes && a == 0 {
                        continue;
                    }
                    for b in a..n {
                        if prunes && (b == 0 || group.add(a, b) == 0) {
                            continue;
                        }
                        out.push(Block {
                            length,
                            prefix: vec![a, b],
                        });
                    }
                }
            }
        }
    }
    out
}

/// Runs `visit` on every emitted class. One accumulator is built per block
/// and the accumulators come back in deterministic block order.
fn run<A, I, V>(spec: &EnumSpec, target: Target, init: I, visit: V) -> Result<(Vec<A>, bool, u64)>
where
    A: Send,
    I: Fn() -> A + Sync,
    V: Fn(&mut A, SequenceClass) + Sync,
{
    let group = spec.validate()?;
    if target == Target::ZeroSumFree && spec.filter != Filter::All {
        return Err(Error::InvalidSpec(
            "splittability filters apply to minimal zero-sum sequences only".into(),
        ));
    }
    let shared = Shared {
        nodes: AtomicU64::new(0),
        aborted: AtomicBool::new(false),
        budget: spec.node_budget,
        deadline: spec.time_budget.map(|d| Instant::now() + d),
        flush_every: spec
            .node_budget
            .map_or(FLUSH_EVERY, |b| (b / 64).clamp(1, FLUSH_EVERY)),
    };
    let work = blocks(group, target, spec);
    let lo = if spec.exclude_zero { 1 } else { 0 };

    let run_block = |block: &Block| -> A {
        let free = free_positions(target, spec, block.length);
        let mut walker = Walker {
            group,
            target,
            spec,
            free,
            lo,
            stack: SigmaStack::new(group.order(), free),
            tuple: Vec::with_capacity(block.length),
            scan: UnitScan::new(group),
            pending: 0,
            shared: &shared,
            visit: &visit,
            acc: init(),
        };
        if shared.aborted.load(Ordering::Relaxed) {
            return walker.acc;
        }
        for (depth, &a) in block.prefix.iter().enumerate() {
            walker.tick();
            walker.stack.extend(depth, a);
            walker.tuple.push(a);
        }
        walker.descend(block.prefix.len());
        walker.flush();
        walker.acc
    };

    let results: Vec<A> = if spec.jobs <= 1 {
        work.iter().map(run_block).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(spec.jobs)
            .build()
            .map_err(|e| Error::InvalidSpec(format!("thread pool: {e}")))?;
        pool.install(|| work.par_iter().map(run_block).collect())
    };
    let complete = !shared.aborted.load(Ordering::Relaxed);
    Ok((results, complete, shared.nodes.load(Ordering::Relaxed)))
}

fn collect(spec: &EnumSpec, target: Target) -> Result<Enumeration> {
    let (parts, complete, nodes) = run(spec, target, Vec::new, |acc: &mut Vec<_>, c| acc.push(c))?;
    let classes = parts.into_iter().flatten().collect();
    Ok(Enumeration {
        classes,
        complete,
        nodes,
    })
}

/// One representative per unit orbit of minimal zero-sum sequences matching
/// `spec`, ordered by length and then lexicographically.
pub fn enumerate_mzs(spec: &EnumSpec) -> Result<Enumeration> {
    collect(spec, Target::MinimalZeroSum)
}

/// Like [`enumerate_mzs`], but folds classes into per-block accumulators
/// instead of collecting them.
pub fn fold_mzs<A, I, V>(spec: &EnumSpec, init: I, visit: V) -> Result<(Vec<A>, bool, u64)>
where
    A: Send,
    I: Fn() -> A + Sync,
    V: Fn(&mut A, SequenceClass) + Sync,
{
    run(spec, Target::MinimalZeroSum, init, visit)
}

/// Unit orbits of zero-sum free sequences with lengths in the spec's range.
pub fn enumerate_zero_sum_free(spec: &EnumSpec) -> Result<Enumeration> {
    collect(spec, Target::ZeroSumFree)
}

/// One JSON Lines record of `zs enumerate`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassRecord {
    pub n: u32,
    pub seq: String,
    pub len: usize,
    pub index: String,
    pub unsplittable: bool,
    pub orbit: usize,
}

impl ClassRecord {
    pub fn from_class(class: &SequenceClass) -> Result<Self> {
        let seq = &class.canonical;
        let index = index(seq)?;
        Ok(ClassRecord {
            n: seq.order(),
            seq: seq.to_string(),
            len: seq.len(),
            index: index.to_string(),
            unsplittable: is_unsplittable(seq)?.0,
            orbit: class.orbit_size,
        })
    }
}

/// Outcome of an invariant computation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantResult {
    pub n: u32,
    pub value: u64,
    pub witnesses: Vec<SequenceClass>,
    /// True only when the whole search space was covered.
    pub exhaustive: bool,
}

/// Search limits shared by the invariant computations.
#[derive(Debug, Clone)]
pub struct SearchOptions {
    pub cap: u32,
    pub jobs: usize,
    pub node_budget: Option<u64>,
    pub time_budget: Option<Duration>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            cap: DESK_CAP,
            jobs: 1,
            node_budget: None,
            time_budget: None,
        }
    }
}

impl SearchOptions {
    pub fn with_cap(mut self, cap: u32) -> Self {
        self.cap = cap;
        self
    }

    pub fn with_jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs;
        self
    }

    fn check(&self, n: u32) -> Result<()> {
        if n > self.cap {
            return Err(Error::CapExceeded { n, cap: self.cap });
        }
        CyclicGroup::new(n as u64).map(|_| ())
    }

    fn spec(&self, n: u32, lengths: RangeInclusive<usize>) -> EnumSpec {
        let mut spec = EnumSpec::lengths(n, lengths).jobs(self.jobs);
        spec.node_budget = self.node_budget;
        spec.time_budget = self.time_budget;
        spec
    }
}

/// Classes of exactly `length` whose index exceeds `k`.
fn classes_above(
    n: u32,
    length: usize,
    k: u64,
    opts: &SearchOptions,
) -> Result<(Vec<SequenceClass>, bool)> {
    let spec = opts.spec(n, length..=length);
    let (parts, complete, _) = fold_mzs(&spec, Vec::new, |acc: &mut Vec<_>, class| {
        if index_ceil(&class.canonical).expect("nonzero support") > k {
            acc.push(class);
        }
    })?;
    Ok((parts.into_iter().flatten().collect(), complete))
}

/// Smallest l such that every class of length ≥ l has index ≤ k, scanning
/// lengths downward from n and stopping at the first failure.
fn threshold(n: u32, k: u64, opts: &SearchOptions) -> Result<InvariantResult> {
    opts.check(n)?;
    for length in (1..=n as usize).rev() {
        let (failing, complete) = classes_above(n, length, k, opts)?;
        if !complete || !failing.is_empty() {
            return Ok(InvariantResult {
                n,
                value: length as u64 + 1,
                witnesses: failing,
                exhaustive: complete,
            });
        }
    }
    Ok(InvariantResult {
        n,
        value: 1,
        witnesses: Vec::new(),
        exhaustive: true,
    })
}

/// I(Z_n): least l with every minimal zero-sum sequence of length ≥ l of index 1.
#[allow(non_snake_case)]
pub fn compute_I(n: u32, opts: &SearchOptions) -> Result<InvariantResult> {
    threshold(n, 1, opts)
}

/// I_k(Z_n): least l with every minimal zero-sum sequence of length ≥ l of index ≤ k.
#[allow(non_snake_case)]
pub fn compute_Ik(n: u32, k: u64, opts: &SearchOptions) -> Result<InvariantResult> {
    if k == 0 {
        return Err(Error::InvalidSpec("k must be at least 1".into()));
    }
    threshold(n, k, opts)
}

/// Largest index among classes with lengths in `lengths`, with every class
/// attaining it as witnesses.
pub fn max_index_over(
    n: u32,
    lengths: RangeInclusive<usize>,
    opts: &SearchOptions,
) -> Result<InvariantResult> {
    let spec = opts.spec(n, lengths);
    let (parts, complete, _) = fold_mzs(
        &spec,
        || (0u64, Vec::new()),
        |acc: &mut (u64, Vec<SequenceClass>), class| {
            let value = index_ceil(&class.canonical).expect("nonzero support");
            if value > acc.0 {
                *acc = (value, vec![class]);
            } else if value == acc.0 {
                acc.1.push(class);
            }
        },
    )?;
    let value = parts.iter().map(|p| p.0).max().unwrap_or(0);
    let witnesses = parts
        .into_iter()
        .filter(|p| p.0 == value && value > 0)
        .flat_map(|p| p.1)
        .collect();
    Ok(InvariantResult {
        n,
        value,
        witnesses,
        exhaustive: complete,
    })
}

/// I(n): the largest index of a minimal zero-sum sequence over Z_n.
pub fn compute_max_index(n: u32, opts: &SearchOptions) -> Result<InvariantResult> {
    opts.check(n)?;
    max_index_over(n, 1..=n as usize, opts)
}

/// D(Z_n) by exhaustive search: one more than the longest zero-sum free length.
pub fn davenport(n: u32, opts: &SearchOptions) -> Result<InvariantResult> {
    opts.check(n)?;
    let mut previous: Vec<SequenceClass> = Vec::new();
    for length in 1..=n as usize {
        let found = enumerate_zero_sum_free(&opts.spec(n, length..=length))?;
        if !found.complete {
            return Ok(InvariantResult {
                n,
                value: length as u64,
                witnesses: previous,
                exhaustive: false,
            });
        }
        if found.classes.is_empty() {
            return Ok(InvariantResult {
                n,
                value: length as u64,
                witnesses: previous,
                exhaustive: true,
            });
        }
        previous = found.classes;
    }
    // n + 1 would be the answer if a zero-sum free sequence of length n existed
    Ok(InvariantResult {
        n,
        value: n as u64 + 1,
        witnesses: previous,
        exhaustive: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seqs(e: &Enumeration) -> Vec<String> {
        e.classes.iter().map(|c| c.canonical.to_string()).collect()
    }

    #[test]
    fn enumerate_examples() {
        let e = enumerate_mzs(&EnumSpec::new(5, 2)).unwrap();
        assert!(e.complete);
        assert_eq!(seqs(&e), vec!["1,4"]);
        assert_eq!(e.classes[0].orbit_size, 2);

        let e = enumerate_mzs(&EnumSpec::new(6, 2)).unwrap();
        assert_eq!(seqs(&e), vec!["1,5", "2,4", "3^2"]);

        let e = enumerate_mzs(&EnumSpec::new(5, 5)).unwrap();
        assert_eq!(seqs(&e), vec!["1^5"]);
    }

    #[test]
    fn length_one_needs_zero() {
        let e = enumerate_mzs(&EnumSpec::new(7, 1)).unwrap();
        assert!(e.classes.is_empty());
        let mut spec = EnumSpec::new(7, 1);
        spec.exclude_zero = false;
        let e = enumerate_mzs(&spec).unwrap();
        assert_eq!(seqs(&e), vec!["0"]);
        // with zero allowed, longer classes are unchanged
        spec.min_length = 3;
        spec.max_length = 3;
        let with_zero = enumerate_mzs(&spec).unwrap();
        assert_eq!(
            with_zero.classes,
            enumerate_mzs(&EnumSpec::new(7, 3)).unwrap().classes
        );
    }

    #[test]
    fn spec_validation() {
        assert!(matches!(
            enumerate_mzs(&EnumSpec::new(5, 6)),
            Err(Error::InvalidSpec(_))
        ));
        assert!(matches!(
            enumerate_mzs(&EnumSpec::new(5, 0)),
            Err(Error::InvalidSpec(_))
        ));
        assert!(matches!(
            enumerate_mzs(&EnumSpec::new(5, 2).jobs(0)),
            Err(Error::InvalidSpec(_))
        ));
        assert_eq!(
            enumerate_mzs(&EnumSpec::new(1, 1)),
            Err(Error::OrderTooSmall(1))
        );
        assert_eq!(
            compute_I(17, &SearchOptions::default()),
            Err(Error::CapExceeded { n: 17, cap: 16 })
        );
        assert!(matches!(
            enumerate_zero_sum_free(&EnumSpec::new(5, 2).filter(Filter::Unsplittable)),
            Err(Error::InvalidSpec(_))
        ));
    }

    #[test]
    fn budget_exhaustion_is_incomplete() {
        let spec = EnumSpec::new(13, 6).node_budget(Some(10));
        let e = enumerate_mzs(&spec).unwrap();
        assert!(!e.complete);
        let full = enumerate_mzs(&EnumSpec::new(13, 6)).unwrap();
        assert!(full.complete);
        assert!(e.classes.len() < full.classes.len());
    }

    #[test]
    fn dedupe_off_emits_every_multiset() {
        let mut spec = EnumSpec::new(5, 2);
        spec.dedupe_units = false;
        let e = enumerate_mzs(&spec).unwrap();
        assert_eq!(seqs(&e), vec!["1,4", "2,3"]);
    }

    #[test]
    fn i_of_g_examples() {
        let opts = SearchOptions::default();
        assert_eq!(compute_I(6, &opts).unwrap().value, 5);
        assert_eq!(compute_I(7, &opts).unwrap().value, 1);
        let r = compute_I(10, &opts).unwrap();
        assert_eq!(r.value, 7);
        assert!(r.exhaustive);
        assert!(r.witnesses.iter().all(|w| w.canonical.len() == 6));
    }

    #[test]
    fn ik_relations() {
        let opts = SearchOptions::default();
        for n in [6u32, 8, 9] {
            let max = compute_max_index(n, &opts).unwrap().value;
            assert_eq!(compute_Ik(n, max, &opts).unwrap().value, 1);
            assert_eq!(
                compute_Ik(n, 1, &opts).unwrap().value,
                compute_I(n, &opts).unwrap().value
            );
        }
        assert!(compute_Ik(5, 0, &opts).is_err());
    }

    #[test]
    fn max_index_examples() {
        let opts = SearchOptions::default();
        let r = compute_max_index(8, &opts).unwrap();
        assert_eq!(r.value, 2);
        assert!(r
            .witnesses
            .iter()
            .any(|w| w.canonical.to_string() == "1^2,4,5^2"));
        assert_eq!(compute_max_index(5, &opts).unwrap().value, 1);
        let r = compute_max_index(9, &opts).unwrap();
        assert_eq!(r.value, 2);
        assert!(r
            .witnesses
            .iter()
            .any(|w| w.canonical.to_string() == "1,3^2,4,7"));
    }

    #[test]
    fn davenport_examples() {
        let opts = SearchOptions::default().with_cap(DAVENPORT_CAP);
        let r = davenport(5, &opts).unwrap();
        assert_eq!(r.value, 5);
        assert_eq!(r.witnesses.len(), 1);
        assert_eq!(r.witnesses[0].canonical.to_string(), "1^4");
        assert_eq!(davenport(2, &opts).unwrap().value, 2);
        assert_eq!(davenport(12, &opts).unwrap().value, 12);
        assert!(davenport(13, &opts).is_err());
    }

    #[test]
    fn class_record_fields() {
        let e = enumerate_mzs(&EnumSpec::new(5, 2)).unwrap();
        let rec = ClassRecord::from_class(&e.classes[0]).unwrap();
        assert_eq!(
            serde_json::to_string(&rec).unwrap(),
            r#"{"n":5,"seq":"1,4","len":2,"index":"5/5","unsplittable":false,"orbit":2}"#
        );
    }
}
