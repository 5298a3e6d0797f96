//! Executable checks of the structural checks on subset sums and unsplittable
//! sequences. Each check counts the instances it examined and records every
//! violation it finds.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cyclic::{CyclicGroup, Sequence, SequenceClass};
use crate::enumerate::{enumerate_mzs, EnumSpec};
use crate::error::Result;
use crate::sigma::{is_zero_sum_free, sigma_set};
use crate::split::{is_splittable_bruteforce, is_unsplittable_fast};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub check: &'static str,
    pub checked: u64,
    pub violations: Vec<String>,
}

impl CheckOutcome {
    fn new(check: &'static str) -> Self {
        CheckOutcome {
            check,
            checked: 0,
            violations: Vec::new(),
        }
    }

    fn record(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.violations.len() < 32 {
            self.violations.push(detail());
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Parameters of a property-suite run.
#[derive(Debug, Clone)]
pub struct SuiteConfig {
    /// Primes whose unsplittable classes are enumerated for the structural checks.
    pub primes: Vec<u32>,
    pub seed: u64,
    pub random_partitions: usize,
    pub random_sets: usize,
    pub random_long_sequences: usize,
    pub jobs: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            primes: vec![11, 13],
            seed: 0,
            random_partitions: 1000,
            random_sets: 1000,
            random_long_sequences: 500,
            jobs: 1,
        }
    }
}

fn group(n: u32) -> CyclicGroup {
    CyclicGroup::new(n as u64).expect("valid order")
}

fn seq_of(n: u32, elems: &[u32]) -> Sequence {
    Sequence::from_residues(group(n), elems).expect("reduced residues")
}

fn powers(n: u32, terms: &[(u32, u32)]) -> Sequence {
    let mut elems = Vec::new();
    for &(a, m) in terms {
        elems.extend(std::iter::repeat_n(a, m as usize));
    }
    seq_of(n, &elems)
}

/// All minimal zero-sum classes over Z_p of every length.
fn all_classes(p: u32, jobs: usize) -> Result<Vec<SequenceClass>> {
    let spec = EnumSpec::lengths(p, 1..=p as usize).jobs(jobs);
    Ok(enumerate_mzs(&spec)?.classes)
}

/// A random zero-sum free sequence grown by rejection sampling.
fn random_zero_sum_free(rng: &mut ChaCha8Rng, n: u32, target_len: usize) -> Sequence {
    let g = group(n);
    let mut seq = Sequence::empty(g);
    let mut sums = crate::sigma::SigmaBuilder::new(g);
    'grow: while seq.len() < target_len {
        for _ in 0..64 {
            let a = rng.gen_range(1..n);
            let mut trial = sums.clone();
            trial.push(a);
            if !trial.contains(0) {
                seq.push(a);
                sums = trial;
                continue 'grow;
            }
        }
        break;
    }
    seq
}

/// |Σ(S)| ≥ Σᵢ |Σ(Sᵢ)| for random partitions of random zero-sum free S.
pub fn partition_superadditivity(cfg: &SuiteConfig) -> CheckOutcome {
    let mut out = CheckOutcome::new("partition-superadditivity");
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x5157);
    for _ in 0..cfg.random_partitions {
        let n = rng.gen_range(3..=60u32);
        let len = rng.gen_range(1..n as usize);
        let s = random_zero_sum_free(&mut rng, n, len);
        let mut elems = s.to_vec();
        elems.shuffle(&mut rng);
        let parts = rng.gen_range(1..=elems.len().max(1));
        let mut buckets: Vec<Vec<u32>> = vec![Vec::new(); parts];
        for a in elems {
            buckets[rng.gen_range(0..parts)].push(a);
        }
        let whole = sigma_set(&s).len();
        let total: usize = buckets.iter().map(|b| sigma_set(&seq_of(n, b)).len()).sum();
        out.record(whole >= total, || {
            format!("Z_{n}: S={s} parts={buckets:?} |Σ(S)|={whole} < {total}")
        });
    }
    out
}

fn check_set_bound(out: &mut CheckOutcome, p: u32, set: &[u32]) {
    let s = seq_of(p, set);
    if !is_zero_sum_free(&s) {
        return;
    }
    let k = set.len();
    let bound = (p as usize).min(k * (k + 1) / 2);
    let size = sigma_set(&s).len();
    out.record(size >= bound, || {
        format!("Z_{p}: A={set:?} |Σ(A)|={size} < {bound}")
    });
}

/// |Σ(A)| ≥ min(p, |A|(|A|+1)/2) for zero-sum free sets A ⊂ Z_p: exhaustive
/// for p ≤ 13 and |A| ≤ 4, random beyond.
pub fn zero_sum_free_set_bound(cfg: &SuiteConfig) -> CheckOutcome {
    let mut out = CheckOutcome::new("zero-sum-free-set-bound");
    for p in [2u32, 3, 5, 7, 11, 13] {
        let mut set = Vec::new();
        subsets_upto(p, 1, 4, &mut set, &mut |s| check_set_bound(&mut out, p, s));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x2233);
    let primes: Vec<u32> = (17..=97).filter(|&q| crate::cyclic::is_prime(q)).collect();
    for _ in 0..cfg.random_sets {
        let p = *primes.choose(&mut rng).expect("nonempty");
        let size = rng.gen_range(2..=12usize);
        let mut pool: Vec<u32> = (1..p).collect();
        pool.shuffle(&mut rng);
        let mut set: Vec<u32> = pool.into_iter().take(size).collect();
        set.sort_unstable();
        check_set_bound(&mut out, p, &set);
    }
    out
}

fn subsets_upto(p: u32, start: u32, max: usize, cur: &mut Vec<u32>, f: &mut dyn FnMut(&[u32])) {
    if !cur.is_empty() {
        f(cur);
    }
    if cur.len() == max {
        return;
    }
    for a in start..p {
        cur.push(a);
        subsets_upto(p, a + 1, max, cur, f);
        cur.pop();
    }
}

/// The structural checks that hold for every unsplittable minimal zero-sum
/// sequence over Z_p.
pub fn unsplittable_structure(p: u32, classes: &[Sequence]) -> Vec<CheckOutcome> {
    let g = group(p);
    let mut coefficient = CheckOutcome::new("coefficient-condition");
    let mut pair = CheckOutcome::new("pair-sigma-size");
    let mut squares = CheckOutcome::new("square-pair-sigma-size");
    let mut double = CheckOutcome::new("power-with-double-bound");
    let mut triple = CheckOutcome::new("power-with-two-singletons-bound");
    let mut drop_one = CheckOutcome::new("drop-one-bound");

    for s in classes {
        let supp: Vec<u32> = s.support().collect();
        for &a in &supp {
            let va = s.multiplicity(a);
            let inv = g.inverse(a).expect("nonzero residue mod prime");
            for &b in &supp {
                if a == b {
                    continue;
                }
                let vb = s.multiplicity(b);
                let t = g.mul(b, inv);
                coefficient.record(t >= va + 2 && t != p.div_ceil(2), || {
                    format!("Z_{p}: S={s} g={a} tg={b} t={t} v_g={va}")
                });
                for k in 0..=va {
                    let size = sigma_set(&powers(p, &[(a, k), (b, 1)])).len();
                    pair.record(size == 2 * k as usize + 1, || {
                        format!("Z_{p}: S={s} |Σ({a}^{k},{b})|={size}")
                    });
                }
                if va >= 2 && vb >= 2 {
                    let size = sigma_set(&powers(p, &[(a, 2), (b, 2)])).len();
                    squares.record(size == 8, || {
                        format!("Z_{p}: S={s} |Σ({a}^2,{b}^2)|={size}")
                    });
                }
                if va >= 3 && vb >= 2 {
                    for k in 3..=va {
                        let t_len = k as usize + 2;
                        let size = sigma_set(&powers(p, &[(a, k), (b, 2)])).len();
                        let strict = t != (p + 3) / 2;
                        let need = 2 * t_len + usize::from(strict);
                        double.record(size >= need, || {
                            format!("Z_{p}: S={s} T={a}^{k},{b}^2 |Σ(T)|={size} < {need}")
                        });
                    }
                }
            }
        }
        for (i, &a) in supp.iter().enumerate() {
            for (j, &b) in supp.iter().enumerate() {
                for &c in &supp[j + 1..] {
                    if i == j || a == c {
                        continue;
                    }
                    for k in 1..=s.multiplicity(a) {
                        let size = sigma_set(&powers(p, &[(a, k), (b, 1), (c, 1)])).len();
                        let need = 2 * (k as usize + 2);
                        triple.record(size >= need, || {
                            format!("Z_{p}: S={s} T={a}^{k},{b},{c} |Σ(T)|={size} < {need}")
                        });
                    }
                }
            }
        }
        for_each_submultiset(s, &mut |t: &Sequence| {
            if t.support_size() < 2 {
                return;
            }
            let ok = t.support().any(|x| {
                let rest = t.without(x).expect("x in support");
                sigma_set(&rest).len() + 1 >= 2 * rest.len()
            });
            drop_one.record(ok, || format!("Z_{p}: S={s} T={t}"));
        });
    }
    vec![coefficient, pair, squares, double, triple, drop_one]
}

fn for_each_submultiset(s: &Sequence, f: &mut dyn FnMut(&Sequence)) {
    let supp: Vec<u32> = s.support().collect();
    let mut counts = vec![0u32; supp.len()];
    loop {
        let terms: Vec<(u32, u32)> = supp.iter().copied().zip(counts.iter().copied()).collect();
        f(&powers(s.order(), &terms));
        let mut i = 0;
        loop {
            if i == supp.len() {
                return;
            }
            if counts[i] < s.multiplicity(supp[i]) {
                counts[i] += 1;
                break;
            }
            counts[i] = 0;
            i += 1;
        }
    }
}

/// Fast Σ criterion agrees with exhaustive move search.
pub fn criterion_equivalence(p: u32, classes: &[Sequence], out: &mut CheckOutcome) -> Result<()> {
    for s in classes {
        let fast = is_unsplittable_fast(s)?;
        let brute = is_splittable_bruteforce(s)?.is_none();
        out.record(fast == brute, || {
            format!("Z_{p}: S={s} fast={fast} bruteforce={brute}")
        });
    }
    Ok(())
}

/// Random minimal zero-sum sequences of length ≥ `min_len` over Z_p.
pub fn random_long_mzs(rng: &mut ChaCha8Rng, p: u32, min_len: usize) -> Option<Sequence> {
    if (p as usize) < min_len {
        return None;
    }
    for _ in 0..10_000 {
        let len = rng.gen_range(min_len..=p as usize);
        let prefix = random_zero_sum_free(rng, p, len - 1);
        if prefix.len() + 1 < min_len {
            continue;
        }
        let mut s = prefix;
        let last = s.group().neg(s.sum());
        s.push(last);
        return Some(s);
    }
    None
}

/// Every minimal zero-sum sequence with exactly two distinct elements splits.
pub fn two_element_support(p: u32, classes: &[Sequence], out: &mut CheckOutcome) -> Result<()> {
    for s in classes.iter().filter(|s| s.support_size() == 2) {
        let splits = is_splittable_bruteforce(s)?.is_some();
        out.record(splits, || format!("Z_{p}: S={s} is unsplittable"));
    }
    Ok(())
}

/// Runs every check. Σ-criterion equivalence covers the configured primes
/// exhaustively up to length 8 plus random longer sequences.
pub fn run_suite(cfg: &SuiteConfig) -> Result<Vec<CheckOutcome>> {
    let mut outcomes = vec![partition_superadditivity(cfg), zero_sum_free_set_bound(cfg)];
    let mut equivalence = CheckOutcome::new("sigma-criterion-equivalence");
    let mut two_support = CheckOutcome::new("two-element-support");
    let mut structure: Vec<CheckOutcome> = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x1415);

    for &p in &cfg.primes {
        if !crate::cyclic::is_prime(p) {
            return Err(crate::Error::CompositeOrder(p));
        }
        let classes: Vec<Sequence> = all_classes(p, cfg.jobs)?
            .into_iter()
            .map(|c| c.canonical)
            .collect();
        let short: Vec<Sequence> = classes.iter().filter(|s| s.len() <= 8).cloned().collect();
        criterion_equivalence(p, &short, &mut equivalence)?;
        two_element_support(p, &classes, &mut two_support)?;

        let unsplittable: Vec<Sequence> = classes
            .into_iter()
            .filter(|s| is_unsplittable_fast(s).unwrap_or(false))
            .collect();
        let found = unsplittable_structure(p, &unsplittable);
        if structure.is_empty() {
            structure = found;
        } else {
            for (acc, more) in structure.iter_mut().zip(found) {
                acc.checked += more.checked;
                acc.violations.extend(more.violations);
            }
        }
    }

    let long_primes: Vec<u32> = cfg.primes.iter().copied().filter(|&p| p >= 9).collect();
    if !long_primes.is_empty() {
        for i in 0..cfg.random_long_sequences {
            let p = long_primes[i % long_primes.len()];
            if let Some(s) = random_long_mzs(&mut rng, p, 9) {
                let scaled = s.scale(rng.gen_range(1..p))?;
                criterion_equivalence(p, &[scaled], &mut equivalence)?;
            }
        }
    }

    outcomes.push(equivalence);
    outcomes.push(two_support);
    outcomes.extend(structure);
    Ok(outcomes)
}
