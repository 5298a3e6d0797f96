//! Acceptance gate. Each criterion prints one PASS/FAIL line; the process
//! exits nonzero if any criterion fails. Expected values and time limits are pinned here.

use std::process::Command;
use std::thread;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use zs_core::verify::{self, checks, forms, Status, Target, VerifyParams};
use zs_core::{
    compute_I, index, is_minimal_zero_sum, is_splittable_bruteforce, is_unsplittable_fast,
    max_index_over, naive, sigma_complement_sizes, sigma_set, CyclicGroup, NormValue,
    SearchOptions, Sequence,
};

const FORM_LIMIT: Duration = Duration::from_secs(1);
const I_TABLE_LIMIT: Duration = Duration::from_secs(600);
const CLASSIFICATION_LIMIT: Duration = Duration::from_secs(900);
const MAX_INDEX_LIMIT: Duration = Duration::from_secs(2 * 3600);
const ORACLE_LIMIT: Duration = Duration::from_secs(300);

/// I(Z_n) for n = 2..=14.
const I_TABLE: [u64; 13] = [1, 1, 1, 1, 5, 1, 6, 6, 7, 7, 8, 8, 9];
/// Index of both length-(p−3)/2 forms at p = 211, frozen after the first verified run.
const SHORTER_FORM_INDEX_211: [u64; 2] = [2, 2];
/// Largest index over classes of length ≥ (p−1)/2, frozen after the first verified run.
const MAX_INDEX_HALF_LENGTH: [(u32, u64); 4] = [(11, 2), (13, 2), (17, 2), (19, 2)];

fn jobs() -> usize {
    thread::available_parallelism()
        .map_or(4, |n| n.get())
        .max(4)
}

struct Gate {
    failed: Vec<u32>,
}

impl Gate {
    fn criterion(
        &mut self,
        id: u32,
        title: &str,
        limit: Duration,
        body: impl FnOnce() -> Result<String, String>,
    ) {
        let start = Instant::now();
        let outcome = body();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > limit => Err(format!(
                "{detail}; took {:.2}s, limit {:.0}s",
                elapsed.as_secs_f64(),
                limit.as_secs_f64()
            )),
            other => other,
        };
        match outcome {
            Ok(detail) => println!(
                "PASS [{id}] {title} ({:.2}s): {detail}",
                elapsed.as_secs_f64()
            ),
            Err(detail) => {
                println!(
                    "FAIL [{id}] {title} ({:.2}s): {detail}",
                    elapsed.as_secs_f64()
                );
                self.failed.push(id);
            }
        }
    }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn two() -> NormValue {
    NormValue::new(2, 1)
}

fn half_length_forms_hold() -> Result<String, String> {
    let mut checked = 0;
    for p in [157u32, 163, 211] {
        let start = Instant::now();
        for s in forms::half_length_forms(p).map_err(|e| e.to_string())? {
            ensure(is_minimal_zero_sum(&s), || {
                format!("Z_{p} {s} is not minimal")
            })?;
            let sizes = sigma_complement_sizes(&s);
            ensure(sizes.values().all(|&k| k == p as usize - 1), || {
                format!("Z_{p} {s}: complement sizes {sizes:?}")
            })?;
            let ind = index(&s).map_err(|e| e.to_string())?;
            ensure(ind == two(), || format!("Z_{p} {s}: index {ind}"))?;
            checked += 1;
        }
        ensure(start.elapsed() < FORM_LIMIT, || {
            format!("p = {p} took {:?}", start.elapsed())
        })?;
    }
    let start = Instant::now();
    let mut indices = Vec::new();
    for s in forms::shorter_forms(211).map_err(|e| e.to_string())? {
        ensure(is_minimal_zero_sum(&s), || {
            format!("Z_211 {s} is not minimal")
        })?;
        ensure(is_unsplittable_fast(&s) == Ok(true), || {
            format!("Z_211 {s} splits")
        })?;
        let ind = index(&s).map_err(|e| e.to_string())?;
        ensure(ind.is_integer(), || {
            format!("Z_211 {s}: index {ind} not integral")
        })?;
        indices.push(ind.ceil());
        checked += 1;
    }
    ensure(start.elapsed() < FORM_LIMIT, || {
        format!("p = 211 took {:?}", start.elapsed())
    })?;
    ensure(indices == SHORTER_FORM_INDEX_211, || {
        format!("shorter forms at 211 have index {indices:?}, frozen {SHORTER_FORM_INDEX_211:?}")
    })?;
    Ok(format!(
        "{checked} forms; shorter-form index at 211 = {indices:?}"
    ))
}

fn i_table_matches() -> Result<String, String> {
    let opts = SearchOptions::default().with_jobs(jobs());
    let mut got = Vec::new();
    for n in 2..=14u32 {
        let r = compute_I(n, &opts).map_err(|e| e.to_string())?;
        ensure(r.exhaustive, || format!("Z_{n} search incomplete"))?;
        got.push(r.value);
    }
    ensure(got == I_TABLE, || format!("got {got:?}"))?;
    Ok(format!("{got:?}"))
}

fn classification_holds() -> Result<String, String> {
    let mut summary = Vec::new();
    let cases = [9u32, 11, 13, 15]
        .map(|n| (Target::OddClassification, n))
        .into_iter()
        .chain([8u32, 10, 12].map(|n| (Target::EvenClassification, n)));
    for (target, n) in cases {
        let params = VerifyParams {
            n: Some(n),
            jobs: jobs(),
            ..VerifyParams::default()
        };
        let report = verify::run(target, &params).map_err(|e| e.to_string())?;
        ensure(report.status == Status::Verified, || {
            format!("n = {n}: {:?} {:?}", report.status, report.counterexamples)
        })?;
        let found: Vec<&str> = report.values["classes"]
            .as_array()
            .unwrap()
            .iter()
            .map(|c| c["seq"].as_str().unwrap())
            .collect();
        let mut found_sorted = found.clone();
        found_sorted.sort_unstable();
        let expected: Vec<&str> = report.values["expected"]
            .as_array()
            .unwrap()
            .iter()
            .map(|c| c.as_str().unwrap())
            .collect();
        ensure(found_sorted == expected, || {
            format!("n = {n}: {found:?} vs {expected:?}")
        })?;
        if n == 9 {
            ensure(found.contains(&"1,3^2,4,7"), || {
                "n = 9 misses 1,3^2,4,7".into()
            })?;
        }
        summary.push(format!("{n}:{}", found.len()));
    }
    Ok(format!("classes per n {}", summary.join(" ")))
}

fn growth_example_holds() -> Result<String, String> {
    for n in [8u32, 16, 24] {
        let s = forms::index_growth_example(n).map_err(|e| e.to_string())?;
        ensure(is_minimal_zero_sum(&s), || {
            format!("Z_{n} {s} is not minimal")
        })?;
        let ind = index(&s).map_err(|e| e.to_string())?;
        ensure(ind == NormValue::new(n as u64 / 8 + 1, 1), || {
            format!("Z_{n} {s}: index {ind}")
        })?;
    }
    Ok("index n/8+1 at n = 8, 16, 24".into())
}

fn max_index_pinned() -> Result<String, String> {
    let opts = SearchOptions::default().with_cap(19).with_jobs(jobs());
    let mut got = Vec::new();
    for (p, pinned) in MAX_INDEX_HALF_LENGTH {
        let r = max_index_over(p, (p as usize - 1) / 2..=p as usize, &opts)
            .map_err(|e| e.to_string())?;
        ensure(r.exhaustive, || format!("Z_{p} search incomplete"))?;
        ensure(r.value == pinned && r.value <= 2, || {
            format!("Z_{p}: max index {} (pinned {pinned})", r.value)
        })?;
        got.push((p, r.value));
    }
    Ok(format!("{got:?}"))
}

fn oracles_agree() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);

    // Σ against sub-multiset enumeration, every sequence of length ≤ 12 over n ≤ 9
    let mut sigma_cases = 0u64;
    for n in 2..=9u32 {
        let group = CyclicGroup::new(n as u64).unwrap();
        for len in 1..=12 {
            for s in naive::multisets(group, len) {
                let fast: Vec<u32> = sigma_set(&s).iter().collect();
                let slow: Vec<u32> = naive::subset_sums(&s).into_iter().collect();
                ensure(fast == slow, || format!("sigma differs on Z_{n} {s}"))?;
                sigma_cases += 1;
            }
        }
    }
    for _ in 0..1000 {
        let n = rng.gen_range(10..=250u32);
        let len = rng.gen_range(13..=18);
        let terms: Vec<u32> = (0..len).map(|_| rng.gen_range(0..n)).collect();
        let s = Sequence::from_residues(CyclicGroup::new(n as u64).unwrap(), &terms).unwrap();
        let fast: Vec<u32> = sigma_set(&s).iter().collect();
        let slow: Vec<u32> = naive::subset_sums_by_mask(&s).into_iter().collect();
        ensure(fast == slow, || format!("sigma differs on Z_{n} {s}"))?;
        sigma_cases += 1;
    }

    // Σ criterion against brute-force splitting, every minimal sequence of length ≤ 8
    let mut split_cases = 0u64;
    for p in [5u32, 7, 11, 13] {
        let group = CyclicGroup::new(p as u64).unwrap();
        for len in 1..=8.min(p as usize) {
            for s in naive::multisets(group, len) {
                if !is_minimal_zero_sum(&s) {
                    continue;
                }
                let fast = is_unsplittable_fast(&s).map_err(|e| e.to_string())?;
                let brute = is_splittable_bruteforce(&s)
                    .map_err(|e| e.to_string())?
                    .is_none();
                ensure(fast == brute, || {
                    format!("Z_{p} {s}: fast {fast} brute {brute}")
                })?;
                split_cases += 1;
            }
        }
    }
    let primes = [17u32, 19, 23, 29, 31];
    for i in 0..500 {
        let p = primes[i % primes.len()];
        let s = checks::random_long_mzs(&mut rng, p, 9).ok_or("no random sequence")?;
        let fast = is_unsplittable_fast(&s).map_err(|e| e.to_string())?;
        let brute = is_splittable_bruteforce(&s)
            .map_err(|e| e.to_string())?
            .is_none();
        ensure(fast == brute, || {
            format!("Z_{p} {s}: fast {fast} brute {brute}")
        })?;
        split_cases += 1;
    }

    // single-complement minimality against the definition, n ≤ 9
    let mut minimal_cases = 0u64;
    for n in 2..=9u32 {
        let group = CyclicGroup::new(n as u64).unwrap();
        for len in 1..=n as usize + 1 {
            for s in naive::multisets(group, len) {
                ensure(
                    is_minimal_zero_sum(&s) == naive::is_minimal_zero_sum(&s),
                    || format!("minimality differs on Z_{n} {s}"),
                )?;
                minimal_cases += 1;
            }
        }
    }
    Ok(format!(
        "sigma {sigma_cases}, splitting {split_cases}, minimality {minimal_cases} cases"
    ))
}

fn property_suite_clean() -> Result<String, String> {
    let cfg = checks::SuiteConfig {
        primes: vec![11, 13],
        jobs: jobs(),
        ..checks::SuiteConfig::default()
    };
    let outcomes = checks::run_suite(&cfg).map_err(|e| e.to_string())?;
    let mut parts = Vec::new();
    for o in &outcomes {
        ensure(o.passed(), || {
            format!(
                "{}: {:?}",
                o.check,
                &o.violations[..o.violations.len().min(3)]
            )
        })?;
        ensure(o.checked > 0, || format!("{} checked nothing", o.check))?;
        parts.push(format!("{}={}", o.check, o.checked));
    }
    Ok(parts.join(" "))
}

fn enumeration_is_deterministic() -> Result<String, String> {
    let run = |jobs: &str| {
        Command::new(env!("CARGO_BIN_EXE_zs"))
            .args(["enumerate", "--n", "13", "--length", "6", "--jobs", jobs])
            .env_remove("ZS_CACHE_DIR")
            .output()
            .map_err(|e| e.to_string())
    };
    let one = run("1")?;
    let eight = run("8")?;
    ensure(one.status.success() && eight.status.success(), || {
        "enumerate failed".into()
    })?;
    ensure(!one.stdout.is_empty(), || "empty output".into())?;
    ensure(one.stdout == eight.stdout, || "outputs differ".into())?;
    Ok(format!(
        "{} lines, {} bytes identical",
        one.stdout.iter().filter(|&&b| b == b'\n').count(),
        one.stdout.len()
    ))
}

fn main() {
    let mut gate = Gate { failed: Vec::new() };
    gate.criterion(
        1,
        "closed forms at p = 157, 163, 211",
        4 * FORM_LIMIT,
        half_length_forms_hold,
    );
    gate.criterion(
        2,
        "I(Z_n) table for n = 2..14",
        I_TABLE_LIMIT,
        i_table_matches,
    );
    gate.criterion(
        3,
        "odd and even classification at length n/2 + 1",
        CLASSIFICATION_LIMIT,
        classification_holds,
    );
    gate.criterion(4, "index growth example", FORM_LIMIT, growth_example_holds);
    gate.criterion(
        5,
        "max index at length >= (p-1)/2",
        MAX_INDEX_LIMIT,
        max_index_pinned,
    );
    gate.criterion(6, "oracle equivalences", ORACLE_LIMIT, oracles_agree);
    gate.criterion(
        7,
        "structural property suite",
        ORACLE_LIMIT,
        property_suite_clean,
    );
    gate.criterion(
        8,
        "enumeration determinism across jobs",
        ORACLE_LIMIT,
        enumeration_is_deterministic,
    );
    if !gate.failed.is_empty() {
        eprintln!("failed criteria: {:?}", gate.failed);
        std::process::exit(1);
    }
}
