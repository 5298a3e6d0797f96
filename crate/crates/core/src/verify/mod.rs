//! Verification campaigns: each target checks one classification statement
//! against exhaustive enumeration or closed-form instances and produces a
//! structured [`VerifyReport`].
//!
//! Statements that are only proved above some prime bound run in two modes.
//! `Assert` checks what the statement licenses at the requested size and turns
//! every disagreement into a counterexample. `Explore` runs the exhaustive
//! classification at small sizes and records disagreements as notes.

pub mod checks;
pub mod forms;

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

use crate::cyclic::{is_prime, Sequence, SequenceClass};
use crate::enumerate::{
    compute_I, enumerate_mzs, fold_mzs, EnumSpec, Filter, SearchOptions, DESK_CAP,
};
use crate::error::{Error, Result};
use crate::index::{g_norm, index, NormValue};
use crate::sigma::{is_minimal_zero_sum, sigma_complement_sizes};
use crate::split::is_unsplittable;

pub const SCHEMA_VERSION: u32 = 1;
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Largest order accepted by the exhaustive drivers.
pub const EXHAUSTIVE_CAP: u32 = 31;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Verified,
    Falsified,
    Incomplete,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Assert,
    Explore,
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "assert" => Ok(Mode::Assert),
            "explore" => Ok(Mode::Explore),
            other => Err(Error::InvalidSpec(format!("unknown mode {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    Threshold,
    OddClassification,
    EvenClassification,
    HalfLengthForms,
    IndexAtMostTwo,
    ShorterForms,
    IndexGrowth,
    PropertySuite,
}

impl Target {
    pub const ALL: [Target; 8] = [
        Target::Threshold,
        Target::OddClassification,
        Target::EvenClassification,
        Target::HalfLengthForms,
        Target::IndexAtMostTwo,
        Target::ShorterForms,
        Target::IndexGrowth,
        Target::PropertySuite,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Target::Threshold => "i-of-g",
            Target::OddClassification => "xia-yuan-odd",
            Target::EvenClassification => "xia-yuan-even",
            Target::HalfLengthForms => "main-classification",
            Target::IndexAtMostTwo => "index-le-2",
            Target::ShorterForms => "thm-4-1",
            Target::IndexGrowth => "gao-counterexample",
            Target::PropertySuite => "lemma-suite",
        }
    }
}

impl std::str::FromStr for Target {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Target::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::InvalidSpec(format!("unknown target {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyParams {
    pub n: Option<u32>,
    pub n_range: Option<(u32, u32)>,
    pub p: Option<u32>,
    pub p_set: Option<Vec<u32>>,
    pub seed: u64,
    pub mode: Mode,
    pub budget: Option<u64>,
    pub jobs: usize,
}

impl Default for VerifyParams {
    fn default() -> Self {
        VerifyParams {
            n: None,
            n_range: None,
            p: None,
            p_set: None,
            seed: 0,
            mode: Mode::Assert,
            budget: None,
            jobs: 1,
        }
    }
}

impl VerifyParams {
    fn options(&self) -> SearchOptions {
        SearchOptions {
            cap: DESK_CAP,
            jobs: self.jobs,
            node_budget: self.budget,
            time_budget: None,
        }
    }

    fn spec(&self, n: u32, length: usize) -> EnumSpec {
        EnumSpec::new(n, length)
            .jobs(self.jobs)
            .node_budget(self.budget)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub n: u32,
    pub seq: Option<String>,
    pub orbit: Option<usize>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub schema: u32,
    pub target: String,
    pub mode: Mode,
    pub params: BTreeMap<String, Value>,
    pub status: Status,
    pub counterexamples: Vec<Counterexample>,
    pub checked_count: u64,
    pub elapsed_ms: u64,
    pub tool_version: String,
    pub values: BTreeMap<String, Value>,
    pub notes: Vec<String>,
}

impl VerifyReport {
    /// 0 when verified, 1 when falsified or incomplete.
    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Verified => 0,
            Status::Falsified | Status::Incomplete => 1,
        }
    }
}

/// Accumulates checks while a driver runs.
struct Campaign {
    mode: Mode,
    counterexamples: Vec<Counterexample>,
    checked: u64,
    complete: bool,
    values: BTreeMap<String, Value>,
    notes: Vec<String>,
}

impl Campaign {
    fn new(mode: Mode) -> Self {
        Campaign {
            mode,
            counterexamples: Vec::new(),
            checked: 0,
            complete: true,
            values: BTreeMap::new(),
            notes: Vec::new(),
        }
    }

    /// A hard check: a failure is a counterexample in assert mode and a note
    /// in explore mode.
    fn check(&mut self, ok: bool, n: u32, seq: Option<&Sequence>, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if ok {
            return;
        }
        let detail = detail();
        match self.mode {
            Mode::Assert => self.counterexamples.push(Counterexample {
                n,
                seq: seq.map(|s| s.to_string()),
                orbit: None,
                detail,
            }),
            Mode::Explore => self.notes.push(match seq {
                Some(s) => format!("deviation: Z_{n} {s}: {detail}"),
                None => format!("deviation: Z_{n}: {detail}"),
            }),
        }
    }

    fn check_class(&mut self, ok: bool, class: &SequenceClass, detail: impl FnOnce() -> String) {
        let n = class.canonical.order();
        let before = self.counterexamples.len();
        self.check(ok, n, Some(&class.canonical), detail);
        if self.counterexamples.len() > before {
            self.counterexamples.last_mut().expect("just pushed").orbit = Some(class.orbit_size);
        }
    }

    fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    fn value(&mut self, key: &str, value: Value) {
        self.values.insert(key.to_string(), value);
    }

    fn report(self, target: Target, params: &VerifyParams, start: Instant) -> VerifyReport {
        let status = if !self.counterexamples.is_empty() {
            Status::Falsified
        } else if !self.complete {
            Status::Incomplete
        } else {
            Status::Verified
        };
        VerifyReport {
            schema: SCHEMA_VERSION,
            target: target.name().to_string(),
            mode: params.mode,
            params: params_map(params),
            status,
            counterexamples: self.counterexamples,
            checked_count: self.checked,
            elapsed_ms: start.elapsed().as_millis() as u64,
            tool_version: TOOL_VERSION.to_string(),
            values: self.values,
            notes: self.notes,
        }
    }
}

fn params_map(params: &VerifyParams) -> BTreeMap<String, Value> {
    let mut map = BTreeMap::new();
    if let Some(n) = params.n {
        map.insert("n".into(), json!(n));
    }
    if let Some((a, b)) = params.n_range {
        map.insert("n_range".into(), json!([a, b]));
    }
    if let Some(p) = params.p {
        map.insert("p".into(), json!(p));
    }
    if let Some(set) = &params.p_set {
        map.insert("p_set".into(), json!(set));
    }
    map.insert("seed".into(), json!(params.seed));
    if let Some(b) = params.budget {
        map.insert("budget".into(), json!(b));
    }
    map
}

/// I(Z_n) for cyclic groups: 1 for n ∈ {2,3,4,5,7}, 5 for n = 6, ⌊n/2⌋+2 for n ≥ 8.
pub fn expected_i_of_g(n: u32) -> u64 {
    match n {
        0..=5 | 7 => 1,
        6 => 5,
        _ => (n / 2 + 2) as u64,
    }
}

fn require_prime(p: u32, floor: u32, what: &str) -> Result<()> {
    if !is_prime(p) || p <= floor {
        return Err(Error::InvalidSpec(format!(
            "{what} needs a prime p > {floor}, got {p} (use --mode explore for small p)"
        )));
    }
    Ok(())
}

fn require_exhaustive_size(n: u32) -> Result<()> {
    if n > EXHAUSTIVE_CAP {
        return Err(Error::CapExceeded {
            n,
            cap: EXHAUSTIVE_CAP,
        });
    }
    Ok(())
}

pub fn run(target: Target, params: &VerifyParams) -> Result<VerifyReport> {
    let start = Instant::now();
    let mut campaign = Campaign::new(params.mode);
    match target {
        Target::Threshold => i_of_g(params, &mut campaign)?,
        Target::OddClassification => classification(params, &mut campaign, false)?,
        Target::EvenClassification => classification(params, &mut campaign, true)?,
        Target::HalfLengthForms => main_classification(params, &mut campaign)?,
        Target::IndexAtMostTwo => index_le_2(params, &mut campaign)?,
        Target::ShorterForms => shorter_forms(params, &mut campaign)?,
        Target::IndexGrowth => index_growth(params, &mut campaign)?,
        Target::PropertySuite => property_suite(params, &mut campaign)?,
    }
    Ok(campaign.report(target, params, start))
}

fn i_of_g(params: &VerifyParams, c: &mut Campaign) -> Result<()> {
    let (lo, hi) = match (params.n_range, params.n) {
        (Some(range), _) => range,
        (None, Some(n)) => (n, n),
        (None, None) => (2, 14),
    };
    if lo < 2 || lo > hi {
        return Err(Error::InvalidSpec(format!("bad n range {lo}..{hi}")));
    }
    let opts = params.options();
    let mut table = BTreeMap::new();
    for n in lo..=hi {
        let result = compute_I(n, &opts)?;
        if !result.exhaustive {
            c.complete = false;
            c.note(format!("Z_{n}: search budget exhausted"));
            break;
        }
        let expected = expected_i_of_g(n);
        table.insert(n.to_string(), json!(result.value));
        c.check(result.value == expected, n, None, || {
            format!("I(Z_{n}) computed {} but expected {expected}", result.value)
        });
    }
    c.value("I", json!(table));
    Ok(())
}

fn index_value(seq: &Sequence) -> Result<NormValue> {
    index(seq)
}

/// Unsplittable classes at length ⌊n/2⌋+1 against the closed-form families.
fn classification(params: &VerifyParams, c: &mut Campaign, even: bool) -> Result<()> {
    let n = params.n.unwrap_or(if even { 10 } else { 11 });
    require_exhaustive_size(n)?;
    let families: Vec<Sequence> = if even {
        let (first, second) = forms::even_families(n)?;
        first.into_iter().chain(second).collect()
    } else {
        forms::odd_family(n)?
    };
    let mut expected = BTreeSet::new();
    for form in &families {
        if is_minimal_zero_sum(form) {
            expected.insert(crate::cyclic::canonical_class(form).canonical.to_string());
        } else {
            c.note(format!(
                "family instance {form} is not minimal zero-sum; excluded"
            ));
        }
    }

    let length = n as usize / 2 + 1;
    let found = enumerate_mzs(&params.spec(n, length).filter(Filter::Unsplittable))?;
    if !found.complete {
        c.complete = false;
        c.note("enumeration budget exhausted");
        return Ok(());
    }
    let mut seen = BTreeSet::new();
    let mut listed = Vec::new();
    for class in &found.classes {
        let text = class.canonical.to_string();
        let value = index_value(&class.canonical)?;
        listed.push(
            json!({ "seq": text, "index": value.reduced_string(), "orbit": class.orbit_size }),
        );
        c.check_class(expected.contains(&text), class, || {
            "unsplittable class outside the closed-form families".into()
        });
        if even {
            c.check_class(value >= NormValue::new(2, 1), class, || {
                format!("index {value} is below 2")
            });
        } else {
            c.check_class(value == NormValue::new(2, 1), class, || {
                format!("index {value} is not 2")
            });
        }
        seen.insert(text);
    }
    for missing in expected.difference(&seen) {
        let seq = Sequence::parse(missing, n as u64)?;
        c.check(false, n, Some(&seq), || {
            "family instance is minimal zero-sum but not an unsplittable class".into()
        });
    }
    c.value("length", json!(length));
    c.value("classes", json!(listed));
    c.value("expected", json!(expected));
    Ok(())
}

/// Minimal, unsplittable by the Σ criterion, index exactly 2 (attained at h with g = 2h).
fn check_half_length_form(c: &mut Campaign, p: u32, form: &Sequence) -> Result<Value> {
    let minimal = is_minimal_zero_sum(form);
    c.check(minimal, p, Some(form), || {
        "not a minimal zero-sum sequence".into()
    });
    if !minimal {
        return Ok(json!({ "seq": form.to_string(), "minimal": false }));
    }
    let sizes = sigma_complement_sizes(form);
    let unsplittable = sizes.values().all(|&s| s == p as usize - 1);
    c.check(unsplittable, p, Some(form), || {
        format!("complement sigma sizes {sizes:?} are not all p-1")
    });
    let value = index_value(form)?;
    c.check(value == NormValue::new(2, 1), p, Some(form), || {
        format!("index {value} is not 2")
    });
    let half = g_norm(form, p.div_ceil(2))?;
    c.check(half == NormValue::new(2, 1), p, Some(form), || {
        format!("norm with respect to h = g/2 is {half}, not 2")
    });
    Ok(json!({
        "seq": form.to_string(),
        "minimal": minimal,
        "unsplittable": unsplittable,
        "index": value.reduced_string(),
    }))
}

fn main_classification(params: &VerifyParams, c: &mut Campaign) -> Result<()> {
    let p = params.p.unwrap_or(157);
    match params.mode {
        Mode::Assert => require_prime(p, 155, "main-classification in assert mode")?,
        Mode::Explore => {
            require_prime(p, 10, "main-classification")?;
            require_exhaustive_size(p)?;
        }
    }
    let family = forms::half_length_forms(p)?;
    let mut checked = Vec::new();
    for form in &family {
        checked.push(check_half_length_form(c, p, form)?);
    }
    c.value("forms", json!(checked));
    if params.mode == Mode::Explore {
        c.note(format!(
            "p = {p} is below the proven range p > 155; results are exploratory"
        ));
        explore_classes(params, c, p, (p as usize - 1) / 2, &family)?;
    }
    Ok(())
}

/// Enumerates unsplittable classes at `length` and reports how they relate to `family`.
fn explore_classes(
    params: &VerifyParams,
    c: &mut Campaign,
    p: u32,
    length: usize,
    family: &[Sequence],
) -> Result<()> {
    let found = enumerate_mzs(&params.spec(p, length).filter(Filter::Unsplittable))?;
    if !found.complete {
        c.complete = false;
        c.note("enumeration budget exhausted");
        return Ok(());
    }
    let expected = forms::canonical_set(family);
    let mut listed = Vec::new();
    let mut seen = BTreeSet::new();
    for class in &found.classes {
        let text = class.canonical.to_string();
        let support = class.canonical.support_size();
        listed.push(json!({
            "seq": text,
            "index": index_value(&class.canonical)?.reduced_string(),
            "support": support,
        }));
        if !expected.contains(&text) {
            c.note(format!(
                "unsplittable class {text} is not one of the closed forms"
            ));
        }
        if !(3..=4).contains(&support) {
            c.note(format!(
                "unsplittable class {text} has support size {support}"
            ));
        }
        seen.insert(text);
    }
    for missing in expected.difference(&seen) {
        c.note(format!(
            "closed form {missing} is not an unsplittable class"
        ));
    }
    c.checked += found.classes.len() as u64;
    c.value("length", json!(length));
    c.value("classes", json!(listed));
    Ok(())
}

fn index_le_2(params: &VerifyParams, c: &mut Campaign) -> Result<()> {
    let p = params.p.unwrap_or(13);
    if !is_prime(p) || p < 3 {
        return Err(Error::InvalidSpec(format!(
            "index-le-2 needs an odd prime, got {p}"
        )));
    }
    require_exhaustive_size(p)?;
    let min_len = (p as usize - 1) / 2;
    let spec = EnumSpec::lengths(p, min_len..=p as usize)
        .jobs(params.jobs)
        .node_budget(params.budget);
    let (parts, complete, _) = fold_mzs(
        &spec,
        || (0u64, NormValue::new(0, 1), Vec::new()),
        |acc: &mut (u64, NormValue, Vec<(SequenceClass, NormValue)>), class| {
            acc.0 += 1;
            let value = index(&class.canonical).expect("nonzero support");
            if value > acc.1 {
                acc.1 = value;
            }
            if value > NormValue::new(2, 1) {
                acc.2.push((class, value));
            }
        },
    )?;
    if !complete {
        c.complete = false;
        c.note("enumeration budget exhausted");
    }
    let mut max = NormValue::new(0, 1);
    for (count, part_max, failing) in parts {
        c.checked += count;
        max = max.max(part_max);
        for (class, value) in failing {
            c.check_class(false, &class, || format!("index {value} exceeds 2"));
        }
    }
    c.value("min_length", json!(min_len));
    c.value("max_index", json!(max.reduced_string()));
    if p <= 155 {
        c.note(format!(
            "p = {p} is below the proven range p > 155; the bound is checked empirically"
        ));
    }
    Ok(())
}

fn shorter_forms(params: &VerifyParams, c: &mut Campaign) -> Result<()> {
    let p = params.p.unwrap_or(211);
    match params.mode {
        Mode::Assert => require_prime(p, 200, "thm-4-1 in assert mode")?,
        Mode::Explore => require_prime(p, 16, "thm-4-1")?,
    }
    let family = forms::shorter_forms(p)?;
    let mut listed = Vec::new();
    for form in &family {
        let minimal = is_minimal_zero_sum(form);
        c.check(minimal, p, Some(form), || {
            "not a minimal zero-sum sequence".into()
        });
        let unsplittable = minimal && is_unsplittable(form)?.0;
        c.check(unsplittable, p, Some(form), || "splittable".into());
        let value = index_value(form)?;
        listed.push(json!({
            "seq": form.to_string(),
            "minimal": minimal,
            "unsplittable": unsplittable,
            "index": value.reduced_string(),
        }));
    }
    c.value("forms", json!(listed));
    if params.mode == Mode::Explore && p <= 200 {
        c.note(format!(
            "p = {p} is below the proven range p > 200; results are exploratory"
        ));
    }
    if params.mode == Mode::Explore && p <= EXHAUSTIVE_CAP {
        explore_classes(params, c, p, (p as usize - 3) / 2, &family)?;
    }
    Ok(())
}

fn index_growth(params: &VerifyParams, c: &mut Campaign) -> Result<()> {
    let n = params.n.unwrap_or(16);
    let seq = forms::index_growth_example(n)?;
    let minimal = is_minimal_zero_sum(&seq);
    c.check(minimal, n, Some(&seq), || {
        "not a minimal zero-sum sequence".into()
    });
    let value = index_value(&seq)?;
    let expected = NormValue::new(n as u64 / 8 + 1, 1);
    c.check(value == expected, n, Some(&seq), || {
        format!("index {value} differs from n/8 + 1 = {}", n / 8 + 1)
    });
    c.value("seq", json!(seq.to_string()));
    c.value("index", json!(value.reduced_string()));
    Ok(())
}

fn property_suite(params: &VerifyParams, c: &mut Campaign) -> Result<()> {
    let cfg = checks::SuiteConfig {
        primes: params.p_set.clone().unwrap_or_else(|| vec![11, 13]),
        seed: params.seed,
        jobs: params.jobs,
        ..checks::SuiteConfig::default()
    };
    for &p in &cfg.primes {
        require_exhaustive_size(p)?;
    }
    let outcomes = checks::run_suite(&cfg)?;
    let mut counts = BTreeMap::new();
    for outcome in outcomes {
        counts.insert(outcome.check.to_string(), json!(outcome.checked));
        c.checked += outcome.checked;
        for v in outcome.violations {
            c.counterexamples.push(Counterexample {
                n: 0,
                seq: None,
                orbit: None,
                detail: format!("{}: {v}", outcome.check),
            });
        }
    }
    c.value("checks", json!(counts));
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expected_table() {
        let got: Vec<u64> = (2..=14).map(expected_i_of_g).collect();
        assert_eq!(got, vec![1, 1, 1, 1, 5, 1, 6, 6, 7, 7, 8, 8, 9]);
    }

    #[test]
    fn target_names_round_trip() {
        for t in Target::ALL {
            assert_eq!(t.name().parse::<Target>().unwrap(), t);
        }
        assert!("thm-9".parse::<Target>().is_err());
    }

    #[test]
    fn growth_example_report() {
        let params = VerifyParams {
            n: Some(16),
            ..VerifyParams::default()
        };
        let report = run(Target::IndexGrowth, &params).unwrap();
        assert_eq!(report.status, Status::Verified);
        assert_eq!(report.values["index"], json!("3"));
        assert_eq!(report.values["seq"], json!("1^4,8,9^4"));
    }

    #[test]
    fn assert_mode_refuses_small_primes() {
        let params = VerifyParams {
            p: Some(13),
            ..VerifyParams::default()
        };
        assert!(matches!(
            run(Target::HalfLengthForms, &params),
            Err(Error::InvalidSpec(_))
        ));
    }

    #[test]
    fn odd_classification_at_11() {
        let params = VerifyParams {
            n: Some(11),
            ..VerifyParams::default()
        };
        let report = run(Target::OddClassification, &params).unwrap();
        assert_eq!(report.status, Status::Verified, "{report:?}");
        assert_eq!(report.values["classes"][0]["seq"], json!("1^3,5,7^2"));
        assert_eq!(report.values["classes"].as_array().unwrap().len(), 1);
    }

    #[test]
    fn budget_exhaustion_marks_incomplete() {
        let params = VerifyParams {
            n: Some(13),
            budget: Some(50),
            ..VerifyParams::default()
        };
        let report = run(Target::OddClassification, &params).unwrap();
        assert_eq!(report.status, Status::Incomplete);
        assert_eq!(report.exit_code(), 1);
    }
}
