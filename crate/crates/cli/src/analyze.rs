use std::collections::BTreeMap;

use serde::Serialize;
use zs_core::{
    classify, index_with_generator, is_minimal_zero_sum, sigma_complement_sizes, sigma_set,
    Sequence,
};

use crate::Usage;

#[derive(Serialize)]
struct Classification {
    method: zs_core::Method,
    unsplittable: bool,
    witness: Option<String>,
}

#[derive(Serialize)]
struct IndexReport {
    value: String,
    reduced: String,
    generator: u32,
}

#[derive(Serialize)]
struct Report {
    n: u32,
    seq: String,
    length: usize,
    support: Vec<u32>,
    h: u32,
    sum: u32,
    sigma: Vec<u32>,
    sigma_size: usize,
    zero_sum: bool,
    minimal: bool,
    classification: Option<Classification>,
    index: Option<IndexReport>,
    complement_sigma_sizes: BTreeMap<u32, usize>,
}

fn build(seq: &Sequence) -> Result<Report, Usage> {
    let sigma = sigma_set(seq);
    let minimal = is_minimal_zero_sum(seq);
    let classification = if minimal {
        let c = classify(seq)?;
        Some(Classification {
            method: c.method,
            unsplittable: c.unsplittable,
            witness: c.witness.map(|w| w.to_string()),
        })
    } else {
        None
    };
    // the index needs a nonzero term
    let index = if seq.support().any(|a| a != 0) {
        let (value, generator) = index_with_generator(seq)?;
        Some(IndexReport {
            value: value.to_string(),
            reduced: value.reduced_string(),
            generator: generator.residue(),
        })
    } else {
        None
    };
    Ok(Report {
        n: seq.order(),
        seq: seq.to_string(),
        length: seq.len(),
        support: seq.support().collect(),
        h: seq.max_multiplicity(),
        sum: seq.sum(),
        sigma_size: sigma.len(),
        sigma: sigma.to_vec(),
        zero_sum: seq.is_zero_sum(),
        minimal,
        classification,
        index,
        complement_sigma_sizes: sigma_complement_sizes(seq),
    })
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn render_text(r: &Report) -> String {
    let mut lines = vec![
        format!("n: {}", r.n),
        format!("seq: {}", r.seq),
        format!("length: {}", r.length),
        format!("support: {}", join(&r.support)),
        format!("h: {}", r.h),
        format!("sum: {}", r.sum),
        format!("sigma_size: {}", r.sigma_size),
        format!("sigma: {}", join(&r.sigma)),
        format!("zero_sum: {}", r.zero_sum),
        format!("minimal: {}", r.minimal),
    ];
    match &r.classification {
        Some(c) => {
            let verdict = if c.unsplittable {
                "unsplittable"
            } else {
                "splittable"
            };
            let method = match c.method {
                zs_core::Method::SigmaCriterion => "sigma criterion",
                zs_core::Method::BruteForce => "brute force",
            };
            lines.push(format!("classification: {verdict} ({method})"));
            if let Some(w) = &c.witness {
                lines.push(format!("witness: {w}"));
            }
        }
        None => lines.push("classification: n/a (not minimal zero-sum)".into()),
    }
    match &r.index {
        Some(i) => lines.push(format!(
            "index: {} = {} (generator {})",
            i.value, i.reduced, i.generator
        )),
        None => lines.push("index: n/a".into()),
    }
    lines.push(format!(
        "complement_sigma_sizes: {}",
        join(
            r.complement_sigma_sizes
                .iter()
                .map(|(g, s)| format!("{g}:{s}"))
        )
    ));
    lines.join("\n")
}

pub fn run(n: u64, text: &str, json: bool) -> Result<u8, Usage> {
    let seq = Sequence::parse(text, n)?;
    let report = build(&seq)?;
    if json {
        println!(
            "{}",
            serde_json::to_string(&report).map_err(anyhow::Error::from)?
        );
    } else {
        println!("{}", render_text(&report));
    }
    Ok(0)
}
