//! Fixtures shared by the benchmarks.

use zs_core::Sequence;

/// g^{(p-11)/2} ((p+3)/2 g)^4 ((p-1)/2 g) with g = 1.
pub fn long_unsplittable(p: u32) -> Sequence {
    let text = format!("1^{},{}^4,{}", (p - 11) / 2, (p + 3) / 2, (p - 1) / 2);
    Sequence::parse(&text, p as u64).expect("valid fixture")
}
