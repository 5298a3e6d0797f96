//! Closed-form sequence families from the classification results, written
//! with g = 1. Every other generator gives a unit multiple, so one instance
//! per parameter choice covers the whole family up to units.

use std::collections::BTreeSet;

use crate::cyclic::{canonical_class, CyclicGroup, Sequence};
use crate::error::{Error, Result};

/// Builds `∏ aᵢ^{mᵢ}` over Z_n; zero multiplicities are skipped.
pub fn from_powers(n: u32, powers: &[(u32, u32)]) -> Result<Sequence> {
    let group = CyclicGroup::new(n as u64)?;
    let mut mult = vec![0u32; n as usize];
    for &(a, m) in powers {
        let a = group.element(a as u64)?.residue();
        mult[a as usize] += m;
    }
    Sequence::from_multiplicities(group, mult)
}

fn require_odd_prime_at_least(p: u32, floor: u32) -> Result<()> {
    if p < floor || p.is_multiple_of(2) || !crate::cyclic::is_prime(p) {
        return Err(Error::InvalidSpec(format!(
            "expected an odd prime p >= {floor}, got {p}"
        )));
    }
    Ok(())
}

/// Unsplittable forms of length (p−1)/2:
/// `g^{(p−11)/2} ((p+3)/2·g)^4 ((p−1)/2·g)` and `g^{(p−7)/2} ((p+5)/2·g)^2 ((p−3)/2·g)`.
pub fn half_length_forms(p: u32) -> Result<[Sequence; 2]> {
    require_odd_prime_at_least(p, 11)?;
    Ok([
        from_powers(p, &[(1, (p - 11) / 2), ((p + 3) / 2, 4), ((p - 1) / 2, 1)])?,
        from_powers(p, &[(1, (p - 7) / 2), ((p + 5) / 2, 2), ((p - 3) / 2, 1)])?,
    ])
}

/// Unsplittable forms of length (p−3)/2:
/// `g^{(p−17)/2} ((p+3)/2·g)^6 ((p−1)/2·g)` and `g^{(p−9)/2} ((p+7)/2·g)^2 ((p−5)/2·g)`.
pub fn shorter_forms(p: u32) -> Result<[Sequence; 2]> {
    require_odd_prime_at_least(p, 17)?;
    Ok([
        from_powers(p, &[(1, (p - 17) / 2), ((p + 3) / 2, 6), ((p - 1) / 2, 1)])?,
        from_powers(p, &[(1, (p - 9) / 2), ((p + 7) / 2, 2), ((p - 5) / 2, 1)])?,
    ])
}

/// Odd n ≥ 9, length ⌊n/2⌋+1: `g^{(n−5)/2} ((n+3)/2·g)^2 ((n−1)/2·g)`, and for
/// n = 9 additionally `g (3g)^2 (4g) (7g)`.
pub fn odd_family(n: u32) -> Result<Vec<Sequence>> {
    if n < 9 || n.is_multiple_of(2) {
        return Err(Error::InvalidSpec(format!("expected odd n >= 9, got {n}")));
    }
    let mut out = vec![from_powers(
        n,
        &[(1, (n - 5) / 2), ((n + 3) / 2, 2), ((n - 1) / 2, 1)],
    )?];
    if n == 9 {
        out.push(from_powers(9, &[(1, 1), (3, 2), (4, 1), (7, 1)])?);
    }
    Ok(out)
}

/// Even n ≥ 8, length n/2+1. First family: `(2g)^{n/2−1} (x·g) ((n+2−x)·g)`
/// with x odd, 1 < x < n, x ≠ n+2−x. Second family:
/// `g^t (n/2·g) ((1+n/2)·g)^{2l}` with t, l ≥ 1 and t + 2l = n/2.
pub fn even_families(n: u32) -> Result<(Vec<Sequence>, Vec<Sequence>)> {
    if n < 8 || n % 2 == 1 {
        return Err(Error::InvalidSpec(format!("expected even n >= 8, got {n}")));
    }
    let half = n / 2;
    let mut first = Vec::new();
    for x in (3..n).step_by(2) {
        let partner = n + 2 - x;
        if x == partner {
            continue;
        }
        first.push(from_powers(n, &[(2, half - 1), (x, 1), (partner % n, 1)])?);
    }
    let mut second = Vec::new();
    for l in 1..half {
        if 2 * l >= half {
            break;
        }
        let t = half - 2 * l;
        second.push(from_powers(n, &[(1, t), (half, 1), (half + 1, 2 * l)])?);
    }
    Ok((first, second))
}

/// `g^{n/4} (n/2·g) ((1+n/2)·g)^{n/4}` for n ≡ 0 mod 8; its index is n/8 + 1.
pub fn index_growth_example(n: u32) -> Result<Sequence> {
    if n == 0 || !n.is_multiple_of(8) {
        return Err(Error::InvalidSpec(format!(
            "expected n divisible by 8, got {n}"
        )));
    }
    from_powers(n, &[(1, n / 4), (n / 2, 1), (n / 2 + 1, n / 4)])
}

/// Canonical representatives of the given sequences, deduplicated and sorted.
pub fn canonical_set<'a>(seqs: impl IntoIterator<Item = &'a Sequence>) -> BTreeSet<String> {
    seqs.into_iter()
        .map(|s| canonical_class(s).canonical.to_string())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_length_forms_at_157() {
        let [a, b] = half_length_forms(157).unwrap();
        assert_eq!(a.to_string(), "1^73,78,80^4");
        assert_eq!(b.to_string(), "1^75,77,81^2");
        assert_eq!(a.len(), 78);
        assert_eq!(b.len(), 78);
        assert!(a.is_zero_sum() && b.is_zero_sum());
        assert!(half_length_forms(15).is_err());
        assert!(half_length_forms(7).is_err());
    }

    #[test]
    fn shorter_forms_lengths() {
        for p in [211u32, 223] {
            for s in shorter_forms(p).unwrap() {
                assert_eq!(s.len() as u32, (p - 3) / 2);
                assert!(s.is_zero_sum());
            }
        }
    }

    #[test]
    fn odd_family_small() {
        let f = odd_family(11).unwrap();
        assert_eq!(f[0].to_string(), "1^3,5,7^2");
        let f = odd_family(9).unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(f[1].to_string(), "1,3^2,4,7");
        assert!(odd_family(10).is_err());
    }

    #[test]
    fn even_families_small() {
        let (first, second) = even_families(8).unwrap();
        assert_eq!(
            first.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
            vec!["2^3,3,7", "2^3,3,7"]
        );
        assert_eq!(
            second.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
            vec!["1^2,4,5^2"]
        );
        for s in first.iter().chain(&second) {
            assert_eq!(s.len(), 5);
            assert!(s.is_zero_sum());
        }
    }

    #[test]
    fn growth_example() {
        assert_eq!(index_growth_example(8).unwrap().to_string(), "1^2,4,5^2");
        assert_eq!(index_growth_example(16).unwrap().to_string(), "1^4,8,9^4");
        assert!(index_growth_example(12).is_err());
    }
}
