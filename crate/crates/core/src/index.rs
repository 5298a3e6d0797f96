//! g-norms and the index of a sequence, in exact integer arithmetic.

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;
use serde::{Serialize, Serializer};

use crate::cyclic::{inverse_mod, units_mod, Element, Sequence};
use crate::error::{Error, Result};

/// An unreduced fraction `(Σ xᵢ) / m`. Equality and ordering are by value.
#[derive(Debug, Clone, Copy)]
pub struct NormValue {
    numerator: u64,
    denominator: u64,
}

impl NormValue {
    pub fn new(numerator: u64, denominator: u64) -> Self {
        assert!(denominator > 0, "norm denominator must be positive");
        NormValue {
            numerator,
            denominator,
        }
    }

    pub fn numerator(&self) -> u64 {
        self.numerator
    }

    pub fn denominator(&self) -> u64 {
        self.denominator
    }

    pub fn is_integer(&self) -> bool {
        self.numerator.is_multiple_of(self.denominator)
    }

    /// Lowest-terms `(num, den)`.
    pub fn reduced(&self) -> (u64, u64) {
        let g = self.numerator.gcd(&self.denominator);
        (self.numerator / g, self.denominator / g)
    }

    /// Smallest integer not below the value.
    pub fn ceil(&self) -> u64 {
        self.numerator.div_ceil(self.denominator)
    }

    /// Reduced value as text: `"2"` or `"7/3"`.
    pub fn reduced_string(&self) -> String {
        match self.reduced() {
            (num, 1) => num.to_string(),
            (num, den) => format!("{num}/{den}"),
        }
    }
}

impl PartialEq for NormValue {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for NormValue {}

impl PartialOrd for NormValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for NormValue {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = self.numerator as u128 * other.denominator as u128;
        let rhs = other.numerator as u128 * self.denominator as u128;
        lhs.cmp(&rhs)
    }
}

impl fmt::Display for NormValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}

impl Serialize for NormValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// ‖S‖_g: write each s = x·g with x ∈ [1, ord(g)] and divide Σx by ord(g).
pub fn g_norm(seq: &Sequence, g: u32) -> Result<NormValue> {
    let group = seq.group();
    let n = group.order();
    if g >= n {
        return Err(Error::ResidueOutOfRange {
            residue: g as u64,
            order: n,
        });
    }
    if g == 0 {
        return Err(Error::ZeroGenerator);
    }
    let d = g.gcd(&n);
    let m = n / d;
    let inv = inverse_mod((g / d) % m, m).expect("g/d is a unit mod n/d");
    let mut total = 0u64;
    for s in seq.support() {
        if s % d != 0 {
            return Err(Error::OutsideSubgroup {
                element: s,
                generator: g,
            });
        }
        let x = representative(s / d, inv, m);
        total += x * seq.multiplicity(s) as u64;
    }
    Ok(NormValue::new(total, m as u64))
}

/// `s' * w mod m`, with 0 mapped to m.
#[inline]
fn representative(s: u32, w: u32, m: u32) -> u64 {
    match (s as u64 * w as u64) % m as u64 {
        0 => m as u64,
        x => x,
    }
}

/// ind(S): the minimum g-norm over generators g of ⟨supp(S)⟩.
pub fn index(seq: &Sequence) -> Result<NormValue> {
    index_with_generator(seq).map(|(value, _)| value)
}

/// ind(S) together with the smallest generator residue achieving it.
pub fn index_with_generator(seq: &Sequence) -> Result<(NormValue, Element)> {
    let group = seq.group();
    let n = group.order();
    let d = seq.support().fold(n, |acc, s| acc.gcd(&s));
    if d == n {
        return Err(Error::TrivialSupport);
    }
    let m = n / d;
    let terms: Vec<(u32, u64)> = seq
        .support()
        .map(|s| (s / d, seq.multiplicity(s) as u64))
        .collect();

    // A generator d·c writes s = d·s' with coefficient s'·c⁻¹ mod m, so scanning
    // the multipliers w = c⁻¹ over the units of Z_m covers every generator.
    let mut best: Option<(u64, u32)> = None;
    for w in units_mod(m) {
        let total: u64 = terms
            .iter()
            .map(|&(s, mult)| representative(s, w, m) * mult)
            .sum();
        let generator = d * inverse_mod(w, m).expect("w is a unit");
        best = match best {
            Some((t, g)) if (t, g) <= (total, generator) => Some((t, g)),
            _ => Some((total, generator)),
        };
    }
    let (total, generator) = best.expect("Z_m has at least one unit");
    let element = group
        .element(generator as u64)
        .expect("generator is reduced mod n");
    Ok((NormValue::new(total, m as u64), element))
}

/// Index rounded up to an integer (indices of zero-sum sequences are integers).
pub(crate) fn index_ceil(seq: &Sequence) -> Result<u64> {
    index(seq).map(|v| v.ceil())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(text: &str, n: u64) -> Sequence {
        Sequence::parse(text, n).unwrap()
    }

    #[test]
    fn g_norm_examples() {
        let s = seq("1,3,3,4,7", 9);
        let v = g_norm(&s, 1).unwrap();
        assert_eq!((v.numerator(), v.denominator()), (18, 9));
        let v = g_norm(&s, 2).unwrap();
        assert_eq!((v.numerator(), v.denominator()), (27, 9));
        assert_eq!(v.reduced(), (3, 1));
        let v = g_norm(&seq("1,4", 5), 1).unwrap();
        assert_eq!(v, NormValue::new(1, 1));
    }

    #[test]
    fn g_norm_errors() {
        let s = seq("1,3", 9);
        assert_eq!(g_norm(&s, 0), Err(Error::ZeroGenerator));
        assert_eq!(
            g_norm(&s, 3),
            Err(Error::OutsideSubgroup {
                element: 1,
                generator: 3
            })
        );
        // 0 is written with the top representative
        let v = g_norm(&seq("0,3,6", 9), 3).unwrap();
        assert_eq!((v.numerator(), v.denominator()), (3 + 1 + 2, 3));
    }

    #[test]
    fn index_examples() {
        assert_eq!(index(&seq("1,3,3,4,7", 9)).unwrap(), NormValue::new(2, 1));
        assert_eq!(
            index(&seq("1^75,81^2,77", 157)).unwrap(),
            NormValue::new(2, 1)
        );
        assert_eq!(index(&seq("1,4", 5)).unwrap(), NormValue::new(1, 1));
        assert_eq!(index(&seq("0", 9)), Err(Error::TrivialSupport));
        assert_eq!(index(&seq("0^3", 9)), Err(Error::TrivialSupport));
    }

    #[test]
    fn index_in_proper_subgroup() {
        // ⟨3, 6⟩ = ⟨3⟩ of order 3 inside Z_9
        let (v, g) = index_with_generator(&seq("3,6", 9)).unwrap();
        assert_eq!((v.numerator(), v.denominator()), (3, 3));
        assert_eq!(g.residue(), 3);
        // 6,6,6 over Z_9: generator 6 gives 3/3, generator 3 gives 6/3
        let (v, g) = index_with_generator(&seq("6^3", 9)).unwrap();
        assert_eq!(v, NormValue::new(1, 1));
        assert_eq!(g.residue(), 6);
    }

    #[test]
    fn index_is_min_over_all_generators() {
        let s = seq("1,1,4,5,5", 8);
        let brute = (1..8)
            .filter(|&g| g % 2 == 1)
            .map(|g| g_norm(&s, g).unwrap())
            .min()
            .unwrap();
        let (v, g) = index_with_generator(&s).unwrap();
        assert_eq!(v, brute);
        assert_eq!(g_norm(&s, g.residue()).unwrap(), v);
        assert_eq!(v.reduced(), (2, 1));
    }

    #[test]
    fn norm_value_ordering_by_value() {
        assert_eq!(NormValue::new(18, 9), NormValue::new(2, 1));
        assert!(NormValue::new(7, 3) > NormValue::new(2, 1));
        assert_eq!(NormValue::new(7, 3).reduced_string(), "7/3");
        assert_eq!(NormValue::new(18, 9).to_string(), "18/9");
        assert_eq!(NormValue::new(7, 3).ceil(), 3);
    }
}
