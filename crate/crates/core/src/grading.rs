//! Signatures and gradings.
//!
//! A [`GradedSignature`] fixes the four block sizes (m1, m2 | n1, n2).
//! Indices 1..=r are graded twice: by a single parity bit ([`Degree2`],
//! the gl(m|n) grading with m = m1+m2, n = n1+n2) and by a pair of bits
//! ([`Degree22`], the colour grading). The seven-region classification
//! of index pairs drives the Klein-operator dressing of generators.

use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use crate::error::{Error, Result};

/// A single grading bit. Addition is mod 2, multiplication is the
/// product of bits (used as the sign exponent in graded brackets).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Degree2(u8);

impl Degree2 {
    pub const EVEN: Degree2 = Degree2(0);
    pub const ODD: Degree2 = Degree2(1);

    /// Builds from any integer, reducing mod 2.
    pub fn from_parity(value: i64) -> Self {
        Degree2((value.rem_euclid(2)) as u8)
    }

    pub fn bit(self) -> u8 {
        self.0
    }

    pub fn is_odd(self) -> bool {
        self.0 == 1
    }

    /// (-1)^degree as an integer sign.
    pub fn sign(self) -> i64 {
        if self.is_odd() {
            -1
        } else {
            1
        }
    }
}

impl Add for Degree2 {
    type Output = Degree2;
    fn add(self, rhs: Degree2) -> Degree2 {
        Degree2(self.0 ^ rhs.0)
    }
}

impl Mul for Degree2 {
    type Output = Degree2;
    fn mul(self, rhs: Degree2) -> Degree2 {
        Degree2(self.0 & rhs.0)
    }
}

impl fmt::Display for Degree2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An ordered pair of grading bits. Addition is componentwise mod 2.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Degree22(pub Degree2, pub Degree2);

impl Degree22 {
    pub fn new(a1: u8, a2: u8) -> Self {
        Degree22(Degree2(a1 & 1), Degree2(a2 & 1))
    }

    pub fn bits(self) -> (u8, u8) {
        (self.0.bit(), self.1.bit())
    }

    /// Dot product (a1*b1 + a2*b2) mod 2; this is the exponent that
    /// decides commutator versus anticommutator in the colour bracket.
    pub fn dot(self, other: Degree22) -> Degree2 {
        self.0 * other.0 + self.1 * other.1
    }
}

impl Add for Degree22 {
    type Output = Degree22;
    fn add(self, rhs: Degree22) -> Degree22 {
        Degree22(self.0 + rhs.0, self.1 + rhs.1)
    }
}

impl fmt::Display for Degree22 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.0, self.1)
    }
}

/// Dot product of two bit pairs, as a free function mirroring the
/// bracket-sign rule.
pub fn dot22(x: Degree22, y: Degree22) -> Degree2 {
    x.dot(y)
}

/// One of the seven index-pair regions that determine which Klein
/// factors dress a generator, and on which side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RegionTag {
    /// Same band: the generator is untouched.
    A,
    /// Right factor B_{m1}.
    B,
    /// Right factor B_m.
    C,
    /// Right factor B_{m1} B_m.
    D,
    /// Left factor B_{m1}^{-1}.
    E,
    /// Left factor B_m^{-1}.
    F,
    /// Left factor B_{m1}^{-1} B_m^{-1}.
    G,
}

impl RegionTag {
    pub fn label(self) -> char {
        match self {
            RegionTag::A => 'a',
            RegionTag::B => 'b',
            RegionTag::C => 'c',
            RegionTag::D => 'd',
            RegionTag::E => 'e',
            RegionTag::F => 'f',
            RegionTag::G => 'g',
        }
    }
}

impl fmt::Display for RegionTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// Block sizes (m1, m2 | n1, n2), all non-negative, not all zero.
/// Derived totals: m = m1+m2, n = n1+n2, r = m+n.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GradedSignature {
    m1: usize,
    m2: usize,
    n1: usize,
    n2: usize,
}

impl GradedSignature {
    pub fn new(m1: usize, m2: usize, n1: usize, n2: usize) -> Result<Self> {
        if m1 + m2 + n1 + n2 == 0 {
            return Err(Error::InvalidSignature(
                "all four block sizes are zero".into(),
            ));
        }
        Ok(GradedSignature { m1, m2, n1, n2 })
    }

    pub fn m1(&self) -> usize {
        self.m1
    }

    pub fn m2(&self) -> usize {
        self.m2
    }

    pub fn n1(&self) -> usize {
        self.n1
    }

    pub fn n2(&self) -> usize {
        self.n2
    }

    pub fn m(&self) -> usize {
        self.m1 + self.m2
    }

    pub fn n(&self) -> usize {
        self.n1 + self.n2
    }

    pub fn rank(&self) -> usize {
        self.m() + self.n()
    }

    /// True when the colour grading degenerates to the gl(m|n) grading.
    pub fn is_super_degenerate(&self) -> bool {
        self.m2 == 0 && self.n2 == 0
    }

    pub fn check_index(&self, what: &'static str, i: usize) -> Result<()> {
        if i == 0 || i > self.rank() {
            return Err(Error::IndexOutOfRange {
                what,
                index: i,
                bound: self.rank(),
            });
        }
        Ok(())
    }

    /// gl(m|n) parity of index i: 0 for i <= m, 1 for i > m.
    pub fn z2_degree(&self, i: usize) -> Result<Degree2> {
        self.check_index("generator", i)?;
        Ok(if i <= self.m() {
            Degree2::EVEN
        } else {
            Degree2::ODD
        })
    }

    /// Parity of the basis element E_ij: d_i + d_j mod 2.
    pub fn z2_pair_degree(&self, i: usize, j: usize) -> Result<Degree2> {
        Ok(self.z2_degree(i)? + self.z2_degree(j)?)
    }

    /// Colour degree of index i: (0,0), (1,1), (1,0), (0,1) on the four
    /// consecutive blocks of widths m1, m2, n1, n2.
    pub fn z22_degree(&self, i: usize) -> Result<Degree22> {
        self.check_index("generator", i)?;
        let m = self.m();
        Ok(if i <= self.m1 {
            Degree22::new(0, 0)
        } else if i <= m {
            Degree22::new(1, 1)
        } else if i <= m + self.n1 {
            Degree22::new(1, 0)
        } else {
            Degree22::new(0, 1)
        })
    }

    /// Colour degree of the basis element: componentwise sum mod 2 of
    /// the two index degrees.
    pub fn pair_degree22(&self, i: usize, j: usize) -> Result<Degree22> {
        Ok(self.z22_degree(i)? + self.z22_degree(j)?)
    }

    fn band(&self, i: usize) -> u8 {
        if i <= self.m() {
            0
        } else if i <= self.m() + self.n1 {
            1
        } else {
            2
        }
    }

    /// Assigns (i,j) to exactly one of the seven regions. The bands are
    /// [1,m], (m, m+n1], (m+n1, r]; same band is region (a), and the six
    /// cross-band cases each get their own label.
    pub fn classify_region(&self, i: usize, j: usize) -> Result<RegionTag> {
        self.check_index("row", i)?;
        self.check_index("column", j)?;
        Ok(match (self.band(i), self.band(j)) {
            (x, y) if x == y => RegionTag::A,
            (0, 1) => RegionTag::B,
            (1, 2) => RegionTag::C,
            (0, 2) => RegionTag::D,
            (1, 0) => RegionTag::E,
            (2, 1) => RegionTag::F,
            (2, 0) => RegionTag::G,
            _ => unreachable!("bands are in 0..3"),
        })
    }
}

impl fmt::Display for GradedSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}|{},{}", self.m1, self.m2, self.n1, self.n2)
    }
}

impl FromStr for GradedSignature {
    type Err = Error;

    /// Parses the text form "m1,m2|n1,n2", e.g. "1,1|1,1".
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidSignature(format!("expected \"m1,m2|n1,n2\", got {s:?}"));
        let (even, odd) = s.split_once('|').ok_or_else(bad)?;
        let (m1, m2) = even.split_once(',').ok_or_else(bad)?;
        let (n1, n2) = odd.split_once(',').ok_or_else(bad)?;
        let parse = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
        GradedSignature::new(parse(m1)?, parse(m2)?, parse(n1)?, parse(n2)?)
    }
}

/// All signatures (m1,m2|n1,n2) with 1 <= m+n <= max_rank, in
/// lexicographic order. Zero parts are included.
pub fn all_signatures(max_rank: usize) -> Vec<GradedSignature> {
    let mut sigs = Vec::new();
    for m1 in 0..=max_rank {
        for m2 in 0..=max_rank.saturating_sub(m1) {
            for n1 in 0..=max_rank.saturating_sub(m1 + m2) {
                for n2 in 0..=max_rank.saturating_sub(m1 + m2 + n1) {
                    if m1 + m2 + n1 + n2 >= 1 {
                        sigs.push(GradedSignature { m1, m2, n1, n2 });
                    }
                }
            }
        }
    }
    sigs
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(m1: usize, m2: usize, n1: usize, n2: usize) -> GradedSignature {
        GradedSignature::new(m1, m2, n1, n2).unwrap()
    }

    #[test]
    fn z2_degree_blocks() {
        let s = sig(1, 1, 1, 1);
        assert_eq!(s.z2_degree(2).unwrap(), Degree2::EVEN);
        assert_eq!(s.z2_degree(3).unwrap(), Degree2::ODD);
        assert_eq!(sig(2, 0, 0, 0).z2_degree(1).unwrap(), Degree2::EVEN);
    }

    #[test]
    fn z22_degree_blocks() {
        let s = sig(1, 1, 1, 1);
        assert_eq!(s.z22_degree(1).unwrap(), Degree22::new(0, 0));
        assert_eq!(s.z22_degree(2).unwrap(), Degree22::new(1, 1));
        assert_eq!(s.z22_degree(3).unwrap(), Degree22::new(1, 0));
        assert_eq!(s.z22_degree(4).unwrap(), Degree22::new(0, 1));
        // m1 = 0 makes the first block empty.
        assert_eq!(sig(0, 2, 1, 0).z22_degree(1).unwrap(), Degree22::new(1, 1));
    }

    #[test]
    fn degree_out_of_range() {
        let s = sig(1, 1, 1, 1);
        assert!(matches!(
            s.z2_degree(0),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            s.z22_degree(5),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn dot_products() {
        assert_eq!(
            dot22(Degree22::new(1, 0), Degree22::new(0, 1)),
            Degree2::EVEN
        );
        assert_eq!(
            dot22(Degree22::new(1, 0), Degree22::new(1, 0)),
            Degree2::ODD
        );
        assert_eq!(
            dot22(Degree22::new(1, 1), Degree22::new(1, 1)),
            Degree2::EVEN
        );
    }

    #[test]
    fn pair_degree_example() {
        let s = sig(1, 1, 1, 1);
        assert_eq!(s.pair_degree22(1, 3).unwrap(), Degree22::new(1, 0));
        assert_eq!(s.pair_degree22(2, 1).unwrap(), Degree22::new(1, 1));
    }

    #[test]
    fn region_examples() {
        let s = sig(1, 1, 1, 1);
        assert_eq!(s.classify_region(1, 2).unwrap(), RegionTag::A);
        assert_eq!(s.classify_region(2, 3).unwrap(), RegionTag::B);
        assert_eq!(s.classify_region(4, 1).unwrap(), RegionTag::G);
        assert_eq!(s.classify_region(3, 4).unwrap(), RegionTag::C);
        assert_eq!(s.classify_region(1, 4).unwrap(), RegionTag::D);
        assert_eq!(s.classify_region(3, 1).unwrap(), RegionTag::E);
        assert_eq!(s.classify_region(4, 3).unwrap(), RegionTag::F);
    }

    #[test]
    fn regions_partition_all_pairs() {
        // Each (i,j) matches exactly one region predicate, phrased
        // directly from the index ranges rather than via band().
        for s in all_signatures(8) {
            let (m, n1, r) = (s.m(), s.n1(), s.rank());
            let x = |i: usize| i >= 1 && i <= m;
            let y = |i: usize| i > m && i <= m + n1;
            let z = |i: usize| i > m + n1 && i <= r;
            for i in 1..=r {
                for j in 1..=r {
                    let preds = [
                        (x(i) && x(j)) || (y(i) && y(j)) || (z(i) && z(j)),
                        x(i) && y(j),
                        y(i) && z(j),
                        x(i) && z(j),
                        y(i) && x(j),
                        z(i) && y(j),
                        z(i) && x(j),
                    ];
                    assert_eq!(preds.iter().filter(|p| **p).count(), 1, "{s} ({i},{j})");
                    let tag = s.classify_region(i, j).unwrap();
                    let expected = match preds.iter().position(|p| *p).unwrap() {
                        0 => RegionTag::A,
                        1 => RegionTag::B,
                        2 => RegionTag::C,
                        3 => RegionTag::D,
                        4 => RegionTag::E,
                        5 => RegionTag::F,
                        _ => RegionTag::G,
                    };
                    assert_eq!(tag, expected, "{s} ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn self_dot_equals_z2_pair_degree() {
        // The colour degree of E_ij dotted with itself reduces to the
        // gl(m|n) parity of E_ij, for every splitting.
        for s in all_signatures(8) {
            for i in 1..=s.rank() {
                for j in 1..=s.rank() {
                    let d22 = s.pair_degree22(i, j).unwrap();
                    assert_eq!(d22.dot(d22), s.z2_pair_degree(i, j).unwrap(), "{s} ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn block_boundaries_exact() {
        for s in all_signatures(8) {
            let (m1, m, n1, r) = (s.m1(), s.m(), s.n1(), s.rank());
            for i in 1..=r {
                let expected = if i <= m1 {
                    Degree22::new(0, 0)
                } else if i <= m {
                    Degree22::new(1, 1)
                } else if i <= m + n1 {
                    Degree22::new(1, 0)
                } else {
                    Degree22::new(0, 1)
                };
                assert_eq!(s.z22_degree(i).unwrap(), expected, "{s} i={i}");
            }
        }
    }

    #[test]
    fn signature_text_round_trip() {
        let s: GradedSignature = "1,1|1,1".parse().unwrap();
        assert_eq!(s, sig(1, 1, 1, 1));
        assert_eq!(s.to_string(), "1,1|1,1");
        let z: GradedSignature = "0,2|2,0".parse().unwrap();
        assert_eq!((z.m1(), z.m2(), z.n1(), z.n2()), (0, 2, 2, 0));
        assert!("".parse::<GradedSignature>().is_err());
        assert!("1,1".parse::<GradedSignature>().is_err());
        assert!("a,b|c,d".parse::<GradedSignature>().is_err());
        assert!("0,0|0,0".parse::<GradedSignature>().is_err());
    }

    #[test]
    fn signature_enumeration_counts() {
        // Compositions of s into 4 parts summed over 1 <= s <= 5.
        assert_eq!(all_signatures(5).len(), 125);
        assert_eq!(all_signatures(1).len(), 4);
    }
}
