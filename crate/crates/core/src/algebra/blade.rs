use std::cmp::Ordering;
use std::fmt;

use crate::error::{AlgebraError, Result};

/// Signature `(p, q)` of a real Clifford algebra.
///
/// Generator `i` (1-based) squares to `+1` when `i <= p` and to `-1`
/// otherwise, so every generator of `R_{0,n}` squares to `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Signature {
    p: usize,
    q: usize,
}

impl Signature {
    pub const MAX_DIM: usize = 12;

    pub fn new(p: usize, q: usize) -> Result<Self> {
        let n = p + q;
        if n == 0 || n > Self::MAX_DIM {
            return Err(AlgebraError::InvalidSignature { p, q });
        }
        Ok(Signature { p, q })
    }

    /// `R_{0,n}`, the negative definite algebra used throughout.
    pub fn euclidean(n: usize) -> Result<Self> {
        Self::new(0, n)
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn dim(&self) -> usize {
        self.p + self.q
    }

    /// Bitmask of the generators squaring to `-1`.
    pub(crate) fn negative_mask(&self) -> u16 {
        let all = Blade::full(self.dim()).0;
        let pos = Blade::full(self.p).0;
        all & !pos
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

/// A canonical basis monomial, stored as a bitmask over generators `1..=12`.
///
/// Bit `i-1` set means generator `e_i` is present. The empty set is the
/// scalar blade. Ordering is by grade, then lexicographically on the sorted
/// index list, which is the canonical print order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Blade(u16);

impl Blade {
    pub const SCALAR: Blade = Blade(0);

    /// Builds a blade from strictly increasing 1-based indices.
    pub fn from_indices(indices: &[usize]) -> Result<Self> {
        let mut bits = 0u16;
        let mut last = 0usize;
        for &i in indices {
            if i == 0 || i > Signature::MAX_DIM {
                return Err(AlgebraError::IndexOutOfRange {
                    index: i,
                    dim: Signature::MAX_DIM,
                });
            }
            if i <= last {
                return Err(AlgebraError::Degenerate(format!(
                    "blade indices must be strictly increasing: {indices:?}"
                )));
            }
            last = i;
            bits |= 1 << (i - 1);
        }
        Ok(Blade(bits))
    }

    /// Single generator `e_i`.
    pub fn generator(i: usize) -> Result<Self> {
        Self::from_indices(&[i])
    }

    /// The pseudoscalar blade `{1..n}`.
    pub fn full(n: usize) -> Blade {
        if n >= 16 {
            Blade(u16::MAX)
        } else {
            Blade(((1u32 << n) - 1) as u16)
        }
    }

    pub const fn from_bits(bits: u16) -> Blade {
        Blade(bits)
    }

    pub const fn bits(self) -> u16 {
        self.0
    }

    pub fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_scalar(self) -> bool {
        self.0 == 0
    }

    /// Highest generator index present, 0 for the scalar.
    pub fn max_index(self) -> usize {
        16 - self.0.leading_zeros() as usize
    }

    pub fn contains(self, i: usize) -> bool {
        (1..=16).contains(&i) && self.0 & (1 << (i - 1)) != 0
    }

    pub fn indices(self) -> Vec<usize> {
        (1..=16).filter(|&i| self.contains(i)).collect()
    }

    pub fn is_valid_for(self, n: usize) -> bool {
        self.max_index() <= n
    }

    pub fn complement(self, n: usize) -> Blade {
        Blade(Blade::full(n).0 & !self.0)
    }

    /// Iterates every blade of `{1..n}` in canonical order.
    pub fn all(n: usize) -> Vec<Blade> {
        let mut v: Vec<Blade> = (0..(1u32 << n)).map(|b| Blade(b as u16)).collect();
        v.sort();
        v
    }
}

impl Ord for Blade {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.grade().cmp(&other.grade()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        // first differing position in the sorted index lists
        let low = diff & diff.wrapping_neg();
        if self.0 & low != 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

impl PartialOrd for Blade {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_scalar() {
            return f.write_str("1");
        }
        f.write_str("e")?;
        for i in self.indices() {
            write!(f, "{i}")?;
        }
        Ok(())
    }
}

/// Parity of the permutation that sorts the concatenation `a ++ b`.
///
/// Counts, for every generator of `a`, the generators of `b` with a smaller
/// index: each such pair is one transposition.
pub fn reorder_parity(a: Blade, b: Blade) -> u32 {
    let mut swaps = 0;
    let mut rest = a.0 >> 1;
    while rest != 0 {
        swaps += (rest & b.0).count_ones();
        rest >>= 1;
    }
    swaps & 1
}

/// `+1` or `-1` from a parity bit.
pub(crate) fn parity_sign(odd: u32) -> i8 {
    if odd & 1 == 1 {
        -1
    } else {
        1
    }
}

/// Product of two canonical basis blades: `e_a * e_b = sign * e_{a xor b}`.
pub fn blade_product(a: Blade, b: Blade, sig: Signature) -> Result<(i8, Blade)> {
    check_blade(a, sig)?;
    check_blade(b, sig)?;
    Ok(blade_product_unchecked(a, b, sig))
}

#[inline]
pub(crate) fn blade_product_unchecked(a: Blade, b: Blade, sig: Signature) -> (i8, Blade) {
    let metric = (a.0 & b.0 & sig.negative_mask()).count_ones();
    let sign = parity_sign(reorder_parity(a, b) + metric);
    (sign, Blade(a.0 ^ b.0))
}

/// Sign of `(e_a)^2`: `(-1)^{k(k-1)/2}` times the metric signs of `a`.
pub fn blade_square_sign(a: Blade, sig: Signature) -> i8 {
    let k = a.grade() as u32;
    let metric = (a.0 & sig.negative_mask()).count_ones();
    parity_sign(k * k.saturating_sub(1) / 2 + metric)
}

pub(crate) fn check_blade(a: Blade, sig: Signature) -> Result<()> {
    if a.is_valid_for(sig.dim()) {
        Ok(())
    } else {
        Err(AlgebraError::IndexOutOfRange {
            index: a.max_index(),
            dim: sig.dim(),
        })
    }
}
