//! Primitive idempotents, minimal left ideals and the Wedderburn type of `R_{p,q}`.
//!
//! Idempotents come from commuting canonical blades squaring to `+1`:
//! `f = prod (1 + s_i e_{t_i}) / 2`. There are `k = q - r_{q-p}` of them for
//! a primitive idempotent, with `r` the Radon-Hurwitz numbers. Primitivity
//! is certified by comparing the exact rank of `R_{p,q} f` with the minimal
//! ideal dimension of the algebra's matrix type.

use std::fmt;

use num_traits::One;

use crate::algebra::{blade_product, blade_square_sign, rational, Blade, Multivector, Signature};
use crate::error::{AlgebraError, Result};
use crate::linalg::EchelonBasis;

/// Radon-Hurwitz number `r_i` for `i >= -12`.
pub fn radon_hurwitz(i: i64) -> Result<i64> {
    const BASE: [i64; 8] = [0, 1, 2, 2, 3, 3, 3, 3];
    match i {
        i if i < -12 => Err(AlgebraError::RadonHurwitzRange(i)),
        i if i >= 0 => Ok(BASE[(i % 8) as usize] + 4 * (i / 8)),
        -1 => Ok(-1),
        i => {
            let m = -i;
            Ok(1 - m + radon_hurwitz(m - 2)?)
        }
    }
}

/// Number of generators of a primitive idempotent: `q - r_{q-p}`.
pub fn primitive_generator_count(sig: Signature) -> usize {
    let (p, q) = (sig.p() as i64, sig.q() as i64);
    let r = radon_hurwitz(q - p).expect("q - p >= -12 for n <= 12");
    usize::try_from(q - r).expect("generator count is nonnegative for valid signatures")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// A signed canonical blade `±e_t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Generator {
    pub sign: Sign,
    pub blade: Blade,
}

impl Generator {
    pub fn new(sign: Sign, blade: Blade) -> Self {
        Generator { sign, blade }
    }

    pub fn plus(indices: &[usize]) -> Result<Self> {
        Ok(Generator::new(Sign::Plus, Blade::from_indices(indices)?))
    }

    pub fn minus(indices: &[usize]) -> Result<Self> {
        Ok(Generator::new(Sign::Minus, Blade::from_indices(indices)?))
    }

    fn as_multivector(&self, sig: Signature) -> Result<Multivector> {
        Multivector::from_blade(sig, self.blade, rational(self.sign.as_i64(), 1))
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = if self.sign == Sign::Plus { '+' } else { '-' };
        write!(f, "{s}{}", self.blade)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdempotentSpec {
    pub sig: Signature,
    pub generators: Vec<Generator>,
}

impl IdempotentSpec {
    pub fn new(sig: Signature, generators: Vec<Generator>) -> Self {
        IdempotentSpec { sig, generators }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    OutOfRange { generator: usize },
    SquaresToMinusOne { generator: usize },
    Anticommute { first: usize, second: usize },
    /// The blade is a product of earlier blades, so the subset products are not all distinct.
    Dependent { generator: usize },
    WrongCount { expected: usize, found: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::OutOfRange { generator } => {
                write!(f, "generator {generator}: index out of range")
            }
            Violation::SquaresToMinusOne { generator } => {
                write!(f, "generator {generator}: squares to -1")
            }
            Violation::Anticommute { first, second } => {
                write!(f, "generators {first} and {second} anticommute")
            }
            Violation::Dependent { generator } => write!(
                f,
                "generator {generator}: blade is a product of earlier generators (group order below 2^k)"
            ),
            Violation::WrongCount { expected, found } => {
                write!(f, "expected {expected} generators (q - r_(q-p)), found {found}")
            }
        }
    }
}

/// Outcome of [`validate_generators`]. Generator positions are 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorReport {
    pub expected_count: usize,
    pub found: usize,
    pub violations: Vec<Violation>,
}

impl GeneratorReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    /// Valid apart from the generator count: the product is still an
    /// idempotent, just not a primitive one.
    pub fn is_structurally_valid(&self) -> bool {
        self.violations
            .iter()
            .all(|v| matches!(v, Violation::WrongCount { .. }))
    }
}

impl fmt::Display for GeneratorReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "valid, k = {}", self.found);
        }
        let parts: Vec<String> = self.violations.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join("; "))
    }
}

/// Checks commutation, squares, independence of the index sets over GF(2),
/// and the count `k = q - r_{q-p}`.
pub fn validate_generators(spec: &IdempotentSpec) -> GeneratorReport {
    let sig = spec.sig;
    let gens = &spec.generators;
    let mut violations = Vec::new();

    let in_range: Vec<bool> = gens.iter().map(|g| g.blade.is_valid_for(sig.dim())).collect();
    for (i, ok) in in_range.iter().enumerate() {
        if !ok {
            violations.push(Violation::OutOfRange { generator: i + 1 });
        }
    }
    for (i, g) in gens.iter().enumerate() {
        if in_range[i] && blade_square_sign(g.blade, sig) < 0 {
            violations.push(Violation::SquaresToMinusOne { generator: i + 1 });
        }
    }
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            if !(in_range[i] && in_range[j]) {
                continue;
            }
            let (s1, _) = blade_product(gens[i].blade, gens[j].blade, sig).expect("checked range");
            let (s2, _) = blade_product(gens[j].blade, gens[i].blade, sig).expect("checked range");
            if s1 != s2 {
                violations.push(Violation::Anticommute { first: i + 1, second: j + 1 });
            }
        }
    }
    // GF(2) elimination on the bitmasks
    let mut pivots: Vec<u16> = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        let mut v = g.blade.bits();
        for &p in &pivots {
            let top = 1u16 << (15 - p.leading_zeros());
            if v & top != 0 {
                v ^= p;
            }
        }
        if v == 0 {
            violations.push(Violation::Dependent { generator: i + 1 });
        } else {
            pivots.push(v);
            pivots.sort_by(|a, b| b.cmp(a));
        }
    }
    let expected = primitive_generator_count(sig);
    if gens.len() != expected {
        violations.push(Violation::WrongCount { expected, found: gens.len() });
    }
    GeneratorReport { expected_count: expected, found: gens.len(), violations }
}

/// Expands `prod (1 + s_i e_{t_i}) / 2`.
///
/// The generator count is not enforced here: fewer generators give a
/// non-primitive idempotent, which is still useful for checks.
pub fn build_idempotent(spec: &IdempotentSpec) -> Result<Multivector> {
    let report = validate_generators(spec);
    if !report.is_structurally_valid() {
        return Err(AlgebraError::InvalidGenerators(report));
    }
    let sig = spec.sig;
    let half = rational(1, 2);
    let mut f = Multivector::one(sig);
    for g in &spec.generators {
        let factor = Multivector::scalar(sig, half.clone()).add(&g.as_multivector(sig)?.scale(&half))?;
        f = f.geometric_product(&factor)?;
    }
    Ok(f)
}

pub fn is_idempotent(x: &Multivector) -> bool {
    x.geometric_product(x).map(|sq| &sq == x).unwrap_or(false)
}

/// `f g = g f = 0`.
pub fn is_orthogonal(f: &Multivector, g: &Multivector) -> Result<bool> {
    Ok(f.geometric_product(g)?.is_zero() && g.geometric_product(f)?.is_zero())
}

/// `e f = f = f e`, i.e. `f <= e` in the idempotent order.
pub fn is_sub_idempotent(f: &Multivector, e: &Multivector) -> Result<bool> {
    Ok(&e.geometric_product(f)? == f && &f.geometric_product(e)? == f)
}

/// An exact basis of the left ideal `R_{p,q} f`.
#[derive(Debug, Clone)]
pub struct IdealBasis {
    pub idempotent: Multivector,
    /// Blades `b` whose images `b f` were kept.
    pub generators: Vec<Blade>,
    /// The independent images `b f`.
    pub basis: Vec<Multivector>,
    pub dimension: usize,
    echelon: EchelonBasis,
}

impl IdealBasis {
    /// Whether `x` lies in the ideal.
    pub fn contains(&self, x: &Multivector) -> bool {
        x.signature() == self.idempotent.signature() && self.echelon.contains(x)
    }
}

fn span_images(f: &Multivector, blades: impl IntoIterator<Item = Blade>) -> Result<IdealBasis> {
    let sig = f.signature();
    let mut echelon = EchelonBasis::new();
    let mut generators = Vec::new();
    let mut basis = Vec::new();
    for b in blades {
        let image = Multivector::from_blade(sig, b, One::one())?.geometric_product(f)?;
        if echelon.insert(&image) {
            generators.push(b);
            basis.push(image);
        }
    }
    Ok(IdealBasis {
        idempotent: f.clone(),
        dimension: basis.len(),
        generators,
        basis,
        echelon,
    })
}

/// Row reduces `{ b f : b canonical blade }`.
pub fn left_ideal_basis(f: &Multivector) -> Result<IdealBasis> {
    if f.is_zero() {
        return Err(AlgebraError::ZeroInput);
    }
    span_images(f, Blade::all(f.signature().dim()))
}

/// Keeps the candidates whose images `b f` are independent; errors unless
/// they span the whole ideal.
pub fn coset_basis(f: &Multivector, candidates: &[Blade]) -> Result<Vec<Blade>> {
    let full = left_ideal_basis(f)?;
    let picked = span_images(f, candidates.iter().copied())?;
    if picked.dimension < full.dimension {
        return Err(AlgebraError::CandidatesInsufficient {
            rank: picked.dimension,
            dimension: full.dimension,
        });
    }
    Ok(picked.generators)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DivisionRing {
    Real,
    Complex,
    Quaternion,
}

impl DivisionRing {
    pub fn real_dim(self) -> usize {
        match self {
            DivisionRing::Real => 1,
            DivisionRing::Complex => 2,
            DivisionRing::Quaternion => 4,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            DivisionRing::Real => "R",
            DivisionRing::Complex => "C",
            DivisionRing::Quaternion => "H",
        }
    }
}

/// Wedderburn type `M_m(D)` or `M_m(D) ⊕ M_m(D)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AlgebraClass {
    pub ring: DivisionRing,
    pub matrix_size: usize,
    pub summands: usize,
    pub minimal_ideal_dim: usize,
}

impl fmt::Display for AlgebraClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let block = format!("M_{}({})", self.matrix_size, self.ring.symbol());
        if self.summands == 2 {
            write!(f, "{block} ⊕ {block}")
        } else {
            f.write_str(&block)
        }
    }
}

pub fn classify(sig: Signature) -> AlgebraClass {
    let n = sig.dim();
    let (ring, exponent, summands) = match (sig.q() as i64 - sig.p() as i64).rem_euclid(8) {
        0 | 6 => (DivisionRing::Real, n / 2, 1),
        1 | 5 => (DivisionRing::Complex, (n - 1) / 2, 1),
        2 | 4 => (DivisionRing::Quaternion, (n - 2) / 2, 1),
        3 => (DivisionRing::Quaternion, (n - 3) / 2, 2),
        _ => (DivisionRing::Real, (n - 1) / 2, 2),
    };
    let matrix_size = 1usize << exponent;
    AlgebraClass {
        ring,
        matrix_size,
        summands,
        minimal_ideal_dim: matrix_size * ring.real_dim(),
    }
}

/// Idempotent whose left ideal has the minimal dimension for its algebra.
pub fn is_primitive(f: &Multivector) -> bool {
    if f.is_zero() || !is_idempotent(f) {
        return false;
    }
    let minimal = classify(f.signature()).minimal_ideal_dim;
    left_ideal_basis(f).map(|b| b.dimension == minimal).unwrap_or(false)
}

/// All `2^k` sign variants `prod (1 ± e_{t_i}) / 2`, starting from the
/// given signs; bit `j` of the variant index flips generator `j`.
pub fn decompose_algebra(spec: &IdempotentSpec) -> Result<Vec<Multivector>> {
    let k = spec.generators.len();
    let mut pieces = Vec::with_capacity(1 << k);
    for mask in 0usize..(1 << k) {
        let gens = spec
            .generators
            .iter()
            .enumerate()
            .map(|(j, g)| {
                if mask >> j & 1 == 1 {
                    Generator::new(g.sign.flip(), g.blade)
                } else {
                    *g
                }
            })
            .collect();
        pieces.push(build_idempotent(&IdempotentSpec::new(spec.sig, gens))?);
    }
    Ok(pieces)
}

/// Exact checks on a family of idempotents meant to decompose the algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionCheck {
    pub sums_to_one: bool,
    pub pairwise_orthogonal: bool,
    pub all_idempotent: bool,
    pub dimensions: Vec<usize>,
    pub total_dimension: usize,
    pub algebra_dimension: usize,
}

impl DecompositionCheck {
    pub fn holds(&self) -> bool {
        self.sums_to_one
            && self.pairwise_orthogonal
            && self.all_idempotent
            && self.total_dimension == self.algebra_dimension
    }
}

pub fn check_decomposition(pieces: &[Multivector]) -> Result<DecompositionCheck> {
    let Some(first) = pieces.first() else {
        return Err(AlgebraError::ZeroInput);
    };
    let sig = first.signature();
    let mut sum = Multivector::zero(sig);
    for p in pieces {
        sum = sum.add(p)?;
    }
    let mut orthogonal = true;
    for i in 0..pieces.len() {
        for j in i + 1..pieces.len() {
            orthogonal &= is_orthogonal(&pieces[i], &pieces[j])?;
        }
    }
    let dimensions = pieces
        .iter()
        .map(|p| if p.is_zero() { Ok(0) } else { left_ideal_basis(p).map(|b| b.dimension) })
        .collect::<Result<Vec<_>>>()?;
    Ok(DecompositionCheck {
        sums_to_one: sum == Multivector::one(sig),
        pairwise_orthogonal: orthogonal,
        all_idempotent: pieces.iter().all(is_idempotent),
        total_dimension: dimensions.iter().sum(),
        dimensions,
        algebra_dimension: 1 << sig.dim(),
    })
}

/// The four-piece reference specs used throughout: dimensions 6, 7 and 8.
pub mod reference {
    use super::*;

    /// `(1 + e135)(1 - e146)(1 - e236) / 8` in `R_{0,6}`.
    pub fn su3_spec() -> IdempotentSpec {
        IdempotentSpec::new(
            Signature::euclidean(6).unwrap(),
            vec![
                Generator::plus(&[1, 3, 5]).unwrap(),
                Generator::minus(&[1, 4, 6]).unwrap(),
                Generator::minus(&[2, 3, 6]).unwrap(),
            ],
        )
    }

    /// `(1 + e123)(1 + e145)(1 - e257)(1 + e167) / 16` in `R_{0,7}`.
    pub fn g2_spec() -> IdempotentSpec {
        IdempotentSpec::new(
            Signature::euclidean(7).unwrap(),
            vec![
                Generator::plus(&[1, 2, 3]).unwrap(),
                Generator::plus(&[1, 4, 5]).unwrap(),
                Generator::minus(&[2, 5, 7]).unwrap(),
                Generator::plus(&[1, 6, 7]).unwrap(),
            ],
        )
    }

    /// `(1 - e1234)(1 - e1256)(1 - e1278)(1 - e1357) / 16` in `R_{0,8}`.
    pub fn spin7_spec() -> IdempotentSpec {
        IdempotentSpec::new(
            Signature::euclidean(8).unwrap(),
            vec![
                Generator::minus(&[1, 2, 3, 4]).unwrap(),
                Generator::minus(&[1, 2, 5, 6]).unwrap(),
                Generator::minus(&[1, 2, 7, 8]).unwrap(),
                Generator::minus(&[1, 3, 5, 7]).unwrap(),
            ],
        )
    }
}

#[cfg(test)]
mod tests {
    use super::reference::*;
    use super::*;
    use crate::algebra::integer;

    fn sig(n: usize) -> Signature {
        Signature::euclidean(n).unwrap()
    }

    fn b(ix: &[usize]) -> Blade {
        Blade::from_indices(ix).unwrap()
    }

    #[test]
    fn radon_hurwitz_values() {
        let r: Vec<i64> = (0..=8).map(|i| radon_hurwitz(i).unwrap()).collect();
        assert_eq!(r, [0, 1, 2, 2, 3, 3, 3, 3, 4]);
        assert_eq!(radon_hurwitz(7).unwrap(), 3);
        assert_eq!(radon_hurwitz(16).unwrap(), 8);
        assert_eq!(radon_hurwitz(-1).unwrap(), -1);
        assert_eq!(radon_hurwitz(-2).unwrap(), -1);
        assert_eq!(radon_hurwitz(-3).unwrap(), -1);
        assert!(radon_hurwitz(-12).is_ok());
        assert_eq!(radon_hurwitz(-13), Err(AlgebraError::RadonHurwitzRange(-13)));
    }

    #[test]
    fn generator_counts() {
        assert_eq!(primitive_generator_count(sig(6)), 3);
        assert_eq!(primitive_generator_count(sig(7)), 4);
        assert_eq!(primitive_generator_count(sig(8)), 4);
    }

    #[test]
    fn generator_count_matches_classification_everywhere() {
        for n in 1..=12 {
            for p in 0..=n {
                let s = Signature::new(p, n - p).unwrap();
                let k = primitive_generator_count(s);
                assert_eq!(1usize << (n - k), classify(s).minimal_ideal_dim, "{s}");
            }
        }
    }

    #[test]
    fn reference_generators_validate() {
        for spec in [su3_spec(), g2_spec(), spin7_spec()] {
            let report = validate_generators(&spec);
            assert!(report.is_valid(), "{report}");
        }
    }

    #[test]
    fn bivector_generator_rejected() {
        let spec = IdempotentSpec::new(sig(6), vec![Generator::plus(&[1, 2]).unwrap()]);
        let report = validate_generators(&spec);
        assert!(report.violations.contains(&Violation::SquaresToMinusOne { generator: 1 }));
        assert!(matches!(build_idempotent(&spec), Err(AlgebraError::InvalidGenerators(_))));
    }

    #[test]
    fn anticommuting_and_dependent_generators() {
        let spec = IdempotentSpec::new(
            sig(6),
            vec![Generator::plus(&[1, 2, 3]).unwrap(), Generator::plus(&[1, 4, 5]).unwrap()],
        );
        assert!(validate_generators(&spec).is_structurally_valid());
        let spec = IdempotentSpec::new(
            sig(6),
            vec![Generator::plus(&[1, 2, 3]).unwrap(), Generator::plus(&[1, 4, 5, 6]).unwrap()],
        );
        assert!(validate_generators(&spec)
            .violations
            .contains(&Violation::Anticommute { first: 1, second: 2 }));
        // e135 e146 = -e3456 up to sign; the product blade is dependent
        let spec = IdempotentSpec::new(
            sig(6),
            vec![
                Generator::plus(&[1, 3, 5]).unwrap(),
                Generator::minus(&[1, 4, 6]).unwrap(),
                Generator::plus(&[3, 4, 5, 6]).unwrap(),
            ],
        );
        assert!(validate_generators(&spec)
            .violations
            .contains(&Violation::Dependent { generator: 3 }));
    }

    #[test]
    fn su3_expansion() {
        let f = build_idempotent(&su3_spec()).unwrap();
        let eighth = rational(1, 8);
        let expected = Multivector::from_terms(
            sig(6),
            [
                (Blade::SCALAR, eighth.clone()),
                (b(&[1, 3, 5]), eighth.clone()),
                (b(&[1, 4, 6]), -eighth.clone()),
                (b(&[2, 3, 6]), -eighth.clone()),
                (b(&[2, 4, 5]), -eighth.clone()),
                (b(&[3, 4, 5, 6]), -eighth.clone()),
                (b(&[1, 2, 3, 4]), -eighth.clone()),
                (b(&[1, 2, 5, 6]), -eighth),
            ],
        )
        .unwrap();
        assert_eq!(f, expected);
        assert!(is_idempotent(&f));
    }

    #[test]
    fn empty_spec_gives_one() {
        let spec = IdempotentSpec::new(sig(6), vec![]);
        assert_eq!(build_idempotent(&spec).unwrap(), Multivector::one(sig(6)));
    }

    #[test]
    fn g2_expansion_has_sixteen_terms() {
        let f = build_idempotent(&g2_spec()).unwrap();
        assert_eq!(f.len(), 16);
        assert_eq!(f.scalar_part(), rational(1, 16));
        assert!(is_idempotent(&f));
    }

    #[test]
    fn trivial_idempotents() {
        assert!(is_idempotent(&Multivector::one(sig(6))));
        assert!(is_idempotent(&Multivector::zero(sig(6))));
        let f = build_idempotent(&su3_spec()).unwrap();
        assert!(is_sub_idempotent(&f, &Multivector::one(sig(6))).unwrap());
        assert!(!is_idempotent(&f.scale(&integer(2))));
    }

    #[test]
    fn sign_variants_are_orthogonal() {
        let pieces = decompose_algebra(&su3_spec()).unwrap();
        assert_eq!(pieces.len(), 8);
        for i in 0..8 {
            for j in 0..8 {
                if i != j {
                    assert!(is_orthogonal(&pieces[i], &pieces[j]).unwrap());
                }
            }
        }
    }

    #[test]
    fn ideal_dimensions() {
        let f = build_idempotent(&su3_spec()).unwrap();
        assert_eq!(left_ideal_basis(&f).unwrap().dimension, 8);
        assert_eq!(left_ideal_basis(&Multivector::one(sig(6))).unwrap().dimension, 64);
        assert_eq!(left_ideal_basis(&Multivector::zero(sig(6))).unwrap_err(), AlgebraError::ZeroInput);
    }

    #[test]
    fn coset_bases() {
        let f = build_idempotent(&su3_spec()).unwrap();
        let cands: Vec<Blade> = [&[][..], &[2], &[3], &[5], &[2, 3], &[2, 5], &[3, 5], &[2, 3, 5]]
            .iter()
            .map(|ix| b(ix))
            .collect();
        assert_eq!(coset_basis(&f, &cands).unwrap(), cands);
        assert!(matches!(
            coset_basis(&f, &cands[..4]),
            Err(AlgebraError::CandidatesInsufficient { rank: 4, dimension: 8 })
        ));
        let one = Multivector::one(sig(4));
        assert_eq!(coset_basis(&one, &Blade::all(4)).unwrap().len(), 16);
    }

    #[test]
    fn classification_cases() {
        let c6 = classify(sig(6));
        assert_eq!(c6.to_string(), "M_8(R)");
        assert_eq!(c6.minimal_ideal_dim, 8);
        let c7 = classify(sig(7));
        assert_eq!(c7.to_string(), "M_8(R) ⊕ M_8(R)");
        assert_eq!(c7.minimal_ideal_dim, 8);
        let c8 = classify(sig(8));
        assert_eq!(c8.to_string(), "M_16(R)");
        assert_eq!(c8.minimal_ideal_dim, 16);
        assert_eq!(classify(sig(3)).to_string(), "M_1(H) ⊕ M_1(H)");
        assert_eq!(classify(sig(1)).to_string(), "M_1(C)");
        assert_eq!(classify(Signature::new(1, 0).unwrap()).to_string(), "M_1(R) ⊕ M_1(R)");
    }

    #[test]
    fn primitivity() {
        let f = build_idempotent(&su3_spec()).unwrap();
        assert!(is_primitive(&f));
        assert!(!is_primitive(&Multivector::one(sig(6))));
        let half = IdempotentSpec::new(sig(6), vec![Generator::plus(&[1, 3, 5]).unwrap()]);
        let h = build_idempotent(&half).unwrap();
        assert!(is_idempotent(&h));
        assert_eq!(left_ideal_basis(&h).unwrap().dimension, 32);
        assert!(!is_primitive(&h));
    }

    #[test]
    fn two_piece_decomposition() {
        let half = IdempotentSpec::new(sig(6), vec![Generator::plus(&[1, 3, 5]).unwrap()]);
        let pieces = decompose_algebra(&half).unwrap();
        assert_eq!(pieces.len(), 2);
        assert_eq!(pieces[0].add(&pieces[1]).unwrap(), Multivector::one(sig(6)));
        let check = check_decomposition(&pieces).unwrap();
        assert!(check.holds());
        assert_eq!(check.dimensions, [32, 32]);
    }
}
