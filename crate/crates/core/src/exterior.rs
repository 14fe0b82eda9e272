//! Exterior forms on `(R^n)*`, the Hodge dual and the bridge to Clifford elements.
//!
//! Forms and Clifford elements share a sparse representation but are kept as
//! distinct types; [`quantize`] and [`symbol`] are the only conversions.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::algebra::terms::Terms;
use crate::algebra::{parity_sign, reorder_parity, volume_element, Blade, Multivector, Scalar, Signature};
use crate::error::{AlgebraError, Result};

/// A rational exterior form `sum c_I e^I` on an `n`-dimensional space.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExteriorForm {
    dim: usize,
    terms: Terms,
}

fn check_dim(n: usize) -> Result<()> {
    if n == 0 || n > Signature::MAX_DIM {
        Err(AlgebraError::InvalidSignature { p: 0, q: n })
    } else {
        Ok(())
    }
}

impl ExteriorForm {
    pub fn zero(dim: usize) -> Result<Self> {
        check_dim(dim)?;
        Ok(ExteriorForm { dim, terms: Terms::new() })
    }

    pub fn from_terms<I>(dim: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Blade, Scalar)>,
    {
        check_dim(dim)?;
        let terms: Terms = terms.into_iter().collect();
        if terms.max_index() > dim {
            return Err(AlgebraError::IndexOutOfRange { index: terms.max_index(), dim });
        }
        Ok(ExteriorForm { dim, terms })
    }

    /// Sum of unit-coefficient monomials, e.g. `[(1, &[1, 2]), (-1, &[3, 4])]`.
    pub fn from_monomials(dim: usize, monomials: &[(i64, &[usize])]) -> Result<Self> {
        let mut terms = Vec::with_capacity(monomials.len());
        for (c, ix) in monomials {
            terms.push((Blade::from_indices(ix)?, crate::algebra::integer(*c)));
        }
        Self::from_terms(dim, terms)
    }

    /// `e^{1...n}`.
    pub fn volume(dim: usize) -> Result<Self> {
        check_dim(dim)?;
        Ok(ExteriorForm { dim, terms: Terms::single(Blade::full(dim), Scalar::one()) })
    }

    fn raw(dim: usize, terms: Terms) -> Self {
        ExteriorForm { dim, terms }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn iter(&self) -> impl Iterator<Item = (Blade, &Scalar)> + '_ {
        self.terms.iter()
    }

    pub fn coefficient(&self, blade: Blade) -> Scalar {
        self.terms.get(blade).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Some(k)` when every term has grade `k`; zero counts as homogeneous of any grade.
    pub fn homogeneous_grade(&self) -> Option<usize> {
        let mut grades = self.terms.iter().map(|(b, _)| b.grade());
        let first = grades.next()?;
        grades.all(|g| g == first).then_some(first)
    }

    pub fn is_homogeneous_of(&self, k: usize) -> bool {
        self.terms.iter().all(|(b, _)| b.grade() == k)
    }

    pub fn grade_project(&self, k: usize) -> ExteriorForm {
        Self::raw(self.dim, self.terms.filter(|b| b.grade() == k))
    }

    /// If `self = c * e^{1...n}`, returns `c` (zero included).
    pub fn volume_multiple(&self) -> Option<Scalar> {
        let vol = Blade::full(self.dim);
        if self.terms.iter().all(|(b, _)| b == vol) {
            Some(self.coefficient(vol))
        } else {
            None
        }
    }

    fn same_dim(&self, other: &ExteriorForm) -> Result<()> {
        if self.dim == other.dim {
            Ok(())
        } else {
            Err(AlgebraError::DimensionMismatch { left: self.dim, right: other.dim })
        }
    }

    pub fn add(&self, other: &ExteriorForm) -> Result<ExteriorForm> {
        self.same_dim(other)?;
        Ok(Self::raw(self.dim, self.terms.add(&other.terms)))
    }

    pub fn sub(&self, other: &ExteriorForm) -> Result<ExteriorForm> {
        self.same_dim(other)?;
        Ok(Self::raw(self.dim, self.terms.sub(&other.terms)))
    }

    pub fn neg(&self) -> ExteriorForm {
        Self::raw(self.dim, self.terms.neg())
    }

    pub fn scale(&self, k: &Scalar) -> ExteriorForm {
        Self::raw(self.dim, self.terms.scale(k))
    }

    pub fn wedge(&self, other: &ExteriorForm) -> Result<ExteriorForm> {
        wedge(self, other)
    }

    /// The same form viewed on `R^{new_dim}` with `new_dim >= dim`.
    pub fn embed(&self, new_dim: usize) -> Result<ExteriorForm> {
        check_dim(new_dim)?;
        if new_dim < self.dim {
            return Err(AlgebraError::DimensionMismatch { left: self.dim, right: new_dim });
        }
        Ok(Self::raw(new_dim, self.terms.clone()))
    }
}

/// `a ∧ b`.
pub fn wedge(a: &ExteriorForm, b: &ExteriorForm) -> Result<ExteriorForm> {
    a.same_dim(b)?;
    let mut out = Terms::new();
    for (x, cx) in a.terms.iter() {
        for (y, cy) in b.terms.iter() {
            if x.bits() & y.bits() != 0 {
                continue;
            }
            let sign = parity_sign(reorder_parity(x, y));
            out.accumulate_signed(Blade::from_bits(x.bits() | y.bits()), sign, &(cx * cy));
        }
    }
    Ok(ExteriorForm::raw(a.dim, out))
}

/// Contraction `ι_{e_i} a` with the `i`-th basis vector.
pub fn interior_product(i: usize, a: &ExteriorForm) -> Result<ExteriorForm> {
    if i == 0 || i > a.dim {
        return Err(AlgebraError::IndexOutOfRange { index: i, dim: a.dim });
    }
    let bit = 1u16 << (i - 1);
    let mut out = Terms::new();
    for (blade, c) in a.terms.iter() {
        if blade.bits() & bit == 0 {
            continue;
        }
        let position = (blade.bits() & (bit - 1)).count_ones();
        out.accumulate_signed(Blade::from_bits(blade.bits() ^ bit), parity_sign(position), c);
    }
    Ok(ExteriorForm::raw(a.dim, out))
}

/// How the Hodge dual is fixed. The forms conventions use the Euclidean
/// metric and orientation `e^{1...n}`; the Clifford ones multiply by the
/// volume element of `R_{0,n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum HodgeConvention {
    /// `⋆e^I = sgn(I^c, I) e^{I^c}`, so that `⋆α ∧ α = |α|^2 vol`.
    #[default]
    ExtDualFirst,
    /// `⋆e^I = sgn(I, I^c) e^{I^c}`, so that `α ∧ ⋆α = |α|^2 vol`.
    ExtAlphaFirst,
    /// `⋆x = ω x` with `ω` the Clifford volume element.
    CliffLeft,
    /// `⋆x = x ω`.
    CliffRight,
}

impl HodgeConvention {
    pub const ALL: [HodgeConvention; 4] = [
        HodgeConvention::ExtDualFirst,
        HodgeConvention::ExtAlphaFirst,
        HodgeConvention::CliffLeft,
        HodgeConvention::CliffRight,
    ];

    pub fn name(self) -> &'static str {
        match self {
            HodgeConvention::ExtDualFirst => "ext-dual-first",
            HodgeConvention::ExtAlphaFirst => "ext-alpha-first",
            HodgeConvention::CliffLeft => "cliff-left",
            HodgeConvention::CliffRight => "cliff-right",
        }
    }

    pub fn is_exterior(self) -> bool {
        matches!(self, HodgeConvention::ExtDualFirst | HodgeConvention::ExtAlphaFirst)
    }
}

impl fmt::Display for HodgeConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for HodgeConvention {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        HodgeConvention::ALL
            .into_iter()
            .find(|c| c.name() == s.to_ascii_lowercase().replace('_', "-"))
            .ok_or_else(|| {
                format!("unknown Hodge convention '{s}' (ext-dual-first, ext-alpha-first, cliff-left, cliff-right)")
            })
    }
}

/// Hodge dual of a form.
///
/// The Clifford conventions are transported through `R_{0,n}`:
/// `⋆a = σ(ω q(a))` or `σ(q(a) ω)`.
pub fn hodge_star(a: &ExteriorForm, convention: HodgeConvention) -> ExteriorForm {
    match convention {
        HodgeConvention::ExtDualFirst | HodgeConvention::ExtAlphaFirst => {
            let dual_first = convention == HodgeConvention::ExtDualFirst;
            let mut out = Terms::new();
            for (blade, c) in a.terms.iter() {
                let comp = blade.complement(a.dim);
                let parity = if dual_first {
                    reorder_parity(comp, blade)
                } else {
                    reorder_parity(blade, comp)
                };
                out.accumulate_signed(comp, parity_sign(parity), c);
            }
            ExteriorForm::raw(a.dim, out)
        }
        HodgeConvention::CliffLeft | HodgeConvention::CliffRight => {
            let x = quantize(a);
            symbol(&clifford_hodge(&x, convention))
        }
    }
}

/// `q*`: `e^{i1} ∧ ... ∧ e^{ik} ↦ e_{i1} ... e_{ik}` in `R_{0,n}`.
pub fn quantize(a: &ExteriorForm) -> Multivector {
    let sig = Signature::euclidean(a.dim).expect("form dimension already validated");
    Multivector::from_raw(sig, a.terms.clone())
}

/// `q*` into an explicit signature of the same dimension.
pub fn quantize_into(a: &ExteriorForm, sig: Signature) -> Result<Multivector> {
    if sig.dim() != a.dim {
        return Err(AlgebraError::DimensionMismatch { left: a.dim, right: sig.dim() });
    }
    Ok(Multivector::from_raw(sig, a.terms.clone()))
}

/// `σ*`, the inverse of [`quantize`].
pub fn symbol(x: &Multivector) -> ExteriorForm {
    ExteriorForm::raw(x.signature().dim(), x.raw_terms().clone())
}

/// Hodge dual of a Clifford element under the given convention.
pub fn clifford_hodge(x: &Multivector, convention: HodgeConvention) -> Multivector {
    let sig = x.signature();
    match convention {
        HodgeConvention::ExtDualFirst | HodgeConvention::ExtAlphaFirst => {
            let dual = hodge_star(&symbol(x), convention);
            Multivector::from_raw(sig, dual.terms)
        }
        HodgeConvention::CliffLeft => volume_element(sig)
            .geometric_product(x)
            .expect("same signature"),
        HodgeConvention::CliffRight => x
            .geometric_product(&volume_element(sig))
            .expect("same signature"),
    }
}
