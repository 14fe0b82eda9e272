use num_traits::{One, Zero};

use super::blade::{blade_product_unchecked, check_blade, parity_sign};
use super::terms::Terms;
use super::{Blade, Scalar, Signature};
use crate::error::{AlgebraError, Result};

/// An element of the Clifford algebra `R_{p,q}` with exact rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Multivector {
    sig: Signature,
    terms: Terms,
}

impl Multivector {
    pub fn zero(sig: Signature) -> Self {
        Multivector { sig, terms: Terms::new() }
    }

    pub fn one(sig: Signature) -> Self {
        Self::scalar(sig, Scalar::one())
    }

    pub fn scalar(sig: Signature, c: Scalar) -> Self {
        Multivector { sig, terms: Terms::single(Blade::SCALAR, c) }
    }

    pub fn from_blade(sig: Signature, blade: Blade, coef: Scalar) -> Result<Self> {
        check_blade(blade, sig)?;
        Ok(Multivector { sig, terms: Terms::single(blade, coef) })
    }

    /// Collects `(blade, coefficient)` pairs, combining repeats.
    pub fn from_terms<I>(sig: Signature, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Blade, Scalar)>,
    {
        let terms: Terms = terms.into_iter().collect();
        if terms.max_index() > sig.dim() {
            return Err(AlgebraError::IndexOutOfRange {
                index: terms.max_index(),
                dim: sig.dim(),
            });
        }
        Ok(Multivector { sig, terms })
    }

    pub(crate) fn from_raw(sig: Signature, terms: Terms) -> Self {
        debug_assert!(terms.max_index() <= sig.dim());
        Multivector { sig, terms }
    }

    pub(crate) fn raw_terms(&self) -> &Terms {
        &self.terms
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    /// Terms in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = (Blade, &Scalar)> + '_ {
        self.terms.iter()
    }

    pub fn coefficient(&self, blade: Blade) -> Scalar {
        self.terms.get(blade).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn scalar_part(&self) -> Scalar {
        self.coefficient(Blade::SCALAR)
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

    fn same_sig(&self, other: &Multivector) -> Result<()> {
        if self.sig == other.sig {
            Ok(())
        } else {
            Err(AlgebraError::SignatureMismatch { left: self.sig, right: other.sig })
        }
    }

    pub fn add(&self, other: &Multivector) -> Result<Multivector> {
        self.same_sig(other)?;
        Ok(Multivector::from_raw(self.sig, self.terms.add(&other.terms)))
    }

    pub fn sub(&self, other: &Multivector) -> Result<Multivector> {
        self.same_sig(other)?;
        Ok(Multivector::from_raw(self.sig, self.terms.sub(&other.terms)))
    }

    pub fn neg(&self) -> Multivector {
        Multivector::from_raw(self.sig, self.terms.neg())
    }

    pub fn scale(&self, k: &Scalar) -> Multivector {
        Multivector::from_raw(self.sig, self.terms.scale(k))
    }

    /// Bilinear extension of the blade product.
    pub fn geometric_product(&self, other: &Multivector) -> Result<Multivector> {
        self.same_sig(other)?;
        let mut out = Terms::new();
        for (a, ca) in self.terms.iter() {
            for (b, cb) in other.terms.iter() {
                let (sign, blade) = blade_product_unchecked(a, b, self.sig);
                out.accumulate_signed(blade, sign, &(ca * cb));
            }
        }
        Ok(Multivector::from_raw(self.sig, out))
    }

    /// `<x>_k`, the grade-`k` component.
    pub fn grade_project(&self, k: usize) -> Multivector {
        Multivector::from_raw(self.sig, self.terms.filter(|b| b.grade() == k))
    }

    /// Grades carrying at least one nonzero term, ascending.
    pub fn grades(&self) -> Vec<usize> {
        let mut g: Vec<usize> = self.terms.iter().map(|(b, _)| b.grade()).collect();
        g.dedup();
        g
    }

    /// Reversion: grade-`k` terms pick up `(-1)^{k(k-1)/2}`.
    pub fn reverse(&self) -> Multivector {
        Multivector::from_raw(
            self.sig,
            self.terms.map_signs(|b| {
                let k = b.grade() as u32;
                parity_sign(k * k.saturating_sub(1) / 2)
            }),
        )
    }

    /// Divides through by the scalar part.
    pub fn normalize_scalar(&self) -> Result<Multivector> {
        let s = self.scalar_part();
        if s.is_zero() {
            return Err(AlgebraError::ZeroScalarPart);
        }
        Ok(self.scale(&s.recip()))
    }
}

/// The unit pseudoscalar `e_{12...n}`.
pub fn volume_element(sig: Signature) -> Multivector {
    Multivector::from_raw(sig, Terms::single(Blade::full(sig.dim()), Scalar::one()))
}

/// Exact linear combination `sum c_i x_i`; every `x_i` must share a signature.
pub fn linear_combine(sig: Signature, parts: &[(Scalar, &Multivector)]) -> Result<Multivector> {
    let mut acc = Multivector::zero(sig);
    for (c, x) in parts {
        acc = acc.add(&x.scale(c))?;
    }
    Ok(acc)
}
