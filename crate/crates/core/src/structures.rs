//! SU(3), G2 and Spin(7) structure forms and their primitive idempotents.
//!
//! Each structure maps to a primitive idempotent through its defining forms
//! and back through the graded pieces of `W = f / <f>_0`. All Hodge duals
//! here use [`HodgeConvention::ExtDualFirst`].

use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::{integer, rational, volume_element, Blade, Multivector, Scalar, Signature};
use crate::error::{AlgebraError, Result};
use crate::exterior::{
    clifford_hodge, hodge_star, interior_product, quantize, symbol, wedge, ExteriorForm,
    HodgeConvention,
};
use crate::ideal::{is_idempotent, is_primitive, left_ideal_basis, classify};
use crate::linalg::{determinant, is_positive_definite};

const STAR: HodgeConvention = HodgeConvention::ExtDualFirst;

fn require(form: &ExteriorForm, dim: usize, grade: usize) -> Result<()> {
    if form.dim() != dim {
        return Err(AlgebraError::WrongDimension { expected: dim, found: form.dim() });
    }
    if !form.is_homogeneous_of(grade) {
        return Err(AlgebraError::WrongGrade { expected: grade });
    }
    Ok(())
}

fn require_sig(x: &Multivector, n: usize) -> Result<()> {
    if x.signature().dim() != n {
        return Err(AlgebraError::WrongDimension { expected: n, found: x.signature().dim() });
    }
    Ok(())
}

fn ensure_idempotent(f: Multivector) -> Result<Multivector> {
    if is_idempotent(&f) {
        Ok(f)
    } else {
        Err(AlgebraError::NotIdempotent(Box::new(f)))
    }
}

/// `(ω, ψ+, ψ-)` on `R^6`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SU3Structure {
    pub omega: ExteriorForm,
    pub psi_plus: ExteriorForm,
    pub psi_minus: ExteriorForm,
}

impl SU3Structure {
    pub fn new(omega: ExteriorForm, psi_plus: ExteriorForm, psi_minus: ExteriorForm) -> Result<Self> {
        require(&omega, 6, 2)?;
        require(&psi_plus, 6, 3)?;
        require(&psi_minus, 6, 3)?;
        Ok(SU3Structure { omega, psi_plus, psi_minus })
    }

    /// `c` with `ψ+ ∧ ψ- = c e^{123456}`.
    pub fn volume_constant(&self) -> Scalar {
        wedge(&self.psi_plus, &self.psi_minus)
            .expect("dimensions checked")
            .volume_multiple()
            .expect("a 6-form on R^6 is a volume multiple")
    }

    /// `ω ∧ ψ+ = 0` and `ω ∧ ψ- = 0`.
    pub fn is_compatible(&self) -> bool {
        wedge(&self.omega, &self.psi_plus).map(|w| w.is_zero()).unwrap_or(false)
            && wedge(&self.omega, &self.psi_minus).map(|w| w.is_zero()).unwrap_or(false)
    }
}

/// A 3-form `φ` on `R^7`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct G2Structure {
    pub phi: ExteriorForm,
}

impl G2Structure {
    pub fn new(phi: ExteriorForm) -> Result<Self> {
        require(&phi, 7, 3)?;
        Ok(G2Structure { phi })
    }

    pub fn dual(&self) -> ExteriorForm {
        hodge_star(&self.phi, STAR)
    }
}

/// A 4-form `Ω` on `R^8`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spin7Structure {
    pub omega4: ExteriorForm,
}

impl Spin7Structure {
    pub fn new(omega4: ExteriorForm) -> Result<Self> {
        require(&omega4, 8, 4)?;
        Ok(Spin7Structure { omega4 })
    }

    pub fn is_self_dual(&self) -> bool {
        hodge_star(&self.omega4, STAR) == self.omega4
    }

    /// `c` with `Ω ∧ Ω = c e^{1...8}`.
    pub fn volume_constant(&self) -> Scalar {
        wedge(&self.omega4, &self.omega4)
            .expect("dimensions checked")
            .volume_multiple()
            .expect("an 8-form on R^8 is a volume multiple")
    }
}

pub fn model_su3() -> SU3Structure {
    SU3Structure::new(
        ExteriorForm::from_monomials(6, &[(1, &[1, 2]), (1, &[3, 4]), (1, &[5, 6])]).unwrap(),
        ExteriorForm::from_monomials(
            6,
            &[(1, &[1, 3, 5]), (-1, &[1, 4, 6]), (-1, &[2, 3, 6]), (-1, &[2, 4, 5])],
        )
        .unwrap(),
        ExteriorForm::from_monomials(
            6,
            &[(1, &[1, 3, 6]), (1, &[1, 4, 5]), (1, &[2, 3, 5]), (-1, &[2, 4, 6])],
        )
        .unwrap(),
    )
    .unwrap()
}

pub fn model_g2() -> G2Structure {
    G2Structure::new(
        ExteriorForm::from_monomials(
            7,
            &[
                (1, &[1, 2, 3]),
                (1, &[1, 4, 5]),
                (-1, &[2, 5, 7]),
                (-1, &[3, 4, 7]),
                (1, &[1, 6, 7]),
                (-1, &[3, 5, 6]),
                (1, &[2, 4, 6]),
            ],
        )
        .unwrap(),
    )
    .unwrap()
}

pub fn model_spin7() -> Spin7Structure {
    Spin7Structure::new(
        ExteriorForm::from_monomials(
            8,
            &[
                (1, &[1, 2, 3, 4]),
                (1, &[1, 2, 5, 6]),
                (1, &[1, 2, 7, 8]),
                (1, &[1, 3, 5, 7]),
                (-1, &[1, 3, 6, 8]),
                (-1, &[1, 4, 5, 8]),
                (-1, &[1, 4, 6, 7]),
                (-1, &[2, 3, 5, 8]),
                (-1, &[2, 3, 6, 7]),
                (-1, &[2, 4, 5, 7]),
                (1, &[2, 4, 6, 8]),
                (1, &[3, 4, 5, 6]),
                (1, &[3, 4, 7, 8]),
                (1, &[5, 6, 7, 8]),
            ],
        )
        .unwrap(),
    )
    .unwrap()
}

/// `(1/32)(⋆q(ψ+ ∧ ψ-) + 4 q(ψ+) - 4 ⋆q(ω))`.
///
/// Errors when `ψ+ ∧ ψ- = 0` or when the result fails to be idempotent.
pub fn su3_idempotent(s: &SU3Structure) -> Result<Multivector> {
    if s.volume_constant().is_zero() {
        return Err(AlgebraError::Degenerate("psi+ ∧ psi- = 0".into()));
    }
    let f = su3_formula(s, STAR, -1);
    ensure_idempotent(f)
}

/// The SU(3) formula with a chosen dual and sign on the `ω` term, unchecked.
pub fn su3_formula(s: &SU3Structure, convention: HodgeConvention, omega_sign: i64) -> Multivector {
    let vol_term = clifford_hodge(&quantize(&wedge(&s.psi_plus, &s.psi_minus).unwrap()), convention);
    let psi = quantize(&s.psi_plus).scale(&integer(4));
    let om = clifford_hodge(&quantize(&s.omega), convention).scale(&integer(4 * omega_sign));
    vol_term
        .add(&psi)
        .and_then(|x| x.add(&om))
        .expect("all in R_{0,6}")
        .scale(&rational(1, 32))
}

/// Reads `ψ+ = σ<W>_3`, `ψ- = -σ(⋆<W>_3)`, `ω = -σ(⋆<W>_4)` from `W = x / <x>_0`.
pub fn su3_recover(x: &Multivector) -> Result<SU3Structure> {
    require_sig(x, 6)?;
    let w = x.normalize_scalar()?;
    let w3 = w.grade_project(3);
    let w4 = w.grade_project(4);
    SU3Structure::new(
        symbol(&clifford_hodge(&w4, STAR)).neg(),
        symbol(&w3),
        symbol(&clifford_hodge(&w3, STAR)).neg(),
    )
}

/// `(1/112)(⋆q(φ ∧ ⋆φ) + 7 q(φ) - 7 q(⋆φ) - q(φ ∧ ⋆φ))`.
pub fn g2_idempotent(s: &G2Structure) -> Result<Multivector> {
    if g2_metric(s).orbit == Orbit::Degenerate {
        return Err(AlgebraError::Degenerate("phi induces a degenerate bilinear form".into()));
    }
    ensure_idempotent(g2_formula(s, STAR))
}

pub fn g2_formula(s: &G2Structure, convention: HodgeConvention) -> Multivector {
    let phi = quantize(&s.phi);
    let star_phi = clifford_hodge(&phi, convention);
    let vol = quantize(&wedge(&s.phi, &symbol(&star_phi)).expect("same dimension"));
    clifford_hodge(&vol, convention)
        .add(&phi.scale(&integer(7)))
        .and_then(|x| x.sub(&star_phi.scale(&integer(7))))
        .and_then(|x| x.sub(&vol))
        .expect("all in R_{0,7}")
        .scale(&rational(1, 112))
}

/// Result of reading a G2 structure off an idempotent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct G2Recovery {
    pub structure: G2Structure,
    /// `-σ<W>_4`.
    pub four_form: ExteriorForm,
}

impl G2Recovery {
    /// Whether the recovered 4-form is `⋆φ`.
    pub fn dual_consistent(&self) -> bool {
        self.structure.dual() == self.four_form
    }
}

/// `φ = σ<W>_3` and `-σ<W>_4` from `W = x / <x>_0`.
pub fn g2_recover(x: &Multivector) -> Result<G2Recovery> {
    require_sig(x, 7)?;
    let w = x.normalize_scalar()?;
    let phi = symbol(&w.grade_project(3));
    if phi.is_zero() {
        return Err(AlgebraError::Degenerate("grade-3 part is zero".into()));
    }
    Ok(G2Recovery {
        structure: G2Structure::new(phi)?,
        four_form: symbol(&w.grade_project(4)).neg(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orbit {
    Definite,
    Split,
    Degenerate,
}

impl fmt::Display for Orbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Orbit::Definite => "definite",
            Orbit::Split => "split",
            Orbit::Degenerate => "degenerate",
        })
    }
}

/// The bilinear form `B_ij vol = (1/6) (ι_i φ) ∧ (ι_j φ) ∧ φ` and its type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitReport {
    pub metric: Vec<Vec<Scalar>>,
    pub determinant: Scalar,
    pub orbit: Orbit,
}

impl OrbitReport {
    pub fn is_identity(&self) -> bool {
        self.metric.iter().enumerate().all(|(i, row)| {
            row.iter()
                .enumerate()
                .all(|(j, v)| if i == j { v.is_one() } else { v.is_zero() })
        })
    }
}

pub fn g2_metric(s: &G2Structure) -> OrbitReport {
    let n = 7;
    let contractions: Vec<ExteriorForm> = (1..=n)
        .map(|i| interior_product(i, &s.phi).expect("index in range"))
        .collect();
    let sixth = rational(1, 6);
    let vol = Blade::full(n);
    let mut metric = vec![vec![Scalar::zero(); n]; n];
    for i in 0..n {
        for j in i..n {
            let top = wedge(&contractions[i], &contractions[j])
                .and_then(|w| wedge(&w, &s.phi))
                .expect("same dimension");
            let v = top.coefficient(vol) * &sixth;
            metric[j][i] = v.clone();
            metric[i][j] = v;
        }
    }
    let det = determinant(&metric);
    let orbit = if det.is_zero() {
        Orbit::Degenerate
    } else {
        let negated: Vec<Vec<Scalar>> =
            metric.iter().map(|r| r.iter().map(|v| -v.clone()).collect()).collect();
        if is_positive_definite(&metric) || is_positive_definite(&negated) {
            Orbit::Definite
        } else {
            Orbit::Split
        }
    };
    OrbitReport { metric, determinant: det, orbit }
}

/// `(1/(16c)) ⋆q(Ω∧Ω) - (1/16) q(Ω) + (1/(16c)) q(Ω∧Ω)` with `Ω∧Ω = c vol`.
pub fn spin7_idempotent(s: &Spin7Structure) -> Result<Multivector> {
    if !s.is_self_dual() {
        return Err(AlgebraError::NotSelfDual);
    }
    let c = s.volume_constant();
    if c.is_zero() {
        return Err(AlgebraError::Degenerate("Omega ∧ Omega = 0".into()));
    }
    let scale = (integer(16) * &c).recip();
    ensure_idempotent(spin7_formula(s, STAR, &scale, &rational(-1, 16)))
}

/// `a ⋆q(Ω∧Ω) + b q(Ω) + a q(Ω∧Ω)`, unchecked.
pub fn spin7_formula(
    s: &Spin7Structure,
    convention: HodgeConvention,
    volume_coef: &Scalar,
    omega_coef: &Scalar,
) -> Multivector {
    let top = quantize(&wedge(&s.omega4, &s.omega4).unwrap());
    clifford_hodge(&top, convention)
        .add(&top)
        .expect("same signature")
        .scale(volume_coef)
        .add(&quantize(&s.omega4).scale(omega_coef))
        .expect("same signature")
}

/// `Ω = -σ<W>_4` from `W = x / <x>_0`; the result must be self-dual.
pub fn spin7_recover(x: &Multivector) -> Result<Spin7Structure> {
    require_sig(x, 8)?;
    let w = x.normalize_scalar()?;
    let s = Spin7Structure::new(symbol(&w.grade_project(4)).neg())?;
    if s.omega4.is_zero() {
        return Err(AlgebraError::Degenerate("grade-4 part is zero".into()));
    }
    if !s.is_self_dual() {
        return Err(AlgebraError::NotSelfDual);
    }
    Ok(s)
}

/// `φ = ω ∧ e^7 + ψ+` on `R^7 = R^6 ⊕ R`.
pub fn lift_su3_to_g2(s: &SU3Structure) -> Result<G2Structure> {
    if s.psi_plus.is_zero() {
        return Err(AlgebraError::Degenerate("psi+ = 0".into()));
    }
    let e7 = ExteriorForm::from_monomials(7, &[(1, &[7])])?;
    let phi = wedge(&s.omega.embed(7)?, &e7)?.add(&s.psi_plus.embed(7)?)?;
    let g2 = G2Structure::new(phi)?;
    match g2_metric(&g2).orbit {
        Orbit::Definite => Ok(g2),
        orbit => Err(AlgebraError::Degenerate(format!("lifted 3-form is {orbit}, not definite"))),
    }
}

/// Recover the SU(3) forms from `f6`, lift to `R^7`, and build the G2 idempotent.
pub fn lift_idempotent_6_to_7(f6: &Multivector) -> Result<Multivector> {
    require_sig(f6, 6)?;
    check_primitive(f6)?;
    let f7 = g2_idempotent(&lift_su3_to_g2(&su3_recover(f6)?)?)?;
    check_primitive(&f7)?;
    Ok(f7)
}

fn check_primitive(f: &Multivector) -> Result<()> {
    if !is_idempotent(f) {
        return Err(AlgebraError::NotIdempotent(Box::new(f.clone())));
    }
    if is_primitive(f) {
        return Ok(());
    }
    let found = if f.is_zero() { 0 } else { left_ideal_basis(f)?.dimension };
    Err(AlgebraError::NotPrimitive { found, minimal: classify(f.signature()).minimal_ideal_dim })
}

/// `1 + q(φ) - q(⋆φ) - vol`, the normalized G2 element.
pub fn g2_normalized(s: &G2Structure) -> Multivector {
    let sig = Signature::euclidean(7).unwrap();
    Multivector::one(sig)
        .add(&quantize(&s.phi))
        .and_then(|x| x.sub(&quantize(&s.dual())))
        .and_then(|x| x.sub(&volume_element(sig)))
        .expect("all in R_{0,7}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::build_idempotent;
    use crate::ideal::reference::{g2_spec, spin7_spec, su3_spec};

    fn f6() -> Multivector {
        build_idempotent(&su3_spec()).unwrap()
    }

    #[test]
    fn model_tensors() {
        let su3 = model_su3();
        assert_eq!(su3.volume_constant(), integer(4));
        assert!(su3.is_compatible());
        assert_eq!(model_g2().phi.len(), 7);
        assert_eq!(model_spin7().omega4.len(), 14);
        assert!(model_spin7().is_self_dual());
        assert_eq!(model_spin7().volume_constant(), integer(14));
    }

    #[test]
    fn su3_round_trip() {
        let f = f6();
        assert_eq!(su3_idempotent(&model_su3()).unwrap(), f);
        assert_eq!(su3_recover(&f).unwrap(), model_su3());
        assert_eq!(su3_recover(&f.scale(&integer(8))).unwrap(), model_su3());
        assert_eq!(su3_idempotent(&su3_recover(&f).unwrap()).unwrap(), f);
    }

    #[test]
    fn su3_bad_inputs() {
        let m = model_su3();
        let scaled = SU3Structure::new(
            m.omega.clone(),
            m.psi_plus.scale(&integer(2)),
            m.psi_minus.scale(&integer(2)),
        )
        .unwrap();
        assert!(matches!(su3_idempotent(&scaled), Err(AlgebraError::NotIdempotent(_))));
        let flipped = SU3Structure::new(m.omega.neg(), m.psi_plus.clone(), m.psi_minus.clone()).unwrap();
        match su3_idempotent(&flipped) {
            Err(AlgebraError::NotIdempotent(x)) => {
                let diff = x.sub(&f6()).unwrap();
                assert_eq!(diff.grades(), [4]);
            }
            other => panic!("expected failure, got {other:?}"),
        }
        let zero = SU3Structure::new(m.omega.clone(), m.psi_plus.clone(), ExteriorForm::zero(6).unwrap()).unwrap();
        assert!(matches!(su3_idempotent(&zero), Err(AlgebraError::Degenerate(_))));
        assert!(matches!(su3_recover(&quantize(&m.psi_plus)), Err(AlgebraError::ZeroScalarPart)));
    }

    #[test]
    fn g2_chain() {
        let f = build_idempotent(&g2_spec()).unwrap();
        assert_eq!(g2_idempotent(&model_g2()).unwrap(), f);
        assert_eq!(left_ideal_basis(&f).unwrap().dimension, 8);
        let rec = g2_recover(&f.scale(&integer(16))).unwrap();
        assert_eq!(rec.structure, model_g2());
        assert!(rec.dual_consistent());
        assert_eq!(
            wedge(&rec.structure.phi, &rec.structure.dual()).unwrap(),
            ExteriorForm::volume(7).unwrap().scale(&integer(7))
        );
        assert_eq!(g2_normalized(&model_g2()), f.scale(&integer(16)));
        let scaled = G2Structure::new(model_g2().phi.scale(&integer(2))).unwrap();
        assert!(matches!(g2_idempotent(&scaled), Err(AlgebraError::NotIdempotent(_))));
    }

    #[test]
    fn g2_recover_needs_three_form() {
        let s7 = Signature::euclidean(7).unwrap();
        assert!(matches!(g2_recover(&Multivector::one(s7)), Err(AlgebraError::Degenerate(_))));
    }

    #[test]
    fn g2_metrics() {
        let report = g2_metric(&model_g2());
        assert!(report.is_identity());
        assert_eq!(report.orbit, Orbit::Definite);
        assert_eq!(report.determinant, integer(1));

        let single = G2Structure::new(ExteriorForm::from_monomials(7, &[(1, &[1, 2, 3])]).unwrap()).unwrap();
        assert_eq!(g2_metric(&single).orbit, Orbit::Degenerate);
        assert!(matches!(g2_idempotent(&single), Err(AlgebraError::Degenerate(_))));

        let mut flipped = model_g2().phi;
        let e246 = Blade::from_indices(&[2, 4, 6]).unwrap();
        flipped = flipped
            .sub(&ExteriorForm::from_terms(7, [(e246, integer(2))]).unwrap())
            .unwrap();
        assert_eq!(g2_metric(&G2Structure::new(flipped).unwrap()).orbit, Orbit::Split);
    }

    #[test]
    fn spin7_chain() {
        let f = build_idempotent(&spin7_spec()).unwrap();
        assert_eq!(spin7_idempotent(&model_spin7()).unwrap(), f);
        let rec = spin7_recover(&f.scale(&integer(16))).unwrap();
        assert_eq!(rec, model_spin7());
        assert_eq!(spin7_idempotent(&rec).unwrap(), f);
    }

    #[test]
    fn spin7_rejects_anti_self_dual() {
        let asd = ExteriorForm::from_monomials(8, &[(1, &[1, 2, 3, 4]), (-1, &[5, 6, 7, 8])]).unwrap();
        assert_eq!(
            spin7_idempotent(&Spin7Structure::new(asd).unwrap()),
            Err(AlgebraError::NotSelfDual)
        );
    }

    #[test]
    fn lift() {
        let g2 = lift_su3_to_g2(&model_su3()).unwrap();
        let expected = ExteriorForm::from_monomials(
            7,
            &[
                (1, &[1, 2, 7]),
                (1, &[3, 4, 7]),
                (1, &[5, 6, 7]),
                (1, &[1, 3, 5]),
                (-1, &[1, 4, 6]),
                (-1, &[2, 3, 6]),
                (-1, &[2, 4, 5]),
            ],
        )
        .unwrap();
        assert_eq!(g2.phi, expected);
        assert_eq!(
            wedge(&g2.phi, &g2.dual()).unwrap(),
            ExteriorForm::volume(7).unwrap().scale(&integer(7))
        );
        let f7 = lift_idempotent_6_to_7(&f6()).unwrap();
        assert!(is_idempotent(&f7));
        assert_eq!(left_ideal_basis(&f7).unwrap().dimension, 8);

        let m = model_su3();
        let empty = SU3Structure::new(m.omega, ExteriorForm::zero(6).unwrap(), m.psi_minus).unwrap();
        assert!(matches!(lift_su3_to_g2(&empty), Err(AlgebraError::Degenerate(_))));
    }

    #[test]
    fn wrong_shapes_rejected() {
        let two_form = ExteriorForm::from_monomials(7, &[(1, &[1, 2])]).unwrap();
        assert_eq!(G2Structure::new(two_form), Err(AlgebraError::WrongGrade { expected: 3 }));
        let six = ExteriorForm::from_monomials(6, &[(1, &[1, 2, 3])]).unwrap();
        assert!(matches!(G2Structure::new(six), Err(AlgebraError::WrongDimension { .. })));
        assert!(matches!(
            lift_idempotent_6_to_7(&Multivector::one(Signature::euclidean(6).unwrap())),
            Err(AlgebraError::NotPrimitive { found: 64, minimal: 8 })
        ));
    }
}
