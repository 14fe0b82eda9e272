#![allow(dead_code)]

use cliffideal::algebra::rational;
use cliffideal::{Blade, ExteriorForm, Multivector, Scalar, Signature};
use proptest::prelude::*;

pub fn coef() -> impl Strategy<Value = Scalar> {
    (-9i64..=9, 1i64..=6).prop_map(|(n, d)| rational(n, d))
}

fn terms(n: usize, max_terms: usize) -> impl Strategy<Value = Vec<(Blade, Scalar)>> {
    let top = 1u16 << n;
    prop::collection::vec(((0..top).prop_map(Blade::from_bits), coef()), 0..=max_terms)
}

pub fn signature(max_n: usize) -> impl Strategy<Value = Signature> {
    (1..=max_n).prop_flat_map(|n| (0..=n).prop_map(move |p| Signature::new(p, n - p).unwrap()))
}

pub fn multivector(sig: Signature, max_terms: usize) -> impl Strategy<Value = Multivector> {
    terms(sig.dim(), max_terms).prop_map(move |t| Multivector::from_terms(sig, t).unwrap())
}

pub fn form(n: usize, max_terms: usize) -> impl Strategy<Value = ExteriorForm> {
    terms(n, max_terms).prop_map(move |t| ExteriorForm::from_terms(n, t).unwrap())
}

/// A form with every term of grade `k`.
pub fn homogeneous(n: usize, k: usize, max_terms: usize) -> impl Strategy<Value = ExteriorForm> {
    let blades: Vec<Blade> = Blade::all(n).into_iter().filter(|b| b.grade() == k).collect();
    prop::collection::vec((prop::sample::select(blades), coef()), 0..=max_terms)
        .prop_map(move |t| ExteriorForm::from_terms(n, t).unwrap())
}

pub fn triple(max_n: usize, max_terms: usize) -> impl Strategy<Value = (Multivector, Multivector, Multivector)> {
    signature(max_n).prop_flat_map(move |s| {
        (multivector(s, max_terms), multivector(s, max_terms), multivector(s, max_terms))
    })
}
