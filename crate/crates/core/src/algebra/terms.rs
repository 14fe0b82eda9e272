use std::collections::btree_map::{self, BTreeMap};

use num_traits::{One, Zero};

use super::{Blade, Scalar};

/// Sparse coefficient map shared by Clifford elements and exterior forms.
///
/// Never stores a zero coefficient, so structural equality is exact equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub(crate) struct Terms(BTreeMap<Blade, Scalar>);

impl Terms {
    pub fn new() -> Self {
        Terms(BTreeMap::new())
    }

    pub fn single(blade: Blade, coef: Scalar) -> Self {
        let mut t = Terms::new();
        t.accumulate(blade, coef);
        t
    }

    pub fn accumulate(&mut self, blade: Blade, coef: Scalar) {
        if coef.is_zero() {
            return;
        }
        match self.0.entry(blade) {
            btree_map::Entry::Vacant(v) => {
                v.insert(coef);
            }
            btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coef;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn accumulate_signed(&mut self, blade: Blade, sign: i8, coef: &Scalar) {
        if sign < 0 {
            self.accumulate(blade, -coef.clone());
        } else {
            self.accumulate(blade, coef.clone());
        }
    }

    pub fn get(&self, blade: Blade) -> Option<&Scalar> {
        self.0.get(&blade)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Blade, &Scalar)> + '_ {
        self.0.iter().map(|(b, c)| (*b, c))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_index(&self) -> usize {
        self.0.keys().map(|b| b.max_index()).max().unwrap_or(0)
    }

    pub fn add(&self, other: &Terms) -> Terms {
        let mut out = self.clone();
        for (b, c) in other.iter() {
            out.accumulate(b, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Terms) -> Terms {
        let mut out = self.clone();
        for (b, c) in other.iter() {
            out.accumulate(b, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Terms {
        Terms(self.0.iter().map(|(b, c)| (*b, -c.clone())).collect())
    }

    pub fn scale(&self, k: &Scalar) -> Terms {
        if k.is_zero() {
            return Terms::new();
        }
        if k.is_one() {
            return self.clone();
        }
        Terms(self.0.iter().map(|(b, c)| (*b, c * k)).collect())
    }

    pub fn filter(&self, keep: impl Fn(Blade) -> bool) -> Terms {
        Terms(
            self.0
                .iter()
                .filter(|(b, _)| keep(**b))
                .map(|(b, c)| (*b, c.clone()))
                .collect(),
        )
    }

    pub fn map_signs(&self, sign: impl Fn(Blade) -> i8) -> Terms {
        Terms(
            self.0
                .iter()
                .map(|(b, c)| (*b, if sign(*b) < 0 { -c.clone() } else { c.clone() }))
                .collect(),
        )
    }
}

impl FromIterator<(Blade, Scalar)> for Terms {
    fn from_iter<I: IntoIterator<Item = (Blade, Scalar)>>(iter: I) -> Self {
        let mut t = Terms::new();
        for (b, c) in iter {
            t.accumulate(b, c);
        }
        t
    }
}
