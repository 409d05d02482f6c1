//! Finite linear combinations of `q_lambda sigma^w`.

use std::collections::btree_map::{self, BTreeMap};
use std::ops::{Add, Mul};

use crate::lattice::Coroot;
use crate::scalar::Scalar;
use crate::weyl::WeylElt;

/// A basis element `q_lambda sigma^w`.
pub type Term = (WeylElt, Coroot);

/// Class in the Schubert basis with coefficients in `T`. Zero coefficients
/// are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QClass<T> {
    terms: BTreeMap<Term, T>,
}

impl<T> Default for QClass<T> {
    fn default() -> Self {
        QClass { terms: BTreeMap::new() }
    }
}

impl<T: Scalar> QClass<T> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(w: WeylElt, q: Coroot) -> Self {
        let mut c = Self::zero();
        c.add_term(w, q, T::one());
        c
    }

    pub fn schubert(w: WeylElt) -> Self {
        let n = w.rank();
        Self::basis(w, Coroot::zero(n))
    }

    pub fn add_term(&mut self, w: WeylElt, q: Coroot, c: T) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((w, q)) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            btree_map::Entry::Occupied(mut e) => {
                let s = e.get().clone() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    /// `self += c * q^shift * other`.
    pub fn add_scaled(&mut self, other: &QClass<T>, c: &T, shift: Option<&Coroot>) {
        for ((w, q), a) in &other.terms {
            let q = match shift {
                Some(s) => *q + *s,
                None => *q,
            };
            self.add_term(*w, q, a.clone() * c.clone());
        }
    }

    pub fn coeff(&self, w: &WeylElt, q: &Coroot) -> T {
        self.terms.get(&(*w, *q)).cloned().unwrap_or_else(T::zero)
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

    pub fn iter(&self) -> impl Iterator<Item = (&WeylElt, &Coroot, &T)> {
        self.terms.iter().map(|((w, q), c)| (w, q, c))
    }

    /// Terms with no quantum parameter.
    pub fn classical_part(&self) -> Self {
        self.filter(|_, q| q.0.is_zero())
    }

    pub fn filter(&self, mut keep: impl FnMut(&WeylElt, &Coroot) -> bool) -> Self {
        QClass { terms: self.terms.iter().filter(|((w, q), _)| keep(w, q)).map(|(k, v)| (*k, v.clone())).collect() }
    }

    pub fn map_coeffs<U: Scalar>(&self, f: impl Fn(&T) -> U) -> QClass<U> {
        let mut out = QClass::zero();
        for ((w, q), c) in &self.terms {
            out.add_term(*w, *q, f(c));
        }
        out
    }

    pub fn map_terms(&self, mut f: impl FnMut(&WeylElt, &Coroot) -> Term) -> Self {
        let mut out = QClass::zero();
        for ((w, q), c) in &self.terms {
            let (w2, q2) = f(w, q);
            out.add_term(w2, q2, c.clone());
        }
        out
    }
}

impl<T: Scalar> Add for &QClass<T> {
    type Output = QClass<T>;
    fn add(self, o: &QClass<T>) -> QClass<T> {
        let mut out = self.clone();
        out.add_scaled(o, &T::one(), None);
        out
    }
}

impl<T: Scalar> Mul<&T> for &QClass<T> {
    type Output = QClass<T>;
    fn mul(self, c: &T) -> QClass<T> {
        let mut out = QClass::zero();
        out.add_scaled(self, c, None);
        out
    }
}

impl<T: Scalar> FromIterator<(WeylElt, Coroot, T)> for QClass<T> {
    fn from_iter<I: IntoIterator<Item = (WeylElt, Coroot, T)>>(iter: I) -> Self {
        let mut out = QClass::zero();
        for (w, q, c) in iter {
            out.add_term(w, q, c);
        }
        out
    }
}
