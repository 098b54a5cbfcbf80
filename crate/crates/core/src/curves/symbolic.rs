//! Trivariate polynomials over F2 as sets of exponent triples.

use std::collections::BTreeSet;
use std::fmt;

use crate::gf2m::{FieldElem, FieldSpec};

/// Exponents of `x`, `y`, `z` in one monomial.
pub type Monomial = [u8; 3];

/// A polynomial in `x, y, z` over F2. Adding a monomial that is already
/// present removes it (`1 + 1 = 0`).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly3 {
    terms: BTreeSet<Monomial>,
}

/// A [`Poly3`] that does not involve `z`.
pub type BivariatePoly = Poly3;

impl Poly3 {
    pub fn zero() -> Self {
        Poly3::default()
    }

    pub fn one() -> Self {
        Poly3::from_terms([[0, 0, 0]])
    }

    pub fn from_terms<I: IntoIterator<Item = Monomial>>(terms: I) -> Self {
        let mut p = Poly3::zero();
        for t in terms {
            p.toggle(t);
        }
        p
    }

    pub fn x() -> Self {
        Poly3::from_terms([[1, 0, 0]])
    }

    pub fn y() -> Self {
        Poly3::from_terms([[0, 1, 0]])
    }

    pub fn z() -> Self {
        Poly3::from_terms([[0, 0, 1]])
    }

    fn toggle(&mut self, t: Monomial) {
        if !self.terms.remove(&t) {
            self.terms.insert(t);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Poly3) -> Poly3 {
        let mut out = self.clone();
        for &t in &other.terms {
            out.toggle(t);
        }
        out
    }

    pub fn mul(&self, other: &Poly3) -> Poly3 {
        let mut out = Poly3::zero();
        for s in &self.terms {
            for t in &other.terms {
                out.toggle([s[0] + t[0], s[1] + t[1], s[2] + t[2]]);
            }
        }
        out
    }

    /// Formal partial derivative in variable `var` (0 = x, 1 = y, 2 = z).
    pub fn derivative(&self, var: usize) -> Poly3 {
        let mut out = Poly3::zero();
        for &t in &self.terms {
            if t[var] % 2 == 1 {
                let mut d = t;
                d[var] -= 1;
                out.toggle(d);
            }
        }
        out
    }

    /// Highest exponent of `var` present, `None` for the zero polynomial.
    pub fn degree_in(&self, var: usize) -> Option<u8> {
        self.terms.iter().map(|t| t[var]).max()
    }

    /// The coefficient of `var^k`, as a polynomial in the remaining variables.
    pub fn coeff_of(&self, var: usize, k: u8) -> Poly3 {
        Poly3::from_terms(self.terms.iter().filter(|t| t[var] == k).map(|&t| {
            let mut s = t;
            s[var] = 0;
            s
        }))
    }

    /// Image under a permutation of the variables: variable `i` becomes `perm[i]`.
    pub fn permute(&self, perm: [usize; 3]) -> Poly3 {
        Poly3::from_terms(self.terms.iter().map(|t| {
            let mut s = [0u8; 3];
            for i in 0..3 {
                s[perm[i]] = t[i];
            }
            s
        }))
    }

    pub fn eval(&self, spec: &FieldSpec, x: FieldElem, y: FieldElem, z: FieldElem) -> FieldElem {
        let mut acc = FieldElem::ZERO;
        for t in &self.terms {
            let mut v = FieldElem::ONE;
            for (base, &e) in [x, y, z].into_iter().zip(t.iter()) {
                for _ in 0..e {
                    v = spec.mul(v, base);
                }
            }
            acc += v;
        }
        acc
    }

    pub fn eval2(&self, spec: &FieldSpec, x: FieldElem, y: FieldElem) -> FieldElem {
        self.eval(spec, x, y, FieldElem::ZERO)
    }
}

impl fmt::Debug for Poly3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly3({self})")
    }
}

impl fmt::Display for Poly3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for t in &self.terms {
            let mut s = String::new();
            for (name, &e) in ["x", "y", "z"].iter().zip(t.iter()) {
                match e {
                    0 => {}
                    1 => s.push_str(name),
                    _ => s.push_str(&format!("{name}^{e}")),
                }
            }
            if s.is_empty() {
                s.push('1');
            }
            parts.push(s);
        }
        write!(f, "{}", parts.join(" + "))
    }
}
