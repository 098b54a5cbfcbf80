//! Polynomials over F2, cyclotomic cosets and minimal polynomials.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf2m::{FieldElem, FieldSpec};

/// A polynomial over F2, coefficients packed little-endian into 64-bit words.
///
/// The word vector never carries trailing zero words, so the zero polynomial
/// is exactly the empty vector and equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BinPoly {
    words: Vec<u64>,
}

impl BinPoly {
    pub fn zero() -> Self {
        BinPoly { words: Vec::new() }
    }

    pub fn one() -> Self {
        BinPoly { words: vec![1] }
    }

    /// `x^k`.
    pub fn monomial(k: usize) -> Self {
        let mut p = BinPoly::zero();
        p.set_coeff(k, true);
        p
    }

    /// Polynomial whose coefficient bits are given by `bits` (bit `i` is `x^i`).
    pub fn from_bits(bits: u64) -> Self {
        let mut p = BinPoly { words: vec![bits] };
        p.normalize();
        p
    }

    /// Sum of `x^e` over the given exponents (repeated exponents cancel).
    pub fn from_exponents<I: IntoIterator<Item = usize>>(exps: I) -> Self {
        let mut p = BinPoly::zero();
        for e in exps {
            p.flip(e);
        }
        p
    }

    /// `x^n - 1` (which is `x^n + 1` over F2).
    pub fn x_n_minus_1(n: usize) -> Self {
        BinPoly::from_exponents([0, n])
    }

    fn normalize(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        let top = *self.words.last()?;
        Some(64 * (self.words.len() - 1) + 63 - top.leading_zeros() as usize)
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.words
            .get(i / 64)
            .is_some_and(|w| w >> (i % 64) & 1 == 1)
    }

    fn flip(&mut self, i: usize) {
        let w = i / 64;
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        self.words[w] ^= 1 << (i % 64);
        self.normalize();
    }

    pub fn set_coeff(&mut self, i: usize, v: bool) {
        if self.coeff(i) != v {
            self.flip(i);
        }
    }

    /// Exponents with nonzero coefficient, ascending.
    pub fn exponents(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (wi, &w) in self.words.iter().enumerate() {
            let mut w = w;
            while w != 0 {
                let b = w.trailing_zeros() as usize;
                out.push(64 * wi + b);
                w &= w - 1;
            }
        }
        out
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn add(&self, other: &BinPoly) -> BinPoly {
        let (long, short) = if self.words.len() >= other.words.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut words = long.words.clone();
        for (w, s) in words.iter_mut().zip(&short.words) {
            *w ^= s;
        }
        let mut p = BinPoly { words };
        p.normalize();
        p
    }

    pub fn mul(&self, other: &BinPoly) -> BinPoly {
        if self.is_zero() || other.is_zero() {
            return BinPoly::zero();
        }
        let mut words = vec![0u64; self.words.len() + other.words.len()];
        for (i, &a) in self.words.iter().enumerate() {
            let mut a = a;
            while a != 0 {
                let bit = a.trailing_zeros() as usize;
                a &= a - 1;
                // Accumulate other << (64 i + bit).
                for (j, &b) in other.words.iter().enumerate() {
                    words[i + j] ^= b << bit;
                    if bit > 0 {
                        words[i + j + 1] ^= b >> (64 - bit);
                    }
                }
            }
        }
        let mut p = BinPoly { words };
        p.normalize();
        p
    }

    /// Quotient and remainder; errors on a zero divisor.
    pub fn div_rem(&self, divisor: &BinPoly) -> Result<(BinPoly, BinPoly)> {
        let dd = divisor
            .degree()
            .ok_or_else(|| Error::InvalidArgument("polynomial division by zero".into()))?;
        let mut rem = self.clone();
        let mut quot = BinPoly::zero();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let shift = rd - dd;
            quot.flip(shift);
            rem = rem.add(&divisor.shift_left(shift));
        }
        Ok((quot, rem))
    }

    pub fn divides(&self, other: &BinPoly) -> Result<bool> {
        Ok(other.div_rem(self)?.1.is_zero())
    }

    pub fn shift_left(&self, k: usize) -> BinPoly {
        if self.is_zero() {
            return BinPoly::zero();
        }
        let (ws, bs) = (k / 64, k % 64);
        let mut words = vec![0u64; self.words.len() + ws + 1];
        for (i, &w) in self.words.iter().enumerate() {
            words[i + ws] ^= w << bs;
            if bs > 0 {
                words[i + ws + 1] ^= w >> (64 - bs);
            }
        }
        let mut p = BinPoly { words };
        p.normalize();
        p
    }

    /// `x^deg · p(1/x)`.
    pub fn reciprocal(&self) -> BinPoly {
        match self.degree() {
            None => BinPoly::zero(),
            Some(d) => BinPoly::from_exponents(self.exponents().into_iter().map(|e| d - e)),
        }
    }

    /// Evaluates the polynomial at a field element (coefficients embed as 0/1).
    pub fn eval(&self, spec: &FieldSpec, x: FieldElem) -> FieldElem {
        let Some(d) = self.degree() else {
            return FieldElem::ZERO;
        };
        let mut acc = FieldElem::ZERO;
        for i in (0..=d).rev() {
            acc = spec.mul(acc, x);
            if self.coeff(i) {
                acc += FieldElem::ONE;
            }
        }
        acc
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }
}

impl fmt::Debug for BinPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinPoly({self})")
    }
}

impl fmt::Display for BinPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .exponents()
            .into_iter()
            .rev()
            .map(|e| match e {
                0 => "1".to_string(),
                1 => "x".to_string(),
                _ => format!("x^{e}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// Orbit of an exponent under doubling modulo `2^m - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CosetSet {
    /// Least member.
    pub representative: u32,
    /// Members in ascending order.
    pub members: Vec<u32>,
}

impl CosetSet {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, e: u32) -> bool {
        self.members.binary_search(&e).is_ok()
    }
}

pub fn cyclotomic_coset(i: i64, m: u32) -> CosetSet {
    let n = (1u64 << m) - 1;
    let start = i.rem_euclid(n as i64) as u64;
    let mut members = vec![start as u32];
    let mut e = (2 * start) % n;
    while e != start {
        members.push(e as u32);
        e = (2 * e) % n;
    }
    members.sort_unstable();
    CosetSet {
        representative: members[0],
        members,
    }
}

/// Minimal polynomial of `α^i` over F2.
pub fn minimal_poly(i: i64, spec: &FieldSpec) -> Result<BinPoly> {
    let coset = cyclotomic_coset(i, spec.m());
    // Coefficients in GF(2^m), lowest degree first.
    let mut coeffs = vec![FieldElem::ONE];
    for &j in &coset.members {
        let root = spec.alpha_pow(j as i64);
        let mut next = vec![FieldElem::ZERO; coeffs.len() + 1];
        for (k, &c) in coeffs.iter().enumerate() {
            next[k + 1] += c;
            next[k] += spec.mul(c, root);
        }
        coeffs = next;
    }
    let mut p = BinPoly::zero();
    for (k, c) in coeffs.into_iter().enumerate() {
        match c.bits() {
            0 => {}
            1 => p.set_coeff(k, true),
            other => {
                return Err(Error::Consistency(format!(
                    "minimal polynomial of alpha^{i} has coefficient {other:#x} outside F2 at x^{k}"
                )))
            }
        }
    }
    Ok(p)
}

/// The cyclic codes of length `2^m - 1` studied here, by defining zeros.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CodeKind {
    /// Generated by `m_1`.
    Hamming,
    /// Double-error-correcting BCH code, generated by `m_1 m_3`.
    B,
    /// Melas code, generated by `m_1 m_{-1}`.
    M,
    /// `B ∩ M`, generated by `m_1 m_{-1} m_3`.
    C,
}

impl CodeKind {
    /// Exponents `i` whose minimal polynomials generate the code.
    pub fn zeros(self) -> &'static [i64] {
        match self {
            CodeKind::Hamming => &[1],
            CodeKind::B => &[1, 3],
            CodeKind::M => &[1, -1],
            CodeKind::C => &[1, -1, 3],
        }
    }
}

/// Product of the distinct minimal polynomials of the code's zeros.
pub fn generator_poly(code: CodeKind, spec: &FieldSpec) -> Result<BinPoly> {
    if spec.m() <= 2 {
        return Err(Error::InvalidArgument(format!(
            "m = {} leaves the minimal polynomial factors non-distinct; need m > 2",
            spec.m()
        )));
    }
    let mut reps = Vec::new();
    let mut g = BinPoly::one();
    for &i in code.zeros() {
        let coset = cyclotomic_coset(i, spec.m());
        if reps.contains(&coset.representative) {
            continue;
        }
        reps.push(coset.representative);
        g = g.mul(&minimal_poly(i, spec)?);
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(bits: u64) -> BinPoly {
        BinPoly::from_bits(bits)
    }

    #[test]
    fn mul_examples() {
        assert_eq!(p(0b11).mul(&p(0b11)), p(0b101));
        assert_eq!(p(0b1011).mul(&BinPoly::one()), p(0b1011));
        assert_eq!(p(0b11).mul(&p(0b111)), p(0b1001));
        assert_eq!(p(0b11).mul(&BinPoly::zero()), BinPoly::zero());
    }

    #[test]
    fn mul_across_word_boundaries() {
        let a = BinPoly::from_exponents([0, 63, 64, 130]);
        let b = BinPoly::from_exponents([1, 70]);
        let want = BinPoly::from_exponents([1, 64, 65, 131, 70, 133, 134, 200]);
        assert_eq!(a.mul(&b), want);
        let (qt, r) = want.div_rem(&b).unwrap();
        assert_eq!(qt, a);
        assert!(r.is_zero());
    }

    #[test]
    fn zero_polynomial_has_no_degree() {
        assert_eq!(BinPoly::zero().degree(), None);
        assert_eq!(BinPoly::one().degree(), Some(0));
        assert_eq!(BinPoly::monomial(100).degree(), Some(100));
        assert_eq!(p(0b11).add(&p(0b11)), BinPoly::zero());
        assert!(p(0b11).add(&p(0b11)).words().is_empty());
    }

    #[test]
    fn division_by_zero_is_rejected() {
        assert!(p(0b101).div_rem(&BinPoly::zero()).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(p(0b10011).to_string(), "x^4 + x + 1");
        assert_eq!(BinPoly::zero().to_string(), "0");
    }

    #[test]
    fn coset_examples() {
        assert_eq!(cyclotomic_coset(1, 4).members, vec![1, 2, 4, 8]);
        assert_eq!(cyclotomic_coset(0, 5).members, vec![0]);
        assert_eq!(cyclotomic_coset(-1, 5).members, vec![15, 23, 27, 29, 30]);
        assert_eq!(cyclotomic_coset(-1, 5).representative, 15);
        assert_eq!(cyclotomic_coset(3, 4).members, vec![3, 6, 9, 12]);
    }

    #[test]
    fn coset_invariants() {
        for m in 3..=10 {
            let n = (1u32 << m) - 1;
            for i in 0..n {
                let c = cyclotomic_coset(i as i64, m);
                assert_eq!(m as usize % c.len(), 0);
                for &e in &c.members {
                    assert!(c.contains((2 * e) % n));
                }
            }
        }
    }

    #[test]
    fn minimal_poly_examples() {
        let f = FieldSpec::with_modulus(4, 0b10011).unwrap();
        assert_eq!(minimal_poly(0, &f).unwrap(), p(0b11));
        assert_eq!(minimal_poly(1, &f).unwrap(), p(0b10011));
        assert_eq!(
            minimal_poly(1, &f).unwrap().eval(&f, f.alpha()),
            FieldElem::ZERO
        );
        let m3 = minimal_poly(3, &f).unwrap();
        assert_eq!(m3.degree(), Some(4));
        for e in [3, 6, 9, 12] {
            assert_eq!(m3.eval(&f, f.alpha_pow(e)), FieldElem::ZERO);
        }
        // x^4 + x^3 + x^2 + x + 1
        assert_eq!(m3, p(0b11111));
    }

    #[test]
    fn minimal_poly_identifies_cosets() {
        for m in 3..=6 {
            let f = FieldSpec::new(m).unwrap();
            let n = f.order() as i64;
            let polys: Vec<_> = (0..n).map(|i| minimal_poly(i, &f).unwrap()).collect();
            for i in 0..n {
                let c = cyclotomic_coset(i, m);
                assert_eq!(polys[i as usize].degree(), Some(c.len()));
                for j in 0..n {
                    assert_eq!(
                        polys[i as usize] == polys[j as usize],
                        c.contains(j as u32),
                        "m={m} i={i} j={j}"
                    );
                }
            }
        }
    }

    #[test]
    fn minimal_poly_vanishes_at_its_root() {
        for m in 3..=8 {
            let f = FieldSpec::new(m).unwrap();
            for i in 0..f.order() as i64 {
                let mp = minimal_poly(i, &f).unwrap();
                assert_eq!(mp.eval(&f, f.alpha_pow(i)), FieldElem::ZERO);
                // Irreducible, hence squarefree with no F2 root unless linear.
                if mp.degree() > Some(1) {
                    assert_eq!(mp.eval(&f, FieldElem::ZERO), FieldElem::ONE);
                    assert_eq!(mp.eval(&f, FieldElem::ONE), FieldElem::ONE);
                }
            }
        }
    }

    #[test]
    fn generator_examples() {
        let f5 = FieldSpec::new(5).unwrap();
        let g = generator_poly(CodeKind::C, &f5).unwrap();
        assert_eq!(g.degree(), Some(15));
        assert_eq!(31 - 15, 16);
        let f4 = FieldSpec::new(4).unwrap();
        assert_eq!(generator_poly(CodeKind::B, &f4).unwrap().degree(), Some(8));
        assert_eq!(
            generator_poly(CodeKind::Hamming, &f4).unwrap().degree(),
            Some(4)
        );
    }

    #[test]
    fn generators_divide_x_n_minus_1() {
        for m in 3..=12 {
            let f = FieldSpec::new(m).unwrap();
            let xn1 = BinPoly::x_n_minus_1(f.order() as usize);
            for kind in [CodeKind::Hamming, CodeKind::B, CodeKind::M, CodeKind::C] {
                let g = generator_poly(kind, &f).unwrap();
                assert!(g.divides(&xn1).unwrap(), "m={m} {kind:?}");
            }
        }
    }

    #[test]
    fn code_c_cosets_are_disjoint_and_full() {
        for m in 4..=12 {
            let f = FieldSpec::new(m).unwrap();
            let cs: Vec<_> = [1, -1, 3].iter().map(|&i| cyclotomic_coset(i, m)).collect();
            for a in 0..3 {
                for b in a + 1..3 {
                    assert!(cs[a].members.iter().all(|e| !cs[b].contains(*e)), "m={m}");
                }
            }
            let total: usize = cs.iter().map(CosetSet::len).sum();
            assert_eq!(
                generator_poly(CodeKind::C, &f).unwrap().degree(),
                Some(total)
            );
            assert_eq!(total, 3 * m as usize);
        }
    }

    #[test]
    fn m3_cosets_of_minus_one_and_three_coincide() {
        // -1 = 6 = 3 * 2 mod 7, so C degenerates to B at m = 3.
        assert_eq!(cyclotomic_coset(-1, 3), cyclotomic_coset(3, 3));
        let f = FieldSpec::new(3).unwrap();
        assert_eq!(generator_poly(CodeKind::C, &f).unwrap().degree(), Some(6));
    }
}
