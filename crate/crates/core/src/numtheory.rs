//! Exact integer predicates and the weight intervals `I` and `J`.
//!
//! Everything here is integer-only. Interval endpoints involve `√q`,
//! `q^{1/4}` and `(8q)^{1/4}`, which are irrational for most `m`; comparisons
//! against them are decided by isolating one radical at a time and squaring.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Floor square root of a non-negative integer.
pub fn isqrt(n: u128) -> u128 {
    n.isqrt()
}

/// Smallest `r` with `r * r >= n`.
pub fn ceil_sqrt(n: u128) -> u128 {
    let r = n.isqrt();
    if r * r == n {
        r
    } else {
        r + 1
    }
}

/// True iff `n = k^2` for some integer `k`; negative numbers never are.
pub fn is_perfect_square(n: i128) -> bool {
    if n < 0 {
        return false;
    }
    let r = isqrt(n as u128);
    r * r == n as u128
}

/// Whether `n` is a square in the 2-adic integers.
///
/// `0` is a square. A nonzero `n = 2^r u` with `u` odd is a square iff `r`
/// is even and `u ≡ 1 (mod 8)`; negative `n` has `u ≡ 7 (mod 8)` for some
/// odd part and so fails whenever the rule says so (e.g. `-1`).
pub fn two_adic_square(n: i128) -> bool {
    if n == 0 {
        return true;
    }
    let r = n.trailing_zeros();
    let u = n >> r;
    r.is_multiple_of(2) && u.rem_euclid(8) == 1
}

/// Least prime `p` with `p^2 | n`, by trial division. `None` means squarefree.
///
/// `0` is divisible by every square; it reports `Some(2)`.
pub fn square_prime_divisor(n: i128) -> Option<u64> {
    if n == 0 {
        return Some(2);
    }
    let mut n = n.unsigned_abs();
    let mut p: u128 = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return Some(p as u64);
            }
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    None
}

/// True iff no prime square divides `n`. Sign is ignored; `0` is not squarefree.
pub fn is_squarefree(n: i128) -> bool {
    square_prime_divisor(n).is_none()
}

/// Sign of `x + y·√p` for integers `x, y` and radicand `p >= 0`.
pub fn sign_one_radical(x: i128, y: i128, p: i128) -> Ordering {
    debug_assert!(p >= 0);
    let sx = x.cmp(&0);
    let sr = if p == 0 { Ordering::Equal } else { y.cmp(&0) };
    if sr == Ordering::Equal {
        return sx;
    }
    if sx == Ordering::Equal || sx == sr {
        return sr;
    }
    match (x * x).cmp(&(y * y * p)) {
        Ordering::Greater => sx,
        Ordering::Less => sr,
        Ordering::Equal => Ordering::Equal,
    }
}

/// Sign of `x + y·√p + z·√r` for integers and radicands `p, r >= 0`.
pub fn sign_two_radicals(x: i128, y: i128, p: i128, z: i128, r: i128) -> Ordering {
    debug_assert!(r >= 0);
    let su = sign_one_radical(x, y, p);
    let sv = if r == 0 { Ordering::Equal } else { z.cmp(&0) };
    if sv == Ordering::Equal {
        return su;
    }
    if su == Ordering::Equal || su == sv {
        return sv;
    }
    // Opposite signs: compare u^2 = x^2 + y^2 p + 2xy√p against v^2 = z^2 r.
    match sign_one_radical(x * x + y * y * p - z * z * r, 2 * x * y, p) {
        Ordering::Greater => su,
        Ordering::Less => sv,
        Ordering::Equal => Ordering::Equal,
    }
}

/// Integer endpoints of the weight intervals for `q = 2^m`.
///
/// `I` is `[q/2 - ⌊2√q⌋, q/2 + ⌊2√q⌋ - 1]` (for even `m` the floor is exact).
/// `J` is the real interval `[q/2 - 2√q + ρ - 1/2, q/2 + 2√q - ρ - 1/2]`
/// with `ρ = q^{1/4}` for even `m` and `ρ = (8q)^{1/4}` for odd `m`;
/// `j_lo..=j_hi` are the integers inside it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Intervals {
    pub m: u32,
    pub i_lo: i64,
    pub i_hi: i64,
    pub j_lo: i64,
    pub j_hi: i64,
}

impl Intervals {
    pub fn in_i(&self, w: i64) -> bool {
        (self.i_lo..=self.i_hi).contains(&w)
    }

    pub fn in_j(&self, w: i64) -> bool {
        (self.j_lo..=self.j_hi).contains(&w)
    }

    /// Even integers of `I`, ascending.
    pub fn even_weights(&self) -> impl Iterator<Item = i64> {
        let start = self.i_lo + self.i_lo.rem_euclid(2);
        (start..=self.i_hi).step_by(2)
    }
}

/// `ρ^2` as an integer: `√q` for even `m`, `√(8q)` for odd `m`.
fn rho_squared(m: u32) -> i128 {
    if m.is_multiple_of(2) {
        1 << (m / 2)
    } else {
        1 << ((m + 3) / 2)
    }
}

/// Whether `w` is at or above the real lower end of `J`.
fn above_j_lo(m: u32, w: i64) -> bool {
    let q = 1i128 << m;
    // 2w - q + 1 + √(16q) - √(4ρ²) >= 0
    sign_two_radicals(2 * w as i128 - q + 1, 1, 16 * q, -1, 4 * rho_squared(m)) != Ordering::Less
}

/// Whether `w` is at or below the real upper end of `J`.
fn below_j_hi(m: u32, w: i64) -> bool {
    let q = 1i128 << m;
    // q - 1 - 2w + √(16q) - √(4ρ²) >= 0
    sign_two_radicals(q - 1 - 2 * w as i128, 1, 16 * q, -1, 4 * rho_squared(m)) != Ordering::Less
}

pub fn intervals(m: u32) -> Result<Intervals> {
    if !(5..=40).contains(&m) {
        return Err(Error::InvalidArgument(format!(
            "weight intervals need 5 <= m <= 40, got {m}"
        )));
    }
    let q = 1i64 << m;
    let r = isqrt(4 * q as u128) as i64;
    let (i_lo, i_hi) = (q / 2 - r, q / 2 + r - 1);
    let j_lo = (i_lo..=i_hi)
        .find(|&w| above_j_lo(m, w))
        .ok_or_else(|| Error::Consistency(format!("J empty at m = {m}")))?;
    let j_hi = (i_lo..=i_hi)
        .rev()
        .find(|&w| below_j_hi(m, w))
        .ok_or_else(|| Error::Consistency(format!("J empty at m = {m}")))?;
    Ok(Intervals {
        m,
        i_lo,
        i_hi,
        j_lo,
        j_hi,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn perfect_square_examples() {
        assert!(is_perfect_square(9));
        assert!(!is_perfect_square(-4));
        assert!(is_perfect_square(0));
        assert!(!is_perfect_square(2));
        for k in 0..60 {
            assert_eq!(isqrt(1u128 << (2 * k)), 1u128 << k);
        }
        assert_eq!(ceil_sqrt(10), 4);
        assert_eq!(ceil_sqrt(9), 3);
    }

    #[test]
    fn delta_example_for_excluded_trace() {
        // m = 6, a1 = 31, a2 = 2·31·8 - 128 = 368
        let (q, a1, a2) = (64i128, 31i128, 368i128);
        let delta = a1 * a1 - 4 * a2 + 8 * q;
        assert_eq!(delta, 1);
        assert!(is_perfect_square(delta));
    }

    #[test]
    fn two_adic_examples() {
        assert!(two_adic_square(68));
        assert!(two_adic_square(0));
        assert!(two_adic_square(1));
        assert!(two_adic_square(17));
        assert!(!two_adic_square(-1));
        assert!(!two_adic_square(2));
        assert!(!two_adic_square(3));
        assert!(!two_adic_square(5));
        assert!(two_adic_square(-7)); // -7 ≡ 1 mod 8
        for m in (6..=20).step_by(2) {
            let q = 1i128 << m;
            for a1 in (-201i128..=201).step_by(2) {
                assert!(!two_adic_square(q * (1 + 4 * a1.abs())), "m={m} a1={a1}");
            }
        }
    }

    #[test]
    fn squarefree_examples() {
        assert!(!is_squarefree(9));
        assert!(is_squarefree(-7));
        assert!(!is_squarefree(64 - 55));
        assert_eq!(square_prime_divisor(64 - 55), Some(3));
        assert!(is_squarefree(1));
        assert!(is_squarefree(-1));
        assert!(!is_squarefree(0));
        assert_eq!(square_prime_divisor(2 * 25 * 49), Some(5));
        assert!(is_squarefree(2 * 3 * 5 * 7 * 11 * 13));
    }

    #[test]
    fn squarefree_matches_brute_force() {
        for n in 1i128..5000 {
            let brute = (2..=n).take_while(|p| p * p <= n).all(|p| n % (p * p) != 0);
            assert_eq!(is_squarefree(n), brute, "n={n}");
            assert_eq!(is_squarefree(-n), brute);
        }
    }

    #[test]
    fn radical_signs() {
        assert_eq!(sign_one_radical(-3, 1, 9), Ordering::Equal);
        assert_eq!(sign_one_radical(-3, 1, 10), Ordering::Greater);
        assert_eq!(sign_one_radical(3, -1, 10), Ordering::Less);
        // 1 + √2 - √5 ≈ 0.178
        assert_eq!(sign_two_radicals(1, 1, 2, -1, 5), Ordering::Greater);
        // √2 + √3 - √10 ≈ -0.016
        assert_eq!(sign_two_radicals(0, 1, 2, -1, 10), Ordering::Less);
        // 3 + √4 - √25 = 0
        assert_eq!(sign_two_radicals(3, 1, 4, -1, 25), Ordering::Equal);
    }

    #[test]
    fn table_rows() {
        let rows = [
            (6, [16, 47, 19, 44]),
            (7, [42, 85, 47, 80]),
            (8, [96, 159, 100, 155]),
            (9, [211, 300, 219, 292]),
            (10, [448, 575, 454, 569]),
            (11, [934, 1113, 945, 1102]),
            (12, [1920, 2175, 1928, 2167]),
        ];
        for (m, [a, b, c, d]) in rows {
            let iv = intervals(m).unwrap();
            assert_eq!((iv.i_lo, iv.i_hi, iv.j_lo, iv.j_hi), (a, b, c, d), "m={m}");
        }
    }

    #[test]
    fn nested_endpoints() {
        for m in 5..=30 {
            let iv = intervals(m).unwrap();
            assert!(
                iv.i_lo <= iv.j_lo && iv.j_lo <= iv.j_hi && iv.j_hi <= iv.i_hi,
                "m={m}"
            );
        }
    }

    #[test]
    fn even_m_j_offset_matches_quartic_root() {
        for m in (6..=30).step_by(2) {
            let q = 1i128 << m;
            let iv = intervals(m).unwrap();
            // Smallest k with k >= q^{1/4} - 1/2, i.e. (2k + 1)^4 >= 16 q.
            let k = (0i128..).find(|k| (2 * k + 1).pow(4) >= 16 * q).unwrap();
            assert_eq!(iv.j_lo as i128, iv.i_lo as i128 + k, "m={m}");
        }
    }

    #[test]
    fn even_weights_of_i() {
        let iv = intervals(9).unwrap();
        let w: Vec<_> = iv.even_weights().collect();
        assert_eq!(w.first(), Some(&212));
        assert_eq!(w.last(), Some(&300));
        assert!(w.iter().all(|x| x % 2 == 0));
    }

    proptest! {
        #[test]
        fn squares_are_two_adic_squares(n in -10_000i128..=10_000) {
            prop_assert!(two_adic_square(n * n));
        }

        #[test]
        fn perfect_square_detects_squares(n in -10_000i128..=10_000) {
            prop_assert!(is_perfect_square(n * n));
            prop_assert_eq!(is_perfect_square(n), n >= 0 && {
                let r = (n as f64).sqrt().round() as i128;
                r * r == n
            });
        }
    }
}
