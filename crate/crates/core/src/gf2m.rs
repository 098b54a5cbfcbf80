//! Arithmetic in GF(2^m), 3 <= m <= 20.
//!
//! Elements are stored in the polynomial basis: bit `i` of [`FieldElem`] is
//! the coefficient of `x^i` modulo the field's primitive modulus. The class
//! of `x` (bits `0b10`) is the generator `α` of the multiplicative group.
//!
//! Multiplication goes through log/antilog tables. A carry-less
//! shift-and-reduce product ([`FieldSpec::mul_clmul`]) is kept alongside as
//! the reference path.

use crate::error::{Error, Result};

/// Smallest supported extension degree.
pub const MIN_DEGREE: u32 = 3;
/// Largest supported extension degree.
pub const MAX_DEGREE: u32 = 20;

/// Lexicographically least primitive polynomial of each degree 3..=20.
const DEFAULT_MODULI: [u32; 18] = [
    0xb, 0x13, 0x25, 0x43, 0x83, 0x11d, 0x211, 0x409, 0x805, 0x1053, 0x201b, 0x402b, 0x8003,
    0x1002d, 0x20009, 0x40027, 0x80027, 0x100009,
];

/// The default modulus for degree `m`, if `m` is supported.
pub fn default_modulus(m: u32) -> Option<u32> {
    if (MIN_DEGREE..=MAX_DEGREE).contains(&m) {
        Some(DEFAULT_MODULI[(m - MIN_DEGREE) as usize])
    } else {
        None
    }
}

/// An element of GF(2^m) in the polynomial basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FieldElem(pub u32);

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem(0);
    pub const ONE: FieldElem = FieldElem(1);

    #[inline]
    pub fn bits(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

// Addition in characteristic 2 is XOR.
#[allow(clippy::suspicious_arithmetic_impl)]
impl std::ops::Add for FieldElem {
    type Output = FieldElem;
    #[inline]
    fn add(self, rhs: FieldElem) -> FieldElem {
        FieldElem(self.0 ^ rhs.0)
    }
}

#[allow(clippy::suspicious_op_assign_impl)]
impl std::ops::AddAssign for FieldElem {
    #[inline]
    fn add_assign(&mut self, rhs: FieldElem) {
        self.0 ^= rhs.0;
    }
}

impl std::fmt::LowerHex for FieldElem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        std::fmt::LowerHex::fmt(&self.0, f)
    }
}

/// Serialized as a hex bit pattern such as `"0x1d"`.
impl serde::Serialize for FieldElem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format!("{:#x}", self.0))
    }
}

impl<'de> serde::Deserialize<'de> for FieldElem {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        let digits = s.strip_prefix("0x").unwrap_or(&s);
        u32::from_str_radix(digits, 16)
            .map(FieldElem)
            .map_err(serde::de::Error::custom)
    }
}

/// A concrete model of GF(2^m): the degree, a primitive modulus and the
/// lookup tables derived from it. Immutable once built.
#[derive(Debug, Clone)]
pub struct FieldSpec {
    m: u32,
    modulus: u32,
    q: u32,
    /// `exp[i] = α^i` for `0 <= i < 2(q-1)`, doubled so sums of logs need no reduction.
    exp: Vec<u32>,
    /// `log[a]` for `a != 0`; `log[0]` is unused.
    log: Vec<u32>,
    /// Bit `i` is `Tr(x^i)`.
    trace_mask: u32,
    /// `half[c]` is the smaller root `u` of `u^2 + u = c`, or `NO_ROOT`.
    half: Vec<u32>,
}

const NO_ROOT: u32 = u32::MAX;

impl FieldSpec {
    /// GF(2^m) with the default (lexicographically least) primitive modulus.
    pub fn new(m: u32) -> Result<Self> {
        let modulus = default_modulus(m).ok_or(Error::UnsupportedDegree(m))?;
        Self::with_modulus(m, modulus)
    }

    /// GF(2^m) with an explicit modulus; rejected unless it is primitive of degree `m`.
    pub fn with_modulus(m: u32, modulus: u32) -> Result<Self> {
        if !(MIN_DEGREE..=MAX_DEGREE).contains(&m) {
            return Err(Error::UnsupportedDegree(m));
        }
        if modulus >> m != 1 {
            return Err(Error::WrongModulusDegree { m, modulus });
        }
        let q = 1u32 << m;
        let order = q - 1;
        let mut exp = vec![0u32; 2 * order as usize];
        let mut log = vec![0u32; q as usize];
        let mut x = 1u32;
        for i in 0..order {
            if i > 0 && x == 1 {
                return Err(Error::NotPrimitive {
                    modulus,
                    order: i as u64,
                    expected: order as u64,
                });
            }
            exp[i as usize] = x;
            log[x as usize] = i;
            x <<= 1;
            if x & q != 0 {
                x ^= modulus;
            }
        }
        if x != 1 {
            // x^(q-1) must return to 1; anything else means x is not a unit of full order.
            return Err(Error::NotPrimitive {
                modulus,
                order: 0,
                expected: order as u64,
            });
        }
        for i in 0..order as usize {
            exp[i + order as usize] = exp[i];
        }

        let mut spec = FieldSpec {
            m,
            modulus,
            q,
            exp,
            log,
            trace_mask: 0,
            half: Vec::new(),
        };
        spec.trace_mask = (0..m)
            .map(|i| spec.trace_by_squaring(FieldElem(1 << i)) << i)
            .fold(0, |acc, b| acc | b);

        let mut half = vec![NO_ROOT; q as usize];
        for u in 0..q {
            let c = spec.mul(FieldElem(u), FieldElem(u)).0 ^ u;
            if half[c as usize] == NO_ROOT {
                half[c as usize] = u;
            }
        }
        spec.half = half;
        Ok(spec)
    }

    #[inline]
    pub fn m(&self) -> u32 {
        self.m
    }

    #[inline]
    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Field size `2^m`.
    #[inline]
    pub fn q(&self) -> u32 {
        self.q
    }

    /// Order of the multiplicative group, `2^m - 1`.
    #[inline]
    pub fn order(&self) -> u32 {
        self.q - 1
    }

    /// Validates `bits` as an element of this field.
    pub fn elem(&self, bits: u32) -> Result<FieldElem> {
        if bits < self.q {
            Ok(FieldElem(bits))
        } else {
            Err(Error::ElementOutOfRange { bits, m: self.m })
        }
    }

    /// Iterator over all `q` elements in bit order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElem> + Clone {
        (0..self.q).map(FieldElem)
    }

    /// Iterator over the `q - 1` nonzero elements in bit order.
    pub fn nonzero(&self) -> impl Iterator<Item = FieldElem> + Clone {
        (1..self.q).map(FieldElem)
    }

    /// The generator `α`, the class of `x`.
    #[inline]
    pub fn alpha(&self) -> FieldElem {
        FieldElem(2)
    }

    #[inline]
    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        a + b
    }

    #[inline]
    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if a.0 == 0 || b.0 == 0 {
            return FieldElem::ZERO;
        }
        let s = self.log[a.0 as usize] + self.log[b.0 as usize];
        FieldElem(self.exp[s as usize])
    }

    /// Shift-and-add product reduced by the modulus, independent of the tables.
    pub fn mul_clmul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        let mut acc: u64 = 0;
        let (a, mut b) = (a.0 as u64, b.0 as u64);
        let mut shift = 0;
        while b != 0 {
            if b & 1 == 1 {
                acc ^= a << shift;
            }
            b >>= 1;
            shift += 1;
        }
        let m = self.m as u64;
        for d in (m..2 * m).rev() {
            if acc >> d & 1 == 1 {
                acc ^= (self.modulus as u64) << (d - m);
            }
        }
        FieldElem(acc as u32)
    }

    #[inline]
    pub fn square(&self, a: FieldElem) -> FieldElem {
        self.mul(a, a)
    }

    pub fn inv(&self, a: FieldElem) -> Result<FieldElem> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        let l = self.log[a.0 as usize];
        Ok(FieldElem(
            self.exp[((self.order() - l) % self.order()) as usize],
        ))
    }

    pub fn div(&self, a: FieldElem, b: FieldElem) -> Result<FieldElem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^e` for any integer exponent; negative powers of zero are an error.
    pub fn pow(&self, a: FieldElem, e: i64) -> Result<FieldElem> {
        if a.0 == 0 {
            return match e.signum() {
                0 => Ok(FieldElem::ONE),
                1 => Ok(FieldElem::ZERO),
                _ => Err(Error::DivisionByZero),
            };
        }
        let n = self.order() as i64;
        let l = self.log[a.0 as usize] as i64;
        let k = (l * e.rem_euclid(n)).rem_euclid(n);
        Ok(FieldElem(self.exp[k as usize]))
    }

    /// `α^i`, with `i` reduced modulo `q - 1` first.
    pub fn alpha_pow(&self, i: i64) -> FieldElem {
        let k = i.rem_euclid(self.order() as i64);
        FieldElem(self.exp[k as usize])
    }

    /// Discrete logarithm base `α` of a nonzero element.
    pub fn log(&self, a: FieldElem) -> Result<u32> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.log[a.0 as usize])
    }

    /// Absolute trace by `m - 1` repeated squarings.
    pub fn trace_by_squaring(&self, a: FieldElem) -> u32 {
        let mut acc = a;
        let mut t = a;
        for _ in 1..self.m {
            t = self.mul_clmul(t, t);
            acc += t;
        }
        debug_assert!(acc.0 <= 1, "trace must land in F2");
        acc.0
    }

    /// Absolute trace via the precomputed per-bit table.
    #[inline]
    pub fn trace(&self, a: FieldElem) -> u32 {
        (a.0 & self.trace_mask).count_ones() & 1
    }

    #[inline]
    pub fn trace_mask(&self) -> u32 {
        self.trace_mask
    }

    /// The unique square root (squaring is a bijection in characteristic 2).
    pub fn sqrt(&self, a: FieldElem) -> FieldElem {
        if a.0 == 0 {
            return a;
        }
        let n = self.order() as u64;
        let l = self.log[a.0 as usize] as u64;
        // 2^{-1} mod (q-1) = q/2 since q-1 is odd.
        let k = l * (self.q as u64 / 2) % n;
        FieldElem(self.exp[k as usize])
    }

    /// Roots of `z^2 + p z + r = 0`, sorted.
    ///
    /// With `p = 0` the unique square root of `r` is returned. Otherwise
    /// there are two roots when `Tr(r / p^2) = 0` and none when it is 1.
    pub fn solve_artin_schreier(&self, p: FieldElem, r: FieldElem) -> Vec<FieldElem> {
        if p.0 == 0 {
            return vec![self.sqrt(r)];
        }
        let p2 = self.square(p);
        let c = self.mul(r, self.inv(p2).expect("p is nonzero"));
        let u = self.half[c.0 as usize];
        if u == NO_ROOT {
            return Vec::new();
        }
        let z0 = self.mul(p, FieldElem(u));
        let z1 = z0 + p;
        let mut roots = vec![z0, z1];
        roots.sort();
        roots
    }

    /// Binds an element to this field for mismatch-checked arithmetic.
    pub fn bind(&self, bits: u32) -> Result<BoundElem<'_>> {
        Ok(BoundElem {
            field: self,
            value: self.elem(bits)?,
        })
    }

    /// True when both specs describe the same field model.
    pub fn same_field(&self, other: &FieldSpec) -> bool {
        self.m == other.m && self.modulus == other.modulus
    }

    /// Modulus as a lowercase hex string, the form used in file headers.
    pub fn modulus_hex(&self) -> String {
        format!("{:#x}", self.modulus)
    }
}

/// A field element that remembers its field, so arithmetic across different
/// fields is reported instead of silently producing garbage.
#[derive(Debug, Clone, Copy)]
pub struct BoundElem<'f> {
    field: &'f FieldSpec,
    value: FieldElem,
}

impl<'f> BoundElem<'f> {
    pub fn value(&self) -> FieldElem {
        self.value
    }

    fn check(&self, other: &BoundElem<'_>) -> Result<()> {
        if self.field.same_field(other.field) {
            Ok(())
        } else {
            Err(Error::FieldMismatch {
                left: self.field.m,
                left_mod: self.field.modulus,
                right: other.field.m,
                right_mod: other.field.modulus,
            })
        }
    }

    pub fn try_add(&self, other: &BoundElem<'_>) -> Result<BoundElem<'f>> {
        self.check(other)?;
        Ok(BoundElem {
            field: self.field,
            value: self.value + other.value,
        })
    }

    pub fn try_mul(&self, other: &BoundElem<'_>) -> Result<BoundElem<'f>> {
        self.check(other)?;
        Ok(BoundElem {
            field: self.field,
            value: self.field.mul(self.value, other.value),
        })
    }

    pub fn try_inv(&self) -> Result<BoundElem<'f>> {
        Ok(BoundElem {
            field: self.field,
            value: self.field.inv(self.value)?,
        })
    }

    pub fn trace(&self) -> u32 {
        self.field.trace(self.value)
    }
}
