//! Point counts of `y² + y = a/x + bx + cx³ + d` over GF(2^m).
//!
//! The count used throughout is `N = 2Z + 2`, where `Z` is the number of
//! `x ∈ F_q*` with `Tr(a/x + bx + cx³ + d) = 0`: each such `x` carries two
//! affine points and the two points over `x = 0, ∞` complete the model.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2m::{FieldElem, FieldSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Genus2CurveParams {
    pub a: FieldElem,
    pub b: FieldElem,
    pub c: FieldElem,
    pub d: FieldElem,
}

impl Genus2CurveParams {
    pub fn new(a: FieldElem, b: FieldElem, c: FieldElem, d: FieldElem) -> Self {
        Genus2CurveParams { a, b, c, d }
    }

    /// Genus 2 needs `a ≠ 0` and `c ≠ 0`; other triples still have a count.
    pub fn is_degenerate(&self) -> bool {
        self.a.is_zero() || self.c.is_zero()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointCountRecord {
    pub m: u32,
    pub params: Genus2CurveParams,
    /// `#{x ∈ F_q* : Tr(a/x + bx + cx³ + d) = 0}`.
    pub zeros: u32,
    /// `2 Z + 2`.
    pub n: u32,
    /// `N - q - 1`.
    pub a1: i64,
}

impl PointCountRecord {
    /// `q - N/2`, the weight of the matching dual codeword when `d = 0`.
    pub fn weight(&self) -> u32 {
        (1u32 << self.m) - self.n / 2
    }
}

pub fn genus2_point_count(params: &Genus2CurveParams, spec: &FieldSpec) -> PointCountRecord {
    let Genus2CurveParams { a, b, c, d } = *params;
    let mut zeros = 0u32;
    for x in spec.nonzero() {
        let inv = spec.inv(x).expect("x is nonzero");
        let x3 = spec.mul(spec.square(x), x);
        let arg = spec.mul(a, inv) + spec.mul(b, x) + spec.mul(c, x3) + d;
        if spec.trace(arg) == 0 {
            zeros += 1;
        }
    }
    let n = 2 * zeros + 2;
    PointCountRecord {
        m: spec.m(),
        params: *params,
        zeros,
        n,
        a1: n as i64 - spec.q() as i64 - 1,
    }
}

/// `(N mod 4, Tr(d))` for a genus-2 parameter set; the two agree.
pub fn lemma_char_parity(params: &Genus2CurveParams, spec: &FieldSpec) -> Result<(u32, u32)> {
    if params.is_degenerate() {
        return Err(Error::InvalidArgument(format!(
            "degenerate parameters (a = {:#x}, c = {:#x}): need a ≠ 0 and c ≠ 0",
            params.a.bits(),
            params.c.bits()
        )));
    }
    if spec.q() <= 4 {
        return Err(Error::InvalidArgument("need q > 4".into()));
    }
    let rec = genus2_point_count(params, spec);
    Ok((rec.n % 4, spec.trace(params.d)))
}
