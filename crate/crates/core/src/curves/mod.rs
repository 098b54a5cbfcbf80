//! The space curve `X : f = g = 0` behind weight-5 codewords of `C`, the
//! auxiliary plane curve `h = 0`, and the genus-2 curves whose point counts
//! give the weights of `C⊥`.

pub mod genus2;
pub mod symbolic;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::binpoly::BinPoly;
use crate::budget::{x_points_cost, Budget};
use crate::error::{Error, Result};
use crate::gf2m::{FieldElem, FieldSpec};
use crate::numtheory::isqrt;

pub use genus2::{genus2_point_count, lemma_char_parity, Genus2CurveParams, PointCountRecord};
pub use symbolic::{BivariatePoly, Poly3};

/// `f = x+y+z + x²+y²+z² + x²y+x²z+y²x+y²z+z²x+z²y`.
pub fn f_poly() -> Poly3 {
    Poly3::from_terms([
        [1, 0, 0],
        [0, 1, 0],
        [0, 0, 1],
        [2, 0, 0],
        [0, 2, 0],
        [0, 0, 2],
        [2, 1, 0],
        [2, 0, 1],
        [1, 2, 0],
        [0, 2, 1],
        [1, 0, 2],
        [0, 1, 2],
    ])
}

/// `g = x²y+x²z+y²x+y²z+z²x+z²y + xyz + xy+xz+yz + x²yz+xy²z+xyz²`.
pub fn g_poly() -> Poly3 {
    Poly3::from_terms([
        [2, 1, 0],
        [2, 0, 1],
        [1, 2, 0],
        [0, 2, 1],
        [1, 0, 2],
        [0, 1, 2],
        [1, 1, 1],
        [1, 1, 0],
        [1, 0, 1],
        [0, 1, 1],
        [2, 1, 1],
        [1, 2, 1],
        [1, 1, 2],
    ])
}

/// `h = (y²+y+1)x³ + (y³+1)x² + (y³+y)x + (y³+y²)`.
pub fn h_poly() -> Poly3 {
    Poly3::from_terms([
        [3, 2, 0],
        [3, 1, 0],
        [3, 0, 0],
        [2, 3, 0],
        [2, 0, 0],
        [1, 3, 0],
        [1, 1, 0],
        [0, 3, 0],
        [0, 2, 0],
    ])
}

/// `a = 1 + x + y`, the leading coefficient of `f` in `z`.
pub fn a_poly() -> Poly3 {
    Poly3::from_terms([[0, 0, 0], [1, 0, 0], [0, 1, 0]])
}

/// `c = xy + x + y`, the leading coefficient of `g` in `z`.
pub fn c_poly() -> Poly3 {
    Poly3::from_terms([[1, 1, 0], [1, 0, 0], [0, 1, 0]])
}

pub fn eval_f(s: &FieldSpec, x: FieldElem, y: FieldElem, z: FieldElem) -> FieldElem {
    let (x2, y2, z2) = (s.square(x), s.square(y), s.square(z));
    x + y + z + x2 + y2 + z2 + s.mul(x2, y + z) + s.mul(y2, x + z) + s.mul(z2, x + y)
}

pub fn eval_g(s: &FieldSpec, x: FieldElem, y: FieldElem, z: FieldElem) -> FieldElem {
    let (x2, y2, z2) = (s.square(x), s.square(y), s.square(z));
    let (xy, xz, yz) = (s.mul(x, y), s.mul(x, z), s.mul(y, z));
    let xyz = s.mul(xy, z);
    s.mul(x2, y + z)
        + s.mul(y2, x + z)
        + s.mul(z2, x + y)
        + xyz
        + xy
        + xz
        + yz
        + s.mul(xyz, x + y + z)
}

pub fn eval_h(s: &FieldSpec, x: FieldElem, y: FieldElem) -> FieldElem {
    let y2 = s.square(y);
    let y3 = s.mul(y2, y);
    let x2 = s.square(x);
    let x3 = s.mul(x2, x);
    let one = FieldElem::ONE;
    s.mul(y2 + y + one, x3) + s.mul(y3 + one, x2) + s.mul(y3 + y, x) + y3 + y2
}

/// `b(x, y) = f(x, y, 0)`.
fn eval_b(s: &FieldSpec, x: FieldElem, y: FieldElem) -> FieldElem {
    let (x2, y2) = (s.square(x), s.square(y));
    x + y + x2 + y2 + s.mul(x2, y) + s.mul(y2, x)
}

/// `d(x, y) = g(x, y, 0)`.
fn eval_d(s: &FieldSpec, x: FieldElem, y: FieldElem) -> FieldElem {
    let xy = s.mul(x, y);
    s.mul(xy, x + y) + xy
}

/// Checks `a·g + c·f = h` as polynomials, for a given candidate `h`.
pub fn fgh_identity_holds(h: &Poly3) -> bool {
    a_poly().mul(&g_poly()).add(&c_poly().mul(&f_poly())) == *h
}

/// `a·g + c·f = h`, checked symbolically.
pub fn verify_fgh_identity() -> bool {
    fgh_identity_holds(&h_poly())
}

/// `a·g + c·f = h` evaluated at every point of `GF(2^m)^3`.
pub fn verify_fgh_identity_pointwise(spec: &FieldSpec) -> bool {
    let (a, c) = (a_poly(), c_poly());
    spec.elements().all(|x| {
        spec.elements().all(|y| {
            let (av, cv, hv) = (a.eval2(spec, x, y), c.eval2(spec, x, y), eval_h(spec, x, y));
            spec.elements().all(|z| {
                spec.mul(av, eval_g(spec, x, y, z)) + spec.mul(cv, eval_f(spec, x, y, z)) == hv
            })
        })
    })
}

/// The `z`-free parts `b`, `d` of `f = a z² + a² z + b` and `g = c z² + a c z + d`.
///
/// Errors if `f` or `g` does not have that shape.
pub fn derive_b_d() -> Result<(BivariatePoly, BivariatePoly)> {
    let (f, g, a, c) = (f_poly(), g_poly(), a_poly(), c_poly());
    let check = |name: &str, p: &Poly3, want2: &Poly3, want1: &Poly3| -> Result<Poly3> {
        if p.degree_in(2) != Some(2) {
            return Err(Error::Consistency(format!("{name} is not quadratic in z")));
        }
        if p.coeff_of(2, 2) != *want2 || p.coeff_of(2, 1) != *want1 {
            return Err(Error::Consistency(format!(
                "{name} does not have the expected z-coefficients"
            )));
        }
        Ok(p.coeff_of(2, 0))
    };
    let b = check("f", &f, &a, &a.mul(&a))?;
    let d = check("g", &g, &c, &a.mul(&c))?;
    Ok((b, d))
}

/// An affine point of `X` over GF(2^m).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct XPoint {
    pub x: FieldElem,
    pub y: FieldElem,
    pub z: FieldElem,
}

impl XPoint {
    pub fn new(x: u32, y: u32, z: u32) -> Self {
        XPoint {
            x: FieldElem(x),
            y: FieldElem(y),
            z: FieldElem(z),
        }
    }

    /// `w = 1 + x + y + z`.
    pub fn w(&self) -> FieldElem {
        FieldElem::ONE + self.x + self.y + self.z
    }

    /// Whether `0, 1, x, y, z, 1+x+y+z` are pairwise distinct.
    pub fn is_good(&self) -> bool {
        let v = [
            FieldElem::ZERO,
            FieldElem::ONE,
            self.x,
            self.y,
            self.z,
            self.w(),
        ];
        (0..v.len()).all(|i| (i + 1..v.len()).all(|j| v[i] != v[j]))
    }

    pub fn on_curve(&self, spec: &FieldSpec) -> bool {
        eval_f(spec, self.x, self.y, self.z).is_zero()
            && eval_g(spec, self.x, self.y, self.z).is_zero()
    }
}

/// The four points of `X` over every field where `0, 1, x, y, z, w` collide.
pub fn degenerate_points() -> [XPoint; 4] {
    [
        XPoint::new(0, 0, 0),
        XPoint::new(1, 0, 0),
        XPoint::new(0, 1, 0),
        XPoint::new(0, 0, 1),
    ]
}

/// All points of `X_m` with the count of good ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XPointSet {
    pub m: u32,
    /// Sorted by `(x, y, z)`.
    pub points: Vec<XPoint>,
    pub good_count: usize,
}

impl XPointSet {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn degenerate(&self) -> impl Iterator<Item = &XPoint> {
        self.points.iter().filter(|p| !p.is_good())
    }
}

/// Points of `X` over `GF(2^m)` lying above one `x`.
fn points_above(spec: &FieldSpec, x: FieldElem) -> Vec<XPoint> {
    let mut out = Vec::new();
    for y in spec.elements() {
        let a = FieldElem::ONE + x + y;
        let b = eval_b(spec, x, y);
        let zs: Vec<FieldElem> = if !a.is_zero() {
            // f / a = z² + a z + b / a
            let r = spec.div(b, a).expect("a is nonzero");
            spec.solve_artin_schreier(a, r)
        } else if !b.is_zero() {
            Vec::new()
        } else {
            // f vanishes identically in z; g = c z² + d since a c = 0.
            let c = spec.mul(x, y) + x + y;
            let d = eval_d(spec, x, y);
            if !c.is_zero() {
                vec![spec.sqrt(spec.div(d, c).expect("c is nonzero"))]
            } else if d.is_zero() {
                spec.elements().collect()
            } else {
                Vec::new()
            }
        };
        for z in zs {
            if eval_g(spec, x, y, z).is_zero() {
                out.push(XPoint { x, y, z });
            }
        }
    }
    out
}

/// All rational points of `X` over `GF(2^m)`, solving `f = 0` as a quadratic
/// in `z` for each `(x, y)` and filtering by `g = 0`.
pub fn x_points(spec: &FieldSpec, budget: Budget) -> Result<XPointSet> {
    budget.check("X point enumeration", spec.m(), 14, 16, x_points_cost)?;
    let mut points: Vec<XPoint> = (0..spec.q())
        .into_par_iter()
        .flat_map_iter(|x| points_above(spec, FieldElem(x)))
        .collect();
    points.sort_unstable();
    let good_count = points.iter().filter(|p| p.is_good()).count();
    Ok(XPointSet {
        m: spec.m(),
        points,
        good_count,
    })
}

/// Cubic-time scan over all `(x, y, z)`; the reference for [`x_points`].
pub fn x_points_brute(spec: &FieldSpec) -> Result<XPointSet> {
    if spec.m() > 7 {
        return Err(Error::BudgetExceeded {
            what: "brute-force X point scan",
            m: spec.m(),
            cost: 1u128 << (3 * spec.m()),
            limit: 1 << 21,
            flag: "a smaller m (hard limit)",
        });
    }
    let mut points = Vec::new();
    for x in spec.elements() {
        for y in spec.elements() {
            for z in spec.elements() {
                let p = XPoint { x, y, z };
                if p.on_curve(spec) {
                    points.push(p);
                }
            }
        }
    }
    let good_count = points.iter().filter(|p| p.is_good()).count();
    Ok(XPointSet {
        m: spec.m(),
        points,
        good_count,
    })
}

/// Support `{1, x, y, z, w}` of the weight-5 codeword of `C` attached to a good point.
///
/// The three parity checks `Σ v = 0`, `Σ v³ = 0`, `Σ v⁻¹ = 0` are verified
/// before returning.
pub fn weight5_codeword_from_point(spec: &FieldSpec, p: &XPoint) -> Result<[FieldElem; 5]> {
    if !p.on_curve(spec) {
        return Err(Error::InvalidArgument(format!("{p:?} is not on X")));
    }
    if !p.is_good() {
        return Err(Error::InvalidArgument(format!(
            "{p:?} is degenerate: 0, 1, x, y, z, 1+x+y+z are not distinct"
        )));
    }
    let support = [FieldElem::ONE, p.x, p.y, p.z, p.w()];
    let mut sums = [FieldElem::ZERO; 3];
    for &v in &support {
        sums[0] += v;
        sums[1] += spec.pow(v, 3)?;
        sums[2] += spec.inv(v)?;
    }
    if sums.iter().any(|s| !s.is_zero()) {
        return Err(Error::Consistency(format!(
            "parity checks fail for support built from {p:?}: {sums:?}"
        )));
    }
    Ok(support)
}

/// The codeword polynomial `Σ x^{log v}` whose coordinates are labelled by `v = α^i`.
pub fn support_to_poly(spec: &FieldSpec, support: &[FieldElem]) -> Result<BinPoly> {
    let exps = support
        .iter()
        .map(|&v| spec.log(v).map(|e| e as usize))
        .collect::<Result<Vec<_>>>()?;
    Ok(BinPoly::from_exponents(exps))
}

/// Formal partial derivatives of `f` and `g`, row-major `[[f_x, f_y, f_z], [g_x, g_y, g_z]]`.
pub fn jacobian_polys() -> [[Poly3; 3]; 2] {
    let (f, g) = (f_poly(), g_poly());
    [
        [f.derivative(0), f.derivative(1), f.derivative(2)],
        [g.derivative(0), g.derivative(1), g.derivative(2)],
    ]
}

/// Whether the 2×3 Jacobian of `(f, g)` has rank < 2 at `p` (all 2×2 minors vanish).
pub fn is_singular(spec: &FieldSpec, jac: &[[Poly3; 3]; 2], p: &XPoint) -> bool {
    let v: Vec<Vec<FieldElem>> = jac
        .iter()
        .map(|row| row.iter().map(|d| d.eval(spec, p.x, p.y, p.z)).collect())
        .collect();
    let minor = |i: usize, j: usize| spec.mul(v[0][i], v[1][j]) + spec.mul(v[0][j], v[1][i]);
    minor(0, 1).is_zero() && minor(0, 2).is_zero() && minor(1, 2).is_zero()
}

/// Points of `X_m` where `X` is singular.
pub fn x_singular_points(spec: &FieldSpec) -> Result<Vec<XPoint>> {
    if spec.m() > 12 {
        return Err(Error::BudgetExceeded {
            what: "singular point search",
            m: spec.m(),
            cost: x_points_cost(spec.m()),
            limit: x_points_cost(12),
            flag: "a smaller m (hard limit)",
        });
    }
    let jac = jacobian_polys();
    let pts = x_points(spec, Budget::DEFAULT)?;
    Ok(pts
        .points
        .into_iter()
        .filter(|p| is_singular(spec, &jac, p))
        .collect())
}

/// Outcome of checking `|N_m - (2^m + 1)| <= 220 √(2^m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeilCheck {
    pub m: u32,
    /// `N_m = |X_m|`.
    pub points: i64,
    /// `N_m - (q + 1)`.
    pub deviation: i64,
    /// `⌊220 √q⌋`; exact for even `m`.
    pub bound: i64,
    pub ok: bool,
    /// `bound - |deviation|`.
    pub margin: i64,
}

/// Compares a point count of `X_m` with the refined Weil bound.
pub fn weil_ap_check(m: u32, points: usize) -> WeilCheck {
    let q = 1i128 << m;
    let deviation = points as i128 - q - 1;
    let bound = isqrt((48_400 * q) as u128) as i128;
    WeilCheck {
        m,
        points: points as i64,
        deviation: deviation as i64,
        bound: bound as i64,
        ok: deviation * deviation <= 48_400 * q,
        margin: (bound - deviation.abs()) as i64,
    }
}

/// Largest integer guaranteed not to exceed `q + 1 - 220 √q`, a lower bound on `N_m`.
pub fn ap_min_points(m: u32) -> i128 {
    let q = 1i128 << m;
    let r = 48_400 * q;
    let ceil = {
        let s = isqrt(r as u128) as i128;
        if s * s == r {
            s
        } else {
            s + 1
        }
    };
    q + 1 - ceil
}

/// Whether the bound alone forces a good point: `q + 1 - 220 √q > 4`.
pub fn ap_bound_forces_good_point(m: u32) -> bool {
    ap_min_points(m) > degenerate_points().len() as i128
}

/// A factor `A(y)·x + B(y)` with coefficients in GF(8), lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearFactor {
    pub a: Vec<FieldElem>,
    pub b: Vec<FieldElem>,
}

/// Outcome of [`linear_x_factor_search`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorSearch {
    pub factor: Option<LinearFactor>,
    /// `8^{deg A + 1} · 8^{deg B + 1}` raw candidate pairs.
    pub search_space: u64,
    /// Pairs actually tested after normalising `A` to be monic.
    pub examined: u64,
}

fn upoly_mul(s: &FieldSpec, p: &[FieldElem], q: &[FieldElem]) -> Vec<FieldElem> {
    if p.is_empty() || q.is_empty() {
        return Vec::new();
    }
    let mut out = vec![FieldElem::ZERO; p.len() + q.len() - 1];
    for (i, &a) in p.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, &b) in q.iter().enumerate() {
            out[i + j] += s.mul(a, b);
        }
    }
    out
}

fn upoly_add_into(acc: &mut Vec<FieldElem>, p: &[FieldElem]) {
    if acc.len() < p.len() {
        acc.resize(p.len(), FieldElem::ZERO);
    }
    for (a, &b) in acc.iter_mut().zip(p) {
        *a += b;
    }
}

fn upoly_degree(p: &[FieldElem]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

/// Searches GF(8)[y] for `A, B` with `A·x + B` dividing the bivariate `poly`.
///
/// `x = B/A` must be a root, i.e. `Σ_i h_i(y) B^i A^{d-i} = 0` where
/// `poly = Σ_i h_i(y) x^i` has `x`-degree `d`. Degrees of `A` and `B` are
/// capped by those of the leading and constant coefficients, which they must
/// divide.
pub fn linear_x_factor_search(poly: &BivariatePoly) -> Result<FactorSearch> {
    if poly.degree_in(2).unwrap_or(0) > 0 {
        return Err(Error::InvalidArgument("polynomial involves z".into()));
    }
    let d = poly
        .degree_in(0)
        .ok_or_else(|| Error::InvalidArgument("zero polynomial".into()))? as usize;
    let f8 = FieldSpec::new(3)?;
    // h_i(y) as coefficient vectors over F8.
    let coeffs: Vec<Vec<FieldElem>> = (0..=d)
        .map(|i| {
            let ci = poly.coeff_of(0, i as u8);
            let dy = ci.degree_in(1).map_or(0, |e| e as usize + 1);
            let mut v = vec![FieldElem::ZERO; dy];
            for t in ci.terms() {
                v[t[1] as usize] = FieldElem::ONE;
            }
            v
        })
        .collect();
    let deg_a = upoly_degree(&coeffs[d]).unwrap_or(0);
    let deg_b = upoly_degree(&coeffs[0]).unwrap_or(0);
    let search_space = 8u64.pow(deg_a as u32 + 1) * 8u64.pow(deg_b as u32 + 1);

    let mut examined = 0u64;
    for da in 0..=deg_a {
        for a_low in 0..8u32.pow(da as u32) {
            let mut a: Vec<FieldElem> = (0..da).map(|k| FieldElem(a_low >> (3 * k) & 7)).collect();
            a.push(FieldElem::ONE);
            let a_pows = powers(&f8, &a, d);
            for b_bits in 0..8u32.pow(deg_b as u32 + 1) {
                examined += 1;
                let b: Vec<FieldElem> = (0..=deg_b)
                    .map(|k| FieldElem(b_bits >> (3 * k) & 7))
                    .collect();
                let b_pows = powers(&f8, &b, d);
                let mut acc = Vec::new();
                for (i, hi) in coeffs.iter().enumerate() {
                    if hi.is_empty() {
                        continue;
                    }
                    let t = upoly_mul(&f8, &upoly_mul(&f8, hi, &b_pows[i]), &a_pows[d - i]);
                    upoly_add_into(&mut acc, &t);
                }
                if upoly_degree(&acc).is_none() {
                    return Ok(FactorSearch {
                        factor: Some(LinearFactor { a, b }),
                        search_space,
                        examined,
                    });
                }
            }
        }
    }
    Ok(FactorSearch {
        factor: None,
        search_space,
        examined,
    })
}

fn powers(s: &FieldSpec, p: &[FieldElem], d: usize) -> Vec<Vec<FieldElem>> {
    let mut out = vec![vec![FieldElem::ONE]];
    for i in 1..=d {
        out.push(upoly_mul(s, &out[i - 1], p));
    }
    out
}

/// Linear-in-`x` factor search for `h` over GF(8).
pub fn h_linear_factor_search() -> Result<FactorSearch> {
    linear_x_factor_search(&h_poly())
}

/// Whether `poly(w, w²) = 0` with `∂x = w` and `∂y = w²` there, for both
/// primitive cube roots of unity `w` (computed inside GF(16) ⊃ GF(4)).
pub fn gf4_smooth_check(poly: &BivariatePoly) -> bool {
    let f16 = FieldSpec::new(4).expect("GF(16) is supported");
    let (px, py) = (poly.derivative(0), poly.derivative(1));
    [5, 10].into_iter().all(|e| {
        let w = f16.alpha_pow(e);
        let w2 = f16.square(w);
        poly.eval2(&f16, w, w2).is_zero()
            && px.eval2(&f16, w, w2) == w
            && py.eval2(&f16, w, w2) == w2
    })
}

pub fn h_gf4_smooth_check() -> bool {
    gf4_smooth_check(&h_poly())
}
