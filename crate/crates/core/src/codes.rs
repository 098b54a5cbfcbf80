//! The cyclic codes, their duals and everything weight-related.
//!
//! The dual `C⊥` is enumerated through its trace form: the codeword of
//! `(a, b, c)` has coordinate `Tr(a/x + bx + cx³)` at `x ∈ F_q*`. Since the
//! trace is F2-linear, each of the three terms is a fixed bit vector indexed
//! by `x`, and the codeword is the XOR of the three. Weights are popcounts.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::binpoly::{cyclotomic_coset, generator_poly, BinPoly, CodeKind};
use crate::budget::{dual_enumeration_cost, Budget};
use crate::curves::{x_points, XPointSet};
use crate::error::{Error, Result};
use crate::gf2m::{FieldElem, FieldSpec};

/// A binary cyclic code of length `2^m - 1`.
#[derive(Debug, Clone)]
pub struct CyclicCode<'f> {
    pub spec: &'f FieldSpec,
    pub kind: CodeKind,
    pub n: usize,
    /// Union of the cyclotomic cosets of the defining exponents.
    pub zeros: BTreeSet<u32>,
    pub generator: BinPoly,
    pub dimension: usize,
}

impl<'f> CyclicCode<'f> {
    pub fn new(kind: CodeKind, spec: &'f FieldSpec) -> Result<Self> {
        let generator = generator_poly(kind, spec)?;
        let n = spec.order() as usize;
        let zeros = closed_zeros(kind.zeros(), spec.m());
        let deg = generator.degree().unwrap_or(0);
        if deg >= n {
            return Err(Error::Consistency(format!(
                "generator of degree {deg} leaves no room in length {n}"
            )));
        }
        Ok(CyclicCode {
            spec,
            kind,
            n,
            zeros,
            generator,
            dimension: n - deg,
        })
    }

    /// Whether the polynomial is a codeword (the generator divides it).
    pub fn contains(&self, word: &BinPoly) -> Result<bool> {
        if word.degree().is_some_and(|d| d >= self.n) {
            return Ok(false);
        }
        self.generator.divides(word)
    }

    /// Generator of the dual code: the reciprocal of `(x^n - 1) / g(x)`.
    pub fn dual_generator(&self) -> Result<BinPoly> {
        let (h, r) = BinPoly::x_n_minus_1(self.n).div_rem(&self.generator)?;
        if !r.is_zero() {
            return Err(Error::Consistency(
                "generator does not divide x^n - 1".into(),
            ));
        }
        Ok(h.reciprocal())
    }
}

/// Union of the cyclotomic cosets of `exps` modulo `2^m - 1`.
pub fn closed_zeros(exps: &[i64], m: u32) -> BTreeSet<u32> {
    exps.iter()
        .flat_map(|&i| cyclotomic_coset(i, m).members)
        .collect()
}

/// `1 +` the longest run of cyclically consecutive exponents in `zeros`.
pub fn bch_bound(zeros: &BTreeSet<u32>, n: u32) -> u32 {
    if zeros.len() as u32 >= n {
        return n + 1;
    }
    let mut best = 0;
    for &start in zeros {
        // Only begin at the first element of a run.
        if zeros.contains(&((start + n - 1) % n)) {
            continue;
        }
        let mut len = 0;
        while zeros.contains(&((start + len) % n)) {
            len += 1;
        }
        best = best.max(len);
    }
    best + 1
}

/// Coefficients `(a, b, c)` of a dual codeword `(Tr(a/x + bx + cx³))_x`.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize,
)]
pub struct DualTriple {
    pub a: FieldElem,
    pub b: FieldElem,
    pub c: FieldElem,
}

impl DualTriple {
    pub fn new(a: u32, b: u32, c: u32) -> Self {
        DualTriple {
            a: FieldElem(a),
            b: FieldElem(b),
            c: FieldElem(c),
        }
    }
}

/// Weight of one dual codeword, evaluated coordinate by coordinate.
pub fn dual_word_weight(t: &DualTriple, spec: &FieldSpec) -> u32 {
    spec.nonzero()
        .filter(|&x| {
            let inv = spec.inv(x).expect("x is nonzero");
            let x3 = spec.mul(spec.square(x), x);
            spec.trace(spec.mul(t.a, inv) + spec.mul(t.b, x) + spec.mul(t.c, x3)) == 1
        })
        .count() as u32
}

/// Exact weight distribution of a binary code of length `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightDistribution {
    pub n: u32,
    /// Weight to number of codewords; zero counts are never stored.
    pub counts: BTreeMap<u32, BigUint>,
}

impl WeightDistribution {
    pub fn new(n: u32) -> Self {
        WeightDistribution {
            n,
            counts: BTreeMap::new(),
        }
    }

    pub fn from_counts<I: IntoIterator<Item = (u32, u64)>>(n: u32, counts: I) -> Self {
        let mut d = WeightDistribution::new(n);
        for (w, c) in counts {
            d.add(w, BigUint::from(c));
        }
        d
    }

    pub fn add(&mut self, w: u32, c: BigUint) {
        if c.is_zero() {
            return;
        }
        *self.counts.entry(w).or_default() += c;
    }

    pub fn count(&self, w: u32) -> BigUint {
        self.counts.get(&w).cloned().unwrap_or_default()
    }

    pub fn total(&self) -> BigUint {
        self.counts.values().sum()
    }

    /// Nonzero weights that occur.
    pub fn weight_set(&self) -> BTreeSet<u32> {
        self.counts.keys().copied().filter(|&w| w > 0).collect()
    }

    pub fn min_positive_weight(&self) -> Option<u32> {
        self.weight_set().into_iter().next()
    }
}

/// Per-coordinate trace vectors packed as bitsets over `x ∈ F_q*`.
struct TraceTables {
    words: usize,
    /// `inv[a]` has bit `x - 1` set iff `Tr(a/x) = 1`.
    inv: Vec<u64>,
    lin: Vec<u64>,
    cube: Vec<u64>,
}

impl TraceTables {
    fn new(spec: &FieldSpec) -> Self {
        let q = spec.q() as usize;
        let words = (q - 1).div_ceil(64);
        let mut t = TraceTables {
            words,
            inv: vec![0; q * words],
            lin: vec![0; q * words],
            cube: vec![0; q * words],
        };
        let xs: Vec<(FieldElem, FieldElem, FieldElem)> = spec
            .nonzero()
            .map(|x| {
                let x3 = spec.mul(spec.square(x), x);
                (x, spec.inv(x).expect("x is nonzero"), x3)
            })
            .collect();
        for v in spec.elements() {
            let base = v.bits() as usize * words;
            for (j, &(x, inv, x3)) in xs.iter().enumerate() {
                let bit = 1u64 << (j % 64);
                let w = base + j / 64;
                if spec.trace(spec.mul(v, inv)) == 1 {
                    t.inv[w] |= bit;
                }
                if spec.trace(spec.mul(v, x)) == 1 {
                    t.lin[w] |= bit;
                }
                if spec.trace(spec.mul(v, x3)) == 1 {
                    t.cube[w] |= bit;
                }
            }
        }
        t
    }

    fn row<'a>(&self, table: &'a [u64], v: u32) -> &'a [u64] {
        let s = v as usize * self.words;
        &table[s..s + self.words]
    }
}

/// Distribution of `C⊥` together with the first triple seen for each weight
/// in `(c, b, a)` lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualEnumeration {
    pub m: u32,
    pub distribution: WeightDistribution,
    pub representatives: BTreeMap<u32, DualTriple>,
}

#[derive(Clone)]
struct Partial {
    counts: Vec<u64>,
    first: Vec<Option<DualTriple>>,
}

impl Partial {
    fn new(q: usize) -> Self {
        Partial {
            counts: vec![0; q],
            first: vec![None; q],
        }
    }

    fn merge(mut self, other: Partial) -> Partial {
        for (c, o) in self.counts.iter_mut().zip(&other.counts) {
            *c += o;
        }
        for (f, o) in self.first.iter_mut().zip(other.first) {
            *f = match (*f, o) {
                (Some(x), Some(y)) => Some(min_cba(x, y)),
                (x, y) => x.or(y),
            };
        }
        self
    }
}

fn min_cba(x: DualTriple, y: DualTriple) -> DualTriple {
    if (x.c, x.b, x.a) <= (y.c, y.b, y.a) {
        x
    } else {
        y
    }
}

/// Enumerates all `q³` triples; `c` outermost (and split across threads),
/// then `b`, then `a`.
pub fn enumerate_dual(spec: &FieldSpec, budget: Budget) -> Result<DualEnumeration> {
    budget.check("dual enumeration", spec.m(), 8, 10, dual_enumeration_cost)?;
    let q = spec.q() as usize;
    let tables = TraceTables::new(spec);
    let words = tables.words;
    let merged = (0..spec.q())
        .into_par_iter()
        .fold(
            || Partial::new(q),
            |mut part, c| {
                let cube = tables.row(&tables.cube, c);
                let mut partial_sum = vec![0u64; words];
                for b in 0..spec.q() {
                    let lin = tables.row(&tables.lin, b);
                    for k in 0..words {
                        partial_sum[k] = cube[k] ^ lin[k];
                    }
                    for a in 0..spec.q() {
                        let inv = tables.row(&tables.inv, a);
                        let w: u32 = inv
                            .iter()
                            .zip(&partial_sum)
                            .map(|(x, y)| (x ^ y).count_ones())
                            .sum();
                        part.counts[w as usize] += 1;
                        if part.first[w as usize].is_none() {
                            part.first[w as usize] = Some(DualTriple::new(a, b, c));
                        }
                    }
                }
                part
            },
        )
        .reduce(|| Partial::new(q), Partial::merge);

    let distribution = WeightDistribution::from_counts(
        spec.order(),
        merged
            .counts
            .iter()
            .enumerate()
            .map(|(w, &c)| (w as u32, c)),
    );
    let representatives = merged
        .first
        .iter()
        .enumerate()
        .filter_map(|(w, t)| t.map(|t| (w as u32, t)))
        .collect();
    Ok(DualEnumeration {
        m: spec.m(),
        distribution,
        representatives,
    })
}

pub fn dual_weight_distribution(spec: &FieldSpec, budget: Budget) -> Result<WeightDistribution> {
    Ok(enumerate_dual(spec, budget)?.distribution)
}

/// Nonzero weights of `C⊥`.
pub fn dual_weight_set(spec: &FieldSpec, budget: Budget) -> Result<BTreeSet<u32>> {
    Ok(dual_weight_distribution(spec, budget)?.weight_set())
}

/// Weights over a slice of triples, e.g. `c = 0, a ≠ 0` (the Melas dual part).
pub fn dual_slice_weight_set<F>(spec: &FieldSpec, keep: F) -> BTreeSet<u32>
where
    F: Fn(&DualTriple) -> bool + Sync,
{
    let tables = TraceTables::new(spec);
    let words = tables.words;
    (0..spec.q())
        .into_par_iter()
        .map(|c| {
            let mut seen = BTreeSet::new();
            let mut acc = vec![0u64; words];
            for b in 0..spec.q() {
                for a in 0..spec.q() {
                    if !keep(&DualTriple::new(a, b, c)) {
                        continue;
                    }
                    let (x, y, z) = (
                        tables.row(&tables.inv, a),
                        tables.row(&tables.lin, b),
                        tables.row(&tables.cube, c),
                    );
                    for k in 0..words {
                        acc[k] = x[k] ^ y[k] ^ z[k];
                    }
                    seen.insert(acc.iter().map(|v| v.count_ones()).sum());
                }
            }
            seen
        })
        .reduce(BTreeSet::new, |mut a, b| {
            a.extend(b);
            a
        })
}

/// Independent route to the distribution of `C⊥`: span the cyclic code
/// generated by the reciprocal check polynomial of `C` and count weights.
pub fn direct_dual_weights_oracle(spec: &FieldSpec) -> Result<WeightDistribution> {
    if spec.m() > 6 {
        return Err(Error::BudgetExceeded {
            what: "direct dual enumeration",
            m: spec.m(),
            cost: 1u128 << (3 * spec.m()),
            limit: 1 << 18,
            flag: "a smaller m (hard limit)",
        });
    }
    let code = CyclicCode::new(CodeKind::C, spec)?;
    let dual_gen = code.dual_generator()?;
    let k = code.n - dual_gen.degree().unwrap_or(0);
    let words = code.n.div_ceil(64);
    let rows: Vec<Vec<u64>> = (0..k)
        .map(|i| {
            let mut r = dual_gen.shift_left(i).words().to_vec();
            r.resize(words, 0);
            r
        })
        .collect();
    let mut counts = vec![0u64; code.n + 1];
    let mut word = vec![0u64; words];
    counts[0] = 1;
    // Gray-code walk through all 2^k combinations.
    for step in 1u64..(1u64 << k) {
        let row = &rows[step.trailing_zeros() as usize];
        for (w, r) in word.iter_mut().zip(row) {
            *w ^= r;
        }
        let wt: u32 = word.iter().map(|w| w.count_ones()).sum();
        counts[wt as usize] += 1;
    }
    Ok(WeightDistribution::from_counts(
        code.n as u32,
        counts.into_iter().enumerate().map(|(w, c)| (w as u32, c)),
    ))
}

/// Krawtchouk values `K_j(i)` for `j = 0..=n`, by the three-term recurrence.
fn krawtchouk_column(n: u32, i: u32) -> Result<Vec<BigInt>> {
    let n_i = BigInt::from(n);
    let shift = BigInt::from(n as i64 - 2 * i as i64);
    let mut col = Vec::with_capacity(n as usize + 1);
    col.push(BigInt::one());
    if n >= 1 {
        col.push(shift.clone());
    }
    for j in 1..n {
        let jb = BigInt::from(j);
        let num: BigInt = &shift * &col[j as usize] - (&n_i - &jb + 1) * &col[j as usize - 1];
        let den: BigInt = jb + 1;
        if !(&num % &den).is_zero() {
            return Err(Error::Consistency(format!(
                "Krawtchouk recurrence not integral at n={n}, i={i}, j={}",
                j + 1
            )));
        }
        col.push(num / den);
    }
    Ok(col)
}

/// Distribution of the dual of a code with distribution `dist` and dimension `dim`.
pub fn macwilliams_transform(
    dist: &WeightDistribution,
    n: u32,
    dim: u32,
) -> Result<WeightDistribution> {
    let size = BigUint::one() << dim;
    if dist.total() != size {
        return Err(Error::InvalidArgument(format!(
            "distribution total {} is not 2^{dim}",
            dist.total()
        )));
    }
    if dist.counts.keys().any(|&w| w > n) {
        return Err(Error::InvalidArgument(format!("weight above length {n}")));
    }
    let mut acc = vec![BigInt::zero(); n as usize + 1];
    for (&i, a_i) in &dist.counts {
        let a_i = BigInt::from(a_i.clone());
        for (j, k) in krawtchouk_column(n, i)?.into_iter().enumerate() {
            acc[j] += &a_i * k;
        }
    }
    let size = BigInt::from(size);
    let mut out = WeightDistribution::new(n);
    for (j, v) in acc.into_iter().enumerate() {
        if v.is_negative() || !(&v % &size).is_zero() {
            return Err(Error::Consistency(format!(
                "MacWilliams coefficient at weight {j} is {v}, not a non-negative multiple of |code|"
            )));
        }
        out.add(j as u32, (v / &size).to_biguint().expect("non-negative"));
    }
    let expected = BigUint::one() << (n - dim);
    if out.total() != expected {
        return Err(Error::Consistency(format!(
            "transformed total {} differs from 2^{}",
            out.total(),
            n - dim
        )));
    }
    Ok(out)
}

/// How a minimum distance was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DistanceMethod {
    /// MacWilliams on the enumerated dual, confirmed by the X-point criterion.
    #[serde(rename = "macwilliams+xpoints")]
    MacWilliamsAndXPoints,
    /// Good points of `X_m`, the BCH bound and the absence of weight 6.
    #[serde(rename = "xpoints+bch")]
    XPointsAndBch,
}

impl DistanceMethod {
    pub fn tag(self) -> &'static str {
        match self {
            DistanceMethod::MacWilliamsAndXPoints => "macwilliams+xpoints",
            DistanceMethod::XPointsAndBch => "xpoints+bch",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MinDistance {
    Exact(u32),
    AtLeast(u32),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinDistanceReport {
    pub m: u32,
    pub distance: MinDistance,
    pub method: DistanceMethod,
    pub good_points: usize,
    /// Number of weight-5 codewords, when the full distribution was computed.
    pub weight5_words: Option<BigUint>,
}

/// Weight-5 codewords implied by a good-point count: each codeword through
/// coordinate 1 gives `4! = 24` ordered `(x, y, z)`, and by cyclicity a
/// fraction `5 / (q - 1)` of all weight-5 codewords pass through it.
pub fn weight5_count_from_good_points(good: usize, q: u32) -> Result<u64> {
    let num = good as u64 * (q as u64 - 1);
    if !num.is_multiple_of(120) {
        return Err(Error::Consistency(format!(
            "good-point count {good} is incompatible with cyclic symmetry"
        )));
    }
    Ok(num / 120)
}

/// Minimum distance of `C`, exactly via MacWilliams when the dual is
/// enumerable and otherwise via the X-point criterion.
pub fn min_distance_c(spec: &FieldSpec, budget: Budget) -> Result<MinDistanceReport> {
    min_distance_c_from(spec, budget, dual_weight_distribution(spec, budget))
}

/// As [`min_distance_c`], with the dual distribution (or the reason it is
/// unavailable) supplied by the caller.
pub fn min_distance_c_from(
    spec: &FieldSpec,
    budget: Budget,
    dual: Result<WeightDistribution>,
) -> Result<MinDistanceReport> {
    let m = spec.m();
    if m < 5 {
        return Err(Error::InvalidArgument(format!("need m >= 5, got {m}")));
    }
    let code = CyclicCode::new(CodeKind::C, spec)?;
    if bch_bound(&code.zeros, code.n as u32) < 5 {
        return Err(Error::Consistency("BCH bound for C fell below 5".into()));
    }
    let pts: XPointSet = x_points(spec, budget)?;
    let criterion_says_five = pts.good_count > 0;

    match dual {
        Ok(dual) => {
            let dual_dim = (code.n - code.dimension) as u32;
            let primal = macwilliams_transform(&dual, code.n as u32, dual_dim)?;
            let d = primal
                .min_positive_weight()
                .ok_or_else(|| Error::Consistency("C has no nonzero codeword".into()))?;
            let a5 = primal.count(5);
            let implied = weight5_count_from_good_points(pts.good_count, spec.q())?;
            if (d == 5) != criterion_says_five || a5 != BigUint::from(implied) {
                return Err(Error::Consistency(format!(
                    "MacWilliams gives d = {d} with {a5} weight-5 words, X_{m} has {} good points",
                    pts.good_count
                )));
            }
            Ok(MinDistanceReport {
                m,
                distance: MinDistance::Exact(d),
                method: DistanceMethod::MacWilliamsAndXPoints,
                good_points: pts.good_count,
                weight5_words: Some(a5),
            })
        }
        Err(Error::BudgetExceeded { .. }) => {
            // No weight 6: an even-weight codeword has zeros α^{-2..4}, so weight >= 8.
            let distance = if criterion_says_five {
                MinDistance::Exact(5)
            } else {
                MinDistance::AtLeast(7)
            };
            Ok(MinDistanceReport {
                m,
                distance,
                method: DistanceMethod::XPointsAndBch,
                good_points: pts.good_count,
                weight5_words: None,
            })
        }
        Err(e) => Err(e),
    }
}

/// Convenience for tests and reports: a `u64` view of a count.
pub fn count_u64(c: &BigUint) -> Option<u64> {
    c.to_u64()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bch_examples() {
        for m in 5..=10 {
            let n = (1u32 << m) - 1;
            let z = closed_zeros(&[1, -1, 3], m);
            assert!(bch_bound(&z, n) >= 5, "m={m}");
            let z0 = closed_zeros(&[0, 1, -1, 3], m);
            assert!(bch_bound(&z0, n) >= 8, "m={m}");
        }
        assert_eq!(bch_bound(&BTreeSet::new(), 31), 1);
        // Runs wrap around n.
        let z: BTreeSet<u32> = [29, 30, 0, 1, 5].into_iter().collect();
        assert_eq!(bch_bound(&z, 31), 5);
        let all: BTreeSet<u32> = (0..7).collect();
        assert_eq!(bch_bound(&all, 7), 8);
    }

    #[test]
    fn dual_word_weight_examples() {
        let s = FieldSpec::new(6).unwrap();
        assert_eq!(dual_word_weight(&DualTriple::default(), &s), 0);
        for b in 1..s.q() {
            assert_eq!(dual_word_weight(&DualTriple::new(0, b, 0), &s), s.q() / 2);
        }
    }

    #[test]
    fn macwilliams_of_full_space_is_trivial() {
        let n = 10u32;
        let mut full = WeightDistribution::new(n);
        let mut binom = BigUint::one();
        for i in 0..=n {
            full.add(i, binom.clone());
            binom = binom * (n - i) / (i + 1);
        }
        let dual = macwilliams_transform(&full, n, n).unwrap();
        assert_eq!(dual, WeightDistribution::from_counts(n, [(0, 1)]));
        let back = macwilliams_transform(&dual, n, 0).unwrap();
        assert_eq!(back, full);
    }

    #[test]
    fn macwilliams_hamming_7() {
        // [7,4] Hamming code: 1 + 7 + 7 + 1; dual simplex code: 1 + 7 x^4.
        let ham = WeightDistribution::from_counts(7, [(0, 1), (3, 7), (4, 7), (7, 1)]);
        let simplex = macwilliams_transform(&ham, 7, 4).unwrap();
        assert_eq!(
            simplex,
            WeightDistribution::from_counts(7, [(0, 1), (4, 7)])
        );
    }

    #[test]
    fn macwilliams_rejects_bad_input() {
        let bad = WeightDistribution::from_counts(7, [(0, 1), (3, 7)]);
        assert!(matches!(
            macwilliams_transform(&bad, 7, 4),
            Err(Error::InvalidArgument(_))
        ));
        // Total is right but the distribution is not a linear code's.
        let fake = WeightDistribution::from_counts(7, [(0, 1), (1, 7)]);
        assert!(matches!(
            macwilliams_transform(&fake, 7, 3),
            Err(Error::Consistency(_))
        ));
    }

    #[test]
    fn dual_generator_is_orthogonal_to_code() {
        for m in 4..=6 {
            let s = FieldSpec::new(m).unwrap();
            let code = CyclicCode::new(CodeKind::C, &s).unwrap();
            let dg = code.dual_generator().unwrap();
            assert_eq!(code.n - dg.degree().unwrap(), 3 * m as usize);
            // u · v = coefficient of x^0 in u(x) v(x^{-1}) mod x^n - 1.
            for i in 0..code.n {
                for j in 0..code.n {
                    let u = code.generator.shift_left(i);
                    let v = dg.shift_left(j);
                    let dot = u
                        .exponents()
                        .iter()
                        .filter(|&&e| e < code.n && v.coeff(e))
                        .count();
                    if u.degree().unwrap() < code.n && v.degree().unwrap() < code.n {
                        assert_eq!(dot % 2, 0, "m={m} i={i} j={j}");
                    }
                }
            }
        }
    }

    #[test]
    fn oracle_budget() {
        let s = FieldSpec::new(7).unwrap();
        assert!(matches!(
            direct_dual_weights_oracle(&s),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn enumeration_budget_refusal_names_flag() {
        let s = FieldSpec::new(9).unwrap();
        let err = dual_weight_set(&s, Budget::DEFAULT).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("--allow-expensive"), "{msg}");
        assert!(
            matches!(err, Error::BudgetExceeded { cost, .. } if cost == dual_enumeration_cost(9))
        );
    }

    #[test]
    fn weight5_from_good_points() {
        assert_eq!(weight5_count_from_good_points(0, 64).unwrap(), 0);
        assert!(weight5_count_from_good_points(1, 64).is_err());
    }
}
