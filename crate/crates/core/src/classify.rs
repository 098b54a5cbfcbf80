//! Which even integers occur as weights of `C⊥`.
//!
//! A weight `w` corresponds to a genus-2 curve with `N = 2(q - w)` points,
//! i.e. trace `a1 = N - q - 1 = q - 1 - 2w`. A weight occurs when some curve
//! of the family has that trace. The Jacobian is either simple, decided by
//! the Maisner–Nart conditions on `(a1, a2)`, or isogenous to a product of a
//! supersingular curve (trace `s`) and an ordinary curve (trace `a`) with
//! `a1 = s + a`, decided by a gluing congruence on `s - a`.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::codes::dual_weight_set;
use crate::error::{Error, Result};
use crate::gf2m::FieldSpec;
use crate::numtheory::{
    ceil_sqrt, intervals, is_perfect_square, square_prime_divisor, two_adic_square, Intervals,
};

/// The Maisner–Nart data for one `(a1, a2)`, with each condition's outcome.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MnWitness {
    pub a1: i64,
    pub a2: i64,
    /// `Δ = a1² - 4 a2 + 8q`.
    pub delta_z: i128,
    /// `δ = (a2 + 2q)² - 4q a1²`.
    pub delta_2adic: i128,
    /// `2|a1|√q - 2q <= a2 <= a1²/4 + 2q`.
    pub range_ok: bool,
    /// `2^{⌈m/2⌉} | a2`.
    pub divisibility_ok: bool,
    /// `Δ` is not a square in Z.
    pub delta_z_nonsquare: bool,
    /// `δ` is not a square in Z2.
    pub delta_2adic_nonsquare: bool,
}

impl MnWitness {
    /// Evaluates every condition for the pair `(a1, a2)` at `q = 2^m`.
    pub fn evaluate(m: u32, a1: i64, a2: i64) -> MnWitness {
        let q = 1i128 << m;
        let (a1w, a2w) = (a1 as i128, a2 as i128);
        let shifted = a2w + 2 * q;
        let delta_2adic = shifted * shifted - 4 * q * a1w * a1w;
        let delta_z = a1w * a1w - 4 * a2w + 8 * q;
        let step = 1i128 << m.div_ceil(2);
        MnWitness {
            a1,
            a2,
            delta_z,
            delta_2adic,
            // Lower end: a2 + 2q >= 2|a1|√q, both sides non-negative.
            range_ok: shifted >= 0 && delta_2adic >= 0 && 4 * a2w <= a1w * a1w + 8 * q,
            divisibility_ok: a2w % step == 0,
            delta_z_nonsquare: !is_perfect_square(delta_z),
            delta_2adic_nonsquare: !two_adic_square(delta_2adic),
        }
    }

    pub fn all_conditions(&self) -> bool {
        self.range_ok
            && self.divisibility_ok
            && self.delta_z_nonsquare
            && self.delta_2adic_nonsquare
    }
}

fn check_a1(m: u32, a1: i64) -> Result<()> {
    if a1 % 2 == 0 {
        return Err(Error::InvalidArgument(format!("a1 = {a1} must be odd")));
    }
    if !(3..=40).contains(&m) {
        return Err(Error::InvalidArgument(format!("m = {m} out of range")));
    }
    Ok(())
}

/// First `a2` (scanning upward from the lower end of the range) meeting all
/// Maisner–Nart conditions for a curve with simple Jacobian and trace `a1`.
pub fn mn_simple_exists(m: u32, a1: i64) -> Result<Option<MnWitness>> {
    check_a1(m, a1)?;
    let q = 1i128 << m;
    let a1w = a1 as i128;
    if a1w * a1w > 16 * q {
        return Ok(None);
    }
    let step = 1i128 << m.div_ceil(2);
    let lower = ceil_sqrt((4 * q * a1w * a1w) as u128) as i128 - 2 * q;
    let mut a2 = lower.div_euclid(step) * step;
    if a2 < lower {
        a2 += step;
    }
    while 4 * a2 <= a1w * a1w + 8 * q {
        let w = MnWitness::evaluate(m, a1, a2 as i64);
        debug_assert!(w.range_ok && w.divisibility_ok);
        if w.all_conditions() {
            return Ok(Some(w));
        }
        a2 += step;
    }
    Ok(None)
}

/// A split Jacobian: supersingular trace `s`, ordinary trace `a`, `a1 = s + a`,
/// glued along `p`-torsion where `p^power | s - a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitWitness {
    pub s: i64,
    pub a: i64,
    pub prime: u64,
    pub power: u32,
}

fn ordinary_trace_ok(q: i128, a: i128) -> bool {
    a % 2 != 0 && a * a <= 4 * q
}

/// Split realisation for even `m` with `s = ±2√q`: needs `a` odd,
/// `|a| <= 2√q` and `s - a` not squarefree.
pub fn split_occurs_even_m(m: u32, a1: i64) -> Result<Option<SplitWitness>> {
    if !m.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!(
            "split criterion with s = ±2√q needs even m, got {m}"
        )));
    }
    check_a1(m, a1)?;
    let q = 1i128 << m;
    let s_abs = 1i64 << (m / 2 + 1);
    for s in [s_abs, -s_abs] {
        let a = a1 - s;
        if !ordinary_trace_ok(q, a as i128) {
            continue;
        }
        if let Some(p) = square_prime_divisor((s - a) as i128) {
            return Ok(Some(SplitWitness {
                s,
                a,
                prime: p,
                power: 2,
            }));
        }
    }
    Ok(None)
}

fn least_odd_prime_factor(n: i128) -> Option<u64> {
    let mut n = n.unsigned_abs();
    while n.is_multiple_of(2) && n > 0 {
        n /= 2;
    }
    if n <= 1 {
        return None;
    }
    let mut p = 3u128;
    while p * p <= n {
        if n.is_multiple_of(p) {
            return Some(p as u64);
        }
        p += 2;
    }
    Some(n as u64)
}

/// Split realisation for odd `m`: `s ∈ {0, ±√(2q)}`, `a` odd with
/// `|a| <= 2√q`, and some odd prime dividing `s - a` (Frobenius is never
/// scalar on the supersingular factor here, so `p`-torsion suffices).
pub fn split_occurs_odd_m(m: u32, a1: i64) -> Result<Option<SplitWitness>> {
    if m.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!(
            "odd-m split criterion called with even m = {m}"
        )));
    }
    check_a1(m, a1)?;
    let q = 1i128 << m;
    let root2q = 1i64 << m.div_ceil(2);
    for s in [0, root2q, -root2q] {
        let a = a1 - s;
        if !ordinary_trace_ok(q, a as i128) {
            continue;
        }
        if let Some(p) = least_odd_prime_factor((s - a) as i128) {
            return Ok(Some(SplitWitness {
                s,
                a,
                prime: p,
                power: 1,
            }));
        }
    }
    Ok(None)
}

/// Split realisation for either parity of `m`.
pub fn split_occurs(m: u32, a1: i64) -> Result<Option<SplitWitness>> {
    if m.is_multiple_of(2) {
        split_occurs_even_m(m, a1)
    } else {
        split_occurs_odd_m(m, a1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WeightStatus {
    InJGuaranteed,
    Split,
    Simple,
    Absent,
}

impl WeightStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            WeightStatus::InJGuaranteed => "in_j_guaranteed",
            WeightStatus::Split => "split",
            WeightStatus::Simple => "simple",
            WeightStatus::Absent => "absent",
        }
    }

    pub fn occurs(self) -> bool {
        self != WeightStatus::Absent
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightVerdict {
    pub weight: i64,
    /// `q - 1 - 2 weight`.
    pub a1: i64,
    pub status: WeightStatus,
    pub split: Option<SplitWitness>,
    pub simple: Option<MnWitness>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    Predicted,
    Bruteforced,
    Both,
}

/// A weight on which prediction and enumeration disagree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub weight: i64,
    pub predicted: bool,
    pub observed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightReport {
    pub m: u32,
    pub intervals: Intervals,
    /// One verdict per even integer of `I`, ascending.
    pub verdicts: Vec<WeightVerdict>,
    pub provenance: Provenance,
    pub mismatches: Vec<Mismatch>,
}

impl WeightReport {
    pub fn occurring(&self) -> BTreeSet<i64> {
        self.verdicts
            .iter()
            .filter(|v| v.status.occurs())
            .map(|v| v.weight)
            .collect()
    }

    /// Occurring weights of `I` that lie outside `J`.
    pub fn occurring_outside_j(&self) -> Vec<i64> {
        self.verdicts
            .iter()
            .filter(|v| v.status.occurs() && !self.intervals.in_j(v.weight))
            .map(|v| v.weight)
            .collect()
    }
}

fn verdict(m: u32, iv: &Intervals, weight: i64) -> Result<WeightVerdict> {
    let q = 1i64 << m;
    let a1 = q - 1 - 2 * weight;
    let split = split_occurs(m, a1)?;
    let simple = mn_simple_exists(m, a1)?;
    let status = if iv.in_j(weight) {
        WeightStatus::InJGuaranteed
    } else if split.is_some() {
        WeightStatus::Split
    } else if simple.is_some() {
        WeightStatus::Simple
    } else {
        WeightStatus::Absent
    };
    Ok(WeightVerdict {
        weight,
        a1,
        status,
        split,
        simple,
    })
}

/// Verdict for every even integer of `I`.
pub fn predict_weight_set(m: u32) -> Result<WeightReport> {
    if m < 5 {
        return Err(Error::InvalidArgument(format!("need m >= 5, got {m}")));
    }
    let iv = intervals(m)?;
    let weights: Vec<i64> = iv.even_weights().collect();
    let mut verdicts = weights
        .par_iter()
        .map(|&w| verdict(m, &iv, w))
        .collect::<Result<Vec<_>>>()?;
    verdicts.sort_by_key(|v| v.weight);
    Ok(WeightReport {
        m,
        intervals: iv,
        verdicts,
        provenance: Provenance::Predicted,
        mismatches: Vec::new(),
    })
}

/// Prediction checked against the enumerated weight set of `C⊥`.
///
/// Any enumerated weight that is odd or outside `I` is reported as a
/// mismatch with `predicted = false`.
pub fn compare_predicted_vs_bruteforce(spec: &FieldSpec, budget: Budget) -> Result<WeightReport> {
    let observed: BTreeSet<i64> = dual_weight_set(spec, budget)?
        .into_iter()
        .map(i64::from)
        .collect();
    compare_against(spec.m(), &observed)
}

/// Prediction checked against an already computed weight set.
pub fn compare_against(m: u32, observed: &BTreeSet<i64>) -> Result<WeightReport> {
    let mut report = predict_weight_set(m)?;
    let predicted = report.occurring();
    let mismatches: Vec<Mismatch> = predicted
        .symmetric_difference(observed)
        .map(|&w| Mismatch {
            weight: w,
            predicted: predicted.contains(&w),
            observed: observed.contains(&w),
        })
        .collect();
    report.provenance = Provenance::Both;
    report.mismatches = mismatches;
    Ok(report)
}

/// One row of the reference weight tables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub m: u32,
    pub i: [i64; 2],
    pub j: [i64; 2],
    /// Occurring weights in `I \ J`.
    pub extras: Vec<i64>,
}

/// Reference rows for `q = 2^6 .. 2^12`.
pub fn expected_table_rows() -> Vec<TableRow> {
    let row = |m, i, j, extras: &[i64]| TableRow {
        m,
        i,
        j,
        extras: extras.to_vec(),
    };
    vec![
        row(6, [16, 47], [19, 44], &[]),
        row(7, [42, 85], [47, 80], &[46, 82, 84]),
        row(8, [96, 159], [100, 155], &[]),
        row(9, [211, 300], [219, 292], &[216, 218, 294, 296]),
        row(10, [448, 575], [454, 569], &[452]),
        row(11, [934, 1113], [945, 1102], &[938, 942, 944, 1104, 1106]),
        row(12, [1920, 2175], [1928, 2167], &[1924]),
    ]
}

pub fn table_row(m: u32) -> Result<TableRow> {
    let report = predict_weight_set(m)?;
    let iv = report.intervals;
    Ok(TableRow {
        m,
        i: [iv.i_lo, iv.i_hi],
        j: [iv.j_lo, iv.j_hi],
        extras: report.occurring_outside_j(),
    })
}

/// Predicted rows for `m = 6..=12`.
pub fn reproduce_tables() -> Result<Vec<TableRow>> {
    (6..=12).map(table_row).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mn_m6_a1_31_has_no_witness() {
        assert_eq!(mn_simple_exists(6, 31).unwrap(), None);
        // The only candidate a2 in range is 368, rejected because Δ = 1.
        let w = MnWitness::evaluate(6, 31, 368);
        assert!(w.range_ok && w.divisibility_ok);
        assert_eq!(w.delta_z, 1);
        assert!(!w.delta_z_nonsquare);
    }

    #[test]
    fn mn_m7_a1_35_has_witness() {
        let w = mn_simple_exists(7, 35).unwrap().unwrap();
        assert_eq!(w.a2, 544);
        assert_eq!(w.delta_z, 73);
        assert!(w.all_conditions());
    }

    #[test]
    fn mn_lower_endpoint_gives_square_delta_for_even_m() {
        for m in [6u32, 8, 10, 12] {
            let rq = 1i64 << (m / 2);
            let q = rq * rq;
            for a1 in (-4 * rq + 1..4 * rq).step_by(2) {
                let a2 = 2 * a1.abs() * rq - 2 * q;
                let w = MnWitness::evaluate(m, a1, a2);
                let root = (a1.abs() - 4 * rq) as i128;
                assert_eq!(w.delta_z, root * root);
                assert!(!w.all_conditions());
            }
        }
    }

    #[test]
    fn even_a1_rejected() {
        assert!(mn_simple_exists(6, 30).is_err());
        assert!(split_occurs_even_m(6, 30).is_err());
        assert!(split_occurs_even_m(7, 31).is_err());
        assert!(split_occurs_odd_m(6, 31).is_err());
    }

    #[test]
    fn split_examples() {
        let w = split_occurs_even_m(10, 1023 - 2 * 452).unwrap().unwrap();
        assert_eq!((w.s, w.a, w.prime), (64, 55, 3));
        let w = split_occurs_even_m(12, 4095 - 2 * 1924).unwrap().unwrap();
        assert_eq!((w.s, w.a, w.prime), (128, 119, 3));
        for weight in [16, 18, 46] {
            assert_eq!(
                split_occurs_even_m(6, 63 - 2 * weight).unwrap(),
                None,
                "w={weight}"
            );
        }
    }

    #[test]
    fn odd_split_examples() {
        // Weight 82 at m = 7: a1 = -37 = -16 + (-21), s - a = 5.
        let w = split_occurs_odd_m(7, -37).unwrap().unwrap();
        assert_eq!((w.s, w.a, w.prime), (-16, -21, 5));
        assert_eq!(mn_simple_exists(7, -37).unwrap(), None);
        // Weights 42 and 44 at m = 7 are neither.
        for a1 in [43, 39] {
            assert_eq!(split_occurs_odd_m(7, a1).unwrap(), None);
            assert_eq!(mn_simple_exists(7, a1).unwrap(), None);
        }
    }

    #[test]
    fn a1_is_three_mod_four_for_even_weights() {
        for m in 5..=14 {
            let q = 1i64 << m;
            for w in (0..q).step_by(2) {
                assert_eq!((q - 1 - 2 * w).rem_euclid(4), 3);
            }
        }
    }

    #[test]
    fn witnesses_pass_independent_recheck() {
        for m in 5..=12 {
            let report = predict_weight_set(m).unwrap();
            for v in &report.verdicts {
                if let Some(w) = v.simple {
                    let q = 1i128 << m;
                    let (a1, a2) = (w.a1 as i128, w.a2 as i128);
                    assert_eq!(a1, v.a1 as i128);
                    assert!(a1 % 2 != 0 && a1 * a1 <= 16 * q);
                    assert_eq!(a2 % (1 << m.div_ceil(2)), 0);
                    // 2|a1|√q - 2q <= a2, tested as (a2 + 2q)^2 >= 4 q a1^2.
                    assert!(a2 + 2 * q >= 0 && (a2 + 2 * q).pow(2) >= 4 * q * a1 * a1);
                    assert!(4 * a2 <= a1 * a1 + 8 * q);
                    assert!(!is_perfect_square(a1 * a1 - 4 * a2 + 8 * q));
                    assert!(!two_adic_square((a2 + 2 * q).pow(2) - 4 * q * a1 * a1));
                }
                if let Some(s) = v.split {
                    assert_eq!(s.s + s.a, v.a1);
                    let p = s.prime as i64;
                    assert_eq!((s.s - s.a) % p.pow(s.power), 0);
                }
            }
        }
    }

    #[test]
    fn j_weights_always_occur() {
        for m in 6..=12 {
            let r = predict_weight_set(m).unwrap();
            for v in &r.verdicts {
                if r.intervals.in_j(v.weight) {
                    assert!(v.status.occurs());
                }
                assert_ne!(
                    (v.status, r.intervals.in_j(v.weight)),
                    (WeightStatus::Absent, true)
                );
            }
        }
    }

    #[test]
    fn simple_weights_lie_in_j_for_even_m() {
        for m in [6, 8, 10, 12] {
            let r = predict_weight_set(m).unwrap();
            for v in &r.verdicts {
                if v.simple.is_some() {
                    assert!(r.intervals.in_j(v.weight), "m={m} w={}", v.weight);
                }
            }
        }
    }

    #[test]
    fn tables_reproduce() {
        assert_eq!(reproduce_tables().unwrap(), expected_table_rows());
    }
}
