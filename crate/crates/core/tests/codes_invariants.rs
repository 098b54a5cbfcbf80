use std::collections::BTreeSet;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use curvecodes::binpoly::CodeKind;
use curvecodes::codes::{
    bch_bound, direct_dual_weights_oracle, dual_slice_weight_set, dual_weight_distribution,
    dual_word_weight, enumerate_dual, macwilliams_transform, CyclicCode, DualTriple,
};
use curvecodes::curves::{genus2_point_count, Genus2CurveParams};
use curvecodes::numtheory::{intervals, isqrt};
use curvecodes::{Budget, FieldElem, FieldSpec};

fn spec(m: u32) -> FieldSpec {
    FieldSpec::new(m).unwrap()
}

#[test]
fn weights_are_even_and_inside_i() {
    for m in 5..=8 {
        let s = spec(m);
        let iv = intervals(m).unwrap();
        let q = s.q() as i64;
        // ⌊2√q⌋
        let r = isqrt(4u128 << m) as i64;
        assert_eq!((iv.i_lo, iv.i_hi), (q / 2 - r, q / 2 + r - 1));
        for w in dual_weight_distribution(&s, Budget::DEFAULT)
            .unwrap()
            .weight_set()
        {
            assert_eq!(w % 2, 0, "m={m} w={w}");
            assert!(iv.in_i(w as i64), "m={m} w={w}");
        }
    }
}

#[test]
fn pure_linear_words_have_weight_q_over_two() {
    for m in 5..=8 {
        let s = spec(m);
        for b in s.nonzero() {
            let t = DualTriple {
                a: FieldElem::ZERO,
                b,
                c: FieldElem::ZERO,
            };
            assert_eq!(dual_word_weight(&t, &s), s.q() / 2);
        }
    }
}

#[test]
fn totals_are_q_cubed() {
    for m in 5..=8 {
        let s = spec(m);
        let q = BigUint::from(s.q());
        assert_eq!(
            dual_weight_distribution(&s, Budget::DEFAULT)
                .unwrap()
                .total(),
            &q * &q * &q
        );
    }
}

#[test]
fn enumeration_matches_cyclic_code_oracle() {
    for m in 4..=5 {
        let s = spec(m);
        assert_eq!(
            dual_weight_distribution(&s, Budget::DEFAULT).unwrap(),
            direct_dual_weights_oracle(&s).unwrap()
        );
    }
}

#[test]
fn macwilliams_gives_distance_at_least_five() {
    for m in 5..=8 {
        let s = spec(m);
        let code = CyclicCode::new(CodeKind::C, &s).unwrap();
        assert!(bch_bound(&code.zeros, code.n as u32) >= 5);
        let dual = dual_weight_distribution(&s, Budget::DEFAULT).unwrap();
        let dual_dim = (code.n - code.dimension) as u32;
        let primal = macwilliams_transform(&dual, code.n as u32, dual_dim).unwrap();
        assert!(primal.min_positive_weight().unwrap() >= 5);
        assert_eq!(primal.total(), BigUint::from(1u8) << code.dimension);
        let back = macwilliams_transform(&primal, code.n as u32, code.dimension as u32).unwrap();
        assert_eq!(back, dual);
    }
}

#[test]
fn representatives_have_their_weight() {
    for m in 5..=7 {
        let s = spec(m);
        let e = enumerate_dual(&s, Budget::DEFAULT).unwrap();
        for (w, t) in &e.representatives {
            assert_eq!(dual_word_weight(t, &s), *w);
        }
    }
}

/// `c = 0` slice: the dual of the two-error-correcting BCH code.
#[test]
fn bch_dual_weights() {
    for m in 5..=9 {
        let s = spec(m);
        let mut got = dual_slice_weight_set(&s, |t| t.a.is_zero());
        got.remove(&0);
        let h = 1u32 << (m - 1);
        let expected: BTreeSet<u32> = if m % 2 == 1 {
            let d = 1 << ((m - 1) / 2);
            [h - d, h, h + d].into()
        } else {
            let (d1, d2) = (1 << (m / 2), 1 << (m / 2 - 1));
            [h - d1, h - d2, h, h + d2, h + d1].into()
        };
        assert_eq!(got, expected, "m={m}");
    }
}

/// `c = 0, a ≠ 0`: the Melas dual part. Its weights are `(q - 1 - K)/2`
/// for Kloosterman sums `|K| <= 2√q`, so they fill
/// `[q/2 - √q - 1/2, q/2 + √q - 1/2]`; the range shifted up by one
/// (`± √q + 1/2`) is already violated at `m = 5` by weight 10.
#[test]
fn melas_slice_weights() {
    for m in 5..=8 {
        let s = spec(m);
        let q = s.q() as i64;
        let got = dual_slice_weight_set(&s, |t| t.c.is_zero() && !t.a.is_zero());
        // |2w - (q - 1)| <= 2√q, exactly.
        let inside = |w: i64| (2 * w - q + 1).pow(2) <= 4 * q;
        let inside_shifted = |w: i64| (2 * w - q - 1).pow(2) <= 4 * q;
        for &w in &got {
            assert!(inside(w as i64), "m={m} w={w}");
        }
        if m == 5 {
            assert!(got.contains(&10) && !inside_shifted(10));
        }
        let all_even: BTreeSet<u32> = (0..q)
            .filter(|&w| w % 2 == 0 && inside(w))
            .map(|w| w as u32)
            .collect();
        if m % 2 == 1 {
            assert_eq!(got, all_even, "m={m}");
        } else {
            let missing: Vec<u32> = all_even.difference(&got).copied().collect();
            println!("m={m}: even weights in the Melas range not attained: {missing:?}");
        }
    }
}

#[test]
fn weight_equals_q_minus_half_point_count() {
    let check = |s: &FieldSpec, a: FieldElem, b: FieldElem, c: FieldElem| {
        let w = dual_word_weight(&DualTriple { a, b, c }, s);
        let rec = genus2_point_count(&Genus2CurveParams::new(a, b, c, FieldElem::ZERO), s);
        assert_eq!(w, rec.weight());
        assert_eq!(rec.a1, s.q() as i64 - 1 - 2 * w as i64);
    };
    for m in 3..=6 {
        let s = spec(m);
        for a in s.elements() {
            for b in s.elements() {
                for c in s.elements() {
                    check(&s, a, b, c);
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for m in 7..=9 {
        let s = spec(m);
        for _ in 0..300 {
            let r = |rng: &mut ChaCha8Rng| FieldElem(rng.gen_range(0..s.q()));
            let (a, b, c) = (r(&mut rng), r(&mut rng), r(&mut rng));
            check(&s, a, b, c);
        }
    }
}

#[test]
fn distribution_independent_of_modulus() {
    let a = FieldSpec::with_modulus(6, 0x43).unwrap();
    let b = FieldSpec::with_modulus(6, 0x5b).unwrap();
    assert_eq!(
        dual_weight_distribution(&a, Budget::DEFAULT).unwrap(),
        dual_weight_distribution(&b, Budget::DEFAULT).unwrap()
    );
}

#[test]
fn enumeration_refuses_m9_by_default() {
    let s = spec(9);
    assert!(matches!(
        enumerate_dual(&s, Budget::DEFAULT),
        Err(curvecodes::Error::BudgetExceeded {
            flag: "--allow-expensive",
            ..
        })
    ));
}
