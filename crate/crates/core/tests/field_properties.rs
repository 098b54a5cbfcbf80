use proptest::prelude::*;

use curvecodes::binpoly::BinPoly;
use curvecodes::FieldSpec;

fn field() -> impl Strategy<Value = (FieldSpec, u32, u32, u32)> {
    (3u32..=20).prop_flat_map(|m| {
        let q = 1u32 << m;
        (Just(FieldSpec::new(m).unwrap()), 0..q, 0..q, 0..q)
    })
}

proptest! {
    #[test]
    fn ring_laws((s, a, b, c) in field()) {
        let (a, b, c) = (s.elem(a).unwrap(), s.elem(b).unwrap(), s.elem(c).unwrap());
        prop_assert_eq!(s.mul(a, b), s.mul(b, a));
        prop_assert_eq!(s.mul(s.mul(a, b), c), s.mul(a, s.mul(b, c)));
        prop_assert_eq!(s.mul(a, b + c), s.mul(a, b) + s.mul(a, c));
        prop_assert_eq!(s.mul(a, b), s.mul_clmul(a, b));
    }

    #[test]
    fn inverse_and_trace((s, a, b, _c) in field()) {
        let (a, b) = (s.elem(a).unwrap(), s.elem(b).unwrap());
        if !a.is_zero() {
            prop_assert_eq!(s.mul(a, s.inv(a).unwrap()), curvecodes::FieldElem::ONE);
        }
        prop_assert_eq!(s.trace(a), s.trace_by_squaring(a));
        prop_assert_eq!(s.trace(a + b), s.trace(a) ^ s.trace(b));
        prop_assert_eq!(s.trace(s.square(a)), s.trace(a));
    }

    #[test]
    fn artin_schreier_roots((s, p, r, _c) in field()) {
        let (p, r) = (s.elem(p).unwrap(), s.elem(r).unwrap());
        let roots = s.solve_artin_schreier(p, r);
        for &z in &roots {
            prop_assert_eq!(s.square(z) + s.mul(p, z), r);
        }
        if !p.is_zero() {
            // Two roots iff Tr(r / p²) = 0.
            let t = s.trace(s.div(r, s.square(p)).unwrap());
            prop_assert_eq!(roots.len(), if t == 0 { 2 } else { 0 });
        } else {
            prop_assert_eq!(roots.len(), 1);
        }
    }

    #[test]
    fn poly_division(a in any::<u64>(), b in 1u64..) {
        let (pa, pb) = (BinPoly::from_bits(a), BinPoly::from_bits(b));
        let (quo, rem) = pa.div_rem(&pb).unwrap();
        prop_assert_eq!(quo.mul(&pb).add(&rem), pa);
        prop_assert!(rem.is_zero() || rem.degree() < pb.degree());
    }
}
