mod common;

use std::collections::BTreeMap;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use vknots::invariants::*;
use vknots::laurent::{Binding, LaurentPoly};
use vknots::moves::{apply_move, enumerate_moves, random_walk, MoveKind};
use vknots::Diagram;

const VARS: [&str; 3] = ["x", "y", "z"];

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-50i64..50, prop::array::uniform3(-4i64..5)), 0..6).prop_map(|terms| {
        let mut p = LaurentPoly::zero(&VARS);
        for (c, e) in terms {
            p.add_term(c, e.to_vec());
        }
        p
    })
}

fn diagram(max_crossings: usize, max_components: usize) -> impl Strategy<Value = Diagram> {
    (any::<u64>(), 0..=max_crossings, 1..=max_components).prop_map(|(seed, n, c)| {
        common::random_diagram(&mut ChaCha8Rng::seed_from_u64(seed), n, c)
    })
}

fn knot(max_crossings: usize) -> impl Strategy<Value = Diagram> {
    diagram(max_crossings, 1)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(a.try_add(&b).unwrap(), b.try_add(&a).unwrap());
        prop_assert_eq!(a.try_mul(&b).unwrap(), b.try_mul(&a).unwrap());
        let ab_c = a.try_mul(&b).unwrap().try_mul(&c).unwrap();
        let a_bc = a.try_mul(&b.try_mul(&c).unwrap()).unwrap();
        prop_assert_eq!(ab_c, a_bc);
        let left = a.try_mul(&b.try_add(&c).unwrap()).unwrap();
        let right = a.try_mul(&b).unwrap().try_add(&a.try_mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        prop_assert!(a.try_sub(&a).unwrap().is_zero());
    }

    #[test]
    fn render_round_trips(a in poly()) {
        let text = a.render();
        prop_assert_eq!(LaurentPoly::parse(&text, &VARS).unwrap(), a.clone());
        prop_assert_eq!(LaurentPoly::from_json(&a.to_json()).unwrap(), a);
    }

    #[test]
    fn render_is_injective(a in poly(), b in poly()) {
        prop_assert_eq!(a.render() == b.render(), a == b);
    }

    #[test]
    fn substitution_at_ones(a in poly()) {
        let ones: BTreeMap<String, Binding> =
            VARS.iter().map(|v| (v.to_string(), Binding::Int(1))).collect();
        let c = a.substitute(&ones).unwrap();
        prop_assert_eq!(c.coefficient(&[]), a.eval_ones());
    }

    #[test]
    fn code_round_trips(d in diagram(8, 3)) {
        // text is canonical up to rotation of each component
        let again: Diagram = d.to_string().parse().unwrap();
        prop_assert_eq!(again.to_string(), d.to_string());
        prop_assert_eq!(again.flat_key(), d.flat_key());
    }

    #[test]
    fn involutions(d in diagram(8, 3)) {
        prop_assert_eq!(d.mirror().mirror(), d.clone());
        for id in d.crossing_ids() {
            let e = d.crossing_change(id).unwrap();
            prop_assert_eq!(e.crossing_change(id).unwrap(), d.clone());
            prop_assert_eq!(e.flat_key(), d.flat_key());
        }
        for i in 0..d.num_components() {
            prop_assert_eq!(d.reverse_component(i).unwrap().reverse_component(i).unwrap(), d.clone());
        }
        prop_assert_eq!(d.relabeled().flat_key(), d.flat_key());
    }

    #[test]
    fn knot_polynomials_telescope(d in knot(8)) {
        prop_assert_eq!(affine_index_poly(&d).unwrap().eval_ones(), 0.into());
        for n in 1..=2 {
            prop_assert_eq!(f_poly(&d, n).unwrap().eval_ones(), 0.into());
            prop_assert_eq!(f_poly_nmk(&d, n, 1, 1).unwrap().eval_ones(), 0.into());
            prop_assert_eq!(tilde_f(&d, n, 1, 1).unwrap().eval_ones(), 0.into());
        }
    }

    #[test]
    fn dwrithe_is_flat(d in knot(8)) {
        for id in d.crossing_ids() {
            let e = d.crossing_change(id).unwrap();
            for n in 1..=3 {
                prop_assert_eq!(dwrithe(&d, n).unwrap(), dwrithe(&e, n).unwrap());
                prop_assert_eq!(dwrithe_nm(&d, n, 1).unwrap(), dwrithe_nm(&e, n, 1).unwrap());
            }
        }
        prop_assert_eq!(dwrithe_nm(&d, 1, 0).unwrap(), 0);
    }

    #[test]
    fn span_symmetries(d in diagram(7, 2).prop_filter("two components", |d| d.num_components() == 2)) {
        let r = d.reorder_components(&[1, 0]).unwrap();
        let both = d.reverse_component(0).unwrap().reverse_component(1).unwrap();
        let (l, lr) = (linking_numbers(&d).unwrap(), linking_numbers(&r).unwrap());
        prop_assert_eq!((l.over, l.under), (lr.under, lr.over));
        prop_assert_eq!(linking_numbers(&both).unwrap().span, l.span);
        for n in 1..=2 {
            for k in -2..=2 {
                prop_assert_eq!(fspan_nk(&r, n, k).unwrap(), -fspan_nk(&d, n, k).unwrap());
                prop_assert_eq!(fspan_nk(&d, n, k).unwrap(), fspan_nk(&d, n, -k).unwrap());
            }
        }
    }

    #[test]
    fn single_moves_preserve_knot_invariants(d in knot(6), pick in any::<prop::sample::Index>()) {
        let moves = enumerate_moves(&d, &MoveKind::ALL);
        prop_assume!(!moves.is_empty());
        let m = pick.get(&moves);
        let e = apply_move(&d, m).unwrap();
        prop_assert_eq!(affine_index_poly(&d).unwrap(), affine_index_poly(&e).unwrap());
        prop_assert_eq!(f_poly(&d, 1).unwrap(), f_poly(&e, 1).unwrap());
        prop_assert_eq!(dwrithe_nm(&d, 1, 1).unwrap(), dwrithe_nm(&e, 1, 1).unwrap());
        prop_assert_eq!(tilde_f(&d, 1, 1, 0).unwrap(), tilde_f(&e, 1, 1, 0).unwrap());
    }

    #[test]
    fn flat_sum_images_survive_walks(d in knot(5), seed in any::<u64>()) {
        let e = random_walk(&d, 8, seed, 8);
        let mut fp = Fingerprinter::default();
        prop_assert_eq!(fp.b_image(&d, 0, true).unwrap(), fp.b_image(&e, 0, true).unwrap());
        prop_assert_eq!(fp.b_image(&d, 0, false).unwrap(), fp.b_image(&e, 0, false).unwrap());
    }

    #[test]
    fn walks_are_deterministic(d in diagram(6, 2), seed in any::<u64>()) {
        prop_assert_eq!(random_walk(&d, 20, seed, 9), random_walk(&d, 20, seed, 9));
    }
}
