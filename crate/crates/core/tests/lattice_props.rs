mod common;

use akb::lattice::{
    apply_word, block_invariants, cartan_pair, charge_data, dominant_reduce, dot_reflect, reflect,
    root_as_weight, root_size,
};
use akb::{Context, Multicharge, RootVector, WeightVector};
use common::root_vector;
use proptest::prelude::*;

fn ctx_and_roots() -> impl Strategy<Value = (Context, RootVector, RootVector)> {
    (2usize..=6).prop_flat_map(|ell| (Just(Context::new(ell, 1).unwrap()), root_vector(ell), root_vector(ell)))
}

fn weight(ell: usize) -> impl Strategy<Value = WeightVector> {
    (prop::collection::vec(-5i64..=5, ell), -3i64..=3).prop_map(|(lam, d)| WeightVector::new(lam, d))
}

fn level_r_charge() -> impl Strategy<Value = (Context, Multicharge)> {
    (2usize..=5, 1usize..=3)
        .prop_flat_map(|(ell, r)| (Just(ell), prop::collection::vec(0i64..ell as i64, r)))
        .prop_map(|(ell, s)| {
            let ctx = Context::new(ell, s.len()).unwrap();
            let s = Multicharge::new(&ctx, &s).unwrap();
            (ctx, s)
        })
}

proptest! {
    #[test]
    fn pairing_of_d_with_itself_is_a_sum_of_squares((ctx, d, _) in ctx_and_roots()) {
        let ell = ctx.ell() as i64;
        let squares: i64 = (0..ell).map(|i| (d.at(i) - d.at(i + 1)).pow(2)).sum();
        prop_assert_eq!(cartan_pair(&ctx, &d, &d).unwrap(), squares);
    }

    #[test]
    fn pairing_is_symmetric((ctx, x, y) in ctx_and_roots()) {
        prop_assert_eq!(cartan_pair(&ctx, &x, &y).unwrap(), cartan_pair(&ctx, &y, &x).unwrap());
    }

    #[test]
    fn delta_is_null((ctx, x, _) in ctx_and_roots()) {
        let delta = RootVector::delta(ctx.ell());
        prop_assert_eq!(cartan_pair(&ctx, &delta, &x).unwrap(), 0);
        prop_assert!(root_as_weight(&ctx, &delta).lam.iter().all(|&c| c == 0));
    }

    #[test]
    fn root_as_weight_is_additive((ctx, x, y) in ctx_and_roots()) {
        let sum = root_as_weight(&ctx, &(&x + &y));
        prop_assert_eq!(sum, &root_as_weight(&ctx, &x) + &root_as_weight(&ctx, &y));
    }

    #[test]
    fn reflection_is_an_involution_preserving_level(
        (ell, mu, i) in (2usize..=6).prop_flat_map(|ell| (Just(ell), weight(ell), 0..ell))
    ) {
        let ctx = Context::new(ell, 1).unwrap();
        let once = reflect(&ctx, &mu, i);
        prop_assert_eq!(once.level(), mu.level());
        prop_assert_eq!(reflect(&ctx, &once, i), mu);
    }

    #[test]
    fn reflection_preserves_pairing_of_roots((ctx, x, y) in ctx_and_roots(), i in 0usize..2) {
        // reflecting a root's weight image matches reflecting the root
        let s_x = &x - &RootVector::simple(ctx.ell(), i).scale(root_as_weight(&ctx, &x).lam[i]);
        let s_y = &y - &RootVector::simple(ctx.ell(), i).scale(root_as_weight(&ctx, &y).lam[i]);
        prop_assert_eq!(cartan_pair(&ctx, &s_x, &s_y).unwrap(), cartan_pair(&ctx, &x, &y).unwrap());
        prop_assert_eq!(root_as_weight(&ctx, &s_x), reflect(&ctx, &root_as_weight(&ctx, &x), i));
    }

    #[test]
    fn dominant_reduce_replays(
        (ell, mu) in (2usize..=5).prop_flat_map(|ell| (Just(ell), weight(ell)))
    ) {
        prop_assume!(mu.level() > 0);
        let ctx = Context::new(ell, 1).unwrap();
        let (dominant, word) = dominant_reduce(&ctx, &mu).unwrap();
        prop_assert!(dominant.is_dominant());
        prop_assert_eq!(dominant.level(), mu.level());
        prop_assert_eq!(apply_word(&ctx, &mu, &word), dominant);
    }

    #[test]
    fn block_invariants_shape(
        ((ctx, s), raw) in level_r_charge().prop_flat_map(|(ctx, s)| {
            let ell = ctx.ell();
            (Just((ctx, s)), prop::collection::vec(0i64..=6, ell))
        })
    ) {
        let d = RootVector::new(raw);
        if let Some(inv) = block_invariants(&ctx, &d, &s) {
            prop_assert_eq!(inv.alpha.min_coeff(), 0);
            prop_assert!(inv.k >= 0);
            prop_assert!(inv.lambda_plus.is_dominant());
            prop_assert_eq!(inv.lambda_plus.level(), ctx.r() as i64);
            // the word carries Lambda^s - weight(d) to lambda_plus modulo delta
            let lambda_s = charge_data(&ctx, &s).0;
            let start = &lambda_s - &root_as_weight(&ctx, &d);
            prop_assert_eq!(apply_word(&ctx, &start, &inv.word).lam, inv.lambda_plus.lam.clone());
        }
    }

    #[test]
    fn dot_reflect_is_an_involution(
        ((ctx, s), raw, i) in level_r_charge().prop_flat_map(|(ctx, s)| {
            let ell = ctx.ell();
            (Just((ctx, s)), prop::collection::vec(-4i64..=6, ell), 0..ell)
        })
    ) {
        let d = RootVector::new(raw);
        let once = dot_reflect(&ctx, i, &d, &s);
        prop_assert_eq!(dot_reflect(&ctx, i, &once, &s), d.clone());
        // it acts on Lambda^s - weight(d) by the ordinary reflection
        let lambda_s = charge_data(&ctx, &s).0;
        let before = &lambda_s - &root_as_weight(&ctx, &d);
        let after = &lambda_s - &root_as_weight(&ctx, &once);
        prop_assert_eq!(after.lam, reflect(&ctx, &before, i).lam);
    }

    #[test]
    fn dot_reflect_along_a_word_tracks_dominant_reduce(
        ((ctx, s), raw) in level_r_charge().prop_flat_map(|(ctx, s)| {
            let ell = ctx.ell();
            (Just((ctx, s)), prop::collection::vec(0i64..=6, ell))
        })
    ) {
        let d = RootVector::new(raw);
        if let Some(inv) = block_invariants(&ctx, &d, &s) {
            let end = inv.word.iter().fold(d.clone(), |acc, &i| dot_reflect(&ctx, i, &acc, &s));
            let lambda_s = charge_data(&ctx, &s).0;
            prop_assert_eq!((&lambda_s - &root_as_weight(&ctx, &end)).lam, inv.lambda_plus.lam.clone());
            prop_assert_eq!(end.delta_offset(&inv.alpha), Some(inv.k));
            prop_assert!(root_size(&end) >= 0);
        }
    }
}
