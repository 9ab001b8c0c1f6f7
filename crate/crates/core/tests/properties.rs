use alcove::afweyl::{
    fold_to_alcove, m_lattice_basis, separating_count, AffineWeight, AffineWeylElement, LexPoint,
};
use alcove::demchar::{weyl_dimension, CharPoly, CharacterRecord, CacheKey, DemazureKernel};
use alcove::rational::{frac, q};
use alcove::steinberg::{canonical_decomposition, steinberg_certificate, verify_certificate};
use alcove::{FiniteWeight, RootSystemData};
use proptest::prelude::*;

const LABELS: &[&str] = &[
    "A1^1", "A3^1", "B3^1", "C2^1", "C3^1", "D4^1", "G2^1", "F4^1", "A2^2", "A4^2", "A5^2",
    "D5^2", "D4^3",
];

fn label() -> impl Strategy<Value = RootSystemData> {
    proptest::sample::select(LABELS).prop_map(|l| RootSystemData::from_label_str(l).unwrap())
}

fn point(rank: usize) -> impl Strategy<Value = FiniteWeight> {
    proptest::collection::vec((-20i64..=20, 1i64..=6), rank)
        .prop_map(|v| FiniteWeight::new(v.into_iter().map(|(n, d)| frac(n, d)).collect()))
}

fn with_point() -> impl Strategy<Value = (RootSystemData, FiniteWeight)> {
    label().prop_flat_map(|rs| {
        let n = rs.rank();
        (Just(rs), point(n))
    })
}

fn with_two_points() -> impl Strategy<Value = (RootSystemData, FiniteWeight, FiniteWeight)> {
    label().prop_flat_map(|rs| {
        let n = rs.rank();
        (Just(rs), point(n), point(n))
    })
}

fn with_word() -> impl Strategy<Value = (RootSystemData, Vec<usize>, FiniteWeight)> {
    label().prop_flat_map(|rs| {
        let n = rs.rank();
        (Just(rs), proptest::collection::vec(0..=n, 0..12), point(n))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reflections_are_involutions((rs, x) in with_point(), i in 1usize..=8) {
        let i = 1 + (i - 1) % rs.rank();
        let y = rs.reflect(i, &rs.reflect(i, &x).unwrap()).unwrap();
        prop_assert_eq!(y, x);
    }

    #[test]
    fn form_is_invariant((rs, x, y) in with_two_points(), i in 1usize..=8) {
        let i = 1 + (i - 1) % rs.rank();
        let a = rs.inner_product(&x, &y).unwrap();
        let b = rs.inner_product(&rs.reflect(i, &x).unwrap(), &rs.reflect(i, &y).unwrap()).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn dominant_fold_recovers((rs, x) in with_point()) {
        let (w, d) = rs.fold_to_dominant(&x).unwrap();
        prop_assert!(d.is_dominant());
        prop_assert_eq!(w.act(&d), x);
    }

    #[test]
    fn alcove_fold_is_idempotent((rs, x) in with_point()) {
        let p = LexPoint::perturbed(&rs, x.clone());
        let a = fold_to_alcove(&rs, &p).unwrap();
        let again = fold_to_alcove(&rs, &a.representative).unwrap();
        prop_assert!(again.word.is_empty());
        prop_assert_eq!(a.element.act_point(&a.representative), p);
    }

    #[test]
    fn fold_word_is_reduced((rs, x) in with_point()) {
        let p = LexPoint::perturbed(&rs, x);
        let a = fold_to_alcove(&rs, &p).unwrap();
        let d = separating_count(&rs, &LexPoint::interior(&rs), &p).unwrap();
        prop_assert_eq!(d, a.word.len() as u64);
    }

    #[test]
    fn affine_words_compose((rs, word, x) in with_word(), cut in 0usize..12) {
        let cut = cut.min(word.len());
        let whole = AffineWeylElement::from_word(&rs, &word).unwrap();
        let left = AffineWeylElement::from_word(&rs, &word[..cut]).unwrap();
        let right = AffineWeylElement::from_word(&rs, &word[cut..]).unwrap();
        prop_assert_eq!(left.compose(&rs, &right), whole.clone());
        prop_assert_eq!(whole.inverse(&rs).act(&whole.act(&x)), x);
    }

    #[test]
    fn affine_weight_action_is_a_group_action((rs, word, x) in with_word(), level in 0i64..4, cut in 0usize..12) {
        let cut = cut.min(word.len());
        let a = AffineWeylElement::from_word(&rs, &word[..cut]).unwrap();
        let b = AffineWeylElement::from_word(&rs, &word[cut..]).unwrap();
        let lam = AffineWeight::new(x, level, frac(1, 3));
        let ab = a.compose(&rs, &b).act_weight(&rs, &lam).unwrap();
        let a_b = a.act_weight(&rs, &b.act_weight(&rs, &lam).unwrap()).unwrap();
        prop_assert_eq!(ab, a_b);
    }

    #[test]
    fn translations_add(rs in label(), i in 0usize..8, j in 0usize..8, k in -3i64..=3) {
        let basis = m_lattice_basis(&rs);
        let a = basis[i % basis.len()].scale(&q(k));
        let b = basis[j % basis.len()].clone();
        let ta = AffineWeylElement::translation(&rs, a.clone());
        let tb = AffineWeylElement::translation(&rs, b.clone());
        prop_assert_eq!(ta.compose(&rs, &tb), AffineWeylElement::translation(&rs, &a + &b));
    }

    #[test]
    fn certificates_verify_and_repeat(rs in label(), level in 1i64..=5, seed in proptest::collection::vec(0i64..=10, 8)) {
        let lam = FiniteWeight::from_ints(&seed[..rs.rank()]);
        let c = steinberg_certificate(&rs, level, &lam).unwrap();
        prop_assert_eq!(verify_certificate(&rs, &c), Ok(()));
        prop_assert_eq!(steinberg_certificate(&rs, level, &lam).unwrap(), c);
    }

    #[test]
    fn canonical_decomposition_round_trip(level in 1i64..=5, v in proptest::collection::vec(0i64..=20, 4)) {
        let rs = RootSystemData::from_label_str("D4^1").unwrap();
        let lam = FiniteWeight::from_ints(&v);
        let d = canonical_decomposition(&rs, level, &lam).unwrap();
        prop_assert!(d.validate(&rs, &lam).is_ok());
        prop_assert!(d.remainder.to_ints().unwrap().iter().all(|&r| (0..level).contains(&r)));
    }

    #[test]
    fn demazure_steps_are_idempotent(i in 0usize..=2, level in 0i64..5, a in -6i64..=6, b in -6i64..=6, d in -3i64..=3) {
        let rs = RootSystemData::from_label_str("C2^1").unwrap();
        let k = DemazureKernel::new(&rs).unwrap();
        let f = CharPoly::monomial(level, &[a, b], d);
        let once = k.step(i, &f).unwrap();
        prop_assert_eq!(k.step(i, &once).unwrap(), once);
    }

    #[test]
    fn braid_words_agree(a in 0i64..=3, b in 0i64..=3, extra in 0i64..=2) {
        let rs = RootSystemData::from_label_str("A2^1").unwrap();
        let k = DemazureKernel::new(&rs).unwrap();
        let f = CharPoly::monomial(a + b + extra, &[a, b], 0);
        prop_assert_eq!(k.apply_word(&[1, 2, 1], &f).unwrap(), k.apply_word(&[2, 1, 2], &f).unwrap());
        prop_assert_eq!(k.apply_word(&[0, 1, 0], &f).unwrap(), k.apply_word(&[1, 0, 1], &f).unwrap());
    }

    #[test]
    fn a2_weyl_dimension(a in 0i64..30, b in 0i64..30) {
        let rs = RootSystemData::from_label_str("A2^1").unwrap();
        let d = weyl_dimension(&rs, &FiniteWeight::from_ints(&[a, b])).unwrap();
        let expect = (a + 1) * (b + 1) * (a + b + 2) / 2;
        prop_assert_eq!(d, num_bigint::BigUint::from(expect as u64));
    }

    #[test]
    fn character_records_round_trip(level in 1i64..=3, a in 0i64..=3, b in 0i64..=3) {
        let rs = RootSystemData::from_label_str("A2^1").unwrap();
        let f = alcove::demchar::demazure_character(&rs, level, &FiniteWeight::from_ints(&[a, b])).unwrap();
        let key = CacheKey { label: rs.label, level, lambda: vec![a, b] };
        let rec = CharacterRecord::new(&key, &f);
        let back: CharacterRecord = serde_json::from_str(&serde_json::to_string(&rec).unwrap()).unwrap();
        prop_assert_eq!(back.to_charpoly().unwrap(), f);
    }
}
