use arcdiag::diagram::FusionOrder;
use arcdiag::expr::{eval_with_arity, print};
use arcdiag::interchange;
use arcdiag::k0::k0_class_of_power;
use arcdiag::oracle::{Oracle, OracleOperator};
use arcdiag::parser::parse;
use arcdiag::sample::Sampler;
use arcdiag::scalar::int;
use arcdiag::views;
use arcdiag::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn presets() -> impl Strategy<Value = Presentation> {
    let preset = prop_oneof![
        Just(Preset::JACOBSON),
        Just(Preset::JacobsonDg { x_degree: 3 }),
        Just(Preset::Leavitt { loops: 2 }),
        Just(Preset::Leavitt { loops: 3 }),
        Just(Preset::QuiverExample1),
    ];
    let field = prop_oneof![Just(Field::Gf2), Just(Field::Rational)];
    (preset, field).prop_map(|(p, f)| Presentation::new(p, f))
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn composition_is_associative(p in presets(), seed: u64, a in prop::array::uniform4(0usize..=2)) {
        let mut r = rng(seed);
        let mut s = Sampler::new(&p, 2);
        let f = s.morphism(&mut r, a[2], a[3], 3, 3);
        let g = s.morphism(&mut r, a[1], a[2], 3, 3);
        let h = s.morphism(&mut r, a[0], a[1], 3, 3);
        let left = p.compose(&p.compose(&f, &g).unwrap(), &h).unwrap();
        let right = p.compose(&f, &p.compose(&g, &h).unwrap()).unwrap();
        prop_assert_eq!(&left, &right);
        let fg = p.compose_with(&f, &g, FusionOrder::RightToLeft).unwrap();
        prop_assert_eq!(fg, p.compose(&f, &g).unwrap());
    }

    #[test]
    fn tensor_is_associative_and_unital(p in presets(), seed: u64, a in prop::array::uniform6(0usize..=2)) {
        let mut r = rng(seed);
        let mut s = Sampler::new(&p, 2);
        let f = s.morphism(&mut r, a[0], a[1], 3, 2);
        let g = s.morphism(&mut r, a[2], a[3], 3, 2);
        let h = s.morphism(&mut r, a[4], a[5], 3, 2);
        let t1 = p.tensor(&p.tensor(&f, &g).unwrap(), &h).unwrap();
        let t2 = p.tensor(&f, &p.tensor(&g, &h).unwrap()).unwrap();
        prop_assert_eq!(t1, t2);
        prop_assert_eq!(p.tensor(&p.identity(0), &f).unwrap(), f.clone());
        prop_assert_eq!(p.tensor(&f, &p.identity(0)).unwrap(), f.clone());
        prop_assert_eq!(p.compose(&p.identity(f.m), &f).unwrap(), f.clone());
        prop_assert_eq!(p.compose(&f, &p.identity(f.n)).unwrap(), f);
    }

    #[test]
    fn interchange_law(p in presets(), seed: u64, a in prop::array::uniform6(0usize..=2)) {
        let mut r = rng(seed);
        let mut s = Sampler::new(&p, 2);
        let f = s.morphism(&mut r, a[0], a[1], 2, 2);
        let f2 = s.homogeneous(&mut r, a[2], a[0], 2);
        let g = s.homogeneous(&mut r, a[3], a[4], 2);
        let g2 = s.morphism(&mut r, a[5], a[3], 2, 2);
        let lhs = p.compose(&p.tensor(&f, &g).unwrap(), &p.tensor(&f2, &g2).unwrap()).unwrap();
        let sign = match (p.degree_of(&g), p.degree_of(&f2)) {
            (Degree::Homogeneous(x), Degree::Homogeneous(y)) => p.field.sign((x * y).rem_euclid(2) == 1),
            _ => int(1),
        };
        let rhs = p.scale(&sign, &p.tensor(&p.compose(&f, &f2).unwrap(), &p.compose(&g, &g2).unwrap()).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn degrees_add(p in presets(), seed: u64, a in prop::array::uniform3(0usize..=2)) {
        let mut r = rng(seed);
        let mut s = Sampler::new(&p, 2);
        let f = s.homogeneous(&mut r, a[1], a[2], 3);
        let g = s.homogeneous(&mut r, a[0], a[1], 3);
        let c = p.compose(&f, &g).unwrap();
        if let (Degree::Homogeneous(x), Degree::Homogeneous(y)) = (p.degree_of(&f), p.degree_of(&g)) {
            if !c.is_zero() {
                prop_assert_eq!(p.degree_of(&c), Degree::Homogeneous(x + y));
            }
            let t = p.tensor(&f, &g).unwrap();
            if !t.is_zero() {
                prop_assert_eq!(p.degree_of(&t), Degree::Homogeneous(x + y));
            }
        }
    }

    #[test]
    fn text_and_json_round_trip(p in presets(), seed: u64, n in 0usize..=3, m in 0usize..=3) {
        let mut r = rng(seed);
        let f = Sampler::new(&p, 3).morphism(&mut r, n, m, 5, 3);
        let back = eval_with_arity(&p, &parse(&print(&p, &f)).unwrap(), n, m).unwrap();
        prop_assert_eq!(&back, &f);
        let text = interchange::to_string(&p, &f);
        let (p2, f2) = interchange::from_str(&text).unwrap();
        prop_assert_eq!((&p2, &f2), (&p, &f));
        prop_assert_eq!(interchange::to_string(&p2, &f2), text);
    }

    #[test]
    fn ideal_is_two_sided(p in presets(), seed: u64, k in 1usize..=3, l in 0usize..=3) {
        let l = l.min(k);
        let mut r = rng(seed);
        let mut s = Sampler::new(&p, 2);
        let f = s.morphism(&mut r, k, k, 3, l);
        let g = s.morphism(&mut r, k, k, 3, k);
        prop_assert!(views::in_ideal(&p.compose(&f, &g).unwrap(), l as i64).unwrap());
        prop_assert!(views::in_ideal(&p.compose(&g, &f).unwrap(), l as i64).unwrap());
    }

    #[test]
    fn alpha_embedding_is_multiplicative(seed: u64, k in 0usize..=2, field in prop_oneof![Just(Field::Gf2), Just(Field::Rational)]) {
        let p = Presentation::new(Preset::JACOBSON, field);
        let mut r = rng(seed);
        let mut s = Sampler::new(&p, 2);
        let f = s.morphism(&mut r, k, k, 3, k);
        let g = s.morphism(&mut r, k, k, 3, k);
        let lhs = views::alpha_embed(&p, &p.compose(&f, &g).unwrap()).unwrap();
        let rhs = p.compose(&views::alpha_embed(&p, &f).unwrap(), &views::alpha_embed(&p, &g).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn skew_map_is_a_homomorphism(seed: u64, k in 1usize..=3, field in prop_oneof![Just(Field::Gf2), Just(Field::Rational)]) {
        let p = Presentation::new(Preset::JACOBSON, field);
        let mut r = rng(seed);
        let mut s = Sampler::new(&p, 3);
        let u = views::project_lk(&s.morphism(&mut r, k, k, 3, k)).unwrap();
        let v = views::project_lk(&s.morphism(&mut r, k, k, 3, k)).unwrap();
        let lhs = views::lk_to_skew(&p, &views::lk_multiply(&p, &u, &v).unwrap()).unwrap();
        let rhs = views::skew_product(&p, &views::lk_to_skew(&p, &u).unwrap(), &views::lk_to_skew(&p, &v).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn idempotents_are_idempotent(k in 1usize..=3, mask in 0u8..8, idx in prop::array::uniform3(0u32..=3)) {
        let p = Presentation::new(Preset::JACOBSON, Field::Rational);
        let set: Vec<usize> = (1..=k).filter(|t| mask & (1 << (t - 1)) != 0).collect();
        let index: Vec<u32> = idx[..set.len()].to_vec();
        let u = views::idempotent_u(&p, &set, &index, k).unwrap();
        prop_assert_eq!(p.compose(&u, &u).unwrap(), u);
    }

    #[test]
    fn k0_is_multiplicative(a in 0u32..6, b in 0u32..6, loops in 2u8..=5) {
        for p in [Presentation::new(Preset::JACOBSON, Field::Gf2), Presentation::new(Preset::Leavitt { loops }, Field::Rational)] {
            let ab = k0_class_of_power(&p, a + b).unwrap();
            let (x, y) = (k0_class_of_power(&p, a).unwrap(), k0_class_of_power(&p, b).unwrap());
            prop_assert_eq!(ab.0, x.0 * y.0);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// The model respects composition and tensor product on several strands,
    /// at truncations small enough to compare pointwise.
    #[test]
    fn model_is_functorial(
        preset in prop_oneof![Just((Preset::JACOBSON, 8)), Just((Preset::Leavitt { loops: 2 }, 5)), Just((Preset::QuiverExample1, 1))],
        field in prop_oneof![Just(Field::Gf2), Just(Field::Rational)],
        seed: u64,
        a in prop::array::uniform3(1usize..=2),
    ) {
        let (preset, trunc) = preset;
        let p = Presentation::new(preset, field);
        let o = Oracle::new(preset, field, trunc);
        let mut r = rng(seed);
        let mut s = Sampler::new(&p, 1);
        let lower = s.morphism(&mut r, a[0], a[1], 3, 2);
        let upper = s.morphism(&mut r, a[1], a[2], 3, 2);
        let engine = o.rep_morphism(&p.compose(&upper, &lower).unwrap()).unwrap();
        let model = OracleOperator::compose(o.rep_morphism(&upper).unwrap(), o.rep_morphism(&lower).unwrap()).unwrap();
        let w = if preset == Preset::QuiverExample1 { 0 } else { 2 };
        prop_assert!(o.equal_on_window(&engine, &model, w).unwrap().equal);

        let f = s.morphism(&mut r, 1, 1, 3, 1);
        let g = s.morphism(&mut r, 1, a[0], 3, 1);
        let engine = o.rep_morphism(&p.tensor(&f, &g).unwrap()).unwrap();
        let model = OracleOperator::tensor(o.rep_morphism(&f).unwrap(), o.rep_morphism(&g).unwrap());
        prop_assert!(o.equal_on_window(&engine, &model, w / 2).unwrap().equal);
    }
}
