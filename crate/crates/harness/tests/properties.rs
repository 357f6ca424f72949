use grpd_core::classify::classify;
use grpd_core::hlimits::{induce_functor, strong_h_pullback};
use grpd_core::invariants::{pi0, pi1};
use grpd_core::{Category, FinPtSet, InternalFunctor, NatTransformation};
use grpd_harness::generator::{
    random_chain_functor, random_functor, random_functor_into, random_groupoid, rng, Flavor, GeneratorSpec,
};
use grpd_harness::workspace::{Entities, Workspace};
use proptest::prelude::*;

fn small() -> GeneratorSpec {
    GeneratorSpec {
        max_objects: 4,
        max_group_order: 4,
        max_components: 3,
    }
}

fn flavor() -> impl Strategy<Value = Flavor> {
    prop_oneof![
        Just(Flavor::Arbitrary),
        Just(Flavor::Fibration),
        Just(Flavor::Faithful),
        Just(Flavor::Full)
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn generated_groupoids_validate(seed in any::<u64>()) {
        let (shape, g) = random_groupoid(&mut rng(seed), &GeneratorSpec::default());
        prop_assert!(g.validate().all_pass());
        prop_assert_eq!(g.cat.size(&g.b0), shape.objects());
        prop_assert_eq!(g.cat.size(&g.b1), shape.arrows());
        prop_assert_eq!(pi0(&g).unwrap().obj.0, shape.components.len());
        prop_assert_eq!(pi1(&g).unwrap().carrier.0, shape.components[0].1.order());
    }

    #[test]
    fn generation_is_a_function_of_the_seed(seed in any::<u64>(), flavor in flavor()) {
        let a = random_functor(&mut rng(seed), &small(), flavor);
        let b = random_functor(&mut rng(seed), &small(), flavor);
        prop_assert_eq!(a.functor, b.functor);
    }

    #[test]
    fn generated_functors_have_their_flavor(seed in any::<u64>(), flavor in flavor()) {
        let g = random_functor(&mut rng(seed), &GeneratorSpec::default(), flavor);
        prop_assert!(g.functor.validate().all_pass());
        let k = classify(&g.functor).unwrap();
        match flavor {
            Flavor::Arbitrary => {}
            Flavor::Fibration => prop_assert!(k.fibration),
            Flavor::Faithful => prop_assert!(k.faithful),
            Flavor::Full => prop_assert!(k.full),
        }
    }

    #[test]
    fn workspaces_round_trip(seed in any::<u64>(), flavor in flavor()) {
        let g = random_functor(&mut rng(seed), &small(), flavor);
        let mut e = Entities::new(FinPtSet::new());
        e.add_functor("F", &g.functor);
        e.add_transformation("id", &NatTransformation::identity(&g.functor));
        let text = Workspace::from(e).to_json();
        let back = Workspace::parse(&text).unwrap();
        prop_assert_eq!(back.to_json(), text);
        let Workspace::PtSets(e) = back else { panic!("pointed sets") };
        prop_assert_eq!(e.functor("F").unwrap(), &g.functor);
    }

    #[test]
    fn identity_transformations_are_invertible(seed in any::<u64>(), flavor in flavor()) {
        let f = random_functor(&mut rng(seed), &small(), flavor).functor;
        let id = NatTransformation::identity(&f);
        prop_assert!(id.validate().all_pass());
        prop_assert_eq!(id.inverse().unwrap(), id);
    }

    #[test]
    fn mediator_of_the_pullback_cone_is_the_identity(seed in any::<u64>(), flavor in flavor()) {
        let mut r = rng(seed);
        let f = random_functor(&mut r, &GeneratorSpec::tiny(3), flavor);
        let g = random_functor_into(&mut r, &GeneratorSpec::tiny(3), flavor, f.dst_shape.clone());
        let hpb = strong_h_pullback(&f.functor, &g.functor).unwrap();
        let own = induce_functor(&hpb, &hpb.gp, &hpb.fp, &hpb.phi).unwrap();
        prop_assert_eq!(own, InternalFunctor::identity(&hpb.p));
    }

    #[test]
    fn chain_maps_give_linear_functors(seed in any::<u64>(), p in prop_oneof![Just(2u32), Just(3)]) {
        let cat = grpd_core::FpVect::new(p).unwrap();
        let g = random_chain_functor(&mut rng(seed), &cat, 4);
        prop_assert!(g.functor.validate().all_pass());
        prop_assert!(g.functor.src.validate().all_pass());
        let commutes = cat.compose(&g.da, &g.f0).unwrap() == cat.compose(&g.f1, &g.db).unwrap();
        prop_assert!(commutes);
    }
}
