use grpd_core::fixtures::{cyclic_table, discrete, one_object};
use grpd_core::invariants::{pi0, pi1};
use grpd_core::{Category, FinPtSet, FpVect, Matrix, PtMap};
use proptest::prelude::*;

fn pointed_map(src: usize, dst: usize) -> impl Strategy<Value = PtMap> {
    proptest::collection::vec(0..dst, src - 1).prop_map(move |rest| {
        let mut table = vec![0];
        table.extend(rest);
        PtMap::from_indices(dst, &table).unwrap()
    })
}

fn chain(max: usize) -> impl Strategy<Value = (PtMap, PtMap, PtMap)> {
    (1..=max, 1..=max, 1..=max, 1..=max)
        .prop_flat_map(|(a, b, c, d)| (pointed_map(a, b), pointed_map(b, c), pointed_map(c, d)))
}

fn cospan(max: usize) -> impl Strategy<Value = (PtMap, PtMap)> {
    (1..=max, 1..=max, 1..=max).prop_flat_map(|(a, b, c)| (pointed_map(a, c), pointed_map(b, c)))
}

fn matrix(p: u32, rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(0..p as i64, rows * cols).prop_map(move |e| Matrix::new(p, rows, cols, &e).unwrap())
}

fn matrix_chain(p: u32) -> impl Strategy<Value = (Matrix, Matrix, Matrix)> {
    (0..4usize, 0..4usize, 0..4usize, 0..4usize)
        .prop_flat_map(move |(a, b, c, d)| (matrix(p, a, b), matrix(p, b, c), matrix(p, c, d)))
}

proptest! {
    #[test]
    fn pointed_composition_is_associative_and_unital((f, g, h) in chain(6)) {
        let cat = FinPtSet::new();
        let left = cat.compose(&cat.compose(&f, &g).unwrap(), &h).unwrap();
        let right = cat.compose(&f, &cat.compose(&g, &h).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        prop_assert_eq!(cat.compose(&cat.identity(&cat.src(&f)), &f).unwrap(), f.clone());
        prop_assert_eq!(cat.compose(&f, &cat.identity(&cat.dst(&f))).unwrap(), f);
    }

    #[test]
    fn pullback_mediator_on_its_own_legs_is_the_identity((f, g) in cospan(6)) {
        let cat = FinPtSet::new();
        let pb = cat.pullback(&f, &g).unwrap();
        let l = cat.compose(&pb.legs[0], &f).unwrap();
        let r = cat.compose(&pb.legs[1], &g).unwrap();
        prop_assert_eq!(l, r);
        let m = pb.mediate(&cat, &pb.legs.clone()).unwrap();
        prop_assert_eq!(m, cat.identity(&pb.apex));
        // the apex is the set of pairs over equal images
        let count = (0..f.src_size())
            .flat_map(|a| (0..g.src_size()).map(move |b| (a, b)))
            .filter(|&(a, b)| f.at(a) == g.at(b))
            .count();
        prop_assert_eq!(cat.size(&pb.apex), count);
    }

    #[test]
    fn image_factorization_recomposes((f, _, _) in chain(6)) {
        let cat = FinPtSet::new();
        let (q, m) = cat.image_factorization(&f);
        prop_assert!(cat.is_regular_epi(&q));
        prop_assert!(cat.is_mono(&m));
        prop_assert_eq!(cat.compose(&q, &m).unwrap(), f);
    }

    #[test]
    fn coequalizer_identifies_the_pair((f, g) in cospan(5).prop_filter("parallel", |(f, g)| f.src_size() == g.src_size())) {
        let cat = FinPtSet::new();
        let q = cat.coequalizer(&f, &g).unwrap();
        prop_assert!(cat.is_regular_epi(&q));
        prop_assert_eq!(cat.compose(&f, &q).unwrap(), cat.compose(&g, &q).unwrap());
    }

    #[test]
    fn kernel_is_the_preimage_of_the_basepoint((f, _, _) in chain(7)) {
        let cat = FinPtSet::new();
        let k = cat.kernel(&f).unwrap();
        let count = (0..f.src_size()).filter(|&x| f.at(x) == 0).count();
        prop_assert_eq!(cat.size(&k.apex), count);
        prop_assert!(cat.is_mono(&k.legs[0]));
    }

    #[test]
    fn linear_composition_is_associative((p, (f, g, h)) in prop_oneof![Just(2u32), Just(3), Just(5)]
        .prop_flat_map(|p| (Just(p), matrix_chain(p))))
    {
        let cat = FpVect::new(p).unwrap();
        let left = cat.compose(&cat.compose(&f, &g).unwrap(), &h).unwrap();
        let right = cat.compose(&f, &cat.compose(&g, &h).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        // rank-nullity for the left kernel
        let k = cat.kernel(&f).unwrap();
        prop_assert_eq!(cat.size(&k.apex) + f.rank(), f.rows());
        let (q, m) = cat.image_factorization(&f);
        prop_assert_eq!(cat.compose(&q, &m).unwrap(), f);
    }

    #[test]
    fn discrete_groupoids_have_trivial_vertex_groups(n in 1usize..7) {
        let g = discrete(n);
        prop_assert!(g.validate().all_pass());
        prop_assert_eq!(pi0(&g).unwrap().obj.0, n);
        prop_assert_eq!(pi1(&g).unwrap().carrier.0, 1);
    }

    #[test]
    fn one_object_groupoids_have_the_group_as_pi1(n in 1usize..7) {
        let g = one_object(&cyclic_table(n));
        prop_assert!(g.validate().all_pass());
        prop_assert_eq!(pi0(&g).unwrap().obj.0, 1);
        let p1 = pi1(&g).unwrap();
        prop_assert_eq!(p1.carrier.0, n);
        prop_assert!(p1.validate(&g.cat).all_pass());
    }
}
