use num_complex::Complex64;
use proptest::prelude::*;

use origami_lab::curves::{apply_aut, kappa, sample_points, AutName, CurveParams, ProjPoint2};
use origami_lab::intersect::{base_labeling, branch_set, classify_case, marked_quadruple, GridPoint};
use origami_lab::veech::{act, SL2Word};
use origami_lab::{Origami, Permutation};

fn shuffled(n: usize, keys: &[u32]) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.sort_by_key(|&i| keys[i]);
    p
}

fn origami_strategy() -> impl Strategy<Value = Origami> {
    (1usize..=8)
        .prop_flat_map(|n| {
            let keys = prop::collection::vec(any::<u32>(), n);
            (Just(n), keys.clone(), keys)
        })
        .prop_filter_map("connected", |(n, a, b)| {
            Origami::from_images(shuffled(n, &a), shuffled(n, &b)).ok()
        })
}

fn relabeled_strategy() -> impl Strategy<Value = (Origami, Permutation)> {
    origami_strategy().prop_flat_map(|o| {
        let n = o.n_squares();
        prop::collection::vec(any::<u32>(), n)
            .prop_map(move |k| (o.clone(), Permutation::new(shuffled(n, &k)).unwrap()))
    })
}

fn grid_point() -> impl Strategy<Value = GridPoint> {
    (3usize..=12)
        .prop_flat_map(|n| (0..n, 0..n, Just(n)))
        .prop_map(|(a, b, n)| GridPoint { a, b, n })
        .prop_filter("not 2-torsion", |p| !p.is_two_torsion())
}

fn lambda() -> impl Strategy<Value = Complex64> {
    (-4.0f64..4.0, -4.0f64..4.0)
        .prop_map(|(re, im)| Complex64::new(re, im))
        .prop_filter("away from 0 and 1", |l| l.norm() > 0.1 && (l - 1.0).norm() > 0.1)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn canonical_form_ignores_labels((o, r) in relabeled_strategy()) {
        let o2 = o.relabel(&r);
        prop_assert_eq!(o.canonical_key(), o2.canonical_key());
        prop_assert!(o.is_isomorphic(&o2));
    }

    #[test]
    fn euler_characteristic(o in origami_strategy()) {
        let p = o.singularity_profile();
        let total: usize = p.cone_orders.iter().sum();
        prop_assert_eq!(2 * o.genus(), total + 2);
        prop_assert_eq!(p.vertex_count, o.vertices().len());
        prop_assert_eq!(p.cone_orders.len(), p.vertex_count);
    }

    #[test]
    fn cylinders_fill_the_surface(o in origami_strategy()) {
        prop_assert_eq!(o.horizontal_cylinders().area(), o.n_squares());
        prop_assert_eq!(o.vertical_cylinders().area(), o.n_squares());
    }

    #[test]
    fn sl2_relations(o in origami_strategy()) {
        let s: SL2Word = "S".parse().unwrap();
        let t: SL2Word = "T".parse().unwrap();
        prop_assert!(act(&s.pow(4), &o).is_isomorphic(&o));
        prop_assert!(act(&s.then_apply(&t).pow(6), &o).is_isomorphic(&o));
        let s2 = s.pow(2);
        for g in [&s, &t] {
            prop_assert!(act(&g.then_apply(&s2), &o).is_isomorphic(&act(&s2.then_apply(g), &o)));
        }
        prop_assert_eq!(act(&t, &o).genus(), o.genus());
    }

    #[test]
    fn holonomy_moves_keep_the_branch_set(p in grid_point(), row in any::<bool>(), col in any::<bool>()) {
        let want = marked_quadruple(p).unwrap().sorted();
        let mut l = base_labeling(p).unwrap();
        if row {
            l.add_row_holonomy();
        }
        if col {
            l.add_column_holonomy();
        }
        prop_assert_eq!(branch_set(&l), want);
    }

    #[test]
    fn case_is_rotation_invariant(p in grid_point()) {
        prop_assert_eq!(classify_case(p.rotate90()).unwrap(), classify_case(p).unwrap());
    }

    #[test]
    fn projective_scale_invariance(l in lambda(), seed in any::<u64>(), re in 0.2f64..5.0, arg in 0.0f64..std::f64::consts::TAU) {
        let params = CurveParams::new(l).unwrap();
        let u = Complex64::from_polar(re, arg);
        for p in sample_points(&params, 4, seed) {
            let [x, y, z] = p.scaled_raw(u);
            let q = ProjPoint2::new(x, y, z);
            prop_assert!(q.approx_eq(&p, 1e-9));
            for name in [AutName::Sigma(false), AutName::Rho(true), AutName::K(false)] {
                let a = apply_aut(name, &params, &p).unwrap();
                let b = apply_aut(name, &params, &q).unwrap();
                prop_assert!(a.approx_eq(&b, 1e-8));
            }
            let k1 = kappa(AutName::Tau(false), &params, &p).unwrap();
            let k2 = kappa(AutName::Tau(false), &params, &q).unwrap();
            prop_assert!(k1.approx_eq(&k2, 1e-8));
        }
    }
}
