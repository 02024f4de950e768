use proptest::prelude::*;
use walgebra::affine::{affine_pairing, plus_reduction_hw, vacuum_weight};
use walgebra::rational::{int, rat};
use walgebra::{AffineRealRoot, AffineWeight, ExtendedWeylElement, Rational, RootSystem};

const TYPES: [&str; 5] = ["A1", "A2", "B2", "G2", "A3"];

fn random_element(rs: &RootSystem, picks: &[(usize, i64)], shift: &[i64]) -> ExtendedWeylElement {
    let mut w = ExtendedWeylElement::identity(rs.rank());
    for &(id, n) in picks {
        let root = &rs.roots()[id % rs.roots().len()];
        let r = ExtendedWeylElement::reflection(rs, &AffineRealRoot::new(root.clone(), n)).unwrap();
        w = w.compose(&r);
    }
    let mu: Vec<Rational> = (0..rs.rank())
        .map(|i| {
            let id = rs.simple_root_id(i).unwrap();
            int(shift[i % shift.len()]) * rs.coroot_scale_id(id)
        })
        .collect();
    w.compose(&ExtendedWeylElement::translation(rs, &mu).unwrap())
}

fn weight(rs: &RootSystem, coords: &[(i64, i64)], level: (i64, i64), delta: (i64, i64)) -> AffineWeight {
    let finite = (0..rs.rank()).map(|i| {
        let (n, d) = coords[i % coords.len()];
        rat(n, d)
    });
    AffineWeight::new(finite.collect(), rat(level.0, level.1), rat(delta.0, delta.1))
}

fn frac() -> impl Strategy<Value = (i64, i64)> {
    (-12i64..12, 1i64..7)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn affine_norm_is_invariant(t in 0usize..5, picks in prop::collection::vec((0usize..40, -3i64..4), 0..5),
                                shift in prop::collection::vec(-2i64..3, 1..4),
                                coords in prop::collection::vec(frac(), 1..4), level in frac(), delta in frac()) {
        let rs = RootSystem::from_type_str(TYPES[t]).unwrap();
        let w = random_element(&rs, &picks, &shift);
        let lam = weight(&rs, &coords, level, delta);
        let image = w.apply(&rs, &lam);
        prop_assert_eq!(image.norm_sq_affine(&rs), lam.norm_sq_affine(&rs));
        prop_assert_eq!(image.level(), lam.level());
    }

    #[test]
    fn dot_action_composes(t in 0usize..5, p1 in prop::collection::vec((0usize..40, -3i64..4), 0..4),
                           p2 in prop::collection::vec((0usize..40, -3i64..4), 0..4),
                           shift in prop::collection::vec(-2i64..3, 1..4),
                           coords in prop::collection::vec(frac(), 1..4), level in frac()) {
        let rs = RootSystem::from_type_str(TYPES[t]).unwrap();
        let w1 = random_element(&rs, &p1, &shift);
        let w2 = random_element(&rs, &p2, &[0]);
        let lam = weight(&rs, &coords, level, (0, 1));
        let lhs = w1.compose(&w2).dot_apply(&rs, &lam);
        let rhs = w1.dot_apply(&rs, &w2.dot_apply(&rs, &lam));
        prop_assert_eq!(lhs, rhs);
        prop_assert!(w1.compose(&w1.inverse()).is_identity());
    }

    #[test]
    fn root_action_preserves_pairings(t in 0usize..5, picks in prop::collection::vec((0usize..40, -3i64..4), 0..5),
                                      shift in prop::collection::vec(-2i64..3, 1..4), root in 0usize..40, n in -4i64..5,
                                      coords in prop::collection::vec(frac(), 1..4), level in frac()) {
        let rs = RootSystem::from_type_str(TYPES[t]).unwrap();
        let w = random_element(&rs, &picks, &shift);
        let alpha = AffineRealRoot::new(rs.roots()[root % rs.roots().len()].clone(), n);
        let lam = weight(&rs, &coords, level, (0, 1));
        let lhs = affine_pairing(&rs, &w.apply(&rs, &lam), &w.root_action(&rs, &alpha)).unwrap();
        prop_assert_eq!(lhs, affine_pairing(&rs, &lam, &alpha).unwrap());
    }

    #[test]
    fn plus_reduction_of_vacuum(t in 0usize..5, kappa in frac().prop_filter("noncritical", |k| k.0 != 0)) {
        let rs = RootSystem::from_type_str(TYPES[t]).unwrap();
        let kappa = rat(kappa.0, kappa.1);
        let vac = AffineWeight::at_kappa(&rs, vec![int(0); rs.rank()], &kappa).unwrap();
        prop_assert_eq!(plus_reduction_hw(&rs, &vac), vacuum_weight(&rs, &kappa));
    }
}
