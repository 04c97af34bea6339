use proptest::prelude::*;
use stratih_core::euler::{
    chi_c_constructible, ichi_c_direct, ichi_c_stratumwise, ichi_middle_even, intersection_stalk_data, link_ih,
};
use stratih_core::gallery::{self, gallery};
use stratih_core::hopf::{
    multiplicity, nonsingular_radial_exists, verify_poincare_hopf, verify_poincare_hopf_against, Verdict, ZeroDatum,
};
use stratih_core::intersection::ih_dims;
use stratih_core::{ComponentId, Error, StandardPerversity, StratifiedSpace};

const SMALL: [&str; 8] = ["point", "circle", "sphere2", "torus2", "pinched_torus", "susp_torus2", "torus3_2p", "susp_torus3_2p"];

fn sign(n: usize) -> i64 {
    if n.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

#[test]
fn stratumwise_equals_direct() {
    for name in SMALL {
        let s = gallery(name).unwrap();
        for p in StandardPerversity::ALL {
            let p = p.for_dim(s.n());
            let direct = ichi_c_direct(&s, &p, 0).unwrap();
            let report = ichi_c_stratumwise(&s, &p, 0).unwrap();
            assert_eq!(report.total, direct, "{name} {p}");
            assert_eq!(report.terms.len(), s.components().len());
            assert_eq!(report.terms.iter().map(|t| t.contribution).sum::<i64>(), report.total);
        }
    }
}

#[test]
fn stalk_data_reproduces_ichi() {
    for name in SMALL {
        let s = gallery(name).unwrap();
        for p in StandardPerversity::ALL {
            let p = p.for_dim(s.n());
            let data = intersection_stalk_data(&s, &p, 0).unwrap();
            assert_eq!(sign(s.n()) * chi_c_constructible(&data), ichi_c_direct(&s, &p, 0).unwrap(), "{name} {p}");
        }
    }
}

#[test]
fn multiplicities_weight_ichi() {
    for name in SMALL {
        let s = gallery(name).unwrap();
        for p in StandardPerversity::ALL {
            let p = p.for_dim(s.n());
            let weighted: i64 = s.components().iter().map(|c| c.chi_c * multiplicity(&s, &p, c.id, 0).unwrap()).sum();
            assert_eq!(weighted, ichi_c_direct(&s, &p, 0).unwrap(), "{name} {p}");
        }
    }
}

#[test]
fn stratumwise_terms_on_the_suspended_torus() {
    let s = gallery("susp_torus2").unwrap();
    let report = ichi_c_stratumwise(&s, &StandardPerversity::Top.for_dim(3), 0).unwrap();
    assert_eq!(report.total, 2);
    for t in &report.terms {
        if t.dim == 0 {
            assert_eq!((t.link_ih.as_slice(), t.inner, t.contribution), ([1, 2, 1].as_slice(), -1, 1));
        } else {
            assert_eq!(t.contribution, 0);
        }
    }
}

#[test]
fn complementary_multiplicities_at_the_poles() {
    let s = gallery("susp_torus2").unwrap();
    for c in s.components().iter().filter(|c| c.dim == 0) {
        let zero = multiplicity(&s, &StandardPerversity::Zero.for_dim(3), c.id, 0).unwrap();
        let top = multiplicity(&s, &StandardPerversity::Top.for_dim(3), c.id, 0).unwrap();
        assert_eq!((zero, top), (-1, 1));
    }
}

#[test]
fn regular_multiplicity_is_a_sign() {
    for name in ["circle", "sphere2", "susp_torus2"] {
        let s = gallery(name).unwrap();
        let p = StandardPerversity::Zero.for_dim(s.n());
        assert_eq!(multiplicity(&s, &p, ComponentId { stratum: 0, component: 0 }, 0).unwrap(), sign(s.n()));
    }
}

#[test]
fn middle_even_formula() {
    let sphere = gallery("sphere2").unwrap();
    assert_eq!(ichi_middle_even(&sphere, 0).unwrap(), 2);
    let pinched = gallery("pinched_torus").unwrap();
    assert_eq!(ichi_middle_even(&pinched, 0).unwrap(), 2);
    assert!(matches!(ichi_middle_even(&gallery("susp_torus2").unwrap(), 0), Err(Error::Inapplicable(_))));
    // the arcs of the suspended pinched torus are odd-dimensional
    assert!(matches!(ichi_middle_even(&gallery("susp_torus3_2p").unwrap(), 0), Err(Error::Inapplicable(_))));
    for name in ["sphere2", "torus2", "pinched_torus"] {
        let s = gallery(name).unwrap();
        let m = StandardPerversity::LowerMiddle.for_dim(2);
        assert_eq!(ichi_middle_even(&s, 0).unwrap(), ichi_c_stratumwise(&s, &m, 0).unwrap().total, "{name}");
    }
}

#[test]
fn middle_even_on_a_product() {
    // pinched torus x sphere: strata of dimension 4 and 2
    let pinched = gallery("pinched_torus").unwrap();
    let sphere = StratifiedSpace::single_stratum(gallery::sphere2_complex(), 2, "S2").unwrap();
    let s = pinched.product(&sphere).unwrap();
    let m = StandardPerversity::LowerMiddle.for_dim(4);
    let expected = ichi_c_direct(&s, &m, 0).unwrap();
    assert_eq!(expected, 4);
    assert_eq!(ichi_middle_even(&s, 0).unwrap(), expected);
}

#[test]
fn pinched_torus_poincare_hopf() {
    let s = gallery("pinched_torus").unwrap();
    let p = StandardPerversity::Zero.for_dim(2);
    let report = verify_poincare_hopf(&s, &p, &[ZeroDatum::new(1, 0, 1, "pinch")], 0).unwrap();
    assert_eq!((report.ichi, report.sum, report.verdict), (2, 2, Verdict::Equal));
    assert_eq!(report.rows[0].multiplicity, 2);
    assert_eq!(report.rows[0].singular_index, 2);
    let wrong = verify_poincare_hopf(&s, &p, &[], 0).unwrap();
    assert_eq!(wrong.verdict, Verdict::Mismatch { difference: -2 });
}

#[test]
fn sphere_with_one_zero_of_index_two() {
    let s = gallery("sphere2").unwrap();
    let report = verify_poincare_hopf(&s, &StandardPerversity::Zero.for_dim(2), &[ZeroDatum::new(0, 0, 2, "north")], 0).unwrap();
    assert_eq!((report.ichi, report.rows[0].multiplicity, report.sum, report.verdict), (2, 1, 2, Verdict::Equal));
}

#[test]
fn suspended_pinched_torus_poincare_hopf() {
    let s = gallery("susp_torus3_2p").unwrap();
    let zeros = [
        ZeroDatum::new(2, 0, 1, "pole 1"),
        ZeroDatum::new(2, 1, 1, "pole 2"),
        ZeroDatum::new(1, 0, -1, "x2"),
        ZeroDatum::new(1, 1, -1, "x3"),
    ];
    for p in StandardPerversity::ALL {
        let report = verify_poincare_hopf(&s, &p.for_dim(4), &zeros, 0).unwrap();
        assert_eq!(report.verdict, Verdict::Equal, "{p}");
        assert_eq!(report.ichi, 0);
    }
}

#[test]
fn bad_zeros_are_rejected() {
    let s = gallery("pinched_torus").unwrap();
    let p = StandardPerversity::Zero.for_dim(2);
    assert_eq!(
        verify_poincare_hopf(&s, &p, &[ZeroDatum::new(1, 0, 2, "pinch")], 0).unwrap_err(),
        Error::PointIndex { stratum: 1, component: 0, index: 2 }
    );
    assert_eq!(verify_poincare_hopf(&s, &p, &[ZeroDatum::new(7, 0, 1, "")], 0).unwrap_err(), Error::UnknownStratum(7));
    assert_eq!(
        verify_poincare_hopf(&s, &p, &[ZeroDatum::new(1, 3, 1, "")], 0).unwrap_err(),
        Error::UnknownComponent { stratum: 1, component: 3 }
    );
}

#[test]
fn converse_examples() {
    let big = gallery("susp_torus3_2p_x_sphere2").unwrap();
    let d = nonsingular_radial_exists(&big);
    assert!(!d.exists);
    let pole_sphere: Vec<_> = d.witnesses.iter().filter(|w| w.component.stratum == 2).collect();
    assert_eq!(pole_sphere.len(), 2);
    assert!(pole_sphere.iter().all(|w| w.chi_c == 2 && w.dim == 2));
    assert!(nonsingular_radial_exists(&gallery("circle").unwrap()).exists);
    let sphere = nonsingular_radial_exists(&gallery("sphere2").unwrap());
    assert!(!sphere.exists);
    assert_eq!(sphere.witnesses[0].chi_c, 2);
    // odd-dimensional strata only
    let circle = StratifiedSpace::single_stratum(gallery::circle_complex(), 1, "S1").unwrap();
    let torus3 = StratifiedSpace::single_stratum(gallery::torus2_complex(), 2, "T2").unwrap().product(&circle).unwrap();
    assert!(nonsingular_radial_exists(&torus3).exists);
}

#[test]
fn regular_chi_c_balances_the_singular_strata() {
    for name in SMALL {
        let s = gallery(name).unwrap();
        let chi = s.complex().euler_characteristic();
        let singular: i64 = s.components().iter().filter(|c| c.dim < s.n()).map(|c| c.chi_c).sum();
        assert_eq!(s.chi_c_stratum(0).unwrap(), chi - singular, "{name}");
    }
}

#[test]
fn links_do_not_depend_on_the_chosen_simplex() {
    for name in ["susp_torus3_2p", "susp_torus3_2p_x_sphere2"] {
        let s = gallery(name).unwrap();
        for c in s.components().iter().filter(|c| c.dim > 0 && c.dim < s.n()) {
            let reference = s.normal_link_component(c.id).unwrap();
            for p in StandardPerversity::ALL {
                let p = p.for_dim(s.n());
                let expected = link_ih(&s, c, &p, 0).unwrap();
                for sigma in c.top_simplices() {
                    let link = s.link_at(sigma).unwrap();
                    assert_eq!(link.n(), reference.n());
                    assert_eq!(ih_dims(&link, &p.restrict(link.n()), 0).unwrap().dims, expected, "{name} {sigma:?} {p}");
                }
            }
        }
    }
}

#[test]
fn normal_links_are_pseudomanifolds() {
    for name in ["pinched_torus", "susp_torus2", "torus3_2p", "susp_torus3_2p", "susp_torus3_2p_x_sphere2"] {
        let s = gallery(name).unwrap();
        for c in s.components().iter().filter(|c| c.dim < s.n()) {
            let link = s.normal_link_component(c.id).unwrap();
            assert_eq!(link.n(), s.n() - c.dim - 1);
            assert!(link.validate_pseudomanifold().passes(), "{name} {:?}", c.id);
        }
        assert!(matches!(s.normal_link(0), Err(Error::Inapplicable(_))));
    }
}

#[test]
fn product_links_match_factor_links() {
    let base = gallery("susp_torus3_2p").unwrap();
    let big = gallery("susp_torus3_2p_x_sphere2").unwrap();
    for stratum in [1, 2] {
        for p in StandardPerversity::ALL {
            let (a, b) = (base.normal_link(stratum).unwrap(), big.normal_link(stratum).unwrap());
            assert_eq!(a.n(), b.n());
            let small = ih_dims(&a, &p.for_dim(4).restrict(a.n()), 0).unwrap();
            let large = ih_dims(&b, &p.for_dim(6).restrict(b.n()), 0).unwrap();
            assert_eq!(small.dims, large.dims, "{stratum} {p}");
        }
    }
}

#[test]
fn supplied_ichi_is_used() {
    let s = gallery("pinched_torus").unwrap();
    let p = StandardPerversity::Zero.for_dim(2);
    let report = verify_poincare_hopf_against(&s, &p, &[ZeroDatum::new(1, 0, 1, "")], 5, 0).unwrap();
    assert_eq!(report.verdict, Verdict::Mismatch { difference: -3 });
}

fn split(total: i64, parts: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-3i64..4, parts.saturating_sub(1)).prop_map(move |mut v| {
        let rest = total - v.iter().sum::<i64>();
        v.push(rest);
        v
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn verdict_ignores_order(seed in Just(vec![0usize, 1, 2, 3]).prop_shuffle()) {
        let s = gallery("susp_torus3_2p").unwrap();
        let base = [
            ZeroDatum::new(2, 0, 1, "a"),
            ZeroDatum::new(2, 1, 1, "b"),
            ZeroDatum::new(1, 0, -1, "c"),
            ZeroDatum::new(1, 1, -1, "d"),
        ];
        let zeros: Vec<_> = seed.iter().map(|&i| base[i].clone()).collect();
        let p = StandardPerversity::Top.for_dim(4);
        let report = verify_poincare_hopf(&s, &p, &zeros, 0).unwrap();
        prop_assert_eq!(report.verdict, Verdict::Equal);
        prop_assert_eq!(report.sum, 0);
    }

    #[test]
    fn verdict_ignores_splitting(parts in (1usize..4).prop_flat_map(|n| split(-1, n)), arc in 0usize..2) {
        // split the index -1 zero on one arc into several zeros on the same arc
        let s = gallery("susp_torus3_2p").unwrap();
        let mut zeros = vec![
            ZeroDatum::new(2, 0, 1, "a"),
            ZeroDatum::new(2, 1, 1, "b"),
            ZeroDatum::new(1, 1 - arc, -1, "c"),
        ];
        zeros.extend(parts.iter().map(|&i| ZeroDatum::new(1, arc, i, "split")));
        for p in StandardPerversity::ALL {
            let report = verify_poincare_hopf(&s, &p.for_dim(4), &zeros, 0).unwrap();
            prop_assert_eq!(report.verdict, Verdict::Equal);
        }
    }
}
