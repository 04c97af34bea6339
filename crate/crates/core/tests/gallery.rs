use stratih_core::euler::{ichi_c_direct, ichi_c_stratumwise};
use stratih_core::gallery::{self, list_gallery};
use stratih_core::hopf::{multiplicity, nonsingular_radial_exists};
use stratih_core::intersection::{alternating_sum, ih_dims, kunneth_manifold_oracle};
use stratih_core::{ComponentId, StandardPerversity};

fn small() -> impl Iterator<Item = gallery::GalleryEntry> {
    list_gallery().into_iter().filter(|e| e.chain_level)
}

#[test]
fn names_are_stable() {
    let names: Vec<_> = gallery::names().collect();
    assert!(names.len() >= 9);
    assert_eq!(
        names,
        [
            "point",
            "circle",
            "sphere2",
            "torus2",
            "pinched_torus",
            "susp_torus2",
            "torus3_2p",
            "susp_torus3_2p",
            "susp_torus3_2p_x_sphere2"
        ]
    );
    assert!(gallery::gallery("nope").is_err());
    assert!(gallery::entry("nope").is_err());
    let pinched = gallery::entry("pinched_torus").unwrap();
    assert!(pinched.expected.ichi.contains(&(StandardPerversity::Zero, 2)));
    let s4 = gallery::entry("susp_torus3_2p").unwrap();
    for p in StandardPerversity::ALL {
        assert!(s4.expected.ichi.contains(&(p, 0)));
    }
}

#[test]
fn every_space_is_a_pseudomanifold() {
    for e in list_gallery() {
        let s = gallery::gallery(e.name).unwrap();
        assert_eq!(s.n(), e.n, "{}", e.name);
        assert_eq!(s.name(), e.name);
        let report = s.validate_pseudomanifold();
        assert!(report.passes(), "{}: {report:?}", e.name);
    }
}

#[test]
fn minimal_triangulations() {
    assert_eq!(gallery::circle_complex().f_vector(), [3, 3]);
    assert_eq!(gallery::sphere2_complex().f_vector(), [4, 6, 4]);
    assert_eq!(gallery::torus2_complex().f_vector(), [9, 27, 18]);
}

#[test]
fn boundary_squares_to_zero() {
    for e in list_gallery() {
        let k = gallery::gallery(e.name).unwrap().complex().clone();
        for d in 2..k.f_vector().len() {
            assert!(k.boundary_matrix(d - 1).mul(&k.boundary_matrix(d)).is_zero(), "{} in degree {d}", e.name);
        }
        assert!(k.chain_complex().unwrap().is_complex() || k.num_simplices() > 20000, "{}", e.name);
    }
}

#[test]
fn homology_cards_and_euler() {
    for e in list_gallery() {
        let k = gallery::gallery(e.name).unwrap().complex().clone();
        let h = k.homology_dims();
        assert_eq!(alternating_sum(&h), k.euler_characteristic(), "{}", e.name);
        if let Some(expected) = e.expected.homology {
            assert_eq!(h, expected, "{}", e.name);
        }
    }
}

#[test]
fn ih_and_ichi_cards() {
    for e in small() {
        let s = gallery::gallery(e.name).unwrap();
        for &(p, dims) in e.expected.ih {
            let got = ih_dims(&s, &p.for_dim(e.n), e.subdivisions).unwrap();
            assert_eq!(got.dims, dims, "{} {p}", e.name);
        }
        for &(p, chi) in e.expected.ichi {
            assert_eq!(ichi_c_direct(&s, &p.for_dim(e.n), e.subdivisions).unwrap(), chi, "{} {p}", e.name);
        }
    }
}

#[test]
fn large_space_cards_by_oracle() {
    let e = gallery::entry("susp_torus3_2p_x_sphere2").unwrap();
    let base = gallery::gallery("susp_torus3_2p").unwrap();
    let sphere = gallery::sphere2_complex().homology_dims();
    for p in StandardPerversity::ALL {
        let x = ih_dims(&base, &p.for_dim(4), 0).unwrap().dims;
        let dims = kunneth_manifold_oracle(&x, &sphere);
        if let Some((_, expected)) = e.expected.ih.iter().find(|(q, _)| *q == p) {
            assert_eq!(dims, *expected, "{p}");
        }
        let chi = e.expected.ichi.iter().find(|(q, _)| *q == p).unwrap().1;
        assert_eq!(alternating_sum(&dims), chi);
    }
    // the stratumwise formula only needs links, which are small
    let s = gallery::gallery(e.name).unwrap();
    for p in StandardPerversity::ALL {
        assert_eq!(ichi_c_stratumwise(&s, &p.for_dim(6), 0).unwrap().total, 0, "{p}");
    }
}

#[test]
fn multiplicity_cards() {
    for e in small() {
        let s = gallery::gallery(e.name).unwrap();
        let comps = s.components();
        for &(stratum, p, m) in e.expected.multiplicities {
            let ids: Vec<ComponentId> = comps.iter().filter(|c| c.id.stratum == stratum).map(|c| c.id).collect();
            assert!(!ids.is_empty());
            for id in ids {
                assert_eq!(multiplicity(&s, &p.for_dim(e.n), id, e.subdivisions).unwrap(), m, "{} {id:?} {p}", e.name);
            }
        }
    }
}

#[test]
fn component_cards() {
    for e in list_gallery() {
        let s = gallery::gallery(e.name).unwrap();
        for c in s.components() {
            let expected = e.expected.component_chi_c.iter().find(|(id, _)| *id == c.id.stratum).unwrap().1;
            assert_eq!(c.chi_c, expected, "{} {:?}", e.name, c.id);
        }
        let total: i64 = s.components().iter().map(|c| c.chi_c).sum();
        assert_eq!(total, s.complex().euler_characteristic(), "{}", e.name);
        assert_eq!(Some(nonsingular_radial_exists(&s).exists), e.expected.nonsingular_field, "{}", e.name);
    }
}

#[test]
fn stratum_layout_of_the_suspended_pinched_torus() {
    let s = gallery::gallery("susp_torus3_2p").unwrap();
    let comps = s.components();
    let count = |stratum| comps.iter().filter(|c| c.id.stratum == stratum).count();
    // the regular part of the twice pinched 3-torus is two copies of T² x (0,1),
    // and suspending keeps them apart
    assert_eq!((count(0), count(1), count(2)), (2, 2, 2));
    let arcs: Vec<_> = comps.iter().filter(|c| c.id.stratum == 1).collect();
    assert!(arcs.iter().all(|c| c.dim == 1 && c.chi_c == -1));
    for c in arcs {
        let link = s.normal_link_component(c.id).unwrap();
        assert_eq!(link.complex().homology_dims(), [2, 4, 2]);
    }
    let poles: Vec<_> = comps.iter().filter(|c| c.id.stratum == 2).collect();
    assert!(poles.iter().all(|c| c.dim == 0 && c.chi_c == 1));
}

#[test]
fn pinched_torus_link_is_two_circles() {
    let s = gallery::gallery("pinched_torus").unwrap();
    let link = s.normal_link(1).unwrap();
    assert_eq!(link.complex().homology_dims(), [2, 2]);
    assert!(link.validate_pseudomanifold().passes());
}
