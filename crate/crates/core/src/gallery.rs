//! The curated spaces, with canonical stratifications and expected values.
//!
//! | name | space | strata (id: name) |
//! |------|-------|-------------------|
//! | `point` | a vertex | 0 |
//! | `circle` | 3-cycle | 0 |
//! | `sphere2` | boundary of the tetrahedron | 0 |
//! | `torus2` | 3 x 3 staircase torus | 0 |
//! | `pinched_torus` | subdivided 2-sphere with two far vertices identified | 0 regular, 1 pinch |
//! | `susp_torus2` | suspension of the torus | 0 regular, 1 poles |
//! | `torus3_2p` | suspension of two disjoint tori | 0 regular, 1 pinch points |
//! | `susp_torus3_2p` | suspension of `torus3_2p` | 0 regular, 1 arcs, 2 poles |
//! | `susp_torus3_2p_x_sphere2` | `susp_torus3_2p` x `sphere2` | 0, 1, 2 as above, times the sphere |

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::perversity::StandardPerversity::{self, *};
use crate::simplicial::SimplicialComplex;
use crate::stratified::{StratifiedSpace, Stratum};

/// Values a gallery space is expected to reproduce.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpectedCard {
    /// Rational Betti numbers of the underlying complex.
    pub homology: Option<&'static [usize]>,
    pub ih: &'static [(StandardPerversity, &'static [usize])],
    pub ichi: &'static [(StandardPerversity, i64)],
    /// `(stratum id, perversity, multiplicity)`, the same on every component.
    pub multiplicities: &'static [(u32, StandardPerversity, i64)],
    /// `(stratum id, χ^c of each component)`.
    pub component_chi_c: &'static [(u32, i64)],
    /// Whether a nonsingular totally radial field exists.
    pub nonsingular_field: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GalleryEntry {
    pub name: &'static str,
    pub description: &'static str,
    pub n: usize,
    /// Subdivisions used when computing intersection homology.
    pub subdivisions: usize,
    /// Whether chain-level intersection homology is run by default.
    pub chain_level: bool,
    pub expected: ExpectedCard,
}

const ALL4_ZERO: &[(StandardPerversity, i64)] = &[(Zero, 0), (LowerMiddle, 0), (UpperMiddle, 0), (Top, 0)];
const NO_IH: &[(StandardPerversity, &[usize])] = &[];
const NO_MULT: &[(u32, StandardPerversity, i64)] = &[];

const ENTRIES: &[GalleryEntry] = &[
    GalleryEntry {
        name: "point",
        description: "a single vertex",
        n: 0,
        subdivisions: 0,
        chain_level: true,
        expected: ExpectedCard {
            homology: Some(&[1]),
            ih: NO_IH,
            ichi: &[],
            multiplicities: NO_MULT,
            component_chi_c: &[(0, 1)],
            nonsingular_field: Some(false),
        },
    },
    GalleryEntry {
        name: "circle",
        description: "circle with three vertices",
        n: 1,
        subdivisions: 0,
        chain_level: true,
        expected: ExpectedCard {
            homology: Some(&[1, 1]),
            ih: NO_IH,
            ichi: &[],
            multiplicities: NO_MULT,
            component_chi_c: &[(0, 0)],
            nonsingular_field: Some(true),
        },
    },
    GalleryEntry {
        name: "sphere2",
        description: "2-sphere as the boundary of the tetrahedron",
        n: 2,
        subdivisions: 0,
        chain_level: true,
        expected: ExpectedCard {
            homology: Some(&[1, 0, 1]),
            ih: &[(Zero, &[1, 0, 1]), (Top, &[1, 0, 1])],
            ichi: &[(Zero, 2), (LowerMiddle, 2), (UpperMiddle, 2), (Top, 2)],
            multiplicities: NO_MULT,
            component_chi_c: &[(0, 2)],
            nonsingular_field: Some(false),
        },
    },
    GalleryEntry {
        name: "torus2",
        description: "2-torus, 3 x 3 staircase triangulation",
        n: 2,
        subdivisions: 0,
        chain_level: true,
        expected: ExpectedCard {
            homology: Some(&[1, 2, 1]),
            ih: &[(Zero, &[1, 2, 1]), (Top, &[1, 2, 1])],
            ichi: ALL4_ZERO,
            multiplicities: NO_MULT,
            component_chi_c: &[(0, 0)],
            nonsingular_field: Some(true),
        },
    },
    GalleryEntry {
        name: "pinched_torus",
        description: "pinched torus: subdivided 2-sphere with two distant vertices identified",
        n: 2,
        subdivisions: 0,
        chain_level: true,
        expected: ExpectedCard {
            homology: Some(&[1, 1, 1]),
            ih: &[(Zero, &[1, 0, 1]), (Top, &[1, 0, 1])],
            ichi: &[(Zero, 2), (LowerMiddle, 2), (UpperMiddle, 2), (Top, 2)],
            multiplicities: &[(1, Zero, 2)],
            component_chi_c: &[(0, 0), (1, 1)],
            nonsingular_field: Some(false),
        },
    },
    GalleryEntry {
        name: "susp_torus2",
        description: "suspension of the 2-torus",
        n: 3,
        subdivisions: 0,
        chain_level: true,
        expected: ExpectedCard {
            homology: Some(&[1, 0, 2, 1]),
            ih: &[(Top, &[1, 0, 2, 1]), (Zero, &[1, 2, 0, 1])],
            ichi: &[(Top, 2), (Zero, -2)],
            multiplicities: &[(1, Zero, -1), (1, Top, 1)],
            component_chi_c: &[(0, 0), (1, 1)],
            nonsingular_field: Some(false),
        },
    },
    GalleryEntry {
        name: "torus3_2p",
        description: "3-torus twice pinched: suspension of two disjoint 2-tori",
        n: 3,
        subdivisions: 0,
        chain_level: true,
        expected: ExpectedCard {
            homology: Some(&[1, 1, 4, 2]),
            ih: &[(Zero, &[2, 4, 0, 2]), (Top, &[2, 0, 4, 2])],
            ichi: &[(Zero, -4), (Top, 4)],
            multiplicities: NO_MULT,
            component_chi_c: &[(0, 0), (1, 1)],
            nonsingular_field: Some(false),
        },
    },
    GalleryEntry {
        name: "susp_torus3_2p",
        description: "suspension of the twice pinched 3-torus",
        n: 4,
        subdivisions: 0,
        chain_level: true,
        expected: ExpectedCard {
            homology: Some(&[1, 0, 1, 4, 2]),
            ih: &[
                (Zero, &[2, 4, 0, 0, 2]),
                (LowerMiddle, &[2, 4, 0, 0, 2]),
                (UpperMiddle, &[2, 0, 0, 4, 2]),
                (Top, &[2, 0, 0, 4, 2]),
            ],
            ichi: ALL4_ZERO,
            multiplicities: &[
                (2, Top, -2),
                (2, UpperMiddle, -2),
                (2, LowerMiddle, 2),
                (2, Zero, 2),
                (1, Top, -2),
                (1, UpperMiddle, -2),
                (1, LowerMiddle, 2),
                (1, Zero, 2),
            ],
            component_chi_c: &[(0, 0), (1, -1), (2, 1)],
            nonsingular_field: Some(false),
        },
    },
    GalleryEntry {
        name: "susp_torus3_2p_x_sphere2",
        description: "product of the suspended twice pinched 3-torus with the 2-sphere",
        n: 6,
        subdivisions: 0,
        chain_level: false,
        expected: ExpectedCard {
            homology: Some(&[1, 0, 2, 4, 3, 4, 2]),
            ih: &[(Zero, &[2, 4, 2, 4, 2, 0, 2]), (Top, &[2, 0, 2, 4, 2, 4, 2])],
            ichi: ALL4_ZERO,
            multiplicities: NO_MULT,
            component_chi_c: &[(0, 0), (1, -2), (2, 2)],
            nonsingular_field: Some(false),
        },
    },
];

/// All gallery entries, in a fixed order.
pub fn list_gallery() -> Vec<GalleryEntry> {
    ENTRIES.to_vec()
}

pub fn entry(name: &str) -> Result<GalleryEntry> {
    ENTRIES.iter().find(|e| e.name == name).cloned().ok_or_else(|| Error::UnknownGallery(name.to_string()))
}

pub fn names() -> impl Iterator<Item = &'static str> {
    ENTRIES.iter().map(|e| e.name)
}

pub fn circle_complex() -> SimplicialComplex {
    SimplicialComplex::build([[0, 1], [1, 2], [0, 2]]).expect("valid")
}

pub fn sphere2_complex() -> SimplicialComplex {
    SimplicialComplex::build([[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]).expect("valid")
}

pub fn torus2_complex() -> SimplicialComplex {
    circle_complex().product(&circle_complex()).expect("valid")
}

fn pinched_torus() -> Result<StratifiedSpace> {
    // identify vertex 0 with the barycentre of the opposite face; their stars in
    // the subdivision are disjoint, so the quotient stays simplicial
    let (sd, carriers) = sphere2_complex().barycentric_subdivision_with_carriers();
    let find = |s: &[u32]| carriers.iter().position(|c| c.as_slice() == s).expect("carrier") as u32;
    let (a, b) = (find(&[0]), find(&[1, 2, 3]));
    let k = sd.quotient_vertices(&[vec![a, b]])?;
    let pinch = a.min(b);
    StratifiedSpace::stratify(k, 2, vec![Stratum::new(0, 2, "regular"), Stratum::new(1, 0, "pinch")], |s| {
        Some(if s == [pinch] { 1 } else { 0 })
    })
}

fn torus3_2p() -> Result<StratifiedSpace> {
    let tt = torus2_complex().disjoint_union(&torus2_complex());
    StratifiedSpace::single_stratum(tt, 2, "regular")?.suspension("pinch points")
}

fn susp_torus3_2p() -> Result<StratifiedSpace> {
    Ok(torus3_2p()?.suspension("poles")?.renamed_stratum(1, "arcs"))
}

/// Builds a gallery space by name.
pub fn gallery(name: &str) -> Result<StratifiedSpace> {
    let space = match name {
        "point" => StratifiedSpace::single_stratum(SimplicialComplex::build([[0]])?, 0, "point")?,
        "circle" => StratifiedSpace::single_stratum(circle_complex(), 1, "circle")?,
        "sphere2" => StratifiedSpace::single_stratum(sphere2_complex(), 2, "sphere")?,
        "torus2" => StratifiedSpace::single_stratum(torus2_complex(), 2, "torus")?,
        "pinched_torus" => pinched_torus()?,
        "susp_torus2" => StratifiedSpace::single_stratum(torus2_complex(), 2, "regular")?.suspension("poles")?,
        "torus3_2p" => torus3_2p()?,
        "susp_torus3_2p" => susp_torus3_2p()?,
        "susp_torus3_2p_x_sphere2" => {
            let sphere = StratifiedSpace::single_stratum(sphere2_complex(), 2, "S2")?;
            susp_torus3_2p()?.product(&sphere)?
        }
        _ => return Err(Error::UnknownGallery(name.to_string())),
    };
    Ok(space.with_name(name))
}
