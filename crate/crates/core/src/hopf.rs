//! Multiplicities, singular indices and the stratified Poincaré–Hopf check.
//!
//! Vector fields are symbolic: a zero is a stratum component together with the
//! classical index of the field restricted to that stratum. Whether the field
//! is semi-radial is not checked; the zeros are taken as given.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::euler::{ichi_c_direct, link_ih};
use crate::perversity::Perversity;
use crate::simplicial::sign;
use crate::stratified::{ComponentId, StratifiedSpace};

/// Multiplicity of the space at a point of `component`:
/// `Σ_{i=n-p_{n-k}}^{n} (-1)^i dim IH_{i-k-1}(L)` on singular components and
/// `(-1)^n` on regular ones.
pub fn multiplicity(space: &StratifiedSpace, p: &Perversity, component: ComponentId, subdivisions: usize) -> Result<i64> {
    if p.n() != space.n() {
        return Err(Error::DimensionMismatch { expected: space.n(), found: p.n() });
    }
    let n = space.n() as i64;
    let comp = space.component(component)?;
    let k = comp.dim as i64;
    if k == n {
        return Ok(sign(n as usize));
    }
    let link = link_ih(space, &comp, p, subdivisions)?;
    let start = n - p.p((n - k) as usize);
    Ok((start..=n)
        .map(|i| {
            let deg = i - k - 1;
            let rank = if deg >= 0 { link.get(deg as usize).copied().unwrap_or(0) } else { 0 };
            sign(i as usize) * rank as i64
        })
        .sum())
}

/// `multiplicity · index`.
pub fn singular_index(multiplicity: i64, index: i64) -> i64 {
    multiplicity * index
}

/// An isolated zero of a stratified vector field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroDatum {
    pub component: ComponentId,
    /// Index of the field restricted to the stratum. Must be 1 on point strata.
    pub index: i64,
    pub label: String,
}

impl ZeroDatum {
    pub fn new(stratum: u32, component: usize, index: i64, label: impl Into<String>) -> Self {
        ZeroDatum { component: ComponentId { stratum, component }, index, label: label.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PHRow {
    pub zero: ZeroDatum,
    pub chi_c: i64,
    pub multiplicity: i64,
    pub singular_index: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Equal,
    /// `sum of singular indices - Iχ`.
    Mismatch {
        difference: i64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PHReport {
    pub perversity: Perversity,
    pub ichi: i64,
    pub rows: Vec<PHRow>,
    pub sum: i64,
    pub verdict: Verdict,
}

/// Compares `Iχ` (from intersection chains) with the sum of singular indices.
pub fn verify_poincare_hopf(
    space: &StratifiedSpace,
    p: &Perversity,
    zeros: &[ZeroDatum],
    subdivisions: usize,
) -> Result<PHReport> {
    check_zeros(space, zeros)?;
    let ichi = ichi_c_direct(space, p, subdivisions)?;
    verify_poincare_hopf_against(space, p, zeros, ichi, subdivisions)
}

/// As [`verify_poincare_hopf`], with `Iχ` supplied by the caller (for spaces too
/// large for chain-level intersection homology).
pub fn verify_poincare_hopf_against(
    space: &StratifiedSpace,
    p: &Perversity,
    zeros: &[ZeroDatum],
    ichi: i64,
    subdivisions: usize,
) -> Result<PHReport> {
    check_zeros(space, zeros)?;
    let components = space.components();
    let mut mult: BTreeMap<ComponentId, i64> = BTreeMap::new();
    let mut rows = Vec::with_capacity(zeros.len());
    for z in zeros {
        let m = match mult.get(&z.component) {
            Some(m) => *m,
            None => {
                let m = multiplicity(space, p, z.component, subdivisions)?;
                mult.insert(z.component, m);
                m
            }
        };
        let chi_c = components.iter().find(|c| c.id == z.component).map(|c| c.chi_c).expect("checked");
        rows.push(PHRow { zero: z.clone(), chi_c, multiplicity: m, singular_index: singular_index(m, z.index) });
    }
    let sum = rows.iter().map(|r| r.singular_index).sum();
    let verdict = if sum == ichi { Verdict::Equal } else { Verdict::Mismatch { difference: sum - ichi } };
    Ok(PHReport { perversity: p.clone(), ichi, rows, sum, verdict })
}

fn check_zeros(space: &StratifiedSpace, zeros: &[ZeroDatum]) -> Result<()> {
    let components = space.components();
    for z in zeros {
        space.stratum(z.component.stratum)?;
        let comp = components
            .iter()
            .find(|c| c.id == z.component)
            .ok_or(Error::UnknownComponent { stratum: z.component.stratum, component: z.component.component })?;
        if comp.dim == 0 && z.index != 1 {
            return Err(Error::PointIndex { stratum: z.component.stratum, component: z.component.component, index: z.index });
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentChi {
    pub component: ComponentId,
    pub dim: usize,
    pub chi_c: i64,
}

/// Whether a nonsingular totally radial field exists: exactly when every
/// stratum component has `χ^c = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConverseDecision {
    pub exists: bool,
    pub components: Vec<ComponentChi>,
    /// Components with nonzero `χ^c`.
    pub witnesses: Vec<ComponentChi>,
}

pub fn nonsingular_radial_exists(space: &StratifiedSpace) -> ConverseDecision {
    let components: Vec<ComponentChi> =
        space.components().into_iter().map(|c| ComponentChi { component: c.id, dim: c.dim, chi_c: c.chi_c }).collect();
    let witnesses: Vec<ComponentChi> = components.iter().filter(|c| c.chi_c != 0).cloned().collect();
    ConverseDecision { exists: witnesses.is_empty(), components, witnesses }
}
