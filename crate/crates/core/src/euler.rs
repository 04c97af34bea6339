//! Euler characteristics of constructible data and of intersection homology.
//!
//! For constructible data the compactly supported Euler characteristic is the
//! sum over strata of `χ^c(stratum) · χ(stalk)`. Applied to the intersection
//! sheaf this yields the stratumwise formula for `Iχ`, which must agree with
//! the alternating sum of the intersection homology computed from chains.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::intersection::{self, ih_dims};
use crate::perversity::{Perversity, StandardPerversity};
use crate::simplicial::sign;
use crate::stratified::{ComponentId, StratifiedSpace, StratumComponent};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConstructibleEntry {
    pub chi_c: i64,
    /// Euler characteristic of the stalk cohomology at any point of the piece.
    pub stalk_euler: i64,
}

/// One entry per connected stratum component.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ConstructibleData {
    pub entries: Vec<ConstructibleEntry>,
}

/// `Σ χ^c(X_i) · χ(stalk_i)`.
pub fn chi_c_constructible(data: &ConstructibleData) -> i64 {
    data.entries.iter().map(|e| e.chi_c * e.stalk_euler).sum()
}

/// Intersection homology of the normal link of a singular component, with the
/// perversity restricted to the link's dimension.
pub fn link_ih(space: &StratifiedSpace, comp: &StratumComponent, p: &Perversity, subdivisions: usize) -> Result<Vec<usize>> {
    let link = space.normal_link_component(comp.id)?;
    Ok(ih_dims(&link, &p.restrict(link.n()), subdivisions)?.dims)
}

/// Stalk data of the intersection sheaf, one entry per stratum component.
pub fn intersection_stalk_data(space: &StratifiedSpace, p: &Perversity, subdivisions: usize) -> Result<ConstructibleData> {
    let n = space.n();
    let mut entries = Vec::new();
    for comp in space.components() {
        let link = if comp.dim == n { Vec::new() } else { link_ih(space, &comp, p, subdivisions)? };
        let stalk = intersection::stalk_cohomology(&link, n, comp.dim, p)?;
        entries.push(ConstructibleEntry { chi_c: comp.chi_c, stalk_euler: intersection::stalk_euler(&stalk) });
    }
    Ok(ConstructibleData { entries })
}

/// `Iχ` as the alternating sum of intersection homology dimensions.
pub fn ichi_c_direct(space: &StratifiedSpace, p: &Perversity, subdivisions: usize) -> Result<i64> {
    Ok(ih_dims(space, p, subdivisions)?.euler())
}

/// Contribution of one stratum component to the stratumwise formula.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentTerm {
    pub component: ComponentId,
    pub dim: usize,
    pub chi_c: i64,
    /// Intersection homology of the normal link; empty for regular components.
    pub link_ih: Vec<usize>,
    /// `Σ_{j=0}^{p_{n-k}} (-1)^j dim IH_{n-j-k-1}(L)`, taken to be 1 on regular
    /// components.
    pub inner: i64,
    /// `(-1)^n · χ^c · inner`.
    pub contribution: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StratumwiseReport {
    pub total: i64,
    pub terms: Vec<ComponentTerm>,
}

/// `Iχ` summed over stratum components from their `χ^c` and the intersection
/// homology of their links.
pub fn ichi_c_stratumwise(space: &StratifiedSpace, p: &Perversity, subdivisions: usize) -> Result<StratumwiseReport> {
    if p.n() != space.n() {
        return Err(Error::DimensionMismatch { expected: space.n(), found: p.n() });
    }
    let n = space.n();
    let mut terms = Vec::new();
    for comp in space.components() {
        let k = comp.dim;
        let (link, inner) = if k == n {
            (Vec::new(), 1)
        } else {
            let link = link_ih(space, &comp, p, subdivisions)?;
            let cut = p.p(n - k);
            let inner = (0..=cut.max(-1))
                .filter(|&j| j >= 0)
                .map(|j| {
                    let deg = n as i64 - j - k as i64 - 1;
                    let rank = if deg >= 0 { link.get(deg as usize).copied().unwrap_or(0) } else { 0 };
                    sign(j as usize) * rank as i64
                })
                .sum();
            (link, inner)
        };
        terms.push(ComponentTerm {
            component: comp.id,
            dim: k,
            chi_c: comp.chi_c,
            link_ih: link,
            inner,
            contribution: sign(n) * comp.chi_c * inner,
        });
    }
    Ok(StratumwiseReport { total: terms.iter().map(|t| t.contribution).sum(), terms })
}

/// Lower-middle `Iχ` of an even-dimensional space whose strata all have even
/// dimension, by the double sum over strata `X^{2i}` of
/// `χ_c(X) Σ_{j=0}^{n/2-i-1} (-1)^j dim IH_{n-j-2i-1}(L)`. The regular stratum
/// contributes `χ_c` on its own.
pub fn ichi_middle_even(space: &StratifiedSpace, subdivisions: usize) -> Result<i64> {
    let n = space.n();
    if !n.is_multiple_of(2) {
        return Err(Error::Inapplicable("formal dimension is odd"));
    }
    if space.strata().iter().any(|s| s.dim % 2 != 0) {
        return Err(Error::Inapplicable("a stratum has odd dimension"));
    }
    let half = n / 2;
    let m = Perversity::standard(StandardPerversity::LowerMiddle, n);
    let mut total = 0;
    for comp in space.components() {
        let i = comp.dim / 2;
        if i == half {
            total += comp.chi_c;
            continue;
        }
        let link = link_ih(space, &comp, &m, subdivisions)?;
        let inner: i64 = (0..half - i).map(|j| sign(j) * link[n - j - 2 * i - 1] as i64).sum();
        total += comp.chi_c * inner;
    }
    Ok(total)
}
