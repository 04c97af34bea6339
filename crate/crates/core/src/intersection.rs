//! Intersection homology from allowable simplicial chains, and the closed-form
//! local and global formulas used to cross-check it.
//!
//! An `i`-simplex `σ` is `p`-allowable when for every `k >= 2`
//! `dim(σ ∩ Σ_{n-k}) <= i - k + p_k`, where `Σ_{n-k}` is the closed union of
//! strata of dimension at most `n - k` and the intersection dimension is that of
//! the largest face of `σ` inside it. The intersection chains in degree `i` are
//! the combinations of allowable `i`-simplices whose boundary is a combination
//! of allowable `(i-1)`-simplices.
//!
//! Dimensions only need ranks. With `A_i` the allowable `i`-simplices,
//! `R_i = rank ∂|A_i` and `N_i` the rank of `∂|A_i` followed by projection onto
//! the non-allowable `(i-1)`-simplices,
//!
//! ```text
//! dim IC_i     = |A_i| - N_i
//! dim Z_i      = |A_i| - R_i
//! dim IH_i     = dim Z_i - (R_{i+1} - N_{i+1})
//! ```
//!
//! since a cycle of allowable simplices is automatically an intersection chain.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{self, SparseMatrix};
use crate::perversity::Perversity;
use crate::simplicial::{facets, sign, ChainComplexQ};
use crate::stratified::StratifiedSpace;

/// Allowability flag of every simplex, per degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AllowabilityTable {
    pub perversity: Perversity,
    /// `allowable[i][j]` for the `j`-th `i`-simplex.
    pub allowable: Vec<Vec<bool>>,
}

impl AllowabilityTable {
    pub fn count(&self, degree: usize) -> usize {
        self.allowable.get(degree).map_or(0, |row| row.iter().filter(|a| **a).count())
    }

    /// Whether every allowable simplex here is allowable in `other`.
    pub fn is_contained_in(&self, other: &AllowabilityTable) -> bool {
        self.allowable.iter().zip(&other.allowable).all(|(a, b)| a.iter().zip(b).all(|(x, y)| !x || *y))
    }
}

/// Intersection homology dimensions in degrees `0..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IHDims {
    pub space: String,
    pub perversity: Perversity,
    pub dims: Vec<usize>,
}

impl IHDims {
    /// `Σ (-1)^i dim IH_i`.
    pub fn euler(&self) -> i64 {
        alternating_sum(&self.dims)
    }
}

pub fn alternating_sum(dims: &[usize]) -> i64 {
    dims.iter().enumerate().map(|(i, &d)| sign(i) * d as i64).sum()
}

fn check_dimension(space: &StratifiedSpace, p: &Perversity) -> Result<()> {
    if p.n() != space.n() {
        return Err(Error::DimensionMismatch { expected: space.n(), found: p.n() });
    }
    Ok(())
}

pub fn allowability_table(space: &StratifiedSpace, p: &Perversity) -> Result<AllowabilityTable> {
    check_dimension(space, p)?;
    let n = space.n();
    let k = space.complex();
    let top = (k.dim() + 1) as usize;
    // profile[d][j][c]: largest dimension of a face of the simplex lying in a
    // stratum of codimension exactly c, or -1
    let mut profile: Vec<Vec<Vec<i32>>> = Vec::with_capacity(top);
    let mut allowable = Vec::with_capacity(top);
    for d in 0..top {
        let mut prof_d = Vec::with_capacity(k.simplices_of_dim(d).len());
        let mut allow_d = Vec::with_capacity(k.simplices_of_dim(d).len());
        for (j, s) in k.simplices_of_dim(d).iter().enumerate() {
            let mut prof = vec![-1i32; n + 1];
            if d > 0 {
                for f in facets(s) {
                    let fi = k.index_of(&f).expect("face closed");
                    for (c, v) in profile[d - 1][fi].iter().enumerate() {
                        prof[c] = prof[c].max(*v);
                    }
                }
            }
            let codim = n.saturating_sub(space.label_at(d, j).dim);
            prof[codim] = d as i32;
            let ok = (2..=n).all(|kk| {
                let meet = prof[kk..].iter().copied().max().unwrap_or(-1);
                meet < 0 || meet as i64 <= d as i64 - kk as i64 + p.p(kk)
            });
            allow_d.push(ok);
            prof_d.push(prof);
        }
        profile.push(prof_d);
        allowable.push(allow_d);
    }
    Ok(AllowabilityTable { perversity: p.clone(), allowable })
}

/// Boundary rows of the allowable `d`-simplices. With `only_forbidden`, only
/// entries on non-allowable faces are kept.
fn allowable_boundary_rows(
    space: &StratifiedSpace,
    table: &AllowabilityTable,
    d: usize,
    only_forbidden: bool,
) -> Vec<Vec<(u32, i64)>> {
    let k = space.complex();
    k.simplices_of_dim(d)
        .iter()
        .zip(&table.allowable[d])
        .filter(|(_, a)| **a)
        .map(|(s, _)| {
            let mut row: Vec<(u32, i64)> = facets(s)
                .enumerate()
                .map(|(i, f)| (k.index_of(&f).expect("face closed"), sign(i)))
                .filter(|(j, _)| !only_forbidden || !table.allowable[d - 1][*j])
                .map(|(j, v)| (j as u32, v))
                .collect();
            row.sort_unstable_by_key(|(j, _)| *j);
            row
        })
        .collect()
}

/// Intersection homology of `space` for perversity `p`, computed on the
/// `subdivisions`-fold barycentric subdivision.
///
/// Only the perversity's dimension is checked; callers wanting pseudomanifold
/// semantics validate the space first.
pub fn ih_dims(space: &StratifiedSpace, p: &Perversity, subdivisions: usize) -> Result<IHDims> {
    check_dimension(space, p)?;
    let sd;
    let space_ref = if subdivisions > 0 {
        sd = space.subdivide(subdivisions);
        &sd
    } else {
        space
    };
    let table = allowability_table(space_ref, p)?;
    let n = space.n();
    let top = table.allowable.len();
    let allowed: Vec<usize> = (0..=n + 1).map(|d| table.count(d)).collect();
    // full[d] = R_d, forbidden[d] = N_d
    let mut full = vec![0usize; n + 2];
    let mut forbidden = vec![0usize; n + 2];
    for d in 1..top.min(n + 1) {
        full[d] = linalg::rank_integer_rows(allowable_boundary_rows(space_ref, &table, d, false));
        forbidden[d] = linalg::rank_integer_rows(allowable_boundary_rows(space_ref, &table, d, true));
    }
    let dims = (0..=n)
        .map(|i| {
            let cycles = allowed[i] - full[i];
            cycles - (full[i + 1] - forbidden[i + 1])
        })
        .collect();
    Ok(IHDims { space: String::from(space.name()), perversity: p.clone(), dims })
}

/// The intersection chain complex with an explicit echelon basis in every
/// degree. Dense; meant for small spaces and for cross-checking [`ih_dims`].
pub fn intersection_chain_complex(space: &StratifiedSpace, p: &Perversity) -> Result<ChainComplexQ> {
    let table = allowability_table(space, p)?;
    let k = space.complex();
    let n = space.n();
    let mut bases = Vec::new();
    let mut boundaries: Vec<SparseMatrix<BigRational>> = Vec::new();
    // free[d]: positions (within A_d) that coordinatise IC_d
    let mut free_prev: Vec<usize> = Vec::new();
    let mut allowed_prev: Vec<usize> = Vec::new();
    for d in 0..=n {
        let list = k.simplices_of_dim(d);
        let allowed: Vec<usize> = (0..list.len()).filter(|&j| table.allowable[d][j]).collect();
        let (free, basis): (Vec<usize>, Vec<Vec<BigRational>>) = if d == 0 {
            let free: Vec<usize> = (0..allowed.len()).collect();
            let basis = free
                .iter()
                .map(|&f| {
                    let mut v = vec![BigRational::zero(); allowed.len()];
                    v[f] = BigRational::from_integer(1.into());
                    v
                })
                .collect();
            (free, basis)
        } else {
            let forbidden: Vec<usize> = (0..k.simplices_of_dim(d - 1).len()).filter(|&j| !table.allowable[d - 1][j]).collect();
            let mut m = vec![vec![BigRational::zero(); allowed.len()]; forbidden.len()];
            for (c, &j) in allowed.iter().enumerate() {
                for (i, f) in facets(&list[j]).enumerate() {
                    let r = k.index_of(&f).expect("face closed");
                    if let Ok(row) = forbidden.binary_search(&r) {
                        m[row][c] = BigRational::from_integer(sign(i).into());
                    }
                }
            }
            linalg::kernel_basis(&m, allowed.len())
        };
        let chains: Vec<_> = basis
            .iter()
            .map(|v| {
                v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(c, x)| (list[allowed[c]].clone(), x.clone())).collect()
            })
            .collect();
        // boundary in the echelon coordinates of the previous degree
        let rows = free_prev.len();
        let cols = if d == 0 {
            vec![Vec::new(); chains.len()]
        } else {
            chains
                .iter()
                .map(|chain| {
                    ChainComplexQ::simplex_boundary(chain)
                        .into_iter()
                        .filter_map(|(face, c)| {
                            let j = k.index_of(&face).expect("face closed");
                            let pos = allowed_prev.binary_search(&j).expect("boundary of an intersection chain is allowable");
                            free_prev.binary_search(&pos).ok().map(|row| (row, c))
                        })
                        .collect()
                })
                .collect()
        };
        boundaries.push(SparseMatrix::from_columns(rows, cols));
        bases.push(chains);
        free_prev = free;
        allowed_prev = allowed;
    }
    Ok(ChainComplexQ { bases, boundaries })
}

/// Stalk cohomology of the intersection sheaf at a point of a `k`-dimensional
/// stratum of an `n`-dimensional space, given the intersection homology of its
/// link. Entry `i` is `dim H^i`.
pub fn stalk_cohomology(link_ih: &[usize], n: usize, k: usize, p: &Perversity) -> Result<Vec<usize>> {
    if p.n() != n {
        return Err(Error::DimensionMismatch { expected: n, found: p.n() });
    }
    if k > n {
        return Err(Error::DimensionMismatch { expected: n, found: k });
    }
    if k == n {
        return Ok(vec![1]);
    }
    if link_ih.len() != n - k {
        return Err(Error::DimensionMismatch { expected: n - k, found: link_ih.len() });
    }
    let cut = p.p(n - k);
    Ok((0..n - k).map(|i| if (i as i64) <= cut { link_ih[n - i - k - 1] } else { 0 }).collect())
}

/// Euler characteristic of a stalk, `Σ (-1)^i dim H^i`.
pub fn stalk_euler(stalk: &[usize]) -> i64 {
    alternating_sum(stalk)
}

/// Intersection homology of the suspension of an `m`-dimensional space with
/// dimensions `base`, for a perversity on dimension `m + 1`.
pub fn suspension_ih_oracle(base: &[usize], p: &Perversity) -> Result<Vec<usize>> {
    let cut = cut_degree(base, p)?;
    let m = base.len() - 1;
    Ok((0..=m + 1)
        .map(|i| {
            let i_ = i as i64;
            if i_ > cut {
                base[i - 1]
            } else if i_ == cut {
                0
            } else {
                base[i]
            }
        })
        .collect())
}

/// Intersection homology of the open cone on an `m`-dimensional space.
pub fn cone_ih_oracle(base: &[usize], p: &Perversity) -> Result<Vec<usize>> {
    let cut = cut_degree(base, p)?;
    let m = base.len() - 1;
    Ok((0..=m + 1).map(|i| if (i as i64) < cut { base[i] } else { 0 }).collect())
}

fn cut_degree(base: &[usize], p: &Perversity) -> Result<i64> {
    if base.is_empty() {
        return Err(Error::EmptyComplex);
    }
    let m = base.len() - 1;
    if p.n() != m + 1 {
        return Err(Error::DimensionMismatch { expected: m + 1, found: p.n() });
    }
    Ok(m as i64 - p.p(m + 1))
}

/// Intersection homology of `X × M` for a closed manifold `M` with Betti numbers
/// `manifold_betti`.
pub fn kunneth_manifold_oracle(x_ih: &[usize], manifold_betti: &[usize]) -> Vec<usize> {
    if x_ih.is_empty() || manifold_betti.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; x_ih.len() + manifold_betti.len() - 1];
    for (i, a) in x_ih.iter().enumerate() {
        for (j, b) in manifold_betti.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    out
}
