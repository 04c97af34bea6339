//! Finite abstract simplicial complexes.
//!
//! Simplices are strictly increasing vertex tuples. Each degree is stored in
//! lexicographic order, so indices, boundary matrices and everything derived
//! from them are reproducible.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use hashbrown::{HashMap, HashSet};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, SparseMatrix};

/// A simplex as its strictly increasing vertex list.
pub type Simplex = Vec<u32>;

/// A finite abstract simplicial complex, closed under faces.
#[derive(Debug, Clone, Default)]
pub struct SimplicialComplex {
    simplices: Vec<Vec<Simplex>>,
    index: Vec<HashMap<Simplex, usize>>,
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.simplices == other.simplices
    }
}

impl Eq for SimplicialComplex {}

/// Calls `f` on every nonempty face of `simplex`, the simplex itself included.
pub fn for_each_face(simplex: &[u32], mut f: impl FnMut(&[u32])) {
    let n = simplex.len();
    assert!(n < 32, "simplex too large");
    let mut face = Vec::with_capacity(n);
    for mask in 1u32..(1 << n) {
        face.clear();
        face.extend((0..n).filter(|i| mask & (1 << i) != 0).map(|i| simplex[i]));
        f(&face);
    }
}

/// The codimension-one faces of a simplex, `facet[i]` omitting vertex `i`.
pub fn facets(simplex: &[u32]) -> impl Iterator<Item = Simplex> + '_ {
    (0..simplex.len()).map(move |i| {
        let mut f = Vec::with_capacity(simplex.len() - 1);
        f.extend_from_slice(&simplex[..i]);
        f.extend_from_slice(&simplex[i + 1..]);
        f
    })
}

fn normalize(tuple: &[u32]) -> Result<Simplex> {
    let mut s = tuple.to_vec();
    s.sort_unstable();
    if s.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::MalformedSimplex(tuple.to_vec()));
    }
    Ok(s)
}

impl SimplicialComplex {
    /// The face closure of the given simplices.
    pub fn build<I, S>(maximal_simplices: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<[u32]>,
    {
        let mut by_dim: Vec<BTreeSet<Simplex>> = Vec::new();
        for tuple in maximal_simplices {
            let tuple = tuple.as_ref();
            if tuple.is_empty() {
                return Err(Error::MalformedSimplex(Vec::new()));
            }
            let s = normalize(tuple)?;
            if by_dim.len() < s.len() {
                by_dim.resize_with(s.len(), BTreeSet::new);
            }
            if by_dim[s.len() - 1].contains(&s) {
                continue;
            }
            for_each_face(&s, |face| {
                by_dim[face.len() - 1].insert(face.to_vec());
            });
        }
        Ok(Self::from_sorted(by_dim.into_iter().map(|set| set.into_iter().collect()).collect()))
    }

    fn from_sorted(simplices: Vec<Vec<Simplex>>) -> Self {
        let index = simplices.iter().map(|list| list.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect()).collect();
        SimplicialComplex { simplices, index }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    /// Top dimension, or `-1` for the empty complex.
    pub fn dim(&self) -> isize {
        self.simplices.len() as isize - 1
    }

    /// Number of simplices in each dimension.
    pub fn f_vector(&self) -> Vec<usize> {
        self.simplices.iter().map(Vec::len).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector().iter().enumerate().map(|(d, &n)| sign(d) * n as i64).sum()
    }

    pub fn vertices(&self) -> impl Iterator<Item = u32> + '_ {
        self.simplices_of_dim(0).iter().map(|s| s[0])
    }

    pub fn max_vertex(&self) -> Option<u32> {
        self.vertices().max()
    }

    /// Simplices of dimension `d` in lexicographic order.
    pub fn simplices_of_dim(&self, d: usize) -> &[Simplex] {
        self.simplices.get(d).map_or(&[], Vec::as_slice)
    }

    /// All simplices, by dimension and then lexicographically.
    pub fn simplices(&self) -> impl Iterator<Item = &Simplex> {
        self.simplices.iter().flatten()
    }

    pub fn num_simplices(&self) -> usize {
        self.simplices.iter().map(Vec::len).sum()
    }

    /// Position of `simplex` within its dimension.
    pub fn index_of(&self, simplex: &[u32]) -> Option<usize> {
        self.index.get(simplex.len().checked_sub(1)?)?.get(simplex).copied()
    }

    pub fn contains(&self, simplex: &[u32]) -> bool {
        self.index_of(simplex).is_some()
    }

    /// Simplices that are not a proper face of another simplex.
    pub fn maximal_simplices(&self) -> Vec<Simplex> {
        let mut covered: Vec<Vec<bool>> = self.simplices.iter().map(|l| vec![false; l.len()]).collect();
        for d in 1..self.simplices.len() {
            for s in &self.simplices[d] {
                for f in facets(s) {
                    let i = self.index[d - 1][&f];
                    covered[d - 1][i] = true;
                }
            }
        }
        let mut out = Vec::new();
        for (d, list) in self.simplices.iter().enumerate() {
            for (i, s) in list.iter().enumerate() {
                if !covered[d][i] {
                    out.push(s.clone());
                }
            }
        }
        out
    }

    /// Signed boundary `C_d -> C_{d-1}` with integer entries; rows are
    /// `(d-1)`-simplices, columns `d`-simplices.
    pub fn boundary_matrix(&self, d: usize) -> SparseMatrix<i64> {
        assert!(d >= 1);
        let rows = self.simplices_of_dim(d - 1).len();
        let cols = self
            .simplices_of_dim(d)
            .iter()
            .map(|s| facets(s).enumerate().map(|(i, f)| (self.index[d - 1][&f], sign(i))).collect())
            .collect();
        SparseMatrix::from_columns(rows, cols)
    }

    /// The rational simplicial chain complex.
    pub fn chain_complex(&self) -> Result<ChainComplexQ> {
        if self.is_empty() {
            return Err(Error::EmptyComplex);
        }
        let top = self.simplices.len() - 1;
        let mut boundaries = vec![SparseMatrix::zeros(0, self.simplices[0].len())];
        for d in 1..=top {
            let b = self.boundary_matrix(d);
            let cols =
                b.columns().map(|c| c.iter().map(|(r, v)| (*r, BigRational::from_integer((*v).into()))).collect()).collect();
            boundaries.push(SparseMatrix::from_columns(b.nrows(), cols));
        }
        let bases =
            self.simplices.iter().map(|list| list.iter().map(|s| vec![(s.clone(), BigRational::one())]).collect()).collect();
        Ok(ChainComplexQ { bases, boundaries })
    }

    /// Betti numbers over ℚ, indices `0..=dim`.
    pub fn homology_dims(&self) -> Vec<usize> {
        let top = self.simplices.len();
        let ranks: Vec<usize> =
            (0..=top).map(|d| if d == 0 || d >= top { 0 } else { linalg::rank_integer(&self.boundary_matrix(d)) }).collect();
        (0..top).map(|d| self.simplices[d].len() - ranks[d] - ranks[d + 1]).collect()
    }

    /// The cone with apex `max vertex + 1`.
    pub fn cone(&self) -> Result<Self> {
        let apex = self.max_vertex().ok_or(Error::EmptyComplex)? + 1;
        Ok(self.cone_with_apex(apex))
    }

    fn cone_with_apex(&self, apex: u32) -> Self {
        let mut max = self.maximal_simplices();
        for s in max.iter_mut() {
            s.push(apex);
        }
        Self::build(max).expect("cone of a valid complex")
    }

    /// Two cones glued along the complex; the apexes are `max + 1` and `max + 2`.
    pub fn suspension(&self) -> Result<Self> {
        let top = self.max_vertex().ok_or(Error::EmptyComplex)?;
        let mut max = Vec::new();
        for s in self.maximal_simplices() {
            for apex in [top + 1, top + 2] {
                let mut t = s.clone();
                t.push(apex);
                max.push(t);
            }
        }
        Self::build(max)
    }

    /// Vertex id of `(a, b)` in a product whose second factor has maximum vertex
    /// id `second_max`.
    pub fn product_vertex(a: u32, b: u32, second_max: u32) -> u32 {
        a * (second_max + 1) + b
    }

    /// Staircase triangulation of `|self| x |other|`. Vertex `(a, b)` gets id
    /// `a * S + b` with `S = max vertex of other + 1`.
    pub fn product(&self, other: &Self) -> Result<Self> {
        let smax = other.max_vertex().ok_or(Error::EmptyComplex)?;
        self.max_vertex().ok_or(Error::EmptyComplex)?;
        let mut max = Vec::new();
        let mut path = Vec::new();
        for s in self.maximal_simplices() {
            for t in other.maximal_simplices() {
                staircases(&s, &t, 0, 0, &mut path, &mut |p| {
                    max.push(p.iter().map(|&(i, j)| Self::product_vertex(s[i], t[j], smax)).collect::<Vec<_>>())
                });
            }
        }
        Self::build(max)
    }

    /// Identifies the vertices of each class with the class minimum.
    ///
    /// Fails if a simplex degenerates or two simplices share an image.
    pub fn quotient_vertices(&self, classes: &[Vec<u32>]) -> Result<Self> {
        let mut rep: BTreeMap<u32, u32> = BTreeMap::new();
        for class in classes {
            let Some(&m) = class.iter().min() else { continue };
            for &v in class {
                rep.insert(v, m);
            }
        }
        let image = |s: &[u32]| -> Simplex {
            let mut t: Simplex = s.iter().map(|v| *rep.get(v).unwrap_or(v)).collect();
            t.sort_unstable();
            t
        };
        let mut seen: HashSet<Simplex> = HashSet::new();
        for s in self.simplices() {
            let t = image(s);
            if t.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::QuotientNotSimplicial { simplex: s.clone(), reason: "degenerate simplex" });
            }
            if s.len() > 1 && !seen.insert(t) {
                return Err(Error::QuotientNotSimplicial { simplex: s.clone(), reason: "two simplices collide" });
            }
        }
        Self::build(self.maximal_simplices().iter().map(|s| image(s)))
    }

    /// `self ⊔ other`, with the vertices of `other` shifted past those of `self`.
    pub fn disjoint_union(&self, other: &Self) -> Self {
        let shift = self.max_vertex().map_or(0, |m| m + 1);
        let shifted = other.maximal_simplices().into_iter().map(|s| s.into_iter().map(|v| v + shift).collect::<Vec<_>>());
        Self::build(self.maximal_simplices().into_iter().chain(shifted)).expect("union of valid complexes")
    }

    /// Barycentric subdivision; vertex `i` is the barycentre of `carriers[i]`.
    pub fn barycentric_subdivision_with_carriers(&self) -> (Self, Vec<Simplex>) {
        let carriers: Vec<Simplex> = self.simplices().cloned().collect();
        let offsets: Vec<usize> = self
            .simplices
            .iter()
            .scan(0, |acc, l| {
                let o = *acc;
                *acc += l.len();
                Some(o)
            })
            .collect();
        let id = |s: &[u32]| (offsets[s.len() - 1] + self.index[s.len() - 1][s]) as u32;
        let mut flags = Vec::new();
        for s in self.maximal_simplices() {
            permutations(&s, &mut |perm| {
                let mut chain = Vec::with_capacity(perm.len());
                let mut face: Vec<u32> = Vec::with_capacity(perm.len());
                for &v in perm {
                    let pos = face.binary_search(&v).unwrap_err();
                    face.insert(pos, v);
                    chain.push(id(&face));
                }
                flags.push(chain);
            });
        }
        (Self::build(flags).expect("flags are simplices"), carriers)
    }

    pub fn barycentric_subdivision(&self) -> Self {
        self.barycentric_subdivision_with_carriers().0
    }

    /// Simplicial link of `sigma`: all `tau` disjoint from `sigma` with
    /// `tau ∪ sigma` a simplex.
    pub fn link(&self, sigma: &[u32]) -> Self {
        let mut max = Vec::new();
        for rho in self.star_simplices(sigma) {
            if rho.len() > sigma.len() {
                max.push(rho.iter().copied().filter(|v| sigma.binary_search(v).is_err()).collect::<Vec<_>>());
            }
        }
        Self::build(max).expect("link of a valid complex")
    }

    /// Simplices containing `sigma`.
    pub fn star_simplices<'a>(&'a self, sigma: &'a [u32]) -> impl Iterator<Item = &'a Simplex> + 'a {
        self.simplices.iter().skip(sigma.len().saturating_sub(1)).flatten().filter(move |rho| is_subset(sigma, rho))
    }
}

/// Whether sorted `a` is contained in sorted `b`.
pub fn is_subset(a: &[u32], b: &[u32]) -> bool {
    let mut j = 0;
    for v in a {
        while j < b.len() && b[j] < *v {
            j += 1;
        }
        if j == b.len() || b[j] != *v {
            return false;
        }
        j += 1;
    }
    true
}

pub(crate) fn sign(i: usize) -> i64 {
    if i.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Monotone lattice paths from `(i, j)` to the top corner of `s x t`.
fn staircases(
    s: &[u32],
    t: &[u32],
    i: usize,
    j: usize,
    path: &mut Vec<(usize, usize)>,
    emit: &mut impl FnMut(&[(usize, usize)]),
) {
    path.push((i, j));
    if i + 1 == s.len() && j + 1 == t.len() {
        emit(path);
    }
    if i + 1 < s.len() {
        staircases(s, t, i + 1, j, path, emit);
    }
    if j + 1 < t.len() {
        staircases(s, t, i, j + 1, path, emit);
    }
    path.pop();
}

fn permutations(items: &[u32], emit: &mut impl FnMut(&[u32])) {
    fn go(items: &mut Vec<u32>, k: usize, emit: &mut impl FnMut(&[u32])) {
        if k == items.len() {
            emit(items);
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            go(items, k + 1, emit);
            items.swap(k, i);
        }
    }
    go(&mut items.to_vec(), 0, emit)
}

/// A chain of simplices with rational coefficients.
pub type Chain = Vec<(Simplex, BigRational)>;

/// A finite chain complex over ℚ with an explicit basis of chains in each degree.
///
/// `boundaries[d]` maps degree `d` to degree `d - 1` in these bases;
/// `boundaries[0]` is the zero map out of degree 0.
#[derive(Debug, Clone)]
pub struct ChainComplexQ {
    pub bases: Vec<Vec<Chain>>,
    pub boundaries: Vec<SparseMatrix<BigRational>>,
}

impl ChainComplexQ {
    pub fn ranks(&self) -> Vec<usize> {
        self.bases.iter().map(Vec::len).collect()
    }

    /// Checks `∂_{d} ∘ ∂_{d+1} = 0` exactly in every degree.
    pub fn is_complex(&self) -> bool {
        (1..self.boundaries.len().saturating_sub(1)).all(|d| self.boundaries[d].mul(&self.boundaries[d + 1]).is_zero())
            && self.boundaries.iter().enumerate().all(|(d, b)| b.ncols() == self.bases[d].len())
    }

    /// Homology dimensions, one per degree.
    pub fn homology_dims(&self) -> Vec<usize> {
        let n = self.bases.len();
        let ranks: Vec<usize> =
            (0..=n).map(|d| if d == 0 || d >= n { 0 } else { linalg::rank_rational(&self.boundaries[d]) }).collect();
        (0..n).map(|d| self.bases[d].len() - ranks[d] - ranks[d + 1]).collect()
    }

    /// Boundary of a chain, as a chain of simplices. Vertices have no boundary.
    pub fn simplex_boundary(chain: &Chain) -> Chain {
        let mut acc: BTreeMap<Simplex, BigRational> = BTreeMap::new();
        for (s, c) in chain.iter().filter(|(s, _)| s.len() > 1) {
            for (i, f) in facets(s).enumerate() {
                let v = if i % 2 == 0 { c.clone() } else { -c.clone() };
                *acc.entry(f).or_insert_with(BigRational::zero) += v;
            }
        }
        acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
    }
}
