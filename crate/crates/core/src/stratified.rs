//! Stratified simplicial spaces.
//!
//! Every simplex carries the stratum containing its open interior. A stratum is
//! therefore a union of open simplices, and its compactly supported Euler
//! characteristic is the alternating count of those simplices.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::simplicial::{facets, sign, Simplex, SimplicialComplex};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stratum {
    pub id: u32,
    pub dim: usize,
    pub name: String,
}

impl Stratum {
    pub fn new(id: u32, dim: usize, name: impl Into<String>) -> Self {
        Stratum { id, dim, name: name.into() }
    }
}

/// A connected component of a stratum. Components are numbered from 0 within
/// their stratum, ordered by their least simplex (dimension first, then
/// lexicographically).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ComponentId {
    pub stratum: u32,
    pub component: usize,
}

#[derive(Debug, Clone)]
pub struct StratumComponent {
    pub id: ComponentId,
    pub dim: usize,
    /// Simplices whose interiors make up the component, by dimension then
    /// lexicographically.
    pub simplices: Vec<Simplex>,
    pub chi_c: i64,
}

impl StratumComponent {
    /// Simplices of the component's own dimension, lexicographically.
    pub fn top_simplices(&self) -> impl Iterator<Item = &Simplex> {
        self.simplices.iter().filter(move |s| s.len() == self.dim + 1)
    }
}

/// A simplicial complex with a stratum label on every simplex and a formal
/// dimension `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StratifiedSpace {
    name: String,
    complex: SimplicialComplex,
    n: usize,
    strata: Vec<Stratum>,
    /// `labels[d][i]` is the position in `strata` of the `i`-th `d`-simplex.
    labels: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StratumSummary {
    pub id: u32,
    pub name: String,
    pub dim: usize,
    pub simplex_counts: Vec<usize>,
    pub chi_c: i64,
    pub components: usize,
}

impl StratumSummary {
    pub fn connected(&self) -> bool {
        self.components == 1
    }
}

/// Outcome of the pseudomanifold checks. Failures are recorded, not raised.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StratumReport {
    pub strata: Vec<StratumSummary>,
    /// Every simplex is a face of an `n`-simplex.
    pub pure: bool,
    /// Every `(n-1)`-simplex is a face of exactly two `n`-simplices.
    pub pseudomanifold: bool,
    /// No stratum of dimension `n - 1`.
    pub codim_ok: bool,
    /// Always true for a constructed space; kept for reporting.
    pub frontier_ok: bool,
    pub impure_simplices: Vec<Simplex>,
    pub bad_ridges: Vec<Simplex>,
}

impl StratumReport {
    pub fn passes(&self) -> bool {
        self.pure && self.pseudomanifold && self.codim_ok && self.frontier_ok
    }
}

impl StratifiedSpace {
    /// Labels `complex` with `labeling` and checks the stratification axioms:
    /// every simplex is labelled, each stratum's simplices reach exactly its
    /// declared dimension, and the closure of each stratum is a union of strata.
    pub fn stratify(
        complex: SimplicialComplex,
        n: usize,
        mut strata: Vec<Stratum>,
        labeling: impl Fn(&[u32]) -> Option<u32>,
    ) -> Result<Self> {
        strata.sort_by_key(|s| s.id);
        if let Some(w) = strata.windows(2).find(|w| w[0].id == w[1].id) {
            return Err(Error::DuplicateStratum(w[0].id));
        }
        let pos_of = |id: u32| strata.binary_search_by_key(&id, |s| s.id).map_err(|_| Error::UnknownStratum(id));
        let mut labels = Vec::with_capacity(complex.dim().max(-1) as usize + 1);
        for d in 0..=complex.dim().max(-1) as usize {
            let list = complex.simplices_of_dim(d);
            let mut row = Vec::with_capacity(list.len());
            for s in list {
                let id = labeling(s).ok_or_else(|| Error::UnlabeledSimplex(s.clone()))?;
                row.push(pos_of(id)?);
            }
            labels.push(row);
        }
        let space = StratifiedSpace { name: String::new(), complex, n, strata, labels };
        space.check_dimensions()?;
        space.check_frontier()?;
        Ok(space)
    }

    /// The whole complex as a single stratum of dimension `n`.
    pub fn single_stratum(complex: SimplicialComplex, n: usize, name: impl Into<String>) -> Result<Self> {
        Self::stratify(complex, n, vec![Stratum::new(0, n, name)], |_| Some(0))
    }

    fn check_dimensions(&self) -> Result<()> {
        let mut max_dim: Vec<Option<usize>> = vec![None; self.strata.len()];
        for (d, row) in self.labels.iter().enumerate() {
            for &p in row {
                max_dim[p] = Some(max_dim[p].map_or(d, |m: usize| m.max(d)));
            }
        }
        for (s, found) in self.strata.iter().zip(max_dim) {
            if found != Some(s.dim) {
                return Err(Error::StratumDimension { stratum: s.id, declared: s.dim, found });
            }
        }
        Ok(())
    }

    fn check_frontier(&self) -> Result<()> {
        let top = self.labels.len();
        for (x, stratum) in self.strata.iter().enumerate() {
            // closure of stratum x
            let mut closure: Vec<Vec<bool>> = self.labels.iter().map(|row| row.iter().map(|&p| p == x).collect()).collect();
            for d in (1..top).rev() {
                for (i, s) in self.complex.simplices_of_dim(d).iter().enumerate() {
                    if closure[d][i] {
                        for f in facets(s) {
                            let j = self.complex.index_of(&f).expect("face closed");
                            closure[d - 1][j] = true;
                        }
                    }
                }
            }
            let mut meets = vec![false; self.strata.len()];
            for (row, seen) in self.labels.iter().zip(&closure).take(top) {
                for (&p, &hit) in row.iter().zip(seen) {
                    if hit {
                        meets[p] = true;
                    }
                }
            }
            for (y, other) in self.strata.iter().enumerate() {
                if !meets[y] || y == x {
                    continue;
                }
                if other.dim >= stratum.dim {
                    return Err(Error::FrontierViolation { stratum: stratum.id, other: other.id });
                }
                let contained = (0..top).all(|d| self.labels[d].iter().enumerate().all(|(i, &p)| p != y || closure[d][i]));
                if !contained {
                    return Err(Error::FrontierViolation { stratum: stratum.id, other: other.id });
                }
            }
        }
        Ok(())
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn renamed_stratum(mut self, id: u32, name: impl Into<String>) -> Self {
        if let Some(s) = self.strata.iter_mut().find(|s| s.id == id) {
            s.name = name.into();
        }
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    /// Formal dimension.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Strata sorted by id.
    pub fn strata(&self) -> &[Stratum] {
        &self.strata
    }

    pub fn stratum(&self, id: u32) -> Result<&Stratum> {
        self.strata.iter().find(|s| s.id == id).ok_or(Error::UnknownStratum(id))
    }

    /// Stratum of the `i`-th simplex of dimension `d`.
    pub fn label_at(&self, d: usize, i: usize) -> &Stratum {
        &self.strata[self.labels[d][i]]
    }

    pub fn label(&self, simplex: &[u32]) -> Option<&Stratum> {
        let i = self.complex.index_of(simplex)?;
        Some(self.label_at(simplex.len() - 1, i))
    }

    /// Whether the stratum is top-dimensional (regular).
    pub fn is_regular(&self, id: u32) -> Result<bool> {
        Ok(self.stratum(id)?.dim == self.n)
    }

    /// Compactly supported Euler characteristic: `Σ (-1)^dim σ` over the
    /// simplices labelled `id`.
    pub fn chi_c_stratum(&self, id: u32) -> Result<i64> {
        let pos = self.strata.iter().position(|s| s.id == id).ok_or(Error::UnknownStratum(id))?;
        Ok(self.labels.iter().enumerate().map(|(d, row)| sign(d) * row.iter().filter(|&&p| p == pos).count() as i64).sum())
    }

    /// Connected components of all strata, by stratum id then component index.
    pub fn components(&self) -> Vec<StratumComponent> {
        let offsets: Vec<usize> = self
            .labels
            .iter()
            .scan(0, |acc, row| {
                let o = *acc;
                *acc += row.len();
                Some(o)
            })
            .collect();
        let total = self.complex.num_simplices();
        let mut parent: Vec<usize> = (0..total).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for d in 1..self.labels.len() {
            for (i, s) in self.complex.simplices_of_dim(d).iter().enumerate() {
                let p = self.labels[d][i];
                for f in facets(s) {
                    let j = self.complex.index_of(&f).expect("face closed");
                    if self.labels[d - 1][j] == p {
                        let (a, b) = (find(&mut parent, offsets[d] + i), find(&mut parent, offsets[d - 1] + j));
                        if a != b {
                            parent[a.max(b)] = a.min(b);
                        }
                    }
                }
            }
        }
        // roots are the least global index of their class, i.e. the least
        // simplex in (dimension, lexicographic) order
        let mut by_root: BTreeMap<usize, (usize, Vec<Simplex>)> = BTreeMap::new();
        for (d, row) in self.labels.iter().enumerate() {
            for (i, &p) in row.iter().enumerate() {
                let root = find(&mut parent, offsets[d] + i);
                by_root.entry(root).or_insert_with(|| (p, Vec::new())).1.push(self.complex.simplices_of_dim(d)[i].clone());
            }
        }
        let mut per_stratum: Vec<Vec<Vec<Simplex>>> = vec![Vec::new(); self.strata.len()];
        for (_, (p, simplices)) in by_root {
            per_stratum[p].push(simplices);
        }
        let mut out = Vec::new();
        for (p, comps) in per_stratum.into_iter().enumerate() {
            for (c, simplices) in comps.into_iter().enumerate() {
                let chi_c = simplices.iter().map(|s| sign(s.len() - 1)).sum();
                out.push(StratumComponent {
                    id: ComponentId { stratum: self.strata[p].id, component: c },
                    dim: self.strata[p].dim,
                    simplices,
                    chi_c,
                });
            }
        }
        out
    }

    pub fn component(&self, id: ComponentId) -> Result<StratumComponent> {
        self.stratum(id.stratum)?;
        self.components()
            .into_iter()
            .find(|c| c.id == id)
            .ok_or(Error::UnknownComponent { stratum: id.stratum, component: id.component })
    }

    /// Runs the pseudomanifold checks: purity, two `n`-simplices on every
    /// `(n-1)`-simplex, and no codimension-one stratum.
    pub fn validate_pseudomanifold(&self) -> StratumReport {
        let n = self.n;
        let k = &self.complex;
        let impure_simplices: Vec<Simplex> = k.maximal_simplices().into_iter().filter(|s| s.len() != n + 1).collect();
        let mut bad_ridges = Vec::new();
        if n >= 1 {
            let mut count = vec![0usize; k.simplices_of_dim(n - 1).len()];
            for s in k.simplices_of_dim(n) {
                for f in facets(s) {
                    count[k.index_of(&f).expect("face closed")] += 1;
                }
            }
            for (i, c) in count.into_iter().enumerate() {
                if c != 2 {
                    bad_ridges.push(k.simplices_of_dim(n - 1)[i].clone());
                }
            }
        }
        let components = self.components();
        let strata = self
            .strata
            .iter()
            .enumerate()
            .map(|(p, s)| StratumSummary {
                id: s.id,
                name: s.name.clone(),
                dim: s.dim,
                simplex_counts: self.labels.iter().map(|row| row.iter().filter(|&&q| q == p).count()).collect(),
                chi_c: self.chi_c_stratum(s.id).expect("own stratum"),
                components: components.iter().filter(|c| c.id.stratum == s.id).count(),
            })
            .collect();
        StratumReport {
            strata,
            pure: impure_simplices.is_empty() && !k.is_empty(),
            pseudomanifold: bad_ridges.is_empty(),
            codim_ok: self.strata.iter().all(|s| s.dim <= n && s.dim + 1 != n),
            frontier_ok: true,
            impure_simplices,
            bad_ridges,
        }
    }

    /// Normal link of a stratum, taken at its first component.
    pub fn normal_link(&self, stratum: u32) -> Result<StratifiedSpace> {
        self.normal_link_component(ComponentId { stratum, component: 0 })
    }

    /// Normal link of a component, taken at its lexicographically least top
    /// simplex.
    pub fn normal_link_component(&self, id: ComponentId) -> Result<StratifiedSpace> {
        let comp = self.component(id)?;
        let sigma = comp.top_simplices().next().ok_or(Error::MalformedStratum(id.stratum))?;
        self.link_at(sigma)
    }

    /// Link of `sigma` with the induced stratification: a link simplex `tau` lies
    /// in the stratum of `tau ∪ sigma`, with its dimension lowered by
    /// `dim sigma + 1`. The formal dimension is `n - dim sigma - 1`.
    pub fn link_at(&self, sigma: &[u32]) -> Result<StratifiedSpace> {
        let own = self.label(sigma).ok_or_else(|| Error::UnlabeledSimplex(sigma.to_vec()))?;
        let k = sigma.len() - 1;
        if own.dim != k {
            return Err(Error::MalformedStratum(own.id));
        }
        if k >= self.n {
            return Err(Error::Inapplicable("regular strata have empty links"));
        }
        let link = self.complex.link(sigma);
        let join = |tau: &[u32]| -> Simplex {
            let mut s: Simplex = tau.iter().chain(sigma).copied().collect();
            s.sort_unstable();
            s
        };
        let mut present: BTreeMap<u32, Stratum> = BTreeMap::new();
        for tau in link.simplices() {
            let st = self.label(&join(tau)).expect("join lies in the star");
            present.entry(st.id).or_insert_with(|| Stratum::new(st.id, st.dim - k - 1, st.name.clone()));
        }
        let name = if self.name.is_empty() { String::new() } else { format!("link of {sigma:?} in {}", self.name) };
        Ok(StratifiedSpace::stratify(link, self.n - k - 1, present.into_values().collect(), |tau| {
            self.label(&join(tau)).map(|s| s.id)
        })?
        .with_name(name))
    }

    /// Barycentric subdivision, applied `times` times. A barycentre of a chain of
    /// faces lies in the stratum of the largest face.
    pub fn subdivide(&self, times: usize) -> StratifiedSpace {
        let mut space = self.clone();
        for _ in 0..times {
            let (sd, carriers) = space.complex.barycentric_subdivision_with_carriers();
            let label = |chain: &[u32]| -> Option<u32> {
                let top = chain.iter().map(|&v| &carriers[v as usize]).max_by_key(|s| s.len())?;
                space.label(top).map(|s| s.id)
            };
            space = StratifiedSpace::stratify(sd, space.n, space.strata.clone(), label)
                .expect("subdivision preserves the stratification")
                .with_name(space.name.clone());
        }
        space
    }

    /// Suspension. Each stratum of dimension `d` becomes a stratum of dimension
    /// `d + 1`; the two cone points form a new 0-dimensional stratum
    /// `pole_stratum` (id one past the largest existing id).
    pub fn suspension(&self, pole_stratum: impl Into<String>) -> Result<StratifiedSpace> {
        let top = self.complex.max_vertex().ok_or(Error::EmptyComplex)?;
        let poles = [top + 1, top + 2];
        let complex = self.complex.suspension()?;
        let pole_id = self.strata.iter().map(|s| s.id).max().map_or(0, |m| m + 1);
        let mut strata: Vec<Stratum> = self.strata.iter().map(|s| Stratum::new(s.id, s.dim + 1, s.name.clone())).collect();
        strata.push(Stratum::new(pole_id, 0, pole_stratum));
        StratifiedSpace::stratify(complex, self.n + 1, strata, |s| {
            let base: Vec<u32> = s.iter().copied().filter(|v| !poles.contains(v)).collect();
            if base.is_empty() {
                Some(pole_id)
            } else {
                self.label(&base).map(|x| x.id)
            }
        })
    }

    /// Product with the staircase triangulation. A product simplex lies in the
    /// product of the strata of its two projections; stratum `(x, y)` gets id
    /// `x * (max id of other + 1) + y`.
    pub fn product(&self, other: &StratifiedSpace) -> Result<StratifiedSpace> {
        let complex = self.complex.product(&other.complex)?;
        let scale = other.complex.max_vertex().ok_or(Error::EmptyComplex)? + 1;
        let id_scale = other.strata.iter().map(|s| s.id).max().unwrap_or(0) + 1;
        let mut strata = Vec::new();
        for x in &self.strata {
            for y in &other.strata {
                strata.push(Stratum::new(x.id * id_scale + y.id, x.dim + y.dim, format!("{} x {}", x.name, y.name)));
            }
        }
        let split = |s: &[u32]| -> (Simplex, Simplex) {
            let mut a: Simplex = s.iter().map(|v| v / scale).collect();
            let mut b: Simplex = s.iter().map(|v| v % scale).collect();
            a.dedup();
            b.sort_unstable();
            b.dedup();
            (a, b)
        };
        // Strata of a product of pure spaces always meet in top dimension; drop
        // any that a degenerate factor leaves empty.
        let mut used = vec![false; strata.len()];
        let lookup = |s: &[u32]| -> Option<u32> {
            let (a, b) = split(s);
            Some(self.label(&a)?.id * id_scale + other.label(&b)?.id)
        };
        for s in complex.simplices() {
            if let Some(id) = lookup(s) {
                if let Some(p) = strata.iter().position(|x| x.id == id) {
                    used[p] = true;
                }
            }
        }
        let strata = strata.into_iter().zip(used).filter(|(_, u)| *u).map(|(s, _)| s).collect();
        StratifiedSpace::stratify(complex, self.n + other.n, strata, lookup)
    }

    /// Labels as `(simplex, stratum id)` for every simplex, in complex order.
    pub fn labelled_simplices(&self) -> impl Iterator<Item = (&Simplex, u32)> {
        self.labels.iter().enumerate().flat_map(move |(d, row)| {
            row.iter().enumerate().map(move |(i, &p)| (&self.complex.simplices_of_dim(d)[i], self.strata[p].id))
        })
    }

    /// Total formal dimension as text, for reports.
    pub fn describe(&self) -> String {
        let f = self.complex.f_vector();
        format!("{} (n = {}, f = {:?}, {} strata)", self.name, self.n, f, self.strata.len()).trim().to_string()
    }
}
