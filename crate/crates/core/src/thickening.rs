//! Thickenings of cube complexes: simplicial complexes on a set mapping onto
//! the vertices of a cube complex, where a set spans a simplex when its image
//! lies in a common cube.
//!
//! Small thickenings carry an explicit 1-skeleton and simplicial complex.
//! Large ones (the pair thickening of a Davis quotient has around a million
//! vertices) stay implicit and answer adjacency and local queries through the
//! base complex.

use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use crate::cubical::CubeComplex;
use crate::error::{Error, Result};
use crate::graph::{build_index, Graph};
use crate::homology::{same_groups, simplicial_homology, Coeffs};
use crate::simplicial::{SimplicialComplex, DEFAULT_CELL_BUDGET};

pub const DEFAULT_IMPLICIT_THRESHOLD: usize = 5000;

/// A surjection from a label set onto the vertices of a cube complex.
#[derive(Clone, Debug)]
pub struct AlphaMap {
    domain: Vec<String>,
    image: Vec<usize>,
}

impl AlphaMap {
    pub fn new(domain: Vec<String>, image: Vec<usize>, base: &CubeComplex) -> Result<Self> {
        build_index(&domain)?;
        if domain.len() != image.len() {
            return Err(Error::InvalidInput("alpha map must assign every domain element".into()));
        }
        let mut hit = vec![false; base.n_vertices()];
        for &v in &image {
            *hit.get_mut(v)
                .ok_or_else(|| Error::InvalidInput(format!("alpha image {v} out of range")))? = true;
        }
        if let Some(v) = hit.iter().position(|h| !h) {
            return Err(Error::NotSurjective(base.label(v).to_string()));
        }
        Ok(AlphaMap { domain, image })
    }

    pub fn from_labels<S: AsRef<str>>(base: &CubeComplex, pairs: &[(S, S)]) -> Result<Self> {
        let domain = pairs.iter().map(|(y, _)| y.as_ref().to_string()).collect();
        let image = pairs
            .iter()
            .map(|(_, v)| base.index_of(v.as_ref()))
            .collect::<Result<_>>()?;
        AlphaMap::new(domain, image, base)
    }

    pub fn identity(base: &CubeComplex) -> Self {
        AlphaMap {
            domain: base.labels().to_vec(),
            image: (0..base.n_vertices()).collect(),
        }
    }

    pub fn domain(&self) -> &[String] {
        &self.domain
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ThickenOptions {
    pub implicit_threshold: usize,
    /// The base carries a 5-largeness certificate, enabling the flag fast path.
    pub base_certified: bool,
}

impl Default for ThickenOptions {
    fn default() -> Self {
        ThickenOptions {
            implicit_threshold: DEFAULT_IMPLICIT_THRESHOLD,
            base_certified: false,
        }
    }
}

#[derive(Clone, Debug)]
enum Labels {
    Stored(Vec<String>, HashMap<String, usize>),
    /// Pair thickening: vertex y is the pair (alpha(y), partner[y]).
    Pairs(Vec<usize>),
}

#[derive(Clone, Debug)]
pub struct Thickening {
    base: Arc<CubeComplex>,
    image: Vec<usize>,
    fibers: Vec<Vec<usize>>,
    labels: Labels,
    flag_fast_path: bool,
    graph: Option<Graph>,
    complex: Option<SimplicialComplex>,
}

/// Outcome of a local 5-largeness scan at one thickening vertex.
#[derive(Clone, Debug, Serialize)]
pub struct LocalScan {
    pub vertex: String,
    pub link_flag: bool,
    pub link_square_free: bool,
    /// A chordless 4-cycle through the vertex, when one exists.
    pub four_cycle: Option<Vec<String>>,
    pub link_witness: Option<Vec<String>>,
}

impl LocalScan {
    pub fn link_ok(&self) -> bool {
        self.link_flag && self.link_square_free
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct JoinDecomposition {
    pub min_cube: Vec<String>,
    pub lk_inner: Vec<String>,
    pub lk_outer: Vec<String>,
    pub is_join: bool,
    pub inner_is_simplex: bool,
    pub outer_matches_cube_link: bool,
}

impl JoinDecomposition {
    pub fn holds(&self) -> bool {
        self.is_join && self.inner_is_simplex && self.outer_matches_cube_link
    }
}

impl Thickening {
    fn assemble(base: Arc<CubeComplex>, image: Vec<usize>, labels: Labels, opts: &ThickenOptions) -> Result<Self> {
        let mut fibers = vec![Vec::new(); base.n_vertices()];
        for (y, &v) in image.iter().enumerate() {
            fibers[v].push(y);
        }
        let mut th = Thickening {
            base,
            image,
            fibers,
            labels,
            flag_fast_path: opts.base_certified,
            graph: None,
            complex: None,
        };
        if th.n_vertices() <= opts.implicit_threshold {
            let labels: Vec<String> = (0..th.n_vertices()).map(|y| th.label(y)).collect();
            let mut edges = Vec::new();
            for v in 0..th.base.n_vertices() {
                let fv = &th.fibers[v];
                for (i, &a) in fv.iter().enumerate() {
                    for &b in &fv[i + 1..] {
                        edges.push((a, b));
                    }
                }
                for &u in th.base.cube_neighbors(v) {
                    if u > v {
                        for &a in fv {
                            for &b in &th.fibers[u] {
                                edges.push((a, b));
                            }
                        }
                    }
                }
            }
            let graph = Graph::from_indices(labels.clone(), edges)?;
            let complex = if th.flag_fast_path {
                SimplicialComplex::flag(graph.clone())
            } else {
                let facets = th
                    .base
                    .maximal_cubes()
                    .iter()
                    .map(|&id| {
                        th.base
                            .vertex_set(id)
                            .iter()
                            .flat_map(|&v| th.fibers[v].iter().copied())
                            .collect()
                    })
                    .collect();
                SimplicialComplex::explicit(labels, facets)?
            };
            th.graph = Some(graph);
            th.complex = Some(complex);
        }
        Ok(th)
    }

    pub fn th_alpha(base: Arc<CubeComplex>, alpha: AlphaMap, opts: &ThickenOptions) -> Result<Self> {
        let index = build_index(&alpha.domain)?;
        Self::assemble(base, alpha.image, Labels::Stored(alpha.domain, index), opts)
    }

    pub fn th1(base: Arc<CubeComplex>, opts: &ThickenOptions) -> Self {
        let alpha = AlphaMap::identity(&base);
        Self::th_alpha(base, alpha, opts).expect("identity is surjective")
    }

    /// Pair thickening: vertices are ordered pairs at cubical distance at
    /// least two, mapped to their first coordinate.
    pub fn pair(base: Arc<CubeComplex>, opts: &ThickenOptions) -> Result<Self> {
        base.require_connected()?;
        let n = base.n_vertices();
        let mut image = Vec::new();
        let mut partner = Vec::new();
        let mut near = vec![false; n];
        for v in 0..n {
            near[v] = true;
            for &u in base.cube_neighbors(v) {
                near[u] = true;
            }
            let before = image.len();
            for w in 0..n {
                if !near[w] {
                    image.push(v);
                    partner.push(w);
                }
            }
            near[v] = false;
            for &u in base.cube_neighbors(v) {
                near[u] = false;
            }
            if image.len() == before && n > 0 {
                if partner.is_empty() && (v + 1..n).all(|x| base.cube_neighbors(x).len() + 1 == n) {
                    return Err(Error::ThickeningEmpty);
                }
                return Err(Error::NotSurjective(base.label(v).to_string()));
            }
        }
        if image.is_empty() {
            return Err(Error::ThickeningEmpty);
        }
        Self::assemble(base, image, Labels::Pairs(partner), opts)
    }

    pub fn base(&self) -> &CubeComplex {
        &self.base
    }

    pub fn base_arc(&self) -> Arc<CubeComplex> {
        Arc::clone(&self.base)
    }

    pub fn n_vertices(&self) -> usize {
        self.image.len()
    }

    pub fn is_implicit(&self) -> bool {
        self.complex.is_none()
    }

    pub fn is_pair_thickening(&self) -> bool {
        matches!(self.labels, Labels::Pairs(_))
    }

    pub fn uses_flag_fast_path(&self) -> bool {
        self.flag_fast_path
    }

    pub fn label(&self, y: usize) -> String {
        match &self.labels {
            Labels::Stored(l, _) => l[y].clone(),
            Labels::Pairs(p) => format!("{}|{}", self.base.label(self.image[y]), self.base.label(p[y])),
        }
    }

    pub fn labels_of(&self, ys: &[usize]) -> Vec<String> {
        ys.iter().map(|&y| self.label(y)).collect()
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        match &self.labels {
            Labels::Stored(_, idx) => idx.get(label).copied(),
            Labels::Pairs(_) => label.split_once('|').and_then(|(v, w)| {
                let v = self.base.index_of(v).ok()?;
                let w = self.base.index_of(w).ok()?;
                self.pair_index(v, w)
            }),
        }
        .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// Index of the pair (v, w) in a pair thickening.
    pub fn pair_index(&self, v: usize, w: usize) -> Option<usize> {
        let Labels::Pairs(p) = &self.labels else {
            return None;
        };
        let fiber = &self.fibers[v];
        fiber
            .binary_search_by_key(&w, |&y| p[y])
            .ok()
            .map(|i| fiber[i])
    }

    /// Second coordinate of a pair-thickening vertex.
    pub fn partner(&self, y: usize) -> Option<usize> {
        match &self.labels {
            Labels::Pairs(p) => Some(p[y]),
            Labels::Stored(..) => None,
        }
    }

    pub fn alpha(&self, y: usize) -> usize {
        self.image[y]
    }

    pub fn alpha_map(&self) -> AlphaMap {
        AlphaMap {
            domain: (0..self.n_vertices()).map(|y| self.label(y)).collect(),
            image: self.image.clone(),
        }
    }

    pub fn fiber(&self, v: usize) -> &[usize] {
        &self.fibers[v]
    }

    pub fn one_skeleton(&self) -> Option<&Graph> {
        self.graph.as_ref()
    }

    pub fn complex(&self) -> Result<&SimplicialComplex> {
        self.complex.as_ref().ok_or(Error::BudgetExceeded {
            what: "explicit thickening",
            needed: self.n_vertices() as u128,
            budget: DEFAULT_IMPLICIT_THRESHOLD as u128,
        })
    }

    fn base_close(&self, a: usize, b: usize) -> bool {
        a == b || self.base.cube_neighbors(a).binary_search(&b).is_ok()
    }

    pub fn adjacent(&self, y: usize, z: usize) -> bool {
        y != z && self.base_close(self.image[y], self.image[z])
    }

    pub fn neighbors(&self, y: usize) -> Vec<usize> {
        let v = self.image[y];
        let mut out: Vec<usize> = std::iter::once(v)
            .chain(self.base.cube_neighbors(v).iter().copied())
            .flat_map(|u| self.fibers[u].iter().copied())
            .filter(|&z| z != y)
            .collect();
        out.sort_unstable();
        out
    }

    /// Whether `ys` span a simplex: their images lie in a common cube.
    pub fn spans_simplex(&self, ys: &[usize]) -> bool {
        let mut img: Vec<usize> = ys.iter().map(|&y| self.image[y]).collect();
        img.sort_unstable();
        img.dedup();
        img.is_empty() || !self.base.cubes_containing(&img).is_empty()
    }

    /// Confirms that every clique of the 1-skeleton spans a simplex, i.e. the
    /// flag complex of the 1-skeleton agrees with the common-cube definition.
    pub fn flag_audit(&self) -> Result<bool> {
        let g = self
            .graph
            .as_ref()
            .ok_or_else(|| Error::InvalidInput("flag audit needs an explicit thickening".into()))?;
        Ok(g.maximal_cliques().iter().all(|c| self.spans_simplex(c)))
    }

    /// A chordless 4-cycle of the thickening through `y`. Such cycles come
    /// from 4-cycles of the base's common-cube graph with both diagonals at
    /// distance two, so the search runs on the base.
    pub fn four_cycle_through(&self, y: usize) -> Option<[usize; 4]> {
        let p = self.image[y];
        let nbrs = self.base.cube_neighbors(p);
        for (i, &q) in nbrs.iter().enumerate() {
            for &s in &nbrs[i + 1..] {
                if self.base_close(q, s) {
                    continue;
                }
                for &r in self.base.cube_neighbors(q) {
                    if r != p && !self.base_close(p, r) && self.base_close(r, s) {
                        return Some([y, self.fibers[q][0], self.fibers[r][0], self.fibers[s][0]]);
                    }
                }
            }
        }
        None
    }

    /// Link of `y` checked for flagness and squares through the base: the
    /// link's cycles and cliques project to those of the common-cube graph on
    /// the neighbors of `alpha(y)`.
    pub fn local_scan(&self, y: usize) -> LocalScan {
        let p = self.image[y];
        let nbrs = self.base.cube_neighbors(p).to_vec();
        let mut four = None;
        // Chordless squares among base neighbors of p.
        'outer: for (i, &a) in nbrs.iter().enumerate() {
            for &c in &nbrs[i + 1..] {
                if self.base_close(a, c) {
                    continue;
                }
                let common: Vec<usize> = nbrs
                    .iter()
                    .copied()
                    .filter(|&b| b != a && b != c && self.base_close(a, b) && self.base_close(b, c))
                    .collect();
                for (j, &b) in common.iter().enumerate() {
                    for &d in &common[j + 1..] {
                        if !self.base_close(b, d) {
                            four = Some(vec![a, b, c, d]);
                            break 'outer;
                        }
                    }
                }
            }
        }
        // Pairwise-close base sets around p that lie in no common cube.
        let mut flag_witness = None;
        let mut stack: Vec<(Vec<usize>, usize)> = vec![(vec![p], 0)];
        while let Some((set, from)) = stack.pop() {
            for (k, &u) in nbrs.iter().enumerate().skip(from) {
                if !set.iter().all(|&x| self.base_close(x, u)) {
                    continue;
                }
                let mut next = set.clone();
                next.push(u);
                let mut sorted = next.clone();
                sorted.sort_unstable();
                if self.base.cubes_containing(&sorted).is_empty() {
                    flag_witness = Some(next);
                    break;
                }
                stack.push((next, k + 1));
            }
            if flag_witness.is_some() {
                break;
            }
        }
        let four_cycle = self
            .four_cycle_through(y)
            .map(|c| self.labels_of(&c));
        let link_witness = flag_witness
            .clone()
            .or(four.clone())
            .map(|vs| self.base.labels_of(&vs));
        LocalScan {
            vertex: self.label(y),
            link_flag: flag_witness.is_none(),
            link_square_free: four.is_none(),
            four_cycle,
            link_witness,
        }
    }

    /// Checks that a section of alpha spans a copy of Th1 of the base and that
    /// the thickening and the section image have the same reduced homology.
    pub fn section_retraction_check(&self, section: &[usize], budget: usize) -> Result<bool> {
        if section.len() != self.base.n_vertices() {
            return Err(Error::InvalidInput("section must be defined on every base vertex".into()));
        }
        for (v, &y) in section.iter().enumerate() {
            if y >= self.n_vertices() || self.image[y] != v {
                return Err(Error::NotASection(self.base.label(v).to_string()));
            }
        }
        let k = self.complex()?;
        let img = k.full_subcomplex(section)?;
        let relabeled = img.relabel(|l| {
            let y = self.index_of(l).expect("label of the thickening");
            self.base.label(self.image[y]).to_string()
        })?;
        let th1 = Thickening::th1(self.base_arc(), &ThickenOptions::default());
        if !relabeled.same_as(th1.complex()?) {
            return Ok(false);
        }
        for coeffs in Coeffs::ALL {
            let a = simplicial_homology(k, coeffs, true, budget)?;
            let b = simplicial_homology(&img, coeffs, true, budget)?;
            if !same_groups(&a, &b) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Splits the link of `s` into the part over the minimal cube of its image
    /// and the part outside it, and checks the join structure.
    pub fn link_join_decomposition(&self, s: &[usize], budget: usize) -> Result<JoinDecomposition> {
        let k = self.complex()?;
        k.require_simplex(s)?;
        let mut img: Vec<usize> = s.iter().map(|&y| self.image[y]).collect();
        img.sort_unstable();
        img.dedup();
        let cube = self.base.minimal_cube(&img)?;
        let cube_verts = self.base.vertex_set(cube);
        let link = k.link(s)?;
        let mut inner = Vec::new();
        let mut outer = Vec::new();
        for (i, l) in link.labels().iter().enumerate() {
            let y = self.index_of(l)?;
            if cube_verts.binary_search(&self.image[y]).is_ok() {
                inner.push(i);
            } else {
                outer.push(i);
            }
        }
        // Every vertex over the cube lies in the link.
        let expected_inner = cube_verts
            .iter()
            .flat_map(|&v| self.fibers[v].iter().copied())
            .filter(|y| !s.contains(y))
            .count();
        let lk_in = link.full_subcomplex(&inner)?;
        let lk_out = link.full_subcomplex(&outer)?;
        let join_facets: Vec<Vec<String>> = {
            let (lk_in, lk_out) = (&lk_in, &lk_out);
            let fi = if lk_in.is_empty() { vec![Vec::new()] } else { lk_in.facets() };
            let fo = if lk_out.is_empty() { vec![Vec::new()] } else { lk_out.facets() };
            fi.iter()
                .flat_map(|a| {
                    fo.iter().map(move |b| {
                        let mut f = lk_in.labels_of(a);
                        f.extend(lk_out.labels_of(b));
                        f
                    })
                })
                .filter(|f| !f.is_empty())
                .collect()
        };
        let join = SimplicialComplex::explicit_from_labels(link.labels().to_vec(), &join_facets)?;
        let is_join = inner.len() == expected_inner && join.same_as(&link);
        let inner_is_simplex = lk_in.facets().len() <= 1;
        let cube_link = self.base.cube_link(cube)?;
        let mut outer_matches = true;
        for coeffs in Coeffs::ALL {
            let a = simplicial_homology(&lk_out, coeffs, true, budget)?;
            let b = simplicial_homology(&cube_link, coeffs, true, budget)?;
            outer_matches &= same_groups(&a, &b);
        }
        Ok(JoinDecomposition {
            min_cube: self.base.labels_of(cube_verts),
            lk_inner: lk_in.labels().to_vec(),
            lk_outer: lk_out.labels().to_vec(),
            is_join,
            inner_is_simplex,
            outer_matches_cube_link: outer_matches,
        })
    }

    /// Reduced homology of the thickening against that of the base, in every
    /// coefficient system.
    pub fn homotopy_audit(&self, budget: usize) -> Result<bool> {
        let k = self.complex()?;
        for coeffs in Coeffs::ALL {
            let a = simplicial_homology(k, coeffs, true, budget)?;
            let b = crate::homology::cubical_homology(&self.base, coeffs, true);
            if !same_groups(&a, &b) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

pub fn build_th1(base: Arc<CubeComplex>) -> Thickening {
    Thickening::th1(base, &ThickenOptions::default())
}

pub fn build_th_alpha(base: Arc<CubeComplex>, alpha: AlphaMap) -> Result<Thickening> {
    Thickening::th_alpha(base, alpha, &ThickenOptions::default())
}

pub fn build_pair_thickening(base: Arc<CubeComplex>, opts: &ThickenOptions) -> Result<Thickening> {
    Thickening::pair(base, opts)
}

/// Cell budget used by the audits when none is given.
pub const AUDIT_BUDGET: usize = DEFAULT_CELL_BUDGET;

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(k: usize) -> Arc<CubeComplex> {
        Arc::new(CubeComplex::from_graph(&Graph::cycle(k)))
    }

    #[test]
    fn th1_examples() {
        let t = build_th1(cycle(5));
        assert!(t.complex().unwrap().same_as(&SimplicialComplex::flag(Graph::cycle(5))));
        let sq = build_th1(Arc::new(CubeComplex::single_cube(2)));
        assert_eq!(sq.complex().unwrap().facets(), vec![vec![0, 1, 2, 3]]);
    }

    #[test]
    fn point_thickening_is_simplex() {
        let base = Arc::new(CubeComplex::new(vec!["o".into()], vec![]).unwrap());
        let alpha = AlphaMap::from_labels(&base, &[("a", "o"), ("b", "o"), ("c", "o")]).unwrap();
        let t = build_th_alpha(base, alpha).unwrap();
        assert_eq!(t.complex().unwrap().dim(), 2);
    }

    #[test]
    fn doubled_fiber_keeps_circle_homology() {
        let base = cycle(5);
        let pairs = [("a", "x1"), ("a2", "x1"), ("b", "x2"), ("c", "x3"), ("d", "x4"), ("e", "x5")];
        let alpha = AlphaMap::from_labels(&base, &pairs).unwrap();
        let t = build_th_alpha(base, alpha).unwrap();
        assert_eq!(t.n_vertices(), 6);
        let h = simplicial_homology(t.complex().unwrap(), Coeffs::Z, true, 1000).unwrap();
        assert_eq!(h.betti_at(1), 1);
        assert!(t.homotopy_audit(1000).unwrap());
    }

    #[test]
    fn non_surjective_alpha() {
        let base = cycle(5);
        let r = AlphaMap::from_labels(&base, &[("a", "x1")]);
        assert!(matches!(r, Err(Error::NotSurjective(_))));
    }

    #[test]
    fn pair_thickening_sizes() {
        for k in 5..9 {
            let t = build_pair_thickening(cycle(k), &ThickenOptions::default()).unwrap();
            assert_eq!(t.n_vertices(), k * (k - 3));
        }
        let sq = build_pair_thickening(Arc::new(CubeComplex::single_cube(2)), &ThickenOptions::default());
        assert!(matches!(sq, Err(Error::ThickeningEmpty)));
    }

    #[test]
    fn pair_labels_round_trip() {
        let t = build_pair_thickening(cycle(5), &ThickenOptions::default()).unwrap();
        let y = t.index_of("x1|x3").unwrap();
        assert_eq!(t.label(y), "x1|x3");
        let z = t.index_of("x3|x1").unwrap();
        assert!(!t.adjacent(y, z));
        assert!(t.index_of("x1|x2").is_err());
    }

    fn grid() -> Arc<CubeComplex> {
        let labels: Vec<String> = (0..16).map(|i| format!("g{i}")).collect();
        let squares = (0..3)
            .flat_map(|r| (0..3).map(move |c| 4 * r + c))
            .map(|v| vec![v, v + 1, v + 4, v + 5])
            .collect();
        Arc::new(CubeComplex::new(labels, squares).unwrap())
    }

    fn cube_graph() -> Arc<CubeComplex> {
        let labels: Vec<String> = (0..8).map(|i| format!("c{i}")).collect();
        let edges: Vec<(usize, usize)> = (0..8usize)
            .flat_map(|a| (0..3).map(move |b| (a, a ^ (1 << b))))
            .filter(|(a, b)| a < b)
            .collect();
        Arc::new(CubeComplex::from_graph(&Graph::from_indices(labels, edges).unwrap()))
    }

    #[test]
    fn base_level_scans_match_explicit_graph() {
        let bases = [cycle(5), cycle(7), Arc::new(CubeComplex::from_graph(&Graph::cycle(4))), cube_graph(), grid()];
        let mut saw_square = false;
        for base in bases {
            let t = build_pair_thickening(base, &ThickenOptions::default()).unwrap();
            let g = t.one_skeleton().unwrap();
            for y in 0..t.n_vertices() {
                let local = t.four_cycle_through(y);
                saw_square |= local.is_some();
                assert_eq!(local.is_some(), g.chordless_four_cycle_at(y).is_some());
                let link = t.complex().unwrap().link(&[y]).unwrap();
                let scan = t.local_scan(y);
                match link.is_k_large(5, 100_000) {
                    Ok(c) => assert_eq!(scan.link_ok(), c.is_large, "{}", t.label(y)),
                    Err(Error::BudgetExceeded { .. }) => {
                        let square = link.one_skeleton().chordless_cycle(4).is_some();
                        assert_eq!(scan.link_square_free, !square, "{}", t.label(y));
                    }
                    Err(e) => panic!("{e}"),
                }
            }
        }
        assert!(saw_square);
    }

    #[test]
    fn flag_audit_on_cycle() {
        let t = build_pair_thickening(cycle(5), &ThickenOptions::default()).unwrap();
        assert!(t.flag_audit().unwrap());
        assert_eq!(t.complex().unwrap().f_vector(1000).unwrap(), vec![10, 25, 20, 5]);
    }
}
