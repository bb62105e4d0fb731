//! Simplicial complexes stored either by facets or as the flag complex of a graph.
//!
//! Simplices are sorted slices of vertex indices; the empty slice is the empty
//! simplex and belongs to every complex. Vertex labels are opaque strings and
//! every derived complex (links, full subcomplexes, spheres) keeps the labels of
//! its ambient complex, so two complexes can be compared as labeled objects.

use std::collections::{BTreeSet, HashMap, HashSet};

use crate::error::{Error, Result};
use crate::graph::{build_index, Graph};

/// Default cap on the number of cells produced by an explicit expansion.
pub const DEFAULT_CELL_BUDGET: usize = 10_000_000;

#[derive(Clone, Debug)]
enum Kind {
    Explicit {
        facets: Vec<Vec<usize>>,
        /// For each vertex, the facets containing it.
        incidence: Vec<Vec<usize>>,
    },
    Flag(Graph),
}

#[derive(Clone, Debug)]
pub struct SimplicialComplex {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    kind: Kind,
}

/// Outcome of a flagness test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagCheck {
    pub is_flag: bool,
    /// A minimal clique of the 1-skeleton that spans no simplex.
    pub witness: Option<Vec<usize>>,
}

/// Outcome of a k-largeness test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LargenessCheck {
    pub is_large: bool,
    pub non_flag_witness: Option<Vec<usize>>,
    /// A chordless cycle of length below k.
    pub cycle_witness: Option<Vec<usize>>,
}

fn normalize_facets(n: usize, facets: Vec<Vec<usize>>) -> Result<Vec<Vec<usize>>> {
    let mut sets: Vec<Vec<usize>> = Vec::with_capacity(facets.len() + n);
    let mut covered = vec![false; n];
    for mut f in facets {
        f.sort_unstable();
        f.dedup();
        if let Some(&bad) = f.iter().find(|&&v| v >= n) {
            return Err(Error::InvalidInput(format!("facet vertex {bad} out of range")));
        }
        for &v in &f {
            covered[v] = true;
        }
        if !f.is_empty() {
            sets.push(f);
        }
    }
    for (v, c) in covered.iter().enumerate() {
        if !c {
            sets.push(vec![v]);
        }
    }
    // Largest first so containment only needs checking against kept facets.
    sets.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    sets.dedup();
    let mut kept: Vec<Vec<usize>> = Vec::with_capacity(sets.len());
    let mut incidence: Vec<Vec<usize>> = vec![Vec::new(); n];
    for f in sets {
        let contained = {
            let mut cand: Option<Vec<usize>> = None;
            for &v in &f {
                let inc = &incidence[v];
                cand = Some(match cand {
                    None => inc.clone(),
                    Some(c) => c.into_iter().filter(|i| inc.binary_search(i).is_ok()).collect(),
                });
                if cand.as_ref().is_some_and(|c| c.is_empty()) {
                    break;
                }
            }
            cand.is_some_and(|c| !c.is_empty())
        };
        if !contained {
            let id = kept.len();
            for &v in &f {
                incidence[v].push(id);
            }
            kept.push(f);
        }
    }
    kept.sort();
    Ok(kept)
}

fn incidence_of(n: usize, facets: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut inc = vec![Vec::new(); n];
    for (i, f) in facets.iter().enumerate() {
        for &v in f {
            inc[v].push(i);
        }
    }
    inc
}

fn intersect_sorted(a: &[usize], b: &[usize]) -> Vec<usize> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

impl SimplicialComplex {
    /// Complex generated by `facets`; listed vertices lying in no facet become 0-simplices.
    pub fn explicit(labels: Vec<String>, facets: Vec<Vec<usize>>) -> Result<Self> {
        let index = build_index(&labels)?;
        let facets = normalize_facets(labels.len(), facets)?;
        let incidence = incidence_of(labels.len(), &facets);
        Ok(SimplicialComplex {
            labels,
            index,
            kind: Kind::Explicit { facets, incidence },
        })
    }

    pub fn explicit_from_labels<S: AsRef<str>>(labels: Vec<String>, facets: &[Vec<S>]) -> Result<Self> {
        let index = build_index(&labels)?;
        let mut idx = Vec::with_capacity(facets.len());
        for f in facets {
            let mut s = Vec::with_capacity(f.len());
            for l in f {
                s.push(
                    *index
                        .get(l.as_ref())
                        .ok_or_else(|| Error::UnknownLabel(l.as_ref().to_string()))?,
                );
            }
            idx.push(s);
        }
        Self::explicit(labels, idx)
    }

    /// The flag complex whose simplices are the cliques of `graph`.
    pub fn flag(graph: Graph) -> Self {
        let labels = graph.labels().to_vec();
        let index = build_index(&labels).expect("graph labels are unique");
        SimplicialComplex {
            labels,
            index,
            kind: Kind::Flag(graph),
        }
    }

    /// The complex with no vertices, i.e. containing only the empty simplex.
    pub fn empty() -> Self {
        SimplicialComplex::explicit(Vec::new(), Vec::new()).expect("empty complex")
    }

    /// A single simplex on the given labels.
    pub fn simplex(labels: Vec<String>) -> Self {
        let all = (0..labels.len()).collect();
        SimplicialComplex::explicit(labels, vec![all]).expect("simplex")
    }

    pub fn n_vertices(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels_of(&self, s: &[usize]) -> Vec<String> {
        s.iter().map(|&v| self.labels[v].clone()).collect()
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// Sorted index simplex from labels. Membership is not checked.
    pub fn simplex_from_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<Vec<usize>> {
        let mut s = labels
            .iter()
            .map(|l| self.index_of(l.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        s.sort_unstable();
        s.dedup();
        Ok(s)
    }

    pub fn is_flag_mode(&self) -> bool {
        matches!(self.kind, Kind::Flag(_))
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        match &self.kind {
            Kind::Flag(g) => g.adjacent(u, v),
            Kind::Explicit { incidence, .. } => {
                u != v && !intersect_sorted(&incidence[u], &incidence[v]).is_empty()
            }
        }
    }

    pub fn contains(&self, s: &[usize]) -> bool {
        if s.iter().any(|&v| v >= self.n_vertices()) {
            return false;
        }
        match &self.kind {
            Kind::Flag(g) => s
                .iter()
                .enumerate()
                .all(|(i, &u)| s[i + 1..].iter().all(|&v| g.adjacent(u, v))),
            Kind::Explicit { incidence, .. } => {
                let Some((&first, rest)) = s.split_first() else {
                    return true;
                };
                let mut cand = incidence[first].clone();
                for &v in rest {
                    cand = intersect_sorted(&cand, &incidence[v]);
                    if cand.is_empty() {
                        return false;
                    }
                }
                !cand.is_empty()
            }
        }
    }

    pub fn require_simplex(&self, s: &[usize]) -> Result<()> {
        if self.contains(s) {
            Ok(())
        } else {
            Err(Error::NotASimplex(
                s.iter()
                    .map(|&v| self.labels.get(v).cloned().unwrap_or_else(|| format!("#{v}")))
                    .collect(),
            ))
        }
    }

    pub fn one_skeleton(&self) -> Graph {
        match &self.kind {
            Kind::Flag(g) => g.clone(),
            Kind::Explicit { facets, .. } => {
                let mut edges = HashSet::new();
                for f in facets {
                    for (i, &u) in f.iter().enumerate() {
                        for &v in &f[i + 1..] {
                            edges.insert((u, v));
                        }
                    }
                }
                let mut edges: Vec<_> = edges.into_iter().collect();
                edges.sort_unstable();
                Graph::from_indices(self.labels.clone(), edges).expect("skeleton is simple")
            }
        }
    }

    /// Maximal simplices, each sorted, list sorted.
    pub fn facets(&self) -> Vec<Vec<usize>> {
        match &self.kind {
            Kind::Flag(g) => g.maximal_cliques(),
            Kind::Explicit { facets, .. } => facets.clone(),
        }
    }

    pub fn dim(&self) -> isize {
        self.facets().iter().map(|f| f.len() as isize - 1).max().unwrap_or(-1)
    }

    /// All nonempty simplices ordered by dimension then lexicographically.
    pub fn simplices(&self, budget: usize) -> Result<Vec<Vec<usize>>> {
        match &self.kind {
            Kind::Flag(g) => g.cliques(budget),
            Kind::Explicit { facets, .. } => {
                let mut set: HashSet<Vec<usize>> = HashSet::new();
                for f in facets {
                    if f.len() >= 63 {
                        return Err(Error::BudgetExceeded {
                            what: "simplex expansion",
                            needed: u128::MAX,
                            budget: budget as u128,
                        });
                    }
                    for mask in 1u64..(1u64 << f.len()) {
                        let s: Vec<usize> = f
                            .iter()
                            .enumerate()
                            .filter(|(i, _)| mask >> i & 1 == 1)
                            .map(|(_, &v)| v)
                            .collect();
                        set.insert(s);
                        if set.len() > budget {
                            return Err(Error::BudgetExceeded {
                                what: "simplex expansion",
                                needed: set.len() as u128,
                                budget: budget as u128,
                            });
                        }
                    }
                }
                let mut out: Vec<_> = set.into_iter().collect();
                out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
                Ok(out)
            }
        }
    }

    /// Number of simplices per dimension (index d holds d-simplices).
    pub fn f_vector(&self, budget: usize) -> Result<Vec<usize>> {
        let mut f = Vec::new();
        for s in self.simplices(budget)? {
            let d = s.len() - 1;
            if f.len() <= d {
                f.resize(d + 1, 0);
            }
            f[d] += 1;
        }
        Ok(f)
    }

    /// Explicit copy of this complex (maximal cliques for flag complexes).
    pub fn to_explicit(&self) -> SimplicialComplex {
        match &self.kind {
            Kind::Explicit { .. } => self.clone(),
            Kind::Flag(g) => SimplicialComplex::explicit(self.labels.clone(), g.maximal_cliques())
                .expect("cliques are valid facets"),
        }
    }

    /// Full subcomplex on `w` (indices into this complex). Labels are kept.
    pub fn full_subcomplex(&self, w: &[usize]) -> Result<SimplicialComplex> {
        let mut w = w.to_vec();
        w.sort_unstable();
        w.dedup();
        if let Some(&bad) = w.iter().find(|&&v| v >= self.n_vertices()) {
            return Err(Error::UnknownLabel(format!("#{bad}")));
        }
        match &self.kind {
            Kind::Flag(g) => Ok(SimplicialComplex::flag(g.induced_subgraph(&w))),
            Kind::Explicit { facets, .. } => {
                let pos: HashMap<usize, usize> = w.iter().enumerate().map(|(i, &v)| (v, i)).collect();
                let labels = w.iter().map(|&v| self.labels[v].clone()).collect();
                let new_facets = facets
                    .iter()
                    .map(|f| f.iter().filter_map(|v| pos.get(v).copied()).collect::<Vec<_>>())
                    .filter(|f| !f.is_empty())
                    .collect();
                SimplicialComplex::explicit(labels, new_facets)
            }
        }
    }

    pub fn full_subcomplex_by_labels<S: AsRef<str>>(&self, w: &[S]) -> Result<SimplicialComplex> {
        let idx = w
            .iter()
            .map(|l| self.index_of(l.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        self.full_subcomplex(&idx)
    }

    /// Subcomplex generated by the given simplices (their closures).
    pub fn generated_by(&self, simplices: &[Vec<usize>]) -> Result<SimplicialComplex> {
        let verts: BTreeSet<usize> = simplices.iter().flatten().copied().collect();
        let verts: Vec<usize> = verts.into_iter().collect();
        let pos: HashMap<usize, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let labels = verts.iter().map(|&v| self.labels[v].clone()).collect();
        let facets = simplices
            .iter()
            .map(|s| s.iter().map(|v| pos[v]).collect())
            .collect();
        SimplicialComplex::explicit(labels, facets)
    }

    /// Vertices adjacent to every vertex of `s` and not in `s`.
    pub fn common_neighbors(&self, s: &[usize]) -> Vec<usize> {
        (0..self.n_vertices())
            .filter(|v| !s.contains(v) && s.iter().all(|&u| self.adjacent(u, *v)))
            .collect()
    }

    /// Link of `s`. For the empty simplex this is the complex itself.
    pub fn link(&self, s: &[usize]) -> Result<SimplicialComplex> {
        self.require_simplex(s)?;
        if s.is_empty() {
            return Ok(self.clone());
        }
        match &self.kind {
            Kind::Flag(_) => self.full_subcomplex(&self.common_neighbors(s)),
            Kind::Explicit { facets, incidence } => {
                let mut cand = incidence[s[0]].clone();
                for &v in &s[1..] {
                    cand = intersect_sorted(&cand, &incidence[v]);
                }
                let rest: Vec<Vec<usize>> = cand
                    .iter()
                    .map(|&i| facets[i].iter().copied().filter(|v| !s.contains(v)).collect())
                    .collect();
                let verts: BTreeSet<usize> = rest.iter().flatten().copied().collect();
                let verts: Vec<usize> = verts.into_iter().collect();
                let pos: HashMap<usize, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
                let labels = verts.iter().map(|&v| self.labels[v].clone()).collect();
                let facets = rest
                    .into_iter()
                    .map(|f| f.into_iter().map(|v| pos[&v]).collect())
                    .collect();
                SimplicialComplex::explicit(labels, facets)
            }
        }
    }

    /// Flagness test. Flag-mode complexes are flag by construction.
    pub fn is_flag(&self, budget: usize) -> Result<FlagCheck> {
        if self.is_flag_mode() {
            return Ok(FlagCheck {
                is_flag: true,
                witness: None,
            });
        }
        let g = self.one_skeleton();
        // Cliques come sorted by size, so the first failure is minimal.
        for c in g.cliques(budget)? {
            if !self.contains(&c) {
                return Ok(FlagCheck {
                    is_flag: false,
                    witness: Some(c),
                });
            }
        }
        Ok(FlagCheck {
            is_flag: true,
            witness: None,
        })
    }

    /// `k`-largeness: flag, and every embedded cycle of length below `k` has a chord.
    pub fn is_k_large(&self, k: usize, budget: usize) -> Result<LargenessCheck> {
        if k < 5 {
            return Err(Error::InvalidLargeness(k));
        }
        let flag = self.is_flag(budget)?;
        if !flag.is_flag {
            return Ok(LargenessCheck {
                is_large: false,
                non_flag_witness: flag.witness,
                cycle_witness: None,
            });
        }
        let cycle = self.one_skeleton().chordless_cycle(k - 1);
        Ok(LargenessCheck {
            is_large: cycle.is_none(),
            non_flag_witness: None,
            cycle_witness: cycle,
        })
    }

    /// Vertices at combinatorial distance exactly one from `s`.
    pub fn sphere_vertices(&self, s: &[usize]) -> Vec<usize> {
        (0..self.n_vertices())
            .filter(|v| !s.contains(v) && s.iter().any(|&u| self.adjacent(u, *v)))
            .collect()
    }

    /// Full subcomplex on the vertices at distance one from `s`.
    pub fn combinatorial_sphere(&self, s: &[usize]) -> Result<SimplicialComplex> {
        if s.is_empty() {
            return Err(Error::EmptySimplex);
        }
        self.require_simplex(s)?;
        self.full_subcomplex(&self.sphere_vertices(s))
    }

    /// Union of all simplices meeting `s`.
    pub fn combinatorial_ball(&self, s: &[usize]) -> Result<SimplicialComplex> {
        if s.is_empty() {
            return Err(Error::EmptySimplex);
        }
        self.require_simplex(s)?;
        let meeting: Vec<Vec<usize>> = self
            .facets()
            .into_iter()
            .filter(|f| f.iter().any(|v| s.contains(v)))
            .collect();
        self.generated_by(&meeting)
    }

    /// Facets as sorted label lists, sorted. Two complexes with equal vertex
    /// labels and equal labeled facets are identical as labeled complexes.
    pub fn labeled_facets(&self) -> BTreeSet<Vec<String>> {
        self.facets()
            .into_iter()
            .map(|f| {
                let mut l = self.labels_of(&f);
                l.sort();
                l
            })
            .collect()
    }

    pub fn labeled_vertices(&self) -> BTreeSet<String> {
        self.labels.iter().cloned().collect()
    }

    /// Equality as labeled complexes.
    pub fn same_as(&self, other: &SimplicialComplex) -> bool {
        if self.labeled_vertices() != other.labeled_vertices() {
            return false;
        }
        if self.is_flag_mode() && other.is_flag_mode() {
            let edges = |k: &SimplicialComplex| -> BTreeSet<(String, String)> {
                k.one_skeleton()
                    .edges()
                    .into_iter()
                    .map(|(u, v)| {
                        let (a, b) = (k.label(u).to_string(), k.label(v).to_string());
                        if a < b { (a, b) } else { (b, a) }
                    })
                    .collect()
            };
            return edges(self) == edges(other);
        }
        self.labeled_facets() == other.labeled_facets()
    }

    /// Relabel vertices through `f`; fails on collisions.
    pub fn relabel(&self, f: impl Fn(&str) -> String) -> Result<SimplicialComplex> {
        let labels: Vec<String> = self.labels.iter().map(|l| f(l)).collect();
        match &self.kind {
            Kind::Flag(g) => Ok(SimplicialComplex::flag(Graph::from_indices(labels, g.edges())?)),
            Kind::Explicit { facets, .. } => SimplicialComplex::explicit(labels, facets.clone()),
        }
    }
}

/// Compares `lk(s, K)` with `lk(s \ t, lk(t, K))` for a face `t` of `s`.
pub fn link_simplex_iso_check(k: &SimplicialComplex, s: &[usize], t: &[usize]) -> Result<bool> {
    if !t.iter().all(|v| s.contains(v)) {
        return Err(Error::NotAFace {
            face: k.labels_of(t),
            simplex: k.labels_of(s),
        });
    }
    let direct = k.link(s)?;
    let lk_t = k.link(t)?;
    let residual: Vec<String> = s
        .iter()
        .filter(|v| !t.contains(v))
        .map(|&v| k.label(v).to_string())
        .collect();
    let residual = lk_t.simplex_from_labels(&residual)?;
    let nested = lk_t.link(&residual)?;
    Ok(direct.same_as(&nested))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(xs: &[&str]) -> Vec<String> {
        xs.iter().map(|s| s.to_string()).collect()
    }

    fn c5() -> SimplicialComplex {
        SimplicialComplex::flag(Graph::cycle(5))
    }

    fn hollow_triangle() -> SimplicialComplex {
        SimplicialComplex::explicit(labels(&["a", "b", "c"]), vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap()
    }

    #[test]
    fn flag_checks() {
        assert!(c5().is_flag(100).unwrap().is_flag);
        let check = hollow_triangle().is_flag(100).unwrap();
        assert!(!check.is_flag);
        assert_eq!(check.witness, Some(vec![0, 1, 2]));
    }

    #[test]
    fn largeness_checks() {
        let c4 = SimplicialComplex::flag(Graph::cycle(4));
        let r = c4.is_k_large(5, 100).unwrap();
        assert!(!r.is_large);
        assert_eq!(r.cycle_witness.unwrap().len(), 4);
        assert!(c5().is_k_large(5, 100).unwrap().is_large);
        assert!(!c5().is_k_large(6, 100).unwrap().is_large);
        assert!(matches!(c5().is_k_large(4, 100), Err(Error::InvalidLargeness(4))));
    }

    #[test]
    fn links_in_cycle() {
        let k = c5();
        let lk = k.link(&[0]).unwrap();
        assert_eq!(lk.labeled_vertices(), ["x2", "x5"].iter().map(|s| s.to_string()).collect());
        assert_eq!(lk.one_skeleton().edge_count(), 0);
        assert!(k.link(&[]).unwrap().same_as(&k));
        assert!(matches!(k.link(&[0, 2]), Err(Error::NotASimplex(_))));
    }

    #[test]
    fn explicit_link_of_facet_is_empty() {
        let k = SimplicialComplex::simplex(labels(&["a", "b", "c"]));
        assert!(k.link(&[0, 1, 2]).unwrap().is_empty());
        let lk = k.link(&[0]).unwrap();
        assert_eq!(lk.facets(), vec![vec![0, 1]]);
    }

    #[test]
    fn full_subcomplex_edge_cases() {
        let k = c5();
        assert!(k.full_subcomplex(&[0, 1, 2, 3, 4]).unwrap().same_as(&k));
        assert!(k.full_subcomplex(&[]).unwrap().is_empty());
        assert!(k.full_subcomplex(&[7]).is_err());
    }

    #[test]
    fn spheres_and_balls() {
        let k = c5();
        let s = k.combinatorial_sphere(&[0]).unwrap();
        assert_eq!(s.n_vertices(), 2);
        assert_eq!(s.one_skeleton().edge_count(), 0);
        let b = k.combinatorial_ball(&[0]).unwrap();
        assert_eq!(b.n_vertices(), 3);
        assert_eq!(b.facets().len(), 2);
        let tri = SimplicialComplex::simplex(labels(&["a", "b", "c"]));
        let s = tri.combinatorial_sphere(&[0]).unwrap();
        assert_eq!(s.facets(), vec![vec![0, 1]]);
        assert!(tri.combinatorial_ball(&[0, 1, 2]).unwrap().same_as(&tri));
        assert!(matches!(k.combinatorial_sphere(&[]), Err(Error::EmptySimplex)));
    }

    #[test]
    fn explicit_expansion_agrees_with_flag() {
        let k = c5();
        let e = k.to_explicit();
        assert_eq!(k.simplices(100).unwrap(), e.simplices(100).unwrap());
        assert!(k.same_as(&e));
    }

    #[test]
    fn link_iso_identity_cases() {
        let k = SimplicialComplex::simplex(labels(&["a", "b", "c", "d"]));
        assert!(link_simplex_iso_check(&k, &[0, 1], &[0, 1]).unwrap());
        assert!(link_simplex_iso_check(&k, &[0, 1], &[]).unwrap());
        assert!(link_simplex_iso_check(&k, &[0, 1], &[1]).unwrap());
        assert!(link_simplex_iso_check(&k, &[0, 1], &[2]).is_err());
    }

    #[test]
    fn normalization_drops_contained_facets() {
        let k = SimplicialComplex::explicit(labels(&["a", "b", "c", "d"]), vec![vec![0, 1], vec![0, 1, 2]]).unwrap();
        assert_eq!(k.facets(), vec![vec![0, 1, 2], vec![3]]);
        assert!(k.contains(&[1, 2]));
        assert!(!k.contains(&[2, 3]));
    }
}
