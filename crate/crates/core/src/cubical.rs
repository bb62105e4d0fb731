//! Finite cube complexes given by maximal cubes, with face closure computed
//! once at load.
//!
//! A d-cube is an array of 2^d distinct vertices indexed by bit masks: the
//! vertex at mask `m` is the corner with coordinates given by the bits of `m`.
//! The canonical labeling puts the smallest vertex at mask 0 and orders axes
//! by the index of the neighbor of that corner along each axis.

use std::collections::{HashMap, VecDeque};

use rayon::prelude::*;
use serde::Serialize;

use crate::collapse::{collapse_cells, CellComplex, CollapseConfig, CollapseVerdict};
use crate::error::{Error, Result};
use crate::graph::{build_index, Graph};
use crate::simplicial::SimplicialComplex;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cube {
    corners: Vec<usize>,
}

fn dim_of_len(len: usize) -> Option<usize> {
    if len.is_power_of_two() {
        Some(len.trailing_zeros() as usize)
    } else {
        None
    }
}

fn permutation_sign(perm: &[usize]) -> i8 {
    let mut seen = vec![false; perm.len()];
    let mut sign = 1i8;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut j = start;
        while !seen[j] {
            seen[j] = true;
            j = perm[j];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

impl Cube {
    /// Canonical form of a labeled cube together with the orientation sign
    /// relating the given labeling to the canonical one.
    pub fn canonical(corners: &[usize]) -> Result<(Cube, i8)> {
        let d = dim_of_len(corners.len())
            .ok_or_else(|| Error::MalformedCube(format!("{} corners is not a power of two", corners.len())))?;
        let mut sorted = corners.to_vec();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::MalformedCube(format!("repeated vertex in {corners:?}")));
        }
        let base = (0..corners.len()).min_by_key(|&m| corners[m]).unwrap();
        let mut axes: Vec<usize> = (0..d).collect();
        axes.sort_by_key(|&j| corners[base ^ (1 << j)]);
        let mut out = vec![0; corners.len()];
        for (m, slot) in out.iter_mut().enumerate() {
            let mut old = base;
            for (k, &axis) in axes.iter().enumerate() {
                if m >> k & 1 == 1 {
                    old ^= 1 << axis;
                }
            }
            *slot = corners[old];
        }
        let reflect = if base.count_ones() % 2 == 0 { 1 } else { -1 };
        Ok((Cube { corners: out }, permutation_sign(&axes) * reflect))
    }

    pub fn vertex(v: usize) -> Cube {
        Cube { corners: vec![v] }
    }

    pub fn dim(&self) -> usize {
        self.corners.len().trailing_zeros() as usize
    }

    pub fn corners(&self) -> &[usize] {
        &self.corners
    }

    pub fn vertex_set(&self) -> Vec<usize> {
        let mut s = self.corners.clone();
        s.sort_unstable();
        s
    }

    pub fn contains(&self, v: usize) -> bool {
        self.corners.contains(&v)
    }

    /// The labeled face fixing `axis` to `side`.
    pub fn facet(&self, axis: usize, side: usize) -> Vec<usize> {
        let d = self.dim();
        (0..1usize << (d - 1))
            .map(|m| {
                let low = m & ((1 << axis) - 1);
                let high = (m >> axis) << (axis + 1);
                self.corners[high | (side << axis) | low]
            })
            .collect()
    }

    /// All labeled faces, one per assignment of {free, 0, 1} to the axes.
    fn all_faces(&self) -> Vec<Vec<usize>> {
        let d = self.dim();
        let mut out = Vec::new();
        let total = 3usize.pow(d as u32);
        for code in 0..total {
            let mut free = Vec::new();
            let mut fixed = 0usize;
            let mut c = code;
            for j in 0..d {
                match c % 3 {
                    0 => free.push(j),
                    1 => {}
                    _ => fixed |= 1 << j,
                }
                c /= 3;
            }
            let face: Vec<usize> = (0..1usize << free.len())
                .map(|m| {
                    let mut mask = fixed;
                    for (k, &j) in free.iter().enumerate() {
                        if m >> k & 1 == 1 {
                            mask |= 1 << j;
                        }
                    }
                    self.corners[mask]
                })
                .collect();
            out.push(face);
        }
        out
    }
}

#[derive(Clone, Debug)]
pub struct CubeComplex {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    cubes: Vec<Cube>,
    vertex_sets: Vec<Vec<usize>>,
    by_set: HashMap<Vec<usize>, usize>,
    maximal: Vec<usize>,
    incidence: Vec<Vec<usize>>,
    /// Codimension-one faces with boundary coefficients.
    boundary: Vec<Vec<(usize, i8)>>,
    edge_nbrs: Vec<Vec<usize>>,
    cube_nbrs: Vec<Vec<usize>>,
}

/// Result of a check that either passes or names a cube and, optionally, a vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CubeCheck {
    pub passed: bool,
    pub witness_cube: Option<Vec<String>>,
    pub witness_vertex: Option<String>,
}

impl CubeCheck {
    fn pass() -> Self {
        CubeCheck {
            passed: true,
            witness_cube: None,
            witness_vertex: None,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct NeighborhoodVerdict {
    pub vertex: String,
    pub verdict: CollapseVerdict,
    pub cells: usize,
    pub vertices: usize,
    pub obstruction: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FiveLargeCertificate {
    pub locally_5_large: bool,
    /// A vertex whose link fails, with a short chordless cycle or non-flag clique.
    pub link_witness: Option<(String, Vec<String>)>,
    pub neighborhoods: Vec<NeighborhoodVerdict>,
    pub certified: bool,
}

impl FiveLargeCertificate {
    pub fn inconclusive_count(&self) -> usize {
        self.neighborhoods
            .iter()
            .filter(|n| n.verdict == CollapseVerdict::Inconclusive)
            .count()
    }
}

impl CubeComplex {
    /// Builds the face closure of the given maximal cubes (vertex arrays
    /// indexed by bit masks). Vertices in no cube become 0-cubes.
    pub fn new(labels: Vec<String>, cubes: Vec<Vec<usize>>) -> Result<Self> {
        let index = build_index(&labels)?;
        let n = labels.len();
        let mut all: Vec<Cube> = Vec::new();
        let mut by_set: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut insert = |cube: Cube, all: &mut Vec<Cube>| -> Result<()> {
            let key = cube.vertex_set();
            match by_set.get(&key) {
                Some(&id) if all[id] != cube => Err(Error::MalformedCube(format!(
                    "two different cubes on the vertex set {key:?}"
                ))),
                Some(_) => Ok(()),
                None => {
                    by_set.insert(key, all.len());
                    all.push(cube);
                    Ok(())
                }
            }
        };
        for v in 0..n {
            insert(Cube::vertex(v), &mut all)?;
        }
        for c in &cubes {
            if let Some(&bad) = c.iter().find(|&&v| v >= n) {
                return Err(Error::MalformedCube(format!("vertex {bad} out of range")));
            }
            let (cube, _) = Cube::canonical(c)?;
            for face in cube.all_faces() {
                let (f, _) = Cube::canonical(&face)?;
                insert(f, &mut all)?;
            }
        }
        Self::from_closure(labels, index, all)
    }

    fn from_closure(labels: Vec<String>, index: HashMap<String, usize>, mut cubes: Vec<Cube>) -> Result<Self> {
        let n = labels.len();
        cubes.sort_by(|a, b| {
            a.dim()
                .cmp(&b.dim())
                .then_with(|| a.vertex_set().cmp(&b.vertex_set()))
        });
        let vertex_sets: Vec<Vec<usize>> = cubes.iter().map(|c| c.vertex_set()).collect();
        let by_set: HashMap<Vec<usize>, usize> =
            vertex_sets.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        let mut incidence = vec![Vec::new(); n];
        for (id, s) in vertex_sets.iter().enumerate() {
            for &v in s {
                incidence[v].push(id);
            }
        }
        let mut boundary = Vec::with_capacity(cubes.len());
        let mut has_coface = vec![false; cubes.len()];
        for c in &cubes {
            let d = c.dim();
            let mut faces = Vec::with_capacity(2 * d);
            for axis in 0..d {
                for side in 0..2 {
                    let (f, sign) = Cube::canonical(&c.facet(axis, side))?;
                    let id = *by_set
                        .get(&f.vertex_set())
                        .ok_or_else(|| Error::MalformedCube("face closure is incomplete".into()))?;
                    if cubes[id] != f {
                        return Err(Error::MalformedCube(format!(
                            "face labeling disagrees on {:?}",
                            f.vertex_set()
                        )));
                    }
                    has_coface[id] = true;
                    let axis_sign = if axis % 2 == 0 { 1 } else { -1 };
                    let side_sign = if side == 1 { 1 } else { -1 };
                    faces.push((id, axis_sign * side_sign * sign));
                }
            }
            boundary.push(faces);
        }
        let maximal: Vec<usize> = (0..cubes.len()).filter(|&i| !has_coface[i]).collect();
        let mut edge_nbrs = vec![Vec::new(); n];
        for (c, s) in cubes.iter().zip(&vertex_sets) {
            if c.dim() == 1 {
                edge_nbrs[s[0]].push(s[1]);
                edge_nbrs[s[1]].push(s[0]);
            }
        }
        let mut cube_nbrs = vec![Vec::new(); n];
        for (v, nbrs) in cube_nbrs.iter_mut().enumerate() {
            let mut set: Vec<usize> = incidence[v]
                .iter()
                .flat_map(|&id| vertex_sets[id].iter().copied())
                .filter(|&u| u != v)
                .collect();
            set.sort_unstable();
            set.dedup();
            *nbrs = set;
        }
        for e in &mut edge_nbrs {
            e.sort_unstable();
        }
        Ok(CubeComplex {
            labels,
            index,
            cubes,
            vertex_sets,
            by_set,
            maximal,
            incidence,
            boundary,
            edge_nbrs,
            cube_nbrs,
        })
    }

    pub fn from_labels<S: AsRef<str>>(labels: Vec<String>, cubes: &[Vec<S>]) -> Result<Self> {
        let index = build_index(&labels)?;
        let cubes = cubes
            .iter()
            .map(|c| {
                c.iter()
                    .map(|l| {
                        index
                            .get(l.as_ref())
                            .copied()
                            .ok_or_else(|| Error::UnknownLabel(l.as_ref().to_string()))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(labels, cubes)
    }

    /// A graph viewed as a 1-dimensional cube complex.
    pub fn from_graph(g: &Graph) -> Self {
        let cubes = g.edges().into_iter().map(|(u, v)| vec![u, v]).collect();
        CubeComplex::new(g.labels().to_vec(), cubes).expect("graphs are valid cube complexes")
    }

    /// A single d-cube with vertices labeled by bit strings.
    pub fn single_cube(d: usize) -> Self {
        let labels = (0..1usize << d)
            .map(|m| format!("{m:0width$b}", width = d.max(1)))
            .collect();
        CubeComplex::new(labels, vec![(0..1usize << d).collect()]).expect("cube")
    }

    pub fn n_vertices(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels_of(&self, vs: &[usize]) -> Vec<String> {
        vs.iter().map(|&v| self.labels[v].clone()).collect()
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn n_cubes(&self) -> usize {
        self.cubes.len()
    }

    pub fn cube(&self, id: usize) -> &Cube {
        &self.cubes[id]
    }

    pub fn cubes(&self) -> &[Cube] {
        &self.cubes
    }

    pub fn dim_of(&self, id: usize) -> usize {
        self.cubes[id].dim()
    }

    pub fn dim(&self) -> usize {
        self.cubes.iter().map(Cube::dim).max().unwrap_or(0)
    }

    pub fn vertex_set(&self, id: usize) -> &[usize] {
        &self.vertex_sets[id]
    }

    pub fn cube_id(&self, vertex_set: &[usize]) -> Option<usize> {
        let mut key = vertex_set.to_vec();
        key.sort_unstable();
        self.by_set.get(&key).copied()
    }

    pub fn vertex_cube(&self, v: usize) -> usize {
        self.by_set[&vec![v]]
    }

    pub fn maximal_cubes(&self) -> &[usize] {
        &self.maximal
    }

    /// Cubes containing `v`, including its vertex cube.
    pub fn cubes_at(&self, v: usize) -> &[usize] {
        &self.incidence[v]
    }

    pub fn boundary_of(&self, id: usize) -> &[(usize, i8)] {
        &self.boundary[id]
    }

    pub fn edge_neighbors(&self, v: usize) -> &[usize] {
        &self.edge_nbrs[v]
    }

    /// Vertices at cubical distance exactly one.
    pub fn cube_neighbors(&self, v: usize) -> &[usize] {
        &self.cube_nbrs[v]
    }

    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = vec![0; self.dim() + 1];
        for c in &self.cubes {
            f[c.dim()] += 1;
        }
        f
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }

    pub fn one_skeleton(&self) -> Graph {
        let edges: Vec<(usize, usize)> = self
            .cubes
            .iter()
            .zip(&self.vertex_sets)
            .filter(|(c, _)| c.dim() == 1)
            .map(|(_, s)| (s[0], s[1]))
            .collect();
        Graph::from_indices(self.labels.clone(), edges).expect("edges are simple")
    }

    /// Maximal cubes as labeled corner arrays.
    pub fn maximal_labeled(&self) -> Vec<Vec<String>> {
        self.maximal
            .iter()
            .map(|&id| self.labels_of(self.cubes[id].corners()))
            .collect()
    }

    /// Cell structure for collapse and homology.
    pub fn cell_complex(&self) -> CellComplex {
        CellComplex::new(
            self.cubes.iter().map(Cube::dim).collect(),
            self.boundary
                .iter()
                .map(|fs| fs.iter().map(|&(f, _)| f).collect())
                .collect(),
            self.vertex_sets.clone(),
        )
    }

    /// Breadth-first cubical distances from `v`; `None` for unreachable vertices.
    pub fn distances_from(&self, v: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n_vertices()];
        dist[v] = Some(0);
        let mut queue = VecDeque::from([v]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.cube_nbrs[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn require_connected(&self) -> Result<()> {
        if self.n_vertices() == 0 {
            return Err(Error::EmptyComplex);
        }
        let dist = self.distances_from(0);
        if dist.iter().any(Option::is_none) {
            let comp: Vec<usize> = (0..self.n_vertices()).filter(|&u| dist[u].is_some()).collect();
            return Err(Error::Disconnected {
                component: self.labels_of(&comp),
            });
        }
        Ok(())
    }

    pub fn cubical_distance(&self, v: usize, w: usize) -> Result<usize> {
        self.require_connected()?;
        Ok(self.distances_from(v)[w].expect("connected"))
    }

    /// Cubes containing every vertex of `s`.
    pub fn cubes_containing(&self, s: &[usize]) -> Vec<usize> {
        let Some((&first, rest)) = s.split_first() else {
            return (0..self.cubes.len()).collect();
        };
        self.incidence[first]
            .iter()
            .copied()
            .filter(|&id| rest.iter().all(|v| self.vertex_sets[id].binary_search(v).is_ok()))
            .collect()
    }

    /// The unique inclusion-minimal cube containing `s`.
    pub fn minimal_cube(&self, s: &[usize]) -> Result<usize> {
        if s.is_empty() {
            return Err(Error::EmptySimplex);
        }
        let containing = self.cubes_containing(s);
        if containing.is_empty() {
            return Err(Error::NoCommonCube(self.labels_of(s)));
        }
        let min_dim = containing.iter().map(|&id| self.dim_of(id)).min().unwrap();
        let candidates: Vec<usize> = containing
            .iter()
            .copied()
            .filter(|&id| self.dim_of(id) == min_dim)
            .collect();
        let best = candidates[0];
        // The minimum-dimension cube must lie in every other containing cube.
        for &other in &containing {
            let inside = self.vertex_sets[best]
                .iter()
                .all(|v| self.vertex_sets[other].binary_search(v).is_ok());
            if !inside {
                let rival = containing
                    .iter()
                    .copied()
                    .filter(|&id| {
                        self.vertex_sets[id]
                            .iter()
                            .all(|v| self.vertex_sets[other].binary_search(v).is_ok())
                    })
                    .min_by_key(|&id| self.dim_of(id))
                    .unwrap_or(other);
                return Err(Error::FiveLargenessViolated(
                    self.labels_of(&self.vertex_sets[best]),
                    self.labels_of(&self.vertex_sets[rival]),
                ));
            }
        }
        Ok(best)
    }

    /// Link of a cube, with each codimension-one coface labeled by the
    /// neighbor of `corner` it adds. `corner` must be a vertex of the cube.
    pub fn cube_link_at(&self, id: usize, corner: usize) -> Result<SimplicialComplex> {
        if !self.cubes[id].contains(corner) {
            return Err(Error::CubeNotInComplex(self.labels_of(&[corner])));
        }
        let inside = &self.vertex_sets[id];
        let mut link_verts: Vec<usize> = Vec::new();
        let mut facets: Vec<Vec<usize>> = Vec::new();
        for &m in &self.maximal {
            let mset = &self.vertex_sets[m];
            if !inside.iter().all(|v| mset.binary_search(v).is_ok()) {
                continue;
            }
            let out: Vec<usize> = self.edge_nbrs[corner]
                .iter()
                .copied()
                .filter(|u| mset.binary_search(u).is_ok() && inside.binary_search(u).is_err())
                .collect();
            link_verts.extend(&out);
            facets.push(out);
        }
        link_verts.sort_unstable();
        link_verts.dedup();
        let pos: HashMap<usize, usize> = link_verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let facets = facets
            .into_iter()
            .map(|f| f.into_iter().map(|v| pos[&v]).collect())
            .collect();
        SimplicialComplex::explicit(self.labels_of(&link_verts), facets)
    }

    pub fn cube_link(&self, id: usize) -> Result<SimplicialComplex> {
        let corner = self.cubes.get(id).ok_or_else(|| Error::CubeNotInComplex(vec![format!("#{id}")]))?.corners()[0];
        self.cube_link_at(id, corner)
    }

    /// Vertex link, labeled by neighboring vertices.
    pub fn vertex_link(&self, v: usize) -> SimplicialComplex {
        self.cube_link_at(self.vertex_cube(v), v).expect("vertex cube")
    }

    /// Compares the link of a cube with the link of its edges at `corner`
    /// inside the vertex link of `corner`.
    pub fn link_iso_check(&self, id: usize, corner: usize) -> Result<bool> {
        let direct = self.cube_link_at(id, corner)?;
        let vl = self.vertex_link(corner);
        let edges: Vec<String> = self.edge_nbrs[corner]
            .iter()
            .filter(|u| self.vertex_sets[id].binary_search(u).is_ok())
            .map(|&u| self.labels[u].clone())
            .collect();
        let tau = vl.simplex_from_labels(&edges)?;
        let nested = vl.link(&tau)?;
        Ok(direct.same_as(&nested))
    }

    pub fn check_no_isolated_corners(&self) -> CubeCheck {
        for (id, c) in self.cubes.iter().enumerate() {
            for &v in c.corners() {
                let escapes = self.edge_nbrs[v]
                    .iter()
                    .any(|u| self.vertex_sets[id].binary_search(u).is_err());
                if !escapes {
                    return CubeCheck {
                        passed: false,
                        witness_cube: Some(self.labels_of(&self.vertex_sets[id])),
                        witness_vertex: Some(self.labels[v].clone()),
                    };
                }
            }
        }
        CubeCheck::pass()
    }

    /// Whether the complex stays connected and nonempty after deleting the
    /// closed cube `id` (every cube meeting it goes too).
    pub fn removal_disconnects(&self, id: usize) -> bool {
        let n = self.n_vertices();
        let mut removed = vec![false; n];
        for &v in &self.vertex_sets[id] {
            removed[v] = true;
        }
        let Some(start) = (0..n).find(|&v| !removed[v]) else {
            return true;
        };
        let mut seen = removed.clone();
        seen[start] = true;
        let mut stack = vec![start];
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in &self.edge_nbrs[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count + self.vertex_sets[id].len() < n
    }

    pub fn check_no_disconnecting_cubes(&self) -> Result<CubeCheck> {
        self.require_connected()?;
        let bad = (0..self.cubes.len())
            .into_par_iter()
            .find_first(|&id| self.removal_disconnects(id));
        Ok(match bad {
            None => CubeCheck::pass(),
            Some(id) => CubeCheck {
                passed: false,
                witness_cube: Some(self.labels_of(&self.vertex_sets[id])),
                witness_vertex: None,
            },
        })
    }

    /// Vertices of the combinatorial r-ball around `v`, with the maximal cubes
    /// forming it: each step adds every cube meeting the previous vertex set.
    fn ball(&self, v: usize, r: usize) -> (Vec<usize>, Vec<usize>) {
        let mut verts = vec![v];
        let mut cubes = vec![self.vertex_cube(v)];
        let mut in_ball = vec![false; self.n_vertices()];
        in_ball[v] = true;
        for _ in 0..r {
            let mut chosen: Vec<usize> = verts
                .iter()
                .flat_map(|&u| self.incidence[u].iter().copied())
                .filter(|id| self.maximal.binary_search(id).is_ok())
                .collect();
            chosen.sort_unstable();
            chosen.dedup();
            for &id in &chosen {
                for &u in &self.vertex_sets[id] {
                    if !in_ball[u] {
                        in_ball[u] = true;
                        verts.push(u);
                    }
                }
            }
            cubes = chosen;
        }
        verts.sort_unstable();
        (verts, cubes)
    }

    /// The cubical r-neighborhood of `v` as a cube complex. Labels are kept.
    pub fn cubical_neighborhood(&self, v: usize, r: usize) -> CubeComplex {
        let (verts, cubes) = self.ball(v, r);
        let pos: HashMap<usize, usize> = verts.iter().enumerate().map(|(i, &u)| (u, i)).collect();
        let cubes = cubes
            .iter()
            .map(|&id| self.cubes[id].corners().iter().map(|u| pos[u]).collect())
            .collect();
        CubeComplex::new(self.labels_of(&verts), cubes).expect("subcomplex of a valid complex")
    }

    /// The full subcomplex on a vertex set, labels kept.
    pub fn full_subcomplex(&self, verts: &[usize]) -> CubeComplex {
        let mut verts = verts.to_vec();
        verts.sort_unstable();
        verts.dedup();
        let pos: HashMap<usize, usize> = verts.iter().enumerate().map(|(i, &u)| (u, i)).collect();
        let cubes = self
            .cubes
            .iter()
            .zip(&self.vertex_sets)
            .filter(|(_, s)| s.iter().all(|u| pos.contains_key(u)))
            .map(|(c, _)| c.corners().iter().map(|u| pos[u]).collect())
            .collect();
        CubeComplex::new(self.labels_of(&verts), cubes).expect("subcomplex of a valid complex")
    }

    pub fn neighborhood_verdict(&self, v: usize, config: &CollapseConfig) -> NeighborhoodVerdict {
        let nb = self.cubical_neighborhood(v, 2);
        let report = collapse_cells(&nb.cell_complex(), config);
        NeighborhoodVerdict {
            vertex: self.labels[v].clone(),
            verdict: report.verdict,
            cells: nb.n_cubes(),
            vertices: nb.n_vertices(),
            obstruction: report.obstruction,
        }
    }

    /// Link 5-largeness at one vertex, with a labeled witness on failure.
    pub fn link_witness(&self, v: usize, budget: usize) -> Result<Option<Vec<String>>> {
        let link = self.vertex_link(v);
        let r = link.is_k_large(5, budget)?;
        Ok(if r.is_large {
            None
        } else {
            let w = r.non_flag_witness.or(r.cycle_witness).unwrap_or_default();
            Some(link.labels_of(&w))
        })
    }

    pub fn check_5_large(&self, config: &CollapseConfig, budget: usize) -> Result<FiveLargeCertificate> {
        let n = self.n_vertices();
        let links: Vec<Option<Vec<String>>> = (0..n)
            .into_par_iter()
            .map(|v| self.link_witness(v, budget))
            .collect::<Result<_>>()?;
        let link_witness = links
            .iter()
            .enumerate()
            .find_map(|(v, w)| w.clone().map(|w| (self.labels[v].clone(), w)));
        let neighborhoods: Vec<NeighborhoodVerdict> = (0..n)
            .into_par_iter()
            .map(|v| self.neighborhood_verdict(v, config))
            .collect();
        let locally = link_witness.is_none();
        let certified = locally && neighborhoods.iter().all(|nb| nb.verdict == CollapseVerdict::Yes);
        Ok(FiveLargeCertificate {
            locally_5_large: locally,
            link_witness,
            neighborhoods,
            certified,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(k: usize) -> CubeComplex {
        CubeComplex::from_graph(&Graph::cycle(k))
    }

    #[test]
    fn canonical_form_and_sign() {
        let (cube, sign) = Cube::canonical(&[3, 1, 2, 0]).unwrap();
        assert_eq!(cube.corners(), &[0, 1, 2, 3]);
        // Reflection across the anti-diagonal.
        assert_eq!(sign, -1);
        let (_, sign) = Cube::canonical(&[1, 0]).unwrap();
        assert_eq!(sign, -1);
        assert!(Cube::canonical(&[0, 0]).is_err());
        assert!(Cube::canonical(&[0, 1, 2]).is_err());
    }

    #[test]
    fn boundary_squares_to_zero() {
        let x = CubeComplex::single_cube(3);
        assert_eq!(x.f_vector(), vec![8, 12, 6, 1]);
        for id in 0..x.n_cubes() {
            let mut acc: HashMap<usize, i32> = HashMap::new();
            for &(f, s) in x.boundary_of(id) {
                for &(g, t) in x.boundary_of(f) {
                    *acc.entry(g).or_default() += (s * t) as i32;
                }
            }
            assert!(acc.values().all(|&c| c == 0), "cube {id}");
        }
    }

    #[test]
    fn cycle_distances() {
        let x = c(5);
        assert_eq!(x.cubical_distance(0, 1).unwrap(), 1);
        assert_eq!(x.cubical_distance(0, 2).unwrap(), 2);
        let sq = CubeComplex::single_cube(2);
        assert_eq!(sq.cubical_distance(0, 3).unwrap(), 1);
        let two = CubeComplex::new(vec!["a".into(), "b".into()], vec![]).unwrap();
        assert!(matches!(two.cubical_distance(0, 1), Err(Error::Disconnected { .. })));
    }

    #[test]
    fn minimal_cubes() {
        let x = c(5);
        assert_eq!(x.vertex_set(x.minimal_cube(&[0]).unwrap()), &[0]);
        assert_eq!(x.vertex_set(x.minimal_cube(&[0, 1]).unwrap()), &[0, 1]);
        assert!(matches!(x.minimal_cube(&[0, 2]), Err(Error::NoCommonCube(_))));
        let sq = CubeComplex::single_cube(2);
        assert_eq!(sq.dim_of(sq.minimal_cube(&[0, 3]).unwrap()), 2);
    }

    #[test]
    fn two_squares_on_same_diagonal_are_ambiguous() {
        // Two squares sharing the opposite corners a, c.
        let labels: Vec<String> = ["a", "b", "c", "d", "e", "f"].iter().map(|s| s.to_string()).collect();
        let x = CubeComplex::from_labels(labels, &[vec!["a", "b", "d", "c"], vec!["a", "e", "f", "c"]]).unwrap();
        assert!(matches!(
            x.minimal_cube(&[x.index_of("a").unwrap(), x.index_of("c").unwrap()]),
            Err(Error::FiveLargenessViolated(_, _))
        ));
    }

    #[test]
    fn conflicting_cubes_rejected() {
        let labels: Vec<String> = ["a", "b", "c", "d"].iter().map(|s| s.to_string()).collect();
        let r = CubeComplex::from_labels(labels, &[vec!["a", "b", "c", "d"], vec!["a", "b", "d", "c"]]);
        assert!(matches!(r, Err(Error::MalformedCube(_))));
    }

    #[test]
    fn links_of_cycle() {
        let x = c(5);
        let lk = x.vertex_link(0);
        assert_eq!(lk.n_vertices(), 2);
        assert_eq!(lk.one_skeleton().edge_count(), 0);
        let edge = x.cube_id(&[0, 1]).unwrap();
        assert!(x.cube_link(edge).unwrap().is_empty());
        assert!(x.link_iso_check(edge, 1).unwrap());
    }

    #[test]
    fn corners_and_disconnection() {
        let sq = CubeComplex::single_cube(2);
        let r = sq.check_no_isolated_corners();
        assert!(!r.passed);
        assert_eq!(r.witness_cube.unwrap().len(), 4);
        assert!(c(5).check_no_isolated_corners().passed);
        let path = CubeComplex::from_graph(&Graph::path(3));
        let r = path.check_no_disconnecting_cubes().unwrap();
        assert!(!r.passed);
        assert_eq!(r.witness_cube, Some(vec!["p2".to_string()]));
        assert!(c(5).check_no_disconnecting_cubes().unwrap().passed);
    }

    #[test]
    fn neighborhoods_of_cycles() {
        let x = c(5);
        let b1 = x.cubical_neighborhood(0, 1);
        assert_eq!(b1.f_vector(), vec![3, 2]);
        let b2 = x.cubical_neighborhood(0, 2);
        assert_eq!(b2.f_vector(), vec![5, 4]);
        let cert = x.check_5_large(&CollapseConfig::default(), 1000).unwrap();
        assert!(cert.certified);
        let cert = c(4).check_5_large(&CollapseConfig::default(), 1000).unwrap();
        assert!(!cert.certified);
        assert!(cert.locally_5_large);
        assert_eq!(cert.inconclusive_count(), 4);
    }
}
