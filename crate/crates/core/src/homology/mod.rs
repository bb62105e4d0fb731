//! Chain complexes of simplicial and cube complexes and their (co)homology
//! over the integers, the rationals and GF(2).

pub mod mv;
pub mod snf;
pub mod vcd;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use crate::cubical::CubeComplex;
use crate::error::{Error, Result};
use crate::simplicial::SimplicialComplex;
use snf::{mod2_rank, rational_rank, smith_invariants, SparseMatrix};

pub use mv::{mayer_vietoris_check, MvReport};
pub use vcd::{cohomological_dimension, link_cd_check, sphere_cd_check, vcd_racg, CdBound, VcdReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Coeffs {
    #[serde(rename = "Z")]
    Z,
    #[serde(rename = "Q")]
    Q,
    #[serde(rename = "GF2")]
    GF2,
}

impl Coeffs {
    pub const ALL: [Coeffs; 3] = [Coeffs::Z, Coeffs::Q, Coeffs::GF2];
}

impl fmt::Display for Coeffs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Coeffs::Z => "Z",
            Coeffs::Q => "Q",
            Coeffs::GF2 => "GF2",
        })
    }
}

impl FromStr for Coeffs {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "z" => Ok(Coeffs::Z),
            "q" => Ok(Coeffs::Q),
            "gf2" | "f2" | "z2" => Ok(Coeffs::GF2),
            _ => Err(Error::InvalidInput(format!("unknown coefficient ring `{s}`"))),
        }
    }
}

/// Free chain complex with one basis element per cell. `boundaries[d]` maps
/// degree d to degree d-1 and is stored by columns (one per d-cell).
#[derive(Clone, Debug)]
pub struct ChainComplex {
    counts: Vec<usize>,
    boundaries: Vec<Vec<Vec<(usize, i64)>>>,
}

impl ChainComplex {
    pub fn new(counts: Vec<usize>, boundaries: Vec<Vec<Vec<(usize, i64)>>>) -> Result<Self> {
        if boundaries.len() != counts.len() {
            return Err(Error::InvalidInput("one boundary map per degree expected".into()));
        }
        for (d, b) in boundaries.iter().enumerate() {
            if b.len() != counts[d] {
                return Err(Error::InvalidInput(format!("boundary {d} has wrong width")));
            }
            if d == 0 && b.iter().any(|c| !c.is_empty()) {
                return Err(Error::InvalidInput("degree 0 cells must have empty boundary".into()));
            }
            if d > 0 && b.iter().flatten().any(|&(r, _)| r >= counts[d - 1]) {
                return Err(Error::InvalidInput(format!("boundary {d} row out of range")));
            }
        }
        Ok(ChainComplex { counts, boundaries })
    }

    /// Simplicial chains with the alternating-sign boundary on sorted vertices.
    pub fn simplicial(k: &SimplicialComplex, budget: usize) -> Result<Self> {
        let simplices = k.simplices(budget)?;
        let top = simplices.last().map_or(0, |s| s.len());
        let mut by_dim: Vec<Vec<&Vec<usize>>> = vec![Vec::new(); top];
        for s in &simplices {
            by_dim[s.len() - 1].push(s);
        }
        let mut index: HashMap<&[usize], usize> = HashMap::new();
        for level in &by_dim {
            for (i, s) in level.iter().enumerate() {
                index.insert(s.as_slice(), i);
            }
        }
        let counts: Vec<usize> = by_dim.iter().map(Vec::len).collect();
        let mut boundaries = Vec::with_capacity(top);
        let mut buf = Vec::new();
        for (d, level) in by_dim.iter().enumerate() {
            let cols = level
                .iter()
                .map(|s| {
                    if d == 0 {
                        return Vec::new();
                    }
                    (0..s.len())
                        .map(|skip| {
                            buf.clear();
                            buf.extend(s.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v));
                            let sign = if skip % 2 == 0 { 1 } else { -1 };
                            (index[buf.as_slice()], sign)
                        })
                        .collect()
                })
                .collect();
            boundaries.push(cols);
        }
        ChainComplex::new(counts, boundaries)
    }

    /// Cellular chains of a cube complex with the standard cube boundary.
    pub fn cubical(x: &CubeComplex) -> Self {
        let top = if x.n_cubes() == 0 { 0 } else { x.dim() + 1 };
        let mut pos = vec![0usize; x.n_cubes()];
        let mut counts = vec![0usize; top];
        for id in 0..x.n_cubes() {
            let d = x.dim_of(id);
            pos[id] = counts[d];
            counts[d] += 1;
        }
        let mut boundaries: Vec<Vec<Vec<(usize, i64)>>> = vec![Vec::new(); top];
        for id in 0..x.n_cubes() {
            let col = x
                .boundary_of(id)
                .iter()
                .map(|&(f, s)| (pos[f], s as i64))
                .collect();
            boundaries[x.dim_of(id)].push(col);
        }
        ChainComplex::new(counts, boundaries).expect("cube boundaries are consistent")
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn top_degree(&self) -> Option<usize> {
        self.counts.len().checked_sub(1)
    }

    pub fn boundary_matrix(&self, d: usize) -> SparseMatrix {
        let rows = if d == 0 { 0 } else { self.counts[d - 1] };
        SparseMatrix::from_columns(rows, &self.boundaries[d])
    }

    pub fn boundary_columns(&self, d: usize) -> &[Vec<(usize, i64)>] {
        &self.boundaries[d]
    }

    /// Checks that every composite of consecutive boundaries vanishes.
    pub fn boundary_squares_to_zero(&self) -> bool {
        for d in 2..self.counts.len() {
            for col in &self.boundaries[d] {
                let mut acc: HashMap<usize, i64> = HashMap::new();
                for &(f, s) in col {
                    for &(g, t) in &self.boundaries[d - 1][f] {
                        *acc.entry(g).or_default() += s * t;
                    }
                }
                if acc.values().any(|&v| v != 0) {
                    return false;
                }
            }
        }
        true
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.counts
            .iter()
            .enumerate()
            .map(|(d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }
}

fn ser_bigs<S: Serializer>(v: &[Vec<BigInt>], s: S) -> std::result::Result<S::Ok, S::Error> {
    let strs: Vec<Vec<String>> = v.iter().map(|t| t.iter().map(|b| b.to_string()).collect()).collect();
    strs.serialize(s)
}

/// Homology groups degree by degree. Entry `i` of each list describes degree
/// `min_degree + i`; reduced results start at degree -1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyResult {
    pub coeffs: Coeffs,
    pub reduced: bool,
    pub min_degree: isize,
    pub betti: Vec<usize>,
    /// Invariant factors above 1 (integer coefficients only).
    #[serde(serialize_with = "ser_bigs")]
    pub torsion: Vec<Vec<BigInt>>,
}

impl HomologyResult {
    fn slot(&self, d: isize) -> Option<usize> {
        let i = d - self.min_degree;
        if i < 0 || i as usize >= self.betti.len() {
            None
        } else {
            Some(i as usize)
        }
    }

    pub fn betti_at(&self, d: isize) -> usize {
        self.slot(d).map_or(0, |i| self.betti[i])
    }

    pub fn torsion_at(&self, d: isize) -> &[BigInt] {
        self.slot(d).map_or(&[], |i| &self.torsion[i])
    }

    pub fn homology_nonzero(&self, d: isize) -> bool {
        self.betti_at(d) > 0 || !self.torsion_at(d).is_empty()
    }

    /// Rank of the free part of H^d (equal to the Betti number in degree d).
    pub fn cohomology_rank(&self, d: isize) -> usize {
        self.betti_at(d)
    }

    /// Torsion of H^d, which is the torsion of H_{d-1}.
    pub fn cohomology_torsion(&self, d: isize) -> &[BigInt] {
        self.torsion_at(d - 1)
    }

    pub fn cohomology_nonzero(&self, d: isize) -> bool {
        self.cohomology_rank(d) > 0 || !self.cohomology_torsion(d).is_empty()
    }

    pub fn max_degree(&self) -> isize {
        self.min_degree + self.betti.len() as isize - 1
    }

    /// Highest degree with nonzero cohomology, if any.
    pub fn top_cohomology_degree(&self) -> Option<isize> {
        (self.min_degree..=self.max_degree() + 1)
            .rev()
            .find(|&d| self.cohomology_nonzero(d))
    }

    pub fn is_trivial(&self) -> bool {
        self.betti.iter().all(|&b| b == 0) && self.torsion.iter().all(Vec::is_empty)
    }

    /// Alternating sum of Betti numbers.
    pub fn euler_characteristic(&self) -> i64 {
        self.betti
            .iter()
            .enumerate()
            .map(|(i, &b)| {
                let d = self.min_degree + i as isize;
                if d.rem_euclid(2) == 0 {
                    b as i64
                } else {
                    -(b as i64)
                }
            })
            .sum()
    }

    /// Group descriptions like "Z^10 + Z/2".
    pub fn describe(&self) -> Vec<String> {
        let ring = match self.coeffs {
            Coeffs::Z => "Z",
            Coeffs::Q => "Q",
            Coeffs::GF2 => "F2",
        };
        self.betti
            .iter()
            .zip(&self.torsion)
            .map(|(&b, t)| {
                let mut parts = Vec::new();
                match b {
                    0 => {}
                    1 => parts.push(ring.to_string()),
                    _ => parts.push(format!("{ring}^{b}")),
                }
                parts.extend(t.iter().map(|f| format!("Z/{f}")));
                if parts.is_empty() {
                    "0".into()
                } else {
                    parts.join(" + ")
                }
            })
            .collect()
    }
}

struct MapData {
    rank: usize,
    torsion: Vec<BigInt>,
}

fn map_data(m: &SparseMatrix, coeffs: Coeffs) -> MapData {
    match coeffs {
        Coeffs::Z => {
            let r = smith_invariants(m);
            MapData {
                rank: r.rank,
                torsion: r.torsion,
            }
        }
        Coeffs::Q => MapData {
            rank: rational_rank(m),
            torsion: Vec::new(),
        },
        Coeffs::GF2 => MapData {
            rank: mod2_rank(m),
            torsion: Vec::new(),
        },
    }
}

pub fn homology(c: &ChainComplex, coeffs: Coeffs, reduced: bool) -> HomologyResult {
    let top = c.counts.len();
    // data[d] describes the boundary from degree d to d-1 (d >= 1).
    let maps: Vec<MapData> = (0..top)
        .map(|d| {
            if d == 0 {
                MapData {
                    rank: 0,
                    torsion: Vec::new(),
                }
            } else {
                map_data(&c.boundary_matrix(d), coeffs)
            }
        })
        .collect();
    let augmentation = usize::from(reduced && c.counts.first().copied().unwrap_or(0) > 0);
    let rank_in = |d: usize| -> usize {
        if d == 0 {
            augmentation
        } else {
            maps[d].rank
        }
    };
    let rank_out = |d: usize| -> usize { if d + 1 < top { maps[d + 1].rank } else { 0 } };
    let mut betti = Vec::new();
    let mut torsion = Vec::new();
    if reduced {
        betti.push(1 - augmentation);
        torsion.push(Vec::new());
    }
    for d in 0..top {
        betti.push(c.counts[d] - rank_in(d) - rank_out(d));
        torsion.push(if d + 1 < top {
            maps[d + 1].torsion.clone()
        } else {
            Vec::new()
        });
    }
    HomologyResult {
        coeffs,
        reduced,
        min_degree: if reduced { -1 } else { 0 },
        betti,
        torsion,
    }
}

pub fn simplicial_homology(k: &SimplicialComplex, coeffs: Coeffs, reduced: bool, budget: usize) -> Result<HomologyResult> {
    Ok(homology(&ChainComplex::simplicial(k, budget)?, coeffs, reduced))
}

pub fn cubical_homology(x: &CubeComplex, coeffs: Coeffs, reduced: bool) -> HomologyResult {
    homology(&ChainComplex::cubical(x), coeffs, reduced)
}

/// Whether two results describe the same groups (ignoring the trailing zero degrees).
pub fn same_groups(a: &HomologyResult, b: &HomologyResult) -> bool {
    let lo = a.min_degree.min(b.min_degree);
    let hi = a.max_degree().max(b.max_degree());
    (lo..=hi).all(|d| a.betti_at(d) == b.betti_at(d) && a.torsion_at(d) == b.torsion_at(d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn labels(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("v{i}")).collect()
    }

    /// Six-vertex triangulation of the projective plane.
    pub(crate) fn rp2() -> SimplicialComplex {
        let facets = vec![
            vec![0, 1, 2],
            vec![0, 2, 3],
            vec![0, 3, 4],
            vec![0, 4, 5],
            vec![0, 1, 5],
            vec![1, 2, 4],
            vec![2, 3, 5],
            vec![1, 3, 4],
            vec![1, 3, 5],
            vec![2, 4, 5],
        ];
        SimplicialComplex::explicit(labels(6), facets).unwrap()
    }

    #[test]
    fn single_edge_boundary() {
        let k = SimplicialComplex::simplex(labels(2));
        let c = ChainComplex::simplicial(&k, 100).unwrap();
        let m = c.boundary_matrix(1);
        assert_eq!((m.n_rows, m.n_cols), (2, 1));
        let col = &c.boundary_columns(1)[0];
        assert_eq!(col.iter().map(|e| e.1).sum::<i64>(), 0);
    }

    #[test]
    fn point_and_empty() {
        let p = SimplicialComplex::simplex(labels(1));
        let h = simplicial_homology(&p, Coeffs::Z, true, 10).unwrap();
        assert!(h.is_trivial());
        let e = SimplicialComplex::empty();
        let h = simplicial_homology(&e, Coeffs::Z, true, 10).unwrap();
        assert_eq!(h.betti_at(-1), 1);
        assert_eq!(h.top_cohomology_degree(), Some(-1));
    }

    #[test]
    fn circle_and_projective_plane() {
        let c5 = SimplicialComplex::flag(Graph::cycle(5));
        let h = simplicial_homology(&c5, Coeffs::Z, false, 100).unwrap();
        assert_eq!(h.betti, vec![1, 1]);
        let rp = rp2();
        let hz = simplicial_homology(&rp, Coeffs::Z, false, 100).unwrap();
        assert_eq!(hz.betti, vec![1, 0, 0]);
        assert_eq!(hz.torsion_at(1), &[BigInt::from(2)]);
        assert!(hz.cohomology_nonzero(2));
        assert!(!hz.cohomology_nonzero(1));
        let h2 = simplicial_homology(&rp, Coeffs::GF2, false, 100).unwrap();
        assert_eq!(h2.betti, vec![1, 1, 1]);
        let hq = simplicial_homology(&rp, Coeffs::Q, false, 100).unwrap();
        assert_eq!(hq.betti, vec![1, 0, 0]);
    }

    #[test]
    fn cubical_square_boundary() {
        let x = CubeComplex::from_graph(&Graph::cycle(4));
        let c = ChainComplex::cubical(&x);
        assert!(c.boundary_squares_to_zero());
        let h = homology(&c, Coeffs::Z, false);
        assert_eq!(h.betti, vec![1, 1]);
        let cube = CubeComplex::single_cube(3);
        let c = ChainComplex::cubical(&cube);
        assert!(c.boundary_squares_to_zero());
        assert!(homology(&c, Coeffs::Z, true).is_trivial());
    }
}
