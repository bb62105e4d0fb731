//! Greedy elementary collapses on regular cell complexes (simplicial or cubical).

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf2::sparse_rank;
use crate::simplicial::SimplicialComplex;

/// Finite regular cell complex: each cell knows its dimension, its vertex set
/// and its codimension-one faces. Vertices have no faces.
#[derive(Clone, Debug)]
pub struct CellComplex {
    dims: Vec<usize>,
    faces: Vec<Vec<usize>>,
    vertex_sets: Vec<Vec<usize>>,
}

impl CellComplex {
    /// Cells must be listed so that every face precedes the cells containing it.
    pub fn new(dims: Vec<usize>, faces: Vec<Vec<usize>>, vertex_sets: Vec<Vec<usize>>) -> Self {
        assert_eq!(dims.len(), faces.len());
        assert_eq!(dims.len(), vertex_sets.len());
        CellComplex {
            dims,
            faces,
            vertex_sets,
        }
    }

    pub fn from_simplicial(k: &SimplicialComplex, budget: usize) -> Result<Self> {
        let simplices = k.simplices(budget)?;
        let id: HashMap<&[usize], usize> = simplices
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_slice(), i))
            .collect();
        let mut dims = Vec::with_capacity(simplices.len());
        let mut faces = Vec::with_capacity(simplices.len());
        for s in &simplices {
            dims.push(s.len() - 1);
            if s.len() == 1 {
                faces.push(Vec::new());
                continue;
            }
            let mut f = Vec::with_capacity(s.len());
            let mut buf = Vec::with_capacity(s.len() - 1);
            for skip in 0..s.len() {
                buf.clear();
                buf.extend(s.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v));
                f.push(id[buf.as_slice()]);
            }
            faces.push(f);
        }
        Ok(CellComplex::new(dims, faces, simplices))
    }

    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn dim_of(&self, c: usize) -> usize {
        self.dims[c]
    }

    pub fn faces_of(&self, c: usize) -> &[usize] {
        &self.faces[c]
    }

    pub fn vertex_set(&self, c: usize) -> &[usize] {
        &self.vertex_sets[c]
    }

    fn cofaces(&self) -> Vec<Vec<usize>> {
        let mut co = vec![Vec::new(); self.len()];
        for (c, fs) in self.faces.iter().enumerate() {
            for &f in fs {
                co[f].push(c);
            }
        }
        co
    }

    /// Reduced Betti numbers over GF(2) of the subcomplex of `alive` cells,
    /// indexed by degree + 1 (entry 0 is degree -1).
    pub fn reduced_gf2_betti(&self, alive: &[bool]) -> Vec<usize> {
        let top = self
            .dims
            .iter()
            .zip(alive)
            .filter(|(_, &a)| a)
            .map(|(&d, _)| d)
            .max();
        let Some(top) = top else {
            return vec![1];
        };
        let mut pos = vec![usize::MAX; self.len()];
        let mut counts = vec![0usize; top + 1];
        for c in 0..self.len() {
            if alive[c] {
                pos[c] = counts[self.dims[c]];
                counts[self.dims[c]] += 1;
            }
        }
        // ranks[d] = rank of the boundary from degree d to d-1; degree 0 maps
        // onto the augmentation, which has rank 1 when there are vertices.
        let mut ranks = vec![0usize; top + 2];
        ranks[0] = usize::from(counts[0] > 0);
        for (d, rank) in ranks.iter_mut().enumerate().take(top + 1).skip(1) {
            let cols: Vec<Vec<usize>> = (0..self.len())
                .filter(|&c| alive[c] && self.dims[c] == d)
                .map(|c| self.faces[c].iter().map(|&f| pos[f]).collect())
                .collect();
            *rank = sparse_rank(&cols);
        }
        let mut betti = Vec::with_capacity(top + 2);
        betti.push(1 - ranks[0]);
        for d in 0..=top {
            betti.push(counts[d] - ranks[d] - ranks[d + 1]);
        }
        betti
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CollapseVerdict {
    Yes,
    Inconclusive,
}

#[derive(Clone, Copy, Debug)]
pub struct CollapseConfig {
    pub restarts: usize,
    pub seed: u64,
}

impl Default for CollapseConfig {
    fn default() -> Self {
        CollapseConfig {
            restarts: 32,
            seed: 0x5eed_c011,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CollapseReport {
    pub verdict: CollapseVerdict,
    /// Vertex sets of the cells left by the best attempt.
    pub residual: Vec<Vec<usize>>,
    /// Elementary collapses (free face, its unique coface) of the best attempt.
    pub log: Vec<(Vec<usize>, Vec<usize>)>,
    pub attempts: usize,
    /// Why restarting stopped early, when it did.
    pub obstruction: Option<String>,
}

impl CollapseReport {
    pub fn is_collapsible(&self) -> bool {
        self.verdict == CollapseVerdict::Yes
    }
}

struct Attempt {
    alive: Vec<bool>,
    log: Vec<(usize, usize)>,
    remaining: usize,
}

fn attempt(cx: &CellComplex, cofaces: &[Vec<usize>], rng: &mut ChaCha8Rng) -> Attempt {
    let n = cx.len();
    let mut alive = vec![true; n];
    let mut cof_count: Vec<usize> = cofaces.iter().map(|c| c.len()).collect();
    let mut stack: Vec<usize> = (0..n).filter(|&c| cof_count[c] == 1).collect();
    stack.shuffle(rng);
    let mut log = Vec::new();
    let mut remaining = n;
    while !stack.is_empty() {
        let pick = rng.gen_range(0..stack.len());
        let c = stack.swap_remove(pick);
        if !alive[c] || cof_count[c] != 1 {
            continue;
        }
        let d = *cofaces[c].iter().find(|&&d| alive[d]).expect("one live coface");
        alive[c] = false;
        alive[d] = false;
        remaining -= 2;
        log.push((c, d));
        for &f in cx.faces_of(d).iter().chain(cx.faces_of(c)) {
            if alive[f] {
                cof_count[f] -= 1;
                if cof_count[f] == 1 {
                    stack.push(f);
                }
            }
        }
    }
    Attempt {
        alive,
        log,
        remaining,
    }
}

/// Greedy free-face collapse with randomized restarts. A "yes" verdict means
/// the complex collapsed to a single vertex. When a failed attempt leaves a
/// residual with nonzero reduced GF(2) homology no ordering can succeed, so
/// restarting stops and the obstruction is recorded.
pub fn collapse_cells(cx: &CellComplex, config: &CollapseConfig) -> CollapseReport {
    let vsets = |alive: &[bool]| -> Vec<Vec<usize>> {
        (0..cx.len())
            .filter(|&c| alive[c])
            .map(|c| cx.vertex_set(c).to_vec())
            .collect()
    };
    if cx.is_empty() {
        return CollapseReport {
            verdict: CollapseVerdict::Inconclusive,
            residual: Vec::new(),
            log: Vec::new(),
            attempts: 0,
            obstruction: Some("complex has no cells".into()),
        };
    }
    let cofaces = cx.cofaces();
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut best: Option<Attempt> = None;
    let mut obstruction = None;
    let mut attempts = 0;
    for _ in 0..config.restarts.max(1) {
        attempts += 1;
        let a = attempt(cx, &cofaces, &mut rng);
        let done = a.remaining == 1;
        if best.as_ref().is_none_or(|b| a.remaining < b.remaining) {
            best = Some(a);
        }
        if done {
            break;
        }
        if attempts == 1 {
            let betti = cx.reduced_gf2_betti(&best.as_ref().unwrap().alive);
            if let Some((i, b)) = betti.iter().enumerate().find(|(_, &b)| b > 0) {
                obstruction = Some(format!(
                    "reduced GF(2) homology of rank {b} in degree {}",
                    i as isize - 1
                ));
                break;
            }
        }
    }
    let best = best.expect("at least one attempt");
    let verdict = if best.remaining == 1 {
        CollapseVerdict::Yes
    } else {
        CollapseVerdict::Inconclusive
    };
    CollapseReport {
        verdict,
        residual: vsets(&best.alive),
        log: best
            .log
            .iter()
            .map(|&(c, d)| (cx.vertex_set(c).to_vec(), cx.vertex_set(d).to_vec()))
            .collect(),
        attempts,
        obstruction,
    }
}

pub fn collapse(k: &SimplicialComplex, config: &CollapseConfig, budget: usize) -> Result<CollapseReport> {
    let cx = CellComplex::from_simplicial(k, budget)?;
    Ok(collapse_cells(&cx, config))
}

/// Reduced GF(2) Betti numbers of a whole cell complex (entry 0 is degree -1).
pub fn reduced_gf2_betti(cx: &CellComplex) -> Vec<usize> {
    cx.reduced_gf2_betti(&vec![true; cx.len()])
}

pub fn require_collapsible(k: &SimplicialComplex, config: &CollapseConfig, budget: usize) -> Result<()> {
    let r = collapse(k, config, budget)?;
    if r.is_collapsible() {
        Ok(())
    } else {
        Err(Error::HypothesisViolation(format!(
            "complex did not collapse ({} cells left)",
            r.residual.len()
        )))
    }
}
