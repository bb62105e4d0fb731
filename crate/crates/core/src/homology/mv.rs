//! Exactness of the cohomology Mayer–Vietoris sequence over GF(2), computed
//! from explicit cochain maps.

use std::collections::{HashMap, HashSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf2::{Basis, BitVec};
use crate::simplicial::SimplicialComplex;

/// Simplices of a subcomplex, expressed in the vertex indices of the ambient complex.
struct Cochains {
    by_deg: Vec<Vec<Vec<usize>>>,
    index: Vec<HashMap<Vec<usize>, usize>>,
}

impl Cochains {
    fn new(simplices: Vec<Vec<usize>>, top: usize) -> Self {
        let mut by_deg: Vec<Vec<Vec<usize>>> = vec![Vec::new(); top + 2];
        for s in simplices {
            let d = s.len() - 1;
            by_deg[d].push(s);
        }
        for level in &mut by_deg {
            level.sort();
        }
        let index = by_deg
            .iter()
            .map(|level| level.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect())
            .collect();
        Cochains { by_deg, index }
    }

    fn count(&self, k: usize) -> usize {
        self.by_deg.get(k).map_or(0, Vec::len)
    }

    fn coboundary(&self, k: usize, f: &BitVec) -> BitVec {
        let mut out = BitVec::zeros(self.count(k + 1));
        let mut buf = Vec::new();
        for (t, tau) in self.by_deg.get(k + 1).into_iter().flatten().enumerate() {
            let mut bit = false;
            for skip in 0..tau.len() {
                buf.clear();
                buf.extend(tau.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v));
                if f.get(self.index[k][buf.as_slice()]) {
                    bit = !bit;
                }
            }
            out.set(t, bit);
        }
        out
    }

    fn cocycle_basis(&self, k: usize) -> Vec<BitVec> {
        let n = self.count(k);
        let next = self.count(k + 1);
        // Eliminate images while tracking combinations; zero images give the kernel.
        let mut pivots: Vec<(usize, BitVec, BitVec)> = Vec::new();
        let mut kernel = Vec::new();
        for i in 0..n {
            let e = BitVec::from_indices(n, [i]);
            let mut img = self.coboundary(k, &e);
            let mut combo = e;
            debug_assert_eq!(img.len(), next);
            for (p, row, c) in &pivots {
                if img.get(*p) {
                    img.xor_assign(row);
                    combo.xor_assign(c);
                }
            }
            match img.first_one() {
                Some(p) => pivots.push((p, img, combo)),
                None => kernel.push(combo),
            }
        }
        kernel
    }

    fn coboundary_basis(&self, k: usize) -> Basis {
        let mut b = Basis::new(self.count(k));
        if k > 0 {
            for i in 0..self.count(k - 1) {
                b.insert(self.coboundary(k - 1, &BitVec::from_indices(self.count(k - 1), [i])));
            }
        }
        b
    }

    /// Restriction of a cochain on `self` to the subcomplex `sub`.
    fn restrict(&self, k: usize, f: &BitVec, sub: &Cochains) -> BitVec {
        BitVec::from_indices(
            sub.count(k),
            sub.by_deg
                .get(k)
                .into_iter()
                .flatten()
                .enumerate()
                .filter(|(_, s)| f.get(self.index[k][*s]))
                .map(|(i, _)| i),
        )
    }

    /// Extension by zero of a cochain on `sub` to `self`.
    fn extend(&self, k: usize, f: &BitVec, sub: &Cochains) -> BitVec {
        BitVec::from_indices(
            self.count(k),
            f.ones().map(|i| self.index[k][&sub.by_deg[k][i]]),
        )
    }
}

fn concat(a: &BitVec, b: &BitVec) -> BitVec {
    BitVec::from_indices(a.len() + b.len(), a.ones().chain(b.ones().map(|i| i + a.len())))
}

fn split(v: &BitVec, at: usize) -> (BitVec, BitVec) {
    (
        BitVec::from_indices(at, v.ones().filter(|&i| i < at)),
        BitVec::from_indices(v.len() - at, v.ones().filter(|&i| i >= at).map(|i| i - at)),
    )
}

/// Rank of the map induced on cohomology by sending each cocycle to `images`,
/// measured modulo the coboundaries of the target.
fn induced_rank(images: &[BitVec], target_coboundaries: &Basis) -> usize {
    let mut b = target_coboundaries.clone();
    let base = b.rank();
    for v in images {
        b.insert(v.clone());
    }
    b.rank() - base
}

fn all_in(images: &[BitVec], coboundaries: &Basis) -> bool {
    images.iter().all(|v| coboundaries.contains(v))
}

#[derive(Clone, Debug, Serialize)]
pub struct MvDegree {
    pub degree: usize,
    pub dim_z: usize,
    pub dim_a: usize,
    pub dim_b: usize,
    pub dim_c: usize,
    pub rank_restriction: usize,
    pub rank_difference: usize,
    pub rank_connecting: usize,
    pub exact: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct MvReport {
    pub exact: bool,
    pub degrees: Vec<MvDegree>,
}

impl MvReport {
    pub fn dims_z(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.dim_z).collect()
    }
}

fn embed(z: &SimplicialComplex, part: &SimplicialComplex, budget: usize) -> Result<Vec<Vec<usize>>> {
    let map: Vec<usize> = part
        .labels()
        .iter()
        .map(|l| {
            z.index_of(l)
                .map_err(|_| Error::InvalidGluing(format!("vertex `{l}` is not in the union")))
        })
        .collect::<Result<_>>()?;
    Ok(part
        .simplices(budget)?
        .into_iter()
        .map(|s| {
            let mut t: Vec<usize> = s.iter().map(|&v| map[v]).collect();
            t.sort_unstable();
            t
        })
        .collect())
}

/// Checks A ∪ B = Z and A ∩ B = C as labeled complexes, then verifies
/// exactness of H^k(Z) → H^k(A) ⊕ H^k(B) → H^k(C) → H^{k+1}(Z) in every degree.
pub fn mayer_vietoris_check(
    z: &SimplicialComplex,
    a: &SimplicialComplex,
    b: &SimplicialComplex,
    c: &SimplicialComplex,
    budget: usize,
) -> Result<MvReport> {
    let zs = z.simplices(budget)?;
    let (as_, bs, cs) = (embed(z, a, budget)?, embed(z, b, budget)?, embed(z, c, budget)?);
    let set = |v: &Vec<Vec<usize>>| -> HashSet<Vec<usize>> { v.iter().cloned().collect() };
    let (zset, aset, bset, cset) = (set(&zs), set(&as_), set(&bs), set(&cs));
    if aset.union(&bset).cloned().collect::<HashSet<_>>() != zset {
        return Err(Error::InvalidGluing("A ∪ B differs from Z".into()));
    }
    if aset.intersection(&bset).cloned().collect::<HashSet<_>>() != cset {
        return Err(Error::InvalidGluing("A ∩ B differs from C".into()));
    }
    let top = zs.iter().map(Vec::len).max().unwrap_or(1) - 1;
    let zc = Cochains::new(zs, top);
    let ac = Cochains::new(as_, top);
    let bc = Cochains::new(bs, top);
    let cc = Cochains::new(cs, top);

    let mut degrees = Vec::new();
    let mut prev_connecting = 0usize;
    let mut exact = true;
    for k in 0..=top {
        let zz = zc.cocycle_basis(k);
        let za = ac.cocycle_basis(k);
        let zb = bc.cocycle_basis(k);
        let zcyc = cc.cocycle_basis(k);
        let bz = zc.coboundary_basis(k);
        let ba = ac.coboundary_basis(k);
        let bb = bc.coboundary_basis(k);
        let bcb = cc.coboundary_basis(k);
        let bz_next = zc.coboundary_basis(k + 1);
        let mut bab = Basis::new(ac.count(k) + bc.count(k));
        for r in ba.rows() {
            bab.insert(concat(r, &BitVec::zeros(bc.count(k))));
        }
        for r in bb.rows() {
            bab.insert(concat(&BitVec::zeros(ac.count(k)), r));
        }
        let dim = |cyc: &[BitVec], cob: &Basis| cyc.len() - cob.rank();
        let (dim_z, dim_a, dim_b, dim_c) = (dim(&zz, &bz), dim(&za, &ba), dim(&zb, &bb), dim(&zcyc, &bcb));

        let restricted: Vec<BitVec> = zz
            .iter()
            .map(|f| concat(&zc.restrict(k, f, &ac), &zc.restrict(k, f, &bc)))
            .collect();
        let rank_restriction = induced_rank(&restricted, &bab);

        let sources: Vec<BitVec> = za
            .iter()
            .map(|f| concat(f, &BitVec::zeros(bc.count(k))))
            .chain(zb.iter().map(|f| concat(&BitVec::zeros(ac.count(k)), f)))
            .collect();
        let difference = |v: &BitVec| -> BitVec {
            let (fa, fb) = split(v, ac.count(k));
            let mut out = ac.restrict(k, &fa, &cc);
            out.xor_assign(&bc.restrict(k, &fb, &cc));
            out
        };
        let differences: Vec<BitVec> = sources.iter().map(difference).collect();
        let rank_difference = induced_rank(&differences, &bcb);

        let connecting = |f: &BitVec| -> BitVec {
            let lifted = ac.extend(k, f, &cc);
            let d = ac.coboundary(k, &lifted);
            zc.extend(k + 1, &d, &ac)
        };
        let connected: Vec<BitVec> = zcyc.iter().map(connecting).collect();
        let rank_connecting = if k < top { induced_rank(&connected, &bz_next) } else { 0 };

        // Consecutive composites must vanish for the rank count to imply exactness.
        let composites_vanish = all_in(&restricted.iter().map(difference).collect::<Vec<_>>(), &bcb)
            && (k >= top || all_in(&differences.iter().map(connecting).collect::<Vec<_>>(), &bz_next));
        let here = composites_vanish
            && dim_z == prev_connecting + rank_restriction
            && dim_a + dim_b == rank_restriction + rank_difference
            && dim_c == rank_difference + rank_connecting;
        exact &= here;
        degrees.push(MvDegree {
            degree: k,
            dim_z,
            dim_a,
            dim_b,
            dim_c,
            rank_restriction,
            rank_difference,
            rank_connecting,
            exact: here,
        });
        prev_connecting = rank_connecting;
    }
    Ok(MvReport { exact, degrees })
}
