//! Cohomological dimension of finite complexes and the complement formula for
//! the virtual cohomological dimension of a right-angled Coxeter group.

use rayon::prelude::*;
use serde::Serialize;

use super::{simplicial_homology, Coeffs};
use crate::error::{Error, Result};
use crate::simplicial::SimplicialComplex;

/// Largest degree with nonzero unreduced cohomology.
pub fn cohomological_dimension(k: &SimplicialComplex, coeffs: Coeffs, budget: usize) -> Result<usize> {
    if k.is_empty() {
        return Err(Error::EmptyComplex);
    }
    let h = simplicial_homology(k, coeffs, false, budget)?;
    Ok(h.top_cohomology_degree().expect("nonempty complexes have H^0") as usize)
}

#[derive(Clone, Debug, Serialize)]
pub struct VcdRow {
    pub simplex: Vec<String>,
    pub complement_vertices: usize,
    /// Degrees with nonzero reduced cohomology of the complement.
    pub nonzero_degrees: Vec<isize>,
    /// One more than the top such degree.
    pub value: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VcdReport {
    pub vcd: usize,
    pub witness: Vec<String>,
    pub coeffs: Coeffs,
    pub simplices_swept: usize,
    pub table: Vec<VcdRow>,
}

/// Sweeps every simplex (the empty one first, then by dimension) and takes
/// the largest `n` with nonzero reduced cohomology of the complement in
/// degree `n - 1`. The complement of a closed simplex retracts onto the full
/// subcomplex on the remaining vertices, which is what gets computed.
pub fn vcd_racg(l: &SimplicialComplex, coeffs: Coeffs, budget: usize) -> Result<VcdReport> {
    let flag = l.is_flag(budget)?;
    if let Some(w) = flag.witness {
        return Err(Error::NotFlag(l.labels_of(&w)));
    }
    let mut sweep: Vec<Vec<usize>> = vec![Vec::new()];
    sweep.extend(l.simplices(budget)?);
    let n = l.n_vertices();
    let table: Vec<VcdRow> = sweep
        .par_iter()
        .map(|s| -> Result<VcdRow> {
            let rest: Vec<usize> = (0..n).filter(|v| !s.contains(v)).collect();
            let sub = l.full_subcomplex(&rest)?;
            let h = simplicial_homology(&sub, coeffs, true, budget)?;
            let nonzero: Vec<isize> = (-1..=h.max_degree() + 1)
                .filter(|&d| h.cohomology_nonzero(d))
                .collect();
            let value = nonzero.last().map(|&d| (d + 1) as usize);
            Ok(VcdRow {
                simplex: l.labels_of(s),
                complement_vertices: rest.len(),
                nonzero_degrees: nonzero,
                value,
            })
        })
        .collect::<Result<_>>()?;
    let mut best: Option<usize> = None;
    for (i, row) in table.iter().enumerate() {
        if let Some(v) = row.value {
            if best.is_none_or(|b| v > table[b].value.unwrap()) {
                best = Some(i);
            }
        }
    }
    let best = best.expect("a facet complement always contributes");
    Ok(VcdReport {
        vcd: table[best].value.unwrap(),
        witness: table[best].simplex.clone(),
        coeffs,
        simplices_swept: table.len(),
        table,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct CdBound {
    pub simplex: Vec<String>,
    /// `None` when the complex is empty, which satisfies every bound.
    pub cd: Option<usize>,
    pub bound: isize,
    pub holds: bool,
}

fn bound_check(k: &SimplicialComplex, s: &[usize], sub: &SimplicialComplex, n: usize, coeffs: Coeffs, budget: usize) -> Result<CdBound> {
    let bound = n as isize - 1;
    let cd = if sub.is_empty() {
        None
    } else {
        Some(cohomological_dimension(sub, coeffs, budget)?)
    };
    Ok(CdBound {
        simplex: k.labels_of(s),
        cd,
        bound,
        holds: cd.is_none_or(|c| c as isize <= bound),
    })
}

/// cd of the combinatorial sphere of `s` against `n - 1`.
pub fn sphere_cd_check(t: &SimplicialComplex, s: &[usize], n: usize, coeffs: Coeffs, budget: usize) -> Result<CdBound> {
    let sphere = t.combinatorial_sphere(s)?;
    bound_check(t, s, &sphere, n, coeffs, budget)
}

/// cd of the link of `s` against `n - 1`.
pub fn link_cd_check(t: &SimplicialComplex, s: &[usize], n: usize, coeffs: Coeffs, budget: usize) -> Result<CdBound> {
    if s.is_empty() {
        return Err(Error::EmptySimplex);
    }
    let link = t.link(s)?;
    bound_check(t, s, &link, n, coeffs, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn finite_group_has_vcd_zero() {
        let l = SimplicialComplex::flag(Graph::complete(3));
        let r = vcd_racg(&l, Coeffs::Z, 1000).unwrap();
        assert_eq!(r.vcd, 0);
        assert_eq!(r.witness.len(), 3);
        assert_eq!(r.simplices_swept, 8);
    }

    #[test]
    fn pentagon_group() {
        let l = SimplicialComplex::flag(Graph::cycle(5));
        let r = vcd_racg(&l, Coeffs::Z, 1000).unwrap();
        assert_eq!(r.vcd, 2);
        assert!(r.witness.is_empty());
    }

    #[test]
    fn free_product_is_virtually_free() {
        // Two isolated vertices: infinite dihedral group.
        let l = SimplicialComplex::flag(Graph::new(vec!["a".into(), "b".into()], &[] as &[(&str, &str)]).unwrap());
        assert_eq!(vcd_racg(&l, Coeffs::Z, 100).unwrap().vcd, 1);
    }

    #[test]
    fn cd_of_point_and_cycle() {
        let p = SimplicialComplex::simplex(vec!["p".into()]);
        assert_eq!(cohomological_dimension(&p, Coeffs::Z, 10).unwrap(), 0);
        let c = SimplicialComplex::flag(Graph::cycle(6));
        assert_eq!(cohomological_dimension(&c, Coeffs::Z, 100).unwrap(), 1);
        assert!(cohomological_dimension(&SimplicialComplex::empty(), Coeffs::Z, 10).is_err());
    }

    #[test]
    fn sphere_bound_on_cycle() {
        let c = SimplicialComplex::flag(Graph::cycle(5));
        let b = sphere_cd_check(&c, &[0, 1], 1, Coeffs::Z, 100).unwrap();
        assert_eq!(b.cd, Some(0));
        assert!(b.holds);
    }
}
