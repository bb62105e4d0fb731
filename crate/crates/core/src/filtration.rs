//! Closest-face map and the codimension filtration of a combinatorial sphere.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::simplicial::SimplicialComplex;

/// For each vertex `v` of the combinatorial sphere of `s`, the face of `s`
/// made of the vertices adjacent to `v`.
pub fn closest_face_map(k: &SimplicialComplex, s: &[usize]) -> Result<BTreeMap<usize, Vec<usize>>> {
    if s.is_empty() {
        return Err(Error::EmptySimplex);
    }
    k.require_simplex(s)?;
    Ok(k.sphere_vertices(s)
        .into_iter()
        .map(|v| {
            let face: Vec<usize> = s.iter().copied().filter(|&u| k.adjacent(u, v)).collect();
            (v, face)
        })
        .collect())
}

/// One class `L_t` of the filtration.
#[derive(Clone, Debug)]
pub struct FaceClass {
    pub face: Vec<usize>,
    pub codim: usize,
    /// Sphere vertices whose closest face is `face`.
    pub class: Vec<usize>,
    /// Link vertices of `face` lying in the previous stage.
    pub boundary: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct Filtration {
    pub simplex: Vec<usize>,
    pub closest_face: BTreeMap<usize, Vec<usize>>,
    /// Vertex sets of the stages, indexed by codimension.
    pub stages: Vec<Vec<usize>>,
    /// Classes ordered by codimension, then by face.
    pub classes: Vec<FaceClass>,
}

fn nonempty_faces(s: &[usize]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (1u64..(1u64 << s.len()))
        .map(|m| {
            s.iter()
                .enumerate()
                .filter(|(i, _)| m >> i & 1 == 1)
                .map(|(_, &v)| v)
                .collect()
        })
        .collect();
    out.sort_by(|a: &Vec<usize>, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    out
}

impl Filtration {
    pub fn stage_complex(&self, k: &SimplicialComplex, i: usize) -> Result<SimplicialComplex> {
        k.full_subcomplex(&self.stages[i])
    }

    pub fn classes_of_codim(&self, i: usize) -> impl Iterator<Item = &FaceClass> {
        self.classes.iter().filter(move |c| c.codim == i)
    }
}

pub fn sphere_filtration(k: &SimplicialComplex, s: &[usize]) -> Result<Filtration> {
    let pi = closest_face_map(k, s)?;
    let top = s.len() - 1;
    let mut stages: Vec<Vec<usize>> = Vec::with_capacity(top + 1);
    for i in 0..=top {
        let mut verts: Vec<usize> = pi
            .iter()
            .filter(|(_, f)| s.len() - f.len() <= i)
            .map(|(&v, _)| v)
            .collect();
        verts.sort_unstable();
        stages.push(verts);
    }
    let mut classes = Vec::new();
    for face in nonempty_faces(s) {
        let codim = s.len() - face.len();
        let class: Vec<usize> = pi.iter().filter(|(_, f)| **f == face).map(|(&v, _)| v).collect();
        let boundary = if codim == 0 {
            Vec::new()
        } else {
            let link_verts = k.common_neighbors(&face);
            stages[codim - 1]
                .iter()
                .copied()
                .filter(|v| link_verts.binary_search(v).is_ok())
                .collect()
        };
        classes.push(FaceClass {
            face,
            codim,
            class,
            boundary,
        });
    }
    Ok(Filtration {
        simplex: s.to_vec(),
        closest_face: pi,
        stages,
        classes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn filled_triangle_face_map() {
        let k = SimplicialComplex::simplex(vec!["a".into(), "b".into(), "c".into()]);
        let pi = closest_face_map(&k, &[0, 1]).unwrap();
        assert_eq!(pi.get(&2), Some(&vec![0, 1]));
    }

    #[test]
    fn vertex_filtration_is_single_stage() {
        let k = SimplicialComplex::flag(Graph::cycle(6));
        let f = sphere_filtration(&k, &[0]).unwrap();
        assert_eq!(f.stages.len(), 1);
        assert_eq!(f.stages[0], k.common_neighbors(&[0]));
    }

    #[test]
    fn classes_partition_sphere() {
        let k = SimplicialComplex::flag(Graph::cycle(6));
        let f = sphere_filtration(&k, &[0, 1]).unwrap();
        let mut all: Vec<usize> = f.classes.iter().flat_map(|c| c.class.clone()).collect();
        all.sort_unstable();
        assert_eq!(all, k.sphere_vertices(&[0, 1]));
        assert_eq!(f.stages.last().unwrap(), &all);
        assert!(f.classes_of_codim(0).all(|c| c.class.is_empty()));
    }
}
