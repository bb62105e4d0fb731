//! JSON formats for graphs, explicit complexes, cube complexes and alpha maps.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::cubical::CubeComplex;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::simplicial::SimplicialComplex;
use crate::thickening::AlphaMap;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: Vec<String>,
    pub edges: Vec<[String; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub vertices: Vec<String>,
    pub facets: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CubeJson {
    pub dim: usize,
    pub verts: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CubeComplexJson {
    pub vertices: Vec<String>,
    pub cubes: Vec<CubeJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlphaJson {
    pub domain: Vec<String>,
    pub map: BTreeMap<String, String>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            vertices: g.labels().to_vec(),
            edges: g
                .edges()
                .into_iter()
                .map(|(u, v)| [g.label(u).to_string(), g.label(v).to_string()])
                .collect(),
        }
    }
}

impl GraphJson {
    pub fn build(&self) -> Result<Graph> {
        let edges: Vec<(&str, &str)> = self.edges.iter().map(|[a, b]| (a.as_str(), b.as_str())).collect();
        Graph::new(self.vertices.clone(), &edges)
    }
}

impl From<&SimplicialComplex> for ComplexJson {
    fn from(k: &SimplicialComplex) -> Self {
        let mut facets: Vec<Vec<String>> = k.labeled_facets().into_iter().collect();
        facets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        ComplexJson {
            vertices: k.labels().to_vec(),
            facets,
        }
    }
}

impl ComplexJson {
    pub fn build(&self) -> Result<SimplicialComplex> {
        SimplicialComplex::explicit_from_labels(self.vertices.clone(), &self.facets)
    }
}

impl From<&CubeComplex> for CubeComplexJson {
    fn from(x: &CubeComplex) -> Self {
        CubeComplexJson {
            vertices: x.labels().to_vec(),
            cubes: x
                .maximal_cubes()
                .iter()
                .map(|&id| CubeJson {
                    dim: x.dim_of(id),
                    verts: x.labels_of(x.cube(id).corners()),
                })
                .collect(),
        }
    }
}

impl CubeComplexJson {
    pub fn build(&self) -> Result<CubeComplex> {
        for c in &self.cubes {
            if c.verts.len() != 1usize << c.dim {
                return Err(Error::MalformedCube(format!(
                    "dimension {} needs {} corners, got {}",
                    c.dim,
                    1usize << c.dim,
                    c.verts.len()
                )));
            }
        }
        let cubes: Vec<Vec<String>> = self.cubes.iter().map(|c| c.verts.clone()).collect();
        CubeComplex::from_labels(self.vertices.clone(), &cubes)
    }
}

impl AlphaJson {
    pub fn from_map(a: &AlphaMap, base: &CubeComplex) -> Self {
        AlphaJson {
            domain: a.domain().to_vec(),
            map: a
                .domain()
                .iter()
                .zip(a.image())
                .map(|(y, &v)| (y.clone(), base.label(v).to_string()))
                .collect(),
        }
    }

    pub fn build(&self, base: &CubeComplex) -> Result<AlphaMap> {
        let pairs: Vec<(&str, &str)> = self
            .domain
            .iter()
            .map(|y| {
                self.map
                    .get(y)
                    .map(|v| (y.as_str(), v.as_str()))
                    .ok_or_else(|| Error::InvalidInput(format!("`{y}` has no image")))
            })
            .collect::<Result<_>>()?;
        if let Some(extra) = self.map.keys().find(|k| !self.domain.contains(k)) {
            return Err(Error::UnknownLabel(extra.clone()));
        }
        AlphaMap::from_labels(base, &pairs)
    }
}

/// Any of the three structure formats, told apart by their keys.
#[derive(Clone, Debug)]
pub enum Structure {
    Graph(Graph),
    Complex(SimplicialComplex),
    Cubes(CubeComplex),
}

impl Structure {
    pub fn from_json(text: &str) -> Result<Self> {
        let value: serde_json::Value = serde_json::from_str(text)?;
        let has = |k: &str| value.get(k).is_some();
        if has("cubes") {
            Ok(Structure::Cubes(serde_json::from_value::<CubeComplexJson>(value)?.build()?))
        } else if has("facets") {
            Ok(Structure::Complex(serde_json::from_value::<ComplexJson>(value)?.build()?))
        } else if has("edges") {
            Ok(Structure::Graph(serde_json::from_value::<GraphJson>(value)?.build()?))
        } else {
            Err(Error::InvalidInput("expected a graph, complex or cube complex".into()))
        }
    }

    pub fn read(path: &Path) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    /// The cube complex view: graphs become 1-dimensional cube complexes.
    pub fn into_cubes(self) -> Result<CubeComplex> {
        match self {
            Structure::Cubes(x) => Ok(x),
            Structure::Graph(g) => Ok(CubeComplex::from_graph(&g)),
            Structure::Complex(_) => Err(Error::InvalidInput("expected a cube complex or a graph".into())),
        }
    }

    /// The simplicial view: graphs become flag complexes.
    pub fn into_simplicial(self) -> Result<SimplicialComplex> {
        match self {
            Structure::Complex(k) => Ok(k),
            Structure::Graph(g) => Ok(SimplicialComplex::flag(g)),
            Structure::Cubes(_) => Err(Error::InvalidInput("expected a simplicial complex or a graph".into())),
        }
    }
}

pub fn to_pretty<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_round_trip() {
        let g = Graph::cycle(5);
        let j = GraphJson::from(&g);
        assert_eq!(j.edges[0], ["x1".to_string(), "x2".to_string()]);
        let text = serde_json::to_string(&j).unwrap();
        let back = match Structure::from_json(&text).unwrap() {
            Structure::Graph(h) => h,
            _ => panic!(),
        };
        assert_eq!(back.edges(), g.edges());
    }

    #[test]
    fn cube_round_trip() {
        let x = CubeComplex::single_cube(3);
        let j = CubeComplexJson::from(&x);
        assert_eq!(j.cubes.len(), 1);
        let y = j.build().unwrap();
        assert_eq!(y.f_vector(), x.f_vector());
        let bad = CubeComplexJson {
            vertices: vec!["a".into(), "b".into()],
            cubes: vec![CubeJson { dim: 2, verts: vec!["a".into(), "b".into()] }],
        };
        assert!(matches!(bad.build(), Err(Error::MalformedCube(_))));
    }

    #[test]
    fn complex_round_trip() {
        let k = SimplicialComplex::flag(Graph::cycle(5));
        let j = ComplexJson::from(&k);
        assert!(j.build().unwrap().same_as(&k));
    }

    #[test]
    fn alpha_round_trip() {
        let x = CubeComplex::from_graph(&Graph::cycle(5));
        let a = AlphaMap::identity(&x);
        let j = AlphaJson::from_map(&a, &x);
        let b = j.build(&x).unwrap();
        assert_eq!(b.image(), a.image());
    }

    #[test]
    fn malformed_input() {
        assert!(Structure::from_json("{\"foo\": 1}").is_err());
        assert!(Structure::from_json("not json").is_err());
    }
}
