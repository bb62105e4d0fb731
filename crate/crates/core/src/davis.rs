//! Right-angled Coxeter groups, their normal forms, and the quotient of the
//! Davis complex by the kernel of the abelianization mod 2.

use std::collections::{BTreeSet, HashMap};

use rayon::prelude::*;
use serde::Serialize;

use crate::collapse::CollapseConfig;
use crate::cubical::{CubeCheck, CubeComplex};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::homology::{cubical_homology, Coeffs};
use crate::moves::FiveLargeSummary;
use crate::simplicial::SimplicialComplex;

/// Largest generator count for which the quotient is built.
pub const MAX_QUOTIENT_GENERATORS: usize = 24;

#[derive(Clone, Debug)]
pub struct Racg {
    graph: Graph,
    /// Nonempty cliques, by size then lexicographically.
    cliques: Vec<Vec<usize>>,
}

impl Racg {
    pub fn new(graph: Graph, budget: usize) -> Result<Self> {
        let cliques = graph.cliques(budget)?;
        Ok(Racg { graph, cliques })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n_generators(&self) -> usize {
        self.graph.n()
    }

    pub fn cliques(&self) -> &[Vec<usize>] {
        &self.cliques
    }

    /// Number of cliques of each size, starting with the empty clique.
    pub fn clique_counts(&self) -> Vec<u64> {
        let mut out = vec![1u64];
        for c in &self.cliques {
            if out.len() <= c.len() {
                out.resize(c.len() + 1, 0);
            }
            out[c.len()] += 1;
        }
        out
    }

    pub fn commuting_pairs(&self) -> usize {
        self.graph.edge_count()
    }

    fn commute(&self, a: usize, b: usize) -> bool {
        a != b && self.graph.adjacent(a, b)
    }

    fn parse(&self, word: &[impl AsRef<str>]) -> Result<Vec<usize>> {
        word.iter().map(|l| self.graph.index_of(l.as_ref())).collect()
    }

    /// Shortlex normal form of a word given by generator indices.
    pub fn normal_form_indices(&self, word: &[usize]) -> Vec<usize> {
        let mut w = word.to_vec();
        // Cancel a pair of equal letters whenever everything between commutes with them.
        'cancel: loop {
            for i in 0..w.len() {
                for j in i + 1..w.len() {
                    if w[j] == w[i] {
                        w.remove(j);
                        w.remove(i);
                        continue 'cancel;
                    }
                    if !self.commute(w[i], w[j]) {
                        break;
                    }
                }
            }
            break;
        }
        // Lexicographically least representative of the commutation class.
        let mut out = Vec::with_capacity(w.len());
        while !w.is_empty() {
            let mut best: Option<usize> = None;
            for i in 0..w.len() {
                if (0..i).all(|k| self.commute(w[k], w[i])) && best.is_none_or(|b| w[i] < w[b]) {
                    best = Some(i);
                }
            }
            out.push(w.remove(best.expect("the first letter is always movable")));
        }
        out
    }

    fn word_labels(&self, w: &[usize]) -> Vec<String> {
        self.graph.labels_of(w)
    }
}

pub fn racg_from_complex(l: &SimplicialComplex, budget: usize) -> Result<Racg> {
    if let Some(w) = l.is_flag(budget)?.witness {
        return Err(Error::NotFlag(l.labels_of(&w)));
    }
    Racg::new(l.one_skeleton(), budget)
}

pub fn racg_normal_form<S: AsRef<str>>(g: &Racg, word: &[S]) -> Result<Vec<String>> {
    let w = g.parse(word)?;
    Ok(g.word_labels(&g.normal_form_indices(&w)))
}

#[derive(Clone, Debug, Serialize)]
pub struct HyperbolicityCheck {
    pub hyperbolic: bool,
    pub witness: Option<Vec<String>>,
}

/// Hyperbolic exactly when the flag complex of the graph is 5-large.
pub fn is_hyperbolic_racg(g: &Graph, budget: usize) -> Result<HyperbolicityCheck> {
    let l = SimplicialComplex::flag(g.clone());
    let r = l.is_k_large(5, budget)?;
    Ok(HyperbolicityCheck {
        hyperbolic: r.is_large,
        witness: r.cycle_witness.or(r.non_flag_witness).map(|w| l.labels_of(&w)),
    })
}

fn vertex_label(g: u64, n: usize) -> String {
    (0..n).map(|i| if g >> i & 1 == 1 { '1' } else { '0' }).collect()
}

/// Predicted cube counts of the quotient, by dimension.
pub fn quotient_f_vector(g: &Racg) -> Vec<u128> {
    let n = g.n_generators() as u32;
    g.clique_counts()
        .iter()
        .enumerate()
        .map(|(d, &c)| ((1u128 << n) * c as u128) >> d)
        .collect()
}

/// Quotient of the Davis complex by the kernel of G -> (Z/2)^V. Vertex `g`
/// is labeled by its coordinate string in generator order.
pub fn level2_quotient(g: &Racg, budget: usize) -> Result<CubeComplex> {
    let n = g.n_generators();
    if n > MAX_QUOTIENT_GENERATORS {
        return Err(Error::BudgetExceeded {
            what: "quotient generators",
            needed: n as u128,
            budget: MAX_QUOTIENT_GENERATORS as u128,
        });
    }
    let total: u128 = quotient_f_vector(g).iter().sum();
    if total > budget as u128 {
        return Err(Error::BudgetExceeded { what: "quotient cubes", needed: total, budget: budget as u128 });
    }
    let labels: Vec<String> = (0..1u64 << n).map(|v| vertex_label(v, n)).collect();
    let maximal: Vec<Vec<usize>> = g.graph.maximal_cliques();
    let mut cubes = Vec::new();
    for t in &maximal {
        let mask: u64 = t.iter().map(|&s| 1u64 << s).sum();
        // One cube per coset of span(T): representatives have T-coordinates zero.
        for rep in (0..1u64 << n).filter(|r| r & mask == 0) {
            let corners = (0..1usize << t.len())
                .map(|c| {
                    let mut v = rep;
                    for (k, &s) in t.iter().enumerate() {
                        if c >> k & 1 == 1 {
                            v |= 1 << s;
                        }
                    }
                    v as usize
                })
                .collect();
            cubes.push(corners);
        }
    }
    CubeComplex::new(labels, cubes)
}

#[derive(Clone, Debug, Serialize)]
pub struct EmbeddingCheck {
    pub injective: bool,
    pub elements: usize,
    /// Two distinct elements with the same image.
    pub witness: Option<(Vec<String>, Vec<String>)>,
}

/// Elements u*v with u, v in finite clique subgroups are the vertices within
/// cubical distance two of the identity; the check asks whether reduction
/// mod 2 separates them.
pub fn two_neighborhood_embedding_check(g: &Racg) -> EmbeddingCheck {
    let mut spherical: Vec<Vec<usize>> = vec![Vec::new()];
    spherical.extend(g.cliques.iter().cloned());
    let forms: BTreeSet<Vec<usize>> = spherical
        .par_iter()
        .flat_map_iter(|u| {
            spherical.iter().map(move |v| {
                let mut w = u.clone();
                w.extend_from_slice(v);
                g.normal_form_indices(&w)
            })
        })
        .collect();
    let mut by_image: HashMap<u64, &Vec<usize>> = HashMap::new();
    let mut witness = None;
    for f in &forms {
        let image = f.iter().fold(0u64, |acc, &s| acc ^ (1 << s));
        if let Some(prev) = by_image.insert(image, f) {
            witness = Some((g.word_labels(prev), g.word_labels(f)));
            break;
        }
    }
    EmbeddingCheck {
        injective: witness.is_none(),
        elements: forms.len(),
        witness,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct OneEndedCheck {
    pub one_ended: bool,
    /// Simplex whose complement is empty or disconnected.
    pub witness: Option<Vec<String>>,
}

/// Complements of every simplex, the empty one included, must be nonempty
/// and connected.
pub fn check_one_ended(l: &SimplicialComplex, budget: usize) -> Result<OneEndedCheck> {
    if let Some(w) = l.is_flag(budget)?.witness {
        return Err(Error::NotFlag(l.labels_of(&w)));
    }
    let g = l.one_skeleton();
    let n = g.n();
    let mut sweep = vec![Vec::new()];
    sweep.extend(l.simplices(budget)?);
    let bad = sweep.par_iter().find_first(|s| {
        let mut mask = fixedbitset::FixedBitSet::with_capacity(n);
        mask.insert_range(..);
        for &v in s.iter() {
            mask.set(v, false);
        }
        g.induced_components(&mask).len() != 1
    });
    Ok(OneEndedCheck {
        one_ended: bad.is_none(),
        witness: bad.map(|s| l.labels_of(s)),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct QuotientReport {
    pub f_vector: Vec<usize>,
    pub f_vector_matches: bool,
    pub links_match: bool,
    pub link_mismatch: Option<String>,
    pub five_large: FiveLargeSummary,
    pub no_isolated_corners: CubeCheck,
    pub no_disconnecting_cubes: CubeCheck,
    pub cd: usize,
    pub expected_cd: Option<usize>,
    pub passed: bool,
    pub failures: Vec<String>,
}

/// Every vertex link, with neighbors renamed to the generator they differ
/// by, must be the flag complex of the defining graph.
pub fn links_match_graph(g: &Racg, x: &CubeComplex) -> Option<String> {
    let expected = SimplicialComplex::flag(g.graph.clone());
    let n = g.n_generators();
    (0..x.n_vertices()).into_par_iter().find_map_first(|v| {
        let here = x.label(v).as_bytes();
        let renamed = x.vertex_link(v).relabel(|l| {
            let pos = (0..n).find(|&i| l.as_bytes()[i] != here[i]).unwrap_or(0);
            g.graph.label(pos).to_string()
        });
        match renamed {
            Ok(r) if r.same_as(&expected) => None,
            _ => Some(x.label(v).to_string()),
        }
    })
}

pub fn verify_quotient_properties(
    g: &Racg,
    x: &CubeComplex,
    expected_cd: Option<usize>,
    config: &CollapseConfig,
    budget: usize,
) -> Result<QuotientReport> {
    let f_vector = x.f_vector();
    let predicted = quotient_f_vector(g);
    let f_vector_matches = f_vector.len() == predicted.len()
        && f_vector.iter().zip(&predicted).all(|(&a, &b)| a as u128 == b);
    let link_mismatch = links_match_graph(g, x);
    let five = x.check_5_large(config, budget)?;
    let five_large = FiveLargeSummary::from(&five);
    let no_isolated_corners = x.check_no_isolated_corners();
    let no_disconnecting_cubes = x.check_no_disconnecting_cubes()?;
    let h = cubical_homology(x, Coeffs::Z, false);
    let cd = h.top_cohomology_degree().map_or(0, |d| d.max(0) as usize);

    let mut failures = Vec::new();
    if !f_vector_matches {
        failures.push(format!("f-vector {f_vector:?} differs from predicted {predicted:?}"));
    }
    if let Some(v) = &link_mismatch {
        failures.push(format!("link at `{v}` is not the flag complex of the graph"));
    }
    if !five_large.locally_5_large {
        failures.push("not locally 5-large".into());
    } else if five_large.non_contractible_neighborhoods > 0 {
        failures.push(format!(
            "cubical 2-neighborhoods with nonzero homology at {} of {} vertices",
            five_large.non_contractible_neighborhoods,
            x.n_vertices()
        ));
    } else if !five_large.certified {
        failures.push(format!(
            "5-largeness inconclusive at {} of {} vertices",
            five_large.inconclusive_neighborhoods,
            x.n_vertices()
        ));
    }
    if !no_isolated_corners.passed {
        failures.push(format!("isolated corner {:?}", no_isolated_corners.witness_vertex));
    }
    if !no_disconnecting_cubes.passed {
        failures.push(format!("disconnecting cube {:?}", no_disconnecting_cubes.witness_cube));
    }
    if let Some(e) = expected_cd {
        if e != cd {
            failures.push(format!("cohomological dimension {cd}, expected {e}"));
        }
    }
    Ok(QuotientReport {
        f_vector,
        f_vector_matches,
        links_match: link_mismatch.is_none(),
        link_mismatch,
        five_large,
        no_isolated_corners,
        no_disconnecting_cubes,
        cd,
        expected_cd,
        passed: failures.is_empty(),
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edge() -> Graph {
        Graph::complete(2)
    }

    fn point() -> Graph {
        Graph::complete(1)
    }

    fn racg(g: Graph) -> Racg {
        Racg::new(g, 100_000).unwrap()
    }

    #[test]
    fn normal_forms() {
        let g = racg(Graph::new(vec!["a".into(), "b".into(), "c".into()], &[("a", "b")]).unwrap());
        assert!(racg_normal_form(&g, &["a", "a"]).unwrap().is_empty());
        assert_eq!(racg_normal_form(&g, &["b", "a"]).unwrap(), vec!["a", "b"]);
        assert_eq!(racg_normal_form(&g, &["a", "c", "a"]).unwrap(), vec!["a", "c", "a"]);
        assert_eq!(racg_normal_form(&g, &["a", "b", "a"]).unwrap(), vec!["b"]);
        assert!(racg_normal_form(&g, &["z"]).is_err());
    }

    #[test]
    fn small_quotients() {
        let q = level2_quotient(&racg(point()), 1000).unwrap();
        assert_eq!(q.f_vector(), vec![2, 1]);
        let q = level2_quotient(&racg(edge()), 1000).unwrap();
        assert_eq!(q.f_vector(), vec![4, 4, 1]);
        assert_eq!(quotient_f_vector(&racg(edge())), vec![4, 4, 1]);
    }

    #[test]
    fn pentagon_quotient() {
        let g = racg(Graph::cycle(5));
        let q = level2_quotient(&g, 100_000).unwrap();
        assert_eq!(q.f_vector(), vec![32, 80, 40]);
        assert_eq!(quotient_f_vector(&g), vec![32, 80, 40]);
        assert!(links_match_graph(&g, &q).is_none());
        assert_eq!(q.euler_characteristic(), -8);
    }

    #[test]
    fn embedding_checks() {
        assert!(two_neighborhood_embedding_check(&racg(edge())).injective);
        assert!(two_neighborhood_embedding_check(&racg(point())).injective);
        let r = two_neighborhood_embedding_check(&racg(Graph::cycle(5)));
        assert!(!r.injective);
        let (a, b) = r.witness.unwrap();
        assert_ne!(a, b);
    }

    #[test]
    fn hyperbolicity() {
        assert!(!is_hyperbolic_racg(&Graph::cycle(4), 1000).unwrap().hyperbolic);
        assert_eq!(is_hyperbolic_racg(&Graph::cycle(4), 1000).unwrap().witness.unwrap().len(), 4);
        assert!(is_hyperbolic_racg(&Graph::cycle(5), 1000).unwrap().hyperbolic);
    }

    #[test]
    fn one_endedness() {
        let p = SimplicialComplex::flag(Graph::path(3));
        let r = check_one_ended(&p, 100).unwrap();
        assert!(!r.one_ended);
        assert_eq!(r.witness.unwrap(), vec!["p2"]);
        assert!(check_one_ended(&SimplicialComplex::flag(Graph::cycle(5)), 100).unwrap().one_ended);
    }

    #[test]
    fn square_quotient_has_isolated_corners() {
        let g = racg(edge());
        let q = level2_quotient(&g, 1000).unwrap();
        let r = verify_quotient_properties(&g, &q, None, &CollapseConfig::default(), 1000).unwrap();
        assert!(!r.passed);
        assert!(!r.no_isolated_corners.passed);
    }

    #[test]
    fn pentagon_properties() {
        let g = racg(Graph::cycle(5));
        let q = level2_quotient(&g, 100_000).unwrap();
        let r = verify_quotient_properties(&g, &q, Some(2), &CollapseConfig::default(), 100_000).unwrap();
        assert_eq!(r.cd, 2);
        assert!(r.links_match);
        assert!(r.no_isolated_corners.passed);
        assert!(r.no_disconnecting_cubes.passed);
        assert!(r.five_large.locally_5_large);
    }
}
