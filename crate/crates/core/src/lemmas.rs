//! Exhaustive property checks on flag 5-large complexes, thickenings and cube
//! complexes: links of faces, balls and spheres, the codimension filtration
//! of a sphere and the gluing bound that drives it, and minimal cubes.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::collapse::{collapse, CollapseConfig};
use crate::cubical::CubeComplex;
use crate::error::{Error, Result};
use crate::filtration::sphere_filtration;
use crate::homology::{cohomological_dimension, link_cd_check, mayer_vietoris_check, sphere_cd_check, Coeffs};
use crate::simplicial::{link_simplex_iso_check, SimplicialComplex};
use crate::thickening::Thickening;

#[derive(Clone, Debug, Serialize)]
pub struct PropertyCheck {
    pub name: &'static str,
    pub instances: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl PropertyCheck {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub level: usize,
    pub vertices: usize,
    pub simplices: usize,
    pub checks: Vec<PropertyCheck>,
    pub passed: bool,
}

impl SuiteReport {
    pub fn check(&self, name: &str) -> Option<&PropertyCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SuiteConfig {
    pub level: usize,
    pub coeffs: Coeffs,
    pub collapse: CollapseConfig,
    pub budget: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            level: 1,
            coeffs: Coeffs::Z,
            collapse: CollapseConfig::default(),
            budget: crate::simplicial::DEFAULT_CELL_BUDGET,
        }
    }
}

/// Collects per-instance outcomes; an `Err` counts as a failure with its message.
struct Tally {
    name: &'static str,
    outcomes: Vec<std::result::Result<(), String>>,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally { name, outcomes: Vec::new() }
    }

    fn finish(self) -> PropertyCheck {
        let failures: Vec<&String> = self.outcomes.iter().filter_map(|o| o.as_ref().err()).collect();
        PropertyCheck {
            name: self.name,
            instances: self.outcomes.len(),
            failures: failures.len(),
            first_failure: failures.first().map(|s| s.to_string()),
        }
    }
}

fn run<T: Sync>(name: &'static str, items: &[T], f: impl Fn(&T) -> Result<std::result::Result<(), String>> + Sync) -> PropertyCheck {
    let mut t = Tally::new(name);
    t.outcomes = items
        .par_iter()
        .map(|x| f(x).unwrap_or_else(|e| Err(e.to_string())))
        .collect();
    t.finish()
}

fn expect(ok: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn labeled_simplices(k: &SimplicialComplex, budget: usize) -> Result<BTreeSet<Vec<String>>> {
    Ok(k.simplices(budget)?
        .iter()
        .map(|s| {
            let mut l = k.labels_of(s);
            l.sort();
            l
        })
        .collect())
}

fn faces(s: &[usize]) -> Vec<Vec<usize>> {
    (0u64..1 << s.len())
        .map(|m| s.iter().enumerate().filter(|(i, _)| m >> i & 1 == 1).map(|(_, &v)| v).collect())
        .collect()
}

fn minus(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().copied().filter(|v| !b.contains(v)).collect()
}

fn union(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = a.iter().chain(b).copied().collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Every simplex meeting `s` in `k` and their faces: the vertices are `s`
/// and its sphere.
fn ball_vertices(k: &SimplicialComplex, s: &[usize]) -> Vec<usize> {
    union(s, &k.sphere_vertices(s))
}

fn cd_at_most(k: &SimplicialComplex, bound: isize, coeffs: Coeffs, budget: usize) -> Result<bool> {
    Ok(k.is_empty() || cohomological_dimension(k, coeffs, budget)? as isize <= bound)
}

/// Runs the simplicial checks on a flag 5-large complex, plus the
/// thickening-specific ones when `th` is given (its complex must be `k`).
pub fn run_suite(k: &SimplicialComplex, th: Option<&Thickening>, cfg: &SuiteConfig) -> Result<SuiteReport> {
    let large = k.is_k_large(5, cfg.budget)?;
    if !large.is_large {
        let w = large.non_flag_witness.or(large.cycle_witness).unwrap_or_default();
        return Err(Error::HypothesisViolation(format!("complex is not 5-large: {:?}", k.labels_of(&w))));
    }
    // Flag mode: links and spheres become full subcomplexes.
    let k = &SimplicialComplex::flag(k.one_skeleton());
    let budget = cfg.budget;
    let n = cfg.level;
    let bound = n as isize - 1;
    let simplices = k.simplices(budget)?;
    let mut checks = Vec::new();

    let pairs: Vec<(Vec<usize>, Vec<usize>)> = simplices
        .iter()
        .flat_map(|s| faces(s).into_iter().map(move |t| (s.clone(), t)))
        .collect();
    checks.push(run("link_of_face_composition", &pairs, |(s, t)| {
        Ok(expect(link_simplex_iso_check(k, s, t)?, || {
            format!("link of {:?} through face {:?}", k.labels_of(s), k.labels_of(t))
        }))
    }));

    checks.push(run("ball_is_full", &simplices, |s| {
        let ball = k.combinatorial_ball(s)?;
        let full = k.full_subcomplex(&ball_vertices(k, s))?;
        Ok(expect(ball.same_as(&full), || format!("ball of {:?} is not full", k.labels_of(s))))
    }));

    checks.push(run("ball_collapsible", &simplices, |s| {
        let ball = k.combinatorial_ball(s)?;
        let r = collapse(&ball, &cfg.collapse, budget)?;
        Ok(expect(r.is_collapsible(), || {
            format!("ball of {:?}: {}", k.labels_of(s), r.obstruction.unwrap_or_else(|| "inconclusive".into()))
        }))
    }));

    checks.push(run("ball_sphere_gluing_exact", &simplices, |s| {
        let rest = minus(&(0..k.n_vertices()).collect::<Vec<_>>(), s);
        let a = k.full_subcomplex(&rest)?;
        let b = k.combinatorial_ball(s)?;
        let c = k.combinatorial_sphere(s)?;
        let mv = mayer_vietoris_check(k, &a, &b, &c, budget)?;
        let top_z = mv.degrees.iter().filter(|d| d.dim_z > 0).map(|d| d.degree).max().unwrap_or(0);
        // Above the top degree of the whole complex, the complement and the sphere agree.
        let agree = mv.degrees.iter().filter(|d| d.degree > top_z + 1).all(|d| d.dim_a == d.dim_c);
        Ok(expect(mv.exact && agree, || format!("gluing at {:?}", k.labels_of(s))))
    }));

    checks.push(run("sphere_cd_bound", &simplices, |s| {
        let r = sphere_cd_check(k, s, n, cfg.coeffs, budget)?;
        Ok(expect(r.holds, || format!("sphere of {:?} has cd {:?} > {}", r.simplex, r.cd, r.bound)))
    }));

    checks.push(run("link_cd_bound", &simplices, |s| {
        let r = link_cd_check(k, s, n, cfg.coeffs, budget)?;
        Ok(expect(r.holds, || format!("link of {:?} has cd {:?} > {}", r.simplex, r.cd, r.bound)))
    }));

    let filtrations: Vec<_> = simplices
        .iter()
        .map(|s| sphere_filtration(k, s))
        .collect::<Result<_>>()?;

    checks.push(run("filtration_partition", &filtrations, |f| {
        let mut all: Vec<usize> = f.classes.iter().flat_map(|c| c.class.iter().copied()).collect();
        all.sort_unstable();
        let sphere = k.sphere_vertices(&f.simplex);
        let distinct = all.windows(2).all(|w| w[0] != w[1]);
        Ok(expect(distinct && all == sphere && f.stages.last() == Some(&sphere), || {
            format!("classes of {:?} do not partition the sphere", k.labels_of(&f.simplex))
        }))
    }));

    checks.push(run("filtration_classes_separated", &filtrations, |f| {
        for c in &f.classes {
            for d in &f.classes {
                if c.codim == d.codim && c.face < d.face {
                    for &u in &c.class {
                        for &v in &d.class {
                            if k.adjacent(u, v) {
                                return Ok(Err(format!(
                                    "edge {}-{} joins classes of {:?} and {:?}",
                                    k.label(u),
                                    k.label(v),
                                    k.labels_of(&c.face),
                                    k.labels_of(&d.face)
                                )));
                            }
                        }
                    }
                }
            }
        }
        Ok(Ok(()))
    }));

    checks.push(run("filtration_class_is_link_complement", &filtrations, |f| {
        let s = &f.simplex;
        for c in f.classes.iter().filter(|c| c.codim > 0) {
            let link = k.common_neighbors(&c.face);
            let residual = minus(s, &c.face);
            let off = minus(&link, &residual);
            let here = union(&c.class, &c.boundary);
            if off != here {
                return Ok(Err(format!("class of {:?}: vertex sets differ", k.labels_of(&c.face))));
            }
            let near: Vec<usize> = off
                .iter()
                .copied()
                .filter(|&v| residual.iter().any(|&w| k.adjacent(v, w)))
                .collect();
            if near != c.boundary {
                return Ok(Err(format!("class of {:?}: boundary differs", k.labels_of(&c.face))));
            }
            let stage = &f.stages[c.codim];
            for &v in &c.class {
                for &u in stage {
                    if k.adjacent(u, v) && here.binary_search(&u).is_err() {
                        return Ok(Err(format!("{} escapes the class of {:?}", k.label(u), k.labels_of(&c.face))));
                    }
                }
            }
            let a = k.full_subcomplex(&here)?;
            let b = k.full_subcomplex(&link)?.full_subcomplex_by_labels(&k.labels_of(&off))?;
            if !a.same_as(&b) {
                return Ok(Err(format!("class of {:?}: complexes differ", k.labels_of(&c.face))));
            }
        }
        Ok(Ok(()))
    }));

    checks.push(run("gluing_bound", &filtrations, |f| {
        let s = &f.simplex;
        // The bottom stage is the link of the simplex itself.
        let mut prev: Vec<usize> = f.stages[0].clone();
        if !cd_at_most(&k.full_subcomplex(&prev)?, bound, cfg.coeffs, budget)? {
            return Ok(Err(format!("bottom stage of {:?} exceeds the bound", k.labels_of(s))));
        }
        for i in 1..f.stages.len() {
            for c in f.classes_of_codim(i) {
                let z_verts = k.common_neighbors(&c.face);
                let residual = minus(s, &c.face);
                let z = k.full_subcomplex(&z_verts)?;
                let a_verts = minus(&z_verts, &residual);
                let b_verts = union(&residual, &c.boundary);
                let a = k.full_subcomplex(&a_verts)?;
                let b = k.full_subcomplex(&b_verts)?;
                let cc = k.full_subcomplex(&c.boundary)?;
                let b_prime = k.full_subcomplex(&prev)?;
                let next_verts = union(&prev, &c.class);
                let next = k.full_subcomplex(&next_verts)?;
                let ctx = || format!("{:?} at face {:?}", k.labels_of(s), k.labels_of(&c.face));

                if !collapse(&b, &cfg.collapse, budget)?.is_collapsible() {
                    return Ok(Err(format!("ball not collapsible: {}", ctx())));
                }
                let (sa, sb2, sc, sn) = (
                    labeled_simplices(&a, budget)?,
                    labeled_simplices(&b_prime, budget)?,
                    labeled_simplices(&cc, budget)?,
                    labeled_simplices(&next, budget)?,
                );
                if sa.union(&sb2).cloned().collect::<BTreeSet<_>>() != sn {
                    return Ok(Err(format!("union is not the next stage: {}", ctx())));
                }
                if sa.intersection(&sb2).cloned().collect::<BTreeSet<_>>() != sc {
                    return Ok(Err(format!("overlap is not the boundary: {}", ctx())));
                }
                if !mayer_vietoris_check(&z, &a, &b, &cc, budget)?.exact {
                    return Ok(Err(format!("sequence not exact: {}", ctx())));
                }
                let hyp = cd_at_most(&z, bound, cfg.coeffs, budget)? && cd_at_most(&b_prime, bound, cfg.coeffs, budget)?;
                if hyp && !cd_at_most(&next, bound, cfg.coeffs, budget)? {
                    return Ok(Err(format!("bound lost after gluing: {}", ctx())));
                }
                if !hyp {
                    return Ok(Err(format!("hypotheses fail: {}", ctx())));
                }
                prev = next_verts;
            }
        }
        Ok(Ok(()))
    }));

    if let Some(th) = th {
        let tk = th.complex()?;
        let to_th = |s: &Vec<usize>| -> Result<Vec<usize>> {
            let mut out: Vec<usize> = s.iter().map(|&v| th.index_of(k.label(v))).collect::<Result<_>>()?;
            out.sort_unstable();
            Ok(out)
        };
        let th_simplices: Vec<Vec<usize>> = simplices.iter().map(to_th).collect::<Result<_>>()?;
        if !tk.same_as(k) {
            return Err(Error::InvalidInput("thickening does not match the complex".into()));
        }
        checks.push(run("link_join_split", &th_simplices, |s| {
            let d = th.link_join_decomposition(s, budget)?;
            Ok(expect(d.holds(), || format!("join fails at {:?}: {d:?}", th.labels_of(s))))
        }));
        checks.push(run("image_minimal_cube_oracle", &th_simplices, |s| {
            let mut img: Vec<usize> = s.iter().map(|&y| th.alpha(y)).collect();
            img.sort_unstable();
            img.dedup();
            Ok(minimal_cube_agrees(th.base(), &img))
        }));
        checks.extend(cube_checks(th.base()));
    }

    let passed = checks.iter().all(PropertyCheck::passed);
    Ok(SuiteReport {
        level: n,
        vertices: k.n_vertices(),
        simplices: simplices.len(),
        checks,
        passed,
    })
}

/// Intersection of all cubes containing `s`, by brute force.
pub fn minimal_cube_brute_force(x: &CubeComplex, s: &[usize]) -> Option<Vec<usize>> {
    let mut inter: Option<Vec<usize>> = None;
    for id in 0..x.n_cubes() {
        let vs = x.vertex_set(id);
        if s.iter().all(|v| vs.binary_search(v).is_ok()) {
            inter = Some(match inter {
                None => vs.to_vec(),
                Some(cur) => cur.into_iter().filter(|v| vs.binary_search(v).is_ok()).collect(),
            });
        }
    }
    inter
}

fn minimal_cube_agrees(x: &CubeComplex, s: &[usize]) -> std::result::Result<(), String> {
    let fast = x.minimal_cube(s).map(|id| x.vertex_set(id).to_vec()).ok();
    let slow = minimal_cube_brute_force(x, s);
    expect(fast == slow, || format!("minimal cube of {:?}: {fast:?} vs {slow:?}", x.labels_of(s)))
}

/// Cube-level checks: links of cubes against links in vertex links, and
/// minimal cubes against the brute-force intersection.
pub fn cube_checks(x: &CubeComplex) -> Vec<PropertyCheck> {
    let corners: Vec<(usize, usize)> = (0..x.n_cubes())
        .flat_map(|id| x.vertex_set(id).iter().map(move |&v| (id, v)))
        .collect();
    let link_check = run("cube_link_vs_vertex_link", &corners, |&(id, v)| {
        Ok(expect(x.link_iso_check(id, v)?, || {
            format!("cube {:?} at {}", x.labels_of(x.vertex_set(id)), x.label(v))
        }))
    });
    let mut sets: BTreeSet<Vec<usize>> = BTreeSet::new();
    for &id in x.maximal_cubes() {
        let vs = x.vertex_set(id);
        if vs.len() <= 4 {
            sets.extend(faces(vs).into_iter().filter(|f| !f.is_empty()));
        } else {
            for (i, &a) in vs.iter().enumerate() {
                for (j, &b) in vs.iter().enumerate().skip(i + 1) {
                    sets.insert(vec![a, b]);
                    for &c in &vs[j + 1..] {
                        sets.insert(vec![a, b, c]);
                    }
                }
            }
        }
    }
    let sets: Vec<Vec<usize>> = sets.into_iter().collect();
    let cube_check = run("minimal_cube_oracle", &sets, |s| Ok(minimal_cube_agrees(x, s)));
    vec![link_check, cube_check]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::thickening::{build_pair_thickening, build_th1, ThickenOptions};
    use std::sync::Arc;

    #[test]
    fn pentagon_suite() {
        let base = Arc::new(CubeComplex::from_graph(&Graph::cycle(5)));
        let th = build_th1(base);
        let r = run_suite(th.complex().unwrap(), Some(&th), &SuiteConfig::default()).unwrap();
        for c in &r.checks {
            assert!(c.passed(), "{c:?}");
            assert!(c.instances > 0, "{}", c.name);
        }
    }

    #[test]
    fn pair_thickening_suite() {
        let base = Arc::new(CubeComplex::from_graph(&Graph::cycle(5)));
        let th = build_pair_thickening(base, &ThickenOptions::default()).unwrap();
        let r = run_suite(th.complex().unwrap(), Some(&th), &SuiteConfig::default()).unwrap();
        assert_eq!(r.simplices, 60);
        assert!(r.passed, "{:?}", r.checks.iter().find(|c| !c.passed()));
    }

    #[test]
    fn square_is_rejected() {
        let k = SimplicialComplex::flag(Graph::cycle(4));
        assert!(matches!(run_suite(&k, None, &SuiteConfig::default()), Err(Error::HypothesisViolation(_))));
    }

    #[test]
    fn level_zero_bound_fails() {
        let k = SimplicialComplex::flag(Graph::cycle(6));
        let cfg = SuiteConfig { level: 0, ..Default::default() };
        let r = run_suite(&k, None, &cfg).unwrap();
        assert!(!r.check("sphere_cd_bound").unwrap().passed());
    }
}
