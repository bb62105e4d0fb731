//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any criterion fails.

use std::collections::VecDeque;
use std::sync::Arc;
use std::time::{Duration, Instant};

use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use fibercox::collapse::{collapse, CollapseConfig};
use fibercox::cubical::CubeComplex;
use fibercox::davis::{level2_quotient, links_match_graph, Racg};
use fibercox::homology::{cubical_homology, simplicial_homology, vcd_racg, Coeffs};
use fibercox::lemmas::{run_suite, SuiteConfig};
use fibercox::moves::{
    canonical_moves, canonical_state, certify_legal_by_hypotheses, check_legal_orbit, OrbitConfig, OrbitMode,
};
use fibercox::pipeline::{cycle_complex, distinct_family_report, run_pipeline, PipelineConfig, Status};
use fibercox::simplicial::DEFAULT_CELL_BUDGET;
use fibercox::thickening::{ThickenOptions, Thickening};
use fibercox::{Graph, SimplicialComplex};

const BUDGET: usize = DEFAULT_CELL_BUDGET;

struct Criterion {
    name: &'static str,
    limit: Duration,
    run: fn() -> Result<String, String>,
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn err(e: fibercox::Error) -> String {
    e.to_string()
}

fn pair(k: usize) -> Result<Thickening, String> {
    Thickening::pair(Arc::new(cycle_complex(k).map_err(err)?), &ThickenOptions::default()).map_err(err)
}

fn pentagon_orbit() -> Result<String, String> {
    let th = pair(5)?;
    ensure(th.n_vertices() == 10, format!("{} vertices", th.n_vertices()))?;
    let k = th.complex().map_err(err)?;
    ensure(k.one_skeleton().chordless_cycle(4).is_none(), "chordless 4-cycle")?;
    ensure(k.is_k_large(5, BUDGET).map_err(err)?.is_large, "not 5-large")?;
    let system = canonical_moves(&th).map_err(err)?;
    ensure(system.rank() == 5, format!("rank {}", system.rank()))?;
    let cfg = OrbitConfig { mode: OrbitMode::Exhaustive, ..Default::default() };
    let r = check_legal_orbit(&th, &system, &canonical_state(&th).map_err(err)?, &cfg).map_err(err)?;
    ensure(r.orbit == 32 && r.is_authoritative_legal(), format!("{} states, {} illegal", r.orbit, r.illegal_count))?;
    Ok("10 vertices, no chordless 4-cycle, rank 5, 32 of 32 states legal".into())
}

fn pentagon_vcd() -> Result<String, String> {
    let th = pair(5)?;
    let r = vcd_racg(th.complex().map_err(err)?, Coeffs::Z, BUDGET).map_err(err)?;
    ensure(r.vcd == 2, format!("vcd {}", r.vcd))?;
    ensure(r.witness.is_empty(), format!("witness {:?}", r.witness))?;
    ensure(r.simplices_swept == 61, format!("{} simplices swept", r.simplices_swept))?;
    Ok("vcd 2 at the empty simplex, 61 simplices swept".into())
}

fn pentagon_quotient() -> Result<String, String> {
    let g = Racg::new(Graph::cycle(5), BUDGET).map_err(err)?;
    let x = level2_quotient(&g, BUDGET).map_err(err)?;
    ensure(x.f_vector() == vec![32, 80, 40], format!("f-vector {:?}", x.f_vector()))?;
    let h = cubical_homology(&x, Coeffs::Z, false);
    ensure(
        h.betti == vec![1, 10, 1] && h.torsion.iter().all(|t| t.is_empty()),
        format!("homology {:?}", h.describe()),
    )?;
    ensure(x.euler_characteristic() == -8, format!("chi {}", x.euler_characteristic()))?;
    ensure(x.check_no_isolated_corners().passed, "isolated corner")?;
    ensure(x.check_no_disconnecting_cubes().map_err(err)?.passed, "disconnecting cube")?;
    ensure(links_match_graph(&g, &x).is_none(), "a vertex link differs from C5")?;
    Ok("(32, 80, 40), homology (Z, Z^10, Z), chi -8, corners and cubes pass, links are C5".into())
}

fn second_quotient() -> Result<String, String> {
    let th = pair(5)?;
    let g = Racg::new(th.one_skeleton().unwrap().clone(), BUDGET).map_err(err)?;
    let x = level2_quotient(&g, BUDGET).map_err(err)?;
    let f = x.f_vector();
    ensure(f == vec![1024, 5120, 6400, 2560, 320], format!("f-vector {f:?}"))?;
    let h = cubical_homology(&x, Coeffs::Z, false);
    let top = h.top_cohomology_degree();
    ensure(top == Some(2), format!("top cohomology degree {top:?}"))?;
    ensure((3..=4).all(|d| !h.cohomology_nonzero(d)), "cohomology above degree 2")?;
    ensure(x.check_no_isolated_corners().passed, "isolated corner")?;
    ensure(x.check_no_disconnecting_cubes().map_err(err)?.passed, "disconnecting cube")?;
    Ok(format!("(1024, 5120, 6400, 2560, 320), cd 2, homology {:?}", h.describe()))
}

fn property_suite() -> Result<String, String> {
    let mut total = 0;
    let runs: Vec<(&str, SimplicialComplex, Thickening)> = vec![
        ("pair thickening of C5", pair(5)?.complex().map_err(err)?.clone(), pair(5)?),
        {
            let th = Thickening::th1(Arc::new(cycle_complex(5).map_err(err)?), &ThickenOptions::default());
            ("flag C5", th.complex().map_err(err)?.clone(), th)
        },
        {
            let th = Thickening::th1(Arc::new(cycle_complex(6).map_err(err)?), &ThickenOptions::default());
            ("flag C6", th.complex().map_err(err)?.clone(), th)
        },
    ];
    for (name, k, th) in runs {
        let cfg = SuiteConfig {
            level: 1,
            coeffs: Coeffs::Z,
            collapse: CollapseConfig::default(),
            budget: BUDGET,
        };
        let r = run_suite(&k, Some(&th), &cfg).map_err(err)?;
        for c in &r.checks {
            ensure(c.passed(), format!("{name}: {} fails at {:?}", c.name, c.first_failure))?;
            total += c.instances;
        }
    }
    Ok(format!("{total} instances across three complexes, zero counterexamples"))
}

fn distances(g: &Graph, s: usize) -> Vec<usize> {
    let mut d = vec![usize::MAX; g.n()];
    d[s] = 0;
    let mut q = VecDeque::from([s]);
    while let Some(u) = q.pop_front() {
        for v in g.neighbors(u) {
            if d[v] == usize::MAX {
                d[v] = d[u] + 1;
                q.push_back(v);
            }
        }
    }
    d
}

/// A cycle with chords and ears added only between vertices at distance at
/// least 4, so the result is 2-connected with girth at least 5.
fn random_graph(rng: &mut ChaCha8Rng) -> Graph {
    let n = rng.gen_range(5..=9);
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    let mut count = n;
    for _ in 0..rng.gen_range(0..=2) {
        let g = Graph::from_indices((0..count).map(|i| format!("g{i}")).collect(), edges.iter().copied()).unwrap();
        let u = rng.gen_range(0..count);
        let d = distances(&g, u);
        let far: Vec<usize> = (0..count).filter(|&v| d[v] >= 4).collect();
        if far.is_empty() {
            continue;
        }
        let v = far[rng.gen_range(0..far.len())];
        if rng.gen_bool(0.5) {
            edges.push((u, v));
        } else {
            edges.push((u, count));
            edges.push((count, v));
            count += 1;
        }
    }
    Graph::from_indices((0..count).map(|i| format!("g{i}")).collect(), edges.iter().copied()).unwrap()
}

fn certificate_soundness() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0xacce_0006);
    let collapse_cfg = CollapseConfig::default();
    let (mut granted, mut refused, mut exhaustive, mut sampled) = (0, 0, 0, 0);
    let mut attempts = 0;
    while granted < 200 {
        attempts += 1;
        ensure(attempts <= 20_000, format!("only {granted} granted instances found"))?;
        let x = CubeComplex::from_graph(&random_graph(&mut rng));
        let cert = certify_legal_by_hypotheses(&x, &collapse_cfg, BUDGET).map_err(err)?;
        if !cert.granted {
            refused += 1;
            continue;
        }
        granted += 1;
        let th = Thickening::pair(Arc::new(x), &ThickenOptions::default()).map_err(err)?;
        let system = canonical_moves(&th).map_err(err)?;
        let cfg = OrbitConfig {
            mode: if system.rank() <= 20 { OrbitMode::Exhaustive } else { OrbitMode::Sampled(10_000) },
            seed: attempts,
            ..Default::default()
        };
        let r = check_legal_orbit(&th, &system, &canonical_state(&th).map_err(err)?, &cfg).map_err(err)?;
        if r.mode == "exhaustive" {
            exhaustive += 1;
        } else {
            sampled += 1;
        }
        ensure(!r.found_illegal(), format!("false certificate: {:?}", r.witnesses.first()))?;
    }
    let c4 = CubeComplex::from_graph(&Graph::cycle(4));
    let cert = certify_legal_by_hypotheses(&c4, &collapse_cfg, BUDGET).map_err(err)?;
    ensure(!cert.granted && cert.five_large.non_contractible_neighborhoods == 4, format!("C4: {:?}", cert.refusal))?;
    let square = CubeComplex::single_cube(2);
    let cert = certify_legal_by_hypotheses(&square, &collapse_cfg, BUDGET).map_err(err)?;
    ensure(
        !cert.granted && !cert.no_isolated_corners.passed && cert.no_isolated_corners.witness_vertex.is_some(),
        format!("square: {:?}", cert.refusal),
    )?;
    Ok(format!(
        "200 granted ({exhaustive} exhaustive, {sampled} sampled), {refused} refused, zero illegal; C4 and the square refused"
    ))
}

fn family_separation() -> Result<String, String> {
    let r = distinct_family_report(&[5, 6, 7, 8]).map_err(err)?;
    let gens: Vec<usize> = r.rows.iter().map(|r| r.generators).collect();
    ensure(gens == vec![10, 18, 28, 40], format!("generators {gens:?}"))?;
    ensure(r.rows.iter().all(|r| r.matches) && r.pairwise_distinct, "orders collide")?;
    Ok("orders 2^10, 2^18, 2^28, 2^40, pairwise distinct".into())
}

fn rp2() -> SimplicialComplex {
    let facets = [
        [0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 5, 1],
        [1, 2, 4], [2, 3, 5], [3, 4, 1], [4, 5, 2], [5, 1, 3],
    ];
    SimplicialComplex::explicit(
        (1..=6).map(|i| format!("p{i}")).collect(),
        facets.iter().map(|f| f.to_vec()).collect(),
    )
    .unwrap()
}

fn random_complex(rng: &mut ChaCha8Rng) -> SimplicialComplex {
    let n = rng.gen_range(4..=14);
    let facets: Vec<Vec<usize>> = (0..rng.gen_range(2..=12))
        .map(|_| {
            let size = rng.gen_range(1..=4.min(n));
            let mut f = rand::seq::index::sample(rng, n, size).into_vec();
            f.sort_unstable();
            f
        })
        .collect();
    SimplicialComplex::explicit((0..n).map(|i| format!("v{i}")).collect(), facets).unwrap()
}

fn homology_consistency() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0xacce_0008);
    let mut complexes: Vec<SimplicialComplex> = (0..100).map(|_| random_complex(&mut rng)).collect();
    complexes.push(rp2());
    let mut torsion_seen = 0;
    let mut collapsible = 0;
    for (i, k) in complexes.iter().enumerate() {
        let z = simplicial_homology(k, Coeffs::Z, false, BUDGET).map_err(err)?;
        let q = simplicial_homology(k, Coeffs::Q, false, BUDGET).map_err(err)?;
        let f2 = simplicial_homology(k, Coeffs::GF2, false, BUDGET).map_err(err)?;
        let top = k.dim();
        let even = |d: isize| {
            z.torsion_at(d)
                .iter()
                .filter(|t| t.to_u64().is_some_and(|t| t % 2 == 0))
                .count()
        };
        for d in 0..=top {
            ensure(q.betti_at(d) == z.betti_at(d), format!("complex {i}: rational rank differs in degree {d}"))?;
            let expected = z.betti_at(d) + even(d) + even(d - 1);
            ensure(f2.betti_at(d) == expected, format!("complex {i}: mod 2 rank differs in degree {d}"))?;
            if !z.torsion_at(d).is_empty() {
                torsion_seen += 1;
            }
        }
        let chi: i64 = (0..=top).map(|d| if d % 2 == 0 { 1 } else { -1 } * z.betti_at(d) as i64).sum();
        let f = k.f_vector(BUDGET).map_err(err)?;
        let chi_cells: i64 = f.iter().enumerate().map(|(d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) }).sum();
        ensure(chi == chi_cells, format!("complex {i}: Euler characteristic {chi} vs {chi_cells}"))?;
        let c = collapse(k, &CollapseConfig::default(), BUDGET).map_err(err)?;
        if c.is_collapsible() {
            collapsible += 1;
            let r = simplicial_homology(k, Coeffs::Z, true, BUDGET).map_err(err)?;
            ensure(r.is_trivial(), format!("complex {i}: collapsible but reduced homology {:?}", r.describe()))?;
        }
    }
    ensure(torsion_seen > 0, "no torsion exercised")?;
    Ok(format!("101 complexes ({collapsible} collapsible, torsion in {torsion_seen} degrees), zero violations"))
}

fn lazy_labels() -> Result<String, String> {
    let mut cfg = PipelineConfig::cycle(5);
    cfg.iterations = 2;
    cfg.samples = 100;
    let chain = run_pipeline(&cfg).map_err(err)?;
    ensure(chain.iterations.len() == 2 && chain.halted.is_none(), "chain stopped early")?;
    let first = &chain.iterations[0];
    ensure(first.group_certified, "first group not certified")?;
    ensure(first.vcd.as_ref().is_some_and(|v| v.status == Status::Certified && v.value == 2), "first vcd")?;
    let second = &chain.iterations[1];
    ensure(second.lazy && !second.group_certified && !second.fully_certified, "second iteration claims certification")?;
    let th = second.thickening.as_ref().unwrap();
    let scans = th.scans.as_ref().ok_or("no local scans")?;
    ensure(th.mode == "implicit" && scans.scanned >= 50, format!("{} scans", scans.scanned))?;
    let legal = second.legality.as_ref().unwrap();
    ensure(legal.status != Status::Certified && legal.orbit.mode == "sampled", format!("legality {}", legal.label))?;
    ensure(!legal.hypotheses.granted, "hypothesis certificate granted")?;
    let vcd = second.vcd.as_ref().unwrap();
    ensure(
        vcd.status == Status::Asserted && vcd.value == 3 && vcd.label.starts_with("asserted = 3, not computed"),
        format!("vcd label {}", vcd.label),
    )?;
    Ok(format!(
        "{} local scans ({}), legality \"{}\", vcd \"{}\"",
        scans.scanned, th.label, legal.label, vcd.label
    ))
}

fn main() {
    let criteria = [
        Criterion { name: "pentagon thickening, rank and exhaustive orbit", limit: Duration::from_secs(10), run: pentagon_orbit },
        Criterion { name: "complement formula on the pentagon thickening", limit: Duration::from_secs(30), run: pentagon_vcd },
        Criterion { name: "level-2 quotient of the pentagon group", limit: Duration::from_secs(10), run: pentagon_quotient },
        Criterion { name: "level-2 quotient of the second group", limit: Duration::from_secs(900), run: second_quotient },
        Criterion { name: "complex and cube property suite", limit: Duration::from_secs(300), run: property_suite },
        Criterion { name: "hypothesis certificate soundness", limit: Duration::from_secs(900), run: certificate_soundness },
        Criterion { name: "cycle family separation", limit: Duration::from_secs(5), run: family_separation },
        Criterion { name: "homology engine self-consistency", limit: Duration::from_secs(300), run: homology_consistency },
        Criterion { name: "lazy second iteration labels", limit: Duration::from_secs(900), run: lazy_labels },
    ];
    let mut failed = 0;
    for c in &criteria {
        let t = Instant::now();
        let outcome = (c.run)();
        let elapsed = t.elapsed();
        let (ok, detail) = match outcome {
            Ok(d) if elapsed <= c.limit => (true, d),
            Ok(d) => (false, format!("{d}; over the {:?} limit", c.limit)),
            Err(e) => (false, e),
        };
        if !ok {
            failed += 1;
        }
        println!(
            "{} {:<48} {:>8.2}s  {}",
            if ok { "PASS" } else { "FAIL" },
            c.name,
            elapsed.as_secs_f64(),
            detail
        );
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
