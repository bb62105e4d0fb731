//! States and moves on a graph over GF(2), legal orbits, detection functions
//! and blockade cubes for pair thickenings.

use std::collections::{HashMap, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::collapse::CollapseConfig;
use crate::cubical::{CubeCheck, CubeComplex, FiveLargeCertificate};
use crate::error::{Error, Result};
use crate::gf2::BitVec;
use crate::graph::Graph;
use crate::thickening::Thickening;

pub type State = BitVec;

pub const DEFAULT_EXHAUSTIVE_BOUND: u64 = 1 << 20;
pub const DEFAULT_SEED: u64 = 0x5eed_0b17;

/// How the canonical pair moves are assigned to vertices.
pub const PAIR_MOVE_READING: &str =
    "the toggle of {(v,w),(w,v)} is assigned as the move at both (v,w) and (w,v)";

fn check_len(n: usize, s: &State) -> Result<()> {
    if s.len() != n {
        return Err(Error::StateLength { expected: n, got: s.len() });
    }
    Ok(())
}

/// A move at `v`: value 1 at `v` and 0 at every neighbor of `v`.
pub fn is_move(g: &Graph, v: &str, m: &State) -> Result<bool> {
    let v = g.index_of(v)?;
    check_len(g.n(), m)?;
    Ok(m.get(v) && g.neighbors(v).all(|u| !m.get(u)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SideFailure {
    pub value: u8,
    /// "empty" or "disconnected".
    pub reason: String,
    /// Component sizes of the failing side (empty when the side is empty).
    pub components: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StateCheck {
    pub legal: bool,
    pub failure: Option<SideFailure>,
    pub side_sizes: [usize; 2],
    /// Opposite values on every pair (v,w), (w,v); only for pair thickenings.
    pub opposite_parity: Option<bool>,
}

fn side_verdict(components: [Vec<usize>; 2], sizes: [usize; 2]) -> StateCheck {
    let mut failure = None;
    for (value, comps) in components.into_iter().enumerate() {
        if comps.len() != 1 {
            failure = Some(SideFailure {
                value: value as u8,
                reason: if comps.is_empty() { "empty" } else { "disconnected" }.into(),
                components: comps,
            });
            break;
        }
    }
    StateCheck {
        legal: failure.is_none(),
        failure,
        side_sizes: sizes,
        opposite_parity: None,
    }
}

fn component_sizes(n: usize, member: impl Fn(usize) -> bool, nbrs: impl Fn(usize, &mut Vec<usize>)) -> Vec<usize> {
    let mut seen = vec![false; n];
    let mut sizes = Vec::new();
    let mut queue = VecDeque::new();
    let mut buf = Vec::new();
    for s in 0..n {
        if seen[s] || !member(s) {
            continue;
        }
        seen[s] = true;
        queue.push_back(s);
        let mut size = 0;
        while let Some(v) = queue.pop_front() {
            size += 1;
            buf.clear();
            nbrs(v, &mut buf);
            for &u in &buf {
                if !seen[u] && member(u) {
                    seen[u] = true;
                    queue.push_back(u);
                }
            }
        }
        sizes.push(size);
    }
    sizes
}

/// Both level sets nonempty and inducing connected subgraphs.
pub fn is_legal_state(g: &Graph, s: &State) -> Result<StateCheck> {
    check_len(g.n(), s)?;
    let comps = [false, true].map(|val| {
        component_sizes(g.n(), |v| s.get(v) == val, |v, out| out.extend(g.neighbors(v)))
    });
    let ones = s.count_ones();
    Ok(side_verdict(comps, [g.n() - ones, ones]))
}

/// Anything that can judge states on a fixed vertex set.
pub trait LegalityOracle: Sync {
    fn n(&self) -> usize;
    fn check(&self, s: &State) -> StateCheck;
    fn label(&self, v: usize) -> String;
}

impl LegalityOracle for Graph {
    fn n(&self) -> usize {
        Graph::n(self)
    }

    fn check(&self, s: &State) -> StateCheck {
        is_legal_state(self, s).expect("state length checked by caller")
    }

    fn label(&self, v: usize) -> String {
        Graph::label(self, v).to_string()
    }
}

/// Legality on the 1-skeleton of a thickening, computed through the base.
/// Vertices in one fiber are pairwise adjacent and adjacency only depends on
/// images, so a level set is connected exactly when the base vertices it
/// detects are connected under the common-cube relation.
impl LegalityOracle for Thickening {
    fn n(&self) -> usize {
        self.n_vertices()
    }

    fn check(&self, s: &State) -> StateCheck {
        let base = self.base();
        let comps = [false, true].map(|val| {
            let table = detection_function(self, s, val);
            component_sizes(base.n_vertices(), |v| table.detected[v], |v, out| {
                out.extend_from_slice(base.cube_neighbors(v))
            })
        });
        let ones = s.count_ones();
        let mut out = side_verdict(comps, [self.n_vertices() - ones, ones]);
        if self.is_pair_thickening() {
            out.opposite_parity = Some((0..self.n_vertices()).all(|y| {
                let (v, w) = (self.alpha(y), self.partner(y).unwrap());
                let twin = self.pair_index(w, v).expect("distance is symmetric");
                s.get(y) != s.get(twin)
            }));
        }
        out
    }

    fn label(&self, v: usize) -> String {
        Thickening::label(self, v)
    }
}

/// Moves stored by support, one per vertex, with an echelon basis of their span.
#[derive(Clone, Debug)]
pub struct MoveSystem {
    n: usize,
    moves: Vec<Vec<usize>>,
    basis: Vec<Vec<usize>>,
    reading: Option<&'static str>,
}

/// Echelon basis by lowest-index pivots; rows are sorted supports.
fn sparse_echelon(n: usize, rows: impl IntoIterator<Item = Vec<usize>>) -> Vec<Vec<usize>> {
    let mut by_pivot: HashMap<usize, usize> = HashMap::new();
    let mut basis: Vec<Vec<usize>> = Vec::new();
    for mut r in rows {
        r.sort_unstable();
        r.dedup();
        debug_assert!(r.iter().all(|&i| i < n));
        while let Some(&p) = r.first() {
            match by_pivot.get(&p) {
                Some(&b) => r = sym_diff(&r, &basis[b]),
                None => break,
            }
        }
        if let Some(&p) = r.first() {
            by_pivot.insert(p, basis.len());
            basis.push(r);
        }
    }
    basis
}

fn sym_diff(a: &[usize], b: &[usize]) -> Vec<usize> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::with_capacity(a.len() + b.len());
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

impl MoveSystem {
    /// Validates every move against the graph.
    pub fn new(g: &Graph, moves: Vec<State>) -> Result<Self> {
        if moves.len() != g.n() {
            return Err(Error::InvalidInput(format!("need one move per vertex, got {}", moves.len())));
        }
        for (v, m) in moves.iter().enumerate() {
            if !is_move(g, g.label(v), m)? {
                return Err(Error::InvalidInput(format!("not a move at `{}`", g.label(v))));
            }
        }
        let supports: Vec<Vec<usize>> = moves.iter().map(|m| m.ones().collect()).collect();
        Ok(Self::from_supports(g.n(), supports, None))
    }

    fn from_supports(n: usize, moves: Vec<Vec<usize>>, reading: Option<&'static str>) -> Self {
        let basis = sparse_echelon(n, moves.iter().cloned());
        MoveSystem { n, moves, basis, reading }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn move_at(&self, v: usize) -> State {
        BitVec::from_indices(self.n, self.moves[v].iter().copied())
    }

    pub fn support(&self, v: usize) -> &[usize] {
        &self.moves[v]
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<usize>] {
        &self.basis
    }

    pub fn reading(&self) -> Option<&'static str> {
        self.reading
    }

    /// `s` plus the basis rows selected by `coeffs`.
    pub fn apply(&self, s: &State, coeffs: impl IntoIterator<Item = usize>) -> State {
        let mut out = s.clone();
        for i in coeffs {
            for &j in &self.basis[i] {
                out.flip(j);
            }
        }
        out
    }

    /// Whether `m` lies in the span of the moves.
    pub fn in_span(&self, m: &State) -> bool {
        let mut r: Vec<usize> = m.ones().collect();
        let by_pivot: HashMap<usize, usize> = self.basis.iter().enumerate().map(|(i, b)| (b[0], i)).collect();
        while let Some(&p) = r.first() {
            match by_pivot.get(&p) {
                Some(&b) => r = sym_diff(&r, &self.basis[b]),
                None => return false,
            }
        }
        true
    }
}

pub fn move_group_basis(system: &MoveSystem) -> (&[Vec<usize>], usize) {
    (system.basis(), system.rank())
}

fn require_pair(th: &Thickening) -> Result<()> {
    if !th.is_pair_thickening() {
        return Err(Error::InvalidInput("canonical states and moves need a pair thickening".into()));
    }
    Ok(())
}

/// Value 1 at (v,w) exactly when v precedes w in the base's vertex order.
pub fn canonical_state(th: &Thickening) -> Result<State> {
    require_pair(th)?;
    Ok(BitVec::from_indices(
        th.n_vertices(),
        (0..th.n_vertices()).filter(|&y| th.alpha(y) < th.partner(y).unwrap()),
    ))
}

pub fn canonical_moves(th: &Thickening) -> Result<MoveSystem> {
    require_pair(th)?;
    let moves = (0..th.n_vertices())
        .map(|y| {
            let twin = th.pair_index(th.partner(y).unwrap(), th.alpha(y)).unwrap();
            let mut m = vec![y, twin];
            m.sort_unstable();
            m
        })
        .collect();
    Ok(MoveSystem::from_supports(th.n_vertices(), moves, Some(PAIR_MOVE_READING)))
}

/// Checks the move axioms of a system against a thickening's adjacency.
pub fn moves_valid_on(th: &Thickening, system: &MoveSystem) -> bool {
    (0..th.n_vertices()).all(|y| {
        let sup = system.support(y);
        sup.contains(&y) && sup.iter().all(|&z| z == y || !th.adjacent(y, z))
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrbitMode {
    Exhaustive,
    Sampled(usize),
    /// Exhaustive when the orbit fits the bound, otherwise sampled.
    Auto(usize),
}

#[derive(Clone, Copy, Debug)]
pub struct OrbitConfig {
    pub mode: OrbitMode,
    pub exhaustive_bound: u64,
    pub seed: u64,
}

impl Default for OrbitConfig {
    fn default() -> Self {
        OrbitConfig {
            mode: OrbitMode::Auto(1000),
            exhaustive_bound: DEFAULT_EXHAUSTIVE_BOUND,
            seed: DEFAULT_SEED,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct OrbitWitness {
    /// Index of the sampled draw, reproducible from the seed.
    pub draw: Option<u64>,
    /// Basis rows added to the starting state (omitted when long).
    pub combination: Vec<usize>,
    /// Full state as a bit string, when short enough to print.
    pub state: Option<String>,
    pub failure: Option<SideFailure>,
    pub opposite_parity: Option<bool>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct ConnectivityStats {
    pub min_zero_side: usize,
    pub min_one_side: usize,
    pub parity_violations: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct LegalityReport {
    pub mode: String,
    pub rank: usize,
    pub orbit: u64,
    pub verdict: String,
    pub witnesses: Vec<OrbitWitness>,
    pub seed: Option<u64>,
    pub illegal_count: u64,
    pub connectivity: ConnectivityStats,
}

impl LegalityReport {
    /// An exhaustive pass with no illegal state.
    pub fn is_authoritative_legal(&self) -> bool {
        self.mode == "exhaustive" && self.illegal_count == 0
    }

    pub fn found_illegal(&self) -> bool {
        self.illegal_count > 0
    }
}

const MAX_WITNESSES: usize = 5;
const PRINTABLE_STATE: usize = 4096;
const PRINTABLE_COMBINATION: usize = 256;

#[derive(Default)]
struct Tally {
    checked: u64,
    illegal: u64,
    witnesses: Vec<OrbitWitness>,
    min_sides: [usize; 2],
    parity_violations: usize,
}

impl Tally {
    fn new() -> Self {
        Tally { min_sides: [usize::MAX; 2], ..Default::default() }
    }

    fn record(&mut self, s: &State, draw: Option<u64>, combo: impl FnOnce() -> Vec<usize>, c: StateCheck) {
        self.checked += 1;
        self.min_sides[0] = self.min_sides[0].min(c.side_sizes[0]);
        self.min_sides[1] = self.min_sides[1].min(c.side_sizes[1]);
        let parity_bad = c.opposite_parity == Some(false);
        if parity_bad {
            self.parity_violations += 1;
        }
        if !c.legal {
            self.illegal += 1;
        }
        if (!c.legal || parity_bad) && self.witnesses.len() < MAX_WITNESSES {
            let combination = combo();
            self.witnesses.push(OrbitWitness {
                draw,
                combination: if combination.len() <= PRINTABLE_COMBINATION { combination } else { Vec::new() },
                state: (s.len() <= PRINTABLE_STATE).then(|| s.to_bit_string()),
                failure: c.failure,
                opposite_parity: c.opposite_parity,
            });
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.checked += other.checked;
        self.illegal += other.illegal;
        for w in other.witnesses {
            if self.witnesses.len() < MAX_WITNESSES {
                self.witnesses.push(w);
            }
        }
        self.min_sides[0] = self.min_sides[0].min(other.min_sides[0]);
        self.min_sides[1] = self.min_sides[1].min(other.min_sides[1]);
        self.parity_violations += other.parity_violations;
        self
    }
}

fn gray(i: u64) -> u64 {
    i ^ (i >> 1)
}

fn bits_of(x: u64) -> Vec<usize> {
    (0..64).filter(|b| x >> b & 1 == 1).collect()
}

const CHUNK: u64 = 1 << 10;

/// Checks every state of the orbit `M + s`, or a seeded sample of it.
pub fn check_legal_orbit(
    oracle: &dyn LegalityOracle,
    system: &MoveSystem,
    start: &State,
    config: &OrbitConfig,
) -> Result<LegalityReport> {
    check_len(oracle.n(), start)?;
    if system.n() != oracle.n() {
        return Err(Error::StateLength { expected: oracle.n(), got: system.n() });
    }
    let rank = system.rank();
    let orbit_size = if rank < 64 { Some(1u64 << rank) } else { None };
    let fits = orbit_size.is_some_and(|o| o <= config.exhaustive_bound);
    let samples = match config.mode {
        OrbitMode::Exhaustive if !fits => {
            return Err(Error::BudgetExceeded {
                what: "orbit states",
                needed: 1u128.checked_shl(rank as u32).unwrap_or(u128::MAX),
                budget: config.exhaustive_bound as u128,
            })
        }
        OrbitMode::Exhaustive => None,
        OrbitMode::Auto(_) if fits => None,
        OrbitMode::Auto(n) | OrbitMode::Sampled(n) => Some(n),
    };

    let tally = match samples {
        None => {
            let total = orbit_size.unwrap();
            let chunks = total.div_ceil(CHUNK);
            (0..chunks)
                .into_par_iter()
                .map(|c| {
                    let lo = c * CHUNK;
                    let hi = (lo + CHUNK).min(total);
                    let mut t = Tally::new();
                    let mut s = system.apply(start, bits_of(gray(lo)));
                    for i in lo..hi {
                        if i > lo {
                            let bit = (gray(i) ^ gray(i - 1)).trailing_zeros() as usize;
                            for &j in &system.basis()[bit] {
                                s.flip(j);
                            }
                        }
                        let check = oracle.check(&s);
                        t.record(&s, None, || bits_of(gray(i)), check);
                    }
                    t
                })
                .reduce(Tally::new, Tally::merge)
        }
        Some(n) => (0..n as u64)
            .into_par_iter()
            .map(|draw| {
                // One stream per draw keeps samples reproducible and independent of scheduling.
                let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
                rng.set_stream(draw);
                let combo: Vec<usize> = (0..rank).filter(|_| rng.gen_bool(0.5)).collect();
                let mut t = Tally::new();
                let s = system.apply(start, combo.iter().copied());
                let check = oracle.check(&s);
                t.record(&s, Some(draw), || combo, check);
                t
            })
            .reduce(Tally::new, Tally::merge),
    };

    let (mode, verdict) = match samples {
        None => (
            "exhaustive".to_string(),
            if tally.illegal == 0 { "legal".to_string() } else { "illegal".to_string() },
        ),
        Some(n) => (
            "sampled".to_string(),
            if tally.illegal == 0 {
                format!("no counterexample in {n} draws")
            } else {
                "illegal".to_string()
            },
        ),
    };
    Ok(LegalityReport {
        mode,
        rank,
        orbit: tally.checked,
        verdict,
        witnesses: tally.witnesses,
        seed: samples.map(|_| config.seed),
        illegal_count: tally.illegal,
        connectivity: ConnectivityStats {
            min_zero_side: tally.min_sides[0],
            min_one_side: tally.min_sides[1],
            parity_violations: tally.parity_violations,
        },
    })
}

/// For each base vertex, whether some vertex of its fiber carries `value`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DetectionTable {
    pub value: bool,
    pub detected: Vec<bool>,
}

impl DetectionTable {
    pub fn undetected(&self) -> Vec<usize> {
        (0..self.detected.len()).filter(|&v| !self.detected[v]).collect()
    }

    pub fn labeled(&self, base: &CubeComplex) -> Vec<(String, char)> {
        self.detected
            .iter()
            .enumerate()
            .map(|(v, &d)| (base.label(v).to_string(), if d { 'Y' } else { 'N' }))
            .collect()
    }
}

pub fn detection_function(th: &Thickening, s: &State, value: bool) -> DetectionTable {
    DetectionTable {
        value,
        detected: (0..th.base().n_vertices())
            .map(|v| th.fiber(v).iter().any(|&y| s.get(y) == value))
            .collect(),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Blockade {
    pub undetected: Vec<String>,
    pub cube: Vec<String>,
    /// Nothing was undetected, so the cube is an arbitrary vertex.
    pub vacuous: bool,
}

/// A cube containing every base vertex whose fiber misses `value`.
pub fn blockade_cube(th: &Thickening, s: &State, value: bool) -> Result<Blockade> {
    check_len(th.n_vertices(), s)?;
    let base = th.base();
    let table = detection_function(th, s, value);
    let n_set = table.undetected();
    if n_set.is_empty() {
        return Ok(Blockade {
            undetected: Vec::new(),
            cube: vec![base.label(0).to_string()],
            vacuous: true,
        });
    }
    for (i, &a) in n_set.iter().enumerate() {
        for &b in &n_set[i + 1..] {
            if base.cube_neighbors(a).binary_search(&b).is_err() {
                return Err(Error::HypothesisViolation(format!(
                    "undetected vertices `{}` and `{}` share no cube",
                    base.label(a),
                    base.label(b)
                )));
            }
        }
    }
    let cube = base.minimal_cube(&n_set).map_err(|e| {
        Error::HypothesisViolation(format!("undetected set {:?} lies in no cube: {e}", base.labels_of(&n_set)))
    })?;
    let verts = base.vertex_set(cube);
    debug_assert!((0..base.n_vertices()).all(|v| table.detected[v] || verts.contains(&v)));
    Ok(Blockade {
        undetected: base.labels_of(&n_set),
        cube: base.labels_of(verts),
        vacuous: false,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct HypothesisCertificate {
    pub granted: bool,
    pub five_large: FiveLargeSummary,
    pub no_disconnecting_cubes: CubeCheck,
    pub no_isolated_corners: CubeCheck,
    pub move_reading: &'static str,
    pub refusal: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FiveLargeSummary {
    pub locally_5_large: bool,
    pub certified: bool,
    pub inconclusive_neighborhoods: usize,
    /// Neighborhoods whose residual carries nonzero homology, so certainly not contractible.
    pub non_contractible_neighborhoods: usize,
    pub link_witness: Option<(String, Vec<String>)>,
    pub first_obstruction: Option<(String, String)>,
}

impl From<&FiveLargeCertificate> for FiveLargeSummary {
    fn from(c: &FiveLargeCertificate) -> Self {
        FiveLargeSummary {
            locally_5_large: c.locally_5_large,
            certified: c.certified,
            inconclusive_neighborhoods: c.inconclusive_count(),
            non_contractible_neighborhoods: c.neighborhoods.iter().filter(|n| n.obstruction.is_some()).count(),
            link_witness: c.link_witness.clone(),
            first_obstruction: c
                .neighborhoods
                .iter()
                .find(|n| n.obstruction.is_some() || n.verdict != crate::collapse::CollapseVerdict::Yes)
                .map(|n| (n.vertex.clone(), n.obstruction.clone().unwrap_or_else(|| "inconclusive".into()))),
        }
    }
}

/// Grants legality of the canonical state and moves when the base passes the
/// 5-largeness certificate and both cube checks.
pub fn certify_legal_by_hypotheses(
    x: &CubeComplex,
    config: &CollapseConfig,
    budget: usize,
) -> Result<HypothesisCertificate> {
    let five = x.check_5_large(config, budget)?;
    Ok(certificate_from_parts(
        FiveLargeSummary::from(&five),
        x.check_no_disconnecting_cubes()?,
        x.check_no_isolated_corners(),
    ))
}

pub fn certificate_from_parts(
    five_large: FiveLargeSummary,
    no_disconnecting_cubes: CubeCheck,
    no_isolated_corners: CubeCheck,
) -> HypothesisCertificate {
    let refusal = if !five_large.locally_5_large {
        let (v, w) = five_large.link_witness.clone().unwrap_or_default();
        Some(format!("not 5-large: link of `{v}` fails at {w:?}"))
    } else if five_large.non_contractible_neighborhoods > 0 {
        let (v, why) = five_large.first_obstruction.clone().unwrap_or_default();
        Some(format!(
            "not 5-large: {} cubical 2-neighborhoods are not contractible, first at `{v}` ({why})",
            five_large.non_contractible_neighborhoods
        ))
    } else if !five_large.certified {
        let (v, why) = five_large.first_obstruction.clone().unwrap_or_default();
        Some(format!(
            "5-largeness inconclusive: {} neighborhoods not shown collapsible, first at `{v}` ({why})",
            five_large.inconclusive_neighborhoods
        ))
    } else if !no_disconnecting_cubes.passed {
        Some(format!("removing cube {:?} disconnects", no_disconnecting_cubes.witness_cube))
    } else if !no_isolated_corners.passed {
        Some(format!(
            "corner {:?} of cube {:?} is isolated",
            no_isolated_corners.witness_vertex, no_isolated_corners.witness_cube
        ))
    } else {
        None
    };
    HypothesisCertificate {
        granted: refusal.is_none(),
        five_large,
        no_disconnecting_cubes,
        no_isolated_corners,
        move_reading: PAIR_MOVE_READING,
        refusal,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::thickening::{build_pair_thickening, ThickenOptions};
    use std::sync::Arc;

    fn path3() -> Graph {
        Graph::new(vec!["a".into(), "b".into(), "c".into()], &[("a", "b"), ("b", "c")]).unwrap()
    }

    fn pair(k: usize) -> Thickening {
        build_pair_thickening(Arc::new(CubeComplex::from_graph(&Graph::cycle(k))), &ThickenOptions::default()).unwrap()
    }

    #[test]
    fn path_states() {
        let g = path3();
        let c = is_legal_state(&g, &BitVec::from_bools(&[false, true, false])).unwrap();
        assert!(!c.legal);
        assert_eq!(c.failure.unwrap().reason, "disconnected");
        assert!(is_legal_state(&g, &BitVec::from_bools(&[false, false, true])).unwrap().legal);
    }

    #[test]
    fn move_axioms() {
        let edgeless = Graph::new(vec!["a".into(), "b".into()], &[] as &[(&str, &str)]).unwrap();
        assert!(is_move(&edgeless, "a", &BitVec::from_bools(&[true, false])).unwrap());
        assert!(!is_move(&path3(), "a", &BitVec::from_bools(&[true, true, false])).unwrap());
        assert!(is_move(&path3(), "z", &BitVec::zeros(3)).is_err());
    }

    #[test]
    fn canonical_on_pentagon() {
        let t = pair(5);
        let s = canonical_state(&t).unwrap();
        assert!(s.get(t.index_of("x1|x3").unwrap()));
        assert!(!s.get(t.index_of("x3|x1").unwrap()));
        assert_eq!(s.count_ones(), 5);
        let m = canonical_moves(&t).unwrap();
        assert_eq!(m.rank(), 5);
        assert!(moves_valid_on(&t, &m));
        let (a, b) = (t.index_of("x1|x3").unwrap(), t.index_of("x3|x1").unwrap());
        assert_eq!(m.support(a), m.support(b));
        assert_eq!(m.support(a), &[a.min(b), a.max(b)]);
        let g = t.one_skeleton().unwrap();
        for y in 0..t.n_vertices() {
            assert!(is_move(g, &t.label(y), &m.move_at(y)).unwrap());
        }
        assert!(is_legal_state(g, &s).unwrap().legal);
    }

    #[test]
    fn canonical_orbits_are_legal() {
        for (k, rank) in [(5, 5), (6, 9)] {
            let t = pair(k);
            let m = canonical_moves(&t).unwrap();
            assert_eq!(m.rank(), rank);
            let s = canonical_state(&t).unwrap();
            let cfg = OrbitConfig { mode: OrbitMode::Exhaustive, ..Default::default() };
            let r = check_legal_orbit(t.one_skeleton().unwrap(), &m, &s, &cfg).unwrap();
            assert_eq!(r.orbit, 1 << rank);
            assert_eq!(r.verdict, "legal");
            let r2 = check_legal_orbit(&t, &m, &s, &cfg).unwrap();
            assert_eq!(r2.illegal_count, 0);
            assert_eq!(r2.connectivity.parity_violations, 0);
        }
    }

    #[test]
    fn base_reduction_agrees_with_graph() {
        let t = pair(6);
        let g = t.one_skeleton().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..300 {
            let s = BitVec::from_bools(&(0..t.n_vertices()).map(|_| rng.gen_bool(0.5)).collect::<Vec<_>>());
            assert_eq!(g.check(&s).legal, LegalityOracle::check(&t, &s).legal);
        }
    }

    #[test]
    fn rank_one_and_illegal_witness() {
        let g = path3();
        let all = BitVec::from_bools(&[true, false, true]);
        let sys = MoveSystem::from_supports(3, vec![all.ones().collect(); 3], None);
        assert_eq!(sys.rank(), 1);
        let ind = MoveSystem::new(&g, (0..3).map(|i| BitVec::from_indices(3, [i])).collect()).unwrap();
        let cfg = OrbitConfig { mode: OrbitMode::Exhaustive, ..Default::default() };
        let r = check_legal_orbit(&g, &ind, &BitVec::zeros(3), &cfg).unwrap();
        assert_eq!(r.verdict, "illegal");
        assert_eq!(r.witnesses[0].state.as_deref(), Some("000"));
        assert_eq!(r.witnesses[0].failure.as_ref().unwrap().reason, "empty");
    }

    #[test]
    fn sampled_mode_is_seeded() {
        let t = pair(7);
        let m = canonical_moves(&t).unwrap();
        let s = canonical_state(&t).unwrap();
        let cfg = OrbitConfig { mode: OrbitMode::Sampled(50), ..Default::default() };
        let r = check_legal_orbit(&t, &m, &s, &cfg).unwrap();
        assert_eq!(r.mode, "sampled");
        assert_eq!(r.orbit, 50);
        assert_eq!(r.seed, Some(DEFAULT_SEED));
        assert_eq!(r.verdict, "no counterexample in 50 draws");
    }

    #[test]
    fn detection_and_blockade() {
        let t = pair(5);
        let base = t.base();
        let s = canonical_state(&t).unwrap();
        let x5 = base.index_of("x5").unwrap();
        let d1 = detection_function(&t, &s, true);
        assert!(!d1.detected[x5]);
        let d0 = detection_function(&t, &s, false);
        assert!(!d0.detected[base.index_of("x1").unwrap()]);
        assert!(d0.detected.iter().zip(&d1.detected).all(|(a, b)| *a || *b));
        let b = blockade_cube(&t, &s, true).unwrap();
        // x4's fiber {x4|x1, x4|x2} also carries only zeros.
        assert_eq!(b.undetected, vec!["x4", "x5"]);
        assert_eq!(b.cube, vec!["x4", "x5"]);
        assert_eq!(blockade_cube(&t, &s, false).unwrap().cube, vec!["x1", "x2"]);
        let m = canonical_moves(&t).unwrap();
        let y = t.index_of("x5|x2").unwrap();
        let mut moved = s.clone();
        for &j in m.support(y) {
            moved.flip(j);
        }
        assert!(detection_function(&t, &moved, true).detected[x5]);
    }

    #[test]
    fn hypotheses_on_cycles() {
        let c5 = CubeComplex::from_graph(&Graph::cycle(5));
        let cert = certify_legal_by_hypotheses(&c5, &CollapseConfig::default(), 10_000).unwrap();
        assert!(cert.granted, "{:?}", cert.refusal);
        let c4 = CubeComplex::from_graph(&Graph::cycle(4));
        let cert = certify_legal_by_hypotheses(&c4, &CollapseConfig::default(), 10_000).unwrap();
        assert!(!cert.granted);
    }
}
