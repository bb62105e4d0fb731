//! The iteration driver: verify a cube complex, thicken it, certify the move
//! system, compute the dimension of the new group and build the next quotient.
//!
//! Every step reports a status. Anything that was sampled, asserted or
//! skipped because of a budget is labeled as such and never counts as
//! certified.

use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::collapse::CollapseConfig;
use crate::cubical::{CubeCheck, CubeComplex};
use crate::davis::{
    level2_quotient, quotient_f_vector, two_neighborhood_embedding_check, verify_quotient_properties, EmbeddingCheck,
    QuotientReport, Racg, MAX_QUOTIENT_GENERATORS,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::homology::{vcd_racg, Coeffs};
use crate::moves::{
    canonical_moves, canonical_state, certificate_from_parts, check_legal_orbit, FiveLargeSummary,
    HypothesisCertificate, LegalityReport, OrbitConfig, OrbitMode, DEFAULT_EXHAUSTIVE_BOUND, DEFAULT_SEED,
};
use crate::simplicial::DEFAULT_CELL_BUDGET;
use crate::thickening::{LocalScan, ThickenOptions, Thickening, DEFAULT_IMPLICIT_THRESHOLD};

pub const DEFAULT_SAMPLES: usize = 1000;
pub const DEFAULT_LOCAL_SCANS: usize = 64;

#[derive(Clone, Debug)]
pub enum Start {
    Cycle(usize),
    Complex { name: String, complex: CubeComplex },
}

#[derive(Clone, Debug)]
pub struct PipelineConfig {
    pub start: Start,
    pub iterations: usize,
    pub cell_budget: usize,
    /// Largest orbit enumerated exhaustively.
    pub orbit_budget: u64,
    /// Orbit draws when the orbit is too large to enumerate.
    pub samples: usize,
    /// Vertices scanned for local 5-largeness on an implicit thickening.
    pub local_scans: usize,
    pub seed: u64,
    pub coeffs: Coeffs,
    pub implicit_threshold: usize,
    pub collapse: CollapseConfig,
}

impl PipelineConfig {
    pub fn cycle(k: usize) -> Self {
        PipelineConfig {
            start: Start::Cycle(k),
            iterations: 1,
            cell_budget: DEFAULT_CELL_BUDGET,
            orbit_budget: DEFAULT_EXHAUSTIVE_BOUND,
            samples: DEFAULT_SAMPLES,
            local_scans: DEFAULT_LOCAL_SCANS,
            seed: DEFAULT_SEED,
            coeffs: Coeffs::Z,
            implicit_threshold: DEFAULT_IMPLICIT_THRESHOLD,
            collapse: CollapseConfig::default(),
        }
    }

    pub fn from_complex(name: impl Into<String>, complex: CubeComplex) -> Self {
        PipelineConfig {
            start: Start::Complex { name: name.into(), complex },
            ..Self::cycle(5)
        }
    }

    pub fn validate(&self) -> Result<()> {
        if let Start::Cycle(k) = self.start {
            if k < 5 {
                return Err(Error::InvalidInput(format!("cycle length must be at least 5, got {k}")));
            }
        }
        let positive = [
            ("iterations", self.iterations as u64),
            ("cell budget", self.cell_budget as u64),
            ("orbit budget", self.orbit_budget),
            ("samples", self.samples as u64),
            ("local scans", self.local_scans as u64),
        ];
        for (what, v) in positive {
            if v == 0 {
                return Err(Error::InvalidInput(format!("{what} must be positive")));
            }
        }
        Ok(())
    }

    fn start_complex(&self) -> Result<(String, CubeComplex)> {
        match &self.start {
            Start::Cycle(k) => Ok((format!("cycle of length {k}"), cycle_complex(*k)?)),
            Start::Complex { name, complex } => Ok((name.clone(), complex.clone())),
        }
    }
}

/// The cycle of length `k` as a 1-dimensional cube complex.
pub fn cycle_complex(k: usize) -> Result<CubeComplex> {
    if k < 5 {
        return Err(Error::InvalidInput(format!("cycle length must be at least 5, got {k}")));
    }
    Ok(CubeComplex::from_graph(&Graph::cycle(k)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Certified,
    Inconclusive,
    Failed,
    Sampled,
    Asserted,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConfigEcho {
    pub start: String,
    pub iterations: usize,
    pub cell_budget: usize,
    pub orbit_budget: u64,
    pub samples: usize,
    pub local_scans: usize,
    pub seed: u64,
    pub coeffs: Coeffs,
    pub implicit_threshold: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct InputRecord {
    pub level: usize,
    pub source: String,
    pub vertices: usize,
    pub f_vector: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PropertiesRecord {
    pub status: Status,
    pub label: String,
    /// Taken over from the previous iteration's quotient report.
    pub inherited: bool,
    pub five_large: FiveLargeSummary,
    pub no_isolated_corners: CubeCheck,
    pub no_disconnecting_cubes: CubeCheck,
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanSummary {
    pub seed: u64,
    pub scanned: usize,
    pub link_failures: usize,
    pub four_cycles: usize,
    pub first_failure: Option<LocalScan>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ThickeningRecord {
    pub vertices: usize,
    pub edges: u64,
    pub mode: &'static str,
    pub f_vector: Option<Vec<usize>>,
    pub flag_audit: Option<bool>,
    pub homotopy_audit: Option<bool>,
    pub five_large: Status,
    pub label: String,
    pub chordless_four_cycle: Option<Vec<String>>,
    pub scans: Option<ScanSummary>,
}

#[derive(Clone, Debug, Serialize)]
pub struct LegalityRecord {
    pub status: Status,
    pub label: String,
    pub hypotheses: HypothesisCertificate,
    pub orbit: LegalityReport,
}

#[derive(Clone, Debug, Serialize)]
pub struct VcdRecord {
    pub status: Status,
    pub label: String,
    pub value: usize,
    pub predicted: usize,
    pub witness: Option<Vec<String>>,
    pub coeffs: Coeffs,
    pub simplices_swept: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct QuotientRecord {
    pub status: Status,
    pub label: String,
    pub generators: usize,
    pub predicted_f_vector: Option<Vec<u128>>,
    pub embedding: Option<EmbeddingCheck>,
    pub properties: Option<QuotientReport>,
}

#[derive(Clone, Debug, Serialize)]
pub struct IterationRecord {
    pub input: InputRecord,
    pub lazy: bool,
    pub properties: PropertiesRecord,
    pub thickening: Option<ThickeningRecord>,
    pub legality: Option<LegalityRecord>,
    pub vcd: Option<VcdRecord>,
    pub quotient: Option<QuotientRecord>,
    /// The new group is hyperbolic, its move system legal and its dimension computed.
    pub group_certified: bool,
    /// The next complex passed every check needed to iterate again.
    pub handoff_certified: bool,
    pub fully_certified: bool,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Halt {
    pub level: usize,
    pub step: &'static str,
    pub reason: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CertificateChain {
    pub config: ConfigEcho,
    pub iterations: Vec<IterationRecord>,
    pub halted: Option<Halt>,
    /// Highest level whose group was certified, if any.
    pub group_certified_through: Option<usize>,
    pub handoff: String,
}

impl CertificateChain {
    /// 0 when nothing halted and every group was certified, 2 otherwise.
    pub fn exit_status(&self) -> i32 {
        if self.halted.is_none() && !self.iterations.is_empty() && self.iterations.iter().all(|r| r.group_certified) {
            0
        } else {
            2
        }
    }
}

fn properties_record(
    five_large: FiveLargeSummary,
    no_isolated_corners: CubeCheck,
    no_disconnecting_cubes: CubeCheck,
    inherited: bool,
) -> PropertiesRecord {
    let definite = !five_large.locally_5_large
        || five_large.non_contractible_neighborhoods > 0
        || !no_isolated_corners.passed
        || !no_disconnecting_cubes.passed;
    let (status, label) = if definite {
        let mut why = Vec::new();
        if !five_large.locally_5_large {
            why.push("a vertex link is not 5-large".to_string());
        }
        if five_large.non_contractible_neighborhoods > 0 {
            why.push(format!(
                "{} cubical 2-neighborhoods have nonzero homology",
                five_large.non_contractible_neighborhoods
            ));
        }
        if !no_isolated_corners.passed {
            why.push("isolated corners".into());
        }
        if !no_disconnecting_cubes.passed {
            why.push("a disconnecting cube".into());
        }
        (Status::Failed, format!("failed: {}", why.join("; ")))
    } else if five_large.certified {
        (Status::Certified, "certified".to_string())
    } else {
        (
            Status::Inconclusive,
            format!(
                "inconclusive: {} neighborhoods not shown collapsible",
                five_large.inconclusive_neighborhoods
            ),
        )
    };
    PropertiesRecord {
        status,
        label,
        inherited,
        five_large,
        no_isolated_corners,
        no_disconnecting_cubes,
    }
}

fn verify_input(x: &CubeComplex, cfg: &PipelineConfig) -> Result<PropertiesRecord> {
    let five = x.check_5_large(&cfg.collapse, cfg.cell_budget)?;
    Ok(properties_record(
        FiveLargeSummary::from(&five),
        x.check_no_isolated_corners(),
        x.check_no_disconnecting_cubes()?,
        false,
    ))
}

/// Edge count from the base: fibers are cliques and fibers over distinct
/// vertices sharing a cube are completely joined.
fn thickening_edges(th: &Thickening) -> u64 {
    let x = th.base();
    (0..x.n_vertices())
        .map(|v| {
            let f = th.fiber(v).len() as u64;
            let across: u64 = x
                .cube_neighbors(v)
                .iter()
                .filter(|&&u| u > v)
                .map(|&u| th.fiber(u).len() as u64)
                .sum();
            f * f.saturating_sub(1) / 2 + f * across
        })
        .sum()
}

fn audit_thickening(th: &Thickening, cfg: &PipelineConfig, level: usize) -> Result<ThickeningRecord> {
    let edges = thickening_edges(th);
    if th.is_implicit() {
        let n = th.n_vertices();
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ level as u64);
        let mut picks = rand::seq::index::sample(&mut rng, n, cfg.local_scans.min(n)).into_vec();
        picks.sort_unstable();
        let scans: Vec<LocalScan> = picks.par_iter().map(|&y| th.local_scan(y)).collect();
        let link_failures = scans.iter().filter(|s| !s.link_ok()).count();
        let four_cycles = scans.iter().filter(|s| s.four_cycle.is_some()).count();
        let first_failure = scans.iter().find(|s| !s.link_ok() || s.four_cycle.is_some()).cloned();
        let (five_large, label) = if first_failure.is_some() {
            (
                Status::Failed,
                format!(
                    "violated: sampled local scans found {four_cycles} chordless 4-cycles and {link_failures} bad links in {} vertices",
                    scans.len()
                ),
            )
        } else {
            (
                Status::Sampled,
                format!("sampled: no obstruction in local scans of {} of {n} vertices", scans.len()),
            )
        };
        return Ok(ThickeningRecord {
            vertices: n,
            edges,
            mode: "implicit",
            f_vector: None,
            flag_audit: None,
            homotopy_audit: None,
            five_large,
            label,
            chordless_four_cycle: first_failure.as_ref().and_then(|s| s.four_cycle.clone()),
            scans: Some(ScanSummary {
                seed: cfg.seed ^ level as u64,
                scanned: scans.len(),
                link_failures,
                four_cycles,
                first_failure,
            }),
        });
    }
    let k = th.complex()?;
    let large = k.is_k_large(5, cfg.cell_budget)?;
    let square = k.one_skeleton().chordless_cycle(4).map(|c| k.labels_of(&c));
    let (five_large, label) = if large.is_large {
        (Status::Certified, "certified: flag with no chordless 4-cycle".to_string())
    } else {
        (Status::Failed, "violated: the 1-skeleton has a chordless 4-cycle or the complex is not flag".to_string())
    };
    Ok(ThickeningRecord {
        vertices: th.n_vertices(),
        edges,
        mode: "explicit",
        f_vector: Some(k.f_vector(cfg.cell_budget)?),
        flag_audit: Some(th.flag_audit()?),
        homotopy_audit: Some(th.homotopy_audit(cfg.cell_budget)?),
        five_large,
        label,
        chordless_four_cycle: square,
        scans: None,
    })
}

fn certify_legality(th: &Thickening, props: &PropertiesRecord, cfg: &PipelineConfig) -> Result<LegalityRecord> {
    let hypotheses = certificate_from_parts(
        props.five_large.clone(),
        props.no_disconnecting_cubes.clone(),
        props.no_isolated_corners.clone(),
    );
    let system = canonical_moves(th)?;
    let start = canonical_state(th)?;
    let orbit_cfg = OrbitConfig {
        mode: OrbitMode::Auto(cfg.samples),
        exhaustive_bound: cfg.orbit_budget,
        seed: cfg.seed,
    };
    let orbit = check_legal_orbit(th, &system, &start, &orbit_cfg)?;
    let (status, label) = if orbit.found_illegal() {
        (Status::Failed, format!("illegal: {} states of the orbit fail", orbit.illegal_count))
    } else if orbit.is_authoritative_legal() {
        (Status::Certified, format!("certified: all {} orbit states legal by enumeration", orbit.orbit))
    } else if hypotheses.granted {
        (
            Status::Certified,
            format!("certified by hypotheses; {} sampled states also legal", orbit.orbit),
        )
    } else {
        (
            Status::Sampled,
            format!(
                "sampled only: no illegal state in {} draws; hypothesis certificate refused",
                orbit.orbit
            ),
        )
    };
    Ok(LegalityRecord {
        status,
        label,
        hypotheses,
        orbit,
    })
}

fn compute_vcd(th: &Thickening, level: usize, cfg: &PipelineConfig) -> Result<VcdRecord> {
    let predicted = level + 1;
    let asserted = |why: &str| VcdRecord {
        status: Status::Asserted,
        label: format!("asserted = {predicted}, not computed ({why})"),
        value: predicted,
        predicted,
        witness: None,
        coeffs: cfg.coeffs,
        simplices_swept: None,
    };
    if th.is_implicit() {
        return Ok(asserted("thickening is implicit"));
    }
    match vcd_racg(th.complex()?, cfg.coeffs, cfg.cell_budget) {
        Ok(r) => {
            let (status, label) = if r.vcd == predicted {
                (Status::Certified, format!("computed = {}", r.vcd))
            } else {
                (Status::Failed, format!("computed = {}, predicted {predicted}", r.vcd))
            };
            Ok(VcdRecord {
                status,
                label,
                value: r.vcd,
                predicted,
                witness: Some(r.witness),
                coeffs: r.coeffs,
                simplices_swept: Some(r.simplices_swept),
            })
        }
        Err(Error::BudgetExceeded { .. }) => Ok(asserted("over the cell budget")),
        Err(e) => Err(e),
    }
}

fn build_quotient(
    th: &Thickening,
    expected_cd: Option<usize>,
    cfg: &PipelineConfig,
) -> Result<(QuotientRecord, Option<CubeComplex>)> {
    let generators = th.n_vertices();
    let skipped = |label: String, predicted| QuotientRecord {
        status: Status::Skipped,
        label,
        generators,
        predicted_f_vector: predicted,
        embedding: None,
        properties: None,
    };
    let graph = match th.one_skeleton() {
        Some(g) if generators <= MAX_QUOTIENT_GENERATORS => g.clone(),
        _ => {
            return Ok((
                skipped(format!("skipped: 2^{generators} vertices is out of reach"), None),
                None,
            ))
        }
    };
    let racg = Racg::new(graph, cfg.cell_budget)?;
    let predicted = quotient_f_vector(&racg);
    let cells: u128 = predicted.iter().sum();
    if cells > cfg.cell_budget as u128 {
        return Ok((
            skipped(format!("skipped: {cells} cells exceeds the cell budget"), Some(predicted)),
            None,
        ));
    }
    let x = level2_quotient(&racg, cfg.cell_budget)?;
    let embedding = two_neighborhood_embedding_check(&racg);
    let report = verify_quotient_properties(&racg, &x, expected_cd, &cfg.collapse, cfg.cell_budget)?;
    let definite = !report.f_vector_matches
        || !report.links_match
        || !report.five_large.locally_5_large
        || report.five_large.non_contractible_neighborhoods > 0
        || !report.no_isolated_corners.passed
        || !report.no_disconnecting_cubes.passed
        || expected_cd.is_some_and(|e| e != report.cd)
        || !embedding.injective;
    let (status, label) = if report.passed && embedding.injective {
        (Status::Certified, "certified".to_string())
    } else if definite {
        let mut why = report.failures.clone();
        if !embedding.injective {
            why.push("2-neighborhoods do not embed under reduction mod 2".into());
        }
        (Status::Failed, format!("failed: {}", why.join("; ")))
    } else {
        (Status::Inconclusive, format!("inconclusive: {}", report.failures.join("; ")))
    };
    Ok((
        QuotientRecord {
            status,
            label,
            generators,
            predicted_f_vector: Some(predicted),
            embedding: Some(embedding),
            properties: Some(report),
        },
        Some(x),
    ))
}

/// Outcome of one iteration: its record, the next complex when one was
/// built, and the halt reason on a definite failure outside lazy mode.
pub struct IterationOutcome {
    pub record: IterationRecord,
    pub next: Option<CubeComplex>,
    pub halt: Option<Halt>,
}

/// Runs the five steps on `x` at the given level. `inherited` carries the
/// properties established for `x` by the previous iteration, and `trusted`
/// says whether that iteration certified them.
pub fn iterate(
    x: CubeComplex,
    level: usize,
    source: String,
    inherited: Option<PropertiesRecord>,
    trusted: bool,
    cfg: &PipelineConfig,
) -> Result<IterationOutcome> {
    let input = InputRecord {
        level,
        source,
        vertices: x.n_vertices(),
        f_vector: x.f_vector(),
    };
    let mut notes = Vec::new();
    let properties = match inherited {
        Some(p) => p,
        None => verify_input(&x, cfg)?,
    };
    let mut lazy = !trusted || properties.status == Status::Inconclusive;
    let mut record = IterationRecord {
        input,
        lazy,
        properties,
        thickening: None,
        legality: None,
        vcd: None,
        quotient: None,
        group_certified: false,
        handoff_certified: false,
        fully_certified: false,
        notes: Vec::new(),
    };
    let halt = |step: &'static str, reason: String, mut record: IterationRecord, notes: Vec<String>| {
        record.notes = notes;
        Ok(IterationOutcome {
            record,
            next: None,
            halt: Some(Halt { level, step, reason }),
        })
    };

    // Step 1.
    if record.properties.status == Status::Failed {
        if !lazy {
            let reason = record.properties.label.clone();
            return halt("verify input", reason, record, notes);
        }
        notes.push(format!("input properties {}; continuing unverified", record.properties.label));
    }

    // Step 2.
    let opts = ThickenOptions {
        implicit_threshold: cfg.implicit_threshold,
        base_certified: record.properties.status == Status::Certified,
    };
    let th = match Thickening::pair(Arc::new(x), &opts) {
        Ok(th) => th,
        Err(e @ (Error::ThickeningEmpty | Error::NotSurjective(_) | Error::Disconnected { .. })) => {
            return halt("thicken", e.to_string(), record, notes);
        }
        Err(e) => return Err(e),
    };
    if th.is_implicit() {
        lazy = true;
        notes.push(format!(
            "thickening has {} vertices, above the implicit threshold of {}",
            th.n_vertices(),
            cfg.implicit_threshold
        ));
    }
    record.lazy = lazy;
    let thick = audit_thickening(&th, cfg, level)?;
    let thick_status = thick.five_large;
    let audits_ok = thick.flag_audit.unwrap_or(true) && thick.homotopy_audit.unwrap_or(true);
    record.thickening = Some(thick);
    if !lazy && (thick_status == Status::Failed || !audits_ok) {
        return halt("thickening audit", "thickening failed its 5-largeness or homotopy audit".into(), record, notes);
    }

    // Step 3.
    let legality = certify_legality(&th, &record.properties, cfg)?;
    let legality_status = legality.status;
    record.legality = Some(legality);
    if legality_status == Status::Failed && !lazy {
        return halt("legality", "the canonical orbit contains an illegal state".into(), record, notes);
    }

    // Step 4.
    let vcd = compute_vcd(&th, level, cfg)?;
    let vcd_status = vcd.status;
    let expected_cd = (vcd_status == Status::Certified).then_some(vcd.value);
    record.vcd = Some(vcd);

    // Step 5.
    let (quotient, next) = build_quotient(&th, expected_cd, cfg)?;
    record.group_certified = thick_status == Status::Certified
        && audits_ok
        && legality_status == Status::Certified
        && vcd_status == Status::Certified;
    record.handoff_certified = quotient.status == Status::Certified;
    record.fully_certified =
        record.properties.status == Status::Certified && record.group_certified && record.handoff_certified;
    if quotient.status == Status::Skipped {
        notes.push(format!("level {} complex not built", level + 1));
    }
    record.quotient = Some(quotient);
    record.notes = notes;
    Ok(IterationOutcome { record, next, halt: None })
}

fn handoff_summary(records: &[IterationRecord], halted: &Option<Halt>, requested: usize) -> String {
    let mut parts = Vec::new();
    for r in records {
        let n = r.input.level;
        let group = if r.group_certified {
            format!("level {} group certified", n + 1)
        } else {
            format!("level {} group not certified", n + 1)
        };
        let next = match &r.quotient {
            Some(q) if q.status == Status::Certified => format!("level {} complex certified", n + 1),
            Some(q) => format!("level {} complex {}", n + 1, q.label),
            None => format!("level {} complex not reached", n + 1),
        };
        parts.push(format!("{group}; {next}"));
    }
    if let Some(h) = halted {
        parts.push(format!("halted at level {} ({}): {}", h.level, h.step, h.reason));
    } else if records.len() < requested {
        parts.push(format!(
            "stopped after {} of {requested} iterations: no next complex",
            records.len()
        ));
    }
    parts.push("statements beyond the certified levels are asserted, not computed".into());
    parts.join(". ")
}

pub fn run_pipeline(cfg: &PipelineConfig) -> Result<CertificateChain> {
    cfg.validate()?;
    let (name, start) = cfg.start_complex()?;
    let config = ConfigEcho {
        start: name.clone(),
        iterations: cfg.iterations,
        cell_budget: cfg.cell_budget,
        orbit_budget: cfg.orbit_budget,
        samples: cfg.samples,
        local_scans: cfg.local_scans,
        seed: cfg.seed,
        coeffs: cfg.coeffs,
        implicit_threshold: cfg.implicit_threshold,
    };
    let mut records = Vec::new();
    let mut halted = None;
    let mut current = Some((start, name, None::<PropertiesRecord>, true));
    for level in 1..=cfg.iterations {
        let Some((x, source, inherited, trusted)) = current.take() else {
            break;
        };
        let out = iterate(x, level, source, inherited, trusted, cfg)?;
        let trusted_next = out.record.handoff_certified;
        let carried = out.record.quotient.as_ref().and_then(|q| q.properties.as_ref()).map(|p| {
            properties_record(
                p.five_large.clone(),
                p.no_isolated_corners.clone(),
                p.no_disconnecting_cubes.clone(),
                true,
            )
        });
        records.push(out.record);
        if out.halt.is_some() {
            halted = out.halt;
            break;
        }
        current = out
            .next
            .map(|x| (x, format!("level-2 quotient of level {} group", level + 1), carried, trusted_next));
    }
    let group_certified_through = records
        .iter()
        .take_while(|r| r.group_certified)
        .last()
        .map(|r| r.input.level + 1);
    let handoff = handoff_summary(&records, &halted, cfg.iterations);
    Ok(CertificateChain {
        config,
        iterations: records,
        halted,
        group_certified_through,
        handoff,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct FamilyRow {
    pub k: usize,
    pub generators: usize,
    pub expected_generators: usize,
    pub matches: bool,
    /// The abelianization of a right-angled Coxeter group is (Z/2)^generators.
    pub abelianization_order: String,
    pub log2_order: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct FamilyReport {
    pub rows: Vec<FamilyRow>,
    pub pairwise_distinct: bool,
}

pub fn distinct_family_report(ks: &[usize]) -> Result<FamilyReport> {
    let rows: Vec<FamilyRow> = ks
        .iter()
        .map(|&k| -> Result<FamilyRow> {
            let th = Thickening::pair(Arc::new(cycle_complex(k)?), &ThickenOptions::default())?;
            let generators = th.n_vertices();
            let expected_generators = k * (k - 3);
            Ok(FamilyRow {
                k,
                generators,
                expected_generators,
                matches: generators == expected_generators,
                abelianization_order: format!("2^{generators}"),
                log2_order: generators,
            })
        })
        .collect::<Result<_>>()?;
    let mut orders: Vec<usize> = rows.iter().map(|r| r.log2_order).collect();
    orders.sort_unstable();
    orders.dedup();
    Ok(FamilyReport {
        pairwise_distinct: orders.len() == rows.len(),
        rows,
    })
}
