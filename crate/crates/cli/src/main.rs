use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use fibercox::collapse::CollapseConfig;
use fibercox::cubical::CubeComplex;
use fibercox::davis::{level2_quotient, two_neighborhood_embedding_check, verify_quotient_properties, Racg};
use fibercox::homology::{cubical_homology, vcd_racg, Coeffs};
use fibercox::io::{to_pretty, ComplexJson, CubeComplexJson, Structure};
use fibercox::lemmas::{run_suite, SuiteConfig};
use fibercox::moves::{
    canonical_moves, canonical_state, certify_legal_by_hypotheses, check_legal_orbit, OrbitConfig, OrbitMode,
    DEFAULT_EXHAUSTIVE_BOUND, DEFAULT_SEED,
};
use fibercox::pipeline::{cycle_complex, distinct_family_report, run_pipeline, PipelineConfig, Start};
use fibercox::simplicial::DEFAULT_CELL_BUDGET;
use fibercox::thickening::{Thickening, ThickenOptions};
use fibercox::{Error, Graph, SimplicialComplex};

#[derive(Parser)]
#[command(name = "fibercox", version, about = "Thickenings, legal move systems and Davis quotients")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Input {
    /// Start from the cycle of length K (at least 5).
    #[arg(long, value_name = "K")]
    cycle: Option<usize>,
    /// Read a graph, simplicial complex or cube complex from JSON.
    #[arg(long, value_name = "PATH", conflicts_with = "cycle")]
    complex: Option<PathBuf>,
    /// Read a graph from JSON.
    #[arg(long, value_name = "PATH", conflicts_with_all = ["cycle", "complex"])]
    graph: Option<PathBuf>,
}

#[derive(Args, Clone)]
struct Budgets {
    #[arg(long, default_value_t = DEFAULT_CELL_BUDGET)]
    cell_budget: usize,
    /// Largest orbit enumerated exhaustively.
    #[arg(long, default_value_t = DEFAULT_EXHAUSTIVE_BOUND)]
    orbit_budget: u64,
    #[arg(long, default_value_t = fibercox::pipeline::DEFAULT_SAMPLES)]
    samples: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, default_value = "z", value_parser = parse_coeffs)]
    coeffs: Coeffs,
}

#[derive(Subcommand)]
enum Command {
    /// Build the pair thickening of a cube complex (or the identity thickening with --identity).
    Thicken {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        identity: bool,
        /// Write the thickening as a simplicial complex.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_CELL_BUDGET)]
        cell_budget: usize,
    },
    /// Certify legality of the canonical state and moves on the pair thickening.
    CheckLegal {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        budgets: Budgets,
        /// Enumerate the whole orbit regardless of its size.
        #[arg(long)]
        exhaustive: bool,
    },
    /// Virtual cohomological dimension of the right-angled Coxeter group of a flag complex.
    /// With --cycle K the complex is the pair thickening of the K-cycle.
    Vcd {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        budgets: Budgets,
    },
    /// Level-2 quotient of the Davis complex of a graph's Coxeter group.
    DavisQuotient {
        #[command(flatten)]
        input: Input,
        /// With --cycle, use the 1-skeleton of the pair thickening instead of the cycle.
        #[arg(long)]
        thickened: bool,
        #[command(flatten)]
        budgets: Budgets,
        /// Write the quotient cube complex.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Check a cube complex for 5-largeness, isolated corners, disconnecting cubes and dimension.
    VerifyProperties {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        budgets: Budgets,
    },
    /// Run the iteration and emit the certificate chain.
    Pipeline {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 1)]
        iterations: usize,
        #[arg(long, default_value_t = fibercox::pipeline::DEFAULT_LOCAL_SCANS)]
        local_scans: usize,
        #[command(flatten)]
        budgets: Budgets,
        /// Directory for the chain and any quotient complexes.
        #[arg(long, value_name = "DIR")]
        out: Option<PathBuf>,
    },
    /// Run the property suite on a flag complex declared at the given level.
    /// With --cycle K the complex is the pair thickening of the K-cycle.
    LemmaSuite {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 1)]
        level: usize,
        #[command(flatten)]
        budgets: Budgets,
    },
    /// Generator counts and abelianization orders for the cycle family.
    FamilyReport {
        #[arg(long, value_delimiter = ',', default_values_t = [5, 6, 7, 8])]
        k: Vec<usize>,
    },
}

fn parse_coeffs(s: &str) -> Result<Coeffs, String> {
    match s.to_ascii_lowercase().as_str() {
        "z" => Ok(Coeffs::Z),
        "q" => Ok(Coeffs::Q),
        "gf2" | "f2" | "z2" => Ok(Coeffs::GF2),
        _ => Err(format!("unknown coefficients `{s}` (expected z, q or gf2)")),
    }
}

type Outcome = fibercox::Result<(Value, u8)>;

fn read(path: &Path) -> fibercox::Result<Structure> {
    Structure::read(path)
}

impl Input {
    fn describe(&self) -> String {
        match (self.cycle, &self.complex, &self.graph) {
            (Some(k), _, _) => format!("cycle of length {k}"),
            (_, Some(p), _) | (_, _, Some(p)) => p.display().to_string(),
            _ => String::new(),
        }
    }

    fn structure(&self) -> fibercox::Result<Structure> {
        match (self.cycle, &self.complex, &self.graph) {
            (Some(k), _, _) => Ok(Structure::Cubes(cycle_complex(k)?)),
            (_, Some(p), _) | (_, _, Some(p)) => read(p),
            _ => Err(Error::InvalidInput("one of --cycle, --complex or --graph is required".into())),
        }
    }

    fn cubes(&self) -> fibercox::Result<CubeComplex> {
        self.structure()?.into_cubes()
    }

    /// A flag complex; a cycle stands for its pair thickening.
    fn flag_complex(&self) -> fibercox::Result<(SimplicialComplex, Option<Thickening>)> {
        if let Some(k) = self.cycle {
            let th = Thickening::pair(Arc::new(cycle_complex(k)?), &ThickenOptions::default())?;
            let l = th.complex()?.clone();
            return Ok((l, Some(th)));
        }
        Ok((self.structure()?.into_simplicial()?, None))
    }

    fn graph(&self, thickened: bool) -> fibercox::Result<Graph> {
        if let Some(k) = self.cycle {
            if thickened {
                let th = Thickening::pair(Arc::new(cycle_complex(k)?), &ThickenOptions::default())?;
                return Ok(th.one_skeleton().expect("small thickenings are explicit").clone());
            }
            return Ok(Graph::cycle(k));
        }
        match self.structure()? {
            Structure::Graph(g) => Ok(g),
            Structure::Complex(k) => Ok(k.one_skeleton()),
            Structure::Cubes(_) => Err(Error::InvalidInput("expected a graph".into())),
        }
    }
}

fn thicken(input: &Input, identity: bool, out: Option<&Path>, budget: usize) -> Outcome {
    let x = Arc::new(input.cubes()?);
    let opts = ThickenOptions::default();
    let th = if identity {
        Thickening::th1(x, &opts)
    } else {
        Thickening::pair(x, &opts)?
    };
    let mut report = json!({
        "input": input.describe(),
        "kind": if identity { "identity" } else { "pair" },
        "vertices": th.n_vertices(),
        "implicit": th.is_implicit(),
    });
    if !th.is_implicit() {
        let k = th.complex()?;
        let large = k.is_k_large(5, budget)?;
        report["f_vector"] = json!(k.f_vector(budget)?);
        report["flag"] = json!(th.flag_audit()?);
        report["five_large"] = json!(large.is_large);
        report["homotopy_audit"] = json!(th.homotopy_audit(budget)?);
        if let Some(path) = out {
            std::fs::write(path, to_pretty(&ComplexJson::from(k))?)?;
            report["written"] = json!(path.display().to_string());
        }
    } else if out.is_some() {
        return Err(Error::InvalidInput("an implicit thickening cannot be written out".into()));
    }
    Ok((report, 0))
}

fn check_legal(input: &Input, b: &Budgets, exhaustive: bool) -> Outcome {
    let x = Arc::new(input.cubes()?);
    let collapse = CollapseConfig::default();
    let cert = certify_legal_by_hypotheses(&x, &collapse, b.cell_budget)?;
    let th = Thickening::pair(x, &ThickenOptions::default())?;
    let system = canonical_moves(&th)?;
    let start = canonical_state(&th)?;
    let cfg = OrbitConfig {
        mode: if exhaustive {
            OrbitMode::Exhaustive
        } else {
            OrbitMode::Auto(b.samples)
        },
        exhaustive_bound: if exhaustive { u64::MAX } else { b.orbit_budget },
        seed: b.seed,
    };
    let orbit = check_legal_orbit(&th, &system, &start, &cfg)?;
    let certified = cert.granted && !orbit.found_illegal();
    let code = if certified { 0 } else { 2 };
    Ok((
        json!({
            "input": input.describe(),
            "certified": certified,
            "certificate": cert,
            "orbit": orbit,
        }),
        code,
    ))
}

fn vcd(input: &Input, b: &Budgets) -> Outcome {
    let (l, _) = input.flag_complex()?;
    let report = vcd_racg(&l, b.coeffs, b.cell_budget)?;
    Ok((json!({ "input": input.describe(), "report": report }), 0))
}

fn davis_quotient(input: &Input, thickened: bool, b: &Budgets, out: Option<&Path>) -> Outcome {
    let g = input.graph(thickened)?;
    let racg = Racg::new(g, b.cell_budget)?;
    let x = level2_quotient(&racg, b.cell_budget)?;
    let flag = SimplicialComplex::flag(racg.graph().clone());
    let expected = vcd_racg(&flag, b.coeffs, b.cell_budget).ok().map(|r| r.vcd);
    let report = verify_quotient_properties(&racg, &x, expected, &CollapseConfig::default(), b.cell_budget)?;
    let embedding = two_neighborhood_embedding_check(&racg);
    let homology = cubical_homology(&x, Coeffs::Z, false);
    if let Some(path) = out {
        std::fs::write(path, to_pretty(&CubeComplexJson::from(&x))?)?;
    }
    let code = if report.passed && embedding.injective { 0 } else { 2 };
    Ok((
        json!({
            "input": input.describe(),
            "generators": racg.n_generators(),
            "euler_characteristic": x.euler_characteristic(),
            "homology": homology.describe(),
            "properties": report,
            "embedding": embedding,
        }),
        code,
    ))
}

fn verify_properties(input: &Input, b: &Budgets) -> Outcome {
    let x = input.cubes()?;
    let five = x.check_5_large(&CollapseConfig::default(), b.cell_budget)?;
    let corners = x.check_no_isolated_corners();
    let cubes = x.check_no_disconnecting_cubes()?;
    let h = cubical_homology(&x, b.coeffs, false);
    let cd = h.top_cohomology_degree();
    let passed = five.certified && corners.passed && cubes.passed;
    Ok((
        json!({
            "input": input.describe(),
            "f_vector": x.f_vector(),
            "five_large": fibercox::moves::FiveLargeSummary::from(&five),
            "no_isolated_corners": corners,
            "no_disconnecting_cubes": cubes,
            "homology": h.describe(),
            "cd": cd,
            "passed": passed,
        }),
        if passed { 0 } else { 2 },
    ))
}

fn pipeline(input: &Input, iterations: usize, local_scans: usize, b: &Budgets, out: Option<&Path>) -> Outcome {
    let mut cfg = match input.cycle {
        Some(k) => PipelineConfig::cycle(k),
        None => PipelineConfig::from_complex(input.describe(), input.cubes()?),
    };
    cfg.iterations = iterations;
    cfg.local_scans = local_scans;
    cfg.cell_budget = b.cell_budget;
    cfg.orbit_budget = b.orbit_budget;
    cfg.samples = b.samples;
    cfg.seed = b.seed;
    cfg.coeffs = b.coeffs;
    if let Start::Cycle(k) = cfg.start {
        cycle_complex(k)?;
    }
    let chain = run_pipeline(&cfg)?;
    if let Some(dir) = out {
        std::fs::create_dir_all(dir)?;
        std::fs::write(dir.join("chain.json"), to_pretty(&chain)?)?;
    }
    let code = chain.exit_status() as u8;
    Ok((serde_json::to_value(&chain)?, code))
}

fn lemma_suite(input: &Input, level: usize, b: &Budgets) -> Outcome {
    let (k, th) = input.flag_complex()?;
    let cfg = SuiteConfig {
        level,
        coeffs: b.coeffs,
        collapse: CollapseConfig::default(),
        budget: b.cell_budget,
    };
    let report = run_suite(&k, th.as_ref(), &cfg)?;
    let code = if report.passed { 0 } else { 2 };
    Ok((serde_json::to_value(&report)?, code))
}

fn family_report(ks: &[usize]) -> Outcome {
    let r = distinct_family_report(ks)?;
    let ok = r.pairwise_distinct && r.rows.iter().all(|row| row.matches);
    Ok((serde_json::to_value(&r)?, if ok { 0 } else { 2 }))
}

fn dispatch(cmd: &Command) -> Outcome {
    match cmd {
        Command::Thicken { input, identity, out, cell_budget } => thicken(input, *identity, out.as_deref(), *cell_budget),
        Command::CheckLegal { input, budgets, exhaustive } => check_legal(input, budgets, *exhaustive),
        Command::Vcd { input, budgets } => vcd(input, budgets),
        Command::DavisQuotient { input, thickened, budgets, out } => {
            davis_quotient(input, *thickened, budgets, out.as_deref())
        }
        Command::VerifyProperties { input, budgets } => verify_properties(input, budgets),
        Command::Pipeline { input, iterations, local_scans, budgets, out } => {
            pipeline(input, *iterations, *local_scans, budgets, out.as_deref())
        }
        Command::LemmaSuite { input, level, budgets } => lemma_suite(input, *level, budgets),
        Command::FamilyReport { k } => family_report(k),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match dispatch(&cli.command) {
        Ok((value, code)) => {
            match serde_json::to_string_pretty(&value) {
                Ok(text) => println!("{text}"),
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(1);
                }
            }
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
