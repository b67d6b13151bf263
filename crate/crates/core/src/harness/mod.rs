//! Claim registry and runner.
//!
//! Suites C1-C7 assert algebraic identities and decide the exit code; suites
//! C8-C11 measure properties of the `psi_n` maps and only report them.

mod report;
mod suites;

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

pub use crate::psi::{ClaimVerdict, Status};
pub use report::{render, Format};

/// Catalog entry for one claim suite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SuiteInfo {
    pub id: &'static str,
    pub title: &'static str,
    pub paper_ref: &'static str,
    pub asserted: bool,
    /// Library operations this suite drives.
    #[serde(skip)]
    pub exercises: &'static [&'static str],
}

/// Every public operation of the library that the harness is expected to cover.
pub const OPERATIONS: &[&str] = &[
    "mv_linear_ops",
    "geometric_product",
    "inner_product",
    "exterior_product",
    "grade_projection",
    "reversion",
    "rotor_exp",
    "rotor_rotate",
    "even_part",
    "pauli",
    "phi_map",
    "phi_composition_check",
    "psi0",
    "psi1",
    "psi1_inv",
    "star1",
    "qubit_inverse",
    "kron_vec",
    "kron_mat",
    "group_generator",
    "word_evaluate",
    "word_reduce",
    "operator_schmidt_rank",
    "vector_schmidt_rank",
    "canonical_ket",
    "bell_state",
    "reduced_density_first_qubit",
    "literal_tables",
    "generated_tables",
    "compare_tables",
    "psi_n",
    "verify_unitarity",
    "verify_separable_consistency",
    "bell_images",
];

pub const CATALOG: &[SuiteInfo] = &[
    SuiteInfo {
        id: "C1",
        title: "Clifford relations",
        paper_ref: "s_i s_j = -s_j s_i",
        asserted: true,
        exercises: &[
            "mv_linear_ops",
            "geometric_product",
            "inner_product",
            "exterior_product",
            "grade_projection",
            "reversion",
            "even_part",
        ],
    },
    SuiteInfo {
        id: "C2",
        title: "Rotor rotation",
        paper_ref: "a rotation of angle theta",
        asserted: true,
        exercises: &["rotor_exp", "rotor_rotate"],
    },
    SuiteInfo {
        id: "C3",
        title: "Phi composition",
        paper_ref: "U = a_0 Id",
        asserted: true,
        exercises: &["pauli", "phi_map", "phi_composition_check", "psi0"],
    },
    SuiteInfo {
        id: "C4",
        title: "Psi_1 isomorphism",
        paper_ref: "Psi_1 is a bijection",
        asserted: true,
        exercises: &["psi1", "psi1_inv", "star1"],
    },
    SuiteInfo {
        id: "C5",
        title: "Star_1 group axioms",
        paper_ref: "is a group",
        asserted: true,
        exercises: &["star1", "qubit_inverse"],
    },
    SuiteInfo {
        id: "C6",
        title: "Mixed product and word closure",
        paper_ref: "finite length words of the form",
        asserted: true,
        exercises: &[
            "kron_vec",
            "kron_mat",
            "group_generator",
            "word_evaluate",
            "word_reduce",
            "operator_schmidt_rank",
        ],
    },
    SuiteInfo {
        id: "C7",
        title: "Bell orthonormality and maximal entanglement",
        paper_ref: "maximally entangled states",
        asserted: true,
        exercises: &[
            "canonical_ket",
            "bell_state",
            "reduced_density_first_qubit",
            "vector_schmidt_rank",
        ],
    },
    SuiteInfo {
        id: "C8",
        title: "Psi separable consistency",
        paper_ref: "coincides with the linear operator tensor product",
        asserted: false,
        exercises: &["verify_separable_consistency"],
    },
    SuiteInfo {
        id: "C9",
        title: "Psi unitarity",
        paper_ref: "there exists a bijection",
        asserted: false,
        exercises: &["psi_n", "verify_unitarity"],
    },
    SuiteInfo {
        id: "C10",
        title: "Table rule comparison",
        paper_ref: "pairs of index and sign matrices",
        asserted: false,
        exercises: &["literal_tables", "generated_tables", "compare_tables"],
    },
    SuiteInfo {
        id: "C11",
        title: "Bell-image properties",
        paper_ref: "maximally entangled elements",
        asserted: false,
        exercises: &["bell_images"],
    },
];

pub fn list_claims() -> &'static [SuiteInfo] {
    CATALOG
}

pub fn suite(id: &str) -> Option<&'static SuiteInfo> {
    CATALOG.iter().find(|s| s.id == id)
}

/// Operations from [`OPERATIONS`] that no suite exercises.
pub fn registry_self_check() -> Vec<&'static str> {
    OPERATIONS
        .iter()
        .copied()
        .filter(|op| !CATALOG.iter().any(|s| s.exercises.contains(op)))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConfigError {
    #[error("unknown suite id '{0}'")]
    UnknownSuite(String),
    #[error("tolerance must be positive and finite, got {0}")]
    Tolerance(f64),
    #[error("samples must be at least 1")]
    Samples,
    #[error("n-max must be in 2..=4, got {0}")]
    NMax(usize),
    #[error("suite list is empty")]
    EmptySelection,
}

/// Which suites a run executes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SuiteSelection {
    All,
    Only(Vec<String>),
}

impl SuiteSelection {
    /// Parses `all` or a comma-separated list of suite ids.
    pub fn parse(s: &str) -> Result<Self, ConfigError> {
        if s.trim().eq_ignore_ascii_case("all") {
            return Ok(Self::All);
        }
        let ids: Vec<String> = s
            .split(',')
            .map(|p| p.trim().to_ascii_uppercase())
            .filter(|p| !p.is_empty())
            .collect();
        if ids.is_empty() {
            return Err(ConfigError::EmptySelection);
        }
        if let Some(bad) = ids.iter().find(|id| suite(id).is_none()) {
            return Err(ConfigError::UnknownSuite(bad.clone()));
        }
        Ok(Self::Only(ids))
    }
}

pub const DEFAULT_SEED: u64 = 0x5eed_2015;
pub const DEFAULT_SAMPLES: u64 = 10_000;
pub const DEFAULT_TOLERANCE: f64 = 1e-9;
pub const DEFAULT_N_MAX: usize = 4;

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub suites: SuiteSelection,
    /// Precondition tolerance and the threshold report-only suites measure against.
    pub tolerance: f64,
    pub seed: u64,
    pub samples: u64,
    pub n_max: usize,
    pub format: Format,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            suites: SuiteSelection::All,
            tolerance: DEFAULT_TOLERANCE,
            seed: DEFAULT_SEED,
            samples: DEFAULT_SAMPLES,
            n_max: DEFAULT_N_MAX,
            format: Format::Text,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if !(self.tolerance > 0.0 && self.tolerance.is_finite()) {
            return Err(ConfigError::Tolerance(self.tolerance));
        }
        if self.samples < 1 {
            return Err(ConfigError::Samples);
        }
        if !(2..=4).contains(&self.n_max) {
            return Err(ConfigError::NMax(self.n_max));
        }
        if let SuiteSelection::Only(ids) = &self.suites {
            if ids.is_empty() {
                return Err(ConfigError::EmptySelection);
            }
            if let Some(bad) = ids.iter().find(|id| suite(id).is_none()) {
                return Err(ConfigError::UnknownSuite(bad.clone()));
            }
        }
        Ok(())
    }

    /// Selected suites in catalog order, each at most once.
    pub fn selected(&self) -> Vec<&'static SuiteInfo> {
        match &self.suites {
            SuiteSelection::All => CATALOG.iter().collect(),
            SuiteSelection::Only(ids) => CATALOG
                .iter()
                .filter(|s| ids.iter().any(|id| id == s.id))
                .collect(),
        }
    }
}

/// Echo of the configuration inside a report.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConfigEcho {
    pub suites: Vec<String>,
    pub tolerance: f64,
    pub seed: u64,
    pub samples: u64,
    pub n_max: usize,
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub report_only: usize,
    pub total: usize,
    pub exit_code: i32,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunReport {
    pub config: ConfigEcho,
    pub claims: Vec<ClaimVerdict>,
    pub summary: Summary,
    /// Wall-clock per suite; kept out of the rendered report so that it stays reproducible.
    #[serde(skip)]
    pub timings: Vec<(String, Duration)>,
}

impl RunReport {
    pub fn exit_code(&self) -> i32 {
        self.summary.exit_code
    }
}

/// Parameters handed to every suite.
#[derive(Debug, Clone, Copy)]
pub(crate) struct SuiteContext {
    pub tolerance: f64,
    pub seed: u64,
    pub samples: u64,
    pub n_max: usize,
}

/// Runs one suite by id with the given configuration.
pub fn run_suite(id: &str, config: &RunConfig) -> Result<ClaimVerdict, ConfigError> {
    let info = suite(id).ok_or_else(|| ConfigError::UnknownSuite(id.to_string()))?;
    let ctx = SuiteContext {
        tolerance: config.tolerance,
        seed: config.seed,
        samples: config.samples,
        n_max: config.n_max,
    };
    Ok(suites::run(info, &ctx))
}

/// Executes the selected suites (concurrently) and assembles the report in catalog order.
pub fn run(config: &RunConfig) -> Result<RunReport, ConfigError> {
    config.validate()?;
    let selected = config.selected();
    let ctx = SuiteContext {
        tolerance: config.tolerance,
        seed: config.seed,
        samples: config.samples,
        n_max: config.n_max,
    };
    let results: Vec<(ClaimVerdict, Duration)> = selected
        .par_iter()
        .map(|info| {
            let start = Instant::now();
            let verdict = suites::run(info, &ctx);
            (verdict, start.elapsed())
        })
        .collect();

    let mut claims = Vec::with_capacity(results.len());
    let mut timings = Vec::with_capacity(results.len());
    for (verdict, elapsed) in results {
        timings.push((verdict.id.clone(), elapsed));
        claims.push(verdict);
    }
    let count = |s: Status| claims.iter().filter(|c| c.status == s).count();
    let fail = count(Status::Fail);
    let summary = Summary {
        pass: count(Status::Pass),
        fail,
        report_only: count(Status::ReportOnly),
        total: claims.len(),
        exit_code: if fail == 0 { 0 } else { 1 },
    };
    Ok(RunReport {
        config: ConfigEcho {
            suites: selected.iter().map(|s| s.id.to_string()).collect(),
            tolerance: config.tolerance,
            seed: config.seed,
            samples: config.samples,
            n_max: config.n_max,
            format: config.format,
        },
        claims,
        summary,
        timings,
    })
}
