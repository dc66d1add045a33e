//! JSON report assembly. Field order is fixed by struct declaration order,
//! so identical analyses serialize byte-identically.

use serde::Serialize;

use appnum_core::analysis::{Analysis, AppResult, AppValue, Certificate, OpennessVerdict};
use appnum_core::geometry::MapSpec;
use appnum_core::Config;

#[derive(Serialize)]
pub struct ToolInfo {
    pub name: &'static str,
    pub version: &'static str,
}

#[derive(Serialize)]
pub struct MapInfo {
    pub path: String,
    pub target_vars: Vec<String>,
    pub fibre_vars: Vec<String>,
    pub d: usize,
    pub target_dim: i64,
    pub target: String,
    pub target_components: Vec<String>,
    pub projective_blocks: Vec<[String; 2]>,
}

#[derive(Serialize)]
pub struct OptionsInfo {
    pub seed: u64,
    pub budget: u64,
    pub slice_bound: i64,
    pub slice_reps: u32,
    pub route: String,
}

#[derive(Serialize)]
pub struct PowerInfo {
    pub power: usize,
    pub quasiopen: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_piece: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_image: Option<String>,
}

#[derive(Serialize)]
pub struct AppInfo {
    pub value: String,
    pub caveats: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub powers: Option<Vec<PowerInfo>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub minimizing_stratum: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certified_interval: Option<[String; 2]>,
}

#[derive(Serialize)]
pub struct StratumInfo {
    pub component: String,
    pub k: i64,
    pub r: i64,
    pub w: i64,
    pub h: i64,
    pub closure: String,
    pub image: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub excluded: Option<String>,
    pub randomized: bool,
}

#[derive(Serialize)]
pub struct OpennessInfo {
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

#[derive(Serialize)]
pub struct CriticalInfo {
    pub ideal: String,
    pub dimension: i64,
}

#[derive(Serialize)]
pub struct FibreInfo {
    pub generic_count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound_note: Option<String>,
    pub satisfies_bound: bool,
}

#[derive(Serialize)]
pub struct OracleCheckInfo {
    pub label: String,
    pub dimension: i64,
    pub estimate: i64,
    pub counts: Vec<(u64, u64)>,
    pub agree: bool,
}

#[derive(Serialize)]
pub struct OracleInfo {
    pub checks: Vec<OracleCheckInfo>,
    pub all_agree: bool,
}

#[derive(Serialize)]
pub struct ProvenanceInfo {
    pub seed: u64,
    pub slice_bound: i64,
    pub slice_reps: u32,
    pub budget_limit: u64,
}

#[derive(Serialize)]
pub struct Report {
    pub tool: ToolInfo,
    pub map: MapInfo,
    pub options: OptionsInfo,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub app_direct: Option<AppInfo>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub app_formula: Option<AppInfo>,
    pub rank_partition: Vec<StratumInfo>,
    pub openness: OpennessInfo,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub critical_values: Option<CriticalInfo>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fibre_count: Option<FibreInfo>,
    pub oracle: OracleInfo,
    pub caveats: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub discrepancy: Option<String>,
    pub provenance: ProvenanceInfo,
}

fn app_value_str(v: AppValue) -> String {
    v.to_string()
}

fn app_info(r: &AppResult) -> AppInfo {
    let powers = match &r.certificate {
        Certificate::Direct(vs) => Some(
            vs.iter()
                .map(|v| PowerInfo {
                    power: v.power,
                    quasiopen: v.quasiopen,
                    witness_piece: v.witness.as_ref().map(|(p, _)| p.clone()),
                    witness_image: v.witness.as_ref().map(|(_, i)| i.clone()),
                })
                .collect(),
        ),
        Certificate::Formula(_) => None,
    };
    let minimizing = match &r.certificate {
        Certificate::Formula(m) => *m,
        Certificate::Direct(_) => None,
    };
    AppInfo {
        value: app_value_str(r.value),
        caveats: r.caveats.iter().map(|c| c.as_str().to_string()).collect(),
        bound: r.bound,
        powers,
        minimizing_stratum: minimizing,
        certified_interval: r
            .interval
            .map(|(lo, hi)| [app_value_str(lo), app_value_str(hi)]),
    }
}

pub fn build_report(
    path: &str,
    m: &MapSpec,
    cfg: &Config,
    route: &str,
    analysis: &Analysis,
) -> Report {
    let budget = &cfg.budget;
    let ring = m.ring();
    let target_components = m
        .target_components
        .iter()
        .map(|c| c.canonical_print(budget).unwrap_or_else(|e| e.to_string()))
        .collect();
    Report {
        tool: ToolInfo {
            name: "appnum",
            version: env!("CARGO_PKG_VERSION"),
        },
        map: MapInfo {
            path: path.to_string(),
            target_vars: m
                .target_var_indices()
                .iter()
                .map(|&v| ring.var_name(v).to_string())
                .collect(),
            fibre_vars: m
                .fibre_var_indices()
                .iter()
                .map(|&v| ring.var_name(v).to_string())
                .collect(),
            d: analysis.d,
            target_dim: analysis.target_dim,
            target: if m.target_components.is_empty() {
                "affine-space".to_string()
            } else {
                "declared-components".to_string()
            },
            target_components,
            projective_blocks: m
                .projective_blocks
                .iter()
                .map(|&(a, b)| [ring.var_name(a).to_string(), ring.var_name(b).to_string()])
                .collect(),
        },
        options: OptionsInfo {
            seed: cfg.seed,
            budget: cfg.budget.limit(),
            slice_bound: cfg.slice_bound,
            slice_reps: cfg.slice_reps,
            route: route.to_string(),
        },
        app_direct: analysis.app_direct.as_ref().map(app_info),
        app_formula: analysis.app_formula.as_ref().map(app_info),
        rank_partition: analysis
            .strata
            .iter()
            .map(|s| StratumInfo {
                component: s.component.clone(),
                k: s.k,
                r: s.r,
                w: s.w,
                h: s.h,
                closure: s
                    .closure_ideal
                    .canonical_print(budget)
                    .unwrap_or_else(|e| e.to_string()),
                image: s
                    .image_ideal
                    .canonical_print(budget)
                    .unwrap_or_else(|e| e.to_string()),
                excluded: s.excluded_ideal.as_ref().map(|e| {
                    e.canonical_print(budget).unwrap_or_else(|e| e.to_string())
                }),
                randomized: s.randomized,
            })
            .collect(),
        openness: OpennessInfo {
            verdict: analysis.openness.as_str().to_string(),
            reason: match &analysis.openness {
                OpennessVerdict::Undecided(r) => Some(r.clone()),
                _ => None,
            },
        },
        critical_values: analysis
            .critical_values
            .as_ref()
            .map(|(ideal, dim)| CriticalInfo {
                ideal: ideal.clone(),
                dimension: *dim,
            }),
        fibre_count: analysis.fibre_count.as_ref().map(|f| FibreInfo {
            generic_count: f.generic_count,
            bound: f.bound,
            bound_note: f.bound_note.clone(),
            satisfies_bound: f
                .bound
                .map(|b| f.generic_count as u64 >= b)
                .unwrap_or(true),
        }),
        oracle: OracleInfo {
            all_agree: analysis.oracle_checks.iter().all(|c| c.agree),
            checks: analysis
                .oracle_checks
                .iter()
                .map(|c| OracleCheckInfo {
                    label: c.label.clone(),
                    dimension: c.dim,
                    estimate: c.estimate,
                    counts: c.counts.clone(),
                    agree: c.agree,
                })
                .collect(),
        },
        caveats: analysis
            .caveats
            .iter()
            .map(|c| c.as_str().to_string())
            .collect(),
        discrepancy: analysis.discrepancy.clone(),
        provenance: ProvenanceInfo {
            seed: cfg.seed,
            slice_bound: cfg.slice_bound,
            slice_reps: cfg.slice_reps,
            budget_limit: cfg.budget.limit(),
        },
    }
}
