//! Built-in regression corpus: every computable example with its expected
//! values, run end to end through the analysis pipeline.

use serde::{Deserialize, Serialize};

use appnum_core::analysis::{analyze, RouteChoice};
use appnum_core::error::Result;
use appnum_core::{Budget, Config};

use crate::mapfile::parse_map_file;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Expectation {
    pub name: String,
    /// Expected direct-route value ("1", "infinity"); None = any.
    pub app_direct: Option<String>,
    /// Expected termination bound of the direct route.
    pub direct_bound: Option<u64>,
    /// Expected formula value; Some("-") means the route must be absent.
    pub app_formula: Option<String>,
    pub openness: Option<String>,
    /// Canonical print of the critical-value ideal.
    pub critical_values: Option<String>,
    pub generic_count: Option<usize>,
    pub count_bound: Option<u64>,
    /// Caveats that must be present.
    #[serde(default)]
    pub required_caveats: Vec<String>,
}

pub struct Entry {
    pub name: &'static str,
    pub text: &'static str,
}

pub const ENTRIES: &[Entry] = &[
    Entry {
        name: "breakpoint-d2",
        text: include_str!("../corpus/breakpoint_d2.map"),
    },
    Entry {
        name: "breakpoint-d3",
        text: include_str!("../corpus/breakpoint_d3.map"),
    },
    Entry {
        name: "notopen",
        text: include_str!("../corpus/notopen.map"),
    },
    Entry {
        name: "example-d",
        text: include_str!("../corpus/example_d.map"),
    },
    Entry {
        name: "matrix",
        text: include_str!("../corpus/matrix.map"),
    },
    Entry {
        name: "moredata-f",
        text: include_str!("../corpus/moredata_f.map"),
    },
    Entry {
        name: "moredata-g",
        text: include_str!("../corpus/moredata_g.map"),
    },
    Entry {
        name: "universal-d3",
        text: include_str!("../corpus/universal_d3.map"),
    },
    Entry {
        name: "universal-d4",
        text: include_str!("../corpus/universal_d4.map"),
    },
    Entry {
        name: "blowup",
        text: include_str!("../corpus/blowup.map"),
    },
    Entry {
        name: "projection",
        text: include_str!("../corpus/projection.map"),
    },
];

fn exp(name: &str) -> Expectation {
    Expectation {
        name: name.to_string(),
        app_direct: None,
        direct_bound: None,
        app_formula: None,
        openness: None,
        critical_values: None,
        generic_count: None,
        count_bound: None,
        required_caveats: Vec::new(),
    }
}

/// The paper's stated values for every corpus entry.
pub fn default_expectations() -> Vec<Expectation> {
    let singular = vec!["target-singular-formula-invalid".to_string()];
    vec![
        Expectation {
            app_direct: Some("1".into()),
            app_formula: Some("1".into()),
            openness: Some("not-open".into()),
            critical_values: Some("<y1, y2>".into()),
            ..exp("breakpoint-d2")
        },
        Expectation {
            app_direct: Some("2".into()),
            app_formula: Some("2".into()),
            openness: Some("not-open".into()),
            ..exp("breakpoint-d3")
        },
        Expectation {
            app_direct: Some("infinity".into()),
            direct_bound: Some(4),
            app_formula: Some("-".into()),
            openness: Some("undecided".into()),
            ..exp("notopen")
        },
        Expectation {
            app_direct: Some("1".into()),
            direct_bound: Some(2),
            app_formula: Some("-".into()),
            openness: Some("undecided".into()),
            ..exp("example-d")
        },
        Expectation {
            app_direct: Some("1".into()),
            app_formula: Some("2".into()),
            openness: Some("not-open".into()),
            required_caveats: singular.clone(),
            ..exp("matrix")
        },
        Expectation {
            app_direct: Some("1".into()),
            app_formula: Some("2".into()),
            openness: Some("not-open".into()),
            required_caveats: singular.clone(),
            ..exp("moredata-f")
        },
        Expectation {
            app_direct: Some("2".into()),
            app_formula: Some("2".into()),
            openness: Some("not-open".into()),
            required_caveats: singular,
            ..exp("moredata-g")
        },
        Expectation {
            app_direct: Some("2".into()),
            app_formula: Some("2".into()),
            openness: Some("not-open".into()),
            generic_count: Some(2),
            count_bound: Some(2),
            ..exp("universal-d3")
        },
        Expectation {
            app_direct: Some("3".into()),
            app_formula: Some("3".into()),
            openness: Some("not-open".into()),
            generic_count: Some(3),
            count_bound: Some(3),
            ..exp("universal-d4")
        },
        Expectation {
            app_direct: Some("1".into()),
            app_formula: Some("1".into()),
            openness: Some("not-open".into()),
            critical_values: Some("<y1, y2>".into()),
            generic_count: Some(1),
            count_bound: Some(1),
            ..exp("blowup")
        },
        Expectation {
            app_direct: Some("infinity".into()),
            app_formula: Some("infinity".into()),
            openness: Some("open".into()),
            critical_values: Some("<1>".into()),
            ..exp("projection")
        },
    ]
}

pub struct EntryOutcome {
    pub name: String,
    pub mismatches: Vec<String>,
}

impl EntryOutcome {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Run one corpus entry and diff against its expectation.
pub fn run_entry(entry: &Entry, expectation: &Expectation, seed: u64) -> Result<EntryOutcome> {
    let mf = parse_map_file(entry.text)?;
    let cfg = Config {
        seed: mf.options.seed.unwrap_or(seed),
        budget: Budget::new(
            mf.options
                .budget
                .unwrap_or(appnum_core::config::DEFAULT_BUDGET),
        ),
        slice_bound: mf
            .options
            .slice_bound
            .unwrap_or(appnum_core::config::DEFAULT_SLICE_BOUND),
        slice_reps: mf
            .options
            .slice_reps
            .unwrap_or(appnum_core::config::DEFAULT_SLICE_REPS),
    };
    let analysis = analyze(&mf.map, &cfg, RouteChoice::Both)?;

    let mut mismatches = Vec::new();
    let mut diff = |field: &str, expected: &str, got: &str| {
        if expected != got {
            mismatches.push(format!("{}: expected {}, got {}", field, expected, got));
        }
    };

    if let Some(want) = &expectation.app_direct {
        let got = analysis
            .app_direct_value()
            .map(|v| v.to_string())
            .unwrap_or_else(|| "-".into());
        diff("app_direct", want, &got);
    }
    if let Some(want) = expectation.direct_bound {
        let got = analysis
            .app_direct
            .as_ref()
            .and_then(|r| r.bound)
            .map(|b| b.to_string())
            .unwrap_or_else(|| "-".into());
        diff("direct_bound", &want.to_string(), &got);
    }
    if let Some(want) = &expectation.app_formula {
        let got = analysis
            .app_formula_value()
            .map(|v| v.to_string())
            .unwrap_or_else(|| "-".into());
        diff("app_formula", want, &got);
    }
    if let Some(want) = &expectation.openness {
        diff("openness", want, analysis.openness.as_str());
    }
    if let Some(want) = &expectation.critical_values {
        let got = analysis
            .critical_values
            .as_ref()
            .map(|(i, _)| i.clone())
            .unwrap_or_else(|| "-".into());
        diff("critical_values", want, &got);
    }
    if let Some(want) = expectation.generic_count {
        let got = analysis
            .fibre_count
            .as_ref()
            .map(|f| f.generic_count.to_string())
            .unwrap_or_else(|| "-".into());
        diff("generic_count", &want.to_string(), &got);
    }
    if let Some(want) = expectation.count_bound {
        let got = analysis
            .fibre_count
            .as_ref()
            .and_then(|f| f.bound)
            .map(|b| b.to_string())
            .unwrap_or_else(|| "-".into());
        diff("count_bound", &want.to_string(), &got);
    }
    for caveat in &expectation.required_caveats {
        if !analysis.caveats.iter().any(|c| c.as_str() == caveat) {
            mismatches.push(format!("missing required caveat {}", caveat));
        }
    }
    if let Some(d) = &analysis.discrepancy {
        mismatches.push(format!("discrepancy: {}", d));
    }
    if !analysis.oracle_checks.iter().all(|c| c.agree) {
        mismatches.push("oracle dimension check failed".into());
    }

    Ok(EntryOutcome {
        name: expectation.name.clone(),
        mismatches,
    })
}
