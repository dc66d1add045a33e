//! Executable decisions: quasiopenness, the approximation number by two
//! routes, openness, critical values, rank partitions and fibre-count
//! bounds.

mod app;
mod counting;
mod critical;
mod openness;
mod quasiopen;
mod rank;
mod report;
mod stratum;

pub use app::{app_direct, app_formula, direct_bound};
pub use counting::{fibre_count_at, fibre_count_bound, generic_fibre_count};
pub use critical::critical_values;
pub use openness::{openness, OpennessVerdict};
pub use quasiopen::{quasiopen, PieceEvidence, QuasiopenReport};
pub use rank::rank_partition;
pub use report::{analyze, refine_stratum, Analysis, FibreReport, OracleCheck, RouteChoice};
pub use stratum::{AppResult, AppValue, Caveat, Certificate, PowerVerdict, Route, Stratum};
