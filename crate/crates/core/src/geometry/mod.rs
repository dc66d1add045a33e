//! Variety-level primitives: dimension, image closures, component
//! splitting, fibred powers, projective charts, fibre-dimension jump loci,
//! and the finite-field dimension oracle.

mod components;
mod dimension;
mod ffcount;
mod fibred;
mod jump;
mod mapspec;

pub use components::{split_components, Component, ComponentSet, PieceTag};
pub use dimension::dimension;
pub use ffcount::{count_points, ff_dim_estimate, suspect_hidden_component, ORACLE_PRIMES};
pub use fibred::{chart_expand, fibred_power, Chart};
pub use jump::fibre_jump_locus;
pub use mapspec::{image_closure, MapSpec};
