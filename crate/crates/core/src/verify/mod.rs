//! Executable checks of the edge-count, spectral and connectivity statements
//! and of the family lemmas behind them, plus sampling, the minimal-packing
//! hunt and CSV sweeps.
//!
//! Every check yields a [`VerificationRecord`]. Failed hypotheses make a
//! record vacuously consistent; spectral differences within
//! [`crate::spectral::SPECTRAL_MARGIN`] are indeterminate, and spectral
//! equality is only ever decided by isomorphism.

mod checks;
mod hunt;
mod record;
mod sample;
mod sweep;

pub use checks::{
    check_bracket_lemmas, check_connectivity_extremality, check_connectivity_theorem,
    check_edge_theorem, check_family_extremality, check_spectral_theorem, check_split_dominance,
    connectivity_hypotheses, edge_threshold, small_cut_violation, spectral_threshold,
    BracketVariant, ExtremalityReport,
};
pub use hunt::{search_minimal_packing, HuntReport};
pub use record::{csv_field, exit_code, Margin, StatementId, VerificationRecord, Verdict};
pub use sample::{
    connected_gnp, gnp, graph_with_min_degree, sample_connectivity_class,
    sample_connectivity_class_with, SampleStream, SAMPLER_ATTEMPTS_PER_SAMPLE,
};
pub use sweep::{
    admissible, grid_points, point_seed, render_csv, run_sweep, SweepConfig, SweepMode,
    SweepReport,
};
