//! Closed forms, inequalities and desk-scale experiments over the counts.
//!
//! Every comparison is done in exact integers. Inequalities with fractional
//! exponents are raised to a common power first.

mod formulas;
mod logconvex;
mod plp;
mod unimodal;

pub use formulas::{lemma2_values, thm1_values, ClosedFormReport, ClosedFormRow, Formula, Source};
pub use logconvex::{
    item_verdict, logconvex_check, logconvex_sides, logconvex_threshold, slc_sufficient_check,
    slc_sufficient_threshold, threshold_report, LogConvexItem, ThresholdRow,
};
pub use plp::{
    dominance_scan, erectible_census, plp_evaluate, plp_scan, DominanceReport, ErectibleCensus, PlpScanReport,
    PlpVerdict, DOMINANCE_MAX_N, PLP_MAX_N,
};
pub use unimodal::{dukes_prefix_check, PrefixChain, PrefixReport};
