//! Rigorous interval certification of the closed-form inequalities.

pub mod bgh;
pub mod certificate;
pub mod checks;
pub mod forms;
pub mod functions;
pub mod interval;
pub mod jet;
pub mod prover;
pub mod rat;
pub mod series;
pub mod taylor;
pub mod real;

pub use interval::Interval;
pub use jet::Jet;
pub use rat::Rat;
pub use real::Real;
pub use functions::{interval_eval, FunctionId};
pub use certificate::{Certificate, Verdict};
pub use checks::{box_certify_2d, run_check, run_named_checks, CHECK_IDS};
pub use prover::{bound_extrema, prove_sign, prove_threshold, Sign};
