pub mod bounds;
pub mod certify;
pub mod cli;
pub mod coeffs;
pub mod constants;
pub mod error;
pub mod gauss;
pub mod oracle;
pub mod parallel;
pub mod tilt;
