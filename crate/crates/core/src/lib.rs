//! Quaternary linear codes whose Gray images have the parameters of binary
//! Reed-Muller codes.
//!
//! - [`z4`]: Z4 and binary words, Lee weight, the Gray map.
//! - [`linalg`]: generator matrices, standard form, membership, enumeration.
//! - [`codes`]: Plotkin doubling, the `LRM(r, m)` family, binary `RM(r, m)`.
//! - [`analysis`]: minimum distance, weight distributions, image linearity,
//!   parameter reports.
//! - [`format`]: the `Z4CODE v1` text format.
//! - [`cli`]: the command-line interface.
//!
//! ```
//! use z4rm::analysis::{verify_lrm, SweepOptions};
//! use z4rm::codes::{OverrideTable, RmOrder};
//!
//! let order = RmOrder::new(2, 4).unwrap();
//! let report = verify_lrm(order, &OverrideTable::new(), &SweepOptions::default()).unwrap();
//! assert!(report.pass);
//! ```

pub mod analysis;
pub mod cli;
pub mod codes;
pub mod error;
pub mod format;
pub mod linalg;
pub mod z4;

pub use codes::{lrm, lrm_params, plotkin, rm_binary, CodeParams, OverrideTable, RmOrder, Z4Code};
pub use error::{Error, Result};
pub use linalg::{GeneratorMatrix, StandardForm};
pub use z4::{BitWord, Z4Word};
