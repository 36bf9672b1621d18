//! Proportional association analysis for categorical data.
//!
//! The library computes the association matrix `γ(Y|X)` (the expected
//! confusion matrix of proportional prediction), the association vector
//! `Θ`, and weighted association degrees `τ_α`, and builds on them for
//! variable equivalence, feature selection with and without a response,
//! prediction validation and bootstrap intervals.
//!
//! ```
//! use catassoc::{association, Dataset, MissingPolicy, WeightScheme};
//!
//! let csv = "x,y\na,1\na,1\nb,2\nb,1\n";
//! let ds = Dataset::from_csv_reader(csv.as_bytes(), MissingPolicy::DropRow).unwrap();
//! let joint = ds.contingency(&["x"], "y").unwrap().to_joint::<f64>().unwrap();
//! let tau = association::tau_of(&joint, &WeightScheme::Gk).unwrap();
//! assert!((tau - association::gk_tau_direct(&joint).unwrap()).abs() < 1e-12);
//! ```

pub mod association;
pub mod basis;
pub mod cli;
pub mod dataset;
pub mod equivalence;
mod error;
pub mod fixtures;
pub mod predict;
pub mod report;
pub mod resample;
pub mod scalar;
pub mod selection;
pub mod simgen;
mod table;

pub use association::{
    AssociationMatrix, AssociationReport, AssociationVector, GiniStats, WeightScheme, WeightVector,
};
pub use basis::{BasisConfig, BasisReport, EpValue};
pub use dataset::{CompositeVariable, Dataset, MissingPolicy, Variable};
pub use equivalence::EquivalenceReport;
pub use error::{Error, Result};
pub use predict::{ConfusionMatrix, SplitConfig, ValidationReport};
pub use resample::{BootstrapConfig, BootstrapResult};
pub use scalar::Scalar;
pub use selection::{SelectionConfig, SelectionTrace, TieBreak};
pub use table::{ContingencyTable, JointDistribution, ProbabilityTable};
