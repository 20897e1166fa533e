pub mod error;
pub mod exact;

pub use error::{Error, Result};
pub use exact::{CScalar, Field, Matrix, Scalar, Strategy, Subspace};
pub mod reps;

pub use reps::{build, LieRep, RepSpec};
pub mod curvature;

pub use curvature::{pspace, rspace, CurvTensor, PMap, PSpaceResult, RSpaceResult};
pub mod complex;

pub use complex::{build_complex, highest_vector, obstruction_value, ComplexCase, ComplexRep, HighestVector};
pub mod lorentz;

pub use lorentz::{assemble, LorentzCurv, WittFrame};
pub mod report;
pub use report::{verify_row, verify_table, NamedCheck, RMode, Report, RowOptions, TableReport};
