//! Predicts the adhesion shear strength of direct-bonded material pairs from
//! material optical properties and measured surface roughness.
//!
//! The pipeline: a nonretarded Hamaker constant from the two-term Lifshitz
//! approximation ([`lifshitz`]), a truncated-normal model of the local gap
//! between the bonded surfaces ([`interface`]), roughness statistics from AFM
//! height maps ([`metrology`]), and shear-stress estimates from the lateral
//! variation of the van der Waals interface energy plus a molecular-bond upper
//! bound ([`shear`]). A brute-force rough-surface dragging oracle ([`oracle`])
//! cross-checks the analytic estimates.
//!
//! All library interfaces are strict SI (meters, Joules, Pascals, Kelvin, Hz).

pub mod constants;
pub mod error;
pub mod interface;
pub mod lifshitz;
pub mod materials;
pub mod metrology;
pub mod oracle;
pub mod quad;
pub mod shear;

pub use error::Error;
pub use interface::{EnergyMoments, SeparationDistribution, SeparationPolicy};
pub use lifshitz::HamakerResult;
pub use materials::{Catalogue, MaterialOptics};
pub use metrology::{HeightMap, SurfaceStats};
pub use oracle::{DragConfig, EnergyLandscape};
pub use shear::{BondSpec, Mechanism, ShearPrediction};

pub type Result<T> = std::result::Result<T, Error>;
