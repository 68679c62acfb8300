//! Physical constants, fixed at the 2019 SI exact values.

/// Boltzmann constant, J/K.
pub const BOLTZMANN: f64 = 1.380_649e-23;

/// Planck constant, J·s.
pub const PLANCK: f64 = 6.626_070_15e-34;

/// One electronvolt, J.
pub const ELECTRONVOLT: f64 = 1.602_176_634e-19;

/// Default ambient temperature, K (21 °C).
pub const DEFAULT_TEMPERATURE: f64 = 294.15;

/// Shared principal UV electronic absorption frequency, Hz.
///
/// The two-term Hamaker expression carries a single absorption frequency even
/// when the three materials differ; this is the default used unless a caller
/// overrides it.
pub const DEFAULT_ABSORPTION_FREQUENCY: f64 = 3.0e15;

/// Minimum surface separation, m: the length of a single hydroxyl group.
pub const HYDROXYL_FLOOR: f64 = 0.096e-9;
