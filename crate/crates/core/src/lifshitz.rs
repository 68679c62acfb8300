//! Nonretarded Hamaker constant of two materials across a third medium.
//!
//! Two-term approximation: a zero-frequency (entropic) term from the static
//! permittivity contrasts and a dispersion term from the visible refractive
//! indices with a single principal absorption frequency:
//!
//! ```text
//! A_H = (3/4) k_B T  (e1-e3)/(e1+e3) (e2-e3)/(e2+e3)
//!     + (3 h nu_e / 8 sqrt(2)) (n1^2-n3^2)(n2^2-n3^2)
//!       / [ s1 s2 (s1 + s2) ],   s_i = sqrt(n_i^2 + n3^2)
//! ```
//!
//! Retardation corrections, electrolyte screening of the zero-frequency term
//! and anisotropy are out of scope.

use crate::constants::{BOLTZMANN, DEFAULT_ABSORPTION_FREQUENCY, PLANCK};
use crate::materials::MaterialOptics;
use crate::{Error, Result};

/// A Hamaker constant split into its two terms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HamakerResult {
    /// Total Hamaker constant, J. Exactly `entropic_term + dispersive_term`.
    pub total: f64,
    /// The k_B T (zero-frequency) term, J.
    pub entropic_term: f64,
    /// The h nu_e (dispersion) term, J.
    pub dispersive_term: f64,
    /// Temperature used, K.
    pub temperature: f64,
}

/// Hamaker constant with the shared default absorption frequency.
pub fn hamaker_constant(
    m1: &MaterialOptics,
    m2: &MaterialOptics,
    medium: &MaterialOptics,
    temperature: f64,
) -> Result<HamakerResult> {
    hamaker_constant_with_frequency(m1, m2, medium, temperature, DEFAULT_ABSORPTION_FREQUENCY)
}

/// Hamaker constant with an explicit absorption frequency.
///
/// The two-term expression carries a single nu_e even when the materials
/// differ, so it is a per-computation parameter rather than being read from
/// the three [`MaterialOptics`] records.
pub fn hamaker_constant_with_frequency(
    m1: &MaterialOptics,
    m2: &MaterialOptics,
    medium: &MaterialOptics,
    temperature: f64,
    nu_e: f64,
) -> Result<HamakerResult> {
    if !(temperature > 0.0) {
        return Err(Error::Domain(format!(
            "temperature must be > 0 K, got {temperature}"
        )));
    }
    if !(nu_e > 0.0) {
        return Err(Error::Domain(format!(
            "absorption frequency must be > 0 Hz, got {nu_e}"
        )));
    }
    for m in [m1, m2, medium] {
        if let Err((field, message)) = m.validate() {
            return Err(Error::Domain(format!("{}: {field}: {message}", m.name)));
        }
    }

    let (e1, e2, e3) = (
        m1.static_permittivity,
        m2.static_permittivity,
        medium.static_permittivity,
    );
    // Contrast product grouped first so the result is exactly symmetric in
    // the two materials.
    let entropic =
        0.75 * BOLTZMANN * temperature * (((e1 - e3) / (e1 + e3)) * ((e2 - e3) / (e2 + e3)));

    let (n1s, n2s, n3s) = (
        m1.refractive_index * m1.refractive_index,
        m2.refractive_index * m2.refractive_index,
        medium.refractive_index * medium.refractive_index,
    );
    let s1 = (n1s + n3s).sqrt();
    let s2 = (n2s + n3s).sqrt();
    let dispersive = 3.0 * PLANCK * nu_e / (8.0 * std::f64::consts::SQRT_2)
        * ((n1s - n3s) * (n2s - n3s))
        / (s1 * s2 * (s1 + s2));

    Ok(HamakerResult {
        total: entropic + dispersive,
        entropic_term: entropic,
        dispersive_term: dispersive,
        temperature,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::DEFAULT_TEMPERATURE;
    use crate::materials::builtin_catalogue;

    fn mat(name: &str) -> MaterialOptics {
        builtin_catalogue().get(name).unwrap().clone()
    }

    #[test]
    fn diamond_silica_vacuum() {
        let a = hamaker_constant(
            &mat("diamond"),
            &mat("fused_silica"),
            &mat("vacuum"),
            294.0,
        )
        .unwrap();
        assert!((a.total - 1.30e-19).abs() / 1.30e-19 < 0.20, "{:e}", a.total);
        assert_eq!(a.total, a.entropic_term + a.dispersive_term);
    }

    #[test]
    fn diamond_silica_water_and_ipa() {
        let d = mat("diamond");
        let s = mat("fused_silica");
        let w = hamaker_constant(&d, &s, &mat("water"), 294.0).unwrap();
        assert!((w.total - 2.8e-20).abs() / 2.8e-20 < 0.25, "{:e}", w.total);
        let i = hamaker_constant(&d, &s, &mat("ipa"), 294.0).unwrap();
        assert!((i.total - 1.6e-20).abs() / 1.6e-20 < 0.30, "{:e}", i.total);
    }

    #[test]
    fn zero_contrast_is_exactly_zero() {
        let m = mat("water");
        let a = hamaker_constant(&m, &m, &m, 300.0).unwrap();
        assert_eq!(a.total, 0.0);
    }

    #[test]
    fn symmetry_in_the_two_materials() {
        let a = hamaker_constant(
            &mat("diamond"),
            &mat("fused_silica"),
            &mat("water"),
            DEFAULT_TEMPERATURE,
        )
        .unwrap();
        let b = hamaker_constant(
            &mat("fused_silica"),
            &mat("diamond"),
            &mat("water"),
            DEFAULT_TEMPERATURE,
        )
        .unwrap();
        assert_eq!(a.total, b.total);
    }

    #[test]
    fn entropic_scales_linearly_with_temperature() {
        let d = mat("diamond");
        let s = mat("fused_silica");
        let v = mat("vacuum");
        let a = hamaker_constant(&d, &s, &v, 150.0).unwrap();
        let b = hamaker_constant(&d, &s, &v, 300.0).unwrap();
        assert!((b.entropic_term - 2.0 * a.entropic_term).abs() < 1e-30);
        assert_eq!(a.dispersive_term, b.dispersive_term);
    }

    #[test]
    fn sign_rule_one_denser_one_rarer() {
        // n1 > n3 > n2 makes the dispersion term negative.
        let dense = MaterialOptics::new("dense", 5.0, 2.0);
        let rare = MaterialOptics::new("rare", 1.2, 1.1);
        let medium = MaterialOptics::new("mid", 2.0, 1.5);
        let a = hamaker_constant(&dense, &rare, &medium, 294.0).unwrap();
        assert!(a.dispersive_term < 0.0);
    }

    #[test]
    fn non_positive_temperature_is_domain_error() {
        let d = mat("diamond");
        assert!(matches!(
            hamaker_constant(&d, &d, &d, 0.0),
            Err(Error::Domain(_))
        ));
    }
}
