//! Truncated-normal model of the local gap between bonded surfaces and
//! expectations of the van der Waals interface energy under it.

use statrs::function::erf::erf;

use crate::quad::adaptive_simpson;
use crate::{Error, Result};

use std::f64::consts::{PI, SQRT_2};

/// Relative tolerance for the moment quadratures.
pub const MOMENT_REL_TOL: f64 = 1e-6;

/// Location of the calibrated gap distribution as a fraction of `d_max`.
///
/// Together with [`CALIBRATED_SCALE_FRACTION`] this pins the shape of the
/// default truncated normal. The two constants come from a least-squares fit
/// of the energy moments (mean 5.4 mJ/m², standard deviation 10.8 mJ/m² at
/// A_H = 1.30e-19 J) at the reference roughness pair 0.61/0.37 nm; expressing
/// them as fractions of `d_max` lets the same shape scale with roughness.
pub const CALIBRATED_LOCATION_FRACTION: f64 = 0.7858;

/// Scale of the calibrated gap distribution as a fraction of `d_max`.
pub const CALIBRATED_SCALE_FRACTION: f64 = 0.2396;

/// Truncated normal distribution of the local surface separation `d`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeparationDistribution {
    /// Lower truncation, m.
    pub d_min: f64,
    /// Upper truncation, m.
    pub d_max: f64,
    /// Mean of the underlying (untruncated) normal, m.
    pub location: f64,
    /// Standard deviation of the underlying normal, m.
    pub scale: f64,
}

impl SeparationDistribution {
    pub fn new(d_min: f64, d_max: f64, location: f64, scale: f64) -> Result<Self> {
        if !(d_min > 0.0 && d_min < d_max) {
            return Err(Error::Domain(format!(
                "require 0 < d_min < d_max, got d_min={d_min}, d_max={d_max}"
            )));
        }
        if !(scale > 0.0) {
            return Err(Error::Domain(format!("scale must be > 0, got {scale}")));
        }
        if !location.is_finite() {
            return Err(Error::Domain(format!("location must be finite, got {location}")));
        }
        Ok(Self {
            d_min,
            d_max,
            location,
            scale,
        })
    }

    fn z(&self, d: f64) -> f64 {
        (d - self.location) / self.scale
    }

    /// Smallest z^2/2 over the support; subtracted from the exponent so the
    /// quadrature weights stay in [0, 1] even for extreme parameters.
    fn log_weight_offset(&self) -> f64 {
        let nearest = self.location.clamp(self.d_min, self.d_max);
        let z = self.z(nearest);
        0.5 * z * z
    }

    fn weight(&self, d: f64, offset: f64) -> f64 {
        let z = self.z(d);
        (offset - 0.5 * z * z).exp()
    }

    /// Expectation of `f(d)` under the truncated normal, by adaptive
    /// quadrature at relative tolerance [`MOMENT_REL_TOL`].
    ///
    /// The integration interval is split at the mode so that sharply peaked
    /// (small-scale) distributions always have their peak on a panel endpoint.
    pub fn expect<F: Fn(f64) -> f64 + Copy>(&self, f: F) -> Result<f64> {
        let offset = self.log_weight_offset();
        let numer = self.split_integral(|d| f(d) * self.weight(d, offset))?;
        let denom = self.split_integral(|d| self.weight(d, offset))?;
        if denom <= 0.0 || !denom.is_finite() {
            return Err(Error::NonConvergence(
                "truncated-normal normalization vanished".into(),
            ));
        }
        Ok(numer / denom)
    }

    fn split_integral<F: Fn(f64) -> f64>(&self, f: F) -> Result<f64> {
        let split = self.location.clamp(self.d_min, self.d_max);
        if split > self.d_min && split < self.d_max {
            Ok(adaptive_simpson(&f, self.d_min, split, MOMENT_REL_TOL)?
                + adaptive_simpson(&f, split, self.d_max, MOMENT_REL_TOL)?)
        } else {
            adaptive_simpson(&f, self.d_min, self.d_max, MOMENT_REL_TOL)
        }
    }

    fn phi(x: f64) -> f64 {
        0.5 * (1.0 + erf(x / SQRT_2))
    }

    /// P(d <= threshold), exactly 0 at `d_min` and 1 at `d_max`.
    pub fn cdf(&self, threshold: f64) -> f64 {
        if threshold <= self.d_min {
            return 0.0;
        }
        if threshold >= self.d_max {
            return 1.0;
        }
        let lo = Self::phi(self.z(self.d_min));
        let hi = Self::phi(self.z(self.d_max));
        let denom = hi - lo;
        if denom > 1e-15 {
            ((Self::phi(self.z(threshold)) - lo) / denom).clamp(0.0, 1.0)
        } else {
            // Mass concentrated in a far tail; the erf difference cancels.
            let offset = self.log_weight_offset();
            let num = adaptive_simpson(
                |d| self.weight(d, offset),
                self.d_min,
                threshold,
                MOMENT_REL_TOL,
            );
            let den = self.split_integral(|d| self.weight(d, offset));
            match (num, den) {
                (Ok(n), Ok(d)) if d > 0.0 => (n / d).clamp(0.0, 1.0),
                _ => f64::NAN,
            }
        }
    }
}

/// Policy for choosing the underlying normal's (location, scale) from
/// roughness.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SeparationPolicy {
    /// Calibrated shape: location and scale are fixed fractions of `d_max`
    /// ([`CALIBRATED_LOCATION_FRACTION`], [`CALIBRATED_SCALE_FRACTION`]).
    /// This is the default and is what the shear pipeline uses.
    CalibratedShape {
        location_fraction: f64,
        scale_fraction: f64,
    },
    /// Truncated half-normal: location 0, scale equal to the top-surface RMS.
    /// Reproduces the reference mean separation of ~4.8 Å but not the energy
    /// moments; kept for comparison.
    HalfNormal,
    /// Explicit (location, scale) in meters, e.g. from [`calibrate`].
    Explicit { location: f64, scale: f64 },
}

impl Default for SeparationPolicy {
    fn default() -> Self {
        SeparationPolicy::CalibratedShape {
            location_fraction: CALIBRATED_LOCATION_FRACTION,
            scale_fraction: CALIBRATED_SCALE_FRACTION,
        }
    }
}

/// Signed van der Waals interaction energy per unit area, J/m²:
/// `W = -A_H / (12 pi d^2)`. Negative (adhesive) for positive Hamaker.
pub fn vdw_energy(hamaker: f64, separation: f64) -> Result<f64> {
    if !(separation > 0.0) {
        return Err(Error::Domain(format!(
            "separation must be > 0 m, got {separation}"
        )));
    }
    Ok(-hamaker / (12.0 * PI * separation * separation))
}

/// Builds the gap distribution from the two RMS roughnesses with the default
/// policy. `d_max = sqrt(2) * (rms_top + rms_bottom)`.
pub fn separation_from_roughness(
    rms_top: f64,
    rms_bottom: f64,
    d_min: f64,
) -> Result<SeparationDistribution> {
    separation_from_roughness_with(rms_top, rms_bottom, d_min, SeparationPolicy::default())
}

/// Builds the gap distribution with an explicit policy.
pub fn separation_from_roughness_with(
    rms_top: f64,
    rms_bottom: f64,
    d_min: f64,
    policy: SeparationPolicy,
) -> Result<SeparationDistribution> {
    if !(rms_top > 0.0 && rms_bottom > 0.0) {
        return Err(Error::Domain(format!(
            "rms values must be > 0 m, got {rms_top} and {rms_bottom}"
        )));
    }
    if !(d_min > 0.0) {
        return Err(Error::Domain(format!("d_min must be > 0 m, got {d_min}")));
    }
    let d_max = SQRT_2 * (rms_top + rms_bottom);
    if d_max <= d_min {
        return Err(Error::DegenerateInterface(format!(
            "sqrt(2)*(rms_top + rms_bottom) = {d_max:.3e} m does not exceed d_min = {d_min:.3e} m"
        )));
    }
    let (location, scale) = match policy {
        SeparationPolicy::CalibratedShape {
            location_fraction,
            scale_fraction,
        } => (location_fraction * d_max, scale_fraction * d_max),
        SeparationPolicy::HalfNormal => (0.0, rms_top),
        SeparationPolicy::Explicit { location, scale } => (location, scale),
    };
    SeparationDistribution::new(d_min, d_max, location, scale)
}

/// E[d] of the truncated normal, by the same adaptive quadrature as the
/// energy moments.
pub fn mean_separation(dist: &SeparationDistribution) -> Result<f64> {
    dist.expect(|d| d)
}

/// First and second moments of the van der Waals energy under a gap
/// distribution.
#[derive(Debug, Clone, PartialEq)]
pub struct EnergyMoments {
    /// |E[W]|, J/m².
    pub mean_energy: f64,
    /// sqrt(E[W^2] - E[W]^2), J/m².
    pub std_energy: f64,
    /// E[W] with its sign (negative for adhesive interfaces), J/m².
    pub signed_mean_energy: f64,
    /// Hamaker constant the moments were computed with, J.
    pub hamaker_used: f64,
    pub distribution_used: SeparationDistribution,
}

/// Computes the energy moments by adaptive quadrature.
///
/// The shape integrals E[(12 pi d^2)^-1] and E[(12 pi d^2)^-2] are computed
/// once and scaled by the Hamaker constant afterwards, so scaling `hamaker`
/// by a factor scales both moments exactly.
pub fn energy_moments(hamaker: f64, dist: &SeparationDistribution) -> Result<EnergyMoments> {
    let g = |d: f64| 1.0 / (12.0 * PI * d * d);
    let i1 = dist.expect(g)?;
    let i2 = dist.expect(|d| {
        let v = g(d);
        v * v
    })?;
    let signed_mean = -hamaker * i1;
    let variance_shape = (i2 - i1 * i1).max(0.0);
    let std_energy = hamaker.abs() * variance_shape.sqrt();
    Ok(EnergyMoments {
        mean_energy: signed_mean.abs(),
        std_energy,
        signed_mean_energy: signed_mean,
        hamaker_used: hamaker,
        distribution_used: *dist,
    })
}

/// P(d <= threshold) under the truncated normal.
pub fn proximity_fraction(dist: &SeparationDistribution, threshold: f64) -> Result<f64> {
    if !(threshold > 0.0) {
        return Err(Error::Domain(format!(
            "threshold must be > 0 m, got {threshold}"
        )));
    }
    Ok(dist.cdf(threshold))
}

/// Calibration targets for [`calibrate`]: the mean separation and the two
/// energy moments the fitted distribution should reproduce.
#[derive(Debug, Clone, Copy)]
pub struct CalibrationTargets {
    /// Target E[d], m.
    pub mean_separation: f64,
    /// Target |E[W]|, J/m².
    pub mean_energy: f64,
    /// Target sqrt(Var[W]), J/m².
    pub std_energy: f64,
}

/// Result of a least-squares calibration.
#[derive(Debug, Clone, Copy)]
pub struct CalibrationFit {
    pub location: f64,
    pub scale: f64,
    /// Relative residuals (model - target)/target for
    /// [mean_separation, mean_energy, std_energy].
    pub residuals: [f64; 3],
    /// Sum of squared relative residuals at the fit.
    pub objective: f64,
}

/// Fits (location, scale) by least squares on the relative residuals of the
/// three targets, over the truncation interval implied by the roughness pair.
///
/// Targets with `mean_energy` above the maximum attainable |W(d_min)| (or a
/// mean separation outside the truncation interval) are rejected as
/// infeasible with [`Error::NonConvergence`].
pub fn calibrate(
    hamaker: f64,
    rms_top: f64,
    rms_bottom: f64,
    d_min: f64,
    targets: CalibrationTargets,
) -> Result<CalibrationFit> {
    let base = separation_from_roughness(rms_top, rms_bottom, d_min)?;
    let (lo, hi) = (base.d_min, base.d_max);
    for (name, v) in [
        ("mean_separation", targets.mean_separation),
        ("mean_energy", targets.mean_energy),
        ("std_energy", targets.std_energy),
    ] {
        if !(v > 0.0 && v.is_finite()) {
            return Err(Error::Domain(format!(
                "calibration target {name} must be finite and > 0, got {v}"
            )));
        }
    }
    let w_min = vdw_energy(hamaker, lo)?.abs();
    if targets.mean_energy > w_min {
        return Err(Error::NonConvergence(format!(
            "infeasible target: mean energy {:.3e} J/m2 exceeds |W(d_min)| = {:.3e} J/m2",
            targets.mean_energy, w_min
        )));
    }
    if targets.mean_separation <= lo || targets.mean_separation >= hi {
        return Err(Error::NonConvergence(format!(
            "infeasible target: mean separation {:.3e} m outside ({:.3e}, {:.3e}) m",
            targets.mean_separation, lo, hi
        )));
    }

    let residuals = |location: f64, scale: f64| -> Result<[f64; 3]> {
        let dist = SeparationDistribution::new(lo, hi, location, scale)?;
        let mean = mean_separation(&dist)?;
        let moments = energy_moments(hamaker, &dist)?;
        Ok([
            (mean - targets.mean_separation) / targets.mean_separation,
            (moments.mean_energy - targets.mean_energy) / targets.mean_energy,
            (moments.std_energy - targets.std_energy) / targets.std_energy,
        ])
    };
    let objective = |p: [f64; 2]| -> f64 {
        let location = p[0];
        let scale = p[1].exp();
        match residuals(location, scale) {
            Ok(r) => r.iter().map(|x| x * x).sum(),
            Err(_) => f64::INFINITY,
        }
    };

    let span = hi - lo;
    let mut best: Option<([f64; 2], f64)> = None;
    for loc0 in [lo + 0.25 * span, lo + 0.5 * span, lo + 0.75 * span, hi] {
        for scale0 in [0.1 * span, 0.25 * span, 0.5 * span] {
            let (p, v) = nelder_mead(&objective, [loc0, scale0.ln()], 0.1 * span, 400);
            if best.map_or(true, |(_, bv)| v < bv) {
                best = Some((p, v));
            }
        }
    }
    let (p, v) = best.ok_or_else(|| Error::NonConvergence("calibration found no candidate".into()))?;
    if !v.is_finite() {
        return Err(Error::NonConvergence(
            "calibration objective did not evaluate".into(),
        ));
    }
    let location = p[0];
    let scale = p[1].exp();
    let res = residuals(location, scale)?;
    Ok(CalibrationFit {
        location,
        scale,
        residuals: res,
        objective: v,
    })
}

/// Minimal 2-D Nelder-Mead; returns the best vertex and its value.
fn nelder_mead<F: Fn([f64; 2]) -> f64>(
    f: &F,
    start: [f64; 2],
    step: f64,
    max_iter: usize,
) -> ([f64; 2], f64) {
    let mut simplex = vec![
        start,
        [start[0] + step, start[1]],
        [start[0], start[1] + 0.5],
    ];
    let mut values: Vec<f64> = simplex.iter().map(|&p| f(p)).collect();
    for _ in 0..max_iter {
        let mut order: Vec<usize> = (0..3).collect();
        order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
        let (b, m, w) = (order[0], order[1], order[2]);
        if (values[w] - values[b]).abs() <= 1e-14 * (1.0 + values[b].abs()) {
            break;
        }
        let centroid = [
            0.5 * (simplex[b][0] + simplex[m][0]),
            0.5 * (simplex[b][1] + simplex[m][1]),
        ];
        let reflect = [
            centroid[0] + (centroid[0] - simplex[w][0]),
            centroid[1] + (centroid[1] - simplex[w][1]),
        ];
        let fr = f(reflect);
        if fr < values[b] {
            let expand = [
                centroid[0] + 2.0 * (centroid[0] - simplex[w][0]),
                centroid[1] + 2.0 * (centroid[1] - simplex[w][1]),
            ];
            let fe = f(expand);
            if fe < fr {
                simplex[w] = expand;
                values[w] = fe;
            } else {
                simplex[w] = reflect;
                values[w] = fr;
            }
        } else if fr < values[m] {
            simplex[w] = reflect;
            values[w] = fr;
        } else {
            let contract = [
                centroid[0] + 0.5 * (simplex[w][0] - centroid[0]),
                centroid[1] + 0.5 * (simplex[w][1] - centroid[1]),
            ];
            let fc = f(contract);
            if fc < values[w] {
                simplex[w] = contract;
                values[w] = fc;
            } else {
                for i in 0..3 {
                    if i != b {
                        simplex[i] = [
                            0.5 * (simplex[i][0] + simplex[b][0]),
                            0.5 * (simplex[i][1] + simplex[b][1]),
                        ];
                        values[i] = f(simplex[i]);
                    }
                }
            }
        }
    }
    let mut best = 0;
    for i in 1..3 {
        if values[i] < values[best] {
            best = i;
        }
    }
    (simplex[best], values[best])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::HYDROXYL_FLOOR;

    const RMS_TOP: f64 = 0.61e-9;
    const RMS_BOTTOM: f64 = 0.37e-9;
    const A_REF: f64 = 1.30e-19;

    #[test]
    fn vdw_energy_reference_value() {
        // Hand check: 1.30e-19 / (12*pi*(4.8e-10)^2) = 1.4967e-2.
        let w = vdw_energy(A_REF, 4.8e-10).unwrap();
        assert!((w + 1.4967e-2).abs() < 1e-5, "{w}");
    }

    #[test]
    fn vdw_energy_zero_hamaker_and_scaling() {
        assert_eq!(vdw_energy(0.0, 1e-9).unwrap(), 0.0);
        let w1 = vdw_energy(A_REF, 1e-9).unwrap();
        let w2 = vdw_energy(A_REF, 2e-9).unwrap();
        assert!((w1 / w2 - 4.0).abs() < 1e-12);
    }

    #[test]
    fn vdw_energy_rejects_nonpositive_separation() {
        assert!(matches!(vdw_energy(A_REF, 0.0), Err(Error::Domain(_))));
    }

    #[test]
    fn d_max_from_roughness() {
        let d = separation_from_roughness(RMS_TOP, RMS_BOTTOM, HYDROXYL_FLOOR).unwrap();
        assert!((d.d_max - 1.386e-9).abs() < 1e-12, "{:e}", d.d_max);
    }

    #[test]
    fn degenerate_roughness_is_an_error() {
        let r = 0.03e-9;
        assert!(matches!(
            separation_from_roughness(r, r, 0.096e-9),
            Err(Error::DegenerateInterface(_))
        ));
    }

    #[test]
    fn half_normal_policy_reproduces_reference_mean_separation() {
        let d = separation_from_roughness_with(
            RMS_TOP,
            RMS_BOTTOM,
            HYDROXYL_FLOOR,
            SeparationPolicy::HalfNormal,
        )
        .unwrap();
        let mean = mean_separation(&d).unwrap();
        assert!(
            (mean - 4.8e-10).abs() / 4.8e-10 < 0.10,
            "half-normal mean separation {mean:e}"
        );
    }

    #[test]
    fn mean_separation_degenerate_and_symmetric_limits() {
        let d0 = 0.7e-9;
        let point = SeparationDistribution::new(0.1e-9, 1.4e-9, d0, 1e-12).unwrap();
        let m = mean_separation(&point).unwrap();
        assert!((m - d0).abs() < 1e-12, "{m:e}");

        let mid = SeparationDistribution::new(0.1e-9, 1.4e-9, 0.75e-9, 1e-7).unwrap();
        let m = mean_separation(&mid).unwrap();
        assert!((m - 0.75e-9).abs() / 0.75e-9 < 1e-6, "{m:e}");
    }

    #[test]
    fn mean_separation_within_envelope() {
        let d = separation_from_roughness(RMS_TOP, RMS_BOTTOM, HYDROXYL_FLOOR).unwrap();
        let m = mean_separation(&d).unwrap();
        assert!(m >= d.d_min && m <= d.d_max);
    }

    #[test]
    fn calibrated_moments_match_reference() {
        let d = separation_from_roughness(RMS_TOP, RMS_BOTTOM, HYDROXYL_FLOOR).unwrap();
        let m = energy_moments(A_REF, &d).unwrap();
        assert!(
            (m.mean_energy - 5.4e-3).abs() / 5.4e-3 < 0.02,
            "mu_w {:e}",
            m.mean_energy
        );
        assert!(
            (m.std_energy - 1.08e-2).abs() / 1.08e-2 < 0.02,
            "sigma_w {:e}",
            m.std_energy
        );
        assert!(m.signed_mean_energy < 0.0);
    }

    #[test]
    fn moments_envelope() {
        let d = separation_from_roughness(RMS_TOP, RMS_BOTTOM, HYDROXYL_FLOOR).unwrap();
        let m = energy_moments(A_REF, &d).unwrap();
        let w_min = vdw_energy(A_REF, d.d_min).unwrap().abs();
        let w_max = vdw_energy(A_REF, d.d_max).unwrap().abs();
        assert!(m.mean_energy >= w_max && m.mean_energy <= w_min);
    }

    #[test]
    fn moments_degenerate_point_distribution() {
        let d0 = 0.6e-9;
        let point = SeparationDistribution::new(0.1e-9, 1.4e-9, d0, 1e-12).unwrap();
        let m = energy_moments(A_REF, &point).unwrap();
        let w = vdw_energy(A_REF, d0).unwrap().abs();
        // Numerator and denominator quadrature errors do not cancel exactly,
        // so the ratio is a few times MOMENT_REL_TOL off.
        assert!(
            (m.mean_energy - w).abs() / w < 1e-4,
            "mean {:e} vs point value {:e}",
            m.mean_energy,
            w
        );
        // First-order propagation: sigma_W = |W'(d0)| * scale = 2 w scale / d0.
        let sigma_expected = 2.0 * w * 1e-12 / d0;
        assert!(
            (m.std_energy - sigma_expected).abs() / sigma_expected < 0.1,
            "sigma {:e} vs {:e}",
            m.std_energy,
            sigma_expected
        );
    }

    #[test]
    fn moments_scale_exactly_with_hamaker() {
        let d = separation_from_roughness(RMS_TOP, RMS_BOTTOM, HYDROXYL_FLOOR).unwrap();
        let m1 = energy_moments(A_REF, &d).unwrap();
        let m2 = energy_moments(2.0 * A_REF, &d).unwrap();
        assert_eq!(m2.mean_energy, 2.0 * m1.mean_energy);
        assert_eq!(m2.std_energy, 2.0 * m1.std_energy);
    }

    #[test]
    fn proximity_endpoints_and_ordering() {
        let d = separation_from_roughness(RMS_TOP, RMS_BOTTOM, HYDROXYL_FLOOR).unwrap();
        assert_eq!(proximity_fraction(&d, d.d_min).unwrap(), 0.0);
        assert_eq!(proximity_fraction(&d, d.d_max).unwrap(), 1.0);
        assert_eq!(proximity_fraction(&d, 2.0 * d.d_max).unwrap(), 1.0);
        let f25 = proximity_fraction(&d, 2.5e-10).unwrap();
        let f10 = proximity_fraction(&d, 1.0e-9).unwrap();
        assert!(f10 > f25, "f(10A)={f10} f(2.5A)={f25}");
    }

    #[test]
    fn calibrate_recovers_known_parameters() {
        let known = separation_from_roughness_with(
            RMS_TOP,
            RMS_BOTTOM,
            HYDROXYL_FLOOR,
            SeparationPolicy::Explicit {
                location: 0.9e-9,
                scale: 0.3e-9,
            },
        )
        .unwrap();
        let targets = CalibrationTargets {
            mean_separation: mean_separation(&known).unwrap(),
            mean_energy: energy_moments(A_REF, &known).unwrap().mean_energy,
            std_energy: energy_moments(A_REF, &known).unwrap().std_energy,
        };
        let fit = calibrate(A_REF, RMS_TOP, RMS_BOTTOM, HYDROXYL_FLOOR, targets).unwrap();
        assert!(
            (fit.location - 0.9e-9).abs() / 0.9e-9 < 0.01,
            "location {:e}",
            fit.location
        );
        assert!(
            (fit.scale - 0.3e-9).abs() / 0.3e-9 < 0.01,
            "scale {:e}",
            fit.scale
        );
    }

    #[test]
    fn calibrate_rejects_infeasible_energy_target() {
        let w_min = vdw_energy(A_REF, HYDROXYL_FLOOR).unwrap().abs();
        let targets = CalibrationTargets {
            mean_separation: 4.8e-10,
            mean_energy: 2.0 * w_min,
            std_energy: 1.08e-2,
        };
        assert!(matches!(
            calibrate(A_REF, RMS_TOP, RMS_BOTTOM, HYDROXYL_FLOOR, targets),
            Err(Error::NonConvergence(_))
        ));
    }
}
