//! Brute-force drag oracle: slides one height map across another, evaluates
//! the mean van der Waals energy per unit area at each lateral offset, and
//! reads the shear stress off the resulting energy landscape.
//!
//! This is the reference implementation the statistical shear model is
//! checked against; it trades speed for directness (every pixel, every
//! offset).

use rayon::prelude::*;

use std::f64::consts::PI;

use crate::metrology::HeightMap;
use crate::{Error, Result};

/// Parameters of one drag sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DragConfig {
    /// Offset sampling step along x, m. Sub-pixel steps are honored by
    /// linear interpolation of the top surface.
    pub lateral_step: f64,
    /// Largest offset swept, m (inclusive; the sweep starts at 0).
    pub max_offset: f64,
    /// Rigid-body gap between the two mean planes, m.
    pub nominal_gap: f64,
    /// Hamaker constant, J.
    pub hamaker: f64,
    /// Hard floor on the local separation, m.
    pub d_min_clamp: f64,
}

impl DragConfig {
    fn validate(&self) -> Result<()> {
        if !(self.lateral_step > 0.0) {
            return Err(Error::Config(format!(
                "lateral_step must be > 0 m, got {}",
                self.lateral_step
            )));
        }
        if !(self.max_offset >= self.lateral_step) {
            return Err(Error::Config(format!(
                "max_offset must cover at least one step, got {}",
                self.max_offset
            )));
        }
        if !(self.d_min_clamp > 0.0) {
            return Err(Error::Config(format!(
                "d_min_clamp must be > 0 m, got {}",
                self.d_min_clamp
            )));
        }
        if !self.nominal_gap.is_finite() || !self.hamaker.is_finite() {
            return Err(Error::Config("gap and hamaker must be finite".into()));
        }
        Ok(())
    }
}

/// Mean interface energy per unit area as a function of lateral offset.
#[derive(Debug, Clone, PartialEq)]
pub struct EnergyLandscape {
    /// Offsets, m, ascending from 0.
    pub offsets: Vec<f64>,
    /// Signed mean energy at each offset, J/m².
    pub energies: Vec<f64>,
}

impl EnergyLandscape {
    /// Offset of the deepest (largest |energy|) point; first on ties.
    pub fn rest_offset(&self) -> f64 {
        let mut best = 0;
        for i in 1..self.energies.len() {
            if self.energies[i].abs() > self.energies[best].abs() {
                best = i;
            }
        }
        self.offsets[best]
    }
}

/// Gap that brings the surfaces into contact: the rigid-body gap at which the
/// closest point of the (top - bottom) field sits exactly at `d_min`.
pub fn contact_gap(top: &HeightMap, bottom: &HeightMap, d_min: f64) -> Result<f64> {
    if top.nx != bottom.nx || top.ny != bottom.ny {
        return Err(Error::Config(format!(
            "contact gap needs equal grids, got {}x{} vs {}x{}",
            top.nx, top.ny, bottom.nx, bottom.ny
        )));
    }
    if !(d_min > 0.0) {
        return Err(Error::Config(format!("d_min must be > 0 m, got {d_min}")));
    }
    let min_diff = top
        .heights
        .iter()
        .zip(&bottom.heights)
        .map(|(t, b)| t - b)
        .fold(f64::INFINITY, f64::min);
    Ok(d_min - min_diff)
}

/// Sweeps the top map across the bottom map along x and returns the energy
/// landscape.
///
/// The local separation at each pixel is
/// `d = nominal_gap + top(x + offset, y) - bottom(x, y)`, clamped from below
/// at `d_min_clamp`, and the energy density is `-A_H / (12 pi d^2)` averaged
/// over the overlap. Equal-size maps wrap periodically (both synthesized
/// surfaces are periodic by construction); a strictly smaller top map slides
/// over the bottom without wrapping.
pub fn energy_landscape(
    top: &HeightMap,
    bottom: &HeightMap,
    config: &DragConfig,
) -> Result<EnergyLandscape> {
    config.validate()?;
    if top.pitch != bottom.pitch {
        return Err(Error::Config(format!(
            "pitch mismatch: top {:.6e} m vs bottom {:.6e} m",
            top.pitch, bottom.pitch
        )));
    }
    let periodic = top.nx == bottom.nx && top.ny == bottom.ny;
    if !periodic && (top.nx > bottom.nx || top.ny > bottom.ny) {
        return Err(Error::Config(format!(
            "top map {}x{} must match or fit inside bottom map {}x{}",
            top.nx, top.ny, bottom.nx, bottom.ny
        )));
    }
    if !periodic {
        // Sliding without wrap: the interpolation stencil ix + shift + 1 must
        // stay inside the bottom grid at the largest offset.
        let room = (bottom.nx - top.nx) as f64 * top.pitch;
        if config.max_offset > room {
            return Err(Error::Config(format!(
                "max_offset {:.3e} m exceeds the sliding room {:.3e} m of the smaller top map",
                config.max_offset, room
            )));
        }
    }

    let n_offsets = (config.max_offset / config.lateral_step).floor() as usize + 1;
    let offsets: Vec<f64> = (0..n_offsets)
        .map(|i| i as f64 * config.lateral_step)
        .collect();

    let energies: Vec<f64> = offsets
        .par_iter()
        .map(|&offset| mean_energy_at_offset(top, bottom, config, offset, periodic))
        .collect::<Result<Vec<f64>>>()?;

    Ok(EnergyLandscape { offsets, energies })
}

fn mean_energy_at_offset(
    top: &HeightMap,
    bottom: &HeightMap,
    config: &DragConfig,
    offset: f64,
    periodic: bool,
) -> Result<f64> {
    let shift = offset / top.pitch;
    let i0 = shift.floor() as usize;
    let frac = shift - shift.floor();
    let prefactor = 1.0 / (12.0 * PI);

    let mut sum = 0.0;
    let ny = top.ny;
    let nx = top.nx;
    for iy in 0..ny {
        for ix in 0..nx {
            let ht = if periodic {
                let a = top.get((ix + i0) % nx, iy);
                let b = top.get((ix + i0 + 1) % nx, iy);
                (1.0 - frac) * a + frac * b
            } else {
                top.get(ix, iy)
            };
            let hb = if periodic {
                bottom.get(ix, iy)
            } else {
                let a = bottom.get(ix + i0, iy);
                let b = bottom.get((ix + i0 + 1).min(bottom.nx - 1), iy);
                (1.0 - frac) * a + frac * b
            };
            let d = (config.nominal_gap + ht - hb).max(config.d_min_clamp);
            if !(d > 0.0) {
                return Err(Error::NonConvergence(format!(
                    "separation invariant violated at ({ix},{iy}): d = {d}"
                )));
            }
            sum += -config.hamaker * prefactor / (d * d);
        }
    }
    Ok(sum / (nx * ny) as f64)
}

/// Shear stress read off an energy landscape: the largest `(max - min) /
/// delta_x` over every window of width `delta_x`.
pub fn oracle_shear(landscape: &EnergyLandscape, delta_x: f64) -> Result<f64> {
    if !(delta_x > 0.0) {
        return Err(Error::Domain(format!("delta_x must be > 0 m, got {delta_x}")));
    }
    let offsets = &landscape.offsets;
    let energies = &landscape.energies;
    if offsets.len() != energies.len() || offsets.len() < 2 {
        return Err(Error::Domain("landscape needs at least two points".into()));
    }
    let span = offsets[offsets.len() - 1] - offsets[0];
    if span < delta_x {
        return Err(Error::Capability(format!(
            "landscape span {span:.3e} m is smaller than delta_x {delta_x:.3e} m"
        )));
    }
    let mut best = 0.0f64;
    let mut j_end = 0usize;
    for i in 0..offsets.len() {
        if j_end < i + 1 {
            j_end = i + 1;
        }
        while j_end < offsets.len() && offsets[j_end] <= offsets[i] + delta_x * (1.0 + 1e-12) {
            j_end += 1;
        }
        if j_end - i < 2 {
            continue;
        }
        let window = &energies[i..j_end];
        let lo = window.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = window.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        best = best.max((hi - lo) / delta_x);
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::HYDROXYL_FLOOR;
    use crate::interface::vdw_energy;
    use crate::metrology::synthesize_surface;

    const A_REF: f64 = 1.30e-19;

    fn flat(nx: usize, ny: usize, pitch: f64, level: f64) -> HeightMap {
        HeightMap::new(nx, ny, pitch, vec![level; nx * ny]).unwrap()
    }

    fn reference_config() -> DragConfig {
        DragConfig {
            lateral_step: 0.0225e-9,
            max_offset: 2.88e-9,
            nominal_gap: 0.5e-9,
            hamaker: A_REF,
            d_min_clamp: HYDROXYL_FLOOR,
        }
    }

    #[test]
    fn flat_surfaces_give_constant_landscape_and_zero_shear() {
        let top = flat(64, 64, 0.045e-9, 0.0);
        let bottom = flat(64, 64, 0.045e-9, 0.0);
        let config = reference_config();
        let ls = energy_landscape(&top, &bottom, &config).unwrap();
        let expected = vdw_energy(A_REF, config.nominal_gap).unwrap();
        for e in &ls.energies {
            assert!((e - expected).abs() < 1e-9 * expected.abs(), "{e:e}");
        }
        assert_eq!(oracle_shear(&ls, 0.54e-9).unwrap(), 0.0);
    }

    #[test]
    fn identical_maps_bind_deepest_at_zero_offset() {
        let map = synthesize_surface(0.61e-9, 1.08e-9, 64, 64, 0.045e-9, 42).unwrap();
        let gap = contact_gap(&map, &map, HYDROXYL_FLOOR).unwrap();
        assert!((gap - HYDROXYL_FLOOR).abs() < 1e-20);
        let config = DragConfig {
            nominal_gap: gap,
            ..reference_config()
        };
        let ls = energy_landscape(&map, &map, &config).unwrap();
        assert_eq!(ls.rest_offset(), 0.0);
        // Complementary surfaces at contact sit at d_min everywhere.
        let expected = vdw_energy(A_REF, HYDROXYL_FLOOR).unwrap();
        assert!((ls.energies[0] - expected).abs() < 1e-9 * expected.abs());
    }

    #[test]
    fn larger_gap_weakens_binding() {
        let top = synthesize_surface(0.61e-9, 1.08e-9, 64, 64, 0.045e-9, 1).unwrap();
        let bottom = synthesize_surface(0.37e-9, 1.08e-9, 64, 64, 0.045e-9, 2).unwrap();
        let base = contact_gap(&top, &bottom, HYDROXYL_FLOOR).unwrap();
        let mut prev = f64::INFINITY;
        for extra in [0.0, 0.2e-9, 0.5e-9, 1.0e-9] {
            let config = DragConfig {
                nominal_gap: base + extra,
                ..reference_config()
            };
            let ls = energy_landscape(&top, &bottom, &config).unwrap();
            let depth = ls.energies.iter().fold(0.0f64, |m, e| m.max(e.abs()));
            assert!(depth < prev, "gap +{extra:e}: depth {depth:e} !< {prev:e}");
            prev = depth;
        }
    }

    #[test]
    fn landscape_and_shear_are_linear_in_hamaker() {
        let top = synthesize_surface(0.61e-9, 1.08e-9, 64, 64, 0.045e-9, 3).unwrap();
        let bottom = synthesize_surface(0.37e-9, 1.08e-9, 64, 64, 0.045e-9, 4).unwrap();
        let gap = contact_gap(&top, &bottom, HYDROXYL_FLOOR).unwrap();
        let c1 = DragConfig {
            nominal_gap: gap,
            ..reference_config()
        };
        let c2 = DragConfig {
            hamaker: 2.0 * A_REF,
            ..c1
        };
        let l1 = energy_landscape(&top, &bottom, &c1).unwrap();
        let l2 = energy_landscape(&top, &bottom, &c2).unwrap();
        for (a, b) in l1.energies.iter().zip(&l2.energies) {
            assert_eq!(2.0 * a, *b);
        }
        let s1 = oracle_shear(&l1, 0.54e-9).unwrap();
        let s2 = oracle_shear(&l2, 0.54e-9).unwrap();
        assert_eq!(2.0 * s1, s2);
    }

    #[test]
    fn shear_converges_under_step_refinement() {
        let top = synthesize_surface(0.61e-9, 1.08e-9, 64, 64, 0.045e-9, 9).unwrap();
        let bottom = synthesize_surface(0.37e-9, 1.08e-9, 64, 64, 0.045e-9, 10).unwrap();
        let gap = contact_gap(&top, &bottom, HYDROXYL_FLOOR).unwrap();
        let coarse_cfg = DragConfig {
            nominal_gap: gap,
            lateral_step: 0.045e-9,
            ..reference_config()
        };
        let fine_cfg = DragConfig {
            lateral_step: 0.0225e-9,
            ..coarse_cfg
        };
        let coarse = oracle_shear(&energy_landscape(&top, &bottom, &coarse_cfg).unwrap(), 0.54e-9)
            .unwrap();
        let fine =
            oracle_shear(&energy_landscape(&top, &bottom, &fine_cfg).unwrap(), 0.54e-9).unwrap();
        assert!(
            (fine - coarse).abs() / fine < 0.10,
            "coarse {coarse:e} vs fine {fine:e}"
        );
    }

    #[test]
    fn smaller_top_slides_without_wrap() {
        let bottom = synthesize_surface(0.37e-9, 1.08e-9, 128, 64, 0.045e-9, 6).unwrap();
        let top = flat(64, 64, 0.045e-9, 0.0);
        let config = DragConfig {
            max_offset: 2.0e-9,
            nominal_gap: 1.0e-9,
            ..reference_config()
        };
        let ls = energy_landscape(&top, &bottom, &config).unwrap();
        assert_eq!(ls.offsets.len(), ls.energies.len());
        assert!(ls.energies.iter().all(|e| *e < 0.0));
    }

    #[test]
    fn pitch_mismatch_is_config_error() {
        let a = flat(64, 64, 0.045e-9, 0.0);
        let b = flat(64, 64, 0.05e-9, 0.0);
        assert!(matches!(
            energy_landscape(&a, &b, &reference_config()),
            Err(Error::Config(_))
        ));
    }

    #[test]
    fn oversized_top_map_is_config_error() {
        let top = flat(128, 64, 0.045e-9, 0.0);
        let bottom = flat(64, 64, 0.045e-9, 0.0);
        assert!(matches!(
            energy_landscape(&top, &bottom, &reference_config()),
            Err(Error::Config(_))
        ));
    }

    #[test]
    fn insufficient_span_is_capability_error() {
        let ls = EnergyLandscape {
            offsets: vec![0.0, 0.1e-9, 0.2e-9],
            energies: vec![-1.0, -2.0, -1.5],
        };
        assert!(matches!(
            oracle_shear(&ls, 0.54e-9),
            Err(Error::Capability(_))
        ));
    }

    /// Reference-scale sanity: the drag oracle at the reference roughness pair
    /// lands within a factor of a few of the statistical model's 40 MPa.
    #[test]
    fn reference_scale_shear_is_tens_of_mpa() {
        let mut shears = Vec::new();
        for seed in 0..5u64 {
            let top = synthesize_surface(0.61e-9, 1.08e-9, 64, 64, 0.045e-9, 100 + seed).unwrap();
            let bottom =
                synthesize_surface(0.37e-9, 1.08e-9, 64, 64, 0.045e-9, 200 + seed).unwrap();
            let gap = contact_gap(&top, &bottom, HYDROXYL_FLOOR).unwrap();
            let config = DragConfig {
                nominal_gap: gap,
                ..reference_config()
            };
            let ls = energy_landscape(&top, &bottom, &config).unwrap();
            shears.push(oracle_shear(&ls, 0.54e-9).unwrap());
        }
        shears.sort_by(f64::total_cmp);
        let median = shears[shears.len() / 2];
        assert!(
            (4.0e6..=4.0e8).contains(&median),
            "median oracle shear {median:e} Pa"
        );
    }
}
