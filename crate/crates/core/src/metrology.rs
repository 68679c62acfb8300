//! AFM height-map ingestion, roughness statistics and synthetic self-affine
//! test surfaces.
//!
//! Height-map file format (bit-exact contract):
//!
//! ```text
//! heightmap v1
//! nx ny pitch_nm
//! <ny lines of nx whitespace-separated decimal heights in nm>
//! ```
//!
//! Heights are stored internally in meters. The nm<->m conversion is done by
//! shifting the decimal exponent textually (one float rounding per direction),
//! so serializing and re-parsing a map reproduces it bit for bit.
//!
//! Statistics definitions: RMS after removing the best-fit plane; correlation
//! length as the first 1/e crossing of the radially averaged normalized
//! autocorrelation (linear interpolation between lags); fractal dimension from
//! the log-log slope of the radially averaged power spectral density via
//! D = (8 + slope)/2, clamped to [2, 3). The autocorrelation here is the
//! per-surface autocorrelation of one scan; proprietary instrument formats and
//! tip deconvolution are out of scope.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use rustfft::num_complex::Complex;
use rustfft::FftPlanner;

use std::f64::consts::PI;
use std::path::Path;

use crate::{Error, Result};

/// Minimum grid side for correlation/fractal estimates.
const MIN_STAT_GRID: usize = 16;

/// Minimum grid side for surface synthesis.
const MIN_SYNTH_GRID: usize = 64;

/// Regular 2-D grid of surface heights.
#[derive(Debug, Clone, PartialEq)]
pub struct HeightMap {
    pub nx: usize,
    pub ny: usize,
    /// Pixel pitch, m.
    pub pitch: f64,
    /// Row-major heights, m; `heights[iy * nx + ix]`.
    pub heights: Vec<f64>,
}

impl HeightMap {
    pub fn new(nx: usize, ny: usize, pitch: f64, heights: Vec<f64>) -> Result<Self> {
        if nx < 2 || ny < 2 {
            return Err(Error::Domain(format!(
                "grid must be at least 2x2, got {nx}x{ny}"
            )));
        }
        if !(pitch > 0.0) {
            return Err(Error::Domain(format!("pitch must be > 0 m, got {pitch}")));
        }
        if heights.len() != nx * ny {
            return Err(Error::Domain(format!(
                "height array length {} does not match {nx}x{ny}",
                heights.len()
            )));
        }
        if let Some(i) = heights.iter().position(|h| !h.is_finite()) {
            return Err(Error::Domain(format!("non-finite height at index {i}")));
        }
        Ok(Self {
            nx,
            ny,
            pitch,
            heights,
        })
    }

    pub fn get(&self, ix: usize, iy: usize) -> f64 {
        self.heights[iy * self.nx + ix]
    }

    /// Transposed copy (x and y swapped).
    pub fn transposed(&self) -> HeightMap {
        let mut heights = vec![0.0; self.heights.len()];
        for iy in 0..self.ny {
            for ix in 0..self.nx {
                heights[ix * self.ny + iy] = self.get(ix, iy);
            }
        }
        HeightMap {
            nx: self.ny,
            ny: self.nx,
            pitch: self.pitch,
            heights,
        }
    }

    /// Renders the map in the `heightmap v1` text format.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        out.push_str("heightmap v1\n");
        out.push_str(&format!(
            "{} {} {}\n",
            self.nx,
            self.ny,
            meters_to_nm_token(self.pitch)
        ));
        for row in self.heights.chunks_exact(self.nx) {
            let line: Vec<String> = row.iter().map(|&h| meters_to_nm_token(h)).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Roughness statistics of one height map.
///
/// `correlation_length` and `fractal_dimension` are `None` when undefined:
/// constant surfaces have no correlation decay, and grids smaller than 16x16
/// support only the RMS estimate.
#[derive(Debug, Clone, PartialEq)]
pub struct SurfaceStats {
    /// RMS height after mean-plane detrend, m.
    pub rms: f64,
    /// 1/e decay lag of the radially averaged autocorrelation, m.
    pub correlation_length: Option<f64>,
    /// Half the correlation length (the peak-to-trough drag distance), m.
    pub half_correlation_length: Option<f64>,
    /// In [2, 3) when defined.
    pub fractal_dimension: Option<f64>,
}

// --- file format ----------------------------------------------------------

/// Converts a decimal token in nm to meters by shifting the exponent by -9
/// before the single `f64` parse.
fn nm_token_to_meters(token: &str) -> std::result::Result<f64, ()> {
    let shifted = shift_exponent(token, -9).ok_or(())?;
    let v: f64 = shifted.parse().map_err(|_| ())?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(())
    }
}

/// Formats a height in meters as a nm token; exact inverse of
/// [`nm_token_to_meters`] because only the printed exponent changes.
fn meters_to_nm_token(h: f64) -> String {
    let s = format!("{:e}", h);
    shift_exponent(&s, 9).expect("{:e} output always has an exponent")
}

fn shift_exponent(token: &str, delta: i32) -> Option<String> {
    match token.find(['e', 'E']) {
        Some(pos) => {
            let mantissa = &token[..pos];
            let exp: i32 = token[pos + 1..].parse().ok()?;
            if mantissa.is_empty() || mantissa.parse::<f64>().is_err() {
                return None;
            }
            Some(format!("{mantissa}e{}", exp + delta))
        }
        None => {
            token.parse::<f64>().ok()?;
            Some(format!("{token}e{delta}"))
        }
    }
}

/// Parses the `heightmap v1` text format. Heights are converted from nm to
/// meters.
pub fn parse_height_map_text(text: &str) -> Result<HeightMap> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        column: 1,
        message: "empty file".into(),
    })?;
    if header.trim() != "heightmap v1" {
        return Err(Error::Parse {
            line: 1,
            column: 1,
            message: format!("expected `heightmap v1` header, got `{header}`"),
        });
    }
    let (_, dims) = lines.next().ok_or(Error::Parse {
        line: 2,
        column: 1,
        message: "missing dimensions line".into(),
    })?;
    let fields: Vec<&str> = dims.split_whitespace().collect();
    if fields.len() != 3 {
        return Err(Error::Parse {
            line: 2,
            column: 1,
            message: format!("expected `nx ny pitch_nm`, got {} fields", fields.len()),
        });
    }
    let nx: usize = fields[0].parse().map_err(|_| Error::Parse {
        line: 2,
        column: token_column(dims, fields[0]),
        message: format!("bad nx `{}`", fields[0]),
    })?;
    let ny: usize = fields[1].parse().map_err(|_| Error::Parse {
        line: 2,
        column: token_column(dims, fields[1]),
        message: format!("bad ny `{}`", fields[1]),
    })?;
    let pitch = nm_token_to_meters(fields[2]).map_err(|_| Error::Parse {
        line: 2,
        column: token_column(dims, fields[2]),
        message: format!("bad pitch `{}`", fields[2]),
    })?;

    let mut heights = Vec::with_capacity(nx * ny);
    let mut rows = 0usize;
    for (idx, line) in lines {
        let line_no = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        if rows == ny {
            return Err(Error::Parse {
                line: line_no,
                column: 1,
                message: format!("more than {ny} data rows"),
            });
        }
        let mut count = 0usize;
        for tok in line.split_whitespace() {
            let v = nm_token_to_meters(tok).map_err(|_| Error::Parse {
                line: line_no,
                column: token_column(line, tok),
                message: format!("bad height `{tok}`"),
            })?;
            heights.push(v);
            count += 1;
        }
        if count != nx {
            return Err(Error::Parse {
                line: line_no,
                column: 1,
                message: format!("expected {nx} heights in row, got {count}"),
            });
        }
        rows += 1;
    }
    if rows != ny {
        return Err(Error::Parse {
            line: text.lines().count(),
            column: 1,
            message: format!("expected {ny} data rows, got {rows}"),
        });
    }
    HeightMap::new(nx, ny, pitch, heights).map_err(|e| Error::Parse {
        line: 1,
        column: 1,
        message: e.to_string(),
    })
}

fn token_column(line: &str, token: &str) -> usize {
    line.find(token).map(|i| i + 1).unwrap_or(1)
}

/// Reads and parses a height-map file.
pub fn parse_height_map(path: &Path) -> Result<HeightMap> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_owned(),
        source,
    })?;
    parse_height_map_text(&text)
}

// --- statistics ------------------------------------------------------------

/// Heights with the best-fit plane removed.
pub fn detrend(map: &HeightMap) -> Vec<f64> {
    let (nx, ny) = (map.nx as f64, map.ny as f64);
    let n = map.heights.len() as f64;
    let cx = 0.5 * (nx - 1.0);
    let cy = 0.5 * (ny - 1.0);
    let mut sum = 0.0;
    let mut sxh = 0.0;
    let mut syh = 0.0;
    let mut sxx = 0.0;
    let mut syy = 0.0;
    for iy in 0..map.ny {
        for ix in 0..map.nx {
            let h = map.get(ix, iy);
            let x = ix as f64 - cx;
            let y = iy as f64 - cy;
            sum += h;
            sxh += x * h;
            syh += y * h;
            sxx += x * x;
            syy += y * y;
        }
    }
    let mean = sum / n;
    let bx = if sxx > 0.0 { sxh / sxx } else { 0.0 };
    let by = if syy > 0.0 { syh / syy } else { 0.0 };
    let mut out = Vec::with_capacity(map.heights.len());
    for iy in 0..map.ny {
        for ix in 0..map.nx {
            let x = ix as f64 - cx;
            let y = iy as f64 - cy;
            out.push(map.get(ix, iy) - mean - bx * x - by * y);
        }
    }
    out
}

/// Computes RMS, correlation length and fractal dimension.
pub fn compute_stats(map: &HeightMap) -> SurfaceStats {
    let h = detrend(map);
    let n = h.len() as f64;
    let rms = (h.iter().map(|v| v * v).sum::<f64>() / n).sqrt();

    if map.nx < MIN_STAT_GRID || map.ny < MIN_STAT_GRID {
        return SurfaceStats {
            rms,
            correlation_length: None,
            half_correlation_length: None,
            fractal_dimension: None,
        };
    }

    let correlation_length = correlation_length(&h, map.nx, map.ny, map.pitch);
    let fractal_dimension = fractal_dimension(&h, map.nx, map.ny);
    SurfaceStats {
        rms,
        correlation_length,
        half_correlation_length: correlation_length.map(|c| c / 2.0),
        fractal_dimension,
    }
}

fn fft2(buf: &mut [Complex<f64>], nx: usize, ny: usize, inverse: bool) {
    let mut planner = FftPlanner::new();
    let row_fft = if inverse {
        planner.plan_fft_inverse(nx)
    } else {
        planner.plan_fft_forward(nx)
    };
    for row in buf.chunks_exact_mut(nx) {
        row_fft.process(row);
    }
    let col_fft = if inverse {
        planner.plan_fft_inverse(ny)
    } else {
        planner.plan_fft_forward(ny)
    };
    let mut col = vec![Complex::new(0.0, 0.0); ny];
    for ix in 0..nx {
        for iy in 0..ny {
            col[iy] = buf[iy * nx + ix];
        }
        col_fft.process(&mut col);
        for iy in 0..ny {
            buf[iy * nx + ix] = col[iy];
        }
    }
}

/// First 1/e crossing of the radially averaged normalized autocorrelation,
/// linearly interpolated between integer lags. `None` for constant surfaces
/// or when the autocorrelation never decays below 1/e within half the grid.
fn correlation_length(h: &[f64], nx: usize, ny: usize, pitch: f64) -> Option<f64> {
    // Zero-padded FFT autocorrelation, unbiased by the per-lag overlap count.
    let (px, py) = (2 * nx, 2 * ny);
    let mut buf = vec![Complex::new(0.0, 0.0); px * py];
    for iy in 0..ny {
        for ix in 0..nx {
            buf[iy * px + ix] = Complex::new(h[iy * nx + ix], 0.0);
        }
    }
    fft2(&mut buf, px, py, false);
    for c in buf.iter_mut() {
        *c = Complex::new(c.norm_sqr(), 0.0);
    }
    fft2(&mut buf, px, py, true);
    let norm = (px * py) as f64;

    let max_lag = nx.min(ny) / 2;
    let mut acc = vec![0.0f64; max_lag + 1];
    let mut cnt = vec![0usize; max_lag + 1];
    for iy in 0..py {
        let dy = if iy <= py / 2 { iy as i64 } else { iy as i64 - py as i64 };
        if dy.unsigned_abs() as usize >= ny {
            continue;
        }
        for ix in 0..px {
            let dx = if ix <= px / 2 { ix as i64 } else { ix as i64 - px as i64 };
            if dx.unsigned_abs() as usize >= nx {
                continue;
            }
            let r = ((dx * dx + dy * dy) as f64).sqrt();
            let bin = r.round() as usize;
            if bin > max_lag {
                continue;
            }
            let overlap = ((nx - dx.unsigned_abs() as usize) * (ny - dy.unsigned_abs() as usize))
                as f64;
            acc[bin] += buf[iy * px + ix].re / norm / overlap;
            cnt[bin] += 1;
        }
    }
    let variance = acc[0] / cnt[0] as f64;
    if variance <= 0.0 {
        return None;
    }
    let profile: Vec<f64> = acc
        .iter()
        .zip(&cnt)
        .map(|(a, &c)| if c > 0 { a / c as f64 / variance } else { f64::NAN })
        .collect();

    let threshold = 1.0 / std::f64::consts::E;
    for lag in 1..profile.len() {
        let (prev, cur) = (profile[lag - 1], profile[lag]);
        if cur.is_nan() {
            continue;
        }
        if cur < threshold {
            let frac = if prev > cur {
                (prev - threshold) / (prev - cur)
            } else {
                0.0
            };
            return Some(((lag - 1) as f64 + frac) * pitch);
        }
    }
    None
}

/// Fractal dimension from the log-log slope of the radially averaged PSD:
/// D = (8 + slope)/2, clamped to [2, 3).
fn fractal_dimension(h: &[f64], nx: usize, ny: usize) -> Option<f64> {
    let mut buf: Vec<Complex<f64>> = h.iter().map(|&v| Complex::new(v, 0.0)).collect();
    fft2(&mut buf, nx, ny, false);
    let nmin = nx.min(ny);
    let max_bin = nmin / 2;
    let mut acc = vec![0.0f64; max_bin + 1];
    let mut cnt = vec![0usize; max_bin + 1];
    for iy in 0..ny {
        let fy = if iy <= ny / 2 { iy as f64 } else { iy as f64 - ny as f64 };
        // Express both axes in cycles per grid of the smaller side so the
        // radial bins are isotropic on non-square grids.
        let fy = fy * nmin as f64 / ny as f64;
        for ix in 0..nx {
            let fx = if ix <= nx / 2 { ix as f64 } else { ix as f64 - nx as f64 };
            let fx = fx * nmin as f64 / nx as f64;
            let r = (fx * fx + fy * fy).sqrt();
            let bin = r.round() as usize;
            if bin == 0 || bin > max_bin {
                continue;
            }
            acc[bin] += buf[iy * nx + ix].norm_sqr();
            cnt[bin] += 1;
        }
    }
    // Middle frequency band: a decade ending at the Nyquist bin.
    let hi = max_bin.saturating_sub(1);
    let lo = (max_bin / 10).max(2);
    if hi <= lo + 1 {
        return None;
    }
    let mut pts = Vec::new();
    for bin in lo..=hi {
        if cnt[bin] == 0 {
            continue;
        }
        let s = acc[bin] / cnt[bin] as f64;
        if s > 0.0 {
            pts.push(((bin as f64).ln(), s.ln()));
        }
    }
    if pts.len() < 2 {
        return None;
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    if sxx == 0.0 {
        return None;
    }
    let slope = sxy / sxx;
    Some(((8.0 + slope) / 2.0).clamp(2.0, 3.0 - 1e-9))
}

// --- synthesis --------------------------------------------------------------

/// Generates a Gaussian random field with isotropic Gaussian autocorrelation
/// `exp(-r^2 / correlation_length^2)`, rescaled to the exact target RMS.
/// Periodic by construction; deterministic for a fixed seed.
pub fn synthesize_surface(
    rms: f64,
    correlation_length: f64,
    nx: usize,
    ny: usize,
    pitch: f64,
    seed: u64,
) -> Result<HeightMap> {
    if !(rms > 0.0) {
        return Err(Error::Domain(format!("rms must be > 0 m, got {rms}")));
    }
    if nx < MIN_SYNTH_GRID || ny < MIN_SYNTH_GRID {
        return Err(Error::Capability(format!(
            "synthesis grid must be at least {MIN_SYNTH_GRID}x{MIN_SYNTH_GRID}, got {nx}x{ny}"
        )));
    }
    if !(pitch > 0.0) {
        return Err(Error::Domain(format!("pitch must be > 0 m, got {pitch}")));
    }
    if correlation_length < pitch {
        return Err(Error::Capability(format!(
            "correlation length {correlation_length:.3e} m is below the pixel pitch {pitch:.3e} m"
        )));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut buf: Vec<Complex<f64>> = (0..nx * ny)
        .map(|_| Complex::new(StandardNormal.sample(&mut rng), 0.0))
        .collect();
    fft2(&mut buf, nx, ny, false);
    // Spectral filter: sqrt of the Gaussian power spectrum
    // exp(-k^2 l^2 / 4) that transforms to exp(-r^2 / l^2).
    let l2 = correlation_length * correlation_length;
    for iy in 0..ny {
        let fy = if iy <= ny / 2 { iy as f64 } else { iy as f64 - ny as f64 };
        let ky = 2.0 * PI * fy / (ny as f64 * pitch);
        for ix in 0..nx {
            let fx = if ix <= nx / 2 { ix as f64 } else { ix as f64 - nx as f64 };
            let kx = 2.0 * PI * fx / (nx as f64 * pitch);
            let k2 = kx * kx + ky * ky;
            buf[iy * nx + ix] *= (-k2 * l2 / 8.0).exp();
        }
    }
    fft2(&mut buf, nx, ny, true);
    let n = (nx * ny) as f64;
    let mut heights: Vec<f64> = buf.iter().map(|c| c.re / n).collect();

    let mean = heights.iter().sum::<f64>() / n;
    for h in heights.iter_mut() {
        *h -= mean;
    }
    let std = (heights.iter().map(|h| h * h).sum::<f64>() / n).sqrt();
    if std == 0.0 {
        return Err(Error::NonConvergence("synthesized field degenerated".into()));
    }
    let scale = rms / std;
    for h in heights.iter_mut() {
        *h *= scale;
    }
    HeightMap::new(nx, ny, pitch, heights)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flat_two_by_two_parses() {
        let text = "heightmap v1\n2 2 10\n0 0\n0 0\n";
        let map = parse_height_map_text(text).unwrap();
        assert_eq!((map.nx, map.ny), (2, 2));
        assert!((map.pitch - 1e-8).abs() < 1e-22);
        let stats = compute_stats(&map);
        assert_eq!(stats.rms, 0.0);
        assert!(stats.correlation_length.is_none());
    }

    #[test]
    fn row_count_mismatch_is_parse_error() {
        let text = "heightmap v1\n2 3 10\n0 0\n0 0\n";
        assert!(matches!(
            parse_height_map_text(text),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn bad_cell_reports_line_and_column() {
        let text = "heightmap v1\n2 2 10\n0 0\n0 oops\n";
        match parse_height_map_text(text) {
            Err(Error::Parse { line, column, .. }) => {
                assert_eq!(line, 4);
                assert_eq!(column, 3);
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn serialize_parse_round_trip_is_bit_exact() {
        let map = synthesize_surface(0.61e-9, 1.08e-9, 64, 64, 0.2e-9, 7).unwrap();
        let text = map.serialize();
        let back = parse_height_map_text(&text).unwrap();
        assert_eq!(map, back);
    }

    #[test]
    fn detrend_removes_tilted_plane() {
        let (nx, ny) = (32, 32);
        let mut heights = Vec::new();
        for iy in 0..ny {
            for ix in 0..nx {
                heights.push(3e-9 + 0.5e-9 * ix as f64 - 0.25e-9 * iy as f64);
            }
        }
        let map = HeightMap::new(nx, ny, 1e-9, heights).unwrap();
        let stats = compute_stats(&map);
        assert!(stats.rms < 1e-12 * 0.5e-9, "rms {:e}", stats.rms);
    }

    #[test]
    fn detrending_is_idempotent() {
        let map = synthesize_surface(0.5e-9, 2e-9, 64, 64, 0.4e-9, 3).unwrap();
        let once = detrend(&map);
        let map2 = HeightMap::new(map.nx, map.ny, map.pitch, once.clone()).unwrap();
        let twice = detrend(&map2);
        for (a, b) in once.iter().zip(&twice) {
            assert!((a - b).abs() < 1e-18);
        }
    }

    #[test]
    fn synthesis_is_deterministic_and_linear_in_rms() {
        let a = synthesize_surface(0.61e-9, 1.08e-9, 64, 64, 0.2e-9, 1).unwrap();
        let b = synthesize_surface(0.61e-9, 1.08e-9, 64, 64, 0.2e-9, 1).unwrap();
        assert_eq!(a, b);
        let c = synthesize_surface(1.22e-9, 1.08e-9, 64, 64, 0.2e-9, 1).unwrap();
        for (x, y) in a.heights.iter().zip(&c.heights) {
            assert_eq!(2.0 * x, *y);
        }
    }

    #[test]
    fn synthesis_round_trip_recovers_statistics() {
        let map = synthesize_surface(0.61e-9, 1.08e-9, 256, 256, 0.2e-9, 1).unwrap();
        let stats = compute_stats(&map);
        assert!(
            (stats.rms - 0.61e-9).abs() / 0.61e-9 < 0.10,
            "rms {:e}",
            stats.rms
        );
        let cl = stats.correlation_length.unwrap();
        assert!((cl - 1.08e-9).abs() / 1.08e-9 < 0.15, "corr len {cl:e}");
        let half = stats.half_correlation_length.unwrap();
        assert_eq!(half, cl / 2.0);
        assert!((half - 0.54e-9).abs() / 0.54e-9 < 0.15, "half {half:e}");
    }

    #[test]
    fn white_noise_has_short_correlation_and_high_fractal_dimension() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let heights: Vec<f64> = (0..128 * 128)
            .map(|_| {
                let v: f64 = StandardNormal.sample(&mut rng);
                v * 1e-9
            })
            .collect();
        let noise = HeightMap::new(128, 128, 0.2e-9, heights).unwrap();
        let noise_stats = compute_stats(&noise);
        let cl = noise_stats.correlation_length.unwrap();
        assert!(cl <= 2.0 * noise.pitch, "white-noise corr len {cl:e}");

        let smooth = synthesize_surface(0.61e-9, 1.08e-9, 128, 128, 0.2e-9, 11).unwrap();
        let smooth_stats = compute_stats(&smooth);
        let d_smooth = smooth_stats.fractal_dimension.unwrap();
        let d_noise = noise_stats.fractal_dimension.unwrap();
        assert!(d_smooth < 2.2, "smooth D {d_smooth}");
        assert!(d_noise > 2.8, "noise D {d_noise}");
        assert!(d_smooth < d_noise);
    }

    #[test]
    fn transpose_preserves_rms_and_correlation() {
        let map = synthesize_surface(0.61e-9, 1.08e-9, 128, 128, 0.2e-9, 5).unwrap();
        let t = map.transposed();
        let a = compute_stats(&map);
        let b = compute_stats(&t);
        // Summation order differs between orientations; equal up to rounding.
        assert!((a.rms - b.rms).abs() < 1e-12 * a.rms);
        let (ca, cb) = (a.correlation_length.unwrap(), b.correlation_length.unwrap());
        assert!((ca - cb).abs() / ca < 0.05, "{ca:e} vs {cb:e}");
    }

    #[test]
    fn correlation_below_pitch_is_resolution_error() {
        assert!(matches!(
            synthesize_surface(0.61e-9, 0.1e-9, 64, 64, 0.2e-9, 1),
            Err(Error::Capability(_))
        ));
    }
}
