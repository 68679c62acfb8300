//! `bondshear` command-line front end.
//!
//! Unit convention: flags and printed tables use nm for lengths, MPa for
//! shear stress, eV for bond energies and mJ/m² for surface energies (the
//! presentation units); the library underneath is strict SI. The conversion
//! happens in [`units`] and nowhere else.
//!
//! Exit codes: 0 success, 2 input/parse, 3 precondition, 4 I/O,
//! 5 numerical non-convergence.

use clap::{Args, Parser, Subcommand, ValueEnum};

use std::path::{Path, PathBuf};

use bondshear::constants::{DEFAULT_TEMPERATURE, HYDROXYL_FLOOR};
use bondshear::interface::{
    calibrate, energy_moments, mean_separation, proximity_fraction, separation_from_roughness,
    CalibrationTargets,
};
use bondshear::lifshitz::hamaker_constant_with_frequency;
use bondshear::materials::{builtin_catalogue, load_catalogue, Catalogue};
use bondshear::metrology::{compute_stats, parse_height_map, synthesize_surface};
use bondshear::oracle::{contact_gap, energy_landscape, oracle_shear, DragConfig};
use bondshear::shear::{
    bonds, hydrogen_bond_surface_energy, literature_comparison, molecular_shear,
    molecular_surface_energy, shear_vs_roughness_curve, vdw_shear,
};
use bondshear::Error;

/// The single nm/MPa/eV <-> SI conversion layer.
mod units {
    pub fn nm_to_m(v: f64) -> f64 {
        v * 1e-9
    }
    pub fn m_to_nm(v: f64) -> f64 {
        v * 1e9
    }
    pub fn pa_to_mpa(v: f64) -> f64 {
        v * 1e-6
    }
    pub fn j_to_mj(v: f64) -> f64 {
        v * 1e3
    }
    pub fn mj_to_j(v: f64) -> f64 {
        v * 1e-3
    }
}

const ENV_MATERIALS: &str = "BONDSHEAR_MATERIALS";

#[derive(Parser)]
#[command(
    name = "bondshear",
    about = "Adhesion shear strength of direct-bonded material pairs",
    long_about = "Predicts the adhesion shear strength of direct-bonded material pairs \
from optical properties and surface roughness.\n\nUnits at this interface: lengths in nm, \
shear stress in MPa, surface energies in mJ/m^2, bond energies in eV. The library \
underneath is strict SI.\n\nExit codes: 0 success, 2 input/parse, 3 precondition, \
4 I/O, 5 numerical non-convergence."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonOpts {
    /// Material catalogue file; overrides entries of the built-in set.
    /// Defaults to $BONDSHEAR_MATERIALS when set.
    #[arg(long, global = true)]
    materials: Option<PathBuf>,
    /// Temperature in K.
    #[arg(long, default_value_t = DEFAULT_TEMPERATURE)]
    temperature: f64,
    /// Principal UV absorption frequency in Hz, shared by both materials and
    /// the medium.
    #[arg(long, default_value_t = 3.0e15)]
    nu_e: f64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Csv,
    Svg,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Hamaker constant of a material pair across a medium (J).
    Hamaker {
        /// First material name.
        material1: String,
        /// Second material name.
        material2: String,
        /// Immersion medium name.
        #[arg(long, default_value = "vacuum")]
        medium: String,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// End-to-end shear prediction from a roughness pair.
    Predict {
        /// Top-surface (platelet) RMS roughness, nm.
        #[arg(long)]
        rms_top: f64,
        /// Bottom-surface (substrate) RMS roughness, nm.
        #[arg(long)]
        rms_bottom: f64,
        /// Lateral displacement over which the energy change is taken, nm.
        #[arg(long, default_value_t = 0.54)]
        delta_x: f64,
        /// First material name.
        #[arg(long, default_value = "diamond")]
        material1: String,
        /// Second material name.
        #[arg(long, default_value = "fused_silica")]
        material2: String,
        /// Immersion medium name.
        #[arg(long, default_value = "vacuum")]
        medium: String,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Shear-vs-roughness curve as CSV (and optional SVG).
    Curve {
        /// Smallest top-surface RMS, nm.
        #[arg(long, default_value_t = 0.2)]
        rms_top_min: f64,
        /// Largest top-surface RMS, nm.
        #[arg(long, default_value_t = 2.0)]
        rms_top_max: f64,
        /// Number of curve points.
        #[arg(long, default_value_t = 19)]
        points: usize,
        /// Bottom-surface RMS roughness, nm.
        #[arg(long, default_value_t = 0.37)]
        rms_bottom: f64,
        /// Lateral displacement, nm.
        #[arg(long, default_value_t = 0.54)]
        delta_x: f64,
        #[arg(long, default_value = "diamond")]
        material1: String,
        #[arg(long, default_value = "fused_silica")]
        material2: String,
        #[arg(long, default_value = "vacuum")]
        medium: String,
        /// Output directory for curve.csv / curve.svg.
        #[arg(long, default_value = ".")]
        output_dir: PathBuf,
        #[arg(long, value_enum, default_value_t = OutputFormat::Both)]
        format: OutputFormat,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Roughness statistics of a height-map file.
    Afm {
        /// Height-map file in the `heightmap v1` text format (heights in nm).
        path: PathBuf,
    },
    /// Synthesize a random test surface and write it as a height-map file.
    Synth {
        /// Target RMS roughness, nm.
        #[arg(long, default_value_t = 0.61)]
        rms: f64,
        /// Target correlation length, nm.
        #[arg(long, default_value_t = 1.08)]
        correlation_length: f64,
        /// Grid side (nx = ny).
        #[arg(long, default_value_t = 256)]
        n: usize,
        /// Pixel pitch, nm.
        #[arg(long, default_value_t = 0.2)]
        pitch: f64,
        /// RNG seed.
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Output file.
        #[arg(long)]
        out: PathBuf,
    },
    /// Drag a synthetic rough pair and compare the oracle shear with the
    /// analytic prediction.
    Oracle {
        /// Top-surface RMS roughness, nm.
        #[arg(long, default_value_t = 0.61)]
        rms_top: f64,
        /// Bottom-surface RMS roughness, nm.
        #[arg(long, default_value_t = 0.37)]
        rms_bottom: f64,
        /// Correlation length of both synthetic surfaces, nm.
        #[arg(long, default_value_t = 1.08)]
        correlation_length: f64,
        /// Grid side (nx = ny).
        #[arg(long, default_value_t = 64)]
        n: usize,
        /// Pixel pitch, nm.
        #[arg(long, default_value_t = 0.045)]
        pitch: f64,
        /// Offset sampling step, nm.
        #[arg(long, default_value_t = 0.0225)]
        step: f64,
        /// Largest offset swept, nm.
        #[arg(long, default_value_t = 2.88)]
        max_offset: f64,
        /// Lateral displacement for the shear read-off, nm.
        #[arg(long, default_value_t = 0.54)]
        delta_x: f64,
        /// RNG seed (bottom surface uses seed + 1).
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value = "diamond")]
        material1: String,
        #[arg(long, default_value = "fused_silica")]
        material2: String,
        #[arg(long, default_value = "vacuum")]
        medium: String,
        /// Output directory for landscape.csv.
        #[arg(long, default_value = ".")]
        output_dir: PathBuf,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Fit the gap distribution's (location, scale) to target moments.
    Calibrate {
        /// Target mean separation, nm.
        #[arg(long, default_value_t = 0.48)]
        mean_separation: f64,
        /// Target mean interface energy magnitude, mJ/m^2.
        #[arg(long, default_value_t = 5.4)]
        mean_energy: f64,
        /// Target interface energy standard deviation, mJ/m^2.
        #[arg(long, default_value_t = 10.8)]
        std_energy: f64,
        /// Top-surface RMS roughness, nm.
        #[arg(long, default_value_t = 0.61)]
        rms_top: f64,
        /// Bottom-surface RMS roughness, nm.
        #[arg(long, default_value_t = 0.37)]
        rms_bottom: f64,
        #[arg(long, default_value = "diamond")]
        material1: String,
        #[arg(long, default_value = "fused_silica")]
        material2: String,
        #[arg(long, default_value = "vacuum")]
        medium: String,
        /// File to write the fitted parameters to as a reusable snippet.
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        common: CommonOpts,
    },
}

fn main() {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => {}
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(exit_code(&e));
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. }
        | Error::Validation { .. }
        | Error::UnknownMaterial(_)
        | Error::Config(_) => 2,
        Error::Domain(_) | Error::DegenerateInterface(_) | Error::Capability(_) => 3,
        Error::Io { .. } => 4,
        Error::NonConvergence(_) => 5,
    }
}

fn catalogue(common: &CommonOpts) -> Result<Catalogue, Error> {
    let path = common
        .materials
        .clone()
        .or_else(|| std::env::var_os(ENV_MATERIALS).map(PathBuf::from));
    match path {
        Some(p) => load_catalogue(&p),
        None => Ok(builtin_catalogue()),
    }
}

fn run(command: Command) -> Result<(), Error> {
    match command {
        Command::Hamaker {
            material1,
            material2,
            medium,
            common,
        } => cmd_hamaker(&material1, &material2, &medium, &common),
        Command::Predict {
            rms_top,
            rms_bottom,
            delta_x,
            material1,
            material2,
            medium,
            common,
        } => cmd_predict(rms_top, rms_bottom, delta_x, &material1, &material2, &medium, &common),
        Command::Curve {
            rms_top_min,
            rms_top_max,
            points,
            rms_bottom,
            delta_x,
            material1,
            material2,
            medium,
            output_dir,
            format,
            common,
        } => cmd_curve(
            rms_top_min,
            rms_top_max,
            points,
            rms_bottom,
            delta_x,
            &material1,
            &material2,
            &medium,
            &output_dir,
            format,
            &common,
        ),
        Command::Afm { path } => cmd_afm(&path),
        Command::Synth {
            rms,
            correlation_length,
            n,
            pitch,
            seed,
            out,
        } => cmd_synth(rms, correlation_length, n, pitch, seed, &out),
        Command::Oracle {
            rms_top,
            rms_bottom,
            correlation_length,
            n,
            pitch,
            step,
            max_offset,
            delta_x,
            seed,
            material1,
            material2,
            medium,
            output_dir,
            common,
        } => cmd_oracle(
            rms_top,
            rms_bottom,
            correlation_length,
            n,
            pitch,
            step,
            max_offset,
            delta_x,
            seed,
            &material1,
            &material2,
            &medium,
            &output_dir,
            &common,
        ),
        Command::Calibrate {
            mean_separation,
            mean_energy,
            std_energy,
            rms_top,
            rms_bottom,
            material1,
            material2,
            medium,
            out,
            common,
        } => cmd_calibrate(
            mean_separation,
            mean_energy,
            std_energy,
            rms_top,
            rms_bottom,
            &material1,
            &material2,
            &medium,
            out.as_deref(),
            &common,
        ),
    }
}

fn hamaker_for(
    cat: &Catalogue,
    m1: &str,
    m2: &str,
    medium: &str,
    common: &CommonOpts,
) -> Result<bondshear::HamakerResult, Error> {
    hamaker_constant_with_frequency(
        cat.require(m1)?,
        cat.require(m2)?,
        cat.require(medium)?,
        common.temperature,
        common.nu_e,
    )
}

fn cmd_hamaker(m1: &str, m2: &str, medium: &str, common: &CommonOpts) -> Result<(), Error> {
    let cat = catalogue(common)?;
    let a = hamaker_for(&cat, m1, m2, medium, common)?;
    println!("Hamaker constant: {m1} / {m2} across {medium} at {} K", a.temperature);
    println!("  total       {:.4e} J", a.total);
    println!("  entropic    {:.4e} J", a.entropic_term);
    println!("  dispersive  {:.4e} J", a.dispersive_term);
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_predict(
    rms_top_nm: f64,
    rms_bottom_nm: f64,
    delta_x_nm: f64,
    m1: &str,
    m2: &str,
    medium: &str,
    common: &CommonOpts,
) -> Result<(), Error> {
    let cat = catalogue(common)?;
    let a = hamaker_for(&cat, m1, m2, medium, common)?;
    let dist = separation_from_roughness(
        units::nm_to_m(rms_top_nm),
        units::nm_to_m(rms_bottom_nm),
        HYDROXYL_FLOOR,
    )?;
    let mean_sep = mean_separation(&dist)?;
    let moments = energy_moments(a.total, &dist)?;
    let vdw = vdw_shear(&moments, units::nm_to_m(delta_x_nm))?;

    let w0 = hydrogen_bond_surface_energy(&bonds::isolated_hydroxyl(), &bonds::associated_hydroxyl());
    let sio = bonds::siloxane();
    let co = bonds::carbon_oxygen();
    let sio_pred = molecular_shear(
        molecular_surface_energy(sio.areal_density, sio.dissociation_energy),
        w0,
        sio.bond_length,
    )?;
    let co_pred = molecular_shear(
        molecular_surface_energy(co.areal_density, co.dissociation_energy),
        w0,
        co.bond_length,
    )?;

    println!("Prediction: {m1} / {m2} across {medium}");
    println!("  A_H                 {:.4e} J", a.total);
    println!("  d_max               {:.4} nm", units::m_to_nm(dist.d_max));
    println!("  mean separation     {:.4} nm", units::m_to_nm(mean_sep));
    println!("  mu_w                {:.4} mJ/m^2", units::j_to_mj(moments.mean_energy));
    println!("  sigma_w             {:.4} mJ/m^2", units::j_to_mj(moments.std_energy));
    println!(
        "  P(d <= 0.25 nm)     {:.4}",
        proximity_fraction(&dist, 0.25e-9)?
    );
    println!(
        "  P(d <= 1.00 nm)     {:.4}",
        proximity_fraction(&dist, 1.00e-9)?
    );
    println!(
        "  vdW shear           {:.2} MPa  (delta_x {:.3} nm)",
        units::pa_to_mpa(vdw.shear_stress),
        delta_x_nm
    );
    println!(
        "  molecular bound     {:.2} GPa (Si-O), {:.2} GPa (C-O)",
        sio_pred.shear_stress / 1e9,
        co_pred.shear_stress / 1e9
    );
    println!();
    println!("Comparison with reference values:");
    println!("  {:<38} {:>10}  {:<14} note", "label", "shear/MPa", "provenance");
    for row in literature_comparison(&[vdw, sio_pred, co_pred]) {
        println!(
            "  {:<38} {:>10.2}  {:<14} {}",
            row.label,
            units::pa_to_mpa(row.shear),
            row.provenance,
            row.note.unwrap_or_default()
        );
    }
    Ok(())
}

fn write_file(path: &Path, contents: &str) -> Result<(), Error> {
    std::fs::write(path, contents).map_err(|source| Error::Io {
        path: path.to_owned(),
        source,
    })
}

#[allow(clippy::too_many_arguments)]
fn cmd_curve(
    rms_top_min: f64,
    rms_top_max: f64,
    points: usize,
    rms_bottom_nm: f64,
    delta_x_nm: f64,
    m1: &str,
    m2: &str,
    medium: &str,
    output_dir: &Path,
    format: OutputFormat,
    common: &CommonOpts,
) -> Result<(), Error> {
    if points < 2 {
        return Err(Error::Domain(format!("need at least 2 points, got {points}")));
    }
    // Reversed ranges are normalized; rows always ascend.
    let (lo, hi) = if rms_top_min <= rms_top_max {
        (rms_top_min, rms_top_max)
    } else {
        (rms_top_max, rms_top_min)
    };
    let rms_values: Vec<f64> = (0..points)
        .map(|i| units::nm_to_m(lo + (hi - lo) * i as f64 / (points - 1) as f64))
        .collect();
    let cat = catalogue(common)?;
    let curve = shear_vs_roughness_curve(
        cat.require(m1)?,
        cat.require(m2)?,
        cat.require(medium)?,
        common.temperature,
        units::nm_to_m(rms_bottom_nm),
        &rms_values,
        units::nm_to_m(delta_x_nm),
        HYDROXYL_FLOOR,
    )?;

    let mut csv = String::from("rms_top_nm,shear_MPa\n");
    let mut plot_points = Vec::new();
    for p in &curve {
        let rms_nm = units::m_to_nm(p.rms_top);
        match &p.shear {
            Ok(s) => {
                let mpa = units::pa_to_mpa(*s);
                csv.push_str(&format!("{rms_nm:.6},{mpa:.6}\n"));
                plot_points.push((rms_nm, mpa));
            }
            Err(msg) => csv.push_str(&format!("{rms_nm:.6},error: {msg}\n")),
        }
    }
    if format == OutputFormat::Csv || format == OutputFormat::Both {
        let path = output_dir.join("curve.csv");
        write_file(&path, &csv)?;
        println!("wrote {}", path.display());
    }
    if format == OutputFormat::Svg || format == OutputFormat::Both {
        let path = output_dir.join("curve.svg");
        write_file(&path, &curve_svg(&plot_points))?;
        println!("wrote {}", path.display());
    }
    Ok(())
}

/// Minimal self-contained SVG line plot with the 30-45 MPa reference band
/// shaded.
fn curve_svg(points: &[(f64, f64)]) -> String {
    const W: f64 = 640.0;
    const H: f64 = 440.0;
    const ML: f64 = 70.0;
    const MR: f64 = 20.0;
    const MT: f64 = 20.0;
    const MB: f64 = 50.0;
    let (x_lo, x_hi) = points
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), p| {
            (lo.min(p.0), hi.max(p.0))
        });
    let y_hi = points.iter().fold(50.0f64, |hi, p| hi.max(p.1));
    let (x_lo, x_hi) = if x_lo < x_hi { (x_lo, x_hi) } else { (0.0, 1.0) };
    let sx = |x: f64| ML + (x - x_lo) / (x_hi - x_lo) * (W - ML - MR);
    let sy = |y: f64| H - MB - y / y_hi * (H - MT - MB);

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{W}\" height=\"{H}\" \
viewBox=\"0 0 {W} {H}\">\n"
    ));
    svg.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
    // 30-45 MPa reference band.
    svg.push_str(&format!(
        "<rect x=\"{ML}\" y=\"{:.2}\" width=\"{:.2}\" height=\"{:.2}\" fill=\"#cfe8cf\"/>\n",
        sy(45.0),
        W - ML - MR,
        sy(30.0) - sy(45.0)
    ));
    svg.push_str(&format!(
        "<rect x=\"{ML}\" y=\"{MT}\" width=\"{:.2}\" height=\"{:.2}\" fill=\"none\" \
stroke=\"black\"/>\n",
        W - ML - MR,
        H - MT - MB
    ));
    if !points.is_empty() {
        let path: Vec<String> = points
            .iter()
            .map(|&(x, y)| format!("{:.2},{:.2}", sx(x), sy(y)))
            .collect();
        svg.push_str(&format!(
            "<polyline points=\"{}\" fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"2\"/>\n",
            path.join(" ")
        ));
    }
    svg.push_str(&format!(
        "<text x=\"{:.0}\" y=\"{:.0}\" text-anchor=\"middle\" font-size=\"14\">top-surface RMS \
roughness / nm</text>\n",
        (ML + W - MR) / 2.0,
        H - 12.0
    ));
    svg.push_str(&format!(
        "<text x=\"16\" y=\"{:.0}\" transform=\"rotate(-90 16 {:.0})\" text-anchor=\"middle\" \
font-size=\"14\">shear stress / MPa</text>\n",
        (MT + H - MB) / 2.0,
        (MT + H - MB) / 2.0
    ));
    for y in [0.0, 15.0, 30.0, 45.0, 60.0] {
        if y > y_hi {
            continue;
        }
        svg.push_str(&format!(
            "<text x=\"{:.0}\" y=\"{:.0}\" text-anchor=\"end\" font-size=\"12\">{y:.0}</text>\n",
            ML - 6.0,
            sy(y) + 4.0
        ));
    }
    svg.push_str("</svg>\n");
    svg
}

fn cmd_afm(path: &Path) -> Result<(), Error> {
    let map = parse_height_map(path)?;
    let stats = compute_stats(&map);
    println!("Surface statistics: {}", path.display());
    println!("  grid                {} x {} at {:.4} nm pitch", map.nx, map.ny, units::m_to_nm(map.pitch));
    println!("  rms                 {:.4} nm", units::m_to_nm(stats.rms));
    match stats.correlation_length {
        Some(c) => {
            println!("  correlation length  {:.4} nm", units::m_to_nm(c));
            println!(
                "  delta_x (half corr) {:.4} nm",
                units::m_to_nm(stats.half_correlation_length.unwrap())
            );
        }
        None => println!("  correlation length  undefined (no 1/e decay on this grid)"),
    }
    match stats.fractal_dimension {
        Some(d) => println!("  fractal dimension   {d:.3}"),
        None => println!("  fractal dimension   undefined"),
    }
    Ok(())
}

fn cmd_synth(
    rms_nm: f64,
    correlation_length_nm: f64,
    n: usize,
    pitch_nm: f64,
    seed: u64,
    out: &Path,
) -> Result<(), Error> {
    let map = synthesize_surface(
        units::nm_to_m(rms_nm),
        units::nm_to_m(correlation_length_nm),
        n,
        n,
        units::nm_to_m(pitch_nm),
        seed,
    )?;
    write_file(out, &map.serialize())?;
    println!("wrote {} ({n} x {n}, seed {seed})", out.display());
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_oracle(
    rms_top_nm: f64,
    rms_bottom_nm: f64,
    correlation_length_nm: f64,
    n: usize,
    pitch_nm: f64,
    step_nm: f64,
    max_offset_nm: f64,
    delta_x_nm: f64,
    seed: u64,
    m1: &str,
    m2: &str,
    medium: &str,
    output_dir: &Path,
    common: &CommonOpts,
) -> Result<(), Error> {
    let cat = catalogue(common)?;
    let a = hamaker_for(&cat, m1, m2, medium, common)?;
    let pitch = units::nm_to_m(pitch_nm);
    let corr = units::nm_to_m(correlation_length_nm);
    let top = synthesize_surface(units::nm_to_m(rms_top_nm), corr, n, n, pitch, seed)?;
    let bottom = synthesize_surface(units::nm_to_m(rms_bottom_nm), corr, n, n, pitch, seed + 1)?;
    let gap = contact_gap(&top, &bottom, HYDROXYL_FLOOR)?;
    let config = DragConfig {
        lateral_step: units::nm_to_m(step_nm),
        max_offset: units::nm_to_m(max_offset_nm),
        nominal_gap: gap,
        hamaker: a.total,
        d_min_clamp: HYDROXYL_FLOOR,
    };
    let landscape = energy_landscape(&top, &bottom, &config)?;
    let delta_x = units::nm_to_m(delta_x_nm);
    let oracle = oracle_shear(&landscape, delta_x)?;

    let dist = separation_from_roughness(
        units::nm_to_m(rms_top_nm),
        units::nm_to_m(rms_bottom_nm),
        HYDROXYL_FLOOR,
    )?;
    let analytic = vdw_shear(&energy_moments(a.total, &dist)?, delta_x)?.shear_stress;

    let mut csv = String::from("offset_nm,energy_mJ_per_m2\n");
    for (o, e) in landscape.offsets.iter().zip(&landscape.energies) {
        csv.push_str(&format!(
            "{:.6},{:.6}\n",
            units::m_to_nm(*o),
            units::j_to_mj(*e)
        ));
    }
    let path = output_dir.join("landscape.csv");
    write_file(&path, &csv)?;

    println!("Drag oracle: seed {seed}, {n} x {n} at {pitch_nm} nm pitch");
    println!("  rest offset         {:.4} nm", units::m_to_nm(landscape.rest_offset()));
    println!("  oracle shear        {:.3} MPa", units::pa_to_mpa(oracle));
    println!("  analytic shear      {:.3} MPa", units::pa_to_mpa(analytic));
    println!("  ratio oracle/analytic  {:.3}", oracle / analytic);
    println!("wrote {}", path.display());
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_calibrate(
    mean_separation_nm: f64,
    mean_energy_mj: f64,
    std_energy_mj: f64,
    rms_top_nm: f64,
    rms_bottom_nm: f64,
    m1: &str,
    m2: &str,
    medium: &str,
    out: Option<&Path>,
    common: &CommonOpts,
) -> Result<(), Error> {
    let cat = catalogue(common)?;
    let a = hamaker_for(&cat, m1, m2, medium, common)?;
    let targets = CalibrationTargets {
        mean_separation: units::nm_to_m(mean_separation_nm),
        mean_energy: units::mj_to_j(mean_energy_mj),
        std_energy: units::mj_to_j(std_energy_mj),
    };
    let fit = calibrate(
        a.total,
        units::nm_to_m(rms_top_nm),
        units::nm_to_m(rms_bottom_nm),
        HYDROXYL_FLOOR,
        targets,
    )?;
    println!("Calibrated gap distribution (least squares on relative residuals):");
    println!("  location            {:.6} nm", units::m_to_nm(fit.location));
    println!("  scale               {:.6} nm", units::m_to_nm(fit.scale));
    println!(
        "  residuals           mean separation {:+.2}%, mu_w {:+.2}%, sigma_w {:+.2}%",
        100.0 * fit.residuals[0],
        100.0 * fit.residuals[1],
        100.0 * fit.residuals[2]
    );
    if let Some(path) = out {
        let snippet = format!(
            "# fitted gap distribution (lengths in nm)\nlocation_nm = {:.6}\nscale_nm = {:.6}\n",
            units::m_to_nm(fit.location),
            units::m_to_nm(fit.scale)
        );
        write_file(path, &snippet)?;
        println!("wrote {}", path.display());
    }
    Ok(())
}
