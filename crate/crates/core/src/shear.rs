//! Shear-stress predictions: the van der Waals estimate from the lateral
//! variation of the interface energy, and the molecular-bond upper bound from
//! hydroxyl densities and bond dissociation energies.

use crate::constants::ELECTRONVOLT;
use crate::interface::{energy_moments, separation_from_roughness, EnergyMoments};
use crate::lifshitz::hamaker_constant;
use crate::materials::MaterialOptics;
use crate::{Error, Result};

/// Bonding mechanism behind a prediction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mechanism {
    VanDerWaals,
    Molecular,
}

/// Surface-bond parameters: areal density, dissociation energy and rupture
/// length of one bond population.
#[derive(Debug, Clone, PartialEq)]
pub struct BondSpec {
    pub name: String,
    /// Bonds per unit area, 1/m².
    pub areal_density: f64,
    /// Dissociation energy per bond, eV.
    pub dissociation_energy: f64,
    /// Rupture length, m.
    pub bond_length: f64,
}

impl BondSpec {
    pub fn new(name: &str, areal_density: f64, dissociation_energy: f64, bond_length: f64) -> Self {
        Self {
            name: name.to_owned(),
            areal_density,
            dissociation_energy,
            bond_length,
        }
    }
}

/// Built-in bond populations: isolated and associated surface hydroxyls, and
/// the two covalent bridge candidates.
pub mod bonds {
    use super::BondSpec;

    pub fn isolated_hydroxyl() -> BondSpec {
        BondSpec::new("isolated_hydroxyl", 1.4e18, 0.43, 0.096e-9)
    }

    pub fn associated_hydroxyl() -> BondSpec {
        BondSpec::new("associated_hydroxyl", 3.2e18, 0.26, 0.096e-9)
    }

    /// Si-O bridge at the combined hydroxyl density.
    pub fn siloxane() -> BondSpec {
        BondSpec::new("si_o", 4.6e18, 4.7, 0.163e-9)
    }

    /// C-O bridge at the combined hydroxyl density.
    pub fn carbon_oxygen() -> BondSpec {
        BondSpec::new("c_o", 4.6e18, 3.7, 0.143e-9)
    }
}

/// Inputs that produced a prediction.
#[derive(Debug, Clone, PartialEq)]
pub enum InputsDigest {
    VanDerWaals {
        hamaker: f64,
        mean_energy: f64,
        std_energy: f64,
    },
    Molecular {
        bonded_energy: f64,
        baseline_energy: f64,
    },
}

/// A shear-stress prediction plus the intermediate quantities behind it.
#[derive(Debug, Clone, PartialEq)]
pub struct ShearPrediction {
    /// Predicted shear stress, Pa (zero normal load).
    pub shear_stress: f64,
    pub mechanism: Mechanism,
    /// Interface energy at rest (W0 magnitude), J/m².
    pub rest_energy: f64,
    /// Interface energy when laterally displaced (W1), J/m²; for the vdW
    /// mechanism this is the mean minus one standard deviation.
    pub displaced_energy: Option<f64>,
    /// Lateral displacement over which the energy change is taken, m.
    pub delta_x: f64,
    pub inputs: InputsDigest,
}

/// Van der Waals shear: the energy swings by +/- one standard deviation as
/// the top surface is dragged per unit delta_x, so the peak-to-peak change is
/// `2 sigma_w` and the stress is `2 sigma_w / delta_x`.
pub fn vdw_shear(moments: &EnergyMoments, delta_x: f64) -> Result<ShearPrediction> {
    if !(delta_x > 0.0) {
        return Err(Error::Domain(format!("delta_x must be > 0 m, got {delta_x}")));
    }
    Ok(ShearPrediction {
        shear_stress: 2.0 * moments.std_energy / delta_x,
        mechanism: Mechanism::VanDerWaals,
        rest_energy: moments.mean_energy + moments.std_energy,
        displaced_energy: Some(moments.mean_energy - moments.std_energy),
        delta_x,
        inputs: InputsDigest::VanDerWaals {
            hamaker: moments.hamaker_used,
            mean_energy: moments.mean_energy,
            std_energy: moments.std_energy,
        },
    })
}

/// One point of the shear-vs-roughness curve. Degenerate points carry their
/// error text instead of being dropped.
#[derive(Debug, Clone)]
pub struct CurvePoint {
    /// Top-surface RMS, m.
    pub rms_top: f64,
    pub shear: std::result::Result<f64, String>,
}

/// Evaluates the van der Waals shear over a range of top-surface roughness,
/// with the bottom roughness fixed.
///
/// The curve is parameterized by the top (platelet) RMS alone; whether the
/// combined or single-surface roughness is the natural axis is ambiguous, and
/// this is the documented choice. Points are emitted in ascending RMS order.
#[allow(clippy::too_many_arguments)]
pub fn shear_vs_roughness_curve(
    m1: &MaterialOptics,
    m2: &MaterialOptics,
    medium: &MaterialOptics,
    temperature: f64,
    rms_bottom: f64,
    rms_top_range: &[f64],
    delta_x: f64,
    d_min: f64,
) -> Result<Vec<CurvePoint>> {
    if rms_top_range.is_empty() {
        return Err(Error::Domain("empty roughness range".into()));
    }
    let hamaker = hamaker_constant(m1, m2, medium, temperature)?;
    let mut rms_values = rms_top_range.to_vec();
    rms_values.sort_by(f64::total_cmp);
    let mut out = Vec::with_capacity(rms_values.len());
    for rms_top in rms_values {
        let shear = separation_from_roughness(rms_top, rms_bottom, d_min)
            .and_then(|dist| energy_moments(hamaker.total, &dist))
            .and_then(|moments| vdw_shear(&moments, delta_x))
            .map(|p| p.shear_stress)
            .map_err(|e| e.to_string());
        out.push(CurvePoint { rms_top, shear });
    }
    Ok(out)
}

/// Pre-bond hydrogen-bonded surface energy, J/m²:
/// `2 * d_isolated * E_isolated + d_associated * E_associated`.
pub fn hydrogen_bond_surface_energy(isolated: &BondSpec, associated: &BondSpec) -> f64 {
    (2.0 * isolated.areal_density * isolated.dissociation_energy
        + associated.areal_density * associated.dissociation_energy)
        * ELECTRONVOLT
}

/// Covalently bonded surface energy, J/m²: density times bond energy.
pub fn molecular_surface_energy(total_density: f64, bond_energy_ev: f64) -> f64 {
    total_density * bond_energy_ev * ELECTRONVOLT
}

/// Molecular-bond shear upper bound: the net bond energy (bonded minus the
/// pre-bond hydrogen-bond baseline) released over one bond length.
pub fn molecular_shear(
    bonded_energy: f64,
    baseline_energy: f64,
    bond_length: f64,
) -> Result<ShearPrediction> {
    if !(bond_length > 0.0) {
        return Err(Error::Domain(format!(
            "bond length must be > 0 m, got {bond_length}"
        )));
    }
    if bonded_energy < baseline_energy {
        return Err(Error::Domain(format!(
            "bonded energy {bonded_energy} J/m2 below baseline {baseline_energy} J/m2"
        )));
    }
    Ok(ShearPrediction {
        shear_stress: (bonded_energy - baseline_energy) / bond_length,
        mechanism: Mechanism::Molecular,
        rest_energy: bonded_energy,
        displaced_energy: Some(baseline_energy),
        delta_x: bond_length,
        inputs: InputsDigest::Molecular {
            bonded_energy,
            baseline_energy,
        },
    })
}

/// One embedded literature or measured reference value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LiteratureEntry {
    pub label: &'static str,
    /// "literature" for prior direct-bonding work, "measured dry" /
    /// "measured ipa" for the reference experiment.
    pub provenance: &'static str,
    /// Shear stress, Pa.
    pub shear: f64,
}

/// Prior diamond-on-substrate bonding results, MPa, plus the reference
/// experiment's measured values for the three surface activations.
pub const LITERATURE: &[LiteratureEntry] = &[
    LiteratureEntry { label: "Matsumae (111) direct", provenance: "literature", shear: 35.0e6 },
    LiteratureEntry { label: "Matsumae (100) direct", provenance: "literature", shear: 0.0 },
    LiteratureEntry { label: "Matsumae (100) direct, earlier", provenance: "literature", shear: 2.0e6 },
    LiteratureEntry { label: "Fukumoto (111) direct", provenance: "literature", shear: 31.0e6 },
    LiteratureEntry { label: "Matsumae (111) direct, earlier", provenance: "literature", shear: 9.0e6 },
    LiteratureEntry { label: "Miyatake (100) on sapphire", provenance: "literature", shear: 14.0e6 },
    LiteratureEntry { label: "Yushin polycrystalline fusion", provenance: "literature", shear: 32.0e6 },
    LiteratureEntry { label: "cleaned, dry", provenance: "measured dry", shear: 30.8e6 },
    LiteratureEntry { label: "UV ozone, dry", provenance: "measured dry", shear: 34.3e6 },
    LiteratureEntry { label: "plasma, dry", provenance: "measured dry", shear: 45.1e6 },
    LiteratureEntry { label: "cleaned, IPA", provenance: "measured ipa", shear: 18.0e6 },
    LiteratureEntry { label: "UV ozone, IPA", provenance: "measured ipa", shear: 17.7e6 },
    LiteratureEntry { label: "plasma, IPA", provenance: "measured ipa", shear: 12.7e6 },
];

/// One row of the comparison report.
#[derive(Debug, Clone)]
pub struct ComparisonRow {
    pub label: String,
    pub provenance: String,
    /// Shear stress, Pa.
    pub shear: f64,
    /// Set only on prediction rows.
    pub note: Option<String>,
}

/// Emits predictions alongside the embedded reference values. Pure reporting:
/// no inference, each prediction is annotated with how it sits relative to
/// the measured dry range and the prior literature.
pub fn literature_comparison(predictions: &[ShearPrediction]) -> Vec<ComparisonRow> {
    let dry: Vec<f64> = LITERATURE
        .iter()
        .filter(|e| e.provenance == "measured dry")
        .map(|e| e.shear)
        .collect();
    let dry_min = dry.iter().cloned().fold(f64::INFINITY, f64::min);
    let dry_max = dry.iter().cloned().fold(0.0, f64::max);
    let lit_max = LITERATURE
        .iter()
        .filter(|e| e.provenance == "literature")
        .map(|e| e.shear)
        .fold(0.0, f64::max);

    let mut rows = Vec::new();
    for p in predictions {
        let mech = match p.mechanism {
            Mechanism::VanDerWaals => "model: van der Waals",
            Mechanism::Molecular => "model: molecular bound",
        };
        let note = if p.shear_stress >= dry_min && p.shear_stress <= dry_max {
            format!(
                "inside measured dry range [{:.1}, {:.1}] MPa",
                dry_min / 1e6,
                dry_max / 1e6
            )
        } else {
            format!(
                "{:.0}x the largest prior direct-bond value ({:.1} MPa)",
                p.shear_stress / lit_max,
                lit_max / 1e6
            )
        };
        rows.push(ComparisonRow {
            label: mech.to_owned(),
            provenance: "prediction".to_owned(),
            shear: p.shear_stress,
            note: Some(note),
        });
    }
    for e in LITERATURE {
        rows.push(ComparisonRow {
            label: e.label.to_owned(),
            provenance: e.provenance.to_owned(),
            shear: e.shear,
            note: None,
        });
    }
    rows
}
