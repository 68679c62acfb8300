//! File-backed catalogue of material and medium optical properties.
//!
//! The file format is plain text, one record per line:
//!
//! ```text
//! # name            static_permittivity  refractive_index  absorption_frequency_hz
//! diamond           5.7                  2.40              3.0e15
//! ```
//!
//! Lines starting with `#` and blank lines are ignored. Permittivity and
//! refractive index are dimensionless; the absorption frequency is in Hz.
//! See `data/materials.example.txt` in the repository root for an annotated
//! example.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use crate::constants::DEFAULT_ABSORPTION_FREQUENCY;
use crate::{Error, Result};

/// Static optical properties of one material or immersion medium.
#[derive(Debug, Clone, PartialEq)]
pub struct MaterialOptics {
    pub name: String,
    /// Static (zero-frequency) relative permittivity, ≥ 1.
    pub static_permittivity: f64,
    /// Visible-range refractive index, ≥ 1.
    pub refractive_index: f64,
    /// Principal UV electronic absorption frequency, Hz.
    pub absorption_frequency: f64,
}

impl MaterialOptics {
    pub fn new(name: &str, static_permittivity: f64, refractive_index: f64) -> Self {
        Self {
            name: name.to_owned(),
            static_permittivity,
            refractive_index,
            absorption_frequency: DEFAULT_ABSORPTION_FREQUENCY,
        }
    }

    /// Checks field invariants, reporting the first violated field.
    pub fn validate(&self) -> std::result::Result<(), (String, String)> {
        if !self.static_permittivity.is_finite() || self.static_permittivity < 1.0 {
            return Err((
                "static_permittivity".into(),
                format!("must be >= 1, got {}", self.static_permittivity),
            ));
        }
        if !self.refractive_index.is_finite() || self.refractive_index < 1.0 {
            return Err((
                "refractive_index".into(),
                format!("must be >= 1, got {}", self.refractive_index),
            ));
        }
        if !self.absorption_frequency.is_finite() || self.absorption_frequency <= 0.0 {
            return Err((
                "absorption_frequency".into(),
                format!("must be > 0, got {}", self.absorption_frequency),
            ));
        }
        Ok(())
    }
}

/// Immutable collection of [`MaterialOptics`] keyed by name.
#[derive(Debug, Clone)]
pub struct Catalogue {
    entries: BTreeMap<String, MaterialOptics>,
    pub source_path: Option<PathBuf>,
}

impl Catalogue {
    pub fn get(&self, name: &str) -> Option<&MaterialOptics> {
        self.entries.get(name)
    }

    /// Like [`Catalogue::get`] but produces [`Error::UnknownMaterial`].
    pub fn require(&self, name: &str) -> Result<&MaterialOptics> {
        self.get(name)
            .ok_or_else(|| Error::UnknownMaterial(name.to_owned()))
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.entries.keys().map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Renders the catalogue in the material-file format.
    pub fn serialize(&self) -> String {
        let mut out = String::from(
            "# name  static_permittivity  refractive_index  absorption_frequency_hz\n",
        );
        for m in self.entries.values() {
            out.push_str(&format!(
                "{} {} {} {}\n",
                m.name, m.static_permittivity, m.refractive_index, m.absorption_frequency
            ));
        }
        out
    }
}

/// The built-in presets.
///
/// Handbook constants, chosen so the two-term Hamaker evaluation reproduces
/// the reference diamond/silica values in vacuum, water and IPA (see the
/// regression tests below). Air is modeled as vacuum.
pub fn builtin_catalogue() -> Catalogue {
    let presets = [
        MaterialOptics::new("diamond", 5.7, 2.40),
        MaterialOptics::new("fused_silica", 3.8, 1.45),
        MaterialOptics::new("water", 80.0, 1.333),
        MaterialOptics::new("ipa", 18.3, 1.377),
        MaterialOptics::new("vacuum", 1.0, 1.0),
        MaterialOptics::new("air", 1.0, 1.0),
    ];
    let mut entries = BTreeMap::new();
    for m in presets {
        entries.insert(m.name.clone(), m);
    }
    Catalogue {
        entries,
        source_path: None,
    }
}

/// Loads a material file and merges it over the built-ins.
///
/// File entries shadow built-ins of the same name.
pub fn load_catalogue(path: &Path) -> Result<Catalogue> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_owned(),
        source,
    })?;
    let mut cat = builtin_catalogue();
    for material in parse_materials(&text)? {
        cat.entries.insert(material.name.clone(), material);
    }
    cat.source_path = Some(path.to_owned());
    Ok(cat)
}

/// Parses material records from the line-based text format.
pub fn parse_materials(text: &str) -> Result<Vec<MaterialOptics>> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 4 {
            return Err(Error::Parse {
                line: line_no,
                column: 1,
                message: format!("expected 4 fields (name eps n nu_e), got {}", fields.len()),
            });
        }
        let name = fields[0].to_owned();
        let mut numbers = [0.0f64; 3];
        for (i, tok) in fields[1..].iter().enumerate() {
            numbers[i] = tok.parse().map_err(|_| Error::Parse {
                line: line_no,
                column: column_of(raw, tok),
                message: format!("non-numeric value `{tok}`"),
            })?;
        }
        let material = MaterialOptics {
            name: name.clone(),
            static_permittivity: numbers[0],
            refractive_index: numbers[1],
            absorption_frequency: numbers[2],
        };
        material.validate().map_err(|(field, message)| Error::Validation {
            line: line_no,
            name,
            field,
            message,
        })?;
        out.push(material);
    }
    Ok(out)
}

fn column_of(line: &str, token: &str) -> usize {
    line.find(token).map(|i| i + 1).unwrap_or(1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::DEFAULT_TEMPERATURE;
    use crate::lifshitz::hamaker_constant;

    #[test]
    fn builtin_vacuum_identity() {
        let cat = builtin_catalogue();
        let v = cat.get("vacuum").unwrap();
        assert_eq!(v.static_permittivity, 1.0);
        assert_eq!(v.refractive_index, 1.0);
    }

    /// Pins every preset's numeric fields so defaults never change silently.
    #[test]
    fn builtin_defaults_are_pinned() {
        let cat = builtin_catalogue();
        let expect = [
            ("diamond", 5.7, 2.40),
            ("fused_silica", 3.8, 1.45),
            ("water", 80.0, 1.333),
            ("ipa", 18.3, 1.377),
            ("vacuum", 1.0, 1.0),
            ("air", 1.0, 1.0),
        ];
        for (name, eps, n) in expect {
            let m = cat.get(name).unwrap();
            assert_eq!(m.static_permittivity, eps, "{name} eps");
            assert_eq!(m.refractive_index, n, "{name} n");
            assert_eq!(m.absorption_frequency, 3.0e15, "{name} nu_e");
        }
    }

    #[test]
    fn builtin_reproduces_reference_hamaker_values() {
        let cat = builtin_catalogue();
        let d = cat.get("diamond").unwrap();
        let s = cat.get("fused_silica").unwrap();
        for (medium, target, tol) in [
            ("vacuum", 1.30e-19, 0.20),
            ("water", 2.8e-20, 0.25),
            ("ipa", 1.6e-20, 0.30),
        ] {
            let m = cat.get(medium).unwrap();
            let a = hamaker_constant(d, s, m, DEFAULT_TEMPERATURE).unwrap();
            let rel = (a.total - target) / target;
            assert!(
                rel.abs() < tol,
                "A_H in {medium}: {:.3e} vs {target:.3e} ({:+.1}%)",
                a.total,
                rel * 100.0
            );
        }
    }

    #[test]
    fn parse_merges_and_shadows() {
        let text = "# comment\nsapphire 9.4 1.77 3.0e15\n";
        let mats = parse_materials(text).unwrap();
        assert_eq!(mats.len(), 1);
        assert_eq!(mats[0].name, "sapphire");
    }

    #[test]
    fn invalid_refractive_index_names_field_and_line() {
        let text = "\ndiamond 5.7 0.5 3.0e15\n";
        match parse_materials(text) {
            Err(Error::Validation { line, field, name, .. }) => {
                assert_eq!(line, 2);
                assert_eq!(field, "refractive_index");
                assert_eq!(name, "diamond");
            }
            other => panic!("expected validation error, got {other:?}"),
        }
    }

    #[test]
    fn non_numeric_field_is_parse_error() {
        let text = "diamond 5.7 two 3.0e15";
        match parse_materials(text) {
            Err(Error::Parse { line, column, .. }) => {
                assert_eq!(line, 1);
                assert_eq!(column, 13);
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn empty_file_is_identity_merge() {
        let dir = std::env::temp_dir().join("bondshear-materials-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("empty.txt");
        std::fs::write(&path, "").unwrap();
        let loaded = load_catalogue(&path).unwrap();
        let builtin = builtin_catalogue();
        assert_eq!(loaded.len(), builtin.len());
        for name in builtin.names() {
            assert_eq!(loaded.get(name), builtin.get(name));
        }
    }

    #[test]
    fn missing_file_is_io_error() {
        assert!(matches!(
            load_catalogue(Path::new("/nonexistent/materials.txt")),
            Err(Error::Io { .. })
        ));
    }

    #[test]
    fn serialize_round_trip() {
        let cat = builtin_catalogue();
        let text = cat.serialize();
        let mats = parse_materials(&text).unwrap();
        assert_eq!(mats.len(), cat.len());
        for m in mats {
            assert_eq!(&m, cat.get(&m.name).unwrap());
        }
    }
}
