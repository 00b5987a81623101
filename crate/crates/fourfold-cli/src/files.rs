//! The example file format: one JSON document per verifiable cubic.

use std::path::Path;

use serde::{Deserialize, Serialize};

use fourfold_core::classify::Family;
use fourfold_core::geom::{ExampleRecord, IntersectionProfile, SurfaceRecipe, SurfaceSpec};
use fourfold_core::poly::{Ideal, RingSpec};

use crate::grammar::{parse_poly, print_poly, VarTable};

/// On-disk shape of an example.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ExampleFile {
    pub label: String,
    /// `m12` (plane + scroll) or `m20` (plane + Veronese).
    pub family: String,
    pub field_char: u32,
    /// Three linear forms in `x_0..x_5`.
    pub plane: Vec<String>,
    pub surface: SurfaceField,
    pub cubic: String,
    /// `empty`, `line`, `conic`, `points(k)`, or `other(dim,deg)`.
    pub expected_profile: String,
    pub expected_param: i64,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub cross_links: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SurfaceField {
    Recipe { recipe: String },
    Explicit { polys: Vec<String> },
}

#[derive(Debug)]
pub enum FileError {
    Io(std::io::Error),
    Json(serde_json::Error),
    Parse(crate::grammar::ParseError),
    BadField { field: &'static str, message: String },
}

impl std::fmt::Display for FileError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FileError::Io(e) => write!(f, "io error: {e}"),
            FileError::Json(e) => write!(f, "json error: {e}"),
            FileError::Parse(e) => write!(f, "{e}"),
            FileError::BadField { field, message } => write!(f, "bad field '{field}': {message}"),
        }
    }
}

impl std::error::Error for FileError {}

impl From<std::io::Error> for FileError {
    fn from(e: std::io::Error) -> Self {
        FileError::Io(e)
    }
}

impl From<serde_json::Error> for FileError {
    fn from(e: serde_json::Error) -> Self {
        FileError::Json(e)
    }
}

impl From<crate::grammar::ParseError> for FileError {
    fn from(e: crate::grammar::ParseError) -> Self {
        FileError::Parse(e)
    }
}

pub fn family_from_tag(tag: &str) -> Option<Family> {
    match tag {
        "m12" => Some(Family::Scroll),
        "m20" => Some(Family::Veronese),
        _ => None,
    }
}

impl ExampleFile {
    pub fn read(path: &Path) -> Result<ExampleFile, FileError> {
        let text = std::fs::read_to_string(path)?;
        Ok(serde_json::from_str(&text)?)
    }

    /// Validate and convert into the core record.
    pub fn into_record(&self) -> Result<ExampleRecord, FileError> {
        let family = family_from_tag(&self.family).ok_or(FileError::BadField {
            field: "family",
            message: format!("expected m12 or m20, got '{}'", self.family),
        })?;
        let ring = RingSpec::grevlex(self.field_char, fourfold_core::geom::AMBIENT_VARS);
        if ring.prime != self.field_char {
            return Err(FileError::BadField {
                field: "field_char",
                message: "not a valid modulus".into(),
            });
        }
        // RingSpec::field panics on invalid primes; validate eagerly.
        if fourfold_core::field::PrimeField::new(self.field_char).is_err() {
            return Err(FileError::BadField {
                field: "field_char",
                message: format!("{} is not an odd prime", self.field_char),
            });
        }
        let vars = VarTable::ambient();
        let mut plane_gens = Vec::with_capacity(self.plane.len());
        for form in &self.plane {
            plane_gens.push(parse_poly(form, ring, &vars)?);
        }
        let plane = Ideal::new(ring, plane_gens).map_err(|e| FileError::BadField {
            field: "plane",
            message: format!("{e}"),
        })?;
        let surface = match &self.surface {
            SurfaceField::Recipe { recipe } => {
                let recipe = SurfaceRecipe::from_tag(recipe).ok_or(FileError::BadField {
                    field: "surface",
                    message: format!("unknown recipe '{recipe}'"),
                })?;
                SurfaceSpec::Recipe(recipe)
            }
            SurfaceField::Explicit { polys } => {
                let mut gens = Vec::with_capacity(polys.len());
                for p in polys {
                    gens.push(parse_poly(p, ring, &vars)?);
                }
                SurfaceSpec::Explicit(Ideal::new(ring, gens).map_err(|e| FileError::BadField {
                    field: "surface",
                    message: format!("{e}"),
                })?)
            }
        };
        let cubic = parse_poly(&self.cubic, ring, &vars)?;
        let expected_profile =
            IntersectionProfile::parse(&self.expected_profile).ok_or(FileError::BadField {
                field: "expected_profile",
                message: format!("unparseable profile '{}'", self.expected_profile),
            })?;
        Ok(ExampleRecord {
            label: self.label.clone(),
            family,
            prime: self.field_char,
            plane,
            surface,
            cubic,
            expected_profile,
            expected_param: self.expected_param,
            cross_links: self.cross_links.clone(),
        })
    }

    /// Render a core record with canonical polynomial printing.
    pub fn from_record(record: &ExampleRecord) -> ExampleFile {
        let vars = VarTable::ambient();
        ExampleFile {
            label: record.label.clone(),
            family: record.family.cli_tag().to_string(),
            field_char: record.prime,
            plane: record.plane.gens.iter().map(|g| print_poly(g, &vars)).collect(),
            surface: match &record.surface {
                SurfaceSpec::Recipe(r) => SurfaceField::Recipe { recipe: r.tag() },
                SurfaceSpec::Explicit(ideal) => SurfaceField::Explicit {
                    polys: ideal.gens.iter().map(|g| print_poly(g, &vars)).collect(),
                },
            },
            cubic: print_poly(&record.cubic, &vars),
            expected_profile: record.expected_profile.to_string(),
            expected_param: record.expected_param,
            cross_links: record.cross_links.clone(),
        }
    }

    pub fn to_json_pretty(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }
}

/// Load every `*.json` in a directory, sorted by file name.
pub fn load_dir(dir: &Path) -> Result<Vec<(String, ExampleFile)>, FileError> {
    let mut paths: Vec<_> = std::fs::read_dir(dir)?
        .filter_map(|e| e.ok())
        .map(|e| e.path())
        .filter(|p| p.extension().map(|x| x == "json").unwrap_or(false))
        .collect();
    paths.sort();
    let mut out = Vec::with_capacity(paths.len());
    for path in paths {
        let file = ExampleFile::read(&path)?;
        let name = path
            .file_name()
            .map(|n| n.to_string_lossy().into_owned())
            .unwrap_or_default();
        out.push((name, file));
    }
    Ok(out)
}
