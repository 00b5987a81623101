//! Subcommand logic, separated from argument parsing so tests can drive it.

use std::fmt::Write as _;
use std::path::Path;

use fourfold_core::classify::{
    classify_all, glue_candidates, merged_nonempty_components, ComponentReport, Family,
    GlueVerdict,
};
use fourfold_core::excess::{excess_surface_plane, mult_along_curve, AmbientPreset};
use fourfold_core::geom::{
    construct_component_example, verify_example, GeomError, PlaneConstraint, VerifyReport,
};
use fourfold_core::lattice::GramMatrix;

use crate::files::{family_from_tag, load_dir, ExampleFile};
use crate::grammar::parse_int_matrix;
use crate::report;
use crate::SCHEMA_VERSION;

/// Output plus the process exit code (0 success, 2 verification failure,
/// 3 parse error, 4 budget exhausted).
#[derive(Debug)]
pub struct CommandOutput {
    pub stdout: String,
    pub code: i32,
}

impl CommandOutput {
    fn ok(stdout: String) -> Self {
        CommandOutput { stdout, code: 0 }
    }
}

#[derive(Debug)]
pub enum CliError {
    Parse(String),
    Budget(String),
    Other(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 3,
            CliError::Budget(_) => 4,
            CliError::Other(_) => 1,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Parse(_) => "parse-error",
            CliError::Budget(_) => "budget-exhausted",
            CliError::Other(_) => "error",
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Parse(m) | CliError::Budget(m) | CliError::Other(m) => m,
        }
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            report::error_doc(self.kind(), self.message().to_string())
        } else {
            format!("error: {}", self.message())
        }
    }
}

fn parse_family(tag: &str) -> Result<Family, CliError> {
    family_from_tag(tag)
        .ok_or_else(|| CliError::Parse(format!("unknown family '{tag}' (expected m12 or m20)")))
}

fn lattice_vec_text(v: &[i64]) -> String {
    let inner: Vec<String> = v.iter().map(|c| c.to_string()).collect();
    format!("({})", inner.join(","))
}

fn gram_text(rows: &[Vec<i64>]) -> String {
    let rendered: Vec<String> = rows
        .iter()
        .map(|r| {
            let inner: Vec<String> = r.iter().map(|c| c.to_string()).collect();
            format!("[{}]", inner.join(","))
        })
        .collect();
    format!("[{}]", rendered.join(","))
}

fn classify_text(family: Family, reports: &[ComponentReport], merged: &[Vec<i64>]) -> String {
    let mut out = String::new();
    let params: Vec<i64> = reports.iter().map(|r| r.param).collect();
    let _ = writeln!(
        out,
        "family {}: admissible parameters {:?}",
        family.cli_tag(),
        params
    );
    for r in reports {
        let mut line = format!("  param {:>2}: det {:>2}", r.param, r.determinant);
        if r.nonempty {
            line.push_str(", nonempty");
            match r.irreducible {
                Some(true) => line.push_str(", irreducible"),
                Some(false) => line.push_str(", REDUCIBLE"),
                None => {}
            }
            if !r.merged_with.is_empty() {
                let _ = write!(line, ", coincides with {:?}", r.merged_with);
            }
            if !r.certificates.is_empty() {
                let kinds: Vec<String> = r
                    .certificates
                    .iter()
                    .map(|c| {
                        format!(
                            "{}({})",
                            match c.kind {
                                fourfold_core::classify::CertificateKind::OddMultisection =>
                                    "odd-multisection",
                                fourfold_core::classify::CertificateKind::ReducibleOadp =>
                                    "reducible-oadp",
                            },
                            c.value
                        )
                    })
                    .collect();
                let _ = write!(line, ", rational: {}", kinds.join(" "));
            }
        } else {
            let witness = r
                .short_root
                .as_ref()
                .map(|w| lattice_vec_text(&w.0))
                .unwrap_or_default();
            let _ = write!(line, ", empty (short root {witness})");
        }
        let _ = writeln!(out, "{line}");
    }
    let classes: Vec<String> = merged
        .iter()
        .map(|c| {
            let inner: Vec<String> = c.iter().map(|p| p.to_string()).collect();
            format!("{{{}}}", inner.join(","))
        })
        .collect();
    let _ = writeln!(
        out,
        "merged nonempty components ({}): {}",
        merged.len(),
        classes.join(" ")
    );
    out
}

pub fn run_classify(family_tag: &str, json: bool) -> Result<CommandOutput, CliError> {
    let family = parse_family(family_tag)?;
    let reports = classify_all(family).map_err(|e| CliError::Other(format!("{e}")))?;
    let merged =
        merged_nonempty_components(family).map_err(|e| CliError::Other(format!("{e}")))?;
    let stdout = if json {
        let doc = report::classify_doc(family.cli_tag(), &reports, merged);
        serde_json::to_string_pretty(&doc).expect("serializable")
    } else {
        classify_text(family, &reports, &merged)
    };
    Ok(CommandOutput::ok(stdout))
}

fn load_gram(arg: &str) -> Result<GramMatrix, CliError> {
    let text = if Path::new(arg).exists() {
        std::fs::read_to_string(arg).map_err(|e| CliError::Other(format!("{e}")))?
    } else {
        arg.to_string()
    };
    let rows = parse_int_matrix(&text).map_err(|e| CliError::Parse(format!("{e}")))?;
    GramMatrix::new(&rows).map_err(|e| CliError::Parse(format!("{e}")))
}

pub fn run_shortroots(gram_arg: &str, json: bool) -> Result<CommandOutput, CliError> {
    let gram = load_gram(gram_arg)?;
    let roots = gram
        .short_vectors(2)
        .map_err(|e| CliError::Other(format!("{e}")))?;
    let stdout = if json {
        #[derive(serde::Serialize)]
        struct Doc {
            schema: &'static str,
            command: &'static str,
            gram: Vec<Vec<i64>>,
            short_roots: Vec<Vec<i64>>,
        }
        serde_json::to_string_pretty(&Doc {
            schema: SCHEMA_VERSION,
            command: "lattice-shortroots",
            gram: gram.rows(),
            short_roots: roots.iter().map(|r| r.0.clone()).collect(),
        })
        .expect("serializable")
    } else if roots.is_empty() {
        format!("{}: no short roots (enumeration exhaustive)\n", gram_text(&gram.rows()))
    } else {
        let list: Vec<String> = roots.iter().map(|r| lattice_vec_text(&r.0)).collect();
        format!("{}: short roots {}\n", gram_text(&gram.rows()), list.join(" "))
    };
    Ok(CommandOutput::ok(stdout))
}

pub fn run_overlattices(family_tag: &str, param: i64, json: bool) -> Result<CommandOutput, CliError> {
    let family = parse_family(family_tag)?;
    let log = glue_candidates(family, param).map_err(|e| CliError::Other(format!("{e}")))?;
    let stdout = if json {
        #[derive(serde::Serialize)]
        struct Doc {
            schema: &'static str,
            command: &'static str,
            family: String,
            param: i64,
            candidates: Vec<report::GlueDto>,
        }
        serde_json::to_string_pretty(&Doc {
            schema: SCHEMA_VERSION,
            command: "lattice-overlattices",
            family: family.cli_tag().to_string(),
            param,
            candidates: log.iter().map(report::glue_dto).collect(),
        })
        .expect("serializable")
    } else {
        let mut out = format!(
            "overlattice scan for {} at parameter {param}: {} integral candidate(s)\n",
            family.cli_tag(),
            log.len()
        );
        for c in &log {
            let verdict = match &c.verdict {
                GlueVerdict::RejectedShortRoot { witness } => {
                    format!("rejected-short-root {}", lattice_vec_text(&witness.0))
                }
                GlueVerdict::RejectedNotEven { complement } => {
                    format!("rejected-not-even complement {}", gram_text(&complement.rows()))
                }
                GlueVerdict::Viable => "viable".to_string(),
            };
            let _ = writeln!(
                out,
                "  n={} x'={} y'={} -> (a,b,c)=({},{},{}) gram {} {}",
                c.n,
                c.xp,
                c.yp,
                c.a,
                c.b,
                c.c,
                gram_text(&c.gram.rows()),
                verdict
            );
        }
        out
    };
    Ok(CommandOutput::ok(stdout))
}

pub fn run_excess(
    preset_name: &str,
    d: i64,
    g: i64,
    k1c: i64,
    k2c: Option<i64>,
    json: bool,
) -> Result<CommandOutput, CliError> {
    let preset = AmbientPreset::from_name(preset_name).ok_or_else(|| {
        CliError::Parse(format!(
            "unknown preset '{preset_name}' (expected cubic-fourfold, scroll-projection, veronese-projection)"
        ))
    })?;
    let (kind, value) = match k2c {
        Some(k2c) => ("multiplicity", mult_along_curve(preset, d, g, k1c, k2c)),
        None => (
            "excess",
            excess_surface_plane(k1c, d, g).map_err(|e| CliError::Parse(format!("{e}")))?,
        ),
    };
    let stdout = if json {
        #[derive(serde::Serialize)]
        struct Doc {
            schema: &'static str,
            command: &'static str,
            preset: String,
            d: i64,
            g: i64,
            k1c: i64,
            #[serde(skip_serializing_if = "Option::is_none")]
            k2c: Option<i64>,
            kind: &'static str,
            value: i64,
        }
        serde_json::to_string_pretty(&Doc {
            schema: SCHEMA_VERSION,
            command: "excess",
            preset: preset.name().to_string(),
            d,
            g,
            k1c,
            k2c,
            kind,
            value,
        })
        .expect("serializable")
    } else {
        format!("{kind} ({}, d={d}, g={g}): {value}\n", preset.name())
    };
    Ok(CommandOutput::ok(stdout))
}

/// Verify every example in a directory, in parallel, aggregating in file
/// order. Exit code 2 if any example fails.
pub fn run_verify(dir: &Path, json: bool) -> Result<CommandOutput, CliError> {
    let files = load_dir(dir).map_err(|e| CliError::Parse(format!("{e}")))?;
    if files.is_empty() {
        return Err(CliError::Parse(format!(
            "no .json example files in {}",
            dir.display()
        )));
    }
    let mut records = Vec::with_capacity(files.len());
    for (name, file) in &files {
        let record = file
            .into_record()
            .map_err(|e| CliError::Parse(format!("{name}: {e}")))?;
        records.push((name.clone(), file.expected_profile.clone(), record));
    }
    let mut results: Vec<Option<Result<VerifyReport, GeomError>>> = Vec::new();
    results.resize_with(records.len(), || None);
    std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for (i, (_, _, record)) in records.iter().enumerate() {
            handles.push((i, scope.spawn(move || verify_example(record))));
        }
        for (i, handle) in handles {
            results[i] = Some(handle.join().expect("verifier thread panicked"));
        }
    });
    let mut dtos = Vec::with_capacity(records.len());
    for ((name, expected, _), result) in records.iter().zip(results) {
        let report = result
            .expect("filled")
            .map_err(|e| CliError::Parse(format!("{name}: {e}")))?;
        dtos.push(report::verify_dto(name, expected, &report));
    }
    let all_passed = dtos.iter().all(|d| d.pass);
    let stdout = if json {
        #[derive(serde::Serialize)]
        struct Doc {
            schema: &'static str,
            command: &'static str,
            examples: String,
            reports: Vec<report::VerifyDto>,
            all_passed: bool,
        }
        serde_json::to_string_pretty(&Doc {
            schema: SCHEMA_VERSION,
            command: "verify",
            examples: dir.display().to_string(),
            reports: dtos,
            all_passed,
        })
        .expect("serializable")
    } else {
        let mut out = String::new();
        let mut passed = 0usize;
        for d in &dtos {
            if d.pass {
                passed += 1;
            }
            let recipe = d
                .recipe_used
                .as_deref()
                .map(|r| format!(" [{}]", r))
                .unwrap_or_default();
            let _ = writeln!(
                out,
                "{}: {} profile={} expected={}{}{}",
                d.label,
                if d.pass { "PASS" } else { "FAIL" },
                d.profile,
                d.expected_profile,
                recipe,
                if d.pass {
                    String::new()
                } else {
                    format!(
                        " (smooth={} plane={} surface={} profile_ok={})",
                        d.smooth, d.contains_plane, d.contains_surface, d.profile_matches
                    )
                }
            );
        }
        let _ = writeln!(out, "{passed}/{} examples passed", dtos.len());
        out
    };
    Ok(CommandOutput {
        stdout,
        code: if all_passed { 0 } else { 2 },
    })
}

pub fn parse_constraint(s: &str) -> Result<PlaneConstraint, CliError> {
    match s {
        "generic" | "empty" => Ok(PlaneConstraint::Generic),
        "conic" => Ok(PlaneConstraint::ThroughConic),
        "ruling" => Ok(PlaneConstraint::ContainingRulingLine),
        "directrix" => Ok(PlaneConstraint::ContainingDirectrix),
        _ => {
            if let Some(k) = s.strip_prefix("points:") {
                let k: usize = k
                    .parse()
                    .map_err(|_| CliError::Parse(format!("bad point count in '{s}'")))?;
                if (1..=3).contains(&k) {
                    return Ok(PlaneConstraint::ThroughPoints(k));
                }
            }
            Err(CliError::Parse(format!(
                "unknown constraint '{s}' (generic, points:1..3, conic, ruling, directrix)"
            )))
        }
    }
}

pub fn run_construct(
    family_tag: &str,
    param: i64,
    seed: u64,
    budget: u32,
    constraint: Option<&str>,
) -> Result<CommandOutput, CliError> {
    let family = parse_family(family_tag)?;
    let variant = constraint.map(parse_constraint).transpose()?;
    let record = construct_component_example(family, param, seed, budget, variant).map_err(
        |e| match e {
            GeomError::BudgetExhausted { .. } => CliError::Budget(format!("{e}")),
            GeomError::UnsupportedParameter { .. } | GeomError::NoSuchComponent { .. } => {
                CliError::Other(format!("{e}"))
            }
            other => CliError::Other(format!("{other}")),
        },
    )?;
    let file = ExampleFile::from_record(&record);
    Ok(CommandOutput::ok(file.to_json_pretty()))
}
