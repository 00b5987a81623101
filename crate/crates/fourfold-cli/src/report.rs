//! JSON document types emitted under `--json` (schema `v1`).

use serde::Serialize;

use fourfold_core::classify::{
    CertificateKind, ComponentReport, GlueVerdict, OverlatticeCandidate, RationalityCertificate,
};
use fourfold_core::geom::{PointCountCheck, VerifyReport};
use fourfold_core::lattice::GramMatrix;

use crate::SCHEMA_VERSION;

#[derive(Debug, Serialize)]
pub struct ClassifyDoc {
    pub schema: &'static str,
    pub command: &'static str,
    pub family: String,
    pub reports: Vec<ReportDto>,
    /// Isometry classes restricted to nonempty parameters.
    pub merged_nonempty: Vec<Vec<i64>>,
}

#[derive(Debug, Serialize)]
pub struct ReportDto {
    pub param: i64,
    pub determinant: i64,
    pub nonempty: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub short_root: Option<Vec<i64>>,
    pub glue_log: Vec<GlueDto>,
    pub irreducible: Option<bool>,
    pub certificates: Vec<CertificateDto>,
    pub merged_with: Vec<i64>,
    pub notes: Vec<String>,
    pub caveats: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct GlueDto {
    pub n: i64,
    pub xp: i64,
    pub yp: i64,
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub gram: Vec<Vec<i64>>,
    pub verdict: VerdictDto,
}

#[derive(Debug, Serialize)]
pub struct VerdictDto {
    pub kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub complement_gram: Option<Vec<Vec<i64>>>,
}

#[derive(Debug, Serialize)]
pub struct CertificateDto {
    pub kind: &'static str,
    pub value: i64,
    pub narrative: String,
}

fn gram_rows(g: &GramMatrix) -> Vec<Vec<i64>> {
    g.rows()
}

pub fn certificate_dto(c: &RationalityCertificate) -> CertificateDto {
    CertificateDto {
        kind: match c.kind {
            CertificateKind::OddMultisection => "odd-multisection",
            CertificateKind::ReducibleOadp => "reducible-oadp",
        },
        value: c.value,
        narrative: c.narrative.clone(),
    }
}

pub fn glue_dto(c: &OverlatticeCandidate) -> GlueDto {
    let verdict = match &c.verdict {
        GlueVerdict::RejectedShortRoot { witness } => VerdictDto {
            kind: "rejected-short-root",
            witness: Some(witness.0.clone()),
            complement_gram: None,
        },
        GlueVerdict::RejectedNotEven { complement } => VerdictDto {
            kind: "rejected-not-even",
            witness: None,
            complement_gram: Some(gram_rows(complement)),
        },
        GlueVerdict::Viable => VerdictDto {
            kind: "viable",
            witness: None,
            complement_gram: None,
        },
    };
    GlueDto {
        n: c.n,
        xp: c.xp,
        yp: c.yp,
        a: c.a,
        b: c.b,
        c: c.c,
        gram: gram_rows(&c.gram),
        verdict,
    }
}

pub fn report_dto(r: &ComponentReport) -> ReportDto {
    ReportDto {
        param: r.param,
        determinant: r.determinant,
        nonempty: r.nonempty,
        short_root: r.short_root.as_ref().map(|v| v.0.clone()),
        glue_log: r.glue_log.iter().map(glue_dto).collect(),
        irreducible: r.irreducible,
        certificates: r.certificates.iter().map(certificate_dto).collect(),
        merged_with: r.merged_with.clone(),
        notes: r.notes.clone(),
        caveats: r.caveats.clone(),
    }
}

pub fn classify_doc(
    family: &str,
    reports: &[ComponentReport],
    merged: Vec<Vec<i64>>,
) -> ClassifyDoc {
    ClassifyDoc {
        schema: SCHEMA_VERSION,
        command: "classify",
        family: family.to_string(),
        reports: reports.iter().map(report_dto).collect(),
        merged_nonempty: merged,
    }
}

#[derive(Debug, Serialize)]
pub struct VerifyDoc {
    pub schema: &'static str,
    pub command: &'static str,
    pub examples: String,
    pub reports: Vec<VerifyDto>,
    pub all_passed: bool,
}

#[derive(Debug, Serialize)]
pub struct VerifyDto {
    pub label: String,
    pub file: String,
    pub pass: bool,
    pub smooth: bool,
    pub contains_plane: bool,
    pub contains_surface: bool,
    pub profile_matches: bool,
    pub profile: String,
    pub expected_profile: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub recipe_used: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub point_check: Option<PointCheckDto>,
    pub caveats: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct PointCheckDto {
    pub reduced_rational: bool,
    pub rational_points: i64,
}

pub fn verify_dto(file: &str, expected_profile: &str, r: &VerifyReport) -> VerifyDto {
    VerifyDto {
        label: r.label.clone(),
        file: file.to_string(),
        pass: r.pass(),
        smooth: r.smooth,
        contains_plane: r.contains_plane,
        contains_surface: r.contains_surface,
        profile_matches: r.profile_matches,
        profile: r.profile.to_string(),
        expected_profile: expected_profile.to_string(),
        recipe_used: r.recipe_used.map(|x| x.tag()),
        point_check: r.point_check.map(|pc| match pc {
            PointCountCheck::ReducedRational { count } => PointCheckDto {
                reduced_rational: true,
                rational_points: count,
            },
            PointCountCheck::DegreeOnly { rational_points } => PointCheckDto {
                reduced_rational: false,
                rational_points,
            },
        }),
        caveats: r.caveats.clone(),
    }
}

#[derive(Debug, Serialize)]
pub struct ErrorDoc {
    pub schema: &'static str,
    pub error: ErrorBody,
}

#[derive(Debug, Serialize)]
pub struct ErrorBody {
    pub kind: &'static str,
    pub message: String,
}

pub fn error_doc(kind: &'static str, message: String) -> String {
    let doc = ErrorDoc {
        schema: SCHEMA_VERSION,
        error: ErrorBody { kind, message },
    };
    serde_json::to_string_pretty(&doc).expect("serializable")
}
