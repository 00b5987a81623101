//! Classification of the irreducible components of `C8 ∩ C12` and `C8 ∩ C20`.
//!
//! For each integer parameter (the intersection number of the plane with the
//! second surface) this module decides admissibility (positive determinant),
//! emptiness (existence of a short root), irreducibility (square-free
//! discriminant, or an exhaustive scan of cyclic index-`n` overlattices with
//! every glue candidate rejected), rationality certificates, and merges
//! parameters whose rank-3 lattices are isometric. Every verdict carries
//! a witness that can be re-checked independently.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::lattice::{GramMatrix, IsometryWitness, LatticeError, LatticeVector};

/// Which intersection of divisors is being classified.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `C8 ∩ C12`: plane + cubic rational normal scroll, `S·S = 7`, `S·h² = 3`.
    Scroll,
    /// `C8 ∩ C20`: plane + Veronese surface, `V·V = 12`, `V·h² = 4`.
    Veronese,
}

impl Family {
    /// `h²` times the surface class.
    pub fn surface_hyperplane(&self) -> i64 {
        match self {
            Family::Scroll => 3,
            Family::Veronese => 4,
        }
    }

    /// Self-intersection of the surface class.
    pub fn surface_self(&self) -> i64 {
        match self {
            Family::Scroll => 7,
            Family::Veronese => 12,
        }
    }

    /// Degree of the surface a generic member contains.
    pub fn surface_degree(&self) -> i64 {
        self.surface_hyperplane()
    }

    /// The rank-3 intersection matrix on `h²`, the plane, and the surface.
    pub fn gram(&self, param: i64) -> GramMatrix {
        let sh = self.surface_hyperplane();
        let ss = self.surface_self();
        GramMatrix::new(&[
            vec![3, 1, sh],
            vec![1, 3, param],
            vec![sh, param, ss],
        ])
        .expect("family matrix is symmetric")
    }

    /// Closed form of the family determinant as a quadratic in the parameter.
    pub fn determinant_formula(&self, param: i64) -> i64 {
        let sh = self.surface_hyperplane();
        let ss = self.surface_self();
        8 * ss - 3 * param * param + 2 * sh * param - 3 * sh * sh
    }

    /// All parameters with positive family determinant, ascending.
    pub fn admissible_params(&self) -> Vec<i64> {
        // The quadratic opens downward, so positivity holds on one interval.
        let mut params = Vec::new();
        let mut p = 0;
        while self.determinant_formula(p) > 0 {
            p -= 1;
        }
        p += 1;
        while self.determinant_formula(p) > 0 {
            params.push(p);
            p += 1;
        }
        params
    }

    pub fn cli_tag(&self) -> &'static str {
        match self {
            Family::Scroll => "m12",
            Family::Veronese => "m20",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    NotAdmissible { family: Family, param: i64 },
    EmptyComponent { family: Family, param: i64 },
    Lattice(LatticeError),
}

impl From<LatticeError> for ClassifyError {
    fn from(e: LatticeError) -> Self {
        ClassifyError::Lattice(e)
    }
}

impl core::fmt::Display for ClassifyError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            ClassifyError::NotAdmissible { family, param } => {
                write!(f, "parameter {param} is not admissible for {}", family.cli_tag())
            }
            ClassifyError::EmptyComponent { family, param } => {
                write!(f, "component {} at {param} is empty", family.cli_tag())
            }
            ClassifyError::Lattice(e) => write!(f, "lattice error: {e}"),
        }
    }
}

/// Why a glue candidate cannot give the lattice of a smooth cubic fourfold
/// (or that nothing rejected it).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GlueVerdict {
    /// The candidate overlattice has a vector of norm 2.
    RejectedShortRoot { witness: LatticeVector },
    /// The complement of `h²` in the candidate is not an even lattice.
    RejectedNotEven { complement: GramMatrix },
    /// Neither criterion rejects the candidate.
    Viable,
}

/// One index-`n` overlattice candidate `B ⊇ M` generated by
/// `U = (x'·h² + y'·P + S)/n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OverlatticeCandidate {
    pub n: i64,
    pub xp: i64,
    pub yp: i64,
    /// `U·h²`
    pub a: i64,
    /// `U·P`
    pub b: i64,
    /// `U·U`
    pub c: i64,
    pub gram: GramMatrix,
    pub verdict: GlueVerdict,
}

/// A numerical witness backing a rationality conclusion. The certificate is
/// only the arithmetic; the geometric conclusion is not re-proved here.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalityCertificate {
    pub kind: CertificateKind,
    pub value: i64,
    pub narrative: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertificateKind {
    /// The surface class meets the quadric fiber class `h² - P` with odd degree.
    OddMultisection,
    /// The plane/surface union has exactly one secant line through a
    /// general point: a reducible OADP surface.
    ReducibleOadp,
}

/// Everything the classifier decides about one parameter value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentReport {
    pub family: Family,
    pub param: i64,
    pub determinant: i64,
    pub nonempty: bool,
    /// A norm-2 vector when the component is empty.
    pub short_root: Option<LatticeVector>,
    pub glue_log: Vec<OverlatticeCandidate>,
    /// `None` for empty components (irreducibility is not adjudicated).
    pub irreducible: Option<bool>,
    pub certificates: Vec<RationalityCertificate>,
    /// Other admissible parameters whose family lattice is isometric.
    pub merged_with: Vec<i64>,
    pub notes: Vec<String>,
    /// What the lattice verdicts do *not* establish by themselves.
    pub caveats: Vec<String>,
}

fn is_square_free(n: i64) -> bool {
    let mut n = n.unsigned_abs();
    if n == 0 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % (d * d) == 0 {
            return false;
        }
        while n % d == 0 {
            n /= d;
        }
        d += 1;
    }
    true
}

fn caveat_lines() -> Vec<String> {
    vec![
        String::from(
            "verdicts are lattice-side certificates: existence of the corresponding \
             divisor components in the moduli space is assumed, not verified",
        ),
        String::from(
            "rationality certificates are numerical witnesses only; the geometric \
             conclusion is not re-derived here",
        ),
    ]
}

fn family_notes(family: Family) -> Vec<String> {
    match family {
        Family::Scroll => Vec::new(),
        // The U·h² numerator constant is the surface/hyperplane pairing (4),
        // pinned by the index identity det(B)·n² = det(family) on every case.
        Family::Veronese => vec![String::from(
            "glue numerator for U·h² is (3x' + y' + 4)/n, using h²·V = 4",
        )],
    }
}

/// The family Gram matrix, checked for admissibility.
pub fn family_gram(family: Family, param: i64) -> GramMatrix {
    family.gram(param)
}

/// Scan all cyclic index-`n` overlattices `B = M + Z·U` with
/// `U = (x'h² + y'P + S)/n`, `0 <= x', y' < n`, `n >= 2`, `n² | det`.
///
/// A candidate is kept exactly when all three pairings
/// `a = (3x' + y' + s_h)/n`, `b = (x' + 3y' + t)/n`,
/// `c = (3x'² + 3y'² + 2x'y' + 2·s_h·x' + 2·t·y' + s_s)/n²`
/// are integers; it is then adjudicated by short root first, evenness of the
/// complement of `h²` second. Candidates are ordered by `(n, x', y')`.
pub fn glue_candidates(
    family: Family,
    param: i64,
) -> Result<Vec<OverlatticeCandidate>, ClassifyError> {
    let det = family.determinant_formula(param);
    if det <= 0 {
        return Err(ClassifyError::NotAdmissible { family, param });
    }
    let sh = family.surface_hyperplane();
    let ss = family.surface_self();
    let mut out = Vec::new();
    let mut n = 2i64;
    while n * n <= det {
        if det % (n * n) == 0 {
            for xp in 0..n {
                for yp in 0..n {
                    let a_num = 3 * xp + yp + sh;
                    let b_num = xp + 3 * yp + param;
                    let c_num =
                        3 * xp * xp + 3 * yp * yp + 2 * xp * yp + 2 * sh * xp + 2 * param * yp + ss;
                    if a_num % n != 0 || b_num % n != 0 || c_num % (n * n) != 0 {
                        continue;
                    }
                    let (a, b, c) = (a_num / n, b_num / n, c_num / (n * n));
                    let gram = GramMatrix::new(&[vec![3, 1, a], vec![1, 3, b], vec![a, b, c]])
                        .expect("glue matrix is symmetric");
                    let verdict = adjudicate(&gram)?;
                    out.push(OverlatticeCandidate {
                        n,
                        xp,
                        yp,
                        a,
                        b,
                        c,
                        gram,
                        verdict,
                    });
                }
            }
        }
        n += 1;
    }
    Ok(out)
}

fn adjudicate(gram: &GramMatrix) -> Result<GlueVerdict, ClassifyError> {
    // An overlattice of a positive definite lattice with positive index
    // identity is positive definite, but degenerate candidates are rejected
    // on the evenness route rather than crashing the enumeration.
    if gram.is_positive_definite() {
        if let Some(witness) = gram.short_root()? {
            return Ok(GlueVerdict::RejectedShortRoot { witness });
        }
    }
    let e1 = LatticeVector(vec![1, 0, 0]);
    let (_, complement) = gram.orthogonal_complement(&e1)?;
    if !complement.is_even() {
        return Ok(GlueVerdict::RejectedNotEven { complement });
    }
    Ok(GlueVerdict::Viable)
}

/// Irreducibility of a nonempty component: square-free discriminant, or an
/// exhaustive glue scan with every candidate rejected.
pub fn irreducibility(
    family: Family,
    param: i64,
) -> Result<(bool, Vec<OverlatticeCandidate>), ClassifyError> {
    let det = family.determinant_formula(param);
    if det <= 0 {
        return Err(ClassifyError::NotAdmissible { family, param });
    }
    if family.gram(param).short_root()?.is_some() {
        return Err(ClassifyError::EmptyComponent { family, param });
    }
    if is_square_free(det) {
        return Ok((true, Vec::new()));
    }
    let log = glue_candidates(family, param)?;
    let irreducible = log
        .iter()
        .all(|c| !matches!(c.verdict, GlueVerdict::Viable));
    Ok((irreducible, log))
}

/// Emit the numerical rationality certificates for one admissible parameter.
///
/// An odd-multisection certificate fires when the surface class pairs oddly
/// with the quadric fiber class `Q = h² - P`, i.e. when `s_h - param` is odd;
/// a reducible-OADP certificate fires when the projected intersection count
/// `deg(surface)·deg(plane) - param` equals 1.
pub fn rationality_certificates(family: Family, param: i64) -> Vec<RationalityCertificate> {
    let mut certs = Vec::new();
    let q_pairing = family.surface_hyperplane() - param;
    if q_pairing.rem_euclid(2) == 1 {
        certs.push(RationalityCertificate {
            kind: CertificateKind::OddMultisection,
            value: q_pairing,
            narrative: format!(
                "surface class meets the quadric fiber class Q = h^2 - P in odd degree {q_pairing}; \
                 an odd multisection of the quadric fibration off the plane"
            ),
        });
    }
    let plane_degree = 1;
    let secants = family.surface_degree() * plane_degree - param;
    if secants == 1 {
        certs.push(RationalityCertificate {
            kind: CertificateKind::ReducibleOadp,
            value: secants,
            narrative: format!(
                "projections of the surface and the plane off a general point meet in \
                 {} points of which {param} are accounted for: exactly one secant line, \
                 so the union is a reducible OADP surface",
                family.surface_degree()
            ),
        });
    }
    certs
}

/// Group admissible parameters into isometry classes of their family lattices.
///
/// Returns the partition (each class ascending, classes ordered by least
/// member) together with the verified witnesses that produced it.
pub fn merge_isometric(
    family: Family,
) -> Result<(Vec<Vec<i64>>, Vec<(i64, i64, IsometryWitness)>), ClassifyError> {
    let params = family.admissible_params();
    let mut class_of: Vec<usize> = (0..params.len()).collect();
    let mut witnesses = Vec::new();
    for i in 0..params.len() {
        for j in (i + 1)..params.len() {
            if class_of[j] != j {
                continue;
            }
            let gi = family.gram(params[i]);
            let gj = family.gram(params[j]);
            if let Some(w) = gi.isometry_to(&gj)? {
                debug_assert!(w.certifies(&gi, &gj));
                witnesses.push((params[i], params[j], w));
                let root = class_of[i];
                class_of[j] = root;
            }
        }
    }
    let mut classes: Vec<Vec<i64>> = Vec::new();
    for i in 0..params.len() {
        if class_of[i] == i {
            let members: Vec<i64> = (0..params.len())
                .filter(|&j| class_of[j] == i)
                .map(|j| params[j])
                .collect();
            classes.push(members);
        }
    }
    classes.sort_by_key(|c| c[0]);
    Ok((classes, witnesses))
}

/// One report per admissible parameter, ascending; deterministic.
pub fn classify_all(family: Family) -> Result<Vec<ComponentReport>, ClassifyError> {
    let params = family.admissible_params();
    let (classes, _witnesses) = merge_isometric(family)?;
    let mut reports = Vec::with_capacity(params.len());
    for &param in &params {
        let gram = family.gram(param);
        let determinant = family.determinant_formula(param);
        debug_assert_eq!(BigInt::from(determinant), gram.determinant());
        let short_root = gram.short_root()?;
        let nonempty = short_root.is_none();
        let (irreducible, glue_log) = if nonempty {
            let (irr, log) = irreducibility(family, param)?;
            (Some(irr), log)
        } else {
            (None, Vec::new())
        };
        let certificates = if nonempty {
            rationality_certificates(family, param)
        } else {
            Vec::new()
        };
        let merged_with: Vec<i64> = classes
            .iter()
            .find(|c| c.contains(&param))
            .map(|c| c.iter().copied().filter(|&p| p != param).collect())
            .unwrap_or_default();
        reports.push(ComponentReport {
            family,
            param,
            determinant,
            nonempty,
            short_root,
            glue_log,
            irreducible,
            certificates,
            merged_with,
            notes: family_notes(family),
            caveats: caveat_lines(),
        });
    }
    Ok(reports)
}

/// The merged view: isometry classes restricted to nonempty parameters.
pub fn merged_nonempty_components(family: Family) -> Result<Vec<Vec<i64>>, ClassifyError> {
    let (classes, _) = merge_isometric(family)?;
    let mut out = Vec::new();
    for class in classes {
        let mut keep = Vec::new();
        for p in class {
            if family.gram(p).short_root()?.is_none() {
                keep.push(p);
            }
        }
        if !keep.is_empty() {
            out.push(keep);
        }
    }
    Ok(out)
}
