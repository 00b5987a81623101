//! Closed-form excess-intersection and secant-count arithmetic.
//!
//! Two smooth surfaces inside an ambient fourfold that meet along a smooth
//! curve `C` of degree `d` and genus `g` contribute
//! `A + K₁·C + K₂·C + 2 - 2g` to their intersection number, where the
//! ambient term `A` is `(-K_ambient)·C`: `3d` inside a cubic fourfold and
//! `5d` inside `P⁴` (the setting of the secant-count computations after
//! projecting off a point). For a surface meeting a *plane* along `C`, the
//! excess formula specializes to `K_S·C + 2 - 2g = K_S·C - d(d-3)`.

use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExcessError {
    /// `(d, g)` is not realizable by a plane curve: `-d(d-3) != 2 - 2g`.
    NotAPlaneCurve { d: i64, g: i64 },
    /// Degree must be at least 1.
    NonPositiveDegree(i64),
    /// Line self-intersection on a cubic scroll is -1 or 0.
    BadLineSelfIntersection(i64),
    /// More accounted points than the projected intersection contains.
    NegativeSecantCount { product: i64, accounted: i64 },
}

impl fmt::Display for ExcessError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExcessError::NotAPlaneCurve { d, g } => {
                write!(f, "degree {d} and genus {g} are inconsistent for a plane curve")
            }
            ExcessError::NonPositiveDegree(d) => write!(f, "degree {d} must be positive"),
            ExcessError::BadLineSelfIntersection(l) => {
                write!(f, "line self-intersection {l} is not in {{-1, 0}}")
            }
            ExcessError::NegativeSecantCount { product, accounted } => write!(
                f,
                "accounted intersection {accounted} exceeds the projected count {product}"
            ),
        }
    }
}

/// Degree, genus and canonical pairings of the curve two surfaces share.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveData {
    pub degree: i64,
    pub genus: i64,
    /// `K_{S_i}·C`, one entry per ambient surface.
    pub canonical_pairings: alloc::vec::Vec<i64>,
}

impl CurveData {
    /// A degree-`d` plane curve: genus and `K_P·C` are forced.
    pub fn plane_curve(d: i64) -> Result<Self, ExcessError> {
        let (genus, kpc) = plane_curve_invariants(d)?;
        Ok(CurveData {
            degree: d,
            genus,
            canonical_pairings: alloc::vec![kpc],
        })
    }
}

/// How two surfaces in the ambient space meet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SurfaceIntersection {
    Finite { points: i64 },
    Curve(CurveData),
}

/// A pair of surfaces with the data the secant count needs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfacePair {
    pub deg1: i64,
    pub deg2: i64,
    pub intersection: SurfaceIntersection,
}

impl SurfacePair {
    /// Secant lines through a general point after projection, when the
    /// multiplicity `accounted` of the shared locus is known.
    pub fn secant_count(&self, accounted: i64) -> Result<i64, ExcessError> {
        secant_count(self.deg1, self.deg2, accounted)
    }
}

/// Genus and `K_P·C` of a plane curve of degree `d >= 1`.
pub fn plane_curve_invariants(d: i64) -> Result<(i64, i64), ExcessError> {
    if d < 1 {
        return Err(ExcessError::NonPositiveDegree(d));
    }
    Ok(((d - 1) * (d - 2) / 2, -3 * d))
}

/// `S·P = K_S·C + 2 - 2g` for a surface meeting a plane along a plane curve
/// of degree `d` and genus `g`. The two printed forms of the formula must
/// agree, so `(d, g)` is validated against `-d(d-3) = 2 - 2g` first.
pub fn excess_surface_plane(ksc: i64, d: i64, g: i64) -> Result<i64, ExcessError> {
    if -d * (d - 3) != 2 - 2 * g {
        return Err(ExcessError::NotAPlaneCurve { d, g });
    }
    Ok(ksc + 2 - 2 * g)
}

/// Ambient term presets for the multiplicity formula, each `A = m·d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AmbientPreset {
    /// Surfaces inside a smooth cubic fourfold: `A = 3d` (from `-K_X = 3h`).
    CubicFourfold,
    /// Scroll-plus-plane projected into `P⁴`: `A = 5d` (from `-K_{P⁴} = 5h`),
    /// the degree-5 term of the quartic-surface secant computation.
    ScrollPlaneProjection,
    /// Veronese-plus-plane projected into `P⁴`: `A = 5d` again; along the
    /// shared conic (`d = 2`) this is the printed constant 10.
    VeronesePlaneProjection,
}

impl AmbientPreset {
    pub fn ambient_term(&self, d: i64) -> i64 {
        match self {
            AmbientPreset::CubicFourfold => 3 * d,
            AmbientPreset::ScrollPlaneProjection | AmbientPreset::VeronesePlaneProjection => 5 * d,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            AmbientPreset::CubicFourfold => "cubic-fourfold",
            AmbientPreset::ScrollPlaneProjection => "scroll-projection",
            AmbientPreset::VeronesePlaneProjection => "veronese-projection",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "cubic-fourfold" => Some(AmbientPreset::CubicFourfold),
            "scroll-projection" => Some(AmbientPreset::ScrollPlaneProjection),
            "veronese-projection" => Some(AmbientPreset::VeronesePlaneProjection),
            _ => None,
        }
    }
}

/// Intersection multiplicity of two smooth surfaces along a shared smooth
/// curve: `A + K₁·C + K₂·C + 2 - 2g` with the ambient term from the preset.
pub fn mult_along_curve(preset: AmbientPreset, d: i64, g: i64, k1c: i64, k2c: i64) -> i64 {
    preset.ambient_term(d) + k1c + k2c + 2 - 2 * g
}

/// OADP-or-defective status of a surface union.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SecantStatus {
    /// Exactly one secant line through a general point.
    Oadp,
    /// No secant line through a general point.
    Defective,
}

/// Which family of surfaces the union is a flat limit of.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FlatLimit {
    QuarticScrolls,
    VeroneseSurfaces,
}

/// The full dichotomy for a cubic scroll and a plane meeting along a line of
/// self-intersection `l ∈ {-1, 0}` (directrix or ruling).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScrollLineCase {
    pub line_self_intersection: i64,
    /// `S·P` inside the cubic fourfold.
    pub excess: i64,
    /// Multiplicity of the projected intersection along the line.
    pub mult: i64,
    pub status: SecantStatus,
    pub flat_limit: FlatLimit,
}

/// `K_S·L = -2 - L²` on the scroll forces everything else.
pub fn scroll_line_case(l_self: i64) -> Result<ScrollLineCase, ExcessError> {
    if l_self != 0 && l_self != -1 {
        return Err(ExcessError::BadLineSelfIntersection(l_self));
    }
    let ks_l = -2 - l_self;
    let excess = excess_surface_plane(ks_l, 1, 0).expect("a line is a plane curve");
    let mult = mult_along_curve(AmbientPreset::ScrollPlaneProjection, 1, 0, ks_l, -3);
    debug_assert_eq!(excess, -l_self);
    debug_assert_eq!(mult, 2 - l_self);
    let (status, flat_limit) = if l_self == 0 {
        (SecantStatus::Oadp, FlatLimit::QuarticScrolls)
    } else {
        (SecantStatus::Defective, FlatLimit::VeroneseSurfaces)
    };
    Ok(ScrollLineCase {
        line_self_intersection: l_self,
        excess,
        mult,
        status,
        flat_limit,
    })
}

/// Secant lines through a general point: `deg1·deg2 - accounted`.
pub fn secant_count(deg1: i64, deg2: i64, accounted: i64) -> Result<i64, ExcessError> {
    let product = deg1 * deg2;
    let count = product - accounted;
    if accounted < 0 || count < 0 {
        return Err(ExcessError::NegativeSecantCount { product, accounted });
    }
    Ok(count)
}

/// OADP iff exactly one secant, defective iff none; other counts are neither.
pub fn secant_status(count: i64) -> Option<SecantStatus> {
    match count {
        1 => Some(SecantStatus::Oadp),
        0 => Some(SecantStatus::Defective),
        _ => None,
    }
}
