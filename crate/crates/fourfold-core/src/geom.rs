//! Surface recipes, plane placement, and the example verification harness.
//!
//! The ambient space is `P^5` over a small prime field (31 unless a record
//! says otherwise). Surfaces come from fixed parametrizations — the Veronese
//! embedding, rational normal scrolls, and the Segre hyperplane section —
//! and planes are placed against them with a prescribed intersection
//! profile. A verified example consists of a plane, a surface, and a smooth
//! cubic hypersurface containing both; re-verification re-runs every check
//! from scratch.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::classify::Family;
use crate::groebner::{groebner, ideal_member, GroebnerBasis};
use crate::hilbert::hilbert_polynomial_values;
use crate::ideal::{
    dimension_degree, graded_piece, is_projectively_smooth, right_kernel, RingMap,
};
use crate::poly::{Ideal, Monomial, MonomialOrder, Poly, PolyError, RingSpec};
use crate::rng::SplitMix64;

pub const AMBIENT_VARS: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeomError {
    Poly(PolyError),
    /// The plane ideal must be three independent linear forms.
    NotAPlane,
    /// The cubic must be homogeneous of degree 3.
    NotACubic,
    /// Retry budget exhausted; counts how often each check failed.
    BudgetExhausted {
        attempts: u32,
        placement_failures: u32,
        singular_cubics: u32,
        verify_failures: u32,
    },
    /// No surface recipe realizes this (family, parameter) with a smooth
    /// surface; only degenerate representatives exist.
    UnsupportedParameter { family: Family, param: i64 },
    /// The component is empty or the parameter is outside the admissible range.
    NoSuchComponent { family: Family, param: i64 },
    /// Scroll type does not fit inside the ambient space.
    ScrollTooLarge { a: u32, b: u32 },
}

impl From<PolyError> for GeomError {
    fn from(e: PolyError) -> Self {
        GeomError::Poly(e)
    }
}

impl core::fmt::Display for GeomError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            GeomError::Poly(e) => write!(f, "{e}"),
            GeomError::NotAPlane => write!(f, "ideal is not three independent linear forms"),
            GeomError::NotACubic => write!(f, "polynomial is not a homogeneous cubic"),
            GeomError::BudgetExhausted {
                attempts,
                placement_failures,
                singular_cubics,
                verify_failures,
            } => write!(
                f,
                "construction budget exhausted after {attempts} attempts \
                 (placement {placement_failures}, singular {singular_cubics}, verify {verify_failures})"
            ),
            GeomError::UnsupportedParameter { family, param } => write!(
                f,
                "no smooth-surface recipe for {} at parameter {param}; the class is \
                 represented only by singular or reducible surfaces",
                family.cli_tag()
            ),
            GeomError::NoSuchComponent { family, param } => {
                write!(f, "{} has no nonempty component at {param}", family.cli_tag())
            }
            GeomError::ScrollTooLarge { a, b } => {
                write!(f, "scroll S({a},{b}) does not fit in P^5")
            }
        }
    }
}

/// How a surface is produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SurfaceRecipe {
    /// Image of `P^2` under all conics: `x = (t0², t0t1, t0t2, t1², t1t2, t2²)`,
    /// cut by the 2x2 minors of the symmetric catalecticant matrix.
    Veronese,
    /// Rational normal scroll `S(a,b)` in `P^(a+b+1) ⊂ P^5`, via
    /// `(t0^(b-a+1)·t0^(a-j)t1^j | t2·t0^(b-j)t1^j)`, remaining coordinates 0.
    Scroll { a: u32, b: u32 },
    /// Cubic scroll as the blow-up of `P^2` at `[0:0:1]`, embedded by the
    /// conics through the point: `x = (t0², t0t1, t1², t0t2, t1t2, 0)`.
    CubicScrollBlowup,
    /// Segre image of `P^1 x P^2` cut by the hyperplane `x0 - x4`.
    SegreScroll,
}

impl SurfaceRecipe {
    pub fn tag(&self) -> String {
        match self {
            SurfaceRecipe::Veronese => String::from("veronese"),
            SurfaceRecipe::Scroll { a, b } => alloc::format!("scroll({a},{b})"),
            SurfaceRecipe::CubicScrollBlowup => String::from("cubic-scroll"),
            SurfaceRecipe::SegreScroll => String::from("segre-scroll"),
        }
    }

    pub fn from_tag(tag: &str) -> Option<SurfaceRecipe> {
        match tag {
            "veronese" => Some(SurfaceRecipe::Veronese),
            "cubic-scroll" => Some(SurfaceRecipe::CubicScrollBlowup),
            "segre-scroll" => Some(SurfaceRecipe::SegreScroll),
            _ => {
                let inner = tag.strip_prefix("scroll(")?.strip_suffix(')')?;
                let (a, b) = inner.split_once(',')?;
                Some(SurfaceRecipe::Scroll {
                    a: a.trim().parse().ok()?,
                    b: b.trim().parse().ok()?,
                })
            }
        }
    }

    pub fn expected_degree(&self) -> i64 {
        match self {
            SurfaceRecipe::Veronese => 4,
            SurfaceRecipe::Scroll { a, b } => (a + b) as i64,
            SurfaceRecipe::CubicScrollBlowup | SurfaceRecipe::SegreScroll => 3,
        }
    }

    /// The saturated homogeneous ideal of the surface, verified to have
    /// dimension 2 and the documented degree.
    pub fn build(&self, prime: u32) -> Result<Ideal, GeomError> {
        let ambient = RingSpec::grevlex(prime, AMBIENT_VARS);
        let ideal = match self {
            SurfaceRecipe::Veronese => {
                let r2 = RingSpec::grevlex(prime, 3);
                monomial_map_kernel(ambient, r2, &veronese_images(r2))?
            }
            SurfaceRecipe::Scroll { a, b } => {
                if a > b || a + b + 1 > 5 || *b == 0 {
                    return Err(GeomError::ScrollTooLarge { a: *a, b: *b });
                }
                let r2 = RingSpec::grevlex(prime, 3);
                monomial_map_kernel(ambient, r2, &scroll_images(r2, *a, *b))?
            }
            SurfaceRecipe::CubicScrollBlowup => {
                let r2 = RingSpec::grevlex(prime, 3);
                monomial_map_kernel(ambient, r2, &blowup_images(r2))?
            }
            SurfaceRecipe::SegreScroll => {
                let r5 = RingSpec::grevlex(prime, 5);
                let segre = monomial_map_kernel(ambient, r5, &segre_images(r5))?;
                let hyperplane = Poly::variable(ambient, 0)
                    .sub(&Poly::variable(ambient, 4))
                    .expect("same ring");
                segre.sum(&Ideal::new(ambient, vec![hyperplane])?)?
            }
        };
        debug_assert!({
            let data = dimension_degree(&ideal)?;
            data.dimension == 2 && data.degree == self.expected_degree()
        });
        Ok(ideal)
    }

    /// Evaluate the parametrization at a parameter point (3 coordinates for
    /// the plane recipes, `(u, v, s, w)` folded into 4 for the Segre scroll).
    /// Returns `None` when the point is in the base locus.
    pub fn point(&self, prime: u32, params: &[u32]) -> Option<[u32; AMBIENT_VARS]> {
        let f = crate::field::PrimeField::new(prime).ok()?;
        let coords: [u32; AMBIENT_VARS] = match self {
            SurfaceRecipe::Veronese => {
                let (a, b, c) = (params[0], params[1], params[2]);
                [
                    f.mul(a, a),
                    f.mul(a, b),
                    f.mul(a, c),
                    f.mul(b, b),
                    f.mul(b, c),
                    f.mul(c, c),
                ]
            }
            SurfaceRecipe::Scroll { a, b } => {
                let (t0, t1, t2) = (params[0], params[1], params[2]);
                let mut out = [0u32; AMBIENT_VARS];
                let mut idx = 0;
                for j in 0..=*a {
                    let val = f.mul(
                        f.pow(t0, (*b - *a + 1) as u64),
                        f.mul(f.pow(t0, (*a - j) as u64), f.pow(t1, j as u64)),
                    );
                    out[idx] = val;
                    idx += 1;
                }
                for j in 0..=*b {
                    out[idx] = f.mul(t2, f.mul(f.pow(t0, (*b - j) as u64), f.pow(t1, j as u64)));
                    idx += 1;
                }
                out
            }
            SurfaceRecipe::CubicScrollBlowup => {
                let (t0, t1, t2) = (params[0], params[1], params[2]);
                [
                    f.mul(t0, t0),
                    f.mul(t0, t1),
                    f.mul(t1, t1),
                    f.mul(t0, t2),
                    f.mul(t1, t2),
                    0,
                ]
            }
            SurfaceRecipe::SegreScroll => {
                // fiber over [u:v] parametrized by (s, w): t = (s·v, s·u, w)
                let (u, v, s, w) = (params[0], params[1], params[2], params[3]);
                let t0 = f.mul(s, v);
                let t1 = f.mul(s, u);
                let t2 = w;
                [
                    f.mul(t0, u),
                    f.mul(t1, u),
                    f.mul(t2, u),
                    f.mul(t0, v),
                    f.mul(t1, v),
                    f.mul(t2, v),
                ]
            }
        };
        if coords.iter().all(|&c| c == 0) {
            None
        } else {
            Some(coords)
        }
    }

    fn param_arity(&self) -> usize {
        match self {
            SurfaceRecipe::SegreScroll => 4,
            _ => 3,
        }
    }

    /// A random surface point, avoiding the base locus.
    pub fn random_point(&self, prime: u32, rng: &mut SplitMix64) -> [u32; AMBIENT_VARS] {
        loop {
            let params: Vec<u32> = (0..self.param_arity())
                .map(|_| rng.below(prime as u64) as u32)
                .collect();
            if params.iter().all(|&c| c == 0) {
                continue;
            }
            if let Some(point) = self.point(prime, &params) {
                return point;
            }
        }
    }

    /// Two spanning points of the directrix line, for the recipes that have
    /// a distinguished one.
    pub fn directrix_span(&self) -> Option<[[u32; AMBIENT_VARS]; 2]> {
        match self {
            // image of the exceptional line: (0,0,0,a,b,0)
            SurfaceRecipe::CubicScrollBlowup => {
                Some([[0, 0, 0, 1, 0, 0], [0, 0, 0, 0, 1, 0]])
            }
            // [u:v] x [0:0:1]: (0,0,u,0,0,v)
            SurfaceRecipe::SegreScroll => Some([[0, 0, 1, 0, 0, 0], [0, 0, 0, 0, 0, 1]]),
            _ => None,
        }
    }

    /// Two spanning points of a ruling line indexed by `[a:b]`.
    pub fn ruling_span(
        &self,
        prime: u32,
        a: u32,
        b: u32,
    ) -> Option<[[u32; AMBIENT_VARS]; 2]> {
        let f = crate::field::PrimeField::new(prime).ok()?;
        match self {
            // joins (a², ab, b², 0, 0, 0) to (0, 0, 0, a, b, 0)
            SurfaceRecipe::CubicScrollBlowup => Some([
                [f.mul(a, a), f.mul(a, b), f.mul(b, b), 0, 0, 0],
                [0, 0, 0, a, b, 0],
            ]),
            // fiber over [a:b]: spanned by (ba, a², 0, b², ab, 0), (0,0,a,0,0,b)
            SurfaceRecipe::SegreScroll => Some([
                [f.mul(b, a), f.mul(a, a), 0, f.mul(b, b), f.mul(a, b), 0],
                [0, 0, a, 0, 0, b],
            ]),
            _ => None,
        }
    }

    /// Sample points of a conic on the surface: the image of a random line
    /// in the parameter plane (avoiding the blow-up point where relevant).
    fn conic_points(
        &self,
        prime: u32,
        rng: &mut SplitMix64,
    ) -> Option<Vec<[u32; AMBIENT_VARS]>> {
        match self {
            SurfaceRecipe::Veronese | SurfaceRecipe::CubicScrollBlowup => {
                let f = crate::field::PrimeField::new(prime).ok()?;
                // line t = p + s q through two random parameter points
                let p = [
                    rng.below(prime as u64) as u32,
                    rng.below(prime as u64) as u32,
                    1,
                ];
                let q = [1, rng.below(prime as u64) as u32, 0];
                let mut images = Vec::new();
                for s in 0..prime {
                    let t = [
                        f.add(p[0], f.mul(s, q[0])),
                        f.add(p[1], f.mul(s, q[1])),
                        f.add(p[2], f.mul(s, q[2])),
                    ];
                    if matches!(self, SurfaceRecipe::CubicScrollBlowup)
                        && t[0] == 0
                        && t[1] == 0
                    {
                        return None; // line passes through the blow-up point
                    }
                    if let Some(pt) = self.point(prime, &t) {
                        images.push(pt);
                        if images.len() == 3 {
                            return Some(images);
                        }
                    }
                }
                None
            }
            _ => None,
        }
    }
}

fn veronese_images(r2: RingSpec) -> Vec<Poly> {
    let t = |i| Poly::variable(r2, i);
    vec![
        t(0).mul(&t(0)).unwrap(),
        t(0).mul(&t(1)).unwrap(),
        t(0).mul(&t(2)).unwrap(),
        t(1).mul(&t(1)).unwrap(),
        t(1).mul(&t(2)).unwrap(),
        t(2).mul(&t(2)).unwrap(),
    ]
}

fn blowup_images(r2: RingSpec) -> Vec<Poly> {
    let t = |i| Poly::variable(r2, i);
    vec![
        t(0).mul(&t(0)).unwrap(),
        t(0).mul(&t(1)).unwrap(),
        t(1).mul(&t(1)).unwrap(),
        t(0).mul(&t(2)).unwrap(),
        t(1).mul(&t(2)).unwrap(),
        Poly::zero(r2),
    ]
}

fn scroll_images(r2: RingSpec, a: u32, b: u32) -> Vec<Poly> {
    let t = |i| Poly::variable(r2, i);
    let pow = |p: &Poly, e: u32| {
        let mut acc = Poly::constant(r2, 1);
        for _ in 0..e {
            acc = acc.mul(p).unwrap();
        }
        acc
    };
    let mut images = Vec::new();
    for j in 0..=a {
        images.push(
            pow(&t(0), b - a + 1)
                .mul(&pow(&t(0), a - j))
                .unwrap()
                .mul(&pow(&t(1), j))
                .unwrap(),
        );
    }
    for j in 0..=b {
        images.push(
            t(2).mul(&pow(&t(0), b - j))
                .unwrap()
                .mul(&pow(&t(1), j))
                .unwrap(),
        );
    }
    while images.len() < AMBIENT_VARS {
        images.push(Poly::zero(r2));
    }
    images
}

fn segre_images(r5: RingSpec) -> Vec<Poly> {
    let u = Poly::variable(r5, 0);
    let v = Poly::variable(r5, 1);
    let t = |i: usize| Poly::variable(r5, 2 + i);
    vec![
        t(0).mul(&u).unwrap(),
        t(1).mul(&u).unwrap(),
        t(2).mul(&u).unwrap(),
        t(0).mul(&v).unwrap(),
        t(1).mul(&v).unwrap(),
        t(2).mul(&v).unwrap(),
    ]
}

fn monomial_map_kernel(
    source: RingSpec,
    target: RingSpec,
    images: &[Poly],
) -> Result<Ideal, GeomError> {
    Ok(RingMap::new(source, target, images.to_vec())?.kernel()?)
}

/// Shape of a scheme-theoretic intersection, classified by dimension and
/// Hilbert polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntersectionProfile {
    Empty,
    Points { count: i64 },
    Line,
    Conic,
    Other { dim: i64, degree: i64 },
}

impl core::fmt::Display for IntersectionProfile {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            IntersectionProfile::Empty => write!(f, "empty"),
            IntersectionProfile::Points { count } => write!(f, "points({count})"),
            IntersectionProfile::Line => write!(f, "line"),
            IntersectionProfile::Conic => write!(f, "conic"),
            IntersectionProfile::Other { dim, degree } => write!(f, "other({dim},{degree})"),
        }
    }
}

impl IntersectionProfile {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "empty" => return Some(IntersectionProfile::Empty),
            "line" => return Some(IntersectionProfile::Line),
            "conic" => return Some(IntersectionProfile::Conic),
            _ => {}
        }
        if let Some(inner) = s.strip_prefix("points(").and_then(|r| r.strip_suffix(')')) {
            return Some(IntersectionProfile::Points {
                count: inner.trim().parse().ok()?,
            });
        }
        if let Some(inner) = s.strip_prefix("other(").and_then(|r| r.strip_suffix(')')) {
            let (d, e) = inner.split_once(',')?;
            return Some(IntersectionProfile::Other {
                dim: d.trim().parse().ok()?,
                degree: e.trim().parse().ok()?,
            });
        }
        None
    }
}

/// Dimension/degree/Hilbert-polynomial classification of `P + S`.
pub fn intersection_profile(plane: &Ideal, surface: &Ideal) -> Result<IntersectionProfile, GeomError> {
    let sum = plane.sum(surface)?;
    let gb = groebner(&sum, MonomialOrder::Grevlex)?;
    Ok(profile_from_basis(&gb))
}

fn profile_from_basis(gb: &GroebnerBasis) -> IntersectionProfile {
    let lts = gb.leading_monomials();
    let data = crate::hilbert::hilbert_data(&lts, gb.ring.nvars);
    match data.dimension {
        -1 => IntersectionProfile::Empty,
        0 => IntersectionProfile::Points { count: data.degree },
        1 => {
            // the Hilbert polynomial separates a line (d+1) and a plane
            // conic (2d+1) from anything with extra components
            let hp = hilbert_polynomial_values(&lts, gb.ring.nvars, 1, 2);
            match (data.degree, hp[0], hp[1]) {
                (1, 2, 3) => IntersectionProfile::Line,
                (2, 3, 5) => IntersectionProfile::Conic,
                _ => IntersectionProfile::Other {
                    dim: 1,
                    degree: data.degree,
                },
            }
        }
        dim => IntersectionProfile::Other {
            dim,
            degree: data.degree,
        },
    }
}

/// Either a named recipe or explicit generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SurfaceSpec {
    Recipe(SurfaceRecipe),
    Explicit(Ideal),
}

/// One verifiable example: a plane, a surface, a cubic, and the expected
/// intersection data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExampleRecord {
    pub label: String,
    pub family: Family,
    pub prime: u32,
    pub plane: Ideal,
    pub surface: SurfaceSpec,
    pub cubic: Poly,
    pub expected_profile: IntersectionProfile,
    pub expected_param: i64,
    pub cross_links: Vec<String>,
}

/// Zero-dimensional extra check: does the degree equal the number of
/// distinct rational points?
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointCountCheck {
    /// All points rational and distinct: degree == count.
    ReducedRational { count: i64 },
    /// Fewer rational points than the degree; only the degree is certified.
    DegreeOnly { rational_points: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub label: String,
    pub smooth: bool,
    pub contains_plane: bool,
    pub contains_surface: bool,
    pub profile_matches: bool,
    pub profile: IntersectionProfile,
    pub recipe_used: Option<SurfaceRecipe>,
    pub point_check: Option<PointCountCheck>,
    pub caveats: Vec<String>,
}

impl VerifyReport {
    pub fn pass(&self) -> bool {
        self.smooth && self.contains_plane && self.contains_surface && self.profile_matches
    }
}

/// Is the ideal generated by exactly three independent linear forms?
pub fn is_plane(ideal: &Ideal) -> bool {
    plane_rows(ideal).is_some()
}

fn plane_rows(ideal: &Ideal) -> Option<Vec<Vec<u32>>> {
    if ideal.gens.len() != 3 {
        return None;
    }
    let mut rows = Vec::new();
    for g in &ideal.gens {
        if g.total_degree() != Some(1) || !g.is_homogeneous() {
            return None;
        }
        let mut row = vec![0u32; ideal.ring.nvars];
        for (m, c) in &g.terms {
            let idx = m.exps.iter().position(|&e| e == 1)?;
            row[idx] = *c;
        }
        rows.push(row);
    }
    let reduced = crate::ideal::row_reduce(ideal.ring.prime, rows.clone());
    if reduced.len() == 3 {
        Some(rows)
    } else {
        None
    }
}

/// Count rational points of `V(plane + surface)` by enumerating the plane.
fn rational_points_on_plane(plane: &Ideal, surface: &Ideal) -> Option<i64> {
    let rows = plane_rows(plane)?;
    let prime = plane.ring.prime;
    let basis = right_kernel(prime, &rows);
    if basis.len() != 3 {
        return None;
    }
    let f = crate::field::PrimeField::new(prime).ok()?;
    let mut count = 0i64;
    // points of P^2 over F_p: (1, s, w), (0, 1, w), (0, 0, 1)
    let mut reps: Vec<[u32; 3]> = Vec::new();
    for s in 0..prime {
        for w in 0..prime {
            reps.push([1, s, w]);
        }
    }
    for w in 0..prime {
        reps.push([0, 1, w]);
    }
    reps.push([0, 0, 1]);
    for rep in reps {
        let mut point = vec![0u32; plane.ring.nvars];
        for (b, &c) in basis.iter().zip(rep.iter()) {
            if c != 0 {
                for (j, &bj) in b.iter().enumerate() {
                    point[j] = f.add(point[j], f.mul(c, bj));
                }
            }
        }
        let on_surface = surface
            .gens
            .iter()
            .all(|g| g.evaluate(&point).map(|e| e.value == 0).unwrap_or(false));
        if on_surface {
            count += 1;
        }
    }
    Some(count)
}

fn verification_caveats() -> Vec<String> {
    vec![String::from(
        "all checks run over the record's finite field; validity in characteristic zero \
         is not verified",
    )]
}

/// The retry list for a bound recipe: the bound one first, then the other
/// cubic-scroll presentations. Which presentation an example presupposes is
/// data, so a failed containment falls through to the alternatives and the
/// report records the recipe that actually worked.
fn recipe_candidates(bound: SurfaceRecipe) -> Vec<SurfaceRecipe> {
    let alternates = [
        SurfaceRecipe::CubicScrollBlowup,
        SurfaceRecipe::Scroll { a: 1, b: 2 },
        SurfaceRecipe::SegreScroll,
    ];
    let mut out = vec![bound];
    if bound != SurfaceRecipe::Veronese {
        for alt in alternates {
            if alt != bound {
                out.push(alt);
            }
        }
    }
    out
}

/// Re-run every check on a record: smoothness, the two containments (with
/// the recipe-retry policy), and the intersection profile.
pub fn verify_example(record: &ExampleRecord) -> Result<VerifyReport, GeomError> {
    if plane_rows(&record.plane).is_none() {
        return Err(GeomError::NotAPlane);
    }
    if record.cubic.is_zero()
        || !record.cubic.is_homogeneous()
        || record.cubic.total_degree() != Some(3)
    {
        return Err(GeomError::NotACubic);
    }
    let smooth = is_projectively_smooth(&record.cubic)?;
    let plane_gb = groebner(&record.plane, MonomialOrder::Grevlex)?;
    let contains_plane = ideal_member(&record.cubic, &plane_gb);

    let (contains_surface, recipe_used, surface_ideal) = match &record.surface {
        SurfaceSpec::Explicit(ideal) => {
            let gb = groebner(ideal, MonomialOrder::Grevlex)?;
            (ideal_member(&record.cubic, &gb), None, ideal.clone())
        }
        SurfaceSpec::Recipe(bound) => {
            let mut chosen = None;
            let mut fallback: Option<Ideal> = None;
            for candidate in recipe_candidates(*bound) {
                let ideal = candidate.build(record.prime)?;
                let gb = groebner(&ideal, MonomialOrder::Grevlex)?;
                if ideal_member(&record.cubic, &gb) {
                    chosen = Some((candidate, ideal));
                    break;
                }
                if fallback.is_none() {
                    fallback = Some(ideal);
                }
            }
            match chosen {
                Some((recipe, ideal)) => (true, Some(recipe), ideal),
                None => (false, Some(*bound), fallback.expect("bound recipe built")),
            }
        }
    };

    let profile = intersection_profile(&record.plane, &surface_ideal)?;
    let profile_matches = profile == record.expected_profile;
    let point_check = match profile {
        IntersectionProfile::Points { count } => {
            rational_points_on_plane(&record.plane, &surface_ideal).map(|rational| {
                if rational == count {
                    PointCountCheck::ReducedRational { count }
                } else {
                    PointCountCheck::DegreeOnly {
                        rational_points: rational,
                    }
                }
            })
        }
        _ => None,
    };

    Ok(VerifyReport {
        label: record.label.clone(),
        smooth,
        contains_plane,
        contains_surface,
        profile_matches,
        profile,
        recipe_used,
        point_check,
        caveats: verification_caveats(),
    })
}

/// Placement constraint for a plane against a surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlaneConstraint {
    /// Disjoint from the surface.
    Generic,
    /// Meets the surface in exactly `k` reduced points, `1 <= k <= 3`.
    ThroughPoints(usize),
    /// Spanned by a conic lying on the surface.
    ThroughConic,
    /// Contains a ruling line of the scroll.
    ContainingRulingLine,
    /// Contains the directrix of the scroll.
    ContainingDirectrix,
}

impl PlaneConstraint {
    pub fn expected_profile(&self) -> IntersectionProfile {
        match self {
            PlaneConstraint::Generic => IntersectionProfile::Empty,
            PlaneConstraint::ThroughPoints(k) => IntersectionProfile::Points { count: *k as i64 },
            PlaneConstraint::ThroughConic => IntersectionProfile::Conic,
            PlaneConstraint::ContainingRulingLine | PlaneConstraint::ContainingDirectrix => {
                IntersectionProfile::Line
            }
        }
    }
}

/// Linear forms vanishing on all given points (coefficient-vector basis).
fn forms_through_points(prime: u32, points: &[[u32; AMBIENT_VARS]]) -> Vec<Vec<u32>> {
    let rows: Vec<Vec<u32>> = points.iter().map(|p| p.to_vec()).collect();
    right_kernel(prime, &rows)
}

fn random_combination(
    prime: u32,
    basis: &[Vec<u32>],
    rng: &mut SplitMix64,
) -> Vec<u32> {
    let f = crate::field::PrimeField::new(prime).expect("valid prime");
    let mut out = vec![0u32; basis.first().map(|b| b.len()).unwrap_or(0)];
    for b in basis {
        let c = rng.below(prime as u64) as u32;
        if c != 0 {
            for (j, &bj) in b.iter().enumerate() {
                out[j] = f.add(out[j], f.mul(c, bj));
            }
        }
    }
    out
}

fn linear_form_from_row(ring: RingSpec, row: &[u32]) -> Poly {
    let terms = row
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| (Monomial::var(ring.nvars, i), c))
        .collect();
    Poly::from_terms(ring, terms)
}

fn plane_from_rows(ring: RingSpec, rows: Vec<Vec<u32>>) -> Result<Ideal, GeomError> {
    let reduced = crate::ideal::row_reduce(ring.prime, rows);
    if reduced.len() != 3 {
        return Err(GeomError::NotAPlane);
    }
    let gens = reduced
        .iter()
        .map(|r| linear_form_from_row(ring, r))
        .collect();
    Ok(Ideal::new(ring, gens)?)
}

/// Place a plane against the surface with the requested intersection
/// profile. The returned ideal is three row-reduced independent linear
/// forms; the profile is re-checked before returning.
pub fn place_plane(
    constraint: PlaneConstraint,
    recipe: SurfaceRecipe,
    prime: u32,
    rng: &mut SplitMix64,
    budget: u32,
) -> Result<Ideal, GeomError> {
    let ring = RingSpec::grevlex(prime, AMBIENT_VARS);
    let surface = recipe.build(prime)?;
    let mut attempts = 0u32;
    while attempts < budget {
        attempts += 1;
        let rows: Option<Vec<Vec<u32>>> = match constraint {
            PlaneConstraint::Generic => Some(
                (0..3)
                    .map(|_| (0..AMBIENT_VARS).map(|_| rng.below(prime as u64) as u32).collect())
                    .collect(),
            ),
            PlaneConstraint::ThroughPoints(k) => {
                let mut points = Vec::with_capacity(k);
                while points.len() < k {
                    let p = recipe.random_point(prime, rng);
                    if !points.contains(&p) {
                        points.push(p);
                    }
                }
                let space = forms_through_points(prime, &points);
                if space.len() < 3 {
                    None
                } else {
                    Some((0..3).map(|_| random_combination(prime, &space, rng)).collect())
                }
            }
            PlaneConstraint::ThroughConic => match recipe.conic_points(prime, rng) {
                None => None,
                Some(points) => {
                    let space = forms_through_points(prime, &points);
                    // three spanning points of a conic determine its plane
                    if space.len() == 3 {
                        Some(space)
                    } else {
                        None
                    }
                }
            },
            PlaneConstraint::ContainingRulingLine => {
                let a = rng.below(prime as u64) as u32;
                let b = if a == 0 { 1 } else { rng.below(prime as u64) as u32 };
                match recipe.ruling_span(prime, a, b) {
                    None => return Err(GeomError::UnsupportedParameter {
                        family: Family::Scroll,
                        param: 0,
                    }),
                    Some(span) => {
                        let space = forms_through_points(prime, &span);
                        Some((0..3).map(|_| random_combination(prime, &space, rng)).collect())
                    }
                }
            }
            PlaneConstraint::ContainingDirectrix => match recipe.directrix_span() {
                None => {
                    return Err(GeomError::UnsupportedParameter {
                        family: Family::Scroll,
                        param: 1,
                    })
                }
                Some(span) => {
                    let space = forms_through_points(prime, &span);
                    Some((0..3).map(|_| random_combination(prime, &space, rng)).collect())
                }
            },
        };
        let rows = match rows {
            Some(r) => r,
            None => continue,
        };
        let plane = match plane_from_rows(ring, rows) {
            Ok(p) => p,
            Err(_) => continue,
        };
        if intersection_profile(&plane, &surface)? == constraint.expected_profile() {
            return Ok(plane);
        }
    }
    Err(GeomError::BudgetExhausted {
        attempts,
        placement_failures: attempts,
        singular_cubics: 0,
        verify_failures: 0,
    })
}

/// Recipe and placement used for each constructible (family, parameter).
fn construction_plan(
    family: Family,
    param: i64,
    variant: Option<PlaneConstraint>,
) -> Result<(SurfaceRecipe, PlaneConstraint), GeomError> {
    let default: Option<(SurfaceRecipe, PlaneConstraint)> = match (family, param) {
        (Family::Scroll, -1) => Some((SurfaceRecipe::CubicScrollBlowup, PlaneConstraint::ThroughConic)),
        (Family::Scroll, 0) => Some((SurfaceRecipe::CubicScrollBlowup, PlaneConstraint::Generic)),
        (Family::Scroll, 1) => Some((
            SurfaceRecipe::CubicScrollBlowup,
            PlaneConstraint::ThroughPoints(1),
        )),
        (Family::Scroll, 2) => Some((
            SurfaceRecipe::CubicScrollBlowup,
            PlaneConstraint::ThroughPoints(2),
        )),
        (Family::Scroll, 3) => Some((
            SurfaceRecipe::CubicScrollBlowup,
            PlaneConstraint::ThroughPoints(3),
        )),
        (Family::Veronese, -1) => Some((SurfaceRecipe::Veronese, PlaneConstraint::ThroughConic)),
        (Family::Veronese, 0) => Some((SurfaceRecipe::Veronese, PlaneConstraint::Generic)),
        (Family::Veronese, 1) => Some((SurfaceRecipe::Veronese, PlaneConstraint::ThroughPoints(1))),
        (Family::Veronese, 2) => Some((SurfaceRecipe::Veronese, PlaneConstraint::ThroughPoints(2))),
        (Family::Veronese, 3) => Some((SurfaceRecipe::Veronese, PlaneConstraint::ThroughPoints(3))),
        // the parameter-4 class is carried by a degenerate "Veronese":
        // scroll ∪ plane glued along the directrix
        (Family::Veronese, 4) => Some((
            SurfaceRecipe::SegreScroll,
            PlaneConstraint::ContainingDirectrix,
        )),
        _ => None,
    };
    let (recipe, constraint) = match default {
        Some(plan) => plan,
        None => return Err(GeomError::UnsupportedParameter { family, param }),
    };
    match variant {
        None => Ok((recipe, constraint)),
        Some(PlaneConstraint::ContainingRulingLine) => {
            Ok((SurfaceRecipe::CubicScrollBlowup, PlaneConstraint::ContainingRulingLine))
        }
        Some(PlaneConstraint::ContainingDirectrix) => {
            Ok((SurfaceRecipe::SegreScroll, PlaneConstraint::ContainingDirectrix))
        }
        Some(other) => Ok((recipe, other)),
    }
}

/// Construct a fresh verified example for a nonempty component: place the
/// plane, draw random smooth cubics through plane and surface, and re-verify
/// everything before returning. Deterministic per seed.
pub fn construct_component_example(
    family: Family,
    param: i64,
    seed: u64,
    budget: u32,
    variant: Option<PlaneConstraint>,
) -> Result<ExampleRecord, GeomError> {
    construct_component_example_over(family, param, 31, seed, budget, variant)
}

pub fn construct_component_example_over(
    family: Family,
    param: i64,
    prime: u32,
    seed: u64,
    budget: u32,
    variant: Option<PlaneConstraint>,
) -> Result<ExampleRecord, GeomError> {
    if family.determinant_formula(param) <= 0
        || family
            .gram(param)
            .short_root()
            .map(|r| r.is_some())
            .unwrap_or(true)
    {
        return Err(GeomError::NoSuchComponent { family, param });
    }
    let (recipe, constraint) = construction_plan(family, param, variant)?;
    let mut rng = SplitMix64::new(seed);
    let surface = recipe.build(prime)?;
    let surface_cubics = graded_piece(&surface, 3);

    let mut placement_failures = 0u32;
    let mut singular_cubics = 0u32;
    let mut verify_failures = 0u32;
    let mut attempts = 0u32;
    while attempts < budget {
        attempts += 1;
        let plane = match place_plane(constraint, recipe, prime, &mut rng, budget) {
            Ok(p) => p,
            Err(GeomError::BudgetExhausted { .. }) => {
                placement_failures += 1;
                continue;
            }
            Err(e) => return Err(e),
        };
        let plane_cubics = graded_piece(&plane, 3);
        let available = surface_cubics.intersect(&plane_cubics);
        if available.dim() == 0 {
            placement_failures += 1;
            continue;
        }
        let cubic = available.random_element(&mut rng);
        if cubic.is_zero() {
            singular_cubics += 1;
            continue;
        }
        if !is_projectively_smooth(&cubic)? {
            singular_cubics += 1;
            continue;
        }
        let record = ExampleRecord {
            label: alloc::format!("{}.param{}.seed{}", family.cli_tag(), param, seed),
            family,
            prime,
            plane,
            surface: SurfaceSpec::Recipe(recipe),
            cubic,
            expected_profile: constraint.expected_profile(),
            expected_param: param,
            cross_links: Vec::new(),
        };
        let report = verify_example(&record)?;
        if report.pass() {
            return Ok(record);
        }
        verify_failures += 1;
    }
    Err(GeomError::BudgetExhausted {
        attempts,
        placement_failures,
        singular_cubics,
        verify_failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn surfaces_have_documented_dimension_and_degree() {
        for recipe in [
            SurfaceRecipe::Veronese,
            SurfaceRecipe::Scroll { a: 1, b: 2 },
            SurfaceRecipe::CubicScrollBlowup,
            SurfaceRecipe::SegreScroll,
        ] {
            let ideal = recipe.build(31).unwrap();
            let data = dimension_degree(&ideal).unwrap();
            assert_eq!(data.dimension, 2, "{recipe:?}");
            assert_eq!(data.degree, recipe.expected_degree(), "{recipe:?}");
        }
    }

    #[test]
    fn scroll_lives_in_coordinate_hyperplane() {
        let ideal = SurfaceRecipe::Scroll { a: 1, b: 2 }.build(31).unwrap();
        let ring = ideal.ring;
        let gb = groebner(&ideal, MonomialOrder::Grevlex).unwrap();
        assert!(ideal_member(&Poly::variable(ring, 5), &gb));

        let segre = SurfaceRecipe::SegreScroll.build(31).unwrap();
        let gb = groebner(&segre, MonomialOrder::Grevlex).unwrap();
        let h = Poly::variable(ring, 0).sub(&Poly::variable(ring, 4)).unwrap();
        assert!(ideal_member(&h, &gb));
    }

    #[test]
    fn parametrized_points_lie_on_the_surface() {
        let mut rng = SplitMix64::new(3);
        for recipe in [
            SurfaceRecipe::Veronese,
            SurfaceRecipe::Scroll { a: 1, b: 2 },
            SurfaceRecipe::CubicScrollBlowup,
            SurfaceRecipe::SegreScroll,
        ] {
            let ideal = recipe.build(31).unwrap();
            for _ in 0..10 {
                let p = recipe.random_point(31, &mut rng);
                for g in &ideal.gens {
                    assert_eq!(g.evaluate(&p).unwrap().value, 0, "{recipe:?}");
                }
            }
        }
    }

    #[test]
    fn distinguished_lines_lie_on_their_scrolls() {
        let f = crate::field::PrimeField::F31;
        for recipe in [SurfaceRecipe::CubicScrollBlowup, SurfaceRecipe::SegreScroll] {
            let ideal = recipe.build(31).unwrap();
            let span = recipe.directrix_span().unwrap();
            for lambda in 0..31u32 {
                let point: Vec<u32> = (0..AMBIENT_VARS)
                    .map(|i| f.add(span[0][i], f.mul(lambda, span[1][i])))
                    .collect();
                for g in &ideal.gens {
                    assert_eq!(g.evaluate(&point).unwrap().value, 0, "{recipe:?}");
                }
            }
            let span = recipe.ruling_span(31, 2, 5).unwrap();
            for lambda in 0..31u32 {
                let point: Vec<u32> = (0..AMBIENT_VARS)
                    .map(|i| f.add(span[0][i], f.mul(lambda, span[1][i])))
                    .collect();
                for g in &ideal.gens {
                    assert_eq!(g.evaluate(&point).unwrap().value, 0, "{recipe:?}");
                }
            }
        }
    }

    #[test]
    fn veronese_meets_coordinate_plane_in_a_conic() {
        let ring = RingSpec::grevlex(31, AMBIENT_VARS);
        let veronese = SurfaceRecipe::Veronese.build(31).unwrap();
        // x = (t0², t0t1, t0t2, t1², t1t2, t2²): killing the first three
        // coordinates forces t0 = 0 and leaves the conic (t1², t1t2, t2²).
        let plane = Ideal::new(
            ring,
            alloc::vec![
                Poly::variable(ring, 0),
                Poly::variable(ring, 1),
                Poly::variable(ring, 2),
            ],
        )
        .unwrap();
        let profile = intersection_profile(&plane, &veronese).unwrap();
        assert_eq!(profile, IntersectionProfile::Conic);

        // the opposite coordinate plane pinches to a fat point instead
        let other = Ideal::new(
            ring,
            alloc::vec![
                Poly::variable(ring, 3),
                Poly::variable(ring, 4),
                Poly::variable(ring, 5),
            ],
        )
        .unwrap();
        let profile = intersection_profile(&other, &veronese).unwrap();
        assert_eq!(profile, IntersectionProfile::Points { count: 3 });
    }

    #[test]
    fn plane_against_itself_is_other() {
        let ring = RingSpec::grevlex(31, AMBIENT_VARS);
        let plane = Ideal::new(
            ring,
            alloc::vec![
                Poly::variable(ring, 0),
                Poly::variable(ring, 1),
                Poly::variable(ring, 2),
            ],
        )
        .unwrap();
        let profile = intersection_profile(&plane, &plane).unwrap();
        assert_eq!(profile, IntersectionProfile::Other { dim: 2, degree: 1 });
    }

    #[test]
    fn place_plane_constraints() {
        let mut rng = SplitMix64::new(11);
        let surface = SurfaceRecipe::CubicScrollBlowup.build(31).unwrap();

        let plane = place_plane(
            PlaneConstraint::ThroughPoints(1),
            SurfaceRecipe::CubicScrollBlowup,
            31,
            &mut rng,
            50,
        )
        .unwrap();
        assert_eq!(
            intersection_profile(&plane, &surface).unwrap(),
            IntersectionProfile::Points { count: 1 }
        );

        let segre = SurfaceRecipe::SegreScroll.build(31).unwrap();
        let plane = place_plane(
            PlaneConstraint::ContainingDirectrix,
            SurfaceRecipe::SegreScroll,
            31,
            &mut rng,
            50,
        )
        .unwrap();
        assert_eq!(
            intersection_profile(&plane, &segre).unwrap(),
            IntersectionProfile::Line
        );

        let veronese = SurfaceRecipe::Veronese.build(31).unwrap();
        let plane = place_plane(
            PlaneConstraint::Generic,
            SurfaceRecipe::Veronese,
            31,
            &mut rng,
            50,
        )
        .unwrap();
        assert_eq!(
            intersection_profile(&plane, &veronese).unwrap(),
            IntersectionProfile::Empty
        );
    }

    #[test]
    fn construct_examples_for_three_cases() {
        let rec = construct_component_example(Family::Scroll, 1, 7, 50, None).unwrap();
        assert_eq!(rec.expected_profile, IntersectionProfile::Points { count: 1 });
        assert!(verify_example(&rec).unwrap().pass());

        let rec = construct_component_example(Family::Scroll, 0, 7, 50, None).unwrap();
        assert_eq!(rec.expected_profile, IntersectionProfile::Empty);
        assert!(verify_example(&rec).unwrap().pass());

        let ruling = construct_component_example(
            Family::Scroll,
            0,
            7,
            50,
            Some(PlaneConstraint::ContainingRulingLine),
        )
        .unwrap();
        assert_eq!(ruling.expected_profile, IntersectionProfile::Line);

        let rec = construct_component_example(Family::Veronese, -1, 7, 50, None).unwrap();
        assert_eq!(rec.expected_profile, IntersectionProfile::Conic);
        assert!(verify_example(&rec).unwrap().pass());
    }

    #[test]
    fn unsupported_veronese_parameter_is_reported() {
        let err = construct_component_example(Family::Veronese, -2, 7, 50, None).unwrap_err();
        assert!(matches!(err, GeomError::UnsupportedParameter { .. }));
        let err = construct_component_example(Family::Veronese, 5, 7, 50, None).unwrap_err();
        assert!(matches!(err, GeomError::NoSuchComponent { .. }));
    }

    #[test]
    fn mutated_cubic_fails_verification() {
        let rec = construct_component_example(Family::Veronese, 1, 5, 50, None).unwrap();
        let mut corrupted = rec.clone();
        // flip one coefficient
        let mut terms = corrupted.cubic.terms.clone();
        let field = corrupted.cubic.ring.field();
        terms[0].1 = field.add(terms[0].1, 1);
        corrupted.cubic = Poly {
            ring: corrupted.cubic.ring,
            terms,
        };
        let report = verify_example(&corrupted).unwrap();
        assert!(!report.pass());
        assert!(!report.contains_plane || !report.contains_surface || !report.smooth);
    }
}
