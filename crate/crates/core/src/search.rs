//! Parameter search for surface bundles `Y(h, k)` built by gluing `X(h, k)`
//! to a knot-surgered elliptic surface `E(n)_K` carrying an equivalent
//! Lefschetz fibration.
//!
//! The two fibrations match when `h + k = n + 2g - 1` (equal fiber genus) and
//! `8 + 4h - 2k = 12n` (equal Euler characteristic, hence equal singular
//! fiber count). Solving gives `n = (h - k/2 + 2)/3` and
//! `g = (h + k - n + 1)/2`; the glued bundle has fiber genus `h + k`, base
//! genus `8h + 2k + 3` and signature `8n - 4(h + 1)`.

use std::fmt;

use num_rational::Rational64;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fibrations::{glue_difference, knot_surgered_fibration, x_family, SurfaceBundle};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ParamSolution {
    pub h: i64,
    pub k: i64,
    pub n: i64,
    pub g: i64,
}

impl ParamSolution {
    pub fn new(h: i64, k: i64, n: i64, g: i64) -> Result<Self> {
        let sol = ParamSolution { h, k, n, g };
        match sol.violations().first() {
            None => Ok(sol),
            Some(v) => Err(Error::ParamOutOfRange(format!(
                "(h,k,n,g) = ({h},{k},{n},{g}): {v}"
            ))),
        }
    }

    /// Names of the defining constraints this quadruple fails.
    pub fn violations(&self) -> Vec<&'static str> {
        let ParamSolution { h, k, n, g } = *self;
        let mut out = Vec::new();
        if h < 2 {
            out.push("h >= 2");
        }
        if k < 2 || k % 2 != 0 {
            out.push("k >= 2 even");
        }
        if h + k != n + 2 * g - 1 {
            out.push("h + k = n + 2g - 1");
        }
        if 8 + 4 * h - 2 * k != 12 * n {
            out.push("8 + 4h - 2k = 12n");
        }
        if n < 2 {
            out.push("n >= 2");
        }
        if g < 1 {
            out.push("g >= 1");
        }
        out
    }

    /// `8n - 4(h + 1)`.
    pub fn signature(&self) -> i64 {
        8 * self.n - 4 * (self.h + 1)
    }

    /// Signature with the two building blocks interchanged.
    pub fn mirror_signature(&self) -> i64 {
        -self.signature()
    }

    pub fn fiber_genus(&self) -> i64 {
        self.h + self.k
    }

    pub fn base_genus(&self) -> i64 {
        8 * self.h + 2 * self.k + 3
    }
}

impl fmt::Display for ParamSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(h={}, k={}, n={}, g={})",
            self.h, self.k, self.n, self.g
        )
    }
}

/// The unique solution at grid cell `(h, k)`, if any.
pub fn solve_cell(h: i64, k: i64) -> Option<ParamSolution> {
    if h < 2 || k < 2 || k % 2 != 0 {
        return None;
    }
    let three_n = h - k / 2 + 2;
    if three_n % 3 != 0 {
        return None;
    }
    let n = three_n / 3;
    if n < 2 {
        return None;
    }
    let twice_g = h + k - n + 1;
    if twice_g <= 0 || twice_g % 2 != 0 {
        return None;
    }
    Some(ParamSolution {
        h,
        k,
        n,
        g: twice_g / 2,
    })
}

/// Every solution with `2 <= h <= h_max`, `2 <= k <= k_max`, ordered by
/// `(h, k)`. Rows of the grid are scanned in parallel.
pub fn solve_params(h_max: i64, k_max: i64) -> Result<Vec<ParamSolution>> {
    if h_max < 2 || k_max < 2 {
        return Err(Error::RangeTooSmall { h_max, k_max });
    }
    Ok((2..=h_max)
        .into_par_iter()
        .flat_map_iter(|h| (2..=k_max).filter_map(move |k| solve_cell(h, k)))
        .collect())
}

/// Single-threaded scan of the same grid.
pub fn solve_params_sequential(h_max: i64, k_max: i64) -> Result<Vec<ParamSolution>> {
    if h_max < 2 || k_max < 2 {
        return Err(Error::RangeTooSmall { h_max, k_max });
    }
    Ok((2..=h_max)
        .flat_map(|h| (2..=k_max).filter_map(move |k| solve_cell(h, k)))
        .collect())
}

/// Glues `X(h, k)` to `E(n)_K` and checks the result against the closed-form
/// fiber genus, base genus and signature.
pub fn construct_bundle(sol: &ParamSolution) -> Result<SurfaceBundle> {
    if let Some(v) = sol.violations().first() {
        return Err(Error::ParamOutOfRange(format!("{sol}: {v}")));
    }
    let x = x_family(sol.h, sol.k)?;
    let enk = knot_surgered_fibration(sol.n, sol.g)?;
    let mut bundle = glue_difference(&x, &enk)?;
    for (quantity, closed_form, constructed) in [
        ("fiber genus", sol.fiber_genus(), bundle.fiber_genus),
        ("base genus", sol.base_genus(), bundle.base_genus),
        ("signature", sol.signature(), bundle.sigma),
    ] {
        if closed_form != constructed {
            return Err(Error::ConsistencyViolation {
                quantity,
                closed_form,
                constructed,
            });
        }
    }
    bundle.label = format!("Y({},{})", sol.h, sol.k);
    Ok(bundle)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SignedSolution {
    pub solution: ParamSolution,
    pub sigma: i64,
    pub sigma_mirror: i64,
}

/// Keeps the solutions whose bundle has non-zero signature, i.e. `2n != h + 1`.
pub fn nonzero_signature_filter(sols: &[ParamSolution]) -> Vec<SignedSolution> {
    sols.iter()
        .filter(|s| s.signature() != 0)
        .map(|&s| SignedSolution {
            solution: s,
            sigma: s.signature(),
            sigma_mirror: s.mirror_signature(),
        })
        .collect()
}

/// One row of the solutions table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolutionRow {
    pub h: i64,
    pub k: i64,
    pub n: i64,
    pub g: i64,
    pub fiber_genus: i64,
    pub base_genus: i64,
    pub sigma: i64,
    pub sigma_mirror: i64,
    pub s_singular_fibers: i64,
}

pub const SOLUTION_COLUMNS: [&str; 9] = [
    "h",
    "k",
    "n",
    "g",
    "fiber_genus",
    "base_genus",
    "sigma",
    "sigma_mirror",
    "s_singular_fibers",
];

impl SolutionRow {
    pub fn build(sol: &ParamSolution) -> Result<Self> {
        let bundle = construct_bundle(sol)?;
        Ok(SolutionRow {
            h: sol.h,
            k: sol.k,
            n: sol.n,
            g: sol.g,
            fiber_genus: bundle.fiber_genus,
            base_genus: bundle.base_genus,
            sigma: bundle.sigma,
            sigma_mirror: -bundle.sigma,
            s_singular_fibers: bundle.base_genus + 1,
        })
    }

    pub fn cells(&self) -> [i64; 9] {
        [
            self.h,
            self.k,
            self.n,
            self.g,
            self.fiber_genus,
            self.base_genus,
            self.sigma,
            self.sigma_mirror,
            self.s_singular_fibers,
        ]
    }
}

pub fn solutions_csv(rows: &[SolutionRow]) -> String {
    let mut out = SOLUTION_COLUMNS.join(",");
    out.push('\n');
    for row in rows {
        let cells: Vec<String> = row.cells().iter().map(i64::to_string).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GeographyTag {
    LatticeManifold,
    #[serde(rename = "line_8chi")]
    Line8Chi,
    #[serde(rename = "line_12chi_minus_e")]
    Line12ChiMinusE,
}

impl GeographyTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            GeographyTag::LatticeManifold => "lattice_manifold",
            GeographyTag::Line8Chi => "line_8chi",
            GeographyTag::Line12ChiMinusE => "line_12chi_minus_e",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GeographyPoint {
    pub chi_h: Rational64,
    pub c1_sq: Rational64,
    pub tag: GeographyTag,
}

pub const GEOGRAPHY_COLUMNS: [&str; 7] = [
    "tag", "chi_num", "chi_den", "c1sq_num", "c1sq_den", "chi_dec", "c1sq_dec",
];

/// Upper bound on samples per line.
pub const MAX_SAMPLES: usize = 1_000_000;

/// `c1^2 = 8 chi_h - 4(h + 1)`, the line of constant signature `-4(h + 1)`
/// through `X(h, k)`.
pub fn line_8chi(h: i64, chi: Rational64) -> Rational64 {
    chi * 8 - Rational64::from_integer(4 * (h + 1))
}

/// `c1^2 = 12 chi_h - e`, the line of constant Euler characteristic `e`.
pub fn line_12chi_minus_e(e: i64, chi: Rational64) -> Rational64 {
    chi * 12 - Rational64::from_integer(e)
}

/// Samples `chi_min, chi_min + step, ...` up to `chi_max`, always ending on
/// `chi_max`.
fn sample_chi(
    chi_min: Rational64,
    chi_max: Rational64,
    step: Rational64,
) -> Result<Vec<Rational64>> {
    let count = ((chi_max - chi_min) / step).floor().to_integer() as u128 + 2;
    if count > MAX_SAMPLES as u128 {
        return Err(Error::BadRange(format!(
            "[{chi_min}, {chi_max}] at step {step} exceeds {MAX_SAMPLES} samples"
        )));
    }
    let mut out = Vec::new();
    let mut chi = chi_min;
    while chi <= chi_max {
        out.push(chi);
        chi += step;
    }
    if out.last() != Some(&chi_max) {
        out.push(chi_max);
    }
    Ok(out)
}

/// Geography data for `X(h, k)`: the lattice points `(n, 0)` of the elliptic
/// surfaces with `chi_min <= n <= chi_max`, the point `(b, a)` of `X(h, k)`
/// itself, and samples of the lines `c1^2 = 8 chi - 4(h+1)` and
/// `c1^2 = 12 chi - e(X(h, k))`.
pub fn geography_emit(
    h: i64,
    k: i64,
    chi_min: Rational64,
    chi_max: Rational64,
    step: Rational64,
) -> Result<Vec<GeographyPoint>> {
    if chi_min > chi_max {
        return Err(Error::BadRange(format!(
            "chi_min {chi_min} > chi_max {chi_max}"
        )));
    }
    if !step.is_positive() {
        return Err(Error::BadRange(format!("step {step} must be positive")));
    }
    let x = x_family(h, k)?;
    let samples = sample_chi(chi_min, chi_max, step)?;

    let mut points = Vec::new();
    let first = chi_min.ceil().to_integer().max(1);
    let last = chi_max.floor().to_integer();
    for n in first..=last {
        points.push(GeographyPoint {
            chi_h: Rational64::from_integer(n),
            c1_sq: Rational64::zero(),
            tag: GeographyTag::LatticeManifold,
        });
    }
    points.push(GeographyPoint {
        chi_h: x.total.chi_h(),
        c1_sq: Rational64::from_integer(x.total.c1_sq()),
        tag: GeographyTag::LatticeManifold,
    });
    points.extend(samples.iter().map(|&chi| GeographyPoint {
        chi_h: chi,
        c1_sq: line_8chi(h, chi),
        tag: GeographyTag::Line8Chi,
    }));
    points.extend(samples.iter().map(|&chi| GeographyPoint {
        chi_h: chi,
        c1_sq: line_12chi_minus_e(x.total.e(), chi),
        tag: GeographyTag::Line12ChiMinusE,
    }));
    Ok(points)
}

/// Exact decimal rendering with six fractional digits, rounding half away
/// from zero.
pub fn decimal6(r: Rational64) -> String {
    let num = *r.numer() as i128 * 1_000_000;
    let den = *r.denom() as i128;
    let (q, rem) = (num / den, num % den);
    let scaled = if 2 * rem.abs() >= den {
        q + num.signum()
    } else {
        q
    };
    let sign = if scaled < 0 { "-" } else { "" };
    let abs = scaled.abs();
    format!("{sign}{}.{:06}", abs / 1_000_000, abs % 1_000_000)
}

pub fn geography_csv(points: &[GeographyPoint]) -> String {
    let mut out = GEOGRAPHY_COLUMNS.join(",");
    out.push('\n');
    for p in points {
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            p.tag.as_str(),
            p.chi_h.numer(),
            p.chi_h.denom(),
            p.c1_sq.numer(),
            p.c1_sq.denom(),
            decimal6(p.chi_h),
            decimal6(p.c1_sq)
        ));
    }
    out
}

/// Exact fraction for JSON output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Fraction {
    pub num: i64,
    pub den: i64,
}

impl From<Rational64> for Fraction {
    fn from(r: Rational64) -> Self {
        Fraction {
            num: *r.numer(),
            den: *r.denom(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeographyRecord {
    pub tag: GeographyTag,
    pub chi: Fraction,
    pub c1sq: Fraction,
    pub chi_dec: String,
    pub c1sq_dec: String,
}

impl From<&GeographyPoint> for GeographyRecord {
    fn from(p: &GeographyPoint) -> Self {
        GeographyRecord {
            tag: p.tag,
            chi: p.chi_h.into(),
            c1sq: p.c1_sq.into(),
            chi_dec: decimal6(p.chi_h),
            c1sq_dec: decimal6(p.c1_sq),
        }
    }
}

/// Published worked examples of the construction, with the numbers stated
/// for them. `singular_fibers` is stated once for both fibrations.
struct CorollaryClaims {
    id: &'static str,
    h: i64,
    k: i64,
    knot_genus: i64,
    ba: (i64, i64),
    elliptic_point: (i64, i64),
    singular_fibers: i64,
    fiber_genus: i64,
    base_genus: i64,
    sigma: i64,
}

const COROLLARIES: [CorollaryClaims; 2] = [
    CorollaryClaims {
        id: "4.2",
        h: 5,
        k: 2,
        knot_genus: 3,
        ba: (0, -24),
        elliptic_point: (2, 0),
        singular_fibers: 48,
        fiber_genus: 7,
        base_genus: 47,
        sigma: -8,
    },
    CorollaryClaims {
        id: "4.3",
        h: 8,
        k: 2,
        knot_genus: 4,
        ba: (0, -36),
        elliptic_point: (3, 0),
        singular_fibers: 76,
        fiber_genus: 10,
        base_genus: 75,
        sigma: -12,
    },
];

pub const COROLLARY_IDS: [&str; 2] = ["4.2", "4.3"];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub claim: String,
    pub claimed: String,
    pub computed: String,
    pub matches: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorollaryAudit {
    pub corollary: String,
    pub h: i64,
    pub k: i64,
    pub claims: Vec<Claim>,
}

impl CorollaryAudit {
    pub fn mismatches(&self) -> impl Iterator<Item = &Claim> {
        self.claims.iter().filter(|c| !c.matches)
    }
}

fn point(chi: Rational64, c1: i64) -> String {
    format!("({chi}, {c1})")
}

/// Recomputes every number stated for a worked example from the formulas.
pub fn audit_corollary(id: &str) -> Result<CorollaryAudit> {
    let c = COROLLARIES
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownCorollary(id.to_string()))?;
    let sol = solve_cell(c.h, c.k).ok_or_else(|| {
        Error::ParamOutOfRange(format!("({}, {}) solves no parameter system", c.h, c.k))
    })?;
    let x = x_family(sol.h, sol.k)?;
    let enk = knot_surgered_fibration(sol.n, sol.g)?;
    let bundle = construct_bundle(&sol)?;

    let int_claim = |name: &str, claimed: i64, computed: i64| Claim {
        claim: name.to_string(),
        claimed: claimed.to_string(),
        computed: computed.to_string(),
        matches: claimed == computed,
    };
    let point_claim = |name: &str, claimed: (i64, i64), chi: Rational64, c1: i64| Claim {
        claim: name.to_string(),
        claimed: point(Rational64::from_integer(claimed.0), claimed.1),
        computed: point(chi, c1),
        matches: Rational64::from_integer(claimed.0) == chi && claimed.1 == c1,
    };

    let fibers_computed = if x.singular_fibers == enk.singular_fibers {
        x.singular_fibers.to_string()
    } else {
        format!("{} / {}", x.singular_fibers, enk.singular_fibers)
    };
    let claims = vec![
        int_claim("knot genus g", c.knot_genus, sol.g),
        point_claim("(b, a) of X(h,k)", c.ba, x.total.chi_h(), x.total.c1_sq()),
        point_claim(
            "(chi_h, c1^2) of E(n)",
            c.elliptic_point,
            enk.total.chi_h(),
            enk.total.c1_sq(),
        ),
        Claim {
            claim: "singular fibers, both fibrations".to_string(),
            claimed: c.singular_fibers.to_string(),
            computed: fibers_computed,
            matches: x.singular_fibers == c.singular_fibers
                && enk.singular_fibers == c.singular_fibers,
        },
        int_claim("fiber genus", c.fiber_genus, bundle.fiber_genus),
        int_claim("base genus", c.base_genus, bundle.base_genus),
        int_claim("signature", c.sigma, bundle.sigma),
    ];
    Ok(CorollaryAudit {
        corollary: c.id.to_string(),
        h: c.h,
        k: c.k,
        claims,
    })
}
