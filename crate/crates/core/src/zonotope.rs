//! `V(0)` as the vertex-first projection of the unit cube `[0,1]^{n+1}` and
//! as the zonotope `Σ_j [0, ξ_j]`.

use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact_linalg::{int, Rat, RatVec};
use crate::lattice::{xi_column, xi_matrix};
use crate::limits::{check_cap, check_n, Limits};
use crate::sample::{random_vec, seeded_rng};
use crate::voronoi::{voronoi_vertices, Rhombus};

/// Number of random directions tried by [`zonotope_hull_check`].
pub const SUPPORT_DIRECTIONS: usize = 200;

/// Minkowski sum of the segments `[0, ξ_j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Zonotope {
    pub generators: Vec<RatVec>,
}

impl Zonotope {
    pub fn of_cell(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(Zonotope {
            generators: (0..=n).map(|k| xi_column(n, k)).collect(),
        })
    }

    pub fn ambient(&self) -> usize {
        self.generators[0].len()
    }

    /// `Σ_{g·u > 0} g`; generators orthogonal to `u` are left out.
    pub fn support_point(&self, u: &RatVec) -> Result<RatVec> {
        self.check_direction(u)?;
        let mut acc = RatVec::zeros(self.ambient());
        for g in &self.generators {
            if g.dot(u).is_positive() {
                acc = &acc + g;
            }
        }
        Ok(acc)
    }

    /// `h(u) = Σ_j max(0, g_j·u)`.
    pub fn support_value(&self, u: &RatVec) -> Result<Rat> {
        self.check_direction(u)?;
        Ok(self
            .generators
            .iter()
            .map(|g| g.dot(u))
            .filter(|d| d.is_positive())
            .sum())
    }

    fn check_direction(&self, u: &RatVec) -> Result<()> {
        if u.len() != self.ambient() {
            return Err(Error::DimensionMismatch {
                expected: self.ambient(),
                found: u.len(),
            });
        }
        if u.is_zero() {
            return Err(Error::InvalidArgument("support direction must be nonzero".into()));
        }
        Ok(())
    }
}

pub fn support_point(n: usize, u: &RatVec) -> Result<RatVec> {
    Zonotope::of_cell(n)?.support_point(u)
}

pub fn support_value(n: usize, u: &RatVec) -> Result<Rat> {
    Zonotope::of_cell(n)?.support_value(u)
}

fn cube_corners(m: usize, fixed: Option<usize>) -> Vec<RatVec> {
    (0u64..1u64 << m)
        .filter(|mask| fixed.is_none_or(|j| mask >> j & 1 == 0))
        .map(|mask| {
            (0..m)
                .map(|k| if mask >> k & 1 == 1 { Rat::one() } else { Rat::zero() })
                .collect()
        })
        .collect()
}

/// `{Ξ·b : b ∈ {0,1}^{n+1}}`, deduplicated and sorted.
pub fn project_cube_vertices(n: usize) -> Result<Vec<RatVec>> {
    project_cube_vertices_with(n, &Limits::default())
}

pub fn project_cube_vertices_with(n: usize, limits: &Limits) -> Result<Vec<RatVec>> {
    check_n(n)?;
    check_cap("cube projection", n, limits.subset)?;
    let xi = xi_matrix(n)?;
    let mut out = BTreeSet::new();
    for b in cube_corners(n + 1, None) {
        out.insert(xi.mul_vec(&b)?);
    }
    Ok(out.into_iter().collect())
}

/// `R_j = Ξ·C_j`, where `C_j` is the facet `b_j = 0` of the unit cube, or
/// `ξ_j + R_j = Ξ·(e_j + C_j)` when `flipped`.
///
/// The vertex images are compared against the rhombus vertices; a mismatch
/// is reported as an error rather than returned.
pub fn cube_cell_projection(n: usize, j: usize, flipped: bool) -> Result<Rhombus> {
    check_n(n)?;
    if j > n {
        return Err(Error::InvalidArgument(format!("cube cell index {j} exceeds {n}")));
    }
    let xi = xi_matrix(n)?;
    let lift = if flipped { RatVec::unit(n + 1, j) } else { RatVec::zeros(n + 1) };
    let mut images = BTreeSet::new();
    for b in cube_corners(n + 1, Some(j)) {
        images.insert(xi.mul_vec(&(&b + &lift))?);
    }
    let translate = if flipped { xi_column(n, j) } else { RatVec::zeros(n + 1) };
    let r = Rhombus::new(n, translate, [j])?;
    let expected: BTreeSet<RatVec> = r.vertices().into_iter().collect();
    if images != expected {
        return Err(Error::InvalidArgument(format!(
            "projected cube cell {j} does not match its rhombus"
        )));
    }
    Ok(r)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HullReport {
    pub n: usize,
    pub vertices: usize,
    /// Vertices violating some `x·(e_i − e_j) ≤ 1`.
    pub outside: Vec<RatVec>,
    /// Fewest vertices found on any facet plane.
    pub min_facet_support: usize,
    pub directions: usize,
    /// Directions where the generator sum missed the vertex maximum.
    pub support_failures: Vec<RatVec>,
}

impl HullReport {
    pub fn passed(&self) -> bool {
        self.outside.is_empty()
            && self.min_facet_support >= 1usize << (self.n - 1)
            && self.support_failures.is_empty()
    }
}

/// Checks the projected cube vertices against the bisector H-description
/// and compares the zonotope support function with a maximum over vertices
/// for [`SUPPORT_DIRECTIONS`] seeded directions.
pub fn zonotope_hull_check(n: usize, seed: u64) -> Result<HullReport> {
    zonotope_hull_check_with(n, seed, &Limits::default())
}

pub fn zonotope_hull_check_with(n: usize, seed: u64, limits: &Limits) -> Result<HullReport> {
    check_n(n)?;
    check_cap("zonotope hull check", n, limits.sampling)?;
    let projected = project_cube_vertices_with(n, limits)?;
    let one = Rat::one();
    let mut outside = Vec::new();
    let mut min_facet_support = usize::MAX;
    let mut tight = vec![0usize; (n + 1) * (n + 1)];
    for v in &projected {
        if !v.sum().is_zero() {
            outside.push(v.clone());
            continue;
        }
        for i in 0..=n {
            for j in 0..=n {
                if i == j {
                    continue;
                }
                let s = &v[i] - &v[j];
                if s > one {
                    outside.push(v.clone());
                } else if s == one {
                    tight[i * (n + 1) + j] += 1;
                }
            }
        }
    }
    for i in 0..=n {
        for j in 0..=n {
            if i != j {
                min_facet_support = min_facet_support.min(tight[i * (n + 1) + j]);
            }
        }
    }

    let z = Zonotope::of_cell(n)?;
    let vertices = voronoi_vertices(n)?;
    let mut rng = seeded_rng(seed);
    let (lo, hi) = (int(-1), int(1));
    let mut support_failures = Vec::new();
    let mut tried = 0;
    while tried < SUPPORT_DIRECTIONS {
        let u = random_vec(&mut rng, n + 1, &lo, &hi);
        if u.is_zero() {
            continue;
        }
        tried += 1;
        let best = vertices.iter().map(|v| v.dot(&u)).max().expect("nonempty");
        let p = z.support_point(&u)?;
        if p.dot(&u) != best || z.support_value(&u)? != best {
            support_failures.push(u);
        }
    }
    Ok(HullReport {
        n,
        vertices: projected.len(),
        outside,
        min_facet_support,
        directions: tried,
        support_failures,
    })
}
