//! The Voronoi cell `V(0)` of `A_n`: vertices, the `(n+1)!` simplex
//! decomposition, the two hyper-rhombus decompositions, facets, faces of
//! every dimension, exact point location and volumes.
//!
//! All index sets are 0-based here. `R_J` is the parallelepiped spanned by the
//! columns `ξ_g` of `Ξ` with `g ∉ J`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact_linalg::{factorial, gram_volume_sq, int, Perm, QuadExt, Rat, RatMat, RatVec, Simplex, Solution};
use crate::lattice::{closest_point_a, require_on_plane, xi_column, xi_combination, xi_matrix, LatticePoint};
use crate::limits::{check_cap, check_n, Limits};
use crate::sample::{random_plane_point, seeded_rng};

/// `t + R_J`, a parallelepiped spanned by the `ξ_g` with `g ∉ J`.
///
/// Proper rhombi have `1 ≤ |J| ≤ n`; `|J| = n+1` (a single point) is allowed
/// so that vertices can be reported through the same face type.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rhombus {
    n: usize,
    excluded: BTreeSet<usize>,
    translate: RatVec,
}

impl Rhombus {
    pub fn new(n: usize, translate: RatVec, excluded: impl IntoIterator<Item = usize>) -> Result<Self> {
        check_n(n)?;
        if translate.len() != n + 1 {
            return Err(Error::DimensionMismatch {
                expected: n + 1,
                found: translate.len(),
            });
        }
        let excluded: BTreeSet<usize> = excluded.into_iter().collect();
        if excluded.is_empty() {
            return Err(Error::InvalidArgument(
                "R_J needs a nonempty J: all n+1 columns of Ξ are dependent".into(),
            ));
        }
        if let Some(&bad) = excluded.iter().find(|&&g| g > n) {
            return Err(Error::InvalidArgument(format!("generator index {bad} exceeds {n}")));
        }
        Ok(Rhombus {
            n,
            excluded,
            translate,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn translate(&self) -> &RatVec {
        &self.translate
    }

    pub fn excluded(&self) -> &BTreeSet<usize> {
        &self.excluded
    }

    pub fn generator_indices(&self) -> Vec<usize> {
        (0..=self.n).filter(|g| !self.excluded.contains(g)).collect()
    }

    pub fn dim(&self) -> usize {
        self.n + 1 - self.excluded.len()
    }

    pub fn generators(&self) -> Vec<RatVec> {
        self.generator_indices()
            .into_iter()
            .map(|g| xi_column(self.n, g))
            .collect()
    }

    pub fn generator_matrix(&self) -> RatMat {
        if self.dim() == 0 {
            return RatMat::zeros(self.n + 1, 0);
        }
        RatMat::from_columns(&self.generators()).expect("generators share a length")
    }

    /// Gram matrix of the generators.
    pub fn gram(&self) -> RatMat {
        let m = self.generator_matrix();
        m.transpose().matmul(&m).expect("square Gram matrix")
    }

    /// The `2^dim` vertices, sorted.
    pub fn vertices(&self) -> Vec<RatVec> {
        let gens = self.generator_indices();
        let mut out = BTreeSet::new();
        for mask in 0u64..(1u64 << gens.len()) {
            let mut coeffs = vec![Rat::zero(); self.n + 1];
            for (bit, &g) in gens.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    coeffs[g] = Rat::one();
                }
            }
            out.insert(&self.translate + &xi_combination(&coeffs));
        }
        out.into_iter().collect()
    }

    pub fn centroid(&self) -> RatVec {
        let half = Rat::new(BigInt::one(), BigInt::from(2));
        let coeffs: Vec<Rat> = (0..=self.n)
            .map(|g| if self.excluded.contains(&g) { Rat::zero() } else { half.clone() })
            .collect();
        &self.translate + &xi_combination(&coeffs)
    }

    /// Coefficients `t` with `x = translate + Σ t_g ξ_g`, if `x` lies in the
    /// affine span.
    pub fn coordinates(&self, x: &RatVec) -> Option<RatVec> {
        if x.len() != self.n + 1 {
            return None;
        }
        let rhs = x - &self.translate;
        if self.dim() == 0 {
            return rhs.is_zero().then(|| RatVec::zeros(0));
        }
        match self.generator_matrix().solve(&rhs).ok()? {
            Solution::Unique(t) => Some(t),
            _ => None,
        }
    }

    pub fn contains(&self, x: &RatVec) -> bool {
        let one = Rat::one();
        self.coordinates(x)
            .is_some_and(|t| t.iter().all(|c| !c.is_negative() && *c <= one))
    }

    /// `0 < t_g < 1` for every generator coefficient.
    pub fn contains_strictly(&self, x: &RatVec) -> bool {
        let one = Rat::one();
        self.coordinates(x)
            .is_some_and(|t| t.iter().all(|c| c.is_positive() && *c < one))
    }

    /// Image under a coordinate permutation. `P ξ_g = ξ_σ(g)` because `Ξ`
    /// commutes with permutations.
    pub fn permuted(&self, perm: &Perm) -> Rhombus {
        Rhombus {
            n: self.n,
            excluded: self.excluded.iter().map(|&g| perm.image(g)).collect(),
            translate: perm.apply_vec(&self.translate),
        }
    }

    /// All generators have the same length and every pair meets at the same
    /// angle, so every 2-face is a rhombus congruent to every other.
    pub fn is_hyper_rhombus(&self) -> bool {
        let g = self.gram();
        let k = g.rows();
        if k < 2 {
            return false;
        }
        let diag = g.get(0, 0);
        let off = g.get(0, 1);
        (0..k).all(|r| (0..k).all(|c| g.get(r, c) == if r == c { diag } else { off }))
    }
}

impl fmt::Display for Rhombus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let j: Vec<String> = self.excluded.iter().map(|g| (g + 1).to_string()).collect();
        write!(f, "{} + R_{{{}}}", self.translate, j.join(","))
    }
}

/// `σ_0 = conv{v_0, …, v_n}`, `v_j = ξ_1 + … + ξ_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FundamentalSimplex {
    pub n: usize,
    pub vertices: Vec<RatVec>,
}

impl FundamentalSimplex {
    /// `conv{v_1, …, v_n}`, the facet lying on the boundary of the cell.
    pub fn roof(&self) -> Simplex {
        Simplex::from_vertices_unchecked(self.vertices[1..].to_vec())
    }

    pub fn as_simplex(&self) -> Simplex {
        Simplex::from_vertices_unchecked(self.vertices.clone())
    }
}

pub fn fundamental_simplex(n: usize) -> Result<FundamentalSimplex> {
    check_n(n)?;
    let mut acc = RatVec::zeros(n + 1);
    let mut vertices = vec![acc.clone()];
    for k in 0..n {
        acc = &acc + &xi_column(n, k);
        vertices.push(acc.clone());
    }
    Ok(FundamentalSimplex { n, vertices })
}

/// The facet `ξ_i + R_{ij}` on the bisector of `0` and `e_i − e_j`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Facet {
    pub i: usize,
    pub j: usize,
    pub geometry: Rhombus,
}

impl Facet {
    pub fn new(n: usize, i: usize, j: usize) -> Result<Self> {
        check_n(n)?;
        if i == j || i > n || j > n {
            return Err(Error::InvalidArgument(format!(
                "facet indices ({i}, {j}) must be distinct and at most {n}"
            )));
        }
        Ok(Facet {
            i,
            j,
            geometry: Rhombus::new(n, xi_column(n, i), [i, j])?,
        })
    }

    /// Outward normal `e_i − e_j`; the facet lies on `x·normal = 1`.
    pub fn normal(&self) -> RatVec {
        let m = self.geometry.n + 1;
        &RatVec::unit(m, self.i) - &RatVec::unit(m, self.j)
    }

    pub fn neighbor(&self) -> LatticePoint {
        let m = self.geometry.n + 1;
        let coords: Vec<BigInt> = (0..m)
            .map(|k| {
                BigInt::from(if k == self.i {
                    1
                } else if k == self.j {
                    -1
                } else {
                    0
                })
            })
            .collect();
        LatticePoint::new(
            crate::lattice::LatticeSpec::a(self.geometry.n).expect("n >= 1"),
            coords,
        )
        .expect("roots lie in A_n")
    }

    pub fn vertices(&self) -> Vec<RatVec> {
        self.geometry.vertices()
    }
}

/// Everything `locate` learns about a point of the plane `x·1 = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocationReport {
    /// `max x − min x ≤ 1`.
    pub inside: bool,
    /// `max x − min x = 1`.
    pub boundary: bool,
    /// `j` with `x ∈ R_j`, i.e. the lowest index attaining `min x`; only set
    /// for points of the cell.
    pub rhombus_index: Option<usize>,
    /// Stable descending order of the coordinates; an inside point lies in
    /// the simplex `Π·σ_0` of this permutation.
    pub sorting_perm: Perm,
    pub closest: LatticePoint,
}

/// Subset sums `Σ_{g∈S} ξ_g` over `∅ ≠ S ⊊ {0..n}`, sorted.
pub fn voronoi_vertices(n: usize) -> Result<Vec<RatVec>> {
    voronoi_vertices_with(n, &Limits::default())
}

pub fn voronoi_vertices_with(n: usize, limits: &Limits) -> Result<Vec<RatVec>> {
    check_n(n)?;
    check_cap("vertex enumeration", n, limits.subset)?;
    let full = (1u64 << (n + 1)) - 1;
    let mut out = BTreeSet::new();
    for mask in 1..full {
        let coeffs: Vec<Rat> = (0..=n)
            .map(|g| if mask >> g & 1 == 1 { Rat::one() } else { Rat::zero() })
            .collect();
        out.insert(xi_combination(&coeffs));
    }
    Ok(out.into_iter().collect())
}

fn apply_to_vertices(perm: &Perm, vertices: &[RatVec]) -> Simplex {
    Simplex::from_vertices_unchecked(vertices.iter().map(|v| perm.apply_vec(v)).collect())
}

/// The `(n+1)!` images `Π·σ_0`, in lexicographic permutation order.
pub fn simplex_decomposition(n: usize) -> Result<Vec<Simplex>> {
    simplex_decomposition_with(n, &Limits::default())
}

pub fn simplex_decomposition_with(n: usize, limits: &Limits) -> Result<Vec<Simplex>> {
    check_n(n)?;
    check_cap("simplex decomposition", n, limits.factorial)?;
    let sigma0 = fundamental_simplex(n)?;
    Ok(Perm::all(n + 1)
        .iter()
        .map(|p| apply_to_vertices(p, &sigma0.vertices))
        .collect())
}

/// `{R_j}` with translate 0, or the flipped family `{ξ_j + R_j}`.
pub fn rhombus_decomposition(n: usize, flipped: bool) -> Result<Vec<Rhombus>> {
    check_n(n)?;
    (0..=n)
        .map(|j| {
            let t = if flipped { xi_column(n, j) } else { RatVec::zeros(n + 1) };
            Rhombus::new(n, t, [j])
        })
        .collect()
}

/// The `n!` images of `σ_0` under permutations of the first `n` coordinates;
/// together they tile `R_{n+1}` (0-based: `R_n`).
pub fn rhombus_simplices(n: usize) -> Result<Vec<Simplex>> {
    rhombus_simplices_with(n, &Limits::default())
}

pub fn rhombus_simplices_with(n: usize, limits: &Limits) -> Result<Vec<Simplex>> {
    check_n(n)?;
    check_cap("rhombus triangulation", n, limits.factorial)?;
    let sigma0 = fundamental_simplex(n)?;
    Ok(Perm::all(n)
        .iter()
        .map(|p| apply_to_vertices(&p.extend(1), &sigma0.vertices))
        .collect())
}

/// All `n(n+1)` facets `ξ_i + R_{ij}`, ordered by `(i, j)`.
pub fn facets(n: usize) -> Result<Vec<Facet>> {
    check_n(n)?;
    let mut out = Vec::with_capacity(n * (n + 1));
    for i in 0..=n {
        for j in 0..=n {
            if i != j {
                out.push(Facet::new(n, i, j)?);
            }
        }
    }
    Ok(out)
}

/// The `n` facets around the vertex `−ξ_{n+1}`: images of `ξ_1 + R_{1,n+1}`
/// under circular shifts of the first `n` coordinates.
pub fn facets_at_vertex(n: usize) -> Result<Vec<Facet>> {
    check_n(n)?;
    let base = Facet::new(n, 0, n)?;
    (0..n)
        .map(|s| {
            let g = crate::exact_linalg::shift_matrix(n, s as i64).extend(1);
            let geometry = base.geometry.permuted(&g);
            Ok(Facet {
                i: g.image(base.i),
                j: g.image(base.j),
                geometry,
            })
        })
        .collect()
}

/// All k-dimensional faces, `0 ≤ k ≤ n−1`, as `t + R_J` with
/// `|J| = n+1−k`, sorted by `(J, t)`.
///
/// Faces of each facet parallelepiped are obtained by freezing every
/// generator outside a k-subset at 0 or 1; duplicates shared between facets
/// are merged by their centroid.
pub fn k_faces(n: usize, k: usize) -> Result<Vec<Rhombus>> {
    k_faces_with(n, k, &Limits::default())
}

pub fn k_faces_with(n: usize, k: usize, limits: &Limits) -> Result<Vec<Rhombus>> {
    check_n(n)?;
    check_cap("face lattice", n, limits.face_lattice)?;
    if k >= n {
        return Err(Error::InvalidArgument(format!(
            "face dimension {k} outside [0, {}]",
            n - 1
        )));
    }
    let half = Rat::new(BigInt::one(), BigInt::from(2));
    let mut seen: BTreeMap<(BTreeSet<usize>, RatVec), Rhombus> = BTreeMap::new();
    for facet in facets(n)? {
        let gens = facet.geometry.generator_indices();
        let m = gens.len();
        for free_mask in 0u64..(1u64 << m) {
            if free_mask.count_ones() as usize != k {
                continue;
            }
            let fixed: Vec<usize> = (0..m).filter(|b| free_mask >> b & 1 == 0).collect();
            for fix_mask in 0u64..(1u64 << fixed.len()) {
                let mut shift = vec![Rat::zero(); n + 1];
                shift[facet.i] = Rat::one();
                for (bit, &b) in fixed.iter().enumerate() {
                    if fix_mask >> bit & 1 == 1 {
                        shift[gens[b]] = Rat::one();
                    }
                }
                let mut centre = shift.clone();
                let mut excluded: BTreeSet<usize> = facet.geometry.excluded().clone();
                for (b, &g) in gens.iter().enumerate() {
                    if free_mask >> b & 1 == 1 {
                        centre[g] = half.clone();
                    } else {
                        excluded.insert(g);
                    }
                }
                let key = (excluded.clone(), xi_combination(&centre));
                seen.entry(key).or_insert_with(|| Rhombus {
                    n,
                    excluded,
                    translate: xi_combination(&shift),
                });
            }
        }
    }
    let mut out: Vec<Rhombus> = seen.into_values().collect();
    out.sort();
    Ok(out)
}

/// `(n+1)²·det(Ξ_{n+1}ᵀ Ξ_{n+1})`, the squared volume of the cell as
/// `n+1` copies of one rhombus.
pub fn cell_volume_sq(n: usize) -> Result<Rat> {
    check_n(n)?;
    let xi = xi_matrix(n)?;
    let cols: Vec<usize> = (0..n).collect();
    let per = gram_volume_sq(&xi.select_columns(&cols));
    Ok(int((n + 1) as i64) * int((n + 1) as i64) * per)
}

/// n-volume of an n-simplex lying in the plane `x·1 = 0` of `R^{n+1}`.
///
/// Dropping the last coordinate maps the plane onto `R^n` and scales
/// n-volumes by `1/√(n+1)`, so the result is `√(n+1)·|det D'| / n!` with
/// `D'` the edge matrix without its last row.
pub fn plane_volume(simplex: &Simplex) -> Result<QuadExt> {
    let m = simplex.ambient();
    let n = m - 1;
    if simplex.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: simplex.dim(),
        });
    }
    let d = simplex.edge_matrix();
    let rows: Vec<RatVec> = (0..n).map(|r| d.row(r)).collect();
    let det = RatMat::from_rows(&rows)?.det()?;
    let base = det.abs() / Rat::from_integer(factorial(n));
    Ok(QuadExt::new(Rat::zero(), base, m as u64))
}

/// Exact point location in the cell.
pub fn locate(n: usize, x: &RatVec) -> Result<LocationReport> {
    check_n(n)?;
    require_on_plane(n, x)?;
    let max = x.max_entry().expect("n >= 1").clone();
    let min = x.min_entry().expect("n >= 1").clone();
    let spread = &max - &min;
    let inside = spread <= Rat::one();
    let boundary = spread == Rat::one();
    let rhombus_index = inside.then(|| x.iter().position(|c| *c == min).expect("min is attained"));
    Ok(LocationReport {
        inside,
        boundary,
        rhombus_index,
        sorting_perm: Perm::sorting_descending(x.as_slice()),
        closest: closest_point_a(n, x)?,
    })
}

/// Cross-check of the spread test against the closest-point decoder.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MembershipReport {
    pub n: usize,
    pub trials: usize,
    pub inside: usize,
    /// Inside points whose decoded lattice point is not 0 (boundary ties
    /// resolved to a lexicographically smaller neighbor).
    pub tie_broken_away: usize,
    pub counterexamples: Vec<RatVec>,
}

/// For seeded random points, checks `max − min ≤ 1 ⟺ ‖x‖ = ‖x − p‖` where
/// `p` is the decoded closest lattice point, i.e. 0 is one of the closest.
pub fn membership_equivalence_check(n: usize, trials: usize, seed: u64) -> Result<MembershipReport> {
    membership_equivalence_check_with(n, trials, seed, &Limits::default())
}

pub fn membership_equivalence_check_with(
    n: usize,
    trials: usize,
    seed: u64,
    limits: &Limits,
) -> Result<MembershipReport> {
    check_n(n)?;
    check_cap("membership check", n, limits.sampling)?;
    let mut rng = seeded_rng(seed);
    let (lo, hi) = (int(-1), int(1));
    let mut report = MembershipReport {
        n,
        trials,
        inside: 0,
        tie_broken_away: 0,
        counterexamples: Vec::new(),
    };
    for _ in 0..trials {
        let x = random_plane_point(&mut rng, n, &lo, &hi);
        let loc = locate(n, &x)?;
        let p = loc.closest.to_rat_vec();
        let origin_is_closest = x.norm_sq() == (&x - &p).norm_sq();
        if loc.inside {
            report.inside += 1;
            if !loc.closest.is_origin() {
                report.tie_broken_away += 1;
            }
        }
        if loc.inside != origin_is_closest {
            report.counterexamples.push(x);
        }
    }
    Ok(report)
}
