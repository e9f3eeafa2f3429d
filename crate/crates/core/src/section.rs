//! The Voronoi cell of `D_m` (the pyramidal cube), its section by the plane
//! `x·1 = 0`, and how that section compares with the `A_{m−1}` cell.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact_linalg::{int, rat, Rat, RatMat, RatVec, Solution};
use crate::lattice::proj_matrix;
use crate::limits::{check_cap, Limits};
use crate::voronoi::voronoi_vertices;

/// `normal·x ≤ offset`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfSpace {
    pub normal: RatVec,
    pub offset: Rat,
}

impl HalfSpace {
    pub fn slack(&self, x: &RatVec) -> Rat {
        &self.offset - self.normal.dot(x)
    }
}

/// A polytope given by vertices, half-spaces, or both.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polytope {
    pub ambient: usize,
    pub vrep: Option<Vec<RatVec>>,
    pub hrep: Option<Vec<HalfSpace>>,
}

/// Outcome of checking a V-description against an H-description.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepCheck {
    /// `(vertex, half-space)` index pairs with negative slack.
    pub violations: Vec<(usize, usize)>,
    /// Vertices tight at each half-space.
    pub tight_counts: Vec<usize>,
    /// Affine rank of each tight vertex set (`ambient − 1` when facet-defining).
    pub tight_ranks: Vec<usize>,
}

impl RepCheck {
    pub fn consistent(&self, ambient: usize) -> bool {
        self.violations.is_empty()
            && self.tight_counts.iter().all(|&c| c >= ambient)
            && self.tight_ranks.iter().all(|&r| r + 1 == ambient)
    }
}

impl Polytope {
    pub fn vertices(&self) -> Option<&[RatVec]> {
        self.vrep.as_deref()
    }

    pub fn halfspaces(&self) -> Result<&[HalfSpace]> {
        self.hrep.as_deref().ok_or(Error::MissingHrep)
    }

    /// Every vertex satisfies every inequality, and every inequality is
    /// tight on a vertex set of full facet rank.
    pub fn check_representations(&self) -> Result<RepCheck> {
        let hs = self.halfspaces()?;
        let vs = self
            .vrep
            .as_deref()
            .ok_or_else(|| Error::InvalidArgument("polytope has no vertex list".into()))?;
        let mut violations = Vec::new();
        let mut tight_counts = Vec::with_capacity(hs.len());
        let mut tight_ranks = Vec::with_capacity(hs.len());
        for (hi, h) in hs.iter().enumerate() {
            let mut tight = Vec::new();
            for (vi, v) in vs.iter().enumerate() {
                let s = h.slack(v);
                if s.is_negative() {
                    violations.push((vi, hi));
                } else if s.is_zero() {
                    tight.push(v.clone());
                }
            }
            tight_counts.push(tight.len());
            tight_ranks.push(affine_rank(&tight));
        }
        Ok(RepCheck {
            violations,
            tight_counts,
            tight_ranks,
        })
    }

    /// Vertices of the H-description, by solving every square subsystem.
    pub fn hrep_vertices(&self) -> Result<Vec<RatVec>> {
        self.hrep_vertices_with(&Limits::default())
    }

    pub fn hrep_vertices_with(&self, limits: &Limits) -> Result<Vec<RatVec>> {
        check_cap("vertex enumeration ambient", self.ambient, limits.section_ambient)?;
        let hs = self.halfspaces()?;
        Ok(enumerate_vertices(self.ambient, hs, None))
    }
}

/// Dimension of the affine hull (−1 for the empty set is reported as 0).
pub fn affine_rank(points: &[RatVec]) -> usize {
    let Some(first) = points.first() else {
        return 0;
    };
    if points.len() == 1 {
        return 0;
    }
    let diffs: Vec<RatVec> = points[1..].iter().map(|p| p - first).collect();
    RatMat::from_rows(&diffs).map(|m| m.rank()).unwrap_or(0)
}

fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// A half-space scaled to integer coefficients, when they fit in `i128`.
fn integer_row(h: &HalfSpace) -> Option<Vec<i128>> {
    let lcm = h
        .normal
        .iter()
        .chain(std::iter::once(&h.offset))
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    h.normal
        .iter()
        .chain(std::iter::once(&h.offset))
        .map(|c| i128::try_from(c.numer() * (&lcm / c.denom())).ok())
        .collect()
}

/// Fraction-free (Bareiss) determinant; `None` on overflow.
fn bareiss_det(mut a: Vec<Vec<i128>>) -> Option<i128> {
    let n = a.len();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            let Some(r) = (k + 1..n).find(|&r| a[r][k] != 0) else {
                return Some(0);
            };
            a.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = a[i][j].checked_mul(a[k][k])?.checked_sub(a[i][k].checked_mul(a[k][j])?)?;
                a[i][j] = t / prev;
            }
        }
        prev = a[k][k];
    }
    sign.checked_mul(a[n - 1][n - 1])
}

/// Cramer's rule on an integer `d × (d+1)` augmented system: numerators and
/// a positive common denominator, `None` when singular or on overflow.
fn cramer(rows: &[Vec<i128>]) -> Option<Option<(Vec<i128>, i128)>> {
    let d = rows.len();
    let coeff: Vec<Vec<i128>> = rows.iter().map(|r| r[..d].to_vec()).collect();
    let det = bareiss_det(coeff.clone())?;
    if det == 0 {
        return Some(None);
    }
    let mut nums = Vec::with_capacity(d);
    for c in 0..d {
        let mut m = coeff.clone();
        for (r, row) in m.iter_mut().enumerate() {
            row[c] = rows[r][d];
        }
        nums.push(bareiss_det(m)?);
    }
    if det < 0 {
        for x in &mut nums {
            *x = x.checked_neg()?;
        }
        return Some(Some((nums, det.checked_neg()?)));
    }
    Some(Some((nums, det)))
}

fn feasible_int(rows: &[Vec<i128>], nums: &[i128], den: i128) -> Option<bool> {
    let d = nums.len();
    for r in rows {
        let mut lhs = 0i128;
        for k in 0..d {
            lhs = lhs.checked_add(r[k].checked_mul(nums[k])?)?;
        }
        if lhs > r[d].checked_mul(den)? {
            return Some(false);
        }
    }
    Some(true)
}

fn solve_exact(rows: &[RatVec], rhs: Vec<Rat>) -> Option<RatVec> {
    let m = RatMat::from_rows(rows).ok()?;
    match m.solve(&RatVec::new(rhs)).ok()? {
        Solution::Unique(x) => Some(x),
        _ => None,
    }
}

/// Solves every `d × d` system made of `d − |extra|` half-spaces at equality
/// plus the optional extra equation, keeping feasible unique solutions.
fn enumerate_vertices(d: usize, hs: &[HalfSpace], extra: Option<&HalfSpace>) -> Vec<RatVec> {
    let k = d - usize::from(extra.is_some());
    let int_rows: Option<Vec<Vec<i128>>> = hs.iter().map(integer_row).collect();
    let int_extra: Option<Option<Vec<i128>>> = match extra {
        Some(e) => integer_row(e).map(Some),
        None => Some(None),
    };
    let int_system = int_rows.zip(int_extra);
    let mut found = BTreeSet::new();
    for_each_subset(hs.len(), k, |pick| {
        if let Some((ir, ie)) = &int_system {
            let mut sys: Vec<Vec<i128>> = pick.iter().map(|&i| ir[i].clone()).collect();
            sys.extend(ie.iter().cloned());
            match cramer(&sys) {
                Some(None) => return,
                Some(Some((nums, den))) => {
                    if let Some(ok) = feasible_int(ir, &nums, den) {
                        if ok {
                            let den = Rat::from_integer(BigInt::from(den));
                            found.insert(
                                nums.iter()
                                    .map(|&x| Rat::from_integer(BigInt::from(x)) / &den)
                                    .collect(),
                            );
                        }
                        return;
                    }
                }
                None => {}
            }
        }
        let mut rows: Vec<RatVec> = pick.iter().map(|&i| hs[i].normal.clone()).collect();
        let mut rhs: Vec<Rat> = pick.iter().map(|&i| hs[i].offset.clone()).collect();
        if let Some(e) = extra {
            rows.push(e.normal.clone());
            rhs.push(e.offset.clone());
        }
        if let Some(x) = solve_exact(&rows, rhs) {
            if hs.iter().all(|h| !h.slack(&x).is_negative()) {
                found.insert(x);
            }
        }
    });
    found.into_iter().collect()
}

fn half_integer_corners(m: usize) -> impl Iterator<Item = Vec<Rat>> {
    (0u64..1u64 << m).map(move |mask| {
        (0..m)
            .map(|k| if mask >> k & 1 == 1 { rat(1, 2) } else { rat(-1, 2) })
            .collect()
    })
}

/// `V_{D_m}(p)`: vertices `p + (±1/2, …, ±1/2)` and `p ± e_j`; half-spaces
/// `s x_i + t x_j ≤ 1 + s p_i + t p_j` for `i < j`, `s, t = ±1`.
pub fn pyramidal_cube(m: usize, p: &[i64]) -> Result<Polytope> {
    if m < 2 {
        return Err(Error::InvalidArgument("D_m needs m >= 2".into()));
    }
    if p.len() != m {
        return Err(Error::DimensionMismatch {
            expected: m,
            found: p.len(),
        });
    }
    let sum: i64 = p.iter().sum();
    if sum.is_odd() {
        return Err(Error::ParityViolation(format!("{p:?} has odd coordinate sum")));
    }
    let centre = RatVec::from_ints(p);
    let mut vrep = Vec::with_capacity((1 << m) + 2 * m);
    for c in half_integer_corners(m) {
        vrep.push(&centre + &RatVec::new(c));
    }
    for j in 0..m {
        vrep.push(&centre + &RatVec::unit(m, j));
        vrep.push(&centre - &RatVec::unit(m, j));
    }
    vrep.sort();
    let mut hrep = Vec::with_capacity(2 * m * (m - 1));
    for i in 0..m {
        for j in i + 1..m {
            for (s, t) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                let mut normal = vec![Rat::zero(); m];
                normal[i] = int(s);
                normal[j] = int(t);
                let offset = int(1 + s * p[i] + t * p[j]);
                hrep.push(HalfSpace {
                    normal: RatVec::new(normal),
                    offset,
                });
            }
        }
    }
    Ok(Polytope {
        ambient: m,
        vrep: Some(vrep),
        hrep: Some(hrep),
    })
}

/// `P ∩ {x·normal = offset}` as a sorted vertex list (empty when the plane
/// misses `P`). The result carries the H-description of `P` as well.
pub fn hyperplane_section(poly: &Polytope, normal: &RatVec, offset: &Rat) -> Result<Polytope> {
    hyperplane_section_with(poly, normal, offset, &Limits::default())
}

pub fn hyperplane_section_with(
    poly: &Polytope,
    normal: &RatVec,
    offset: &Rat,
    limits: &Limits,
) -> Result<Polytope> {
    let hs = poly.halfspaces()?;
    check_cap("section ambient dimension", poly.ambient, limits.section_ambient)?;
    if normal.len() != poly.ambient {
        return Err(Error::DimensionMismatch {
            expected: poly.ambient,
            found: normal.len(),
        });
    }
    if normal.is_zero() {
        return Err(Error::InvalidArgument("section normal must be nonzero".into()));
    }
    let plane = HalfSpace {
        normal: normal.clone(),
        offset: offset.clone(),
    };
    let vrep = enumerate_vertices(poly.ambient, hs, Some(&plane));
    Ok(Polytope {
        ambient: poly.ambient,
        vrep: Some(vrep),
        hrep: Some(hs.to_vec()),
    })
}

/// Section of `V_{D_m}(p)` by `x·1 = 0`.
pub fn diagonal_section(m: usize, p: &[i64]) -> Result<Vec<RatVec>> {
    let cell = pyramidal_cube(m, p)?;
    let sec = hyperplane_section(&cell, &RatVec::ones(m), &Rat::zero())?;
    Ok(sec.vrep.unwrap_or_default())
}

/// `e_1 + e_2` in `R^m`, the neighbor whose cell decides the section.
pub fn first_neighbor(m: usize) -> Vec<i64> {
    (0..m).map(|k| i64::from(k < 2)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectionReport {
    pub n: usize,
    /// Section of `V_{D_{n+1}}(0)` equals `V(0)` of `A_n` as exact sets.
    pub equal: bool,
    pub section_vertices: usize,
    pub cell_vertices: usize,
    /// Affine rank of the section of `V_{D_{n+1}}(e_1+e_2)` by the plane;
    /// `None` when the section is empty.
    pub neighbor_rank: Option<usize>,
    /// A vertex of `V_{D_{n+1}}(e_1+e_2)` with `x·1 < 0`, if there is one.
    pub witness: Option<RatVec>,
}

impl SectionReport {
    /// The expected outcome: equality with a thin neighbor section for
    /// `n ≤ 3`, a full-rank neighbor section and a witness for `n = 4`.
    pub fn as_expected(&self) -> bool {
        if self.n <= 3 {
            self.equal && self.neighbor_rank.is_none_or(|r| r < self.n) && self.witness.is_none()
        } else {
            !self.equal && self.neighbor_rank == Some(self.n) && self.witness.is_some()
        }
    }
}

/// Compares the plane section of the `D_{n+1}` cell with the `A_n` cell,
/// `1 ≤ n ≤ 4`.
pub fn section_equivalence_check(n: usize) -> Result<SectionReport> {
    if !(1..=4).contains(&n) {
        return Err(Error::InvalidArgument(format!("section check needs 1 <= n <= 4, got {n}")));
    }
    let m = n + 1;
    let section = diagonal_section(m, &vec![0; m])?;
    let cell = voronoi_vertices(n)?;
    let neighbor = first_neighbor(m);
    let nsec = diagonal_section(m, &neighbor)?;
    let neighbor_rank = (!nsec.is_empty()).then(|| affine_rank(&nsec));
    let witness = pyramidal_cube(m, &neighbor)?
        .vrep
        .unwrap_or_default()
        .into_iter()
        .filter(|v| v.sum().is_negative())
        .min_by(|a, b| a.sum().cmp(&b.sum()).then_with(|| b.cmp(a)));
    Ok(SectionReport {
        n,
        equal: section == cell,
        section_vertices: section.len(),
        cell_vertices: cell.len(),
        neighbor_rank,
        witness,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClearanceReport {
    pub n: usize,
    /// `min x·1` over the vertices of `V_{D_{n+1}}(e_1+e_2)`.
    pub min: Rat,
    pub minimizers: Vec<RatVec>,
    /// Minimum over the cube-type vertices, `(3 − n)/2`.
    pub cube_min: Rat,
    /// Minimum over the apex-type vertices, always 1.
    pub apex_min: Rat,
}

impl ClearanceReport {
    /// −1, 0 or 1 according to the sign of the minimum.
    pub fn sign(&self) -> i32 {
        if self.min.is_positive() {
            1
        } else if self.min.is_zero() {
            0
        } else {
            -1
        }
    }
}

/// How far the neighbor cell `V_{D_{n+1}}(e_1+e_2)` stays from the plane.
pub fn neighbor_cell_clearance(n: usize) -> Result<ClearanceReport> {
    if !(1..=6).contains(&n) {
        return Err(Error::InvalidArgument(format!("clearance needs 1 <= n <= 6, got {n}")));
    }
    let m = n + 1;
    let p = first_neighbor(m);
    let centre = RatVec::from_ints(&p);
    let cube_min = half_integer_corners(m)
        .map(|c| (&centre + &RatVec::new(c)).sum())
        .min()
        .expect("nonempty");
    let apex_min = (0..m)
        .flat_map(|j| [&centre + &RatVec::unit(m, j), &centre - &RatVec::unit(m, j)])
        .map(|v| v.sum())
        .min()
        .expect("nonempty");
    let verts = pyramidal_cube(m, &p)?.vrep.unwrap_or_default();
    let min = verts.iter().map(|v| v.sum()).min().expect("nonempty");
    let minimizers = verts.into_iter().filter(|v| v.sum() == min).collect();
    Ok(ClearanceReport {
        n,
        min,
        minimizers,
        cube_min,
        apex_min,
    })
}

/// `M_proj(n)·v` for a rational `v`, when the image is rational (`n+1` a
/// perfect square).
pub fn rational_projection(n: usize, v: &RatVec) -> Result<Option<RatVec>> {
    let m = proj_matrix(n)?;
    let img = m.mul_vec(v)?;
    Ok(img.iter().map(|q| q.to_rat()).collect::<Option<Vec<Rat>>>().map(RatVec::new))
}

/// The hexagon as printed, `±(2/3)·π(2,−1,−1)`.
pub fn hexagon_as_printed() -> Vec<RatVec> {
    signed_perms(&[int(2), int(-1), int(-1)], &rat(2, 3))
}

/// The hexagon `±(1/3)·π(2,−1,−1) = {±ξ_i}`.
pub fn hexagon() -> Vec<RatVec> {
    signed_perms(&[int(2), int(-1), int(-1)], &rat(1, 3))
}

/// `(1/2)·π(1,1,−1,−1) ∪ ±(1/4)·π(3,−1,−1,−1)`.
pub fn rhombic_dodecahedron() -> Vec<RatVec> {
    let mut out: BTreeSet<RatVec> = signed_perms(&[int(1), int(1), int(-1), int(-1)], &rat(1, 2))
        .into_iter()
        .collect();
    out.extend(signed_perms(&[int(3), int(-1), int(-1), int(-1)], &rat(1, 4)));
    out.into_iter().collect()
}

/// `π(±1,0,0) ∪ (±1/2)^3`.
pub fn fcc_cell_vertices() -> Vec<RatVec> {
    let mut out = BTreeSet::new();
    for j in 0..3 {
        out.insert(RatVec::unit(3, j));
        out.insert(-&RatVec::unit(3, j));
    }
    out.extend(half_integer_corners(3).map(RatVec::new));
    out.into_iter().collect()
}

fn signed_perms(base: &[Rat], scale: &Rat) -> Vec<RatVec> {
    let mut out = BTreeSet::new();
    for p in crate::exact_linalg::Perm::all(base.len()) {
        let v = RatVec::new(p.apply(base)).scale(scale);
        out.insert(-&v);
        out.insert(v);
    }
    out.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linalg::Perm;

    #[test]
    fn pyramidal_cube_counts() {
        for m in 2..7 {
            let c = pyramidal_cube(m, &vec![0; m]).unwrap();
            assert_eq!(c.vrep.as_ref().unwrap().len(), (1 << m) + 2 * m);
            assert_eq!(c.hrep.as_ref().unwrap().len(), 2 * m * (m - 1));
            for v in c.vrep.as_ref().unwrap() {
                let d = v.norm_sq();
                assert!(d == Rat::one() || d == rat(m as i64, 4));
            }
        }
        assert!(matches!(pyramidal_cube(3, &[1, 0, 0]), Err(Error::ParityViolation(_))));
        assert!(pyramidal_cube(1, &[0]).is_err());
    }

    #[test]
    fn hrep_matches_vrep_exhaustively() {
        for m in [3, 4] {
            let c = pyramidal_cube(m, &vec![0; m]).unwrap();
            let check = c.check_representations().unwrap();
            assert!(check.consistent(m), "m = {m}: {check:?}");
            assert_eq!(c.hrep_vertices().unwrap(), c.vrep.clone().unwrap());
            let shifted = pyramidal_cube(m, &first_neighbor(m)).unwrap();
            assert_eq!(shifted.hrep_vertices().unwrap(), shifted.vrep.clone().unwrap());
        }
        let c5 = pyramidal_cube(5, &[0; 5]).unwrap();
        assert!(c5.check_representations().unwrap().consistent(5));
    }

    #[test]
    fn square_for_m2_has_only_apex_vertices() {
        let c = pyramidal_cube(2, &[0, 0]).unwrap();
        let v = c.hrep_vertices().unwrap();
        assert_eq!(v.len(), 4);
        assert!(c.check_representations().unwrap().violations.is_empty());
    }

    #[test]
    fn hexagon_section() {
        let s = diagonal_section(3, &[0, 0, 0]).unwrap();
        assert_eq!(s, hexagon());
        assert_eq!(s, voronoi_vertices(2).unwrap());
        assert_ne!(hexagon_as_printed(), hexagon());
    }

    #[test]
    fn rhombic_dodecahedron_section() {
        let s = diagonal_section(4, &[0; 4]).unwrap();
        assert_eq!(s, rhombic_dodecahedron());
        assert_eq!(s, voronoi_vertices(3).unwrap());
        let img: BTreeSet<RatVec> = s
            .iter()
            .map(|v| rational_projection(3, v).unwrap().unwrap())
            .collect();
        assert_eq!(img.into_iter().collect::<Vec<_>>(), fcc_cell_vertices());
    }

    #[test]
    fn missed_plane_gives_empty_section() {
        let c = pyramidal_cube(3, &[0, 0, 0]).unwrap();
        let s = hyperplane_section(&c, &RatVec::ones(3), &int(10)).unwrap();
        assert!(s.vrep.unwrap().is_empty());
        let no_h = Polytope {
            ambient: 3,
            vrep: None,
            hrep: None,
        };
        assert!(matches!(
            hyperplane_section(&no_h, &RatVec::ones(3), &Rat::zero()),
            Err(Error::MissingHrep)
        ));
    }

    #[test]
    fn section_symmetry() {
        let s: BTreeSet<RatVec> = diagonal_section(4, &[0; 4]).unwrap().into_iter().collect();
        for p in Perm::all(4) {
            let img: BTreeSet<RatVec> = s.iter().map(|v| p.apply_vec(v)).collect();
            assert_eq!(img, s);
        }
        assert!(s.iter().all(|v| s.contains(&-v)));
    }

    #[test]
    fn equivalence_small() {
        for n in 1..4 {
            let r = section_equivalence_check(n).unwrap();
            assert!(r.equal && r.as_expected(), "{r:?}");
        }
        assert!(section_equivalence_check(0).is_err());
        assert!(section_equivalence_check(5).is_err());
    }

    #[test]
    fn five_dimensional_neighbor_overlaps() {
        let r = section_equivalence_check(4).unwrap();
        assert!(!r.equal && r.as_expected());
        assert_eq!(r.neighbor_rank, Some(4));
        let w = r.witness.unwrap();
        assert_eq!(w, RatVec::new(vec![rat(1, 2), rat(1, 2), rat(-1, 2), rat(-1, 2), rat(-1, 2)]));
        assert_eq!(w.sum(), rat(-1, 2));
    }

    #[test]
    fn rational_and_huge_coefficients_agree() {
        let c = pyramidal_cube(3, &[0, 0, 0]).unwrap();
        let scaled = Polytope {
            ambient: 3,
            vrep: None,
            hrep: Some(
                c.halfspaces()
                    .unwrap()
                    .iter()
                    .map(|h| HalfSpace {
                        normal: h.normal.scale(&rat(1, 3)),
                        offset: &h.offset * rat(1, 3),
                    })
                    .collect(),
            ),
        };
        assert_eq!(scaled.hrep_vertices().unwrap(), c.vrep.clone().unwrap());
        let big = int(1) * Rat::from_integer(BigInt::from(10).pow(40));
        let huge = Polytope {
            ambient: 3,
            vrep: None,
            hrep: Some(
                c.halfspaces()
                    .unwrap()
                    .iter()
                    .map(|h| HalfSpace {
                        normal: h.normal.scale(&big),
                        offset: &h.offset * &big,
                    })
                    .collect(),
            ),
        };
        assert_eq!(huge.hrep_vertices().unwrap(), c.vrep.clone().unwrap());
    }

    #[test]
    fn clearance_values() {
        let expect = [rat(1, 1), rat(1, 2), rat(0, 1), rat(-1, 2), rat(-1, 1), rat(-3, 2)];
        for n in 1..7 {
            let r = neighbor_cell_clearance(n).unwrap();
            assert_eq!(r.min, expect[n - 1], "n = {n}");
            assert_eq!(r.cube_min, rat(3 - n as i64, 2));
            assert_eq!(r.apex_min, Rat::one());
        }
        let r3 = neighbor_cell_clearance(3).unwrap();
        assert_eq!(r3.sign(), 0);
        assert_eq!(
            r3.minimizers,
            vec![RatVec::new(vec![rat(1, 2), rat(1, 2), rat(-1, 2), rat(-1, 2)])]
        );
        assert_eq!(neighbor_cell_clearance(2).unwrap().sign(), 1);
        assert_eq!(neighbor_cell_clearance(4).unwrap().sign(), -1);
    }

    #[test]
    fn affine_ranks() {
        assert_eq!(affine_rank(&[]), 0);
        assert_eq!(affine_rank(&[RatVec::from_ints(&[1, 2])]), 0);
        assert_eq!(affine_rank(&hexagon()), 2);
        assert_eq!(affine_rank(&rhombic_dodecahedron()), 3);
    }
}
