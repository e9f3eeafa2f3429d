//! The `A_n`, `A_n*`, `D_{n+1}` and `Z^n` lattices: generator and projection
//! matrices, membership, and the `A_n` closest-point decoder.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_linalg::{int, Perm, QuadExt, QuadMat, Rat, RatMat, RatVec};
use crate::limits::check_n;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum LatticeFamily {
    /// `A_n = Z^{n+1} ∩ {x·1 = 0}`.
    A,
    /// The dual `A_n*`, generated by the first n columns of `Ξ`.
    ADual,
    /// `D_{n+1}`: integer vectors of `R^{n+1}` with even coordinate sum.
    D,
    Z,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LatticeSpec {
    pub family: LatticeFamily,
    pub n: usize,
    pub ambient: usize,
}

impl LatticeSpec {
    pub fn new(family: LatticeFamily, n: usize) -> Result<Self> {
        check_n(n)?;
        let ambient = match family {
            LatticeFamily::A | LatticeFamily::ADual | LatticeFamily::D => n + 1,
            LatticeFamily::Z => n,
        };
        Ok(LatticeSpec { family, n, ambient })
    }

    pub fn a(n: usize) -> Result<Self> {
        Self::new(LatticeFamily::A, n)
    }

    /// `D_m` in `R^m`, i.e. the spec with parameter `m − 1`.
    pub fn d(m: usize) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidArgument("D_m needs m >= 2".into()));
        }
        Self::new(LatticeFamily::D, m - 1)
    }
}

/// An integer point of one of the lattices above.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint {
    coords: Vec<BigInt>,
    spec: LatticeSpec,
}

impl LatticePoint {
    pub fn new(spec: LatticeSpec, coords: Vec<BigInt>) -> Result<Self> {
        if coords.len() != spec.ambient {
            return Err(Error::DimensionMismatch {
                expected: spec.ambient,
                found: coords.len(),
            });
        }
        let sum: BigInt = coords.iter().sum();
        match spec.family {
            LatticeFamily::A | LatticeFamily::ADual if !sum.is_zero() => {
                return Err(Error::NotOnPlane(sum.to_string()))
            }
            LatticeFamily::D if sum.is_odd() => return Err(Error::ParityViolation(sum.to_string())),
            _ => {}
        }
        Ok(LatticePoint { coords, spec })
    }

    pub fn from_ints(spec: LatticeSpec, coords: &[i64]) -> Result<Self> {
        Self::new(spec, coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn origin(spec: LatticeSpec) -> Self {
        LatticePoint {
            coords: vec![BigInt::zero(); spec.ambient],
            spec,
        }
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn spec(&self) -> LatticeSpec {
        self.spec
    }

    pub fn is_origin(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn to_rat_vec(&self) -> RatVec {
        self.coords.iter().map(|c| Rat::from_integer(c.clone())).collect()
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// `G_{A_n}`: `(n+1)×n`, 1 on the diagonal and −1 on the subdiagonal. Its
/// columns are the simple roots `e_k − e_{k+1}`.
pub fn gen_matrix_a(n: usize) -> Result<RatMat> {
    check_n(n)?;
    Ok(RatMat::from_fn(n + 1, n, |r, c| {
        if r == c {
            int(1)
        } else if r == c + 1 {
            int(-1)
        } else {
            Rat::zero()
        }
    }))
}

/// Column `ξ_k = e_k − 1/(n+1)·1` of `Ξ` (0-based `k`).
pub fn xi_column(n: usize, k: usize) -> RatVec {
    let off = Rat::new(BigInt::from(-1), BigInt::from(n + 1));
    (0..=n)
        .map(|i| if i == k { &off + Rat::one() } else { off.clone() })
        .collect()
}

/// `Ξ = I_{n+1} − J_{n+1}/(n+1)`, the orthogonal projector onto `x·1 = 0`.
pub fn xi_matrix(n: usize) -> Result<RatMat> {
    check_n(n)?;
    let scale = Rat::new(BigInt::one(), BigInt::from(n + 1));
    RatMat::identity(n + 1).sub(&RatMat::ones(n + 1).scale(&scale))
}

/// `G_{A_n*} = [ξ_1 … ξ_n]`.
pub fn dual_gen_matrix(n: usize) -> Result<RatMat> {
    check_n(n)?;
    RatMat::from_columns(&(0..n).map(|k| xi_column(n, k)).collect::<Vec<_>>())
}

/// A basis of `D_m`: `−e_1 − e_2` followed by `e_k − e_{k+1}`.
pub fn gen_matrix_d(m: usize) -> Result<RatMat> {
    if m < 2 {
        return Err(Error::InvalidArgument("D_m needs m >= 2".into()));
    }
    Ok(RatMat::from_fn(m, m, |r, c| match c {
        0 if r < 2 => int(-1),
        0 => Rat::zero(),
        _ if r == c - 1 => int(1),
        _ if r == c => int(-1),
        _ => Rat::zero(),
    }))
}

/// `M_proj = (I_n − (1/n)(1 + 1/√(n+1))·J_n)·[−I_n | 1]`, an isometry from
/// the plane `x·1 = 0` onto `R^n`, with entries in `Q(√(n+1))`.
pub fn proj_matrix(n: usize) -> Result<QuadMat> {
    check_n(n)?;
    let d = (n + 1) as u64;
    let inv_n = Rat::new(BigInt::one(), BigInt::from(n));
    // c = (1/n)(1 + √d/d)
    let c = QuadExt::new(inv_n.clone(), &inv_n / int(d as i64), d);
    let left = QuadMat::from_rat(&RatMat::identity(n), d);
    let j = QuadMat::from_rat(&RatMat::ones(n), d);
    let mut a_data = Vec::with_capacity(n * n);
    for r in 0..n {
        for col in 0..n {
            a_data.push(left.get(r, col) - &(&c * j.get(r, col)));
        }
    }
    let a = QuadMat::new(n, n, d, a_data)?;
    let tail = RatMat::from_fn(n, n + 1, |r, col| {
        if col == n {
            int(1)
        } else if r == col {
            int(-1)
        } else {
            Rat::zero()
        }
    });
    a.mul_rat(&tail)
}

/// `Ξ` together with `M_proj` for one `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectionBundle {
    pub n: usize,
    pub xi: RatMat,
    pub mproj: QuadMat,
}

impl ProjectionBundle {
    pub fn new(n: usize) -> Result<Self> {
        Ok(ProjectionBundle {
            n,
            xi: xi_matrix(n)?,
            mproj: proj_matrix(n)?,
        })
    }

    /// `Ξ` symmetric, idempotent, `Ξ·1 = 0`; `M·Mᵀ = I_n`, `M·1 = 0`.
    pub fn invariants_hold(&self) -> bool {
        let n = self.n;
        let xi_ok = self.xi.is_symmetric()
            && self.xi.matmul(&self.xi).as_ref() == Ok(&self.xi)
            && self.xi.mul_vec(&RatVec::ones(n + 1)).is_ok_and(|v| v.is_zero());
        let mmt = self.mproj.matmul(&self.mproj.transpose());
        let orth = mmt.ok().and_then(|m| m.to_rat()) == Some(RatMat::identity(n));
        let kills_ones = self
            .mproj
            .mul_vec(&RatVec::ones(n + 1))
            .is_ok_and(|v| v.iter().all(QuadExt::is_zero));
        xi_ok && orth && kills_ones
    }
}

pub fn g_fcc() -> RatMat {
    RatMat::from_ints(3, 3, &[0, 1, 1, 1, 0, 1, 1, 1, 0]).expect("3x3")
}

pub fn g_bcc() -> RatMat {
    RatMat::from_ints(3, 3, &[-1, 1, 1, 1, -1, 1, 1, 1, -1])
        .expect("3x3")
        .scale(&Rat::new(BigInt::one(), BigInt::from(2)))
}

/// Whether two square generator matrices generate the same lattice, i.e.
/// `G1⁻¹·G2` is integral and unimodular.
pub fn lattices_equal(g1: &RatMat, g2: &RatMat) -> Result<bool> {
    if !g1.is_square() || !g2.is_square() {
        return Err(Error::InvalidArgument("generator matrices must be square".into()));
    }
    if g1.rows() != g2.rows() {
        return Err(Error::DimensionMismatch {
            expected: g1.rows(),
            found: g2.rows(),
        });
    }
    if g2.det()?.is_zero() {
        return Err(Error::Singular("second generator matrix is singular".into()));
    }
    let u = g1.inverse()?.matmul(g2)?;
    Ok(u.is_integral() && u.det()?.abs() == Rat::one())
}

/// Reflection of `x` across the hyperplane orthogonal to `e_i − e_j`.
pub fn reflect(x: &RatVec, i: usize, j: usize) -> RatVec {
    let root = &RatVec::unit(x.len(), i) - &RatVec::unit(x.len(), j);
    let coef = &x[i] - &x[j];
    x - &root.scale(&coef)
}

/// The reflection across `(e_i − e_j)^⊥` as the row exchange `Π_{i↔j}`
/// (0-based indices in `0..=n`).
pub fn reflection_as_permutation(i: usize, j: usize, n: usize) -> Result<Perm> {
    check_n(n)?;
    if i == j {
        return Err(Error::InvalidArgument("reflection needs i ≠ j".into()));
    }
    if i > n || j > n {
        return Err(Error::InvalidArgument(format!(
            "indices must lie in 0..={n}"
        )));
    }
    Ok(Perm::transposition(n + 1, i, j))
}

fn check_on_plane(n: usize, x: &RatVec) -> Result<()> {
    if x.len() != n + 1 {
        return Err(Error::DimensionMismatch {
            expected: n + 1,
            found: x.len(),
        });
    }
    let s = x.sum();
    if !s.is_zero() {
        return Err(Error::NotOnPlane(s.to_string()));
    }
    Ok(())
}

pub(crate) fn require_on_plane(n: usize, x: &RatVec) -> Result<()> {
    check_on_plane(n, x)
}

/// `Σ_g c_g ξ_g = c − (Σ c)/(n+1)·1` for a coefficient vector `c` of length `n+1`.
pub fn xi_combination(coeffs: &[Rat]) -> RatVec {
    let m = coeffs.len();
    let shift: Rat = coeffs.iter().sum::<Rat>() / int(m as i64);
    coeffs.iter().map(|c| c - &shift).collect()
}

/// Closest point of `A_n` to `x` (which must satisfy `x·1 = 0`).
///
/// Every minimizer rounds each coordinate to its floor or ceiling, and exactly
/// `k = Σ frac(x_i)` coordinates go up; those are the ones with the largest
/// fractional parts. Among equidistant minimizers the lexicographically
/// smallest is returned, so tied fractional parts round up at the highest
/// indices first.
pub fn closest_point_a(n: usize, x: &RatVec) -> Result<LatticePoint> {
    check_n(n)?;
    check_on_plane(n, x)?;
    let floors: Vec<BigInt> = x.iter().map(|c| c.floor().to_integer()).collect();
    let fracs: Vec<Rat> = x
        .iter()
        .zip(&floors)
        .map(|(c, f)| c - Rat::from_integer(f.clone()))
        .collect();
    let up: Rat = fracs.iter().sum();
    let k: usize = up
        .to_integer()
        .try_into()
        .expect("fractional parts of a zero-sum vector add up to a small integer");
    let mut order: Vec<usize> = (0..=n).collect();
    order.sort_by(|&a, &b| fracs[b].cmp(&fracs[a]).then(b.cmp(&a)));
    let mut coords = floors;
    for &i in order.iter().take(k) {
        coords[i] += 1;
    }
    LatticePoint::new(LatticeSpec::a(n)?, coords)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linalg::rat;

    #[test]
    fn generator_examples() {
        assert_eq!(gen_matrix_a(1).unwrap().column(0), RatVec::from_ints(&[1, -1]));
        assert_eq!(
            gen_matrix_a(2).unwrap(),
            RatMat::from_ints(3, 2, &[1, 0, -1, 1, 0, -1]).unwrap()
        );
        let g3 = gen_matrix_a(3).unwrap();
        for k in 0..3 {
            let root = &RatVec::unit(4, k) - &RatVec::unit(4, k + 1);
            assert_eq!(g3.column(k), root);
        }
        assert!(gen_matrix_a(0).is_err());
    }

    #[test]
    fn xi_example() {
        let xi = xi_matrix(2).unwrap();
        let expected = RatMat::from_ints(3, 3, &[2, -1, -1, -1, 2, -1, -1, -1, 2])
            .unwrap()
            .scale(&rat(1, 3));
        assert_eq!(xi, expected);
        for k in 0..3 {
            assert_eq!(xi.column(k), xi_column(2, k));
        }
    }

    #[test]
    fn xi_gram_values() {
        for n in 1..6 {
            for a in 0..=n {
                for b in 0..=n {
                    let g = xi_column(n, a).dot(&xi_column(n, b));
                    let want = if a == b {
                        rat(n as i64, n as i64 + 1)
                    } else {
                        rat(-1, n as i64 + 1)
                    };
                    assert_eq!(g, want);
                }
            }
        }
    }

    #[test]
    fn dual_generator_pairs_integrally() {
        let g = dual_gen_matrix(2).unwrap();
        assert_eq!(g.column(0), RatVec::new(vec![rat(2, 3), rat(-1, 3), rat(-1, 3)]));
        assert_eq!(g.column(1), RatVec::new(vec![rat(-1, 3), rat(2, 3), rat(-1, 3)]));
        for n in 1..7 {
            let pairing = gen_matrix_a(n)
                .unwrap()
                .transpose()
                .matmul(&dual_gen_matrix(n).unwrap())
                .unwrap();
            assert!(pairing.is_integral());
            assert_eq!(pairing.det().unwrap().abs(), int(1));
        }
    }

    #[test]
    fn proj_matrix_n3_is_rational() {
        let m = proj_matrix(3).unwrap().to_rat().expect("√4 is rational");
        let expected = RatMat::from_ints(3, 4, &[-1, 1, 1, -1, 1, -1, 1, -1, 1, 1, -1, -1])
            .unwrap()
            .scale(&rat(1, 2));
        assert_eq!(m, expected);
    }

    #[test]
    fn proj_matrix_n2_needs_sqrt3() {
        let m = proj_matrix(2).unwrap();
        assert!(m.to_rat().is_none());
        assert!((0..2).any(|r| (0..3).any(|c| !m.get(r, c).radical_part().is_zero())));
        let ones = m.mul_vec(&RatVec::ones(3)).unwrap();
        assert!(ones.iter().all(QuadExt::is_zero));
    }

    #[test]
    fn bundle_invariants() {
        for n in 1..9 {
            assert!(ProjectionBundle::new(n).unwrap().invariants_hold(), "n = {n}");
        }
    }

    #[test]
    fn fcc_and_bcc() {
        let m = proj_matrix(3).unwrap();
        let fcc = m.mul_rat(&gen_matrix_a(3).unwrap()).unwrap().to_rat().unwrap();
        assert_eq!(fcc, RatMat::from_ints(3, 3, &[-1, 0, 1, 1, -1, 1, 0, 1, 0]).unwrap());
        assert!(lattices_equal(&fcc, &g_fcc()).unwrap());
        let bcc = m.mul_rat(&dual_gen_matrix(3).unwrap()).unwrap().to_rat().unwrap();
        assert_eq!(bcc, g_bcc());
    }

    #[test]
    fn lattice_equality_cases() {
        let i3 = RatMat::identity(3);
        assert!(!lattices_equal(&i3, &i3.scale(&int(2))).unwrap());
        let u = RatMat::from_ints(3, 3, &[1, 2, 0, 0, 1, 0, 3, 1, 1]).unwrap();
        let g = g_fcc();
        assert!(lattices_equal(&g, &g.matmul(&u).unwrap()).unwrap());
        let singular = RatMat::from_ints(3, 3, &[1, 1, 0, 1, 1, 0, 0, 0, 1]).unwrap();
        assert!(matches!(lattices_equal(&singular, &g), Err(Error::Singular(_))));
        assert!(matches!(lattices_equal(&g, &singular), Err(Error::Singular(_))));
    }

    #[test]
    fn d_generator() {
        for m in 2..7 {
            let g = gen_matrix_d(m).unwrap();
            assert_eq!(g.det().unwrap().abs(), int(2));
            for c in g.columns() {
                assert!(c.sum().to_integer().is_even());
            }
        }
    }

    #[test]
    fn reflection_examples() {
        let x = RatVec::from_ints(&[1, 0, 0]);
        let p = reflection_as_permutation(0, 1, 2).unwrap();
        assert_eq!(reflect(&x, 0, 1), RatVec::from_ints(&[0, 1, 0]));
        assert_eq!(p.apply_vec(&x), reflect(&x, 0, 1));
        let on_mirror = RatVec::new(vec![rat(1, 2), rat(1, 2), int(-1)]);
        assert_eq!(reflect(&on_mirror, 0, 1), on_mirror);
        assert!(reflection_as_permutation(1, 1, 2).is_err());
        assert!(reflection_as_permutation(0, 3, 2).is_err());
    }

    #[test]
    fn lattice_point_invariants() {
        let a2 = LatticeSpec::a(2).unwrap();
        assert!(LatticePoint::from_ints(a2, &[1, -1, 0]).is_ok());
        assert!(matches!(
            LatticePoint::from_ints(a2, &[1, 1, 0]),
            Err(Error::NotOnPlane(_))
        ));
        let d3 = LatticeSpec::d(3).unwrap();
        assert_eq!(d3.ambient, 3);
        assert!(LatticePoint::from_ints(d3, &[1, 1, 0]).is_ok());
        assert!(matches!(
            LatticePoint::from_ints(d3, &[1, 0, 0]),
            Err(Error::ParityViolation(_))
        ));
    }

    #[test]
    fn closest_point_examples() {
        let zero = closest_point_a(2, &RatVec::zeros(3)).unwrap();
        assert!(zero.is_origin());
        // ξ_1 is equidistant from 0, e1−e2 and e1−e3; the tie-break picks 0
        assert!(closest_point_a(2, &xi_column(2, 0)).unwrap().is_origin());
        // (3/2, −1, −1/2) ties between (2,−1,−1) and (1,−1,0)
        let p = closest_point_a(2, &RatVec::new(vec![rat(3, 2), int(-1), rat(-1, 2)])).unwrap();
        assert_eq!(p.to_rat_vec(), RatVec::from_ints(&[1, -1, 0]));
        assert!(matches!(
            closest_point_a(2, &RatVec::from_ints(&[1, 0, 0])),
            Err(Error::NotOnPlane(_))
        ));
    }
}
