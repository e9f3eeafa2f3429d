use num_traits::{Signed, Zero};

use super::{factorial, gram_volume_sq, Rat, RatMat, RatVec, Solution};
use crate::error::{Error, Result};

/// A k-simplex given by k+1 affinely independent points of some ambient
/// space of dimension ≥ k.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Simplex {
    vertices: Vec<RatVec>,
}

impl Simplex {
    pub fn new(vertices: Vec<RatVec>) -> Result<Self> {
        let Some(first) = vertices.first() else {
            return Err(Error::InvalidArgument("a simplex needs at least one vertex".into()));
        };
        let ambient = first.len();
        if let Some(bad) = vertices.iter().find(|v| v.len() != ambient) {
            return Err(Error::DimensionMismatch {
                expected: ambient,
                found: bad.len(),
            });
        }
        let s = Simplex { vertices };
        if s.dim() > 0 && s.edge_matrix().rank() != s.dim() {
            return Err(Error::Singular("simplex vertices are affinely dependent".into()));
        }
        Ok(s)
    }

    /// For constructions whose vertices are affinely independent by design.
    pub(crate) fn from_vertices_unchecked(vertices: Vec<RatVec>) -> Self {
        debug_assert!(!vertices.is_empty());
        Simplex { vertices }
    }

    pub fn vertices(&self) -> &[RatVec] {
        &self.vertices
    }

    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn ambient(&self) -> usize {
        self.vertices[0].len()
    }

    /// Columns `v_i − v_0`, `i = 1..=k`.
    pub fn edge_matrix(&self) -> RatMat {
        let v0 = &self.vertices[0];
        let cols: Vec<RatVec> = self.vertices[1..].iter().map(|v| v - v0).collect();
        if cols.is_empty() {
            return RatMat::zeros(self.ambient(), 0);
        }
        RatMat::from_columns(&cols).expect("vertices share a dimension")
    }

    /// Squared k-volume: `det(DᵀD) / (k!)²`.
    pub fn volume_sq(&self) -> Rat {
        let k = factorial(self.dim());
        gram_volume_sq(&self.edge_matrix()) / Rat::from_integer(&k * &k)
    }

    /// Volume of a full-dimensional simplex, `|det D| / k!`.
    pub fn volume(&self) -> Result<Rat> {
        let det = self.edge_matrix().det()?;
        Ok(det.abs() / Rat::from_integer(factorial(self.dim())))
    }

    /// Barycentric coordinates `(λ_0, …, λ_k)` of `x`, or `None` when `x` is
    /// off the affine hull.
    pub fn barycentric(&self, x: &RatVec) -> Option<Vec<Rat>> {
        let rhs = x - &self.vertices[0];
        let lambda = match self.edge_matrix().solve(&rhs).ok()? {
            Solution::Unique(l) => l,
            Solution::Inconsistent | Solution::Underdetermined => return None,
        };
        let rest: Rat = lambda.sum();
        let mut out = vec![Rat::from_integer(1.into()) - rest];
        out.extend(lambda.into_vec());
        Some(out)
    }

    /// Closed-set membership by an exact barycentric solve.
    pub fn contains(&self, x: &RatVec) -> bool {
        self.barycentric(x)
            .is_some_and(|l| l.iter().all(|c| !c.is_negative()))
    }

    /// Membership in the relative interior.
    pub fn contains_strictly(&self, x: &RatVec) -> bool {
        self.barycentric(x)
            .is_some_and(|l| l.iter().all(|c| c.is_positive()))
    }

    pub fn has_vertex(&self, v: &RatVec) -> bool {
        self.vertices.contains(v)
    }

    pub fn centroid(&self) -> RatVec {
        let k = Rat::from_integer((self.vertices.len() as i64).into());
        let mut acc = RatVec::zeros(self.ambient());
        for v in &self.vertices {
            acc = &acc + v;
        }
        acc.scale(&(Rat::from_integer(1.into()) / k))
    }

    pub fn is_degenerate(&self) -> bool {
        gram_volume_sq(&self.edge_matrix()).is_zero()
    }
}
