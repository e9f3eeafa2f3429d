use num_traits::{One, Zero};

use super::{int, Perm, Rat, RatVec, Simplex};
use crate::error::{Error, Result};
use crate::limits::{check_cap, check_n, Limits};

/// Where a point of the unit cube falls in the Kuhn triangulation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KuhnLocation {
    /// `x[σ(0)] ≥ x[σ(1)] ≥ …`; the point lies in the closed simplex `Π_σ τ_0`.
    pub perm: Perm,
    /// Set when the point lies on the boundary of that simplex (a tie between
    /// sorted coordinates, or a coordinate at 0 or 1).
    pub boundary: bool,
}

fn kuhn_vertices(perm: &Perm, columns: &[RatVec]) -> Vec<RatVec> {
    let dim = columns[0].len();
    let mut acc = RatVec::zeros(dim);
    let mut out = vec![acc.clone()];
    for k in 0..perm.len() {
        acc = &acc + &columns[perm.image(k)];
        out.push(acc.clone());
    }
    out
}

/// The `n!` images `Π·τ_0` of `τ_0 = conv{(1^j, 0^{n−j})}` under the
/// symmetric group, in lexicographic permutation order.
pub fn kuhn_simplices(n: usize) -> Result<Vec<Simplex>> {
    kuhn_simplices_with_cap(n, Limits::default().kuhn)
}

pub fn kuhn_simplices_with_cap(n: usize, cap: usize) -> Result<Vec<Simplex>> {
    triangulate_parallelepiped_with_cap(&Rat::one(), &Rat::zero(), n, cap)
}

/// Locates `x ∈ [0,1]^n` by sorting its coordinates.
pub fn kuhn_locate(x: &RatVec) -> Result<KuhnLocation> {
    let zero = Rat::zero();
    let one = Rat::one();
    if x.iter().any(|c| *c < zero || *c > one) {
        return Err(Error::InvalidArgument(format!("{x} is outside the unit cube")));
    }
    let perm = Perm::sorting_descending(x.as_slice());
    let sorted: Vec<&Rat> = perm.images().iter().map(|&i| &x[i]).collect();
    let tie = sorted.windows(2).any(|w| w[0] == w[1]);
    let boundary = tie
        || sorted.first().is_some_and(|c| **c == one)
        || sorted.last().is_some_and(|c| **c == zero);
    Ok(KuhnLocation { perm, boundary })
}

/// Triangulates `A·[0,1]^n` for `A = αI_n + βJ_n` into the `n!` simplices
/// `conv{Σ_{i≤j} a_σ(i)}`; all of them contain the diagonal from `0` to
/// `Σ_j a_j`.
pub fn triangulate_parallelepiped(alpha: &Rat, beta: &Rat, n: usize) -> Result<Vec<Simplex>> {
    triangulate_parallelepiped_with_cap(alpha, beta, n, Limits::default().kuhn)
}

pub fn triangulate_parallelepiped_with_cap(
    alpha: &Rat,
    beta: &Rat,
    n: usize,
    cap: usize,
) -> Result<Vec<Simplex>> {
    check_n(n)?;
    check_cap("Kuhn triangulation", n, cap)?;
    if alpha.is_zero() {
        return Err(Error::Singular("αI + βJ needs α ≠ 0".into()));
    }
    if (alpha + beta * int(n as i64)).is_zero() {
        return Err(Error::Singular("αI + βJ needs α + nβ ≠ 0".into()));
    }
    let columns: Vec<RatVec> = (0..n)
        .map(|j| {
            (0..n)
                .map(|i| if i == j { alpha + beta } else { beta.clone() })
                .collect()
        })
        .collect();
    Perm::all(n)
        .iter()
        .map(|p| Simplex::new(kuhn_vertices(p, &columns)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linalg::rat;

    #[test]
    fn one_dimensional() {
        let s = kuhn_simplices(1).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].vertices(), &[RatVec::from_ints(&[0]), RatVec::from_ints(&[1])]);
    }

    #[test]
    fn three_cube() {
        let s = kuhn_simplices(3).unwrap();
        assert_eq!(s.len(), 6);
        for t in &s {
            assert_eq!(t.volume().unwrap(), rat(1, 6));
            assert!(t.has_vertex(&RatVec::zeros(3)));
            assert!(t.has_vertex(&RatVec::ones(3)));
        }
    }

    #[test]
    fn identity_matrix_matches_kuhn() {
        assert_eq!(
            triangulate_parallelepiped(&int(1), &int(0), 3).unwrap(),
            kuhn_simplices(3).unwrap()
        );
    }

    #[test]
    fn singular_parallelepiped() {
        assert!(matches!(
            triangulate_parallelepiped(&int(0), &int(1), 3),
            Err(Error::Singular(_))
        ));
        assert!(matches!(
            triangulate_parallelepiped(&int(3), &int(-1), 3),
            Err(Error::Singular(_))
        ));
    }

    #[test]
    fn cap_enforced() {
        assert!(matches!(
            kuhn_simplices(9),
            Err(Error::CapExceeded { n: 9, cap: 8, .. })
        ));
        assert!(kuhn_simplices(0).is_err());
    }

    #[test]
    fn locate_flags_boundary() {
        let loc = kuhn_locate(&RatVec::new(vec![rat(1, 3), rat(2, 3), rat(1, 2)])).unwrap();
        assert_eq!(loc.perm.images(), &[1, 2, 0]);
        assert!(!loc.boundary);
        let tied = kuhn_locate(&RatVec::new(vec![rat(1, 3), rat(1, 3), rat(1, 2)])).unwrap();
        assert!(tied.boundary);
        assert_eq!(tied.perm.images(), &[2, 0, 1]);
        assert!(kuhn_locate(&RatVec::new(vec![rat(3, 2), int(0)])).is_err());
    }
}
