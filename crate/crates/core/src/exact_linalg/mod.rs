//! Exact scalars, vectors, matrices and permutations over the rationals, plus
//! the Kuhn triangulation of the unit cube.

mod kuhn;
mod matrix;
mod perm;
mod quad;
mod simplex;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};

pub use kuhn::{
    kuhn_locate, kuhn_simplices, kuhn_simplices_with_cap, triangulate_parallelepiped,
    triangulate_parallelepiped_with_cap, KuhnLocation,
};
pub use matrix::{RatMat, RatVec, Solution};
pub use perm::{shift_matrix, Perm};
pub use quad::{QuadExt, QuadMat};
pub use simplex::Simplex;

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rat = BigRational;

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parses `p`, `-p`, `p/q` or `-p/q`.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p, q),
        None => (s, "1"),
    };
    let num: BigInt = num.trim().parse().map_err(|_| Error::Parse(s.to_string()))?;
    let den: BigInt = den.trim().parse().map_err(|_| Error::Parse(s.to_string()))?;
    if den == BigInt::from(0) {
        return Err(Error::Parse(s.to_string()));
    }
    Ok(Rat::new(num, den))
}

/// Formats as `p/q`, or `p` when the denominator is one.
pub fn format_rat(r: &Rat) -> String {
    r.to_string()
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, k| acc * BigInt::from(k))
}

/// `det(MᵀM)`: the squared k-volume of the parallelepiped spanned by the
/// columns of `m`. Zero when the columns are dependent.
pub fn gram_volume_sq(m: &RatMat) -> Rat {
    m.transpose()
        .matmul(m)
        .and_then(|g| g.det())
        .expect("MᵀM is square")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rat("-2/6").unwrap(), rat(-1, 3));
        assert_eq!(parse_rat("5").unwrap(), int(5));
        assert_eq!(parse_rat(" 3/-9 ").unwrap(), rat(-1, 3));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("abc").is_err());
        assert_eq!(format_rat(&rat(4, -6)), "-2/3");
        assert_eq!(format_rat(&int(7)), "7");
    }

    #[test]
    fn gram_volume_examples() {
        assert_eq!(gram_volume_sq(&RatMat::identity(3)), int(1));
        let col = RatMat::from_columns(&[RatVec::from_ints(&[1, -1, 0])]).unwrap();
        assert_eq!(gram_volume_sq(&col), int(2));
        let dep = RatMat::from_columns(&[
            RatVec::from_ints(&[1, 2, 0]),
            RatVec::from_ints(&[2, 4, 0]),
        ])
        .unwrap();
        assert_eq!(gram_volume_sq(&dep), int(0));
    }

    #[test]
    fn gram_volume_of_first_two_xi_columns() {
        // xi_1, xi_2 for n = 2
        let m = RatMat::from_columns(&[
            RatVec::new(vec![rat(2, 3), rat(-1, 3), rat(-1, 3)]),
            RatVec::new(vec![rat(-1, 3), rat(2, 3), rat(-1, 3)]),
        ])
        .unwrap();
        let v = gram_volume_sq(&m);
        assert_eq!(v, rat(1, 3));
        assert_eq!(int(9) * v, int(3));
    }
}
