use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::{Signed, ToPrimitive, Zero};

use super::{Rat, RatMat};
use crate::error::{Error, Result};

/// An element `a + b·√d` of the quadratic extension `Q(√d)`.
///
/// When `d` is a perfect square the radical is folded into `a`, so `b = 0`
/// and the value compares equal to the plain rational it represents.
/// Binary operations require both operands to carry the same radicand.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadExt {
    a: Rat,
    b: Rat,
    d: u64,
}

fn perfect_sqrt(d: u64) -> Option<u64> {
    let r = d.sqrt();
    (r * r == d).then_some(r)
}

impl QuadExt {
    pub fn new(a: Rat, b: Rat, d: u64) -> Self {
        assert!(d >= 1, "radicand must be positive");
        match perfect_sqrt(d) {
            Some(r) => QuadExt {
                a: a + b * Rat::from_integer(BigInt::from(r)),
                b: Rat::zero(),
                d,
            },
            None => QuadExt { a, b, d },
        }
    }

    pub fn from_rat(a: Rat, d: u64) -> Self {
        Self::new(a, Rat::zero(), d)
    }

    pub fn zero(d: u64) -> Self {
        Self::from_rat(Rat::zero(), d)
    }

    /// `√d` itself.
    pub fn sqrt_d(d: u64) -> Self {
        Self::new(Rat::zero(), Rat::from_integer(BigInt::from(1)), d)
    }

    pub fn rational_part(&self) -> &Rat {
        &self.a
    }

    pub fn radical_part(&self) -> &Rat {
        &self.b
    }

    pub fn radicand(&self) -> u64 {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn to_rat(&self) -> Option<Rat> {
        self.b.is_zero().then(|| self.a.clone())
    }

    /// `a² − d·b²`, the product with the conjugate.
    pub fn norm(&self) -> Rat {
        &self.a * &self.a - Rat::from_integer(BigInt::from(self.d)) * &self.b * &self.b
    }

    pub fn conjugate(&self) -> Self {
        QuadExt {
            a: self.a.clone(),
            b: -&self.b,
            d: self.d,
        }
    }

    pub fn checked_div(&self, rhs: &QuadExt) -> Option<QuadExt> {
        self.check(rhs);
        let n = rhs.norm();
        if n.is_zero() {
            return None;
        }
        let num = self * &rhs.conjugate();
        Some(QuadExt {
            a: num.a / &n,
            b: num.b / &n,
            d: self.d,
        })
    }

    /// Exact sign: -1, 0 or 1.
    pub fn signum(&self) -> i32 {
        let sa = sign(&self.a);
        let sb = sign(&self.b);
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return if sa == 0 { sb } else { sa };
        }
        // opposite signs: compare a² with d·b²
        let a2 = &self.a * &self.a;
        let db2 = Rat::from_integer(BigInt::from(self.d)) * &self.b * &self.b;
        match a2.cmp(&db2) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }

    pub fn to_f64(&self) -> f64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        a + b * (self.d as f64).sqrt()
    }

    fn check(&self, rhs: &QuadExt) {
        assert_eq!(self.d, rhs.d, "mixing quadratic extensions with different radicands");
    }
}

fn sign(r: &Rat) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

impl PartialOrd for QuadExt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        if self.d != other.d {
            return None;
        }
        Some((self - other).signum().cmp(&0))
    }
}

impl Add for &QuadExt {
    type Output = QuadExt;
    fn add(self, rhs: &QuadExt) -> QuadExt {
        self.check(rhs);
        QuadExt {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
            d: self.d,
        }
    }
}

impl Sub for &QuadExt {
    type Output = QuadExt;
    fn sub(self, rhs: &QuadExt) -> QuadExt {
        self.check(rhs);
        QuadExt {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
            d: self.d,
        }
    }
}

impl Mul for &QuadExt {
    type Output = QuadExt;
    fn mul(self, rhs: &QuadExt) -> QuadExt {
        self.check(rhs);
        let d = Rat::from_integer(BigInt::from(self.d));
        QuadExt {
            a: &self.a * &rhs.a + d * &self.b * &rhs.b,
            b: &self.a * &rhs.b + &self.b * &rhs.a,
            d: self.d,
        }
    }
}

impl Mul<&Rat> for &QuadExt {
    type Output = QuadExt;
    fn mul(self, rhs: &Rat) -> QuadExt {
        QuadExt {
            a: &self.a * rhs,
            b: &self.b * rhs,
            d: self.d,
        }
    }
}

/// Panics on division by zero; see [`QuadExt::checked_div`].
impl Div for &QuadExt {
    type Output = QuadExt;
    fn div(self, rhs: &QuadExt) -> QuadExt {
        self.checked_div(rhs).expect("division by zero in Q(√d)")
    }
}

impl Neg for &QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt {
            a: -&self.a,
            b: -&self.b,
            d: self.d,
        }
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}√{}", self.b, self.d),
            (false, false) if self.b.is_negative() => {
                write!(f, "{} - {}√{}", self.a, -&self.b, self.d)
            }
            (false, false) => write!(f, "{} + {}√{}", self.a, self.b, self.d),
        }
    }
}

/// Dense matrix over `Q(√d)` with a fixed radicand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadMat {
    rows: usize,
    cols: usize,
    d: u64,
    data: Vec<QuadExt>,
}

impl QuadMat {
    pub fn new(rows: usize, cols: usize, d: u64, data: Vec<QuadExt>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: data.len(),
            });
        }
        if data.iter().any(|x| x.d != d) {
            return Err(Error::InvalidArgument("entries use different radicands".into()));
        }
        Ok(QuadMat { rows, cols, d, data })
    }

    pub fn from_rat(m: &RatMat, d: u64) -> Self {
        let data = (0..m.rows() * m.cols())
            .map(|k| QuadExt::from_rat(m.get(k / m.cols(), k % m.cols()).clone(), d))
            .collect();
        QuadMat {
            rows: m.rows(),
            cols: m.cols(),
            d,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn radicand(&self) -> u64 {
        self.d
    }

    pub fn get(&self, r: usize, c: usize) -> &QuadExt {
        &self.data[r * self.cols + c]
    }

    pub fn transpose(&self) -> QuadMat {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.get(r, c).clone());
            }
        }
        QuadMat {
            rows: self.cols,
            cols: self.rows,
            d: self.d,
            data,
        }
    }

    pub fn matmul(&self, rhs: &QuadMat) -> Result<QuadMat> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: rhs.rows,
            });
        }
        if self.d != rhs.d {
            return Err(Error::InvalidArgument("radicands differ".into()));
        }
        let mut data = Vec::with_capacity(self.rows * rhs.cols);
        for r in 0..self.rows {
            for c in 0..rhs.cols {
                let mut acc = QuadExt::zero(self.d);
                for k in 0..self.cols {
                    acc = &acc + &(self.get(r, k) * rhs.get(k, c));
                }
                data.push(acc);
            }
        }
        Ok(QuadMat {
            rows: self.rows,
            cols: rhs.cols,
            d: self.d,
            data,
        })
    }

    pub fn mul_rat(&self, rhs: &RatMat) -> Result<QuadMat> {
        self.matmul(&QuadMat::from_rat(rhs, self.d))
    }

    pub fn mul_vec(&self, v: &super::RatVec) -> Result<Vec<QuadExt>> {
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|r| {
                (0..self.cols).fold(QuadExt::zero(self.d), |acc, c| &acc + &(self.get(r, c) * &v[c]))
            })
            .collect())
    }

    /// Demotes to a rational matrix when every radical part vanishes.
    pub fn to_rat(&self) -> Option<RatMat> {
        let data: Option<Vec<Rat>> = self.data.iter().map(QuadExt::to_rat).collect();
        RatMat::new(self.rows, self.cols, data?).ok()
    }

    /// Exact determinant by cofactor-free elimination in `Q(√d)`.
    pub fn det(&self) -> Result<QuadExt> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: self.cols,
            });
        }
        let n = self.rows;
        let mut m = self.data.clone();
        let mut det = QuadExt::from_rat(Rat::from_integer(BigInt::from(1)), self.d);
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m[r * n + col].is_zero()) else {
                return Ok(QuadExt::zero(self.d));
            };
            if p != col {
                for c in 0..n {
                    m.swap(p * n + c, col * n + c);
                }
                det = -&det;
            }
            let pivot = m[col * n + col].clone();
            det = &det * &pivot;
            for r in col + 1..n {
                let f = &m[r * n + col] / &pivot;
                if f.is_zero() {
                    continue;
                }
                for c in col..n {
                    let d = &f * &m[col * n + c];
                    m[r * n + c] = &m[r * n + c] - &d;
                }
            }
        }
        Ok(det)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linalg::{int, rat};
    use proptest::prelude::*;

    #[test]
    fn perfect_square_folds() {
        let x = QuadExt::new(rat(1, 2), rat(1, 4), 4);
        assert_eq!(x.to_rat(), Some(int(1)));
        let y = QuadExt::new(rat(1, 2), rat(1, 4), 3);
        assert_eq!(y.to_rat(), None);
    }

    #[test]
    fn norm_identity() {
        let x = QuadExt::new(int(3), int(2), 5);
        let p = &x * &x.conjugate();
        assert_eq!(p.to_rat(), Some(int(9 - 20)));
        assert_eq!(x.norm(), int(-11));
    }

    #[test]
    fn sqrt_squares_to_d() {
        let s = QuadExt::sqrt_d(3);
        assert_eq!((&s * &s).to_rat(), Some(int(3)));
        let inv = &QuadExt::from_rat(int(1), 3) / &s;
        assert_eq!(inv, QuadExt::new(int(0), rat(1, 3), 3));
    }

    #[test]
    fn signs() {
        // 1 - √2 < 0, 3 - 2√2 > 0, 2 - √4 = 0
        assert_eq!(QuadExt::new(int(1), int(-1), 2).signum(), -1);
        assert_eq!(QuadExt::new(int(3), int(-2), 2).signum(), 1);
        assert_eq!(QuadExt::new(int(2), int(-1), 4).signum(), 0);
        assert_eq!(QuadExt::new(int(-3), int(2), 2).signum(), -1);
        assert!(QuadExt::sqrt_d(2) > QuadExt::from_rat(rat(7, 5), 2));
    }

    #[test]
    fn division_by_zero_is_none() {
        let z = QuadExt::zero(7);
        assert!(QuadExt::from_rat(int(1), 7).checked_div(&z).is_none());
    }

    #[test]
    fn determinant_in_extension() {
        // [[√2, 1], [1, √2]] has determinant 1
        let s = QuadExt::sqrt_d(2);
        let one = QuadExt::from_rat(int(1), 2);
        let m = QuadMat::new(2, 2, 2, vec![s.clone(), one.clone(), one, s]).unwrap();
        assert_eq!(m.det().unwrap().to_rat(), Some(int(1)));
    }

    fn small_rat() -> impl Strategy<Value = Rat> {
        (-20i64..20, 1i64..9).prop_map(|(p, q)| rat(p, q))
    }

    proptest! {
        #[test]
        fn field_ops_roundtrip(a in small_rat(), b in small_rat(), c in small_rat(), e in small_rat(), d in 2u64..12) {
            let x = QuadExt::new(a, b, d);
            let y = QuadExt::new(c, e, d);
            let prod = &x * &y;
            if !y.is_zero() {
                prop_assert_eq!(&(&prod / &y), &x);
            }
            prop_assert_eq!(&(&(&x + &y) - &y), &x);
            prop_assert_eq!((&x * &x.conjugate()).to_rat(), Some(x.norm()));
        }

        #[test]
        fn signum_matches_float(a in small_rat(), b in small_rat(), d in 2u64..30) {
            let x = QuadExt::new(a, b, d);
            let f = x.to_f64();
            if f.abs() > 1e-9 {
                prop_assert_eq!(x.signum(), if f > 0.0 { 1 } else { -1 });
            }
        }
    }
}
