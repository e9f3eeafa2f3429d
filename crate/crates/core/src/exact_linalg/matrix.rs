use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{format_rat, int, parse_rat, Rat};
use crate::error::{Error, Result};

/// Dense exact vector. The length is fixed at construction.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RatVec(Vec<Rat>);

impl RatVec {
    pub fn new(entries: Vec<Rat>) -> Self {
        RatVec(entries)
    }

    pub fn zeros(len: usize) -> Self {
        RatVec(vec![Rat::zero(); len])
    }

    pub fn ones(len: usize) -> Self {
        RatVec(vec![Rat::one(); len])
    }

    /// Standard unit vector `e_i` (0-based index).
    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.0[i] = Rat::one();
        v
    }

    pub fn from_ints(values: &[i64]) -> Self {
        RatVec(values.iter().map(|&x| int(x)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[Rat] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Rat> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rat> {
        self.0.iter()
    }

    fn check_len(&self, other: &RatVec) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(())
    }

    pub fn try_dot(&self, other: &RatVec) -> Result<Rat> {
        self.check_len(other)?;
        Ok(self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum())
    }

    /// Panics on a length mismatch; use [`RatVec::try_dot`] for a checked version.
    pub fn dot(&self, other: &RatVec) -> Rat {
        self.try_dot(other).expect("dot product of vectors of different length")
    }

    pub fn sum(&self) -> Rat {
        self.0.iter().sum()
    }

    pub fn norm_sq(&self) -> Rat {
        self.dot(self)
    }

    pub fn scale(&self, s: &Rat) -> RatVec {
        RatVec(self.0.iter().map(|x| x * s).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn max_entry(&self) -> Option<&Rat> {
        self.0.iter().max()
    }

    pub fn min_entry(&self) -> Option<&Rat> {
        self.0.iter().min()
    }

    /// Drops the entry at `i`.
    pub fn without(&self, i: usize) -> RatVec {
        RatVec(
            self.0
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != i)
                .map(|(_, x)| x.clone())
                .collect(),
        )
    }

    pub fn to_f64(&self) -> Vec<f64> {
        use num_traits::ToPrimitive;
        self.0.iter().map(|x| x.to_f64().unwrap_or(f64::NAN)).collect()
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(format_rat).collect()
    }
}

impl Index<usize> for RatVec {
    type Output = Rat;
    fn index(&self, i: usize) -> &Rat {
        &self.0[i]
    }
}

impl FromIterator<Rat> for RatVec {
    fn from_iter<I: IntoIterator<Item = Rat>>(iter: I) -> Self {
        RatVec(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a RatVec {
    type Item = &'a Rat;
    type IntoIter = std::slice::Iter<'a, Rat>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl Add for &RatVec {
    type Output = RatVec;
    fn add(self, rhs: &RatVec) -> RatVec {
        self.check_len(rhs).expect("adding vectors of different length");
        RatVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &RatVec {
    type Output = RatVec;
    fn sub(self, rhs: &RatVec) -> RatVec {
        self.check_len(rhs).expect("subtracting vectors of different length");
        RatVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &RatVec {
    type Output = RatVec;
    fn neg(self) -> RatVec {
        RatVec(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for RatVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Serialized as an array of `"p/q"` strings so no precision is lost.
impl Serialize for RatVec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RatVec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(deserializer)?;
        raw.iter()
            .map(|s| parse_rat(s).map_err(D::Error::custom))
            .collect()
    }
}

/// Outcome of an exact linear solve `A x = b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    Unique(RatVec),
    /// Consistent, but `A` has dependent columns.
    Underdetermined,
    Inconsistent,
}

/// Dense exact matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatMat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RatMat {
    pub fn new(rows: usize, cols: usize, data: Vec<Rat>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: data.len(),
            });
        }
        Ok(RatMat { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMat {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rat::one();
        }
        m
    }

    /// The all-ones matrix `J_n = 1·1ᵀ`.
    pub fn ones(n: usize) -> Self {
        RatMat {
            rows: n,
            cols: n,
            data: vec![Rat::one(); n * n],
        }
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Rat) -> Self {
        let data = (0..rows * cols).map(|k| f(k / cols, k % cols)).collect();
        RatMat { rows, cols, data }
    }

    pub fn from_ints(rows: usize, cols: usize, values: &[i64]) -> Result<Self> {
        Self::new(rows, cols, values.iter().map(|&x| int(x)).collect())
    }

    pub fn from_rows(rows: &[RatVec]) -> Result<Self> {
        let cols = rows.first().map_or(0, RatVec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            data.extend(r.iter().cloned());
        }
        Ok(RatMat {
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn from_columns(cols: &[RatVec]) -> Result<Self> {
        Ok(Self::from_rows(cols)?.transpose())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rat {
        &self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> RatVec {
        RatVec::new(self.data[r * self.cols..(r + 1) * self.cols].to_vec())
    }

    pub fn column(&self, c: usize) -> RatVec {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn columns(&self) -> Vec<RatVec> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn select_columns(&self, idx: &[usize]) -> RatMat {
        let cols: Vec<RatVec> = idx.iter().map(|&c| self.column(c)).collect();
        if cols.is_empty() {
            return RatMat::zeros(self.rows, 0);
        }
        Self::from_columns(&cols).expect("columns share the row count")
    }

    pub fn transpose(&self) -> RatMat {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.get(r, c).clone());
            }
        }
        RatMat {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn matmul(&self, rhs: &RatMat) -> Result<RatMat> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: rhs.rows,
            });
        }
        let mut data = Vec::with_capacity(self.rows * rhs.cols);
        for r in 0..self.rows {
            for c in 0..rhs.cols {
                let mut acc = Rat::zero();
                for k in 0..self.cols {
                    let a = self.get(r, k);
                    if !a.is_zero() {
                        acc += a * rhs.get(k, c);
                    }
                }
                data.push(acc);
            }
        }
        Ok(RatMat {
            rows: self.rows,
            cols: rhs.cols,
            data,
        })
    }

    pub fn mul_vec(&self, v: &RatVec) -> Result<RatVec> {
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.get(r, c) * &v[c]).sum())
            .collect())
    }

    pub fn scale(&self, s: &Rat) -> RatMat {
        RatMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    fn zip_with(&self, rhs: &RatMat, f: impl Fn(&Rat, &Rat) -> Rat) -> Result<RatMat> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                found: rhs.rows * rhs.cols,
            });
        }
        Ok(RatMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn add(&self, rhs: &RatMat) -> Result<RatMat> {
        self.zip_with(rhs, |a, b| a + b)
    }

    pub fn sub(&self, rhs: &RatMat) -> Result<RatMat> {
        self.zip_with(rhs, |a, b| a - b)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(|x| x.is_integer())
    }

    /// Row-reduces in place. Returns the pivot columns, whether an odd number
    /// of row swaps happened, and the product of the pivots.
    fn eliminate(&mut self) -> (Vec<usize>, bool, Rat) {
        let mut pivots = Vec::new();
        let mut negate = false;
        let mut prod = Rat::one();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for c in 0..self.cols {
                    self.data.swap(p * self.cols + c, row * self.cols + c);
                }
                negate = !negate;
            }
            let pivot = self.get(row, col).clone();
            prod *= &pivot;
            for r in row + 1..self.rows {
                let f = self.get(r, col) / &pivot;
                if f.is_zero() {
                    continue;
                }
                for c in col..self.cols {
                    let d = &f * self.get(row, c);
                    self.data[r * self.cols + c] -= d;
                }
            }
            pivots.push(col);
            row += 1;
        }
        (pivots, negate, prod)
    }

    pub fn det(&self) -> Result<Rat> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: self.cols,
            });
        }
        let mut m = self.clone();
        let (pivots, negate, prod) = m.eliminate();
        if pivots.len() < self.rows {
            return Ok(Rat::zero());
        }
        Ok(if negate { -prod } else { prod })
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.eliminate().0.len()
    }

    /// Solves `self · x = b` exactly; `self` may be rectangular.
    pub fn solve(&self, b: &RatVec) -> Result<Solution> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: b.len(),
            });
        }
        let mut aug = RatMat::zeros(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.data[r * (self.cols + 1) + c] = self.get(r, c).clone();
            }
            aug.data[r * (self.cols + 1) + self.cols] = b[r].clone();
        }
        let (pivots, _, _) = aug.eliminate();
        if pivots.last() == Some(&self.cols) {
            return Ok(Solution::Inconsistent);
        }
        if pivots.len() < self.cols {
            return Ok(Solution::Underdetermined);
        }
        let w = self.cols + 1;
        let mut x = vec![Rat::zero(); self.cols];
        for (row, &col) in pivots.iter().enumerate().rev() {
            let mut acc = aug.data[row * w + self.cols].clone();
            for (a, xc) in aug.data[row * w + col + 1..row * w + self.cols].iter().zip(&x[col + 1..]) {
                acc -= a * xc;
            }
            x[col] = acc / &aug.data[row * w + col];
        }
        Ok(Solution::Unique(RatVec::new(x)))
    }

    pub fn inverse(&self) -> Result<RatMat> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: self.cols,
            });
        }
        let n = self.rows;
        let mut cols = Vec::with_capacity(n);
        for c in 0..n {
            match self.solve(&RatVec::unit(n, c))? {
                Solution::Unique(x) => cols.push(x),
                _ => return Err(Error::Singular("matrix is not invertible".into())),
            }
        }
        RatMat::from_columns(&cols)
    }

    pub fn max_abs(&self) -> Rat {
        self.data.iter().map(|x| x.abs()).max().unwrap_or_else(Rat::zero)
    }
}

impl Index<(usize, usize)> for RatMat {
    type Output = Rat;
    fn index(&self, (r, c): (usize, usize)) -> &Rat {
        self.get(r, c)
    }
}

impl fmt::Display for RatMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            writeln!(f, "{}", self.row(r))?;
        }
        Ok(())
    }
}
