use std::fmt;

use num_traits::{One, Zero};

use super::{Rat, RatMat, RatVec};
use crate::error::{Error, Result};

/// A permutation of `{0, .., m-1}`.
///
/// `map[i] = σ(i)` and the associated permutation matrix `P` sends `e_i` to
/// `e_σ(i)`, so `(P x)[σ(i)] = x[i]`. Composition follows matrix
/// multiplication: `a.compose(&b)` is the matrix `A·B`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    map: Vec<usize>,
}

impl Perm {
    pub fn identity(m: usize) -> Self {
        Perm {
            map: (0..m).collect(),
        }
    }

    /// Builds from 0-based images, rejecting anything that is not a bijection.
    pub fn from_images(map: Vec<usize>) -> Result<Self> {
        let m = map.len();
        let mut seen = vec![false; m];
        for &x in &map {
            if x >= m || seen[x] {
                return Err(Error::InvalidArgument(format!(
                    "{map:?} is not a permutation of 0..{m}"
                )));
            }
            seen[x] = true;
        }
        Ok(Perm { map })
    }

    /// Row exchange `Π_{i↔j}` (0-based).
    pub fn transposition(m: usize, i: usize, j: usize) -> Self {
        let mut p = Self::identity(m);
        p.map.swap(i, j);
        p
    }

    /// Stable descending sort order of `values`: `values[σ(0)] ≥ values[σ(1)] ≥ …`,
    /// ties kept in index order.
    pub fn sorting_descending(values: &[Rat]) -> Self {
        let mut idx: Vec<usize> = (0..values.len()).collect();
        idx.sort_by(|&a, &b| values[b].cmp(&values[a]));
        Perm { map: idx }
    }

    /// All `m!` permutations in lexicographic order of their image lists.
    pub fn all(m: usize) -> Vec<Perm> {
        let mut cur: Vec<usize> = (0..m).collect();
        let mut out = vec![Perm { map: cur.clone() }];
        while next_permutation(&mut cur) {
            out.push(Perm { map: cur.clone() });
        }
        out
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn image(&self, i: usize) -> usize {
        self.map[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.map
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.map.iter().map(|x| x + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.len(), other.len(), "composing permutations of different degree");
        Perm {
            map: other.map.iter().map(|&x| self.map[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.len()];
        for (i, &x) in self.map.iter().enumerate() {
            inv[x] = i;
        }
        Perm { map: inv }
    }

    pub fn pow(&self, k: usize) -> Perm {
        (0..k).fold(Perm::identity(self.len()), |acc, _| acc.compose(self))
    }

    /// Smallest `k ≥ 1` with `self^k = id`.
    pub fn order(&self) -> usize {
        let mut k = 1;
        let mut p = self.clone();
        while !p.is_identity() {
            p = p.compose(self);
            k += 1;
        }
        k
    }

    /// `P x` for a slice.
    pub fn apply<T: Clone>(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.len(), "permutation degree does not match vector length");
        let mut out = v.to_vec();
        for (i, x) in v.iter().enumerate() {
            out[self.map[i]] = x.clone();
        }
        out
    }

    pub fn apply_vec(&self, v: &RatVec) -> RatVec {
        RatVec::new(self.apply(v.as_slice()))
    }

    /// Block-diagonal extension `diag(P, I_extra)`.
    pub fn extend(&self, extra: usize) -> Perm {
        let mut map = self.map.clone();
        map.extend(self.len()..self.len() + extra);
        Perm { map }
    }

    pub fn to_matrix(&self) -> RatMat {
        let m = self.len();
        RatMat::from_fn(m, m, |r, c| if self.map[c] == r { Rat::one() } else { Rat::zero() })
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.one_based().iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let Some(i) = (0..v.len() - 1).rev().find(|&i| v[i] < v[i + 1]) else {
        return false;
    };
    let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).expect("successor exists");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// Circular shift `Γ_m^(j)`: the rows of `I_m` shifted downward by `j`, so
/// `(Γ x)[k] = x[k - j mod m]`. Negative and oversized `j` are reduced mod `m`.
pub fn shift_matrix(m: usize, j: i64) -> Perm {
    assert!(m >= 1, "shift_matrix needs m >= 1");
    let s = j.rem_euclid(m as i64) as usize;
    Perm {
        map: (0..m).map(|i| (i + s) % m).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linalg::int;
    use proptest::prelude::*;

    #[test]
    fn shift_examples() {
        assert!(shift_matrix(3, 0).is_identity());
        let g = shift_matrix(3, 1);
        let x = RatVec::from_ints(&[1, 2, 3]);
        assert_eq!(g.apply_vec(&x), RatVec::from_ints(&[3, 1, 2]));
        // rows [e_3ᵀ; e_1ᵀ; e_2ᵀ]
        let m = g.to_matrix();
        assert_eq!(m.row(0), RatVec::unit(3, 2));
        assert_eq!(m.row(1), RatVec::unit(3, 0));
        assert_eq!(m.row(2), RatVec::unit(3, 1));
        assert!(shift_matrix(4, 3).compose(&shift_matrix(4, 1)).is_identity());
        assert_eq!(shift_matrix(5, -1), shift_matrix(5, 4));
    }

    #[test]
    fn matrix_agrees_with_apply() {
        for p in Perm::all(4) {
            let x = RatVec::from_ints(&[5, -2, 7, 1]);
            assert_eq!(p.to_matrix().mul_vec(&x).unwrap(), p.apply_vec(&x));
        }
    }

    #[test]
    fn all_counts_and_is_sorted() {
        let all = Perm::all(4);
        assert_eq!(all.len(), 24);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(Perm::all(1).len(), 1);
    }

    #[test]
    fn from_images_rejects_non_bijection() {
        assert!(Perm::from_images(vec![0, 0, 1]).is_err());
        assert!(Perm::from_images(vec![0, 3, 1]).is_err());
        assert!(Perm::from_images(vec![2, 0, 1]).is_ok());
    }

    #[test]
    fn transposition_identity() {
        let t12 = Perm::transposition(3, 0, 1);
        let t23 = Perm::transposition(3, 1, 2);
        let t13 = Perm::transposition(3, 0, 2);
        assert_eq!(t12.compose(&t23).compose(&t12), t13);
    }

    #[test]
    fn stable_sort_order() {
        let v = [int(1), int(3), int(1), int(2)];
        let p = Perm::sorting_descending(&v);
        assert_eq!(p.images(), &[1, 3, 0, 2]);
    }

    proptest! {
        #[test]
        fn shift_is_one_hot_and_has_order_m(m in 1usize..12, j in -30i64..30) {
            let mat = shift_matrix(m, j).to_matrix();
            for r in 0..m {
                let row_ones = (0..m).filter(|&c| mat[(r, c)] == int(1)).count();
                let col_ones = (0..m).filter(|&c| mat[(c, r)] == int(1)).count();
                prop_assert_eq!(row_ones, 1);
                prop_assert_eq!(col_ones, 1);
            }
            prop_assert_eq!(shift_matrix(m, 1).order(), m);
        }

        #[test]
        fn shift_group_closure(m in 1usize..10, a in -20i64..20, b in -20i64..20) {
            prop_assert_eq!(shift_matrix(m, a).compose(&shift_matrix(m, b)), shift_matrix(m, a + b));
        }

        #[test]
        fn permutation_matrix_is_orthogonal(images in Just(()).prop_flat_map(|_| (1usize..7).prop_flat_map(|m| Just((0..m).collect::<Vec<_>>()).prop_shuffle()))) {
            let p = Perm::from_images(images).unwrap();
            let m = p.to_matrix();
            prop_assert_eq!(m.matmul(&m.transpose()).unwrap(), RatMat::identity(p.len()));
            prop_assert_eq!(p.compose(&p.inverse()), Perm::identity(p.len()));
        }
    }
}
