//! Seeded random rationals for the randomized cross-checks.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exact_linalg::{Rat, RatVec};
use crate::lattice::xi_combination;

/// Denominator bound for sampled rationals.
pub const MAX_DENOMINATOR: i64 = 1000;

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform-ish rational in `[lo, hi]` with denominator at most `max_den`.
pub fn random_rat<R: Rng>(rng: &mut R, lo: &Rat, hi: &Rat, max_den: i64) -> Rat {
    let den = rng.random_range(1..=max_den);
    let d = Rat::from_integer(BigInt::from(den));
    let lo_n = (lo * &d).ceil().to_integer();
    let hi_n = (hi * &d).floor().to_integer();
    let lo_i: i64 = lo_n.try_into().expect("sample bounds fit in i64");
    let hi_i: i64 = hi_n.try_into().expect("sample bounds fit in i64");
    let num = if lo_i >= hi_i { lo_i } else { rng.random_range(lo_i..=hi_i) };
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn random_vec<R: Rng>(rng: &mut R, len: usize, lo: &Rat, hi: &Rat) -> RatVec {
    (0..len).map(|_| random_rat(rng, lo, hi, MAX_DENOMINATOR)).collect()
}

/// A random point of `R^{n+1}` with coordinates in `[lo, hi]`, projected by
/// `Ξ` onto the plane `x·1 = 0`.
pub fn random_plane_point<R: Rng>(rng: &mut R, n: usize, lo: &Rat, hi: &Rat) -> RatVec {
    let raw = random_vec(rng, n + 1, lo, hi);
    xi_combination(raw.as_slice())
}
