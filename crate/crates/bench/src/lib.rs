//! Fixed inputs shared by the benchmarks.

use ancell_core::sample::{random_plane_point, seeded_rng};
use ancell_core::{rat, RatVec};

/// `count` seeded points of the plane `x·1 = 0` with coordinates near `[-1, 1]`.
pub fn plane_points(n: usize, count: usize, seed: u64) -> Vec<RatVec> {
    let mut rng = seeded_rng(seed);
    (0..count)
        .map(|_| random_plane_point(&mut rng, n, &rat(-1, 1), &rat(1, 1)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn points_are_reproducible() {
        let a = plane_points(4, 10, 3);
        assert_eq!(a, plane_points(4, 10, 3));
        assert!(a.iter().all(|p| p.len() == 5 && p.sum() == rat(0, 1)));
    }
}
