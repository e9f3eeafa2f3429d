use crate::error::{Error, Result};

/// Enumeration caps. The defaults are the largest sizes that have been run
/// end to end; anything above them is unvalidated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Kuhn triangulation of the n-cube (`n!` simplices).
    pub kuhn: usize,
    /// `(n+1)!` simplex decomposition of the cell, `n!` simplices per rhombus.
    pub factorial: usize,
    /// `2^{n+1}` subset sums (vertex and cube-projection enumeration).
    pub subset: usize,
    /// Face lattice recursion.
    pub face_lattice: usize,
    /// Randomized cross-checks (membership, hull, clearance).
    pub sampling: usize,
    /// Ambient dimension for brute-force section vertex enumeration.
    pub section_ambient: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            kuhn: 8,
            factorial: 7,
            subset: 12,
            face_lattice: 8,
            sampling: 6,
            section_ambient: 5,
        }
    }
}

impl Limits {
    pub fn unbounded() -> Self {
        Limits {
            kuhn: usize::MAX,
            factorial: usize::MAX,
            subset: usize::MAX,
            face_lattice: usize::MAX,
            sampling: usize::MAX,
            section_ambient: usize::MAX,
        }
    }
}

pub(crate) fn check_cap(what: &'static str, n: usize, cap: usize) -> Result<()> {
    if n > cap {
        return Err(Error::CapExceeded { what, n, cap });
    }
    Ok(())
}

pub(crate) fn check_n(n: usize) -> Result<()> {
    if n < 1 {
        return Err(Error::InvalidArgument("dimension n must be at least 1".into()));
    }
    Ok(())
}
