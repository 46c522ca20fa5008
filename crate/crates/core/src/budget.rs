//! Resource caps shared by the enumerating algorithms.

use serde::Serialize;

/// Every enumeration in the crate fails with [`crate::Error::Budget`] instead of
/// truncating silently once one of these caps is reached.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Budgets {
    /// Largest Weyl orbit generated.
    pub orbit: usize,
    /// Largest weight set of a representation.
    pub weights: usize,
    /// Subsets scanned by the critical-point and zero-witness searches.
    pub subsets: u64,
    /// Largest `W_λ` orbit used for fences and sweeps.
    pub stabilizer: usize,
    /// Largest ambient dimension accepted by double description.
    pub dd_dimension: usize,
    /// Largest intermediate ray list in double description.
    pub dd_rays: usize,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            orbit: 1_000_000,
            weights: 100_000,
            subsets: 10_000_000,
            stabilizer: 10_000,
            dd_dimension: 8,
            dd_rays: 200_000,
        }
    }
}

impl Budgets {
    /// Lowers every cap to at most `cap`, except the DD dimension.
    pub fn capped(mut self, cap: u64) -> Self {
        let c = usize::try_from(cap).unwrap_or(usize::MAX);
        self.orbit = self.orbit.min(c);
        self.weights = self.weights.min(c);
        self.subsets = self.subsets.min(cap);
        self.stabilizer = self.stabilizer.min(c);
        self.dd_rays = self.dd_rays.min(c);
        self
    }
}
