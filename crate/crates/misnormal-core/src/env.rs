/// Something that can tell the solvers their time budget ran out.
/// The core crate has no clock; the host supplies one.
pub trait Budget: Sync {
    fn is_exceeded(&self) -> bool;
}

/// No budget: run to completion.
#[derive(Debug, Clone, Copy, Default)]
pub struct Unlimited;

impl Budget for Unlimited {
    fn is_exceeded(&self) -> bool {
        false
    }
}

/// Caps and budget shared by the exhaustive operations.
#[derive(Clone, Copy)]
pub struct Env<'a> {
    /// Hard cap on product vertex counts.
    pub max_product_vertices: usize,
    /// Cap on vertex count for full automorphism search.
    pub max_automorphism_vertices: usize,
    /// Cap on a materialized set orbit or group closure.
    pub max_orbit: usize,
    /// Cap on the number of maximum independent sets collected.
    pub max_sets: usize,
    /// Cap on the number of independent subsets scanned by the
    /// imprimitivity search.
    pub max_subsets: u64,
    /// Wall-clock budget, checked periodically inside the solvers.
    pub budget: &'a dyn Budget,
}

impl Default for Env<'static> {
    fn default() -> Self {
        Env {
            max_product_vertices: crate::product::DEFAULT_PRODUCT_CAP,
            max_automorphism_vertices: 64,
            max_orbit: 1_000_000,
            max_sets: 100_000,
            max_subsets: 1 << 24,
            budget: &Unlimited,
        }
    }
}
