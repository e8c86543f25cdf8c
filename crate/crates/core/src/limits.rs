/// Vertex budgets for the exponential parts of the engine.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Subset enumeration behind cut sets, dimension and unmixedness.
    pub max_enum_vertices: usize,
    /// Maximal clique enumeration.
    pub max_clique_vertices: usize,
    /// Brute-force minimal prime extraction.
    pub max_oracle_vertices: usize,
}

impl Limits {
    pub const DEFAULT_ENUM: usize = 24;
    pub const DEFAULT_CLIQUE: usize = 64;
    pub const DEFAULT_ORACLE: usize = 12;
    /// Subset enumeration keeps one byte per subset; no override may exceed this.
    pub const HARD_ENUM_CAP: usize = 32;
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_enum_vertices: Self::DEFAULT_ENUM,
            max_clique_vertices: Self::DEFAULT_CLIQUE,
            max_oracle_vertices: Self::DEFAULT_ORACLE,
        }
    }
}
