use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate vertex label {0:?}")]
    DuplicateLabel(String),

    #[error("edge mentions unknown label {0:?}")]
    UnknownLabelInEdge(String),

    #[error("empty edge")]
    EmptyEdge,

    #[error("edge {{{contained}}} is contained in edge {{{container}}}; not an antichain")]
    NotAnAntichain { contained: String, container: String },

    #[error("self-loop at {0:?}")]
    SelfLoop(String),

    #[error("unknown vertex {0}")]
    UnknownVertex(String),

    #[error("label {0:?} is already in use")]
    LabelCollision(String),

    #[error("{what} needs {vertices} vertices but the budget is {budget} (raise {flag})")]
    ComplexityGuard {
        what: &'static str,
        vertices: usize,
        budget: usize,
        flag: &'static str,
    },

    #[error("prime descriptors belong to different vertex sets")]
    DescriptorMismatch,

    #[error("blocks do not reproduce the clutter: {0}")]
    BlocksDontCoverEdges(String),

    #[error("vertex {0:?} is not free on both sides of the gluing")]
    GlueVertexNotFree(String),

    #[error("clutters cannot be glued at {at:?}: {reason}")]
    InvalidGluing { at: String, reason: String },

    #[error("malformed clutter file: {0}")]
    Parse(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("could not place {wanted} edges after {attempts} attempts")]
    Unattainable { wanted: usize, attempts: usize },
}
