use thiserror::Error;

/// Every failure the toolkit can report.
///
/// Each variant carries a stable machine-readable code (see [`Error::code`])
/// so the command-line front end can surface it without string matching.
#[derive(Debug, Error)]
pub enum Error {
    #[error("schema violation: {0}")]
    Schema(String),
    #[error("invalid rational literal `{0}`")]
    InvalidRational(String),
    #[error("duplicate vertex id `{0}`")]
    DuplicateVertexId(String),
    #[error("duplicate edge id `{0}`")]
    DuplicateEdgeId(String),
    #[error("vertices `{0}` and `{1}` share the same point")]
    DuplicatePoint(String, String),
    #[error("dangling endpoint: edge `{edge}` references missing vertex `{vertex}`")]
    DanglingEndpoint { edge: String, vertex: String },
    #[error("edge `{edge}` passes through vertex `{vertex}`")]
    EdgeThroughVertex { edge: String, vertex: String },
    #[error("edge `{0}` has two consecutive identical polyline points")]
    RepeatedPolylinePoint(String),
    #[error("edge `{0}` is a self-loop but the drawing is not a multigraph")]
    SelfLoop(String),
    #[error("edges `{0}` and `{1}` are parallel but the drawing is not a multigraph")]
    ParallelEdges(String, String),
    #[error("three or more edges pass through the crossing point {point}: {edges:?}")]
    TriplePoint { point: String, edges: Vec<String> },
    #[error("edges `{0}` and `{1}` overlap along a segment")]
    Overlap(String, String),
    #[error("edges `{a}` and `{b}` meet at the polyline bend point {point}")]
    BendContact { a: String, b: String, point: String },
    #[error("{what} has {actual} elements, above the limit of {limit}")]
    SizeGuard {
        what: &'static str,
        limit: usize,
        actual: usize,
    },
    #[error("invalid gap assignment: {0}")]
    InvalidAssignment(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("planarization needs a drawing without self-crossings (edge `{0}`)")]
    SelfCrossing(String),
    #[error("generator failed: {0}")]
    Generator(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::Schema(_) => "E_SCHEMA",
            Error::InvalidRational(_) => "E_RATIONAL",
            Error::DuplicateVertexId(_) => "E_DUP_VERTEX_ID",
            Error::DuplicateEdgeId(_) => "E_DUP_EDGE_ID",
            Error::DuplicatePoint(..) => "E_DUP_POINT",
            Error::DanglingEndpoint { .. } => "E_DANGLING",
            Error::EdgeThroughVertex { .. } => "E_THROUGH_VERTEX",
            Error::RepeatedPolylinePoint(_) => "E_REPEATED_POINT",
            Error::SelfLoop(_) => "E_SELF_LOOP",
            Error::ParallelEdges(..) => "E_PARALLEL",
            Error::TriplePoint { .. } => "E_TRIPLE_POINT",
            Error::Overlap(..) => "E_OVERLAP",
            Error::BendContact { .. } => "E_BEND_CONTACT",
            Error::SizeGuard { .. } => "E_GUARD",
            Error::InvalidAssignment(_) => "E_ASSIGNMENT",
            Error::InvalidParameter(_) => "E_PARAM",
            Error::SelfCrossing(_) => "E_SELF_CROSSING",
            Error::Generator(_) => "E_GENERATOR",
            Error::Io(_) => "E_IO",
            Error::Json(_) => "E_JSON",
        }
    }

    /// Process exit status used by the CLI.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Io(_) => 74,
            Error::SizeGuard { .. } => 3,
            Error::Generator(_) => 4,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
