use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("color count must be at least 1")]
    NoColors,
    #[error("vertex {vertex} holds color {color}, outside 1..={k}")]
    ColorOutOfRange { vertex: usize, color: usize, k: usize },
    #[error("coloring covers {found} vertices but the graph has {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("attacker count {a} exceeds vertex count {n}")]
    TooManyAttackers { a: usize, n: usize },
    #[error("vertex {0} already holds every color")]
    VertexHoldsAllColors(usize),
    #[error("argument must be a positive integer")]
    NotPositive,
    #[error("color count {0} is too small; at least 2 colors are required")]
    TooFewColors(u64),
    #[error("failure count m must be at least 1")]
    NoFailures,
    #[error("(1,{m},{n}) is not realizable: n must exceed 2+m+sqrt(4m+1)")]
    Infeasible { m: u64, n: u64 },
    #[error("oracle search is capped at {cap} vertices, got {n}")]
    SearchTooLarge { n: usize, cap: usize },
    #[error("graph has no vertices")]
    EmptyGraph,
}
