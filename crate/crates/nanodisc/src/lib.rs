//! Exact construction and certification of fullerene nanodiscs.
//!
//! A nanodisc is built in two steps: two balls of the infinite 6-regular
//! planar triangulation are glued along their boundary hexagons with a
//! cyclic twist `t`, giving a triangulation of the sphere with twelve
//! degree-5 vertices ([`surface::glue`]); its planar dual is a cubic
//! bridgeless plane graph with twelve pentagonal faces, i.e. a fullerene
//! ([`surface::dualize`]). The [`metrics`] module computes exact BFS
//! distances, diameters with witness pairs and the latitude structure of
//! the glued sphere; [`verify`] turns the structural and diameter claims
//! about the family into machine-checked [`verify::Certificate`]s,
//! including the scan that locates the smallest family member whose
//! diameter falls below the conjectured floor `⌊√(5n/3)⌋ − 1`.
//!
//! All-sources BFS sweeps and the certificate scan run data-parallel via
//! rayon when the default `parallel` feature is enabled; disabling it
//! leaves a dependency-free sequential build with identical output.

#![forbid(unsafe_code)]

pub mod dot;
pub mod embed;
pub mod graph6;
pub mod lattice;
pub mod metrics;
pub mod surface;
pub mod verify;

/// Dense vertex identifier. Every graph in this crate indexes vertices
/// `0..n` and stores adjacency as per-vertex neighbor lists.
pub type VertexId = u32;

/// Read-only view of an undirected graph on vertices `0..vertex_count()`.
///
/// For embedded graphs the neighbor order is the rotation system
/// (counterclockwise cyclic order); plain graphs may use any order.
pub trait Graph {
    fn vertex_count(&self) -> usize;
    fn neighbors(&self, v: VertexId) -> &[VertexId];

    fn degree(&self, v: VertexId) -> usize {
        self.neighbors(v).len()
    }

    /// Number of undirected edges (half the sum of degrees).
    fn edge_count(&self) -> usize {
        (0..self.vertex_count() as VertexId)
            .map(|v| self.degree(v))
            .sum::<usize>()
            / 2
    }
}

impl Graph for Vec<Vec<VertexId>> {
    fn vertex_count(&self) -> usize {
        self.len()
    }

    fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self[v as usize]
    }
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("radius must be at least {min}, got {got}")]
    InvalidRadius { min: u32, got: u32 },
    #[error("twist must satisfy 1 <= t <= r-1 (r = {r}), got t = {t}")]
    InvalidTwist { r: u32, t: u32 },
    #[error("patches have different radii: {north} and {south}")]
    RadiusMismatch { north: u32, south: u32 },
    #[error("vertex {vertex} is unreachable from vertex {start}")]
    Disconnected { start: VertexId, vertex: VertexId },
    #[error("rotation system is malformed at vertex {vertex}: {reason}")]
    MalformedRotation { vertex: VertexId, reason: String },
    #[error("face traversal does not partition the darts (dart {from}->{to} revisited)")]
    DartPartition { from: VertexId, to: VertexId },
    #[error("complex is not a valid sphere triangulation: {0}")]
    InvalidTriangulation(String),
    #[error("not a simple path: {0}")]
    NotAPath(String),
    #[error("graph6: graph too large for the format (n = {0})")]
    Graph6TooLarge(u64),
    #[error("graph6: loops and parallel edges cannot be encoded")]
    Graph6NotSimple,
    #[error("graph6: malformed size prefix")]
    Graph6BadHeader,
    #[error("graph6: byte {value} at offset {offset} outside printable range 63..=126")]
    Graph6NonPrintable { offset: usize, value: u8 },
    #[error("graph6: input truncated, expected {expected} data bytes, found {found}")]
    Graph6Truncated { expected: usize, found: usize },
    #[error("graph6: {extra} trailing byte(s) after the encoded graph")]
    Graph6TrailingGarbage { extra: usize },
    #[error("graph6: nonzero padding bits in final data byte")]
    Graph6BadPadding,
    #[error("cannot recover a plane embedding: {0}")]
    Unembeddable(String),
}

pub type Result<T> = std::result::Result<T, Error>;
