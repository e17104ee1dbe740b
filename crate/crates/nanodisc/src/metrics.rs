//! Exact distances, diameters and the latitude structure of glued spheres.
//!
//! Everything here is exact: diameters come from an all-sources BFS sweep,
//! never from heuristics. With the `parallel` feature (default) the sweep
//! fans out over sources with rayon; the sequential fallback computes the
//! same values in the same deterministic tie-breaking order.

use std::collections::VecDeque;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::surface::SphereTriangulation;
use crate::{Error, Graph, Result, VertexId};

/// Single-source shortest path distances.
#[derive(Debug, Clone)]
pub struct DistanceRow {
    pub source: VertexId,
    pub dist: Vec<u32>,
}

/// Exact diameter together with the lexicographically smallest vertex pair
/// attaining it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiameterWitness {
    pub value: u32,
    pub pair: (VertexId, VertexId),
}

const UNVISITED: u32 = u32::MAX;

/// BFS distances with `u32::MAX` marking unreachable vertices.
pub(crate) fn bfs_raw<G: Graph + ?Sized>(g: &G, source: VertexId) -> Vec<u32> {
    let n = g.vertex_count();
    let mut dist = vec![UNVISITED; n];
    let mut queue = VecDeque::with_capacity(n);
    dist[source as usize] = 0;
    queue.push_back(source);
    while let Some(v) = queue.pop_front() {
        let d = dist[v as usize];
        for &w in g.neighbors(v) {
            if dist[w as usize] == UNVISITED {
                dist[w as usize] = d + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Exact single-source distances on a connected graph.
pub fn bfs<G: Graph + ?Sized>(g: &G, source: VertexId) -> Result<DistanceRow> {
    let dist = bfs_raw(g, source);
    if let Some(v) = dist.iter().position(|&d| d == UNVISITED) {
        return Err(Error::Disconnected {
            start: source,
            vertex: v as VertexId,
        });
    }
    Ok(DistanceRow { source, dist })
}

/// BFS distances plus the parent of every vertex in the search tree
/// (`parent[source] == source`). Neighbors are scanned in rotation order,
/// so the tree is deterministic.
pub fn bfs_tree<G: Graph + ?Sized>(g: &G, source: VertexId) -> Result<(DistanceRow, Vec<VertexId>)> {
    let n = g.vertex_count();
    let mut dist = vec![UNVISITED; n];
    let mut parent = vec![source; n];
    let mut queue = VecDeque::with_capacity(n);
    dist[source as usize] = 0;
    queue.push_back(source);
    while let Some(v) = queue.pop_front() {
        let d = dist[v as usize];
        for &w in g.neighbors(v) {
            if dist[w as usize] == UNVISITED {
                dist[w as usize] = d + 1;
                parent[w as usize] = v;
                queue.push_back(w);
            }
        }
    }
    if let Some(v) = dist.iter().position(|&d| d == UNVISITED) {
        return Err(Error::Disconnected {
            start: source,
            vertex: v as VertexId,
        });
    }
    Ok((DistanceRow { source, dist }, parent))
}

/// Eccentricity of `source` (errors on disconnected input).
fn eccentricity<G: Graph + ?Sized>(g: &G, source: VertexId) -> Result<u32> {
    let row = bfs(g, source)?;
    Ok(row.dist.into_iter().max().unwrap_or(0))
}

fn witness_from_source<G: Graph + ?Sized>(g: &G, a: VertexId, value: u32) -> Result<DiameterWitness> {
    let row = bfs(g, a)?;
    let b = row
        .dist
        .iter()
        .position(|&d| d == value)
        .expect("eccentricity witness") as VertexId;
    Ok(DiameterWitness { value, pair: (a, b) })
}

/// Exact diameter by BFS from every vertex, sequential path.
pub fn diameter_sequential<G: Graph + ?Sized>(g: &G) -> Result<DiameterWitness> {
    let n = g.vertex_count() as VertexId;
    let mut best = 0u32;
    let mut first_source = 0;
    for s in 0..n {
        let e = eccentricity(g, s)?;
        if e > best {
            best = e;
            first_source = s;
        }
    }
    // The smallest source attaining the diameter, paired with its smallest
    // partner, is the lexicographically smallest witness pair: both ends of
    // any attaining pair have full eccentricity.
    witness_from_source(g, first_source, best)
}

/// Exact diameter with the sweep fanned out over sources via rayon.
#[cfg(feature = "parallel")]
pub fn diameter_parallel<G: Graph + Sync + ?Sized>(g: &G) -> Result<DiameterWitness> {
    let n = g.vertex_count() as VertexId;
    let per_source: Vec<u32> = (0..n)
        .into_par_iter()
        .map(|s| eccentricity(g, s))
        .collect::<Result<_>>()?;
    let (first_source, &best) = per_source
        .iter()
        .enumerate()
        .max_by(|(i, a), (j, b)| a.cmp(b).then(j.cmp(i)))
        .expect("non-empty graph");
    witness_from_source(g, first_source as VertexId, best)
}

/// Exact diameter; parallel when the `parallel` feature is enabled.
pub fn diameter<G: Graph + Sync + ?Sized>(g: &G) -> Result<DiameterWitness> {
    #[cfg(feature = "parallel")]
    {
        diameter_parallel(g)
    }
    #[cfg(not(feature = "parallel"))]
    {
        diameter_sequential(g)
    }
}

/// All-sources distance table, row `s` = distances from `s`.
pub fn distance_table<G: Graph + Sync + ?Sized>(g: &G) -> Result<Vec<Vec<u32>>> {
    let n = g.vertex_count() as VertexId;
    #[cfg(feature = "parallel")]
    {
        (0..n)
            .into_par_iter()
            .map(|s| bfs(g, s).map(|r| r.dist))
            .collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).map(|s| bfs(g, s).map(|r| r.dist)).collect()
    }
}

/// Latitude of every vertex of a glued sphere: `r - dist(n, u)` in the
/// northern hemisphere, `-r + dist(s, u)` in the southern; the poles get
/// `r` and `-r`, the identified boundary gets `0`.
#[derive(Debug, Clone)]
pub struct LatitudeMap {
    pub radius: u32,
    pub phi: Vec<i32>,
}

impl LatitudeMap {
    /// Number of vertices per latitude, from `-r` up to `r`.
    pub fn histogram(&self) -> Vec<(i32, usize)> {
        let r = self.radius as i32;
        (-r..=r)
            .map(|lat| (lat, self.phi.iter().filter(|&&p| p == lat).count()))
            .collect()
    }
}

pub fn latitude(t: &SphereTriangulation) -> Result<LatitudeMap> {
    let r = t.r;
    let from_north = bfs(t, t.north)?.dist;
    let from_south = bfs(t, t.south)?.dist;
    let mut phi = Vec::with_capacity(t.vertex_count());
    for v in 0..t.vertex_count() {
        let dn = from_north[v];
        let ds = from_south[v];
        let northern = dn <= r;
        let southern = ds <= r;
        if northern && southern && (r as i32 - dn as i32) != (ds as i32 - r as i32) {
            return Err(Error::InvalidTriangulation(format!(
                "latitude branches disagree at vertex {v}: {} vs {}",
                r as i32 - dn as i32,
                ds as i32 - r as i32
            )));
        }
        if northern {
            phi.push(r as i32 - dn as i32);
        } else if southern {
            phi.push(ds as i32 - r as i32);
        } else {
            return Err(Error::InvalidTriangulation(format!(
                "vertex {v} is farther than r from both poles"
            )));
        }
    }
    Ok(LatitudeMap { radius: r, phi })
}

/// Vertices (poles excluded) lacking a neighbor one latitude up or one
/// latitude down. Empty output certifies that monotone pole-to-pole paths
/// of length `2r` exist through every vertex.
pub fn check_monotone_neighbors(t: &SphereTriangulation, lat: &LatitudeMap) -> Vec<VertexId> {
    let mut failures = Vec::new();
    for v in 0..t.vertex_count() as VertexId {
        if v == t.north || v == t.south {
            continue;
        }
        let phi = lat.phi[v as usize];
        let up = t.neighbors(v).iter().any(|&w| lat.phi[w as usize] == phi + 1);
        let down = t.neighbors(v).iter().any(|&w| lat.phi[w as usize] == phi - 1);
        if !(up && down) {
            failures.push(v);
        }
    }
    failures
}

/// Size of the edge cut around a simple path: the number of edges with
/// exactly one endpoint on the path.
pub fn path_cut_size<G: Graph + ?Sized>(g: &G, path: &[VertexId]) -> Result<usize> {
    if path.is_empty() {
        return Err(Error::NotAPath("empty vertex sequence".into()));
    }
    let mut on_path = vec![false; g.vertex_count()];
    for &v in path {
        if on_path[v as usize] {
            return Err(Error::NotAPath(format!("vertex {v} repeated")));
        }
        on_path[v as usize] = true;
    }
    for w in path.windows(2) {
        if !g.neighbors(w[0]).contains(&w[1]) {
            return Err(Error::NotAPath(format!(
                "consecutive vertices {} and {} are not adjacent",
                w[0], w[1]
            )));
        }
    }
    let mut cut = 0;
    for &v in path {
        cut += g
            .neighbors(v)
            .iter()
            .filter(|&&w| !on_path[w as usize])
            .count();
    }
    Ok(cut)
}
