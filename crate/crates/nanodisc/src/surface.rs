//! Gluing two lattice balls into a sphere triangulation and dualizing it
//! into a fullerene graph.
//!
//! The glued complex identifies boundary vertex `u_i` of the northern
//! patch with `v_{i+t}` of the southern one (indices modulo `6r`). The
//! southern triangles enter with reversed orientation, so the union
//! carries a single coherent orientation: every undirected edge is
//! traversed once in each direction over all oriented triangles. The
//! rotation system is rebuilt from that orientation and validated rather
//! than assumed.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::lattice::{AxialCoord, Patch};
use crate::{Error, Graph, Result, VertexId};

/// Which hemisphere chart a vertex came from, with its lattice coordinate
/// there. Used only for deterministic rendering layouts.
#[derive(Debug, Clone, Copy)]
pub struct ChartPoint {
    pub southern: bool,
    pub coord: AxialCoord,
}

/// The glued sphere triangulation: `6r² + 2` vertices, `18r²` edges,
/// `12r²` coherently oriented triangles, twelve vertices of degree 5 (the
/// patch corners) and the rest of degree 6.
#[derive(Debug, Clone)]
pub struct SphereTriangulation {
    pub r: u32,
    pub twist: u32,
    pub north: VertexId,
    pub south: VertexId,
    /// Rotation system: neighbors in cyclic order, counterclockwise in the
    /// northern chart.
    pub adjacency: Vec<Vec<VertexId>>,
    /// Triangles with a globally coherent orientation.
    pub triangles: Vec<[VertexId; 3]>,
    /// The identified boundary `u_1 ..= u_{6r}` (northern ids).
    pub equator: Vec<VertexId>,
    pub charts: Vec<ChartPoint>,
}

impl Graph for SphereTriangulation {
    fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v as usize]
    }
}

/// A cubic plane graph given by its rotation system and face list. For
/// graphs produced by [`dualize`], face `i` is the cycle of triangles
/// around vertex `i` of the primal triangulation.
#[derive(Debug, Clone)]
pub struct CubicPlaneGraph {
    /// Rotation system: three neighbors per vertex in cyclic order.
    pub adjacency: Vec<Vec<VertexId>>,
    /// Face cycles.
    pub faces: Vec<Vec<VertexId>>,
    /// `(r, t)` provenance for generated graphs, `None` for recovered ones.
    pub meta: Option<(u32, u32)>,
}

impl Graph for CubicPlaneGraph {
    fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v as usize]
    }
}

impl CubicPlaneGraph {
    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn pentagon_count(&self) -> usize {
        self.faces.iter().filter(|f| f.len() == 5).count()
    }

    pub fn hexagon_count(&self) -> usize {
        self.faces.iter().filter(|f| f.len() == 6).count()
    }

    /// Faces incident to each vertex, in face-id order.
    pub fn incident_faces(&self) -> Vec<Vec<u32>> {
        let mut incidence = vec![Vec::new(); self.vertex_count()];
        for (f, face) in self.faces.iter().enumerate() {
            for &v in face {
                incidence[v as usize].push(f as u32);
            }
        }
        incidence
    }

    /// Adjacency between faces sharing an edge (the dual graph of the
    /// embedding, rebuilt from the face list alone).
    pub fn face_adjacency(&self) -> Result<Vec<Vec<u32>>> {
        let mut edge_faces: HashMap<(VertexId, VertexId), Vec<u32>> = HashMap::new();
        for (f, face) in self.faces.iter().enumerate() {
            for i in 0..face.len() {
                let a = face[i];
                let b = face[(i + 1) % face.len()];
                edge_faces
                    .entry((a.min(b), a.max(b)))
                    .or_default()
                    .push(f as u32);
            }
        }
        let mut adj = vec![Vec::new(); self.faces.len()];
        for ((a, b), fs) in edge_faces {
            if fs.len() != 2 || fs[0] == fs[1] {
                return Err(Error::InvalidTriangulation(format!(
                    "edge ({a},{b}) borders faces {fs:?}, expected two distinct"
                )));
            }
            adj[fs[0] as usize].push(fs[1]);
            adj[fs[1] as usize].push(fs[0]);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(adj)
    }
}

fn wrap_boundary_index(i: i64, len: u32) -> u32 {
    ((i - 1).rem_euclid(i64::from(len)) + 1) as u32
}

/// Glue two patches of equal radius along their boundaries with twist `t`.
pub fn glue(north: &Patch, south: &Patch, t: u32) -> Result<SphereTriangulation> {
    let r = north.radius;
    if south.radius != r {
        return Err(Error::RadiusMismatch {
            north: r,
            south: south.radius,
        });
    }
    if r < 2 {
        return Err(Error::InvalidRadius { min: 2, got: r });
    }
    if t < 1 || t > r - 1 {
        return Err(Error::InvalidTwist { r, t });
    }

    let ring = 6 * r;
    let north_count = north.coords.len() as u32;
    let interior_south = north_count - ring;
    let boundary_start = 3 * r * (r - 1); // boundary ids are start+1 ..= start+6r

    // Southern local id -> glued id. Boundary vertex v_i lands on u_{i-t}.
    let map_south = |local: u32| -> VertexId {
        if local <= boundary_start {
            north_count + local
        } else {
            let i = local - boundary_start;
            boundary_start + wrap_boundary_index(i64::from(i) - i64::from(t), ring)
        }
    };

    let mut triangles = north.triangles.clone();
    for tri in &south.triangles {
        // Reversed orientation: the southern chart is seen from the other
        // side of the sphere.
        triangles.push([map_south(tri[0]), map_south(tri[2]), map_south(tri[1])]);
    }

    let vertex_count = (north_count + interior_south) as usize;
    let adjacency = rotation_from_oriented_triangles(vertex_count, &triangles)?;

    let mut charts: Vec<ChartPoint> = north
        .coords
        .iter()
        .map(|&coord| ChartPoint {
            southern: false,
            coord,
        })
        .collect();
    charts.extend((0..=boundary_start).map(|local| ChartPoint {
        southern: true,
        coord: south.coords[local as usize],
    }));

    Ok(SphereTriangulation {
        r,
        twist: t,
        north: 0,
        south: north_count,
        adjacency,
        triangles,
        equator: north.boundary.clone(),
        charts,
    })
}

/// Rebuild the rotation system of a closed oriented triangulated surface
/// from its coherently oriented triangles. Fails if some dart appears in
/// two triangles or the triangles around a vertex do not close into a
/// single wheel.
fn rotation_from_oriented_triangles(
    vertex_count: usize,
    triangles: &[[VertexId; 3]],
) -> Result<Vec<Vec<VertexId>>> {
    // successor[v]: neighbor -> next neighbor counterclockwise.
    let mut successor: Vec<HashMap<VertexId, VertexId>> = vec![HashMap::new(); vertex_count];
    for tri in triangles {
        for (a, b, c) in [
            (tri[0], tri[1], tri[2]),
            (tri[1], tri[2], tri[0]),
            (tri[2], tri[0], tri[1]),
        ] {
            if successor[a as usize].insert(b, c).is_some() {
                return Err(Error::InvalidTriangulation(format!(
                    "dart {a}->{b} lies in two equally oriented triangles"
                )));
            }
        }
    }

    let mut adjacency = Vec::with_capacity(vertex_count);
    for (v, succ) in successor.iter().enumerate() {
        if succ.is_empty() {
            return Err(Error::InvalidTriangulation(format!(
                "vertex {v} lies in no triangle"
            )));
        }
        let start = *succ.keys().min().expect("non-empty");
        let mut cycle = Vec::with_capacity(succ.len());
        let mut cur = start;
        loop {
            cycle.push(cur);
            cur = *succ.get(&cur).ok_or_else(|| {
                Error::InvalidTriangulation(format!(
                    "rotation at vertex {v} is not closed after {cur}"
                ))
            })?;
            if cur == start {
                break;
            }
            if cycle.len() > succ.len() {
                return Err(Error::InvalidTriangulation(format!(
                    "rotation walk at vertex {v} revisits a neighbor"
                )));
            }
        }
        if cycle.len() != succ.len() {
            return Err(Error::InvalidTriangulation(format!(
                "triangles around vertex {v} form more than one wheel"
            )));
        }
        adjacency.push(cycle);
    }
    Ok(adjacency)
}

/// Outcome of the structural validation of a glued sphere.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct TriangulationReport {
    /// `V - E + F = 2`.
    pub euler: bool,
    /// Exactly twelve degree-5 vertices, all others degree 6.
    pub degree_histogram: bool,
    /// Every undirected edge lies in exactly two triangles, and triangle
    /// edges coincide with adjacency edges.
    pub edge_incidence: bool,
    /// Tracing faces from the rotation system recovers the triangle set.
    pub rotation_faces: bool,
    /// The degree-5 vertices sit on the equator at the corner slots of the
    /// two patches, which never coincide.
    pub corner_separation: bool,
}

impl TriangulationReport {
    pub fn all_pass(&self) -> bool {
        self.euler
            && self.degree_histogram
            && self.edge_incidence
            && self.rotation_faces
            && self.corner_separation
    }
}

/// Check all structural invariants of a glued sphere, reporting each
/// outcome instead of failing early.
pub fn validate_triangulation(t: &SphereTriangulation) -> TriangulationReport {
    let v = t.vertex_count();
    let e = t.edge_count();
    let f = t.triangles.len();
    let euler = v as i64 - e as i64 + f as i64 == 2;

    let deg5 = (0..v as VertexId).filter(|&x| t.degree(x) == 5).count();
    let deg6 = (0..v as VertexId).filter(|&x| t.degree(x) == 6).count();
    let degree_histogram = deg5 == 12 && deg5 + deg6 == v;

    let mut edge_in_triangles: HashMap<(VertexId, VertexId), u32> = HashMap::new();
    for tri in &t.triangles {
        for (a, b) in [(tri[0], tri[1]), (tri[1], tri[2]), (tri[2], tri[0])] {
            *edge_in_triangles.entry((a.min(b), a.max(b))).or_insert(0) += 1;
        }
    }
    let mut edge_incidence = edge_in_triangles.values().all(|&c| c == 2)
        && edge_in_triangles.len() == e;
    for x in 0..v as VertexId {
        for &y in t.neighbors(x) {
            if !edge_in_triangles.contains_key(&(x.min(y), x.max(y))) {
                edge_incidence = false;
            }
        }
    }

    let rotation_faces = match faces_from_rotation(&t.adjacency) {
        Ok(faces) => {
            let mut traced: Vec<[VertexId; 3]> = faces
                .iter()
                .filter(|f| f.len() == 3)
                .map(|f| {
                    let mut s = [f[0], f[1], f[2]];
                    s.sort_unstable();
                    s
                })
                .collect();
            traced.sort_unstable();
            let mut expected: Vec<[VertexId; 3]> = t
                .triangles
                .iter()
                .map(|f| {
                    let mut s = *f;
                    s.sort_unstable();
                    s
                })
                .collect();
            expected.sort_unstable();
            faces.len() == t.triangles.len() && traced == expected
        }
        Err(_) => false,
    };

    let ring = 6 * t.r;
    let north_corners: Vec<VertexId> = (1..=6)
        .map(|k| t.equator[(k * t.r - 1) as usize])
        .collect();
    let south_corners: Vec<VertexId> = (1..=6)
        .map(|k| {
            let i = wrap_boundary_index(i64::from(k * t.r) - i64::from(t.twist), ring);
            t.equator[(i - 1) as usize]
        })
        .collect();
    let mut expected_deg5: Vec<VertexId> = north_corners
        .iter()
        .chain(south_corners.iter())
        .copied()
        .collect();
    expected_deg5.sort_unstable();
    let disjoint = expected_deg5.windows(2).all(|w| w[0] != w[1]);
    let mut actual_deg5: Vec<VertexId> = (0..v as VertexId)
        .filter(|&x| t.degree(x) == 5)
        .collect();
    actual_deg5.sort_unstable();
    let corner_separation = disjoint && expected_deg5 == actual_deg5;

    TriangulationReport {
        euler,
        degree_histogram,
        edge_incidence,
        rotation_faces,
        corner_separation,
    }
}

/// Trace the faces of an embedded graph from its rotation system.
///
/// The dart following `u -> v` is `v -> w` where `w` succeeds `u` in the
/// cyclic order at `v`. Errors if the rotation lists are malformed or the
/// traversal fails to partition the darts.
pub fn faces_from_rotation(adjacency: &[Vec<VertexId>]) -> Result<Vec<Vec<VertexId>>> {
    let n = adjacency.len();
    // position[v][u] = index of u in the rotation at v.
    let mut position: Vec<HashMap<VertexId, usize>> = Vec::with_capacity(n);
    for (v, list) in adjacency.iter().enumerate() {
        let mut pos = HashMap::with_capacity(list.len());
        for (i, &u) in list.iter().enumerate() {
            if u as usize >= n {
                return Err(Error::MalformedRotation {
                    vertex: v as VertexId,
                    reason: format!("neighbor {u} out of range"),
                });
            }
            if u as usize == v {
                return Err(Error::MalformedRotation {
                    vertex: v as VertexId,
                    reason: "self-loop".into(),
                });
            }
            if pos.insert(u, i).is_some() {
                return Err(Error::MalformedRotation {
                    vertex: v as VertexId,
                    reason: format!("neighbor {u} listed twice"),
                });
            }
        }
        position.push(pos);
    }
    for (v, list) in adjacency.iter().enumerate() {
        for &u in list {
            if !position[u as usize].contains_key(&(v as VertexId)) {
                return Err(Error::MalformedRotation {
                    vertex: u,
                    reason: format!("edge {v}-{u} present only at {v}"),
                });
            }
        }
    }

    let mut visited: Vec<Vec<bool>> = adjacency.iter().map(|l| vec![false; l.len()]).collect();
    let mut faces = Vec::new();
    for v0 in 0..n as VertexId {
        for i0 in 0..adjacency[v0 as usize].len() {
            if visited[v0 as usize][i0] {
                continue;
            }
            let mut face = Vec::new();
            let start = (v0, adjacency[v0 as usize][i0]);
            let (mut u, mut v) = start;
            loop {
                let slot = position[u as usize][&v];
                if visited[u as usize][slot] {
                    // A dart may only reappear as the start of its own face.
                    if (u, v) == start {
                        break;
                    }
                    return Err(Error::DartPartition { from: u, to: v });
                }
                visited[u as usize][slot] = true;
                face.push(u);
                let rot = &adjacency[v as usize];
                let back = position[v as usize][&u];
                let next = rot[(back + 1) % rot.len()];
                u = v;
                v = next;
            }
            faces.push(face);
        }
    }
    Ok(faces)
}

/// Dualize a validated sphere triangulation into its fullerene graph.
///
/// Dual vertex `k` is triangle `k`; dual edges join triangles sharing an
/// edge; the dual rotation is induced by the primal orientation. The face
/// list is reindexed so face `i` is the triangle cycle around primal
/// vertex `i`.
pub fn dualize(t: &SphereTriangulation) -> Result<CubicPlaneGraph> {
    let report = validate_triangulation(t);
    if !report.all_pass() {
        return Err(Error::InvalidTriangulation(format!(
            "refusing to dualize an invalid complex: {report:?}"
        )));
    }

    let mut owner: HashMap<(VertexId, VertexId), u32> = HashMap::new();
    for (k, tri) in t.triangles.iter().enumerate() {
        for (a, b) in [(tri[0], tri[1]), (tri[1], tri[2]), (tri[2], tri[0])] {
            owner.insert((a, b), k as u32);
        }
    }
    let across = |a: VertexId, b: VertexId| -> Result<u32> {
        owner.get(&(b, a)).copied().ok_or_else(|| {
            Error::InvalidTriangulation(format!("dart {b}->{a} has no owning triangle"))
        })
    };

    let mut adjacency = Vec::with_capacity(t.triangles.len());
    for tri in &t.triangles {
        adjacency.push(vec![
            across(tri[0], tri[1])?,
            across(tri[1], tri[2])?,
            across(tri[2], tri[0])?,
        ]);
    }

    let traced = faces_from_rotation(&adjacency)?;
    if traced.len() != t.vertex_count() {
        return Err(Error::InvalidTriangulation(format!(
            "dual face count {} differs from primal vertex count {}",
            traced.len(),
            t.vertex_count()
        )));
    }

    // Each dual face is the wheel of triangles around one primal vertex.
    let mut faces: Vec<Vec<VertexId>> = vec![Vec::new(); t.vertex_count()];
    for cycle in traced {
        let common = common_vertex(t, &cycle)?;
        if !faces[common as usize].is_empty() {
            return Err(Error::InvalidTriangulation(format!(
                "two dual faces claim primal vertex {common}"
            )));
        }
        if cycle.len() != t.degree(common) {
            return Err(Error::InvalidTriangulation(format!(
                "dual face around vertex {common} has length {} but degree is {}",
                cycle.len(),
                t.degree(common)
            )));
        }
        faces[common as usize] = rotate_to_min(cycle);
    }

    Ok(CubicPlaneGraph {
        adjacency,
        faces,
        meta: Some((t.r, t.twist)),
    })
}

fn common_vertex(t: &SphereTriangulation, cycle: &[VertexId]) -> Result<VertexId> {
    let mut candidates: Vec<VertexId> = t.triangles[cycle[0] as usize].to_vec();
    for &k in &cycle[1..] {
        let tri = t.triangles[k as usize];
        candidates.retain(|v| tri.contains(v));
        if candidates.len() == 1 {
            break;
        }
    }
    match candidates.as_slice() {
        [v] => Ok(*v),
        other => Err(Error::InvalidTriangulation(format!(
            "dual face {cycle:?} has common vertices {other:?}, expected exactly one"
        ))),
    }
}

fn rotate_to_min(mut cycle: Vec<VertexId>) -> Vec<VertexId> {
    let min_pos = cycle
        .iter()
        .enumerate()
        .min_by_key(|&(_, &v)| v)
        .map(|(i, _)| i)
        .unwrap_or(0);
    cycle.rotate_left(min_pos);
    cycle
}
