//! Plane-embedding recovery for fullerene input graphs.
//!
//! A fullerene's faces are exactly its cycles of length at most six: a
//! non-facial cycle encloses at least two faces and, since 3-connectivity
//! keeps adjacent faces from sharing more than one edge, has length at
//! least eight. So the embedding of a cubic input is recovered by
//! enumerating all 5- and 6-cycles, checking that they behave like a face
//! set (every edge on exactly two, every vertex on exactly three),
//! orienting them coherently, and validating the resulting rotation system
//! by retracing it. Anything inconsistent is rejected rather than guessed.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::graph6::SimpleGraph;
use crate::metrics;
use crate::surface::{faces_from_rotation, CubicPlaneGraph};
use crate::{Error, Graph, Result, VertexId};

/// All cycles of length 5 or 6, each reported once with its minimum vertex
/// first.
fn short_cycles(g: &SimpleGraph) -> Vec<Vec<VertexId>> {
    let mut cycles = Vec::new();
    let n = g.vertex_count() as VertexId;
    for start in 0..n {
        // Only walk through vertices larger than the start, so every cycle
        // is found from its minimum vertex; direction is fixed by
        // requiring the second vertex to be smaller than the last.
        let mut path = vec![start];
        let mut on_path = vec![false; n as usize];
        on_path[start as usize] = true;
        dfs_cycles(g, start, &mut path, &mut on_path, &mut cycles);
    }
    cycles
}

fn dfs_cycles(
    g: &SimpleGraph,
    start: VertexId,
    path: &mut Vec<VertexId>,
    on_path: &mut [bool],
    cycles: &mut Vec<Vec<VertexId>>,
) {
    let last = *path.last().unwrap();
    for &w in g.neighbors(last) {
        if w == start && path.len() >= 5 && path[1] < last {
            cycles.push(path.clone());
        }
        if path.len() < 6 && w > start && !on_path[w as usize] {
            path.push(w);
            on_path[w as usize] = true;
            dfs_cycles(g, start, path, on_path, cycles);
            on_path[w as usize] = false;
            path.pop();
        }
    }
}

/// Recover the (unique up to reflection) plane embedding of a fullerene
/// given only its adjacency.
pub fn recover_embedding(g: &SimpleGraph) -> Result<CubicPlaneGraph> {
    let n = g.vertex_count();
    if n < 20 {
        return Err(Error::Unembeddable(format!(
            "{n} vertices is below the smallest fullerene order 20"
        )));
    }
    for v in 0..n as VertexId {
        if g.degree(v) != 3 {
            return Err(Error::Unembeddable(format!(
                "vertex {v} has degree {}, expected 3",
                g.degree(v)
            )));
        }
    }
    if metrics::bfs_raw(g, 0).contains(&u32::MAX) {
        return Err(Error::Unembeddable("graph is disconnected".into()));
    }

    let faces = short_cycles(g);
    let expected_faces = n / 2 + 2;
    if faces.len() != expected_faces {
        return Err(Error::Unembeddable(format!(
            "{} short cycles found, a fullerene on {n} vertices has {expected_faces} faces",
            faces.len()
        )));
    }

    // Edge and vertex incidence of the candidate face set.
    let mut edge_sides: HashMap<(VertexId, VertexId), Vec<(usize, bool)>> = HashMap::new();
    let mut vertex_faces = vec![0usize; n];
    for (f, face) in faces.iter().enumerate() {
        for i in 0..face.len() {
            let a = face[i];
            let b = face[(i + 1) % face.len()];
            // Remember whether the face traverses the edge in increasing order.
            edge_sides
                .entry((a.min(b), a.max(b)))
                .or_default()
                .push((f, a < b));
            vertex_faces[a as usize] += 1;
        }
        // Faces must be genuine cycles over distinct vertices.
        let distinct: HashSet<VertexId> = face.iter().copied().collect();
        if distinct.len() != face.len() {
            return Err(Error::Unembeddable("degenerate short cycle".into()));
        }
    }
    if let Some(((a, b), sides)) = edge_sides.iter().find(|(_, s)| s.len() != 2) {
        return Err(Error::Unembeddable(format!(
            "edge ({a},{b}) lies on {} short cycles, expected 2",
            sides.len()
        )));
    }
    if let Some(v) = vertex_faces.iter().position(|&c| c != 3) {
        return Err(Error::Unembeddable(format!(
            "vertex {v} lies on {} short cycles, expected 3",
            vertex_faces[v]
        )));
    }

    // Two-color the faces so each edge is traversed once in each direction:
    // flipped[f] xor flipped[g] must equal (dir_f == dir_g).
    let mut flipped = vec![None::<bool>; faces.len()];
    let mut queue = VecDeque::new();
    flipped[0] = Some(false);
    queue.push_back(0usize);
    let mut adjacency_of_faces: Vec<Vec<(usize, bool)>> = vec![Vec::new(); faces.len()];
    for sides in edge_sides.values() {
        let (f1, d1) = sides[0];
        let (f2, d2) = sides[1];
        adjacency_of_faces[f1].push((f2, d1 == d2));
        adjacency_of_faces[f2].push((f1, d1 == d2));
    }
    while let Some(f) = queue.pop_front() {
        let mine = flipped[f].unwrap();
        for &(other, needs_flip) in &adjacency_of_faces[f] {
            let want = mine ^ needs_flip;
            match flipped[other] {
                None => {
                    flipped[other] = Some(want);
                    queue.push_back(other);
                }
                Some(have) if have != want => {
                    return Err(Error::Unembeddable(
                        "face set cannot be oriented coherently".into(),
                    ));
                }
                _ => {}
            }
        }
    }
    if flipped.iter().any(Option::is_none) {
        return Err(Error::Unembeddable("face adjacency is disconnected".into()));
    }

    let oriented: Vec<Vec<VertexId>> = faces
        .iter()
        .zip(&flipped)
        .map(|(face, flip)| {
            if flip.unwrap() {
                let mut rev = face.clone();
                rev.reverse();
                rev
            } else {
                face.clone()
            }
        })
        .collect();

    // Corners (p, v, q) of oriented faces define the rotation: q follows p
    // in the cyclic order at v.
    let mut successor: Vec<HashMap<VertexId, VertexId>> = vec![HashMap::new(); n];
    for face in &oriented {
        let len = face.len();
        for i in 0..len {
            let p = face[i];
            let v = face[(i + 1) % len];
            let q = face[(i + 2) % len];
            if successor[v as usize].insert(p, q).is_some() {
                return Err(Error::Unembeddable(format!(
                    "conflicting corners at vertex {v}"
                )));
            }
        }
    }
    let mut adjacency = Vec::with_capacity(n);
    for (v, succ) in successor.iter().enumerate() {
        if succ.len() != 3 {
            return Err(Error::Unembeddable(format!(
                "vertex {v} has {} corners, expected 3",
                succ.len()
            )));
        }
        let start = *succ.keys().min().unwrap();
        let second = succ[&start];
        let third = succ[&second];
        if succ[&third] != start || second == start || third == start || third == second {
            return Err(Error::Unembeddable(format!(
                "corners at vertex {v} do not close into a wheel"
            )));
        }
        adjacency.push(vec![start, second, third]);
    }

    // Retrace and compare against the recovered face set.
    let traced = faces_from_rotation(&adjacency)?;
    let canon = |fs: &[Vec<VertexId>]| -> Vec<Vec<VertexId>> {
        let mut sets: Vec<Vec<VertexId>> = fs
            .iter()
            .map(|f| {
                let mut s = f.clone();
                s.sort_unstable();
                s
            })
            .collect();
        sets.sort();
        sets
    };
    if canon(&traced) != canon(&oriented) {
        return Err(Error::Unembeddable(
            "rotation system does not retrace the recovered faces".into(),
        ));
    }
    let e = 3 * n / 2;
    if n as i64 - e as i64 + oriented.len() as i64 != 2 {
        return Err(Error::Unembeddable("face count violates the Euler formula".into()));
    }

    let mut ordered = oriented;
    ordered.sort();
    Ok(CubicPlaneGraph {
        adjacency,
        faces: ordered,
        meta: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph6::{decode_graph6, encode_graph6};
    use crate::lattice::build_patch;
    use crate::surface::{dualize, glue};
    use crate::verify::verify_fullerene;

    fn generated(r: u32, t: u32) -> CubicPlaneGraph {
        let p = build_patch(r).unwrap();
        dualize(&glue(&p, &p, t).unwrap()).unwrap()
    }

    #[test]
    fn recovers_generated_fullerenes_through_graph6() {
        for (r, t) in [(2u32, 1u32), (3, 2)] {
            let g = generated(r, t);
            let decoded = decode_graph6(&encode_graph6(&g).unwrap()).unwrap();
            let recovered = recover_embedding(&decoded).unwrap();
            assert_eq!(recovered.vertex_count(), g.vertex_count());
            assert_eq!(recovered.face_count(), g.face_count());
            assert_eq!(recovered.pentagon_count(), 12);
            assert_eq!(recovered.hexagon_count(), g.hexagon_count());
            assert!(verify_fullerene(&recovered).all_pass(), "r={r} t={t}");
        }
    }

    #[test]
    fn dodecahedron_is_recovered() {
        // The 20-vertex fullerene: twelve pentagons, no hexagons.
        let edges: Vec<(VertexId, VertexId)> = vec![
            (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
            (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
            (5, 10), (10, 6), (6, 11), (11, 7), (7, 12),
            (12, 8), (8, 13), (13, 9), (9, 14), (14, 5),
            (10, 15), (11, 16), (12, 17), (13, 18), (14, 19),
            (15, 16), (16, 17), (17, 18), (18, 19), (19, 15),
        ];
        let g = SimpleGraph::from_edges(20, &edges);
        let recovered = recover_embedding(&g).unwrap();
        assert_eq!(recovered.face_count(), 12);
        assert_eq!(recovered.pentagon_count(), 12);
        assert!(verify_fullerene(&recovered).all_pass());
    }

    #[test]
    fn petersen_graph_is_rejected() {
        // Cubic with girth 5 but not planar: each edge lies on four
        // 5-cycles, so the short-cycle count gives it away.
        let edges: Vec<(VertexId, VertexId)> = vec![
            (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
            (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
            (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
        ];
        let g = SimpleGraph::from_edges(10, &edges);
        assert!(matches!(recover_embedding(&g), Err(Error::Unembeddable(_))));
    }

    #[test]
    fn non_cubic_input_is_rejected() {
        let g = SimpleGraph::from_edges(24, &(0..23).map(|i| (i, i + 1)).collect::<Vec<_>>());
        assert!(matches!(recover_embedding(&g), Err(Error::Unembeddable(_))));
    }
}
