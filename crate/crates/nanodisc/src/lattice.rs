//! Balls of the infinite 6-regular planar triangulation.
//!
//! Vertices of the triangulation are integer points over two of the six
//! unit directions; the other four directions are integer combinations of
//! the chosen pair. [`build_patch`] cuts out the ball of radius `r` around
//! the origin together with its triangles and a canonically indexed
//! boundary cycle: traversal is counterclockwise and the boundary vertex
//! with index `6r` is pinned at coordinate `(r, 0)`, so the six degree-3
//! corner vertices land exactly at indices `r, 2r, ..., 6r`.

use std::collections::HashMap;

use crate::{Error, Graph, Result, VertexId};

/// Integer lattice coordinate over the direction pair `(1,0)`, `(0,1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AxialCoord {
    pub a: i32,
    pub b: i32,
}

/// The six unit directions in counterclockwise order.
pub const DIRECTIONS: [AxialCoord; 6] = [
    AxialCoord { a: 1, b: 0 },
    AxialCoord { a: 0, b: 1 },
    AxialCoord { a: -1, b: 1 },
    AxialCoord { a: -1, b: 0 },
    AxialCoord { a: 0, b: -1 },
    AxialCoord { a: 1, b: -1 },
];

impl AxialCoord {
    pub const ORIGIN: AxialCoord = AxialCoord { a: 0, b: 0 };

    pub fn new(a: i32, b: i32) -> Self {
        AxialCoord { a, b }
    }

    pub fn offset(self, d: AxialCoord) -> Self {
        AxialCoord {
            a: self.a + d.a,
            b: self.b + d.b,
        }
    }

    pub fn neighbors(self) -> [AxialCoord; 6] {
        DIRECTIONS.map(|d| self.offset(d))
    }

    /// Cartesian image with unit edge length, for rendering.
    pub fn to_cartesian(self) -> (f64, f64) {
        let a = f64::from(self.a);
        let b = f64::from(self.b);
        (a + b / 2.0, b * f64::sqrt(3.0) / 2.0)
    }
}

/// Graph distance between two lattice points.
///
/// Closed form `(|da| + |db| + |da+db|) / 2`; the sum is always even.
pub fn hex_distance(p: AxialCoord, q: AxialCoord) -> u32 {
    let da = i64::from(q.a) - i64::from(p.a);
    let db = i64::from(q.b) - i64::from(p.b);
    ((da.abs() + db.abs() + (da + db).abs()) / 2) as u32
}

/// The ball of radius `r` around a center vertex: a triangulated disc with
/// `3r² + 3r + 1` vertices, `6r²` triangles and a boundary cycle of length
/// `6r`.
///
/// Vertex ids are dense and assigned in ring order: the center is `0`,
/// ring `k` occupies ids `3k(k-1)+1 ..= 3k(k+1)`, each ring walked
/// counterclockwise ending at `(k, 0)`. The boundary vector lists
/// `u_1, ..., u_{6r}` in that walk order, so `boundary[i-1]` is `u_i` and
/// `u_{6r}` sits at `(r, 0)`.
#[derive(Debug, Clone)]
pub struct Patch {
    pub radius: u32,
    pub center: VertexId,
    /// Lattice coordinate of each vertex, indexed by id.
    pub coords: Vec<AxialCoord>,
    /// Neighbor lists in counterclockwise rotation order.
    pub adjacency: Vec<Vec<VertexId>>,
    /// Triangles oriented counterclockwise.
    pub triangles: Vec<[VertexId; 3]>,
    /// The outer cycle `u_1 ..= u_{6r}`.
    pub boundary: Vec<VertexId>,
}

impl Graph for Patch {
    fn vertex_count(&self) -> usize {
        self.coords.len()
    }

    fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v as usize]
    }
}

impl Patch {
    pub fn index_of(&self, c: AxialCoord) -> Option<VertexId> {
        // Rings are short; linear probing would do, but builds keep a map.
        self.coords.iter().position(|&x| x == c).map(|i| i as VertexId)
    }
}

/// Walk ring `k` counterclockwise so that the last vertex is `(k, 0)`.
fn ring_walk(k: u32) -> Vec<AxialCoord> {
    let mut pos = AxialCoord::new(k as i32, 0);
    let mut out = Vec::with_capacity(6 * k as usize);
    // Sides in order d2,d3,d4,d5,d0,d1 bring the walk back to the start.
    for side in [2usize, 3, 4, 5, 0, 1] {
        for _ in 0..k {
            pos = pos.offset(DIRECTIONS[side]);
            out.push(pos);
        }
    }
    debug_assert_eq!(out.last(), Some(&AxialCoord::new(k as i32, 0)));
    out
}

/// Build the radius-`r` ball of the triangulation around the origin.
pub fn build_patch(r: u32) -> Result<Patch> {
    if r < 1 {
        return Err(Error::InvalidRadius { min: 1, got: r });
    }

    let mut coords = vec![AxialCoord::ORIGIN];
    for k in 1..=r {
        coords.extend(ring_walk(k));
    }
    let index: HashMap<AxialCoord, VertexId> = coords
        .iter()
        .enumerate()
        .map(|(i, &c)| (c, i as VertexId))
        .collect();

    let adjacency: Vec<Vec<VertexId>> = coords
        .iter()
        .map(|&c| {
            c.neighbors()
                .iter()
                .filter_map(|n| index.get(n).copied())
                .collect()
        })
        .collect();

    let mut triangles = Vec::new();
    let range = -(r as i32)..=r as i32;
    for a in range.clone() {
        for b in range.clone() {
            let v = AxialCoord::new(a, b);
            let up = [v, v.offset(DIRECTIONS[0]), v.offset(DIRECTIONS[1])];
            let down = [
                v.offset(DIRECTIONS[0]),
                AxialCoord::new(a + 1, b + 1),
                v.offset(DIRECTIONS[1]),
            ];
            for tri in [up, down] {
                if let (Some(&x), Some(&y), Some(&z)) = (
                    index.get(&tri[0]),
                    index.get(&tri[1]),
                    index.get(&tri[2]),
                ) {
                    triangles.push([x, y, z]);
                }
            }
        }
    }

    let boundary_start = 3 * r * (r - 1) + 1;
    let boundary = (boundary_start..boundary_start + 6 * r).collect();

    Ok(Patch {
        radius: r,
        center: 0,
        coords,
        adjacency,
        triangles,
        boundary,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metrics;
    use proptest::prelude::*;
    use std::collections::{HashMap, HashSet, VecDeque};

    /// Independent distance oracle: BFS over explicitly enumerated lattice
    /// neighborhoods, never consulting the closed form.
    fn bfs_lattice_distance(target: AxialCoord, radius_cap: u32) -> Option<u32> {
        let mut dist: HashMap<AxialCoord, u32> = HashMap::new();
        let mut queue = VecDeque::new();
        dist.insert(AxialCoord::ORIGIN, 0);
        queue.push_back(AxialCoord::ORIGIN);
        while let Some(c) = queue.pop_front() {
            let d = dist[&c];
            if c == target {
                return Some(d);
            }
            if d == radius_cap {
                continue;
            }
            for n in c.neighbors() {
                dist.entry(n).or_insert_with(|| {
                    queue.push_back(n);
                    d + 1
                });
            }
        }
        None
    }

    #[test]
    fn hex_distance_base_cases() {
        let o = AxialCoord::ORIGIN;
        assert_eq!(hex_distance(o, o), 0);
        assert_eq!(hex_distance(o, AxialCoord::new(1, 0)), 1);
        assert_eq!(hex_distance(o, AxialCoord::new(2, -1)), 2);
        assert_eq!(
            bfs_lattice_distance(AxialCoord::new(2, -1), 4),
            Some(2),
            "BFS oracle agrees on (2,-1)"
        );
    }

    #[test]
    fn hex_distance_matches_bfs_oracle_on_neighborhood() {
        for a in -4..=4 {
            for b in -4..=4 {
                let c = AxialCoord::new(a, b);
                assert_eq!(
                    Some(hex_distance(AxialCoord::ORIGIN, c)),
                    bfs_lattice_distance(c, 10),
                    "mismatch at {c:?}"
                );
            }
        }
    }

    proptest! {
        #[test]
        fn hex_distance_is_a_metric(
            pa in -50i32..50, pb in -50i32..50,
            qa in -50i32..50, qb in -50i32..50,
            ra in -50i32..50, rb in -50i32..50,
        ) {
            let p = AxialCoord::new(pa, pb);
            let q = AxialCoord::new(qa, qb);
            let r = AxialCoord::new(ra, rb);
            prop_assert_eq!(hex_distance(p, q), hex_distance(q, p));
            prop_assert_eq!(hex_distance(p, q) == 0, p == q);
            prop_assert!(hex_distance(p, r) <= hex_distance(p, q) + hex_distance(q, r));
            // Translation invariance.
            let shift = AxialCoord::new(ra, qb);
            prop_assert_eq!(
                hex_distance(p.offset(shift), q.offset(shift)),
                hex_distance(p, q)
            );
        }
    }

    #[test]
    fn build_patch_rejects_radius_zero() {
        assert!(build_patch(0).is_err());
    }

    #[test]
    fn patch_r1_is_a_hexagon_fan() {
        let p = build_patch(1).unwrap();
        assert_eq!(p.coords.len(), 7);
        assert_eq!(p.triangles.len(), 6);
        assert_eq!(p.boundary.len(), 6);
        assert_eq!(p.degree(p.center), 6);
        for &v in &p.boundary {
            assert_eq!(p.degree(v), 3, "all boundary vertices are corners at r=1");
        }
    }

    #[test]
    fn patch_r2_counts_and_corners() {
        let p = build_patch(2).unwrap();
        assert_eq!(p.coords.len(), 19);
        assert_eq!(p.triangles.len(), 24);
        assert_eq!(p.boundary.len(), 12);
        let corner_indices: Vec<usize> = (1..=12)
            .filter(|&i| p.degree(p.boundary[i - 1]) == 3)
            .collect();
        assert_eq!(corner_indices, vec![2, 4, 6, 8, 10, 12]);
    }

    #[test]
    fn patch_r5_counts() {
        let p = build_patch(5).unwrap();
        assert_eq!(p.coords.len(), 91);
        assert_eq!(p.triangles.len(), 150);
        assert_eq!(p.boundary.len(), 30);
    }

    #[test]
    fn boundary_end_is_pinned_and_walk_is_closed() {
        for r in 1..=6 {
            let p = build_patch(r).unwrap();
            let last = *p.boundary.last().unwrap();
            assert_eq!(p.coords[last as usize], AxialCoord::new(r as i32, 0));
            for w in p.boundary.windows(2) {
                assert_eq!(hex_distance(p.coords[w[0] as usize], p.coords[w[1] as usize]), 1);
            }
            let first = p.boundary[0];
            assert_eq!(
                hex_distance(p.coords[last as usize], p.coords[first as usize]),
                1
            );
            // The boundary is exactly the set of vertices at distance r.
            let at_r: HashSet<VertexId> = (0..p.vertex_count() as VertexId)
                .filter(|&v| hex_distance(AxialCoord::ORIGIN, p.coords[v as usize]) == r)
                .collect();
            let listed: HashSet<VertexId> = p.boundary.iter().copied().collect();
            assert_eq!(listed, at_r);
        }
    }

    /// Independent triangle oracle: triangles of the ball are exactly the
    /// 3-cliques of the induced adjacency.
    fn clique_triangles(p: &Patch) -> HashSet<[VertexId; 3]> {
        let mut out = HashSet::new();
        for v in 0..p.vertex_count() as VertexId {
            for &x in p.neighbors(v) {
                for &y in p.neighbors(v) {
                    if x < y
                        && v < x
                        && p.neighbors(x).contains(&y)
                    {
                        out.insert([v, x, y]);
                    }
                }
            }
        }
        out
    }

    #[test]
    fn counts_and_triangles_match_oracles_up_to_r12() {
        for r in 1..=12u32 {
            let p = build_patch(r).unwrap();
            assert_eq!(p.coords.len() as u32, 3 * r * r + 3 * r + 1);
            assert_eq!(p.triangles.len() as u32, 6 * r * r);
            let from_cliques = clique_triangles(&p);
            let built: HashSet<[VertexId; 3]> = p
                .triangles
                .iter()
                .map(|t| {
                    let mut s = *t;
                    s.sort_unstable();
                    s
                })
                .collect();
            assert_eq!(built, from_cliques, "triangle set differs at r={r}");
        }
    }

    #[test]
    fn degrees_follow_ring_structure() {
        for r in 2..=6u32 {
            let p = build_patch(r).unwrap();
            for v in 0..p.vertex_count() as VertexId {
                let d = hex_distance(AxialCoord::ORIGIN, p.coords[v as usize]);
                let deg = p.degree(v);
                if d < r {
                    assert_eq!(deg, 6);
                } else {
                    let i = (v - (3 * r * (r - 1) + 1)) + 1;
                    if i % r == 0 {
                        assert_eq!(deg, 3, "corner u_{i} at r={r}");
                    } else {
                        assert_eq!(deg, 4, "side vertex u_{i} at r={r}");
                    }
                }
            }
        }
    }

    #[test]
    fn edges_lie_in_two_triangles_inside_and_one_on_the_boundary() {
        for r in 1..=6u32 {
            let p = build_patch(r).unwrap();
            let mut edge_count: HashMap<(VertexId, VertexId), u32> = HashMap::new();
            for t in &p.triangles {
                for (x, y) in [(t[0], t[1]), (t[1], t[2]), (t[2], t[0])] {
                    *edge_count.entry((x.min(y), x.max(y))).or_insert(0) += 1;
                }
            }
            let boundary: HashSet<VertexId> = p.boundary.iter().copied().collect();
            let mut seen_edges = 0;
            for v in 0..p.vertex_count() as VertexId {
                for &w in p.neighbors(v) {
                    if v < w {
                        seen_edges += 1;
                        let expect = if boundary.contains(&v) && boundary.contains(&w) {
                            let iv = p.boundary.iter().position(|&x| x == v).unwrap();
                            let iw = p.boundary.iter().position(|&x| x == w).unwrap();
                            let gap = (iv as i64 - iw as i64).rem_euclid(6 * r as i64);
                            if gap == 1 || gap == 6 * i64::from(r) - 1 {
                                1 // consecutive on the outer cycle
                            } else {
                                2 // chord between boundary vertices
                            }
                        } else {
                            2
                        };
                        assert_eq!(
                            edge_count.get(&(v, w)).copied().unwrap_or(0),
                            expect,
                            "edge ({v},{w}) at r={r}"
                        );
                    }
                }
            }
            assert_eq!(seen_edges, edge_count.len());
        }
    }

    #[test]
    fn patch_is_isometrically_embedded() {
        for r in 1..=8u32 {
            let p = build_patch(r).unwrap();
            let row = metrics::bfs(&p, p.center).unwrap();
            for v in 0..p.vertex_count() as VertexId {
                assert_eq!(
                    row.dist[v as usize],
                    hex_distance(AxialCoord::ORIGIN, p.coords[v as usize]),
                    "vertex {v} at r={r}"
                );
            }
        }
    }
}
