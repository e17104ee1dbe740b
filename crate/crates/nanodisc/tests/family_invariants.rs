//! Family-wide invariant sweep: every (r, t) with 2 <= r <= 8 produces a
//! valid fullerene, duality bookkeeping holds, and the exact diameters
//! match the values recorded from the oracle runs.

use nanodisc::graph6::{decode_graph6, encode_graph6};
use nanodisc::lattice::build_patch;
use nanodisc::metrics::{bfs, diameter_sequential, latitude};
use nanodisc::surface::{dualize, faces_from_rotation, glue, validate_triangulation};
use nanodisc::verify::verify_fullerene;
use nanodisc::{Graph, VertexId};

fn family() -> impl Iterator<Item = (u32, u32)> {
    (2..=8u32).flat_map(|r| (1..r).map(move |t| (r, t)))
}

#[test]
fn every_family_member_is_a_fullerene_on_12r2_vertices() {
    for (r, t) in family() {
        let p = build_patch(r).unwrap();
        let sphere = glue(&p, &p, t).unwrap();
        assert!(validate_triangulation(&sphere).all_pass(), "r={r} t={t}");
        let g = dualize(&sphere).unwrap();
        assert_eq!(g.vertex_count() as u32, 12 * r * r, "r={r} t={t}");
        assert_eq!(g.edge_count() as u32, 18 * r * r);
        assert_eq!(g.face_count() as u32, 6 * r * r + 2);
        assert_eq!(g.pentagon_count(), 12);
        let report = verify_fullerene(&g);
        assert!(report.all_pass(), "r={r} t={t}: {report:?}");
    }
}

#[test]
fn duality_involution_on_counts() {
    for (r, t) in [(2, 1), (4, 2), (6, 5)] {
        let p = build_patch(r).unwrap();
        let sphere = glue(&p, &p, t).unwrap();
        let g = dualize(&sphere).unwrap();
        // (V, E, F) of the dual is (F, E, V) of the primal.
        assert_eq!(g.vertex_count(), sphere.triangles.len());
        assert_eq!(g.edge_count(), sphere.edge_count());
        assert_eq!(g.face_count(), sphere.vertex_count());
        // Triangle-sharing adjacency rebuilt from the face list recovers
        // the primal adjacency.
        let rebuilt = g.face_adjacency().unwrap();
        for v in 0..sphere.vertex_count() as VertexId {
            let mut expect = sphere.neighbors(v).to_vec();
            expect.sort_unstable();
            assert_eq!(rebuilt[v as usize], expect);
        }
    }
}

#[test]
fn traced_face_lengths_match_primal_degrees() {
    for (r, t) in [(3, 1), (5, 4)] {
        let p = build_patch(r).unwrap();
        let sphere = glue(&p, &p, t).unwrap();
        let g = dualize(&sphere).unwrap();
        let traced = faces_from_rotation(&g.adjacency).unwrap();
        let mut traced_lengths: Vec<usize> = traced.iter().map(|f| f.len()).collect();
        traced_lengths.sort_unstable();
        let mut degrees: Vec<usize> = (0..sphere.vertex_count() as VertexId)
            .map(|v| sphere.degree(v))
            .collect();
        degrees.sort_unstable();
        assert_eq!(traced_lengths, degrees, "r={r} t={t}");
    }
}

/// Exact diameters recorded from the all-sources BFS oracle: the 4r upper
/// bound is attained by every member up to r = 8, so the diameter never
/// depends on the twist in this range.
#[test]
fn recorded_diameters_are_exactly_4r() {
    for (r, t) in family() {
        let p = build_patch(r).unwrap();
        let sphere = glue(&p, &p, t).unwrap();
        let g = dualize(&sphere).unwrap();
        let w = nanodisc::metrics::diameter(&g).unwrap();
        assert_eq!(w.value, 4 * r, "r={r} t={t}");
    }
}

#[test]
fn recorded_witness_for_r2_t1() {
    let p = build_patch(2).unwrap();
    let g = dualize(&glue(&p, &p, 1).unwrap()).unwrap();
    let w = diameter_sequential(&g).unwrap();
    assert_eq!(w.value, 8);
    assert_eq!(w.pair, (0, 42));
}

#[test]
fn pole_eccentricities_and_latitudes_line_up() {
    for (r, t) in family() {
        let p = build_patch(r).unwrap();
        let sphere = glue(&p, &p, t).unwrap();
        let dn = bfs(&sphere, sphere.north).unwrap().dist;
        assert_eq!(dn[sphere.south as usize], 2 * r, "r={r} t={t}");
        let lat = latitude(&sphere).unwrap();
        assert_eq!(lat.phi[sphere.north as usize], r as i32);
        assert_eq!(lat.phi[sphere.south as usize], -(r as i32));
    }
}

#[test]
fn graph6_round_trips_across_the_family() {
    for (r, t) in family() {
        let p = build_patch(r).unwrap();
        let g = dualize(&glue(&p, &p, t).unwrap()).unwrap();
        let decoded = decode_graph6(&encode_graph6(&g).unwrap()).unwrap();
        let original: Vec<Vec<VertexId>> = g
            .adjacency
            .iter()
            .map(|l| {
                let mut s = l.clone();
                s.sort_unstable();
                s
            })
            .collect();
        assert_eq!(decoded.adjacency, original, "r={r} t={t}");
    }
}
