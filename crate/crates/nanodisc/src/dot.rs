//! Deterministic DOT exports with a flat polar layout: the north pole at
//! the center, rings at radius `r − φ`, the south pole on the outside.

use std::fmt::Write;

use crate::lattice::{hex_distance, AxialCoord};
use crate::surface::{CubicPlaneGraph, SphereTriangulation};
use crate::Graph;

/// Position every vertex of the glued sphere in the plane: ring radius is
/// the distance from the north pole, angles come from the hemisphere
/// charts with the southern chart turned by the twist so the equator lines
/// up.
pub fn layout(t: &SphereTriangulation) -> Vec<(f64, f64)> {
    let twist_angle = 2.0 * std::f64::consts::PI * f64::from(t.twist) / (6.0 * f64::from(t.r));
    t.charts
        .iter()
        .map(|p| {
            let ring = f64::from(hex_distance(AxialCoord::ORIGIN, p.coord));
            let (x, y) = p.coord.to_cartesian();
            if !p.southern {
                (x, y)
            } else {
                let rho = 2.0 * f64::from(t.r) - ring;
                let theta = y.atan2(x) - twist_angle;
                (rho * theta.cos(), rho * theta.sin())
            }
        })
        .collect()
}

fn emit<G: Graph + ?Sized>(name: &str, g: &G, positions: &[(f64, f64)]) -> String {
    let mut out = String::new();
    writeln!(out, "graph {name} {{").unwrap();
    writeln!(out, "  node [shape=point width=0.1];").unwrap();
    for (v, (x, y)) in positions.iter().enumerate() {
        writeln!(out, "  {v} [pos=\"{x:.4},{y:.4}!\"];").unwrap();
    }
    for v in 0..g.vertex_count() as u32 {
        let mut others: Vec<u32> = g.neighbors(v).iter().copied().filter(|&w| w > v).collect();
        others.sort_unstable();
        for w in others {
            writeln!(out, "  {v} -- {w};").unwrap();
        }
    }
    out.push_str("}\n");
    out
}

/// DOT text for the glued sphere triangulation.
pub fn emit_dot_triangulation(t: &SphereTriangulation) -> String {
    let name = format!("sphere_r{}_t{}", t.r, t.twist);
    emit(&name, t, &layout(t))
}

/// DOT text for the fullerene: each vertex sits at the centroid of its
/// triangle in the sphere layout.
pub fn emit_dot_fullerene(g: &CubicPlaneGraph, t: &SphereTriangulation) -> String {
    let primal = layout(t);
    let positions: Vec<(f64, f64)> = t
        .triangles
        .iter()
        .map(|tri| {
            let (mut x, mut y) = (0.0, 0.0);
            for &v in tri {
                x += primal[v as usize].0;
                y += primal[v as usize].1;
            }
            (x / 3.0, y / 3.0)
        })
        .collect();
    let name = match g.meta {
        Some((r, tw)) => format!("fullerene_r{r}_t{tw}"),
        None => "fullerene".to_string(),
    };
    emit(&name, g, &positions)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::build_patch;
    use crate::surface::{dualize, glue};

    fn pair(r: u32, t: u32) -> (CubicPlaneGraph, SphereTriangulation) {
        let p = build_patch(r).unwrap();
        let sphere = glue(&p, &p, t).unwrap();
        let g = dualize(&sphere).unwrap();
        (g, sphere)
    }

    fn count_lines(text: &str, pred: impl Fn(&str) -> bool) -> usize {
        text.lines().filter(|l| pred(l)).count()
    }

    #[test]
    fn fullerene_export_has_48_nodes_and_72_edges() {
        let (g, t) = pair(2, 1);
        let dot = emit_dot_fullerene(&g, &t);
        assert_eq!(count_lines(&dot, |l| l.contains("[pos=")), 48);
        assert_eq!(count_lines(&dot, |l| l.contains(" -- ")), 72);
        assert!(dot.starts_with("graph fullerene_r2_t1 {"));
    }

    #[test]
    fn triangulation_export_has_26_nodes_and_72_edges() {
        let (_, t) = pair(2, 1);
        let dot = emit_dot_triangulation(&t);
        assert_eq!(count_lines(&dot, |l| l.contains("[pos=")), 26);
        assert_eq!(count_lines(&dot, |l| l.contains(" -- ")), 72);
    }

    #[test]
    fn output_is_byte_identical_across_runs() {
        let (g1, t1) = pair(3, 2);
        let (g2, t2) = pair(3, 2);
        assert_eq!(emit_dot_fullerene(&g1, &t1), emit_dot_fullerene(&g2, &t2));
        assert_eq!(emit_dot_triangulation(&t1), emit_dot_triangulation(&t2));
    }

    #[test]
    fn poles_sit_at_the_layout_extremes() {
        let (_, t) = pair(3, 1);
        let pos = layout(&t);
        let radius = |p: (f64, f64)| (p.0 * p.0 + p.1 * p.1).sqrt();
        assert!(radius(pos[t.north as usize]) < 1e-9);
        let south_r = radius(pos[t.south as usize]);
        for (v, &p) in pos.iter().enumerate() {
            if v as u32 != t.south {
                assert!(radius(p) < south_r + 1e-9);
            }
        }
    }
}
