//! Machine-checked certificates for the glued-lattice fullerene family.
//!
//! [`certify`] builds one family member, runs every structural check, the
//! exact diameter, the dual-distance bound and the path-cut bound, and
//! assembles a [`Certificate`]. [`scan`] certifies the whole family up to
//! a radius and reports the smallest member whose diameter falls below the
//! conjectured floor `⌊√(5n/3)⌋ − 1`.

use serde::{Deserialize, Serialize};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::lattice::build_patch;
use crate::metrics::{self, bfs, bfs_tree, distance_table, path_cut_size};
use crate::surface::{dualize, glue, validate_triangulation, CubicPlaneGraph, SphereTriangulation};
use crate::{Error, Graph, Result, VertexId};

/// `⌊√(5n/3)⌋ − 1`, the conjectured diameter floor, computed with exact
/// integer arithmetic: the answer is one less than the largest `k` with
/// `3k² ≤ 5n`, so no floating-point floor can misfire at perfect-square
/// boundaries. Callers pass fullerene orders (`n` even, `n ≥ 20`); the
/// function computes for any `n`.
pub fn conjecture_bound(n: u64) -> u64 {
    let five_n = 5 * n;
    let mut k = (five_n / 3).isqrt();
    while 3 * (k + 1) * (k + 1) <= five_n {
        k += 1;
    }
    while k > 0 && 3 * k * k > five_n {
        k -= 1;
    }
    k.saturating_sub(1)
}

/// `√(2n/3 − 5/18) − 1/2`, the published diameter lower bound, as a float
/// for reporting.
pub fn diameter_lower_bound(n: u64) -> f64 {
    (2.0 * n as f64 / 3.0 - 5.0 / 18.0).sqrt() - 0.5
}

/// Exact test of `d ≥ √(2n/3 − 5/18) − 1/2`, done in integers:
/// `9(2d+1)² ≥ 24n − 10`.
pub fn lower_bound_holds(n: u64, d: u64) -> bool {
    let lhs = 9 * (2 * d + 1) * (2 * d + 1);
    let rhs = 24 * n - 10;
    lhs >= rhs
}

/// The identity `√(4n/3) = 4r` for `n = 12r²`, checked in exact integers.
pub fn sqrt_bound_identity(r: u32) -> bool {
    let n = 12 * u64::from(r) * u64::from(r);
    if 4 * n % 3 != 0 {
        return false;
    }
    let q = 4 * n / 3;
    let s = q.isqrt();
    s * s == q && s == 4 * u64::from(r)
}

/// All bridges of a connected simple graph, by depth-first lowpoint
/// search, as normalized vertex pairs in sorted order.
pub fn bridges<G: Graph + ?Sized>(g: &G) -> Vec<(VertexId, VertexId)> {
    let n = g.vertex_count();
    const UNSEEN: u32 = u32::MAX;
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![UNSEEN; n];
    let mut timer = 0u32;
    let mut out = Vec::new();

    for root in 0..n as VertexId {
        if disc[root as usize] != UNSEEN {
            continue;
        }
        disc[root as usize] = timer;
        low[root as usize] = timer;
        timer += 1;
        let mut stack: Vec<(VertexId, VertexId, usize)> = vec![(root, VertexId::MAX, 0)];
        while let Some(frame) = stack.last_mut() {
            let (v, parent, idx) = (frame.0, frame.1, frame.2);
            if idx < g.degree(v) {
                frame.2 += 1;
                let w = g.neighbors(v)[idx];
                if disc[w as usize] == UNSEEN {
                    disc[w as usize] = timer;
                    low[w as usize] = timer;
                    timer += 1;
                    stack.push((w, v, 0));
                } else if w != parent {
                    low[v as usize] = low[v as usize].min(disc[w as usize]);
                }
            } else {
                stack.pop();
                if let Some(up) = stack.last() {
                    let p = up.0;
                    low[p as usize] = low[p as usize].min(low[v as usize]);
                    if low[v as usize] > disc[p as usize] {
                        out.push((p.min(v), p.max(v)));
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// Structural fullerene checks on an embedded cubic graph.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct FullereneReport {
    pub cubic: bool,
    pub connected: bool,
    pub bridgeless: bool,
    /// All faces have length 5 or 6, and retracing the rotation system
    /// reproduces the face list.
    pub faces: bool,
    /// Exactly twelve pentagonal faces.
    pub pentagons: bool,
    /// `V − E + F = 2`.
    pub euler: bool,
}

impl FullereneReport {
    pub fn all_pass(&self) -> bool {
        self.cubic && self.connected && self.bridgeless && self.faces && self.pentagons && self.euler
    }
}

/// Run every fullerene check, reporting outcomes instead of failing.
pub fn verify_fullerene(g: &CubicPlaneGraph) -> FullereneReport {
    let n = g.vertex_count();
    let cubic = (0..n as VertexId).all(|v| g.degree(v) == 3);
    let connected = n > 0
        && metrics::bfs_raw(g, 0)
            .iter()
            .all(|&d| d != u32::MAX);
    let bridgeless = connected && bridges(g).is_empty();

    let lengths_ok = g.faces.iter().all(|f| f.len() == 5 || f.len() == 6);
    let retrace_ok = match crate::surface::faces_from_rotation(&g.adjacency) {
        Ok(traced) => {
            let canon = |faces: &[Vec<VertexId>]| {
                let mut sets: Vec<Vec<VertexId>> = faces
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
            canon(&traced) == canon(&g.faces)
        }
        Err(_) => false,
    };
    let faces = lengths_ok && retrace_ok;
    let pentagons = g.pentagon_count() == 12;
    let euler = n as i64 - g.edge_count() as i64 + g.face_count() as i64 == 2;

    FullereneReport {
        cubic,
        connected,
        bridgeless,
        faces,
        pentagons,
        euler,
    }
}

/// How to exercise the dual-distance bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DualBoundMode {
    /// Exhaustive up to 200 vertices, sampled above.
    Auto,
    Exhaustive,
    Sampled,
    Skip,
}

const EXHAUSTIVE_LIMIT: usize = 200;
const SAMPLE_SIDE: usize = 128;
const SAMPLE_SEED: u64 = 0x05ee_d0fd_15c5;

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn sample_distinct(count: usize, n: usize, state: &mut u64) -> Vec<VertexId> {
    let count = count.min(n);
    let mut picked = vec![false; n];
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let v = (splitmix64(state) % n as u64) as usize;
        if !picked[v] {
            picked[v] = true;
            out.push(v as VertexId);
        }
    }
    out.sort_unstable();
    out
}

/// A quadruple violating the dual-distance bound.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct DualBoundViolation {
    pub a: VertexId,
    pub b: VertexId,
    pub face_u: u32,
    pub face_v: u32,
    pub dist_g: u32,
    pub dist_dual: u32,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DualBoundReport {
    pub mode: DualBoundMode,
    pub quadruples_checked: u64,
    pub violation: Option<DualBoundViolation>,
}

impl DualBoundReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

/// Check `dist_G(A,B) ≤ 2·dist_*(u,v) + 3` over vertex pairs `(A, B)` and
/// faces `u` incident to `A`, `v` incident to `B`, where face `i` of `g`
/// is vertex `i` of the dual graph `dual_adj`.
pub fn verify_dual_distance_bound(
    g: &CubicPlaneGraph,
    dual_adj: &[Vec<VertexId>],
    mode: DualBoundMode,
) -> Result<DualBoundReport> {
    let n = g.vertex_count();
    if g.faces.len() != dual_adj.len() {
        return Err(Error::InvalidTriangulation(format!(
            "face count {} does not match dual vertex count {}",
            g.faces.len(),
            dual_adj.len()
        )));
    }
    let resolved = match mode {
        DualBoundMode::Auto => {
            if n <= EXHAUSTIVE_LIMIT {
                DualBoundMode::Exhaustive
            } else {
                DualBoundMode::Sampled
            }
        }
        m => m,
    };
    if resolved == DualBoundMode::Skip {
        return Ok(DualBoundReport {
            mode: resolved,
            quadruples_checked: 0,
            violation: None,
        });
    }

    let incidence = g.incident_faces();
    let dual_dist = distance_table(&dual_adj.to_vec())?;

    let (sources, targets): (Vec<VertexId>, Vec<VertexId>) = match resolved {
        DualBoundMode::Exhaustive => {
            let all: Vec<VertexId> = (0..n as VertexId).collect();
            (all.clone(), all)
        }
        DualBoundMode::Sampled => {
            let mut state = SAMPLE_SEED;
            (
                sample_distinct(SAMPLE_SIDE, n, &mut state),
                sample_distinct(SAMPLE_SIDE, n, &mut state),
            )
        }
        _ => unreachable!(),
    };

    let check_source = |&a: &VertexId| -> Result<(u64, Option<DualBoundViolation>)> {
        let row = bfs(g, a)?;
        let mut checked = 0u64;
        for &b in &targets {
            let d_ab = row.dist[b as usize];
            for &u in &incidence[a as usize] {
                for &v in &incidence[b as usize] {
                    checked += 1;
                    let d_uv = dual_dist[u as usize][v as usize];
                    if d_ab > 2 * d_uv + 3 {
                        return Ok((
                            checked,
                            Some(DualBoundViolation {
                                a,
                                b,
                                face_u: u,
                                face_v: v,
                                dist_g: d_ab,
                                dist_dual: d_uv,
                            }),
                        ));
                    }
                }
            }
        }
        Ok((checked, None))
    };

    #[cfg(feature = "parallel")]
    let per_source: Vec<(u64, Option<DualBoundViolation>)> =
        sources.par_iter().map(check_source).collect::<Result<_>>()?;
    #[cfg(not(feature = "parallel"))]
    let per_source: Vec<(u64, Option<DualBoundViolation>)> =
        sources.iter().map(check_source).collect::<Result<_>>()?;

    let quadruples_checked = per_source.iter().map(|(c, _)| c).sum();
    let violation = per_source.iter().find_map(|(_, v)| *v);
    Ok(DualBoundReport {
        mode: resolved,
        quadruples_checked,
        violation,
    })
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct CutBoundViolation {
    pub source: VertexId,
    pub target: VertexId,
    pub path_len: u32,
    pub cut: u32,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CutBoundReport {
    pub paths_checked: u64,
    pub violation: Option<CutBoundViolation>,
}

impl CutBoundReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

/// For every ordered vertex pair of the triangulation, reconstruct the
/// BFS-tree shortest path and assert `|δ(P)| ≤ 6 + 4k` for its length `k`.
pub fn verify_path_cut_bound(t: &SphereTriangulation) -> Result<CutBoundReport> {
    let n = t.vertex_count() as VertexId;
    let check_source = |&s: &VertexId| -> Result<(u64, Option<CutBoundViolation>)> {
        let (row, parent) = bfs_tree(t, s)?;
        let mut checked = 0u64;
        for v in 0..n {
            let mut path = vec![v];
            let mut cur = v;
            while cur != s {
                cur = parent[cur as usize];
                path.push(cur);
            }
            let k = row.dist[v as usize];
            let cut = path_cut_size(t, &path)? as u32;
            checked += 1;
            if cut > 6 + 4 * k {
                return Ok((
                    checked,
                    Some(CutBoundViolation {
                        source: s,
                        target: v,
                        path_len: k,
                        cut,
                    }),
                ));
            }
        }
        Ok((checked, None))
    };

    let sources: Vec<VertexId> = (0..n).collect();
    #[cfg(feature = "parallel")]
    let per_source: Vec<(u64, Option<CutBoundViolation>)> =
        sources.par_iter().map(check_source).collect::<Result<_>>()?;
    #[cfg(not(feature = "parallel"))]
    let per_source: Vec<(u64, Option<CutBoundViolation>)> =
        sources.iter().map(check_source).collect::<Result<_>>()?;

    Ok(CutBoundReport {
        paths_checked: per_source.iter().map(|(c, _)| c).sum(),
        violation: per_source.iter().find_map(|(_, v)| *v),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckOutcome {
    Pass,
    Fail,
    Skipped,
}

impl CheckOutcome {
    fn from_bool(ok: bool) -> Self {
        if ok {
            CheckOutcome::Pass
        } else {
            CheckOutcome::Fail
        }
    }

    pub fn failed(&self) -> bool {
        matches!(self, CheckOutcome::Fail)
    }
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct Bounds {
    pub theorem1: u32,
    pub conjecture: u32,
    pub lower: f64,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct Checks {
    pub cubic: CheckOutcome,
    pub bridgeless: CheckOutcome,
    pub faces: CheckOutcome,
    pub pentagons: CheckOutcome,
    pub euler: CheckOutcome,
    pub lemma2: CheckOutcome,
    pub cut_bound: CheckOutcome,
    pub monotone: CheckOutcome,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DualBoundRan {
    Exhaustive,
    Sampled,
    Skipped,
}

/// Machine-checkable record of every verified invariant and bound for one
/// `(r, t)` family member. Field order is the serialization order.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Certificate {
    pub r: u32,
    pub t: u32,
    pub n: u32,
    pub diameter: u32,
    pub witness: (VertexId, VertexId),
    pub bounds: Bounds,
    pub checks: Checks,
    pub lemma2_mode: DualBoundRan,
    pub counterexample: bool,
}

impl Certificate {
    /// No check failed, the diameter respects both proven bounds, and the
    /// upper bound equals `√(4n/3)` exactly.
    pub fn all_pass(&self) -> bool {
        let c = &self.checks;
        ![
            c.cubic, c.bridgeless, c.faces, c.pentagons, c.euler, c.lemma2, c.cut_bound,
            c.monotone,
        ]
        .iter()
        .any(CheckOutcome::failed)
            && self.diameter <= self.bounds.theorem1
            && lower_bound_holds(u64::from(self.n), u64::from(self.diameter))
            && sqrt_bound_identity(self.r)
    }
}

/// Build `D_{r,t}` and its glued sphere, run every check, and assemble the
/// certificate. Construction errors (bad `r`, `t`) propagate.
pub fn certify(r: u32, t: u32, mode: DualBoundMode) -> Result<Certificate> {
    let north = build_patch(r)?;
    let south = build_patch(r)?;
    let sphere = glue(&north, &south, t)?;
    let g = dualize(&sphere)?;
    certify_built(&sphere, &g, mode)
}

/// Certify an already-built pair (used by `certify` and by callers that
/// keep the graphs around for export).
pub fn certify_built(
    sphere: &SphereTriangulation,
    g: &CubicPlaneGraph,
    mode: DualBoundMode,
) -> Result<Certificate> {
    let (r, t) = (sphere.r, sphere.twist);
    let n = g.vertex_count() as u32;

    let fullerene = verify_fullerene(g);
    let tri_report = validate_triangulation(sphere);

    let monotone_ok = match metrics::latitude(sphere) {
        Ok(lat) => {
            let failures = metrics::check_monotone_neighbors(sphere, &lat);
            let pole_dist = bfs(sphere, sphere.north)?.dist[sphere.south as usize];
            failures.is_empty()
                && pole_dist == 2 * r
                && sphere.equator.iter().all(|&v| lat.phi[v as usize] == 0)
        }
        Err(_) => false,
    };

    let cut = verify_path_cut_bound(sphere)?;
    let dual_bound = verify_dual_distance_bound(g, &sphere.adjacency, mode)?;

    let witness = metrics::diameter(g)?;
    let conjecture = conjecture_bound(u64::from(n)) as u32;

    let lemma2_outcome = if dual_bound.mode == DualBoundMode::Skip {
        CheckOutcome::Skipped
    } else {
        CheckOutcome::from_bool(dual_bound.passed())
    };

    Ok(Certificate {
        r,
        t,
        n,
        diameter: witness.value,
        witness: witness.pair,
        bounds: Bounds {
            theorem1: 4 * r,
            conjecture,
            lower: diameter_lower_bound(u64::from(n)),
        },
        checks: Checks {
            cubic: CheckOutcome::from_bool(fullerene.cubic),
            bridgeless: CheckOutcome::from_bool(fullerene.connected && fullerene.bridgeless),
            faces: CheckOutcome::from_bool(fullerene.faces && tri_report.all_pass()),
            pentagons: CheckOutcome::from_bool(fullerene.pentagons),
            euler: CheckOutcome::from_bool(fullerene.euler),
            lemma2: lemma2_outcome,
            cut_bound: CheckOutcome::from_bool(cut.passed()),
            monotone: CheckOutcome::from_bool(monotone_ok),
        },
        lemma2_mode: match dual_bound.mode {
            DualBoundMode::Exhaustive => DualBoundRan::Exhaustive,
            DualBoundMode::Sampled => DualBoundRan::Sampled,
            _ => DualBoundRan::Skipped,
        },
        counterexample: witness.value < conjecture,
    })
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct InputBounds {
    pub conjecture: u32,
    pub lower: f64,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct InputChecks {
    pub cubic: CheckOutcome,
    pub bridgeless: CheckOutcome,
    pub faces: CheckOutcome,
    pub pentagons: CheckOutcome,
    pub euler: CheckOutcome,
    pub lemma2: CheckOutcome,
}

/// Certificate for an arbitrary embedded fullerene, without the family
/// provenance fields.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InputReport {
    pub n: u32,
    pub diameter: u32,
    pub witness: (VertexId, VertexId),
    pub bounds: InputBounds,
    pub checks: InputChecks,
    pub lemma2_mode: DualBoundRan,
    pub counterexample: bool,
}

impl InputReport {
    pub fn all_pass(&self) -> bool {
        let c = &self.checks;
        ![c.cubic, c.bridgeless, c.faces, c.pentagons, c.euler, c.lemma2]
            .iter()
            .any(CheckOutcome::failed)
            && lower_bound_holds(u64::from(self.n), u64::from(self.diameter))
    }
}

/// Run the fullerene checks, the exact diameter and the dual-distance
/// bound on an arbitrary embedded cubic graph (the dual is rebuilt from
/// the face list).
pub fn check_embedded(g: &CubicPlaneGraph, mode: DualBoundMode) -> Result<InputReport> {
    let fullerene = verify_fullerene(g);
    let dual_bound = if fullerene.all_pass() {
        let dual_adj = g.face_adjacency()?;
        verify_dual_distance_bound(g, &dual_adj, mode)?
    } else {
        // A broken face structure makes the dual meaningless.
        DualBoundReport {
            mode: DualBoundMode::Skip,
            quadruples_checked: 0,
            violation: None,
        }
    };
    let witness = metrics::diameter(g)?;
    let n = g.vertex_count() as u32;
    let conjecture = conjecture_bound(u64::from(n)) as u32;
    let lemma2 = if dual_bound.mode == DualBoundMode::Skip {
        CheckOutcome::Skipped
    } else {
        CheckOutcome::from_bool(dual_bound.passed())
    };
    Ok(InputReport {
        n,
        diameter: witness.value,
        witness: witness.pair,
        bounds: InputBounds {
            conjecture,
            lower: diameter_lower_bound(u64::from(n)),
        },
        checks: InputChecks {
            cubic: CheckOutcome::from_bool(fullerene.cubic),
            bridgeless: CheckOutcome::from_bool(fullerene.connected && fullerene.bridgeless),
            faces: CheckOutcome::from_bool(fullerene.faces),
            pentagons: CheckOutcome::from_bool(fullerene.pentagons),
            euler: CheckOutcome::from_bool(fullerene.euler),
            lemma2,
        },
        lemma2_mode: match dual_bound.mode {
            DualBoundMode::Exhaustive => DualBoundRan::Exhaustive,
            DualBoundMode::Sampled => DualBoundRan::Sampled,
            _ => DualBoundRan::Skipped,
        },
        counterexample: witness.value < conjecture,
    })
}

/// Certificates for every `(r, t)` with `2 ≤ r ≤ max_r`, `1 ≤ t ≤ r − 1`,
/// ordered by vertex count then twist.
#[derive(Debug, Clone, Serialize)]
pub struct ScanReport {
    pub certificates: Vec<Certificate>,
}

impl ScanReport {
    pub fn counterexamples(&self) -> Vec<&Certificate> {
        self.certificates.iter().filter(|c| c.counterexample).collect()
    }

    /// Smallest vertex count among counterexamples found.
    pub fn minimum_counterexample_n(&self) -> Option<u32> {
        self.counterexamples().iter().map(|c| c.n).min()
    }

    pub fn all_pass(&self) -> bool {
        self.certificates.iter().all(Certificate::all_pass)
    }
}

pub fn scan(max_r: u32, mode: DualBoundMode) -> Result<ScanReport> {
    if max_r < 2 {
        return Err(Error::InvalidRadius { min: 2, got: max_r });
    }
    let pairs: Vec<(u32, u32)> = (2..=max_r)
        .flat_map(|r| (1..r).map(move |t| (r, t)))
        .collect();

    #[cfg(feature = "parallel")]
    let certificates: Vec<Certificate> = pairs
        .par_iter()
        .map(|&(r, t)| certify(r, t, mode))
        .collect::<Result<_>>()?;
    #[cfg(not(feature = "parallel"))]
    let certificates: Vec<Certificate> = pairs
        .iter()
        .map(|&(r, t)| certify(r, t, mode))
        .collect::<Result<_>>()?;

    Ok(ScanReport { certificates })
}
