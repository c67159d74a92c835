//! Independent brute-force references and deterministic instance
//! generation. Everything here favors obviousness over speed and is gated
//! to small sizes; the main library must never call into this module except
//! from tests.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use rand::distributions::{Distribution, Uniform};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::plane_graph::{Dart, EdgeId, NodeId, PlaneGraph, Walk};
use crate::reduce::{RawGraph, RawLink};
use crate::weight::{Finite, Infinite, Weight};

/// Deterministic generation parameters.
#[derive(Clone, Debug)]
pub struct GenSpec {
    pub n: usize,
    pub seed: u64,
    pub w_min: i64,
    pub w_max: i64,
    pub mode: GenMode,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenMode {
    /// Full random triangulation grown by repeated face splits; both
    /// directions of every link present.
    Triangulation,
    /// Triangulation thinned by connectivity-preserving edge deletions,
    /// with random absent directions and occasional explicit infinite arcs.
    Sparse,
}

impl GenSpec {
    pub fn tri(n: usize, seed: u64) -> GenSpec {
        GenSpec {
            n,
            seed,
            w_min: 0,
            w_max: 9,
            mode: GenMode::Triangulation,
        }
    }

    pub fn sparse(n: usize, seed: u64) -> GenSpec {
        GenSpec {
            n,
            seed,
            w_min: 0,
            w_max: 9,
            mode: GenMode::Sparse,
        }
    }
}

/// Grow a random plane triangulation by inserting each new node into a
/// uniformly random face and connecting it to the three corners, then apply
/// the mode's thinning. Deterministic per spec.
pub fn gen_planar(spec: &GenSpec) -> RawGraph {
    assert!(spec.n >= 3, "generator needs n >= 3");
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut edges: Vec<(NodeId, NodeId)> = vec![(0, 1), (1, 2), (2, 0)];
    let mut rot: Vec<Vec<EdgeId>> = vec![vec![0, 2], vec![1, 0], vec![2, 1]];
    // Faces as dart triples in walk order.
    let mut faces: Vec<[Dart; 3]> = vec![
        [Dart::forward(0), Dart::forward(1), Dart::forward(2)],
        [Dart::backward(0), Dart::backward(2), Dart::backward(1)],
    ];
    let tail = |edges: &Vec<(NodeId, NodeId)>, d: Dart| {
        let (u, v) = edges[d.edge()];
        if d.is_forward() {
            u
        } else {
            v
        }
    };
    for x in 3..spec.n {
        let fi = rng.gen_range(0..faces.len());
        let [d1, d2, d3] = faces[fi];
        let (a, b, c) = (
            tail(&edges, d1),
            tail(&edges, d2),
            tail(&edges, d3),
        );
        rot.push(Vec::new());
        let mut attach = |edges: &mut Vec<(NodeId, NodeId)>,
                          rot: &mut Vec<Vec<EdgeId>>,
                          corner: NodeId,
                          arrival: EdgeId| {
            let e = edges.len();
            edges.push((corner, x));
            let pos = rot[corner]
                .iter()
                .position(|&f| f == arrival)
                .expect("arrival edge in rotation");
            rot[corner].insert(pos, e);
            rot[x].push(e);
            e
        };
        let ea = attach(&mut edges, &mut rot, a, d3.edge());
        let eb = attach(&mut edges, &mut rot, b, d1.edge());
        let ec = attach(&mut edges, &mut rot, c, d2.edge());
        faces[fi] = [d1, Dart::forward(eb), Dart::backward(ea)];
        faces.push([d2, Dart::forward(ec), Dart::backward(eb)]);
        faces.push([d3, Dart::forward(ea), Dart::backward(ec)]);
    }

    let mut alive = vec![true; edges.len()];
    if spec.mode == GenMode::Sparse && spec.n > 3 {
        // Delete a random subset of edges, keeping the graph connected.
        let mut order: Vec<EdgeId> = (0..edges.len()).collect();
        order.shuffle(&mut rng);
        let target = edges.len() * 2 / 5;
        let mut deleted = 0;
        for e in order {
            if deleted >= target {
                break;
            }
            alive[e] = false;
            if connected_without(spec.n, &edges, &alive) {
                deleted += 1;
            } else {
                alive[e] = true;
            }
        }
    }

    let wdist = Uniform::new_inclusive(spec.w_min, spec.w_max);
    let mut links = Vec::new();
    let mut edge_new = vec![usize::MAX; edges.len()];
    for (e, &(u, v)) in edges.iter().enumerate() {
        if !alive[e] {
            continue;
        }
        let mut dir = |rng: &mut ChaCha8Rng| -> Option<Weight> {
            if spec.mode == GenMode::Sparse {
                match rng.gen_range(0..8) {
                    0 | 1 => None,
                    2 => Some(Infinite),
                    _ => Some(Finite(wdist.sample(rng))),
                }
            } else {
                Some(Finite(wdist.sample(rng)))
            }
        };
        let mut w_uv = dir(&mut rng);
        let w_vu = dir(&mut rng);
        if w_uv.is_none() && w_vu.is_none() {
            w_uv = Some(Finite(wdist.sample(&mut rng)));
        }
        edge_new[e] = links.len();
        links.push(RawLink { u, v, w_uv, w_vu });
    }
    let rot = rot
        .into_iter()
        .map(|list| {
            list.into_iter()
                .filter(|&e| alive[e])
                .map(|e| edge_new[e])
                .collect()
        })
        .collect();
    RawGraph {
        n_nodes: spec.n,
        links,
        rot,
    }
}

fn connected_without(n: usize, edges: &[(NodeId, NodeId)], alive: &[bool]) -> bool {
    let mut adj = vec![Vec::new(); n];
    for (e, &(u, v)) in edges.iter().enumerate() {
        if alive[e] {
            adj[u].push(v);
            adj[v].push(u);
        }
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    let mut count = 1;
    while let Some(x) = stack.pop() {
        for &y in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                count += 1;
                stack.push(y);
            }
        }
    }
    count == n
}

/// Exact optimum over all simple non-degenerate cycles by exhaustive
/// search; a shortest non-degenerate closed walk is realized by a simple
/// cycle of at least three darts, since splitting a closed walk at a
/// repeated node keeps both parts non-degenerate and nonnegative weights
/// make one part no heavier.
pub fn enum_simple_nondegenerate_cycles(g: &PlaneGraph) -> Result<(Weight, Option<Walk>)> {
    if g.n_nodes() > 14 {
        return Err(Error::TooLarge(g.n_nodes(), 14));
    }
    let n = g.n_nodes();
    let mut best: Option<(i64, Vec<Dart>)> = None;
    let mut on_path = vec![false; n];
    let mut stack: Vec<Dart> = Vec::new();
    fn dfs(
        g: &PlaneGraph,
        start: NodeId,
        at: NodeId,
        weight: i64,
        on_path: &mut Vec<bool>,
        stack: &mut Vec<Dart>,
        best: &mut Option<(i64, Vec<Dart>)>,
    ) {
        if let Some((bw, _)) = best {
            if weight >= *bw {
                return;
            }
        }
        for d in g.darts_from(at) {
            let Finite(w) = g.weight(d) else { continue };
            let y = g.head(d);
            if y == start {
                if stack.len() >= 2 {
                    let total = weight + w;
                    if best.as_ref().map_or(true, |(bw, _)| total < *bw) {
                        let mut darts = stack.clone();
                        darts.push(d);
                        *best = Some((total, darts));
                    }
                }
            } else if y > start && !on_path[y] {
                on_path[y] = true;
                stack.push(d);
                dfs(g, start, y, weight + w, on_path, stack, best);
                stack.pop();
                on_path[y] = false;
            }
        }
    }
    for s in 0..n {
        on_path[s] = true;
        dfs(g, s, s, 0, &mut on_path, &mut stack, &mut best);
        on_path[s] = false;
    }
    Ok(match best {
        Some((w, darts)) => {
            let walk = Walk::new(darts);
            debug_assert!(walk.is_simple(g) && !walk.is_degenerate(g));
            (Finite(w), Some(walk))
        }
        None => (Infinite, None),
    })
}

/// Global minimum cut by max-flow: fix node 0 and take the minimum s-t cut
/// over all pairs involving it, which matches the minimum over all ordered
/// pairs. Infinite capacities become a sentinel above the total finite
/// weight, audited on output.
pub fn min_cut_maxflow(raw: &RawGraph) -> Result<Weight> {
    if raw.n_nodes > 60 {
        return Err(Error::TooLarge(raw.n_nodes, 60));
    }
    let n = raw.n_nodes;
    if n < 2 {
        return Ok(Infinite);
    }
    let arcs = raw.arcs();
    let total: i64 = arcs
        .iter()
        .filter_map(|&(_, _, w)| w.as_finite())
        .sum();
    let sentinel = total + 1;
    let caps: Vec<(NodeId, NodeId, i64)> = arcs
        .iter()
        .map(|&(u, v, w)| (u, v, w.as_finite().unwrap_or(sentinel)))
        .collect();
    let mut best = i64::MAX;
    for t in 1..n {
        best = best.min(max_flow(n, &caps, 0, t));
        best = best.min(max_flow(n, &caps, t, 0));
    }
    if best >= sentinel {
        Ok(Infinite)
    } else {
        Ok(Finite(best))
    }
}

/// Edmonds-Karp with BFS augmenting paths.
fn max_flow(n: usize, caps: &[(NodeId, NodeId, i64)], s: NodeId, t: NodeId) -> i64 {
    // Residual arcs: forward with capacity, backward with 0.
    let mut head = Vec::new();
    let mut cap = Vec::new();
    let mut adj = vec![Vec::new(); n];
    for &(u, v, c) in caps {
        adj[u].push(head.len());
        head.push(v);
        cap.push(c);
        adj[v].push(head.len());
        head.push(u);
        cap.push(0);
    }
    let mut flow: i64 = 0;
    loop {
        let mut prev_arc = vec![usize::MAX; n];
        let mut queue = std::collections::VecDeque::new();
        queue.push_back(s);
        let mut seen = vec![false; n];
        seen[s] = true;
        while let Some(x) = queue.pop_front() {
            if x == t {
                break;
            }
            for &a in &adj[x] {
                let y = head[a];
                if cap[a] > 0 && !seen[y] {
                    seen[y] = true;
                    prev_arc[y] = a;
                    queue.push_back(y);
                }
            }
        }
        if !seen[t] {
            return flow;
        }
        let mut push = i64::MAX;
        let mut x = t;
        while x != s {
            let a = prev_arc[x];
            push = push.min(cap[a]);
            x = head[a ^ 1];
        }
        let mut x = t;
        while x != s {
            let a = prev_arc[x];
            cap[a] -= push;
            cap[a ^ 1] += push;
            x = head[a ^ 1];
        }
        flow += push;
    }
}

/// Textbook Dijkstra from `src` over the raw arcs, infinite arcs excluded.
pub fn dijkstra_raw(raw: &RawGraph, src: NodeId) -> Vec<Weight> {
    let mut adj = vec![Vec::new(); raw.n_nodes];
    for (u, v, w) in raw.arcs() {
        if let Finite(x) = w {
            adj[u].push((v, x));
        }
    }
    dijkstra_adj(&adj, src)
}

fn dijkstra_adj(adj: &[Vec<(NodeId, i64)>], src: NodeId) -> Vec<Weight> {
    let n = adj.len();
    let mut dist: Vec<Weight> = vec![Infinite; n];
    dist[src] = Finite(0);
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0i64, src)));
    while let Some(Reverse((d, x))) = heap.pop() {
        if dist[x] != Finite(d) {
            continue;
        }
        for &(y, w) in &adj[x] {
            let nd = d + w;
            if dist[y] > Finite(nd) {
                dist[y] = Finite(nd);
                heap.push(Reverse((nd, y)));
            }
        }
    }
    dist
}

/// Exact distances for the given pairs by one Dijkstra per distinct source.
pub fn pairwise_dijkstra(g: &PlaneGraph, pairs: &[(NodeId, NodeId)]) -> Vec<Weight> {
    pairs
        .iter()
        .map(|&(s, t)| dijkstra_plane_oracle(g, s)[t])
        .collect()
}

/// Independent Dijkstra over a plane graph's darts (infinite darts absent).
pub fn dijkstra_plane_oracle(g: &PlaneGraph, src: NodeId) -> Vec<Weight> {
    let mut adj = vec![Vec::new(); g.n_nodes()];
    for x in 0..g.n_nodes() {
        for d in g.darts_from(x) {
            if let Finite(w) = g.weight(d) {
                adj[x].push((g.head(d), w));
            }
        }
    }
    dijkstra_adj(&adj, src)
}

/// Quadratic Bellman-Ford reference for cross-checking distances.
pub fn bellman_ford(g: &PlaneGraph, src: NodeId) -> Vec<Weight> {
    let n = g.n_nodes();
    let mut dist: Vec<Weight> = vec![Infinite; n];
    dist[src] = Finite(0);
    for _ in 0..n {
        let mut changed = false;
        for e in 0..g.n_edges() {
            for d in [Dart::forward(e), Dart::backward(e)] {
                if let (Finite(du), Finite(w)) = (dist[g.tail(d)], g.weight(d)) {
                    if dist[g.head(d)] > Finite(du + w) {
                        dist[g.head(d)] = Finite(du + w);
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }
    dist
}

/// Shortest closed-walk weight: the minimum over arcs `uv` of
/// `w(uv) + d(v, u)`, valid because every closed walk contains such a
/// configuration and nonnegativity makes the minimum attained.
pub fn shortest_cycle_closed_walk(raw: &RawGraph) -> Weight {
    let n = raw.n_nodes;
    let mut best = Infinite;
    let mut dist_from = vec![None; n];
    for (u, v, w) in raw.arcs() {
        let Finite(wx) = w else { continue };
        if dist_from[v].is_none() {
            dist_from[v] = Some(dijkstra_raw(raw, v));
        }
        let d = dist_from[v].as_ref().unwrap()[u];
        best = best.min(Finite(wx) + d);
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reduce;

    #[test]
    fn generator_is_deterministic() {
        let a = gen_planar(&GenSpec::tri(50, 1));
        let b = gen_planar(&GenSpec::tri(50, 1));
        assert_eq!(a.n_nodes, b.n_nodes);
        assert_eq!(a.links.len(), b.links.len());
        for (x, y) in a.links.iter().zip(&b.links) {
            assert_eq!((x.u, x.v, x.w_uv, x.w_vu), (y.u, y.v, y.w_uv, y.w_vu));
        }
        assert_eq!(a.rot, b.rot);
    }

    #[test]
    fn generator_output_validates() {
        for seed in 0..20 {
            let raw = gen_planar(&GenSpec::tri(50, seed));
            raw.validate().unwrap();
            let g = raw.to_bidirected_plane(Infinite).unwrap();
            // Sphere triangulation: 2n - 4 faces, all triangles.
            assert_eq!(g.n_faces(), 2 * 50 - 4);
            assert!(g.faces().iter().all(|f| f.len() == 3));
            let raws = gen_planar(&GenSpec::sparse(50, seed));
            raws.validate().unwrap();
        }
    }

    #[test]
    fn face_size_sum_equals_dart_count() {
        let raw = gen_planar(&GenSpec::tri(30, 7));
        let g = raw.to_bidirected_plane(Infinite).unwrap();
        let total: usize = g.faces().iter().map(|f| f.len()).sum();
        assert_eq!(total, g.n_darts());
    }

    #[test]
    fn triangle_cycle_enumeration() {
        let raw = gen_planar(&GenSpec::tri(3, 5));
        let g = raw.to_bidirected_plane(Infinite).unwrap();
        let (w, c) = enum_simple_nondegenerate_cycles(&g).unwrap();
        // The triangle has both orientations available.
        assert!(w.is_finite());
        assert_eq!(c.unwrap().len(), 3);
    }

    #[test]
    fn dag_has_no_cycles() {
        let links = vec![
            RawLink { u: 0, v: 1, w_uv: Some(Finite(1)), w_vu: None },
            RawLink { u: 1, v: 2, w_uv: Some(Finite(1)), w_vu: None },
            RawLink { u: 2, v: 0, w_uv: None, w_vu: Some(Finite(1)) },
        ];
        let rot = vec![vec![0, 2], vec![1, 0], vec![2, 1]];
        let raw = RawGraph { n_nodes: 3, links, rot };
        let g = raw.to_bidirected_plane(Infinite).unwrap();
        let (w, c) = enum_simple_nondegenerate_cycles(&g).unwrap();
        assert!(w.is_infinite());
        assert!(c.is_none());
        assert!(shortest_cycle_closed_walk(&raw).is_infinite());
    }

    #[test]
    fn maxflow_on_four_node_example() {
        let raw = reduce::tests::four_node_example();
        assert_eq!(min_cut_maxflow(&raw).unwrap(), Finite(5));
    }

    #[test]
    fn maxflow_disconnected_pair_is_zero() {
        let links = vec![RawLink { u: 0, v: 1, w_uv: Some(Finite(5)), w_vu: None }];
        let rot = vec![vec![0], vec![0]];
        let raw = RawGraph { n_nodes: 2, links, rot };
        // 1 cannot reach 0 at all, so the empty cut works.
        assert_eq!(min_cut_maxflow(&raw).unwrap(), Finite(0));
    }

    #[test]
    fn maxflow_strongly_connected_two_cycle() {
        let links = vec![RawLink {
            u: 0,
            v: 1,
            w_uv: Some(Finite(5)),
            w_vu: Some(Finite(7)),
        }];
        let rot = vec![vec![0], vec![0]];
        let raw = RawGraph { n_nodes: 2, links, rot };
        assert_eq!(min_cut_maxflow(&raw).unwrap(), Finite(5));
    }

    #[test]
    fn maxflow_infinite_arcs_audited() {
        let links = vec![RawLink {
            u: 0,
            v: 1,
            w_uv: Some(Infinite),
            w_vu: Some(Infinite),
        }];
        let rot = vec![vec![0], vec![0]];
        let raw = RawGraph { n_nodes: 2, links, rot };
        assert!(min_cut_maxflow(&raw).unwrap().is_infinite());
    }

    #[test]
    fn dijkstra_matches_bellman_ford() {
        for seed in 0..10 {
            let raw = gen_planar(&GenSpec::sparse(40, seed));
            let g = raw.to_bidirected_plane(Infinite).unwrap();
            let a = dijkstra_plane_oracle(&g, 0);
            let b = bellman_ford(&g, 0);
            assert_eq!(a, b);
        }
    }

    #[test]
    fn closed_walk_oracle_on_example() {
        let raw = reduce::tests::four_node_example();
        assert_eq!(shortest_cycle_closed_walk(&raw), Finite(6));
    }

    #[test]
    fn tiny_solvers_match_oracles() {
        for seed in 0..60 {
            let raw = gen_planar(&GenSpec::sparse(3, seed));
            let cut = reduce::min_cut(&raw, &Default::default()).unwrap();
            assert_eq!(cut.weight, min_cut_maxflow(&raw).unwrap(), "seed {seed}");
            let cyc = reduce::shortest_cycle(&raw, &Default::default()).unwrap();
            assert_eq!(cyc.weight, shortest_cycle_closed_walk(&raw), "seed {seed}");
        }
    }
}
