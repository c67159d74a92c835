//! Shortest-path trees, face-weight assignment, balanced fundamental-cycle
//! selection over the interdigitating dual tree, and segmented separating
//! cycles for the divide step of the cycle engine.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::plane_graph::{Dart, EdgeId, FaceId, NodeId, PlaneGraph, Walk};
use crate::weight::{Finite, Infinite, Weight};

/// Shortest-path tree with parent darts. Nodes unreachable over finite
/// darts but connected to the root's component are attached through
/// arbitrary darts at distance `Infinite`; every path to them weighs
/// `Infinite`, so tree paths stay shortest. Nodes of other components have
/// no parent.
#[derive(Clone, Debug)]
pub struct SsspTree {
    pub root: NodeId,
    pub parent: Vec<Option<Dart>>,
    pub dist: Vec<Weight>,
    pub depth: Vec<usize>,
}

/// Dijkstra over finite darts with deterministic tie-breaking (lowest node
/// id pops first among equal keys), then breadth-first attachment of the
/// remaining nodes of the root's component at distance `Infinite`.
pub fn sssp(g: &PlaneGraph, root: NodeId) -> SsspTree {
    sssp_masked(g, root, None)
}

/// Like `sssp` but treating one edge as absent in both directions.
pub fn sssp_masked(g: &PlaneGraph, root: NodeId, banned: Option<EdgeId>) -> SsspTree {
    let n = g.n_nodes();
    let mut dist: Vec<Weight> = vec![Infinite; n];
    let mut parent: Vec<Option<Dart>> = vec![None; n];
    let mut done = vec![false; n];
    let mut heap: BinaryHeap<Reverse<(i64, NodeId)>> = BinaryHeap::new();
    dist[root] = Finite(0);
    heap.push(Reverse((0, root)));
    while let Some(Reverse((d, x))) = heap.pop() {
        if done[x] || dist[x] != Finite(d) {
            continue;
        }
        done[x] = true;
        for dart in g.darts_from(x) {
            if Some(dart.edge()) == banned {
                continue;
            }
            let Finite(w) = g.weight(dart) else { continue };
            let y = g.head(dart);
            let nd = d + w;
            if dist[y] > Finite(nd) {
                dist[y] = Finite(nd);
                parent[y] = Some(dart);
                heap.push(Reverse((nd, y)));
            }
        }
    }
    // Attach the rest of the root's component through infinite darts.
    let mut queue: std::collections::VecDeque<NodeId> =
        (0..n).filter(|&x| done[x]).collect();
    while let Some(x) = queue.pop_front() {
        for dart in g.darts_from(x) {
            if Some(dart.edge()) == banned {
                continue;
            }
            let y = g.head(dart);
            if !done[y] {
                done[y] = true;
                parent[y] = Some(dart);
                queue.push_back(y);
            }
        }
    }
    let mut depth = vec![0usize; n];
    let mut order: Vec<NodeId> = (0..n).collect();
    // Depths by repeated resolution: walk up parents, memoizing.
    fn depth_of(
        x: NodeId,
        g: &PlaneGraph,
        parent: &[Option<Dart>],
        depth: &mut [usize],
        known: &mut [bool],
    ) -> usize {
        if known[x] {
            return depth[x];
        }
        let d = match parent[x] {
            None => 0,
            Some(p) => 1 + depth_of(g.tail(p), g, parent, depth, known),
        };
        depth[x] = d;
        known[x] = true;
        d
    }
    let mut known = vec![false; n];
    for x in order.drain(..) {
        depth_of(x, g, &parent, &mut depth, &mut known);
    }
    SsspTree {
        root,
        parent,
        dist,
        depth,
    }
}

/// Tree path from the root to `v`.
pub fn tree_path(g: &PlaneGraph, t: &SsspTree, v: NodeId) -> Walk {
    if v == t.root {
        return Walk::single_node(v);
    }
    let mut darts = Vec::new();
    let mut x = v;
    while let Some(d) = t.parent[x] {
        darts.push(d);
        x = g.tail(d);
    }
    debug_assert_eq!(x, t.root, "node not in the root's tree");
    darts.reverse();
    Walk::new(darts)
}

/// Map each face of the triangulated graph to the face of the parent graph
/// it subdivides. Edge ids below `n_parent_edges` must be parent edges with
/// identical dart ids.
pub fn triangle_face_map(
    parent: &PlaneGraph,
    tri: &PlaneGraph,
    n_parent_edges: usize,
) -> Vec<FaceId> {
    let mut map = vec![usize::MAX; tri.n_faces()];
    let mut stack = Vec::new();
    for f in 0..tri.n_faces() {
        for &d in tri.face_walk(f) {
            if d.edge() < n_parent_edges {
                map[f] = parent.face_of(d);
                stack.push(f);
                break;
            }
        }
    }
    // Chord-only triangles inherit across chords.
    while let Some(f) = stack.pop() {
        for &d in tri.face_walk(f) {
            if d.edge() >= n_parent_edges {
                let g = tri.face_of(d.twin());
                if map[g] == usize::MAX {
                    map[g] = map[f];
                    stack.push(g);
                }
            }
        }
    }
    debug_assert!(map.iter().all(|&f| f != usize::MAX));
    map
}

/// One unit of weight per parent face, placed on its lowest-id triangle;
/// the total equals the parent face count (integer scaling of 1 divided by
/// the face count).
pub fn assign_face_weights(tri: &PlaneGraph, tri_map: &[FaceId], n_parent_faces: usize) -> Vec<i64> {
    let mut weights = vec![0i64; tri.n_faces()];
    let mut seen = vec![false; n_parent_faces];
    for f in 0..tri.n_faces() {
        let orig = tri_map[f];
        if !seen[orig] {
            seen[orig] = true;
            weights[f] = 1;
        }
    }
    debug_assert!(seen.iter().all(|&s| s));
    weights
}

/// Lowest-id non-tree edge whose fundamental cycle in the spanning tree
/// encloses at most three quarters of the total face weight on each side.
/// Computed by accumulating subtree weights over the dual tree of the
/// non-tree edges.
pub fn balanced_fundamental_cycle(
    tri: &PlaneGraph,
    in_tree: &[bool],
    face_weights: &[i64],
) -> Result<EdgeId> {
    let total: i64 = face_weights.iter().sum();
    // Dual forest over faces: one dual edge per non-tree primal edge.
    let nf = tri.n_faces();
    let mut adj: Vec<Vec<(FaceId, EdgeId)>> = vec![Vec::new(); nf];
    for e in 0..tri.n_edges() {
        if in_tree[e] {
            continue;
        }
        let a = tri.face_of(Dart::forward(e));
        let b = tri.face_of(Dart::backward(e));
        adj[a].push((b, e));
        adj[b].push((a, e));
    }
    // Subtree weights below each dual edge, rooted at face 0.
    let mut sub = face_weights.to_vec();
    let mut parent_edge: Vec<Option<(FaceId, EdgeId)>> = vec![None; nf];
    let mut order = Vec::with_capacity(nf);
    let mut visited = vec![false; nf];
    let mut stack = vec![0];
    visited[0] = true;
    while let Some(f) = stack.pop() {
        order.push(f);
        for &(g, e) in &adj[f] {
            if !visited[g] {
                visited[g] = true;
                parent_edge[g] = Some((f, e));
                stack.push(g);
            }
        }
    }
    debug_assert!(visited.iter().all(|&v| v), "dual tree must span all faces");
    for &f in order.iter().rev() {
        if let Some((p, _)) = parent_edge[f] {
            sub[p] += sub[f];
        }
    }
    // Weight strictly below dual edge e = subtree weight of its child face.
    let mut below = vec![None; tri.n_edges()];
    for f in 0..nf {
        if let Some((_, e)) = parent_edge[f] {
            below[e] = Some(sub[f]);
        }
    }
    for e in 0..tri.n_edges() {
        if let Some(s) = below[e] {
            if 4 * s <= 3 * total && 4 * (total - s) <= 3 * total {
                return Ok(e);
            }
        }
    }
    Err(Error::NoBalancedEdge)
}

/// A simple non-degenerate cycle written as shortest path, bridging dart,
/// reversed shortest path.
#[derive(Clone, Debug)]
pub struct SegmentedCycle {
    /// Shortest path from the split node to the bridge tail (may be a
    /// single node).
    pub p1: Walk,
    pub bridge: Dart,
    /// Shortest path from the split node to the bridge head (may be a
    /// single node).
    pub p2: Walk,
    /// p1, then the bridge, then p2 reversed.
    pub cycle: Walk,
}

/// Build the segmented cycle for non-tree edge `x -> y`: the tree paths
/// from the least common ancestor plus the bridging dart. When one
/// endpoint is an ancestor of the other, the corresponding segment is a
/// single node.
pub fn segmented_cycle_from_edge(
    g: &PlaneGraph,
    t: &SsspTree,
    bridge: Dart,
) -> Result<SegmentedCycle> {
    let (x, y) = (g.tail(bridge), g.head(bridge));
    if x == y {
        return Err(Error::DegenerateSeparator);
    }
    // Least common ancestor by depth alignment.
    let (mut a, mut b) = (x, y);
    while t.depth[a] > t.depth[b] {
        a = g.tail(t.parent[a].ok_or(Error::DegenerateSeparator)?);
    }
    while t.depth[b] > t.depth[a] {
        b = g.tail(t.parent[b].ok_or(Error::DegenerateSeparator)?);
    }
    while a != b {
        a = g.tail(t.parent[a].ok_or(Error::DegenerateSeparator)?);
        b = g.tail(t.parent[b].ok_or(Error::DegenerateSeparator)?);
    }
    let s = a;
    let p1 = descend_path(g, t, s, x);
    let p2 = descend_path(g, t, s, y);
    let mut darts = p1.darts.clone();
    darts.push(bridge);
    darts.extend(p2.reversed().darts);
    let cycle = Walk::new(darts);
    debug_assert!(cycle.is_cycle(g));
    debug_assert!(cycle.is_simple(g), "fundamental cycles are simple");
    debug_assert!(!cycle.is_degenerate(g));
    Ok(SegmentedCycle {
        p1,
        bridge,
        p2,
        cycle,
    })
}

fn descend_path(g: &PlaneGraph, t: &SsspTree, top: NodeId, bottom: NodeId) -> Walk {
    if top == bottom {
        return Walk::single_node(top);
    }
    let mut darts = Vec::new();
    let mut x = bottom;
    while x != top {
        let d = t.parent[x].expect("bottom below top in tree");
        darts.push(d);
        x = g.tail(d);
    }
    darts.reverse();
    Walk::new(darts)
}
