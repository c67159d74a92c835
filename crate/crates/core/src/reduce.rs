//! Reductions from minimum cut and shortest cycle on a raw directed planar
//! graph to shortest non-degenerate cycles of derived bidirected plane
//! graphs: bidirect-and-triangulate with mode-dependent filler weights,
//! duality with the triangulation's dual, the degree-reduction split, the
//! two-node degenerate-cycle scan, and certificate lifting.

use std::collections::HashSet;

use crate::cycle_core::{self, Config};
use crate::error::{Error, Result};
use crate::plane_graph::{
    Dart, EdgeId, EdgeRec, GraphBuilder, NodeId, PlaneGraph, Walk,
};
use crate::weight::{Finite, Infinite, Weight};

/// An embedded simple directed graph as supplied by parsers and generators.
/// Antiparallel arc pairs are bundled into one drawn link; a missing
/// direction is `None` and is filled in by the reduction.
#[derive(Clone, Debug)]
pub struct RawGraph {
    pub n_nodes: usize,
    pub links: Vec<RawLink>,
    /// Counterclockwise link ids around each node.
    pub rot: Vec<Vec<usize>>,
}

#[derive(Clone, Debug)]
pub struct RawLink {
    pub u: NodeId,
    pub v: NodeId,
    /// `None` means the direction is absent from the input; a present
    /// direction may carry an explicitly infinite weight.
    pub w_uv: Option<Weight>,
    pub w_vu: Option<Weight>,
}

impl RawGraph {
    pub fn n_arcs(&self) -> usize {
        self.links
            .iter()
            .map(|l| l.w_uv.is_some() as usize + l.w_vu.is_some() as usize)
            .sum()
    }

    pub fn arcs(&self) -> Vec<(NodeId, NodeId, Weight)> {
        let mut out = Vec::new();
        for l in &self.links {
            if let Some(w) = l.w_uv {
                out.push((l.u, l.v, w));
            }
            if let Some(w) = l.w_vu {
                out.push((l.v, l.u, w));
            }
        }
        out
    }

    /// Bidirect without triangulating: absent directions get `filler`.
    /// Validates simplicity and the embedding.
    pub fn to_bidirected_plane(&self, filler: Weight) -> Result<PlaneGraph> {
        let to_w = |w: Option<Weight>| w.unwrap_or(filler);
        let edges = self
            .links
            .iter()
            .map(|l| EdgeRec {
                u: l.u,
                v: l.v,
                w_uv: to_w(l.w_uv),
                w_vu: to_w(l.w_vu),
            })
            .collect();
        PlaneGraph::build_from_rotation(self.n_nodes, edges, self.rot.clone(), None)
    }

    pub fn validate(&self) -> Result<()> {
        for (i, l) in self.links.iter().enumerate() {
            for w in [l.w_uv, l.w_vu].into_iter().flatten() {
                if let Finite(x) = w {
                    if x < 0 {
                        return Err(Error::NegativeWeight(i));
                    }
                }
            }
            if l.w_uv.is_none() && l.w_vu.is_none() {
                return Err(Error::Invalid(format!("link {i} carries no direction")));
            }
        }
        self.to_bidirected_plane(Infinite).map(|_| ())
    }
}

/// Which problem the filler weights serve: 0-weight fillers keep cuts
/// intact, Infinite fillers keep cycles intact.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    MinCut,
    ShortestCycle,
}

impl Mode {
    pub fn filler(self) -> Weight {
        match self {
            Mode::MinCut => Finite(0),
            Mode::ShortestCycle => Infinite,
        }
    }
}

/// Per-edge provenance of the triangulated graph.
#[derive(Clone, Copy, Debug)]
pub struct EdgeOrigin {
    /// Raw link index for edges present in the input.
    pub link: Option<usize>,
    /// Whether the u->v (respectively v->u) weight comes from a raw arc.
    pub fwd_original: bool,
    pub bwd_original: bool,
}

/// Result of `bidirect_and_triangulate`: the triangulation plus provenance.
#[derive(Clone)]
pub struct Triangulated {
    pub graph: PlaneGraph,
    pub origin: Vec<EdgeOrigin>,
    pub n_raw_nodes: usize,
    pub mode: Mode,
}

/// Connect all components of the builder by filler edges and then
/// triangulate every face, adding chords only where no parallel edge would
/// arise. Every added edge gets `filler` weights in both directions and is
/// reported through the returned list. The builder must have at least three
/// nodes overall.
pub(crate) fn connect_and_triangulate(
    b: &mut GraphBuilder,
    filler: Weight,
) -> Result<Vec<EdgeId>> {
    let mut added = Vec::new();
    let mut adjacency: HashSet<(NodeId, NodeId)> = b
        .edges
        .iter()
        .map(|r| (r.u.min(r.v), r.u.max(r.v)))
        .collect();
    if b.n_nodes() < 3 {
        return Err(Error::Invalid(
            "triangulation needs at least three nodes".into(),
        ));
    }

    // Connect components. Any rotation position is valid when joining two
    // distinct components.
    let n = b.n_nodes();
    let mut comp = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let c = reps.len();
        reps.push(start);
        comp[start] = c;
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for &e in &b.rot[x] {
                let y = b.edges[e].other(x);
                if comp[y] == usize::MAX {
                    comp[y] = c;
                    stack.push(y);
                }
            }
        }
    }
    for i in 1..reps.len() {
        let (u, v) = (reps[0], reps[i]);
        let e = b.add_edge_at(u, 0, v, 0, filler, filler);
        adjacency.insert((u.min(v), u.max(v)));
        added.push(e);
    }

    // Trace faces of the connected builder and triangulate each walk.
    let snapshot = b.clone().finish(None)?;
    let walks: Vec<Vec<Dart>> = snapshot.faces().to_vec();
    for walk in walks {
        triangulate_face_walk(b, walk, filler, &mut adjacency, &mut added)?;
    }
    Ok(added)
}

/// Triangulate one face given by its dart walk. Ear cutting with a rescue
/// chord search; both split the walk strictly, and a size-3 walk of a simple
/// graph is always a triangle.
fn triangulate_face_walk(
    b: &mut GraphBuilder,
    walk: Vec<Dart>,
    filler: Weight,
    adjacency: &mut HashSet<(NodeId, NodeId)>,
    added: &mut Vec<EdgeId>,
) -> Result<()> {
    let mut stack = vec![walk];
    while let Some(w) = stack.pop() {
        let k = w.len();
        if k == 3 {
            continue;
        }
        if k < 3 {
            return Err(Error::Invalid(
                "face of size below three cannot be triangulated".into(),
            ));
        }
        let tails: Vec<NodeId> = w.iter().map(|&d| tail_in_builder(b, d)).collect();
        // Corner i sits between darts w[i-1] and w[i] at node tails[i].
        let corner_ok = |x: NodeId, y: NodeId| {
            x != y && !adjacency.contains(&(x.min(y), x.max(y)))
        };
        let mut cut = None;
        for i in 0..k {
            let p = (i + k - 1) % k;
            let q = (i + 1) % k;
            if corner_ok(tails[p], tails[q]) {
                cut = Some((p, q));
                break;
            }
        }
        if cut.is_none() {
            // Rescue: any chord between two non-consecutive walk positions.
            'outer: for p in 0..k {
                for d in 2..k - 1 {
                    let q = (p + d) % k;
                    if corner_ok(tails[p], tails[q]) {
                        cut = Some((p, q));
                        break 'outer;
                    }
                }
            }
        }
        let Some((p, q)) = cut else {
            // All walk nodes pairwise adjacent or equal: impossible for a
            // simple plane graph face of size > 3 with >= 3 distinct nodes.
            return Err(Error::Invalid(
                "face walk admits no chord; graph too small to triangulate".into(),
            ));
        };
        let (x, y) = (tails[p], tails[q]);
        // Chord placement: at position p right after the departure edge, at
        // position q at the index of the arrival edge.
        let pos_x = b.rot_index(x, w[p].edge()) + 1;
        let pos_y = b.rot_index(y, w[(q + k - 1) % k].edge());
        let e = b.add_edge_at(x, pos_x, y, pos_y, filler, filler);
        adjacency.insert((x.min(y), x.max(y)));
        added.push(e);
        // Split into: w[p..q] + (y->x), and w[q..p] + (x->y).
        let chord_xy = if b.edges[e].u == x {
            Dart::forward(e)
        } else {
            Dart::backward(e)
        };
        let take = |from: usize, to: usize| -> Vec<Dart> {
            let mut out = Vec::new();
            let mut i = from;
            while i != to {
                out.push(w[i]);
                i = (i + 1) % k;
            }
            out
        };
        let mut first = take(p, q);
        first.push(chord_xy.twin());
        let mut second = take(q, p);
        second.push(chord_xy);
        stack.push(first);
        stack.push(second);
    }
    Ok(())
}

fn tail_in_builder(b: &GraphBuilder, d: Dart) -> NodeId {
    let rec = &b.edges[d.edge()];
    if d.is_forward() {
        rec.u
    } else {
        rec.v
    }
}

/// Bidirect the raw graph, pad to at least four nodes, connect components,
/// and triangulate every face, with all synthesized weights equal to the
/// mode's filler.
pub fn bidirect_and_triangulate(raw: &RawGraph, mode: Mode) -> Result<Triangulated> {
    raw.validate()?;
    let filler = mode.filler();
    let mut b = GraphBuilder::new(raw.n_nodes);
    let mut origin = Vec::new();
    for (i, l) in raw.links.iter().enumerate() {
        b.edges.push(EdgeRec {
            u: l.u,
            v: l.v,
            w_uv: l.w_uv.unwrap_or(filler),
            w_vu: l.w_vu.unwrap_or(filler),
        });
        origin.push(EdgeOrigin {
            link: Some(i),
            fwd_original: l.w_uv.is_some(),
            bwd_original: l.w_vu.is_some(),
        });
    }
    b.rot = raw.rot.clone();
    while b.n_nodes() < 4 {
        // Isolated-triangle gadget; the connect phase ties it in.
        let a = b.add_node();
        let c = b.add_node();
        let d = b.add_node();
        let e1 = b.add_edge_at(a, 0, c, 0, filler, filler);
        let e2 = b.add_edge_at(c, 1, d, 0, filler, filler);
        let e3 = b.add_edge_at(d, 1, a, 1, filler, filler);
        let _ = (e1, e2, e3);
        for _ in 0..3 {
            origin.push(EdgeOrigin {
                link: None,
                fwd_original: false,
                bwd_original: false,
            });
        }
    }
    let chords = connect_and_triangulate(&mut b, filler)?;
    origin.extend(chords.iter().map(|_| EdgeOrigin {
        link: None,
        fwd_original: false,
        bwd_original: false,
    }));
    let graph = b.finish(None)?;
    debug_assert_eq!(origin.len(), graph.n_edges());
    Ok(Triangulated {
        graph,
        origin,
        n_raw_nodes: raw.n_nodes,
        mode,
    })
}

/// Provenance of nodes after the degree-reduction split.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SplitNode {
    Original(NodeId),
    /// `index`-th path node replacing `original`.
    Copy { original: NodeId, index: usize },
}

/// Map from the split graph back to its parent.
#[derive(Clone, Debug)]
pub struct SplitMap {
    pub node_origin: Vec<SplitNode>,
    /// For original edges, the parent edge id; zero-path edges carry `None`.
    pub edge_origin: Vec<Option<EdgeId>>,
    /// Per split node: the replacement path nodes and the clockwise neighbor
    /// ordering they attach to.
    pub groups: Vec<SplitGroup>,
}

#[derive(Clone, Debug)]
pub struct SplitGroup {
    pub original: NodeId,
    pub path_nodes: Vec<NodeId>,
    pub neighbors: Vec<NodeId>,
}

impl SplitMap {
    pub fn parent_node(&self, x: NodeId) -> NodeId {
        match self.node_origin[x] {
            SplitNode::Original(v) => v,
            SplitNode::Copy { original, .. } => original,
        }
    }
}

/// Replace every node of degree four or more by a zero-weight path, one path
/// node per neighbor in clockwise order. New nodes have degree at most
/// three, so one pass suffices.
pub fn split_high_degree(g: &PlaneGraph) -> (PlaneGraph, SplitMap) {
    let n = g.n_nodes();
    let split: Vec<bool> = (0..n).map(|x| g.degree(x) >= 4).collect();
    let mut node_origin: Vec<SplitNode> = Vec::new();
    let mut new_id = vec![usize::MAX; n];
    for x in 0..n {
        if !split[x] {
            new_id[x] = node_origin.len();
            node_origin.push(SplitNode::Original(x));
        }
    }
    // Surviving endpoints are remapped now; endpoints at split nodes are
    // filled in below with their path copies.
    let mut edges: Vec<EdgeRec> = g
        .edge_records()
        .iter()
        .map(|r| EdgeRec {
            u: if split[r.u] { usize::MAX } else { new_id[r.u] },
            v: if split[r.v] { usize::MAX } else { new_id[r.v] },
            w_uv: r.w_uv,
            w_vu: r.w_vu,
        })
        .collect();
    let mut edge_origin: Vec<Option<EdgeId>> = (0..g.n_edges()).map(Some).collect();
    let mut rot: Vec<Vec<EdgeId>> = (0..n)
        .filter(|&x| !split[x])
        .map(|x| g.rotation(x).to_vec())
        .collect();
    let mut groups = Vec::new();
    for x in 0..n {
        if !split[x] {
            continue;
        }
        // Clockwise = reversed counterclockwise rotation.
        let cw: Vec<EdgeId> = g.rotation(x).iter().rev().copied().collect();
        let d = cw.len();
        let mut path_nodes = Vec::with_capacity(d);
        let mut neighbors = Vec::with_capacity(d);
        for i in 0..d {
            let id = node_origin.len();
            node_origin.push(SplitNode::Copy { original: x, index: i });
            path_nodes.push(id);
            neighbors.push(g.edge(cw[i]).other(x));
            rot.push(Vec::new());
        }
        for i in 0..d {
            let e = cw[i];
            let vi = path_nodes[i];
            if g.edge(e).u == x {
                edges[e].u = vi;
            } else {
                edges[e].v = vi;
            }
        }
        // Path edges, all weight zero in both directions.
        let mut path_edges = Vec::new();
        for i in 0..d - 1 {
            let e = edges.len();
            edges.push(EdgeRec {
                u: path_nodes[i],
                v: path_nodes[i + 1],
                w_uv: Finite(0),
                w_vu: Finite(0),
            });
            edge_origin.push(None);
            path_edges.push(e);
        }
        // Rotations: first node [next, attach], middle [next, attach, prev],
        // last [attach, prev].
        for i in 0..d {
            let vi = path_nodes[i];
            let attach = cw[i];
            let r = &mut rot[vi];
            if i == 0 {
                r.push(path_edges[0]);
                r.push(attach);
            } else if i == d - 1 {
                r.push(attach);
                r.push(path_edges[i - 1]);
            } else {
                r.push(path_edges[i]);
                r.push(attach);
                r.push(path_edges[i - 1]);
            }
        }
        groups.push(SplitGroup {
            original: x,
            path_nodes,
            neighbors,
        });
    }
    let g2 = PlaneGraph::build_from_rotation(node_origin.len(), edges, rot, None)
        .expect("split preserves the embedding");
    (
        g2,
        SplitMap {
            node_origin,
            edge_origin,
            groups,
        },
    )
}

/// Map a non-degenerate cycle of the split graph back to the parent graph:
/// zero-path darts vanish, every other dart maps to its parent edge. Weight
/// is preserved; the result may be non-simple.
pub fn lift_split_cycle(g2: &PlaneGraph, parent: &PlaneGraph, c: &Walk, m: &SplitMap) -> Walk {
    let mut darts = Vec::new();
    for &d in &c.darts {
        let Some(pe) = m.edge_origin[d.edge()] else {
            continue;
        };
        let from = m.parent_node(g2.tail(d));
        let to = m.parent_node(g2.head(d));
        let rec = parent.edge(pe);
        let pd = if (rec.u, rec.v) == (from, to) {
            Dart::forward(pe)
        } else {
            debug_assert_eq!((rec.v, rec.u), (from, to));
            Dart::backward(pe)
        };
        darts.push(pd);
    }
    let lifted = Walk {
        darts,
        anchor: c.anchor.map(|v| m.parent_node(v)),
    };
    debug_assert!(lifted.is_empty() || lifted.chains(parent));
    debug_assert!(lifted.is_empty() || lifted.is_cycle(parent));
    lifted
}

/// Minimum over all edges of the two-node degenerate cycle weight
/// `w(uv) + w(vu)`, with a realizing 2-cycle.
pub fn shortest_degenerate_cycle(g: &PlaneGraph) -> (Weight, Option<Walk>) {
    let mut best = Infinite;
    let mut arg = None;
    for e in 0..g.n_edges() {
        let rec = g.edge(e);
        let w = rec.w_uv + rec.w_vu;
        if w < best {
            best = w;
            arg = Some(e);
        }
    }
    match (best, arg) {
        (Finite(_), Some(e)) => (
            best,
            Some(Walk::new(vec![Dart::forward(e), Dart::backward(e)])),
        ),
        _ => (Infinite, None),
    }
}

/// A global minimum cut: its weight, the raw arcs crossed, and a witness
/// ordered pair disconnected by removing them.
#[derive(Clone, Debug)]
pub struct MinCut {
    pub weight: Weight,
    pub cut_arcs: Vec<(NodeId, NodeId, Weight)>,
    pub witness: Option<(NodeId, NodeId)>,
}

/// A shortest cycle of the raw graph as a closed node walk.
#[derive(Clone, Debug)]
pub struct ShortestCycle {
    pub weight: Weight,
    /// Closed node sequence (first == last) when a finite cycle exists.
    pub nodes: Option<Vec<NodeId>>,
}

/// Global minimum cut via the dual of the 0-filled triangulation. Inputs
/// with at most three nodes are solved by exhaustive edge-subset search.
pub fn min_cut(raw: &RawGraph, cfg: &Config) -> Result<MinCut> {
    raw.validate()?;
    if raw.n_nodes < 2 {
        return Ok(MinCut {
            weight: Infinite,
            cut_arcs: Vec::new(),
            witness: None,
        });
    }
    if raw.n_nodes <= 3 {
        return Ok(min_cut_tiny(raw));
    }
    let tri = bidirect_and_triangulate(raw, Mode::MinCut)?;
    let dual = tri.graph.dual()?;
    let (w, cycle) = cycle_core::shortest_nondegenerate_cycle(&dual, cfg);
    let Some(cycle) = cycle else {
        // Every cut has infinite weight.
        return Ok(MinCut {
            weight: w,
            cut_arcs: Vec::new(),
            witness: None,
        });
    };
    // Dual dart ids equal the primal dart ids they cross.
    let crossed: Vec<Dart> = cycle.darts.clone();
    let mut cut_arcs = Vec::new();
    for &d in &crossed {
        let o = &tri.origin[d.edge()];
        let original = if d.is_forward() {
            o.fwd_original
        } else {
            o.bwd_original
        };
        if original {
            let (u, v) = (tri.graph.tail(d), tri.graph.head(d));
            cut_arcs.push((u, v, tri.graph.weight(d)));
        }
    }
    // Witness: tails of crossed darts are on the source side, heads on the
    // sink side of the dual cycle's Jordan curve.
    let witness = crossed
        .first()
        .map(|&d| (tri.graph.tail(d), tri.graph.head(d)));
    Ok(MinCut {
        weight: w,
        cut_arcs,
        witness,
    })
}

fn min_cut_tiny(raw: &RawGraph) -> MinCut {
    let arcs = raw.arcs();
    let n = raw.n_nodes;
    let m = arcs.len();
    let mut best: Option<(Weight, u32)> = None;
    for mask in 0u32..(1 << m) {
        let mut weight = Weight::ZERO;
        for (i, a) in arcs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                weight = weight + a.2;
            }
        }
        if let Some((bw, _)) = best {
            if weight >= bw {
                continue;
            }
        }
        if disconnected_pair(n, &arcs, mask).is_some() {
            best = Some((weight, mask));
        }
    }
    match best {
        Some((weight, mask)) => {
            let cut_arcs: Vec<_> = arcs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, a)| *a)
                .collect();
            let witness = disconnected_pair(n, &arcs, mask);
            MinCut {
                weight,
                cut_arcs,
                witness,
            }
        }
        None => MinCut {
            weight: Infinite,
            cut_arcs: Vec::new(),
            witness: None,
        },
    }
}

fn disconnected_pair(
    n: usize,
    arcs: &[(NodeId, NodeId, Weight)],
    removed: u32,
) -> Option<(NodeId, NodeId)> {
    for s in 0..n {
        let mut seen = vec![false; n];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for (i, &(a, b, _)) in arcs.iter().enumerate() {
                if removed >> i & 1 == 0 && a == x && !seen[b] {
                    seen[b] = true;
                    stack.push(b);
                }
            }
        }
        if let Some(t) = (0..n).find(|&t| !seen[t]) {
            return Some((s, t));
        }
    }
    None
}

/// Shortest cycle: minimum of the degenerate two-node scan and the lifted
/// shortest non-degenerate cycle of the split Infinite-filled triangulation.
pub fn shortest_cycle(raw: &RawGraph, cfg: &Config) -> Result<ShortestCycle> {
    raw.validate()?;
    if raw.n_nodes <= 3 {
        return Ok(shortest_cycle_tiny(raw));
    }
    let tri = bidirect_and_triangulate(raw, Mode::ShortestCycle)?;
    let (dw, dcycle) = shortest_degenerate_cycle(&tri.graph);
    let (g2, smap) = split_high_degree(&tri.graph);
    let (nw, ncycle) = cycle_core::shortest_nondegenerate_cycle(&g2, cfg);
    let (weight, cycle) = if dw <= nw {
        (dw, dcycle)
    } else {
        (
            nw,
            ncycle.map(|c| lift_split_cycle(&g2, &tri.graph, &c, &smap)),
        )
    };
    let nodes = cycle.filter(|_| weight.is_finite()).map(|c| {
        debug_assert!(c.darts.iter().all(|&d| tri.graph.weight(d).is_finite()));
        c.nodes(&tri.graph)
    });
    Ok(ShortestCycle { weight, nodes })
}

fn shortest_cycle_tiny(raw: &RawGraph) -> ShortestCycle {
    // Exhaustive simple-cycle search over the handful of finite darts.
    let arcs: Vec<(NodeId, NodeId, i64)> = raw
        .arcs()
        .into_iter()
        .filter_map(|(u, v, w)| w.as_finite().map(|x| (u, v, x)))
        .collect();
    let n = raw.n_nodes;
    let mut best: Option<(i64, Vec<NodeId>)> = None;
    fn dfs(
        arcs: &[(NodeId, NodeId, i64)],
        start: NodeId,
        at: NodeId,
        used: &mut Vec<bool>,
        path: &mut Vec<NodeId>,
        weight: i64,
        best: &mut Option<(i64, Vec<NodeId>)>,
    ) {
        for &(a, b, w) in arcs.iter() {
            if a != at {
                continue;
            }
            if b == start {
                let total = weight + w;
                if best.as_ref().map_or(true, |(bw, _)| total < *bw) {
                    let mut cyc = path.clone();
                    cyc.push(start);
                    *best = Some((total, cyc));
                }
            } else if b > start && !used[b] {
                used[b] = true;
                path.push(b);
                dfs(arcs, start, b, used, path, weight + w, best);
                path.pop();
                used[b] = false;
            }
        }
    }
    for s in 0..n {
        let mut used = vec![false; n];
        used[s] = true;
        dfs(&arcs, s, s, &mut used, &mut vec![s], 0, &mut best);
    }
    match best {
        Some((w, nodes)) => ShortestCycle {
            weight: Finite(w),
            nodes: Some(nodes),
        },
        None => ShortestCycle {
            weight: Infinite,
            nodes: None,
        },
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    /// The four-node running example: directed arcs with one bundled
    /// antiparallel pair, embedded so that triangulating adds exactly one
    /// edge.
    pub fn four_node_example() -> RawGraph {
        // Arcs: 0->1 w7, 2->0 w8, 2->1 w1, 1->2 w5, 1->3 w6, 3->1 w9,
        // 2->3 w2.
        let links = vec![
            RawLink { u: 0, v: 1, w_uv: Some(Finite(7)), w_vu: None },
            RawLink { u: 1, v: 2, w_uv: Some(Finite(5)), w_vu: Some(Finite(1)) },
            RawLink { u: 2, v: 0, w_uv: Some(Finite(8)), w_vu: None },
            RawLink { u: 1, v: 3, w_uv: Some(Finite(6)), w_vu: Some(Finite(9)) },
            RawLink { u: 2, v: 3, w_uv: Some(Finite(2)), w_vu: None },
        ];
        let rot = vec![
            vec![0, 2],    // node 0: toward 1 (up), toward 2 (down)
            vec![3, 0, 1], // node 1: toward 3, toward 0, toward 2
            vec![1, 2, 4], // node 2: toward 1, toward 0, toward 3
            vec![3, 4],    // node 3: toward 1, toward 2
        ];
        RawGraph { n_nodes: 4, links, rot }
    }

    #[test]
    fn triangulate_four_node_example() {
        let raw = four_node_example();
        let tri = bidirect_and_triangulate(&raw, Mode::MinCut).unwrap();
        assert_eq!(tri.graph.n_nodes(), 4);
        assert_eq!(tri.graph.n_edges(), 6);
        assert_eq!(tri.graph.n_faces(), 4);
        for f in tri.graph.faces() {
            assert_eq!(f.len(), 3);
        }
        assert_eq!(tri.origin.iter().filter(|o| o.link.is_some()).count(), 5);
        let filler_edges: Vec<usize> = (0..tri.graph.n_edges())
            .filter(|&e| tri.origin[e].link.is_none())
            .collect();
        assert_eq!(filler_edges.len(), 1);
        let rec = tri.graph.edge(filler_edges[0]);
        assert_eq!(rec.w_uv, Finite(0));
        assert_eq!(rec.w_vu, Finite(0));
        let infs = bidirect_and_triangulate(&raw, Mode::ShortestCycle).unwrap();
        let rec = infs.graph.edge(filler_edges[0]);
        assert!(rec.w_uv.is_infinite() && rec.w_vu.is_infinite());
    }

    #[test]
    fn triangulated_input_is_fixpoint() {
        let raw = four_node_example();
        let tri = bidirect_and_triangulate(&raw, Mode::MinCut).unwrap();
        let links = tri
            .graph
            .edge_records()
            .iter()
            .map(|r| RawLink {
                u: r.u,
                v: r.v,
                w_uv: Some(r.w_uv),
                w_vu: Some(r.w_vu),
            })
            .collect();
        let rot = (0..tri.graph.n_nodes())
            .map(|x| tri.graph.rotation(x).to_vec())
            .collect();
        let raw2 = RawGraph { n_nodes: 4, links, rot };
        let tri2 = bidirect_and_triangulate(&raw2, Mode::MinCut).unwrap();
        assert_eq!(tri2.graph.n_edges(), tri.graph.n_edges());
        assert!(tri2.origin.iter().all(|o| o.link.is_some()));
    }

    #[test]
    fn dual_of_example_matches_expected_weights() {
        let raw = four_node_example();
        let tri = bidirect_and_triangulate(&raw, Mode::MinCut).unwrap();
        let dual = tri.graph.dual().unwrap();
        assert_eq!(dual.n_nodes(), 4); // 2n - 4 faces
        assert_eq!(dual.n_edges(), 6);
        for f in 0..dual.n_nodes() {
            assert_eq!(dual.degree(f), 3);
        }
        let mut primal: Vec<Weight> = tri
            .graph
            .edge_records()
            .iter()
            .flat_map(|r| [r.w_uv, r.w_vu])
            .collect();
        let mut dualw: Vec<Weight> = dual
            .edge_records()
            .iter()
            .flat_map(|r| [r.w_uv, r.w_vu])
            .collect();
        primal.sort();
        dualw.sort();
        assert_eq!(primal, dualw);
    }

    #[test]
    fn degenerate_scan_on_example() {
        let raw = four_node_example();
        let tri = bidirect_and_triangulate(&raw, Mode::ShortestCycle).unwrap();
        let (w, c) = shortest_degenerate_cycle(&tri.graph);
        assert_eq!(w, Finite(6));
        let c = c.unwrap();
        let nodes = c.nodes(&tri.graph);
        assert_eq!(nodes.len(), 3);
        assert_eq!(nodes[0], nodes[2]);
        let mut pair = [nodes[0], nodes[1]];
        pair.sort();
        assert_eq!(pair, [1, 2]);
    }

    #[test]
    fn all_infinite_reverse_scan_is_infinite() {
        let links = vec![
            RawLink { u: 0, v: 1, w_uv: Some(Finite(3)), w_vu: None },
            RawLink { u: 1, v: 2, w_uv: Some(Finite(4)), w_vu: None },
        ];
        let rot = vec![vec![0], vec![0, 1], vec![1]];
        let raw = RawGraph { n_nodes: 3, links, rot };
        let g = raw.to_bidirected_plane(Infinite).unwrap();
        let (w, c) = shortest_degenerate_cycle(&g);
        assert!(w.is_infinite());
        assert!(c.is_none());
    }

    #[test]
    fn split_star_center() {
        // Star: center 0 with 9 leaves placed around it.
        let n = 10;
        let links: Vec<RawLink> = (1..n)
            .map(|v| RawLink {
                u: 0,
                v,
                w_uv: Some(Finite(v as i64)),
                w_vu: Some(Finite(2 * v as i64)),
            })
            .collect();
        let mut rot = vec![(0..9).collect::<Vec<_>>()];
        rot.extend((0..9).map(|e| vec![e]));
        let raw = RawGraph { n_nodes: n, links, rot };
        let g = raw.to_bidirected_plane(Infinite).unwrap();
        let (g2, m) = split_high_degree(&g);
        assert_eq!(g2.n_nodes(), 9 + 9);
        assert!((0..g2.n_nodes()).all(|x| g2.degree(x) <= 4));
        assert_eq!(m.groups.len(), 1);
        assert_eq!(m.groups[0].path_nodes.len(), 9);
        for (i, &p) in m.groups[0].path_nodes.iter().enumerate() {
            let expect = if i == 0 || i == 8 { 2 } else { 3 };
            assert_eq!(g2.degree(p), expect);
        }
    }

    #[test]
    fn split_noop_on_low_degree() {
        let raw = four_node_example();
        let g = raw.to_bidirected_plane(Infinite).unwrap();
        let (g2, m) = split_high_degree(&g);
        assert_eq!(g2.n_nodes(), g.n_nodes());
        assert_eq!(g2.n_edges(), g.n_edges());
        assert!(m.groups.is_empty());
    }

    #[test]
    fn min_cut_on_four_node_example() {
        let raw = four_node_example();
        let cut = min_cut(&raw, &Default::default()).unwrap();
        assert_eq!(cut.weight, Finite(5));
        assert_eq!(cut.cut_arcs, vec![(1, 2, Finite(5))]);
        let (s, t) = cut.witness.unwrap();
        // Removing the cut disconnects the witness pair.
        let arcs = raw.arcs();
        let mut reach = vec![false; raw.n_nodes];
        reach[s] = true;
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for &(a, b, _) in &arcs {
                if a == x && !reach[b] && !cut.cut_arcs.iter().any(|&(u, v, _)| (u, v) == (a, b)) {
                    reach[b] = true;
                    stack.push(b);
                }
            }
        }
        assert!(!reach[t]);
    }

    #[test]
    fn shortest_cycle_on_four_node_example() {
        let raw = four_node_example();
        let res = shortest_cycle(&raw, &Default::default()).unwrap();
        assert_eq!(res.weight, Finite(6));
        let nodes = res.nodes.unwrap();
        assert_eq!(nodes.len(), 3);
        let mut pair = [nodes[0], nodes[1]];
        pair.sort();
        assert_eq!(pair, [1, 2]);
    }

    #[test]
    fn shortest_cycle_dag_is_infinite() {
        let links = vec![
            RawLink { u: 0, v: 1, w_uv: Some(Finite(1)), w_vu: None },
            RawLink { u: 1, v: 2, w_uv: Some(Finite(1)), w_vu: None },
            RawLink { u: 2, v: 3, w_uv: Some(Finite(1)), w_vu: None },
            RawLink { u: 3, v: 0, w_uv: None, w_vu: Some(Finite(1)) },
        ];
        let rot = vec![vec![0, 3], vec![1, 0], vec![2, 1], vec![3, 2]];
        let raw = RawGraph { n_nodes: 4, links, rot };
        let res = shortest_cycle(&raw, &Default::default()).unwrap();
        assert!(res.weight.is_infinite());
        assert!(res.nodes.is_none());
    }

    #[test]
    fn lift_identity_when_no_split_nodes() {
        let raw = four_node_example();
        let g = raw.to_bidirected_plane(Infinite).unwrap();
        let (g2, m) = split_high_degree(&g);
        let c = Walk::new(vec![Dart::forward(1), Dart::forward(4), Dart::backward(3)]);
        assert!(c.is_cycle(&g2));
        let lifted = lift_split_cycle(&g2, &g, &c, &m);
        assert_eq!(lifted.darts, c.darts);
    }
}
