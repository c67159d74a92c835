//! Rotation-system representation of simple bidirected plane graphs.
//!
//! Conventions used throughout the crate:
//!
//! - Every undirected edge `{u, v}` carries two direction weights, `w(u->v)`
//!   and `w(v->u)`, either of which may be `Infinite`.
//! - `rot[x]` lists the edges incident to `x` in counterclockwise order.
//! - Dart `2e` is the `u->v` direction of edge `e`, dart `2e + 1` is `v->u`.
//! - Faces are traced with the face on the *left* of each dart:
//!   `next(d)` leaves `head(d)` along the counterclockwise predecessor of
//!   `edge(d)` in the rotation at `head(d)`. Bounded faces come out
//!   counterclockwise, the outer face clockwise.
//! - The corner of a face at a node spans counterclockwise from the
//!   departure edge to the arrival edge of the face walk.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::weight::Weight;

pub type NodeId = usize;
pub type EdgeId = usize;
pub type FaceId = usize;

/// One direction of a bundled edge. Id is `2 * edge + orientation bit`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dart(pub usize);

impl Dart {
    pub fn forward(e: EdgeId) -> Dart {
        Dart(2 * e)
    }

    pub fn backward(e: EdgeId) -> Dart {
        Dart(2 * e + 1)
    }

    pub fn edge(self) -> EdgeId {
        self.0 / 2
    }

    pub fn is_forward(self) -> bool {
        self.0 % 2 == 0
    }

    pub fn twin(self) -> Dart {
        Dart(self.0 ^ 1)
    }
}

impl fmt::Debug for Dart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d{}", self.0)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct EdgeRec {
    pub u: NodeId,
    pub v: NodeId,
    pub w_uv: Weight,
    pub w_vu: Weight,
}

impl EdgeRec {
    pub fn other(&self, x: NodeId) -> NodeId {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }
}

/// An ordered dart sequence. Consecutive darts chain head to tail. A walk of
/// zero darts represents a single node, carried in `anchor`.
#[derive(Clone, PartialEq, Eq)]
pub struct Walk {
    pub darts: Vec<Dart>,
    pub anchor: Option<NodeId>,
}

impl Walk {
    pub fn new(darts: Vec<Dart>) -> Walk {
        Walk {
            darts,
            anchor: None,
        }
    }

    pub fn single_node(v: NodeId) -> Walk {
        Walk {
            darts: Vec::new(),
            anchor: Some(v),
        }
    }

    pub fn is_node(&self) -> bool {
        self.darts.is_empty()
    }

    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    pub fn tail(&self, g: &PlaneGraph) -> NodeId {
        match self.darts.first() {
            Some(&d) => g.tail(d),
            None => self.anchor.expect("empty walk without anchor"),
        }
    }

    pub fn head(&self, g: &PlaneGraph) -> NodeId {
        match self.darts.last() {
            Some(&d) => g.head(d),
            None => self.anchor.expect("empty walk without anchor"),
        }
    }

    /// Node sequence, one longer than the dart sequence.
    pub fn nodes(&self, g: &PlaneGraph) -> Vec<NodeId> {
        if self.darts.is_empty() {
            return vec![self.anchor.expect("empty walk without anchor")];
        }
        let mut out = Vec::with_capacity(self.darts.len() + 1);
        out.push(g.tail(self.darts[0]));
        for &d in &self.darts {
            out.push(g.head(d));
        }
        out
    }

    pub fn chains(&self, g: &PlaneGraph) -> bool {
        self.darts
            .windows(2)
            .all(|w| g.head(w[0]) == g.tail(w[1]))
    }

    pub fn is_cycle(&self, g: &PlaneGraph) -> bool {
        !self.darts.is_empty() && self.tail(g) == self.head(g)
    }

    /// A walk is degenerate when it is a single node or uses both darts of
    /// some edge.
    pub fn is_degenerate(&self, _g: &PlaneGraph) -> bool {
        if self.darts.is_empty() {
            return true;
        }
        let mut seen = HashSet::new();
        for &d in &self.darts {
            if seen.contains(&d.twin()) {
                return true;
            }
            seen.insert(d);
        }
        false
    }

    /// No node repeats, except the closing node of a cycle.
    pub fn is_simple(&self, g: &PlaneGraph) -> bool {
        let nodes = self.nodes(g);
        let cycle = self.is_cycle(g);
        let interior = if cycle { &nodes[1..] } else { &nodes[..] };
        let mut seen = HashSet::new();
        interior.iter().all(|&v| seen.insert(v))
    }

    pub fn weight(&self, g: &PlaneGraph) -> Weight {
        self.darts.iter().map(|&d| g.weight(d)).sum()
    }

    pub fn reversed(&self) -> Walk {
        Walk {
            darts: self.darts.iter().rev().map(|d| d.twin()).collect(),
            anchor: self.anchor,
        }
    }
}

impl fmt::Debug for Walk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Walk{:?}", self.darts)
    }
}

/// A simple bidirected plane graph with traced faces.
#[derive(Clone)]
pub struct PlaneGraph {
    edges: Vec<EdgeRec>,
    rot: Vec<Vec<EdgeId>>,
    faces: Vec<Vec<Dart>>,
    face_of: Vec<FaceId>,
    outer: FaceId,
}

impl PlaneGraph {
    /// Validating constructor. `rotations[x]` lists the edges incident to `x`
    /// counterclockwise. `outer_dart`, when given, designates the face on the
    /// left of that dart as the outer face; the default is face 0.
    pub fn build_from_rotation(
        n_nodes: usize,
        edges: Vec<EdgeRec>,
        rotations: Vec<Vec<EdgeId>>,
        outer_dart: Option<Dart>,
    ) -> Result<PlaneGraph> {
        if rotations.len() != n_nodes {
            return Err(Error::InconsistentRotation(format!(
                "{} rotation lists for {} nodes",
                rotations.len(),
                n_nodes
            )));
        }
        let mut pair_seen = HashSet::new();
        for (e, rec) in edges.iter().enumerate() {
            if rec.u >= n_nodes || rec.v >= n_nodes {
                return Err(Error::InconsistentRotation(format!(
                    "edge {e} endpoint out of range"
                )));
            }
            if rec.u == rec.v {
                return Err(Error::NotSimple(format!("edge {e} is a self-loop")));
            }
            let key = (rec.u.min(rec.v), rec.u.max(rec.v));
            if !pair_seen.insert(key) {
                return Err(Error::NotSimple(format!(
                    "parallel edges between {} and {}",
                    key.0, key.1
                )));
            }
            for w in [rec.w_uv, rec.w_vu] {
                if let Weight::Finite(x) = w {
                    if x < 0 {
                        return Err(Error::NegativeWeight(e));
                    }
                }
            }
        }
        // Each edge must appear in both endpoint rotations exactly once and
        // nowhere else.
        let mut count = vec![[0usize; 2]; edges.len()];
        for (x, list) in rotations.iter().enumerate() {
            for &e in list {
                if e >= edges.len() {
                    return Err(Error::InconsistentRotation(format!(
                        "rotation of {x} names unknown edge {e}"
                    )));
                }
                let rec = &edges[e];
                if x == rec.u {
                    count[e][0] += 1;
                } else if x == rec.v {
                    count[e][1] += 1;
                } else {
                    return Err(Error::InconsistentRotation(format!(
                        "edge {e} in rotation of non-endpoint {x}"
                    )));
                }
            }
        }
        for (e, c) in count.iter().enumerate() {
            if *c != [1, 1] {
                return Err(Error::InconsistentRotation(format!(
                    "edge {e} appears {c:?} times in endpoint rotations"
                )));
            }
        }
        let mut g = PlaneGraph {
            edges,
            rot: rotations,
            faces: Vec::new(),
            face_of: Vec::new(),
            outer: 0,
        };
        g.retrace()?;
        if let Some(d) = outer_dart {
            g.outer = g.face_of(d);
        }
        Ok(g)
    }

    /// Retrace faces and check the Euler relation.
    fn retrace(&mut self) -> Result<()> {
        let m = self.edges.len();
        self.face_of = vec![usize::MAX; 2 * m];
        self.faces.clear();
        for start in 0..2 * m {
            if self.face_of[start] != usize::MAX {
                continue;
            }
            let fid = self.faces.len();
            let mut walk = Vec::new();
            let mut d = Dart(start);
            loop {
                debug_assert_eq!(self.face_of[d.0], usize::MAX);
                self.face_of[d.0] = fid;
                walk.push(d);
                d = self.next_in_face(d);
                if d.0 == start {
                    break;
                }
            }
            self.faces.push(walk);
        }
        let (edged, isolated) = self.component_counts();
        let (v, e, f) = (self.n_nodes(), m, self.faces.len());
        // Euler on the sphere, per component: V - E + F = 2 for components
        // with edges, 1 for isolated nodes (which bound no face walk).
        if v + f != e + 2 * edged + isolated {
            return Err(Error::NotPlanarEmbedding {
                nodes: v,
                edges: e,
                faces: f,
                components: edged + isolated,
            });
        }
        if self.outer >= self.faces.len() {
            self.outer = 0;
        }
        Ok(())
    }

    /// (components with at least one edge, isolated nodes)
    fn component_counts(&self) -> (usize, usize) {
        let n = self.n_nodes();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut Vec<usize>, mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for rec in &self.edges {
            let (a, b) = (find(&mut parent, rec.u), find(&mut parent, rec.v));
            if a != b {
                parent[a] = b;
            }
        }
        let mut edged = 0;
        let mut isolated = 0;
        for x in 0..n {
            if find(&mut parent, x) == x {
                if self.rot[x].is_empty() {
                    isolated += 1;
                } else {
                    edged += 1;
                }
            }
        }
        (edged, isolated)
    }

    pub fn n_nodes(&self) -> usize {
        self.rot.len()
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn n_darts(&self) -> usize {
        2 * self.edges.len()
    }

    pub fn n_faces(&self) -> usize {
        self.faces.len()
    }

    pub fn edge(&self, e: EdgeId) -> &EdgeRec {
        &self.edges[e]
    }

    pub fn edge_records(&self) -> &[EdgeRec] {
        &self.edges
    }

    pub fn rotation(&self, x: NodeId) -> &[EdgeId] {
        &self.rot[x]
    }

    pub fn degree(&self, x: NodeId) -> usize {
        self.rot[x].len()
    }

    pub fn tail(&self, d: Dart) -> NodeId {
        let rec = &self.edges[d.edge()];
        if d.is_forward() {
            rec.u
        } else {
            rec.v
        }
    }

    pub fn head(&self, d: Dart) -> NodeId {
        let rec = &self.edges[d.edge()];
        if d.is_forward() {
            rec.v
        } else {
            rec.u
        }
    }

    pub fn weight(&self, d: Dart) -> Weight {
        let rec = &self.edges[d.edge()];
        if d.is_forward() {
            rec.w_uv
        } else {
            rec.w_vu
        }
    }

    /// The dart of edge `e` leaving node `x`.
    pub fn dart_from(&self, x: NodeId, e: EdgeId) -> Dart {
        if self.edges[e].u == x {
            Dart::forward(e)
        } else {
            debug_assert_eq!(self.edges[e].v, x);
            Dart::backward(e)
        }
    }

    /// Dart `u -> v` if the edge exists.
    pub fn dart_between(&self, u: NodeId, v: NodeId) -> Option<Dart> {
        self.rot[u]
            .iter()
            .copied()
            .find(|&e| self.edges[e].other(u) == v)
            .map(|e| self.dart_from(u, e))
    }

    pub fn darts_from(&self, x: NodeId) -> impl Iterator<Item = Dart> + '_ {
        self.rot[x].iter().map(move |&e| self.dart_from(x, e))
    }

    fn rot_index(&self, x: NodeId, e: EdgeId) -> usize {
        self.rot[x]
            .iter()
            .position(|&f| f == e)
            .expect("edge not in rotation")
    }

    pub fn ccw_succ(&self, x: NodeId, e: EdgeId) -> EdgeId {
        let list = &self.rot[x];
        let i = self.rot_index(x, e);
        list[(i + 1) % list.len()]
    }

    pub fn ccw_pred(&self, x: NodeId, e: EdgeId) -> EdgeId {
        let list = &self.rot[x];
        let i = self.rot_index(x, e);
        list[(i + list.len() - 1) % list.len()]
    }

    /// Successor dart in the face walk (face kept on the left).
    pub fn next_in_face(&self, d: Dart) -> Dart {
        let x = self.head(d);
        let e = self.ccw_pred(x, d.edge());
        self.dart_from(x, e)
    }

    pub fn face_of(&self, d: Dart) -> FaceId {
        self.face_of[d.0]
    }

    pub fn face_walk(&self, f: FaceId) -> &[Dart] {
        &self.faces[f]
    }

    /// Face walks in deterministic order (each starts at its lowest dart id).
    pub fn faces(&self) -> &[Vec<Dart>] {
        &self.faces
    }

    pub fn outer_face(&self) -> FaceId {
        self.outer
    }

    pub fn set_outer_face(&mut self, f: FaceId) {
        assert!(f < self.faces.len());
        self.outer = f;
    }

    /// Same embedding with every direction weight swapped.
    pub fn reverse_directions(&self) -> PlaneGraph {
        let mut g = self.clone();
        for rec in &mut g.edges {
            std::mem::swap(&mut rec.w_uv, &mut rec.w_vu);
        }
        g
    }

    pub fn has_edge_between(&self, u: NodeId, v: NodeId) -> bool {
        let (a, b) = if self.degree(u) <= self.degree(v) {
            (u, v)
        } else {
            (v, u)
        };
        self.rot[a].iter().any(|&e| self.edges[e].other(a) == b)
    }

    /// Dual of a bidirected plane triangulation with at least four nodes.
    ///
    /// Dual edge `k` corresponds to primal edge `k`; the dual dart `2k` goes
    /// from the face left of primal dart `2k` to the face left of `2k + 1`
    /// and carries the weight of primal dart `2k`. The dual rotation at a
    /// face lists the crossed edges in face-walk order.
    pub fn dual(&self) -> Result<PlaneGraph> {
        if self.n_nodes() < 4 {
            return Err(Error::NotTriangulated(0, self.n_nodes()));
        }
        for (f, walk) in self.faces.iter().enumerate() {
            if walk.len() != 3 {
                return Err(Error::NotTriangulated(f, walk.len()));
            }
        }
        let edges = self
            .edges
            .iter()
            .enumerate()
            .map(|(e, rec)| EdgeRec {
                u: self.face_of(Dart::forward(e)),
                v: self.face_of(Dart::backward(e)),
                w_uv: rec.w_uv,
                w_vu: rec.w_vu,
            })
            .collect();
        let rot = self
            .faces
            .iter()
            .map(|walk| walk.iter().map(|d| d.edge()).collect())
            .collect();
        PlaneGraph::build_from_rotation(self.faces.len(), edges, rot, None)
    }

    /// Remove every degree-2 node whose two neighbors are non-adjacent,
    /// merging its edge pair per direction. Returns the reduced graph and a
    /// map that re-expands walks of the reduced graph into this graph.
    pub fn suppress_degree2(&self) -> (PlaneGraph, LiftMap) {
        #[derive(Clone)]
        struct Live {
            u: NodeId,
            v: NodeId,
            w_uv: Weight,
            w_vu: Weight,
            exp_uv: Vec<Dart>,
            exp_vu: Vec<Dart>,
            alive: bool,
        }
        let mut live: Vec<Live> = self
            .edges
            .iter()
            .enumerate()
            .map(|(e, rec)| Live {
                u: rec.u,
                v: rec.v,
                w_uv: rec.w_uv,
                w_vu: rec.w_vu,
                exp_uv: vec![Dart::forward(e)],
                exp_vu: vec![Dart::backward(e)],
                alive: true,
            })
            .collect();
        let mut rot: Vec<Vec<EdgeId>> = self.rot.clone();
        let mut adjacency: HashSet<(NodeId, NodeId)> = self
            .edges
            .iter()
            .map(|r| (r.u.min(r.v), r.u.max(r.v)))
            .collect();
        let mut node_alive = vec![true; self.n_nodes()];
        let mut queue: Vec<NodeId> = (0..self.n_nodes())
            .filter(|&x| self.degree(x) == 2)
            .collect();
        while let Some(y) = queue.pop() {
            if !node_alive[y] || rot[y].len() != 2 {
                continue;
            }
            let (e1, e2) = (rot[y][0], rot[y][1]);
            let x = if live[e1].u == y { live[e1].v } else { live[e1].u };
            let z = if live[e2].u == y { live[e2].v } else { live[e2].u };
            if x == z || adjacency.contains(&(x.min(z), x.max(z))) {
                continue;
            }
            // Merge e1 and e2 into e1 = {x, z}; keep e1's slot in rot[x] and
            // e2's slot in rot[z] so the embedding is untouched elsewhere.
            let (w_xy, w_yx, exp_xy, exp_yx) = {
                let l = &live[e1];
                if l.u == x {
                    (l.w_uv, l.w_vu, l.exp_uv.clone(), l.exp_vu.clone())
                } else {
                    (l.w_vu, l.w_uv, l.exp_vu.clone(), l.exp_uv.clone())
                }
            };
            let (w_yz, w_zy, exp_yz, exp_zy) = {
                let l = &live[e2];
                if l.u == y {
                    (l.w_uv, l.w_vu, l.exp_uv.clone(), l.exp_vu.clone())
                } else {
                    (l.w_vu, l.w_uv, l.exp_vu.clone(), l.exp_uv.clone())
                }
            };
            {
                let l = &mut live[e1];
                l.u = x;
                l.v = z;
                l.w_uv = w_xy + w_yz;
                l.w_vu = w_zy + w_yx;
                l.exp_uv = [exp_xy, exp_yz].concat();
                l.exp_vu = [exp_zy, exp_yx].concat();
            }
            live[e2].alive = false;
            let slot = rot[z].iter().position(|&e| e == e2).expect("rotation slot");
            rot[z][slot] = e1;
            rot[y].clear();
            node_alive[y] = false;
            adjacency.insert((x.min(z), x.max(z)));
            // x and z keep their degrees; a queued node whose neighbors just
            // became adjacent is rejected at pop time.
        }

        // Compact.
        let mut node_new = vec![usize::MAX; self.n_nodes()];
        let mut node_to_parent = Vec::new();
        for x in 0..self.n_nodes() {
            if node_alive[x] {
                node_new[x] = node_to_parent.len();
                node_to_parent.push(x);
            }
        }
        let mut edge_new = vec![usize::MAX; live.len()];
        let mut edges = Vec::new();
        let mut fwd = Vec::new();
        let mut bwd = Vec::new();
        for (e, l) in live.iter().enumerate() {
            if !l.alive {
                continue;
            }
            edge_new[e] = edges.len();
            edges.push(EdgeRec {
                u: node_new[l.u],
                v: node_new[l.v],
                w_uv: l.w_uv,
                w_vu: l.w_vu,
            });
            fwd.push(l.exp_uv.clone());
            bwd.push(l.exp_vu.clone());
        }
        let rotations = (0..self.n_nodes())
            .filter(|&x| node_alive[x])
            .map(|x| rot[x].iter().map(|&e| edge_new[e]).collect())
            .collect();
        let g = PlaneGraph::build_from_rotation(node_to_parent.len(), edges, rotations, None)
            .expect("suppression preserves the embedding");
        let lift = LiftMap {
            fwd,
            bwd,
            node_to_parent,
        };
        (g, lift)
    }

    /// Compact subgraph on the given edges. Nodes without a kept incident
    /// edge are dropped. Rotations are induced, faces retraced.
    pub fn subgraph_of_edges(&self, keep: &[bool]) -> (PlaneGraph, SubMap) {
        assert_eq!(keep.len(), self.n_edges());
        let mut node_new = vec![usize::MAX; self.n_nodes()];
        let mut node_to_parent = Vec::new();
        let mut edge_new = vec![usize::MAX; self.n_edges()];
        let mut edge_to_parent = Vec::new();
        let mut edges = Vec::new();
        for (e, rec) in self.edges.iter().enumerate() {
            if !keep[e] {
                continue;
            }
            for x in [rec.u, rec.v] {
                if node_new[x] == usize::MAX {
                    node_new[x] = node_to_parent.len();
                    node_to_parent.push(x);
                }
            }
            edge_new[e] = edges.len();
            edge_to_parent.push(e);
            edges.push(EdgeRec {
                u: node_new[rec.u],
                v: node_new[rec.v],
                w_uv: rec.w_uv,
                w_vu: rec.w_vu,
            });
        }
        let rotations: Vec<Vec<EdgeId>> = node_to_parent
            .iter()
            .map(|&x| {
                self.rot[x]
                    .iter()
                    .filter(|&&e| keep[e])
                    .map(|&e| edge_new[e])
                    .collect()
            })
            .collect();
        let g = PlaneGraph::build_from_rotation(node_to_parent.len(), edges, rotations, None)
            .expect("subgraph of a plane graph stays plane");
        (
            g,
            SubMap {
                node_to_parent,
                edge_to_parent,
                node_from_parent: node_new,
            },
        )
    }

    /// For each intermediate visit of a simple cycle, the incident edges
    /// strictly on the left of the traversal: the counterclockwise arc from
    /// the departure edge to the arrival edge, both exclusive.
    pub fn cycle_left_edges(&self, cycle: &Walk) -> Vec<(NodeId, Vec<EdgeId>)> {
        let k = cycle.darts.len();
        let mut out = Vec::with_capacity(k);
        for i in 0..k {
            let arrive = cycle.darts[i];
            let depart = cycle.darts[(i + 1) % k];
            let x = self.head(arrive);
            debug_assert_eq!(self.tail(depart), x);
            let e_arr = arrive.edge();
            let e_dep = depart.edge();
            let list = &self.rot[x];
            let start = self.rot_index(x, e_dep);
            let mut side = Vec::new();
            let mut j = (start + 1) % list.len();
            while list[j] != e_arr {
                side.push(list[j]);
                j = (j + 1) % list.len();
            }
            out.push((x, side));
        }
        out
    }

    /// Classify every face as left or right of a simple non-degenerate
    /// cycle: faces adjacent across a non-cycle edge share a side.
    pub fn faces_left_of_cycle(&self, cycle: &Walk) -> Vec<bool> {
        let mut on_cycle = vec![false; self.n_edges()];
        for &d in &cycle.darts {
            on_cycle[d.edge()] = true;
        }
        let mut side = vec![u8::MAX; self.n_faces()];
        let mut stack = Vec::new();
        for &d in &cycle.darts {
            let (l, r) = (self.face_of(d), self.face_of(d.twin()));
            side[l] = 1;
            side[r] = 0;
            stack.push(l);
            stack.push(r);
        }
        while let Some(f) = stack.pop() {
            let s = side[f];
            for &d in &self.faces[f] {
                if on_cycle[d.edge()] {
                    continue;
                }
                let g = self.face_of(d.twin());
                if side[g] == u8::MAX {
                    side[g] = s;
                    stack.push(g);
                }
            }
        }
        // Components not touching the cycle sit entirely on one side; find
        // them through any classified neighbor, defaulting to the right.
        side.iter().map(|&s| s == 1).collect()
    }
}

/// Node/edge back-maps for a compact subgraph.
#[derive(Clone, Debug)]
pub struct SubMap {
    pub node_to_parent: Vec<NodeId>,
    pub edge_to_parent: Vec<EdgeId>,
    pub node_from_parent: Vec<usize>,
}

impl SubMap {
    pub fn lift_dart(&self, d: Dart) -> Dart {
        let e = self.edge_to_parent[d.edge()];
        if d.is_forward() {
            Dart::forward(e)
        } else {
            Dart::backward(e)
        }
    }

    pub fn lift_walk(&self, w: &Walk, parent_anchor: impl Fn(NodeId) -> NodeId) -> Walk {
        Walk {
            darts: w.darts.iter().map(|&d| self.lift_dart(d)).collect(),
            anchor: w.anchor.map(parent_anchor),
        }
    }
}

/// Expansion of suppressed-graph darts into the original graph.
#[derive(Clone, Debug)]
pub struct LiftMap {
    fwd: Vec<Vec<Dart>>,
    bwd: Vec<Vec<Dart>>,
    pub node_to_parent: Vec<NodeId>,
}

impl LiftMap {
    pub fn expand_dart(&self, d: Dart) -> &[Dart] {
        if d.is_forward() {
            &self.fwd[d.edge()]
        } else {
            &self.bwd[d.edge()]
        }
    }

    pub fn lift_walk(&self, w: &Walk) -> Walk {
        let mut darts = Vec::new();
        for &d in &w.darts {
            darts.extend_from_slice(self.expand_dart(d));
        }
        Walk {
            darts,
            anchor: w.anchor.map(|v| self.node_to_parent[v]),
        }
    }
}

/// Mutable construction and embedding surgery, validated on `finish`.
#[derive(Clone)]
pub struct GraphBuilder {
    pub edges: Vec<EdgeRec>,
    pub rot: Vec<Vec<EdgeId>>,
}

impl GraphBuilder {
    pub fn new(n_nodes: usize) -> GraphBuilder {
        GraphBuilder {
            edges: Vec::new(),
            rot: vec![Vec::new(); n_nodes],
        }
    }

    pub fn from_graph(g: &PlaneGraph) -> GraphBuilder {
        GraphBuilder {
            edges: g.edges.clone(),
            rot: g.rot.clone(),
        }
    }

    pub fn n_nodes(&self) -> usize {
        self.rot.len()
    }

    pub fn add_node(&mut self) -> NodeId {
        self.rot.push(Vec::new());
        self.rot.len() - 1
    }

    /// Insert edge `{u, v}` with the new edge placed at rotation index
    /// `pos_u` of `u` and `pos_v` of `v` (entries at and after the index
    /// shift up).
    pub fn add_edge_at(
        &mut self,
        u: NodeId,
        pos_u: usize,
        v: NodeId,
        pos_v: usize,
        w_uv: Weight,
        w_vu: Weight,
    ) -> EdgeId {
        let e = self.edges.len();
        self.edges.push(EdgeRec { u, v, w_uv, w_vu });
        self.rot[u].insert(pos_u, e);
        self.rot[v].insert(pos_v, e);
        e
    }

    pub fn rot_index(&self, x: NodeId, e: EdgeId) -> usize {
        self.rot[x]
            .iter()
            .position(|&f| f == e)
            .expect("edge not in rotation")
    }

    pub fn has_edge_between(&self, u: NodeId, v: NodeId) -> bool {
        self.rot[u]
            .iter()
            .any(|&e| self.edges[e].u == v || self.edges[e].v == v)
    }

    pub fn finish(self, outer_dart: Option<Dart>) -> Result<PlaneGraph> {
        PlaneGraph::build_from_rotation(self.rot.len(), self.edges, self.rot, outer_dart)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weight::{Finite, Infinite};

    fn both(w: i64) -> (Weight, Weight) {
        (Finite(w), Finite(w))
    }

    pub fn triangle() -> PlaneGraph {
        // Nodes 0, 1, 2 counterclockwise, all weights 1.
        let edges = vec![
            EdgeRec { u: 0, v: 1, w_uv: Finite(1), w_vu: Finite(1) },
            EdgeRec { u: 1, v: 2, w_uv: Finite(1), w_vu: Finite(1) },
            EdgeRec { u: 2, v: 0, w_uv: Finite(1), w_vu: Finite(1) },
        ];
        let rot = vec![vec![0, 2], vec![1, 0], vec![2, 1]];
        PlaneGraph::build_from_rotation(3, edges, rot, None).unwrap()
    }

    #[test]
    fn triangle_faces() {
        let g = triangle();
        assert_eq!(g.n_faces(), 2);
        let sizes: Vec<usize> = g.faces().iter().map(|f| f.len()).collect();
        assert_eq!(sizes, vec![3, 3]);
        // Interior face (counterclockwise) contains dart 0 -> 1.
        let f = g.face_of(Dart::forward(0));
        let nodes: Vec<NodeId> = g.face_walk(f).iter().map(|&d| g.tail(d)).collect();
        assert_eq!(nodes.len(), 3);
    }

    #[test]
    fn single_edge_two_sided_face() {
        let edges = vec![EdgeRec { u: 0, v: 1, w_uv: Finite(1), w_vu: Finite(1) }];
        let rot = vec![vec![0], vec![0]];
        let g = PlaneGraph::build_from_rotation(2, edges, rot, None).unwrap();
        assert_eq!(g.n_faces(), 1);
        assert_eq!(g.face_walk(0).len(), 2);
    }

    #[test]
    fn rejects_self_loop_and_parallel() {
        let edges = vec![EdgeRec { u: 0, v: 0, w_uv: Finite(1), w_vu: Finite(1) }];
        let rot = vec![vec![0, 0]];
        assert!(matches!(
            PlaneGraph::build_from_rotation(1, edges, rot, None),
            Err(Error::NotSimple(_))
        ));
        let (w_uv, w_vu) = both(1);
        let edges = vec![
            EdgeRec { u: 0, v: 1, w_uv, w_vu },
            EdgeRec { u: 1, v: 0, w_uv, w_vu },
        ];
        let rot = vec![vec![0, 1], vec![0, 1]];
        assert!(matches!(
            PlaneGraph::build_from_rotation(2, edges, rot, None),
            Err(Error::NotSimple(_))
        ));
    }

    #[test]
    fn rejects_bad_rotation() {
        let (w_uv, w_vu) = both(1);
        let edges = vec![EdgeRec { u: 0, v: 1, w_uv, w_vu }];
        let rot = vec![vec![0], vec![]];
        assert!(matches!(
            PlaneGraph::build_from_rotation(2, edges, rot, None),
            Err(Error::InconsistentRotation(_))
        ));
    }

    #[test]
    fn rejects_nonplanar_rotation() {
        // K4 with all rotations in index order embeds on the torus, not the
        // sphere; at least one such rotation must fail the Euler check.
        let (w_uv, w_vu) = both(1);
        let edges = vec![
            EdgeRec { u: 0, v: 1, w_uv, w_vu },
            EdgeRec { u: 0, v: 2, w_uv, w_vu },
            EdgeRec { u: 0, v: 3, w_uv, w_vu },
            EdgeRec { u: 1, v: 2, w_uv, w_vu },
            EdgeRec { u: 1, v: 3, w_uv, w_vu },
            EdgeRec { u: 2, v: 3, w_uv, w_vu },
        ];
        let rot_bad = vec![vec![0, 1, 2], vec![0, 3, 4], vec![1, 3, 5], vec![2, 5, 4]];
        let rot_good = vec![vec![0, 1, 2], vec![0, 4, 3], vec![1, 3, 5], vec![2, 5, 4]];
        let bad = PlaneGraph::build_from_rotation(4, edges.clone(), rot_bad, None);
        let good = PlaneGraph::build_from_rotation(4, edges, rot_good, None);
        assert!(bad.is_err() || good.is_err());
        assert!(bad.is_ok() || good.is_ok());
    }

    #[test]
    fn walk_predicates() {
        let g = triangle();
        let c = Walk::new(vec![Dart::forward(0), Dart::forward(1), Dart::forward(2)]);
        assert!(c.is_cycle(&g));
        assert!(c.is_simple(&g));
        assert!(!c.is_degenerate(&g));
        assert_eq!(c.weight(&g), Finite(3));
        let deg = Walk::new(vec![Dart::forward(0), Dart::backward(0)]);
        assert!(deg.is_cycle(&g));
        assert!(deg.is_degenerate(&g));
        let node = Walk::single_node(1);
        assert!(node.is_degenerate(&g));
    }

    #[test]
    fn suppress_path_node() {
        // Path 0 - 1 - 2 with asymmetric weights; endpoints non-adjacent.
        let edges = vec![
            EdgeRec { u: 0, v: 1, w_uv: Finite(1), w_vu: Finite(4) },
            EdgeRec { u: 1, v: 2, w_uv: Finite(2), w_vu: Finite(3) },
        ];
        let rot = vec![vec![0], vec![0, 1], vec![1]];
        let g = PlaneGraph::build_from_rotation(3, edges, rot, None).unwrap();
        let (h, lift) = g.suppress_degree2();
        assert_eq!(h.n_nodes(), 2);
        assert_eq!(h.n_edges(), 1);
        let rec = h.edge(0);
        let (w_ac, w_ca) = if lift.node_to_parent[rec.u] == 0 {
            (rec.w_uv, rec.w_vu)
        } else {
            (rec.w_vu, rec.w_uv)
        };
        assert_eq!(w_ac, Finite(3));
        assert_eq!(w_ca, Finite(7));
        // Round trip: lifted walk weight matches.
        let d = if lift.node_to_parent[rec.u] == 0 {
            Dart::forward(0)
        } else {
            Dart::backward(0)
        };
        let lifted = lift.lift_walk(&Walk::new(vec![d]));
        assert_eq!(lifted.weight(&g), Finite(3));
        assert_eq!(lifted.darts.len(), 2);
    }

    #[test]
    fn suppress_respects_adjacent_neighbors() {
        let g = triangle();
        let (h, _) = g.suppress_degree2();
        assert_eq!(h.n_nodes(), 3);
        assert_eq!(h.n_edges(), 3);
    }

    #[test]
    fn suppress_long_cycle_to_triangle() {
        // 5-cycle, all weights 1 forward and 2 backward.
        let n = 5;
        let edges: Vec<EdgeRec> = (0..n)
            .map(|i| EdgeRec {
                u: i,
                v: (i + 1) % n,
                w_uv: Finite(1),
                w_vu: Finite(2),
            })
            .collect();
        let rot: Vec<Vec<EdgeId>> = (0..n).map(|i| vec![i, (i + n - 1) % n]).collect();
        let g = PlaneGraph::build_from_rotation(n, edges, rot, None).unwrap();
        let (h, lift) = g.suppress_degree2();
        assert_eq!(h.n_nodes(), 3);
        // Total directed weight around the cycle is preserved.
        let fwd: Weight = (0..h.n_edges())
            .map(|e| {
                let rec = h.edge(e);
                rec.w_uv + rec.w_vu
            })
            .sum();
        assert_eq!(fwd, Finite(15));
        let _ = lift;
    }

    #[test]
    fn subgraph_extraction() {
        let g = triangle();
        let keep = vec![true, true, false];
        let (h, map) = g.subgraph_of_edges(&keep);
        assert_eq!(h.n_nodes(), 3);
        assert_eq!(h.n_edges(), 2);
        assert_eq!(h.n_faces(), 1);
        assert_eq!(map.edge_to_parent, vec![0, 1]);
    }

    #[test]
    fn infinite_weights_allowed() {
        let edges = vec![EdgeRec { u: 0, v: 1, w_uv: Infinite, w_vu: Finite(0) }];
        let rot = vec![vec![0], vec![0]];
        let g = PlaneGraph::build_from_rotation(2, edges, rot, None).unwrap();
        assert_eq!(g.weight(Dart::forward(0)), Infinite);
    }
}
