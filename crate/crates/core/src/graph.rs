//! Simple undirected graphs with bitset adjacency, plus the elementary
//! structural queries every other module builds on.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::set::VertexSet;

/// A finite simple graph on the vertices `0..n`, with `n >= 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges().collect::<Vec<_>>())
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    ///
    /// # Panics
    /// If `n == 0`; use [`Graph::try_new`] for a fallible constructor.
    pub fn new(n: usize) -> Graph {
        Graph::try_new(n).expect("graph must have at least one vertex")
    }

    pub fn try_new(n: usize) -> Result<Graph> {
        if n == 0 {
            return Err(Error::NoVertices);
        }
        Ok(Graph {
            adj: vec![VertexSet::new(n); n],
        })
    }

    /// Builds a graph from an edge list. Repeated edges are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::try_new(n)?;
        for &(u, v) in edges {
            if g.has_edge_checked(u, v)? {
                return Err(Error::DuplicateEdge(u, v));
            }
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    fn has_edge_checked(&self, u: usize, v: usize) -> Result<bool> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.has_edge(u, v))
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n() {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n() })
        } else {
            Ok(())
        }
    }

    /// Adds the edge `uv`; adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u].remove(v);
        self.adj[v].remove(u);
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::new(self.n())
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adj = (0..n)
            .map(|v| {
                let mut s = self.adj[v].complement();
                s.remove(v);
                s
            })
            .collect();
        Graph { adj }
    }

    /// Connected components, each listed once, ordered by least vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(&self.vertex_set())
    }

    /// Components of `G[within]`, expressed in the labels of `self`.
    pub fn components_within(&self, within: &VertexSet) -> Vec<VertexSet> {
        let mut unseen = within.clone();
        let mut out = Vec::new();
        while let Some(start) = unseen.first() {
            let comp = self.reach_within(start, &unseen);
            unseen.difference_with(&comp);
            out.push(comp);
        }
        out
    }

    /// Vertices reachable from `start` inside `within` (which must contain `start`).
    pub fn reach_within(&self, start: usize, within: &VertexSet) -> VertexSet {
        let mut comp = VertexSet::new(self.n());
        comp.insert(start);
        let mut frontier = VertexSet::singleton(self.n(), start);
        while !frontier.is_empty() {
            let mut next = VertexSet::new(self.n());
            for v in &frontier {
                next.union_with(&self.adj[v]);
            }
            next.intersect_with(within);
            next.difference_with(&comp);
            comp.union_with(&next);
            frontier = next;
        }
        comp
    }

    pub fn is_connected(&self) -> bool {
        self.reach_within(0, &self.vertex_set()).len() == self.n()
    }

    /// Components of the complement; distinct parts are complete to each other.
    pub fn anticomponents(&self) -> Vec<VertexSet> {
        self.anticomponents_within(&self.vertex_set())
    }

    /// Anticomponents of `G[within]` in the labels of `self`.
    pub fn anticomponents_within(&self, within: &VertexSet) -> Vec<VertexSet> {
        let mut unseen = within.clone();
        let mut out = Vec::new();
        while let Some(start) = unseen.first() {
            unseen.remove(start);
            let mut comp = VertexSet::singleton(self.n(), start);
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                let fresh = unseen.difference(&self.adj[v]);
                for u in &fresh {
                    stack.push(u);
                }
                unseen.difference_with(&fresh);
                comp.union_with(&fresh);
            }
            out.push(comp);
        }
        out
    }

    /// `G[s]` together with the map from new labels to labels of `self`.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Subgraph> {
        if s.is_empty() {
            return Err(Error::EmptySet);
        }
        let labels = s.to_vec();
        let mut position = vec![usize::MAX; self.n()];
        for (i, &v) in labels.iter().enumerate() {
            position[v] = i;
        }
        let k = labels.len();
        let adj = labels
            .iter()
            .map(|&v| {
                let mut row = VertexSet::new(k);
                for u in self.adj[v].intersection(s).iter() {
                    row.insert(position[u]);
                }
                row
            })
            .collect();
        Ok(Subgraph {
            graph: Graph { adj },
            labels,
        })
    }

    /// `G` minus the vertices of `s`; `None` if nothing is left.
    pub fn without(&self, s: &VertexSet) -> Option<Subgraph> {
        self.induced_subgraph(&s.complement()).ok()
    }

    /// True iff `N[v] ⊆ N[u]`.
    pub fn dominates(&self, u: usize, v: usize) -> Result<bool> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SameVertex);
        }
        Ok(self.dominates_unchecked(u, v))
    }

    #[inline]
    pub(crate) fn dominates_unchecked(&self, u: usize, v: usize) -> bool {
        // N[v] ⊆ N[u]: u and v must be adjacent, and N(v) \ {u} ⊆ N(u).
        if !self.has_edge(u, v) {
            return false;
        }
        let mut nv = self.adj[v].clone();
        nv.remove(u);
        nv.is_subset(&self.adj[u])
    }

    pub fn is_clique(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| {
            let mut rest = s.clone();
            rest.remove(v);
            rest.is_subset(&self.adj[v])
        })
    }

    pub fn is_stable(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| !self.adj[v].intersects(s))
    }

    /// Every vertex of `a` is adjacent to every vertex of `b`.
    pub fn is_complete_to(&self, a: &VertexSet, b: &VertexSet) -> bool {
        a.iter().all(|v| b.is_subset(&self.adj[v]))
    }

    pub fn is_anticomplete_to(&self, a: &VertexSet, b: &VertexSet) -> bool {
        a.iter().all(|v| !self.adj[v].intersects(b))
    }

    /// Partition into classes of vertices with equal closed neighbourhoods.
    pub fn true_twin_partition(&self) -> TwinPartition {
        let n = self.n();
        let closed: Vec<VertexSet> = (0..n).map(|v| self.closed_neighbors(v)).collect();
        let mut part_of = vec![usize::MAX; n];
        let mut parts: Vec<Vec<usize>> = Vec::new();
        for v in 0..n {
            if part_of[v] != usize::MAX {
                continue;
            }
            let id = parts.len();
            let mut part = vec![v];
            part_of[v] = id;
            for u in self.adj[v].iter().filter(|&u| u > v) {
                if part_of[u] == usize::MAX && closed[u] == closed[v] {
                    part_of[u] = id;
                    part.push(u);
                }
            }
            parts.push(part);
        }
        let mut quotient = Graph::new(parts.len());
        for (i, part) in parts.iter().enumerate() {
            let rep = part[0];
            for u in self.adj[rep].iter() {
                let j = part_of[u];
                if j != i {
                    quotient.adj[i].insert(j);
                }
            }
        }
        TwinPartition {
            parts,
            part_of,
            quotient,
        }
    }

    /// Stability number at most two, i.e. the complement is triangle-free.
    pub fn alpha_at_most_2(&self) -> bool {
        let comp = self.complement();
        let triangle_free = comp.edges().all(|(u, v)| !comp.adj[u].intersects(&comp.adj[v]));
        triangle_free
    }

    /// If `G[s]` is a hole (chordless cycle on at least four vertices),
    /// its vertices in cyclic order starting from the least one, continuing to
    /// the smaller of its two neighbours.
    pub fn hole_order(&self, s: &VertexSet) -> Option<Vec<usize>> {
        let k = s.len();
        if k < 4 {
            return None;
        }
        if s.iter().any(|v| self.adj[v].intersection_len(s) != 2) {
            return None;
        }
        let start = s.first()?;
        let mut order = Vec::with_capacity(k);
        order.push(start);
        let mut prev = usize::MAX;
        let mut cur = start;
        loop {
            let next = self.adj[cur].intersection(s).iter().find(|&u| u != prev)?;
            if next == start {
                break;
            }
            order.push(next);
            prev = cur;
            cur = next;
        }
        if order.len() != k {
            return None;
        }
        Some(order)
    }

    /// Vertices in `order` induce a hole in exactly this cyclic order.
    pub fn is_hole_sequence(&self, order: &[usize]) -> bool {
        let k = order.len();
        if k < 4 || order.iter().any(|&v| v >= self.n()) {
            return false;
        }
        let s = VertexSet::from_slice(self.n(), order);
        if s.len() != k {
            return false;
        }
        (0..k).all(|i| {
            let v = order[i];
            let nb = self.adj[v].intersection(&s);
            nb.len() == 2 && nb.contains(order[(i + 1) % k]) && nb.contains(order[(i + k - 1) % k])
        })
    }

    /// Vertices in `order` induce a path in this order.
    pub fn is_induced_path(&self, order: &[usize]) -> bool {
        if order.is_empty() || order.iter().any(|&v| v >= self.n()) {
            return false;
        }
        let s = VertexSet::from_slice(self.n(), order);
        if s.len() != order.len() {
            return false;
        }
        order.iter().enumerate().all(|(i, &v)| {
            let nb = self.adj[v].intersection(&s);
            let want = usize::from(i > 0) + usize::from(i + 1 < order.len());
            nb.len() == want
                && (i == 0 || nb.contains(order[i - 1]))
                && (i + 1 == order.len() || nb.contains(order[i + 1]))
        })
    }

    /// Shortest path from `a` to `b` whose vertices all lie in `within`
    /// (which must contain both). Ties go to the least-index predecessor.
    pub fn shortest_path_within(&self, a: usize, b: usize, within: &VertexSet) -> Option<Vec<usize>> {
        let n = self.n();
        let mut pred = vec![usize::MAX; n];
        let mut seen = VertexSet::singleton(n, a);
        let mut queue = VecDeque::from([a]);
        while let Some(v) = queue.pop_front() {
            if v == b {
                let mut path = vec![b];
                let mut cur = b;
                while cur != a {
                    cur = pred[cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            for u in self.adj[v].intersection(within).iter() {
                if seen.insert(u) {
                    pred[u] = v;
                    queue.push_back(u);
                }
            }
        }
        None
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let mut g = Graph::new(self.n());
        for (u, v) in self.edges() {
            g.adj[perm[u]].insert(perm[v]);
            g.adj[perm[v]].insert(perm[u]);
        }
        g
    }

    /// Maximum degree and the least vertex attaining it.
    pub fn max_degree_vertex(&self) -> (usize, usize) {
        let mut best = (0, 0);
        for v in 0..self.n() {
            let d = self.degree(v);
            if d > best.1 {
                best = (v, d);
            }
        }
        best
    }
}

/// An induced subgraph with its vertices' labels in the parent graph.
#[derive(Clone, Debug)]
pub struct Subgraph {
    pub graph: Graph,
    /// `labels[i]` is the parent label of local vertex `i`; strictly increasing.
    pub labels: Vec<usize>,
}

impl Subgraph {
    pub fn lift(&self, local: &VertexSet, parent_n: usize) -> VertexSet {
        let mut out = VertexSet::new(parent_n);
        for v in local {
            out.insert(self.labels[v]);
        }
        out
    }

    pub fn lift_vec(&self, local: &[usize]) -> Vec<usize> {
        local.iter().map(|&v| self.labels[v]).collect()
    }

    /// Local label of a parent vertex, if present.
    pub fn local(&self, parent: usize) -> Option<usize> {
        self.labels.binary_search(&parent).ok()
    }

    pub fn localize(&self, parent: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new(self.labels.len());
        for (i, &v) in self.labels.iter().enumerate() {
            if parent.contains(v) {
                out.insert(i);
            }
        }
        out
    }
}

/// True-twin classes and the quotient graph in which two classes are
/// adjacent iff they are complete to each other.
#[derive(Clone, Debug)]
pub struct TwinPartition {
    /// Classes ordered by least member; members ascending.
    pub parts: Vec<Vec<usize>>,
    pub part_of: Vec<usize>,
    pub quotient: Graph,
}

/// A graph with a real weight on every vertex.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightedGraph {
    pub graph: Graph,
    pub weights: Vec<f64>,
}

impl WeightedGraph {
    pub fn new(graph: Graph, weights: Vec<f64>) -> Result<WeightedGraph> {
        if weights.len() != graph.n() {
            return Err(Error::InvalidParameter(format!(
                "{} weights given for {} vertices",
                weights.len(),
                graph.n()
            )));
        }
        if weights.iter().any(|w| !w.is_finite()) {
            return Err(Error::InvalidParameter("weights must be finite".into()));
        }
        Ok(WeightedGraph { graph, weights })
    }

    pub fn unit(graph: Graph) -> WeightedGraph {
        let weights = vec![1.0; graph.n()];
        WeightedGraph { graph, weights }
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn weight_of(&self, s: &VertexSet) -> f64 {
        s.iter().map(|v| self.weights[v]).sum()
    }

    pub fn positive_vertices(&self) -> VertexSet {
        let mut s = VertexSet::new(self.n());
        for (v, &w) in self.weights.iter().enumerate() {
            if w > 0.0 {
                s.insert(v);
            }
        }
        s
    }

    pub fn induced(&self, s: &VertexSet) -> Result<(WeightedGraph, Vec<usize>)> {
        let sub = self.graph.induced_subgraph(s)?;
        let weights = sub.labels.iter().map(|&v| self.weights[v]).collect();
        Ok((
            WeightedGraph {
                graph: sub.graph,
                weights,
            },
            sub.labels,
        ))
    }
}

/// A vertex colouring with colours `1..=count`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Coloring {
    pub colors: Vec<usize>,
    pub count: usize,
}

impl Coloring {
    /// Renumbers arbitrary colour labels to `1..=count` in order of first use.
    pub fn from_labels(labels: &[usize]) -> Coloring {
        let mut map = std::collections::HashMap::new();
        let colors = labels
            .iter()
            .map(|&c| {
                let next = map.len() + 1;
                *map.entry(c).or_insert(next)
            })
            .collect();
        Coloring {
            colors,
            count: map.len(),
        }
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colors.len() == g.n()
            && self.colors.iter().all(|&c| c >= 1)
            && g.edges().all(|(u, v)| self.colors[u] != self.colors[v])
            && {
                let mut used: Vec<usize> = self.colors.clone();
                used.sort_unstable();
                used.dedup();
                used.len() == self.count
            }
    }
}

/// Small named graphs used throughout tests and generators.
pub mod families {
    use super::Graph;

    pub fn cycle(k: usize) -> Graph {
        let mut g = Graph::new(k);
        for i in 0..k {
            g.add_edge(i, (i + 1) % k).unwrap();
        }
        g
    }

    pub fn path(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for i in 1..n {
            g.add_edge(i - 1, i).unwrap();
        }
        g
    }

    pub fn complete(n: usize) -> Graph {
        Graph::new(n).complement()
    }

    pub fn edgeless(n: usize) -> Graph {
        Graph::new(n)
    }

    /// Sides `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut g = Graph::new(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    /// Vertices of `h` are shifted by `g.n()`; every cross pair is an edge.
    pub fn join(g: &Graph, h: &Graph) -> Graph {
        let mut out = disjoint_union(g, h);
        for u in 0..g.n() {
            for v in 0..h.n() {
                out.add_edge(u, g.n() + v).unwrap();
            }
        }
        out
    }

    pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
        let mut out = Graph::new(g.n() + h.n());
        for (u, v) in g.edges() {
            out.add_edge(u, v).unwrap();
        }
        for (u, v) in h.edges() {
            out.add_edge(g.n() + u, g.n() + v).unwrap();
        }
        out
    }

    /// C4 plus a vertex adjacent to two adjacent rim vertices; the cap vertex is 4.
    pub fn house() -> Graph {
        let mut g = Graph::new(5);
        for i in 0..4 {
            g.add_edge(i, (i + 1) % 4).unwrap();
        }
        g.add_edge(4, 0).unwrap();
        g.add_edge(4, 1).unwrap();
        g
    }

    /// A hole `0..k` plus centre `k` adjacent to the rim vertices listed.
    pub fn wheel(k: usize, rim_neighbours: &[usize]) -> Graph {
        let mut g = Graph::new(k + 1);
        for i in 0..k {
            g.add_edge(i, (i + 1) % k).unwrap();
        }
        for &r in rim_neighbours {
            g.add_edge(k, r).unwrap();
        }
        g
    }

    /// Blow-up of `pattern`: vertex `i` becomes a clique of `sizes[i]` vertices,
    /// and two cliques are complete iff their pattern vertices are adjacent.
    pub fn blow_up(pattern: &Graph, sizes: &[usize]) -> Graph {
        let offsets: Vec<usize> = sizes
            .iter()
            .scan(0, |acc, &s| {
                let o = *acc;
                *acc += s;
                Some(o)
            })
            .collect();
        let n: usize = sizes.iter().sum();
        let mut g = Graph::new(n);
        for (i, &s) in sizes.iter().enumerate() {
            for a in 0..s {
                for b in a + 1..s {
                    g.add_edge(offsets[i] + a, offsets[i] + b).unwrap();
                }
            }
        }
        for (i, j) in pattern.edges() {
            for a in 0..sizes[i] {
                for b in 0..sizes[j] {
                    g.add_edge(offsets[i] + a, offsets[j] + b).unwrap();
                }
            }
        }
        g
    }
}

#[cfg(test)]
mod tests {
    use super::families::*;
    use super::*;

    fn set(n: usize, v: &[usize]) -> VertexSet {
        VertexSet::from_slice(n, v)
    }

    fn sizes(mut parts: Vec<VertexSet>) -> Vec<usize> {
        let mut s: Vec<usize> = parts.drain(..).map(|p| p.len()).collect();
        s.sort_unstable();
        s
    }

    #[test]
    fn complement_examples() {
        let c5 = cycle(5);
        let comp = c5.complement();
        assert_eq!(comp.edge_count(), 5);
        assert!(comp.hole_order(&comp.vertex_set()).is_some());
        assert_eq!(complete(3).complement(), edgeless(3));
        // complement of C6: every vertex has degree 3 and there are two triangles
        let prism = cycle(6).complement();
        assert!((0..6).all(|v| prism.degree(v) == 3));
        assert!(prism.is_clique(&set(6, &[0, 2, 4])));
        assert!(prism.is_clique(&set(6, &[1, 3, 5])));
    }

    #[test]
    fn components_examples() {
        let two_k2 = disjoint_union(&complete(2), &complete(2));
        assert_eq!(sizes(two_k2.components()), vec![2, 2]);
        assert_eq!(sizes(cycle(5).components()), vec![5]);
        assert_eq!(sizes(edgeless(4).components()), vec![1, 1, 1, 1]);
    }

    #[test]
    fn anticomponents_examples() {
        let c4 = cycle(4);
        let ac = c4.anticomponents();
        assert_eq!(sizes(ac.clone()), vec![2, 2]);
        assert!(ac.contains(&set(4, &[0, 2])));
        assert_eq!(sizes(complete(4).anticomponents()), vec![1, 1, 1, 1]);
        assert_eq!(sizes(cycle(5).anticomponents()), vec![5]);
    }

    #[test]
    fn induced_subgraph_examples() {
        let p = cycle(5).induced_subgraph(&set(5, &[1, 2, 3])).unwrap();
        assert_eq!(p.graph, path(3));
        assert_eq!(p.labels, vec![1, 2, 3]);
        let k2 = complete(4).induced_subgraph(&set(4, &[0, 3])).unwrap();
        assert_eq!(k2.graph, complete(2));
        let e3 = cycle(6).induced_subgraph(&set(6, &[0, 2, 4])).unwrap();
        assert_eq!(e3.graph, edgeless(3));
        assert_eq!(cycle(3).induced_subgraph(&VertexSet::new(3)).unwrap_err(), Error::EmptySet);
    }

    #[test]
    fn dominates_examples() {
        let k3 = complete(3);
        assert!(k3.dominates(0, 1).unwrap() && k3.dominates(1, 0).unwrap());
        let p3 = path(3);
        assert!(p3.dominates(1, 0).unwrap());
        assert!(!p3.dominates(0, 1).unwrap());
        let c4 = cycle(4);
        assert!(!c4.dominates(0, 2).unwrap());
        assert_eq!(c4.dominates(1, 1), Err(Error::SameVertex));
    }

    #[test]
    fn twin_partition_examples() {
        let tp = complete(4).true_twin_partition();
        assert_eq!(tp.parts.len(), 1);
        assert_eq!(tp.quotient.n(), 1);
        let tp = cycle(5).true_twin_partition();
        assert_eq!(tp.parts.len(), 5);
        assert_eq!(tp.quotient, cycle(5));
        let g = blow_up(&cycle(5), &[2, 1, 1, 1, 1]);
        let tp = g.true_twin_partition();
        let mut ps: Vec<usize> = tp.parts.iter().map(Vec::len).collect();
        ps.sort_unstable();
        assert_eq!(ps, vec![1, 1, 1, 1, 2]);
        assert_eq!(tp.quotient, cycle(5));
    }

    #[test]
    fn alpha_at_most_2_examples() {
        assert!(complete(5).alpha_at_most_2());
        assert!(cycle(5).alpha_at_most_2());
        assert!(!complete_bipartite(2, 3).alpha_at_most_2());
    }

    #[test]
    fn hole_helpers() {
        let c6 = cycle(6);
        assert_eq!(c6.hole_order(&c6.vertex_set()), Some(vec![0, 1, 2, 3, 4, 5]));
        assert!(c6.is_hole_sequence(&[2, 1, 0, 5, 4, 3]));
        assert!(!c6.is_hole_sequence(&[0, 2, 1, 3, 4, 5]));
        assert!(complete(4).hole_order(&VertexSet::full(4)).is_none());
        assert!(path(4).is_induced_path(&[3, 2, 1, 0]));
        assert!(!cycle(4).is_induced_path(&[0, 1, 2, 3]));
    }

    #[test]
    fn coloring_validity() {
        let c = Coloring::from_labels(&[7, 3, 7, 3]);
        assert_eq!(c.colors, vec![1, 2, 1, 2]);
        assert!(c.is_proper(&cycle(4)));
        assert!(!Coloring::from_labels(&[1, 1, 2, 2]).is_proper(&cycle(4)));
    }

    #[test]
    fn parse_rejects() {
        assert_eq!(Graph::try_new(0).unwrap_err(), Error::NoVertices);
        assert!(matches!(Graph::from_edges(3, &[(0, 1), (1, 0)]), Err(Error::DuplicateEdge(1, 0))));
        assert!(matches!(Graph::from_edges(3, &[(1, 1)]), Err(Error::SelfLoop(1))));
    }
}
