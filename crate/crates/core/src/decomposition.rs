//! Clique-cutset decomposition trees and the colouring, clique and
//! stable-set frameworks that solve a graph from its atoms.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Coloring, Graph, WeightedGraph};
use crate::set::VertexSet;

/// A partition `(A, B, C)` of a vertex set where `C` is a (possibly empty)
/// clique, `A` and `B` are nonempty and no edge joins `A` to `B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueCut {
    pub a: VertexSet,
    pub b: VertexSet,
    pub c: VertexSet,
}

/// Minimal elimination ordering by maximum cardinality search with fill
/// (MCS-M), restricted to `within`.
///
/// Returns the elimination order (first eliminated first) and, for every
/// vertex, its later neighbours in the filled graph.
fn minimal_elimination(g: &Graph, within: &VertexSet) -> (Vec<usize>, Vec<VertexSet>) {
    let n = g.n();
    let mut label = vec![0i64; n];
    let mut numbered = within.complement();
    let mut madj = vec![VertexSet::new(n); n];
    let mut visit = Vec::with_capacity(within.len());
    let mut bottleneck = vec![i64::MAX; n];
    for _ in 0..within.len() {
        let v = within
            .iter()
            .filter(|&u| !numbered.contains(u))
            .max_by_key(|&u| (label[u], Reverse(u)))
            .unwrap();
        numbered.insert(v);
        visit.push(v);
        // Bottleneck search: for each unnumbered u, the least possible maximum
        // label over the interior of a path from v through unnumbered vertices.
        let mut touched = Vec::new();
        let mut heap = BinaryHeap::new();
        for u in g.neighbors(v).iter().filter(|&u| !numbered.contains(u)) {
            bottleneck[u] = -1;
            touched.push(u);
            heap.push(Reverse((-1i64, u)));
        }
        while let Some(Reverse((d, w))) = heap.pop() {
            if d > bottleneck[w] {
                continue;
            }
            let through = d.max(label[w]);
            for z in g.neighbors(w).iter() {
                if numbered.contains(z) || through >= bottleneck[z] {
                    continue;
                }
                if bottleneck[z] == i64::MAX {
                    touched.push(z);
                }
                bottleneck[z] = through;
                heap.push(Reverse((through, z)));
            }
        }
        let mut raised = Vec::new();
        for &u in &touched {
            if bottleneck[u] < label[u] {
                raised.push(u);
            }
            bottleneck[u] = i64::MAX;
        }
        for u in raised {
            label[u] += 1;
            madj[u].insert(v);
        }
    }
    visit.reverse();
    (visit, madj)
}

/// Some clique cut of `G[within]`, or `None` if it has no clique-cutset.
fn any_clique_cut_within(g: &Graph, within: &VertexSet) -> Option<CliqueCut> {
    let empty = VertexSet::new(g.n());
    let comps = g.components_within(within);
    if comps.len() > 1 {
        let a = comps[0].clone();
        let b = within.difference(&a);
        return Some(CliqueCut { a, b, c: empty });
    }
    let (order, madj) = minimal_elimination(g, within);
    for x in order {
        if let Some(cut) = cut_at(g, within, x, &madj[x]) {
            return Some(cut);
        }
    }
    None
}

/// The cut of `G[within]` defined by the separator candidate `sep` and the
/// side containing `x`, if `sep` is a clique that really separates.
fn cut_at(g: &Graph, within: &VertexSet, x: usize, sep: &VertexSet) -> Option<CliqueCut> {
    let c = sep.intersection(within);
    if !g.is_clique(&c) {
        return None;
    }
    let rest = within.difference(&c);
    let a = g.reach_within(x, &rest);
    let b = rest.difference(&a);
    (!b.is_empty()).then_some(CliqueCut { a, b, c })
}

/// Shrinks the `A` side until `G[A ∪ C]` has no clique-cutset.
fn make_extreme(g: &Graph, mut cut: CliqueCut) -> CliqueCut {
    loop {
        let side = cut.a.union(&cut.c);
        let Some(inner) = any_clique_cut_within(g, &side) else {
            return cut;
        };
        // C is a clique, so it lies within one side of the inner cut; the
        // other side is separated from B as well.
        cut = if cut.c.is_subset(&inner.b.union(&inner.c)) {
            CliqueCut {
                b: inner.b.union(&cut.b),
                a: inner.a,
                c: inner.c,
            }
        } else {
            CliqueCut {
                b: inner.a.union(&cut.b),
                a: inner.b,
                c: inner.c,
            }
        };
    }
}

/// A clique cut `(A, B, C)` with `G[A ∪ C]` free of clique-cutsets, or `None`
/// if `G` has no clique-cutset.
pub fn find_extreme_clique_cut(g: &Graph) -> Option<CliqueCut> {
    any_clique_cut_within(g, &g.vertex_set()).map(|cut| make_extreme(g, cut))
}

/// Whether `G[within]` has a clique-cutset.
pub fn has_clique_cutset_within(g: &Graph, within: &VertexSet) -> bool {
    any_clique_cut_within(g, within).is_some()
}

/// The successive extreme splits of a full decomposition.
fn extreme_splits(g: &Graph) -> Vec<CliqueCut> {
    let mut splits = Vec::new();
    let mut current = g.vertex_set();
    loop {
        if g.components_within(&current).len() > 1 {
            let cut = make_extreme(g, any_clique_cut_within(g, &current).unwrap());
            current = cut.b.union(&cut.c);
            splits.push(cut);
            continue;
        }
        // One elimination ordering usually exposes every split; the pieces
        // are re-verified, and the remainder is re-examined until it is an atom.
        let (order, madj) = minimal_elimination(g, &current);
        for x in order {
            if !current.contains(x) {
                continue;
            }
            if let Some(cut) = cut_at(g, &current, x, &madj[x]) {
                let cut = make_extreme(g, cut);
                current = cut.b.union(&cut.c);
                splits.push(cut);
            }
        }
        if !has_clique_cutset_within(g, &current) {
            return splits;
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum NodeKind {
    Leaf,
    Internal,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TreeNode {
    pub id: usize,
    pub kind: NodeKind,
    /// The separating clique of an internal node; empty for leaves.
    pub cutset: Vec<usize>,
    /// Vertices of the graph this node decomposes.
    pub vertices: Vec<usize>,
    pub children: Vec<usize>,
}

/// Rooted clique-cutset decomposition tree; node 0 is the root.
///
/// Every internal node has two children: first a leaf holding `A ∪ C`, then
/// the node decomposing `G[B ∪ C]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionTree {
    pub nodes: Vec<TreeNode>,
}

impl DecompositionTree {
    pub fn root(&self) -> &TreeNode {
        &self.nodes[0]
    }

    pub fn leaves(&self) -> impl Iterator<Item = &TreeNode> {
        self.nodes.iter().filter(|node| node.kind == NodeKind::Leaf)
    }

    /// Internal nodes from the root downwards, each with its split `(A, B, C)`.
    pub fn splits(&self, n: usize) -> Vec<CliqueCut> {
        let mut out = Vec::new();
        let mut node = self.root();
        while node.kind == NodeKind::Internal {
            let c = VertexSet::from_slice(n, &node.cutset);
            let leaf = &self.nodes[node.children[0]];
            let rest = &self.nodes[node.children[1]];
            out.push(CliqueCut {
                a: VertexSet::from_slice(n, &leaf.vertices).difference(&c),
                b: VertexSet::from_slice(n, &rest.vertices).difference(&c),
                c,
            });
            node = rest;
        }
        out
    }

    /// The deepest node along the spine, which is always a leaf.
    pub fn last_leaf(&self) -> &TreeNode {
        let mut node = self.root();
        while node.kind == NodeKind::Internal {
            node = &self.nodes[node.children[1]];
        }
        node
    }

    /// Glues the leaf graphs back together along the recorded cutsets,
    /// deepest split first, returning a graph on `g`'s vertex labels.
    pub fn reassemble(&self, g: &Graph) -> Result<Graph> {
        let n = g.n();
        let induced = |vertices: &[usize]| {
            let s = VertexSet::from_slice(n, vertices);
            g.induced_subgraph(&s)
        };
        let last = self.last_leaf();
        let mut labels = last.vertices.clone();
        let mut acc = induced(&last.vertices)?.graph;
        let spine: Vec<&TreeNode> = {
            let mut v = Vec::new();
            let mut node = self.root();
            while node.kind == NodeKind::Internal {
                v.push(node);
                node = &self.nodes[node.children[1]];
            }
            v
        };
        for node in spine.into_iter().rev() {
            let leaf = &self.nodes[node.children[0]];
            let piece = induced(&leaf.vertices)?;
            let shared: Vec<(usize, usize)> = node
                .cutset
                .iter()
                .map(|&v| {
                    let in_acc = labels.iter().position(|&u| u == v).unwrap();
                    let in_piece = piece.local(v).unwrap();
                    (in_acc, in_piece)
                })
                .collect();
            let (glued, piece_map) = glue_with_map(&acc, &piece.graph, &shared)?;
            let mut new_labels = labels.clone();
            new_labels.resize(glued.n(), usize::MAX);
            for (local, &target) in piece_map.iter().enumerate() {
                new_labels[target] = piece.labels[local];
            }
            labels = new_labels;
            acc = glued;
        }
        // Express the result in the original labelling.
        let mut out = Graph::new(n);
        if labels.len() != n {
            return Err(Error::InvalidParameter("leaves do not cover the graph".into()));
        }
        for (u, v) in acc.edges() {
            out.add_edge(labels[u], labels[v])?;
        }
        Ok(out)
    }
}

/// Decomposes `g` by repeated extreme clique cuts.
pub fn build_tree(g: &Graph) -> DecompositionTree {
    let splits = extreme_splits(g);
    let mut nodes = Vec::with_capacity(2 * splits.len() + 1);
    let mut current = g.vertex_set();
    for cut in &splits {
        let id = nodes.len();
        nodes.push(TreeNode {
            id,
            kind: NodeKind::Internal,
            cutset: cut.c.to_vec(),
            vertices: current.to_vec(),
            children: vec![id + 1, id + 2],
        });
        nodes.push(TreeNode {
            id: id + 1,
            kind: NodeKind::Leaf,
            cutset: Vec::new(),
            vertices: cut.a.union(&cut.c).to_vec(),
            children: Vec::new(),
        });
        current = cut.b.union(&cut.c);
    }
    let id = nodes.len();
    nodes.push(TreeNode {
        id,
        kind: NodeKind::Leaf,
        cutset: Vec::new(),
        vertices: current.to_vec(),
        children: Vec::new(),
    });
    DecompositionTree { nodes }
}

/// Glues `h` onto `g` by identifying `shared[i].1` in `h` with `shared[i].0`
/// in `g`. Vertices of `g` keep their labels; the remaining vertices of `h`
/// follow in increasing order.
pub fn glue(g: &Graph, h: &Graph, shared: &[(usize, usize)]) -> Result<Graph> {
    glue_with_map(g, h, shared).map(|(graph, _)| graph)
}

/// [`glue`], also returning where each vertex of `h` ended up.
pub fn glue_with_map(g: &Graph, h: &Graph, shared: &[(usize, usize)]) -> Result<(Graph, Vec<usize>)> {
    let mut in_g = VertexSet::new(g.n());
    let mut in_h = VertexSet::new(h.n());
    let mut map = vec![usize::MAX; h.n()];
    for &(u, v) in shared {
        g.check_vertex(u)?;
        h.check_vertex(v)?;
        if !in_g.insert(u) || !in_h.insert(v) {
            return Err(Error::InvalidParameter("a shared vertex is listed twice".into()));
        }
        map[v] = u;
    }
    if !g.is_clique(&in_g) || !h.is_clique(&in_h) {
        return Err(Error::NotAClique);
    }
    let mut next = g.n();
    for slot in map.iter_mut().filter(|m| **m == usize::MAX) {
        *slot = next;
        next += 1;
    }
    let mut out = Graph::new(next);
    for (u, v) in g.edges() {
        out.add_edge(u, v)?;
    }
    for (u, v) in h.edges() {
        out.add_edge(map[u], map[v])?;
    }
    Ok((out, map))
}

/// Optimal colouring assembled from the atoms' colourings, or `None` if the
/// leaf colourer rejects some atom.
pub fn solve_coloring<F>(g: &Graph, leaf_colorer: F) -> Option<Coloring>
where
    F: Fn(&Graph) -> Option<Coloring>,
{
    let n = g.n();
    let tree = build_tree(g);
    let color_piece = |vertices: &[usize]| -> Option<Vec<(usize, usize)>> {
        let sub = g.induced_subgraph(&VertexSet::from_slice(n, vertices)).ok()?;
        let c = leaf_colorer(&sub.graph)?;
        Some(sub.labels.iter().zip(&c.colors).map(|(&v, &col)| (v, col)).collect())
    };
    let mut colors = vec![0usize; n];
    for (v, c) in color_piece(&tree.last_leaf().vertices)? {
        colors[v] = c;
    }
    let splits = tree.splits(n);
    let leaf_nodes: Vec<&TreeNode> = {
        let mut v = Vec::new();
        let mut node = tree.root();
        while node.kind == NodeKind::Internal {
            v.push(&tree.nodes[node.children[0]]);
            node = &tree.nodes[node.children[1]];
        }
        v
    };
    for (cut, leaf) in splits.iter().zip(leaf_nodes).rev() {
        let piece = color_piece(&leaf.vertices)?;
        // Rename the piece's colours so they agree with the cutset colours
        // already fixed; other colours take the smallest unused values.
        let mut rename = std::collections::HashMap::new();
        let mut taken = std::collections::HashSet::new();
        for &(v, c) in &piece {
            if cut.c.contains(v) {
                rename.insert(c, colors[v]);
                taken.insert(colors[v]);
            }
        }
        let mut next = 1;
        let mut fresh: Vec<usize> = piece.iter().map(|&(_, c)| c).collect();
        fresh.sort_unstable();
        fresh.dedup();
        for c in fresh {
            if rename.contains_key(&c) {
                continue;
            }
            while taken.contains(&next) {
                next += 1;
            }
            rename.insert(c, next);
            taken.insert(next);
        }
        for (v, c) in piece {
            if cut.a.contains(v) {
                colors[v] = rename[&c];
            }
        }
    }
    let coloring = Coloring::from_labels(&colors);
    coloring.is_proper(g).then_some(coloring)
}

/// Maximum-weight clique: the best clique found in any atom.
pub fn solve_mwc<F>(wg: &WeightedGraph, leaf_solver: F) -> Option<VertexSet>
where
    F: Fn(&WeightedGraph) -> Option<VertexSet>,
{
    let n = wg.n();
    let tree = build_tree(&wg.graph);
    let mut best = VertexSet::new(n);
    let mut best_weight = 0.0;
    for leaf in tree.leaves() {
        let s = VertexSet::from_slice(n, &leaf.vertices);
        let (sub, labels) = wg.induced(&s).ok()?;
        let local = leaf_solver(&sub)?;
        let clique = crate::chordal::lift(&local, &labels, n);
        let w = wg.weight_of(&clique);
        if w > best_weight {
            best_weight = w;
            best = clique;
        }
    }
    Some(best)
}

/// Weight of the set a leaf solver returns on `G[s]` under `weights`, and
/// the set itself in parent labels.
fn solve_side<F>(g: &Graph, weights: &[f64], s: &VertexSet, leaf_solver: &F) -> Option<(f64, VertexSet)>
where
    F: Fn(&WeightedGraph) -> Option<VertexSet>,
{
    let sub = g.induced_subgraph(s).ok()?;
    let local_weights = sub.labels.iter().map(|&v| weights[v]).collect();
    let wsub = WeightedGraph::new(sub.graph.clone(), local_weights).ok()?;
    let local = leaf_solver(&wsub)?;
    let set = sub.lift(&local, g.n());
    let value = set.iter().map(|v| weights[v]).sum();
    Some((value, set))
}

/// Maximum-weight stable set assembled along the tree spine.
///
/// At each split `(A, B, C)` the `A` side is solved alone and with each
/// single cutset vertex `c`; `c` is reweighted to its marginal gain
/// `α(A ∪ {c}) − α(A)` and the `B ∪ C` side is solved recursively.
pub fn solve_mwss<F>(wg: &WeightedGraph, leaf_solver: F) -> Option<VertexSet>
where
    F: Fn(&WeightedGraph) -> Option<VertexSet>,
{
    let g = &wg.graph;
    let n = g.n();
    let tree = build_tree(g);
    let splits = tree.splits(n);

    struct Level {
        alone: VertexSet,
        with_cut_vertex: Vec<(usize, VertexSet)>,
    }
    let mut weights = wg.weights.clone();
    let mut levels = Vec::with_capacity(splits.len());
    let mut level_weights = Vec::with_capacity(splits.len() + 1);
    for cut in &splits {
        level_weights.push(weights.clone());
        let (alpha_a, alone) = solve_side(g, &weights, &cut.a, &leaf_solver)?;
        let mut with_cut_vertex = Vec::new();
        let mut reweighted = Vec::new();
        for c in cut.c.iter() {
            let mut side = cut.a.clone();
            side.insert(c);
            let (alpha_ac, set) = solve_side(g, &weights, &side, &leaf_solver)?;
            reweighted.push((c, alpha_ac - alpha_a));
            with_cut_vertex.push((c, set));
        }
        for (c, w) in reweighted {
            weights[c] = w;
        }
        levels.push(Level {
            alone,
            with_cut_vertex,
        });
    }
    level_weights.push(weights.clone());
    let last = VertexSet::from_slice(n, &tree.last_leaf().vertices);
    let (_, mut chosen) = solve_side(g, &weights, &last, &leaf_solver)?;

    for (i, (cut, level)) in splits.iter().zip(&levels).enumerate().rev() {
        let below = &level_weights[i + 1];
        let kept: Vec<usize> = chosen.iter().filter(|&v| below[v] > 0.0).collect();
        chosen = VertexSet::from_slice(n, &kept);
        let in_cut: Vec<usize> = chosen.intersection(&cut.c).to_vec();
        let side = match in_cut.as_slice() {
            [] => &level.alone,
            [c] => &level.with_cut_vertex.iter().find(|(v, _)| v == c)?.1,
            _ => return None,
        };
        chosen.union_with(side);
    }
    let kept: Vec<usize> = chosen.iter().filter(|&v| wg.weights[v] > 0.0).collect();
    let chosen = VertexSet::from_slice(n, &kept);
    g.is_stable(&chosen).then_some(chosen)
}
