//! Chordal graphs: recognition through a simplicial elimination ordering,
//! and the exact colouring, clique and stable-set routines built on it.

use crate::error::{Error, Result};
use crate::graph::{Coloring, Graph, WeightedGraph};
use crate::set::VertexSet;

/// A simplicial elimination ordering `v_1, ..., v_n`: the neighbours of each
/// `v_i` that come later in the order form a clique.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EliminationOrder {
    order: Vec<usize>,
    position: Vec<usize>,
}

impl EliminationOrder {
    /// Checks that `order` is a permutation of `0..n` and is simplicial for `g`.
    pub fn new(g: &Graph, order: Vec<usize>) -> Result<EliminationOrder> {
        let n = g.n();
        if order.len() != n {
            return Err(Error::InvalidOrder);
        }
        let mut position = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            if v >= n || position[v] != usize::MAX {
                return Err(Error::InvalidOrder);
            }
            position[v] = i;
        }
        let o = EliminationOrder { order, position };
        if o.is_simplicial_for(g) {
            Ok(o)
        } else {
            Err(Error::InvalidOrder)
        }
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn position(&self, v: usize) -> usize {
        self.position[v]
    }

    /// Neighbours of `v` placed after it.
    pub fn later_neighbors(&self, g: &Graph, v: usize) -> VertexSet {
        let mut s = VertexSet::new(g.n());
        for u in g.neighbors(v).iter() {
            if self.position[u] > self.position[v] {
                s.insert(u);
            }
        }
        s
    }

    fn is_simplicial_for(&self, g: &Graph) -> bool {
        if self.order.len() != g.n() {
            return false;
        }
        // A vertex's later neighbourhood, minus its earliest member p, must lie
        // inside N(p); this single containment per vertex suffices.
        let mut later = VertexSet::new(g.n());
        for &v in self.order.iter().rev() {
            let lv = g.neighbors(v).intersection(&later);
            if let Some(parent) = lv.iter().min_by_key(|&u| self.position[u]) {
                let mut rest = lv.clone();
                rest.remove(parent);
                if !rest.is_subset(g.neighbors(parent)) {
                    return false;
                }
            }
            later.insert(v);
        }
        true
    }
}

/// A simplicial elimination ordering of `g`, or `None` if `g` is not chordal.
///
/// Maximum cardinality search numbers vertices from last to first; the result
/// is then verified explicitly.
pub fn simplicial_order(g: &Graph) -> Option<EliminationOrder> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut numbered = vec![false; n];
    let mut visit = Vec::with_capacity(n);
    for _ in 0..n {
        let mut best = usize::MAX;
        for v in 0..n {
            if !numbered[v] && (best == usize::MAX || weight[v] > weight[best]) {
                best = v;
            }
        }
        numbered[best] = true;
        visit.push(best);
        for u in g.neighbors(best).iter() {
            if !numbered[u] {
                weight[u] += 1;
            }
        }
    }
    visit.reverse();
    EliminationOrder::new(g, visit).ok()
}

pub fn is_chordal(g: &Graph) -> bool {
    simplicial_order(g).is_some()
}

/// Chordality of `G[s]`; an empty set counts as chordal.
pub fn is_chordal_within(g: &Graph, s: &VertexSet) -> bool {
    match g.induced_subgraph(s) {
        Ok(sub) => is_chordal(&sub.graph),
        Err(_) => true,
    }
}

fn check(g: &Graph, o: &EliminationOrder) -> Result<()> {
    if o.is_simplicial_for(g) {
        Ok(())
    } else {
        Err(Error::InvalidOrder)
    }
}

/// Optimal colouring: greedy along the reversed elimination order.
pub fn chordal_color(g: &Graph, o: &EliminationOrder) -> Result<Coloring> {
    check(g, o)?;
    let n = g.n();
    let mut color = vec![0usize; n];
    let mut count = 0;
    for &v in o.order.iter().rev() {
        let mut used = vec![false; count + 2];
        for u in g.neighbors(v).iter() {
            if color[u] != 0 {
                used[color[u]] = true;
            }
        }
        let c = (1..).find(|&c| !used[c]).unwrap();
        color[v] = c;
        count = count.max(c);
    }
    Ok(Coloring { colors: color, count })
}

/// Maximum-weight clique. Vertices of nonpositive weight are never chosen;
/// the empty set is returned when no weight is positive.
pub fn chordal_mwc(wg: &WeightedGraph, o: &EliminationOrder) -> Result<VertexSet> {
    let g = &wg.graph;
    check(g, o)?;
    let positive = wg.positive_vertices();
    let mut best = VertexSet::new(g.n());
    let mut best_weight = 0.0;
    for &v in &o.order {
        if !positive.contains(v) {
            continue;
        }
        let mut clique = o.later_neighbors(g, v);
        clique.intersect_with(&positive);
        clique.insert(v);
        let w = wg.weight_of(&clique);
        if w > best_weight {
            best_weight = w;
            best = clique;
        }
    }
    Ok(best)
}

/// Maximum-weight stable set by charging residual weights forward along the
/// order and selecting backwards. Nonpositive vertices are never chosen.
pub fn chordal_mwss(wg: &WeightedGraph, o: &EliminationOrder) -> Result<VertexSet> {
    let g = &wg.graph;
    check(g, o)?;
    let mut residual = wg.weights.clone();
    let mut charged = Vec::new();
    for &v in &o.order {
        let r = residual[v];
        if r > 0.0 {
            charged.push(v);
            for u in o.later_neighbors(g, v).iter() {
                residual[u] -= r;
            }
        }
    }
    let mut chosen = VertexSet::new(g.n());
    for &v in charged.iter().rev() {
        if !g.neighbors(v).intersects(&chosen) {
            chosen.insert(v);
        }
    }
    Ok(chosen)
}

/// [`chordal_mwc`] on a chordal induced subgraph, lifted to parent labels.
/// `None` if `G[s]` is not chordal.
pub(crate) fn mwc_within(wg: &WeightedGraph, s: &VertexSet) -> Option<VertexSet> {
    if s.is_empty() {
        return Some(VertexSet::new(wg.n()));
    }
    let (sub, labels) = wg.induced(s).ok()?;
    let o = simplicial_order(&sub.graph)?;
    let local = chordal_mwc(&sub, &o).ok()?;
    Some(lift(&local, &labels, wg.n()))
}

pub(crate) fn mwss_within(wg: &WeightedGraph, s: &VertexSet) -> Option<VertexSet> {
    if s.is_empty() {
        return Some(VertexSet::new(wg.n()));
    }
    let (sub, labels) = wg.induced(s).ok()?;
    let o = simplicial_order(&sub.graph)?;
    let local = chordal_mwss(&sub, &o).ok()?;
    Some(lift(&local, &labels, wg.n()))
}

pub(crate) fn lift(local: &VertexSet, labels: &[usize], n: usize) -> VertexSet {
    let mut out = VertexSet::new(n);
    for v in local {
        out.insert(labels[v]);
    }
    out
}
