//! Rings, hyperholes and hyperantiholes: recognition, and the colouring,
//! clique and stable-set routines for hyperholes.

use serde::Serialize;

use crate::chordal;
use crate::error::{Error, Result};
use crate::graph::{Coloring, Graph, WeightedGraph};
use crate::set::VertexSet;

/// A cyclic sequence of parts `X_1, ..., X_k` covering the vertex set.
/// Within a part, vertices are listed from the largest closed neighbourhood
/// to the smallest.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct GoodPartition {
    pub parts: Vec<Vec<usize>>,
}

impl GoodPartition {
    pub fn new(parts: Vec<Vec<usize>>) -> GoodPartition {
        GoodPartition { parts }
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn part_sets(&self, n: usize) -> Vec<VertexSet> {
        self.parts.iter().map(|p| VertexSet::from_slice(n, p)).collect()
    }

    /// Each part's listed order has nested closed neighbourhoods, and the
    /// first vertex sees exactly the part and its two cyclic neighbours.
    pub fn is_dominance_ordered(&self, g: &Graph) -> bool {
        let k = self.parts.len();
        let sets = self.part_sets(g.n());
        (0..k).all(|i| {
            let part = &self.parts[i];
            let span = sets[(i + k - 1) % k].union(&sets[i]).union(&sets[(i + 1) % k]);
            g.closed_neighbors(part[0]) == span
                && part.windows(2).all(|w| g.closed_neighbors(w[1]).is_subset(&g.closed_neighbors(w[0])))
        })
    }
}

fn partition_sets(g: &Graph, parts: &[Vec<usize>]) -> Result<Vec<VertexSet>> {
    let n = g.n();
    let mut seen = VertexSet::new(n);
    let mut sets = Vec::with_capacity(parts.len());
    for part in parts {
        if part.is_empty() {
            return Err(Error::NotAPartition("empty part".into()));
        }
        let mut s = VertexSet::new(n);
        for &v in part {
            g.check_vertex(v)?;
            if !seen.insert(v) {
                return Err(Error::NotAPartition(format!("vertex {v} listed twice")));
            }
            s.insert(v);
        }
        sets.push(s);
    }
    if seen.len() != n {
        return Err(Error::NotAPartition("parts do not cover every vertex".into()));
    }
    Ok(sets)
}

/// Checks that `parts` witnesses a ring: at least four parts, every part a
/// clique, each part anticomplete to all but its two cyclic neighbours, some
/// vertex of each part complete to both neighbouring parts, and any two
/// vertices of a part comparable under domination.
pub fn verify_good_partition(g: &Graph, p: &GoodPartition) -> Result<bool> {
    let sets = partition_sets(g, &p.parts)?;
    Ok(ring_conditions_hold(g, &sets))
}

/// The ring conditions for an already validated cyclic partition.
pub(crate) fn ring_conditions_hold(g: &Graph, sets: &[VertexSet]) -> bool {
    let k = sets.len();
    if k < 4 {
        return false;
    }
    for i in 0..k {
        let part = &sets[i];
        let prev = &sets[(i + k - 1) % k];
        let next = &sets[(i + 1) % k];
        if !g.is_clique(part) {
            return false;
        }
        let allowed = prev.union(part).union(next);
        if part.iter().any(|v| !g.neighbors(v).is_subset(&allowed)) {
            return false;
        }
        let sides = prev.union(next);
        if !part.iter().any(|v| sides.is_subset(g.neighbors(v))) {
            return false;
        }
        let members = part.to_vec();
        for (a, &u) in members.iter().enumerate() {
            for &v in &members[a + 1..] {
                if !g.dominates_unchecked(u, v) && !g.dominates_unchecked(v, u) {
                    return false;
                }
            }
        }
    }
    true
}

/// Orders a clique by decreasing degree (ties by index) and checks the
/// closed neighbourhoods are nested in that order.
fn dominance_order(g: &Graph, part: &VertexSet) -> Option<Vec<usize>> {
    let mut order = part.to_vec();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let nested = order
        .windows(2)
        .all(|w| g.closed_neighbors(w[1]).is_subset(&g.closed_neighbors(w[0])));
    nested.then_some(order)
}

/// Recognises rings, returning the length and a good partition.
///
/// The first part is grown from a least-index vertex `x` of maximum degree as
/// all vertices whose closed neighbourhood lies in `N[x]`; each next part is
/// the unexplored neighbourhood of the previous part's dominant vertex. Every
/// component of the first part's outer neighbourhood is tried as the second
/// part, and a candidate is accepted only after full verification.
pub fn recognize_ring(g: &Graph) -> Option<(usize, GoodPartition)> {
    let n = g.n();
    if n < 4 || !g.is_connected() || chordal::is_chordal(g) {
        return None;
    }
    let (x, _) = g.max_degree_vertex();
    let nx = g.closed_neighbors(x);
    let mut first = VertexSet::new(n);
    for y in nx.iter() {
        if g.closed_neighbors(y).is_subset(&nx) {
            first.insert(y);
        }
    }
    let first_order = dominance_order(g, &first)?;
    if !chordal::is_chordal_within(g, &first.complement()) {
        return None;
    }
    let outer = g.neighbors(first_order[0]).difference(&first);
    for second in g.components_within(&outer) {
        if let Some(found) = extend_ring(g, &first, &first_order, &second) {
            return Some(found);
        }
    }
    None
}

fn extend_ring(g: &Graph, first: &VertexSet, first_order: &[usize], second: &VertexSet) -> Option<(usize, GoodPartition)> {
    let mut covered = first.union(second);
    let mut parts = vec![first_order.to_vec(), dominance_order(g, second)?];
    loop {
        let lead = parts.last().unwrap()[0];
        let next = g.neighbors(lead).difference(&covered);
        if next.is_empty() {
            break;
        }
        parts.push(dominance_order(g, &next)?);
        covered.union_with(&next);
    }
    let k = parts.len();
    if k < 4 || covered.len() != g.n() {
        return None;
    }
    let leads: Vec<usize> = parts.iter().map(|p| p[0]).collect();
    if !g.is_hole_sequence(&leads) {
        return None;
    }
    let partition = GoodPartition::new(parts);
    let sets = partition.part_sets(g.n());
    (ring_conditions_hold(g, &sets) && partition.is_dominance_ordered(g)).then_some((k, partition))
}

/// Recognises hyperholes: the true-twin quotient must be a hole. Parts are
/// the twin classes in cyclic order, starting from the class of vertex 0.
pub fn recognize_hyperhole(g: &Graph) -> Option<(usize, Vec<Vec<usize>>)> {
    let tp = g.true_twin_partition();
    let order = tp.quotient.hole_order(&tp.quotient.vertex_set())?;
    let parts: Vec<Vec<usize>> = order.iter().map(|&i| tp.parts[i].clone()).collect();
    Some((parts.len(), parts))
}

/// Recognises hyperantiholes: the true-twin quotient must be an antihole on
/// at least five vertices, or, for length four, the graph is two disjoint
/// cliques of size at least two each.
pub fn recognize_hyperantihole(g: &Graph) -> Option<(usize, Vec<Vec<usize>>)> {
    let tp = g.true_twin_partition();
    let q = &tp.quotient;
    if q.n() == 2 && !q.has_edge(0, 1) {
        let (a, b) = (&tp.parts[0], &tp.parts[1]);
        if a.len() < 2 || b.len() < 2 {
            return None;
        }
        let parts = vec![vec![a[0]], vec![b[0]], a[1..].to_vec(), b[1..].to_vec()];
        return Some((4, parts));
    }
    if q.n() < 5 {
        return None;
    }
    let comp = q.complement();
    let order = comp.hole_order(&comp.vertex_set())?;
    let parts: Vec<Vec<usize>> = order.iter().map(|&i| tp.parts[i].clone()).collect();
    Some((parts.len(), parts))
}

/// Minimum colouring of a cycle of length `k` in which position `i` needs
/// `mult[i]` distinct colours and adjacent positions share none.
///
/// Returns the colour set of each position (colours `1..=count`) and the count.
pub fn weighted_cycle_color(k: usize, mult: &[usize]) -> Result<(Vec<Vec<usize>>, usize)> {
    if k < 3 {
        return Err(Error::InvalidParameter("cycle length must be at least 3".into()));
    }
    if mult.len() != k {
        return Err(Error::InvalidParameter(format!("{} multiplicities for length {k}", mult.len())));
    }
    if mult.contains(&0) {
        return Err(Error::InvalidParameter("multiplicities must be positive".into()));
    }
    let total: usize = mult.iter().sum();
    let mut count = (0..k).map(|i| mult[i] + mult[(i + 1) % k]).max().unwrap();
    if k % 2 == 1 {
        count = count.max(total.div_ceil(k / 2));
    }
    // Place each position's colours as a run on a circle of `count` colours,
    // directly after the previous run plus an optional gap. The gaps are
    // sized so the runs wrap around a whole number of times, which keeps the
    // closing pair (k-1, 0) disjoint as well.
    let rounds = total.div_ceil(count);
    let mut padding = rounds * count - total;
    let mut sets = Vec::with_capacity(k);
    let mut start = 0usize;
    for i in 0..k {
        sets.push((0..mult[i]).map(|t| (start + t) % count + 1).collect());
        let slack = count - mult[i] - mult[(i + 1) % k];
        let gap = slack.min(padding);
        padding -= gap;
        start = (start + mult[i] + gap) % count;
    }
    debug_assert_eq!(padding, 0);
    Ok((sets, count))
}

/// Optimal colouring of a hyperhole, or `None` if `g` is not a hyperhole.
pub fn hyperhole_color(g: &Graph) -> Option<Coloring> {
    let (k, parts) = recognize_hyperhole(g)?;
    let mult: Vec<usize> = parts.iter().map(Vec::len).collect();
    let (sets, count) = weighted_cycle_color(k, &mult).ok()?;
    let mut colors = vec![0; g.n()];
    for (part, colours) in parts.iter().zip(&sets) {
        for (&v, &c) in part.iter().zip(colours) {
            colors[v] = c;
        }
    }
    Some(Coloring { colors, count })
}

/// Maximum-weight clique and stable set of a weighted hyperhole.
///
/// Nonpositive vertices are discarded first; what remains is either chordal
/// (handled by the chordal routines) or again a hyperhole. `None` if it is
/// neither.
pub fn hyperhole_mwc_mwss(wg: &WeightedGraph) -> Option<(VertexSet, VertexSet)> {
    let n = wg.n();
    let positive = wg.positive_vertices();
    if positive.is_empty() {
        return Some((VertexSet::new(n), VertexSet::new(n)));
    }
    let (sub, labels) = wg.induced(&positive).ok()?;
    if let Some(o) = chordal::simplicial_order(&sub.graph) {
        let clique = chordal::chordal_mwc(&sub, &o).ok()?;
        let stable = chordal::chordal_mwss(&sub, &o).ok()?;
        return Some((chordal::lift(&clique, &labels, n), chordal::lift(&stable, &labels, n)));
    }
    let (k, parts) = recognize_hyperhole(&sub.graph)?;
    let part_weight: Vec<f64> = parts.iter().map(|p| p.iter().map(|&v| sub.weights[v]).sum()).collect();
    let best_pair = (0..k)
        .max_by(|&i, &j| {
            let wi = part_weight[i] + part_weight[(i + 1) % k];
            let wj = part_weight[j] + part_weight[(j + 1) % k];
            wi.partial_cmp(&wj).unwrap().then(j.cmp(&i))
        })
        .unwrap();
    let mut clique = VertexSet::new(n);
    for &v in parts[best_pair].iter().chain(&parts[(best_pair + 1) % k]) {
        clique.insert(labels[v]);
    }

    // One heaviest representative per part turns the problem into a weighted
    // hole; either the first representative is unused, or it is used and its
    // two neighbours are not. Both cases are paths.
    let reps: Vec<usize> = parts
        .iter()
        .map(|p| {
            *p.iter()
                .max_by(|&&a, &&b| sub.weights[a].partial_cmp(&sub.weights[b]).unwrap().then(b.cmp(&a)))
                .unwrap()
        })
        .collect();
    let rep_weights: Vec<f64> = reps.iter().map(|&v| sub.weights[v]).collect();
    let without_first = path_mwss(&rep_weights[1..]);
    let mut with_first: Vec<usize> = path_mwss(&rep_weights[2..k - 1]).into_iter().map(|i| i + 2).collect();
    with_first.push(0);
    let without_first: Vec<usize> = without_first.into_iter().map(|i| i + 1).collect();
    let weight = |idx: &[usize]| idx.iter().map(|&i| rep_weights[i]).sum::<f64>();
    let chosen = if weight(&with_first) > weight(&without_first) {
        with_first
    } else {
        without_first
    };
    let mut stable = VertexSet::new(n);
    for i in chosen {
        stable.insert(labels[reps[i]]);
    }
    Some((clique, stable))
}

/// Maximum-weight stable set of a path with the given positive weights,
/// as indices into `weights`.
fn path_mwss(weights: &[f64]) -> Vec<usize> {
    let len = weights.len();
    // best[i]: optimum over the first i vertices.
    let mut best = vec![0.0; len + 1];
    for i in 1..=len {
        let take = weights[i - 1] + if i >= 2 { best[i - 2] } else { 0.0 };
        best[i] = if take > best[i - 1] { take } else { best[i - 1] };
    }
    let mut chosen = Vec::new();
    let mut i = len;
    while i > 0 {
        if best[i] == best[i - 1] {
            i -= 1;
        } else {
            chosen.push(i - 1);
            i = i.saturating_sub(2);
        }
    }
    chosen.reverse();
    chosen
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn verify_examples() {
        let c5 = cycle(5);
        let singletons = GoodPartition::new((0..5).map(|v| vec![v]).collect());
        assert!(verify_good_partition(&c5, &singletons).unwrap());
        let c4 = cycle(4);
        assert!(!verify_good_partition(&c4, &GoodPartition::new(vec![vec![0, 2], vec![1], vec![3]])).unwrap());
        assert!(verify_good_partition(&c4, &GoodPartition::new(vec![vec![0, 2], vec![1]])).is_err());
        assert!(verify_good_partition(&c4, &GoodPartition::new(vec![vec![0], vec![1], vec![2], vec![3], vec![]])).is_err());
        let g = blow_up(&cycle(5), &[2, 1, 1, 1, 1]);
        let natural = GoodPartition::new(vec![vec![0, 1], vec![2], vec![3], vec![4], vec![5]]);
        assert!(verify_good_partition(&g, &natural).unwrap());
    }

    #[test]
    fn recognize_ring_examples() {
        let (k, p) = recognize_ring(&cycle(7)).unwrap();
        assert_eq!(k, 7);
        assert!(p.parts.iter().all(|part| part.len() == 1));
        assert!(recognize_ring(&complete(4)).is_none());
        let g = blow_up(&cycle(6), &[3, 1, 2, 1, 1, 1]);
        let (k, p) = recognize_ring(&g).unwrap();
        assert_eq!(k, 6);
        assert!(verify_good_partition(&g, &p).unwrap());
        let mut sizes: Vec<usize> = p.parts.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 1, 1, 1, 2, 3]);
    }

    #[test]
    fn recognize_hyperhole_examples() {
        let (k, parts) = recognize_hyperhole(&cycle(5)).unwrap();
        assert_eq!((k, parts.len()), (5, 5));
        let g = blow_up(&cycle(5), &[2, 2, 1, 1, 1]);
        let (k, parts) = recognize_hyperhole(&g).unwrap();
        assert_eq!(k, 5);
        let mut sizes: Vec<usize> = parts.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 1, 1, 2, 2]);
        // Two doubled parts whose second vertices miss each other.
        let mut ring = blow_up(&cycle(5), &[2, 2, 1, 1, 1]);
        ring.remove_edge(1, 3);
        assert!(recognize_ring(&ring).is_some());
        assert!(recognize_hyperhole(&ring).is_none());
    }

    #[test]
    fn recognize_hyperantihole_examples() {
        assert_eq!(recognize_hyperantihole(&cycle(7).complement()).unwrap().0, 7);
        assert_eq!(recognize_hyperantihole(&cycle(6).complement()).unwrap().0, 6);
        assert!(recognize_hyperantihole(&complete(5)).is_none());
        let two_k2 = disjoint_union(&complete(2), &complete(2));
        assert_eq!(recognize_hyperantihole(&two_k2).unwrap().0, 4);
    }

    #[test]
    fn weighted_cycle_color_examples() {
        assert_eq!(weighted_cycle_color(5, &[1; 5]).unwrap().1, 3);
        assert_eq!(weighted_cycle_color(4, &[2, 1, 2, 1]).unwrap().1, 3);
        assert_eq!(weighted_cycle_color(5, &[2; 5]).unwrap().1, 5);
        assert!(weighted_cycle_color(5, &[1, 0, 1, 1, 1]).is_err());
        assert!(weighted_cycle_color(2, &[1, 1]).is_err());
    }

    #[test]
    fn hyperhole_color_examples() {
        assert_eq!(hyperhole_color(&cycle(6)).unwrap().count, 2);
        let g = blow_up(&cycle(5), &[2; 5]);
        let c = hyperhole_color(&g).unwrap();
        assert_eq!(c.count, 5);
        assert!(c.is_proper(&g));
        assert!(hyperhole_color(&complete(4)).is_none());
    }

    #[test]
    fn hyperhole_mwc_mwss_examples() {
        let wg = WeightedGraph::unit(cycle(5));
        let (c, s) = hyperhole_mwc_mwss(&wg).unwrap();
        assert_eq!((wg.weight_of(&c), wg.weight_of(&s)), (2.0, 2.0));
        assert!(wg.graph.is_clique(&c) && wg.graph.is_stable(&s));
        let wg = WeightedGraph::new(cycle(4), vec![3.0, 1.0, 3.0, 1.0]).unwrap();
        let (_, s) = hyperhole_mwc_mwss(&wg).unwrap();
        assert_eq!(s.to_vec(), vec![0, 2]);
        let wg = WeightedGraph::unit(blow_up(&cycle(5), &[2, 1, 1, 1, 1]));
        let (c, _) = hyperhole_mwc_mwss(&wg).unwrap();
        assert_eq!(wg.weight_of(&c), 3.0);
        assert!(hyperhole_mwc_mwss(&WeightedGraph::unit(families::wheel(5, &[0, 1, 2, 3, 4]))).is_none());
    }

    #[test]
    fn path_mwss_small() {
        assert_eq!(path_mwss(&[1.0, 3.0, 1.0]), vec![1]);
        assert_eq!(path_mwss(&[2.0, 3.0, 2.0]), vec![0, 2]);
        assert!(path_mwss(&[]).is_empty());
    }

    use crate::graph::families;
}
