//! Exponential-time ground truth: exact chromatic number, weighted clique
//! and stable set, hole enumeration, an exhaustive scan for the forbidden
//! configurations, and a brute-force ring test. All entry points enforce a
//! hard size limit.

use crate::detectors::{CertKind, Certificate};
use crate::error::{Error, Result};
use crate::graph::{Graph, WeightedGraph};
use crate::rings::ring_conditions_hold;
use crate::set::VertexSet;

pub const CHI_LIMIT: usize = 16;
pub const WEIGHT_LIMIT: usize = 20;
pub const SCAN_LIMIT: usize = 14;
pub const RING_LIMIT: usize = 9;

fn check_limit(g: &Graph, limit: usize) -> Result<()> {
    if g.n() > limit {
        Err(Error::TooLarge { n: g.n(), limit })
    } else {
        Ok(())
    }
}

/// Adjacency as bit masks; callers guarantee `n <= 64`.
fn masks(g: &Graph) -> Vec<u64> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, u| m | (1 << u)))
        .collect()
}

fn mask_to_vec(mut m: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(m.count_ones() as usize);
    while m != 0 {
        out.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    out
}

/// Exact chromatic number for graphs with at most `limit` vertices
/// (`limit` is capped at [`CHI_LIMIT`]).
///
/// The search tries `k = ω, ω+1, ...` below a greedy upper bound, colouring
/// the most constrained vertex first and opening at most one new colour per
/// step.
pub fn brute_chi(g: &Graph, limit: usize) -> Result<usize> {
    check_limit(g, limit.min(CHI_LIMIT))?;
    let adj = masks(g);
    let lower = max_clique_size(&adj);
    let upper = greedy_upper_bound(&adj);
    for k in lower..upper {
        if k_colorable(&adj, k) {
            return Ok(k);
        }
    }
    Ok(upper)
}

fn max_clique_size(adj: &[u64]) -> usize {
    fn expand(adj: &[u64], size: usize, cand: u64, best: &mut usize) {
        if cand == 0 {
            *best = (*best).max(size);
            return;
        }
        if size + cand.count_ones() as usize <= *best {
            return;
        }
        let mut rest = cand;
        while rest != 0 {
            if size + rest.count_ones() as usize <= *best {
                return;
            }
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            expand(adj, size + 1, rest & adj[v], best);
        }
    }
    let n = adj.len();
    let mut best = 0;
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    expand(adj, 0, all, &mut best);
    best
}

fn greedy_upper_bound(adj: &[u64]) -> usize {
    let n = adj.len();
    let mut color = vec![usize::MAX; n];
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(adj[v].count_ones()));
    let mut count = 0;
    for v in order {
        let used: Vec<usize> = mask_to_vec(adj[v]).into_iter().map(|u| color[u]).collect();
        let c = (0..).find(|c| !used.contains(c)).unwrap();
        color[v] = c;
        count = count.max(c + 1);
    }
    count
}

fn k_colorable(adj: &[u64], k: usize) -> bool {
    fn go(adj: &[u64], k: usize, color: &mut [usize], used_colors: usize, left: usize) -> bool {
        if left == 0 {
            return true;
        }
        // Most saturated uncoloured vertex, ties by degree.
        let mut pick = usize::MAX;
        let mut pick_key = (0, 0);
        let mut pick_forbidden = 0u64;
        for v in 0..adj.len() {
            if color[v] != usize::MAX {
                continue;
            }
            let forbidden = mask_to_vec(adj[v])
                .into_iter()
                .filter(|&u| color[u] != usize::MAX)
                .fold(0u64, |m, u| m | (1 << color[u]));
            let key = (forbidden.count_ones(), adj[v].count_ones());
            if pick == usize::MAX || key > pick_key {
                pick = v;
                pick_key = key;
                pick_forbidden = forbidden;
            }
        }
        let limit = (used_colors + 1).min(k);
        for c in 0..limit {
            if pick_forbidden & (1 << c) != 0 {
                continue;
            }
            color[pick] = c;
            if go(adj, k, color, used_colors.max(c + 1), left - 1) {
                return true;
            }
            color[pick] = usize::MAX;
        }
        false
    }
    let mut color = vec![usize::MAX; adj.len()];
    go(adj, k, &mut color, 0, adj.len())
}

/// Maximum-weight clique by enumerating maximal cliques of the positive-
/// weight vertices (Bron–Kerbosch with pivoting). The empty set, of weight
/// zero, is returned when no weight is positive.
pub fn brute_omega_w(wg: &WeightedGraph) -> Result<(VertexSet, f64)> {
    check_limit(&wg.graph, WEIGHT_LIMIT)?;
    let adj = masks(&wg.graph);
    let positive = (0..wg.n())
        .filter(|&v| wg.weights[v] > 0.0)
        .fold(0u64, |m, v| m | (1 << v));
    let mut best = (0u64, 0.0);
    bron_kerbosch(&adj, &wg.weights, 0, positive, 0, &mut best);
    let set = VertexSet::from_slice(wg.n(), &mask_to_vec(best.0));
    Ok((set, best.1))
}

fn bron_kerbosch(adj: &[u64], w: &[f64], r: u64, mut p: u64, mut x: u64, best: &mut (u64, f64)) {
    if p == 0 && x == 0 {
        let weight: f64 = mask_to_vec(r).iter().map(|&v| w[v]).sum();
        if weight > best.1 {
            *best = (r, weight);
        }
        return;
    }
    let pivot = mask_to_vec(p | x)
        .into_iter()
        .max_by_key(|&u| (p & adj[u]).count_ones())
        .expect("p or x is nonempty");
    for v in mask_to_vec(p & !adj[pivot]) {
        let bit = 1u64 << v;
        bron_kerbosch(adj, w, r | bit, p & adj[v], x & adj[v], best);
        p &= !bit;
        x |= bit;
    }
}

/// Maximum-weight stable set: a maximum-weight clique of the complement.
pub fn brute_alpha_w(wg: &WeightedGraph) -> Result<(VertexSet, f64)> {
    check_limit(&wg.graph, WEIGHT_LIMIT)?;
    let comp = WeightedGraph::new(wg.graph.complement(), wg.weights.clone())?;
    brute_omega_w(&comp)
}

/// Every hole of `g`, each listed once starting at its least vertex and
/// heading towards the smaller of that vertex's rim neighbours.
pub fn enumerate_holes(g: &Graph) -> Result<Vec<Vec<usize>>> {
    if g.n() > 64 {
        return Err(Error::TooLarge { n: g.n(), limit: 64 });
    }
    let adj = masks(g);
    let mut holes = Vec::new();
    for s in 0..g.n() {
        let mut path = vec![s];
        grow_holes(&adj, s, &mut path, 1 << s, &mut holes);
    }
    Ok(holes)
}

/// Extends the induced path `path`, whose vertices after the first exceed
/// `s`; `on_path` is its vertex mask.
fn grow_holes(adj: &[u64], s: usize, path: &mut Vec<usize>, on_path: u64, holes: &mut Vec<Vec<usize>>) {
    let last = *path.last().unwrap();
    let before_last = on_path & !(1u64 << last);
    let start_bit = 1u64 << s;
    for v in mask_to_vec(adj[last] & !on_path) {
        if v < s {
            continue;
        }
        // v may touch the path only at `last`, and at `s` when closing.
        let touches = adj[v] & before_last;
        if touches == 0 {
            path.push(v);
            grow_holes(adj, s, path, on_path | (1 << v), holes);
            path.pop();
        } else if touches == start_bit && path.len() >= 3 && path[1] < v {
            let mut hole = path.clone();
            hole.push(v);
            holes.push(hole);
        }
    }
}

/// Attachment of `x` to a hole, classified directly from its rim
/// neighbourhood.
fn attachment_kind(adj: &[u64], hole: &[usize], x: usize) -> Option<CertKind> {
    let k = hole.len();
    let on: Vec<bool> = hole.iter().map(|&h| adj[x] >> h & 1 == 1).collect();
    let count = on.iter().filter(|&&b| b).count();
    let consecutive_run = |len: usize| (0..k).any(|i| (0..len).all(|j| on[(i + j) % k]));
    match count {
        2 if consecutive_run(2) => Some(CertKind::Cap),
        c if c == k => Some(CertKind::UniversalWheel),
        3 if consecutive_run(3) => Some(CertKind::TwinWheel),
        c if c >= 3 => Some(CertKind::ProperWheel),
        _ => None,
    }
}

/// Paths between branch vertices (degree three) of `G[s]`, walking through
/// degree-two vertices; each path is reported once, from its smaller end.
fn branches(adj: &[u64], s: u64, branch: u64) -> Option<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    for d in mask_to_vec(branch) {
        for first in mask_to_vec(adj[d] & s) {
            let mut path = vec![d, first];
            let (mut prev, mut cur) = (d, first);
            while branch >> cur & 1 == 0 {
                let next = adj[cur] & s & !(1 << prev);
                if next.count_ones() != 1 {
                    return None;
                }
                prev = cur;
                cur = next.trailing_zeros() as usize;
                path.push(cur);
                if path.len() > 64 {
                    return None;
                }
            }
            if cur == d {
                return None;
            }
            if d < cur {
                out.push(path);
            }
        }
    }
    Some(out)
}

fn is_triangle(adj: &[u64], t: &[usize]) -> bool {
    t.len() == 3 && adj[t[0]] >> t[1] & 1 == 1 && adj[t[1]] >> t[2] & 1 == 1 && adj[t[0]] >> t[2] & 1 == 1
}

/// Whether `G[s]` is a theta, pyramid or prism, with its three paths.
fn classify_three_path(g: &Graph, adj: &[u64], s: u64) -> Option<Certificate> {
    let verts = mask_to_vec(s);
    let mut branch = 0u64;
    for &v in &verts {
        match (adj[v] & s).count_ones() {
            2 => {}
            3 => branch |= 1 << v,
            _ => return None,
        }
    }
    let ends = mask_to_vec(branch);
    let cert = match ends.len() {
        2 => {
            let all = branches(adj, s, branch)?;
            if all.len() != 3 {
                return None;
            }
            Certificate::three_path(CertKind::Theta, all)
        }
        4 => {
            let tri: Vec<usize> = ends
                .iter()
                .copied()
                .filter(|&a| {
                    let others: Vec<usize> = ends.iter().copied().filter(|&b| b != a).collect();
                    is_triangle(adj, &others)
                })
                .collect();
            let &[apex] = tri.as_slice() else { return None };
            let mut paths = Vec::new();
            for p in branches(adj, s, branch)? {
                if p[0] == apex {
                    paths.push(p.into_iter().rev().collect());
                } else if *p.last().unwrap() == apex {
                    paths.push(p);
                }
            }
            if paths.len() != 3 {
                return None;
            }
            Certificate::three_path(CertKind::Pyramid, paths)
        }
        6 => {
            let first = ends[0];
            let near: Vec<usize> = ends.iter().copied().filter(|&v| adj[first] >> v & 1 == 1).collect();
            let mut pairs = near
                .iter()
                .enumerate()
                .flat_map(|(i, &a)| near[i + 1..].iter().map(move |&b| (a, b)))
                .filter(|&(a, b)| adj[a] >> b & 1 == 1);
            let (Some((a, b)), None) = (pairs.next(), pairs.next()) else {
                return None;
            };
            let side = [first, a, b];
            let mut paths = Vec::new();
            for p in branches(adj, s, branch)? {
                if side.contains(&p[0]) && !side.contains(p.last().unwrap()) {
                    paths.push(p);
                } else if side.contains(p.last().unwrap()) && !side.contains(&p[0]) {
                    paths.push(p.into_iter().rev().collect());
                }
            }
            if paths.len() != 3 {
                return None;
            }
            Certificate::three_path(CertKind::Prism, paths)
        }
        _ => return None,
    };
    crate::detectors::check_certificate(g, &cert).then_some(cert)
}

/// Orders scan results: vertex count, sorted vertices, kind.
type ScanKey = (usize, Vec<usize>, CertKind);

/// Exhaustive search for an induced configuration of one of the `forbid`
/// kinds (three-path configurations, the three wheel kinds, caps).
///
/// Wheels and caps are found by enumerating holes and classifying every
/// outside vertex by its rim neighbourhood; three-path configurations by
/// classifying every vertex subset of size at least five. Among all
/// configurations found, the one with the fewest vertices is returned, ties
/// broken by the sorted vertex list and then by kind.
pub fn truemper_scan(g: &Graph, forbid: &[CertKind]) -> Result<Option<Certificate>> {
    check_limit(g, SCAN_LIMIT)?;
    let adj = masks(g);
    let n = g.n();
    let mut best: Option<(ScanKey, Certificate)> = None;
    let mut offer = |cert: Certificate| {
        let mut vs = cert.vertices.clone();
        vs.extend(cert.center);
        vs.sort_unstable();
        let key = (vs.len(), vs, cert.kind);
        if best.as_ref().is_none_or(|(k, _)| key < *k) {
            best = Some((key, cert));
        }
    };
    let wants_attachment = forbid
        .iter()
        .any(|k| k.is_wheel() || *k == CertKind::Cap);
    if wants_attachment {
        for hole in enumerate_holes(g)? {
            let on_hole = hole.iter().fold(0u64, |m, &v| m | (1 << v));
            for x in 0..n {
                if on_hole >> x & 1 == 1 {
                    continue;
                }
                if let Some(kind) = attachment_kind(&adj, &hole, x) {
                    if forbid.contains(&kind) {
                        offer(Certificate::with_center(kind, hole.clone(), x));
                    }
                }
            }
        }
    }
    if forbid.iter().any(|k| k.is_three_path()) && n >= 5 {
        for s in 1u64..(1u64 << n) {
            if s.count_ones() < 5 {
                continue;
            }
            if let Some(cert) = classify_three_path(g, &adj, s) {
                if forbid.contains(&cert.kind) {
                    offer(cert);
                }
            }
        }
    }
    Ok(best.map(|(_, c)| c))
}

/// Whether some hole has length at least five, by enumeration.
pub fn brute_has_long_hole(g: &Graph) -> Result<bool> {
    Ok(enumerate_holes(g)?.iter().any(|h| h.len() >= 5))
}

/// Whether `g` contains a cap, by enumeration.
pub fn brute_has_cap(g: &Graph) -> Result<bool> {
    let adj = masks(g);
    for hole in enumerate_holes(g)? {
        let on_hole = hole.iter().fold(0u64, |m, &v| m | (1 << v));
        for x in 0..g.n() {
            if on_hole >> x & 1 == 0 && attachment_kind(&adj, &hole, x) == Some(CertKind::Cap) {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Whether `g` is a ring, by trying every partition into cliques whose
/// adjacency pattern is a cycle of length at least four.
pub fn brute_is_ring(g: &Graph) -> Result<bool> {
    check_limit(g, RING_LIMIT)?;
    let n = g.n();
    let mut block_of = vec![0usize; n];
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    Ok(try_partitions(g, 0, &mut block_of, &mut blocks))
}

fn try_partitions(g: &Graph, v: usize, block_of: &mut [usize], blocks: &mut Vec<Vec<usize>>) -> bool {
    let n = g.n();
    if v == n {
        return blocks.len() >= 4 && cyclic_ring(g, blocks, block_of);
    }
    for b in 0..blocks.len() {
        if blocks[b].iter().all(|&u| g.has_edge(u, v)) {
            blocks[b].push(v);
            block_of[v] = b;
            if try_partitions(g, v + 1, block_of, blocks) {
                return true;
            }
            blocks[b].pop();
        }
    }
    blocks.push(vec![v]);
    block_of[v] = blocks.len() - 1;
    let found = try_partitions(g, v + 1, block_of, blocks);
    blocks.pop();
    found
}

/// Orders the blocks along the cycle formed by their adjacency, if it is one,
/// and checks the ring conditions.
fn cyclic_ring(g: &Graph, blocks: &[Vec<usize>], block_of: &[usize]) -> bool {
    let k = blocks.len();
    let mut touch = vec![vec![false; k]; k];
    for (u, v) in g.edges() {
        let (a, b) = (block_of[u], block_of[v]);
        if a != b {
            touch[a][b] = true;
            touch[b][a] = true;
        }
    }
    if (0..k).any(|a| touch[a].iter().filter(|&&t| t).count() != 2) {
        return false;
    }
    let mut order = vec![0];
    let mut prev = usize::MAX;
    let mut cur = 0;
    loop {
        let next = (0..k).find(|&b| touch[cur][b] && b != prev).unwrap();
        if next == 0 {
            break;
        }
        order.push(next);
        prev = cur;
        cur = next;
    }
    if order.len() != k {
        return false;
    }
    let sets: Vec<VertexSet> = order.iter().map(|&b| VertexSet::from_slice(g.n(), &blocks[b])).collect();
    ring_conditions_hold(g, &sets)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    fn forbid_all() -> Vec<CertKind> {
        vec![
            CertKind::Theta,
            CertKind::Pyramid,
            CertKind::Prism,
            CertKind::UniversalWheel,
            CertKind::TwinWheel,
            CertKind::ProperWheel,
            CertKind::Cap,
        ]
    }

    #[test]
    fn chi_examples() {
        assert_eq!(brute_chi(&cycle(5), CHI_LIMIT).unwrap(), 3);
        for n in 1..8 {
            assert_eq!(brute_chi(&complete(n), CHI_LIMIT).unwrap(), n);
        }
        assert_eq!(brute_chi(&join(&cycle(5), &cycle(5)), CHI_LIMIT).unwrap(), 6);
        assert_eq!(brute_chi(&cycle(7).complement(), CHI_LIMIT).unwrap(), 4);
        assert!(brute_chi(&edgeless(17), CHI_LIMIT).is_err());
    }

    #[test]
    fn weight_examples() {
        let c5 = WeightedGraph::unit(cycle(5));
        assert_eq!(brute_omega_w(&c5).unwrap().1, 2.0);
        assert_eq!(brute_alpha_w(&c5).unwrap().1, 2.0);
        let k23 = WeightedGraph::unit(complete_bipartite(2, 3));
        assert_eq!(brute_alpha_w(&k23).unwrap().1, 3.0);
        let p3 = WeightedGraph::new(path(3), vec![2.0, 3.0, 2.0]).unwrap();
        assert_eq!(brute_alpha_w(&p3).unwrap().1, 4.0);
        let neg = WeightedGraph::new(complete(3), vec![-1.0, 0.0, -2.0]).unwrap();
        assert!(brute_omega_w(&neg).unwrap().0.is_empty());
    }

    #[test]
    fn hole_enumeration() {
        assert_eq!(enumerate_holes(&cycle(6)).unwrap(), vec![vec![0, 1, 2, 3, 4, 5]]);
        assert!(enumerate_holes(&complete(5)).unwrap().is_empty());
        // K_{2,3} has three 4-holes.
        assert_eq!(enumerate_holes(&complete_bipartite(2, 3)).unwrap().len(), 3);
    }

    #[test]
    fn scan_examples() {
        let c6bar = cycle(6).complement();
        let gut = crate::classes::ClassId::Gut.forbidden_kinds();
        assert_eq!(truemper_scan(&c6bar, &gut).unwrap().unwrap().kind, CertKind::Prism);
        // Deleting a vertex of the prism leaves a house.
        assert_eq!(truemper_scan(&c6bar, &forbid_all()).unwrap().unwrap().kind, CertKind::Cap);
        let w54 = wheel(5, &[0, 1, 2, 3]);
        let found = truemper_scan(&w54, &[CertKind::ProperWheel]).unwrap().unwrap();
        assert_eq!(found.kind, CertKind::ProperWheel);
        assert_eq!(
            truemper_scan(&complete_bipartite(2, 3), &forbid_all()).unwrap().unwrap().kind,
            CertKind::Theta
        );
        assert_eq!(truemper_scan(&house(), &forbid_all()).unwrap().unwrap().kind, CertKind::Cap);
        let pyramid = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5), (3, 4), (3, 5)]).unwrap();
        assert_eq!(truemper_scan(&pyramid, &gut).unwrap().unwrap().kind, CertKind::Pyramid);
        for seed in 0..10 {
            let g = crate::generators::gen_chordal(seed, 12, 0.4).unwrap();
            assert!(truemper_scan(&g, &forbid_all()).unwrap().is_none());
        }
    }

    #[test]
    fn pyramid_detected() {
        // Triangle 0,1,2; apex 6; paths 0-6, 1-3-6, 2-4-5-6.
        let g = Graph::from_edges(7, &[(0, 1), (1, 2), (0, 2), (0, 6), (1, 3), (3, 6), (2, 4), (4, 5), (5, 6)]).unwrap();
        let cert = truemper_scan(&g, &[CertKind::Pyramid]).unwrap().unwrap();
        assert_eq!(cert.kind, CertKind::Pyramid);
        assert_eq!(cert.vertices.len(), 7);
    }

    #[test]
    fn ring_examples() {
        assert!(brute_is_ring(&cycle(4)).unwrap());
        assert!(!brute_is_ring(&complete(4)).unwrap());
        assert!(!brute_is_ring(&house()).unwrap());
        assert!(brute_is_ring(&blow_up(&cycle(5), &[2, 1, 2, 1, 1])).unwrap());
    }
}
