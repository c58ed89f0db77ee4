//! Seeded random construction of basic graphs and of class members glued
//! together along cliques. Every generator is deterministic in its seed.

use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::chordal::is_chordal;
use crate::classes::ClassId;
use crate::decomposition::glue;
use crate::detectors::{find_cap, find_induced_pattern, pattern_graph, CertKind};
use crate::error::{Error, Result};
use crate::graph::families::{blow_up, complete, cycle, join};
use crate::graph::Graph;
use crate::rings::GoodPartition;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn check_sizes(k: usize, sizes: &[usize], min_k: usize) -> Result<()> {
    if k < min_k {
        return Err(Error::InvalidParameter(format!("length {k} is below {min_k}")));
    }
    if sizes.len() != k {
        return Err(Error::InvalidParameter(format!(
            "expected {k} part sizes, got {}",
            sizes.len()
        )));
    }
    if sizes.contains(&0) {
        return Err(Error::InvalidParameter("part sizes must be positive".into()));
    }
    Ok(())
}

/// A random `k`-ring with the given part sizes. Parts occupy consecutive
/// labels, each listed from its dominant vertex down.
///
/// Between consecutive parts the adjacency is a staircase: the `a`-th vertex
/// of a part sees a prefix of the next part whose length never grows with
/// `a`, and the first vertex on either side sees the whole other part.
pub fn gen_ring(seed: u64, k: usize, sizes: &[usize]) -> Result<(Graph, GoodPartition)> {
    check_sizes(k, sizes, 4)?;
    let mut rng = rng_from_seed(seed);
    let mut start = Vec::with_capacity(k);
    let mut n = 0;
    for &s in sizes {
        start.push(n);
        n += s;
    }
    let mut g = Graph::new(n);
    for i in 0..k {
        for a in 0..sizes[i] {
            for b in a + 1..sizes[i] {
                g.add_edge(start[i] + a, start[i] + b)?;
            }
        }
        let j = (i + 1) % k;
        let mut reach = sizes[j];
        for a in 0..sizes[i] {
            if a > 0 {
                reach = rng.random_range(1..=reach);
            }
            for b in 0..reach {
                g.add_edge(start[i] + a, start[j] + b)?;
            }
        }
    }
    let parts = (0..k).map(|i| (start[i]..start[i] + sizes[i]).collect()).collect();
    Ok((g, GoodPartition::new(parts)))
}

/// The `k`-hole with vertex `i` blown up into a clique of `sizes[i]`.
pub fn gen_hyperhole(k: usize, sizes: &[usize]) -> Result<Graph> {
    check_sizes(k, sizes, 4)?;
    Ok(blow_up(&cycle(k), sizes))
}

/// The complement of the `k`-hole with vertex `i` blown up into a clique of
/// `sizes[i]`.
pub fn gen_hyperantihole(k: usize, sizes: &[usize]) -> Result<Graph> {
    check_sizes(k, sizes, 4)?;
    Ok(blow_up(&cycle(k).complement(), sizes))
}

/// Random part sizes in `1..=max_size`.
pub fn random_sizes<R: Rng>(rng: &mut R, k: usize, max_size: usize) -> Vec<usize> {
    (0..k).map(|_| rng.random_range(1..=max_size.max(1))).collect()
}

/// A random chordal graph built by simplicial vertex addition: each new
/// vertex attaches to a clique grown from a random earlier vertex, keeping
/// each further candidate with probability `density`.
pub fn gen_chordal(seed: u64, n: usize, density: f64) -> Result<Graph> {
    let mut rng = rng_from_seed(seed);
    chordal_with(&mut rng, n, density)
}

fn chordal_with<R: Rng>(rng: &mut R, n: usize, density: f64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&density) {
        return Err(Error::InvalidParameter("density must lie in [0, 1]".into()));
    }
    let mut g = Graph::try_new(n)?;
    for v in 1..n {
        let anchor = rng.random_range(0..v);
        let mut clique = vec![anchor];
        let mut candidates: Vec<usize> = g.neighbors(anchor).iter().filter(|&u| u < v).collect();
        candidates.shuffle(rng);
        for u in candidates {
            if clique.iter().all(|&c| g.has_edge(c, u)) && rng.random_bool(density) {
                clique.push(u);
            }
        }
        for c in clique {
            g.add_edge(v, c)?;
        }
    }
    Ok(g)
}

/// Integer-valued weights drawn uniformly from `lo..=hi`.
pub fn random_weights(seed: u64, n: usize, lo: i64, hi: i64) -> Vec<f64> {
    let mut rng = rng_from_seed(seed);
    (0..n).map(|_| rng.random_range(lo..=hi) as f64).collect()
}

/// A uniformly random relabelling of `g`.
pub fn shuffle_labels(seed: u64, g: &Graph) -> Graph {
    let mut perm: Vec<usize> = (0..g.n()).collect();
    perm.shuffle(&mut rng_from_seed(seed));
    g.permuted(&perm)
}

/// An Erdős–Rényi graph `G(n, p)`.
pub fn gen_random_graph(seed: u64, n: usize, p: f64) -> Graph {
    let mut rng = rng_from_seed(seed);
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                g.add_edge(u, v).expect("fresh edge");
            }
        }
    }
    g
}

fn ring_piece<R: Rng>(rng: &mut R, budget: usize, min_k: usize) -> Option<Graph> {
    if budget < min_k {
        return None;
    }
    let k = rng.random_range(min_k..=budget.min(8));
    let extra = budget - k;
    let mut sizes = vec![1; k];
    for _ in 0..rng.random_range(0..=extra.min(4)) {
        sizes[rng.random_range(0..k)] += 1;
    }
    gen_ring(rng.random(), k, &sizes).ok().map(|(g, _)| g)
}

fn clique_piece<R: Rng>(rng: &mut R, budget: usize) -> Option<Graph> {
    (budget >= 1).then(|| complete(rng.random_range(1..=budget.min(4))))
}

fn chordal_piece<R: Rng>(rng: &mut R, budget: usize) -> Option<Graph> {
    if budget < 1 {
        return None;
    }
    let n = rng.random_range(1..=budget.min(7));
    let density = rng.random_range(0.0..=1.0);
    chordal_with(rng, n, density).ok()
}

/// A long hole joined with a clique (possibly empty).
fn hole_join_clique<R: Rng>(rng: &mut R, budget: usize) -> Option<Graph> {
    if budget < 5 {
        return None;
    }
    let k = rng.random_range(5..=budget.min(8));
    let t = rng.random_range(0..=(budget - k).min(3));
    Some(if t == 0 { cycle(k) } else { join(&cycle(k), &complete(t)) })
}

/// A join of non-edges and single vertices.
fn multipartite_piece<R: Rng>(rng: &mut R, budget: usize) -> Option<Graph> {
    if budget < 2 {
        return None;
    }
    let mut g = complete(1).complement();
    let mut n = 1;
    let target = rng.random_range(2..=budget.min(8));
    while n < target {
        let part = if n + 2 <= target && rng.random_bool(0.6) { 2 } else { 1 };
        g = join(&g, &complete(part).complement());
        n += part;
    }
    Some(g)
}

fn hyperantihole7_piece<R: Rng>(rng: &mut R, budget: usize) -> Option<Graph> {
    if budget < 7 {
        return None;
    }
    let mut sizes = vec![1; 7];
    for _ in 0..rng.random_range(0..=(budget - 7).min(3)) {
        sizes[rng.random_range(0..7)] += 1;
    }
    gen_hyperantihole(7, &sizes).ok()
}

fn hyperhole_piece<R: Rng>(rng: &mut R, min_k: usize, max_k: usize, budget: usize) -> Option<Graph> {
    if budget < min_k {
        return None;
    }
    let k = rng.random_range(min_k..=budget.min(max_k));
    let mut sizes = vec![1; k];
    for _ in 0..rng.random_range(0..=(budget - k).min(4)) {
        sizes[rng.random_range(0..k)] += 1;
    }
    gen_hyperhole(k, &sizes).ok()
}

/// A random chordal graph that is the complement of a bipartite graph, by
/// rejection.
fn chordal_cobipartite<R: Rng>(rng: &mut R, budget: usize) -> Option<Graph> {
    if budget < 1 {
        return None;
    }
    let n = rng.random_range(1..=budget.min(6));
    for _ in 0..50 {
        let split = rng.random_range(0..=n);
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if (u < split) == (v < split) || rng.random_bool(0.5) {
                    g.add_edge(u, v).expect("fresh edge");
                }
            }
        }
        if is_chordal(&g) {
            return Some(g);
        }
    }
    Some(complete(n))
}

/// A small graph with stability number at most two and no `C5` or
/// complement of `C6`, by rejection.
fn small_alpha2_piece<R: Rng>(rng: &mut R, budget: usize) -> Option<Graph> {
    if budget < 1 {
        return None;
    }
    let c5 = cycle(5);
    let c6bar = pattern_graph(CertKind::C6bar).expect("fixed pattern");
    for _ in 0..50 {
        let n = rng.random_range(1..=budget.min(6));
        let g = gen_random_graph(rng.random(), n, 0.7);
        if g.alpha_at_most_2()
            && find_induced_pattern(&g, &c5).is_none()
            && find_induced_pattern(&g, &c6bar).is_none()
        {
            return Some(g);
        }
    }
    None
}

/// Joins 5-hyperholes and small stability-two pieces.
fn alpha2_join_piece<R: Rng>(rng: &mut R, budget: usize) -> Option<Graph> {
    let mut g: Option<Graph> = None;
    let mut left = budget;
    for _ in 0..rng.random_range(1..=3) {
        let piece = if rng.random_bool(0.5) {
            hyperhole_piece(rng, 5, 5, left.min(7))
        } else {
            small_alpha2_piece(rng, left.min(4))
        };
        if let Some(p) = piece {
            left -= p.n();
            g = Some(match g {
                Some(acc) => join(&acc, &p),
                None => p,
            });
        }
    }
    g
}

/// Joins of 5-hyperholes and chordal cobipartite graphs.
fn bch_join_piece<R: Rng>(rng: &mut R, budget: usize) -> Option<Graph> {
    let mut g: Option<Graph> = None;
    let mut left = budget;
    for _ in 0..rng.random_range(1..=3) {
        let piece = if rng.random_bool(0.5) {
            hyperhole_piece(rng, 5, 5, left.min(7))
        } else {
            chordal_cobipartite(rng, left.min(4))
        };
        if let Some(p) = piece {
            left -= p.n();
            g = Some(match g {
                Some(acc) => join(&acc, &p),
                None => p,
            });
        }
    }
    g
}

/// A long ring joined with a clique (possibly empty).
fn ring_join_clique<R: Rng>(rng: &mut R, budget: usize) -> Option<Graph> {
    let ring = ring_piece(rng, budget.min(10), 5)?;
    let t = rng.random_range(0..=(budget - ring.n()).min(2));
    Some(if t == 0 { ring } else { join(&ring, &complete(t)) })
}

/// One basic piece for `class` with at most `budget` vertices.
fn basic_piece<R: Rng>(rng: &mut R, class: ClassId, budget: usize) -> Option<Graph> {
    let choice = rng.random_range(0..4);
    match class {
        ClassId::Gu => match choice {
            0 | 1 => hole_join_clique(rng, budget),
            2 => multipartite_piece(rng, budget),
            _ => chordal_piece(rng, budget),
        },
        ClassId::Gt => match choice {
            0 | 1 => ring_piece(rng, budget, 4),
            2 => hyperantihole7_piece(rng, budget),
            _ => chordal_piece(rng, budget).or_else(|| clique_piece(rng, budget)),
        },
        ClassId::GutCapFree => match choice {
            0 => {
                let h = hyperhole_piece(rng, 6, 8, budget.min(10))?;
                let t = rng.random_range(0..=(budget - h.n()).min(2));
                Some(if t == 0 { h } else { join(&h, &complete(t)) })
            }
            1 => bch_join_piece(rng, budget),
            2 => chordal_cobipartite(rng, budget),
            _ => chordal_piece(rng, budget),
        },
        ClassId::Gut => match choice {
            0 => ring_join_clique(rng, budget),
            1 => alpha2_join_piece(rng, budget),
            2 => ring_piece(rng, budget.min(8), 4),
            _ => chordal_piece(rng, budget),
        },
    }
}

/// A random clique of size at most `max_size`, grown greedily from a random
/// vertex through random common neighbours.
fn random_clique<R: Rng>(rng: &mut R, g: &Graph, max_size: usize) -> Vec<usize> {
    if max_size == 0 {
        return Vec::new();
    }
    let start = rng.random_range(0..g.n());
    let mut clique = vec![start];
    let mut common = g.neighbors(start).clone();
    while clique.len() < max_size {
        let options = common.to_vec();
        let Some(&next) = options.choose(rng) else {
            break;
        };
        clique.push(next);
        common.intersect_with(g.neighbors(next));
    }
    clique
}

/// Glues basic pieces of `class` along random cliques of size at most three
/// until `pieces` pieces are used or `max_n` would be exceeded. For the
/// cap-free class the result is rejected and resampled while it contains a
/// cap; after repeated failure a single basic piece is returned.
pub fn gen_class_member(seed: u64, class: ClassId, pieces: usize, max_n: usize) -> Result<Graph> {
    if max_n == 0 {
        return Err(Error::InvalidParameter("max_n must be positive".into()));
    }
    let mut rng = rng_from_seed(seed);
    for _ in 0..50 {
        let g = glued_member(&mut rng, class, pieces.max(1), max_n);
        if class != ClassId::GutCapFree || find_cap(&g).is_none() {
            return Ok(g);
        }
    }
    loop {
        if let Some(g) = basic_piece(&mut rng, class, max_n) {
            if class != ClassId::GutCapFree || find_cap(&g).is_none() {
                return Ok(g);
            }
        }
    }
}

fn glued_member<R: Rng>(rng: &mut R, class: ClassId, pieces: usize, max_n: usize) -> Graph {
    let mut g = loop {
        if let Some(p) = basic_piece(rng, class, max_n) {
            break p;
        }
    };
    let mut attempts = 0;
    let mut used = 1;
    while used < pieces && attempts < 10 * pieces {
        attempts += 1;
        let size = rng.random_range(0..=3usize);
        let budget = (max_n + size).saturating_sub(g.n());
        let Some(piece) = basic_piece(rng, class, budget) else {
            continue;
        };
        let ours = random_clique(rng, &g, size);
        let theirs = random_clique(rng, &piece, ours.len());
        let shared: Vec<(usize, usize)> = ours.iter().copied().zip(theirs.iter().copied()).collect();
        if g.n() + piece.n() - shared.len() > max_n {
            continue;
        }
        g = glue(&g, &piece, &shared).expect("cliques of equal size");
        used += 1;
    }
    g
}

/// A random graph on at most `max_n` vertices that contains a long hole, a
/// cap or neither, used to exercise detectors.
pub fn gen_mixed_graph(seed: u64, max_n: usize) -> Graph {
    let mut rng = rng_from_seed(seed);
    let n = rng.random_range(1..=max_n.max(1));
    let p = rng.random_range(0.15..0.7);
    gen_random_graph(rng.random(), n, p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chordal::simplicial_order;
    use crate::rings::{recognize_hyperantihole, recognize_hyperhole, verify_good_partition};

    #[test]
    fn ring_examples() {
        let (g, p) = gen_ring(3, 5, &[1; 5]).unwrap();
        assert_eq!(g, cycle(5));
        assert!(verify_good_partition(&g, &p).unwrap());
        for seed in 0..20 {
            let (g, p) = gen_ring(seed, 6, &[2, 1, 1, 1, 1, 1]).unwrap();
            assert_eq!(g.n(), 7);
            assert!(verify_good_partition(&g, &p).unwrap());
            assert!(p.is_dominance_ordered(&g));
            let (g, p) = gen_ring(seed, 4, &[3, 2, 2, 1]).unwrap();
            assert!(verify_good_partition(&g, &p).unwrap());
        }
        assert!(gen_ring(0, 3, &[1, 1, 1]).is_err());
        assert!(gen_ring(0, 4, &[1, 0, 1, 1]).is_err());
    }

    #[test]
    fn blow_up_examples() {
        assert_eq!(gen_hyperhole(6, &[1; 6]).unwrap(), cycle(6));
        assert_eq!(gen_hyperantihole(7, &[1; 7]).unwrap(), cycle(7).complement());
        let g = gen_hyperhole(5, &[2, 2, 1, 1, 1]).unwrap();
        assert_eq!(recognize_hyperhole(&g).unwrap().0, 5);
        let g = gen_hyperantihole(7, &[2, 1, 3, 1, 1, 1, 2]).unwrap();
        assert_eq!(recognize_hyperantihole(&g).unwrap().0, 7);
    }

    #[test]
    fn chordal_examples() {
        let tree = gen_chordal(1, 10, 0.0).unwrap();
        assert_eq!(tree.edge_count(), 9);
        assert!(tree.is_connected());
        assert_eq!(gen_chordal(1, 6, 1.0).unwrap(), complete(6));
        for seed in 0..20 {
            assert!(simplicial_order(&gen_chordal(seed, 12, 0.5).unwrap()).is_some());
        }
    }

    #[test]
    fn deterministic() {
        for class in ClassId::ALL {
            let a = gen_class_member(9, class, 3, 14).unwrap();
            let b = gen_class_member(9, class, 3, 14).unwrap();
            assert_eq!(a, b);
            assert!(a.n() <= 14);
        }
    }
}
