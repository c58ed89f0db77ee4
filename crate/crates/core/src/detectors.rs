//! Finders for the induced configurations used by the recognition
//! algorithms, each returning a [`Certificate`] that [`check_certificate`]
//! validates independently.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{families, Graph};
use crate::set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CertKind {
    Hole,
    LongHole,
    Theta,
    Pyramid,
    Prism,
    UniversalWheel,
    TwinWheel,
    ProperWheel,
    Cap,
    K23,
    C6bar,
    W54,
    SevenAntihole,
}

impl CertKind {
    pub fn is_three_path(self) -> bool {
        matches!(self, CertKind::Theta | CertKind::Pyramid | CertKind::Prism)
    }

    pub fn is_wheel(self) -> bool {
        matches!(self, CertKind::UniversalWheel | CertKind::TwinWheel | CertKind::ProperWheel)
    }
}

/// An induced configuration found in some graph.
///
/// * holes: `vertices` in cyclic order;
/// * wheels and caps: `vertices` is the rim in cyclic order and `center` the
///   extra vertex;
/// * thetas, pyramids, prisms: `paths` holds the three paths, and `vertices`
///   their union in ascending order. Theta paths run from one branch vertex to
///   the other; pyramid paths start at a triangle vertex and end at the apex;
///   prism paths join the two triangles;
/// * fixed patterns: `vertices` lists the vertices matching the pattern's
///   labelling (see [`pattern_graph`]).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub kind: CertKind,
    pub vertices: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub center: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub paths: Option<Vec<Vec<usize>>>,
}

impl Certificate {
    pub fn plain(kind: CertKind, vertices: Vec<usize>) -> Certificate {
        Certificate {
            kind,
            vertices,
            center: None,
            paths: None,
        }
    }

    pub fn with_center(kind: CertKind, rim: Vec<usize>, center: usize) -> Certificate {
        Certificate {
            kind,
            vertices: rim,
            center: Some(center),
            paths: None,
        }
    }

    pub fn three_path(kind: CertKind, paths: Vec<Vec<usize>>) -> Certificate {
        let mut vertices: Vec<usize> = paths.iter().flatten().copied().collect();
        vertices.sort_unstable();
        vertices.dedup();
        Certificate {
            kind,
            vertices,
            center: None,
            paths: Some(paths),
        }
    }

    /// Maps every vertex `v` to `labels[v]`.
    pub fn relabel(&self, labels: &[usize]) -> Certificate {
        let paths = self
            .paths
            .as_ref()
            .map(|ps| ps.iter().map(|p| p.iter().map(|&v| labels[v]).collect()).collect());
        let mut vertices: Vec<usize> = self.vertices.iter().map(|&v| labels[v]).collect();
        if self.kind.is_three_path() {
            vertices.sort_unstable();
        }
        Certificate {
            kind: self.kind,
            vertices,
            center: self.center.map(|c| labels[c]),
            paths,
        }
    }

    /// Every vertex mentioned by the certificate.
    pub fn vertex_set(&self, n: usize) -> VertexSet {
        let mut s = VertexSet::new(n);
        for &v in &self.vertices {
            s.insert(v);
        }
        if let Some(c) = self.center {
            s.insert(c);
        }
        s
    }
}

/// The labelled pattern matched by the fixed-size obstruction kinds.
///
/// `K23` has sides `{0,1}` and `{2,3,4}`; `C6bar` and `SevenAntihole` are
/// complements of the cycles `0..6` and `0..7`; `W54` is the 5-cycle `0..5`
/// with centre 5 adjacent to rim vertices 0..=3.
pub fn pattern_graph(kind: CertKind) -> Option<Graph> {
    match kind {
        CertKind::K23 => Some(families::complete_bipartite(2, 3)),
        CertKind::C6bar => Some(families::cycle(6).complement()),
        CertKind::W54 => Some(families::wheel(5, &[0, 1, 2, 3])),
        CertKind::SevenAntihole => Some(families::cycle(7).complement()),
        _ => None,
    }
}

/// Rotates a cyclic order to start at its least vertex, heading towards the
/// smaller of that vertex's two neighbours.
pub(crate) fn canonical_cycle(mut order: Vec<usize>) -> Vec<usize> {
    let k = order.len();
    let start = (0..k).min_by_key(|&i| order[i]).unwrap();
    order.rotate_left(start);
    if order[k - 1] < order[1] {
        order[1..].reverse();
    }
    order
}

/// How the centre of a wheel attaches to its rim, if it attaches to at least
/// three rim vertices.
pub(crate) fn wheel_kind(g: &Graph, rim: &[usize], center: usize) -> Option<CertKind> {
    let k = rim.len();
    let adjacent: Vec<bool> = rim.iter().map(|&r| g.has_edge(center, r)).collect();
    let count = adjacent.iter().filter(|&&a| a).count();
    if count < 3 {
        return None;
    }
    if count == k {
        return Some(CertKind::UniversalWheel);
    }
    if count == 3 && (0..k).any(|i| adjacent[i] && adjacent[(i + 1) % k] && adjacent[(i + 2) % k]) {
        return Some(CertKind::TwinWheel);
    }
    Some(CertKind::ProperWheel)
}

pub(crate) fn is_cap_attachment(g: &Graph, rim: &[usize], center: usize) -> bool {
    let k = rim.len();
    let adjacent: Vec<usize> = (0..k).filter(|&i| g.has_edge(center, rim[i])).collect();
    adjacent.len() == 2 && {
        let (i, j) = (adjacent[0], adjacent[1]);
        j == i + 1 || (i == 0 && j == k - 1)
    }
}

pub fn check_certificate(g: &Graph, c: &Certificate) -> bool {
    let n = g.n();
    if c.vertices.iter().chain(c.center.iter()).any(|&v| v >= n) {
        return false;
    }
    match c.kind {
        CertKind::Hole => c.center.is_none() && g.is_hole_sequence(&c.vertices),
        CertKind::LongHole => c.center.is_none() && c.vertices.len() >= 5 && g.is_hole_sequence(&c.vertices),
        CertKind::UniversalWheel | CertKind::TwinWheel | CertKind::ProperWheel => match c.center {
            Some(x) => {
                g.is_hole_sequence(&c.vertices)
                    && !c.vertices.contains(&x)
                    && wheel_kind(g, &c.vertices, x) == Some(c.kind)
            }
            None => false,
        },
        CertKind::Cap => match c.center {
            Some(x) => {
                g.is_hole_sequence(&c.vertices) && !c.vertices.contains(&x) && is_cap_attachment(g, &c.vertices, x)
            }
            None => false,
        },
        CertKind::Theta | CertKind::Pyramid | CertKind::Prism => check_three_path(g, c),
        CertKind::K23 | CertKind::C6bar | CertKind::W54 | CertKind::SevenAntihole => {
            let pattern = pattern_graph(c.kind).unwrap();
            c.center.is_none()
                && c.paths.is_none()
                && c.vertices.len() == pattern.n()
                && VertexSet::from_slice(n, &c.vertices).len() == pattern.n()
                && matches_pattern(g, &pattern, &c.vertices)
        }
    }
}

fn matches_pattern(g: &Graph, pattern: &Graph, image: &[usize]) -> bool {
    (0..image.len()).all(|i| (0..i).all(|j| pattern.has_edge(i, j) == g.has_edge(image[i], image[j])))
}

fn check_three_path(g: &Graph, c: &Certificate) -> bool {
    let Some(paths) = &c.paths else { return false };
    if c.center.is_some() || paths.len() != 3 || paths.iter().any(|p| p.is_empty()) {
        return false;
    }
    if !paths.iter().all(|p| g.is_induced_path(p)) {
        return false;
    }
    let starts: Vec<usize> = paths.iter().map(|p| p[0]).collect();
    let ends: Vec<usize> = paths.iter().map(|p| *p.last().unwrap()).collect();
    let single = |s: &[usize]| s.iter().all(|&v| v == s[0]);
    let triangle = |s: &[usize]| {
        s[0] != s[1] && s[1] != s[2] && s[0] != s[2] && g.has_edge(s[0], s[1]) && g.has_edge(s[1], s[2]) && g.has_edge(s[0], s[2])
    };
    let shared = match c.kind {
        CertKind::Theta if single(&starts) && single(&ends) => 2,
        CertKind::Pyramid if triangle(&starts) && single(&ends) => 1,
        CertKind::Prism if triangle(&starts) && triangle(&ends) => 0,
        _ => return false,
    };
    if starts.iter().any(|s| ends.contains(s)) {
        return false;
    }
    let n = g.n();
    for i in 0..3 {
        for j in i + 1..3 {
            let mut s = VertexSet::from_slice(n, &paths[i]);
            s.union_with(&VertexSet::from_slice(n, &paths[j]));
            if s.len() + shared != paths[i].len() + paths[j].len() || g.hole_order(&s).is_none() {
                return false;
            }
        }
    }
    let mut union: Vec<usize> = paths.iter().flatten().copied().collect();
    union.sort_unstable();
    union.dedup();
    union == c.vertices
}

/// Component index of every vertex of `within` (others get `usize::MAX`).
fn component_ids(g: &Graph, within: &VertexSet) -> (Vec<usize>, usize) {
    let mut id = vec![usize::MAX; g.n()];
    let comps = g.components_within(within);
    for (i, comp) in comps.iter().enumerate() {
        for v in comp {
            id[v] = i;
        }
    }
    (id, comps.len())
}

/// Components (by index) containing a neighbour of `v`.
fn touched(g: &Graph, v: usize, id: &[usize], count: usize) -> VertexSet {
    let mut s = VertexSet::new(count.max(1));
    for u in g.neighbors(v).iter() {
        if id[u] != usize::MAX {
            s.insert(id[u]);
        }
    }
    s
}

/// A hole of length at least five, if one exists.
///
/// For every induced path `a-b-c-d` the search asks whether `a` and `d` are
/// joined by a path avoiding `N[b] ∪ N[c]` apart from its ends; a shortest
/// such path closes a chordless cycle. Edges `bc` are scanned in
/// lexicographic order, then `a`, then `d`; the hole is reported rotated to
/// start at its least vertex.
pub fn find_long_hole(g: &Graph) -> Option<Certificate> {
    let n = g.n();
    for b in 0..n {
        for c in g.neighbors(b).iter() {
            let nb = g.closed_neighbors(b);
            let nc = g.closed_neighbors(c);
            let blocked = nb.union(&nc);
            let free = blocked.complement();
            let (id, count) = component_ids(g, &free);
            let a_side = g.neighbors(b).difference(&nc);
            let d_side = g.neighbors(c).difference(&nb);
            for a in a_side.iter() {
                let ta = touched(g, a, &id, count);
                if ta.is_empty() {
                    continue;
                }
                for d in d_side.iter() {
                    if g.has_edge(a, d) || !ta.intersects(&touched(g, d, &id, count)) {
                        continue;
                    }
                    let mut within = free.clone();
                    within.insert(a);
                    within.insert(d);
                    let path = g.shortest_path_within(a, d, &within).expect("endpoints share a component");
                    let mut hole = path;
                    hole.push(c);
                    hole.push(b);
                    let cert = Certificate::plain(CertKind::LongHole, canonical_cycle(hole));
                    debug_assert!(check_certificate(g, &cert));
                    return Some(cert);
                }
            }
        }
    }
    None
}

/// A cap (hole plus a vertex with exactly two rim neighbours, which are
/// adjacent), if one exists.
///
/// For every triangle `{c, x, y}` the search looks for `a ∈ N(x)` and
/// `b ∈ N(y)`, both outside `N[c]` and outside the other's closed
/// neighbourhood, joined directly or through vertices avoiding
/// `N[c] ∪ N[x] ∪ N[y]`.
pub fn find_cap(g: &Graph) -> Option<Certificate> {
    let n = g.n();
    for c in 0..n {
        let nc = g.closed_neighbors(c);
        for x in g.neighbors(c).iter() {
            for y in g.neighbors(c).intersection(g.neighbors(x)).iter().filter(|&y| y > x) {
                let nx = g.closed_neighbors(x);
                let ny = g.closed_neighbors(y);
                let blocked = nc.union(&nx).union(&ny);
                let free = blocked.complement();
                let (id, count) = component_ids(g, &free);
                let a_side = g.neighbors(x).difference(&ny).difference(&nc);
                let b_side = g.neighbors(y).difference(&nx).difference(&nc);
                for a in a_side.iter() {
                    let ta = touched(g, a, &id, count);
                    for b in b_side.iter() {
                        let path = if g.has_edge(a, b) {
                            vec![b, a]
                        } else if ta.intersects(&touched(g, b, &id, count)) {
                            let mut within = free.clone();
                            within.insert(a);
                            within.insert(b);
                            g.shortest_path_within(b, a, &within).expect("endpoints share a component")
                        } else {
                            continue;
                        };
                        let mut rim = vec![x, y];
                        rim.extend(path);
                        let cert = Certificate::with_center(CertKind::Cap, canonical_cycle(rim), c);
                        debug_assert!(check_certificate(g, &cert));
                        return Some(cert);
                    }
                }
            }
        }
    }
    None
}

/// An induced copy of a fixed pattern, as the lexicographically least tuple
/// of images in pattern-vertex order.
pub fn find_small_obstruction(g: &Graph, kind: CertKind) -> Result<Option<Certificate>> {
    let pattern = pattern_graph(kind)
        .ok_or_else(|| Error::InvalidParameter(format!("{kind:?} is not a fixed-size pattern")))?;
    Ok(find_induced_pattern(g, &pattern).map(|image| Certificate::plain(kind, image)))
}

/// Lexicographically least injective map from `pattern` into `g` preserving
/// adjacency and non-adjacency.
pub fn find_induced_pattern(g: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    let (n, p) = (g.n(), pattern.n());
    if p > n {
        return None;
    }
    let deg: Vec<usize> = (0..p).map(|i| pattern.degree(i)).collect();
    let non_deg: Vec<usize> = (0..p).map(|i| p - 1 - pattern.degree(i)).collect();
    let mut image = Vec::with_capacity(p);
    let mut used = VertexSet::new(n);
    fn extend(
        g: &Graph,
        pattern: &Graph,
        deg: &[usize],
        non_deg: &[usize],
        image: &mut Vec<usize>,
        used: &mut VertexSet,
    ) -> bool {
        let i = image.len();
        if i == pattern.n() {
            return true;
        }
        let n = g.n();
        for v in 0..n {
            if used.contains(v) || g.degree(v) < deg[i] || n - 1 - g.degree(v) < non_deg[i] {
                continue;
            }
            if (0..i).all(|j| pattern.has_edge(i, j) == g.has_edge(v, image[j])) {
                image.push(v);
                used.insert(v);
                if extend(g, pattern, deg, non_deg, image, used) {
                    return true;
                }
                image.pop();
                used.remove(v);
            }
        }
        false
    }
    extend(g, pattern, &deg, &non_deg, &mut image, &mut used).then_some(image)
}

/// Twin sets and universal vertices of a hole.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HoleExpansion {
    pub hole: Vec<usize>,
    /// `twin_sets[i]` is `hole[i]` together with every vertex outside the hole
    /// whose rim neighbourhood is exactly `hole[i-1], hole[i], hole[i+1]`.
    pub twin_sets: Vec<VertexSet>,
    /// Vertices outside the hole adjacent to all of it.
    pub universal: VertexSet,
}

impl HoleExpansion {
    /// Union of the twin sets.
    pub fn expanded_hole(&self) -> VertexSet {
        let mut s = self.universal.clone();
        s.clear();
        for t in &self.twin_sets {
            s.union_with(t);
        }
        s
    }
}

pub fn hole_expansion(g: &Graph, hole: &Certificate) -> Result<HoleExpansion> {
    if !matches!(hole.kind, CertKind::Hole | CertKind::LongHole) || !check_certificate(g, hole) {
        return Err(Error::InvalidCertificate("expected a valid hole".into()));
    }
    Ok(expand_hole(g, &hole.vertices))
}

/// [`hole_expansion`] for a rim already known to be a hole.
pub(crate) fn expand_hole(g: &Graph, rim: &[usize]) -> HoleExpansion {
    let n = g.n();
    let k = rim.len();
    let rim_set = VertexSet::from_slice(n, rim);
    let mut twin_sets: Vec<VertexSet> = rim.iter().map(|&x| VertexSet::singleton(n, x)).collect();
    let mut universal = VertexSet::new(n);
    let position: std::collections::HashMap<usize, usize> = rim.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    for v in rim_set.complement().iter() {
        let on_rim = g.neighbors(v).intersection(&rim_set);
        match on_rim.len() {
            len if len == k => {
                universal.insert(v);
            }
            3 => {
                let idx: Vec<usize> = on_rim.iter().map(|u| position[&u]).collect();
                for &i in &idx {
                    let (prev, next) = ((i + k - 1) % k, (i + 1) % k);
                    if idx.contains(&prev) && idx.contains(&next) {
                        twin_sets[i].insert(v);
                    }
                }
            }
            _ => {}
        }
    }
    HoleExpansion {
        hole: rim.to_vec(),
        twin_sets,
        universal,
    }
}
