//! Recognition and the polynomial optimisation problems for the four
//! classes, built on the decomposition frameworks.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::chordal;
use crate::decomposition::{build_tree, solve_coloring, solve_mwc, solve_mwss};
use crate::detectors::{check_certificate, expand_hole, find_cap, find_long_hole, find_small_obstruction};
use crate::detectors::{CertKind, Certificate};
use crate::error::{Error, Result};
use crate::graph::{Coloring, Graph, WeightedGraph};
use crate::rings::{hyperhole_color, hyperhole_mwc_mwss, recognize_hyperantihole, recognize_hyperhole, recognize_ring};
use crate::set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ClassId {
    /// No three-path configuration and no proper wheel.
    #[serde(rename = "gut")]
    Gut,
    /// Additionally no twin wheel.
    #[serde(rename = "gu")]
    Gu,
    /// Additionally no universal wheel.
    #[serde(rename = "gt")]
    Gt,
    /// Additionally no cap.
    #[serde(rename = "gutcap")]
    GutCapFree,
}

impl ClassId {
    pub const ALL: [ClassId; 4] = [ClassId::Gut, ClassId::Gu, ClassId::Gt, ClassId::GutCapFree];

    pub fn name(self) -> &'static str {
        match self {
            ClassId::Gut => "gut",
            ClassId::Gu => "gu",
            ClassId::Gt => "gt",
            ClassId::GutCapFree => "gutcap",
        }
    }

    /// The induced configurations whose absence defines the class.
    pub fn forbidden_kinds(self) -> Vec<CertKind> {
        let mut kinds = vec![CertKind::Theta, CertKind::Pyramid, CertKind::Prism, CertKind::ProperWheel];
        match self {
            ClassId::Gut => {}
            ClassId::Gu => kinds.push(CertKind::TwinWheel),
            ClassId::Gt => kinds.push(CertKind::UniversalWheel),
            ClassId::GutCapFree => kinds.push(CertKind::Cap),
        }
        kinds
    }
}

impl fmt::Display for ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClassId {
    type Err = Error;
    fn from_str(s: &str) -> Result<ClassId> {
        match s {
            "gut" => Ok(ClassId::Gut),
            "gu" => Ok(ClassId::Gu),
            "gt" => Ok(ClassId::Gt),
            "gutcap" => Ok(ClassId::GutCapFree),
            other => Err(Error::InvalidParameter(format!("unknown class `{other}`"))),
        }
    }
}

/// An atom of the decomposition that fails the class's leaf test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LeafFailure {
    pub leaf: Vec<usize>,
    /// The offending anticomponent, when the test is per anticomponent.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub anticomponent: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Recognition {
    pub class: ClassId,
    pub member: bool,
    pub certificate: Option<Certificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub leaf_failure: Option<LeafFailure>,
}

impl Recognition {
    fn member(class: ClassId) -> Recognition {
        Recognition {
            class,
            member: true,
            certificate: None,
            leaf_failure: None,
        }
    }

    fn obstruction(class: ClassId, cert: Certificate) -> Recognition {
        Recognition {
            class,
            member: false,
            certificate: Some(cert),
            leaf_failure: None,
        }
    }

    fn leaf(class: ClassId, failure: LeafFailure) -> Recognition {
        Recognition {
            class,
            member: false,
            certificate: None,
            leaf_failure: Some(failure),
        }
    }
}

pub fn recognize(class: ClassId, g: &Graph) -> Recognition {
    match class {
        ClassId::Gut => recognize_gut(g),
        ClassId::Gu => recognize_gu(g),
        ClassId::Gt => recognize_gt(g),
        ClassId::GutCapFree => recognize_gutcap(g),
    }
}

fn first_obstruction(g: &Graph, kinds: &[CertKind]) -> Option<Certificate> {
    kinds
        .iter()
        .find_map(|&kind| find_small_obstruction(g, kind).expect("fixed pattern kinds"))
}

/// Runs `test` on every anticomponent of every atom, reporting the first
/// failure.
fn check_leaf_anticomponents<F>(g: &Graph, test: F) -> Option<LeafFailure>
where
    F: Fn(&Graph) -> bool,
{
    let n = g.n();
    for leaf in build_tree(g).leaves() {
        let leaf_set = VertexSet::from_slice(n, &leaf.vertices);
        for anti in g.anticomponents_within(&leaf_set) {
            let sub = g.induced_subgraph(&anti).expect("anticomponents are nonempty");
            if !test(&sub.graph) {
                return Some(LeafFailure {
                    leaf: leaf.vertices.clone(),
                    anticomponent: Some(anti.to_vec()),
                });
            }
        }
    }
    None
}

/// Membership in the class with no three-path configuration and no proper
/// wheel: no `K23`, complement of `C6` or `W54`, and every anticomponent of
/// every atom is a long ring, has no long hole, or has stability number at
/// most two.
pub fn recognize_gut(g: &Graph) -> Recognition {
    let class = ClassId::Gut;
    if let Some(cert) = first_obstruction(g, &[CertKind::K23, CertKind::C6bar, CertKind::W54]) {
        return Recognition::obstruction(class, cert);
    }
    let failure = check_leaf_anticomponents(g, |h| {
        h.alpha_at_most_2() || find_long_hole(h).is_none() || recognize_ring(h).is_some_and(|(k, _)| k >= 5)
    });
    match failure {
        Some(f) => Recognition::leaf(class, f),
        None => Recognition::member(class),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum AntiLabel {
    K1,
    AntiK2,
    OddLongHole,
    EvenLongHole,
    /// At least three vertices, every component a path.
    PathForest,
}

/// Anticomponents of a graph in the hereditary closure of the basic class
/// for twin-wheel-free graphs, with their shapes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BuhClassification {
    pub parts: Vec<(Vec<usize>, AntiLabel)>,
}

/// Classifies `h` if every nontrivial anticomponent is a non-edge, or the
/// only nontrivial anticomponent is a long hole or a path forest on at least
/// three vertices; `None` otherwise.
pub fn recognize_bu_h(h: &Graph) -> Option<BuhClassification> {
    let n = h.n();
    if (0..n).all(|v| h.degree(v) + 2 >= n) {
        let parts = h
            .anticomponents()
            .into_iter()
            .map(|p| {
                let label = if p.len() == 1 { AntiLabel::K1 } else { AntiLabel::AntiK2 };
                (p.to_vec(), label)
            })
            .collect();
        return Some(BuhClassification { parts });
    }
    let mut universal = VertexSet::new(n);
    for v in 0..n {
        if h.degree(v) + 1 == n {
            universal.insert(v);
        }
    }
    let rest = universal.complement();
    let sub = h.induced_subgraph(&rest).ok()?;
    let label = if sub.graph.hole_order(&sub.graph.vertex_set()).is_some() {
        match sub.graph.n() {
            4 => return None,
            k if k % 2 == 1 => AntiLabel::OddLongHole,
            _ => AntiLabel::EvenLongHole,
        }
    } else if is_path_forest(&sub.graph) {
        AntiLabel::PathForest
    } else {
        return None;
    };
    let mut parts: Vec<(Vec<usize>, AntiLabel)> = universal.iter().map(|u| (vec![u], AntiLabel::K1)).collect();
    parts.push((rest.to_vec(), label));
    Some(BuhClassification { parts })
}

fn is_path_forest(g: &Graph) -> bool {
    (0..g.n()).all(|v| g.degree(v) <= 2) && g.edge_count() + g.components().len() == g.n()
}

/// Colours each anticomponent separately with disjoint palettes.
fn color_by_anticomponents<F>(g: &Graph, color_part: F) -> Option<Coloring>
where
    F: Fn(&Graph) -> Option<Coloring>,
{
    let mut colors = vec![0; g.n()];
    let mut offset = 0;
    for anti in g.anticomponents() {
        let sub = g.induced_subgraph(&anti).ok()?;
        let c = color_part(&sub.graph)?;
        for (&v, &col) in sub.labels.iter().zip(&c.colors) {
            colors[v] = offset + col;
        }
        offset += c.count;
    }
    Some(Coloring { colors, count: offset })
}

/// The union of the anticomponents' best cliques.
fn mwc_by_anticomponents<F>(wg: &WeightedGraph, solve_part: F) -> Option<VertexSet>
where
    F: Fn(&WeightedGraph) -> Option<VertexSet>,
{
    let n = wg.n();
    let mut clique = VertexSet::new(n);
    for anti in wg.graph.anticomponents() {
        let (sub, labels) = wg.induced(&anti).ok()?;
        clique.union_with(&chordal::lift(&solve_part(&sub)?, &labels, n));
    }
    Some(clique)
}

/// The best single anticomponent's stable set.
fn mwss_by_anticomponents<F>(wg: &WeightedGraph, solve_part: F) -> Option<VertexSet>
where
    F: Fn(&WeightedGraph) -> Option<VertexSet>,
{
    let n = wg.n();
    let mut best = VertexSet::new(n);
    let mut best_weight = 0.0;
    for anti in wg.graph.anticomponents() {
        let (sub, labels) = wg.induced(&anti).ok()?;
        let s = chordal::lift(&solve_part(&sub)?, &labels, n);
        let w = wg.weight_of(&s);
        if w > best_weight {
            best_weight = w;
            best = s;
        }
    }
    Some(best)
}

/// Optimal colouring of a chordal graph or a hyperhole.
fn color_chordal_or_hyperhole(g: &Graph) -> Option<Coloring> {
    match chordal::simplicial_order(g) {
        Some(o) => chordal::chordal_color(g, &o).ok(),
        None => hyperhole_color(g),
    }
}

fn mwc_chordal_or_hyperhole(wg: &WeightedGraph) -> Option<VertexSet> {
    match chordal::mwc_within(wg, &wg.graph.vertex_set()) {
        Some(c) => Some(c),
        None => hyperhole_mwc_mwss(wg).map(|(c, _)| c),
    }
}

fn mwss_chordal_or_hyperhole(wg: &WeightedGraph) -> Option<VertexSet> {
    match chordal::mwss_within(wg, &wg.graph.vertex_set()) {
        Some(s) => Some(s),
        None => hyperhole_mwc_mwss(wg).map(|(_, s)| s),
    }
}

pub fn recognize_gu(g: &Graph) -> Recognition {
    let class = ClassId::Gu;
    for leaf in build_tree(g).leaves() {
        let sub = g
            .induced_subgraph(&VertexSet::from_slice(g.n(), &leaf.vertices))
            .expect("leaves are nonempty");
        if recognize_bu_h(&sub.graph).is_none() {
            return Recognition::leaf(
                class,
                LeafFailure {
                    leaf: leaf.vertices.clone(),
                    anticomponent: None,
                },
            );
        }
    }
    Recognition::member(class)
}

fn color_buh_leaf(g: &Graph) -> Option<Coloring> {
    recognize_bu_h(g)?;
    color_by_anticomponents(g, color_chordal_or_hyperhole)
}

fn mwc_buh_leaf(wg: &WeightedGraph) -> Option<VertexSet> {
    recognize_bu_h(&wg.graph)?;
    mwc_by_anticomponents(wg, mwc_chordal_or_hyperhole)
}

fn mwss_buh_leaf(wg: &WeightedGraph) -> Option<VertexSet> {
    recognize_bu_h(&wg.graph)?;
    mwss_by_anticomponents(wg, mwss_chordal_or_hyperhole)
}

/// Optimal colouring for the twin-wheel-free class; `None` if some atom is
/// outside the class.
pub fn color_gu(g: &Graph) -> Option<Coloring> {
    solve_coloring(g, color_buh_leaf)
}

/// Maximum-weight clique and stable set for the twin-wheel-free class.
pub fn mwc_mwss_gu(wg: &WeightedGraph) -> Option<(VertexSet, VertexSet)> {
    Some((solve_mwc(wg, mwc_buh_leaf)?, solve_mwss(wg, mwss_buh_leaf)?))
}

/// Membership in the universal-wheel-free class: the true-twin quotient of
/// every atom is a ring, a single vertex or the complement of `C7`.
pub fn recognize_gt(g: &Graph) -> Recognition {
    let class = ClassId::Gt;
    for leaf in build_tree(g).leaves() {
        let sub = g
            .induced_subgraph(&VertexSet::from_slice(g.n(), &leaf.vertices))
            .expect("leaves are nonempty");
        if classify_bt_leaf(&sub.graph).is_none() {
            return Recognition::leaf(
                class,
                LeafFailure {
                    leaf: leaf.vertices.clone(),
                    anticomponent: None,
                },
            );
        }
    }
    Recognition::member(class)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum BtLabel {
    Ring,
    Complete,
    SevenHyperantihole,
}

/// Shape of an atom in the universal-wheel-free class, judged on its
/// true-twin quotient.
pub fn classify_bt_leaf(g: &Graph) -> Option<BtLabel> {
    let q = g.true_twin_partition().quotient;
    if q.n() == 1 {
        Some(BtLabel::Complete)
    } else if q.n() == 7 && recognize_hyperantihole(&q).is_some_and(|(k, _)| k == 7) {
        Some(BtLabel::SevenHyperantihole)
    } else if recognize_ring(&q).is_some() {
        Some(BtLabel::Ring)
    } else {
        None
    }
}

/// Maximum-weight clique for the universal-wheel-free class: every closed
/// neighbourhood is chordal there, so the best clique is found inside one.
/// `None` if some closed neighbourhood is not chordal.
pub fn mwc_gt(wg: &WeightedGraph) -> Option<VertexSet> {
    let n = wg.n();
    let mut best = VertexSet::new(n);
    let mut best_weight = 0.0;
    for u in 0..n {
        let clique = chordal::mwc_within(wg, &wg.graph.closed_neighbors(u))?;
        let w = wg.weight_of(&clique);
        if w > best_weight {
            best_weight = w;
            best = clique;
        }
    }
    Some(best)
}

/// Best stable set over the chordal graphs `G - N(u)`, one for each `u`.
fn mwss_gt_leaf(wg: &WeightedGraph) -> Option<VertexSet> {
    let n = wg.n();
    let mut best = VertexSet::new(n);
    let mut best_weight = 0.0;
    for u in 0..n {
        let keep = wg.graph.neighbors(u).complement();
        let s = chordal::mwss_within(wg, &keep)?;
        let w = wg.weight_of(&s);
        if w > best_weight {
            best_weight = w;
            best = s;
        }
    }
    Some(best)
}

/// Maximum-weight stable set for the universal-wheel-free class.
pub fn mwss_gt(wg: &WeightedGraph) -> Option<VertexSet> {
    solve_mwss(wg, mwss_gt_leaf)
}

/// Anticomponent test for atoms of the cap-free class: chordal, or a
/// hyperhole of length at least five.
fn is_bch_part(h: &Graph) -> bool {
    chordal::is_chordal(h) || recognize_hyperhole(h).is_some_and(|(k, _)| k >= 5)
}

/// Membership in the cap-free class: no `K23`, no cap, and every
/// anticomponent of every atom is chordal or a long hyperhole.
pub fn recognize_gutcap(g: &Graph) -> Recognition {
    let class = ClassId::GutCapFree;
    if let Some(cert) = first_obstruction(g, &[CertKind::K23]) {
        return Recognition::obstruction(class, cert);
    }
    if let Some(cert) = find_cap(g) {
        return Recognition::obstruction(class, cert);
    }
    match check_leaf_anticomponents(g, is_bch_part) {
        Some(f) => Recognition::leaf(class, f),
        None => Recognition::member(class),
    }
}

fn all_parts_bch(g: &Graph) -> bool {
    g.anticomponents()
        .iter()
        .all(|a| is_bch_part(&g.induced_subgraph(a).expect("nonempty").graph))
}

fn color_bch_leaf(g: &Graph) -> Option<Coloring> {
    all_parts_bch(g).then_some(())?;
    color_by_anticomponents(g, color_chordal_or_hyperhole)
}

fn mwc_bch_leaf(wg: &WeightedGraph) -> Option<VertexSet> {
    all_parts_bch(&wg.graph).then_some(())?;
    mwc_by_anticomponents(wg, mwc_chordal_or_hyperhole)
}

fn mwss_bch_leaf(wg: &WeightedGraph) -> Option<VertexSet> {
    all_parts_bch(&wg.graph).then_some(())?;
    mwss_by_anticomponents(wg, mwss_chordal_or_hyperhole)
}

/// Optimal colouring for the cap-free class.
pub fn color_gutcap(g: &Graph) -> Option<Coloring> {
    solve_coloring(g, color_bch_leaf)
}

/// Maximum-weight clique and stable set for the cap-free class.
pub fn mwc_mwss_gutcap(wg: &WeightedGraph) -> Option<(VertexSet, VertexSet)> {
    Some((solve_mwc(wg, mwc_bch_leaf)?, solve_mwss(wg, mwss_bch_leaf)?))
}

/// A cutset contained in `N[x] ∪ N[y]` for an edge `xy`, separating the
/// vertex of a cap from the far side of its hole.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DoubleStarCutset {
    pub set: VertexSet,
    pub centers: (usize, usize),
    pub cap_vertex: usize,
    /// Hole vertices other than the two centres.
    pub far_rim: Vec<usize>,
}

/// Builds the double-star cutset around the attachment edge of a cap.
///
/// With the hole written `x, y, x_1, ..., x_h` and the cap vertex adjacent to
/// `x` and `y`, the cutset is `{x, y}` plus the twins (relative to the hole)
/// of `x`, `y`, `x_1`, `x_h` and every vertex complete to the hole. The
/// result is verified; failure means the graph is outside the class without
/// three-path configurations and proper wheels.
pub fn double_star_cutset_from_cap(g: &Graph, cap: &Certificate) -> Result<DoubleStarCutset> {
    if cap.kind != CertKind::Cap || !check_certificate(g, cap) {
        return Err(Error::InvalidCertificate("expected a valid cap".into()));
    }
    let c = cap.center.expect("caps have a centre");
    let rim = &cap.vertices;
    let k = rim.len();
    let i = (0..k)
        .find(|&i| g.has_edge(c, rim[i]) && g.has_edge(c, rim[(i + 1) % k]))
        .expect("valid caps attach to an edge");
    let hole: Vec<usize> = (0..k).map(|j| rim[(i + j) % k]).collect();
    let (x, y) = (hole[0], hole[1]);
    let expansion = expand_hole(g, &hole);
    let mut set = expansion.universal.clone();
    for idx in [0, 1, 2, k - 1] {
        set.union_with(&expansion.twin_sets[idx]);
    }
    set.remove(hole[2]);
    set.remove(hole[k - 1]);
    let star = g.closed_neighbors(x).union(&g.closed_neighbors(y));
    let far_rim = hole[2..].to_vec();
    let outside = set.complement();
    let reach = g.reach_within(c, &outside);
    let separates = !set.contains(c) && far_rim.iter().all(|&v| !reach.contains(v));
    if !g.has_edge(x, y) || !set.is_subset(&star) || !separates {
        return Err(Error::NotInClass(
            "the double-star set does not separate the cap from its hole".into(),
        ));
    }
    Ok(DoubleStarCutset {
        set,
        centers: (x, y),
        cap_vertex: c,
        far_rim,
    })
}
