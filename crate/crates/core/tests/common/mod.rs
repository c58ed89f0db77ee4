//! Helpers shared by the integration tests.
#![allow(dead_code)]

use truemper_core::generators::{gen_random_graph, rng_from_seed};
use truemper_core::{Graph, VertexSet};

use rand::Rng;

/// The graph on `n` vertices whose edges are the set bits of `mask`, in the
/// order (0,1), (0,2), (1,2), (0,3), ...
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut g = Graph::new(n);
    let mut bit = 0;
    for v in 1..n {
        for u in 0..v {
            if mask >> bit & 1 == 1 {
                g.add_edge(u, v).unwrap();
            }
            bit += 1;
        }
    }
    g
}

/// Every labelled graph on `n` vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs = n * (n - 1) / 2;
    (0..1u64 << pairs).map(move |m| graph_from_mask(n, m))
}

/// Every labelled graph on 1 to `max_n` vertices.
pub fn all_graphs_up_to(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(all_graphs).collect()
}

/// `count` random graphs with 1 to `max_n` vertices and varied density.
pub fn random_graphs(seed: u64, count: usize, max_n: usize) -> Vec<Graph> {
    let mut rng = rng_from_seed(seed);
    (0..count)
        .map(|_| {
            let n = rng.random_range(1..=max_n);
            let p = rng.random_range(0.1..0.9);
            gen_random_graph(rng.random(), n, p)
        })
        .collect()
}

/// Whether some clique `C` (possibly empty) leaves `G - C` disconnected,
/// by enumerating every clique.
pub fn brute_has_clique_cutset(g: &Graph) -> bool {
    fn search(g: &Graph, clique: &mut VertexSet, from: usize) -> bool {
        let rest = clique.complement();
        if rest.len() >= 2 && g.components_within(&rest).len() >= 2 {
            return true;
        }
        for v in from..g.n() {
            if clique.iter().all(|c| g.has_edge(c, v)) {
                clique.insert(v);
                if search(g, clique, v + 1) {
                    return true;
                }
                clique.remove(v);
            }
        }
        false
    }
    search(g, &mut VertexSet::new(g.n()), 0)
}

/// Records a criterion outcome and prints its line.
pub struct Report {
    pub failures: Vec<String>,
}

impl Report {
    pub fn new() -> Report {
        Report { failures: Vec::new() }
    }

    pub fn record(&mut self, name: &str, outcome: Result<String, String>) {
        match outcome {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(detail) => {
                println!("FAIL  {name}: {detail}");
                self.failures.push(name.to_string());
            }
        }
    }
}

/// Returns `Err` with the first `limit` messages when `problems` is nonempty.
pub fn summarize(checked: usize, problems: Vec<String>) -> Result<String, String> {
    if problems.is_empty() {
        Ok(format!("{checked} cases"))
    } else {
        let shown: Vec<&String> = problems.iter().take(5).collect();
        Err(format!("{} of {checked} cases failed; first: {shown:?}", problems.len()))
    }
}
