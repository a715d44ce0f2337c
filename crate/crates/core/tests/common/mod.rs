//! Brute-force oracles shared by the integration tests. None of these call
//! the canonical labeling, the enumerator or the cut routines.

#![allow(dead_code)]

use std::collections::HashMap;

use hypo_core::{Edge, Graph};
use petgraph::algo::is_isomorphic;
use petgraph::graph::UnGraph;
use rand::seq::{IndexedRandom, SliceRandom};
use rand::Rng;

/// All vertex pairs of `0..n` in a fixed order.
pub fn pairs(n: usize) -> Vec<Edge> {
    let mut out = Vec::new();
    for v in 1..n {
        for u in 0..v {
            out.push((u, v));
        }
    }
    out
}

pub fn from_mask(pairs: &[Edge], mask: u64) -> Vec<Edge> {
    pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect()
}

pub fn degrees(n: usize, edges: &[Edge]) -> Vec<usize> {
    let mut d = vec![0; n];
    for &(u, v) in edges {
        d[u] += 1;
        d[v] += 1;
    }
    d
}

/// Component count by union-find.
pub fn component_count(n: usize, edges: &[Edge]) -> usize {
    components(n, edges).len()
}

/// Components by union-find, each sorted, ordered by smallest member.
pub fn components(n: usize, edges: &[Edge]) -> Vec<Vec<usize>> {
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut x = x;
        while p[x] != r {
            let next = p[x];
            p[x] = r;
            x = next;
        }
        r
    }
    let mut parent: Vec<usize> = (0..n).collect();
    for &(u, v) in edges {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut index = HashMap::new();
    for v in 0..n {
        let r = find(&mut parent, v);
        let slot = *index.entry(r).or_insert_with(|| {
            groups.push(Vec::new());
            groups.len() - 1
        });
        groups[slot].push(v);
    }
    groups
}

pub fn to_petgraph(n: usize, edges: &[Edge]) -> UnGraph<(), ()> {
    let mut g = UnGraph::<(), ()>::with_capacity(n, edges.len());
    for _ in 0..n {
        g.add_node(());
    }
    for &(u, v) in edges {
        g.add_edge((u as u32).into(), (v as u32).into(), ());
    }
    g
}

/// Isomorphism invariant used to bucket candidates before exact checks.
fn invariant(n: usize, edges: &[Edge]) -> Vec<usize> {
    let d = degrees(n, edges);
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut local: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            let mut nd: Vec<usize> = adj[v].iter().map(|&w| d[w]).collect();
            nd.sort_unstable();
            let triangles = adj[v]
                .iter()
                .flat_map(|&a| adj[v].iter().map(move |&b| (a, b)))
                .filter(|&(a, b)| a < b && adj[a].contains(&b))
                .count();
            let mut key = vec![d[v], triangles];
            key.extend(nd);
            key
        })
        .collect();
    local.sort();
    let mut out = vec![n, edges.len()];
    for k in local {
        out.push(usize::MAX);
        out.extend(k);
    }
    out
}

/// Isomorphism classes of labeled graphs, deduplicated with petgraph.
#[derive(Default)]
pub struct ClassSet {
    buckets: HashMap<Vec<usize>, Vec<UnGraph<(), ()>>>,
    pub count: usize,
}

impl ClassSet {
    /// Returns true if the graph opened a new class.
    pub fn insert(&mut self, n: usize, edges: &[Edge]) -> bool {
        let bucket = self.buckets.entry(invariant(n, edges)).or_default();
        let g = to_petgraph(n, edges);
        if bucket.iter().any(|h| is_isomorphic(h, &g)) {
            return false;
        }
        bucket.push(g);
        self.count += 1;
        true
    }
}

/// Unlabeled counts per order of connected graphs with maximum degree at
/// most `delta`, optionally trees only, by sweeping every labeled graph.
pub fn labeled_oracle_counts(max_n: usize, delta: usize, trees_only: bool) -> Vec<usize> {
    let mut counts = vec![0; max_n + 1];
    for (n, slot) in counts.iter_mut().enumerate().skip(1) {
        let p = pairs(n);
        let mut classes = ClassSet::default();
        for mask in 0u64..1 << p.len() {
            let m = mask.count_ones() as usize;
            if m + 1 < n || (trees_only && m + 1 != n) || m > delta * n / 2 {
                continue;
            }
            let edges = from_mask(&p, mask);
            if degrees(n, &edges).into_iter().any(|d| d > delta) {
                continue;
            }
            if component_count(n, &edges) != 1 {
                continue;
            }
            classes.insert(n, &edges);
        }
        *slot = classes.count;
    }
    counts
}

/// Isomorphism by trying every bijection.
pub fn brute_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.order() != b.order() || a.size() != b.size() {
        return false;
    }
    let n = a.order();
    let target: std::collections::HashSet<Edge> = b.edges().into_iter().collect();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        if a.edges().iter().all(|&(u, v)| {
            let (x, y) = (perm[u], perm[v]);
            target.contains(&(x.min(y), x.max(y)))
        }) {
            return true;
        }
        if !next_permutation(&mut perm) {
            return false;
        }
    }
}

pub fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

pub fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    let edges: Vec<Edge> = g.edges().into_iter().map(|(u, v)| (perm[u], perm[v])).collect();
    Graph::from_edge_list(g.order(), &edges).unwrap()
}

pub fn random_permutation<R: Rng>(n: usize, rng: &mut R) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// Random connected graph: a random recursive tree plus extra edges, each
/// present with probability `p`. No degree bound.
pub fn random_connected<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.random_range(0..v), v));
    }
    for (u, v) in pairs(n) {
        if !edges.contains(&(u, v)) && rng.random_bool(p) {
            edges.push((u, v));
        }
    }
    let perm = random_permutation(n, rng);
    relabel(&Graph::from_edge_list(n, &edges).unwrap(), &perm)
}

/// A random vertex set `S` with `G[S]` and `G[V - S]` both connected and
/// nonempty, returned with the edges between them. `None` after too many
/// attempts.
pub fn random_bond<R: Rng>(g: &Graph, rng: &mut R) -> Option<(Vec<usize>, Vec<Edge>)> {
    let n = g.order();
    for _ in 0..200 {
        let target = rng.random_range(1..n);
        let mut side = vec![rng.random_range(0..n)];
        while side.len() < target {
            let frontier: Vec<usize> = (0..n)
                .filter(|v| !side.contains(v) && side.iter().any(|&s| g.has_edge(s, *v)))
                .collect();
            side.push(*frontier.choose(rng)?);
        }
        side.sort_unstable();
        let rest: Vec<usize> = (0..n).filter(|v| !side.contains(v)).collect();
        let inside = |set: &[usize]| -> Vec<Edge> {
            g.edges().into_iter().filter(|(u, v)| set.contains(u) && set.contains(v)).collect()
        };
        let rest_edges: Vec<Edge> = inside(&rest)
            .into_iter()
            .map(|(u, v)| (rest.binary_search(&u).unwrap(), rest.binary_search(&v).unwrap()))
            .collect();
        if component_count(rest.len(), &rest_edges) != 1 {
            continue;
        }
        let crossing: Vec<Edge> = g
            .edges()
            .into_iter()
            .filter(|(u, v)| side.contains(u) != side.contains(v))
            .collect();
        return Some((side, crossing));
    }
    None
}
