//! Brute-force reference computations and instance generators shared by the
//! integration suites. Everything here works from the raw edge lists with
//! bitmasks and union-find, without calling the library's graph code.

#![allow(dead_code)]

use bei_core::{random_clutter, Clutter};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Covered pairs `(i, j)`, `i < j`, read straight off the hyperedges.
pub fn pairs(c: &Clutter) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for e in c.edges() {
        let m = e.to_vec();
        for a in 0..m.len() {
            for b in a + 1..m.len() {
                out.push((m[a], m[b]));
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Component count of the associated graph after deleting `removed`.
pub fn components(n: usize, pairs: &[(usize, usize)], removed: u64) -> usize {
    let mut parent: Vec<usize> = (0..n).collect();
    let alive = |v: usize| removed >> v & 1 == 0;
    let mut count = (0..n).filter(|&v| alive(v)).count();
    for &(a, b) in pairs {
        if alive(a) && alive(b) {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra] = rb;
                count -= 1;
            }
        }
    }
    count
}

/// `(T, c(T))` for every `T` with the cut-point property, sorted by mask.
pub fn cut_sets(c: &Clutter) -> Vec<(u64, usize)> {
    let n = c.vertex_count();
    let p = pairs(c);
    let table: Vec<usize> = (0..1u64 << n).map(|t| components(n, &p, t)).collect();
    (0..1u64 << n)
        .filter(|&t| (0..n).filter(|&i| t >> i & 1 == 1).all(|i| table[(t & !(1 << i)) as usize] < table[t as usize]))
        .map(|t| (t, table[t as usize]))
        .collect()
}

pub fn height(n: usize, t: u64, comps: usize) -> usize {
    n + t.count_ones() as usize - comps
}

/// Maximal cliques by scanning every vertex subset.
pub fn max_cliques(c: &Clutter) -> Vec<u64> {
    let n = c.vertex_count();
    let p = pairs(c);
    let mut adj = vec![0u64; n];
    for &(a, b) in &p {
        adj[a] |= 1 << b;
        adj[b] |= 1 << a;
    }
    let is_clique = |s: u64| (0..n).filter(|&v| s >> v & 1 == 1).all(|v| s & !(1 << v) & !adj[v] == 0);
    let cliques: Vec<u64> = (1..1u64 << n).filter(|&s| is_clique(s)).collect();
    cliques
        .iter()
        .copied()
        .filter(|&s| !cliques.iter().any(|&b| b != s && s & b == s))
        .collect()
}

/// Number of maximal cliques containing `v`.
pub fn facet_count(facets: &[u64], v: usize) -> usize {
    facets.iter().filter(|&&f| f >> v & 1 == 1).count()
}

pub fn mask(set: &bei_core::VertexSet) -> u64 {
    set.to_mask().expect("test instances fit in a word")
}

/// Same clutter with every label passed through `f`.
pub fn relabel(c: &Clutter, f: impl Fn(&str) -> String) -> Clutter {
    let labels: Vec<String> = c.labels().iter().map(|l| f(l)).collect();
    let edges: Vec<Vec<String>> = c
        .edges()
        .iter()
        .map(|e| e.iter().map(|v| f(c.label(v))).collect())
        .collect();
    Clutter::new(labels, edges, false).unwrap()
}

/// Labels `1..=n` shifted by `offset`.
pub fn shifted(c: &Clutter, offset: usize) -> Clutter {
    relabel(c, |l| (l.parse::<usize>().unwrap() + offset).to_string())
}

pub fn random_small(rng: &mut ChaCha8Rng, max_n: usize, max_arity: usize) -> Clutter {
    loop {
        let n = rng.gen_range(1..=max_n);
        let m = rng.gen_range(0..=n + 2);
        let k = rng.gen_range(2..=max_arity);
        if let Ok(c) = random_clutter(n, m, k, rng.gen()) {
            return c;
        }
    }
}

pub fn random_connected(rng: &mut ChaCha8Rng, n: usize, max_arity: usize) -> Clutter {
    loop {
        let m = rng.gen_range(n.saturating_sub(1)..=n + 2);
        let k = rng.gen_range(2..=max_arity);
        if let Ok(c) = random_clutter(n, m, k, rng.gen()) {
            if c.is_connected() {
                return c;
            }
        }
    }
}

/// Labels `1..=n`; maximal cliques pairwise share at most one vertex and the
/// associated graph is chordal. Each clique is emitted either as one
/// hyperedge or split into smaller edges covering all its pairs.
pub fn random_block_clutter(rng: &mut ChaCha8Rng, max_n: usize) -> (Clutter, Vec<Vec<usize>>) {
    let target = rng.gen_range(2..=max_n);
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut n = 0;
    while n < target {
        let fresh = rng.gen_range(1..=3.min(target - n));
        let attach = if n == 0 || rng.gen_bool(0.15) { None } else { Some(rng.gen_range(1..=n)) };
        let mut b: Vec<usize> = attach.into_iter().collect();
        b.extend(n + 1..=n + fresh);
        n += fresh;
        blocks.push(b);
    }
    let mut edges: Vec<Vec<String>> = Vec::new();
    for b in &blocks {
        if b.len() >= 3 && rng.gen_bool(0.5) {
            for x in 0..b.len() {
                for y in x + 1..b.len() {
                    edges.push(vec![b[x].to_string(), b[y].to_string()]);
                }
            }
        } else {
            edges.push(b.iter().map(|v| v.to_string()).collect());
        }
    }
    edges.shuffle(rng);
    let c = Clutter::new((1..=n).map(|i| i.to_string()), edges, true).unwrap();
    (c, blocks)
}

/// A complete clutter on the given labels.
pub fn complete(labels: &[String]) -> Clutter {
    Clutter::new(labels.iter().cloned(), [labels.to_vec()], false).unwrap()
}
