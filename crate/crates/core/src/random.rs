//! Seeded random clutters.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::clutter::Clutter;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Draws per requested edge before giving up.
pub const ATTEMPTS_PER_EDGE: usize = 1000;

/// A clutter on labels `1..=n` with exactly `m` edges of sizes `2..=k`.
///
/// Edges are drawn uniformly by size and then by subset; a draw comparable to
/// an accepted edge is rejected and redrawn.
pub fn random_clutter(n: usize, m: usize, k: usize, seed: u64) -> Result<Clutter> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_clutter_with(&mut rng, n, m, k)
}

/// As [`random_clutter`], drawing from a caller-owned generator.
pub fn random_clutter_with<R: Rng>(rng: &mut R, n: usize, m: usize, k: usize) -> Result<Clutter> {
    if n == 0 {
        return Err(Error::InvalidParameter("need at least one vertex".into()));
    }
    if k < 2 {
        return Err(Error::InvalidParameter("maximum edge size must be at least 2".into()));
    }
    let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let top = k.min(n);
    let budget = ATTEMPTS_PER_EDGE * m.max(1);
    let mut edges: Vec<VertexSet> = Vec::with_capacity(m);
    let mut attempts = 0;
    while edges.len() < m {
        if attempts == budget || top < 2 {
            return Err(Error::Unattainable { wanted: m, attempts });
        }
        attempts += 1;
        let size = rng.gen_range(2..=top);
        let e: VertexSet = sample(rng, n, size).into_iter().collect();
        if edges.iter().all(|f| !e.is_subset(f) && !f.is_subset(&e)) {
            edges.push(e);
        }
    }
    let edges: Vec<Vec<&str>> = edges
        .iter()
        .map(|e| e.iter().map(|v| labels[v].as_str()).collect())
        .collect();
    Clutter::new(labels.iter().cloned(), edges, false)
}
