//! Cut sets, minimal prime heights, Krull dimension and unmixedness.
//!
//! For `T ⊆ V` let `c(T)` be the number of connected components of the
//! associated graph on `V \ T`. The minimal primes of the binomial edge ideal
//! are the `P_T` with `T = ∅` or `c(T \ {i}) < c(T)` for every `i ∈ T`, and
//! `height P_T = n + |T| - c(T)`.

use rayon::prelude::*;

use crate::clutter::Clutter;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::limits::Limits;
use crate::oracle::{canonical_order, PrimeDescriptor};
use crate::vertex_set::VertexSet;

/// A set with the cut-point property and the numbers attached to its prime.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CutSetRecord {
    pub set: VertexSet,
    /// `c(T)`.
    pub components: usize,
    /// `n + |T| - c(T)`.
    pub height: usize,
    /// `dim S/P_T = (n - |T|) + c(T)`.
    pub dim: usize,
}

impl CutSetRecord {
    fn new(n: usize, set: VertexSet, components: usize) -> Self {
        let t = set.len();
        Self {
            set,
            components,
            height: n + t - components,
            dim: n - t + components,
        }
    }
}

/// `c(T)`.
pub fn component_count(c: &Clutter, removed: &VertexSet) -> Result<usize> {
    c.check_set(removed)?;
    Ok(c.associated_graph().components_avoiding(removed).len())
}

/// `T = ∅`, or every member of `T` strictly increases the component count.
pub fn has_cutpoint_property(c: &Clutter, removed: &VertexSet) -> Result<bool> {
    c.check_set(removed)?;
    let g = c.associated_graph();
    let count = g.components_avoiding(removed).len();
    Ok(removed.iter().all(|i| {
        let mut smaller = removed.clone();
        smaller.remove(i);
        g.components_avoiding(&smaller).len() < count
    }))
}

/// `height P_T = n + |T| - c(T)` for any `T`.
pub fn prime_height(c: &Clutter, removed: &VertexSet) -> Result<usize> {
    Ok(c.vertex_count() + removed.len() - component_count(c, removed)?)
}

fn enum_guard(n: usize, limits: &Limits) -> Result<()> {
    let budget = limits.max_enum_vertices.min(Limits::HARD_ENUM_CAP);
    if n > budget {
        return Err(Error::ComplexityGuard {
            what: "cut-set enumeration",
            vertices: n,
            budget,
            flag: "--max-enum-vertices",
        });
    }
    Ok(())
}

fn masks(g: &Graph) -> Vec<u64> {
    (0..g.vertex_count())
        .map(|v| g.neighbors(v).to_mask().expect("enumeration graphs fit in a word"))
        .collect()
}

/// Components of the graph restricted to `alive`, by repeated flooding.
fn count_components(adj: &[u64], mut alive: u64) -> u8 {
    let mut count = 0;
    while alive != 0 {
        let mut frontier = alive & alive.wrapping_neg();
        alive &= !frontier;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = adj[v] & alive;
            alive &= !fresh;
            frontier |= fresh;
        }
        count += 1;
    }
    count
}

/// `c(T)` for every `T`, indexed by the mask of `T`.
fn component_table(adj: &[u64]) -> Vec<u8> {
    let n = adj.len();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    (0..1u64 << n)
        .into_par_iter()
        .map(|t| count_components(adj, full & !t))
        .collect()
}

/// All sets with the cut-point property, ordered by size then lexicographically.
pub fn cut_sets(c: &Clutter, limits: &Limits) -> Result<Vec<CutSetRecord>> {
    let n = c.vertex_count();
    enum_guard(n, limits)?;
    let adj = masks(&c.associated_graph());
    let table = component_table(&adj);
    let mut found: Vec<u64> = (0..1u64 << n)
        .into_par_iter()
        .filter(|&t| {
            let count = table[t as usize];
            let mut rest = t;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                rest &= rest - 1;
                if table[(t ^ bit) as usize] >= count {
                    return false;
                }
            }
            true
        })
        .collect();
    found.sort_by(|&a, &b| {
        a.count_ones()
            .cmp(&b.count_ones())
            .then_with(|| VertexSet::from_mask(a).cmp(&VertexSet::from_mask(b)))
    });
    Ok(found
        .into_iter()
        .map(|t| CutSetRecord::new(n, VertexSet::from_mask(t), table[t as usize] as usize))
        .collect())
}

/// `dim S/J = max over cut sets of (n - |T|) + c(T)`.
pub fn dimension(c: &Clutter, limits: &Limits) -> Result<usize> {
    Ok(cut_sets(c, limits)?.iter().map(|r| r.dim).max().unwrap_or(0))
}

/// One descriptor per cut set.
pub fn minimal_primes(c: &Clutter, limits: &Limits) -> Result<Vec<PrimeDescriptor>> {
    let records = cut_sets(c, limits)?;
    let g = c.associated_graph();
    let mut out: Vec<PrimeDescriptor> = records
        .iter()
        .map(|r| PrimeDescriptor::from_graph(&g, &r.set))
        .collect();
    out.sort_by(|a, b| canonical_order(&a.removed, &b.removed));
    Ok(out)
}

/// Unmixed iff, in every connected component `H`, each cut set `T` of `H`
/// has `c(T) = |T| + 1`.
pub fn is_unmixed(c: &Clutter, limits: &Limits) -> Result<bool> {
    for h in c.components() {
        let records = cut_sets(&h, limits)?;
        if records.iter().any(|r| r.components != r.set.len() + 1) {
            return Ok(false);
        }
    }
    Ok(true)
}
