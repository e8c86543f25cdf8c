//! Brute-force ground truth for the minimal primes.
//!
//! Each candidate prime `P_T` is represented by `T` and the partition of the
//! remaining vertices into connected components of the associated graph. It
//! is generated by the variables `x_i, y_i` for `i` in `T` together with every
//! `f_ij` whose endpoints share a part. Containment between two such primes
//! is decided generator by generator, and the minimal primes are extracted as
//! the inclusion-minimal members of the whole family `{P_T : T ⊆ V}`. Nothing
//! here consults the cut-point criterion.

use rayon::prelude::*;

use crate::clutter::Clutter;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::limits::Limits;
use crate::vertex_set::VertexSet;

/// Combinatorial description of the prime `P_T`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PrimeDescriptor {
    /// Number of vertices of the clutter the prime belongs to.
    pub universe: usize,
    pub removed: VertexSet,
    /// Components of the associated graph on `V \ removed`, by smallest member.
    pub parts: Vec<VertexSet>,
    pub height: usize,
}

impl PrimeDescriptor {
    pub(crate) fn from_graph(g: &Graph, removed: &VertexSet) -> Self {
        let parts = g.components_avoiding(removed);
        let height = parts.iter().map(|p| p.len() - 1).sum::<usize>() + 2 * removed.len();
        Self {
            universe: g.vertex_count(),
            removed: removed.clone(),
            parts,
            height,
        }
    }

    /// Part index per vertex; `None` for removed vertices.
    fn part_index(&self) -> Vec<Option<usize>> {
        let mut idx = vec![None; self.universe];
        for (k, p) in self.parts.iter().enumerate() {
            for v in p {
                idx[v] = Some(k);
            }
        }
        idx
    }

    fn is_well_formed(&self) -> bool {
        let mut seen = self.removed.clone();
        for p in &self.parts {
            if !seen.is_disjoint(p) {
                return false;
            }
            seen = seen.union(p);
        }
        seen == VertexSet::full(self.universe)
    }
}

/// Canonical order: by `|T|`, then lexicographically by `T`.
pub(crate) fn canonical_order(a: &VertexSet, b: &VertexSet) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

pub fn describe_prime(c: &Clutter, removed: &VertexSet) -> Result<PrimeDescriptor> {
    c.check_set(removed)?;
    Ok(PrimeDescriptor::from_graph(&c.associated_graph(), removed))
}

/// Whether `q ⊆ p`, by checking every generator of `q` for membership in `p`.
///
/// A variable `x_i` (or `y_i`) lies in `p` iff `i` is removed in `p`. A
/// binomial `f_ij` lies in `p` iff `i` or `j` is removed in `p`, or `i` and `j`
/// share a part of `p`.
pub fn prime_contains(p: &PrimeDescriptor, q: &PrimeDescriptor) -> Result<bool> {
    if p.universe != q.universe || !p.is_well_formed() || !q.is_well_formed() {
        return Err(Error::DescriptorMismatch);
    }
    Ok(contains_unchecked(p, &p.part_index(), q))
}

fn contains_unchecked(p: &PrimeDescriptor, p_part: &[Option<usize>], q: &PrimeDescriptor) -> bool {
    if !q.removed.is_subset(&p.removed) {
        return false;
    }
    for part in &q.parts {
        let members = part.to_vec();
        for (k, &i) in members.iter().enumerate() {
            for &j in &members[k + 1..] {
                let inside = match (p_part[i], p_part[j]) {
                    (None, _) | (_, None) => true,
                    (Some(a), Some(b)) => a == b,
                };
                if !inside {
                    return false;
                }
            }
        }
    }
    true
}

/// Inclusion-minimal members of `{P_T : T ⊆ V}`, canonically ordered.
pub fn minimal_primes_oracle(c: &Clutter, limits: &Limits) -> Result<Vec<PrimeDescriptor>> {
    let n = c.vertex_count();
    if n > limits.max_oracle_vertices {
        return Err(Error::ComplexityGuard {
            what: "brute-force prime oracle",
            vertices: n,
            budget: limits.max_oracle_vertices,
            flag: "--max-oracle-vertices",
        });
    }
    let g = c.associated_graph();
    let family: Vec<PrimeDescriptor> = (0..1u64 << n)
        .map(|t| PrimeDescriptor::from_graph(&g, &VertexSet::from_mask(t)))
        .collect();
    let mut minimal: Vec<PrimeDescriptor> = family
        .par_iter()
        .enumerate()
        .filter(|&(t, p)| {
            let idx = p.part_index();
            let t = t as u64;
            // Only descriptors whose removed set is a proper subset of T can
            // be strictly contained in P_T: the variable generators force it.
            let mut sub = t;
            while sub != 0 {
                sub = (sub - 1) & t;
                if contains_unchecked(p, &idx, &family[sub as usize]) {
                    return false;
                }
            }
            true
        })
        .map(|(_, p)| p.clone())
        .collect();
    minimal.sort_by(|a, b| canonical_order(&a.removed, &b.removed));
    Ok(minimal)
}
