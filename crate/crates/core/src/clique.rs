//! Cliques, facets of the clique complex, and free vertices.

use crate::clutter::{Clutter, VertexId};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::limits::Limits;
use crate::vertex_set::VertexSet;

/// A maximal clique, i.e. a facet of the clique complex.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Facet {
    pub members: VertexSet,
}

/// Every pair of distinct members of `set` lies in a common edge.
/// Checked against the hyperedges directly, not the associated graph.
pub fn is_clique(c: &Clutter, set: &VertexSet) -> Result<bool> {
    c.check_set(set)?;
    let members = set.to_vec();
    for (k, &a) in members.iter().enumerate() {
        for &b in &members[k + 1..] {
            if !c.edges().iter().any(|e| e.contains(a) && e.contains(b)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn guard(n: usize, limits: &Limits) -> Result<()> {
    if n > limits.max_clique_vertices {
        return Err(Error::ComplexityGuard {
            what: "maximal clique enumeration",
            vertices: n,
            budget: limits.max_clique_vertices,
            flag: "--max-clique-vertices",
        });
    }
    Ok(())
}

/// Facets of the clique complex, in canonical order. Isolated vertices give
/// singleton facets.
pub fn maximal_cliques(c: &Clutter, limits: &Limits) -> Result<Vec<Facet>> {
    guard(c.vertex_count(), limits)?;
    Ok(graph_maximal_cliques(&c.associated_graph()))
}

/// Bron–Kerbosch with Tomita pivoting on the associated graph.
pub fn graph_maximal_cliques(g: &Graph) -> Vec<Facet> {
    let mut out = Vec::new();
    let all = VertexSet::full(g.vertex_count());
    if !all.is_empty() {
        expand(g, VertexSet::new(), all, VertexSet::new(), &mut out);
    }
    out.sort();
    out
}

fn expand(g: &Graph, r: VertexSet, mut p: VertexSet, mut x: VertexSet, out: &mut Vec<Facet>) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(Facet { members: r });
        }
        return;
    }
    let pivot = p
        .union(&x)
        .iter()
        .max_by_key(|&u| p.intersection_len(g.neighbors(u)))
        .unwrap();
    for v in p.difference(g.neighbors(pivot)).to_vec() {
        let mut r2 = r.clone();
        r2.insert(v);
        let nv = g.neighbors(v);
        expand(g, r2, p.intersection(nv), x.intersection(nv), out);
        p.remove(v);
        x.insert(v);
    }
}

/// Vertices that lie in exactly one facet.
pub fn free_vertices(c: &Clutter, limits: &Limits) -> Result<VertexSet> {
    let facets = maximal_cliques(c, limits)?;
    Ok(free_in(&facets, c.vertex_count()))
}

pub(crate) fn free_in(facets: &[Facet], n: usize) -> VertexSet {
    (0..n)
        .filter(|&v| facets.iter().filter(|f| f.members.contains(v)).count() == 1)
        .collect()
}

pub fn is_free(c: &Clutter, v: VertexId, limits: &Limits) -> Result<bool> {
    c.check_vertex(v)?;
    Ok(free_vertices(c, limits)?.contains(v))
}
