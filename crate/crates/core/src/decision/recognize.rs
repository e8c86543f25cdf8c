//! Structural recognizers: gluings at free cut points, graph-level cones and
//! the chordal clique decomposition.

use crate::clique::{graph_maximal_cliques, maximal_cliques};
use crate::clutter::{Clutter, VertexId};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::vertex_set::VertexSet;

/// `C = left ∪ right` with `V(left) ∩ V(right) = {vertex}` and `vertex` free
/// in both clique complexes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GluingSplit {
    /// Id of the glue vertex in the original clutter.
    pub vertex: VertexId,
    pub left: Clutter,
    pub right: Clutter,
}

fn free_at(c: &Clutter, label: &str, limits: &Limits) -> Result<bool> {
    let v = c.vertex(label)?;
    let facets = maximal_cliques(c, limits)?;
    Ok(facets.iter().filter(|f| f.members.contains(v)).count() == 1)
}

/// Every way to split a connected clutter as a gluing, in label order of the
/// glue vertex.
///
/// A glue vertex is a cut point whose removal leaves exactly two components:
/// with three or more, one side would hold two of them and the vertex would
/// lie in at least two of that side's facets.
pub fn gluing_splits(c: &Clutter, limits: &Limits) -> Result<Vec<GluingSplit>> {
    let g = c.associated_graph();
    if g.vertex_count() < 3 || !g.is_connected() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for v in g.cut_vertices().iter() {
        let sides = g.components_avoiding(&VertexSet::singleton(v));
        if sides.len() != 2 {
            continue;
        }
        let mut halves = sides.into_iter().map(|mut s| {
            s.insert(v);
            c.induced(&s)
        });
        let left = halves.next().unwrap()?;
        let right = halves.next().unwrap()?;
        let label = c.label(v);
        if free_at(&left, label, limits)? && free_at(&right, label, limits)? {
            out.push(GluingSplit { vertex: v, left, right });
        }
    }
    Ok(out)
}

/// The gluing split at the lowest-labelled eligible vertex.
pub fn gluing_split(c: &Clutter, limits: &Limits) -> Result<Option<GluingSplit>> {
    Ok(gluing_splits(c, limits)?.into_iter().next())
}

/// Glues two clutters at the one label they share, which must be free in both.
pub fn glue(left: &Clutter, right: &Clutter, at: &str, limits: &Limits) -> Result<Clutter> {
    let shared: Vec<&String> = left
        .labels()
        .iter()
        .filter(|l| right.index_of(l).is_some())
        .collect();
    if shared.len() != 1 || shared[0] != at {
        let shared: Vec<&str> = shared.iter().map(|s| s.as_str()).collect();
        return Err(Error::InvalidGluing {
            at: at.to_string(),
            reason: format!("shared vertices are {{{}}}", shared.join(",")),
        });
    }
    if !free_at(left, at, limits)? || !free_at(right, at, limits)? {
        return Err(Error::GlueVertexNotFree(at.to_string()));
    }
    Ok(left.union(right))
}

/// A vertex adjacent to every other vertex of the associated graph, with the
/// base obtained by deleting it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeApex {
    pub apex: VertexId,
    pub base: Clutter,
    /// Whether the clutter is literally `cone(apex, base)`, not just a cone
    /// at the level of associated graphs.
    pub literal: bool,
}

/// All universal vertices (for at least two vertices), in label order.
pub fn graph_cone_apexes(c: &Clutter) -> Vec<ConeApex> {
    let n = c.vertex_count();
    if n < 2 {
        return Vec::new();
    }
    let g = c.associated_graph();
    (0..n)
        .filter(|&v| g.neighbors(v).len() == n - 1)
        .map(|v| {
            let base = c.delete_vertex(v).expect("vertex in range");
            let literal = base.cone(c.label(v)).is_ok_and(|k| &k == c);
            ConeApex { apex: v, base, literal }
        })
        .collect()
}

/// The lowest-labelled apex, if the associated graph is a cone.
pub fn graph_cone_apex(c: &Clutter) -> Option<ConeApex> {
    graph_cone_apexes(c).into_iter().next()
}

/// When the associated graph is chordal and its maximal cliques pairwise share
/// at most one vertex, the Cohen-Macaulay answer: no vertex lies in three or
/// more maximal cliques. `None` when the decomposition does not apply.
pub fn chordal_clique_case(c: &Clutter, limits: &Limits) -> Result<Option<bool>> {
    maximal_cliques(c, limits)?;
    let g = c.associated_graph();
    if !g.is_chordal() {
        return Ok(None);
    }
    let facets = graph_maximal_cliques(&g);
    for (k, a) in facets.iter().enumerate() {
        if facets[k + 1..]
            .iter()
            .any(|b| a.members.intersection_len(&b.members) > 1)
        {
            return Ok(None);
        }
    }
    let crowded = (0..c.vertex_count())
        .any(|v| facets.iter().filter(|f| f.members.contains(v)).count() >= 3);
    Ok(Some(!crowded))
}
