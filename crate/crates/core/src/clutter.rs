//! Clutters and the constructions defined on them.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{index_of, Graph};
use crate::label::sort_labels;
use crate::vertex_set::VertexSet;

/// Dense index of a vertex inside one clutter's label table.
pub type VertexId = usize;

/// A clutter: vertices `0..n` with external labels, and an antichain of
/// nonempty edges.
///
/// Every value is canonical: labels are in natural label order (ids follow
/// that order) and edges are sorted lexicographically by their ascending id
/// lists. Structural equality is therefore equality of clutters.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Clutter {
    labels: Vec<String>,
    edges: Vec<VertexSet>,
}

/// The binomial `x_i y_j - x_j y_i` attached to a covered pair `i < j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Binomial {
    i: VertexId,
    j: VertexId,
}

impl Binomial {
    /// Orders the pair; `None` when `a == b`.
    pub fn new(a: VertexId, b: VertexId) -> Option<Self> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Some(Self { i: a, j: b }),
            std::cmp::Ordering::Greater => Some(Self { i: b, j: a }),
            std::cmp::Ordering::Equal => None,
        }
    }

    pub fn i(&self) -> VertexId {
        self.i
    }

    pub fn j(&self) -> VertexId {
        self.j
    }

    /// `x{i}*y{j} - x{j}*y{i}` with external labels.
    pub fn render(&self, labels: &[String]) -> String {
        let (a, b) = (&labels[self.i], &labels[self.j]);
        format!("x{a}*y{b} - x{b}*y{a}")
    }
}

/// Keeps the inclusion-maximal sets, dropping empties and duplicates; sorted.
pub(crate) fn maximal_elements(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.retain(|s| !s.is_empty());
    sets.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    sets.dedup();
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| s.is_subset(k)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}

impl Clutter {
    /// Builds a clutter from labels and label-valued edges.
    ///
    /// Duplicate edges collapse. With `minimize`, edges contained in other
    /// edges are dropped; without it they are an error. Isolated vertices are
    /// allowed.
    pub fn new<L, E, S>(labels: L, edges: E, minimize: bool) -> Result<Self>
    where
        L: IntoIterator,
        L::Item: Into<String>,
        E: IntoIterator,
        E::Item: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        sort_labels(&mut labels);
        if let Some(w) = labels.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateLabel(w[0].clone()));
        }
        let mut raw = Vec::new();
        for edge in edges {
            let mut set = VertexSet::new();
            for l in edge {
                let l = l.as_ref();
                let v = index_of(&labels, l).ok_or_else(|| Error::UnknownLabelInEdge(l.to_string()))?;
                set.insert(v);
            }
            if set.is_empty() {
                return Err(Error::EmptyEdge);
            }
            raw.push(set);
        }
        if !minimize {
            raw.sort();
            raw.dedup();
            for a in &raw {
                if let Some(b) = raw.iter().find(|b| *b != a && a.is_subset(b)) {
                    let show = |s: &VertexSet| {
                        s.iter().map(|v| labels[v].as_str()).collect::<Vec<_>>().join(",")
                    };
                    return Err(Error::NotAnAntichain {
                        contained: show(a),
                        container: show(b),
                    });
                }
            }
        }
        Ok(Self::from_parts(labels, raw))
    }

    /// Canonicalizes edges over labels that are already sorted and distinct.
    pub(crate) fn from_parts(labels: Vec<String>, edges: Vec<VertexSet>) -> Self {
        Self {
            labels,
            edges: maximal_elements(edges),
        }
    }

    /// The clutter with no vertices.
    pub fn empty() -> Self {
        Self::from_parts(Vec::new(), Vec::new())
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.vertex_count())
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<VertexId> {
        index_of(&self.labels, label)
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub(crate) fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::UnknownVertex(format!("id {v}")))
        }
    }

    pub(crate) fn check_set(&self, set: &VertexSet) -> Result<()> {
        match set.iter().find(|&v| v >= self.vertex_count()) {
            Some(v) => Err(Error::UnknownVertex(format!("id {v}"))),
            None => Ok(()),
        }
    }

    pub fn vertex(&self, label: &str) -> Result<VertexId> {
        self.index_of(label)
            .ok_or_else(|| Error::UnknownVertex(format!("{label:?}")))
    }

    /// Vertex set from labels.
    pub fn set_of<I, S>(&self, labels: I) -> Result<VertexSet>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        labels.into_iter().map(|l| self.vertex(l.as_ref())).collect()
    }

    /// Labels of a vertex set, in label order.
    pub fn labels_of(&self, set: &VertexSet) -> Vec<String> {
        set.iter().map(|v| self.labels[v].clone()).collect()
    }

    /// `{a,b,c}` rendering of a vertex set.
    pub fn fmt_set(&self, set: &VertexSet) -> String {
        format!("{{{}}}", self.labels_of(set).join(","))
    }

    /// Moves a set of this clutter into the id space of `other`, by label.
    /// Fails if some member's label is absent from `other`.
    pub fn transfer(&self, set: &VertexSet, other: &Clutter) -> Result<VertexSet> {
        other.set_of(set.iter().map(|v| self.label(v)))
    }

    /// Pairs `{i, j}` covered by some edge.
    pub fn associated_graph(&self) -> Graph {
        let mut g = Graph::empty(self.labels.clone());
        for e in &self.edges {
            let members = e.to_vec();
            for (k, &a) in members.iter().enumerate() {
                for &b in &members[k + 1..] {
                    g.add_edge(a, b);
                }
            }
        }
        g
    }

    /// Generators `f_ij` of the binomial edge ideal, one per covered pair.
    pub fn binomial_generators(&self) -> BTreeSet<Binomial> {
        let mut out = BTreeSet::new();
        for e in &self.edges {
            let members = e.to_vec();
            for (k, &a) in members.iter().enumerate() {
                for &b in &members[k + 1..] {
                    out.extend(Binomial::new(a, b));
                }
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.associated_graph().is_connected()
    }

    /// Vertex sets of the connected components, ordered by smallest member.
    pub fn component_sets(&self) -> Vec<VertexSet> {
        self.associated_graph().components()
    }

    /// Connected components as clutters, each keeping the edges inside it.
    pub fn components(&self) -> Vec<Clutter> {
        self.component_sets().iter().map(|s| self.restrict(s)).collect()
    }

    /// Keeps `keep`; edges become the maximal elements of `e ∩ keep`.
    fn restrict(&self, keep: &VertexSet) -> Clutter {
        let kept: Vec<usize> = keep.iter().collect();
        let mut pos = vec![usize::MAX; self.vertex_count()];
        for (new, &old) in kept.iter().enumerate() {
            pos[old] = new;
        }
        let labels = kept.iter().map(|&v| self.labels[v].clone()).collect();
        let edges = self
            .edges
            .iter()
            .map(|e| e.intersection(keep).iter().map(|v| pos[v]).collect())
            .collect();
        Self::from_parts(labels, edges)
    }

    /// The clutter on the kept set `keep`, with edges the maximal elements of
    /// `{e ∖ (V ∖ keep)}`.
    pub fn induced(&self, keep: &VertexSet) -> Result<Clutter> {
        self.check_set(keep)?;
        Ok(self.restrict(keep))
    }

    /// Removes `v`; edges become the maximal elements of `{e ∖ {v}}`.
    pub fn delete_vertex(&self, v: VertexId) -> Result<Clutter> {
        self.check_vertex(v)?;
        let mut keep = self.vertices();
        keep.remove(v);
        Ok(self.restrict(&keep))
    }

    fn edges_in(&self, labels: &[String]) -> impl Iterator<Item = VertexSet> + '_ {
        let map: Vec<usize> = self.labels.iter().map(|l| index_of(labels, l).unwrap()).collect();
        self.edges.iter().map(move |e| e.iter().map(|v| map[v]).collect())
    }

    /// Union by label; edges are the maximal elements of both edge sets.
    pub fn union(&self, other: &Clutter) -> Clutter {
        let mut labels: Vec<String> = self.labels.iter().chain(&other.labels).cloned().collect();
        sort_labels(&mut labels);
        labels.dedup();
        let edges = self.edges_in(&labels).chain(other.edges_in(&labels)).collect();
        Self::from_parts(labels, edges)
    }

    /// Union of clutters with disjoint label sets.
    pub fn disjoint_union(&self, other: &Clutter) -> Result<Clutter> {
        if let Some(l) = self.labels.iter().find(|l| other.index_of(l).is_some()) {
            return Err(Error::LabelCollision(l.clone()));
        }
        Ok(self.union(other))
    }

    /// Adds a fresh vertex `apex` with a 2-element edge to every vertex.
    ///
    /// Singleton edges `{i}` of the base are contained in `{apex, i}` and drop
    /// out; all other edges are kept as they are.
    pub fn cone(&self, apex: &str) -> Result<Clutter> {
        if self.index_of(apex).is_some() {
            return Err(Error::LabelCollision(apex.to_string()));
        }
        let mut labels = self.labels.clone();
        labels.push(apex.to_string());
        sort_labels(&mut labels);
        let a = index_of(&labels, apex).unwrap();
        let mut edges: Vec<VertexSet> = self.edges_in(&labels).collect();
        for l in &self.labels {
            let i = index_of(&labels, l).unwrap();
            edges.push([a, i].into_iter().collect());
        }
        Ok(Self::from_parts(labels, edges))
    }

    /// Whether removing `v` increases the number of connected components.
    pub fn is_cut_point(&self, v: VertexId) -> Result<bool> {
        self.check_vertex(v)?;
        Ok(self.cut_points().contains(v))
    }

    pub fn cut_points(&self) -> VertexSet {
        self.associated_graph().cut_vertices()
    }

    /// Every pair of vertices lies in a common edge.
    pub fn is_complete(&self) -> bool {
        self.associated_graph().is_complete()
    }
}

impl fmt::Debug for Clutter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self.edges.iter().map(|e| self.fmt_set(e)).collect();
        write!(f, "Clutter(V={{{}}}, E=[{}])", self.labels.join(","), edges.join(" "))
    }
}
