//! Simple labelled graphs stored as adjacency bitsets.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::label::{label_cmp, sort_labels};
use crate::vertex_set::VertexSet;

/// A simple undirected graph on dense ids `0..n`, with an external label per id.
///
/// Labels are kept in natural label order, so two graphs with the same labels
/// and the same labelled edges are `==`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    adj: Vec<VertexSet>,
}

pub(crate) fn index_of(labels: &[String], label: &str) -> Option<usize> {
    labels.binary_search_by(|l| label_cmp(l, label)).ok()
}

impl Graph {
    /// Builds a graph from labels and labelled edges. Self-loops are rejected.
    pub fn new<L, E, S>(labels: L, edges: E) -> Result<Self>
    where
        L: IntoIterator,
        L::Item: Into<String>,
        E: IntoIterator<Item = (S, S)>,
        S: AsRef<str>,
    {
        let mut labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        sort_labels(&mut labels);
        if let Some(w) = labels.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateLabel(w[0].clone()));
        }
        let mut g = Self::empty(labels);
        for (a, b) in edges {
            let (a, b) = (a.as_ref(), b.as_ref());
            let i = index_of(&g.labels, a).ok_or_else(|| Error::UnknownLabelInEdge(a.to_string()))?;
            let j = index_of(&g.labels, b).ok_or_else(|| Error::UnknownLabelInEdge(b.to_string()))?;
            if i == j {
                return Err(Error::SelfLoop(a.to_string()));
            }
            g.add_edge(i, j);
        }
        Ok(g)
    }

    /// Edgeless graph on already-sorted labels.
    pub(crate) fn empty(labels: Vec<String>) -> Self {
        let adj = vec![VertexSet::new(); labels.len()];
        Self { labels, adj }
    }

    pub(crate) fn add_edge(&mut self, i: usize, j: usize) {
        if i != j {
            self.adj[i].insert(j);
            self.adj[j].insert(i);
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        index_of(&self.labels, label)
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i].contains(j)
    }

    /// Edges as `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.vertex_count())
            .flat_map(|i| self.adj[i].iter().filter(move |&j| j > i).map(move |j| (i, j)))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges as label pairs, each pair in label order. Comparable across graphs.
    pub fn labelled_edges(&self) -> BTreeSet<(String, String)> {
        self.edges()
            .into_iter()
            .map(|(i, j)| (self.labels[i].clone(), self.labels[j].clone()))
            .collect()
    }

    /// Connected components of the subgraph induced on `V \ removed`,
    /// ordered by smallest member.
    pub fn components_avoiding(&self, removed: &VertexSet) -> Vec<VertexSet> {
        let mut unseen = VertexSet::full(self.vertex_count()).difference(removed);
        let mut out = Vec::new();
        while let Some(start) = unseen.first() {
            let mut comp = VertexSet::singleton(start);
            let mut stack = vec![start];
            unseen.remove(start);
            while let Some(u) = stack.pop() {
                for w in self.adj[u].intersection(&unseen).iter() {
                    unseen.remove(w);
                    comp.insert(w);
                    stack.push(w);
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_avoiding(&VertexSet::new())
    }

    /// The graph with no vertices counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        self.adj.iter().all(|a| a.len() + 1 == n)
    }

    /// Vertices whose removal increases the number of components.
    pub fn cut_vertices(&self) -> VertexSet {
        let base = self.components().len();
        (0..self.vertex_count())
            .filter(|&v| self.components_avoiding(&VertexSet::singleton(v)).len() > base)
            .collect()
    }

    /// Induced subgraph on `keep`; ids are renumbered densely in label order.
    pub fn induced(&self, keep: &VertexSet) -> Graph {
        let kept: Vec<usize> = keep.iter().filter(|&v| v < self.vertex_count()).collect();
        let mut pos = vec![usize::MAX; self.vertex_count()];
        for (new, &old) in kept.iter().enumerate() {
            pos[old] = new;
        }
        let mut g = Self::empty(kept.iter().map(|&v| self.labels[v].clone()).collect());
        for (new, &old) in kept.iter().enumerate() {
            g.adj[new] = self.adj[old].iter().filter(|&w| pos[w] != usize::MAX).map(|w| pos[w]).collect();
        }
        g
    }

    pub fn without_vertex(&self, v: usize) -> Graph {
        let mut keep = VertexSet::full(self.vertex_count());
        keep.remove(v);
        self.induced(&keep)
    }

    /// Union by label: vertices and edges of both graphs.
    pub fn union(&self, other: &Graph) -> Graph {
        let mut labels: Vec<String> = self.labels.iter().chain(&other.labels).cloned().collect();
        sort_labels(&mut labels);
        labels.dedup();
        let mut g = Self::empty(labels);
        for h in [self, other] {
            for (i, j) in h.edges() {
                let a = g.index_of(&h.labels[i]).unwrap();
                let b = g.index_of(&h.labels[j]).unwrap();
                g.add_edge(a, b);
            }
        }
        g
    }

    /// Joins a fresh vertex `apex` to every vertex.
    pub fn cone(&self, apex: &str) -> Result<Graph> {
        if self.index_of(apex).is_some() {
            return Err(Error::LabelCollision(apex.to_string()));
        }
        let star = Graph::new(
            self.labels.iter().cloned().chain([apex.to_string()]),
            self.labels.iter().map(|l| (l.as_str(), apex)),
        )?;
        Ok(self.union(&star))
    }

    /// A perfect elimination ordering, if the graph is chordal.
    ///
    /// Maximum cardinality search visits vertices in an order whose reverse is
    /// a perfect elimination ordering exactly when the graph is chordal; the
    /// candidate is then verified directly.
    pub fn perfect_elimination_order(&self) -> Option<Vec<usize>> {
        let n = self.vertex_count();
        let mut weight = vec![0usize; n];
        let mut visited = VertexSet::new();
        let mut order = Vec::with_capacity(n);
        for _ in 0..n {
            let v = (0..n)
                .filter(|&v| !visited.contains(v))
                .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
                .unwrap();
            visited.insert(v);
            order.push(v);
            for w in self.adj[v].iter() {
                if !visited.contains(w) {
                    weight[w] += 1;
                }
            }
        }
        order.reverse();

        let mut later = VertexSet::full(n);
        for &v in &order {
            later.remove(v);
            let followers = self.adj[v].intersection(&later);
            let ok = followers
                .iter()
                .all(|u| followers.difference(&self.adj[u]).iter().all(|w| w == u));
            if !ok {
                return None;
            }
        }
        Some(order)
    }

    pub fn is_chordal(&self) -> bool {
        self.perfect_elimination_order().is_some()
    }
}
