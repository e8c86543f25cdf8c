//! Gluings of several blocks along a tree.
//!
//! Blocks must be connected, pairwise share at most one vertex, have no
//! vertex in common to three of them, and be free at every shared vertex.
//! The intersection graph of the blocks must then be a tree, and the clutter
//! is an iterated two-sided gluing along its edges.

use crate::clutter::Clutter;
use crate::error::{Error, Result};
use crate::limits::Limits;

use super::depth::depth_exact;
use super::recognize::glue;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GluingTree {
    Leaf(Clutter),
    Glue {
        vertex: String,
        left: Box<GluingTree>,
        right: Box<GluingTree>,
    },
}

impl GluingTree {
    /// Leaves from left to right.
    pub fn blocks(&self) -> Vec<&Clutter> {
        match self {
            GluingTree::Leaf(c) => vec![c],
            GluingTree::Glue { left, right, .. } => {
                let mut out = left.blocks();
                out.extend(right.blocks());
                out
            }
        }
    }

    pub fn clutter(&self) -> Clutter {
        match self {
            GluingTree::Leaf(c) => c.clone(),
            GluingTree::Glue { left, right, .. } => left.clutter().union(&right.clutter()),
        }
    }

    pub fn glue_count(&self) -> usize {
        self.blocks().len() - 1
    }

    /// `Σ depth(block) - 2 (r - 1)`, when every block has a known depth.
    pub fn depth(&self, limits: &Limits) -> Result<Option<usize>> {
        let mut total = 0;
        for b in self.blocks() {
            match depth_exact(b, limits)? {
                Some(d) => total += d,
                None => return Ok(None),
            }
        }
        Ok(Some(total - 2 * self.glue_count()))
    }
}

fn shared(a: &Clutter, b: &Clutter) -> Vec<String> {
    a.labels()
        .iter()
        .filter(|l| b.index_of(l).is_some())
        .cloned()
        .collect()
}

/// Validates `blocks` as a tree-shaped gluing of `c` and builds the tree.
///
/// `None` when a structural condition fails; an error when the blocks do not
/// reproduce `c`.
pub fn general_gluing_decomposition(
    c: &Clutter,
    blocks: &[Clutter],
    limits: &Limits,
) -> Result<Option<GluingTree>> {
    let Some(first) = blocks.first() else {
        return Err(Error::BlocksDontCoverEdges("no blocks".into()));
    };
    let union = blocks[1..].iter().fold(first.clone(), |acc, b| acc.union(b));
    if &union != c {
        return Err(Error::BlocksDontCoverEdges(format!("{union:?} differs from {c:?}")));
    }
    if blocks.iter().any(|b| b.vertex_count() == 0 || !b.is_connected()) {
        return Ok(None);
    }
    let r = blocks.len();
    let mut links: Vec<(usize, usize, String)> = Vec::new();
    for i in 0..r {
        for j in i + 1..r {
            match shared(&blocks[i], &blocks[j]).as_slice() {
                [] => {}
                [v] => links.push((i, j, v.clone())),
                _ => return Ok(None),
            }
        }
    }
    for label in c.labels() {
        if blocks.iter().filter(|b| b.index_of(label).is_some()).count() >= 3 {
            return Ok(None);
        }
    }
    // a connected graph on r nodes with r - 1 edges is a tree
    if links.len() + 1 != r || !connected(r, &links) {
        return Ok(None);
    }
    let ids: Vec<usize> = (0..r).collect();
    build(blocks, &ids, &links, limits)
}

fn connected(r: usize, links: &[(usize, usize, String)]) -> bool {
    let mut seen = vec![false; r];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for (a, b, _) in links {
            let w = if *a == u { *b } else if *b == u { *a } else { continue };
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Splits the subtree on `ids` along its first link.
fn build(
    blocks: &[Clutter],
    ids: &[usize],
    links: &[(usize, usize, String)],
    limits: &Limits,
) -> Result<Option<GluingTree>> {
    if let [only] = ids {
        return Ok(Some(GluingTree::Leaf(blocks[*only].clone())));
    }
    let inside: Vec<&(usize, usize, String)> = links
        .iter()
        .filter(|(a, b, _)| ids.contains(a) && ids.contains(b))
        .collect();
    let (a, b, vertex) = inside[0];
    let mut side = vec![*a];
    let mut k = 0;
    while k < side.len() {
        let u = side[k];
        for (x, y, _) in &inside {
            if (*x, *y) == (*a, *b) {
                continue;
            }
            let w = if *x == u { *y } else if *y == u { *x } else { continue };
            if !side.contains(&w) {
                side.push(w);
            }
        }
        k += 1;
    }
    side.sort_unstable();
    let rest: Vec<usize> = ids.iter().copied().filter(|i| !side.contains(i)).collect();
    let (Some(left), Some(right)) = (build(blocks, &side, links, limits)?, build(blocks, &rest, links, limits)?)
    else {
        return Ok(None);
    };
    match glue(&left.clutter(), &right.clutter(), vertex, limits) {
        Ok(_) => Ok(Some(GluingTree::Glue {
            vertex: vertex.clone(),
            left: Box::new(left),
            right: Box::new(right),
        })),
        Err(Error::GlueVertexNotFree(_) | Error::InvalidGluing { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}
