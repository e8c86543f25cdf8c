//! Exact depth where the closed-form rules reach every block.
//!
//! - complete clutter on `m >= 1` vertices: `m + 1` (the empty clutter: 0)
//! - disjoint union: sum of the component depths
//! - gluing at a free vertex: `depth(left) + depth(right) - 2`
//! - cone over a disconnected base on `m` vertices: `min(depth(base), m + 2)`

use crate::clutter::Clutter;
use crate::error::Result;
use crate::limits::Limits;

use super::recognize::{gluing_split, graph_cone_apex};

/// `depth S/J`, or `None` if some block falls outside the rules above.
pub fn depth_exact(c: &Clutter, limits: &Limits) -> Result<Option<usize>> {
    let comps = c.components();
    if comps.len() >= 2 {
        return sum_of(&comps, limits);
    }
    if c.is_complete() {
        let n = c.vertex_count();
        return Ok(Some(if n == 0 { 0 } else { n + 1 }));
    }
    if let Some(split) = gluing_split(c, limits)? {
        let l = depth_exact(&split.left, limits)?;
        let r = depth_exact(&split.right, limits)?;
        return Ok(l.zip(r).map(|(l, r)| l + r - 2));
    }
    if let Some(cone) = graph_cone_apex(c) {
        let parts = cone.base.components();
        if parts.len() >= 2 {
            let m = cone.base.vertex_count();
            return Ok(sum_of(&parts, limits)?.map(|d| d.min(m + 2)));
        }
    }
    Ok(None)
}

fn sum_of(parts: &[Clutter], limits: &Limits) -> Result<Option<usize>> {
    let mut total = 0;
    for p in parts {
        match depth_exact(p, limits)? {
            Some(d) => total += d,
            None => return Ok(None),
        }
    }
    Ok(Some(total))
}
