//! Ordering of external vertex labels.

use std::cmp::Ordering;

/// Natural label order: labels that parse as unsigned integers sort
/// numerically and before all other labels, which sort as strings.
///
/// With this order `"2" < "10"`, so integer-labelled clutters keep their
/// familiar vertex order.
pub fn label_cmp(a: &str, b: &str) -> Ordering {
    match (a.parse::<u128>(), b.parse::<u128>()) {
        (Ok(x), Ok(y)) => x.cmp(&y).then_with(|| a.cmp(b)),
        (Ok(_), Err(_)) => Ordering::Less,
        (Err(_), Ok(_)) => Ordering::Greater,
        (Err(_), Err(_)) => a.cmp(b),
    }
}

pub(crate) fn sort_labels(labels: &mut [String]) {
    labels.sort_by(|a, b| label_cmp(a, b));
}
