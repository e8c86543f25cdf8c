//! Recognizers for gluings, cones and chordal decompositions, the rule-based
//! Cohen-Macaulay verdict, and exact depth where closed forms apply.

mod depth;
mod gluing_tree;
mod recognize;
mod verdict;

pub use depth::depth_exact;
pub use gluing_tree::{general_gluing_decomposition, GluingTree};
pub use recognize::{
    chordal_clique_case, glue, gluing_split, gluing_splits, graph_cone_apex, graph_cone_apexes,
    ConeApex, GluingSplit,
};
pub use verdict::{
    cm_verdict, cm_verdict_with, Child, Rule, Status, Step, TieBreak, Verdict, VerdictOptions,
};
