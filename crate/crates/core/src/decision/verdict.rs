use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::clutter::Clutter;
use crate::error::Result;
use crate::limits::Limits;
use crate::prime::{dimension, is_unmixed};

use super::depth::depth_exact;
use super::recognize::{chordal_clique_case, gluing_splits, graph_cone_apexes};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    CohenMacaulay,
    NotCohenMacaulay,
    Unknown,
}

impl Status {
    pub fn is_decided(self) -> bool {
        self != Status::Unknown
    }

    /// CM iff every part is; not CM as soon as one part is not.
    fn all_of(parts: impl IntoIterator<Item = Status>) -> Status {
        let mut out = Status::CohenMacaulay;
        for s in parts {
            match s {
                Status::NotCohenMacaulay => return Status::NotCohenMacaulay,
                Status::Unknown => out = Status::Unknown,
                Status::CohenMacaulay => {}
            }
        }
        out
    }
}

/// The reduction rules, in the order they are tried.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Rule {
    #[serde(rename = "R1-components")]
    ComponentReduction,
    #[serde(rename = "R2-complete")]
    Complete,
    #[serde(rename = "R3-gluing")]
    Gluing,
    #[serde(rename = "R4-cone-two-components")]
    ConeTwoComponents,
    #[serde(rename = "R5-cone-many-components")]
    ConeManyComponents,
    #[serde(rename = "R6-chordal-cliques")]
    ChordalCliques,
    #[serde(rename = "R7-unmixed-gate")]
    UnmixedGate,
}

impl Rule {
    pub const ALL: [Rule; 7] = [
        Rule::ComponentReduction,
        Rule::Complete,
        Rule::Gluing,
        Rule::ConeTwoComponents,
        Rule::ConeManyComponents,
        Rule::ChordalCliques,
        Rule::UnmixedGate,
    ];

    /// The result the rule rests on.
    pub fn result_name(self) -> &'static str {
        match self {
            Rule::ComponentReduction => {
                "component reduction (background): Cohen-Macaulay iff every connected component is"
            }
            Rule::Complete => "complete clutters: complete clutters are Cohen-Macaulay",
            Rule::Gluing => "gluing at a free vertex: a gluing at a free vertex is Cohen-Macaulay iff both sides are",
            Rule::ConeTwoComponents => {
                "cone over two components: Cohen-Macaulay iff both base components are"
            }
            Rule::ConeManyComponents => {
                "component bound for unmixed cones: a base with three or more components is never unmixed"
            }
            Rule::ChordalCliques => {
                "chordal clique decomposition: Cohen-Macaulay iff unmixed iff no vertex lies in three maximal cliques"
            }
            Rule::UnmixedGate => "Cohen-Macaulay implies unmixed",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Step {
    pub rule: Rule,
    pub paper_result: &'static str,
    pub outcome: Status,
    pub detail: String,
    pub children: Vec<Child>,
}

/// A sub-clutter the rule recursed into.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Child {
    pub vertices: Vec<String>,
    pub status: Status,
    pub certificate: Vec<Step>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub status: Status,
    pub unmixed: bool,
    pub dim: usize,
    pub depth: Option<usize>,
    pub certificate: Vec<Step>,
}

/// Which gluing vertex or apex to use when several qualify.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum TieBreak {
    #[default]
    LowestLabel,
    Seeded(u64),
}

#[derive(Clone, Debug, Default)]
pub struct VerdictOptions {
    pub limits: Limits,
    pub tie_break: TieBreak,
    /// Rules to skip. Only meant for cross-checking one rule against the others.
    pub disabled: Vec<Rule>,
}

/// Cohen-Macaulay verdict with default options.
pub fn cm_verdict(c: &Clutter, limits: &Limits) -> Result<Verdict> {
    cm_verdict_with(
        c,
        &VerdictOptions {
            limits: *limits,
            ..VerdictOptions::default()
        },
    )
}

pub fn cm_verdict_with(c: &Clutter, opts: &VerdictOptions) -> Result<Verdict> {
    let mut engine = Engine {
        opts,
        rng: match opts.tie_break {
            TieBreak::LowestLabel => None,
            TieBreak::Seeded(s) => Some(ChaCha8Rng::seed_from_u64(s)),
        },
    };
    let (status, certificate) = engine.decide(c)?;
    let unmixed = is_unmixed(c, &opts.limits)?;
    let dim = dimension(c, &opts.limits)?;
    let depth = depth_exact(c, &opts.limits)?;
    Ok(Verdict {
        status,
        unmixed,
        dim,
        depth,
        certificate,
    })
}

struct Engine<'a> {
    opts: &'a VerdictOptions,
    rng: Option<ChaCha8Rng>,
}

impl Engine<'_> {
    fn on(&self, rule: Rule) -> bool {
        !self.opts.disabled.contains(&rule)
    }

    fn pick(&mut self, count: usize) -> usize {
        match &mut self.rng {
            None => 0,
            Some(rng) => *(0..count).collect::<Vec<_>>().choose(rng).unwrap(),
        }
    }

    fn child(&mut self, c: &Clutter) -> Result<Child> {
        let (status, certificate) = self.decide(c)?;
        Ok(Child {
            vertices: c.labels().to_vec(),
            status,
            certificate,
        })
    }

    fn decide(&mut self, c: &Clutter) -> Result<(Status, Vec<Step>)> {
        let limits = self.opts.limits;
        let mut cert = Vec::new();
        let push = |cert: &mut Vec<Step>, rule: Rule, outcome, detail: String, children| {
            cert.push(Step {
                rule,
                paper_result: rule.result_name(),
                outcome,
                detail,
                children,
            });
            outcome
        };

        if self.on(Rule::ComponentReduction) {
            let comps = c.components();
            if comps.len() >= 2 {
                let children = comps.iter().map(|h| self.child(h)).collect::<Result<Vec<_>>>()?;
                let s = Status::all_of(children.iter().map(|ch| ch.status));
                let detail = format!("{} connected components", comps.len());
                if push(&mut cert, Rule::ComponentReduction, s, detail, children).is_decided() {
                    return Ok((s, cert));
                }
            }
        }

        if self.on(Rule::Complete) && c.is_complete() {
            let detail = format!("complete on {} vertices", c.vertex_count());
            let s = push(&mut cert, Rule::Complete, Status::CohenMacaulay, detail, vec![]);
            return Ok((s, cert));
        }

        if self.on(Rule::Gluing) {
            let mut splits = gluing_splits(c, &limits)?;
            if !splits.is_empty() {
                let k = self.pick(splits.len());
                let split = splits.swap_remove(k);
                let children = vec![self.child(&split.left)?, self.child(&split.right)?];
                let s = Status::all_of(children.iter().map(|ch| ch.status));
                let detail = format!("glued at free vertex {}", c.label(split.vertex));
                if push(&mut cert, Rule::Gluing, s, detail, children).is_decided() {
                    return Ok((s, cert));
                }
            }
        }

        let cone_rules = self.on(Rule::ConeTwoComponents) || self.on(Rule::ConeManyComponents);
        if cone_rules {
            let mut apexes = graph_cone_apexes(c);
            if !apexes.is_empty() {
                let k = self.pick(apexes.len());
                let cone = apexes.swap_remove(k);
                let parts = cone.base.components();
                let apex = c.label(cone.apex);
                if parts.len() == 2 && self.on(Rule::ConeTwoComponents) {
                    let children = parts.iter().map(|h| self.child(h)).collect::<Result<Vec<_>>>()?;
                    let s = Status::all_of(children.iter().map(|ch| ch.status));
                    let detail = format!("apex {apex} over two base components");
                    if push(&mut cert, Rule::ConeTwoComponents, s, detail, children).is_decided() {
                        return Ok((s, cert));
                    }
                } else if parts.len() >= 3 && self.on(Rule::ConeManyComponents) {
                    let detail = format!("apex {apex} over {} base components", parts.len());
                    let s = push(&mut cert, Rule::ConeManyComponents, Status::NotCohenMacaulay, detail, vec![]);
                    return Ok((s, cert));
                }
            }
        }

        if self.on(Rule::ChordalCliques) {
            if let Some(cm) = chordal_clique_case(c, &limits)? {
                let (s, detail) = if cm {
                    (Status::CohenMacaulay, "no vertex in three maximal cliques")
                } else {
                    (Status::NotCohenMacaulay, "a vertex lies in three or more maximal cliques")
                };
                push(&mut cert, Rule::ChordalCliques, s, detail.to_string(), vec![]);
                return Ok((s, cert));
            }
        }

        if self.on(Rule::UnmixedGate) {
            let s = if is_unmixed(c, &limits)? {
                push(&mut cert, Rule::UnmixedGate, Status::Unknown, "unmixed; no rule decides".into(), vec![])
            } else {
                push(&mut cert, Rule::UnmixedGate, Status::NotCohenMacaulay, "not unmixed".into(), vec![])
            };
            return Ok((s, cert));
        }

        Ok((Status::Unknown, cert))
    }
}
