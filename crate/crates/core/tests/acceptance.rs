//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.
//!
//! All comparisons are exact: integer heights, dimensions and depths, and
//! set equality on cut sets. Random corpora are seeded, so every run sees the
//! same instances.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use bei_core::clique::maximal_cliques;
use bei_core::decision::{chordal_clique_case, graph_cone_apex};
use bei_core::{
    cm_verdict, cm_verdict_with, cut_sets, depth_exact, dimension, general_gluing_decomposition,
    glue, is_unmixed, minimal_primes, minimal_primes_oracle, read_clutter, write_clutter, Clutter,
    Limits, Rule, Status, Verdict, VerdictOptions,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

// Pinned corpus sizes, bounds and budgets.
const EXHAUSTIVE_GRAPH_VERTICES: usize = 5;
const EXHAUSTIVE_GRAPH_COUNT: usize = 1024;
const RANDOM_CLUTTERS: usize = 500;
const RANDOM_MAX_VERTICES: usize = 8;
const RANDOM_MAX_ARITY: usize = 4;
const GLUINGS: usize = 200;
const GLUING_MAX_VERTICES: usize = 10;
const CONE_BASES: usize = 200;
const CONE_MAX_BASE_VERTICES: usize = 8;
const CHORDAL_INSTANCES: usize = 100;
const CHORDAL_MAX_VERTICES: usize = 10;
const RUNTIME_BUDGET: Duration = Duration::from_secs(60);
/// Every numeric comparison is exact.
const TOLERANCE: usize = 0;

const SEED: u64 = 0x5eed_c1a7;

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn FnOnce() -> Outcome + 'a>);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

#[allow(clippy::absurd_extreme_comparisons)]
fn within(a: usize, b: usize) -> bool {
    a.abs_diff(b) <= TOLERANCE
}

fn timed(started: Instant) -> Result<Duration, String> {
    let t = started.elapsed();
    ensure(t < RUNTIME_BUDGET, || format!("took {t:.1?}, budget {RUNTIME_BUDGET:?}"))?;
    Ok(t)
}

fn limits() -> Limits {
    Limits::default()
}

fn show(c: &Clutter) -> String {
    write_clutter(c).trim_end().to_string()
}

// ---------------------------------------------------------------- corpora

/// Every graph on the exhaustive vertex count, as a 2-uniform clutter.
fn all_small_graphs() -> Vec<Clutter> {
    let n = EXHAUSTIVE_GRAPH_VERTICES;
    let slots: Vec<(usize, usize)> = (1..=n).flat_map(|a| (a + 1..=n).map(move |b| (a, b))).collect();
    (0..1u32 << slots.len())
        .map(|m| {
            let edges = slots
                .iter()
                .enumerate()
                .filter(|(k, _)| m >> k & 1 == 1)
                .map(|(_, &(a, b))| vec![a.to_string(), b.to_string()]);
            Clutter::new((1..=n).map(|i| i.to_string()), edges, false).unwrap()
        })
        .collect()
}

fn random_corpus() -> Vec<Clutter> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    (0..RANDOM_CLUTTERS)
        .map(|_| common::random_small(&mut rng, RANDOM_MAX_VERTICES, RANDOM_MAX_ARITY))
        .collect()
}

struct Gluing {
    left: Clutter,
    right: Clutter,
    at: String,
    whole: Clutter,
}

/// Puts a random free vertex of `c` at label `at` and the other vertices at
/// `others`, in random order.
fn place(rng: &mut ChaCha8Rng, c: &Clutter, at: usize, others: &[usize]) -> Option<Clutter> {
    let facets = common::max_cliques(c);
    let free: Vec<usize> = (0..c.vertex_count()).filter(|&v| common::facet_count(&facets, v) == 1).collect();
    let &v = free.choose(rng)?;
    let mut rest: Vec<usize> = others.to_vec();
    rest.shuffle(rng);
    let mut map = BTreeMap::new();
    map.insert(c.label(v).to_string(), at.to_string());
    let mut k = 0;
    for u in 0..c.vertex_count() {
        if u != v {
            map.insert(c.label(u).to_string(), rest[k].to_string());
            k += 1;
        }
    }
    Some(common::relabel(c, |l| map[l].clone()))
}

fn random_gluings() -> Vec<Gluing> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 0x61);
    let mut out = Vec::new();
    while out.len() < GLUINGS {
        let n1 = rng.gen_range(2..=6);
        let n2 = rng.gen_range(2..=(GLUING_MAX_VERTICES + 1 - n1).min(6));
        let a = common::random_connected(&mut rng, n1, RANDOM_MAX_ARITY);
        let b = common::random_connected(&mut rng, n2, RANDOM_MAX_ARITY);
        let left_others: Vec<usize> = (1..n1).collect();
        let right_others: Vec<usize> = (n1 + 1..n1 + n2).collect();
        let (Some(left), Some(right)) = (place(&mut rng, &a, n1, &left_others), place(&mut rng, &b, n1, &right_others))
        else {
            continue;
        };
        let at = n1.to_string();
        let whole = glue(&left, &right, &at, &limits()).expect("placed at free vertices");
        out.push(Gluing { left, right, at, whole });
    }
    out
}

struct Cone {
    parts: Vec<Clutter>,
    base: Clutter,
    apex: String,
    whole: Clutter,
}

fn cone_over(parts: Vec<Clutter>) -> Cone {
    let base = parts[1..].iter().fold(parts[0].clone(), |acc, p| acc.disjoint_union(p).unwrap());
    let apex = (base.vertex_count() + 1).to_string();
    let whole = base.cone(&apex).unwrap();
    Cone { parts, base, apex, whole }
}

/// Cones over bases with exactly `pieces` connected components.
fn random_cones(pieces: usize, salt: u64) -> Vec<Cone> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ salt);
    (0..CONE_BASES)
        .map(|_| {
            let total = rng.gen_range(pieces..=CONE_MAX_BASE_VERTICES);
            let mut sizes = vec![1; pieces];
            for _ in pieces..total {
                *sizes.choose_mut(&mut rng).unwrap() += 1;
            }
            let mut offset = 0;
            let parts = sizes
                .iter()
                .map(|&s| {
                    let p = common::shifted(&common::random_connected(&mut rng, s, RANDOM_MAX_ARITY), offset);
                    offset += s;
                    p
                })
                .collect();
            cone_over(parts)
        })
        .collect()
}

/// A connected tree of complete blocks: each new block meets exactly one
/// earlier block, at a vertex that lies in only one block so far.
fn complete_block_tree(rng: &mut ChaCha8Rng, first: usize, max_vertices: usize) -> Vec<Clutter> {
    let label = |v: usize| v.to_string();
    let mut next = first;
    let size = rng.gen_range(1..=max_vertices.min(4));
    let mut blocks: Vec<Vec<usize>> = vec![(next..next + size).collect()];
    next += size;
    let mut used = size;
    let mut loose: Vec<usize> = blocks[0].clone();
    while used < max_vertices && blocks[0].len() > 1 && rng.gen_bool(0.7) {
        let fresh = rng.gen_range(1..=(max_vertices - used).min(3));
        let k = rng.gen_range(0..loose.len());
        let at = loose.swap_remove(k);
        let b: Vec<usize> = std::iter::once(at).chain(next..next + fresh).collect();
        loose.extend(next..next + fresh);
        next += fresh;
        used += fresh;
        blocks.push(b);
    }
    blocks
        .iter()
        .map(|b| common::complete(&b.iter().map(|&v| label(v)).collect::<Vec<_>>()))
        .collect()
}

fn block_tree_depth(blocks: &[Clutter]) -> usize {
    blocks.iter().map(|b| b.vertex_count() + 1).sum::<usize>() - 2 * (blocks.len() - 1)
}

// ------------------------------------------------------------- criteria

fn prime_sets_from_library(c: &Clutter) -> Result<BTreeSet<(u64, usize)>, String> {
    Ok(minimal_primes(c, &limits())
        .map_err(|e| e.to_string())?
        .iter()
        .map(|p| (common::mask(&p.removed), p.height))
        .collect())
}

fn criterion_oracle(corpus: &[Clutter]) -> Outcome {
    let started = Instant::now();
    for c in corpus {
        let criterion = prime_sets_from_library(c)?;
        let oracle: BTreeSet<(u64, usize)> = minimal_primes_oracle(c, &limits())
            .map_err(|e| e.to_string())?
            .iter()
            .map(|p| (common::mask(&p.removed), p.height))
            .collect();
        let n = c.vertex_count();
        let brute: BTreeSet<(u64, usize)> = common::cut_sets(c)
            .into_iter()
            .map(|(t, k)| (t, common::height(n, t, k)))
            .collect();
        ensure(criterion == oracle, || format!("criterion vs oracle differ on {}", show(c)))?;
        ensure(criterion == brute, || format!("criterion vs brute force differ on {}", show(c)))?;
    }
    let t = timed(started)?;
    Ok(format!("{} instances agree exactly ({t:.1?})", corpus.len()))
}

fn criterion_unmixed(corpus: &[Clutter]) -> Outcome {
    let mut unmixed = 0;
    for c in corpus {
        let n = c.vertex_count();
        let heights: BTreeSet<usize> = prime_sets_from_library(c)?.into_iter().map(|(_, h)| h).collect();
        let equal_heights = heights.len() == 1;
        let kappa = common::components(n, &common::pairs(c), 0);
        let records = cut_sets(c, &limits()).map_err(|e| e.to_string())?;
        let counting = records.iter().all(|r| r.components == r.set.len() + kappa);
        let reduced = is_unmixed(c, &limits()).map_err(|e| e.to_string())?;
        ensure(equal_heights == counting && counting == reduced, || {
            format!("heights {equal_heights}, counts {counting}, per component {reduced} on {}", show(c))
        })?;
        if kappa == 1 {
            let literal = records.iter().all(|r| r.components == r.set.len() + 1);
            ensure(literal == reduced, || format!("connected form disagrees on {}", show(c)))?;
        }
        unmixed += usize::from(reduced);
    }
    Ok(format!("{} instances, {unmixed} unmixed, all three forms agree", corpus.len()))
}

type HeightMap = BTreeMap<u64, usize>;

fn heights_of(c: &Clutter) -> Result<HeightMap, String> {
    Ok(cut_sets(c, &limits())
        .map_err(|e| e.to_string())?
        .into_iter()
        .map(|r| (common::mask(&r.set), r.height))
        .collect())
}

/// Cut sets of `part` in the id space of `whole`, with heights.
fn moved(part: &Clutter, whole: &Clutter) -> Result<Vec<(u64, usize)>, String> {
    cut_sets(part, &limits())
        .map_err(|e| e.to_string())?
        .into_iter()
        .map(|r| Ok((common::mask(&part.transfer(&r.set, whole).map_err(|e| e.to_string())?), r.height)))
        .collect()
}

fn criterion_gluing(gluings: &[Gluing]) -> Outcome {
    let started = Instant::now();
    let mut listed = 0;
    for g in gluings {
        let c = &g.whole;
        ensure(c.vertex_count() <= GLUING_MAX_VERTICES, || format!("too large: {}", show(c)))?;
        let v = c.vertex(&g.at).unwrap();
        let facet_of = |side: &Clutter| {
            let local = side.vertex(&g.at).unwrap();
            let f = common::max_cliques(side).into_iter().find(|f| f >> local & 1 == 1).unwrap();
            common::mask(&side.transfer(&bei_core::VertexSet::from_mask(f), c).unwrap())
        };
        let (f1, f2) = (facet_of(&g.left), facet_of(&g.right));
        let (s1, s2) = (moved(&g.left, c)?, moved(&g.right, c)?);
        let mut expected = HeightMap::new();
        for &(t1, h1) in &s1 {
            for &(t2, h2) in &s2 {
                expected.insert(t1 | t2, h1 + h2);
                let with_v = t1 | t2 | 1 << v;
                if f1 & !(t1 | 1 << v) != 0 && f2 & !(t2 | 1 << v) != 0 {
                    expected.insert(with_v, h1 + h2);
                }
            }
        }
        let actual = heights_of(c)?;
        let same_sets = actual.keys().eq(expected.keys());
        ensure(same_sets, || format!("cut sets differ from the reconstruction on {}", show(c)))?;
        for (t, h) in &actual {
            ensure(within(*h, expected[t]), || format!("height of {t:#b} not additive on {}", show(c)))?;
        }
        listed += actual.len();
        let both = is_unmixed(&g.left, &limits()).unwrap() && is_unmixed(&g.right, &limits()).unwrap();
        ensure(is_unmixed(c, &limits()).unwrap() == both, || format!("unmixedness transfer fails on {}", show(c)))?;
    }
    let t = timed(started)?;
    Ok(format!("{} gluings, {listed} cut sets reconstructed with additive heights ({t:.1?})", gluings.len()))
}

fn criterion_cone(connected: &[Cone], two: &[Cone], many: &[Cone]) -> Outcome {
    let started = Instant::now();
    let lim = limits();
    for k in connected {
        let c = &k.whole;
        let v = c.vertex(&k.apex).unwrap();
        let mut expected = HeightMap::new();
        expected.insert(0, c.vertex_count() - 1);
        for (t, h) in moved(&k.base, c)? {
            if t != 0 {
                expected.insert(t | 1 << v, h + 2);
            }
        }
        let actual = heights_of(c)?;
        ensure(actual == expected, || format!("connected-base cone law fails on {}", show(c)))?;
        let want = (c.vertex_count() + 1).max(dimension(&k.base, &lim).unwrap());
        ensure(within(dimension(c, &lim).unwrap(), want), || format!("cone dimension differs on {}", show(c)))?;
    }
    for k in two {
        let c = &k.whole;
        let v = c.vertex(&k.apex).unwrap();
        let mut expected = HeightMap::new();
        expected.insert(0, c.vertex_count() - 1);
        let (s1, s2) = (moved(&k.parts[0], c)?, moved(&k.parts[1], c)?);
        for &(t1, h1) in &s1 {
            for &(t2, h2) in &s2 {
                expected.insert(t1 | t2 | 1 << v, h1 + h2 + 2);
            }
        }
        let actual = heights_of(c)?;
        ensure(actual == expected, || format!("two-component cone law fails on {}", show(c)))?;
        let d1 = dimension(&k.parts[0], &lim).unwrap();
        let d2 = dimension(&k.parts[1], &lim).unwrap();
        let want = (d1 + d2).max(c.vertex_count() + 1);
        ensure(within(dimension(c, &lim).unwrap(), want), || format!("two-component dimension differs on {}", show(c)))?;
        let both = is_unmixed(&k.parts[0], &lim).unwrap() && is_unmixed(&k.parts[1], &lim).unwrap();
        ensure(is_unmixed(c, &lim).unwrap() == both, || format!("cone unmixedness transfer fails on {}", show(c)))?;
    }
    for k in many {
        ensure(!is_unmixed(&k.whole, &lim).unwrap(), || format!("cone over {} pieces is unmixed: {}", k.parts.len(), show(&k.whole)))?;
    }
    let t = timed(started)?;
    Ok(format!(
        "{} connected, {} two-component, {} many-component bases ({t:.1?})",
        connected.len(),
        two.len(),
        many.len()
    ))
}

fn without(rules: &[Rule]) -> VerdictOptions {
    VerdictOptions { disabled: rules.to_vec(), ..VerdictOptions::default() }
}

fn verdict(c: &Clutter, opts: &VerdictOptions) -> Result<Verdict, String> {
    cm_verdict_with(c, opts).map_err(|e| e.to_string())
}

/// `whole` is CM iff every part is, whenever all verdicts are decided.
fn combine_check(whole: &Clutter, parts: &[&Clutter], skip: &[Rule]) -> Result<usize, String> {
    let sides: Vec<Status> = parts
        .iter()
        .map(|p| verdict(p, &VerdictOptions::default()).map(|v| v.status))
        .collect::<Result<_, _>>()?;
    if sides.iter().any(|s| !s.is_decided()) {
        return Ok(0);
    }
    let all_cm = sides.iter().all(|&s| s == Status::CohenMacaulay);
    let mut decided = 0;
    for opts in [VerdictOptions::default(), without(skip)] {
        let w = verdict(whole, &opts)?.status;
        if w.is_decided() {
            ensure((w == Status::CohenMacaulay) == all_cm, || {
                format!("{w:?} but parts {sides:?} on {} (disabled {:?})", show(whole), opts.disabled)
            })?;
            decided += 1;
        }
    }
    Ok(decided)
}

fn criterion_cm(two: &[Cone], gluings: &[Gluing], chordal: &[(Clutter, Vec<Vec<usize>>)]) -> Outcome {
    let mut cone_checks = 0;
    for k in two {
        cone_checks += combine_check(&k.whole, &[&k.parts[0], &k.parts[1]], &[Rule::Gluing, Rule::ConeTwoComponents])?;
    }
    let mut glue_checks = 0;
    for g in gluings {
        glue_checks += combine_check(&g.whole, &[&g.left, &g.right], &[Rule::Gluing])?;
    }
    ensure(cone_checks > 0 && glue_checks > 0, || "no decided instances".into())?;

    let mut cm_count = 0;
    for (c, _) in chordal {
        ensure(c.vertex_count() <= CHORDAL_MAX_VERTICES, || format!("too large: {}", show(c)))?;
        let facets = common::max_cliques(c);
        for (i, a) in facets.iter().enumerate() {
            for b in &facets[i + 1..] {
                ensure((a & b).count_ones() <= 1, || format!("facets overlap in {}", show(c)))?;
            }
        }
        let triple = (0..c.vertex_count()).any(|v| common::facet_count(&facets, v) >= 3);
        let unmixed = is_unmixed(c, &limits()).unwrap();
        let v = verdict(c, &without(&[Rule::ChordalCliques]))?;
        ensure(v.status.is_decided(), || format!("undecided without the chordal rule: {}", show(c)))?;
        let cm = v.status == Status::CohenMacaulay;
        ensure(cm == unmixed && unmixed == !triple, || {
            format!("CM {cm}, unmixed {unmixed}, triple {triple} on {}", show(c))
        })?;
        let shortcut = chordal_clique_case(c, &limits()).unwrap();
        ensure(shortcut == Some(!triple), || format!("chordal recognizer says {shortcut:?} on {}", show(c)))?;
        cm_count += usize::from(cm);
    }
    Ok(format!(
        "cones {cone_checks} and gluings {glue_checks} decided checks consistent; {} chordal instances ({cm_count} CM) agree three ways",
        chordal.len()
    ))
}

fn criterion_soundness(corpus: &[Clutter]) -> Outcome {
    let mut checked = 0;
    let mut cm = 0;
    for c in corpus {
        let v = cm_verdict(c, &limits()).map_err(|e| e.to_string())?;
        ensure(!v.certificate.is_empty(), || format!("empty certificate on {}", show(c)))?;
        if v.status == Status::CohenMacaulay {
            ensure(v.unmixed, || format!("CM but mixed on {}", show(c)))?;
            cm += 1;
            if let Some(d) = v.depth {
                ensure(within(d, v.dim), || format!("CM with depth {d} != dim {} on {}", v.dim, show(c)))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{} verdicts, {cm} CM, {checked} with depth = dim", corpus.len()))
}

fn criterion_depth(everything: &[Clutter]) -> Outcome {
    let closure = criterion_soundness(everything)?;
    let lim = limits();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 0xd3);
    let mut trees = 0;
    while trees < CONE_BASES {
        let blocks = complete_block_tree(&mut rng, 1, GLUING_MAX_VERTICES);
        let whole = blocks[1..].iter().fold(blocks[0].clone(), |a, b| a.union(b));
        let tree = general_gluing_decomposition(&whole, &blocks, &lim)
            .map_err(|e| e.to_string())?
            .ok_or_else(|| format!("tree of blocks rejected: {}", show(&whole)))?;
        let want = block_tree_depth(&blocks);
        let got = tree.depth(&lim).unwrap();
        ensure(got == Some(want), || format!("tree depth {got:?} != {want} on {}", show(&whole)))?;
        let direct = depth_exact(&whole, &lim).unwrap();
        ensure(direct == Some(want), || format!("depth {direct:?} != {want} on {}", show(&whole)))?;
        trees += 1;
    }
    let mut cones = 0;
    while cones < CONE_BASES {
        let pieces = rng.gen_range(2..=4);
        let mut parts = Vec::new();
        let mut first = 1;
        let mut base_depth = 0;
        for _ in 0..pieces {
            let room = CONE_MAX_BASE_VERTICES + 1 - first;
            if room == 0 {
                break;
            }
            let blocks = complete_block_tree(&mut rng, first, room.min(4));
            let part = blocks[1..].iter().fold(blocks[0].clone(), |a, b| a.union(b));
            base_depth += block_tree_depth(&blocks);
            first += part.vertex_count();
            parts.push(part);
        }
        if parts.len() < 2 {
            continue;
        }
        let k = cone_over(parts);
        let m = k.base.vertex_count();
        let want = base_depth.min(m + 2);
        let got = depth_exact(&k.whole, &lim).unwrap();
        ensure(got == Some(want), || format!("cone depth {got:?} != min({base_depth}, {}) on {}", m + 2, show(&k.whole)))?;
        cones += 1;
    }
    Ok(format!("{closure}; {trees} block trees and {cones} disconnected-base cones match closed forms"))
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

fn criterion_examples() -> Outcome {
    let lim = limits();
    let text = golden("six_vertex_clutter.json");
    let d = read_clutter(&text).map_err(|e| e.to_string())?;
    ensure(write_clutter(&d) == text, || "six-vertex clutter does not round-trip".into())?;
    let facets: Vec<String> = maximal_cliques(&d, &lim).unwrap().iter().map(|f| d.fmt_set(&f.members)).collect();
    let want: Vec<String> = golden("six_vertex_facets.txt").lines().map(String::from).collect();
    ensure(facets == want, || format!("facets {facets:?}"))?;
    ensure(facets.contains(&"{1,2,4,6}".to_string()), || "maximal clique {1,2,4,6} missing".into())?;

    let c = d.cone("7").unwrap();
    ensure(write_clutter(&c) == golden("cone_at_7.json"), || format!("cone edges {}", show(&c)))?;
    let listed = Clutter::new(
        (1..=7).map(|i| i.to_string()),
        [
            vec!["1", "7"], vec!["2", "7"], vec!["3", "7"], vec!["4", "7"], vec!["5", "7"], vec!["6", "7"],
            vec!["1", "2", "4"], vec!["2", "4", "6"], vec!["4", "5"], vec!["1", "3", "6"],
        ],
        false,
    )
    .unwrap();
    ensure(c == listed, || "cone differs from the listed edge set".into())?;

    let d_prime = Clutter::new(
        (1..=6).map(|i| i.to_string()),
        [["1", "2"], ["2", "4"], ["1", "4"], ["2", "6"], ["4", "6"], ["4", "5"], ["1", "3"], ["3", "6"], ["1", "6"]],
        false,
    )
    .unwrap();
    let d_prime_pairs: Vec<(usize, usize)> = d_prime.edges().iter().map(|e| (e.to_vec()[0], e.to_vec()[1])).collect();
    ensure(common::pairs(&d_prime) == d_prime_pairs, || "the primed clutter is not its own graph".into())?;
    ensure(common::pairs(&d_prime) == common::pairs(&d), || "graphs of the two bases differ".into())?;
    let other = d_prime.cone("7").unwrap();
    ensure(other != c, || "cone over the primed base equals the cone".into())?;
    ensure(common::pairs(&other) == common::pairs(&c), || "cone graphs differ".into())?;
    let apex = graph_cone_apex(&c).ok_or("no apex detected")?;
    ensure(c.label(apex.apex) == "7" && apex.literal && apex.base == d, || "apex 7 not detected on the cone".into())?;
    Ok("six-vertex facets, cone edge list and graph-level apex all match".into())
}

fn main() -> ExitCode {
    let started = Instant::now();
    let mut corpus = all_small_graphs();
    assert_eq!(corpus.len(), EXHAUSTIVE_GRAPH_COUNT);
    corpus.extend(random_corpus());
    let gluings = random_gluings();
    let connected = random_cones(1, 0xc1);
    let two = random_cones(2, 0xc2);
    let many: Vec<Cone> = random_cones(3, 0xc3).into_iter().chain(random_cones(4, 0xc4)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 0xcc);
    let chordal: Vec<(Clutter, Vec<Vec<usize>>)> =
        (0..CHORDAL_INSTANCES).map(|_| common::random_block_clutter(&mut rng, CHORDAL_MAX_VERTICES)).collect();

    let mut everything = corpus.clone();
    everything.extend(gluings.iter().map(|g| g.whole.clone()));
    everything.extend(connected.iter().chain(&two).chain(&many).map(|k| k.whole.clone()));
    everything.extend(chordal.iter().map(|(c, _)| c.clone()));

    let criteria: Vec<Criterion> = vec![
        ("1 oracle equivalence", Box::new(|| criterion_oracle(&corpus))),
        ("2 unmixedness triple agreement", Box::new(|| criterion_unmixed(&corpus))),
        ("3 gluing laws", Box::new(|| criterion_gluing(&gluings))),
        ("4 cone laws", Box::new(|| criterion_cone(&connected, &two, &many))),
        ("5 verdict consistency", Box::new(|| criterion_cm(&two, &gluings, &chordal))),
        ("6 depth closure", Box::new(|| criterion_depth(&everything))),
        ("7 worked examples", Box::new(criterion_examples)),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(summary) => println!("PASS  criterion {name}: {summary}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {name}: {why}");
            }
        }
    }
    println!("acceptance: {} of 7 criteria passed in {:.1?}", 7 - failed, started.elapsed());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
