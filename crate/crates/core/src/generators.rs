//! Corpus sources: whiskered graphs, labeled enumeration at small `n`, seeded
//! random very well-covered graphs, poset-derived bipartite graphs, and
//! arbitrary random graphs.
//!
//! Generated graphs on pairs use the labels `x1..xn, y1..yn`, in that vertex
//! order, with the pair labeling `(x_i, y_i)`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::classify::{check_unmixed_conditions, Violation, VwcLabeling};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest `n` accepted by the exhaustive enumeration.
pub const MAX_EXHAUSTIVE_PAIRS: usize = 4;

/// Random draws attempted before `random_vwc` gives up.
pub const MAX_RETRIES: usize = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exhaustive,
    Random,
    Whisker,
    Poset,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GeneratorConfig {
    pub n: usize,
    pub seed: u64,
    /// Probability of each optional edge before repair.
    pub density: f64,
    pub mode: Mode,
}

impl GeneratorConfig {
    pub fn random(n: usize, seed: u64, density: f64) -> Self {
        GeneratorConfig { n, seed, density, mode: Mode::Random }
    }

    pub fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.density) {
            return Err(Error::Generator(format!("density {} outside [0, 1]", self.density)));
        }
        if self.mode == Mode::Exhaustive && self.n > MAX_EXHAUSTIVE_PAIRS {
            return Err(Error::Generator(format!(
                "exhaustive enumeration needs n <= {MAX_EXHAUSTIVE_PAIRS}, got {}",
                self.n
            )));
        }
        Ok(())
    }
}

/// Adds a pendant `y_<label>` to every vertex.
pub fn whisker(g: &Graph) -> Result<Graph> {
    let mut h = g.clone();
    for v in 0..g.vertex_count() {
        let name = format!("y_{}", g.label(v));
        if g.index_of(&name).is_some() {
            return Err(Error::Generator(format!("pendant label `{name}` collides with an existing vertex")));
        }
        let p = h.add_vertex(name)?;
        h.add_edge(v, p)?;
    }
    Ok(h)
}

/// The matching graph `n·K2` on `x1..xn, y1..yn`.
pub fn matching_graph(n: usize) -> Result<Graph> {
    let labels = (1..=n).map(|i| format!("x{i}")).chain((1..=n).map(|i| format!("y{i}")));
    let mut g = Graph::new(labels)?;
    for i in 0..n {
        g.add_edge(i, n + i)?;
    }
    Ok(g)
}

/// The standard labeling `(x_i, y_i)` of a graph built on `matching_graph(n)`.
pub fn pair_labeling(g: &Graph) -> Result<VwcLabeling> {
    let n = g.vertex_count() / 2;
    VwcLabeling::new(g, (0..n).map(|i| (i, n + i)).collect())
}

/// Optional edge slots: `x_i x_j` for `i < j`, then `x_i y_j` for `i ≠ j`.
fn optional_slots(n: usize) -> Vec<(usize, usize)> {
    let mut slots = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            slots.push((i, j));
        }
    }
    for i in 0..n {
        for j in 0..n {
            if i != j {
                slots.push((i, n + j));
            }
        }
    }
    slots
}

fn check_exhaustive(n: usize) -> Result<()> {
    if n > MAX_EXHAUSTIVE_PAIRS {
        return Err(Error::Generator(format!("exhaustive enumeration needs n <= {MAX_EXHAUSTIVE_PAIRS}, got {n}")));
    }
    Ok(())
}

/// Every graph containing the matching `x_i y_i` plus any subset of the
/// optional slots, in increasing subset-mask order. No filter applied.
pub fn enumerate_candidates(n: usize) -> Result<impl Iterator<Item = Graph>> {
    check_exhaustive(n)?;
    let base = matching_graph(n)?;
    let slots = optional_slots(n);
    Ok((0u64..1 << slots.len()).map(move |mask| {
        let mut g = base.clone();
        for (b, &(u, v)) in slots.iter().enumerate() {
            if mask >> b & 1 == 1 {
                g.add_edge(u, v).expect("slots are distinct non-matching pairs");
            }
        }
        g
    }))
}

/// The candidates satisfying conditions (i) and (ii) for `(x_i, y_i)`.
/// Labeled: isomorphic graphs appear once per labeling.
pub fn enumerate_vwc(n: usize) -> Result<impl Iterator<Item = Graph>> {
    Ok(enumerate_candidates(n)?.filter(|g| {
        let lab = pair_labeling(g).expect("candidates carry the pair labeling");
        check_unmixed_conditions(g, &lab).expect("labeling is valid").is_empty()
    }))
}

/// Seeded random very well-covered graph: optional edges drawn with
/// probability `density`, condition (i) repaired by adding the missing
/// edges to a fixpoint, draws violating (ii) rejected.
pub fn random_vwc(cfg: &GeneratorConfig) -> Result<Graph> {
    cfg.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let slots = optional_slots(cfg.n);
    for _ in 0..MAX_RETRIES {
        let mut g = matching_graph(cfg.n)?;
        for &(u, v) in &slots {
            if rng.gen_bool(cfg.density) {
                g.add_edge(u, v)?;
            }
        }
        if let Some(g) = repair(g)? {
            return Ok(g);
        }
    }
    Err(Error::Generator(format!(
        "no graph satisfying (ii) after {MAX_RETRIES} draws (n = {}, seed = {}, density = {})",
        cfg.n, cfg.seed, cfg.density
    )))
}

fn repair(mut g: Graph) -> Result<Option<Graph>> {
    let lab = pair_labeling(&g)?;
    loop {
        let violations = check_unmixed_conditions(&g, &lab)?;
        if violations.is_empty() {
            return Ok(Some(g));
        }
        let mut added = false;
        for v in &violations {
            if let Violation::ConditionI { missing: (a, b), .. } = *v {
                if !g.has_edge(a, b) {
                    g.add_edge(a, b)?;
                    added = true;
                }
            }
        }
        if !added {
            return Ok(None);
        }
    }
}

/// Bipartite graph on `x1..xn, y1..yn` with `x_i y_j` whenever `i = j` or
/// `i < j` in the order. `relation` lists the strict relations `(i, j)`,
/// meaning `i < j`, with 1-based indices.
pub fn bipartite_from_poset(n: usize, relation: &[(usize, usize)]) -> Result<Graph> {
    let mut less = vec![vec![false; n]; n];
    for &(i, j) in relation {
        if i == 0 || j == 0 || i > n || j > n {
            return Err(Error::NotPartialOrder(format!("({i}, {j}) outside 1..={n}")));
        }
        if i == j {
            return Err(Error::NotPartialOrder(format!("{i} < {i} is reflexive")));
        }
        less[i - 1][j - 1] = true;
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if less[i][j] && less[j][k] && !less[i][k] {
                    return Err(Error::NotPartialOrder(format!(
                        "{} < {} < {} but not {} < {}",
                        i + 1,
                        j + 1,
                        k + 1,
                        i + 1,
                        k + 1
                    )));
                }
            }
        }
    }
    let mut g = matching_graph(n)?;
    for (i, row) in less.iter().enumerate() {
        for (j, &lt) in row.iter().enumerate() {
            if lt {
                g.add_edge(i, n + j)?;
            }
        }
    }
    Ok(g)
}

/// Erdős–Rényi graph on `v1..vN`.
pub fn random_graph(vertices: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Generator(format!("edge probability {p} outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new((1..=vertices).map(|i| format!("v{i}")))?;
    for u in 0..vertices {
        for v in u + 1..vertices {
            if rng.gen_bool(p) {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

/// The standard very well-covered corpus: every labeled graph for
/// `n ∈ {1, 2}`, followed by `count` random graphs with `1 ≤ n ≤ max_n`
/// whose pair count, density and sub-seed are drawn from `seed`.
pub fn vwc_corpus(max_n: usize, count: usize, seed: u64) -> Result<Vec<Graph>> {
    let mut out: Vec<Graph> = Vec::new();
    for n in 1..=2.min(max_n) {
        out.extend(enumerate_vwc(n)?);
    }
    out.extend(random_vwc_batch(max_n, count, seed)?);
    Ok(out)
}

/// Upper end of the batch density range for `n` pairs. Dense draws almost
/// always violate (ii) once `n` grows, so the range shrinks like `1/n`.
fn max_density(n: usize) -> f64 {
    (1.5 / n as f64).min(1.0)
}

/// `count` random very well-covered graphs, `1 ≤ n ≤ max_n`.
pub fn random_vwc_batch(max_n: usize, count: usize, seed: u64) -> Result<Vec<Graph>> {
    if max_n == 0 {
        return Err(Error::Generator("need at least one pair".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_n);
            let density = rng.gen_range(0.0..=max_density(n));
            random_vwc(&GeneratorConfig::random(n, rng.gen(), density))
        })
        .collect()
}

/// `count` arbitrary random graphs on `1..=max_vertices` vertices.
pub fn random_graph_batch(max_vertices: usize, count: usize, seed: u64) -> Result<Vec<Graph>> {
    if max_vertices == 0 {
        return Err(Error::Generator("need at least one vertex".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let v = rng.gen_range(1..=max_vertices);
            let p = rng.gen_range(0.0..=1.0);
            random_graph(v, p, rng.gen())
        })
        .collect()
}
