//! Very well-covered classification: the `(∗)` labeling, the unmixedness
//! conditions (i) and (ii), the `(∗∗)` relabeling, and the resulting
//! Cohen–Macaulay status.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{is_well_covered, Graph};
use crate::reduction::{build_semidigraph, strong_components};
use crate::vertex_set::VertexSet;

/// Pairs `(x_i, y_i)` of vertex indices such that the `x_i y_i` form a perfect
/// matching, `Y = {y_i}` is a maximal independent set and `X = {x_i}` the
/// complementary minimal vertex cover.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VwcLabeling {
    pairs: Vec<(usize, usize)>,
}

impl VwcLabeling {
    pub fn new(g: &Graph, pairs: Vec<(usize, usize)>) -> Result<Self> {
        let lab = VwcLabeling { pairs };
        lab.validate(g)?;
        Ok(lab)
    }

    pub fn from_labels(g: &Graph, pairs: &[(&str, &str)]) -> Result<Self> {
        let pairs = pairs
            .iter()
            .map(|&(x, y)| Ok((g.require(x)?, g.require(y)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(g, pairs)
    }

    /// Checks the labeling against `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidLabeling(m));
        let mut seen = VertexSet::EMPTY;
        for &(x, y) in &self.pairs {
            if x >= g.vertex_count() || y >= g.vertex_count() {
                return bad(format!("vertex index out of range in pair ({x}, {y})"));
            }
            if seen.contains(x) || seen.contains(y) || x == y {
                return bad(format!("vertex repeated in pair ({}, {})", g.label(x), g.label(y)));
            }
            seen.insert(x);
            seen.insert(y);
            if !g.has_edge(x, y) {
                return bad(format!("{}{} is not an edge", g.label(x), g.label(y)));
            }
        }
        if seen != g.vertices() {
            return bad("pairs do not cover every vertex".into());
        }
        if !g.is_independent(self.ys()) {
            return bad("y side is not independent".into());
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.pairs.len()
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn x(&self, i: usize) -> usize {
        self.pairs[i].0
    }

    pub fn y(&self, i: usize) -> usize {
        self.pairs[i].1
    }

    pub fn xs(&self) -> VertexSet {
        self.pairs.iter().map(|p| p.0).collect()
    }

    pub fn ys(&self) -> VertexSet {
        self.pairs.iter().map(|p| p.1).collect()
    }

    /// The same pairs in a new order: position `k` holds old pair `order[k]`.
    pub fn reindexed(&self, order: &[usize]) -> VwcLabeling {
        VwcLabeling { pairs: order.iter().map(|&i| self.pairs[i]).collect() }
    }

    /// Whether `x_i y_j ∈ E` implies `i ≤ j`.
    pub fn satisfies_star_star(&self, g: &Graph) -> bool {
        (0..self.n()).all(|i| (0..i).all(|j| !g.has_edge(self.x(i), self.y(j))))
    }

    pub fn label_pairs(&self, g: &Graph) -> Vec<(String, String)> {
        self.pairs.iter().map(|&(x, y)| (g.label(x).to_string(), g.label(y).to_string())).collect()
    }
}

/// Perfect matchings in lexicographic order of their sorted edge lists.
fn perfect_matchings(g: &Graph) -> impl Iterator<Item = Vec<(usize, usize)>> + '_ {
    // Explicit DFS stack so matchings stream lazily.
    let n = g.vertex_count();
    let mut stack: Vec<(VertexSet, Vec<(usize, usize)>)> = Vec::new();
    if n.is_multiple_of(2) {
        stack.push((VertexSet::EMPTY, Vec::new()));
    }
    std::iter::from_fn(move || {
        while let Some((used, edges)) = stack.pop() {
            let free = g.vertices().difference(used);
            let Some(u) = free.first() else {
                return Some(edges);
            };
            // Push in reverse so the smallest partner is explored first.
            let partners: Vec<usize> = g.neighbors(u).intersection(free).iter().collect();
            for &v in partners.iter().rev() {
                let mut next = edges.clone();
                next.push((u, v));
                stack.push((used.with(u).with(v), next));
            }
        }
        None
    })
}

/// Picks `y` for every matching edge so that the `y` side is independent.
///
/// Each pair prefers `x` = the endpoint of larger degree (ties: earlier vertex);
/// the search returns the lexicographically least choice vector under that
/// preference, with unit propagation over the two-choice pairs.
fn independent_transversal(g: &Graph, matching: &[(usize, usize)]) -> Option<Vec<(usize, usize)>> {
    let preferred: Vec<(usize, usize)> = matching
        .iter()
        .map(|&(u, v)| if g.degree(v) > g.degree(u) { (v, u) } else { (u, v) })
        .collect();
    let mut pair_of = vec![0; g.vertex_count()];
    for (i, &(u, v)) in matching.iter().enumerate() {
        pair_of[u] = i;
        pair_of[v] = i;
    }

    // choice[i] = Some(y) once decided.
    fn assign(
        g: &Graph,
        matching: &[(usize, usize)],
        pair_of: &[usize],
        choice: &mut [Option<usize>],
        i: usize,
        y: usize,
    ) -> bool {
        let mut queue = vec![(i, y)];
        while let Some((i, y)) = queue.pop() {
            match choice[i] {
                Some(c) if c == y => continue,
                Some(_) => return false,
                None => choice[i] = Some(y),
            }
            for w in g.neighbors(y).iter() {
                let j = pair_of[w];
                if j == i {
                    continue;
                }
                let (a, b) = matching[j];
                let other = if w == a { b } else { a };
                queue.push((j, other));
            }
        }
        true
    }

    fn search(
        g: &Graph,
        matching: &[(usize, usize)],
        preferred: &[(usize, usize)],
        pair_of: &[usize],
        choice: Vec<Option<usize>>,
    ) -> Option<Vec<Option<usize>>> {
        let Some(i) = choice.iter().position(|c| c.is_none()) else {
            return Some(choice);
        };
        let (px, py) = preferred[i];
        for y in [py, px] {
            let mut next = choice.clone();
            if assign(g, matching, pair_of, &mut next, i, y) {
                if let Some(done) = search(g, matching, preferred, pair_of, next) {
                    return Some(done);
                }
            }
        }
        None
    }

    let choice = search(g, matching, &preferred, &pair_of, vec![None; matching.len()])?;
    Some(
        matching
            .iter()
            .zip(choice)
            .map(|(&(u, v), y)| {
                let y = y.expect("complete assignment");
                if y == v {
                    (u, v)
                } else {
                    (v, u)
                }
            })
            .collect(),
    )
}

/// A `(∗)` labeling for a very well-covered graph; `None` otherwise.
///
/// Uses the first perfect matching in lexicographic edge order that admits an
/// independent transversal.
pub fn find_vwc_labeling(g: &Graph) -> Option<VwcLabeling> {
    if !is_well_covered(g).very_well_covered {
        return None;
    }
    perfect_matchings(g)
        .find_map(|m| independent_transversal(g, &m))
        .map(|pairs| VwcLabeling { pairs })
}

/// Which endpoint of pair `i` plays `z_i` in condition (i).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Side {
    X,
    Y,
}

/// A reason a graph fails one of the classification steps.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum Violation {
    IsolatedVertex { vertex: usize },
    /// Two maximal independent sets of different sizes.
    UnequalMaximalIndependentSets { smaller: Vec<usize>, larger: Vec<usize> },
    /// Well-covered, but twice the independence number differs from the vertex count.
    NotVeryWellCovered { independence_number: usize, vertices: usize },
    /// `z_i x_j`, `y_j x_k` are edges but `z_i x_k` is not.
    ConditionI { i: usize, j: usize, k: usize, z: Side, missing: (usize, usize) },
    /// `x_i y_j` and `x_i x_j` are both edges.
    ConditionII { i: usize, j: usize, offending: (usize, usize) },
    /// Pair indices on a directed cycle of the semidirected graph; no `(∗∗)` order exists.
    DirectedCycle { indices: Vec<usize> },
}

/// Conditions (i) and (ii) over all distinct indices. Empty iff both hold.
pub fn check_unmixed_conditions(g: &Graph, lab: &VwcLabeling) -> Result<Vec<Violation>> {
    lab.validate(g)?;
    let n = lab.n();
    let mut out = Vec::new();
    for i in 0..n {
        for (side, z) in [(Side::X, lab.x(i)), (Side::Y, lab.y(i))] {
            for j in 0..n {
                if j == i || !g.has_edge(z, lab.x(j)) {
                    continue;
                }
                for k in 0..n {
                    if k == i || k == j {
                        continue;
                    }
                    if g.has_edge(lab.y(j), lab.x(k)) && !g.has_edge(z, lab.x(k)) {
                        out.push(Violation::ConditionI { i, j, k, z: side, missing: (z, lab.x(k)) });
                    }
                }
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            if i != j && g.has_edge(lab.x(i), lab.y(j)) && g.has_edge(lab.x(i), lab.x(j)) {
                out.push(Violation::ConditionII { i, j, offending: (lab.x(i), lab.x(j)) });
            }
        }
    }
    Ok(out)
}

/// A simultaneous reindexing of the pairs making `x_i y_j ∈ E ⇒ i ≤ j` hold,
/// or `None` when the semidirected graph has a directed cycle.
pub fn relabel_for_star_star(g: &Graph, lab: &VwcLabeling) -> Result<Option<VwcLabeling>> {
    if !check_unmixed_conditions(g, lab)?.is_empty() {
        return Err(Error::Precondition("conditions (i) and (ii) must hold before relabeling".into()));
    }
    Ok(star_star_order(g, lab)?.ok())
}

/// The `(∗∗)` order, or the first directed cycle's indices.
fn star_star_order(g: &Graph, lab: &VwcLabeling) -> Result<std::result::Result<VwcLabeling, Vec<usize>>> {
    let part = strong_components(&build_semidigraph(g, lab)?);
    if let Some(cycle) = part.components.iter().find(|c| c.len() > 1) {
        return Ok(Err(cycle.clone()));
    }
    let order: Vec<usize> = part.components.iter().map(|c| c[0]).collect();
    Ok(Ok(lab.reindexed(&order)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Status {
    NotWellCovered,
    WellCoveredNotVwc,
    /// Cannot occur for very well-covered graphs; kept so a failure of the
    /// unmixedness characterization is reported rather than hidden.
    VwcNotUnmixed,
    VwcUnmixedNotCM,
    VwcCohenMacaulay,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub status: Status,
    /// For `VwcCohenMacaulay` this labeling satisfies `(∗∗)`.
    pub labeling: Option<VwcLabeling>,
    /// Height of the edge ideal (size of a minimum vertex cover).
    pub height: usize,
    pub violations: Vec<Violation>,
}

pub fn classify(g: &Graph) -> Classification {
    let wc = is_well_covered(g);
    let alpha = crate::graph::maximal_independent_sets(g).iter().map(|s| s.len()).max().unwrap_or(0);
    let height = g.vertex_count() - alpha;
    let done = |status, labeling, violations| Classification { status, labeling, height, violations };

    if !wc.well_covered {
        let mut violations: Vec<Violation> =
            wc.isolated.iter().map(|&vertex| Violation::IsolatedVertex { vertex }).collect();
        if let Some((a, b)) = wc.witness {
            violations.push(Violation::UnequalMaximalIndependentSets { smaller: a.to_vec(), larger: b.to_vec() });
        }
        return done(Status::NotWellCovered, None, violations);
    }
    if !wc.very_well_covered {
        let v = Violation::NotVeryWellCovered {
            independence_number: wc.independence_number.unwrap_or(0),
            vertices: g.vertex_count(),
        };
        return done(Status::WellCoveredNotVwc, None, vec![v]);
    }
    let lab = find_vwc_labeling(g).expect("very well-covered graphs admit a (∗) labeling");
    let violations = check_unmixed_conditions(g, &lab).expect("labeling built for this graph");
    if !violations.is_empty() {
        return done(Status::VwcNotUnmixed, Some(lab), violations);
    }
    match star_star_order(g, &lab).expect("labeling built for this graph") {
        Ok(ordered) => done(Status::VwcCohenMacaulay, Some(ordered), Vec::new()),
        Err(indices) => done(Status::VwcUnmixedNotCM, Some(lab), vec![Violation::DirectedCycle { indices }]),
    }
}
