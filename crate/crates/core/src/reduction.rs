//! The semidirected graph of a labelled very well-covered graph, its strong
//! components, the acyclic reduction, antichains and the `Ω_A` sets, and the
//! two antichain formulas for the regularity.
//!
//! Indices here are pair indices `0..n` of a [`VwcLabeling`]: a directed edge
//! `i → j` stands for the graph edge `x_i y_j`, an undirected edge `{i, j}` for
//! `x_i x_j`.

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap};

use serde::Serialize;

use crate::classify::VwcLabeling;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// A graph on `0..n` with directed and undirected edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemiDigraph {
    n: usize,
    directed: BTreeSet<(usize, usize)>,
    undirected: BTreeSet<(usize, usize)>,
    succ: Vec<VertexSet>,
}

impl SemiDigraph {
    pub fn new(
        n: usize,
        directed: impl IntoIterator<Item = (usize, usize)>,
        undirected: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        if n > 64 {
            return Err(Error::TooManyVertices { got: n, max: 64 });
        }
        let check = |i: usize, j: usize| -> Result<()> {
            if i >= n || j >= n {
                Err(Error::Precondition(format!("index {} out of range 0..{n}", i.max(j))))
            } else if i == j {
                Err(Error::Precondition(format!("loop at index {i}")))
            } else {
                Ok(())
            }
        };
        let mut d = BTreeSet::new();
        let mut succ = vec![VertexSet::EMPTY; n];
        for (i, j) in directed {
            check(i, j)?;
            d.insert((i, j));
            succ[i].insert(j);
        }
        let mut u = BTreeSet::new();
        for (i, j) in undirected {
            check(i, j)?;
            u.insert((i.min(j), i.max(j)));
        }
        Ok(SemiDigraph { n, directed: d, undirected: u, succ })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn directed(&self) -> &BTreeSet<(usize, usize)> {
        &self.directed
    }

    /// Undirected edges as `(i, j)` with `i < j`.
    pub fn undirected(&self) -> &BTreeSet<(usize, usize)> {
        &self.undirected
    }

    pub fn has_directed(&self, i: usize, j: usize) -> bool {
        self.succ[i].contains(j)
    }

    pub fn has_undirected(&self, i: usize, j: usize) -> bool {
        self.undirected.contains(&(i.min(j), i.max(j)))
    }

    pub fn successors(&self, i: usize) -> VertexSet {
        self.succ[i]
    }

    /// `reach[i]` = every `j` with a directed path of positive length from `i`.
    pub fn reachability(&self) -> Vec<VertexSet> {
        let mut reach = self.succ.clone();
        // Warshall over bitsets.
        for k in 0..self.n {
            for i in 0..self.n {
                if reach[i].contains(k) {
                    reach[i] = reach[i].union(reach[k]);
                }
            }
        }
        reach
    }

    /// No directed cycle through two or more distinct indices.
    pub fn is_acyclic(&self) -> bool {
        strong_components(self).components.iter().all(|c| c.len() == 1)
    }

    /// No pair joined both by a directed and an undirected edge.
    pub fn is_simple(&self) -> bool {
        self.directed.iter().all(|&(i, j)| !self.has_undirected(i, j))
    }

    /// Whether `a` has no directed path between two distinct members.
    pub fn is_antichain(&self, a: VertexSet) -> bool {
        let reach = self.reachability();
        is_antichain_in(&reach, a)
    }

    /// Undirected edges as index sets.
    pub(crate) fn undirected_sets(&self) -> Vec<VertexSet> {
        self.undirected.iter().map(|&(i, j)| VertexSet::singleton(i).with(j)).collect()
    }
}

fn is_antichain_in(reach: &[VertexSet], a: VertexSet) -> bool {
    a.iter().all(|i| reach[i].intersection(a.without(i)).is_empty())
}

/// `𝔡_G`: `i → j` for each edge `x_i y_j`, `{i, j}` for each edge `x_i x_j`.
pub fn build_semidigraph(g: &Graph, lab: &VwcLabeling) -> Result<SemiDigraph> {
    lab.validate(g)?;
    let n = lab.n();
    let mut directed = Vec::new();
    let mut undirected = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            if g.has_edge(lab.x(i), lab.y(j)) {
                directed.push((i, j));
            }
            if i < j && g.has_edge(lab.x(i), lab.x(j)) {
                undirected.push((i, j));
            }
        }
    }
    SemiDigraph::new(n, directed, undirected)
}

/// Strong components, listed in a topological order of the condensation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentPartition {
    pub components: Vec<Vec<usize>>,
    pub component_of: Vec<usize>,
}

impl ComponentPartition {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn members(&self, c: usize) -> VertexSet {
        self.components[c].iter().copied().collect()
    }

    /// Union of the given components.
    pub fn union_of(&self, comps: VertexSet) -> VertexSet {
        comps.iter().fold(VertexSet::EMPTY, |acc, c| acc.union(self.members(c)))
    }
}

/// Strong components by mutual directed reachability; undirected edges are ignored.
///
/// Components come in topological order of the condensation, ties broken by
/// the least contained index.
pub fn strong_components(d: &SemiDigraph) -> ComponentPartition {
    struct Tarjan<'a> {
        d: &'a SemiDigraph,
        index: Vec<Option<usize>>,
        low: Vec<usize>,
        on_stack: Vec<bool>,
        stack: Vec<usize>,
        next: usize,
        comps: Vec<Vec<usize>>,
    }
    impl Tarjan<'_> {
        fn visit(&mut self, v: usize) {
            self.index[v] = Some(self.next);
            self.low[v] = self.next;
            self.next += 1;
            self.stack.push(v);
            self.on_stack[v] = true;
            for w in self.d.successors(v).iter() {
                match self.index[w] {
                    None => {
                        self.visit(w);
                        self.low[v] = self.low[v].min(self.low[w]);
                    }
                    Some(iw) if self.on_stack[w] => self.low[v] = self.low[v].min(iw),
                    _ => {}
                }
            }
            if Some(self.low[v]) == self.index[v] {
                let mut comp = Vec::new();
                loop {
                    let w = self.stack.pop().expect("tarjan stack");
                    self.on_stack[w] = false;
                    comp.push(w);
                    if w == v {
                        break;
                    }
                }
                comp.sort_unstable();
                self.comps.push(comp);
            }
        }
    }

    let n = d.n();
    let mut t = Tarjan {
        d,
        index: vec![None; n],
        low: vec![0; n],
        on_stack: vec![false; n],
        stack: Vec::new(),
        next: 0,
        comps: Vec::new(),
    };
    for v in 0..n {
        if t.index[v].is_none() {
            t.visit(v);
        }
    }
    let raw = t.comps;
    let mut raw_of = vec![0; n];
    for (c, comp) in raw.iter().enumerate() {
        for &v in comp {
            raw_of[v] = c;
        }
    }

    // Kahn's algorithm on the condensation, least index first.
    let k = raw.len();
    let mut out_edges = vec![BTreeSet::new(); k];
    let mut indegree = vec![0usize; k];
    for &(i, j) in d.directed() {
        let (a, b) = (raw_of[i], raw_of[j]);
        if a != b && out_edges[a].insert(b) {
            indegree[b] += 1;
        }
    }
    let mut ready: BinaryHeap<Reverse<(usize, usize)>> =
        (0..k).filter(|&c| indegree[c] == 0).map(|c| Reverse((raw[c][0], c))).collect();
    let mut components = Vec::with_capacity(k);
    let mut component_of = vec![0; n];
    while let Some(Reverse((_, c))) = ready.pop() {
        let id = components.len();
        for &v in &raw[c] {
            component_of[v] = id;
        }
        components.push(raw[c].clone());
        for &b in &out_edges[c] {
            indegree[b] -= 1;
            if indegree[b] == 0 {
                ready.push(Reverse((raw[b][0], b)));
            }
        }
    }
    ComponentPartition { components, component_of }
}

/// A failure of one of the two closure rules.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "rule")]
pub enum ClosureViolation {
    /// `i → j`, `j → k` but no `i → k`.
    Directed { i: usize, j: usize, k: usize },
    /// `{i, j}` undirected, `k → j` but no undirected `{i, k}`.
    Mixed { i: usize, j: usize, k: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClosureCheck {
    pub closed: bool,
    pub counterexample: Option<ClosureViolation>,
}

pub fn is_transitively_closed(d: &SemiDigraph) -> ClosureCheck {
    let n = d.n();
    let mut found = None;
    'outer: for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if i == j || j == k || i == k {
                    continue;
                }
                if d.has_directed(i, j) && d.has_directed(j, k) && !d.has_directed(i, k) {
                    found = Some(ClosureViolation::Directed { i, j, k });
                    break 'outer;
                }
                if d.has_undirected(i, j) && d.has_directed(k, j) && !d.has_undirected(i, k) {
                    found = Some(ClosureViolation::Mixed { i, j, k });
                    break 'outer;
                }
            }
        }
    }
    ClosureCheck { closed: found.is_none(), counterexample: found }
}

/// The acyclic reduction `Ĝ` with its semidirected graph `𝔡̂`.
#[derive(Debug, Clone)]
pub struct AcyclicReduction {
    /// Graph on `u1..ut, v1..vt`.
    pub ghat: Graph,
    /// The pairs `(u_a, v_a)` of `ghat`.
    pub labeling: VwcLabeling,
    pub dhat: SemiDigraph,
    pub partition: ComponentPartition,
    /// `𝔡_G` of the input.
    pub dg: SemiDigraph,
}

impl AcyclicReduction {
    pub fn t(&self) -> usize {
        self.partition.len()
    }

    /// Whether `Ĝ` is `G` itself under `u_a ↦ x_i`, `v_a ↦ y_i` (singleton components).
    pub fn is_identity_on(&self, g: &Graph, lab: &VwcLabeling) -> bool {
        if self.t() != lab.n() {
            return false;
        }
        let mut map = vec![0; self.ghat.vertex_count()];
        for (a, comp) in self.partition.components.iter().enumerate() {
            let i = comp[0];
            map[self.labeling.x(a)] = lab.x(i);
            map[self.labeling.y(a)] = lab.y(i);
        }
        let mut mapped: Vec<(usize, usize)> =
            self.ghat.edges().into_iter().map(|(p, q)| (map[p].min(map[q]), map[p].max(map[q]))).collect();
        mapped.sort_unstable();
        mapped == g.edges()
    }
}

pub fn acyclic_reduction(g: &Graph, lab: &VwcLabeling) -> Result<AcyclicReduction> {
    let dg = build_semidigraph(g, lab)?;
    let partition = strong_components(&dg);
    let reach = dg.reachability();
    let t = partition.len();

    let mut directed = Vec::new();
    let mut undirected = Vec::new();
    for a in 0..t {
        let za = partition.members(a);
        let from_a = za.iter().fold(VertexSet::EMPTY, |acc, i| acc.union(reach[i]));
        for b in 0..t {
            if a == b {
                continue;
            }
            let zb = partition.members(b);
            if !from_a.is_disjoint(zb) {
                directed.push((a, b));
            }
            if a < b && za.iter().any(|i| zb.iter().any(|j| dg.has_undirected(i, j))) {
                undirected.push((a, b));
            }
        }
    }
    let dhat = SemiDigraph::new(t, directed, undirected)?;

    let mut labels: Vec<String> = (1..=t).map(|a| format!("u{a}")).collect();
    labels.extend((1..=t).map(|a| format!("v{a}")));
    let mut ghat = Graph::new(labels)?;
    for a in 0..t {
        ghat.add_edge(a, t + a)?;
    }
    for &(a, b) in dhat.directed() {
        ghat.add_edge(a, t + b)?;
    }
    for &(a, b) in dhat.undirected() {
        ghat.add_edge(a, b)?;
    }
    let labeling = VwcLabeling::new(&ghat, (0..t).map(|a| (a, t + a)).collect())?;

    if build_semidigraph(&ghat, &labeling)? != dhat {
        return Err(Error::Invariant("semidirected graph of the reduction differs from the contracted one".into()));
    }
    Ok(AcyclicReduction { ghat, labeling, dhat, partition, dg })
}

/// All antichains (including `∅`), in lexicographic order.
pub fn antichains(d: &SemiDigraph) -> Vec<VertexSet> {
    fn walk(reach: &[VertexSet], start: usize, cur: VertexSet, out: &mut Vec<VertexSet>) {
        out.push(cur);
        for i in start..reach.len() {
            let ok = cur.iter().all(|a| !reach[a].contains(i) && !reach[i].contains(a));
            if ok {
                walk(reach, i + 1, cur.with(i), out);
            }
        }
    }
    let reach = d.reachability();
    let mut out = Vec::new();
    walk(&reach, 0, VertexSet::EMPTY, &mut out);
    out
}

/// `Ω_A` for an antichain `A` of `d`: the union of the components `Z_b` with
/// `b ≽ A'`, where `A'` is the set of components meeting `A`.
pub fn omega(d: &SemiDigraph, part: &ComponentPartition, a: VertexSet) -> Result<VertexSet> {
    let reach = d.reachability();
    if !is_antichain_in(&reach, a) || a.iter().any(|i| i >= d.n()) {
        return Err(Error::NotAntichain(a.to_vec()));
    }
    Ok(omega_unchecked(&reach, part, a))
}

fn omega_unchecked(reach: &[VertexSet], part: &ComponentPartition, a: VertexSet) -> VertexSet {
    let above: VertexSet = a
        .iter()
        .flat_map(|i| reach[i].with(i).iter())
        .map(|j| part.component_of[j])
        .collect();
    part.union_of(above)
}

/// `Ω_{A'}` for an antichain `A'` of `𝔡̂`, as a set of indices of `G`.
pub fn omega_reduced(red: &AcyclicReduction, a: VertexSet) -> Result<VertexSet> {
    let reach = red.dhat.reachability();
    if !is_antichain_in(&reach, a) || a.iter().any(|i| i >= red.t()) {
        return Err(Error::NotAntichain(a.to_vec()));
    }
    Ok(omega_reduced_unchecked(&reach, red, a))
}

fn omega_reduced_unchecked(reach: &[VertexSet], red: &AcyclicReduction, a: VertexSet) -> VertexSet {
    let above = a.iter().fold(VertexSet::EMPTY, |acc, b| acc.union(reach[b].with(b)));
    red.partition.union_of(above)
}

fn contains_undirected(omega: VertexSet, edges: &[VertexSet]) -> bool {
    edges.iter().any(|e| e.is_subset(omega))
}

/// A height-`n` prime `(x_i | i ∈ xs) + (y_i | i ∈ ys)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct VertexCoverPrime {
    pub xs: VertexSet,
    pub ys: VertexSet,
}

impl VertexCoverPrime {
    /// The generating variables as a vertex set of the labelled graph.
    pub fn vertex_cover(&self, lab: &VwcLabeling) -> VertexSet {
        let xs = self.xs.iter().map(|i| lab.x(i));
        let ys = self.ys.iter().map(|i| lab.y(i));
        xs.chain(ys).collect()
    }
}

/// The associated primes, one per antichain `A'` of `𝔡̂` whose `Ω_{A'}`
/// contains no undirected edge of `𝔡_G`. Sorted.
pub fn associated_primes(g: &Graph, lab: &VwcLabeling) -> Result<Vec<VertexCoverPrime>> {
    let red = acyclic_reduction(g, lab)?;
    let reach = red.dhat.reachability();
    let edges = red.dg.undirected_sets();
    let all = VertexSet::full(lab.n());
    let mut primes: BTreeSet<VertexCoverPrime> = BTreeSet::new();
    for a in antichains(&red.dhat) {
        let om = omega_reduced_unchecked(&reach, &red, a);
        if !contains_undirected(om, &edges) {
            primes.insert(VertexCoverPrime { xs: all.difference(om), ys: om });
        }
    }
    Ok(primes.into_iter().collect())
}

/// Both antichain maxima with witnesses.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AntichainRegularity {
    pub value: usize,
    /// Antichain of `𝔡_G` attaining the maximum.
    pub witness: Vec<usize>,
    pub via_dg: usize,
    pub via_dhat: usize,
    /// Antichain of `𝔡̂` attaining the maximum.
    pub witness_dhat: Vec<usize>,
}

/// Largest antichain of `d` whose `Ω` (given by `omega_of`) contains no edge of `edges`.
///
/// `Ω` grows with the antichain, so a failing antichain prunes all its supersets.
fn max_admissible_antichain(
    reach: &[VertexSet],
    edges: &[VertexSet],
    omega_of: &dyn Fn(VertexSet) -> VertexSet,
) -> VertexSet {
    fn walk(
        reach: &[VertexSet],
        edges: &[VertexSet],
        omega_of: &dyn Fn(VertexSet) -> VertexSet,
        start: usize,
        cur: VertexSet,
        best: &mut VertexSet,
    ) {
        if cur.len() > best.len() {
            *best = cur;
        }
        for i in start..reach.len() {
            if cur.len() + (reach.len() - i) <= best.len() {
                return;
            }
            if cur.iter().any(|a| reach[a].contains(i) || reach[i].contains(a)) {
                continue;
            }
            let next = cur.with(i);
            if contains_undirected(omega_of(next), edges) {
                continue;
            }
            walk(reach, edges, omega_of, i + 1, next, best);
        }
    }
    let mut best = VertexSet::EMPTY;
    walk(reach, edges, omega_of, 0, VertexSet::EMPTY, &mut best);
    best
}

/// `max{|A| : A antichain, Ω_A ⊉ e for every undirected edge e of 𝔡_G}`, computed
/// over `𝔡_G` and over `𝔡̂` independently. The two must agree.
pub fn antichain_regularity(g: &Graph, lab: &VwcLabeling) -> Result<AntichainRegularity> {
    let red = acyclic_reduction(g, lab)?;
    let edges = red.dg.undirected_sets();

    let reach_g = red.dg.reachability();
    let part = &red.partition;
    let best_g = max_admissible_antichain(&reach_g, &edges, &|a| omega_unchecked(&reach_g, part, a));

    let reach_h = red.dhat.reachability();
    let best_h = max_admissible_antichain(&reach_h, &edges, &|a| omega_reduced_unchecked(&reach_h, &red, a));

    if best_g.len() != best_h.len() {
        return Err(Error::Invariant(format!(
            "antichain maxima disagree: {} over the semidirected graph, {} over its reduction",
            best_g.len(),
            best_h.len()
        )));
    }
    Ok(AntichainRegularity {
        value: best_g.len(),
        witness: best_g.to_vec(),
        via_dg: best_g.len(),
        via_dhat: best_h.len(),
        witness_dhat: best_h.to_vec(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{minimal_vertex_covers, Graph};

    fn c4() -> (Graph, VwcLabeling) {
        let g = Graph::from_edges(&["a", "b", "c", "d"], &[("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")]).unwrap();
        let lab = VwcLabeling::from_labels(&g, &[("b", "a"), ("d", "c")]).unwrap();
        (g, lab)
    }

    fn p4() -> (Graph, VwcLabeling) {
        let g = Graph::from_edges(&["a", "b", "c", "d"], &[("a", "b"), ("b", "c"), ("c", "d")]).unwrap();
        let lab = VwcLabeling::from_labels(&g, &[("b", "a"), ("c", "d")]).unwrap();
        (g, lab)
    }

    fn whiskered_triangle() -> (Graph, VwcLabeling) {
        let g = Graph::from_edges(
            &["x1", "x2", "x3", "y1", "y2", "y3"],
            &[("x1", "x2"), ("x1", "x3"), ("x2", "x3"), ("x1", "y1"), ("x2", "y2"), ("x3", "y3")],
        )
        .unwrap();
        let lab = VwcLabeling::from_labels(&g, &[("x1", "y1"), ("x2", "y2"), ("x3", "y3")]).unwrap();
        (g, lab)
    }

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn semidigraph_examples() {
        let (g, lab) = c4();
        let d = build_semidigraph(&g, &lab).unwrap();
        assert_eq!(d.directed().iter().copied().collect::<Vec<_>>(), vec![(0, 1), (1, 0)]);
        assert!(d.undirected().is_empty());

        let (g, lab) = p4();
        let d = build_semidigraph(&g, &lab).unwrap();
        assert!(d.directed().is_empty());
        assert_eq!(d.undirected().iter().copied().collect::<Vec<_>>(), vec![(0, 1)]);

        let (g, lab) = whiskered_triangle();
        let d = build_semidigraph(&g, &lab).unwrap();
        assert!(d.directed().is_empty());
        assert_eq!(d.undirected().len(), 3);
    }

    #[test]
    fn strong_component_examples() {
        let (g, lab) = c4();
        let part = strong_components(&build_semidigraph(&g, &lab).unwrap());
        assert_eq!(part.components, vec![vec![0, 1]]);

        let (g, lab) = p4();
        let part = strong_components(&build_semidigraph(&g, &lab).unwrap());
        assert_eq!(part.components, vec![vec![0], vec![1]]);

        let chain = SemiDigraph::new(3, vec![(0, 1), (1, 2)], vec![]).unwrap();
        assert_eq!(strong_components(&chain).components, vec![vec![0], vec![1], vec![2]]);

        let reversed = SemiDigraph::new(3, vec![(2, 1), (1, 0)], vec![]).unwrap();
        let part = strong_components(&reversed);
        assert_eq!(part.components, vec![vec![2], vec![1], vec![0]]);
        assert_eq!(part.component_of, vec![2, 1, 0]);
    }

    #[test]
    fn component_order_breaks_ties_by_least_index() {
        let d = SemiDigraph::new(4, vec![(3, 0), (1, 2), (2, 1)], vec![]).unwrap();
        assert_eq!(strong_components(&d).components, vec![vec![1, 2], vec![3], vec![0]]);
    }

    #[test]
    fn closure_examples() {
        let d = SemiDigraph::new(3, vec![(0, 1), (1, 2)], vec![]).unwrap();
        let c = is_transitively_closed(&d);
        assert!(!c.closed);
        assert_eq!(c.counterexample, Some(ClosureViolation::Directed { i: 0, j: 1, k: 2 }));

        let (g, lab) = p4();
        assert!(is_transitively_closed(&build_semidigraph(&g, &lab).unwrap()).closed);

        let mixed = SemiDigraph::new(3, vec![(2, 1)], vec![(0, 1)]).unwrap();
        assert_eq!(
            is_transitively_closed(&mixed).counterexample,
            Some(ClosureViolation::Mixed { i: 0, j: 1, k: 2 })
        );
    }

    #[test]
    fn reduction_examples() {
        let (g, lab) = c4();
        let red = acyclic_reduction(&g, &lab).unwrap();
        assert_eq!(red.t(), 1);
        assert_eq!(red.ghat.edges(), vec![(0, 1)]);

        let (g, lab) = p4();
        let red = acyclic_reduction(&g, &lab).unwrap();
        assert_eq!(red.t(), 2);
        // u1 u2 v1 v2: u1v1, u2v2, u1u2
        assert_eq!(red.ghat.edges(), vec![(0, 1), (0, 2), (1, 3)]);
        assert!(red.is_identity_on(&g, &lab));

        let (g, lab) = whiskered_triangle();
        let red = acyclic_reduction(&g, &lab).unwrap();
        assert!(red.is_identity_on(&g, &lab));
        assert!(red.dhat.is_acyclic());
    }

    #[test]
    fn antichain_examples() {
        let (g, lab) = c4();
        let d = build_semidigraph(&g, &lab).unwrap();
        assert_eq!(antichains(&d), vec![set(&[]), set(&[0]), set(&[1])]);

        let (g, lab) = p4();
        let d = build_semidigraph(&g, &lab).unwrap();
        assert_eq!(antichains(&d), vec![set(&[]), set(&[0]), set(&[0, 1]), set(&[1])]);

        let chain = SemiDigraph::new(2, vec![(0, 1)], vec![]).unwrap();
        assert_eq!(antichains(&chain), vec![set(&[]), set(&[0]), set(&[1])]);
    }

    #[test]
    fn omega_examples() {
        let (g, lab) = c4();
        let d = build_semidigraph(&g, &lab).unwrap();
        let part = strong_components(&d);
        assert_eq!(omega(&d, &part, set(&[0])).unwrap(), set(&[0, 1]));
        assert_eq!(omega(&d, &part, VertexSet::EMPTY).unwrap(), VertexSet::EMPTY);
        assert_eq!(omega(&d, &part, set(&[0, 1])), Err(Error::NotAntichain(vec![0, 1])));

        let (g, lab) = whiskered_triangle();
        let d = build_semidigraph(&g, &lab).unwrap();
        let part = strong_components(&d);
        assert_eq!(omega(&d, &part, set(&[1])).unwrap(), set(&[1]));
    }

    #[test]
    fn omega_lift_matches_reduced_omega() {
        let chain = Graph::from_edges(
            &["x1", "y1", "x2", "y2", "x3", "y3"],
            &[("x1", "y1"), ("x2", "y2"), ("x3", "y3"), ("x1", "y2"), ("x2", "y1"), ("x1", "y3"), ("x2", "y3")],
        )
        .unwrap();
        let lab = VwcLabeling::from_labels(&chain, &[("x1", "y1"), ("x2", "y2"), ("x3", "y3")]).unwrap();
        let red = acyclic_reduction(&chain, &lab).unwrap();
        assert_eq!(red.partition.components, vec![vec![0, 1], vec![2]]);
        assert_eq!(omega(&red.dg, &red.partition, set(&[1])).unwrap(), set(&[0, 1, 2]));
        assert_eq!(omega_reduced(&red, set(&[0])).unwrap(), set(&[0, 1, 2]));
        assert_eq!(omega_reduced(&red, set(&[1])).unwrap(), set(&[2]));
    }

    #[test]
    fn associated_prime_examples() {
        let (g, lab) = c4();
        let primes = associated_primes(&g, &lab).unwrap();
        let covers: Vec<Vec<String>> = primes.iter().map(|p| g.set_labels(p.vertex_cover(&lab))).collect();
        assert_eq!(covers.len(), 2);
        assert!(covers.contains(&vec!["b".to_string(), "d".into()]));
        assert!(covers.contains(&vec!["a".to_string(), "c".into()]));

        let k2 = Graph::from_edges(&["x1", "y1"], &[("x1", "y1")]).unwrap();
        let lab = VwcLabeling::from_labels(&k2, &[("x1", "y1")]).unwrap();
        assert_eq!(associated_primes(&k2, &lab).unwrap().len(), 2);

        let (g, lab) = whiskered_triangle();
        let primes = associated_primes(&g, &lab).unwrap();
        assert_eq!(primes.len(), 4);
        let mut covers: Vec<VertexSet> = primes.iter().map(|p| p.vertex_cover(&lab)).collect();
        covers.sort();
        assert_eq!(covers, minimal_vertex_covers(&g));
    }

    #[test]
    fn antichain_regularity_examples() {
        let (g, lab) = c4();
        let r = antichain_regularity(&g, &lab).unwrap();
        assert_eq!((r.value, r.witness.clone()), (1, vec![0]));

        let (g, lab) = whiskered_triangle();
        assert_eq!(antichain_regularity(&g, &lab).unwrap().value, 1);

        let two = Graph::from_edges(&["x1", "y1", "x2", "y2"], &[("x1", "y1"), ("x2", "y2")]).unwrap();
        let lab = VwcLabeling::from_labels(&two, &[("x1", "y1"), ("x2", "y2")]).unwrap();
        let r = antichain_regularity(&two, &lab).unwrap();
        assert_eq!((r.via_dg, r.via_dhat), (2, 2));
    }

    #[test]
    fn semidigraph_rejects_loops_and_out_of_range() {
        assert!(SemiDigraph::new(2, vec![(0, 0)], vec![]).is_err());
        assert!(SemiDigraph::new(2, vec![], vec![(0, 2)]).is_err());
    }
}
