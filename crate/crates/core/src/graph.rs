//! Finite simple graphs over labelled vertices and their purely
//! graph-theoretic invariants: independent sets, vertex covers,
//! well-coveredness and pairwise 3-disjoint edge sets.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Maximum number of vertices a [`Graph`] may carry.
pub const MAX_VERTICES: usize = 64;

/// An edge as a pair of vertex indices with `u < v`.
pub type Edge = (usize, usize);

fn normalize(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// A finite simple undirected graph.
///
/// Vertex order is fixed at construction; all iteration and tie-breaking
/// follows it.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<VertexSet>,
}

impl Graph {
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let mut g = Graph { labels: Vec::new(), index: HashMap::new(), adj: Vec::new() };
        for l in labels {
            g.add_vertex(l)?;
        }
        Ok(g)
    }

    /// Builds a graph from labels and label pairs.
    pub fn from_edges(labels: &[&str], edges: &[(&str, &str)]) -> Result<Self> {
        let mut g = Graph::new(labels.iter().copied())?;
        for &(u, v) in edges {
            g.add_edge_by_label(u, v)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self, label: impl Into<String>) -> Result<usize> {
        let label = label.into();
        if self.index.contains_key(&label) {
            return Err(Error::DuplicateVertex(label));
        }
        if self.labels.len() == MAX_VERTICES {
            return Err(Error::TooManyVertices { got: MAX_VERTICES + 1, max: MAX_VERTICES });
        }
        let id = self.labels.len();
        self.index.insert(label.clone(), id);
        self.labels.push(label);
        self.adj.push(VertexSet::EMPTY);
        Ok(id)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.vertex_count();
        if u >= n || v >= n {
            return Err(Error::UnknownVertex(format!("#{}", u.max(v))));
        }
        if u == v {
            return Err(Error::Loop(self.labels[u].clone()));
        }
        if self.has_edge(u, v) {
            return Err(Error::DuplicateEdge(self.labels[u].clone(), self.labels[v].clone()));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn add_edge_by_label(&mut self, u: &str, v: &str) -> Result<()> {
        let a = self.require(u)?;
        let b = self.require(v)?;
        self.add_edge(a, b)
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub(crate) fn require(&self, label: &str) -> Result<usize> {
        self.index_of(label).ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.vertex_count())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// `{v} ∪ N(v)`.
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges in lexicographic order of their index pairs.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.vertex_count() {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        (0..self.vertex_count()).filter(|&v| self.adj[v].is_empty()).collect()
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v].is_disjoint(s))
    }

    pub fn is_vertex_cover(&self, s: VertexSet) -> bool {
        self.edges().iter().all(|&(u, v)| s.contains(u) || s.contains(v))
    }

    /// Labels of the members of `s`, in vertex order.
    pub fn set_labels(&self, s: VertexSet) -> Vec<String> {
        s.iter().map(|v| self.labels[v].clone()).collect()
    }

    pub fn set_from_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<VertexSet> {
        labels.iter().map(|l| self.require(l.as_ref())).collect()
    }

    /// The induced subgraph on the given labels, keeping this graph's vertex order.
    pub fn induced_subgraph<S: AsRef<str>>(&self, labels: &[S]) -> Result<Graph> {
        Ok(self.induced_on(self.set_from_labels(labels)?))
    }

    /// The induced subgraph on `s`, keeping this graph's vertex order.
    pub fn induced_on(&self, s: VertexSet) -> Graph {
        let keep: Vec<usize> = s.iter().filter(|&v| v < self.vertex_count()).collect();
        let mut pos = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in keep.iter().enumerate() {
            pos[v] = i;
        }
        let labels: Vec<String> = keep.iter().map(|&v| self.labels[v].clone()).collect();
        let index = labels.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();
        let adj = keep
            .iter()
            .map(|&v| self.adj[v].intersection(s).iter().map(|w| pos[w]).collect())
            .collect();
        Graph { labels, index, adj }
    }

    /// `G ∖ S`.
    pub fn remove_vertices(&self, s: VertexSet) -> Graph {
        self.induced_on(self.vertices().difference(s))
    }

    /// The graph with isolated vertices deleted.
    pub fn without_isolated(&self) -> Graph {
        self.remove_vertices(self.isolated_vertices())
    }

    /// Relabels vertices, keeping positions. `rename` must be injective.
    pub fn renamed(&self, rename: impl Fn(&str) -> String) -> Result<Graph> {
        let mut g = Graph::new(self.labels.iter().map(|l| rename(l)))?;
        g.adj = self.adj.clone();
        Ok(g)
    }

    /// The same graph with vertex positions permuted: new position `i` holds old vertex `order[i]`.
    pub fn reordered(&self, order: &[usize]) -> Result<Graph> {
        let mut g = Graph::new(order.iter().map(|&v| self.labels[v].clone()))?;
        let mut pos = vec![0; order.len()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        for (u, v) in self.edges() {
            g.add_edge(pos[u], pos[v])?;
        }
        Ok(g)
    }

    /// Disjoint union; labels of `other` must not collide with ours.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let mut g = self.clone();
        let shift = g.vertex_count();
        for l in other.labels() {
            g.add_vertex(l.clone())?;
        }
        for (u, v) in other.edges() {
            g.add_edge(u + shift, v + shift)?;
        }
        Ok(g)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edges()
            .into_iter()
            .map(|(u, v)| format!("{}-{}", self.labels[u], self.labels[v]))
            .collect();
        f.debug_struct("Graph").field("vertices", &self.labels).field("edges", &edges).finish()
    }
}

/// All inclusion-maximal independent sets, sorted lexicographically.
pub fn maximal_independent_sets(g: &Graph) -> Vec<VertexSet> {
    maximal_independent_sets_within(g, g.vertices())
}

/// Maximal independent sets of the induced subgraph on `within`.
pub fn maximal_independent_sets_within(g: &Graph, within: VertexSet) -> Vec<VertexSet> {
    // Bron–Kerbosch with pivoting on the complement graph.
    fn expand(g: &Graph, within: VertexSet, r: VertexSet, p: VertexSet, x: VertexSet, out: &mut Vec<VertexSet>) {
        if p.is_empty() {
            if x.is_empty() {
                out.push(r);
            }
            return;
        }
        let non_nbrs = |v: usize| within.difference(g.neighbors(v)).without(v);
        let pivot = p
            .union(x)
            .iter()
            .max_by_key(|&u| p.intersection(non_nbrs(u)).len())
            .expect("p is nonempty");
        let (mut p, mut x) = (p, x);
        for v in p.difference(non_nbrs(pivot)).iter() {
            let nv = non_nbrs(v);
            expand(g, within, r.with(v), p.intersection(nv), x.intersection(nv), out);
            p.remove(v);
            x.insert(v);
        }
    }
    let within = within.intersection(g.vertices());
    let mut out = Vec::new();
    expand(g, within, VertexSet::EMPTY, within, VertexSet::EMPTY, &mut out);
    out.sort();
    out
}

/// All minimal vertex covers, as complements of the maximal independent sets, sorted.
pub fn minimal_vertex_covers(g: &Graph) -> Vec<VertexSet> {
    let all = g.vertices();
    let mut covers: Vec<VertexSet> =
        maximal_independent_sets(g).into_iter().map(|s| all.difference(s)).collect();
    covers.sort();
    covers
}

/// Outcome of the well-coveredness test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WellCovered {
    pub well_covered: bool,
    pub very_well_covered: bool,
    /// Common size of the maximal independent sets, when they agree.
    pub independence_number: Option<usize>,
    pub isolated: Vec<usize>,
    /// Two maximal independent sets of different sizes, when one exists.
    #[serde(skip)]
    pub witness: Option<(VertexSet, VertexSet)>,
}

pub fn is_well_covered(g: &Graph) -> WellCovered {
    let sets = maximal_independent_sets(g);
    let isolated = g.isolated_vertices().to_vec();
    let smallest = sets.iter().min_by_key(|s| s.len()).copied();
    let largest = sets.iter().max_by_key(|s| s.len()).copied();
    let (witness, common) = match (smallest, largest) {
        (Some(a), Some(b)) if a.len() != b.len() => (Some((a, b)), None),
        (Some(a), _) => (None, Some(a.len())),
        _ => (None, None),
    };
    let well_covered = isolated.is_empty() && witness.is_none();
    let very_well_covered =
        well_covered && common.is_some_and(|c| 2 * c == g.vertex_count()) && g.vertex_count() > 0;
    WellCovered { well_covered, very_well_covered, independence_number: common, isolated, witness }
}

/// Two distinct edges of a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgePair {
    pub e: Edge,
    pub f: Edge,
}

impl EdgePair {
    pub fn new(e: Edge, f: Edge) -> Result<Self> {
        let (e, f) = (normalize(e.0, e.1), normalize(f.0, f.1));
        if e == f {
            return Err(Error::Precondition("edge pair needs two distinct edges".into()));
        }
        Ok(EdgePair { e, f })
    }
}

/// Whether the induced subgraph on the four endpoints is exactly the two edges.
pub fn three_disjoint(g: &Graph, p: &EdgePair) -> Result<bool> {
    for &(u, v) in [p.e, p.f].iter() {
        if u >= g.vertex_count() || v >= g.vertex_count() || !g.has_edge(u, v) {
            let name = |x: usize| g.labels().get(x).cloned().unwrap_or_else(|| format!("#{x}"));
            return Err(Error::EdgeNotInGraph(name(u), name(v)));
        }
    }
    Ok(three_disjoint_unchecked(g, p.e, p.f))
}

pub(crate) fn three_disjoint_unchecked(g: &Graph, e: Edge, f: Edge) -> bool {
    let s: VertexSet = [e.0, e.1, f.0, f.1].into_iter().collect();
    s.len() == 4 && g.induced_on(s).edge_count() == 2
}

/// A pairwise 3-disjoint edge set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DisjointWitness {
    pub edges: Vec<Edge>,
    pub size: usize,
}

/// `a(G)`: the maximum size of a pairwise 3-disjoint edge set, with a certificate.
///
/// Exact maximum-clique search on the compatibility graph whose vertices are the
/// edges of `g`, adjacent when 3-disjoint.
pub fn max_3disjoint(g: &Graph) -> DisjointWitness {
    let edges = g.edges();
    let m = edges.len();
    let mut compat = vec![vec![false; m]; m];
    for i in 0..m {
        for j in i + 1..m {
            let ok = three_disjoint_unchecked(g, edges[i], edges[j]);
            compat[i][j] = ok;
            compat[j][i] = ok;
        }
    }
    let best = max_clique(&compat);
    let chosen: Vec<Edge> = best.into_iter().map(|i| edges[i]).collect();
    DisjointWitness { size: chosen.len(), edges: chosen }
}

fn max_clique(adj: &[Vec<bool>]) -> Vec<usize> {
    fn expand(adj: &[Vec<bool>], r: &mut Vec<usize>, p: &[usize], best: &mut Vec<usize>) {
        if p.is_empty() {
            if r.len() > best.len() {
                *best = r.clone();
            }
            return;
        }
        for (k, &v) in p.iter().enumerate() {
            if r.len() + p.len() - k <= best.len() {
                return;
            }
            let next: Vec<usize> = p[k + 1..].iter().copied().filter(|&w| adj[v][w]).collect();
            r.push(v);
            expand(adj, r, &next, best);
            r.pop();
        }
    }
    let all: Vec<usize> = (0..adj.len()).collect();
    let mut best = Vec::new();
    expand(adj, &mut Vec::new(), &all, &mut best);
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> Graph {
        Graph::from_edges(&["a", "b", "c", "d"], &[("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")]).unwrap()
    }

    fn p4() -> Graph {
        Graph::from_edges(&["a", "b", "c", "d"], &[("a", "b"), ("b", "c"), ("c", "d")]).unwrap()
    }

    fn names(g: &Graph, sets: &[VertexSet]) -> Vec<Vec<String>> {
        sets.iter().map(|&s| g.set_labels(s)).collect()
    }

    #[test]
    fn induced_subgraph_examples() {
        let g = c4();
        let ab = g.induced_subgraph(&["a", "b"]).unwrap();
        assert_eq!(ab.edge_count(), 1);
        let ac = g.induced_subgraph(&["a", "c"]).unwrap();
        assert_eq!(ac.vertex_count(), 2);
        assert_eq!(ac.edge_count(), 0);
        let abc = p4().induced_subgraph(&["a", "b", "c"]).unwrap();
        assert_eq!(abc.edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(g.induced_subgraph(&["a", "z"]), Err(Error::UnknownVertex("z".into())));
    }

    #[test]
    fn induced_keeps_vertex_order() {
        let g = c4();
        let sub = g.induced_subgraph(&["d", "a"]).unwrap();
        assert_eq!(sub.labels(), &["a".to_string(), "d".to_string()]);
    }

    #[test]
    fn maximal_independent_set_examples() {
        let k2 = Graph::from_edges(&["x1", "y1"], &[("x1", "y1")]).unwrap();
        assert_eq!(names(&k2, &maximal_independent_sets(&k2)), vec![vec!["x1"], vec!["y1"]]);
        let g = p4();
        assert_eq!(names(&g, &maximal_independent_sets(&g)), vec![vec!["a", "c"], vec!["a", "d"], vec!["b", "d"]]);
        let c5 = Graph::from_edges(
            &["a", "b", "c", "d", "e"],
            &[("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "a")],
        )
        .unwrap();
        let sets = maximal_independent_sets(&c5);
        assert_eq!(sets.len(), 5);
        assert!(sets.iter().all(|s| s.len() == 2));
        let empty = Graph::new(Vec::<String>::new()).unwrap();
        assert_eq!(maximal_independent_sets(&empty), vec![VertexSet::EMPTY]);
    }

    #[test]
    fn well_covered_examples() {
        let c5 = Graph::from_edges(
            &["a", "b", "c", "d", "e"],
            &[("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "a")],
        )
        .unwrap();
        let w = is_well_covered(&c5);
        assert!(w.well_covered && !w.very_well_covered);
        let w = is_well_covered(&p4());
        assert!(w.well_covered && w.very_well_covered);
        let p3 = Graph::from_edges(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap();
        let w = is_well_covered(&p3);
        assert!(!w.well_covered);
        let (s, t) = w.witness.unwrap();
        assert_eq!((p3.set_labels(s), p3.set_labels(t)), (vec!["b".to_string()], vec!["a".into(), "c".into()]));
    }

    #[test]
    fn isolated_vertices_are_not_well_covered() {
        let g = Graph::from_edges(&["a", "b", "c"], &[("a", "b")]).unwrap();
        assert!(!is_well_covered(&g).well_covered);
        let empty = Graph::new(Vec::<String>::new()).unwrap();
        assert!(!is_well_covered(&empty).very_well_covered);
    }

    #[test]
    fn three_disjoint_examples() {
        let g = c4();
        let p = EdgePair::new((0, 1), (2, 3)).unwrap();
        assert!(!three_disjoint(&g, &p).unwrap());
        assert!(!three_disjoint(&p4(), &p).unwrap());
        let two = Graph::from_edges(&["a", "b", "c", "d"], &[("a", "b"), ("c", "d")]).unwrap();
        assert!(three_disjoint(&two, &p).unwrap());
        let missing = EdgePair::new((0, 2), (1, 3)).unwrap();
        assert!(matches!(three_disjoint(&two, &missing), Err(Error::EdgeNotInGraph(..))));
        assert!(EdgePair::new((0, 1), (1, 0)).is_err());
    }

    #[test]
    fn max_3disjoint_examples() {
        let k2 = Graph::from_edges(&["x1", "y1"], &[("x1", "y1")]).unwrap();
        assert_eq!(max_3disjoint(&k2).size, 1);
        assert_eq!(max_3disjoint(&c4()).size, 1);
        let two = Graph::from_edges(&["a", "b", "c", "d"], &[("a", "b"), ("c", "d")]).unwrap();
        let w = max_3disjoint(&two);
        assert_eq!(w.size, 2);
        assert_eq!(w.edges, vec![(0, 1), (2, 3)]);
        let edgeless = Graph::new(["a", "b"]).unwrap();
        assert_eq!(max_3disjoint(&edgeless), DisjointWitness { edges: vec![], size: 0 });
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Graph::new(["a", "a"]).unwrap_err(), Error::DuplicateVertex("a".into()));
        let mut g = Graph::new(["a", "b"]).unwrap();
        assert_eq!(g.add_edge(0, 0).unwrap_err(), Error::Loop("a".into()));
        g.add_edge(0, 1).unwrap();
        assert!(matches!(g.add_edge(1, 0), Err(Error::DuplicateEdge(..))));
        let many: Vec<String> = (0..65).map(|i| format!("v{i}")).collect();
        assert!(matches!(Graph::new(many), Err(Error::TooManyVertices { .. })));
    }
}
