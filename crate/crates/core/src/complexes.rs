//! Simplicial complexes given by facets, square-free monomial ideals, and the
//! combinatorial deciders: purity, vertex decomposability and pure shellability.

use std::collections::{HashMap, HashSet};
use std::sync::Mutex;

use serde::Serialize;

use crate::classify::{check_unmixed_conditions, VwcLabeling};
use crate::error::{Error, Result};
use crate::graph::{maximal_independent_sets, maximal_independent_sets_within, minimal_vertex_covers, Graph};
use crate::vertex_set::VertexSet;

/// Keeps the inclusion-maximal sets, sorted and deduplicated.
fn maximalize(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_by_key(|s| std::cmp::Reverse(s.len()));
    let mut out: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !out.iter().any(|t| s.is_subset(*t)) {
            out.push(s);
        }
    }
    out.sort();
    out
}

/// Keeps the inclusion-minimal sets, sorted and deduplicated.
fn minimalize(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_by_key(|s| s.len());
    let mut out: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !out.iter().any(|t| t.is_subset(s)) {
            out.push(s);
        }
    }
    out.sort();
    out
}

/// A simplicial complex over an ordered ambient vertex list, stored by its facets.
///
/// No facets is the void complex; the single facet `∅` is the irrelevant complex `{∅}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Vec<String>,
    facets: Vec<VertexSet>,
}

impl SimplicialComplex {
    /// Builds a complex from generating faces; non-maximal ones are dropped.
    pub fn new(vertices: Vec<String>, faces: Vec<VertexSet>) -> Result<Self> {
        if vertices.len() > 64 {
            return Err(Error::TooManyVertices { got: vertices.len(), max: 64 });
        }
        let ambient = VertexSet::full(vertices.len());
        if let Some(f) = faces.iter().find(|f| !f.is_subset(ambient)) {
            return Err(Error::Precondition(format!("face {f:?} uses an unknown vertex")));
        }
        Ok(SimplicialComplex { vertices, facets: maximalize(faces) })
    }

    pub fn from_label_facets(vertices: &[&str], facets: &[&[&str]]) -> Result<Self> {
        let verts: Vec<String> = vertices.iter().map(|s| s.to_string()).collect();
        let pos = |l: &str| verts.iter().position(|v| v == l).ok_or_else(|| Error::UnknownVertex(l.into()));
        let faces = facets
            .iter()
            .map(|f| f.iter().map(|l| pos(l)).collect::<Result<VertexSet>>())
            .collect::<Result<Vec<_>>>()?;
        Self::new(verts, faces)
    }

    pub fn void(vertices: Vec<String>) -> Self {
        SimplicialComplex { vertices, facets: Vec::new() }
    }

    pub fn irrelevant(vertices: Vec<String>) -> Self {
        SimplicialComplex { vertices, facets: vec![VertexSet::EMPTY] }
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn face_labels(&self, f: VertexSet) -> Vec<String> {
        f.iter().map(|v| self.vertices[v].clone()).collect()
    }

    pub fn face_from_labels(&self, labels: &[&str]) -> Result<VertexSet> {
        labels
            .iter()
            .map(|l| self.vertices.iter().position(|v| v == l).ok_or_else(|| Error::UnknownVertex(l.to_string())))
            .collect()
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Vertices that lie in some face.
    pub fn support(&self) -> VertexSet {
        self.facets.iter().fold(VertexSet::EMPTY, |a, f| a.union(*f))
    }

    pub fn is_face(&self, f: VertexSet) -> bool {
        self.facets.iter().any(|g| f.is_subset(*g))
    }

    /// Dimension, `None` for the void complex.
    pub fn dim(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.len() as isize - 1).max()
    }

    /// Every face, ordered by size and then lexicographically.
    pub fn faces(&self) -> Vec<VertexSet> {
        let mut seen: HashSet<VertexSet> = HashSet::new();
        for f in &self.facets {
            seen.extend(f.subsets());
        }
        let mut faces: Vec<VertexSet> = seen.into_iter().collect();
        faces.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        faces
    }

    /// The subcomplex of faces inside `w`.
    pub fn restrict(&self, w: VertexSet) -> SimplicialComplex {
        let faces = self.facets.iter().map(|f| f.intersection(w)).collect();
        SimplicialComplex { vertices: self.vertices.clone(), facets: maximalize(faces) }
    }

    fn with_facets(&self, facets: Vec<VertexSet>) -> SimplicialComplex {
        SimplicialComplex { vertices: self.vertices.clone(), facets: maximalize(facets) }
    }

    fn face_name(&self, f: VertexSet) -> String {
        format!("{{{}}}", self.face_labels(f).join(","))
    }

    /// `lk(F) = {G ∈ Δ : G ∩ F = ∅, G ∪ F ∈ Δ}`.
    pub fn link(&self, f: VertexSet) -> Result<SimplicialComplex> {
        if !self.is_face(f) {
            return Err(Error::NotAFace(self.face_name(f)));
        }
        Ok(self.link_unchecked(f))
    }

    fn link_unchecked(&self, f: VertexSet) -> SimplicialComplex {
        self.with_facets(self.facets.iter().filter(|g| f.is_subset(**g)).map(|g| g.difference(f)).collect())
    }

    /// `del(F) = {G ∈ Δ : G ∩ F = ∅}`.
    pub fn deletion(&self, f: VertexSet) -> Result<SimplicialComplex> {
        if !self.is_face(f) {
            return Err(Error::NotAFace(self.face_name(f)));
        }
        Ok(self.deletion_unchecked(f))
    }

    fn deletion_unchecked(&self, f: VertexSet) -> SimplicialComplex {
        self.with_facets(self.facets.iter().map(|g| g.difference(f)).collect())
    }

    /// Facets sorted, vertices renamed by first occurrence, facets re-sorted.
    /// Complexes with equal keys are equal up to renaming vertices.
    fn canonical_key(&self) -> Vec<u64> {
        let mut rename = [u8::MAX; 64];
        let mut next = 0u8;
        for f in &self.facets {
            for v in f.iter() {
                if rename[v] == u8::MAX {
                    rename[v] = next;
                    next += 1;
                }
            }
        }
        let mut key: Vec<u64> = self
            .facets
            .iter()
            .map(|f| f.iter().fold(0u64, |acc, v| acc | 1u64 << rename[v]))
            .collect();
        key.sort_unstable();
        key
    }

    /// The Stanley–Reisner complex of a square-free ideal: sets containing no generator.
    pub fn from_stanley_reisner(ideal: &SquarefreeMonomialIdeal) -> Result<Self> {
        let n = ideal.variables.len();
        if n > 24 {
            return Err(Error::OracleLimit { vertices: n, cap: 24 });
        }
        let faces: Vec<VertexSet> = VertexSet::full(n)
            .subsets()
            .filter(|s| !ideal.generators.iter().any(|g| g.is_subset(*s)))
            .collect();
        Self::new(ideal.variables.clone(), faces)
    }
}

/// `Δ_G`: faces are the independent sets of `g`.
pub fn independence_complex(g: &Graph) -> SimplicialComplex {
    SimplicialComplex { vertices: g.labels().to_vec(), facets: maximal_independent_sets(g) }
}

pub fn link(c: &SimplicialComplex, f: VertexSet) -> Result<SimplicialComplex> {
    c.link(f)
}

pub fn deletion(c: &SimplicialComplex, f: VertexSet) -> Result<SimplicialComplex> {
    c.deletion(f)
}

/// All facets have the same size. The void complex counts as pure.
pub fn is_pure(c: &SimplicialComplex) -> bool {
    c.facets.windows(2).all(|w| w[0].len() == w[1].len())
}

/// How a complex was shown (not) to be vertex decomposable.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum VdCertificate {
    Void,
    /// A single facet, including `{∅}`.
    Simplex,
    /// A shedding vertex with certificates for its link and deletion.
    Shed { vertex: String, link: Box<VdCertificate>, deletion: Box<VdCertificate> },
    /// Every listed vertex failed as a shedding vertex.
    Exhausted { tried: Vec<String> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VdResult {
    pub decomposable: bool,
    pub certificate: VdCertificate,
}

/// Memo table for vertex decomposability, keyed by canonical facet form.
/// Safe to share between threads.
#[derive(Debug, Default)]
pub struct VdMemo {
    table: Mutex<HashMap<Vec<u64>, bool>>,
}

impl VdMemo {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.table.lock().expect("memo poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn get(&self, key: &[u64]) -> Option<bool> {
        self.table.lock().expect("memo poisoned").get(key).copied()
    }

    fn put(&self, key: Vec<u64>, value: bool) {
        self.table.lock().expect("memo poisoned").insert(key, value);
    }
}

/// Whether every facet of `del({x})` is a facet of `c`.
fn is_shedding(c: &SimplicialComplex, x: usize) -> bool {
    c.facets.iter().filter(|f| f.contains(x)).all(|f| {
        let rest = f.without(x);
        c.facets.iter().any(|g| !g.contains(x) && rest.is_subset(*g))
    })
}

/// Candidate shedding vertices: vertices `y` with `N[x] ⊆ N[y]` for some
/// degree-one `x` of the 1-skeleton's complement graph first, then other
/// dominating vertices, then the rest in vertex order.
fn shedding_candidates(c: &SimplicialComplex) -> Vec<usize> {
    let support = c.support();
    let verts: Vec<usize> = support.iter().collect();
    let mut nbr: HashMap<usize, VertexSet> = HashMap::new();
    for &u in &verts {
        let n: VertexSet =
            verts.iter().copied().filter(|&v| v != u && !c.is_face(VertexSet::singleton(u).with(v))).collect();
        nbr.insert(u, n);
    }
    let closed = |v: usize| nbr[&v].with(v);
    let mut rank: Vec<(u8, usize)> = verts
        .iter()
        .map(|&y| {
            let dominated: Vec<usize> =
                verts.iter().copied().filter(|&x| x != y && closed(x).is_subset(closed(y))).collect();
            let r = if dominated.iter().any(|&x| nbr[&x].len() == 1) {
                0
            } else if !dominated.is_empty() {
                1
            } else {
                2
            };
            (r, y)
        })
        .collect();
    rank.sort();
    rank.into_iter().map(|(_, v)| v).collect()
}

fn vd_decide(c: &SimplicialComplex, memo: &VdMemo) -> bool {
    if c.facets.len() <= 1 {
        return true;
    }
    let key = c.canonical_key();
    if let Some(v) = memo.get(&key) {
        return v;
    }
    let result = shedding_candidates(c).into_iter().any(|x| {
        is_shedding(c, x)
            && vd_decide(&c.link_unchecked(VertexSet::singleton(x)), memo)
            && vd_decide(&c.deletion_unchecked(VertexSet::singleton(x)), memo)
    });
    memo.put(key, result);
    result
}

fn vd_certificate(c: &SimplicialComplex, memo: &VdMemo) -> VdCertificate {
    if c.is_void() {
        return VdCertificate::Void;
    }
    if c.facets.len() == 1 {
        return VdCertificate::Simplex;
    }
    let candidates = shedding_candidates(c);
    for &x in &candidates {
        if !is_shedding(c, x) {
            continue;
        }
        let lk = c.link_unchecked(VertexSet::singleton(x));
        let del = c.deletion_unchecked(VertexSet::singleton(x));
        if vd_decide(&lk, memo) && vd_decide(&del, memo) {
            return VdCertificate::Shed {
                vertex: c.vertices[x].clone(),
                link: Box::new(vd_certificate(&lk, memo)),
                deletion: Box::new(vd_certificate(&del, memo)),
            };
        }
    }
    VdCertificate::Exhausted { tried: candidates.into_iter().map(|v| c.vertices[v].clone()).collect() }
}

pub fn is_vertex_decomposable(c: &SimplicialComplex) -> VdResult {
    is_vertex_decomposable_with(c, &VdMemo::new())
}

/// Vertex decomposability reusing (and extending) a shared memo table.
pub fn is_vertex_decomposable_with(c: &SimplicialComplex, memo: &VdMemo) -> VdResult {
    let decomposable = vd_decide(c, memo);
    let certificate = vd_certificate(c, memo);
    VdResult { decomposable, certificate }
}

/// Bounds on the shelling search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShellingLimits {
    pub max_facets: usize,
    /// Facet subsets the search may visit before giving up.
    pub max_states: usize,
}

impl Default for ShellingLimits {
    fn default() -> Self {
        ShellingLimits { max_facets: 16, max_states: 2_000_000 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum Shelling {
    Shellable { order: Vec<VertexSet> },
    NotShellable,
    NotPure,
    Undecided { reason: String },
}

impl Shelling {
    pub fn is_shellable(&self) -> bool {
        matches!(self, Shelling::Shellable { .. })
    }

    pub fn is_decided(&self) -> bool {
        !matches!(self, Shelling::Undecided { .. })
    }
}

pub fn is_pure_shellable(c: &SimplicialComplex) -> Shelling {
    is_pure_shellable_with(c, ShellingLimits::default())
}

/// Searches for a shelling order.
///
/// Whether a facet may follow a prefix depends only on the set of facets in the
/// prefix, so the search runs over facet subsets and remembers dead ones.
pub fn is_pure_shellable_with(c: &SimplicialComplex, limits: ShellingLimits) -> Shelling {
    if !is_pure(c) {
        return Shelling::NotPure;
    }
    let facets = &c.facets;
    let m = facets.len();
    if m > limits.max_facets || m > 64 {
        return Shelling::Undecided { reason: format!("limit: {m} facets exceeds {}", limits.max_facets) };
    }
    if m <= 1 {
        return Shelling::Shellable { order: facets.clone() };
    }

    let can_follow = |prefix: u64, j: usize| -> bool {
        let fj = facets[j];
        let prev = || (0..m).filter(move |&i| prefix >> i & 1 == 1);
        let ridges: VertexSet = prev()
            .filter_map(|l| {
                let d = fj.difference(facets[l]);
                (d.len() == 1).then_some(d)
            })
            .fold(VertexSet::EMPTY, |a, d| a.union(d));
        prev().all(|i| !fj.difference(facets[i]).is_disjoint(ridges))
    };

    struct Search<'a> {
        m: usize,
        full: u64,
        dead: HashSet<u64>,
        states: usize,
        limit: usize,
        order: Vec<usize>,
        can_follow: &'a dyn Fn(u64, usize) -> bool,
    }
    impl Search<'_> {
        fn run(&mut self, prefix: u64) -> Option<bool> {
            if prefix == self.full {
                return Some(true);
            }
            if self.dead.contains(&prefix) {
                return Some(false);
            }
            self.states += 1;
            if self.states > self.limit {
                return None;
            }
            for j in 0..self.m {
                if prefix >> j & 1 == 0 && (prefix == 0 || (self.can_follow)(prefix, j)) {
                    self.order.push(j);
                    if self.run(prefix | 1u64 << j)? {
                        return Some(true);
                    }
                    self.order.pop();
                }
            }
            self.dead.insert(prefix);
            Some(false)
        }
    }

    let full = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
    let mut s =
        Search { m, full, dead: HashSet::new(), states: 0, limit: limits.max_states, order: Vec::new(), can_follow: &can_follow };
    match s.run(0) {
        Some(true) => Shelling::Shellable { order: s.order.iter().map(|&j| facets[j]).collect() },
        Some(false) => Shelling::NotShellable,
        None => Shelling::Undecided { reason: format!("limit: more than {} search states", limits.max_states) },
    }
}

/// Checks the shelling condition for a given facet order.
pub fn is_shelling_order(order: &[VertexSet]) -> bool {
    (1..order.len()).all(|j| {
        (0..j).all(|i| {
            order[j]
                .difference(order[i])
                .iter()
                .any(|v| (0..j).any(|l| order[j].difference(order[l]) == VertexSet::singleton(v)))
        })
    })
}

/// A square-free monomial ideal, one generator per variable subset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquarefreeMonomialIdeal {
    variables: Vec<String>,
    generators: Vec<VertexSet>,
}

impl SquarefreeMonomialIdeal {
    /// Keeps the minimal generators.
    pub fn new(variables: Vec<String>, generators: Vec<VertexSet>) -> Self {
        SquarefreeMonomialIdeal { variables, generators: minimalize(generators) }
    }

    pub fn edge_ideal(g: &Graph) -> Self {
        let gens = g.edges().into_iter().map(|(u, v)| VertexSet::singleton(u).with(v)).collect();
        Self::new(g.labels().to_vec(), gens)
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn generators(&self) -> &[VertexSet] {
        &self.generators
    }

    pub fn generator_labels(&self) -> Vec<Vec<String>> {
        self.generators.iter().map(|g| g.iter().map(|v| self.variables[v].clone()).collect()).collect()
    }

    /// Whether the ideal is the whole ring.
    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(|g| g.is_empty())
    }

    /// `I^∨`, generated by the minimal transversals of the generators (Berge's algorithm).
    pub fn alexander_dual(&self) -> Self {
        let mut transversals = vec![VertexSet::EMPTY];
        for &gen in &self.generators {
            let mut next = Vec::new();
            for &t in &transversals {
                if !t.is_disjoint(gen) {
                    next.push(t);
                } else {
                    next.extend(gen.iter().map(|v| t.with(v)));
                }
            }
            transversals = minimalize(next);
        }
        Self::new(self.variables.clone(), transversals)
    }

    /// `m · I` for the square-free monomial `m`; generators stay square-free
    /// when `m` is disjoint from their supports.
    pub fn times(&self, m: VertexSet) -> Self {
        Self::new(self.variables.clone(), self.generators.iter().map(|g| g.union(m)).collect())
    }

    pub fn sum(&self, other: &Self) -> Self {
        let gens = self.generators.iter().chain(&other.generators).copied().collect();
        Self::new(self.variables.clone(), gens)
    }

    /// Generated by the pairwise lcms.
    pub fn intersection(&self, other: &Self) -> Self {
        let gens = self.generators.iter().flat_map(|a| other.generators.iter().map(move |b| a.union(*b))).collect();
        Self::new(self.variables.clone(), gens)
    }
}

/// `I(G)^∨`, generated by the minimal vertex covers.
pub fn cover_ideal(g: &Graph) -> SquarefreeMonomialIdeal {
    SquarefreeMonomialIdeal::new(g.labels().to_vec(), minimal_vertex_covers(g))
}

/// Cover ideal of the induced subgraph on `within`, in the variables of `g`.
fn cover_ideal_within(g: &Graph, within: VertexSet) -> SquarefreeMonomialIdeal {
    let covers = maximal_independent_sets_within(g, within).into_iter().map(|s| within.difference(s)).collect();
    SquarefreeMonomialIdeal::new(g.labels().to_vec(), covers)
}

/// Checks the two splitting identities for the cover ideal of a Cohen–Macaulay
/// very well-covered graph, split along the first pair of a `(∗∗)` labeling:
///
/// 1. `I(G)^∨ = x₁·I(G'')^∨ + m·I(G')^∨`
/// 2. `x₁·I(G'')^∨ ∩ m·I(G')^∨ = x₁·m·I(G')^∨`
///
/// where `m` is the product over `N(x₁)`, `G' = G ∖ N[x₁]` and `G'' = G ∖ N[y₁]`.
pub fn cover_ideal_splitting_check(g: &Graph, lab: &VwcLabeling) -> Result<bool> {
    if !check_unmixed_conditions(g, lab)?.is_empty() {
        return Err(Error::Precondition("graph is not unmixed under this labeling".into()));
    }
    if !lab.satisfies_star_star(g) {
        return Err(Error::Precondition("labeling does not satisfy (∗∗)".into()));
    }
    let (x1, y1) = (lab.x(0), lab.y(0));
    if g.degree(y1) != 1 {
        return Err(Error::Precondition(format!("deg({}) = {} after relabeling", g.label(y1), g.degree(y1))));
    }
    let all = g.vertices();
    let g_prime = all.difference(g.closed_neighborhood(x1));
    let g_second = all.difference(g.closed_neighborhood(y1));
    let m = g.neighbors(x1);
    let x1_mono = VertexSet::singleton(x1);

    let left = cover_ideal_within(g, g_second).times(x1_mono);
    let right = cover_ideal_within(g, g_prime).times(m);

    let sum_holds = cover_ideal(g) == left.sum(&right);
    let meet_holds = left.intersection(&right) == cover_ideal_within(g, g_prime).times(m.with(x1));
    Ok(sum_holds && meet_holds)
}
