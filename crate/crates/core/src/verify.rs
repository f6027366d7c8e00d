//! Per-graph property checks and the suites that run them over corpora.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::classify::{classify, Status, VwcLabeling};
use crate::complexes::{
    cover_ideal_splitting_check, independence_complex, is_pure, is_pure_shellable_with, is_vertex_decomposable,
    Shelling, ShellingLimits,
};
use crate::error::{Error, Result};
use crate::graph::{max_3disjoint, minimal_vertex_covers, three_disjoint_unchecked, Graph};
use crate::homology::{is_cohen_macaulay_reisner, projective_dimension_of_dual, regularity, Field, DEFAULT_CAP};
use crate::io::{digest, write_edge_list};
use crate::reduction::{acyclic_reduction, antichain_regularity, associated_primes};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    TheoremA,
    TheoremB,
    Terai,
    Katzman,
    Ass,
    Reduction,
    Splitting,
}

impl Suite {
    pub const ALL: [Suite; 7] =
        [Suite::TheoremA, Suite::TheoremB, Suite::Terai, Suite::Katzman, Suite::Ass, Suite::Reduction, Suite::Splitting];

    pub fn name(self) -> &'static str {
        match self {
            Suite::TheoremA => "theorem-a",
            Suite::TheoremB => "theorem-b",
            Suite::Terai => "terai",
            Suite::Katzman => "katzman",
            Suite::Ass => "ass",
            Suite::Reduction => "reduction",
            Suite::Splitting => "splitting",
        }
    }

    /// Whether the suite's property is stated for every graph, not only very
    /// well-covered ones.
    pub fn any_graph(self) -> bool {
        matches!(self, Suite::Terai | Suite::Katzman)
    }

    pub fn check(self, g: &Graph, opts: &CheckOptions) -> Outcome {
        let r = match self {
            Suite::TheoremA => check_cm_equivalence(g, opts),
            Suite::TheoremB => check_regularity_formula(g, opts),
            Suite::Terai => check_terai(g, opts),
            Suite::Katzman => check_katzman(g, opts),
            Suite::Ass => check_ass(g),
            Suite::Reduction => check_reduction(g, opts),
            Suite::Splitting => check_splitting(g),
        };
        r.unwrap_or_else(Outcome::from_error)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown suite `{s}`")))
    }
}

#[derive(Debug, Clone)]
pub struct CheckOptions {
    pub fields: Vec<Field>,
    pub cap: usize,
    pub shelling: ShellingLimits,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions { fields: Field::BOTH.to_vec(), cap: DEFAULT_CAP, shelling: ShellingLimits::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", content = "detail", rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail(String),
    /// Not applicable to this graph.
    Skip(String),
    /// An oracle cap was hit; the property was not decided.
    Limit(String),
}

impl Outcome {
    fn from_error(e: Error) -> Self {
        match e {
            Error::OracleLimit { .. } => Outcome::Limit(e.to_string()),
            e => Outcome::Fail(e.to_string()),
        }
    }

    fn expect(ok: bool, detail: impl FnOnce() -> String) -> Self {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail(detail())
        }
    }
}

/// The unmixed labeling, or the reason there is none.
fn unmixed_labeling(g: &Graph) -> std::result::Result<(Status, VwcLabeling), Outcome> {
    let c = classify(g);
    match (c.status, c.labeling) {
        (s @ (Status::VwcCohenMacaulay | Status::VwcUnmixedNotCM), Some(lab)) => Ok((s, lab)),
        (s, _) => Err(Outcome::Skip(format!("status {s:?}"))),
    }
}

fn check_cap(g: &Graph, cap: usize) -> Result<()> {
    let n = g.without_isolated().vertex_count();
    if n > cap {
        return Err(Error::OracleLimit { vertices: n, cap });
    }
    Ok(())
}

/// Reisner (each field), pure shellable, pure vertex decomposable, and the
/// acyclicity classification all agree.
pub fn check_cm_equivalence(g: &Graph, opts: &CheckOptions) -> Result<Outcome> {
    let status = match unmixed_labeling(g) {
        Ok((s, _)) => s,
        Err(o) => return Ok(o),
    };
    check_cap(g, opts.cap)?;
    let c = independence_complex(g);
    let pure = is_pure(&c);
    let shellable = match is_pure_shellable_with(&c, opts.shelling) {
        Shelling::Undecided { reason } => return Ok(Outcome::Limit(format!("shellability undecided: {reason}"))),
        s => s.is_shellable(),
    };
    let vd = is_vertex_decomposable(&c).decomposable;
    let cm: Vec<(Field, bool)> = opts.fields.iter().map(|&f| (f, is_cohen_macaulay_reisner(&c, f))).collect();
    let acyclic = status == Status::VwcCohenMacaulay;
    let values = [pure && shellable, pure && vd, acyclic];
    let ok = cm.iter().map(|&(_, b)| b).chain(values).all(|b| b == acyclic);
    Ok(Outcome::expect(ok, || {
        format!("reisner {cm:?}, pure {pure}, shellable {shellable}, vertex decomposable {vd}, acyclic {acyclic}")
    }))
}

/// `reg` (each field) = `a(G)` = the antichain maximum over `𝔡_G` and over `𝔡̂`,
/// and the maximizing antichain gives a 3-disjoint edge set.
pub fn check_regularity_formula(g: &Graph, opts: &CheckOptions) -> Result<Outcome> {
    let lab = match unmixed_labeling(g) {
        Ok((_, lab)) => lab,
        Err(o) => return Ok(o),
    };
    let regs = opts.fields.iter().map(|&f| Ok((f, regularity(g, f, opts.cap)?))).collect::<Result<Vec<_>>>()?;
    let a = max_3disjoint(g).size;
    let ar = antichain_regularity(g, &lab)?;
    let edges: Vec<(usize, usize)> = ar.witness.iter().map(|&i| (lab.x(i), lab.y(i))).collect();
    let disjoint = edges
        .iter()
        .enumerate()
        .all(|(p, &e)| edges[p + 1..].iter().all(|&f| three_disjoint_unchecked(g, e, f)));
    let ok = regs.iter().all(|&(_, r)| r == a) && ar.via_dg == a && ar.via_dhat == a && disjoint;
    Ok(Outcome::expect(ok, || {
        format!(
            "reg {regs:?}, a {a}, antichain over semidirected graph {}, over reduction {}, witness 3-disjoint {disjoint}",
            ar.via_dg, ar.via_dhat
        )
    }))
}

/// `reg(R/I(G)) = pd(I(G)^∨)` in each field.
pub fn check_terai(g: &Graph, opts: &CheckOptions) -> Result<Outcome> {
    let mut sides = Vec::new();
    for &f in &opts.fields {
        sides.push((f, regularity(g, f, opts.cap)?, projective_dimension_of_dual(g, f, opts.cap)?));
    }
    Ok(Outcome::expect(sides.iter().all(|&(_, r, p)| r == p), || format!("(field, reg, pd of dual): {sides:?}")))
}

/// `reg(R/I(G)) ≥ a(G)` in each field.
pub fn check_katzman(g: &Graph, opts: &CheckOptions) -> Result<Outcome> {
    let a = max_3disjoint(g).size;
    let regs = opts.fields.iter().map(|&f| Ok((f, regularity(g, f, opts.cap)?))).collect::<Result<Vec<_>>>()?;
    Ok(Outcome::expect(regs.iter().all(|&(_, r)| r >= a), || format!("reg {regs:?} below a {a}")))
}

/// The antichain primes are exactly the minimal vertex covers, and each is
/// closed upward in `𝔡_G` on its `y` side.
pub fn check_ass(g: &Graph) -> Result<Outcome> {
    let lab = match unmixed_labeling(g) {
        Ok((_, lab)) => lab,
        Err(o) => return Ok(o),
    };
    let primes = associated_primes(g, &lab)?;
    let mut covers: Vec<VertexSet> = primes.iter().map(|p| p.vertex_cover(&lab)).collect();
    covers.sort();
    let expected = minimal_vertex_covers(g);
    if covers != expected {
        return Ok(Outcome::Fail(format!("primes give covers {covers:?}, enumeration gives {expected:?}")));
    }
    let reach = acyclic_reduction(g, &lab)?.dg.reachability();
    for p in &primes {
        for i in p.ys.iter() {
            if !reach[i].is_subset(p.ys) {
                return Ok(Outcome::Fail(format!("prime {p:?} has y_{} but misses part of {:?}", i + 1, reach[i])));
            }
        }
    }
    Ok(Outcome::Pass)
}

/// `Ĝ` is Cohen–Macaulay very well-covered, `reg(G) = reg(Ĝ) = pd(I(Ĝ)^∨)`,
/// `𝔡̂` is acyclic, and `Ĝ = G` when `G` is already Cohen–Macaulay.
pub fn check_reduction(g: &Graph, opts: &CheckOptions) -> Result<Outcome> {
    let (status, lab) = match unmixed_labeling(g) {
        Ok(x) => x,
        Err(o) => return Ok(o),
    };
    let red = acyclic_reduction(g, &lab)?;
    let hat_status = classify(&red.ghat).status;
    let mut sides = Vec::new();
    for &f in &opts.fields {
        sides.push((
            f,
            regularity(g, f, opts.cap)?,
            regularity(&red.ghat, f, opts.cap)?,
            projective_dimension_of_dual(&red.ghat, f, opts.cap)?,
        ));
    }
    let identity = status != Status::VwcCohenMacaulay || red.is_identity_on(g, &lab);
    let ok = hat_status == Status::VwcCohenMacaulay
        && red.dhat.is_acyclic()
        && identity
        && sides.iter().all(|&(_, r, rh, p)| r == rh && rh == p);
    Ok(Outcome::expect(ok, || {
        format!(
            "reduction status {hat_status:?}, acyclic {}, identity {identity}, (field, reg, reg of reduction, pd of its dual): {sides:?}",
            red.dhat.is_acyclic()
        )
    }))
}

/// Both cover-ideal identities hold for Cohen–Macaulay graphs in `(∗∗)` order.
pub fn check_splitting(g: &Graph) -> Result<Outcome> {
    let lab = match unmixed_labeling(g) {
        Ok((Status::VwcCohenMacaulay, lab)) => lab,
        Ok((s, _)) => return Ok(Outcome::Skip(format!("status {s:?}"))),
        Err(o) => return Ok(o),
    };
    Ok(Outcome::expect(cover_ideal_splitting_check(g, &lab)?, || "identity (1) or (2) fails".into()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub digest: String,
    /// Edge-list text of the counterexample.
    pub graph: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteSummary {
    pub suite: Suite,
    pub checked: usize,
    pub passed: usize,
    pub skipped: usize,
    /// Graphs on which an oracle cap was hit, sorted by digest.
    pub limited: Vec<Failure>,
    /// Counterexamples, sorted by digest.
    pub failures: Vec<Failure>,
}

impl SuiteSummary {
    pub fn ok(&self) -> bool {
        self.failures.is_empty() && self.limited.is_empty()
    }
}

/// Runs `suite` on every graph of `corpus` in parallel.
pub fn run_suite(suite: Suite, corpus: &[Graph], opts: &CheckOptions) -> SuiteSummary {
    let outcomes: Vec<Outcome> = corpus.par_iter().map(|g| suite.check(g, opts)).collect();
    let mut summary =
        SuiteSummary { suite, checked: corpus.len(), passed: 0, skipped: 0, limited: Vec::new(), failures: Vec::new() };
    let record = |g: &Graph, detail: String| Failure { digest: digest(g), graph: write_edge_list(g), detail };
    for (g, o) in corpus.iter().zip(outcomes) {
        match o {
            Outcome::Pass => summary.passed += 1,
            Outcome::Skip(_) => summary.skipped += 1,
            Outcome::Limit(d) => summary.limited.push(record(g, d)),
            Outcome::Fail(d) => summary.failures.push(record(g, d)),
        }
    }
    summary.limited.sort_by(|a, b| a.digest.cmp(&b.digest));
    summary.failures.sort_by(|a, b| a.digest.cmp(&b.digest));
    summary
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{enumerate_vwc, random_graph};

    fn c4() -> Graph {
        Graph::from_edges(&["a", "b", "c", "d"], &[("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")]).unwrap()
    }

    #[test]
    fn suites_pass_on_small_examples() {
        let opts = CheckOptions::default();
        let corpus: Vec<Graph> = enumerate_vwc(2).unwrap().collect();
        for suite in Suite::ALL {
            let s = run_suite(suite, &corpus, &opts);
            assert!(s.ok(), "{suite}: {:?}", s.failures);
            assert_eq!(s.checked, corpus.len());
        }
    }

    #[test]
    fn inapplicable_graphs_are_skipped() {
        let c5 = Graph::from_edges(
            &["a", "b", "c", "d", "e"],
            &[("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "a")],
        )
        .unwrap();
        let opts = CheckOptions::default();
        assert!(matches!(Suite::TheoremB.check(&c5, &opts), Outcome::Skip(_)));
        assert_eq!(Suite::Katzman.check(&c5, &opts), Outcome::Pass);
        assert_eq!(Suite::Terai.check(&c5, &opts), Outcome::Pass);
        assert!(matches!(Suite::Splitting.check(&c4(), &opts), Outcome::Skip(_)));
    }

    #[test]
    fn oracle_limit_is_reported() {
        let g = random_graph(10, 0.3, 1).unwrap();
        let opts = CheckOptions { cap: 4, ..CheckOptions::default() };
        assert!(matches!(Suite::Terai.check(&g, &opts), Outcome::Limit(_)));
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("theorem-c".parse::<Suite>().is_err());
    }
}
