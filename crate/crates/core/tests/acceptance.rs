//! Acceptance criteria, one line each. Exact integer comparisons throughout.
//!
//! Independent oracles (brute-force cover enumeration, brute-force
//! 3-disjoint sets) live in this file and share no code with the library
//! routines they check.

use std::process::ExitCode;
use std::time::Instant;

use rayon::prelude::*;

use vwc::classify::{check_unmixed_conditions, classify, Status};
use vwc::complexes::{
    cover_ideal_splitting_check, independence_complex, is_pure, is_pure_shellable_with, is_vertex_decomposable,
    Shelling, ShellingLimits, SimplicialComplex,
};
use vwc::generators::{enumerate_candidates, enumerate_vwc, pair_labeling, random_graph_batch, random_vwc_batch};
use vwc::graph::{max_3disjoint, Graph};
use vwc::homology::{
    betti_table_hochster, is_cohen_macaulay_reisner, projective_dimension_of_dual, reduced_homology_ranks, regularity,
    Field,
};
use vwc::io::write_edge_list;
use vwc::reduction::{acyclic_reduction, antichain_regularity, associated_primes};
use vwc::VertexSet;

const SEED_VWC: u64 = 20261016;
const SEED_ANY: u64 = 8;
const RANDOM_VWC: usize = 500;
const RANDOM_ANY: usize = 200;
const CAP: usize = 16;

/// Largest facet count of an independence complex with 5 pairs is 2^5.
const SHELLING: ShellingLimits = ShellingLimits { max_facets: 32, max_states: 2_000_000 };

type Outcome = Result<String, String>;

fn vwc_corpus() -> Vec<Graph> {
    let mut out: Vec<Graph> = enumerate_vwc(1).unwrap().chain(enumerate_vwc(2).unwrap()).collect();
    out.extend(random_vwc_batch(5, RANDOM_VWC, SEED_VWC).expect("random corpus"));
    out
}

fn any_corpus() -> Vec<Graph> {
    random_graph_batch(8, RANDOM_ANY, SEED_ANY).expect("random corpus")
}

/// Every subset of the vertex set that meets every edge and has no
/// removable vertex.
fn brute_minimal_covers(g: &Graph) -> Vec<VertexSet> {
    let n = g.vertex_count();
    let edges = g.edges();
    let covers = |s: u64| edges.iter().all(|&(u, v)| s >> u & 1 == 1 || s >> v & 1 == 1);
    let mut out: Vec<VertexSet> = (0u64..1 << n)
        .filter(|&s| covers(s) && (0..n).all(|v| s >> v & 1 == 0 || !covers(s & !(1 << v))))
        .map(VertexSet)
        .collect();
    out.sort();
    out
}

/// Largest set of edges, pairwise disjoint with no edge of `g` joining them.
fn brute_a(g: &Graph) -> usize {
    let edges = g.edges();
    let ok = |e: (usize, usize), f: (usize, usize)| {
        let (a, b) = e;
        let (c, d) = f;
        a != c && a != d && b != c && b != d && ![(a, c), (a, d), (b, c), (b, d)].iter().any(|&(p, q)| g.has_edge(p, q))
    };
    fn grow(edges: &[(usize, usize)], ok: &dyn Fn((usize, usize), (usize, usize)) -> bool, chosen: &mut Vec<(usize, usize)>, start: usize) -> usize {
        let mut best = chosen.len();
        for i in start..edges.len() {
            if chosen.iter().all(|&c| ok(c, edges[i])) {
                chosen.push(edges[i]);
                best = best.max(grow(edges, ok, chosen, i + 1));
                chosen.pop();
            }
        }
        best
    }
    grow(&edges, &ok, &mut Vec::new(), 0)
}

/// Runs `check` on every graph in parallel; the first failure (in corpus
/// order) is reported with the graph.
fn over(corpus: &[Graph], check: impl Fn(&Graph) -> Result<(), String> + Sync) -> Result<usize, String> {
    let results: Vec<Result<(), String>> = corpus.par_iter().map(&check).collect();
    for (g, r) in corpus.iter().zip(results) {
        if let Err(e) = r {
            return Err(format!("{e}\n{}", write_edge_list(g)));
        }
    }
    Ok(corpus.len())
}

fn unmixed(g: &Graph) -> (Status, vwc::VwcLabeling) {
    let c = classify(g);
    (c.status, c.labeling.expect("corpus graphs are unmixed very well-covered"))
}

fn criterion_1(corpus: &[Graph]) -> Outcome {
    let n = over(corpus, |g| {
        let (status, _) = unmixed(g);
        let c = independence_complex(g);
        let gf2 = is_cohen_macaulay_reisner(&c, Field::Gf2);
        let q = is_cohen_macaulay_reisner(&c, Field::Rationals);
        let shell = match is_pure_shellable_with(&c, SHELLING) {
            Shelling::Undecided { reason } => return Err(format!("shellability undecided: {reason}")),
            s => s.is_shellable(),
        };
        let pure = is_pure(&c);
        let vd = is_vertex_decomposable(&c).decomposable;
        let acyclic = status == Status::VwcCohenMacaulay;
        let all = [gf2, q, pure && shell, pure && vd, acyclic];
        if all.iter().all(|&b| b == gf2) {
            Ok(())
        } else {
            Err(format!("reisner gf2 {gf2}, q {q}, pure shellable {}, pure vd {}, acyclic {acyclic}", pure && shell, pure && vd))
        }
    })?;
    Ok(format!("{n} graphs"))
}

fn criterion_2(corpus: &[Graph]) -> Outcome {
    let n = over(corpus, |g| {
        let (_, lab) = unmixed(g);
        let a = max_3disjoint(g).size;
        let ar = antichain_regularity(g, &lab).map_err(|e| e.to_string())?;
        let gf2 = regularity(g, Field::Gf2, CAP).map_err(|e| e.to_string())?;
        let q = regularity(g, Field::Rationals, CAP).map_err(|e| e.to_string())?;
        let vals = [gf2, q, a, ar.via_dg, ar.via_dhat];
        if vals.iter().all(|&v| v == a) {
            Ok(())
        } else {
            Err(format!("reg gf2 {gf2}, reg q {q}, a {a}, antichain {} / {}", ar.via_dg, ar.via_dhat))
        }
    })?;
    Ok(format!("{n} graphs"))
}

fn criterion_3() -> Outcome {
    let k2 = Graph::from_edges(&["x1", "y1"], &[("x1", "y1")]).unwrap();
    let mut vals = Vec::new();
    for f in Field::BOTH {
        vals.push(regularity(&k2, f, CAP).map_err(|e| e.to_string())?);
        vals.push(projective_dimension_of_dual(&k2, f, CAP).map_err(|e| e.to_string())?);
    }
    vals.push(max_3disjoint(&k2).size);
    if vals.iter().all(|&v| v == 1) {
        Ok("reg = pd(I^v) = a = 1".into())
    } else {
        Err(format!("{vals:?}"))
    }
}

fn criterion_4(corpus: &[Graph]) -> Outcome {
    let n = over(corpus, |g| {
        for f in Field::BOTH {
            let r = regularity(g, f, CAP).map_err(|e| e.to_string())?;
            let p = projective_dimension_of_dual(g, f, CAP).map_err(|e| e.to_string())?;
            if r != p {
                return Err(format!("{f:?}: reg {r}, pd of dual {p}"));
            }
        }
        Ok(())
    })?;
    Ok(format!("{n} graphs, both fields"))
}

fn criterion_5(corpus: &[Graph]) -> Outcome {
    let n = over(corpus, |g| {
        let a = max_3disjoint(g).size;
        let brute = brute_a(g);
        if a != brute {
            return Err(format!("max clique a {a}, brute force {brute}"));
        }
        for f in Field::BOTH {
            let r = regularity(g, f, CAP).map_err(|e| e.to_string())?;
            if r < a {
                return Err(format!("{f:?}: reg {r} < a {a}"));
            }
        }
        Ok(())
    })?;
    Ok(format!("{n} graphs, both fields"))
}

fn criterion_6(corpus: &[Graph]) -> Outcome {
    let n = over(corpus, |g| {
        let (_, lab) = unmixed(g);
        let primes = associated_primes(g, &lab).map_err(|e| e.to_string())?;
        let mut covers: Vec<VertexSet> = primes.iter().map(|p| p.vertex_cover(&lab)).collect();
        covers.sort();
        let expected = brute_minimal_covers(g);
        if covers != expected {
            return Err(format!("primes {covers:?}, minimal covers {expected:?}"));
        }
        // y_i in the prime and an x_i y_j edge (i → j) force y_j in the prime.
        let n = lab.n();
        for p in &primes {
            let mut ys = p.ys;
            loop {
                let grown = ys.iter().fold(ys, |acc, i| {
                    (0..n).filter(|&j| g.has_edge(lab.x(i), lab.y(j))).fold(acc, |s, j| s.with(j))
                });
                if grown == ys {
                    break;
                }
                ys = grown;
            }
            if ys != p.ys {
                return Err(format!("prime {p:?} not closed upward"));
            }
        }
        Ok(())
    })?;
    Ok(format!("{n} graphs"))
}

fn criterion_7(corpus: &[Graph]) -> Outcome {
    let n = over(corpus, |g| {
        let (status, lab) = unmixed(g);
        let red = acyclic_reduction(g, &lab).map_err(|e| e.to_string())?;
        let hat = classify(&red.ghat).status;
        if hat != Status::VwcCohenMacaulay {
            return Err(format!("reduction classifies as {hat:?}"));
        }
        if status == Status::VwcCohenMacaulay && !red.is_identity_on(g, &lab) {
            return Err("reduction of a Cohen-Macaulay graph differs from the graph".into());
        }
        for f in Field::BOTH {
            let r = regularity(g, f, CAP).map_err(|e| e.to_string())?;
            let rh = regularity(&red.ghat, f, CAP).map_err(|e| e.to_string())?;
            let ph = projective_dimension_of_dual(&red.ghat, f, CAP).map_err(|e| e.to_string())?;
            if r != rh || rh != ph {
                return Err(format!("{f:?}: reg {r}, reg of reduction {rh}, pd of its dual {ph}"));
            }
        }
        Ok(())
    })?;
    Ok(format!("{n} graphs"))
}

fn criterion_8(corpus: &[Graph]) -> Outcome {
    let cm: Vec<Graph> = corpus.iter().filter(|g| classify(g).status == Status::VwcCohenMacaulay).cloned().collect();
    let n = over(&cm, |g| {
        let (_, lab) = unmixed(g);
        let y1 = lab.y(0);
        if g.degree(y1) != 1 {
            return Err(format!("deg(y_1) = {}", g.degree(y1)));
        }
        match cover_ideal_splitting_check(g, &lab) {
            Ok(true) => Ok(()),
            Ok(false) => Err("identity fails".into()),
            Err(e) => Err(e.to_string()),
        }
    })?;
    Ok(format!("{n} Cohen-Macaulay graphs"))
}

fn criterion_9() -> Outcome {
    let mut total = 0;
    let mut accepted = 0;
    for g in enumerate_candidates(2).unwrap() {
        let lab = pair_labeling(&g).unwrap();
        let conditions = check_unmixed_conditions(&g, &lab).unwrap().is_empty();
        let covers = brute_minimal_covers(&g);
        let equicardinal = covers.iter().all(|c| c.len() == covers[0].len());
        if conditions != equicardinal {
            return Err(format!("conditions {conditions}, equicardinal covers {equicardinal}\n{}", write_edge_list(&g)));
        }
        total += 1;
        accepted += conditions as usize;
    }
    Ok(format!("{total} candidates, {accepted} unmixed"))
}

fn criterion_10() -> Outcome {
    let cx = |v: &[&str], f: &[&[&str]]| SimplicialComplex::from_label_facets(v, f).unwrap();
    let hollow = cx(&["a", "b", "c"], &[&["a", "b"], &["b", "c"], &["a", "c"]]);
    let points = cx(&["a", "b"], &[&["a"], &["b"]]);
    let c4 = Graph::from_edges(&["a", "b", "c", "d"], &[("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")]).unwrap();
    let k2 = Graph::from_edges(&["x1", "y1"], &[("x1", "y1")]).unwrap();
    for f in Field::BOTH {
        let checks = [
            (reduced_homology_ranks(&hollow, f), vec![0, 0, 1]),
            (reduced_homology_ranks(&points, f), vec![0, 1]),
            (reduced_homology_ranks(&independence_complex(&c4), f), vec![0, 1, 0]),
        ];
        for (got, want) in checks {
            if got != want {
                return Err(format!("{f:?}: ranks {got:?}, expected {want:?}"));
            }
        }
        let b = betti_table_hochster(&k2, f, CAP).map_err(|e| e.to_string())?.get(1, 2);
        if b != 1 {
            return Err(format!("{f:?}: beta_1,2(K2) = {b}"));
        }
    }
    Ok("hollow triangle, two points, C4 complex, beta_1,2(K2)".into())
}

fn main() -> ExitCode {
    let t = Instant::now();
    let vwc = vwc_corpus();
    let any = any_corpus();
    println!("corpus: {} very well-covered graphs, {} arbitrary graphs", vwc.len(), any.len());

    type Criterion<'a> = (&'a str, Box<dyn Fn() -> Outcome + 'a>);
    let criteria: Vec<Criterion> = vec![
        ("1 CM = shellable = vertex decomposable", Box::new(|| criterion_1(&vwc))),
        ("2 reg = a = antichain formula", Box::new(|| criterion_2(&vwc))),
        ("3 K2 base case", Box::new(criterion_3)),
        ("4 reg = pd of Alexander dual", Box::new(|| criterion_4(&any))),
        ("5 reg >= a", Box::new(|| criterion_5(&any))),
        ("6 associated primes", Box::new(|| criterion_6(&vwc))),
        ("7 acyclic reduction", Box::new(|| criterion_7(&vwc))),
        ("8 cover ideal splitting", Box::new(|| criterion_8(&vwc))),
        ("9 unmixedness conditions", Box::new(criterion_9)),
        ("10 oracle self-checks", Box::new(criterion_10)),
    ];
    let mut failed = 0;
    for (name, run) in &criteria {
        let start = Instant::now();
        match run() {
            Ok(detail) => println!("PASS criterion {name}: {detail} ({:.1?})", start.elapsed()),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {name}: {detail}");
            }
        }
    }
    println!("{} of {} criteria passed in {:.1?}", criteria.len() - failed, criteria.len(), t.elapsed());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
