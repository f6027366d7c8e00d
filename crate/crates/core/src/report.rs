//! The invariants report: every quantity the library computes for one graph,
//! with the consistency checks that apply to it.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Serialize, Serializer};

use crate::classify::{classify, Status, Violation};
use crate::error::{Error, Result};
use crate::graph::{max_3disjoint, Graph};
use crate::homology::{betti_table_hochster, projective_dimension_of_dual, regularity, Field};
use crate::io::digest;
use crate::reduction::{acyclic_reduction, antichain_regularity, associated_primes};

pub const SCHEMA: u32 = 1;

/// A value, or the reason it is absent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Entry<T> {
    Value(T),
    Skipped(String),
}

impl<T> Entry<T> {
    pub fn value(&self) -> Option<&T> {
        match self {
            Entry::Value(v) => Some(v),
            Entry::Skipped(_) => None,
        }
    }

    fn from_result(r: Result<T>) -> Result<Self> {
        match r {
            Ok(v) => Ok(Entry::Value(v)),
            Err(Error::OracleLimit { .. }) => Ok(Entry::Skipped("skipped: oracle limit".into())),
            Err(e) => Err(e),
        }
    }

    fn not_applicable(status: Status) -> Self {
        Entry::Skipped(format!("not applicable: {status:?}"))
    }
}

impl<T: Serialize> Serialize for Entry<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Entry::Value(v) => v.serialize(s),
            Entry::Skipped(reason) => s.serialize_str(reason),
        }
    }
}

impl<T: std::fmt::Display> std::fmt::Display for Entry<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Entry::Value(v) => v.fmt(f),
            Entry::Skipped(r) => f.write_str(r),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Flag {
    Pass,
    Fail,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassificationView {
    pub status: Status,
    pub height: usize,
    pub violations: Vec<Violation>,
}

#[derive(Debug, Clone, Serialize)]
pub struct AntichainView {
    pub via_semidirected: usize,
    pub via_reduction: usize,
    /// 1-based pair indices.
    pub witness: Vec<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReductionView {
    pub components: usize,
    /// Strong components as 1-based pair indices, in reduction order.
    pub partition: Vec<Vec<usize>>,
    pub edges: Vec<(String, String)>,
    pub identity: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema: u32,
    pub input_digest: String,
    pub vertices: usize,
    pub edges: usize,
    pub stripped_isolated: Vec<String>,
    pub classification: ClassificationView,
    /// `(x_i, y_i)` label pairs.
    pub labeling: Option<Vec<(String, String)>>,
    pub a: usize,
    pub a_witness: Vec<(String, String)>,
    pub antichain: Entry<AntichainView>,
    pub reg: BTreeMap<&'static str, Entry<usize>>,
    pub pd_dual: BTreeMap<&'static str, Entry<usize>>,
    pub betti: BTreeMap<&'static str, Entry<String>>,
    /// Generators of each associated prime.
    pub associated_primes: Entry<Vec<Vec<String>>>,
    pub reduction: Entry<ReductionView>,
    pub checks: BTreeMap<&'static str, Flag>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.checks.values().all(|&f| f == Flag::Pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let c = &self.classification;
        let _ = writeln!(out, "digest       {}", self.input_digest);
        let _ = writeln!(out, "graph        {} vertices, {} edges", self.vertices, self.edges);
        if !self.stripped_isolated.is_empty() {
            let _ = writeln!(out, "isolated     {}", self.stripped_isolated.join(" "));
        }
        let _ = writeln!(out, "status       {:?}", c.status);
        let _ = writeln!(out, "height       {}", c.height);
        if let Some(lab) = &self.labeling {
            let pairs: Vec<String> = lab.iter().map(|(x, y)| format!("({x},{y})")).collect();
            let _ = writeln!(out, "labeling     {}", pairs.join(" "));
        }
        let _ = writeln!(out, "a(G)         {}", self.a);
        match &self.antichain {
            Entry::Value(v) => {
                let _ = writeln!(out, "antichain    {} / {} (witness {:?})", v.via_semidirected, v.via_reduction, v.witness);
            }
            Entry::Skipped(r) => {
                let _ = writeln!(out, "antichain    {r}");
            }
        }
        for (f, r) in &self.reg {
            let _ = writeln!(out, "{:<13}{r}", format!("reg[{f}]"));
        }
        for (f, p) in &self.pd_dual {
            let _ = writeln!(out, "{:<13}{p}", format!("pd_dual[{f}]"));
        }
        match &self.associated_primes {
            Entry::Value(ps) => {
                let _ = writeln!(out, "ass          {} primes", ps.len());
                for p in ps {
                    let _ = writeln!(out, "             ({})", p.join(","));
                }
            }
            Entry::Skipped(r) => {
                let _ = writeln!(out, "ass          {r}");
            }
        }
        if let Entry::Value(r) = &self.reduction {
            let _ = writeln!(out, "reduction    t = {}, identity {}", r.components, r.identity);
        }
        for (name, flag) in &self.checks {
            let _ = writeln!(out, "check {name:<18} {flag:?}");
        }
        for (f, b) in &self.betti {
            if let Entry::Value(text) = b {
                let _ = writeln!(out, "betti[{f}]");
                out.push_str(text);
            }
        }
        if let Some(t) = self.timing_ms {
            let _ = writeln!(out, "time         {t} ms");
        }
        out
    }
}

#[derive(Debug, Clone)]
pub struct ReportOptions {
    pub fields: Vec<Field>,
    pub cap: usize,
}

fn flag(ok: bool) -> Flag {
    if ok {
        Flag::Pass
    } else {
        Flag::Fail
    }
}

fn per_field(fields: &[Field], f: impl Fn(Field) -> Result<usize>) -> Result<BTreeMap<&'static str, Entry<usize>>> {
    fields.iter().map(|&k| Ok((k.name(), Entry::from_result(f(k))?))).collect()
}

/// Computes the report. Oracle limits become skipped entries; other errors
/// (internal inconsistencies) are returned.
pub fn build_report(g: &Graph, opts: &ReportOptions) -> Result<Report> {
    let class = classify(g);
    let status = class.status;
    let unmixed = matches!(status, Status::VwcCohenMacaulay | Status::VwcUnmixedNotCM);
    let a = max_3disjoint(g);

    let mut reg = BTreeMap::new();
    let mut betti = BTreeMap::new();
    let mut stripped = g.set_labels(g.isolated_vertices());
    for &f in &opts.fields {
        match Entry::from_result(betti_table_hochster(g, f, opts.cap))? {
            Entry::Value(t) => {
                reg.insert(f.name(), Entry::Value(t.regularity()));
                betti.insert(f.name(), Entry::Value(t.to_text()));
                stripped = t.stripped;
            }
            Entry::Skipped(r) => {
                reg.insert(f.name(), Entry::Skipped(r.clone()));
                betti.insert(f.name(), Entry::Skipped(r));
            }
        }
    }
    let pd_dual = per_field(&opts.fields, |f| projective_dimension_of_dual(g, f, opts.cap))?;

    let mut checks = BTreeMap::new();
    let regs: Vec<usize> = reg.values().filter_map(|e| e.value().copied()).collect();
    for &f in &opts.fields {
        if let (Some(&r), Some(&p)) = (reg[f.name()].value(), pd_dual[f.name()].value()) {
            checks.entry("terai").and_modify(|x| *x = flag(*x == Flag::Pass && r == p)).or_insert(flag(r == p));
        }
    }
    if !regs.is_empty() {
        checks.insert("katzman", flag(regs.iter().all(|&r| r >= a.size)));
    }
    if regs.len() == opts.fields.len() && regs.len() > 1 {
        checks.insert("field-stability", flag(regs.windows(2).all(|w| w[0] == w[1])));
    }

    let (mut antichain, mut primes, mut reduction) =
        (Entry::not_applicable(status), Entry::not_applicable(status), Entry::not_applicable(status));
    if let (true, Some(lab)) = (unmixed, &class.labeling) {
        let ar = antichain_regularity(g, lab)?;
        checks.insert("acyclic-antichain", flag(ar.via_dg == ar.via_dhat));
        if !regs.is_empty() {
            checks.insert("regularity", flag(regs.iter().all(|&r| r == a.size && r == ar.value)));
        }
        antichain = Entry::Value(AntichainView {
            via_semidirected: ar.via_dg,
            via_reduction: ar.via_dhat,
            witness: ar.witness.iter().map(|i| i + 1).collect(),
        });

        let ass = associated_primes(g, lab)?;
        let mut covers: Vec<_> = ass.iter().map(|p| p.vertex_cover(lab)).collect();
        covers.sort();
        checks.insert("ass", flag(covers == crate::graph::minimal_vertex_covers(g)));
        primes = Entry::Value(
            ass.iter()
                .map(|p| {
                    let xs = p.xs.iter().map(|i| g.label(lab.x(i)).to_string());
                    let ys = p.ys.iter().map(|i| g.label(lab.y(i)).to_string());
                    xs.chain(ys).collect()
                })
                .collect(),
        );

        let red = acyclic_reduction(g, lab)?;
        let identity = red.is_identity_on(g, lab);
        let hat_cm = classify(&red.ghat).status == Status::VwcCohenMacaulay;
        let mut ok = hat_cm && (status != Status::VwcCohenMacaulay || identity);
        let mut decided = true;
        for &f in &opts.fields {
            let r = reg[f.name()].value().copied();
            let rh = Entry::from_result(regularity(&red.ghat, f, opts.cap))?.value().copied();
            let ph = Entry::from_result(projective_dimension_of_dual(&red.ghat, f, opts.cap))?.value().copied();
            match (r, rh, ph) {
                (Some(r), Some(rh), Some(ph)) => ok &= r == rh && rh == ph,
                _ => decided = false,
            }
        }
        if decided {
            checks.insert("reduction", flag(ok));
        }
        reduction = Entry::Value(ReductionView {
            components: red.t(),
            partition: red.partition.components.iter().map(|c| c.iter().map(|i| i + 1).collect()).collect(),
            edges: red.ghat.edges().into_iter().map(|(u, v)| (red.ghat.label(u).into(), red.ghat.label(v).into())).collect(),
            identity,
        });
    }

    Ok(Report {
        schema: SCHEMA,
        input_digest: digest(g),
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        stripped_isolated: stripped,
        classification: ClassificationView { status, height: class.height, violations: class.violations.clone() },
        labeling: class.labeling.as_ref().map(|l| l.label_pairs(g)),
        a: a.size,
        a_witness: a.edges.iter().map(|&(u, v)| (g.label(u).to_string(), g.label(v).to_string())).collect(),
        antichain,
        reg,
        pd_dual,
        betti,
        associated_primes: primes,
        reduction,
        checks,
        timing_ms: None,
    })
}
