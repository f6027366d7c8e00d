//! Exact homological oracles: reduced simplicial homology over GF(2) or ℚ,
//! Reisner's Cohen–Macaulay criterion, and graded Betti numbers through
//! Hochster's formula.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::complexes::{cover_ideal, SimplicialComplex, SquarefreeMonomialIdeal};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Default vertex cap for the exhaustive Hochster sweep.
pub const DEFAULT_CAP: usize = 16;

/// Hard ceiling for any sweep: the face table has `2^n` entries.
const HARD_CAP: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Field {
    Gf2,
    #[serde(rename = "q")]
    Rationals,
}

impl Field {
    pub const BOTH: [Field; 2] = [Field::Gf2, Field::Rationals];

    pub fn name(self) -> &'static str {
        match self {
            Field::Gf2 => "gf2",
            Field::Rationals => "q",
        }
    }
}

/// Rank over GF(2) of a 0/1 matrix given as rows of column indices.
fn rank_gf2(rows: &[Vec<usize>], ncols: usize) -> usize {
    let words = ncols.div_ceil(64);
    let mut mat: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| {
            let mut w = vec![0u64; words];
            for &c in r {
                w[c / 64] ^= 1u64 << (c % 64);
            }
            w
        })
        .collect();
    let mut rank = 0;
    for col in 0..ncols {
        let (w, b) = (col / 64, 1u64 << (col % 64));
        let Some(p) = (rank..mat.len()).find(|&r| mat[r][w] & b != 0) else {
            continue;
        };
        mat.swap(rank, p);
        let pivot = mat[rank].clone();
        for row in mat.iter_mut().skip(rank + 1) {
            if row[w] & b != 0 {
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Rank over ℚ of an integer matrix by fraction-free elimination, each row
/// kept primitive. Runs in `i128` and restarts in `BigInt` on overflow.
fn rank_rational(rows: &[Vec<(usize, i64)>], ncols: usize) -> usize {
    let dense = |zero: i128| -> Vec<Vec<i128>> {
        rows.iter()
            .map(|r| {
                let mut v = vec![zero; ncols];
                for &(c, x) in r {
                    v[c] += x as i128;
                }
                v
            })
            .collect()
    };
    match rank_i128(dense(0)) {
        Some(r) => r,
        None => {
            let big: Vec<Vec<BigInt>> =
                dense(0).into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect();
            rank_bigint(big)
        }
    }
}

fn rank_i128(mut mat: Vec<Vec<i128>>) -> Option<usize> {
    let ncols = mat.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let candidates = (rank..mat.len()).filter(|&r| mat[r][col] != 0);
        let Some(p) = candidates.min_by_key(|&r| mat[r][col].unsigned_abs()) else {
            continue;
        };
        mat.swap(rank, p);
        let pivot = mat[rank].clone();
        let a = pivot[col];
        for row in mat.iter_mut().skip(rank + 1) {
            let b = row[col];
            if b == 0 {
                continue;
            }
            if a == 1 || a == -1 {
                // Unit pivot: row - (b/a)·pivot stays integral.
                let m = b * a;
                for (x, &y) in row.iter_mut().zip(&pivot) {
                    if y != 0 {
                        *x = x.checked_sub(y.checked_mul(m)?)?;
                    }
                }
                continue;
            }
            let mut g = 0i128;
            for (x, &y) in row.iter_mut().zip(&pivot) {
                *x = x.checked_mul(a)?.checked_sub(y.checked_mul(b)?)?;
                g = g.gcd(x);
            }
            if g > 1 {
                row.iter_mut().for_each(|x| *x /= g);
            }
        }
        rank += 1;
    }
    Some(rank)
}

fn rank_bigint(mut mat: Vec<Vec<BigInt>>) -> usize {
    let ncols = mat.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let candidates = (rank..mat.len()).filter(|&r| !mat[r][col].is_zero());
        let Some(p) = candidates.min_by_key(|&r| mat[r][col].abs()) else {
            continue;
        };
        mat.swap(rank, p);
        let pivot = mat[rank].clone();
        let a = pivot[col].clone();
        for row in mat.iter_mut().skip(rank + 1) {
            let b = row[col].clone();
            if b.is_zero() {
                continue;
            }
            let mut g = BigInt::zero();
            for (x, y) in row.iter_mut().zip(&pivot) {
                *x = &*x * &a - y * &b;
                g = g.gcd(x);
            }
            if g > BigInt::from(1) {
                row.iter_mut().for_each(|x| *x /= &g);
            }
        }
        rank += 1;
    }
    rank
}

/// Reduced homology ranks of the complex whose faces are `faces`, indexed by
/// dimension + 1 (so entry 0 is `H̃_{-1}`).
fn reduced_homology_of_faces(faces: &[VertexSet], field: Field) -> Vec<usize> {
    if faces.is_empty() {
        return Vec::new();
    }
    let top = faces.iter().map(|f| f.len()).max().unwrap_or(0);
    let mut by_size: Vec<Vec<VertexSet>> = vec![Vec::new(); top + 1];
    for &f in faces {
        by_size[f.len()].push(f);
    }
    let index: Vec<HashMap<VertexSet, usize>> =
        by_size.iter().map(|fs| fs.iter().enumerate().map(|(i, &f)| (f, i)).collect()).collect();

    // boundary_rank[s] = rank of ∂ from size-s faces to size-(s-1) faces.
    let mut boundary_rank = vec![0usize; top + 2];
    for s in 1..=top {
        let target = &index[s - 1];
        let ncols = by_size[s - 1].len();
        boundary_rank[s] = match field {
            Field::Gf2 => {
                let rows: Vec<Vec<usize>> =
                    by_size[s].iter().map(|f| f.iter().map(|v| target[&f.without(v)]).collect()).collect();
                rank_gf2(&rows, ncols)
            }
            Field::Rationals => {
                let rows: Vec<Vec<(usize, i64)>> = by_size[s]
                    .iter()
                    .map(|f| {
                        f.iter()
                            .enumerate()
                            .map(|(pos, v)| (target[&f.without(v)], if pos % 2 == 0 { 1 } else { -1 }))
                            .collect()
                    })
                    .collect();
                rank_rational(&rows, ncols)
            }
        };
    }
    (0..=top).map(|s| by_size[s].len() - boundary_rank[s] - boundary_rank[s + 1]).collect()
}

/// Ranks of `H̃_d(c; k)` for `d = -1 ..= dim c`; empty for the void complex.
pub fn reduced_homology_ranks(c: &SimplicialComplex, field: Field) -> Vec<usize> {
    reduced_homology_of_faces(&c.faces(), field)
}

/// Reisner's criterion: for every face `F` (including `∅`),
/// `H̃_i(lk F; k) = 0` for all `i < dim lk F`.
pub fn is_cohen_macaulay_reisner(c: &SimplicialComplex, field: Field) -> bool {
    c.faces().into_iter().all(|f| {
        let lk = c.link(f).expect("face of the complex");
        let ranks = reduced_homology_ranks(&lk, field);
        // ranks[d + 1] for d < dim = ranks.len() - 2.
        ranks.len() < 2 || ranks[..ranks.len() - 1].iter().all(|&r| r == 0)
    })
}

/// Graded Betti numbers of a Stanley–Reisner ring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BettiTable {
    /// `(i, j) ↦ β_{i,j}`, nonzero entries only.
    pub entries: BTreeMap<(usize, usize), usize>,
    pub field: Field,
    /// Isolated vertices removed before the sweep.
    pub stripped: Vec<String>,
}

impl BettiTable {
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// `max{j - i : β_{i,j} ≠ 0}`.
    pub fn regularity(&self) -> usize {
        self.entries.keys().map(|&(i, j)| j - i).max().unwrap_or(0)
    }

    /// `max{i : β_{i,j} ≠ 0}`.
    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// Rows `i`, columns `j - i`, zeros shown as `.`.
    pub fn to_text(&self) -> String {
        let reg = self.regularity();
        let pd = self.projective_dimension();
        let mut out = String::new();
        let _ = write!(out, "{:>6}", "i\\j-i");
        for c in 0..=reg {
            let _ = write!(out, " {c:>5}");
        }
        out.push('\n');
        for i in 0..=pd {
            let _ = write!(out, "{i:>6}");
            for c in 0..=reg {
                match self.get(i, i + c) {
                    0 => {
                        let _ = write!(out, " {:>5}", ".");
                    }
                    b => {
                        let _ = write!(out, " {b:>5}");
                    }
                }
            }
            out.push('\n');
        }
        let _ = writeln!(out, "reg = {reg}, pd = {pd} over {}", self.field.name());
        out
    }
}

/// Membership table for all subsets of an `n`-element vertex set.
struct FaceTable {
    n: usize,
    is_face: Vec<bool>,
}

impl FaceTable {
    fn from_facets(n: usize, facets: &[VertexSet]) -> Self {
        let mut is_face = vec![false; 1usize << n];
        for f in facets {
            is_face[f.bits() as usize] = true;
        }
        // Close downward.
        for m in (0..1usize << n).rev() {
            if is_face[m] {
                continue;
            }
            is_face[m] = (0..n).any(|v| m >> v & 1 == 0 && is_face[m | 1 << v]);
        }
        FaceTable { n, is_face }
    }

    fn from_ideal(ideal: &SquarefreeMonomialIdeal) -> Self {
        let n = ideal.variables().len();
        let gens: Vec<u64> = ideal.generators().iter().map(|g| g.bits()).collect();
        let is_face = (0..1u64 << n).map(|m| !gens.iter().any(|&g| g & !m == 0)).collect();
        FaceTable { n, is_face }
    }

    fn faces_within(&self, w: VertexSet) -> Vec<VertexSet> {
        w.subsets().filter(|s| self.is_face[s.bits() as usize]).collect()
    }

    /// Whether `Δ_W` is a nonempty simplex or a cone, hence acyclic.
    fn acyclic_restriction(&self, w: VertexSet, faces: &[VertexSet]) -> bool {
        if w.is_empty() {
            return false;
        }
        if self.is_face[w.bits() as usize] {
            return true;
        }
        w.iter().any(|v| faces.iter().all(|f| self.is_face[f.with(v).bits() as usize]))
    }
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    let cap = cap.min(HARD_CAP);
    if n > cap {
        Err(Error::OracleLimit { vertices: n, cap })
    } else {
        Ok(())
    }
}

/// Hochster's formula over every vertex subset `W`:
/// `β_{i,j} = Σ_{|W| = j} dim H̃_{j-i-1}(Δ_W)`.
/// `skip(W)` may mark subsets known to give acyclic restrictions.
fn hochster(table: &FaceTable, field: Field, skip: &(dyn Fn(VertexSet) -> bool + Sync)) -> BTreeMap<(usize, usize), usize> {
    let all = VertexSet::full(table.n);
    let subsets: Vec<VertexSet> = all.subsets().collect();
    let partial: Vec<Vec<((usize, usize), usize)>> = subsets
        .par_iter()
        .map(|&w| {
            if skip(w) {
                return Vec::new();
            }
            let j = w.len();
            let faces = table.faces_within(w);
            if table.acyclic_restriction(w, &faces) {
                return Vec::new();
            }
            let ranks = reduced_homology_of_faces(&faces, field);
            ranks
                .iter()
                .enumerate()
                .filter(|&(_, &r)| r > 0)
                // d = d1 - 1 and d1 <= |W|, so i = j - d - 1 = j - d1 >= 0.
                .map(|(d1, &r)| ((j - d1, j), r))
                .collect()
        })
        .collect();
    let mut entries = BTreeMap::new();
    for (key, r) in partial.into_iter().flatten() {
        *entries.entry(key).or_insert(0) += r;
    }
    entries
}

/// Betti numbers of `k[Δ]` for an arbitrary complex.
pub fn betti_table_of_complex(c: &SimplicialComplex, field: Field, cap: usize) -> Result<BettiTable> {
    let n = c.vertices().len();
    check_cap(n, cap)?;
    let table = FaceTable::from_facets(n, c.facets());
    Ok(BettiTable { entries: hochster(&table, field, &|_| false), field, stripped: Vec::new() })
}

/// Betti numbers of `S/I` for a square-free monomial ideal `I`.
pub fn betti_table_of_ideal(ideal: &SquarefreeMonomialIdeal, field: Field, cap: usize) -> Result<BettiTable> {
    check_cap(ideal.variables().len(), cap)?;
    if ideal.is_unit() {
        // S/S = 0 has no nonzero Betti numbers.
        return Ok(BettiTable { entries: BTreeMap::new(), field, stripped: Vec::new() });
    }
    let table = FaceTable::from_ideal(ideal);
    Ok(BettiTable { entries: hochster(&table, field, &|_| false), field, stripped: Vec::new() })
}

/// Betti numbers of `R/I(G)`. Isolated vertices are stripped first; subsets
/// inducing an isolated vertex are skipped, their restriction being a cone.
pub fn betti_table_hochster(g: &Graph, field: Field, cap: usize) -> Result<BettiTable> {
    let stripped = g.set_labels(g.isolated_vertices());
    let h = g.without_isolated();
    check_cap(h.vertex_count(), cap)?;
    let c = crate::complexes::independence_complex(&h);
    let table = FaceTable::from_facets(h.vertex_count(), c.facets());
    let cone = |w: VertexSet| w.iter().any(|v| h.neighbors(v).is_disjoint(w));
    Ok(BettiTable { entries: hochster(&table, field, &cone), field, stripped })
}

/// `reg(R/I(G))`.
pub fn regularity(g: &Graph, field: Field, cap: usize) -> Result<usize> {
    Ok(betti_table_hochster(g, field, cap)?.regularity())
}

/// `pd(I(G)^∨)`, from the Hochster sweep of the complex whose Stanley–Reisner
/// ideal is the cover ideal: `pd(I^∨) = pd(S/I^∨) - 1`.
pub fn projective_dimension_of_dual(g: &Graph, field: Field, cap: usize) -> Result<usize> {
    let h = g.without_isolated();
    check_cap(h.vertex_count(), cap)?;
    if h.edge_count() == 0 {
        // I(G) = 0, so I^∨ is the unit ideal, a free module.
        return Ok(0);
    }
    let table = betti_table_of_ideal(&cover_ideal(&h), field, cap)?;
    Ok(table.projective_dimension().saturating_sub(1))
}

/// Terai duality: `reg(R/I(G)) = pd(I(G)^∨)`.
pub fn terai_check(g: &Graph, field: Field, cap: usize) -> Result<bool> {
    Ok(regularity(g, field, cap)? == projective_dimension_of_dual(g, field, cap)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::independence_complex;

    fn c4() -> Graph {
        Graph::from_edges(&["a", "b", "c", "d"], &[("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")]).unwrap()
    }

    fn k2() -> Graph {
        Graph::from_edges(&["x1", "y1"], &[("x1", "y1")]).unwrap()
    }

    fn p4() -> Graph {
        Graph::from_edges(&["a", "b", "c", "d"], &[("a", "b"), ("b", "c"), ("c", "d")]).unwrap()
    }

    #[test]
    fn homology_examples() {
        for f in Field::BOTH {
            let two_points = SimplicialComplex::from_label_facets(&["a", "b"], &[&["a"], &["b"]]).unwrap();
            assert_eq!(reduced_homology_ranks(&two_points, f), vec![0, 1]);
            let hollow =
                SimplicialComplex::from_label_facets(&["a", "b", "c"], &[&["a", "b"], &["b", "c"], &["a", "c"]])
                    .unwrap();
            assert_eq!(reduced_homology_ranks(&hollow, f), vec![0, 0, 1]);
            assert_eq!(reduced_homology_ranks(&independence_complex(&c4()), f), vec![0, 1, 0]);
            assert_eq!(reduced_homology_ranks(&SimplicialComplex::irrelevant(vec![]), f), vec![1]);
            assert!(reduced_homology_ranks(&SimplicialComplex::void(vec![]), f).is_empty());
        }
    }

    #[test]
    fn torsion_separates_fields() {
        // Six-vertex real projective plane: H̃_1 = Z/2.
        let rp2 = SimplicialComplex::from_label_facets(
            &["1", "2", "3", "4", "5", "6"],
            &[
                &["1", "2", "3"],
                &["1", "3", "4"],
                &["1", "4", "5"],
                &["1", "5", "6"],
                &["1", "2", "6"],
                &["2", "3", "5"],
                &["3", "4", "6"],
                &["2", "4", "5"],
                &["2", "4", "6"],
                &["3", "5", "6"],
            ],
        )
        .unwrap();
        assert_eq!(reduced_homology_ranks(&rp2, Field::Gf2), vec![0, 0, 1, 1]);
        assert_eq!(reduced_homology_ranks(&rp2, Field::Rationals), vec![0, 0, 0, 0]);
    }

    #[test]
    fn reisner_examples() {
        for f in Field::BOTH {
            assert!(is_cohen_macaulay_reisner(&independence_complex(&k2()), f));
            assert!(!is_cohen_macaulay_reisner(&independence_complex(&c4()), f));
            assert!(is_cohen_macaulay_reisner(&independence_complex(&p4()), f));
        }
    }

    #[test]
    fn betti_examples() {
        for f in Field::BOTH {
            let t = betti_table_hochster(&k2(), f, DEFAULT_CAP).unwrap();
            assert_eq!(t.get(0, 0), 1);
            assert_eq!(t.get(1, 2), 1);
            assert_eq!((t.regularity(), t.projective_dimension()), (1, 1));
            assert_eq!(regularity(&c4(), f, DEFAULT_CAP).unwrap(), 1);
            let two = Graph::from_edges(&["a", "b", "c", "d"], &[("a", "b"), ("c", "d")]).unwrap();
            assert_eq!(regularity(&two, f, DEFAULT_CAP).unwrap(), 2);
            assert_eq!(regularity(&p4(), f, DEFAULT_CAP).unwrap(), 1);
        }
    }

    #[test]
    fn c4_betti_numbers() {
        // R/I(C4): 1, 4 quadrics, 4 cubic syzygies, 1 quartic.
        let t = betti_table_hochster(&c4(), Field::Rationals, DEFAULT_CAP).unwrap();
        let expect: BTreeMap<(usize, usize), usize> = [((0, 0), 1), ((1, 2), 4), ((2, 3), 4), ((3, 4), 1)].into();
        assert_eq!(t.entries, expect);
    }

    #[test]
    fn dual_and_terai_examples() {
        for f in Field::BOTH {
            assert_eq!(projective_dimension_of_dual(&k2(), f, DEFAULT_CAP).unwrap(), 1);
            assert!(terai_check(&k2(), f, DEFAULT_CAP).unwrap());
            assert!(terai_check(&c4(), f, DEFAULT_CAP).unwrap());
            assert_eq!(projective_dimension_of_dual(&c4(), f, DEFAULT_CAP).unwrap(), 1);
        }
    }

    #[test]
    fn oracle_limit_is_reported() {
        let labels: Vec<String> = (0..18).map(|i| format!("v{i}")).collect();
        let mut g = Graph::new(labels).unwrap();
        for i in 0..9 {
            g.add_edge(2 * i, 2 * i + 1).unwrap();
        }
        assert_eq!(regularity(&g, Field::Gf2, DEFAULT_CAP), Err(Error::OracleLimit { vertices: 18, cap: 16 }));
    }

    #[test]
    fn isolated_vertices_are_stripped() {
        let g = Graph::from_edges(&["a", "b", "z"], &[("a", "b")]).unwrap();
        let t = betti_table_hochster(&g, Field::Gf2, DEFAULT_CAP).unwrap();
        assert_eq!(t.stripped, vec!["z".to_string()]);
        assert_eq!(t.regularity(), 1);
        let edgeless = Graph::new(["a"]).unwrap();
        assert_eq!(regularity(&edgeless, Field::Gf2, DEFAULT_CAP).unwrap(), 0);
        assert_eq!(projective_dimension_of_dual(&edgeless, Field::Gf2, DEFAULT_CAP).unwrap(), 0);
    }

    #[test]
    fn betti_text_layout() {
        let t = betti_table_hochster(&k2(), Field::Gf2, DEFAULT_CAP).unwrap();
        let text = t.to_text();
        assert!(text.contains("reg = 1, pd = 1 over gf2"));
    }

    #[test]
    fn rational_rank_matches_known_values() {
        let rows = vec![vec![(0, 2), (1, 4)], vec![(0, 1), (1, 2)], vec![(1, 3)]];
        assert_eq!(rank_rational(&rows, 2), 2);
        let big = rank_bigint(vec![
            vec![BigInt::from(2), BigInt::from(4)],
            vec![BigInt::from(1), BigInt::from(2)],
        ]);
        assert_eq!(big, 1);
    }
}
