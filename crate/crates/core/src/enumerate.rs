//! Exhaustive enumeration of the spherical systems of a root system.
//!
//! The search walks subsets of `Sigma(G)` in catalog order, pruning with the
//! pairwise axioms (no-proportional, Sigma1, Sigma2) and with the running
//! compatibility interval for `S^p`. Every surviving `Sigma` gets its
//! `A`-matrices once, since axioms A1-A3 do not involve `S^p`.

use std::collections::{BTreeMap, HashSet};
use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::rootsys::{embeddings, RootSystem, RootVector, SimpleSet};
use crate::system::{doubled_simple, orthogonal_pair, simple_index, SphericalSystem};

/// Per-rank counts of the F4 census.
pub const F4_CENSUS: [(usize, usize); 5] = [(0, 16), (1, 41), (2, 61), (3, 77), (4, 71)];

/// Derived booleans attached to a census member.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SystemFlags {
    pub cuspidal: bool,
    pub strongly_solvable: bool,
    pub spherically_closed: bool,
    pub strict: bool,
}

#[derive(Clone, Debug)]
pub struct CensusReport {
    pub by_rank: BTreeMap<usize, usize>,
    pub total: usize,
    pub systems: Vec<SphericalSystem>,
    /// Filled by [`CensusReport::compute_flags`]; empty until then.
    pub flags: Vec<SystemFlags>,
}

/// One line of a census comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RankDiff {
    pub rank: usize,
    pub expected: usize,
    pub found: usize,
}

impl CensusReport {
    /// Ranks whose counts differ from `expected` (missing ranks count as 0).
    pub fn diff(&self, expected: &[(usize, usize)]) -> Vec<RankDiff> {
        let mut ranks: Vec<usize> = expected.iter().map(|e| e.0).collect();
        ranks.extend(self.by_rank.keys().copied());
        ranks.sort_unstable();
        ranks.dedup();
        ranks
            .into_iter()
            .map(|rank| RankDiff {
                rank,
                expected: expected.iter().find(|e| e.0 == rank).map_or(0, |e| e.1),
                found: self.by_rank.get(&rank).copied().unwrap_or(0),
            })
            .filter(|d| d.expected != d.found)
            .collect()
    }

    pub fn compute_flags(&mut self) {
        self.flags = self
            .systems
            .par_iter()
            .map(|s| SystemFlags {
                cuspidal: s.is_cuspidal().unwrap_or(false),
                strongly_solvable: crate::quotient::is_strongly_solvable(s)
                    .map(|c| c.is_some())
                    .unwrap_or(false),
                spherically_closed: crate::closure::is_spherically_closed(s).unwrap_or(false),
                strict: crate::closure::is_strict(s).unwrap_or(false),
            })
            .collect();
    }
}

/// Candidate `A`-matrices for a fixed `Sigma`, each a sorted multiset of
/// rows. The pair `(Sigma, S^p)` must already satisfy no-proportional, S,
/// Sigma1 and Sigma2.
pub fn enumerate_a_matrices(
    rs: &RootSystem,
    sigma: &[RootVector],
    sp: SimpleSet,
) -> Result<Vec<Vec<Vec<i64>>>> {
    let probe = SphericalSystem::new(Arc::new(clone_rs(rs)?), sigma.to_vec(), sp, vec![]);
    let pre: Vec<_> = probe
        .validate()
        .into_iter()
        .filter(|v| !matches!(v.axiom(), "A1" | "A2" | "A3"))
        .collect();
    if !pre.is_empty() {
        return Err(Error::Invalid(pre));
    }
    Ok(a_matrices(rs, sigma))
}

fn clone_rs(rs: &RootSystem) -> Result<RootSystem> {
    crate::rootsys::build_root_system(&rs.spec)
}

pub(crate) fn a_matrices(rs: &RootSystem, sigma: &[RootVector]) -> Vec<Vec<Vec<i64>>> {
    let simple: Vec<Option<usize>> = sigma.iter().map(|s| simple_index(s)).collect();
    let alphas: Vec<(usize, usize)> = simple
        .iter()
        .enumerate()
        .filter_map(|(j, s)| s.map(|a| (a, j)))
        .collect();
    let cands: Vec<Vec<[Vec<i64>; 2]>> = alphas
        .iter()
        .map(|&(alpha, j0)| {
            let target: Vec<i64> = sigma.iter().map(|s| rs.pair(alpha, s)).collect();
            row_pairs(&target, &simple, j0)
        })
        .collect();

    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    search(&alphas, &cands, &mut chosen, &mut out);
    out.sort();
    out.dedup();
    out
}

/// Unordered pairs `{r+, r-}` with `r+ + r- = target`, every entry at most
/// 1, value 1 only at simple positions, and value 1 at `j0` in both.
fn row_pairs(target: &[i64], simple: &[Option<usize>], j0: usize) -> Vec<[Vec<i64>; 2]> {
    let r = target.len();
    let mut ranges: Vec<(i64, i64)> = Vec::with_capacity(r);
    for j in 0..r {
        if j == j0 {
            ranges.push((1, 1));
        } else if simple[j].is_some() {
            ranges.push((target[j] - 1, 1));
        } else {
            if target[j] > 0 {
                return vec![];
            }
            ranges.push((target[j], 0));
        }
    }
    let mut out = Vec::new();
    let mut cur = vec![0i64; r];
    fn fill(
        j: usize,
        ranges: &[(i64, i64)],
        target: &[i64],
        cur: &mut Vec<i64>,
        out: &mut Vec<[Vec<i64>; 2]>,
    ) {
        if j == ranges.len() {
            let other: Vec<i64> = target.iter().zip(cur.iter()).map(|(t, c)| t - c).collect();
            if *cur <= other {
                out.push([cur.clone(), other]);
            }
            return;
        }
        for v in ranges[j].0..=ranges[j].1 {
            cur[j] = v;
            fill(j + 1, ranges, target, cur, out);
        }
    }
    fill(0, &ranges, target, &mut cur, &mut out);
    out
}

fn search(
    alphas: &[(usize, usize)],
    cands: &[Vec<[Vec<i64>; 2]>],
    chosen: &mut Vec<usize>,
    out: &mut Vec<Vec<Vec<i64>>>,
) {
    let k = chosen.len();
    if k == alphas.len() {
        out.push(assemble(alphas, cands, chosen));
        return;
    }
    for c in 0..cands[k].len() {
        chosen.push(c);
        if consistent(alphas, cands, chosen) {
            search(alphas, cands, chosen, out);
        }
        chosen.pop();
    }
}

fn multiplicity(pair: &[Vec<i64>; 2], v: &[i64]) -> usize {
    pair.iter().filter(|r| r.as_slice() == v).count()
}

/// Every chosen row must occur with the same multiplicity in the pair of
/// each chosen simple root at which it takes value 1.
fn consistent(alphas: &[(usize, usize)], cands: &[Vec<[Vec<i64>; 2]>], chosen: &[usize]) -> bool {
    let pairs: Vec<&[Vec<i64>; 2]> = chosen
        .iter()
        .enumerate()
        .map(|(k, &c)| &cands[k][c])
        .collect();
    for pair in &pairs {
        for v in pair.iter() {
            let mut m = None;
            for (k, other) in pairs.iter().enumerate() {
                if v[alphas[k].1] == 1 {
                    let here = multiplicity(other, v);
                    match m {
                        None => m = Some(here),
                        Some(x) if x != here => return false,
                        _ => {}
                    }
                    if here == 0 {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn assemble(
    alphas: &[(usize, usize)],
    cands: &[Vec<[Vec<i64>; 2]>],
    chosen: &[usize],
) -> Vec<Vec<i64>> {
    let pairs: Vec<&[Vec<i64>; 2]> = chosen
        .iter()
        .enumerate()
        .map(|(k, &c)| &cands[k][c])
        .collect();
    let mut rows: Vec<Vec<i64>> = Vec::new();
    for (k, pair) in pairs.iter().enumerate() {
        for v in pair.iter() {
            // Count each distinct row once, at its first owner.
            let first = (0..alphas.len()).find(|&i| v[alphas[i].1] == 1);
            if first == Some(k) && !rows.contains(v) {
                for _ in 0..multiplicity(pair, v) {
                    rows.push(v.clone());
                }
            }
        }
    }
    rows.sort();
    rows
}

/// Running state of the subset search over `Sigma(G)`.
#[derive(Clone)]
struct Partial {
    chosen: Vec<usize>,
    lower: SimpleSet,
    upper: SimpleSet,
}

/// Whether catalog root `v` can join the roots already in `chosen`.
fn pairwise_ok(rs: &RootSystem, chosen: &[&RootVector], v: &RootVector) -> bool {
    for w in chosen {
        let double = |a: &RootVector, b: &RootVector| a.iter().zip(b).all(|(x, y)| *x == 2 * y);
        if double(v, w) || double(w, v) {
            return false;
        }
        for (x, y) in [(v, *w), (*w, v)] {
            if let Some(alpha) = doubled_simple(x) {
                let p = rs.pair(alpha, y);
                if p > 0 || p % 2 != 0 {
                    return false;
                }
            }
            if let Some((a, b)) = orthogonal_pair(rs, x) {
                if rs.pair(a, y) != rs.pair(b, y) {
                    return false;
                }
            }
        }
    }
    true
}

/// All admissible `Sigma` (as catalog indices) with their `S^p` intervals.
fn sigma_candidates(rs: &RootSystem, max_rank: Option<usize>) -> Vec<Partial> {
    let cat = rs.catalog();
    let mut out = Vec::new();
    let mut stack = vec![Partial {
        chosen: vec![],
        lower: SimpleSet::EMPTY,
        upper: rs.all(),
    }];
    while let Some(p) = stack.pop() {
        let start = p.chosen.last().map_or(0, |&i| i + 1);
        if max_rank.is_none_or(|m| p.chosen.len() < m) {
            let current: Vec<&RootVector> =
                p.chosen.iter().map(|&i| &cat.roots[i].vector).collect();
            for i in start..cat.roots.len() {
                let (lo, up) = cat.bounds[i];
                let lower = p.lower.union(lo);
                let upper = p.upper.intersection(up);
                if !lower.is_subset(upper) || !pairwise_ok(rs, &current, &cat.roots[i].vector) {
                    continue;
                }
                let mut chosen = p.chosen.clone();
                chosen.push(i);
                stack.push(Partial {
                    chosen,
                    lower,
                    upper,
                });
            }
        }
        out.push(p);
    }
    out
}

fn subsets_between(lower: SimpleSet, upper: SimpleSet) -> Vec<SimpleSet> {
    let free = upper.difference(lower).0;
    let mut out = Vec::new();
    let mut sub = free;
    loop {
        out.push(SimpleSet(lower.0 | sub));
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & free;
    }
    out.sort();
    out
}

/// Every spherical system of `rs` (up to `max_rank` spherical roots), in
/// canonical form and canonical order.
pub fn enumerate_systems(rs: Arc<RootSystem>, max_rank: Option<usize>) -> CensusReport {
    let cat = rs.catalog();
    let candidates = sigma_candidates(&rs, max_rank);
    let mut systems: Vec<SphericalSystem> = candidates
        .par_iter()
        .flat_map_iter(|p| {
            let sigma: Vec<RootVector> = p
                .chosen
                .iter()
                .map(|&i| cat.roots[i].vector.clone())
                .collect();
            let mats = a_matrices(&rs, &sigma);
            let mut found = Vec::new();
            for sp in subsets_between(p.lower, p.upper) {
                for a in &mats {
                    let sys = SphericalSystem::new(rs.clone(), sigma.clone(), sp, a.clone())
                        .canonical_form();
                    debug_assert!(sys.is_valid(), "enumerated system fails validation");
                    found.push(sys);
                }
            }
            found
        })
        .collect();
    systems.sort();
    let mut seen = HashSet::new();
    systems.retain(|s| seen.insert(s.key()));
    finish(systems)
}

fn finish(systems: Vec<SphericalSystem>) -> CensusReport {
    let mut by_rank = BTreeMap::new();
    for s in &systems {
        *by_rank.entry(s.rank()).or_insert(0) += 1;
    }
    CensusReport {
        by_rank,
        total: systems.len(),
        systems,
        flags: vec![],
    }
}

/// Diagram automorphisms of `rs` as permutations of simple-root indices.
pub fn diagram_automorphisms(rs: &RootSystem) -> Vec<Vec<usize>> {
    embeddings(&rs.cartan, &rs.cartan, rs.all(), false)
}

/// Image of a system under a diagram automorphism `perm` (label `i` goes to `perm[i]`).
pub fn apply_automorphism(sys: &SphericalSystem, perm: &[usize]) -> SphericalSystem {
    let n = sys.rs.rank();
    let sigma = sys
        .sigma
        .iter()
        .map(|s| {
            let mut v = vec![0; n];
            for i in 0..n {
                v[perm[i]] = s[i];
            }
            v
        })
        .collect();
    let sp = SimpleSet::from_indices(sys.sp.iter().map(|i| perm[i]));
    SphericalSystem::new(sys.rs.clone(), sigma, sp, sys.a_rows.clone()).canonical_form()
}

/// Keeps one representative (the least in canonical order) per orbit of
/// the diagram automorphism group.
pub fn modulo_diagram_automorphisms(report: CensusReport) -> CensusReport {
    let auts = diagram_automorphisms(
        &report
            .systems
            .first()
            .map(|s| s.rs.clone())
            .unwrap_or_else(|| {
                Arc::new(
                    crate::rootsys::build_root_system(&Default::default())
                        .expect("trivial root system"),
                )
            }),
    );
    let mut keep = Vec::new();
    let mut seen = HashSet::new();
    for s in report.systems {
        let orbit_min = auts
            .iter()
            .map(|p| apply_automorphism(&s, p))
            .min()
            .expect("identity is an automorphism");
        if seen.insert(orbit_min.key()) {
            keep.push(orbit_min);
        }
    }
    keep.sort();
    finish(keep)
}
