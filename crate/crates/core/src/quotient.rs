//! Distinguished subsets of colors, quotient systems, minimal-quotient
//! types, projective colors and strong solvability.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rootsys::{format_root, RootVector, SimpleSet, Q};
use crate::system::{
    negative_colors_of, simple_index, ColorKind, ColorSet, Placement, SphericalSystem,
};

/// Coordinate bound for the kernel-semigroup search.
pub const KERNEL_BOUND: i64 = 12;

/// A distinguished subset with a certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistinguishedSubset {
    /// Indices into the color set, increasing.
    pub members: Vec<usize>,
    /// Strictly positive weights with `sum witness[i] * row[members[i]] >= 0`.
    pub witness: Vec<Q>,
    /// No proper nonempty subset is distinguished.
    pub minimal: bool,
}

/// Type of a minimal quotient.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdgeKind {
    P,
    R,
    L,
    LOrR,
}

impl EdgeKind {
    /// Only the `R` verdict rests on an empirical rule rather than a theorem.
    pub fn heuristic(self) -> bool {
        self == EdgeKind::R
    }
}

impl fmt::Display for EdgeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EdgeKind::P => "P",
            EdgeKind::R => "R",
            EdgeKind::L => "L",
            EdgeKind::LOrR => "L-or-R",
        })
    }
}

#[derive(Clone, Debug)]
pub struct QuotientEdge {
    pub source: SphericalSystem,
    pub dset: DistinguishedSubset,
    pub target: SphericalSystem,
    pub minimal: bool,
    /// Present for minimal edges.
    pub kind: Option<EdgeKind>,
}

/// Certificate that the given pairing rows admit a strictly positive
/// combination with nonnegative values, found by Fourier-Motzkin
/// elimination over the rationals.
pub fn positive_witness(rows: &[&[i64]]) -> Option<Vec<Q>> {
    let k = rows.len();
    if k == 0 {
        return None;
    }
    let r = rows[0].len();
    // Constraints a.x >= b.
    let mut cons: Vec<(Vec<Q>, Q)> = Vec::new();
    for i in 0..k {
        let mut a = vec![Q::zero(); k];
        a[i] = Q::from_integer(1);
        cons.push((a, Q::from_integer(1)));
    }
    for j in 0..r {
        let a: Vec<Q> = rows.iter().map(|row| Q::from_integer(row[j])).collect();
        if a.iter().any(|x| !x.is_zero()) {
            cons.push((a, Q::zero()));
        }
    }

    let mut levels: Vec<Vec<(Vec<Q>, Q)>> = vec![Vec::new(); k + 1];
    levels[k] = normalize_all(cons);
    for v in (0..k).rev() {
        let cur = &levels[v + 1];
        let mut next = Vec::new();
        let (mut pos, mut neg) = (Vec::new(), Vec::new());
        for c in cur {
            if c.0[v].is_positive() {
                pos.push(c);
            } else if c.0[v].is_negative() {
                neg.push(c);
            } else {
                next.push(c.clone());
            }
        }
        for p in &pos {
            for n in &neg {
                let (fp, fn_) = (-n.0[v], p.0[v]);
                let a: Vec<Q> =
                    p.0.iter()
                        .zip(&n.0)
                        .map(|(x, y)| x * fp + y * fn_)
                        .collect();
                next.push((a, p.1 * fp + n.1 * fn_));
            }
        }
        levels[v] = normalize_all(next);
    }
    if levels[0].iter().any(|(_, b)| b.is_positive()) {
        return None;
    }
    let mut x: Vec<Q> = Vec::with_capacity(k);
    for v in 0..k {
        let mut lo: Option<Q> = None;
        let mut hi: Option<Q> = None;
        for (a, b) in &levels[v + 1] {
            if a[v].is_zero() {
                continue;
            }
            let rest: Q = (0..v).map(|i| a[i] * x[i]).sum();
            let bound = (b - rest) / a[v];
            if a[v].is_positive() {
                lo = Some(lo.map_or(bound, |l: Q| l.max(bound)));
            } else if a[v].is_negative() {
                hi = Some(hi.map_or(bound, |h: Q| h.min(bound)));
            }
        }
        let val = lo.expect("every variable has the lower bound 1");
        debug_assert!(hi.is_none_or(|h| val <= h));
        x.push(val);
    }
    Some(x)
}

fn normalize_all(cons: Vec<(Vec<Q>, Q)>) -> Vec<(Vec<Q>, Q)> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for (a, b) in cons {
        let Some(s) = a.iter().find(|x| !x.is_zero()).map(|x| x.abs()) else {
            // 0 >= b: keep infeasible ones only, as a marker.
            if b.is_positive() {
                out.push((a, b));
            }
            continue;
        };
        let a: Vec<Q> = a.iter().map(|x| x / s).collect();
        let b = b / s;
        if seen.insert((a.clone(), b)) {
            out.push((a, b));
        }
    }
    out
}

/// Exhaustive search for an integer witness with entries in `1..=bound`.
pub fn integer_witness(rows: &[&[i64]], bound: i64) -> Option<Vec<i64>> {
    let k = rows.len();
    if k == 0 {
        return None;
    }
    let r = rows[0].len();
    // Largest amount the rows from index i on can still add to column j.
    let mut reach = vec![vec![0i64; r]; k + 1];
    for i in (0..k).rev() {
        for j in 0..r {
            reach[i][j] = reach[i + 1][j] + bound * rows[i][j].max(0) + rows[i][j].min(0);
        }
    }
    fn go(
        i: usize,
        rows: &[&[i64]],
        bound: i64,
        reach: &[Vec<i64>],
        acc: &mut Vec<i64>,
        x: &mut Vec<i64>,
    ) -> bool {
        if acc.iter().zip(&reach[i]).any(|(a, m)| a + m < 0) {
            return false;
        }
        if i == rows.len() {
            return true;
        }
        for v in 1..=bound {
            for (a, c) in acc.iter_mut().zip(rows[i]) {
                *a += v * c;
            }
            x.push(v);
            if go(i + 1, rows, bound, reach, acc, x) {
                return true;
            }
            x.pop();
            for (a, c) in acc.iter_mut().zip(rows[i]) {
                *a -= v * c;
            }
        }
        false
    }
    let mut x = Vec::with_capacity(k);
    go(0, rows, bound, &reach, &mut vec![0; r], &mut x).then_some(x)
}

/// The oracle bound `1 + r * max|c|` for a pairing matrix with `r` columns.
pub fn oracle_bound(cs: &ColorSet, rank: usize) -> i64 {
    let m = cs
        .colors
        .iter()
        .flat_map(|c| c.row.iter())
        .map(|v| v.abs())
        .max()
        .unwrap_or(0);
    1 + rank as i64 * m
}

fn rows_of<'a>(cs: &'a ColorSet, members: &[usize]) -> Vec<&'a [i64]> {
    members
        .iter()
        .map(|&i| cs.colors[i].row.as_slice())
        .collect()
}

/// Witness for `members` being distinguished, or `None`. The empty set is
/// never reported as distinguished.
pub fn is_distinguished(sys: &SphericalSystem, members: &[usize]) -> Result<Option<Vec<Q>>> {
    let cs = sys.colors()?;
    Ok(witness_in(&cs, members))
}

fn witness_in(cs: &ColorSet, members: &[usize]) -> Option<Vec<Q>> {
    if members.is_empty() || members.iter().any(|&i| i >= cs.len()) {
        return None;
    }
    positive_witness(&rows_of(cs, members))
}

fn mask_members(mask: u64) -> Vec<usize> {
    (0..64).filter(|&i| mask >> i & 1 == 1).collect()
}

/// Every nonempty distinguished subset, ordered by size then members,
/// with minimality flags.
pub fn enumerate_distinguished(sys: &SphericalSystem) -> Result<Vec<DistinguishedSubset>> {
    let cs = sys.colors()?;
    Ok(distinguished_in(&cs))
}

pub(crate) fn distinguished_in(cs: &ColorSet) -> Vec<DistinguishedSubset> {
    let n = cs.len();
    let mut found: Vec<(u64, Vec<Q>)> = Vec::new();
    for mask in 1u64..(1u64 << n) {
        if let Some(w) = witness_in(cs, &mask_members(mask)) {
            found.push((mask, w));
        }
    }
    let masks: Vec<u64> = found.iter().map(|f| f.0).collect();
    let mut out: Vec<DistinguishedSubset> = found
        .into_iter()
        .map(|(mask, witness)| DistinguishedSubset {
            members: mask_members(mask),
            witness,
            minimal: !masks.iter().any(|&o| o != mask && o & mask == o),
        })
        .collect();
    out.sort_by(|a, b| {
        a.members
            .len()
            .cmp(&b.members.len())
            .then_with(|| a.members.cmp(&b.members))
    });
    out
}

/// Solution space of `M m = 0` as (pivot columns, free columns, rref rows).
fn kernel_rref(rows: &[&[i64]], r: usize) -> (Vec<usize>, Vec<usize>, Vec<Vec<Q>>) {
    let mut m: Vec<Vec<Q>> = rows
        .iter()
        .map(|row| row.iter().map(|&v| Q::from_integer(v)).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..r {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let lead = m[rank][col];
        for x in m[rank].iter_mut() {
            *x /= lead;
        }
        let pivot_row = m[rank].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != rank && !row[col].is_zero() {
                let f = row[col];
                for (x, &p) in row.iter_mut().zip(&pivot_row) {
                    *x -= p * f;
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    m.truncate(rank);
    let free = (0..r).filter(|c| !pivots.contains(c)).collect();
    (pivots, free, m)
}

/// Nonzero points of `{m in N^r : rows . m = 0}` with coordinates at most `bound`.
fn kernel_points(rows: &[&[i64]], r: usize, bound: i64) -> Vec<Vec<i64>> {
    let (pivots, free, rref) = kernel_rref(rows, r);
    let mut out = Vec::new();
    let d = free.len();
    let mut vals = vec![0i64; d];
    loop {
        let mut m = vec![0i64; r];
        for (k, &c) in free.iter().enumerate() {
            m[c] = vals[k];
        }
        let mut ok = true;
        for (row, &pc) in rref.iter().zip(&pivots) {
            let v: Q = -free
                .iter()
                .map(|&c| row[c] * Q::from_integer(m[c]))
                .sum::<Q>();
            if !v.is_integer() || v.is_negative() || v.to_integer() > bound {
                ok = false;
                break;
            }
            m[pc] = v.to_integer();
        }
        if ok && m.iter().any(|&x| x != 0) {
            out.push(m);
        }
        // Next free assignment in the box.
        let mut k = 0;
        while k < d {
            vals[k] += 1;
            if vals[k] <= bound {
                break;
            }
            vals[k] = 0;
            k += 1;
        }
        if k == d {
            break;
        }
    }
    out
}

/// Minimal generators of the kernel semigroup, checked for freeness on
/// every point of the search box.
pub fn kernel_generators(rows: &[&[i64]], r: usize, bound: i64) -> Result<Vec<Vec<i64>>> {
    let pts = kernel_points(rows, r, bound);
    let le = |a: &[i64], b: &[i64]| a.iter().zip(b).all(|(x, y)| x <= y);
    let mut gens: Vec<Vec<i64>> = pts
        .iter()
        .filter(|p| !pts.iter().any(|q| q != *p && le(q, p)))
        .cloned()
        .collect();
    gens.sort();
    // Independence, then nonnegative integral coordinates for every point.
    let cols: Vec<Vec<i64>> = (0..r)
        .map(|j| gens.iter().map(|g| g[j]).collect())
        .collect();
    let col_refs: Vec<&[i64]> = cols.iter().map(|c| c.as_slice()).collect();
    let (piv, _, _) = kernel_rref(&col_refs, gens.len());
    if piv.len() != gens.len() {
        return Err(Error::NotFree { bound });
    }
    for p in &pts {
        if !decomposes(p, &gens) {
            return Err(Error::NotFree { bound });
        }
    }
    Ok(gens)
}

fn decomposes(p: &[i64], gens: &[Vec<i64>]) -> bool {
    // Depth-first over how many copies of each generator to subtract.
    fn go(p: &[i64], gens: &[Vec<i64>], k: usize) -> bool {
        if p.iter().all(|&x| x == 0) {
            return true;
        }
        if k == gens.len() {
            return false;
        }
        let mut cur = p.to_vec();
        loop {
            if go(&cur, gens, k + 1) {
                return true;
            }
            for (c, g) in cur.iter_mut().zip(&gens[k]) {
                *c -= g;
            }
            if cur.iter().any(|&x| x < 0) {
                return false;
            }
        }
    }
    go(p, gens, 0)
}

/// The quotient system `S / Delta*`.
pub fn quotient(sys: &SphericalSystem, members: &[usize]) -> Result<SphericalSystem> {
    let cs = sys.colors()?;
    quotient_in(sys, &cs, members)
}

pub(crate) fn quotient_in(
    sys: &SphericalSystem,
    cs: &ColorSet,
    members: &[usize],
) -> Result<SphericalSystem> {
    if witness_in(cs, members).is_none() {
        return Err(Error::NotDistinguished(members.to_vec()));
    }
    let r = sys.rank();
    let gens = kernel_generators(&rows_of(cs, members), r, KERNEL_BOUND)?;
    let n = sys.rs.rank();
    let mut sigma: Vec<RootVector> = Vec::with_capacity(gens.len());
    for g in &gens {
        let mut v = vec![0i64; n];
        for (j, &m) in g.iter().enumerate() {
            for (x, s) in v.iter_mut().zip(&sys.sigma[j]) {
                *x += m * s;
            }
        }
        if sys.rs.catalog().get(&v).is_none() {
            return Err(Error::ForeignQuotientRoot(format_root(&v)));
        }
        sigma.push(v);
    }
    let inside: HashSet<usize> = members.iter().copied().collect();
    let mut sp = sys.sp;
    for alpha in 0..n {
        if cs.delta_of[alpha].iter().all(|c| inside.contains(c)) {
            sp.insert(alpha);
        }
    }
    let new_simple = SimpleSet::from_indices(sigma.iter().filter_map(|s| simple_index(s)));
    let a_rows = sys
        .a_rows
        .iter()
        .filter(|row| !sys.owners(row).intersection(new_simple).is_empty())
        .map(|row| {
            gens.iter()
                .map(|g| g.iter().zip(row.iter()).map(|(m, c)| m * c).sum())
                .collect()
        })
        .collect();
    let q = SphericalSystem::new(sys.rs.clone(), sigma, sp, a_rows).canonical_form();
    let v = q.validate();
    if !v.is_empty() {
        return Err(Error::QuotientInvalid(v));
    }
    Ok(q)
}

/// Source spherical roots that contribute to some target spherical root.
pub fn sigma_phi(sys: &SphericalSystem, members: &[usize]) -> Result<Vec<RootVector>> {
    let cs = sys.colors()?;
    let gens = kernel_generators(&rows_of(&cs, members), sys.rank(), KERNEL_BOUND)?;
    Ok((0..sys.rank())
        .filter(|&j| gens.iter().any(|g| g[j] > 0))
        .map(|j| sys.sigma[j].clone())
        .collect())
}

/// Negative colors of `target` that are not negative with the same
/// placement in `source`, keyed by their owner sets.
fn new_negatives(source: &SphericalSystem, target: &SphericalSystem) -> Vec<Placement> {
    let cs_s = source.colors_unchecked();
    let cs_t = target.colors_unchecked();
    let old: HashMap<usize, Placement> = negative_colors_of(source, &cs_s)
        .into_iter()
        .flat_map(|(k, p)| {
            cs_s.colors[k]
                .owners()
                .iter()
                .map(move |a| (a, p))
                .collect::<Vec<_>>()
        })
        .collect();
    negative_colors_of(target, &cs_t)
        .into_iter()
        .filter(|(k, p)| {
            let alpha = cs_t.colors[*k]
                .owners()
                .iter()
                .next()
                .expect("colors have owners");
            let single = cs_s.delta_of[alpha].len() == 1;
            !(single && old.get(&alpha) == Some(p))
        })
        .map(|(_, p)| p)
        .collect()
}

/// Type of the minimal quotient of `sys` by `members`.
pub fn classify(sys: &SphericalSystem, members: &[usize]) -> Result<EdgeKind> {
    let cs = sys.colors()?;
    let all = distinguished_in(&cs);
    let d = all
        .iter()
        .find(|d| d.members == members)
        .ok_or_else(|| Error::NotDistinguished(members.to_vec()))?;
    if !d.minimal {
        return Err(Error::NotMinimal);
    }
    let target = quotient_in(sys, &cs, members)?;
    Ok(classify_pair(sys, &target))
}

pub(crate) fn classify_pair(source: &SphericalSystem, target: &SphericalSystem) -> EdgeKind {
    let (ds, dt) = (source.defect_unchecked(), target.defect_unchecked());
    if dt < ds {
        return EdgeKind::P;
    }
    if dt > ds {
        return EdgeKind::L;
    }
    let fresh = new_negatives(source, target);
    if fresh.contains(&Placement::Exterior) {
        EdgeKind::L
    } else if fresh.is_empty() {
        EdgeKind::R
    } else {
        EdgeKind::LOrR
    }
}

/// All quotient edges out of `sys`, one per distinguished subset.
pub fn quotient_edges(sys: &SphericalSystem) -> Result<Vec<QuotientEdge>> {
    let cs = sys.colors()?;
    distinguished_in(&cs)
        .into_iter()
        .map(|dset| {
            let target = quotient_in(sys, &cs, &dset.members)?;
            let kind = dset.minimal.then(|| classify_pair(sys, &target));
            Ok(QuotientEdge {
                source: sys.clone(),
                minimal: dset.minimal,
                dset,
                target,
                kind,
            })
        })
        .collect()
}

/// `A`-rows with nonnegative values, with the number of simple roots owning each.
pub fn projective_colors(sys: &SphericalSystem) -> Result<Vec<(usize, usize)>> {
    sys.ensure_valid()?;
    Ok(sys
        .a_rows
        .iter()
        .enumerate()
        .filter(|(_, row)| row.iter().all(|&v| v >= 0))
        .map(|(k, row)| (k, sys.owners(row).len()))
        .collect())
}

/// A chain of single-projective-color quotients ending at `(∅, ∅, ∅)`,
/// found breadth-first, or `None`.
pub fn is_strongly_solvable(sys: &SphericalSystem) -> Result<Option<Vec<SphericalSystem>>> {
    sys.ensure_valid()?;
    let is_flag = |s: &SphericalSystem| s.sigma.is_empty() && s.sp.is_empty();
    let start = sys.canonical_form();
    let mut parent: HashMap<SphericalSystem, Option<SphericalSystem>> = HashMap::new();
    parent.insert(start.clone(), None);
    let mut queue = VecDeque::from([start]);
    while let Some(cur) = queue.pop_front() {
        if is_flag(&cur) {
            let mut chain = vec![cur.clone()];
            let mut at = cur;
            while let Some(Some(p)) = parent.get(&at) {
                chain.push(p.clone());
                at = p.clone();
            }
            chain.reverse();
            return Ok(Some(chain));
        }
        let cs = cur.colors_unchecked();
        for (k, c) in cs.colors.iter().enumerate() {
            if !matches!(c.kind, ColorKind::A { .. }) || c.row.iter().any(|&v| v < 0) {
                continue;
            }
            let next = quotient_in(&cur, &cs, &[k])?;
            if !parent.contains_key(&next) {
                parent.insert(next.clone(), Some(cur.clone()));
                queue.push_back(next);
            }
        }
    }
    Ok(None)
}

/// Which quotients enter a lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LatticeScope {
    /// Every quotient, homogeneous ones included.
    All,
    /// Only quotients with at least one spherical root.
    NonHomogeneous,
}

/// Edge of a quotient lattice between node indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeEdge {
    pub from: usize,
    pub to: usize,
    /// Colors of the source node forming the distinguished subset.
    pub members: Vec<usize>,
    pub minimal: bool,
    pub kind: Option<EdgeKind>,
}

#[derive(Clone, Debug)]
pub struct QuotientLattice {
    /// Node 0 is the starting system.
    pub nodes: Vec<SphericalSystem>,
    pub edges: Vec<LatticeEdge>,
}

/// Systems reachable from `sys` by successive quotients, with one edge per
/// (source, target) pair. When several subsets give the same target the
/// edge keeps the first minimal one, else the first one.
pub fn quotient_lattice(sys: &SphericalSystem, scope: LatticeScope) -> Result<QuotientLattice> {
    let start = sys.canonical_form();
    start.ensure_valid()?;
    let mut nodes = vec![start.clone()];
    let mut index: HashMap<SphericalSystem, usize> = HashMap::from([(start, 0)]);
    let mut edges = Vec::new();
    let mut k = 0;
    while k < nodes.len() {
        let cur = nodes[k].clone();
        let mut best: HashMap<usize, LatticeEdge> = HashMap::new();
        for e in quotient_edges(&cur)? {
            if scope == LatticeScope::NonHomogeneous && e.target.sigma.is_empty() {
                continue;
            }
            let to = match index.get(&e.target) {
                Some(&i) => i,
                None => {
                    nodes.push(e.target.clone());
                    index.insert(e.target.clone(), nodes.len() - 1);
                    nodes.len() - 1
                }
            };
            if to == k {
                continue;
            }
            let cand = LatticeEdge {
                from: k,
                to,
                members: e.dset.members,
                minimal: e.minimal,
                kind: e.kind,
            };
            match best.get(&to) {
                Some(old) if old.minimal || !cand.minimal => {}
                _ => {
                    best.insert(to, cand);
                }
            }
        }
        let mut out: Vec<LatticeEdge> = best.into_values().collect();
        out.sort_by_key(|e| e.to);
        edges.extend(out);
        k += 1;
    }
    Ok(QuotientLattice { nodes, edges })
}

/// Systems of `systems` from which `target` is reached by a chain of
/// minimal quotients of type `P`, together with those edges. Node 0 is
/// `target`; every edge points from a source system towards `target`.
pub fn quotient_forest(
    systems: &[SphericalSystem],
    target: &SphericalSystem,
) -> Result<QuotientLattice> {
    let target = target.canonical_form();
    target.ensure_valid()?;
    let mut p_edges: HashMap<SphericalSystem, Vec<(usize, Vec<usize>)>> = HashMap::new();
    for (i, s) in systems.iter().enumerate() {
        for e in quotient_edges(s)? {
            if e.minimal && e.kind == Some(EdgeKind::P) {
                p_edges
                    .entry(e.target)
                    .or_default()
                    .push((i, e.dset.members));
            }
        }
    }
    let mut nodes = vec![target.clone()];
    let mut index: HashMap<SphericalSystem, usize> = HashMap::from([(target, 0)]);
    let mut edges = Vec::new();
    let mut k = 0;
    while k < nodes.len() {
        let sources = p_edges.get(&nodes[k]).cloned().unwrap_or_default();
        for (i, members) in sources {
            let src = systems[i].canonical_form();
            let from = match index.get(&src) {
                Some(&j) => j,
                None => {
                    nodes.push(src.clone());
                    index.insert(src, nodes.len() - 1);
                    nodes.len() - 1
                }
            };
            edges.push(LatticeEdge {
                from,
                to: k,
                members,
                minimal: true,
                kind: Some(EdgeKind::P),
            });
        }
        k += 1;
    }
    Ok(QuotientLattice { nodes, edges })
}
