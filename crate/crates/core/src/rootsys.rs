//! Finite root systems as exact integer data.
//!
//! Simple roots carry Bourbaki labels inside each simple component, and the
//! Cartan matrix is stored with `cartan[i][j] = <alpha_i^vee, alpha_j>`.
//! Weights are rational vectors in root coordinates.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sphroots::Catalog;

/// Exact rational number used for weights and feasibility witnesses.
pub type Q = Ratio<i64>;

/// Element of the root lattice, as coefficients over the simple roots.
pub type RootVector = Vec<i64>;

/// Rational weight, as coefficients over the simple roots.
pub type WeightVector = Vec<Q>;

/// A set of simple-root indices (0-based internally, printed 1-based).
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleSet(pub u32);

impl SimpleSet {
    pub const EMPTY: SimpleSet = SimpleSet(0);

    pub fn full(n: usize) -> Self {
        SimpleSet(if n >= 32 { u32::MAX } else { (1u32 << n) - 1 })
    }

    pub fn singleton(i: usize) -> Self {
        SimpleSet(1 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        SimpleSet(it.into_iter().fold(0, |m, i| m | (1 << i)))
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1 << i);
    }

    pub fn with(self, i: usize) -> Self {
        SimpleSet(self.0 | 1 << i)
    }

    pub fn without(self, i: usize) -> Self {
        SimpleSet(self.0 & !(1 << i))
    }

    pub fn union(self, o: Self) -> Self {
        SimpleSet(self.0 | o.0)
    }

    pub fn intersection(self, o: Self) -> Self {
        SimpleSet(self.0 & o.0)
    }

    pub fn difference(self, o: Self) -> Self {
        SimpleSet(self.0 & !o.0)
    }

    pub fn is_subset(self, o: Self) -> bool {
        self.0 & !o.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |&i| self.contains(i))
    }

    /// 1-based labels, the form used in documents and on the command line.
    pub fn labels(self) -> Vec<usize> {
        self.iter().map(|i| i + 1).collect()
    }
}

impl fmt::Display for SimpleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|i| format!("a{}", i + 1)).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl fmt::Debug for SimpleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Cartan-Killing family letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Family> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }

    pub fn is_legal_rank(self, rank: usize) -> bool {
        match self {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        }
    }
}

/// One simple factor of a root system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Component {
    #[serde(rename = "type")]
    pub family: Family,
    pub rank: usize,
}

impl Component {
    pub fn new(family: Family, rank: usize) -> Self {
        Component { family, rank }
    }

    /// Standard Cartan matrix in Bourbaki labelling.
    pub fn cartan(&self) -> Vec<Vec<i64>> {
        let r = self.rank;
        let mut c = vec![vec![0i64; r]; r];
        for (i, row) in c.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize, cij: i64, cji: i64| {
            c[i][j] = cij;
            c[j][i] = cji;
        };
        match self.family {
            Family::A => (1..r).for_each(|i| link(i - 1, i, -1, -1)),
            Family::B => {
                (1..r - 1).for_each(|i| link(i - 1, i, -1, -1));
                link(r - 2, r - 1, -1, -2);
            }
            Family::C => {
                (1..r - 1).for_each(|i| link(i - 1, i, -1, -1));
                link(r - 2, r - 1, -2, -1);
            }
            Family::D => {
                (1..r - 1).for_each(|i| link(i - 1, i, -1, -1));
                link(r - 3, r - 1, -1, -1);
            }
            Family::E => {
                link(0, 2, -1, -1);
                link(1, 3, -1, -1);
                (3..r).for_each(|i| link(i - 1, i, -1, -1));
            }
            Family::F => {
                link(0, 1, -1, -1);
                link(1, 2, -1, -2);
                link(2, 3, -1, -1);
            }
            Family::G => link(0, 1, -3, -1),
        }
        c
    }

    /// The opposition involution `-w0` on local simple-root indices.
    pub fn duality(&self) -> Vec<usize> {
        let r = self.rank;
        let mut p: Vec<usize> = (0..r).collect();
        match self.family {
            Family::A => p.reverse(),
            Family::D if r % 2 == 1 => p.swap(r - 2, r - 1),
            Family::E if r == 6 => {
                p.swap(0, 5);
                p.swap(2, 4);
            }
            _ => {}
        }
        p
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

/// Ordered list of simple factors.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RootSystemSpec {
    pub components: Vec<Component>,
}

impl RootSystemSpec {
    pub fn simple(family: Family, rank: usize) -> Self {
        RootSystemSpec {
            components: vec![Component::new(family, rank)],
        }
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(|c| c.rank).sum()
    }

    pub fn check(&self) -> Result<()> {
        for c in &self.components {
            if !c.family.is_legal_rank(c.rank) {
                return Err(Error::IllegalRank {
                    family: c.family.letter(),
                    rank: c.rank,
                });
            }
        }
        Ok(())
    }
}

impl fmt::Display for RootSystemSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return write!(f, "trivial");
        }
        let parts: Vec<String> = self.components.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join("×"))
    }
}

impl FromStr for RootSystemSpec {
    type Err = Error;

    /// Accepts forms like `F4`, `A2xA1`, `A2×A1` or `B3*A1`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadSpec(s.to_string());
        let mut components = Vec::new();
        for part in s.split(['x', 'X', '×', '*']) {
            let part = part.trim();
            let mut chars = part.chars();
            let family = chars.next().and_then(Family::from_letter).ok_or_else(bad)?;
            let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
            components.push(Component::new(family, rank));
        }
        let spec = RootSystemSpec { components };
        spec.check()?;
        Ok(spec)
    }
}

/// A finite root system with its positive roots.
#[derive(Debug)]
pub struct RootSystem {
    pub spec: RootSystemSpec,
    pub cartan: Vec<Vec<i64>>,
    pub positive_roots: Vec<RootVector>,
    /// Starting index of each component in the global labelling.
    pub offsets: Vec<usize>,
    pub(crate) spherical: OnceLock<Catalog>,
}

impl PartialEq for RootSystem {
    fn eq(&self, other: &Self) -> bool {
        self.spec == other.spec
    }
}

impl Eq for RootSystem {}

/// Generates the positive roots by closing the simple roots under simple
/// reflections and keeping the positive images.
pub fn build_root_system(spec: &RootSystemSpec) -> Result<RootSystem> {
    spec.check()?;
    let n = spec.rank();
    let mut cartan = vec![vec![0i64; n]; n];
    let mut offsets = Vec::with_capacity(spec.components.len());
    let mut off = 0;
    for comp in &spec.components {
        offsets.push(off);
        let local = comp.cartan();
        for i in 0..comp.rank {
            for j in 0..comp.rank {
                cartan[off + i][off + j] = local[i][j];
            }
        }
        off += comp.rank;
    }

    let mut roots: Vec<RootVector> = (0..n).map(|i| unit(n, i)).collect();
    let mut seen: HashSet<RootVector> = roots.iter().cloned().collect();
    let mut k = 0;
    while k < roots.len() {
        let beta = roots[k].clone();
        for (i, row) in cartan.iter().enumerate() {
            let p = dot(row, &beta);
            let mut img = beta.clone();
            img[i] -= p;
            if img.iter().all(|&c| c >= 0) && img.iter().any(|&c| c > 0) && seen.insert(img.clone())
            {
                roots.push(img);
            }
        }
        k += 1;
    }
    roots.sort_by(|a, b| height(a).cmp(&height(b)).then_with(|| b.cmp(a)));

    Ok(RootSystem {
        spec: spec.clone(),
        cartan,
        positive_roots: roots,
        offsets,
        spherical: OnceLock::new(),
    })
}

pub(crate) fn unit(n: usize, i: usize) -> RootVector {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

pub(crate) fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn height(v: &[i64]) -> i64 {
    v.iter().sum()
}

/// Indices with nonzero coefficient.
pub fn support(v: &[i64]) -> SimpleSet {
    SimpleSet::from_indices(
        v.iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, _)| i),
    )
}

impl RootSystem {
    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn all(&self) -> SimpleSet {
        SimpleSet::full(self.rank())
    }

    /// `<alpha_i^vee, v>` without bounds checks.
    pub fn pair(&self, i: usize, v: &[i64]) -> i64 {
        dot(&self.cartan[i], v)
    }

    /// `<alpha_i^vee, lambda>` for an integral vector in root coordinates.
    pub fn cartan_eval(&self, i: usize, lambda: &[i64]) -> Result<i64> {
        self.check_index(i)?;
        self.check_len(lambda.len())?;
        Ok(self.pair(i, lambda))
    }

    /// `<alpha_i^vee, lambda>` for a rational weight in root coordinates.
    pub fn cartan_eval_q(&self, i: usize, lambda: &[Q]) -> Result<Q> {
        self.check_index(i)?;
        self.check_len(lambda.len())?;
        Ok(self.cartan[i].iter().zip(lambda).map(|(&c, x)| x * c).sum())
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i >= self.rank() {
            return Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank(),
            });
        }
        Ok(())
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                got: len,
            });
        }
        Ok(())
    }

    /// Whether `alpha_i` and `alpha_j` are orthogonal.
    pub fn orthogonal(&self, i: usize, j: usize) -> bool {
        self.cartan[i][j] == 0
    }

    /// Fundamental weights in root coordinates, the columns of the inverse
    /// Cartan matrix.
    pub fn fundamental_weights(&self) -> Vec<WeightVector> {
        let inv = invert(&self.cartan);
        (0..self.rank())
            .map(|i| inv.iter().map(|row| row[i]).collect())
            .collect()
    }

    /// Coordinates of a weight in the fundamental-weight basis.
    pub fn to_fundamental(&self, lambda: &[Q]) -> Result<Vec<Q>> {
        (0..self.rank())
            .map(|i| self.cartan_eval_q(i, lambda))
            .collect()
    }

    /// Weight in root coordinates from fundamental-weight coordinates.
    pub fn from_fundamental(&self, coords: &[Q]) -> Result<WeightVector> {
        self.check_len(coords.len())?;
        let w = self.fundamental_weights();
        let mut out = vec![Q::zero(); self.rank()];
        for (wi, ci) in w.iter().zip(coords) {
            for (o, x) in out.iter_mut().zip(wi) {
                *o += x * ci;
            }
        }
        Ok(out)
    }

    /// `R ∩ ZS'` with its recognized type, plus the map from the
    /// sub-system's labels to ambient labels.
    pub fn sub_root_system(&self, subset: SimpleSet) -> (RootSystem, Vec<usize>) {
        let (spec, embedding) = recognize(&self.cartan, subset);
        let sub = build_root_system(&spec).expect("recognized types have legal ranks");
        (sub, embedding)
    }

    /// Grading of the nilradical of the maximal parabolic attached to `alpha`.
    pub fn parabolic_grading(&self, alpha: usize) -> Result<ParabolicGrading> {
        if self.spec.components.len() != 1 {
            return Err(Error::Reducible);
        }
        self.check_index(alpha)?;
        let s = self
            .positive_roots
            .iter()
            .map(|b| b[alpha])
            .max()
            .unwrap_or(0);
        let mut dims = vec![0usize; s as usize];
        for b in &self.positive_roots {
            if b[alpha] > 0 {
                dims[b[alpha] as usize - 1] += 1;
            }
        }
        let (levi_type, _) = recognize(&self.cartan, self.all().without(alpha));
        Ok(ParabolicGrading {
            alpha,
            levi_type,
            s,
            dims,
        })
    }

    /// The dual dominant weight `pi* = -w0(pi)`, via the diagram involution.
    pub fn dual_weight(&self, pi: &[Q]) -> Result<WeightVector> {
        let f = self.to_fundamental(pi)?;
        if f.iter().any(|x| x.is_negative() || !x.is_integer()) {
            return Err(Error::NotDominant);
        }
        let mut g = vec![Q::zero(); self.rank()];
        for (comp, &off) in self.spec.components.iter().zip(&self.offsets) {
            for (i, j) in comp.duality().into_iter().enumerate() {
                g[off + j] = f[off + i];
            }
        }
        self.from_fundamental(&g)
    }

    /// Dual weight expressed on fundamental coordinates.
    pub fn dual_fundamental(&self, coords: &[i64]) -> Vec<i64> {
        let mut g = vec![0; self.rank()];
        for (comp, &off) in self.spec.components.iter().zip(&self.offsets) {
            for (i, j) in comp.duality().into_iter().enumerate() {
                g[off + j] = coords[off + i];
            }
        }
        g
    }
}

/// Convenience constructor.
pub fn root_system(family: Family, rank: usize) -> Result<RootSystem> {
    build_root_system(&RootSystemSpec::simple(family, rank))
}

/// Row `[dim n_1, ..., dim n_s]` of the grading table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParabolicGrading {
    pub alpha: usize,
    pub levi_type: RootSystemSpec,
    pub s: i64,
    pub dims: Vec<usize>,
}

fn invert(m: &[Vec<i64>]) -> Vec<Vec<Q>> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Q> = row.iter().map(|&x| Q::from_integer(x)).collect();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("Cartan matrices are invertible");
        a.swap(col, piv);
        let p = a[col][col];
        for x in a[col].iter_mut() {
            *x /= p;
        }
        let pivot_row = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let f = row[col];
                for (x, &p) in row.iter_mut().zip(&pivot_row) {
                    *x -= p * f;
                }
            }
        }
    }
    a.into_iter().map(|r| r[n..].to_vec()).collect()
}

/// Candidate simple types of a connected diagram with `r` nodes, in the
/// order tried by recognition. B2 is preferred over C2 and A3 over D3.
fn candidate_types(r: usize) -> Vec<Component> {
    let mut out = vec![Component::new(Family::A, r)];
    if r >= 2 {
        out.push(Component::new(Family::B, r));
    }
    if r >= 3 {
        out.push(Component::new(Family::C, r));
    }
    if r >= 4 {
        out.push(Component::new(Family::D, r));
    }
    if (6..=8).contains(&r) {
        out.push(Component::new(Family::E, r));
    }
    if r == 4 {
        out.push(Component::new(Family::F, 4));
    }
    if r == 2 {
        out.push(Component::new(Family::G, 2));
    }
    out
}

/// Connected components of the diagram restricted to `subset`, each sorted,
/// listed by smallest index.
pub(crate) fn connected_components(cartan: &[Vec<i64>], subset: SimpleSet) -> Vec<Vec<usize>> {
    let mut left = subset;
    let mut out = Vec::new();
    while let Some(start) = left.iter().next() {
        let mut comp = SimpleSet::singleton(start);
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for j in subset.iter() {
                if cartan[i][j] != 0 && !comp.contains(j) {
                    comp.insert(j);
                    stack.push(j);
                }
            }
        }
        left = left.difference(comp);
        out.push(comp.iter().collect());
    }
    out
}

/// Type of the sub-diagram on `subset`, and for each label of that type
/// the ambient index it sits on.
pub(crate) fn recognize(cartan: &[Vec<i64>], subset: SimpleSet) -> (RootSystemSpec, Vec<usize>) {
    let mut components = Vec::new();
    let mut embedding = Vec::new();
    for comp in connected_components(cartan, subset) {
        let allowed = SimpleSet::from_indices(comp.iter().copied());
        let found = candidate_types(comp.len()).into_iter().find_map(|t| {
            embeddings(&t.cartan(), cartan, allowed, true)
                .into_iter()
                .next()
                .map(|e| (t, e))
        });
        let (t, e) = found.expect("every connected Cartan submatrix has a finite type");
        components.push(t);
        embedding.extend(e);
    }
    (RootSystemSpec { components }, embedding)
}

/// Injective maps `f` from the labels of `pattern` into `allowed` such that
/// `target[f(a)][f(b)] == pattern[a][b]` for all `a`, `b`.
pub(crate) fn embeddings(
    pattern: &[Vec<i64>],
    target: &[Vec<i64>],
    allowed: SimpleSet,
    first_only: bool,
) -> Vec<Vec<usize>> {
    fn go(
        pattern: &[Vec<i64>],
        target: &[Vec<i64>],
        allowed: SimpleSet,
        cur: &mut Vec<usize>,
        used: SimpleSet,
        first_only: bool,
        out: &mut Vec<Vec<usize>>,
    ) {
        let a = cur.len();
        if a == pattern.len() {
            out.push(cur.clone());
            return;
        }
        for x in allowed.difference(used).iter() {
            let ok = cur
                .iter()
                .enumerate()
                .all(|(b, &y)| target[x][y] == pattern[a][b] && target[y][x] == pattern[b][a]);
            if ok {
                cur.push(x);
                go(pattern, target, allowed, cur, used.with(x), first_only, out);
                cur.pop();
                if first_only && !out.is_empty() {
                    return;
                }
            }
        }
    }
    let mut out = Vec::new();
    go(
        pattern,
        target,
        allowed,
        &mut Vec::new(),
        SimpleSet::EMPTY,
        first_only,
        &mut out,
    );
    out
}

/// Textual form of a root-lattice vector, e.g. `a1+2a2+3a3+2a4`.
pub fn format_root(v: &[i64]) -> String {
    let mut parts = Vec::new();
    for (i, &c) in v.iter().enumerate() {
        match c {
            0 => {}
            1 => parts.push(format!("a{}", i + 1)),
            -1 => parts.push(format!("-a{}", i + 1)),
            _ => parts.push(format!("{}a{}", c, i + 1)),
        }
    }
    if parts.is_empty() {
        return "0".into();
    }
    parts.join("+").replace("+-", "-")
}

/// Parses the output of [`format_root`] back into a vector of length `n`.
/// Accepts forms like `a1+2a2+3a3`, `2a1` or `0`, with optional spaces.
pub fn parse_root(text: &str, n: usize) -> Result<RootVector> {
    let bad = || Error::BadSpec(text.to_string());
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut v = vec![0i64; n];
    if compact == "0" {
        return Ok(v);
    }
    let mut rest = compact.as_str();
    while !rest.is_empty() {
        let sign = match rest.as_bytes()[0] {
            b'-' => -1,
            b'+' => 1,
            _ if rest.len() == compact.len() => 1,
            _ => return Err(bad()),
        };
        if rest.starts_with(['+', '-']) {
            rest = &rest[1..];
        }
        let end = rest.find(['+', '-']).unwrap_or(rest.len());
        let (term, tail) = rest.split_at(end);
        rest = tail;
        let (coef, label) = term.split_once('a').ok_or_else(bad)?;
        let coef: i64 = if coef.is_empty() {
            1
        } else {
            coef.parse().map_err(|_| bad())?
        };
        let label: usize = label.parse().map_err(|_| bad())?;
        if label == 0 || label > n {
            return Err(Error::IndexOutOfRange {
                index: label,
                rank: n,
            });
        }
        v[label - 1] += sign * coef;
    }
    Ok(v)
}
