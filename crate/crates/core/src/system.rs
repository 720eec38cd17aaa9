//! Spherical systems `(Sigma, S^p, A)`: validation against the axioms,
//! synthesis of the full color set with its Cartan pairing, defect,
//! dimension and the two localizations.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::rootsys::{format_root, support, RootSystem, RootVector, SimpleSet};
use crate::sphroots::{root_order, SphericalRoot};

/// A spherical system over a root system. Columns of `a_rows` follow the
/// order of `sigma`.
#[derive(Clone, Debug)]
pub struct SphericalSystem {
    pub rs: Arc<RootSystem>,
    pub sigma: Vec<RootVector>,
    pub sp: SimpleSet,
    pub a_rows: Vec<Vec<i64>>,
}

/// One failed axiom instance.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Violation {
    /// A listed root is not in `Sigma(G)` or has the wrong length.
    UnknownRoot { sigma: String },
    /// A listed root occurs twice.
    Repeated { sigma: String },
    /// An `A`-row does not have one entry per spherical root.
    RowLength { row: usize },
    /// Both `sigma` and `2 sigma` are present.
    Proportional { sigma: String },
    /// Axiom (S): `sigma` is not compatible with `S^p`.
    Compatibility { sigma: String },
    /// Axiom (A1): an entry exceeds 1, or equals 1 away from `S ∩ Sigma`.
    A1 {
        row: usize,
        sigma: String,
        value: i64,
    },
    /// Axiom (A2): wrong number of rows with value 1 at `alpha`.
    A2Count { alpha: usize, count: usize },
    /// Axiom (A2): the two rows of `A(alpha)` do not sum to `<alpha^vee, ->`.
    A2Sum { alpha: usize },
    /// Axiom (A3): a row takes value 1 at no simple spherical root.
    A3 { row: usize },
    /// Axiom (Sigma1): `2 alpha` in Sigma but `<alpha^vee, sigma>` is not in `2 Z_{<=0}`.
    Sigma1 { alpha: usize, sigma: String },
    /// Axiom (Sigma2): `alpha + beta` in Sigma but the coroots disagree on `sigma`.
    Sigma2 {
        alpha: usize,
        beta: usize,
        sigma: String,
    },
}

impl Violation {
    pub fn axiom(&self) -> &'static str {
        match self {
            Violation::UnknownRoot { .. }
            | Violation::Repeated { .. }
            | Violation::RowLength { .. } => "shape",
            Violation::Proportional { .. } => "no-proportional",
            Violation::Compatibility { .. } => "S",
            Violation::A1 { .. } => "A1",
            Violation::A2Count { .. } | Violation::A2Sum { .. } => "A2",
            Violation::A3 { .. } => "A3",
            Violation::Sigma1 { .. } => "Sigma1",
            Violation::Sigma2 { .. } => "Sigma2",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) ", self.axiom())?;
        match self {
            Violation::UnknownRoot { sigma } => write!(f, "{sigma} is not a spherical root"),
            Violation::Repeated { sigma } => write!(f, "{sigma} listed twice"),
            Violation::RowLength { row } => write!(f, "row {row} has the wrong length"),
            Violation::Proportional { sigma } => write!(f, "{sigma} and its double both present"),
            Violation::Compatibility { sigma } => write!(f, "{sigma} not compatible with S^p"),
            Violation::A1 { row, sigma, value } => {
                write!(f, "row {row} has value {value} at {sigma}")
            }
            Violation::A2Count { alpha, count } => {
                write!(f, "{count} rows take value 1 at a{}, expected 2", alpha + 1)
            }
            Violation::A2Sum { alpha } => {
                write!(f, "rows of A(a{}) do not sum to its coroot", alpha + 1)
            }
            Violation::A3 { row } => {
                write!(f, "row {row} takes value 1 at no simple spherical root")
            }
            Violation::Sigma1 { alpha, sigma } => {
                write!(
                    f,
                    "<a{}^vee, {sigma}> is not a non-positive even integer",
                    alpha + 1
                )
            }
            Violation::Sigma2 { alpha, beta, sigma } => {
                write!(
                    f,
                    "a{} and a{} coroots differ on {sigma}",
                    alpha + 1,
                    beta + 1
                )
            }
        }
    }
}

/// How a color arises.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ColorKind {
    /// Element of `A`, with the simple roots it belongs to.
    A { row: usize, owners: SimpleSet },
    /// The color of `alpha` with `2 alpha` in Sigma.
    TwoA { alpha: usize },
    /// A class of simple roots of type b sharing one color.
    B { class: SimpleSet },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Color {
    pub kind: ColorKind,
    pub row: Vec<i64>,
}

impl Color {
    /// Simple roots whose `Delta(alpha)` contains this color.
    pub fn owners(&self) -> SimpleSet {
        match self.kind {
            ColorKind::A { owners, .. } => owners,
            ColorKind::TwoA { alpha } => SimpleSet::singleton(alpha),
            ColorKind::B { class } => class,
        }
    }

    pub fn label(&self) -> String {
        let names: Vec<String> = self.owners().iter().map(|i| (i + 1).to_string()).collect();
        match self.kind {
            ColorKind::A { row, .. } => format!("A{}[{}]", row, names.join(",")),
            ColorKind::TwoA { .. } => format!("2a[{}]", names.join(",")),
            ColorKind::B { .. } => format!("b[{}]", names.join(",")),
        }
    }
}

/// The full set of colors with the decomposition `Delta = ∪ Delta(alpha)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorSet {
    pub colors: Vec<Color>,
    /// `delta_of[alpha]` lists indices into `colors`.
    pub delta_of: Vec<Vec<usize>>,
    pub s_p: SimpleSet,
    pub s_a: SimpleSet,
    pub s_2a: SimpleSet,
    pub s_b: SimpleSet,
}

impl ColorSet {
    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Pairing matrix, one row per color.
    pub fn matrix(&self) -> Vec<Vec<i64>> {
        self.colors.iter().map(|c| c.row.clone()).collect()
    }
}

/// Interior or exterior, for negative colors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Placement {
    Interior,
    Exterior,
}

impl SphericalSystem {
    pub fn new(
        rs: Arc<RootSystem>,
        sigma: Vec<RootVector>,
        sp: SimpleSet,
        a_rows: Vec<Vec<i64>>,
    ) -> Self {
        SphericalSystem {
            rs,
            sigma,
            sp,
            a_rows,
        }
    }

    /// `(∅, S^p, ∅)`.
    pub fn homogeneous(rs: Arc<RootSystem>, sp: SimpleSet) -> Self {
        SphericalSystem {
            rs,
            sigma: vec![],
            sp,
            a_rows: vec![],
        }
    }

    pub fn rank(&self) -> usize {
        self.sigma.len()
    }

    /// Position in `sigma` of each simple root, when it is a spherical root.
    pub fn simple_positions(&self) -> Vec<Option<usize>> {
        let n = self.rs.rank();
        let mut pos = vec![None; n];
        for (j, s) in self.sigma.iter().enumerate() {
            if let Some(i) = simple_index(s) {
                pos[i] = Some(j);
            }
        }
        pos
    }

    /// `S ∩ Sigma`.
    pub fn simple_sigma(&self) -> SimpleSet {
        SimpleSet::from_indices(self.sigma.iter().filter_map(|s| simple_index(s)))
    }

    /// `supp(Sigma)`.
    pub fn support(&self) -> SimpleSet {
        self.sigma
            .iter()
            .fold(SimpleSet::EMPTY, |m, s| m.union(support(s)))
    }

    /// `<alpha^vee, ->` restricted to Sigma.
    pub fn coroot_row(&self, alpha: usize) -> Vec<i64> {
        self.sigma.iter().map(|s| self.rs.pair(alpha, s)).collect()
    }

    /// Simple roots `alpha` in Sigma at which the row takes value 1.
    pub fn owners(&self, row: &[i64]) -> SimpleSet {
        let mut m = SimpleSet::EMPTY;
        for (j, s) in self.sigma.iter().enumerate() {
            if let Some(i) = simple_index(s) {
                if row[j] == 1 {
                    m.insert(i);
                }
            }
        }
        m
    }

    /// Every axiom violation, in the order: no-proportional, S, A1, A2, A3,
    /// Sigma1, Sigma2.
    pub fn validate(&self) -> Vec<Violation> {
        let rs = &*self.rs;
        let mut out = Vec::new();
        let mut known: Vec<&SphericalRoot> = Vec::new();
        for (j, s) in self.sigma.iter().enumerate() {
            match rs.spherical_root(s) {
                Ok(r) => known.push(r),
                Err(_) => out.push(Violation::UnknownRoot {
                    sigma: format_root(s),
                }),
            }
            if self.sigma[..j].contains(s) {
                out.push(Violation::Repeated {
                    sigma: format_root(s),
                });
            }
        }
        let r = self.sigma.len();
        for (k, row) in self.a_rows.iter().enumerate() {
            if row.len() != r {
                out.push(Violation::RowLength { row: k });
            }
        }
        if !out.is_empty() {
            return out;
        }

        for s in &self.sigma {
            let d: Vec<i64> = s.iter().map(|c| 2 * c).collect();
            if self.sigma.contains(&d) {
                out.push(Violation::Proportional {
                    sigma: format_root(s),
                });
            }
        }
        for root in &known {
            if !root.compatible(rs, self.sp) {
                out.push(Violation::Compatibility {
                    sigma: root.to_string(),
                });
            }
        }
        let pos = self.simple_positions();
        for (k, row) in self.a_rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                let simple = simple_index(&self.sigma[j]).is_some();
                if v > 1 || (v == 1 && !simple) {
                    out.push(Violation::A1 {
                        row: k,
                        sigma: format_root(&self.sigma[j]),
                        value: v,
                    });
                }
            }
        }
        for (alpha, &j) in pos.iter().enumerate() {
            let Some(j) = j else { continue };
            let members: Vec<&Vec<i64>> = self.a_rows.iter().filter(|row| row[j] == 1).collect();
            if members.len() != 2 {
                out.push(Violation::A2Count {
                    alpha,
                    count: members.len(),
                });
                continue;
            }
            let sum: Vec<i64> = members[0]
                .iter()
                .zip(members[1])
                .map(|(a, b)| a + b)
                .collect();
            if sum != self.coroot_row(alpha) {
                out.push(Violation::A2Sum { alpha });
            }
        }
        for (k, row) in self.a_rows.iter().enumerate() {
            if self.owners(row).is_empty() {
                out.push(Violation::A3 { row: k });
            }
        }
        for s in &self.sigma {
            if let Some(alpha) = doubled_simple(s) {
                for t in self.sigma.iter().filter(|t| *t != s) {
                    let v = rs.pair(alpha, t);
                    if v > 0 || v % 2 != 0 {
                        out.push(Violation::Sigma1 {
                            alpha,
                            sigma: format_root(t),
                        });
                    }
                }
            }
        }
        for s in &self.sigma {
            if let Some((a, b)) = orthogonal_pair(rs, s) {
                for t in &self.sigma {
                    if rs.pair(a, t) != rs.pair(b, t) {
                        out.push(Violation::Sigma2 {
                            alpha: a,
                            beta: b,
                            sigma: format_root(t),
                        });
                    }
                }
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// Validation as a `Result`.
    pub fn ensure_valid(&self) -> Result<()> {
        let v = self.validate();
        if v.is_empty() {
            Ok(())
        } else {
            Err(Error::Invalid(v))
        }
    }

    /// Full color set and Cartan pairing, assuming the system is valid.
    pub(crate) fn colors_unchecked(&self) -> ColorSet {
        let rs = &*self.rs;
        let n = rs.rank();
        let s_a = self.simple_sigma();
        let s_2a = SimpleSet::from_indices(self.sigma.iter().filter_map(|s| doubled_simple(s)));
        let s_b = rs
            .all()
            .difference(self.sp)
            .difference(s_a)
            .difference(s_2a);

        let mut colors = Vec::new();
        let mut delta_of = vec![Vec::new(); n];
        for (k, row) in self.a_rows.iter().enumerate() {
            let owners = self.owners(row);
            for i in owners.iter() {
                delta_of[i].push(colors.len());
            }
            colors.push(Color {
                kind: ColorKind::A { row: k, owners },
                row: row.clone(),
            });
        }
        for alpha in s_2a.iter() {
            delta_of[alpha].push(colors.len());
            let row = self.coroot_row(alpha).into_iter().map(|v| v / 2).collect();
            colors.push(Color {
                kind: ColorKind::TwoA { alpha },
                row,
            });
        }
        // Union of b roots whose sum is a spherical root.
        let mut class_of: Vec<SimpleSet> = (0..n).map(SimpleSet::singleton).collect();
        for s in &self.sigma {
            if let Some((a, b)) = orthogonal_pair(rs, s) {
                if s_b.contains(a) && s_b.contains(b) {
                    let merged = class_of[a].union(class_of[b]);
                    for i in merged.iter() {
                        class_of[i] = merged;
                    }
                }
            }
        }
        for alpha in s_b.iter() {
            let class = class_of[alpha];
            if class.iter().next() != Some(alpha) {
                continue;
            }
            let idx = colors.len();
            for i in class.iter() {
                delta_of[i].push(idx);
            }
            colors.push(Color {
                kind: ColorKind::B { class },
                row: self.coroot_row(alpha),
            });
        }
        ColorSet {
            colors,
            delta_of,
            s_p: self.sp,
            s_a,
            s_2a,
            s_b,
        }
    }

    /// `Delta = A ⊔ S^{2a} ⊔ S^b/~` with the full pairing.
    pub fn colors(&self) -> Result<ColorSet> {
        self.ensure_valid()?;
        Ok(self.colors_unchecked())
    }

    /// `card(Delta) - card(Sigma)`.
    pub fn defect(&self) -> Result<i64> {
        Ok(self.colors()?.len() as i64 - self.rank() as i64)
    }

    pub(crate) fn defect_unchecked(&self) -> i64 {
        self.colors_unchecked().len() as i64 - self.rank() as i64
    }

    /// `card(Sigma) + dim P^u`, with `P` the parabolic attached to `S^p`.
    pub fn dimension(&self) -> Result<usize> {
        self.ensure_valid()?;
        let levi = self
            .rs
            .positive_roots
            .iter()
            .filter(|b| support(b).is_subset(self.sp))
            .count();
        Ok(self.rank() + self.rs.positive_roots.len() - levi)
    }

    /// Localization at a subset of the spherical roots.
    pub fn localize_sigma(&self, keep: &[RootVector]) -> Result<SphericalSystem> {
        for v in keep {
            if !self.sigma.contains(v) {
                return Err(Error::NotSubset(format_root(v)));
            }
        }
        let cols: Vec<usize> = (0..self.rank())
            .filter(|&j| keep.contains(&self.sigma[j]))
            .collect();
        let kept_simple =
            SimpleSet::from_indices(cols.iter().filter_map(|&j| simple_index(&self.sigma[j])));
        let a_rows = self
            .a_rows
            .iter()
            .filter(|row| !self.owners(row).intersection(kept_simple).is_empty())
            .map(|row| cols.iter().map(|&j| row[j]).collect())
            .collect();
        let sigma = cols.iter().map(|&j| self.sigma[j].clone()).collect();
        Ok(SphericalSystem::new(
            self.rs.clone(),
            sigma,
            self.sp,
            a_rows,
        ))
    }

    /// Localization at a subset `S'` of the simple roots; the result lives
    /// on `R ∩ ZS'` with that sub-system's own labels.
    pub fn localize_s(&self, subset: SimpleSet) -> SphericalSystem {
        let (sub, emb) = self.rs.sub_root_system(subset);
        let cols: Vec<usize> = (0..self.rank())
            .filter(|&j| support(&self.sigma[j]).is_subset(subset))
            .collect();
        let sigma: Vec<RootVector> = cols
            .iter()
            .map(|&j| emb.iter().map(|&i| self.sigma[j][i]).collect())
            .collect();
        let sp = SimpleSet::from_indices(
            emb.iter()
                .enumerate()
                .filter(|(_, &i)| self.sp.contains(i))
                .map(|(k, _)| k),
        );
        let kept_simple =
            SimpleSet::from_indices(cols.iter().filter_map(|&j| simple_index(&self.sigma[j])))
                .intersection(subset);
        let a_rows = self
            .a_rows
            .iter()
            .filter(|row| !self.owners(row).intersection(kept_simple).is_empty())
            .map(|row| cols.iter().map(|&j| row[j]).collect())
            .collect();
        SphericalSystem::new(Arc::new(sub), sigma, sp, a_rows)
    }

    /// Colors whose pairing values are all `<= 0`, tagged by whether their
    /// simple root lies in `supp(Sigma)`.
    pub fn negative_colors(&self) -> Result<Vec<(usize, Placement)>> {
        let cs = self.colors()?;
        Ok(negative_colors_of(self, &cs))
    }

    /// `supp(Sigma) ∪ S^p = S`.
    pub fn is_cuspidal(&self) -> Result<bool> {
        self.ensure_valid()?;
        Ok(self.support().union(self.sp) == self.rs.all())
    }

    /// Sorted copy: Sigma by the global root order (permuting row columns),
    /// rows lexicographically with their owner sets as tie-break.
    pub fn canonical_form(&self) -> SphericalSystem {
        let mut perm: Vec<usize> = (0..self.rank()).collect();
        perm.sort_by(|&a, &b| root_order(&self.sigma[a], &self.sigma[b]));
        let sigma: Vec<RootVector> = perm.iter().map(|&j| self.sigma[j].clone()).collect();
        let mut rows: Vec<Vec<i64>> = self
            .a_rows
            .iter()
            .map(|row| perm.iter().map(|&j| row[j]).collect())
            .collect();
        let out = SphericalSystem::new(self.rs.clone(), sigma, self.sp, vec![]);
        rows.sort_by(|a, b| a.cmp(b).then_with(|| out.owners(a).cmp(&out.owners(b))));
        SphericalSystem {
            a_rows: rows,
            ..out
        }
    }

    /// Canonical sort key.
    pub fn key(&self) -> (Vec<RootVector>, u32, Vec<Vec<i64>>) {
        let c = self.canonical_form();
        (c.sigma, c.sp.0, c.a_rows)
    }
}

pub(crate) fn negative_colors_of(sys: &SphericalSystem, cs: &ColorSet) -> Vec<(usize, Placement)> {
    let supp = sys.support();
    cs.colors
        .iter()
        .enumerate()
        .filter(|(_, c)| c.row.iter().all(|&v| v <= 0))
        .map(|(k, c)| {
            let place = if c.owners().intersection(supp).is_empty() {
                Placement::Exterior
            } else {
                Placement::Interior
            };
            (k, place)
        })
        .collect()
}

impl PartialEq for SphericalSystem {
    fn eq(&self, other: &Self) -> bool {
        self.rs.spec == other.rs.spec && self.key() == other.key()
    }
}

impl Eq for SphericalSystem {}

impl Hash for SphericalSystem {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.rs.spec.hash(state);
        self.key().hash(state);
    }
}

impl PartialOrd for SphericalSystem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Systems over the same root system compare by rank, then by canonical key.
impl Ord for SphericalSystem {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b) = (self.key(), other.key());
        self.rank()
            .cmp(&other.rank())
            .then_with(|| cmp_sigma(&a.0, &b.0))
            .then_with(|| a.1.cmp(&b.1))
            .then_with(|| a.2.cmp(&b.2))
    }
}

fn cmp_sigma(a: &[RootVector], b: &[RootVector]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        let o = root_order(x, y);
        if o != Ordering::Equal {
            return o;
        }
    }
    a.len().cmp(&b.len())
}

/// `Some(i)` when `v = alpha_i`.
pub fn simple_index(v: &[i64]) -> Option<usize> {
    let mut idx = None;
    for (i, &c) in v.iter().enumerate() {
        match c {
            0 => {}
            1 if idx.is_none() => idx = Some(i),
            _ => return None,
        }
    }
    idx
}

/// `Some(i)` when `v = 2 alpha_i`.
pub fn doubled_simple(v: &[i64]) -> Option<usize> {
    let mut idx = None;
    for (i, &c) in v.iter().enumerate() {
        match c {
            0 => {}
            2 if idx.is_none() => idx = Some(i),
            _ => return None,
        }
    }
    idx
}

/// `Some((a, b))` when `v = alpha_a + alpha_b` with orthogonal simple roots.
pub fn orthogonal_pair(rs: &RootSystem, v: &[i64]) -> Option<(usize, usize)> {
    let nz: Vec<usize> = (0..v.len()).filter(|&i| v[i] != 0).collect();
    match nz.as_slice() {
        [a, b] if v[*a] == 1 && v[*b] == 1 && rs.orthogonal(*a, *b) => Some((*a, *b)),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{root_system, Family};

    fn f4() -> Arc<RootSystem> {
        Arc::new(root_system(Family::F, 4).unwrap())
    }

    #[test]
    fn sigma1_violation() {
        let sys = SphericalSystem::new(
            f4(),
            vec![vec![2, 0, 0, 0], vec![1, 1, 0, 0]],
            SimpleSet::EMPTY,
            vec![],
        );
        assert!(sys.validate().iter().any(|v| v.axiom() == "Sigma1"));
    }

    #[test]
    fn empty_system_is_valid() {
        let sys = SphericalSystem::homogeneous(f4(), SimpleSet::EMPTY);
        assert!(sys.is_valid());
        assert_eq!(sys.defect().unwrap(), 4);
        assert_eq!(sys.dimension().unwrap(), 24);
        let neg = sys.negative_colors().unwrap();
        assert_eq!(neg.len(), 4);
        assert!(neg.iter().all(|(_, p)| *p == Placement::Exterior));
    }

    #[test]
    fn cuspidality() {
        let sys = SphericalSystem::new(
            f4(),
            vec![vec![1, 0, 0, 0]],
            SimpleSet::EMPTY,
            vec![vec![1], vec![1]],
        );
        assert!(sys.is_valid());
        assert!(!sys.is_cuspidal().unwrap());
        let full = SphericalSystem::homogeneous(f4(), SimpleSet::full(4));
        assert!(full.is_cuspidal().unwrap());
    }

    #[test]
    fn reports_every_violation() {
        let sys = SphericalSystem::new(
            f4(),
            vec![vec![1, 0, 0, 0], vec![2, 0, 0, 0]],
            SimpleSet::singleton(1),
            vec![vec![2, 0]],
        );
        let axioms: Vec<&str> = sys.validate().iter().map(|v| v.axiom()).collect();
        assert!(axioms.contains(&"no-proportional"));
        assert!(axioms.contains(&"S"));
        assert!(axioms.contains(&"A1"));
        assert!(axioms.contains(&"A2"));
    }
}
