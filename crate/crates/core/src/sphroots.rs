//! The rank-one table: spherical roots of a root system, the sets
//! `S^p(sigma)` and `S^pp(sigma)`, and compatibility of couples.
//!
//! Spherical roots are found by matching every table shape against the
//! Dynkin diagram on the induced Cartan submatrix, so B/C orientation and
//! G2 edge direction are respected without looking at ambient labels.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::rootsys::{
    embeddings, format_root, height, support, Component, Family, RootSystem, RootVector, SimpleSet,
};

/// Row of the rank-one table. Ranks are those of the support.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Shape {
    /// `alpha`
    A1,
    /// `2 alpha`
    TwoA1,
    /// `alpha + alpha'` with orthogonal simple roots
    A1xA1,
    /// `alpha_1 + ... + alpha_r`, r >= 2
    ASum(usize),
    /// `alpha_1 + 2 alpha_2 + alpha_3`
    A3Middle,
    /// `alpha_1 + ... + alpha_r` on `B_r`
    BSum(usize),
    /// `2 alpha_1 + ... + 2 alpha_r` on `B_r`
    TwoBSum(usize),
    /// `alpha_1 + 2 alpha_2 + 3 alpha_3`
    B3Triple,
    /// `alpha_1 + 2 alpha_2 + ... + 2 alpha_{r-1} + alpha_r` on `C_r`, r >= 3
    CShape(usize),
    /// `2 alpha_1 + ... + 2 alpha_{r-2} + alpha_{r-1} + alpha_r` on `D_r`, r >= 4
    DShape(usize),
    /// `alpha_1 + 2 alpha_2 + 3 alpha_3 + 2 alpha_4`
    F4Shape,
    /// `alpha_1 + alpha_2` on `G2`
    G2Sum,
    /// `2 alpha_1 + alpha_2` on `G2`
    G2Double,
    /// `4 alpha_1 + 2 alpha_2` on `G2`
    G2Quadruple,
}

impl Shape {
    /// Support type and coefficients in the support's Bourbaki labels.
    /// `A1xA1` has no connected support and is handled separately.
    fn pattern(self) -> Option<(Component, Vec<i64>)> {
        use Family::*;
        let ones = |r: usize| vec![1; r];
        Some(match self {
            Shape::A1 => (Component::new(A, 1), vec![1]),
            Shape::TwoA1 => (Component::new(A, 1), vec![2]),
            Shape::A1xA1 => return None,
            Shape::ASum(r) => (Component::new(A, r), ones(r)),
            Shape::A3Middle => (Component::new(A, 3), vec![1, 2, 1]),
            Shape::BSum(r) => (Component::new(B, r), ones(r)),
            Shape::TwoBSum(r) => (Component::new(B, r), vec![2; r]),
            Shape::B3Triple => (Component::new(B, 3), vec![1, 2, 3]),
            Shape::CShape(r) => {
                let mut v = vec![2; r];
                v[0] = 1;
                v[r - 1] = 1;
                (Component::new(C, r), v)
            }
            Shape::DShape(r) => {
                let mut v = vec![2; r];
                v[r - 2] = 1;
                v[r - 1] = 1;
                (Component::new(D, r), v)
            }
            Shape::F4Shape => (Component::new(F, 4), vec![1, 2, 3, 2]),
            Shape::G2Sum => (Component::new(G, 2), vec![1, 1]),
            Shape::G2Double => (Component::new(G, 2), vec![2, 1]),
            Shape::G2Quadruple => (Component::new(G, 2), vec![4, 2]),
        })
    }

    fn all_up_to(n: usize) -> Vec<Shape> {
        let mut v = vec![
            Shape::A1,
            Shape::TwoA1,
            Shape::A1xA1,
            Shape::A3Middle,
            Shape::B3Triple,
        ];
        for r in 2..=n {
            v.extend([Shape::ASum(r), Shape::BSum(r), Shape::TwoBSum(r)]);
        }
        for r in 3..=n {
            v.push(Shape::CShape(r));
        }
        for r in 4..=n {
            v.push(Shape::DShape(r));
        }
        v.extend([
            Shape::F4Shape,
            Shape::G2Sum,
            Shape::G2Double,
            Shape::G2Quadruple,
        ]);
        v
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Shape::A1 => write!(f, "A1"),
            Shape::TwoA1 => write!(f, "2A1"),
            Shape::A1xA1 => write!(f, "A1xA1"),
            Shape::ASum(r) => write!(f, "A{r}"),
            Shape::A3Middle => write!(f, "A3(1,2,1)"),
            Shape::BSum(r) => write!(f, "B{r}"),
            Shape::TwoBSum(r) => write!(f, "2B{r}"),
            Shape::B3Triple => write!(f, "B3(1,2,3)"),
            Shape::CShape(r) => write!(f, "C{r}"),
            Shape::DShape(r) => write!(f, "D{r}"),
            Shape::F4Shape => write!(f, "F4"),
            Shape::G2Sum => write!(f, "G2(1,1)"),
            Shape::G2Double => write!(f, "G2(2,1)"),
            Shape::G2Quadruple => write!(f, "G2(4,2)"),
        }
    }
}

/// A spherical root with the shape it realizes and where the shape sits.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SphericalRoot {
    pub vector: RootVector,
    pub shape: Shape,
    /// Ambient index of each Bourbaki label of the shape's support.
    pub support_order: Vec<usize>,
}

impl SphericalRoot {
    pub fn support(&self) -> SimpleSet {
        support(&self.vector)
    }

    /// The simple root `alpha_i` if this root is one.
    pub fn as_simple(&self) -> Option<usize> {
        match self.shape {
            Shape::A1 => Some(self.support_order[0]),
            _ => None,
        }
    }

    /// `{alpha : <alpha^vee, sigma> = 0}`.
    pub fn sp(&self, rs: &RootSystem) -> SimpleSet {
        SimpleSet::from_indices((0..rs.rank()).filter(|&i| rs.pair(i, &self.vector) == 0))
    }

    /// The lower bound `S^pp(sigma)` of the compatibility interval.
    pub fn spp(&self, rs: &RootSystem) -> SimpleSet {
        let base = self.sp(rs).intersection(self.support());
        match self.shape {
            Shape::BSum(r) => base.without(self.support_order[r - 1]),
            Shape::CShape(_) => base.without(self.support_order[0]),
            _ => base,
        }
    }

    /// `S^pp(sigma) ⊆ sp ⊆ S^p(sigma)`.
    pub fn compatible(&self, rs: &RootSystem, sp: SimpleSet) -> bool {
        self.spp(rs).is_subset(sp) && sp.is_subset(self.sp(rs))
    }
}

impl fmt::Display for SphericalRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_root(&self.vector))
    }
}

/// Spherical roots of a root system, cached on the root system.
#[derive(Debug)]
pub struct Catalog {
    pub roots: Vec<SphericalRoot>,
    /// Compatibility interval `(S^pp, S^p)` per root.
    pub bounds: Vec<(SimpleSet, SimpleSet)>,
    index: HashMap<RootVector, usize>,
}

impl Catalog {
    pub fn position(&self, v: &[i64]) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn get(&self, v: &[i64]) -> Option<&SphericalRoot> {
        self.position(v).map(|i| &self.roots[i])
    }
}

/// Global order on spherical roots: height first, then coefficient vectors
/// in decreasing lexicographic order so that `alpha_1` precedes `alpha_2`.
pub fn root_order(a: &[i64], b: &[i64]) -> std::cmp::Ordering {
    height(a).cmp(&height(b)).then_with(|| b.cmp(a))
}

fn build_catalog(rs: &RootSystem) -> Catalog {
    let n = rs.rank();
    let mut found: HashMap<RootVector, SphericalRoot> = HashMap::new();
    let mut add = |v: RootVector, shape: Shape, order: Vec<usize>| {
        found.entry(v.clone()).or_insert(SphericalRoot {
            vector: v,
            shape,
            support_order: order,
        });
    };
    for shape in Shape::all_up_to(n) {
        match shape.pattern() {
            Some((comp, coeffs)) => {
                if comp.rank > n {
                    continue;
                }
                for e in embeddings(&comp.cartan(), &rs.cartan, rs.all(), false) {
                    let mut v = vec![0; n];
                    for (k, &i) in e.iter().enumerate() {
                        v[i] = coeffs[k];
                    }
                    add(v, shape, e);
                }
            }
            None => {
                for i in 0..n {
                    for j in i + 1..n {
                        if rs.orthogonal(i, j) {
                            let mut v = vec![0; n];
                            v[i] = 1;
                            v[j] = 1;
                            add(v, Shape::A1xA1, vec![i, j]);
                        }
                    }
                }
            }
        }
    }
    let mut roots: Vec<SphericalRoot> = found.into_values().collect();
    roots.sort_by(|a, b| root_order(&a.vector, &b.vector));
    let bounds = roots.iter().map(|r| (r.spp(rs), r.sp(rs))).collect();
    let index = roots
        .iter()
        .enumerate()
        .map(|(i, r)| (r.vector.clone(), i))
        .collect();
    Catalog {
        roots,
        bounds,
        index,
    }
}

impl RootSystem {
    /// The cached catalog of `Sigma(G)`.
    pub fn catalog(&self) -> &Catalog {
        self.spherical.get_or_init(|| build_catalog(self))
    }

    /// Look up a vector in `Sigma(G)`.
    pub fn spherical_root(&self, v: &[i64]) -> Result<&SphericalRoot> {
        if v.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                got: v.len(),
            });
        }
        self.catalog()
            .get(v)
            .ok_or_else(|| Error::NotSphericalRoot(format_root(v)))
    }
}

/// All spherical roots of `rs`, in the global order.
pub fn spherical_roots_of(rs: &RootSystem) -> Vec<SphericalRoot> {
    rs.catalog().roots.clone()
}

pub fn sp_of(rs: &RootSystem, sigma: &[i64]) -> Result<SimpleSet> {
    Ok(rs.spherical_root(sigma)?.sp(rs))
}

pub fn spp_of(rs: &RootSystem, sigma: &[i64]) -> Result<SimpleSet> {
    Ok(rs.spherical_root(sigma)?.spp(rs))
}

pub fn is_compatible(rs: &RootSystem, sigma: &[i64], sp: SimpleSet) -> Result<bool> {
    Ok(rs.spherical_root(sigma)?.compatible(rs, sp))
}
