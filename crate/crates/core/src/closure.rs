//! Loose spherical roots, the permutation group `Gamma`, spherical closure,
//! and faithful couples `(S, delta)` classifying spherical orbits in simple
//! projective spaces through the map `omega`.
//!
//! The classification assumes that every spherical system is realized by a
//! wonderful variety; counts produced here inherit that assumption.

use std::collections::{BTreeSet, HashSet};
use std::sync::Arc;

use rayon::prelude::*;

use crate::enumerate::enumerate_systems;
use crate::error::{Error, Result};
use crate::quotient::positive_witness;
use crate::rootsys::{RootSystem, RootVector, WeightVector, Q};
use crate::system::{simple_index, ColorKind, ColorSet, SphericalSystem};

/// Multiplicity of each color, indexed like [`SphericalSystem::colors`].
pub type ColorMultiplicity = Vec<u32>;

/// Spherical roots that are loose in `sys`.
pub fn loose_roots(sys: &SphericalSystem) -> Result<Vec<RootVector>> {
    let cs = sys.colors()?;
    Ok(loose_in(sys, &cs))
}

fn loose_in(sys: &SphericalSystem, cs: &ColorSet) -> Vec<RootVector> {
    let cat = sys.rs.catalog();
    sys.sigma
        .iter()
        .filter(|s| match simple_index(s) {
            Some(alpha) => {
                let d = &cs.delta_of[alpha];
                d.len() == 2 && cs.colors[d[0]].row == cs.colors[d[1]].row
            }
            None => {
                let double: Vec<i64> = s.iter().map(|c| 2 * c).collect();
                cat.get(&double)
                    .is_some_and(|r| r.compatible(&sys.rs, sys.sp))
            }
        })
        .cloned()
        .collect()
}

/// `Sigma_l ⊆ S`.
pub fn is_spherically_closed(sys: &SphericalSystem) -> Result<bool> {
    Ok(loose_roots(sys)?.iter().all(|s| simple_index(s).is_some()))
}

/// `S ∩ Sigma = ∅ = Sigma_l`.
pub fn is_strict(sys: &SphericalSystem) -> Result<bool> {
    Ok(sys.simple_sigma().is_empty() && loose_roots(sys)?.is_empty())
}

/// Group of color permutations generated by the swaps of `Delta(alpha)`
/// for loose simple roots `alpha`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaGroup {
    pub generators: Vec<Vec<usize>>,
    /// All elements, identity first, as permutations of color indices.
    pub elements: Vec<Vec<usize>>,
}

impl GammaGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

pub fn gamma_group(sys: &SphericalSystem) -> Result<GammaGroup> {
    let cs = sys.colors()?;
    gamma_in(sys, &cs)
}

fn gamma_in(sys: &SphericalSystem, cs: &ColorSet) -> Result<GammaGroup> {
    let loose = loose_in(sys, cs);
    if loose.iter().any(|s| simple_index(s).is_none()) {
        return Err(Error::NotSphericallyClosed);
    }
    let n = cs.len();
    let id: Vec<usize> = (0..n).collect();
    let mut generators = Vec::new();
    for s in &loose {
        let alpha = simple_index(s).expect("checked above");
        let d = &cs.delta_of[alpha];
        let mut p = id.clone();
        p.swap(d[0], d[1]);
        if !generators.contains(&p) {
            generators.push(p);
        }
    }
    let mut elements = vec![id];
    let mut seen: HashSet<Vec<usize>> = elements.iter().cloned().collect();
    let mut k = 0;
    while k < elements.len() {
        for g in &generators {
            let prod: Vec<usize> = elements[k].iter().map(|&i| g[i]).collect();
            if seen.insert(prod.clone()) {
                elements.push(prod);
            }
        }
        k += 1;
    }
    Ok(GammaGroup {
        generators,
        elements,
    })
}

/// `omega(D)` on fundamental-weight coordinates.
fn color_weight(c: &crate::system::Color, n: usize) -> Vec<i64> {
    let mut w = vec![0; n];
    let factor = if matches!(c.kind, ColorKind::TwoA { .. }) {
        2
    } else {
        1
    };
    for a in c.owners().iter() {
        w[a] += factor;
    }
    w
}

/// `omega(delta)` on fundamental-weight coordinates.
pub fn omega_fundamental(sys: &SphericalSystem, counts: &[u32]) -> Result<Vec<i64>> {
    let cs = sys.colors()?;
    omega_in(&cs, counts, sys.rs.rank())
}

fn omega_in(cs: &ColorSet, counts: &[u32], n: usize) -> Result<Vec<i64>> {
    if counts.len() != cs.len() {
        return Err(Error::DimensionMismatch {
            expected: cs.len(),
            got: counts.len(),
        });
    }
    let mut w = vec![0i64; n];
    for (c, &k) in cs.colors.iter().zip(counts) {
        for (x, y) in w.iter_mut().zip(color_weight(c, n)) {
            *x += k as i64 * y;
        }
    }
    Ok(w)
}

/// `omega(delta)` as a weight in root coordinates.
pub fn omega_of(sys: &SphericalSystem, counts: &[u32]) -> Result<WeightVector> {
    let f: Vec<Q> = omega_fundamental(sys, counts)?
        .into_iter()
        .map(Q::from_integer)
        .collect();
    sys.rs.from_fundamental(&f)
}

/// The three faithfulness conditions.
pub fn is_faithful(sys: &SphericalSystem, counts: &[u32]) -> Result<bool> {
    let cs = sys.colors()?;
    if counts.len() != cs.len() {
        return Err(Error::DimensionMismatch {
            expected: cs.len(),
            got: counts.len(),
        });
    }
    Ok(faithful_in(sys, &cs, counts))
}

fn faithful_in(sys: &SphericalSystem, cs: &ColorSet, counts: &[u32]) -> bool {
    let loose = loose_in(sys, cs);
    if loose.iter().any(|s| simple_index(s).is_none()) {
        return false;
    }
    for s in &loose {
        let d = &cs.delta_of[simple_index(s).expect("closed")];
        if counts[d[0]] == counts[d[1]] {
            return false;
        }
    }
    let outside: Vec<usize> = (0..cs.len()).filter(|&i| counts[i] == 0).collect();
    for mask in 1u64..(1u64 << outside.len()) {
        let rows: Vec<&[i64]> = (0..outside.len())
            .filter(|b| mask >> b & 1 == 1)
            .map(|b| cs.colors[outside[b]].row.as_slice())
            .collect();
        if positive_witness(&rows).is_some() {
            return false;
        }
    }
    true
}

/// A faithful couple, reported once per `Gamma`-orbit.
#[derive(Clone, Debug)]
pub struct FaithfulCouple {
    pub system: SphericalSystem,
    pub delta: ColorMultiplicity,
    /// `omega(delta)` on fundamental-weight coordinates.
    pub omega: Vec<i64>,
    pub gamma_order: usize,
    /// Size of the `Gamma`-orbit of `delta`.
    pub orbit_size: usize,
    /// Strict system with `delta` supported on every color.
    pub wonderful_closure: bool,
}

/// All ways of writing `target` as a sum of color weights.
fn decompositions(weights: &[Vec<i64>], target: &[i64]) -> Vec<Vec<u32>> {
    fn go(
        k: usize,
        weights: &[Vec<i64>],
        rest: &mut Vec<i64>,
        cur: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if k == weights.len() {
            if rest.iter().all(|&x| x == 0) {
                out.push(cur.clone());
            }
            return;
        }
        let w = &weights[k];
        let mut c = 0u32;
        loop {
            cur.push(c);
            go(k + 1, weights, rest, cur, out);
            cur.pop();
            if w.iter().all(|&x| x == 0) {
                break;
            }
            for (r, x) in rest.iter_mut().zip(w) {
                *r -= x;
            }
            c += 1;
            if rest.iter().any(|&x| x < 0) {
                break;
            }
        }
        for (r, x) in rest.iter_mut().zip(w) {
            *r += c as i64 * x;
        }
    }
    let mut out = Vec::new();
    go(0, weights, &mut target.to_vec(), &mut Vec::new(), &mut out);
    out
}

/// Faithful couples with `omega(delta) = pi*` over the given systems; `pi`
/// is on fundamental-weight coordinates and must be dominant.
pub fn faithful_couples_in(
    systems: &[SphericalSystem],
    rs: &RootSystem,
    pi: &[i64],
) -> Result<Vec<FaithfulCouple>> {
    if pi.len() != rs.rank() {
        return Err(Error::DimensionMismatch {
            expected: rs.rank(),
            got: pi.len(),
        });
    }
    if pi.iter().any(|&x| x < 0) {
        return Err(Error::NotDominant);
    }
    let target = rs.dual_fundamental(pi);
    let per_system: Vec<Vec<FaithfulCouple>> = systems
        .par_iter()
        .map(|sys| -> Result<Vec<FaithfulCouple>> {
            let cs = sys.colors()?;
            let Ok(gamma) = gamma_in(sys, &cs) else {
                return Ok(vec![]);
            };
            let n = sys.rs.rank();
            let weights: Vec<Vec<i64>> = cs.colors.iter().map(|c| color_weight(c, n)).collect();
            let mut reps: BTreeSet<Vec<u32>> = BTreeSet::new();
            let mut out = Vec::new();
            for delta in decompositions(&weights, &target) {
                if !faithful_in(sys, &cs, &delta) {
                    continue;
                }
                let orbit: BTreeSet<Vec<u32>> = gamma
                    .elements
                    .iter()
                    .map(|g| {
                        let mut d = vec![0; delta.len()];
                        for (i, &gi) in g.iter().enumerate() {
                            d[gi] = delta[i];
                        }
                        d
                    })
                    .collect();
                let rep = orbit.iter().next().expect("orbit contains delta").clone();
                if !reps.insert(rep.clone()) {
                    continue;
                }
                let strict = sys.simple_sigma().is_empty() && loose_in(sys, &cs).is_empty();
                out.push(FaithfulCouple {
                    system: sys.clone(),
                    omega: omega_in(&cs, &rep, n)?,
                    wonderful_closure: strict && rep.iter().all(|&k| k > 0),
                    delta: rep,
                    gamma_order: gamma.order(),
                    orbit_size: orbit.len(),
                });
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    Ok(per_system.into_iter().flatten().collect())
}

/// Faithful couples over the full census of `rs`.
pub fn faithful_couples(rs: Arc<RootSystem>, pi: &[i64]) -> Result<Vec<FaithfulCouple>> {
    let census = enumerate_systems(rs.clone(), None);
    faithful_couples_in(&census.systems, &rs, pi)
}
