//! Exact combinatorics of spherical systems: root systems and their
//! spherical roots, axiom validation, colors and the Cartan pairing,
//! localization, quotients, spherical closure, faithful couples and a full
//! census enumerator.
//!
//! All arithmetic is over the integers or the rationals.

#![allow(clippy::mutable_key_type)]

pub mod closure;
pub mod enumerate;
pub mod error;
pub mod io;
pub mod quotient;
pub mod rootsys;
pub mod sphroots;
pub mod system;

pub use closure::{
    faithful_couples, faithful_couples_in, gamma_group, is_faithful, is_spherically_closed,
    is_strict, loose_roots, omega_fundamental, omega_of, ColorMultiplicity, FaithfulCouple,
    GammaGroup,
};
pub use enumerate::{
    enumerate_a_matrices, enumerate_systems, CensusReport, RankDiff, SystemFlags, F4_CENSUS,
};
pub use error::{Error, Result};
pub use io::{emit_system, parse_system, render_dot, render_text, SystemDocument};
pub use quotient::{
    classify, enumerate_distinguished, is_distinguished, is_strongly_solvable, kernel_generators,
    projective_colors, quotient, quotient_edges, quotient_forest, quotient_lattice, sigma_phi,
    DistinguishedSubset, EdgeKind, LatticeEdge, LatticeScope, QuotientEdge, QuotientLattice,
};
pub use rootsys::{
    build_root_system, format_root, parse_root, root_system, Component, Family, ParabolicGrading,
    RootSystem, RootSystemSpec, RootVector, SimpleSet, WeightVector, Q,
};
pub use sphroots::{is_compatible, sp_of, spherical_roots_of, spp_of, Shape, SphericalRoot};
pub use system::{Color, ColorKind, ColorSet, Placement, SphericalSystem, Violation};
