//! JSON documents for spherical systems, a textual diagram and DOT export
//! of quotient lattices.
//!
//! Schema version 1:
//!
//! ```json
//! {
//!   "version": "1",
//!   "root_system": { "components": [ { "type": "F", "rank": 4 } ] },
//!   "system": {
//!     "sigma": [[1, 0, 0, 0], [0, 1, 1, 0]],
//!     "sp": [4],
//!     "a_rows": [[1, 0], [1, -1]]
//!   },
//!   "annotations": { "name": "example", "reference": "free text" }
//! }
//! ```
//!
//! Spherical roots are coefficient vectors on the simple roots, `sp` lists
//! 1-based simple-root labels, and each row of `a_rows` pairs one element of
//! `A` with the spherical roots in the order of `sigma`.

use std::fmt::Write as _;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quotient::{EdgeKind, QuotientLattice};
use crate::rootsys::{build_root_system, format_root, RootSystemSpec, RootVector, SimpleSet};
use crate::system::SphericalSystem;

pub const FORMAT_VERSION: &str = "1";

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Annotations {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reference: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemBody {
    pub sigma: Vec<RootVector>,
    pub sp: Vec<usize>,
    pub a_rows: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemDocument {
    pub version: String,
    pub root_system: RootSystemSpec,
    pub system: SystemBody,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub annotations: Option<Annotations>,
}

impl SystemDocument {
    /// Document for the canonical form of `sys`.
    pub fn from_system(sys: &SphericalSystem, annotations: Option<Annotations>) -> Self {
        let c = sys.canonical_form();
        SystemDocument {
            version: FORMAT_VERSION.to_string(),
            root_system: c.rs.spec.clone(),
            system: SystemBody {
                sigma: c.sigma,
                sp: c.sp.labels(),
                a_rows: c.a_rows,
            },
            annotations,
        }
    }

    /// Builds the system after schema checks, without checking the axioms.
    pub fn to_system(&self) -> Result<SphericalSystem> {
        if self.version != FORMAT_VERSION {
            return Err(Error::Document(format!(
                "unsupported version {:?}",
                self.version
            )));
        }
        self.root_system.check()?;
        let rs = Arc::new(build_root_system(&self.root_system)?);
        let n = rs.rank();
        let body = &self.system;
        for s in &body.sigma {
            if s.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: s.len(),
                });
            }
        }
        let mut sp = SimpleSet::EMPTY;
        for &l in &body.sp {
            if l == 0 || l > n {
                return Err(Error::IndexOutOfRange { index: l, rank: n });
            }
            sp.insert(l - 1);
        }
        for row in &body.a_rows {
            if row.len() != body.sigma.len() {
                return Err(Error::DimensionMismatch {
                    expected: body.sigma.len(),
                    got: row.len(),
                });
            }
        }
        Ok(SphericalSystem::new(
            rs,
            body.sigma.clone(),
            sp,
            body.a_rows.clone(),
        ))
    }
}

pub fn parse_document(text: &str) -> Result<SystemDocument> {
    serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))
}

/// Parses a document; axiom violations are rejected unless `allow_invalid`.
/// The result is in canonical form.
pub fn parse_system(text: &str, allow_invalid: bool) -> Result<SphericalSystem> {
    let sys = parse_document(text)?.to_system()?;
    if !allow_invalid {
        sys.ensure_valid()?;
    }
    Ok(sys.canonical_form())
}

pub fn emit_document(doc: &SystemDocument) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

pub fn emit_system(sys: &SphericalSystem) -> String {
    emit_document(&SystemDocument::from_system(sys, None))
}

fn row_text(row: &[i64]) -> String {
    let cells: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
    format!("({})", cells.join(""))
}

/// Multi-line description of a system: header, spherical roots with their
/// shapes, `S^p`, the `A` block and the pairing of every color.
pub fn render_text(sys: &SphericalSystem) -> String {
    let mut out = String::new();
    let cs = sys.colors_unchecked();
    let defect = cs.len() as i64 - sys.rank() as i64;
    let _ = write!(out, "{} rank {} defect {}", sys.rs.spec, sys.rank(), defect);
    if let Ok(d) = sys.dimension() {
        let _ = write!(out, " dim {d}");
    }
    out.push('\n');
    for s in &sys.sigma {
        let tag = sys
            .rs
            .catalog()
            .get(s)
            .map(|r| r.shape.to_string())
            .unwrap_or_else(|| "?".into());
        let _ = writeln!(out, "sigma {} [{}]", format_root(s), tag);
    }
    let _ = writeln!(out, "Sp = {}", sys.sp);
    if sys.sigma.is_empty() {
        let _ = writeln!(out, "Delta: {} colors, empty pairing", cs.len());
        return out;
    }
    if !sys.a_rows.is_empty() {
        let _ = writeln!(out, "A:");
        for row in &sys.a_rows {
            let _ = writeln!(out, "  {} {}", row_text(row), sys.owners(row));
        }
    }
    let _ = writeln!(out, "Delta:");
    for c in &cs.colors {
        let _ = writeln!(out, "  {:<12} {}", c.label(), row_text(&c.row));
    }
    out
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\")
        .replace('"', "\\\"")
        .replace('\n', "\\l")
}

/// DOT digraph of the minimal edges of a lattice. Every edge is labeled
/// with its type; edges of type `P` are dashed.
pub fn render_dot(lattice: &QuotientLattice) -> String {
    let mut out =
        String::from("digraph quotients {\n  node [shape=box, fontname=\"monospace\"];\n");
    for (i, n) in lattice.nodes.iter().enumerate() {
        let _ = writeln!(out, "  n{} [label=\"{}\"];", i, dot_escape(&render_text(n)));
    }
    for e in lattice.edges.iter().filter(|e| e.minimal) {
        let members: Vec<String> = e.members.iter().map(|m| m.to_string()).collect();
        let label = e.kind.map_or_else(|| "?".to_string(), |k| k.to_string());
        let style = if e.kind == Some(EdgeKind::P) {
            ", style=dashed"
        } else {
            ""
        };
        let _ = writeln!(
            out,
            "  n{} -> n{} [label=\"{}\"{}, tooltip=\"Delta* = {{{}}}\"];",
            e.from,
            e.to,
            label,
            style,
            members.join(",")
        );
    }
    out.push_str("}\n");
    out
}
