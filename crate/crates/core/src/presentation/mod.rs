//! Bound quiver presentations: quivers, paths, relations, and symmetrizing
//! form assignments.
//!
//! Paths compose left to right: `alpha.beta` traverses `alpha` first, so the
//! target of `alpha` must be the source of `beta`.

mod catalog;
mod parse;

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

use crate::field::{Field, FieldError, Fq};

pub use catalog::{catalog_entries, catalog_lookup, catalog_source, CatalogEntry, CatalogError};
pub use parse::{format_presentation, parse_presentation};

/// Source position in DSL text; `0:0` for presentations built in code.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("{pos}: syntax error: {msg}")]
    Syntax { pos: Pos, msg: String },
    #[error("{pos}: unknown vertex '{name}'")]
    UnknownVertex { pos: Pos, name: String },
    #[error("{pos}: unknown arrow '{name}'")]
    UnknownArrow { pos: Pos, name: String },
    #[error("{pos}: duplicate name '{name}'")]
    DuplicateName { pos: Pos, name: String },
    #[error("{pos}: path '{path}' does not compose")]
    NonComposablePath { pos: Pos, path: String },
    #[error("{pos}: relation '{relation}' mixes paths with different endpoints")]
    NonParallelRelation { pos: Pos, relation: String },
    #[error("{pos}: relation '{relation}' has a term of length < 2")]
    NonAdmissibleRelation { pos: Pos, relation: String },
    #[error("{pos}: bad parameter: {msg}")]
    BadParam { pos: Pos, msg: String },
    #[error("quiver has no vertices")]
    EmptyQuiver,
    #[error(transparent)]
    Field(#[from] FieldError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Quiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
}

/// A path in a quiver: a trivial path `e_v` or a composable arrow sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Path {
    source: u16,
    target: u16,
    arrows: Vec<u16>,
}

impl Path {
    pub fn trivial(vertex: usize) -> Path {
        Path {
            source: vertex as u16,
            target: vertex as u16,
            arrows: Vec::new(),
        }
    }

    /// Builds a path from arrow indices, or `None` if they do not compose.
    pub fn from_arrows(quiver: &Quiver, arrows: &[usize]) -> Option<Path> {
        let (first, rest) = arrows.split_first()?;
        let mut target = quiver.arrows.get(*first)?.target;
        for &a in rest {
            let arrow = quiver.arrows.get(a)?;
            if arrow.source != target {
                return None;
            }
            target = arrow.target;
        }
        Some(Path {
            source: quiver.arrows[*first].source as u16,
            target: target as u16,
            arrows: arrows.iter().map(|&a| a as u16).collect(),
        })
    }

    /// Trusted constructor used by the rewriting engine.
    pub(crate) fn from_parts(source: u16, target: u16, arrows: Vec<u16>) -> Path {
        Path {
            source,
            target,
            arrows,
        }
    }

    pub fn source(&self) -> usize {
        self.source as usize
    }

    pub fn target(&self) -> usize {
        self.target as usize
    }

    pub fn arrows(&self) -> &[u16] {
        &self.arrows
    }

    // a trivial path has length 0 but is not empty
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn is_parallel(&self, other: &Path) -> bool {
        self.source == other.source && self.target == other.target
    }

    /// Left-to-right composition `self` then `other`.
    pub fn compose(&self, other: &Path) -> Option<Path> {
        if self.target != other.source {
            return None;
        }
        let mut arrows = Vec::with_capacity(self.arrows.len() + other.arrows.len());
        arrows.extend_from_slice(&self.arrows);
        arrows.extend_from_slice(&other.arrows);
        Some(Path {
            source: self.source,
            target: other.target,
            arrows,
        })
    }

    /// Subpath `arrows[start..end]`, with the correct endpoints.
    pub(crate) fn slice(&self, quiver_targets: &[u16], start: usize, end: usize) -> Path {
        let source = if start == 0 {
            self.source
        } else {
            quiver_targets[self.arrows[start - 1] as usize]
        };
        let target = if end == 0 {
            self.source
        } else {
            quiver_targets[self.arrows[end - 1] as usize]
        };
        Path {
            source,
            target,
            arrows: self.arrows[start..end].to_vec(),
        }
    }
}

impl Ord for Path {
    /// Length first, then lexicographic on arrow indices.
    fn cmp(&self, other: &Self) -> Ordering {
        self.arrows
            .len()
            .cmp(&other.arrows.len())
            .then_with(|| self.arrows.cmp(&other.arrows))
            .then_with(|| self.source.cmp(&other.source))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Quiver {
    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn arrow_path(&self, arrow: usize) -> Path {
        let a = &self.arrows[arrow];
        Path {
            source: a.source as u16,
            target: a.target as u16,
            arrows: vec![arrow as u16],
        }
    }

    /// Parses `a.b.c` or a vertex name.
    pub fn path(&self, text: &str) -> Option<Path> {
        let text = text.trim();
        if let Some(v) = self.vertex_index(text) {
            return Some(Path::trivial(v));
        }
        let arrows = text
            .split('.')
            .map(|name| self.arrow_index(name.trim()))
            .collect::<Option<Vec<_>>>()?;
        Path::from_arrows(self, &arrows)
    }

    pub fn format_path(&self, path: &Path) -> String {
        if path.is_trivial() {
            return self.vertices[path.source()].clone();
        }
        path.arrows
            .iter()
            .map(|&a| self.arrows[a as usize].name.as_str())
            .collect::<Vec<_>>()
            .join(".")
    }

    pub(crate) fn arrow_targets(&self) -> Vec<u16> {
        self.arrows.iter().map(|a| a.target as u16).collect()
    }
}

/// A relation `sum c_i p_i = 0`, terms kept in written order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationPoly {
    pub terms: Vec<(Fq, Path)>,
}

impl RelationPoly {
    pub fn format(&self, field: &Field, quiver: &Quiver) -> String {
        format_terms(field, quiver, &self.terms)
    }
}

pub(crate) fn format_coeff(field: &Field, c: Fq) -> String {
    let s = field.format(c);
    if s.contains('+') {
        format!("({s})")
    } else {
        s
    }
}

pub(crate) fn format_terms(field: &Field, quiver: &Quiver, terms: &[(Fq, Path)]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let minus_one = field.neg(Fq::ONE);
    let mut out = String::new();
    for (i, (c, path)) in terms.iter().enumerate() {
        let p = quiver.format_path(path);
        let (sign, body) = if *c == Fq::ONE {
            ("+", p)
        } else if *c == minus_one {
            ("-", p)
        } else {
            ("+", format!("{}*{}", format_coeff(field, *c), p))
        };
        match (i, sign) {
            (0, "+") => {}
            (0, _) => out.push('-'),
            (_, s) => {
                out.push(' ');
                out.push_str(s);
                out.push(' ');
            }
        }
        out.push_str(&body);
    }
    out
}

/// A bound quiver presentation over a finite field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub name: Option<String>,
    pub field: Field,
    pub quiver: Quiver,
    pub relations: Vec<RelationPoly>,
    /// Scalar bindings in declaration order.
    pub params: Vec<(String, Fq)>,
    /// Symmetrizing form values on paths; see [`crate::invariants::form_from_presentation`].
    pub form: Vec<(Path, Fq)>,
}

impl Presentation {
    pub fn param(&self, name: &str) -> Option<Fq> {
        self.params.iter().find(|(n, _)| n == name).map(|(_, v)| *v)
    }

    pub fn has_form(&self) -> bool {
        !self.form.is_empty()
    }

    pub fn label(&self) -> String {
        self.name
            .clone()
            .unwrap_or_else(|| "<anonymous>".to_string())
    }
}

/// Summary returned by a successful validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub vertices: usize,
    pub arrows: usize,
    pub relations: usize,
    pub form_entries: usize,
}

/// Re-checks every structural invariant of a presentation.
pub fn validate_presentation(p: &Presentation) -> Result<ValidationReport, PresentationError> {
    let q = &p.quiver;
    let pos = Pos::default();
    if q.vertices.is_empty() {
        return Err(PresentationError::EmptyQuiver);
    }
    if q.vertices.len() > u16::MAX as usize || q.arrows.len() > u16::MAX as usize {
        return Err(PresentationError::Syntax {
            pos,
            msg: "quiver too large".to_string(),
        });
    }
    let mut names: Vec<&str> = q.vertices.iter().map(String::as_str).collect();
    names.extend(q.arrows.iter().map(|a| a.name.as_str()));
    names.extend(p.params.iter().map(|(n, _)| n.as_str()));
    let mut seen = std::collections::HashSet::new();
    for n in &names {
        if *n == "g" || !seen.insert(*n) {
            return Err(PresentationError::DuplicateName {
                pos,
                name: n.to_string(),
            });
        }
    }
    for a in &q.arrows {
        for v in [a.source, a.target] {
            if v >= q.vertices.len() {
                return Err(PresentationError::UnknownVertex {
                    pos,
                    name: format!("#{v}"),
                });
            }
        }
    }
    let check_path = |path: &Path| -> Result<(), PresentationError> {
        let ok = if path.is_trivial() {
            path.source() < q.vertices.len() && path.source == path.target
        } else {
            let idx: Vec<usize> = path.arrows.iter().map(|&a| a as usize).collect();
            Path::from_arrows(q, &idx).as_ref() == Some(path)
        };
        if ok {
            Ok(())
        } else {
            Err(PresentationError::NonComposablePath {
                pos,
                path: format!("{:?}", path.arrows),
            })
        }
    };
    for (_, v) in &p.params {
        if !p.field.contains(*v) {
            return Err(PresentationError::BadParam {
                pos,
                msg: format!("value {} outside F_{}", v.0, p.field.name()),
            });
        }
    }
    for rel in &p.relations {
        let text = rel.format(&p.field, q);
        if rel.terms.is_empty() {
            return Err(PresentationError::Syntax {
                pos,
                msg: "empty relation".to_string(),
            });
        }
        for (c, path) in &rel.terms {
            check_path(path)?;
            if !p.field.contains(*c) {
                return Err(PresentationError::Syntax {
                    pos,
                    msg: format!("coefficient {} outside F_{}", c.0, p.field.name()),
                });
            }
        }
        let first = &rel.terms[0].1;
        if rel.terms.iter().any(|(_, path)| !path.is_parallel(first)) {
            return Err(PresentationError::NonParallelRelation {
                pos,
                relation: text,
            });
        }
        if rel.terms.iter().any(|(_, path)| path.len() < 2) {
            return Err(PresentationError::NonAdmissibleRelation {
                pos,
                relation: text,
            });
        }
    }
    for (path, c) in &p.form {
        check_path(path)?;
        if !p.field.contains(*c) {
            return Err(PresentationError::Syntax {
                pos,
                msg: format!("form value {} outside F_{}", c.0, p.field.name()),
            });
        }
    }
    Ok(ValidationReport {
        vertices: q.vertices.len(),
        arrows: q.arrows.len(),
        relations: p.relations.len(),
        form_entries: p.form.len(),
    })
}
