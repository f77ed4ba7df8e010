//! Path-algebra rewriting: completion of a presentation's relations into a
//! confluent rewriting system, normal forms, and the irreducible-path basis.
//!
//! Leading terms are chosen by length first, then lexicographically by arrow
//! precedence. Relations are oriented by this order, never by the direction
//! they were written in.

mod table;

use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap, HashMap, HashSet};

use thiserror::Error;

use crate::field::{Field, Fq};
use crate::presentation::{Arrow, Path, Presentation, Quiver};

pub use table::{build_table, dim_and_cartan, AlgebraTable, Elem};

pub const DEFAULT_BOUND: usize = 32;
pub const MAX_BOUND: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RewriteError {
    #[error("completion bound {bound} exceeded ({irreducible} irreducible paths so far)")]
    BoundExceeded { bound: usize, irreducible: usize },
    #[error("inconsistent presentation: the idempotent at vertex '{vertex}' reduces to zero")]
    InconsistentPresentation { vertex: String },
    #[error("associativity fails on basis triple ({a}, {b}, {c})")]
    AssociativityFailure { a: String, b: String, c: String },
    #[error("bad monomial order: {0}")]
    BadOrder(String),
    #[error("bound must be at least 2")]
    BadBound,
}

/// Arrow precedence for the length-lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialOrder {
    precedence: Vec<String>,
}

impl MonomialOrder {
    /// Precedence equal to arrow declaration order.
    pub fn declaration(p: &Presentation) -> MonomialOrder {
        MonomialOrder {
            precedence: p.quiver.arrows.iter().map(|a| a.name.clone()).collect(),
        }
    }

    pub fn with_precedence(names: Vec<String>) -> MonomialOrder {
        MonomialOrder { precedence: names }
    }

    pub fn precedence(&self) -> &[String] {
        &self.precedence
    }

    /// Re-indexes the quiver's arrows by precedence rank.
    fn relabel(&self, q: &Quiver) -> Result<(Quiver, Vec<usize>), RewriteError> {
        if self.precedence.len() != q.arrows.len() {
            return Err(RewriteError::BadOrder(format!(
                "{} arrows ranked, quiver has {}",
                self.precedence.len(),
                q.arrows.len()
            )));
        }
        let mut old_to_new = vec![usize::MAX; q.arrows.len()];
        let mut arrows = Vec::with_capacity(q.arrows.len());
        for (rank, name) in self.precedence.iter().enumerate() {
            let old = q
                .arrow_index(name)
                .ok_or_else(|| RewriteError::BadOrder(format!("unknown arrow '{name}'")))?;
            if old_to_new[old] != usize::MAX {
                return Err(RewriteError::BadOrder(format!(
                    "arrow '{name}' ranked twice"
                )));
            }
            old_to_new[old] = rank;
            let a: &Arrow = &q.arrows[old];
            arrows.push(a.clone());
        }
        Ok((
            Quiver {
                vertices: q.vertices.clone(),
                arrows,
            },
            old_to_new,
        ))
    }
}

/// A linear combination of paths.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PathPoly {
    terms: BTreeMap<Path, Fq>,
}

impl PathPoly {
    pub fn zero() -> PathPoly {
        PathPoly::default()
    }

    pub fn monomial(c: Fq, path: Path) -> PathPoly {
        let mut p = PathPoly::zero();
        if !c.is_zero() {
            p.terms.insert(path, c);
        }
        p
    }

    pub fn from_terms(field: &Field, terms: impl IntoIterator<Item = (Fq, Path)>) -> PathPoly {
        let mut p = PathPoly::zero();
        for (c, path) in terms {
            p.add_term(field, path, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn add_term(&mut self, field: &Field, path: Path, c: Fq) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&path) {
            Some(v) => {
                *v = field.add(*v, c);
                if v.is_zero() {
                    self.terms.remove(&path);
                }
            }
            None => {
                self.terms.insert(path, c);
            }
        }
    }

    pub fn add_scaled(&mut self, field: &Field, other: &PathPoly, c: Fq) {
        for (path, v) in &other.terms {
            self.add_term(field, path.clone(), field.mul(*v, c));
        }
    }

    pub fn leading(&self) -> Option<(&Path, Fq)> {
        self.terms.iter().next_back().map(|(p, c)| (p, *c))
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Path, Fq)> {
        self.terms.iter().map(|(p, c)| (p, *c))
    }

    pub fn coeff(&self, path: &Path) -> Fq {
        self.terms.get(path).copied().unwrap_or(Fq::ZERO)
    }

    /// `left * self * right`; terms that do not compose vanish.
    pub fn sandwich(&self, left: Option<&Path>, right: Option<&Path>) -> PathPoly {
        let mut out = PathPoly::zero();
        for (p, c) in &self.terms {
            let mut q = p.clone();
            if let Some(l) = left {
                match l.compose(&q) {
                    Some(x) => q = x,
                    None => continue,
                }
            }
            if let Some(r) = right {
                match q.compose(r) {
                    Some(x) => q = x,
                    None => continue,
                }
            }
            out.terms.insert(q, *c);
        }
        out
    }

    pub fn format(&self, field: &Field, quiver: &Quiver) -> String {
        let terms: Vec<(Fq, Path)> = self
            .terms
            .iter()
            .rev()
            .map(|(p, c)| (*c, p.clone()))
            .collect();
        crate::presentation::format_terms(field, quiver, &terms)
    }
}

/// `lhs -> rhs`, with every `rhs` path strictly smaller than `lhs` and parallel to it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewriteRule {
    pub lhs: Path,
    pub rhs: PathPoly,
}

/// Which reducible term and occurrence a reduction step rewrites.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReductionStrategy {
    /// Largest reducible term, leftmost occurrence.
    LeftmostLargest,
    /// Smallest reducible term, rightmost occurrence.
    RightmostSmallest,
}

/// A confluent, terminating rewriting system for a finite-dimensional algebra.
#[derive(Debug, Clone)]
pub struct RewriteSystem {
    field: Field,
    quiver: Quiver,
    name: Option<String>,
    rules: Vec<RewriteRule>,
    index: HashMap<Vec<u16>, usize>,
    lhs_lengths: Vec<usize>,
    targets: Vec<u16>,
    basis: Vec<Path>,
    bound: usize,
}

/// Completion state.
struct Completer {
    field: Field,
    quiver: Quiver,
    targets: Vec<u16>,
    rules: Vec<Option<RewriteRule>>,
    index: HashMap<Vec<u16>, usize>,
    bound: usize,
    deferred: bool,
    seen_overlaps: HashSet<(usize, usize, usize)>,
    pending: BinaryHeap<Reverse<(usize, usize, usize, usize)>>,
}

impl Completer {
    fn lhs_lengths(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.rules.iter().flatten().map(|r| r.lhs.len()).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    fn reduce(&self, poly: PathPoly) -> PathPoly {
        let lens = self.lhs_lengths();
        reduce_with(
            &self.field,
            &self.targets,
            &poly,
            |arrows| {
                self.index
                    .get(arrows)
                    .map(|&i| self.rules[i].as_ref().unwrap())
            },
            &lens,
            ReductionStrategy::LeftmostLargest,
        )
    }

    /// Reduces `poly` and, if nonzero, installs it as a rule.
    fn insert(&mut self, poly: PathPoly, queue: &mut Vec<PathPoly>) -> Result<(), RewriteError> {
        let f = self.reduce(poly);
        let Some((lead, lc)) = f.leading() else {
            return Ok(());
        };
        let lead = lead.clone();
        if lead.is_trivial() {
            return Err(RewriteError::InconsistentPresentation {
                vertex: self.quiver.vertices[lead.source()].clone(),
            });
        }
        let inv = self.field.inv(lc).expect("leading coefficient is nonzero");
        let mut rhs = PathPoly::zero();
        for (p, c) in f.terms() {
            if *p != lead {
                rhs.add_term(
                    &self.field,
                    p.clone(),
                    self.field.neg(self.field.mul(c, inv)),
                );
            }
        }
        // rules whose lhs contains the new lhs are re-queued
        for slot in self.rules.iter_mut() {
            let remove = match slot {
                Some(r) => contains_subword(r.lhs.arrows(), lead.arrows()),
                None => false,
            };
            if remove {
                let r = slot.take().unwrap();
                self.index.remove(r.lhs.arrows());
                let mut g = r.rhs.clone();
                g.add_term(&self.field, r.lhs.clone(), self.field.neg(Fq::ONE));
                queue.push(g);
            }
        }
        let id = self.rules.len();
        self.index.insert(lead.arrows().to_vec(), id);
        self.rules.push(Some(RewriteRule { lhs: lead, rhs }));
        for other in 0..self.rules.len() {
            if self.rules[other].is_some() {
                self.schedule(id, other);
                if other != id {
                    self.schedule(other, id);
                }
            }
        }
        Ok(())
    }

    /// Queues overlaps where a suffix of rule `a`'s lhs is a prefix of rule `b`'s lhs.
    fn schedule(&mut self, a: usize, b: usize) {
        let (u, v) = match (&self.rules[a], &self.rules[b]) {
            (Some(x), Some(y)) => (x.lhs.arrows(), y.lhs.arrows()),
            _ => return,
        };
        let max_k = u.len().min(v.len());
        for k in 1..max_k {
            if u[u.len() - k..] == v[..k] {
                let w = u.len() + v.len() - k;
                if w > self.bound {
                    self.deferred = true;
                    continue;
                }
                if self.seen_overlaps.insert((a, b, k)) {
                    self.pending.push(Reverse((w, a, b, k)));
                }
            }
        }
    }

    fn s_poly(&self, a: usize, b: usize, k: usize) -> Option<PathPoly> {
        let ra = self.rules[a].as_ref()?;
        let rb = self.rules[b].as_ref()?;
        let u = &ra.lhs;
        let v = &rb.lhs;
        let head = u.slice(&self.targets, 0, u.len() - k);
        let tail = v.slice(&self.targets, k, v.len());
        // (u - rhs_a) tail - head (v - rhs_b) = head rhs_b - rhs_a tail
        let mut s = rb.rhs.sandwich(Some(&head), None);
        let t = ra.rhs.sandwich(None, Some(&tail));
        s.add_scaled(&self.field, &t, self.field.neg(Fq::ONE));
        Some(s)
    }

    fn run(&mut self, mut queue: Vec<PathPoly>) -> Result<(), RewriteError> {
        loop {
            while let Some(p) = queue.pop() {
                self.insert(p, &mut queue)?;
            }
            match self.pending.pop() {
                Some(Reverse((_, a, b, k))) => {
                    if let Some(s) = self.s_poly(a, b, k) {
                        queue.push(s);
                    }
                }
                None => return Ok(()),
            }
        }
    }
}

fn contains_subword(hay: &[u16], needle: &[u16]) -> bool {
    needle.len() <= hay.len() && hay.windows(needle.len()).any(|w| w == needle)
}

/// Replaces `path[start..end]` by `repl` (parallel to the replaced part).
fn splice(path: &Path, start: usize, end: usize, repl: &Path) -> Path {
    let a = path.arrows();
    let mut arrows = Vec::with_capacity(a.len() - (end - start) + repl.len());
    arrows.extend_from_slice(&a[..start]);
    arrows.extend_from_slice(repl.arrows());
    arrows.extend_from_slice(&a[end..]);
    let source = if start == 0 {
        repl.source() as u16
    } else {
        path.source() as u16
    };
    let target = if end == a.len() {
        repl.target() as u16
    } else {
        path.target() as u16
    };
    Path::from_parts(source, target, arrows)
}

fn find_occurrence<'r>(
    path: &Path,
    lookup: &impl Fn(&[u16]) -> Option<&'r RewriteRule>,
    lens: &[usize],
    leftmost: bool,
) -> Option<(usize, &'r RewriteRule)> {
    let a = path.arrows();
    let n = a.len();
    let check = |start: usize| {
        lens.iter()
            .take_while(|&&l| start + l <= n)
            .find_map(|&l| lookup(&a[start..start + l]))
            .map(|r| (start, r))
    };
    if leftmost {
        (0..n).find_map(check)
    } else {
        (0..n).rev().find_map(check)
    }
}

fn reduce_with<'r>(
    field: &Field,
    _targets: &[u16],
    poly: &PathPoly,
    lookup: impl Fn(&[u16]) -> Option<&'r RewriteRule>,
    lens: &[usize],
    strategy: ReductionStrategy,
) -> PathPoly {
    let mut work = poly.clone();
    let mut done = PathPoly::zero();
    loop {
        let next = match strategy {
            ReductionStrategy::LeftmostLargest => work.terms.iter().next_back(),
            ReductionStrategy::RightmostSmallest => work.terms.iter().next(),
        };
        let Some((path, c)) = next.map(|(p, c)| (p.clone(), *c)) else {
            return done;
        };
        work.terms.remove(&path);
        let leftmost = strategy == ReductionStrategy::LeftmostLargest;
        match find_occurrence(&path, &lookup, lens, leftmost) {
            None => done.add_term(field, path, c),
            Some((start, rule)) => {
                let end = start + rule.lhs.len();
                for (t, tc) in rule.rhs.terms() {
                    work.add_term(field, splice(&path, start, end, t), field.mul(c, tc));
                }
            }
        }
    }
}

/// Completes the presentation's relations up to overlap length `bound`.
pub fn complete(
    p: &Presentation,
    order: &MonomialOrder,
    bound: usize,
) -> Result<RewriteSystem, RewriteError> {
    if bound < 2 {
        return Err(RewriteError::BadBound);
    }
    let (quiver, old_to_new) = order.relabel(&p.quiver)?;
    let field = p.field.clone();
    let targets = quiver.arrow_targets();
    let relabel = |path: &Path| {
        Path::from_parts(
            path.source() as u16,
            path.target() as u16,
            path.arrows()
                .iter()
                .map(|&a| old_to_new[a as usize] as u16)
                .collect(),
        )
    };
    let queue: Vec<PathPoly> = p
        .relations
        .iter()
        .rev()
        .map(|r| PathPoly::from_terms(&field, r.terms.iter().map(|(c, path)| (*c, relabel(path)))))
        .collect();
    let mut c = Completer {
        field: field.clone(),
        quiver: quiver.clone(),
        targets: targets.clone(),
        rules: Vec::new(),
        index: HashMap::new(),
        bound,
        deferred: false,
        seen_overlaps: HashSet::new(),
        pending: BinaryHeap::new(),
    };
    c.run(queue)?;

    // compact and interreduce right-hand sides
    let mut rules: Vec<RewriteRule> = c.rules.iter().flatten().cloned().collect();
    rules.sort_by(|a, b| a.lhs.cmp(&b.lhs));
    let index: HashMap<Vec<u16>, usize> = rules
        .iter()
        .enumerate()
        .map(|(i, r)| (r.lhs.arrows().to_vec(), i))
        .collect();
    let mut lhs_lengths: Vec<usize> = rules.iter().map(|r| r.lhs.len()).collect();
    lhs_lengths.sort_unstable();
    lhs_lengths.dedup();
    let reduced: Vec<PathPoly> = rules
        .iter()
        .map(|r| {
            reduce_with(
                &field,
                &targets,
                &r.rhs,
                |a| index.get(a).map(|&i| &rules[i]),
                &lhs_lengths,
                ReductionStrategy::LeftmostLargest,
            )
        })
        .collect();
    for (r, rhs) in rules.iter_mut().zip(reduced) {
        r.rhs = rhs;
    }

    let basis = irreducible_paths(&quiver, &index, &lhs_lengths, bound)?;
    let max_len = basis.iter().map(Path::len).max().unwrap_or(0);
    if c.deferred && 2 * max_len + 1 > bound {
        return Err(RewriteError::BoundExceeded {
            bound,
            irreducible: basis.len(),
        });
    }
    Ok(RewriteSystem {
        field,
        quiver,
        name: p.name.clone(),
        rules,
        index,
        lhs_lengths,
        targets,
        basis,
        bound,
    })
}

/// Completion with the default bound, doubling up to [`MAX_BOUND`].
pub fn complete_auto(
    p: &Presentation,
    order: &MonomialOrder,
) -> Result<RewriteSystem, RewriteError> {
    let mut bound = DEFAULT_BOUND;
    loop {
        match complete(p, order, bound) {
            Err(RewriteError::BoundExceeded { .. }) if bound < MAX_BOUND => bound *= 2,
            other => return other,
        }
    }
}

/// Irreducible paths in basis order, or `BoundExceeded` if one reaches `bound`.
fn irreducible_paths(
    quiver: &Quiver,
    index: &HashMap<Vec<u16>, usize>,
    lens: &[usize],
    bound: usize,
) -> Result<Vec<Path>, RewriteError> {
    let mut out: Vec<Path> = (0..quiver.num_vertices()).map(Path::trivial).collect();
    let mut frontier = out.clone();
    let mut outgoing: Vec<Vec<usize>> = vec![Vec::new(); quiver.num_vertices()];
    for (i, a) in quiver.arrows.iter().enumerate() {
        outgoing[a.source].push(i);
    }
    let mut length = 0;
    while !frontier.is_empty() {
        length += 1;
        if length >= bound {
            return Err(RewriteError::BoundExceeded {
                bound,
                irreducible: out.len(),
            });
        }
        let mut next = Vec::new();
        for p in &frontier {
            for &a in &outgoing[p.target()] {
                let q = p.compose(&quiver.arrow_path(a)).unwrap();
                let arrows = q.arrows();
                // the prefix is irreducible, so only suffixes can match
                let reducible = lens
                    .iter()
                    .take_while(|&&l| l <= arrows.len())
                    .any(|&l| index.contains_key(&arrows[arrows.len() - l..]));
                if !reducible {
                    next.push(q);
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out.sort();
    Ok(out)
}

impl RewriteSystem {
    pub fn field(&self) -> &Field {
        &self.field
    }

    /// The quiver with arrows indexed by precedence rank.
    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn rules(&self) -> &[RewriteRule] {
        &self.rules
    }

    /// Irreducible paths, trivial paths first, then length-lexicographic.
    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn is_irreducible(&self, path: &Path) -> bool {
        find_occurrence(path, &|a| self.lookup(a), &self.lhs_lengths, true).is_none()
    }

    fn lookup(&self, arrows: &[u16]) -> Option<&RewriteRule> {
        self.index.get(arrows).map(|&i| &self.rules[i])
    }

    pub fn normal_form(&self, x: &PathPoly) -> PathPoly {
        self.normal_form_with(x, ReductionStrategy::LeftmostLargest)
    }

    pub fn normal_form_with(&self, x: &PathPoly, strategy: ReductionStrategy) -> PathPoly {
        reduce_with(
            &self.field,
            &self.targets,
            x,
            |a| self.lookup(a),
            &self.lhs_lengths,
            strategy,
        )
    }

    /// Normal form of a single path.
    pub fn reduce_path(&self, path: &Path) -> PathPoly {
        self.normal_form(&PathPoly::monomial(Fq::ONE, path.clone()))
    }

    /// Parses `a.b.c` (names from the presentation) into a path.
    pub fn path(&self, text: &str) -> Option<Path> {
        self.quiver.path(text)
    }

    pub fn format_path(&self, path: &Path) -> String {
        self.quiver.format_path(path)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::presentation::{catalog_lookup, parse_presentation};

    fn system(src: &str) -> RewriteSystem {
        let p = parse_presentation(src).unwrap();
        complete(&p, &MonomialOrder::declaration(&p), DEFAULT_BOUND).unwrap()
    }

    fn names(sys: &RewriteSystem) -> Vec<String> {
        sys.basis().iter().map(|b| sys.format_path(b)).collect()
    }

    #[test]
    fn dual_numbers() {
        let sys = system("field 2\nvertices e\narrow x: e -> e\nrel x.x\n");
        assert_eq!(sys.rules().len(), 1);
        assert!(sys.rules()[0].rhs.is_zero());
        assert_eq!(names(&sys), vec!["e", "x"]);
    }

    #[test]
    fn nonhomogeneous_relation_is_oriented_by_length() {
        // x^2 = x^3 has leading term x^3, giving K[x]/(x^2 - x^3) of dimension 3
        let sys = system("field 3\nvertices e\narrow x: e -> e\nrel x.x = x.x.x\n");
        assert_eq!(names(&sys), vec!["e", "x", "x.x"]);
    }

    #[test]
    fn inconsistent_presentation() {
        let p = parse_presentation("field 2\nvertices e\narrow x: e -> e\nrel x.x\nrel x.x.x\n")
            .unwrap();
        // x^2 = -e and x^3 = 0 force x = 0 and then e = 0
        let mut bad = p.clone();
        bad.relations[0].terms.push((Fq::ONE, Path::trivial(0)));
        assert!(matches!(
            complete(&bad, &MonomialOrder::declaration(&bad), 8),
            Err(RewriteError::InconsistentPresentation { .. })
        ));
    }

    #[test]
    fn infinite_dimensional_input_exceeds_bound() {
        let p =
            parse_presentation("field 2\nvertices e\narrow x: e -> e\narrow y: e -> e\nrel x.y\n")
                .unwrap();
        assert!(matches!(
            complete(&p, &MonomialOrder::declaration(&p), 8),
            Err(RewriteError::BoundExceeded { bound: 8, .. })
        ));
        assert!(matches!(
            complete_auto(&p, &MonomialOrder::declaration(&p)),
            Err(RewriteError::BoundExceeded {
                bound: MAX_BOUND,
                ..
            })
        ));
        assert_eq!(
            complete(&p, &MonomialOrder::declaration(&p), 1).unwrap_err(),
            RewriteError::BadBound
        );
    }

    #[test]
    fn lambda2p_basis_count() {
        let f3 = Field::prime(3).unwrap();
        let p = catalog_lookup("Lambda2p", &f3, &[]).unwrap();
        let sys = complete_auto(&p, &MonomialOrder::declaration(&p)).unwrap();
        assert_eq!(sys.basis().len(), 11, "{:?}", names(&sys));
    }

    #[test]
    fn normal_forms_in_lambda2_and_lambda2p() {
        let f3 = Field::prime(3).unwrap();
        let l2 = catalog_lookup("Lambda2", &f3, &[]).unwrap();
        let sys = complete_auto(&l2, &MonomialOrder::declaration(&l2)).unwrap();
        let bg = sys.reduce_path(&sys.path("beta.gamma").unwrap());
        let bag = sys.reduce_path(&sys.path("beta.alpha.gamma").unwrap());
        assert_eq!(bg, bag);
        assert!(!bg.is_zero());

        let l2p = catalog_lookup("Lambda2p", &f3, &[]).unwrap();
        let sys = complete_auto(&l2p, &MonomialOrder::declaration(&l2p)).unwrap();
        assert!(sys.reduce_path(&sys.path("beta.gamma").unwrap()).is_zero());
        // e_v x = x
        let x = sys.reduce_path(&sys.path("beta.alpha").unwrap());
        let ex = sys.reduce_path(
            &Path::trivial(1)
                .compose(&sys.path("beta.alpha").unwrap())
                .unwrap(),
        );
        assert_eq!(x, ex);
    }

    #[test]
    fn custom_precedence_gives_same_dimension() {
        let f4 = Field::new(2, 2).unwrap();
        let p = catalog_lookup("Lambda3", &f4, &[("lambda".into(), f4.generator())]).unwrap();
        let default = complete_auto(&p, &MonomialOrder::declaration(&p)).unwrap();
        let rev: Vec<String> = p
            .quiver
            .arrows
            .iter()
            .rev()
            .map(|a| a.name.clone())
            .collect();
        let other = complete_auto(&p, &MonomialOrder::with_precedence(rev)).unwrap();
        assert_eq!(default.basis().len(), 12);
        assert_eq!(other.basis().len(), 12);
        assert!(matches!(
            complete(
                &p,
                &MonomialOrder::with_precedence(vec!["alpha".into()]),
                32
            ),
            Err(RewriteError::BadOrder(_))
        ));
    }

    #[test]
    fn strategies_agree() {
        let f2 = Field::prime(2).unwrap();
        let p = catalog_lookup("Lambda5", &f2, &[]).unwrap();
        let sys = complete_auto(&p, &MonomialOrder::declaration(&p)).unwrap();
        for w in [
            "alpha.alpha.alpha.alpha",
            "beta.gamma.beta.alpha",
            "gamma.beta.gamma",
            "alpha.gamma.beta.alpha.gamma",
        ] {
            let Some(path) = sys.path(w) else { continue };
            let x = PathPoly::monomial(Fq::ONE, path);
            assert_eq!(
                sys.normal_form_with(&x, ReductionStrategy::LeftmostLargest),
                sys.normal_form_with(&x, ReductionStrategy::RightmostSmallest),
                "{w}"
            );
        }
    }
}
