#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use kuelsh::field::{Field, Fq};
use kuelsh::invariants::{
    commutator_subspace, form_from_presentation, form_search, form_validate, InvariantError,
    SymmetrizingForm,
};
use kuelsh::linalg::Subspace;
use kuelsh::presentation::{catalog_entries, catalog_lookup, parse_presentation, Presentation};
use kuelsh::rewrite::{build_table, complete_auto, AlgebraTable, MonomialOrder};

pub struct Fixture {
    pub label: String,
    pub presentation: Presentation,
    pub table: AlgebraTable,
}

impl Fixture {
    pub fn form(&self) -> Option<SymmetrizingForm> {
        if self.presentation.has_form() {
            let psi = form_from_presentation(&self.table, &self.presentation).unwrap();
            return Some(form_validate(&self.table, &psi).unwrap());
        }
        match form_search(&self.table, 0) {
            Ok(f) => Some(f),
            Err(InvariantError::NotSymmetricAlgebra) => None,
            Err(e) => panic!("{}: {e}", self.label),
        }
    }
}

pub fn table_of(p: &Presentation) -> AlgebraTable {
    build_table(&complete_auto(p, &MonomialOrder::declaration(p)).unwrap()).unwrap()
}

pub fn lookup(name: &str, p: u64, k: u32, lambda: Option<&str>) -> Fixture {
    let f = Field::new(p, k).unwrap();
    let params: Vec<(String, Fq)> = lambda
        .map(|l| vec![("lambda".to_string(), f.parse(l).unwrap())])
        .unwrap_or_default();
    let presentation = catalog_lookup(name, &f, &params).unwrap();
    let label = match lambda {
        Some(l) => format!("{name}({l}) over F_{}", f.name()),
        None => format!("{name} over F_{}", f.name()),
    };
    Fixture {
        table: table_of(&presentation),
        presentation,
        label,
    }
}

pub fn from_text(label: &str, text: &str) -> Fixture {
    let presentation = parse_presentation(text).unwrap();
    Fixture {
        label: label.to_string(),
        table: table_of(&presentation),
        presentation,
    }
}

/// Every catalog entry at its own characteristic (2 when unrestricted),
/// over `F_{p^2}` with `lambda = g` when a parameter is needed.
pub fn catalog() -> Vec<Fixture> {
    catalog_entries()
        .iter()
        .map(|e| {
            let p = e.characteristic.unwrap_or(2);
            if e.needs_lambda {
                lookup(e.name, p, 2, Some("g"))
            } else {
                lookup(e.name, p, 1, None)
            }
        })
        .collect()
}

/// Small hand-written algebras.
pub fn small() -> Vec<Fixture> {
    vec![
        from_text("dual numbers p=2", "field 2\nvertices e\narrow x: e -> e\nrel x.x\n"),
        from_text("x^3 p=3", "field 3\nvertices e\narrow x: e -> e\nrel x.x.x\n"),
        from_text(
            "Nakayama 2-cycle",
            "field 2\nvertices a b\narrow u: a -> b\narrow v: b -> a\nrel u.v.u\nrel v.u.v\n",
        ),
        from_text(
            "exterior algebra p=3",
            "field 3\nvertices e\narrow x: e -> e\narrow y: e -> e\nrel x.x\nrel y.y\nrel x.y + y.x\n",
        ),
        from_text(
            "commutative square F4",
            "field 2 2\nvertices e\narrow x: e -> e\narrow y: e -> e\nrel x.y = y.x\nrel x.x\nrel y.y\n",
        ),
    ]
}

pub fn elem(t: &AlgebraTable, terms: &[(i64, &str)]) -> Vec<Fq> {
    let f = t.field();
    let terms: Vec<(Fq, &str)> = terms.iter().map(|&(c, s)| (f.from_int(c), s)).collect();
    t.combination(&terms)
        .unwrap_or_else(|| panic!("unknown path in {terms:?}"))
}

pub fn span(t: &AlgebraTable, vectors: &[Vec<Fq>]) -> Subspace {
    Subspace::span(t.field(), t.dim(), vectors).unwrap()
}

// ---------------------------------------------------------------------------
// truncated free-algebra oracle
// ---------------------------------------------------------------------------

/// A path of the presentation's quiver as (source vertex, arrow indices).
type Word = (usize, Vec<usize>);

/// Multiplication in `KQ / (I + KQ_{>N})`, with `N` raised until the
/// quotient dimension stops changing. Uses only the presentation: paths are
/// enumerated explicitly and the ideal is spanned by all `u r v`.
pub struct FreeOracle {
    pub field: Field,
    pub depth: usize,
    pub dim: usize,
    words: Vec<Word>,
    index: HashMap<Word, usize>,
    // rank position of each path column: non-basis paths first
    rank: Vec<usize>,
    // rows keyed by pivot rank; each row maps rank -> coefficient, pivot coefficient 1
    rows: BTreeMap<usize, BTreeMap<usize, Fq>>,
    by_rank: Vec<usize>,
}

fn all_words(p: &Presentation, max_len: usize) -> Vec<Word> {
    let q = &p.quiver;
    let mut out: Vec<Word> = (0..q.vertices.len()).map(|v| (v, Vec::new())).collect();
    let mut frontier = out.clone();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for (s, w) in &frontier {
            let end = w.last().map_or(*s, |&a| q.arrows[a].target);
            for (a, arrow) in q.arrows.iter().enumerate() {
                if arrow.source == end {
                    let mut x = w.clone();
                    x.push(a);
                    next.push((*s, x));
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

fn word_of(path: &kuelsh::presentation::Path) -> Word {
    (
        path.source(),
        path.arrows().iter().map(|&a| a as usize).collect(),
    )
}

impl FreeOracle {
    /// `basis` names the table's basis paths (by arrow names), used as the
    /// preferred non-pivot columns. Returns `None` past `max_depth`.
    pub fn new(p: &Presentation, basis: &[String], max_depth: usize) -> Option<FreeOracle> {
        let start = basis
            .iter()
            .map(|b| b.matches('.').count() + 1)
            .max()
            .unwrap_or(1);
        let mut prev = None;
        for depth in start..=max_depth {
            let o = FreeOracle::at_depth(p, basis, depth);
            if prev == Some(o.dim) {
                return Some(o);
            }
            prev = Some(o.dim);
        }
        None
    }

    fn at_depth(p: &Presentation, basis: &[String], depth: usize) -> FreeOracle {
        let f = p.field.clone();
        let q = &p.quiver;
        let words = all_words(p, depth);
        let index: HashMap<Word, usize> = words
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, w)| (w, i))
            .collect();
        let basis_words: Vec<Word> = basis
            .iter()
            .map(|b| word_of(&q.path(b).expect("basis path parses")))
            .collect();
        let mut order: Vec<usize> = (0..words.len()).collect();
        order.sort_by_key(|&i| (basis_words.contains(&words[i]), i));
        let mut rank = vec![0; words.len()];
        for (r, &i) in order.iter().enumerate() {
            rank[i] = r;
        }
        let mut o = FreeOracle {
            field: f.clone(),
            depth,
            dim: 0,
            words: words.clone(),
            index,
            rank,
            rows: BTreeMap::new(),
            by_rank: order,
        };
        let ends = |w: &Word| w.1.last().map_or(w.0, |&a| q.arrows[a].target);
        for rel in &p.relations {
            let terms: Vec<(Fq, Word)> = rel
                .terms
                .iter()
                .map(|(c, path)| (*c, word_of(path)))
                .collect();
            let (s, e) = (terms[0].1 .0, ends(&terms[0].1));
            let min_len = terms.iter().map(|(_, w)| w.1.len()).min().unwrap();
            for u in words.iter().filter(|u| ends(u) == s) {
                for v in words.iter().filter(|v| v.0 == e) {
                    if u.1.len() + v.1.len() + min_len > depth {
                        continue;
                    }
                    let mut row = BTreeMap::new();
                    for (c, w) in &terms {
                        let mut arrows = u.1.clone();
                        arrows.extend_from_slice(&w.1);
                        arrows.extend_from_slice(&v.1);
                        if let Some(&i) = o.index.get(&(u.0, arrows)) {
                            let r = o.rank[i];
                            let x = row.entry(r).or_insert(Fq::ZERO);
                            *x = f.add(*x, *c);
                        }
                    }
                    row.retain(|_, c: &mut Fq| !c.is_zero());
                    o.insert(row);
                }
            }
        }
        o.dim = words.len() - o.rows.len();
        o
    }

    fn reduce(&self, mut v: BTreeMap<usize, Fq>) -> BTreeMap<usize, Fq> {
        let f = &self.field;
        let mut cursor = 0;
        loop {
            let next = v
                .range(cursor..)
                .map(|(&r, &c)| (r, c))
                .find(|(r, _)| self.rows.contains_key(r));
            let Some((r, c)) = next else { break };
            for (&col, &x) in &self.rows[&r] {
                let e = v.entry(col).or_insert(Fq::ZERO);
                *e = f.sub(*e, f.mul(c, x));
            }
            v.retain(|_, c| !c.is_zero());
            cursor = r + 1;
        }
        v
    }

    fn insert(&mut self, row: BTreeMap<usize, Fq>) {
        let f = self.field.clone();
        let v = self.reduce(row);
        let Some((&pivot, &c)) = v.iter().next() else {
            return;
        };
        let inv = f.inv(c).unwrap();
        let v: BTreeMap<usize, Fq> = v.into_iter().map(|(r, x)| (r, f.mul(inv, x))).collect();
        self.rows.insert(pivot, v);
    }

    /// Normal form of the product of two named paths, as name -> coefficient.
    pub fn product(&self, p: &Presentation, a: &str, b: &str) -> BTreeMap<String, Fq> {
        let q = &p.quiver;
        let (wa, wb) = (word_of(&q.path(a).unwrap()), word_of(&q.path(b).unwrap()));
        let end_a = wa.1.last().map_or(wa.0, |&x| q.arrows[x].target);
        let mut out = BTreeMap::new();
        if end_a != wb.0 {
            return out;
        }
        let mut arrows = wa.1.clone();
        arrows.extend_from_slice(&wb.1);
        let Some(&i) = self.index.get(&(wa.0, arrows)) else {
            // longer than the stable depth: zero
            return out;
        };
        let v = self.reduce(BTreeMap::from([(self.rank[i], Fq::ONE)]));
        for (r, c) in v {
            let (s, w) = &self.words[self.by_rank[r]];
            let name = if w.is_empty() {
                q.vertices[*s].clone()
            } else {
                w.iter()
                    .map(|&x| q.arrows[x].name.as_str())
                    .collect::<Vec<_>>()
                    .join(".")
            };
            out.insert(name, c);
        }
        out
    }
}

/// The table's product of basis elements `i`, `j` as name -> coefficient.
pub fn table_product(t: &AlgebraTable, i: usize, j: usize) -> BTreeMap<String, Fq> {
    t.product(i, j)
        .iter()
        .map(|&(r, c)| (t.format_basis(r), c))
        .collect()
}

// ---------------------------------------------------------------------------
// brute-force T_n
// ---------------------------------------------------------------------------

/// All vectors of `F^n` (lexicographic in the encoding).
pub fn all_vectors(f: &Field, n: usize) -> impl Iterator<Item = Vec<Fq>> + '_ {
    let q = f.order();
    let total = q.pow(n as u32);
    (0..total).map(move |mut x| {
        (0..n)
            .map(|_| {
                let d = x % q;
                x /= q;
                Fq(d)
            })
            .collect()
    })
}

/// `{x : x^(p^n) ∈ K(A)}` by enumerating a complement of `K(A)`, or `None`
/// when the complement has more than `budget` elements.
pub fn brute_t_space(t: &AlgebraTable, n: u32, budget: u64) -> Option<Subspace> {
    let f = t.field();
    let k = commutator_subspace(t);
    let mut complement: Vec<Vec<Fq>> = Vec::new();
    let mut acc = k.clone();
    for i in 0..t.dim() {
        let u = t.unit(i);
        if !acc.contains(&u).unwrap() {
            acc = acc.sum(&span(t, std::slice::from_ref(&u))).unwrap();
            complement.push(u);
        }
    }
    let c = complement.len();
    if (f.order() as f64).powi(c as i32) > budget as f64 {
        return None;
    }
    let e = f.p().pow(n);
    let mut found = k.basis().to_vec();
    let mut count = 0u64;
    for coeffs in all_vectors(f, c) {
        let mut x = t.zero();
        for (cj, b) in coeffs.iter().zip(&complement) {
            x = t.add(&x, &t.scale(*cj, b));
        }
        // x^(p^n) by repeated multiplication
        let mut y = t.one();
        for _ in 0..e {
            y = t.mul(&y, &x);
        }
        if k.contains(&y).unwrap() {
            count += 1;
            found.push(x);
        }
    }
    let s = span(t, &found);
    // the solutions in the complement form a subspace
    assert_eq!(
        count,
        f.order().pow((s.dim() - k.dim()) as u32),
        "{}",
        t.name().unwrap_or("?")
    );
    Some(s)
}
