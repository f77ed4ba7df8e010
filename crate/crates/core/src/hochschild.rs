//! Dimensions of `HH^0`, `HH^1`, `HH^2` from cochain complexes.
//!
//! The default complex is the reduced bar complex relative to the
//! subalgebra `E` spanned by the vertex idempotents: an `n`-cochain assigns to
//! each composable `n`-tuple of radical basis paths an element of `A` parallel
//! to the tuple. The full (non-relative) bar complex is kept as an oracle for
//! small algebras.

use std::collections::HashMap;

use thiserror::Error;

use crate::field::Fq;
use crate::linalg::SparseEchelon;
use crate::rewrite::AlgebraTable;

pub const MAX_DEGREE: usize = 2;
pub const BAR_MAX_DIM: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HochschildError {
    #[error("degree {0} is not supported (maximum {MAX_DEGREE})")]
    DegreeUnsupported(usize),
    #[error("bar complex oracle limited to dimension {BAR_MAX_DIM}, algebra has dimension {0}")]
    OracleTooLarge(usize),
    #[error("differential composition is nonzero in degree {0}")]
    NotAComplex(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Relative,
    Bar,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Relative => "relative",
            Method::Bar => "bar",
        }
    }
}

/// A cochain basis element: argument tuple and value basis index.
pub type CochainKey = (Vec<usize>, usize);

/// Sparse matrix of a differential, stored by column.
#[derive(Debug, Clone)]
pub struct Differential {
    pub degree: usize,
    pub rows: usize,
    pub columns: Vec<Vec<(usize, Fq)>>,
}

impl Differential {
    pub fn rank(&self, t: &AlgebraTable) -> usize {
        let mut e = SparseEchelon::new(t.field());
        for c in &self.columns {
            e.insert(c.clone());
        }
        e.rank()
    }

    pub fn apply(&self, t: &AlgebraTable, x: &[(usize, Fq)]) -> Vec<(usize, Fq)> {
        let f = t.field();
        let mut acc: HashMap<usize, Fq> = HashMap::new();
        for &(j, c) in x {
            for &(i, v) in &self.columns[j] {
                let e = acc.entry(i).or_insert(Fq::ZERO);
                *e = f.mul_add(c, v, *e);
            }
        }
        let mut out: Vec<(usize, Fq)> = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        out.sort_unstable_by_key(|&(i, _)| i);
        out
    }
}

struct Complex<'a> {
    t: &'a AlgebraTable,
    method: Method,
    letters: Vec<usize>,
    // factorizations[r] = (x, y, c) with c the coefficient of b_r in x*y, x and y letters
    factorizations: Vec<Vec<(usize, usize, Fq)>>,
}

impl<'a> Complex<'a> {
    fn new(t: &'a AlgebraTable, method: Method) -> Complex<'a> {
        let letters: Vec<usize> = match method {
            Method::Relative => (0..t.dim())
                .filter(|&i| !t.basis()[i].is_trivial())
                .collect(),
            Method::Bar => (0..t.dim()).collect(),
        };
        let mut factorizations = vec![Vec::new(); t.dim()];
        for &x in &letters {
            for &y in &letters {
                for &(r, c) in t.product(x, y) {
                    factorizations[r].push((x, y, c));
                }
            }
        }
        Complex {
            t,
            method,
            letters,
            factorizations,
        }
    }

    fn composable(&self, a: usize, b: usize) -> bool {
        self.method == Method::Bar || self.t.basis()[a].target() == self.t.basis()[b].source()
    }

    fn tuples(&self, n: usize) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = vec![Vec::new()];
        for _ in 0..n {
            let mut next = Vec::new();
            for tup in &out {
                for &l in &self.letters {
                    if tup.last().is_none_or(|&p| self.composable(p, l)) {
                        let mut x = tup.clone();
                        x.push(l);
                        next.push(x);
                    }
                }
            }
            out = next;
        }
        out
    }

    /// Cochain basis in canonical order: tuples lexicographic, then values.
    fn basis(&self, n: usize) -> Vec<CochainKey> {
        let t = self.t;
        let mut out = Vec::new();
        if n == 0 && self.method == Method::Relative {
            for v in 0..t.quiver().num_vertices() {
                for &b in t.starting_at(v) {
                    if t.basis()[b].target() == v {
                        out.push((Vec::new(), b));
                    }
                }
            }
            out.sort();
            return out;
        }
        for tup in self.tuples(n) {
            for b in 0..t.dim() {
                if self.method == Method::Bar || self.parallel(&tup, b) {
                    out.push((tup.clone(), b));
                }
            }
        }
        out
    }

    fn parallel(&self, tup: &[usize], b: usize) -> bool {
        let basis = self.t.basis();
        let (s, e) = (basis[tup[0]].source(), basis[*tup.last().unwrap()].target());
        basis[b].source() == s && basis[b].target() == e
    }

    fn differential(&self, n: usize) -> Differential {
        let t = self.t;
        let f = t.field();
        let src = self.basis(n);
        let dst = self.basis(n + 1);
        let index: HashMap<&CochainKey, usize> =
            dst.iter().enumerate().map(|(i, k)| (k, i)).collect();
        let sign = |k: usize| {
            if k.is_multiple_of(2) {
                Fq::ONE
            } else {
                f.neg(Fq::ONE)
            }
        };
        let mut columns = Vec::with_capacity(src.len());
        for (tau, b) in &src {
            let mut acc: HashMap<usize, Fq> = HashMap::new();
            let mut add = |sigma: Vec<usize>, vals: &[(usize, Fq)], c: Fq| {
                for &(k, v) in vals {
                    let key = (sigma.clone(), k);
                    if let Some(&i) = index.get(&key) {
                        let e = acc.entry(i).or_insert(Fq::ZERO);
                        *e = f.mul_add(c, v, *e);
                    }
                }
            };
            // a_1 f(a_2, ..., a_{n+1})
            for &a in &self.letters {
                if tau.first().is_none_or(|&x| self.composable(a, x)) {
                    let mut sigma = vec![a];
                    sigma.extend_from_slice(tau);
                    add(sigma, t.product(a, *b), Fq::ONE);
                }
            }
            // (-1)^i f(..., a_i a_{i+1}, ...)
            for (i, &r) in tau.iter().enumerate() {
                for &(x, y, c) in &self.factorizations[r] {
                    let mut sigma = tau[..i].to_vec();
                    sigma.push(x);
                    sigma.push(y);
                    sigma.extend_from_slice(&tau[i + 1..]);
                    add(sigma, &[(*b, c)], sign(i + 1));
                }
            }
            // (-1)^{n+1} f(a_1, ..., a_n) a_{n+1}
            for &a in &self.letters {
                if tau.last().is_none_or(|&x| self.composable(x, a)) {
                    let mut sigma = tau.clone();
                    sigma.push(a);
                    add(sigma, t.product(*b, a), sign(n + 1));
                }
            }
            let mut col: Vec<(usize, Fq)> = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
            col.sort_unstable_by_key(|&(i, _)| i);
            columns.push(col);
        }
        Differential {
            degree: n,
            rows: dst.len(),
            columns,
        }
    }
}

fn check_method(t: &AlgebraTable, method: Method) -> Result<(), HochschildError> {
    if method == Method::Bar && t.dim() > BAR_MAX_DIM {
        return Err(HochschildError::OracleTooLarge(t.dim()));
    }
    Ok(())
}

/// Matrix of `δ^n : C^n -> C^{n+1}` in the canonical cochain bases.
pub fn hh_differential(
    t: &AlgebraTable,
    n: usize,
    method: Method,
) -> Result<Differential, HochschildError> {
    if n > MAX_DEGREE {
        return Err(HochschildError::DegreeUnsupported(n));
    }
    check_method(t, method)?;
    Ok(Complex::new(t, method).differential(n))
}

/// Cochain dimensions and ranks behind an `HH^n` computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HhReport {
    pub degree: usize,
    pub dim: usize,
    pub method: Method,
    /// `dim C^{n-1}, dim C^n, dim C^{n+1}` (the first omitted for `n = 0`).
    pub cochain_dims: Vec<usize>,
    /// `rank δ^{n-1}, rank δ^n`.
    pub ranks: Vec<usize>,
}

pub fn hh_report(t: &AlgebraTable, n: usize, method: Method) -> Result<HhReport, HochschildError> {
    if n > MAX_DEGREE {
        return Err(HochschildError::DegreeUnsupported(n));
    }
    check_method(t, method)?;
    let cx = Complex::new(t, method);
    let dn = cx.differential(n);
    let rank_n = dn.rank(t);
    let mut cochain_dims = Vec::new();
    let mut ranks = Vec::new();
    let mut rank_prev = 0;
    if n > 0 {
        let dp = cx.differential(n - 1);
        rank_prev = dp.rank(t);
        cochain_dims.push(dp.columns.len());
        ranks.push(rank_prev);
    }
    cochain_dims.push(dn.columns.len());
    cochain_dims.push(dn.rows);
    ranks.push(rank_n);
    Ok(HhReport {
        degree: n,
        dim: dn.columns.len() - rank_n - rank_prev,
        method,
        cochain_dims,
        ranks,
    })
}

pub fn hh_dim(t: &AlgebraTable, n: usize, method: Method) -> Result<usize, HochschildError> {
    Ok(hh_report(t, n, method)?.dim)
}

/// `dim HH^0, HH^1, HH^2` sharing the differentials between degrees.
pub fn hh_dims(t: &AlgebraTable, method: Method) -> Result<[usize; 3], HochschildError> {
    check_method(t, method)?;
    let cx = Complex::new(t, method);
    let mut dims = [0; 3];
    let mut prev_rank = 0;
    for (n, slot) in dims.iter_mut().enumerate() {
        let d = cx.differential(n);
        let r = d.rank(t);
        *slot = d.columns.len() - r - prev_rank;
        prev_rank = r;
    }
    Ok(dims)
}

/// Checks `δ^{n+1} ∘ δ^n = 0` for `n = 0, 1`.
pub fn check_complex(t: &AlgebraTable, method: Method) -> Result<(), HochschildError> {
    check_method(t, method)?;
    let cx = Complex::new(t, method);
    let mut d = cx.differential(0);
    for n in 0..2 {
        let next = cx.differential(n + 1);
        for col in &d.columns {
            if !next.apply(t, col).is_empty() {
                return Err(HochschildError::NotAComplex(n));
            }
        }
        d = next;
    }
    Ok(())
}
