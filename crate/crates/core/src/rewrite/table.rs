use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{PathPoly, RewriteError, RewriteSystem};
use crate::field::{Field, Fq};
use crate::presentation::{Path, Quiver};

/// Dense coordinate vector in the table's basis.
pub type Elem = Vec<Fq>;

const FULL_ASSOCIATIVITY_DIM: usize = 64;
const SAMPLED_TRIPLES: usize = 100_000;

/// Monomial basis and exact structure constants of a finite-dimensional
/// bound quiver algebra.
#[derive(Debug, Clone)]
pub struct AlgebraTable {
    system: RewriteSystem,
    basis: Vec<Path>,
    index: HashMap<Path, usize>,
    mul: Vec<Vec<(usize, Fq)>>,
    idempotents: Vec<usize>,
    // composable partners: by_source[v] = basis elements starting at v
    by_source: Vec<Vec<usize>>,
}

pub fn build_table(sys: &RewriteSystem) -> Result<AlgebraTable, RewriteError> {
    let basis = sys.basis().to_vec();
    let d = basis.len();
    let index: HashMap<Path, usize> = basis
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, p)| (p, i))
        .collect();
    let nv = sys.quiver().num_vertices();
    let mut by_source = vec![Vec::new(); nv];
    for (i, b) in basis.iter().enumerate() {
        by_source[b.source()].push(i);
    }
    let mut mul = vec![Vec::new(); d * d];
    for (i, a) in basis.iter().enumerate() {
        for &j in &by_source[a.target()] {
            let prod = a.compose(&basis[j]).expect("composable");
            let nf = if sys.is_irreducible(&prod) {
                PathPoly::monomial(Fq::ONE, prod)
            } else {
                sys.reduce_path(&prod)
            };
            let mut row: Vec<(usize, Fq)> = nf.terms().map(|(p, c)| (index[p], c)).collect();
            row.sort_unstable_by_key(|&(k, _)| k);
            mul[i * d + j] = row;
        }
    }
    let idempotents = (0..nv).map(|v| index[&Path::trivial(v)]).collect();
    let t = AlgebraTable {
        system: sys.clone(),
        basis,
        index,
        mul,
        idempotents,
        by_source,
    };
    t.check_associativity()?;
    Ok(t)
}

/// Dimension and Cartan matrix: `C[i][j]` counts basis paths from `i` to `j`.
pub fn dim_and_cartan(t: &AlgebraTable) -> (usize, Vec<Vec<usize>>) {
    let n = t.quiver().num_vertices();
    let mut c = vec![vec![0; n]; n];
    for b in &t.basis {
        c[b.source()][b.target()] += 1;
    }
    (t.dim(), c)
}

impl AlgebraTable {
    pub fn field(&self) -> &Field {
        self.system.field()
    }

    pub fn quiver(&self) -> &Quiver {
        self.system.quiver()
    }

    pub fn system(&self) -> &RewriteSystem {
        &self.system
    }

    pub fn name(&self) -> Option<&str> {
        self.system.name()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn basis_index(&self, path: &Path) -> Option<usize> {
        self.index.get(path).copied()
    }

    /// Basis indices of the vertex idempotents, in vertex order.
    pub fn idempotents(&self) -> &[usize] {
        &self.idempotents
    }

    /// Basis indices of the arrows, skipping arrows that are not irreducible.
    pub fn arrow_indices(&self) -> Vec<usize> {
        (0..self.quiver().num_arrows())
            .filter_map(|a| self.basis_index(&self.quiver().arrow_path(a)))
            .collect()
    }

    /// Basis elements starting at vertex `v`.
    pub fn starting_at(&self, v: usize) -> &[usize] {
        &self.by_source[v]
    }

    /// `b_i * b_j` as a sparse vector (empty when zero or not composable).
    pub fn product(&self, i: usize, j: usize) -> &[(usize, Fq)] {
        &self.mul[i * self.dim() + j]
    }

    pub fn zero(&self) -> Elem {
        vec![Fq::ZERO; self.dim()]
    }

    pub fn one(&self) -> Elem {
        let mut x = self.zero();
        for &e in &self.idempotents {
            x[e] = Fq::ONE;
        }
        x
    }

    pub fn unit(&self, i: usize) -> Elem {
        let mut x = self.zero();
        x[i] = Fq::ONE;
        x
    }

    pub fn mul(&self, a: &[Fq], b: &[Fq]) -> Elem {
        let f = self.field();
        let mut out = self.zero();
        for (i, &ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for &j in &self.by_source[self.basis[i].target()] {
                let bj = b[j];
                if bj.is_zero() {
                    continue;
                }
                let c = f.mul(ai, bj);
                for &(k, v) in self.product(i, j) {
                    out[k] = f.mul_add(c, v, out[k]);
                }
            }
        }
        out
    }

    pub fn add(&self, a: &[Fq], b: &[Fq]) -> Elem {
        let f = self.field();
        a.iter().zip(b).map(|(&x, &y)| f.add(x, y)).collect()
    }

    pub fn sub(&self, a: &[Fq], b: &[Fq]) -> Elem {
        let f = self.field();
        a.iter().zip(b).map(|(&x, &y)| f.sub(x, y)).collect()
    }

    pub fn scale(&self, c: Fq, a: &[Fq]) -> Elem {
        let f = self.field();
        a.iter().map(|&x| f.mul(c, x)).collect()
    }

    /// `ab - ba`.
    pub fn commutator(&self, a: &[Fq], b: &[Fq]) -> Elem {
        self.sub(&self.mul(a, b), &self.mul(b, a))
    }

    pub fn pow(&self, a: &[Fq], mut e: u64) -> Elem {
        let mut result = self.one();
        let mut base = a.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(&result, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        result
    }

    /// `a^(p^n)` by `n` successive `p`-th powers.
    pub fn pow_p_n(&self, a: &[Fq], n: u32) -> Elem {
        let p = self.field().p();
        let mut x = a.to_vec();
        for _ in 0..n {
            x = self.pow(&x, p);
        }
        x
    }

    /// Coordinates of a path polynomial after reduction.
    pub fn element(&self, x: &PathPoly) -> Elem {
        let nf = self.system.normal_form(x);
        let mut out = self.zero();
        for (p, c) in nf.terms() {
            out[self.index[p]] = c;
        }
        out
    }

    /// Coordinates of the path `a.b.c` (or a vertex name); `None` if it does not parse.
    pub fn path_element(&self, text: &str) -> Option<Elem> {
        let p = self.system.path(text)?;
        Some(self.element(&PathPoly::monomial(Fq::ONE, p)))
    }

    /// Linear combination of named paths.
    pub fn combination(&self, terms: &[(Fq, &str)]) -> Option<Elem> {
        let mut out = self.zero();
        for &(c, text) in terms {
            let x = self.path_element(text)?;
            out = self.add(&out, &self.scale(c, &x));
        }
        Some(out)
    }

    pub fn format_elem(&self, x: &[Fq]) -> String {
        let mut terms: Vec<(Fq, Path)> = x
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, &c)| (c, self.basis[i].clone()))
            .collect();
        terms.reverse();
        crate::presentation::format_terms(self.field(), self.quiver(), &terms)
    }

    pub fn format_basis(&self, i: usize) -> String {
        self.quiver().format_path(&self.basis[i])
    }

    fn sparse_mul(&self, a: &[(usize, Fq)], j: usize) -> Vec<(usize, Fq)> {
        let f = self.field();
        let mut acc: Vec<(usize, Fq)> = Vec::new();
        for &(i, c) in a {
            for &(k, v) in self.product(i, j) {
                acc.push((k, f.mul(c, v)));
            }
        }
        collect_sparse(f, acc)
    }

    fn sparse_lmul(&self, i: usize, b: &[(usize, Fq)]) -> Vec<(usize, Fq)> {
        let f = self.field();
        let mut acc: Vec<(usize, Fq)> = Vec::new();
        for &(j, c) in b {
            for &(k, v) in self.product(i, j) {
                acc.push((k, f.mul(c, v)));
            }
        }
        collect_sparse(f, acc)
    }

    fn associative_on(&self, i: usize, j: usize, k: usize) -> bool {
        let left = self.sparse_mul(self.product(i, j), k);
        let right = self.sparse_lmul(i, self.product(j, k));
        left == right
    }

    fn check_associativity(&self) -> Result<(), RewriteError> {
        let fail = |i: usize, j: usize, k: usize| RewriteError::AssociativityFailure {
            a: self.format_basis(i),
            b: self.format_basis(j),
            c: self.format_basis(k),
        };
        let d = self.dim();
        if d <= FULL_ASSOCIATIVITY_DIM {
            for i in 0..d {
                for &j in &self.by_source[self.basis[i].target()] {
                    for &k in &self.by_source[self.basis[j].target()] {
                        if !self.associative_on(i, j, k) {
                            return Err(fail(i, j, k));
                        }
                    }
                }
            }
            return Ok(());
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        for _ in 0..SAMPLED_TRIPLES {
            let i = rng.gen_range(0..d);
            let js = &self.by_source[self.basis[i].target()];
            let j = js[rng.gen_range(0..js.len())];
            let ks = &self.by_source[self.basis[j].target()];
            let k = ks[rng.gen_range(0..ks.len())];
            if !self.associative_on(i, j, k) {
                return Err(fail(i, j, k));
            }
        }
        Ok(())
    }
}

fn collect_sparse(f: &Field, mut acc: Vec<(usize, Fq)>) -> Vec<(usize, Fq)> {
    acc.sort_unstable_by_key(|&(k, _)| k);
    let mut out: Vec<(usize, Fq)> = Vec::with_capacity(acc.len());
    for (k, v) in acc {
        match out.last_mut() {
            Some((lk, lv)) if *lk == k => *lv = f.add(*lv, v),
            _ => out.push((k, v)),
        }
    }
    out.retain(|(_, v)| !v.is_zero());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::{catalog_lookup, parse_presentation};
    use crate::rewrite::{complete_auto, MonomialOrder};

    fn table_of(p: &crate::presentation::Presentation) -> AlgebraTable {
        build_table(&complete_auto(p, &MonomialOrder::declaration(p)).unwrap()).unwrap()
    }

    #[test]
    fn dual_numbers_table() {
        let p = parse_presentation("field 2\nvertices e\narrow x: e -> e\nrel x.x\n").unwrap();
        let t = table_of(&p);
        assert_eq!(dim_and_cartan(&t), (2, vec![vec![2]]));
        assert!(t.product(1, 1).is_empty());
        assert_eq!(t.product(0, 1), &[(1, Fq::ONE)]);
    }

    #[test]
    fn lambda2_gamma_beta_is_alpha_cubed() {
        let f3 = Field::prime(3).unwrap();
        let t = table_of(&catalog_lookup("Lambda2", &f3, &[]).unwrap());
        assert_eq!(t.dim(), 11);
        assert_eq!(
            t.path_element("gamma.beta"),
            t.path_element("alpha.alpha.alpha")
        );
        let gb = t.path_element("gamma.beta").unwrap();
        // length-first order orients alpha^3 -> gamma.beta
        assert_eq!(t.format_elem(&gb), "gamma.beta");
    }

    #[test]
    fn cartan_matrices() {
        let f3 = Field::prime(3).unwrap();
        let t = table_of(&catalog_lookup("Lambda2p", &f3, &[]).unwrap());
        assert_eq!(dim_and_cartan(&t), (11, vec![vec![5, 2], vec![2, 2]]));
        let f4 = Field::new(2, 2).unwrap();
        let t = table_of(
            &catalog_lookup("Lambda3", &f4, &[("lambda".into(), f4.generator())]).unwrap(),
        );
        assert_eq!(dim_and_cartan(&t), (12, vec![vec![4, 2], vec![2, 4]]));
    }

    #[test]
    fn one_is_a_unit() {
        let f2 = Field::prime(2).unwrap();
        let t = table_of(&catalog_lookup("Lambda5", &f2, &[]).unwrap());
        let one = t.one();
        for i in 0..t.dim() {
            let b = t.unit(i);
            assert_eq!(t.mul(&one, &b), b);
            assert_eq!(t.mul(&b, &one), b);
        }
        assert_eq!(t.pow(&t.unit(3), 0), one);
    }
}
