//! Centers, commutator spaces, socles, symmetrizing forms and Külshammer
//! ideals of an [`AlgebraTable`].
//!
//! For a symmetric algebra `A` with form `(a, b) = Ψ(ab)`, the spaces
//! `T_n(A) = {x : x^(p^n) ∈ K(A)}` have orthogonal complements forming a
//! descending chain of ideals of the center, starting at `Z(A) = K(A)^⊥`.

mod fingerprint;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::field::Fq;
use crate::linalg::{self, kernel, BilinearForm, LinalgError, Matrix, Subspace};
use crate::presentation::Presentation;
use crate::rewrite::{AlgebraTable, Elem};

pub use fingerprint::{compare, fingerprint, Comparison, Fingerprint, InvariantRow};

pub const DEFAULT_N_MAX: usize = 8;
const SWEEP_LIMIT: u128 = 1 << 16;
const SEARCH_ATTEMPTS: usize = 1000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("form is not central: Ψ({a}·{b}) = {ab} but Ψ({b}·{a}) = {ba}")]
    NotCentralForm {
        a: String,
        b: String,
        ab: String,
        ba: String,
    },
    #[error("form is degenerate: {kernel} lies in the radical of the form")]
    DegenerateForm { kernel: String },
    #[error("form entries are inconsistent: {0}")]
    InconsistentForm(String),
    #[error("presentation has no form entries")]
    NoForm,
    #[error("no central form has an invertible Gram matrix: the algebra is not symmetric")]
    NotSymmetricAlgebra,
    #[error("no symmetrizing form found in {attempts} random attempts; try a larger field")]
    SearchExhausted { attempts: usize },
    #[error("left socle (dim {left}) differs from right socle (dim {right})")]
    SocleMismatch { left: usize, right: usize },
    #[error("orthogonal complement of T_{level} is not contained in the previous one")]
    ChainNotDescending { level: usize },
    #[error("orthogonal complement of T_{level} is not an ideal of the center")]
    NotAnIdeal { level: usize },
    #[error("orthogonal complement of K(A) differs from the center")]
    CenterMismatch,
    #[error("input to xi is not central")]
    NotCentralInput,
    #[error("xi_{level} produced a non-central element")]
    XiNotCentral { level: usize },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

impl InvariantError {
    /// Failures that indicate a bug rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            InvariantError::ChainNotDescending { .. }
                | InvariantError::NotAnIdeal { .. }
                | InvariantError::CenterMismatch
                | InvariantError::XiNotCentral { .. }
        )
    }
}

/// A validated symmetrizing form: `psi` on the basis and its Gram matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetrizingForm {
    pub psi: Vec<Fq>,
    pub gram: BilinearForm,
}

/// Solution space of `x ↦ (x·g - g·x for each g)` style linear conditions,
/// given the image vectors of each basis element.
fn kernel_of_maps(t: &AlgebraTable, images: impl Fn(usize) -> Vec<Elem>) -> Subspace {
    let d = t.dim();
    let cols: Vec<Vec<Fq>> = (0..d).map(|i| images(i).concat()).collect();
    let r = cols.first().map_or(0, Vec::len);
    let mut m = Matrix::zeros(t.field(), r, d);
    for (j, c) in cols.iter().enumerate() {
        for (i, &x) in c.iter().enumerate() {
            m.set(i, j, x);
        }
    }
    kernel(&m)
}

fn generators(t: &AlgebraTable) -> Vec<usize> {
    let mut g = t.idempotents().to_vec();
    g.extend(t.arrow_indices());
    g
}

/// `Z(A)`: elements commuting with every vertex idempotent and arrow.
pub fn center(t: &AlgebraTable) -> Subspace {
    let gens: Vec<Elem> = generators(t).into_iter().map(|g| t.unit(g)).collect();
    kernel_of_maps(t, |i| {
        let b = t.unit(i);
        gens.iter().map(|g| t.commutator(&b, g)).collect()
    })
}

/// `K(A)`: span of all commutators of basis elements.
pub fn commutator_subspace(t: &AlgebraTable) -> Subspace {
    let d = t.dim();
    let mut vecs = Vec::new();
    for i in 0..d {
        for j in i + 1..d {
            let c = t.commutator(&t.unit(i), &t.unit(j));
            if c.iter().any(|x| !x.is_zero()) {
                vecs.push(c);
            }
        }
    }
    Subspace::span(t.field(), d, &vecs).unwrap()
}

/// `J(A)`: span of the basis paths of positive length.
pub fn radical(t: &AlgebraTable) -> Subspace {
    let vecs: Vec<Elem> = (0..t.dim())
        .filter(|&i| !t.basis()[i].is_trivial())
        .map(|i| t.unit(i))
        .collect();
    Subspace::span(t.field(), t.dim(), &vecs).unwrap()
}

/// `soc(A)`: annihilator of `J` on both sides; errors if the sides differ.
pub fn socle(t: &AlgebraTable) -> Result<Subspace, InvariantError> {
    let arrows: Vec<Elem> = t.arrow_indices().into_iter().map(|a| t.unit(a)).collect();
    // x J = 0
    let right = kernel_of_maps(t, |i| arrows.iter().map(|a| t.mul(&t.unit(i), a)).collect());
    // J x = 0
    let left = kernel_of_maps(t, |i| arrows.iter().map(|a| t.mul(a, &t.unit(i))).collect());
    if left != right {
        return Err(InvariantError::SocleMismatch {
            left: left.dim(),
            right: right.dim(),
        });
    }
    Ok(left)
}

/// The linear form described by a presentation's `form` lines.
///
/// Each line pins `Ψ(nf(path))`. The pinned normal forms are extended by
/// basis paths, taken in basis order, to a basis of `A`; `Ψ` is zero on the
/// added paths.
pub fn form_from_presentation(
    t: &AlgebraTable,
    p: &Presentation,
) -> Result<Vec<Fq>, InvariantError> {
    if p.form.is_empty() {
        return Err(InvariantError::NoForm);
    }
    let d = t.dim();
    let f = t.field();
    let mut rows: Vec<Vec<Fq>> = Vec::new();
    for (path, c) in &p.form {
        let name = p.quiver.format_path(path);
        let x = t
            .path_element(&name)
            .ok_or_else(|| InvariantError::InconsistentForm(format!("unknown path {name}")))?;
        let mut row = x;
        row.push(*c);
        rows.push(row);
    }
    let pinned = Subspace::span(
        f,
        d,
        &rows.iter().map(|r| r[..d].to_vec()).collect::<Vec<_>>(),
    )?;
    let mut span = pinned;
    for i in 0..d {
        let u = t.unit(i);
        if !span.contains(&u)? {
            span = span.sum(&Subspace::span(f, d, std::slice::from_ref(&u))?)?;
            let mut row = u;
            row.push(Fq::ZERO);
            rows.push(row);
        }
    }
    let m = Matrix::from_rows(f, d + 1, &rows)?;
    let (r, pivots) = m.rref();
    if pivots.last() == Some(&d) {
        return Err(InvariantError::InconsistentForm(
            "pinned values contradict each other".into(),
        ));
    }
    Ok((0..d).map(|i| r.get(i, d)).collect())
}

/// `Ψ` of an element.
pub fn apply_psi(psi: &[Fq], x: &[Fq], t: &AlgebraTable) -> Fq {
    let f = t.field();
    psi.iter()
        .zip(x)
        .fold(Fq::ZERO, |acc, (&a, &b)| f.mul_add(a, b, acc))
}

fn gram_matrix(t: &AlgebraTable, psi: &[Fq]) -> Matrix {
    let f = t.field();
    let d = t.dim();
    let mut g = Matrix::zeros(f, d, d);
    for i in 0..d {
        for j in 0..d {
            let v = t
                .product(i, j)
                .iter()
                .fold(Fq::ZERO, |acc, &(k, c)| f.mul_add(psi[k], c, acc));
            g.set(i, j, v);
        }
    }
    g
}

/// Checks `Ψ(ab) = Ψ(ba)` and nondegeneracy.
pub fn form_validate(t: &AlgebraTable, psi: &[Fq]) -> Result<SymmetrizingForm, InvariantError> {
    let f = t.field();
    let g = gram_matrix(t, psi);
    let d = t.dim();
    let len = |i: usize| t.basis()[i].len();
    let mut witness: Option<(usize, usize, usize)> = None;
    for i in 0..d {
        for j in i + 1..d {
            if g.get(i, j) != g.get(j, i) {
                let key = len(i) + len(j);
                if witness.is_none_or(|(k, _, _)| key < k) {
                    witness = Some((key, i, j));
                }
            }
        }
    }
    if let Some((_, i, j)) = witness {
        // list the pair so that Ψ(ab) is the nonzero side where possible
        let (a, b) = if g.get(i, j).is_zero() {
            (j, i)
        } else {
            (i, j)
        };
        return Err(InvariantError::NotCentralForm {
            a: t.format_basis(a),
            b: t.format_basis(b),
            ab: f.format(g.get(a, b)),
            ba: f.format(g.get(b, a)),
        });
    }
    let form = BilinearForm { gram: g };
    if let Err(LinalgError::DegenerateForm { kernel }) = form.check_nondegenerate() {
        return Err(InvariantError::DegenerateForm {
            kernel: t.format_elem(&kernel),
        });
    }
    Ok(SymmetrizingForm {
        psi: psi.to_vec(),
        gram: form,
    })
}

/// Linear forms vanishing on `K(A)`, as a subspace of the dual.
pub fn central_forms(t: &AlgebraTable) -> Subspace {
    let k = commutator_subspace(t);
    if k.dim() == 0 {
        return Subspace::full(t.field(), t.dim());
    }
    kernel(&Matrix::from_rows(t.field(), t.dim(), k.basis()).unwrap())
}

fn is_nondegenerate(t: &AlgebraTable, psi: &[Fq]) -> bool {
    gram_matrix(t, psi).rank() == t.dim()
}

/// Finds a symmetrizing form: exhaustive over central forms when there are at
/// most 2^16 of them, otherwise seeded random sampling.
pub fn form_search(t: &AlgebraTable, seed: u64) -> Result<SymmetrizingForm, InvariantError> {
    let f = t.field();
    let cf = central_forms(t);
    let s = cf.dim();
    let q = f.order() as u128;
    let combine = |coeffs: &[Fq]| -> Vec<Fq> {
        let mut psi = vec![Fq::ZERO; t.dim()];
        for (c, row) in coeffs.iter().zip(cf.basis()) {
            for (x, &y) in psi.iter_mut().zip(row) {
                *x = f.mul_add(*c, y, *x);
            }
        }
        psi
    };
    let total = q.checked_pow(s as u32);
    if let Some(total) = total.filter(|&n| n <= SWEEP_LIMIT) {
        for code in 1..total {
            let mut c = code;
            let coeffs: Vec<Fq> = (0..s)
                .map(|_| {
                    let x = Fq((c % q) as u64);
                    c /= q;
                    x
                })
                .collect();
            let psi = combine(&coeffs);
            if is_nondegenerate(t, &psi) {
                return form_validate(t, &psi);
            }
        }
        return Err(InvariantError::NotSymmetricAlgebra);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..SEARCH_ATTEMPTS {
        let coeffs: Vec<Fq> = (0..s).map(|_| Fq(rng.gen_range(0..f.order()))).collect();
        let psi = combine(&coeffs);
        if is_nondegenerate(t, &psi) {
            return form_validate(t, &psi);
        }
    }
    Err(InvariantError::SearchExhausted {
        attempts: SEARCH_ATTEMPTS,
    })
}

/// `T_n(A) = {x : x^(p^n) ∈ K(A)}`, with `T_0 = K(A)`.
pub fn t_space(t: &AlgebraTable, n: u32) -> Subspace {
    let k = commutator_subspace(t);
    t_space_with(t, &k, n)
}

fn t_space_with(t: &AlgebraTable, k: &Subspace, n: u32) -> Subspace {
    if n == 0 {
        return k.clone();
    }
    let f = t.field();
    let images: Vec<Vec<Fq>> = (0..t.dim())
        .map(|i| k.quotient_coords(&t.pow_p_n(&t.unit(i), n)))
        .collect();
    let twist = f.p().pow(n);
    linalg::semilinear_kernel(f, &images, twist).expect("twist is a power of p")
}

/// The chain `Z(A) = T_0^⊥ ⊇ T_1^⊥ ⊇ ...` through its first repeat.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KuelshammerReport {
    /// `T_n^⊥` for `n = 0..=stable_index + 1` (or up to `n_max`).
    pub ideals: Vec<Subspace>,
    pub dims: Vec<usize>,
    /// `dim T_n^⊥ - dim T_{n+1}^⊥`.
    pub codims: Vec<usize>,
    /// First `n` with `T_n^⊥ = T_{n+1}^⊥`, if reached within `n_max`.
    pub stable_index: Option<usize>,
    pub socle_dim: usize,
}

impl KuelshammerReport {
    /// `(dim T_1^⊥ - dim soc, dim Z - dim T_1^⊥)`.
    pub fn socle_codims(&self) -> Option<(usize, usize)> {
        let t1 = *self.dims.get(1)?;
        Some((t1.checked_sub(self.socle_dim)?, self.dims[0] - t1))
    }
}

pub fn kuelshammer_sequence(
    t: &AlgebraTable,
    form: &SymmetrizingForm,
    n_max: usize,
) -> Result<KuelshammerReport, InvariantError> {
    let k = commutator_subspace(t);
    let z = center(t);
    let soc = socle(t)?;
    let mut ideals: Vec<Subspace> = Vec::new();
    let mut stable_index = None;
    for n in 0..=n_max {
        let tn = t_space_with(t, &k, n as u32);
        let perp = linalg::orthogonal_complement(&tn, &form.gram)?;
        if n == 0 && perp != z {
            return Err(InvariantError::CenterMismatch);
        }
        if let Some(prev) = ideals.last() {
            if !prev.contains_subspace(&perp)? {
                return Err(InvariantError::ChainNotDescending { level: n });
            }
        }
        check_ideal_of_center(t, &z, &perp, n)?;
        let repeat = ideals.last() == Some(&perp);
        ideals.push(perp);
        if repeat {
            stable_index = Some(n - 1);
            break;
        }
    }
    let dims: Vec<usize> = ideals.iter().map(Subspace::dim).collect();
    let codims = dims.windows(2).map(|w| w[0] - w[1]).collect();
    Ok(KuelshammerReport {
        ideals,
        dims,
        codims,
        stable_index,
        socle_dim: soc.dim(),
    })
}

fn check_ideal_of_center(
    t: &AlgebraTable,
    z: &Subspace,
    ideal: &Subspace,
    level: usize,
) -> Result<(), InvariantError> {
    if !z.contains_subspace(ideal)? {
        return Err(InvariantError::NotAnIdeal { level });
    }
    for a in z.basis() {
        for b in ideal.basis() {
            if !ideal.contains(&t.mul(a, b))? {
                return Err(InvariantError::NotAnIdeal { level });
            }
        }
    }
    Ok(())
}

/// `ξ_n(z)`: the unique `w` with `(w, x)^(p^n) = (z, x^(p^n))` for every basis element `x`.
pub fn xi_map(
    t: &AlgebraTable,
    form: &SymmetrizingForm,
    n: u32,
    z: &[Fq],
) -> Result<Elem, InvariantError> {
    let center = center(t);
    if !center.contains(z)? {
        return Err(InvariantError::NotCentralInput);
    }
    let f = t.field();
    let d = t.dim();
    let g = &form.gram.gram;
    // G w = r, with r_j the p^n-th root of Ψ(z b_j^(p^n))
    let mut rows: Vec<Vec<Fq>> = Vec::with_capacity(d);
    for j in 0..d {
        let xj = t.pow_p_n(&t.unit(j), n);
        let r = f.frobenius_inverse(apply_psi(&form.psi, &t.mul(z, &xj), t), n);
        let mut row: Vec<Fq> = (0..d).map(|i| g.get(j, i)).collect();
        row.push(r);
        rows.push(row);
    }
    let (r, pivots) = Matrix::from_rows(f, d + 1, &rows)?.rref();
    if pivots.len() != d || pivots.last() == Some(&d) {
        return Err(LinalgError::DegenerateForm { kernel: Vec::new() }.into());
    }
    let w: Elem = (0..d).map(|i| r.get(i, d)).collect();
    if !center.contains(&w)? {
        return Err(InvariantError::XiNotCentral { level: n as usize });
    }
    Ok(w)
}

/// Span of `ξ_n` over a basis of the center.
pub fn xi_image(
    t: &AlgebraTable,
    form: &SymmetrizingForm,
    n: u32,
) -> Result<Subspace, InvariantError> {
    let z = center(t);
    let images = z
        .basis()
        .iter()
        .map(|b| xi_map(t, form, n, b))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Subspace::span(t.field(), t.dim(), &images)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::presentation::{catalog_lookup, parse_presentation};
    use crate::rewrite::{build_table, complete_auto, MonomialOrder};

    fn table(p: &Presentation) -> AlgebraTable {
        build_table(&complete_auto(p, &MonomialOrder::declaration(p)).unwrap()).unwrap()
    }

    fn dual_numbers() -> AlgebraTable {
        table(&parse_presentation("field 2\nvertices e\narrow x: e -> e\nrel x.x\n").unwrap())
    }

    #[test]
    fn commutative_algebra() {
        let t = dual_numbers();
        assert_eq!(commutator_subspace(&t).dim(), 0);
        assert_eq!(center(&t).dim(), 2);
        let form = form_search(&t, 0).unwrap();
        assert!(!form.psi[1].is_zero());
    }

    #[test]
    fn semisimple_table() {
        let t = table(&parse_presentation("field 3\nvertices a b\n").unwrap());
        assert_eq!(radical(&t).dim(), 0);
        assert_eq!(socle(&t).unwrap(), Subspace::full(t.field(), 2));
    }

    #[test]
    fn upper_triangular_is_not_symmetric() {
        let t = table(&parse_presentation("field 2\nvertices a b\narrow x: a -> b\n").unwrap());
        assert_eq!(t.dim(), 3);
        assert_eq!(form_search(&t, 0), Err(InvariantError::NotSymmetricAlgebra));
        assert!(matches!(
            socle(&t),
            Err(InvariantError::SocleMismatch { .. })
        ));
    }

    #[test]
    fn lambda2_forms() {
        let f3 = Field::prime(3).unwrap();
        let l2 = catalog_lookup("Lambda2", &f3, &[]).unwrap();
        let l2p = catalog_lookup("Lambda2p", &f3, &[]).unwrap();
        let t = table(&l2);
        let tp = table(&l2p);
        let psi = form_from_presentation(&t, &l2).unwrap();
        form_validate(&t, &psi).unwrap();
        // Ψ' read against the Λ2 table
        let psi_p = form_from_presentation(&t, &l2p).unwrap();
        match form_validate(&t, &psi_p) {
            Err(InvariantError::NotCentralForm { a, b, ab, ba }) => {
                assert_eq!((a.as_str(), b.as_str()), ("beta", "gamma"));
                assert_eq!((ab.as_str(), ba.as_str()), ("1", "0"));
            }
            other => panic!("{other:?}"),
        }
        let psi_p = form_from_presentation(&tp, &l2p).unwrap();
        form_validate(&tp, &psi_p).unwrap();
    }

    #[test]
    fn inconsistent_form_lines() {
        let src = "field 2\nvertices e\narrow x: e -> e\nrel x.x\nform x = 1\nform x = 0\n";
        let p = parse_presentation(src).unwrap();
        let t = table(&p);
        assert!(matches!(
            form_from_presentation(&t, &p),
            Err(InvariantError::InconsistentForm(_))
        ));
    }

    #[test]
    fn xi_zero_and_identity() {
        let f3 = Field::prime(3).unwrap();
        let p = catalog_lookup("Lambda2", &f3, &[]).unwrap();
        let t = table(&p);
        let form = form_validate(&t, &form_from_presentation(&t, &p).unwrap()).unwrap();
        assert_eq!(xi_map(&t, &form, 1, &t.zero()).unwrap(), t.zero());
        for z in center(&t).basis() {
            assert_eq!(&xi_map(&t, &form, 0, z).unwrap(), z);
        }
        let alpha = t.path_element("alpha").unwrap();
        assert_eq!(
            xi_map(&t, &form, 1, &alpha),
            Err(InvariantError::NotCentralInput)
        );
    }
}
