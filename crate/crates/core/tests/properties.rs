//! Algebraic identities checked on every catalog algebra and on random data.

mod common;

use common::{catalog, small, span, Fixture};
use kuelsh::field::Fq;
use kuelsh::hochschild::{check_complex, hh_dim, Method};
use kuelsh::invariants::{
    apply_psi, center, commutator_subspace, kuelshammer_sequence, socle, t_space, xi_image,
    DEFAULT_N_MAX,
};
use kuelsh::linalg::{orthogonal_complement, Subspace};
use kuelsh::presentation::Path;
use kuelsh::rewrite::{AlgebraTable, PathPoly, ReductionStrategy};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::sync::OnceLock;

fn fixtures() -> &'static [Fixture] {
    static CELL: OnceLock<Vec<Fixture>> = OnceLock::new();
    CELL.get_or_init(|| catalog().into_iter().chain(small()).collect())
}

fn random_elem(t: &AlgebraTable, rng: &mut ChaCha8Rng) -> Vec<Fq> {
    let q = t.field().order();
    (0..t.dim()).map(|_| Fq(rng.gen_range(0..q))).collect()
}

/// Random path by walking the (relabelled) quiver.
fn random_path(t: &AlgebraTable, rng: &mut ChaCha8Rng, max_len: usize) -> Path {
    let q = t.quiver();
    let mut v = rng.gen_range(0..q.num_vertices());
    let mut arrows = Vec::new();
    for _ in 0..rng.gen_range(0..=max_len) {
        let out: Vec<usize> = (0..q.num_arrows())
            .filter(|&a| q.arrows[a].source == v)
            .collect();
        if out.is_empty() {
            break;
        }
        let a = out[rng.gen_range(0..out.len())];
        arrows.push(a);
        v = q.arrows[a].target;
    }
    if arrows.is_empty() {
        Path::trivial(v)
    } else {
        Path::from_arrows(q, &arrows).unwrap()
    }
}

fn random_poly(t: &AlgebraTable, rng: &mut ChaCha8Rng) -> PathPoly {
    let f = t.field();
    let terms: Vec<(Fq, Path)> = (0..rng.gen_range(1..=4))
        .map(|_| (Fq(rng.gen_range(1..f.order())), random_path(t, rng, 7)))
        .collect();
    PathPoly::from_terms(f, terms)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn reduction_is_confluent(idx in 0usize..19, seed in any::<u64>()) {
        let fx = &fixtures()[idx % fixtures().len()];
        let t = &fx.table;
        let sys = t.system();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_poly(t, &mut rng);
        let a = sys.normal_form_with(&x, ReductionStrategy::LeftmostLargest);
        let b = sys.normal_form_with(&x, ReductionStrategy::RightmostSmallest);
        prop_assert_eq!(&a, &b, "{}: {}", fx.label, x.format(t.field(), t.quiver()));
        prop_assert_eq!(&sys.normal_form(&a), &a);
        for (p, _) in a.terms() {
            prop_assert!(sys.is_irreducible(p));
        }
    }

    #[test]
    fn normal_forms_multiply_like_the_table(idx in 0usize..19, seed in any::<u64>()) {
        let fx = &fixtures()[idx % fixtures().len()];
        let t = &fx.table;
        let f = t.field();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (u, v) = (random_path(t, &mut rng, 5), random_path(t, &mut rng, 5));
        let lhs = match u.compose(&v) {
            Some(uv) => t.element(&PathPoly::monomial(Fq::ONE, uv)),
            None => t.zero(),
        };
        let rhs = t.mul(
            &t.element(&PathPoly::monomial(Fq::ONE, u)),
            &t.element(&PathPoly::monomial(Fq::ONE, v)),
        );
        prop_assert_eq!(lhs, rhs, "{} over {}", fx.label, f.name());
    }

    #[test]
    fn grassmann_identity(idx in 0usize..19, seed in any::<u64>(), a in 0usize..6, b in 0usize..6) {
        let t = &fixtures()[idx % fixtures().len()].table;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        // mix random vectors with structured ones so intersections are nontrivial
        let z = center(t);
        let mut us: Vec<Vec<Fq>> = (0..a).map(|_| random_elem(t, &mut rng)).collect();
        us.extend(z.basis().iter().take(2).cloned());
        let mut ws: Vec<Vec<Fq>> = (0..b).map(|_| random_elem(t, &mut rng)).collect();
        ws.extend(z.basis().iter().skip(1).take(2).cloned());
        let (u, w) = (span(t, &us), span(t, &ws));
        let s = u.sum(&w).unwrap();
        let i = u.intersect(&w).unwrap();
        prop_assert_eq!(s.dim() + i.dim(), u.dim() + w.dim());
        prop_assert!(s.contains_subspace(&u).unwrap() && u.contains_subspace(&i).unwrap());
    }

    #[test]
    fn double_orthogonal_complement(idx in 0usize..19, seed in any::<u64>(), n in 0usize..8) {
        let fx = &fixtures()[idx % fixtures().len()];
        let Some(form) = fx.form() else { return Ok(()) };
        let t = &fx.table;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let w = span(t, &(0..n).map(|_| random_elem(t, &mut rng)).collect::<Vec<_>>());
        let perp = orthogonal_complement(&w, &form.gram).unwrap();
        prop_assert_eq!(perp.dim() + w.dim(), t.dim());
        prop_assert_eq!(orthogonal_complement(&perp, &form.gram).unwrap(), w);
    }
}

#[test]
fn frobenius_is_additive_modulo_commutators() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for fx in fixtures() {
        let t = &fx.table;
        let k = commutator_subspace(t);
        for _ in 0..200 {
            let (x, y) = (random_elem(t, &mut rng), random_elem(t, &mut rng));
            let d = t.sub(
                &t.sub(&t.pow_p_n(&t.add(&x, &y), 1), &t.pow_p_n(&x, 1)),
                &t.pow_p_n(&y, 1),
            );
            assert!(k.contains(&d).unwrap(), "{}", fx.label);
        }
    }
}

#[test]
fn forms_vanish_on_commutators_and_complement_is_center() {
    for fx in fixtures() {
        let Some(form) = fx.form() else { continue };
        let t = &fx.table;
        let k = commutator_subspace(t);
        for b in k.basis() {
            assert!(apply_psi(&form.psi, b, t).is_zero(), "{}", fx.label);
        }
        assert!(form.gram.gram.is_symmetric());
        assert_eq!(
            orthogonal_complement(&k, &form.gram).unwrap(),
            center(t),
            "{}",
            fx.label
        );
    }
}

#[test]
fn kuelshammer_chain_descends_through_ideals_of_the_center() {
    for fx in fixtures() {
        let Some(form) = fx.form() else { continue };
        let t = &fx.table;
        let z = center(t);
        let rep = kuelshammer_sequence(t, &form, DEFAULT_N_MAX).unwrap();
        assert!(
            rep.stable_index.is_some(),
            "{}: chain did not stabilise",
            fx.label
        );
        assert_eq!(rep.ideals[0], z);
        for w in rep.ideals.windows(2) {
            assert!(w[0].contains_subspace(&w[1]).unwrap(), "{}", fx.label);
        }
        for ideal in &rep.ideals {
            for a in z.basis() {
                for b in ideal.basis() {
                    assert!(ideal.contains(&t.mul(a, b)).unwrap(), "{}", fx.label);
                }
            }
        }
        let s = socle(t).unwrap();
        assert!(
            rep.ideals[1].contains_subspace(&s).unwrap(),
            "{}: soc not in T_1^perp",
            fx.label
        );
        // T_n^⊥ is the orthogonal complement of t_space
        for (n, ideal) in rep.ideals.iter().enumerate().skip(1) {
            let perp = orthogonal_complement(&t_space(t, n as u32), &form.gram).unwrap();
            assert_eq!(&perp, ideal, "{} n={n}", fx.label);
        }
    }
}

#[test]
fn xi_image_is_kuelshammer_ideal() {
    for fx in fixtures() {
        let Some(form) = fx.form() else { continue };
        let t = &fx.table;
        for n in 1..=3u32 {
            let perp = orthogonal_complement(&t_space(t, n), &form.gram).unwrap();
            assert_eq!(xi_image(t, &form, n).unwrap(), perp, "{} n={n}", fx.label);
        }
    }
}

#[test]
fn hochschild_differentials_compose_to_zero() {
    for fx in fixtures() {
        check_complex(&fx.table, Method::Relative).unwrap_or_else(|e| panic!("{}: {e}", fx.label));
    }
}

#[test]
fn hh0_is_the_center() {
    for fx in fixtures() {
        assert_eq!(
            hh_dim(&fx.table, 0, Method::Relative).unwrap(),
            center(&fx.table).dim(),
            "{}",
            fx.label
        );
    }
}

#[test]
fn subspace_identities_on_fixed_data() {
    let fx = &fixtures()[0];
    let t = &fx.table;
    let z = center(t);
    let k = commutator_subspace(t);
    // for a symmetric algebra dim Z + dim K = dim A
    assert_eq!(z.dim() + k.dim(), t.dim());
    assert_eq!(Subspace::zero(t.field(), t.dim()).sum(&z).unwrap(), z);
    assert_eq!(Subspace::full(t.field(), t.dim()).intersect(&k).unwrap(), k);
}
