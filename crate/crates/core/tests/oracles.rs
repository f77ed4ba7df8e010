//! Library results checked against independent brute-force computations.

mod common;

use common::{brute_t_space, catalog, small, table_product, FreeOracle};
use kuelsh::field::Fq;
use kuelsh::hochschild::{hh_dims, Method, BAR_MAX_DIM};
use kuelsh::invariants::t_space;
use kuelsh::linalg::{semilinear_kernel, Subspace};

const T_BUDGET: u64 = 1 << 20;

#[test]
fn structure_constants_match_free_algebra_oracle() {
    for fx in catalog().into_iter().chain(small()) {
        let t = &fx.table;
        let names: Vec<String> = (0..t.dim()).map(|i| t.format_basis(i)).collect();
        let oracle = FreeOracle::new(&fx.presentation, &names, 16)
            .unwrap_or_else(|| panic!("{}: truncation did not stabilise", fx.label));
        assert_eq!(oracle.dim, t.dim(), "{}", fx.label);
        for i in 0..t.dim() {
            for j in 0..t.dim() {
                assert_eq!(
                    oracle.product(&fx.presentation, &names[i], &names[j]),
                    table_product(t, i, j),
                    "{}: {} * {}",
                    fx.label,
                    names[i],
                    names[j]
                );
            }
        }
    }
}

#[test]
fn t_space_matches_enumeration() {
    let mut checked = 0;
    for fx in catalog().into_iter().chain(small()) {
        for n in 1..=2 {
            if let Some(brute) = brute_t_space(&fx.table, n, T_BUDGET) {
                assert_eq!(t_space(&fx.table, n), brute, "{} n={n}", fx.label);
                checked += 1;
            }
        }
    }
    assert!(checked >= 30, "only {checked} cases within budget");
}

#[test]
fn relative_complex_matches_bar_complex() {
    let mut checked = 0;
    for fx in catalog().into_iter().chain(small()) {
        if fx.table.dim() > BAR_MAX_DIM {
            continue;
        }
        assert_eq!(
            hh_dims(&fx.table, Method::Relative).unwrap(),
            hh_dims(&fx.table, Method::Bar).unwrap(),
            "{}",
            fx.label
        );
        checked += 1;
    }
    assert!(checked >= 10);
}

#[test]
fn hh_of_dual_numbers_from_first_principles() {
    // K[x]/(x^2): derivations are x -> a + bx with 2ax = 0, none inner;
    // HH^2 = A / (2x) by the periodic resolution
    for (p, hh) in [(2u64, [2usize, 2, 2]), (3, [2, 1, 1]), (5, [2, 1, 1])] {
        let fx = common::from_text(
            "dual",
            &format!("field {p}\nvertices e\narrow x: e -> e\nrel x.x\n"),
        );
        assert_eq!(hh_dims(&fx.table, Method::Relative).unwrap(), hh, "p={p}");
    }
}

#[test]
fn semilinear_kernel_matches_enumeration() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    for (p, k) in [(2u64, 1u32), (2, 2), (3, 1), (2, 3), (3, 2)] {
        let f = kuelsh::field::Field::new(p, k).unwrap();
        for twist_exp in 0..k.max(2) {
            let twist = p.pow(twist_exp);
            for _ in 0..5 {
                let n = rng.gen_range(1..=4);
                let m = rng.gen_range(1..=4);
                let vectors: Vec<Vec<Fq>> = (0..n)
                    .map(|_| (0..m).map(|_| Fq(rng.gen_range(0..f.order()))).collect())
                    .collect();
                // x with Σ x_i^twist v_i = 0
                let mut sols = Vec::new();
                for x in common::all_vectors(&f, n) {
                    let mut acc = vec![Fq::ZERO; m];
                    for (xi, v) in x.iter().zip(&vectors) {
                        let c = f.pow(*xi, twist as u128);
                        for (a, &b) in acc.iter_mut().zip(v) {
                            *a = f.mul_add(c, b, *a);
                        }
                    }
                    if acc.iter().all(|c| c.is_zero()) {
                        sols.push(x);
                    }
                }
                let got = semilinear_kernel(&f, &vectors, twist).unwrap();
                let brute = Subspace::span(&f, n, &sols).unwrap();
                assert_eq!(got, brute, "F_{} twist {twist}", f.name());
                assert_eq!(sols.len() as u64, f.order().pow(got.dim() as u32));
            }
        }
    }
}
