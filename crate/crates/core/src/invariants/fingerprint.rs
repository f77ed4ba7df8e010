use serde_json::{json, Value};

use super::{
    center, commutator_subspace, kuelshammer_sequence, socle, InvariantError, SymmetrizingForm,
};
use crate::rewrite::{dim_and_cartan, AlgebraTable};

/// Computed invariants of one algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fingerprint {
    pub num_simples: usize,
    pub dim: usize,
    pub center_dim: usize,
    pub commutator_dim: usize,
    pub socle_dim: usize,
    pub cartan: Vec<Vec<usize>>,
    pub cartan_det: u128,
    pub kuelshammer_dims: Option<Vec<usize>>,
    pub kuelshammer_codims: Option<Vec<usize>>,
    pub kuelshammer_stable_index: Option<usize>,
    /// `dim HH^0, HH^1, HH^2`, when computed.
    pub hh: Option<[usize; 3]>,
}

pub fn fingerprint(
    t: &AlgebraTable,
    form: Option<&SymmetrizingForm>,
    n_max: usize,
) -> Result<Fingerprint, InvariantError> {
    let (dim, cartan) = dim_and_cartan(t);
    let k = match form {
        Some(f) => Some(kuelshammer_sequence(t, f, n_max)?),
        None => None,
    };
    Ok(Fingerprint {
        num_simples: cartan.len(),
        dim,
        center_dim: center(t).dim(),
        commutator_dim: commutator_subspace(t).dim(),
        socle_dim: socle(t)?.dim(),
        cartan_det: abs_det(&cartan),
        kuelshammer_dims: k.as_ref().map(|k| k.dims.clone()),
        kuelshammer_codims: k.as_ref().map(|k| k.codims.clone()),
        kuelshammer_stable_index: k.as_ref().and_then(|k| k.stable_index),
        cartan,
        hh: None,
    })
}

/// `|det C|` by fraction-free elimination.
fn abs_det(c: &[Vec<usize>]) -> u128 {
    let n = c.len();
    let mut m: Vec<Vec<i128>> = c
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&i| m[i][k] != 0) {
                Some(i) => {
                    m.swap(i, k);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    if n == 0 {
        return 1;
    }
    (sign * m[n - 1][n - 1]).unsigned_abs()
}

/// One compared quantity.
#[derive(Debug, Clone, PartialEq)]
pub struct InvariantRow {
    pub name: &'static str,
    pub a: Value,
    pub b: Value,
    /// Whether the quantity is invariant under derived equivalence.
    pub derived: bool,
}

impl InvariantRow {
    pub fn agrees(&self) -> bool {
        self.a == self.b
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Comparison {
    pub rows: Vec<InvariantRow>,
    pub witness: Option<&'static str>,
}

impl Comparison {
    pub fn verdict(&self) -> String {
        match self.witness {
            Some(w) => format!("NOT DERIVED EQUIVALENT (witness: {w})"),
            None => "INDISTINGUISHABLE BY COMPUTED INVARIANTS".to_string(),
        }
    }
}

/// Compares fingerprints; the witness is the first differing derived
/// invariant in the listed order. Dimension, Cartan matrix and socle
/// dimension are reported but never used as witnesses.
pub fn compare(a: &Fingerprint, b: &Fingerprint) -> Comparison {
    let mut rows = vec![
        row(
            "num_simples",
            json!(a.num_simples),
            json!(b.num_simples),
            true,
        ),
        row("center_dim", json!(a.center_dim), json!(b.center_dim), true),
    ];
    if a.kuelshammer_codims.is_some() && b.kuelshammer_codims.is_some() {
        rows.push(row(
            "kuelshammer_codims",
            json!(a.kuelshammer_codims),
            json!(b.kuelshammer_codims),
            true,
        ));
    }
    if let (Some(x), Some(y)) = (a.hh, b.hh) {
        rows.push(row("hh2_dim", json!(x[2]), json!(y[2]), true));
        rows.push(row("hh1_dim", json!(x[1]), json!(y[1]), true));
        rows.push(row("hh0_dim", json!(x[0]), json!(y[0]), true));
    }
    rows.push(row(
        "cartan_det",
        json!(a.cartan_det),
        json!(b.cartan_det),
        true,
    ));
    rows.push(row("dim", json!(a.dim), json!(b.dim), false));
    rows.push(row("cartan", json!(a.cartan), json!(b.cartan), false));
    rows.push(row(
        "socle_dim",
        json!(a.socle_dim),
        json!(b.socle_dim),
        false,
    ));
    rows.push(row(
        "commutator_dim",
        json!(a.commutator_dim),
        json!(b.commutator_dim),
        false,
    ));
    let witness = rows
        .iter()
        .find(|r| r.derived && !r.agrees())
        .map(|r| r.name);
    Comparison { rows, witness }
}

fn row(name: &'static str, a: Value, b: Value, derived: bool) -> InvariantRow {
    InvariantRow {
        name,
        a,
        b,
        derived,
    }
}
