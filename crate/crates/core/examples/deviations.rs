//! The deviation operators on Hom_K(P, Q): `delta_a Φ = aΦ - Φ(a·)` and
//! `delta_bar_a Φ = Φ(·)a - Φ(·a)`.
//!
//!     cargo run --example deviations

use std::sync::Arc;

use nc_jets::catalog;
use nc_jets::hom::HomSpace;
use nc_jets::linalg::{FieldSpec, Matrix};

fn main() {
    let e = catalog::builtin("m2").unwrap();
    let a = e.algebra.clone();
    let h = HomSpace::endomorphisms(Arc::new(e.regular));

    let transpose =
        Matrix::from_i64(FieldSpec::Rationals, &[&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 1, 0, 0], &[0, 0, 0, 1]]);
    let phi = h.element(&transpose);
    for (i, name) in a.basis_names().iter().enumerate() {
        let d = h.as_map(&h.delta(&a.basis_element(i)).apply(&phi));
        let images: Vec<String> = (0..4).map(|j| a.format_element(&d.column(j))).collect();
        println!("delta_{name}(transpose) sends basis to [{}]", images.join(", "));
    }

    println!("hom_A(M2, M2) dim {}, bimodule maps dim {}", h.hom_a().dim(), h.hom_aa().dim());
    let commute = h.delta_ops().iter().all(|d| h.delta_bar_ops().iter().all(|b| d.mul(b) == b.mul(d)));
    println!("delta and delta_bar commute: {commute}");
}
