//! Build an algebra from structure constants, then inspect its center and
//! derivations.
//!
//!     cargo run --example algebras

use nc_jets::algebra::{Algebra, RawAlgebra};
use nc_jets::catalog;
use nc_jets::linalg::{FieldSpec, Matrix};

fn main() {
    let q = FieldSpec::Rationals;

    // Q[x]/(x^2 - 2) with basis 1, x
    let v = |a: i64, b: i64| vec![q.from_i64(a), q.from_i64(b)];
    let raw = RawAlgebra {
        name: "sqrt2".into(),
        field: q,
        basis: vec!["1".into(), "x".into()],
        unit: v(1, 0),
        mul: vec![vec![v(1, 0), v(0, 1)], vec![v(0, 1), v(2, 0)]],
    };
    let sqrt2 = Algebra::new(raw).expect("valid algebra");
    println!("{}: dim {}, commutative {}", sqrt2.name(), sqrt2.dim(), sqrt2.is_commutative());
    println!("  derivations: {} (a field extension has none)", sqrt2.derivations().dim());

    for name in ["m2", "t2", "quaternions", "trunc3"] {
        let a = catalog::algebra(name).unwrap();
        let center: Vec<String> = a.center().basis().iter().map(|z| a.format_element(z)).collect();
        println!("{name}: center = span{{{}}}, derivations dim {}", center.join(", "), a.derivations().dim());
        let n = a.dim();
        for d in a.derivations().basis() {
            let m = Matrix::from_col_major(q, n, n, d);
            let images: Vec<String> =
                (0..n).map(|i| format!("{} -> {}", a.basis_names()[i], a.format_element(&m.column(i)))).collect();
            println!("    {}", images.join(", "));
        }
    }

    // a broken table is rejected with the offending triple
    let mut raw = catalog::algebra("m2").unwrap().to_raw();
    raw.mul[1][2] = vec![q.zero(); 4];
    match Algebra::new(raw) {
        Ok(_) => println!("unexpectedly valid"),
        Err(e) => println!("modified m2 rejected: {e}"),
    }
}
