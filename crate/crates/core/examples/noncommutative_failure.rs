//! Over 2x2 matrices left jets stop representing differential operators;
//! the witness search shows where the chain rule breaks.
//!
//!     cargo run --example noncommutative_failure

use std::sync::Arc;

use nc_jets::catalog;
use nc_jets::diffop::DefinitionTag;
use nc_jets::jets::{self, JetModule};
use nc_jets::linalg::format_vector;

fn main() {
    for name in ["m2", "t2"] {
        let e = catalog::builtin(name).unwrap();
        let a = e.algebra.clone();
        let p = Arc::new(e.regular);

        let dims: Vec<usize> = (0..3).map(|k| JetModule::left(p.clone(), k).unwrap().dim()).collect();
        println!("{name}: left jet dims for k = 0, 1, 2: {dims:?}");

        match jets::cc3_witness_search(p.clone(), p.clone(), 1).unwrap() {
            Some(w) => {
                let b: Vec<&str> = w.b_tuple.iter().map(|&i| a.basis_names()[i].as_str()).collect();
                println!(
                    "  chain rule fails for b = ({}), p = {}: residual {:?}",
                    b.join(", "),
                    a.basis_names()[w.p_index],
                    format_vector(&w.residual)
                );
            }
            None => println!("  no witness"),
        }

        let rep = jets::representability_check(p.clone(), p, 1, DefinitionTag::LeftCenter).unwrap();
        println!(
            "  left-center order 1: hom dim {}, diff dim {}, verdict {}",
            rep.hom_dim,
            rep.diff_dim,
            rep.verdict.as_str()
        );
    }
}
