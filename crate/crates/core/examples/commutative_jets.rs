//! Jet modules of the dual numbers and the factorization of differential
//! operators through them.
//!
//!     cargo run --example commutative_jets

use std::sync::Arc;

use nc_jets::catalog;
use nc_jets::diffop::{CommutativeMode, DefinitionTag, DiffOperators};
use nc_jets::hom::HomSpace;
use nc_jets::jets::{self, JetModule};

fn main() {
    let e = catalog::builtin("dual_numbers").unwrap();
    let p = Arc::new(e.regular);
    let h = HomSpace::endomorphisms(p.clone());
    let diff = DiffOperators::new(&h).unwrap().commutative(2, CommutativeMode::Inductive).unwrap();
    println!("Diff_r(A, A) dims for r = 0, 1, 2: {:?}", diff.dims());

    for k in 0..3 {
        let jet = JetModule::left(p.clone(), k).unwrap();
        println!("J^{k}(A): mu dim {}, jet dim {}", jet.mu().dim(), jet.dim());
        for delta in diff.stage(k).basis() {
            let fac = jets::factorize(p.clone(), p.clone(), delta, k).unwrap();
            assert_eq!(fac.map.mul(fac.jet.jet_map()).to_col_major(), *delta);
        }
        let rep = jets::representability_check(p.clone(), p.clone(), k, DefinitionTag::CommInductive).unwrap();
        println!("  Hom_A(J^{k}, A) dim {} vs Diff_{k} dim {}: {}", rep.hom_dim, rep.diff_dim, rep.verdict.as_str());
    }
}
