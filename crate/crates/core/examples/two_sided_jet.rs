//! The first-order two-sided jet `(A ⊗ P ⊗ A) / mu^1` represents the
//! operators killed by every `delta_bar_c ∘ delta_b`.
//!
//!     cargo run --example two_sided_jet

use std::sync::Arc;

use nc_jets::catalog;
use nc_jets::jets::{self, JetModule};

fn main() {
    println!("{:<13} {:>8} {:>8} {:>10} {:>10}  verdict", "algebra", "ambient", "J^1", "maps", "operators");
    for name in catalog::NAMES {
        let p = Arc::new(catalog::builtin(name).unwrap().regular);
        let jet = JetModule::two_sided_first(p.clone()).unwrap();
        let rep = jets::representability_bar1(p.clone(), p).unwrap();
        println!(
            "{:<13} {:>8} {:>8} {:>10} {:>10}  {}",
            name,
            jet.ambient_dim(),
            jet.dim(),
            rep.hom_dim,
            rep.diff_dim,
            rep.verdict.as_str()
        );
    }
}
