//! Compute every differential-operator filtration and compare them.
//!
//!     cargo run --example filtrations [ALGEBRA] [ORDER]

use std::sync::Arc;

use nc_jets::catalog;
use nc_jets::diffop::DiffOperators;
use nc_jets::hom::HomSpace;

fn main() {
    let mut args = std::env::args().skip(1);
    let name = args.next().unwrap_or_else(|| "t2".into());
    let order: usize = args.next().map(|s| s.parse().expect("order")).unwrap_or(2);

    let e = catalog::builtin(&name).expect("catalog name");
    let h = HomSpace::new(Arc::new(e.regular), Arc::new(e.free2)).unwrap();
    let ops = DiffOperators::new(&h).unwrap();
    let cmp = ops.compare(order).unwrap();

    println!("{name}: Hom(A, A^2) has dim {}", h.dim());
    for (tag, f) in cmp.tags.iter().zip(&cmp.filtrations) {
        println!("  {:<15} {:?}", tag.as_str(), f.dims());
    }
    println!("  {:<15} [_, {}]", "bar1", ops.bar1().unwrap().dim());
    for s in &cmp.stages {
        for (i, a) in cmp.tags.iter().enumerate() {
            for (j, b) in cmp.tags.iter().enumerate() {
                if i < j && !s.equal(i, j) {
                    println!("  stage {}: {a} and {b} differ", s.order);
                }
            }
        }
    }
    println!("all definitions agree: {}", cmp.all_equal());
}
