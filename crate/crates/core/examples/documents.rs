//! Export catalog entries as JSON documents and read them back.
//!
//!     cargo run --example documents [OUT_DIR]

use std::path::PathBuf;

use nc_jets::catalog;
use nc_jets::cli::documents::{self, AlgebraDocument, ModuleDocument};

fn main() {
    let dir = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(std::env::temp_dir);
    let e = catalog::builtin("quaternions").unwrap();

    let doc = AlgebraDocument::from_algebra(&e.algebra);
    let path = dir.join("quaternions.json");
    documents::write(&path, &documents::to_pretty_json(&doc)).unwrap();
    println!("wrote {} (sha256 {})", path.display(), documents::digest(&doc));

    let (back, algebra) = documents::load_algebra(&path).unwrap();
    assert_eq!(back, doc);
    assert_eq!(algebra, *e.algebra);
    println!("reloaded {}: dim {}, commutative {}", algebra.name(), algebra.dim(), algebra.is_commutative());

    let module = ModuleDocument::from_bimodule(&e.free2);
    println!("free rank-2 module document: {} bytes", documents::to_pretty_json(&module).len());
}
