//! Regenerates `include/tgc.h` from the public extern "C" surface.

use std::path::Path;

fn main() {
    println!("cargo:rerun-if-changed=src/lib.rs");
    println!("cargo:rerun-if-changed=cbindgen.toml");
    let crate_dir = std::env::var("CARGO_MANIFEST_DIR").expect("cargo sets the manifest dir");
    let header = Path::new(&crate_dir).join("include").join("tgc.h");
    let bindings = cbindgen::generate(&crate_dir).expect("the C header generates");
    bindings.write_to_file(header);
}
