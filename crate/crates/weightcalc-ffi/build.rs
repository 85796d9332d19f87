fn main() {
    let crate_dir = std::env::var("CARGO_MANIFEST_DIR").expect("set by cargo");
    println!("cargo:rerun-if-changed=src/lib.rs");
    println!("cargo:rerun-if-changed=cbindgen.toml");
    let config = cbindgen::Config::from_file(format!("{crate_dir}/cbindgen.toml")).expect("valid cbindgen.toml");
    match cbindgen::generate_with_config(&crate_dir, config) {
        Ok(bindings) => {
            bindings.write_to_file(format!("{crate_dir}/include/weightcalc.h"));
        }
        // Keep building when the header cannot be regenerated (e.g. mid-edit syntax errors);
        // the compiler reports the real problem.
        Err(e) => println!("cargo:warning=cbindgen: {e}"),
    }
}
