//! The matrix file format: write a map, read it back bit-exactly, and
//! show the parse diagnostics on malformed input.
//!
//! ```bash
//! cargo run --example matrix_files
//! ```

use keller::druzkowski::{generate_square_zero, default_pool, DruzkowskiMap};

fn main() {
    let map = generate_square_zero(4, 7, &default_pool()).expect("default pool is negation-closed");
    let text = map.to_matrix_text();
    println!("rank-one map with A^2 = 0:\n\n{text}");

    let reloaded = DruzkowskiMap::parse_matrix_text(&text).expect("own output parses");
    assert_eq!(reloaded, map);
    assert_eq!(reloaded.to_matrix_text(), text);
    println!("write -> parse -> write is byte-identical");

    let bad = "dim 2\nentries\n0 1/0\n0 0\n";
    match DruzkowskiMap::parse_matrix_text(bad) {
        Err(e) => println!("\nmalformed input rejected: {e}"),
        Ok(_) => unreachable!("1/0 must not parse"),
    }
}
