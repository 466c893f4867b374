//! Generates a seeded leveled instance, measures the nilpotency index of
//! its Jacobian, inverts it, and verifies the inverse by composition.
//!
//! ```bash
//! cargo run --example generate_and_invert
//! ```

use keller::druzkowski::{generate_leveled, GeneratorConfig};
use keller::inversion::{invert, verify_inverse};
use keller::rational::frac;

fn main() {
    let config = GeneratorConfig::with_default_pool(5, 3, 42, frac(1, 2))
        .expect("valid generator config");
    let map = generate_leveled(&config);
    println!(
        "seed {} in dimension {} with {} levels:\n\n{}",
        config.seed, config.dimension, config.levels,
        map.to_matrix_text()
    );

    let jh = map.cubic_part().jacobian();
    println!("nilpotency index of JH: {}", jh.nilpotency_index(config.dimension));

    let result = invert(map.map()).expect("cubic-linear form");
    let inverse = result.inverse.expect("leveled instances always invert");
    for (i, g) in inverse.components().iter().enumerate() {
        println!("G{} = {}", i + 1, g.to_string_with_var('Y'));
    }
    println!("deg G = {}", inverse.degree());

    assert!(verify_inverse(map.map(), &inverse));
    println!("composition check passed");
}
