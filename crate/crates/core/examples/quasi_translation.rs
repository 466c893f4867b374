//! When `(JH)^2 = 0` the map is a quasi-translation: the inverse is
//! simply `Id - H`, the second sequence step vanishes for every
//! coordinate, and `JH * H = 0` as a symbolic identity.
//!
//! ```bash
//! cargo run --example quasi_translation
//! ```

use keller::druzkowski::{generate_leveled, GeneratorConfig};
use keller::inversion::{invert, p_sequence};
use keller::polymap::PolyMap;
use keller::rational::frac;

fn main() {
    let config = GeneratorConfig::with_default_pool(4, 2, 3, frac(2, 3))
        .expect("valid generator config");
    let map = generate_leveled(&config);
    let h = map.cubic_part();
    println!("two-level instance:\n\n{}", map.to_matrix_text());

    for i in 0..4 {
        let seq = p_sequence(map.map(), i, 3);
        println!(
            "coordinate {}: P_1 = {}, sequence length {}",
            i + 1,
            seq[1],
            seq.len()
        );
    }

    let inverse = invert(map.map()).unwrap().inverse.expect("quasi-translations invert");
    assert_eq!(inverse, PolyMap::identity(4).sub(h));
    println!("\ninverse equals Id - H exactly");

    assert!(h.jacobian().mul_map(h).is_zero());
    println!("JH * H = 0 symbolically");
}
