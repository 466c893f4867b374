//! Runs the nilpotency-derived identity checks on an instance where they
//! must hold, and on a non-nilpotent control where they must fail with a
//! printed residual.
//!
//! ```bash
//! cargo run --example identity_checks
//! ```

use keller::druzkowski::{generate_leveled, DruzkowskiMap, GeneratorConfig};
use keller::identities::check_all;
use keller::rational::{frac, rat};

fn main() {
    let config = GeneratorConfig::with_default_pool(5, 3, 7, frac(2, 3))
        .expect("valid generator config");
    let map = generate_leveled(&config);
    println!("leveled instance (JH nilpotent of index <= 3):");
    println!("{}", check_all(&map));

    // d = 1 with a_11 = 1: JH = (3 X1^2) is not nilpotent
    let control = DruzkowskiMap::from_matrix(vec![vec![rat(1)]]).unwrap();
    println!("non-nilpotent control:");
    println!("{}", check_all(&control));
}
