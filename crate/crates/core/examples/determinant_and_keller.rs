//! For maps `F = Id + H` with homogeneous `H`, `det JF = 1` is equivalent
//! to nilpotency of `JH`; this example computes both sides symbolically.
//!
//! ```bash
//! cargo run --example determinant_and_keller
//! ```

use keller::druzkowski::{generate_leveled, DruzkowskiMap, GeneratorConfig};
use keller::polymap::is_keller;
use keller::rational::rat;

fn main() {
    let config = GeneratorConfig::with_default_pool(4, 3, 5, rat(1))
        .expect("valid generator config");
    let map = generate_leveled(&config);

    let jf = map.map().jacobian();
    let det = jf.determinant().expect("within the cofactor dimension bound");
    println!("det JF = {det}");

    let jh = map.cubic_part().jacobian();
    println!("nilpotency index of JH: {}", jh.nilpotency_index(4));
    println!("is_keller: {}", is_keller(map.map()).unwrap());

    // a non-example: H_1 = X1^3 feeds back into its own variable
    let bad = DruzkowskiMap::from_matrix(vec![
        vec![rat(1), rat(0)],
        vec![rat(0), rat(0)],
    ])
    .unwrap();
    let det = bad.map().jacobian().determinant().unwrap();
    println!("\ncontrol with L_1 = X1:");
    println!("det JF = {det}");
    println!("is_keller: {}", is_keller(bad.map()).unwrap());
}
