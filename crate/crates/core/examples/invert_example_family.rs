//! Builds the five-variable family whose inverse reaches degree 9, runs
//! the inversion algorithm, and prints the step-by-step trace and the
//! inverse.
//!
//! ```bash
//! cargo run --example invert_example_family
//! ```

use keller::druzkowski::example_family;
use keller::inversion::{invert, verify_inverse};
use keller::rational::{rat, Rational};
use num_traits::Zero;

fn main() {
    // L_1 = X2, L_2 = X3 (a2 = 1, b3 = 1, all other parameters zero)
    let mut params: [Rational; 7] = std::array::from_fn(|_| Rational::zero());
    params[0] = rat(1);
    params[4] = rat(1);
    let map = example_family(&params);

    println!("coefficient matrix:\n{}", map.to_matrix_text());
    println!("map:");
    for (i, f) in map.map().components().iter().enumerate() {
        println!("  F{} = {}", i + 1, f);
    }

    let result = invert(map.map()).expect("the family is cubic-linear");
    println!("\n{}", result.trace.to_report());

    let inverse = result.inverse.expect("nilpotent of index 3, so it inverts");
    println!("inverse:");
    for (i, g) in inverse.components().iter().enumerate() {
        println!("  G{} = {}", i + 1, g.to_string_with_var('Y'));
    }
    println!("deg G = {}", inverse.degree());

    assert!(verify_inverse(map.map(), &inverse));
    println!("\ncomposition check: G(F) = F(G) = Id, exactly");
}
