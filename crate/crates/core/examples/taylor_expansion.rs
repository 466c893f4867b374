//! Expands `p(X + H) - p(X)` into its exact Taylor components and shows
//! the degree ladder they follow for cubic-linear maps.
//!
//! ```bash
//! cargo run --example taylor_expansion
//! ```

use keller::druzkowski::example_family;
use keller::inversion::taylor_components;
use keller::poly::Polynomial;
use keller::rational::{frac, rat, Rational};
use num_traits::Zero;

fn main() {
    let mut params: [Rational; 7] = std::array::from_fn(|_| Rational::zero());
    params[0] = rat(1);
    params[2] = frac(1, 2);
    params[4] = rat(1);
    let map = example_family(&params);
    let h = map.cubic_part();

    // the components of H_1(X + H) - H_1 are the Q_2k, of degrees 5, 7, 9
    let p = h.component(0);
    println!("p = H_1 = {p}");
    let comps = taylor_components(p, h);
    for (k, q) in comps.iter().enumerate() {
        println!("order {}: degree {} with {} terms", k + 1, q.degree(), q.term_count());
    }

    // the components always sum to p(X + H) - p(X), exactly
    let d = h.dimension();
    let shifted: Vec<Polynomial> = (0..d)
        .map(|k| &Polynomial::var(d, k) + h.component(k))
        .collect();
    let mut sum = Polynomial::zero(d);
    for q in &comps {
        sum = &sum + q;
    }
    assert_eq!(sum, &p.compose(&shifted) - p);
    println!("telescoping check passed: components sum to p(X+H) - p(X)");
}
