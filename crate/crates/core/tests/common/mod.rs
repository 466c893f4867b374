//! Shared builders for the integration suites: the five-variable example
//! family, its closed-form sequence oracles (built directly from the
//! displayed formulas, independent of the inversion recursion), and
//! seeded random inputs.
#![allow(dead_code)]

use keller::druzkowski::{example_family, DruzkowskiMap};
use keller::poly::Polynomial;
use keller::polymap::PolyMap;
use keller::rational::{frac, rat, Rational};
use keller::rng::SplitMix64;
use num_traits::Zero;

/// `a2 = 1, b3 = 1`, everything else zero: the canonical golden instance.
pub fn golden_params() -> [Rational; 7] {
    let mut p: [Rational; 7] = std::array::from_fn(|_| Rational::zero());
    p[0] = rat(1);
    p[4] = rat(1);
    p
}

pub fn golden_map() -> DruzkowskiMap {
    example_family(&golden_params())
}

/// Small rationals for random parameters.
fn draw(rng: &mut SplitMix64) -> Rational {
    const POOL: [(i64, i64); 9] = [
        (0, 1),
        (1, 1),
        (-1, 1),
        (2, 1),
        (-2, 1),
        (1, 2),
        (-1, 2),
        (1, 3),
        (2, 3),
    ];
    let (n, d) = POOL[rng.next_below(POOL.len())];
    frac(n, d)
}

fn draw_nonzero(rng: &mut SplitMix64) -> Rational {
    loop {
        let r = draw(rng);
        if !r.is_zero() {
            return r;
        }
    }
}

/// Random parameter tuple with `a2 != 0` and `L_2 != 0`.
pub fn random_params(rng: &mut SplitMix64) -> [Rational; 7] {
    let mut p: [Rational; 7] = std::array::from_fn(|_| draw(rng));
    p[0] = draw_nonzero(rng);
    if p[4].is_zero() && p[5].is_zero() && p[6].is_zero() {
        p[4] = draw_nonzero(rng);
    }
    p
}

fn a2(map: &DruzkowskiMap) -> Rational {
    map.coefficient(0, 1).clone()
}

/// Oracle `P_2^1 = 3 a2 L1^2 L2^3 + 3 a2^2 L1 L2^6 + a2^3 L2^9`.
pub fn expected_p2_1(map: &DruzkowskiMap) -> Polynomial {
    let a = a2(map);
    let l1 = map.linear_form(0);
    let l2 = map.linear_form(1);
    let first = (&l1.pow(2) * &l2.pow(3)).scale(&(&a * rat(3)));
    let second = (l1 * &l2.pow(6)).scale(&(&(&a * &a) * rat(3)));
    let third = l2.pow(9).scale(&(&(&a * &a) * &a));
    &(&first + &second) + &third
}

/// Oracle `P_3^1 = 6 a2^2 L1 L2^6 + 6 a2^3 L2^9`.
pub fn expected_p3_1(map: &DruzkowskiMap) -> Polynomial {
    let a = a2(map);
    let l1 = map.linear_form(0);
    let l2 = map.linear_form(1);
    let first = (l1 * &l2.pow(6)).scale(&(&(&a * &a) * rat(6)));
    let second = l2.pow(9).scale(&(&(&(&a * &a) * &a) * rat(6)));
    &first + &second
}

/// Oracle `P_4^1 = 6 a2^3 L2^9`.
pub fn expected_p4_1(map: &DruzkowskiMap) -> Polynomial {
    let a = a2(map);
    map.linear_form(1).pow(9).scale(&(&(&(&a * &a) * &a) * rat(6)))
}

/// Oracle inverse of the example family:
/// `G_1 = Y1 - L1^3 + 3 a2 L1^2 L2^3 - 3 a2^2 L1 L2^6 + a2^3 L2^9`,
/// `G_2 = Y2 - L2^3`, `G_i = Y_i` for `i >= 3` (as polynomials in the
/// ambient variables; the `Y` naming is display-only).
pub fn expected_inverse(map: &DruzkowskiMap) -> PolyMap {
    let d = 5;
    let a = a2(map);
    let l1 = map.linear_form(0);
    let l2 = map.linear_form(1);
    let g1 = {
        let head = &Polynomial::var(d, 0) - &l1.pow(3);
        let t1 = (&l1.pow(2) * &l2.pow(3)).scale(&(&a * rat(3)));
        let t2 = (l1 * &l2.pow(6)).scale(&(&(&a * &a) * rat(3)));
        let t3 = l2.pow(9).scale(&(&(&a * &a) * &a));
        &(&(&head + &t1) - &t2) + &t3
    };
    let g2 = &Polynomial::var(d, 1) - &l2.pow(3);
    PolyMap::new(vec![
        g1,
        g2,
        Polynomial::var(d, 2),
        Polynomial::var(d, 3),
        Polynomial::var(d, 4),
    ])
    .expect("components share dimension 5")
}

/// `steps[j]` when the recorded sequence reaches that far, zero otherwise
/// (once a step vanishes all later ones do too).
pub fn step_or_zero(steps: &[Polynomial], j: usize, dim: usize) -> Polynomial {
    steps.get(j).cloned().unwrap_or_else(|| Polynomial::zero(dim))
}

/// Seeded random polynomial: dimension `dim`, total degree <= `max_deg`,
/// at most `max_terms` terms with small rational coefficients.
pub fn random_poly(rng: &mut SplitMix64, dim: usize, max_deg: u32, max_terms: usize) -> Polynomial {
    let n_terms = rng.next_below(max_terms + 1);
    let mut terms = Vec::with_capacity(n_terms);
    for _ in 0..n_terms {
        let mut exps = vec![0u32; dim];
        let mut remaining = max_deg;
        for e in exps.iter_mut() {
            let v = rng.next_below(remaining as usize + 1) as u32;
            *e = v;
            remaining -= v;
        }
        terms.push((exps, draw(rng)));
    }
    Polynomial::from_terms(dim, terms)
}
