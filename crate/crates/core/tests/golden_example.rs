//! Golden tests for the five-variable example family: the sequences, the
//! inverse, and the surrounding structure are pinned both as explicit
//! polynomials (for `a2 = b3 = 1`) and against closed-form oracles for
//! random rational parameters.

mod common;

use common::*;
use keller::druzkowski::example_family;
use keller::identities::check_all;
use keller::inversion::{invert, p_sequence, verify_inverse, InversionStatus};
use keller::poly::Polynomial;
use keller::polymap::{is_keller, NilpotencyIndex};
use keller::rational::rat;
use keller::rng::SplitMix64;
use num_traits::Zero;

#[test]
fn golden_sequences_match_frozen_strings() {
    let map = golden_map();
    let f = map.map();

    let seq1 = p_sequence(f, 0, 6);
    assert_eq!(seq1[1].to_string(), "X2^3");
    assert_eq!(seq1[2].to_string(), "X3^9 + 3*X2*X3^6 + 3*X2^2*X3^3");
    assert_eq!(seq1[3].to_string(), "6*X3^9 + 6*X2*X3^6");
    assert_eq!(seq1[4].to_string(), "6*X3^9");
    assert!(seq1[5].is_zero());
    assert_eq!(seq1.len(), 6);

    let seq2 = p_sequence(f, 1, 6);
    assert_eq!(seq2[1].to_string(), "X3^3");
    assert!(seq2[2].is_zero());
    assert_eq!(seq2.len(), 3);

    for i in 2..5 {
        let seq = p_sequence(f, i, 6);
        assert_eq!(seq.len(), 2);
        assert!(seq[1].is_zero());
    }

    // the same values through the closed-form oracles
    assert_eq!(seq1[2], expected_p2_1(&map));
    assert_eq!(seq1[3], expected_p3_1(&map));
    assert_eq!(seq1[4], expected_p4_1(&map));

    // P_2^1 splits into homogeneous parts of degrees 5, 7, 9
    let degrees: Vec<u32> = seq1[2].homogeneous_components().iter().map(|(d, _)| *d).collect();
    assert_eq!(degrees, vec![5, 7, 9]);

    assert_eq!(
        p_sequence(f, 0, 6)
            .iter()
            .map(|p| p.degree().as_finite())
            .collect::<Vec<_>>(),
        vec![Some(1), Some(3), Some(9), Some(9), Some(9), None],
    );
}

#[test]
fn golden_inverse_matches_display() {
    let map = golden_map();
    let result = invert(map.map()).unwrap();
    assert_eq!(result.status, InversionStatus::Inverted);
    let g = result.inverse.unwrap();

    assert_eq!(
        g.component(0).to_string_with_var('Y'),
        "Y3^9 - 3*Y2*Y3^6 + 3*Y2^2*Y3^3 - Y2^3 + Y1"
    );
    assert_eq!(g.component(1).to_string_with_var('Y'), "-Y3^3 + Y2");
    for i in 2..5 {
        assert_eq!(g.component(i), &Polynomial::var(5, i));
    }
    assert_eq!(g, expected_inverse(&map));
    assert_eq!(g.degree().as_finite(), Some(9));
    assert!(verify_inverse(map.map(), &g));

    let m: Vec<Option<usize>> = (0..5).map(|i| result.trace.termination_index(i)).collect();
    assert_eq!(m, vec![Some(5), Some(2), Some(1), Some(1), Some(1)]);
}

#[test]
fn golden_trace_report() {
    let map = golden_map();
    let result = invert(map.map()).unwrap();
    let expected = "inversion-trace v1\n\
                    dim 5\n\
                    cap 41\n\
                    coordinate 1 m=5\n\
                    \x20 P_0 deg=1\n\
                    \x20 P_1 deg=3\n\
                    \x20 P_2 deg=9\n\
                    \x20 P_3 deg=9\n\
                    \x20 P_4 deg=9\n\
                    \x20 P_5 0\n\
                    coordinate 2 m=2\n\
                    \x20 P_0 deg=1\n\
                    \x20 P_1 deg=3\n\
                    \x20 P_2 0\n\
                    coordinate 3 m=1\n\
                    \x20 P_0 deg=1\n\
                    \x20 P_1 0\n\
                    coordinate 4 m=1\n\
                    \x20 P_0 deg=1\n\
                    \x20 P_1 0\n\
                    coordinate 5 m=1\n\
                    \x20 P_0 deg=1\n\
                    \x20 P_1 0\n";
    assert_eq!(result.trace.to_report(), expected);
}

#[test]
fn golden_structure() {
    let map = golden_map();
    let d = 5;
    let jh = map.cubic_part().jacobian();

    // JH entry (i,j) = 3 L_i^2 a_ij
    for i in 0..d {
        for j in 0..d {
            let expected = map.linear_form(i).pow(2).scale(&(map.coefficient(i, j) * rat(3)));
            assert_eq!(jh.entry(i, j), &expected);
        }
    }

    // hand-multiplied square: only nonzero entry is (1,3) = 9 X2^2 X3^2
    let jh2 = jh.matrix_mul(&jh);
    let x2 = Polynomial::var(d, 1);
    let x3 = Polynomial::var(d, 2);
    assert_eq!(jh2.entry(0, 2), &(&x2.pow(2) * &x3.pow(2)).scale(&rat(9)));
    for i in 0..d {
        for j in 0..d {
            if (i, j) != (0, 2) {
                assert!(jh2.entry(i, j).is_zero(), "unexpected nonzero at ({i},{j})");
            }
        }
    }

    assert_eq!(jh.nilpotency_index(d), NilpotencyIndex::Index(3));
    assert_eq!(map.map().jacobian().determinant().unwrap(), Polynomial::one(d));
    assert!(is_keller(map.map()).unwrap());
    assert!(check_all(&map).all_passed());
}

#[test]
fn rational_parameter_instances_match_oracles() {
    let mut rng = SplitMix64::new(2024);
    for trial in 0..5 {
        let params = random_params(&mut rng);
        let map = example_family(&params);
        let f = map.map();

        let seq1 = p_sequence(f, 0, 6);
        assert_eq!(step_or_zero(&seq1, 2, 5), expected_p2_1(&map), "trial {trial}");
        assert_eq!(step_or_zero(&seq1, 3, 5), expected_p3_1(&map), "trial {trial}");
        assert_eq!(step_or_zero(&seq1, 4, 5), expected_p4_1(&map), "trial {trial}");
        assert!(step_or_zero(&seq1, 5, 5).is_zero(), "trial {trial}");

        assert!(step_or_zero(&p_sequence(f, 1, 6), 2, 5).is_zero());

        let result = invert(f).unwrap();
        assert_eq!(result.status, InversionStatus::Inverted);
        let g = result.inverse.unwrap();
        assert_eq!(g, expected_inverse(&map), "trial {trial}");
        assert!(verify_inverse(f, &g), "trial {trial}");

        // a2 != 0 and L2 != 0 force the full five steps and degree 9
        assert_eq!(result.trace.termination_index(0), Some(5), "trial {trial}");
        assert_eq!(g.degree().as_finite(), Some(9), "trial {trial}");

        // determinant stays 1 for arbitrary parameters of the family
        assert_eq!(f.jacobian().determinant().unwrap(), Polynomial::one(5));
    }
}

#[test]
fn zero_parameters_degenerate_gracefully() {
    let zeros: [keller::rational::Rational; 7] = std::array::from_fn(|_| Zero::zero());
    let map = example_family(&zeros);
    let result = invert(map.map()).unwrap();
    assert_eq!(result.status, InversionStatus::Inverted);
    assert_eq!(result.inverse.unwrap(), keller::polymap::PolyMap::identity(5));
}
