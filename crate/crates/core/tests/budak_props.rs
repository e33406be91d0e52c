use std::cmp::Ordering;

use besselpade_core::algebra::{rat, Polynomial, Rational};
use besselpade_core::budak::{
    budak_magnitude_closed, budak_tf, default_gamma_samples, delay_gamma_polynomials,
    gamma_candidates, gamma_order2, magnitude_gamma_mismatch, order2_certificate, BudakParams,
};
use besselpade_core::response::{group_delay, magnitude_flatness, magnitude_squared};
use besselpade_core::stability::{routh_hurwitz, Verdict};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn p(c: &[i64]) -> Polynomial {
    Polynomial::from_i64(c)
}

fn g() -> Polynomial {
    Polynomial::x()
}

fn gm1() -> Polynomial {
    p(&[-1, 1])
}

fn product(factors: &[Polynomial]) -> Polynomial {
    factors.iter().fold(Polynomial::one(), |acc, f| &acc * f)
}

#[test]
fn closed_magnitude_matches_definition() {
    let gammas = [rat(1, 3), rat(1, 2), rat(1, 1), rat(2, 1), rat(9, 4)];
    for n in 1..=6 {
        for m in 0..=n {
            for gamma in &gammas {
                let params = BudakParams::new(m, n, gamma.clone()).unwrap();
                assert_eq!(
                    budak_magnitude_closed(&params).unwrap(),
                    magnitude_squared(&budak_tf(&params).unwrap()),
                    "({m},{n},{gamma})"
                );
            }
        }
    }
}

#[test]
fn every_candidate_exceeds_one_half() {
    let half = rat(1, 2);
    for n in 2..=8 {
        for m in 1..n {
            for j in 1..=m {
                let sols = gamma_candidates(n, m, j, 8).unwrap();
                for iv in sols.branches() {
                    assert_eq!(iv.compare_to(&half), Ordering::Greater, "({n},{m},{j})");
                }
            }
        }
    }
}

#[test]
fn order2_values_are_the_first_order_candidates() {
    for n in 2..=8 {
        for m in 1..n {
            let order2 = gamma_order2(n, m).unwrap();
            let (plus, minus) = gamma_candidates(n, m, 1, 8).unwrap().exact.unwrap();
            assert_eq!(order2.upper, minus, "({n},{m})");
            assert_eq!(order2.lower, plus, "({n},{m})");
        }
    }
}

#[test]
fn order2_is_best_possible() {
    for n in 2..=6 {
        for m in 1..n {
            let cert = order2_certificate(n, m).unwrap();
            assert!(
                cert.u1_divisible,
                "u1 mismatch of ({n},{m}) not divisible by q"
            );
            assert!(
                !cert.u2_divisible,
                "u2 mismatch of ({n},{m}) divisible by q"
            );
        }
    }
}

#[test]
fn minimum_phase_boundary() {
    let above = [rat(3, 2), rat(2, 1), rat(7, 2)];
    let below = [rat(1, 4), rat(1, 2), rat(5, 6)];
    for n in 1..=5 {
        for m in 1..=3.min(n) {
            for gamma in &above {
                let tf = budak_tf(&BudakParams::new(m, n, gamma.clone()).unwrap()).unwrap();
                assert_eq!(
                    routh_hurwitz(tf.numerator()).unwrap().verdict,
                    Verdict::StrictHurwitz
                );
            }
            for gamma in &below {
                let tf = budak_tf(&BudakParams::new(m, n, gamma.clone()).unwrap()).unwrap();
                assert_eq!(
                    routh_hurwitz(tf.numerator()).unwrap().verdict,
                    Verdict::NotHurwitz
                );
            }
        }
    }
}

proptest! {
    #[test]
    fn generic_gamma_gives_unit_magnitude_order(
        (n, m) in (2usize..=6).prop_flat_map(|n| (Just(n), 1..n)),
        gamma in (1i64..=200, 1i64..=17).prop_map(|(a, b)| rat(a, b)),
    ) {
        let mismatch = magnitude_gamma_mismatch(n, m, 1).unwrap();
        prop_assume!(!mismatch.eval(&gamma).is_zero());
        let tf = budak_tf(&BudakParams::new(m, n, gamma).unwrap()).unwrap();
        prop_assert_eq!(magnitude_flatness(&tf).unwrap().order, 1);
    }

    #[test]
    fn unit_dc_gain(
        (n, m) in (1usize..=7).prop_flat_map(|n| (Just(n), 0..=n)),
        gamma in (1i64..=200, 1i64..=17).prop_map(|(a, b)| rat(a, b)),
    ) {
        let tf = budak_tf(&BudakParams::new(m, n, gamma).unwrap()).unwrap();
        prop_assert_eq!(tf.dc_value(), Some(Rational::one()));
    }
}

#[test]
fn two_three_delay_block() {
    let d = delay_gamma_polynomials(2, 3, &default_gamma_samples(2, 3)).unwrap();
    let s = |c: i64| Polynomial::constant(rat(c, 1));
    let a4 = product(&[s(3), p(&[-2, 1]), gm1().pow(3), g().pow(5)]);
    let a3 = product(&[s(9), gm1(), g().pow(3), p(&[-5, 13, -13, 4])]);
    let a2 = product(&[s(9), g(), p(&[25, -85, 120, -79, 25])]);
    let a1 = product(&[s(135), p(&[5, -10, 8])]);
    let b2 = product(&[s(9), p(&[25, -100, 165, -130, 46])]);
    let b3 = product(&[s(9), g().pow(2), p(&[5, -20, 32, -24, 8])]);
    let b4 = product(&[s(3), gm1().pow(2), g().pow(4), p(&[2, -4, 3])]);
    let b5 = product(&[gm1().pow(4), g().pow(6)]);
    assert_eq!(d.numerator, vec![s(2025), a1.clone(), a2.clone(), a3, a4]);
    assert_eq!(d.denominator, vec![s(2025), a1, b2.clone(), b3, b4, b5]);
    assert_eq!(d.scale, rat(2025, 1));
    assert_eq!(&a2 - &b2, gm1().pow(5).scale(&rat(225, 1)));
}

#[test]
fn delay_block_matches_direct_evaluation() {
    for (m, n) in [(1, 2), (2, 3), (1, 4), (3, 4)] {
        let d = delay_gamma_polynomials(m, n, &default_gamma_samples(m, n)).unwrap();
        for gamma in [rat(3, 7), rat(5, 2), rat(13, 3)] {
            let tf = budak_tf(&BudakParams::new(m, n, gamma.clone()).unwrap()).unwrap();
            assert_eq!(
                d.at(&gamma).unwrap(),
                group_delay(&tf).unwrap(),
                "({m},{n},{gamma})"
            );
        }
    }
}

#[test]
fn delay_at_gamma_one_is_all_pole() {
    let d = delay_gamma_polynomials(2, 3, &default_gamma_samples(2, 3)).unwrap();
    let all_pole = budak_tf(&BudakParams::new(0, 3, rat(1, 1)).unwrap()).unwrap();
    assert_eq!(d.at(&rat(1, 1)).unwrap(), group_delay(&all_pole).unwrap());
}
