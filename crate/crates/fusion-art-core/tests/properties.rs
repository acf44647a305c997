//! Randomized invariant checks for the ART dynamics.

use fusion_art_core::{
    choice_activation, template_learn, template_match, ActivityVector, CategoryNode,
    ChannelParams,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const CASES: usize = 2_000;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_vec(rng: &mut ChaCha8Rng, len: usize) -> Vec<f64> {
    (0..len).map(|_| rng.random_range(0.0..=1.0)).collect()
}

/// Values on a coarse grid, so sums compare exactly and `x ≤ w` checks are
/// free of last-ulp rounding artifacts.
fn random_grid_vec(rng: &mut ChaCha8Rng, len: usize) -> Vec<f64> {
    (0..len)
        .map(|_| rng.random_range(0..=16) as f64 / 16.0)
        .collect()
}

#[test]
fn template_learn_never_raises_weights() {
    let mut rng = rng(11);
    for _ in 0..CASES {
        let len = rng.random_range(1..20);
        let w = random_vec(&mut rng, len);
        let x = ActivityVector::new(random_vec(&mut rng, len)).unwrap();
        let beta = rng.random_range(0.0..=1.0);
        let learned = template_learn(&w, &x, beta).unwrap();
        for (new, old) in learned.iter().zip(&w) {
            assert!(new <= old, "erosion violated: {new} > {old}");
            assert!(*new >= 0.0);
        }
    }
}

#[test]
fn choice_activation_stays_within_contribution_budget() {
    let mut rng = rng(13);
    for _ in 0..CASES {
        let channels = rng.random_range(1..4);
        let mut inputs = Vec::new();
        let mut weights = Vec::new();
        let mut params = Vec::new();
        let mut budget = 0.0;
        for _ in 0..channels {
            let len = rng.random_range(1..12);
            inputs.push(ActivityVector::new(random_vec(&mut rng, len)).unwrap());
            weights.push(random_vec(&mut rng, len));
            let gamma = rng.random_range(0.0..=1.0);
            budget += gamma;
            params.push(
                ChannelParams::new(rng.random_range(1e-4..1.0), 1.0, gamma, 1.0).unwrap(),
            );
        }
        let node = CategoryNode::from_weights(weights).unwrap();
        let t = choice_activation(&inputs, &node, &params).unwrap();
        assert!(t >= 0.0, "activation {t} below zero");
        assert!(t <= budget + 1e-12, "activation {t} above budget {budget}");
    }
}

#[test]
fn match_ratio_bounded_and_containment_gives_one() {
    let mut rng = rng(17);
    for _ in 0..CASES {
        let len = rng.random_range(1..16);
        let x = random_vec(&mut rng, len);
        let w = random_vec(&mut rng, len);
        let m = template_match(&ActivityVector::new(x.clone()).unwrap(), &w, 0.0).unwrap();
        assert!(m.ratio >= 0.0 && m.ratio <= 1.0, "ratio {} out of bounds", m.ratio);

        // Force containment: x' = x ∧ w is covered by w at equal-or-greater values.
        let contained: Vec<f64> = x.iter().zip(&w).map(|(&a, &b)| a.min(b)).collect();
        let m = template_match(&ActivityVector::new(contained).unwrap(), &w, 1.0).unwrap();
        assert_eq!(m.ratio, 1.0);
        assert!(m.resonant);
    }
}

#[test]
fn fast_learning_is_idempotent() {
    let mut rng = rng(19);
    for _ in 0..CASES {
        let len = rng.random_range(1..16);
        let w = random_vec(&mut rng, len);
        let x = ActivityVector::new(random_vec(&mut rng, len)).unwrap();
        let once = template_learn(&w, &x, 1.0).unwrap();
        let twice = template_learn(&once, &x, 1.0).unwrap();
        assert_eq!(once, twice);
    }
}

#[test]
fn perfect_vigilance_resonates_exactly_on_containment() {
    let mut rng = rng(23);
    for _ in 0..CASES {
        let len = rng.random_range(1..12);
        let x = random_grid_vec(&mut rng, len);
        let w = random_grid_vec(&mut rng, len);
        let contained = x.iter().zip(&w).all(|(a, b)| a <= b);
        let m = template_match(&ActivityVector::new(x.clone()).unwrap(), &w, 1.0).unwrap();
        if x.iter().sum::<f64>() == 0.0 {
            assert!(m.resonant);
        } else {
            assert_eq!(
                m.resonant, contained,
                "rho = 1 resonance must coincide with element-wise containment"
            );
        }
    }
}
