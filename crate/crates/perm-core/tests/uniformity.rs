//! Statistical checks that chain-based random elements are uniform.

use std::collections::HashMap;

use perm_core::{Perm, PermGroup, RandomStream};
use statrs::distribution::{ChiSquared, ContinuousCDF};

fn group(strs: &[&str], degree: usize) -> PermGroup {
    let gens = strs
        .iter()
        .map(|s| Perm::parse(s, degree).unwrap())
        .collect();
    PermGroup::from_generators(degree, gens).unwrap()
}

/// Chi-square goodness of fit against the uniform distribution over all
/// group elements, at significance 1e-6.
fn assert_uniform(g: &PermGroup, draws: u64, seed: u64) {
    let elems = g.elements().unwrap();
    let index: HashMap<&Perm, usize> = elems.iter().zip(0..).collect();
    let mut counts = vec![0u64; elems.len()];
    let mut rng = RandomStream::new(seed);
    for _ in 0..draws {
        let x = g.random_element(&mut rng);
        counts[index[&x]] += 1;
    }
    let expected = draws as f64 / elems.len() as f64;
    let stat: f64 = counts
        .iter()
        .map(|&c| {
            let d = c as f64 - expected;
            d * d / expected
        })
        .sum();
    let dist = ChiSquared::new((elems.len() - 1) as f64).unwrap();
    let threshold = dist.inverse_cdf(1.0 - 1e-6);
    assert!(
        stat < threshold,
        "chi-square {stat:.2} exceeds {threshold:.2} for |G| = {}",
        elems.len()
    );
}

#[test]
fn s4_samples_are_uniform() {
    let g = group(&["(1,2)", "(1,2,3,4)"], 4);
    assert_uniform(&g, 24_000, 1);
}

#[test]
fn a5_samples_are_uniform() {
    let g = group(&["(1,2,3)", "(1,2,3,4,5)"], 5);
    assert_uniform(&g, 120_000, 2);
}

#[test]
fn cyclic_and_dihedral_samples_are_uniform() {
    // C60: the largest cyclic order exercised by elementwise sampling.
    let g = group(&["(1,2,3,4)(5,6,7)(8,9,10,11,12)"], 12);
    assert_eq!(g.order_u64(), Some(60));
    assert_uniform(&g, 120_000, 3);
    let d = group(&["(1,2,3,4,5,6)", "(2,6)(3,5)"], 6);
    assert_eq!(d.order_u64(), Some(12));
    assert_uniform(&d, 60_000, 4);
}

#[test]
fn every_element_is_hit_in_s4() {
    // 24 cells, 24000 draws: each count must lie within 5 sigma of 1000.
    let g = group(&["(1,2)", "(1,2,3,4)"], 4);
    let elems = g.elements().unwrap();
    let index: HashMap<&Perm, usize> = elems.iter().zip(0..).collect();
    let mut counts = vec![0u64; 24];
    let mut rng = RandomStream::new(7);
    for _ in 0..24_000 {
        counts[index[&g.random_element(&mut rng)]] += 1;
    }
    let p: f64 = 1.0 / 24.0;
    let sigma = (24_000.0 * p * (1.0 - p)).sqrt();
    for &c in &counts {
        assert!((c as f64 - 1000.0).abs() < 5.0 * sigma, "count {c} off");
    }
}
