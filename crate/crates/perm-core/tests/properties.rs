use perm_core::{Perm, PermGroup, RandomStream};
use proptest::prelude::*;

fn rand_perm(seed: u64, degree: usize) -> Perm {
    let mut rng = RandomStream::new(seed);
    let mut images: Vec<u32> = (0..degree as u32).collect();
    for i in (1..degree).rev() {
        let j = rng.below(i as u64 + 1) as usize;
        images.swap(i, j);
    }
    Perm::from_images(images).unwrap()
}

proptest! {
    #[test]
    fn cycle_string_round_trips(seed in any::<u64>(), degree in 1usize..48) {
        let p = rand_perm(seed, degree);
        let back = Perm::parse(&p.cycle_string(), degree).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn pack_round_trips(seed in any::<u64>(), degree in 1usize..300) {
        let p = rand_perm(seed, degree);
        prop_assert_eq!(Perm::unpack(&p.pack(), degree), p);
    }

    #[test]
    fn composition_is_associative(s1 in any::<u64>(), s2 in any::<u64>(), s3 in any::<u64>(),
                                  degree in 1usize..32) {
        let (a, b, c) = (rand_perm(s1, degree), rand_perm(s2, degree), rand_perm(s3, degree));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn inverse_and_conjugation_laws(s1 in any::<u64>(), s2 in any::<u64>(), degree in 1usize..32) {
        let (a, h) = (rand_perm(s1, degree), rand_perm(s2, degree));
        prop_assert!((&a * &a.inverse()).is_identity());
        prop_assert_eq!(a.conjugate_by(&h), &(&h.inverse() * &a) * &h);
        prop_assert_eq!(a.conjugate_by(&h).order(), a.order());
    }

    #[test]
    fn power_order_identity(seed in any::<u64>(), degree in 1usize..32, k in 0u64..500) {
        let a = rand_perm(seed, degree);
        let o = a.order();
        prop_assert!(a.pow(o).is_identity());
        let expected = if k == 0 { 1 } else { o / num_integer::gcd(o, k) };
        prop_assert_eq!(a.pow(k).order(), expected);
    }
}

#[test]
fn random_words_sift_to_members() {
    let degree = 9;
    let gens: Vec<Perm> = ["(1,2,3)", "(1,2,3,4,5,6,7,8,9)", "(4,7)(5,8)"]
        .iter()
        .map(|s| Perm::parse(s, degree).unwrap())
        .collect();
    let g = PermGroup::from_generators(degree, gens.clone()).unwrap();
    let mut rng = RandomStream::new(17);
    for _ in 0..1000 {
        let mut w = Perm::identity(degree);
        let len = 1 + rng.below(12);
        for _ in 0..len {
            let pick = rng.below(gens.len() as u64) as usize;
            if rng.below(2) == 0 {
                w = &w * &gens[pick];
            } else {
                w = &w * &gens[pick].inverse();
            }
        }
        assert!(g.contains(&w));
    }
}

#[test]
fn seeded_runs_are_reproducible() {
    let degree = 8;
    let gens: Vec<Perm> = ["(1,2)", "(1,2,3,4,5,6,7,8)"]
        .iter()
        .map(|s| Perm::parse(s, degree).unwrap())
        .collect();
    let g = PermGroup::from_generators(degree, gens).unwrap();
    let sample = |seed: u64| -> Vec<Perm> {
        let mut rng = RandomStream::new(seed);
        (0..50).map(|_| g.random_element(&mut rng)).collect()
    };
    assert_eq!(sample(99), sample(99));
    assert_ne!(sample(99), sample(100));
    let mut w0 = RandomStream::for_worker(7, 0);
    let mut w1 = RandomStream::for_worker(7, 1);
    assert_ne!(g.random_element(&mut w0), g.random_element(&mut w1));
}
