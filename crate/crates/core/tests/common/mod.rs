#![allow(dead_code)]

use rand::Rng;
use surjection::{SurjChain, Surjection};

/// Uniform over strings without equal neighbours, conditioned on hitting
/// every value; requires `len >= n`.
pub fn random_surjection(rng: &mut impl Rng, n: u32, len: usize) -> Surjection {
    assert!(len >= n as usize && n >= 1);
    assert!(n > 1 || len == 1, "arity one admits only (1)");
    loop {
        let mut e: Vec<u32> = Vec::with_capacity(len);
        for _ in 0..len {
            let v = loop {
                let v = rng.gen_range(1..=n);
                if e.last() != Some(&v) {
                    break v;
                }
            };
            e.push(v);
        }
        match Surjection::new(e) {
            Ok(u) if u.arity() == n as usize => return u,
            _ => {}
        }
    }
}

/// A sum of up to `max_terms` random surjections of a common arity and length.
pub fn random_chain(rng: &mut impl Rng, n: u32, len: usize, max_terms: usize) -> SurjChain {
    let terms = (0..rng.gen_range(1..=max_terms)).map(|_| random_surjection(rng, n, len).entries().to_vec());
    SurjChain::from_entries(n as usize, terms).unwrap()
}
