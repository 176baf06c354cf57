//! Bundled simplicial complexes.

use crate::error::{Error, Result};
use crate::simplicial::SimplicialComplex;

/// `(name, facet text)` for every bundled complex, sorted by name.
pub const FIXTURES: &[(&str, &str)] = &[
    ("circle", include_str!("../fixtures/circle.txt")),
    ("delta1", include_str!("../fixtures/delta1.txt")),
    ("delta2", include_str!("../fixtures/delta2.txt")),
    ("delta3", include_str!("../fixtures/delta3.txt")),
    ("delta4", include_str!("../fixtures/delta4.txt")),
    ("delta5", include_str!("../fixtures/delta5.txt")),
    ("klein-bottle", include_str!("../fixtures/klein-bottle.txt")),
    ("rp2", include_str!("../fixtures/rp2.txt")),
];

pub fn fixture_text(name: &str) -> Option<&'static str> {
    FIXTURES.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
}

pub fn load(name: &str) -> Result<SimplicialComplex> {
    let text = fixture_text(name).ok_or_else(|| Error::OutOfRange(format!("unknown fixture {name:?}")))?;
    SimplicialComplex::parse(text)
}

/// The standard `n`-simplex on vertices `0..=n`.
pub fn delta(n: usize) -> SimplicialComplex {
    SimplicialComplex::from_facets(&[(0..=n as u32).collect()]).expect("a single facet is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn euler(c: &SimplicialComplex) -> i64 {
        (0..=c.dim()).map(|d| if d % 2 == 0 { 1 } else { -1 } * c.simplices(d).len() as i64).sum()
    }

    #[test]
    fn all_fixtures_parse() {
        for (name, _) in FIXTURES {
            load(name).unwrap();
        }
        assert!(load("torus").is_err());
    }

    #[test]
    fn face_counts() {
        let counts = |c: &SimplicialComplex| (0..=c.dim()).map(|d| c.simplices(d).len()).collect::<Vec<_>>();
        assert_eq!(counts(&load("rp2").unwrap()), vec![6, 15, 10]);
        assert_eq!(counts(&load("klein-bottle").unwrap()), vec![9, 27, 18]);
        assert_eq!(counts(&load("circle").unwrap()), vec![3, 3]);
        assert_eq!(load("delta4").unwrap(), delta(4));
        assert_eq!(euler(&load("rp2").unwrap()), 1);
        assert_eq!(euler(&load("klein-bottle").unwrap()), 0);
    }
}
