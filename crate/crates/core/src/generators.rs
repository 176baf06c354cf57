//! The multioperations `E^k_{p,q}` and other named elements of the operad.
//!
//! `E^k_{p,q}` lives in arity `p+q`: values `1..=p` are the `a` inputs and
//! `p+1..=p+q` the `b` inputs. It is the sum of the flattenings of all
//! admissible tables with parameters `(k, p, q)`.
//!
//! A table is built from two increasing sequences, `A = 1..=p` and
//! `B = p+1..=p+q`. Row 1 is `(1)`. Rows then alternate between `B` rows
//! (2, 4, ..) and `A` rows (3, 5, ..). Row 2 reads
//! `p+1, 1, p+2, 1, .., 1, p+t` for some `t >= 1`. Every later row restarts
//! from the last value already emitted by its own sequence, emits `t >= 0`
//! fresh values of that sequence on its odd positions, and carries the last
//! emitted value of the other sequence on its even positions. The final row
//! emits nothing. There are `k+3` rows in total, and all of `A` and `B` must
//! be used up.
//!
//! `E^k_{1,1}` is therefore the alternating string of length `k+3`, i.e. the
//! cup-(k+1) product; a parity statement pairing `E^{2k}_{1,1}` with cup-2k
//! would contradict this degree count.

use std::fmt;

use crate::f2::FormalSum;
use crate::surjection::{SurjChain, Surjection};

/// One admissible table for `E^k_{p,q}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AdmissibleTable {
    pub k: usize,
    pub p: usize,
    pub q: usize,
    pub rows: Vec<Vec<u32>>,
    /// New-value counts of rows `2..=k+3`.
    pub emission_profile: Vec<usize>,
}

impl AdmissibleTable {
    pub fn flatten(&self) -> Surjection {
        let entries: Vec<u32> = self.rows.iter().flatten().copied().collect();
        Surjection::new(entries).unwrap_or_else(|e| panic!("admissible table flattened to a degenerate string: {e}"))
    }
}

impl fmt::Display for AdmissibleTable {
    /// Rows separated by `;`, e.g. `(1;2,1,3;1)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (r, row) in self.rows.iter().enumerate() {
            if r > 0 {
                write!(f, ";")?;
            }
            for (i, x) in row.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
        }
        write!(f, ")")
    }
}

/// `E^k_{p,q}` together with the tables it came from.
#[derive(Clone, Debug)]
pub struct GeneratorElement {
    pub k: usize,
    pub p: usize,
    pub q: usize,
    pub chain: SurjChain,
    pub tables: Vec<AdmissibleTable>,
}

struct TableBuilder {
    k: usize,
    p: usize,
    rows: Vec<Vec<u32>>,
    profile: Vec<usize>,
    out: Vec<AdmissibleTable>,
    q: usize,
}

impl TableBuilder {
    fn row(&mut self, r: usize, last_a: u32, last_b: u32, rem_a: usize, rem_b: usize) {
        let n_rows = self.k + 3;
        if r > n_rows {
            if rem_a == 0 && rem_b == 0 {
                self.out.push(AdmissibleTable {
                    k: self.k,
                    p: self.p,
                    q: self.q,
                    rows: self.rows.clone(),
                    emission_profile: self.profile.clone(),
                });
            }
            return;
        }
        let is_b = r % 2 == 0;
        let is_last = r == n_rows;
        let rem = if is_b { rem_b } else { rem_a };
        // Row 2 is never the last row since there are at least three.
        let (lo, hi) = match (is_last, r == 2) {
            (true, _) => (0, 0),
            (false, true) => (1, rem),
            (false, false) => (0, rem),
        };
        for t in lo..=hi {
            let row = if r == 2 {
                let first_b = self.p as u32 + 1;
                let mut row = Vec::with_capacity(2 * t);
                for j in 0..t as u32 {
                    if j > 0 {
                        row.push(last_a);
                    }
                    row.push(first_b + j);
                }
                row
            } else {
                let (own, other) = if is_b { (last_b, last_a) } else { (last_a, last_b) };
                let mut row = Vec::with_capacity(2 * t + 1);
                row.push(own);
                for j in 1..=t as u32 {
                    row.push(other);
                    row.push(own + j);
                }
                row
            };
            let end = *row.last().unwrap();
            self.rows.push(row);
            self.profile.push(t);
            if is_b {
                self.row(r + 1, last_a, end, rem_a, rem_b - t);
            } else {
                self.row(r + 1, end, last_b, rem_a - t, rem_b);
            }
            self.rows.pop();
            self.profile.pop();
        }
    }
}

/// All admissible tables of `E^k_{p,q}`, in order of increasing emission
/// profile. Empty when no table exists (for instance `k = 0, p > 1`).
pub fn admissible_tables(k: usize, p: usize, q: usize) -> Vec<AdmissibleTable> {
    if p == 0 || q == 0 {
        return Vec::new();
    }
    let mut b = TableBuilder { k, p, q, rows: vec![vec![1]], profile: Vec::new(), out: Vec::new() };
    b.row(2, 1, 0, p - 1, q);
    b.out
}

/// `E^k_{p,q}` as an element of arity `p+q` and degree `p+q+k-1`.
pub fn generator(k: usize, p: usize, q: usize) -> GeneratorElement {
    let tables = admissible_tables(k, p, q);
    let terms: FormalSum<Surjection> = tables.iter().map(AdmissibleTable::flatten).collect();
    assert_eq!(terms.len(), tables.len(), "two admissible tables of E^{k}_{{{p},{q}}} flatten to the same string");
    let chain = SurjChain::from_terms(p + q, terms).expect("generator terms share arity and degree");
    GeneratorElement { k, p, q, chain, tables }
}

fn interleave(values: impl IntoIterator<Item = u32>, sep: u32) -> Vec<u32> {
    let mut out = Vec::new();
    for (i, v) in values.into_iter().enumerate() {
        if i > 0 {
            out.push(sep);
        }
        out.push(v);
    }
    out
}

/// Closed form `(1; p+1,1,..,1,p+q; 1,p+q,2,..,p+q,p; p+q)`.
pub fn e1_closed(p: usize, q: usize) -> SurjChain {
    let (p, q) = (p as u32, q as u32);
    let mut s = vec![1];
    s.extend(interleave(p + 1..=p + q, 1));
    s.extend(interleave(1..=p, p + q));
    s.push(p + q);
    SurjChain::from_surjection(Surjection::new(s).expect("closed form is nondegenerate"))
}

/// Closed form: sum over `j = 0..q` of
/// `(1; p+1,1,..,1,p+j+1; 1,p+j+1,2,..,p+j+1,p; p+j+1,p,..,p,p+q; p)`.
pub fn e2_closed(p: usize, q: usize) -> SurjChain {
    let (pp, qq) = (p as u32, q as u32);
    let terms = (0..qq).map(|j| {
        let top = pp + j + 1;
        let mut s = vec![1];
        s.extend(interleave(pp + 1..=top, 1));
        s.extend(interleave(1..=pp, top));
        s.extend(interleave(top..=pp + qq, pp));
        s.push(pp);
        s
    });
    SurjChain::from_entries(p + q, terms).expect("closed form is nondegenerate")
}

/// The alternating string `(1,2,1,2,..)` of length `i+2`, representing cup-i.
pub fn cup_string(i: usize) -> Surjection {
    Surjection::from_valid((0..i + 2).map(|j| (j % 2) as u32 + 1).collect())
}

/// `(G_{1,2}, G_{2,1})`, two arity-3 degree-4 elements relating cup-1 and cup-2.
pub fn g_elements() -> (Surjection, Surjection) {
    (Surjection::from_valid(vec![1, 2, 1, 3, 1, 3, 2]), Surjection::from_valid(vec![1, 2, 3, 2, 3, 1, 3]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(e: &[u32]) -> Surjection {
        Surjection::new(e.to_vec()).unwrap()
    }

    #[test]
    fn e0_1q_is_single_brace_string() {
        let t = admissible_tables(0, 1, 3);
        assert_eq!(t.len(), 1);
        assert_eq!(t[0].rows, vec![vec![1], vec![2, 1, 3, 1, 4], vec![1]]);
        assert_eq!(t[0].to_string(), "(1;2,1,3,1,4;1)");
    }

    #[test]
    fn e4_33_contains_listed_table() {
        let rows: Vec<Vec<u32>> =
            vec![vec![1], vec![4, 1, 5, 1, 6], vec![1, 6, 2], vec![6], vec![2, 6, 3], vec![6], vec![3]];
        let tables = admissible_tables(4, 3, 3);
        let t = tables.iter().find(|t| t.rows == rows).expect("table present");
        assert_eq!(t.emission_profile, vec![3, 1, 0, 1, 0, 0]);
        assert_eq!(t.flatten(), s(&[1, 4, 1, 5, 1, 6, 1, 6, 2, 6, 2, 6, 3, 6, 3]));
    }

    #[test]
    fn e0_with_several_a_inputs_vanishes() {
        assert!(admissible_tables(0, 2, 1).is_empty());
        assert!(generator(0, 3, 2).chain.is_zero());
    }

    #[test]
    fn flatten_examples() {
        let t = admissible_tables(2, 4, 5).into_iter().find(|t| t.rows[1] == vec![5, 1, 6, 1, 7]).unwrap();
        assert_eq!(t.flatten(), s(&[1, 5, 1, 6, 1, 7, 1, 7, 2, 7, 3, 7, 4, 7, 4, 8, 4, 9, 4]));
        assert_eq!(admissible_tables(0, 1, 1)[0].flatten(), s(&[1, 2, 1]));
    }

    #[test]
    fn generator_examples() {
        assert_eq!(generator(0, 1, 2).chain.to_string(), "(1,2,1,3,1)");
        assert_eq!(generator(1, 1, 1).chain.to_string(), "(1,2,1,2)");
        for p in 1..=3 {
            for q in 1..=4 {
                assert_eq!(generator(2, p, q).chain.len(), q);
            }
        }
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(e1_closed(2, 2).to_string(), "(1,3,1,4,1,4,2,4)");
        assert_eq!(e1_closed(1, 1).to_string(), "(1,2,1,2)");
        assert_eq!(e2_closed(1, 1).to_string(), "(1,2,1,2,1)");
    }

    #[test]
    fn cup_strings() {
        assert_eq!(cup_string(0), s(&[1, 2]));
        assert_eq!(cup_string(1), s(&[1, 2, 1]));
        assert_eq!(cup_string(2), s(&[1, 2, 1, 2]));
    }

    #[test]
    fn g_elements_shape() {
        let (g12, g21) = g_elements();
        assert_eq!(g12, s(&[1, 2, 1, 3, 1, 3, 2]));
        assert_eq!(g21, s(&[1, 2, 3, 2, 3, 1, 3]));
        for g in [g12, g21] {
            assert_eq!((g.arity(), g.degree()), (3, 4));
        }
    }

    #[test]
    fn emission_accounting() {
        for k in 0..=4 {
            for p in 1..=4 {
                for q in 1..=4 {
                    for t in admissible_tables(k, p, q) {
                        let a: usize = t.emission_profile.iter().skip(1).step_by(2).sum();
                        let b: usize = t.emission_profile.iter().step_by(2).sum();
                        assert_eq!((a, b), (p - 1, q), "{t}");
                        assert_eq!(t.rows.len(), k + 3);
                        assert!(t.rows.iter().all(|r| r.len() % 2 == 1));
                        assert_eq!(t.rows[1][0], p as u32 + 1);
                        assert_eq!(t.rows.last().unwrap().len(), 1);
                        assert_eq!(*t.emission_profile.last().unwrap(), 0);
                    }
                }
            }
        }
    }
}
