//! The action of surjections on F2 cochains of ordered simplicial complexes,
//! cup-i products, cohomology and Steenrod squares.
//!
//! A surjection `u` of length `L` acts on an `m`-simplex by cutting its
//! vertex positions `0..=m` into `L` consecutive intervals that share their
//! endpoints, `[a_0,a_1], [a_1,a_2], .., [a_{L-1},a_L]` with `a_0 = 0` and
//! `a_L = m`. Value `v` collects the positions of the intervals labelled `v`.
//! A cutting in which some value sees a position twice contributes nothing;
//! otherwise it contributes the product of the `x_v` evaluated on the faces
//! spanned by each value's positions.

use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::f2::{BitMatrix, BitVector, FormalSum};
use crate::generators::cup_string;
use crate::report::CheckReport;
use crate::surjection::SurjChain;

/// A strictly increasing vertex tuple.
pub type Simplex = Vec<u32>;

/// Face enumeration is exponential in facet size; cut masks need at most 64 positions.
pub const MAX_FACET_VERTICES: usize = 24;

/// Finite ordered simplicial complex, closed under taking faces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    by_dim: Vec<Vec<Simplex>>,
    index: Vec<BTreeMap<Simplex, usize>>,
}

impl SimplicialComplex {
    /// One facet per line as whitespace-separated distinct vertices; `#`
    /// starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut facets = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let mut facet = Vec::new();
            for tok in body.split_whitespace() {
                let v: u32 =
                    tok.parse().map_err(|_| Error::InvalidComplex { line, msg: format!("not a vertex: {tok:?}") })?;
                if facet.contains(&v) {
                    return Err(Error::InvalidComplex { line, msg: format!("repeated vertex {v}") });
                }
                facet.push(v);
            }
            facets.push(facet);
        }
        if facets.is_empty() {
            return Err(Error::InvalidComplex { line: 0, msg: "no facets".into() });
        }
        Self::from_facets(&facets)
    }

    /// Downward closure of the given facets. Vertex order inside a facet is
    /// irrelevant.
    pub fn from_facets(facets: &[Vec<u32>]) -> Result<Self> {
        let mut by_dim: Vec<std::collections::BTreeSet<Simplex>> = Vec::new();
        for f in facets {
            let mut f = f.clone();
            f.sort_unstable();
            if f.is_empty() || f.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidComplex { line: 0, msg: format!("bad facet {f:?}") });
            }
            if f.len() > MAX_FACET_VERTICES {
                return Err(Error::OutOfRange(format!("facet with {} vertices exceeds {MAX_FACET_VERTICES}", f.len())));
            }
            for mask in 1u64..1u64 << f.len() {
                let face: Simplex = f.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v).collect();
                let d = face.len() - 1;
                if by_dim.len() <= d {
                    by_dim.resize_with(d + 1, Default::default);
                }
                by_dim[d].insert(face);
            }
        }
        let by_dim: Vec<Vec<Simplex>> = by_dim.into_iter().map(|s| s.into_iter().collect()).collect();
        let index = by_dim.iter().map(|ss| ss.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect()).collect();
        Ok(Self { by_dim, index })
    }

    pub fn dim(&self) -> usize {
        self.by_dim.len() - 1
    }

    /// The `d`-simplices in lexicographic order; empty above the top dimension.
    pub fn simplices(&self, d: usize) -> &[Simplex] {
        self.by_dim.get(d).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn index_of(&self, s: &[u32]) -> Option<usize> {
        let d = s.len().checked_sub(1)?;
        self.index.get(d)?.get(s).copied()
    }

    pub fn contains(&self, s: &[u32]) -> bool {
        self.index_of(s).is_some()
    }

    /// Matrix of the coboundary `C^d -> C^{d+1}` in the simplex bases.
    pub fn coboundary_matrix(&self, d: usize) -> BitMatrix {
        let rows = self.simplices(d + 1);
        let mut m = BitMatrix::zeros(rows.len(), self.simplices(d).len());
        for (r, t) in rows.iter().enumerate() {
            for skip in 0..t.len() {
                let face: Simplex = t.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v).collect();
                m.set(r, self.index_of(&face).expect("complex is closed under faces"), true);
            }
        }
        m
    }
}

/// A homogeneous F2 cochain, stored as the set of simplices where it is 1.
///
/// Dimensions are signed so that operations landing below dimension 0 can
/// return a zero cochain; a negative-dimensional cochain is always zero.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cochain {
    dim: i64,
    support: FormalSum<Simplex>,
}

impl Cochain {
    pub fn zero(dim: i64) -> Self {
        Self { dim, support: FormalSum::zero() }
    }

    pub fn indicator(s: Simplex) -> Self {
        Self { dim: s.len() as i64 - 1, support: FormalSum::singleton(s) }
    }

    /// Checks that every simplex has dimension `dim` and lies in `cx`.
    pub fn new(cx: &SimplicialComplex, dim: usize, simplices: impl IntoIterator<Item = Simplex>) -> Result<Self> {
        let support: FormalSum<Simplex> = simplices.into_iter().collect();
        for s in support.iter() {
            if s.len() != dim + 1 {
                return Err(Error::DimensionMismatch { expected: dim, got: s.len().saturating_sub(1) });
            }
            if !cx.contains(s) {
                return Err(Error::OutOfRange(format!("simplex {s:?} not in complex")));
            }
        }
        Ok(Self { dim: dim as i64, support })
    }

    pub fn from_vector(cx: &SimplicialComplex, dim: usize, v: &BitVector) -> Self {
        let basis = cx.simplices(dim);
        assert_eq!(v.len(), basis.len(), "vector length must match the number of {dim}-simplices");
        Self { dim: dim as i64, support: v.ones().map(|i| basis[i].clone()).collect() }
    }

    pub fn to_vector(&self, cx: &SimplicialComplex) -> BitVector {
        let n = if self.dim >= 0 { cx.simplices(self.dim as usize).len() } else { 0 };
        BitVector::from_indices(n, self.support.iter().map(|s| cx.index_of(s).expect("simplex in complex")))
    }

    pub fn dim(&self) -> i64 {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    pub fn value(&self, s: &[u32]) -> bool {
        self.support.contains(&s.to_vec())
    }

    pub fn support(&self) -> &FormalSum<Simplex> {
        &self.support
    }

    /// Sum of two cochains; a zero summand may have any dimension.
    pub fn sum(&self, other: &Cochain) -> Result<Cochain> {
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim.max(0) as usize,
                got: other.dim.max(0) as usize,
            });
        }
        Ok(Cochain { dim: self.dim, support: self.support.sum(&other.support) })
    }
}

impl fmt::Display for Cochain {
    /// `[0,1] + [1,2]`, or `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, s) in self.support.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let parts: Vec<String> = s.iter().map(u32::to_string).collect();
            write!(f, "[{}]", parts.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Cochain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C^{}({self})", self.dim)
    }
}

/// Sums a list of cochains of a common dimension (zeros of any dimension allowed).
pub fn cochain_sum<'a>(parts: impl IntoIterator<Item = &'a Cochain>) -> Result<Cochain> {
    let mut acc: Option<Cochain> = None;
    for p in parts {
        acc = Some(match acc {
            None => p.clone(),
            Some(a) => a.sum(p)?,
        });
    }
    Ok(acc.unwrap_or_else(|| Cochain::zero(0)))
}

/// Simplicial coboundary: `(dx)(t)` is the parity of the facets of `t` in `x`.
pub fn coboundary(cx: &SimplicialComplex, x: &Cochain) -> Cochain {
    let target = x.dim + 1;
    if x.is_zero() {
        return Cochain::zero(target);
    }
    let support = cx
        .simplices(target as usize)
        .iter()
        .filter(|t| {
            let hits = (0..t.len())
                .filter(|&skip| {
                    let face: Simplex = t.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v).collect();
                    x.support.contains(&face)
                })
                .count();
            hits % 2 == 1
        })
        .cloned()
        .collect();
    Cochain { dim: target, support }
}

/// Cut enumeration for one term on one simplex.
struct Cutter<'a> {
    entries: &'a [u32],
    sigma: &'a [u32],
    xs: &'a [Cochain],
    /// Positions each value must collect: `dim x_v + 1`.
    need: Vec<usize>,
    /// Index of the final occurrence of each value.
    last: Vec<usize>,
}

impl Cutter<'_> {
    fn face(&self, mask: u64) -> Simplex {
        self.sigma.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v).collect()
    }

    /// Parity of the surviving cuttings with interval `j` starting at `start`.
    fn count(&self, j: usize, start: usize, masks: &mut [u64], counts: &mut [usize]) -> bool {
        let m = self.sigma.len() - 1;
        let v = self.entries[j] as usize - 1;
        let final_interval = j + 1 == self.entries.len();
        let first_end = if final_interval { m } else { start };
        let mut parity = false;
        for end in first_end..=m {
            let len = end - start + 1;
            if counts[v] + len > self.need[v] {
                break;
            }
            let bits = (u64::MAX >> (63 - end)) & (u64::MAX << start);
            // Longer intervals keep any clash, so stop at the first one.
            if masks[v] & bits != 0 {
                break;
            }
            masks[v] |= bits;
            counts[v] += len;
            let closes = self.last[v] == j;
            let alive = !closes || (counts[v] == self.need[v] && self.xs[v].support.contains(&self.face(masks[v])));
            if alive {
                parity ^= if final_interval { true } else { self.count(j + 1, end, masks, counts) };
            }
            masks[v] &= !bits;
            counts[v] -= len;
        }
        parity
    }
}

/// Evaluates `u` on `xs`. The result has dimension `Σ dim x_i - degree(u)`.
/// A zero chain carries no degree; it evaluates to zero in dimension
/// `Σ dim x_i`.
pub fn evaluate(cx: &SimplicialComplex, u: &SurjChain, xs: &[Cochain]) -> Result<Cochain> {
    if xs.len() != u.arity() {
        return Err(Error::ArityMismatch { expected: u.arity(), got: xs.len() });
    }
    let total: i64 = xs.iter().map(Cochain::dim).sum();
    let Some(deg) = u.degree() else {
        return Ok(Cochain::zero(total));
    };
    let m = total - deg as i64;
    if m < 0 || m as usize > cx.dim() || xs.iter().any(Cochain::is_zero) {
        return Ok(Cochain::zero(m));
    }
    let need: Vec<usize> = xs.iter().map(|x| x.dim as usize + 1).collect();
    let terms: Vec<(&[u32], Vec<usize>)> = u
        .iter()
        .map(|t| {
            let e = t.entries();
            let mut last = vec![0; xs.len()];
            for (j, &v) in e.iter().enumerate() {
                last[v as usize - 1] = j;
            }
            (e, last)
        })
        .collect();
    let support: FormalSum<Simplex> = cx
        .simplices(m as usize)
        .par_iter()
        .filter(|sigma| {
            let mut coeff = false;
            for (entries, last) in &terms {
                let cutter = Cutter { entries, sigma, xs, need: need.clone(), last: last.clone() };
                let mut masks = vec![0u64; xs.len()];
                let mut counts = vec![0usize; xs.len()];
                coeff ^= cutter.count(0, 0, &mut masks, &mut counts);
            }
            coeff
        })
        .cloned()
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
    Ok(Cochain { dim: m, support })
}

/// `x ⌣_i y`, of dimension `dim x + dim y - i`.
pub fn cup_i(cx: &SimplicialComplex, x: &Cochain, y: &Cochain, i: usize) -> Result<Cochain> {
    evaluate(cx, &SurjChain::from_surjection(cup_string(i)), &[x.clone(), y.clone()])
}

/// A cocycle representing one basis element of `H^dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyClass {
    pub dim: usize,
    pub representative: Cochain,
    /// Position in the basis returned by [`cohomology`].
    pub index: usize,
}

/// A basis of `H^dim` together with what is needed to read off coordinates.
#[derive(Clone, Debug)]
pub struct CohomologyBasis {
    pub dim: usize,
    pub classes: Vec<CohomologyClass>,
    /// Columns: class representatives, then coboundaries of `(dim-1)`-simplices.
    span: BitMatrix,
}

impl CohomologyBasis {
    pub fn rank(&self) -> usize {
        self.classes.len()
    }

    /// Coordinates of the class of cocycle `z` in this basis.
    pub fn coordinates(&self, cx: &SimplicialComplex, z: &Cochain) -> Result<BitVector> {
        if z.is_zero() {
            return Ok(BitVector::zeros(self.rank()));
        }
        if z.dim != self.dim as i64 {
            return Err(Error::DimensionMismatch { expected: self.dim, got: z.dim.max(0) as usize });
        }
        if !coboundary(cx, z).is_zero() {
            return Err(Error::OutOfRange(format!("{z} is not a cocycle")));
        }
        let sol = self.span.solve_membership(&z.to_vector(cx))?.expect("cocycles lie in the span");
        Ok(BitVector::from_indices(self.rank(), sol.ones().filter(|&i| i < self.rank())))
    }
}

/// A basis of `H^d(cx; F2)`: kernel vectors of the coboundary that are
/// independent modulo the image, taken greedily in kernel-basis order.
pub fn cohomology(cx: &SimplicialComplex, d: usize) -> CohomologyBasis {
    let n = cx.simplices(d).len();
    let (_, kernel) = cx.coboundary_matrix(d).rank_and_kernel();
    let image: Vec<BitVector> = if d == 0 {
        Vec::new()
    } else {
        let prev = cx.coboundary_matrix(d - 1);
        (0..prev.cols()).map(|c| prev.column(c)).collect()
    };
    let mut cols = image.clone();
    cols.extend(kernel.iter().cloned());
    let pivots = BitMatrix::from_columns(n, &cols).pivot_columns();
    let reps: Vec<BitVector> =
        pivots.into_iter().filter(|&c| c >= image.len()).map(|c| kernel[c - image.len()].clone()).collect();
    let classes = reps
        .iter()
        .enumerate()
        .map(|(index, v)| CohomologyClass { dim: d, representative: Cochain::from_vector(cx, d, v), index })
        .collect();
    let mut span_cols = reps;
    span_cols.extend(image);
    CohomologyBasis { dim: d, classes, span: BitMatrix::from_columns(n, &span_cols) }
}

/// Ranks of `H^0 .. H^{dim}`.
pub fn betti_numbers(cx: &SimplicialComplex) -> Vec<usize> {
    (0..=cx.dim()).map(|d| cohomology(cx, d).rank()).collect()
}

/// `Sq^k x = x ⌣_{n-k} x` for an `n`-cochain `x`, requiring `k <= n`.
pub fn steenrod_square(cx: &SimplicialComplex, x: &Cochain, k: usize) -> Result<Cochain> {
    let n = x.dim;
    if n < 0 || k as i64 > n {
        return Err(Error::OutOfRange(format!("Sq^{k} undefined in dimension {n}")));
    }
    cup_i(cx, x, x, n as usize - k)
}

/// `Sq^k : H^n -> H^{n+k}` in the computed bases; one column per source class.
#[derive(Clone, Debug)]
pub struct SquareMatrix {
    pub n: usize,
    pub k: usize,
    pub source: CohomologyBasis,
    pub target: CohomologyBasis,
    pub columns: Vec<BitVector>,
}

pub fn square_matrix(cx: &SimplicialComplex, n: usize, k: usize) -> Result<SquareMatrix> {
    if k > n {
        return Err(Error::OutOfRange(format!("Sq^{k} undefined in dimension {n}")));
    }
    let source = cohomology(cx, n);
    let target = cohomology(cx, n + k);
    let columns = source
        .classes
        .iter()
        .map(|c| target.coordinates(cx, &steenrod_square(cx, &c.representative, k)?))
        .collect::<Result<Vec<_>>>()?;
    Ok(SquareMatrix { n, k, source, target, columns })
}

/// Each simplex is in the support with probability 1/2.
pub fn random_cochain(cx: &SimplicialComplex, d: usize, rng: &mut impl Rng) -> Cochain {
    let support = cx.simplices(d).iter().filter(|_| rng.gen_bool(0.5)).cloned().collect();
    Cochain { dim: d as i64, support }
}

/// Recomputes `Sq^k` on every basis class of `H^n` after adding random
/// coboundaries to the representative, and compares classes.
pub fn check_square_representatives(
    cx: &SimplicialComplex,
    n: usize,
    k: usize,
    perturbations: usize,
    rng: &mut impl Rng,
) -> Result<CheckReport> {
    let sq = square_matrix(cx, n, k)?;
    let mut r = CheckReport::new("SQ-REPRESENTATIVE").param("n", n).param("k", k);
    r.detail("classes", sq.source.rank());
    for (c, col) in sq.source.classes.iter().zip(&sq.columns) {
        for t in 0..perturbations {
            let shift = if n == 0 { Cochain::zero(0) } else { coboundary(cx, &random_cochain(cx, n - 1, rng)) };
            let rep = c.representative.sum(&shift)?;
            let got = sq.target.coordinates(cx, &steenrod_square(cx, &rep, k)?)?;
            if &got != col {
                r.fail(format!("class {} trial {t}", c.index), format!("{got:?} != {col:?}"));
            }
        }
    }
    Ok(r)
}

/// `d(x⌣_i y) + dx⌣_i y + x⌣_i dy + x⌣_{i-1}y + y⌣_{i-1}x = 0` on random
/// cochains of random dimensions, with `⌣_{-1} = 0`.
pub fn check_steenrod_coboundary(cx: &SimplicialComplex, i: usize, trials: usize, rng: &mut impl Rng) -> CheckReport {
    let start = std::time::Instant::now();
    let mut r = CheckReport::new("STEENROD-COBOUNDARY").param("i", i).param("trials", trials);
    let mut nonzero = 0;
    for t in 0..trials {
        let x = random_cochain(cx, rng.gen_range(0..=cx.dim()), rng);
        let y = random_cochain(cx, rng.gen_range(0..=cx.dim()), rng);
        let cup = |a: &Cochain, b: &Cochain, j: usize| cup_i(cx, a, b, j).expect("binary operation");
        let xy = cup(&x, &y, i);
        nonzero += usize::from(!xy.is_zero());
        let mut parts = vec![coboundary(cx, &xy), cup(&coboundary(cx, &x), &y, i), cup(&x, &coboundary(cx, &y), i)];
        if i >= 1 {
            parts.push(cup(&x, &y, i - 1));
            parts.push(cup(&y, &x, i - 1));
        }
        match cochain_sum(&parts) {
            Ok(s) if s.is_zero() => {}
            Ok(s) => r.fail(format!("trial {t}"), format!("x={x} y={y} residue={s}")),
            Err(e) => r.fail(format!("trial {t}"), e),
        }
    }
    r.detail("nonzero_products", nonzero);
    r.timed(start)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{delta, load};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn ind(s: &[u32]) -> Cochain {
        Cochain::indicator(s.to_vec())
    }

    fn chain(t: &str) -> SurjChain {
        SurjChain::parse(t).unwrap()
    }

    #[test]
    fn parse_examples() {
        let d2 = SimplicialComplex::parse("0 1 2").unwrap();
        assert_eq!((0..=2).map(|d| d2.simplices(d).len()).sum::<usize>(), 7);
        let c = SimplicialComplex::parse("# circle\n0 1\n1 2\n\n0 2  # last edge\n").unwrap();
        assert_eq!((c.simplices(0).len(), c.simplices(1).len(), c.dim()), (3, 3, 1));
        assert!(matches!(SimplicialComplex::parse("0 1\n1 x"), Err(Error::InvalidComplex { line: 2, .. })));
        assert!(matches!(SimplicialComplex::parse("0 1 1"), Err(Error::InvalidComplex { line: 1, .. })));
        assert!(SimplicialComplex::parse("# nothing").is_err());
        assert_eq!(SimplicialComplex::parse("2 0 1").unwrap(), d2);
    }

    #[test]
    fn coboundary_examples() {
        let d1 = delta(1);
        assert_eq!(coboundary(&d1, &ind(&[1])), ind(&[0, 1]));
        let rp2 = load("rp2").unwrap();
        let top = Cochain::new(&rp2, 2, rp2.simplices(2).iter().cloned()).unwrap();
        assert!(coboundary(&rp2, &top).is_zero());
        let d4 = delta(4);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..100 {
            let d = rng.gen_range(0..=3);
            let x = random_cochain(&d4, d, &mut rng);
            assert!(coboundary(&d4, &coboundary(&d4, &x)).is_zero());
        }
    }

    #[test]
    fn evaluate_examples() {
        let d1 = delta(1);
        let e = ind(&[0, 1]);
        // Front vertex then back face, and front face then back vertex.
        assert_eq!(evaluate(&d1, &chain("(1,2)"), &[ind(&[0]), e.clone()]).unwrap(), e);
        assert_eq!(evaluate(&d1, &chain("(1,2)"), &[e.clone(), ind(&[1])]).unwrap(), e);
        assert!(evaluate(&d1, &chain("(1,2)"), &[ind(&[1]), e.clone()]).unwrap().is_zero());
        assert!(evaluate(&d1, &chain("(1,2)"), &[e.clone(), ind(&[0])]).unwrap().is_zero());
        // Two distinct vertex indicators multiply to zero in dimension 0.
        let vv = evaluate(&d1, &chain("(1,2)"), &[ind(&[0]), ind(&[1])]).unwrap();
        assert!(vv.is_zero() && vv.dim() == 0);
        let x = ind(&[0, 1]);
        assert_eq!(evaluate(&d1, &chain("(1,2,1)"), &[x.clone(), x.clone()]).unwrap(), x);
        assert!(matches!(evaluate(&d1, &chain("(1,2,1)"), &[x]), Err(Error::ArityMismatch { .. })));
    }

    #[test]
    fn cup_zero_is_front_back() {
        for n in 1..=5 {
            let cx = delta(n);
            for p in 0..=n {
                for q in 0..=n - p {
                    for a in cx.simplices(p) {
                        for b in cx.simplices(q) {
                            let got = cup_i(&cx, &ind(a), &ind(b), 0).unwrap();
                            let joined = a.last() == b.first() && a.len() + b.len() - 1 == p + q + 1;
                            let expected = if joined {
                                let mut s = a.clone();
                                s.extend_from_slice(&b[1..]);
                                Cochain::indicator(s)
                            } else {
                                Cochain::zero((p + q) as i64)
                            };
                            assert_eq!(got, expected, "{a:?} {b:?}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn cup_above_dimension_vanishes() {
        let d2 = delta(2);
        let x = ind(&[0, 1]);
        let r = cup_i(&d2, &x, &x, 3).unwrap();
        assert!(r.is_zero());
        assert_eq!(r.dim(), -1);
    }

    #[test]
    fn betti_numbers_of_fixtures() {
        assert_eq!(betti_numbers(&load("rp2").unwrap()), vec![1, 1, 1]);
        assert_eq!(betti_numbers(&load("circle").unwrap()), vec![1, 1]);
        assert_eq!(betti_numbers(&delta(2)), vec![1, 0, 0]);
        assert_eq!(betti_numbers(&load("klein-bottle").unwrap()), vec![1, 2, 1]);
    }

    #[test]
    fn squares_on_fixtures() {
        let rp2 = load("rp2").unwrap();
        let sq1 = square_matrix(&rp2, 1, 1).unwrap();
        assert_eq!(sq1.columns, vec![BitVector::from_bools(&[true])]);
        let sq0 = square_matrix(&rp2, 1, 0).unwrap();
        assert_eq!(sq0.columns, vec![BitVector::from_bools(&[true])]);
        let circle = load("circle").unwrap();
        assert_eq!(square_matrix(&circle, 1, 0).unwrap().columns, vec![BitVector::from_bools(&[true])]);
        assert!(square_matrix(&delta(2), 1, 1).unwrap().columns.is_empty());
        assert!(square_matrix(&circle, 1, 2).is_err());
        let kb = load("klein-bottle").unwrap();
        assert!(square_matrix(&kb, 1, 1).unwrap().columns.iter().any(|c| !c.is_zero()));
    }

    #[test]
    fn top_square_is_cup_square() {
        let rp2 = load("rp2").unwrap();
        let a = &cohomology(&rp2, 1).classes[0].representative;
        assert_eq!(steenrod_square(&rp2, a, 1).unwrap(), cup_i(&rp2, a, a, 0).unwrap());
    }

    #[test]
    fn square_is_independent_of_representative() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for name in ["rp2", "klein-bottle", "circle"] {
            let cx = load(name).unwrap();
            for k in 0..=1 {
                let r = check_square_representatives(&cx, 1, k, 10, &mut rng).unwrap();
                assert!(r.pass, "{name}: {r}");
            }
        }
    }

    #[test]
    fn steenrod_coboundary_small() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let d3 = delta(3);
        for i in 0..=2 {
            let r = check_steenrod_coboundary(&d3, i, 20, &mut rng);
            assert!(r.pass, "{r}");
        }
    }
}
