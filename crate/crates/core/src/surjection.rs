//! The surjection operad over F2.
//!
//! A basis element of arity `n` and degree `d` is a string `u(1) .. u(n+d)`
//! hitting every value `1..=n` with no two equal neighbours. Strings with
//! equal neighbours are degenerate and identified with zero; every
//! operation here drops them as soon as they appear.

use std::fmt;

use crate::error::{Error, Result};
use crate::f2::FormalSum;

/// A nondegenerate surjection `(1..n+d) -> (1..n)` written as its value string.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Surjection {
    entries: Vec<u32>,
}

impl Surjection {
    /// Validates and wraps a value string.
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidSurjection { entries, rule: "empty string" });
        }
        if entries.contains(&0) {
            return Err(Error::InvalidSurjection { entries, rule: "entries must be positive" });
        }
        if entries.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidSurjection { entries, rule: "adjacent entries are equal" });
        }
        let arity = *entries.iter().max().unwrap() as usize;
        let mut seen = vec![false; arity];
        for &e in &entries {
            seen[e as usize - 1] = true;
        }
        if seen.contains(&false) {
            return Err(Error::InvalidSurjection { entries, rule: "not surjective onto 1..n" });
        }
        Ok(Self { entries })
    }

    /// Caller guarantees validity.
    pub(crate) fn from_valid(entries: Vec<u32>) -> Self {
        debug_assert!(Self::new(entries.clone()).is_ok(), "invalid surjection {entries:?}");
        Self { entries }
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn arity(&self) -> usize {
        *self.entries.iter().max().unwrap() as usize
    }

    pub fn degree(&self) -> usize {
        self.len() - self.arity()
    }

    /// Sum of single-entry deletions, keeping only nondegenerate surjective results.
    pub fn differential(&self) -> FormalSum<Surjection> {
        let mut counts = vec![0usize; self.arity() + 1];
        for &e in &self.entries {
            counts[e as usize] += 1;
        }
        let u = &self.entries;
        let mut out = FormalSum::zero();
        for i in 0..u.len() {
            if counts[u[i] as usize] == 1 {
                continue;
            }
            if i > 0 && i + 1 < u.len() && u[i - 1] == u[i + 1] {
                continue;
            }
            let mut w = Vec::with_capacity(u.len() - 1);
            w.extend_from_slice(&u[..i]);
            w.extend_from_slice(&u[i + 1..]);
            out.toggle(Surjection::from_valid(w));
        }
        out
    }

    /// Partial composition `self ∘_slot inner`.
    ///
    /// The values of `inner` are shifted to `slot..slot+arity(inner)-1` and the
    /// values of `self` above `slot` move up by `arity(inner)-1`. If `slot`
    /// occurs `r` times in `self`, the string of `inner` is cut into `r`
    /// consecutive blocks, neighbouring blocks sharing their boundary entry,
    /// and the blocks replace the occurrences in order. All such cuttings are
    /// summed.
    pub fn compose(&self, slot: usize, inner: &Surjection) -> Result<FormalSum<Surjection>> {
        let arity = self.arity();
        if slot == 0 || slot > arity {
            return Err(Error::SlotOutOfRange { slot, arity });
        }
        let k = slot as u32;
        let shift = inner.arity() as u32 - 1;
        let outer: Vec<u32> = self.entries.iter().map(|&e| if e > k { e + shift } else { e }).collect();
        let inner_vals: Vec<u32> = inner.entries.iter().map(|&e| e + k - 1).collect();
        let remaining = self.entries.iter().filter(|&&e| e == k).count();

        let mut out = FormalSum::zero();
        let mut buf = Vec::with_capacity(self.len() + inner.len() * remaining);
        splice(&outer, k, &inner_vals, 0, 0, remaining, &mut buf, &mut out);
        Ok(out)
    }

    /// Applies `sigma` to every entry.
    pub fn relabel(&self, sigma: &ValuePermutation) -> Result<Surjection> {
        if sigma.len() != self.arity() {
            return Err(Error::ArityMismatch { expected: self.arity(), got: sigma.len() });
        }
        Ok(Surjection::from_valid(self.entries.iter().map(|&e| sigma.apply(e)).collect()))
    }

    /// Largest number of value switches in the restriction to a pair of values.
    ///
    /// For each pair `i < j` the entries equal to `i` or `j` are read in
    /// order; the number of maximal constant blocks minus one is the pair's
    /// count. `(1,2)` has complexity 1, `(1,2,1,2)` has 3.
    pub fn complexity(&self) -> usize {
        let n = self.arity() as u32;
        let mut best = 0;
        for i in 1..=n {
            for j in i + 1..=n {
                let mut last = 0;
                let mut blocks = 0;
                for &e in &self.entries {
                    if (e == i || e == j) && e != last {
                        blocks += 1;
                        last = e;
                    }
                }
                best = best.max(blocks - 1);
            }
        }
        best
    }
}

// Walks `outer`, replacing each occurrence of `k` by a block of `inner`
// starting at `start`. Degenerate prefixes are abandoned immediately.
#[allow(clippy::too_many_arguments)]
fn splice(
    outer: &[u32],
    k: u32,
    inner: &[u32],
    pos: usize,
    start: usize,
    remaining: usize,
    buf: &mut Vec<u32>,
    out: &mut FormalSum<Surjection>,
) {
    let Some(&e) = outer.get(pos) else {
        out.toggle(Surjection::from_valid(buf.clone()));
        return;
    };
    let mark = buf.len();
    if e != k {
        if buf.last() != Some(&e) {
            buf.push(e);
            splice(outer, k, inner, pos + 1, start, remaining, buf, out);
        }
        buf.truncate(mark);
        return;
    }
    let ends = if remaining == 1 { inner.len() - 1..=inner.len() - 1 } else { start..=inner.len() - 1 };
    for end in ends {
        let block = &inner[start..=end];
        if buf.last() == Some(&block[0]) {
            continue;
        }
        buf.extend_from_slice(block);
        splice(outer, k, inner, pos + 1, end, remaining - 1, buf, out);
        buf.truncate(mark);
    }
}

impl fmt::Display for Surjection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Surjection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A permutation of the values `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ValuePermutation {
    images: Vec<u32>,
}

impl ValuePermutation {
    /// `images[j-1]` is the image of `j`.
    pub fn new(images: Vec<u32>) -> Result<Self> {
        let n = images.len() as u32;
        let mut seen = vec![false; images.len()];
        for &x in &images {
            if x == 0 || x > n || seen[x as usize - 1] {
                return Err(Error::NotAPermutation(images));
            }
            seen[x as usize - 1] = true;
        }
        Ok(Self { images })
    }

    pub fn identity(n: usize) -> Self {
        Self { images: (1..=n as u32).collect() }
    }

    pub fn transposition(n: usize, a: u32, b: u32) -> Result<Self> {
        let mut images: Vec<u32> = (1..=n as u32).collect();
        if a == 0 || b == 0 || a as usize > n || b as usize > n {
            return Err(Error::NotAPermutation(images));
        }
        images.swap(a as usize - 1, b as usize - 1);
        Ok(Self { images })
    }

    /// Moves a leading block of `first` values behind a trailing block of
    /// `second` values: `j -> second + j` for `j <= first`, `j -> j - first`
    /// otherwise.
    pub fn block_swap(first: usize, second: usize) -> Self {
        let (f, s) = (first as u32, second as u32);
        Self { images: (1..=f + s).map(|j| if j <= f { s + j } else { j - f }).collect() }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn apply(&self, value: u32) -> u32 {
        self.images[value as usize - 1]
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }
}

/// An F2 combination of surjections of one arity.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SurjChain {
    arity: usize,
    terms: FormalSum<Surjection>,
}

impl SurjChain {
    pub fn zero(arity: usize) -> Self {
        Self { arity, terms: FormalSum::zero() }
    }

    pub fn from_surjection(u: Surjection) -> Self {
        Self { arity: u.arity(), terms: FormalSum::singleton(u) }
    }

    /// Builds a chain from strings; they must share one arity and one degree.
    pub fn from_entries<I, E>(arity: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: Into<Vec<u32>>,
    {
        let mut sum = FormalSum::zero();
        for t in terms {
            sum.toggle(Surjection::new(t.into())?);
        }
        Self::from_terms(arity, sum)
    }

    pub fn from_terms(arity: usize, terms: FormalSum<Surjection>) -> Result<Self> {
        let mut degree = None;
        for u in &terms {
            if u.arity() != arity {
                return Err(Error::ArityMismatch { expected: arity, got: u.arity() });
            }
            match degree {
                None => degree = Some(u.degree()),
                Some(d) if d != u.degree() => return Err(Error::DegreeMismatch { expected: d, got: u.degree() }),
                _ => {}
            }
        }
        Ok(Self { arity, terms })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Common degree of the terms; `None` for the zero chain.
    pub fn degree(&self) -> Option<usize> {
        self.terms.first().map(Surjection::degree)
    }

    pub fn terms(&self) -> &FormalSum<Surjection> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn contains(&self, u: &Surjection) -> bool {
        self.terms.contains(u)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Surjection> {
        self.terms.iter()
    }

    pub fn differential(&self) -> SurjChain {
        let mut out = FormalSum::zero();
        for u in &self.terms {
            out += u.differential();
        }
        Self { arity: self.arity, terms: out }
    }

    /// `self ∘_slot inner`, bilinearly.
    pub fn compose(&self, slot: usize, inner: &SurjChain) -> Result<SurjChain> {
        if slot == 0 || slot > self.arity {
            return Err(Error::SlotOutOfRange { slot, arity: self.arity });
        }
        let mut out = FormalSum::zero();
        for u in &self.terms {
            for v in &inner.terms {
                out += u.compose(slot, v)?;
            }
        }
        Ok(Self { arity: self.arity + inner.arity - 1, terms: out })
    }

    pub fn relabel(&self, sigma: &ValuePermutation) -> Result<SurjChain> {
        if sigma.len() != self.arity {
            return Err(Error::ArityMismatch { expected: self.arity, got: sigma.len() });
        }
        let mut out = FormalSum::zero();
        for u in &self.terms {
            out.toggle(u.relabel(sigma)?);
        }
        Ok(Self { arity: self.arity, terms: out })
    }

    /// Sum of two chains of the same arity.
    pub fn sum(&self, other: &SurjChain) -> Result<SurjChain> {
        if self.arity != other.arity && !(self.is_zero() || other.is_zero()) {
            return Err(Error::ArityMismatch { expected: self.arity, got: other.arity });
        }
        let arity = if self.is_zero() { other.arity } else { self.arity };
        Ok(Self { arity, terms: self.terms.sum(&other.terms) })
    }

    /// Adds `other` in place; arities must agree unless one side is zero.
    pub fn add_assign(&mut self, other: &SurjChain) -> Result<()> {
        *self = self.sum(other)?;
        Ok(())
    }

    pub fn max_complexity(&self) -> Option<usize> {
        self.terms.iter().map(Surjection::complexity).max()
    }

    /// Parses `0` or `(a,b,..) + (c,..) + ..`. The arity of the result is
    /// the common arity of the terms (0 for the zero chain).
    pub fn parse(text: &str) -> Result<SurjChain> {
        let mut p = Parser { src: text.as_bytes(), pos: 0 };
        p.skip_ws();
        if p.peek() == Some(b'0') {
            p.pos += 1;
            p.skip_ws();
            if p.pos != p.src.len() {
                return Err(p.error("trailing input after 0"));
            }
            return Ok(SurjChain::zero(0));
        }
        let mut terms = Vec::new();
        loop {
            p.skip_ws();
            let at = p.pos;
            let entries = p.term()?;
            let u = Surjection::new(entries).map_err(|e| Error::Parse { pos: at, msg: e.to_string() })?;
            terms.push((at, u));
            p.skip_ws();
            match p.peek() {
                None => break,
                Some(b'+') => p.pos += 1,
                Some(_) => return Err(p.error("expected '+' or end of input")),
            }
        }
        let arity = terms[0].1.arity();
        let mut sum = FormalSum::zero();
        for (at, u) in terms {
            if u.arity() != arity {
                return Err(Error::Parse { pos: at, msg: format!("arity {} differs from {arity}", u.arity()) });
            }
            sum.toggle(u);
        }
        Self::from_terms(arity, sum).map_err(|e| Error::Parse { pos: 0, msg: e.to_string() })
    }
}

impl fmt::Display for SurjChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, u) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{u}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SurjChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SurjChain[{}]({self})", self.arity)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn error(&self, msg: &str) -> Error {
        Error::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", c as char)))
        }
    }

    fn int(&mut self) -> Result<u32> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| Error::Parse { pos: start, msg: "integer out of range".into() })
    }

    fn term(&mut self) -> Result<Vec<u32>> {
        self.expect(b'(')?;
        let mut entries = Vec::new();
        loop {
            self.skip_ws();
            entries.push(self.int()?);
            self.skip_ws();
            match self.peek() {
                Some(b',') => self.pos += 1,
                Some(b')') => {
                    self.pos += 1;
                    return Ok(entries);
                }
                _ => return Err(self.error("expected ',' or ')'")),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(e: &[u32]) -> Surjection {
        Surjection::new(e.to_vec()).unwrap()
    }

    fn chain(text: &str) -> SurjChain {
        SurjChain::parse(text).unwrap()
    }

    #[test]
    fn make_surjection_examples() {
        let u = s(&[1, 2, 1]);
        assert_eq!((u.arity(), u.degree()), (2, 1));
        assert!(matches!(
            Surjection::new(vec![1, 1, 2]),
            Err(Error::InvalidSurjection { rule: "adjacent entries are equal", .. })
        ));
        assert!(matches!(
            Surjection::new(vec![1, 3]),
            Err(Error::InvalidSurjection { rule: "not surjective onto 1..n", .. })
        ));
        assert!(Surjection::new(vec![0, 1]).is_err());
    }

    #[test]
    fn differential_examples() {
        assert_eq!(chain("(1,2,1)").differential(), chain("(1,2) + (2,1)"));
        assert!(chain("(1,2)").differential().is_zero());
        assert_eq!(chain("(1,2,1,2)").differential(), chain("(2,1,2) + (1,2,1)"));
    }

    #[test]
    fn compose_examples() {
        let c = |u: &[u32], k, v: &[u32]| {
            SurjChain::from_surjection(s(u)).compose(k, &SurjChain::from_surjection(s(v))).unwrap().to_string()
        };
        assert_eq!(c(&[1, 2], 1, &[1, 2]), "(1,2,3)");
        assert_eq!(c(&[1, 2, 1], 1, &[1, 2]), "(1,2,3,2) + (1,3,1,2)");
        assert_eq!(c(&[1, 2], 2, &[1, 2, 1]), "(1,2,3,2)");
        assert!(matches!(s(&[1, 2]).compose(3, &s(&[1])), Err(Error::SlotOutOfRange { slot: 3, arity: 2 })));
        assert!(s(&[1, 2]).compose(0, &s(&[1])).is_err());
    }

    #[test]
    fn compose_with_identity_is_trivial() {
        let id = SurjChain::from_surjection(s(&[1]));
        let u = chain("(1,2,1,3,1)");
        for k in 1..=3 {
            assert_eq!(u.compose(k, &id).unwrap(), u);
        }
        assert_eq!(id.compose(1, &u).unwrap(), u);
    }

    #[test]
    fn relabel_examples() {
        let swap = ValuePermutation::transposition(2, 1, 2).unwrap();
        assert_eq!(chain("(1,2,1)").relabel(&swap).unwrap(), chain("(2,1,2)"));
        let u = chain("(1,2,1,3,1) + (1,3,1,2,1)");
        assert_eq!(u.relabel(&ValuePermutation::identity(3)).unwrap(), u);
        let t23 = ValuePermutation::transposition(3, 2, 3).unwrap();
        assert_eq!(chain("(1,2,1,3,1)").relabel(&t23).unwrap(), chain("(1,3,1,2,1)"));
        assert!(matches!(chain("(1,2)").relabel(&t23), Err(Error::ArityMismatch { .. })));
    }

    #[test]
    fn block_swap_images() {
        assert_eq!(ValuePermutation::block_swap(2, 3).images(), &[4, 5, 1, 2, 3]);
        assert_eq!(ValuePermutation::block_swap(1, 1).images(), &[2, 1]);
        assert!(ValuePermutation::new(vec![1, 1]).is_err());
    }

    #[test]
    fn complexity_examples() {
        assert_eq!(s(&[1, 2]).complexity(), 1);
        assert_eq!(s(&[1, 2, 1, 2]).complexity(), 3);
        assert_eq!(s(&[1, 2, 1, 3, 1, 3, 2]).complexity(), 3);
        assert_eq!(s(&[1, 2, 1]).complexity(), 2);
        assert_eq!(s(&[1]).complexity(), 0);
    }

    #[test]
    fn printing_and_parsing() {
        assert_eq!(chain("(2,1) + (1,2)").to_string(), "(1,2) + (2,1)");
        assert!(chain("0").is_zero());
        assert_eq!(chain("(1,2,1)").to_string(), "(1,2,1)");
        assert_eq!(chain("  (1, 2,1)+(2,1,2) ").to_string(), "(1,2,1) + (2,1,2)");
        assert!(chain("(1,2) + (1,2)").is_zero());
    }

    #[test]
    fn parse_errors_carry_position() {
        assert!(matches!(SurjChain::parse("(1,2"), Err(Error::Parse { pos: 4, .. })));
        assert!(matches!(SurjChain::parse("(1,2) (2,1)"), Err(Error::Parse { pos: 6, .. })));
        assert!(matches!(SurjChain::parse("(1,2) + (1,2,3)"), Err(Error::Parse { pos: 8, .. })));
        assert!(matches!(SurjChain::parse("(1,1)"), Err(Error::Parse { pos: 0, .. })));
        assert!(SurjChain::parse("(1,2) + (1,2,1)").is_err());
        assert!(SurjChain::parse("0 + (1)").is_err());
        assert!(SurjChain::parse("").is_err());
    }
}
