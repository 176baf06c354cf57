//! Truncated bar constructions of simplicial cochain algebras, with the
//! product and cup-i products induced by the generators `E^k_{p,q}`.
//!
//! Words are tensors of basis cochains (indicator functions of simplices).
//! A letter of cochain dimension `j` has bar degree `j - 1`; the bar
//! differential raises degree by one. The operations `E^k` act on a pair of
//! words through the operad: `E^k([a_1|..|a_m]; [b_1|..|b_n])` is
//! `E^k_{m,n}` evaluated on `a_1..a_m, b_1..b_n`, with `E^0([a];[]) = a`,
//! `E^0([];[b]) = b` and every other one-sided or empty pair sent to zero.
//!
//! The cup-i product of two words is the coalgebra extension of these
//! projections: its length-`r` part is the sum, over splittings of both
//! words into `r` consecutive pieces (no piece pair empty) and over
//! `i = i_1 + .. + i_r`, of `[c_1|..|c_r]` with `c_j = E^{i_j}(pair_j)`,
//! where `pair_j` is swapped when `i_1 + .. + i_{j-1}` is odd.

use std::collections::HashMap;
use std::fmt;
use std::sync::RwLock;

use rayon::prelude::*;

use crate::f2::FormalSum;
use crate::generators::generator;
use crate::report::CheckReport;
use crate::simplicial::{coboundary, cochain_sum, cup_i, evaluate, Cochain, Simplex, SimplicialComplex};
use crate::surjection::SurjChain;

#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BarWord(Vec<Simplex>);

impl BarWord {
    pub fn new(letters: Vec<Simplex>) -> Self {
        Self(letters)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn letters(&self) -> &[Simplex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `Σ (dim a_j - 1)`.
    pub fn degree(&self) -> i64 {
        self.0.iter().map(|s| s.len() as i64 - 2).sum()
    }

    pub fn split_at(&self, j: usize) -> (BarWord, BarWord) {
        (BarWord(self.0[..j].to_vec()), BarWord(self.0[j..].to_vec()))
    }

    pub fn concat(&self, other: &BarWord) -> BarWord {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        BarWord(v)
    }

    fn prepend(&self, letter: &Simplex) -> BarWord {
        let mut v = Vec::with_capacity(self.len() + 1);
        v.push(letter.clone());
        v.extend(self.0.iter().cloned());
        BarWord(v)
    }

    fn cochains(&self) -> Vec<Cochain> {
        self.0.iter().map(|s| Cochain::indicator(s.clone())).collect()
    }
}

impl fmt::Display for BarWord {
    /// `[0,1|1,2]`; the empty word is `[]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.0.iter().map(|s| s.iter().map(u32::to_string).collect::<Vec<_>>().join(",")).collect();
        write!(f, "[{}]", parts.join("|"))
    }
}

impl fmt::Debug for BarWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub type BarChain = FormalSum<BarWord>;
/// Elements of `B ⊗ B`.
pub type BarTensor = FormalSum<(BarWord, BarWord)>;

fn render_chain(c: &BarChain) -> String {
    if c.is_empty() {
        return "0".into();
    }
    c.iter().map(BarWord::to_string).collect::<Vec<_>>().join(" + ")
}

fn render_tensor(c: &BarTensor) -> String {
    if c.is_empty() {
        return "0".into();
    }
    c.iter().map(|(a, b)| format!("{a}⊗{b}")).collect::<Vec<_>>().join(" + ")
}

/// The operations `E^k` on pairs of words of a fixed complex, with caches.
pub struct EStructure {
    cx: SimplicialComplex,
    generators: RwLock<HashMap<(usize, usize, usize), SurjChain>>,
    projections: RwLock<HashMap<(usize, BarWord, BarWord), Cochain>>,
    cups: RwLock<HashMap<(usize, BarWord, BarWord), BarChain>>,
}

impl EStructure {
    pub fn new(cx: SimplicialComplex) -> Self {
        Self { cx, generators: RwLock::default(), projections: RwLock::default(), cups: RwLock::default() }
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.cx
    }

    fn generator(&self, k: usize, m: usize, n: usize) -> SurjChain {
        if let Some(g) = self.generators.read().unwrap().get(&(k, m, n)) {
            return g.clone();
        }
        let g = generator(k, m, n).chain;
        self.generators.write().unwrap().insert((k, m, n), g.clone());
        g
    }

    /// `E^k(α; β)` as a cochain.
    pub fn e_map(&self, k: usize, alpha: &BarWord, beta: &BarWord) -> Cochain {
        let key = (k, alpha.clone(), beta.clone());
        if let Some(c) = self.projections.read().unwrap().get(&key) {
            return c.clone();
        }
        let (m, n) = (alpha.len(), beta.len());
        let c = match (m, n) {
            (0, 0) => Cochain::zero(0),
            (1, 0) | (0, 1) if k == 0 => alpha.concat(beta).cochains().remove(0),
            (_, 0) | (0, _) => Cochain::zero(0),
            _ => {
                let mut xs = alpha.cochains();
                xs.extend(beta.cochains());
                evaluate(&self.cx, &self.generator(k, m, n), &xs).expect("arity m+n")
            }
        };
        self.projections.write().unwrap().insert(key, c.clone());
        c
    }

    /// `Σ_i [.. |d a_i| ..] + Σ_i [.. |a_i a_{i+1}| ..]`.
    pub fn bar_diff(&self, w: &BarWord) -> BarChain {
        let mut out = BarChain::zero();
        let ls = w.letters();
        for i in 0..ls.len() {
            for s in coboundary(&self.cx, &Cochain::indicator(ls[i].clone())).support() {
                let mut v = ls.to_vec();
                v[i] = s.clone();
                out.toggle(BarWord(v));
            }
        }
        for i in 0..ls.len().saturating_sub(1) {
            let prod = cup_i(&self.cx, &Cochain::indicator(ls[i].clone()), &Cochain::indicator(ls[i + 1].clone()), 0)
                .expect("binary operation");
            for s in prod.support() {
                let mut v = ls[..i].to_vec();
                v.push(s.clone());
                v.extend_from_slice(&ls[i + 2..]);
                out.toggle(BarWord(v));
            }
        }
        out
    }

    pub fn bar_diff_chain(&self, c: &BarChain) -> BarChain {
        c.iter().flat_map(|w| self.bar_diff(w)).collect()
    }

    /// `α ⌣_i β`; `⌣_0` is the product.
    pub fn cup_bar(&self, i: usize, alpha: &BarWord, beta: &BarWord) -> BarChain {
        if alpha.is_empty() && beta.is_empty() {
            return if i == 0 { BarChain::singleton(BarWord::empty()) } else { BarChain::zero() };
        }
        let key = (i, alpha.clone(), beta.clone());
        if let Some(c) = self.cups.read().unwrap().get(&key) {
            return c.clone();
        }
        let mut out = BarChain::zero();
        for p in 0..=alpha.len() {
            for q in 0..=beta.len() {
                if p == 0 && q == 0 {
                    continue;
                }
                let (a1, a2) = alpha.split_at(p);
                let (b1, b2) = beta.split_at(q);
                for i1 in 0..=i {
                    let head = self.e_map(i1, &a1, &b1);
                    if head.is_zero() {
                        continue;
                    }
                    let tail =
                        if i1 % 2 == 1 { self.cup_bar(i - i1, &b2, &a2) } else { self.cup_bar(i - i1, &a2, &b2) };
                    for s in head.support() {
                        for w in tail.iter() {
                            out.toggle(w.prepend(s));
                        }
                    }
                }
            }
        }
        self.cups.write().unwrap().insert(key, out.clone());
        out
    }

    /// Bilinear extension of `cup_bar` to chains; `i < 0` gives zero.
    pub fn cup_chain(&self, i: i64, a: &BarChain, b: &BarChain) -> BarChain {
        if i < 0 {
            return BarChain::zero();
        }
        let mut out = BarChain::zero();
        for x in a.iter() {
            for y in b.iter() {
                out += self.cup_bar(i as usize, x, y);
            }
        }
        out
    }
}

/// Deconcatenation coproduct.
pub fn deconcatenate(w: &BarWord) -> BarTensor {
    (0..=w.len()).map(|j| w.split_at(j)).collect()
}

pub fn deconcatenate_chain(c: &BarChain) -> BarTensor {
    c.iter().flat_map(deconcatenate).collect()
}

/// All words of length at most `max_len` over the simplices of a complex,
/// optionally bounded in total degree.
pub struct BarTruncation {
    pub e: EStructure,
    pub max_len: usize,
    pub max_deg: Option<i64>,
    pub basis: Vec<BarWord>,
}

pub fn bar_basis(cx: &SimplicialComplex, max_len: usize, max_deg: Option<i64>) -> BarTruncation {
    let letters: Vec<Simplex> = (0..=cx.dim()).flat_map(|d| cx.simplices(d).iter().cloned()).collect();
    let mut layer = vec![BarWord::empty()];
    let mut basis = layer.clone();
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| {
                letters.iter().map(move |l| {
                    let mut v = w.0.clone();
                    v.push(l.clone());
                    BarWord(v)
                })
            })
            .collect();
        basis.extend(layer.iter().cloned());
    }
    basis.retain(|w| max_deg.is_none_or(|d| w.degree() <= d));
    basis.sort();
    BarTruncation { e: EStructure::new(cx.clone()), max_len, max_deg, basis }
}

impl BarTruncation {
    pub fn contains(&self, w: &BarWord) -> bool {
        self.basis.binary_search(w).is_ok()
    }

    /// Whether every word of `d_B` of a basis word lies in the basis.
    pub fn is_closed(&self) -> bool {
        self.basis.par_iter().all(|w| self.e.bar_diff(w).iter().all(|v| self.contains(v)))
    }

    /// `α ⌣_i β` and whether all its words lie in the truncation.
    pub fn cup_bar(&self, i: usize, alpha: &BarWord, beta: &BarWord) -> (BarChain, bool) {
        let c = self.e.cup_bar(i, alpha, beta);
        let inside = c.iter().all(|w| self.contains(w));
        (c, inside)
    }

    /// Pairs of basis words with combined length at most `max_len`.
    pub fn pairs(&self) -> Vec<(BarWord, BarWord)> {
        let mut out = Vec::new();
        for a in &self.basis {
            for b in &self.basis {
                if a.len() + b.len() <= self.max_len {
                    out.push((a.clone(), b.clone()));
                }
            }
        }
        out
    }

    fn triples(&self) -> Vec<(BarWord, BarWord, BarWord)> {
        let mut out = Vec::new();
        for (a, b) in self.pairs() {
            for c in &self.basis {
                if a.len() + b.len() + c.len() <= self.max_len {
                    out.push((a.clone(), b.clone(), c.clone()));
                }
            }
        }
        out
    }
}

/// Runs `f` over `items` in parallel and records the failures in order.
fn run_part<T: Sync>(
    report: &mut CheckReport,
    label: &str,
    items: &[T],
    f: impl Fn(&T) -> Option<String> + Sync + Send,
) {
    let failures: Vec<String> = items.par_iter().filter_map(f).collect();
    report.detail(&format!("{label}_cases"), items.len());
    match failures.first() {
        None => report.part(label, true, "", "", "0"),
        Some(first) => report.fail(label, format!("{} of {} cases fail; first: {first}", failures.len(), items.len())),
    }
}

fn truncation_report(name: &str, t: &BarTruncation) -> CheckReport {
    let d = t.max_deg.map_or("none".to_string(), |d| d.to_string());
    CheckReport::new(name).param("L", t.max_len).param("D", d)
}

/// `d_B² = 0`, `μ` is a chain map, associative, unital and a coalgebra map.
pub fn check_hopf(t: &BarTruncation) -> CheckReport {
    let start = std::time::Instant::now();
    let e = &t.e;
    let mut r = truncation_report("HOPF", t);
    let mu = |a: &BarChain, b: &BarChain| e.cup_chain(0, a, b);
    let one = |w: &BarWord| BarChain::singleton(w.clone());

    run_part(&mut r, "dd", &t.basis, |w| {
        let dd = e.bar_diff_chain(&e.bar_diff(w));
        (!dd.is_empty()).then(|| format!("d_B d_B {w} = {}", render_chain(&dd)))
    });

    let pairs = t.pairs();
    run_part(&mut r, "chain_map", &pairs, |(a, b)| {
        let lhs = e.bar_diff_chain(&e.cup_bar(0, a, b));
        let rhs = mu(&e.bar_diff(a), &one(b)) + mu(&one(a), &e.bar_diff(b));
        (lhs != rhs).then(|| format!("{a}, {b}: {} vs {}", render_chain(&lhs), render_chain(&rhs)))
    });

    run_part(&mut r, "unit", &t.basis, |w| {
        let (l, rt) = (e.cup_bar(0, &BarWord::empty(), w), e.cup_bar(0, w, &BarWord::empty()));
        (l != one(w) || rt != one(w)).then(|| format!("{w}: {} / {}", render_chain(&l), render_chain(&rt)))
    });

    let triples = t.triples();
    run_part(&mut r, "associativity", &triples, |(a, b, c)| {
        let lhs = mu(&e.cup_bar(0, a, b), &one(c));
        let rhs = mu(&one(a), &e.cup_bar(0, b, c));
        (lhs != rhs).then(|| format!("{a}, {b}, {c}: {} vs {}", render_chain(&lhs), render_chain(&rhs)))
    });

    run_part(&mut r, "coalgebra_map", &pairs, |(a, b)| {
        let lhs = deconcatenate_chain(&e.cup_bar(0, a, b));
        let rhs = split_product(e, 0, a, b);
        (lhs != rhs).then(|| format!("{a}, {b}: {} vs {}", render_tensor(&lhs), render_tensor(&rhs)))
    });
    r.timed(start)
}

/// `Σ_k Σ (α'⌣_k β') ⊗ T^k(α''⌣_{i-k} β'')` over deconcatenations of both words.
fn split_product(e: &EStructure, i: usize, a: &BarWord, b: &BarWord) -> BarTensor {
    let mut out = BarTensor::zero();
    for p in 0..=a.len() {
        for q in 0..=b.len() {
            let (a1, a2) = a.split_at(p);
            let (b1, b2) = b.split_at(q);
            for k in 0..=i {
                let left = e.cup_bar(k, &a1, &b1);
                if left.is_empty() {
                    continue;
                }
                let right = if k % 2 == 1 { e.cup_bar(i - k, &b2, &a2) } else { e.cup_bar(i - k, &a2, &b2) };
                for x in left.iter() {
                    for y in right.iter() {
                        out.toggle((x.clone(), y.clone()));
                    }
                }
            }
        }
    }
    out
}

/// `E^j` extended linearly over a chain of word pairs.
fn e_on_pairs(e: &EStructure, j: i64, pairs: &FormalSum<(BarWord, BarWord)>) -> Result<Cochain, String> {
    if j < 0 {
        return Ok(Cochain::zero(0));
    }
    let parts: Vec<Cochain> = pairs.iter().map(|(a, b)| e.e_map(j as usize, a, b)).collect();
    cochain_sum(&parts).map_err(|err| err.to_string())
}

/// The twisting form of the relation for `E^i` on one pair, as a residue
/// that must vanish: `dE^i + E^i d + Σ E^j · T^j E^{i-j} + E^{i-1} + E^{i-1}T`.
pub fn twisting_residue(e: &EStructure, i: usize, a: &BarWord, b: &BarWord) -> Result<Cochain, String> {
    let cx = e.complex();
    let mut parts = vec![coboundary(cx, &e.e_map(i, a, b))];
    let d_pairs: FormalSum<(BarWord, BarWord)> = e
        .bar_diff(a)
        .into_iter()
        .map(|x| (x, b.clone()))
        .chain(e.bar_diff(b).into_iter().map(|y| (a.clone(), y)))
        .collect();
    parts.push(e_on_pairs(e, i as i64, &d_pairs)?);
    for p in 0..=a.len() {
        for q in 0..=b.len() {
            if (p == 0 && q == 0) || (p == a.len() && q == b.len()) {
                continue;
            }
            let (a1, a2) = a.split_at(p);
            let (b1, b2) = b.split_at(q);
            for j in 0..=i {
                let first = e.e_map(j, &a1, &b1);
                if first.is_zero() {
                    continue;
                }
                let second = if j % 2 == 1 { e.e_map(i - j, &b2, &a2) } else { e.e_map(i - j, &a2, &b2) };
                parts.push(cup_i(cx, &first, &second, 0).map_err(|err| err.to_string())?);
            }
        }
    }
    if i >= 1 {
        parts.push(e.e_map(i - 1, a, b));
        parts.push(e.e_map(i - 1, b, a));
    }
    cochain_sum(&parts).map_err(|err| err.to_string())
}

/// (a) the twisting relation for `E^i`; (b) the coboundary law
/// `d(α⌣_iβ) + dα⌣_iβ + α⌣_i dβ + α⌣_{i-1}β + β⌣_{i-1}α = 0`.
pub fn check_steenrod_bar(i: usize, t: &BarTruncation) -> CheckReport {
    let start = std::time::Instant::now();
    let e = &t.e;
    let mut r = truncation_report("STEENROD-BAR", t).param("i", i);
    let pairs = t.pairs();
    run_part(&mut r, "twisting", &pairs, |(a, b)| match twisting_residue(e, i, a, b) {
        Ok(c) if c.is_zero() => None,
        Ok(c) => Some(format!("{a}, {b}: residue {c}")),
        Err(err) => Some(format!("{a}, {b}: {err}")),
    });
    run_part(&mut r, "coboundary", &pairs, |(a, b)| {
        let (one_a, one_b) = (BarChain::singleton(a.clone()), BarChain::singleton(b.clone()));
        let ii = i as i64;
        let residue = e.bar_diff_chain(&e.cup_bar(i, a, b))
            + e.cup_chain(ii, &e.bar_diff(a), &one_b)
            + e.cup_chain(ii, &one_a, &e.bar_diff(b))
            + e.cup_chain(ii - 1, &one_a, &one_b)
            + e.cup_chain(ii - 1, &one_b, &one_a);
        (!residue.is_empty()).then(|| format!("{a}, {b}: residue {}", render_chain(&residue)))
    });
    r.timed(start)
}

/// Deconcatenation of `α⌣_iβ` against the split products of the pieces.
pub fn check_decomposition(i: usize, t: &BarTruncation) -> CheckReport {
    let start = std::time::Instant::now();
    let e = &t.e;
    let mut r = truncation_report("DECOMPOSITION", t).param("i", i);
    run_part(&mut r, "decomposition", &t.pairs(), |(a, b)| {
        let lhs = deconcatenate_chain(&e.cup_bar(i, a, b));
        let rhs = split_product(e, i, a, b);
        (lhs != rhs).then(|| format!("{a}, {b}: {} vs {}", render_tensor(&lhs), render_tensor(&rhs)))
    });
    r.timed(start)
}
