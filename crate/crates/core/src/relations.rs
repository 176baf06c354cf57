//! Exact verification, inside the operad, of the identities satisfied by the
//! generators.
//!
//! Every identity between cochain operations is turned into an equation
//! between elements of the surjection operad: products become compositions
//! with `(1,2)`, inserted operations become partial compositions, and
//! reordered arguments become value relabellings. The differential terms
//! `dE(x) + Σ E(.., dx_i, ..)` collapse to the single operadic differential
//! `d E`, since the action on cochains is a chain map. Equality is exact over
//! F2.

use std::time::Instant;

use crate::generators::{cup_string, g_elements, generator};
use crate::report::CheckReport;
use crate::surjection::{SurjChain, Surjection, ValuePermutation};

/// Argument layout of `E^k_{m,n}(a_1..a_m; b_1..b_n)`: `a_i` is input `i`,
/// `b_j` is input `m+j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SlotConvention {
    pub m: usize,
    pub n: usize,
}

impl SlotConvention {
    pub fn new(m: usize, n: usize) -> Self {
        assert!(m + n >= 1, "empty slot convention");
        Self { m, n }
    }

    pub fn arity(&self) -> usize {
        self.m + self.n
    }

    pub fn a(&self, i: usize) -> u32 {
        i as u32
    }

    pub fn b(&self, j: usize) -> u32 {
        (self.m + j) as u32
    }

    /// Routing for `E(a_1..a_{m-1}; b) · a_m`: the composite's last input is `a_m`.
    fn trailing_a(&self) -> ValuePermutation {
        let mut img: Vec<u32> = (1..self.m).map(|i| self.a(i)).collect();
        img.extend((1..=self.n).map(|j| self.b(j)));
        img.push(self.a(self.m));
        perm(img)
    }

    /// Routing for `b_1 · E(a; b_2..b_n)`: the composite's first input is `b_1`.
    fn leading_b(&self) -> ValuePermutation {
        let mut img = vec![self.b(1)];
        img.extend((1..=self.m).map(|i| self.a(i)));
        img.extend((2..=self.n).map(|j| self.b(j)));
        perm(img)
    }

    /// Routing for `F(a_1..a_p; b_1..b_q) · G(a_{p+1}..a_m; b_{q+1}..b_n)`.
    fn split_product(&self, p: usize, q: usize) -> ValuePermutation {
        let mut img: Vec<u32> = (1..=p).map(|i| self.a(i)).collect();
        img.extend((1..=q).map(|j| self.b(j)));
        img.extend((p + 1..=self.m).map(|i| self.a(i)));
        img.extend((q + 1..=self.n).map(|j| self.b(j)));
        perm(img)
    }
}

fn perm(images: Vec<u32>) -> ValuePermutation {
    ValuePermutation::new(images).expect("routing is a permutation")
}

fn single(e: &[u32]) -> SurjChain {
    SurjChain::from_surjection(Surjection::new(e.to_vec()).expect("valid constant"))
}

fn cup(i: usize) -> SurjChain {
    SurjChain::from_surjection(cup_string(i))
}

/// `E^j_{m,n}` with the boundary conventions: `E^0_{1,0}` is the identity
/// `(1)`, every other element with an empty side (or negative `j`) is zero.
pub fn e_element(j: i64, m: usize, n: usize) -> SurjChain {
    if j < 0 || m == 0 {
        return SurjChain::zero(m + n);
    }
    if n == 0 {
        return if j == 0 && m == 1 { single(&[1]) } else { SurjChain::zero(m) };
    }
    generator(j as usize, m, n).chain
}

/// `T^e E^j_{p,q}` in natural input order `(a_1..a_p, b_1..b_q)`.
///
/// `T E_{p,q}(x; y) = E_{q,p}(y; x)`, so for odd `e` this is `E^j_{q,p}`
/// with its leading block of `q` values moved behind the `p` values.
pub fn twisted_element(e: usize, j: i64, p: usize, q: usize) -> SurjChain {
    if e % 2 == 0 {
        return e_element(j, p, q);
    }
    let swapped = e_element(j, q, p);
    if swapped.is_zero() {
        return SurjChain::zero(p + q);
    }
    swapped.relabel(&ValuePermutation::block_swap(q, p)).expect("arity p+q")
}

/// Where the twist sits in the quadratic term of the defining relation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwistPlacement {
    /// `E^i_{p,q}(a'; b') · (T^i E^{k-i})(a''; b'')`: the twist acts on the
    /// second factor with the exponent given by the first factor's index.
    /// This matches the twisting-cochain form of the relation and is the
    /// placement the generators satisfy.
    SecondFactor,
    /// `T^i E^{k-i}_{p,q}(a'; b') · E^i(a''; b'')`. Kept for comparison; the
    /// generators do not satisfy the relation in this form (the first
    /// failure is at `k = 1, m = n = 2`).
    FirstFactor,
}

/// Both sides of the relation for `E^k_{m,n}`, as elements of arity `m+n`
/// and degree `m+n+k-2`.
pub fn assemble_ehga_sides(k: usize, m: usize, n: usize) -> (SurjChain, SurjChain) {
    assemble_ehga_sides_with(k, m, n, TwistPlacement::SecondFactor)
}

pub fn assemble_ehga_sides_with(k: usize, m: usize, n: usize, twist: TwistPlacement) -> (SurjChain, SurjChain) {
    assert!(m >= 1 && n >= 1, "E^k_{{m,n}} needs m, n >= 1");
    let slots = SlotConvention::new(m, n);
    let arity = slots.arity();
    let ki = k as i64;
    let mul = cup(0);
    let mut lhs = SurjChain::zero(arity);
    let mut add = |c: SurjChain| lhs.add_assign(&c).expect("uniform arity");

    add(e_element(ki, m, n).differential());

    // Terms with one fewer a-input.
    let e_a = e_element(ki, m - 1, n);
    if !e_a.is_zero() {
        for i in 1..m {
            add(e_a.compose(i, &mul).unwrap());
        }
        add(mul.compose(2, &e_a).unwrap());
        add(mul.compose(1, &e_a).unwrap().relabel(&slots.trailing_a()).unwrap());
    }

    // Terms with one fewer b-input.
    let e_b = e_element(ki, m, n - 1);
    if !e_b.is_zero() {
        for i in 1..n {
            add(e_b.compose(m + i, &mul).unwrap());
        }
        add(mul.compose(2, &e_b).unwrap().relabel(&slots.leading_b()).unwrap());
        add(mul.compose(1, &e_b).unwrap());
    }

    // Quadratic terms with both factors having nonempty sides.
    for i in 0..=k {
        let (ii, rest) = (i as i64, (k - i) as i64);
        for p in 1..m {
            for q in 1..n {
                let (first, second) = match twist {
                    TwistPlacement::SecondFactor => (e_element(ii, p, q), twisted_element(i, rest, m - p, n - q)),
                    TwistPlacement::FirstFactor => (twisted_element(i, rest, p, q), e_element(ii, m - p, n - q)),
                };
                if first.is_zero() || second.is_zero() {
                    continue;
                }
                let product = mul.compose(1, &first).unwrap().compose(p + q + 1, &second).unwrap();
                add(product.relabel(&slots.split_product(p, q)).unwrap());
            }
        }
    }

    let mut rhs = e_element(ki - 1, m, n);
    rhs.add_assign(&twisted_element(1, ki - 1, m, n)).unwrap();
    (lhs, rhs)
}

fn compare(report: &mut CheckReport, label: &str, lhs: &SurjChain, rhs: &SurjChain) {
    let diff = lhs.sum(rhs).expect("same arity");
    report.part(label, diff.is_zero(), lhs, rhs, &diff);
}

/// Checks the defining relation of `E^k_{m,n}` exactly.
pub fn check_ehga(k: usize, m: usize, n: usize) -> CheckReport {
    let start = Instant::now();
    let (lhs, rhs) = assemble_ehga_sides(k, m, n);
    let mut r = CheckReport::new("EHGA").param("k", k).param("m", m).param("n", n);
    r.detail("lhs_terms", lhs.len());
    r.detail("rhs_terms", rhs.len());
    compare(&mut r, "relation", &lhs, &rhs);
    r.timed(start)
}

fn brace(l: usize) -> SurjChain {
    e_element(0, 1, l)
}

// An argument of the outer brace: a bare c, or b_i with a block of c's.
#[derive(Clone)]
enum Arg {
    C(usize),
    B(usize, Vec<usize>),
}

fn arrangements(m: usize, n: usize) -> Vec<Vec<Arg>> {
    fn rec(m: usize, n: usize, bi: usize, cj: usize, acc: &mut Vec<Arg>, out: &mut Vec<Vec<Arg>>) {
        if bi > m && cj > n {
            out.push(acc.clone());
            return;
        }
        if cj <= n {
            acc.push(Arg::C(cj));
            rec(m, n, bi, cj + 1, acc, out);
            acc.pop();
        }
        if bi <= m {
            for l in 0..=n + 1 - cj {
                acc.push(Arg::B(bi, (cj..cj + l).collect()));
                rec(m, n, bi + 1, cj + l, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(m, n, 1, 1, &mut Vec::new(), &mut out);
    out
}

/// Associativity of the braces:
/// `E_{1,n}(E_{1,m}(a; b); c) = Σ E_{1,·}(a; .., c, E_{1,l_i}(b_i; c..), c, ..)`.
///
/// Inputs are laid out as `a, b_1..b_m, c_1..c_n`.
pub fn assemble_hga_assoc_sides(m: usize, n: usize) -> (SurjChain, SurjChain) {
    let arity = 1 + m + n;
    let lhs = brace(n).compose(1, &brace(m)).unwrap();
    let mut rhs = SurjChain::zero(arity);
    for args in arrangements(m, n) {
        let mut c = brace(args.len());
        for (t, arg) in args.iter().enumerate().rev() {
            if let Arg::B(_, block) = arg {
                c = c.compose(t + 2, &brace(block.len())).unwrap();
            }
        }
        let mut images = vec![1u32];
        for arg in &args {
            match arg {
                Arg::C(j) => images.push((1 + m + j) as u32),
                Arg::B(i, block) => {
                    images.push((1 + i) as u32);
                    images.extend(block.iter().map(|j| (1 + m + j) as u32));
                }
            }
        }
        rhs.add_assign(&c.relabel(&perm(images)).unwrap()).unwrap();
    }
    (lhs, rhs)
}

pub fn check_hga_assoc(m: usize, n: usize) -> CheckReport {
    let start = Instant::now();
    let (lhs, rhs) = assemble_hga_assoc_sides(m, n);
    let mut r = CheckReport::new("HGA-ASSOC").param("m", m).param("n", n);
    r.detail("lhs_terms", lhs.len());
    compare(&mut r, "associativity", &lhs, &rhs);
    r.timed(start)
}

/// `outer ∘_slot inner` with composite input `j` sent to argument `order[j-1]`.
fn op(outer: &SurjChain, slot: usize, inner: &SurjChain, order: &[u32]) -> SurjChain {
    outer.compose(slot, inner).unwrap().relabel(&perm(order.to_vec())).unwrap()
}

fn total(chains: &[SurjChain]) -> SurjChain {
    let mut acc = SurjChain::zero(chains[0].arity());
    for c in chains {
        acc.add_assign(c).unwrap();
    }
    acc
}

/// The Hirsch formula `(ab)∪_1 c + a(b∪_1 c) + (a∪_1 c)b = 0` and the
/// left Hirsch formula, which holds up to the boundary of `(1,2,1,3,1)`.
pub fn check_remark1_identities() -> CheckReport {
    let start = Instant::now();
    let (mul, cup1) = (cup(0), cup(1));
    const ABC: [u32; 3] = [1, 2, 3];
    let mut r = CheckReport::new("REMARK1");

    let hirsch = total(&[op(&cup1, 1, &mul, &ABC), op(&mul, 2, &cup1, &ABC), op(&mul, 1, &cup1, &[1, 3, 2])]);
    compare(&mut r, "hirsch", &hirsch, &SurjChain::zero(3));

    let left = total(&[op(&cup1, 2, &mul, &ABC), op(&mul, 2, &cup1, &[2, 1, 3]), op(&mul, 1, &cup1, &ABC)]);
    compare(&mut r, "left-hirsch", &left, &single(&[1, 2, 1, 3, 1]).differential());
    r.timed(start)
}

/// The two relations satisfied by `G_{2,1}` and `G_{1,2}`:
///
/// `dG_{2,1}(a,b;c) = (a∪_1 b)∪_2 c + a∪_1(b∪_2 c) + (a∪_2 c)∪_1 b + E^1_{2,1}(a,b;c) + E^1_{2,1}(b,a;c)`
///
/// `dG_{1,2}(a;b,c) = a∪_2(b∪_1 c) + (a∪_2 b)∪_1 c + b∪_1(a∪_2 c) + E^1_{1,2}(a;b,c) + E^1_{1,2}(a;c,b)`
pub fn check_g_relations() -> CheckReport {
    let start = Instant::now();
    let (g12, g21) = g_elements();
    let (c1, c2) = (cup(1), cup(2));
    const ABC: [u32; 3] = [1, 2, 3];
    let mut r = CheckReport::new("G");

    let e21 = e_element(1, 2, 1);
    let rhs21 = total(&[
        op(&c2, 1, &c1, &ABC),
        op(&c1, 2, &c2, &ABC),
        op(&c1, 1, &c2, &[1, 3, 2]),
        e21.clone(),
        e21.relabel(&perm(vec![2, 1, 3])).unwrap(),
    ]);
    compare(&mut r, "G21", &SurjChain::from_surjection(g21).differential(), &rhs21);

    let e12 = e_element(1, 1, 2);
    let rhs12 = total(&[
        op(&c2, 2, &c1, &ABC),
        op(&c1, 1, &c2, &ABC),
        op(&c1, 2, &c2, &[2, 1, 3]),
        e12.clone(),
        e12.relabel(&perm(vec![1, 3, 2])).unwrap(),
    ]);
    compare(&mut r, "G12", &SurjChain::from_surjection(g12).differential(), &rhs12);
    r.timed(start)
}

/// Every term of `E^k_{p,q}` has complexity at most `k+2`.
pub fn check_filtration(k: usize, p: usize, q: usize) -> CheckReport {
    let start = Instant::now();
    let e = generator(k, p, q).chain;
    let max = e.max_complexity().unwrap_or(0);
    let mut r = CheckReport::new("FILTRATION").param("k", k).param("p", p).param("q", q);
    r.detail("max_complexity", max);
    r.detail("bound", k + 2);
    if max > k + 2 {
        let worst: Vec<String> = e.iter().filter(|u| u.complexity() > k + 2).map(|u| u.to_string()).collect();
        r.fail("complexity", format!("terms above bound: {}", worst.join(" + ")));
    }
    r.timed(start)
}
