//! Acceptance suite: one PASS/FAIL line per criterion, exact F2 equality
//! throughout. Exits nonzero if any criterion fails.

mod common;

use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use surjection::bar::{bar_basis, check_decomposition, check_hopf, check_steenrod_bar};
use surjection::fixtures::{delta, load};
use surjection::generators::{cup_string, e1_closed, e2_closed, generator};
use surjection::relations::{
    check_ehga, check_filtration, check_g_relations, check_hga_assoc, check_remark1_identities,
};
use surjection::report::CheckReport;
use surjection::simplicial::{
    betti_numbers, check_square_representatives, check_steenrod_coboundary, coboundary, evaluate, random_cochain,
    square_matrix, Cochain,
};
use surjection::{BitVector, SurjChain, Surjection, ValuePermutation};

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn all_pass(reports: &[CheckReport]) -> Result<(), String> {
    match reports.iter().find(|r| !r.pass) {
        None => Ok(()),
        Some(r) => Err(r.render(false)),
    }
}

fn chain(text: &str) -> SurjChain {
    SurjChain::parse(text).unwrap()
}

fn cup(i: usize) -> SurjChain {
    SurjChain::from_surjection(cup_string(i))
}

fn c1_cup_string_coboundary() -> Outcome {
    let swap = ValuePermutation::transposition(2, 1, 2).unwrap();
    for i in 1..=8 {
        let lower = cup(i - 1);
        let expected = lower.sum(&lower.relabel(&swap).unwrap()).unwrap();
        ensure(cup(i).differential() == expected, || format!("i={i}: d{} != {expected}", cup(i)))?;
    }
    Ok("1 <= i <= 8".into())
}

fn c2_golden_strings() -> Outcome {
    for q in 1..=8u32 {
        let mut e = vec![1];
        for j in 2..=q + 1 {
            e.extend([j, 1]);
        }
        let expected = SurjChain::from_surjection(Surjection::new(e).unwrap());
        ensure(generator(0, 1, q as usize).chain == expected, || format!("E^0_{{1,{q}}} != {expected}"))?;
    }
    let listed = [
        (2, 4, 5, vec![1, 5, 1, 6, 1, 7, 1, 7, 2, 7, 3, 7, 4, 7, 4, 8, 4, 9, 4]),
        (4, 3, 3, vec![1, 4, 1, 5, 1, 6, 1, 6, 2, 6, 2, 6, 3, 6, 3]),
    ];
    for (k, p, q, e) in listed {
        let u = Surjection::new(e).unwrap();
        ensure(generator(k, p, q).chain.contains(&u), || format!("E^{k}_{{{p},{q}}} lacks {u}"))?;
    }
    for k in 0..=6 {
        ensure(generator(k, 1, 1).chain == cup(k + 1), || format!("E^{k}_{{1,1}} != cup-{}", k + 1))?;
    }
    Ok("E^0_{1,q} for q <= 8, two listed strings, E^k_{1,1} for k <= 6".into())
}

fn c3_closed_forms() -> Outcome {
    for p in 1..=5 {
        for q in 1..=5 {
            let (g1, g2) = (generator(1, p, q).chain, generator(2, p, q).chain);
            ensure(g1 == e1_closed(p, q) && g1.len() == 1, || format!("E^1_{{{p},{q}}} = {g1}"))?;
            ensure(g2 == e2_closed(p, q) && g2.len() == q, || format!("E^2_{{{p},{q}}} = {g2}"))?;
        }
    }
    Ok("p, q <= 5".into())
}

fn c4_relation_in_operad() -> Outcome {
    let mut grid = Vec::new();
    for k in 0..=3 {
        for m in 1..=3 {
            for n in 1..=3 {
                grid.push((k, m, n));
            }
        }
    }
    for k in 0..=2 {
        for m in 1..=4 {
            for n in 1..=4 {
                if m == 4 || n == 4 {
                    grid.push((k, m, n));
                }
            }
        }
    }
    let reports: Vec<CheckReport> = grid.iter().map(|&(k, m, n)| check_ehga(k, m, n)).collect();
    all_pass(&reports)?;
    Ok(format!("{} parameter triples", reports.len()))
}

fn c5_hga_axioms() -> Outcome {
    let mut reports = Vec::new();
    for m in 1..=4 {
        for n in 1..=5 - m {
            reports.push(check_hga_assoc(m, n));
        }
    }
    let associator = cup(1).compose(1, &cup(1)).unwrap().sum(&cup(1).compose(2, &cup(1)).unwrap()).unwrap();
    ensure(associator == chain("(1,2,1,3,1) + (1,3,1,2,1)"), || format!("cup-1 associator = {associator}"))?;
    reports.push(check_remark1_identities());
    reports.push(check_g_relations());
    all_pass(&reports)?;
    Ok(format!("{} associativity cases, cup-1 associator, Hirsch formulas, G relations", reports.len() - 2))
}

fn c6_filtration() -> Outcome {
    let mut reports = Vec::new();
    for k in 0..=4 {
        for p in 1..=4 {
            for q in 1..=4 {
                reports.push(check_filtration(k, p, q));
            }
        }
        let top = generator(k, 1, 1).chain.max_complexity();
        ensure(top == Some(k + 2), || format!("E^{k}_{{1,1}} has complexity {top:?}"))?;
    }
    all_pass(&reports)?;
    Ok("k <= 4, p, q <= 4; bound attained at p = q = 1".into())
}

fn c7_chain_map() -> Outcome {
    let cx = delta(4);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut nonzero = 0;
    for trial in 0..500 {
        let n = rng.gen_range(1..=3u32);
        let len = if n == 1 { 1 } else { rng.gen_range(n as usize..=6) };
        let u = common::random_chain(&mut rng, n, len, 3);
        let xs: Vec<Cochain> = (0..n).map(|_| random_cochain(&cx, rng.gen_range(0..=3), &mut rng)).collect();
        let lhs = evaluate(&cx, &u.differential(), &xs).map_err(|e| e.to_string())?;
        let value = evaluate(&cx, &u, &xs).map_err(|e| e.to_string())?;
        let mut rhs = coboundary(&cx, &value);
        for i in 0..xs.len() {
            let mut ys = xs.clone();
            ys[i] = coboundary(&cx, &xs[i]);
            rhs = rhs.sum(&evaluate(&cx, &u, &ys).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        }
        let residue = lhs.sum(&rhs).map_err(|e| e.to_string())?;
        ensure(residue.is_zero(), || format!("trial {trial}: u={u}, residue {residue}"))?;
        nonzero += usize::from(!value.is_zero());
    }
    Ok(format!("500 trials on the 4-simplex, {nonzero} with nonzero value"))
}

fn c8_steenrod_coboundary() -> Outcome {
    let cx = delta(4);
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let reports: Vec<CheckReport> = (1..=3).map(|i| check_steenrod_coboundary(&cx, i, 100, &mut rng)).collect();
    all_pass(&reports)?;
    let nonzero: Vec<String> = reports.iter().map(|r| r.details[0].1.clone()).collect();
    Ok(format!("1 <= i <= 3, 100 trials each, nonzero products {}", nonzero.join("/")))
}

fn c9_topology() -> Outcome {
    let one = BitVector::from_bools(&[true]);
    let rp2 = load("rp2").map_err(|e| e.to_string())?;
    let circle = load("circle").map_err(|e| e.to_string())?;
    let betti = betti_numbers(&rp2);
    ensure(betti == vec![1, 1, 1], || format!("H*(RP^2) ranks {betti:?}"))?;
    let sq1 = square_matrix(&rp2, 1, 1).map_err(|e| e.to_string())?;
    ensure(sq1.columns == vec![one.clone()], || format!("Sq^1 on RP^2: {:?}", sq1.columns))?;
    for (name, cx) in [("RP^2", &rp2), ("S^1", &circle)] {
        let sq0 = square_matrix(cx, 1, 0).map_err(|e| e.to_string())?;
        ensure(sq0.columns == vec![one.clone()], || format!("Sq^0 on H^1({name}): {:?}", sq0.columns))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut reports = Vec::new();
    for cx in [&rp2, &circle] {
        for k in 0..=1 {
            reports.push(check_square_representatives(cx, 1, k, 10, &mut rng).map_err(|e| e.to_string())?);
        }
    }
    all_pass(&reports)?;
    Ok("H*(RP^2) = (1,1,1), Sq^1 iso, Sq^0 = id, representative independence".into())
}

fn c10_bar() -> Outcome {
    let mut reports = Vec::new();
    for name in ["delta2", "circle"] {
        let cx = load(name).map_err(|e| e.to_string())?;
        reports.push(check_hopf(&bar_basis(&cx, 3, None)));
        let t = bar_basis(&cx, 2, None);
        for i in 1..=2 {
            reports.push(check_steenrod_bar(i, &t));
            reports.push(check_decomposition(i, &t));
        }
    }
    all_pass(&reports)?;
    Ok("2-simplex and circle: Hopf at L=3, cup-1 and cup-2 at L=2".into())
}

fn c11_determinism() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for trial in 0..1000 {
        let n = rng.gen_range(2..=4u32);
        let len = rng.gen_range(n as usize..=8);
        let c = common::random_chain(&mut rng, n, len, 4);
        let printed = c.to_string();
        let parsed = SurjChain::parse(&printed).map_err(|e| format!("trial {trial}: {e}"))?;
        ensure(parsed.to_string() == printed && (c.is_zero() || parsed == c), || format!("trial {trial}: {printed}"))?;
    }
    let invocations: [&[&str]; 4] = [
        &["check", "all", "--max-k", "2", "--max-arity", "3"],
        &["sq", "--complex", "rp2", "--dim", "1", "--k", "1"],
        &["bar-check", "--complex", "circle", "--i", "1", "--max-len", "2"],
        &["generate", "--k", "2", "--p", "3", "--q", "3", "--tables"],
    ];
    for args in invocations {
        let mut outputs = Vec::new();
        for workers in ["1", "2", "4", "4"] {
            let out = Command::new(env!("CARGO_BIN_EXE_surj"))
                .args(args)
                .env("SURJ_WORKERS", workers)
                .output()
                .map_err(|e| e.to_string())?;
            ensure(out.status.success(), || format!("surj {} exited with {}", args.join(" "), out.status))?;
            outputs.push(out.stdout);
        }
        ensure(outputs.windows(2).all(|w| w[0] == w[1]), || format!("surj {} output varies", args.join(" ")))?;
    }
    Ok("1000 round trips; 4 commands identical across runs and 1, 2, 4 workers".into())
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("cup-string coboundary", Duration::from_secs(1), c1_cup_string_coboundary),
        ("golden strings", Duration::from_secs(10), c2_golden_strings),
        ("closed forms", Duration::from_secs(5), c3_closed_forms),
        ("generator relation in the operad", Duration::from_secs(300), c4_relation_in_operad),
        ("homotopy G-algebra axioms", Duration::from_secs(30), c5_hga_axioms),
        ("complexity filtration", Duration::from_secs(10), c6_filtration),
        ("chain-map property of the action", Duration::from_secs(120), c7_chain_map),
        ("cup-i coboundary formula", Duration::from_secs(120), c8_steenrod_coboundary),
        ("topology oracle", Duration::from_secs(10), c9_topology),
        ("bar construction", Duration::from_secs(120), c10_bar),
        ("determinism and round trip", Duration::from_secs(120), c11_determinism),
    ];
    let mut failed = 0;
    for (n, (title, budget, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let verdict = match &outcome {
            Ok(_) if elapsed > budget => Err(format!("took {elapsed:?}, budget {budget:?}")),
            other => other.clone(),
        };
        match verdict {
            Ok(note) => println!("criterion {:>2} PASS  {title}: {note} [{} ms]", n + 1, elapsed.as_millis()),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {title}: {why} [{} ms]", n + 1, elapsed.as_millis());
            }
        }
    }
    println!("acceptance: {} of 11 criteria pass", 11 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
