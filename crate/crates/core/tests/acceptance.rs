//! One pass/fail line per acceptance criterion, at the stated tolerance and
//! time limit.

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use paralogic::analysis::{
    classify_ideal, classify_saturated, find_separating_consequence, lfi_witness, regression_incomparabilities,
    verify_saturated, verify_saturated_product, ClassificationReport, SearchBounds,
};
use paralogic::catalog::{compute_x, enumerate_godel_catalog, enumerate_luk_catalog, luk_single, named, saturated_product};
use paralogic::entailment::{degree_preserving_checks, entails_matrix, entails_product_def, evaluate_chain, Verdict};
use paralogic::formula::{
    discriminator_term, ft_star, godel_from_mv_terms, luk3_term, luk4_term, one_variable_terms, parse, ConsistencyOp,
};
use paralogic::random::{seeded, FormulaGen};
use paralogic::{Chain, Component, Elem, Formula, Limits, ProductMatrix};
use rand::Rng;

/// Failing verdicts seen so far and how many re-verified.
#[derive(Default)]
struct Tally {
    failing: usize,
    certified: usize,
}

impl Tally {
    fn note(&mut self, v: &Verdict, gamma: &[Formula], phi: &Formula) {
        if !v.holds {
            self.failing += 1;
            if v.certify(gamma, phi) {
                self.certified += 1;
            }
        }
    }

    fn report(&mut self, r: &ClassificationReport) {
        let mut ws = vec![&r.paraconsistent.witness, &r.explosion];
        for a in &r.audit {
            if let Some(s) = &a.separator {
                ws.extend([&s.holds_in, &s.fails_in]);
            }
        }
        if let Some(w) = &r.non_ideal_witness {
            ws.extend([&w.lower.holds_in, &w.lower.fails_in, &w.upper.holds_in, &w.upper.fails_in]);
        }
        if let Some(l) = &r.lfi {
            ws.extend(l.witnesses());
        }
        for w in ws {
            self.note(&w.verdict, &w.gamma, &w.phi);
        }
    }
}

struct Outcome {
    passed: bool,
    detail: String,
}

fn check(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn env(pairs: &[(&str, Elem)]) -> BTreeMap<String, Elem> {
    pairs.iter().map(|&(v, a)| (v.to_string(), a)).collect()
}

fn luk(top: Elem, a: Elem, b: Elem) -> Elem {
    (top as i32).min(top as i32 - a as i32 + b as i32) as Elem
}

fn term_tables() -> Outcome {
    let (x, y) = (Formula::var("x"), Formula::var("y"));
    let mut pairs = 0;
    let mut bad = 0;
    for (size, t) in [(3, luk3_term(x.clone(), y.clone())), (4, luk4_term(x.clone(), y.clone()))] {
        let chain = Chain::gv(size).unwrap();
        for a in chain.elements() {
            for b in chain.elements() {
                pairs += 1;
                bad += (evaluate_chain(&t, chain, &env(&[("x", a), ("y", b)])).unwrap() != luk(chain.top(), a, b)) as usize;
            }
        }
    }
    let (imp, neg) = godel_from_mv_terms(x, y);
    for n in 1..=7 {
        let chain = Chain::lv(n + 1).unwrap();
        for a in chain.elements() {
            for b in chain.elements() {
                let e = env(&[("x", a), ("y", b)]);
                let gi = if a <= b { chain.top() } else { b };
                let gn = if a == 0 { chain.top() } else { 0 };
                bad += (evaluate_chain(&imp, chain, &e).unwrap() != gi) as usize;
                bad += (evaluate_chain(&neg, chain, &e).unwrap() != gn) as usize;
            }
        }
    }
    check(pairs == 25 && bad == 0, format!("{pairs} GV pairs, {bad} mismatches"))
}

fn discriminator() -> Outcome {
    let t = discriminator_term(Formula::var("x"), Formula::var("y"), Formula::var("z"));
    let (mut triples, mut bad) = (0, 0);
    for n in 3..=8 {
        let chain = Chain::gv(n).unwrap();
        for a in chain.elements() {
            for b in chain.elements() {
                for c in chain.elements() {
                    triples += 1;
                    let want = if a == b { c } else { a };
                    bad += (evaluate_chain(&t, chain, &env(&[("x", a), ("y", b), ("z", c)])).unwrap() != want) as usize;
                }
            }
        }
    }
    check(bad == 0, format!("{triples} triples, {bad} mismatches"))
}

fn ft_definability(tally: &mut Tally) -> Outcome {
    let (x, y) = (Formula::var("x"), Formula::var("y"));
    let def = x.clone().imp(y.clone()).delta().and(x.inv().or(y));
    let mut bad = 0;
    for n in 3..=6 {
        let (gv, ft) = (Chain::gv(n).unwrap(), Chain::ft(n).unwrap());
        for a in gv.elements() {
            for b in gv.elements() {
                bad += (evaluate_chain(&def, gv, &env(&[("x", a), ("y", b)])).unwrap() != ft.ft_implies(a, b).unwrap()) as usize;
            }
        }
    }
    let lim = Limits::default();
    let mut rng = seeded(3);
    let mut disagree = 0;
    for n in [4, 5] {
        let ft = named(&format!("FT({n})")).unwrap();
        let target = ProductMatrix::single(Chain::gv(n).unwrap(), 1).unwrap();
        let gen = FormulaGen::ft(3, 3);
        for _ in 0..250 {
            let (g, phi) = gen.query(&mut rng, 2);
            let a = ft.entails(&g, &phi, &lim).unwrap();
            let (gs, ps): (Vec<Formula>, Formula) = (g.iter().map(ft_star).collect(), ft_star(&phi));
            let b = entails_matrix(&target, &gs, &ps, &lim).unwrap();
            tally.note(&a, &g, &phi);
            tally.note(&b, &gs, &ps);
            disagree += (a.holds != b.holds) as usize;
        }
    }
    check(
        bad == 0 && disagree == 0,
        format!("table mismatches {bad}, faithfulness disagreements {disagree} of 500"),
    )
}

fn example(tally: &mut Tally) -> Outcome {
    let lim = Limits::default();
    let alpha = parse("D(p <-> ~p)").unwrap();
    let beta = parse("~((p1 -> p2) | (p2 -> p3) | (p3 -> p4))").unwrap();
    let (j3, j4, j34) = (named("J3").unwrap(), named("J4").unwrap(), named("J3xJ4").unwrap());
    let mut ok = true;
    let facts = [
        (&j3, &alpha, false, Some("p = 1/2")),
        (&j4, &alpha, true, None),
        (&j3, &beta, true, None),
        (&j4, &beta, false, Some("p1 = 1, p2 = 2/3, p3 = 1/3, p4 = 0")),
    ];
    for (logic, f, holds, cx) in facts {
        let g = [f.clone()];
        let v = logic.entails(&g, &Formula::Bot, &lim).unwrap();
        tally.note(&v, &g, &Formula::Bot);
        ok &= v.holds == holds && v.counterexample.as_ref().map(|c| c.describe()).as_deref() == cx;
    }
    let bounds = SearchBounds::default();
    let logics = [&j3, &j4, &j34];
    let mut separated = 0;
    for a in logics {
        for b in logics {
            if a == b {
                continue;
            }
            if let Some(s) = find_separating_consequence(a, b, &bounds, &lim).unwrap() {
                tally.note(&s.holds_in.verdict, &s.holds_in.gamma, &s.holds_in.phi);
                tally.note(&s.fails_in.verdict, &s.fails_in.gamma, &s.fails_in.phi);
                separated += s.certify() as usize;
            }
        }
    }
    check(ok && separated == 6, format!("alpha/beta facts exact: {ok}, separated directions {separated} of 6"))
}

fn names(reports: &[ClassificationReport], pick: impl Fn(&ClassificationReport) -> Option<bool>) -> BTreeSet<String> {
    reports.iter().filter(|r| pick(r) == Some(true)).map(|r| r.label()).collect()
}

fn set(xs: &[&str]) -> BTreeSet<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

fn goedel_theorem(tally: &mut Tally) -> Outcome {
    let (bounds, lim) = (SearchBounds::default(), Limits::default());
    let mut ok = true;
    let mut detail = Vec::new();
    for (n, sat, ideal) in [(5, set(&["J3", "J4", "J3xJ4"]), set(&["J3", "J4"])), (6, set(&["J4"]), set(&["J4"]))] {
        let start = Instant::now();
        let c = enumerate_godel_catalog(n, 3).unwrap();
        let s = classify_saturated(&c, &bounds, &lim).unwrap();
        let t1 = start.elapsed();
        let start = Instant::now();
        let i = classify_ideal(&c, &bounds, &lim).unwrap();
        let t2 = start.elapsed();
        for r in &i {
            tally.report(r);
        }
        let fast = t1 < Duration::from_secs(300) && t2 < Duration::from_secs(300);
        ok &= names(&s, |r| r.saturated) == sat && names(&i, |r| r.ideal) == ideal && fast;
        detail.push(format!(
            "n = {n}: saturated {:?} ({:.1} s), ideal {:?} ({:.1} s)",
            names(&s, |r| r.saturated),
            t1.as_secs_f64(),
            names(&i, |r| r.ideal),
            t2.as_secs_f64()
        ));
    }
    check(ok, detail.join("; "))
}

fn luk_theorems(tally: &mut Tally) -> Outcome {
    let (bounds, lim) = (SearchBounds::default(), Limits::default());
    let mut ok = true;
    let mut detail = Vec::new();
    for i in [1, 2] {
        let reports = classify_ideal(&enumerate_luk_catalog(4, i).unwrap(), &bounds, &lim).unwrap();
        reports.iter().for_each(|r| tally.report(r));
        ok &= names(&reports, |r| r.ideal) == set(&["L(2,1)"]);
        detail.push(format!("n = 4, i = {i}: ideal {:?}", names(&reports, |r| r.ideal)));
    }
    // primes p | 6 with 2 ceil(3p/6) <= p
    let oracle: Vec<usize> = [2usize, 3].into_iter().filter(|&p| 2 * (3 * p).div_ceil(6) <= p).collect();
    let x = compute_x(6, 3).unwrap();
    ok &= x == oracle;
    let product = verify_saturated_product(6, 3, &x, &bounds, &lim).unwrap();
    tally.report(&product);
    ok &= product.saturated == Some(true);
    detail.push(format!("X(6,3) = {x:?}, product saturated {:?}", product.saturated));
    let l15 = verify_saturated(&enumerate_luk_catalog(15, 7).unwrap(), &luk_single(15, 7).unwrap(), &bounds, &lim).unwrap();
    tally.report(&l15);
    let explosive = l15.audit.iter().all(|a| !a.paraconsistent);
    ok &= l15.saturated == Some(true) && explosive;
    detail.push(format!("L(15,7) saturated {:?}, extensions explosive {explosive}", l15.saturated));
    check(ok, detail.join("; "))
}

fn standard(tally: &mut Tally) -> Outcome {
    let r = regression_incomparabilities(&Limits::default()).unwrap();
    let groups = ["P3", "P4", "P5", "P6", "P7", "P8", "P9", "P10", "Lemma"];
    let facts: Vec<_> = r.facts.iter().filter(|f| groups.contains(&f.group.as_str())).collect();
    for f in &facts {
        if !f.observed {
            tally.failing += 1;
            tally.certified += f.certified as usize;
        }
    }
    let passed = facts.iter().filter(|f| f.passed()).count();
    check(
        passed == facts.len() && facts.len() >= 16,
        format!("{passed} of {} facts reproduced", facts.len()),
    )
}

fn bridge(tally: &mut Tally) -> Outcome {
    let lim = Limits::default();
    let mut rng = seeded(8);
    let mut bad = 0;
    for k in 0..10_000 {
        let n = 3 + k % 5;
        let vars = rng.gen_range(1..=3);
        let (g, phi) = FormulaGen::godel(vars, 3).query(&mut rng, 2);
        let c = degree_preserving_checks(n, &g, &phi, &lim).unwrap();
        tally.note(&c.implication, &[], &paralogic::formula::conj(g.iter().cloned()).imp(phi.clone()));
        tally.note(&c.min_preservation, &g, &phi);
        bad += (c.implication.holds != c.min_preservation.holds) as usize;
    }
    let mut one = 0;
    for n in 3..=7 {
        let closure = one_variable_terms(&[Chain::gv(n).unwrap()], "p", 8).unwrap();
        let terms: Vec<&Formula> = closure.terms.iter().map(|t| &t.0).collect();
        for g in &terms {
            for phi in &terms {
                let c = degree_preserving_checks(n, &[(*g).clone()], phi, &lim).unwrap();
                one += 1;
                bad += (c.implication.holds != c.min_preservation.holds) as usize;
            }
        }
        bad += (!closure.saturated) as usize;
    }
    check(bad == 0, format!("10000 random and {one} one-variable queries, {bad} disagreements"))
}

fn product_definition(tally: &mut Tally) -> Outcome {
    // three copies of GV5~ with three variables need about 10^8 steps literally
    let lim = Limits::with_budget(2_000_000_000);
    let mut rng = seeded(9);
    let mut bad = 0;
    for _ in 0..10_000 {
        let k = rng.gen_range(1..=3);
        let comps = (0..k)
            .map(|_| {
                let size = rng.gen_range(2..=5);
                Component::new(Chain::gv(size).unwrap(), rng.gen_range(1..size) as Elem).unwrap()
            })
            .collect();
        let m = ProductMatrix::new(comps).unwrap();
        let (g, phi) = FormulaGen::godel(rng.gen_range(1..=3), 3).query(&mut rng, 2);
        let a = entails_product_def(&m, &g, &phi, &lim).unwrap();
        let b = entails_matrix(&m, &g, &phi, &lim).unwrap();
        tally.note(&a, &g, &phi);
        tally.note(&b, &g, &phi);
        bad += (a.holds != b.holds) as usize;
    }
    check(bad == 0, format!("10000 product queries, {bad} disagreements"))
}

fn lfi(tally: &mut Tally) -> Outcome {
    let lim = Limits::default();
    let mut failed = Vec::new();
    let mut count = 0;
    let mut run = |logic: paralogic::catalog::LogicDescriptor, op: ConsistencyOp, failed: &mut Vec<String>| {
        let w = lfi_witness(&logic, op, &lim).unwrap_or_else(|e| panic!("{}: {e}", logic));
        for x in w.witnesses() {
            tally.note(&x.verdict, &x.gamma, &x.phi);
        }
        if !w.confirmed {
            failed.push(logic.label());
        }
    };
    for n in 3..=7 {
        run(named(&format!("G<={n}~")).unwrap(), ConsistencyOp::Godel, &mut failed);
        count += 1;
    }
    for (n, i) in [(3, 1), (4, 1), (4, 2), (6, 1), (6, 3)] {
        run(saturated_product(n, i, &compute_x(n, i).unwrap()).unwrap(), ConsistencyOp::Luk { n, i }, &mut failed);
        count += 1;
    }
    run(luk_single(15, 7).unwrap(), ConsistencyOp::Luk { n: 15, i: 7 }, &mut failed);
    count += 1;
    check(failed.is_empty(), format!("{count} logics, failing: {failed:?}"))
}

#[test]
fn acceptance() {
    let mut tally = Tally::default();
    let mut results: Vec<(usize, Outcome, Duration, Duration)> = Vec::new();
    let mut timed = |k: usize, limit: u64, f: &mut dyn FnMut(&mut Tally) -> Outcome, tally: &mut Tally| {
        let start = Instant::now();
        let out = f(tally);
        results.push((k, out, start.elapsed(), Duration::from_secs(limit)));
    };
    timed(1, 1, &mut |_| term_tables(), &mut tally);
    timed(2, 1, &mut |_| discriminator(), &mut tally);
    timed(3, 30, &mut ft_definability, &mut tally);
    timed(4, 5, &mut example, &mut tally);
    timed(5, 600, &mut goedel_theorem, &mut tally);
    timed(6, 600, &mut luk_theorems, &mut tally);
    timed(7, 60, &mut standard, &mut tally);
    timed(8, 120, &mut bridge, &mut tally);
    timed(9, 120, &mut product_definition, &mut tally);
    timed(10, 30, &mut lfi, &mut tally);
    let mut all = true;
    for (k, out, took, limit) in &results {
        let pass = out.passed && took <= limit;
        all &= pass;
        println!(
            "criterion {k}: {} ({}; {:.2} s, limit {} s)",
            if pass { "PASS" } else { "FAIL" },
            out.detail,
            took.as_secs_f64(),
            limit.as_secs()
        );
    }
    let pass = tally.failing > 0 && tally.certified == tally.failing;
    all &= pass;
    println!(
        "criterion 11: {} ({} of {} failing verdicts re-verify)",
        if pass { "PASS" } else { "FAIL" },
        tally.certified,
        tally.failing
    );
    assert!(all);
}
