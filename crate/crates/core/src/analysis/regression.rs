//! Replays the separating facts behind the incomparability results: the
//! standard-algebra relations, the `GV5~` threshold matrices and the
//! `J3`, `J4`, `J3 x J4` example.

use serde::Serialize;

use super::query_text;
use crate::algebra::ProductMatrix;
use crate::catalog::named;
use crate::entailment::{decide_standard, entails_matrix, Limits, StandardClass, Verdict};
use crate::error::Result;
use crate::formula::{delta_set, indexed_var, parse, parse_list, star, tuple_characterizer, Formula, Star};

#[derive(Clone, Debug, Serialize)]
pub struct RegressionFact {
    /// The result the fact belongs to, such as `P5` or `alpha`.
    pub group: String,
    pub relation: String,
    pub query: String,
    pub expected: bool,
    pub observed: bool,
    /// The counterexample of a failing verdict re-verifies.
    pub certified: bool,
    /// Values of the counterexample, when the query fails.
    pub counterexample: Option<String>,
}

impl RegressionFact {
    pub fn passed(&self) -> bool {
        self.expected == self.observed && self.certified
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RegressionReport {
    pub facts: Vec<RegressionFact>,
}

impl RegressionReport {
    pub fn all_passed(&self) -> bool {
        self.facts.iter().all(RegressionFact::passed)
    }

    pub fn group(&self, name: &str) -> Vec<&RegressionFact> {
        self.facts.iter().filter(|f| f.group == name).collect()
    }
}

fn fact(group: &str, relation: String, gamma: &[Formula], phi: &Formula, expected: bool, v: &Verdict) -> RegressionFact {
    RegressionFact {
        group: group.to_string(),
        relation,
        query: query_text(gamma, phi),
        expected,
        observed: v.holds,
        certified: v.certify(gamma, phi),
        counterexample: v.counterexample.as_ref().map(|c| c.describe()),
    }
}

/// `(group, premises, conclusion, [(class, holds)])` for the standard
/// algebra.
const STANDARD: &[(&str, &str, &str, &[(StandardClass, bool)])] = {
    use StandardClass::*;
    &[
        ("P3", "p", "D p", &[(Exact1, true), (OpenPos, false)]),
        ("P4", "D(p <-> ~p)", "p", &[(AtHalf, true), (Exact1, false)]),
        ("P4", "p", "D p", &[(Exact1, true), (AtHalf, false)]),
        ("P5", "D(p <-> ~p) & p", "0", &[(OpenPos, true), (AtHalf, false)]),
        ("P5", "D(p <-> ~p)", "p", &[(AtHalf, true), (OpenPos, false)]),
        ("P6", "~D(p -> ~p)", "p", &[(AboveHalf, true), (OpenPos, false)]),
        ("P7", "D(p <-> ~p)", "p", &[(OpenNeg, true), (OpenPos, false)]),
        ("P7", "p", "~D(p -> ~p)", &[(OpenPos, true), (OpenNeg, false)]),
        ("P8", "p & ~p", "D(p <-> ~p)", &[(AtHalf, true), (OpenNeg, false)]),
        ("P9", "D(p <-> ~p)", "p", &[(AtHalf, true), (AboveHalf, false)]),
        ("P9", "p", "~D(p -> ~p)", &[(AboveHalf, true), (AtHalf, false)]),
        (
            "P9",
            "p & D(p -> ~p) & !D(~p -> p)",
            "0",
            &[(AboveHalf, true), (AtHalf, true), (AboveZero, false)],
        ),
        (
            "P9",
            "!!p & !D p",
            "p & ~p",
            &[(AboveZero, true), (AboveHalf, false), (AtHalf, false)],
        ),
        ("P10", "!!p", "p", &[(AboveZero, true), (OpenNeg, false)]),
    ]
};

/// Classes interpreted in `exact-1` by each translation.
const STARS: [(StandardClass, Star, &str); 3] = [
    (StandardClass::AboveHalf, Star::One, "star1"),
    (StandardClass::AtHalf, Star::Two, "star2"),
    (StandardClass::AboveZero, Star::Three, "star3"),
];

fn standard_facts(limits: &Limits, out: &mut Vec<RegressionFact>) -> Result<()> {
    for &(group, gamma, phi, cases) in STANDARD {
        let (gamma, phi) = (parse_list(gamma)?, parse(phi)?);
        for &(class, expected) in cases {
            let v = decide_standard(class, &gamma, &phi, limits)?;
            out.push(fact(group, v.label(), &gamma, &phi, expected, &v.verdict));
        }
    }
    Ok(())
}

/// Faithfulness of the translations into `exact-1`, and of `D` back, on
/// every displayed query.
fn translation_facts(limits: &Limits, out: &mut Vec<RegressionFact>) -> Result<()> {
    let mut seen = Vec::new();
    for &(_, gamma, phi, _) in STANDARD {
        if seen.contains(&(gamma, phi)) {
            continue;
        }
        seen.push((gamma, phi));
        let (gamma, phi) = (parse_list(gamma)?, parse(phi)?);
        let exact = decide_standard(StandardClass::Exact1, &gamma, &phi, limits)?.verdict;
        for (class, which, name) in STARS {
            let direct = decide_standard(class, &gamma, &phi, limits)?.verdict;
            let g: Vec<Formula> = gamma.iter().map(|f| star(which, f)).collect();
            let f = star(which, &phi);
            let translated = decide_standard(StandardClass::Exact1, &g, &f, limits)?.verdict;
            let mut x = fact("Lemma", format!("{} via {name}", class.relation()), &g, &f, direct.holds, &translated);
            x.certified &= direct.certify(&gamma, &phi);
            out.push(x);
            let (g, f) = (delta_set(&gamma), phi.clone().delta());
            let back = decide_standard(class, &g, &f, limits)?.verdict;
            out.push(fact("Lemma", format!("{} via D", class.relation()), &g, &f, exact.holds, &back));
        }
    }
    Ok(())
}

/// For `0 < i < j < 5` on `GV5~`: `F & p_i |- 0` holds at threshold `j`
/// and fails at `i`; `F & p_j |- p_i` fails at `j` and holds at `i`, where
/// `F` is true exactly at `p_k = k/4`.
fn threshold_facts(limits: &Limits, out: &mut Vec<RegressionFact>) -> Result<()> {
    let n = 5;
    let phi = tuple_characterizer(n)?;
    let at = |t: usize| ProductMatrix::single(crate::algebra::Chain::gv(n).expect("size"), t as u8);
    for i in 1..n - 1 {
        for j in i + 1..n {
            let (pi, pj) = (indexed_var("p", i), indexed_var("p", j));
            let cases = [
                (&pi, Formula::Bot, j, true),
                (&pi, Formula::Bot, i, false),
                (&pj, pi.clone(), j, false),
                (&pj, pi.clone(), i, true),
            ];
            for (premise, concl, t, expected) in cases {
                let m = at(t)?;
                let gamma = [phi.clone().and(premise.clone())];
                let v = entails_matrix(&m, &gamma, &concl, limits)?;
                let mut x = fact("GV5 thresholds", m.to_string(), &gamma, &concl, expected, &v);
                x.query = format!("F & {premise} |- {concl}");
                out.push(x);
            }
        }
    }
    Ok(())
}

/// `alpha = D(p <-> ~p)` and `beta = ~((p1 -> p2) | (p2 -> p3) | (p3 -> p4))`,
/// plus theorems telling `J3` and `J4` apart.
fn example_facts(limits: &Limits, out: &mut Vec<RegressionFact>) -> Result<()> {
    let alpha = parse("D(p <-> ~p)")?;
    let beta = parse("~((p1 -> p2) | (p2 -> p3) | (p3 -> p4))")?;
    let t3 = parse("D(p <-> ~p) | !(p <-> ~p)")?;
    let t4 = parse("~D(p <-> ~p)")?;
    let (j3, j4, j34) = (named("J3")?, named("J4")?, named("J3xJ4")?);
    let cases: [(&str, &crate::catalog::LogicDescriptor, Vec<Formula>, Formula, bool); 12] = [
        ("alpha", &j3, vec![alpha.clone()], Formula::Bot, false),
        ("alpha", &j4, vec![alpha.clone()], Formula::Bot, true),
        ("alpha", &j34, vec![alpha], Formula::Bot, true),
        ("beta", &j3, vec![beta.clone()], Formula::Bot, true),
        ("beta", &j4, vec![beta.clone()], Formula::Bot, false),
        ("beta", &j34, vec![beta], Formula::Bot, true),
        ("J3 theorem", &j3, Vec::new(), t3.clone(), true),
        ("J3 theorem", &j4, Vec::new(), t3.clone(), false),
        ("J3 theorem", &j34, Vec::new(), t3, false),
        ("J4 theorem", &j4, Vec::new(), t4.clone(), true),
        ("J4 theorem", &j3, Vec::new(), t4.clone(), false),
        ("J4 theorem", &j34, Vec::new(), t4, false),
    ];
    for (group, logic, gamma, phi, expected) in cases {
        let v = logic.entails(&gamma, &phi, limits)?;
        out.push(fact(group, logic.label(), &gamma, &phi, expected, &v));
    }
    Ok(())
}

/// Every displayed separating fact, with its observed verdict.
pub fn regression_incomparabilities(limits: &Limits) -> Result<RegressionReport> {
    let mut facts = Vec::new();
    standard_facts(limits, &mut facts)?;
    translation_facts(limits, &mut facts)?;
    threshold_facts(limits, &mut facts)?;
    example_facts(limits, &mut facts)?;
    Ok(RegressionReport { facts })
}
