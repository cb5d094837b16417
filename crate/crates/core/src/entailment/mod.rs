//! Consequence relations decided by exhaustive evaluation.
//!
//! Assignments are enumerated in lexicographic order (first variable most
//! significant, each value a tuple over the components) and the first
//! counterexample is reported, whatever the number of workers.

mod program;
mod standard;

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{Chain, ChainKind, Elem, ProductMatrix};
use crate::error::{Error, Result};
use crate::formula::{conj, Formula};
use program::{Prepared, Program};

pub use standard::{decide_standard, StandardClass, StandardVerdict};

/// Value of each variable: one element per component.
pub type Assignment = BTreeMap<String, Vec<Elem>>;

pub const DEFAULT_BUDGET: u64 = 100_000_000;

const CHUNK: u128 = 1 << 12;

/// How an entailment search may spend its effort.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of node evaluations.
    pub budget: u64,
    pub parallel: bool,
}

impl Default for Limits {
    fn default() -> Limits {
        Limits {
            budget: DEFAULT_BUDGET,
            parallel: true,
        }
    }
}

impl Limits {
    pub fn with_budget(budget: u64) -> Limits {
        Limits {
            budget,
            ..Limits::default()
        }
    }

    pub fn sequential() -> Limits {
        Limits {
            parallel: false,
            ..Limits::default()
        }
    }
}

/// A refuting evaluation: every premise designated, the conclusion not.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub matrix: ProductMatrix,
    pub assignment: Assignment,
    pub premise_values: Vec<Vec<Elem>>,
    pub conclusion_value: Vec<Elem>,
}

impl Counterexample {
    /// Re-evaluates the query from scratch under this assignment.
    pub fn refutes(&self, gamma: &[Formula], phi: &Formula) -> bool {
        let check = || -> Result<bool> {
            for g in gamma {
                if !self.matrix.is_designated(&evaluate(g, &self.matrix, &self.assignment)?) {
                    return Ok(false);
                }
            }
            Ok(!self.matrix.is_designated(&evaluate(phi, &self.matrix, &self.assignment)?))
        };
        check().unwrap_or(false)
    }

    /// `p = 1/2, q = 0`, with tuples on proper products.
    pub fn describe(&self) -> String {
        let parts: Vec<String> = self
            .assignment
            .iter()
            .map(|(v, t)| format!("{v} = {}", self.matrix.tuple_label(t)))
            .collect();
        if parts.is_empty() {
            "(no variables)".into()
        } else {
            parts.join(", ")
        }
    }

    /// Values as rational labels, keyed by variable.
    pub fn labels(&self) -> BTreeMap<String, String> {
        self.assignment
            .iter()
            .map(|(v, t)| (v.clone(), self.matrix.tuple_label(t)))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub holds: bool,
    pub counterexample: Option<Counterexample>,
    /// Node evaluations spent; deterministic for a given query.
    pub steps: u64,
}

impl Verdict {
    fn holds(steps: u64) -> Verdict {
        Verdict {
            holds: true,
            counterexample: None,
            steps,
        }
    }

    fn fails(cx: Counterexample, steps: u64) -> Verdict {
        Verdict {
            holds: false,
            counterexample: Some(cx),
            steps,
        }
    }

    /// True when the verdict holds or its counterexample refutes the query.
    pub fn certify(&self, gamma: &[Formula], phi: &Formula) -> bool {
        match (&self.counterexample, self.holds) {
            (None, true) => true,
            (Some(cx), false) => cx.refutes(gamma, phi),
            _ => false,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.counterexample {
            None => write!(f, "holds"),
            Some(cx) => write!(f, "fails on {} at {}", cx.matrix, cx.describe()),
        }
    }
}

fn eval_tree(f: &Formula, chain: Chain, value: &dyn Fn(&str) -> Result<Elem>) -> Result<Elem> {
    Ok(match f {
        Formula::Var(v) => chain.check(value(v)?)?,
        Formula::Bot => 0,
        Formula::Top => chain.top(),
        Formula::Unary(op, a) => chain.unary_raw(*op, eval_tree(a, chain, value)?),
        Formula::Binary(op, a, b) => {
            if !chain.supports(*op) {
                return Err(Error::Unsupported {
                    connective: op.symbol().to_string(),
                    algebra: chain.to_string(),
                });
            }
            let (a, b) = (eval_tree(a, chain, value)?, eval_tree(b, chain, value)?);
            chain.binary_raw(*op, a, b)
        }
        Formula::Table(conn, args) => {
            let table = conn.restrict(chain)?;
            let mut idx = 0;
            for a in args {
                idx = idx * chain.size() + eval_tree(a, chain, value)? as usize;
            }
            table[idx]
        }
    })
}

/// Value of `f` on a single chain.
pub fn evaluate_chain(f: &Formula, chain: Chain, e: &BTreeMap<String, Elem>) -> Result<Elem> {
    eval_tree(f, chain, &|v| {
        e.get(v)
            .copied()
            .ok_or_else(|| Error::InvalidArgument(format!("no value for variable `{v}`")))
    })
}

/// Value of `f` on a product, componentwise.
pub fn evaluate(f: &Formula, m: &ProductMatrix, e: &Assignment) -> Result<Vec<Elem>> {
    m.components()
        .iter()
        .enumerate()
        .map(|(k, c)| {
            eval_tree(f, c.chain, &|v| {
                let t = e
                    .get(v)
                    .ok_or_else(|| Error::InvalidArgument(format!("no value for variable `{v}`")))?;
                t.get(k).copied().ok_or_else(|| {
                    Error::InvalidArgument(format!("value of `{v}` has too few components"))
                })
            })
        })
        .collect()
}

fn node_cost(program: &Program, components: usize) -> u128 {
    (program.len().max(1) * components) as u128
}

fn check_budget(evaluations: u128, cost: u128, limits: &Limits) -> Result<()> {
    let required = evaluations.saturating_mul(cost);
    if required > limits.budget as u128 {
        return Err(Error::Budget {
            required,
            budget: limits.budget,
        });
    }
    Ok(())
}

fn steps(evaluations: u128, cost: u128) -> u64 {
    evaluations.saturating_mul(cost).min(u64::MAX as u128) as u64
}

/// Searches `0..total` in chunks for the least index accepted by `probe`.
fn first_index<F>(total: u128, parallel: bool, probe: F) -> Option<(u128, Counterexample)>
where
    F: Fn(u128, u128) -> Option<(u128, Counterexample)> + Sync,
{
    let chunks = total.div_ceil(CHUNK);
    if !parallel || chunks <= 1 {
        return probe(0, total);
    }
    (0..chunks as u64).into_par_iter().find_map_first(|k| {
        let start = k as u128 * CHUNK;
        probe(start, (start + CHUNK).min(total))
    })
}

struct Searcher<'a> {
    program: &'a Program,
    matrix: &'a ProductMatrix,
    prepared: Vec<Prepared<'a>>,
}

impl<'a> Searcher<'a> {
    fn new(program: &'a Program, matrix: &'a ProductMatrix) -> Result<Searcher<'a>> {
        let prepared = matrix
            .chains()
            .into_iter()
            .map(|c| program.prepare(c))
            .collect::<Result<Vec<_>>>()?;
        Ok(Searcher {
            program,
            matrix,
            prepared,
        })
    }

    /// Digits of an assignment index, most significant first: variable 0
    /// component 0, variable 0 component 1, ...
    fn decode(&self, mut idx: u128, digits: &mut [Elem]) {
        let c = self.prepared.len();
        for pos in (0..digits.len()).rev() {
            let size = self.prepared[pos % c].chain.size() as u128;
            digits[pos] = (idx % size) as Elem;
            idx /= size;
        }
    }

    fn advance(&self, digits: &mut [Elem]) {
        let c = self.prepared.len();
        for pos in (0..digits.len()).rev() {
            if (digits[pos] as usize) + 1 < self.prepared[pos % c].chain.size() {
                digits[pos] += 1;
                return;
            }
            digits[pos] = 0;
        }
    }

    fn scan(&self, start: u128, end: u128) -> Option<(u128, Counterexample)> {
        let k = self.program.vars.len();
        let c = self.prepared.len();
        let mut digits = vec![0; k * c];
        let mut vals = vec![0; k];
        let mut slots: Vec<Vec<Elem>> = vec![vec![0; self.program.len()]; c];
        self.decode(start, &mut digits);
        let comps = self.matrix.components();
        for idx in start..end {
            let mut all_premises = true;
            let mut conclusion = true;
            for j in 0..c {
                for v in 0..k {
                    vals[v] = digits[v * c + j];
                }
                self.prepared[j].run(&vals, &mut slots[j]);
                let filter = comps[j].filter;
                if self.program.premises.iter().any(|&p| !filter.contains(slots[j][p])) {
                    all_premises = false;
                    break;
                }
                conclusion &= filter.contains(slots[j][self.program.conclusion]);
            }
            if all_premises && !conclusion {
                return Some((idx, self.counterexample(&digits, &slots)));
            }
            self.advance(&mut digits);
        }
        None
    }

    fn counterexample(&self, digits: &[Elem], slots: &[Vec<Elem>]) -> Counterexample {
        let c = self.prepared.len();
        let assignment = self
            .program
            .vars
            .iter()
            .enumerate()
            .map(|(v, name)| (name.clone(), digits[v * c..(v + 1) * c].to_vec()))
            .collect();
        let column = |node: usize| slots.iter().map(|s| s[node]).collect::<Vec<_>>();
        Counterexample {
            matrix: self.matrix.clone(),
            assignment,
            premise_values: self.program.premises.iter().map(|&p| column(p)).collect(),
            conclusion_value: column(self.program.conclusion),
        }
    }
}

/// `gamma |- phi` on the matrix, by enumerating every assignment into the
/// full product.
pub fn entails_matrix(m: &ProductMatrix, gamma: &[Formula], phi: &Formula, limits: &Limits) -> Result<Verdict> {
    let program = Program::compile(gamma, phi);
    let searcher = Searcher::new(&program, m)?;
    let k = program.vars.len() as u32;
    let total = m
        .element_count()
        .checked_pow(k)
        .unwrap_or(u128::MAX);
    let cost = node_cost(&program, m.components().len());
    check_budget(total, cost, limits)?;
    Ok(match first_index(total, limits.parallel, |s, e| searcher.scan(s, e)) {
        Some((idx, cx)) => Verdict::fails(cx, steps(idx + 1, cost)),
        None => Verdict::holds(steps(total, cost)),
    })
}

/// Validity on a matrix: consequence from no premises.
pub fn check_valid(m: &ProductMatrix, phi: &Formula, limits: &Limits) -> Result<Verdict> {
    entails_matrix(m, &[], phi, limits)
}

/// The logic of a family is the intersection of the member logics; the
/// first failing member supplies the counterexample.
pub fn entails_family(ms: &[ProductMatrix], gamma: &[Formula], phi: &Formula, limits: &Limits) -> Result<Verdict> {
    family_with(ms, limits, |m, lim| entails_matrix(m, gamma, phi, lim))
}

/// As [`entails_family`], deciding each member with [`entails_product_def`].
pub fn entails_family_componentwise(
    ms: &[ProductMatrix],
    gamma: &[Formula],
    phi: &Formula,
    limits: &Limits,
) -> Result<Verdict> {
    family_with(ms, limits, |m, lim| entails_product_def(m, gamma, phi, lim))
}

fn family_with(
    ms: &[ProductMatrix],
    limits: &Limits,
    decide: impl Fn(&ProductMatrix, &Limits) -> Result<Verdict>,
) -> Result<Verdict> {
    if ms.is_empty() {
        return Err(Error::InvalidArgument("empty matrix family".into()));
    }
    let mut spent = 0u64;
    for m in ms {
        let lim = Limits {
            budget: limits.budget.saturating_sub(spent),
            ..*limits
        };
        let v = decide(m, &lim)?;
        spent = spent.saturating_add(v.steps);
        if !v.holds {
            return Ok(Verdict { steps: spent, ..v });
        }
    }
    Ok(Verdict::holds(spent))
}

/// Consequence on a product read through tuples of evaluations: it fails
/// iff some tuple `(e_i)` designates every premise in every component and
/// misses the conclusion in one. Each component is searched on its own
/// chain, so the cost is a sum rather than a product.
pub fn entails_product_def(m: &ProductMatrix, gamma: &[Formula], phi: &Formula, limits: &Limits) -> Result<Verdict> {
    let program = Program::compile(gamma, phi);
    let k = program.vars.len() as u32;
    let cost = node_cost(&program, 1);
    let totals: Vec<u128> = m
        .components()
        .iter()
        .map(|c| (c.chain.size() as u128).checked_pow(k).unwrap_or(u128::MAX))
        .collect();
    let sum = totals.iter().fold(0u128, |a, &t| a.saturating_add(t));
    check_budget(sum, cost, limits)?;

    // per component: first evaluation designating the premises, and first
    // one that also misses the conclusion
    let mut firsts = Vec::new();
    for (comp, &total) in m.components().iter().zip(&totals) {
        let single = ProductMatrix::new(vec![*comp])?;
        let searcher = Searcher::new(&program, &single)?;
        let sat = first_index(total, limits.parallel, |s, e| searcher.scan_premises(s, e));
        let fail = first_index(total, limits.parallel, |s, e| searcher.scan(s, e));
        firsts.push((sat, fail));
    }
    let spent = steps(sum, cost);
    if firsts.iter().any(|(sat, _)| sat.is_none()) {
        return Ok(Verdict::holds(spent));
    }
    let Some(failing) = firsts.iter().position(|(_, fail)| fail.is_some()) else {
        return Ok(Verdict::holds(spent));
    };
    let mut assignment: Assignment = program.vars.iter().map(|v| (v.clone(), Vec::new())).collect();
    let mut premise_values = vec![Vec::new(); gamma.len()];
    let mut conclusion_value = Vec::new();
    for (j, (sat, fail)) in firsts.iter().enumerate() {
        let cx = if j == failing { &fail.as_ref().unwrap().1 } else { &sat.as_ref().unwrap().1 };
        for (v, t) in &cx.assignment {
            assignment.get_mut(v).unwrap().push(t[0]);
        }
        for (pv, t) in premise_values.iter_mut().zip(&cx.premise_values) {
            pv.push(t[0]);
        }
        conclusion_value.push(cx.conclusion_value[0]);
    }
    Ok(Verdict::fails(
        Counterexample {
            matrix: m.clone(),
            assignment,
            premise_values,
            conclusion_value,
        },
        spent,
    ))
}

impl Searcher<'_> {
    /// First evaluation of a single-component searcher designating every
    /// premise.
    fn scan_premises(&self, start: u128, end: u128) -> Option<(u128, Counterexample)> {
        let k = self.program.vars.len();
        let mut vals = vec![0; k];
        let mut slots = vec![vec![0; self.program.len()]];
        self.decode(start, &mut vals);
        let filter = self.matrix.components()[0].filter;
        for idx in start..end {
            self.prepared[0].run(&vals, &mut slots[0]);
            if self.program.premises.iter().all(|&p| filter.contains(slots[0][p])) {
                return Some((idx, self.counterexample(&vals, &slots)));
            }
            self.advance(&mut vals);
        }
        None
    }
}

/// Both decisions of the degree-preserving companion of `GV_n~`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeChecks {
    /// Validity of `gamma^ -> phi` on `<GV_n~, {1}>`.
    pub implication: Verdict,
    /// `e(phi) >= min e(gamma)` for every evaluation.
    pub min_preservation: Verdict,
}

/// Runs the implication check and the min-preservation scan separately.
pub fn degree_preserving_checks(n: usize, gamma: &[Formula], phi: &Formula, limits: &Limits) -> Result<DegreeChecks> {
    let chain = Chain::gv(n)?;
    let truth = ProductMatrix::single(chain, chain.top())?;
    let implication = check_valid(&truth, &conj(gamma.iter().cloned()).imp(phi.clone()), limits)?;

    let program = Program::compile(gamma, phi);
    let k = program.vars.len() as u32;
    let total = (n as u128).checked_pow(k).unwrap_or(u128::MAX);
    let cost = node_cost(&program, 1);
    check_budget(total, cost, limits)?;
    let prepared = program.prepare(chain)?;
    let scan = |start: u128, end: u128| -> Option<(u128, Counterexample)> {
        let mut vals = vec![0; k as usize];
        let mut slots = vec![0; program.len()];
        let mut idx = start;
        for pos in (0..vals.len()).rev() {
            vals[pos] = (idx % n as u128) as Elem;
            idx /= n as u128;
        }
        for idx in start..end {
            prepared.run(&vals, &mut slots);
            let floor = program.premises.iter().map(|&p| slots[p]).min().unwrap_or(chain.top());
            let value = slots[program.conclusion];
            if value < floor {
                let m = ProductMatrix::single(chain, floor).expect("floor above a value is positive");
                let cx = Counterexample {
                    matrix: m,
                    assignment: program.vars.iter().cloned().zip(vals.iter().map(|&a| vec![a])).collect(),
                    premise_values: program.premises.iter().map(|&p| vec![slots[p]]).collect(),
                    conclusion_value: vec![value],
                };
                return Some((idx, cx));
            }
            for pos in (0..vals.len()).rev() {
                if (vals[pos] as usize) + 1 < n {
                    vals[pos] += 1;
                    break;
                }
                vals[pos] = 0;
            }
        }
        None
    };
    let min_preservation = match first_index(total, limits.parallel, scan) {
        Some((idx, cx)) => Verdict::fails(cx, steps(idx + 1, cost)),
        None => Verdict::holds(steps(total, cost)),
    };
    Ok(DegreeChecks {
        implication,
        min_preservation,
    })
}

/// `gamma |- phi` in the degree-preserving companion of `GV_n~`.
///
/// The counterexample lives on `<GV_n~, F_t>` with `t` the least premise
/// value, which designates every premise and misses the conclusion.
pub fn entails_degree_preserving(n: usize, gamma: &[Formula], phi: &Formula, limits: &Limits) -> Result<Verdict> {
    let checks = degree_preserving_checks(n, gamma, phi, limits)?;
    let (a, b) = (&checks.implication, &checks.min_preservation);
    let same_point = match (&a.counterexample, &b.counterexample) {
        (Some(x), Some(y)) => x.assignment == y.assignment,
        (None, None) => true,
        _ => false,
    };
    if a.holds != b.holds || !same_point {
        return Err(Error::Internal(format!(
            "degree-preserving checks disagree on GV{n}~: implication {a}, min-preservation {b}"
        )));
    }
    Ok(checks.min_preservation)
}

/// The truth-preserving matrix `<GV_n~, {1}>`.
pub fn truth_matrix(n: usize) -> Result<ProductMatrix> {
    let chain = Chain::gv(n)?;
    ProductMatrix::single(chain, chain.top())
}

/// All matrices `<GV_n~, F_t>`, whose intersection is the degree-preserving
/// companion.
pub fn degree_family(n: usize) -> Result<Vec<ProductMatrix>> {
    let chain = Chain::new(ChainKind::GodelInv, n)?;
    (1..n as Elem).map(|t| ProductMatrix::single(chain, t)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{p, parse, parse_list, q};

    fn single(n: usize, t: Elem) -> ProductMatrix {
        ProductMatrix::single(Chain::gv(n).unwrap(), t).unwrap()
    }

    fn at(v: &[(&str, Elem)]) -> BTreeMap<String, Elem> {
        v.iter().map(|(k, a)| (k.to_string(), *a)).collect()
    }

    #[test]
    fn evaluation_examples() {
        let c = Chain::gv(5).unwrap();
        let f = parse("D(p <-> ~p)").unwrap();
        assert_eq!(evaluate_chain(&f, c, &at(&[("p", 2)])).unwrap(), 4);
        assert_eq!(evaluate_chain(&f, c, &at(&[("p", 1)])).unwrap(), 0);
        assert_eq!(evaluate_chain(&Formula::Top, c, &at(&[])).unwrap(), 4);
        assert!(evaluate_chain(&p(), c, &at(&[])).is_err());
        assert!(evaluate_chain(&p(), c, &at(&[("p", 9)])).is_err());
        assert!(matches!(
            evaluate_chain(&parse("p =>L q").unwrap(), c, &at(&[("p", 0), ("q", 0)])),
            Err(Error::Unsupported { .. })
        ));
    }

    #[test]
    fn j3_j4_alpha() {
        let alpha = parse_list("D(p <-> ~p)").unwrap();
        let j3 = single(3, 1);
        let j4 = ProductMatrix::single(Chain::lv(4).unwrap(), 1).unwrap();
        let lim = Limits::default();
        assert!(entails_matrix(&j4, &alpha, &Formula::Bot, &lim).unwrap().holds);
        let v = entails_matrix(&j3, &alpha, &Formula::Bot, &lim).unwrap();
        assert!(!v.holds);
        let cx = v.counterexample.as_ref().unwrap();
        assert_eq!(cx.assignment["p"], vec![1]);
        assert_eq!(cx.describe(), "p = 1/2");
        assert!(v.certify(&alpha, &Formula::Bot));
    }

    #[test]
    fn reflexivity_and_budget() {
        let m = single(5, 2);
        let f = parse("p & ~q -> D r").unwrap();
        assert!(entails_matrix(&m, std::slice::from_ref(&f), &f, &Limits::default()).unwrap().holds);
        let err = entails_matrix(&m, std::slice::from_ref(&f), &f, &Limits::with_budget(10)).unwrap_err();
        assert!(matches!(err, Error::Budget { .. }));
    }

    #[test]
    fn first_counterexample_is_lexicographic() {
        // p, ~p |- q fails first at p = 1/2, q = 0 on GV5~ with F_{1/2}
        let m = single(5, 2);
        let gamma = parse_list("p, ~p").unwrap();
        for lim in [Limits::sequential(), Limits::default()] {
            let v = entails_matrix(&m, &gamma, &q(), &lim).unwrap();
            let cx = v.counterexample.unwrap();
            assert_eq!(cx.assignment["p"], vec![2]);
            assert_eq!(cx.assignment["q"], vec![0]);
            // three nodes: p, ~p, q
            assert_eq!(v.steps, (2 * 5 + 1) * 3);
        }
    }

    #[test]
    fn parallel_agrees_with_sequential() {
        let m = ProductMatrix::new(vec![
            Component::new(Chain::gv(5).unwrap(), 2).unwrap(),
            Component::new(Chain::gv(4).unwrap(), 1).unwrap(),
        ])
        .unwrap();
        let gamma = parse_list("p | q, ~r -> s").unwrap();
        let phi = parse("D(s | ~p) | r").unwrap();
        let a = entails_matrix(&m, &gamma, &phi, &Limits::sequential()).unwrap();
        let b = entails_matrix(&m, &gamma, &phi, &Limits::default()).unwrap();
        assert_eq!(a, b);
    }

    use crate::algebra::Component;

    #[test]
    fn product_definition_beta() {
        let beta = vec![parse("~((p1 -> p2) | (p2 -> p3) | (p3 -> p4))").unwrap()];
        let j3 = Component::new(Chain::gv(3).unwrap(), 1).unwrap();
        let j4 = Component::new(Chain::gv(4).unwrap(), 1).unwrap();
        let both = ProductMatrix::new(vec![j3, j4]).unwrap();
        let lim = Limits::default();
        assert!(entails_product_def(&both, &beta, &Formula::Bot, &lim).unwrap().holds);
        let v = entails_product_def(&ProductMatrix::new(vec![j4]).unwrap(), &beta, &Formula::Bot, &lim).unwrap();
        assert!(!v.holds && v.certify(&beta, &Formula::Bot));
        assert!(entails_matrix(&both, &beta, &Formula::Bot, &lim).unwrap().holds);
    }

    #[test]
    fn product_definition_counterexample_refutes() {
        let m = ProductMatrix::new(vec![
            Component::new(Chain::gv(5).unwrap(), 2).unwrap(),
            Component::new(Chain::gv(3).unwrap(), 1).unwrap(),
        ])
        .unwrap();
        let gamma = parse_list("p, ~p").unwrap();
        let v = entails_product_def(&m, &gamma, &q(), &Limits::default()).unwrap();
        assert!(!v.holds);
        assert!(v.certify(&gamma, &q()));
    }

    #[test]
    fn family_semantics() {
        let fam = degree_family(5).unwrap();
        let gamma = parse_list("p, ~p").unwrap();
        let v = entails_family(&fam, &gamma, &q(), &Limits::default()).unwrap();
        assert!(!v.holds);
        assert_eq!(v.counterexample.as_ref().unwrap().matrix, single(5, 1));
        let one = entails_family(&[single(5, 2)], &gamma, &q(), &Limits::default()).unwrap();
        let direct = entails_matrix(&single(5, 2), &gamma, &q(), &Limits::default()).unwrap();
        assert_eq!(one, direct);
        assert!(entails_family(&[], &gamma, &q(), &Limits::default()).is_err());
    }

    #[test]
    fn degree_preserving_examples() {
        let lim = Limits::default();
        let v = entails_degree_preserving(5, &parse_list("p, ~p").unwrap(), &q(), &lim).unwrap();
        let cx = v.counterexample.as_ref().unwrap();
        // the least refuting point is p = 1/4; p = 1/2 also refutes
        assert_eq!((cx.assignment["p"][0], cx.assignment["q"][0]), (1, 0));
        assert_eq!(cx.matrix, single(5, 1));
        assert!(v.certify(&parse_list("p, ~p").unwrap(), &q()));
        assert!(entails_degree_preserving(5, &[p(), q()], &p().and(q()), &lim).unwrap().holds);
        let v = entails_degree_preserving(5, &[p()], &p().delta(), &lim).unwrap();
        assert_eq!(v.counterexample.unwrap().assignment["p"], vec![1]);
        assert!(entails_degree_preserving(5, &[], &Formula::Top, &lim).unwrap().holds);
    }

    #[test]
    fn validity_examples() {
        let nfp = parse("~D(p <-> ~p)").unwrap();
        let lim = Limits::default();
        assert!(check_valid(&single(4, 3), &nfp, &lim).unwrap().holds);
        let v = check_valid(&single(3, 2), &nfp, &lim).unwrap();
        assert_eq!(v.counterexample.unwrap().assignment["p"], vec![1]);
        assert!(check_valid(&single(6, 1), &parse("0 -> p").unwrap(), &lim).unwrap().holds);
    }
}
