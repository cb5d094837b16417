//! Paraconsistency, explosion, formal inconsistency, separating queries and
//! the saturated and ideal classifications.

mod classify;
mod regression;
mod separate;

use serde::{Deserialize, Serialize};

use crate::algebra::{ProductMatrix, UnaryOp};
use crate::catalog::LogicDescriptor;
use crate::entailment::{Limits, Verdict};
use crate::error::{Error, Result};
use crate::formula::{ConsistencyOp, Formula};

pub use classify::{
    classify_ideal, classify_saturated, theorem_ideal, theorem_saturated, verify_saturated,
    verify_saturated_product, ClassificationReport, ExtensionAudit, ExtensionStatus, NonIdealWitness,
    TheoremClause,
};
pub use regression::{regression_incomparabilities, RegressionFact, RegressionReport};
pub use separate::{find_separating_consequence, SearchBounds, Separation};

/// `g1, ..., gk |- phi`.
pub fn query_text(gamma: &[Formula], phi: &Formula) -> String {
    let premises: Vec<String> = gamma.iter().map(|g| g.to_string()).collect();
    if premises.is_empty() {
        format!("|- {phi}")
    } else {
        format!("{} |- {phi}", premises.join(", "))
    }
}

/// A query decided in a logic, kept with its formulas so that the verdict
/// can be replayed.
#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub logic: String,
    pub query: String,
    #[serde(skip)]
    pub gamma: Vec<Formula>,
    #[serde(skip)]
    pub phi: Formula,
    pub verdict: Verdict,
}

impl Witness {
    pub fn run(logic: &LogicDescriptor, gamma: Vec<Formula>, phi: Formula, limits: &Limits) -> Result<Witness> {
        let verdict = logic.entails(&gamma, &phi, limits)?;
        Ok(Witness {
            logic: logic.label(),
            query: query_text(&gamma, &phi),
            gamma,
            phi,
            verdict,
        })
    }

    pub fn holds(&self) -> bool {
        self.verdict.holds
    }

    /// Re-evaluates a counterexample, or accepts a holding verdict.
    pub fn certify(&self) -> bool {
        self.verdict.certify(&self.gamma, &self.phi)
    }

    /// Decides the query again in `logic` by full enumeration of each
    /// product and compares.
    pub fn replay(&self, logic: &LogicDescriptor, limits: &Limits) -> Result<bool> {
        Ok(logic.entails_literal(&self.gamma, &self.phi, limits)?.holds == self.verdict.holds)
    }
}

/// The negations a logic may be paraconsistent with respect to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Negation {
    /// The involution `~`, which is the Lukasiewicz negation on MV chains.
    Inv,
    /// The Goedel negation `!`.
    GNeg,
}

impl Negation {
    pub fn op(self) -> UnaryOp {
        match self {
            Negation::Inv => UnaryOp::Inv,
            Negation::GNeg => UnaryOp::GNeg,
        }
    }

    pub fn apply(self, f: Formula) -> Formula {
        Formula::unary(self.op(), f)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Paraconsistency {
    pub negation: Negation,
    pub paraconsistent: bool,
    /// `p, neg p |- q`; a counterexample certifies paraconsistency.
    pub witness: Witness,
    /// For a single product: whether every component is paraconsistent.
    pub componentwise: Option<bool>,
}

fn component_paraconsistent(m: &ProductMatrix, negation: Negation) -> bool {
    m.components().iter().all(|c| {
        c.chain
            .elements()
            .any(|a| c.filter.contains(a) && c.filter.contains(c.chain.unary(negation.op(), a).unwrap_or(0)))
    })
}

/// Checks `p, neg p |- q`. For a single product the verdict must agree with
/// paraconsistency of every component.
pub fn is_paraconsistent(logic: &LogicDescriptor, negation: Negation, limits: &Limits) -> Result<Paraconsistency> {
    let (p, q) = (Formula::var("p"), Formula::var("q"));
    let witness = Witness::run(logic, vec![p.clone(), negation.apply(p)], q, limits)?;
    let paraconsistent = !witness.holds();
    let componentwise = logic.single().map(|m| component_paraconsistent(m, negation));
    if componentwise.is_some_and(|c| c != paraconsistent) {
        return Err(Error::Internal(format!(
            "paraconsistency of {} disagrees with its components",
            logic.label()
        )));
    }
    Ok(Paraconsistency {
        negation,
        paraconsistent,
        witness,
        componentwise,
    })
}

/// `p, ~p |- 0`.
pub fn validates_explosion(logic: &LogicDescriptor, limits: &Limits) -> Result<Witness> {
    let p = Formula::var("p");
    Witness::run(logic, vec![p.clone(), p.inv()], Formula::Bot, limits)
}

/// The conditions making a logic a logic of formal inconsistency with
/// respect to `~` and a consistency operator.
#[derive(Clone, Debug, Serialize)]
pub struct LfiWitness {
    pub op: ConsistencyOp,
    /// The operator applied to `p`.
    pub circ: String,
    /// `p, ~p |- q` must fail.
    pub paraconsistent: Witness,
    /// `p, ~p, o p |- q` must hold.
    pub trivializing: Witness,
    /// `q, o q |- r` must fail.
    pub positive: Witness,
    /// `~q, o q |- r` must fail.
    pub negative: Witness,
    pub confirmed: bool,
}

pub fn lfi_witness(logic: &LogicDescriptor, op: ConsistencyOp, limits: &Limits) -> Result<LfiWitness> {
    let (p, q, r) = (Formula::var("p"), Formula::var("q"), Formula::var("r"));
    let (cp, cq) = (op.apply(&p)?, op.apply(&q)?);
    let paraconsistent = Witness::run(logic, vec![p.clone(), p.clone().inv()], q.clone(), limits)?;
    let trivializing = Witness::run(logic, vec![p.clone(), p.clone().inv(), cp.clone()], q.clone(), limits)?;
    let positive = Witness::run(logic, vec![q.clone(), cq.clone()], r.clone(), limits)?;
    let negative = Witness::run(logic, vec![q.inv(), cq], r, limits)?;
    let confirmed = !paraconsistent.holds() && trivializing.holds() && !positive.holds() && !negative.holds();
    Ok(LfiWitness {
        op,
        circ: cp.to_string(),
        paraconsistent,
        trivializing,
        positive,
        negative,
        confirmed,
    })
}

impl LfiWitness {
    pub fn witnesses(&self) -> [&Witness; 4] {
        [&self.paraconsistent, &self.trivializing, &self.positive, &self.negative]
    }
}
