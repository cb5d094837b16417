//! Breadth-first synthesis of one-variable terms by their value tables.

use std::collections::HashMap;

use super::Formula;
use crate::algebra::{BinaryOp, Chain, Elem, UnaryOp};
use crate::error::{invalid, Error, Result};

const UNARY: [UnaryOp; 3] = [UnaryOp::Delta, UnaryOp::Inv, UnaryOp::GNeg];
const BINARY: [BinaryOp; 4] = [BinaryOp::And, BinaryOp::Or, BinaryOp::GImp, BinaryOp::Iff];

/// One representative term per one-variable term function, jointly over a
/// list of chains, in order of first appearance by depth.
#[derive(Clone, Debug)]
pub struct TermClosure {
    pub chains: Vec<Chain>,
    /// `(term, depth, concatenated value tables)`.
    pub terms: Vec<(Formula, usize, Vec<Elem>)>,
    /// True when no new function appeared at the last depth: the list then
    /// covers every one-variable term of any depth.
    pub saturated: bool,
}

impl TermClosure {
    pub fn find(&self, table: &[Elem]) -> Option<&Formula> {
        self.terms.iter().find(|t| t.2 == table).map(|t| &t.0)
    }
}

/// Enumerates one-variable Goedel-with-involution terms in `var` up to
/// `max_depth`, keeping the first term found for each function.
pub fn one_variable_terms(chains: &[Chain], var: &str, max_depth: usize) -> Result<TermClosure> {
    one_variable_terms_in(chains, var, max_depth, &UNARY, &BINARY)
}

/// As [`one_variable_terms`] over the given connectives.
pub fn one_variable_terms_in(
    chains: &[Chain],
    var: &str,
    max_depth: usize,
    unary: &[UnaryOp],
    binary: &[BinaryOp],
) -> Result<TermClosure> {
    if chains.is_empty() {
        return invalid("term synthesis needs at least one chain");
    }
    // position k of a table is (chain index, argument value)
    let positions: Vec<(usize, Elem)> = chains
        .iter()
        .enumerate()
        .flat_map(|(ci, c)| c.elements().map(move |a| (ci, a)))
        .collect();
    let leaf = |f: &dyn Fn(&Chain, Elem) -> Elem| -> Vec<Elem> {
        positions.iter().map(|&(ci, a)| f(&chains[ci], a)).collect()
    };
    let mut seen: HashMap<Vec<Elem>, usize> = HashMap::new();
    let mut terms: Vec<(Formula, usize, Vec<Elem>)> = Vec::new();
    fn push(
        seen: &mut HashMap<Vec<Elem>, usize>,
        terms: &mut Vec<(Formula, usize, Vec<Elem>)>,
        f: Formula,
        d: usize,
        t: Vec<Elem>,
    ) -> bool {
        if seen.contains_key(&t) {
            return false;
        }
        seen.insert(t.clone(), terms.len());
        terms.push((f, d, t));
        true
    }
    push(&mut seen, &mut terms, Formula::var(var), 0, leaf(&|_, a| a));
    push(&mut seen, &mut terms, Formula::Bot, 0, leaf(&|_, _| 0));
    push(&mut seen, &mut terms, Formula::Top, 0, leaf(&|c, _| c.top()));

    let mut level_start = 0;
    let mut saturated = false;
    for depth in 1..=max_depth {
        let level_end = terms.len();
        let mut fresh = 0;
        for i in level_start..level_end {
            for &op in unary {
                let t: Vec<Elem> = terms[i]
                    .2
                    .iter()
                    .zip(&positions)
                    .map(|(&v, &(ci, _))| chains[ci].unary_raw(op, v))
                    .collect();
                let f = Formula::unary(op, terms[i].0.clone());
                fresh += push(&mut seen, &mut terms, f, depth, t) as usize;
            }
        }
        for i in 0..level_end {
            for j in 0..level_end {
                if i < level_start && j < level_start {
                    continue;
                }
                for &op in binary {
                    let t: Vec<Elem> = terms[i]
                        .2
                        .iter()
                        .zip(&terms[j].2)
                        .zip(&positions)
                        .map(|((&a, &b), &(ci, _))| chains[ci].binary_raw(op, a, b))
                        .collect();
                    if seen.contains_key(&t) {
                        continue;
                    }
                    let f = Formula::binary(op, terms[i].0.clone(), terms[j].0.clone());
                    fresh += push(&mut seen, &mut terms, f, depth, t) as usize;
                }
            }
        }
        level_start = level_end;
        if fresh == 0 {
            saturated = true;
            break;
        }
    }
    Ok(TermClosure {
        chains: chains.to_vec(),
        terms,
        saturated,
    })
}

fn target_table(n: usize, a: Elem) -> Vec<Elem> {
    (0..n as Elem)
        .map(|x| if x == a { (n - 1) as Elem } else { 0 })
        .collect()
}

/// Searches for a one-variable term in `p` whose value on `GV_n~` is `1` at
/// `a` and `0` elsewhere. Also reports whether the search exhausted every
/// term function.
pub fn synthesize_characterizer(n: usize, a: Elem, max_depth: usize) -> Result<(Option<Formula>, bool)> {
    let chain = Chain::gv(n)?;
    chain.check(a)?;
    let closure = one_variable_terms(&[chain], "p", max_depth)?;
    let found = closure.find(&target_table(n, a)).cloned();
    Ok((found, closure.saturated))
}

/// A one-variable formula true exactly at `a` on `GV_n~`, for `n <= 5`.
pub fn single_value_characterizer(n: usize, a: Elem) -> Result<Formula> {
    if !(3..=5).contains(&n) {
        return invalid(format!("single-value characterizers are built for 3 <= n <= 5, got {n}"));
    }
    let chain = Chain::gv(n)?;
    chain.check(a)?;
    if a == 0 {
        return invalid("the characterized value must be nonzero");
    }
    if 2 * a as usize == n - 1 {
        let p = Formula::var("p");
        return Ok(p.clone().iff(p.inv()).delta());
    }
    match synthesize_characterizer(n, a, 6)?.0 {
        Some(f) => Ok(f),
        None => Err(Error::Internal(format!(
            "no characterizer of depth <= 6 for {a} on GV{n}~"
        ))),
    }
}
