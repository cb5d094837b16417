//! A direct reading of the truth tables and of matrix consequence, kept
//! apart from the compiled evaluator of the library.

#![allow(dead_code)]

use std::collections::BTreeMap;

use paralogic::algebra::{BinaryOp, UnaryOp};
use paralogic::random::FormulaGen;
use paralogic::{Chain, ChainKind, Component, Elem, Formula, ProductMatrix};
use rand::Rng;

/// Value of `f` on a chain with top element `top`, from the definitions on
/// the grid `k / top`.
pub fn value(f: &Formula, top: i32, env: &BTreeMap<String, i32>) -> i32 {
    let imp = |a: i32, b: i32| if a <= b { top } else { b };
    match f {
        Formula::Var(v) => env[v],
        Formula::Bot => 0,
        Formula::Top => top,
        Formula::Unary(op, a) => {
            let a = value(a, top, env);
            match op {
                UnaryOp::Inv => top - a,
                UnaryOp::GNeg => {
                    if a == 0 {
                        top
                    } else {
                        0
                    }
                }
                UnaryOp::Delta => {
                    if a == top {
                        top
                    } else {
                        0
                    }
                }
            }
        }
        Formula::Binary(op, a, b) => {
            let (a, b) = (value(a, top, env), value(b, top, env));
            match op {
                BinaryOp::And => a.min(b),
                BinaryOp::Or => a.max(b),
                BinaryOp::GImp => imp(a, b),
                BinaryOp::Iff => imp(a, b).min(imp(b, a)),
                BinaryOp::LukImp => top.min(top - a + b),
                BinaryOp::FtImp => {
                    if a <= b {
                        (top - a).max(b)
                    } else {
                        0
                    }
                }
            }
        }
        Formula::Table(..) => panic!("the oracle has no table connectives"),
    }
}

pub fn vars_of(gamma: &[Formula], phi: &Formula) -> Vec<String> {
    let mut vs: Vec<String> = gamma.iter().chain([phi]).flat_map(|f| f.vars()).collect();
    vs.sort();
    vs.dedup();
    vs
}

/// Whether `gamma |- phi` on a product, by running through every
/// assignment of tuples.
pub fn entails(m: &ProductMatrix, gamma: &[Formula], phi: &Formula) -> bool {
    let comps: Vec<(i32, i32)> = m
        .components()
        .iter()
        .map(|c| (c.chain.top() as i32, c.filter.threshold() as i32))
        .collect();
    let vars = vars_of(gamma, phi);
    let tuples: Vec<Vec<i32>> = {
        let mut out = vec![Vec::new()];
        for &(top, _) in &comps {
            out = out
                .into_iter()
                .flat_map(|t: Vec<i32>| {
                    (0..=top).map(move |a| {
                        let mut t = t.clone();
                        t.push(a);
                        t
                    })
                })
                .collect();
        }
        out
    };
    let mut idx = vec![0usize; vars.len()];
    loop {
        let designated = |f: &Formula| {
            comps.iter().enumerate().all(|(c, &(top, t))| {
                let env = vars.iter().zip(&idx).map(|(v, &k)| (v.clone(), tuples[k][c])).collect();
                value(f, top, &env) >= t
            })
        };
        if gamma.iter().all(designated) && !designated(phi) {
            return false;
        }
        let mut pos = vars.len();
        loop {
            if pos == 0 {
                return true;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < tuples.len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

/// Whether the degree-preserving companion of `GV_n~` has `gamma |- phi`.
pub fn entails_degree(n: usize, gamma: &[Formula], phi: &Formula) -> bool {
    (1..n).all(|t| {
        let m = ProductMatrix::single(Chain::gv(n).unwrap(), t as Elem).unwrap();
        entails(&m, gamma, phi)
    })
}

/// A random product of up to `max` Goedel chains with involution.
pub fn random_product(rng: &mut impl Rng, max: usize, max_size: usize) -> ProductMatrix {
    let k = rng.gen_range(1..=max);
    let comps = (0..k)
        .map(|_| {
            let size = rng.gen_range(2..=max_size);
            let t = rng.gen_range(1..size) as Elem;
            Component::new(Chain::gv(size).unwrap(), t).unwrap()
        })
        .collect();
    ProductMatrix::new(comps).unwrap()
}

pub fn random_query(rng: &mut impl Rng, vars: usize, depth: usize) -> (Vec<Formula>, Formula) {
    FormulaGen::godel(vars, depth).query(rng, 2)
}

pub fn is_godel(m: &ProductMatrix) -> bool {
    m.components().iter().all(|c| c.chain.kind() == ChainKind::GodelInv)
}
