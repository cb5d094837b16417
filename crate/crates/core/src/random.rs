//! Seeded random formulas and queries.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{BinaryOp, UnaryOp};
use crate::formula::Formula;

#[derive(Clone, Debug)]
pub struct FormulaGen {
    pub vars: Vec<String>,
    pub max_depth: usize,
    pub unary: Vec<UnaryOp>,
    pub binary: Vec<BinaryOp>,
    /// Chance that a node below the root becomes a leaf.
    pub leaf_bias: f64,
}

impl FormulaGen {
    /// Formulas in the Goedel signature with involution over `p, q, r, s, ...`.
    pub fn godel(num_vars: usize, max_depth: usize) -> FormulaGen {
        FormulaGen {
            vars: var_names(num_vars),
            max_depth,
            unary: UnaryOp::ALL.to_vec(),
            binary: vec![BinaryOp::And, BinaryOp::Or, BinaryOp::GImp, BinaryOp::Iff],
            leaf_bias: 0.3,
        }
    }

    /// The `{and, or, ~, =>F, 0}` signature.
    pub fn ft(num_vars: usize, max_depth: usize) -> FormulaGen {
        FormulaGen {
            vars: var_names(num_vars),
            max_depth,
            unary: vec![UnaryOp::Inv],
            binary: vec![BinaryOp::And, BinaryOp::Or, BinaryOp::FtImp],
            leaf_bias: 0.3,
        }
    }

    pub fn formula(&self, rng: &mut impl Rng) -> Formula {
        self.grow(rng, self.max_depth, true)
    }

    fn leaf(&self, rng: &mut impl Rng) -> Formula {
        // constants are rarer than variables
        if self.vars.is_empty() || rng.gen_ratio(1, 8) {
            if rng.gen_bool(0.5) {
                Formula::Bot
            } else {
                Formula::Top
            }
        } else {
            Formula::var(self.vars[rng.gen_range(0..self.vars.len())].clone())
        }
    }

    fn grow(&self, rng: &mut impl Rng, depth: usize, root: bool) -> Formula {
        if depth == 0 || (!root && rng.gen_bool(self.leaf_bias)) {
            return self.leaf(rng);
        }
        let pick_unary = !self.unary.is_empty() && (self.binary.is_empty() || rng.gen_ratio(1, 3));
        if pick_unary {
            let op = self.unary[rng.gen_range(0..self.unary.len())];
            Formula::unary(op, self.grow(rng, depth - 1, false))
        } else {
            let op = self.binary[rng.gen_range(0..self.binary.len())];
            let a = self.grow(rng, depth - 1, false);
            let b = self.grow(rng, depth - 1, false);
            Formula::binary(op, a, b)
        }
    }

    /// Up to `max_premises` premises and a conclusion.
    pub fn query(&self, rng: &mut impl Rng, max_premises: usize) -> (Vec<Formula>, Formula) {
        let k = rng.gen_range(0..=max_premises);
        let gamma = (0..k).map(|_| self.formula(rng)).collect();
        (gamma, self.formula(rng))
    }
}

/// `p, q, r, s`, then `p4, p5, ...`.
pub fn var_names(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| match i {
            0 => "p".to_string(),
            1 => "q".to_string(),
            2 => "r".to_string(),
            3 => "s".to_string(),
            _ => format!("p{i}"),
        })
        .collect()
}

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
