//! Formula syntax, derived connectives, term builders and translations.

mod parse;
mod print;
pub mod synth;
pub mod terms;
pub mod translate;

use std::collections::BTreeSet;
use std::sync::Arc;

pub use parse::{parse, parse_list, parse_sequent};
pub use synth::{one_variable_terms, one_variable_terms_in, single_value_characterizer, synthesize_characterizer, TermClosure};
pub use terms::*;
pub use translate::*;

use crate::algebra::{BinaryOp, Chain, Elem, UnaryOp};
use crate::error::{Error, Result};

/// A connective given by its value table on a base chain.
///
/// The table applies to any chain whose carrier is a subchain of the base,
/// i.e. whose top index divides the base's top index, provided the chain is
/// closed under the table.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TableConn {
    pub name: String,
    pub arity: usize,
    pub base_size: usize,
    pub table: Vec<Elem>,
}

impl TableConn {
    pub fn new(name: impl Into<String>, arity: usize, base_size: usize, table: Vec<Elem>) -> Result<TableConn> {
        let expected = base_size.checked_pow(arity as u32);
        if expected != Some(table.len()) || table.iter().any(|&v| v as usize >= base_size) {
            return Err(Error::InvalidArgument("malformed connective table".into()));
        }
        Ok(TableConn {
            name: name.into(),
            arity,
            base_size,
            table,
        })
    }

    /// The table restricted to `chain`, indexed in mixed radix with the first
    /// argument most significant.
    pub fn restrict(&self, chain: Chain) -> Result<Vec<Elem>> {
        let unsupported = || Error::Unsupported {
            connective: self.name.clone(),
            algebra: chain.to_string(),
        };
        let (base_top, top) = (self.base_size - 1, chain.top() as usize);
        if base_top % top != 0 {
            return Err(unsupported());
        }
        let scale = base_top / top;
        let s = chain.size();
        let count = s.pow(self.arity as u32);
        let mut out = Vec::with_capacity(count);
        for idx in 0..count {
            let mut rem = idx;
            let mut base_idx = 0;
            let mut digits = vec![0; self.arity];
            for d in (0..self.arity).rev() {
                digits[d] = rem % s;
                rem /= s;
            }
            for d in digits {
                base_idx = base_idx * self.base_size + d * scale;
            }
            let v = self.table[base_idx] as usize;
            if !v.is_multiple_of(scale) {
                return Err(unsupported());
            }
            out.push((v / scale) as Elem);
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    Var(String),
    Bot,
    Top,
    Unary(UnaryOp, Box<Formula>),
    Binary(BinaryOp, Box<Formula>, Box<Formula>),
    Table(Arc<TableConn>, Vec<Formula>),
}

impl Formula {
    pub fn var(name: impl Into<String>) -> Formula {
        Formula::Var(name.into())
    }

    pub fn unary(op: UnaryOp, f: Formula) -> Formula {
        Formula::Unary(op, Box::new(f))
    }

    pub fn binary(op: BinaryOp, a: Formula, b: Formula) -> Formula {
        Formula::Binary(op, Box::new(a), Box::new(b))
    }

    pub fn table(conn: Arc<TableConn>, args: Vec<Formula>) -> Result<Formula> {
        if args.len() != conn.arity {
            return Err(Error::InvalidArgument(format!(
                "{} expects {} arguments",
                conn.name, conn.arity
            )));
        }
        Ok(Formula::Table(conn, args))
    }

    pub fn and(self, other: Formula) -> Formula {
        Formula::binary(BinaryOp::And, self, other)
    }

    pub fn or(self, other: Formula) -> Formula {
        Formula::binary(BinaryOp::Or, self, other)
    }

    /// Goedel implication.
    pub fn imp(self, other: Formula) -> Formula {
        Formula::binary(BinaryOp::GImp, self, other)
    }

    pub fn iff(self, other: Formula) -> Formula {
        Formula::binary(BinaryOp::Iff, self, other)
    }

    pub fn luk_imp(self, other: Formula) -> Formula {
        Formula::binary(BinaryOp::LukImp, self, other)
    }

    pub fn ft_imp(self, other: Formula) -> Formula {
        Formula::binary(BinaryOp::FtImp, self, other)
    }

    pub fn inv(self) -> Formula {
        Formula::unary(UnaryOp::Inv, self)
    }

    pub fn gneg(self) -> Formula {
        Formula::unary(UnaryOp::GNeg, self)
    }

    pub fn delta(self) -> Formula {
        Formula::unary(UnaryOp::Delta, self)
    }

    pub fn vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Var(v) => {
                out.insert(v.clone());
            }
            Formula::Bot | Formula::Top => {}
            Formula::Unary(_, a) => a.collect_vars(out),
            Formula::Binary(_, a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
            Formula::Table(_, args) => args.iter().for_each(|a| a.collect_vars(out)),
        }
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        match self {
            Formula::Var(_) | Formula::Bot | Formula::Top => 1,
            Formula::Unary(_, a) => 1 + a.size(),
            Formula::Binary(_, a, b) => 1 + a.size() + b.size(),
            Formula::Table(_, args) => 1 + args.iter().map(Formula::size).sum::<usize>(),
        }
    }

    /// Height of the tree; atoms have depth 0.
    pub fn depth(&self) -> usize {
        match self {
            Formula::Var(_) | Formula::Bot | Formula::Top => 0,
            Formula::Unary(_, a) => 1 + a.depth(),
            Formula::Binary(_, a, b) => 1 + a.depth().max(b.depth()),
            Formula::Table(_, args) => 1 + args.iter().map(Formula::depth).max().unwrap_or(0),
        }
    }

    /// Replaces variables according to `f`.
    pub fn substitute(&self, f: &dyn Fn(&str) -> Option<Formula>) -> Formula {
        match self {
            Formula::Var(v) => f(v).unwrap_or_else(|| self.clone()),
            Formula::Bot | Formula::Top => self.clone(),
            Formula::Unary(op, a) => Formula::unary(*op, a.substitute(f)),
            Formula::Binary(op, a, b) => Formula::binary(*op, a.substitute(f), b.substitute(f)),
            Formula::Table(c, args) => {
                Formula::Table(c.clone(), args.iter().map(|a| a.substitute(f)).collect())
            }
        }
    }

    /// Rewrites `|`, `!`, `D`, `<->` and `1` into `&`, `->`, `~`, `0`.
    pub fn expand_derived(&self) -> Formula {
        match self {
            Formula::Var(_) | Formula::Bot => self.clone(),
            Formula::Top => Formula::Bot.imp(Formula::Bot),
            Formula::Unary(op, a) => {
                let a = a.expand_derived();
                match op {
                    UnaryOp::Inv => a.inv(),
                    UnaryOp::GNeg => a.imp(Formula::Bot),
                    UnaryOp::Delta => a.inv().imp(Formula::Bot),
                }
            }
            Formula::Binary(op, a, b) => {
                let (a, b) = (a.expand_derived(), b.expand_derived());
                match op {
                    BinaryOp::And | BinaryOp::GImp | BinaryOp::LukImp | BinaryOp::FtImp => {
                        Formula::binary(*op, a, b)
                    }
                    BinaryOp::Or => {
                        let left = a.clone().imp(b.clone()).imp(b.clone());
                        let right = b.imp(a.clone()).imp(a);
                        left.and(right)
                    }
                    BinaryOp::Iff => a.clone().imp(b.clone()).and(b.imp(a)),
                }
            }
            Formula::Table(c, args) => {
                Formula::Table(c.clone(), args.iter().map(Formula::expand_derived).collect())
            }
        }
    }

    /// Whether only `&`, `->`, `~`, `0`, variables and the primitive
    /// non-Goedel connectives occur.
    pub fn is_core(&self) -> bool {
        match self {
            Formula::Var(_) | Formula::Bot => true,
            Formula::Top => false,
            Formula::Unary(op, a) => *op == UnaryOp::Inv && a.is_core(),
            Formula::Binary(op, a, b) => {
                !matches!(op, BinaryOp::Or | BinaryOp::Iff) && a.is_core() && b.is_core()
            }
            Formula::Table(_, args) => args.iter().all(Formula::is_core),
        }
    }
}

/// Conjunction of a list; the empty conjunction is `1`.
pub fn conj(items: impl IntoIterator<Item = Formula>) -> Formula {
    items
        .into_iter()
        .reduce(Formula::and)
        .unwrap_or(Formula::Top)
}

/// Disjunction of a list; the empty disjunction is `0`.
pub fn disj(items: impl IntoIterator<Item = Formula>) -> Formula {
    items.into_iter().reduce(Formula::or).unwrap_or(Formula::Bot)
}

pub fn p() -> Formula {
    Formula::var("p")
}

pub fn q() -> Formula {
    Formula::var("q")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expand_derived_examples() {
        assert_eq!(p().gneg().expand_derived(), p().imp(Formula::Bot));
        assert_eq!(p().delta().expand_derived(), p().inv().imp(Formula::Bot));
        assert_eq!(Formula::Top.expand_derived(), Formula::Bot.imp(Formula::Bot));
        let f = parse("D(p <-> ~p) | !q").unwrap();
        assert!(f.expand_derived().is_core());
        assert!(!f.is_core());
    }

    #[test]
    fn vars_and_measures() {
        let f = parse("p & (q -> ~p)").unwrap();
        assert_eq!(f.vars().into_iter().collect::<Vec<_>>(), vec!["p", "q"]);
        assert_eq!(f.size(), 6);
        assert_eq!(f.depth(), 3);
        assert_eq!(conj(vec![]), Formula::Top);
        assert_eq!(disj(vec![]), Formula::Bot);
    }

    #[test]
    fn table_restriction_to_subchains() {
        let t = tilde_table_conn(4, 2).unwrap();
        assert_eq!(t.restrict(Chain::lv(5).unwrap()).unwrap(), vec![4, 4, 0, 0, 0]);
        assert_eq!(t.restrict(Chain::lv(3).unwrap()).unwrap(), vec![2, 0, 0]);
        assert!(t.restrict(Chain::lv(4).unwrap()).is_err());
    }
}
