//! Formulas compiled to a shared node list over indexed variables.

use std::collections::HashMap;
use std::sync::Arc;

use crate::algebra::{BinaryOp, Chain, Elem, UnaryOp};
use crate::error::{Error, Result};
use crate::formula::{Formula, TableConn};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Node {
    Var(usize),
    Bot,
    Top,
    Unary(UnaryOp, usize),
    Binary(BinaryOp, usize, usize),
    Table(usize, Vec<usize>),
}

/// Premises and conclusion compiled together, with shared subterms.
#[derive(Clone, Debug)]
pub(crate) struct Program {
    pub vars: Vec<String>,
    nodes: Vec<Node>,
    conns: Vec<Arc<TableConn>>,
    pub premises: Vec<usize>,
    pub conclusion: usize,
}

impl Program {
    pub fn compile(gamma: &[Formula], phi: &Formula) -> Program {
        let mut vars: Vec<String> = gamma
            .iter()
            .chain(std::iter::once(phi))
            .flat_map(|f| f.vars())
            .collect();
        vars.sort();
        vars.dedup();
        let mut b = Builder {
            var_index: vars.iter().enumerate().map(|(i, v)| (v.clone(), i)).collect(),
            nodes: Vec::new(),
            memo: HashMap::new(),
            conns: Vec::new(),
        };
        let premises = gamma.iter().map(|g| b.add(g)).collect();
        let conclusion = b.add(phi);
        Program {
            vars,
            nodes: b.nodes,
            conns: b.conns,
            premises,
            conclusion,
        }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    /// Resolves the program against one chain.
    pub fn prepare(&self, chain: Chain) -> Result<Prepared<'_>> {
        for node in &self.nodes {
            if let Node::Binary(op, _, _) = node {
                if !chain.supports(*op) {
                    return Err(Error::Unsupported {
                        connective: op.symbol().to_string(),
                        algebra: chain.to_string(),
                    });
                }
            }
        }
        let tables = self
            .conns
            .iter()
            .map(|c| c.restrict(chain))
            .collect::<Result<Vec<_>>>()?;
        Ok(Prepared {
            program: self,
            chain,
            tables,
        })
    }
}

struct Builder {
    var_index: HashMap<String, usize>,
    nodes: Vec<Node>,
    memo: HashMap<Node, usize>,
    conns: Vec<Arc<TableConn>>,
}

impl Builder {
    fn intern(&mut self, node: Node) -> usize {
        if let Some(&i) = self.memo.get(&node) {
            return i;
        }
        self.nodes.push(node.clone());
        self.memo.insert(node, self.nodes.len() - 1);
        self.nodes.len() - 1
    }

    fn add(&mut self, f: &Formula) -> usize {
        let node = match f {
            Formula::Var(v) => Node::Var(self.var_index[v]),
            Formula::Bot => Node::Bot,
            Formula::Top => Node::Top,
            Formula::Unary(op, a) => {
                let a = self.add(a);
                Node::Unary(*op, a)
            }
            Formula::Binary(op, a, b) => {
                let a = self.add(a);
                let b = self.add(b);
                Node::Binary(*op, a, b)
            }
            Formula::Table(c, args) => {
                let args = args.iter().map(|a| self.add(a)).collect();
                let ci = match self.conns.iter().position(|k| k == c) {
                    Some(i) => i,
                    None => {
                        self.conns.push(c.clone());
                        self.conns.len() - 1
                    }
                };
                Node::Table(ci, args)
            }
        };
        self.intern(node)
    }
}

/// A program bound to a chain.
pub(crate) struct Prepared<'a> {
    program: &'a Program,
    pub chain: Chain,
    tables: Vec<Vec<Elem>>,
}

impl Prepared<'_> {
    /// Evaluates every node; `vals[v]` is the value of variable `v`.
    #[inline]
    pub fn run(&self, vals: &[Elem], slots: &mut [Elem]) {
        let c = self.chain;
        let size = c.size();
        for (i, node) in self.program.nodes.iter().enumerate() {
            slots[i] = match node {
                Node::Var(v) => vals[*v],
                Node::Bot => 0,
                Node::Top => c.top(),
                Node::Unary(op, a) => c.unary_raw(*op, slots[*a]),
                Node::Binary(op, a, b) => c.binary_raw(*op, slots[*a], slots[*b]),
                Node::Table(t, args) => {
                    let idx = args.iter().fold(0, |acc, &a| acc * size + slots[a] as usize);
                    self.tables[*t][idx]
                }
            };
        }
    }
}
