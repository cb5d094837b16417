//! Bounded search for a query that holds in one logic and fails in another.
//!
//! Candidates are first screened on value tables, then confirmed by the
//! entailment engine in both logics. Two families are tried in turn:
//!
//! * one-variable terms `s, t` from the term closure over the chains of
//!   both logics, as `|- s`, `s |- 0` and `s |- t`;
//! * order configurations `c` of `p_i, ~p_i, 0, 1` realized by an
//!   assignment into the second logic, written as a conjunction of
//!   `D(s -> t)` and `!D(s -> t)`, as `|- !c`, `c |- 0`, `c, a |- 0` and
//!   `c |- a` for an atom `a`, and for patterns of single components, guarded
//!   by a fresh variable. These need `D`, so they are only tried on the
//!   Goedel side.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use serde::Serialize;

use super::Witness;
use crate::algebra::{BinaryOp, Chain, Elem, ProductMatrix, UnaryOp};
use crate::catalog::{LogicDescriptor, Side};
use crate::entailment::Limits;
use crate::error::{invalid, Error, Result};
use crate::formula::{conj, one_variable_terms_in, Formula};
use crate::random::var_names;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBounds {
    pub max_depth: usize,
    pub max_vars: usize,
    pub time_limit: Duration,
}

impl Default for SearchBounds {
    fn default() -> SearchBounds {
        SearchBounds {
            max_depth: 6,
            max_vars: 4,
            time_limit: Duration::from_secs(60),
        }
    }
}

/// Largest number of assignments into the second logic enumerated for one
/// variable count.
const MAX_CONFIGURATIONS: u128 = 250_000;

#[derive(Clone, Debug, Serialize)]
pub struct Separation {
    pub query: String,
    pub holds_in: Witness,
    pub fails_in: Witness,
}

impl Separation {
    pub fn certify(&self) -> bool {
        self.holds_in.holds() && !self.fails_in.holds() && self.holds_in.certify() && self.fails_in.certify()
    }
}

fn signature(side: Side) -> (Vec<UnaryOp>, Vec<BinaryOp>) {
    match side {
        Side::GodelInv => (
            vec![UnaryOp::Delta, UnaryOp::Inv, UnaryOp::GNeg],
            vec![BinaryOp::And, BinaryOp::Or, BinaryOp::GImp, BinaryOp::Iff],
        ),
        Side::Luk => (vec![UnaryOp::Inv], vec![BinaryOp::LukImp, BinaryOp::And, BinaryOp::Or]),
        Side::Ft => (vec![UnaryOp::Inv], vec![BinaryOp::And, BinaryOp::Or, BinaryOp::FtImp]),
    }
}

/// Components of every member, as (chain, threshold) lists.
fn members(logic: &LogicDescriptor) -> Vec<Vec<(Chain, Elem)>> {
    logic
        .family
        .iter()
        .map(|m: &ProductMatrix| m.components().iter().map(|c| (c.chain, c.filter.threshold())).collect())
        .collect()
}

fn full(size: usize) -> u128 {
    if size >= 128 {
        u128::MAX
    } else {
        (1u128 << size) - 1
    }
}

/// One-variable screening: designated sets of each term on each component.
struct Tables<'a> {
    chains: &'a [Chain],
    offsets: Vec<usize>,
    members: Vec<Vec<(usize, Elem)>>,
}

impl<'a> Tables<'a> {
    fn new(chains: &'a [Chain], logic: &LogicDescriptor) -> Tables<'a> {
        let mut offsets = Vec::with_capacity(chains.len());
        let mut at = 0;
        for c in chains {
            offsets.push(at);
            at += c.size();
        }
        let members = members(logic)
            .into_iter()
            .map(|cs| {
                cs.into_iter()
                    .map(|(chain, t)| (chains.iter().position(|&c| c == chain).expect("chain listed"), t))
                    .collect()
            })
            .collect();
        Tables {
            chains,
            offsets,
            members,
        }
    }

    /// Designated set of a term, per member and component.
    fn designated(&self, table: &[Elem]) -> Vec<Vec<u128>> {
        self.members
            .iter()
            .map(|cs| {
                cs.iter()
                    .map(|&(ci, t)| {
                        let base = self.offsets[ci];
                        (0..self.chains[ci].size())
                            .filter(|&a| table[base + a] >= t)
                            .fold(0u128, |m, a| m | 1 << a)
                    })
                    .collect()
            })
            .collect()
    }

    fn full_masks(&self) -> Vec<Vec<u128>> {
        self.members
            .iter()
            .map(|cs| cs.iter().map(|&(ci, _)| full(self.chains[ci].size())).collect())
            .collect()
    }
}

fn theorem_holds(d: &[Vec<u128>], full: &[Vec<u128>]) -> bool {
    d.iter().zip(full).all(|(m, f)| m == f)
}

fn absurd_holds(d: &[Vec<u128>]) -> bool {
    d.iter().all(|m| m.contains(&0))
}

fn rule_holds(prem: &[Vec<u128>], concl: &[Vec<u128>]) -> bool {
    prem.iter().zip(concl).all(|(pm, cm)| {
        !(0..pm.len()).any(|c0| pm[c0] & !cm[c0] != 0 && (0..pm.len()).all(|c| c == c0 || pm[c] != 0))
    })
}

struct Search<'a> {
    l1: &'a LogicDescriptor,
    l2: &'a LogicDescriptor,
    limits: &'a Limits,
    start: Instant,
    bounds: SearchBounds,
}

impl Search<'_> {
    fn expired(&self) -> bool {
        self.start.elapsed() > self.bounds.time_limit
    }

    /// Confirms a screened candidate with the entailment engine.
    fn confirm(&self, gamma: Vec<Formula>, phi: Formula) -> Result<Separation> {
        let holds_in = Witness::run(self.l1, gamma.clone(), phi.clone(), self.limits)?;
        let fails_in = Witness::run(self.l2, gamma, phi, self.limits)?;
        if !holds_in.holds() || fails_in.holds() {
            return Err(Error::Internal(format!(
                "screened separator `{}` does not separate {} from {}",
                holds_in.query,
                self.l1.label(),
                self.l2.label()
            )));
        }
        Ok(Separation {
            query: holds_in.query.clone(),
            holds_in,
            fails_in,
        })
    }

    fn one_variable(&self) -> Result<Option<Separation>> {
        let mut chains: Vec<Chain> = self.l1.family.iter().chain(&self.l2.family).flat_map(|m| m.chains()).collect();
        chains.sort_by_key(|c| (c.size(), c.kind()));
        chains.dedup();
        let (unary, binary) = signature(self.l1.side);
        let closure = one_variable_terms_in(&chains, "p", self.bounds.max_depth, &unary, &binary)?;
        let (t1, t2) = (Tables::new(&chains, self.l1), Tables::new(&chains, self.l2));
        let (f1, f2) = (t1.full_masks(), t2.full_masks());
        let d1: Vec<_> = closure.terms.iter().map(|t| t1.designated(&t.2)).collect();
        let d2: Vec<_> = closure.terms.iter().map(|t| t2.designated(&t.2)).collect();
        let term = |k: usize| closure.terms[k].0.clone();
        for k in 0..d1.len() {
            if theorem_holds(&d1[k], &f1) && !theorem_holds(&d2[k], &f2) {
                return self.confirm(Vec::new(), term(k)).map(Some);
            }
        }
        for k in 0..d1.len() {
            if absurd_holds(&d1[k]) && !absurd_holds(&d2[k]) {
                return self.confirm(vec![term(k)], Formula::Bot).map(Some);
            }
        }
        for a in 0..d1.len() {
            if self.expired() {
                return Ok(None);
            }
            for b in 0..d1.len() {
                if a != b && rule_holds(&d1[a], &d1[b]) && !rule_holds(&d2[a], &d2[b]) {
                    return self.confirm(vec![term(a)], term(b)).map(Some);
                }
            }
        }
        Ok(None)
    }

    fn configurations(&self, k: usize) -> Result<Option<Separation>> {
        let total: u128 = members(self.l2)
            .iter()
            .map(|cs| cs.iter().map(|(c, _)| (c.size() as u128).pow(k as u32)).product::<u128>())
            .sum();
        if total > MAX_CONFIGURATIONS {
            return Ok(None);
        }
        let pattern = Pattern::new(k);
        let atoms = (1u64 << (2 * k)) - 1;
        // configurations realized in the second logic, in order of discovery,
        // with the atoms undesignated in some component by some realization
        // and those designated in every component by some realization
        let mut found: Vec<Realized> = Vec::new();
        let mut index: HashMap<(u128, u128), usize> = HashMap::new();
        for cs in members(self.l2) {
            let per: Vec<Vec<(u128, u64)>> = cs.iter().map(|&(c, t)| pattern.local(c, t)).collect();
            let mut odometer = vec![0usize; per.len()];
            loop {
                let (mut pos, mut neg, mut und) = (pattern.all, pattern.all, 0u64);
                for (c, &o) in odometer.iter().enumerate() {
                    let (le, u) = per[c][o];
                    pos &= le;
                    neg &= !le;
                    und |= u;
                }
                let key = (pos, neg & pattern.all);
                let x = *index.entry(key).or_insert_with(|| {
                    found.push(Realized { key, und: 0, des: 0 });
                    found.len() - 1
                });
                found[x].und |= und;
                found[x].des |= !und & atoms;
                let mut c = 0;
                while c < per.len() {
                    odometer[c] += 1;
                    if odometer[c] < per[c].len() {
                        break;
                    }
                    odometer[c] = 0;
                    c += 1;
                }
                if c == per.len() {
                    break;
                }
            }
        }
        let l1: Vec<Vec<Vec<(u128, u64)>>> = members(self.l1)
            .iter()
            .map(|cs| cs.iter().map(|&(c, t)| pattern.local(c, t)).collect())
            .collect();
        // per configuration, member and component of the first logic
        let status: Vec<Vec<Vec<Realized>>> = found
            .iter()
            .map(|r| {
                l1.iter()
                    .map(|cs| {
                        cs.iter()
                            .map(|local| {
                                let mut out = Realized { key: r.key, und: 0, des: 0 };
                                for &(le, u) in local {
                                    if r.key.0 & !le == 0 && r.key.1 & le == 0 {
                                        out.und |= u;
                                        out.des |= !u & atoms;
                                    }
                                }
                                out
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let realized = |s: &Realized| s.und | s.des != 0;
        let chi = |x: usize| pattern.formula(found[x].key);
        for x in 0..found.len() {
            if status[x].iter().all(|cs| cs.iter().all(|s| !realized(s))) {
                return self.confirm(Vec::new(), chi(x).gneg()).map(Some);
            }
        }
        // full patterns of single components, which the product patterns
        // above may blur
        let local = |l: &[Vec<Vec<(u128, u64)>>]| {
            let mut out: Vec<(u128, u64, u64)> = Vec::new();
            for &(le, u) in l.iter().flatten().flatten() {
                match out.iter_mut().find(|e| e.0 == le) {
                    Some(e) => {
                        e.1 |= u;
                        e.2 |= !u & atoms;
                    }
                    None => out.push((le, u, !u & atoms)),
                }
            }
            out
        };
        let l2: Vec<Vec<Vec<(u128, u64)>>> = members(self.l2)
            .iter()
            .map(|cs| cs.iter().map(|&(c, t)| pattern.local(c, t)).collect())
            .collect();
        let (local1, local2) = (local(&l1), local(&l2));
        let in_l1 = |le: u128| local1.iter().find(|e| e.0 == le).map(|e| (e.1, e.2)).unwrap_or((0, 0));
        for &(le, _, _) in &local2 {
            if !local1.iter().any(|e| e.0 == le) {
                return self.confirm(Vec::new(), pattern.formula((le, !le & pattern.all)).gneg()).map(Some);
            }
        }
        if self.expired() {
            return Ok(None);
        }
        for x in 0..found.len() {
            if status[x].iter().all(|cs| cs.iter().any(|s| !realized(s))) {
                return self.confirm(vec![chi(x)], Formula::Bot).map(Some);
            }
        }
        for x in 0..found.len() {
            for atom in (0..2 * k).filter(|a| found[x].des & 1 << a != 0) {
                if status[x].iter().all(|cs| cs.iter().any(|s| s.des & 1 << atom == 0)) {
                    return self.confirm(vec![chi(x), pattern.term(atom)], Formula::Bot).map(Some);
                }
            }
        }
        for x in 0..found.len() {
            for atom in (0..2 * k).filter(|a| found[x].und & 1 << a != 0) {
                let holds = status[x].iter().all(|cs| {
                    !(0..cs.len()).any(|c0| {
                        cs[c0].und & 1 << atom != 0 && (0..cs.len()).all(|c| c == c0 || realized(&cs[c]))
                    })
                });
                if holds {
                    return self.confirm(vec![chi(x)], pattern.term(atom)).map(Some);
                }
            }
        }
        // a guard `D r` on a fresh variable confines a failure to one
        // component: `c | D r, a | D r |- r` fails exactly when some
        // component realizes `c` with `a` designated
        let guard = Formula::var(var_names(k + 1)[k].clone());
        let guarded = |f: Formula| f.or(guard.clone().delta());
        for &(le, und, des) in &local2 {
            let (und1, des1) = in_l1(le);
            let c = pattern.formula((le, !le & pattern.all));
            for atom in 0..2 * k {
                let bit = 1u64 << atom;
                if des & bit != 0 && des1 & bit == 0 {
                    let gamma = vec![guarded(c.clone()), guarded(pattern.term(atom))];
                    return self.confirm(gamma, guard.clone()).map(Some);
                }
                if und & bit != 0 && und1 & bit == 0 {
                    return self.confirm(vec![guarded(c.clone())], guarded(pattern.term(atom))).map(Some);
                }
            }
        }
        Ok(None)
    }
}

/// A configuration with the atoms it leaves undesignated in some component,
/// and those it designates in every component, over its realizations.
struct Realized {
    key: (u128, u128),
    und: u64,
    des: u64,
}

/// Order patterns of the terms `p_0, ~p_0, ..., p_(k-1), ~p_(k-1), 0, 1`.
struct Pattern {
    k: usize,
    vars: Vec<String>,
    /// Pairs `(s, t)` read as `s <= t`, one of each pair of mirror images.
    pairs: Vec<(usize, usize)>,
    all: u128,
}

impl Pattern {
    fn new(k: usize) -> Pattern {
        let m = 2 * k + 2;
        let mirror = |s: usize| if s < 2 * k { s ^ 1 } else { 4 * k + 1 - s };
        let mut pairs = Vec::new();
        for s in 0..m {
            for t in 0..m {
                if s == t || (s >= 2 * k && t >= 2 * k) || s == 2 * k || t == 2 * k + 1 {
                    continue;
                }
                if (s, t) <= (mirror(t), mirror(s)) {
                    pairs.push((s, t));
                }
            }
        }
        let all = full(pairs.len());
        Pattern {
            k,
            vars: var_names(k),
            pairs,
            all,
        }
    }

    fn value(&self, chain: Chain, x: &[Elem], s: usize) -> Elem {
        if s < 2 * self.k {
            let v = x[s / 2];
            if s.is_multiple_of(2) {
                v
            } else {
                chain.top() - v
            }
        } else if s == 2 * self.k {
            0
        } else {
            chain.top()
        }
    }

    /// Distinct (order pattern, undesignated atoms) over all assignments of
    /// the `k` variables into a component.
    fn local(&self, chain: Chain, threshold: Elem) -> Vec<(u128, u64)> {
        let size = chain.size();
        let mut out: Vec<(u128, u64)> = Vec::new();
        let mut x = vec![0 as Elem; self.k];
        loop {
            let mut le = 0u128;
            for (b, &(s, t)) in self.pairs.iter().enumerate() {
                if self.value(chain, &x, s) <= self.value(chain, &x, t) {
                    le |= 1 << b;
                }
            }
            let mut und = 0u64;
            for atom in 0..2 * self.k {
                if self.value(chain, &x, atom) < threshold {
                    und |= 1 << atom;
                }
            }
            if !out.contains(&(le, und)) {
                out.push((le, und));
            }
            let mut i = 0;
            while i < self.k {
                x[i] += 1;
                if (x[i] as usize) < size {
                    break;
                }
                x[i] = 0;
                i += 1;
            }
            if i == self.k {
                return out;
            }
        }
    }

    fn term(&self, s: usize) -> Formula {
        if s < 2 * self.k {
            let v = Formula::var(self.vars[s / 2].clone());
            if s.is_multiple_of(2) {
                v
            } else {
                v.inv()
            }
        } else if s == 2 * self.k {
            Formula::Bot
        } else {
            Formula::Top
        }
    }

    fn formula(&self, (pos, neg): (u128, u128)) -> Formula {
        let mut lits = Vec::new();
        for (b, &(s, t)) in self.pairs.iter().enumerate() {
            let lit = || self.term(s).imp(self.term(t)).delta();
            if pos & 1 << b != 0 {
                lits.push(lit());
            } else if neg & 1 << b != 0 {
                lits.push(lit().gneg());
            }
        }
        conj(lits)
    }
}

/// A query holding in `l1` and failing in `l2`, within `bounds`.
pub fn find_separating_consequence(
    l1: &LogicDescriptor,
    l2: &LogicDescriptor,
    bounds: &SearchBounds,
    limits: &Limits,
) -> Result<Option<Separation>> {
    if l1.side != l2.side {
        return invalid(format!("{} and {} are over different signatures", l1.label(), l2.label()));
    }
    let search = Search {
        l1,
        l2,
        limits,
        start: Instant::now(),
        bounds: *bounds,
    };
    if let Some(s) = search.one_variable()? {
        return Ok(Some(s));
    }
    if l1.side != Side::GodelInv {
        return Ok(None);
    }
    for k in 1..=bounds.max_vars.min(4) {
        if search.expired() {
            return Ok(None);
        }
        if let Some(s) = search.configurations(k)? {
            return Ok(Some(s));
        }
    }
    Ok(None)
}
