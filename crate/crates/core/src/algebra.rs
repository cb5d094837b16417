//! Finite chains, order filters, product matrices and subuniverses.
//!
//! Elements of a chain with `n` elements are the indices `0..n`, index `i`
//! standing for the rational `i/(n-1)`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Elem = u8;

/// Largest supported carrier.
pub const MAX_CHAIN_SIZE: usize = 128;

/// Which signature formulas may use against a chain.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ChainKind {
    /// Goedel chain with involution, `GV_n~`.
    GodelInv,
    /// Lukasiewicz chain `LV_n`.
    Mv,
    /// The `{and, or, ~, =>F, 0}` reduct.
    Ft,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum UnaryOp {
    Inv,
    GNeg,
    Delta,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BinaryOp {
    And,
    Or,
    GImp,
    Iff,
    LukImp,
    FtImp,
}

impl UnaryOp {
    pub const ALL: [UnaryOp; 3] = [UnaryOp::Inv, UnaryOp::GNeg, UnaryOp::Delta];

    pub fn symbol(self) -> &'static str {
        match self {
            UnaryOp::Inv => "~",
            UnaryOp::GNeg => "!",
            UnaryOp::Delta => "D",
        }
    }
}

impl BinaryOp {
    pub const ALL: [BinaryOp; 6] = [
        BinaryOp::And,
        BinaryOp::Or,
        BinaryOp::GImp,
        BinaryOp::Iff,
        BinaryOp::LukImp,
        BinaryOp::FtImp,
    ];

    pub fn symbol(self) -> &'static str {
        match self {
            BinaryOp::And => "&",
            BinaryOp::Or => "|",
            BinaryOp::GImp => "->",
            BinaryOp::Iff => "<->",
            BinaryOp::LukImp => "=>L",
            BinaryOp::FtImp => "=>F",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Chain {
    kind: ChainKind,
    size: u8,
}

impl Chain {
    pub fn new(kind: ChainKind, size: usize) -> Result<Chain> {
        if !(2..=MAX_CHAIN_SIZE).contains(&size) {
            return Err(Error::InvalidSize(size));
        }
        Ok(Chain {
            kind,
            size: size as u8,
        })
    }

    /// `GV_n~`.
    pub fn gv(n: usize) -> Result<Chain> {
        Chain::new(ChainKind::GodelInv, n)
    }

    /// The Lukasiewicz chain with `n` elements.
    pub fn lv(n: usize) -> Result<Chain> {
        Chain::new(ChainKind::Mv, n)
    }

    pub fn ft(n: usize) -> Result<Chain> {
        Chain::new(ChainKind::Ft, n)
    }

    pub fn kind(&self) -> ChainKind {
        self.kind
    }

    pub fn size(&self) -> usize {
        self.size as usize
    }

    pub fn top(&self) -> Elem {
        self.size - 1
    }

    pub fn with_kind(&self, kind: ChainKind) -> Chain {
        Chain { kind, size: self.size }
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.size
    }

    pub fn check(&self, a: Elem) -> Result<Elem> {
        if a < self.size {
            Ok(a)
        } else {
            Err(Error::IndexOutOfRange {
                index: a as usize,
                size: self.size(),
            })
        }
    }

    pub fn meet(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.check(a)?.min(self.check(b)?))
    }

    pub fn join(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.check(a)?.max(self.check(b)?))
    }

    pub fn godel_implies(&self, a: Elem, b: Elem) -> Result<Elem> {
        self.binary(BinaryOp::GImp, a, b)
    }

    pub fn involution(&self, a: Elem) -> Result<Elem> {
        self.unary(UnaryOp::Inv, a)
    }

    pub fn delta(&self, a: Elem) -> Result<Elem> {
        self.unary(UnaryOp::Delta, a)
    }

    pub fn luk_implies(&self, a: Elem, b: Elem) -> Result<Elem> {
        self.binary(BinaryOp::LukImp, a, b)
    }

    pub fn ft_implies(&self, a: Elem, b: Elem) -> Result<Elem> {
        self.binary(BinaryOp::FtImp, a, b)
    }

    pub fn unary(&self, op: UnaryOp, a: Elem) -> Result<Elem> {
        Ok(self.unary_raw(op, self.check(a)?))
    }

    pub fn binary(&self, op: BinaryOp, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.binary_raw(op, self.check(a)?, self.check(b)?))
    }

    #[inline]
    pub(crate) fn unary_raw(&self, op: UnaryOp, a: Elem) -> Elem {
        let top = self.top();
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

    #[inline]
    pub(crate) fn binary_raw(&self, op: BinaryOp, a: Elem, b: Elem) -> Elem {
        let top = self.top();
        match op {
            BinaryOp::And => a.min(b),
            BinaryOp::Or => a.max(b),
            BinaryOp::GImp => {
                if a <= b {
                    top
                } else {
                    b
                }
            }
            BinaryOp::Iff => {
                if a == b {
                    top
                } else {
                    a.min(b)
                }
            }
            BinaryOp::LukImp => {
                if a <= b {
                    top
                } else {
                    top - a + b
                }
            }
            BinaryOp::FtImp => {
                if a <= b {
                    (top - a).max(b)
                } else {
                    0
                }
            }
        }
    }

    /// Whether a formula connective may be evaluated on this chain.
    ///
    /// Every connective is term-definable on every kind except the
    /// Lukasiewicz implication, which is only definable from the Goedel
    /// signature on chains with at most four elements.
    pub fn supports(&self, op: BinaryOp) -> bool {
        match op {
            BinaryOp::LukImp => self.kind == ChainKind::Mv || self.size <= 4,
            _ => true,
        }
    }

    pub fn signature_binary_ops(&self) -> Vec<BinaryOp> {
        BinaryOp::ALL
            .into_iter()
            .filter(|op| self.supports(*op))
            .collect()
    }

    /// The rational `a/(n-1)` as text, in lowest terms.
    pub fn value_label(&self, a: Elem) -> String {
        rational_label(a as usize, self.top() as usize)
    }

    /// Least index whose rational value is `>= num/den`.
    pub fn ceil_index(&self, num: usize, den: usize) -> Elem {
        let top = self.top() as usize;
        ((num * top).div_ceil(den)) as Elem
    }
}

pub fn rational_label(num: usize, den: usize) -> String {
    if num == 0 {
        return "0".into();
    }
    if num == den {
        return "1".into();
    }
    let g = gcd(num, den);
    format!("{}/{}", num / g, den / g)
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            ChainKind::GodelInv => write!(f, "GV{}~", self.size),
            ChainKind::Mv => write!(f, "LV{}", self.size),
            ChainKind::Ft => write!(f, "FT{}", self.size),
        }
    }
}

/// The principal order filter `{x : x >= threshold}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OrderFilter {
    threshold: Elem,
}

impl OrderFilter {
    pub fn new(chain: Chain, threshold: Elem) -> Result<OrderFilter> {
        if threshold == 0 || threshold > chain.top() {
            return Err(Error::InvalidThreshold {
                threshold: threshold as usize,
                size: chain.size(),
            });
        }
        Ok(OrderFilter { threshold })
    }

    pub fn threshold(&self) -> Elem {
        self.threshold
    }

    #[inline]
    pub fn contains(&self, a: Elem) -> bool {
        a >= self.threshold
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Component {
    pub chain: Chain,
    pub filter: OrderFilter,
}

impl Component {
    pub fn new(chain: Chain, threshold: Elem) -> Result<Component> {
        Ok(Component {
            chain,
            filter: OrderFilter::new(chain, threshold)?,
        })
    }

    fn sort_key(&self) -> (u8, Elem, ChainKind) {
        (self.chain.size, self.filter.threshold, self.chain.kind)
    }

    /// Paraconsistent with respect to the involution: some `a` with both
    /// `a` and `~a` designated.
    pub fn is_paraconsistent(&self) -> bool {
        self.chain
            .elements()
            .any(|a| self.filter.contains(a) && self.filter.contains(self.chain.top() - a))
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[>={}]", self.chain, self.filter.threshold)
    }
}

/// A matrix over a finite product of chains with a product of order filters.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ProductMatrix {
    components: Vec<Component>,
}

impl ProductMatrix {
    pub fn new(components: Vec<Component>) -> Result<ProductMatrix> {
        if components.is_empty() {
            return Err(Error::InvalidArgument(
                "a product matrix needs at least one component".into(),
            ));
        }
        Ok(ProductMatrix { components })
    }

    pub fn single(chain: Chain, threshold: Elem) -> Result<ProductMatrix> {
        ProductMatrix::new(vec![Component::new(chain, threshold)?])
    }

    /// Sorted by (size, threshold) descending with repeated components removed.
    pub fn normalized(&self) -> ProductMatrix {
        let mut comps = self.components.clone();
        comps.sort_by_key(|c| std::cmp::Reverse(c.sort_key()));
        comps.dedup();
        ProductMatrix { components: comps }
    }

    pub fn is_normalized(&self) -> bool {
        self.normalized() == *self
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn chains(&self) -> Vec<Chain> {
        self.components.iter().map(|c| c.chain).collect()
    }

    pub fn element_count(&self) -> u128 {
        self.components.iter().map(|c| c.chain.size() as u128).product()
    }

    pub fn is_designated(&self, tuple: &[Elem]) -> bool {
        tuple.len() == self.components.len()
            && self
                .components
                .iter()
                .zip(tuple)
                .all(|(c, &a)| c.filter.contains(a))
    }

    pub fn check_tuple(&self, tuple: &[Elem]) -> Result<()> {
        if tuple.len() != self.components.len() {
            return Err(Error::InvalidArgument(format!(
                "tuple of length {} for a product of {} components",
                tuple.len(),
                self.components.len()
            )));
        }
        for (c, &a) in self.components.iter().zip(tuple) {
            c.chain.check(a)?;
        }
        Ok(())
    }

    pub fn tuple_label(&self, tuple: &[Elem]) -> String {
        let parts: Vec<String> = self
            .components
            .iter()
            .zip(tuple)
            .map(|(c, &a)| c.chain.value_label(a))
            .collect();
        if parts.len() == 1 {
            parts[0].clone()
        } else {
            format!("({})", parts.join(", "))
        }
    }
}

impl fmt::Display for ProductMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.components.iter().enumerate() {
            if k > 0 {
                write!(f, " x ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for Component {
    type Err = Error;

    fn from_str(s: &str) -> Result<Component> {
        let s = s.trim();
        let err = |msg: &str| Error::Parse {
            pos: 0,
            msg: format!("{msg} in matrix component `{s}`"),
        };
        let (kind, rest) = if let Some(r) = s.strip_prefix("GV") {
            (ChainKind::GodelInv, r)
        } else if let Some(r) = s.strip_prefix("LV") {
            (ChainKind::Mv, r)
        } else if let Some(r) = s.strip_prefix("FT") {
            (ChainKind::Ft, r)
        } else {
            return Err(err("expected GV, LV or FT"));
        };
        let digits: String = rest.chars().take_while(|c| c.is_ascii_digit()).collect();
        let size: usize = digits.parse().map_err(|_| err("missing chain size"))?;
        let mut rest = rest[digits.len()..].trim_start();
        if kind == ChainKind::GodelInv {
            rest = rest
                .strip_prefix('~')
                .ok_or_else(|| err("expected `~` after GV size"))?
                .trim_start();
        }
        let inner = rest
            .strip_prefix("[>=")
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| err("expected `[>=t]`"))?;
        let t: usize = inner.trim().parse().map_err(|_| err("bad threshold"))?;
        let chain = Chain::new(kind, size)?;
        if t > u8::MAX as usize {
            return Err(Error::InvalidThreshold { threshold: t, size });
        }
        Component::new(chain, t as Elem)
    }
}

impl FromStr for ProductMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<ProductMatrix> {
        let comps = s
            .split('x')
            .map(|part| part.parse::<Component>())
            .collect::<Result<Vec<_>>>()?;
        ProductMatrix::new(comps)
    }
}

/// A subset of a chain closed under its operations.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Subuniverse {
    pub parent: Chain,
    pub members: Vec<Elem>,
}

impl Subuniverse {
    /// The chain this subuniverse is isomorphic to.
    pub fn as_chain(&self) -> Chain {
        Chain {
            kind: self.parent.kind,
            size: self.members.len() as u8,
        }
    }

    pub fn is_closed(&self) -> bool {
        generate_subuniverse(self.parent, &self.members)
            .map(|s| s.members == self.members)
            .unwrap_or(false)
    }
}

/// Least subuniverse containing `seeds` together with both constants.
pub fn generate_subuniverse(chain: Chain, seeds: &[Elem]) -> Result<Subuniverse> {
    let mut set: BTreeSet<Elem> = BTreeSet::new();
    set.insert(0);
    set.insert(chain.top());
    for &s in seeds {
        set.insert(chain.check(s)?);
    }
    let bin = chain.signature_binary_ops();
    loop {
        let current: Vec<Elem> = set.iter().copied().collect();
        let before = set.len();
        for &a in &current {
            for op in UnaryOp::ALL {
                set.insert(chain.unary_raw(op, a));
            }
            for &b in &current {
                for &op in &bin {
                    set.insert(chain.binary_raw(op, a, b));
                }
            }
        }
        if set.len() == before {
            break;
        }
    }
    Ok(Subuniverse {
        parent: chain,
        members: set.into_iter().collect(),
    })
}

/// All subuniverses of a Goedel chain with involution: the `~`-symmetric
/// subsets containing both constants.
pub fn enumerate_subuniverses(chain: Chain) -> Result<Vec<Subuniverse>> {
    if chain.kind != ChainKind::GodelInv {
        return Err(Error::InvalidArgument(format!(
            "subuniverse enumeration expects a GV chain, got {chain}"
        )));
    }
    let top = chain.top();
    let pairs: Vec<Elem> = (1..).take_while(|&a| 2 * a < top).collect();
    let mid = top.is_multiple_of(2).then_some(top / 2);
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        for with_mid in [false, true] {
            if with_mid && mid.is_none() {
                continue;
            }
            let mut members = vec![0, top];
            for (k, &a) in pairs.iter().enumerate() {
                if mask & (1 << k) != 0 {
                    members.push(a);
                    members.push(top - a);
                }
            }
            if with_mid {
                members.push(mid.unwrap());
            }
            members.sort_unstable();
            out.push(Subuniverse {
                parent: chain,
                members,
            });
        }
    }
    out.sort_by(|a, b| (a.members.len(), &a.members).cmp(&(b.members.len(), &b.members)));
    Ok(out)
}

/// The subchains of the Lukasiewicz chain with `n + 1` elements, one per
/// divisor of `n`, in increasing size.
pub fn enumerate_mv_subchains(n: usize) -> Result<Vec<Chain>> {
    if n == 0 || n + 1 > MAX_CHAIN_SIZE {
        return Err(Error::InvalidSize(n + 1));
    }
    (1..=n)
        .filter(|d| n.is_multiple_of(*d))
        .map(|d| Chain::lv(d + 1))
        .collect()
}

/// All embeddings of `from` into `into` as maps on indices.
///
/// Goedel and FT chains embed through any order- and involution-preserving
/// injection fixing the constants; Lukasiewicz chains only through the
/// value-preserving inclusion, which exists when `(m-1)` divides `(n-1)`.
pub fn chain_embeddings(from: Chain, into: Chain) -> Vec<Vec<Elem>> {
    if from.kind != into.kind || from.size > into.size {
        return Vec::new();
    }
    let (ft, it) = (from.top() as usize, into.top() as usize);
    match from.kind {
        ChainKind::Mv => {
            if it % ft != 0 {
                return Vec::new();
            }
            let k = it / ft;
            vec![from.elements().map(|a| (a as usize * k) as Elem).collect()]
        }
        ChainKind::GodelInv | ChainKind::Ft => {
            let from_mid = ft % 2 == 0;
            let into_mid = it % 2 == 0;
            if from_mid && !into_mid {
                return Vec::new();
            }
            // lower half of `from` without 0 and the midpoint
            let lower = (1..).take_while(|&a| 2 * a < ft).count();
            let candidates: Vec<usize> = (1..).take_while(|&a| 2 * a < it).collect();
            let mut out = Vec::new();
            let mut chosen = Vec::new();
            choose_increasing(&candidates, lower, 0, &mut chosen, &mut |images| {
                let mut map = vec![0 as Elem; from.size()];
                map[ft] = it as Elem;
                for (k, &img) in images.iter().enumerate() {
                    map[k + 1] = img as Elem;
                    map[ft - k - 1] = (it - img) as Elem;
                }
                if from_mid {
                    map[ft / 2] = (it / 2) as Elem;
                }
                out.push(map);
            });
            out
        }
    }
}

fn choose_increasing(
    pool: &[usize],
    k: usize,
    start: usize,
    chosen: &mut Vec<usize>,
    emit: &mut dyn FnMut(&[usize]),
) {
    if chosen.len() == k {
        emit(chosen);
        return;
    }
    for idx in start..pool.len() {
        if pool.len() - idx < k - chosen.len() {
            break;
        }
        chosen.push(pool[idx]);
        choose_increasing(pool, k, idx + 1, chosen, emit);
        chosen.pop();
    }
}

/// Exhaustively checks that `map` is an injective homomorphism for the
/// connectives usable on both chains.
pub fn is_chain_embedding(from: Chain, into: Chain, map: &[Elem]) -> bool {
    if from.kind != into.kind || map.len() != from.size() {
        return false;
    }
    if map.iter().any(|&b| b >= into.size) {
        return false;
    }
    let distinct: BTreeSet<Elem> = map.iter().copied().collect();
    if distinct.len() != map.len() {
        return false;
    }
    if map[0] != 0 || map[from.top() as usize] != into.top() {
        return false;
    }
    for a in from.elements() {
        for op in UnaryOp::ALL {
            if map[from.unary_raw(op, a) as usize] != into.unary_raw(op, map[a as usize]) {
                return false;
            }
        }
        for b in from.elements() {
            for op in from.signature_binary_ops() {
                if !into.supports(op) {
                    continue;
                }
                let lhs = map[from.binary_raw(op, a, b) as usize];
                let rhs = into.binary_raw(op, map[a as usize], map[b as usize]);
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}
