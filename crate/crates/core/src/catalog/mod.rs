//! Named logics, matrix families and catalogs of intermediate logics.

mod embed;
mod index;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{Chain, ChainKind, Component, Elem, ProductMatrix};
use crate::entailment::{self, entails_family, entails_family_componentwise, Limits, Verdict};
use crate::error::{invalid, Error, Result};
use crate::formula::Formula;
use crate::random::{seeded, FormulaGen};

pub use embed::{submatrix_embedding, CoordinateMap, Embedding};
pub use index::{enumerate_godel_catalog, enumerate_luk_catalog, CatalogIndex, Edge};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    GodelInv,
    Luk,
    Ft,
}

impl Side {
    fn of(kind: ChainKind) -> Side {
        match kind {
            ChainKind::GodelInv => Side::GodelInv,
            ChainKind::Mv => Side::Luk,
            ChainKind::Ft => Side::Ft,
        }
    }
}

/// A logic given by a family of product matrices; its consequence is the
/// intersection of theirs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LogicDescriptor {
    pub name: Option<String>,
    pub family: Vec<ProductMatrix>,
    pub side: Side,
    pub n: Option<usize>,
    pub i: Option<usize>,
    pub thresholds: Vec<Elem>,
}

impl LogicDescriptor {
    pub fn new(name: Option<String>, family: Vec<ProductMatrix>) -> Result<LogicDescriptor> {
        let Some(first) = family.first() else {
            return invalid("a logic needs at least one matrix");
        };
        let kind = first.components()[0].chain.kind();
        if family
            .iter()
            .flat_map(|m| m.components())
            .any(|c| c.chain.kind() != kind)
        {
            return invalid("all matrices of a family must use chains of one kind");
        }
        Ok(LogicDescriptor {
            name,
            family: family.iter().map(|m| m.normalized()).collect(),
            side: Side::of(kind),
            n: None,
            i: None,
            thresholds: Vec::new(),
        })
    }

    pub fn from_matrix(m: ProductMatrix) -> LogicDescriptor {
        let m = m.normalized();
        let name = landmark_name(&m);
        LogicDescriptor::new(name, vec![m]).expect("one matrix of one kind")
    }

    fn with_params(mut self, n: Option<usize>, i: Option<usize>) -> LogicDescriptor {
        self.n = n;
        self.i = i;
        self
    }

    /// The name if any, else the matrices.
    pub fn label(&self) -> String {
        match &self.name {
            Some(n) => n.clone(),
            None => self.matrices_text(),
        }
    }

    pub fn matrices_text(&self) -> String {
        let parts: Vec<String> = self.family.iter().map(|m| m.to_string()).collect();
        parts.join(" ; ")
    }

    pub fn single(&self) -> Option<&ProductMatrix> {
        match self.family.as_slice() {
            [m] => Some(m),
            _ => None,
        }
    }

    /// Decides consequence, reading each product through tuples of
    /// evaluations, which costs a sum over components instead of a product.
    pub fn entails(&self, gamma: &[Formula], phi: &Formula, limits: &Limits) -> Result<Verdict> {
        entails_family_componentwise(&self.family, gamma, phi, limits)
    }

    /// Decides consequence by enumerating assignments into each full product.
    pub fn entails_literal(&self, gamma: &[Formula], phi: &Formula, limits: &Limits) -> Result<Verdict> {
        entails_family(&self.family, gamma, phi, limits)
    }
}

impl fmt::Display for LogicDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.name {
            Some(n) => write!(f, "{n} = {}", self.matrices_text()),
            None => f.write_str(&self.matrices_text()),
        }
    }
}

fn gv_single(n: usize, t: Elem) -> Result<ProductMatrix> {
    ProductMatrix::single(Chain::gv(n)?, t)
}

/// Names of the landmark matrices: `CPL`, `J3`, `J4`, `J3xJ4`, `J2xJ3`, and
/// `L(n,i)` for a single Lukasiewicz chain.
pub fn landmark_name(m: &ProductMatrix) -> Option<String> {
    let comps = m.normalized();
    let key: Vec<(ChainKind, usize, Elem)> = comps
        .components()
        .iter()
        .map(|c| (c.chain.kind(), c.chain.size(), c.filter.threshold()))
        .collect();
    use ChainKind::*;
    let name = match key.as_slice() {
        [(GodelInv, 2, 1)] => "CPL".to_string(),
        [(GodelInv, 3, 1)] => "J3".to_string(),
        [(GodelInv, 4, 1)] => "J4".to_string(),
        [(GodelInv, 4, 1), (GodelInv, 3, 1)] => "J3xJ4".to_string(),
        [(GodelInv, 3, 1), (GodelInv, 2, 1)] => "J2xJ3".to_string(),
        [(Mv, size, t)] => format!("L({},{})", size - 1, t),
        _ => return None,
    };
    Some(name)
}

/// Looks up a named logic:
/// `CPL`, `J3`, `J4`, `J3xJ4`, `J2xJ3`, `G<=n~`, `Gn~`, `L(n,i)`,
/// `Lexp(n)`, `FT(n)` and `LT(n;t1,...,tk)` with thresholds as indices.
pub fn named(name: &str) -> Result<LogicDescriptor> {
    let name = name.trim();
    let unknown = || Error::UnknownLogic(name.to_string());
    let fixed = match name {
        "CPL" => Some(gv_single(2, 1)?),
        "J3" => Some(gv_single(3, 1)?),
        "J4" => Some(gv_single(4, 1)?),
        "J3xJ4" => Some("GV4~[>=1] x GV3~[>=1]".parse()?),
        "J2xJ3" => Some("GV3~[>=1] x GV2~[>=1]".parse()?),
        _ => None,
    };
    if let Some(m) = fixed {
        return LogicDescriptor::new(Some(name.to_string()), vec![m]);
    }
    let number = |s: &str| s.trim().parse::<usize>().map_err(|_| unknown());
    if let Some(n) = name.strip_prefix("G<=").and_then(|r| r.strip_suffix('~')) {
        let n = number(n)?;
        return Ok(LogicDescriptor::new(Some(name.to_string()), entailment::degree_family(n)?)?.with_params(Some(n), None));
    }
    if let Some(n) = name.strip_prefix('G').and_then(|r| r.strip_suffix('~')) {
        let n = number(n)?;
        return Ok(LogicDescriptor::new(Some(name.to_string()), vec![entailment::truth_matrix(n)?])?.with_params(Some(n), None));
    }
    let call = |prefix: &str| -> Option<&str> { name.strip_prefix(prefix)?.strip_suffix(')') };
    if let Some(args) = call("Lexp(") {
        return build_l_exp(number(args)?);
    }
    if let Some(args) = call("FT(") {
        let n = number(args)?;
        let m = ProductMatrix::single(Chain::ft(n)?, 1)?;
        return Ok(LogicDescriptor::new(Some(format!("FT({n})")), vec![m])?.with_params(Some(n), None));
    }
    if let Some(args) = call("LT(") {
        let (n, ts) = args.split_once(';').ok_or_else(unknown)?;
        let ts = ts
            .split(',')
            .map(|t| number(t).map(|t| t.min(u8::MAX as usize) as Elem))
            .collect::<Result<Vec<_>>>()?;
        return build_lt(number(n)?, &ts);
    }
    if let Some(args) = call("L(") {
        let (n, i) = args.split_once(',').ok_or_else(unknown)?;
        let (n, i) = (number(n)?, number(i)?);
        return luk_single(n, i);
    }
    Err(unknown())
}

/// `L(n,i)`: the Lukasiewicz chain with `n + 1` elements and filter `F_{i/n}`.
pub fn luk_single(n: usize, i: usize) -> Result<LogicDescriptor> {
    if n == 0 || i == 0 || i > n {
        return invalid(format!("L({n},{i}) needs 1 <= i <= n"));
    }
    let m = ProductMatrix::single(Chain::lv(n + 1)?, i as Elem)?;
    Ok(LogicDescriptor::new(Some(format!("L({n},{i})")), vec![m])?.with_params(Some(n), Some(i)))
}

/// Parses a logic: a name, a serialized matrix such as
/// `GV5~[>=2] x GV3~[>=1]`, or several of these joined by `;` for the
/// intersection of their logics.
pub fn parse_logic(text: &str) -> Result<LogicDescriptor> {
    let mut parts = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (k, ch) in text.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ';' if depth == 0 => {
                parts.push(&text[start..k]);
                start = k + 1;
            }
            _ => {}
        }
    }
    parts.push(&text[start..]);
    let parts: Vec<&str> = parts.into_iter().map(str::trim).filter(|p| !p.is_empty()).collect();
    let one = |p: &str| -> Result<LogicDescriptor> {
        match named(p) {
            Ok(d) => Ok(d),
            Err(Error::UnknownLogic(_)) => match p.parse::<ProductMatrix>() {
                Ok(m) => Ok(LogicDescriptor::from_matrix(m)),
                Err(_) => Err(Error::UnknownLogic(p.to_string())),
            },
            Err(e) => Err(e),
        }
    };
    match parts.as_slice() {
        [] => Err(Error::UnknownLogic(text.to_string())),
        [p] => one(p),
        _ => {
            let mut family = Vec::new();
            for p in &parts {
                family.extend(one(p)?.family);
            }
            LogicDescriptor::new(Some(parts.join(" ; ")), family)
        }
    }
}

fn check_thresholds(n: usize, ts: &[Elem]) -> Result<Vec<Elem>> {
    let chain = Chain::gv(n)?;
    let mut ts = ts.to_vec();
    ts.sort_unstable();
    ts.dedup();
    if ts.is_empty() {
        return invalid("the threshold set must be nonempty");
    }
    for &t in &ts {
        Component::new(chain, t)?;
    }
    Ok(ts)
}

/// The product of `k = |T|` copies of `GV_n~` with the filters `F_t`, `t` in `T`.
pub fn build_lt(n: usize, thresholds: &[Elem]) -> Result<LogicDescriptor> {
    let ts = check_thresholds(n, thresholds)?;
    let chain = Chain::gv(n)?;
    let comps = ts
        .iter()
        .map(|&t| Component::new(chain, t))
        .collect::<Result<Vec<_>>>()?;
    let listed: Vec<String> = ts.iter().map(|t| t.to_string()).collect();
    let mut d = LogicDescriptor::new(
        Some(format!("LT({n};{})", listed.join(","))),
        vec![ProductMatrix::new(comps)?],
    )?
    .with_params(Some(n), None);
    d.thresholds = ts;
    Ok(d)
}

/// Right-hand side of the description of `L(T)`: either the premises
/// cannot all reach `max T`, or the conclusion follows on every single
/// matrix `<GV_n~, F_t>`, `t` in `T`.
pub fn lt_characterization(n: usize, thresholds: &[Elem], gamma: &[Formula], phi: &Formula, limits: &Limits) -> Result<bool> {
    let ts = check_thresholds(n, thresholds)?;
    let max = *ts.last().unwrap();
    if entailment::entails_matrix(&gv_single(n, max)?, gamma, &Formula::Bot, limits)?.holds {
        return Ok(true);
    }
    for &t in &ts {
        if !entailment::entails_matrix(&gv_single(n, t)?, gamma, phi, limits)?.holds {
            return Ok(false);
        }
    }
    Ok(true)
}

/// First index `i` with `i/(n-1) > 1/2`.
pub fn lexp_index(n: usize) -> usize {
    (n - 1) / 2 + 1
}

/// The family generating the least extension of `G<=n~` with the
/// explosion rule: `<GV_n~^i, F_{i/(n-1)} x ... x F_{1/(n-1)}>` together
/// with `<GV_n~, F_t>` for `t > i`.
pub fn build_l_exp(n: usize) -> Result<LogicDescriptor> {
    if n < 3 {
        return invalid(format!("Lexp needs n >= 3, got {n}"));
    }
    let chain = Chain::gv(n)?;
    let i = lexp_index(n);
    let product = ProductMatrix::new(
        (1..=i as Elem)
            .rev()
            .map(|t| Component::new(chain, t))
            .collect::<Result<Vec<_>>>()?,
    )?;
    let mut family = vec![product];
    for t in (i + 1..n).rev() {
        family.push(ProductMatrix::single(chain, t as Elem)?);
    }
    Ok(LogicDescriptor::new(Some(format!("Lexp({n})")), family)?.with_params(Some(n), Some(i)))
}

/// Right-hand side of the description of `Lexp(n)`: the premises cannot all
/// reach `i/(n-1)`, or the conclusion follows in `G<=n~`.
pub fn l_exp_characterization(n: usize, gamma: &[Formula], phi: &Formula, limits: &Limits) -> Result<bool> {
    let i = lexp_index(n);
    if entailment::entails_matrix(&gv_single(n, i as Elem)?, gamma, &Formula::Bot, limits)?.holds {
        return Ok(true);
    }
    Ok(entailment::entails_degree_preserving(n, gamma, phi, limits)?.holds)
}

/// Compares a descriptor with a characterization on seeded random queries
/// over at most `vars` variables; returns the first disagreement.
pub fn sample_disagreement(
    logic: &LogicDescriptor,
    characterization: impl Fn(&[Formula], &Formula) -> Result<bool>,
    samples: usize,
    vars: usize,
    seed: u64,
    limits: &Limits,
) -> Result<Option<(Vec<Formula>, Formula)>> {
    let gen = FormulaGen::godel(vars, 3);
    let mut rng = seeded(seed);
    for _ in 0..samples {
        let (gamma, phi) = gen.query(&mut rng, 2);
        if logic.entails(&gamma, &phi, limits)?.holds != characterization(&gamma, &phi)? {
            return Ok(Some((gamma, phi)));
        }
    }
    Ok(None)
}

fn is_prime(p: usize) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Primes `p | n` for which `F_{i/n}` restricted to the chain with `p + 1`
/// elements starts at or below `1/2`.
pub fn compute_x(n: usize, i: usize) -> Result<Vec<usize>> {
    if n == 0 || i == 0 || i > n {
        return invalid(format!("compute_x needs 1 <= i <= n, got n = {n}, i = {i}"));
    }
    Ok((2..=n)
        .filter(|&p| n.is_multiple_of(p) && is_prime(p))
        .filter(|&p| 2 * (i * p).div_ceil(n) <= p)
        .collect())
}

/// `(F_{i/n})^j` on the product of the chains with `p + 1` elements, `p` in
/// `primes`; the primes must lie in [`compute_x`].
pub fn saturated_product(n: usize, i: usize, primes: &[usize]) -> Result<LogicDescriptor> {
    if primes.is_empty() {
        return invalid("the prime set must be nonempty");
    }
    let x = compute_x(n, i)?;
    if let Some(p) = primes.iter().find(|p| !x.contains(p)) {
        return invalid(format!("{p} is not in X = {x:?} for n = {n}, i = {i}"));
    }
    let mut primes = primes.to_vec();
    primes.sort_unstable();
    primes.dedup();
    let comps = primes
        .iter()
        .map(|&p| Component::new(Chain::lv(p + 1)?, (i * p).div_ceil(n) as Elem))
        .collect::<Result<Vec<_>>>()?;
    let m = ProductMatrix::new(comps)?.normalized();
    let name = landmark_name(&m);
    Ok(LogicDescriptor::new(name, vec![m])?.with_params(Some(n), Some(i)))
}
