//! Enumerated catalogs with certified extension edges.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{submatrix_embedding, Embedding, LogicDescriptor, Side};
use crate::algebra::{enumerate_mv_subchains, enumerate_subuniverses, Chain, Component, Elem, ProductMatrix};
use crate::error::{invalid, Result};

/// `to` extends `from`, certified by an embedding of the matrix of `to`
/// into a power of the matrix of `from`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub certificate: Embedding,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CatalogIndex {
    pub side: Side,
    pub n: usize,
    pub i: Option<usize>,
    pub max_components: usize,
    pub entries: Vec<LogicDescriptor>,
}

fn combinations(len: usize, k: usize, emit: &mut dyn FnMut(&[usize])) {
    fn go(len: usize, k: usize, start: usize, cur: &mut Vec<usize>, emit: &mut dyn FnMut(&[usize])) {
        if cur.len() == k {
            emit(cur);
            return;
        }
        for x in start..len {
            cur.push(x);
            go(len, k, x + 1, cur, emit);
            cur.pop();
        }
    }
    go(len, k, 0, &mut Vec::new(), emit);
}

impl CatalogIndex {
    fn from_products(side: Side, n: usize, i: Option<usize>, max_components: usize, products: Vec<ProductMatrix>) -> CatalogIndex {
        let mut seen = BTreeSet::new();
        let entries = products
            .into_iter()
            .map(|m| m.normalized())
            .filter(|m| seen.insert(m.to_string()))
            .map(|m| {
                let mut d = LogicDescriptor::from_matrix(m);
                d.n = Some(n);
                d.i = i;
                d
            })
            .collect();
        CatalogIndex {
            side,
            n,
            i,
            max_components,
            entries,
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn matrix(&self, k: usize) -> &ProductMatrix {
        &self.entries[k].family[0]
    }

    pub fn position(&self, m: &ProductMatrix) -> Option<usize> {
        let m = m.normalized();
        self.entries.iter().position(|d| d.family[0] == m)
    }

    pub fn find(&self, name: &str) -> Option<usize> {
        self.entries
            .iter()
            .position(|d| d.name.as_deref() == Some(name) || d.family[0].to_string() == name)
    }

    /// Certificate that entry `to` extends entry `from`.
    pub fn extension_certificate(&self, from: usize, to: usize) -> Option<Embedding> {
        submatrix_embedding(self.matrix(to), self.matrix(from))
    }

    /// Certified extensions of an entry other than itself, in catalog order.
    pub fn extensions(&self, from: usize) -> Vec<Edge> {
        (0..self.len())
            .into_par_iter()
            .filter(|&to| to != from)
            .filter_map(|to| {
                self.extension_certificate(from, to).map(|certificate| Edge { from, to, certificate })
            })
            .collect()
    }

    /// Every certified edge between distinct entries.
    pub fn edges(&self) -> Vec<Edge> {
        (0..self.len())
            .into_par_iter()
            .flat_map_iter(|from| {
                (0..self.len()).filter(move |&to| to != from).filter_map(move |to| {
                    self.extension_certificate(from, to)
                        .map(|certificate| Edge { from, to, certificate })
                })
            })
            .collect()
    }

    /// Drops edges implied by two others through a third entry.
    pub fn covering_edges(&self, edges: &[Edge]) -> Vec<Edge> {
        let set: BTreeSet<(usize, usize)> = edges.iter().map(|e| (e.from, e.to)).collect();
        let mutual = |a: usize, b: usize| set.contains(&(a, b)) && set.contains(&(b, a));
        edges
            .iter()
            .filter(|e| {
                !(0..self.len()).any(|b| {
                    b != e.from
                        && b != e.to
                        && set.contains(&(e.from, b))
                        && set.contains(&(b, e.to))
                        && !mutual(e.from, b)
                        && !mutual(b, e.to)
                })
            })
            .cloned()
            .collect()
    }

    /// One line per entry: position, label and matrix.
    pub fn listing(&self) -> String {
        let mut out = String::new();
        for (k, d) in self.entries.iter().enumerate() {
            let _ = writeln!(out, "{k}\t{}\t{}", d.label(), d.family[0]);
        }
        out
    }

    /// DOT graph of the given edges, drawn upwards from a logic to its
    /// extensions. `highlight` entries are drawn with a double border.
    pub fn to_dot(&self, edges: &[Edge], highlight: &[usize]) -> String {
        let mut out = String::from("digraph catalog {\n  rankdir=BT;\n  node [shape=box];\n");
        let mut used: BTreeSet<usize> = edges.iter().flat_map(|e| [e.from, e.to]).collect();
        used.extend(highlight.iter().copied());
        for k in used {
            let d = &self.entries[k];
            let label = match &d.name {
                Some(name) => format!("{name}\\n{}", d.family[0]),
                None => d.family[0].to_string(),
            };
            let style = if highlight.contains(&k) { ", peripheries=2" } else { "" };
            let _ = writeln!(out, "  n{k} [label=\"{label}\"{style}];");
        }
        for e in edges {
            let _ = writeln!(out, "  n{} -> n{};", e.from, e.to);
        }
        out.push_str("}\n");
        out
    }
}

/// Single matrices over products of distinct components `<A, F_t>`, with
/// `A` a subalgebra of `GV_n~`, up to `max_components` factors.
pub fn enumerate_godel_catalog(n: usize, max_components: usize) -> Result<CatalogIndex> {
    if max_components == 0 {
        return invalid("max_components must be at least 1");
    }
    let sizes: BTreeSet<usize> = enumerate_subuniverses(Chain::gv(n)?)?
        .iter()
        .map(|s| s.members.len())
        .collect();
    let mut comps = Vec::new();
    for &m in sizes.iter().rev() {
        let chain = Chain::gv(m)?;
        for t in (1..m as Elem).rev() {
            comps.push(Component::new(chain, t)?);
        }
    }
    let mut products = Vec::new();
    for k in 1..=max_components.min(comps.len()) {
        combinations(comps.len(), k, &mut |idx| {
            let m = ProductMatrix::new(idx.iter().map(|&x| comps[x]).collect()).expect("nonempty");
            products.push(m);
        });
    }
    Ok(CatalogIndex::from_products(Side::GodelInv, n, None, max_components, products))
}

/// Products of distinct divisor chains of the Lukasiewicz chain with
/// `n + 1` elements, each with `F_{i/n}` restricted to it, in which at most
/// one factor has another factor dividing it.
pub fn enumerate_luk_catalog(n: usize, i: usize) -> Result<CatalogIndex> {
    if n == 0 || i == 0 || i > n {
        return invalid(format!("the Lukasiewicz catalog needs 1 <= i <= n, got n = {n}, i = {i}"));
    }
    let chains: Vec<Chain> = enumerate_mv_subchains(n)?.into_iter().rev().collect();
    let divisors: Vec<usize> = chains.iter().map(|c| c.size() - 1).collect();
    let comps = chains
        .iter()
        .zip(&divisors)
        .map(|(&c, &d)| Component::new(c, (i * d).div_ceil(n) as Elem))
        .collect::<Result<Vec<_>>>()?;
    let mut products = Vec::new();
    for k in 1..=comps.len() {
        combinations(comps.len(), k, &mut |idx| {
            let above = idx
                .iter()
                .filter(|&&a| idx.iter().any(|&b| b != a && divisors[a].is_multiple_of(divisors[b])))
                .count();
            if above <= 1 {
                products.push(ProductMatrix::new(idx.iter().map(|&x| comps[x]).collect()).expect("nonempty"));
            }
        });
    }
    Ok(CatalogIndex::from_products(Side::Luk, n, Some(i), comps.len(), products))
}
