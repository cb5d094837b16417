//! Submatrix embeddings between product matrices.
//!
//! `sub` is a submatrix of a power of `sup` when every coordinate of some
//! copies of `sup` can be fed from a component of `sub` through a chain
//! embedding, such that a tuple of `sub` is designated exactly when its
//! image is. Then every evaluation into `sub` is one into `sup^k`, and the
//! logic of `sup` is included in that of `sub`.

use serde::{Deserialize, Serialize};

use crate::algebra::{chain_embeddings, is_chain_embedding, Elem, ProductMatrix};

/// Coordinate of a copy of the target, read from one source component.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CoordinateMap {
    pub source: usize,
    pub map: Vec<Elem>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Embedding {
    /// Each copy has one entry per component of the target.
    pub copies: Vec<Vec<CoordinateMap>>,
}

/// Least element of the source chain whose image is designated.
fn pre_threshold(map: &[Elem], threshold: Elem) -> Option<Elem> {
    map.iter().position(|&b| b >= threshold).map(|a| a as Elem)
}

impl Embedding {
    /// Re-checks every chain map and the designation condition.
    pub fn verify(&self, sub: &ProductMatrix, sup: &ProductMatrix) -> bool {
        let (sc, tc) = (sub.components(), sup.components());
        if self.copies.is_empty() {
            return false;
        }
        let mut exact = vec![false; sc.len()];
        for copy in &self.copies {
            if copy.len() != tc.len() {
                return false;
            }
            for (target, coord) in tc.iter().zip(copy) {
                let Some(source) = sc.get(coord.source) else {
                    return false;
                };
                if !is_chain_embedding(source.chain, target.chain, &coord.map) {
                    return false;
                }
                match pre_threshold(&coord.map, target.filter.threshold()) {
                    Some(t) if t < source.filter.threshold() => {}
                    Some(t) if t == source.filter.threshold() => exact[coord.source] = true,
                    _ => return false,
                }
            }
        }
        exact.into_iter().all(|e| e)
    }

    /// `identity` when the only copy is the identity on every coordinate.
    pub fn describe(&self, sub: &ProductMatrix) -> String {
        let copies: Vec<String> = self
            .copies
            .iter()
            .map(|copy| {
                let coords: Vec<String> = copy
                    .iter()
                    .map(|c| {
                        let chain = sub.components()[c.source].chain;
                        let pairs: Vec<String> = c
                            .map
                            .iter()
                            .enumerate()
                            .map(|(a, &b)| format!("{}>{}", chain.value_label(a as Elem), b))
                            .collect();
                        format!("#{}:{{{}}}", c.source, pairs.join(","))
                    })
                    .collect();
                format!("[{}]", coords.join(" "))
            })
            .collect();
        copies.join(" ")
    }
}

/// Finds copies of `sup` into which `sub` embeds, certifying that the logic
/// of `sup` is included in the logic of `sub`.
pub fn submatrix_embedding(sub: &ProductMatrix, sup: &ProductMatrix) -> Option<Embedding> {
    let (sc, tc) = (sub.components(), sup.components());
    // options[j]: (source, map, pre-threshold) usable for target coordinate j
    let options: Vec<Vec<(usize, Vec<Elem>, Elem)>> = tc
        .iter()
        .map(|target| {
            let mut out = Vec::new();
            for (i, source) in sc.iter().enumerate() {
                for map in chain_embeddings(source.chain, target.chain) {
                    if let Some(t) = pre_threshold(&map, target.filter.threshold()) {
                        if t <= source.filter.threshold() {
                            out.push((i, map, t));
                        }
                    }
                }
            }
            out
        })
        .collect();
    if options.iter().any(|o| o.is_empty()) {
        return None;
    }
    let mut exact = vec![false; sc.len()];
    let mut copies: Vec<Vec<CoordinateMap>> = Vec::new();
    for i in 0..sc.len() {
        if exact[i] {
            continue;
        }
        let thr = sc[i].filter.threshold();
        let pinned = (0..tc.len()).find_map(|j| {
            options[j]
                .iter()
                .position(|(s, _, t)| *s == i && *t == thr)
                .map(|k| (j, k))
        })?;
        let copy: Vec<CoordinateMap> = (0..tc.len())
            .map(|j| {
                let (s, map, _) = if j == pinned.0 {
                    &options[j][pinned.1]
                } else {
                    // prefer a coordinate that is exact for its source
                    options[j]
                        .iter()
                        .find(|(s, _, t)| *t == sc[*s].filter.threshold())
                        .unwrap_or(&options[j][0])
                };
                CoordinateMap {
                    source: *s,
                    map: map.clone(),
                }
            })
            .collect();
        for (target, c) in tc.iter().zip(&copy) {
            if pre_threshold(&c.map, target.filter.threshold()) == Some(sc[c.source].filter.threshold()) {
                exact[c.source] = true;
            }
        }
        copies.push(copy);
    }
    Some(Embedding { copies })
}
