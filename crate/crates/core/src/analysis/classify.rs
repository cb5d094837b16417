//! Saturated and ideal paraconsistency over a catalog.
//!
//! A catalog logic is saturated when it is paraconsistent and each of its
//! certified extensions in the catalog is either not paraconsistent or
//! equal to it. An extension counts as proper only once a separating query
//! has been found; otherwise the verdict stays open.
//!
//! Ideal paraconsistency also asks for maximality below classical logic,
//! which quantifies over all formulas. It is read off the classification
//! theorems and reported as theorem-derived, with the checked pieces
//! attached.

use rayon::prelude::*;
use serde::Serialize;

use super::{
    find_separating_consequence, is_paraconsistent, lfi_witness, validates_explosion, LfiWitness, Negation,
    Paraconsistency, SearchBounds, Separation, Witness,
};
use crate::catalog::{enumerate_luk_catalog, saturated_product, CatalogIndex, LogicDescriptor, Side};
use crate::entailment::Limits;
use crate::error::{invalid, Error, Result};
use crate::formula::ConsistencyOp;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ExtensionStatus {
    NotParaconsistent,
    /// Embeddings both ways: the same logic.
    Equal,
    /// A separating query shows the extension is proper.
    Proper,
    /// No separating query within the search bounds.
    Unknown,
    /// Not searched because another proper extension was already found.
    Unchecked,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExtensionAudit {
    pub index: usize,
    pub logic: String,
    /// The embedding certifying that this entry extends the audited one.
    pub certificate: String,
    pub paraconsistent: bool,
    pub status: ExtensionStatus,
    /// Holds in the extension and fails in the audited logic.
    pub separator: Option<Separation>,
}

/// Expected classification from the theorems for the catalog parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremClause {
    pub clause: String,
    pub names: Vec<String>,
}

/// A logic strictly between a non-ideal logic and classical logic.
#[derive(Clone, Debug, Serialize)]
pub struct NonIdealWitness {
    pub between: String,
    /// Holds in the intermediate logic, fails in the audited one.
    pub lower: Separation,
    /// Holds in classical logic, fails in the intermediate one.
    pub upper: Separation,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassificationReport {
    pub logic: LogicDescriptor,
    pub index: Option<usize>,
    pub paraconsistent: Paraconsistency,
    pub explosive: bool,
    /// `p, ~p |- 0`.
    pub explosion: Witness,
    /// `None` when some paraconsistent extension could not be separated.
    pub saturated: Option<bool>,
    pub audit: Vec<ExtensionAudit>,
    pub ideal: Option<bool>,
    /// How the ideal flag was obtained.
    pub ideal_basis: Option<String>,
    pub non_ideal_witness: Option<NonIdealWitness>,
    pub lfi: Option<LfiWitness>,
    /// What the classification theorems predict for this logic.
    pub theorem_saturated: Option<bool>,
    pub theorem_ideal: Option<bool>,
}

impl ClassificationReport {
    pub fn label(&self) -> String {
        self.logic.label()
    }

    /// Every attached certificate re-verifies.
    pub fn certify(&self) -> bool {
        let mut ok = self.paraconsistent.witness.certify() && self.explosion.certify();
        for a in &self.audit {
            if let Some(s) = &a.separator {
                ok &= s.certify();
            }
            ok &= (a.status == ExtensionStatus::Proper) == a.separator.is_some();
        }
        if let Some(w) = &self.non_ideal_witness {
            ok &= w.lower.certify() && w.upper.certify();
        }
        if let Some(l) = &self.lfi {
            ok &= l.witnesses().iter().all(|w| w.certify());
        }
        ok
    }

    /// Whether the computed flags match the theorem predictions, where both
    /// are known.
    pub fn agrees_with_theorems(&self) -> bool {
        let same = |a: Option<bool>, b: Option<bool>| match (a, b) {
            (Some(a), Some(b)) => a == b,
            _ => true,
        };
        same(self.saturated, self.theorem_saturated) && same(self.ideal, self.theorem_ideal)
    }
}

/// Saturated logics predicted for a catalog: by the classification
/// theorem for Goedel chains with `n > 4`, and by direct inspection of the
/// few paraconsistent matrices for `n <= 4`. There is no prediction for
/// Lukasiewicz catalogs.
pub fn theorem_saturated(side: Side, n: usize) -> Option<TheoremClause> {
    if side != Side::GodelInv {
        return None;
    }
    let (clause, names): (&str, &[&str]) = match n {
        0 | 1 => return None,
        2 => ("n = 2: only classical logic, which is explosive", &[]),
        3 => ("n = 3: J3 is the only paraconsistent matrix", &["J3"]),
        4 => ("n = 4: J4 is the only paraconsistent matrix", &["J4"]),
        _ if n % 2 == 1 => ("odd n > 4: J3, J4 and J3 x J4", &["J3", "J4", "J3xJ4"]),
        _ => ("even n > 4: J4", &["J4"]),
    };
    Some(TheoremClause {
        clause: clause.to_string(),
        names: names.iter().map(|s| s.to_string()).collect(),
    })
}

/// Ideal logics predicted for a catalog. Goedel side: the saturated single
/// matrices. Lukasiewicz side: `L(q,j)` for each prime `q | n` with
/// `j = ceil(i q / n)` and `2 j <= q`.
pub fn theorem_ideal(side: Side, n: usize, i: Option<usize>) -> Option<TheoremClause> {
    match side {
        Side::GodelInv => {
            let sat = theorem_saturated(side, n)?;
            Some(TheoremClause {
                clause: format!("{}; the single matrices among them", sat.clause),
                names: sat.names.into_iter().filter(|s| !s.contains('x')).collect(),
            })
        }
        Side::Luk => {
            let i = i?;
            let primes = crate::catalog::compute_x(n, i).ok()?;
            Some(TheoremClause {
                clause: "L(q,j) with q prime, q | n, j/q <= 1/2".to_string(),
                names: primes.iter().map(|&q| format!("L({q},{})", (i * q).div_ceil(n))).collect(),
            })
        }
        Side::Ft => None,
    }
}

fn consistency_op(catalog: &CatalogIndex) -> Option<ConsistencyOp> {
    match catalog.side {
        Side::GodelInv => Some(ConsistencyOp::Godel),
        Side::Luk => Some(ConsistencyOp::Luk {
            n: catalog.n,
            i: catalog.i?,
        }),
        Side::Ft => None,
    }
}

struct Context<'a> {
    catalog: &'a CatalogIndex,
    para: Vec<Paraconsistency>,
    bounds: SearchBounds,
    limits: Limits,
}

impl<'a> Context<'a> {
    fn new(catalog: &'a CatalogIndex, bounds: &SearchBounds, limits: &Limits) -> Result<Context<'a>> {
        let para = catalog
            .entries
            .par_iter()
            .map(|d| is_paraconsistent(d, Negation::Inv, limits))
            .collect::<Result<Vec<_>>>()?;
        Ok(Context {
            catalog,
            para,
            bounds: *bounds,
            limits: *limits,
        })
    }

    fn audit(&self, k: usize) -> Result<(Option<bool>, Vec<ExtensionAudit>)> {
        if !self.para[k].paraconsistent {
            return Ok((Some(false), Vec::new()));
        }
        let entries = &self.catalog.entries;
        let mut audit = Vec::new();
        let mut proper = false;
        let mut unknown = false;
        for edge in self.catalog.extensions(k) {
            let t = edge.to;
            let paraconsistent = self.para[t].paraconsistent;
            let mut separator = None;
            let status = if !paraconsistent {
                ExtensionStatus::NotParaconsistent
            } else if self.catalog.extension_certificate(t, k).is_some() {
                ExtensionStatus::Equal
            } else if proper {
                ExtensionStatus::Unchecked
            } else {
                match find_separating_consequence(&entries[t], &entries[k], &self.bounds, &self.limits)? {
                    Some(s) => {
                        proper = true;
                        separator = Some(s);
                        ExtensionStatus::Proper
                    }
                    None => {
                        unknown = true;
                        ExtensionStatus::Unknown
                    }
                }
            };
            audit.push(ExtensionAudit {
                index: t,
                logic: entries[t].label(),
                certificate: edge.certificate.describe(self.catalog.matrix(t)),
                paraconsistent,
                status,
                separator,
            });
        }
        let saturated = if proper {
            Some(false)
        } else if unknown {
            None
        } else {
            Some(true)
        };
        Ok((saturated, audit))
    }

    fn report(&self, k: usize) -> Result<ClassificationReport> {
        let logic = &self.catalog.entries[k];
        let (saturated, audit) = self.audit(k)?;
        let explosion = validates_explosion(logic, &self.limits)?;
        let lfi = match consistency_op(self.catalog) {
            Some(op) if self.para[k].paraconsistent => Some(lfi_witness(logic, op, &self.limits)?),
            _ => None,
        };
        let name = logic.name.clone().unwrap_or_default();
        let predicted = |clause: Option<TheoremClause>| clause.map(|c| c.names.contains(&name));
        Ok(ClassificationReport {
            logic: logic.clone(),
            index: Some(k),
            paraconsistent: self.para[k].clone(),
            explosive: explosion.holds(),
            explosion,
            saturated,
            audit,
            ideal: None,
            ideal_basis: None,
            non_ideal_witness: None,
            lfi,
            theorem_saturated: predicted(theorem_saturated(self.catalog.side, self.catalog.n)),
            theorem_ideal: predicted(theorem_ideal(self.catalog.side, self.catalog.n, self.catalog.i)),
        })
    }

    fn classical(&self) -> Option<usize> {
        self.catalog.entries.iter().position(|d| {
            d.single()
                .is_some_and(|m| m.components().len() == 1 && m.components()[0].chain.size() == 2)
        })
    }

    /// An entry strictly between `k` and classical logic, preferring named
    /// entries.
    fn between(&self, k: usize) -> Result<Option<NonIdealWitness>> {
        let Some(cpl) = self.classical() else {
            return Ok(None);
        };
        let entries = &self.catalog.entries;
        let mut candidates: Vec<usize> = self
            .catalog
            .extensions(k)
            .into_iter()
            .map(|e| e.to)
            .filter(|&m| m != cpl && self.catalog.extension_certificate(m, cpl).is_some())
            .collect();
        candidates.sort_by_key(|&m| (entries[m].name.is_none(), m));
        for m in candidates {
            let Some(lower) = find_separating_consequence(&entries[m], &entries[k], &self.bounds, &self.limits)? else {
                continue;
            };
            let Some(upper) = find_separating_consequence(&entries[cpl], &entries[m], &self.bounds, &self.limits)?
            else {
                continue;
            };
            return Ok(Some(NonIdealWitness {
                between: entries[m].label(),
                lower,
                upper,
            }));
        }
        Ok(None)
    }

    fn ideal(&self, report: &mut ClassificationReport) -> Result<()> {
        let k = report.index.expect("catalog report");
        let logic = &self.catalog.entries[k];
        let single_chain = logic.single().map(|m| m.components().len() == 1).unwrap_or(false);
        let below_classical = self
            .classical()
            .is_some_and(|c| c == k || self.catalog.extension_certificate(k, c).is_some());
        match self.catalog.side {
            Side::GodelInv => {
                if report.saturated == Some(true) && !single_chain {
                    report.ideal = Some(false);
                    report.ideal_basis = Some("theorem-derived: saturated product, not maximal below CPL".into());
                    report.non_ideal_witness = self.between(k)?;
                } else if report.saturated == Some(true) {
                    report.ideal = Some(below_classical);
                    report.ideal_basis = Some("theorem-derived: saturated single matrix below CPL".into());
                } else {
                    report.ideal = report.saturated;
                    report.ideal_basis = Some("not saturated".into());
                }
            }
            Side::Luk => {
                let m = logic.single().filter(|_| single_chain).map(|m| m.components()[0]);
                let prime_half = m.is_some_and(|c| {
                    let (q, j) = (c.chain.size() - 1, c.filter.threshold() as usize);
                    is_prime(q) && 2 * j <= q
                });
                report.ideal = Some(prime_half && below_classical && report.paraconsistent.paraconsistent);
                report.ideal_basis = Some("theorem-derived: L(q,j) with q prime and j/q <= 1/2".into());
                if prime_half && report.saturated == Some(false) {
                    return Err(Error::Internal(format!(
                        "{} meets the ideal conditions but has a paraconsistent proper extension",
                        logic.label()
                    )));
                }
            }
            Side::Ft => {}
        }
        Ok(())
    }
}

fn is_prime(q: usize) -> bool {
    q >= 2 && (2..).take_while(|d| d * d <= q).all(|d| !q.is_multiple_of(d))
}

/// One report per catalog entry, with saturation decided from the
/// certified extensions.
pub fn classify_saturated(
    catalog: &CatalogIndex,
    bounds: &SearchBounds,
    limits: &Limits,
) -> Result<Vec<ClassificationReport>> {
    let ctx = Context::new(catalog, bounds, limits)?;
    (0..catalog.len()).into_par_iter().map(|k| ctx.report(k)).collect()
}

/// As [`classify_saturated`], also filling in the ideal flags.
pub fn classify_ideal(
    catalog: &CatalogIndex,
    bounds: &SearchBounds,
    limits: &Limits,
) -> Result<Vec<ClassificationReport>> {
    let ctx = Context::new(catalog, bounds, limits)?;
    (0..catalog.len())
        .into_par_iter()
        .map(|k| {
            let mut r = ctx.report(k)?;
            ctx.ideal(&mut r)?;
            Ok(r)
        })
        .collect()
}

/// Classifies one logic of a catalog.
pub fn verify_saturated(catalog: &CatalogIndex, logic: &LogicDescriptor, bounds: &SearchBounds, limits: &Limits) -> Result<ClassificationReport> {
    let Some(m) = logic.single() else {
        return invalid(format!("{} is not a single matrix", logic.label()));
    };
    let Some(k) = catalog.position(m) else {
        return invalid(format!("{} is not in the catalog", logic.label()));
    };
    let ctx = Context::new(catalog, bounds, limits)?;
    let mut r = ctx.report(k)?;
    ctx.ideal(&mut r)?;
    Ok(r)
}

/// The product over `primes` from the Lukasiewicz catalog for `n, i`,
/// audited against every extension in that catalog.
pub fn verify_saturated_product(
    n: usize,
    i: usize,
    primes: &[usize],
    bounds: &SearchBounds,
    limits: &Limits,
) -> Result<ClassificationReport> {
    let logic = saturated_product(n, i, primes)?;
    let catalog = enumerate_luk_catalog(n, i)?;
    verify_saturated(&catalog, &logic, bounds, limits)
}
