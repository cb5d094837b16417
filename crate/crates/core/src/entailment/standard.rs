//! Finitary consequence over the standard algebra `[0,1]` with an order
//! filter, decided on a finite symmetric grid.
//!
//! A `k`-variable query only sees the subalgebra generated by the values of
//! its variables, which lies inside `{0, 1/2, 1} u {v_i, 1 - v_i}`. Together
//! with the threshold and its mirror image that is at most `2k + 5` points,
//! and every such configuration embeds into `GV_{2k+5}~` preserving order and
//! `~`. Grid counterexamples are genuine since the grid is a subalgebra.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{entails_matrix, Limits, Verdict};
use crate::algebra::{Chain, Elem, ProductMatrix};
use crate::error::{Error, Result};
use crate::formula::Formula;

/// Classes of order filters on `[0,1]` giving one finitary logic each.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum StandardClass {
    /// `{1}`.
    Exact1,
    /// `[a, 1]` or `(a, 1]` with `1/2 < a < 1`.
    OpenPos,
    /// `[1/2, 1]`.
    AtHalf,
    /// `(1/2, 1]`.
    AboveHalf,
    /// `[a, 1]` or `(a, 1]` with `0 < a < 1/2`.
    OpenNeg,
    /// `(0, 1]`.
    AboveZero,
}

impl StandardClass {
    pub const ALL: [StandardClass; 6] = [
        StandardClass::Exact1,
        StandardClass::OpenPos,
        StandardClass::AtHalf,
        StandardClass::AboveHalf,
        StandardClass::OpenNeg,
        StandardClass::AboveZero,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StandardClass::Exact1 => "exact-1",
            StandardClass::OpenPos => "open-pos",
            StandardClass::AtHalf => "at-half",
            StandardClass::AboveHalf => "above-half",
            StandardClass::OpenNeg => "open-neg",
            StandardClass::AboveZero => "above-zero",
        }
    }

    /// The relation decided, e.g. `|-^f_[p` for the open classes, which are
    /// only known to agree with their finitary companions.
    pub fn relation(self) -> &'static str {
        match self {
            StandardClass::Exact1 => "|-_1",
            StandardClass::OpenPos => "|-^f_[p = |-^f_(p, 1/2 < p < 1",
            StandardClass::AtHalf => "|-_[1/2",
            StandardClass::AboveHalf => "|-_(1/2",
            StandardClass::OpenNeg => "|-^f_[n = |-^f_(n, 0 < n < 1/2",
            StandardClass::AboveZero => "|-_(0",
        }
    }

    pub fn is_finitary_only(self) -> bool {
        matches!(self, StandardClass::OpenPos | StandardClass::OpenNeg)
    }

    /// Thresholds on `GV_{2k+5}~` standing for the class.
    pub fn grid_thresholds(self, k: usize) -> Vec<Elem> {
        let top = (2 * k + 4) as Elem;
        let mid = top / 2;
        match self {
            StandardClass::Exact1 => vec![top],
            StandardClass::OpenPos => (mid + 1..top).collect(),
            StandardClass::AtHalf => vec![mid],
            StandardClass::AboveHalf => vec![mid + 1],
            StandardClass::OpenNeg => (1..mid).collect(),
            StandardClass::AboveZero => vec![1],
        }
    }
}

impl fmt::Display for StandardClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StandardClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<StandardClass> {
        StandardClass::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown filter class `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardVerdict {
    pub class: StandardClass,
    pub grid_size: usize,
    pub verdict: Verdict,
}

impl StandardVerdict {
    pub fn label(&self) -> String {
        let tag = if self.class.is_finitary_only() {
            " (finitary companion)"
        } else {
            ""
        };
        format!("{}{tag} on GV{}~", self.class.relation(), self.grid_size)
    }
}

/// Decides the finitary consequence of a filter class over `[0,1]`.
pub fn decide_standard(class: StandardClass, gamma: &[Formula], phi: &Formula, limits: &Limits) -> Result<StandardVerdict> {
    let k = gamma
        .iter()
        .chain(std::iter::once(phi))
        .flat_map(|f| f.vars())
        .collect::<std::collections::BTreeSet<_>>()
        .len();
    let grid_size = 2 * k + 5;
    let chain = Chain::gv(grid_size)?;
    let mut spent = 0u64;
    for t in class.grid_thresholds(k) {
        let m = ProductMatrix::single(chain, t)?;
        let lim = Limits {
            budget: limits.budget.saturating_sub(spent),
            ..*limits
        };
        let v = entails_matrix(&m, gamma, phi, &lim)?;
        spent = spent.saturating_add(v.steps);
        if !v.holds {
            return Ok(StandardVerdict {
                class,
                grid_size,
                verdict: Verdict { steps: spent, ..v },
            });
        }
    }
    Ok(StandardVerdict {
        class,
        grid_size,
        verdict: Verdict {
            holds: true,
            counterexample: None,
            steps: spent,
        },
    })
}
