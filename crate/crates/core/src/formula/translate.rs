//! Translations between consequence relations and signatures.

use std::fmt;
use std::str::FromStr;

use super::Formula;
use crate::algebra::{BinaryOp, UnaryOp};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Star {
    /// `(~f -> f) & !D(f <-> ~f)`: `1` iff the value is above 1/2.
    One,
    /// `~f -> f`: `1` iff the value is at least 1/2.
    Two,
    /// `!!f`: `1` iff the value is positive.
    Three,
}

pub fn star(which: Star, f: &Formula) -> Formula {
    let f = f.clone();
    match which {
        Star::One => {
            let fixed = f.clone().iff(f.clone().inv()).delta().gneg();
            f.clone().inv().imp(f).and(fixed)
        }
        Star::Two => f.clone().inv().imp(f),
        Star::Three => f.gneg().gneg(),
    }
}

/// `{D g : g in gamma}`.
pub fn delta_set(gamma: &[Formula]) -> Vec<Formula> {
    gamma.iter().map(|g| g.clone().delta()).collect()
}

/// From the FT signature into the Goedel signature with involution:
/// `(f =>F g)* = D(f* -> g*) & (~f* | g*)`; every other connective is
/// carried through unchanged.
pub fn ft_star(f: &Formula) -> Formula {
    match f {
        Formula::Var(_) | Formula::Bot | Formula::Top => f.clone(),
        Formula::Unary(op, a) => Formula::unary(*op, ft_star(a)),
        Formula::Binary(BinaryOp::FtImp, a, b) => {
            let (a, b) = (ft_star(a), ft_star(b));
            a.clone().imp(b.clone()).delta().and(a.inv().or(b))
        }
        Formula::Binary(op, a, b) => Formula::binary(*op, ft_star(a), ft_star(b)),
        Formula::Table(c, args) => Formula::Table(c.clone(), args.iter().map(ft_star).collect()),
    }
}

/// `D a` inside the FT signature: `~0 =>F a`.
fn ft_delta(a: Formula) -> Formula {
    Formula::Bot.inv().ft_imp(a)
}

/// From the Goedel signature with involution into the FT signature:
/// `(f -> g)# = ~D~(f# =>F g#) | g#` with `D a := ~0 =>F a`; `&`, `|`, `~`
/// and `0` are kept, the remaining derived connectives are unfolded first.
pub fn ft_hash(f: &Formula) -> Formula {
    match f {
        Formula::Var(_) | Formula::Bot => f.clone(),
        Formula::Top => Formula::Bot.inv(),
        Formula::Unary(UnaryOp::Inv, a) => ft_hash(a).inv(),
        Formula::Unary(UnaryOp::GNeg, a) => ft_hash(&(**a).clone().imp(Formula::Bot)),
        Formula::Unary(UnaryOp::Delta, a) => ft_delta(ft_hash(a)),
        Formula::Binary(BinaryOp::GImp, a, b) => {
            let (a, b) = (ft_hash(a), ft_hash(b));
            ft_delta(a.ft_imp(b.clone()).inv()).inv().or(b)
        }
        Formula::Binary(BinaryOp::Iff, a, b) => {
            let (a, b) = ((**a).clone(), (**b).clone());
            ft_hash(&a.clone().imp(b.clone())).and(ft_hash(&b.imp(a)))
        }
        Formula::Binary(op, a, b) => Formula::binary(*op, ft_hash(a), ft_hash(b)),
        Formula::Table(c, args) => Formula::Table(c.clone(), args.iter().map(ft_hash).collect()),
    }
}

/// A named formula-to-formula translation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Translation {
    Star1,
    Star2,
    Star3,
    FtStar,
    FtHash,
    Delta,
}

impl Translation {
    pub const ALL: [Translation; 6] = [
        Translation::Star1,
        Translation::Star2,
        Translation::Star3,
        Translation::FtStar,
        Translation::FtHash,
        Translation::Delta,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Translation::Star1 => "star1",
            Translation::Star2 => "star2",
            Translation::Star3 => "star3",
            Translation::FtStar => "ft-star",
            Translation::FtHash => "ft-hash",
            Translation::Delta => "delta-set",
        }
    }

    /// Source and target signatures.
    pub fn signatures(self) -> (&'static str, &'static str) {
        match self {
            Translation::FtStar => ("FT", "G~"),
            Translation::FtHash => ("G~", "FT"),
            _ => ("G~", "G~"),
        }
    }

    pub fn apply(self, f: &Formula) -> Formula {
        match self {
            Translation::Star1 => star(Star::One, f),
            Translation::Star2 => star(Star::Two, f),
            Translation::Star3 => star(Star::Three, f),
            Translation::FtStar => ft_star(f),
            Translation::FtHash => ft_hash(f),
            Translation::Delta => f.clone().delta(),
        }
    }
}

impl fmt::Display for Translation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Translation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Translation> {
        Translation::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown translation `{s}`")))
    }
}
