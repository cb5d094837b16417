//! Term builders: definability terms, characterizers, axiom schemas and
//! consistency operators.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{conj, disj, Formula, TableConn};
use crate::algebra::{Elem, MAX_CHAIN_SIZE};
use crate::error::{invalid, Result};

/// `(x -> y) | (~x | y)`: the Lukasiewicz implication on three elements.
pub fn luk3_term(x: Formula, y: Formula) -> Formula {
    x.clone().imp(y.clone()).or(x.inv().or(y))
}

/// `~x | [D(~x -> x) & ~Dx & !!y & x] | (x -> y)`: the Lukasiewicz
/// implication on four elements.
pub fn luk4_term(x: Formula, y: Formula) -> Formula {
    let middle = conj([
        x.clone().inv().imp(x.clone()).delta(),
        x.clone().delta().inv(),
        y.clone().gneg().gneg(),
        x.clone(),
    ]);
    x.clone().inv().or(middle).or(x.imp(y))
}

/// Goedel implication and negation from the Lukasiewicz signature:
/// `D(x =>L y) | y` and `D~x`.
pub fn godel_from_mv_terms(x: Formula, y: Formula) -> (Formula, Formula) {
    let imp = x.clone().luk_imp(y.clone()).delta().or(y);
    let neg = x.inv().delta();
    (imp, neg)
}

/// `(D(x <-> y) & z) | (!D(x <-> y) & x)`.
pub fn discriminator_term(x: Formula, y: Formula, z: Formula) -> Formula {
    let eq = x.clone().iff(y).delta();
    eq.clone().and(z).or(eq.gneg().and(x))
}

/// Variables `p0, ..., p(n-1)` used by [`tuple_characterizer`].
pub fn indexed_var(prefix: &str, i: usize) -> Formula {
    Formula::var(format!("{prefix}{i}"))
}

/// A formula in `p0..p(n-1)` that is `1` exactly when `p_i = i/(n-1)` for
/// every `i`, and `0` otherwise.
pub fn tuple_characterizer(n: usize) -> Result<Formula> {
    if n < 2 {
        return invalid("the tuple characterizer needs n >= 2");
    }
    let v = |i| indexed_var("p", i);
    let mut parts = vec![v(0).gneg().delta(), v(n - 1).delta()];
    for i in 0..n - 1 {
        parts.push(v(i + 1).imp(v(i)).delta().gneg());
    }
    for i in 0..n {
        parts.push(v(i).iff(v(n - 1 - i).inv()).delta());
    }
    Ok(conj(parts))
}

/// The connective `~[i/n]` on the Lukasiewicz chain with `n + 1` elements:
/// `1` below `i/n`, `0` from `i/n` on.
pub fn tilde_table_conn(n: usize, i: usize) -> Result<TableConn> {
    if n == 0 || n + 1 > MAX_CHAIN_SIZE || i == 0 || i > n {
        return invalid(format!("~[{i}/{n}] needs 0 < i <= n"));
    }
    let table = (0..=n).map(|a| if a < i { n as Elem } else { 0 }).collect();
    TableConn::new(format!("~[{i}/{n}]"), 1, n + 1, table)
}

pub fn tilde(n: usize, i: usize, f: Formula) -> Result<Formula> {
    Formula::table(Arc::new(tilde_table_conn(n, i)?), vec![f])
}

/// `~[i/n]f | g`.
pub fn tilde_imp(n: usize, i: usize, f: Formula, g: Formula) -> Result<Formula> {
    Ok(tilde(n, i, f)?.or(g))
}

type Builder = Arc<dyn Fn(&[Formula]) -> Formula + Send + Sync>;

/// An axiom schema with `arity` metavariables.
#[derive(Clone)]
pub struct Schema {
    pub name: String,
    pub arity: usize,
    builder: Builder,
}

impl fmt::Debug for Schema {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Schema({}: {})", self.name, self.generic_instance())
    }
}

impl Schema {
    fn new(name: &str, arity: usize, build: impl Fn(&[Formula]) -> Formula + Send + Sync + 'static) -> Schema {
        Schema {
            name: name.to_string(),
            arity,
            builder: Arc::new(build),
        }
    }

    pub fn instantiate(&self, args: &[Formula]) -> Result<Formula> {
        if args.len() != self.arity {
            return invalid(format!("{} takes {} formulas", self.name, self.arity));
        }
        Ok((self.builder)(args))
    }

    /// The instance with distinct variables `p1, ..., pk`; by structurality
    /// it is valid on a matrix iff every instance is.
    pub fn generic_instance(&self) -> Formula {
        let args: Vec<Formula> = (1..=self.arity).map(|i| indexed_var("p", i)).collect();
        (self.builder)(&args)
    }
}

/// `(f1 -> f2) | ... | (fn -> f(n+1))`.
pub fn schema_agn(n: usize) -> Schema {
    Schema::new(&format!("AG{n}"), n + 1, move |a| {
        disj(a.windows(2).map(|w| w[0].clone().imp(w[1].clone())))
    })
}

/// `~D(f <-> ~f)`.
pub fn schema_nfp() -> Schema {
    Schema::new("NFP", 1, |a| a[0].clone().iff(a[0].clone().inv()).delta().inv())
}

/// The schemas of the Goedel logic with involution and Delta.
pub fn axiom_builders() -> Vec<Schema> {
    let c = |a: &[Formula], i: usize| a[i].clone();
    vec![
        Schema::new("A1", 3, move |a| {
            c(a, 0)
                .imp(c(a, 1))
                .imp(c(a, 1).imp(c(a, 2)).imp(c(a, 0).imp(c(a, 2))))
        }),
        Schema::new("A2", 2, move |a| c(a, 0).and(c(a, 1)).imp(c(a, 0))),
        Schema::new("A3", 2, move |a| c(a, 0).and(c(a, 1)).imp(c(a, 1).and(c(a, 0)))),
        Schema::new("A4a", 3, move |a| {
            c(a, 0)
                .imp(c(a, 1).imp(c(a, 2)))
                .imp(c(a, 0).and(c(a, 1)).imp(c(a, 2)))
        }),
        Schema::new("A4b", 3, move |a| {
            c(a, 0)
                .and(c(a, 1))
                .imp(c(a, 2))
                .imp(c(a, 0).imp(c(a, 1).imp(c(a, 2))))
        }),
        Schema::new("A5", 3, move |a| {
            let l = c(a, 0).imp(c(a, 1)).imp(c(a, 2));
            let r = c(a, 1).imp(c(a, 0)).imp(c(a, 2)).imp(c(a, 2));
            l.imp(r)
        }),
        Schema::new("A6", 1, move |a| Formula::Bot.imp(c(a, 0))),
        Schema::new("A7", 1, move |a| c(a, 0).imp(c(a, 0).and(c(a, 0)))),
        Schema::new("~1", 1, move |a| c(a, 0).inv().inv().iff(c(a, 0))),
        Schema::new("~2", 1, move |a| c(a, 0).gneg().imp(c(a, 0).inv())),
        Schema::new("~3", 2, move |a| {
            c(a, 0)
                .imp(c(a, 1))
                .delta()
                .imp(c(a, 1).inv().imp(c(a, 0).inv()).delta())
        }),
        Schema::new("D1", 1, move |a| c(a, 0).delta().or(c(a, 0).delta().gneg())),
        Schema::new("D2", 2, move |a| {
            c(a, 0)
                .or(c(a, 1))
                .delta()
                .imp(c(a, 0).delta().or(c(a, 1).delta()))
        }),
        Schema::new("D5", 2, move |a| {
            c(a, 0)
                .imp(c(a, 1))
                .delta()
                .imp(c(a, 0).delta().imp(c(a, 1).delta()))
        }),
    ]
}

/// Consistency operators of the logics of formal inconsistency.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ConsistencyOp {
    /// `D(!f | f)`.
    Godel,
    /// `~[i/n](f & ~f)`.
    Luk { n: usize, i: usize },
    /// The constant `1`.
    Top,
}

impl ConsistencyOp {
    pub fn apply(&self, f: &Formula) -> Result<Formula> {
        match *self {
            ConsistencyOp::Godel => Ok(f.clone().gneg().or(f.clone()).delta()),
            ConsistencyOp::Luk { n, i } => tilde(n, i, f.clone().and(f.clone().inv())),
            ConsistencyOp::Top => Ok(Formula::Top),
        }
    }
}

/// The named consistency operators.
pub fn consistency_ops(n: usize, i: usize) -> Vec<(&'static str, ConsistencyOp)> {
    vec![
        ("godel", ConsistencyOp::Godel),
        ("luk", ConsistencyOp::Luk { n, i }),
    ]
}
