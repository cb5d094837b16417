use std::fmt;

use super::Formula;
use crate::algebra::{BinaryOp, UnaryOp};

const IFF: u8 = 1;
const IMP: u8 = 2;
const OR: u8 = 3;
const AND: u8 = 4;
const PREFIX: u8 = 5;
const ATOM: u8 = 6;

fn level(op: BinaryOp) -> u8 {
    match op {
        BinaryOp::Iff => IFF,
        BinaryOp::GImp | BinaryOp::LukImp | BinaryOp::FtImp => IMP,
        BinaryOp::Or => OR,
        BinaryOp::And => AND,
    }
}

fn is_prefix_table(name: &str) -> bool {
    name.starts_with("~[")
}

fn render(f: &Formula, full: bool) -> (String, u8) {
    match f {
        Formula::Var(v) => (v.clone(), ATOM),
        Formula::Bot => ("0".into(), ATOM),
        Formula::Top => ("1".into(), ATOM),
        Formula::Unary(op, a) => (prefix(op.symbol(), *op == UnaryOp::Delta, a, full), PREFIX),
        Formula::Table(conn, args) if args.len() == 1 && is_prefix_table(&conn.name) => {
            (prefix(&conn.name, false, &args[0], full), PREFIX)
        }
        Formula::Table(conn, args) => {
            let parts: Vec<String> = args.iter().map(|a| render(a, full).0).collect();
            (format!("{}({})", conn.name, parts.join(", ")), ATOM)
        }
        Formula::Binary(op, a, b) => {
            let l = level(*op);
            let (ls, ll) = render(a, full);
            let (rs, rl) = render(b, full);
            let wrap_left = full && ll < PREFIX || ll < l || (l == IMP && ll == l);
            let wrap_right = full && rl < PREFIX || rl < l || (l != IMP && rl == l);
            let ls = if wrap_left { format!("({ls})") } else { ls };
            let rs = if wrap_right { format!("({rs})") } else { rs };
            (format!("{ls} {} {rs}", op.symbol()), l)
        }
    }
}

fn prefix(symbol: &str, spaced: bool, operand: &Formula, full: bool) -> String {
    let (s, l) = render(operand, full);
    if l < PREFIX {
        format!("{symbol}({s})")
    } else if spaced {
        format!("{symbol} {s}")
    } else {
        format!("{symbol}{s}")
    }
}

impl Formula {
    /// Every binary subformula in parentheses.
    pub fn to_canonical(&self) -> String {
        let (s, l) = render(self, true);
        if l < PREFIX {
            format!("({s})")
        } else {
            s
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self, false).0)
    }
}

#[cfg(test)]
mod tests {
    use crate::formula::parse;

    #[test]
    fn minimal_parentheses() {
        for text in [
            "D(p -> q) & (~p | q)",
            "!!p",
            "D p",
            "~p -> q",
            "p -> q -> r",
            "(p -> q) -> r",
            "p & q | r",
            "p & (q | r)",
            "p <-> q <-> r",
            "p <-> (q <-> r)",
            "D ~p",
            "~[2/4]p | q",
            "~[2/4](p & q)",
            "(p | q) | r",
        ] {
            let f = parse(text).unwrap();
            let printed = f.to_string();
            assert_eq!(parse(&printed).unwrap(), f, "{text}");
            if !text.starts_with("(p | q)") {
                assert_eq!(printed, text);
            }
        }
    }

    #[test]
    fn canonical_form() {
        let f = parse("p & q | ~r -> 0").unwrap();
        assert_eq!(f.to_canonical(), "(((p & q) | ~r) -> 0)");
        assert_eq!(parse(&f.to_canonical()).unwrap(), f);
    }
}
