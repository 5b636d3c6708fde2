use super::formula::{names, Formula};
use super::parse::RESERVED;

const IMPL: u8 = 1;
const OR: u8 = 2;
const AND: u8 = 3;
const UNARY: u8 = 4;
const ATOM: u8 = 5;

/// Renders a formula with the fewest parentheses the grammar allows.
pub fn print(f: &Formula) -> String {
    let mut out = String::new();
    write(f, 0, &mut out);
    out
}

fn level(f: &Formula) -> u8 {
    match f {
        Formula::Var(_) => ATOM,
        Formula::App(c, args) => match (c.as_str(), args.len()) {
            (names::IMPL, 2) => IMPL,
            (names::OR, 2) => OR,
            (names::AND, 2) => AND,
            (_, 1) => UNARY,
            _ => ATOM,
        },
    }
}

fn write(f: &Formula, min: u8, out: &mut String) {
    let own = level(f);
    if own < min {
        out.push('(');
        write(f, 0, out);
        out.push(')');
        return;
    }
    match f {
        Formula::Var(v) => out.push_str(v),
        Formula::App(c, args) => match (c.as_str(), args.as_slice()) {
            (_, []) => out.push_str(c),
            (names::NOT, [a]) => {
                out.push('~');
                write(a, UNARY, out);
            }
            (_, [a]) => {
                out.push_str(c);
                out.push(' ');
                write(a, UNARY, out);
            }
            (names::IMPL, [a, b]) => {
                write(a, OR, out);
                out.push_str(" -> ");
                write(b, IMPL, out);
            }
            (names::OR, [a, b]) => {
                write(a, OR, out);
                out.push_str(" | ");
                write(b, AND, out);
            }
            (names::AND, [a, b]) => {
                write(a, AND, out);
                out.push_str(" & ");
                write(b, UNARY, out);
            }
            (_, args) => {
                debug_assert!(!RESERVED.contains(&c.as_str()));
                out.push_str(c);
                out.push('(');
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        out.push_str(", ");
                    }
                    write(a, 0, out);
                }
                out.push(')');
            }
        },
    }
}
