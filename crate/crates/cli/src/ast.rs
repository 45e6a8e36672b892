//! Script syntax tree and its canonical printer.
//!
//! Printing then parsing any tree yields the same tree: the printer adds
//! exactly the parentheses the precedence rules (`^` > `*` > `+`, all
//! left-associative) require.

use std::fmt;

/// A monomial inside `ideal(...)`, as exponents of `x1..xn`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoLit(pub Vec<u32>);

impl fmt::Display for MonoLit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{}", k + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Literal(Vec<MonoLit>),
    Ident(String),
    Sum(Box<Expr>, Box<Expr>),
    Product(Box<Expr>, Box<Expr>),
    Power(Box<Expr>, u32),
    Intersect(Box<Expr>, Box<Expr>),
    Colon(Box<Expr>, Box<Expr>),
    Sat(Box<Expr>, Box<Expr>),
    Trunc(Box<Expr>, u32),
}

impl Expr {
    fn precedence(&self) -> u8 {
        match self {
            Expr::Sum(..) => 1,
            Expr::Product(..) => 2,
            Expr::Power(..) => 3,
            _ => 4,
        }
    }

    fn write_operand(&self, f: &mut fmt::Formatter<'_>, parens: bool) -> fmt::Result {
        if parens {
            write!(f, "({self})")
        } else {
            write!(f, "{self}")
        }
    }

    fn write_binary(
        &self,
        f: &mut fmt::Formatter<'_>,
        lhs: &Expr,
        op: &str,
        rhs: &Expr,
    ) -> fmt::Result {
        let p = self.precedence();
        lhs.write_operand(f, lhs.precedence() < p)?;
        write!(f, " {op} ")?;
        rhs.write_operand(f, rhs.precedence() <= p)
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Literal(gens) => {
                f.write_str("ideal(")?;
                for (k, g) in gens.iter().enumerate() {
                    if k > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{g}")?;
                }
                f.write_str(")")
            }
            Expr::Ident(name) => f.write_str(name),
            Expr::Sum(a, b) => self.write_binary(f, a, "+", b),
            Expr::Product(a, b) => self.write_binary(f, a, "*", b),
            Expr::Power(base, k) => {
                base.write_operand(f, base.precedence() < 4)?;
                write!(f, "^{k}")
            }
            Expr::Intersect(a, b) => write!(f, "intersect({a}, {b})"),
            Expr::Colon(a, b) => write!(f, "colon({a}, {b})"),
            Expr::Sat(a, b) => write!(f, "sat({a}, {b})"),
            Expr::Trunc(a, e) => write!(f, "trunc({a}, {e})"),
        }
    }
}

/// Arguments of `randborel`; absent keys take defaults at run time.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RandArgs {
    pub q: usize,
    pub maxexp: Option<u32>,
    pub sizes: Option<Vec<usize>>,
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    IsBorel(Expr),
    Reg(Expr),
    RegCheck(Expr),
    Stable(Expr, u32),
    Decompose(Expr),
    Ass(Expr),
    Betti(Expr),
    Eq(Expr, Expr),
    RandBorel(RandArgs),
    Show(Expr),
}

impl Command {
    pub const NAMES: [&'static str; 10] = [
        "isborel",
        "reg",
        "regcheck",
        "stable",
        "decompose",
        "ass",
        "betti",
        "eq",
        "randborel",
        "show",
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Command::IsBorel(_) => "isborel",
            Command::Reg(_) => "reg",
            Command::RegCheck(_) => "regcheck",
            Command::Stable(..) => "stable",
            Command::Decompose(_) => "decompose",
            Command::Ass(_) => "ass",
            Command::Betti(_) => "betti",
            Command::Eq(..) => "eq",
            Command::RandBorel(_) => "randborel",
            Command::Show(_) => "show",
        }
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())?;
        match self {
            Command::IsBorel(e)
            | Command::Reg(e)
            | Command::RegCheck(e)
            | Command::Decompose(e)
            | Command::Ass(e)
            | Command::Betti(e)
            | Command::Show(e) => write!(f, " {e}"),
            Command::Stable(e, d) => write!(f, " {e} {d}"),
            Command::Eq(a, b) => write!(f, " {a} {b}"),
            Command::RandBorel(args) => {
                write!(f, " q={}", args.q)?;
                if let Some(m) = args.maxexp {
                    write!(f, " maxexp={m}")?;
                }
                if let Some(sizes) = &args.sizes {
                    let s: Vec<String> = sizes.iter().map(usize::to_string).collect();
                    write!(f, " sizes={}", s.join(","))?;
                }
                if let Some(seed) = args.seed {
                    write!(f, " seed={seed}")?;
                }
                Ok(())
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Stmt {
    Ring(usize),
    Let(String, Expr),
    Command(Command),
}

impl fmt::Display for Stmt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Stmt::Ring(n) => write!(f, "ring {n};"),
            Stmt::Let(name, e) => write!(f, "{name} = {e};"),
            Stmt::Command(c) => write!(f, "{c};"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Script {
    pub stmts: Vec<Stmt>,
}

impl Script {
    pub fn ring(&self) -> Option<usize> {
        self.stmts.iter().find_map(|s| match s {
            Stmt::Ring(n) => Some(*n),
            _ => None,
        })
    }

    pub fn bindings(&self) -> usize {
        self.stmts
            .iter()
            .filter(|s| matches!(s, Stmt::Let(..)))
            .count()
    }

    pub fn commands(&self) -> usize {
        self.stmts
            .iter()
            .filter(|s| matches!(s, Stmt::Command(_)))
            .count()
    }
}

impl fmt::Display for Script {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.stmts {
            writeln!(f, "{s}")?;
        }
        Ok(())
    }
}
