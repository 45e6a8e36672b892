//! Lexer and recursive-descent parser for borelkit scripts.
//!
//! ```text
//! script  := stmt*
//! stmt    := "ring" INT ";" | IDENT "=" expr ";" | COMMAND args ";"
//! expr    := term ("+" term)*
//! term    := factor ("*" factor)*
//! factor  := atom ("^" INT)?
//! atom    := "ideal" "(" [mono ("," mono)*] ")" | IDENT | "(" expr ")"
//!          | ("intersect" | "colon" | "sat") "(" expr "," expr ")"
//!          | "trunc" "(" expr "," INT ")"
//! mono    := "1" | var ("*" var)*
//! var     := "x" INT ("^" INT)?
//! ```
//!
//! `#` starts a comment running to the end of the line. Semantic checks
//! (ring declared once and first, identifiers bound before use, variable
//! indices within the ring) happen during parsing.

use std::collections::HashSet;
use std::fmt;

use crate::ast::{Command, Expr, MonoLit, RandArgs, Script, Stmt};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseErrorKind {
    Lex,
    Syntax,
    Unbound,
    RingNotDeclared,
    RingRedeclared,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(u64),
    Semi,
    Assign,
    Plus,
    Star,
    Caret,
    LParen,
    RParen,
    Comma,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Int(n) => write!(f, "`{n}`"),
            Tok::Semi => f.write_str("`;`"),
            Tok::Assign => f.write_str("`=`"),
            Tok::Plus => f.write_str("`+`"),
            Tok::Star => f.write_str("`*`"),
            Tok::Caret => f.write_str("`^`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::Comma => f.write_str("`,`"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(src: &str) -> Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    let mut chars = src.chars().peekable();
    let (mut line, mut column) = (1, 1);
    while let Some(&c) = chars.peek() {
        let (l, col) = (line, column);
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            let c = chars.next();
            if c == Some('\n') {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
            c
        };
        let tok = match c {
            c if c.is_whitespace() => {
                bump(&mut chars);
                continue;
            }
            '#' => {
                while chars.peek().is_some_and(|&c| c != '\n') {
                    bump(&mut chars);
                }
                continue;
            }
            ';' | '=' | '+' | '*' | '^' | '(' | ')' | ',' => {
                bump(&mut chars);
                match c {
                    ';' => Tok::Semi,
                    '=' => Tok::Assign,
                    '+' => Tok::Plus,
                    '*' => Tok::Star,
                    '^' => Tok::Caret,
                    '(' => Tok::LParen,
                    ')' => Tok::RParen,
                    _ => Tok::Comma,
                }
            }
            c if c.is_ascii_digit() => {
                let mut s = String::new();
                while chars.peek().is_some_and(char::is_ascii_digit) {
                    s.push(bump(&mut chars).unwrap());
                }
                Tok::Int(s.parse().map_err(|_| ParseError {
                    kind: ParseErrorKind::Lex,
                    line: l,
                    column: col,
                    message: format!("integer literal `{s}` is too large"),
                })?)
            }
            c if c.is_ascii_alphabetic() => {
                let mut s = String::new();
                while chars
                    .peek()
                    .is_some_and(|&c| c.is_ascii_alphanumeric() || c == '_')
                {
                    s.push(bump(&mut chars).unwrap());
                }
                Tok::Ident(s)
            }
            other => {
                return Err(ParseError {
                    kind: ParseErrorKind::Lex,
                    line: l,
                    column: col,
                    message: format!("unexpected character `{other}`"),
                })
            }
        };
        out.push(Spanned {
            tok,
            line: l,
            column: col,
        });
    }
    out.push(Spanned {
        tok: Tok::Eof,
        line,
        column,
    });
    Ok(out)
}

const FUNCTIONS: [&str; 5] = ["ideal", "intersect", "colon", "sat", "trunc"];

/// `Some(k)` for the reserved variable names `x<k>`.
fn variable_index(name: &str) -> Option<u64> {
    let digits = name.strip_prefix('x')?;
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    Some(digits.parse().unwrap_or(u64::MAX))
}

fn is_reserved(name: &str) -> bool {
    name == "ring"
        || FUNCTIONS.contains(&name)
        || Command::NAMES.contains(&name)
        || variable_index(name).is_some()
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    ring: Option<usize>,
    bound: HashSet<String>,
}

type PResult<T> = Result<T, ParseError>;

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn advance(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if t.tok != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn error_at(&self, at: &Spanned, kind: ParseErrorKind, message: String) -> ParseError {
        ParseError {
            kind,
            line: at.line,
            column: at.column,
            message,
        }
    }

    fn error_here(&self, kind: ParseErrorKind, message: String) -> ParseError {
        self.error_at(&self.toks[self.pos], kind, message)
    }

    fn expect(&mut self, want: Tok) -> PResult<Spanned> {
        if *self.peek() == want {
            Ok(self.advance())
        } else {
            Err(self.error_here(
                ParseErrorKind::Syntax,
                format!("expected {want}, found {}", self.peek()),
            ))
        }
    }

    fn int(&mut self, what: &str) -> PResult<(u64, Spanned)> {
        let t = self.advance();
        match t.tok {
            Tok::Int(n) => Ok((n, t)),
            ref other => Err(self.error_at(
                &t,
                ParseErrorKind::Syntax,
                format!("expected {what}, found {other}"),
            )),
        }
    }

    fn small_int<T: TryFrom<u64>>(&mut self, what: &str, min: u64) -> PResult<T> {
        let (n, at) = self.int(what)?;
        if n < min {
            return Err(self.error_at(
                &at,
                ParseErrorKind::Syntax,
                format!("{what} must be at least {min}, got {n}"),
            ));
        }
        T::try_from(n).map_err(|_| {
            self.error_at(
                &at,
                ParseErrorKind::Syntax,
                format!("{what} {n} is too large"),
            )
        })
    }

    fn require_ring(&self, at: &Spanned) -> PResult<usize> {
        self.ring.ok_or_else(|| {
            self.error_at(
                at,
                ParseErrorKind::RingNotDeclared,
                "ring not declared".into(),
            )
        })
    }

    fn script(&mut self) -> PResult<Script> {
        let mut stmts = Vec::new();
        while *self.peek() != Tok::Eof {
            stmts.push(self.stmt()?);
        }
        Ok(Script { stmts })
    }

    fn stmt(&mut self) -> PResult<Stmt> {
        let head = self.advance();
        let Tok::Ident(word) = &head.tok else {
            return Err(self.error_at(
                &head,
                ParseErrorKind::Syntax,
                format!("expected a statement, found {}", head.tok),
            ));
        };
        let stmt = if word == "ring" {
            if self.ring.is_some() {
                return Err(self.error_at(
                    &head,
                    ParseErrorKind::RingRedeclared,
                    "ring redeclaration".into(),
                ));
            }
            let n: usize = self.small_int("number of variables", 2)?;
            self.ring = Some(n);
            Stmt::Ring(n)
        } else if Command::NAMES.contains(&word.as_str()) {
            self.require_ring(&head)?;
            Stmt::Command(self.command(word)?)
        } else {
            self.require_ring(&head)?;
            if is_reserved(word) {
                return Err(self.error_at(
                    &head,
                    ParseErrorKind::Syntax,
                    format!("`{word}` is reserved and cannot be bound"),
                ));
            }
            let name = word.clone();
            self.expect(Tok::Assign)?;
            let e = self.expr()?;
            self.bound.insert(name.clone());
            Stmt::Let(name, e)
        };
        self.expect(Tok::Semi)?;
        Ok(stmt)
    }

    fn command(&mut self, name: &str) -> PResult<Command> {
        Ok(match name {
            "isborel" => Command::IsBorel(self.expr()?),
            "reg" => Command::Reg(self.expr()?),
            "regcheck" => Command::RegCheck(self.expr()?),
            "stable" => {
                let e = self.expr()?;
                Command::Stable(e, self.small_int("truncation degree", 0)?)
            }
            "decompose" => Command::Decompose(self.expr()?),
            "ass" => Command::Ass(self.expr()?),
            "betti" => Command::Betti(self.expr()?),
            "eq" => {
                let a = self.expr()?;
                Command::Eq(a, self.expr()?)
            }
            "show" => Command::Show(self.expr()?),
            "randborel" => Command::RandBorel(self.rand_args()?),
            _ => unreachable!("command names are checked by the caller"),
        })
    }

    fn rand_args(&mut self) -> PResult<RandArgs> {
        let mut q = None;
        let mut args = RandArgs::default();
        while let Tok::Ident(key) = self.peek().clone() {
            let at = self.advance();
            self.expect(Tok::Assign)?;
            let duplicate = match key.as_str() {
                "q" => q.replace(self.small_int("q", 1)?).is_some(),
                "maxexp" => args.maxexp.replace(self.small_int("maxexp", 1)?).is_some(),
                "seed" => args.seed.replace(self.int("seed")?.0).is_some(),
                "sizes" => {
                    let mut sizes = vec![self.small_int("stratum size", 0)?];
                    while *self.peek() == Tok::Comma {
                        self.advance();
                        sizes.push(self.small_int("stratum size", 0)?);
                    }
                    args.sizes.replace(sizes).is_some()
                }
                other => {
                    return Err(self.error_at(
                        &at,
                        ParseErrorKind::Syntax,
                        format!(
                            "unknown randborel key `{other}` (expected q, maxexp, sizes, seed)"
                        ),
                    ))
                }
            };
            if duplicate {
                return Err(self.error_at(
                    &at,
                    ParseErrorKind::Syntax,
                    format!("duplicate key `{key}`"),
                ));
            }
        }
        args.q = q.ok_or_else(|| {
            self.error_here(ParseErrorKind::Syntax, "randborel needs q=<int>".into())
        })?;
        Ok(args)
    }

    fn expr(&mut self) -> PResult<Expr> {
        let mut lhs = self.term()?;
        while *self.peek() == Tok::Plus {
            self.advance();
            lhs = Expr::Sum(Box::new(lhs), Box::new(self.term()?));
        }
        Ok(lhs)
    }

    fn term(&mut self) -> PResult<Expr> {
        let mut lhs = self.factor()?;
        while *self.peek() == Tok::Star {
            self.advance();
            lhs = Expr::Product(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> PResult<Expr> {
        let base = self.atom()?;
        if *self.peek() == Tok::Caret {
            self.advance();
            let k = self.small_int("power", 1)?;
            return Ok(Expr::Power(Box::new(base), k));
        }
        Ok(base)
    }

    fn pair(&mut self) -> PResult<(Box<Expr>, Box<Expr>)> {
        self.expect(Tok::LParen)?;
        let a = self.expr()?;
        self.expect(Tok::Comma)?;
        let b = self.expr()?;
        self.expect(Tok::RParen)?;
        Ok((Box::new(a), Box::new(b)))
    }

    fn atom(&mut self) -> PResult<Expr> {
        let t = self.advance();
        let name = match &t.tok {
            Tok::LParen => {
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                return Ok(e);
            }
            Tok::Ident(name) => name.clone(),
            other => {
                return Err(self.error_at(
                    &t,
                    ParseErrorKind::Syntax,
                    format!("expected an ideal expression, found {other}"),
                ))
            }
        };
        match name.as_str() {
            "ideal" => self.literal(),
            "intersect" => self.pair().map(|(a, b)| Expr::Intersect(a, b)),
            "colon" => self.pair().map(|(a, b)| Expr::Colon(a, b)),
            "sat" => self.pair().map(|(a, b)| Expr::Sat(a, b)),
            "trunc" => {
                self.expect(Tok::LParen)?;
                let a = self.expr()?;
                self.expect(Tok::Comma)?;
                let e = self.small_int("truncation degree", 0)?;
                self.expect(Tok::RParen)?;
                Ok(Expr::Trunc(Box::new(a), e))
            }
            _ if is_reserved(&name) => Err(self.error_at(
                &t,
                ParseErrorKind::Syntax,
                if variable_index(&name).is_some() {
                    format!("variable `{name}` outside ideal(...)")
                } else {
                    format!("`{name}` is not an ideal expression")
                },
            )),
            _ if !self.bound.contains(&name) => Err(self.error_at(
                &t,
                ParseErrorKind::Unbound,
                format!("unbound identifier `{name}`"),
            )),
            _ => Ok(Expr::Ident(name)),
        }
    }

    fn literal(&mut self) -> PResult<Expr> {
        self.expect(Tok::LParen)?;
        let mut gens = Vec::new();
        if *self.peek() != Tok::RParen {
            gens.push(self.monomial()?);
            while *self.peek() == Tok::Comma {
                self.advance();
                gens.push(self.monomial()?);
            }
        }
        self.expect(Tok::RParen)?;
        Ok(Expr::Literal(gens))
    }

    fn monomial(&mut self) -> PResult<MonoLit> {
        let n = self.ring.expect("ring checked before expressions");
        let mut exps = vec![0u32; n];
        if *self.peek() == Tok::Int(1) {
            self.advance();
            return Ok(MonoLit(exps));
        }
        loop {
            let t = self.advance();
            let index = match &t.tok {
                Tok::Ident(name) => variable_index(name),
                _ => None,
            };
            let Some(index) = index else {
                return Err(self.error_at(
                    &t,
                    ParseErrorKind::Syntax,
                    format!("expected a variable x1..x{n} or `1`, found {}", t.tok),
                ));
            };
            if index == 0 || index > n as u64 {
                return Err(self.error_at(
                    &t,
                    ParseErrorKind::Syntax,
                    format!("variable x{index} outside ring x1..x{n}"),
                ));
            }
            let mut e = 1u32;
            if *self.peek() == Tok::Caret {
                self.advance();
                e = self.small_int("exponent", 0)?;
            }
            let slot = &mut exps[index as usize - 1];
            *slot = slot.checked_add(e).ok_or_else(|| {
                self.error_at(&t, ParseErrorKind::Syntax, "exponent overflow".into())
            })?;
            if *self.peek() != Tok::Star {
                break;
            }
            self.advance();
        }
        Ok(MonoLit(exps))
    }
}

pub fn parse(src: &str) -> Result<Script, ParseError> {
    let mut p = Parser {
        toks: lex(src)?,
        pos: 0,
        ring: None,
        bound: HashSet::new(),
    };
    p.script()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kind(src: &str) -> ParseErrorKind {
        parse(src).unwrap_err().kind
    }

    #[test]
    fn basic_script() {
        let s = parse("ring 2; I = ideal(x1^2, x1*x2); reg I;").unwrap();
        assert_eq!(s.ring(), Some(2));
        assert_eq!((s.bindings(), s.commands()), (1, 1));
        assert_eq!(
            s.stmts[1],
            Stmt::Let(
                "I".into(),
                Expr::Literal(vec![MonoLit(vec![2, 0]), MonoLit(vec![1, 1])])
            )
        );
    }

    #[test]
    fn ring_must_come_first() {
        let err = parse("I = ideal(x1);").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::RingNotDeclared);
        assert_eq!(err.message, "ring not declared");
        assert_eq!((err.line, err.column), (1, 1));
        assert_eq!(
            kind("reg ideal(x1); ring 2;"),
            ParseErrorKind::RingNotDeclared
        );
        assert_eq!(kind("ring 2; ring 3;"), ParseErrorKind::RingRedeclared);
        assert_eq!(kind("ring 1;"), ParseErrorKind::Syntax);
    }

    #[test]
    fn sum_expression() {
        let s = parse("ring 2; I = ideal(x1); J = I + ideal(x2^3);").unwrap();
        let Stmt::Let(_, e) = &s.stmts[2] else {
            panic!()
        };
        assert!(matches!(e, Expr::Sum(a, _) if **a == Expr::Ident("I".into())));
    }

    #[test]
    fn precedence() {
        let s = parse("ring 2; I = ideal(x1); J = I + I * I ^ 2;").unwrap();
        let Stmt::Let(_, e) = &s.stmts[2] else {
            panic!()
        };
        let i = || Box::new(Expr::Ident("I".into()));
        assert_eq!(
            *e,
            Expr::Sum(
                i(),
                Box::new(Expr::Product(i(), Box::new(Expr::Power(i(), 2))))
            )
        );
    }

    #[test]
    fn unbound_and_reserved() {
        let err = parse("ring 2;\nreg J;").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::Unbound);
        assert_eq!((err.line, err.column), (2, 5));
        assert_eq!(kind("ring 2; I = I + ideal(x1);"), ParseErrorKind::Unbound);
        assert_eq!(kind("ring 2; x1 = ideal(x1);"), ParseErrorKind::Syntax);
        assert_eq!(kind("ring 2; reg = ideal(x1);"), ParseErrorKind::Syntax);
        assert_eq!(kind("ring 2; reg x1;"), ParseErrorKind::Syntax);
    }

    #[test]
    fn variable_range() {
        assert_eq!(kind("ring 2; I = ideal(x3);"), ParseErrorKind::Syntax);
        assert_eq!(kind("ring 2; I = ideal(x0);"), ParseErrorKind::Syntax);
        assert!(parse("ring 3; I = ideal(x3, 1, x1*x1);").is_ok());
    }

    #[test]
    fn lex_errors() {
        let err = parse("ring 2; I = ideal(x1) $").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::Lex);
        assert_eq!(err.column, 23);
        assert_eq!(kind("ring 99999999999999999999999;"), ParseErrorKind::Lex);
    }

    #[test]
    fn function_forms_and_commands() {
        let src = "ring 3;\n# comment\nI = ideal(x1^2, x1*x2);\nJ = sat(colon(I, ideal(x1)), ideal(x1, x2)) + intersect(I, trunc(I, 3));\nstable I 3;\neq I J;\nrandborel q=1 maxexp=2 sizes=0,1,1 seed=9;\nisborel I^2;\n";
        let s = parse(src).unwrap();
        assert_eq!(s.commands(), 4);
        assert_eq!(
            s.stmts[5],
            Stmt::Command(Command::RandBorel(RandArgs {
                q: 1,
                maxexp: Some(2),
                sizes: Some(vec![0, 1, 1]),
                seed: Some(9)
            }))
        );
    }

    #[test]
    fn bad_arguments() {
        assert_eq!(kind("ring 2; I = ideal(x1)^0;"), ParseErrorKind::Syntax);
        assert_eq!(kind("ring 2; randborel maxexp=2;"), ParseErrorKind::Syntax);
        assert_eq!(kind("ring 2; randborel q=1 q=1;"), ParseErrorKind::Syntax);
        assert_eq!(kind("ring 2; randborel q=1 foo=1;"), ParseErrorKind::Syntax);
        assert_eq!(kind("ring 2; reg ideal(x1)"), ParseErrorKind::Syntax);
        assert_eq!(kind("ring 2; stable ideal(x1);"), ParseErrorKind::Syntax);
    }

    #[test]
    fn printer_round_trip() {
        let src = "ring 3; I = ideal(x1*x1, x2, 1); J = (I + I) * (I ^ 2) ^ 3 + I * (I + I); K = I + (J + I); L = I * (J * I); show trunc(L, 4); randborel q=2 seed=4;";
        let s = parse(src).unwrap();
        let printed = s.to_string();
        assert_eq!(parse(&printed).unwrap(), s, "{printed}");
        assert!(printed.contains("ideal(x1^2, x2, 1)"));
        assert!(printed.contains("K = I + (J + I);"));
        assert!(printed.contains("(I^2)^3"));
    }
}
