use std::collections::BTreeSet;
use std::fmt;

use crate::cardinal::Cardinal;
use crate::hypotheses::{Assumption, SchAssumption, SchScope};
use crate::ordinal::CnfOrdinal;

use super::Ast;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub expected: Vec<String>,
    pub found: String,
    /// Set when the text is well-formed but denotes nothing representable.
    pub message: Option<String>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.message {
            Some(m) => write!(f, "line {}, column {}: {m}", self.line, self.column),
            None => write!(
                f,
                "syntax error at line {}, column {}: expected {}, found {}",
                self.line,
                self.column,
                self.expected.join(" or "),
                self.found
            ),
        }
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Nat(u64),
    LParen,
    RParen,
    LBrace,
    RBrace,
    Comma,
    Plus,
    Star,
    Caret,
    Eq,
    Minus,
    Ge,
    Lt,
    Sep,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Nat(n) => format!("`{n}`"),
            Tok::Sep => "end of statement".into(),
            Tok::Eof => "end of input".into(),
            other => format!("`{}`", other.symbol()),
        }
    }

    fn symbol(&self) -> &'static str {
        match self {
            Tok::LParen => "(",
            Tok::RParen => ")",
            Tok::LBrace => "{",
            Tok::RBrace => "}",
            Tok::Comma => ",",
            Tok::Plus => "+",
            Tok::Star => "*",
            Tok::Caret => "^",
            Tok::Eq => "=",
            Tok::Minus => "-",
            Tok::Ge => ">=",
            Tok::Lt => "<",
            Tok::Sep => ";",
            _ => "",
        }
    }
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(text: &str) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut line, mut col) = (1, 1);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = (line, col);
        let push = |out: &mut Vec<Token>, tok| {
            out.push(Token {
                tok,
                line: start.0,
                col: start.1,
            })
        };
        if c == '\n' {
            push(&mut out, Tok::Sep);
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        if c == '#' {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
                col += 1;
            }
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                s.push(chars[i]);
                i += 1;
                col += 1;
            }
            push(&mut out, Tok::Ident(s));
            continue;
        }
        if c.is_ascii_digit() {
            let mut s = String::new();
            while i < chars.len() && chars[i].is_ascii_digit() {
                s.push(chars[i]);
                i += 1;
                col += 1;
            }
            let n = s.parse::<u64>().map_err(|_| ParseError {
                line: start.0,
                column: start.1,
                expected: vec![],
                found: s.clone(),
                message: Some(format!("number `{s}` is too large")),
            })?;
            push(&mut out, Tok::Nat(n));
            continue;
        }
        let (tok, width) = match c {
            '(' => (Tok::LParen, 1),
            ')' => (Tok::RParen, 1),
            '{' => (Tok::LBrace, 1),
            '}' => (Tok::RBrace, 1),
            ',' => (Tok::Comma, 1),
            '+' => (Tok::Plus, 1),
            '*' => (Tok::Star, 1),
            '^' => (Tok::Caret, 1),
            '=' => (Tok::Eq, 1),
            '-' => (Tok::Minus, 1),
            ';' => (Tok::Sep, 1),
            '<' => (Tok::Lt, 1),
            '>' if chars.get(i + 1) == Some(&'=') => (Tok::Ge, 2),
            _ => {
                return Err(ParseError {
                    line,
                    column: col,
                    expected: vec!["a token".into()],
                    found: format!("`{c}`"),
                    message: None,
                })
            }
        };
        push(&mut out, tok);
        i += width;
        col += width;
    }
    out.push(Token {
        tok: Tok::Eof,
        line,
        col,
    });
    Ok(out)
}

/// An index `base + tail`, the base read as its initial ordinal.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Index {
    base: Option<Cardinal>,
    tail: CnfOrdinal,
}

impl Index {
    fn ord(tail: CnfOrdinal) -> Self {
        Index { base: None, tail }
    }

    fn add(&mut self, rhs: Index) -> Result<(), String> {
        if let Some(b) = rhs.base {
            if b.is_aleph_zero() {
                self.tail = self.tail.add(&CnfOrdinal::omega());
            } else {
                // ω_b is additively indecomposable: it absorbs anything smaller.
                match &self.base {
                    Some(cur) if cur >= &b => {
                        return Err(format!("{b} cannot follow {cur} in an index"))
                    }
                    _ => {}
                }
                self.base = Some(b);
                self.tail = CnfOrdinal::zero();
            }
        }
        self.tail = self.tail.add(&rhs.tail);
        Ok(())
    }

    fn mul(self, n: u64) -> Result<Index, String> {
        if n == 1 {
            return Ok(self);
        }
        if self.base.is_some() {
            return Err("an uncountable index cannot be multiplied".into());
        }
        if n == 0 || self.tail.is_zero() {
            return Ok(Index::ord(CnfOrdinal::zero()));
        }
        let mut pairs: Vec<(CnfOrdinal, u64)> = self
            .tail
            .terms()
            .iter()
            .map(|t| (t.exponent().clone(), t.coefficient()))
            .collect();
        pairs[0].1 = pairs[0]
            .1
            .checked_mul(n)
            .ok_or_else(|| "coefficient overflow".to_string())?;
        let tail = CnfOrdinal::from_terms(pairs).map_err(|e| format!("{e:?}"))?;
        Ok(Index::ord(tail))
    }
}

const EXPR_START: &[&str] = &["cardinal", "`ord(...)`", "query", "flag"];
const STATEMENT_START: &[&str] = &["`assume`", "cardinal", "query"];
const INDEX_START: &[&str] = &["`w`", "natural number", "`aleph`", "`(`"];

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn peek2(&self) -> &Tok {
        &self.toks[(self.pos + 1).min(self.toks.len() - 1)].tok
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn fail<T>(&self, expected: &[&str]) -> Result<T, ParseError> {
        let t = &self.toks[self.pos];
        Err(ParseError {
            line: t.line,
            column: t.col,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: t.tok.describe(),
            message: None,
        })
    }

    fn semantic<T>(&self, at: usize, message: String) -> Result<T, ParseError> {
        let t = &self.toks[at];
        Err(ParseError {
            line: t.line,
            column: t.col,
            expected: vec![],
            found: t.tok.describe(),
            message: Some(message),
        })
    }

    fn expect(&mut self, tok: Tok) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            let want = format!("`{}`", tok.symbol());
            self.fail(&[want.as_str()])
        }
    }

    fn ident(&mut self, what: &str) -> Result<String, ParseError> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                self.bump();
                Ok(s)
            }
            _ => self.fail(&[what]),
        }
    }

    fn session(&mut self) -> Result<Ast, ParseError> {
        let mut items = Vec::new();
        loop {
            while *self.peek() == Tok::Sep {
                self.bump();
            }
            if *self.peek() == Tok::Eof {
                break;
            }
            items.push(self.statement()?);
            match self.peek() {
                Tok::Sep | Tok::Eof => {}
                _ => return self.fail(&["`;`", "end of input"]),
            }
        }
        Ok(if items.len() == 1 {
            items.pop().expect("one item")
        } else {
            Ast::Session(items)
        })
    }

    fn statement(&mut self) -> Result<Ast, ParseError> {
        if *self.peek() == Tok::Ident("assume".into()) {
            self.bump();
            return Ok(Ast::Assume(self.assumption()?));
        }
        if !matches!(self.peek(), Tok::Ident(_)) {
            return self.fail(STATEMENT_START);
        }
        self.expr()
    }

    fn assumption(&mut self) -> Result<Assumption, ParseError> {
        const WANT: &[&str] = &["`GCH`", "`V=L`", "`sharp`", "`no-sharp`", "`SCH(...)`"];
        let name = match self.peek().clone() {
            Tok::Ident(s) => s,
            _ => return self.fail(WANT),
        };
        match name.to_ascii_lowercase().as_str() {
            "gch" => {
                self.bump();
                Ok(Assumption::Gch)
            }
            "v" => {
                self.bump();
                self.expect(Tok::Eq)?;
                match self.peek() {
                    Tok::Ident(l) if l.eq_ignore_ascii_case("l") => {
                        self.bump();
                        Ok(Assumption::VEqualsL)
                    }
                    _ => self.fail(&["`L`"]),
                }
            }
            "sharp" => {
                self.bump();
                Ok(Assumption::Sharp)
            }
            "no" => {
                self.bump();
                self.expect(Tok::Minus)?;
                match self.peek() {
                    Tok::Ident(s) if s == "sharp" => {
                        self.bump();
                        Ok(Assumption::NoSharp)
                    }
                    _ => self.fail(&["`sharp`"]),
                }
            }
            "sch" => {
                self.bump();
                self.expect(Tok::LParen)?;
                let mu = self.cardinal()?;
                self.expect(Tok::Comma)?;
                let scope = match self.peek() {
                    Tok::Ge => {
                        self.bump();
                        SchScope::AtLeast(self.cardinal()?)
                    }
                    Tok::Lt => {
                        self.bump();
                        SchScope::UnboundedBelow(self.cardinal()?)
                    }
                    Tok::LBrace => {
                        self.bump();
                        let mut set = BTreeSet::new();
                        set.insert(self.cardinal()?);
                        while *self.peek() == Tok::Comma {
                            self.bump();
                            set.insert(self.cardinal()?);
                        }
                        self.expect(Tok::RBrace)?;
                        SchScope::ExplicitSet(set)
                    }
                    _ => return self.fail(&["`>=`", "`<`", "`{`"]),
                };
                self.expect(Tok::RParen)?;
                Ok(Assumption::Sch(SchAssumption::new(mu, scope)))
            }
            _ => self.fail(WANT),
        }
    }

    fn expr(&mut self) -> Result<Ast, ParseError> {
        let name = match self.peek().clone() {
            Tok::Ident(s) => s,
            _ => return self.fail(EXPR_START),
        };
        if let Some(c) = self.try_cardinal()? {
            return Ok(Ast::Cardinal(c));
        }
        if name == "ord" {
            self.bump();
            self.expect(Tok::LParen)?;
            let idx = self.index()?;
            self.expect(Tok::RParen)?;
            return Ok(Ast::Ordinal {
                base: idx.base,
                tail: idx.tail,
            });
        }
        self.bump();
        if *self.peek() != Tok::LParen {
            return Ok(Ast::Flag(name));
        }
        self.bump();
        let mut args = Vec::new();
        if *self.peek() != Tok::RParen {
            args.push(self.expr()?);
            while *self.peek() == Tok::Comma {
                self.bump();
                args.push(self.expr()?);
            }
        }
        match self.peek() {
            Tok::RParen => {
                self.bump();
                Ok(Ast::Query { name, args })
            }
            _ => self.fail(&["`,`", "`)`"]),
        }
    }

    fn cardinal(&mut self) -> Result<Cardinal, ParseError> {
        match self.try_cardinal()? {
            Some(c) => Ok(c),
            None => self.fail(&["cardinal"]),
        }
    }

    /// Cardinal literal if one starts here: `aleph(...)`, `aleph_N`,
    /// `aleph_w`, `inacc(...)`, `atom(...)`.
    fn try_cardinal(&mut self) -> Result<Option<Cardinal>, ParseError> {
        let name = match self.peek() {
            Tok::Ident(s) => s.clone(),
            _ => return Ok(None),
        };
        if let Some(c) = sugar(&name) {
            self.bump();
            return Ok(Some(c));
        }
        match name.as_str() {
            "aleph" if *self.peek2() == Tok::LParen => {
                let at = self.pos;
                self.bump();
                self.bump();
                let idx = self.index()?;
                self.expect(Tok::RParen)?;
                let c = match idx.base {
                    None => Cardinal::aleph_at(idx.tail),
                    Some(b) => match Cardinal::aleph_over(&b, idx.tail) {
                        Ok(c) => c,
                        Err(e) => return self.semantic(at, e.to_string()),
                    },
                };
                Ok(Some(c))
            }
            "inacc" | "atom" if *self.peek2() == Tok::LParen => {
                self.bump();
                self.bump();
                let label = self.ident("atom name")?;
                let mut rank = 0u32;
                if *self.peek() == Tok::Comma {
                    self.bump();
                    rank = match self.peek().clone() {
                        Tok::Nat(n) if n <= u32::MAX as u64 => {
                            self.bump();
                            n as u32
                        }
                        _ => return self.fail(&["rank"]),
                    };
                }
                self.expect(Tok::RParen)?;
                Ok(Some(if name == "inacc" {
                    Cardinal::inaccessible(label, rank)
                } else {
                    Cardinal::opaque(label, rank)
                }))
            }
            _ => Ok(None),
        }
    }

    fn index(&mut self) -> Result<Index, ParseError> {
        let mut acc = self.index_term()?;
        while *self.peek() == Tok::Plus {
            let at = self.pos;
            self.bump();
            let rhs = self.index_term()?;
            if let Err(m) = acc.add(rhs) {
                return self.semantic(at, format!("index not representable: {m}"));
            }
        }
        Ok(acc)
    }

    fn index_term(&mut self) -> Result<Index, ParseError> {
        let at = self.pos;
        let mut v = self.index_factor()?;
        while *self.peek() == Tok::Star {
            self.bump();
            let n = match self.peek().clone() {
                Tok::Nat(n) => {
                    self.bump();
                    n
                }
                _ => return self.fail(&["natural number"]),
            };
            v = match v.mul(n) {
                Ok(v) => v,
                Err(m) => return self.semantic(at, format!("index not representable: {m}")),
            };
        }
        Ok(v)
    }

    fn index_factor(&mut self) -> Result<Index, ParseError> {
        match self.peek().clone() {
            Tok::Nat(n) => {
                self.bump();
                Ok(Index::ord(CnfOrdinal::from_nat(n)))
            }
            Tok::Ident(w) if w == "w" => {
                self.bump();
                Ok(Index::ord(self.omega_power()?))
            }
            Tok::LParen => {
                self.bump();
                let idx = self.index()?;
                self.expect(Tok::RParen)?;
                Ok(idx)
            }
            Tok::Ident(_) => match self.try_cardinal()? {
                Some(c) => Ok(Index {
                    base: Some(c),
                    tail: CnfOrdinal::zero(),
                }),
                None => self.fail(INDEX_START),
            },
            _ => self.fail(INDEX_START),
        }
    }

    /// After a `w`: the optional `^ exponent`.
    fn omega_power(&mut self) -> Result<CnfOrdinal, ParseError> {
        if *self.peek() != Tok::Caret {
            return Ok(CnfOrdinal::omega());
        }
        self.bump();
        Ok(CnfOrdinal::omega_pow(self.exponent()?))
    }

    fn exponent(&mut self) -> Result<CnfOrdinal, ParseError> {
        match self.peek().clone() {
            Tok::Nat(n) => {
                self.bump();
                Ok(CnfOrdinal::from_nat(n))
            }
            Tok::Ident(w) if w == "w" => {
                self.bump();
                self.omega_power()
            }
            Tok::LParen => {
                let at = self.pos;
                self.bump();
                let idx = self.index()?;
                self.expect(Tok::RParen)?;
                if idx.base.is_some() {
                    return self.semantic(at, "exponents must be countable ordinals".into());
                }
                Ok(idx.tail)
            }
            _ => self.fail(&["`w`", "natural number", "`(`"]),
        }
    }
}

fn sugar(name: &str) -> Option<Cardinal> {
    let rest = name.strip_prefix("aleph_")?;
    if rest == "w" {
        return Some(Cardinal::aleph_at(CnfOrdinal::omega()));
    }
    if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    if rest.len() > 1 && rest.starts_with('0') {
        return None;
    }
    rest.parse::<u64>().ok().map(Cardinal::aleph)
}

/// Parse a statement or a `;`/newline separated session. A single statement
/// comes back bare; anything else is wrapped in [`Ast::Session`].
pub fn parse(text: &str) -> Result<Ast, ParseError> {
    let toks = lex(text)?;
    Parser { toks, pos: 0 }.session()
}

/// Parse one cardinal literal, e.g. for command-line arguments.
pub fn parse_cardinal(text: &str) -> Result<Cardinal, ParseError> {
    match parse(text)? {
        Ast::Cardinal(c) => Ok(c),
        other => Err(ParseError {
            line: 1,
            column: 1,
            expected: vec!["cardinal".into()],
            found: format!("`{}`", super::format(&other)),
            message: None,
        }),
    }
}

/// Parse one assumption in `assume` syntax (without the keyword).
pub fn parse_assumption(text: &str) -> Result<Assumption, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0 };
    let a = p.assumption()?;
    match p.peek() {
        Tok::Eof => Ok(a),
        _ => p.fail(&["end of input"]),
    }
}
