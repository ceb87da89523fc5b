//! Ring-name grammar and element expressions.
//!
//! ```text
//! ring  := "Z" | "Q" | "Z/" uint | "GF(" prime ")" | field "[" vars "]" [ "/(" exprs ")" ]
//! expr  := term (("+" | "-") term)*
//! term  := unary (("*" | "/") unary)*
//! unary := ("-" | "+") unary | power
//! power := atom ["^" uint]
//! atom  := uint | ident | "(" expr ")"
//! ```

use num_bigint::BigInt;

use super::poly::{BaseField, Poly};
use super::{Elem, Ring, RingKind};
use crate::error::{Error, Result};

fn syntax(msg: impl Into<String>) -> Error {
    Error::SpecSyntax(msg.into())
}

/// Parse a ring name such as `Z/6` or `Q[x,y,z]/(x^2+y^2+z^2-1)`.
pub fn parse_ring_spec(text: &str) -> Result<Ring> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err(syntax("empty ring name"));
    }
    let (base, rest) = split_base(&t)?;
    if rest.is_empty() {
        return match base {
            Base::Z => Ok(Ring::integers()),
            Base::Q => Ok(Ring::rationals()),
            Base::Mod(n) => Ring::modular(n),
            Base::Gf(p) => Ring::galois(p),
        };
    }
    let Some(after) = rest.strip_prefix('[') else {
        return Err(syntax(format!("unexpected text after base ring: {rest:?}")));
    };
    let close = after
        .find(']')
        .ok_or_else(|| syntax("missing ']' in variable list"))?;
    let vars: Vec<String> = after[..close].split(',').map(str::to_string).collect();
    for v in &vars {
        let ok = v.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
            && v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !ok {
            return Err(syntax(format!("bad variable name {v:?}")));
        }
    }
    for (i, v) in vars.iter().enumerate() {
        if vars[..i].contains(v) {
            return Err(syntax(format!("duplicate variable {v}")));
        }
    }
    let field = match base {
        Base::Q => BaseField::Rationals,
        Base::Gf(p) => BaseField::Prime(p),
        Base::Z => {
            return Err(Error::UnsupportedRing(
                "polynomial rings over Z are not supported".into(),
            ))
        }
        Base::Mod(n) => {
            return Err(Error::UnsupportedRing(format!(
                "polynomial rings over Z/{n} are not supported; use GF(p)"
            )))
        }
    };
    let tail = &after[close + 1..];
    let poly_ring = Ring::polynomial(field.clone(), vars.clone(), Vec::new())?;
    if tail.is_empty() {
        return Ok(poly_ring);
    }
    let inner = tail
        .strip_prefix("/(")
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| syntax(format!("expected '/(generators)' but found {tail:?}")))?;
    let mut gens = Vec::new();
    for g in split_top_level(inner)? {
        match parse_element(&poly_ring, g)? {
            Elem::Poly(p) => gens.push(p),
            _ => unreachable!(),
        }
    }
    let gens: Vec<Poly> = gens.into_iter().filter(|g| !g.is_zero()).collect();
    if gens.is_empty() {
        return Ok(poly_ring);
    }
    Ring::polynomial(field, vars, gens)
}

enum Base {
    Z,
    Q,
    Mod(u64),
    Gf(u64),
}

fn split_base(t: &str) -> Result<(Base, &str)> {
    if let Some(rest) = t.strip_prefix("GF(") {
        let close = rest.find(')').ok_or_else(|| syntax("missing ')' in GF(p)"))?;
        let p = parse_uint(&rest[..close])?;
        return Ok((Base::Gf(p), &rest[close + 1..]));
    }
    if let Some(rest) = t.strip_prefix("Z/") {
        let end = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
        let n = parse_uint(&rest[..end])?;
        return Ok((Base::Mod(n), &rest[end..]));
    }
    if let Some(rest) = t.strip_prefix('Z') {
        return Ok((Base::Z, rest));
    }
    if let Some(rest) = t.strip_prefix('Q') {
        return Ok((Base::Q, rest));
    }
    Err(syntax(format!("unknown base ring in {t:?}")))
}

fn parse_uint(s: &str) -> Result<u64> {
    if s.is_empty() || !s.chars().all(|c| c.is_ascii_digit()) {
        return Err(syntax(format!("expected a positive integer, found {s:?}")));
    }
    s.parse::<u64>()
        .map_err(|_| syntax(format!("integer {s:?} out of range")))
}

fn split_top_level(s: &str) -> Result<Vec<&str>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
        if depth < 0 {
            return Err(syntax("unbalanced parentheses"));
        }
    }
    out.push(&s[start..]);
    Ok(out)
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push(Token::Num(digits.parse().unwrap()));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Token::Op(c));
            i += 1;
        } else {
            return Err(syntax(format!("unexpected character {c:?}")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    ring: &'a Ring,
    toks: Vec<Token>,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Token::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Elem> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                let t = self.term()?;
                acc = self.ring.add(&acc, &t);
            } else if self.eat('-') {
                let t = self.term()?;
                acc = self.ring.sub(&acc, &t);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Elem> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                let t = self.unary()?;
                acc = self.ring.mul(&acc, &t);
            } else if self.eat('/') {
                let t = self.unary()?;
                let inv = self.ring.inverse(&t).ok_or_else(|| {
                    syntax(format!("division by non-unit {}", self.ring.format(&t)))
                })?;
                acc = self.ring.mul(&acc, &inv);
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Elem> {
        if self.eat('-') {
            let v = self.unary()?;
            return Ok(self.ring.neg(&v));
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Elem> {
        let base = self.atom()?;
        if self.eat('^') {
            match self.peek().cloned() {
                Some(Token::Num(n)) => {
                    self.pos += 1;
                    let e: u32 = n
                        .try_into()
                        .map_err(|_| syntax("exponent out of range"))?;
                    Ok(self.ring.pow(&base, e))
                }
                _ => Err(syntax("expected a non-negative integer exponent")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Elem> {
        match self.peek().cloned() {
            Some(Token::Num(n)) => {
                self.pos += 1;
                Ok(self.ring.from_bigint(&n))
            }
            Some(Token::Ident(name)) => {
                self.pos += 1;
                let idx = self
                    .ring
                    .poly_data()
                    .and_then(|d| d.vars.iter().position(|v| *v == name))
                    .ok_or_else(|| syntax(format!("unknown variable {name:?} in ring {}", self.ring)))?;
                Ok(self.ring.var(idx).unwrap())
            }
            Some(Token::Op('(')) => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(')') {
                    return Err(syntax("missing ')'"));
                }
                Ok(v)
            }
            other => Err(syntax(format!("unexpected token {other:?}"))),
        }
    }
}

/// Parse an element expression in `ring`, reducing to canonical form.
pub fn parse_element(ring: &Ring, text: &str) -> Result<Elem> {
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err(syntax("empty element"));
    }
    let mut p = Parser { ring, toks, pos: 0 };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(syntax(format!("trailing input in {text:?}")));
    }
    if matches!(ring.kind(), RingKind::Integers) {
        debug_assert!(matches!(v, Elem::Int(_)));
    }
    Ok(v)
}
