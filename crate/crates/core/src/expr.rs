//! Element syntax for the command line.
//!
//! ```text
//! sum     := term (('+' | '-') term)*
//! term    := product (('♯' | '#') product)?
//! product := unary ('*' unary)*
//! unary   := '-' unary | power
//! power   := atom ('^' INT)?
//! atom    := NUM ['/' NUM] | X<k> | Y<k> | U[i,j] | Ubar[i,j] | '(' sum ')'
//!          | NAME '(' sum (',' sum)* ')' | '⟨' sum ',' sum '⟩'
//! ```
//!
//! Functions: `lambda`, `tau`, `tau_inv`, `S`, `phi`, `phi_inv`, `eps`, `eps_L`, `eps_R`,
//! `alpha_L`, `beta_L`, `alpha_R`, `beta_R`, `Delta`, `Delta_L`, `Delta_R`, `act`, `ract`,
//! `pair`. Indices are 1-based. Printing any value and parsing it back gives the same value.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::algebroid::BalancedTensor;
use crate::context::Context;
use crate::dual::{DualElement, TensorDual};
use crate::scalar::Scalar;
use crate::smash::SmashElement;
use crate::uea::{Side, TensorUea, UeaElement, UeaError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("column {}: {msg}", .pos + 1)]
pub struct ExprError {
    /// Character offset into the input.
    pub pos: usize,
    pub msg: String,
}

fn err<T>(pos: usize, msg: impl Into<String>) -> Result<T, ExprError> {
    Err(ExprError { pos, msg: msg.into() })
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Sym(char),
    End,
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, ExprError> {
    let chars: Vec<char> = src.chars().collect();
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
            let s: String = chars[start..i].iter().collect();
            out.push((start, Tok::Num(s.parse().expect("digits"))));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len()
                && (chars[i].is_alphanumeric() || chars[i] == '_')
                && !(i > start && chars[i].is_ascii_digit() && is_generator_head(&chars[start..i]))
            {
                i += 1;
            }
            let name: String = chars[start..i].iter().collect();
            let name = match name.as_str() {
                "λ" => "lambda".to_string(),
                "τ" => "tau".to_string(),
                _ => name,
            };
            out.push((start, Tok::Ident(name)));
        } else {
            let sym = match c {
                '−' => '-',
                '#' => '♯',
                '+' | '-' | '*' | '/' | '^' | '(' | ')' | '[' | ']' | ',' | '♯' | '⟨' | '⟩' => c,
                _ => return err(i, format!("unexpected character '{c}'")),
            };
            out.push((i, Tok::Sym(sym)));
            i += 1;
        }
    }
    out.push((chars.len(), Tok::End));
    Ok(out)
}

// `X12` lexes as `X` then `12`.
fn is_generator_head(s: &[char]) -> bool {
    matches!(s, ['X'] | ['Y'])
}

#[derive(Clone, Debug)]
enum Node {
    Num(Scalar),
    Gen(Side, usize),
    Sym(bool, usize, usize),
    Neg(Box<Ast>),
    Add(Box<Ast>, Box<Ast>),
    Sub(Box<Ast>, Box<Ast>),
    Mul(Box<Ast>, Box<Ast>),
    Smash(Box<Ast>, Box<Ast>),
    Pow(Box<Ast>, u32),
    Call(String, Vec<Ast>),
}

#[derive(Clone, Debug)]
struct Ast {
    pos: usize,
    node: Node,
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> (usize, Tok) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ExprError> {
        if self.eat(c) {
            Ok(())
        } else {
            err(self.pos(), format!("expected '{c}'"))
        }
    }

    fn number(&mut self) -> Result<BigInt, ExprError> {
        match self.bump() {
            (_, Tok::Num(v)) => Ok(v),
            (p, _) => err(p, "expected a number"),
        }
    }

    fn sum(&mut self) -> Result<Ast, ExprError> {
        let mut lhs = self.term()?;
        loop {
            let pos = self.pos();
            if self.eat('+') {
                let rhs = self.term()?;
                lhs = Ast { pos, node: Node::Add(Box::new(lhs), Box::new(rhs)) };
            } else if self.eat('-') {
                let rhs = self.term()?;
                lhs = Ast { pos, node: Node::Sub(Box::new(lhs), Box::new(rhs)) };
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Ast, ExprError> {
        let lhs = self.product()?;
        let pos = self.pos();
        if self.eat('♯') {
            let rhs = self.product()?;
            return Ok(Ast { pos, node: Node::Smash(Box::new(lhs), Box::new(rhs)) });
        }
        Ok(lhs)
    }

    fn product(&mut self) -> Result<Ast, ExprError> {
        let mut lhs = self.unary()?;
        loop {
            let pos = self.pos();
            if !self.eat('*') {
                return Ok(lhs);
            }
            let rhs = self.unary()?;
            lhs = Ast { pos, node: Node::Mul(Box::new(lhs), Box::new(rhs)) };
        }
    }

    fn unary(&mut self) -> Result<Ast, ExprError> {
        let pos = self.pos();
        if self.eat('-') {
            let inner = self.unary()?;
            return Ok(Ast { pos, node: Node::Neg(Box::new(inner)) });
        }
        self.power()
    }

    fn power(&mut self) -> Result<Ast, ExprError> {
        let base = self.atom()?;
        let pos = self.pos();
        if self.eat('^') {
            let p = self.pos();
            let e = self.number()?;
            let e: u32 = e.try_into().map_err(|_| ExprError { pos: p, msg: "exponent too large".into() })?;
            return Ok(Ast { pos, node: Node::Pow(Box::new(base), e) });
        }
        Ok(base)
    }

    fn index(&mut self) -> Result<usize, ExprError> {
        let p = self.pos();
        let v = self.number()?;
        match usize::try_from(v) {
            Ok(k) if k >= 1 => Ok(k - 1),
            _ => err(p, "indices start at 1"),
        }
    }

    fn atom(&mut self) -> Result<Ast, ExprError> {
        let (pos, tok) = self.bump();
        let node = match tok {
            Tok::Num(a) => {
                if self.eat('/') {
                    let p = self.pos();
                    let b = self.number()?;
                    if b == BigInt::from(0) {
                        return err(p, "zero denominator");
                    }
                    Node::Num(Scalar::new(a, b))
                } else {
                    Node::Num(Scalar::from_integer(a))
                }
            }
            Tok::Sym('(') => {
                let inner = self.sum()?;
                self.expect(')')?;
                return Ok(inner);
            }
            Tok::Sym('⟨') => {
                let a = self.sum()?;
                self.expect(',')?;
                let b = self.sum()?;
                self.expect('⟩')?;
                Node::Call("pair".into(), vec![a, b])
            }
            Tok::Ident(name) if name == "X" || name == "Y" => {
                let side = if name == "X" { Side::L } else { Side::R };
                Node::Gen(side, self.index()?)
            }
            Tok::Ident(name) if name == "U" || name == "Ubar" => {
                self.expect('[')?;
                let i = self.index()?;
                self.expect(',')?;
                let j = self.index()?;
                self.expect(']')?;
                Node::Sym(name == "Ubar", i, j)
            }
            Tok::Ident(name) => {
                if !FUNCTIONS.iter().any(|(f, _)| *f == name) {
                    return err(pos, format!("unknown name '{name}'"));
                }
                self.expect('(')?;
                let mut args = vec![self.sum()?];
                while self.eat(',') {
                    args.push(self.sum()?);
                }
                self.expect(')')?;
                Node::Call(name, args)
            }
            Tok::End => return err(pos, "unexpected end of input"),
            Tok::Sym(c) => return err(pos, format!("unexpected '{c}'")),
        };
        Ok(Ast { pos, node })
    }
}

const FUNCTIONS: &[(&str, usize)] = &[
    ("lambda", 1),
    ("tau", 1),
    ("tau_inv", 1),
    ("S", 1),
    ("phi", 1),
    ("phi_inv", 1),
    ("eps", 1),
    ("eps_L", 1),
    ("eps_R", 1),
    ("alpha_L", 1),
    ("beta_L", 1),
    ("alpha_R", 1),
    ("beta_R", 1),
    ("Delta", 1),
    ("Delta_L", 1),
    ("Delta_R", 1),
    ("act", 2),
    ("ract", 2),
    ("pair", 2),
];

/// Result of evaluating an expression.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Scalar(Scalar),
    Uea(UeaElement),
    Dual(DualElement),
    Smash(SmashElement),
    UeaTensor(TensorUea),
    DualTensor(TensorDual),
    Balanced(BalancedTensor),
}

impl Value {
    fn kind(&self) -> &'static str {
        match self {
            Value::Scalar(_) => "scalar",
            Value::Uea(u) if u.side() == Side::L => "U(g_L) element",
            Value::Uea(_) => "U(g_R) element",
            Value::Dual(_) => "dual element",
            Value::Smash(_) => "smash element",
            Value::UeaTensor(_) | Value::DualTensor(_) => "tensor",
            Value::Balanced(_) => "balanced tensor",
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Scalar(c) => write!(f, "{c}"),
            Value::Uea(u) => f.write_str(&u.render()),
            Value::Dual(d) => f.write_str(&d.render()),
            Value::Smash(s) => f.write_str(&s.render()),
            Value::UeaTensor(t) => f.write_str(&t.render()),
            Value::DualTensor(t) => f.write_str(&t.render()),
            Value::Balanced(t) => f.write_str(&t.render()),
        }
    }
}

pub fn parse_and_eval(ctx: &Context, src: &str) -> Result<Value, ExprError> {
    let mut p = Parser { toks: lex(src)?, at: 0 };
    let ast = p.sum()?;
    if *p.peek() != Tok::End {
        return err(p.pos(), "unexpected trailing input");
    }
    Ok(canonical(ctx, Eval { ctx }.eval(&ast)?))
}

/// Dual monomials beyond which `canonical` leaves `H` parts as written.
pub const REDUCE_LIMIT: usize = 1500;

/// Rewrites every `H` part over standard monomials, so equal values print identically.
/// Tensors and values whose `H` parts are too long are returned unchanged.
pub fn canonical(ctx: &Context, v: Value) -> Value {
    let p = &ctx.pairing;
    match v {
        Value::Dual(f) => match p.reducer(f.length(), REDUCE_LIMIT).and_then(|r| r.reduce(p, &f)) {
            Some(g) => Value::Dual(g),
            None => Value::Dual(f),
        },
        Value::Smash(x) => {
            let fibers = x.fibers();
            let len = fibers.values().map(DualElement::length).max().unwrap_or(0);
            let Some(r) = p.reducer(len, REDUCE_LIMIT) else { return Value::Smash(x) };
            let mut out = SmashElement::zero(x.side(), x.dim());
            for (d, f) in fibers {
                let g = r.reduce(p, &f).expect("within length");
                out = out.add(&SmashElement::pure(&g, &UeaElement::monomial(x.side(), d, Scalar::one())));
            }
            Value::Smash(out)
        }
        other => other,
    }
}

struct Eval<'a> {
    ctx: &'a Context,
}

impl Eval<'_> {
    fn n(&self) -> usize {
        self.ctx.dim()
    }

    fn eval(&self, a: &Ast) -> Result<Value, ExprError> {
        let n = self.n();
        let pos = a.pos;
        Ok(match &a.node {
            Node::Num(c) => Value::Scalar(c.clone()),
            Node::Gen(side, k) => {
                if *k >= n {
                    return err(pos, format!("generator index {} exceeds dimension {n}", k + 1));
                }
                Value::Uea(UeaElement::generator(*side, n, *k))
            }
            Node::Sym(bar, i, j) => {
                if *i >= n || *j >= n {
                    return err(pos, format!("matrix index exceeds dimension {n}"));
                }
                Value::Dual(if *bar { DualElement::ubar(*i, *j) } else { DualElement::u(*i, *j) })
            }
            Node::Neg(x) => self.scale(pos, self.eval(x)?, &-Scalar::one())?,
            Node::Add(x, y) => self.add(pos, self.eval(x)?, self.eval(y)?, false)?,
            Node::Sub(x, y) => self.add(pos, self.eval(x)?, self.eval(y)?, true)?,
            Node::Mul(x, y) => self.mul(pos, self.eval(x)?, self.eval(y)?)?,
            Node::Smash(x, y) => {
                let f = self.to_dual(x.pos, self.eval(x)?)?;
                let d = self.eval(y)?;
                let d = match d {
                    Value::Scalar(c) => UeaElement::scalar(Side::L, n, c),
                    Value::Uea(u) => u,
                    other => return err(y.pos, format!("right of ♯ must be a U(g) element, found {}", other.kind())),
                };
                Value::Smash(SmashElement::pure(&f, &d))
            }
            Node::Pow(x, e) => {
                let base = self.eval(x)?;
                let mut acc = self.one_like(pos, &base)?;
                for _ in 0..*e {
                    acc = self.mul(pos, acc, base.clone())?;
                }
                acc
            }
            Node::Call(name, args) => self.call(pos, name, args)?,
        })
    }

    fn uea_err(pos: usize) -> impl Fn(UeaError) -> ExprError {
        move |e| ExprError { pos, msg: e.to_string() }
    }

    fn one_like(&self, pos: usize, v: &Value) -> Result<Value, ExprError> {
        let n = self.n();
        Ok(match v {
            Value::Scalar(_) => Value::Scalar(Scalar::one()),
            Value::Uea(u) => Value::Uea(UeaElement::one(u.side(), n)),
            Value::Dual(_) => Value::Dual(DualElement::one()),
            Value::Smash(s) => Value::Smash(SmashElement::one(s.side(), n)),
            other => return err(pos, format!("cannot raise a {} to a power", other.kind())),
        })
    }

    fn to_dual(&self, pos: usize, v: Value) -> Result<DualElement, ExprError> {
        match v {
            Value::Scalar(c) => Ok(DualElement::scalar(c)),
            Value::Dual(d) => Ok(d),
            other => err(pos, format!("expected a dual element, found {}", other.kind())),
        }
    }

    fn to_uea(&self, pos: usize, v: Value, side: Side) -> Result<UeaElement, ExprError> {
        match v {
            Value::Scalar(c) => Ok(UeaElement::scalar(side, self.n(), c)),
            Value::Uea(u) if u.side() == side => Ok(u),
            other => {
                let want = if side == Side::L { "U(g_L)" } else { "U(g_R)" };
                err(pos, format!("expected a {want} element, found {}", other.kind()))
            }
        }
    }

    fn to_smash(&self, pos: usize, v: Value, side: Side) -> Result<SmashElement, ExprError> {
        let n = self.n();
        match v {
            Value::Scalar(c) => Ok(SmashElement::scalar(side, n, c)),
            Value::Dual(d) => Ok(SmashElement::from_dual(side, n, &d)),
            Value::Uea(u) if u.side() == side => Ok(SmashElement::from_uea(&u)),
            Value::Smash(s) if s.side() == side => Ok(s),
            other => err(pos, format!("cannot use a {} in a smash product over this copy", other.kind())),
        }
    }

    /// Copy of the smash product an operand pair lives in, defaulting to `L`.
    fn side_of(a: &Value, b: &Value) -> Side {
        for v in [a, b] {
            match v {
                Value::Uea(u) => return u.side(),
                Value::Smash(s) => return s.side(),
                _ => {}
            }
        }
        Side::L
    }

    fn scale(&self, pos: usize, v: Value, c: &Scalar) -> Result<Value, ExprError> {
        Ok(match v {
            Value::Scalar(x) => Value::Scalar(x * c),
            Value::Uea(u) => Value::Uea(u.scale(c)),
            Value::Dual(d) => Value::Dual(d.scale(c)),
            Value::Smash(s) => Value::Smash(s.scale(c)),
            other => return err(pos, format!("cannot negate a {}", other.kind())),
        })
    }

    fn add(&self, pos: usize, a: Value, b: Value, minus: bool) -> Result<Value, ExprError> {
        let b = if minus { self.scale(pos, b, &-Scalar::one())? } else { b };
        Ok(match (a, b) {
            (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(x + y),
            (Value::Dual(x), Value::Dual(y)) => Value::Dual(x.add(&y)),
            (Value::Dual(x), Value::Scalar(c)) | (Value::Scalar(c), Value::Dual(x)) => {
                Value::Dual(x.add(&DualElement::scalar(c)))
            }
            (a @ (Value::Uea(_) | Value::Scalar(_)), b @ (Value::Uea(_) | Value::Scalar(_))) => {
                let side = Self::side_of(&a, &b);
                Value::Uea(self.to_uea(pos, a, side)?.add(&self.to_uea(pos, b, side)?))
            }
            (a, b) => {
                let side = Self::side_of(&a, &b);
                Value::Smash(self.to_smash(pos, a, side)?.add(&self.to_smash(pos, b, side)?))
            }
        })
    }

    fn mul(&self, pos: usize, a: Value, b: Value) -> Result<Value, ExprError> {
        Ok(match (a, b) {
            (Value::Scalar(x), v) | (v, Value::Scalar(x)) => self.scale(pos, v, &x)?,
            (Value::Dual(x), Value::Dual(y)) => Value::Dual(x.mul(&y)),
            (Value::Uea(x), Value::Uea(y)) => {
                if x.side() != y.side() {
                    return err(pos, "cannot multiply elements of different copies of U(g)");
                }
                Value::Uea(self.ctx.uea.mul(&x, &y).map_err(Self::uea_err(pos))?)
            }
            (a, b) => {
                let side = Self::side_of(&a, &b);
                let x = self.to_smash(pos, a, side)?;
                let y = self.to_smash(pos, b, side)?;
                Value::Smash(self.ctx.smash_mul(&x, &y).map_err(Self::uea_err(pos))?)
            }
        })
    }

    fn call(&self, pos: usize, name: &str, args: &[Ast]) -> Result<Value, ExprError> {
        let arity = FUNCTIONS.iter().find(|(f, _)| *f == name).map(|(_, k)| *k).expect("known name");
        if args.len() != arity {
            return err(pos, format!("{name} takes {arity} argument(s), got {}", args.len()));
        }
        let ctx = self.ctx;
        let n = self.n();
        let ue = Self::uea_err(pos);
        let arg = |k: usize| self.eval(&args[k]);
        let apos = |k: usize| args[k].pos;
        Ok(match name {
            "lambda" => match arg(0)? {
                Value::Uea(u) => Value::Smash(ctx.lambda_coact(&u)),
                Value::Scalar(c) => Value::Smash(SmashElement::scalar(Side::L, n, c)),
                other => return err(apos(0), format!("lambda expects a U(g) element, found {}", other.kind())),
            },
            "tau" => Value::Smash(ctx.tau(&self.to_smash(apos(0), arg(0)?, Side::L)?)),
            "tau_inv" => Value::Smash(ctx.tau_inv(&self.to_smash(apos(0), arg(0)?, Side::L)?)),
            "S" => match arg(0)? {
                Value::Scalar(c) => Value::Scalar(c),
                Value::Uea(u) => Value::Uea(ctx.uea.ring(u.side()).antipode(&u).map_err(ue)?),
                Value::Dual(d) => Value::Dual(d.antipode()),
                other => return err(apos(0), format!("S is not defined on a {}", other.kind())),
            },
            "phi" => Value::Uea(ctx.uea.phi(&self.to_uea(apos(0), arg(0)?, Side::L)?).map_err(ue)?),
            "phi_inv" => Value::Uea(ctx.uea.phi_inv(&self.to_uea(apos(0), arg(0)?, Side::R)?).map_err(ue)?),
            "eps" => match arg(0)? {
                Value::Scalar(c) => Value::Scalar(c),
                Value::Uea(u) => Value::Scalar(u.counit()),
                Value::Dual(d) => Value::Scalar(d.counit()),
                other => return err(apos(0), format!("eps is not defined on a {}", other.kind())),
            },
            "eps_L" => Value::Uea(ctx.epsilon_l(&self.to_smash(apos(0), arg(0)?, Side::L)?)),
            "eps_R" => Value::Uea(ctx.epsilon_r(&self.to_smash(apos(0), arg(0)?, Side::L)?)),
            "alpha_L" => Value::Smash(ctx.alpha_l(&self.to_uea(apos(0), arg(0)?, Side::L)?)),
            "beta_L" => Value::Smash(ctx.beta_l(&self.to_uea(apos(0), arg(0)?, Side::L)?)),
            "alpha_R" => Value::Smash(ctx.alpha_r(&self.to_uea(apos(0), arg(0)?, Side::R)?).map_err(ue)?),
            "beta_R" => Value::Smash(ctx.beta_r(&self.to_uea(apos(0), arg(0)?, Side::R)?).map_err(ue)?),
            "Delta" => match arg(0)? {
                Value::Uea(u) => Value::UeaTensor(ctx.uea.ring(u.side()).coproduct(&u).map_err(ue)?),
                Value::Dual(d) => Value::DualTensor(d.coproduct(n)),
                other => return err(apos(0), format!("Delta expects a U(g) or dual element, found {}", other.kind())),
            },
            "Delta_L" => Value::Balanced(ctx.delta_l(&self.to_smash(apos(0), arg(0)?, Side::L)?)),
            "Delta_R" => Value::Balanced(ctx.delta_r(&self.to_smash(apos(0), arg(0)?, Side::L)?)),
            "act" => {
                let d = match arg(0)? {
                    Value::Scalar(c) => UeaElement::scalar(Side::L, n, c),
                    Value::Uea(u) => u,
                    other => return err(apos(0), format!("act expects a U(g) element, found {}", other.kind())),
                };
                Value::Dual(ctx.act_left(&d, &self.to_dual(apos(1), arg(1)?)?))
            }
            "ract" => {
                let d = match arg(0)? {
                    Value::Uea(u) => u,
                    Value::Scalar(c) => UeaElement::scalar(Side::L, n, c),
                    other => return err(apos(0), format!("ract expects a U(g) element, found {}", other.kind())),
                };
                Value::Uea(ctx.act_right(&d, &self.to_dual(apos(1), arg(1)?)?).map_err(ue)?)
            }
            "pair" => {
                let f = self.to_dual(apos(1), arg(1)?)?;
                match arg(0)? {
                    Value::Scalar(c) => Value::Scalar(c * f.counit()),
                    Value::Uea(u) if u.side() == Side::L => Value::Scalar(ctx.pairing.pair(&u, &f).map_err(ue)?),
                    Value::Uea(u) => Value::Scalar(ctx.pairing.pair_right(&ctx.uea, &u, &f).map_err(ue)?),
                    other => return err(apos(0), format!("pair expects a U(g) element first, found {}", other.kind())),
                }
            }
            _ => unreachable!("function table"),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::builtin;

    fn eval(alg: &str, s: &str) -> String {
        let ctx = Context::new(builtin(alg).unwrap());
        parse_and_eval(&ctx, s).unwrap().to_string()
    }

    #[test]
    fn straightening_and_pairing() {
        assert_eq!(eval("solvable2", "X2*X1"), "X1*X2 - X2");
        assert_eq!(eval("solvable2", "pair(X1, U[2,2])"), "1");
        assert_eq!(eval("solvable2", "⟨X1, U[2,2]⟩"), "1");
        assert_eq!(eval("abelian2", "lambda(X1)"), "1 ♯ X1");
        assert_eq!(eval("abelian2", "λ(X1)"), "1 ♯ X1");
        assert_eq!(eval("sl2", "3/2*X1^2*X2 + X3 − X3"), "3/2*X1^2*X2");
    }

    #[test]
    fn smash_syntax() {
        assert_eq!(eval("solvable2", "U[2,2] # X1"), "U[2,2] ♯ X1");
        // (1 # X1)(U[2,2] # 1) = (X1 |> U[2,2]) # 1 + U[2,2] # X1
        let lhs = eval("solvable2", "X1 * U[2,2]");
        let rhs = eval("solvable2", "act(X1, U[2,2]) ♯ 1 + U[2,2] ♯ X1");
        assert_eq!(lhs, rhs);
        assert_eq!(eval("solvable2", "tau(beta_L(X1))"), "1 ♯ X1");
    }

    #[test]
    fn round_trip() {
        let ctx = Context::new(builtin("sl2").unwrap());
        for s in [
            "X3*X1 + 2/3*X2^2 - 5",
            "U[1,2]^2*Ubar[3,1] - 1/2*U[2,2] + 4",
            "lambda(X1*X2) - 3*Ubar[1,1] ♯ X3",
            "tau(U[1,2] ♯ X1) + beta_L(X2)",
            "-X1",
            "Y1*Y2",
            "0",
        ] {
            let v = parse_and_eval(&ctx, s).unwrap();
            let again = parse_and_eval(&ctx, &v.to_string()).unwrap();
            assert_eq!(v, again, "{s} -> {v}");
        }
    }

    #[test]
    fn errors_carry_positions() {
        let ctx = Context::new(builtin("solvable2").unwrap());
        let e = parse_and_eval(&ctx, "X1 + X3").unwrap_err();
        assert_eq!(e.pos, 5);
        let e = parse_and_eval(&ctx, "X1 + ").unwrap_err();
        assert_eq!(e.pos, 5);
        let e = parse_and_eval(&ctx, "X1 * Y1").unwrap_err();
        assert_eq!(e.pos, 3);
        let e = parse_and_eval(&ctx, "foo(X1)").unwrap_err();
        assert_eq!(e.pos, 0);
        let e = parse_and_eval(&ctx, "X1 $").unwrap_err();
        assert_eq!(e.to_string(), "column 4: unexpected character '$'");
        assert!(parse_and_eval(&ctx, "U[1,2] ♯ U[1,1]").is_err());
        assert!(parse_and_eval(&ctx, "pair(X1)").is_err());
    }
}
