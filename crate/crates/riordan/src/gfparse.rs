//! A small expression language for generating functions, used by the CLI's
//! `--g` / `--f` arguments.
//!
//! Grammar (whitespace-insensitive):
//!
//! ```text
//! expr     := term (('+' | '-') term)*
//! term     := unary (('*' | '/') unary)*
//! unary    := '-' unary | power
//! power    := atom ('^' exponent)?
//! exponent := '-'? INT | '(' '-'? INT ('/' INT)? ')'
//! atom     := INT | 't' | NAME | '(' expr ')'
//!           | 'sqrt' '(' expr ')' | 'compose' '(' expr ',' expr ')'
//! ```
//!
//! `NAME` is a catalog series identifier (`catalan`, `central_binomial`,
//! `ternary`, `fuss:3`; underscores stand in for the hyphens of the CLI
//! catalog names). A numeric-folding pass runs before evaluation, so `1/2`
//! between numeric literals is the rational one-half while `1/(1-t)` is
//! series division. Division by a series with a zero constant term is
//! resolved through `t^k` factoring when the numerator allows it, so
//! `(1-sqrt(1-4*t))/(2*t)` evaluates to the Catalan series.

use std::fmt;

use num::{Signed, Zero};

use crate::catalog;
use crate::error::Error;
use crate::{Rat, RatSeries};

/// Expression tree for a generating function.
#[derive(Debug, Clone, PartialEq)]
pub enum GfAst {
    /// Rational literal (integer literals and folded numeric subtrees).
    Number(Rat),
    /// The indeterminate `t`.
    T,
    /// A catalog series name.
    Name(String),
    Add(Box<GfAst>, Box<GfAst>),
    Sub(Box<GfAst>, Box<GfAst>),
    Mul(Box<GfAst>, Box<GfAst>),
    Div(Box<GfAst>, Box<GfAst>),
    Neg(Box<GfAst>),
    /// Power with a literal integer or rational exponent.
    Pow(Box<GfAst>, Rat),
    Sqrt(Box<GfAst>),
    /// `compose(F, G)` = F(G(t)).
    Compose(Box<GfAst>, Box<GfAst>),
}

/// Parse or evaluation failure.
#[derive(Debug, Clone, PartialEq)]
pub enum GfError {
    /// Lexical/grammatical problem at a byte offset, with what was expected.
    Syntax {
        offset: usize,
        expected: Vec<&'static str>,
        found: String,
    },
    /// A violated semantic constraint, naming the offending sub-expression.
    Semantic { constraint: String, expr: String },
}

impl fmt::Display for GfError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GfError::Syntax {
                offset,
                expected,
                found,
            } => write!(
                f,
                "syntax error at byte {offset}: expected {}, found {found}",
                expected.join(" | ")
            ),
            GfError::Semantic { constraint, expr } => {
                write!(f, "semantic error: {constraint} in `{expr}`")
            }
        }
    }
}

impl std::error::Error for GfError {}

// ---------------------------------------------------------------------------
// parsing
// ---------------------------------------------------------------------------

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn error(&mut self, expected: Vec<&'static str>) -> GfError {
        let found = match self.peek() {
            Some(_) => {
                let rest = &self.src[self.pos..];
                let end = rest.len().min(8);
                format!("{:?}", String::from_utf8_lossy(&rest[..end]))
            }
            None => "end of input".to_owned(),
        };
        GfError::Syntax {
            offset: self.pos,
            expected,
            found,
        }
    }

    fn eat(&mut self, byte: u8, what: &'static str) -> Result<(), GfError> {
        if self.peek() == Some(byte) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(vec![what]))
        }
    }

    fn integer(&mut self) -> Result<Rat, GfError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error(vec!["integer"]));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        text.parse::<Rat>().map_err(|_| GfError::Syntax {
            offset: start,
            expected: vec!["integer"],
            found: text.to_owned(),
        })
    }

    fn ident(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        // allow a ':<digits>' suffix for parameterized names like fuss:3
        if self.src.get(self.pos) == Some(&b':')
            && self
                .src
                .get(self.pos + 1)
                .is_some_and(|b| b.is_ascii_digit())
        {
            self.pos += 1;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn expr(&mut self) -> Result<GfAst, GfError> {
        let mut node = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    node = GfAst::Add(Box::new(node), Box::new(self.term()?));
                }
                Some(b'-') => {
                    self.pos += 1;
                    node = GfAst::Sub(Box::new(node), Box::new(self.term()?));
                }
                _ => return Ok(node),
            }
        }
    }

    fn term(&mut self) -> Result<GfAst, GfError> {
        let mut node = self.unary()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    node = GfAst::Mul(Box::new(node), Box::new(self.unary()?));
                }
                Some(b'/') => {
                    self.pos += 1;
                    node = GfAst::Div(Box::new(node), Box::new(self.unary()?));
                }
                _ => return Ok(node),
            }
        }
    }

    fn unary(&mut self) -> Result<GfAst, GfError> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(GfAst::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<GfAst, GfError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let exp = self.exponent()?;
            return Ok(GfAst::Pow(Box::new(base), exp));
        }
        Ok(base)
    }

    // Exponents are literal integers, or rationals in parentheses; a bare
    // slash after `x^1` is series division, so `x^1/2` means `(x^1)/2`.
    fn exponent(&mut self) -> Result<Rat, GfError> {
        if self.peek() == Some(b'(') {
            self.pos += 1;
            let value = self.signed_rational(true)?;
            self.eat(b')', "')'")?;
            return Ok(value);
        }
        self.signed_rational(false)
    }

    fn signed_rational(&mut self, allow_fraction: bool) -> Result<Rat, GfError> {
        let negative = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let mut value = self.integer()?;
        if allow_fraction && self.peek() == Some(b'/') {
            self.pos += 1;
            let den = self.integer()?;
            if den.is_zero() {
                return Err(GfError::Semantic {
                    constraint: "zero denominator in exponent".to_owned(),
                    expr: "^".to_owned(),
                });
            }
            value /= den;
        }
        Ok(if negative { -value } else { value })
    }

    fn atom(&mut self) -> Result<GfAst, GfError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.eat(b')', "')'")?;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => Ok(GfAst::Number(self.integer()?)),
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let name = self.ident();
                match name.as_str() {
                    "t" => Ok(GfAst::T),
                    "sqrt" => {
                        self.eat(b'(', "'('")?;
                        let inner = self.expr()?;
                        self.eat(b')', "')'")?;
                        Ok(GfAst::Sqrt(Box::new(inner)))
                    }
                    "compose" => {
                        self.eat(b'(', "'('")?;
                        let outer = self.expr()?;
                        self.eat(b',', "','")?;
                        let inner = self.expr()?;
                        self.eat(b')', "')'")?;
                        Ok(GfAst::Compose(Box::new(outer), Box::new(inner)))
                    }
                    _ => Ok(GfAst::Name(name)),
                }
            }
            _ => Err(self.error(vec!["number", "'t'", "name", "'('", "'sqrt'", "'compose'"])),
        }
    }
}

/// Parses an expression into its tree. Errors carry the byte offset and the
/// expectation set at the point of failure.
pub fn parse(src: &str) -> Result<GfAst, GfError> {
    let mut p = Parser::new(src);
    let ast = p.expr()?;
    if p.peek().is_some() {
        return Err(p.error(vec!["operator", "end of input"]));
    }
    Ok(ast)
}

// ---------------------------------------------------------------------------
// numeric folding
// ---------------------------------------------------------------------------

fn as_number(ast: &GfAst) -> Option<&Rat> {
    match ast {
        GfAst::Number(q) => Some(q),
        _ => None,
    }
}

/// Folds purely numeric subtrees into rational literals. This is what makes
/// `a/b` bind as a rational exactly when both sides are numeric.
pub fn fold(ast: &GfAst) -> Result<GfAst, GfError> {
    let fold2 =
        |a: &GfAst, b: &GfAst| -> Result<(GfAst, GfAst), GfError> { Ok((fold(a)?, fold(b)?)) };
    Ok(match ast {
        GfAst::Number(_) | GfAst::T | GfAst::Name(_) => ast.clone(),
        GfAst::Add(a, b) => {
            let (a, b) = fold2(a, b)?;
            match (as_number(&a), as_number(&b)) {
                (Some(x), Some(y)) => GfAst::Number(x + y),
                _ => GfAst::Add(Box::new(a), Box::new(b)),
            }
        }
        GfAst::Sub(a, b) => {
            let (a, b) = fold2(a, b)?;
            match (as_number(&a), as_number(&b)) {
                (Some(x), Some(y)) => GfAst::Number(x - y),
                _ => GfAst::Sub(Box::new(a), Box::new(b)),
            }
        }
        GfAst::Mul(a, b) => {
            let (a, b) = fold2(a, b)?;
            match (as_number(&a), as_number(&b)) {
                (Some(x), Some(y)) => GfAst::Number(x * y),
                _ => GfAst::Mul(Box::new(a), Box::new(b)),
            }
        }
        GfAst::Div(a, b) => {
            let (a, b) = fold2(a, b)?;
            match (as_number(&a), as_number(&b)) {
                (Some(x), Some(y)) => {
                    if y.is_zero() {
                        return Err(GfError::Semantic {
                            constraint: "division by zero".to_owned(),
                            expr: render(ast),
                        });
                    }
                    GfAst::Number(x / y)
                }
                _ => GfAst::Div(Box::new(a), Box::new(b)),
            }
        }
        GfAst::Neg(a) => {
            let a = fold(a)?;
            match as_number(&a) {
                Some(x) => GfAst::Number(-x),
                None => GfAst::Neg(Box::new(a)),
            }
        }
        GfAst::Pow(a, e) => {
            let a = fold(a)?;
            match as_number(&a) {
                Some(x) if e.is_integer() && !x.is_zero() => {
                    let k =
                        num::ToPrimitive::to_i32(e.numer()).ok_or_else(|| GfError::Semantic {
                            constraint: "exponent too large".to_owned(),
                            expr: render(ast),
                        })?;
                    GfAst::Number(x.pow(k))
                }
                _ => GfAst::Pow(Box::new(a), e.clone()),
            }
        }
        GfAst::Sqrt(a) => GfAst::Sqrt(Box::new(fold(a)?)),
        GfAst::Compose(a, b) => {
            let (a, b) = fold2(a, b)?;
            GfAst::Compose(Box::new(a), Box::new(b))
        }
    })
}

// ---------------------------------------------------------------------------
// rendering
// ---------------------------------------------------------------------------

fn precedence(ast: &GfAst) -> u8 {
    match ast {
        GfAst::Add(..) | GfAst::Sub(..) => 1,
        GfAst::Mul(..) | GfAst::Div(..) => 2,
        GfAst::Neg(..) => 3,
        GfAst::Pow(..) => 4,
        GfAst::Number(q) if q.is_negative() => 3,
        _ => 5,
    }
}

fn wrap(ast: &GfAst, min_prec: u8) -> String {
    let s = render(ast);
    if precedence(ast) < min_prec {
        format!("({s})")
    } else {
        s
    }
}

/// Canonical rendering; `parse(render(x))` re-renders to the same string.
pub fn render(ast: &GfAst) -> String {
    match ast {
        GfAst::Number(q) => q.to_string(),
        GfAst::T => "t".to_owned(),
        GfAst::Name(n) => n.clone(),
        GfAst::Add(a, b) => format!("{}+{}", wrap(a, 1), wrap(b, 2)),
        GfAst::Sub(a, b) => format!("{}-{}", wrap(a, 1), wrap(b, 2)),
        GfAst::Mul(a, b) => format!("{}*{}", wrap(a, 2), wrap(b, 3)),
        GfAst::Div(a, b) => format!("{}/{}", wrap(a, 2), wrap(b, 3)),
        GfAst::Neg(a) => format!("-{}", wrap(a, 3)),
        GfAst::Pow(a, e) => {
            let exp = if e.is_integer() && !e.is_negative() {
                e.to_string()
            } else {
                format!("({e})")
            };
            format!("{}^{exp}", wrap(a, 5))
        }
        GfAst::Sqrt(a) => format!("sqrt({})", render(a)),
        GfAst::Compose(a, b) => format!("compose({},{})", render(a), render(b)),
    }
}

// ---------------------------------------------------------------------------
// evaluation
// ---------------------------------------------------------------------------

fn node_count(ast: &GfAst) -> usize {
    match ast {
        GfAst::Number(_) | GfAst::T | GfAst::Name(_) => 1,
        GfAst::Neg(a) | GfAst::Pow(a, _) | GfAst::Sqrt(a) => 1 + node_count(a),
        GfAst::Add(a, b)
        | GfAst::Sub(a, b)
        | GfAst::Mul(a, b)
        | GfAst::Div(a, b)
        | GfAst::Compose(a, b) => 1 + node_count(a) + node_count(b),
    }
}

fn semantic(constraint: impl Into<String>, ast: &GfAst) -> GfError {
    GfError::Semantic {
        constraint: constraint.into(),
        expr: render(ast),
    }
}

fn math(err: Error, what: &str, ast: &GfAst) -> GfError {
    semantic(format!("{what}: {err}"), ast)
}

fn eval_at(ast: &GfAst, order: usize) -> Result<RatSeries, GfError> {
    Ok(match ast {
        GfAst::Number(q) => RatSeries::constant(q.clone(), order),
        GfAst::T => RatSeries::identity(order),
        GfAst::Name(n) => catalog::series_by_name(n, order)
            .ok_or_else(|| semantic(format!("unknown series name `{n}`"), ast))?,
        GfAst::Add(a, b) => eval_at(a, order)?.add(&eval_at(b, order)?),
        GfAst::Sub(a, b) => eval_at(a, order)?.sub(&eval_at(b, order)?),
        GfAst::Mul(a, b) => eval_at(a, order)?.mul(&eval_at(b, order)?),
        GfAst::Div(a, b) => {
            let num = eval_at(a, order)?;
            let den = eval_at(b, order)?;
            num.div_exact(&den)
                .map_err(|e| math(e, "series division", ast))?
        }
        GfAst::Neg(a) => eval_at(a, order)?.neg(),
        GfAst::Pow(a, e) => {
            let base = eval_at(a, order)?;
            let numer = num::ToPrimitive::to_i64(e.numer())
                .ok_or_else(|| semantic("exponent too large", ast))?;
            if e.is_integer() {
                base.pow_int(numer)
                    .map_err(|err| math(err, "integer power", ast))?
            } else {
                let denom = num::ToPrimitive::to_u64(e.denom())
                    .ok_or_else(|| semantic("exponent too large", ast))?;
                base.pow_rational(numer, denom)
                    .map_err(|err| math(err, "rational power", ast))?
            }
        }
        GfAst::Sqrt(a) => {
            let base = eval_at(a, order)?;
            base.pow_rational(1, 2)
                .map_err(|err| math(err, "sqrt", ast))?
        }
        GfAst::Compose(a, b) => {
            let outer = eval_at(a, order)?;
            let inner = eval_at(b, order)?;
            outer
                .compose(&inner)
                .map_err(|err| math(err, "composition", ast))?
        }
    })
}

/// Evaluates an expression to an exact series at the requested order.
///
/// Numeric subtrees are folded first; divisions by `t^k` spend truncation
/// headroom, so evaluation runs with internal slack and truncates back.
pub fn eval(ast: &GfAst, order: usize) -> Result<RatSeries, GfError> {
    let folded = fold(ast)?;
    let slack = (2 * node_count(&folded)).min(64);
    let value = eval_at(&folded, order + slack)?;
    if value.order() < order {
        return Err(semantic(
            format!(
                "expression loses too much truncation (got order {}, need {order})",
                value.order()
            ),
            ast,
        ));
    }
    Ok(value.truncated(order))
}

/// Parses and evaluates in one step.
pub fn eval_str(src: &str, order: usize) -> Result<RatSeries, GfError> {
    eval(&parse(src)?, order)
}
