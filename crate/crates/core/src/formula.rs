//! Quantifier-free Tarski formulas: sign atoms under and/or/not, a text
//! parser for problem files, polynomial extraction, and truth evaluation
//! at sample points.

use crate::polyring::{Int, Polynomial, PolySet, Rat, VarOrder};
use crate::realalg::{sign_at, SamplePoint};
use num_traits::{Signed, Zero};
use std::fmt;
use std::sync::Arc;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Rel {
    Eq,
    Ne,
    Lt,
    Le,
    Gt,
    Ge,
}

impl Rel {
    pub fn holds(self, sign: i8) -> bool {
        match self {
            Rel::Eq => sign == 0,
            Rel::Ne => sign != 0,
            Rel::Lt => sign < 0,
            Rel::Le => sign <= 0,
            Rel::Gt => sign > 0,
            Rel::Ge => sign >= 0,
        }
    }

    /// Relation after negating the polynomial side.
    pub fn mirrored(self) -> Rel {
        match self {
            Rel::Eq => Rel::Eq,
            Rel::Ne => Rel::Ne,
            Rel::Lt => Rel::Gt,
            Rel::Le => Rel::Ge,
            Rel::Gt => Rel::Lt,
            Rel::Ge => Rel::Le,
        }
    }

    pub fn text(self) -> &'static str {
        match self {
            Rel::Eq => "=",
            Rel::Ne => "!=",
            Rel::Lt => "<",
            Rel::Le => "<=",
            Rel::Gt => ">",
            Rel::Ge => ">=",
        }
    }
}

/// A sign condition `poly rel 0` with `poly` nonzero and canonical.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Atom {
    pub poly: Polynomial,
    pub rel: Rel,
}

impl Atom {
    /// Normalizes `lhs rel rhs` to `poly rel 0`, canonicalizing the
    /// polynomial and mirroring the relation if the sign flips.
    pub fn new(lhs: &Polynomial, rel: Rel, rhs: &Polynomial) -> Result<Atom, ParseError> {
        let diff = lhs.sub(rhs);
        if diff.is_zero() {
            return Err(ParseError::plain("atom reduces to the zero polynomial"));
        }
        let canon = diff.canonical();
        // canonical() scales by a positive rational and possibly negates.
        let flipped = {
            let (_, q) = diff.rational_scale_split();
            q != canon
        };
        Ok(Atom {
            poly: canon,
            rel: if flipped { rel.mirrored() } else { rel },
        })
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Formula {
    Atom(Atom),
    And(Vec<Formula>),
    Or(Vec<Formula>),
    Not(Box<Formula>),
}

impl Formula {
    /// The canonical set of all atom polynomials.
    pub fn extract_polynomials(&self) -> PolySet {
        let mut out = PolySet::new();
        self.walk_atoms(&mut |a| out.insert(&a.poly));
        out
    }

    pub fn walk_atoms<F: FnMut(&Atom)>(&self, f: &mut F) {
        match self {
            Formula::Atom(a) => f(a),
            Formula::And(fs) | Formula::Or(fs) => {
                for g in fs {
                    g.walk_atoms(f);
                }
            }
            Formula::Not(g) => g.walk_atoms(f),
        }
    }

    /// Top-level conjunct atoms (the formula viewed as a conjunction).
    pub fn conjunct_atoms(&self) -> Vec<&Atom> {
        let mut out = Vec::new();
        match self {
            Formula::Atom(a) => out.push(a),
            Formula::And(fs) => {
                for g in fs {
                    out.extend(g.conjunct_atoms());
                }
            }
            _ => {}
        }
        out
    }

    /// Boolean value at a sample point, atoms decided by certified signs.
    pub fn evaluate_truth(&self, s: &SamplePoint) -> bool {
        match self {
            Formula::Atom(a) => a.rel.holds(sign_at(&a.poly, s)),
            Formula::And(fs) => fs.iter().all(|g| g.evaluate_truth(s)),
            Formula::Or(fs) => fs.iter().any(|g| g.evaluate_truth(s)),
            Formula::Not(g) => !g.evaluate_truth(s),
        }
    }

    /// Boolean value at an all-rational point (exact arithmetic only).
    pub fn evaluate_at_rationals(&self, point: &[Rat]) -> bool {
        match self {
            Formula::Atom(a) => {
                let v = a.poly.eval(point);
                let sign = if v.is_zero() {
                    0
                } else if v.is_positive() {
                    1
                } else {
                    -1
                };
                a.rel.holds(sign)
            }
            Formula::And(fs) => fs.iter().all(|g| g.evaluate_at_rationals(point)),
            Formula::Or(fs) => fs.iter().any(|g| g.evaluate_at_rationals(point)),
            Formula::Not(g) => !g.evaluate_at_rationals(point),
        }
    }

    pub fn display<'a>(&'a self, order: &'a VarOrder) -> FormulaDisplay<'a> {
        FormulaDisplay { f: self, order }
    }
}

pub struct FormulaDisplay<'a> {
    f: &'a Formula,
    order: &'a VarOrder,
}

impl fmt::Display for FormulaDisplay<'_> {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn go(f: &Formula, order: &VarOrder, out: &mut fmt::Formatter<'_>) -> fmt::Result {
            match f {
                Formula::Atom(a) => write!(out, "{} {} 0", a.poly.display(order), a.rel.text()),
                Formula::And(fs) => {
                    for (i, g) in fs.iter().enumerate() {
                        if i > 0 {
                            write!(out, r" /\ ")?;
                        }
                        wrap(g, order, out)?;
                    }
                    Ok(())
                }
                Formula::Or(fs) => {
                    for (i, g) in fs.iter().enumerate() {
                        if i > 0 {
                            write!(out, r" \/ ")?;
                        }
                        wrap(g, order, out)?;
                    }
                    Ok(())
                }
                Formula::Not(g) => {
                    write!(out, "~")?;
                    wrap(g, order, out)
                }
            }
        }
        fn wrap(f: &Formula, order: &VarOrder, out: &mut fmt::Formatter<'_>) -> fmt::Result {
            match f {
                Formula::Atom(_) => go(f, order, out),
                _ => {
                    write!(out, "(")?;
                    go(f, order, out)?;
                    write!(out, ")")
                }
            }
        }
        go(self.f, self.order, out)
    }
}

/// Syntax or semantic error with source position when available.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub message: String,
    pub line: usize,
    pub col: usize,
}

impl ParseError {
    fn plain(message: impl Into<String>) -> Self {
        ParseError {
            message: message.into(),
            line: 0,
            col: 0,
        }
    }

    fn at(message: impl Into<String>, line: usize, col: usize) -> Self {
        ParseError {
            message: message.into(),
            line,
            col,
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line > 0 {
            write!(f, "{}:{}: {}", self.line, self.col, self.message)
        } else {
            write!(f, "{}", self.message)
        }
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Num(Int),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    AndOp,
    OrOp,
    NotOp,
    RelEq,
    RelNe,
    RelLt,
    RelLe,
    RelGt,
    RelGe,
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

fn tokenize(text: &str, line0: usize) -> Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    let mut line = line0;
    let mut col = 1;
    while i < chars.len() {
        let c = chars[i];
        let here = (line, col);
        let mut push = |t: Tok, n: usize, col: &mut usize, i: &mut usize| {
            out.push(Spanned {
                tok: t,
                line: here.0,
                col: here.1,
            });
            *col += n;
            *i += n;
        };
        match c {
            '\n' => {
                line += 1;
                col = 1;
                i += 1;
            }
            c if c.is_whitespace() => {
                col += 1;
                i += 1;
            }
            '+' => push(Tok::Plus, 1, &mut col, &mut i),
            '-' => push(Tok::Minus, 1, &mut col, &mut i),
            '*' => push(Tok::Star, 1, &mut col, &mut i),
            '^' => push(Tok::Caret, 1, &mut col, &mut i),
            '(' => push(Tok::LParen, 1, &mut col, &mut i),
            ')' => push(Tok::RParen, 1, &mut col, &mut i),
            '~' => push(Tok::NotOp, 1, &mut col, &mut i),
            '=' => push(Tok::RelEq, 1, &mut col, &mut i),
            '/' => {
                if chars.get(i + 1) == Some(&'\\') {
                    push(Tok::AndOp, 2, &mut col, &mut i);
                } else {
                    push(Tok::Slash, 1, &mut col, &mut i);
                }
            }
            '\\' => {
                if chars.get(i + 1) == Some(&'/') {
                    push(Tok::OrOp, 2, &mut col, &mut i);
                } else {
                    return Err(ParseError::at("unexpected '\\'", line, col));
                }
            }
            '!' => {
                if chars.get(i + 1) == Some(&'=') {
                    push(Tok::RelNe, 2, &mut col, &mut i);
                } else {
                    return Err(ParseError::at("expected '!='", line, col));
                }
            }
            '<' => {
                if chars.get(i + 1) == Some(&'=') {
                    push(Tok::RelLe, 2, &mut col, &mut i);
                } else {
                    push(Tok::RelLt, 1, &mut col, &mut i);
                }
            }
            '>' => {
                if chars.get(i + 1) == Some(&'=') {
                    push(Tok::RelGe, 2, &mut col, &mut i);
                } else {
                    push(Tok::RelGt, 1, &mut col, &mut i);
                }
            }
            c if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                let n: Int = s.parse().expect("digits");
                out.push(Spanned {
                    tok: Tok::Num(n),
                    line,
                    col,
                });
                col += i - start;
            }
            c if c.is_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                out.push(Spanned {
                    tok: Tok::Ident(s),
                    line,
                    col,
                });
                col += i - start;
            }
            other => {
                return Err(ParseError::at(format!("unexpected character '{other}'"), line, col));
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Spanned>,
    pos: usize,
    order: &'a VarOrder,
    macros: &'a std::collections::BTreeMap<String, Polynomial>,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|s| &s.tok)
    }

    fn here(&self) -> (usize, usize) {
        self.toks
            .get(self.pos)
            .or_else(|| self.toks.last())
            .map(|s| (s.line, s.col))
            .unwrap_or((0, 0))
    }

    fn bump(&mut self) -> Option<Spanned> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect(&mut self, t: &Tok, what: &str) -> Result<(), ParseError> {
        let (line, col) = self.here();
        match self.bump() {
            Some(s) if &s.tok == t => Ok(()),
            _ => Err(ParseError::at(format!("expected {what}"), line, col)),
        }
    }

    fn err(&self, msg: impl Into<String>) -> ParseError {
        let (line, col) = self.here();
        ParseError::at(msg, line, col)
    }

    // poly := term ((+|-) term)*
    fn poly(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    // term := unary (* unary)*
    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.unary()?;
        while self.peek() == Some(&Tok::Star) {
            self.bump();
            acc = acc.mul(&self.unary()?);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial, ParseError> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                Ok(self.unary()?.neg())
            }
            Some(Tok::Plus) => {
                self.bump();
                self.unary()
            }
            _ => self.factor(),
        }
    }

    // factor := primary (^ INT)?
    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.primary()?;
        if self.peek() == Some(&Tok::Caret) {
            self.bump();
            let (line, col) = self.here();
            match self.bump().map(|s| s.tok) {
                Some(Tok::Num(n)) => {
                    if n.is_zero() || n.is_negative() {
                        return Err(ParseError::at(
                            "exponent must be a positive integer",
                            line,
                            col,
                        ));
                    }
                    let e: u32 = n
                        .try_into()
                        .map_err(|_| ParseError::at("exponent too large", line, col))?;
                    Ok(base.pow(e))
                }
                _ => Err(ParseError::at("expected integer exponent", line, col)),
            }
        } else {
            Ok(base)
        }
    }

    fn primary(&mut self) -> Result<Polynomial, ParseError> {
        let n = self.order.len();
        let (line, col) = self.here();
        match self.bump().map(|s| s.tok) {
            Some(Tok::Num(a)) => {
                // Optional rational literal a/b.
                if self.peek() == Some(&Tok::Slash) {
                    self.bump();
                    let (l2, c2) = self.here();
                    match self.bump().map(|s| s.tok) {
                        Some(Tok::Num(b)) if !b.is_zero() => {
                            Ok(Polynomial::constant(n, Rat::new(a, b)))
                        }
                        _ => Err(ParseError::at("expected nonzero denominator", l2, c2)),
                    }
                } else {
                    Ok(Polynomial::constant(n, Rat::from_integer(a)))
                }
            }
            Some(Tok::Ident(name)) => {
                if let Some(v) = self.order.lookup(&name) {
                    Ok(Polynomial::variable(n, v))
                } else if let Some(p) = self.macros.get(&name) {
                    Ok(p.clone())
                } else {
                    Err(ParseError::at(format!("unknown variable '{name}'"), line, col))
                }
            }
            Some(Tok::LParen) => {
                let p = self.poly()?;
                self.expect(&Tok::RParen, "')'")?;
                Ok(p)
            }
            _ => Err(ParseError::at("expected polynomial", line, col)),
        }
    }

    fn rel(&mut self) -> Result<Rel, ParseError> {
        let (line, col) = self.here();
        match self.bump().map(|s| s.tok) {
            Some(Tok::RelEq) => Ok(Rel::Eq),
            Some(Tok::RelNe) => Ok(Rel::Ne),
            Some(Tok::RelLt) => Ok(Rel::Lt),
            Some(Tok::RelLe) => Ok(Rel::Le),
            Some(Tok::RelGt) => Ok(Rel::Gt),
            Some(Tok::RelGe) => Ok(Rel::Ge),
            _ => Err(ParseError::at("expected relation", line, col)),
        }
    }

    fn atom(&mut self) -> Result<Formula, ParseError> {
        let (line, col) = self.here();
        let lhs = self.poly()?;
        let rel = self.rel()?;
        let rhs = self.poly()?;
        let a = Atom::new(&lhs, rel, &rhs)
            .map_err(|e| ParseError::at(e.message, line, col))?;
        Ok(Formula::Atom(a))
    }

    // A '(' opens a formula group only if its matching ')' is followed by
    // a Boolean connective or the end of input; otherwise it belongs to a
    // polynomial.
    fn paren_opens_formula(&self) -> bool {
        debug_assert_eq!(self.peek(), Some(&Tok::LParen));
        let mut depth = 0usize;
        let mut j = self.pos;
        while j < self.toks.len() {
            match self.toks[j].tok {
                Tok::LParen => depth += 1,
                Tok::RParen => {
                    depth -= 1;
                    if depth == 0 {
                        return match self.toks.get(j + 1).map(|s| &s.tok) {
                            None | Some(Tok::AndOp) | Some(Tok::OrOp) | Some(Tok::RParen) => true,
                            _ => false,
                        };
                    }
                }
                _ => {}
            }
            j += 1;
        }
        false
    }

    fn not_expr(&mut self) -> Result<Formula, ParseError> {
        match self.peek() {
            Some(Tok::NotOp) => {
                self.bump();
                Ok(Formula::Not(Box::new(self.not_expr()?)))
            }
            Some(Tok::LParen) if self.paren_opens_formula() => {
                self.bump();
                let f = self.or_expr()?;
                self.expect(&Tok::RParen, "')'")?;
                Ok(f)
            }
            _ => self.atom(),
        }
    }

    fn and_expr(&mut self) -> Result<Formula, ParseError> {
        let mut parts = vec![self.not_expr()?];
        while self.peek() == Some(&Tok::AndOp) {
            self.bump();
            parts.push(self.not_expr()?);
        }
        Ok(if parts.len() == 1 {
            parts.pop().unwrap()
        } else {
            Formula::And(parts)
        })
    }

    fn or_expr(&mut self) -> Result<Formula, ParseError> {
        let mut parts = vec![self.and_expr()?];
        while self.peek() == Some(&Tok::OrOp) {
            self.bump();
            parts.push(self.and_expr()?);
        }
        Ok(if parts.len() == 1 {
            parts.pop().unwrap()
        } else {
            Formula::Or(parts)
        })
    }
}

static NO_MACROS: std::sync::OnceLock<std::collections::BTreeMap<String, Polynomial>> =
    std::sync::OnceLock::new();

/// Parses a polynomial expression over the declared ordering.
pub fn parse_poly(text: &str, order: &VarOrder) -> Result<Polynomial, ParseError> {
    let macros = NO_MACROS.get_or_init(Default::default);
    let mut p = Parser {
        toks: tokenize(text, 1)?,
        pos: 0,
        order,
        macros,
    };
    let poly = p.poly()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input after polynomial"));
    }
    Ok(poly)
}

/// Parses a quantifier-free formula expression over the declared ordering.
pub fn parse_qff(text: &str, order: &VarOrder) -> Result<Formula, ParseError> {
    parse_qff_with_macros(text, order, NO_MACROS.get_or_init(Default::default), 1)
}

fn parse_qff_with_macros(
    text: &str,
    order: &VarOrder,
    macros: &std::collections::BTreeMap<String, Polynomial>,
    line0: usize,
) -> Result<Formula, ParseError> {
    let mut p = Parser {
        toks: tokenize(text, line0)?,
        pos: 0,
        order,
        macros,
    };
    let f = p.or_expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input after formula"));
    }
    Ok(f)
}

/// A parsed problem file: the variable ordering and the input formula.
#[derive(Clone, Debug)]
pub struct Problem {
    pub order: Arc<VarOrder>,
    pub formula: Formula,
}

/// Parses a problem file:
/// ```text
/// vars: v1 < v2 < ... < vn
/// let name = <poly>        (any number of lines)
/// formula: <expr>
/// ```
pub fn parse_problem(text: &str) -> Result<Problem, ParseError> {
    let mut order: Option<Arc<VarOrder>> = None;
    let mut macros: std::collections::BTreeMap<String, Polynomial> = Default::default();
    let mut formula: Option<Formula> = None;
    for (lineno, raw) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("vars:") {
            let names: Vec<String> = rest
                .split('<')
                .map(|s| s.trim().to_string())
                .filter(|s| !s.is_empty())
                .collect();
            if names.is_empty() {
                return Err(ParseError::at("empty variable list", lineno, 1));
            }
            let mut seen = std::collections::BTreeSet::new();
            for n in &names {
                if !seen.insert(n.clone()) {
                    return Err(ParseError::at(format!("duplicate variable '{n}'"), lineno, 1));
                }
            }
            order = Some(VarOrder::new(names));
        } else if let Some(rest) = line.strip_prefix("let") {
            let ord = order
                .as_ref()
                .ok_or_else(|| ParseError::at("'let' before 'vars:'", lineno, 1))?;
            let (name, body) = rest
                .split_once('=')
                .ok_or_else(|| ParseError::at("expected 'let name = poly'", lineno, 1))?;
            let name = name.trim().to_string();
            if ord.lookup(&name).is_some() {
                return Err(ParseError::at(
                    format!("macro '{name}' shadows a variable"),
                    lineno,
                    1,
                ));
            }
            let mut p = Parser {
                toks: tokenize(body, lineno)?,
                pos: 0,
                order: ord,
                macros: &macros,
            };
            let poly = p.poly()?;
            if p.pos != p.toks.len() {
                return Err(p.err("trailing input after polynomial"));
            }
            macros.insert(name, poly);
        } else if let Some(rest) = line.strip_prefix("formula:") {
            let ord = order
                .as_ref()
                .ok_or_else(|| ParseError::at("'formula:' before 'vars:'", lineno, 1))?;
            formula = Some(parse_qff_with_macros(rest, ord, &macros, lineno)?);
        } else {
            return Err(ParseError::at(format!("unrecognized line: {line}"), lineno, 1));
        }
    }
    match (order, formula) {
        (Some(order), Some(formula)) => Ok(Problem { order, formula }),
        (None, _) => Err(ParseError::plain("missing 'vars:' line")),
        (_, None) => Err(ParseError::plain("missing 'formula:' line")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::rat_int;

    #[test]
    fn parses_conjunction_of_atoms() {
        let ord = VarOrder::new(vec!["x", "y", "z"]);
        let f = parse_qff(r"x - y + z^2 = 0 /\ x^2 - 1 >= 0", &ord).unwrap();
        match &f {
            Formula::And(parts) => {
                assert_eq!(parts.len(), 2);
                match (&parts[0], &parts[1]) {
                    (Formula::Atom(a), Formula::Atom(b)) => {
                        assert_eq!(a.rel, Rel::Eq);
                        assert_eq!(a.poly, parse_poly("z^2 + x - y", &ord).unwrap());
                        assert_eq!(b.rel, Rel::Ge);
                        assert_eq!(b.poly, parse_poly("x^2 - 1", &ord).unwrap());
                    }
                    _ => panic!("expected atoms"),
                }
            }
            other => panic!("expected conjunction, got {other:?}"),
        }
    }

    #[test]
    fn parses_negation_and_disjunction() {
        let ord = VarOrder::new(vec!["x", "y"]);
        let f = parse_qff(r"~(x > 0) \/ y = 0", &ord).unwrap();
        match f {
            Formula::Or(parts) => {
                assert!(matches!(&parts[0], Formula::Not(_)));
                assert!(matches!(&parts[1], Formula::Atom(_)));
            }
            other => panic!("expected disjunction, got {other:?}"),
        }
    }

    #[test]
    fn atom_normalization_moves_rhs() {
        let ord = VarOrder::new(vec!["x", "y"]);
        let f = parse_qff("x = y", &ord).unwrap();
        match f {
            Formula::Atom(a) => {
                assert_eq!(a.poly, parse_poly("y - x", &ord).unwrap());
                // x - y canonicalizes to y - x, so the relation mirrors.
                assert_eq!(a.rel, Rel::Eq);
            }
            _ => panic!(),
        }
        let g = parse_qff("-x > 0", &ord).unwrap();
        match g {
            Formula::Atom(a) => {
                assert_eq!(a.poly, parse_poly("x", &ord).unwrap());
                assert_eq!(a.rel, Rel::Lt);
            }
            _ => panic!(),
        }
    }

    #[test]
    fn zero_atom_rejected() {
        let ord = VarOrder::new(vec!["x"]);
        assert!(parse_qff("x - x = 0", &ord).is_err());
    }

    #[test]
    fn unknown_variable_has_position() {
        let ord = VarOrder::new(vec!["x"]);
        let err = parse_qff("x + q > 0", &ord).unwrap_err();
        assert!(err.message.contains("unknown variable"));
        assert_eq!(err.line, 1);
        assert_eq!(err.col, 5);
    }

    #[test]
    fn problem_file_with_macros() {
        let text = "\
vars: x < y < z
let f1 = x + y^2 + z
let f2 = x - y^2 + z
let g  = x^2 + y^2 + z^2 - 1
formula: f1 = 0 /\\ f2 = 0 /\\ g >= 0
";
        let prob = parse_problem(text).unwrap();
        assert_eq!(prob.order.len(), 3);
        let polys = prob.formula.extract_polynomials();
        assert_eq!(polys.len(), 3);
        assert!(polys.contains(&parse_poly("x + y^2 + z", &prob.order).unwrap()));
        assert!(polys.contains(&parse_poly("x - y^2 + z", &prob.order).unwrap()));
        assert!(polys.contains(&parse_poly("x^2 + y^2 + z^2 - 1", &prob.order).unwrap()));
    }

    #[test]
    fn evaluate_at_rational_points() {
        let text = "\
vars: x < y < z
formula: x + y^2 + z = 0 /\\ x - y^2 + z = 0 /\\ x^2 + y^2 + z^2 - 1 >= 0
";
        let prob = parse_problem(text).unwrap();
        let t = prob
            .formula
            .evaluate_at_rationals(&[rat_int(-1), rat_int(0), rat_int(1)]);
        assert!(t);
        let f = prob
            .formula
            .evaluate_at_rationals(&[rat_int(0), rat_int(0), rat_int(0)]);
        assert!(!f);
    }

    #[test]
    fn display_round_trips() {
        let ord = VarOrder::new(vec!["x", "y"]);
        let f = parse_qff(r"~(x > 0) \/ (y = 0 /\ x + y <= 1)", &ord).unwrap();
        let shown = format!("{}", f.display(&ord));
        let again = parse_qff(&shown, &ord).unwrap();
        assert_eq!(f, again);
        let shown2 = format!("{}", again.display(&ord));
        assert_eq!(shown, shown2);
    }
}
