//! Center-definition catalog: a plain-text data file mapping Kimberling
//! indices to the first barycentric coordinate, expressed in a, b, c and the
//! area unit U. The other two coordinates follow by cyclic substitution.
//!
//! File format, one entry per line: `n ; expression ; provenance`
//! with `#` comments. Expression grammar:
//!
//! ```text
//! expr   := term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := base ('^' uint)?
//! base   := uint | 'a' | 'b' | 'c' | 'U' | '(' expr ')'
//! ```
//!
//! No unary minus and no implicit multiplication.

use crate::exactnum::{rat, ratio, Rat};
use crate::geom::BaryPoint;
use crate::mpoly::UPoly;
use crate::numeric::BigFloat;
use crate::exactnum::QuadExt;
use num::bigint::BigInt;
use num::{One, Signed, Zero};
use std::collections::BTreeMap;
use thiserror::Error;

/// The catalog shipped with the crate.
pub const DEFAULT_CATALOG_TEXT: &str = include_str!("../../../catalog.txt");

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    A,
    B,
    C,
    U,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CenterExpr {
    Int(BigInt),
    Var(Var),
    Add(Box<CenterExpr>, Box<CenterExpr>),
    Sub(Box<CenterExpr>, Box<CenterExpr>),
    Mul(Box<CenterExpr>, Box<CenterExpr>),
    Pow(Box<CenterExpr>, u32),
}

/// Value domain an expression can be evaluated into.
pub trait ExprValue: Clone {
    fn from_int(n: &BigInt) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
}

impl ExprValue for QuadExt {
    fn from_int(n: &BigInt) -> Self {
        QuadExt::from_rat(Rat::from_integer(n.clone()))
    }
    fn add(&self, o: &Self) -> Self {
        QuadExt::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        QuadExt::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        QuadExt::mul(self, o)
    }
}

impl ExprValue for BigFloat {
    fn from_int(n: &BigInt) -> Self {
        BigFloat::from_rat(&Rat::from_integer(n.clone()), 256)
    }
    fn add(&self, o: &Self) -> Self {
        BigFloat::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        BigFloat::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        BigFloat::mul(self, o)
    }
}

impl ExprValue for UPoly {
    fn from_int(n: &BigInt) -> Self {
        UPoly::constant(Rat::from_integer(n.clone()))
    }
    fn add(&self, o: &Self) -> Self {
        UPoly::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        UPoly::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        UPoly::mul(self, o)
    }
}

impl CenterExpr {
    pub fn eval<T: ExprValue>(&self, lookup: &impl Fn(Var) -> T) -> T {
        match self {
            CenterExpr::Int(n) => T::from_int(n),
            CenterExpr::Var(v) => lookup(*v),
            CenterExpr::Add(x, y) => x.eval(lookup).add(&y.eval(lookup)),
            CenterExpr::Sub(x, y) => x.eval(lookup).sub(&y.eval(lookup)),
            CenterExpr::Mul(x, y) => x.eval(lookup).mul(&y.eval(lookup)),
            CenterExpr::Pow(x, n) => {
                let base = x.eval(lookup);
                let mut acc = T::from_int(&BigInt::one());
                for _ in 0..*n {
                    acc = acc.mul(&base);
                }
                acc
            }
        }
    }

    pub fn uses_u(&self) -> bool {
        match self {
            CenterExpr::Int(_) => false,
            CenterExpr::Var(v) => *v == Var::U,
            CenterExpr::Add(x, y) | CenterExpr::Sub(x, y) | CenterExpr::Mul(x, y) => {
                x.uses_u() || y.uses_u()
            }
            CenterExpr::Pow(x, _) => x.uses_u(),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("lexical error at byte {pos}: unexpected character {found:?}")]
    Lex { pos: usize, found: char },
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("exponent at byte {pos} is not a nonnegative integer")]
    BadExponent { pos: usize },
    #[error("unbalanced parentheses at byte {pos}")]
    Unbalanced { pos: usize },
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Var(Var),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut out = vec![];
    let bytes = text.as_bytes();
    let mut i = 0usize;
    while i < bytes.len() {
        let ch = bytes[i] as char;
        match ch {
            ' ' | '\t' | '\r' | '\n' => i += 1,
            '+' => {
                out.push((i, Tok::Plus));
                i += 1;
            }
            '-' => {
                out.push((i, Tok::Minus));
                i += 1;
            }
            '*' => {
                out.push((i, Tok::Star));
                i += 1;
            }
            '^' => {
                out.push((i, Tok::Caret));
                i += 1;
            }
            '(' => {
                out.push((i, Tok::LParen));
                i += 1;
            }
            ')' => {
                out.push((i, Tok::RParen));
                i += 1;
            }
            'a' => {
                out.push((i, Tok::Var(Var::A)));
                i += 1;
            }
            'b' => {
                out.push((i, Tok::Var(Var::B)));
                i += 1;
            }
            'c' => {
                out.push((i, Tok::Var(Var::C)));
                i += 1;
            }
            'U' => {
                out.push((i, Tok::Var(Var::U)));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = text[start..i].parse().unwrap();
                out.push((start, Tok::Int(n)));
            }
            other => return Err(ParseError::Lex { pos: i, found: other }),
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks
            .get(self.pos)
            .map(|(p, _)| *p)
            .unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<CenterExpr, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = CenterExpr::Add(Box::new(acc), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = CenterExpr::Sub(Box::new(acc), Box::new(self.term()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<CenterExpr, ParseError> {
        let mut acc = self.factor()?;
        while matches!(self.peek(), Some(Tok::Star)) {
            self.bump();
            acc = CenterExpr::Mul(Box::new(acc), Box::new(self.factor()?));
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<CenterExpr, ParseError> {
        let base = self.base()?;
        if matches!(self.peek(), Some(Tok::Caret)) {
            self.bump();
            let pos = self.here();
            match self.bump() {
                Some(Tok::Int(n)) => {
                    if n.is_negative() {
                        return Err(ParseError::BadExponent { pos });
                    }
                    let exp: u32 = n
                        .try_into()
                        .map_err(|_| ParseError::BadExponent { pos })?;
                    return Ok(CenterExpr::Pow(Box::new(base), exp));
                }
                _ => return Err(ParseError::BadExponent { pos }),
            }
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<CenterExpr, ParseError> {
        let pos = self.here();
        match self.bump() {
            Some(Tok::Int(n)) => Ok(CenterExpr::Int(n)),
            Some(Tok::Var(v)) => Ok(CenterExpr::Var(v)),
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(ParseError::Unbalanced { pos }),
                }
            }
            Some(t) => Err(ParseError::Syntax {
                pos,
                msg: format!("expected a value, found {:?}", t),
            }),
            None => Err(ParseError::Syntax {
                pos,
                msg: "unexpected end of expression".into(),
            }),
        }
    }
}

/// Parse one center-coordinate expression.
pub fn parse_center_expr(text: &str) -> Result<CenterExpr, ParseError> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return Err(ParseError::Syntax {
            pos: 0,
            msg: "empty expression".into(),
        });
    }
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.len(),
    };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(ParseError::Syntax {
            pos: p.here(),
            msg: "trailing tokens".into(),
        });
    }
    Ok(e)
}

// ---------------------------------------------------------------------------
// Sides / AreaContext
// ---------------------------------------------------------------------------

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("line {line}: {err}")]
    Parse { line: usize, err: ParseError },
    #[error("line {line}: malformed entry ({msg})")]
    Format { line: usize, msg: String },
    #[error("duplicate catalog index {0}")]
    Duplicate(u32),
    #[error("unknown center index {0}")]
    UnknownIndex(u32),
    #[error("center X{0} evaluates to the zero triple")]
    ZeroTriple(u32),
    #[error("sides violate the strict triangle inequality")]
    DegenerateTriangle,
    #[error("sides must be positive")]
    NonPositiveSide,
}

/// Side lengths a = BC, b = CA, c = AB.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sides {
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
}

impl Sides {
    pub fn new(a: Rat, b: Rat, c: Rat) -> Result<Self, CatalogError> {
        if !a.is_positive() || !b.is_positive() || !c.is_positive() {
            return Err(CatalogError::NonPositiveSide);
        }
        if &a + &b <= c || &b + &c <= a || &c + &a <= b {
            return Err(CatalogError::DegenerateTriangle);
        }
        Ok(Sides { a, b, c })
    }

    /// Skip the triangle-inequality check (degenerate-allowed flag).
    pub fn new_unchecked(a: Rat, b: Rat, c: Rat) -> Self {
        Sides { a, b, c }
    }

    pub fn from_i64(a: i64, b: i64, c: i64) -> Result<Self, CatalogError> {
        Sides::new(rat(a), rat(b), rat(c))
    }

    pub fn iso(k: Rat) -> Result<Self, CatalogError> {
        Sides::new(Rat::one(), k.clone(), k)
    }

    pub fn as_array(&self) -> [Rat; 3] {
        [self.a.clone(), self.b.clone(), self.c.clone()]
    }
}

/// Per-triangle evaluation context: E = 16K^2 and the shared radicand 3E.
#[derive(Clone, Debug)]
pub struct AreaContext {
    pub e: Rat,
    pub radicand: Rat,
}

impl AreaContext {
    pub fn new(s: &Sides) -> Self {
        let sq = |x: &Rat| x * x;
        let (a2, b2, c2) = (sq(&s.a), sq(&s.b), sq(&s.c));
        let e = rat(2) * (&a2 * &b2 + &b2 * &c2 + &c2 * &a2)
            - &a2 * &a2
            - &b2 * &b2
            - &c2 * &c2;
        let radicand = rat(3) * &e;
        AreaContext { e, radicand }
    }

    /// U = sqrt(3)*K = sqrt(3E)/4 as a QuadExt in this context.
    pub fn u(&self) -> QuadExt {
        QuadExt::new(Rat::zero(), ratio(1, 4), self.radicand.clone())
    }

    /// 16 K^2 must be positive for a genuine triangle.
    pub fn is_valid_triangle(&self) -> bool {
        self.e.is_positive()
    }
}

// ---------------------------------------------------------------------------
// Catalog
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
pub struct CenterDef {
    pub index: u32,
    pub first_coordinate: CenterExpr,
    pub provenance: String,
    pub source_text: String,
}

#[derive(Clone, Debug, Default)]
pub struct Catalog {
    pub entries: BTreeMap<u32, CenterDef>,
}

impl Catalog {
    /// Parse catalog text (`n ; expr ; provenance` lines, `#` comments).
    pub fn parse(text: &str) -> Result<Self, CatalogError> {
        let mut entries = BTreeMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = lineno + 1;
            let stripped = raw.trim();
            if stripped.is_empty() || stripped.starts_with('#') {
                continue;
            }
            let parts: Vec<&str> = stripped.splitn(3, ';').collect();
            if parts.len() != 3 {
                return Err(CatalogError::Format {
                    line,
                    msg: "expected `n ; expression ; provenance`".into(),
                });
            }
            let index: u32 = parts[0].trim().parse().map_err(|_| CatalogError::Format {
                line,
                msg: format!("bad index {:?}", parts[0].trim()),
            })?;
            let expr_text = parts[1].trim().to_string();
            let expr = parse_center_expr(&expr_text)
                .map_err(|err| CatalogError::Parse { line, err })?;
            let def = CenterDef {
                index,
                first_coordinate: expr,
                provenance: parts[2].trim().to_string(),
                source_text: expr_text,
            };
            if entries.insert(index, def).is_some() {
                return Err(CatalogError::Duplicate(index));
            }
        }
        Ok(Catalog { entries })
    }

    /// The catalog bundled with the crate (X1..X100 and X650).
    pub fn bundled() -> Self {
        Catalog::parse(DEFAULT_CATALOG_TEXT).expect("bundled catalog must parse")
    }

    pub fn get(&self, n: u32) -> Result<&CenterDef, CatalogError> {
        self.entries.get(&n).ok_or(CatalogError::UnknownIndex(n))
    }

    pub fn indices(&self) -> impl Iterator<Item = u32> + '_ {
        self.entries.keys().copied()
    }

    /// Exact evaluation at rational sides: the three coordinates are the
    /// cyclic substitutions f(a,b,c), f(b,c,a), f(c,a,b).
    pub fn eval_center(&self, n: u32, s: &Sides) -> Result<BaryPoint, CatalogError> {
        let def = self.get(n)?;
        let ctx = AreaContext::new(s);
        let u = ctx.u();
        let sides = s.as_array();
        let coord = |shift: usize| {
            def.first_coordinate.eval(&|v| match v {
                Var::A => QuadExt::from_rat(sides[shift % 3].clone()),
                Var::B => QuadExt::from_rat(sides[(shift + 1) % 3].clone()),
                Var::C => QuadExt::from_rat(sides[(shift + 2) % 3].clone()),
                Var::U => u.clone(),
            })
        };
        let p = BaryPoint::new(coord(0), coord(1), coord(2));
        if p.is_zero_triple() {
            return Err(CatalogError::ZeroTriple(n));
        }
        Ok(p)
    }

    /// High-precision numeric evaluation for irrational side lengths.
    pub fn eval_center_numeric(
        &self,
        n: u32,
        sides: &[BigFloat; 3],
        precision_bits: u32,
    ) -> Result<[BigFloat; 3], CatalogError> {
        let def = self.get(n)?;
        let sides: Vec<BigFloat> = sides
            .iter()
            .map(|s| BigFloat::from_rat(s.as_rat(), precision_bits))
            .collect();
        for s in &sides {
            if s.sign() <= 0 {
                return Err(CatalogError::NonPositiveSide);
            }
        }
        // E at working precision; a numerically degenerate triangle has E <= 0.
        let sq: Vec<BigFloat> = sides.iter().map(|s| s.mul(s)).collect();
        let two = BigFloat::from_i64(2, precision_bits);
        let e = two
            .mul(&sq[0].mul(&sq[1]).add(&sq[1].mul(&sq[2])).add(&sq[2].mul(&sq[0])))
            .sub(&sq[0].mul(&sq[0]))
            .sub(&sq[1].mul(&sq[1]))
            .sub(&sq[2].mul(&sq[2]));
        if e.sign() <= 0 {
            return Err(CatalogError::DegenerateTriangle);
        }
        let u = BigFloat::from_i64(3, precision_bits)
            .mul(&e)
            .sqrt()
            .div(&BigFloat::from_i64(4, precision_bits));
        let coord = |shift: usize| {
            def.first_coordinate.eval(&|v| match v {
                Var::A => sides[shift % 3].clone(),
                Var::B => sides[(shift + 1) % 3].clone(),
                Var::C => sides[(shift + 2) % 3].clone(),
                Var::U => u.clone(),
            })
        };
        Ok([coord(0), coord(1), coord(2)])
    }

    /// The cyclic coordinate triple as symbolic polynomials in a, b, c, U.
    pub fn coord_upolys(&self, n: u32) -> Result<[UPoly; 3], CatalogError> {
        let def = self.get(n)?;
        let first = def.first_coordinate.eval(&|v| match v {
            Var::A => UPoly::var(0),
            Var::B => UPoly::var(1),
            Var::C => UPoly::var(2),
            Var::U => UPoly::unit_u(),
        });
        // g(a,b,c) = f(b,c,a) etc.
        let second = first.permute_vars([2, 0, 1]);
        let third = second.permute_vars([2, 0, 1]);
        Ok([first, second, third])
    }

    /// Check every entry: parses (already done), evaluates to a nonzero
    /// triple at the reference triangle (6,9,13), and is homogeneous with U
    /// counted as degree 2 (the single-radicand policy's scaling rule).
    pub fn validate(&self) -> ValidationReport {
        let mut failures = vec![];
        let reference = Sides::from_i64(6, 9, 13).expect("reference triangle");
        for (&n, _def) in &self.entries {
            match self.eval_center(n, &reference) {
                Err(e) => failures.push((n, e.to_string())),
                Ok(_) => {}
            }
            match self.coord_upolys(n) {
                Err(e) => failures.push((n, e.to_string())),
                Ok([first, _, _]) => {
                    // Homogeneity: all monomials of p0 share one total degree
                    // d, and all monomials of p1 share degree d - 2 (U ~ 2).
                    let d0 = first.p0.degrees();
                    let d1 = first.p1.degrees();
                    let ok = match (d0.as_slice(), d1.as_slice()) {
                        ([d], []) => Some(*d),
                        ([], [d]) => Some(d + 2),
                        ([d], [du]) if *d == du + 2 => Some(*d),
                        _ => None,
                    };
                    if ok.is_none() {
                        failures.push((
                            n,
                            format!(
                                "not homogeneous: degrees {:?} with U-part degrees {:?}",
                                d0, d1
                            ),
                        ));
                    }
                }
            }
        }
        ValidationReport {
            checked: self.entries.len(),
            failures,
        }
    }
}

#[derive(Clone, Debug)]
pub struct ValidationReport {
    pub checked: usize,
    pub failures: Vec<(u32, String)>,
}

impl ValidationReport {
    pub fn is_clean(&self) -> bool {
        self.failures.is_empty()
    }
}
