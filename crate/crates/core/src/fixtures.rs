//! Parser and matcher for the exception lists in `data/exceptions.txt`.

use std::collections::{BTreeMap, BTreeSet};

use num_integer::Integer;
use once_cell::sync::Lazy;

use crate::characters::{AltClass, AltIrrep, SplitTag};
use crate::error::{Error, Result};
use crate::shapes::Partition;

const DATA: &str = include_str!("../data/exceptions.txt");

static FIXTURES: Lazy<Fixtures> =
    Lazy::new(|| parse_fixtures(DATA).unwrap_or_else(|e| panic!("exceptions.txt: {e}")));

pub(crate) fn fixtures() -> &'static Fixtures {
    &FIXTURES
}

/// Values of the pattern variables.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct Env {
    pub n: i64,
    pub p: i64,
    pub q: i64,
    pub j: i64,
    pub len: i64,
    pub order: i64,
    pub mu_even: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Var {
    N,
    P,
    Q,
    J,
    Order,
}

impl Var {
    fn parse(s: &str) -> Option<Var> {
        Some(match s {
            "n" => Var::N,
            "p" => Var::P,
            "q" => Var::Q,
            "j" => Var::J,
            "order" => Var::Order,
            _ => return None,
        })
    }

    fn get(self, env: &Env) -> i64 {
        match self {
            Var::N => env.n,
            Var::P => env.p,
            Var::Q => env.q,
            Var::J => env.j,
            Var::Order => env.order,
        }
    }
}

#[derive(Debug, Clone)]
enum Expr {
    Num(i64),
    Var(Var),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
}

impl Expr {
    fn eval(&self, env: &Env) -> i64 {
        match self {
            Expr::Num(v) => *v,
            Expr::Var(v) => v.get(env),
            Expr::Add(a, b) => a.eval(env) + b.eval(env),
            Expr::Sub(a, b) => a.eval(env) - b.eval(env),
            Expr::Mul(a, b) => a.eval(env) * b.eval(env),
        }
    }
}

struct ExprParser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> ExprParser<'a> {
    fn parse(s: &'a str) -> Result<Expr> {
        let mut p = ExprParser { src: s.as_bytes(), pos: 0 };
        let e = p.sum()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(Error::parse(format!("trailing input in expression `{s}`")));
        }
        Ok(e)
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn sum(&mut self) -> Result<Expr> {
        let mut left = self.product()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let right = self.product()?;
            left = if c == b'+' {
                Expr::Add(Box::new(left), Box::new(right))
            } else {
                Expr::Sub(Box::new(left), Box::new(right))
            };
        }
        Ok(left)
    }

    fn product(&mut self) -> Result<Expr> {
        let mut left = self.atom()?;
        loop {
            match self.peek() {
                Some(b'*') => self.pos += 1,
                Some(c) if c.is_ascii_alphanumeric() || c == b'(' => {}
                _ => break,
            }
            let right = self.atom()?;
            left = Expr::Mul(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.sum()?;
                if self.peek() != Some(b')') {
                    return Err(Error::parse("unbalanced parenthesis in expression"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
                    self.pos += 1;
                }
                let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                text.parse().map(Expr::Num).map_err(|e| Error::parse(e.to_string()))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.src.get(self.pos).is_some_and(u8::is_ascii_alphabetic) {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                Var::parse(name)
                    .map(Expr::Var)
                    .ok_or_else(|| Error::parse(format!("unknown variable `{name}`")))
            }
            other => Err(Error::parse(format!(
                "unexpected {} in expression",
                other.map_or("end".to_string(), |c| format!("`{}`", c as char))
            ))),
        }
    }
}

/// Tag written after a shape pattern.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum TagPattern {
    Untagged,
    Plus,
    Minus,
    Both,
}

/// A partition-valued expression such as `(2,1^(n-2))+`.
#[derive(Debug, Clone)]
pub(crate) struct ShapePattern {
    items: Vec<(Expr, Option<Expr>)>,
    tag: TagPattern,
    text: String,
}

/// Splits at `sep` outside parentheses.
fn split_top(s: &str, sep: char) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            c if c == sep && depth == 0 => {
                out.push(&s[start..i]);
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

impl ShapePattern {
    fn parse(s: &str) -> Result<Self> {
        let text = s.trim().to_string();
        let (body, tag) = if let Some(b) = text.strip_suffix('±') {
            (b, TagPattern::Both)
        } else if let Some(b) = text.strip_suffix('+') {
            (b, TagPattern::Plus)
        } else if text.ends_with(")-") {
            (&text[..text.len() - 1], TagPattern::Minus)
        } else {
            (text.as_str(), TagPattern::Untagged)
        };
        let inner = body
            .trim()
            .strip_prefix('(')
            .and_then(|b| b.strip_suffix(')'))
            .ok_or_else(|| Error::parse(format!("shape pattern `{text}` must be parenthesized")))?;
        let mut items = Vec::new();
        for item in split_top(inner, ',') {
            let pieces = split_top(item, '^');
            match pieces.as_slice() {
                [base] => items.push((ExprParser::parse(base)?, None)),
                [base, exp] => items.push((ExprParser::parse(base)?, Some(ExprParser::parse(exp)?))),
                _ => return Err(Error::parse(format!("bad item `{item}` in `{text}`"))),
            }
        }
        Ok(ShapePattern { items, tag, text })
    }

    /// The partition this pattern denotes, if it denotes one.
    pub(crate) fn eval(&self, env: &Env) -> Option<Partition> {
        let mut parts = Vec::new();
        for (base, exp) in &self.items {
            let b = base.eval(env);
            let e = exp.as_ref().map_or(1, |e| e.eval(env));
            if e < 0 {
                return None;
            }
            if e == 0 {
                continue;
            }
            if b <= 0 {
                return None;
            }
            parts.extend(std::iter::repeat_n(b as usize, e as usize));
        }
        Partition::new(parts).ok()
    }

    pub(crate) fn matches_partition(&self, env: &Env, lambda: &Partition) -> bool {
        self.tag == TagPattern::Untagged && self.eval(env).as_ref() == Some(lambda)
    }

    pub(crate) fn matches_irrep(&self, env: &Env, v: &AltIrrep) -> bool {
        let Some(shape) = self.eval(env) else { return false };
        match (self.tag, v.tag()) {
            (TagPattern::Untagged, SplitTag::None) => {
                shape == *v.shape() || shape.conjugate() == *v.shape()
            }
            (TagPattern::Plus, SplitTag::Plus)
            | (TagPattern::Minus, SplitTag::Minus)
            | (TagPattern::Both, SplitTag::Plus | SplitTag::Minus) => shape == *v.shape(),
            _ => false,
        }
    }

    fn matches_class(&self, env: &Env, c: &AltClass) -> bool {
        let Some(shape) = self.eval(env) else { return false };
        if shape != *c.cycle_type() {
            return false;
        }
        match self.tag {
            TagPattern::Untagged | TagPattern::Both => true,
            TagPattern::Plus => c.tag() == SplitTag::Plus,
            TagPattern::Minus => c.tag() == SplitTag::Minus,
        }
    }
}

impl std::fmt::Display for ShapePattern {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.text)
    }
}

#[derive(Debug, Clone, Copy)]
enum CmpOp {
    Ge,
    Gt,
    Le,
    Lt,
    Eq,
    Ne,
}

#[derive(Debug, Clone)]
enum CondKind {
    Cmp(Var, CmpOp, Expr),
    Parity(Var, bool),
    MuParity(bool),
}

/// One atom of a condition list, keeping its source text for messages.
#[derive(Debug, Clone)]
pub(crate) struct Cond {
    kind: CondKind,
    text: String,
}

impl std::fmt::Display for Cond {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.text)
    }
}

impl Cond {
    fn parse(s: &str) -> Result<Self> {
        let text = s.trim().to_string();
        let words: Vec<&str> = text.split_whitespace().collect();
        if let [subject, parity @ ("odd" | "even")] = words.as_slice() {
            let even = *parity == "even";
            let kind = if *subject == "mu" {
                CondKind::MuParity(even)
            } else {
                let var = Var::parse(subject)
                    .ok_or_else(|| Error::parse(format!("unknown variable in `{text}`")))?;
                CondKind::Parity(var, even)
            };
            return Ok(Cond { kind, text });
        }
        for (sym, op) in [
            (">=", CmpOp::Ge),
            ("<=", CmpOp::Le),
            ("!=", CmpOp::Ne),
            (">", CmpOp::Gt),
            ("<", CmpOp::Lt),
            ("=", CmpOp::Eq),
        ] {
            if let Some((lhs, rhs)) = text.split_once(sym) {
                let var = Var::parse(lhs.trim())
                    .ok_or_else(|| Error::parse(format!("unknown variable in `{text}`")))?;
                let kind = CondKind::Cmp(var, op, ExprParser::parse(rhs)?);
                return Ok(Cond { kind, text });
            }
        }
        Err(Error::parse(format!("cannot read condition `{text}`")))
    }

    pub(crate) fn holds(&self, env: &Env) -> bool {
        match &self.kind {
            CondKind::Cmp(var, op, rhs) => {
                let (a, b) = (var.get(env), rhs.eval(env));
                match op {
                    CmpOp::Ge => a >= b,
                    CmpOp::Gt => a > b,
                    CmpOp::Le => a <= b,
                    CmpOp::Lt => a < b,
                    CmpOp::Eq => a == b,
                    CmpOp::Ne => a != b,
                }
            }
            CondKind::Parity(var, even) => (var.get(env) % 2 == 0) == *even,
            CondKind::MuParity(even) => env.mu_even == *even,
        }
    }
}

fn parse_conds(s: &str) -> Result<Vec<Cond>> {
    s.split(',').filter(|c| !c.trim().is_empty()).map(Cond::parse).collect()
}

#[derive(Debug, Clone)]
pub(crate) enum RootToken {
    One,
    MinusOne,
    SgnNMinus1,
    SgnNLen,
    Prim(u64),
    Exp(i64, u64),
}

impl RootToken {
    fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let inside = |prefix: &str| s.strip_prefix(prefix).and_then(|r| r.strip_suffix(')'));
        Ok(match s {
            "1" => RootToken::One,
            "-1" => RootToken::MinusOne,
            "sgn(n-1)" => RootToken::SgnNMinus1,
            "sgn(n-len)" => RootToken::SgnNLen,
            _ => {
                if let Some(d) = inside("prim(") {
                    RootToken::Prim(d.trim().parse().map_err(|_| Error::parse(format!("bad root `{s}`")))?)
                } else if let Some(frac) = inside("e(") {
                    let (a, b) = frac
                        .split_once('/')
                        .ok_or_else(|| Error::parse(format!("bad root `{s}`")))?;
                    let a = a.trim().parse().map_err(|_| Error::parse(format!("bad root `{s}`")))?;
                    let b = b.trim().parse().map_err(|_| Error::parse(format!("bad root `{s}`")))?;
                    RootToken::Exp(a, b)
                } else {
                    return Err(Error::parse(format!("unknown root token `{s}`")));
                }
            }
        })
    }

    fn residues(&self, env: &Env, m: u64, out: &mut BTreeSet<usize>) -> std::result::Result<(), String> {
        let sign = |e: i64| if e.rem_euclid(2) == 0 { RootToken::One } else { RootToken::MinusOne };
        match self {
            RootToken::One => {
                out.insert(0);
            }
            RootToken::MinusOne => {
                if !m.is_multiple_of(2) {
                    return Err(format!("-1 is not an eigenvalue candidate for order {m}"));
                }
                out.insert((m / 2) as usize);
            }
            RootToken::SgnNMinus1 => sign(env.n - 1).residues(env, m, out)?,
            RootToken::SgnNLen => sign(env.n - env.len).residues(env, m, out)?,
            RootToken::Prim(d) => {
                if *d == 0 || !m.is_multiple_of(*d) {
                    return Err(format!("primitive {d}th roots do not occur for order {m}"));
                }
                let step = m / d;
                for k in 0..*d {
                    if k.gcd(d) == 1 {
                        out.insert((k * step) as usize);
                    }
                }
            }
            RootToken::Exp(a, b) => {
                if *b == 0 || !m.is_multiple_of(*b) {
                    return Err(format!("e({a}/{b}) is not an {m}th root of unity"));
                }
                let r = (a.rem_euclid(*b as i64) as u64) * (m / b);
                out.insert(r as usize);
            }
        }
        Ok(())
    }
}

/// The eigenvalue claim of one theorem case.
#[derive(Debug, Clone)]
pub(crate) enum RootPattern {
    Present(Vec<RootToken>),
    Missing(Vec<RootToken>),
    Predicate,
}

impl RootPattern {
    fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-" {
            return Ok(RootPattern::Predicate);
        }
        let (key, rest) = s
            .split_once('=')
            .ok_or_else(|| Error::parse(format!("bad root pattern `{s}`")))?;
        let list = rest
            .trim()
            .strip_prefix('{')
            .and_then(|r| r.strip_suffix('}'))
            .ok_or_else(|| Error::parse(format!("bad root list `{rest}`")))?;
        let tokens = split_top(list, ',')
            .into_iter()
            .filter(|t| !t.trim().is_empty())
            .map(RootToken::parse)
            .collect::<Result<Vec<_>>>()?;
        match key.trim() {
            "present" => Ok(RootPattern::Present(tokens)),
            "missing" => Ok(RootPattern::Missing(tokens)),
            other => Err(Error::parse(format!("unknown root key `{other}`"))),
        }
    }

    /// Missing residues mod `m`, or `None` for a predicate-only case.
    pub(crate) fn missing(&self, env: &Env, m: usize) -> std::result::Result<Option<BTreeSet<usize>>, String> {
        let collect = |tokens: &[RootToken]| -> std::result::Result<BTreeSet<usize>, String> {
            let mut set = BTreeSet::new();
            for t in tokens {
                t.residues(env, m as u64, &mut set)?;
            }
            Ok(set)
        };
        match self {
            RootPattern::Predicate => Ok(None),
            RootPattern::Missing(tokens) => collect(tokens).map(Some),
            RootPattern::Present(tokens) => {
                let present = collect(tokens)?;
                Ok(Some((0..m).filter(|r| !present.contains(r)).collect()))
            }
        }
    }
}

#[derive(Debug, Clone)]
pub(crate) enum ClassPattern {
    Any,
    NoClass,
    Is(ShapePattern),
    Not(ShapePattern),
}

impl ClassPattern {
    fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        Ok(match s {
            "*" => ClassPattern::Any,
            "-" => ClassPattern::NoClass,
            _ => match s.strip_prefix('!') {
                Some(rest) => ClassPattern::Not(ShapePattern::parse(rest)?),
                None => ClassPattern::Is(ShapePattern::parse(s)?),
            },
        })
    }

    pub(crate) fn matches_partition(&self, env: &Env, mu: Option<&Partition>) -> bool {
        match (self, mu) {
            (ClassPattern::NoClass, None) | (ClassPattern::Any, Some(_)) => true,
            (ClassPattern::Is(p), Some(mu)) => p.matches_partition(env, mu),
            (ClassPattern::Not(p), Some(mu)) => !p.matches_partition(env, mu),
            _ => false,
        }
    }

    pub(crate) fn matches_class(&self, env: &Env, c: &AltClass) -> bool {
        match self {
            ClassPattern::Any => true,
            ClassPattern::NoClass => false,
            ClassPattern::Is(p) => p.matches_class(env, c),
            ClassPattern::Not(p) => !p.matches_class(env, c),
        }
    }
}

/// One numbered case of a theorem's exception list.
#[derive(Debug, Clone)]
pub(crate) struct TheoremCase {
    pub label: String,
    pub rep: ShapePattern,
    pub class: ClassPattern,
    pub conds: Vec<Cond>,
    pub roots: RootPattern,
}

impl TheoremCase {
    pub(crate) fn conditions_hold(&self, env: &Env) -> bool {
        self.conds.iter().all(|c| c.holds(env))
    }
}

#[derive(Debug, Clone)]
pub(crate) struct LemmaLine {
    pub required: bool,
    pub shapes: Vec<ShapePattern>,
    pub conds: Vec<Cond>,
}

#[derive(Debug, Clone, Default)]
pub(crate) struct LemmaSpec {
    pub hypotheses: Vec<Cond>,
    pub lines: Vec<LemmaLine>,
}

impl LemmaSpec {
    /// First violated hypothesis, if any.
    pub(crate) fn violated(&self, env: &Env) -> Option<&Cond> {
        self.hypotheses.iter().find(|c| !c.holds(env))
    }

    /// Required and optional exception sets at the given parameters.
    pub(crate) fn exceptions(&self, env: &Env) -> (BTreeSet<Partition>, BTreeSet<Partition>) {
        let mut required = BTreeSet::new();
        let mut optional = BTreeSet::new();
        for line in &self.lines {
            if !line.conds.iter().all(|c| c.holds(env)) {
                continue;
            }
            let target = if line.required { &mut required } else { &mut optional };
            target.extend(line.shapes.iter().filter_map(|s| s.eval(env)));
        }
        let optional = optional.difference(&required).cloned().collect();
        (required, optional)
    }
}

#[derive(Debug, Default)]
pub(crate) struct Fixtures {
    pub theorems: BTreeMap<String, Vec<TheoremCase>>,
    pub lemmas: BTreeMap<String, LemmaSpec>,
}

impl Fixtures {
    pub(crate) fn theorem(&self, name: &str) -> &[TheoremCase] {
        self.theorems.get(name).map_or(&[], Vec::as_slice)
    }

    pub(crate) fn lemma(&self, name: &str) -> Option<&LemmaSpec> {
        self.lemmas.get(name)
    }
}

fn parse_lemma_line(rest: &str, required: bool) -> Result<LemmaLine> {
    let (shapes, conds) = match rest.split_once(" if ") {
        Some((s, c)) => (s, parse_conds(c)?),
        None => (rest, Vec::new()),
    };
    let shapes = shapes
        .split(';')
        .filter(|s| !s.trim().is_empty())
        .map(ShapePattern::parse)
        .collect::<Result<Vec<_>>>()?;
    Ok(LemmaLine { required, shapes, conds })
}

fn parse_fixtures(text: &str) -> Result<Fixtures> {
    let mut out = Fixtures::default();
    let mut section: Option<String> = None;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let located = |e: Error| Error::parse(format!("line {}: {e}", lineno + 1));
        if let Some(name) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
            let name = name.trim().to_string();
            if let Some(lemma) = name.strip_prefix("lemma:") {
                out.lemmas.insert(lemma.to_string(), LemmaSpec::default());
            } else {
                out.theorems.insert(name.clone(), Vec::new());
            }
            section = Some(name);
            continue;
        }
        let Some(name) = section.as_deref() else {
            return Err(Error::parse(format!("line {}: entry outside a section", lineno + 1)));
        };
        if let Some(lemma) = name.strip_prefix("lemma:") {
            let spec = out.lemmas.get_mut(lemma).expect("section registered");
            let (key, rest) = line
                .split_once(':')
                .ok_or_else(|| Error::parse(format!("line {}: expected `key: value`", lineno + 1)))?;
            match key.trim() {
                "hypothesis" => spec.hypotheses.extend(parse_conds(rest).map_err(located)?),
                "required" => spec.lines.push(parse_lemma_line(rest, true).map_err(located)?),
                "optional" => spec.lines.push(parse_lemma_line(rest, false).map_err(located)?),
                other => return Err(Error::parse(format!("line {}: unknown key `{other}`", lineno + 1))),
            }
            continue;
        }
        let fields: Vec<&str> = line.split('|').collect();
        let [label, rep, class, conds, roots] = fields.as_slice() else {
            return Err(Error::parse(format!("line {}: expected 5 fields", lineno + 1)));
        };
        let case = TheoremCase {
            label: label.trim().to_string(),
            rep: ShapePattern::parse(rep).map_err(located)?,
            class: ClassPattern::parse(class).map_err(located)?,
            conds: parse_conds(conds).map_err(located)?,
            roots: RootPattern::parse(roots).map_err(located)?,
        };
        out.theorems.get_mut(name).expect("section registered").push(case);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn env(n: i64) -> Env {
        Env { n, ..Env::default() }
    }

    #[test]
    fn data_file_parses() {
        let f = fixtures();
        assert_eq!(f.theorem("main").len(), 9);
        assert_eq!(f.theorem("main_min").len(), 7);
        assert_eq!(f.theorem("sundaram").len(), 3);
        assert!(f.lemma("base_1").is_some());
        assert!(f.theorem("nonsense").is_empty());
    }

    #[test]
    fn shape_patterns() {
        let pat = ShapePattern::parse("(2,1^(n-2))").unwrap();
        assert_eq!(pat.eval(&env(5)), Some("2,1,1,1".parse().unwrap()));
        assert_eq!(pat.eval(&env(2)), Some("2".parse().unwrap()));
        assert_eq!(pat.eval(&env(1)), None);
        let pat = ShapePattern::parse("(n-2,2)").unwrap();
        assert_eq!(pat.eval(&env(4)), Some("2,2".parse().unwrap()));
        assert_eq!(pat.eval(&env(3)), None);
        let pat = ShapePattern::parse("(2p-1,1)").unwrap();
        let e = Env { p: 7, ..Env::default() };
        assert_eq!(pat.eval(&e), Some("13,1".parse().unwrap()));
        let pat = ShapePattern::parse("(1^(2p))").unwrap();
        assert_eq!(pat.eval(&e), Some(Partition::column(14)));
        let tagged = ShapePattern::parse("(3,1,1)-").unwrap();
        assert_eq!(tagged.tag, TagPattern::Minus);
        assert_eq!(ShapePattern::parse("(2,2)±").unwrap().tag, TagPattern::Both);
        assert_eq!(ShapePattern::parse("(5)+").unwrap().tag, TagPattern::Plus);
        assert!(ShapePattern::parse("2,2").is_err());
    }

    #[test]
    fn conditions() {
        let conds = parse_conds("n>=5, n odd").unwrap();
        assert!(conds.iter().all(|c| c.holds(&env(7))));
        assert!(!conds.iter().all(|c| c.holds(&env(6))));
        assert!(!conds.iter().all(|c| c.holds(&env(3))));
        let c = Cond::parse("mu even").unwrap();
        assert!(c.holds(&Env { mu_even: true, ..Env::default() }));
        assert!(Cond::parse("x > 1").is_err());
    }

    #[test]
    fn root_tokens() {
        let r = RootPattern::parse("missing={prim(6)}").unwrap();
        assert_eq!(r.missing(&env(6), 6).unwrap(), Some([1, 5].into_iter().collect()));
        let r = RootPattern::parse("present={sgn(n-len)}").unwrap();
        let e = Env { n: 4, len: 1, ..Env::default() };
        assert_eq!(r.missing(&e, 4).unwrap(), Some([0, 1, 3].into_iter().collect()));
        let r = RootPattern::parse("missing={e(2/5),e(3/5)}").unwrap();
        assert_eq!(r.missing(&env(5), 5).unwrap(), Some([2, 3].into_iter().collect()));
        assert!(RootPattern::parse("missing={-1}").unwrap().missing(&env(3), 3).is_err());
        assert!(matches!(RootPattern::parse("-").unwrap(), RootPattern::Predicate));
    }

    #[test]
    fn lemma_exceptions() {
        let spec = fixtures().lemma("yang_staroletov_cor").unwrap();
        let e = Env { p: 3, q: 3, n: 6, ..Env::default() };
        let (req, opt) = spec.exceptions(&e);
        assert!(req.contains(&"3,3".parse().unwrap()));
        assert!(opt.contains(&Partition::row(6)));
        let e = Env { p: 4, q: 2, n: 6, ..Env::default() };
        assert!(spec.exceptions(&e).0.is_empty());
        let base = fixtures().lemma("base_1").unwrap();
        assert!(base.violated(&Env { p: 5, ..Env::default() }).is_some());
        assert!(base.violated(&Env { p: 7, ..Env::default() }).is_none());
    }
}
