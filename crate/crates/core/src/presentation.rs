//! Relation catalogs and a soundness checker: every admissible instance of
//! every relation must evaluate to equal elements.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::sync::OnceLock;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::word::{eval, Context, Value, Word};

const CATALOG: &str = include_str!("../data/presentations.toml");

#[derive(Deserialize)]
struct CatalogFile {
    presentation: Vec<RawPresentation>,
}

#[derive(Deserialize)]
struct RawPresentation {
    name: String,
    title: String,
    context: String,
    n: [usize; 2],
    #[serde(default)]
    include: Vec<String>,
    #[serde(default)]
    relations: Vec<RawRelation>,
}

#[derive(Deserialize)]
struct RawRelation {
    rel: String,
    #[serde(default)]
    vars: String,
    when: Option<String>,
}

// ---------------------------------------------------------------------------
// index expressions

#[derive(Clone, Debug, PartialEq)]
enum Lex {
    Int(i64),
    Ident(String),
    Op(&'static str),
}

fn lex(text: &str) -> Result<Vec<Lex>> {
    const OPS: [&str; 13] = [
        "==", "!=", "<=", ">=", "<", ">", "+", "-", "*", "(", ")", ",", "!",
    ];
    let b = text.as_bytes();
    let mut out = Vec::new();
    let mut k = 0;
    while k < b.len() {
        let c = b[k] as char;
        if c.is_whitespace() {
            k += 1;
        } else if c.is_ascii_digit() {
            let s = k;
            while k < b.len() && b[k].is_ascii_digit() {
                k += 1;
            }
            out.push(Lex::Int(text[s..k].parse().map_err(|_| parse_err(text))?));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let s = k;
            while k < b.len() && (b[k].is_ascii_alphanumeric() || b[k] == b'_') {
                k += 1;
            }
            out.push(Lex::Ident(text[s..k].to_string()));
        } else if let Some(op) = OPS.iter().find(|op| text[k..].starts_with(**op)) {
            out.push(Lex::Op(op));
            k += op.len();
        } else {
            return Err(parse_err(text));
        }
    }
    Ok(out)
}

fn parse_err(text: &str) -> Error {
    Error::Parse(format!("bad index expression `{text}`"))
}

/// An integer expression; booleans are 0 and 1.
#[derive(Clone, Debug)]
enum Expr {
    Int(i64),
    Var(String),
    Neg(Box<Expr>),
    Not(Box<Expr>),
    Bin(&'static str, Box<Expr>, Box<Expr>),
    Call(String, Vec<Expr>),
}

struct ExprParser<'a> {
    toks: Vec<Lex>,
    pos: usize,
    text: &'a str,
}

impl ExprParser<'_> {
    fn parse(text: &str) -> Result<Expr> {
        let mut p = ExprParser {
            toks: lex(text)?,
            pos: 0,
            text,
        };
        let e = p.or()?;
        if p.pos != p.toks.len() {
            return Err(parse_err(text));
        }
        Ok(e)
    }

    fn peek(&self) -> Option<&Lex> {
        self.toks.get(self.pos)
    }

    fn eat_op(&mut self, op: &str) -> bool {
        if matches!(self.peek(), Some(Lex::Op(o)) if *o == op) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn eat_word(&mut self, w: &str) -> bool {
        if matches!(self.peek(), Some(Lex::Ident(s)) if s == w) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn or(&mut self) -> Result<Expr> {
        let mut e = self.and()?;
        while self.eat_word("or") {
            e = Expr::Bin("or", Box::new(e), Box::new(self.and()?));
        }
        Ok(e)
    }

    fn and(&mut self) -> Result<Expr> {
        let mut e = self.not()?;
        while self.eat_word("and") {
            e = Expr::Bin("and", Box::new(e), Box::new(self.not()?));
        }
        Ok(e)
    }

    fn not(&mut self) -> Result<Expr> {
        if self.eat_word("not") || self.eat_op("!") {
            return Ok(Expr::Not(Box::new(self.not()?)));
        }
        self.cmp()
    }

    fn cmp(&mut self) -> Result<Expr> {
        let e = self.sum()?;
        for op in ["==", "!=", "<=", ">=", "<", ">"] {
            if self.eat_op(op) {
                return Ok(Expr::Bin(op, Box::new(e), Box::new(self.sum()?)));
            }
        }
        Ok(e)
    }

    fn sum(&mut self) -> Result<Expr> {
        let mut e = self.prod()?;
        loop {
            if self.eat_op("+") {
                e = Expr::Bin("+", Box::new(e), Box::new(self.prod()?));
            } else if self.eat_op("-") {
                e = Expr::Bin("-", Box::new(e), Box::new(self.prod()?));
            } else {
                return Ok(e);
            }
        }
    }

    fn prod(&mut self) -> Result<Expr> {
        let mut e = self.unary()?;
        while self.eat_op("*") {
            e = Expr::Bin("*", Box::new(e), Box::new(self.unary()?));
        }
        Ok(e)
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat_op("-") {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        match self.toks.get(self.pos).cloned() {
            Some(Lex::Int(v)) => {
                self.pos += 1;
                Ok(Expr::Int(v))
            }
            Some(Lex::Ident(name)) => {
                self.pos += 1;
                if !self.eat_op("(") {
                    return Ok(Expr::Var(name));
                }
                let mut args = Vec::new();
                if !self.eat_op(")") {
                    loop {
                        args.push(self.or()?);
                        if self.eat_op(")") {
                            break;
                        }
                        if !self.eat_op(",") {
                            return Err(parse_err(self.text));
                        }
                    }
                }
                Ok(Expr::Call(name, args))
            }
            Some(Lex::Op("(")) => {
                self.pos += 1;
                let e = self.or()?;
                if !self.eat_op(")") {
                    return Err(parse_err(self.text));
                }
                Ok(e)
            }
            _ => Err(parse_err(self.text)),
        }
    }
}

type Env = BTreeMap<String, i64>;

impl Expr {
    fn eval(&self, env: &Env) -> Result<i64> {
        Ok(match self {
            Expr::Int(v) => *v,
            Expr::Var(v) => *env
                .get(v)
                .ok_or_else(|| Error::Parse(format!("unbound variable `{v}`")))?,
            Expr::Neg(e) => -e.eval(env)?,
            Expr::Not(e) => (e.eval(env)? == 0) as i64,
            Expr::Bin(op, a, b) => {
                let (x, y) = (a.eval(env)?, b.eval(env)?);
                match *op {
                    "+" => x + y,
                    "-" => x - y,
                    "*" => x * y,
                    "==" => (x == y) as i64,
                    "!=" => (x != y) as i64,
                    "<" => (x < y) as i64,
                    "<=" => (x <= y) as i64,
                    ">" => (x > y) as i64,
                    ">=" => (x >= y) as i64,
                    "and" => (x != 0 && y != 0) as i64,
                    "or" => (x != 0 || y != 0) as i64,
                    _ => unreachable!("operator table"),
                }
            }
            Expr::Call(f, args) => {
                let v = args
                    .iter()
                    .map(|a| a.eval(env))
                    .collect::<Result<Vec<_>>>()?;
                let arity = |k: usize| -> Result<()> {
                    if v.len() == k {
                        Ok(())
                    } else {
                        Err(Error::Parse(format!("`{f}` takes {k} arguments")))
                    }
                };
                match f.as_str() {
                    "abs" => {
                        arity(1)?;
                        v[0].abs()
                    }
                    "min" | "max" if v.is_empty() => {
                        return Err(Error::Parse(format!("`{f}` needs arguments")))
                    }
                    "min" => *v.iter().min().unwrap(),
                    "max" => *v.iter().max().unwrap(),
                    "t" => {
                        arity(3)?;
                        match v[2] {
                            k if k == v[0] => v[1],
                            k if k == v[1] => v[0],
                            k => k,
                        }
                    }
                    "distinct" => {
                        let set: HashSet<i64> = v.iter().copied().collect();
                        (set.len() == v.len()) as i64
                    }
                    _ => return Err(Error::Parse(format!("unknown function `{f}`"))),
                }
            }
        })
    }
}

// ---------------------------------------------------------------------------
// word templates

#[derive(Clone, Debug)]
enum Piece {
    Lit(String),
    Hole(Expr),
}

#[derive(Clone, Debug)]
struct Template(Vec<Piece>);

impl Template {
    fn parse(text: &str) -> Result<Template> {
        let mut pieces = Vec::new();
        let mut rest = text;
        while let Some(open) = rest.find('{') {
            let close = rest[open..]
                .find('}')
                .map(|c| open + c)
                .ok_or_else(|| Error::Parse(format!("unclosed `{{` in `{text}`")))?;
            pieces.push(Piece::Lit(rest[..open].to_string()));
            pieces.push(Piece::Hole(ExprParser::parse(&rest[open + 1..close])?));
            rest = &rest[close + 1..];
        }
        pieces.push(Piece::Lit(rest.to_string()));
        Ok(Template(pieces))
    }

    /// `None` when an index comes out non-positive.
    fn instantiate(&self, env: &Env) -> Result<Option<Word>> {
        let mut s = String::new();
        for p in &self.0 {
            match p {
                Piece::Lit(l) => s.push_str(l),
                Piece::Hole(e) => {
                    let v = e.eval(env)?;
                    if v <= 0 {
                        return Ok(None);
                    }
                    s.push_str(&v.to_string());
                }
            }
        }
        if s.trim() == "1" {
            return Ok(Some(Word::new()));
        }
        s.parse().map(Some)
    }
}

/// One relation `w1 = w2 = ...`, quantified over `vars`.
#[derive(Clone, Debug)]
pub struct Relation {
    pub text: String,
    pub vars: Vec<String>,
    when_text: Option<String>,
    when: Option<Expr>,
    sides: Vec<Template>,
}

impl Relation {
    pub fn parse(rel: &str, vars: &str, when: Option<&str>) -> Result<Relation> {
        let sides = rel
            .split('=')
            .map(Template::parse)
            .collect::<Result<Vec<_>>>()?;
        if sides.len() < 2 {
            return Err(Error::Parse(format!("relation `{rel}` has no `=`")));
        }
        Ok(Relation {
            text: rel.to_string(),
            vars: vars.split_whitespace().map(str::to_string).collect(),
            when_text: when.map(str::to_string),
            when: when.map(ExprParser::parse).transpose()?,
            sides,
        })
    }

    fn assignments(&self, n: usize) -> Vec<Env> {
        let mut out = vec![Env::from([("n".to_string(), n as i64)])];
        for v in &self.vars {
            out = out
                .into_iter()
                .flat_map(|env| {
                    (1..=n as i64).map(move |k| {
                        let mut e = env.clone();
                        e.insert(v.clone(), k);
                        e
                    })
                })
                .collect();
        }
        out
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.text)?;
        if let Some(w) = &self.when_text {
            write!(f, "  [{w}]")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct Presentation {
    pub name: String,
    pub title: String,
    pub context: Context,
    pub n_min: usize,
    pub n_max: usize,
    pub include: Vec<String>,
    pub relations: Vec<Relation>,
}

fn load() -> Result<Vec<Presentation>> {
    let file: CatalogFile =
        toml::from_str(CATALOG).map_err(|e| Error::Parse(format!("presentation catalog: {e}")))?;
    file.presentation
        .into_iter()
        .map(|p| {
            Ok(Presentation {
                context: Context::parse(&p.context)?,
                name: p.name,
                title: p.title,
                n_min: p.n[0],
                n_max: p.n[1],
                include: p.include,
                relations: p
                    .relations
                    .iter()
                    .map(|r| Relation::parse(&r.rel, &r.vars, r.when.as_deref()))
                    .collect::<Result<_>>()?,
            })
        })
        .collect()
}

/// The built-in presentations.
pub fn catalog() -> &'static [Presentation] {
    static CAT: OnceLock<Vec<Presentation>> = OnceLock::new();
    CAT.get_or_init(|| load().expect("built-in presentation catalog parses"))
}

pub fn presentation(name: &str) -> Result<&'static Presentation> {
    catalog()
        .iter()
        .find(|p| p.name.eq_ignore_ascii_case(name))
        .ok_or_else(|| Error::UnknownPresentation(name.to_string()))
}

impl Presentation {
    /// Own relations followed by those of every included presentation, each
    /// once.
    pub fn all_relations(&self) -> Result<Vec<&Relation>> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        let mut stack = vec![self];
        while let Some(p) = stack.pop() {
            if !seen.insert(p.name.clone()) {
                continue;
            }
            out.extend(p.relations.iter());
            for inc in p.include.iter().rev() {
                stack.push(presentation(inc)?);
            }
        }
        Ok(out)
    }
}

#[derive(Clone, Debug)]
pub struct SoundnessReport {
    pub name: String,
    pub n: usize,
    pub relations: usize,
    pub instances: usize,
    pub skipped: usize,
    /// Relations without a single admissible instance at this `n`.
    pub unexercised: Vec<String>,
    pub failures: Vec<String>,
}

impl SoundnessReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for SoundnessReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} n={}: {} relations, {} instances checked, {} skipped, {} failures",
            self.name,
            self.n,
            self.relations,
            self.instances,
            self.skipped,
            self.failures.len()
        )?;
        for line in self.failures.iter().take(5) {
            write!(f, "\n  {line}")?;
        }
        Ok(())
    }
}

fn show_env(env: &Env) -> String {
    env.iter()
        .filter(|(k, _)| k.as_str() != "n")
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Checks `relations` in `ctx` at `n`.
pub fn verify_relations(
    name: &str,
    relations: &[&Relation],
    ctx: Context,
    n: usize,
) -> Result<SoundnessReport> {
    let mut report = SoundnessReport {
        name: name.to_string(),
        n,
        relations: relations.len(),
        instances: 0,
        skipped: 0,
        unexercised: Vec::new(),
        failures: Vec::new(),
    };
    for rel in relations {
        let mut checked = 0;
        'assign: for env in rel.assignments(n) {
            if let Some(w) = &rel.when {
                if w.eval(&env)? == 0 {
                    continue;
                }
            }
            let mut values: Vec<(Word, Value)> = Vec::with_capacity(rel.sides.len());
            for side in &rel.sides {
                let Some(word) = side.instantiate(&env)? else {
                    report.skipped += 1;
                    continue 'assign;
                };
                match eval(&word, n, ctx) {
                    Ok(v) => values.push((word, v)),
                    Err(Error::Index(_)) => {
                        report.skipped += 1;
                        continue 'assign;
                    }
                    Err(e) => return Err(e),
                }
            }
            checked += 1;
            let (w0, v0) = &values[0];
            for (w, v) in &values[1..] {
                if v != v0 {
                    report.failures.push(format!(
                        "{rel} at {}: `{w0}` = {v0} but `{w}` = {v}",
                        show_env(&env)
                    ));
                }
            }
        }
        if checked == 0 {
            report.unexercised.push(rel.to_string());
        }
        report.instances += checked;
    }
    Ok(report)
}

/// Checks every relation of the named presentation, includes too.
pub fn verify_soundness(name: &str, n: usize) -> Result<SoundnessReport> {
    let p = presentation(name)?;
    let rels = p.all_relations()?;
    verify_relations(&p.name, &rels, p.context, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn env(pairs: &[(&str, i64)]) -> Env {
        pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
    }

    #[test]
    fn expressions() {
        let e = |s: &str, pairs: &[(&str, i64)]| {
            ExprParser::parse(s).unwrap().eval(&env(pairs)).unwrap()
        };
        assert_eq!(e("abs(i - j) > 1", &[("i", 1), ("j", 4)]), 1);
        assert_eq!(e("t(2, 5, 5) + t(2, 5, 3) * 10", &[]), 32);
        assert_eq!(e("min(3, i, 7) == 2 and not (i == 3)", &[("i", 2)]), 1);
        assert_eq!(e("-(1 + 2) * 2", &[]), -6);
        assert_eq!(e("distinct(1, 2, 1) or 0", &[]), 0);
        assert!(ExprParser::parse("i +").is_err());
        assert!(ExprParser::parse("foo(1)")
            .unwrap()
            .eval(&Env::new())
            .is_err());
    }

    #[test]
    fn templates() {
        let t = Template::parse("e{i},{j+1} s{i-1}").unwrap();
        assert_eq!(
            t.instantiate(&env(&[("i", 2), ("j", 3)]))
                .unwrap()
                .unwrap()
                .to_string(),
            "e2,4 s1"
        );
        assert!(t
            .instantiate(&env(&[("i", 1), ("j", 3)]))
            .unwrap()
            .is_none());
        assert!(Template::parse("1")
            .unwrap()
            .instantiate(&Env::new())
            .unwrap()
            .unwrap()
            .is_empty());
    }

    #[test]
    fn catalog_loads_and_includes_resolve() {
        assert!(catalog().len() > 20);
        for p in catalog() {
            p.all_relations().unwrap();
            assert!(p.n_min <= p.n_max, "{}", p.name);
        }
        assert!(presentation("nope").is_err());
    }

    #[test]
    fn every_catalog_relation_holds() {
        for p in catalog() {
            for n in p.n_min..=p.n_max {
                let report = verify_soundness(&p.name, n).unwrap();
                assert!(report.passed(), "{report}");
                if n == p.n_max {
                    assert!(
                        report.unexercised.is_empty(),
                        "{}: {:?}",
                        p.name,
                        report.unexercised
                    );
                }
            }
        }
    }

    #[test]
    fn corrupted_braid_relation_fails() {
        let bad = Relation::parse("t{i} t{j} t{i} = t{j}", "i j", Some("abs(i-j) == 1")).unwrap();
        let report = verify_relations("bad", &[&bad], Context::Diagram, 3).unwrap();
        assert!(!report.passed());
        assert!(report.failures[0].contains("i=1 j=2"), "{report}");
    }
}
