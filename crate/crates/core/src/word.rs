//! Generator words, their grammar, macro expansion and evaluation.
//!
//! Tokens: `s3 r2 q4 e1 t5 h2 f1 p3` and the two-index forms `w1,4`
//! (transposition), `e1,4` (tie), `x2,4`, `xb4,1`, `eb1,3`, `H3,6`. Tokens may
//! be written back to back (`t6t5t4`) and `·`, `.` or `*` act as spacing.

use std::fmt;
use std::str::FromStr;

use crate::diagram::{gen, Diagram, Kind};
use crate::error::{Error, Result};
use crate::partition::SetPartition;
use crate::ramified::{rgen, RamifiedPartition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sym {
    S,
    R,
    Q,
    E,
    T,
    H,
    F,
    P,
    W,
    X,
    Xb,
    Eb,
    Run,
}

impl Sym {
    pub fn name(self) -> &'static str {
        match self {
            Sym::S => "s",
            Sym::R => "r",
            Sym::Q => "q",
            Sym::E => "e",
            Sym::T => "t",
            Sym::H => "h",
            Sym::F => "f",
            Sym::P => "p",
            Sym::W => "w",
            Sym::X => "x",
            Sym::Xb => "xb",
            Sym::Eb => "eb",
            Sym::Run => "H",
        }
    }

    fn from_name(name: &str) -> Option<Sym> {
        Some(match name {
            "s" => Sym::S,
            "r" => Sym::R,
            "q" => Sym::Q,
            "e" => Sym::E,
            "t" => Sym::T,
            "h" => Sym::H,
            "f" => Sym::F,
            "p" => Sym::P,
            "w" => Sym::W,
            "x" => Sym::X,
            "xb" => Sym::Xb,
            "eb" => Sym::Eb,
            "H" => Sym::Run,
            _ => return None,
        })
    }

    fn arities(self) -> &'static [usize] {
        match self {
            Sym::E => &[1, 2],
            Sym::W | Sym::X | Sym::Xb | Sym::Eb | Sym::Run => &[2],
            _ => &[1],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Token {
    pub sym: Sym,
    pub idx: Vec<usize>,
}

impl Token {
    pub fn new(sym: Sym, idx: &[usize]) -> Result<Token> {
        if !sym.arities().contains(&idx.len()) {
            return Err(Error::Arity {
                token: sym.name().to_string(),
                expected: sym.arities()[0],
                got: idx.len(),
            });
        }
        Ok(Token {
            sym,
            idx: idx.to_vec(),
        })
    }

    pub fn one(sym: Sym, i: usize) -> Token {
        Token { sym, idx: vec![i] }
    }

    pub fn two(sym: Sym, i: usize, j: usize) -> Token {
        Token {
            sym,
            idx: vec![i, j],
        }
    }

    pub fn i(&self) -> usize {
        self.idx[0]
    }

    pub fn j(&self) -> usize {
        self.idx[1]
    }
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.sym.name())?;
        for (k, i) in self.idx.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<Token>);

impl Word {
    pub fn new() -> Self {
        Word(Vec::new())
    }

    pub fn tokens(&self) -> &[Token] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, t: Token) {
        self.0.push(t);
    }

    pub fn extend(&mut self, other: &Word) {
        self.0.extend(other.0.iter().cloned());
    }

    pub fn concat(words: &[Word]) -> Word {
        Word(words.iter().flat_map(|w| w.0.iter().cloned()).collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, t) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

fn is_spacing(c: char) -> bool {
    c.is_whitespace() || matches!(c, '·' | '.' | '*' | '⋅')
}

pub fn parse_word(text: &str) -> Result<Word> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut k = 0;
    while k < chars.len() {
        if is_spacing(chars[k]) {
            k += 1;
            continue;
        }
        let start = k;
        while k < chars.len() && chars[k].is_ascii_alphabetic() {
            k += 1;
        }
        let name: String = chars[start..k].iter().collect();
        let idx_start = k;
        while k < chars.len() && (chars[k].is_ascii_digit() || chars[k] == ',') {
            k += 1;
        }
        let digits: String = chars[idx_start..k].iter().collect();
        let token_text = format!("{name}{digits}");
        let sym = Sym::from_name(&name).ok_or_else(|| Error::UnknownToken(token_text.clone()))?;
        if digits.is_empty() {
            return Err(Error::Arity {
                token: token_text,
                expected: sym.arities()[0],
                got: 0,
            });
        }
        let idx = digits
            .split(',')
            .map(|d| {
                d.parse::<usize>()
                    .map_err(|_| Error::UnknownToken(token_text.clone()))
            })
            .collect::<Result<Vec<_>>>()?;
        out.push(Token::new(sym, &idx)?);
    }
    Ok(Word(out))
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_word(s)
    }
}

/// Named evaluation targets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Context {
    /// `P_n` under join; `e_{i,j}` (and `e_i = e_{i,i+1}`).
    Partition,
    /// Single diagrams: `s w r p t h H`.
    Diagram,
    /// Ramified elements: every token.
    Ramified,
    /// `r_i ↦ r_i`, `e_i ↦ h_i`, `q_i ↦ 1`, into the planar partition monoid.
    Phi,
}

impl Context {
    pub fn parse(name: &str) -> Result<Context> {
        Ok(match name.to_ascii_lowercase().as_str() {
            "partition" | "p" | "pn" => Context::Partition,
            "diagram" | "c" => Context::Diagram,
            "ramified" | "omega" | "mu" | "upsilon" | "eta" | "gamma" | "lambda" | "ttl"
            | "theta" => Context::Ramified,
            "phi" => Context::Phi,
            _ => return Err(Error::UnknownContext(name.to_string())),
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            Context::Partition => "partition",
            Context::Diagram => "diagram",
            Context::Ramified => "ramified",
            Context::Phi => "phi",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Value {
    Partition(SetPartition),
    Diagram(Diagram),
    Ramified(RamifiedPartition),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Partition(p) => write!(f, "m:{} {}", p.ground_size(), p),
            Value::Diagram(d) => write!(f, "{d}"),
            Value::Ramified(a) => write!(f, "{a}"),
        }
    }
}

impl Value {
    /// The product in whichever monoid both operands belong to.
    pub fn product(&self, other: &Value) -> Result<Value> {
        Ok(match (self, other) {
            (Value::Partition(a), Value::Partition(b)) => Value::Partition(a.join(b)?),
            (Value::Diagram(a), Value::Diagram(b)) => Value::Diagram(a.concat(b)?),
            (Value::Ramified(a), Value::Ramified(b)) => Value::Ramified(a.product(b)?),
            _ => return Err(Error::ShapeMismatch),
        })
    }
}

impl FromStr for Value {
    type Err = Error;

    /// Any of the three literal forms: `n=2 shape ... ties ...`,
    /// `n=2 {1,4}{2,3}`, or a set partition `m:3 {1,2}{3}`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim_start();
        if t.starts_with("n=") {
            if t.contains("shape") {
                Ok(Value::Ramified(t.parse()?))
            } else {
                Ok(Value::Diagram(t.parse()?))
            }
        } else {
            Ok(Value::Partition(t.parse()?))
        }
    }
}

fn index_error(t: &Token, n: usize) -> Error {
    Error::Index(format!("{t} at n = {n}"))
}

/// Rewrites macro letters (`w x xb eb H p` and two-index `e`) into the
/// primitive letters `s r q e t h f`.
pub fn expand_macros(w: &Word, n: usize) -> Result<Word> {
    let mut out = Word::new();
    for t in w.tokens() {
        expand_token(t, n, &mut out)?;
    }
    Ok(out)
}

fn expand_token(t: &Token, n: usize, out: &mut Word) -> Result<()> {
    let one = |s: Sym, i: usize| Token::one(s, i);
    match (t.sym, t.idx.len()) {
        (Sym::W, _) => {
            let (i, j) = (t.i(), t.j());
            if !(1 <= i && i < j && j <= n) {
                return Err(index_error(t, n));
            }
            for k in i..j {
                out.push(one(Sym::S, k));
            }
            for k in (i..j - 1).rev() {
                out.push(one(Sym::S, k));
            }
        }
        (Sym::E, 2) => {
            let (i, j) = (t.i(), t.j());
            if !(1 <= i && i < j && j <= n) {
                return Err(index_error(t, n));
            }
            for k in (i + 1..j).rev() {
                out.push(one(Sym::S, k));
            }
            out.push(one(Sym::E, i));
            for k in i + 1..j {
                out.push(one(Sym::S, k));
            }
        }
        (Sym::X, _) => {
            let (i, j) = (t.i(), t.j());
            if !(1 <= i && i < j && j <= n) {
                return Err(index_error(t, n));
            }
            out.push(one(Sym::Q, i));
            out.push(one(Sym::Q, j));
            expand_token(&Token::two(Sym::W, i, j), n, out)?;
        }
        (Sym::Xb, _) => {
            let (i, j) = (t.i(), t.j());
            if i == 0 || j == 0 || i > n || j > n {
                return Err(index_error(t, n));
            }
            let (lo, hi) = (i.min(j), i.max(j));
            if i == j {
                out.push(one(Sym::Q, i));
            } else if i < j {
                (lo..hi).for_each(|k| out.push(one(Sym::R, k)));
                (lo..hi).for_each(|k| out.push(one(Sym::E, k)));
                (lo + 1..=hi).for_each(|k| out.push(one(Sym::R, k)));
            } else {
                (lo + 1..=hi).for_each(|k| out.push(one(Sym::R, k)));
                (lo..hi).for_each(|k| out.push(one(Sym::E, k)));
                (lo..hi).for_each(|k| out.push(one(Sym::R, k)));
            }
        }
        (Sym::Eb, _) => {
            let (i, j) = (t.i(), t.j());
            if !(1 <= i && i < j && j <= n) {
                return Err(index_error(t, n));
            }
            (i + 1..j).for_each(|k| out.push(one(Sym::R, k)));
            (i..j).for_each(|k| out.push(one(Sym::E, k)));
            (i + 1..j).for_each(|k| out.push(one(Sym::R, k)));
        }
        (Sym::Run, _) => {
            let (i, j) = (t.i(), t.j());
            if !(1 <= i && i <= j && j < n) {
                return Err(index_error(t, n));
            }
            (i..=j).rev().for_each(|k| out.push(one(Sym::T, k)));
        }
        (Sym::P, _) => {
            if t.i() == 0 || t.i() > n {
                return Err(index_error(t, n));
            }
            (1..=t.i()).for_each(|k| out.push(one(Sym::R, k)));
        }
        _ => out.push(t.clone()),
    }
    Ok(())
}

fn uninterpreted(ctx: Context, t: &Token) -> Error {
    Error::Uninterpreted {
        context: ctx.name().to_string(),
        token: t.to_string(),
    }
}

/// Interprets one token as a diagram (single-diagram letters only).
pub fn diagram_letter(t: &Token, n: usize) -> Result<Diagram> {
    let d = match (t.sym, t.idx.len()) {
        (Sym::S, _) => gen::s(n, t.i()),
        (Sym::R, _) => gen::r(n, t.i()),
        (Sym::T, _) => gen::t(n, t.i()),
        (Sym::H, _) => gen::h(n, t.i()),
        (Sym::W, _) => gen::w(n, t.i(), t.j()),
        (Sym::P, _) | (Sym::Run, _) => {
            let w = expand_macros(&Word(vec![t.clone()]), n)?;
            return eval_diagram(&w, n);
        }
        _ => return Err(uninterpreted(Context::Diagram, t)),
    };
    d.map_err(|_| index_error(t, n))
}

/// Interprets one token as a ramified element.
pub fn ramified_letter(t: &Token, n: usize) -> Result<RamifiedPartition> {
    let a = match (t.sym, t.idx.len()) {
        (Sym::Q, _) => rgen::q(n, t.i()),
        (Sym::E, 1) => rgen::e(n, t.i()),
        (Sym::E, _) => rgen::tie(n, t.i(), t.j()),
        (Sym::X, _) => rgen::x(n, t.i(), t.j()),
        (Sym::F, _) => rgen::f(n, t.i()),
        (Sym::Xb, _) => rgen::xb(n, t.i(), t.j()),
        (Sym::Eb, _) => rgen::eb(n, t.i(), t.j()),
        _ => return diagram_letter(t, n).map(|d| RamifiedPartition::embed(&d)),
    };
    a.map_err(|_| index_error(t, n))
}

pub fn eval_diagram(w: &Word, n: usize) -> Result<Diagram> {
    let mut acc = Diagram::identity(n, Kind::Full);
    for t in w.tokens() {
        acc = acc.concat_unchecked(&diagram_letter(t, n)?);
    }
    Ok(acc)
}

pub fn eval_ramified(w: &Word, n: usize) -> Result<RamifiedPartition> {
    let mut acc = RamifiedPartition::identity(n, Kind::Full);
    for t in w.tokens() {
        acc = acc.product_unchecked(&ramified_letter(t, n)?);
    }
    Ok(acc)
}

pub fn eval_partition(w: &Word, n: usize) -> Result<SetPartition> {
    let mut acc = SetPartition::identity(n);
    for t in w.tokens() {
        let g = match (t.sym, t.idx.len()) {
            (Sym::E, 1) => SetPartition::pair(n, t.i(), t.i() + 1),
            (Sym::E, _) if t.i() < t.j() => SetPartition::pair(n, t.i(), t.j()),
            (Sym::E, _) => Err(index_error(t, n)),
            _ => return Err(uninterpreted(Context::Partition, t)),
        }
        .map_err(|_| index_error(t, n))?;
        acc = acc.join_unchecked(&g);
    }
    Ok(acc)
}

pub fn eval_phi(w: &Word, n: usize) -> Result<Diagram> {
    let mut acc = Diagram::identity(n, Kind::Full);
    for t in expand_macros(w, n)?.tokens() {
        let g = match (t.sym, t.idx.len()) {
            (Sym::Q, _) => {
                if t.i() == 0 || t.i() > n {
                    return Err(index_error(t, n));
                }
                continue;
            }
            (Sym::E, 1) => gen::h(n, t.i()).map_err(|_| index_error(t, n))?,
            (Sym::R, _) | (Sym::T, _) | (Sym::H, _) => diagram_letter(t, n)?,
            _ => return Err(uninterpreted(Context::Phi, t)),
        };
        acc = acc.concat_unchecked(&g);
    }
    Ok(acc)
}

pub fn eval(w: &Word, n: usize, ctx: Context) -> Result<Value> {
    Ok(match ctx {
        Context::Partition => Value::Partition(eval_partition(w, n)?),
        Context::Diagram => Value::Diagram(eval_diagram(w, n)?),
        Context::Ramified => Value::Ramified(eval_ramified(w, n)?),
        Context::Phi => Value::Diagram(eval_phi(w, n)?),
    })
}
