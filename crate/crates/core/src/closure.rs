//! Submonoids generated by a finite set, and checks that the stated
//! generators give the whole monoid.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::monoid::Element;
use crate::tag::Tag;
use crate::word::{eval, Context, Sym, Token, Value, Word};

/// Breadth-first closure of `identity` under right multiplication by
/// `gens`, in discovery order.
pub fn closure<E: Element>(identity: E, gens: &[E], bound: usize) -> Result<Vec<E>> {
    let mut seen: HashSet<E> = HashSet::new();
    let mut out = vec![identity.clone()];
    seen.insert(identity);
    let mut head = 0;
    while head < out.len() {
        let x = out[head].clone();
        head += 1;
        for g in gens {
            let y = x.mul(g);
            if !seen.contains(&y) {
                if out.len() == bound {
                    return Err(Error::BoundExceeded { bound });
                }
                seen.insert(y.clone());
                out.push(y);
            }
        }
    }
    Ok(out)
}

fn unwrap_all<E>(xs: Vec<Value>, f: impl Fn(Value) -> Option<E>) -> Result<Vec<E>> {
    xs.into_iter()
        .map(|x| f(x).ok_or_else(|| Error::Invalid("generators of mixed types".into())))
        .collect()
}

/// Closure of words evaluated in `ctx`; the empty word is the identity.
pub fn closure_of_words(
    words: &[Word],
    n: usize,
    ctx: Context,
    bound: usize,
) -> Result<Vec<Value>> {
    let identity = eval(&Word::new(), n, ctx)?;
    let gens = words
        .iter()
        .map(|w| eval(w, n, ctx))
        .collect::<Result<Vec<_>>>()?;
    Ok(match identity {
        Value::Partition(id) => {
            let g = unwrap_all(gens, |v| match v {
                Value::Partition(p) => Some(p),
                _ => None,
            })?;
            closure(id, &g, bound)?
                .into_iter()
                .map(Value::Partition)
                .collect()
        }
        Value::Diagram(id) => {
            let g = unwrap_all(gens, |v| match v {
                Value::Diagram(d) => Some(d),
                _ => None,
            })?;
            closure(id, &g, bound)?
                .into_iter()
                .map(Value::Diagram)
                .collect()
        }
        Value::Ramified(id) => {
            let g = unwrap_all(gens, |v| match v {
                Value::Ramified(a) => Some(a),
                _ => None,
            })?;
            closure(id, &g, bound)?
                .into_iter()
                .map(Value::Ramified)
                .collect()
        }
    })
}

/// The stated generating set of a monoid, as one-letter words.
pub fn generators(tag: Tag, n: usize) -> Result<Vec<Word>> {
    let single = |syms: &[Sym], top: usize| -> Vec<Word> {
        syms.iter()
            .flat_map(|&s| (1..=top).map(move |i| Word(vec![Token::one(s, i)])))
            .collect()
    };
    let pairs = |syms: &[Sym]| -> Vec<Word> {
        syms.iter()
            .flat_map(|&s| {
                (1..=n).flat_map(move |i| (i + 1..=n).map(move |j| Word(vec![Token::two(s, i, j)])))
            })
            .collect()
    };
    let m = n.saturating_sub(1);
    let cat = |parts: Vec<Vec<Word>>| parts.concat();
    Ok(match tag {
        Tag::P => pairs(&[Sym::E]),
        Tag::S => single(&[Sym::S], m),
        Tag::IS => cat(vec![single(&[Sym::S], m), single(&[Sym::R], n)]),
        Tag::I => single(&[Sym::R], n),
        Tag::J => single(&[Sym::T], m),
        Tag::PP => cat(vec![single(&[Sym::R], n), single(&[Sym::H], m)]),
        Tag::RS => single(&[Sym::S, Sym::E], m),
        Tag::RIS => cat(vec![
            single(&[Sym::S, Sym::E], m),
            single(&[Sym::R, Sym::Q], n),
        ]),
        Tag::RI => cat(vec![single(&[Sym::R, Sym::Q], n), pairs(&[Sym::E, Sym::X])]),
        Tag::PRI => cat(vec![single(&[Sym::R, Sym::Q], n), single(&[Sym::E], m)]),
        Tag::PRJ => single(&[Sym::T, Sym::F, Sym::E], m),
        Tag::ISb | Tag::Ib | Tag::RISb | Tag::RIb | Tag::PRIb => {
            return Err(Error::Invalid(format!(
                "no generating set is stated for {tag}"
            )))
        }
    })
}

#[derive(Clone, Debug)]
pub struct GenerationReport {
    pub tag: Tag,
    pub n: usize,
    pub generators: usize,
    pub closure: usize,
    pub enumerated: usize,
    /// Elements of the monoid the generators miss.
    pub missing: usize,
    /// Generated elements outside the monoid.
    pub extra: usize,
}

impl GenerationReport {
    pub fn passed(&self) -> bool {
        self.missing == 0 && self.extra == 0
    }
}

impl fmt::Display for GenerationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} n={}: {} generators close to {} elements, monoid has {} ({} missing, {} extra)",
            self.tag,
            self.n,
            self.generators,
            self.closure,
            self.enumerated,
            self.missing,
            self.extra
        )
    }
}

pub fn verify_generation(tag: Tag, n: usize, bound: usize) -> Result<GenerationReport> {
    let gens = generators(tag, n)?;
    let generated = closure_of_words(&gens, n, tag.context(), bound)?;
    let all: HashSet<Value> = tag.enumerate(n, bound)?.into_iter().collect();
    let got: HashSet<&Value> = generated.iter().collect();
    Ok(GenerationReport {
        tag,
        n,
        generators: gens.len(),
        closure: generated.len(),
        enumerated: all.len(),
        missing: all.iter().filter(|x| !got.contains(x)).count(),
        extra: generated.iter().filter(|x| !all.contains(*x)).count(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn size(words: &str, n: usize, ctx: Context) -> usize {
        let ws: Vec<Word> = words
            .split_whitespace()
            .map(|t| t.parse().unwrap())
            .collect();
        closure_of_words(&ws, n, ctx, 1 << 22).unwrap().len()
    }

    #[test]
    fn tangles_give_catalan_numbers() {
        let catalan = [1, 1, 2, 5, 14, 42, 132];
        for n in 1..=6 {
            let ws: Vec<String> = (1..n).map(|i| format!("t{i}")).collect();
            assert_eq!(size(&ws.join(" "), n, Context::Diagram), catalan[n]);
        }
    }

    #[test]
    fn small_closures() {
        assert_eq!(size("s1 r1 r2 e1 q1 q2", 2, Context::Ramified), 39);
        for n in 1..=5 {
            let ws: Vec<String> = (1..=n).map(|i| format!("r{i}")).collect();
            assert_eq!(size(&ws.join(" "), n, Context::Diagram), 1 << n);
        }
        assert_eq!(size("", 3, Context::Ramified), 1);
    }

    #[test]
    fn stated_generators_generate() {
        for (tag, n) in [
            (Tag::P, 4),
            (Tag::S, 4),
            (Tag::IS, 3),
            (Tag::I, 4),
            (Tag::J, 5),
            (Tag::PP, 3),
            (Tag::RS, 3),
            (Tag::RIS, 2),
            (Tag::RI, 3),
            (Tag::PRI, 3),
            (Tag::PRJ, 4),
        ] {
            let r = verify_generation(tag, n, 1 << 22).unwrap();
            assert!(r.passed(), "{r}");
        }
        assert!(verify_generation(Tag::Ib, 3, 100).is_err());
    }

    #[test]
    fn too_few_generators_are_caught() {
        let ws: Vec<Word> = ["s1", "r1"].iter().map(|t| t.parse().unwrap()).collect();
        let got = closure_of_words(&ws, 3, Context::Diagram, 1000).unwrap();
        assert!(got.len() < 34);
    }
}
