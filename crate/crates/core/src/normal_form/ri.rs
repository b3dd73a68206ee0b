//! The `e · q · x_g · e′` normal form of `R(I_n)`.

use crate::error::Result;
use crate::family::Family;
use crate::normal_form::ris::{require, ris_parts, tie_word};
use crate::normal_form::NormalForm;
use crate::ramified::RamifiedPartition;
use crate::word::{Sym, Token, Word};

pub fn nf_r_in(a: &RamifiedPartition) -> Result<NormalForm> {
    require(a, Family::I, "R(I_n)")?;
    let parts = ris_parts(a)?;
    let x: Vec<Token> = parts
        .perm_word
        .tokens()
        .iter()
        .map(|t| match t.sym {
            Sym::S => Token::two(Sym::X, t.i(), t.i() + 1),
            _ => Token::two(Sym::X, t.i(), t.j()),
        })
        .collect();
    let absorbed = |i: usize| x.iter().any(|t| t.idx.contains(&i));
    let r: Vec<Token> = parts
        .r
        .iter()
        .filter(|&&(i, q)| !(q && absorbed(i)))
        .map(|&(i, q)| Token::one(if q { Sym::Q } else { Sym::R }, i))
        .collect();
    let mut nf = NormalForm::new();
    nf.push("e", tie_word(&parts.e));
    nf.push("r", Word(r));
    nf.push("x", Word(x));
    nf.push("e'", tie_word(&parts.e2));
    Ok(nf)
}
