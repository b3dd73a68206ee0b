//! Exhaustive round-trip and injectivity checks for the normal forms.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::diagram::Kind;
use crate::error::{Error, Result};
use crate::family::Family;
use crate::normal_form::{isn, pri, prj, ri, ris, NormalForm};
use crate::partition::{enumerate_set_partitions, SetPartition};
use crate::ramified::RamFamily;
use crate::word::{eval, Context, Sym, Token, Value, Word};

/// The monoids with a normal form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NfFamily {
    P,
    IS,
    RIS,
    RI,
    PRI,
    PRJ,
}

impl NfFamily {
    pub const ALL: [NfFamily; 6] = [
        NfFamily::P,
        NfFamily::IS,
        NfFamily::RIS,
        NfFamily::RI,
        NfFamily::PRI,
        NfFamily::PRJ,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            NfFamily::P => "P",
            NfFamily::IS => "IS",
            NfFamily::RIS => "RIS",
            NfFamily::RI => "RI",
            NfFamily::PRI => "PRI",
            NfFamily::PRJ => "PRJ",
        }
    }

    fn context(self) -> Context {
        match self {
            NfFamily::P => Context::Partition,
            NfFamily::IS => Context::Diagram,
            _ => Context::Ramified,
        }
    }

    pub fn enumerate(self, n: usize, bound: usize) -> Result<Vec<Value>> {
        let ram = |base: Family, planar: bool| -> Result<Vec<Value>> {
            let fam = if planar {
                RamFamily::planar(base)
            } else {
                RamFamily::ramified(base)
            };
            Ok(fam
                .enumerate(n, Kind::Full, bound)?
                .into_iter()
                .map(Value::Ramified)
                .collect())
        };
        match self {
            NfFamily::P => {
                let mut out = Vec::new();
                for p in enumerate_set_partitions(n) {
                    if out.len() == bound {
                        return Err(Error::BoundExceeded { bound });
                    }
                    out.push(Value::Partition(p));
                }
                Ok(out)
            }
            NfFamily::IS => Ok(Family::IS
                .enumerate(n, Kind::Full, bound)?
                .into_iter()
                .map(Value::Diagram)
                .collect()),
            NfFamily::RIS => ram(Family::IS, false),
            NfFamily::RI => ram(Family::I, false),
            NfFamily::PRI => ram(Family::I, true),
            NfFamily::PRJ => ram(Family::J, true),
        }
    }

    pub fn normal_form(self, x: &Value) -> Result<NormalForm> {
        let wrong = || Error::Membership(format!("{} expects another element type", self.tag()));
        match (self, x) {
            (NfFamily::P, Value::Partition(p)) => Ok(nf_pn(p)),
            (NfFamily::IS, Value::Diagram(d)) => isn::nf_isn(d),
            (NfFamily::RIS, Value::Ramified(a)) => ris::nf_r_isn(a),
            (NfFamily::RI, Value::Ramified(a)) => ri::nf_r_in(a),
            (NfFamily::PRI, Value::Ramified(a)) => pri::nf_pr_in(a),
            (NfFamily::PRJ, Value::Ramified(a)) => prj::nf_pr_jn(a),
            _ => Err(wrong()),
        }
    }
}

impl FromStr for NfFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        NfFamily::ALL
            .into_iter()
            .find(|f| f.tag().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

/// `P_n`: the consecutive pairs of every block as `e_{i,j}` letters.
pub fn nf_pn(p: &SetPartition) -> NormalForm {
    let mut nf = NormalForm::new();
    nf.push(
        "e",
        Word(
            p.normal_form_pairs()
                .into_iter()
                .map(|(i, j)| Token::two(Sym::E, i, j))
                .collect(),
        ),
    );
    nf
}

#[derive(Clone, Debug)]
pub struct NfReport {
    pub family: NfFamily,
    pub n: usize,
    pub elements: usize,
    /// Elements whose word does not evaluate back, or has no normal form.
    pub failures: Vec<String>,
    /// Words shared by two elements.
    pub collisions: Vec<String>,
}

impl NfReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.collisions.is_empty()
    }
}

impl fmt::Display for NfReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} n={}: {} elements, {} round-trip failures, {} collisions",
            self.family.tag(),
            self.n,
            self.elements,
            self.failures.len(),
            self.collisions.len()
        )?;
        for line in self.failures.iter().chain(&self.collisions).take(5) {
            write!(f, "\n  {line}")?;
        }
        Ok(())
    }
}

pub fn validate_normal_forms(family: NfFamily, n: usize, bound: usize) -> Result<NfReport> {
    let all = family.enumerate(n, bound)?;
    let mut failures = Vec::new();
    let mut collisions = Vec::new();
    let mut seen: HashMap<Word, usize> = HashMap::with_capacity(all.len());
    for (k, x) in all.iter().enumerate() {
        let w = match family.normal_form(x) {
            Ok(nf) => nf.word(),
            Err(e) => {
                failures.push(format!("{x}: {e}"));
                continue;
            }
        };
        match eval(&w, n, family.context()) {
            Ok(y) if &y == x => {}
            Ok(y) => failures.push(format!("{x}: {w} evaluates to {y}")),
            Err(e) => failures.push(format!("{x}: {w}: {e}")),
        }
        if let Some(&other) = seen.get(&w) {
            collisions.push(format!("{w} for {} and {x}", all[other]));
        } else {
            seen.insert(w, k);
        }
    }
    Ok(NfReport {
        family,
        n,
        elements: all.len(),
        failures,
        collisions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases_pass() {
        for (family, n, size) in [
            (NfFamily::P, 5, 52),
            (NfFamily::IS, 3, 34),
            (NfFamily::RIS, 3, 971),
            (NfFamily::RI, 3, 409),
            (NfFamily::PRI, 4, 3302),
            (NfFamily::PRJ, 5, 969),
        ] {
            let report = validate_normal_forms(family, n, 1 << 20).unwrap();
            assert!(report.passed(), "{report}");
            assert_eq!(report.elements, size);
        }
    }

    #[test]
    fn tags_parse() {
        assert_eq!("pri".parse::<NfFamily>().unwrap(), NfFamily::PRI);
        assert!("RJ".parse::<NfFamily>().is_err());
    }
}
