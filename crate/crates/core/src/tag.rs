//! Short names for every monoid the library can enumerate.

use std::fmt;
use std::str::FromStr;

use crate::diagram::Kind;
use crate::error::{Error, Result};
use crate::family::Family;
use crate::partition::enumerate_set_partitions;
use crate::ramified::RamFamily;
use crate::word::{Context, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Tag {
    /// Set partitions of `[n]` under join.
    P,
    S,
    IS,
    ISb,
    I,
    Ib,
    J,
    PP,
    RS,
    RIS,
    RISb,
    RI,
    RIb,
    PRI,
    PRIb,
    PRJ,
}

/// How a tag is realized.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Realization {
    Partitions,
    Diagrams(Family, Kind),
    Ramified(RamFamily, Kind),
}

impl Tag {
    pub const ALL: [Tag; 16] = [
        Tag::P,
        Tag::S,
        Tag::IS,
        Tag::ISb,
        Tag::I,
        Tag::Ib,
        Tag::J,
        Tag::PP,
        Tag::RS,
        Tag::RIS,
        Tag::RISb,
        Tag::RI,
        Tag::RIb,
        Tag::PRI,
        Tag::PRIb,
        Tag::PRJ,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Tag::P => "P",
            Tag::S => "S",
            Tag::IS => "IS",
            Tag::ISb => "ISb",
            Tag::I => "I",
            Tag::Ib => "Ib",
            Tag::J => "J",
            Tag::PP => "PP",
            Tag::RS => "RS",
            Tag::RIS => "RIS",
            Tag::RISb => "RISb",
            Tag::RI => "RI",
            Tag::RIb => "RIb",
            Tag::PRI => "PRI",
            Tag::PRIb => "PRIb",
            Tag::PRJ => "PRJ",
        }
    }

    pub fn realization(self) -> Realization {
        use Kind::{Bullet, Full};
        let d = Realization::Diagrams;
        let r = |base, planar: bool, kind| {
            let fam = if planar {
                RamFamily::planar(base)
            } else {
                RamFamily::ramified(base)
            };
            Realization::Ramified(fam, kind)
        };
        match self {
            Tag::P => Realization::Partitions,
            Tag::S => d(Family::S, Full),
            Tag::IS => d(Family::IS, Full),
            Tag::ISb => d(Family::IS, Bullet),
            Tag::I => d(Family::I, Full),
            Tag::Ib => d(Family::I, Bullet),
            Tag::J => d(Family::J, Full),
            Tag::PP => d(Family::PP, Full),
            Tag::RS => r(Family::S, false, Full),
            Tag::RIS => r(Family::IS, false, Full),
            Tag::RISb => r(Family::IS, false, Bullet),
            Tag::RI => r(Family::I, false, Full),
            Tag::RIb => r(Family::I, false, Bullet),
            Tag::PRI => r(Family::I, true, Full),
            Tag::PRIb => r(Family::I, true, Bullet),
            Tag::PRJ => r(Family::J, true, Full),
        }
    }

    pub fn context(self) -> Context {
        match self.realization() {
            Realization::Partitions => Context::Partition,
            Realization::Diagrams(..) => Context::Diagram,
            Realization::Ramified(..) => Context::Ramified,
        }
    }

    /// Every element, each once; fails past `bound` elements.
    pub fn enumerate(self, n: usize, bound: usize) -> Result<Vec<Value>> {
        Ok(match self.realization() {
            Realization::Partitions => {
                let mut out = Vec::new();
                for p in enumerate_set_partitions(n) {
                    if out.len() == bound {
                        return Err(Error::BoundExceeded { bound });
                    }
                    out.push(Value::Partition(p));
                }
                out
            }
            Realization::Diagrams(f, k) => f
                .enumerate(n, k, bound)?
                .into_iter()
                .map(Value::Diagram)
                .collect(),
            Realization::Ramified(f, k) => f
                .enumerate(n, k, bound)?
                .into_iter()
                .map(Value::Ramified)
                .collect(),
        })
    }

    /// Membership of an element of the right type.
    pub fn contains(self, x: &Value) -> bool {
        match (self.realization(), x) {
            (Realization::Partitions, Value::Partition(_)) => true,
            (Realization::Diagrams(f, k), Value::Diagram(d)) => d.kind() == k && f.contains(d),
            (Realization::Ramified(f, k), Value::Ramified(a)) => a.kind() == k && f.contains(a),
            _ => false,
        }
    }
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Tag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Tag::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}
