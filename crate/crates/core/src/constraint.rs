use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pattern::GeneralizedPattern;
use crate::perm::{Permutation, Symmetry};

/// What a permutation has to satisfy to be counted: avoid every pattern in
/// `avoid`, realize `begin` on its prefix and `end` on its suffix, and contain
/// the `exactly` pattern the stated number of times.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ConstraintSpec {
    avoid: BTreeSet<GeneralizedPattern>,
    begin: Option<Permutation>,
    end: Option<Permutation>,
    exactly: Option<(GeneralizedPattern, u64)>,
}

impl ConstraintSpec {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn avoiding<I: IntoIterator<Item = GeneralizedPattern>>(patterns: I) -> Self {
        ConstraintSpec {
            avoid: patterns.into_iter().collect(),
            ..Self::default()
        }
    }

    /// Parses a comma-separated pattern list such as `123,231`.
    pub fn avoiding_str(patterns: &str) -> Result<Self> {
        let pats = patterns
            .split(',')
            .filter(|s| !s.trim().is_empty())
            .map(|s| s.trim().parse())
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::avoiding(pats))
    }

    pub fn with_begin(mut self, q: Permutation) -> Result<Self> {
        if q.is_empty() {
            return Err(Error::Empty("begin pattern"));
        }
        self.begin = Some(q);
        Ok(self)
    }

    pub fn with_end(mut self, r: Permutation) -> Result<Self> {
        if r.is_empty() {
            return Err(Error::Empty("end pattern"));
        }
        self.end = Some(r);
        Ok(self)
    }

    pub fn with_exactly(mut self, p: GeneralizedPattern, r: u64) -> Result<Self> {
        if r > 0 && self.avoid.contains(&p) {
            return Err(Error::Incompatible(format!("{p} is avoided but required {r} times")));
        }
        self.exactly = Some((p, r));
        Ok(self)
    }

    pub fn avoid(&self) -> &BTreeSet<GeneralizedPattern> {
        &self.avoid
    }

    pub fn begin(&self) -> Option<&Permutation> {
        self.begin.as_ref()
    }

    pub fn end(&self) -> Option<&Permutation> {
        self.end.as_ref()
    }

    pub fn exactly(&self) -> Option<&(GeneralizedPattern, u64)> {
        self.exactly.as_ref()
    }

    /// Checks a complete permutation against every part of the spec.
    pub fn accepts(&self, pi: &Permutation) -> bool {
        self.avoid.iter().all(|p| p.avoids(pi))
            && self.begin.as_ref().is_none_or(|q| pi.begins_with(q).unwrap_or(false))
            && self.end.as_ref().is_none_or(|r| pi.ends_with(r).unwrap_or(false))
            && self.exactly.as_ref().is_none_or(|(p, r)| p.occurrences(pi) == *r)
    }

    /// The spec whose solutions are the reverse-complements of this spec's solutions.
    /// Begin and end swap roles.
    pub fn reverse_complement(&self) -> Self {
        ConstraintSpec {
            avoid: self.avoid.iter().map(Symmetry::reverse_complement).collect(),
            begin: self.end.as_ref().map(Symmetry::reverse_complement),
            end: self.begin.as_ref().map(Symmetry::reverse_complement),
            exactly: self.exactly.as_ref().map(|(p, r)| (p.reverse_complement(), *r)),
        }
    }

    /// A stable textual key, e.g. `avoid=1-3-2;begin=12;end=123`.
    pub fn canonical(&self) -> String {
        let mut parts = Vec::new();
        let avoid: Vec<String> = self.avoid.iter().map(|p| p.to_string()).collect();
        parts.push(format!("avoid={}", avoid.join(",")));
        if let Some(q) = &self.begin {
            parts.push(format!("begin={}", perm_key(q)));
        }
        if let Some(r) = &self.end {
            parts.push(format!("end={}", perm_key(r)));
        }
        if let Some((p, r)) = &self.exactly {
            parts.push(format!("exactly={p}:{r}"));
        }
        parts.join(";")
    }
}

fn perm_key(p: &Permutation) -> String {
    p.to_string()
}

impl fmt::Display for ConstraintSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical())
    }
}

/// Where a sequence of values came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    Oracle,
    Recurrence,
    ClosedForm,
    Series,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Oracle => "oracle",
            Provenance::Recurrence => "recurrence",
            Provenance::ClosedForm => "closed-form",
            Provenance::Series => "series",
        })
    }
}

/// A named integer sequence indexed from n = 0.
///
/// Serializes as `{"name", "spec", "provenance", "values": [{"n", "value"}]}`
/// with each value as a decimal string, so big integers survive JSON.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceRecord {
    pub name: String,
    pub spec: String,
    pub provenance: Provenance,
    #[serde(with = "indexed_values")]
    pub values: Vec<num_bigint::BigInt>,
}

mod indexed_values {
    use num_bigint::BigInt;
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    struct Entry {
        n: usize,
        value: String,
    }

    pub fn serialize<S: Serializer>(values: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        let entries: Vec<Entry> = values
            .iter()
            .enumerate()
            .map(|(n, v)| Entry {
                n,
                value: v.to_string(),
            })
            .collect();
        entries.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        let entries = Vec::<Entry>::deserialize(d)?;
        entries
            .into_iter()
            .enumerate()
            .map(|(i, e)| {
                if e.n != i {
                    return Err(D::Error::custom(format!("expected n = {i}, found {}", e.n)));
                }
                e.value
                    .parse()
                    .map_err(|_| D::Error::custom(format!("value at n = {i} is not an integer: {:?}", e.value)))
            })
            .collect()
    }
}
