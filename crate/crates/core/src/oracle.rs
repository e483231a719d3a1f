//! Exhaustive enumeration of constrained permutations.
//!
//! The search grows permutations one letter at a time. After each new letter
//! only the occurrences ending at that letter are examined, so a prefix is
//! dropped the moment it completes an avoided pattern. Appending letters never
//! removes an occurrence, which makes both this and the running count for an
//! `exactly` requirement safe to prune on.

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use num_bigint::BigInt;

use crate::constraint::{ConstraintSpec, Provenance, SequenceRecord};
use crate::error::{Error, Result};
use crate::pattern::GeneralizedPattern;
use crate::perm::{order_isomorphic, Permutation};

pub const DEFAULT_N_MAX: usize = 10;
pub const HARD_CAP: usize = 12;

/// How the first-letter partitions of the search are executed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Schedule {
    Sequential,
    #[cfg(feature = "parallel")]
    #[default]
    Parallel,
}

/// Ground-truth counter with an in-process memo and an optional cache file.
pub struct Oracle {
    n_max: usize,
    schedule: Schedule,
    cache: SequenceCache,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle::new()
    }
}

impl Oracle {
    pub fn new() -> Self {
        Oracle {
            n_max: DEFAULT_N_MAX,
            schedule: Schedule::default(),
            cache: SequenceCache::in_memory(),
        }
    }

    pub fn with_n_max(mut self, n_max: usize) -> Result<Self> {
        if n_max > HARD_CAP {
            return Err(Error::AboveCap {
                n: n_max,
                cap: HARD_CAP,
            });
        }
        self.n_max = n_max;
        Ok(self)
    }

    pub fn with_schedule(mut self, schedule: Schedule) -> Self {
        self.schedule = schedule;
        self
    }

    pub fn with_cache_file(mut self, path: impl AsRef<Path>) -> Self {
        self.cache = SequenceCache::backed_by(path.as_ref().to_path_buf());
        self
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn cache(&self) -> &SequenceCache {
        &self.cache
    }

    fn check_cap(&self, n: usize) -> Result<()> {
        if n > self.n_max {
            Err(Error::AboveCap { n, cap: self.n_max })
        } else {
            Ok(())
        }
    }

    /// Number of permutations of length `n` satisfying `spec`.
    pub fn count(&self, spec: &ConstraintSpec, n: usize) -> Result<BigInt> {
        self.check_cap(n)?;
        let key = spec.canonical();
        if let Some(v) = self.cache.get(&key, n)? {
            return Ok(v);
        }
        let v = BigInt::from(enumerate(spec, n, self.schedule, |_| true));
        self.cache.insert(&key, n, &v)?;
        Ok(v)
    }

    /// Uncached count under an explicit schedule.
    pub fn count_with(&self, spec: &ConstraintSpec, n: usize, schedule: Schedule) -> Result<BigInt> {
        self.check_cap(n)?;
        Ok(BigInt::from(enumerate(spec, n, schedule, |_| true)))
    }

    /// Uncached count of spec-satisfying permutations that also pass `pred`.
    /// The predicate sees the complete one-line word.
    pub fn count_where<F>(&self, spec: &ConstraintSpec, n: usize, pred: F) -> Result<BigInt>
    where
        F: Fn(&[u8]) -> bool + Sync,
    {
        self.check_cap(n)?;
        Ok(BigInt::from(enumerate(spec, n, self.schedule, pred)))
    }

    pub fn sequence(&self, spec: &ConstraintSpec, n_max: usize) -> Result<SequenceRecord> {
        self.check_cap(n_max)?;
        let values = (0..=n_max).map(|n| self.count(spec, n)).collect::<Result<Vec<_>>>()?;
        Ok(SequenceRecord {
            name: spec.canonical(),
            spec: spec.canonical(),
            provenance: Provenance::Oracle,
            values,
        })
    }

    /// Permutations with exactly `r` occurrences of `p` and the given windows.
    pub fn count_exactly(
        &self,
        p: &GeneralizedPattern,
        r: u64,
        begin: Option<&Permutation>,
        end: Option<&Permutation>,
        n: usize,
    ) -> Result<BigInt> {
        let mut spec = ConstraintSpec::new().with_exactly(p.clone(), r)?;
        if let Some(q) = begin {
            spec = spec.with_begin(q.clone())?;
        }
        if let Some(q) = end {
            spec = spec.with_end(q.clone())?;
        }
        self.count(&spec, n)
    }
}

struct Search<'a, F> {
    n: usize,
    avoid: Vec<&'a GeneralizedPattern>,
    begin: Option<&'a [u32]>,
    end: Option<&'a [u32]>,
    exactly: Option<(&'a GeneralizedPattern, u64)>,
    pred: F,
}

fn enumerate<F>(spec: &ConstraintSpec, n: usize, schedule: Schedule, pred: F) -> u64
where
    F: Fn(&[u8]) -> bool + Sync,
{
    assert!(n <= HARD_CAP);
    let search = Search {
        n,
        avoid: spec.avoid().iter().collect(),
        begin: spec.begin().map(|q| q.letters()),
        end: spec.end().map(|r| r.letters()),
        exactly: spec.exactly().map(|(p, r)| (p, *r)),
        pred,
    };
    if n == 0 {
        let ok = search.begin.is_none()
            && search.end.is_none()
            && search.exactly.is_none_or(|(_, r)| r == 0)
            && (search.pred)(&[]);
        return ok as u64;
    }
    if search.begin.is_some_and(|q| q.len() > n) || search.end.is_some_and(|r| r.len() > n) {
        return 0;
    }
    match schedule {
        Schedule::Sequential => (1..=n as u8).map(|f| search.count_from_first(f)).sum(),
        #[cfg(feature = "parallel")]
        Schedule::Parallel => {
            use rayon::prelude::*;
            (1..=n as u8).into_par_iter().map(|f| search.count_from_first(f)).sum()
        }
    }
}

impl<F: Fn(&[u8]) -> bool> Search<'_, F> {
    fn count_from_first(&self, first: u8) -> u64 {
        let mut word = [0u8; HARD_CAP];
        self.extend(&mut word, 0, 0, 0, first)
    }

    // Places `letter` at position `len` and counts all completions.
    fn extend(&self, word: &mut [u8; HARD_CAP], len: usize, used: u16, occ: u64, letter: u8) -> u64 {
        word[len] = letter;
        let len = len + 1;
        let used = used | (1 << letter);
        let prefix = &word[..len];
        if self.avoid.iter().any(|p| p.count_ending_at(prefix, 1) > 0) {
            return 0;
        }
        let mut occ = occ;
        if let Some((p, r)) = self.exactly {
            occ += p.count_ending_at(prefix, r + 1 - occ);
            if occ > r {
                return 0;
            }
        }
        if let Some(q) = self.begin {
            if len == q.len() && !order_isomorphic(prefix, q) {
                return 0;
            }
        }
        if len == self.n {
            let end_ok = self.end.is_none_or(|r| order_isomorphic(&prefix[len - r.len()..], r));
            let exact_ok = self.exactly.is_none_or(|(_, r)| occ == r);
            return (end_ok && exact_ok && (self.pred)(prefix)) as u64;
        }
        let mut total = 0;
        for next in 1..=self.n as u8 {
            if used & (1 << next) == 0 {
                total += self.extend(word, len, used, occ, next);
            }
        }
        total
    }
}

/// Memo of `(canonical spec, n) -> count`, optionally mirrored to a file with
/// lines `canonical-spec TAB n TAB value`.
pub struct SequenceCache {
    file: Option<PathBuf>,
    inner: Mutex<CacheInner>,
}

#[derive(Default)]
struct CacheInner {
    loaded: bool,
    map: HashMap<(String, usize), BigInt>,
}

impl SequenceCache {
    pub fn in_memory() -> Self {
        SequenceCache {
            file: None,
            inner: Mutex::new(CacheInner {
                loaded: true,
                map: HashMap::new(),
            }),
        }
    }

    pub fn backed_by(path: PathBuf) -> Self {
        SequenceCache {
            file: Some(path),
            inner: Mutex::new(CacheInner::default()),
        }
    }

    pub fn len(&self) -> usize {
        self.inner.lock().unwrap().map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, key: &str, n: usize) -> Result<Option<BigInt>> {
        let mut inner = self.inner.lock().unwrap();
        self.ensure_loaded(&mut inner)?;
        Ok(inner.map.get(&(key.to_string(), n)).cloned())
    }

    /// Records a value. A second insert of the same key must agree with the first.
    pub fn insert(&self, key: &str, n: usize, value: &BigInt) -> Result<()> {
        let mut inner = self.inner.lock().unwrap();
        self.ensure_loaded(&mut inner)?;
        match inner.map.get(&(key.to_string(), n)) {
            Some(old) if old == value => return Ok(()),
            Some(old) => {
                return Err(Error::CacheConflict {
                    key: key.to_string(),
                    n,
                    old: old.to_string(),
                    new: value.to_string(),
                })
            }
            None => {}
        }
        if let Some(path) = &self.file {
            let line = format!("{key}\t{n}\t{value}\n");
            let mut f = OpenOptions::new().create(true).append(true).open(path)?;
            f.write_all(line.as_bytes())?;
        }
        inner.map.insert((key.to_string(), n), value.clone());
        Ok(())
    }

    fn ensure_loaded(&self, inner: &mut CacheInner) -> Result<()> {
        if inner.loaded {
            return Ok(());
        }
        inner.loaded = true;
        let Some(path) = &self.file else { return Ok(()) };
        let f = match File::open(path) {
            Ok(f) => f,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(()),
            Err(e) => return Err(e.into()),
        };
        for (lineno, line) in BufReader::new(f).lines().enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let bad = || Error::Parse {
                what: "cache line",
                input: line.clone(),
                position: lineno + 1,
                reason: "expected spec TAB n TAB value".to_string(),
            };
            let mut parts = line.split('\t');
            let (Some(key), Some(n), Some(v), None) = (parts.next(), parts.next(), parts.next(), parts.next()) else {
                return Err(bad());
            };
            let n: usize = n.parse().map_err(|_| bad())?;
            let v: BigInt = v.parse().map_err(|_| bad())?;
            if let Some(old) = inner.map.get(&(key.to_string(), n)) {
                if *old != v {
                    return Err(Error::CacheConflict {
                        key: key.to_string(),
                        n,
                        old: old.to_string(),
                        new: v.to_string(),
                    });
                }
            }
            inner.map.insert((key.to_string(), n), v);
        }
        Ok(())
    }
}
