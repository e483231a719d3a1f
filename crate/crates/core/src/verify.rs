//! The identity suites: every recurrence, closed form and generating function
//! checked against the oracle, plus the structural invariants.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::constraint::ConstraintSpec;
use crate::counting::special::{catalan_numbers, factorial};
use crate::counting::{
    binomial, count_123_one_sided, count_123_two_sided, exactly_once_identities, g_aux, h_aux, pair_avoidance,
    recurrence_two_sided, s_first_letter, TwoSidedFamily, PUBLISHED_TABLES,
};
use crate::engine::{Dispatcher, Engine};
use crate::error::{Error, Result};
use crate::pattern::GeneralizedPattern;
use crate::perm::Direction::{self, Dec, Inc};
use crate::perm::{Permutation, Symmetry};
use crate::series::{
    catalan_series, counts_from_series, egf_families, egf_formula, ogf_families, ogf_formula, trivariate_coeff,
    trivariate_families, FloatSeries, RationalSeries, EGF_DEFAULT_ORDER, OGF_DEFAULT_ORDER,
};

pub const DEFAULT_N_MAX: usize = 9;
pub const TABLES_N_MAX: usize = 10;
pub const DEFAULT_KL_MAX: usize = 3;
/// Order at which the trivariate extractions are compared.
const TRIVARIATE_ORDER: usize = 16;
/// Bound for the purely combinatorial property checks.
const PROPERTY_N_MAX: usize = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Tables,
    Ogf,
    Egf,
    Lemmas,
    Section9,
    Recurrences,
    Properties,
    All,
}

impl Suite {
    pub const EACH: [Suite; 7] = [
        Suite::Tables,
        Suite::Ogf,
        Suite::Egf,
        Suite::Lemmas,
        Suite::Section9,
        Suite::Recurrences,
        Suite::Properties,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Tables => "tables",
            Suite::Ogf => "ogf",
            Suite::Egf => "egf",
            Suite::Lemmas => "lemmas",
            Suite::Section9 => "section9",
            Suite::Recurrences => "recurrences",
            Suite::Properties => "properties",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.as_str() == s)
            .ok_or_else(|| Error::Unknown {
                kind: "suite",
                name: s.to_string(),
            })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: String,
    pub status: Status,
    pub lhs: String,
    pub rhs: String,
    pub location: String,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub suite: Suite,
    pub checks: Vec<Check>,
    pub summary: Summary,
}

impl VerificationReport {
    fn new(suite: Suite, mut checks: Vec<Check>) -> Self {
        checks.sort_by(|a, b| a.id.cmp(&b.id));
        let mut summary = Summary::default();
        for c in &checks {
            match c.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Skipped => summary.skipped += 1,
            }
        }
        VerificationReport { suite, checks, summary }
    }

    pub fn passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            write!(f, "{} {}", c.status, c.id)?;
            if c.status != Status::Pass {
                write!(f, "  lhs={} rhs={} at {}", c.lhs, c.rhs, c.location)?;
            }
            writeln!(f)?;
        }
        let s = &self.summary;
        writeln!(
            f,
            "{}: {} checks, {} passed, {} failed, {} skipped",
            self.suite,
            s.pass + s.fail + s.skipped,
            s.pass,
            s.fail,
            s.skipped
        )
    }
}

/// Bounds for a run. `n_max` defaults per suite.
#[derive(Clone, Copy, Debug, Default)]
pub struct VerifyConfig {
    pub n_max: Option<usize>,
    pub kl_max: Option<usize>,
}

impl VerifyConfig {
    fn n_max(&self, suite: Suite) -> usize {
        match suite {
            Suite::Tables => self.n_max.unwrap_or(TABLES_N_MAX).min(TABLES_N_MAX),
            _ => self.n_max.unwrap_or(DEFAULT_N_MAX),
        }
    }

    fn kl_max(&self) -> usize {
        self.kl_max.unwrap_or(DEFAULT_KL_MAX)
    }
}

struct Outcome {
    status: Status,
    lhs: String,
    rhs: String,
}

impl Outcome {
    fn skipped(reason: impl Into<String>) -> Self {
        Outcome {
            status: Status::Skipped,
            lhs: reason.into(),
            rhs: String::new(),
        }
    }

    fn truth(ok: bool, lhs: impl Into<String>, rhs: impl Into<String>) -> Self {
        Outcome {
            status: if ok { Status::Pass } else { Status::Fail },
            lhs: lhs.into(),
            rhs: rhs.into(),
        }
    }
}

type Job<'a> = Box<dyn Fn() -> Outcome + Send + Sync + 'a>;

struct Task<'a> {
    id: String,
    location: String,
    run: Job<'a>,
}

fn task<'a>(id: String, location: impl Into<String>, run: impl Fn() -> Outcome + Send + Sync + 'a) -> Task<'a> {
    Task {
        id,
        location: location.into(),
        run: Box::new(run),
    }
}

fn show<T: fmt::Display>(r: &Result<Vec<T>>) -> String {
    match r {
        Ok(v) => v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","),
        Err(e) => format!("error: {e}"),
    }
}

fn compare(lhs: Result<Vec<BigInt>>, rhs: Result<Vec<BigInt>>) -> Outcome {
    let ok = matches!((&lhs, &rhs), (Ok(a), Ok(b)) if a == b);
    Outcome::truth(ok, show(&lhs), show(&rhs))
}

fn compare_one(lhs: Result<BigInt>, rhs: Result<BigInt>) -> Outcome {
    compare(lhs.map(|v| vec![v]), rhs.map(|v| vec![v]))
}

/// Compares many labelled cells; reports the first mismatch.
fn compare_cells(cells: impl IntoIterator<Item = (String, Result<BigInt>, Result<BigInt>)>) -> Outcome {
    let mut total = (BigInt::from(0), BigInt::from(0));
    let mut count = 0;
    for (label, a, b) in cells {
        match (a, b) {
            (Ok(a), Ok(b)) if a == b => {
                total.0 += &a;
                total.1 += b;
                count += 1;
            }
            (a, b) => {
                return Outcome::truth(
                    false,
                    format!("{label}: {}", show(&a.map(|v| vec![v]))),
                    show(&b.map(|v| vec![v])),
                );
            }
        }
    }
    Outcome::truth(
        true,
        format!("{count} cells, sum {}", total.0),
        format!("sum {}", total.1),
    )
}

fn oracle_seq(d: &Dispatcher, spec: &ConstraintSpec, n_max: usize) -> Result<Vec<BigInt>> {
    d.oracle().sequence(spec, n_max).map(|r| r.values)
}

fn windowed(pattern: &str, b: Direction, k: usize, e: Direction, l: usize) -> ConstraintSpec {
    ConstraintSpec::avoiding_str(pattern)
        .and_then(|s| s.with_begin(b.window(k)))
        .and_then(|s| s.with_end(e.window(l)))
        .expect("monotone windows are valid")
}

fn dirs() -> [(Direction, Direction); 4] {
    [(Inc, Inc), (Inc, Dec), (Dec, Inc), (Dec, Dec)]
}

fn tables(d: &Dispatcher, n_max: usize) -> Vec<Task<'_>> {
    let mut out = Vec::new();
    for (id, table) in PUBLISHED_TABLES {
        for n in 0..=n_max {
            out.push(task(
                format!("tables/{id}/n={n:02}"),
                format!("counting::pair_avoidance({id})"),
                move || {
                    let rec = pair_avoidance(id, n).values[n].clone();
                    let oracle = d.oracle().count(&id.spec(), n);
                    let want = BigInt::from(table[n]);
                    let ok = rec == want && oracle.as_ref().is_ok_and(|o| *o == want);
                    let oracle = oracle.map_or_else(|e| format!("error: {e}"), |o| o.to_string());
                    Outcome::truth(
                        ok,
                        format!("recurrence {rec}"),
                        format!("table {want}, oracle {oracle}"),
                    )
                },
            ));
        }
    }
    out
}

fn ogf(d: &Dispatcher, n_max: usize, kl_max: usize) -> Vec<Task<'_>> {
    let mut out = Vec::new();
    for family in ogf_families() {
        let ls: Vec<usize> = if family.is_two_sided() {
            (1..=kl_max).collect()
        } else {
            vec![0]
        };
        for k in 1..=kl_max {
            for &l in &ls {
                let id = if family.is_two_sided() {
                    format!("ogf/{family}/k={k}/l={l}")
                } else {
                    format!("ogf/{family}/k={k}")
                };
                out.push(task(
                    id,
                    format!("series::ogf_formula({family}, {k}, {l})"),
                    move || {
                        let s = ogf_formula(&family, k, l, OGF_DEFAULT_ORDER.max(n_max + 1));
                        compare(
                            s.and_then(|s| counts_from_series(&s, n_max)),
                            oracle_seq(d, &family.spec(k, l), n_max),
                        )
                    },
                ));
            }
        }
    }
    for family in trivariate_families() {
        for k in 1..=kl_max + 1 {
            for l in 1..=kl_max + 1 {
                out.push(task(
                    format!("ogf/trivariate/{family}/k={k}/l={l}"),
                    format!("series::trivariate_coeff({family}, {k}, {l})"),
                    move || {
                        let a = trivariate_coeff(&family, k, l, TRIVARIATE_ORDER)
                            .and_then(|s| counts_from_series(&s, TRIVARIATE_ORDER - 1));
                        let b = ogf_formula(&family, k, l, TRIVARIATE_ORDER)
                            .and_then(|s| counts_from_series(&s, TRIVARIATE_ORDER - 1));
                        compare(a, b)
                    },
                ));
            }
        }
    }
    out
}

fn egf(d: &Dispatcher, n_max: usize, kl_max: usize) -> Vec<Task<'_>> {
    let mut out = Vec::new();
    for family in egf_families() {
        for k in 1..=kl_max {
            for l in 1..=kl_max {
                out.push(task(
                    format!("egf/{family}/k={k}/l={l}"),
                    format!("series::egf_formula({family}, {k}, {l})"),
                    move || match egf_formula(&family, k, l, EGF_DEFAULT_ORDER.max(n_max + 1)) {
                        Err(Error::NotRegistered(what)) => Outcome::skipped(format!("undefined: {what}")),
                        s => compare(
                            s.and_then(|s| counts_from_series(&s, n_max)),
                            oracle_seq(d, &family.spec(k, l), n_max),
                        ),
                    },
                ));
            }
        }
    }
    out
}

fn lemmas(d: &Dispatcher, n_max: usize, kl_max: usize) -> Vec<Task<'_>> {
    let mut out = Vec::new();
    let avoid_123 = || ConstraintSpec::avoiding_str("1-2-3").expect("valid");
    for n in 1..=TABLES_N_MAX {
        out.push(task(
            format!("lemmas/first-letter/row-sum/n={n:02}"),
            "counting::s_first_letter",
            move || {
                let row: Result<BigInt> = (1..=n).map(|t| s_first_letter(n, t)).sum();
                compare_one(row, Ok(catalan_numbers(n).swap_remove(n)))
            },
        ));
    }
    for n in 1..=n_max {
        out.push(task(
            format!("lemmas/first-letter/oracle/n={n:02}"),
            "counting::s_first_letter",
            move || {
                compare_cells((1..=n).map(|t| {
                    let direct = d.oracle().count_where(&avoid_123(), n, |w| w[0] as usize == t);
                    (format!("t={t}"), s_first_letter(n, t), direct)
                }))
            },
        ));
    }
    for dir in [Inc, Dec] {
        for k in 1..=kl_max {
            out.push(task(
                format!("lemmas/one-sided/1-2-3/{dir}/k={k}"),
                format!("counting::count_123_one_sided({dir}, {k})"),
                move || {
                    let spec = avoid_123().with_begin(dir.window(k)).expect("valid");
                    let f = (0..=n_max).map(|n| count_123_one_sided(n, dir, k)).collect();
                    compare(f, oracle_seq(d, &spec, n_max))
                },
            ));
        }
    }
    for (b, e) in dirs() {
        for k in 1..=kl_max {
            for l in 1..=kl_max {
                out.push(task(
                    format!("lemmas/two-sided/1-2-3/{b}/{e}/k={k}/l={l}"),
                    format!("counting::count_123_two_sided({b}, {e}, {k}, {l})"),
                    move || {
                        let f = (0..=n_max).map(|n| count_123_two_sided(n, b, e, k, l)).collect();
                        compare(f, oracle_seq(d, &windowed("1-2-3", b, k, e, l), n_max))
                    },
                ));
            }
        }
    }
    for n in 2..=n_max {
        out.push(task(format!("lemmas/g/n={n:02}"), "counting::g_aux", move || {
            compare_cells((1..=n).flat_map(|a| (1..=n).map(move |b| (a, b))).map(|(a, b)| {
                let direct = d
                    .oracle()
                    .count_where(&avoid_123(), n, |w| w[0] as usize == a && w[n - 1] as usize == b);
                (format!("a={a} b={b}"), g_aux(n, a, b), direct)
            }))
        }));
        for k in 1..=kl_max {
            for l in 1..=kl_max {
                if k + l > n {
                    continue;
                }
                out.push(task(
                    format!("lemmas/h/n={n:02}/k={k}/l={l}"),
                    "counting::h_aux",
                    move || {
                        let dec =
                            |w: &[u8], from: usize, len: usize| w[from..from + len].windows(2).all(|p| p[0] > p[1]);
                        compare_cells((1..=n).flat_map(|t| (1..=n).map(move |s| (t, s))).map(|(t, s)| {
                            let direct = d.oracle().count_where(&avoid_123(), n, |w| {
                                w[k - 1] as usize == t && w[n - l] as usize == s && dec(w, 0, k) && dec(w, n - l, l)
                            });
                            (format!("t={t} s={s}"), h_aux(n, k, l, t, s), direct)
                        }))
                    },
                ));
            }
        }
    }
    out
}

fn section9(d: &Dispatcher, n_max: usize, kl_max: usize) -> Vec<Task<'_>> {
    let mut out = Vec::new();
    let family = "12-3,21-3/inc/inc".parse().expect("registered");
    for k in 1..=2 {
        for l in 1..=2 {
            out.push(task(
                format!("section9/double-avoidance/k={k}/l={l}"),
                format!("series::egf_formula({family}, {k}, {l})"),
                move || {
                    let s = egf_formula(&family, k, l, EGF_DEFAULT_ORDER.max(n_max + 1));
                    compare(
                        s.and_then(|s| counts_from_series(&s, n_max)),
                        oracle_seq(d, &family.spec(k, l), n_max),
                    )
                },
            ));
        }
    }
    let p: GeneralizedPattern = "12-3".parse().expect("valid");
    for k in 1..=kl_max.max(3) + 1 {
        let p = p.clone();
        out.push(task(
            format!("section9/exactly-once/k={k}"),
            format!("counting::exactly_once_identities(n, {k})"),
            move || {
                let f = (3..=n_max).map(|n| exactly_once_identities(n, k, d.oracle())).collect();
                let one = Permutation::increasing(1);
                let o = (3..=n_max)
                    .map(|n| {
                        d.oracle()
                            .count_exactly(&p, 1, Some(&Permutation::increasing(k)), Some(&one), n)
                    })
                    .collect();
                compare(f, o)
            },
        ));
    }
    out
}

fn recurrences(d: &Dispatcher, n_max: usize, kl_max: usize) -> Vec<Task<'_>> {
    let mut out = Vec::new();
    for family in TwoSidedFamily::registered() {
        for k in 1..=kl_max {
            for l in 1..=kl_max {
                out.push(task(
                    format!("recurrences/{family}/k={k}/l={l}"),
                    format!("counting::recurrence_two_sided({family}, {k}, {l})"),
                    move || {
                        let r = recurrence_two_sided(&family, k, l, n_max, d.oracle()).map(|r| r.values);
                        compare(r, oracle_seq(d, &family.spec(k, l), n_max))
                    },
                ));
            }
        }
    }
    let shift: TwoSidedFamily = "1-32/inc/dec".parse().expect("registered");
    for l in 2..=kl_max.max(2) {
        out.push(task(
            format!("recurrences/derivative-shift/1-32/l={l}"),
            "counting::recurrence_two_sided(1-32/inc/dec)",
            move || {
                let top = n_max.max(l);
                let shifted = recurrence_two_sided(&shift, 1, l, top, d.oracle()).map(|r| r.values[l - 1..].to_vec());
                let flat = recurrence_two_sided(&shift, 1, 1, top + 1 - l, d.oracle()).map(|r| r.values);
                compare(shifted, flat)
            },
        ));
    }
    out
}

fn all_3_patterns() -> Vec<GeneralizedPattern> {
    let mut out = Vec::new();
    for letters in Permutation::all(3) {
        for mask in 0..4u8 {
            let adjacent = vec![mask & 1 != 0, mask & 2 != 0];
            out.push(GeneralizedPattern::new(letters.clone(), adjacent).expect("length matches"));
        }
    }
    out
}

fn perms_upto(n_max: usize) -> impl Iterator<Item = Permutation> {
    (0..=n_max).flat_map(Permutation::all)
}

fn properties(d: &Dispatcher, n_max: usize) -> Vec<Task<'_>> {
    let mut out = Vec::new();
    for p in all_3_patterns() {
        out.push(task(
            format!("properties/symmetry/{p}"),
            "pattern::occurrences",
            move || {
                let (r, c) = (p.reverse(), p.complement());
                let bad = perms_upto(PROPERTY_N_MAX).find(|pi| {
                    let o = p.occurrences(pi);
                    o != r.occurrences(&pi.reverse())
                        || o != c.occurrences(&pi.complement())
                        || o != p.reverse_complement().occurrences(&pi.reverse_complement())
                });
                Outcome::truth(
                    bad.is_none(),
                    bad.map_or_else(|| "all permutations".to_string(), |pi| format!("differs at {pi}")),
                    format!("n <= {PROPERTY_N_MAX}"),
                )
            },
        ));
    }
    for n in 0..=PROPERTY_N_MAX {
        out.push(task(
            format!("properties/classical-sum/n={n}"),
            "pattern::occurrences",
            move || {
                let classical: Vec<GeneralizedPattern> = Permutation::all(3)
                    .map(|q| GeneralizedPattern::classical(q).expect("length 3"))
                    .collect();
                let want = binomial(n as i64, 3);
                let bad = Permutation::all(n)
                    .find(|pi| BigInt::from(classical.iter().map(|p| p.occurrences(pi)).sum::<u64>()) != want);
                Outcome::truth(
                    bad.is_none(),
                    bad.map_or_else(|| format!("every sum {want}"), |pi| format!("differs at {pi}")),
                    format!("binom({n},3) = {want}"),
                )
            },
        ));
    }
    for letters in Permutation::all(3) {
        out.push(task(
            format!("properties/flag-monotone/{letters}"),
            "pattern::occurrences",
            move || {
                let pats: Vec<GeneralizedPattern> = all_3_patterns()
                    .into_iter()
                    .filter(|p| *p.letters() == letters)
                    .collect();
                let weaker = |a: &GeneralizedPattern, b: &GeneralizedPattern| {
                    a.adjacent().iter().zip(b.adjacent()).all(|(x, y)| !*x || *y)
                };
                let bad = perms_upto(PROPERTY_N_MAX).find(|pi| {
                    pats.iter().any(|a| {
                        pats.iter()
                            .any(|b| weaker(a, b) && b.occurrences(pi) > a.occurrences(pi))
                    })
                });
                Outcome::truth(
                    bad.is_none(),
                    bad.map_or_else(|| "monotone".to_string(), |pi| format!("violated at {pi}")),
                    format!("n <= {PROPERTY_N_MAX}"),
                )
            },
        ));
    }
    out.push(task(
        "properties/begin-end-reverse".to_string(),
        "perm::begins_with",
        move || {
            let windows: Vec<Permutation> = (1..=3).flat_map(Permutation::all).collect();
            let bad = perms_upto(PROPERTY_N_MAX).find(|pi| {
                windows.iter().any(|q| {
                    pi.begins_with(q).expect("nonempty") != pi.reverse().ends_with(&q.reverse()).expect("nonempty")
                })
            });
            Outcome::truth(
                bad.is_none(),
                bad.map_or_else(|| "equivalent".to_string(), |pi| format!("differs at {pi}")),
                format!("n <= {PROPERTY_N_MAX}"),
            )
        },
    ));
    for (dashed, classical) in [("2-13", "2-1-3"), ("13-2", "1-3-2")] {
        out.push(task(
            format!("properties/same-avoiders/{dashed}"),
            "pattern::avoids",
            move || {
                let a: GeneralizedPattern = dashed.parse().expect("valid");
                let b: GeneralizedPattern = classical.parse().expect("valid");
                let top = n_max.min(8);
                let bad = perms_upto(top).find(|pi| a.avoids(pi) != b.avoids(pi));
                Outcome::truth(
                    bad.is_none(),
                    bad.map_or_else(|| format!("same as {classical}"), |pi| format!("differs at {pi}")),
                    format!("n <= {top}"),
                )
            },
        ));
    }
    let order = OGF_DEFAULT_ORDER;
    out.push(task(
        "properties/catalan/functional-equation".to_string(),
        "series::catalan_series",
        move || {
            let c = catalan_series(order);
            let lhs = &c * &(RationalSeries::one(order) - c.shift(1));
            Outcome::truth(
                lhs == RationalSeries::one(order),
                "C(1 - xC)",
                format!("1 to order {order}"),
            )
        },
    ));
    out.push(task(
        "properties/catalan/square".to_string(),
        "series::catalan_series",
        move || {
            let c = catalan_series(order);
            let lhs = (&c * &c).shift(1);
            let rhs = c.add_constant(BigRational::from_integer((-1).into()));
            Outcome::truth(lhs == rhs, "xC^2", format!("C - 1 to order {order}"))
        },
    ));
    out.push(task(
        "properties/series/differentiate-integrate".to_string(),
        "series::Series",
        move || {
            let c = catalan_series(order).add_constant(BigRational::from_integer((-1).into()));
            let exact = c.differentiate().integrate() == c;
            let f = egf_formula(&"1-32/inc/inc".parse().expect("registered"), 2, 2, 16).expect("registered");
            let f = FloatSeries::from_fn(f.order(), |n| if n == 0 { 0.0 } else { f.coeffs()[n] });
            let residual = f.differentiate().integrate().max_abs_diff(&f);
            Outcome::truth(
                exact && residual < 1e-12,
                format!("float residual {residual:e}"),
                "exact for rationals, < 1e-12 for floats",
            )
        },
    ));
    let oracle_n = n_max.min(8);
    for spec in ["1-3-2;12;123", "12-3;21;", "1-23,2-31;;21", "123;321;12"] {
        out.push(task(
            format!("properties/reverse-complement/{spec}"),
            "oracle::count",
            move || {
                let s = parse_short(spec);
                let rc = s.reverse_complement();
                let a = (0..=oracle_n).map(|n| d.oracle().count(&s, n)).collect();
                let b = (0..=oracle_n).map(|n| d.oracle().count(&rc, n)).collect();
                compare(a, b)
            },
        ));
    }
    for n in 0..=n_max.min(PROPERTY_N_MAX) {
        out.push(task(
            format!("properties/exactly-partition/n={n}"),
            "oracle::count_exactly",
            move || {
                let p: GeneralizedPattern = "1-23".parse().expect("valid");
                let max_occ = binomial(n as i64, 3).try_into().unwrap_or(0u64);
                let total: Result<BigInt> = (0..=max_occ)
                    .map(|r| d.oracle().count_exactly(&p, r, None, None, n))
                    .sum();
                compare_one(total, Ok(factorial(n)))
            },
        ));
    }
    #[cfg(feature = "parallel")]
    out.push(task(
        "properties/schedules-agree".to_string(),
        "oracle::count_with",
        move || {
            use crate::oracle::Schedule;
            let s = parse_short("1-3-2;;");
            let n = n_max.min(9);
            compare_one(
                d.oracle().count_with(&s, n, Schedule::Sequential),
                d.oracle().count_with(&s, n, Schedule::Parallel),
            )
        },
    ));
    for spec in ENGINE_AGREEMENT {
        out.push(task(
            format!("properties/engines/{spec}"),
            "engine::Dispatcher",
            move || engines_agree(d, &parse_short(spec), n_max),
        ));
    }
    out
}

/// Specs known to more than one engine.
const ENGINE_AGREEMENT: [&str; 10] = [
    "123,231;;",
    "132,312;;",
    "1-3-2;12;123",
    "2-1-3;21;",
    "1-2-3;21;12",
    "1-2-3;;",
    "213;12;21",
    "1-32;12;21",
    "12-3;123;",
    "123;321;21",
];

/// `avoid;begin;end` with empty fields for absent windows.
fn parse_short(s: &str) -> ConstraintSpec {
    let mut parts = s.split(';');
    let avoid = parts.next().unwrap_or_default();
    let mut spec = ConstraintSpec::avoiding_str(avoid).expect("valid patterns");
    if let Some(b) = parts.next().filter(|b| !b.is_empty()) {
        spec = spec.with_begin(b.parse().expect("valid")).expect("nonempty");
    }
    if let Some(e) = parts.next().filter(|e| !e.is_empty()) {
        spec = spec.with_end(e.parse().expect("valid")).expect("nonempty");
    }
    spec
}

fn engines_agree(d: &Dispatcher, spec: &ConstraintSpec, n_max: usize) -> Outcome {
    let engines = d.available(spec, n_max);
    if engines.len() < 2 {
        return Outcome::truth(false, format!("only {engines:?}"), "at least two engines");
    }
    let results: Vec<(Engine, Result<Vec<BigInt>>)> = engines
        .iter()
        .map(|&e| (e, d.sequence(e, spec, n_max).map(|r| r.values)))
        .collect();
    let first = &results[0].1;
    let ok = first.is_ok() && results.iter().all(|(_, r)| r.as_ref().ok() == first.as_ref().ok());
    let names: Vec<&str> = engines.iter().map(|e| e.as_str()).collect();
    let lhs = results
        .iter()
        .map(|(e, r)| format!("{e}:{}", show(r)))
        .collect::<Vec<_>>()
        .join(" ");
    Outcome::truth(ok, lhs, format!("agreement of {}", names.join(",")))
}

fn run_tasks(tasks: Vec<Task<'_>>) -> Vec<Check> {
    let exec = |t: &Task<'_>| {
        let o = (t.run)();
        Check {
            id: t.id.clone(),
            status: o.status,
            lhs: o.lhs,
            rhs: o.rhs,
            location: t.location.clone(),
        }
    };
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        tasks.par_iter().map(exec).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        tasks.iter().map(exec).collect()
    }
}

fn tasks_for<'a>(suite: Suite, d: &'a Dispatcher, config: &VerifyConfig) -> Vec<Task<'a>> {
    let (n, kl) = (config.n_max(suite), config.kl_max());
    match suite {
        Suite::Tables => tables(d, n),
        Suite::Ogf => ogf(d, n, kl),
        Suite::Egf => egf(d, n, kl),
        Suite::Lemmas => lemmas(d, n, kl),
        Suite::Section9 => section9(d, n, kl),
        Suite::Recurrences => recurrences(d, n, kl),
        Suite::Properties => properties(d, n),
        Suite::All => Suite::EACH.into_iter().flat_map(|s| tasks_for(s, d, config)).collect(),
    }
}

/// Runs one suite. Fails only on bad bounds; failing identities go in the report.
pub fn run_suite(suite: Suite, d: &Dispatcher, config: &VerifyConfig) -> Result<VerificationReport> {
    let n = config.n_max(suite);
    if n > d.oracle().n_max() {
        return Err(Error::AboveCap {
            n,
            cap: d.oracle().n_max(),
        });
    }
    if config.kl_max() == 0 {
        return Err(Error::OutOfRange {
            what: "kl_max",
            detail: "window lengths start at 1".to_string(),
        });
    }
    Ok(VerificationReport::new(suite, run_tasks(tasks_for(suite, d, config))))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::EACH.into_iter().chain([Suite::All]) {
            assert_eq!(s.as_str().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn tables_suite_has_33_checks() {
        let d = Dispatcher::default();
        let r = run_suite(Suite::Tables, &d, &VerifyConfig::default()).unwrap();
        assert_eq!(r.checks.len(), 33);
        assert!(r.passed(), "{r}");
        assert!(r.checks.windows(2).all(|w| w[0].id < w[1].id));
    }

    #[test]
    fn short_specs_parse() {
        let s = parse_short("1-3-2;12;123");
        assert_eq!(s.canonical(), "avoid=1-3-2;begin=12;end=123");
        assert!(parse_short("123,231;;").begin().is_none());
    }
}
