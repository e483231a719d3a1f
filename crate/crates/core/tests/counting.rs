use num_bigint::BigInt;
use vincular::counting::*;
use vincular::{ConstraintSpec, Direction, Oracle, Permutation};

use Direction::{Dec, Inc};

fn oracle() -> Oracle {
    Oracle::new()
}

fn windowed(pattern: &str, b: Direction, k: usize, e: Direction, l: usize) -> ConstraintSpec {
    ConstraintSpec::avoiding_str(pattern)
        .unwrap()
        .with_begin(b.window(k))
        .unwrap()
        .with_end(e.window(l))
        .unwrap()
}

#[test]
fn recurrence_families_match_oracle() {
    let o = oracle();
    for family in TwoSidedFamily::registered() {
        for k in 1..=3 {
            for l in 1..=3 {
                let rec = recurrence_two_sided(&family, k, l, 9, &o).unwrap();
                let want = o.sequence(&family.spec(k, l), 9).unwrap();
                assert_eq!(rec.values, want.values, "{family} k={k} l={l}");
            }
        }
    }
}

#[test]
fn derivative_shift_for_1_32() {
    let o = oracle();
    let f: TwoSidedFamily = "1-32/inc/dec".parse().unwrap();
    let shifted = recurrence_two_sided(&f, 1, 3, 9, &o).unwrap();
    let flat = recurrence_two_sided(&f, 1, 1, 9, &o).unwrap();
    assert_eq!(shifted.values[7], flat.values[5]);
    assert_eq!(shifted.values[7], o.count(&f.spec(1, 3), 7).unwrap());
}

#[test]
fn vacuous_windows_give_all_nonempty_avoiders() {
    let o = oracle();
    for family in TwoSidedFamily::registered() {
        let rec = recurrence_two_sided(&family, 1, 1, 8, &o).unwrap();
        let all = o
            .sequence(&ConstraintSpec::avoiding_str(family.pattern.as_str()).unwrap(), 8)
            .unwrap();
        assert_eq!(rec.values[0], BigInt::from(0));
        assert_eq!(rec.values[1..], all.values[1..], "{family}");
    }
}

#[test]
fn one_sided_123_matches_oracle() {
    let o = oracle();
    for dir in [Inc, Dec] {
        for k in 1..=4 {
            let spec = ConstraintSpec::avoiding_str("1-2-3")
                .unwrap()
                .with_begin(dir.window(k))
                .unwrap();
            for n in 0..=9 {
                assert_eq!(
                    count_123_one_sided(n, dir, k).unwrap(),
                    o.count(&spec, n).unwrap(),
                    "{dir} k={k} n={n}"
                );
            }
        }
    }
}

#[test]
fn two_sided_123_matches_oracle() {
    let o = oracle();
    for b in [Inc, Dec] {
        for e in [Inc, Dec] {
            for k in 1..=3 {
                for l in 1..=3 {
                    let spec = windowed("1-2-3", b, k, e, l);
                    for n in 0..=9 {
                        assert_eq!(
                            count_123_two_sided(n, b, e, k, l).unwrap(),
                            o.count(&spec, n).unwrap(),
                            "{b}/{e} k={k} l={l} n={n}"
                        );
                    }
                }
            }
        }
    }
}

fn decreasing_window(w: &[u8], from: usize, len: usize) -> bool {
    w[from..from + len].windows(2).all(|p| p[0] > p[1])
}

#[test]
fn g_lemma_matches_direct_count() {
    let o = oracle();
    let spec = ConstraintSpec::avoiding_str("1-2-3").unwrap();
    for n in 2..=8 {
        for a in 1..=n {
            for b in 1..=n {
                let direct = o
                    .count_where(&spec, n, |w| w[0] as usize == a && w[n - 1] as usize == b)
                    .unwrap();
                assert_eq!(g_aux(n, a, b).unwrap(), direct, "n={n} a={a} b={b}");
            }
        }
    }
}

#[test]
fn h_lemma_matches_direct_count() {
    let o = oracle();
    let spec = ConstraintSpec::avoiding_str("1-2-3").unwrap();
    for n in 2..=8 {
        for k in 1..=3 {
            for l in 1..=3 {
                if k + l > n {
                    continue;
                }
                for t in 1..=n {
                    for s in 1..=n {
                        let direct = o
                            .count_where(&spec, n, |w| {
                                w[k - 1] as usize == t
                                    && w[n - l] as usize == s
                                    && decreasing_window(w, 0, k)
                                    && decreasing_window(w, n - l, l)
                            })
                            .unwrap();
                        assert_eq!(h_aux(n, k, l, t, s).unwrap(), direct, "n={n} k={k} l={l} t={t} s={s}");
                    }
                    if t < n {
                        assert_eq!(h_aux(n, k, l, t, t + 1).unwrap(), h_aux(n, k, l, t + 1, t).unwrap());
                    }
                }
            }
        }
    }
}

#[test]
fn theorem_on_single_occurrences() {
    let o = oracle();
    let p = "12-3".parse().unwrap();
    let one = Permutation::increasing(1);
    for n in 3..=9 {
        for k in 1..=4 {
            let lhs = o
                .count_exactly(&p, 1, Some(&Permutation::increasing(k)), Some(&one), n)
                .unwrap();
            assert_eq!(exactly_once_identities(n, k, &o).unwrap(), lhs, "n={n} k={k}");
        }
    }
    assert!(exactly_once_identities(2, 1, &o).is_err());
    assert_eq!(exactly_once_identities(5, 3, &o).unwrap(), BigInt::from(6));
    assert_eq!(exactly_once_identities(6, 4, &o).unwrap(), BigInt::from(0));
}

#[test]
fn pair_tables_match_oracle() {
    let o = oracle();
    for id in PairId::ALL {
        let (a, b) = id.patterns();
        let spec = ConstraintSpec::avoiding_str(&format!("{a},{b}")).unwrap();
        assert_eq!(
            pair_avoidance(id, 10).values,
            o.sequence(&spec, 10).unwrap().values,
            "{id}"
        );
    }
}

#[test]
fn bell_numbers_count_1_23_avoiders() {
    let o = oracle();
    let spec = ConstraintSpec::avoiding_str("1-23")
        .unwrap()
        .with_begin(Permutation::increasing(1))
        .unwrap();
    for n in 1..=8 {
        assert_eq!(special_number(Special::Bell, n), o.count(&spec, n).unwrap());
    }
}
