use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use vincular::series::{FloatSeries, RationalSeries};
use vincular::{ConstraintSpec, GeneralizedPattern, Oracle, Permutation, Provenance, SequenceRecord, Symmetry};

fn perm(max_len: usize) -> impl Strategy<Value = Permutation> {
    (0..=max_len)
        .prop_flat_map(|n| Just((1..=n as u32).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|v| Permutation::new(v).unwrap())
}

fn perm_of_len(lens: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Permutation> {
    lens.prop_flat_map(|n| Just((1..=n as u32).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|v| Permutation::new(v).unwrap())
}

fn pattern(lens: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = GeneralizedPattern> {
    perm_of_len(lens).prop_flat_map(|p| {
        let gaps = p.len() - 1;
        proptest::collection::vec(any::<bool>(), gaps)
            .prop_map(move |adj| GeneralizedPattern::new(p.clone(), adj).unwrap())
    })
}

fn classical_three() -> Vec<GeneralizedPattern> {
    Permutation::all(3)
        .map(|p| GeneralizedPattern::classical(p).unwrap())
        .collect()
}

fn binom3(n: usize) -> u64 {
    if n < 3 {
        0
    } else {
        (n * (n - 1) * (n - 2) / 6) as u64
    }
}

fn small_spec() -> impl Strategy<Value = ConstraintSpec> {
    (
        proptest::collection::vec(pattern(3..=3), 1..=2),
        proptest::option::of(perm_of_len(1..=3)),
        proptest::option::of(perm_of_len(1..=3)),
    )
        .prop_map(|(avoid, begin, end)| {
            let mut spec = ConstraintSpec::avoiding(avoid);
            if let Some(q) = begin {
                spec = spec.with_begin(q).unwrap();
            }
            if let Some(r) = end {
                spec = spec.with_end(r).unwrap();
            }
            spec
        })
}

fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(num.into(), den.into())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn classical_occurrences_partition_triples(pi in perm(7)) {
        let total: u64 = classical_three().iter().map(|p| p.occurrences(&pi)).sum();
        prop_assert_eq!(total, binom3(pi.len()));
    }

    #[test]
    fn occurrences_survive_reverse_and_complement(p in pattern(1..=4), pi in perm(7)) {
        let n = p.occurrences(&pi);
        prop_assert_eq!(n, p.reverse().occurrences(&pi.reverse()));
        prop_assert_eq!(n, p.complement().occurrences(&pi.complement()));
    }

    #[test]
    fn adding_adjacency_never_adds_occurrences(p in pattern(2..=4), extra in proptest::collection::vec(any::<bool>(), 3), pi in perm(7)) {
        let stronger: Vec<bool> = p.adjacent().iter().zip(&extra).map(|(a, b)| *a || *b).collect();
        let q = GeneralizedPattern::new(p.letters().clone(), stronger).unwrap();
        prop_assert!(q.occurrences(&pi) <= p.occurrences(&pi));
    }

    #[test]
    fn begins_mirrors_ends(pi in perm_of_len(1..=7), q in perm_of_len(1..=7)) {
        prop_assume!(q.len() <= pi.len());
        prop_assert_eq!(pi.begins_with(&q).unwrap(), pi.reverse().ends_with(&q.reverse()).unwrap());
    }

    #[test]
    fn dashed_and_classical_2_13_agree(pi in perm(8)) {
        let dashed: GeneralizedPattern = "2-13".parse().unwrap();
        let classical: GeneralizedPattern = "2-1-3".parse().unwrap();
        prop_assert_eq!(dashed.avoids(&pi), classical.avoids(&pi));
    }

    #[test]
    fn rational_integrate_then_differentiate(coeffs in proptest::collection::vec((-50i64..50, 1i64..9), 1..24)) {
        let s = RationalSeries::from_coeffs(coeffs.iter().map(|(a, b)| rational(*a, *b)).collect());
        prop_assert_eq!(s.integrate().differentiate(), s.clone());
        let with_zero = s.add_constant(-s.coeffs()[0].clone());
        prop_assert_eq!(with_zero.differentiate().integrate(), with_zero);
    }

    #[test]
    fn float_integrate_then_differentiate(coeffs in proptest::collection::vec(-1.0f64..1.0, 1..16)) {
        let mut coeffs = coeffs;
        coeffs[0] = 0.0;
        let s = FloatSeries::from_coeffs(coeffs);
        prop_assert!(s.differentiate().integrate().max_abs_diff(&s) < 1e-12);
        prop_assert!(s.integrate().differentiate().max_abs_diff(&s) < 1e-12);
    }

    #[test]
    fn record_json_round_trips(values in proptest::collection::vec(any::<i128>(), 0..12), name in "[a-z0-9 /=-]{0,20}") {
        let rec = SequenceRecord {
            name,
            spec: "avoid=1-2-3".to_string(),
            provenance: Provenance::Oracle,
            values: values.into_iter().map(BigInt::from).collect(),
        };
        let json = serde_json::to_string(&rec).unwrap();
        prop_assert_eq!(serde_json::from_str::<SequenceRecord>(&json).unwrap(), rec);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn oracle_respects_reverse_complement(spec in small_spec(), n in 0usize..=8) {
        let o = Oracle::new();
        prop_assert_eq!(o.count(&spec, n).unwrap(), o.count(&spec.reverse_complement(), n).unwrap());
    }

    #[test]
    fn exact_occurrence_counts_sum_to_factorial(p in pattern(2..=3), n in 0usize..=7) {
        let o = Oracle::new();
        let most = Permutation::all(n).map(|pi| p.occurrences(&pi)).max().unwrap_or(0);
        let total: BigInt = (0..=most).map(|r| o.count_exactly(&p, r, None, None, n).unwrap()).sum();
        let factorial: BigInt = (1..=n).map(BigInt::from).product();
        prop_assert_eq!(total, factorial);
    }
}
