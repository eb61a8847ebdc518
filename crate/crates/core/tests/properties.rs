//! Property tests: polynomial arithmetic against a dense convolution oracle,
//! text-format round trips, insertion round trips on random inputs, and the
//! exhaustive order-independence of multi-value insertion.

use agkey::bijection::{insert_one, js_extract, js_insert};
use agkey::qseries::QPoly;
use agkey::{DistinctPartition, OverPart, Overpartition, Partition};
use proptest::prelude::*;

// -- dense oracle -----------------------------------------------------------

fn dense_from_pairs(pairs: &[(u64, i64)]) -> Vec<i64> {
    let mut coeffs = vec![
        0i64;
        pairs
            .iter()
            .map(|&(e, _)| e as usize + 1)
            .max()
            .unwrap_or(1)
    ];
    for &(exp, coeff) in pairs {
        coeffs[exp as usize] += coeff;
    }
    coeffs
}

fn dense_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn qpoly_from_pairs(pairs: &[(u64, i64)]) -> QPoly {
    QPoly::from_terms(pairs.iter().copied())
}

fn qpoly_from_dense(coeffs: &[i64]) -> QPoly {
    QPoly::from_terms(
        coeffs
            .iter()
            .enumerate()
            .map(|(exp, &coeff)| (exp as u64, coeff)),
    )
}

fn term_list() -> impl Strategy<Value = Vec<(u64, i64)>> {
    prop::collection::vec((0u64..40, -5i64..=5), 0..8)
}

proptest! {
    #[test]
    fn multiplication_matches_dense_convolution(a in term_list(), b in term_list()) {
        let sparse = qpoly_from_pairs(&a) * qpoly_from_pairs(&b);
        let dense = dense_mul(&dense_from_pairs(&a), &dense_from_pairs(&b));
        prop_assert_eq!(sparse, qpoly_from_dense(&dense));
    }

    #[test]
    fn ring_laws(a in term_list(), b in term_list(), c in term_list()) {
        let (a, b, c) = (qpoly_from_pairs(&a), qpoly_from_pairs(&b), qpoly_from_pairs(&c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, QPoly::zero());
    }
}

// -- random partitions ------------------------------------------------------

fn arb_overpartition() -> impl Strategy<Value = Overpartition> {
    (prop::collection::vec(0u64..10, 0..9), any::<u64>()).prop_map(|(mut values, mask)| {
        values.sort_unstable_by(|a, b| b.cmp(a));
        let mut parts = Vec::with_capacity(values.len());
        let mut run = 0usize;
        for (index, &value) in values.iter().enumerate() {
            let first_occurrence = index == 0 || values[index - 1] != value;
            let overlined = first_occurrence && {
                run += 1;
                mask >> (run % 64) & 1 == 1
            };
            parts.push(OverPart { value, overlined });
        }
        Overpartition::new(parts).expect("constructed to satisfy the invariants")
    })
}

fn arb_insertion_pair() -> impl Strategy<Value = (DistinctPartition, Partition)> {
    (prop::collection::vec(0u64..10, 0..9), any::<u64>()).prop_map(|(mut values, mask)| {
        values.sort_unstable_by(|a, b| b.cmp(a));
        let n = values.len();
        let mut alpha: Vec<u64> = (0..n as u64).filter(|m| mask >> m & 1 == 1).collect();
        alpha.reverse();
        (
            DistinctPartition::new(alpha).unwrap(),
            Partition::new(values).unwrap(),
        )
    })
}

proptest! {
    #[test]
    fn text_format_round_trips(lambda in arb_overpartition()) {
        let rendered = lambda.to_string();
        let parsed: Overpartition = rendered.parse().unwrap();
        prop_assert_eq!(parsed, lambda);
    }

    #[test]
    fn insertion_round_trips(pair in arb_insertion_pair()) {
        let (alpha, beta) = pair;
        let lambda = js_insert(&alpha, &beta).unwrap();
        prop_assert_eq!(lambda.size(), alpha.size() + beta.size());
        prop_assert_eq!(lambda.overline_count(), alpha.len());
        let expected_positions: Vec<usize> =
            alpha.parts().iter().rev().map(|&m| m as usize).collect();
        prop_assert_eq!(lambda.overlined_indices(), expected_positions);
        let (alpha_back, beta_back) = js_extract(&lambda);
        prop_assert_eq!(alpha_back, alpha);
        prop_assert_eq!(beta_back, beta);
    }

    #[test]
    fn extraction_inverts_on_arbitrary_overpartitions(lambda in arb_overpartition()) {
        let (alpha, beta) = js_extract(&lambda);
        prop_assert_eq!(js_insert(&alpha, &beta).unwrap(), lambda);
    }

    #[test]
    fn overlines_sit_below_their_left_neighbor(pair in arb_insertion_pair()) {
        let (alpha, beta) = pair;
        let lambda = js_insert(&alpha, &beta).unwrap();
        for index in 1..lambda.len() {
            let part = lambda.parts()[index];
            if part.overlined {
                prop_assert!(part.value < lambda.parts()[index - 1].value);
            }
        }
    }
}

// -- order independence -----------------------------------------------------

fn permutations(values: &[u64]) -> Vec<Vec<u64>> {
    if values.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (index, &chosen) in values.iter().enumerate() {
        let mut rest = values.to_vec();
        rest.remove(index);
        for mut tail in permutations(&rest) {
            tail.insert(0, chosen);
            out.push(tail);
        }
    }
    out
}

fn partitions_with_parts(n: usize, bound: u64) -> Vec<Vec<u64>> {
    fn rec(remaining: usize, bound: u64, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        for value in (0..=bound).rev() {
            prefix.push(value);
            rec(remaining - 1, value, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, bound, &mut Vec::new(), &mut out);
    out
}

/// Inserting the values of alpha in any order produces the same
/// overpartition; exhaustive for up to 6 parts.
#[test]
fn insertion_is_order_independent() {
    for n in 0..=6usize {
        for beta_parts in partitions_with_parts(n, 2) {
            let beta = Partition::new(beta_parts).unwrap();
            for subset in 0u64..(1 << n) {
                let values: Vec<u64> = (0..n as u64).filter(|m| subset >> m & 1 == 1).collect();
                let mut alpha_parts = values.clone();
                alpha_parts.reverse();
                let alpha = DistinctPartition::new(alpha_parts).unwrap();
                let reference = js_insert(&alpha, &beta).unwrap();
                for order in permutations(&values) {
                    let mut current = Overpartition::from(&beta);
                    for m in order {
                        current = insert_one(&current, m).unwrap();
                    }
                    assert_eq!(current, reference, "insertion order changed the result");
                }
            }
        }
    }
}
