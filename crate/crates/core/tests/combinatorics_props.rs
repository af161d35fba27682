use nchilb_core::steinberg::{self, AuditMode, Permutation};
use nchilb_core::trees::{self, PavingKind};
use nchilb_core::{qtools, LaurentPolynomial as L, Tree, Word};
use num_bigint::BigUint;
use proptest::prelude::*;

/// Grows a tree by attaching children at positions picked from `choices`.
fn grow(m: u32, choices: &[(usize, u32)]) -> Tree {
    let mut words = vec![Word::root()];
    for &(at, k) in choices {
        let child = words[at % words.len()].child(1 + k % m);
        if !words.contains(&child) {
            words.push(child);
        }
    }
    Tree::new(m, words).unwrap()
}

fn tree() -> impl Strategy<Value = Tree> {
    (1u32..4, prop::collection::vec((any::<usize>(), any::<u32>()), 0..7))
        .prop_map(|(m, c)| grow(m, &c))
}

fn permutation() -> impl Strategy<Value = Permutation> {
    (0usize..8)
        .prop_flat_map(|d| Just((1..=d).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|v| Permutation::new(v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn graft_inverts_ungraft(t in tree()) {
        let branches = trees::ungraft(&t).unwrap();
        prop_assert_eq!(branches.len(), t.arity() as usize);
        prop_assert_eq!(branches.iter().map(Tree::len).sum::<usize>() + 1, t.len());
        prop_assert_eq!(trees::graft(t.arity(), &branches).unwrap(), t.clone());
        prop_assert!(trees::d_recursion_check(&t).unwrap());
    }

    #[test]
    fn punctual_dimension_counts_d_set(t in tree()) {
        prop_assert_eq!(trees::cell_dim_punctual(&t), trees::d_set(&t).len());
        prop_assert_eq!(trees::cell_dim_full(&t), trees::full_cell_triples(&t).len());
        prop_assert!(trees::cell_dim_punctual(&t) <= trees::cell_dim_full(&t));
        let m = t.arity() as usize;
        let d = t.len();
        prop_assert!(trees::cell_dim_punctual(&t) <= (m - 1) * d * d.saturating_sub(1) / 2);
    }

    #[test]
    fn hook_formula_counts_extensions(t in tree()) {
        let all = trees::linear_extensions(&t, 100_000).unwrap();
        prop_assert_eq!(BigUint::from(all.len()), trees::linear_extension_count(&t));
        prop_assert!(all.iter().all(|o| o.is_compatible_with(&t)));
    }

    #[test]
    fn triangle_sort_is_a_permutation_of_words(t in tree()) {
        let mut sorted = trees::triangle_sort(&t);
        prop_assert_eq!(sorted.first(), t.words().first());
        sorted.sort();
        prop_assert_eq!(sorted.as_slice(), t.words());
    }

    #[test]
    fn inversions_match_definition(s in permutation()) {
        let v = s.images();
        let mut brute = 0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] > v[j] {
                    brute += 1;
                }
            }
        }
        prop_assert_eq!(steinberg::inversions(&s), brute);
        let mut inverse = vec![0; v.len()];
        for (i, &x) in v.iter().enumerate() {
            inverse[x - 1] = i + 1;
        }
        prop_assert_eq!(steinberg::inversions(&Permutation::new(inverse).unwrap()), brute);
    }

    #[test]
    fn stratum_dimension_decreases_with_length(m in 2u32..5, s in permutation()) {
        let d = s.degree();
        let dim = steinberg::stratum_dimension(m, &s);
        let top = steinberg::stratum_dimension(m, &Permutation::identity(d));
        prop_assert_eq!(dim.total - dim.quotient, (d * d) as i64);
        prop_assert_eq!(top.quotient - dim.quotient, (m as i64 - 1) * steinberg::inversions(&s) as i64);
        prop_assert_eq!(s.is_identity(), dim == top);
    }

    #[test]
    fn q_binomial_symmetry_and_pascal(d in 1usize..9, e in 0usize..9, w in 1u32..4) {
        let e = e % (d + 1);
        let b = |d, e| qtools::q_binomial(d, e, w).unwrap();
        prop_assert_eq!(b(d, e), b(d, d - e));
        if e >= 1 && e < d {
            let pascal = b(d - 1, e - 1) + b(d - 1, e).shift(w as i64 * e as i64);
            prop_assert_eq!(b(d, e), pascal);
        }
    }
}

#[test]
fn enumeration_is_sorted_distinct_and_counted() {
    for m in 1..=3 {
        for d in 0..=6 {
            let all = trees::enumerate_trees(m, d, 1_000_000).unwrap();
            assert_eq!(BigUint::from(all.len()), trees::fuss_catalan(m, d));
            assert!(all.windows(2).all(|w| w[0] < w[1]));
            assert!(all.iter().all(|t| t.len() == d && t.arity() == m));
        }
    }
}

#[test]
fn linear_extensions_sum_to_resolution_euler() {
    for m in 1..=3u32 {
        for d in 0..=6 {
            let total: BigUint = trees::census(m, d, 1_000_000)
                .unwrap()
                .iter()
                .map(|r| r.linear_extensions.clone())
                .sum();
            let product: BigUint = (0..d as u64).map(|i| BigUint::from((m as u64 - 1) * i + 1)).product();
            assert_eq!(total, product, "m={m} d={d}");
        }
    }
}

#[test]
fn grouped_and_exhaustive_audits_agree() {
    for m in 1..=4 {
        for d in 0..=7 {
            let g = steinberg::smallness_audit(m, d, AuditMode::Grouped, 0).unwrap();
            let e = steinberg::smallness_audit(m, d, AuditMode::Exhaustive, 10_000).unwrap();
            assert_eq!(g, e);
            assert!(g.small);
            assert_eq!(g.unique_top, m >= 2 || d <= 1);
        }
    }
}

#[test]
fn full_paving_degrees() {
    for m in 1..=3u32 {
        let s = trees::paving_series(m, 5, PavingKind::Full, 1_000_000).unwrap();
        for (d, c) in s.coeffs().iter().enumerate() {
            let d = d as i64;
            assert_eq!(c.degree(), Some((m as i64 - 1) * d * d + d));
            assert_eq!(c.leading_coefficient(), Some(&1.into()));
        }
    }
    assert_eq!(
        trees::paving_series(2, 1, PavingKind::Full, 10).unwrap().coeff(1),
        &L::q_pow(2)
    );
}
