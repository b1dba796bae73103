use proptest::prelude::*;

use weakid_core::bijection::{carray_to_dtableau, dtableau_to_carray, first_row_length};
use weakid_core::carray::{
    classify, enumerate_c_arrays, enumerate_normal, normalize, star, CArray, Class, SignedCArray,
    TwoRowArray,
};
use weakid_core::krs::{delete, insert};
use weakid_core::oracle::{phi_lincomb, phi_linearized};
use weakid_core::straighten::straighten;
use weakid_core::tableaux::{ssyt_with_max_entry, Content, Convention, Shape, Tableau};
use weakid_core::{q, Sign};

/// Content vectors on `k` symbols summing to exactly `n`.
fn contents_of_size(k: usize, n: usize, max_count: usize) -> Vec<Content> {
    fn go(k: usize, n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Content>) {
        if prefix.len() == k {
            if n == 0 {
                out.push(Content::new(prefix.clone()));
            }
            return;
        }
        for x in 0..=n.min(max) {
            prefix.push(x);
            go(k, n - x, max, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(k, n, max_count, &mut Vec::new(), &mut out);
    out
}

fn all_c_arrays(max_m: usize, max_entry: usize) -> Vec<CArray> {
    (0..=max_m)
        .flat_map(|m| contents_of_size(max_entry, 2 * m, 2 * m))
        .flat_map(|c| enumerate_c_arrays(&c))
        .collect()
}

fn longest_weakly_increasing(word: &[u32]) -> usize {
    let mut best = vec![0usize; word.len()];
    for i in 0..word.len() {
        best[i] = 1
            + (0..i)
                .filter(|&j| word[j] <= word[i])
                .map(|j| best[j])
                .max()
                .unwrap_or(0);
    }
    best.into_iter().max().unwrap_or(0)
}

#[test]
fn bijection_round_trip_from_arrays() {
    let arrays = all_c_arrays(3, 6);
    assert!(arrays.len() > 300, "{}", arrays.len());
    for s in arrays {
        let t = carray_to_dtableau(&s);
        assert!(t.is_d_tableau(), "{s}");
        assert_eq!(t.content(), s.content());
        assert_eq!(dtableau_to_carray(&t).unwrap(), s);
    }
}

#[test]
fn bijection_round_trip_from_tableaux() {
    let mut seen = 0;
    for m in 0..=4 {
        for shape in Shape::double_partitions(m) {
            for t in ssyt_with_max_entry(&shape, 6, Convention::English) {
                let s = dtableau_to_carray(&t).unwrap();
                assert_eq!(
                    classify(s.as_array()),
                    if s.is_normal() {
                        Class::Normal
                    } else {
                        Class::CArray
                    }
                );
                assert_eq!(carray_to_dtableau(&s), t);
                seen += 1;
            }
        }
    }
    assert_eq!(seen, all_c_arrays(4, 6).len());
}

#[test]
fn first_row_is_longest_weakly_increasing_bottom() {
    for s in all_c_arrays(4, 8) {
        assert_eq!(
            first_row_length(&s),
            longest_weakly_increasing(&s.bottom()),
            "{s}"
        );
    }
}

#[test]
fn normal_arrays_have_two_column_shapes() {
    for s in all_c_arrays(4, 6) {
        let shape = carray_to_dtableau(&s).shape();
        let two_column = shape.parts().iter().all(|&p| p <= 2);
        assert_eq!(
            s.is_normal(),
            two_column && s.content().max_count() <= 2,
            "{s}"
        );
    }
}

#[test]
fn straightening_preserves_the_invariant_image() {
    for m in 1..=3 {
        for content in contents_of_size(6, 2 * m, 2) {
            for s in enumerate_c_arrays(&content) {
                let comb = straighten(s.as_array());
                assert!(comb.is_normal());
                let left = phi_linearized(&[(q(1), s.as_array().clone())]).unwrap();
                assert_eq!(left, phi_lincomb(&comb).unwrap(), "{s}");
            }
        }
    }
}

#[test]
fn normal_sets_are_invariant_under_content_permutation() {
    for content in contents_of_size(4, 6, 2) {
        let mut reversed = content.counts().to_vec();
        reversed.resize(4, 0);
        reversed.reverse();
        assert_eq!(
            enumerate_normal(&content).len(),
            enumerate_normal(&Content::new(reversed)).len()
        );
    }
}

fn semistandard_tableau() -> impl Strategy<Value = Tableau> {
    prop::collection::vec(1u32..=7, 0..12).prop_map(|word| {
        word.into_iter()
            .fold(Tableau::empty(), |t, x| insert(&t, x).unwrap().0)
    })
}

fn raw_array() -> impl Strategy<Value = TwoRowArray> {
    prop::collection::vec((1u32..=6, 1u32..=6), 0..5)
        .prop_map(|columns| TwoRowArray::from_columns(columns).unwrap())
}

proptest! {
    #[test]
    fn insertion_is_undone_by_deletion(t in semistandard_tableau(), x in 1u32..=8) {
        let (grown, row) = insert(&t, x).unwrap();
        prop_assert!(grown.is_semistandard_english());
        prop_assert_eq!(grown.size(), t.size() + 1);
        let (back, y) = delete(&grown, row).unwrap();
        prop_assert_eq!(back, t);
        prop_assert_eq!(y, x);
    }

    #[test]
    fn normalizing_twice_is_stable(s in raw_array()) {
        match normalize(&s) {
            SignedCArray::Zero => prop_assert!(s.columns().iter().any(|c| c.0 == c.1)),
            SignedCArray::Term(sign, c) => {
                prop_assert!(c.as_array().is_c_array());
                prop_assert_eq!(normalize(c.as_array()), SignedCArray::Term(Sign::Plus, c.clone()));
                let swaps = s.columns().iter().filter(|c| c.0 < c.1).count();
                prop_assert_eq!(sign, Sign::from_parity(swaps));
            }
        }
    }

    #[test]
    fn star_is_concatenation_up_to_order(a in raw_array(), b in raw_array()) {
        let (SignedCArray::Term(_, x), SignedCArray::Term(_, y)) = (normalize(&a), normalize(&b)) else {
            return Ok(());
        };
        let product = star(&x, &y);
        prop_assert_eq!(&product, &star(&y, &x));
        let mut columns = x.columns().to_vec();
        columns.extend_from_slice(y.columns());
        columns.sort();
        prop_assert_eq!(product.columns(), columns.as_slice());
    }
}
