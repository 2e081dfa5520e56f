//! Property tests for the group arithmetic and serialization layers.

use proptest::prelude::*;

use kr_strata::admissible::{enumerate_adm, AdmFilter};
use kr_strata::affine::{AffineElement, Cocharacter};
use kr_strata::weyl::{SignVector, SignedPermutation, SmallPermutation};

fn small_permutation(g: usize) -> impl Strategy<Value = SmallPermutation> {
    Just((1..=g).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|images| SmallPermutation::new(images).unwrap())
}

fn sign_vector(g: usize) -> impl Strategy<Value = SignVector> {
    proptest::collection::vec(0u8..=1, g).prop_map(|bits| SignVector::new(bits).unwrap())
}

fn signed_permutation(g: usize) -> impl Strategy<Value = SignedPermutation> {
    (sign_vector(g), small_permutation(g))
        .prop_map(|(u, sigma)| SignedPermutation::from_parts(&u, &sigma))
}

fn cocharacter(g: usize) -> impl Strategy<Value = Cocharacter> {
    (proptest::collection::vec(-3i64..=3, g), -3i64..=3).prop_map(move |(half, c)| {
        let mut coords = vec![0i64; 2 * g];
        for (i, &v) in half.iter().enumerate() {
            coords[i] = v;
            coords[2 * g - 1 - i] = c - v;
        }
        Cocharacter::new(coords).unwrap()
    })
}

fn affine_element(g: usize) -> impl Strategy<Value = AffineElement> {
    (cocharacter(g), signed_permutation(g)).prop_map(|(x0, w)| AffineElement::new(x0, w))
}

fn genus_and_parts() -> impl Strategy<Value = (SignVector, SmallPermutation)> {
    (1usize..=6).prop_flat_map(|g| (sign_vector(g), small_permutation(g)))
}

proptest! {
    #[test]
    fn split_inverts_assembly((u, sigma) in genus_and_parts()) {
        let w = SignedPermutation::from_parts(&u, &sigma);
        let (u2, sigma2) = w.parts();
        prop_assert_eq!(u, u2);
        prop_assert_eq!(sigma, sigma2);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn weyl_group_laws(w1 in signed_permutation(4), w2 in signed_permutation(4), w3 in signed_permutation(4)) {
        prop_assert_eq!(
            w1.compose(&w2).compose(&w3),
            w1.compose(&w2.compose(&w3))
        );
        prop_assert!(w1.inverse().compose(&w1).is_identity());
    }

    #[test]
    fn action_preserves_pair_sums(w in signed_permutation(3), v in cocharacter(3)) {
        let moved = w.act(&v);
        prop_assert_eq!(moved.pair_sum(), v.pair_sum());
        prop_assert_eq!(w.inverse().act(&moved), v);
    }

    #[test]
    fn affine_group_laws(x in affine_element(3), y in affine_element(3), z in affine_element(3)) {
        prop_assert_eq!(x.multiply(&y).multiply(&z), x.multiply(&y.multiply(&z)));
        prop_assert_eq!(x.inverse().multiply(&x), AffineElement::identity(3));
        prop_assert_eq!(
            x.multiply(&y).similitude_class(),
            x.similitude_class() + y.similitude_class()
        );
    }

    #[test]
    fn alcove_roundtrip(x in affine_element(3)) {
        let alcove = x.to_alcove();
        prop_assert!(alcove.is_g_alcove());
        prop_assert_eq!(AffineElement::from_alcove(&alcove).unwrap(), x);
    }

    #[test]
    fn reduced_word_reassembles(x in affine_element(2)) {
        let word = x.reduced_word();
        prop_assert_eq!(word.letters.len(), x.im_length());
        prop_assert_eq!(word.omega_power, x.similitude_class());
        prop_assert_eq!(word.assemble(), x);
    }
}

#[test]
fn canonical_ids_are_unique() {
    for g in 1..=3 {
        let all = enumerate_adm(g, &AdmFilter::none()).unwrap();
        let mut ids: Vec<String> = all.iter().map(|x| x.canonical_id()).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), all.len());
    }
}
