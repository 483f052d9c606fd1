use hmf::artinian::{
    ar_sequence, decompose_module, delta, generation_steps, mu, mu_by_cases, stable_hom, syzygy,
    LambdaContext,
};
use hmf::Ring;
use proptest::prelude::*;

fn pair(n: u32) -> impl Strategy<Value = (u32, u32, u32)> {
    (Just(n), 1..n, 1..n)
}

fn stable_indices() -> impl Strategy<Value = (u32, u32, u32)> {
    (2u32..=50).prop_flat_map(pair)
}

proptest! {
    #[test]
    fn mu_symmetries((n, i, j) in stable_indices()) {
        let m = mu(n, i, j).unwrap();
        prop_assert_eq!(m, mu_by_cases(n, i, j).unwrap());
        prop_assert_eq!(m, mu(n, j, i).unwrap());
        prop_assert_eq!(m, mu(n, n - i, n - j).unwrap());
        prop_assert_eq!(m, mu(n, j, n - i).unwrap());
        prop_assert!(m <= delta(n, i).unwrap().min(delta(n, j).unwrap()));
        prop_assert_eq!(mu(n, i, i).unwrap(), delta(n, i).unwrap());
    }

    #[test]
    fn syzygy_is_an_involution_compatible_with_hom((n, i, j) in stable_indices()) {
        let ctx = LambdaContext::new(&Ring::Integers.from_i64(3), n).unwrap();
        let oi = syzygy(&ctx, i).unwrap();
        prop_assert_eq!(oi, n - i);
        prop_assert_eq!(syzygy(&ctx, oi).unwrap(), i);
        let oj = syzygy(&ctx, j).unwrap();
        prop_assert_eq!(stable_hom(&ctx, oi, oj).unwrap(), stable_hom(&ctx, i, j).unwrap());
    }

    #[test]
    fn ar_sequences_are_additive((n, i, _j) in stable_indices()) {
        let ctx = LambdaContext::new(&Ring::Integers.from_i64(2), n).unwrap();
        let s = ar_sequence(&ctx, i).unwrap();
        prop_assert_eq!(s.middle.length(), 2 * i as u64);
    }
}

#[test]
fn delta_is_symmetric() {
    for n in 2..=50 {
        for i in 0..=n {
            assert_eq!(delta(n, i).unwrap(), delta(n, n - i).unwrap());
            assert_eq!(delta(n, i).unwrap(), i.min(n - i));
        }
    }
}

#[test]
fn decomposition_of_a_quotient_module() {
    let two = Ring::Integers.from_i64(2);
    let ctx = LambdaContext::new(&two, 4).unwrap();
    let ann = [
        two.pow(1),
        two.pow(3),
        two.pow(4),
        Ring::Integers.from_i64(1),
    ];
    let d = decompose_module(&ctx, &ann).unwrap();
    assert_eq!(d.summands().collect::<Vec<_>>(), vec![1, 3, 4]);
    assert_eq!(d.length(), 8);
}

#[test]
fn stable_category_generation() {
    let ctx = LambdaContext::new(&Ring::Integers.from_i64(5), 6).unwrap();
    assert_eq!(generation_steps(&ctx).unwrap().len() as u32, 6 - 2 + 1);
}

#[test]
fn index_range_is_checked() {
    assert!(mu(4, 5, 1).is_err());
    assert!(LambdaContext::new(&Ring::Integers.from_i64(4), 3).is_err());
    assert!(LambdaContext::new(&Ring::Integers.from_i64(3), 1).is_err());
}
