use hyparr_core::arrangement::{make_cox_a, random_deformation_a, RandomOffsets};
use hyparr_core::exactmath::{int, ints, Scalar};
use hyparr_core::ffcount::{admissible_primes, count_complement_points, ff_oracle_check};
use hyparr_core::poset::char_poly;
use hyparr_core::{Arrangement, Hyperplane};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// `A x B` on disjoint coordinate blocks.
fn product(a: &Arrangement, b: &Arrangement) -> Arrangement {
    let dim = a.dim() + b.dim();
    let mut hs = Vec::new();
    for h in a.hyperplanes() {
        let mut normal = h.normal().to_vec();
        normal.resize(dim, int(0));
        hs.push(Hyperplane::new(normal, h.offset().clone()).unwrap());
    }
    for h in b.hyperplanes() {
        let mut normal = vec![int(0); a.dim()];
        normal.extend_from_slice(h.normal());
        hs.push(Hyperplane::new(normal, h.offset().clone()).unwrap());
    }
    Arrangement::new(dim, hs).unwrap()
}

#[test]
fn counts_are_multiplicative_on_products() {
    let a = make_cox_a(2).unwrap();
    let b = Arrangement::from_equations(2, vec![(ints(&[1, 0]), int(1)), (ints(&[1, 1]), int(2))]).unwrap();
    let ab = product(&a, &b);
    for q in [7, 11, 13] {
        let lhs = count_complement_points(&ab, q).unwrap();
        let rhs = count_complement_points(&a, q).unwrap() * count_complement_points(&b, q).unwrap();
        assert_eq!(lhs, rhs);
    }
    assert_eq!(char_poly(&ab), &char_poly(&a) * &char_poly(&b));
}

#[test]
fn random_deformations_agree_with_chi() {
    for seed in 0..6 {
        let arr = random_deformation_a(3, &RandomOffsets::default(), &mut ChaCha8Rng::seed_from_u64(seed)).unwrap();
        let plan = ff_oracle_check(&arr, 2).unwrap();
        assert_eq!(plan.checks.len(), 2);
        assert!(plan.all_agree(), "seed {seed}: {plan:?}");
    }
}

#[test]
fn admissible_primes_exceed_twice_the_bound() {
    let arr = hyparr_core::samples::type_b_example();
    let primes = admissible_primes(&arr, 3);
    assert_eq!(primes, vec![3, 5, 7]);
    let chi = char_poly(&arr);
    for q in primes {
        let count = count_complement_points(&arr, q).unwrap();
        assert_eq!(Scalar::from_integer(count.into()), chi.eval(&int(q as i64)));
    }
}
