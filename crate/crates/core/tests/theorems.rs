use hyparr_core::arrangement::{
    make_cox_a, make_cox_b, random_deformation_a, random_deformation_b, RandomOffsets,
};
use hyparr_core::exactmath::{int, ratio, Scalar};
use hyparr_core::expansion::{
    deletion_restriction_check, to_binomial_basis, verify_type_a_expansion,
    verify_type_b_expansion, zaslavsky_check, BasisKind,
};
use hyparr_core::poset::{build_poset, char_poly};
use hyparr_core::regions::{enumerate_regions, exhaustive_sign_vectors, level_profile};
use hyparr_core::{Arrangement, Hyperplane, Polynomial, Sign};
use num::Signed;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_a(seed: u64, n: usize) -> Arrangement {
    random_deformation_a(n, &RandomOffsets::default(), &mut ChaCha8Rng::seed_from_u64(seed)).unwrap()
}

fn random_b(seed: u64, n: usize) -> Arrangement {
    random_deformation_b(n, &RandomOffsets::default(), &mut ChaCha8Rng::seed_from_u64(seed)).unwrap()
}

fn falling(n: i64) -> Polynomial {
    (0..n).fold(Polynomial::from_ints(&[1]), |acc, j| &acc * &Polynomial::linear(int(j)))
}

#[test]
fn coxeter_a_base_cases() {
    for n in 2..=4 {
        let arr = make_cox_a(n).unwrap();
        assert_eq!(char_poly(&arr), falling(n as i64));
        let p = level_profile(&arr);
        let fact: u64 = (1..=n as u64).product();
        assert_eq!(p.get(n), fact);
        assert_eq!(p.total(), fact);
    }
}

#[test]
fn coxeter_b_base_cases() {
    for n in 1..=3 {
        let arr = make_cox_b(n).unwrap();
        let expected = (1..=n as i64)
            .fold(Polynomial::from_ints(&[1]), |acc, j| &acc * &Polynomial::linear(int(2 * j - 1)));
        assert_eq!(char_poly(&arr), expected);
        let p = level_profile(&arr);
        let count: u64 = (1..=n as u64).product::<u64>() << n;
        assert_eq!((p.get(n), p.total()), (count, count));
    }
}

#[test]
fn random_type_a_deformations_satisfy_the_expansion() {
    for seed in 0..12 {
        let arr = random_a(seed, 2 + (seed as usize % 2));
        let report = verify_type_a_expansion(&arr).unwrap();
        assert!(report.pass(), "seed {seed}: {arr}");
        assert!(report.expansion.has_integer_coeffs());
    }
}

#[test]
fn random_type_b_deformations_satisfy_the_expansion() {
    for seed in 0..8 {
        let arr = random_b(seed, 1 + (seed as usize % 2));
        let report = verify_type_b_expansion(&arr).unwrap();
        assert!(report.pass(), "seed {seed}: {arr}");
    }
}

#[test]
fn expansion_at_minus_one_counts_regions() {
    for arr in [random_a(3, 3), random_b(5, 2)] {
        let n = arr.dim();
        let z = zaslavsky_check(&arr);
        assert!(z.pass);
        let basis = match arr.kind().deformation_type().unwrap() {
            hyparr_core::DeformationType::A => BasisKind::StandardBinomial,
            hyparr_core::DeformationType::B => BasisKind::ShiftedHalf,
        };
        let value = to_binomial_basis(&char_poly(&arr), basis).eval(&int(-1));
        let sign = if n % 2 == 0 { int(1) } else { int(-1) };
        assert_eq!(value * sign, Scalar::from_integer(z.region_count.into()));
    }
}

#[test]
fn coefficient_signs_alternate_for_nondegenerate_deformations() {
    for seed in 20..26 {
        let arr = random_a(seed, 3);
        let e = to_binomial_basis(&char_poly(&arr), BasisKind::StandardBinomial);
        for k in 0..=3 {
            let c = e.coeff(k);
            let signed = if (3 - k) % 2 == 0 { c } else { -c };
            assert!(!signed.is_negative(), "seed {seed}, k {k}");
        }
    }
}

#[test]
fn deletion_restriction_on_random_arrangements() {
    for arr in [random_a(7, 3), random_b(8, 2), hyparr_core::samples::level_example()] {
        let rows = deletion_restriction_check(&arr).unwrap();
        assert_eq!(rows.len(), arr.len());
        assert!(rows.iter().all(|r| r.pass), "{arr}");
    }
}

#[test]
fn incremental_enumeration_is_complete() {
    for arr in [random_a(11, 3), random_b(12, 2), make_cox_b(2).unwrap()] {
        if arr.len() > 12 {
            continue;
        }
        let brute: Vec<Vec<Sign>> = exhaustive_sign_vectors(&arr).unwrap().into_iter().map(|p| p.0).collect();
        let inc: Vec<Vec<Sign>> = enumerate_regions(&arr).into_iter().map(|r| r.signs).collect();
        assert_eq!(brute, inc, "{arr}");
    }
}

#[test]
fn adding_a_parallel_hyperplane_adds_restriction_regions() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for seed in 0..6 {
        let n = 3;
        let arr = random_a(seed, n);
        // new offset not already used in the chosen direction
        let base = arr.hyperplanes()[rng.gen_range(0..arr.len())].clone();
        let mut offset = base.offset() + ratio(1, 3);
        let added = loop {
            let h = Hyperplane::new(base.normal().to_vec(), offset.clone()).unwrap();
            if !arr.contains_hyperplane(&h) {
                break h;
            }
            offset += ratio(1, 3);
        };
        let tilde = arr.with_hyperplane(added).unwrap();
        let (ring, _) = tilde.restrict(tilde.len() - 1).unwrap();
        let (before, after, inner) = (level_profile(&arr), level_profile(&tilde), level_profile(&ring));
        for k in 0..n {
            assert_eq!(after.get(k), before.get(k) + inner.get(k), "seed {seed}, k {k}");
        }
        assert_eq!(after.get(n), before.get(n));
    }
}

#[test]
fn mobius_values_alternate_in_sign() {
    for arr in [random_a(4, 3), random_b(4, 2), make_cox_a(4).unwrap()] {
        let poset = build_poset(&arr);
        for flat in poset.flats() {
            let expected_positive = flat.codim() % 2 == 0;
            assert!(flat.mobius != 0);
            assert_eq!(flat.mobius > 0, expected_positive, "{arr}");
        }
    }
}

fn small_poly() -> impl Strategy<Value = Polynomial> {
    proptest::collection::vec((-6i64..=6, 1i64..=4), 0..6)
        .prop_map(|cs| Polynomial::new(cs.into_iter().map(|(p, q)| ratio(p, q)).collect()))
}

proptest! {
    #[test]
    fn basis_round_trip_is_exact(p in small_poly()) {
        for kind in [BasisKind::StandardBinomial, BasisKind::ShiftedHalf] {
            prop_assert_eq!(to_binomial_basis(&p, kind).to_polynomial(), p.clone());
        }
    }

    #[test]
    fn expansion_evaluates_like_the_polynomial(p in small_poly(), t in -5i64..=5) {
        for kind in [BasisKind::StandardBinomial, BasisKind::ShiftedHalf] {
            prop_assert_eq!(to_binomial_basis(&p, kind).eval(&int(t)), p.eval(&int(t)));
        }
    }
}
