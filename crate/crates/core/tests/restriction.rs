use hyparr_core::arrangement::{
    is_nondegenerate, random_deformation_a, random_deformation_b, DeformationType, RandomOffsets,
};
use hyparr_core::exactmath::{dot, rref, solve_affine, AffineSolution, Matrix, Vector};
use hyparr_core::{Arrangement, Hyperplane, Scalar};
use num::{One, Zero};
use std::collections::BTreeSet;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn closure_holds(arr: &Arrangement, kind: DeformationType) {
    for i in 0..arr.len() {
        let (restricted, _) = arr.restrict(i).unwrap();
        assert_eq!(restricted.dim(), arr.dim() - 1);
        if restricted.dim() == 0 {
            continue;
        }
        let report = is_nondegenerate(&restricted, kind);
        assert!(report.is_ok(), "restricting {arr} to H{}: {report}", i + 1);
    }
}

#[test]
fn type_a_restrictions_stay_nondegenerate() {
    for seed in 0..10 {
        let n = 3 + (seed as usize % 2);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let arr = random_deformation_a(n, &RandomOffsets::default(), &mut rng).unwrap();
        closure_holds(&arr, DeformationType::A);
    }
}

#[test]
fn type_b_restrictions_stay_nondegenerate() {
    for seed in 0..10 {
        let n = 2 + (seed as usize % 2);
        let mut rng = ChaCha8Rng::seed_from_u64(1000 + seed);
        let arr = random_deformation_b(n, &RandomOffsets::default(), &mut rng).unwrap();
        closure_holds(&arr, DeformationType::B);
    }
}

/// Lifting each image hyperplane back to `H0` gives exactly the
/// codimension-two flats `H0 ∩ H`, computed directly with `solve_affine`.
#[test]
fn restriction_images_match_intersections() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let arr = random_deformation_b(3, &RandomOffsets::default(), &mut rng).unwrap();
    let n = arr.dim();
    for i in 0..arr.len() {
        let h0 = &arr.hyperplanes()[i];
        let (restricted, map) = arr.restrict(i).unwrap();
        let flats: Vec<AffineSolution> = arr
            .hyperplanes()
            .iter()
            .map(|h| solve_affine(n, &[equation(h0), equation(h)]))
            .filter(|s| s.dimension() == Some(n - 2))
            .collect();
        // affinely spanning points of each image, lifted into R^n
        let lifted: Vec<Vec<Vector>> = restricted
            .hyperplanes()
            .iter()
            .map(|g| spanning_points(g).iter().map(|y| map.lift(y)).collect())
            .collect();
        let matches = |s: &AffineSolution, pts: &[Vector]| pts.iter().all(|p| contains(s, p));
        for pts in &lifted {
            assert!(flats.iter().any(|s| matches(s, pts)), "H{}: stray image", i + 1);
        }
        for s in &flats {
            assert!(lifted.iter().any(|pts| matches(s, pts)), "H{}: missing image", i + 1);
        }
        let distinct: BTreeSet<Vec<Vector>> = lifted.into_iter().collect();
        assert_eq!(distinct.len(), restricted.len());
    }
}

fn equation(h: &Hyperplane) -> (Vector, Scalar) {
    (h.normal().to_vec(), h.offset().clone())
}

fn contains(s: &AffineSolution, x: &[Scalar]) -> bool {
    let AffineSolution::Affine { point, directions } = s else {
        return false;
    };
    let diff: Vector = x.iter().zip(point).map(|(a, b)| a - b).collect();
    let mut rows = directions.clone();
    let before = rref(&Matrix::from_rows(x.len(), &rows)).rank;
    rows.push(diff);
    rref(&Matrix::from_rows(x.len(), &rows)).rank == before
}

/// Orthogonal projections of `0, e_1, ..., e_d` onto `g`.
fn spanning_points(g: &Hyperplane) -> Vec<Vector> {
    let d = g.dim();
    (0..=d)
        .map(|t| {
            let mut seed = vec![Scalar::zero(); d];
            if t > 0 {
                seed[t - 1] = Scalar::one();
            }
            let a = g.normal();
            let gap = (g.offset() - dot(a, &seed)) / dot(a, a);
            seed.iter().zip(a).map(|(s, ai)| s + ai * &gap).collect()
        })
        .collect()
}
