//! Property-based suites for the algebraic invariants: bilinearity and
//! symmetry of the intersection form, adjunction parity, monotonicity and
//! projective invariance of `h⁰`, agreement of the two rank routines, and
//! associativity of the group-algebra product.

use num::{BigInt, BigRational, One, Zero};
use proptest::prelude::*;

use blochcheck_core::group_algebra::{ideal_contains, z_of, FiniteGroup, GroupAlgebraElement, SubgroupSpec};
use blochcheck_core::linalg::{bareiss_rank, RationalMatrix};
use blochcheck_core::linear_systems::{h0, interpolation_matrix, InterpolationProblem};
use blochcheck_core::picard::DivisorClass;
use blochcheck_core::quadrilateral::{PointConfiguration, ProjPoint};

fn any_class() -> impl Strategy<Value = DivisorClass> {
    (-9i64..=9, proptest::array::uniform6(-9i64..=9)).prop_map(|(a, m)| DivisorClass::new(a, m))
}

fn small_effective_class() -> impl Strategy<Value = DivisorClass> {
    (0i64..=6, proptest::array::uniform6(-1i64..=3)).prop_map(|(a, m)| DivisorClass::new(a, m))
}

proptest! {
    /// intersect(x + s·y, z) = intersect(x,z) + s·intersect(y,z).
    #[test]
    fn intersection_form_is_bilinear(
        x in any_class(),
        y in any_class(),
        z in any_class(),
        s in -5i64..=5,
    ) {
        prop_assert_eq!(
            (x + y * s).intersect(&z),
            x.intersect(&z) + s * y.intersect(&z)
        );
    }

    #[test]
    fn intersection_form_is_symmetric(x in any_class(), y in any_class()) {
        prop_assert_eq!(x.intersect(&y), y.intersect(&x));
    }

    /// d² + d·K is even for every lattice class, so the genus is always an
    /// integer.
    #[test]
    fn adjunction_parity(d in any_class()) {
        let k = DivisorClass::canonical();
        prop_assert_eq!((d.self_intersection() + d.intersect(&k)) % 2, 0);
        let _ = d.arithmetic_genus();
    }

    /// Raising any multiplicity never raises h⁰.
    #[test]
    fn h0_is_monotone_in_multiplicities(d in small_effective_class(), slot in 0usize..6) {
        let cfg = PointConfiguration::standard();
        let mut harder = d;
        harder.m[slot] += 1;
        prop_assert!(h0(&harder, &cfg) <= h0(&d, &cfg));
    }

    /// The two exact rank routes agree, so kernel dimension equals column
    /// count minus fraction-free rank as well.
    #[test]
    fn rank_routes_agree(d in small_effective_class()) {
        let cfg = PointConfiguration::standard();
        if d.a < 0 {
            return Ok(());
        }
        let m = interpolation_matrix(&InterpolationProblem::from_class(&d, &cfg));
        let gauss = m.rank();
        let bareiss = bareiss_rank(m.to_integer_rows());
        prop_assert_eq!(gauss, bareiss);
    }

    /// Group algebra multiplication is associative on random triples.
    #[test]
    fn algebra_product_is_associative(
        a in proptest::array::uniform6(-4i64..=4),
        b in proptest::array::uniform6(-4i64..=4),
        c in proptest::array::uniform6(-4i64..=4),
    ) {
        let g = FiniteGroup::cyclic(6);
        let x = GroupAlgebraElement::from_integers(&a);
        let y = GroupAlgebraElement::from_integers(&b);
        let z = GroupAlgebraElement::from_integers(&c);
        let left = x.mul_in(&y, &g).mul_in(&z, &g);
        let right = x.mul_in(&y.mul_in(&z, &g), &g);
        prop_assert_eq!(left, right);
    }

    /// Ideal membership is insensitive to rescaling the generators.
    #[test]
    fn membership_survives_rescaling(num in 1i64..=9, den in 1i64..=9) {
        let g = FiniteGroup::klein_four();
        let gens: Vec<_> = (1..=3)
            .map(|x| z_of(&SubgroupSpec::generated_by(&g, x), &g).unwrap())
            .collect();
        let s = BigRational::new(BigInt::from(num), BigInt::from(den));
        let scaled: Vec<_> = gens.iter().map(|z| z.scale(&s)).collect();
        let one = GroupAlgebraElement::one(4);
        prop_assert_eq!(ideal_contains(&one, &gens, &g), ideal_contains(&one, &scaled, &g));
    }
}

/// Composes random elementary row operations into an invertible rational
/// 3×3 matrix (determinant ±1 by construction).
fn unimodular_matrix(ops: &[(usize, usize, i64)]) -> [[BigRational; 3]; 3] {
    let mut m = [
        [BigRational::one(), BigRational::zero(), BigRational::zero()],
        [BigRational::zero(), BigRational::one(), BigRational::zero()],
        [BigRational::zero(), BigRational::zero(), BigRational::one()],
    ];
    for &(r1, r2, factor) in ops {
        if r1 == r2 {
            continue;
        }
        for c in 0..3 {
            let add = m[r2][c].clone() * BigRational::from(BigInt::from(factor));
            m[r1][c] += add;
        }
    }
    m
}

fn apply(m: &[[BigRational; 3]; 3], p: &ProjPoint) -> ProjPoint {
    let c = p.coords();
    let coords = [0, 1, 2].map(|r| {
        m[r][0].clone() * &c[0] + m[r][1].clone() * &c[1] + m[r][2].clone() * &c[2]
    });
    ProjPoint::new(coords).expect("invertible maps preserve nonzero points")
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// h⁰ is unchanged under an invertible rational change of coordinates.
    #[test]
    fn h0_is_projectively_invariant(
        ops in proptest::collection::vec((0usize..3, 0usize..3, -3i64..=3), 1..6),
        d in small_effective_class(),
    ) {
        let m = unimodular_matrix(&ops);
        let cfg = PointConfiguration::standard();
        let moved = cfg.points().clone().map(|p| apply(&m, &p));
        let moved_cfg = PointConfiguration::from_points(moved)
            .expect("projective maps preserve the configuration");
        prop_assert_eq!(h0(&d, &cfg), h0(&d, &moved_cfg));
    }
}

#[test]
fn rational_matrix_rank_is_row_space_dim() {
    // Spot check that the RREF pivots count matches a hand-rank.
    let rows = vec![
        vec![BigRational::one(), BigRational::zero(), BigRational::one()],
        vec![BigRational::one(), BigRational::one(), BigRational::zero()],
        vec![BigRational::from(BigInt::from(2)), BigRational::one(), BigRational::one()],
    ];
    let m = RationalMatrix::from_rows(rows);
    assert_eq!(m.rank(), 2);
    assert_eq!(m.kernel_dim(), 1);
}
