//! Exact computation of `h⁰` of a divisor class on the blow-up by
//! interpolation.
//!
//! A class `a·L − Σ mᵢEᵢ` pulls back to the space of degree-`a` plane forms
//! vanishing to order ≥ `mᵢ` at `Pᵢ`; its `h⁰` is the kernel dimension of
//! the interpolation matrix. Because answers like 0 vs 1 decide mathematical
//! claims, the rank is computed by exact rational elimination, with a
//! fraction-free integer routine as an independent cross-check in the tests.
//!
//! Row and column orderings are fixed and documented so matrices are
//! reproducible byte-for-byte:
//!
//! * columns: monomials `x^i y^j z^k` with `i+j+k = degree`, ordered by
//!   descending lexicographic exponent `(i, j)`;
//! * rows: points in label order; within a point, partial derivatives
//!   `∂^(b,c)` with respect to the two chart variables (the chart omits the
//!   *last* nonzero coordinate of the point), ordered by total order
//!   `b + c`, then descending in `b`.
//!
//! Vanishing to order `m` imposes all chart partials of order `< m`, i.e.
//! `m(m+1)/2` rows per point — valid in characteristic 0 with exact
//! arithmetic.

use num::{BigInt, BigRational, One, Zero};

use crate::linalg::RationalMatrix;
use crate::picard::DivisorClass;
use crate::quadrilateral::{PointConfiguration, ProjPoint};

/// A plane interpolation problem: forms of fixed degree with assigned
/// base-point multiplicities.
#[derive(Clone, Debug)]
pub struct InterpolationProblem {
    pub degree: u32,
    pub conditions: Vec<(ProjPoint, u32)>,
}

impl InterpolationProblem {
    /// The problem computing `h⁰` of `d` on the blow-up of `cfg`; negative
    /// multiplicities are clamped to 0 (the exceptional curve splits off as
    /// a fixed component without changing sections).
    ///
    /// Requires `d.a ≥ 0`; [`h0`] short-circuits the negative-degree case.
    pub fn from_class(d: &DivisorClass, cfg: &PointConfiguration) -> Self {
        assert!(d.a >= 0, "degree must be nonnegative, got {}", d.a);
        InterpolationProblem {
            degree: d.a as u32,
            conditions: cfg
                .points()
                .iter()
                .zip(&d.m)
                .map(|(p, &m)| (p.clone(), m.max(0) as u32))
                .collect(),
        }
    }

    /// Number of vanishing conditions: `Σ mᵢ(mᵢ+1)/2`.
    pub fn row_count(&self) -> usize {
        self.conditions
            .iter()
            .map(|&(_, m)| (m as usize * (m as usize + 1)) / 2)
            .sum()
    }

    /// Number of monomial coefficients: `(degree+1)(degree+2)/2`.
    pub fn col_count(&self) -> usize {
        let d = self.degree as usize;
        (d + 1) * (d + 2) / 2
    }
}

/// Degree-`d` exponent triples in column order.
fn monomials(degree: u32) -> Vec<[u32; 3]> {
    let mut out = Vec::new();
    for i in (0..=degree).rev() {
        for j in (0..=degree - i).rev() {
            out.push([i, j, degree - i - j]);
        }
    }
    out
}

/// Falling factorial `e·(e−1)···(e−b+1)` as an integer.
fn falling(e: u32, b: u32) -> BigInt {
    let mut acc = BigInt::one();
    for t in 0..b {
        acc *= BigInt::from(e - t);
    }
    acc
}

/// Builds the interpolation matrix with the documented deterministic
/// ordering; entries are exact rationals.
pub fn interpolation_matrix(problem: &InterpolationProblem) -> RationalMatrix {
    let cols = monomials(problem.degree);
    let mut rows: Vec<Vec<BigRational>> = Vec::with_capacity(problem.row_count());

    for (point, mult) in &problem.conditions {
        if *mult == 0 {
            continue;
        }
        // The canonical integer representative keeps entries small and makes
        // the matrix independent of the coordinate scaling.
        let coords = point.normalized().map(BigRational::from);
        let chart = (0..3)
            .rev()
            .find(|&i| !coords[i].is_zero())
            .expect("projective point has a nonzero coordinate");
        // The two differentiation variables, in coordinate order.
        let vars: Vec<usize> = (0..3).filter(|&i| i != chart).collect();
        let (u, v) = (vars[0], vars[1]);

        for order in 0..*mult {
            for b in (0..=order).rev() {
                let c = order - b;
                // Row of ∂_u^b ∂_v^c evaluated at the point.
                let row = cols
                    .iter()
                    .map(|alpha| {
                        if alpha[u] < b || alpha[v] < c {
                            return BigRational::zero();
                        }
                        let mut exps = *alpha;
                        exps[u] -= b;
                        exps[v] -= c;
                        let scalar = falling(alpha[u], b) * falling(alpha[v], c);
                        let mut value = BigRational::from(scalar);
                        for (coord, &e) in coords.iter().zip(&exps) {
                            value *= coord.pow(e as i32);
                        }
                        value
                    })
                    .collect();
                rows.push(row);
            }
        }
    }

    if rows.is_empty() {
        // No conditions: 0×cols matrix with full kernel.
        return RationalMatrix::zero(0, cols.len());
    }
    RationalMatrix::from_rows(rows)
}

/// `h⁰` of `d` on the blow-up of `cfg`, by exact interpolation.
///
/// Returns 0 when `d.a < 0`; otherwise the kernel dimension of the
/// interpolation matrix with negative multiplicities clamped to 0. The rank
/// is taken by fraction-free integer elimination (the matrix is integral in
/// the canonical point representatives); the rational elimination route
/// cross-checks it in the test suites.
pub fn h0(d: &DivisorClass, cfg: &PointConfiguration) -> usize {
    if d.a < 0 {
        return 0;
    }
    let problem = InterpolationProblem::from_class(d, cfg);
    let matrix = interpolation_matrix(&problem);
    matrix.cols() - bareiss_rank(matrix.to_integer_rows())
}

/// Riemann–Roch Euler characteristic `χ(d) = 1 + (d² − d·K)/2`.
///
/// The parity of `d² − d·K` is even for every lattice class; the assertion
/// guards against non-lattice inputs.
pub fn chi_riemann_roch(d: &DivisorClass) -> i64 {
    let n = d.self_intersection() - d.intersect(&DivisorClass::canonical());
    assert!(n % 2 == 0, "Riemann-Roch parity violated: d^2 - d.K = {n} is odd");
    1 + n / 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::bareiss_rank;
    use num::FromPrimitive;

    fn cfg() -> PointConfiguration {
        PointConfiguration::standard()
    }

    fn class(a: i64, m: [i64; 6]) -> DivisorClass {
        DivisorClass::new(a, m)
    }

    #[test]
    fn monomial_order_is_x_major() {
        assert_eq!(monomials(1), vec![[1, 0, 0], [0, 1, 0], [0, 0, 1]]);
        assert_eq!(
            monomials(2),
            vec![[2, 0, 0], [1, 1, 0], [1, 0, 1], [0, 2, 0], [0, 1, 1], [0, 0, 2]]
        );
    }

    #[test]
    fn simple_point_selects_first_coefficient() {
        let p = InterpolationProblem {
            degree: 1,
            conditions: vec![(ProjPoint::from_ints(1, 0, 0), 1)],
        };
        let m = interpolation_matrix(&p);
        assert_eq!((m.rows(), m.cols()), (1, 3));
        let expect = [1i64, 0, 0];
        for (c, &want) in expect.iter().enumerate() {
            assert_eq!(m.get(0, c), &BigRational::from_i64(want).unwrap());
        }
    }

    #[test]
    fn double_point_at_origin_of_the_z_chart() {
        // Degree 2, double point at (0:0:1): rows F, F_x, F_y against the
        // monomials x², xy, xz, y², yz, z² — written out by hand.
        let p = InterpolationProblem {
            degree: 2,
            conditions: vec![(ProjPoint::from_ints(0, 0, 1), 2)],
        };
        let m = interpolation_matrix(&p);
        assert_eq!((m.rows(), m.cols()), (3, 6));
        let expect: [[i64; 6]; 3] = [
            [0, 0, 0, 0, 0, 1], // F(0,0,1): z² coefficient
            [0, 0, 1, 0, 0, 0], // F_x(0,0,1): xz coefficient
            [0, 0, 0, 0, 1, 0], // F_y(0,0,1): yz coefficient
        ];
        for (r, row) in expect.iter().enumerate() {
            for (c, &want) in row.iter().enumerate() {
                assert_eq!(m.get(r, c), &BigRational::from_i64(want).unwrap(), "({r},{c})");
            }
        }
    }

    #[test]
    fn row_count_for_the_invariant_bicanonical_class() {
        let p = InterpolationProblem::from_class(&class(9, [3, 4, 3, 4, 4, 4]), &cfg());
        assert_eq!(p.row_count(), 52); // 6+10+6+10+10+10
        assert_eq!(p.col_count(), 55);
        let m = interpolation_matrix(&p);
        assert_eq!((m.rows(), m.cols()), (52, 55));
    }

    #[test]
    fn bicanonical_character_values() {
        assert_eq!(h0(&class(9, [3, 4, 3, 4, 4, 4]), &cfg()), 7);
        assert_eq!(h0(&class(4, [2, 2, 2, 1, 2, 2]), &cfg()), 1);
        assert_eq!(h0(&class(3, [1, 2, 1, 2, 1, 1]), &cfg()), 0);
        assert_eq!(h0(&class(5, [1, 2, 1, 3, 3, 3]), &cfg()), 0);
    }

    #[test]
    fn trivial_and_small_systems() {
        assert_eq!(h0(&DivisorClass::ZERO, &cfg()), 1);
        // Cubics through six simple points: 10 coefficients minus 6
        // independent conditions.
        assert_eq!(h0(&class(3, [1, 1, 1, 1, 1, 1]), &cfg()), 4);
        // No line through three points in general position.
        assert_eq!(h0(&class(1, [1, 1, 1, 0, 0, 0]), &cfg()), 0);
        // Negative degree has no sections.
        assert_eq!(h0(&DivisorClass::canonical(), &cfg()), 0);
        // Negative multiplicities are clamped.
        assert_eq!(
            h0(&class(1, [-2, 0, 0, 0, 0, -1]), &cfg()),
            h0(&DivisorClass::line(), &cfg())
        );
        assert_eq!(h0(&DivisorClass::line(), &cfg()), 3);
    }

    #[test]
    fn riemann_roch_values() {
        assert_eq!(chi_riemann_roch(&class(9, [3, 4, 3, 4, 4, 4])), 3);
        assert_eq!(chi_riemann_roch(&DivisorClass::ZERO), 1);
        assert_eq!(chi_riemann_roch(&DivisorClass::anticanonical()), 4);
    }

    #[test]
    fn serre_style_lower_bound() {
        // h⁰(d) ≥ χ(d) − h⁰(K−d) unconditionally (h¹ ≥ 0).
        let k = DivisorClass::canonical();
        let samples = [
            class(3, [1, 1, 1, 1, 1, 1]),
            class(9, [3, 4, 3, 4, 4, 4]),
            class(4, [2, 2, 2, 1, 2, 2]),
            class(2, [1, 1, 0, 0, 0, 0]),
            class(0, [0, 0, 0, 0, 0, 0]),
            class(5, [1, 2, 1, 3, 3, 3]),
        ];
        for d in samples {
            let lower = chi_riemann_roch(&d) - h0(&(k - d), &cfg()) as i64;
            assert!(
                (h0(&d, &cfg()) as i64) >= lower.max(0),
                "bound failed for {d}"
            );
        }
    }

    #[test]
    fn kernel_dims_agree_with_fraction_free_rank() {
        let classes = [
            class(3, [1, 1, 1, 1, 1, 1]),
            class(4, [2, 2, 2, 1, 2, 2]),
            class(3, [1, 2, 1, 2, 1, 1]),
            class(2, [1, 1, 1, 0, 0, 0]),
        ];
        for d in classes {
            let m = interpolation_matrix(&InterpolationProblem::from_class(&d, &cfg()));
            assert_eq!(
                m.cols() - m.rank(),
                m.cols() - bareiss_rank(m.to_integer_rows()),
                "routes disagree on {d}"
            );
        }
    }

    #[test]
    fn points_at_infinity_use_their_own_chart() {
        // A double point at (1:0:0) forces the chart omitting x.
        let p = InterpolationProblem {
            degree: 2,
            conditions: vec![(ProjPoint::from_ints(1, 0, 0), 2)],
        };
        let m = interpolation_matrix(&p);
        assert_eq!(m.rows(), 3);
        // Conics with a double point at (1:0:0): drop x², xy, xz.
        assert_eq!(m.kernel_dim(), 3);
    }
}
