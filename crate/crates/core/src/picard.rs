//! Integer arithmetic in the Picard lattice of the six-point blow-up of the
//! plane.
//!
//! Classes are written in the basis `(L, E₁, …, E₆)`, where `L` is the total
//! transform of a line and `Eᵢ` is the exceptional curve over the i-th
//! blown-up point. A [`DivisorClass`] `(a; m₁,…,m₆)` stores the *subtracted*
//! multiplicities: it denotes `a·L − Σ mᵢ·Eᵢ`, so the diagonal of Δ₁ ≡
//! L − E₁ − E₃ is entered as `(1; 1,0,1,0,0,0)`. The intersection form is
//! the diagonal form of signature (1,6): `L² = 1`, `Eᵢ² = −1`, mixed
//! products zero.
//!
//! Note the sign convention for the exceptional curves themselves: the class
//! of `Eᵢ` as a curve is `(0; …,−1,…)` (multiplicity −1 at slot i), which
//! gives the geometrically correct pairings `K·Eᵢ = −1` and `Eᵢ² = −1`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

/// Number of blown-up points; fixed by the complete-quadrilateral
/// configuration.
pub const NUM_POINTS: usize = 6;

/// An integer divisor class `a·L − Σ mᵢ·Eᵢ` on the blow-up.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct DivisorClass {
    /// Coefficient of the line class `L`.
    pub a: i64,
    /// Subtracted multiplicities at the six points.
    pub m: [i64; NUM_POINTS],
}

/// Errors from parsing a divisor class from text.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClassParseError {
    #[error("expected 7 comma-separated integers `a,m1,...,m6`, got {0} fields")]
    WrongArity(usize),
    #[error("field {index}: invalid integer `{token}`")]
    BadInteger { index: usize, token: String },
}

impl DivisorClass {
    /// The zero class.
    pub const ZERO: DivisorClass = DivisorClass { a: 0, m: [0; 6] };

    pub fn new(a: i64, m: [i64; NUM_POINTS]) -> Self {
        DivisorClass { a, m }
    }

    /// The total transform `L` of a line.
    pub fn line() -> Self {
        DivisorClass::new(1, [0; 6])
    }

    /// The class of the exceptional curve `Eᵢ` (`i` is 1-based).
    ///
    /// Stored with multiplicity −1 so that the tuple denotes `+Eᵢ` as a
    /// curve class: `Eᵢ² = −1` and `K·Eᵢ = −1`.
    pub fn exceptional(i: usize) -> Self {
        assert!((1..=NUM_POINTS).contains(&i), "exceptional index out of range");
        let mut m = [0; NUM_POINTS];
        m[i - 1] = -1;
        DivisorClass::new(0, m)
    }

    /// The canonical class `K = −3L + Σ Eᵢ`, i.e. `(−3; −1,…,−1)`.
    pub fn canonical() -> Self {
        DivisorClass::new(-3, [-1; 6])
    }

    /// The anticanonical class `−K = 3L − Σ Eᵢ`.
    pub fn anticanonical() -> Self {
        -DivisorClass::canonical()
    }

    pub fn is_zero(&self) -> bool {
        *self == DivisorClass::ZERO
    }

    /// Intersection number under the diagonal form: `a·a′ − Σ mᵢ·mᵢ′`.
    pub fn intersect(&self, other: &DivisorClass) -> i64 {
        self.a * other.a - self.m.iter().zip(&other.m).map(|(x, y)| x * y).sum::<i64>()
    }

    /// Self-intersection `d·d`.
    pub fn self_intersection(&self) -> i64 {
        self.intersect(self)
    }

    /// Arithmetic genus by adjunction: `1 + (d² + d·K)/2`.
    ///
    /// `d² + d·K` is even for every integer class (the form is even against
    /// `K` in this sense); a violation would mean the input left the lattice
    /// and panics.
    pub fn arithmetic_genus(&self) -> i64 {
        let n = self.self_intersection() + self.intersect(&DivisorClass::canonical());
        assert!(n % 2 == 0, "adjunction parity violated: d^2 + d.K = {n} is odd");
        1 + n / 2
    }

    /// Parses `a,m1,...,m6` (whitespace around tokens tolerated).
    pub fn parse(text: &str) -> Result<Self, ClassParseError> {
        let fields: Vec<&str> = text.split(',').map(str::trim).collect();
        if fields.len() != 1 + NUM_POINTS {
            return Err(ClassParseError::WrongArity(fields.len()));
        }
        let mut values = [0i64; 7];
        for (i, tok) in fields.iter().enumerate() {
            values[i] = tok.parse().map_err(|_| ClassParseError::BadInteger {
                index: i,
                token: tok.to_string(),
            })?;
        }
        let mut m = [0i64; NUM_POINTS];
        m.copy_from_slice(&values[1..]);
        Ok(DivisorClass::new(values[0], m))
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}; {},{},{},{},{},{})",
            self.a, self.m[0], self.m[1], self.m[2], self.m[3], self.m[4], self.m[5]
        )
    }
}

impl fmt::Debug for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for DivisorClass {
    type Output = DivisorClass;
    fn add(self, rhs: DivisorClass) -> DivisorClass {
        let mut m = self.m;
        for (x, y) in m.iter_mut().zip(&rhs.m) {
            *x += y;
        }
        DivisorClass::new(self.a + rhs.a, m)
    }
}

impl Sub for DivisorClass {
    type Output = DivisorClass;
    fn sub(self, rhs: DivisorClass) -> DivisorClass {
        self + (-rhs)
    }
}

impl Neg for DivisorClass {
    type Output = DivisorClass;
    fn neg(self) -> DivisorClass {
        let mut m = self.m;
        for x in m.iter_mut() {
            *x = -*x;
        }
        DivisorClass::new(-self.a, m)
    }
}

impl Mul<i64> for DivisorClass {
    type Output = DivisorClass;
    fn mul(self, s: i64) -> DivisorClass {
        let mut m = self.m;
        for x in m.iter_mut() {
            *x *= s;
        }
        DivisorClass::new(self.a * s, m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn delta1() -> DivisorClass {
        DivisorClass::new(1, [1, 0, 1, 0, 0, 0])
    }

    fn f1() -> DivisorClass {
        DivisorClass::new(2, [0, 1, 0, 1, 1, 1])
    }

    fn f2() -> DivisorClass {
        DivisorClass::new(2, [1, 0, 1, 0, 1, 1])
    }

    #[test]
    fn intersection_numbers_of_diagonals_and_pencils() {
        assert_eq!(delta1().intersect(&f1()), 2);
        assert_eq!(f1().intersect(&f1()), 0);
        assert_eq!(DivisorClass::line().intersect(&DivisorClass::line()), 1);
        assert_eq!(f1().intersect(&f2()), 2);
    }

    #[test]
    fn canonical_class_value_and_squares() {
        let k = DivisorClass::canonical();
        assert_eq!(k, DivisorClass::new(-3, [-1; 6]));
        // Δ₁ + f₁ ≡ −K, so K + Δ₁ + f₁ = 0.
        assert!((k + delta1() + f1()).is_zero());
        assert_eq!(k.intersect(&k), 3);
        // K·E₁ = −1 for the honest curve class; the coordinate tuple
        // (0;1,0,...,0) is −E₁ and pairs to +1.
        assert_eq!(k.intersect(&DivisorClass::exceptional(1)), -1);
        assert_eq!(k.intersect(&DivisorClass::new(0, [1, 0, 0, 0, 0, 0])), 1);
        assert_eq!(DivisorClass::exceptional(1).self_intersection(), -1);
    }

    #[test]
    fn arithmetic_genus_examples() {
        let s1 = DivisorClass::new(1, [1, 1, 0, 0, 1, 0]);
        assert_eq!(s1.arithmetic_genus(), 0);
        assert_eq!(DivisorClass::line().arithmetic_genus(), 0);
        assert_eq!(DivisorClass::anticanonical().arithmetic_genus(), 1);
    }

    #[test]
    fn gram_matrix_is_diagonal_signature_1_6() {
        let mut basis = vec![DivisorClass::line()];
        for i in 1..=6 {
            // Use the basis tuples (0; e_i); their squares are −1 either way.
            basis.push(DivisorClass::exceptional(i));
        }
        for (i, x) in basis.iter().enumerate() {
            for (j, y) in basis.iter().enumerate() {
                let expected = if i != j {
                    0
                } else if i == 0 {
                    1
                } else {
                    -1
                };
                assert_eq!(x.intersect(y), expected, "gram entry ({i},{j})");
            }
        }
    }

    #[test]
    fn parse_round_trip_and_errors() {
        let d = DivisorClass::parse("1,1,0,1,0,0,0").unwrap();
        assert_eq!(d, delta1());
        assert_eq!(DivisorClass::parse(" 0 ,0,0,0,0,0,0 ").unwrap(), DivisorClass::ZERO);
        assert_eq!(
            DivisorClass::parse("1,2,3"),
            Err(ClassParseError::WrongArity(3))
        );
        assert!(matches!(
            DivisorClass::parse("1,1,0,x,0,0,0"),
            Err(ClassParseError::BadInteger { index: 3, .. })
        ));
    }

    #[test]
    fn display_matches_parse_format() {
        let d = DivisorClass::new(9, [3, 4, 3, 4, 4, 4]);
        assert_eq!(d.to_string(), "(9; 3,4,3,4,4,4)");
    }
}
