//! Degree bounds and the exact constants derived from them.

use core::fmt;
use core::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use num_rational::Ratio;

use crate::coloring::Class;
use crate::error::GraphError;

/// Exact rational used for every non-integer quantity.
pub type Rational = Ratio<i64>;

/// Degree bounds `d1`, `d2` of the two forest classes.
///
/// `alpha = (d2 + 2) / ((d1 + 2)(d2 + 1))` and `beta = 1 / (d2 + 1)` are kept
/// implicitly: every potential is multiplied by the scale
/// `D = (d1 + 2)(d2 + 1)`, so `alpha * D = d2 + 2` and `beta * D = d1 + 2`
/// are plain integers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Params {
    d1: u32,
    d2: u32,
}

impl Params {
    /// Largest accepted degree bound. Keeps every scaled quantity far away
    /// from `i64` overflow for graphs of any practical size.
    pub const MAX_BOUND: i64 = 1 << 16;

    /// Validates `d1 >= 0` and `d2 >= 2`.
    pub fn new(d1: i64, d2: i64) -> Result<Self, GraphError> {
        if !(0..=Self::MAX_BOUND).contains(&d1) || !(2..=Self::MAX_BOUND).contains(&d2) {
            return Err(GraphError::InvalidParams { d1, d2 });
        }
        Ok(Params {
            d1: d1 as u32,
            d2: d2 as u32,
        })
    }

    pub fn d1(&self) -> i64 {
        self.d1 as i64
    }

    pub fn d2(&self) -> i64 {
        self.d2 as i64
    }

    /// Degree bound of `class`.
    pub fn bound(&self, class: Class) -> i64 {
        match class {
            Class::One => self.d1(),
            Class::Two => self.d2(),
        }
    }

    /// The common denominator `D = (d1 + 2)(d2 + 1)`.
    pub fn scale(&self) -> i64 {
        (self.d1() + 2) * (self.d2() + 1)
    }

    pub fn alpha(&self) -> Rational {
        Rational::new(self.d2() + 2, (self.d1() + 2) * (self.d2() + 1))
    }

    pub fn beta(&self) -> Rational {
        Rational::new(1, self.d2() + 1)
    }

    /// `alpha * D`.
    pub fn alpha_scaled(&self) -> i64 {
        self.d2() + 2
    }

    /// `beta * D`.
    pub fn beta_scaled(&self) -> i64 {
        self.d1() + 2
    }

    /// Scaled value of `-beta`, the hypothesis threshold.
    pub fn critical_threshold(&self) -> ScaledPotential {
        ScaledPotential(-self.beta_scaled())
    }

    /// Scaled value of `alpha - beta`, the gap threshold.
    pub fn gap_threshold(&self) -> ScaledPotential {
        ScaledPotential(self.alpha_scaled() - self.beta_scaled())
    }

    /// `d2 >= 2 d1 + 2`, required by the coloring engine.
    pub fn regime_ok(&self) -> bool {
        self.d2 >= 2 * self.d1 + 2
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(d1 = {}, d2 = {})", self.d1, self.d2)
    }
}

/// A potential multiplied by the scale `D` of its parameters.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ScaledPotential(pub i64);

impl ScaledPotential {
    pub const ZERO: ScaledPotential = ScaledPotential(0);

    pub fn value(self) -> i64 {
        self.0
    }

    /// The unscaled potential as a reduced fraction.
    pub fn to_rational(self, params: &Params) -> Rational {
        Rational::new(self.0, params.scale())
    }
}

impl Add for ScaledPotential {
    type Output = ScaledPotential;
    fn add(self, rhs: Self) -> Self {
        ScaledPotential(self.0 + rhs.0)
    }
}

impl AddAssign for ScaledPotential {
    fn add_assign(&mut self, rhs: Self) {
        self.0 += rhs.0;
    }
}

impl Sub for ScaledPotential {
    type Output = ScaledPotential;
    fn sub(self, rhs: Self) -> Self {
        ScaledPotential(self.0 - rhs.0)
    }
}

impl SubAssign for ScaledPotential {
    fn sub_assign(&mut self, rhs: Self) {
        self.0 -= rhs.0;
    }
}

impl Neg for ScaledPotential {
    type Output = ScaledPotential;
    fn neg(self) -> Self {
        ScaledPotential(-self.0)
    }
}

impl fmt::Display for ScaledPotential {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn small_parameter_pairs() {
        let p = Params::new(0, 2).unwrap();
        assert_eq!((p.alpha(), p.beta(), p.scale()), (r(2, 3), r(1, 3), 6));

        let p = Params::new(1, 4).unwrap();
        assert_eq!((p.alpha(), p.beta(), p.scale()), (r(2, 5), r(1, 5), 15));
        // (8/5, 0)-sparsity for (1, 4) is 2 - alpha
        assert_eq!(Rational::from_integer(2) - p.alpha(), r(8, 5));

        let p = Params::new(2, 6).unwrap();
        assert_eq!((p.alpha(), p.beta(), p.scale()), (r(2, 7), r(1, 7), 28));
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(Params::new(-1, 4).is_err());
        assert!(Params::new(0, 1).is_err());
        assert!(Params::new(0, -3).is_err());
    }

    #[test]
    fn scaled_constants_are_exact() {
        for d1 in 0..=6 {
            for d2 in 2..=20 {
                let p = Params::new(d1, d2).unwrap();
                let d = Rational::from_integer(p.scale());
                assert_eq!(p.alpha() * d, Rational::from_integer(p.alpha_scaled()));
                assert_eq!(p.beta() * d, Rational::from_integer(p.beta_scaled()));
            }
        }
    }

    #[test]
    fn alpha_and_beta_upper_bounds() {
        for d1 in 0..=6 {
            for d2 in 2..=20 {
                let p = Params::new(d1, d2).unwrap();
                assert!(3 * p.alpha_scaled() <= 2 * p.scale());
                assert!(3 * p.beta_scaled() <= p.scale());
                assert!(p.alpha_scaled() + p.beta_scaled() <= p.scale());
            }
        }
    }

    #[test]
    fn alpha_at_least_twice_beta_iff_regime() {
        for d1 in 0..=6 {
            for d2 in 2..=20 {
                let p = Params::new(d1, d2).unwrap();
                let doubled = p.alpha() >= p.beta() * 2;
                assert_eq!(doubled, p.regime_ok(), "d1 = {d1}, d2 = {d2}");
            }
        }
    }
}
