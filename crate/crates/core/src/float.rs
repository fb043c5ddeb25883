//! Scalar abstraction for the numeric core.
//!
//! Everything numeric in this crate is generic over [`Float`], which is
//! implemented for `f32` and `f64` only. The crate root re-exports `f64`
//! aliases for the common types; `f64` is the working precision of the CLI
//! and the test suites.

use std::fmt::{Debug, Display};
use std::num::ParseFloatError;
use std::str::FromStr;

use rand::Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::de::DeserializeOwned;
use serde::Serialize;

/// Floating-point scalar trait, implemented for [`f32`] and [`f64`].
pub trait Float:
    num_traits::Float
    + num_traits::FromPrimitive
    + Debug
    + Display
    + Default
    + FromStr<Err = ParseFloatError>
    + Serialize
    + DeserializeOwned
    + Send
    + Sync
    + 'static
{
    /// Draws a standard-normal variate from `rng`.
    fn std_normal<R: Rng + ?Sized>(rng: &mut R) -> Self;

    /// Draws a uniform variate in `[0, 1)` from `rng`.
    fn unit_uniform<R: Rng + ?Sized>(rng: &mut R) -> Self;

    /// Converts an `f64` constant, panicking if it is not representable.
    fn of(v: f64) -> Self {
        num_traits::NumCast::from(v).expect("f64 constant not representable in this scalar type")
    }

    /// Converts a count, rounding to the nearest representable value.
    fn of_usize(n: usize) -> Self {
        num_traits::NumCast::from(n).expect("count not representable in this scalar type")
    }

    /// `1 / (1 + e^{-z})`, the logistic sigmoid.
    fn sigmoid(self) -> Self {
        Self::one() / (Self::one() + (-self).exp())
    }
}

impl Float for f64 {
    fn std_normal<R: Rng + ?Sized>(rng: &mut R) -> Self {
        StandardNormal.sample(rng)
    }

    fn unit_uniform<R: Rng + ?Sized>(rng: &mut R) -> Self {
        rng.random()
    }
}

impl Float for f32 {
    fn std_normal<R: Rng + ?Sized>(rng: &mut R) -> Self {
        StandardNormal.sample(rng)
    }

    fn unit_uniform<R: Rng + ?Sized>(rng: &mut R) -> Self {
        rng.random()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn sigmoid_midpoint_and_tails() {
        assert_eq!(0.0f64.sigmoid(), 0.5);
        assert!(20.0f64.sigmoid() > 0.999);
        assert!((-20.0f64).sigmoid() < 0.001);
        assert_eq!(0.0f32.sigmoid(), 0.5);
    }

    #[test]
    fn sampling_is_seed_deterministic() {
        let mut a = ChaCha8Rng::seed_from_u64(9);
        let mut b = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..10 {
            assert_eq!(f64::std_normal(&mut a), f64::std_normal(&mut b));
            assert_eq!(f64::unit_uniform(&mut a), f64::unit_uniform(&mut b));
        }
    }

    #[test]
    fn unit_uniform_stays_in_range() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..1000 {
            let u = f32::unit_uniform(&mut rng);
            assert!((0.0..1.0).contains(&u));
        }
    }
}
