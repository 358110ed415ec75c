//! Randomized identity testing for specialized quantum parameters.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::field::Rational;

/// One specialization point `(q0, rho0)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Specialization {
    pub q: Rational,
    pub rho: Rational,
}

/// Specialization points and the degree bound they were chosen for.
///
/// An identity between rational functions of `q` whose clearing numerator
/// has degree at most `degree_bound` holds identically as soon as it holds
/// at `degree_bound + 1` distinct admissible points.
#[derive(Clone, Debug)]
pub struct PitPlan {
    pub seed: u64,
    pub degree_bound: usize,
    pub points: Vec<Specialization>,
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    let n: i64 = rng.gen_range(2..=97);
    let d: i64 = rng.gen_range(1..=13);
    let sign = if rng.gen_bool(0.5) { -1 } else { 1 };
    Rational::new(BigInt::from(sign * n), BigInt::from(d))
}

fn admissible(x: &Rational) -> bool {
    !x.is_zero() && !x.abs().is_one()
}

impl PitPlan {
    /// Draws `max(3, degree_bound + 1)` distinct points from a seeded stream.
    pub fn new(seed: u64, degree_bound: usize) -> Self {
        Self::with_count(seed, degree_bound, (degree_bound + 1).max(3))
    }

    pub fn with_count(seed: u64, degree_bound: usize, count: usize) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut points: Vec<Specialization> = Vec::with_capacity(count);
        while points.len() < count {
            let q = random_rational(&mut rng);
            let rho = random_rational(&mut rng);
            if !admissible(&q) || !admissible(&rho) || points.iter().any(|p| p.q == q) {
                continue;
            }
            points.push(Specialization { q, rho });
        }
        PitPlan {
            seed,
            degree_bound,
            points,
        }
    }

    /// Runs `check` at every point and returns the first failing one.
    pub fn first_failure<E>(
        &self,
        mut check: impl FnMut(&Specialization) -> Result<bool, E>,
    ) -> Result<Option<Specialization>, E> {
        for p in &self.points {
            if !check(p)? {
                return Ok(Some(p.clone()));
            }
        }
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn points_are_reproducible_and_admissible() {
        let a = PitPlan::new(7, 1);
        let b = PitPlan::new(7, 1);
        assert_eq!(a.points, b.points);
        assert_eq!(a.points.len(), 3);
        assert!(a
            .points
            .iter()
            .all(|p| admissible(&p.q) && admissible(&p.rho)));
        assert_eq!(PitPlan::new(7, 9).points.len(), 10);
        assert_ne!(PitPlan::new(8, 1).points, a.points);
    }

    #[test]
    fn detects_a_false_identity() {
        let plan = PitPlan::new(1, 2);
        // q^2 - 1 is not identically zero.
        let bad = plan
            .first_failure(|p| Ok::<_, ()>((&p.q * &p.q - Rational::one()).is_zero()))
            .unwrap();
        assert!(bad.is_some());
        let good = plan
            .first_failure(|p| Ok::<_, ()>((&p.q - &p.q).is_zero()))
            .unwrap();
        assert!(good.is_none());
    }
}
