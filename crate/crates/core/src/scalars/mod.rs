//! Exact coefficient arithmetic: rationals, univariate polynomials and
//! rational functions, plus fraction-free linear algebra over any of them.

mod field;
mod matrix;
mod mode;
pub mod pit;
mod poly;
mod ratfun;

pub use field::{parse_rational, rat, rational_to_integer, Field, Rational, Ring, ScalarError};
pub use matrix::{determinant, nullspace, rank, solve_in_span, Matrix};
pub use mode::{quantum_delta, DeltaField, QuantumField, ScalarMode};
pub use poly::{DeltaVar, Indeterminate, Poly, QVar, ZVar};
pub use ratfun::{regular_at, RatFun};

/// Polynomials in the loop parameter.
pub type DeltaPoly = Poly<DeltaVar>;
/// Rational functions in the loop parameter.
pub type DeltaRatFun = RatFun<DeltaVar>;
/// Rational functions in `q`.
pub type QRatFun = RatFun<QVar>;

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rational_sum() {
        assert_eq!(Field::add(&rat(1, 2), &rat(1, 3)), rat(5, 6));
        assert_eq!(parse_rational("-7/3").unwrap(), rat(-7, 3));
        assert_eq!(parse_rational("4").unwrap(), rat(4, 1));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    fn small_ratfun() -> impl Strategy<Value = DeltaRatFun> {
        (
            prop::collection::vec(-4i64..=4, 0..4),
            prop::collection::vec(-4i64..=4, 1..3),
        )
            .prop_filter_map("nonzero denominator", |(n, d)| {
                let p = |c: &[i64]| DeltaPoly::from_coeffs(c.iter().map(|&x| rat(x, 1)).collect());
                RatFun::new(p(&n), p(&d)).ok()
            })
    }

    proptest! {
        #[test]
        fn ratfun_field_axioms(a in small_ratfun(), b in small_ratfun(), c in small_ratfun()) {
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert!(a.sub(&a).is_zero());
            if !Field::is_zero(&a) {
                prop_assert!(a.div(&a).unwrap().is_one());
            }
        }

        #[test]
        fn determinant_is_multiplicative(
            a in prop::collection::vec(-5i64..=5, 9),
            b in prop::collection::vec(-5i64..=5, 9),
        ) {
            let m = |v: &[i64]| Matrix::from_rows(
                v.chunks(3).map(|r| r.iter().map(|&x| rat(x, 1)).collect()).collect());
            let (ma, mb) = (m(&a), m(&b));
            let mut prod = Matrix::<Rational>::zeros(3, 3);
            for i in 0..3 {
                for j in 0..3 {
                    let mut acc = rat(0, 1);
                    for k in 0..3 {
                        acc += ma.get(i, k) * mb.get(k, j);
                    }
                    prod.set(i, j, acc);
                }
            }
            let lhs = determinant(&prod).unwrap();
            let rhs = determinant(&ma).unwrap() * determinant(&mb).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn nullspace_vectors_are_annihilated(
            a in prop::collection::vec(-3i64..=3, 12),
        ) {
            let m = Matrix::from_rows(
                a.chunks(4).map(|r| r.iter().map(|&x| rat(x, 1)).collect()).collect());
            let null = nullspace(&m);
            prop_assert_eq!(null.len() + rank(&m), 4);
            for v in &null {
                prop_assert!(m.mul_vec(v).iter().all(Field::is_zero));
            }
        }
    }
}
