//! Exhaustive associativity of diagram multiplication in B(2,2) at generic delta.

use wbr_core::diagrams::{enumerate, Wall, DEFAULT_SIZE_CAP};
use wbr_core::scalars::{DeltaRatFun, ScalarMode};
use wbr_core::wbr_algebra::WalledBrauer;

#[test]
fn all_diagram_triples_associate_in_b22() {
    let wall = Wall::new(2, 2);
    let alg = WalledBrauer::<DeltaRatFun>::new(wall, ScalarMode::GenericDelta).unwrap();
    let basis: Vec<_> = enumerate(wall, DEFAULT_SIZE_CAP)
        .unwrap()
        .into_iter()
        .map(|d| alg.diagram(d).unwrap())
        .collect();
    assert_eq!(basis.len(), 24);
    let products: Vec<Vec<_>> = basis
        .iter()
        .map(|a| basis.iter().map(|b| a.mul(b).unwrap()).collect())
        .collect();
    let mut triples = 0;
    for (i, a) in basis.iter().enumerate() {
        for (j, ab) in products[i].iter().enumerate() {
            for (k, c) in basis.iter().enumerate() {
                let left = ab.mul(c).unwrap();
                let right = a.mul(&products[j][k]).unwrap();
                assert_eq!(
                    left, right,
                    "(d{i} d{j}) d{k} differs from d{i} (d{j} d{k})"
                );
                triples += 1;
            }
        }
    }
    assert_eq!(triples, 24 * 24 * 24);
}
