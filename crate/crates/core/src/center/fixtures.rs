use super::CenterError;
use crate::diagrams::Wall;
use crate::scalars::Field;
use crate::wbr_algebra::{AlgebraElement, WalledBrauer};

/// `C_1, ..., C_10`: a basis of the centralizer of the subalgebra spanned
/// by the two symmetric groups in `B_{2,2}`, one element per walled
/// generalized cycle type.
pub fn symmetric_pair_centralizer_b22<F: Field>(
    alg: &WalledBrauer<F>,
) -> Result<Vec<AlgebraElement<F>>, CenterError> {
    if alg.wall() != Wall::new(2, 2) {
        return Err(CenterError::WrongWall);
    }
    let c1 = alg.one();
    let c2 = alg.transposition(1, 2);
    let c3 = alg.transposition(3, 4);
    let c4 = alg
        .e(2, 3)
        .add(&alg.e(1, 3))?
        .add(&alg.e(1, 4))?
        .add(&alg.e(2, 4))?;
    let c5 = alg
        .e(1, 3)
        .mul(&alg.e(2, 4))?
        .add(&alg.e(1, 4).mul(&alg.e(2, 3))?)?;
    let c6 = c2.mul(&c3)?;
    let c7 = c2.mul(&c4)?;
    let c8 = c3.mul(&c4)?;
    let c9 = c2.mul(&c5)?;
    let c10 = c4.mul(&c6)?;
    Ok(vec![c1, c2, c3, c4, c5, c6, c7, c8, c9, c10])
}

/// `B_1, ..., B_6`: the basis of the center of `B_{2,2}` obtained from the
/// centralizer by imposing commutation with `e_{2,3}`.
pub fn center_basis_b22<F: Field>(
    alg: &WalledBrauer<F>,
) -> Result<Vec<AlgebraElement<F>>, CenterError> {
    let c = symmetric_pair_centralizer_b22(alg)?;
    let d = alg.delta();
    let b1 = c[0].clone();
    let b2 = c[3].sub(&c[1])?.sub(&c[2])?;
    let b3 = c[7].sub(&c[2].scale(d))?.sub(&c[4])?.sub(&c[5])?;
    let b4 = c[6].sub(&c[1].scale(d))?.sub(&c[4])?.sub(&c[5])?;
    let b5 = c[8].sub(&c[4].scale(d))?;
    let b6 = c[9].sub(&c[2])?.sub(&c[5].scale(d))?.sub(&c[1])?;
    Ok(vec![b1, b2, b3, b4, b5, b6])
}
