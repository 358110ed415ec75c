use std::sync::Arc;

use super::element::QElement;
use super::rewriting::RewriteSystem;
use super::QError;
use crate::scalars::Field;

/// `T_{(a,b)}` for `a < b` on one side of the wall: the conjugate of `S_a`
/// by `S_{a+1} ... S_{b-1}`, built from inverses on the left side and from
/// the generators themselves on the right side.
pub fn transposition_element<F: Field>(
    sys: &Arc<RewriteSystem<F>>,
    a: usize,
    b: usize,
) -> Result<QElement<F>, QError> {
    let r = sys.wall().r;
    let n = sys.wall().n();
    if !(1 <= a && a < b && b <= n && (b <= r || a > r)) {
        return Err(QError::NoSuchGenerator(format!("T({a},{b})")));
    }
    let g = |i: usize| {
        if b <= r {
            QElement::s_inv(sys, i)
        } else {
            QElement::s(sys, i)
        }
    };
    let mut acc = g(a)?;
    for i in a + 1..b {
        let x = g(i)?;
        acc = x.mul(&acc)?.mul(&x)?;
    }
    Ok(acc)
}

/// `E_{j,k}` for `j <= r < k`: `E_{r,r+1}` conjugated by
/// `(S_{k-1} ... S_{r+1})(S_j^-1 ... S_{r-1}^-1)`.
pub fn contraction<F: Field>(
    sys: &Arc<RewriteSystem<F>>,
    j: usize,
    k: usize,
) -> Result<QElement<F>, QError> {
    let r = sys.wall().r;
    if !(1 <= j && j <= r && r < k && k <= sys.wall().n()) {
        return Err(QError::NoSuchGenerator(format!("E({j},{k})")));
    }
    let mut left = QElement::one(sys);
    let mut right = QElement::one(sys);
    for i in (r + 1..k).rev() {
        let x = QElement::s(sys, i)?;
        left = left.mul(&x)?;
        right = x.mul(&right)?;
    }
    for i in j..r {
        let x = QElement::s_inv(sys, i)?;
        left = left.mul(&x)?;
        right = x.mul(&right)?;
    }
    left.mul(&QElement::e(sys)?)?.mul(&right)
}

/// `rho (delta - sum_{j <= r} E_{j,k})`.
fn contraction_part<F: Field>(
    sys: &Arc<RewriteSystem<F>>,
    k: usize,
) -> Result<QElement<F>, QError> {
    let p = &sys.params;
    let mut acc = QElement::scalar(sys, p.delta.clone());
    for j in 1..=sys.wall().r {
        acc = acc.sub(&contraction(sys, j, k)?)?;
    }
    Ok(acc.scale(&p.rho))
}

/// `L_1, ..., L_{r+s}` by the defining recursion: `L_1 = 0`,
/// `L_k = S_{k-1}^-1 L_{k-1} S_{k-1}^-1 + S_{k-1}^-1` for `k <= r`,
/// `L_{r+1} = rho (delta - sum_j E_{j,r+1})` and
/// `L_k = S_{k-1} L_{k-1} S_{k-1} + S_{k-1}` for `k >= r+2`.
pub fn q_jm_recursive<F: Field>(sys: &Arc<RewriteSystem<F>>) -> Result<Vec<QElement<F>>, QError> {
    let r = sys.wall().r;
    let mut out: Vec<QElement<F>> = Vec::with_capacity(sys.wall().n());
    for k in 1..=sys.wall().n() {
        let l = if k == r + 1 {
            contraction_part(sys, k)?
        } else if k == 1 {
            QElement::zero(sys)
        } else {
            let x = if k <= r {
                QElement::s_inv(sys, k - 1)?
            } else {
                QElement::s(sys, k - 1)?
            };
            x.mul(&out[k - 2])?.mul(&x)?.add(&x)?
        };
        out.push(l);
    }
    Ok(out)
}

/// `L_k = sum_{j<k} T_{(j,k)}` for `k <= r` and
/// `L_k = rho (delta - sum_j E_{j,k}) + rho^2 sum_{r<j<k} T_{(j,k)}` for
/// `k > r`.
pub fn q_jm_closed_form<F: Field>(sys: &Arc<RewriteSystem<F>>) -> Result<Vec<QElement<F>>, QError> {
    let r = sys.wall().r;
    let rho2 = sys.params.rho.mul(&sys.params.rho);
    let mut out = Vec::with_capacity(sys.wall().n());
    for k in 1..=sys.wall().n() {
        let mut l = if k <= r {
            QElement::zero(sys)
        } else {
            contraction_part(sys, k)?
        };
        let start = if k <= r { 1 } else { r + 1 };
        for j in start..k {
            let t = transposition_element(sys, j, k)?;
            l = l.add(&if k <= r { t } else { t.scale(&rho2) })?;
        }
        out.push(l);
    }
    Ok(out)
}

/// The recursive family, cross-checked against the closed forms.
pub fn q_jm_family<F: Field>(sys: &Arc<RewriteSystem<F>>) -> Result<Vec<QElement<F>>, QError> {
    let rec = q_jm_recursive(sys)?;
    let closed = q_jm_closed_form(sys)?;
    if let Some(k) = rec.iter().zip(&closed).position(|(a, b)| a != b) {
        return Err(QError::ClosedFormMismatch { k: k + 1 });
    }
    Ok(rec)
}

/// `L_1^m + ... + L_r^m + (-1)^{m+1} (L_{r+1}^m + ... + L_{r+s}^m)`.
pub fn q_power_sum<F: Field>(
    sys: &Arc<RewriteSystem<F>>,
    family: &[QElement<F>],
    m: u32,
) -> Result<QElement<F>, QError> {
    let r = sys.wall().r;
    let mut acc = QElement::zero(sys);
    for (i, l) in family.iter().enumerate() {
        let x = l.pow(m)?;
        acc = if i < r || m % 2 == 1 {
            acc.add(&x)?
        } else {
            acc.sub(&x)?
        };
    }
    Ok(acc)
}
