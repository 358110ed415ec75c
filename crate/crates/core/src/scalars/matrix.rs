use super::field::{Field, Ring, ScalarError};

/// Dense row-major matrix over a field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, F::one());
        }
        m
    }

    /// Panics if the rows have different lengths.
    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix rows");
        let n = rows.len();
        Matrix {
            rows: n,
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Builds the matrix whose columns are the given vectors.
    pub fn from_columns(columns: &[Vec<F>], height: usize) -> Self {
        let mut m = Self::zeros(height, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), height, "column length mismatch");
            for (i, x) in c.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(F::zero(), |acc, (a, b)| acc.add(&a.mul(b)))
            })
            .collect()
    }
}

/// Row-echelon form computed without fractions.
struct Echelon<R> {
    rows: Vec<Vec<R>>,
    pivots: Vec<usize>,
    /// Product of the per-row denominators cleared before elimination.
    row_scale: Vec<R>,
    negated: bool,
}

fn to_ring_rows<F: Field>(m: &Matrix<F>) -> (Vec<Vec<F::Ring>>, Vec<F::Ring>) {
    let mut rows = Vec::with_capacity(m.rows);
    let mut scales = Vec::with_capacity(m.rows);
    for i in 0..m.rows {
        let parts: Vec<_> = m.row(i).iter().map(F::numer_denom).collect();
        let mut l = F::Ring::one();
        for (n, d) in &parts {
            if !n.is_zero() {
                l = l.lcm(d);
            }
        }
        let row = parts
            .iter()
            .map(|(n, d)| {
                if n.is_zero() {
                    F::Ring::zero()
                } else {
                    n.mul(&l.div_exact(d))
                }
            })
            .collect();
        rows.push(row);
        scales.push(l);
    }
    (rows, scales)
}

/// Bareiss elimination. Pivots are the first nonzero entry of each column
/// scanning rows top to bottom; every division is exact.
fn bareiss<F: Field>(m: &Matrix<F>) -> Echelon<F::Ring> {
    let (mut a, row_scale) = to_ring_rows(m);
    let (nr, nc) = (m.rows, m.cols);
    let mut pivots = Vec::new();
    let mut prev = F::Ring::one();
    let mut negated = false;
    let mut k = 0;
    for col in 0..nc {
        if k == nr {
            break;
        }
        let Some(p) = (k..nr).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        if p != k {
            a.swap(p, k);
            negated = !negated;
        }
        let pivot = a[k][col].clone();
        let (top, bottom) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in bottom.iter_mut() {
            let factor = row[col].clone();
            for j in col..nc {
                let v = pivot.mul(&row[j]);
                let v = if factor.is_zero() || pivot_row[j].is_zero() {
                    v
                } else {
                    v.sub(&factor.mul(&pivot_row[j]))
                };
                row[j] = if v.is_zero() { v } else { v.div_exact(&prev) };
            }
        }
        prev = pivot;
        pivots.push(col);
        k += 1;
    }
    a.truncate(nr);
    Echelon {
        rows: a,
        pivots,
        row_scale,
        negated,
    }
}

fn primitive<F: Field>(v: Vec<F>, anchor: usize) -> Vec<F> {
    let parts: Vec<_> = v.iter().map(F::numer_denom).collect();
    let mut l = F::Ring::one();
    for (n, d) in &parts {
        if !n.is_zero() {
            l = l.lcm(d);
        }
    }
    let scaled: Vec<F::Ring> = parts
        .iter()
        .map(|(n, d)| {
            if n.is_zero() {
                F::Ring::zero()
            } else {
                n.mul(&l.div_exact(d))
            }
        })
        .collect();
    let mut g = F::Ring::zero();
    for x in &scaled {
        if !x.is_zero() {
            g = g.gcd(x);
        }
    }
    let flip = scaled[anchor].is_negative();
    scaled
        .iter()
        .map(|x| {
            let y = if g.is_zero() || x.is_zero() {
                x.clone()
            } else {
                x.div_exact(&g)
            };
            F::from_ring(&if flip { y.neg() } else { y })
        })
        .collect()
}

/// Basis of the right nullspace `{x : m x = 0}`.
///
/// Each basis vector has a 1-like entry at one free column before being
/// cleared of denominators and common content.
pub fn nullspace<F: Field>(m: &Matrix<F>) -> Vec<Vec<F>> {
    let ech = bareiss(m);
    let nc = m.cols;
    let rank = ech.pivots.len();
    // Convert pivot rows back to field entries for back substitution.
    let rows: Vec<Vec<F>> = ech.rows[..rank]
        .iter()
        .map(|r| r.iter().map(F::from_ring).collect())
        .collect();
    let is_pivot = {
        let mut v = vec![false; nc];
        for &p in &ech.pivots {
            v[p] = true;
        }
        v
    };
    let mut basis = Vec::new();
    for free in (0..nc).filter(|&j| !is_pivot[j]) {
        let mut x = vec![F::zero(); nc];
        x[free] = F::one();
        for (k, &pc) in ech.pivots.iter().enumerate().rev() {
            let row = &rows[k];
            let mut acc = F::zero();
            for j in pc + 1..nc {
                if !row[j].is_zero() && !x[j].is_zero() {
                    acc = acc.add(&row[j].mul(&x[j]));
                }
            }
            if !acc.is_zero() {
                x[pc] = acc.neg().div(&row[pc]).expect("nonzero pivot");
            }
        }
        basis.push(primitive(x, free));
    }
    basis
}

pub fn rank<F: Field>(m: &Matrix<F>) -> usize {
    bareiss(m).pivots.len()
}

pub fn determinant<F: Field>(m: &Matrix<F>) -> Result<F, ScalarError> {
    if m.rows != m.cols {
        return Err(ScalarError::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let n = m.rows;
    if n == 0 {
        return Ok(F::one());
    }
    let ech = bareiss(m);
    if ech.pivots.len() < n {
        return Ok(F::zero());
    }
    let mut det = F::from_ring(&ech.rows[n - 1][n - 1]);
    if ech.negated {
        det = det.neg();
    }
    let mut scale = F::Ring::one();
    for s in &ech.row_scale {
        scale = scale.mul(s);
    }
    det.div(&F::from_ring(&scale))
}

/// Coefficients expressing `target` in terms of `columns`, if it lies in
/// their span. When the columns are dependent some solution is returned.
pub fn solve_in_span<F: Field>(columns: &[Vec<F>], target: &[F]) -> Option<Vec<F>> {
    let height = target.len();
    let mut all: Vec<Vec<F>> = columns.to_vec();
    all.push(target.to_vec());
    let m = Matrix::from_columns(&all, height);
    let last = columns.len();
    let null = nullspace(&m);
    let v = null.into_iter().find(|v| !v[last].is_zero())?;
    let scale = v[last].neg();
    Some(
        v[..last]
            .iter()
            .map(|x| x.div(&scale).expect("nonzero"))
            .collect(),
    )
}
