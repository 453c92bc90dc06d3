//! Dense complex linear algebra shared by the other modules.
//!
//! Thin wrappers around LAPACK (through `ndarray-linalg`) plus the
//! Kronecker/vectorization helpers used to build superoperators.
//! Vectorization is column-stacking: `vec(X)[j*d + i] = X[i, j]`.

use ndarray::prelude::*;
use ndarray_linalg::{Eig, Eigh, Inverse, SVD, UPLO};
use num_complex::Complex64 as C64;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum LinalgError {
    #[error("eigendecomposition failed: {0}")]
    Eig(String),
    #[error("singular value decomposition failed: {0}")]
    Svd(String),
    #[error("matrix inversion failed: {0}")]
    Inverse(String),
}

pub const IM: C64 = C64::new(0.0, 1.0);

pub fn c(re: f64) -> C64 {
    C64::new(re, 0.0)
}

/// Kronecker product with the first factor indexing the slow (outer) axis.
pub fn kron(a: &Array2<C64>, b: &Array2<C64>) -> Array2<C64> {
    let (ra, ca) = a.dim();
    let (rb, cb) = b.dim();
    let mut out = Array2::zeros((ra * rb, ca * cb));
    for i in 0..ra {
        for j in 0..ca {
            let aij = a[[i, j]];
            if aij == C64::ZERO {
                continue;
            }
            for k in 0..rb {
                for l in 0..cb {
                    out[[i * rb + k, j * cb + l]] = aij * b[[k, l]];
                }
            }
        }
    }
    out
}

pub fn dagger(a: &Array2<C64>) -> Array2<C64> {
    let mut out = a.t().to_owned();
    out.mapv_inplace(|z| z.conj());
    out
}

pub fn hermitize(a: &Array2<C64>) -> Array2<C64> {
    (a + &dagger(a)).mapv(|z| z * 0.5)
}

pub fn norm_fro(a: &Array2<C64>) -> f64 {
    a.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

pub fn norm_vec(v: &Array1<C64>) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

pub fn inner(a: &Array1<C64>, b: &Array1<C64>) -> C64 {
    a.iter().zip(b.iter()).map(|(x, y)| x.conj() * y).sum()
}

pub fn trace(a: &Array2<C64>) -> C64 {
    a.diag().iter().sum()
}

/// Column-stacking vectorization.
pub fn vec_col(x: &Array2<C64>) -> Array1<C64> {
    let d = x.nrows();
    let mut v = Array1::zeros(d * d);
    for j in 0..d {
        for i in 0..d {
            v[j * d + i] = x[[i, j]];
        }
    }
    v
}

/// Inverse of [`vec_col`].
pub fn unvec_col(v: &Array1<C64>, d: usize) -> Array2<C64> {
    let mut x = Array2::zeros((d, d));
    for j in 0..d {
        for i in 0..d {
            x[[i, j]] = v[j * d + i];
        }
    }
    x
}

/// Hermitian eigendecomposition, eigenvalues ascending.
pub fn eigh(a: &Array2<C64>) -> Result<(Array1<f64>, Array2<C64>), LinalgError> {
    a.eigh(UPLO::Lower).map_err(|e| LinalgError::Eig(e.to_string()))
}

/// General complex eigendecomposition (values, right eigenvectors as columns).
pub fn eig(a: &Array2<C64>) -> Result<(Array1<C64>, Array2<C64>), LinalgError> {
    a.eig().map_err(|e| LinalgError::Eig(e.to_string()))
}

pub fn inverse(a: &Array2<C64>) -> Result<Array2<C64>, LinalgError> {
    a.inv().map_err(|e| LinalgError::Inverse(e.to_string()))
}

/// Orthonormal basis (columns) of the column space of `a`, keeping
/// singular directions above `rtol` times the largest singular value.
pub fn column_space(a: &Array2<C64>, rtol: f64) -> Result<Array2<C64>, LinalgError> {
    if a.ncols() == 0 || norm_fro(a) == 0.0 {
        return Ok(Array2::zeros((a.nrows(), 0)));
    }
    let (u, s, _) = a.svd(true, false).map_err(|e| LinalgError::Svd(e.to_string()))?;
    let u = u.expect("left singular vectors requested");
    let smax = s.iter().cloned().fold(0.0, f64::max);
    let rank = s.iter().filter(|&&sv| sv > rtol * smax).count();
    Ok(u.slice(s![.., ..rank]).to_owned())
}

/// Orthonormal basis (columns) of the right null space of `a`.
pub fn null_space(a: &Array2<C64>, rtol: f64) -> Result<Array2<C64>, LinalgError> {
    let n = a.ncols();
    if n == 0 {
        return Ok(Array2::zeros((0, 0)));
    }
    if a.nrows() == 0 || norm_fro(a) == 0.0 {
        return Ok(Array2::eye(n));
    }
    let (_, s, vt) = a.svd(false, true).map_err(|e| LinalgError::Svd(e.to_string()))?;
    let vt = vt.expect("right singular vectors requested");
    let smax = s.iter().cloned().fold(0.0, f64::max);
    let rank = s.iter().filter(|&&sv| sv > rtol * smax).count();
    let mut out = Array2::zeros((n, n - rank));
    for (k, row) in (rank..vt.nrows()).chain(vt.nrows()..n).enumerate() {
        if row < vt.nrows() {
            for j in 0..n {
                out[[j, k]] = vt[[row, j]].conj();
            }
        }
    }
    // rows of V^H beyond min(m, n) do not exist; complete by projecting
    // out the row space from the standard basis if needed
    if vt.nrows() < n {
        let have = rank + (vt.nrows() - rank);
        let mut basis: Vec<Array1<C64>> = (0..have)
            .filter(|&k| k < out.ncols())
            .map(|k| out.column(k).to_owned())
            .collect();
        let row_basis: Vec<Array1<C64>> = (0..vt.nrows())
            .map(|r| vt.row(r).mapv(|z| z.conj()))
            .collect();
        let mut k = basis.len();
        let mut e = 0;
        while k < n - rank && e < n {
            let mut v = Array1::<C64>::zeros(n);
            v[e] = c(1.0);
            for b in row_basis.iter().chain(basis.iter()) {
                let ip = inner(b, &v);
                v = v - b.mapv(|z| z * ip);
            }
            let nv = norm_vec(&v);
            if nv > 1e-8 {
                let v = v.mapv(|z| z / nv);
                for j in 0..n {
                    out[[j, k]] = v[j];
                }
                basis.push(v);
                k += 1;
            }
            e += 1;
        }
    }
    Ok(out)
}

/// Real-linear null space: `a` is a real matrix, result columns are an
/// orthonormal basis of `ker a`.
pub fn null_space_real(a: &Array2<f64>, rtol: f64) -> Result<Array2<f64>, LinalgError> {
    let n = a.ncols();
    if n == 0 {
        return Ok(Array2::zeros((0, 0)));
    }
    let fro = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    if a.nrows() == 0 || fro == 0.0 {
        return Ok(Array2::eye(n));
    }
    let (_, s, vt) = a.svd(false, true).map_err(|e| LinalgError::Svd(e.to_string()))?;
    let vt = vt.expect("right singular vectors requested");
    let smax = s.iter().cloned().fold(0.0, f64::max);
    let rank = s.iter().filter(|&&sv| sv > rtol * smax).count();
    let ncols = n - rank;
    let mut out = Array2::zeros((n, ncols));
    for k in 0..ncols {
        let row = rank + k;
        if row < vt.nrows() {
            for j in 0..n {
                out[[j, k]] = vt[[row, j]];
            }
        }
    }
    Ok(out)
}

/// Matrix exponential by scaling and squaring with a 13th-order Pade
/// approximant.
pub fn expm(a: &Array2<C64>) -> Result<Array2<C64>, LinalgError> {
    let d = a.nrows();
    let norm = a
        .rows()
        .into_iter()
        .map(|r| r.iter().map(|z| z.norm()).sum::<f64>())
        .fold(0.0, f64::max);
    let theta13 = 5.371920351148152;
    let s = if norm > theta13 {
        (norm / theta13).log2().ceil() as i32
    } else {
        0
    };
    let a = a.mapv(|z| z / c(2f64.powi(s)));

    const B: [f64; 14] = [
        64764752532480000.0,
        32382376266240000.0,
        7771770303897600.0,
        1187353796428800.0,
        129060195264000.0,
        10559470521600.0,
        670442572800.0,
        33522128640.0,
        1323241920.0,
        40840800.0,
        960960.0,
        16380.0,
        182.0,
        1.0,
    ];
    let id: Array2<C64> = Array2::eye(d);
    let a2 = a.dot(&a);
    let a4 = a2.dot(&a2);
    let a6 = a2.dot(&a4);
    let u_inner = a6.mapv(|z| z * c(B[13]))
        + a4.mapv(|z| z * c(B[11]))
        + a2.mapv(|z| z * c(B[9]));
    let u = a.dot(
        &(a6.dot(&u_inner)
            + a6.mapv(|z| z * c(B[7]))
            + a4.mapv(|z| z * c(B[5]))
            + a2.mapv(|z| z * c(B[3]))
            + id.mapv(|z| z * c(B[1]))),
    );
    let v_inner = a6.mapv(|z| z * c(B[12]))
        + a4.mapv(|z| z * c(B[10]))
        + a2.mapv(|z| z * c(B[8]));
    let v = a6.dot(&v_inner)
        + a6.mapv(|z| z * c(B[6]))
        + a4.mapv(|z| z * c(B[4]))
        + a2.mapv(|z| z * c(B[2]))
        + id.mapv(|z| z * c(B[0]));
    let num = &v + &u;
    let den = &v - &u;
    let mut r = inverse(&den)?.dot(&num);
    for _ in 0..s {
        r = r.dot(&r);
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn vec_unvec_roundtrip() {
        let x = array![[c(1.0), c(2.0)], [c(3.0), c(4.0)]];
        assert_eq!(unvec_col(&vec_col(&x), 2), x);
        // column stacking: first column first
        assert_eq!(vec_col(&x)[1], c(3.0));
    }

    #[test]
    fn kron_matches_embedding_order() {
        let a = array![[c(0.0), c(1.0)], [c(0.0), c(0.0)]];
        let id = Array2::eye(2);
        let k = kron(&a, &id);
        // first factor indexes blocks of size 2
        assert_eq!(k[[0, 2]], c(1.0));
        assert_eq!(k[[1, 3]], c(1.0));
    }

    #[test]
    fn expm_diagonal() {
        let a = array![[c(1.0), c(0.0)], [c(0.0), c(-2.0)]];
        let e = expm(&a).unwrap();
        assert_abs_diff_eq!(e[[0, 0]].re, 1f64.exp(), epsilon = 1e-12);
        assert_abs_diff_eq!(e[[1, 1]].re, (-2f64).exp(), epsilon = 1e-12);
    }

    #[test]
    fn expm_large_norm_uses_squaring() {
        let a = array![[c(0.0), c(30.0)], [c(-30.0), c(0.0)]];
        let e = expm(&a).unwrap();
        // exp of a rotation generator stays unitary
        let should_be_id = e.dot(&dagger(&e));
        assert_abs_diff_eq!(norm_fro(&(should_be_id - Array2::<C64>::eye(2))), 0.0, epsilon = 1e-10);
        assert_abs_diff_eq!(e[[0, 0]].re, 30f64.cos(), epsilon = 1e-9);
    }

    #[test]
    fn null_space_of_rank_one() {
        let a = array![[c(1.0), c(1.0)]];
        let ns = null_space(&a, 1e-12).unwrap();
        assert_eq!(ns.ncols(), 1);
        let v = ns.column(0);
        assert_abs_diff_eq!((v[0] + v[1]).norm(), 0.0, epsilon = 1e-12);
    }

    #[test]
    fn null_space_wide_matrix_completes_basis() {
        // 1 x 3 matrix: kernel has dimension 2 even though only one
        // right-singular row is returned by thin svd backends
        let a = array![[c(1.0), c(0.0), c(0.0)]];
        let ns = null_space(&a, 1e-12).unwrap();
        assert_eq!(ns.ncols(), 2);
        for k in 0..2 {
            assert_abs_diff_eq!(ns[[0, k]].norm(), 0.0, epsilon = 1e-12);
            assert_abs_diff_eq!(norm_vec(&ns.column(k).to_owned()), 1.0, epsilon = 1e-12);
        }
    }
}
