//! Thin safe wrappers over the system LAPACK (OpenBLAS) dense symmetric and
//! Hermitian eigensolvers.
//!
//! All buffers are column-major as LAPACK expects; symmetric inputs make the
//! storage order moot as long as both triangles are filled, which the callers
//! guarantee.

use num_complex::Complex64;

use crate::error::{Error, Result};

#[allow(clippy::too_many_arguments)]
#[link(name = "openblas")]
extern "C" {
    fn dsyevd_(
        jobz: *const u8,
        uplo: *const u8,
        n: *const i32,
        a: *mut f64,
        lda: *const i32,
        w: *mut f64,
        work: *mut f64,
        lwork: *const i32,
        iwork: *mut i32,
        liwork: *const i32,
        info: *mut i32,
    );

    fn dsyevr_(
        jobz: *const u8,
        range: *const u8,
        uplo: *const u8,
        n: *const i32,
        a: *mut f64,
        lda: *const i32,
        vl: *const f64,
        vu: *const f64,
        il: *const i32,
        iu: *const i32,
        abstol: *const f64,
        m: *mut i32,
        w: *mut f64,
        z: *mut f64,
        ldz: *const i32,
        isuppz: *mut i32,
        work: *mut f64,
        lwork: *const i32,
        iwork: *mut i32,
        liwork: *const i32,
        info: *mut i32,
    );

    fn zheevd_(
        jobz: *const u8,
        uplo: *const u8,
        n: *const i32,
        a: *mut Complex64,
        lda: *const i32,
        w: *mut f64,
        work: *mut Complex64,
        lwork: *const i32,
        rwork: *mut f64,
        lrwork: *const i32,
        iwork: *mut i32,
        liwork: *const i32,
        info: *mut i32,
    );
}

/// Full eigendecomposition of a symmetric matrix given as a dense column-major
/// buffer of length `n * n`. Returns eigenvalues ascending; `a` is overwritten
/// with the eigenvectors (column j belongs to eigenvalue j).
pub fn syevd(a: &mut [f64], n: usize) -> Result<Vec<f64>> {
    assert_eq!(a.len(), n * n);
    let ni = n as i32;
    let mut w = vec![0.0f64; n];
    let mut info = 0i32;
    // workspace query
    let (mut wq, mut iwq) = (0.0f64, 0i32);
    let m1 = -1i32;
    unsafe {
        dsyevd_(
            &b'V', &b'L', &ni, a.as_mut_ptr(), &ni, w.as_mut_ptr(), &mut wq, &m1, &mut iwq, &m1,
            &mut info,
        );
    }
    check("dsyevd", info)?;
    let lwork = wq as i32;
    let liwork = iwq;
    let mut work = vec![0.0f64; lwork as usize];
    let mut iwork = vec![0i32; liwork as usize];
    unsafe {
        dsyevd_(
            &b'V',
            &b'L',
            &ni,
            a.as_mut_ptr(),
            &ni,
            w.as_mut_ptr(),
            work.as_mut_ptr(),
            &lwork,
            iwork.as_mut_ptr(),
            &liwork,
            &mut info,
        );
    }
    check("dsyevd", info)?;
    Ok(w)
}

/// Eigenpairs `il..=iu` (1-based, ascending order) of a symmetric matrix.
/// Returns `(eigenvalues, eigenvectors)` with eigenvectors flattened
/// column-major (`m` columns of length `n`). The input buffer is destroyed.
pub fn syevr_range(a: &mut [f64], n: usize, il: usize, iu: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    assert_eq!(a.len(), n * n);
    assert!(1 <= il && il <= iu && iu <= n);
    let ni = n as i32;
    let (ili, iui) = (il as i32, iu as i32);
    let mcols = iu - il + 1;
    let mut w = vec![0.0f64; n];
    let mut z = vec![0.0f64; n * mcols];
    let mut isuppz = vec![0i32; 2 * mcols];
    let (vl, vu, abstol) = (0.0f64, 0.0f64, 0.0f64);
    let mut m = 0i32;
    let mut info = 0i32;
    let (mut wq, mut iwq) = (0.0f64, 0i32);
    let m1 = -1i32;
    unsafe {
        dsyevr_(
            &b'V', &b'I', &b'L', &ni, a.as_mut_ptr(), &ni, &vl, &vu, &ili, &iui, &abstol, &mut m,
            w.as_mut_ptr(), z.as_mut_ptr(), &ni, isuppz.as_mut_ptr(), &mut wq, &m1, &mut iwq, &m1,
            &mut info,
        );
    }
    check("dsyevr", info)?;
    let lwork = wq as i32;
    let liwork = iwq;
    let mut work = vec![0.0f64; lwork as usize];
    let mut iwork = vec![0i32; liwork as usize];
    unsafe {
        dsyevr_(
            &b'V',
            &b'I',
            &b'L',
            &ni,
            a.as_mut_ptr(),
            &ni,
            &vl,
            &vu,
            &ili,
            &iui,
            &abstol,
            &mut m,
            w.as_mut_ptr(),
            z.as_mut_ptr(),
            &ni,
            isuppz.as_mut_ptr(),
            work.as_mut_ptr(),
            &lwork,
            iwork.as_mut_ptr(),
            &liwork,
            &mut info,
        );
    }
    check("dsyevr", info)?;
    let m = m as usize;
    w.truncate(m);
    z.truncate(n * m);
    Ok((w, z))
}

/// Full eigendecomposition of a Hermitian matrix (column-major buffer).
/// Eigenvalues ascending; `a` is overwritten with the eigenvectors.
pub fn zheevd(a: &mut [Complex64], n: usize) -> Result<Vec<f64>> {
    assert_eq!(a.len(), n * n);
    let ni = n as i32;
    let mut w = vec![0.0f64; n];
    let mut info = 0i32;
    let (mut wq, mut rwq, mut iwq) = (Complex64::new(0.0, 0.0), 0.0f64, 0i32);
    let m1 = -1i32;
    unsafe {
        zheevd_(
            &b'V', &b'L', &ni, a.as_mut_ptr(), &ni, w.as_mut_ptr(), &mut wq, &m1, &mut rwq, &m1,
            &mut iwq, &m1, &mut info,
        );
    }
    check("zheevd", info)?;
    let lwork = wq.re as i32;
    let lrwork = rwq as i32;
    let liwork = iwq;
    let mut work = vec![Complex64::new(0.0, 0.0); lwork as usize];
    let mut rwork = vec![0.0f64; lrwork as usize];
    let mut iwork = vec![0i32; liwork as usize];
    unsafe {
        zheevd_(
            &b'V',
            &b'L',
            &ni,
            a.as_mut_ptr(),
            &ni,
            w.as_mut_ptr(),
            work.as_mut_ptr(),
            &lwork,
            rwork.as_mut_ptr(),
            &lrwork,
            iwork.as_mut_ptr(),
            &liwork,
            &mut info,
        );
    }
    check("zheevd", info)?;
    Ok(w)
}

fn check(routine: &'static str, info: i32) -> Result<()> {
    if info == 0 {
        Ok(())
    } else {
        Err(Error::Lapack { routine, info })
    }
}
