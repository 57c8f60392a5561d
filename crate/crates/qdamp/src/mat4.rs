//! Small fixed-size matrix helpers and the shared fixed-step RK4 integrator
//! for linear systems y' = A·y.

use crate::scalar::{lit, Scalar};

pub(crate) type Mat4<T> = [[T; 4]; 4];

#[cfg(test)]
pub(crate) fn identity<T: Scalar, const N: usize>() -> [[T; N]; N] {
    let mut m = [[T::zero(); N]; N];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = T::one();
    }
    m
}

pub(crate) fn matmul<T: Scalar, const N: usize>(
    a: &[[T; N]; N],
    b: &[[T; N]; N],
) -> [[T; N]; N] {
    let mut out = [[T::zero(); N]; N];
    for i in 0..N {
        for k in 0..N {
            let aik = a[i][k];
            for j in 0..N {
                out[i][j] += aik * b[k][j];
            }
        }
    }
    out
}

pub(crate) fn matvec<T: Scalar, const N: usize>(a: &[[T; N]; N], v: &[T; N]) -> [T; N] {
    let mut out = [T::zero(); N];
    for i in 0..N {
        let mut s = T::zero();
        for j in 0..N {
            s += a[i][j] * v[j];
        }
        out[i] = s;
    }
    out
}

/// Row-sum (infinity) norm; bounds every eigenvalue magnitude of `a`.
pub(crate) fn inf_norm<T: Scalar, const N: usize>(a: &[[T; N]; N]) -> T {
    let mut worst = T::zero();
    for row in a {
        let mut s = T::zero();
        for &x in row {
            s += x.abs();
        }
        worst = worst.max(s);
    }
    worst
}

/// Largest step for which fixed-step RK4 on y' = A·y keeps its local
/// truncation error near (‖A‖h)⁵/120 ≈ 2.6e-14, i.e. global error well
/// under 1e-10 over thousands of steps.
pub(crate) fn rk4_max_step<T: Scalar, const N: usize>(a: &[[T; N]; N]) -> T {
    let norm = inf_norm(a);
    if norm > T::zero() {
        lit::<T>(0.005) / norm
    } else {
        T::infinity()
    }
}

fn axpy<T: Scalar, const N: usize>(y: &[T; N], k: &[T; N], s: T) -> [T; N] {
    let mut out = *y;
    for i in 0..N {
        out[i] = y[i] + s * k[i];
    }
    out
}

/// One classical fourth-order Runge–Kutta step for y' = A·y.
pub(crate) fn rk4_step<T: Scalar, const N: usize>(a: &[[T; N]; N], y: &[T; N], h: T) -> [T; N] {
    let half = h / lit::<T>(2.0);
    let k1 = matvec(a, y);
    let k2 = matvec(a, &axpy(y, &k1, half));
    let k3 = matvec(a, &axpy(y, &k2, half));
    let k4 = matvec(a, &axpy(y, &k3, h));
    let sixth = h / lit::<T>(6.0);
    let two = lit::<T>(2.0);
    let mut out = *y;
    for i in 0..N {
        out[i] = y[i] + sixth * (k1[i] + two * (k2[i] + k3[i]) + k4[i]);
    }
    out
}

/// Integrate y' = A·y from 0 to `t` with uniform steps no longer than
/// `max_step`.
pub(crate) fn integrate_linear<T: Scalar, const N: usize>(
    a: &[[T; N]; N],
    y0: [T; N],
    t: T,
    max_step: T,
) -> [T; N] {
    if t == T::zero() {
        return y0;
    }
    let n = (t / max_step)
        .ceil()
        .to_usize()
        .unwrap_or(1)
        .max(1);
    let h = t / T::from_usize(n).expect("step count fits the scalar");
    let mut y = y0;
    for _ in 0..n {
        y = rk4_step(a, &y, h);
    }
    y
}
