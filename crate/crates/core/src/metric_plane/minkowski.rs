//! Arithmetic in Minkowski space `R^{2,1}` for the hyperboloid model.
//!
//! Convention: `⟨x, y⟩ = −x0·y0 + x1·y1 + x2·y2`, so hyperboloid points satisfy
//! `⟨x, x⟩ = −1` with `x0 ≥ 1`.

pub type Vec3 = [f64; 3];

#[inline]
pub fn mdot(a: Vec3, b: Vec3) -> f64 {
    -a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

/// Lorentz cross product: Minkowski-orthogonal to both arguments.
#[inline]
pub fn lcross(a: Vec3, b: Vec3) -> Vec3 {
    [
        -(a[1] * b[2] - a[2] * b[1]),
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

#[inline]
pub fn add(a: Vec3, b: Vec3) -> Vec3 {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

#[inline]
pub fn sub(a: Vec3, b: Vec3) -> Vec3 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

#[inline]
pub fn scale(a: Vec3, k: f64) -> Vec3 {
    [a[0] * k, a[1] * k, a[2] * k]
}

#[inline]
pub fn euclid_norm(a: Vec3) -> f64 {
    (a[0] * a[0] + a[1] * a[1] + a[2] * a[2]).sqrt()
}

/// Rescales a spacelike vector to Minkowski norm 1; `None` if not spacelike.
pub fn normalize_spacelike(a: Vec3) -> Option<Vec3> {
    let q = mdot(a, a);
    let e = euclid_norm(a);
    if !(q > 1e-24 * e * e) || e == 0.0 {
        return None;
    }
    Some(scale(a, 1.0 / q.sqrt()))
}

/// Projects onto the upper sheet by recomputing `x0` from the spatial part.
#[inline]
pub fn lift(x1: f64, x2: f64) -> Vec3 {
    [(1.0 + x1 * x1 + x2 * x2).sqrt(), x1, x2]
}

/// Hyperbolic distance between two hyperboloid points.
///
/// Far apart: `acosh` of the pairing (clamped at 1). Close together: the
/// half-chord form `2·asinh(sqrt((B − 1)/2))` with `B − 1` evaluated from
/// coordinate differences, which avoids the cancellation in `B − 1`.
pub fn distance(x: Vec3, y: Vec3) -> f64 {
    let pairing = x[0] * y[0] - x[1] * y[1] - x[2] * y[2];
    if pairing > 2.0 {
        return pairing.acosh();
    }
    let d1 = x[1] - y[1];
    let d2 = x[2] - y[2];
    let s1 = x[1] + y[1];
    let s2 = x[2] + y[2];
    let d0 = (d1 * s1 + d2 * s2) / (x[0] + y[0]);
    let half_b_minus_1 = 0.25 * ((d1 * d1 + d2 * d2) - d0 * d0);
    2.0 * half_b_minus_1.max(0.0).sqrt().asinh()
}

pub type Mat3 = [[f64; 3]; 3];

pub fn mat_vec(m: &Mat3, v: Vec3) -> Vec3 {
    [
        m[0][0] * v[0] + m[0][1] * v[1] + m[0][2] * v[2],
        m[1][0] * v[0] + m[1][1] * v[1] + m[1][2] * v[2],
        m[2][0] * v[0] + m[2][1] * v[1] + m[2][2] * v[2],
    ]
}

pub fn mat_mul(a: &Mat3, b: &Mat3) -> Mat3 {
    let mut out = [[0.0; 3]; 3];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = (0..3).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

/// Inverse of a Lorentz matrix: `J Mᵀ J`.
pub fn lorentz_inverse(m: &Mat3) -> Mat3 {
    let sign = |i: usize| if i == 0 { -1.0 } else { 1.0 };
    let mut out = [[0.0; 3]; 3];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = sign(i) * m[j][i] * sign(j);
        }
    }
    out
}

/// Hyperbolic translation taking the model origin `(1, 0, 0)` to `p`.
pub fn boost_to(p: Vec3) -> Mat3 {
    let k = 1.0 / (1.0 + p[0]);
    [
        [p[0], p[1], p[2]],
        [p[1], 1.0 + p[1] * p[1] * k, p[1] * p[2] * k],
        [p[2], p[1] * p[2] * k, 1.0 + p[2] * p[2] * k],
    ]
}

/// Rotation about the model origin by `angle`.
pub fn rotation(angle: f64) -> Mat3 {
    let (s, c) = angle.sin_cos();
    [[1.0, 0.0, 0.0], [0.0, c, -s], [0.0, s, c]]
}
