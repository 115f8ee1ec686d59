//! Central finite differences for verifying analytic gradients.
//!
//! Only the forward path is touched here, so checks stay independent of the
//! backward code they validate. Run with `f64` inputs: the fixed step
//! `h = 1e-4` does not resolve below single precision.

/// Step used by all gradient checks.
pub const FD_STEP: f64 = 1e-4;

/// Relative error with an absolute floor so that near-zero pairs compare on
/// absolute terms.
pub fn rel_err(a: f64, b: f64) -> f64 {
    let scale = a.abs().max(b.abs());
    if scale < 1e-7 {
        // Both tiny: report the (scaled) absolute difference.
        (a - b).abs() / 1e-7
    } else {
        (a - b).abs() / scale
    }
}

/// Central difference of `f` in coordinate `i` of `x`.
pub fn central_diff<L: FnMut(&[f64]) -> f64>(x: &[f64], i: usize, mut f: L) -> f64 {
    let mut xp = x.to_vec();
    xp[i] += FD_STEP;
    let up = f(&xp);
    xp[i] = x[i] - FD_STEP;
    let down = f(&xp);
    (up - down) / (2.0 * FD_STEP)
}

/// Max relative error between `analytic` and central differences of `f` over
/// every coordinate of `x`.
pub fn central_diff_max_rel_err<L: FnMut(&[f64]) -> f64>(
    x: &[f64],
    analytic: &[f64],
    mut f: L,
) -> f64 {
    assert_eq!(x.len(), analytic.len());
    let mut worst = 0.0f64;
    for i in 0..x.len() {
        let fd = central_diff(x, i, &mut f);
        worst = worst.max(rel_err(analytic[i], fd));
    }
    worst
}

/// Same as [`central_diff_max_rel_err`] but over a subset of coordinates;
/// used for whole-network checks where probing all 65k parameters would be
/// needlessly slow.
pub fn central_diff_max_rel_err_at<L: FnMut(&[f64]) -> f64>(
    x: &[f64],
    analytic: &[f64],
    indices: &[usize],
    mut f: L,
) -> f64 {
    assert_eq!(x.len(), analytic.len());
    let mut worst = 0.0f64;
    for &i in indices {
        let fd = central_diff(x, i, &mut f);
        worst = worst.max(rel_err(analytic[i], fd));
    }
    worst
}
