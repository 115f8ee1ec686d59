use crate::scalar::Scalar;

/// Leaky rectified linear unit: `x` for `x >= 0`, `slope * x` otherwise.
#[inline]
pub fn leaky_relu<F: Scalar>(x: F, slope: F) -> F {
    if x >= F::zero() {
        x
    } else {
        slope * x
    }
}

/// Derivative with respect to the pre-activation value.
#[inline]
pub fn leaky_relu_grad<F: Scalar>(x: F, slope: F) -> F {
    if x >= F::zero() {
        F::one()
    } else {
        slope
    }
}

pub fn leaky_relu_slice<F: Scalar>(xs: &mut [F], slope: F) {
    for x in xs {
        *x = leaky_relu(*x, slope);
    }
}

/// Multiplies `upstream` by the activation derivative at the cached
/// pre-activation values.
pub fn leaky_relu_backward_slice<F: Scalar>(pre: &[F], upstream: &mut [F], slope: F) {
    for (g, x) in upstream.iter_mut().zip(pre) {
        *g = *g * leaky_relu_grad(*x, slope);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positive_passes_through() {
        assert_eq!(leaky_relu(2.0f64, 0.01), 2.0);
    }

    #[test]
    fn negative_is_scaled() {
        assert!((leaky_relu(-3.0f64, 0.01) - (-0.03)).abs() < 1e-12);
    }

    #[test]
    fn gradient_below_zero_equals_slope() {
        assert_eq!(leaky_relu_grad(-0.5f64, 0.01), 0.01);
        assert_eq!(leaky_relu_grad(0.5f64, 0.01), 1.0);
        // Convention at exactly zero: the x >= 0 branch.
        assert_eq!(leaky_relu_grad(0.0f64, 0.01), 1.0);
    }
}
