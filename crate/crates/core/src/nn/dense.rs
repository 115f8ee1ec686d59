use crate::error::{Error, Result};
use crate::scalar::Scalar;

fn check_dims<F: Scalar>(input: &[F], weights: &[F], bias: &[F]) -> Result<(usize, usize)> {
    let out_dim = bias.len();
    let in_dim = input.len();
    if out_dim == 0 || weights.len() != out_dim * in_dim {
        return Err(Error::shape(format!(
            "dense weights length {} incompatible with input {} / output {}",
            weights.len(),
            in_dim,
            out_dim
        )));
    }
    Ok((in_dim, out_dim))
}

/// Affine map `y = W x + b`; weights are `[out][in]` row-major.
pub fn dense_forward<F: Scalar>(input: &[F], weights: &[F], bias: &[F]) -> Result<Vec<F>> {
    let (in_dim, out_dim) = check_dims(input, weights, bias)?;
    let mut out = Vec::with_capacity(out_dim);
    for o in 0..out_dim {
        let row = &weights[o * in_dim..(o + 1) * in_dim];
        let mut acc = bias[o];
        for (w, x) in row.iter().zip(input) {
            acc = acc + *w * *x;
        }
        out.push(acc);
    }
    Ok(out)
}

/// Gradients of [`dense_forward`]: returns `(grad_input, grad_weights, grad_bias)`.
pub fn dense_backward<F: Scalar>(
    input: &[F],
    weights: &[F],
    upstream: &[F],
) -> Result<(Vec<F>, Vec<F>, Vec<F>)> {
    let in_dim = input.len();
    let out_dim = upstream.len();
    if weights.len() != out_dim * in_dim || out_dim == 0 {
        return Err(Error::shape(format!(
            "dense weights length {} incompatible with input {} / upstream {}",
            weights.len(),
            in_dim,
            out_dim
        )));
    }
    let mut grad_input = vec![F::zero(); in_dim];
    let mut grad_weights = vec![F::zero(); weights.len()];
    for o in 0..out_dim {
        let g = upstream[o];
        let row = &weights[o * in_dim..(o + 1) * in_dim];
        let grow = &mut grad_weights[o * in_dim..(o + 1) * in_dim];
        for i in 0..in_dim {
            grad_input[i] = grad_input[i] + row[i] * g;
            grow[i] = g * input[i];
        }
    }
    Ok((grad_input, grad_weights, upstream.to_vec()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nn::gradcheck::central_diff_max_rel_err;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn hidden_layer_dimensions_from_the_architecture() {
        // 96 flattened features into 40 hidden units: 3,880 parameters.
        let in_dim = 96;
        let out_dim = 40;
        assert_eq!(in_dim * out_dim + out_dim, 3880);
        let input = vec![0.0f32; in_dim];
        let weights = vec![0.0f32; in_dim * out_dim];
        let bias = vec![0.5f32; out_dim];
        let out = dense_forward(&input, &weights, &bias).unwrap();
        assert_eq!(out.len(), 40);
    }

    #[test]
    fn zero_weights_pass_bias_through() {
        let input = vec![1.0f64, -2.0, 3.0];
        let weights = vec![0.0; 6];
        let bias = vec![0.7, -0.2];
        assert_eq!(dense_forward(&input, &weights, &bias).unwrap(), bias);
    }

    #[test]
    fn rejects_dimension_mismatch() {
        let input = vec![1.0f64; 4];
        let weights = vec![0.0; 9];
        let bias = vec![0.0; 2];
        assert!(dense_forward(&input, &weights, &bias).is_err());
    }

    #[test]
    fn gradients_match_finite_differences() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..10 {
            let in_dim = rng.random_range(2..6);
            let out_dim = rng.random_range(1..5);
            let input: Vec<f64> = (0..in_dim).map(|_| rng.random_range(-1.0..1.0)).collect();
            let weights: Vec<f64> =
                (0..in_dim * out_dim).map(|_| rng.random_range(-1.0..1.0)).collect();
            let bias: Vec<f64> = (0..out_dim).map(|_| rng.random_range(-1.0..1.0)).collect();
            let co: Vec<f64> = (0..out_dim).map(|_| rng.random_range(-1.0..1.0)).collect();

            let (gi, gw, gb) = dense_backward(&input, &weights, &co).unwrap();

            let err = central_diff_max_rel_err(&weights, &gw, |w| {
                let out = dense_forward(&input, w, &bias).unwrap();
                out.iter().zip(&co).map(|(a, b)| a * b).sum()
            });
            assert!(err < 1e-4, "weight grad rel err {err}");

            let err = central_diff_max_rel_err(&input, &gi, |x| {
                let out = dense_forward(x, &weights, &bias).unwrap();
                out.iter().zip(&co).map(|(a, b)| a * b).sum()
            });
            assert!(err < 1e-4, "input grad rel err {err}");

            let err = central_diff_max_rel_err(&bias, &gb, |b| {
                let out = dense_forward(&input, &weights, b).unwrap();
                out.iter().zip(&co).map(|(a, b)| a * b).sum()
            });
            assert!(err < 1e-4, "bias grad rel err {err}");
        }
    }
}
