use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub const NUM_CLASSES: usize = 3;

/// Row-wise softmax of `steps x 3` logits followed by the summed negative
/// log-likelihood of the true classes.
///
/// Returns the loss together with the probability rows (needed for the
/// backward pass and for reporting).
pub fn softmax_nll_forward<F: Scalar>(logits: &[F], classes: &[u8]) -> Result<(F, Vec<F>)> {
    if classes.is_empty() {
        return Err(Error::EmptyInput("softmax_nll classes"));
    }
    if logits.len() != classes.len() * NUM_CLASSES {
        return Err(Error::shape(format!(
            "logits length {} != {} steps x {} classes",
            logits.len(),
            classes.len(),
            NUM_CLASSES
        )));
    }
    if let Some(bad) = classes.iter().find(|c| **c as usize >= NUM_CLASSES) {
        return Err(Error::arg(format!("class index {bad} out of range 0..3")));
    }

    let mut probs = vec![F::zero(); logits.len()];
    let mut loss = F::zero();
    for (step, &truth) in classes.iter().enumerate() {
        let row = &logits[step * NUM_CLASSES..(step + 1) * NUM_CLASSES];
        let max = row.iter().copied().fold(F::neg_infinity(), F::max);
        let mut denom = F::zero();
        for k in 0..NUM_CLASSES {
            let e = (row[k] - max).exp();
            probs[step * NUM_CLASSES + k] = e;
            denom = denom + e;
        }
        for k in 0..NUM_CLASSES {
            probs[step * NUM_CLASSES + k] = probs[step * NUM_CLASSES + k] / denom;
        }
        let p_true = probs[step * NUM_CLASSES + truth as usize];
        loss = loss - p_true.ln();
    }
    Ok((loss, probs))
}

/// Gradient of [`softmax_nll_forward`] with respect to the logits:
/// `p - onehot(truth)` per row.
pub fn softmax_nll_backward<F: Scalar>(probs: &[F], classes: &[u8]) -> Vec<F> {
    let mut grad = probs.to_vec();
    for (step, &truth) in classes.iter().enumerate() {
        let i = step * NUM_CLASSES + truth as usize;
        grad[i] = grad[i] - F::one();
    }
    grad
}

/// Root mean squared Euclidean error over `(x, y)` pairs:
/// `sqrt(mean_t |pred_t - truth_t|^2)`.
///
/// Batches are scored jointly by concatenating all sample steps before the
/// mean, so `pred`/`truth` hold `2 * n` values for `n` points.
pub fn rmse_forward<F: Scalar>(pred: &[F], truth: &[F]) -> Result<F> {
    if pred.is_empty() {
        return Err(Error::EmptyInput("rmse points"));
    }
    if pred.len() != truth.len() || pred.len() % 2 != 0 {
        return Err(Error::shape(format!(
            "rmse inputs must be equal-length (x, y) lists, got {} vs {}",
            pred.len(),
            truth.len()
        )));
    }
    let n_points = pred.len() / 2;
    let mut sum = F::zero();
    for (p, t) in pred.iter().zip(truth) {
        let d = *p - *t;
        sum = sum + d * d;
    }
    Ok((sum / F::from_f64(n_points as f64)).sqrt())
}

/// Gradient of [`rmse_forward`] with respect to `pred`:
/// `(pred - truth) / (n_points * loss)`.
///
/// At the zero-loss singularity the subgradient 0 is returned (the loss is
/// already at its minimum).
pub fn rmse_backward<F: Scalar>(pred: &[F], truth: &[F], loss: F) -> Vec<F> {
    let n = F::from_f64((pred.len() / 2) as f64);
    if loss == F::zero() {
        return vec![F::zero(); pred.len()];
    }
    pred.iter()
        .zip(truth)
        .map(|(p, t)| (*p - *t) / (n * loss))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nn::gradcheck::central_diff_max_rel_err;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn uniform_logits_cost_is_p_ln3() {
        let logits = vec![0.4f64; 15];
        let classes = [0u8, 1, 2, 0, 1];
        let (loss, probs) = softmax_nll_forward(&logits, &classes).unwrap();
        assert!((loss - 5.0 * 3.0f64.ln()).abs() < 1e-9, "{loss}");
        for row in probs.chunks(3) {
            assert!((row.iter().sum::<f64>() - 1.0).abs() < 1e-6);
        }
    }

    #[test]
    fn saturated_logits_cost_near_zero() {
        let mut logits = vec![0.0f64; 15];
        let classes = [2u8, 0, 1, 1, 0];
        for (step, &c) in classes.iter().enumerate() {
            logits[step * 3 + c as usize] = 1000.0;
        }
        let (loss, _) = softmax_nll_forward(&logits, &classes).unwrap();
        assert!(loss.abs() < 1e-9);
    }

    #[test]
    fn rejects_out_of_range_class() {
        let logits = vec![0.0f64; 15];
        assert!(softmax_nll_forward(&logits, &[0, 1, 2, 3, 0]).is_err());
    }

    #[test]
    fn nll_gradient_matches_finite_differences() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..10 {
            let logits: Vec<f64> = (0..15).map(|_| rng.random_range(-2.0..2.0)).collect();
            let classes: Vec<u8> = (0..5).map(|_| rng.random_range(0..3) as u8).collect();
            let (_, probs) = softmax_nll_forward(&logits, &classes).unwrap();
            let grad = softmax_nll_backward(&probs, &classes);
            let err = central_diff_max_rel_err(&logits, &grad, |l| {
                softmax_nll_forward(l, &classes).unwrap().0
            });
            assert!(err < 1e-4, "softmax nll grad rel err {err}");
        }
    }

    #[test]
    fn perfect_prediction_scores_zero() {
        let truth = vec![1.0f64, 2.0, 3.0, 4.0];
        assert_eq!(rmse_forward(&truth, &truth).unwrap(), 0.0);
    }

    #[test]
    fn single_point_345_triangle() {
        let pred = vec![3.0f64, 4.0];
        let truth = vec![0.0f64, 0.0];
        assert!((rmse_forward(&pred, &truth).unwrap() - 5.0).abs() < 1e-12);
    }

    #[test]
    fn rejects_empty_input() {
        assert!(matches!(
            rmse_forward::<f64>(&[], &[]),
            Err(Error::EmptyInput(_))
        ));
    }

    #[test]
    fn rmse_gradient_matches_finite_differences() {
        let mut rng = ChaCha8Rng::seed_from_u64(19);
        for _ in 0..10 {
            let pred: Vec<f64> = (0..10).map(|_| rng.random_range(-2.0..2.0)).collect();
            let truth: Vec<f64> = (0..10).map(|_| rng.random_range(2.5..4.0)).collect();
            let loss = rmse_forward(&pred, &truth).unwrap();
            assert!(loss > 0.1, "stay away from the singularity");
            let grad = rmse_backward(&pred, &truth, loss);
            let err = central_diff_max_rel_err(&pred, &grad, |p| {
                rmse_forward(p, &truth).unwrap()
            });
            assert!(err < 1e-4, "rmse grad rel err {err}");
        }
    }
}
