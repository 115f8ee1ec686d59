use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Bias-corrected Adam optimizer state over a flat parameter vector.
#[derive(Debug, Clone)]
pub struct AdamState<F: Scalar> {
    step: u64,
    pub learning_rate: F,
    pub beta1: F,
    pub beta2: F,
    pub epsilon: F,
    first_moment: Vec<F>,
    second_moment: Vec<F>,
}

impl<F: Scalar> AdamState<F> {
    /// Defaults beta1 = 0.9, beta2 = 0.999, epsilon = 1e-8.
    pub fn new(param_count: usize, learning_rate: F) -> Self {
        AdamState {
            step: 0,
            learning_rate,
            beta1: F::from_f64(0.9),
            beta2: F::from_f64(0.999),
            epsilon: F::from_f64(1e-8),
            first_moment: vec![F::zero(); param_count],
            second_moment: vec![F::zero(); param_count],
        }
    }

    pub fn step_count(&self) -> u64 {
        self.step
    }

    /// One Adam update in place. Rejects non-finite gradients so that a
    /// diverging training run fails loudly instead of poisoning the moments.
    pub fn step(&mut self, params: &mut [F], grads: &[F]) -> Result<()> {
        if params.len() != grads.len() || params.len() != self.first_moment.len() {
            return Err(Error::shape(format!(
                "adam: params {} / grads {} / state {} disagree",
                params.len(),
                grads.len(),
                self.first_moment.len()
            )));
        }
        if grads.iter().any(|g| !g.is_finite()) {
            return Err(Error::NonFiniteGradient);
        }
        self.step += 1;
        let one = F::one();
        let bc1 = one - self.beta1.powi(self.step as i32);
        let bc2 = one - self.beta2.powi(self.step as i32);
        for i in 0..params.len() {
            let g = grads[i];
            self.first_moment[i] = self.beta1 * self.first_moment[i] + (one - self.beta1) * g;
            self.second_moment[i] =
                self.beta2 * self.second_moment[i] + (one - self.beta2) * g * g;
            let m_hat = self.first_moment[i] / bc1;
            let v_hat = self.second_moment[i] / bc2;
            params[i] = params[i] - self.learning_rate * m_hat / (v_hat.sqrt() + self.epsilon);
        }
        Ok(())
    }
}
