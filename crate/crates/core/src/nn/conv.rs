use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::tensor::Tensor3;

/// Geometry of one 2D convolution layer.
///
/// Stride is fixed at 1 and no padding is applied; the dilation fields count
/// zeros inserted between adjacent kernel taps per axis, so a kernel of
/// extent `k` with dilation `z` covers `k + (k - 1) * z` input cells.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct ConvSpec {
    pub in_channels: usize,
    pub out_channels: usize,
    pub kernel_rows: usize,
    pub kernel_cols: usize,
    pub dilation_rows: usize,
    pub dilation_cols: usize,
}

impl ConvSpec {
    pub fn new(
        in_channels: usize,
        out_channels: usize,
        kernel: (usize, usize),
        dilation: (usize, usize),
    ) -> Self {
        ConvSpec {
            in_channels,
            out_channels,
            kernel_rows: kernel.0,
            kernel_cols: kernel.1,
            dilation_rows: dilation.0,
            dilation_cols: dilation.1,
        }
    }

    /// Effective kernel extent along the row axis: `k + (k - 1) * z`.
    pub fn effective_rows(&self) -> usize {
        self.kernel_rows + (self.kernel_rows - 1) * self.dilation_rows
    }

    /// Effective kernel extent along the column (temporal) axis.
    pub fn effective_cols(&self) -> usize {
        self.kernel_cols + (self.kernel_cols - 1) * self.dilation_cols
    }

    /// Output extents for a given input, or an error if the effective kernel
    /// does not fit.
    pub fn output_shape(&self, in_rows: usize, in_cols: usize) -> Result<(usize, usize)> {
        let er = self.effective_rows();
        let ec = self.effective_cols();
        if in_rows < er || in_cols < ec {
            return Err(Error::shape(format!(
                "input {}x{} smaller than effective kernel {}x{} \
                 (kernel {}x{}, dilation {},{})",
                in_rows,
                in_cols,
                er,
                ec,
                self.kernel_rows,
                self.kernel_cols,
                self.dilation_rows,
                self.dilation_cols
            )));
        }
        Ok((in_rows - er + 1, in_cols - ec + 1))
    }

    /// Number of weight scalars: `out * in * kernel_rows * kernel_cols`.
    pub fn weight_count(&self) -> usize {
        self.out_channels * self.in_channels * self.kernel_rows * self.kernel_cols
    }

    /// Trainable parameters including the per-filter bias.
    pub fn param_count(&self) -> usize {
        self.weight_count() + self.out_channels
    }

    fn check_params<F: Scalar>(&self, weights: &[F], bias: &[F]) -> Result<()> {
        if weights.len() != self.weight_count() {
            return Err(Error::shape(format!(
                "conv weights length {} != expected {}",
                weights.len(),
                self.weight_count()
            )));
        }
        if bias.len() != self.out_channels {
            return Err(Error::shape(format!(
                "conv bias length {} != out channels {}",
                bias.len(),
                self.out_channels
            )));
        }
        Ok(())
    }

    fn check_input<F: Scalar>(&self, input: &Tensor3<F>) -> Result<()> {
        if input.channels() != self.in_channels {
            return Err(Error::shape(format!(
                "input has {} channels, layer expects {}",
                input.channels(),
                self.in_channels
            )));
        }
        Ok(())
    }
}

/// Dilated 2D cross-correlation over all input channels plus bias.
///
/// Weights are laid out `[out][in][kernel_row][kernel_col]` row-major.
pub fn conv2d_forward<F: Scalar>(
    input: &Tensor3<F>,
    spec: &ConvSpec,
    weights: &[F],
    bias: &[F],
) -> Result<Tensor3<F>> {
    spec.check_input(input)?;
    spec.check_params(weights, bias)?;
    let (out_rows, out_cols) = spec.output_shape(input.rows(), input.cols())?;

    let step_r = spec.dilation_rows + 1;
    let step_c = spec.dilation_cols + 1;
    let mut out = Tensor3::zeros(spec.out_channels, out_rows, out_cols);

    for oc in 0..spec.out_channels {
        for i in 0..out_rows {
            let out_row = out.row_mut(oc, i);
            out_row.fill(bias[oc]);
            for c in 0..spec.in_channels {
                for p in 0..spec.kernel_rows {
                    let in_row = input.row(c, i + p * step_r);
                    let w_base = ((oc * spec.in_channels + c) * spec.kernel_rows + p)
                        * spec.kernel_cols;
                    for q in 0..spec.kernel_cols {
                        let w = weights[w_base + q];
                        let src = &in_row[q * step_c..q * step_c + out_cols];
                        for (o, s) in out_row.iter_mut().zip(src) {
                            *o = *o + w * *s;
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Gradients of [`conv2d_forward`] with respect to input, weights and bias.
pub fn conv2d_backward<F: Scalar>(
    input: &Tensor3<F>,
    spec: &ConvSpec,
    weights: &[F],
    upstream: &Tensor3<F>,
) -> Result<(Tensor3<F>, Vec<F>, Vec<F>)> {
    spec.check_input(input)?;
    if weights.len() != spec.weight_count() {
        return Err(Error::shape(format!(
            "conv weights length {} != expected {}",
            weights.len(),
            spec.weight_count()
        )));
    }
    let (out_rows, out_cols) = spec.output_shape(input.rows(), input.cols())?;
    if upstream.shape() != (spec.out_channels, out_rows, out_cols) {
        return Err(Error::shape(format!(
            "upstream gradient shape {:?} != forward output shape {:?}",
            upstream.shape(),
            (spec.out_channels, out_rows, out_cols)
        )));
    }

    let step_r = spec.dilation_rows + 1;
    let step_c = spec.dilation_cols + 1;
    let mut grad_input = Tensor3::zeros(input.channels(), input.rows(), input.cols());
    let mut grad_weights = vec![F::zero(); weights.len()];
    let mut grad_bias = vec![F::zero(); spec.out_channels];

    for oc in 0..spec.out_channels {
        for i in 0..out_rows {
            let g_row = upstream.row(oc, i);
            grad_bias[oc] = grad_bias[oc] + g_row.iter().copied().sum();
            for c in 0..spec.in_channels {
                for p in 0..spec.kernel_rows {
                    let w_base = ((oc * spec.in_channels + c) * spec.kernel_rows + p)
                        * spec.kernel_cols;
                    let in_row = input.row(c, i + p * step_r);
                    for q in 0..spec.kernel_cols {
                        let src = &in_row[q * step_c..q * step_c + out_cols];
                        let mut acc = F::zero();
                        for (g, s) in g_row.iter().zip(src) {
                            acc = acc + *g * *s;
                        }
                        grad_weights[w_base + q] = grad_weights[w_base + q] + acc;
                    }
                    let gin_row = grad_input.row_mut(c, i + p * step_r);
                    for q in 0..spec.kernel_cols {
                        let w = weights[w_base + q];
                        let dst = &mut gin_row[q * step_c..q * step_c + out_cols];
                        for (d, g) in dst.iter_mut().zip(g_row) {
                            *d = *d + w * *g;
                        }
                    }
                }
            }
        }
    }
    Ok((grad_input, grad_weights, grad_bias))
}
