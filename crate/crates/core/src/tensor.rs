use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Dense rank-3 tensor laid out row-major as `[channel][row][col]`.
///
/// The network input uses channels = state channels (x, y, v, a), rows =
/// neighbor slots and cols = past frames; intermediate feature maps reuse the
/// same layout with feature channels.
#[derive(Debug, Clone, PartialEq)]
pub struct Tensor3<F: Scalar> {
    channels: usize,
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Scalar> Tensor3<F> {
    pub fn zeros(channels: usize, rows: usize, cols: usize) -> Self {
        Tensor3 {
            channels,
            rows,
            cols,
            data: vec![F::zero(); channels * rows * cols],
        }
    }

    pub fn from_vec(channels: usize, rows: usize, cols: usize, data: Vec<F>) -> Result<Self> {
        if data.len() != channels * rows * cols {
            return Err(Error::shape(format!(
                "tensor data length {} does not match {}x{}x{}",
                data.len(),
                channels,
                rows,
                cols
            )));
        }
        Ok(Tensor3 {
            channels,
            rows,
            cols,
            data,
        })
    }

    pub fn channels(&self) -> usize {
        self.channels
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize, usize) {
        (self.channels, self.rows, self.cols)
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    #[inline]
    fn index(&self, c: usize, r: usize, k: usize) -> usize {
        debug_assert!(c < self.channels && r < self.rows && k < self.cols);
        (c * self.rows + r) * self.cols + k
    }

    #[inline]
    pub fn get(&self, c: usize, r: usize, k: usize) -> F {
        self.data[self.index(c, r, k)]
    }

    #[inline]
    pub fn set(&mut self, c: usize, r: usize, k: usize, v: F) {
        let i = self.index(c, r, k);
        self.data[i] = v;
    }

    /// Contiguous temporal row `[c][r][..]`.
    #[inline]
    pub fn row(&self, c: usize, r: usize) -> &[F] {
        let start = (c * self.rows + r) * self.cols;
        &self.data[start..start + self.cols]
    }

    #[inline]
    pub fn row_mut(&mut self, c: usize, r: usize) -> &mut [F] {
        let start = (c * self.rows + r) * self.cols;
        &mut self.data[start..start + self.cols]
    }

    pub fn as_slice(&self) -> &[F] {
        &self.data
    }

    pub fn as_mut_slice(&mut self) -> &mut [F] {
        &mut self.data
    }

    pub fn into_vec(self) -> Vec<F> {
        self.data
    }

    pub fn all_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }

    /// Converts element precision, e.g. for running an f32 sample through an
    /// f64 verification build.
    pub fn cast<G: Scalar>(&self) -> Tensor3<G> {
        Tensor3 {
            channels: self.channels,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| G::from_f64(v.as_f64())).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn row_major_layout() {
        let mut t = Tensor3::<f32>::zeros(2, 3, 4);
        t.set(1, 2, 3, 7.0);
        assert_eq!(t.as_slice()[(1 * 3 + 2) * 4 + 3], 7.0);
        assert_eq!(t.get(1, 2, 3), 7.0);
        assert_eq!(t.row(1, 2)[3], 7.0);
    }

    #[test]
    fn from_vec_rejects_bad_length() {
        assert!(Tensor3::<f32>::from_vec(2, 2, 2, vec![0.0; 7]).is_err());
        assert!(Tensor3::<f32>::from_vec(2, 2, 2, vec![0.0; 8]).is_ok());
    }
}
