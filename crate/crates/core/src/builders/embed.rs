use super::rips::PointCloud;
use crate::error::{Error, Result};

/// Groups every run of `window` consecutive samples into one point, giving
/// `values.len() - window + 1` points.
pub fn sliding_window_embed(values: &[f64], window: usize) -> Result<PointCloud> {
    if window == 0 {
        return Err(Error::InvalidParameter("window must be at least 1".into()));
    }
    if window > values.len() {
        return Err(Error::WindowTooLarge {
            window,
            len: values.len(),
        });
    }
    PointCloud::new(values.windows(window).map(<[f64]>::to_vec).collect())
}
