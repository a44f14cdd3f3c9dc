use rand::seq::SliceRandom;
use rayon::prelude::*;

use super::landscape::{average_landscapes, landscape_distance, Landscape};
use crate::error::{Error, Result};
use crate::rng::{derive_seed, rng_from_seed};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PermutationOutcome {
    /// Fraction of shuffles whose distance strictly exceeds the observed one.
    pub p_value: f64,
    pub observed_distance: f64,
    pub exceed_count: usize,
    pub shuffles: usize,
}

fn between_averages(a: &[&Landscape], b: &[&Landscape], p: f64) -> Result<f64> {
    let own = |s: &[&Landscape]| s.iter().map(|l| (*l).clone()).collect::<Vec<_>>();
    landscape_distance(&average_landscapes(&own(a))?, &average_landscapes(&own(b))?, p)
}

/// Two-sample permutation test on the `L^p` distance between average
/// landscapes. Shuffle `s` draws from its own seed, so the outcome does not
/// depend on scheduling. When every distance is zero the p-value is 0.
pub fn permutation_test(a: &[Landscape], b: &[Landscape], shuffles: usize, seed: u64, p: f64) -> Result<PermutationOutcome> {
    if a.len() != b.len() {
        return Err(Error::UnequalSampleSizes(a.len(), b.len()));
    }
    if a.is_empty() {
        return Err(Error::EmptyInput);
    }
    if shuffles == 0 {
        return Err(Error::InvalidParameter("number of shuffles must be at least 1".into()));
    }
    let pooled: Vec<&Landscape> = a.iter().chain(b).collect();
    let observed = between_averages(&pooled[..a.len()], &pooled[a.len()..], p)?;
    let exceed_count = (0..shuffles)
        .into_par_iter()
        .map(|s| {
            let mut rng = rng_from_seed(derive_seed(seed, &[s as u64]));
            let mut shuffled = pooled.clone();
            shuffled.shuffle(&mut rng);
            let d = between_averages(&shuffled[..a.len()], &shuffled[a.len()..], p)?;
            Ok(usize::from(d > observed))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .sum();
    Ok(PermutationOutcome {
        p_value: exceed_count as f64 / shuffles as f64,
        observed_distance: observed,
        exceed_count,
        shuffles,
    })
}
