//! Statistical harnesses: chi-square uniformity of the samplers and the
//! coupled Hausdorff convergence of growth trajectories.

use std::collections::HashMap;

use rayon::prelude::*;
use statrs::distribution::{ChiSquared, ContinuousCDF};

use crate::enumerate::{enumerate_ncp, enumerate_pair};
use crate::error::Result;
use crate::growth::{grow_path, uniform_ncp_direct, uniform_pair_direct, GrowthRng, Model};
use crate::lamination::{hausdorff, lamination_of};
use crate::partition::NoncrossingPartition;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sampler {
    /// Growth chain from the size-one object.
    Marchal,
    /// Independent cycle-lemma draws.
    Direct,
}

/// One object of size `n` drawn from stream `stream` of `seed`.
pub fn sample_one(model: Model, sampler: Sampler, n: usize, seed: u64, stream: u64) -> NoncrossingPartition {
    let mut rng = GrowthRng::split(seed, stream);
    match (sampler, model) {
        (Sampler::Marchal, _) => model.decode(&grow_path(model, n, &mut rng).0),
        (Sampler::Direct, Model::Ncp) => uniform_ncp_direct(n, &mut rng),
        (Sampler::Direct, Model::Pair) => uniform_pair_direct(n, &mut rng).into_inner(),
    }
}

/// Pearson statistic of observed counts against equal expected counts.
pub fn chi_square_statistic(counts: &[u64]) -> f64 {
    let total: u64 = counts.iter().sum();
    let expected = total as f64 / counts.len() as f64;
    counts.iter().map(|&c| (c as f64 - expected).powi(2) / expected).sum()
}

/// Quantile `p` of the chi-square law with `df` degrees of freedom.
pub fn chi_square_quantile(df: usize, p: f64) -> f64 {
    ChiSquared::new(df as f64).expect("positive degrees of freedom").inverse_cdf(p)
}

#[derive(Debug, Clone)]
pub struct UniformityReport {
    pub categories: usize,
    pub runs: u64,
    pub counts: Vec<u64>,
    pub statistic: f64,
    pub critical: f64,
}

impl UniformityReport {
    pub fn passes(&self) -> bool {
        self.statistic < self.critical
    }
}

/// Draws `runs` objects of size `n` and compares their frequencies with the
/// uniform law over the enumerated objects, at the 0.999 quantile.
pub fn uniformity(model: Model, sampler: Sampler, n: usize, runs: u64, seed: u64) -> Result<UniformityReport> {
    let table = match model {
        Model::Ncp => enumerate_ncp(n)?,
        Model::Pair => enumerate_pair(2 * n)?,
    };
    let index: HashMap<&NoncrossingPartition, usize> =
        table.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let counts = (0..runs)
        .into_par_iter()
        .fold(
            || vec![0u64; table.len()],
            |mut acc, stream| {
                let p = sample_one(model, sampler, n, seed, stream);
                acc[index[&p]] += 1;
                acc
            },
        )
        .reduce(
            || vec![0u64; table.len()],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    let categories = table.len();
    let statistic = chi_square_statistic(&counts);
    let critical = chi_square_quantile(categories.saturating_sub(1).max(1), 0.999);
    Ok(UniformityReport { categories, runs, counts, statistic, critical })
}

/// Distances `d_H(L(P_m), L(P_M))` along one trajectory.
#[derive(Debug, Clone)]
pub struct TrajectoryDistances {
    pub seed: u64,
    pub distances: Vec<f64>,
}

#[derive(Debug, Clone)]
pub struct ConvergenceReport {
    pub sizes: Vec<usize>,
    pub target: usize,
    pub delta: f64,
    pub runs: Vec<TrajectoryDistances>,
}

impl ConvergenceReport {
    /// Median over trajectories of the distance at each size.
    pub fn medians(&self) -> Vec<f64> {
        (0..self.sizes.len())
            .map(|i| median(self.runs.iter().map(|r| r.distances[i]).collect()))
            .collect()
    }
}

pub fn median(mut values: Vec<f64>) -> f64 {
    values.sort_by(f64::total_cmp);
    let mid = values.len() / 2;
    if values.len() % 2 == 1 {
        values[mid]
    } else {
        (values[mid - 1] + values[mid]) / 2.0
    }
}

/// Grows one trajectory per seed up to `target` and measures the Hausdorff
/// distance from each intermediate size in `sizes` to the final object.
pub fn convergence(model: Model, seeds: &[u64], sizes: &[usize], target: usize, delta: f64) -> Result<ConvergenceReport> {
    let runs = seeds
        .par_iter()
        .map(|&seed| {
            let (_, trajectory) = grow_path(model, target, &mut GrowthRng::new(seed));
            let mut wanted = sizes.to_vec();
            wanted.push(target);
            let partitions = trajectory.replay_checkpoints(&wanted)?;
            let last = lamination_of(partitions.last().expect("target checkpoint"));
            let distances = partitions[..sizes.len()]
                .iter()
                .map(|p| hausdorff(&lamination_of(p), &last, delta))
                .collect::<Result<Vec<_>>>()?;
            Ok(TrajectoryDistances { seed, distances })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ConvergenceReport { sizes: sizes.to_vec(), target, delta, runs })
}
