//! Point configurations in `P^2` for experiments.

use graded_basic_core::{ProjPoint, Rationals};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::CliError;
use crate::formats::{PointsFile, Scalar};

/// `{(1:i:j) : 0 ≤ i < a, 0 ≤ j < b}`, cut out by forms of degrees `a` and `b`.
pub fn grid(a: u32, b: u32) -> Result<Vec<Vec<i64>>, CliError> {
    if a == 0 || b == 0 {
        return Err(CliError::input("grid", "both sides must be positive"));
    }
    Ok((0..a as i64).flat_map(|i| (0..b as i64).map(move |j| vec![1, i, j])).collect())
}

pub fn simplex() -> Vec<Vec<i64>> {
    vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]
}

/// `n` distinct points with integer coordinates in `-range..=range`,
/// determined by `seed`.
pub fn random(n: usize, seed: u64, range: i64) -> Result<Vec<Vec<i64>>, CliError> {
    if n == 0 {
        return Err(CliError::input("random", "need at least one point"));
    }
    if range < 1 {
        return Err(CliError::input("random", "range must be at least 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen: Vec<ProjPoint<_>> = Vec::with_capacity(n);
    let mut out = Vec::with_capacity(n);
    let mut attempts = 0usize;
    while out.len() < n {
        attempts += 1;
        if attempts > 1000 * n + 1000 {
            return Err(CliError::input("random", format!("could not find {n} distinct points with range {range}")));
        }
        let c: Vec<i64> = (0..3).map(|_| rng.gen_range(-range..=range)).collect();
        let Ok(p) = ProjPoint::from_ints(&Rationals, &c) else { continue };
        if seen.contains(&p) {
            continue;
        }
        seen.push(p);
        out.push(c);
    }
    Ok(out)
}

pub fn to_points_file(points: &[Vec<i64>]) -> PointsFile {
    PointsFile {
        points: points.iter().map(|p| p.iter().map(|c| Scalar::Text(c.to_string())).collect()).collect(),
    }
}
