use crate::error::{Error, Result};

/// Tent function of the interval `(birth, death)` at `x`: rises with slope 1
/// from the birth to the midpoint and falls back to 0 at the death.
pub fn triangle_function(birth: f64, death: f64, x: f64) -> Result<f64> {
    if !(birth < death) {
        return Err(Error::BadInterval(birth, death));
    }
    Ok(tent(birth, death, x))
}

fn tent(b: f64, d: f64, x: f64) -> f64 {
    (x - b).min(d - x).max(0.0)
}

/// Piecewise-linear landscape. Level `k` (1-based) is the `k`-th largest
/// tent value; each level is stored as critical points `(x, value)` with
/// strictly increasing `x`, and is zero outside them.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Landscape {
    levels: Vec<Vec<(f64, f64)>>,
}

impl Landscape {
    /// Exact landscape of finite intervals. Intervals of zero length
    /// contribute nothing.
    pub fn from_intervals(intervals: &[(f64, f64)]) -> Result<Self> {
        let mut tents = Vec::with_capacity(intervals.len());
        for &(b, d) in intervals {
            if !(b.is_finite() && d.is_finite()) || d < b {
                return Err(Error::BadInterval(b, d));
            }
            if b < d {
                tents.push((b, d));
            }
        }
        if tents.is_empty() {
            return Ok(Landscape::default());
        }

        // Between consecutive breakpoints every tent is linear and no two
        // tents cross, so each level is linear there too.
        let mut xs = Vec::with_capacity(3 * tents.len());
        for &(b, d) in &tents {
            xs.extend([b, (b + d) / 2.0, d]);
        }
        for &(bi, di) in &tents {
            let mi = (bi + di) / 2.0;
            for &(bj, dj) in &tents {
                let x = (bi + dj) / 2.0;
                let mj = (bj + dj) / 2.0;
                if x > bi.max(mj) && x < mi.min(dj) {
                    xs.push(x);
                }
            }
        }
        xs.sort_by(f64::total_cmp);
        xs.dedup();

        let mut columns: Vec<Vec<f64>> = Vec::with_capacity(xs.len());
        let mut depth = 0;
        for &x in &xs {
            let mut values: Vec<f64> = tents.iter().map(|&(b, d)| tent(b, d, x)).filter(|&v| v > 0.0).collect();
            values.sort_by(|a, b| b.total_cmp(a));
            depth = depth.max(values.len());
            columns.push(values);
        }
        let levels = (0..depth)
            .map(|k| {
                let raw: Vec<(f64, f64)> = xs
                    .iter()
                    .zip(&columns)
                    .map(|(&x, v)| (x, v.get(k).copied().unwrap_or(0.0)))
                    .collect();
                simplify(raw)
            })
            .collect();
        Ok(Landscape { levels })
    }

    pub fn from_levels(levels: Vec<Vec<(f64, f64)>>) -> Self {
        Landscape {
            levels: levels.into_iter().map(simplify).filter(|l| !l.is_empty()).collect(),
        }
    }

    pub fn levels(&self) -> &[Vec<(f64, f64)>] {
        &self.levels
    }

    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    /// Value of level `k` (1-based) at `x`; zero beyond the stored levels.
    pub fn evaluate(&self, k: usize, x: f64) -> f64 {
        match k.checked_sub(1).and_then(|i| self.levels.get(i)) {
            Some(points) => interpolate(points, x),
            None => 0.0,
        }
    }

    /// Values of levels `1..=depth` at each `x`, for plotting.
    pub fn sample(&self, xs: &[f64]) -> Vec<Vec<f64>> {
        self.levels.iter().map(|l| xs.iter().map(|&x| interpolate(l, x)).collect()).collect()
    }
}

fn interpolate(points: &[(f64, f64)], x: f64) -> f64 {
    let (Some(first), Some(last)) = (points.first(), points.last()) else {
        return 0.0;
    };
    if x < first.0 || x > last.0 {
        return 0.0;
    }
    let i = points.partition_point(|p| p.0 <= x);
    if i == points.len() {
        return last.1;
    }
    let (x0, y0) = points[i - 1];
    let (x1, y1) = points[i];
    if x == x0 {
        return y0;
    }
    y0 + (y1 - y0) * (x - x0) / (x1 - x0)
}

/// Trims zero runs at both ends, down to a single zero point, and drops
/// interior points on a straight segment.
fn simplify(points: Vec<(f64, f64)>) -> Vec<(f64, f64)> {
    let Some(first) = points.iter().position(|p| p.1 != 0.0) else {
        return Vec::new();
    };
    let last = points.iter().rposition(|p| p.1 != 0.0).unwrap();
    let lo = first.saturating_sub(1);
    let hi = (last + 1).min(points.len() - 1);
    let mut out: Vec<(f64, f64)> = Vec::with_capacity(hi - lo + 1);
    for &p in &points[lo..=hi] {
        if out.len() >= 2 {
            let (x0, y0) = out[out.len() - 2];
            let (x1, y1) = out[out.len() - 1];
            if (y1 - y0) * (p.0 - x1) == (p.1 - y1) * (x1 - x0) {
                out.pop();
            }
        }
        out.push(p);
    }
    out
}

/// Pointwise mean of landscapes; missing levels count as zero.
pub fn average_landscapes(landscapes: &[Landscape]) -> Result<Landscape> {
    if landscapes.is_empty() {
        return Err(Error::EmptyInput);
    }
    let depth = landscapes.iter().map(Landscape::depth).max().unwrap_or(0);
    let n = landscapes.len() as f64;
    let levels = (1..=depth)
        .map(|k| {
            merged_breakpoints(landscapes.iter().filter_map(|l| l.levels.get(k - 1)))
                .into_iter()
                .map(|x| (x, landscapes.iter().map(|l| l.evaluate(k, x)).sum::<f64>() / n))
                .collect()
        })
        .collect();
    Ok(Landscape::from_levels(levels))
}

fn merged_breakpoints<'a>(levels: impl Iterator<Item = &'a Vec<(f64, f64)>>) -> Vec<f64> {
    let mut xs: Vec<f64> = levels.flat_map(|l| l.iter().map(|p| p.0)).collect();
    xs.sort_by(f64::total_cmp);
    xs.dedup();
    xs
}

/// Integral of `|g|^p` over `[0, h]` for `g` linear from `g0` to `g1`
/// without a sign change.
fn power_integral(g0: f64, g1: f64, h: f64, p: f64) -> f64 {
    let (a, b) = (g0.abs(), g1.abs());
    if p == 1.0 {
        return h * (a + b) / 2.0;
    }
    if p == 2.0 {
        return h * (a * a + a * b + b * b) / 3.0;
    }
    if (b - a).abs() <= 1e-9 * a.max(b) {
        return h * ((a + b) / 2.0).powf(p);
    }
    h * (b.powf(p + 1.0) - a.powf(p + 1.0)) / ((p + 1.0) * (b - a))
}

/// `L^p` distance `(sum_k integral |f_k - g_k|^p)^(1/p)`; `p = inf` gives
/// the largest pointwise difference over all levels.
pub fn landscape_distance(a: &Landscape, b: &Landscape, p: f64) -> Result<f64> {
    if !(p >= 1.0) {
        return Err(Error::BadExponent(p));
    }
    let depth = a.depth().max(b.depth());
    let mut total: f64 = 0.0;
    for k in 1..=depth {
        let xs = merged_breakpoints(a.levels.get(k - 1).into_iter().chain(b.levels.get(k - 1)));
        let diff: Vec<f64> = xs.iter().map(|&x| a.evaluate(k, x) - b.evaluate(k, x)).collect();
        if p.is_infinite() {
            total = diff.iter().fold(total, |m, g| m.max(g.abs()));
            continue;
        }
        for i in 1..xs.len() {
            let (g0, g1) = (diff[i - 1], diff[i]);
            let h = xs[i] - xs[i - 1];
            if g0 * g1 < 0.0 {
                let t = g0.abs() / (g0.abs() + g1.abs());
                total += power_integral(g0, 0.0, h * t, p) + power_integral(0.0, g1, h * (1.0 - t), p);
            } else {
                total += power_integral(g0, g1, h, p);
            }
        }
    }
    Ok(if p.is_infinite() { total } else { total.powf(1.0 / p) })
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::Rng as _;

    /// k-th largest tent value, straight from the definition.
    pub(crate) fn kth_largest(intervals: &[(f64, f64)], k: usize, x: f64) -> f64 {
        let mut v: Vec<f64> = intervals.iter().map(|&(b, d)| tent(b, d, x)).collect();
        v.sort_by(|a, b| b.total_cmp(a));
        v.get(k - 1).copied().unwrap_or(0.0)
    }

    #[test]
    fn tent_values() {
        assert_eq!(triangle_function(1.0, 5.0, 3.0).unwrap(), 2.0);
        assert_eq!(triangle_function(1.0, 5.0, 0.0).unwrap(), 0.0);
        assert_eq!(triangle_function(0.0, 4.0, 3.0).unwrap(), 1.0);
        assert!(matches!(triangle_function(2.0, 2.0, 0.0), Err(Error::BadInterval(..))));
    }

    #[test]
    fn single_interval() {
        let l = Landscape::from_intervals(&[(1.0, 5.0)]).unwrap();
        assert_eq!(l.levels(), &[vec![(1.0, 0.0), (3.0, 2.0), (5.0, 0.0)]]);
        assert_eq!(l.evaluate(1, 2.0), 1.0);
        assert_eq!(l.evaluate(2, 3.0), 0.0);
        assert_eq!(l.evaluate(7, 3.0), 0.0);
        assert_eq!(Landscape::from_intervals(&[]).unwrap().depth(), 0);
    }

    #[test]
    fn overlapping_pair() {
        let l = Landscape::from_intervals(&[(0.0, 4.0), (2.0, 6.0)]).unwrap();
        assert_eq!(l.depth(), 2);
        assert_eq!(l.evaluate(1, 2.0), 2.0);
        assert_eq!(l.evaluate(2, 2.0), 0.0);
        assert_eq!(l.evaluate(1, 3.0), 1.0);
        assert_eq!(l.evaluate(2, 3.0), 1.0);
        assert_eq!(l.evaluate(1, 4.0), 2.0);
    }

    #[test]
    fn averages() {
        let a = Landscape::from_intervals(&[(0.0, 2.0)]).unwrap();
        let b = Landscape::from_intervals(&[(0.0, 4.0)]).unwrap();
        assert_eq!(average_landscapes(&[a.clone()]).unwrap(), a);
        let half = average_landscapes(&[a.clone(), Landscape::default()]).unwrap();
        assert_eq!(half.evaluate(1, 1.0), 0.5);
        assert_eq!(average_landscapes(&[a, b]).unwrap().evaluate(1, 1.0), 1.0);
        assert!(matches!(average_landscapes(&[]), Err(Error::EmptyInput)));
    }

    #[test]
    fn distances() {
        let a = Landscape::from_intervals(&[(0.0, 2.0)]).unwrap();
        let z = Landscape::default();
        assert_eq!(landscape_distance(&a, &a, 1.0).unwrap(), 0.0);
        assert_eq!(landscape_distance(&a, &z, 1.0).unwrap(), 1.0);
        assert_eq!(landscape_distance(&a, &z, f64::INFINITY).unwrap(), 1.0);
        // Two tents of height 1 on [0,2]: integral of x^2 twice, 2/3.
        assert!((landscape_distance(&a, &z, 2.0).unwrap() - (2.0f64 / 3.0).sqrt()).abs() < 1e-15);
        // Same for p = 3: 2 * 1/4, then cube root.
        assert!((landscape_distance(&a, &z, 3.0).unwrap() - 0.5f64.powf(1.0 / 3.0)).abs() < 1e-12);
        assert!(landscape_distance(&a, &z, 0.5).is_err());
    }

    #[test]
    fn sign_change_is_split() {
        let a = Landscape::from_intervals(&[(0.0, 2.0)]).unwrap();
        let b = Landscape::from_intervals(&[(1.0, 3.0)]).unwrap();
        // Midpoint-rule reference.
        let steps = 200_000;
        let mut s = 0.0;
        for i in 0..steps {
            let x = -0.5 + 4.0 * (i as f64 + 0.5) / steps as f64;
            s += (a.evaluate(1, x) - b.evaluate(1, x)).abs() * 4.0 / steps as f64;
        }
        assert!((landscape_distance(&a, &b, 1.0).unwrap() - s).abs() < 1e-6);
    }

    pub(crate) fn diagram_strategy() -> impl Strategy<Value = Vec<(f64, f64)>> {
        prop::collection::vec((0.0f64..10.0, 0.01f64..6.0).prop_map(|(b, l)| (b, b + l)), 0..8)
    }

    proptest! {
        #[test]
        fn matches_definition_and_is_ordered(intervals in diagram_strategy(), seed in any::<u64>()) {
            let l = Landscape::from_intervals(&intervals).unwrap();
            let mut rng = crate::rng::rng_from_seed(seed);
            for _ in 0..200 {
                let x = rng.gen_range(-1.0..17.0);
                for k in 1..=l.depth() + 1 {
                    prop_assert!((l.evaluate(k, x) - kth_largest(&intervals, k, x)).abs() < 1e-12);
                    prop_assert!(l.evaluate(k, x) >= l.evaluate(k + 1, x));
                }
            }
            for level in l.levels() {
                for w in level.windows(2) {
                    prop_assert!((w[1].1 - w[0].1).abs() <= (w[1].0 - w[0].0) * (1.0 + 1e-12) + 1e-12);
                }
            }
        }

        #[test]
        fn average_commutes_with_evaluation(ds in prop::collection::vec(diagram_strategy(), 1..5), x in -1.0f64..17.0) {
            let ls: Vec<Landscape> = ds.iter().map(|d| Landscape::from_intervals(d).unwrap()).collect();
            let avg = average_landscapes(&ls).unwrap();
            for k in 1..=avg.depth() + 1 {
                let mean = ls.iter().map(|l| l.evaluate(k, x)).sum::<f64>() / ls.len() as f64;
                prop_assert!((avg.evaluate(k, x) - mean).abs() < 1e-12);
            }
        }

        #[test]
        fn distance_is_a_metric(x in diagram_strategy(), y in diagram_strategy(), z in diagram_strategy()) {
            let (a, b, c) = (
                Landscape::from_intervals(&x).unwrap(),
                Landscape::from_intervals(&y).unwrap(),
                Landscape::from_intervals(&z).unwrap(),
            );
            for p in [1.0, 2.0, 2.5, f64::INFINITY] {
                let d = |u: &Landscape, v: &Landscape| landscape_distance(u, v, p).unwrap();
                prop_assert_eq!(d(&a, &b), d(&b, &a));
                prop_assert!(d(&a, &c) <= d(&a, &b) + d(&b, &c) + 1e-9);
            }
        }
    }
}
