//! Exhaustive enumeration of small frames.
//!
//! `theta` tables are enumerated by backtracking in lexicographic order,
//! abandoning a partial table as soon as some column `b -> theta(.., b)` can
//! no longer be surjective. Every protomodular frame has a row `e` of `theta`
//! acting as the identity, because `theta(e, b) = theta(alpha(b, b), b) = b`.
//! For each such row the `alpha` tables are chosen cell by cell from the
//! preimages `theta_b^-1(a)`, with the diagonal fixed to `e`. Frames sharing a
//! `theta` table are sorted by `(alpha tables, e)`, so the whole stream is in
//! lexicographic order of `(theta, alpha_1, .., alpha_n, e)`.
//!
//! Work is split on a prefix of the `theta` table. Subtrees are processed in
//! parallel and merged in prefix order, so results do not depend on the
//! worker count.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::model::{table_len, tuple_at, ProtomodularFrame};
use crate::protomod::{check, Property};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchSpec {
    pub n: usize,
    pub size: usize,
    pub require: Vec<Property>,
    pub forbid: Vec<Property>,
    pub limit: Option<usize>,
}

impl SearchSpec {
    pub fn new(n: usize, size: usize) -> Self {
        SearchSpec {
            n,
            size,
            require: Vec::new(),
            forbid: Vec::new(),
            limit: None,
        }
    }

    pub fn require(mut self, p: Property) -> Self {
        self.require.push(p);
        self
    }

    pub fn forbid(mut self, p: Property) -> Self {
        self.forbid.push(p);
        self
    }

    pub fn limit(mut self, limit: usize) -> Self {
        self.limit = Some(limit);
        self
    }

    fn accepts(&self, holds: impl Fn(Property) -> bool) -> bool {
        self.require.iter().all(|&p| holds(p)) && self.forbid.iter().all(|&p| !holds(p))
    }
}

/// Largest carrier size searched for each `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchBounds {
    per_n: BTreeMap<usize, usize>,
    fallback: usize,
}

impl Default for SearchBounds {
    /// `n = 1`: 3, `n = 2`: 2, larger `n`: 1.
    fn default() -> Self {
        SearchBounds {
            per_n: BTreeMap::from([(1, 3), (2, 2)]),
            fallback: 1,
        }
    }
}

impl SearchBounds {
    pub fn max_size(&self, n: usize) -> usize {
        self.per_n.get(&n).copied().unwrap_or(self.fallback)
    }

    pub fn with_max_size(mut self, n: usize, size: usize) -> Self {
        self.per_n.insert(n, size);
        self
    }
}

/// Search configuration: feasibility bounds and degree of parallelism.
#[derive(Debug, Clone, Default)]
pub struct Searcher {
    pub bounds: SearchBounds,
    /// Worker threads; `None` uses the machine's parallelism.
    pub workers: Option<usize>,
}

impl Searcher {
    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = Some(workers);
        self
    }

    pub fn with_bounds(mut self, bounds: SearchBounds) -> Self {
        self.bounds = bounds;
        self
    }

    fn validate(&self, spec: &SearchSpec) -> Result<()> {
        if spec.n == 0 || spec.size == 0 {
            return Err(Error::Invalid("search needs n >= 1 and size >= 1".into()));
        }
        let limit = self.bounds.max_size(spec.n);
        if spec.size > limit {
            return Err(Error::BoundsExceeded {
                n: spec.n,
                size: spec.size,
                limit,
            });
        }
        Ok(())
    }

    /// Every frame of shape `(spec.n, spec.size)` satisfying the identities
    /// and the filters, in canonical order, truncated to `spec.limit`.
    pub fn enumerate(&self, spec: &SearchSpec) -> Result<Vec<ProtomodularFrame>> {
        self.run(spec, |frame| {
            spec.accepts(|p| check(&frame, p).holds).then_some(frame)
        })
    }

    /// Counts of the frames [`Searcher::enumerate`] would return, grouped by
    /// which of the checked properties hold.
    pub fn census(&self, spec: &SearchSpec) -> Result<Census> {
        let profiles = self.run(spec, |frame| {
            let profile: Vec<bool> = Property::ALL
                .iter()
                .map(|&p| check(&frame, p).holds)
                .collect();
            let holds = |p: Property| profile[Property::ALL.iter().position(|&q| q == p).unwrap()];
            spec.accepts(holds).then_some(profile)
        })?;
        let mut counts = BTreeMap::new();
        for profile in &profiles {
            *counts.entry(profile.clone()).or_insert(0) += 1;
        }
        Ok(Census {
            spec: spec.clone(),
            total: profiles.len(),
            counts,
        })
    }

    fn run<T, F>(&self, spec: &SearchSpec, map: F) -> Result<Vec<T>>
    where
        T: Send,
        F: Fn(ProtomodularFrame) -> Option<T> + Sync,
    {
        self.validate(spec)?;
        let space = ThetaSpace::new(spec.n, spec.size);
        let depth = space.split_depth();
        let mut prefixes = Vec::new();
        space.extend(
            &mut Vec::new(),
            &mut space.empty_counts(),
            depth,
            &mut |p| prefixes.push(p.to_vec()),
        );

        let mut builder = rayon::ThreadPoolBuilder::new();
        if let Some(w) = self.workers {
            builder = builder.num_threads(w.max(1));
        }
        let pool = builder
            .build()
            .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
        let batch = pool.current_num_threads() * 8;

        let mut out = Vec::new();
        for chunk in prefixes.chunks(batch) {
            let results: Vec<Vec<T>> = pool.install(|| {
                chunk
                    .par_iter()
                    .map(|prefix| space.subtree(prefix, &map))
                    .collect()
            });
            out.extend(results.into_iter().flatten());
            if let Some(limit) = spec.limit {
                if out.len() >= limit {
                    out.truncate(limit);
                    break;
                }
            }
        }
        Ok(out)
    }
}

/// [`Searcher::enumerate`] with default bounds and workers.
pub fn enumerate_frames(spec: &SearchSpec) -> Result<Vec<ProtomodularFrame>> {
    Searcher::default().enumerate(spec)
}

/// [`Searcher::census`] with default bounds and workers.
pub fn census(spec: &SearchSpec) -> Result<Census> {
    Searcher::default().census(spec)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Census {
    pub spec: SearchSpec,
    pub total: usize,
    /// Keyed by the outcome of each property in [`Property::ALL`] order.
    pub counts: BTreeMap<Vec<bool>, usize>,
}

impl Census {
    /// Number of counted frames with property `p`.
    pub fn count_with(&self, p: Property) -> usize {
        let i = Property::ALL.iter().position(|&q| q == p).unwrap();
        self.counts
            .iter()
            .filter(|(k, _)| k[i])
            .map(|(_, c)| c)
            .sum()
    }

    /// Fixed-width table, rows ordered with more properties holding first.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let labels = |ps: &[Property]| {
            if ps.is_empty() {
                "-".to_string()
            } else {
                ps.iter().map(|p| p.label()).collect::<Vec<_>>().join(",")
            }
        };
        writeln!(out, "census n={} size={}", self.spec.n, self.spec.size).unwrap();
        writeln!(out, "require {}", labels(&self.spec.require)).unwrap();
        writeln!(out, "forbid {}", labels(&self.spec.forbid)).unwrap();
        if let Some(l) = self.spec.limit {
            writeln!(out, "limit {l}").unwrap();
        }
        writeln!(out, "frames {}", self.total).unwrap();

        let width = self.total.to_string().len().max(5);
        write!(out, "{:>width$}", "count").unwrap();
        for p in Property::ALL {
            write!(out, " {}", p.label()).unwrap();
        }
        out.push('\n');
        for (profile, count) in self.counts.iter().rev() {
            write!(out, "{count:>width$}").unwrap();
            for (p, &holds) in Property::ALL.iter().zip(profile) {
                let mark = if holds { "yes" } else { "no" };
                write!(out, " {mark:<w$}", w = p.label().len()).unwrap();
            }
            let trimmed = out.trim_end_matches(' ').len();
            out.truncate(trimmed);
            out.push('\n');
        }
        out
    }
}

/// `theta` tables as flat row-major arrays: row `r` is the `r`-th tuple of
/// `A^n`, column `b`.
struct ThetaSpace {
    n: usize,
    k: usize,
    rows: usize,
}

impl ThetaSpace {
    fn new(n: usize, k: usize) -> Self {
        ThetaSpace {
            n,
            k,
            rows: table_len(k, n),
        }
    }

    fn len(&self) -> usize {
        self.rows * self.k
    }

    fn empty_counts(&self) -> Vec<usize> {
        vec![0; self.k * self.k]
    }

    /// Enough leading entries to give each worker several subtrees.
    fn split_depth(&self) -> usize {
        let mut depth = 0;
        let mut leaves = 1usize;
        while depth < self.len() && leaves < 256 && self.k > 1 {
            depth += 1;
            leaves = leaves.saturating_mul(self.k);
        }
        depth
    }

    /// Fills `theta[theta.len()..stop]` in every admissible way, calling
    /// `visit` on each result. `counts[b * k + v]` counts `v` in column `b`.
    fn extend(
        &self,
        theta: &mut Vec<usize>,
        counts: &mut Vec<usize>,
        stop: usize,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        let p = theta.len();
        if p == stop {
            visit(theta);
            return;
        }
        let (row, b) = (p / self.k, p % self.k);
        let rows_left = self.rows - row - 1;
        for v in 0..self.k {
            counts[b * self.k + v] += 1;
            let missing = counts[b * self.k..(b + 1) * self.k]
                .iter()
                .filter(|&&c| c == 0)
                .count();
            if missing <= rows_left {
                theta.push(v);
                self.extend(theta, counts, stop, visit);
                theta.pop();
            }
            counts[b * self.k + v] -= 1;
        }
    }

    fn subtree<T>(
        &self,
        prefix: &[usize],
        map: &(dyn Fn(ProtomodularFrame) -> Option<T> + Sync),
    ) -> Vec<T> {
        let mut counts = self.empty_counts();
        for (p, &v) in prefix.iter().enumerate() {
            counts[(p % self.k) * self.k + v] += 1;
        }
        let mut theta = prefix.to_vec();
        let mut out = Vec::new();
        self.extend(&mut theta, &mut counts, self.len(), &mut |t| {
            out.extend(self.frames_over(t).into_iter().filter_map(map));
        });
        out
    }

    /// All frames with this `theta`, sorted by `(alpha tables, e)`.
    fn frames_over(&self, theta: &[usize]) -> Vec<ProtomodularFrame> {
        let (n, k) = (self.n, self.k);
        // preimages[b * k + a] = rows r with theta(r, b) = a
        let mut preimages = vec![Vec::new(); k * k];
        for r in 0..self.rows {
            for b in 0..k {
                preimages[b * k + theta[r * k + b]].push(r);
            }
        }
        let mut keyed = Vec::new();
        for e_row in (0..self.rows).filter(|&r| (0..k).all(|b| theta[r * k + b] == b)) {
            // cell (a, b) of the alpha tables holds the tuple of row choices[a * k + b]
            let options: Vec<Vec<usize>> = (0..k * k)
                .map(|cell| {
                    let (a, b) = (cell / k, cell % k);
                    if a == b {
                        vec![e_row]
                    } else {
                        preimages[b * k + a].clone()
                    }
                })
                .collect();
            let mut pick = vec![0usize; k * k];
            loop {
                let tuples: Vec<Vec<usize>> = pick
                    .iter()
                    .zip(&options)
                    .map(|(&i, opts)| tuple_at(k, n, opts[i]))
                    .collect();
                let alphas: Vec<Vec<usize>> = (0..n)
                    .map(|i| tuples.iter().map(|t| t[i]).collect())
                    .collect();
                let units = tuple_at(k, n, e_row);
                let key: Vec<usize> = alphas.iter().flatten().chain(&units).copied().collect();
                keyed.push((key, alphas, units));

                let Some(cell) = (0..k * k).rev().find(|&c| pick[c] + 1 < options[c].len()) else {
                    break;
                };
                pick[cell] += 1;
                pick[cell + 1..].iter_mut().for_each(|i| *i = 0);
            }
        }
        keyed.sort_by(|x, y| x.0.cmp(&y.0));
        keyed
            .into_iter()
            .map(|(_, alphas, units)| {
                ProtomodularFrame::new(n, k, theta.to_vec(), alphas, units)
                    .expect("enumerated tables have the right shape")
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::protomod::check_protomodular;

    #[test]
    fn singleton() {
        let frames =
            enumerate_frames(&SearchSpec::new(1, 1).require(Property::RightCancellable)).unwrap();
        assert_eq!(frames, vec![ProtomodularFrame::trivial(1)]);
        assert_eq!(census(&SearchSpec::new(1, 1)).unwrap().total, 1);
    }

    #[test]
    fn two_elements_n1() {
        let frames = enumerate_frames(&SearchSpec::new(1, 2)).unwrap();
        assert_eq!(frames.len(), 2);
        assert_eq!(frames[0].theta_table(), &[0, 1, 1, 0]);
        assert_eq!(frames[0].units(), vec![0]);
        assert_eq!(frames[1].theta_table(), &[1, 0, 0, 1]);
        assert_eq!(frames[1].units(), vec![1]);
    }

    #[test]
    fn e32_is_found() {
        let frames =
            enumerate_frames(&SearchSpec::new(1, 3).require(Property::RightCancellable)).unwrap();
        assert_eq!(frames.len(), 6);
        assert!(frames.contains(&fixtures::e32()));
        assert!(frames.contains(&fixtures::gz3()));
    }

    #[test]
    fn fixtures_of_size_two_are_found() {
        let frames = enumerate_frames(&SearchSpec::new(2, 2)).unwrap();
        assert!(frames.contains(&fixtures::e33()));
        assert!(frames.contains(&fixtures::bool2()));
    }

    #[test]
    fn output_is_sorted_and_protomodular() {
        for (n, k) in [(1, 3), (2, 2)] {
            let frames = enumerate_frames(&SearchSpec::new(n, k)).unwrap();
            let key = |f: &ProtomodularFrame| {
                let mut v = f.theta_table().to_vec();
                (0..n).for_each(|i| v.extend_from_slice(f.alpha_table(i)));
                v.extend(f.units());
                v
            };
            assert!(frames.windows(2).all(|w| key(&w[0]) < key(&w[1])));
            assert!(frames.iter().all(|f| check_protomodular(f).holds));
        }
    }

    #[test]
    fn bounds() {
        assert_eq!(
            enumerate_frames(&SearchSpec::new(1, 4)),
            Err(Error::BoundsExceeded {
                n: 1,
                size: 4,
                limit: 3
            })
        );
        assert_eq!(
            census(&SearchSpec::new(3, 2)),
            Err(Error::BoundsExceeded {
                n: 3,
                size: 2,
                limit: 1
            })
        );
        assert!(matches!(
            enumerate_frames(&SearchSpec::new(0, 2)),
            Err(Error::Invalid(_))
        ));
        let wide = Searcher::default().with_bounds(SearchBounds::default().with_max_size(1, 4));
        assert!(wide.census(&SearchSpec::new(1, 4).limit(3)).is_ok());
    }

    #[test]
    fn limit_takes_a_prefix() {
        let all = enumerate_frames(&SearchSpec::new(2, 2)).unwrap();
        let some = enumerate_frames(&SearchSpec::new(2, 2).limit(5)).unwrap();
        assert_eq!(some[..], all[..5]);
    }

    #[test]
    fn worker_count_does_not_change_results() {
        let spec = SearchSpec::new(2, 2);
        let one = Searcher::default()
            .with_workers(1)
            .enumerate(&spec)
            .unwrap();
        let many = Searcher::default()
            .with_workers(8)
            .enumerate(&spec)
            .unwrap();
        assert_eq!(one, many);
        let c1 = Searcher::default()
            .with_workers(1)
            .census(&spec)
            .unwrap()
            .render();
        let c3 = Searcher::default()
            .with_workers(3)
            .census(&spec)
            .unwrap()
            .render();
        assert_eq!(c1, c3);
    }

    #[test]
    fn census_render_n1_k2() {
        let text = census(&SearchSpec::new(1, 2)).unwrap().render();
        let expected = "census n=1 size=2\nrequire -\nforbid -\nframes 2\n\
count protomodular right-cancellable strict consociative 1-assoc malcev-assoc simplified-ii simplified-iii\n";
        assert!(text.starts_with(expected), "{text}");
    }
}
