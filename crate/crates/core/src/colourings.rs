//! Proper colourings of the unit interval graph of `r` and their statistics.
//!
//! Enumeration is a depth-first search over positions `1..=n` that keeps weight, height and
//! ascent counters up to date as colours are assigned and withdrawn, so visiting a colouring
//! costs no allocation. Colourings come out in lexicographic order.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hessenberg::ReverseHessenberg;
use crate::partitions::WeightVector;

/// `κ : [n] → [m]`, colours 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Colouring(pub Vec<usize>);

impl Colouring {
    pub fn colours(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `κ(i)` for `1 <= i <= n`.
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1]
    }
}

impl fmt::Display for Colouring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColouringStats {
    pub weight: WeightVector,
    pub ascents: usize,
    /// `ascents_at[i-1]` = number of ascents `(j, i)` ending at `i`.
    pub ascents_at: Vec<usize>,
    pub height: usize,
    /// Dimension of the attracting cell of the fixed point, `height - ascents - n`.
    pub cell_dim: usize,
}

/// Streamed text form `κ1 κ2 … κn | asc=… wt=… d=…`.
pub fn format_line(kappa: &Colouring, stats: &ColouringStats) -> String {
    format!(
        "{kappa} | asc={} wt={} d={}",
        stats.ascents, stats.weight, stats.cell_dim
    )
}

pub fn is_proper(kappa: &[usize], r: &ReverseHessenberg) -> bool {
    kappa.len() == r.len() && first_conflict(kappa, r).is_none()
}

fn first_conflict(kappa: &[usize], r: &ReverseHessenberg) -> Option<(usize, usize)> {
    (1..=kappa.len()).find_map(|i| {
        r.lower_neighbours(i)
            .find(|&j| kappa[j - 1] == kappa[i - 1])
            .map(|j| (j, i))
    })
}

/// Statistics of a proper colouring computed from scratch.
pub fn stats(kappa: &[usize], r: &ReverseHessenberg, m: usize) -> Result<ColouringStats> {
    assert_eq!(kappa.len(), r.len(), "colouring length must match n");
    for (k, &c) in kappa.iter().enumerate() {
        if c == 0 || c > m {
            return Err(Error::ColourOutOfRange {
                position: k + 1,
                colour: c,
                m,
            });
        }
    }
    if let Some((j, i)) = first_conflict(kappa, r) {
        return Err(Error::NotProper {
            j,
            i,
            colour: kappa[i - 1],
        });
    }
    let n = kappa.len();
    let mut weight = WeightVector::zero(m);
    for &c in kappa {
        weight.0[c - 1] += 1;
    }
    let ascents_at: Vec<usize> = (1..=n)
        .map(|i| {
            r.lower_neighbours(i)
                .filter(|&j| kappa[j - 1] < kappa[i - 1])
                .count()
        })
        .collect();
    let ascents = ascents_at.iter().sum();
    let height = kappa.iter().sum();
    Ok(ColouringStats {
        weight,
        ascents,
        ascents_at,
        height,
        cell_dim: height - ascents - n,
    })
}

/// Prefix weights `μ(1), …, μ(n)` with `μ(i) = ε_κ(1) + … + ε_κ(i)`.
pub fn fixed_point_chain(kappa: &[usize], m: usize) -> Vec<WeightVector> {
    let mut cur = WeightVector::zero(m);
    kappa
        .iter()
        .map(|&c| {
            cur.0[c - 1] += 1;
            cur.clone()
        })
        .collect()
}

/// `|C_r| = prod_i (m - i + 1 + r(i))`, zero when infeasible.
pub fn colouring_count(r: &ReverseHessenberg, m: usize) -> u128 {
    if !r.is_feasible(m) {
        return 0;
    }
    (1..=r.len())
        .map(|i| (m + 1 + r.at(i) - i) as u128)
        .product()
}

/// Depth-first cursor over proper colourings with incremental statistics.
#[derive(Debug, Clone)]
pub struct Cursor {
    lower: Vec<usize>,
    m: usize,
    first: (usize, usize),
    colours: Vec<usize>,
    weight: Vec<usize>,
    ascents_at: Vec<usize>,
    ascents: usize,
    height: usize,
    started: bool,
    done: bool,
}

impl Cursor {
    pub fn new(r: &ReverseHessenberg, m: usize) -> Self {
        Self::with_first_range(r, m, 1, m)
    }

    /// Restricts `κ(1)` to `colour`. Partitions the enumeration for parallel consumers.
    pub fn with_first_colour(r: &ReverseHessenberg, m: usize, colour: usize) -> Self {
        Self::with_first_range(r, m, colour, colour)
    }

    fn with_first_range(r: &ReverseHessenberg, m: usize, lo: usize, hi: usize) -> Self {
        let n = r.len();
        Self {
            lower: r.values().to_vec(),
            m,
            first: (lo, hi),
            colours: vec![0; n],
            weight: vec![0; m],
            ascents_at: vec![0; n],
            ascents: 0,
            height: 0,
            started: false,
            done: false,
        }
    }

    fn n(&self) -> usize {
        self.colours.len()
    }

    /// Lowest admissible colour `>= from` at 0-based position `pos`.
    fn next_colour(&self, pos: usize, from: usize) -> Option<usize> {
        let (lo, hi) = if pos == 0 { self.first } else { (1, self.m) };
        let window = &self.colours[self.lower[pos]..pos];
        (from.max(lo)..=hi.min(self.m)).find(|c| !window.contains(c))
    }

    fn assign(&mut self, pos: usize, c: usize) {
        let asc = self.colours[self.lower[pos]..pos]
            .iter()
            .filter(|&&x| x < c)
            .count();
        self.colours[pos] = c;
        self.ascents_at[pos] = asc;
        self.ascents += asc;
        self.height += c;
        self.weight[c - 1] += 1;
    }

    fn unassign(&mut self, pos: usize) -> usize {
        let c = self.colours[pos];
        self.ascents -= self.ascents_at[pos];
        self.height -= c;
        self.weight[c - 1] -= 1;
        self.colours[pos] = 0;
        self.ascents_at[pos] = 0;
        c
    }

    /// Moves to the next proper colouring; false once the enumeration is exhausted.
    pub fn advance(&mut self) -> bool {
        if self.done {
            return false;
        }
        let n = self.n();
        let (mut pos, mut from) = if !self.started {
            self.started = true;
            (0, 1)
        } else if n == 0 {
            self.done = true;
            return false;
        } else {
            (n - 1, self.unassign(n - 1) + 1)
        };
        loop {
            if pos == n {
                return true;
            }
            match self.next_colour(pos, from) {
                Some(c) => {
                    self.assign(pos, c);
                    pos += 1;
                    from = 1;
                }
                None if pos == 0 => {
                    self.done = true;
                    return false;
                }
                None => {
                    pos -= 1;
                    from = self.unassign(pos) + 1;
                }
            }
        }
    }

    pub fn colours(&self) -> &[usize] {
        &self.colours
    }

    pub fn weight(&self) -> &[usize] {
        &self.weight
    }

    pub fn ascents(&self) -> usize {
        self.ascents
    }

    pub fn ascents_at(&self) -> &[usize] {
        &self.ascents_at
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn cell_dim(&self) -> usize {
        self.height - self.ascents - self.n()
    }

    pub fn stats(&self) -> ColouringStats {
        ColouringStats {
            weight: WeightVector(self.weight.clone()),
            ascents: self.ascents,
            ascents_at: self.ascents_at.clone(),
            height: self.height,
            cell_dim: self.cell_dim(),
        }
    }
}

/// Owned stream of `(κ, stats)` in lexicographic order.
pub fn enumerate_colourings(r: &ReverseHessenberg, m: usize) -> Colourings {
    Colourings {
        cursor: Cursor::new(r, m),
    }
}

#[derive(Debug, Clone)]
pub struct Colourings {
    cursor: Cursor,
}

impl Iterator for Colourings {
    type Item = (Colouring, ColouringStats);

    fn next(&mut self) -> Option<Self::Item> {
        self.cursor
            .advance()
            .then(|| (Colouring(self.cursor.colours.clone()), self.cursor.stats()))
    }
}

/// Folds `step` over every proper colouring. In parallel mode the enumeration is split on
/// `κ(1)`; partial accumulators are merged in colour order, so any commutative `merge`
/// yields the sequential result.
pub fn fold_colourings<A, I, S, M>(
    r: &ReverseHessenberg,
    m: usize,
    parallel: bool,
    init: I,
    step: S,
    merge: M,
) -> A
where
    A: Send,
    I: Fn() -> A + Sync,
    S: Fn(&mut A, &Cursor) + Sync,
    M: Fn(A, A) -> A,
{
    let run = |mut cursor: Cursor| {
        let mut acc = init();
        while cursor.advance() {
            step(&mut acc, &cursor);
        }
        acc
    };
    if !parallel || r.is_empty() || m < 2 {
        return run(Cursor::new(r, m));
    }
    let parts: Vec<A> = (1..=m)
        .into_par_iter()
        .map(|c| run(Cursor::with_first_colour(r, m, c)))
        .collect();
    parts.into_iter().reduce(merge).unwrap_or_else(init)
}
