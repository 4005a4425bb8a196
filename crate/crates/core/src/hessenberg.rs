//! Reverse Hessenberg functions and their unit interval graphs.
//!
//! A reverse Hessenberg function on `[n]` is a weakly increasing sequence
//! `r(1), ..., r(n)` with `0 <= r(i) < i`. Vertices `j < i` of the associated
//! graph are adjacent iff `r(i) < j`, so the lower neighbours of `i` always
//! form the interval `r(i)+1 ..= i-1`.
//!
//! Positions are 1-based everywhere in the public API.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<usize>")]
pub struct ReverseHessenberg {
    values: Vec<usize>,
}

impl ReverseHessenberg {
    /// Validates a raw sequence `r(1), ..., r(n)`.
    pub fn validate(values: &[i64]) -> Result<Self> {
        // monotonicity is reported ahead of range violations
        for (k, w) in values.windows(2).enumerate() {
            if w[1] < w[0] {
                return Err(Error::NotWeaklyIncreasing {
                    position: k + 2,
                    value: w[1],
                    prev_value: w[0],
                });
            }
        }
        let mut out = Vec::with_capacity(values.len());
        for (k, &v) in values.iter().enumerate() {
            let position = k + 1;
            if v < 0 || v >= position as i64 {
                return Err(Error::OutOfRange { position, value: v });
            }
            out.push(v as usize);
        }
        Ok(Self { values: out })
    }

    /// `r(i) = i - 1`: the edgeless graph.
    pub fn staircase(n: usize) -> Self {
        Self {
            values: (0..n).collect(),
        }
    }

    /// `r(i) = 0`: the complete graph.
    pub fn complete(n: usize) -> Self {
        Self { values: vec![0; n] }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// `r(i)` for `1 <= i <= n`.
    pub fn at(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    /// Restriction to `[n-1]`. `None` when `n = 0`.
    pub fn restriction(&self) -> Option<Self> {
        if self.values.is_empty() {
            return None;
        }
        Some(Self {
            values: self.values[..self.values.len() - 1].to_vec(),
        })
    }

    /// Smallest number of colours admitting a proper colouring, `max_i (i - r(i))`.
    /// Zero for the empty function.
    pub fn min_colours(&self) -> usize {
        self.values
            .iter()
            .enumerate()
            .map(|(k, &v)| k + 1 - v)
            .max()
            .unwrap_or(0)
    }

    /// True iff `i - r(i) <= m` for every `i`, i.e. the graph has a proper `m`-colouring.
    pub fn is_feasible(&self, m: usize) -> bool {
        self.values.iter().enumerate().all(|(k, &v)| k + 1 - v <= m)
    }

    pub(crate) fn check_feasible(&self, m: usize) -> Result<()> {
        for (k, &v) in self.values.iter().enumerate() {
            let needed = k + 1 - v;
            if needed > m {
                return Err(Error::Infeasible {
                    position: k + 1,
                    needed,
                    m,
                });
            }
        }
        Ok(())
    }

    /// `E_r = sum_i (i - 1 - r(i))`, the number of edges.
    pub fn edge_count(&self) -> usize {
        self.values.iter().enumerate().map(|(k, &v)| k - v).sum()
    }

    pub fn graph(&self) -> Graph {
        let mut edges = Vec::with_capacity(self.edge_count());
        for i in 1..=self.len() {
            for j in self.at(i) + 1..i {
                edges.push((j, i));
            }
        }
        edges.sort_unstable();
        Graph {
            n: self.len(),
            edges,
        }
    }

    /// Lower neighbours of `i`: `r(i)+1 ..= i-1`.
    pub fn lower_neighbours(&self, i: usize) -> std::ops::Range<usize> {
        self.at(i) + 1..i
    }
}

impl TryFrom<Vec<i64>> for ReverseHessenberg {
    type Error = Error;

    fn try_from(values: Vec<i64>) -> Result<Self> {
        Self::validate(&values)
    }
}

impl From<ReverseHessenberg> for Vec<usize> {
    fn from(r: ReverseHessenberg) -> Self {
        r.values
    }
}

impl fmt::Display for ReverseHessenberg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in self.values.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Parses the comma-separated text form, e.g. `"0,1,1,3"`. The empty string is `n = 0`.
impl FromStr for ReverseHessenberg {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::staircase(0));
        }
        let values = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|e| Error::Parse(format!("bad entry {t:?} in r: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::validate(&values)
    }
}

/// The unit interval graph of a reverse Hessenberg function. Edges are `(j, i)` with `j < i`,
/// sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Graph {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

/// All reverse Hessenberg functions on `[n]` in lexicographic order.
pub fn all_reverse_hessenberg(n: usize) -> AllReverseHessenberg {
    AllReverseHessenberg {
        next: Some(vec![0; n]),
    }
}

#[derive(Debug, Clone)]
pub struct AllReverseHessenberg {
    next: Option<Vec<usize>>,
}

impl Iterator for AllReverseHessenberg {
    type Item = ReverseHessenberg;

    fn next(&mut self) -> Option<ReverseHessenberg> {
        let current = self.next.take()?;
        // lexicographic successor: bump the rightmost entry below its cap, then reset the tail
        // to the smallest weakly increasing continuation
        let mut succ = current.clone();
        if let Some(k) = (0..succ.len()).rev().find(|&k| succ[k] < k) {
            succ[k] += 1;
            let floor = succ[k];
            for v in &mut succ[k + 1..] {
                *v = floor;
            }
            self.next = Some(succ);
        }
        Some(ReverseHessenberg { values: current })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn catalan_by_recursion(n: usize) -> u64 {
        // weakly increasing sequences with 0 <= r(i) < i, counted position by position
        fn go(i: usize, n: usize, prev: usize) -> u64 {
            if i > n {
                return 1;
            }
            (prev..i).map(|v| go(i + 1, n, v)).sum()
        }
        go(1, n, 0)
    }

    #[test]
    fn validate_examples() {
        assert_eq!(
            ReverseHessenberg::validate(&[0, 1, 2]).unwrap(),
            ReverseHessenberg::staircase(3)
        );
        assert_eq!(
            ReverseHessenberg::validate(&[0, 0, 0]).unwrap(),
            ReverseHessenberg::complete(3)
        );
        assert!(matches!(
            ReverseHessenberg::validate(&[0, 2, 1]),
            Err(Error::NotWeaklyIncreasing {
                position: 3,
                value: 1,
                prev_value: 2
            })
        ));
        assert!(matches!(
            ReverseHessenberg::validate(&[0, 2, 2]),
            Err(Error::OutOfRange {
                position: 2,
                value: 2
            })
        ));
        assert!(matches!(
            ReverseHessenberg::validate(&[-1, 0]),
            Err(Error::OutOfRange {
                position: 1,
                value: -1
            })
        ));
        assert!(matches!(
            ReverseHessenberg::validate(&[1]),
            Err(Error::OutOfRange {
                position: 1,
                value: 1
            })
        ));
    }

    #[test]
    fn feasibility() {
        let k3 = ReverseHessenberg::complete(3);
        assert!(k3.is_feasible(3));
        assert!(!k3.is_feasible(2));
        assert!(ReverseHessenberg::staircase(3).is_feasible(1));
        assert_eq!(k3.min_colours(), 3);
        assert_eq!(ReverseHessenberg::staircase(0).min_colours(), 0);
    }

    #[test]
    fn edge_counts_and_graphs() {
        let path = ReverseHessenberg::validate(&[0, 0, 1]).unwrap();
        assert_eq!(ReverseHessenberg::staircase(3).edge_count(), 0);
        assert_eq!(ReverseHessenberg::complete(3).edge_count(), 3);
        assert_eq!(path.edge_count(), 2);
        assert!(ReverseHessenberg::staircase(3).graph().edges.is_empty());
        assert_eq!(path.graph().edges, vec![(1, 2), (2, 3)]);
        assert_eq!(
            ReverseHessenberg::complete(3).graph().edges,
            vec![(1, 2), (1, 3), (2, 3)]
        );
        assert!(ReverseHessenberg::staircase(0).values().is_empty());
    }

    #[test]
    fn edges_match_count_and_are_intervals() {
        for n in 0..=8 {
            for r in all_reverse_hessenberg(n) {
                let g = r.graph();
                assert_eq!(g.edges.len(), r.edge_count());
                for i in 1..=n {
                    let lower: Vec<usize> = g
                        .edges
                        .iter()
                        .filter(|&&(_, b)| b == i)
                        .map(|&(a, _)| a)
                        .collect();
                    let expected: Vec<usize> = (r.at(i) + 1..i).collect();
                    assert_eq!(lower, expected);
                }
            }
        }
    }

    #[test]
    fn enumeration_counts_and_order() {
        assert_eq!(
            all_reverse_hessenberg(1).collect::<Vec<_>>(),
            vec![ReverseHessenberg::complete(1)]
        );
        assert_eq!(all_reverse_hessenberg(0).count(), 1);
        assert_eq!(all_reverse_hessenberg(3).count(), 5);
        assert_eq!(all_reverse_hessenberg(4).count(), 14);
        for n in 0..=10 {
            let all: Vec<_> = all_reverse_hessenberg(n).collect();
            assert_eq!(all.len() as u64, catalan_by_recursion(n), "n = {n}");
            assert!(all.windows(2).all(|w| w[0].values() < w[1].values()));
            for r in &all {
                let v: Vec<i64> = r.values().iter().map(|&x| x as i64).collect();
                assert_eq!(&ReverseHessenberg::validate(&v).unwrap(), r);
            }
        }
    }

    #[test]
    fn text_and_json_forms() {
        let r: ReverseHessenberg = "0,1,1,3".parse().unwrap();
        assert_eq!(r.values(), &[0, 1, 1, 3]);
        assert_eq!(r.to_string(), "0,1,1,3");
        assert_eq!(
            " 0, 0 ".parse::<ReverseHessenberg>().unwrap(),
            ReverseHessenberg::complete(2)
        );
        assert_eq!("".parse::<ReverseHessenberg>().unwrap().len(), 0);
        assert!(matches!(
            "0,x".parse::<ReverseHessenberg>(),
            Err(Error::Parse(_))
        ));

        assert_eq!(serde_json::to_string(&r).unwrap(), "[0,1,1,3]");
        let back: ReverseHessenberg = serde_json::from_str("[0,1,1,3]").unwrap();
        assert_eq!(back, r);
        assert!(serde_json::from_str::<ReverseHessenberg>("[0,2]").is_err());
    }

    #[test]
    fn restriction_drops_last() {
        let r: ReverseHessenberg = "0,0,1".parse().unwrap();
        assert_eq!(r.restriction().unwrap().values(), &[0, 0]);
        assert!(ReverseHessenberg::staircase(0).restriction().is_none());
    }
}
