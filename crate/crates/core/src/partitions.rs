//! Partitions, weight vectors, dominance order and Kostka numbers.
//!
//! `K[λ][μ]` counts semistandard Young tableaux of shape `λ` and content `μ`, which is the
//! dimension of the `μ` weight space of the polynomial `GL_m` representation `V(λ)`.

use std::cmp::Ordering;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Weakly decreasing positive parts. Zero parts are trimmed on construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Sorts the entries into decreasing order and drops zeros.
    pub fn from_weight(entries: &[usize]) -> Self {
        let mut parts: Vec<usize> = entries.iter().copied().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self(parts)
    }

    /// Fails unless `parts` is weakly decreasing; trailing zeros are dropped.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Self(parts.into_iter().filter(|&p| p > 0).collect()))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Zero-padded to length `m`. Panics if there are more than `m` parts.
    pub fn to_weight(&self, m: usize) -> WeightVector {
        assert!(self.len() <= m, "{self} has more than {m} parts");
        let mut entries = self.0.clone();
        entries.resize(m, 0);
        WeightVector(entries)
    }

    /// Descending lexicographic comparison; `Less` means `self` comes first.
    pub fn cmp_desc(&self, other: &Self) -> Ordering {
        other.0.cmp(&self.0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// A length-`m` vector of nonnegative colour counts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightVector(pub Vec<usize>);

impl WeightVector {
    pub fn zero(m: usize) -> Self {
        Self(vec![0; m])
    }

    /// `ε_k` for `1 <= k <= m`.
    pub fn unit(m: usize, k: usize) -> Self {
        let mut w = Self::zero(m);
        w.0[k - 1] = 1;
        w
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn m(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn dominant(&self) -> Partition {
        Partition::from_weight(&self.0)
    }

    /// Number of distinct rearrangements of the entries, `m! / prod_v (mult v)!`.
    pub fn orbit_size(&self) -> u128 {
        let mut sorted = self.0.clone();
        sorted.sort_unstable();
        let mut out: u128 = 1;
        let mut placed = 0u128;
        let mut run = 0u128;
        for (k, v) in sorted.iter().enumerate() {
            run = if k > 0 && sorted[k - 1] == *v {
                run + 1
            } else {
                1
            };
            placed += 1;
            // every prefix product is itself a multinomial coefficient, so this divides exactly
            out = out * placed / run;
        }
        out
    }

    /// All distinct rearrangements in descending lexicographic order.
    pub fn orbit(&self) -> Vec<WeightVector> {
        let mut v = self.0.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        let mut out = vec![WeightVector(v.clone())];
        // previous permutation in lexicographic order, starting from the largest
        while prev_permutation(&mut v) {
            out.push(WeightVector(v.clone()));
        }
        out
    }
}

fn prev_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] <= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] >= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// Partitions of `n` with at most `m` parts, in descending lexicographic order.
pub fn partitions_of(n: usize, m: usize) -> Vec<Partition> {
    fn go(
        rest: usize,
        max_part: usize,
        slots: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if slots == 0 {
            return;
        }
        for p in (1..=max_part.min(rest)).rev() {
            // the remaining slots must be able to absorb what is left
            if p * slots < rest {
                break;
            }
            cur.push(p);
            go(rest - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, m, &mut Vec::new(), &mut out);
    out
}

/// Dominance order: every prefix sum of `lambda` is at least the corresponding one of `mu`.
pub fn dominates(lambda: &Partition, mu: &Partition) -> Result<bool> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch {
            left: lambda.size(),
            right: mu.size(),
        });
    }
    let len = lambda.len().max(mu.len());
    let (mut a, mut b) = (0usize, 0usize);
    for k in 0..len {
        a += lambda.0.get(k).copied().unwrap_or(0);
        b += mu.0.get(k).copied().unwrap_or(0);
        if a < b {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Number of semistandard tableaux of shape `lambda` with content `mu` (entries `1..=mu.m()`).
pub fn kostka(lambda: &Partition, mu: &WeightVector) -> Result<u64> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch {
            left: lambda.size(),
            right: mu.size(),
        });
    }
    let m = mu.m();
    if lambda.len() > m {
        return Ok(0);
    }
    let shape = lambda.parts();
    let mut filler = Filler {
        shape,
        m,
        rows: shape.iter().map(|&len| vec![0usize; len]).collect(),
        remaining: mu.0.clone(),
    };
    Ok(filler.count(0, 0))
}

/// Row-by-row depth-first filling state.
struct Filler<'a> {
    shape: &'a [usize],
    m: usize,
    rows: Vec<Vec<usize>>,
    remaining: Vec<usize>,
}

impl Filler<'_> {
    fn count(&mut self, row: usize, col: usize) -> u64 {
        if row == self.shape.len() {
            return 1;
        }
        if col == self.shape[row] {
            return self.count(row + 1, 0);
        }
        let left = if col > 0 { self.rows[row][col - 1] } else { 1 };
        let above = if row > 0 {
            self.rows[row - 1][col] + 1
        } else {
            1
        };
        // strictly increasing columns: the cells below this one need larger entries
        let below = self.shape[row + 1..]
            .iter()
            .take_while(|&&len| len > col)
            .count();
        let lo = left.max(above);
        let hi = self.m - below;
        let mut total = 0;
        for e in lo..=hi {
            if self.remaining[e - 1] == 0 {
                continue;
            }
            self.remaining[e - 1] -= 1;
            self.rows[row][col] = e;
            total += self.count(row, col + 1);
            self.remaining[e - 1] += 1;
        }
        total
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KostkaTable {
    pub index: Vec<Partition>,
    /// `matrix[a][b] = K[index[a]][index[b]]`.
    pub matrix: Vec<Vec<u64>>,
}

impl KostkaTable {
    pub fn position(&self, lambda: &Partition) -> Option<usize> {
        self.index.binary_search_by(|p| p.cmp_desc(lambda)).ok()
    }

    /// `K[λ][μ]` for `μ` given as a partition (its dominant representative).
    pub fn get(&self, lambda: &Partition, mu: &Partition) -> Option<u64> {
        Some(self.matrix[self.position(lambda)?][self.position(mu)?])
    }
}

pub fn kostka_table(n: usize, m: usize) -> KostkaTable {
    let index = partitions_of(n, m);
    let matrix = index
        .par_iter()
        .map(|lambda| {
            index
                .iter()
                .map(|mu| kostka(lambda, &mu.to_weight(m)).expect("sizes agree"))
                .collect()
        })
        .collect();
    KostkaTable { index, matrix }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    /// Enumerates every filling of the shape with entries in `1..=m` and keeps the
    /// semistandard ones with the requested content.
    fn kostka_brute_force(lambda: &[usize], mu: &[usize]) -> u64 {
        let m = mu.len();
        let cells: Vec<(usize, usize)> = lambda
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
            .collect();
        let total = (m as u64).pow(cells.len() as u32);
        let mut count = 0;
        for code in 0..total {
            let mut x = code;
            let mut grid = vec![vec![0usize; lambda.first().copied().unwrap_or(0)]; lambda.len()];
            let mut content = vec![0usize; m];
            for &(r, c) in &cells {
                let e = (x % m as u64) as usize + 1;
                x /= m as u64;
                grid[r][c] = e;
                content[e - 1] += 1;
            }
            if content != mu {
                continue;
            }
            let ok = cells.iter().all(|&(r, c)| {
                (c == 0 || grid[r][c - 1] <= grid[r][c]) && (r == 0 || grid[r - 1][c] < grid[r][c])
            });
            if ok {
                count += 1;
            }
        }
        count
    }

    /// `prod_{i<j} (l_i - l_j + j - i) / (j - i)` over the zero-padded partition.
    fn weyl_dimension(lambda: &Partition, m: usize) -> u128 {
        let l = lambda.to_weight(m).0;
        let (mut num, mut den) = (1u128, 1u128);
        for i in 0..m {
            for j in i + 1..m {
                num *= (l[i] + j - i - l[j]) as u128;
                den *= (j - i) as u128;
            }
        }
        assert_eq!(num % den, 0);
        num / den
    }

    #[test]
    fn partitions_examples() {
        assert_eq!(
            partitions_of(3, 3),
            vec![part(&[3]), part(&[2, 1]), part(&[1, 1, 1])]
        );
        assert_eq!(partitions_of(3, 2), vec![part(&[3]), part(&[2, 1])]);
        assert_eq!(partitions_of(0, 2), vec![part(&[])]);
        assert_eq!(partitions_of(6, 6).len(), 11);
        assert_eq!(partitions_of(7, 3).len(), 8);
    }

    #[test]
    fn dominance_examples() {
        assert!(dominates(&part(&[2, 1]), &part(&[1, 1, 1])).unwrap());
        assert!(!dominates(&part(&[2, 2]), &part(&[3, 1])).unwrap());
        assert!(dominates(&part(&[3, 1]), &part(&[3, 1])).unwrap());
        assert!(matches!(
            dominates(&part(&[2]), &part(&[1])),
            Err(Error::SizeMismatch { left: 2, right: 1 })
        ));
        // incomparable pair
        assert!(!dominates(&part(&[3, 1, 1, 1]), &part(&[2, 2, 2])).unwrap());
        assert!(!dominates(&part(&[2, 2, 2]), &part(&[3, 1, 1, 1])).unwrap());
    }

    #[test]
    fn kostka_examples() {
        assert_eq!(
            kostka(&part(&[2, 1]), &WeightVector(vec![1, 1, 1])).unwrap(),
            2
        );
        assert_eq!(kostka_brute_force(&[2, 1], &[1, 1, 1]), 2);
        for mu in [vec![3, 0, 1], vec![1, 1, 1, 1], vec![0, 4]] {
            assert_eq!(kostka(&part(&[4]), &WeightVector(mu)).unwrap(), 1);
        }
        assert_eq!(
            kostka(&part(&[1, 1]), &WeightVector(vec![2, 0])).unwrap(),
            0
        );
        assert!(matches!(
            kostka(&part(&[1, 1]), &WeightVector(vec![1, 0])),
            Err(Error::SizeMismatch { .. })
        ));
        assert_eq!(
            kostka(&part(&[1, 1, 1]), &WeightVector(vec![2, 1])).unwrap(),
            0
        );
        assert_eq!(kostka(&part(&[]), &WeightVector(vec![0, 0])).unwrap(), 1);
    }

    #[test]
    fn kostka_table_examples() {
        let t = kostka_table(2, 2);
        assert_eq!(t.index, vec![part(&[2]), part(&[1, 1])]);
        assert_eq!(t.matrix, vec![vec![1, 1], vec![0, 1]]);
        assert_eq!(kostka_table(1, 1).matrix, vec![vec![1]]);
        let t = kostka_table(3, 3);
        assert_eq!(t.get(&part(&[2, 1]), &part(&[1, 1, 1])), Some(2));
        assert_eq!(
            serde_json::to_string(&kostka_table(2, 2)).unwrap(),
            r#"{"index":[[2],[1,1]],"matrix":[[1,1],[0,1]]}"#
        );
    }

    #[test]
    fn kostka_matches_brute_force() {
        for n in 0..=5 {
            for m in 1..=5 {
                for lambda in partitions_of(n, m) {
                    for mu in partitions_of(n, m) {
                        for w in mu.to_weight(m).orbit() {
                            assert_eq!(
                                kostka(&lambda, &w).unwrap(),
                                kostka_brute_force(lambda.parts(), w.entries()),
                                "λ = {lambda}, μ = {w}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn unitriangular_in_descending_lex_order() {
        for n in 0..=6 {
            for m in 1..=6 {
                let t = kostka_table(n, m);
                for (a, lambda) in t.index.iter().enumerate() {
                    assert_eq!(t.matrix[a][a], 1);
                    for (b, mu) in t.index.iter().enumerate() {
                        let dom = dominates(lambda, mu).unwrap();
                        if !dom {
                            assert_eq!(t.matrix[a][b], 0, "λ = {lambda}, μ = {mu}");
                        }
                        if dom && a != b {
                            assert!(a < b, "{lambda} dominates {mu} but comes later");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn weighted_row_sums_give_weyl_dimension() {
        for n in 0..=4 {
            for m in 1..=4 {
                let t = kostka_table(n, m);
                for (a, lambda) in t.index.iter().enumerate() {
                    let total: u128 = t
                        .index
                        .iter()
                        .enumerate()
                        .map(|(b, mu)| t.matrix[a][b] as u128 * mu.to_weight(m).orbit_size())
                        .sum();
                    assert_eq!(total, weyl_dimension(lambda, m), "λ = {lambda}, m = {m}");
                }
            }
        }
    }

    #[test]
    fn orbits() {
        let w = WeightVector(vec![1, 0, 1]);
        let orbit = w.orbit();
        assert_eq!(
            orbit,
            vec![
                WeightVector(vec![1, 1, 0]),
                WeightVector(vec![1, 0, 1]),
                WeightVector(vec![0, 1, 1])
            ]
        );
        assert_eq!(w.orbit_size(), 3);
        assert_eq!(WeightVector(vec![2, 1, 0, 0]).orbit_size(), 12);
        assert_eq!(WeightVector(vec![]).orbit_size(), 1);
        assert_eq!(WeightVector(vec![]).orbit().len(), 1);
        for m in 1..=5 {
            for n in 0..=5 {
                for lambda in partitions_of(n, m) {
                    let w = lambda.to_weight(m);
                    assert_eq!(w.orbit().len() as u128, w.orbit_size());
                }
            }
        }
    }

    #[test]
    fn partition_helpers() {
        assert_eq!(Partition::from_weight(&[0, 2, 0, 3, 2]), part(&[3, 2, 2]));
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(part(&[2, 1, 0]).parts(), &[2, 1]);
        assert_eq!(part(&[2, 1]).to_weight(4), WeightVector(vec![2, 1, 0, 0]));
        assert_eq!(part(&[2, 1]).to_string(), "(2,1)");
        assert_eq!(WeightVector::unit(3, 2), WeightVector(vec![0, 1, 0]));
    }

    proptest! {
        #[test]
        fn kostka_is_permutation_invariant(
            mu in prop::collection::vec(0usize..3, 1..6),
            seed in any::<u64>(),
        ) {
            let n: usize = mu.iter().sum();
            let m = mu.len();
            let mut shuffled = mu.clone();
            shuffled.shuffle(&mut rand::rngs::StdRng::seed_from_u64(seed));
            for lambda in partitions_of(n, m) {
                let sorted = Partition::from_weight(&mu).to_weight(m);
                let k = kostka(&lambda, &WeightVector(shuffled.clone())).unwrap();
                prop_assert_eq!(k, kostka(&lambda, &sorted).unwrap());
                prop_assert_eq!(k, kostka(&lambda, &WeightVector(mu.clone())).unwrap());
            }
        }
    }
}
