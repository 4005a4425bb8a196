//! The chromatic quasisymmetric polynomial `CSP_r = Σ_κ q^asc(κ) x^wt(κ)` in `m` variables,
//! its Schur expansion, and the checks predicted for the Schur coefficients.
//!
//! The polynomial is symmetric in `x`, so it is stored on dominant weights only: the entry
//! at a partition `μ` is the coefficient of `x^μ` (equivalently of the monomial symmetric
//! polynomial `m_μ`). Schur coefficients `c_λ(q)` are found by back-substitution against the
//! unitriangular Kostka matrix. Each `c_λ` is expected to be a nonnegative polynomial,
//! palindromic about `E_r / 2` and supported in `[0, E_r]`; these are checked and reported,
//! never assumed.

use std::collections::{BTreeMap, HashMap};

use rand::seq::index::sample;
use rand::SeedableRng;
use serde::Serialize;

use crate::colourings::fold_colourings;
use crate::hessenberg::ReverseHessenberg;
use crate::partitions::{kostka_table, partitions_of, Partition, WeightVector};
use crate::qpoly::QPoly;

type Histograms = HashMap<Vec<usize>, Vec<u64>>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CsPoly {
    pub r: ReverseHessenberg,
    pub m: usize,
    pub e_r: usize,
    /// Coefficient of `x^μ` for each dominant `μ` with at least one colouring.
    pub monomial: BTreeMap<Partition, QPoly>,
}

impl CsPoly {
    pub fn n(&self) -> usize {
        self.r.len()
    }

    /// Entries in descending lexicographic order of `μ`.
    pub fn monomial_desc(&self) -> impl Iterator<Item = (&Partition, &QPoly)> {
        self.monomial.iter().rev()
    }

    pub fn coefficient(&self, mu: &Partition) -> QPoly {
        self.monomial.get(mu).cloned().unwrap_or_default()
    }

    /// `Σ_μ |orbit(μ)| · monomial[μ](1)`, the number of proper colourings.
    pub fn colouring_total(&self) -> num_bigint::BigInt {
        self.monomial
            .iter()
            .map(|(mu, p)| p.eval_at_one() * mu.to_weight(self.m).orbit_size())
            .sum()
    }
}

fn add_histogram(into: &mut Histograms, from: Histograms) {
    for (w, h) in from {
        match into.get_mut(&w) {
            Some(acc) => acc.iter_mut().zip(&h).for_each(|(a, b)| *a += b),
            None => {
                into.insert(w, h);
            }
        }
    }
}

/// Per-weight ascent histograms. With `dominant_only`, colourings whose weight is not weakly
/// decreasing are skipped.
fn weight_histograms(
    r: &ReverseHessenberg,
    m: usize,
    parallel: bool,
    dominant_only: bool,
) -> Histograms {
    let e_r = r.edge_count();
    fold_colourings(
        r,
        m,
        parallel,
        Histograms::new,
        |acc, cursor| {
            let w = cursor.weight();
            if dominant_only && w.windows(2).any(|p| p[0] < p[1]) {
                return;
            }
            let asc = cursor.ascents();
            match acc.get_mut(w) {
                Some(h) => h[asc] += 1,
                None => {
                    let mut h = vec![0u64; e_r + 1];
                    h[asc] = 1;
                    acc.insert(w.to_vec(), h);
                }
            }
        },
        |mut a, b| {
            add_histogram(&mut a, b);
            a
        },
    )
}

/// Computes `CSP_r` on dominant weights. Infeasible `(r, m)` gives the zero polynomial.
pub fn compute_csp(r: &ReverseHessenberg, m: usize, parallel: bool) -> CsPoly {
    let monomial = weight_histograms(r, m, parallel, true)
        .into_iter()
        .map(|(w, h)| (Partition::from_weight(&w), QPoly::from_counts(h)))
        .collect();
    CsPoly {
        r: r.clone(),
        m,
        e_r: r.edge_count(),
        monomial,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchurExpansion {
    pub n: usize,
    pub m: usize,
    pub e_r: usize,
    /// Nonzero `c_λ(q)`; absent partitions have coefficient zero.
    pub coefficients: BTreeMap<Partition, QPoly>,
}

impl SchurExpansion {
    pub fn coefficient(&self, lambda: &Partition) -> QPoly {
        self.coefficients.get(lambda).cloned().unwrap_or_default()
    }

    pub fn coefficients_desc(&self) -> impl Iterator<Item = (&Partition, &QPoly)> {
        self.coefficients.iter().rev()
    }
}

/// Solves `monomial[μ] = Σ_λ c_λ K[λ][μ]` by back-substitution in descending lexicographic
/// order, which extends dominance.
pub fn schur_expand(csp: &CsPoly) -> SchurExpansion {
    let table = kostka_table(csp.n(), csp.m);
    let mut solved: Vec<QPoly> = Vec::with_capacity(table.index.len());
    for (b, lambda) in table.index.iter().enumerate() {
        let mut c = csp.coefficient(lambda);
        for (a, earlier) in solved.iter().enumerate() {
            let k = table.matrix[a][b];
            if k != 0 && !earlier.is_zero() {
                c -= &earlier.scale(&k.into());
            }
        }
        solved.push(c);
    }
    SchurExpansion {
        n: csp.n(),
        m: csp.m,
        e_r: csp.e_r,
        coefficients: table
            .index
            .into_iter()
            .zip(solved)
            .filter(|(_, c)| !c.is_zero())
            .collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LambdaCheck {
    pub partition: Partition,
    pub poly: QPoly,
    pub nonnegative: bool,
    pub palindromic: bool,
    pub in_support: bool,
    /// Observed exponent range; `null` never occurs since only nonzero `c_λ` are listed.
    pub low_degree: Option<i64>,
    pub degree: Option<i64>,
}

impl LambdaCheck {
    pub fn pass(&self) -> bool {
        self.nonnegative && self.palindromic && self.in_support
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub pass: bool,
    pub center2: i64,
    pub reconstruction: bool,
    pub per_lambda: Vec<LambdaCheck>,
}

impl VerificationReport {
    pub fn failures(&self) -> impl Iterator<Item = &LambdaCheck> {
        self.per_lambda.iter().filter(|c| !c.pass())
    }
}

/// Checks every `c_λ` for nonnegativity, palindromicity about `E_r / 2` and support in
/// `[0, E_r]`, and that `Σ_λ c_λ K[λ][μ]` reproduces the monomial data.
pub fn verify_kato(csp: &CsPoly, expansion: &SchurExpansion) -> VerificationReport {
    let e_r = expansion.e_r as i64;
    let per_lambda: Vec<LambdaCheck> = expansion
        .coefficients_desc()
        .map(|(lambda, c)| LambdaCheck {
            partition: lambda.clone(),
            poly: c.clone(),
            nonnegative: c.is_nonnegative(),
            palindromic: c.is_palindromic(e_r),
            in_support: c.supported_in(0, e_r),
            low_degree: c.low_degree(),
            degree: c.degree(),
        })
        .collect();
    let reconstruction = reconstructs(csp, expansion);
    VerificationReport {
        pass: reconstruction && per_lambda.iter().all(LambdaCheck::pass),
        center2: e_r,
        reconstruction,
        per_lambda,
    }
}

fn reconstructs(csp: &CsPoly, expansion: &SchurExpansion) -> bool {
    if csp.n() != expansion.n || csp.m != expansion.m || csp.e_r != expansion.e_r {
        return false;
    }
    let table = kostka_table(csp.n(), csp.m);
    if csp.monomial.keys().any(|mu| table.position(mu).is_none()) {
        return false;
    }
    table.index.iter().enumerate().all(|(b, mu)| {
        let total: QPoly = table
            .index
            .iter()
            .enumerate()
            .filter(|&(a, _)| table.matrix[a][b] != 0)
            .map(|(a, lambda)| {
                expansion
                    .coefficient(lambda)
                    .scale(&table.matrix[a][b].into())
            })
            .sum();
        total == csp.coefficient(mu)
    })
}

/// Accumulates `CSP_r` on all weights (not just dominant ones) and checks that coefficients
/// agree across each `S_m` orbit. Checks `trials` orbits chosen by a fixed-seed generator,
/// or every orbit when there are at most `trials` of them.
pub fn symmetry_check(r: &ReverseHessenberg, m: usize, trials: usize, parallel: bool) -> bool {
    let raw = weight_histograms(r, m, parallel, false);
    let n = r.len();
    let orbits = partitions_of(n, m);
    let chosen: Vec<usize> = if trials >= orbits.len() {
        (0..orbits.len()).collect()
    } else {
        let mut rng = rand::rngs::StdRng::seed_from_u64(0x5eed_c5b0);
        let mut picks = sample(&mut rng, orbits.len(), trials).into_vec();
        picks.sort_unstable();
        picks
    };
    let covered: usize = orbits
        .iter()
        .map(|mu| mu.to_weight(m).orbit_size() as usize)
        .sum();
    // every raw key must be a weight of size n; orbits cover them all
    if raw.keys().any(|w| w.iter().sum::<usize>() != n) || raw.len() > covered {
        return false;
    }
    chosen.into_iter().all(|k| {
        let members = orbits[k].to_weight(m).orbit();
        let first = raw.get(members[0].entries());
        members
            .iter()
            .all(|w: &WeightVector| raw.get(w.entries()) == first)
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct MonomialEntry {
    pub weight: WeightVector,
    pub poly: QPoly,
}

#[derive(Debug, Clone, Serialize)]
pub struct SchurEntry {
    pub partition: Partition,
    pub poly: QPoly,
}

/// The JSON document produced for a single `(r, m)`.
#[derive(Debug, Clone, Serialize)]
pub struct CspReport {
    pub n: usize,
    pub m: usize,
    pub r: ReverseHessenberg,
    #[serde(rename = "E_r")]
    pub e_r: usize,
    /// `null` when `(r, m)` is infeasible.
    pub d_r: Option<i64>,
    pub monomial: Vec<MonomialEntry>,
    pub schur: Vec<SchurEntry>,
    pub verification: VerificationReport,
}

impl CspReport {
    pub fn build(r: &ReverseHessenberg, m: usize, parallel: bool) -> Self {
        let csp = compute_csp(r, m, parallel);
        let expansion = schur_expand(&csp);
        let verification = verify_kato(&csp, &expansion);
        Self {
            n: r.len(),
            m,
            r: r.clone(),
            e_r: csp.e_r,
            d_r: crate::geometry::dimension(r, m).ok(),
            monomial: csp
                .monomial_desc()
                .map(|(mu, p)| MonomialEntry {
                    weight: mu.to_weight(m),
                    poly: p.clone(),
                })
                .collect(),
            schur: expansion
                .coefficients_desc()
                .map(|(lambda, p)| SchurEntry {
                    partition: lambda.clone(),
                    poly: p.clone(),
                })
                .collect(),
            verification,
        }
    }
}
