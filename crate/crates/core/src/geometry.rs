//! Cell-count checks on the convolution variety `Y_r`.
//!
//! `Y_r` is an iterated bundle of projective spaces, the `i`-th fibre having dimension
//! `m - i + r(i)`, so its Poincaré polynomial (in `q` = complex cell dimension) is a product
//! of q-integers. Its torus fixed points are the proper colourings, and the attracting cell of
//! `κ` has dimension `htt(κ) - asc(κ) - n`, which gives a second route to the same polynomial.

use serde::Serialize;

use crate::colourings::fold_colourings;
use crate::error::Result;
use crate::hessenberg::ReverseHessenberg;
use crate::qpoly::{q_integer, QPoly};

/// `d_r = (m - 1) n - E_r`.
pub fn dimension(r: &ReverseHessenberg, m: usize) -> Result<i64> {
    r.check_feasible(m)?;
    Ok((m as i64 - 1) * r.len() as i64 - r.edge_count() as i64)
}

/// Dimension `m - i + r(i)` of the projective fibre added at step `i`.
pub fn fibre_dimension(r: &ReverseHessenberg, m: usize, i: usize) -> Result<usize> {
    assert!(
        (1..=r.len()).contains(&i),
        "position {i} outside 1..={}",
        r.len()
    );
    r.check_feasible(m)?;
    Ok(m + r.at(i) - i)
}

pub fn fibre_dimensions(r: &ReverseHessenberg, m: usize) -> Result<Vec<usize>> {
    (1..=r.len()).map(|i| fibre_dimension(r, m, i)).collect()
}

/// `Π_i [m - i + r(i) + 1]_q`.
pub fn poincare_product(r: &ReverseHessenberg, m: usize) -> Result<QPoly> {
    Ok(fibre_dimensions(r, m)?
        .into_iter()
        .fold(QPoly::one(), |acc, d| &acc * &q_integer(d + 1)))
}

/// `Σ_κ q^cell_dim(κ)` over proper colourings.
pub fn poincare_bb(r: &ReverseHessenberg, m: usize, parallel: bool) -> Result<QPoly> {
    let d_r = dimension(r, m)?;
    let counts = fold_colourings(
        r,
        m,
        parallel,
        || vec![0u64; d_r as usize + 1],
        |acc, cursor| acc[cursor.cell_dim()] += 1,
        |mut a, b| {
            a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
            a
        },
    );
    Ok(QPoly::from_counts(counts))
}

/// `2ρ(μ) = Σ_p μ_p (m - 2p + 1)`.
pub fn two_rho(weight: &[usize]) -> i64 {
    let m = weight.len() as i64;
    weight
        .iter()
        .enumerate()
        .map(|(k, &mu)| mu as i64 * (m - 2 * (k as i64 + 1) + 1))
        .sum()
}

/// Checks, for every proper colouring, `2ρ(wt κ) = n(m+1) - 2 htt(κ)` and
/// `2(asc - htt + n) - 2ρ + d_r = 2 asc - E_r`.
pub fn exponent_identity_check(r: &ReverseHessenberg, m: usize, parallel: bool) -> Result<bool> {
    let d_r = dimension(r, m)?;
    let n = r.len() as i64;
    let e_r = r.edge_count() as i64;
    let m_i = m as i64;
    Ok(fold_colourings(
        r,
        m,
        parallel,
        || true,
        |ok, cursor| {
            let rho2 = two_rho(cursor.weight());
            let htt = cursor.height() as i64;
            let asc = cursor.ascents() as i64;
            *ok &= rho2 == n * (m_i + 1) - 2 * htt;
            *ok &= 2 * (asc - htt + n) - rho2 + d_r == 2 * asc - e_r;
        },
        |a, b| a && b,
    ))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeometryReport {
    pub d_r: i64,
    pub fibre_dims: Vec<usize>,
    pub poincare_product: QPoly,
    pub poincare_bb: QPoly,
    pub agree: bool,
    pub identities_pass: bool,
}

impl GeometryReport {
    pub fn build(r: &ReverseHessenberg, m: usize, parallel: bool) -> Result<Self> {
        let d_r = dimension(r, m)?;
        let product = poincare_product(r, m)?;
        let bb = poincare_bb(r, m, parallel)?;
        let agree = product == bb;
        let identities_pass = agree
            && bb.degree() == Some(d_r)
            && bb.is_palindromic(d_r)
            && bb.coeff(0) == 1.into()
            && bb.coeff(d_r) == 1.into()
            && exponent_identity_check(r, m, parallel)?;
        Ok(Self {
            d_r,
            fibre_dims: fibre_dimensions(r, m)?,
            poincare_product: product,
            poincare_bb: bb,
            agree,
            identities_pass,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colourings::{colouring_count, enumerate_colourings};
    use crate::error::Error;
    use crate::hessenberg::all_reverse_hessenberg;
    use num_bigint::BigInt;

    fn rh(s: &str) -> ReverseHessenberg {
        s.parse().unwrap()
    }

    fn poly(c: &[i64]) -> QPoly {
        QPoly::from_counts(c.iter().map(|&x| BigInt::from(x)))
    }

    #[test]
    fn dimensions() {
        assert_eq!(dimension(&ReverseHessenberg::staircase(3), 2).unwrap(), 3);
        assert_eq!(dimension(&rh("0,0,1"), 3).unwrap(), 4);
        assert_eq!(dimension(&ReverseHessenberg::complete(3), 3).unwrap(), 3);
        assert!(matches!(
            dimension(&ReverseHessenberg::complete(3), 2),
            Err(Error::Infeasible {
                position: 3,
                needed: 3,
                m: 2
            })
        ));
        assert_eq!(dimension(&ReverseHessenberg::staircase(0), 1).unwrap(), 0);
    }

    #[test]
    fn fibres() {
        assert_eq!(fibre_dimension(&rh("0,0,1"), 3, 3).unwrap(), 1);
        assert_eq!(fibre_dimension(&rh("0"), 4, 1).unwrap(), 3);
        for m in 1..=5 {
            assert_eq!(
                fibre_dimensions(&ReverseHessenberg::staircase(4), m).unwrap(),
                vec![m - 1; 4]
            );
        }
        assert!(fibre_dimension(&ReverseHessenberg::complete(3), 2, 1).is_err());
    }

    #[test]
    fn product_examples() {
        assert_eq!(poincare_product(&rh("0"), 2).unwrap(), poly(&[1, 1]));
        assert_eq!(poincare_product(&rh("0,0"), 2).unwrap(), poly(&[1, 1]));
        assert_eq!(
            poincare_product(&rh("0,0,1"), 3).unwrap(),
            poly(&[1, 3, 4, 3, 1])
        );
    }

    #[test]
    fn paving_examples() {
        assert_eq!(poincare_bb(&rh("0"), 2, false).unwrap(), poly(&[1, 1]));
        assert_eq!(poincare_bb(&rh("0,0"), 2, false).unwrap(), poly(&[1, 1]));
        assert_eq!(
            poincare_bb(&ReverseHessenberg::staircase(1), 3, false).unwrap(),
            poly(&[1, 1, 1])
        );
    }

    #[test]
    fn exponent_identity_examples() {
        // κ = (1,2) for r = (0,0), m = 2: μ = (1,1)
        assert_eq!(two_rho(&[1, 1]), 0);
        assert_eq!(2 * 3 - 2 * 3, 0);
        // κ = (2) for the staircase on one vertex, m = 2: μ = (0,1)
        assert_eq!(two_rho(&[0, 1]), -1);
        assert_eq!(3 - 2 * 2, -1);
        assert!(exponent_identity_check(&rh("0,0"), 2, false).unwrap());
        assert!(exponent_identity_check(&ReverseHessenberg::staircase(1), 2, false).unwrap());
        assert!(exponent_identity_check(&ReverseHessenberg::staircase(0), 3, false).unwrap());
    }

    #[test]
    fn two_routes_agree() {
        for n in 0..=6 {
            for r in all_reverse_hessenberg(n) {
                for m in r.min_colours().max(1)..=6 {
                    let report = GeometryReport::build(&r, m, false).unwrap();
                    assert!(report.identities_pass, "r = {r}, m = {m}: {report:?}");
                    assert_eq!(
                        report.poincare_bb.eval_at_one(),
                        BigInt::from(colouring_count(&r, m))
                    );
                }
            }
        }
    }

    #[test]
    fn paving_matches_stream() {
        let r = rh("0,0,1,1");
        let mut expected = QPoly::zero();
        for (_, s) in enumerate_colourings(&r, 3) {
            expected.add_term_mut(s.cell_dim as i64, 1.into());
        }
        assert_eq!(poincare_bb(&r, 3, true).unwrap(), expected);
    }
}
