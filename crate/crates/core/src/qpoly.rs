//! Laurent polynomials in `q` with arbitrary-precision integer coefficients.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `sum_k coeffs[k] * q^(offset + k)`.
///
/// Always canonical: either `coeffs` is empty and `offset == 0`, or the first and last
/// coefficients are nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    offset: i64,
    coeffs: Vec<BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// `c * q^e`.
    pub fn monomial(e: i64, c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(e, vec![c.into()])
    }

    pub fn from_coeffs(offset: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = Self { offset, coeffs };
        p.normalize();
        p
    }

    /// Builds a polynomial with nonnegative exponents from a histogram `counts[e]` of `q^e`.
    pub fn from_counts<I>(counts: I) -> Self
    where
        I: IntoIterator,
        I::Item: Into<BigInt>,
    {
        Self::from_coeffs(0, counts.into_iter().map(Into::into).collect())
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == self.coeffs.len() {
            self.coeffs.clear();
            self.offset = 0;
            return;
        }
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.offset += lead as i64;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `q^e`.
    pub fn coeff(&self, e: i64) -> BigInt {
        let k = e - self.offset;
        if k < 0 {
            return BigInt::zero();
        }
        self.coeffs.get(k as usize).cloned().unwrap_or_default()
    }

    /// Iterates nonzero terms `(exponent, coefficient)` in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (self.offset + k as i64, c))
    }

    pub fn add_term(&self, e: i64, c: impl Into<BigInt>) -> Self {
        let mut p = self.clone();
        p.add_term_mut(e, c.into());
        p
    }

    pub fn add_term_mut(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        if self.coeffs.is_empty() {
            self.offset = e;
            self.coeffs.push(c);
            return;
        }
        if e < self.offset {
            let shift = (self.offset - e) as usize;
            self.coeffs
                .splice(0..0, std::iter::repeat_n(BigInt::zero(), shift));
            self.offset = e;
        }
        let k = (e - self.offset) as usize;
        if k >= self.coeffs.len() {
            self.coeffs.resize(k + 1, BigInt::zero());
        }
        self.coeffs[k] += c;
        self.normalize();
    }

    /// Multiplies by `q^e`.
    pub fn shift(&self, e: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self {
            offset: self.offset + e,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.offset, self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn degree(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.offset + self.coeffs.len() as i64 - 1)
    }

    pub fn low_degree(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.offset)
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// True iff the coefficient of `q^e` equals that of `q^(center2 - e)` for every `e`,
    /// i.e. the polynomial is symmetric about `center2 / 2`. The zero polynomial is
    /// palindromic about every center.
    pub fn is_palindromic(&self, center2: i64) -> bool {
        match (self.low_degree(), self.degree()) {
            (Some(lo), Some(hi)) => {
                lo + hi == center2 && self.coeffs.iter().eq(self.coeffs.iter().rev())
            }
            _ => true,
        }
    }

    /// True iff every exponent lies in `lo..=hi`.
    pub fn supported_in(&self, lo: i64, hi: i64) -> bool {
        match (self.low_degree(), self.degree()) {
            (Some(a), Some(b)) => lo <= a && b <= hi,
            _ => true,
        }
    }

    /// Renders `q^(-center2/2) * self` with half-integer exponents, e.g. `q^(-1/2) + q^(1/2)`.
    /// Text only; half powers have no arithmetic representation here.
    pub fn render_centered(&self, center2: i64) -> String {
        if self.is_zero() {
            return "0".to_owned();
        }
        let mut out = String::new();
        for (e, c) in self.terms() {
            let twice = 2 * e - center2;
            let exp = if twice % 2 == 0 {
                format!("{}", twice / 2)
            } else {
                format!("({twice}/2)")
            };
            push_term(&mut out, c, if twice == 0 { None } else { Some(exp) });
        }
        out
    }
}

fn push_term(out: &mut String, c: &BigInt, exp: Option<String>) {
    let neg = c.is_negative();
    let mag = c.abs();
    if out.is_empty() {
        if neg {
            out.push('-');
        }
    } else {
        out.push_str(if neg { " - " } else { " + " });
    }
    match exp {
        None => out.push_str(&mag.to_string()),
        Some(exp) => {
            if !mag.is_one() {
                out.push_str(&mag.to_string());
                out.push('*');
            }
            out.push('q');
            if exp != "1" {
                out.push('^');
                out.push_str(&exp);
            }
        }
    }
}

/// `[k]_q = 1 + q + ... + q^(k-1)`; `[0]_q = 0`.
pub fn q_integer(k: usize) -> QPoly {
    QPoly::from_counts(vec![1; k])
}

/// `[k]_q! = [1]_q [2]_q ... [k]_q`; `[0]_q! = 1`.
pub fn q_factorial(k: usize) -> QPoly {
    (1..=k).fold(QPoly::one(), |acc, j| &acc * &q_integer(j))
}

impl AddAssign<&QPoly> for QPoly {
    fn add_assign(&mut self, rhs: &QPoly) {
        if rhs.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = rhs.clone();
            return;
        }
        let lo = self.offset.min(rhs.offset);
        let hi = self.degree().unwrap().max(rhs.degree().unwrap());
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (src, off) in [(&self.coeffs, self.offset), (&rhs.coeffs, rhs.offset)] {
            let base = (off - lo) as usize;
            for (k, c) in src.iter().enumerate() {
                coeffs[base + k] += c;
            }
        }
        *self = Self::from_coeffs(lo, coeffs);
    }
}

impl SubAssign<&QPoly> for QPoly {
    fn sub_assign(&mut self, rhs: &QPoly) {
        *self += &-rhs;
    }
}

impl Add for &QPoly {
    type Output = QPoly;

    fn add(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for QPoly {
    type Output = QPoly;

    fn add(mut self, rhs: QPoly) -> QPoly {
        self += &rhs;
        self
    }
}

impl Sub for &QPoly {
    type Output = QPoly;

    fn sub(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for QPoly {
    type Output = QPoly;

    fn sub(mut self, rhs: QPoly) -> QPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &QPoly {
    type Output = QPoly;

    fn neg(self) -> QPoly {
        QPoly {
            offset: self.offset,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for QPoly {
    type Output = QPoly;

    fn neg(self) -> QPoly {
        -&self
    }
}

impl Mul for &QPoly {
    type Output = QPoly;

    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(self.offset + rhs.offset, coeffs)
    }
}

impl Mul for QPoly {
    type Output = QPoly;

    fn mul(self, rhs: QPoly) -> QPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for QPoly {
    fn sum<I: Iterator<Item = QPoly>>(iter: I) -> Self {
        iter.fold(QPoly::zero(), |acc, p| acc + p)
    }
}

impl fmt::Display for QPoly {
    /// `1 + 2*q + q^2`, `3*q^-1 - q^4`, `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (e, c) in self.terms() {
            push_term(&mut out, c, (e != 0).then(|| e.to_string()));
        }
        f.write_str(&out)
    }
}

impl FromStr for QPoly {
    type Err = Error;

    /// Inverse of the `Display` rendering. Accepts terms `c`, `c*q`, `q`, `c*q^e`, `q^e`
    /// (with `e` possibly negative) joined by `+` / `-`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::Parse(format!("{msg} in polynomial {s:?}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad("empty input"));
        }
        let mut p = QPoly::zero();
        let bytes = compact.as_bytes();
        let mut start = 0;
        while start < bytes.len() {
            let mut sign = BigInt::one();
            let mut i = start;
            if bytes[i] == b'+' || bytes[i] == b'-' {
                if bytes[i] == b'-' {
                    sign = -sign;
                }
                i += 1;
            } else if start > 0 {
                return Err(bad("missing operator"));
            }
            // a term ends at the next +/- that is not an exponent sign
            let mut end = i;
            while end < bytes.len() {
                let b = bytes[end];
                if (b == b'+' || b == b'-') && end > i && bytes[end - 1] != b'^' {
                    break;
                }
                end += 1;
            }
            let term = &compact[i..end];
            if term.is_empty() {
                return Err(bad("empty term"));
            }
            let (coeff, exp) = match term.find('q') {
                None => (term.parse::<BigInt>().map_err(|_| bad("bad constant"))?, 0),
                Some(qpos) => {
                    let c = match &term[..qpos] {
                        "" => BigInt::one(),
                        head => head
                            .strip_suffix('*')
                            .ok_or_else(|| bad("expected '*' before q"))?
                            .parse::<BigInt>()
                            .map_err(|_| bad("bad coefficient"))?,
                    };
                    let e = match &term[qpos + 1..] {
                        "" => 1,
                        tail => tail
                            .strip_prefix('^')
                            .ok_or_else(|| bad("expected '^' after q"))?
                            .parse::<i64>()
                            .map_err(|_| bad("bad exponent"))?,
                    };
                    (c, e)
                }
            };
            p.add_term_mut(exp, sign * coeff);
            start = end;
        }
        Ok(p)
    }
}

/// JSON form `{"offset": e, "coeffs": [c0, c1, ...]}`. Coefficients that fit in an `i64`
/// are JSON integers; larger ones are decimal strings.
impl Serialize for QPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            offset: i64,
            coeffs: Coeffs<'a>,
        }
        struct Coeffs<'a>(&'a [BigInt]);
        impl Serialize for Coeffs<'_> {
            fn serialize<S: Serializer>(
                &self,
                serializer: S,
            ) -> std::result::Result<S::Ok, S::Error> {
                let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
                for c in self.0 {
                    match c.to_i64() {
                        Some(v) => seq.serialize_element(&v)?,
                        None => seq.serialize_element(&c.to_string())?,
                    }
                }
                seq.end()
            }
        }
        Repr {
            offset: self.offset,
            coeffs: Coeffs(&self.coeffs),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for QPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Coeff {
            Int(i64),
            Text(String),
        }
        #[derive(Deserialize)]
        struct Repr {
            offset: i64,
            coeffs: Vec<Coeff>,
        }
        let repr = Repr::deserialize(deserializer)?;
        let coeffs = repr
            .coeffs
            .into_iter()
            .map(|c| match c {
                Coeff::Int(v) => Ok(BigInt::from(v)),
                Coeff::Text(t) => t.parse::<BigInt>().map_err(de::Error::custom),
            })
            .collect::<std::result::Result<Vec<_>, D::Error>>()?;
        Ok(QPoly::from_coeffs(repr.offset, coeffs))
    }
}
