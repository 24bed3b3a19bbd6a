//! Exact sparse polynomial arithmetic for position profiles.
//!
//! [`Profile`] is a bivariate polynomial in `x` (blue piece count) and `y`
//! (red piece count) with nonnegative big-integer coefficients: the
//! coefficient of `x^j y^r` counts positions with `j` blue and `r` red
//! pieces. [`TriPoly`] adds a third marker `e` for empty vertices and allows
//! signed coefficients, which the generating-function machinery needs.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    /// Collapsing the empty-vertex marker produced a negative count, which
    /// signals an algebra bug upstream (profiles only count things).
    #[error("negative coefficient {value} at x^{blue} y^{red} after specializing e=1")]
    NegativeCoefficient { blue: u32, red: u32, value: BigInt },
}

/// Polynomial profile: sparse map from `(blue, red)` exponent pairs to
/// position counts. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Profile {
    terms: BTreeMap<(u32, u32), BigUint>,
}

impl Profile {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The constant polynomial 1 (the empty position).
    pub fn one() -> Self {
        Self::term(0, 0, 1u32)
    }

    /// Single term `c * x^blue * y^red`.
    pub fn term(blue: u32, red: u32, count: impl Into<BigUint>) -> Self {
        let mut terms = BTreeMap::new();
        let count = count.into();
        if !count.is_zero() {
            terms.insert((blue, red), count);
        }
        Self { terms }
    }

    /// Builds a profile from (blue, red, count) triples, merging duplicates.
    pub fn from_terms<I>(iter: I) -> Self
    where
        I: IntoIterator<Item = (u32, u32, BigUint)>,
    {
        let mut p = Self::zero();
        for (blue, red, count) in iter {
            p.add_term(blue, red, count);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Adds `count` to the coefficient of `x^blue y^red`.
    pub fn add_term(&mut self, blue: u32, red: u32, count: BigUint) {
        if count.is_zero() {
            return;
        }
        *self.terms.entry((blue, red)).or_insert_with(BigUint::zero) += count;
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(b, r), c) in &other.terms {
            out.add_term(b, r, c.clone());
        }
        out
    }

    /// Convolution product.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&(b1, r1), c1) in &self.terms {
            for (&(b2, r2), c2) in &other.terms {
                out.add_term(b1 + b2, r1 + r2, c1 * c2);
            }
        }
        out
    }

    /// Stored coefficient of `x^blue y^red`, or 0.
    pub fn coefficient(&self, blue: u32, red: u32) -> BigUint {
        self.terms
            .get(&(blue, red))
            .cloned()
            .unwrap_or_else(BigUint::zero)
    }

    /// Exact evaluation at integer points.
    pub fn evaluate(&self, x: &BigUint, y: &BigUint) -> BigUint {
        let mut acc = BigUint::zero();
        for (&(b, r), c) in &self.terms {
            acc += c * x.pow(b) * y.pow(r);
        }
        acc
    }

    /// Total number of positions: the value at x = y = 1.
    pub fn total(&self) -> BigUint {
        self.terms.values().sum()
    }

    /// Coefficients of the univariate polynomial obtained by setting x = y:
    /// entry `i` counts positions with exactly `i` pieces. Empty for the
    /// zero polynomial.
    pub fn univariate_collapse(&self) -> Vec<BigUint> {
        let deg = match self.terms.keys().map(|&(b, r)| b + r).max() {
            Some(d) => d as usize,
            None => return Vec::new(),
        };
        let mut out = vec![BigUint::zero(); deg + 1];
        for (&(b, r), c) in &self.terms {
            out[(b + r) as usize] += c;
        }
        out
    }

    /// Restriction to terms with |blue − red| ≤ 1: the positions reachable
    /// under strictly alternating play.
    pub fn alternating_part(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(&(b, r), _)| b.abs_diff(r) <= 1)
            .map(|(&k, c)| (k, c.clone()))
            .collect();
        Self { terms }
    }

    /// Swaps the roles of blue and red.
    pub fn color_swap(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(&(b, r), c)| ((r, b), c.clone()))
            .collect();
        Self { terms }
    }

    /// Terms in canonical order: ascending total degree, then descending
    /// blue degree.
    pub fn terms(&self) -> Vec<(u32, u32, BigUint)> {
        let mut v: Vec<_> = self
            .terms
            .iter()
            .map(|(&(b, r), c)| (b, r, c.clone()))
            .collect();
        v.sort_by_key(|&(b, r, _)| (b + r, std::cmp::Reverse(b)));
        v
    }
}

/// JSON shape of one profile term; counts travel as decimal strings since
/// they outgrow every fixed-width integer.
#[derive(Serialize, Deserialize)]
struct TermRecord {
    blue: u32,
    red: u32,
    count: String,
}

impl Serialize for Profile {
    /// Serializes as the canonical term list:
    /// `[{"blue": 1, "red": 0, "count": "4"}, ...]`.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(
            self.terms()
                .into_iter()
                .map(|(blue, red, count)| TermRecord {
                    blue,
                    red,
                    count: count.to_string(),
                }),
        )
    }
}

impl<'de> Deserialize<'de> for Profile {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let records = Vec::<TermRecord>::deserialize(deserializer)?;
        let mut p = Profile::zero();
        for r in records {
            let count = BigUint::from_str(&r.count)
                .map_err(|_| D::Error::custom(format!("bad count `{}`", r.count)))?;
            p.add_term(r.blue, r.red, count);
        }
        Ok(p)
    }
}

impl std::ops::Add for &Profile {
    type Output = Profile;
    fn add(self, rhs: &Profile) -> Profile {
        Profile::add(self, rhs)
    }
}

impl std::ops::Mul for &Profile {
    type Output = Profile;
    fn mul(self, rhs: &Profile) -> Profile {
        Profile::mul(self, rhs)
    }
}

fn fmt_monomial(f: &mut fmt::Formatter<'_>, vars: &[(&str, u32)]) -> fmt::Result {
    for &(name, deg) in vars {
        match deg {
            0 => {}
            1 => write!(f, "{name}")?,
            d => write!(f, "{name}^{d}")?,
        }
    }
    Ok(())
}

impl fmt::Display for Profile {
    /// Canonical text form, e.g. `1 + 4x + 4y + 3x^2 + 6xy + 3y^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (b, r, c)) in self.terms().into_iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if !c.is_one() || (b == 0 && r == 0) {
                write!(f, "{c}")?;
            }
            fmt_monomial(f, &[("x", b), ("y", r)])?;
        }
        Ok(())
    }
}

/// Polynomial in the markers `e` (empty vertex), `x` (blue), `y` (red) with
/// signed big-integer coefficients. Keys are `(e, x, y)` exponent triples.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TriPoly {
    terms: BTreeMap<(u32, u32, u32), BigInt>,
}

impl TriPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::term(0, 0, 0, BigInt::from(c))
    }

    /// The empty-vertex marker `e`.
    pub fn e() -> Self {
        Self::term(1, 0, 0, BigInt::one())
    }

    /// The blue-piece marker `x`.
    pub fn x() -> Self {
        Self::term(0, 1, 0, BigInt::one())
    }

    /// The red-piece marker `y`.
    pub fn y() -> Self {
        Self::term(0, 0, 1, BigInt::one())
    }

    pub fn term(e: u32, x: u32, y: u32, coeff: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert((e, x, y), coeff);
        }
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&(0, 0, 0))
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    pub fn add_term(&mut self, key: (u32, u32, u32), coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&k, c) in &other.terms {
            out.add_term(k, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&k, c) in &other.terms {
            out.add_term(k, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let terms = self.terms.iter().map(|(&k, c)| (k, -c.clone())).collect();
        Self { terms }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&(e1, x1, y1), c1) in &self.terms {
            for (&(e2, x2, y2), c2) in &other.terms {
                out.add_term((e1 + e2, x1 + x2, y1 + y2), c1 * c2);
            }
        }
        out
    }

    /// Sums out the `e` marker (sets e = 1). Fails if any resulting count
    /// would be negative: profiles count positions.
    pub fn specialize_e(&self) -> Result<Profile, PolyError> {
        let mut merged: BTreeMap<(u32, u32), BigInt> = BTreeMap::new();
        for (&(_, x, y), c) in &self.terms {
            *merged.entry((x, y)).or_insert_with(BigInt::zero) += c;
        }
        let mut out = Profile::zero();
        for ((blue, red), c) in merged {
            if c.is_negative() {
                return Err(PolyError::NegativeCoefficient {
                    blue,
                    red,
                    value: c,
                });
            }
            if !c.is_zero() {
                out.add_term(blue, red, c.to_biguint().expect("checked nonnegative"));
            }
        }
        Ok(out)
    }

    /// Sets e = 1 but keeps the result as a signed polynomial in x and y.
    pub fn set_e_one(&self) -> Self {
        let mut out = Self::zero();
        for (&(_, x, y), c) in &self.terms {
            out.add_term((0, x, y), c.clone());
        }
        out
    }

    /// Exact evaluation at integer points (e, x, y).
    pub fn evaluate(&self, e: &BigInt, x: &BigInt, y: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for (&(a, b, r), c) in &self.terms {
            acc += c * e.pow(a) * x.pow(b) * y.pow(r);
        }
        acc
    }

    /// Divides every term by `other`, a single monomial, if exactly
    /// divisible. Used to strip the duplicated first letter when closing a
    /// path construction into a cycle.
    pub fn div_exact_monomial(&self, other: &Self) -> Option<Self> {
        if other.terms.len() != 1 {
            return None;
        }
        let (&(de, dx, dy), dc) = other.terms.iter().next().unwrap();
        let mut out = Self::zero();
        for (&(e, x, y), c) in &self.terms {
            if e < de || x < dx || y < dy {
                return None;
            }
            if !(c % dc).is_zero() {
                return None;
            }
            out.add_term((e - de, x - dx, y - dy), c / dc);
        }
        Some(out)
    }

    /// Terms in canonical order: ascending total degree, then descending e
    /// degree, then descending x degree.
    fn ordered_terms(&self) -> Vec<((u32, u32, u32), BigInt)> {
        let mut v: Vec<_> = self.terms.iter().map(|(&k, c)| (k, c.clone())).collect();
        v.sort_by_key(|&((e, x, y), _)| (e + x + y, std::cmp::Reverse(e), std::cmp::Reverse(x)));
        v
    }

    /// True when the polynomial is a single term.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// True when every coefficient is negative (and there is at least one).
    pub fn all_terms_negative(&self) -> bool {
        !self.terms.is_empty() && self.terms.values().all(Signed::is_negative)
    }
}

impl std::ops::Add for &TriPoly {
    type Output = TriPoly;
    fn add(self, rhs: &TriPoly) -> TriPoly {
        TriPoly::add(self, rhs)
    }
}

impl std::ops::Sub for &TriPoly {
    type Output = TriPoly;
    fn sub(self, rhs: &TriPoly) -> TriPoly {
        TriPoly::sub(self, rhs)
    }
}

impl std::ops::Mul for &TriPoly {
    type Output = TriPoly;
    fn mul(self, rhs: &TriPoly) -> TriPoly {
        TriPoly::mul(self, rhs)
    }
}

impl fmt::Display for TriPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, ((e, x, y), c)) in self.ordered_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.magnitude();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if !mag.is_one() || (e == 0 && x == 0 && y == 0) {
                write!(f, "{mag}")?;
            }
            fmt_monomial(f, &[("e", e), ("x", x), ("y", y)])?;
        }
        Ok(())
    }
}
