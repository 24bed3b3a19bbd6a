//! Rational generating functions for profiles of games played on paths and
//! cycles.
//!
//! Legal positions of these games, read as strings over the alphabet
//! {E, B, R} (empty, blue, red), form regular languages. Compiling a regular
//! expression with the weights E -> e*t, B -> x*t, R -> y*t (concatenation
//! -> product, alternation -> sum, Kleene star f -> 1/(1-f)) yields a
//! rational series in t whose t^n coefficient, after setting e = 1, is the
//! profile on n vertices. Coefficients are extracted exactly through the
//! linear recurrence induced by the denominator, never by long division.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::poly::{PolyError, Profile, TriPoly};
use crate::rules::CellState;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("cannot star an expression that accepts the empty string")]
    StarOverEpsilon,
    #[error("series coefficient at t^{order} is not a valid profile: {source}")]
    NegativeCoefficient {
        order: usize,
        #[source]
        source: PolyError,
    },
    #[error("numerator is not divisible by the duplicated atom weight")]
    IndivisibleClosure,
    #[error("invalid repeat bounds {{{min},{max}}}")]
    BadRepeatBounds { min: u32, max: u32 },
    #[error("regex syntax error at byte {at}: {what}")]
    Syntax { at: usize, what: String },
    #[error("unknown series family `{0}`")]
    UnknownFamily(String),
    #[error("series family `{0}` requires k >= 1")]
    BadFamilyParameter(String),
}

/// Regular expression over the cell alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Regex {
    Atom(CellState),
    Epsilon,
    Concat(Vec<Regex>),
    Alt(Vec<Regex>),
    Star(Box<Regex>),
    /// Between `min` and `max` copies of the inner expression.
    Repeat {
        inner: Box<Regex>,
        min: u32,
        max: u32,
    },
}

impl Regex {
    pub fn concat(parts: impl IntoIterator<Item = Regex>) -> Regex {
        Regex::Concat(parts.into_iter().collect())
    }

    pub fn alt(parts: impl IntoIterator<Item = Regex>) -> Regex {
        Regex::Alt(parts.into_iter().collect())
    }

    pub fn star(inner: Regex) -> Regex {
        Regex::Star(Box::new(inner))
    }

    pub fn repeat(inner: Regex, min: u32, max: u32) -> Regex {
        Regex::Repeat {
            inner: Box::new(inner),
            min,
            max,
        }
    }

    /// One or more copies: `r r*`.
    pub fn plus(inner: Regex) -> Regex {
        Regex::concat([inner.clone(), Regex::star(inner)])
    }

    /// Syntactic check used by generators and sanity tests; the compiler
    /// itself checks the semantic condition (a zero constant term).
    pub fn accepts_epsilon(&self) -> bool {
        match self {
            Regex::Atom(_) => false,
            Regex::Epsilon => true,
            Regex::Concat(parts) => parts.iter().all(Regex::accepts_epsilon),
            Regex::Alt(parts) => parts.iter().any(Regex::accepts_epsilon),
            Regex::Star(_) => true,
            Regex::Repeat { inner, min, .. } => *min == 0 || inner.accepts_epsilon(),
        }
    }

    /// Parses the small regex grammar: atoms `E`, `B`, `R`; alternation `|`;
    /// juxtaposition for concatenation; postfix `*` and `{min,max}`;
    /// parentheses. An empty alternation branch stands for the empty string,
    /// e.g. `(B|)` matches `B` or nothing.
    pub fn parse(input: &str) -> Result<Regex, SeriesError> {
        let mut p = Parser {
            bytes: input.as_bytes(),
            pos: 0,
        };
        let r = p.alternation()?;
        if p.pos != p.bytes.len() {
            return Err(p.err("unexpected trailing input"));
        }
        Ok(r)
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, what: &str) -> SeriesError {
        SeriesError::Syntax {
            at: self.pos,
            what: what.to_string(),
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ') | Some(b'\t')) {
            self.pos += 1;
        }
    }

    fn alternation(&mut self) -> Result<Regex, SeriesError> {
        let mut branches = vec![self.concatenation()?];
        loop {
            self.skip_ws();
            if self.peek() == Some(b'|') {
                self.pos += 1;
                branches.push(self.concatenation()?);
            } else {
                break;
            }
        }
        Ok(if branches.len() == 1 {
            branches.pop().unwrap()
        } else {
            Regex::Alt(branches)
        })
    }

    fn concatenation(&mut self) -> Result<Regex, SeriesError> {
        let mut parts = Vec::new();
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'E') | Some(b'B') | Some(b'R') | Some(b'(') => parts.push(self.postfixed()?),
                _ => break,
            }
        }
        Ok(match parts.len() {
            0 => Regex::Epsilon,
            1 => parts.pop().unwrap(),
            _ => Regex::Concat(parts),
        })
    }

    fn postfixed(&mut self) -> Result<Regex, SeriesError> {
        let mut r = self.atom()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    r = Regex::star(r);
                }
                Some(b'{') => {
                    self.pos += 1;
                    let min = self.number()?;
                    self.skip_ws();
                    let max = if self.peek() == Some(b',') {
                        self.pos += 1;
                        self.number()?
                    } else {
                        min
                    };
                    self.skip_ws();
                    if self.peek() != Some(b'}') {
                        return Err(self.err("expected `}`"));
                    }
                    self.pos += 1;
                    if min > max {
                        return Err(SeriesError::BadRepeatBounds { min, max });
                    }
                    r = Regex::repeat(r, min, max);
                }
                _ => break,
            }
        }
        Ok(r)
    }

    fn atom(&mut self) -> Result<Regex, SeriesError> {
        self.skip_ws();
        match self.peek() {
            Some(b'E') => {
                self.pos += 1;
                Ok(Regex::Atom(CellState::Empty))
            }
            Some(b'B') => {
                self.pos += 1;
                Ok(Regex::Atom(CellState::Blue))
            }
            Some(b'R') => {
                self.pos += 1;
                Ok(Regex::Atom(CellState::Red))
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.alternation()?;
                self.skip_ws();
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            _ => Err(self.err("expected atom E, B, R or `(`")),
        }
    }

    fn number(&mut self) -> Result<u32, SeriesError> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().map(|b| b.is_ascii_digit()).unwrap_or(false) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.err("number out of range"))
    }
}

/// Polynomial in t with [`TriPoly`] coefficients; index = power of t.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SeriesPoly {
    coeffs: Vec<TriPoly>,
}

impl SeriesPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(TriPoly::one())
    }

    pub fn constant(c: TriPoly) -> Self {
        Self { coeffs: vec![c] }.trimmed()
    }

    /// Builds from coefficients of ascending powers of t.
    pub fn from_coeffs(coeffs: Vec<TriPoly>) -> Self {
        Self { coeffs }.trimmed()
    }

    fn trimmed(mut self) -> Self {
        while self.coeffs.last().map(TriPoly::is_zero).unwrap_or(false) {
            self.coeffs.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, i: usize) -> TriPoly {
        self.coeffs.get(i).cloned().unwrap_or_else(TriPoly::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| self.coeff(i).add(&other.coeff(i)))
            .collect();
        Self { coeffs }.trimmed()
    }

    pub fn sub(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| self.coeff(i).sub(&other.coeff(i)))
            .collect();
        Self { coeffs }.trimmed()
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![TriPoly::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        Self { coeffs }.trimmed()
    }

    /// Sets e = 1 in every coefficient, keeping signs.
    pub fn set_e_one(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(TriPoly::set_e_one).collect(),
        }
        .trimmed()
    }

    /// Specializes the markers at integer values, leaving a polynomial in t.
    pub fn specialize(&self, e: &BigInt, x: &BigInt, y: &BigInt) -> Vec<BigInt> {
        self.coeffs.iter().map(|c| c.evaluate(e, x, y)).collect()
    }
}

impl fmt::Display for SeriesPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let printable = if c.is_monomial() {
                c.to_string()
            } else if c.all_terms_negative() {
                format!("-({})", c.neg())
            } else {
                format!("({c})")
            };
            if first {
                first = false;
                if i == 0 {
                    write!(f, "{printable}")?;
                    continue;
                }
                if let Some(body) = printable.strip_prefix('-') {
                    write!(f, "-")?;
                    write_term(f, body, i)?;
                } else {
                    write_term(f, &printable, i)?;
                }
                continue;
            }
            if i == 0 {
                write!(f, " + {printable}")?;
                continue;
            }
            if let Some(body) = printable.strip_prefix('-') {
                write!(f, " - ")?;
                write_term(f, body, i)?;
            } else {
                write!(f, " + ")?;
                write_term(f, &printable, i)?;
            }
        }
        Ok(())
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, coeff: &str, power: usize) -> fmt::Result {
    if coeff != "1" {
        write!(f, "{coeff} ")?;
    }
    match power {
        0 => Ok(()),
        1 => write!(f, "t"),
        p => write!(f, "t^{p}"),
    }
}

/// Ratio of two [`SeriesPoly`]s; the denominator's constant term is always
/// the polynomial 1, so the t^n coefficients of the series satisfy the
/// linear recurrence read off the denominator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalSeries {
    num: SeriesPoly,
    den: SeriesPoly,
}

impl RationalSeries {
    /// A polynomial viewed as a series (denominator 1).
    pub fn from_poly(num: SeriesPoly) -> Self {
        Self {
            num,
            den: SeriesPoly::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_poly(SeriesPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(SeriesPoly::one())
    }

    /// The single-letter series: weight of the atom times t.
    pub fn atom(state: CellState) -> Self {
        Self::from_poly(SeriesPoly::from_coeffs(vec![
            TriPoly::zero(),
            atom_weight(state),
        ]))
    }

    pub fn numerator(&self) -> &SeriesPoly {
        &self.num
    }

    pub fn denominator(&self) -> &SeriesPoly {
        &self.den
    }

    fn normalized(self) -> Self {
        debug_assert!(
            self.den.coeff(0).is_one(),
            "denominator constant term must be 1, got {}",
            self.den.coeff(0)
        );
        self
    }

    pub fn add(&self, other: &Self) -> Self {
        // Equal denominators are common (color-symmetric alternatives);
        // adding numerators directly keeps degrees from doubling.
        if self.den == other.den {
            return Self {
                num: self.num.add(&other.num),
                den: self.den.clone(),
            }
            .normalized();
        }
        Self {
            num: self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            den: self.den.mul(&other.den),
        }
        .normalized()
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self {
            num: self.num.mul(&other.num),
            den: self.den.mul(&other.den),
        }
        .normalized()
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..exp {
            out = out.mul(self);
        }
        out
    }

    /// Kleene star: `1 / (1 - f)`. Requires the series constant term of `f`
    /// to be zero, otherwise the inverse does not exist as a power series.
    pub fn star(&self) -> Result<Self, SeriesError> {
        if !self.num.coeff(0).is_zero() {
            return Err(SeriesError::StarOverEpsilon);
        }
        // 1/(1 - p/q) = q/(q - p); the new constant term is q0 - p0 = 1.
        Ok(Self {
            num: self.den.clone(),
            den: self.den.sub(&self.num),
        }
        .normalized())
    }

    /// Sets e = 1 in numerator and denominator.
    pub fn set_e_one(&self) -> Self {
        Self {
            num: self.num.set_e_one(),
            den: self.den.set_e_one(),
        }
        .normalized()
    }

    /// Divides by `weight(state) * t`, used when a path construction counts
    /// a cycle's fixed vertex twice. Exact or an error.
    pub fn divide_by_atom(&self, state: CellState) -> Result<Self, SeriesError> {
        if !self.num.coeff(0).is_zero() {
            return Err(SeriesError::IndivisibleClosure);
        }
        let weight = atom_weight(state);
        let mut coeffs = Vec::with_capacity(self.num.degree());
        for i in 1..=self.num.degree() {
            coeffs.push(
                self.num
                    .coeff(i)
                    .div_exact_monomial(&weight)
                    .ok_or(SeriesError::IndivisibleClosure)?,
            );
        }
        Ok(Self {
            num: SeriesPoly::from_coeffs(coeffs),
            den: self.den.clone(),
        }
        .normalized())
    }

    /// Raw t^0..t^order coefficients via the denominator-induced linear
    /// recurrence: with den = 1 + d_1 t + ... + d_k t^k,
    /// c_i = num_i - sum_j d_j c_{i-j}.
    pub fn expand_raw(&self, order: usize) -> Vec<TriPoly> {
        let k = self.den.degree();
        let mut out: Vec<TriPoly> = Vec::with_capacity(order + 1);
        for i in 0..=order {
            let mut c = self.num.coeff(i);
            for j in 1..=k.min(i) {
                c = c.sub(&self.den.coeff(j).mul(&out[i - j]));
            }
            out.push(c);
        }
        out
    }

    /// Profiles of t^0..t^order: raw coefficients with the empty-vertex
    /// marker summed out. Errors if any count would be negative, which
    /// signals a mis-transcribed series.
    pub fn expand(&self, order: usize) -> Result<Vec<Profile>, SeriesError> {
        self.expand_raw(order)
            .into_iter()
            .enumerate()
            .map(|(i, c)| {
                c.specialize_e()
                    .map_err(|source| SeriesError::NegativeCoefficient { order: i, source })
            })
            .collect()
    }

    /// Position counts of t^0..t^order: the expansion at e = x = y = 1,
    /// computed by an integer recurrence.
    pub fn expand_counts(&self, order: usize) -> Result<Vec<BigUint>, SeriesError> {
        let one = BigInt::one();
        let num = self.num.specialize(&one, &one, &one);
        let den = self.den.specialize(&one, &one, &one);
        let coeff = |v: &[BigInt], i: usize| v.get(i).cloned().unwrap_or_else(BigInt::zero);
        let mut acc: Vec<BigInt> = Vec::with_capacity(order + 1);
        for i in 0..=order {
            let mut c = coeff(&num, i);
            for j in 1..=(den.len().saturating_sub(1)).min(i) {
                c -= coeff(&den, j) * &acc[i - j];
            }
            acc.push(c);
        }
        acc.into_iter()
            .enumerate()
            .map(|(i, c)| {
                if c.is_negative() {
                    Err(SeriesError::NegativeCoefficient {
                        order: i,
                        source: PolyError::NegativeCoefficient {
                            blue: 0,
                            red: 0,
                            value: c,
                        },
                    })
                } else {
                    Ok(c.to_biguint().expect("checked nonnegative"))
                }
            })
            .collect()
    }

    /// Whether the two representations denote the same series, by
    /// cross-multiplying: p1 q2 = p2 q1.
    pub fn equivalent(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

fn atom_weight(state: CellState) -> TriPoly {
    match state {
        CellState::Empty => TriPoly::e(),
        CellState::Blue => TriPoly::x(),
        CellState::Red => TriPoly::y(),
    }
}

/// Compiles a regular expression to its weighted generating function. For an
/// unambiguous regex, the t^n coefficient (at e = 1) is the profile of the
/// length-n strings it matches.
pub fn regex_to_series(r: &Regex) -> Result<RationalSeries, SeriesError> {
    match r {
        Regex::Atom(state) => Ok(RationalSeries::atom(*state)),
        Regex::Epsilon => Ok(RationalSeries::one()),
        Regex::Concat(parts) => {
            let mut acc = RationalSeries::one();
            for part in parts {
                acc = acc.mul(&regex_to_series(part)?);
            }
            Ok(acc)
        }
        Regex::Alt(parts) => {
            let mut acc = RationalSeries::zero();
            for part in parts {
                acc = acc.add(&regex_to_series(part)?);
            }
            Ok(acc)
        }
        Regex::Star(inner) => regex_to_series(inner)?.star(),
        Regex::Repeat { inner, min, max } => {
            if min > max {
                return Err(SeriesError::BadRepeatBounds {
                    min: *min,
                    max: *max,
                });
            }
            let base = regex_to_series(inner)?;
            // base^min * (1 + base + ... + base^(max-min))
            let mut tail = RationalSeries::zero();
            for i in 0..=(max - min) {
                tail = tail.add(&base.pow(i));
            }
            Ok(base.pow(*min).mul(&tail))
        }
    }
}

/// Builtin generating-function families, as accepted by the command line:
/// `col_path`, `snort_path`, `cis_path`, `cis2_path` (alias `cis2`),
/// `cis_cycle`, `encis:k`, `ensnort:k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesFamily {
    ColPath,
    SnortPath,
    CisPath,
    Cis2Path,
    CisCycle,
    EnCis(u32),
    EnSnort(u32),
}

impl FromStr for SeriesFamily {
    type Err = SeriesError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (name, k) = match s.split_once(':') {
            None => (s, None),
            Some((name, k)) => {
                let k: u32 = k
                    .parse()
                    .map_err(|_| SeriesError::UnknownFamily(s.to_string()))?;
                (name, Some(k))
            }
        };
        let require_k = || match k {
            Some(k) if k >= 1 => Ok(k),
            _ => Err(SeriesError::BadFamilyParameter(name.to_string())),
        };
        match (name.to_ascii_lowercase().as_str(), k) {
            ("col_path", None) => Ok(SeriesFamily::ColPath),
            ("snort_path", None) => Ok(SeriesFamily::SnortPath),
            ("cis_path", None) => Ok(SeriesFamily::CisPath),
            ("cis2_path" | "cis2", None) => Ok(SeriesFamily::Cis2Path),
            ("cis_cycle", None) => Ok(SeriesFamily::CisCycle),
            ("encis", _) => Ok(SeriesFamily::EnCis(require_k()?)),
            ("ensnort", _) => Ok(SeriesFamily::EnSnort(require_k()?)),
            _ => Err(SeriesError::UnknownFamily(s.to_string())),
        }
    }
}

impl fmt::Display for SeriesFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesFamily::ColPath => write!(f, "col_path"),
            SeriesFamily::SnortPath => write!(f, "snort_path"),
            SeriesFamily::CisPath => write!(f, "cis_path"),
            SeriesFamily::Cis2Path => write!(f, "cis2_path"),
            SeriesFamily::CisCycle => write!(f, "cis_cycle"),
            SeriesFamily::EnCis(k) => write!(f, "encis:{k}"),
            SeriesFamily::EnSnort(k) => write!(f, "ensnort:{k}"),
        }
    }
}

/// The builtin family covering this game on this board's family, if any.
pub fn board_series_family(
    game: crate::rules::GameId,
    board: &crate::board::Board,
) -> Option<SeriesFamily> {
    use crate::board::BoardFamily;
    use crate::rules::GameId;
    match (game, board.family()?) {
        (GameId::Col, BoardFamily::Path) => Some(SeriesFamily::ColPath),
        (GameId::Snort, BoardFamily::Path) => Some(SeriesFamily::SnortPath),
        (GameId::Cis, BoardFamily::Path) => Some(SeriesFamily::CisPath),
        (GameId::Cis2, BoardFamily::Path) => Some(SeriesFamily::Cis2Path),
        (GameId::EnCis(k), BoardFamily::Path) => Some(SeriesFamily::EnCis(k)),
        (GameId::EnSnort(k), BoardFamily::Path) => Some(SeriesFamily::EnSnort(k)),
        (GameId::Cis, BoardFamily::Cycle) => Some(SeriesFamily::CisCycle),
        _ => None,
    }
}

/// The regex for EnCis(k) on paths: pieces must sit more than k apart, so a
/// position is leading empties, then piece-plus-at-least-k-empties blocks,
/// then optionally a final piece with at most k-1 trailing empties.
pub fn encis_regex(k: u32) -> Regex {
    use CellState::{Blue, Empty, Red};
    let piece = Regex::alt([Regex::Atom(Blue), Regex::Atom(Red)]);
    let gap = Regex::concat([
        Regex::repeat(Regex::Atom(Empty), k, k),
        Regex::star(Regex::Atom(Empty)),
    ]);
    let tail_piece =
        |s| Regex::concat([Regex::Atom(s), Regex::repeat(Regex::Atom(Empty), 0, k - 1)]);
    Regex::concat([
        Regex::star(Regex::Atom(Empty)),
        Regex::star(Regex::concat([piece, gap])),
        Regex::alt([tail_piece(Blue), tail_piece(Red), Regex::Epsilon]),
    ])
}

/// The regex for EnSnort(k) on paths: only opposite colors repel, so legal
/// positions are monochromatic clusters (consecutive pieces at distance at
/// most k, i.e. gaps of at most k-1 empties) separated by at least k
/// empties, with at most k-1 empties trailing the final cluster.
pub fn ensnort_regex(k: u32) -> Regex {
    use CellState::{Blue, Empty, Red};
    let cluster = |s: CellState| {
        Regex::concat([
            Regex::Atom(s),
            Regex::star(Regex::concat([
                Regex::repeat(Regex::Atom(Empty), 0, k - 1),
                Regex::Atom(s),
            ])),
        ])
    };
    let separator = Regex::concat([
        Regex::repeat(Regex::Atom(Empty), k, k),
        Regex::star(Regex::Atom(Empty)),
    ]);
    let tail =
        |s: CellState| Regex::concat([cluster(s), Regex::repeat(Regex::Atom(Empty), 0, k - 1)]);
    Regex::concat([
        Regex::star(Regex::Atom(Empty)),
        Regex::star(Regex::concat([
            Regex::alt([cluster(Blue), cluster(Red)]),
            separator,
        ])),
        Regex::alt([tail(Blue), tail(Red), Regex::Epsilon]),
    ])
}

/// t^a with coefficient `c`, as a series polynomial.
fn t_term(c: TriPoly, a: usize) -> SeriesPoly {
    let mut coeffs = vec![TriPoly::zero(); a + 1];
    coeffs[a] = c;
    SeriesPoly::from_coeffs(coeffs)
}

fn cis_cycle_gf() -> RationalSeries {
    use CellState::{Blue, Empty, Red};
    // A position on C_n is read as a string on P_{n+1} whose first and last
    // letters coincide; each case's series is divided by the weight of the
    // duplicated letter.
    let piece_block = |s| Regex::concat([Regex::Atom(s), Regex::plus(Regex::Atom(Empty))]);
    let middle = Regex::star(Regex::alt([piece_block(Blue), piece_block(Red)]));
    let case_empty = Regex::concat([Regex::plus(Regex::Atom(Empty)), middle.clone()]);
    let case_colored = |s| {
        Regex::concat([
            Regex::Atom(s),
            Regex::plus(Regex::Atom(Empty)),
            middle.clone(),
            Regex::Atom(s),
        ])
    };
    let compile = |r: &Regex, s| {
        regex_to_series(r)
            .expect("cycle case regexes are star-proper")
            .divide_by_atom(s)
            .expect("cycle case numerators are divisible")
    };
    let open = compile(&case_empty, Empty);
    let blue = compile(&case_colored(Blue), Blue);
    let red = compile(&case_colored(Red), Red);
    open.add(&blue).add(&red)
}

/// The named generating function for a family. Path families for Col, Cis,
/// and Cis2 are transcribed closed forms; Snort and the parametrized
/// families are compiled from their regexes; the cycle family is built by
/// the divide-out-the-fixed-vertex construction.
pub fn builtin_gf(family: SeriesFamily) -> RationalSeries {
    let x = TriPoly::x;
    let y = TriPoly::y;
    let one = TriPoly::one;
    match family {
        // (1+xt)(1+yt) / (1 - (xy t^2 + t (1+xt)(1+yt)))
        SeriesFamily::ColPath => {
            let num = SeriesPoly::from_coeffs(vec![one(), x()])
                .mul(&SeriesPoly::from_coeffs(vec![one(), y()]));
            let shifted_num = t_term(one(), 1).mul(&num);
            let den = SeriesPoly::one()
                .sub(&t_term(x().mul(&y()), 2))
                .sub(&shifted_num);
            RationalSeries { num, den }.normalized()
        }
        SeriesFamily::SnortPath => {
            regex_to_series(&ensnort_regex(1)).expect("snort regex is star-proper")
        }
        // (1 + xt + yt) / (1 - t - x t^2 - y t^2)
        SeriesFamily::CisPath => RationalSeries {
            num: SeriesPoly::from_coeffs(vec![one(), x().add(&y())]),
            den: SeriesPoly::from_coeffs(vec![one(), one().neg(), x().add(&y()).neg()]),
        }
        .normalized(),
        // With u = xt + yt + (xt+yt)^2:
        // (1 + u + e t u) / (1 - e t - e^2 t^2 u)
        SeriesFamily::Cis2Path => {
            let e = TriPoly::e;
            let u = SeriesPoly::from_coeffs(vec![
                TriPoly::zero(),
                x().add(&y()),
                x().add(&y()).mul(&x().add(&y())),
            ]);
            let et = t_term(e(), 1);
            let num = SeriesPoly::one().add(&u).add(&et.mul(&u));
            let den = SeriesPoly::one()
                .sub(&et)
                .sub(&t_term(e().mul(&e()), 2).mul(&u));
            RationalSeries { num, den }.normalized()
        }
        SeriesFamily::CisCycle => cis_cycle_gf(),
        SeriesFamily::EnCis(k) => {
            assert!(k >= 1, "EnCis parameter must be >= 1");
            regex_to_series(&encis_regex(k)).expect("encis regex is star-proper")
        }
        SeriesFamily::EnSnort(k) => {
            assert!(k >= 1, "EnSnort parameter must be >= 1");
            regex_to_series(&ensnort_regex(k)).expect("ensnort regex is star-proper")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::board::Board;
    use crate::enumerate::brute_force_profile;
    use crate::formulas;
    use crate::rules::{GameId, GameRules};

    fn brute(board: &Board, id: GameId) -> Profile {
        brute_force_profile(board, &GameRules::named(id), 24).unwrap()
    }

    #[test]
    fn star_of_empty_atom_is_geometric() {
        let s = regex_to_series(&Regex::star(Regex::Atom(CellState::Empty))).unwrap();
        // 1/(1-et): t^n coefficient is e^n.
        let raw = s.expand_raw(4);
        for (i, c) in raw.iter().enumerate() {
            assert_eq!(*c, TriPoly::term(i as u32, 0, 0, 1.into()));
        }
        assert_eq!(s.to_string(), "(1) / (1 - e t)");
    }

    #[test]
    fn star_requires_zero_constant_term() {
        assert!(matches!(
            regex_to_series(&Regex::star(Regex::Epsilon)),
            Err(SeriesError::StarOverEpsilon)
        ));
        let eps_in_alt = Regex::alt([Regex::Atom(CellState::Blue), Regex::Epsilon]);
        assert!(regex_to_series(&Regex::star(eps_in_alt)).is_err());
    }

    #[test]
    fn rs_primitive_examples() {
        // (1/(1-et)) * et = et/(1-et)
        let e_star = regex_to_series(&Regex::star(Regex::Atom(CellState::Empty))).unwrap();
        let et = RationalSeries::atom(CellState::Empty);
        let prod = e_star.mul(&et);
        assert_eq!(prod.to_string(), "(e t) / (1 - e t)");

        // star(xt + yt) = 1/(1-xt-yt)
        let pieces =
            RationalSeries::atom(CellState::Blue).add(&RationalSeries::atom(CellState::Red));
        let starred = pieces.star().unwrap();
        assert_eq!(starred.to_string(), "(1) / (1 - (x + y) t)");

        // f + 0 = f
        assert!(prod.add(&RationalSeries::zero()).equivalent(&prod));
    }

    #[test]
    fn cis_path_regex_matches_transcribed_gf() {
        // E*[(B|R)EE*]*(B|R|eps) compiled, with e = 1, equals
        // (1+xt+yt)/(1-t-xt^2-yt^2).
        let compiled = regex_to_series(&encis_regex(1)).unwrap();
        let transcribed = builtin_gf(SeriesFamily::CisPath);
        assert!(compiled.set_e_one().equivalent(&transcribed));
    }

    #[test]
    fn expand_reproduces_worked_examples() {
        let cis = builtin_gf(SeriesFamily::CisPath);
        let profiles = cis.expand(4).unwrap();
        assert_eq!(profiles[4].to_string(), "1 + 4x + 4y + 3x^2 + 6xy + 3y^2");

        let col = builtin_gf(SeriesFamily::ColPath);
        assert_eq!(col.expand(2).unwrap()[2].to_string(), "1 + 2x + 2y + 2xy");

        // order 0 is the constant term.
        assert_eq!(col.expand(0).unwrap()[0], Profile::one());
    }

    #[test]
    fn cycle_gf_specializes_to_printed_counts() {
        // At e = x = y = 1 the cycle series equals (1 + 2t^2)/(1 - t - 2t^2).
        let cycle = builtin_gf(SeriesFamily::CisCycle);
        let one = BigInt::one();
        let (num, den) = (
            cycle.numerator().specialize(&one, &one, &one),
            cycle.denominator().specialize(&one, &one, &one),
        );
        let target_num = [1, 0, 2].map(BigInt::from);
        let target_den = [1, -1, -2].map(BigInt::from);
        // Cross-multiply the integer polynomials.
        let mul = |a: &[BigInt], b: &[BigInt]| {
            let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
            for (i, ai) in a.iter().enumerate() {
                for (j, bj) in b.iter().enumerate() {
                    out[i + j] += ai * bj;
                }
            }
            while out.last().map(|c| c.is_zero()).unwrap_or(false) {
                out.pop();
            }
            out
        };
        assert_eq!(mul(&num, &target_den), mul(&target_num, &den));
    }

    #[test]
    fn cis2_counts_match_printed_form() {
        // At x = y = e = 1: (1 + 2t + 6t^2 + 4t^3)/(1 - t - 2t^3 - 4t^4).
        let gf = builtin_gf(SeriesFamily::Cis2Path);
        let counts = gf.expand_counts(8).unwrap();
        let direct = RationalSeries {
            num: SeriesPoly::from_coeffs([1, 2, 6, 4].map(TriPoly::constant).to_vec()),
            den: SeriesPoly::from_coeffs([1, -1, 0, -2, -4].map(TriPoly::constant).to_vec()),
        };
        assert_eq!(counts, direct.expand_counts(8).unwrap());
    }

    #[test]
    fn encis_one_is_cis() {
        let a = builtin_gf(SeriesFamily::EnCis(1)).expand(15).unwrap();
        let b = builtin_gf(SeriesFamily::CisPath).expand(15).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn ensnort_one_is_snort() {
        let a = builtin_gf(SeriesFamily::EnSnort(1)).expand(12).unwrap();
        let b = builtin_gf(SeriesFamily::SnortPath).expand(12).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn families_match_brute_force() {
        let cases: Vec<(SeriesFamily, GameId)> = vec![
            (SeriesFamily::ColPath, GameId::Col),
            (SeriesFamily::SnortPath, GameId::Snort),
            (SeriesFamily::CisPath, GameId::Cis),
            (SeriesFamily::Cis2Path, GameId::Cis2),
            (SeriesFamily::EnCis(2), GameId::EnCis(2)),
            (SeriesFamily::EnCis(3), GameId::EnCis(3)),
            (SeriesFamily::EnSnort(2), GameId::EnSnort(2)),
            (SeriesFamily::EnSnort(3), GameId::EnSnort(3)),
        ];
        for (family, id) in cases {
            let profiles = builtin_gf(family).expand(10).unwrap();
            for (n, expected) in profiles.iter().enumerate() {
                assert_eq!(
                    expected,
                    &brute(&Board::path(n), id),
                    "{family} at order {n}"
                );
            }
        }
        let cycle_profiles = builtin_gf(SeriesFamily::CisCycle).expand(10).unwrap();
        for n in 3..=10 {
            assert_eq!(
                cycle_profiles[n],
                brute(&Board::cycle(n).unwrap(), GameId::Cis),
                "cis_cycle at order {n}"
            );
        }
    }

    #[test]
    fn ensnort2_table() {
        let profiles = builtin_gf(SeriesFamily::EnSnort(2)).expand(3).unwrap();
        assert_eq!(profiles[0], Profile::one());
        assert_eq!(profiles[1].to_string(), "1 + x + y");
        assert_eq!(profiles[2].to_string(), "1 + 2x + 2y + x^2 + y^2");
        assert_eq!(
            profiles[3].to_string(),
            "1 + 3x + 3y + 3x^2 + 3y^2 + x^3 + y^3"
        );
        let collapsed = profiles[3].univariate_collapse();
        assert_eq!(collapsed, [1u32, 6, 6, 2].map(BigUint::from).to_vec());
    }

    #[test]
    fn encis_gf_matches_printed_closed_form() {
        // (1 - t + xt + yt - x t^{k+1} - y t^{k+1})
        //   / ((1-t)(1 - t - x t^{k+1} - y t^{k+1}))
        for k in 1..=3u32 {
            let compiled = builtin_gf(SeriesFamily::EnCis(k)).set_e_one();
            let kk = k as usize + 1;
            let x_plus_y = TriPoly::x().add(&TriPoly::y());
            let mut num = vec![TriPoly::zero(); kk + 1];
            num[0] = TriPoly::one();
            num[1] = x_plus_y.sub(&TriPoly::one());
            num[kk] = num[kk].sub(&x_plus_y);
            let one_minus_t = SeriesPoly::from_coeffs(vec![TriPoly::one(), TriPoly::one().neg()]);
            let mut den_right = vec![TriPoly::zero(); kk + 1];
            den_right[0] = TriPoly::one();
            den_right[1] = TriPoly::one().neg();
            den_right[kk] = x_plus_y.neg();
            let printed = RationalSeries {
                num: SeriesPoly::from_coeffs(num),
                den: one_minus_t.mul(&SeriesPoly::from_coeffs(den_right)),
            };
            assert!(compiled.equivalent(&printed), "EnCis({k})");
        }
    }

    #[test]
    fn cycle_counts_match_closed_form() {
        let counts = builtin_gf(SeriesFamily::CisCycle)
            .expand_counts(20)
            .unwrap();
        for n in 3..=20 {
            assert_eq!(counts[n], formulas::cis_cycle_count(n).unwrap());
        }
    }

    #[test]
    fn parser_round_trips_shapes() {
        let r = Regex::parse("E*((B|R)EE*)*(B|R|)").unwrap();
        let s = regex_to_series(&r).unwrap();
        let direct = regex_to_series(&encis_regex(1)).unwrap();
        assert_eq!(s.expand(10).unwrap(), direct.expand(10).unwrap());

        let bounded = Regex::parse("B E{0,2}").unwrap();
        assert_eq!(
            bounded,
            Regex::concat([
                Regex::Atom(CellState::Blue),
                Regex::repeat(Regex::Atom(CellState::Empty), 0, 2)
            ])
        );
        assert_eq!(
            Regex::parse("E{3}").unwrap(),
            Regex::repeat(Regex::Atom(CellState::Empty), 3, 3)
        );

        assert!(Regex::parse("B(").is_err());
        assert!(Regex::parse("Q").is_err());
        assert!(Regex::parse("B{2,1}").is_err());
        assert!(Regex::parse("B)").is_err());
    }

    #[test]
    fn concat_expansion_is_convolution() {
        // Homomorphism check on a pair of small regexes.
        let a = Regex::parse("E*(B|R)").unwrap();
        let b = Regex::parse("(BE|RE)*").unwrap();
        let sa = regex_to_series(&a).unwrap().expand(8).unwrap();
        let sb = regex_to_series(&b).unwrap().expand(8).unwrap();
        let sab = regex_to_series(&Regex::concat([a, b]))
            .unwrap()
            .expand(8)
            .unwrap();
        for n in 0..=8 {
            let mut conv = Profile::zero();
            for i in 0..=n {
                conv = conv.add(&sa[i].mul(&sb[n - i]));
            }
            assert_eq!(conv, sab[n], "order {n}");
        }
    }

    #[test]
    fn family_parsing() {
        assert_eq!(
            "cis_path".parse::<SeriesFamily>().unwrap(),
            SeriesFamily::CisPath
        );
        assert_eq!(
            "cis2".parse::<SeriesFamily>().unwrap(),
            SeriesFamily::Cis2Path
        );
        assert_eq!(
            "encis:2".parse::<SeriesFamily>().unwrap(),
            SeriesFamily::EnCis(2)
        );
        assert!("encis:0".parse::<SeriesFamily>().is_err());
        assert!("warp_path".parse::<SeriesFamily>().is_err());
    }
}
