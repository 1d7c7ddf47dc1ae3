//! Colors, variables and monomials with the lexicographic-from-the-right order.
//!
//! A monomial is a finite multiset of variables x_gamma(n). Variables are kept
//! in a canonical run-length form sorted ascending, so the greatest variable is
//! the rightmost. The order compares variables from the greatest end; when one
//! monomial runs out while agreeing so far, the shorter one is smaller.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize};

/// The six colors, i.e. the roots gamma with `<omega, gamma> = 1`, listed
/// ascending so that the derived order is `2 > 3 > 4 > 4_ > 3_ > 2_`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Color {
    C2Bar,
    C3Bar,
    C4Bar,
    C4,
    C3,
    C2,
}

impl Color {
    /// All colors, ascending.
    pub const ALL: [Color; 6] = [
        Color::C2Bar,
        Color::C3Bar,
        Color::C4Bar,
        Color::C4,
        Color::C3,
        Color::C2,
    ];

    /// Position in the color order, 1..=6; `C2` is the greatest (rank 6).
    pub fn rank(self) -> u8 {
        self as u8 + 1
    }

    pub(crate) fn index(self) -> usize {
        self as usize
    }

    /// The underline involution: 2 <-> 2_, 3 <-> 3_, 4 <-> 4_.
    pub fn opposite(self) -> Color {
        match self {
            Color::C2 => Color::C2Bar,
            Color::C3 => Color::C3Bar,
            Color::C4 => Color::C4Bar,
            Color::C4Bar => Color::C4,
            Color::C3Bar => Color::C3,
            Color::C2Bar => Color::C2,
        }
    }

    /// Grammar token; underlined colors carry a trailing underscore.
    pub fn token(self) -> &'static str {
        match self {
            Color::C2 => "2",
            Color::C3 => "3",
            Color::C4 => "4",
            Color::C4Bar => "4_",
            Color::C3Bar => "3_",
            Color::C2Bar => "2_",
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl Serialize for Color {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.token())
    }
}

impl<'de> Deserialize<'de> for Color {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let tok = String::deserialize(d)?;
        Color::ALL
            .into_iter()
            .find(|c| c.token() == tok)
            .ok_or_else(|| serde::de::Error::custom(format!("unknown color token `{tok}`")))
    }
}

/// A single factor x_color(degree); negative degrees for ordinary factors,
/// degree 0 for ghost factors, positive degrees for shifted monomials.
///
/// The derived order is degree-first, color second: x_alpha(i) < x_beta(j)
/// iff i < j, or i = j and alpha < beta.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Variable {
    pub degree: i64,
    pub color: Color,
}

impl Variable {
    pub fn new(color: Color, degree: i64) -> Self {
        Variable { degree, color }
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.color, self.degree)
    }
}

/// Per-color counts, used for one degree slab of a monomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Hash)]
pub struct ColorCounts([u32; 6]);

impl ColorCounts {
    pub fn new() -> Self {
        ColorCounts([0; 6])
    }

    pub fn get(&self, c: Color) -> u32 {
        self.0[c.index()]
    }

    pub fn set(&mut self, c: Color, n: u32) {
        self.0[c.index()] = n;
    }

    pub fn add(&mut self, c: Color, n: u32) {
        self.0[c.index()] += n;
    }

    pub fn total(&self) -> u64 {
        self.0.iter().map(|&n| n as u64).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&n| n == 0)
    }

    /// (color, count) pairs with nonzero count, ascending by color.
    pub fn nonzero(&self) -> impl Iterator<Item = (Color, u32)> + '_ {
        Color::ALL
            .into_iter()
            .filter(|&c| self.get(c) > 0)
            .map(|c| (c, self.get(c)))
    }
}

impl FromIterator<(Color, u32)> for ColorCounts {
    fn from_iter<I: IntoIterator<Item = (Color, u32)>>(iter: I) -> Self {
        let mut counts = ColorCounts::new();
        for (c, n) in iter {
            counts.add(c, n);
        }
        counts
    }
}

impl Serialize for ColorCounts {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        // Descending color order, zeros skipped.
        let entries: Vec<(Color, u32)> = Color::ALL
            .into_iter()
            .rev()
            .filter(|c| self.get(*c) > 0)
            .map(|c| (c, self.get(c)))
            .collect();
        let mut map = s.serialize_map(Some(entries.len()))?;
        for (c, n) in entries {
            map.serialize_entry(c.token(), &n)?;
        }
        map.end()
    }
}

/// The color counts of one window j: `a` counts factors of degree -j,
/// `b` counts factors of degree -j-1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FrequencyProfile {
    pub j: i64,
    pub a: ColorCounts,
    pub b: ColorCounts,
}

impl FrequencyProfile {
    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

/// A multiset of variables in canonical run-length form.
///
/// Runs are sorted ascending by variable, so the greatest variable is the
/// last run; multiplication is multiset union.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    runs: Vec<(Variable, u32)>,
}

impl Monomial {
    /// The empty monomial, the multiplicative identity.
    pub fn one() -> Self {
        Monomial { runs: Vec::new() }
    }

    pub fn from_variables<I: IntoIterator<Item = Variable>>(vars: I) -> Self {
        let mut v: Vec<Variable> = vars.into_iter().collect();
        v.sort();
        let mut runs: Vec<(Variable, u32)> = Vec::new();
        for var in v {
            match runs.last_mut() {
                Some((last, mult)) if *last == var => *mult += 1,
                _ => runs.push((var, 1)),
            }
        }
        Monomial { runs }
    }

    /// Single factor x_color(degree).
    pub fn factor(color: Color, degree: i64) -> Self {
        Monomial {
            runs: vec![(Variable::new(color, degree), 1)],
        }
    }

    /// Factors at degree -j-1 (`b` counts) and degree -j (`a` counts).
    pub fn from_window_counts(j: i64, b: &ColorCounts, a: &ColorCounts) -> Self {
        let mut runs = Vec::new();
        for (c, n) in b.nonzero() {
            runs.push((Variable::new(c, -j - 1), n));
        }
        for (c, n) in a.nonzero() {
            runs.push((Variable::new(c, -j), n));
        }
        runs.sort();
        Monomial { runs }
    }

    /// Canonical runs, ascending; multiplicities are positive.
    pub fn runs(&self) -> &[(Variable, u32)] {
        &self.runs
    }

    /// Factors expanded with multiplicity, ascending.
    pub fn variables(&self) -> impl Iterator<Item = Variable> + '_ {
        self.runs
            .iter()
            .flat_map(|&(v, m)| std::iter::repeat_n(v, m as usize))
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    /// Number of factors counted with multiplicity.
    pub fn len(&self) -> u64 {
        self.runs.iter().map(|&(_, m)| m as u64).sum()
    }

    /// Total degree: sum of n over factors x(-n), i.e. minus the sum of
    /// variable degrees. Nonnegative for ordinary monomials.
    pub fn total_degree(&self) -> i64 {
        -self
            .runs
            .iter()
            .map(|&(v, m)| v.degree * m as i64)
            .sum::<i64>()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.runs.first().map(|&(v, _)| v.degree)
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.runs.last().map(|&(v, _)| v.degree)
    }

    /// Multiset union, re-canonicalized.
    pub fn multiply(&self, other: &Monomial) -> Monomial {
        let mut runs = Vec::with_capacity(self.runs.len() + other.runs.len());
        let (mut i, mut j) = (0, 0);
        while i < self.runs.len() && j < other.runs.len() {
            let (va, ma) = self.runs[i];
            let (vb, mb) = other.runs[j];
            match va.cmp(&vb) {
                Ordering::Less => {
                    runs.push((va, ma));
                    i += 1;
                }
                Ordering::Greater => {
                    runs.push((vb, mb));
                    j += 1;
                }
                Ordering::Equal => {
                    runs.push((va, ma + mb));
                    i += 1;
                    j += 1;
                }
            }
        }
        runs.extend_from_slice(&self.runs[i..]);
        runs.extend_from_slice(&other.runs[j..]);
        Monomial { runs }
    }

    /// n-th multiset power.
    pub fn pow(&self, n: u32) -> Monomial {
        if n == 0 {
            return Monomial::one();
        }
        Monomial {
            runs: self.runs.iter().map(|&(v, m)| (v, m * n)).collect(),
        }
    }

    /// Every variable degree increased by t; length preserved.
    pub fn shift(&self, t: i64) -> Monomial {
        Monomial {
            runs: self
                .runs
                .iter()
                .map(|&(v, m)| (Variable::new(v.color, v.degree + t), m))
                .collect(),
        }
    }

    /// Multiplicity of x_color(degree).
    pub fn count_at(&self, color: Color, degree: i64) -> u32 {
        self.runs
            .binary_search_by(|&(v, _)| v.cmp(&Variable::new(color, degree)))
            .map(|i| self.runs[i].1)
            .unwrap_or(0)
    }

    /// Per-color counts of the factors at one degree.
    pub fn counts_at_degree(&self, degree: i64) -> ColorCounts {
        let mut counts = ColorCounts::new();
        for &(v, m) in &self.runs {
            if v.degree == degree {
                counts.add(v.color, m);
            }
        }
        counts
    }

    /// The window profile at j: `a` counts at degree -j, `b` at degree -j-1.
    pub fn window_profile(&self, j: i64) -> FrequencyProfile {
        FrequencyProfile {
            j,
            a: self.counts_at_degree(-j),
            b: self.counts_at_degree(-j - 1),
        }
    }

    /// All windows j with a nonzero profile, ascending. A factor of degree d
    /// shows up as an `a` count at window -d and as a `b` count at window -d-1.
    pub fn windows(&self) -> Vec<i64> {
        let mut js: Vec<i64> = self
            .runs
            .iter()
            .flat_map(|&(v, _)| [-v.degree, -v.degree - 1])
            .collect();
        js.sort();
        js.dedup();
        js
    }

    /// Multiset inclusion.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.runs
            .iter()
            .all(|&(v, m)| other.count_at(v.color, v.degree) >= m)
    }
}

/// Lexicographic comparison of the canonical sequences from the greatest
/// variable (rightmost) leftwards; if one side is exhausted while agreeing,
/// the shorter monomial is smaller.
impl Ord for Monomial {
    fn cmp(&self, other: &Monomial) -> Ordering {
        let mut lhs = self.runs.iter().rev();
        let mut rhs = other.runs.iter().rev();
        let (mut lcur, mut rcur) = (lhs.next().copied(), rhs.next().copied());
        loop {
            match (lcur, rcur) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some((lv, lm)), Some((rv, rm))) => {
                    match lv.cmp(&rv) {
                        Ordering::Equal => {}
                        ord => return ord,
                    }
                    // Equal variables: consume the common multiplicity.
                    match lm.cmp(&rm) {
                        Ordering::Equal => {
                            lcur = lhs.next().copied();
                            rcur = rhs.next().copied();
                        }
                        Ordering::Less => {
                            lcur = lhs.next().copied();
                            rcur = Some((rv, rm - lm));
                        }
                        Ordering::Greater => {
                            lcur = Some((lv, lm - rm));
                            rcur = rhs.next().copied();
                        }
                    }
                }
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Monomial) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical grammar form: factors from the lowest variable (leftmost) to the
/// greatest (rightmost), runs collapsed with `^`.
impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &(v, m)) in self.runs.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
            if m > 1 {
                write!(f, "^{m}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for Monomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Monomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// Grammar error, with the byte offset of the offending input.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("at byte {offset}: {kind}")]
pub struct ParseError {
    pub offset: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseErrorKind {
    #[error("unknown color token")]
    UnknownColor,
    #[error("expected `(`")]
    ExpectedLParen,
    #[error("expected integer degree")]
    ExpectedDegree,
    #[error("degree out of range")]
    DegreeOverflow,
    #[error("expected `)`")]
    ExpectedRParen,
    #[error("expected exponent")]
    ExpectedExponent,
    #[error("exponent out of range")]
    ExponentOverflow,
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            offset: self.pos,
            kind,
        }
    }

    fn skip_ws(&mut self) {
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_whitespace())
        {
            self.pos += 1;
        }
    }

    fn eat(&mut self, byte: u8) -> bool {
        if self.bytes.get(self.pos) == Some(&byte) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn color(&mut self) -> Result<Color, ParseError> {
        let head = match self.bytes.get(self.pos) {
            Some(b'2') => Color::C2,
            Some(b'3') => Color::C3,
            Some(b'4') => Color::C4,
            _ => return Err(self.err(ParseErrorKind::UnknownColor)),
        };
        self.pos += 1;
        if self.eat(b'_') {
            Ok(head.opposite())
        } else {
            Ok(head)
        }
    }

    fn digits(&mut self) -> &'a [u8] {
        let start = self.pos;
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        &self.bytes[start..self.pos]
    }

    fn degree(&mut self) -> Result<i64, ParseError> {
        let start = self.pos;
        if !self.eat(b'-') {
            self.eat(b'+');
        }
        if self.digits().is_empty() {
            self.pos = start;
            return Err(self.err(ParseErrorKind::ExpectedDegree));
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        text.trim_start_matches('+')
            .parse()
            .map_err(|_| ParseError {
                offset: start,
                kind: ParseErrorKind::DegreeOverflow,
            })
    }

    fn exponent(&mut self) -> Result<u32, ParseError> {
        let start = self.pos;
        let digits = self.digits();
        if digits.is_empty() {
            return Err(self.err(ParseErrorKind::ExpectedExponent));
        }
        std::str::from_utf8(digits)
            .unwrap()
            .parse()
            .map_err(|_| ParseError {
                offset: start,
                kind: ParseErrorKind::ExponentOverflow,
            })
    }

    fn factor(&mut self) -> Result<(Variable, u32), ParseError> {
        let color = self.color()?;
        if !self.eat(b'(') {
            return Err(self.err(ParseErrorKind::ExpectedLParen));
        }
        let degree = self.degree()?;
        if !self.eat(b')') {
            return Err(self.err(ParseErrorKind::ExpectedRParen));
        }
        let mult = if self.eat(b'^') { self.exponent()? } else { 1 };
        Ok((Variable::new(color, degree), mult))
    }
}

impl FromStr for Monomial {
    type Err = ParseError;

    /// Parses the monomial grammar: `factor := COLOR "(" INT ")" ("^" UINT)?`,
    /// factors separated by ASCII whitespace. `^0` is accepted and contributes
    /// nothing. Returns the canonical monomial.
    fn from_str(text: &str) -> Result<Self, ParseError> {
        let mut p = Parser {
            bytes: text.as_bytes(),
            pos: 0,
        };
        let mut runs = Vec::new();
        loop {
            p.skip_ws();
            if p.pos == p.bytes.len() {
                break;
            }
            let offset = p.pos;
            let (var, mult) = p.factor()?;
            if mult > 0 {
                runs.push((var, mult, offset));
            }
        }
        runs.sort_by_key(|&(v, _, _)| v);
        let mut merged: Vec<(Variable, u32)> = Vec::with_capacity(runs.len());
        for (v, m, offset) in runs {
            match merged.last_mut() {
                Some((last, mult)) if *last == v => {
                    *mult = mult.checked_add(m).ok_or(ParseError {
                        offset,
                        kind: ParseErrorKind::ExponentOverflow,
                    })?;
                }
                _ => merged.push((v, m)),
            }
        }
        Ok(Monomial { runs: merged })
    }
}
