//! Group specifications: parsing `"SU(2)xT^1"`-style strings into a product
//! of Lie-group factors and resolving each factor to its Weyl data.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse group spec at position {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

/// One factor of a product of compact connected Lie groups, as written.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CartanFactor {
    SU(u32),
    U(u32),
    SO(u32),
    Spin(u32),
    Sp(u32),
    A(u32),
    B(u32),
    C(u32),
    D(u32),
    G2,
    F4,
    E6,
    E7,
    E8,
    Torus(u32),
}

/// The Weyl group together with its reflection action, which is all the
/// series formulas see. Several factor spellings share one `WeylType`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WeylType {
    /// `S_k` permuting the coordinates of a rank-`k` torus (the `U(k)` action).
    Symmetric(u32),
    /// Type `A_m`: `S_{m+1}` on the rank-`m` root lattice.
    A(u32),
    /// Type `B_m` / `C_m`: signed permutations.
    B(u32),
    /// Type `D_m`: signed permutations with an even number of sign changes.
    D(u32),
    G2,
    F4,
    E6,
    E7,
    E8,
    Torus(u32),
}

fn factorial(k: u32) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * i)
}

impl WeylType {
    pub fn rank(self) -> usize {
        match self {
            WeylType::Symmetric(k) | WeylType::A(k) | WeylType::B(k) | WeylType::D(k) => k as usize,
            WeylType::Torus(k) => k as usize,
            WeylType::G2 => 2,
            WeylType::F4 => 4,
            WeylType::E6 => 6,
            WeylType::E7 => 7,
            WeylType::E8 => 8,
        }
    }

    pub fn weyl_order(self) -> BigInt {
        match self {
            WeylType::Symmetric(k) => factorial(k),
            WeylType::A(m) => factorial(m + 1),
            WeylType::B(m) => (BigInt::one() << m as usize) * factorial(m),
            WeylType::D(m) => (BigInt::one() << (m as usize - 1)) * factorial(m),
            WeylType::G2 => 12.into(),
            WeylType::F4 => 1152.into(),
            WeylType::E6 => 51_840.into(),
            WeylType::E7 => 2_903_040.into(),
            WeylType::E8 => 696_729_600.into(),
            WeylType::Torus(_) => BigInt::one(),
        }
    }

    /// Dimension of the subspace fixed by the whole Weyl group.
    pub fn central_rank(self) -> usize {
        match self {
            WeylType::Symmetric(k) => usize::from(k > 0),
            WeylType::Torus(k) => k as usize,
            _ => 0,
        }
    }

    pub fn is_classical(self) -> bool {
        !matches!(
            self,
            WeylType::G2 | WeylType::F4 | WeylType::E6 | WeylType::E7 | WeylType::E8
        )
    }
}

impl CartanFactor {
    pub fn weyl_type(self) -> WeylType {
        match self {
            CartanFactor::SU(k) => WeylType::A(k - 1),
            CartanFactor::U(k) => WeylType::Symmetric(k),
            CartanFactor::SO(k) | CartanFactor::Spin(k) => {
                if k % 2 == 1 {
                    WeylType::B(k / 2)
                } else {
                    WeylType::D(k / 2)
                }
            }
            CartanFactor::Sp(k) | CartanFactor::B(k) | CartanFactor::C(k) => WeylType::B(k),
            CartanFactor::A(k) => WeylType::A(k),
            CartanFactor::D(k) => WeylType::D(k),
            CartanFactor::G2 => WeylType::G2,
            CartanFactor::F4 => WeylType::F4,
            CartanFactor::E6 => WeylType::E6,
            CartanFactor::E7 => WeylType::E7,
            CartanFactor::E8 => WeylType::E8,
            CartanFactor::Torus(k) => WeylType::Torus(k),
        }
    }

    pub fn rank(self) -> usize {
        self.weyl_type().rank()
    }

    pub fn weyl_order(self) -> BigInt {
        self.weyl_type().weyl_order()
    }

    fn min_parameter(self) -> Option<u32> {
        match self {
            CartanFactor::SU(_)
            | CartanFactor::U(_)
            | CartanFactor::Sp(_)
            | CartanFactor::A(_)
            | CartanFactor::Torus(_) => Some(1),
            // SO(2) and Spin(2) are rewritten to T^1 before validation
            CartanFactor::SO(_) | CartanFactor::Spin(_) => Some(3),
            CartanFactor::B(_) | CartanFactor::C(_) => Some(2),
            CartanFactor::D(_) => Some(3),
            _ => None,
        }
    }
}

impl fmt::Display for CartanFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CartanFactor::SU(k) => write!(f, "SU({k})"),
            CartanFactor::U(k) => write!(f, "U({k})"),
            CartanFactor::SO(k) => write!(f, "SO({k})"),
            CartanFactor::Spin(k) => write!(f, "Spin({k})"),
            CartanFactor::Sp(k) => write!(f, "Sp({k})"),
            CartanFactor::A(k) => write!(f, "A_{k}"),
            CartanFactor::B(k) => write!(f, "B_{k}"),
            CartanFactor::C(k) => write!(f, "C_{k}"),
            CartanFactor::D(k) => write!(f, "D_{k}"),
            CartanFactor::G2 => f.write_str("G2"),
            CartanFactor::F4 => f.write_str("F4"),
            CartanFactor::E6 => f.write_str("E6"),
            CartanFactor::E7 => f.write_str("E7"),
            CartanFactor::E8 => f.write_str("E8"),
            CartanFactor::Torus(k) => write!(f, "T^{k}"),
        }
    }
}

/// A product of compact connected Lie groups.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    factors: Vec<CartanFactor>,
    canonical_name: String,
    rank: usize,
    central_torus_rank: usize,
}

impl GroupSpec {
    pub fn from_factors(factors: Vec<CartanFactor>) -> Self {
        let canonical_name = if factors.is_empty() {
            "1".to_string()
        } else {
            factors
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join("x")
        };
        let rank = factors.iter().map(|f| f.rank()).sum();
        let central_torus_rank = factors.iter().map(|f| f.weyl_type().central_rank()).sum();
        GroupSpec {
            factors,
            canonical_name,
            rank,
            central_torus_rank,
        }
    }

    pub fn factors(&self) -> &[CartanFactor] {
        &self.factors
    }

    pub fn canonical_name(&self) -> &str {
        &self.canonical_name
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn central_torus_rank(&self) -> usize {
        self.central_torus_rank
    }

    pub fn weyl_order(&self) -> BigInt {
        self.factors.iter().map(|f| f.weyl_order()).product()
    }

    pub fn weyl_types(&self) -> impl Iterator<Item = WeylType> + '_ {
        self.factors.iter().map(|f| f.weyl_type())
    }

    pub fn is_classical(&self) -> bool {
        self.weyl_types().all(WeylType::is_classical)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_name)
    }
}

impl std::str::FromStr for GroupSpec {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        parse_group(s)
    }
}

struct Cursor<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    src: &'a str,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        let chars = src
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .map(|(i, c)| (i, c.to_ascii_lowercase()))
            .collect();
        Cursor { chars, pos: 0, src }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.src.len(), |&(i, _)| i)
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            position: self.offset(),
            message: message.into(),
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn starts_with(&self, word: &str) -> bool {
        let mut it = self.chars[self.pos..].iter().map(|&(_, c)| c);
        word.chars().all(|w| it.next() == Some(w))
    }

    fn number(&mut self) -> Result<u32, ParseError> {
        let start = self.pos;
        let at = self.offset();
        let mut digits = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            digits.push(c);
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected a number"));
        }
        digits.parse().map_err(|_| ParseError {
            position: at,
            message: format!("number {digits} out of range"),
        })
    }

    fn parenthesized(&mut self) -> Result<u32, ParseError> {
        if !self.eat('(') {
            return Err(self.error("expected '('"));
        }
        let k = self.number()?;
        if !self.eat(')') {
            return Err(self.error("expected ')'"));
        }
        Ok(k)
    }

    /// `_k`, `k` or `(k)` after a Cartan letter.
    fn letter_index(&mut self) -> Result<u32, ParseError> {
        if self.peek() == Some('(') {
            self.parenthesized()
        } else {
            self.eat('_');
            self.number()
        }
    }
}

// Longest names first so that e.g. "spin" wins over "sp" and "psu" over "pu".
const NAMES: &[&str] = &[
    "spin", "psu", "su", "sp", "so", "pu", "u", "t", "a", "b", "c", "d", "g", "f", "e",
];

fn parse_factor(cur: &mut Cursor<'_>) -> Result<CartanFactor, ParseError> {
    let start = cur.offset();
    let Some(name) = NAMES.iter().find(|n| cur.starts_with(n)) else {
        return Err(cur.error("expected a group factor such as SU(2), U(3), G2 or T^1"));
    };
    cur.pos += name.len();
    let factor = match *name {
        "su" | "psu" | "pu" => CartanFactor::SU(cur.parenthesized()?),
        "u" => CartanFactor::U(cur.parenthesized()?),
        "so" | "spin" => {
            let k = cur.parenthesized()?;
            match (k, *name) {
                (2, _) => CartanFactor::Torus(1),
                (_, "so") => CartanFactor::SO(k),
                _ => CartanFactor::Spin(k),
            }
        }
        "sp" => CartanFactor::Sp(cur.parenthesized()?),
        "a" => CartanFactor::A(cur.letter_index()?),
        "b" => CartanFactor::B(cur.letter_index()?),
        "c" => CartanFactor::C(cur.letter_index()?),
        "d" => CartanFactor::D(cur.letter_index()?),
        "t" => {
            if cur.eat('^') {
                CartanFactor::Torus(cur.number()?)
            } else if cur.peek() == Some('(') {
                CartanFactor::Torus(cur.parenthesized()?)
            } else if cur.peek().is_some_and(|c| c.is_ascii_digit()) {
                CartanFactor::Torus(cur.number()?)
            } else {
                CartanFactor::Torus(1)
            }
        }
        letter => {
            let at = cur.offset();
            let k = cur.number()?;
            match (letter, k) {
                ("g", 2) => CartanFactor::G2,
                ("f", 4) => CartanFactor::F4,
                ("e", 6) => CartanFactor::E6,
                ("e", 7) => CartanFactor::E7,
                ("e", 8) => CartanFactor::E8,
                _ => {
                    return Err(ParseError {
                        position: at,
                        message: format!("no exceptional group {}{k}", letter.to_uppercase()),
                    })
                }
            }
        }
    };
    let param = match factor {
        CartanFactor::SU(k)
        | CartanFactor::U(k)
        | CartanFactor::SO(k)
        | CartanFactor::Spin(k)
        | CartanFactor::Sp(k)
        | CartanFactor::A(k)
        | CartanFactor::B(k)
        | CartanFactor::C(k)
        | CartanFactor::D(k)
        | CartanFactor::Torus(k) => Some(k),
        _ => None,
    };
    if let (Some(k), Some(min)) = (param, factor.min_parameter()) {
        if k < min {
            return Err(ParseError {
                position: start,
                message: format!("parameter {k} out of range (minimum {min})"),
            });
        }
        // Rank grows linearly but the Weyl order factorially; anything past
        // this is far beyond what can be tabulated.
        if k > 64 {
            return Err(ParseError {
                position: start,
                message: format!("parameter {k} too large"),
            });
        }
    }
    Ok(factor)
}

/// Parses `factor ("x" factor)*`, case-insensitive, whitespace ignored.
///
/// Factors: `SU(k)`, `U(k)`, `SO(k)`, `Spin(k)`, `Sp(k)`, `A_k`, `B_k`,
/// `C_k`, `D_k`, `G2`, `F4`, `E6`, `E7`, `E8`, `T^k` (also `T` for `T^1`).
/// `PSU(k)`/`PU(k)` are read as `SU(k)` and `SO(2)`/`Spin(2)` as `T^1`. The
/// single token `1` denotes the trivial group. `*` and `×` are accepted as
/// separators as well.
pub fn parse_group(spec: &str) -> Result<GroupSpec, ParseError> {
    let mut cur = Cursor::new(spec);
    if cur.peek().is_none() {
        return Err(cur.error("empty group spec"));
    }
    if cur.eat('1') {
        if cur.peek().is_some() {
            return Err(cur.error("unexpected input after trivial group '1'"));
        }
        return Ok(GroupSpec::from_factors(Vec::new()));
    }
    let mut factors = vec![parse_factor(&mut cur)?];
    while cur.peek().is_some() {
        if !(cur.eat('x') || cur.eat('*') || cur.eat('×')) {
            return Err(cur.error("expected 'x' between factors"));
        }
        factors.push(parse_factor(&mut cur)?);
    }
    Ok(GroupSpec::from_factors(factors))
}
