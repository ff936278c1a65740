use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    A,
    B,
}

impl Letter {
    pub fn as_char(self) -> char {
        match self {
            Letter::A => 'a',
            Letter::B => 'b',
        }
    }
}

/// A single noncommuting indeterminate `a_u` (u ≥ 1) or `b_u` (u ≥ 0).
///
/// Generators order by subscript descending, then `a` before `b`. Words
/// compare lexicographically on this order, which is the display order of
/// polynomial terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Generator {
    letter: Letter,
    subscript: u32,
}

impl Generator {
    pub fn new(letter: Letter, subscript: u32) -> Result<Self> {
        if letter == Letter::A && subscript == 0 {
            return Err(Error::ZeroSubscriptA);
        }
        Ok(Generator { letter, subscript })
    }

    /// `a_u`.
    ///
    /// # Panics
    ///
    /// If `u == 0`; use [`Generator::new`] for fallible construction.
    pub fn a(u: u32) -> Self {
        assert!(u >= 1, "a0 is not a generator");
        Generator { letter: Letter::A, subscript: u }
    }

    /// `b_u`.
    pub fn b(u: u32) -> Self {
        Generator { letter: Letter::B, subscript: u }
    }

    pub fn letter(self) -> Letter {
        self.letter
    }

    pub fn subscript(self) -> u32 {
        self.subscript
    }

    pub fn is_a(self) -> bool {
        self.letter == Letter::A
    }

    pub fn is_b(self) -> bool {
        self.letter == Letter::B
    }

    /// Same letter with the subscript moved by `delta`; `None` when the
    /// result would not be a generator.
    pub fn shifted(self, delta: i64) -> Option<Self> {
        let s = i64::from(self.subscript) + delta;
        let s = u32::try_from(s).ok()?;
        Generator::new(self.letter, s).ok()
    }
}

impl Ord for Generator {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .subscript
            .cmp(&self.subscript)
            .then(self.letter.cmp(&other.letter))
    }
}

impl PartialOrd for Generator {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.letter.as_char(), self.subscript)
    }
}

impl FromStr for Generator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadGenerator(s.to_string());
        let mut chars = s.chars();
        let letter = match chars.next() {
            Some('a') => Letter::A,
            Some('b') => Letter::B,
            _ => return Err(bad()),
        };
        let digits = chars.as_str().strip_prefix('_').unwrap_or(chars.as_str());
        if digits.is_empty() || !digits.bytes().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let subscript = digits.parse().map_err(|_| bad())?;
        Generator::new(letter, subscript)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a0_is_rejected() {
        assert_eq!(Generator::new(Letter::A, 0), Err(Error::ZeroSubscriptA));
        assert_eq!("a0".parse::<Generator>(), Err(Error::ZeroSubscriptA));
        assert!(Generator::new(Letter::B, 0).is_ok());
    }

    #[test]
    #[should_panic]
    fn a0_constructor_panics() {
        Generator::a(0);
    }

    #[test]
    fn parse_and_display() {
        for s in ["a1", "b0", "a12", "b7"] {
            assert_eq!(s.parse::<Generator>().unwrap().to_string(), s);
        }
        assert_eq!("a_3".parse::<Generator>().unwrap(), Generator::a(3));
        for s in ["", "c1", "a", "b-1", "a1x", "B2"] {
            assert!(s.parse::<Generator>().is_err(), "{s}");
        }
    }

    #[test]
    fn order_is_subscript_descending_then_a_first() {
        let mut gens = vec![Generator::b(0), Generator::a(1), Generator::b(2), Generator::a(2), Generator::b(1)];
        gens.sort();
        assert_eq!(
            gens,
            vec![Generator::a(2), Generator::b(2), Generator::a(1), Generator::b(1), Generator::b(0)]
        );
    }

    #[test]
    fn shifting() {
        assert_eq!(Generator::a(2).shifted(-1), Some(Generator::a(1)));
        assert_eq!(Generator::a(1).shifted(-1), None);
        assert_eq!(Generator::b(1).shifted(-1), Some(Generator::b(0)));
        assert_eq!(Generator::b(0).shifted(-1), None);
        assert_eq!(Generator::b(4).shifted(3), Some(Generator::b(7)));
    }
}
