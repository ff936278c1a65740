//! Plain-text form: `-1 + a1 + b1 b0`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::{Generator, Monomial, Polynomial};
use crate::error::{Error, Result};

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let magnitude = c.abs();
            if m.is_one() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{magnitude} {m}")?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, PartialEq)]
enum Token {
    Plus,
    Minus,
    Int(BigInt),
    Gen(Generator),
}

fn tokenize(s: &str) -> Result<Vec<Token>> {
    let mut tokens = Vec::new();
    let mut chars = s.char_indices().peekable();
    while let Some(&(start, ch)) = chars.peek() {
        match ch {
            c if c.is_whitespace() || c == '*' => {
                chars.next();
            }
            '+' => {
                chars.next();
                tokens.push(Token::Plus);
            }
            '-' | '−' => {
                chars.next();
                tokens.push(Token::Minus);
            }
            c if c.is_ascii_digit() => {
                let mut end = start;
                while let Some(&(i, d)) = chars.peek() {
                    if !d.is_ascii_digit() {
                        break;
                    }
                    end = i + d.len_utf8();
                    chars.next();
                }
                let n = s[start..end]
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad integer `{}`", &s[start..end])))?;
                tokens.push(Token::Int(n));
            }
            'a' | 'b' => {
                chars.next();
                let mut end = start + 1;
                if let Some(&(i, '_')) = chars.peek() {
                    end = i + 1;
                    chars.next();
                }
                while let Some(&(i, d)) = chars.peek() {
                    if !d.is_ascii_digit() {
                        break;
                    }
                    end = i + 1;
                    chars.next();
                }
                tokens.push(Token::Gen(s[start..end].parse()?));
            }
            other => return Err(Error::Parse(format!("unexpected character `{other}`"))),
        }
    }
    Ok(tokens)
}

impl FromStr for Polynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let tokens = tokenize(s)?;
        let mut poly = Polynomial::zero();
        let mut iter = tokens.into_iter().peekable();
        let mut first = true;
        while iter.peek().is_some() {
            let mut sign = BigInt::one();
            match iter.peek() {
                Some(Token::Plus) => {
                    iter.next();
                }
                Some(Token::Minus) => {
                    iter.next();
                    sign = -sign;
                }
                _ if first => {}
                Some(t) => return Err(Error::Parse(format!("expected `+` or `-`, found {t:?}"))),
                None => unreachable!(),
            }
            first = false;
            let mut coef = None;
            if let Some(Token::Int(_)) = iter.peek() {
                if let Some(Token::Int(n)) = iter.next() {
                    coef = Some(n);
                }
            }
            let mut word = Vec::new();
            while let Some(Token::Gen(_)) = iter.peek() {
                if let Some(Token::Gen(g)) = iter.next() {
                    word.push(g);
                }
            }
            if coef.is_none() && word.is_empty() {
                return Err(Error::Parse("dangling sign".to_string()));
            }
            let c = coef.unwrap_or_else(BigInt::one) * sign;
            poly.add_term(Monomial::new(word), c);
        }
        if first {
            return Err(Error::Parse("empty input".to_string()));
        }
        Ok(poly)
    }
}
