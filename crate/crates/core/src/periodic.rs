//! Periodic integer sequences that appear as constants and signs.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Periodic {
    /// Constant of `R_k`: −1 at k ≡ 1, +1 at k ≡ 4 (mod 6), else 0.
    Rho,
    /// (2/√3)·sin(kπ/3): 0, 1, 1, 0, −1, −1.
    Sigma,
    /// −1 at k ≡ 1, 2 and +1 at k ≡ 3, 0 (mod 4).
    Tau,
    /// Nonprincipal character mod 4: 0, 1, 0, −1.
    Chi1,
    /// Pell numbers mod 5.
    Upsilon,
}

impl Periodic {
    pub const ALL: [Periodic; 5] =
        [Periodic::Rho, Periodic::Sigma, Periodic::Tau, Periodic::Chi1, Periodic::Upsilon];

    /// One period, starting at k = 0.
    pub fn values(self) -> &'static [i64] {
        match self {
            Periodic::Rho => &[0, -1, 0, 0, 1, 0],
            Periodic::Sigma => &[0, 1, 1, 0, -1, -1],
            Periodic::Tau => &[1, -1, -1, 1],
            Periodic::Chi1 => &[0, 1, 0, -1],
            Periodic::Upsilon => &[0, 1, 2, 0, 2, 4, 0, 4, 3, 0, 3, 1],
        }
    }

    pub fn period(self) -> usize {
        self.values().len()
    }

    pub fn at(self, k: u64) -> i64 {
        let v = self.values();
        v[(k % v.len() as u64) as usize]
    }

    /// Periodic extension to all integers.
    pub fn at_i64(self, k: i64) -> i64 {
        let v = self.values();
        v[k.rem_euclid(v.len() as i64) as usize]
    }

    pub fn name(self) -> &'static str {
        match self {
            Periodic::Rho => "rho",
            Periodic::Sigma => "sigma",
            Periodic::Tau => "tau",
            Periodic::Chi1 => "chi1",
            Periodic::Upsilon => "upsilon",
        }
    }
}

impl fmt::Display for Periodic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Periodic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Periodic::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::UnknownName { kind: "periodic sequence", name: s.to_string() })
    }
}

pub fn rho(k: i64) -> i64 {
    Periodic::Rho.at_i64(k)
}

pub fn sigma(k: i64) -> i64 {
    Periodic::Sigma.at_i64(k)
}

pub fn tau(k: i64) -> i64 {
    Periodic::Tau.at_i64(k)
}

pub fn chi1(k: i64) -> i64 {
    Periodic::Chi1.at_i64(k)
}

pub fn upsilon(k: i64) -> i64 {
    Periodic::Upsilon.at_i64(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn listed_values() {
        assert_eq!(Periodic::Sigma.at(5), -1);
        assert_eq!(Periodic::Rho.at(4), 1);
        assert_eq!(Periodic::Upsilon.at(13), 1);
        assert_eq!(Periodic::Tau.at(4), 1);
        assert_eq!(Periodic::Chi1.at(3), -1);
    }

    #[test]
    fn antiperiodic_relations() {
        for k in 3..60 {
            assert_eq!(rho(k), -rho(k - 3));
            assert_eq!(sigma(k), -sigma(k - 3));
        }
        for k in 1..=24 {
            assert_eq!(sigma(k), -rho(k - 1) - rho(k));
        }
    }

    #[test]
    fn sigma_matches_sine() {
        for k in 0..24 {
            let s = 2.0 / 3f64.sqrt() * (k as f64 * std::f64::consts::PI / 3.0).sin();
            assert_eq!(s.round() as i64, sigma(k));
        }
    }

    #[test]
    fn names_round_trip() {
        for p in Periodic::ALL {
            assert_eq!(p.name().parse::<Periodic>().unwrap(), p);
        }
        assert!("omega".parse::<Periodic>().is_err());
    }
}
