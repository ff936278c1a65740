//! JSON form: `{"terms":[{"coef":"-1","word":[]},{"coef":"1","word":["a1"]}]}`.
//! Coefficients are decimal strings; terms appear in canonical order.

use num_bigint::BigInt;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Generator, Monomial, Polynomial};

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    coef: String,
    word: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct JsonPolynomial {
    terms: Vec<JsonTerm>,
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let terms = self
            .terms()
            .map(|(m, c)| JsonTerm {
                coef: c.to_string(),
                word: m.generators().iter().map(Generator::to_string).collect(),
            })
            .collect();
        JsonPolynomial { terms }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = JsonPolynomial::deserialize(deserializer)?;
        let mut poly = Polynomial::zero();
        for t in raw.terms {
            let c: BigInt = t.coef.parse().map_err(D::Error::custom)?;
            let word = t
                .word
                .iter()
                .map(|g| g.parse::<Generator>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(D::Error::custom)?;
            poly.add_term(Monomial::new(word), c);
        }
        Ok(poly)
    }
}

impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.generators().iter().map(Generator::to_string))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn r1_json_layout() {
        let r1: Polynomial = "-1 + a1 + b1 b0".parse().unwrap();
        let s = serde_json::to_string(&r1).unwrap();
        assert_eq!(
            s,
            r#"{"terms":[{"coef":"-1","word":[]},{"coef":"1","word":["a1"]},{"coef":"1","word":["b1","b0"]}]}"#
        );
        let back: Polynomial = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r1);
    }

    #[test]
    fn rejects_a0_and_bad_coefficients() {
        assert!(serde_json::from_str::<Polynomial>(r#"{"terms":[{"coef":"1","word":["a0"]}]}"#).is_err());
        assert!(serde_json::from_str::<Polynomial>(r#"{"terms":[{"coef":"x","word":[]}]}"#).is_err());
    }

    #[test]
    fn big_coefficients_survive() {
        let big = "123456789012345678901234567890";
        let json = format!(r#"{{"terms":[{{"coef":"{big}","word":["b3"]}}]}}"#);
        let p: Polynomial = serde_json::from_str(&json).unwrap();
        assert_eq!(p.to_string(), format!("{big} b3"));
    }
}
