use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{BinomialPoly, Poly, Rational};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Monomial,
    Binomial,
}

/// Wire form of a polynomial:
/// `{"basis":"monomial","coeffs":[["num","den"],...]}` with decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub basis: Basis,
    pub coeffs: Vec<[String; 2]>,
}

fn encode(coeffs: &[Rational]) -> Vec<[String; 2]> {
    coeffs
        .iter()
        .map(|c| [c.numer().to_string(), c.denom().to_string()])
        .collect()
}

fn decode(coeffs: &[[String; 2]]) -> Result<Vec<Rational>> {
    coeffs
        .iter()
        .map(|[n, d]| {
            let n: BigInt = n
                .parse()
                .map_err(|_| Error::Parse(format!("bad numerator {n:?}")))?;
            let d: BigInt = d
                .parse()
                .map_err(|_| Error::Parse(format!("bad denominator {d:?}")))?;
            if d <= BigInt::from(0) {
                return Err(Error::Parse(format!("denominator must be positive, got {d}")));
            }
            Ok(Rational::new(n, d))
        })
        .collect()
}

impl From<&Poly> for PolyJson {
    fn from(p: &Poly) -> Self {
        PolyJson {
            basis: Basis::Monomial,
            coeffs: encode(p.coeffs()),
        }
    }
}

impl From<&BinomialPoly> for PolyJson {
    fn from(p: &BinomialPoly) -> Self {
        PolyJson {
            basis: Basis::Binomial,
            coeffs: encode(p.coeffs()),
        }
    }
}

impl PolyJson {
    /// Decodes into the monomial basis regardless of the stored basis.
    pub fn to_poly(&self) -> Result<Poly> {
        let coeffs = decode(&self.coeffs)?;
        Ok(match self.basis {
            Basis::Monomial => Poly::from_coeffs(coeffs),
            Basis::Binomial => BinomialPoly::from_coeffs(coeffs).to_monomial(),
        })
    }

    pub fn to_binomial(&self) -> Result<BinomialPoly> {
        let coeffs = decode(&self.coeffs)?;
        Ok(match self.basis {
            Basis::Binomial => BinomialPoly::from_coeffs(coeffs),
            Basis::Monomial => BinomialPoly::from_monomial(&Poly::from_coeffs(coeffs)),
        })
    }
}

impl Serialize for Poly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        PolyJson::deserialize(d)?
            .to_poly()
            .map_err(serde::de::Error::custom)
    }
}

impl Serialize for BinomialPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for BinomialPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        PolyJson::deserialize(d)?
            .to_binomial()
            .map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;

    #[test]
    fn wire_format() {
        let p = Poly::from_coeffs(vec![rat(0, 1), rat(-3, 2), rat(1, 2)]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"basis":"monomial","coeffs":[["0","1"],["-3","2"],["1","2"]]}"#);
        let b = BinomialPoly::from_monomial(&p);
        let s = serde_json::to_string(&b).unwrap();
        assert_eq!(s, r#"{"basis":"binomial","coeffs":[["0","1"],["-1","1"],["1","1"]]}"#);
    }

    #[test]
    fn binomial_json_decodes_to_monomial() {
        let json = r#"{"basis":"binomial","coeffs":[["0","1"],["-1","1"],["1","1"]]}"#;
        let p: Poly = serde_json::from_str(json).unwrap();
        assert_eq!(p, Poly::from_coeffs(vec![rat(0, 1), rat(-3, 2), rat(1, 2)]));
    }

    #[test]
    fn rejects_bad_denominator() {
        let json = r#"{"basis":"monomial","coeffs":[["1","0"]]}"#;
        assert!(serde_json::from_str::<Poly>(json).is_err());
        let json = r#"{"basis":"monomial","coeffs":[["1","-2"]]}"#;
        assert!(serde_json::from_str::<Poly>(json).is_err());
    }
}
