//! JSON encodings of matrices, modules, morphisms and complexes.
//!
//! Integers are decimal strings; polynomials are lists of rational
//! coefficient strings, lowest degree first. Decoding an encoding yields
//! a value equal to the original.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::complex::Complex;
use crate::fpmod::{FpModule, FpMorphism};
use crate::matrix::IntMatrix;
use crate::ring::{Elem, Poly, RingSpec};

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum EntryRepr {
    Int(String),
    Poly(Vec<String>),
}

#[derive(Serialize, Deserialize)]
struct MatrixRepr {
    ring: RingSpec,
    rows: usize,
    cols: usize,
    entries: Vec<EntryRepr>,
}

fn encode_elem(e: &Elem) -> EntryRepr {
    match e {
        Elem::Int(n) => EntryRepr::Int(n.to_string()),
        Elem::Poly(p) => EntryRepr::Poly(p.coeffs().iter().map(|c| c.to_string()).collect()),
    }
}

fn decode_elem(ring: RingSpec, e: &EntryRepr) -> Result<Elem, String> {
    match (ring, e) {
        (RingSpec::Integers, EntryRepr::Int(s)) => {
            s.parse::<BigInt>().map(Elem::Int).map_err(|err| format!("bad integer `{s}`: {err}"))
        }
        (RingSpec::RationalPolynomials, EntryRepr::Poly(cs)) => {
            let coeffs = cs
                .iter()
                .map(|s| s.parse::<BigRational>().map_err(|err| format!("bad coefficient `{s}`: {err}")))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Elem::Poly(Poly::from_coeffs(coeffs)))
        }
        _ => Err(format!("entry does not match ring {ring}")),
    }
}

impl Serialize for IntMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        MatrixRepr {
            ring: self.ring(),
            rows: self.rows(),
            cols: self.cols(),
            entries: self.entries().iter().map(encode_elem).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<IntMatrix, D::Error> {
        let r = MatrixRepr::deserialize(d)?;
        let entries = r
            .entries
            .iter()
            .map(|e| decode_elem(r.ring, e))
            .collect::<Result<Vec<_>, _>>()
            .map_err(D::Error::custom)?;
        IntMatrix::new(r.ring, r.rows, r.cols, entries).map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct ModuleRepr {
    presentation: IntMatrix,
}

impl Serialize for FpModule {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ModuleRepr { presentation: self.presentation().clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for FpModule {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<FpModule, D::Error> {
        Ok(FpModule::new(ModuleRepr::deserialize(d)?.presentation))
    }
}

#[derive(Serialize, Deserialize)]
struct MorphismRepr {
    source: FpModule,
    target: FpModule,
    matrix: IntMatrix,
    witness: IntMatrix,
}

impl Serialize for FpMorphism {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        MorphismRepr {
            source: self.source().clone(),
            target: self.target().clone(),
            matrix: self.matrix().clone(),
            witness: self.witness().clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for FpMorphism {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<FpMorphism, D::Error> {
        let r = MorphismRepr::deserialize(d)?;
        FpMorphism::with_witness(r.source, r.target, r.matrix, r.witness).map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct ComplexRepr {
    ring: RingSpec,
    lo: i64,
    objects: Vec<FpModule>,
    differentials: Vec<FpMorphism>,
}

impl Serialize for Complex {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ComplexRepr {
            ring: self.ring(),
            lo: self.lo(),
            objects: (self.lo()..=self.hi()).map(|n| self.object(n)).collect(),
            differentials: (self.lo()..self.hi()).map(|n| self.diff(n)).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Complex {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Complex, D::Error> {
        let r = ComplexRepr::deserialize(d)?;
        Complex::new(r.ring, r.lo, r.objects, r.differentials).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_round_trip() {
        let m = IntMatrix::from_i64(&[&[1, -2], &[30, 0]]);
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(serde_json::from_str::<IntMatrix>(&s).unwrap(), m);
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let m = IntMatrix::new(RingSpec::Integers, 1, 1, vec![Elem::Int(big)]).unwrap();
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(serde_json::from_str::<IntMatrix>(&s).unwrap(), m);
        assert_eq!(serde_json::to_string(&serde_json::from_str::<IntMatrix>(&s).unwrap()).unwrap(), s);
    }

    #[test]
    fn poly_round_trip() {
        let p = Poly::from_coeffs(vec![BigRational::new(1.into(), 3.into()), BigRational::from_integer((-2).into())]);
        let m =
            IntMatrix::new(RingSpec::RationalPolynomials, 1, 2, vec![Elem::Poly(p), Elem::Poly(Poly::zero())]).unwrap();
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(serde_json::from_str::<IntMatrix>(&s).unwrap(), m);
    }

    #[test]
    fn rejects_mismatched_entries() {
        let bad = r#"{"ring":"Integers","rows":1,"cols":1,"entries":[["1"]]}"#;
        assert!(serde_json::from_str::<IntMatrix>(bad).is_err());
        let bad = r#"{"ring":"Integers","rows":2,"cols":1,"entries":["1"]}"#;
        assert!(serde_json::from_str::<IntMatrix>(bad).is_err());
    }

    #[test]
    fn complex_round_trip() {
        let c = Complex::two_term(&IntMatrix::from_i64(&[&[2, 0], &[0, 3]]), 0);
        let s = serde_json::to_string(&c).unwrap();
        assert_eq!(serde_json::from_str::<Complex>(&s).unwrap(), c);
    }
}
