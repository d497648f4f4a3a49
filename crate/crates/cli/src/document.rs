//! The JSON arrangement format.
//!
//! ```json
//! {
//!   "ambient_dim": 2,
//!   "hyperplanes": [
//!     {"normal": [1, 0], "offset": "0"},
//!     {"normal": [1, 1], "offset": "1/2"}
//!   ],
//!   "kind": "general",
//!   "labels": ["H1", "H2"]
//! }
//! ```
//!
//! Normal entries may be integers or rational strings; offsets are rational
//! strings (bare integers are accepted too). Hyperplanes are stored in
//! canonical form, so serializing a parsed document gives primitive integer
//! normals and offsets in lowest terms.

use crate::error::CliError;
use hyparr_core::{Arrangement, Hyperplane, Kind, Scalar};
use num::{BigInt, ToPrimitive};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum DocumentKind {
    TypeA,
    TypeB,
    General,
}

impl From<DocumentKind> for Kind {
    fn from(k: DocumentKind) -> Self {
        match k {
            DocumentKind::TypeA => Kind::TypeA,
            DocumentKind::TypeB => Kind::TypeB,
            DocumentKind::General => Kind::General,
        }
    }
}

impl From<Kind> for DocumentKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::TypeA => DocumentKind::TypeA,
            Kind::TypeB => DocumentKind::TypeB,
            Kind::General => DocumentKind::General,
        }
    }
}

/// A rational read from either a JSON integer or a `"p/q"` string.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Rational(Scalar);

pub fn parse_rational(text: &str) -> Result<Scalar, String> {
    let text = text.trim();
    let bad = || format!("invalid rational {text:?}");
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| bad())?;
    let den = BigInt::from_str(den).map_err(|_| bad())?;
    if den == BigInt::from(0) {
        return Err(format!("invalid rational {text:?}: zero denominator"));
    }
    Ok(Scalar::new(num, den))
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct Visitor;
        impl serde::de::Visitor<'_> for Visitor {
            type Value = Rational;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an integer or a rational string \"p/q\"")
            }

            fn visit_i64<E: serde::de::Error>(self, v: i64) -> Result<Rational, E> {
                Ok(Rational(Scalar::from_integer(v.into())))
            }

            fn visit_u64<E: serde::de::Error>(self, v: u64) -> Result<Rational, E> {
                Ok(Rational(Scalar::from_integer(v.into())))
            }

            fn visit_f64<E: serde::de::Error>(self, v: f64) -> Result<Rational, E> {
                Err(E::custom(format!(
                    "floating-point value {v} is not allowed; write it as a string \"p/q\""
                )))
            }

            fn visit_str<E: serde::de::Error>(self, v: &str) -> Result<Rational, E> {
                parse_rational(v).map(Rational).map_err(E::custom)
            }
        }
        d.deserialize_any(Visitor)
    }
}

/// Integers that fit in an `i64` become JSON numbers, everything else a
/// string.
struct NormalEntry<'a>(&'a Scalar);

impl Serialize for NormalEntry<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0.is_integer().then(|| self.0.to_integer().to_i64()).flatten() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawHyperplane {
    normal: Vec<Rational>,
    offset: Rational,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    ambient_dim: usize,
    hyperplanes: Vec<RawHyperplane>,
    #[serde(default)]
    kind: Option<DocumentKind>,
    #[serde(default)]
    labels: Option<Vec<String>>,
}

#[derive(Serialize)]
struct OutHyperplane<'a> {
    normal: Vec<NormalEntry<'a>>,
    offset: String,
}

#[derive(Serialize)]
struct OutDocument<'a> {
    ambient_dim: usize,
    hyperplanes: Vec<OutHyperplane<'a>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    kind: Option<DocumentKind>,
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<&'a [String]>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrangementDocument {
    pub arrangement: Arrangement,
    /// The kind as declared in the file, if any.
    pub kind: Option<DocumentKind>,
    pub labels: Option<Vec<String>>,
}

impl ArrangementDocument {
    pub fn new(arrangement: Arrangement) -> Self {
        let kind = match arrangement.kind() {
            Kind::General => None,
            k => Some(k.into()),
        };
        Self {
            arrangement,
            kind,
            labels: None,
        }
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        let de = &mut serde_json::Deserializer::from_str(text);
        let raw: RawDocument = serde_path_to_error::deserialize(de).map_err(|e| {
            let path = e.path().to_string();
            let inner = e.into_inner();
            if path == "." || path.is_empty() {
                CliError::Input(format!("parse error: {inner}"))
            } else {
                CliError::Input(format!("parse error in field {path}: {inner}"))
            }
        })?;

        let dim = raw.ambient_dim;
        let mut hyperplanes = Vec::with_capacity(raw.hyperplanes.len());
        for (i, h) in raw.hyperplanes.into_iter().enumerate() {
            let field = format!("hyperplanes[{i}]");
            if h.normal.len() != dim {
                return Err(CliError::Input(format!(
                    "field {field}.normal: has {} entries but ambient_dim is {dim}",
                    h.normal.len()
                )));
            }
            let normal = h.normal.into_iter().map(|r| r.0).collect();
            let hyperplane = Hyperplane::new(normal, h.offset.0)
                .map_err(|_| CliError::Input(format!("field {field}.normal: normal is zero")))?;
            if let Some(j) = hyperplanes.iter().position(|g| g == &hyperplane) {
                return Err(CliError::Input(format!(
                    "field {field}: same hyperplane as hyperplanes[{j}]"
                )));
            }
            hyperplanes.push(hyperplane);
        }
        if let Some(labels) = &raw.labels {
            if labels.len() != hyperplanes.len() {
                return Err(CliError::Input(format!(
                    "field labels: {} labels for {} hyperplanes",
                    labels.len(),
                    hyperplanes.len()
                )));
            }
        }
        let mut arrangement = Arrangement::new(dim, hyperplanes)
            .map_err(|e| CliError::Input(format!("invalid arrangement: {e}")))?;
        if let Some(k) = raw.kind {
            arrangement = arrangement.with_kind(k.into());
        }
        Ok(Self {
            arrangement,
            kind: raw.kind,
            labels: raw.labels,
        })
    }

    pub fn to_json(&self) -> String {
        let doc = OutDocument {
            ambient_dim: self.arrangement.dim(),
            hyperplanes: self
                .arrangement
                .hyperplanes()
                .iter()
                .map(|h| OutHyperplane {
                    normal: h.normal().iter().map(NormalEntry).collect(),
                    offset: h.offset().to_string(),
                })
                .collect(),
            kind: self.kind,
            labels: self.labels.as_deref(),
        };
        serde_json::to_string_pretty(&doc).expect("document serializes")
    }

    /// Label of hyperplane `i` (zero-based); `H{i+1}` when none is given.
    pub fn label(&self, i: usize) -> String {
        self.labels
            .as_ref()
            .and_then(|l| l.get(i).cloned())
            .unwrap_or_else(|| format!("H{}", i + 1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXAMPLE_A: &str = r#"{
      "ambient_dim": 3,
      "hyperplanes": [
        {"normal": [1, -1, 0], "offset": "0"},
        {"normal": [1, -1, 0], "offset": "1"},
        {"normal": [0, 1, -1], "offset": "0"},
        {"normal": [1, 0, -1], "offset": "1"},
        {"normal": [1, 0, -1], "offset": "0"}
      ],
      "kind": "typeA"
    }"#;

    #[test]
    fn parses_the_type_a_example() {
        let doc = ArrangementDocument::parse(EXAMPLE_A).unwrap();
        assert_eq!(doc.arrangement, hyparr_core::samples::type_a_example());
        assert_eq!(doc.kind, Some(DocumentKind::TypeA));
        assert_eq!(doc.label(4), "H5");
    }

    #[test]
    fn serialization_is_canonical_and_round_trips() {
        let text = r#"{"ambient_dim": 2, "hyperplanes": [
            {"normal": ["-2/3", "4/3"], "offset": "2/6"},
            {"normal": [0, 5], "offset": 3}
        ], "labels": ["a", "b"]}"#;
        let doc = ArrangementDocument::parse(text).unwrap();
        let out = doc.to_json();
        assert!(out.contains(r#""offset": "-1/2""#), "{out}");
        assert!(out.contains(r#""offset": "3/5""#), "{out}");
        assert!(!out.contains("kind"));
        assert_eq!(ArrangementDocument::parse(&out).unwrap(), doc);
    }

    #[test]
    fn errors_carry_field_and_line() {
        let text = "{\n  \"ambient_dim\": 2,\n  \"hyperplanes\": [\n    {\"normal\": [1, \"x\"], \"offset\": \"0\"}\n  ]\n}";
        let msg = ArrangementDocument::parse(text).unwrap_err().to_string();
        assert!(msg.contains("hyperplanes[0].normal[1]"), "{msg}");
        assert!(msg.contains("line 4"), "{msg}");

        let msg = ArrangementDocument::parse(r#"{"ambient_dim": 2, "hyperplanes": [{"normal": [1], "offset": "0"}]}"#)
            .unwrap_err()
            .to_string();
        assert!(msg.contains("hyperplanes[0].normal"), "{msg}");

        let msg = ArrangementDocument::parse(r#"{"ambient_dim": 1, "hyperplanes": [{"normal": [1], "offset": 0.5}]}"#)
            .unwrap_err()
            .to_string();
        assert!(msg.contains("floating-point"), "{msg}");

        assert!(ArrangementDocument::parse(r#"{"ambient_dim": 1, "hyperplanes": [{"normal": [1], "offset": "1/0"}]}"#).is_err());
        assert!(ArrangementDocument::parse(r#"{"ambient_dim": 1, "hyperplanes": [{"normal": [0], "offset": "1"}]}"#).is_err());
        assert!(ArrangementDocument::parse(r#"{"ambient_dim": 1, "hyperplanes": [], "labels": ["a"]}"#).is_err());
        assert!(ArrangementDocument::parse(r#"{"ambient_dim": 1, "hyperplanes": [], "extra": 1}"#).is_err());
    }

    #[test]
    fn duplicates_after_scaling_are_rejected() {
        let text = r#"{"ambient_dim": 2, "hyperplanes": [
            {"normal": [1, 1], "offset": "1"},
            {"normal": [2, 2], "offset": "2"}
        ]}"#;
        let msg = ArrangementDocument::parse(text).unwrap_err().to_string();
        assert!(msg.contains("hyperplanes[1]") && msg.contains("hyperplanes[0]"), "{msg}");
    }

    #[test]
    fn huge_entries_serialize_as_strings() {
        let text = r#"{"ambient_dim": 2, "hyperplanes": [
            {"normal": ["100000000000000000000", 1], "offset": "0"}
        ]}"#;
        let doc = ArrangementDocument::parse(text).unwrap();
        assert!(doc.to_json().contains(r#""100000000000000000000""#));
        assert_eq!(ArrangementDocument::parse(&doc.to_json()).unwrap(), doc);
    }
}
