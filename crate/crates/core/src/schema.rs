//! JSON definition-file schemas. All exact scalars travel as strings in the
//! scalar text syntax (never as native numbers), so nothing is lost and any
//! language can parse the files. Serialization is deterministic: struct
//! fields in declaration order, canonical scalar strings, two-space pretty
//! printing with a trailing newline.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::action::ActionSpec;
use crate::commalg::{FPCommAlgebra, TermOrder};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::hopf::HopfAlgebraData;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct FieldDoc {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
}

impl FieldDoc {
    pub fn from_field(f: &FieldSpec) -> FieldDoc {
        match f {
            FieldSpec::Rational => FieldDoc {
                kind: "rational".into(),
                p: None,
                n: None,
            },
            FieldSpec::PrimeField(p) => FieldDoc {
                kind: "prime_field".into(),
                p: Some(*p),
                n: None,
            },
            FieldSpec::Cyclotomic(n) => FieldDoc {
                kind: "cyclotomic".into(),
                p: None,
                n: Some(*n),
            },
        }
    }

    pub fn to_field(&self) -> Result<FieldSpec> {
        match self.kind.as_str() {
            "rational" => Ok(FieldSpec::Rational),
            "prime_field" => {
                let p = self
                    .p
                    .ok_or_else(|| Error::parse("field.p required for prime_field"))?;
                FieldSpec::prime(p)
            }
            "cyclotomic" => {
                let n = self
                    .n
                    .ok_or_else(|| Error::parse("field.n required for cyclotomic"))?;
                FieldSpec::cyclotomic(n)
            }
            other => Err(Error::parse(format!(
                "unknown field kind '{other}' (expected rational, prime_field or cyclotomic)"
            ))),
        }
    }
}

/// Hopf algebra definition file.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct HopfDoc {
    pub field: FieldDoc,
    pub dim: usize,
    pub basis: Vec<String>,
    pub mult: Vec<Vec<Vec<String>>>,
    pub unit: Vec<String>,
    pub comult: Vec<Vec<String>>,
    pub counit: Vec<String>,
    pub antipode: Vec<Vec<String>>,
}

pub fn hopf_to_doc(h: &HopfAlgebraData) -> HopfDoc {
    let s = |x: &Scalar| x.to_string();
    HopfDoc {
        field: FieldDoc::from_field(h.field()),
        dim: h.dim(),
        basis: h.basis_names().to_vec(),
        mult: h
            .mult_table()
            .iter()
            .map(|row| row.iter().map(|v| v.iter().map(s).collect()).collect())
            .collect(),
        unit: h.unit_vec().iter().map(s).collect(),
        comult: h
            .comult_table()
            .iter()
            .map(|v| v.iter().map(s).collect())
            .collect(),
        counit: h.counit_vec().iter().map(s).collect(),
        antipode: h
            .antipode_table()
            .iter()
            .map(|v| v.iter().map(s).collect())
            .collect(),
    }
}

pub fn hopf_from_doc(doc: &HopfDoc) -> Result<HopfAlgebraData> {
    let field = doc.field.to_field()?;
    if doc.basis.len() != doc.dim {
        return Err(Error::parse(format!(
            "basis has {} names but dim = {}",
            doc.basis.len(),
            doc.dim
        )));
    }
    let parse_vec = |entries: &[String], what: String| -> Result<Vec<Scalar>> {
        entries
            .iter()
            .enumerate()
            .map(|(k, raw)| {
                field
                    .parse_scalar(raw)
                    .map_err(|e| Error::parse(format!("{what}[{k}]: {e}")))
            })
            .collect()
    };
    let mult = doc
        .mult
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, v)| parse_vec(v, format!("mult[{i}][{j}]")))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let unit = parse_vec(&doc.unit, "unit".into())?;
    let comult = doc
        .comult
        .iter()
        .enumerate()
        .map(|(i, v)| parse_vec(v, format!("comult[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    let counit = parse_vec(&doc.counit, "counit".into())?;
    let antipode = doc
        .antipode
        .iter()
        .enumerate()
        .map(|(i, v)| parse_vec(v, format!("antipode[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    HopfAlgebraData::build_from_tables(
        field,
        doc.basis.clone(),
        mult,
        unit,
        comult,
        counit,
        antipode,
    )
}

/// Finitely presented commutative algebra definition file.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct AlgebraDoc {
    pub field: FieldDoc,
    pub vars: Vec<String>,
    pub relations: Vec<String>,
    /// `grevlex` (default) or `lex`
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<String>,
}

pub fn algebra_to_doc(a: &FPCommAlgebra) -> AlgebraDoc {
    AlgebraDoc {
        field: FieldDoc::from_field(a.field()),
        vars: a.var_names().to_vec(),
        relations: a.relations().iter().map(|r| a.display(r)).collect(),
        order: match a.order() {
            TermOrder::GrevLex => None,
            TermOrder::Lex => Some("lex".into()),
        },
    }
}

pub fn algebra_from_doc(doc: &AlgebraDoc) -> Result<FPCommAlgebra> {
    let field = doc.field.to_field()?;
    let order = match doc.order.as_deref() {
        None | Some("grevlex") => TermOrder::GrevLex,
        Some("lex") => TermOrder::Lex,
        Some(other) => {
            return Err(Error::parse(format!(
                "unknown term order '{other}' (expected grevlex or lex)"
            )))
        }
    };
    let relations = doc
        .relations
        .iter()
        .enumerate()
        .map(|(k, raw)| {
            crate::commalg::parse_poly(&field, &doc.vars, raw)
                .map_err(|e| Error::parse(format!("relations[{k}]: {e}")))
        })
        .collect::<Result<Vec<_>>>()?;
    FPCommAlgebra::new(field, doc.vars.clone(), order, relations)
}

/// Either a basis name or a raw basis index.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum NameOrIndex {
    Index(usize),
    Name(String),
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ActionEntryDoc {
    pub basis: NameOrIndex,
    pub var: String,
    pub value: String,
}

/// Action definition file: a total map (Hopf basis element, variable) ->
/// polynomial. The `hopf` and `algebra` fields are informational references
/// to the files this action is meant for.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ActionDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hopf: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<String>,
    pub action: Vec<ActionEntryDoc>,
}

pub fn action_to_doc(
    h: &crate::hopf::VerifiedHopf,
    a: &FPCommAlgebra,
    spec: &ActionSpec,
    hopf_ref: Option<String>,
    algebra_ref: Option<String>,
) -> ActionDoc {
    let action = spec
        .entries()
        .iter()
        .map(|((i, v), poly)| ActionEntryDoc {
            basis: NameOrIndex::Name(h.basis_names()[*i].clone()),
            var: a.var_names()[*v].clone(),
            value: a.display(poly),
        })
        .collect();
    ActionDoc {
        hopf: hopf_ref,
        algebra: algebra_ref,
        action,
    }
}

pub fn action_from_doc(
    doc: &ActionDoc,
    h: &crate::hopf::VerifiedHopf,
    a: &FPCommAlgebra,
) -> Result<ActionSpec> {
    let mut entries = BTreeMap::new();
    for (k, entry) in doc.action.iter().enumerate() {
        let i = match &entry.basis {
            NameOrIndex::Index(i) => {
                if *i >= h.dim() {
                    return Err(Error::parse(format!(
                        "action[{k}].basis index {i} out of range (dim {})",
                        h.dim()
                    )));
                }
                *i
            }
            NameOrIndex::Name(name) => h.basis_index(name).ok_or_else(|| {
                Error::parse(format!("action[{k}].basis: unknown basis name '{name}'"))
            })?,
        };
        let v = a
            .var_names()
            .iter()
            .position(|n| n == &entry.var)
            .ok_or_else(|| {
                Error::parse(format!("action[{k}].var: unknown variable '{}'", entry.var))
            })?;
        let value = a
            .parse(&entry.value)
            .map_err(|e| Error::parse(format!("action[{k}].value: {e}")))?;
        if entries.insert((i, v), value).is_some() {
            return Err(Error::parse(format!(
                "action[{k}]: duplicate pair ({}, {})",
                h.basis_names()[i],
                entry.var
            )));
        }
    }
    ActionSpec::new(h, a, entries)
}

/// Deterministic pretty JSON with a trailing newline.
pub fn to_json_string<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)
        .map_err(|e| Error::parse(format!("serialization failed: {e}")))?;
    s.push('\n');
    Ok(s)
}

pub fn from_json_str<'a, T: Deserialize<'a>>(raw: &'a str) -> Result<T> {
    serde_json::from_str(raw).map_err(|e| Error::parse(format!("invalid JSON: {e}")))
}
