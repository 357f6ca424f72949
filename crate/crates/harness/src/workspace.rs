//! The JSON workspace format: named groupoids, functors and transformations
//! over one base category.
//!
//! ```json
//! {
//!   "category": "finptset",
//!   "groupoids": {"Z2": {"B0": {"size": 1}, "B1": {"size": 2},
//!                       "d": [0, 0], "c": [0, 0], "e": [0], "m": [0, 1, 1, 0]}},
//!   "functors": {},
//!   "transformations": {}
//! }
//! ```
//!
//! Pointed-set objects are `{"size": n}` and morphisms are index arrays.
//! Vector-space objects are `{"dim": n}` and morphisms are row-major integer
//! matrices. `m` is listed over the composable pairs in the order the base
//! category enumerates the pullback of `c` and `d`; `i` may be omitted.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use grpd_core::{
    Category, Dim, FinPtSet, FpVect, Groupoid, InternalFunctor, InternalGroupoid, LawReport, NatTransformation,
    PtSet,
};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum WorkspaceError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("parse error in {field}: {message}")]
    Field { field: String, message: String },
    #[error("validation error in {entity}: {law} fails{}", witness.as_ref().map(|w| format!(" at {w}")).unwrap_or_default())]
    Validation {
        entity: String,
        law: String,
        witness: Option<String>,
    },
    #[error("unknown entity {0}")]
    UnknownEntity(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

type WsResult<T> = std::result::Result<T, WorkspaceError>;

fn field_error(field: &str, message: impl std::fmt::Display) -> WorkspaceError {
    WorkspaceError::Field {
        field: field.to_string(),
        message: message.to_string(),
    }
}

/// Text encoding of the objects and morphisms of a base category.
pub trait Codec: Category + Sync + Send {
    const TAG: &'static str;

    fn modulus(&self) -> Option<u32>;
    fn encode_obj(&self, o: &Self::Obj) -> Value;
    fn decode_obj(&self, v: &Value, field: &str) -> WsResult<Self::Obj>;
    fn encode_mor(&self, f: &Self::Mor) -> Value;
    fn decode_mor(&self, v: &Value, src: &Self::Obj, dst: &Self::Obj, field: &str) -> WsResult<Self::Mor>;
}

impl Codec for FinPtSet {
    const TAG: &'static str = "finptset";

    fn modulus(&self) -> Option<u32> {
        None
    }

    fn encode_obj(&self, o: &PtSet) -> Value {
        json!({ "size": o.0 })
    }

    fn decode_obj(&self, v: &Value, field: &str) -> WsResult<PtSet> {
        let n = v
            .get("size")
            .and_then(Value::as_u64)
            .ok_or_else(|| field_error(field, "expected {\"size\": n}"))?;
        PtSet::new(n as usize).map_err(|e| field_error(field, e))
    }

    fn encode_mor(&self, f: &grpd_core::PtMap) -> Value {
        json!(f.table())
    }

    fn decode_mor(&self, v: &Value, src: &PtSet, dst: &PtSet, field: &str) -> WsResult<grpd_core::PtMap> {
        let entries = v
            .as_array()
            .ok_or_else(|| field_error(field, "expected an index array"))?
            .iter()
            .map(|x| x.as_u64().map(|x| x as usize))
            .collect::<Option<Vec<usize>>>()
            .ok_or_else(|| field_error(field, "entries must be non-negative integers"))?;
        if entries.len() != src.0 {
            return Err(field_error(field, format!("expected {} entries, found {}", src.0, entries.len())));
        }
        self.map(dst.0, &entries).map_err(|e| field_error(field, e))
    }
}

impl Codec for FpVect {
    const TAG: &'static str = "fpvect";

    fn modulus(&self) -> Option<u32> {
        Some(FpVect::modulus(self))
    }

    fn encode_obj(&self, o: &Dim) -> Value {
        json!({ "dim": o.0 })
    }

    fn decode_obj(&self, v: &Value, field: &str) -> WsResult<Dim> {
        let n = v
            .get("dim")
            .and_then(Value::as_u64)
            .ok_or_else(|| field_error(field, "expected {\"dim\": n}"))?;
        Ok(Dim(n as usize))
    }

    fn encode_mor(&self, f: &grpd_core::Matrix) -> Value {
        json!(f.to_rows())
    }

    fn decode_mor(&self, v: &Value, src: &Dim, dst: &Dim, field: &str) -> WsResult<grpd_core::Matrix> {
        let rows = v
            .as_array()
            .ok_or_else(|| field_error(field, "expected a matrix as an array of rows"))?;
        if rows.len() != src.0 {
            return Err(field_error(field, format!("expected {} rows, found {}", src.0, rows.len())));
        }
        let rows = rows
            .iter()
            .map(|r| {
                r.as_array()
                    .filter(|r| r.len() == dst.0)
                    .and_then(|r| r.iter().map(Value::as_i64).collect::<Option<Vec<i64>>>())
            })
            .collect::<Option<Vec<Vec<i64>>>>()
            .ok_or_else(|| field_error(field, format!("every row needs {} integer entries", dst.0)))?;
        self.matrix(dst.0, &rows).map_err(|e| field_error(field, e))
    }
}

#[derive(Clone, Debug)]
pub struct NamedFunctor<C: Category> {
    pub src: String,
    pub dst: String,
    pub functor: InternalFunctor<C>,
}

#[derive(Clone, Debug)]
pub struct NamedTransformation<C: Category> {
    pub src: String,
    pub dst: String,
    pub cell: NatTransformation<C>,
}

/// Named entities over one base category.
#[derive(Clone, Debug)]
pub struct Entities<C: Category> {
    pub cat: C,
    pub groupoids: BTreeMap<String, Groupoid<C>>,
    pub functors: BTreeMap<String, NamedFunctor<C>>,
    pub transformations: BTreeMap<String, NamedTransformation<C>>,
}

impl<C: Codec> Entities<C> {
    pub fn new(cat: C) -> Self {
        Entities {
            cat,
            groupoids: BTreeMap::new(),
            functors: BTreeMap::new(),
            transformations: BTreeMap::new(),
        }
    }

    pub fn groupoid(&self, name: &str) -> WsResult<&Groupoid<C>> {
        self.groupoids
            .get(name)
            .ok_or_else(|| WorkspaceError::UnknownEntity(name.into()))
    }

    pub fn functor(&self, name: &str) -> WsResult<&InternalFunctor<C>> {
        self.functors
            .get(name)
            .map(|f| &f.functor)
            .ok_or_else(|| WorkspaceError::UnknownEntity(name.into()))
    }

    pub fn transformation(&self, name: &str) -> WsResult<&NatTransformation<C>> {
        self.transformations
            .get(name)
            .map(|t| &t.cell)
            .ok_or_else(|| WorkspaceError::UnknownEntity(name.into()))
    }

    fn name_of(&self, g: &Groupoid<C>) -> Option<String> {
        self.groupoids
            .iter()
            .find(|(_, h)| Arc::ptr_eq(h, g) || ***h == **g)
            .map(|(n, _)| n.clone())
    }

    /// Registers a groupoid; returns the name under which an equal groupoid
    /// is already present, if any.
    pub fn add_groupoid(&mut self, name: &str, g: &Groupoid<C>) -> String {
        if let Some(existing) = self.name_of(g) {
            return existing;
        }
        self.groupoids.insert(name.to_string(), g.clone());
        name.to_string()
    }

    /// Registers a functor together with its source and target.
    pub fn add_functor(&mut self, name: &str, f: &InternalFunctor<C>) {
        let src = self.add_groupoid(&format!("{name}.src"), &f.src);
        let dst = self.add_groupoid(&format!("{name}.dst"), &f.dst);
        self.functors.insert(
            name.to_string(),
            NamedFunctor {
                src,
                dst,
                functor: f.clone(),
            },
        );
    }

    pub fn add_transformation(&mut self, name: &str, alpha: &NatTransformation<C>) {
        let (src, dst) = (format!("{name}.src"), format!("{name}.dst"));
        self.add_functor(&src, &alpha.src);
        self.add_functor(&dst, &alpha.dst);
        self.transformations.insert(
            name.to_string(),
            NamedTransformation {
                src,
                dst,
                cell: alpha.clone(),
            },
        );
    }

    fn encode(&self) -> Document {
        let cat = &self.cat;
        let groupoids = self
            .groupoids
            .iter()
            .map(|(name, g)| {
                let doc = GroupoidDoc {
                    b0: cat.encode_obj(&g.b0),
                    b1: cat.encode_obj(&g.b1),
                    d: cat.encode_mor(&g.d),
                    c: cat.encode_mor(&g.c),
                    e: cat.encode_mor(&g.e),
                    m: cat.encode_mor(&g.m),
                    i: Some(cat.encode_mor(&g.i)),
                };
                (name.clone(), doc)
            })
            .collect();
        let functors = self
            .functors
            .iter()
            .map(|(name, f)| {
                let doc = FunctorDoc {
                    src: f.src.clone(),
                    dst: f.dst.clone(),
                    f0: cat.encode_mor(&f.functor.f0),
                    f1: cat.encode_mor(&f.functor.f1),
                };
                (name.clone(), doc)
            })
            .collect();
        let transformations = self
            .transformations
            .iter()
            .map(|(name, t)| {
                let doc = TransformationDoc {
                    src: t.src.clone(),
                    dst: t.dst.clone(),
                    alpha: cat.encode_mor(&t.cell.alpha),
                };
                (name.clone(), doc)
            })
            .collect();
        Document {
            category: C::TAG.to_string(),
            modulus: cat.modulus(),
            groupoids,
            functors,
            transformations,
        }
    }

    fn decode(cat: C, doc: &Document) -> WsResult<Self> {
        let mut out = Entities::new(cat);
        for (name, g) in &doc.groupoids {
            let groupoid = decode_groupoid(&out.cat, name, g)?;
            out.groupoids.insert(name.clone(), Arc::new(groupoid));
        }
        for (name, f) in &doc.functors {
            let field = format!("functors.{name}");
            let (a, b) = (out.groupoid(&f.src)?.clone(), out.groupoid(&f.dst)?.clone());
            let f0 = out.cat.decode_mor(&f.f0, &a.b0, &b.b0, &format!("{field}.F0"))?;
            let f1 = out.cat.decode_mor(&f.f1, &a.b1, &b.b1, &format!("{field}.F1"))?;
            let functor = InternalFunctor::new(a, b, f0, f1).map_err(|e| field_error(&field, e))?;
            check(&field, functor.validate())?;
            out.functors.insert(
                name.clone(),
                NamedFunctor {
                    src: f.src.clone(),
                    dst: f.dst.clone(),
                    functor,
                },
            );
        }
        for (name, t) in &doc.transformations {
            let field = format!("transformations.{name}");
            let (f, g) = (out.functor(&t.src)?.clone(), out.functor(&t.dst)?.clone());
            let alpha = out
                .cat
                .decode_mor(&t.alpha, &f.src.b0, &f.dst.b1, &format!("{field}.alpha"))?;
            let cell = NatTransformation::new(f, g, alpha).map_err(|e| field_error(&field, e))?;
            check(&field, cell.validate())?;
            out.transformations.insert(
                name.clone(),
                NamedTransformation {
                    src: t.src.clone(),
                    dst: t.dst.clone(),
                    cell,
                },
            );
        }
        Ok(out)
    }
}

fn check(entity: &str, report: LawReport) -> WsResult<()> {
    match report.failures().next() {
        None => Ok(()),
        Some(f) => Err(WorkspaceError::Validation {
            entity: entity.to_string(),
            law: f.law.clone(),
            witness: f.witness.clone(),
        }),
    }
}

fn decode_groupoid<C: Codec>(cat: &C, name: &str, g: &GroupoidDoc) -> WsResult<InternalGroupoid<C>> {
    let field = format!("groupoids.{name}");
    let at = |k: &str| format!("{field}.{k}");
    let b0 = cat.decode_obj(&g.b0, &at("B0"))?;
    let b1 = cat.decode_obj(&g.b1, &at("B1"))?;
    let d = cat.decode_mor(&g.d, &b1, &b0, &at("d"))?;
    let c = cat.decode_mor(&g.c, &b1, &b0, &at("c"))?;
    let e = cat.decode_mor(&g.e, &b0, &b1, &at("e"))?;
    let composable = cat.pullback(&c, &d).map_err(|e| field_error(&field, e))?;
    let m = cat.decode_mor(&g.m, &composable.apex, &b1, &at("m"))?;
    let i = g
        .i
        .as_ref()
        .map(|i| cat.decode_mor(i, &b1, &b1, &at("i")))
        .transpose()?;
    let groupoid = InternalGroupoid::new(cat.clone(), b0, b1, d, c, e, m, i).map_err(|e| match e {
        grpd_core::Error::NotAGroupoid(w) => WorkspaceError::Validation {
            entity: field.clone(),
            law: "inverses".into(),
            witness: Some(w),
        },
        other => field_error(&field, other),
    })?;
    check(&field, groupoid.validate())?;
    Ok(groupoid)
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Document {
    category: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    modulus: Option<u32>,
    #[serde(default)]
    groupoids: BTreeMap<String, GroupoidDoc>,
    #[serde(default)]
    functors: BTreeMap<String, FunctorDoc>,
    #[serde(default)]
    transformations: BTreeMap<String, TransformationDoc>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupoidDoc {
    #[serde(rename = "B0")]
    b0: Value,
    #[serde(rename = "B1")]
    b1: Value,
    d: Value,
    c: Value,
    e: Value,
    m: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    i: Option<Value>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FunctorDoc {
    src: String,
    dst: String,
    #[serde(rename = "F0")]
    f0: Value,
    #[serde(rename = "F1")]
    f1: Value,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TransformationDoc {
    src: String,
    dst: String,
    alpha: Value,
}

/// A loaded workspace.
#[derive(Clone, Debug)]
pub enum Workspace {
    PtSets(Entities<FinPtSet>),
    Vect(Entities<FpVect>),
}

impl Workspace {
    pub fn empty_ptsets() -> Self {
        Workspace::PtSets(Entities::new(FinPtSet::new()))
    }

    pub fn parse(text: &str) -> WsResult<Self> {
        let doc: Document = serde_json::from_str(text).map_err(|e| WorkspaceError::Syntax {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        match doc.category.as_str() {
            "finptset" => Ok(Workspace::PtSets(Entities::decode(FinPtSet::new(), &doc)?)),
            "fpvect" => {
                let p = doc.modulus.unwrap_or(2);
                let cat = FpVect::new(p).map_err(|e| field_error("modulus", e))?;
                Ok(Workspace::Vect(Entities::decode(cat, &doc)?))
            }
            other => Err(field_error("category", format!("unknown category {other:?}"))),
        }
    }

    pub fn load(path: impl AsRef<Path>) -> WsResult<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    /// The canonical text: pretty JSON with sorted names and explicit `i`.
    pub fn to_json(&self) -> String {
        let doc = match self {
            Workspace::PtSets(e) => e.encode(),
            Workspace::Vect(e) => e.encode(),
        };
        let mut text = serde_json::to_string_pretty(&doc).expect("documents serialize");
        text.push('\n');
        text
    }

    pub fn save(&self, path: impl AsRef<Path>) -> WsResult<()> {
        std::fs::write(path, self.to_json())?;
        Ok(())
    }

    pub fn counts(&self) -> (usize, usize, usize) {
        match self {
            Workspace::PtSets(e) => (e.groupoids.len(), e.functors.len(), e.transformations.len()),
            Workspace::Vect(e) => (e.groupoids.len(), e.functors.len(), e.transformations.len()),
        }
    }
}

impl From<Entities<FinPtSet>> for Workspace {
    fn from(e: Entities<FinPtSet>) -> Self {
        Workspace::PtSets(e)
    }
}

impl From<Entities<FpVect>> for Workspace {
    fn from(e: Entities<FpVect>) -> Self {
        Workspace::Vect(e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use grpd_core::fixtures::{z2_to_z4, z4};

    #[test]
    fn empty_workspace() {
        let ws = Workspace::parse(r#"{"category": "finptset"}"#).unwrap();
        assert_eq!(ws.counts(), (0, 0, 0));
    }

    #[test]
    fn round_trip() {
        let mut e = Entities::new(FinPtSet::new());
        e.add_functor("double", &z2_to_z4());
        let ws = Workspace::from(e);
        let text = ws.to_json();
        let back = Workspace::parse(&text).unwrap();
        assert_eq!(back.to_json(), text);
        assert_eq!(back.counts(), (2, 1, 0));
    }

    #[test]
    fn syntax_errors_carry_a_line() {
        let err = Workspace::parse("{\n  \"category\": \"finptset\",\n  oops\n}").unwrap_err();
        assert!(matches!(err, WorkspaceError::Syntax { line: 3, .. }), "{err}");
    }

    #[test]
    fn field_errors_name_the_field() {
        let text = r#"{"category": "finptset", "groupoids": {"G": {"B0": {"size": 1}, "B1": {"size": 2},
            "d": [0, 0], "c": [0, 0], "e": [0], "m": [0, 1, 1]}}}"#;
        match Workspace::parse(text).unwrap_err() {
            WorkspaceError::Field { field, .. } => assert_eq!(field, "groupoids.G.m"),
            other => panic!("{other}"),
        }
    }

    #[test]
    fn broken_associativity_is_reported() {
        let mut e = Entities::new(FinPtSet::new());
        e.add_groupoid("Z4", &Arc::new(z4()));
        let mut doc: Value = serde_json::from_str(&Workspace::from(e).to_json()).unwrap();
        // swap two products so that the unit laws survive but associativity breaks
        let m = doc["groupoids"]["Z4"]["m"].as_array_mut().unwrap();
        let (x, y) = (5, 6);
        let (a, b) = (m[x].clone(), m[y].clone());
        m[x] = b;
        m[y] = a;
        match Workspace::parse(&doc.to_string()).unwrap_err() {
            WorkspaceError::Validation { law, witness, .. } => {
                assert_eq!(law, "associativity", "{witness:?}");
                assert!(witness.is_some());
            }
            other => panic!("{other}"),
        }
    }

    #[test]
    fn unknown_references_are_rejected() {
        let text = r#"{"category": "finptset", "functors": {"F": {"src": "A", "dst": "B", "F0": [0], "F1": [0]}}}"#;
        assert!(matches!(Workspace::parse(text), Err(WorkspaceError::UnknownEntity(_))));
    }

    #[test]
    fn vector_space_workspaces() {
        let cat = FpVect::new(3).unwrap();
        let boundary = cat.matrix(2, &[vec![1, 2]]).unwrap();
        let g = Arc::new(grpd_core::fpvect::complex_to_groupoid(&cat, &boundary).unwrap());
        let mut e = Entities::new(cat);
        e.add_groupoid("C", &g);
        let text = Workspace::from(e).to_json();
        assert!(text.contains("\"modulus\": 3"));
        assert_eq!(Workspace::parse(&text).unwrap().to_json(), text);
    }
}
