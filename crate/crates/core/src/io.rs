//! JSON files describing a structure by its basis, structure constants and
//! named even maps.
//!
//! ```json
//! {
//!   "name": "right_alt3",
//!   "kind": "hom_superalgebra",
//!   "convention": "unit",
//!   "basis": [{"name": "i", "parity": 0}, {"name": "j", "parity": 1}],
//!   "binary": [["j", "j", "i", "2"]],
//!   "ternary": [],
//!   "maps": {"beta": [["2", "0"], ["0", "1"]]},
//!   "twist": "id"
//! }
//! ```
//!
//! Each `binary` entry `[a, b, c, q]` says the product of `a` and `b` has
//! coordinate `q` along `c`; `ternary` entries carry one more input.
//! Rationals are strings in lowest terms such as `"-3/2"`.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::FileError;
use crate::graded::{EvenMap, Matrix, Parity, Scalar, SuperSpace};
use crate::identity::StructureBinding;
use crate::structures::{
    BinaryStructure, Convention, HomBinaryTernary, HomSuperalgebra, HomTripleSystem,
    TernaryStructure,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyStructure {
    Algebra(HomSuperalgebra),
    Triple(HomTripleSystem),
    BinaryTernary(HomBinaryTernary),
}

impl AnyStructure {
    pub fn kind(&self) -> &'static str {
        match self {
            AnyStructure::Algebra(_) => "hom_superalgebra",
            AnyStructure::Triple(_) => "hom_triple",
            AnyStructure::BinaryTernary(_) => "hom_binary_ternary",
        }
    }

    pub fn space(&self) -> &SuperSpace {
        match self {
            AnyStructure::Algebra(a) => a.space(),
            AnyStructure::Triple(t) => t.space(),
            AnyStructure::BinaryTernary(b) => b.space(),
        }
    }

    pub fn twist(&self) -> &EvenMap {
        match self {
            AnyStructure::Algebra(a) => a.twist(),
            AnyStructure::Triple(t) => t.twist(),
            AnyStructure::BinaryTernary(b) => b.twist(),
        }
    }

    fn binary(&self) -> Option<&BinaryStructure> {
        match self {
            AnyStructure::Algebra(a) => Some(a.product()),
            AnyStructure::Triple(_) => None,
            AnyStructure::BinaryTernary(b) => Some(b.binary()),
        }
    }

    fn ternary(&self) -> Option<&TernaryStructure> {
        match self {
            AnyStructure::Algebra(_) => None,
            AnyStructure::Triple(t) => Some(t.product()),
            AnyStructure::BinaryTernary(b) => Some(b.ternary()),
        }
    }

    /// Symbol binding for the identity checker.
    pub fn binding(&self, conv: Convention) -> StructureBinding {
        match self {
            AnyStructure::Algebra(a) => StructureBinding::for_algebra(a, conv),
            AnyStructure::Triple(t) => StructureBinding::for_triple(t).with_convention(conv),
            AnyStructure::BinaryTernary(b) => {
                StructureBinding::for_binary_ternary(b).with_convention(conv)
            }
        }
    }
}

/// A structure together with its name, convention and auxiliary maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedStructure {
    pub name: String,
    pub convention: Convention,
    pub structure: AnyStructure,
    pub maps: BTreeMap<String, EvenMap>,
}

impl NamedStructure {
    pub fn new(name: impl Into<String>, structure: AnyStructure) -> NamedStructure {
        NamedStructure {
            name: name.into(),
            convention: Convention::default(),
            structure,
            maps: BTreeMap::new(),
        }
    }

    pub fn with_convention(mut self, conv: Convention) -> NamedStructure {
        self.convention = conv;
        self
    }

    pub fn binding(&self) -> StructureBinding {
        self.structure.binding(self.convention)
    }

    pub fn map(&self, name: &str) -> Result<&EvenMap, FileError> {
        self.maps
            .get(name)
            .ok_or_else(|| FileError::UnknownReference {
                field: "maps".into(),
                name: name.into(),
            })
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BasisEntry {
    name: String,
    parity: u8,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraFile {
    name: String,
    kind: String,
    #[serde(default = "default_convention")]
    convention: String,
    basis: Vec<BasisEntry>,
    #[serde(default)]
    binary: Vec<Vec<String>>,
    #[serde(default)]
    ternary: Vec<Vec<String>>,
    #[serde(default)]
    maps: BTreeMap<String, Vec<Vec<String>>>,
    #[serde(default = "default_twist")]
    twist: String,
}

fn default_convention() -> String {
    "unit".into()
}

fn default_twist() -> String {
    "id".into()
}

fn field_err(field: impl Into<String>, message: impl Into<String>) -> FileError {
    FileError::Field {
        field: field.into(),
        message: message.into(),
    }
}

fn parse_rational(field: &str, s: &str) -> Result<Scalar, FileError> {
    s.trim()
        .parse::<Scalar>()
        .map_err(|_| field_err(field, format!("`{s}` is not a rational number")))
}

fn parity_name(p: Parity) -> &'static str {
    if p.is_odd() {
        "odd"
    } else {
        "even"
    }
}

/// Reads `entries` into an N-linear tensor, checking names and grading.
fn read_tensor<const N: usize>(
    field: &str,
    space: &SuperSpace,
    entries: &[Vec<String>],
) -> Result<crate::structures::Tensor<N>, FileError> {
    let mut t = crate::structures::Tensor::<N>::zero(space.clone());
    let mut seen = std::collections::BTreeSet::new();
    for (n, entry) in entries.iter().enumerate() {
        let here = format!("{field}[{n}]");
        if entry.len() != N + 2 {
            return Err(field_err(
                here,
                format!("expected {} inputs, a target and a coefficient", N),
            ));
        }
        let lookup = |name: &String| {
            space
                .index_of(name)
                .ok_or_else(|| FileError::UnknownReference {
                    field: here.clone(),
                    name: name.clone(),
                })
        };
        let mut key = [0usize; N];
        for (slot, name) in key.iter_mut().zip(&entry[..N]) {
            *slot = lookup(name)?;
        }
        let target = lookup(&entry[N])?;
        let coeff = parse_rational(&here, &entry[N + 1])?;
        if !seen.insert((key, target)) {
            return Err(field_err(here, "duplicate entry"));
        }
        let expected = key
            .iter()
            .fold(Parity::Even, |acc, &i| acc + space.parity(i));
        if space.parity(target) != expected && !num_traits::Zero::is_zero(&coeff) {
            let inputs: Vec<String> = key
                .iter()
                .map(|&i| format!("{} ({})", space.name(i), parity_name(space.parity(i))))
                .collect();
            return Err(field_err(
                here,
                format!(
                    "grading violated: the product of {} is {} but has a component along {} ({})",
                    inputs.join(", "),
                    parity_name(expected),
                    space.name(target),
                    parity_name(space.parity(target))
                ),
            ));
        }
        let mut value = t.constant(key);
        value.add_coord(target, coeff);
        t.set(key, value);
    }
    Ok(t)
}

fn read_map(field: &str, space: &SuperSpace, rows: &[Vec<String>]) -> Result<EvenMap, FileError> {
    let rows = rows
        .iter()
        .map(|r| r.iter().map(|s| parse_rational(field, s)).collect())
        .collect::<Result<Vec<Vec<Scalar>>, _>>()?;
    let m = Matrix::from_rows(rows).map_err(|e| field_err(field, e.to_string()))?;
    EvenMap::new(space, m).map_err(|e| field_err(field, e.to_string()))
}

fn from_file(f: AlgebraFile) -> Result<NamedStructure, FileError> {
    let mut basis = Vec::with_capacity(f.basis.len());
    for (n, b) in f.basis.iter().enumerate() {
        let p = match b.parity {
            0 => Parity::Even,
            1 => Parity::Odd,
            other => {
                return Err(field_err(
                    format!("basis[{n}].parity"),
                    format!("parity must be 0 or 1, got {other}"),
                ))
            }
        };
        basis.push((b.name.clone(), p));
    }
    let space = SuperSpace::new(basis).map_err(|e| field_err("basis", e.to_string()))?;
    let convention = Convention::from_name(&f.convention)
        .ok_or_else(|| field_err("convention", "expected \"unit\" or \"half\""))?;
    let mut maps = BTreeMap::new();
    for (name, rows) in &f.maps {
        maps.insert(
            name.clone(),
            read_map(&format!("maps.{name}"), &space, rows)?,
        );
    }
    let twist = if f.twist == "id" {
        EvenMap::identity(&space)
    } else {
        maps.get(&f.twist)
            .cloned()
            .ok_or_else(|| FileError::UnknownReference {
                field: "twist".into(),
                name: f.twist.clone(),
            })?
    };
    let binary = read_tensor::<2>("binary", &space, &f.binary)?;
    let ternary = read_tensor::<3>("ternary", &space, &f.ternary)?;
    let structure = match f.kind.as_str() {
        "hom_superalgebra" => {
            if !f.ternary.is_empty() {
                return Err(field_err("ternary", "a hom_superalgebra has no ternary product"));
            }
            AnyStructure::Algebra(HomSuperalgebra::new(binary, twist)?)
        }
        "hom_triple" => {
            if !f.binary.is_empty() {
                return Err(field_err("binary", "a hom_triple has no binary product"));
            }
            AnyStructure::Triple(HomTripleSystem::new(ternary, twist)?)
        }
        "hom_binary_ternary" => {
            AnyStructure::BinaryTernary(HomBinaryTernary::new(binary, ternary, twist)?)
        }
        other => {
            return Err(field_err(
                "kind",
                format!(
                    "unknown kind `{other}` (expected hom_superalgebra, hom_triple or hom_binary_ternary)"
                ),
            ))
        }
    };
    Ok(NamedStructure {
        name: f.name,
        convention,
        structure,
        maps,
    })
}

fn write_tensor<const N: usize>(t: &crate::structures::Tensor<N>) -> Vec<Vec<String>> {
    let space = t.space();
    let mut out = Vec::new();
    for (key, value) in t.entries() {
        for (target, c) in value.support() {
            let mut row: Vec<String> = key.iter().map(|&i| space.name(i).to_string()).collect();
            row.push(space.name(target).to_string());
            row.push(c.to_string());
            out.push(row);
        }
    }
    out
}

fn write_map(m: &EvenMap) -> Vec<Vec<String>> {
    m.matrix()
        .rows()
        .into_iter()
        .map(|r| r.iter().map(|c| c.to_string()).collect())
        .collect()
}

fn to_file(s: &NamedStructure) -> AlgebraFile {
    let space = s.structure.space();
    let mut maps: BTreeMap<String, Vec<Vec<String>>> = s
        .maps
        .iter()
        .map(|(k, v)| (k.clone(), write_map(v)))
        .collect();
    let twist = s.structure.twist();
    let twist_name = if twist.is_identity() {
        "id".to_string()
    } else if let Some((name, _)) = s.maps.iter().find(|(_, m)| *m == twist) {
        name.clone()
    } else {
        let mut name = "twist".to_string();
        let mut n = 1;
        while maps.contains_key(&name) {
            name = format!("twist_{n}");
            n += 1;
        }
        maps.insert(name.clone(), write_map(twist));
        name
    };
    AlgebraFile {
        name: s.name.clone(),
        kind: s.structure.kind().into(),
        convention: s.convention.name().into(),
        basis: space
            .basis()
            .iter()
            .map(|b| BasisEntry {
                name: b.name.clone(),
                parity: b.parity.bit(),
            })
            .collect(),
        binary: s.structure.binary().map(write_tensor).unwrap_or_default(),
        ternary: s.structure.ternary().map(write_tensor).unwrap_or_default(),
        maps,
        twist: twist_name,
    }
}

/// Parses a structure from JSON text.
pub fn from_json(text: &str) -> Result<NamedStructure, FileError> {
    let f: AlgebraFile = serde_json::from_str(text).map_err(|e| FileError::Json {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    from_file(f)
}

/// Canonical JSON text: entries in basis order, rationals in lowest terms.
pub fn to_json(s: &NamedStructure) -> String {
    let mut text = serde_json::to_string_pretty(&to_file(s)).expect("serializable");
    text.push('\n');
    text
}

pub fn load(path: impl AsRef<Path>) -> Result<NamedStructure, FileError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| FileError::Io {
        path: path.display().to_string(),
        source,
    })?;
    from_json(&text)
}

pub fn save(s: &NamedStructure, path: impl AsRef<Path>) -> Result<(), FileError> {
    let path = path.as_ref();
    fs::write(path, to_json(s)).map_err(|source| FileError::Io {
        path: path.display().to_string(),
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin::builtin_example;
    use crate::graded::int;

    #[test]
    fn round_trip_all_examples() {
        for name in [
            "maltsev_bol3",
            "right_alt3",
            "right_alt3_bol",
            "right_alt3_hombol(2,3)",
            "right_alt3_twisted(2)",
            "jordan_form_triple(-2)",
            "gl11",
        ] {
            let s = builtin_example(name).unwrap();
            let text = to_json(&s);
            assert_eq!(from_json(&text).unwrap(), s, "{name}");
            assert_eq!(to_json(&from_json(&text).unwrap()), text);
        }
    }

    #[test]
    fn twist_not_among_maps_is_stored() {
        let mut s = builtin_example("right_alt3_hombol(2,3)").unwrap();
        s.maps.clear();
        let text = to_json(&s);
        assert!(text.contains("\"twist\": \"twist\""));
        assert_eq!(from_json(&text).unwrap(), s_with_twist_map(s));
    }

    fn s_with_twist_map(mut s: NamedStructure) -> NamedStructure {
        s.maps.insert("twist".into(), s.structure.twist().clone());
        s
    }

    #[test]
    fn grading_error_names_the_entry() {
        let text = r#"{"name":"bad","kind":"hom_superalgebra",
            "basis":[{"name":"i","parity":0},{"name":"j","parity":1}],
            "binary":[["i","j","i","1"]]}"#;
        match from_json(text) {
            Err(FileError::Field { field, message }) => {
                assert_eq!(field, "binary[0]");
                assert!(message.contains("grading"), "{message}");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn rational_coefficient() {
        let text = r#"{"name":"m","kind":"hom_superalgebra",
            "basis":[{"name":"i","parity":0},{"name":"j","parity":1},{"name":"k","parity":1}],
            "binary":[["j","k","i","6"],["k","j","i","-3/6"]]}"#;
        let s = from_json(text).unwrap();
        let AnyStructure::Algebra(a) = &s.structure else {
            panic!()
        };
        assert_eq!(a.product().constant([1, 2]).coord(0), int(6));
        assert_eq!(
            a.product().constant([2, 1]).coord(0),
            crate::graded::rat(-1, 2)
        );
        assert!(to_json(&s).contains("\"-1/2\""));
    }

    #[test]
    fn errors() {
        assert!(matches!(from_json("{"), Err(FileError::Json { .. })));
        let unknown = r#"{"name":"m","kind":"hom_superalgebra",
            "basis":[{"name":"i","parity":0}],"binary":[["i","q","i","1"]]}"#;
        assert!(matches!(
            from_json(unknown),
            Err(FileError::UnknownReference { .. })
        ));
        let twist = r#"{"name":"m","kind":"hom_superalgebra",
            "basis":[{"name":"i","parity":0}],"twist":"beta"}"#;
        assert!(matches!(
            from_json(twist),
            Err(FileError::UnknownReference { .. })
        ));
        let bad_q = r#"{"name":"m","kind":"hom_superalgebra",
            "basis":[{"name":"i","parity":0}],"binary":[["i","i","i","x"]]}"#;
        assert!(matches!(from_json(bad_q), Err(FileError::Field { .. })));
    }
}
