//! System files.
//!
//! ```json
//! { "name": "s2", "kind": "lts", "dim": 2, "basis": ["e", "f"],
//!   "entries": [ { "args": [0, 1, 0], "value": { "0": "2" } } ] }
//! ```
//!
//! Omitted entries are zero and nothing is completed by symmetry.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};
use triplex::lts::{lts_from_lie, Entry, LieAlgebra, TripleSystem};
use triplex::Scalar;

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Lts,
    Lie,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemFile {
    pub name: String,
    pub kind: Kind,
    pub dim: usize,
    pub basis: Vec<String>,
    pub entries: Vec<EntryFile>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EntryFile {
    pub args: Vec<usize>,
    pub value: BTreeMap<String, String>,
}

/// A loaded and validated system.
#[derive(Clone, Debug)]
pub enum System {
    Lts(TripleSystem),
    Lie(LieAlgebra),
}

impl System {
    pub fn name(&self) -> &str {
        match self {
            System::Lts(t) => t.name(),
            System::Lie(l) => l.name(),
        }
    }

    /// The triple system itself, or `[[x,y],z]` on a Lie algebra.
    pub fn to_lts(&self) -> Result<TripleSystem, CliError> {
        match self {
            System::Lts(t) => Ok(t.clone()),
            System::Lie(l) => Ok(lts_from_lie(l)?),
        }
    }
}

/// 1-based line of the `k`-th `"args"` key, for error messages.
fn entry_line(text: &str, k: usize) -> Option<usize> {
    let (offset, _) = text.match_indices("\"args\"").nth(k)?;
    Some(text[..offset].lines().count().max(1))
}

fn entry_error(path: &str, text: &str, k: usize, message: impl std::fmt::Display) -> CliError {
    let place = match entry_line(text, k) {
        Some(line) => format!("line {line} (entry {k})"),
        None => format!("entry {k}"),
    };
    CliError::Load { path: path.into(), message: format!("{place}: {message}") }
}

/// Parses and validates system text. `path` is only used in messages.
pub fn parse_system(path: &str, text: &str) -> Result<System, CliError> {
    let file: SystemFile = serde_json::from_str(text).map_err(|e| CliError::Load {
        path: path.into(),
        message: format!("line {} column {}: {e}", e.line(), e.column()),
    })?;
    let load_err = |message: String| CliError::Load { path: path.into(), message };
    if file.dim == 0 {
        return Err(load_err("\"dim\" must be at least 1".into()));
    }
    if file.basis.len() != file.dim {
        return Err(load_err(format!("\"basis\" has {} labels but \"dim\" is {}", file.basis.len(), file.dim)));
    }
    let mut seen = std::collections::BTreeSet::new();
    for (i, b) in file.basis.iter().enumerate() {
        let ok = b.chars().next().is_some_and(|c| c.is_alphabetic() || c == '_')
            && b.chars().all(|c| c.is_alphanumeric() || c == '_');
        if !ok {
            return Err(load_err(format!("basis label {i} ({b:?}) is not an identifier")));
        }
        if !seen.insert(b) {
            return Err(load_err(format!("basis label {b:?} is repeated")));
        }
    }
    let arity = match file.kind {
        Kind::Lts => 3,
        Kind::Lie => 2,
    };
    let mut parsed = Vec::with_capacity(file.entries.len());
    for (k, entry) in file.entries.iter().enumerate() {
        if entry.args.len() != arity {
            return Err(entry_error(path, text, k, format!("expected {arity} arguments, found {}", entry.args.len())));
        }
        if let Some(&a) = entry.args.iter().find(|&&a| a >= file.dim) {
            return Err(entry_error(path, text, k, format!("argument {a} out of range for dimension {}", file.dim)));
        }
        let mut value = Vec::with_capacity(entry.value.len());
        for (idx, q) in &entry.value {
            let i: usize = idx.parse().map_err(|_| entry_error(path, text, k, format!("bad output index {idx:?}")))?;
            if i >= file.dim {
                return Err(entry_error(path, text, k, format!("output index {i} out of range")));
            }
            let c: Scalar = q.parse().map_err(|e| entry_error(path, text, k, e))?;
            value.push((i, c));
        }
        parsed.push((entry.args.clone(), value));
    }
    let system = match file.kind {
        Kind::Lts => {
            let entries = parsed.into_iter().map(|(a, v)| -> Entry<3> { ([a[0], a[1], a[2]], v) });
            System::Lts(TripleSystem::new(file.name, file.basis, entries)?)
        }
        Kind::Lie => {
            let entries = parsed.into_iter().map(|(a, v)| -> Entry<2> { ([a[0], a[1]], v) });
            let l = LieAlgebra::new(file.name, file.basis, entries)?;
            l.validate()?;
            System::Lie(l)
        }
    };
    Ok(system)
}

pub fn load_system(path: impl AsRef<Path>) -> Result<System, CliError> {
    let p = path.as_ref();
    let shown = p.display().to_string();
    let text = std::fs::read_to_string(p).map_err(|e| CliError::Load { path: shown.clone(), message: e.to_string() })?;
    parse_system(&shown, &text)
}

fn value_map(v: &triplex::SparseVector) -> BTreeMap<String, String> {
    v.iter().map(|(i, c)| (i.to_string(), c.to_string())).collect()
}

pub fn lts_file(t: &TripleSystem) -> SystemFile {
    SystemFile {
        name: t.name().into(),
        kind: Kind::Lts,
        dim: t.dim(),
        basis: t.basis_names().to_vec(),
        entries: t
            .entries()
            .into_iter()
            .map(|(args, value)| EntryFile {
                args: args.to_vec(),
                value: value.into_iter().map(|(i, c)| (i.to_string(), c.to_string())).collect(),
            })
            .collect(),
    }
}

pub fn lie_file(l: &LieAlgebra) -> SystemFile {
    let d = l.dim();
    let mut entries = Vec::new();
    for i in 0..d {
        for j in 0..d {
            let v = l.structure(i, j);
            if !v.is_zero() {
                entries.push(EntryFile { args: vec![i, j], value: value_map(v) });
            }
        }
    }
    SystemFile { name: l.name().into(), kind: Kind::Lie, dim: d, basis: l.basis_names().to_vec(), entries }
}

/// Pretty JSON with one entry per line.
pub fn to_json(file: &SystemFile) -> String {
    let mut out = String::new();
    out.push_str("{\n");
    out.push_str(&format!("  \"name\": {},\n", serde_json::to_string(&file.name).expect("string")));
    out.push_str(&format!("  \"kind\": {},\n", serde_json::to_string(&file.kind).expect("enum")));
    out.push_str(&format!("  \"dim\": {},\n", file.dim));
    out.push_str(&format!("  \"basis\": {},\n", serde_json::to_string(&file.basis).expect("strings")));
    out.push_str("  \"entries\": [\n");
    for (k, e) in file.entries.iter().enumerate() {
        let sep = if k + 1 == file.entries.len() { "" } else { "," };
        let line = serde_json::to_string(e).expect("entry").replace(",\"", ", \"").replace(":", ": ");
        out.push_str(&format!("    {line}{sep}\n"));
    }
    out.push_str("  ]\n}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use triplex::lts::catalog;

    #[test]
    fn round_trip() {
        let t = catalog::s2();
        let text = to_json(&lts_file(&t));
        match parse_system("s2", &text).unwrap() {
            System::Lts(back) => assert_eq!(back, t),
            other => panic!("wrong kind {other:?}"),
        }
        let l = catalog::sl3();
        match parse_system("sl3", &to_json(&lie_file(&l))).unwrap() {
            System::Lie(back) => assert_eq!(back, l),
            other => panic!("wrong kind {other:?}"),
        }
    }

    #[test]
    fn rejects() {
        let base = |dim: &str, entries: &str| {
            format!("{{\"name\":\"x\",\"kind\":\"lts\",\"dim\":{dim},\"basis\":[\"a\",\"b\"],\"entries\":[{entries}]}}")
        };
        assert!(parse_system("x", &base("0", "")).is_err());
        assert!(parse_system("x", &base("2", "{\"args\":[0,1],\"value\":{}}")).is_err());
        assert!(parse_system("x", &base("2", "{\"args\":[0,1,2],\"value\":{}}")).is_err());
        assert!(parse_system("x", &base("2", "{\"args\":[0,1,0],\"value\":{\"0\":\"1/0\"}}")).is_err());
        assert!(parse_system("x", &base("2", "{\"args\":[0,1,0],\"value\":{\"0\":\"1.5\"}}")).is_err());
        let dup = "{\"args\":[0,1,0],\"value\":{\"0\":\"2\"}},{\"args\":[0,1,0],\"value\":{\"0\":\"1\"}}";
        assert!(parse_system("x", &base("2", dup)).is_err());
        assert!(parse_system("x", "{ not json").is_err());
        let err = parse_system("x", &base("2", "{\"args\":[0,1,0],\"value\":{\"7\":\"1\"}}")).unwrap_err();
        assert!(err.to_string().contains("line 1"), "{err}");
    }

    #[test]
    fn lie_kind_checks_skew_symmetry() {
        let text = r#"{"name":"bad","kind":"lie","dim":2,"basis":["x","y"],
            "entries":[{"args":[0,1],"value":{"0":"1"}}]}"#;
        assert!(parse_system("bad", text).is_err());
    }
}
