//! Text file formats: groups, algebras and their JSON encodings.

use crate::congruence::UnaryAlgebra;
use crate::perm::{group_closure, Perm, PermGroup};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

pub const FORMAT_VERSION: u32 = 1;

fn format_version() -> u32 {
    FORMAT_VERSION
}

/// `{ "format": 1, "degree": d, "generators": [[images], ...], "name": ... }`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupFile {
    #[serde(default = "format_version")]
    pub format: u32,
    pub degree: usize,
    pub generators: Vec<Perm>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl GroupFile {
    pub fn new(group: &PermGroup, name: Option<String>) -> Self {
        Self {
            format: FORMAT_VERSION,
            degree: group.degree(),
            generators: group.generators().to_vec(),
            name,
        }
    }

    pub fn to_group(&self) -> Result<PermGroup> {
        check_version(self.format)?;
        group_closure(self.degree, &self.generators)
    }
}

/// `{ "format": 1, "size": n, "ops": [[table], ...], "name": ... }`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraFile {
    #[serde(default = "format_version")]
    pub format: u32,
    pub size: usize,
    pub ops: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl AlgebraFile {
    pub fn new(alg: &UnaryAlgebra, name: Option<String>) -> Self {
        Self {
            format: FORMAT_VERSION,
            size: alg.size(),
            ops: alg.ops().to_vec(),
            name,
        }
    }

    pub fn to_algebra(&self) -> Result<UnaryAlgebra> {
        check_version(self.format)?;
        UnaryAlgebra::new(self.size, self.ops.clone())
    }
}

fn check_version(v: u32) -> Result<()> {
    if v == FORMAT_VERSION {
        Ok(())
    } else {
        Err(Error::Unsupported(format!("file format version {v}")))
    }
}

pub fn parse_group(text: &str) -> Result<(PermGroup, Option<String>)> {
    let file: GroupFile =
        serde_json::from_str(text).map_err(|e| Error::InvalidArgument(format!("group file: {e}")))?;
    Ok((file.to_group()?, file.name))
}

pub fn parse_algebra(text: &str) -> Result<(UnaryAlgebra, Option<String>)> {
    let file: AlgebraFile =
        serde_json::from_str(text).map_err(|e| Error::InvalidArgument(format!("algebra file: {e}")))?;
    Ok((file.to_algebra()?, file.name))
}

pub fn group_to_string(group: &PermGroup, name: Option<String>) -> String {
    let mut s = serde_json::to_string_pretty(&GroupFile::new(group, name)).expect("serialisable");
    s.push('\n');
    s
}

pub fn algebra_to_string(alg: &UnaryAlgebra, name: Option<String>) -> String {
    let mut s = serde_json::to_string_pretty(&AlgebraFile::new(alg, name)).expect("serialisable");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{dihedral, regular_action};
    use crate::congruence::gset_algebra;

    #[test]
    fn group_file_shape() {
        let g = dihedral(3).unwrap();
        let text = group_to_string(&g, Some("D_6".into()));
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["format"], 1);
        assert_eq!(v["degree"], 3);
        assert_eq!(v["generators"], serde_json::json!([[1, 2, 0], [0, 2, 1]]));
        let (back, name) = parse_group(&text).unwrap();
        assert!(back.same_elements(&g));
        assert_eq!(name.as_deref(), Some("D_6"));
    }

    #[test]
    fn format_field_is_optional_on_read() {
        let (g, name) = parse_group(r#"{"degree": 3, "generators": [[1,2,0]]}"#).unwrap();
        assert_eq!(g.order(), 3);
        assert!(name.is_none());
        assert!(parse_group(r#"{"format": 2, "degree": 3, "generators": []}"#).is_err());
    }

    #[test]
    fn malformed_inputs_are_rejected() {
        assert!(parse_group(r#"{"degree": 3, "generators": [[0,0,1]]}"#).is_err());
        assert!(parse_group(r#"{"degree": 3, "generators": [[1,0]]}"#).is_err());
        assert!(parse_algebra(r#"{"size": 2, "ops": [[0,5]]}"#).is_err());
        assert!(parse_algebra("not json").is_err());
    }

    #[test]
    fn algebra_round_trip() {
        let alg = gset_algebra(&regular_action(&dihedral(3).unwrap()).unwrap());
        let (back, _) = parse_algebra(&algebra_to_string(&alg, None)).unwrap();
        assert_eq!(back, alg);
    }
}
