use serde::{Deserialize, Serialize};

use super::{lattice_from_facets, FaceLattice};
use crate::error::{Error, Result};

/// Interchange form read from disk: coatoms over 0-based atom indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeInput {
    pub length: usize,
    pub atoms: usize,
    pub coatoms: Vec<Vec<usize>>,
}

/// Full output form; `faces_by_rank[r]` lists the rank-`r` atom sets,
/// bottom through top.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeFile {
    pub length: usize,
    pub atoms: usize,
    pub coatoms: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub faces_by_rank: Option<Vec<Vec<Vec<usize>>>>,
}

impl LatticeInput {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    pub fn into_lattice(self) -> Result<FaceLattice> {
        let l = lattice_from_facets(&self.coatoms, self.atoms)?;
        if l.length() != self.length {
            return Err(Error::WrongLength {
                expected: self.length,
                found: l.length(),
            });
        }
        Ok(l)
    }
}

impl FaceLattice {
    pub fn to_file(&self) -> LatticeFile {
        LatticeFile {
            length: self.length(),
            atoms: self.atom_count(),
            coatoms: self.coatom_sets(),
            faces_by_rank: Some(self.faces_by_rank()),
        }
    }

    /// Pretty JSON in the interchange format, with `faces_by_rank`.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("lattice serializes")
    }

    /// Parses the interchange format (extra `faces_by_rank` is ignored; the
    /// lattice is rebuilt from the coatoms).
    pub fn from_json(text: &str) -> Result<Self> {
        LatticeInput::parse(text)?.into_lattice()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_triangle() {
        let l = FaceLattice::from_json(r#"{"length": 3, "atoms": 3, "coatoms": [[0,1],[0,2],[1,2]]}"#)
            .unwrap();
        assert_eq!(l.f_vector(), vec![3, 3]);
    }

    #[test]
    fn reports_position_of_syntax_errors() {
        let err = FaceLattice::from_json("{\n  \"length\": 3,\n  \"atoms\": x\n}").unwrap_err();
        match err {
            Error::Parse { line, column, .. } => {
                assert_eq!(line, 3);
                assert!(column > 0);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn rejects_length_mismatch() {
        let err = FaceLattice::from_json(r#"{"length": 4, "atoms": 3, "coatoms": [[0,1],[0,2],[1,2]]}"#)
            .unwrap_err();
        assert_eq!(err, Error::WrongLength { expected: 4, found: 3 });
    }

    #[test]
    fn output_reparses_to_same_faces() {
        let l = FaceLattice::from_json(
            r#"{"length": 4, "atoms": 4, "coatoms": [[0,1,2],[0,1,3],[0,2,3],[1,2,3]]}"#,
        )
        .unwrap();
        let again = FaceLattice::from_json(&l.to_json()).unwrap();
        assert_eq!(l.faces_by_rank(), again.faces_by_rank());
        assert_eq!(l.to_file().faces_by_rank.unwrap()[0], vec![Vec::<usize>::new()]);
    }
}
