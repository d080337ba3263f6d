use serde::{Deserialize, Serialize};

use super::{GroupRingElement, HermitianForm, Parity};
use crate::{Error, Result};

/// JSON form description: entries as `"c0 + c1*g + c2*g^2 ..."` strings.
///
/// ```json
/// {"p": 3, "k": 2, "epsilon": 1, "matrix": [["1"]], "refinement": [0]}
/// ```
///
/// `refinement` may be omitted, meaning all zeros.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormFile {
    pub p: u32,
    pub k: u32,
    pub epsilon: i64,
    pub matrix: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub refinement: Option<Vec<u8>>,
}

impl FormFile {
    pub fn from_json(text: &str) -> Result<FormFile> {
        serde_json::from_str(text).map_err(|e| Error::Syntax {
            offset: 0,
            message: format!("form JSON (line {}, column {}): {e}", e.line(), e.column()),
        })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("form serializes");
        s.push('\n');
        s
    }

    pub fn to_form(&self) -> Result<HermitianForm> {
        let parity = Parity::from_epsilon(self.epsilon)
            .ok_or_else(|| Error::InvalidForm(format!("epsilon must be ±1, got {}", self.epsilon)))?;
        let matrix = self
            .matrix
            .iter()
            .map(|row| {
                row.iter()
                    .map(|s| GroupRingElement::parse(s, self.p, self.k))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let q = matrix.len();
        let refinement = self.refinement.clone().unwrap_or_else(|| vec![0; q]);
        HermitianForm::new(self.p, self.k, parity, matrix, refinement)
    }

    pub fn from_form(form: &HermitianForm) -> FormFile {
        FormFile {
            p: form.p(),
            k: form.level(),
            epsilon: form.parity().epsilon(),
            matrix: form
                .matrix()
                .iter()
                .map(|row| row.iter().map(|x| x.to_string()).collect())
                .collect(),
            refinement: Some(form.refinement().to_vec()),
        }
    }
}
