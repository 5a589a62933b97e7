//! The on-disk document: plain serde types mirroring the JSON layout.

use serde::{Deserialize, Serialize};

use crate::exactlin::{Field, Matrix, Scalar, ScalarError};

/// A scalar as written in a document: an integer or a string such as
/// `"-3/4"` or `"5 mod 7"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarText {
    Int(i64),
    Text(String),
}

impl ScalarText {
    pub fn to_scalar(&self, field: Field) -> Result<Scalar, ScalarError> {
        match self {
            ScalarText::Int(v) => Ok(field.from_i64(*v)),
            ScalarText::Text(t) => field.parse(t),
        }
    }

    pub fn from_scalar(s: &Scalar) -> Self {
        ScalarText::Text(s.to_string())
    }
}

pub type MatrixText = Vec<Vec<ScalarText>>;

pub fn matrix_to_text(m: &Matrix) -> MatrixText {
    (0..m.rows()).map(|i| m.row(i).iter().map(ScalarText::from_scalar).collect()).collect()
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<String>,
    #[serde(default)]
    pub algebras: Vec<AlgebraDoc>,
    #[serde(default)]
    pub modules: Vec<ModuleDoc>,
    #[serde(default)]
    pub morphisms: Vec<MorphismDoc>,
    #[serde(default)]
    pub cochains: Vec<CochainDoc>,
    #[serde(default)]
    pub crossed_modules: Vec<CrossedModuleDoc>,
    #[serde(default)]
    pub extensions: Vec<ExtensionDoc>,
    #[serde(default)]
    pub sequences: Vec<SequenceDoc>,
    #[serde(default)]
    pub commands: Vec<CommandDoc>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AlgebraKind {
    #[default]
    Lie,
    Leibniz,
}

/// `[e_i, e_j]` has coefficient `value` on `e_k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketDoc {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub value: ScalarText,
}

/// For Lie algebras a record `(i, j, k, v)` also fixes `c[j][i][k] = −v`
/// unless that entry is listed too.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDoc {
    pub name: String,
    #[serde(default)]
    pub kind: AlgebraKind,
    /// A named algebra from the built-in catalog instead of `dim`/`brackets`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub catalog: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    #[serde(default)]
    pub brackets: Vec<BracketDoc>,
}

/// A module over a Lie algebra (`action`) or a Leibniz algebra
/// (`left`, `right`). Missing actions are zero; `adjoint` builds the
/// adjoint module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleDoc {
    pub name: String,
    pub algebra: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub adjoint: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<Vec<MatrixText>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub left: Option<Vec<MatrixText>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub right: Option<Vec<MatrixText>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismDoc {
    pub name: String,
    pub source: String,
    pub target: String,
    pub matrix: MatrixText,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EntryDoc {
    pub tuple: Vec<usize>,
    pub value: Vec<ScalarText>,
}

/// `flavor` is `"ce"` or `"leibniz"`; it defaults to the kind of the
/// module's algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CochainDoc {
    pub name: String,
    pub module: String,
    pub degree: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub flavor: Option<String>,
    #[serde(default)]
    pub entries: Vec<EntryDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CrossedModuleDoc {
    pub name: String,
    #[serde(rename = "L")]
    pub l: String,
    #[serde(rename = "V")]
    pub v: String,
    pub partial: MatrixText,
}

/// `0 → M → M' → M'' → 0` given by two morphisms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SequenceDoc {
    pub name: String,
    pub alpha: String,
    pub beta: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LinkDoc {
    pub module: String,
    /// The map leaving `module`.
    pub partial: MatrixText,
}

/// `0 → M →f M_{n−1} → ⋯ → M_2 → V →∂ L →π g → 0`; `chain` lists
/// `M_{n−1}, …, M_2` with their outgoing maps and `base` names the crossed
/// module `(V, L, ∂)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtensionDoc {
    pub name: String,
    pub n: usize,
    pub g: String,
    #[serde(rename = "M")]
    pub m: String,
    pub f: MatrixText,
    #[serde(default)]
    pub chain: Vec<LinkDoc>,
    pub base: String,
    pub pi: MatrixText,
}

/// One requested command. Only the fields relevant to `command` are read.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CommandDoc {
    pub command: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub module: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub flavor: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_degree: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub crossed_module: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub extension: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub left: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub right: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sequence: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cochain: Option<String>,
    /// Expected outcome: a list of dimensions for `cohomology`, `"zero"` or
    /// `"nonzero"` for class-valued commands, a boolean for splitting.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expect: Option<serde_json::Value>,
}
