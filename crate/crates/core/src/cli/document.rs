use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// A space-description document: named bindings, each a standard space or a
/// construction on other bindings.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceDescription {
    #[serde(default)]
    pub spaces: BTreeMap<String, Binding>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum Binding {
    Point {},
    Empty {},
    Sphere {
        n: usize,
    },
    Circle {
        n: usize,
    },
    Delta {
        n: usize,
    },
    /// Explicit face tables. `simplices[d]` lists the labels of dimension
    /// `d`; `faces` maps each label of positive dimension to its faces
    /// `∂_0, …, ∂_d` written as simplex words.
    Simplicial {
        simplices: Vec<Vec<String>>,
        #[serde(default)]
        faces: BTreeMap<String, Vec<String>>,
    },
    Wedge {
        left: String,
        right: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        left_base: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        right_base: Option<String>,
    },
    Join {
        left: String,
        right: String,
    },
    Product {
        left: String,
        right: String,
    },
    Suspension {
        of: String,
    },
    MappingCone {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        source: Option<String>,
        map: MorphismSpec,
    },
    Pushout {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        source: Option<String>,
        f: MorphismSpec,
        g: MorphismSpec,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum MorphismSpec {
    /// Image of every nondegenerate source simplex, by label.
    Table {
        target: String,
        images: BTreeMap<String, String>,
    },
    Identity {},
    Constant {
        target: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        vertex: Option<String>,
    },
    /// Every vertex to the base vertex and every edge to the edge of a
    /// fresh `circle 1`; the source defaults to `circle n`.
    DegreeMap {
        n: usize,
    },
}

/// A document that failed to parse, located in the source text.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{line}:{column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

fn line_column(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, column)
}

impl SpaceDescription {
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        toml::from_str(text).map_err(|e| {
            let (line, column) = e.span().map_or((1, 1), |s| line_column(text, s.start));
            ParseError { line, column, message: e.message().to_string() }
        })
    }

    pub fn to_text(&self) -> String {
        toml::to_string(self).expect("descriptions always serialize")
    }
}
