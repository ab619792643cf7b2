//! Golden lexer fixtures: the `fixtures.json` schema written by the
//! reference-tokenizer generator and the comparison against [`crate::lexer`].

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::lexer::{tokenize, TypedToken};
use crate::Result;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureRecord {
    pub file: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tokens: Option<Vec<TypedToken>>,
    /// Error class name when the reference tokenizer rejected the file.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

pub fn load(path: &Path) -> Result<Vec<FixtureRecord>> {
    let text = std::fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

/// First point where the lexer output diverges from a fixture.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub file: String,
    pub index: usize,
    pub expected: Option<TypedToken>,
    pub actual: Option<TypedToken>,
}

/// Lexes `source` (LF-normalized) and compares it with the record's tokens.
/// Records carrying a reference error are skipped (`Ok`).
pub fn check(record: &FixtureRecord, source: &str) -> std::result::Result<(), Mismatch> {
    let Some(expected) = &record.tokens else {
        return Ok(());
    };
    let actual = tokenize(&source.replace("\r\n", "\n"));
    let n = expected.len().max(actual.len());
    for i in 0..n {
        let (e, a) = (expected.get(i), actual.get(i));
        if e != a {
            return Err(Mismatch {
                file: record.file.clone(),
                index: i,
                expected: e.cloned(),
                actual: a.cloned(),
            });
        }
    }
    Ok(())
}
