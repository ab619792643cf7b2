//! Character-level byte-pair encoding with atomic special tokens.
//!
//! Every non-special word is split into characters prefixed by a word-start
//! mark ([`WORD_MARK`]), so a generated id stream can be cut back into
//! words. Merges never cross word boundaries.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::corpus::UNK;
use crate::{Error, Result};

/// Prefixed to the first character of every non-special word.
pub const WORD_MARK: char = '\u{2581}';

pub const DEFAULT_VOCAB_SIZE: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vocab {
    tokens: Vec<String>,
    id_of: HashMap<String, u32>,
    merges: Vec<(String, String)>,
    merge_rank: HashMap<(String, String), usize>,
    specials: Vec<String>,
    special_set: HashSet<String>,
    unk: u32,
}

#[derive(Serialize, Deserialize)]
struct VocabFile {
    merges: Vec<[String; 2]>,
    specials: Vec<String>,
    tokens: Vec<String>,
}

impl Vocab {
    fn assemble(tokens: Vec<String>, merges: Vec<(String, String)>, specials: Vec<String>) -> Result<Vocab> {
        let mut id_of = HashMap::with_capacity(tokens.len());
        for (i, t) in tokens.iter().enumerate() {
            if id_of.insert(t.clone(), i as u32).is_some() {
                return Err(Error::Vocab(format!("duplicate token {t:?}")));
            }
        }
        let special_set: HashSet<String> = specials.iter().cloned().collect();
        for s in &specials {
            if !id_of.contains_key(s) {
                return Err(Error::Vocab(format!("special {s:?} has no id")));
            }
        }
        let unk = *id_of
            .get(UNK)
            .ok_or_else(|| Error::Vocab(format!("{UNK} missing")))?;
        let merge_rank = merges.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        Ok(Vocab {
            tokens,
            id_of,
            merges,
            merge_rank,
            specials,
            special_set,
            unk,
        })
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn id(&self, token: &str) -> Option<u32> {
        self.id_of.get(token).copied()
    }

    pub fn token(&self, id: u32) -> Option<&str> {
        self.tokens.get(id as usize).map(String::as_str)
    }

    pub fn tokens(&self) -> &[String] {
        &self.tokens
    }

    pub fn merges(&self) -> &[(String, String)] {
        &self.merges
    }

    pub fn specials(&self) -> &[String] {
        &self.specials
    }

    pub fn is_special(&self, token: &str) -> bool {
        self.special_set.contains(token)
    }

    pub fn is_special_id(&self, id: u32) -> bool {
        self.token(id).is_some_and(|t| self.is_special(t))
    }

    pub fn unk_id(&self) -> u32 {
        self.unk
    }

    /// Subword ids for one word.
    pub fn encode(&self, word: &str) -> Vec<u32> {
        if let Some(&id) = self.id_of.get(word).filter(|_| self.is_special(word)) {
            return vec![id];
        }
        let mut symbols: Vec<String> = std::iter::once(WORD_MARK)
            .chain(word.chars())
            .map(String::from)
            .collect();
        loop {
            let best = symbols
                .windows(2)
                .enumerate()
                .filter_map(|(i, w)| {
                    self.merge_rank
                        .get(&(w[0].clone(), w[1].clone()))
                        .map(|&r| (r, i))
                })
                .min();
            let Some((rank, _)) = best else { break };
            let (left, right) = &self.merges[rank];
            let mut merged = Vec::with_capacity(symbols.len());
            let mut i = 0;
            while i < symbols.len() {
                if i + 1 < symbols.len() && symbols[i] == *left && symbols[i + 1] == *right {
                    merged.push(format!("{left}{right}"));
                    i += 2;
                } else {
                    merged.push(std::mem::take(&mut symbols[i]));
                    i += 1;
                }
            }
            symbols = merged;
        }
        symbols
            .iter()
            .map(|s| self.id(s).unwrap_or(self.unk))
            .collect()
    }

    /// Splits an id stream back into words: specials stand alone, a
    /// word-marked token starts a new word, anything else continues the
    /// current one.
    pub fn decode_words(&self, ids: &[u32]) -> Result<Vec<String>> {
        let mut words: Vec<String> = Vec::new();
        let mut open = false;
        for &id in ids {
            let tok = self
                .token(id)
                .ok_or_else(|| Error::Vocab(format!("id {id} out of range (vocab {})", self.len())))?;
            if self.is_special(tok) {
                words.push(tok.to_string());
                open = false;
            } else if let Some(rest) = tok.strip_prefix(WORD_MARK) {
                words.push(rest.to_string());
                open = true;
            } else if open {
                words.last_mut().unwrap().push_str(tok);
            } else {
                words.push(tok.to_string());
                open = true;
            }
        }
        Ok(words)
    }

    /// Inverse of [`Vocab::encode`]; multiple words come back space-joined.
    pub fn decode(&self, ids: &[u32]) -> Result<String> {
        Ok(self.decode_words(ids)?.join(" "))
    }

    fn to_file(&self) -> VocabFile {
        VocabFile {
            merges: self.merges.iter().map(|(l, r)| [l.clone(), r.clone()]).collect(),
            specials: self.specials.clone(),
            tokens: self.tokens.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_file()).expect("vocab serializes")
    }

    pub fn from_json(text: &str) -> Result<Vocab> {
        let file: VocabFile = serde_json::from_str(text)?;
        let merges = file.merges.into_iter().map(|[l, r]| (l, r)).collect();
        Vocab::assemble(file.tokens, merges, file.specials)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        fs::write(path, self.to_json() + "\n")?;
        Ok(())
    }

    pub fn load(path: &Path) -> Result<Vocab> {
        Vocab::from_json(&fs::read_to_string(path)?)
    }

    /// SHA-256 of the canonical JSON form, hex encoded.
    pub fn hash(&self) -> String {
        hex::encode(Sha256::digest(self.to_json().as_bytes()))
    }
}

/// Learns merges greedily until the vocabulary holds `target_size` entries
/// or no pair is left to merge. `<UNK>` is added to `specials` if absent.
pub fn train_bpe(
    word_counts: &BTreeMap<String, u64>,
    target_size: usize,
    specials: &[String],
) -> Result<Vocab> {
    let mut specials: Vec<String> = specials.to_vec();
    if !specials.iter().any(|s| s == UNK) {
        specials.insert(0, UNK.to_string());
    }
    let special_set: HashSet<&str> = specials.iter().map(String::as_str).collect();
    if special_set.len() != specials.len() {
        return Err(Error::Config("duplicate special tokens".into()));
    }

    let mut words: Vec<(Vec<String>, u64)> = word_counts
        .iter()
        .filter(|(w, &c)| c > 0 && !w.is_empty() && !special_set.contains(w.as_str()))
        .map(|(w, &c)| {
            let symbols = std::iter::once(WORD_MARK).chain(w.chars()).map(String::from).collect();
            (symbols, c)
        })
        .collect();

    let mut alphabet: Vec<String> = words
        .iter()
        .flat_map(|(s, _)| s.iter().cloned())
        .collect::<HashSet<_>>()
        .into_iter()
        .filter(|c| !special_set.contains(c.as_str()))
        .collect();
    alphabet.sort();

    let base = specials.len() + alphabet.len();
    if target_size < base {
        return Err(Error::Config(format!(
            "target vocabulary size {target_size} is below alphabet ({}) + specials ({})",
            alphabet.len(),
            specials.len()
        )));
    }

    let mut tokens: Vec<String> = specials.iter().cloned().chain(alphabet).collect();
    let mut known: HashSet<String> = tokens.iter().cloned().collect();
    let mut merges = Vec::new();

    while tokens.len() < target_size {
        let mut counts: HashMap<(&str, &str), u64> = HashMap::new();
        for (symbols, c) in &words {
            for w in symbols.windows(2) {
                *counts.entry((w[0].as_str(), w[1].as_str())).or_default() += c;
            }
        }
        let best = counts
            .into_iter()
            .max_by(|(pa, ca), (pb, cb)| ca.cmp(cb).then_with(|| pb.cmp(pa)));
        let Some(((l, r), _)) = best else { break };
        let (left, right) = (l.to_string(), r.to_string());
        let joined = format!("{left}{right}");

        for (symbols, _) in &mut words {
            if symbols.len() < 2 {
                continue;
            }
            let mut out = Vec::with_capacity(symbols.len());
            let mut i = 0;
            while i < symbols.len() {
                if i + 1 < symbols.len() && symbols[i] == left && symbols[i + 1] == right {
                    out.push(joined.clone());
                    i += 2;
                } else {
                    out.push(std::mem::take(&mut symbols[i]));
                    i += 1;
                }
            }
            *symbols = out;
        }
        if known.insert(joined.clone()) {
            tokens.push(joined);
        }
        merges.push((left, right));
    }

    Vocab::assemble(tokens, merges, specials)
}

/// Word frequencies over space-separated sample lines.
pub fn word_counts<'a>(lines: impl IntoIterator<Item = &'a [String]>) -> BTreeMap<String, u64> {
    let mut counts = BTreeMap::new();
    for line in lines {
        for w in line {
            *counts.entry(w.clone()).or_default() += 1;
        }
    }
    counts
}
