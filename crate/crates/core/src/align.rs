//! Equal-length code/type id sequences: each word's type id is repeated
//! once per BPE subword of that word.

use std::collections::HashMap;
use std::fs;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::Path;

use byteorder::{LittleEndian, ReadBytesExt, WriteBytesExt};

use crate::bpe::Vocab;
use crate::corpus::Sample;
use crate::{Error, Result};

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AlignedSample {
    pub code_ids: Vec<u32>,
    pub type_ids: Vec<u32>,
    /// Half-open subword span of each word.
    pub boundaries: Vec<(usize, usize)>,
}

impl AlignedSample {
    pub fn len(&self) -> usize {
        self.code_ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.code_ids.is_empty()
    }

    /// One type id per word, read from the first subword of each span.
    pub fn project_types(&self) -> Vec<u32> {
        self.boundaries.iter().map(|&(s, _)| self.type_ids[s]).collect()
    }

    /// Cuts into consecutive non-overlapping windows of at most `block`
    /// ids. Word spans straddling a cut are clipped to each window.
    pub fn chunks(&self, block: usize) -> Vec<AlignedSample> {
        assert!(block > 0, "block size must be positive");
        (0..self.len())
            .step_by(block)
            .map(|start| {
                let end = (start + block).min(self.len());
                let boundaries = self
                    .boundaries
                    .iter()
                    .filter(|&&(s, e)| e > start && s < end)
                    .map(|&(s, e)| (s.max(start) - start, e.min(end) - start))
                    .collect();
                AlignedSample {
                    code_ids: self.code_ids[start..end].to_vec(),
                    type_ids: self.type_ids[start..end].to_vec(),
                    boundaries,
                }
            })
            .collect()
    }
}

/// Aligns samples against one vocabulary, caching word encodings.
pub struct Aligner<'v> {
    vocab: &'v Vocab,
    cache: HashMap<String, Vec<u32>>,
}

impl<'v> Aligner<'v> {
    pub fn new(vocab: &'v Vocab) -> Self {
        Aligner {
            vocab,
            cache: HashMap::new(),
        }
    }

    pub fn align(&mut self, sample: &Sample) -> Result<AlignedSample> {
        if sample.code_tokens.len() != sample.type_tokens.len() {
            return Err(Error::Alignment(format!(
                "{} code words vs {} type tokens",
                sample.code_tokens.len(),
                sample.type_tokens.len()
            )));
        }
        let mut out = AlignedSample::default();
        for (word, ty) in sample.code_tokens.iter().zip(&sample.type_tokens) {
            let type_id = match self.vocab.id(ty) {
                Some(id) if self.vocab.is_special(ty) => id,
                _ => return Err(Error::Alignment(format!("type token {ty:?} is not a vocabulary special"))),
            };
            let vocab = self.vocab;
            let ids = self
                .cache
                .entry(word.clone())
                .or_insert_with(|| vocab.encode(word));
            let start = out.code_ids.len();
            out.code_ids.extend_from_slice(ids);
            out.type_ids.extend(std::iter::repeat_n(type_id, ids.len()));
            out.boundaries.push((start, out.code_ids.len()));
        }
        Ok(out)
    }
}

pub fn align(sample: &Sample, vocab: &Vocab) -> Result<AlignedSample> {
    Aligner::new(vocab).align(sample)
}

const DATASET_MAGIC: &[u8; 8] = b"SAOTDS1\0";

/// Writes the binary dataset: magic, vocab hash, record count, then
/// `u32 len, len × code id, len × type id` per record (little-endian).
pub fn write_dataset(path: &Path, vocab_hash: &str, samples: &[AlignedSample]) -> Result<()> {
    let mut w = BufWriter::new(fs::File::create(path)?);
    w.write_all(DATASET_MAGIC)?;
    w.write_u32::<LittleEndian>(vocab_hash.len() as u32)?;
    w.write_all(vocab_hash.as_bytes())?;
    w.write_u32::<LittleEndian>(samples.len() as u32)?;
    for s in samples {
        w.write_u32::<LittleEndian>(s.len() as u32)?;
        for &id in s.code_ids.iter().chain(&s.type_ids) {
            w.write_u32::<LittleEndian>(id)?;
        }
    }
    w.flush()?;
    Ok(())
}

/// Reads a binary dataset, rejecting it when its vocab hash differs from
/// `expected_hash`. Boundaries are not stored and come back empty.
pub fn read_dataset(path: &Path, expected_hash: Option<&str>) -> Result<Vec<AlignedSample>> {
    let mut r = BufReader::new(fs::File::open(path)?);
    let mut magic = [0u8; 8];
    r.read_exact(&mut magic)?;
    if &magic != DATASET_MAGIC {
        return Err(Error::CorpusFormat(format!("{}: not a dataset file", path.display())));
    }
    let hash_len = r.read_u32::<LittleEndian>()? as usize;
    let mut hash = vec![0u8; hash_len];
    r.read_exact(&mut hash)?;
    let hash = String::from_utf8(hash).map_err(|_| Error::CorpusFormat("bad vocab hash".into()))?;
    if let Some(expected) = expected_hash {
        if expected != hash {
            return Err(Error::Contract(format!(
                "dataset vocab hash {hash} does not match {expected}"
            )));
        }
    }
    let n = r.read_u32::<LittleEndian>()? as usize;
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        let len = r.read_u32::<LittleEndian>()? as usize;
        let mut ids = vec![0u32; 2 * len];
        r.read_u32_into::<LittleEndian>(&mut ids)?;
        let type_ids = ids.split_off(len);
        out.push(AlignedSample {
            code_ids: ids,
            type_ids,
            boundaries: Vec::new(),
        });
    }
    Ok(out)
}
