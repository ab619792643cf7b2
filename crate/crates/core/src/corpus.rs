//! Corpus construction: literal masking, structural markers, the
//! two-line sample format and seeded file splits.

use std::collections::BTreeMap;
use std::fs;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::lexer::{TokenType, TypedToken};
use crate::{Error, Result};

pub const BOS: &str = "<s>";
pub const EOS: &str = "</s>";
pub const PAD: &str = "<pad>";
pub const UNK: &str = "<UNK>";
pub const INDENT: &str = "<INDENT>";
pub const DEDENT: &str = "<DEDENT>";
pub const EOL: &str = "<EOL>";
pub const STR_LIT: &str = "<STR_LIT>";
pub const NUM_LIT: &str = "<NUM_LIT>";

pub const MAX_STRINGS: usize = 200;
pub const MAX_NUMBERS: usize = 30;

/// `<NAME>`, `<LPAR>`, ... : the type-stream spelling of a token type.
pub fn type_token(t: TokenType) -> String {
    format!("<{}>", t.name())
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiteralTables {
    pub top_strings: Vec<String>,
    pub top_numbers: Vec<String>,
    pub string_counts: BTreeMap<String, usize>,
    pub number_counts: BTreeMap<String, usize>,
}

/// On-disk form of [`LiteralTables`] (`literals.json`).
#[derive(Debug, Clone, Serialize, Deserialize)]
struct LiteralsFile {
    strings: Vec<String>,
    numbers: Vec<String>,
}

impl LiteralTables {
    pub fn write_json(&self, path: &Path) -> Result<()> {
        let file = LiteralsFile {
            strings: self.top_strings.clone(),
            numbers: self.top_numbers.clone(),
        };
        fs::write(path, serde_json::to_string_pretty(&file)? + "\n")?;
        Ok(())
    }

    /// Reads `literals.json`; counts are not persisted.
    pub fn read_json(path: &Path) -> Result<Self> {
        let file: LiteralsFile = serde_json::from_str(&fs::read_to_string(path)?)?;
        Ok(LiteralTables {
            top_strings: file.strings,
            top_numbers: file.numbers,
            ..Default::default()
        })
    }
}

/// Value of a string literal: prefix letters and quotes removed.
pub fn string_value(text: &str) -> &str {
    let body = text.trim_start_matches(|c: char| c.is_ascii_alphabetic());
    for q in ["\"\"\"", "'''", "\"", "'"] {
        if body.len() >= 2 * q.len() && body.starts_with(q) && body.ends_with(q) {
            return &body[q.len()..body.len() - q.len()];
        }
    }
    body
}

fn ranked(counts: &BTreeMap<String, usize>, limit: usize) -> Vec<String> {
    let mut entries: Vec<(&String, &usize)> = counts.iter().collect();
    // BTreeMap iteration is already lexicographic; a stable sort keeps it
    // as the tie-break.
    entries.sort_by(|a, b| b.1.cmp(a.1));
    entries.into_iter().take(limit).map(|(k, _)| k.clone()).collect()
}

pub fn build_literal_tables<'a, I>(files: I) -> LiteralTables
where
    I: IntoIterator<Item = &'a [TypedToken]>,
{
    let mut tables = LiteralTables::default();
    for tokens in files {
        for t in tokens {
            match t.ttype {
                TokenType::STRING => {
                    *tables.string_counts.entry(string_value(&t.text).to_string()).or_default() += 1
                }
                TokenType::NUMBER => *tables.number_counts.entry(t.text.clone()).or_default() += 1,
                _ => {}
            }
        }
    }
    tables.top_strings = ranked(&tables.string_counts, MAX_STRINGS);
    tables.top_numbers = ranked(&tables.number_counts, MAX_NUMBERS);
    tables
}

fn needs_escape(c: char) -> bool {
    c == '%' || c == '<' || c == '>' || c.is_whitespace() || c == crate::bpe::WORD_MARK
}

/// Percent-encodes characters that would break the space-separated format
/// or collide with placeholder delimiters.
pub fn escape_value(value: &str) -> String {
    let mut out = String::with_capacity(value.len());
    for c in value.chars() {
        if needs_escape(c) {
            let mut buf = [0u8; 4];
            for b in c.encode_utf8(&mut buf).bytes() {
                out.push_str(&format!("%{b:02X}"));
            }
        } else {
            out.push(c);
        }
    }
    out
}

pub fn unescape_value(escaped: &str) -> String {
    let bytes = escaped.as_bytes();
    let mut out = Vec::with_capacity(bytes.len());
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i] == b'%' && i + 3 <= bytes.len() {
            let hex = std::str::from_utf8(&bytes[i + 1..i + 3]).ok();
            if let Some(b) = hex.and_then(|h| u8::from_str_radix(h, 16).ok()) {
                out.push(b);
                i += 3;
                continue;
            }
        }
        out.push(bytes[i]);
        i += 1;
    }
    String::from_utf8_lossy(&out).into_owned()
}

pub fn string_placeholder(value: &str) -> String {
    format!("<STR_LIT:{}>", escape_value(value))
}

pub fn number_placeholder(value: &str) -> String {
    format!("<NUM_LIT:{}>", escape_value(value))
}

/// Word-level code tokens with literals masked and markers spelled out.
pub fn mask_literals(tokens: &[TypedToken], tables: &LiteralTables) -> Vec<String> {
    tokens
        .iter()
        .map(|t| match t.ttype {
            TokenType::STRING => {
                let value = string_value(&t.text);
                if tables.top_strings.iter().any(|s| s == value) {
                    string_placeholder(value)
                } else {
                    STR_LIT.to_string()
                }
            }
            TokenType::NUMBER => {
                if tables.top_numbers.contains(&t.text) {
                    number_placeholder(&t.text)
                } else {
                    NUM_LIT.to_string()
                }
            }
            TokenType::INDENT => INDENT.to_string(),
            TokenType::DEDENT => DEDENT.to_string(),
            TokenType::EOL => EOL.to_string(),
            _ => t.text.clone(),
        })
        .collect()
}

/// Every special token the corpus can emit: reserved ids first, then
/// markers, type tokens and literal placeholders.
pub fn special_tokens(tables: &LiteralTables) -> Vec<String> {
    let mut out: Vec<String> = [UNK, PAD, BOS, EOS, INDENT, DEDENT, EOL, STR_LIT, NUM_LIT]
        .iter()
        .map(|s| s.to_string())
        .collect();
    for &t in TokenType::ALL {
        let tok = type_token(t);
        if !out.contains(&tok) {
            out.push(tok);
        }
    }
    out.extend(tables.top_strings.iter().map(|v| string_placeholder(v)));
    out.extend(tables.top_numbers.iter().map(|v| number_placeholder(v)));
    out
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Sample {
    pub code_tokens: Vec<String>,
    pub type_tokens: Vec<String>,
}

impl Sample {
    pub fn from_tokens(tokens: &[TypedToken], tables: &LiteralTables) -> Sample {
        let mut code_tokens = Vec::with_capacity(tokens.len() + 2);
        code_tokens.push(BOS.to_string());
        code_tokens.extend(mask_literals(tokens, tables));
        code_tokens.push(EOS.to_string());

        let mut type_tokens = Vec::with_capacity(tokens.len() + 2);
        type_tokens.push(BOS.to_string());
        type_tokens.extend(tokens.iter().map(|t| type_token(t.ttype)));
        type_tokens.push(EOS.to_string());
        Sample {
            code_tokens,
            type_tokens,
        }
    }

    pub fn len(&self) -> usize {
        self.code_tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.code_tokens.is_empty()
    }

    pub fn serialize(&self) -> (String, String) {
        (self.code_tokens.join(" "), self.type_tokens.join(" "))
    }

    pub fn parse(code_line: &str, type_line: &str) -> Result<Sample> {
        let split = |l: &str| -> Vec<String> { l.split(' ').filter(|s| !s.is_empty()).map(String::from).collect() };
        let sample = Sample {
            code_tokens: split(code_line),
            type_tokens: split(type_line),
        };
        if sample.code_tokens.len() != sample.type_tokens.len() {
            return Err(Error::CorpusFormat(format!(
                "{} code tokens vs {} type tokens",
                sample.code_tokens.len(),
                sample.type_tokens.len()
            )));
        }
        Ok(sample)
    }
}

/// Writes `<stem>.code` and `<stem>.type` side by side.
pub fn write_split(dir: &Path, stem: &str, samples: &[Sample]) -> Result<()> {
    let mut code = BufWriter::new(fs::File::create(dir.join(format!("{stem}.code")))?);
    let mut types = BufWriter::new(fs::File::create(dir.join(format!("{stem}.type")))?);
    for s in samples {
        let (c, t) = s.serialize();
        writeln!(code, "{c}")?;
        writeln!(types, "{t}")?;
    }
    code.flush()?;
    types.flush()?;
    Ok(())
}

pub fn read_split(dir: &Path, stem: &str) -> Result<Vec<Sample>> {
    let code = BufReader::new(fs::File::open(dir.join(format!("{stem}.code")))?);
    let types = BufReader::new(fs::File::open(dir.join(format!("{stem}.type")))?);
    let code: Vec<String> = code.lines().collect::<std::io::Result<_>>()?;
    let types: Vec<String> = types.lines().collect::<std::io::Result<_>>()?;
    if code.len() != types.len() {
        return Err(Error::CorpusFormat(format!(
            "{stem}: {} code lines vs {} type lines",
            code.len(),
            types.len()
        )));
    }
    code.iter()
        .zip(&types)
        .enumerate()
        .map(|(i, (c, t))| {
            Sample::parse(c, t).map_err(|e| Error::CorpusFormat(format!("{stem} line {}: {e}", i + 1)))
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SplitRatios {
    pub train: f64,
    pub valid: f64,
}

impl Default for SplitRatios {
    fn default() -> Self {
        SplitRatios {
            train: 0.8,
            valid: 0.1,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Split<T> {
    pub train: Vec<T>,
    pub valid: Vec<T>,
    pub test: Vec<T>,
}

/// Seeded shuffle then proportional cut; the remainder goes to test.
pub fn split_files<T: Clone>(items: &[T], ratios: SplitRatios, seed: u64) -> Split<T> {
    let mut shuffled = items.to_vec();
    shuffled.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    let n = shuffled.len();
    let n_train = (n as f64 * ratios.train).round() as usize;
    let n_valid = ((n as f64 * ratios.valid).round() as usize).min(n - n_train.min(n));
    let test = shuffled.split_off((n_train + n_valid).min(n));
    let valid = shuffled.split_off(n_train.min(n));
    Split {
        train: shuffled,
        valid,
        test,
    }
}

/// A lexed source file that survived the ERRORTOKEN filter.
#[derive(Debug, Clone)]
pub struct SourceFile {
    pub name: String,
    pub tokens: Vec<TypedToken>,
}

#[derive(Debug, Clone, Default)]
pub struct BuiltCorpus {
    pub tables: LiteralTables,
    pub split: Split<Sample>,
    pub files: Split<String>,
    /// Files dropped because they contain ERRORTOKEN.
    pub excluded: Vec<String>,
}

/// Lexes, filters, splits and masks. Literal tables come from the train
/// split only.
pub fn build(sources: &[(String, String)], ratios: SplitRatios, seed: u64) -> BuiltCorpus {
    let mut kept = Vec::new();
    let mut excluded = Vec::new();
    for (name, text) in sources {
        let tokens = crate::lexer::tokenize(text);
        if tokens.iter().any(|t| t.ttype == TokenType::ERRORTOKEN) {
            excluded.push(name.clone());
        } else {
            kept.push(SourceFile {
                name: name.clone(),
                tokens,
            });
        }
    }
    let split = split_files(&kept, ratios, seed);
    let tables = build_literal_tables(split.train.iter().map(|f| f.tokens.as_slice()));
    let samples = |files: &[SourceFile]| -> Vec<Sample> {
        files.iter().map(|f| Sample::from_tokens(&f.tokens, &tables)).collect()
    };
    let names = |files: &[SourceFile]| -> Vec<String> { files.iter().map(|f| f.name.clone()).collect() };
    BuiltCorpus {
        split: Split {
            train: samples(&split.train),
            valid: samples(&split.valid),
            test: samples(&split.test),
        },
        files: Split {
            train: names(&split.train),
            valid: names(&split.valid),
            test: names(&split.test),
        },
        tables,
        excluded,
    }
}

/// A line-completion case: the context up to a cut point and the gold
/// continuation through the next `<EOL>` (inclusive).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineSample {
    pub context: Vec<String>,
    pub gold: Vec<String>,
}

impl LineSample {
    /// Gold continuation as a space-joined line, `<EOL>` excluded.
    pub fn gold_line(&self) -> String {
        self.gold
            .iter()
            .take_while(|t| *t != EOL)
            .map(String::as_str)
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Cuts `sample` at a seeded position past the first 10 tokens that still
/// has an `<EOL>` ahead of it. `None` when no such position exists.
pub fn line_sample(sample: &Sample, rng: &mut impl rand::Rng) -> Option<LineSample> {
    let toks = &sample.code_tokens;
    let candidates: Vec<usize> = (10..toks.len())
        .filter(|&p| toks[p] != EOL && toks[p] != EOS && toks[p..].iter().any(|t| t == EOL))
        .collect();
    let &cut = candidates.get(rng.gen_range(0..candidates.len().max(1)))?;
    let end = cut + toks[cut..].iter().position(|t| t == EOL).unwrap() + 1;
    Some(LineSample {
        context: toks[..cut].to_vec(),
        gold: toks[cut..end].to_vec(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lexer::tokenize;

    fn tok(text: &str, ttype: TokenType) -> TypedToken {
        TypedToken {
            text: text.into(),
            ttype,
            line: 1,
            col: 0,
        }
    }

    #[test]
    fn most_frequent_string_heads_table() {
        let mut toks = vec![tok("'utf-8'", TokenType::STRING); 50];
        toks.extend(vec![tok("'r'", TokenType::STRING); 10]);
        let tables = build_literal_tables([toks.as_slice()]);
        assert_eq!(tables.top_strings[0], "utf-8");
        assert_eq!(tables.top_strings[1], "r");
    }

    #[test]
    fn ties_break_lexicographically() {
        let toks = vec![tok("'b'", TokenType::STRING), tok("\"a\"", TokenType::STRING)];
        let tables = build_literal_tables([toks.as_slice()]);
        assert_eq!(tables.top_strings, ["a", "b"]);
    }

    #[test]
    fn tables_truncate() {
        let toks: Vec<_> = (0..300).map(|i| tok(&format!("'s{i}'"), TokenType::STRING)).collect();
        let nums: Vec<_> = (0..50).map(|i| tok(&i.to_string(), TokenType::NUMBER)).collect();
        let tables = build_literal_tables([toks.as_slice(), nums.as_slice()]);
        assert_eq!(tables.top_strings.len(), 200);
        assert_eq!(tables.top_numbers.len(), 30);
    }

    #[test]
    fn empty_corpus_gives_empty_tables() {
        let tables = build_literal_tables(std::iter::empty::<&[TypedToken]>());
        assert!(tables.top_strings.is_empty() && tables.top_numbers.is_empty());
    }

    #[test]
    fn masking() {
        let tables = LiteralTables {
            top_strings: vec!["utf-8".into()],
            top_numbers: vec!["1".into()],
            ..Default::default()
        };
        let toks = [
            tok("'utf-8'", TokenType::STRING),
            tok("'x9q!'", TokenType::STRING),
            tok("1", TokenType::NUMBER),
            tok("2", TokenType::NUMBER),
            tok("", TokenType::INDENT),
            tok("foo", TokenType::NAME),
        ];
        assert_eq!(
            mask_literals(&toks, &tables),
            ["<STR_LIT:utf-8>", "<STR_LIT>", "<NUM_LIT:1>", "<NUM_LIT>", "<INDENT>", "foo"]
        );
    }

    #[test]
    fn string_values() {
        assert_eq!(string_value("'utf-8'"), "utf-8");
        assert_eq!(string_value("rb\"x\""), "x");
        assert_eq!(string_value("'''a\nb'''"), "a\nb");
        assert_eq!(string_value("\"\""), "");
    }

    #[test]
    fn escaping_round_trips() {
        for v in ["%s: %s", "<a b>", "a\nb", "plain", "50%", "\u{2581}x"] {
            let e = escape_value(v);
            assert!(!e.contains(' ') && !e.contains('<') && !e.contains('>'));
            assert_eq!(unescape_value(&e), v);
        }
        assert_eq!(string_placeholder("%s: %s"), "<STR_LIT:%25s:%20%25s>");
    }

    #[test]
    fn serialize_and_parse() {
        let s = Sample {
            code_tokens: vec!["<s>".into(), "x".into(), "</s>".into()],
            type_tokens: vec!["<s>".into(), "<NAME>".into(), "</s>".into()],
        };
        let (c, t) = s.serialize();
        assert_eq!(c, "<s> x </s>");
        assert_eq!(t, "<s> <NAME> </s>");
        assert_eq!(Sample::parse(&c, &t).unwrap(), s);
        assert!(matches!(Sample::parse("<s> x </s>", "<s> </s>"), Err(Error::CorpusFormat(_))));
    }

    #[test]
    fn indent_once_per_block() {
        let src = "def f():\n    a = 1\n    b = 2\n    if a:\n        c = 3\n        d = 4\n    e = 5\n";
        let s = Sample::from_tokens(&tokenize(src), &LiteralTables::default());
        assert_eq!(s.code_tokens.iter().filter(|t| *t == INDENT).count(), 2);
        assert_eq!(s.code_tokens.iter().filter(|t| *t == DEDENT).count(), 2);
        assert_eq!(s.code_tokens.first().unwrap(), BOS);
        assert_eq!(s.code_tokens.last().unwrap(), EOS);
    }

    #[test]
    fn split_is_seeded_and_complete() {
        let items: Vec<u32> = (0..100).collect();
        let a = split_files(&items, SplitRatios::default(), 7);
        let b = split_files(&items, SplitRatios::default(), 7);
        assert_eq!(a, b);
        assert_eq!((a.train.len(), a.valid.len(), a.test.len()), (80, 10, 10));
        let mut all: Vec<u32> = a.train.iter().chain(&a.valid).chain(&a.test).copied().collect();
        all.sort();
        assert_eq!(all, items);
    }

    #[test]
    fn error_files_are_excluded() {
        let sources = vec![
            ("good.py".to_string(), "x = 1\n".to_string()),
            ("bad.py".to_string(), "x = $\n".to_string()),
        ];
        let built = build(&sources, SplitRatios { train: 1.0, valid: 0.0 }, 0);
        assert_eq!(built.excluded, ["bad.py"]);
        assert_eq!(built.split.train.len(), 1);
    }

    #[test]
    fn line_sample_cut() {
        let src = "a = 1\nb = 2\nc = foo(a, b)\nd = c\n";
        let s = Sample::from_tokens(&tokenize(src), &LiteralTables::default());
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let ls = line_sample(&s, &mut rng).unwrap();
            assert!(ls.context.len() >= 10);
            assert_eq!(ls.gold.last().unwrap(), EOL);
            assert_eq!(ls.gold.iter().filter(|t| *t == EOL).count(), 1);
            let mut joined = ls.context.clone();
            joined.extend(ls.gold.clone());
            assert_eq!(&joined[..], &s.code_tokens[..joined.len()]);
        }
        let short = Sample::from_tokens(&tokenize("x\n"), &LiteralTables::default());
        assert!(line_sample(&short, &mut rng).is_none());
    }
}
