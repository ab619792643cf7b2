//! Error-tolerant Python lexer producing the normalized token-type alphabet.
//!
//! [`lex`] mirrors the line-oriented state machine of the CPython 3.7
//! `tokenize` module (indentation stack, bracket depth, continued strings)
//! and never fails: anything it cannot tokenize becomes an `ERRORTOKEN`.
//! [`normalize`] then drops comments and end markers, folds `NEWLINE`/`NL`
//! into `EOL` and splits reserved words out of `NAME` as `KEYWORD`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

const TABSIZE: usize = 8;

macro_rules! token_types {
    ($($variant:ident),* $(,)?) => {
        /// Normalized token type: the 8 non-operator categories plus the 46
        /// exact operator/delimiter types.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
        #[serde(into = "String", try_from = "String")]
        pub enum TokenType {
            $($variant,)*
        }

        impl TokenType {
            pub const ALL: &'static [TokenType] = &[$(TokenType::$variant,)*];

            pub fn name(self) -> &'static str {
                match self {
                    $(TokenType::$variant => stringify!($variant),)*
                }
            }
        }

        impl FromStr for TokenType {
            type Err = String;

            fn from_str(s: &str) -> Result<Self, Self::Err> {
                match s {
                    $(stringify!($variant) => Ok(TokenType::$variant),)*
                    other => Err(format!("unknown token type {other:?}")),
                }
            }
        }
    };
}

token_types!(
    NAME, KEYWORD, NUMBER, STRING, INDENT, DEDENT, EOL, ERRORTOKEN,
    LPAR, RPAR, LSQB, RSQB, COLON, COMMA, SEMI, PLUS, MINUS, STAR, SLASH, VBAR, AMPER, LESS,
    GREATER, EQUAL, DOT, PERCENT, LBRACE, RBRACE, EQEQUAL, NOTEQUAL, LESSEQUAL, GREATEREQUAL,
    TILDE, CIRCUMFLEX, LEFTSHIFT, RIGHTSHIFT, DOUBLESTAR, PLUSEQUAL, MINEQUAL, STAREQUAL,
    SLASHEQUAL, PERCENTEQUAL, AMPEREQUAL, VBAREQUAL, CIRCUMFLEXEQUAL, LEFTSHIFTEQUAL,
    RIGHTSHIFTEQUAL, DOUBLESTAREQUAL, DOUBLESLASH, DOUBLESLASHEQUAL, AT, ATEQUAL, RARROW, ELLIPSIS,
);

impl TokenType {
    pub fn is_operator(self) -> bool {
        (self as usize) >= (TokenType::LPAR as usize)
    }

    /// Zero-width structural markers carry no source text.
    pub fn is_marker(self) -> bool {
        matches!(self, TokenType::INDENT | TokenType::DEDENT | TokenType::EOL)
    }
}

impl fmt::Display for TokenType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl From<TokenType> for String {
    fn from(t: TokenType) -> String {
        t.name().to_string()
    }
}

impl TryFrom<String> for TokenType {
    type Error = String;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

// Sorted so that every operator precedes its own prefixes.
const OPERATORS: &[(&str, TokenType)] = &[
    ("**=", TokenType::DOUBLESTAREQUAL),
    ("...", TokenType::ELLIPSIS),
    ("//=", TokenType::DOUBLESLASHEQUAL),
    ("<<=", TokenType::LEFTSHIFTEQUAL),
    (">>=", TokenType::RIGHTSHIFTEQUAL),
    ("!=", TokenType::NOTEQUAL),
    ("%=", TokenType::PERCENTEQUAL),
    ("&=", TokenType::AMPEREQUAL),
    ("**", TokenType::DOUBLESTAR),
    ("*=", TokenType::STAREQUAL),
    ("+=", TokenType::PLUSEQUAL),
    ("-=", TokenType::MINEQUAL),
    ("->", TokenType::RARROW),
    ("//", TokenType::DOUBLESLASH),
    ("/=", TokenType::SLASHEQUAL),
    ("<<", TokenType::LEFTSHIFT),
    ("<=", TokenType::LESSEQUAL),
    ("==", TokenType::EQEQUAL),
    (">=", TokenType::GREATEREQUAL),
    (">>", TokenType::RIGHTSHIFT),
    ("@=", TokenType::ATEQUAL),
    ("^=", TokenType::CIRCUMFLEXEQUAL),
    ("|=", TokenType::VBAREQUAL),
    ("%", TokenType::PERCENT),
    ("&", TokenType::AMPER),
    ("(", TokenType::LPAR),
    (")", TokenType::RPAR),
    ("*", TokenType::STAR),
    ("+", TokenType::PLUS),
    (",", TokenType::COMMA),
    ("-", TokenType::MINUS),
    (".", TokenType::DOT),
    ("/", TokenType::SLASH),
    (":", TokenType::COLON),
    (";", TokenType::SEMI),
    ("<", TokenType::LESS),
    ("=", TokenType::EQUAL),
    (">", TokenType::GREATER),
    ("@", TokenType::AT),
    ("[", TokenType::LSQB),
    ("]", TokenType::RSQB),
    ("^", TokenType::CIRCUMFLEX),
    ("{", TokenType::LBRACE),
    ("|", TokenType::VBAR),
    ("}", TokenType::RBRACE),
    ("~", TokenType::TILDE),
];

/// Exact operator type for an operator spelling.
pub fn operator_type(text: &str) -> Option<TokenType> {
    OPERATORS.iter().find(|(s, _)| *s == text).map(|&(_, t)| t)
}

const KEYWORDS: [&str; 35] = [
    "False", "None", "True", "and", "as", "assert", "async", "await", "break", "class",
    "continue", "def", "del", "elif", "else", "except", "finally", "for", "from", "global", "if",
    "import", "in", "is", "lambda", "nonlocal", "not", "or", "pass", "raise", "return", "try",
    "while", "with", "yield",
];

/// Python 3.7 reserved-word test.
pub fn is_keyword(name: &str) -> bool {
    KEYWORDS.binary_search(&name).is_ok()
}

/// Token category as produced by [`lex`], before normalization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RawKind {
    Name,
    Number,
    String,
    Op(TokenType),
    Indent,
    Dedent,
    Newline,
    Nl,
    Comment,
    ErrorToken,
    EndMarker,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawToken {
    pub kind: RawKind,
    pub text: String,
    pub line: usize,
    pub col: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TypedToken {
    pub text: String,
    #[serde(rename = "type")]
    pub ttype: TokenType,
    pub line: usize,
    pub col: usize,
}

impl TypedToken {
    /// Maps a normalized token back onto the raw alphabet; `normalize` is a
    /// fixed point on streams produced this way.
    pub fn to_raw(&self) -> RawToken {
        let kind = match self.ttype {
            TokenType::NAME | TokenType::KEYWORD => RawKind::Name,
            TokenType::NUMBER => RawKind::Number,
            TokenType::STRING => RawKind::String,
            TokenType::INDENT => RawKind::Indent,
            TokenType::DEDENT => RawKind::Dedent,
            TokenType::EOL => RawKind::Newline,
            TokenType::ERRORTOKEN => RawKind::ErrorToken,
            op => RawKind::Op(op),
        };
        RawToken {
            kind,
            text: self.text.clone(),
            line: self.line,
            col: self.col,
        }
    }
}

/// Lexes then normalizes.
pub fn tokenize(source: &str) -> Vec<TypedToken> {
    normalize(&lex(source))
}

pub fn normalize(raw: &[RawToken]) -> Vec<TypedToken> {
    raw.iter()
        .filter_map(|t| {
            let ttype = match t.kind {
                RawKind::Comment | RawKind::EndMarker => return None,
                RawKind::Name if is_keyword(&t.text) => TokenType::KEYWORD,
                RawKind::Name => TokenType::NAME,
                RawKind::Number => TokenType::NUMBER,
                RawKind::String => TokenType::STRING,
                RawKind::Op(op) => op,
                RawKind::Indent => TokenType::INDENT,
                RawKind::Dedent => TokenType::DEDENT,
                RawKind::Newline | RawKind::Nl => TokenType::EOL,
                RawKind::ErrorToken => TokenType::ERRORTOKEN,
            };
            let text = if ttype.is_marker() {
                String::new()
            } else {
                t.text.clone()
            };
            Some(TypedToken {
                text,
                ttype,
                line: t.line,
                col: t.col,
            })
        })
        .collect()
}

/// Total lexer over arbitrary (possibly truncated) source text.
pub fn lex(source: &str) -> Vec<RawToken> {
    Lexer::default().run(source)
}

enum Pending {
    /// Inside a triple-quoted string: the quote char.
    Triple(char),
    /// Inside a single-quoted string continued with backslash-newline.
    Continued(char),
}

struct OpenString {
    kind: Pending,
    text: String,
    line: usize,
    col: usize,
}

#[derive(Default)]
struct Lexer {
    out: Vec<RawToken>,
    indents: Vec<usize>,
    parens: usize,
    continued: bool,
    open: Option<OpenString>,
}

impl Lexer {
    fn push(&mut self, kind: RawKind, text: impl Into<String>, line: usize, col: usize) {
        self.out.push(RawToken {
            kind,
            text: text.into(),
            line,
            col,
        });
    }

    fn run(mut self, source: &str) -> Vec<RawToken> {
        self.indents.push(0);
        let mut lnum = 0;
        let mut lines = source.split_inclusive('\n');
        loop {
            let line: Vec<char> = lines.next().map(|l| l.chars().collect()).unwrap_or_default();
            lnum += 1;
            if !self.line(&line, lnum) {
                break;
            }
        }
        if let Some(open) = self.open.take() {
            // Dangling string at end of input.
            self.push(RawKind::ErrorToken, open.text, open.line, open.col);
        }
        for _ in 1..self.indents.len() {
            self.push(RawKind::Dedent, "", lnum, 0);
        }
        self.push(RawKind::EndMarker, "", lnum, 0);
        self.out
    }

    /// Processes one physical line; returns false at end of input.
    fn line(&mut self, line: &[char], lnum: usize) -> bool {
        let max = line.len();
        let mut pos = 0;

        if let Some(mut open) = self.open.take() {
            if line.is_empty() {
                self.open = Some(open);
                return false;
            }
            let found = match open.kind {
                Pending::Triple(q) => triple_end(line, 0, q),
                Pending::Continued(q) => continued_end(line, q),
            };
            match found {
                Some(end) => {
                    open.text.extend(&line[..end]);
                    self.push(RawKind::String, open.text, open.line, open.col);
                    pos = end;
                }
                None => {
                    let needs_cont = matches!(open.kind, Pending::Continued(_));
                    open.text.extend(line);
                    if needs_cont && !ends_with_backslash_newline(line) {
                        self.push(RawKind::ErrorToken, open.text, open.line, open.col);
                    } else {
                        self.open = Some(open);
                    }
                    return true;
                }
            }
        } else if self.parens == 0 && !self.continued {
            if line.is_empty() {
                return false;
            }
            let mut column = 0;
            while pos < max {
                match line[pos] {
                    ' ' => column += 1,
                    '\t' => column = (column / TABSIZE + 1) * TABSIZE,
                    '\x0c' => column = 0,
                    _ => break,
                }
                pos += 1;
            }
            if pos == max {
                return false;
            }
            if matches!(line[pos], '#' | '\r' | '\n') {
                if line[pos] == '#' {
                    let end = comment_end(line, pos);
                    self.push(RawKind::Comment, collect(&line[pos..end]), lnum, pos);
                    pos = end;
                }
                self.push(RawKind::Nl, collect(&line[pos..]), lnum, pos);
                return true;
            }
            if column > *self.indents.last().unwrap() {
                self.indents.push(column);
                self.push(RawKind::Indent, collect(&line[..pos]), lnum, 0);
            }
            while column < *self.indents.last().unwrap() {
                self.indents.pop();
                self.push(RawKind::Dedent, "", lnum, pos);
            }
            if column != *self.indents.last().unwrap() {
                // Unindent to a level that was never opened.
                self.push(RawKind::ErrorToken, collect(&line[..pos]), lnum, 0);
            }
        } else {
            if line.is_empty() {
                return false;
            }
            self.continued = false;
        }

        while pos < max {
            let start = skip_whitespace(line, pos);
            if start == max {
                break;
            }
            pos = self.token(line, lnum, start);
            if self.open.is_some() {
                break;
            }
        }
        true
    }

    /// Lexes one token starting at `start`; returns the next position.
    fn token(&mut self, line: &[char], lnum: usize, start: usize) -> usize {
        let c = line[start];
        let max = line.len();

        if c == '\\' {
            match line.get(start + 1) {
                Some('\n') => {
                    self.continued = true;
                    return start + 2;
                }
                Some('\r') if line.get(start + 2) == Some(&'\n') => {
                    self.continued = true;
                    return start + 3;
                }
                _ => {
                    self.push(RawKind::ErrorToken, "\\", lnum, start);
                    return start + 1;
                }
            }
        }
        if c == '#' {
            let end = comment_end(line, start);
            self.push(RawKind::Comment, collect(&line[start..end]), lnum, start);
            return end;
        }
        if let Some((prefix_len, quote)) = string_start(line, start) {
            let q = start + prefix_len;
            let triple = line.get(q + 1) == Some(&quote) && line.get(q + 2) == Some(&quote);
            if triple {
                return match triple_end(line, q + 3, quote) {
                    Some(end) => {
                        self.push(RawKind::String, collect(&line[start..end]), lnum, start);
                        end
                    }
                    None => {
                        self.open = Some(OpenString {
                            kind: Pending::Triple(quote),
                            text: collect(&line[start..]),
                            line: lnum,
                            col: start,
                        });
                        max
                    }
                };
            }
        }
        if let Some(end) = number_end(line, start) {
            self.push(RawKind::Number, collect(&line[start..end]), lnum, start);
            return end;
        }
        if c == '\n' || (c == '\r' && line.get(start + 1) == Some(&'\n')) {
            let kind = if self.parens > 0 { RawKind::Nl } else { RawKind::Newline };
            self.push(kind, collect(&line[start..]), lnum, start);
            return max;
        }
        if let Some((text, ttype)) = OPERATORS
            .iter()
            .find(|(s, _)| starts_with(line, start, s))
        {
            match c {
                '(' | '[' | '{' => self.parens += 1,
                ')' | ']' | '}' => self.parens = self.parens.saturating_sub(1),
                _ => {}
            }
            self.push(RawKind::Op(*ttype), *text, lnum, start);
            return start + text.chars().count();
        }
        if let Some((prefix_len, quote)) = string_start(line, start) {
            return match single_end(line, start + prefix_len + 1, quote) {
                SingleEnd::Closed(end) => {
                    self.push(RawKind::String, collect(&line[start..end]), lnum, start);
                    end
                }
                SingleEnd::Continued => {
                    self.open = Some(OpenString {
                        kind: Pending::Continued(quote),
                        text: collect(&line[start..]),
                        line: lnum,
                        col: start,
                    });
                    max
                }
                SingleEnd::Unterminated(end) => {
                    self.push(RawKind::ErrorToken, collect(&line[start..end]), lnum, start);
                    end
                }
            };
        }
        if is_word_char(c) {
            let mut end = start;
            while end < max && is_word_char(line[end]) {
                end += 1;
            }
            let kind = if is_identifier_start(c) { RawKind::Name } else { RawKind::ErrorToken };
            self.push(kind, collect(&line[start..end]), lnum, start);
            return end;
        }
        self.push(RawKind::ErrorToken, c.to_string(), lnum, start);
        start + 1
    }
}

fn collect(chars: &[char]) -> String {
    chars.iter().collect()
}

fn starts_with(line: &[char], at: usize, s: &str) -> bool {
    let mut i = at;
    for c in s.chars() {
        if line.get(i) != Some(&c) {
            return false;
        }
        i += 1;
    }
    true
}

fn skip_whitespace(line: &[char], mut pos: usize) -> usize {
    while pos < line.len() && matches!(line[pos], ' ' | '\t' | '\x0c') {
        pos += 1;
    }
    pos
}

fn comment_end(line: &[char], mut pos: usize) -> usize {
    while pos < line.len() && !matches!(line[pos], '\r' | '\n') {
        pos += 1;
    }
    pos
}

fn ends_with_backslash_newline(line: &[char]) -> bool {
    line.ends_with(&['\\', '\n']) || line.ends_with(&['\\', '\r', '\n'])
}

fn is_word_char(c: char) -> bool {
    c == '_' || c.is_alphanumeric()
}

fn is_identifier_start(c: char) -> bool {
    c == '_' || c.is_alphabetic()
}

/// Recognizes a (possibly prefixed) string opening at `pos`: returns the
/// prefix length and the quote character.
fn string_start(line: &[char], pos: usize) -> Option<(usize, char)> {
    for prefix_len in 0..=2 {
        let quote = *line.get(pos + prefix_len)?;
        if quote == '\'' || quote == '"' {
            let prefix: String = line[pos..pos + prefix_len]
                .iter()
                .map(|c| c.to_ascii_lowercase())
                .collect();
            let valid = matches!(
                prefix.as_str(),
                "" | "b" | "r" | "u" | "f" | "br" | "rb" | "fr" | "rf"
            );
            return valid.then_some((prefix_len, quote));
        }
        if !line[pos + prefix_len].is_ascii_alphabetic() {
            return None;
        }
    }
    None
}

/// End (exclusive) of a triple-quoted string body searched from `pos`.
/// Escapes do not span lines, mirroring the reference tokenizer.
fn triple_end(line: &[char], mut pos: usize, quote: char) -> Option<usize> {
    while pos < line.len() {
        let c = line[pos];
        if c == '\\' {
            match line.get(pos + 1) {
                Some(&n) if n != '\n' => pos += 2,
                _ => return None,
            }
        } else if c == quote && line.get(pos + 1) == Some(&quote) && line.get(pos + 2) == Some(&quote)
        {
            return Some(pos + 3);
        } else {
            pos += 1;
        }
    }
    None
}

/// End of a backslash-continued single-quoted string on a following line.
fn continued_end(line: &[char], quote: char) -> Option<usize> {
    let mut pos = 0;
    while pos < line.len() {
        let c = line[pos];
        if c == '\\' {
            match line.get(pos + 1) {
                Some(&n) if n != '\n' => pos += 2,
                _ => return None,
            }
        } else if c == quote {
            return Some(pos + 1);
        } else {
            pos += 1;
        }
    }
    None
}

enum SingleEnd {
    Closed(usize),
    /// Backslash-newline before the closing quote.
    Continued,
    /// No closing quote on this line; the fragment ends before the newline.
    Unterminated(usize),
}

fn single_end(line: &[char], mut pos: usize, quote: char) -> SingleEnd {
    let unterminated = |line: &[char]| {
        let mut end = line.len();
        while end > 0 && matches!(line[end - 1], '\n' | '\r') {
            end -= 1;
        }
        SingleEnd::Unterminated(end)
    };
    while pos < line.len() {
        match line[pos] {
            c if c == quote => return SingleEnd::Closed(pos + 1),
            '\n' => return unterminated(line),
            '\\' => match line.get(pos + 1) {
                Some('\n') => return SingleEnd::Continued,
                Some('\r') if line.get(pos + 2) == Some(&'\n') => return SingleEnd::Continued,
                Some(_) => pos += 2,
                None => return unterminated(line),
            },
            _ => pos += 1,
        }
    }
    unterminated(line)
}

fn digit_part(line: &[char], pos: usize) -> Option<usize> {
    digits_with(line, pos, |c| c.is_ascii_digit())
}

/// `d(?:_?d)*` for the given digit class.
fn digits_with(line: &[char], pos: usize, is_digit: impl Fn(char) -> bool) -> Option<usize> {
    if !line.get(pos).is_some_and(|&c| is_digit(c)) {
        return None;
    }
    let mut end = pos + 1;
    loop {
        match line.get(end) {
            Some(&c) if is_digit(c) => end += 1,
            Some('_') if line.get(end + 1).is_some_and(|&c| is_digit(c)) => end += 2,
            _ => return Some(end),
        }
    }
}

fn exponent(line: &[char], pos: usize) -> Option<usize> {
    if !matches!(line.get(pos), Some('e' | 'E')) {
        return None;
    }
    let mut p = pos + 1;
    if matches!(line.get(p), Some('+' | '-')) {
        p += 1;
    }
    digit_part(line, p)
}

fn point_float(line: &[char], pos: usize) -> Option<usize> {
    let body = match digit_part(line, pos) {
        Some(int_end) if line.get(int_end) == Some(&'.') => {
            Some(digit_part(line, int_end + 1).unwrap_or(int_end + 1))
        }
        Some(_) => None,
        None if line.get(pos) == Some(&'.') => digit_part(line, pos + 1),
        None => None,
    }?;
    Some(exponent(line, body).unwrap_or(body))
}

fn float_number(line: &[char], pos: usize) -> Option<usize> {
    point_float(line, pos).or_else(|| exponent(line, digit_part(line, pos)?))
}

fn int_number(line: &[char], pos: usize) -> Option<usize> {
    if line.get(pos) == Some(&'0') {
        let radix: Option<fn(char) -> bool> = match line.get(pos + 1) {
            Some('x' | 'X') => Some(|c: char| c.is_ascii_hexdigit()),
            Some('b' | 'B') => Some(|c: char| c == '0' || c == '1'),
            Some('o' | 'O') => Some(|c: char| ('0'..='7').contains(&c)),
            _ => None,
        };
        if let Some(is_digit) = radix {
            let start = if line.get(pos + 2) == Some(&'_') { pos + 3 } else { pos + 2 };
            if let Some(end) = digits_with(line, start, is_digit) {
                return Some(end);
            }
        }
        return digits_with(line, pos, |c| c == '0');
    }
    if line.get(pos).is_some_and(|c| ('1'..='9').contains(c)) {
        return digit_part(line, pos);
    }
    None
}

/// Longest-alternative number match in the reference order:
/// imaginary, float, then integer.
fn number_end(line: &[char], pos: usize) -> Option<usize> {
    let imag = |end: usize| matches!(line.get(end), Some('j' | 'J')).then_some(end + 1);
    if let Some(end) = digit_part(line, pos).and_then(imag) {
        return Some(end);
    }
    if let Some(end) = float_number(line, pos) {
        return Some(imag(end).unwrap_or(end));
    }
    int_number(line, pos)
}
