//! Character-prefix parsability scanning: how many prefixes of a source
//! file would a parser accept if invoked at every keystroke.
//!
//! Two checkers are available. [`Checker::TokenLevel`] looks only at the
//! token stream (lexer errors, bracket balance, block headers without a
//! body). [`Checker::GrammarSubset`] additionally runs a recursive-descent
//! parse of the Python subset described in `docs/grammar-subset.md`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::lexer::{is_keyword, lex, RawKind, RawToken, TokenType};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Checker {
    TokenLevel,
    GrammarSubset,
}

impl FromStr for Checker {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().replace('_', "-").as_str() {
            "token-level" | "token" => Ok(Checker::TokenLevel),
            "grammar-subset" | "grammar" => Ok(Checker::GrammarSubset),
            other => Err(Error::Config(format!("unknown checker {other:?}"))),
        }
    }
}

impl fmt::Display for Checker {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Checker::TokenLevel => "token-level",
            Checker::GrammarSubset => "grammar-subset",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Reason {
    LexError,
    UnbalancedBracket,
    DanglingIndent,
    GrammarReject,
}

impl Reason {
    pub const ALL: [Reason; 4] = [
        Reason::LexError,
        Reason::UnbalancedBracket,
        Reason::DanglingIndent,
        Reason::GrammarReject,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Reason::LexError => "lex-error",
            Reason::UnbalancedBracket => "unbalanced-bracket",
            Reason::DanglingIndent => "dangling-indent",
            Reason::GrammarReject => "grammar-reject",
        }
    }
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Verdict for one prefix: `None` means parsable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParseStatus {
    pub reason: Option<Reason>,
}

impl ParseStatus {
    pub const PARSABLE: ParseStatus = ParseStatus { reason: None };

    pub fn rejected(reason: Reason) -> Self {
        ParseStatus { reason: Some(reason) }
    }

    pub fn is_parsable(&self) -> bool {
        self.reason.is_none()
    }
}

pub fn check_prefix(prefix: &str, checker: Checker) -> ParseStatus {
    let tokens = significant_tokens(&lex(prefix));
    let token_level = token_level_status(prefix, &tokens);
    match checker {
        Checker::TokenLevel => token_level,
        Checker::GrammarSubset => {
            if token_level.reason == Some(Reason::LexError) {
                token_level
            } else if !Parser::new(&tokens).file() {
                ParseStatus::rejected(Reason::GrammarReject)
            } else {
                token_level
            }
        }
    }
}

/// Tokens the parser sees: comments and blank-line `NL`s are dropped.
fn significant_tokens(raw: &[RawToken]) -> Vec<RawToken> {
    raw.iter()
        .filter(|t| !matches!(t.kind, RawKind::Comment | RawKind::Nl))
        .cloned()
        .collect()
}

fn ends_in_line_continuation(prefix: &str) -> bool {
    let body = prefix.strip_suffix('\n').unwrap_or(prefix);
    let body = body.strip_suffix('\r').unwrap_or(body);
    body.len() < prefix.len() && body.ends_with('\\') || prefix.ends_with('\\')
}

fn token_level_status(prefix: &str, tokens: &[RawToken]) -> ParseStatus {
    if tokens.iter().any(|t| t.kind == RawKind::ErrorToken) || ends_in_line_continuation(prefix) {
        return ParseStatus::rejected(Reason::LexError);
    }
    if !brackets_balance(tokens) {
        return ParseStatus::rejected(Reason::UnbalancedBracket);
    }
    if has_bodiless_block(tokens) {
        return ParseStatus::rejected(Reason::DanglingIndent);
    }
    ParseStatus::PARSABLE
}

fn brackets_balance(tokens: &[RawToken]) -> bool {
    let mut stack = Vec::new();
    for t in tokens {
        if let RawKind::Op(op) = t.kind {
            match op {
                TokenType::LPAR => stack.push(TokenType::RPAR),
                TokenType::LSQB => stack.push(TokenType::RSQB),
                TokenType::LBRACE => stack.push(TokenType::RBRACE),
                TokenType::RPAR | TokenType::RSQB | TokenType::RBRACE
                    if stack.pop() != Some(op) => {
                        return false;
                    }
                _ => {}
            }
        }
    }
    stack.is_empty()
}

/// A `:` ending a logical line outside brackets must be followed by an
/// indented block.
fn has_bodiless_block(tokens: &[RawToken]) -> bool {
    let mut depth = 0usize;
    for (i, t) in tokens.iter().enumerate() {
        match t.kind {
            RawKind::Op(TokenType::LPAR | TokenType::LSQB | TokenType::LBRACE) => depth += 1,
            RawKind::Op(TokenType::RPAR | TokenType::RSQB | TokenType::RBRACE) => depth = depth.saturating_sub(1),
            RawKind::Op(TokenType::COLON) if depth == 0 => {
                let mut rest = tokens[i + 1..].iter().map(|t| t.kind);
                match rest.next() {
                    Some(RawKind::Newline) => {
                        if rest.next() != Some(RawKind::Indent) {
                            return true;
                        }
                    }
                    Some(RawKind::Dedent | RawKind::EndMarker) | None => return true,
                    _ => {}
                }
            }
            _ => {}
        }
    }
    false
}

/// Parse verdicts for one file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProbeReport {
    pub file: String,
    pub checker: Checker,
    pub total_chars: usize,
    pub parsable: usize,
    pub failed: usize,
    pub reasons: BTreeMap<Reason, usize>,
}

/// Checks every non-empty character prefix of `source`, re-lexing each
/// from scratch.
pub fn scan_file(file: &str, source: &str, checker: Checker) -> ProbeReport {
    scan_file_with(file, source, checker, |_, _| {})
}

/// [`scan_file`] that also hands each prefix length and status to `visit`.
pub fn scan_file_with(
    file: &str,
    source: &str,
    checker: Checker,
    mut visit: impl FnMut(usize, ParseStatus),
) -> ProbeReport {
    let mut report = ProbeReport {
        file: file.to_string(),
        checker,
        total_chars: 0,
        parsable: 0,
        failed: 0,
        reasons: BTreeMap::new(),
    };
    let ends = source.char_indices().map(|(i, c)| i + c.len_utf8());
    for (n, end) in ends.enumerate() {
        let status = check_prefix(&source[..end], checker);
        report.total_chars += 1;
        match status.reason {
            None => report.parsable += 1,
            Some(r) => {
                report.failed += 1;
                *report.reasons.entry(r).or_default() += 1;
            }
        }
        visit(n + 1, status);
    }
    report
}

/// Character-weighted totals across files.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProbeSummary {
    pub files: usize,
    pub total_chars: usize,
    pub parsable: usize,
    pub failed: usize,
    pub success_pct: f64,
    pub failure_pct: f64,
    /// Share of all prefixes failing for each reason, in percent.
    pub reason_pct: BTreeMap<Reason, f64>,
}

pub fn aggregate(reports: &[ProbeReport]) -> Result<ProbeSummary> {
    if reports.is_empty() {
        return Err(Error::Contract("aggregate needs at least one report".into()));
    }
    let total: usize = reports.iter().map(|r| r.total_chars).sum();
    let parsable: usize = reports.iter().map(|r| r.parsable).sum();
    let failed: usize = reports.iter().map(|r| r.failed).sum();
    let pct = |n: usize| if total == 0 { 0.0 } else { 100.0 * n as f64 / total as f64 };
    let mut reason_pct = BTreeMap::new();
    for r in reports {
        for (&reason, &n) in &r.reasons {
            *reason_pct.entry(reason).or_insert(0.0) += pct(n);
        }
    }
    Ok(ProbeSummary {
        files: reports.len(),
        total_chars: total,
        parsable,
        failed,
        success_pct: pct(parsable),
        failure_pct: pct(failed),
        reason_pct,
    })
}

type Parsed = std::result::Result<(), Reject>;

/// Marker for a failed parse.
#[derive(Debug)]
struct Reject;

/// Recursive descent over significant tokens. Every method consumes a
/// construct or returns `Reject`; callers backtrack only by peeking.
struct Parser<'t> {
    toks: &'t [RawToken],
    pos: usize,
}

const COMPARISON_OPS: [TokenType; 6] = [
    TokenType::LESS,
    TokenType::GREATER,
    TokenType::EQEQUAL,
    TokenType::GREATEREQUAL,
    TokenType::LESSEQUAL,
    TokenType::NOTEQUAL,
];

const AUGMENTED_OPS: [TokenType; 13] = [
    TokenType::PLUSEQUAL,
    TokenType::MINEQUAL,
    TokenType::STAREQUAL,
    TokenType::SLASHEQUAL,
    TokenType::PERCENTEQUAL,
    TokenType::AMPEREQUAL,
    TokenType::VBAREQUAL,
    TokenType::CIRCUMFLEXEQUAL,
    TokenType::LEFTSHIFTEQUAL,
    TokenType::RIGHTSHIFTEQUAL,
    TokenType::DOUBLESTAREQUAL,
    TokenType::DOUBLESLASHEQUAL,
    TokenType::ATEQUAL,
];

impl<'t> Parser<'t> {
    fn new(toks: &'t [RawToken]) -> Self {
        Parser { toks, pos: 0 }
    }

    fn kind(&self) -> RawKind {
        self.kind_at(0)
    }

    fn kind_at(&self, ahead: usize) -> RawKind {
        self.toks.get(self.pos + ahead).map_or(RawKind::EndMarker, |t| t.kind)
    }

    fn at_op(&self, op: TokenType) -> bool {
        self.kind() == RawKind::Op(op)
    }

    fn at_any_op(&self, ops: &[TokenType]) -> bool {
        matches!(self.kind(), RawKind::Op(op) if ops.contains(&op))
    }

    fn at_keyword(&self, word: &str) -> bool {
        self.keyword_at(0, word)
    }

    fn keyword_at(&self, ahead: usize, word: &str) -> bool {
        self.toks
            .get(self.pos + ahead)
            .is_some_and(|t| t.kind == RawKind::Name && t.text == word)
    }

    fn bump(&mut self) {
        self.pos += 1;
    }

    fn eat_op(&mut self, op: TokenType) -> bool {
        let hit = self.at_op(op);
        if hit {
            self.bump();
        }
        hit
    }

    fn eat_keyword(&mut self, word: &str) -> bool {
        let hit = self.at_keyword(word);
        if hit {
            self.bump();
        }
        hit
    }

    fn expect_op(&mut self, op: TokenType) -> Parsed {
        if self.eat_op(op) {
            Ok(())
        } else {
            Err(Reject)
        }
    }

    fn expect_keyword(&mut self, word: &str) -> Parsed {
        if self.eat_keyword(word) {
            Ok(())
        } else {
            Err(Reject)
        }
    }

    fn expect_kind(&mut self, kind: RawKind) -> Parsed {
        if self.kind() == kind {
            self.bump();
            Ok(())
        } else {
            Err(Reject)
        }
    }

    fn identifier(&mut self) -> Parsed {
        match self.toks.get(self.pos) {
            Some(t) if t.kind == RawKind::Name && !is_keyword(&t.text) => {
                self.bump();
                Ok(())
            }
            _ => Err(Reject),
        }
    }

    /// `file := (NEWLINE | stmt)* ENDMARKER`
    fn file(&mut self) -> bool {
        self.statements().is_ok() && self.pos + 1 >= self.toks.len()
    }

    fn statements(&mut self) -> Parsed {
        loop {
            match self.kind() {
                RawKind::EndMarker => return Ok(()),
                RawKind::Newline => self.bump(),
                _ => self.stmt()?,
            }
        }
    }

    fn stmt(&mut self) -> Parsed {
        for (word, rule) in [
            ("if", Self::if_stmt as fn(&mut Self) -> Parsed),
            ("while", Self::while_stmt),
            ("for", Self::for_stmt),
            ("def", Self::funcdef),
            ("class", Self::classdef),
        ] {
            if self.at_keyword(word) {
                return rule(self);
            }
        }
        self.simple_stmts()
    }

    fn simple_stmts(&mut self) -> Parsed {
        self.small_stmt()?;
        while self.eat_op(TokenType::SEMI) {
            if self.at_line_end() {
                break;
            }
            self.small_stmt()?;
        }
        self.line_end()
    }

    fn at_line_end(&self) -> bool {
        matches!(self.kind(), RawKind::Newline | RawKind::EndMarker | RawKind::Dedent)
    }

    /// A newline, or end of input (possibly behind closing dedents).
    fn line_end(&mut self) -> Parsed {
        match self.kind() {
            RawKind::Newline => {
                self.bump();
                Ok(())
            }
            RawKind::EndMarker | RawKind::Dedent => Ok(()),
            _ => Err(Reject),
        }
    }

    fn small_stmt(&mut self) -> Parsed {
        if self.eat_keyword("pass") || self.eat_keyword("break") || self.eat_keyword("continue") {
            return Ok(());
        }
        if self.eat_keyword("return") {
            if !self.at_line_end() && !self.at_op(TokenType::SEMI) {
                self.testlist_star()?;
            }
            return Ok(());
        }
        if self.at_keyword("import") {
            return self.import_name();
        }
        if self.at_keyword("from") {
            return self.import_from();
        }
        self.expr_stmt()
    }

    fn expr_stmt(&mut self) -> Parsed {
        self.testlist_star()?;
        if self.eat_op(TokenType::COLON) {
            self.test()?;
            if self.eat_op(TokenType::EQUAL) {
                self.testlist_star()?;
            }
            return Ok(());
        }
        if self.at_any_op(&AUGMENTED_OPS) {
            self.bump();
            return self.testlist();
        }
        while self.eat_op(TokenType::EQUAL) {
            self.testlist_star()?;
        }
        Ok(())
    }

    fn import_name(&mut self) -> Parsed {
        self.expect_keyword("import")?;
        loop {
            self.dotted_name()?;
            if self.eat_keyword("as") {
                self.identifier()?;
            }
            if !self.eat_op(TokenType::COMMA) {
                return Ok(());
            }
        }
    }

    fn import_from(&mut self) -> Parsed {
        self.expect_keyword("from")?;
        let mut dots = 0;
        while self.at_op(TokenType::DOT) || self.at_op(TokenType::ELLIPSIS) {
            dots += 1;
            self.bump();
        }
        if !self.at_keyword("import") {
            self.dotted_name()?;
        } else if dots == 0 {
            return Err(Reject);
        }
        self.expect_keyword("import")?;
        if self.eat_op(TokenType::STAR) {
            return Ok(());
        }
        let paren = self.eat_op(TokenType::LPAR);
        loop {
            self.identifier()?;
            if self.eat_keyword("as") {
                self.identifier()?;
            }
            if !self.eat_op(TokenType::COMMA) {
                break;
            }
            if paren && self.at_op(TokenType::RPAR) {
                break;
            }
        }
        if paren {
            self.expect_op(TokenType::RPAR)?;
        }
        Ok(())
    }

    fn dotted_name(&mut self) -> Parsed {
        self.identifier()?;
        while self.eat_op(TokenType::DOT) {
            self.identifier()?;
        }
        Ok(())
    }

    fn if_stmt(&mut self) -> Parsed {
        self.expect_keyword("if")?;
        self.test()?;
        self.expect_op(TokenType::COLON)?;
        self.suite()?;
        while self.eat_keyword("elif") {
            self.test()?;
            self.expect_op(TokenType::COLON)?;
            self.suite()?;
        }
        self.else_clause()
    }

    fn else_clause(&mut self) -> Parsed {
        if self.eat_keyword("else") {
            self.expect_op(TokenType::COLON)?;
            self.suite()?;
        }
        Ok(())
    }

    fn while_stmt(&mut self) -> Parsed {
        self.expect_keyword("while")?;
        self.test()?;
        self.expect_op(TokenType::COLON)?;
        self.suite()?;
        self.else_clause()
    }

    fn for_stmt(&mut self) -> Parsed {
        self.expect_keyword("for")?;
        self.exprlist()?;
        self.expect_keyword("in")?;
        self.testlist()?;
        self.expect_op(TokenType::COLON)?;
        self.suite()?;
        self.else_clause()
    }

    fn funcdef(&mut self) -> Parsed {
        self.expect_keyword("def")?;
        self.identifier()?;
        self.expect_op(TokenType::LPAR)?;
        self.parameters(TokenType::RPAR, true)?;
        self.expect_op(TokenType::RPAR)?;
        if self.eat_op(TokenType::RARROW) {
            self.test()?;
        }
        self.expect_op(TokenType::COLON)?;
        self.suite()
    }

    /// Parameter list up to (not including) `close`.
    fn parameters(&mut self, close: TokenType, annotated: bool) -> Parsed {
        while !self.at_op(close) {
            if self.eat_op(TokenType::DOUBLESTAR) {
                self.param_name(annotated)?;
            } else if self.eat_op(TokenType::STAR) {
                if !self.at_op(TokenType::COMMA) && !self.at_op(close) {
                    self.param_name(annotated)?;
                }
            } else {
                self.param_name(annotated)?;
                if self.eat_op(TokenType::EQUAL) {
                    self.test()?;
                }
            }
            if !self.eat_op(TokenType::COMMA) {
                break;
            }
        }
        Ok(())
    }

    fn param_name(&mut self, annotated: bool) -> Parsed {
        self.identifier()?;
        if annotated && self.eat_op(TokenType::COLON) {
            self.test()?;
        }
        Ok(())
    }

    fn classdef(&mut self) -> Parsed {
        self.expect_keyword("class")?;
        self.identifier()?;
        if self.eat_op(TokenType::LPAR) {
            self.arglist(TokenType::RPAR)?;
            self.expect_op(TokenType::RPAR)?;
        }
        self.expect_op(TokenType::COLON)?;
        self.suite()
    }

    /// `suite := simple_stmts | NEWLINE INDENT stmt+ DEDENT`
    fn suite(&mut self) -> Parsed {
        if self.kind() != RawKind::Newline {
            return self.simple_stmts();
        }
        self.bump();
        self.expect_kind(RawKind::Indent)?;
        self.stmt()?;
        loop {
            match self.kind() {
                RawKind::Dedent => {
                    self.bump();
                    return Ok(());
                }
                RawKind::Newline => self.bump(),
                RawKind::EndMarker => return Err(Reject),
                _ => self.stmt()?,
            }
        }
    }

    fn testlist_star(&mut self) -> Parsed {
        self.sequence(Self::test_or_star)
    }

    fn testlist(&mut self) -> Parsed {
        self.sequence(Self::test)
    }

    fn exprlist(&mut self) -> Parsed {
        self.sequence(Self::expr_or_star)
    }

    /// `item (',' item)* [',']` ending at a token that cannot start an
    /// expression.
    fn sequence(&mut self, item: fn(&mut Self) -> Parsed) -> Parsed {
        item(self)?;
        while self.eat_op(TokenType::COMMA) {
            if !self.starts_expression() {
                break;
            }
            item(self)?;
        }
        Ok(())
    }

    fn starts_expression(&self) -> bool {
        match self.toks.get(self.pos) {
            None => false,
            Some(t) => match t.kind {
                RawKind::Name => {
                    !is_keyword(&t.text) || matches!(t.text.as_str(), "None" | "True" | "False" | "not" | "lambda")
                }
                RawKind::Number | RawKind::String => true,
                RawKind::Op(op) => matches!(
                    op,
                    TokenType::LPAR
                        | TokenType::LSQB
                        | TokenType::LBRACE
                        | TokenType::MINUS
                        | TokenType::PLUS
                        | TokenType::TILDE
                        | TokenType::STAR
                        | TokenType::ELLIPSIS
                ),
                _ => false,
            },
        }
    }

    fn test_or_star(&mut self) -> Parsed {
        if self.eat_op(TokenType::STAR) {
            return self.expr();
        }
        self.test()
    }

    fn expr_or_star(&mut self) -> Parsed {
        if self.eat_op(TokenType::STAR) {
            return self.expr();
        }
        self.expr()
    }

    fn test(&mut self) -> Parsed {
        if self.at_keyword("lambda") {
            return self.lambdef(true);
        }
        self.or_test()?;
        if self.eat_keyword("if") {
            self.or_test()?;
            self.expect_keyword("else")?;
            self.test()?;
        }
        Ok(())
    }

    /// Condition inside a comprehension: no unparenthesized ternary.
    fn test_nocond(&mut self) -> Parsed {
        if self.at_keyword("lambda") {
            return self.lambdef(false);
        }
        self.or_test()
    }

    fn lambdef(&mut self, allow_cond: bool) -> Parsed {
        self.expect_keyword("lambda")?;
        self.parameters(TokenType::COLON, false)?;
        self.expect_op(TokenType::COLON)?;
        if allow_cond {
            self.test()
        } else {
            self.test_nocond()
        }
    }

    fn or_test(&mut self) -> Parsed {
        self.and_test()?;
        while self.eat_keyword("or") {
            self.and_test()?;
        }
        Ok(())
    }

    fn and_test(&mut self) -> Parsed {
        self.not_test()?;
        while self.eat_keyword("and") {
            self.not_test()?;
        }
        Ok(())
    }

    fn not_test(&mut self) -> Parsed {
        if self.eat_keyword("not") {
            return self.not_test();
        }
        self.comparison()
    }

    fn comparison(&mut self) -> Parsed {
        self.expr()?;
        loop {
            if self.at_any_op(&COMPARISON_OPS) || self.at_keyword("in") {
                self.bump();
            } else if self.at_keyword("not") && self.keyword_at(1, "in") {
                self.pos += 2;
            } else if self.eat_keyword("is") {
                self.eat_keyword("not");
            } else {
                return Ok(());
            }
            self.expr()?;
        }
    }

    fn binary(&mut self, ops: &[TokenType], operand: fn(&mut Self) -> Parsed) -> Parsed {
        operand(self)?;
        while self.at_any_op(ops) {
            self.bump();
            operand(self)?;
        }
        Ok(())
    }

    fn expr(&mut self) -> Parsed {
        self.binary(&[TokenType::VBAR], Self::xor_expr)
    }

    fn xor_expr(&mut self) -> Parsed {
        self.binary(&[TokenType::CIRCUMFLEX], Self::and_expr)
    }

    fn and_expr(&mut self) -> Parsed {
        self.binary(&[TokenType::AMPER], Self::shift_expr)
    }

    fn shift_expr(&mut self) -> Parsed {
        self.binary(&[TokenType::LEFTSHIFT, TokenType::RIGHTSHIFT], Self::arith_expr)
    }

    fn arith_expr(&mut self) -> Parsed {
        self.binary(&[TokenType::PLUS, TokenType::MINUS], Self::term)
    }

    fn term(&mut self) -> Parsed {
        self.binary(
            &[
                TokenType::STAR,
                TokenType::AT,
                TokenType::SLASH,
                TokenType::PERCENT,
                TokenType::DOUBLESLASH,
            ],
            Self::factor,
        )
    }

    fn factor(&mut self) -> Parsed {
        if self.at_any_op(&[TokenType::PLUS, TokenType::MINUS, TokenType::TILDE]) {
            self.bump();
            return self.factor();
        }
        self.power()
    }

    fn power(&mut self) -> Parsed {
        self.atom()?;
        loop {
            if self.eat_op(TokenType::LPAR) {
                self.arglist(TokenType::RPAR)?;
                self.expect_op(TokenType::RPAR)?;
            } else if self.eat_op(TokenType::LSQB) {
                self.subscripts()?;
                self.expect_op(TokenType::RSQB)?;
            } else if self.eat_op(TokenType::DOT) {
                self.identifier()?;
            } else {
                break;
            }
        }
        if self.eat_op(TokenType::DOUBLESTAR) {
            self.factor()?;
        }
        Ok(())
    }

    fn atom(&mut self) -> Parsed {
        let Some(t) = self.toks.get(self.pos) else {
            return Err(Reject);
        };
        match t.kind {
            RawKind::Name => {
                if is_keyword(&t.text) && !matches!(t.text.as_str(), "None" | "True" | "False") {
                    return Err(Reject);
                }
                self.bump();
                Ok(())
            }
            RawKind::Number => {
                self.bump();
                Ok(())
            }
            RawKind::String => {
                while self.kind() == RawKind::String {
                    self.bump();
                }
                Ok(())
            }
            RawKind::Op(TokenType::ELLIPSIS) => {
                self.bump();
                Ok(())
            }
            RawKind::Op(TokenType::LPAR) => {
                self.bump();
                if !self.at_op(TokenType::RPAR) {
                    self.items_or_comprehension()?;
                }
                self.expect_op(TokenType::RPAR)
            }
            RawKind::Op(TokenType::LSQB) => {
                self.bump();
                if !self.at_op(TokenType::RSQB) {
                    self.items_or_comprehension()?;
                }
                self.expect_op(TokenType::RSQB)
            }
            RawKind::Op(TokenType::LBRACE) => {
                self.bump();
                if !self.at_op(TokenType::RBRACE) {
                    self.dict_or_set()?;
                }
                self.expect_op(TokenType::RBRACE)
            }
            _ => Err(Reject),
        }
    }

    /// Contents of `(...)` or `[...]`: a comprehension or a sequence.
    fn items_or_comprehension(&mut self) -> Parsed {
        self.test_or_star()?;
        if self.at_keyword("for") {
            return self.comp_for();
        }
        self.rest_of_sequence(Self::test_or_star)
    }

    fn rest_of_sequence(&mut self, item: fn(&mut Self) -> Parsed) -> Parsed {
        while self.eat_op(TokenType::COMMA) {
            if !self.starts_expression() && !self.at_op(TokenType::DOUBLESTAR) {
                break;
            }
            item(self)?;
        }
        Ok(())
    }

    fn dict_or_set(&mut self) -> Parsed {
        let dict = if self.eat_op(TokenType::DOUBLESTAR) {
            self.expr()?;
            true
        } else {
            self.test_or_star()?;
            if self.eat_op(TokenType::COLON) {
                self.test()?;
                true
            } else {
                false
            }
        };
        if self.at_keyword("for") {
            return self.comp_for();
        }
        if dict {
            self.rest_of_sequence(Self::dict_entry)
        } else {
            self.rest_of_sequence(Self::test_or_star)
        }
    }

    fn dict_entry(&mut self) -> Parsed {
        if self.eat_op(TokenType::DOUBLESTAR) {
            return self.expr();
        }
        self.test()?;
        self.expect_op(TokenType::COLON)?;
        self.test()
    }

    /// `comp_for := 'for' exprlist 'in' or_test (comp_for | 'if' test_nocond)*`
    fn comp_for(&mut self) -> Parsed {
        self.expect_keyword("for")?;
        self.exprlist()?;
        self.expect_keyword("in")?;
        self.or_test()?;
        loop {
            if self.at_keyword("for") {
                self.expect_keyword("for")?;
                self.exprlist()?;
                self.expect_keyword("in")?;
                self.or_test()?;
            } else if self.eat_keyword("if") {
                self.test_nocond()?;
            } else {
                return Ok(());
            }
        }
    }

    fn arglist(&mut self, close: TokenType) -> Parsed {
        while !self.at_op(close) {
            if self.eat_op(TokenType::STAR) || self.eat_op(TokenType::DOUBLESTAR) {
                self.test()?;
            } else {
                self.test()?;
                if self.at_keyword("for") {
                    self.comp_for()?;
                } else if self.eat_op(TokenType::EQUAL) {
                    self.test()?;
                }
            }
            if !self.eat_op(TokenType::COMMA) {
                break;
            }
        }
        Ok(())
    }

    fn subscripts(&mut self) -> Parsed {
        loop {
            self.subscript()?;
            if !self.eat_op(TokenType::COMMA) || self.at_op(TokenType::RSQB) {
                return Ok(());
            }
        }
    }

    /// `test | [test] ':' [test] [':' [test]]`
    fn subscript(&mut self) -> Parsed {
        let bound = |p: &mut Self| -> Parsed {
            if p.at_op(TokenType::COLON) || p.at_op(TokenType::COMMA) || p.at_op(TokenType::RSQB) {
                Ok(())
            } else {
                p.test()
            }
        };
        if !self.at_op(TokenType::COLON) {
            self.test()?;
            if !self.at_op(TokenType::COLON) {
                return Ok(());
            }
        }
        self.expect_op(TokenType::COLON)?;
        bound(self)?;
        if self.eat_op(TokenType::COLON) {
            bound(self)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn accepts(src: &str) -> bool {
        check_prefix(src, Checker::GrammarSubset).is_parsable()
    }

    #[test]
    fn spec_style_examples() {
        assert_eq!(
            check_prefix("def f(", Checker::TokenLevel).reason,
            Some(Reason::UnbalancedBracket)
        );
        assert_eq!(
            check_prefix("def f(", Checker::GrammarSubset).reason,
            Some(Reason::GrammarReject)
        );
        for checker in [Checker::TokenLevel, Checker::GrammarSubset] {
            assert_eq!(check_prefix("x = 'abc", checker).reason, Some(Reason::LexError));
            assert_eq!(check_prefix("s = \"\"\"doc\n", checker).reason, Some(Reason::LexError));
        }
    }

    #[test]
    fn bodiless_block_is_dangling() {
        for src in ["if x:", "if x:\n", "def f():\n    ", "while y:\n\n"] {
            assert_eq!(check_prefix(src, Checker::TokenLevel).reason, Some(Reason::DanglingIndent), "{src:?}");
        }
        assert!(check_prefix("if x: pass\n", Checker::TokenLevel).is_parsable());
        assert!(check_prefix("d = {1:\n2}\n", Checker::TokenLevel).is_parsable());
    }

    #[test]
    fn trailing_backslash_is_lex_error() {
        assert_eq!(check_prefix("x = 1 + \\\n", Checker::TokenLevel).reason, Some(Reason::LexError));
        assert_eq!(check_prefix("x = 1 + \\", Checker::TokenLevel).reason, Some(Reason::LexError));
    }

    #[test]
    fn grammar_accepts_subset_constructs() {
        let ok = [
            "",
            "x\n",
            "x = y = 1\n",
            "a, *b = c\n",
            "x: int = 3\n",
            "total **= 2\n",
            "a += 1; b -= 1;\n",
            "import os.path as p, sys\n",
            "from . import a\n",
            "from ..pkg.mod import (a as b, c,)\n",
            "from m import *\n",
            "def f(a, b=1, *args, c: int = 2, **kw) -> None:\n    return a, b\n",
            "def g(*, k): pass\n",
            "class A(B, metaclass=M):\n    x = 1\n\n    def m(self):\n        pass\n",
            "if a:\n    pass\nelif b:\n    pass\nelse:\n    pass\n",
            "for i, j in zip(a, b):\n    continue\nelse:\n    break\n",
            "while not x in y and z is not None:\n    x -= 1\n",
            "y = [i for i in range(3) if i for j in k]\n",
            "d = {k: v for k, v in items}\n",
            "s = {*a, 1}\n",
            "m = {**a, 'b': 2,}\n",
            "t = a if b else c\n",
            "u = x[1:2, ::3][:-1]\n",
            "v = -a ** ~b @ c // d % e << f >> g & h ^ i | j\n",
            "w = 'a' \"b\" f'c'\n",
            "f = lambda x, y=2: x + y\n",
            "g(*a, **k, z=1)(x for x in y)\n",
            "placeholder = ...\n",
            "z = ()\n",
            "q = (1,)\n",
            "return_value = 1\n",
            "x = 1",
        ];
        for src in ok {
            assert!(accepts(src), "{src:?}");
        }
    }

    #[test]
    fn grammar_rejects_outside_subset() {
        let bad = [
            "x = \n",
            "x = 1 +\n",
            "def f(:\n    pass\n",
            "try:\n    pass\nexcept E:\n    pass\n",
            "with a as b:\n    pass\n",
            "if x:\nelse:\n",
            "x = (1\n",
            "import\n",
            "from import x\n",
            "a b\n",
            "1 = = 2\n",
            "return\n    x\n",
        ];
        for src in bad {
            assert!(!accepts(src), "{src:?}");
        }
    }

    #[test]
    fn scan_counts_every_prefix() {
        let src = "x = 1\nif x:\n    y = 'é'\n";
        let report = scan_file("t.py", src, Checker::GrammarSubset);
        assert_eq!(report.total_chars, src.chars().count());
        assert_eq!(report.parsable + report.failed, report.total_chars);
        assert_eq!(report.reasons.values().sum::<usize>(), report.failed);
        assert!(report.parsable > 0 && report.failed > 0);
        let empty = scan_file("e.py", "", Checker::TokenLevel);
        assert_eq!((empty.total_chars, empty.parsable, empty.failed), (0, 0, 0));
    }

    #[test]
    fn aggregate_weights_by_characters() {
        let a = scan_file("a.py", "a\nb\n", Checker::TokenLevel);
        assert_eq!(a.parsable, 4);
        let single = aggregate(std::slice::from_ref(&a)).unwrap();
        assert_eq!(single.success_pct, 100.0);
        let b = scan_file("b.py", "(", Checker::TokenLevel);
        let both = aggregate(&[a, b]).unwrap();
        assert_eq!(both.total_chars, 5);
        assert!((both.failure_pct - 20.0).abs() < 1e-12);
        assert!((both.reason_pct[&Reason::UnbalancedBracket] - 20.0).abs() < 1e-12);
        assert!(aggregate(&[]).is_err());
    }
}
