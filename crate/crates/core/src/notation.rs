//! Parser and serializer for the PENMAN-like textual notation of the trees.
//!
//! The concrete grammar:
//!
//! ```text
//! tree    := '(' CATEGORY coindex? (':' FUNCTION child)* ')'
//! lexeme  := '(' POSTAG coindex? ':t' STRING (':l' STRING)? (':correct' STRING)? ')'
//! gap     := '(' 'GAP' coindex? ')'
//! coindex := ':' LABEL            -- when not followed by '(' or a string
//! ```
//!
//! Subscripted labels are spelled with underscores (`N_pro`, `V_aux`,
//! `Clause_rel`); nonce categories join base categories with `+` (`NP+PP`).
//! A `#` begins a metadata/comment line; the keys `sent_id` and `text` are
//! attached to the following tree.

use std::fmt;

use crate::tree::{
    CgelNode, CgelTree, GrammaticalFunction, NodeKind, PhrasalCategory, PosTag,
};

/// An ordered collection of trees as read from (or written to) one file.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct NotationDocument {
    pub trees: Vec<CgelTree>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnbalancedParen,
    UnexpectedToken(String),
    UnknownLabel(String),
    GapWithForm,
    GapWithChildren,
    LexemeMissingForm(String),
    LexemeWithChildren(String),
    PhraseWithAttribute(String),
    EmptyPhrase(String),
    DuplicateAntecedent(String),
    DanglingCoindex(String),
    DuplicateAttribute(String),
    UnterminatedString,
    BadEscape(char),
}

/// Parse failure with a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: ", self.line, self.col)?;
        match &self.kind {
            ParseErrorKind::UnbalancedParen => write!(f, "unbalanced parenthesis"),
            ParseErrorKind::UnexpectedToken(t) => write!(f, "unexpected token `{t}`"),
            ParseErrorKind::UnknownLabel(l) => write!(f, "unknown label `{l}`"),
            ParseErrorKind::GapWithForm => write!(f, "a gap cannot carry a form"),
            ParseErrorKind::GapWithChildren => write!(f, "a gap cannot have children"),
            ParseErrorKind::LexemeMissingForm(p) => {
                write!(f, "lexeme `{p}` is missing its :t form")
            }
            ParseErrorKind::LexemeWithChildren(p) => {
                write!(f, "lexeme `{p}` cannot have children")
            }
            ParseErrorKind::PhraseWithAttribute(a) => {
                write!(f, "attribute :{a} is only valid on a lexeme")
            }
            ParseErrorKind::EmptyPhrase(c) => write!(f, "phrase `{c}` has no children"),
            ParseErrorKind::DuplicateAntecedent(l) => {
                write!(f, "coindex `{l}` has more than one non-gap antecedent")
            }
            ParseErrorKind::DanglingCoindex(l) => {
                write!(f, "gap coindex `{l}` has no antecedent in the tree")
            }
            ParseErrorKind::DuplicateAttribute(a) => write!(f, "attribute :{a} given twice"),
            ParseErrorKind::UnterminatedString => write!(f, "unterminated string"),
            ParseErrorKind::BadEscape(c) => write!(f, "unsupported escape `\\{c}`"),
        }
    }
}

/// Reader options. `compat_labels` tolerates minor label-spelling variants
/// (`Npro`, `Clause-rel`, case differences) seen across corpus revisions.
#[derive(Debug, Clone, Copy, Default)]
pub struct ParserOptions {
    pub compat_labels: bool,
}

pub fn parse_document(input: &str) -> Result<NotationDocument, ParseError> {
    parse_document_with(input, &ParserOptions::default())
}

pub fn parse_document_with(
    input: &str,
    options: &ParserOptions,
) -> Result<NotationDocument, ParseError> {
    Parser::new(input, *options).document()
}

/// Parses input containing exactly one tree.
pub fn parse_tree(input: &str) -> Result<CgelTree, ParseError> {
    let doc = parse_document(input)?;
    match doc.trees.len() {
        1 => Ok(doc.trees.into_iter().next().unwrap()),
        _ => Err(ParseError {
            line: 1,
            col: 1,
            kind: ParseErrorKind::UnexpectedToken(format!("{} trees", doc.trees.len())),
        }),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    LParen,
    RParen,
    Label(String),
    Role(String),
    Str(String),
}

struct Lexer<'s> {
    chars: std::iter::Peekable<std::str::Chars<'s>>,
    line: usize,
    col: usize,
}

impl<'s> Lexer<'s> {
    fn new(input: &'s str) -> Self {
        Lexer {
            chars: input.chars().peekable(),
            line: 1,
            col: 1,
        }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn is_symbol_char(c: char) -> bool {
        c.is_alphanumeric() || matches!(c, '_' | '-' | '+' | '.' | '\'')
    }

    /// Next token with its starting position, skipping whitespace and any
    /// `#` comment up to end of line. Comment bodies are returned separately
    /// so the document reader can mine metadata out of them.
    fn next_token(&mut self) -> Result<Option<(usize, usize, Token)>, ParseError> {
        loop {
            match self.chars.peek() {
                None => return Ok(None),
                Some(c) if c.is_whitespace() => {
                    self.bump();
                }
                Some('#') => {
                    while let Some(&c) = self.chars.peek() {
                        if c == '\n' {
                            break;
                        }
                        self.bump();
                    }
                }
                _ => break,
            }
        }
        let line = self.line;
        let col = self.col;
        let c = *self.chars.peek().unwrap();
        match c {
            '(' => {
                self.bump();
                Ok(Some((line, col, Token::LParen)))
            }
            ')' => {
                self.bump();
                Ok(Some((line, col, Token::RParen)))
            }
            '"' => {
                self.bump();
                let mut s = String::new();
                loop {
                    match self.bump() {
                        None => {
                            return Err(ParseError {
                                line,
                                col,
                                kind: ParseErrorKind::UnterminatedString,
                            })
                        }
                        Some('"') => break,
                        Some('\\') => match self.bump() {
                            Some('"') => s.push('"'),
                            Some('\\') => s.push('\\'),
                            Some(other) => {
                                return Err(ParseError {
                                    line,
                                    col: self.col,
                                    kind: ParseErrorKind::BadEscape(other),
                                })
                            }
                            None => {
                                return Err(ParseError {
                                    line,
                                    col,
                                    kind: ParseErrorKind::UnterminatedString,
                                })
                            }
                        },
                        Some('\n') => {
                            return Err(ParseError {
                                line,
                                col,
                                kind: ParseErrorKind::UnterminatedString,
                            })
                        }
                        Some(other) => s.push(other),
                    }
                }
                Ok(Some((line, col, Token::Str(s))))
            }
            ':' => {
                self.bump();
                let mut s = String::new();
                while let Some(&c) = self.chars.peek() {
                    if Self::is_symbol_char(c) {
                        s.push(c);
                        self.bump();
                    } else {
                        break;
                    }
                }
                if s.is_empty() {
                    return Err(ParseError {
                        line,
                        col,
                        kind: ParseErrorKind::UnexpectedToken(":".to_string()),
                    });
                }
                Ok(Some((line, col, Token::Role(s))))
            }
            c if Self::is_symbol_char(c) => {
                let mut s = String::new();
                while let Some(&c) = self.chars.peek() {
                    if Self::is_symbol_char(c) {
                        s.push(c);
                        self.bump();
                    } else {
                        break;
                    }
                }
                Ok(Some((line, col, Token::Label(s))))
            }
            other => Err(ParseError {
                line,
                col,
                kind: ParseErrorKind::UnexpectedToken(other.to_string()),
            }),
        }
    }
}

/// What a node label resolved to.
enum Label {
    Gap,
    Pos(PosTag),
    Category(PhrasalCategory),
}

struct Parser<'s> {
    input: &'s str,
    options: ParserOptions,
    tokens: Vec<(usize, usize, Token)>,
    pos: usize,
}

impl<'s> Parser<'s> {
    fn new(input: &'s str, options: ParserOptions) -> Self {
        Parser {
            input,
            options,
            tokens: Vec::new(),
            pos: 0,
        }
    }

    fn lex_all(&mut self) -> Result<(), ParseError> {
        let mut lexer = Lexer::new(self.input);
        while let Some(tok) = lexer.next_token()? {
            self.tokens.push(tok);
        }
        Ok(())
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, _, t)| t)
    }

    fn peek2(&self) -> Option<&Token> {
        self.tokens.get(self.pos + 1).map(|(_, _, t)| t)
    }

    fn here(&self) -> (usize, usize) {
        self.tokens
            .get(self.pos)
            .map(|(l, c, _)| (*l, *c))
            .or_else(|| self.tokens.last().map(|(l, c, _)| (*l, *c + 1)))
            .unwrap_or((1, 1))
    }

    fn err(&self, kind: ParseErrorKind) -> ParseError {
        let (line, col) = self.here();
        ParseError { line, col, kind }
    }

    fn eof_err(&self) -> ParseError {
        let (line, col) = self
            .tokens
            .last()
            .map(|(l, c, _)| (*l, *c + 1))
            .unwrap_or((1, 1));
        ParseError {
            line,
            col,
            kind: ParseErrorKind::UnbalancedParen,
        }
    }

    fn document(mut self) -> Result<NotationDocument, ParseError> {
        self.lex_all()?;
        // Metadata lines are comments to the lexer; pull them back out by
        // scanning the raw text, keyed by the source line they sit on.
        let metadata = collect_metadata(self.input);

        let mut trees: Vec<CgelTree> = Vec::new();
        let mut consumed_up_to = 0usize;
        while self.peek().is_some() {
            let (start_line, _) = self.here();
            let root = self.node()?;
            check_coindexation(&root, &self)?;
            // Only metadata between the previous tree and this one applies.
            let (id, text) = latest_metadata_in(&metadata, consumed_up_to, start_line);
            consumed_up_to = self.tokens[self.pos - 1].0;
            let id = id.unwrap_or_else(|| format!("tree-{:04}", trees.len() + 1));
            trees.push(CgelTree {
                id,
                source_text: text,
                root,
            });
        }
        Ok(NotationDocument { trees })
    }

    fn node(&mut self) -> Result<CgelNode, ParseError> {
        match self.peek() {
            Some(Token::LParen) => {}
            Some(t) => {
                let t = format!("{t:?}");
                return Err(self.err(ParseErrorKind::UnexpectedToken(t)));
            }
            None => return Err(self.eof_err()),
        }
        self.pos += 1;

        let label_str = match self.peek() {
            Some(Token::Label(s)) => s.clone(),
            Some(Token::RParen) => {
                return Err(self.err(ParseErrorKind::UnexpectedToken(")".to_string())))
            }
            Some(t) => {
                let t = describe(t);
                return Err(self.err(ParseErrorKind::UnexpectedToken(t)));
            }
            None => return Err(self.eof_err()),
        };
        let label = self
            .resolve_label(&label_str)
            .ok_or_else(|| self.err(ParseErrorKind::UnknownLabel(label_str.clone())))?;
        self.pos += 1;

        // Optional coindex: a role not followed by '(' or a string.
        let mut coindex = None;
        if let Some(Token::Role(r)) = self.peek() {
            let followed_by_value = matches!(self.peek2(), Some(Token::LParen) | Some(Token::Str(_)));
            if !followed_by_value {
                coindex = Some(r.clone());
                self.pos += 1;
            }
        }

        let node = match label {
            Label::Gap => {
                match self.peek() {
                    Some(Token::RParen) => {}
                    Some(Token::Role(r)) if r == "t" => {
                        return Err(self.err(ParseErrorKind::GapWithForm))
                    }
                    Some(Token::Role(_)) => {
                        return Err(self.err(ParseErrorKind::GapWithChildren))
                    }
                    Some(t) => {
                        let t = describe(t);
                        return Err(self.err(ParseErrorKind::UnexpectedToken(t)));
                    }
                    None => return Err(self.eof_err()),
                }
                CgelNode {
                    kind: NodeKind::Gap,
                    coindex,
                }
            }
            Label::Pos(pos) => {
                let mut form = None;
                let mut lemma = None;
                let mut correction = None;
                loop {
                    match self.peek() {
                        Some(Token::RParen) => break,
                        Some(Token::Role(r)) => {
                            let r = r.clone();
                            match (r.as_str(), self.peek2()) {
                                ("t", Some(Token::Str(_))) => {
                                    self.pos += 1;
                                    let s = self.take_string();
                                    if form.replace(s).is_some() {
                                        return Err(
                                            self.err(ParseErrorKind::DuplicateAttribute(r))
                                        );
                                    }
                                }
                                ("l", Some(Token::Str(_))) => {
                                    self.pos += 1;
                                    let s = self.take_string();
                                    if lemma.replace(s).is_some() {
                                        return Err(
                                            self.err(ParseErrorKind::DuplicateAttribute(r))
                                        );
                                    }
                                }
                                ("correct", Some(Token::Str(_))) => {
                                    self.pos += 1;
                                    let s = self.take_string();
                                    if correction.replace(s).is_some() {
                                        return Err(
                                            self.err(ParseErrorKind::DuplicateAttribute(r))
                                        );
                                    }
                                }
                                (_, Some(Token::LParen)) => {
                                    return Err(self.err(ParseErrorKind::LexemeWithChildren(
                                        label_str.clone(),
                                    )))
                                }
                                _ => {
                                    return Err(self.err(ParseErrorKind::UnexpectedToken(
                                        format!(":{r}"),
                                    )))
                                }
                            }
                        }
                        Some(t) => {
                            let t = describe(t);
                            return Err(self.err(ParseErrorKind::UnexpectedToken(t)));
                        }
                        None => return Err(self.eof_err()),
                    }
                }
                let form = form.ok_or_else(|| {
                    self.err(ParseErrorKind::LexemeMissingForm(label_str.clone()))
                })?;
                CgelNode {
                    kind: NodeKind::Lexeme {
                        pos,
                        form,
                        lemma,
                        correction,
                    },
                    coindex,
                }
            }
            Label::Category(category) => {
                let mut children = Vec::new();
                loop {
                    match self.peek() {
                        Some(Token::RParen) => break,
                        Some(Token::Role(r)) => {
                            let r = r.clone();
                            match self.peek2() {
                                Some(Token::LParen) => {
                                    let func = self.resolve_function(&r).ok_or_else(|| {
                                        self.err(ParseErrorKind::UnknownLabel(r.clone()))
                                    })?;
                                    self.pos += 1;
                                    let child = self.node()?;
                                    children.push((func, child));
                                }
                                Some(Token::Str(_)) => {
                                    return Err(
                                        self.err(ParseErrorKind::PhraseWithAttribute(r))
                                    )
                                }
                                _ => {
                                    return Err(self.err(ParseErrorKind::UnexpectedToken(
                                        format!(":{r}"),
                                    )))
                                }
                            }
                        }
                        Some(t) => {
                            let t = describe(t);
                            return Err(self.err(ParseErrorKind::UnexpectedToken(t)));
                        }
                        None => return Err(self.eof_err()),
                    }
                }
                if children.is_empty() {
                    return Err(self.err(ParseErrorKind::EmptyPhrase(label_str.clone())));
                }
                CgelNode {
                    kind: NodeKind::Phrase { category, children },
                    coindex,
                }
            }
        };

        match self.peek() {
            Some(Token::RParen) => {
                self.pos += 1;
                Ok(node)
            }
            _ => Err(self.eof_err()),
        }
    }

    fn take_string(&mut self) -> String {
        let s = match self.peek() {
            Some(Token::Str(s)) => s.clone(),
            _ => unreachable!("caller checked for a string"),
        };
        self.pos += 1;
        s
    }

    fn resolve_label(&self, s: &str) -> Option<Label> {
        if s == "GAP" {
            return Some(Label::Gap);
        }
        if let Some(pos) = PosTag::parse(s) {
            return Some(Label::Pos(pos));
        }
        if let Some(cat) = PhrasalCategory::parse(s) {
            return Some(Label::Category(cat));
        }
        if self.options.compat_labels {
            let key = normalize_label(s);
            if key == "gap" {
                return Some(Label::Gap);
            }
            for tag in PosTag::ALL {
                if normalize_label(tag.as_str()) == key {
                    return Some(Label::Pos(tag));
                }
            }
            for cat in crate::tree::BaseCategory::ALL {
                if normalize_label(cat.as_str()) == key {
                    return Some(Label::Category(PhrasalCategory::Base(cat)));
                }
            }
            if s.contains('+') {
                let parts: Option<Vec<_>> = s
                    .split('+')
                    .map(|p| {
                        let k = normalize_label(p);
                        crate::tree::BaseCategory::ALL
                            .iter()
                            .copied()
                            .find(|c| normalize_label(c.as_str()) == k)
                    })
                    .collect();
                if let Some(parts) = parts {
                    if let Ok(cat) = PhrasalCategory::nonce(parts) {
                        return Some(Label::Category(cat));
                    }
                }
            }
        }
        None
    }

    fn resolve_function(&self, s: &str) -> Option<GrammaticalFunction> {
        if let Some(f) = GrammaticalFunction::parse(s) {
            return Some(f);
        }
        if self.options.compat_labels {
            let key = normalize_label(s);
            return GrammaticalFunction::CANONICAL
                .iter()
                .chain(
                    [
                        GrammaticalFunction::Nucleus,
                        GrammaticalFunction::Predicate,
                        GrammaticalFunction::Predicator,
                    ]
                    .iter(),
                )
                .copied()
                .find(|f| normalize_label(f.as_str()) == key);
        }
        None
    }
}

fn describe(t: &Token) -> String {
    match t {
        Token::LParen => "(".to_string(),
        Token::RParen => ")".to_string(),
        Token::Label(s) => s.clone(),
        Token::Role(s) => format!(":{s}"),
        Token::Str(s) => format!("\"{s}\""),
    }
}

fn normalize_label(s: &str) -> String {
    s.chars()
        .filter(|c| *c != '_' && *c != '-')
        .flat_map(char::to_lowercase)
        .collect()
}

/// (line, key, value) triples for `# key = value` lines.
fn collect_metadata(input: &str) -> Vec<(usize, String, String)> {
    let mut out = Vec::new();
    for (i, line) in input.lines().enumerate() {
        let trimmed = line.trim_start();
        if let Some(rest) = trimmed.strip_prefix('#') {
            if let Some(eq) = rest.find('=') {
                let key = rest[..eq].trim().to_string();
                let value = rest[eq + 1..].trim().to_string();
                if !key.is_empty() {
                    out.push((i + 1, key, value));
                }
            }
        }
    }
    out
}

/// The most recent `sent_id`/`text` lines in the window `(after, before]`,
/// i.e. between the previous tree and the upcoming one.
fn latest_metadata_in(
    metadata: &[(usize, String, String)],
    after: usize,
    before: usize,
) -> (Option<String>, Option<String>) {
    let mut id = None;
    let mut text = None;
    for (line, key, value) in metadata {
        if *line > after && *line <= before {
            match key.as_str() {
                "sent_id" => id = Some(value.clone()),
                "text" => text = Some(value.clone()),
                _ => {}
            }
        }
    }
    (id, text)
}

/// Coindexation sanity for a single tree: every label on a gap must have
/// exactly one non-gap antecedent.
fn check_coindexation(root: &CgelNode, parser: &Parser<'_>) -> Result<(), ParseError> {
    use std::collections::BTreeMap;
    let mut gaps: BTreeMap<&str, usize> = BTreeMap::new();
    let mut antecedents: BTreeMap<&str, usize> = BTreeMap::new();
    fn walk<'n>(
        node: &'n CgelNode,
        gaps: &mut std::collections::BTreeMap<&'n str, usize>,
        antecedents: &mut std::collections::BTreeMap<&'n str, usize>,
    ) {
        if let Some(label) = &node.coindex {
            if node.is_gap() {
                *gaps.entry(label.as_str()).or_insert(0) += 1;
            } else {
                *antecedents.entry(label.as_str()).or_insert(0) += 1;
            }
        }
        for (_, child) in node.children() {
            walk(child, gaps, antecedents);
        }
    }
    walk(root, &mut gaps, &mut antecedents);
    for (label, count) in &antecedents {
        if *count > 1 {
            return Err(parser.err(ParseErrorKind::DuplicateAntecedent(label.to_string())));
        }
    }
    for label in gaps.keys() {
        if !antecedents.contains_key(label) {
            return Err(parser.err(ParseErrorKind::DanglingCoindex(label.to_string())));
        }
    }
    Ok(())
}

const INDENT: &str = "    ";

/// Canonical, deterministic serialization. Repeated serialization is
/// idempotent, and `parse(serialize(d))` reproduces `d` node-for-node.
pub fn serialize_document(doc: &NotationDocument) -> String {
    let mut out = String::new();
    for (i, tree) in doc.trees.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        out.push_str(&format!("# sent_id = {}\n", tree.id));
        if let Some(text) = &tree.source_text {
            out.push_str(&format!("# text = {}\n", text));
        }
        out.push_str(&serialize_node(&tree.root, 0));
        out.push('\n');
    }
    out
}

pub fn serialize_tree(tree: &CgelTree) -> String {
    serialize_node(&tree.root, 0)
}

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            other => out.push(other),
        }
    }
    out.push('"');
    out
}

fn serialize_node(node: &CgelNode, level: usize) -> String {
    let coindex = node
        .coindex
        .as_deref()
        .map(|l| format!(" :{l}"))
        .unwrap_or_default();
    match &node.kind {
        NodeKind::Gap => format!("(GAP{coindex})"),
        NodeKind::Lexeme {
            pos,
            form,
            lemma,
            correction,
        } => {
            let mut s = format!("({}{} :t {}", pos.as_str(), coindex, quote(form));
            if let Some(l) = lemma {
                s.push_str(&format!(" :l {}", quote(l)));
            }
            if let Some(c) = correction {
                s.push_str(&format!(" :correct {}", quote(c)));
            }
            s.push(')');
            s
        }
        NodeKind::Phrase { category, children } => {
            let mut s = format!("({}{}", category, coindex);
            for (func, child) in children {
                s.push('\n');
                for _ in 0..=level {
                    s.push_str(INDENT);
                }
                s.push_str(&format!(":{} ", func.as_str()));
                s.push_str(&serialize_node(child, level + 1));
            }
            s.push(')');
            s
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::BaseCategory;

    #[test]
    fn minimal_projection_chain() {
        let tree = parse_tree(r#"(NP :Head (Nom :Head (N :t "Liz")))"#).unwrap();
        let np = &tree.root;
        assert_eq!(
            np.category(),
            Some(&PhrasalCategory::Base(BaseCategory::NP))
        );
        let (f, nom) = &np.children()[0];
        assert_eq!(*f, GrammaticalFunction::Head);
        assert_eq!(
            nom.category(),
            Some(&PhrasalCategory::Base(BaseCategory::Nom))
        );
        let (_, n) = &nom.children()[0];
        assert_eq!(n.form(), Some("Liz"));
        assert_eq!(n.pos(), Some(PosTag::N));
    }

    #[test]
    fn unbalanced_input_reports_position() {
        let err = parse_tree(r#"(NP :Head (N :t "a")"#).unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::UnbalancedParen);
        assert_eq!(err.line, 1);
        assert!(err.col > 1);
    }

    #[test]
    fn unknown_labels_are_reported() {
        let err = parse_tree(r#"(XP :Head (N :t "a"))"#).unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::UnknownLabel("XP".to_string()));
        let err = parse_tree(r#"(NP :Haed (N :t "a"))"#).unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::UnknownLabel("Haed".to_string()));
    }

    #[test]
    fn compat_mode_tolerates_spelling_variants() {
        let opts = ParserOptions { compat_labels: true };
        let doc = parse_document_with(
            r#"(Clauserel :Head (Vp :Head (v :t "ran")))"#,
            &opts,
        );
        let doc = doc.unwrap();
        assert_eq!(
            doc.trees[0].root.category(),
            Some(&PhrasalCategory::Base(BaseCategory::ClauseRel))
        );
        assert!(parse_tree(r#"(Clauserel :Head (Vp :Head (v :t "ran")))"#).is_err());
    }

    #[test]
    fn gap_with_form_is_rejected() {
        let src = r#"(VP :Head (V :t "ran") :Obj (GAP :t "x"))"#;
        let err = parse_tree(src).unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::GapWithForm);
    }

    #[test]
    fn coindex_errors() {
        // Gap label with no antecedent.
        let err = parse_tree(r#"(VP :Head (V :t "ran") :Obj (GAP :x))"#).unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::DanglingCoindex("x".to_string()));
        // Two non-gap antecedents with the same label.
        let err = parse_tree(
            r#"(Clause
                :Subj (NP :x :Head (Nom :Head (N :t "Liz")))
                :Head (VP :x :Head (V :t "ran")))"#,
        )
        .unwrap_err();
        assert_eq!(
            err.kind,
            ParseErrorKind::DuplicateAntecedent("x".to_string())
        );
    }

    #[test]
    fn figure_one_shape() {
        let src = r#"
# sent_id = fig-1
# text = which Liz bought
(Clause
    :Prenucleus (NP :x
        :Head (Nom
            :Det-Head (DP
                :Head (D :t "which"))))
    :Head (Clause
        :Subj (NP
            :Head (Nom
                :Head (N :t "Liz")))
        :Head (VP
            :Head (V :t "bought" :l "buy")
            :Obj (GAP :x))))
"#;
        let doc = parse_document(src).unwrap();
        assert_eq!(doc.trees.len(), 1);
        let tree = &doc.trees[0];
        assert_eq!(tree.id, "fig-1");
        assert_eq!(tree.source_text.as_deref(), Some("which Liz bought"));
        let terminals = tree.terminals();
        assert_eq!(terminals.len(), 4);
        assert_eq!(terminals[0].form(), Some("which"));
        assert_eq!(terminals[0].pos(), Some(PosTag::D));
        assert_eq!(terminals[1].form(), Some("Liz"));
        assert_eq!(terminals[2].form(), Some("bought"));
        assert!(terminals[3].is_gap());
        assert_eq!(terminals[3].coindex.as_deref(), Some("x"));
        // Prenucleus NP carries the same label.
        let (f, prenucleus) = &tree.root.children()[0];
        assert_eq!(*f, GrammaticalFunction::Prenucleus);
        assert_eq!(prenucleus.coindex.as_deref(), Some("x"));
    }

    #[test]
    fn roundtrip_preserves_nodes() {
        let src = r#"
# sent_id = rt-1
# text = Pierre Vinken lives alone
(Clause
    :Subj (NP
        :Head (Nom
            :Head (N :t "Pierre Vinken")))
    :Head (VP
        :Head (VP
            :Head (V :t "lives" :l "live"))
        :Mod (AdvP
            :Head (Adv :t "alone"))))
"#;
        let doc = parse_document(src).unwrap();
        let serialized = serialize_document(&doc);
        let reparsed = parse_document(&serialized).unwrap();
        assert_eq!(doc, reparsed);
        // Idempotent: a second round changes nothing.
        assert_eq!(serialize_document(&reparsed), serialized);
        // The multiword form comes back verbatim.
        assert!(serialized.contains("\"Pierre Vinken\""));
    }

    #[test]
    fn empty_document_serializes_empty() {
        let doc = parse_document("# just a comment\n").unwrap();
        assert!(doc.trees.is_empty());
        assert_eq!(serialize_document(&doc), "");
    }

    #[test]
    fn missing_ids_are_synthesized_stably() {
        let src = r#"(NP :Head (Nom :Head (N :t "a"))) (NP :Head (Nom :Head (N :t "b")))"#;
        let doc = parse_document(src).unwrap();
        assert_eq!(doc.trees[0].id, "tree-0001");
        assert_eq!(doc.trees[1].id, "tree-0002");
        let again = parse_document(&serialize_document(&doc)).unwrap();
        assert_eq!(doc, again);
    }

    #[test]
    fn quoted_forms_with_escapes() {
        let tree = parse_tree(r#"(NP :Head (Nom :Head (N :t "a \"b\" \\ c")))"#).unwrap();
        assert_eq!(tree.root.children()[0].1.children()[0].1.form(), Some(r#"a "b" \ c"#));
        let s = serialize_tree(&tree);
        let re = parse_tree(&s).unwrap();
        assert_eq!(tree.root, re.root);
    }

    #[test]
    fn retired_functions_parse_in_strict_mode() {
        // Accepted so the validator can flag them as FUNC-1.
        let tree = parse_tree(
            r#"(Clause
                :Subj (NP :Head (Nom :Head (N :t "Liz")))
                :Predicate (VP :Predicator (V :t "ran")))"#,
        )
        .unwrap();
        let (f, _) = &tree.root.children()[1];
        assert_eq!(*f, GrammaticalFunction::Predicate);
    }

    #[test]
    fn empty_phrase_is_rejected() {
        let err = parse_tree("(NP)").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::EmptyPhrase("NP".to_string()));
    }
}
