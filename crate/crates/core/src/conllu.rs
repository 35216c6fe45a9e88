//! CoNLL-U reader and writer: the 10-column tab-separated dependency format
//! with `#` comments and blank-line sentence separation.
//!
//! Reading preserves every column verbatim so that writing a well-formed
//! sentence back reproduces it byte-for-byte. Multiword-token ranges and
//! empty nodes are kept in place but skipped for token-sequence purposes;
//! the DEPS column is read but unused.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConlluError {
    #[error("line {line}: expected 10 tab-separated columns, found {found}")]
    ColumnCount { line: usize, found: usize },
    #[error("line {line}: non-integer head `{value}`")]
    BadHead { line: usize, value: String },
    #[error("line {line}: bad token id `{value}`")]
    BadId { line: usize, value: String },
    #[error("sentence starting at line {line}: token ids are not contiguous 1..n")]
    NonContiguousIds { line: usize },
    #[error("line {line}: head {head} out of range for a {len}-token sentence")]
    HeadOutOfRange { line: usize, head: usize, len: usize },
    #[error("sentence starting at line {line}: no root (head = 0) token")]
    NoRoot { line: usize },
}

/// One syntactic token row. All columns are kept verbatim except `index`
/// and `head`, which are parsed (and re-rendered canonically, which is
/// identical for well-formed input).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConlluToken {
    pub index: usize,
    pub form: String,
    pub lemma: String,
    pub upos: String,
    pub xpos: String,
    pub feats: String,
    /// 0 = root.
    pub head: usize,
    pub deprel: String,
    pub deps: String,
    pub misc: String,
}

/// A row of the sentence block, in file order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConlluRow {
    Token(ConlluToken),
    /// Multiword token range line (`3-4  du  ...`), kept verbatim.
    Multiword(String),
    /// Empty node line (`5.1  ...`), kept verbatim.
    EmptyNode(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ConlluSentence {
    /// Comment lines verbatim, including the leading `#`.
    pub comments: Vec<String>,
    pub rows: Vec<ConlluRow>,
}

impl ConlluSentence {
    /// Value of `# sent_id = ...`, if present.
    pub fn sent_id(&self) -> Option<&str> {
        self.comment_value("sent_id")
    }

    /// Value of `# text = ...`, if present.
    pub fn text(&self) -> Option<&str> {
        self.comment_value("text")
    }

    fn comment_value(&self, key: &str) -> Option<&str> {
        for c in &self.comments {
            let rest = c.strip_prefix('#')?.trim_start();
            if let Some(eq) = rest.find('=') {
                if rest[..eq].trim() == key {
                    return Some(rest[eq + 1..].trim());
                }
            }
        }
        None
    }

    /// The syntactic tokens, skipping multiword ranges and empty nodes.
    pub fn tokens(&self) -> impl Iterator<Item = &ConlluToken> {
        self.rows.iter().filter_map(|r| match r {
            ConlluRow::Token(t) => Some(t),
            _ => None,
        })
    }

    pub fn token_count(&self) -> usize {
        self.tokens().count()
    }

    pub fn forms(&self) -> Vec<String> {
        self.tokens().map(|t| t.form.clone()).collect()
    }

    pub fn upos_tags(&self) -> Vec<String> {
        self.tokens().map(|t| t.upos.clone()).collect()
    }

    /// Token indices (1-based) whose head is 0.
    pub fn roots(&self) -> Vec<usize> {
        self.tokens()
            .filter(|t| t.head == 0)
            .map(|t| t.index)
            .collect()
    }
}

impl fmt::Display for ConlluToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.index,
            self.form,
            self.lemma,
            self.upos,
            self.xpos,
            self.feats,
            self.head,
            self.deprel,
            self.deps,
            self.misc
        )
    }
}

/// Reads a whole file. An empty input yields an empty list.
pub fn read_conllu(input: &str) -> Result<Vec<ConlluSentence>, ConlluError> {
    let mut sentences = Vec::new();
    let mut current = ConlluSentence::default();
    let mut sentence_start_line = 0usize;
    let mut expected_index = 1usize;

    let mut flush = |current: &mut ConlluSentence,
                     start: usize|
     -> Result<(), ConlluError> {
        if current.rows.is_empty() && current.comments.is_empty() {
            return Ok(());
        }
        finish_sentence(current, start)?;
        sentences.push(std::mem::take(current));
        Ok(())
    };

    for (i, line) in input.lines().enumerate() {
        let line_no = i + 1;
        if line.trim().is_empty() {
            flush(&mut current, sentence_start_line)?;
            expected_index = 1;
            continue;
        }
        if current.rows.is_empty() && current.comments.is_empty() {
            sentence_start_line = line_no;
        }
        if line.starts_with('#') {
            current.comments.push(line.to_string());
            continue;
        }
        let cols: Vec<&str> = line.split('\t').collect();
        if cols.len() != 10 {
            return Err(ConlluError::ColumnCount {
                line: line_no,
                found: cols.len(),
            });
        }
        let id = cols[0];
        if id.contains('-') {
            current.rows.push(ConlluRow::Multiword(line.to_string()));
            continue;
        }
        if id.contains('.') {
            current.rows.push(ConlluRow::EmptyNode(line.to_string()));
            continue;
        }
        let index: usize = id.parse().map_err(|_| ConlluError::BadId {
            line: line_no,
            value: id.to_string(),
        })?;
        if index != expected_index {
            return Err(ConlluError::NonContiguousIds {
                line: sentence_start_line,
            });
        }
        expected_index += 1;
        let head: usize = cols[6].parse().map_err(|_| ConlluError::BadHead {
            line: line_no,
            value: cols[6].to_string(),
        })?;
        current.rows.push(ConlluRow::Token(ConlluToken {
            index,
            form: cols[1].to_string(),
            lemma: cols[2].to_string(),
            upos: cols[3].to_string(),
            xpos: cols[4].to_string(),
            feats: cols[5].to_string(),
            head,
            deprel: cols[7].to_string(),
            deps: cols[8].to_string(),
            misc: cols[9].to_string(),
        }));
    }
    flush(&mut current, sentence_start_line)?;
    Ok(sentences)
}

fn finish_sentence(sentence: &ConlluSentence, start_line: usize) -> Result<(), ConlluError> {
    let n = sentence.token_count();
    let mut has_root = false;
    for t in sentence.tokens() {
        if t.head > n {
            return Err(ConlluError::HeadOutOfRange {
                line: start_line,
                head: t.head,
                len: n,
            });
        }
        if t.head == 0 {
            has_root = true;
        }
    }
    if n > 0 && !has_root {
        return Err(ConlluError::NoRoot { line: start_line });
    }
    Ok(())
}

/// Writes sentences back out, one blank line after each.
pub fn write_conllu(sentences: &[ConlluSentence]) -> String {
    let mut out = String::new();
    for s in sentences {
        for c in &s.comments {
            out.push_str(c);
            out.push('\n');
        }
        for row in &s.rows {
            match row {
                ConlluRow::Token(t) => out.push_str(&t.to_string()),
                ConlluRow::Multiword(raw) | ConlluRow::EmptyNode(raw) => out.push_str(raw),
            }
            out.push('\n');
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const TWO_TOKENS: &str = "\
# sent_id = s1
# text = Liz bought
1\tLiz\tLiz\tPROPN\tNNP\t_\t2\tnsubj\t_\t_
2\tbought\tbuy\tVERB\tVBD\t_\t0\troot\t_\t_
";

    #[test]
    fn reads_a_two_token_sentence() {
        let sents = read_conllu(TWO_TOKENS).unwrap();
        assert_eq!(sents.len(), 1);
        let s = &sents[0];
        assert_eq!(s.sent_id(), Some("s1"));
        assert_eq!(s.text(), Some("Liz bought"));
        assert_eq!(s.token_count(), 2);
        assert_eq!(s.roots(), vec![2]);
        assert_eq!(s.forms(), vec!["Liz", "bought"]);
    }

    #[test]
    fn empty_input_is_empty_list() {
        assert_eq!(read_conllu("").unwrap(), Vec::new());
        assert_eq!(read_conllu("\n\n").unwrap(), Vec::new());
    }

    #[test]
    fn nine_columns_is_an_error_naming_the_line() {
        let bad = "1\tLiz\tLiz\tPROPN\tNNP\t_\t0\troot\t_\n";
        match read_conllu(bad) {
            Err(ConlluError::ColumnCount { line: 1, found: 9 }) => {}
            other => panic!("unexpected: {other:?}"),
        }
    }

    #[test]
    fn non_integer_head_is_an_error() {
        let bad = "1\tLiz\tLiz\tPROPN\tNNP\t_\tx\tnsubj\t_\t_\n";
        match read_conllu(bad) {
            Err(ConlluError::BadHead { line: 1, value }) => assert_eq!(value, "x"),
            other => panic!("unexpected: {other:?}"),
        }
    }

    #[test]
    fn head_out_of_range_is_an_error() {
        let bad = "1\tLiz\tLiz\tPROPN\tNNP\t_\t4\tnsubj\t_\t_\n";
        assert!(matches!(
            read_conllu(bad),
            Err(ConlluError::HeadOutOfRange { head: 4, .. })
        ));
    }

    #[test]
    fn missing_root_is_an_error() {
        let bad = "1\ta\ta\tDET\tDT\t_\t2\tdet\t_\t_\n2\tdog\tdog\tNOUN\tNN\t_\t1\tnmod\t_\t_\n";
        assert!(matches!(read_conllu(bad), Err(ConlluError::NoRoot { .. })));
    }

    #[test]
    fn roundtrip_is_byte_identical() {
        // Second sentence carries a multiword range and an empty node.
        let src = format!(
            "{}\n\
# sent_id = mwt
1-2\tcannot\t_\t_\t_\t_\t_\t_\t_\t_
1\tcan\tcan\tAUX\tMD\t_\t0\troot\t_\t_
2\tnot\tnot\tPART\tRB\t_\t1\tadvmod\t_\t_
3.1\telided\telide\tVERB\tVBD\t_\t_\t_\t0:root\t_
3\tstop\tstop\tVERB\tVB\t_\t1\txcomp\t_\t_
",
            TWO_TOKENS
        );
        let sents = read_conllu(&src).unwrap();
        assert_eq!(sents.len(), 2);
        assert_eq!(sents[1].token_count(), 3);
        let written = write_conllu(&sents);
        let reread = read_conllu(&written).unwrap();
        assert_eq!(sents, reread);
        // Canonical output of canonical input is byte-identical.
        assert_eq!(write_conllu(&reread), written);
    }

    #[test]
    fn noncontiguous_ids_rejected() {
        let bad = "1\ta\ta\tDET\tDT\t_\t0\troot\t_\t_\n3\tdog\tdog\tNOUN\tNN\t_\t1\tdep\t_\t_\n";
        assert!(matches!(
            read_conllu(bad),
            Err(ConlluError::NonContiguousIds { .. })
        ));
    }
}
