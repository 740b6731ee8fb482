//! Plain-text matrix files.
//!
//! ```text
//! # comment
//! q n k ip
//! <k rows of n symbols>
//! ```
//!
//! `ip` is `E` (Euclidean) or `H` (Hermitian, GF(4) only). Symbols follow
//! [`Field::symbol`]: digits for prime fields, `0 1 w v` for GF(4).

use std::fmt;

use lcdembed_core::{Field, GfMatrix, InnerProduct, LinearCode};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixFile {
    pub ip: InnerProduct,
    pub matrix: GfMatrix,
    /// 1-based source line of each matrix row.
    pub row_lines: Vec<usize>,
}

fn err(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, column, message: message.into() }
}

/// Whitespace-separated tokens with their 1-based columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s + 1, &line[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

pub fn parse_matrix(text: &str) -> Result<MatrixFile, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));

    let (hline, header) = lines.next().ok_or_else(|| err(1, 1, "missing header `q n k ip`"))?;
    let h = tokens(header);
    if h.len() != 4 {
        return Err(err(hline, 1, format!("header needs 4 fields `q n k ip`, found {}", h.len())));
    }
    let num = |(col, tok): (usize, &str), what: &str| -> Result<usize, ParseError> {
        tok.parse().map_err(|_| err(hline, col, format!("bad {what} `{tok}`")))
    };
    let q = num(h[0], "field order")?;
    let field = u32::try_from(q)
        .ok()
        .and_then(|q| Field::new(q).ok())
        .ok_or_else(|| err(hline, h[0].0, format!("unsupported field order {q}")))?;
    let n = num(h[1], "length")?;
    let k = num(h[2], "dimension")?;
    let ip = match h[3].1 {
        "E" => InnerProduct::Euclidean,
        "H" if field.is_gf4() => InnerProduct::Hermitian,
        "H" => return Err(err(hline, h[3].0, format!("ip H requires q = 4, got q = {q}"))),
        other => return Err(err(hline, h[3].0, format!("ip must be E or H, got `{other}`"))),
    };

    let mut matrix = GfMatrix::zeros(field, 0, n);
    let mut row_lines = Vec::with_capacity(k);
    let mut row = vec![0u8; n];
    for (lineno, line) in lines {
        if row_lines.len() == k {
            return Err(err(lineno, 1, format!("expected {k} rows, found more")));
        }
        let toks = tokens(line);
        if toks.len() != n {
            let col = toks.get(n).map_or(line.len() + 1, |t| t.0);
            return Err(err(lineno, col, format!("expected {n} symbols, found {}", toks.len())));
        }
        for (j, (col, tok)) in toks.into_iter().enumerate() {
            row[j] = field.parse_symbol(tok).ok_or_else(|| err(lineno, col, format!("bad symbol `{tok}` for GF({q})")))?;
        }
        matrix.push_row(&row).expect("row width checked");
        row_lines.push(lineno);
    }
    if row_lines.len() != k {
        let last = text.lines().count().max(1);
        return Err(err(last, 1, format!("expected {k} rows, found {}", row_lines.len())));
    }
    Ok(MatrixFile { ip, matrix, row_lines })
}

/// Parses a generator matrix, rejecting rank-deficient input at the first
/// row that depends on the rows above it.
pub fn parse_code(text: &str) -> Result<LinearCode, ParseError> {
    let file = parse_matrix(text)?;
    let m = &file.matrix;
    if m.rank() < m.rows() {
        let bad = (0..m.rows()).find(|&i| m.row_range(0..i + 1).rank() <= i).expect("some row is dependent");
        return Err(err(
            file.row_lines[bad],
            1,
            format!("generator not full rank (use rref tool): row {} depends on the rows above", bad + 1),
        ));
    }
    Ok(LinearCode::new(file.matrix, file.ip).expect("rank and ip checked"))
}

pub fn render_matrix(m: &GfMatrix, ip: InnerProduct, comments: &[String]) -> String {
    let f = m.field();
    let mut out = String::new();
    for c in comments {
        out.push_str("# ");
        out.push_str(c);
        out.push('\n');
    }
    out.push_str(&format!("{} {} {} {}\n", f.order(), m.cols(), m.rows(), ip.tag()));
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).into_iter().map(|v| f.symbol(v)).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn render_code(c: &LinearCode, comments: &[String]) -> String {
    render_matrix(c.generator(), c.inner_product(), comments)
}

pub fn render_word(f: Field, word: &[u8]) -> String {
    word.iter().map(|&v| f.symbol(v)).collect::<Vec<_>>().join(" ")
}
