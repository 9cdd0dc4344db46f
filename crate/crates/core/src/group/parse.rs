//! Text formats for ingested groups.
//!
//! Multiplication table: first line `n`, then `n` rows of `n` whitespace
//! separated 0-based indices (row `i`, column `j` holds `i·j`).
//!
//! Permutation generators: first line the degree `d`, then one generator per
//! line given as `d` whitespace separated images.
//!
//! In both formats blank lines and lines starting with `#` are ignored.

use super::{group_from_permutations, Group, GroupError, Limits};

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_row(line_no: usize, line: &str) -> Result<Vec<usize>, GroupError> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>().map_err(|_| GroupError::MalformedFile {
                line: line_no,
                message: format!("`{tok}` is not a non-negative integer"),
            })
        })
        .collect()
}

fn parse_header<'a>(lines: &mut impl Iterator<Item = (usize, &'a str)>, what: &str) -> Result<usize, GroupError> {
    let (line_no, line) = lines.next().ok_or(GroupError::MalformedFile {
        line: 1,
        message: format!("missing {what} header"),
    })?;
    let row = parse_row(line_no, line)?;
    match row.as_slice() {
        [n] if *n > 0 => Ok(*n),
        _ => Err(GroupError::MalformedFile {
            line: line_no,
            message: format!("expected a single positive {what}"),
        }),
    }
}

pub fn parse_table_file(name: &str, text: &str, limits: &Limits) -> Result<Group, GroupError> {
    let mut lines = content_lines(text);
    let n = parse_header(&mut lines, "order")?;
    limits.check(n)?;
    let mut mul = Vec::with_capacity(n * n);
    let mut last_line = 1;
    for row_index in 0..n {
        let (line_no, line) = lines.next().ok_or(GroupError::MalformedFile {
            line: last_line + 1,
            message: format!("expected {n} table rows, found {row_index}"),
        })?;
        last_line = line_no;
        let row = parse_row(line_no, line)?;
        if row.len() != n {
            return Err(GroupError::MalformedFile {
                line: line_no,
                message: format!("row has {} entries, expected {n}", row.len()),
            });
        }
        if let Some(&bad) = row.iter().find(|&&x| x >= n) {
            return Err(GroupError::MalformedFile {
                line: line_no,
                message: format!("entry {bad} is out of range 0..{n}"),
            });
        }
        mul.extend(row.into_iter().map(|x| x as u32));
    }
    if let Some((line_no, _)) = lines.next() {
        return Err(GroupError::MalformedFile {
            line: line_no,
            message: "unexpected content after the last table row".into(),
        });
    }
    Group::from_table(name, n, mul, limits)
}

/// Parses a generator file into `(degree, generators)`.
pub fn parse_permutation_file(text: &str) -> Result<(usize, Vec<Vec<usize>>), GroupError> {
    let mut lines = content_lines(text);
    let degree = parse_header(&mut lines, "degree")?;
    let mut gens = Vec::new();
    for (line_no, line) in lines {
        let row = parse_row(line_no, line)?;
        if row.len() != degree {
            return Err(GroupError::MalformedFile {
                line: line_no,
                message: format!("generator has {} images, expected {degree}", row.len()),
            });
        }
        gens.push(row);
    }
    Ok((degree, gens))
}

impl Group {
    pub fn from_permutation_text(name: &str, text: &str, limits: &Limits) -> Result<Group, GroupError> {
        let (degree, gens) = parse_permutation_file(text)?;
        Ok(group_from_permutations(degree, &gens, limits)?.with_name(name))
    }

    /// Renders the group in the multiplication-table file format.
    pub fn to_table_text(&self) -> String {
        let n = self.order();
        let mut out = format!("{n}\n");
        for a in 0..n {
            let row: Vec<String> = (0..n).map(|b| self.mul(a, b).to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}
