//! Line reader shared by the sectioned table formats (`pmalg`, `pmgrp`, `pmact`).

use std::collections::HashSet;

use crate::error::{Error, Result};

pub(crate) struct Reader<'a> {
    lines: Vec<(usize, Vec<&'a str>)>,
    pos: usize,
    seen: HashSet<String>,
}

impl<'a> Reader<'a> {
    pub fn new(text: &'a str) -> Self {
        let lines = text
            .lines()
            .enumerate()
            .filter_map(|(i, raw)| {
                let content = raw.split('#').next().unwrap_or("");
                let tokens: Vec<&str> = content.split_whitespace().collect();
                (!tokens.is_empty()).then_some((i + 1, tokens))
            })
            .collect();
        Reader {
            lines,
            pos: 0,
            seen: HashSet::new(),
        }
    }

    fn last_line(&self) -> usize {
        self.lines.last().map_or(1, |(l, _)| *l)
    }

    fn next_line(&mut self, what: &str) -> Result<(usize, Vec<&'a str>)> {
        let line = self
            .lines
            .get(self.pos)
            .cloned()
            .ok_or_else(|| Error::Syntax {
                line: self.last_line(),
                message: format!("unexpected end of input, expected {what}"),
            })?;
        self.pos += 1;
        Ok(line)
    }

    /// `<magic> 1`
    pub fn header(&mut self, magic: &str) -> Result<()> {
        let (line, tokens) = self.next_line(magic)?;
        match tokens.as_slice() {
            [m, "1"] if *m == magic => Ok(()),
            [m, v] if *m == magic => Err(Error::Syntax {
                line,
                message: format!("unsupported {magic} version `{v}`"),
            }),
            _ => Err(Error::Syntax {
                line,
                message: format!("expected header `{magic} 1`"),
            }),
        }
    }

    /// `<key> <positive integer>`
    pub fn positive(&mut self, key: &str) -> Result<usize> {
        let (line, tokens) = self.next_line(key)?;
        match tokens.as_slice() {
            [k, v] if *k == key => match v.parse::<usize>() {
                Ok(value) if value > 0 => Ok(value),
                _ => Err(Error::Syntax {
                    line,
                    message: format!("`{key}` must be a positive integer, found `{v}`"),
                }),
            },
            _ => Err(Error::Syntax {
                line,
                message: format!("expected `{key} <value>`"),
            }),
        }
    }

    /// A section header made of exactly `expected` tokens.
    pub fn section(&mut self, expected: &[&str]) -> Result<usize> {
        let name = expected.join(" ");
        let (line, tokens) = self.next_line(&format!("section `{name}`"))?;
        let found = tokens.join(" ");
        if found == name {
            self.seen.insert(found);
            return Ok(line);
        }
        if self.seen.contains(&found) {
            return Err(Error::DuplicateSection {
                line,
                section: found,
            });
        }
        Err(Error::Syntax {
            line,
            message: format!("expected section `{name}`, found `{found}`"),
        })
    }

    /// `<key> <index> <value>` with `value < bound`.
    pub fn indexed_value(&mut self, key: &str, index: usize, bound: usize) -> Result<usize> {
        let name = format!("{key} {index}");
        let (line, tokens) = self.next_line(&format!("`{name} <value>`"))?;
        match tokens.as_slice() {
            [k, i, v] if *k == key && i.parse::<usize>().ok() == Some(index) => {
                if !self.seen.insert(name.clone()) {
                    return Err(Error::DuplicateSection {
                        line,
                        section: name,
                    });
                }
                parse_entry(line, v, bound)
            }
            [k, i, _] if *k == key && self.seen.contains(&format!("{k} {i}")) => {
                Err(Error::DuplicateSection {
                    line,
                    section: format!("{k} {i}"),
                })
            }
            _ => {
                let found = tokens.join(" ");
                if self.seen.contains(&found) {
                    return Err(Error::DuplicateSection {
                        line,
                        section: found,
                    });
                }
                Err(Error::Syntax {
                    line,
                    message: format!("expected `{name} <value>`, found `{found}`"),
                })
            }
        }
    }

    /// Reads all consecutive numeric rows; there must be exactly `rows` of
    /// them, each with `cols` entries below `bound`.
    pub fn rows(
        &mut self,
        section: &str,
        header_line: usize,
        rows: usize,
        cols: usize,
        bound: usize,
    ) -> Result<Vec<usize>> {
        let mut out = Vec::with_capacity(rows * cols);
        let mut found = 0;
        while let Some((line, tokens)) = self.lines.get(self.pos) {
            if tokens[0].parse::<usize>().is_err() {
                break;
            }
            if tokens.len() != cols {
                return Err(Error::Syntax {
                    line: *line,
                    message: format!(
                        "row of `{section}` has {} entries, expected {cols}",
                        tokens.len()
                    ),
                });
            }
            for tok in tokens {
                out.push(parse_entry(*line, tok, bound)?);
            }
            found += 1;
            self.pos += 1;
        }
        if found != rows {
            return Err(Error::RowCount {
                line: header_line,
                section: section.to_string(),
                expected: rows,
                found,
            });
        }
        Ok(out)
    }

    pub fn finish(&self) -> Result<()> {
        match self.lines.get(self.pos) {
            None => Ok(()),
            Some((line, tokens)) => {
                let found = tokens.join(" ");
                let key = tokens[..tokens.len().min(2)].join(" ");
                if self.seen.contains(&found) || self.seen.contains(&key) {
                    Err(Error::DuplicateSection {
                        line: *line,
                        section: key,
                    })
                } else {
                    Err(Error::Syntax {
                        line: *line,
                        message: format!("unexpected trailing content `{found}`"),
                    })
                }
            }
        }
    }
}

fn parse_entry(line: usize, token: &str, bound: usize) -> Result<usize> {
    let value: usize = token.parse().map_err(|_| Error::Syntax {
        line,
        message: format!("`{token}` is not a non-negative integer"),
    })?;
    if value >= bound {
        return Err(Error::EntryOutOfRange {
            line,
            value,
            size: bound,
        });
    }
    Ok(value)
}

/// Powers used for table sizes, refusing absurd headers instead of overflowing.
pub(crate) fn checked_table_len(line: usize, size: usize, arity: usize) -> Result<usize> {
    u32::try_from(arity)
        .ok()
        .and_then(|a| size.checked_pow(a))
        .filter(|&len| len <= 1 << 28)
        .ok_or_else(|| Error::Syntax {
            line,
            message: format!("table of {size}^{arity} entries is too large"),
        })
}

/// Writes `values` as `cols`-wide rows of space-separated decimals.
pub(crate) fn write_rows(out: &mut String, values: &[usize], cols: usize) {
    for row in values.chunks(cols) {
        let mut first = true;
        for v in row {
            if !first {
                out.push(' ');
            }
            first = false;
            out.push_str(&v.to_string());
        }
        out.push('\n');
    }
}
