//! The `pmalg` text format.
//!
//! ```text
//! pmalg 1
//! n 1
//! size 3
//! theta
//! 0 1 2
//! 2 0 1
//! 1 2 0
//! alpha 1
//! 0 1 2
//! 2 0 1
//! 1 2 0
//! e 1 0
//! ```
//!
//! `theta` has one row per tuple `(a_1..a_n)` in lexicographic order, column
//! `b` holding `theta(a_1..a_n, b)`. Each `alpha i` section is a `k x k`
//! table. `#` starts a comment.

use super::ProtomodularFrame;
use crate::error::Result;
use crate::textfmt::{checked_table_len, write_rows, Reader};

pub fn parse_algebra(text: &str) -> Result<ProtomodularFrame> {
    let mut r = Reader::new(text);
    r.header("pmalg")?;
    let n = r.positive("n")?;
    let size = r.positive("size")?;

    let line = r.section(&["theta"])?;
    let rows = checked_table_len(line, size, n)?;
    let theta = r.rows("theta", line, rows, size, size)?;

    let mut alphas = Vec::with_capacity(n);
    for i in 1..=n {
        let index = i.to_string();
        let line = r.section(&["alpha", &index])?;
        alphas.push(r.rows(&format!("alpha {i}"), line, size, size, size)?);
    }
    let units = (1..=n)
        .map(|i| r.indexed_value("e", i, size))
        .collect::<Result<Vec<_>>>()?;
    r.finish()?;

    ProtomodularFrame::new(n, size, theta, alphas, units)
}

/// Canonical text: no comments, single spaces, newline-terminated rows.
pub fn serialize_algebra(frame: &ProtomodularFrame) -> String {
    let k = frame.size();
    let mut out = format!("pmalg 1\nn {}\nsize {k}\ntheta\n", frame.n());
    write_rows(&mut out, frame.theta_table(), k);
    for i in 0..frame.n() {
        out.push_str(&format!("alpha {}\n", i + 1));
        write_rows(&mut out, frame.alpha_table(i), k);
    }
    for i in 0..frame.n() {
        out.push_str(&format!("e {} {}\n", i + 1, frame.unit(i)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::fixtures;

    #[test]
    fn parses_fixtures() {
        let e32 = parse_algebra(fixtures::E32_TEXT).unwrap();
        assert_eq!((e32.size(), e32.n()), (3, 1));
        let e34 = parse_algebra(fixtures::E34_TEXT).unwrap();
        assert_eq!((e34.size(), e34.n()), (4, 3));
        assert_eq!(e34.units(), vec![0, 0, 1]);
    }

    #[test]
    fn canonical_fixtures_round_trip_bytewise() {
        for (name, text) in fixtures::TEXTS {
            let frame = parse_algebra(text).unwrap();
            assert_eq!(serialize_algebra(&frame), *text, "fixture {name}");
        }
    }

    #[test]
    fn trivial_frame_serializes_to_zero_tables() {
        let text = serialize_algebra(&ProtomodularFrame::trivial(2));
        assert_eq!(
            text,
            "pmalg 1\nn 2\nsize 1\ntheta\n0\nalpha 1\n0\nalpha 2\n0\ne 1 0\ne 2 0\n"
        );
    }

    #[test]
    fn e33_theta_has_eight_entries() {
        let text = serialize_algebra(&fixtures::e33());
        let theta_rows: Vec<&str> = text
            .lines()
            .skip_while(|l| *l != "theta")
            .skip(1)
            .take_while(|l| !l.starts_with("alpha"))
            .collect();
        let entries: usize = theta_rows.iter().map(|r| r.split(' ').count()).sum();
        assert_eq!(entries, 8);
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let text =
            "# header\npmalg 1 # version\n\nn 1\nsize 1\ntheta\n0\nalpha 1\n0 # row\ne 1 0\n";
        assert_eq!(parse_algebra(text).unwrap(), ProtomodularFrame::trivial(1));
    }

    #[test]
    fn out_of_range_entry() {
        let text = fixtures::E32_TEXT.replacen("2 0 1", "3 0 1", 1);
        assert_eq!(
            parse_algebra(&text),
            Err(Error::EntryOutOfRange {
                line: 6,
                value: 3,
                size: 3
            })
        );
    }

    #[test]
    fn wrong_row_count() {
        let text = fixtures::E32_TEXT.replacen("2 0 1\n", "", 1);
        assert!(matches!(
            parse_algebra(&text),
            Err(Error::RowCount {
                expected: 3,
                found: 2,
                ..
            })
        ));
    }

    #[test]
    fn wrong_row_width() {
        let text = fixtures::E32_TEXT.replacen("2 0 1", "2 0", 1);
        assert!(matches!(
            parse_algebra(&text),
            Err(Error::Syntax { line: 6, .. })
        ));
    }

    #[test]
    fn duplicate_section() {
        let text =
            fixtures::E32_TEXT.replacen("e 1 0\n", "alpha 1\n0 1 2\n2 0 1\n1 2 0\ne 1 0\n", 1);
        assert!(matches!(
            parse_algebra(&text),
            Err(Error::DuplicateSection { line: 12, .. })
        ));
        let text = format!("{}e 1 0\n", fixtures::E32_TEXT);
        assert!(matches!(
            parse_algebra(&text),
            Err(Error::DuplicateSection { line: 13, .. })
        ));
    }

    #[test]
    fn bad_header() {
        assert!(matches!(
            parse_algebra("pmalg 2\n"),
            Err(Error::Syntax { line: 1, .. })
        ));
        assert!(matches!(
            parse_algebra("pmalg 1\nsize 3\n"),
            Err(Error::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            parse_algebra("pmalg 1\nn 0\n"),
            Err(Error::Syntax { line: 2, .. })
        ));
    }

    #[test]
    fn sections_out_of_order() {
        let text = "pmalg 1\nn 1\nsize 1\nalpha 1\n0\ntheta\n0\ne 1 0\n";
        assert!(matches!(
            parse_algebra(text),
            Err(Error::Syntax { line: 4, .. })
        ));
    }
}
