use super::{Identity, Term, Theory};
use crate::error::{Error, Result};
use crate::model::Signature;

#[derive(Debug, Clone, PartialEq)]
enum Tok<'a> {
    Ident(&'a str),
    Open,
    Close,
    Comma,
    Eq,
}

struct Lexer<'a> {
    line: usize,
    tokens: Vec<(usize, Tok<'a>)>,
    pos: usize,
    end_column: usize,
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::TermSyntax {
        line,
        column,
        message: message.into(),
    }
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

impl<'a> Lexer<'a> {
    /// Tokenizes `src`, which begins at 1-based column `offset + 1` of `line`.
    fn new(src: &'a str, line: usize, offset: usize) -> Result<Self> {
        let mut tokens = Vec::new();
        let mut chars = src.char_indices().peekable();
        while let Some(&(i, c)) = chars.peek() {
            let column = offset + i + 1;
            match c {
                c if c.is_whitespace() => {
                    chars.next();
                }
                '(' | ')' | ',' | '=' => {
                    chars.next();
                    let tok = match c {
                        '(' => Tok::Open,
                        ')' => Tok::Close,
                        ',' => Tok::Comma,
                        _ => Tok::Eq,
                    };
                    tokens.push((column, tok));
                }
                c if is_ident_start(c) => {
                    let mut end = i;
                    while let Some(&(j, d)) = chars.peek() {
                        if !is_ident_char(d) {
                            break;
                        }
                        end = j + d.len_utf8();
                        chars.next();
                    }
                    tokens.push((column, Tok::Ident(&src[i..end])));
                }
                other => {
                    return Err(syntax(
                        line,
                        column,
                        format!("unexpected character `{other}`"),
                    ))
                }
            }
        }
        Ok(Lexer {
            line,
            tokens,
            pos: 0,
            end_column: offset + src.len() + 1,
        })
    }

    fn peek(&self) -> Option<&Tok<'a>> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn column(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map_or(self.end_column, |(c, _)| *c)
    }

    fn bump(&mut self) -> Option<(usize, Tok<'a>)> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect(&mut self, tok: Tok<'a>, what: &str) -> Result<()> {
        let column = self.column();
        match self.bump() {
            Some((_, t)) if t == tok => Ok(()),
            _ => Err(syntax(self.line, column, format!("expected {what}"))),
        }
    }

    fn term(&mut self, sig: &Signature) -> Result<Term> {
        let column = self.column();
        let name = match self.bump() {
            Some((_, Tok::Ident(name))) => name,
            _ => return Err(syntax(self.line, column, "expected identifier")),
        };
        let declared = sig.get(name).map(|s| s.arity);
        if self.peek() != Some(&Tok::Open) {
            return match declared {
                None => Ok(Term::var(name)),
                Some(0) => Ok(Term::app(name, Vec::new())),
                Some(expected) => Err(Error::ArityMismatch {
                    symbol: name.to_string(),
                    expected,
                    found: 0,
                }),
            };
        }
        let Some(expected) = declared else {
            return Err(Error::UnknownSymbol(name.to_string()));
        };
        self.bump();
        let mut args = vec![self.term(sig)?];
        while self.peek() == Some(&Tok::Comma) {
            self.bump();
            args.push(self.term(sig)?);
        }
        self.expect(Tok::Close, "`,` or `)`")?;
        if args.len() != expected {
            return Err(Error::ArityMismatch {
                symbol: name.to_string(),
                expected,
                found: args.len(),
            });
        }
        Ok(Term::app(name, args))
    }

    fn finish(&self) -> Result<()> {
        if self.pos < self.tokens.len() {
            return Err(syntax(
                self.line,
                self.column(),
                "unexpected trailing input",
            ));
        }
        Ok(())
    }
}

/// Parses a single term against `sig`; undeclared identifiers are variables.
pub fn parse_term(text: &str, sig: &Signature) -> Result<Term> {
    let mut lx = Lexer::new(text, 1, 0)?;
    let t = lx.term(sig)?;
    lx.finish()?;
    Ok(t)
}

fn is_identifier(s: &str) -> bool {
    let mut cs = s.chars();
    cs.next().is_some_and(is_ident_start) && cs.all(is_ident_char)
}

pub fn parse_theory(text: &str) -> Result<Theory> {
    let mut name: Option<String> = None;
    let mut signature = Signature::default();
    let mut axiom_lines = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        let trimmed = content.trim_start();
        if trimmed.is_empty() {
            continue;
        }
        let indent = content.len() - trimmed.len();
        let keyword = trimmed.split_whitespace().next().unwrap_or("");
        let rest = &trimmed[keyword.len()..];
        let words: Vec<&str> = rest.split_whitespace().collect();
        match keyword {
            "theory" => {
                if name.is_some() {
                    return Err(syntax(line, indent + 1, "duplicate `theory` line"));
                }
                match words.as_slice() {
                    [n] if is_identifier(n) => name = Some(n.to_string()),
                    _ => return Err(syntax(line, indent + 1, "expected `theory <name>`")),
                }
            }
            "op" | "const" => {
                let (sym, arity) = match (keyword, words.as_slice()) {
                    ("op", [s, a]) => match a.parse::<usize>() {
                        Ok(a) => (*s, a),
                        Err(_) => return Err(syntax(line, indent + 1, format!("bad arity `{a}`"))),
                    },
                    ("const", [s]) => (*s, 0),
                    _ => {
                        return Err(syntax(
                            line,
                            indent + 1,
                            "expected `op <name> <arity>` or `const <name>`",
                        ))
                    }
                };
                if !is_identifier(sym) {
                    return Err(syntax(line, indent + 1, format!("bad symbol name `{sym}`")));
                }
                signature.push(sym, arity)?;
            }
            "axiom" => axiom_lines.push((line, indent + keyword.len(), rest)),
            other => {
                return Err(syntax(
                    line,
                    indent + 1,
                    format!("unknown directive `{other}`"),
                ))
            }
        }
    }

    let name = name.ok_or_else(|| syntax(1, 1, "missing `theory <name>` line"))?;
    let axioms = axiom_lines
        .into_iter()
        .map(|(line, offset, src)| {
            let mut lx = Lexer::new(src, line, offset)?;
            let lhs = lx.term(&signature)?;
            lx.expect(Tok::Eq, "`=`")?;
            let rhs = lx.term(&signature)?;
            lx.finish()?;
            Ok(Identity::new(lhs, rhs))
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(Theory {
        name,
        signature,
        axioms,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::termlang::presets;

    #[test]
    fn parses_v1_preset() {
        let t = parse_theory(presets::preset("v1").unwrap()).unwrap();
        assert_eq!(t.name, "v1");
        assert_eq!(t.signature.len(), 3);
        assert_eq!(t.axioms.len(), 2);
        assert_eq!(t.axioms[1].to_string(), "theta(alpha(x, y), y) = x");
    }

    #[test]
    fn right_cancellable_preset_adds_one_identity_per_index() {
        let v2 = parse_theory(presets::preset("v2").unwrap()).unwrap();
        let rc2 = parse_theory(presets::preset("right_cancellable2").unwrap()).unwrap();
        assert_eq!(rc2.axioms.len(), v2.axioms.len() + 2);
        assert_eq!(rc2.axioms[..v2.axioms.len()], v2.axioms[..]);
    }

    #[test]
    fn undeclared_application_is_an_error() {
        assert_eq!(
            parse_theory("theory t\naxiom f(x) = x\n"),
            Err(Error::UnknownSymbol("f".into()))
        );
    }

    #[test]
    fn arity_mismatch() {
        let err = parse_theory("theory t\nop f 2\naxiom f(x) = x\n").unwrap_err();
        assert!(matches!(
            err,
            Error::ArityMismatch {
                expected: 2,
                found: 1,
                ..
            }
        ));
        let err = parse_theory("theory t\nop f 2\naxiom f = x\n").unwrap_err();
        assert!(matches!(
            err,
            Error::ArityMismatch {
                expected: 2,
                found: 0,
                ..
            }
        ));
    }

    #[test]
    fn duplicate_operation() {
        assert_eq!(
            parse_theory("theory t\nop f 2\nconst f\n"),
            Err(Error::DuplicateSymbol("f".into()))
        );
    }

    #[test]
    fn syntax_errors_carry_line_and_column() {
        let err = parse_theory("theory t\nop f 2\naxiom f(x, y = x\n").unwrap_err();
        assert_eq!(
            err,
            Error::TermSyntax {
                line: 3,
                column: 14,
                message: "expected `,` or `)`".into()
            }
        );
        let err = parse_theory("theory t\naxiom x = \n").unwrap_err();
        assert!(matches!(err, Error::TermSyntax { line: 2, .. }));
        let err = parse_theory("theory t\naxiom x $ y\n").unwrap_err();
        assert!(matches!(
            err,
            Error::TermSyntax {
                line: 2,
                column: 9,
                ..
            }
        ));
        let err = parse_theory("op f 1\n").unwrap_err();
        assert!(matches!(err, Error::TermSyntax { line: 1, .. }));
        let err = parse_theory("theory t\nlemma x = x\n").unwrap_err();
        assert!(matches!(
            err,
            Error::TermSyntax {
                line: 2,
                column: 1,
                ..
            }
        ));
    }

    #[test]
    fn declarations_may_follow_axioms() {
        let t = parse_theory("theory t\naxiom m(x, e) = x\nop m 2\nconst e\n").unwrap();
        assert_eq!(
            t.axioms[0].lhs,
            Term::app("m", vec![Term::var("x"), Term::app("e", vec![])])
        );
    }

    #[test]
    fn every_preset_parses() {
        for (name, text) in presets::PRESETS {
            let t = parse_theory(text).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert_eq!(&t.name, name);
        }
    }
}
