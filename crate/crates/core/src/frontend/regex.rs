//! Regular expressions over an explicitly declared alphabet.
//!
//! Grammar (whitespace is ignored):
//!
//! ```text
//! union  := concat ('+' concat)*
//! concat := star star*
//! star   := atom '*'*
//! atom   := letter | '_' | '#' | '(' union ')'
//! ```
//!
//! `_` is the empty word and `#` the empty language.

use std::fmt;

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RegexAst {
    EmptyLanguage,
    EmptyWord,
    /// Index into the alphabet the expression was parsed against.
    Letter(usize),
    Union(Box<RegexAst>, Box<RegexAst>),
    Concat(Box<RegexAst>, Box<RegexAst>),
    Star(Box<RegexAst>),
}

impl RegexAst {
    pub fn union(a: RegexAst, b: RegexAst) -> Self {
        RegexAst::Union(Box::new(a), Box::new(b))
    }

    pub fn concat(a: RegexAst, b: RegexAst) -> Self {
        RegexAst::Concat(Box::new(a), Box::new(b))
    }

    pub fn star(a: RegexAst) -> Self {
        RegexAst::Star(Box::new(a))
    }

    fn fmt_with(&self, alphabet: &Alphabet, out: &mut String, prec: u8) {
        // 0: union, 1: concat, 2: star operand
        match self {
            RegexAst::EmptyLanguage => out.push('#'),
            RegexAst::EmptyWord => out.push('_'),
            RegexAst::Letter(i) => out.push(alphabet.letter(*i)),
            RegexAst::Union(a, b) => {
                if prec > 0 {
                    out.push('(');
                }
                a.fmt_with(alphabet, out, 0);
                out.push('+');
                b.fmt_with(alphabet, out, 0);
                if prec > 0 {
                    out.push(')');
                }
            }
            RegexAst::Concat(a, b) => {
                if prec > 1 {
                    out.push('(');
                }
                a.fmt_with(alphabet, out, 1);
                b.fmt_with(alphabet, out, 1);
                if prec > 1 {
                    out.push(')');
                }
            }
            RegexAst::Star(a) => {
                a.fmt_with(alphabet, out, 2);
                out.push('*');
            }
        }
    }
}

/// A parsed expression together with the alphabet its letters index into.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Regex {
    pub alphabet: Alphabet,
    pub ast: RegexAst,
}

impl fmt::Display for Regex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        self.ast.fmt_with(&self.alphabet, &mut out, 0);
        f.write_str(&out)
    }
}

pub fn parse_regex(text: &str, alphabet: &Alphabet) -> Result<Regex> {
    let mut parser = Parser {
        chars: text.chars().collect(),
        pos: 0,
        alphabet,
    };
    let ast = parser.union()?;
    parser.skip_ws();
    if let Some(c) = parser.peek() {
        return Err(parser.error(format!("unexpected '{c}'")));
    }
    Ok(Regex {
        alphabet: alphabet.clone(),
        ast,
    })
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    alphabet: &'a Alphabet,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn error(&self, message: String) -> Error {
        Error::Syntax {
            offset: self.pos,
            message,
        }
    }

    fn union(&mut self) -> Result<RegexAst> {
        let mut ast = self.concat()?;
        while self.peek() == Some('+') {
            self.pos += 1;
            let rhs = self.concat()?;
            ast = RegexAst::union(ast, rhs);
        }
        Ok(ast)
    }

    fn starts_atom(&mut self) -> bool {
        matches!(self.peek(), Some(c) if c != '+' && c != ')' && c != '*')
    }

    fn concat(&mut self) -> Result<RegexAst> {
        let mut ast = self.star()?;
        while self.starts_atom() {
            let rhs = self.star()?;
            ast = RegexAst::concat(ast, rhs);
        }
        Ok(ast)
    }

    fn star(&mut self) -> Result<RegexAst> {
        let mut ast = self.atom()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            ast = RegexAst::star(ast);
        }
        Ok(ast)
    }

    fn atom(&mut self) -> Result<RegexAst> {
        match self.peek() {
            None => Err(self.error("unexpected end of input".into())),
            Some('(') => {
                self.pos += 1;
                let inner = self.union()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected ')'".into()));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some('_') => {
                self.pos += 1;
                Ok(RegexAst::EmptyWord)
            }
            Some('#') => {
                self.pos += 1;
                Ok(RegexAst::EmptyLanguage)
            }
            Some(c @ ('+' | ')' | '*')) => Err(self.error(format!("unexpected '{c}'"))),
            Some(c) => match self.alphabet.index_of(c) {
                Some(i) => {
                    self.pos += 1;
                    Ok(RegexAst::Letter(i))
                }
                None => Err(Error::UnknownLetter(c)),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use RegexAst::*;

    fn ab() -> Alphabet {
        Alphabet::parse("ab").unwrap()
    }

    #[test]
    fn contains_a() {
        let r = parse_regex("(a+b)*a(a+b)*", &ab()).unwrap();
        let any = RegexAst::star(RegexAst::union(Letter(0), Letter(1)));
        let expected = RegexAst::concat(RegexAst::concat(any.clone(), Letter(0)), any);
        assert_eq!(r.ast, expected);
        assert_eq!(r.to_string(), "(a+b)*a(a+b)*");
    }

    #[test]
    fn b_star() {
        assert_eq!(parse_regex("b*", &ab()).unwrap().ast, RegexAst::star(Letter(1)));
    }

    #[test]
    fn unbalanced_parenthesis() {
        let err = parse_regex("a(", &ab()).unwrap_err();
        assert!(matches!(err, Error::Syntax { offset: 2, .. }), "{err:?}");
    }

    #[test]
    fn other_errors() {
        assert_eq!(parse_regex("ac", &ab()).unwrap_err(), Error::UnknownLetter('c'));
        assert!(matches!(parse_regex("a+", &ab()), Err(Error::Syntax { offset: 2, .. })));
        assert!(matches!(parse_regex("*a", &ab()), Err(Error::Syntax { offset: 0, .. })));
        assert!(matches!(parse_regex("a)", &ab()), Err(Error::Syntax { offset: 1, .. })));
        assert!(matches!(parse_regex("", &ab()), Err(Error::Syntax { offset: 0, .. })));
    }

    #[test]
    fn constants_and_spaces() {
        let r = parse_regex(" _ + # a ", &ab()).unwrap();
        assert_eq!(
            r.ast,
            RegexAst::union(EmptyWord, RegexAst::concat(EmptyLanguage, Letter(0)))
        );
    }
}
