//! Text syntax for tree tensors and their linear combinations.
//!
//! ```text
//! tree := leaf | "[" tree "," tree "]" | "{" tree "," tree "}" | "(" tree "<" tree ")"
//! leaf := decimal positive integer
//! combination := ["+"|"-"] term (("+"|"-") term)*
//! term := [coefficient ["*"]] tree          coefficient := int ["/" int]
//! ```
//! Whitespace is ignored; `−` (U+2212) is accepted as a minus sign.

use crate::error::{Error, Result};
use crate::free_operad::{canonicalize, Generator, Signature, Tree, TreeTensor};
use crate::linalg::SpeciesVector;
use crate::rational::Rational;

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    signature: Option<&'a Signature>,
    len: usize,
}

impl<'a> Parser<'a> {
    fn new(input: &str, signature: Option<&'a Signature>) -> Self {
        let chars: Vec<(usize, char)> = input
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .map(|(i, c)| (i, if c == '−' { '-' } else { c }))
            .collect();
        Parser { chars, pos: 0, signature, len: input.len() }
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.len, |(i, _)| *i)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse { offset: self.offset(), message: message.into() })
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|(_, c)| *c)
    }

    fn expect(&mut self, c: char) -> Result<()> {
        match self.peek() {
            Some(d) if d == c => {
                self.pos += 1;
                Ok(())
            }
            Some(d) => self.err(format!("expected `{c}`, found `{d}`")),
            None => self.err(format!("expected `{c}`, found end of input")),
        }
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().map(|(_, c)| c).collect())
    }

    fn generator(&self, g: Generator) -> Result<Generator> {
        match self.signature {
            Some(sig) if !sig.contains(g) => Err(Error::ForeignGenerator(g.name().into())),
            _ => Ok(g),
        }
    }

    fn tree(&mut self) -> Result<Tree> {
        let (gen, sep, close) = match self.peek() {
            Some('[') => (Generator::Bracket, ',', ']'),
            Some('{') => (Generator::Bullet, ',', '}'),
            Some('(') => (Generator::Pre, '<', ')'),
            Some(c) if c.is_ascii_digit() => {
                let offset = self.offset();
                let text = self.digits().expect("at least one digit");
                return match text.parse::<u32>() {
                    Ok(n) if n > 0 => Ok(Tree::Leaf(n)),
                    _ => Err(Error::Parse { offset, message: format!("`{text}` is not a positive label") }),
                };
            }
            Some(c) => return self.err(format!("unexpected `{c}`")),
            None => return self.err("unexpected end of input"),
        };
        let gen = self.generator(gen)?;
        self.pos += 1;
        let left = self.tree()?;
        self.expect(sep)?;
        let right = self.tree()?;
        self.expect(close)?;
        Ok(Tree::node(gen, left, right))
    }

    /// Coefficient prefix, if the upcoming number is followed by a tree opener.
    fn coefficient(&mut self) -> Result<Option<Rational>> {
        let save = self.pos;
        let Some(num) = self.digits() else { return Ok(None) };
        let mut text = num;
        if self.peek() == Some('/') {
            self.pos += 1;
            match self.digits() {
                Some(den) => text = format!("{text}/{den}"),
                None => return self.err("expected denominator"),
            }
        }
        match self.peek() {
            Some('*') => {
                self.pos += 1;
            }
            Some('[' | '{' | '(') => {}
            _ if text.contains('/') => return self.err("a coefficient must be followed by a tree"),
            _ => {
                self.pos = save;
                return Ok(None);
            }
        }
        let offset = self.offset();
        text.parse::<Rational>().map(Some).map_err(|message| Error::Parse { offset, message })
    }

    fn finish(&self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(c) => self.err(format!("trailing `{c}`")),
        }
    }
}

/// Parses a single raw tree. With a signature, other generators are rejected.
pub fn parse_tree(input: &str, signature: Option<&Signature>) -> Result<Tree> {
    let mut p = Parser::new(input, signature);
    let t = p.tree()?;
    p.finish()?;
    Ok(t)
}

/// Parses and canonicalizes a linear combination such as `"1/3 [[1,2],3] - {1,[2,3]}"`.
pub fn parse_combination(input: &str, signature: Option<&Signature>) -> Result<SpeciesVector<TreeTensor>> {
    let mut p = Parser::new(input, signature);
    let mut out: Option<SpeciesVector<TreeTensor>> = None;
    let mut first = true;
    while p.peek().is_some() {
        let mut sign = Rational::one();
        match p.peek() {
            Some('+') => p.pos += 1,
            Some('-') => {
                p.pos += 1;
                sign = -sign;
            }
            _ if !first => return p.err("expected `+` or `-`"),
            _ => {}
        }
        first = false;
        let coeff = p.coefficient()?.unwrap_or_else(Rational::one);
        let offset = p.offset();
        let tree = p.tree()?;
        let (t, s) = canonicalize(&tree)?;
        let term = SpeciesVector::single(t.labels(), t, &(&sign * &coeff) * &Rational::from(s));
        match &mut out {
            None => out = Some(term),
            Some(acc) => acc.add_scaled(&term, &Rational::one()).map_err(|e| match e {
                Error::MixedComponents { expected, found } => Error::Parse {
                    offset,
                    message: format!("term on {found} in a combination on {expected}"),
                },
                e => e,
            })?,
        }
        if matches!(p.peek(), Some(c) if c != '+' && c != '-') {
            return p.err("expected `+` or `-`");
        }
    }
    out.ok_or(Error::Parse { offset: 0, message: "empty combination".into() })
}
