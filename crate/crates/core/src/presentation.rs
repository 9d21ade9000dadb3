//! Free-group words, finite presentations, and their line-oriented text form.
//!
//! ```text
//! # binary dihedral-ish example
//! gens: a b
//! rel: aaBB
//! rel: abAB
//! ```
//!
//! Single-letter generators invert by upper-casing; any generator may be
//! written `name^-1` (or `name^k` for an integer power).

use std::fmt;

use thiserror::Error;

use crate::field::{Field, FieldError, Mat2};

/// One letter `g_i^{±1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub generator: usize,
    pub exponent: i8,
}

impl Letter {
    pub fn new(generator: usize, exponent: i8) -> Self {
        assert!(exponent == 1 || exponent == -1, "letters carry exponent ±1");
        Letter { generator, exponent }
    }

    pub fn inverse(self) -> Self {
        Letter {
            generator: self.generator,
            exponent: -self.exponent,
        }
    }
}

/// A freely reduced word.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn empty() -> Self {
        Word::default()
    }

    /// Freely reduces the given letters.
    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word { letters: out }
    }

    /// `g^power`, expanded letter by letter.
    pub fn power(generator: usize, power: i64) -> Self {
        let e = if power < 0 { -1 } else { 1 };
        Word {
            letters: vec![Letter::new(generator, e); power.unsigned_abs() as usize],
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.letters.iter().map(|l| l.generator).max()
    }

    pub fn multiply(&self, other: &Word) -> Word {
        Word::from_letters(self.letters.iter().chain(&other.letters).copied())
    }

    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// `u v u⁻¹ v⁻¹`.
    pub fn commutator(u: &Word, v: &Word) -> Word {
        u.multiply(v).multiply(&u.inverse()).multiply(&v.inverse())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("word uses generator {index} but only {available} images were given")]
    ImageCountMismatch { index: usize, available: usize },
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// Holonomy of a word: the product of images (and their inverses) along it.
/// `one` witnesses the field so that the empty word maps to the identity.
pub fn evaluate_word<T: Field>(w: &Word, images: &[Mat2<T>], one: &T) -> Result<Mat2<T>, WordError> {
    if let Some(index) = w.max_generator().filter(|&i| i >= images.len()) {
        return Err(WordError::ImageCountMismatch {
            index,
            available: images.len(),
        });
    }
    let mut acc = Mat2::identity_like(one);
    let mut inverses: Vec<Option<Mat2<T>>> = vec![None; images.len()];
    for l in w.letters() {
        let m = if l.exponent > 0 {
            images[l.generator].clone()
        } else {
            match &inverses[l.generator] {
                Some(inv) => inv.clone(),
                None => {
                    let inv = images[l.generator].inverse()?;
                    inverses[l.generator] = Some(inv.clone());
                    inv
                }
            }
        };
        acc = acc.mul(&m);
    }
    Ok(acc)
}

/// A finite presentation. Relators are words equal to the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    names: Vec<String>,
    relators: Vec<Word>,
}

impl Presentation {
    /// Builds a presentation; empty relators are dropped.
    ///
    /// Panics if a relator mentions a generator out of range.
    pub fn new(names: Vec<String>, relators: Vec<Word>) -> Self {
        for r in &relators {
            if let Some(g) = r.max_generator() {
                assert!(g < names.len(), "relator uses undeclared generator {g}");
            }
        }
        let relators = relators.into_iter().filter(|r| !r.is_empty()).collect();
        Presentation { names, relators }
    }

    /// Generators named a, b, c, … (then g0, g1, … past 26).
    pub fn with_default_names(num_generators: usize, relators: Vec<Word>) -> Self {
        let names = (0..num_generators)
            .map(|i| {
                if num_generators <= 26 {
                    ((b'a' + i as u8) as char).to_string()
                } else {
                    format!("g{i}")
                }
            })
            .collect();
        Self::new(names, relators)
    }

    /// The free group on `k` generators.
    pub fn free(k: usize) -> Self {
        Self::with_default_names(k, Vec::new())
    }

    pub fn num_generators(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn format_word(&self, w: &Word) -> String {
        let single = self.names.iter().all(|n| n.len() == 1);
        let toks: Vec<String> = w
            .letters()
            .iter()
            .map(|l| {
                let name = &self.names[l.generator];
                match (l.exponent > 0, single) {
                    (true, _) => name.clone(),
                    (false, true) => name.to_uppercase(),
                    (false, false) => format!("{name}^-1"),
                }
            })
            .collect();
        toks.join(if single { "" } else { " " })
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "gens:")?;
        for n in &self.names {
            write!(f, " {n}")?;
        }
        writeln!(f)?;
        for r in &self.relators {
            writeln!(f, "rel: {}", self.format_word(r))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("line {line}, column {column}: undeclared generator {name:?}")]
    UndeclaredGenerator { line: usize, column: usize, name: String },
    #[error("line {line}: duplicate generator name {name:?}")]
    DuplicateGenerator { line: usize, name: String },
}

fn valid_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some('a'..='z'))
        && chars.all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_')
}

pub fn parse_presentation(text: &str) -> Result<Presentation, ParseError> {
    let mut names: Option<Vec<String>> = None;
    let mut relators = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let indent = content.len() - content.trim_start().len();
        let trimmed = content.trim();
        let syntax = |column: usize, message: String| ParseError::Syntax { line, column, message };
        match &names {
            None => {
                let rest = trimmed
                    .strip_prefix("gens:")
                    .ok_or_else(|| syntax(indent + 1, "expected `gens:` declaration".into()))?;
                let mut declared: Vec<String> = Vec::new();
                for tok in rest.split_whitespace() {
                    if !valid_name(tok) {
                        let col = raw.find(tok).map_or(indent + 1, |p| p + 1);
                        return Err(syntax(col, format!("invalid generator name {tok:?}")));
                    }
                    if declared.iter().any(|n| n == tok) {
                        return Err(ParseError::DuplicateGenerator {
                            line,
                            name: tok.to_string(),
                        });
                    }
                    declared.push(tok.to_string());
                }
                names = Some(declared);
            }
            Some(declared) => {
                let rest = trimmed
                    .strip_prefix("rel:")
                    .ok_or_else(|| syntax(indent + 1, "expected `rel:` line".into()))?;
                let offset = indent + 4 + (rest.len() - rest.trim_start().len());
                relators.push(parse_word(rest.trim(), declared, line, offset)?);
            }
        }
    }
    let names = names.ok_or(ParseError::Syntax {
        line: 1,
        column: 1,
        message: "missing `gens:` declaration".into(),
    })?;
    Ok(Presentation::new(names, relators))
}

/// Parses a word body. `offset` is the 0-based column where `s` starts.
fn parse_word(s: &str, names: &[String], line: usize, offset: usize) -> Result<Word, ParseError> {
    let bytes = s.as_bytes();
    let mut letters = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let column = offset + i + 1;
        if c.is_whitespace() || c == '*' || c == '.' {
            i += 1;
            continue;
        }
        if c == '1' && (i + 1 == bytes.len() || !(bytes[i + 1] as char).is_ascii_alphanumeric()) {
            // A bare `1` denotes the empty word.
            i += 1;
            continue;
        }
        let (generator, mut exponent, consumed) = if c.is_ascii_uppercase() {
            let lower = c.to_ascii_lowercase().to_string();
            match names.iter().position(|n| *n == lower) {
                Some(g) => (g, -1i64, 1),
                None => {
                    return Err(ParseError::UndeclaredGenerator {
                        line,
                        column,
                        name: c.to_string(),
                    })
                }
            }
        } else if c.is_ascii_lowercase() {
            // Longest declared name that prefixes the remaining input.
            let best = names
                .iter()
                .enumerate()
                .filter(|(_, n)| s[i..].starts_with(n.as_str()))
                .max_by_key(|(_, n)| n.len());
            match best {
                Some((g, n)) => (g, 1i64, n.len()),
                None => {
                    let end = s[i..]
                        .find(|ch: char| !(ch.is_ascii_alphanumeric() || ch == '_'))
                        .map_or(s.len(), |p| i + p);
                    return Err(ParseError::UndeclaredGenerator {
                        line,
                        column,
                        name: s[i..end].to_string(),
                    });
                }
            }
        } else {
            return Err(ParseError::Syntax {
                line,
                column,
                message: format!("unexpected character {c:?}"),
            });
        };
        i += consumed;
        if i < bytes.len() && bytes[i] == b'^' {
            let start = i + 1;
            let mut end = start;
            if end < bytes.len() && (bytes[end] == b'-' || bytes[end] == b'+') {
                end += 1;
            }
            while end < bytes.len() && bytes[end].is_ascii_digit() {
                end += 1;
            }
            let power: i64 = s[start..end].parse().map_err(|_| ParseError::Syntax {
                line,
                column: offset + i + 1,
                message: "expected integer exponent after `^`".into(),
            })?;
            exponent *= power;
            i = end;
        }
        letters.extend(Word::power(generator, exponent).letters().iter().copied());
    }
    Ok(Word::from_letters(letters))
}
