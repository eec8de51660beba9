//! Words over the alphabet `{0, 1, ..., k-1}`, their contents, and the
//! necklace / Lyndon / prenecklace predicates.
//!
//! Storage is 0-based: the symbol written `a_i` in the usual 1-based
//! notation lives at `symbols()[i - 1]`. Positions that are reported to
//! users (for example in [`crate::mapping::UnstableDecomposition`]) are
//! 1-based.
//!
//! Every predicate exists twice. The functions at the top of this module run
//! in linear time using the incremental prenecklace rule: while scanning
//! `a_1 ... a_m` with `p = lyn(a_1 ... a_{m-1})`, the word stays a prenecklace
//! iff `a_{m-p} <= a_m`, and `p` becomes `m` when the inequality is strict.
//! The [`naive`] module holds the definitional versions that compare whole
//! rotations; the oracle and the tests use those.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A single letter. Valid values lie in `0..k` for the word's alphabet size.
pub type Symbol = u32;

/// A finite word together with the size of the alphabet it is drawn from.
///
/// The derived ordering compares symbol sequences lexicographically (a proper
/// prefix sorts first); words over different alphabets only tie-break on `k`.
/// Use [`lex_compare`] when mismatched alphabets should be an error.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    symbols: Vec<Symbol>,
    k: usize,
}

impl Word {
    pub fn new(symbols: Vec<Symbol>, k: usize) -> Result<Self> {
        if k < 2 {
            return Err(Error::AlphabetTooSmall(k));
        }
        if let Some(&symbol) = symbols.iter().find(|&&s| s as usize >= k) {
            return Err(Error::SymbolOutOfRange { symbol, k });
        }
        Ok(Word { symbols, k })
    }

    /// Constructor for callers that already guarantee the invariants.
    pub(crate) fn from_parts(symbols: Vec<Symbol>, k: usize) -> Self {
        debug_assert!(k >= 2 && symbols.iter().all(|&s| (s as usize) < k));
        Word { symbols, k }
    }

    pub fn empty(k: usize) -> Result<Self> {
        Word::new(Vec::new(), k)
    }

    /// Parses the text encoding with an explicit alphabet size.
    ///
    /// For `k <= 10` a word is a string of decimal digits (`"01120112"`); for
    /// larger alphabets it is a comma-separated list (`"0,11,3"`). The comma
    /// form is accepted for any `k`.
    pub fn parse(text: &str, k: usize) -> Result<Self> {
        Word::new(parse_symbols(text)?, k)
    }

    /// Parses the text encoding and takes the smallest alphabet that holds
    /// every symbol (never less than 2).
    pub fn parse_inferred(text: &str) -> Result<Self> {
        let symbols = parse_symbols(text)?;
        let k = symbols
            .iter()
            .map(|&s| s as usize + 1)
            .max()
            .unwrap_or(0)
            .max(2);
        Word::new(symbols, k)
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn into_symbols(self) -> Vec<Symbol> {
        self.symbols
    }

    pub fn alphabet_size(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// The word `a_1 ... a_len`.
    pub fn prefix(&self, len: usize) -> Word {
        Word::from_parts(self.symbols[..len].to_vec(), self.k)
    }

    pub fn content(&self) -> Content {
        let mut counts = vec![0; self.k];
        for &s in &self.symbols {
            counts[s as usize] += 1;
        }
        Content { counts }
    }
}

fn parse_symbols(text: &str) -> Result<Vec<Symbol>> {
    let text = text.trim();
    let bad = |reason: &str| Error::Parse {
        input: text.to_string(),
        reason: reason.to_string(),
    };
    if text.contains(',') {
        text.split(',')
            .map(|part| {
                part.trim()
                    .parse::<Symbol>()
                    .map_err(|_| bad("expected comma-separated integers"))
            })
            .collect()
    } else {
        text.chars()
            .map(|c| c.to_digit(10).ok_or_else(|| bad("expected decimal digits")))
            .collect()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k <= 10 {
            for s in &self.symbols {
                write!(f, "{s}")?;
            }
        } else {
            for (i, s) in self.symbols.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{s}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self}; k={})", self.k)
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Symbol multiplicities `(n_0, ..., n_{k-1})`; the alphabet size is the
/// vector's length.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Content {
    counts: Vec<usize>,
}

impl Content {
    pub fn new(counts: Vec<usize>) -> Result<Self> {
        if counts.len() < 2 {
            return Err(Error::AlphabetTooSmall(counts.len()));
        }
        Ok(Content { counts })
    }

    /// Binary content of length `n` and density `d`, i.e. `(n - d, d)`.
    pub fn binary(n: usize, d: usize) -> Result<Self> {
        if d > n {
            return Err(Error::DensityOutOfRange { n, d });
        }
        Ok(Content {
            counts: vec![n - d, d],
        })
    }

    /// Parses `"3,2,1"`.
    pub fn parse(text: &str) -> Result<Self> {
        let counts = text
            .split(',')
            .map(|part| {
                part.trim().parse::<usize>().map_err(|_| Error::Parse {
                    input: text.to_string(),
                    reason: "expected comma-separated non-negative integers".to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Content::new(counts)
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn alphabet_size(&self) -> usize {
        self.counts.len()
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    pub fn count(&self, symbol: usize) -> usize {
        self.counts[symbol]
    }

    /// Index of the first symbol with count zero, if any.
    pub fn first_missing(&self) -> Option<usize> {
        self.counts.iter().position(|&c| c == 0)
    }

    pub fn all_positive(&self) -> bool {
        self.first_missing().is_none()
    }

    /// The content with one fewer occurrence of `symbol`, or `None` when that
    /// count is already zero.
    pub fn decrement(&self, symbol: usize) -> Option<Content> {
        let mut counts = self.counts.clone();
        counts[symbol] = counts[symbol].checked_sub(1)?;
        Some(Content { counts })
    }

    /// Requires every count to be positive, naming the first offender.
    pub(crate) fn require_positive(&self) -> Result<()> {
        match self.first_missing() {
            Some(symbol) => Err(Error::ZeroCount { symbol }),
            None => Ok(()),
        }
    }

    /// Every content over `k` symbols with total exactly `n`, in
    /// lexicographic order of the count vectors.
    pub fn all_with_total(k: usize, n: usize) -> Vec<Content> {
        fn fill(k: usize, left: usize, current: &mut Vec<usize>, out: &mut Vec<Content>) {
            if current.len() + 1 == k {
                current.push(left);
                out.push(Content {
                    counts: current.clone(),
                });
                current.pop();
                return;
            }
            for c in 0..=left {
                current.push(c);
                fill(k, left - c, current, out);
                current.pop();
            }
        }
        assert!(k >= 2, "alphabet size must be at least 2");
        let mut out = Vec::new();
        fill(k, n, &mut Vec::with_capacity(k), &mut out);
        out
    }
}

impl TryFrom<Vec<usize>> for Content {
    type Error = Error;

    fn try_from(counts: Vec<usize>) -> Result<Self> {
        Content::new(counts)
    }
}

impl From<Content> for Vec<usize> {
    fn from(content: Content) -> Self {
        content.counts
    }
}

impl fmt::Display for Content {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.counts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Content {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Content({self})")
    }
}

/// Multiplicity vector of `word` over an alphabet of size `k`.
pub fn content_of(word: &Word, k: usize) -> Result<Content> {
    if k < 2 {
        return Err(Error::AlphabetTooSmall(k));
    }
    let mut counts = vec![0; k];
    for &s in word.symbols() {
        let slot = counts
            .get_mut(s as usize)
            .ok_or(Error::SymbolOutOfRange { symbol: s, k })?;
        *slot += 1;
    }
    Ok(Content { counts })
}

pub fn lex_compare(a: &Word, b: &Word) -> Result<Ordering> {
    if a.k != b.k {
        return Err(Error::AlphabetMismatch {
            left: a.k,
            right: b.k,
        });
    }
    Ok(a.symbols.cmp(&b.symbols))
}

/// `a_{r+1} ... a_n a_1 ... a_r`. Offset 0 is the only valid offset of the
/// empty word.
pub fn rotate(word: &Word, offset: usize) -> Result<Word> {
    let len = word.len();
    if offset >= len.max(1) {
        return Err(Error::RotationOutOfRange { offset, len });
    }
    let mut symbols = word.symbols.clone();
    symbols.rotate_left(offset);
    Ok(Word::from_parts(symbols, word.k))
}

/// Outcome of the left-to-right prenecklace scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Scan {
    /// Length of the longest prefix that is a prenecklace.
    pub prenecklace_len: usize,
    /// `lyn` of that prefix.
    pub lyn: usize,
}

pub(crate) fn scan(symbols: &[Symbol]) -> Scan {
    debug_assert!(!symbols.is_empty());
    let mut p = 1;
    for m in 1..symbols.len() {
        match symbols[m - p].cmp(&symbols[m]) {
            Ordering::Equal => {}
            Ordering::Less => p = m + 1,
            Ordering::Greater => {
                return Scan {
                    prenecklace_len: m,
                    lyn: p,
                }
            }
        }
    }
    Scan {
        prenecklace_len: symbols.len(),
        lyn: p,
    }
}

fn non_empty(word: &Word) -> Result<&[Symbol]> {
    if word.is_empty() {
        Err(Error::EmptyWord)
    } else {
        Ok(word.symbols())
    }
}

/// Length of the longest prefix of `word` that is a Lyndon word.
///
/// Lyndon words are prenecklaces, so no Lyndon prefix can extend past the
/// point where the prenecklace scan fails; the value of `p` at that point is
/// the answer.
pub fn lyn(word: &Word) -> Result<usize> {
    Ok(scan(non_empty(word)?).lyn)
}

pub fn is_prenecklace(word: &Word) -> Result<bool> {
    let symbols = non_empty(word)?;
    Ok(scan(symbols).prenecklace_len == symbols.len())
}

/// A prenecklace of length `n` is a necklace iff `lyn` divides `n`.
pub fn is_necklace(word: &Word) -> Result<bool> {
    let symbols = non_empty(word)?;
    let s = scan(symbols);
    Ok(s.prenecklace_len == symbols.len() && symbols.len() % s.lyn == 0)
}

pub fn is_lyndon(word: &Word) -> Result<bool> {
    let symbols = non_empty(word)?;
    let s = scan(symbols);
    Ok(s.prenecklace_len == symbols.len() && s.lyn == symbols.len())
}

/// Definitional predicates that compare whole rotations. Quadratic, and kept
/// free of any shared code with the linear-time scan above.
pub mod naive {
    use super::*;

    fn rotation_cmp(symbols: &[Symbol], r: usize) -> Ordering {
        let n = symbols.len();
        (0..n)
            .map(|i| symbols[(i + r) % n].cmp(&symbols[i]))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal)
    }

    /// Rotation scan on a raw symbol slice; the empty slice counts as a
    /// necklace.
    pub fn is_necklace_symbols(symbols: &[Symbol]) -> bool {
        (1..symbols.len()).all(|r| rotation_cmp(symbols, r) != Ordering::Less)
    }

    /// True iff no rotation is smaller than the word itself.
    pub fn is_necklace(word: &Word) -> Result<bool> {
        Ok(is_necklace_symbols(non_empty(word)?))
    }

    /// True iff every non-trivial rotation is strictly greater.
    pub fn is_lyndon(word: &Word) -> Result<bool> {
        let symbols = non_empty(word)?;
        Ok((1..symbols.len()).all(|r| rotation_cmp(symbols, r) == Ordering::Greater))
    }

    /// Longest Lyndon prefix found by testing every prefix.
    pub fn lyn(word: &Word) -> Result<usize> {
        non_empty(word)?;
        Ok((1..=word.len())
            .rev()
            .find(|&len| is_lyndon(&word.prefix(len)).unwrap_or(false))
            .expect("a single symbol is a Lyndon word"))
    }

    /// The lexicographically least rotation.
    pub fn min_rotation(word: &Word) -> Word {
        (0..word.len().max(1))
            .map(|r| rotate(word, r).expect("offset in range"))
            .min()
            .expect("at least one rotation")
    }
}
