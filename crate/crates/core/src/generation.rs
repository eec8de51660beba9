//! Lexicographic generation of fixed-content prenecklaces, necklaces and
//! Lyndon words.
//!
//! The generator is the classic depth-first prenecklace recursion, unrolled
//! into an explicit stack so it can be consumed lazily. Position `t` may take
//! any symbol `b` with `a_{t-p} <= b < k` that still has copies left, where
//! `p = lyn(a_1 ... a_{t-1})`; the new `lyn` is `p` when `b = a_{t-p}` and `t`
//! otherwise. At full length the final `p` decides membership: every leaf is
//! a prenecklace, `p | n` marks a necklace and `p = n` a Lyndon word.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::word::{self, Content, Symbol, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GenKind {
    Prenecklace,
    Necklace,
    Lyndon,
}

impl fmt::Display for GenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GenKind::Prenecklace => "prenecklace",
            GenKind::Necklace => "necklace",
            GenKind::Lyndon => "lyndon",
        })
    }
}

impl std::str::FromStr for GenKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "prenecklace" => Ok(GenKind::Prenecklace),
            "necklace" => Ok(GenKind::Necklace),
            "lyndon" => Ok(GenKind::Lyndon),
            _ => Err(Error::Parse {
                input: s.to_string(),
                reason: "expected one of prenecklace, necklace, lyndon".to_string(),
            }),
        }
    }
}

/// A lazy, strictly increasing stream of the words of one [`GenKind`] with
/// fixed content.
///
/// [`Generator::advance`] lends the current word without allocating; the
/// [`Iterator`] impl clones it into an owned [`Word`].
#[derive(Debug, Clone)]
pub struct Generator {
    kind: GenKind,
    n: usize,
    k: usize,
    /// `a[1..=n]` is the current word; `a[0] = 0` is a sentinel.
    a: Vec<Symbol>,
    /// `lyn[t] = lyn(a_1 ... a_t)`, with `lyn[0] = 1`.
    lyn: Vec<usize>,
    /// Smallest symbol still to try at each position.
    next: Vec<Symbol>,
    remaining: Vec<usize>,
    /// Position being filled; 0 once the search is exhausted.
    t: usize,
    /// Set while positions `1..=n` hold a word that was just reported.
    at_leaf: bool,
}

impl Generator {
    pub fn new(content: &Content, kind: GenKind) -> Result<Self> {
        let n = content.total();
        if n == 0 {
            return Err(Error::EmptyContent);
        }
        let k = content.alphabet_size();
        let mut next = vec![0; n + 2];
        next[1] = 0;
        Ok(Generator {
            kind,
            n,
            k,
            a: vec![0; n + 1],
            lyn: {
                let mut lyn = vec![0; n + 1];
                lyn[0] = 1;
                lyn
            },
            next,
            remaining: content.counts().to_vec(),
            t: 1,
            at_leaf: false,
        })
    }

    pub fn kind(&self) -> GenKind {
        self.kind
    }

    /// Moves to the next word and returns its symbols.
    pub fn advance(&mut self) -> Option<&[Symbol]> {
        if self.at_leaf {
            self.at_leaf = false;
            self.retreat();
        }
        while self.t > 0 {
            let t = self.t;
            if t > self.n {
                let p = self.lyn[self.n];
                let accept = match self.kind {
                    GenKind::Prenecklace => true,
                    GenKind::Necklace => self.n.is_multiple_of(p),
                    GenKind::Lyndon => p == self.n,
                };
                if accept {
                    self.at_leaf = true;
                    return Some(&self.a[1..]);
                }
                self.retreat();
                continue;
            }
            // next[t] starts at a_{t-p}, so every candidate keeps a prenecklace
            let from = self.next[t] as usize;
            match (from..self.k).find(|&b| self.remaining[b] > 0) {
                Some(b) => {
                    let b = b as Symbol;
                    let p = self.lyn[t - 1];
                    self.a[t] = b;
                    self.remaining[b as usize] -= 1;
                    self.lyn[t] = if b == self.a[t - p] { p } else { t };
                    self.next[t] = b + 1;
                    self.t = t + 1;
                    if self.t <= self.n {
                        self.next[self.t] = self.a[self.t - self.lyn[t]];
                    }
                }
                None => self.retreat(),
            }
        }
        None
    }

    /// Steps back one position and returns its symbol to the pool.
    fn retreat(&mut self) {
        self.t -= 1;
        if self.t > 0 {
            let s = self.a[self.t] as usize;
            self.remaining[s] += 1;
        }
    }
}

impl Iterator for Generator {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let k = self.k;
        self.advance()
            .map(|symbols| Word::from_parts(symbols.to_vec(), k))
    }
}

/// Lazily generates the words of `kind` with content `content` in increasing
/// lexicographic order.
pub fn generate(content: &Content, kind: GenKind) -> Result<Generator> {
    Generator::new(content, kind)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Stability {
    Stable,
    Unstable,
}

/// A necklace `a_1 ... a_n` is stable when `a_1 ... a_{n-1}` is a Lyndon word.
pub fn classify(word: &Word) -> Result<Stability> {
    if word.len() < 2 {
        return Err(Error::WordTooShort {
            len: word.len(),
            min: 2,
        });
    }
    if !word::is_necklace(word)? {
        return Err(Error::NotNecklace(word.to_string()));
    }
    Ok(if word::is_lyndon(&word.prefix(word.len() - 1))? {
        Stability::Stable
    } else {
        Stability::Unstable
    })
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Partition {
    pub stable: Vec<Word>,
    pub unstable: Vec<Word>,
}

/// Splits the necklaces with content `content` into stable and unstable
/// ones, each list in lexicographic order. Requires every count to be
/// positive.
pub fn partition_necklaces(content: &Content) -> Result<Partition> {
    content.require_positive()?;
    let mut partition = Partition::default();
    for necklace in generate(content, GenKind::Necklace)? {
        match classify(&necklace)? {
            Stability::Stable => partition.stable.push(necklace),
            Stability::Unstable => partition.unstable.push(necklace),
        }
    }
    Ok(partition)
}
