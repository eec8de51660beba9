//! Brute-force reference sets built straight from the definitions.
//!
//! Every word of the content is listed and filtered with the rotation-scan
//! predicates in [`crate::word::naive`]. Nothing here shares code with the
//! linear-time predicates or the generator, so the two can check each other.
//! The oracle is bounded by a cap on the total length.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::word::{naive, Content, Symbol, Word};

pub const DEFAULT_CAP: usize = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Oracle {
    cap: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle { cap: DEFAULT_CAP }
    }
}

impl Oracle {
    pub fn with_cap(cap: usize) -> Self {
        Oracle { cap }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// All distinct arrangements of the content.
    pub fn words(&self, content: &Content) -> Result<BTreeSet<Word>> {
        let total = content.total();
        if total == 0 {
            return Err(Error::EmptyContent);
        }
        if total > self.cap {
            return Err(Error::OracleCap {
                total,
                cap: self.cap,
            });
        }
        let k = content.alphabet_size();
        let mut out = BTreeSet::new();
        let mut remaining = content.counts().to_vec();
        let mut current = Vec::with_capacity(total);
        arrange(k, &mut remaining, &mut current, total, &mut out);
        Ok(out)
    }

    pub fn necklaces(&self, content: &Content) -> Result<BTreeSet<Word>> {
        self.filter(content, |w| naive::is_necklace(w).expect("non-empty"))
    }

    pub fn lyndon(&self, content: &Content) -> Result<BTreeSet<Word>> {
        self.filter(content, |w| naive::is_lyndon(w).expect("non-empty"))
    }

    /// Words that are a prefix of some necklace. A prenecklace `w` of length
    /// `n` is always a prefix of the necklace `w (k-1)^m` for some `m <= n`,
    /// so only those extensions are tried.
    pub fn prenecklaces(&self, content: &Content) -> Result<BTreeSet<Word>> {
        self.filter(content, is_prefix_of_necklace)
    }

    /// The membership test behind [`Oracle::prenecklaces`].
    pub fn is_prenecklace(&self, word: &Word) -> bool {
        !word.is_empty() && is_prefix_of_necklace(word)
    }

    fn filter(&self, content: &Content, keep: impl Fn(&Word) -> bool) -> Result<BTreeSet<Word>> {
        Ok(self
            .words(content)?
            .into_iter()
            .filter(|w| keep(w))
            .collect())
    }
}

fn arrange(
    k: usize,
    remaining: &mut [usize],
    current: &mut Vec<Symbol>,
    total: usize,
    out: &mut BTreeSet<Word>,
) {
    if current.len() == total {
        out.insert(Word::new(current.clone(), k).expect("symbols below k"));
        return;
    }
    for s in 0..k {
        if remaining[s] > 0 {
            remaining[s] -= 1;
            current.push(s as Symbol);
            arrange(k, remaining, current, total, out);
            current.pop();
            remaining[s] += 1;
        }
    }
}

fn is_prefix_of_necklace(word: &Word) -> bool {
    let symbols = word.symbols();
    let n = symbols.len();
    // a rotation starting at a smaller symbol would beat every extension
    if symbols.iter().any(|&s| s < symbols[0]) {
        return false;
    }
    let top = (word.alphabet_size() - 1) as Symbol;
    let mut extended = symbols.to_vec();
    extended.extend(std::iter::repeat_n(top, n));
    (n..=2 * n).any(|len| naive::is_necklace_symbols(&extended[..len]))
}

pub fn brute_words(content: &Content) -> Result<BTreeSet<Word>> {
    Oracle::default().words(content)
}

pub fn brute_necklaces(content: &Content) -> Result<BTreeSet<Word>> {
    Oracle::default().necklaces(content)
}

pub fn brute_lyndon(content: &Content) -> Result<BTreeSet<Word>> {
    Oracle::default().lyndon(content)
}

pub fn brute_prenecklaces(content: &Content) -> Result<BTreeSet<Word>> {
    Oracle::default().prenecklaces(content)
}
