//! The injection from unstable necklaces into Lyndon words with one fewer
//! zero, and the words that witness where it misses.
//!
//! An unstable necklace `w = a_1 ... a_n` has a prefix `w' = a_1 ... a_{n-1}`
//! that is a prenecklace but not a Lyndon word, so with `p = lyn(w')` it
//! factors as `w' = (a_1 ... a_p)^j a_1 ... a_i` with `j >= 1`, `1 <= i <= p`.
//! Let `z <= i` be the last position of a zero in the tail and `x = a_n`. The
//! map keeps the periodic head and rewrites the tail:
//!
//! ```text
//! z = i:  (a_1 ... a_p)^j a_1 ... a_{z-1} x
//! z < i:  (a_1 ... a_p)^j x a_i a_{i-1} ... a_{z+2} a_1 ... a_{z-1} a_{z+1}
//! ```
//!
//! dropping exactly the zero `a_z`.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::counting::{binary_lyndon, binary_necklaces};
use crate::error::{Error, Result};
use crate::generation::{classify, partition_necklaces, Stability};
use crate::word::{self, content_of, Content, Symbol, Word};

/// Corollary-style factorization of an unstable necklace. Positions are
/// 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct UnstableDecomposition {
    /// `lyn(a_1 ... a_{n-1})`.
    pub p: usize,
    /// Number of full copies of `a_1 ... a_p`.
    pub j: usize,
    /// Length of the trailing partial copy, in `1..=p`.
    pub i: usize,
    /// Last position `<= i` holding a zero.
    pub z: usize,
    /// The final symbol `a_n`.
    pub x: Symbol,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Branch {
    /// The tail ends in its last zero (`z = i`).
    #[serde(rename = "z=i")]
    ZeroAtEnd,
    /// Non-zero symbols follow the tail's last zero (`z < i`).
    #[serde(rename = "z<i")]
    ZeroBeforeEnd,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Branch::ZeroAtEnd => "z=i",
            Branch::ZeroBeforeEnd => "z<i",
        })
    }
}

impl UnstableDecomposition {
    pub fn branch(&self) -> Branch {
        if self.z == self.i {
            Branch::ZeroAtEnd
        } else {
            Branch::ZeroBeforeEnd
        }
    }
}

/// Factorizes an unstable necklace in which every symbol of the alphabet
/// occurs.
///
/// `p` is `lyn(w')`; `j` and `i` follow from `jp + i = n - 1` with
/// `1 <= i <= p`, so when `p` divides `n - 1` the tail is a full copy.
pub fn decompose(word: &Word) -> Result<UnstableDecomposition> {
    content_of(word, word.alphabet_size())?.require_positive()?;
    if classify(word)? == Stability::Stable {
        return Err(Error::StableNecklace(word.to_string()));
    }
    let a = word.symbols();
    let m = a.len() - 1;
    let p = word::lyn(&word.prefix(m))?;
    let (j, i) = if m.is_multiple_of(p) {
        (m / p - 1, p)
    } else {
        (m / p, m % p)
    };
    debug_assert!(j >= 1 && (1..=p).contains(&i));
    assert!(
        (0..m).all(|t| a[t] == a[t % p]),
        "prefix of {word} does not repeat its longest Lyndon prefix"
    );
    let z = (1..=i)
        .rev()
        .find(|&z| a[z - 1] == 0)
        .expect("necklace begins with 0");
    Ok(UnstableDecomposition {
        p,
        j,
        i,
        z,
        x: a[m],
    })
}

/// Applies the injection to an unstable necklace.
///
/// Panics if the image is not a Lyndon word or does not have exactly one
/// fewer zero; either would be a bug in the construction.
pub fn apply_f(word: &Word) -> Result<Word> {
    let dec = decompose(word)?;
    Ok(apply_decomposed(word, &dec))
}

/// Applies the injection given a decomposition from [`decompose`].
pub fn apply_decomposed(word: &Word, dec: &UnstableDecomposition) -> Word {
    let a = word.symbols();
    let UnstableDecomposition { p, j, i, z, x } = *dec;
    let mut image: Vec<Symbol> = Vec::with_capacity(a.len() - 1);
    image.extend_from_slice(&a[..j * p]);
    match dec.branch() {
        Branch::ZeroAtEnd => {
            image.extend_from_slice(&a[..z - 1]);
            image.push(x);
        }
        Branch::ZeroBeforeEnd => {
            image.push(x);
            // a_i, a_{i-1}, ..., a_{z+2}; empty when i = z + 1
            image.extend(a[z + 1..i].iter().rev());
            image.extend_from_slice(&a[..z - 1]);
            image.push(a[z]);
        }
    }
    let image = Word::new(image, word.alphabet_size()).expect("symbols come from the input");
    assert!(
        word::is_lyndon(&image).unwrap_or(false),
        "image {image} of {word} is not a Lyndon word"
    );
    let expected = word.content().decrement(0).expect("input has a zero");
    assert_eq!(
        image.content(),
        expected,
        "image {image} of {word} has the wrong content"
    );
    image
}

/// Images of a list of unstable necklaces.
pub fn image_of(unstable: &[Word]) -> BTreeSet<Word> {
    unstable
        .iter()
        .map(|w| apply_f(w).expect("input is an unstable necklace"))
        .collect()
}

/// `{ f(w) : w unstable with content c }`.
pub fn image_of_f(content: &Content) -> Result<BTreeSet<Word>> {
    let partition = partition_necklaces(content)?;
    Ok(image_of(&partition.unstable))
}

fn push_run(word: &mut Vec<Symbol>, symbol: usize, len: usize) {
    word.extend(std::iter::repeat_n(symbol as Symbol, len));
}

/// A Lyndon word of content `(n_0 - 1, n_1, ..., n_{k-1})` that no unstable
/// necklace of content `c` maps to. Only defined for `k > 2`.
pub fn nonsurjectivity_witness(content: &Content) -> Result<Word> {
    content.require_positive()?;
    let k = content.alphabet_size();
    if k == 2 {
        return Err(Error::NotApplicable(
            "the map can be onto for binary alphabets".to_string(),
        ));
    }
    let n = content.counts();
    let mut w = Vec::with_capacity(content.total() - 1);
    match n[0] {
        1 => {
            // no unstable necklaces at all; any target word will do
            for (s, &c) in n.iter().enumerate().skip(1) {
                push_run(&mut w, s, c);
            }
        }
        2 => {
            w.push(0);
            for s in (1..k).rev() {
                push_run(&mut w, s, n[s]);
            }
        }
        zeros if zeros % 2 == 1 => {
            let j = zeros / 2;
            push_run(&mut w, 0, j);
            for (s, &c) in n.iter().enumerate().take(k - 1).skip(1) {
                push_run(&mut w, s, c);
            }
            push_run(&mut w, k - 1, n[k - 1] - 1);
            push_run(&mut w, 0, j);
            w.push((k - 1) as Symbol);
        }
        zeros => {
            let j = zeros / 2;
            push_run(&mut w, 0, j);
            for s in (2..k).rev() {
                push_run(&mut w, s, n[s]);
            }
            push_run(&mut w, 1, n[1] - 1);
            push_run(&mut w, 0, j - 1);
            w.push(1);
        }
    }
    let w = Word::from_parts(w, k);
    assert!(
        word::is_lyndon(&w).unwrap_or(false),
        "witness {w} is not a Lyndon word"
    );
    debug_assert_eq!(Some(w.content()), content.decrement(0));
    Ok(w)
}

/// Binary Lyndon word `0 1^{a+o_1} 0 1^{a+o_2} ... 0 1^{a+o_m}` of length
/// `n - 1`, for the first offset template whose run length `a` comes out a
/// non-negative integer at least `floor`.
fn runs_template(n: usize, templates: &[&[usize]], floor: usize) -> Word {
    for offsets in templates {
        let zeros = offsets.len();
        let fixed = zeros + offsets.iter().sum::<usize>();
        let Some(free) = (n - 1).checked_sub(fixed) else {
            continue;
        };
        if free % zeros != 0 || free / zeros < floor {
            continue;
        }
        let a = free / zeros;
        let mut w = Vec::with_capacity(n - 1);
        for &o in offsets.iter() {
            w.push(0);
            push_run(&mut w, 1, a + o);
        }
        return Word::from_parts(w, 2);
    }
    unreachable!("exactly one template fits every length above 10")
}

/// A binary Lyndon word of length `n - 1` with `n - d - 1` zeros that lies
/// outside the image of the injection on necklaces of length `n`, density
/// `d`. Requires `n > 10` and `2 < n - d <= n / 2`.
pub fn strict_witness(n: usize, d: usize) -> Result<Word> {
    if d >= n {
        return Err(Error::DensityOutOfRange { n, d });
    }
    let z = n - d;
    if n <= 10 || z <= 2 || 2 * z > n {
        return Err(Error::NotApplicable(format!(
            "witnesses need n > 10 and 2 < n - d <= n/2, got n = {n}, d = {d}"
        )));
    }
    let w = match z {
        3 => runs_template(n, &[&[0, 1], &[0, 2]], 3),
        4 => runs_template(n, &[&[0, 0, 1], &[0, 1, 1], &[0, 1, 2]], 2),
        _ => {
            // 0 0 1^m 0 1 (0 1)^(z-4)
            let mut w = vec![0, 0];
            push_run(&mut w, 1, n - 2 * z + 3);
            w.extend_from_slice(&[0, 1]);
            for _ in 0..z - 4 {
                w.extend_from_slice(&[0, 1]);
            }
            Word::from_parts(w, 2)
        }
    };
    assert!(
        word::is_lyndon(&w).unwrap_or(false),
        "witness {w} is not a Lyndon word"
    );
    debug_assert_eq!(w.content().counts(), &[z - 1, d]);
    Ok(w)
}

/// A strict witness together with the density it was built for. Densities
/// above `n / 2` are served by the complementary density `n - d`, which has
/// the same counts on both sides of the bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StrictWitness {
    pub n: usize,
    pub d: usize,
    pub word: Word,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum EqualityStatus {
    Equality,
    Strict { witness: Option<StrictWitness> },
}

impl EqualityStatus {
    pub fn is_equality(&self) -> bool {
        matches!(self, EqualityStatus::Equality)
    }
}

/// Pairs with `2 < d < n - 2` where the binary bound is tight.
pub const SPORADIC_EQUALITIES: [(usize, usize); 6] =
    [(6, 3), (7, 3), (7, 4), (8, 4), (9, 3), (9, 6)];

/// Largest length for which [`equality_status`] re-checks its answer against
/// the counting formulas.
pub const CROSS_CHECK_MAX_N: usize = 64;

/// The classification of tight pairs on its own, without the formula
/// cross-check. Assumes `0 < d < n`.
pub fn is_tight(n: usize, d: usize) -> bool {
    let near_edge = d <= 2 || d + 2 >= n;
    (near_edge && (n, d) != (2, 1)) || SPORADIC_EQUALITIES.contains(&(n, d))
}

/// Whether `N(n, d) = L(n-1, d) + L(n-1, d-1)`.
///
/// Equality holds exactly for `d` in `{1, 2, n-2, n-1}` other than
/// `(n, d) = (2, 1)`, and for the six [`SPORADIC_EQUALITIES`]. For `n > 10`
/// strict answers carry a witness from [`strict_witness`].
pub fn equality_status(n: usize, d: usize) -> Result<EqualityStatus> {
    if d == 0 || d >= n {
        return Err(Error::DensityOutOfRange { n, d });
    }
    let equality = is_tight(n, d);
    if n <= CROSS_CHECK_MAX_N {
        let necklaces = binary_necklaces(n, d)?;
        let rhs = binary_lyndon(n - 1, d)? + binary_lyndon(n - 1, d - 1)?;
        assert_eq!(
            equality,
            necklaces == rhs,
            "classification of ({n}, {d}) disagrees with N = {necklaces}, rhs = {rhs}"
        );
    }
    if equality {
        return Ok(EqualityStatus::Equality);
    }
    let witness = if n > 10 {
        let d = if 2 * (n - d) <= n { d } else { n - d };
        Some(StrictWitness {
            n,
            d,
            word: strict_witness(n, d)?,
        })
    } else {
        None
    };
    Ok(EqualityStatus::Strict { witness })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str) -> Word {
        Word::parse_inferred(text).unwrap()
    }

    fn c(counts: &[usize]) -> Content {
        Content::new(counts.to_vec()).unwrap()
    }

    fn dec(p: usize, j: usize, i: usize, z: usize, x: Symbol) -> UnstableDecomposition {
        UnstableDecomposition { p, j, i, z, x }
    }

    #[test]
    fn decompose_examples() {
        assert_eq!(decompose(&w("0101")).unwrap(), dec(2, 1, 1, 1, 1));
        assert_eq!(decompose(&w("001001")).unwrap(), dec(3, 1, 2, 2, 1));
        assert_eq!(decompose(&w("01120112")).unwrap(), dec(4, 1, 3, 1, 2));
        assert_eq!(decompose(&w("010101")).unwrap(), dec(2, 2, 1, 1, 1));
        // p divides n - 1: the tail is a whole copy
        assert_eq!(decompose(&w("0010011")).unwrap(), dec(3, 1, 3, 2, 1));
    }

    #[test]
    fn decompose_rejects_bad_input() {
        assert_eq!(
            decompose(&w("0011")),
            Err(Error::StableNecklace("0011".into()))
        );
        assert_eq!(
            decompose(&w("0110")),
            Err(Error::NotNecklace("0110".into()))
        );
        assert_eq!(
            decompose(&Word::parse("0101", 3).unwrap()),
            Err(Error::ZeroCount { symbol: 2 })
        );
    }

    #[test]
    fn apply_f_examples() {
        assert_eq!(apply_f(&w("0101")).unwrap(), w("011"));
        assert_eq!(apply_f(&w("001001")).unwrap(), w("00101"));
        assert_eq!(apply_f(&w("01120112")).unwrap(), w("0112211"));
        assert_eq!(
            decompose(&w("01120112")).unwrap().branch(),
            Branch::ZeroBeforeEnd
        );
        assert_eq!(decompose(&w("0101")).unwrap().branch(), Branch::ZeroAtEnd);
    }

    #[test]
    fn reversed_segment_can_be_empty() {
        // i = z + 1: nothing between x and the copied prefix
        let word = w("01011");
        let d = decompose(&word).unwrap();
        assert_eq!(d, dec(2, 1, 2, 1, 1));
        assert_eq!(apply_f(&word).unwrap(), w("0111"));

        let word = w("0120122");
        let d = decompose(&word).unwrap();
        assert_eq!(d, dec(3, 1, 3, 1, 2));
        assert_eq!(apply_f(&word).unwrap(), w("012221"));
    }

    #[test]
    fn image_examples() {
        let texts =
            |set: BTreeSet<Word>| set.into_iter().map(|w| w.to_string()).collect::<Vec<_>>();
        // 001101 -> 00111 and 010101 -> 01011
        assert_eq!(texts(image_of_f(&c(&[3, 3])).unwrap()), ["00111", "01011"]);
        assert_eq!(apply_f(&w("010101")).unwrap(), w("01011"));
        assert_eq!(texts(image_of_f(&c(&[2, 2])).unwrap()), ["011"]);
        assert!(image_of_f(&c(&[1, 1])).unwrap().is_empty());
        assert_eq!(image_of_f(&c(&[0, 2])), Err(Error::ZeroCount { symbol: 0 }));
    }

    #[test]
    fn nonsurjectivity_examples() {
        assert_eq!(nonsurjectivity_witness(&c(&[2, 1, 1])).unwrap(), w("021"));
        assert_eq!(nonsurjectivity_witness(&c(&[3, 1, 1])).unwrap(), w("0102"));
        assert_eq!(nonsurjectivity_witness(&c(&[4, 1, 1])).unwrap(), w("00201"));
        assert_eq!(nonsurjectivity_witness(&c(&[1, 2, 1])).unwrap(), w("112"));
        assert!(matches!(
            nonsurjectivity_witness(&c(&[2, 2])),
            Err(Error::NotApplicable(_))
        ));
    }

    #[test]
    fn strict_witness_examples() {
        assert_eq!(strict_witness(12, 9).unwrap(), w("01111011111"));
        assert_eq!(strict_witness(11, 8).unwrap(), w("0111011111"));
        assert_eq!(strict_witness(13, 9).unwrap(), w("011011101111"));
        assert_eq!(strict_witness(11, 7).unwrap(), w("0110110111"));
        assert_eq!(strict_witness(12, 8).unwrap(), w("01101110111"));
        assert_eq!(strict_witness(14, 7).unwrap(), w("0011101010101"));
        assert!(matches!(
            strict_witness(10, 5),
            Err(Error::NotApplicable(_))
        ));
        assert!(matches!(
            strict_witness(12, 10),
            Err(Error::NotApplicable(_))
        ));
        assert!(matches!(
            strict_witness(12, 5),
            Err(Error::NotApplicable(_))
        ));
    }

    #[test]
    fn equality_examples() {
        assert_eq!(equality_status(6, 3).unwrap(), EqualityStatus::Equality);
        assert_eq!(
            equality_status(2, 1).unwrap(),
            EqualityStatus::Strict { witness: None }
        );
        match equality_status(12, 6).unwrap() {
            EqualityStatus::Strict { witness: Some(wit) } => {
                assert_eq!((wit.n, wit.d), (12, 6));
                assert_eq!(wit.word, strict_witness(12, 6).unwrap());
            }
            other => panic!("unexpected {other:?}"),
        }
        match equality_status(13, 4).unwrap() {
            EqualityStatus::Strict { witness: Some(wit) } => assert_eq!(wit.d, 9),
            other => panic!("unexpected {other:?}"),
        }
        assert!(equality_status(10, 4).unwrap() == EqualityStatus::Strict { witness: None });
        assert_eq!(
            equality_status(5, 5),
            Err(Error::DensityOutOfRange { n: 5, d: 5 })
        );
        assert_eq!(
            equality_status(5, 0),
            Err(Error::DensityOutOfRange { n: 5, d: 0 })
        );
    }
}
