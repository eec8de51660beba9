//! Exhaustive verification sweeps over ranges of contents.
//!
//! Each sweep fans out over independent instances and collects failures in
//! instance order, so reports are deterministic.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::counting::{
    binary_lyndon, binary_necklaces, bound_rhs, count_lyndon, count_necklaces, multinomial,
    BigCount,
};
use crate::error::{Error, Result};
use crate::generation::{generate, partition_necklaces, GenKind};
use crate::mapping::{
    apply_f, image_of, is_tight, nonsurjectivity_witness, strict_witness, SPORADIC_EQUALITIES,
};
use crate::oracle::Oracle;
use crate::word::{self, naive, Content, Word};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub input: String,
    pub expected: String,
    pub actual: String,
}

impl Failure {
    fn new(
        input: impl fmt::Display,
        expected: impl fmt::Display,
        actual: impl fmt::Display,
    ) -> Self {
        Failure {
            input: input.to_string(),
            expected: expected.to_string(),
            actual: actual.to_string(),
        }
    }
}

/// Outcome of one sweep. It passes iff `failures` is empty.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub scope: String,
    pub instances: u64,
    pub failures: Vec<Failure>,
    #[serde(serialize_with = "seconds")]
    pub elapsed: Duration,
    /// Facts worth reporting alongside the verdict, such as the list of
    /// tight instances found by the equality sweep.
    pub notes: Vec<String>,
}

fn seconds<S: Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{}: {} ({} instances, {} failures, {:.3}s)",
            self.scope,
            if self.passed() { "pass" } else { "FAIL" },
            self.instances,
            self.failures.len(),
            self.elapsed.as_secs_f64()
        )?;
        for note in &self.notes {
            writeln!(f, "  note: {note}")?;
        }
        for failure in &self.failures {
            writeln!(
                f,
                "  failure: {}: expected {}, got {}",
                failure.input, failure.expected, failure.actual
            )?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Bound,
    Injectivity,
    Equality,
    Witnesses,
    Oracle,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "bound" => Suite::Bound,
            "injectivity" => Suite::Injectivity,
            "equality" => Suite::Equality,
            "witnesses" => Suite::Witnesses,
            "oracle" => Suite::Oracle,
            _ => {
                return Err(Error::Parse {
                    input: s.to_string(),
                    reason: "expected one of bound, injectivity, equality, witnesses, oracle"
                        .to_string(),
                })
            }
        })
    }
}

/// Contents over `k` symbols with total in `min_n..=max_n`, optionally only
/// those in which every symbol occurs.
pub fn contents_up_to(k: usize, min_n: usize, max_n: usize, all_positive: bool) -> Vec<Content> {
    (min_n..=max_n)
        .flat_map(|n| Content::all_with_total(k, n))
        .filter(|c| !all_positive || c.all_positive())
        .collect()
}

/// Runs `check` on every instance in parallel and assembles the report.
fn sweep<T: Sync>(
    scope: String,
    instances: &[T],
    check: impl Fn(&T) -> Vec<Failure> + Sync + Send,
) -> VerificationReport {
    let start = Instant::now();
    let failures: Vec<Failure> = instances.par_iter().map(check).collect::<Vec<_>>().concat();
    VerificationReport {
        scope,
        instances: instances.len() as u64,
        failures,
        elapsed: start.elapsed(),
        notes: Vec::new(),
    }
}

/// `N <= rhs` for all binary `(n, d)` with `0 < d < n <= max_n` when `k = 2`;
/// for `k > 2`, strict inequality on every content with positive counts.
pub fn verify_bound(max_n: usize, k: usize) -> Result<VerificationReport> {
    if k < 2 {
        return Err(Error::AlphabetTooSmall(k));
    }
    if k == 2 {
        let pairs: Vec<(usize, usize)> = (2..=max_n)
            .flat_map(|n| (1..n).map(move |d| (n, d)))
            .collect();
        return Ok(sweep(format!("bound k=2 n<={max_n}"), &pairs, |&(n, d)| {
            let necklaces = binary_necklaces(n, d).expect("n >= 1");
            let rhs = binary_lyndon(n - 1, d).expect("n >= 2")
                + binary_lyndon(n - 1, d - 1).expect("n >= 2");
            if necklaces <= rhs {
                vec![]
            } else {
                vec![Failure::new(
                    format!("n={n} d={d}"),
                    format!("N <= {rhs}"),
                    format!("N = {necklaces}"),
                )]
            }
        }));
    }
    let contents = contents_up_to(k, k, max_n, true);
    Ok(sweep(format!("bound k={k} n<={max_n}"), &contents, |c| {
        let necklaces = count_necklaces(c).expect("non-empty");
        let rhs = bound_rhs(c).expect("positive counts");
        if necklaces < rhs {
            vec![]
        } else {
            vec![Failure::new(
                c,
                format!("N < {rhs}"),
                format!("N = {necklaces}"),
            )]
        }
    }))
}

/// `sum_{i >= 1} L_k(..., n_i - 1, ...)`, the predicted number of stable
/// necklaces.
pub fn stable_count_formula(content: &Content) -> Result<BigCount> {
    content.require_positive()?;
    (1..content.alphabet_size())
        .map(|i| count_lyndon(&content.decrement(i).expect("count is positive")))
        .sum()
}

/// Per content with positive counts: the stable/unstable split matches the
/// formulas, the map is injective into the right Lyndon set, and for `k > 2`
/// it misses part of that set.
pub fn verify_injectivity(max_n: usize, k: usize) -> Result<VerificationReport> {
    if k < 2 {
        return Err(Error::AlphabetTooSmall(k));
    }
    let contents = contents_up_to(k, k, max_n, true);
    Ok(sweep(
        format!("injectivity k={k} n<={max_n}"),
        &contents,
        |c| check_injectivity(c).unwrap_or_else(|e| vec![Failure::new(c, "no error", e)]),
    ))
}

fn check_injectivity(c: &Content) -> Result<Vec<Failure>> {
    let mut failures = Vec::new();
    let partition = partition_necklaces(c)?;
    let (stable, unstable) = (partition.stable.len(), partition.unstable.len());

    let stable_expected = stable_count_formula(c)?;
    if stable_expected != stable as u64 {
        failures.push(Failure::new(
            c,
            format!("|S| = {stable_expected}"),
            format!("|S| = {stable}"),
        ));
    }
    let necklaces = count_necklaces(c)?;
    if necklaces != (stable + unstable) as u64 {
        failures.push(Failure::new(
            c,
            format!("|S|+|U| = {necklaces}"),
            format!("{}", stable + unstable),
        ));
    }

    let target = c.decrement(0).expect("positive counts");
    let image = image_of(&partition.unstable);
    if image.len() != unstable {
        failures.push(Failure::new(
            c,
            format!("|f(U)| = |U| = {unstable}"),
            format!("|f(U)| = {}", image.len()),
        ));
    }
    let lyndon: BTreeSet<Word> = generate(&target, GenKind::Lyndon)?.collect();
    if let Some(outside) = image.iter().find(|w| !lyndon.contains(*w)) {
        failures.push(Failure::new(
            c,
            format!("image inside L({target})"),
            format!("{outside} outside"),
        ));
    }
    let target_count = count_lyndon(&target)?;
    if c.alphabet_size() > 2 && BigCount::from(image.len()) >= target_count {
        failures.push(Failure::new(
            c,
            format!("|f(U)| < {target_count}"),
            format!("|f(U)| = {}", image.len()),
        ));
    }
    Ok(failures)
}

/// Whether the binary bound is tight, from the classification alone.
///
/// Compares [`is_tight`] against the counting formulas for every
/// `0 < d < n <= max_n`, and checks that the tight pairs strictly inside
/// `2 < d < n - 2` are exactly the sporadic ones.
pub fn verify_equality(max_n: usize) -> VerificationReport {
    let pairs: Vec<(usize, usize)> = (2..=max_n)
        .flat_map(|n| (1..n).map(move |d| (n, d)))
        .collect();
    let mut report = sweep(format!("equality n<={max_n}"), &pairs, |&(n, d)| {
        let necklaces = binary_necklaces(n, d).expect("n >= 1");
        let rhs =
            binary_lyndon(n - 1, d).expect("n >= 2") + binary_lyndon(n - 1, d - 1).expect("n >= 2");
        let by_formula = necklaces == rhs;
        let classified = is_tight(n, d);
        if by_formula == classified {
            vec![]
        } else {
            vec![Failure::new(
                format!("n={n} d={d}"),
                format!("equality={by_formula} (N={necklaces}, rhs={rhs})"),
                format!("equality={classified}"),
            )]
        }
    });
    let interior: Vec<(usize, usize)> = pairs
        .iter()
        .copied()
        .filter(|&(n, d)| 2 < d && d + 2 < n)
        .filter(|&(n, d)| {
            binary_necklaces(n, d).expect("n >= 1")
                == binary_lyndon(n - 1, d).expect("n >= 2")
                    + binary_lyndon(n - 1, d - 1).expect("n >= 2")
        })
        .collect();
    let expected: Vec<(usize, usize)> = SPORADIC_EQUALITIES
        .iter()
        .copied()
        .filter(|&(n, _)| n <= max_n)
        .collect();
    if interior != expected {
        report.failures.push(Failure::new(
            "tight pairs with 2 < d < n-2",
            format!("{expected:?}"),
            format!("{interior:?}"),
        ));
    }
    report
        .notes
        .push(format!("tight pairs with 2 < d < n-2: {interior:?}"));
    report
}

/// The set `{ f(w) }` over unstable necklaces of `content`, with the domain
/// taken from the brute-force oracle when the content is within its cap.
fn exhaustive_image(content: &Content, oracle: &Oracle) -> Result<BTreeSet<Word>> {
    let necklaces: Vec<Word> = if content.total() <= oracle.cap() {
        oracle.necklaces(content)?.into_iter().collect()
    } else {
        generate(content, GenKind::Necklace)?.collect()
    };
    let unstable: Vec<Word> = necklaces
        .into_iter()
        .filter(|w| !naive::is_lyndon(&w.prefix(w.len() - 1)).expect("n >= 2"))
        .collect();
    unstable.iter().map(apply_f).collect()
}

fn check_witness(
    input: impl fmt::Display,
    witness: &Word,
    target: &Content,
    image: &BTreeSet<Word>,
) -> Vec<Failure> {
    let mut failures = Vec::new();
    if !naive::is_lyndon(witness).unwrap_or(false) || !word::is_lyndon(witness).unwrap_or(false) {
        failures.push(Failure::new(
            &input,
            "Lyndon witness",
            format!("{witness} is not Lyndon"),
        ));
    }
    if &witness.content() != target {
        failures.push(Failure::new(
            &input,
            format!("content {target}"),
            format!("{witness} has {}", witness.content()),
        ));
    }
    if image.contains(witness) {
        failures.push(Failure::new(
            &input,
            "witness outside the image",
            format!("{witness} is an image"),
        ));
    }
    failures
}

/// Non-surjectivity witnesses for ternary contents with `n <= ternary_max_n`
/// and strict witnesses for binary `(n, d)` with `11 <= n <= binary_max_n`,
/// each checked against the exhaustively computed image.
pub fn verify_witnesses(
    ternary_max_n: usize,
    binary_max_n: usize,
    oracle: &Oracle,
) -> VerificationReport {
    #[derive(Debug)]
    enum Instance {
        Ternary(Content),
        Binary(usize, usize),
    }
    let mut instances: Vec<Instance> = contents_up_to(3, 3, ternary_max_n, true)
        .into_iter()
        .map(Instance::Ternary)
        .collect();
    for n in 11..=binary_max_n {
        for d in 1..n {
            let z = n - d;
            if z > 2 && 2 * z <= n {
                instances.push(Instance::Binary(n, d));
            }
        }
    }
    sweep(
        format!("witnesses k=3 n<={ternary_max_n}, k=2 11<=n<={binary_max_n}"),
        &instances,
        |instance| match instance {
            Instance::Ternary(c) => {
                let target = c.decrement(0).expect("positive counts");
                match (nonsurjectivity_witness(c), exhaustive_image(c, oracle)) {
                    (Ok(w), Ok(image)) => check_witness(c, &w, &target, &image),
                    (Err(e), _) | (_, Err(e)) => vec![Failure::new(c, "witness", e)],
                }
            }
            &Instance::Binary(n, d) => {
                let c = Content::binary(n, d).expect("d < n");
                let target = c.decrement(0).expect("z > 2");
                let input = format!("n={n} d={d}");
                match (strict_witness(n, d), exhaustive_image(&c, oracle)) {
                    (Ok(w), Ok(image)) => check_witness(input, &w, &target, &image),
                    (Err(e), _) | (_, Err(e)) => vec![Failure::new(input, "witness", e)],
                }
            }
        },
    )
}

/// Generation, counting and the brute-force oracle agree on every content
/// over `k` symbols with total `1..=max_n`, for all three kinds of word.
pub fn verify_oracle(max_n: usize, k: usize, oracle: &Oracle) -> Result<VerificationReport> {
    if k < 2 {
        return Err(Error::AlphabetTooSmall(k));
    }
    if max_n > oracle.cap() {
        return Err(Error::OracleCap {
            total: max_n,
            cap: oracle.cap(),
        });
    }
    let contents = contents_up_to(k, 1, max_n, false);
    Ok(sweep(format!("oracle k={k} n<={max_n}"), &contents, |c| {
        check_oracle(c, oracle).unwrap_or_else(|e| vec![Failure::new(c, "no error", e)])
    }))
}

fn check_oracle(c: &Content, oracle: &Oracle) -> Result<Vec<Failure>> {
    let mut failures = Vec::new();
    let words = oracle.words(c)?;
    let multi = multinomial(c);
    if multi != words.len() as u64 {
        failures.push(Failure::new(
            c,
            format!("{multi} arrangements"),
            words.len(),
        ));
    }
    let mut necklaces = BTreeSet::new();
    let mut lyndon = BTreeSet::new();
    let mut prenecklaces = BTreeSet::new();
    for w in &words {
        if oracle.is_prenecklace(w) {
            prenecklaces.insert(w.clone());
        }
        if naive::is_necklace(w)? {
            necklaces.insert(w.clone());
            if naive::is_lyndon(w)? {
                lyndon.insert(w.clone());
            }
        }
    }
    for (kind, expected) in [
        (GenKind::Prenecklace, &prenecklaces),
        (GenKind::Necklace, &necklaces),
        (GenKind::Lyndon, &lyndon),
    ] {
        let generated: Vec<Word> = generate(c, kind)?.collect();
        if !generated.windows(2).all(|pair| pair[0] < pair[1]) {
            failures.push(Failure::new(
                format!("{c} {kind}"),
                "strictly increasing stream",
                "out of order",
            ));
        }
        let generated: BTreeSet<Word> = generated.into_iter().collect();
        if &generated != expected {
            failures.push(Failure::new(
                format!("{c} {kind}"),
                format!("{} oracle words", expected.len()),
                format!(
                    "{} generated, {} differ",
                    generated.len(),
                    generated.symmetric_difference(expected).count()
                ),
            ));
        }
    }
    let n_formula = count_necklaces(c)?;
    if n_formula != necklaces.len() as u64 {
        failures.push(Failure::new(format!("{c} N"), n_formula, necklaces.len()));
    }
    let l_formula = count_lyndon(c)?;
    if l_formula != lyndon.len() as u64 {
        failures.push(Failure::new(format!("{c} L"), l_formula, lyndon.len()));
    }
    Ok(failures)
}
