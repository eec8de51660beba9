use necklaces::counting::{
    binary_lyndon, binary_necklaces, count_lyndon, count_necklaces, euler_phi, multinomial,
    BigCount,
};
use necklaces::oracle::Oracle;
use necklaces::verify::contents_up_to;
use necklaces::Content;
use num_bigint::BigUint;
use num_integer::Integer;

#[test]
fn density_symmetry() {
    for n in 1..=30 {
        for d in 0..=n {
            assert_eq!(
                binary_necklaces(n, d).unwrap(),
                binary_necklaces(n, n - d).unwrap(),
                "N({n},{d})"
            );
            assert_eq!(
                binary_lyndon(n, d).unwrap(),
                binary_lyndon(n, n - d).unwrap(),
                "L({n},{d})"
            );
        }
    }
}

#[test]
fn formulas_match_oracle_sizes() {
    let oracle = Oracle::default();
    for k in 2..=3 {
        for c in contents_up_to(k, 1, 10, false) {
            let words = oracle.words(&c).unwrap();
            assert_eq!(multinomial(&c), words.len() as u64, "{c}");
            assert_eq!(
                count_necklaces(&c).unwrap(),
                oracle.necklaces(&c).unwrap().len() as u64,
                "{c}"
            );
            assert_eq!(
                count_lyndon(&c).unwrap(),
                oracle.lyndon(&c).unwrap().len() as u64,
                "{c}"
            );
        }
    }
}

/// Unrestricted binary necklace count `(1/n) sum_{j | n} phi(j) 2^{n/j}`.
fn all_binary_necklaces(n: usize) -> BigUint {
    let sum: BigUint = (1..=n)
        .filter(|j| n.is_multiple_of(*j))
        .map(|j| euler_phi(j as u64).unwrap().into_biguint() * (BigUint::from(1u8) << (n / j)))
        .sum();
    let (q, r) = sum.div_rem(&BigUint::from(n));
    assert_eq!(r, BigUint::from(0u8));
    q
}

#[test]
fn densities_sum_to_all_necklaces() {
    for n in 1..=40 {
        let total: BigCount = (0..=n).map(|d| binary_necklaces(n, d).unwrap()).sum();
        assert_eq!(total.into_biguint(), all_binary_necklaces(n), "n = {n}");
    }
}

#[test]
fn lyndon_below_necklaces_with_equality_iff_coprime() {
    for k in 2..=4 {
        for c in contents_up_to(k, 1, 12, false) {
            let l = count_lyndon(&c).unwrap();
            let n = count_necklaces(&c).unwrap();
            let g = c.counts().iter().fold(0usize, |g, &x| g.gcd(&x));
            assert!(l <= n, "{c}");
            assert_eq!(l == n, g == 1, "{c}: L = {l}, N = {n}");
        }
    }
}

#[test]
fn pascal_bound_via_formulas() {
    for n in 2..=64 {
        for d in 1..n {
            let lhs = binary_necklaces(n, d).unwrap();
            let rhs = binary_lyndon(n - 1, d).unwrap() + binary_lyndon(n - 1, d - 1).unwrap();
            assert!(lhs <= rhs, "N({n},{d}) = {lhs} > {rhs}");
        }
    }
}

#[test]
fn zero_and_full_density_use_the_general_formula() {
    for n in 1..=20 {
        assert_eq!(binary_necklaces(n, 0).unwrap(), 1);
        assert_eq!(binary_necklaces(n, n).unwrap(), 1);
        assert_eq!(binary_lyndon(n, 0).unwrap(), (n == 1) as u64);
    }
    assert!(count_necklaces(&Content::new(vec![0, 0, 0]).unwrap()).is_err());
}
