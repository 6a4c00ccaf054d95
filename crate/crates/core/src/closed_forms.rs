//! Closed-form shelling counts for complete graphs, complete bipartite graphs
//! and paths, plus a direct evaluation of the 0/1-sequence sum for
//! `K_{m,n}` that serves as an independent route to the bipartite formula.

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::bigmath::{binomial, catalan, factorial, nat_to_rat, rat_to_nat, Nat, Rat};
use crate::error::{Error, Result};

pub const DEFAULT_MAX_STANLEY_TERMS: u64 = 1_000_000;

fn exact_div(num: Nat, den: &Nat, what: &str) -> Nat {
    let (q, r) = num.div_rem(den);
    assert!(r.is_zero(), "{what}: division is not exact");
    q
}

/// `F(K_n) = 2^(n-2) * C(n,2)! / Catalan(n-1)`.
pub fn complete_graph_count(n: u64) -> Result<Nat> {
    if n < 2 {
        return Err(Error::Range(format!("complete graph formula needs n >= 2, got {n}")));
    }
    let num = (Nat::one() << (n - 2)) * factorial(n * (n - 1) / 2);
    Ok(exact_div(num, &catalan(n - 1), "complete graph count"))
}

/// `F(K_{m,n}) = m! n! (mn)! / (m+n-1)!`.
pub fn complete_bipartite_count(m: u64, n: u64) -> Result<Nat> {
    if m == 0 || n == 0 {
        return Err(Error::Range(format!(
            "complete bipartite formula needs both parts nonempty, got ({m}, {n})"
        )));
    }
    let num = factorial(m) * factorial(n) * factorial(m * n);
    Ok(exact_div(
        num,
        &factorial(m + n - 1),
        "complete bipartite count",
    ))
}

/// A 0/1 sequence with a fixed number of zeros and ones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroOneSequence(Vec<u8>);

impl ZeroOneSequence {
    pub fn new(bits: Vec<u8>) -> Result<Self> {
        if let Some(b) = bits.iter().find(|&&b| b > 1) {
            return Err(Error::Domain(format!("sequence entry {b} is not 0 or 1")));
        }
        Ok(ZeroOneSequence(bits))
    }

    pub fn bits(&self) -> &[u8] {
        &self.0
    }

    pub fn zeros(&self) -> usize {
        self.0.iter().filter(|&&b| b == 0).count()
    }

    pub fn ones(&self) -> usize {
        self.0.len() - self.zeros()
    }
}

/// `b_i = 1 + #{j <= i : a_j != a_i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BSequence(pub Vec<u64>);

pub fn b_sequence(alpha: &ZeroOneSequence) -> BSequence {
    let mut seen = [0u64; 2];
    let mut b = Vec::with_capacity(alpha.0.len());
    for &a in &alpha.0 {
        b.push(1 + seen[1 - a as usize]);
        seen[a as usize] += 1;
    }
    BSequence(b)
}

impl BSequence {
    /// `prod b_i / prod c_i` where `c_i = b_i + ... + b_last`.
    pub fn term(&self) -> Rat {
        let mut num = Nat::one();
        let mut den = Nat::one();
        let mut suffix = 0u64;
        for &b in self.0.iter().rev() {
            suffix += b;
            num *= b;
            den *= suffix;
        }
        nat_to_rat(&num) / nat_to_rat(&den)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StanleySum {
    pub count: Nat,
    /// The sum over sequences before the factorial prefactor.
    pub inner_sum: Rat,
    pub terms: u64,
}

/// `m! n! (mn-1)! * sum over alpha of prod b_i / prod c_i`, summed over every
/// sequence of `m-1` zeros and `n-1` ones.
pub fn stanley_sum_count(m: u64, n: u64) -> Result<StanleySum> {
    stanley_sum_count_with(m, n, DEFAULT_MAX_STANLEY_TERMS)
}

pub fn stanley_sum_count_with(m: u64, n: u64, max_terms: u64) -> Result<StanleySum> {
    if m == 0 || n == 0 {
        return Err(Error::Range(format!(
            "Stanley sum needs both parts nonempty, got ({m}, {n})"
        )));
    }
    let len = (m + n - 2) as usize;
    let ones = (n - 1) as usize;
    let terms = binomial(m + n - 2, n - 1);
    if terms > Nat::from(max_terms) {
        return Err(Error::GuardExceeded {
            what: "number of Stanley-sum terms",
            limit: max_terms,
            actual: u64::try_from(&terms).unwrap_or(u64::MAX),
        });
    }

    let mut inner = Rat::zero();
    let mut count_terms = 0u64;
    for_each_combination(len, ones, |positions| {
        let mut bits = vec![0u8; len];
        for &p in positions {
            bits[p] = 1;
        }
        inner += b_sequence(&ZeroOneSequence(bits)).term();
        count_terms += 1;
    });

    let total = nat_to_rat(&(factorial(m) * factorial(n) * factorial(m * n - 1))) * &inner;
    let count = rat_to_nat(&total).expect("Stanley sum total is not an integer");
    Ok(StanleySum {
        count,
        inner_sum: inner,
        terms: count_terms,
    })
}

/// Calls `f` with each `k`-subset of `0..len` in lexicographic order.
pub(crate) fn for_each_combination(len: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > len {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] < len - k + i {
                break;
            }
            if i == 0 {
                return;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// `F(path on n vertices) = 2^(n-2)`.
pub fn path_count(n: u64) -> Result<Nat> {
    if n < 2 {
        return Err(Error::Range(format!("path formula needs n >= 2, got {n}")));
    }
    Ok(Nat::one() << (n - 2))
}

/// Shellings of the path `v_1 ... v_n` rooted at `v_i`: `C(n-1, i-1)`.
pub fn rooted_path_count(n: u64, i: u64) -> Result<Nat> {
    if n < 2 || i == 0 || i > n {
        return Err(Error::Range(format!(
            "rooted path formula needs n >= 2 and 1 <= i <= n, got n = {n}, i = {i}"
        )));
    }
    Ok(binomial(n - 1, i - 1))
}
