//! Exact checks of the binomial and Gamma identities behind the complete
//! bipartite formula, and of three small factorial inequalities used by the
//! tree bounds.
//!
//! Every check evaluates both sides in exact rational arithmetic (or as sums
//! of Gamma products that must cancel) for one parameter tuple. The `*_grid`
//! functions sweep the fixed parameter ranges used by `verify identities`.

use std::fmt;

use num_traits::{One, Zero};

use crate::bigmath::{
    binomial, factorial, gbinom_int_diff, gbinom_lower_int, nat_to_rat, range_product, rat,
    rat_from_int, GammaProduct, GammaSum, Nat, Rat, ReducedSum,
};
use crate::closed_forms::{complete_bipartite_count, for_each_combination, stanley_sum_count};
use crate::error::{Error, Result};
use crate::verify::Check;

pub const MAX_THEOREM_TUPLES: u64 = 100_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Side {
    Rational(Rat),
    /// A sum of Gamma products that did not reduce to a rational.
    Gamma(ReducedSum),
}

impl Side {
    fn from_sum(sum: &GammaSum) -> Side {
        let r = sum.reduce();
        if r.irreducible.is_empty() {
            Side::Rational(r.rational)
        } else {
            Side::Gamma(r)
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Rational(r) => write!(f, "{r}"),
            Side::Gamma(s) => {
                write!(f, "{}", s.rational)?;
                for t in &s.irreducible {
                    write!(f, " + {t}")?;
                }
                Ok(())
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCase {
    pub name: &'static str,
    pub params: Vec<(&'static str, Rat)>,
    pub lhs: Side,
    pub rhs: Side,
    pub holds: bool,
}

impl IdentityCase {
    fn rational(name: &'static str, params: Vec<(&'static str, Rat)>, lhs: Rat, rhs: Rat) -> Self {
        IdentityCase {
            name,
            params,
            holds: lhs == rhs,
            lhs: Side::Rational(lhs),
            rhs: Side::Rational(rhs),
        }
    }

    pub fn lhs_rational(&self) -> Option<&Rat> {
        match &self.lhs {
            Side::Rational(r) => Some(r),
            Side::Gamma(_) => None,
        }
    }
}

impl fmt::Display for IdentityCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(", self.name)?;
        for (i, (k, v)) in self.params.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{k}={v}")?;
        }
        write!(f, "): lhs {} rhs {}", self.lhs, self.rhs)
    }
}

fn ri(x: u64) -> Rat {
    rat_from_int(x as i64)
}

fn nat_rat(x: Nat) -> Rat {
    nat_to_rat(&x)
}

fn pre(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Range(msg()))
    }
}

/// `sum_{j=x}^{w-z} C(j,y) C(w-j,z)` against
/// `sum_{i=max(0,x+y+z-w)}^{y} C(x,i) C(w-x+1, z+y-i+1)` for `w - z` a
/// positive integer at least `x`.
pub fn verify_story(x: u64, y: u64, z: &Rat, w: &Rat) -> Result<IdentityCase> {
    let zp = w - z;
    pre(x >= 1 && y >= 1, || format!("story needs x, y >= 1, got {x}, {y}"))?;
    pre(*z > Rat::zero(), || format!("story needs z > 0, got {z}"))?;
    pre(zp.is_integer() && zp >= ri(x), || {
        format!("story needs w - z to be an integer >= x, got {zp}")
    })?;
    let zp: u64 = zp.to_integer().try_into().expect("w - z fits in u64");

    let mut lhs = Rat::zero();
    for j in x..=zp {
        lhs += gbinom_lower_int(&ri(j), y) * gbinom_int_diff(&(w - ri(j)), z)?;
    }
    let mut rhs = Rat::zero();
    for i in (x + y).saturating_sub(zp)..=y {
        let lower = z + ri(y) - ri(i) + Rat::one();
        rhs += nat_rat(binomial(x, i)) * gbinom_int_diff(&(w - ri(x) + Rat::one()), &lower)?;
    }
    Ok(IdentityCase::rational(
        "story",
        vec![("x", ri(x)), ("y", ri(y)), ("z", z.clone()), ("w", w.clone())],
        lhs,
        rhs,
    ))
}

/// The same identity with `z' = w - z` fixed and both sides written as
/// polynomials in `w`: `sum_{j=x}^{z'} C(j,y) C(w-j, z'-j)` against
/// `sum_{i} C(x,i) C(w-x+1, z'-x-y+i)`. Holds for every rational `w`.
pub fn verify_story_polynomial(x: u64, y: u64, zp: u64, w: &Rat) -> Result<IdentityCase> {
    pre(x >= 1 && y >= 1 && zp >= x, || {
        format!("story polynomial needs x, y >= 1 and z' >= x, got {x}, {y}, {zp}")
    })?;
    let mut lhs = Rat::zero();
    for j in x..=zp {
        lhs += nat_rat(binomial(j, y)) * gbinom_lower_int(&(w - ri(j)), zp - j);
    }
    let mut rhs = Rat::zero();
    for i in (x + y).saturating_sub(zp)..=y {
        let lower = zp + i - x - y;
        rhs += nat_rat(binomial(x, i)) * gbinom_lower_int(&(w - ri(x) + Rat::one()), lower);
    }
    Ok(IdentityCase::rational(
        "story_polynomial",
        vec![("x", ri(x)), ("y", ri(y)), ("z'", ri(zp)), ("w", w.clone())],
        lhs,
        rhs,
    ))
}

fn check_mnks(m: u64, n: u64, k: u64, s: u64) -> Result<()> {
    pre(m >= 1 && 1 <= k && k < n && s + k + 1 < m + n, || {
        format!("needs m >= 1, 1 <= k < n, 0 <= s < m+n-k-1; got m={m}, n={n}, k={k}, s={s}")
    })
}

fn mnks_params(m: u64, n: u64, k: u64, s: u64) -> Vec<(&'static str, Rat)> {
    vec![("m", ri(m)), ("n", ri(n)), ("k", ri(k)), ("s", ri(s))]
}

/// Right side of the binomial-sum identity:
/// `m/(m+n-k) (s+2)...(s+k+1) C(mn/(n-k)+n-k-s-2, mk/(n-k))`.
fn binomial_sum_rhs(m: u64, n: u64, k: u64, s: u64) -> Result<Rat> {
    let q = n - k;
    let top = rat((m * n) as i64, q as i64) + ri(q) - ri(s) - ri(2);
    let lower = rat((m * k) as i64, q as i64);
    Ok(rat(m as i64, (m + n - k) as i64)
        * nat_rat(range_product(s + 2, s + k + 1))
        * gbinom_int_diff(&top, &lower)?)
}

/// `sum_{t=s+1}^{m+n-k-1} (t-n+k+1)(t+2)...(t+k) C(mn/(n-k)+n-k-t-2, mk/(n-k)-1)`
/// against [`binomial_sum_rhs`].
pub fn verify_binomial_sum(m: u64, n: u64, k: u64, s: u64) -> Result<IdentityCase> {
    check_mnks(m, n, k, s)?;
    let q = n - k;
    let lower = rat((m * k) as i64, q as i64) - Rat::one();
    let mut lhs = Rat::zero();
    for t in s + 1..=m + n - k - 1 {
        let lead = ri(t + k + 1) - ri(n);
        let top = rat((m * n) as i64, q as i64) + ri(q) - ri(t) - ri(2);
        lhs += lead * nat_rat(range_product(t + 2, t + k)) * gbinom_int_diff(&top, &lower)?;
    }
    Ok(IdentityCase::rational(
        "binomial_sum",
        mnks_params(m, n, k, s),
        lhs,
        binomial_sum_rhs(m, n, k, s)?,
    ))
}

/// `(t-n+k+1)(t+2)...(t+k) = k! [C(t+k,k) + (k-n)/k C(t+k,k-1)]`.
pub fn verify_split_identity(n: u64, k: u64, t: u64) -> Result<IdentityCase> {
    pre(k >= 1, || "split identity needs k >= 1".into())?;
    let lhs = (ri(t + k + 1) - ri(n)) * nat_rat(range_product(t + 2, t + k));
    let rhs = nat_rat(factorial(k))
        * (nat_rat(binomial(t + k, k))
            + (ri(k) - ri(n)) / ri(k) * nat_rat(binomial(t + k, k - 1)));
    Ok(IdentityCase::rational(
        "split",
        vec![("n", ri(n)), ("k", ri(k)), ("t", ri(t))],
        lhs,
        rhs,
    ))
}

/// Lower summation limits `(i0, i1)` of the induction lemma.
pub fn induction_lemma_limits(m: u64, n: u64, k: u64, s: u64) -> (u64, u64) {
    (
        (s + 2 * k + 2).saturating_sub(m + n),
        (s + 2 * k + 1).saturating_sub(m + n),
    )
}

/// With `A = mn/(n-k)+n-k-s-2` and `B = mk/(n-k)+k`:
/// `sum_{i=i0}^{l} C(s+k+1,i) C(A,B-i) + (k-n)/k sum_{i=i1+1}^{l} C(s+k+1,i-1) C(A,B-i)`
/// against `(B-l)/B C(s+k+1,l) C(A,B-l)`.
pub fn verify_induction_lemma(m: u64, n: u64, k: u64, s: u64, l: u64) -> Result<IdentityCase> {
    check_mnks(m, n, k, s)?;
    let (i0, i1) = induction_lemma_limits(m, n, k, s);
    pre(i0 <= l && l <= k, || format!("induction lemma needs {i0} <= l <= {k}, got {l}"))?;
    let q = n - k;
    let a = rat((m * n) as i64, q as i64) + ri(q) - ri(s) - ri(2);
    let b = rat((m * k) as i64, q as i64) + ri(k);
    let c = |i: u64| -> Result<Rat> { gbinom_int_diff(&a, &(&b - ri(i))) };

    let mut lhs = Rat::zero();
    for i in i0..=l {
        lhs += nat_rat(binomial(s + k + 1, i)) * c(i)?;
    }
    let mut second = Rat::zero();
    for i in i1 + 1..=l {
        second += nat_rat(binomial(s + k + 1, i - 1)) * c(i)?;
    }
    lhs += (ri(k) - ri(n)) / ri(k) * second;
    let rhs = (&b - ri(l)) / &b * nat_rat(binomial(s + k + 1, l)) * c(l)?;

    let mut params = mnks_params(m, n, k, s);
    params.push(("l", ri(l)));
    Ok(IdentityCase::rational("induction_lemma", params, lhs, rhs))
}

/// `R_j = (r_j-j+1) Gamma(mn/j+j-1-r_j) / Gamma(mn/(j+1)+j-r_j)`, multiplied
/// into `acc` for `j = 1..=upto`. `r` is 1-based: `r[j-1] = r_j`.
fn push_r_factors(mut acc: GammaProduct, m: u64, n: u64, r: &[u64], upto: u64) -> Result<GammaProduct> {
    let mn = (m * n) as i64;
    for j in 1..=upto {
        let rj = r[(j - 1) as usize];
        acc = acc
            .scale(&ri(rj + 1 - j))
            .gamma(rat(mn, j as i64) + ri(j) - ri(1) - ri(rj))?
            .over_gamma(rat(mn, (j + 1) as i64) + ri(j) - ri(rj))?;
    }
    Ok(acc)
}

fn guard_tuples(m: u64, n: u64) -> Result<()> {
    let tuples = binomial(m + n - 2, n - 1);
    if tuples > Nat::from(MAX_THEOREM_TUPLES) {
        return Err(Error::GuardExceeded {
            what: "index tuples in the induction identity",
            limit: MAX_THEOREM_TUPLES,
            actual: u64::try_from(&tuples).unwrap_or(u64::MAX),
        });
    }
    Ok(())
}

/// `1/(n-1)! sum_{1 <= r_1 < ... < r_{n-1} <= m+n-2} prod_j R_j` as a sum of
/// Gamma products.
pub fn induction_theorem_lhs(m: u64, n: u64) -> Result<GammaSum> {
    pre(m >= 1 && n >= 2, || format!("needs m >= 1, n >= 2, got {m}, {n}"))?;
    guard_tuples(m, n)?;
    let prefactor = nat_rat(factorial(n - 1)).recip();
    let mut sum = GammaSum::default();
    let mut err = None;
    for_each_combination((m + n - 2) as usize, (n - 1) as usize, |pos| {
        let r: Vec<u64> = pos.iter().map(|&p| p as u64 + 1).collect();
        match push_r_factors(GammaProduct::new(prefactor.clone()), m, n, &r, n - 1) {
            Ok(t) => sum.push(t),
            Err(e) => err = Some(e),
        }
    });
    err.map_or(Ok(sum), Err)
}

/// The partially collapsed side at level `k`:
/// `(m+k)! Gamma(m(n-k)/k) / ((m+n-1)! k! (n-k-1)!)` times the sum over
/// `1 <= r_1 < ... < r_k <= m+k-1` of
/// `(r_k-k+1) (r_k+n-k)!/(r_k+1)! C(mn/k+k-2-r_k, m(n-k)/k-1) prod_{j<k} R_j`.
pub fn induction_theorem_rhs(m: u64, n: u64, k: u64) -> Result<GammaSum> {
    pre(m >= 1 && 1 <= k && k < n, || {
        format!("needs m >= 1, 1 <= k <= n-1, got m={m}, n={n}, k={k}")
    })?;
    guard_tuples(m, n)?;
    let prefactor = nat_rat(factorial(m + k))
        / nat_rat(factorial(m + n - 1) * factorial(k) * factorial(n - k - 1));
    let mnk = rat((m * (n - k)) as i64, k as i64);
    let mut sum = GammaSum::default();
    let mut err = None;
    for_each_combination((m + k - 1) as usize, k as usize, |pos| {
        let r: Vec<u64> = pos.iter().map(|&p| p as u64 + 1).collect();
        let rk = r[(k - 1) as usize];
        // C(X, Y) = Gamma(X+1) / (Gamma(Y+1) (X-Y)!) with X - Y = m+k-1-r_k.
        let coeff = &prefactor
            * ri(rk + 1 - k)
            * nat_rat(range_product(rk + 2, rk + n - k))
            / nat_rat(factorial(m + k - 1 - rk));
        let term = GammaProduct::new(coeff)
            .gamma(mnk.clone())
            .and_then(|t| t.gamma(rat((m * n) as i64, k as i64) + ri(k) - ri(1) - ri(rk)))
            .and_then(|t| t.over_gamma(mnk.clone()))
            .and_then(|t| push_r_factors(t, m, n, &r, k - 1));
        match term {
            Ok(t) => sum.push(t),
            Err(e) => err = Some(e),
        }
    });
    err.map_or(Ok(sum), Err)
}

/// Both sides of the induction identity at level `k`, compared by reducing
/// their difference to zero.
pub fn verify_induction_theorem(m: u64, n: u64, k: u64) -> Result<IdentityCase> {
    let lhs = induction_theorem_lhs(m, n)?;
    let rhs = induction_theorem_rhs(m, n, k)?;
    let holds = lhs.difference(&rhs).is_zero();
    Ok(IdentityCase {
        name: "induction_theorem",
        params: vec![("m", ri(m)), ("n", ri(n)), ("k", ri(k))],
        lhs: Side::from_sum(&lhs),
        rhs: Side::from_sum(&rhs),
        holds,
    })
}

/// The full sum equals `(mn)!/(m+n-1)!`, and `(mn-1)!` times the 0/1-sequence
/// sum.
pub fn verify_induction_total(m: u64, n: u64) -> Result<Vec<IdentityCase>> {
    let lhs = Side::from_sum(&induction_theorem_lhs(m, n)?);
    let Side::Rational(value) = lhs else {
        return Err(Error::GammaMismatch(format!("full sum for ({m}, {n}) is not rational: {lhs}")));
    };
    let params = vec![("m", ri(m)), ("n", ri(n))];
    let closed = nat_rat(factorial(m * n)) / nat_rat(factorial(m + n - 1));
    let stanley = nat_rat(factorial(m * n - 1)) * stanley_sum_count(m, n)?.inner_sum;
    Ok(vec![
        IdentityCase::rational("induction_total", params.clone(), value.clone(), closed),
        IdentityCase::rational("induction_vs_sequences", params, value, stanley),
    ])
}

/// Last collapse step at `k = 1`:
/// `sum_{r=1}^{m} r (r+n-1)!/(r+1)! C(mn-r-1, mn-m-1) = m/(m+1) n! C(mn-1, mn-m)`,
/// and the resulting value equals `(mn)!/(m+n-1)!`.
pub fn verify_k1_reduction(m: u64, n: u64) -> Result<Vec<IdentityCase>> {
    pre(m >= 1 && n >= 2, || format!("needs m >= 1, n >= 2, got {m}, {n}"))?;
    let mn = m * n;
    let mut sum = Rat::zero();
    for r in 1..=m {
        sum += ri(r)
            * nat_rat(range_product(r + 2, r + n - 1))
            * nat_rat(binomial(mn - r - 1, mn - m - 1));
    }
    let collapsed = rat(m as i64, (m + 1) as i64)
        * nat_rat(factorial(n) * binomial(mn - 1, mn - m));
    let total = nat_rat(factorial(m + 1) * factorial(mn - m - 1))
        / nat_rat(factorial(m + n - 1) * factorial(n - 2))
        * &sum;
    let closed = nat_rat(complete_bipartite_count(m, n)?)
        / nat_rat(factorial(m) * factorial(n));
    let params = vec![("m", ri(m)), ("n", ri(n))];
    Ok(vec![
        IdentityCase::rational("k1_sum", params.clone(), sum, collapsed),
        IdentityCase::rational("k1_total", params, total, closed),
    ])
}

/// `C(s_1 + ... + s_{d-1}, s_1) < 2^(s_1 - 1) d` for a nondecreasing list of
/// positive integers of length `d - 1`.
pub fn lemma_a1_check(s: &[u64], d: u64) -> Result<bool> {
    pre(d >= 3 && s.len() as u64 == d - 1, || {
        format!("needs d >= 3 and d - 1 entries, got d = {d} with {} entries", s.len())
    })?;
    pre(s[0] >= 1 && s.windows(2).all(|w| w[0] <= w[1]), || {
        format!("entries must be positive and nondecreasing: {s:?}")
    })?;
    let total: u64 = s.iter().sum();
    Ok(binomial(total, s[0]) < (Nat::one() << (s[0] - 1)) * d)
}

/// `2 (d1 + d2 - 2)! >= d1! d2!`.
pub fn lemma_a2_check(d1: u64, d2: u64) -> Result<bool> {
    pre(2 <= d1 && d1 <= d2, || format!("needs 2 <= d1 <= d2, got {d1}, {d2}"))?;
    Ok(factorial(d1 + d2 - 2) * 2u32 >= factorial(d1) * factorial(d2))
}

/// `C(d1 + d2, d1) <= 2 d1 d2`.
pub fn lemma_a3_check(d1: u64, d2: u64) -> Result<bool> {
    pre(2 <= d1 && d1 <= d2, || format!("needs 2 <= d1 <= d2, got {d1}, {d2}"))?;
    Ok(binomial(d1 + d2, d1) <= Nat::from(2 * d1 * d2))
}

/// Records one case in `check`: a failing identity or an evaluation error.
fn record(check: &mut Check, case: Result<IdentityCase>) {
    match case {
        Ok(c) if c.holds => check.pass(),
        Ok(c) => check.fail(c.to_string()),
        Err(e) => check.fail(e.to_string()),
    }
}

pub const STORY_Z: [(i64, i64); 5] = [(1, 1), (2, 1), (3, 2), (5, 2), (7, 3)];

/// `x, y in 1..=4`, `w - z in x..=x+4`, `z` from [`STORY_Z`].
pub fn story_grid() -> Check {
    let mut check = Check::new("story");
    for x in 1..=4u64 {
        for y in 1..=4u64 {
            for zp in x..=x + 4 {
                for &(a, b) in &STORY_Z {
                    let z = rat(a, b);
                    let w = &z + ri(zp);
                    record(&mut check, verify_story(x, y, &z, &w));
                }
            }
        }
    }
    check
}

/// Same `x, y, z'` range as [`story_grid`], each at `z' + 2` non-integer
/// values `w = (2i+1)/3`. Both sides have degree at most `z'` in `w`, so
/// agreement at these points proves the polynomial identity for that triple.
pub fn story_polynomial_grid() -> Check {
    let mut check = Check::new("story_polynomial");
    for x in 1..=4u64 {
        for y in 1..=4u64 {
            for zp in x..=x + 4 {
                for i in 0..zp + 2 {
                    let w = rat(2 * i as i64 + 1, 3);
                    record(&mut check, verify_story_polynomial(x, y, zp, &w));
                }
            }
        }
    }
    check
}

fn legal_mnks(max: u64) -> impl Iterator<Item = (u64, u64, u64, u64)> {
    (1..=max).flat_map(move |m| {
        (2..=max).flat_map(move |n| {
            (1..n).flat_map(move |k| (0..m + n - k - 1).map(move |s| (m, n, k, s)))
        })
    })
}

/// All legal `(m, n, k, s)` with `m, n <= max`, plus the split identity at
/// every `t` the sum runs over.
pub fn binomial_sum_grid(max: u64) -> Vec<Check> {
    let mut sums = Check::new("binomial_sum");
    let mut split = Check::new("split");
    for (m, n, k, s) in legal_mnks(max) {
        record(&mut sums, verify_binomial_sum(m, n, k, s));
        if s == 0 {
            for t in 1..m + n - k {
                record(&mut split, verify_split_identity(n, k, t));
            }
        }
    }
    vec![sums, split]
}

/// All legal `(m, n, k, s, l)` with `m, n <= max`. Also checks that at
/// `l = k` the right side is the binomial-sum right side over `k!`, and that
/// both branches `i0 = 0` and `i0 > 0` occur.
pub fn induction_lemma_grid(max: u64) -> Vec<Check> {
    let mut lemma = Check::new("induction_lemma");
    let mut top = Check::new("induction_lemma_at_k");
    let mut branches = Check::new("induction_lemma_branches");
    let (mut zero, mut positive) = (0u64, 0u64);
    for (m, n, k, s) in legal_mnks(max) {
        let (i0, _) = induction_lemma_limits(m, n, k, s);
        if i0 == 0 {
            zero += 1;
        } else {
            positive += 1;
        }
        for l in i0..=k {
            record(&mut lemma, verify_induction_lemma(m, n, k, s, l));
        }
        let linked = verify_induction_lemma(m, n, k, s, k).and_then(|c| {
            let Side::Rational(rhs) = &c.rhs else { unreachable!() };
            let expected = binomial_sum_rhs(m, n, k, s)? / nat_rat(factorial(k));
            Ok(IdentityCase::rational("induction_lemma_at_k", c.params, rhs.clone(), expected))
        });
        record(&mut top, linked);
    }
    if zero > 0 && positive > 0 {
        branches.pass();
    } else {
        branches.fail(format!("i0 = 0 in {zero} cases, i0 > 0 in {positive} cases"));
    }
    vec![lemma, top, branches]
}

/// Every `1 <= k <= n-1` for `1 <= m <= max`, `2 <= n <= max`, the full-sum
/// totals, and the `k = 1` reduction.
pub fn induction_theorem_grid(max: u64) -> Vec<Check> {
    let mut theorem = Check::new("induction_theorem");
    let mut totals = Check::new("induction_total");
    let mut k1 = Check::new("k1_reduction");
    for m in 1..=max {
        for n in 2..=max {
            for k in 1..n {
                record(&mut theorem, verify_induction_theorem(m, n, k));
            }
            for (check, cases) in [
                (&mut totals, verify_induction_total(m, n)),
                (&mut k1, verify_k1_reduction(m, n)),
            ] {
                match cases {
                    Ok(cs) => cs.into_iter().for_each(|c| record(check, Ok(c))),
                    Err(e) => check.fail(e.to_string()),
                }
            }
        }
    }
    vec![theorem, totals, k1]
}

/// Nondecreasing lists of length `len` with entries in `1..=max`.
fn nondecreasing_lists(len: usize, max: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    fn go(len: usize, max: u64, lo: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for v in lo..=max {
            cur.push(v);
            go(len, max, v, cur, out);
            cur.pop();
        }
    }
    go(len, max, 1, &mut cur, &mut out);
    out
}

/// A1 holds exactly on all-ones lists (entries <= 5, d <= 6); A2 holds for
/// `2 <= d1 <= d2 <= max`; A3 holds exactly when `d1 = 2, d2 <= 4`.
pub fn appendix_grid(max: u64) -> Vec<Check> {
    let mut a1 = Check::new("appendix_a1");
    for d in 3..=6u64 {
        for s in nondecreasing_lists((d - 1) as usize, 5) {
            let expected = s.iter().all(|&x| x == 1);
            match lemma_a1_check(&s, d) {
                Ok(got) if got == expected => a1.pass(),
                Ok(got) => a1.fail(format!("s = {s:?}, d = {d}: got {got}")),
                Err(e) => a1.fail(e.to_string()),
            }
        }
    }
    let mut a2 = Check::new("appendix_a2");
    let mut a3 = Check::new("appendix_a3");
    for d1 in 2..=max {
        for d2 in d1..=max {
            match lemma_a2_check(d1, d2) {
                Ok(true) => a2.pass(),
                Ok(false) => a2.fail(format!("({d1}, {d2})")),
                Err(e) => a2.fail(e.to_string()),
            }
            let expected = d1 == 2 && d2 <= 4;
            match lemma_a3_check(d1, d2) {
                Ok(got) if got == expected => a3.pass(),
                Ok(got) => a3.fail(format!("({d1}, {d2}): got {got}")),
                Err(e) => a3.fail(e.to_string()),
            }
        }
    }
    vec![a1, a2, a3]
}

/// Grid bounds used by `verify identities`.
pub const BINOMIAL_SUM_MAX: u64 = 6;
pub const INDUCTION_LEMMA_MAX: u64 = 5;
pub const INDUCTION_THEOREM_MAX: u64 = 4;
pub const APPENDIX_MAX: u64 = 12;

pub fn all_identity_checks() -> Vec<Check> {
    let mut checks = vec![story_grid(), story_polynomial_grid()];
    checks.extend(binomial_sum_grid(BINOMIAL_SUM_MAX));
    checks.extend(induction_lemma_grid(INDUCTION_LEMMA_MAX));
    checks.extend(induction_theorem_grid(INDUCTION_THEOREM_MAX));
    checks.extend(appendix_grid(APPENDIX_MAX));
    checks
}
