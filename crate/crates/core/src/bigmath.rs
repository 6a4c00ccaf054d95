//! Exact arithmetic: factorials, binomials (integer and generalized), Catalan
//! numbers and a symbolic reducer for products of Gamma values at rational
//! arguments.
//!
//! Nothing here touches floating point. `Nat` and `Rat` are the
//! `num-bigint` / `num-rational` types; `BigRational` is always kept in lowest
//! terms with a positive denominator, so `==` is canonical-form equality.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision nonnegative integer.
pub type Nat = BigUint;
/// Exact rational in lowest terms.
pub type Rat = BigRational;

/// `num / den` as a `Rat`. Panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_from_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn nat_to_rat(n: &Nat) -> Rat {
    Rat::from_integer(BigInt::from(n.clone()))
}

/// Converts an integral, nonnegative rational back to a `Nat`.
pub fn rat_to_nat(r: &Rat) -> Option<Nat> {
    if r.is_integer() && !r.is_negative() {
        r.to_integer().to_biguint()
    } else {
        None
    }
}

pub fn factorial(n: u64) -> Nat {
    (2..=n).fold(Nat::one(), |acc, i| acc * i)
}

/// Rising product `lo * (lo+1) * ... * hi`; 1 when `hi < lo`.
pub fn range_product(lo: u64, hi: u64) -> Nat {
    if hi < lo {
        return Nat::one();
    }
    (lo..=hi).fold(Nat::one(), |acc, i| acc * i)
}

/// C(n, k), zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> Nat {
    if k > n {
        return Nat::zero();
    }
    let k = k.min(n - k);
    let mut acc = Nat::one();
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) at every step.
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// C(n, k) for big arguments. `k` must fit in a machine word when `k <= n`.
pub fn binomial_nat(n: &Nat, k: &Nat) -> Nat {
    if k > n {
        return Nat::zero();
    }
    let other = n - k;
    let k = if &other < k { other } else { k.clone() };
    let steps = k.to_u64().expect("binomial lower index does not fit in u64");
    let mut acc = Nat::one();
    for i in 0..steps {
        acc = acc * (n - Nat::from(i)) / Nat::from(i + 1);
    }
    acc
}

/// The n-th Catalan number C(2n, n) / (n + 1).
pub fn catalan(n: u64) -> Nat {
    let (q, r) = binomial(2 * n, n).div_rem(&Nat::from(n + 1));
    assert!(r.is_zero(), "Catalan division left a remainder");
    q
}

/// Generalized binomial with a nonnegative integer lower index:
/// `x (x-1) ... (x-y+1) / y!`.
pub fn gbinom_lower_int(x: &Rat, y: u64) -> Rat {
    let mut num = Rat::one();
    let mut step = x.clone();
    for _ in 0..y {
        num *= &step;
        step -= Rat::one();
    }
    num / nat_to_rat(&factorial(y))
}

/// Generalized binomial `Gamma(x+1) / (Gamma(y+1) Gamma(x-y+1))` for `x - y` a
/// nonnegative integer, evaluated as `prod_{i=1}^{x-y} (y+i) / (x-y)!`.
pub fn gbinom_int_diff(x: &Rat, y: &Rat) -> Result<Rat> {
    let diff = x - y;
    if !diff.is_integer() || diff.is_negative() {
        return Err(Error::Domain(format!(
            "generalized binomial ({x} choose {y}) needs x - y to be a nonnegative integer"
        )));
    }
    if y <= &rat_from_int(-1) {
        return Err(Error::Domain(format!(
            "generalized binomial ({x} choose {y}) hits a Gamma pole at y + 1 = {}",
            y + Rat::one()
        )));
    }
    let d = diff
        .to_integer()
        .to_u64()
        .ok_or_else(|| Error::Domain(format!("offset {diff} is too large")))?;
    let mut num = Rat::one();
    for i in 1..=d {
        num *= y + rat_from_int(i as i64);
    }
    Ok(num / nat_to_rat(&factorial(d)))
}

/// `Gamma(a) / Gamma(b)` for `a - b` an integer and both arguments positive.
fn pochhammer_ratio(a: &Rat, b: &Rat) -> Rat {
    let d = (a - b).to_integer();
    let steps = d.abs().to_u64().expect("Gamma offset too large");
    let (base, invert) = if d.is_negative() { (a, true) } else { (b, false) };
    let mut acc = Rat::one();
    let mut t = base.clone();
    for _ in 0..steps {
        acc *= &t;
        t += Rat::one();
    }
    if invert {
        acc.recip()
    } else {
        acc
    }
}

fn frac_part(a: &Rat) -> Rat {
    a - a.floor()
}

/// Representative of `a`'s class mod 1 in the half-open interval (0, 1].
fn unit_base(a: &Rat) -> Rat {
    a - a.ceil() + Rat::one()
}

/// `coeff * prod Gamma(numer) / prod Gamma(denom)` over positive rational
/// arguments.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaProduct {
    pub coeff: Rat,
    pub numer: Vec<Rat>,
    pub denom: Vec<Rat>,
}

/// Outcome of [`GammaProduct::reduce`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Reduced {
    Rational(Rat),
    /// Unpaired Gamma factors remain. Their arguments are shifted into (0, 1]
    /// and sorted, so two products that are equal reduce to the same value.
    Irreducible(GammaProduct),
}

impl GammaProduct {
    pub fn new(coeff: Rat) -> Self {
        GammaProduct {
            coeff,
            numer: Vec::new(),
            denom: Vec::new(),
        }
    }

    fn check_arg(a: &Rat) -> Result<()> {
        if a.is_positive() {
            Ok(())
        } else {
            Err(Error::Domain(format!("Gamma argument {a} is not positive")))
        }
    }

    /// Multiplies by `Gamma(a)`.
    pub fn gamma(mut self, a: Rat) -> Result<Self> {
        Self::check_arg(&a)?;
        self.numer.push(a);
        Ok(self)
    }

    /// Divides by `Gamma(b)`.
    pub fn over_gamma(mut self, b: Rat) -> Result<Self> {
        Self::check_arg(&b)?;
        self.denom.push(b);
        Ok(self)
    }

    pub fn scale(mut self, c: &Rat) -> Self {
        self.coeff *= c;
        self
    }

    pub fn mul(&self, other: &GammaProduct) -> GammaProduct {
        let mut numer = self.numer.clone();
        numer.extend(other.numer.iter().cloned());
        let mut denom = self.denom.clone();
        denom.extend(other.denom.iter().cloned());
        GammaProduct {
            coeff: &self.coeff * &other.coeff,
            numer,
            denom,
        }
    }

    /// Multiplicative inverse. Panics if the coefficient is zero.
    pub fn recip(&self) -> GammaProduct {
        GammaProduct {
            coeff: self.coeff.recip(),
            numer: self.denom.clone(),
            denom: self.numer.clone(),
        }
    }

    /// Pairs each numerator argument with a denominator argument of the same
    /// fractional part, replacing the pair by its Pochhammer ratio. Leftover
    /// factors are normalized into (0, 1].
    pub fn reduce(&self) -> Reduced {
        let mut coeff = self.coeff.clone();
        if coeff.is_zero() {
            return Reduced::Rational(coeff);
        }
        let mut classes: BTreeMap<Rat, (Vec<Rat>, Vec<Rat>)> = BTreeMap::new();
        for a in &self.numer {
            classes.entry(frac_part(a)).or_default().0.push(a.clone());
        }
        for b in &self.denom {
            classes.entry(frac_part(b)).or_default().1.push(b.clone());
        }

        let mut rest_numer = Vec::new();
        let mut rest_denom = Vec::new();
        for (_, (nums, dens)) in classes {
            let paired = nums.len().min(dens.len());
            for (a, b) in nums.iter().zip(dens.iter()) {
                coeff *= pochhammer_ratio(a, b);
            }
            for a in &nums[paired..] {
                let base = unit_base(a);
                coeff *= pochhammer_ratio(a, &base);
                rest_numer.push(base);
            }
            for b in &dens[paired..] {
                let base = unit_base(b);
                coeff /= pochhammer_ratio(b, &base);
                rest_denom.push(base);
            }
        }
        if rest_numer.is_empty() && rest_denom.is_empty() {
            return Reduced::Rational(coeff);
        }
        // Gamma(1) = 1.
        rest_numer.retain(|a| !a.is_one());
        rest_denom.retain(|b| !b.is_one());
        if rest_numer.is_empty() && rest_denom.is_empty() {
            return Reduced::Rational(coeff);
        }
        rest_numer.sort();
        rest_denom.sort();
        Reduced::Irreducible(GammaProduct {
            coeff,
            numer: rest_numer,
            denom: rest_denom,
        })
    }

    /// Equality via the quotient: equal iff `self / other` reduces to 1.
    /// An irreducible quotient is reported as an error rather than guessed.
    pub fn equals(&self, other: &GammaProduct) -> Result<bool> {
        if self.coeff.is_zero() || other.coeff.is_zero() {
            return Ok(self.coeff.is_zero() && other.coeff.is_zero());
        }
        match self.mul(&other.recip()).reduce() {
            Reduced::Rational(q) => Ok(q.is_one()),
            Reduced::Irreducible(rest) => Err(Error::GammaMismatch(format!(
                "quotient {self} / {other} leaves unpaired factors {rest}"
            ))),
        }
    }
}

impl fmt::Display for GammaProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.coeff)?;
        for a in &self.numer {
            write!(f, "*G({a})")?;
        }
        for b in &self.denom {
            write!(f, "/G({b})")?;
        }
        Ok(())
    }
}

/// A sum of Gamma products, reduced term by term.
#[derive(Clone, Debug, Default)]
pub struct GammaSum {
    pub terms: Vec<GammaProduct>,
}

/// Reduced form of a [`GammaSum`]: a rational part plus irreducible terms
/// grouped by their (canonical) Gamma remainder, zero groups dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedSum {
    pub rational: Rat,
    pub irreducible: Vec<GammaProduct>,
}

impl ReducedSum {
    pub fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.irreducible.is_empty()
    }
}

impl GammaSum {
    pub fn push(&mut self, term: GammaProduct) {
        self.terms.push(term);
    }

    pub fn reduce(&self) -> ReducedSum {
        let mut rational = Rat::zero();
        let mut groups: BTreeMap<(Vec<Rat>, Vec<Rat>), Rat> = BTreeMap::new();
        for t in &self.terms {
            match t.reduce() {
                Reduced::Rational(r) => rational += r,
                Reduced::Irreducible(g) => {
                    *groups.entry((g.numer, g.denom)).or_insert_with(Rat::zero) += g.coeff;
                }
            }
        }
        let irreducible = groups
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|((numer, denom), coeff)| GammaProduct {
                coeff,
                numer,
                denom,
            })
            .collect();
        ReducedSum {
            rational,
            irreducible,
        }
    }

    /// `self - other`, reduced.
    pub fn difference(&self, other: &GammaSum) -> ReducedSum {
        let mut all = self.clone();
        for t in &other.terms {
            all.push(t.clone().scale(&rat_from_int(-1)));
        }
        all.reduce()
    }
}
