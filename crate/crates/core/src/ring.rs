//! Ring contexts and exact monomial arithmetic on exponent vectors.
//!
//! A [`Monomial`] is a bare exponent vector; it does not carry its ring.
//! Binary operations check that both operands have the same length and
//! report [`Error::ContextMismatch`] otherwise.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The polynomial ring `K[x_1, ..., x_n]`, reduced to what the combinatorics
/// needs: the number of variables and their display names.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RingContext {
    names: Arc<[String]>,
}

impl RingContext {
    /// Ring with `n` variables named `x1..xn`.
    pub fn new(n: usize) -> Result<Self> {
        Self::with_names((1..=n).map(|i| format!("x{i}")).collect())
    }

    pub fn with_names(names: Vec<String>) -> Result<Self> {
        if names.len() < 2 {
            return Err(Error::TooFewVariables(names.len()));
        }
        for (i, name) in names.iter().enumerate() {
            if names[..i].contains(name) {
                return Err(Error::DuplicateVariable(name.clone()));
            }
        }
        Ok(Self {
            names: names.into(),
        })
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn one(&self) -> Monomial {
        Monomial::one(self.n())
    }

    /// The variable `x_i`, 1-based.
    pub fn var(&self, i: usize) -> Result<Monomial> {
        self.pure_power(i, 1)
    }

    /// `x_i^a`, 1-based.
    pub fn pure_power(&self, i: usize, a: u32) -> Result<Monomial> {
        if i == 0 || i > self.n() {
            return Err(Error::VariableOutOfRange {
                index: i,
                n: self.n(),
            });
        }
        let mut exps = vec![0; self.n()];
        exps[i - 1] = a;
        Monomial::new(exps)
    }

    pub fn check(&self, u: &Monomial) -> Result<()> {
        if u.len() != self.n() {
            return Err(Error::ContextMismatch {
                expected: self.n(),
                found: u.len(),
            });
        }
        Ok(())
    }

    /// Renders `u` as `x1^2*x3`, or `1` for the unit.
    pub fn format_monomial(&self, u: &Monomial) -> String {
        let mut parts = Vec::new();
        for (name, &e) in self.names.iter().zip(u.exponents()) {
            match e {
                0 => {}
                1 => parts.push(name.clone()),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }

    /// Inverse of [`format_monomial`](Self::format_monomial). Repeated
    /// factors multiply (`x1*x1` is `x1^2`).
    pub fn parse_monomial(&self, text: &str) -> Result<Monomial> {
        let text = text.trim();
        let mut exps = vec![0u32; self.n()];
        if text == "1" {
            return Monomial::new(exps);
        }
        for factor in text.split('*') {
            let factor = factor.trim();
            let (name, exp) = match factor.split_once('^') {
                Some((name, exp)) => (
                    name.trim(),
                    exp.trim().parse::<u32>().map_err(|_| {
                        Error::MonomialSyntax(format!("bad exponent in `{factor}`"))
                    })?,
                ),
                None => (factor, 1),
            };
            let idx = self
                .names
                .iter()
                .position(|n| n == name)
                .ok_or_else(|| Error::MonomialSyntax(format!("unknown variable `{name}`")))?;
            exps[idx] = exps[idx].checked_add(exp).ok_or(Error::Overflow)?;
        }
        Monomial::new(exps)
    }
}

impl fmt::Debug for RingContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RingContext({})", self.names.join(","))
    }
}

/// An exponent vector `(a_1, ..., a_n)` standing for `x_1^{a_1} ... x_n^{a_n}`.
///
/// The total degree is cached and is guaranteed to fit in a `u32`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Monomial {
    exps: Box<[u32]>,
    degree: u32,
}

impl Monomial {
    pub fn new(exps: impl Into<Vec<u32>>) -> Result<Self> {
        let exps: Vec<u32> = exps.into();
        let degree = exps
            .iter()
            .try_fold(0u32, |acc, &e| acc.checked_add(e))
            .ok_or(Error::Overflow)?;
        Ok(Self {
            exps: exps.into_boxed_slice(),
            degree,
        })
    }

    pub fn one(n: usize) -> Self {
        Self {
            exps: vec![0; n].into_boxed_slice(),
            degree: 0,
        }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    /// `ν_i(u)`, 1-based. Out-of-range indices read as 0.
    pub fn exponent(&self, i: usize) -> u32 {
        i.checked_sub(1)
            .and_then(|k| self.exps.get(k))
            .copied()
            .unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// `m(u)`: the largest 1-based index of a variable dividing `u`; 0 for the unit.
    pub fn max_index(&self) -> usize {
        self.exps.iter().rposition(|&e| e > 0).map_or(0, |k| k + 1)
    }

    /// The variable index `i` (1-based) if `u = x_i^a` with `a > 0`.
    pub fn pure_power_index(&self) -> Option<usize> {
        let mut support = self.exps.iter().enumerate().filter(|(_, &e)| e > 0);
        match (support.next(), support.next()) {
            (Some((k, _)), None) => Some(k + 1),
            _ => None,
        }
    }

    /// 1-based indices of the variables dividing `u`.
    pub fn support(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(k, _)| k + 1)
            .collect()
    }

    fn same_ring(&self, other: &Self) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::ContextMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let exps = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| a.checked_add(*b))
            .collect::<Option<Vec<_>>>()
            .ok_or(Error::Overflow)?;
        Self::new(exps)
    }

    /// True iff `self | other`.
    pub fn divides(&self, other: &Self) -> Result<bool> {
        self.same_ring(other)?;
        Ok(self.divides_unchecked(other))
    }

    pub(crate) fn divides_unchecked(&self, other: &Self) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// Exact quotient `self / divisor`; fails unless `divisor | self`.
    pub fn div(&self, divisor: &Self) -> Result<Self> {
        self.same_ring(divisor)?;
        if !divisor.divides_unchecked(self) {
            return Err(Error::NotDivisible {
                dividend: format!("{self:?}"),
                divisor: format!("{divisor:?}"),
            });
        }
        Ok(Self {
            exps: self
                .exps
                .iter()
                .zip(divisor.exps.iter())
                .map(|(a, b)| a - b)
                .collect(),
            degree: self.degree - divisor.degree,
        })
    }

    pub fn lcm(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        Self::new(
            self.exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| *a.max(b))
                .collect::<Vec<_>>(),
        )
    }

    pub fn gcd(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        Self::new(
            self.exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| *a.min(b))
                .collect::<Vec<_>>(),
        )
    }

    /// `self / x_i^{ν_i(self)}`, i.e. `self` with variable `i` (1-based) removed.
    pub fn strip_variable(&self, i: usize) -> Self {
        let mut exps = self.exps.to_vec();
        if let Some(e) = i.checked_sub(1).and_then(|k| exps.get_mut(k)) {
            *e = 0;
        }
        Self::new(exps).expect("removing a variable cannot overflow")
    }

    /// `self · x_i^a`, 1-based.
    pub fn times_var_power(&self, i: usize, a: u32) -> Result<Self> {
        if i == 0 || i > self.len() {
            return Err(Error::VariableOutOfRange {
                index: i,
                n: self.len(),
            });
        }
        let mut exps = self.exps.to_vec();
        exps[i - 1] = exps[i - 1].checked_add(a).ok_or(Error::Overflow)?;
        Self::new(exps)
    }
}

impl TryFrom<Vec<u32>> for Monomial {
    type Error = Error;

    fn try_from(exps: Vec<u32>) -> Result<Self> {
        Self::new(exps)
    }
}

impl From<Monomial> for Vec<u32> {
    fn from(u: Monomial) -> Self {
        u.exps.into_vec()
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &self.exps[..])
    }
}

/// Canonical order: ascending degree, then lexicographically largest
/// exponent vector first (so `x1^2 < x1*x2 < x2^2`).
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All monomials of degree `d` in `n` variables, in canonical order.
pub fn enumerate_monomials(n: usize, d: u32) -> Vec<Monomial> {
    fn fill(exps: &mut Vec<u32>, remaining: u32, slots: usize, out: &mut Vec<Monomial>) {
        if slots == 1 {
            exps.push(remaining);
            out.push(Monomial::new(exps.clone()).expect("degree fits"));
            exps.pop();
            return;
        }
        for e in (0..=remaining).rev() {
            exps.push(e);
            fill(exps, remaining - e, slots - 1, out);
            exps.pop();
        }
    }

    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    fill(&mut Vec::with_capacity(n), d, n, &mut out);
    out
}

/// All monomials dividing `u` (including 1 and `u`), in no particular order.
pub fn divisors(u: &Monomial) -> Vec<Monomial> {
    let mut out = vec![Vec::with_capacity(u.len())];
    for &bound in u.exponents() {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..=bound).map(move |e| {
                    let mut next = prefix.clone();
                    next.push(e);
                    next
                })
            })
            .collect();
    }
    out.into_iter()
        .map(|exps| Monomial::new(exps).expect("divisor degree bounded by u"))
        .collect()
}
