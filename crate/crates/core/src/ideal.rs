//! Monomial ideals stored as their minimal generating antichain `G(I)`.

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::ring::{enumerate_monomials, Monomial, RingContext};

/// A monomial ideal, always held in canonical form: the minimal generators,
/// sorted in canonical monomial order with no duplicates. The zero ideal has
/// no generators; the unit ideal is generated by `1`.
///
/// Because minimal generators of a monomial ideal are unique, structural
/// equality (`==`) is ideal equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ctx: RingContext,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Builds the ideal generated by `raw`, minimalizing on the way in.
    pub fn new(ctx: &RingContext, raw: Vec<Monomial>) -> Result<Self> {
        for u in &raw {
            ctx.check(u)?;
        }
        Ok(Self {
            ctx: ctx.clone(),
            gens: minimalize(raw),
        })
    }

    pub fn zero(ctx: &RingContext) -> Self {
        Self {
            ctx: ctx.clone(),
            gens: Vec::new(),
        }
    }

    pub fn unit(ctx: &RingContext) -> Self {
        Self {
            ctx: ctx.clone(),
            gens: vec![ctx.one()],
        }
    }

    /// `(x_1, ..., x_j)`.
    pub fn prefix(ctx: &RingContext, j: usize) -> Result<Self> {
        if j == 0 || j > ctx.n() {
            return Err(Error::VariableOutOfRange {
                index: j,
                n: ctx.n(),
            });
        }
        let gens = (1..=j).map(|i| ctx.var(i)).collect::<Result<Vec<_>>>()?;
        Self::new(ctx, gens)
    }

    /// The homogeneous maximal ideal `(x_1, ..., x_n)`.
    pub fn maximal(ctx: &RingContext) -> Self {
        Self::prefix(ctx, ctx.n()).expect("n >= 2")
    }

    pub fn ctx(&self) -> &RingContext {
        &self.ctx
    }

    /// `G(I)` in canonical order.
    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.first().is_some_and(Monomial::is_one)
    }

    /// Rejects the zero and unit ideals.
    pub fn ensure_proper_nonzero(&self) -> Result<()> {
        if self.is_zero() {
            Err(Error::DegenerateIdeal("zero ideal"))
        } else if self.is_unit() {
            Err(Error::DegenerateIdeal("unit ideal"))
        } else {
            Ok(())
        }
    }

    fn same_ring(&self, other: &Self) -> Result<()> {
        if self.ctx != other.ctx {
            return Err(Error::ContextMismatch {
                expected: self.ctx.n(),
                found: other.ctx.n(),
            });
        }
        Ok(())
    }

    /// Monomial membership: some generator divides `u`.
    pub fn contains(&self, u: &Monomial) -> bool {
        debug_assert_eq!(u.len(), self.ctx.n());
        self.gens.iter().any(|g| g.divides_unchecked(u))
    }

    /// `deg(I)`: the largest degree of a minimal generator.
    pub fn deg(&self) -> Result<u32> {
        self.gens
            .iter()
            .map(Monomial::degree)
            .max()
            .ok_or(Error::DegenerateIdeal("zero ideal has no degree"))
    }

    /// `m(I)`: the largest `m(u)` over minimal generators.
    pub fn max_index(&self) -> Result<usize> {
        self.gens
            .iter()
            .map(Monomial::max_index)
            .max()
            .ok_or(Error::DegenerateIdeal("zero ideal has no m(I)"))
    }

    /// Largest single exponent appearing in `G(I)`.
    pub fn max_exponent(&self) -> u32 {
        self.gens
            .iter()
            .flat_map(|g| g.exponents().iter().copied())
            .max()
            .unwrap_or(0)
    }

    /// `lcm(G(I))`; the unit monomial for the zero ideal.
    pub fn gens_lcm(&self) -> Monomial {
        self.gens
            .iter()
            .fold(self.ctx.one(), |acc, g| acc.lcm(g).expect("same ring"))
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let raw = self.gens.iter().chain(other.gens.iter()).cloned().collect();
        Self::new(&self.ctx, raw)
    }

    pub fn product(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let mut raw = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                raw.push(g.mul(h)?);
            }
        }
        Self::new(&self.ctx, raw)
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let mut raw = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                raw.push(g.lcm(h)?);
            }
        }
        Self::new(&self.ctx, raw)
    }

    /// `I^k` for `k >= 1`.
    pub fn power(&self, k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::ZeroPower);
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// `(I : v)`, generated by `g / gcd(g, v)` for `g` in `G(I)`.
    pub fn colon_monomial(&self, v: &Monomial) -> Result<Self> {
        self.ctx.check(v)?;
        let raw = self
            .gens
            .iter()
            .map(|g| g.div(&g.gcd(v)?))
            .collect::<Result<Vec<_>>>()?;
        Self::new(&self.ctx, raw)
    }

    /// `(I : J) = ∩_{v ∈ G(J)} (I : v)`. `J` must be nonzero.
    pub fn colon_ideal(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let mut gens = other.gens.iter();
        let first = gens
            .next()
            .ok_or(Error::DegenerateIdeal("colon by the zero ideal"))?;
        let mut acc = self.colon_monomial(first)?;
        for v in gens {
            acc = acc.intersection(&self.colon_monomial(v)?)?;
        }
        Ok(acc)
    }

    /// `(I : v^∞)` by iterating `(· : v)` to a fixpoint.
    ///
    /// The chain stabilizes after at most `1 + max exponent of G(I)` colons.
    pub fn saturate_monomial(&self, v: &Monomial) -> Result<Self> {
        let cap = 1 + self.max_exponent() as usize;
        let mut cur = self.clone();
        for _ in 0..cap {
            let next = cur.colon_monomial(v)?;
            if next == cur {
                return Ok(cur);
            }
            cur = next;
        }
        Err(Error::Internal(format!(
            "monomial saturation did not stabilize within {cap} steps"
        )))
    }

    /// `(I : J^∞)` by iterating `(· : J)` to a fixpoint. `J` must be nonzero.
    ///
    /// With `r = |G(J)|` and `E` the largest exponent in `G(I)`, `(I : J^k)`
    /// is constant for `k >= r(E-1)+1`, so `1 + rE` colons always suffice.
    pub fn saturate_ideal(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        if other.is_zero() {
            return Err(Error::DegenerateIdeal("saturation by the zero ideal"));
        }
        let cap = 1 + other.gens.len() * self.max_exponent() as usize;
        let mut cur = self.clone();
        for _ in 0..cap {
            let next = cur.colon_ideal(other)?;
            if next == cur {
                return Ok(cur);
            }
            cur = next;
        }
        Err(Error::Internal(format!(
            "ideal saturation did not stabilize within {cap} steps"
        )))
    }

    /// Monomials of degree exactly `d` that lie in `I`, in canonical order.
    pub fn degree_slice(&self, d: u32) -> Vec<Monomial> {
        if self.gens.first().is_none_or(|g| g.degree() > d) {
            return Vec::new();
        }
        enumerate_monomials(self.ctx.n(), d)
            .into_iter()
            .filter(|u| self.contains(u))
            .collect()
    }

    /// `I_{≥e}` for `e >= deg(I)`. Its minimal generators are exactly the
    /// degree-`e` slice.
    pub fn truncation(&self, e: u32) -> Result<Self> {
        let deg = self.deg()?;
        if e < deg {
            return Err(Error::TruncationBelowDegree { e, deg });
        }
        Ok(Self {
            ctx: self.ctx.clone(),
            gens: self.degree_slice(e),
        })
    }
}

/// The unique divisibility antichain generating the same ideal as `raw`,
/// in canonical order.
pub fn minimalize(mut raw: Vec<Monomial>) -> Vec<Monomial> {
    raw.sort();
    raw.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(raw.len());
    for u in raw {
        // divisors of u precede it in canonical order
        if !kept.iter().any(|g| g.divides_unchecked(&u)) {
            kept.push(u);
        }
    }
    kept
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self
            .gens
            .iter()
            .map(|g| self.ctx.format_monomial(g))
            .collect();
        write!(f, "ideal({})", gens.join(", "))
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for MonomialIdeal {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("MonomialIdeal", 2)?;
        s.serialize_field("gens", &self.gens)?;
        s.serialize_field("n", &self.ctx.n())?;
        s.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ring(n: usize) -> RingContext {
        RingContext::new(n).unwrap()
    }

    fn ideal(ctx: &RingContext, gens: &[&str]) -> MonomialIdeal {
        let raw = gens
            .iter()
            .map(|g| ctx.parse_monomial(g).unwrap())
            .collect();
        MonomialIdeal::new(ctx, raw).unwrap()
    }

    #[test]
    fn minimalize_examples() {
        let r = ring(3);
        assert_eq!(
            ideal(&r, &["x1^2", "x1^3", "x1*x2"]),
            ideal(&r, &["x1^2", "x1*x2"])
        );
        assert_eq!(ideal(&r, &["x1^2", "x1^3", "x1*x2"]).gens().len(), 2);
        assert_eq!(ideal(&r, &["1", "x1"]), MonomialIdeal::unit(&r));
        assert_eq!(ideal(&r, &["x1*x2", "x2*x3", "x1*x3"]).gens().len(), 3);
        assert!(MonomialIdeal::new(&r, vec![]).unwrap().is_zero());
    }

    #[test]
    fn minimalize_rejects_wrong_length() {
        let r = ring(2);
        assert!(MonomialIdeal::new(&r, vec![Monomial::one(3)]).is_err());
    }

    #[test]
    fn membership() {
        let r = ring(2);
        let i = ideal(&r, &["x1^2", "x1*x2"]);
        assert!(i.contains(&r.parse_monomial("x1^2*x2").unwrap()));
        assert!(!i.contains(&r.parse_monomial("x2^3").unwrap()));
        assert!(!MonomialIdeal::zero(&r).contains(&r.one()));
    }

    #[test]
    fn sum_product_intersection() {
        let r = ring(2);
        let x1 = ideal(&r, &["x1"]);
        let x2 = ideal(&r, &["x2"]);
        assert_eq!(x1.product(&x2).unwrap(), ideal(&r, &["x1*x2"]));
        assert_eq!(
            ideal(&r, &["x1^2"]).intersection(&x2).unwrap(),
            ideal(&r, &["x1^2*x2"])
        );
        assert_eq!(
            ideal(&r, &["x1^2", "x1*x2"]).product(&x1).unwrap(),
            ideal(&r, &["x1^3", "x1^2*x2"])
        );
        assert_eq!(x1.sum(&x2).unwrap(), MonomialIdeal::maximal(&r));
    }

    #[test]
    fn colon_by_monomial() {
        let r = ring(2);
        let i = ideal(&r, &["x1^2", "x1*x2"]);
        assert_eq!(
            i.colon_monomial(&r.var(1).unwrap()).unwrap(),
            ideal(&r, &["x1", "x2"])
        );
        assert_eq!(i.colon_monomial(&r.one()).unwrap(), i);
        assert_eq!(
            ideal(&r, &["x2^2"])
                .colon_monomial(&r.var(2).unwrap())
                .unwrap(),
            ideal(&r, &["x2"])
        );
    }

    #[test]
    fn colon_by_ideal() {
        let r = ring(2);
        let m = MonomialIdeal::maximal(&r);
        // (x1x2 : x1) = (x2), (x1x2 : x2) = (x1); their intersection is (x1x2)
        assert_eq!(
            ideal(&r, &["x1*x2"]).colon_ideal(&m).unwrap(),
            ideal(&r, &["x1*x2"])
        );
        let i = ideal(&r, &["x1^2", "x1*x2"]);
        assert_eq!(i.colon_ideal(&MonomialIdeal::unit(&r)).unwrap(), i);
        assert_eq!(
            ideal(&r, &["x1"]).colon_ideal(&ideal(&r, &["x2"])).unwrap(),
            ideal(&r, &["x1"])
        );
        assert!(matches!(
            i.colon_ideal(&MonomialIdeal::zero(&r)),
            Err(Error::DegenerateIdeal(_))
        ));
    }

    #[test]
    fn colon_ideal_matches_brute_force_membership() {
        let r = ring(2);
        let i = ideal(&r, &["x1*x2"]);
        let m = MonomialIdeal::maximal(&r);
        let colon = i.colon_ideal(&m).unwrap();
        for d in 0..=3 {
            for u in enumerate_monomials(2, d) {
                let expected = m.gens().iter().all(|v| i.contains(&u.mul(v).unwrap()));
                assert_eq!(colon.contains(&u), expected, "{u:?}");
            }
        }
    }

    #[test]
    fn monomial_saturation() {
        let r = ring(2);
        let x2 = r.var(2).unwrap();
        assert_eq!(
            ideal(&r, &["x2^2"]).saturate_monomial(&x2).unwrap(),
            MonomialIdeal::unit(&r)
        );
        assert_eq!(
            ideal(&r, &["x1^2*x2"]).saturate_monomial(&x2).unwrap(),
            ideal(&r, &["x1^2"])
        );
        assert_eq!(
            ideal(&r, &["x1"]).saturate_monomial(&x2).unwrap(),
            ideal(&r, &["x1"])
        );
        let i = ideal(&r, &["x1^3", "x2"]);
        assert_eq!(i.saturate_monomial(&r.one()).unwrap(), i);
    }

    #[test]
    fn ideal_saturation() {
        let r = ring(2);
        let m = MonomialIdeal::maximal(&r);
        assert_eq!(
            ideal(&r, &["x2^2"]).saturate_ideal(&m).unwrap(),
            ideal(&r, &["x2^2"])
        );
        let sat = ideal(&r, &["x1^2", "x1*x2"]).saturate_ideal(&m).unwrap();
        assert_eq!(sat, ideal(&r, &["x1"]));
        assert!(sat.contains(&r.var(1).unwrap()));
        assert_eq!(
            MonomialIdeal::unit(&r).saturate_ideal(&m).unwrap(),
            MonomialIdeal::unit(&r)
        );
    }

    #[test]
    fn ideal_saturation_needs_more_than_max_exponent_steps() {
        // (x1^3, x2^3) : m^k becomes the unit ideal only at k = 5
        let r = ring(2);
        let i = ideal(&r, &["x1^3", "x2^3"]);
        let m = MonomialIdeal::maximal(&r);
        assert_eq!(i.saturate_ideal(&m).unwrap(), MonomialIdeal::unit(&r));
    }

    #[test]
    fn prefix_ideals() {
        let r = ring(3);
        assert_eq!(MonomialIdeal::prefix(&r, 1).unwrap(), ideal(&r, &["x1"]));
        assert_eq!(
            MonomialIdeal::prefix(&r, 3).unwrap(),
            ideal(&r, &["x1", "x2", "x3"])
        );
        assert_eq!(
            MonomialIdeal::prefix(&r, 2).unwrap(),
            ideal(&r, &["x1", "x2"])
        );
        assert!(MonomialIdeal::prefix(&r, 0).is_err());
        assert!(MonomialIdeal::prefix(&r, 4).is_err());
    }

    #[test]
    fn degree_and_max_index() {
        let r = ring(2);
        let i = ideal(&r, &["x1^2", "x1*x2"]);
        assert_eq!((i.deg().unwrap(), i.max_index().unwrap()), (2, 2));
        let i = ideal(&r, &["x1"]);
        assert_eq!((i.deg().unwrap(), i.max_index().unwrap()), (1, 1));
        let i = ideal(&r, &["x1^2", "x2^3"]);
        assert_eq!((i.deg().unwrap(), i.max_index().unwrap()), (3, 2));
        assert!(MonomialIdeal::zero(&r).deg().is_err());
    }

    #[test]
    fn slices() {
        let r = ring(2);
        let p = |s: &str| r.parse_monomial(s).unwrap();
        assert_eq!(
            ideal(&r, &["x1^2", "x1*x2"]).degree_slice(2),
            vec![p("x1^2"), p("x1*x2")]
        );
        assert_eq!(
            ideal(&r, &["x2^2"]).degree_slice(3),
            vec![p("x1*x2^2"), p("x2^3")]
        );
        assert!(ideal(&r, &["x1^3", "x2^4"]).degree_slice(2).is_empty());
    }

    #[test]
    fn truncations() {
        let r = ring(2);
        assert_eq!(
            ideal(&r, &["x1^2", "x2^3"]).truncation(3).unwrap(),
            ideal(&r, &["x1^3", "x1^2*x2", "x2^3"])
        );
        assert_eq!(
            ideal(&r, &["x1"]).truncation(1).unwrap(),
            ideal(&r, &["x1"])
        );
        let i = ideal(&r, &["x1^2", "x1*x2"]);
        assert_eq!(i.truncation(2).unwrap(), i);
        assert_eq!(
            ideal(&r, &["x1^2", "x2^3"]).truncation(2),
            Err(Error::TruncationBelowDegree { e: 2, deg: 3 })
        );
    }

    #[test]
    fn powers() {
        let r = ring(2);
        let i = ideal(&r, &["x1^2", "x1*x2"]);
        assert_eq!(i.power(1).unwrap(), i);
        assert_eq!(
            MonomialIdeal::maximal(&r).power(2).unwrap(),
            ideal(&r, &["x1^2", "x1*x2", "x2^2"])
        );
        assert_eq!(
            i.power(2).unwrap(),
            ideal(&r, &["x1^4", "x1^3*x2", "x1^2*x2^2"])
        );
        assert_eq!(i.power(0), Err(Error::ZeroPower));
    }

    #[test]
    fn equality() {
        let r = ring(2);
        assert_ne!(ideal(&r, &["x1"]), ideal(&r, &["x1^2"]));
        assert_eq!(ideal(&r, &["x1*x2", "x1^2"]), ideal(&r, &["x1^2", "x1*x2"]));
    }

    #[test]
    fn display_and_json() {
        let r = ring(2);
        let i = ideal(&r, &["x1*x2", "x1^2"]);
        assert_eq!(i.to_string(), "ideal(x1^2, x1*x2)");
        assert_eq!(MonomialIdeal::zero(&r).to_string(), "ideal()");
        assert_eq!(
            serde_json::to_string(&i).unwrap(),
            r#"{"gens":[[2,0],[1,1]],"n":2}"#
        );
    }

    fn arb_ideal(n: usize) -> impl Strategy<Value = MonomialIdeal> {
        prop::collection::vec(prop::collection::vec(0u32..4, n), 1..5).prop_map(move |raw| {
            let ctx = RingContext::new(n).unwrap();
            let raw = raw.into_iter().map(|e| Monomial::new(e).unwrap()).collect();
            MonomialIdeal::new(&ctx, raw).unwrap()
        })
    }

    fn all_monomials_up_to(n: usize, d: u32) -> Vec<Monomial> {
        (0..=d).flat_map(|k| enumerate_monomials(n, k)).collect()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn sum_and_intersection_membership(i in arb_ideal(3), j in arb_ideal(3)) {
            let sum = i.sum(&j).unwrap();
            let cap = i.intersection(&j).unwrap();
            let range = i.deg().unwrap() + j.deg().unwrap() + 2;
            for u in all_monomials_up_to(3, range) {
                prop_assert_eq!(sum.contains(&u), i.contains(&u) || j.contains(&u));
                prop_assert_eq!(cap.contains(&u), i.contains(&u) && j.contains(&u));
            }
        }

        #[test]
        fn colon_membership(i in arb_ideal(3), j in arb_ideal(3)) {
            let colon = i.colon_ideal(&j).unwrap();
            let range = i.deg().unwrap() + j.deg().unwrap() + 2;
            for u in all_monomials_up_to(3, range) {
                let expected = j.gens().iter().all(|v| i.contains(&u.mul(v).unwrap()));
                prop_assert_eq!(colon.contains(&u), expected);
            }
        }

        #[test]
        fn saturation_is_a_fixpoint(i in arb_ideal(3), exps in prop::collection::vec(0u32..3, 3)) {
            let v = Monomial::new(exps).unwrap();
            let sat = i.saturate_monomial(&v).unwrap();
            prop_assert_eq!(sat.colon_monomial(&v).unwrap(), sat.clone());
            // (I : v^∞) = (I : v^E) once E is at least the largest exponent of G(I)
            let mut big = Monomial::one(3);
            for _ in 0..=i.max_exponent() {
                big = big.mul(&v).unwrap();
            }
            prop_assert_eq!(i.colon_monomial(&big).unwrap(), sat);
        }

        #[test]
        fn ideal_saturation_is_intersection_of_monomial_saturations(i in arb_ideal(3), j in arb_ideal(3)) {
            let sat = i.saturate_ideal(&j).unwrap();
            prop_assert_eq!(sat.colon_ideal(&j).unwrap(), sat.clone());
            let mut expected: Option<MonomialIdeal> = None;
            for v in j.gens() {
                let s = i.saturate_monomial(v).unwrap();
                expected = Some(match expected {
                    None => s,
                    Some(acc) => acc.intersection(&s).unwrap(),
                });
            }
            prop_assert_eq!(sat, expected.unwrap());
        }

        #[test]
        fn truncation_contents(i in arb_ideal(3), extra in 0u32..3) {
            let e = i.deg().unwrap() + extra;
            let t = i.truncation(e).unwrap();
            prop_assert!(t.gens().iter().all(|g| i.contains(g)));
            for u in all_monomials_up_to(3, e + 2) {
                if u.degree() >= e && i.contains(&u) {
                    prop_assert!(t.contains(&u));
                }
            }
        }

        #[test]
        fn minimalize_idempotent_and_order_independent(i in arb_ideal(3), seed in any::<u64>()) {
            let mut raw = i.gens().to_vec();
            prop_assert_eq!(minimalize(raw.clone()), raw.clone());
            let k = raw.len();
            raw.rotate_left((seed as usize) % k);
            raw.reverse();
            prop_assert_eq!(MonomialIdeal::new(i.ctx(), raw).unwrap(), i);
        }
    }
}
