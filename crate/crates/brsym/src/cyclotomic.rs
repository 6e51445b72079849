//! Exact arithmetic in cyclotomic fields Q(ζ_N).
//!
//! Character values, Gram entries and orthogonality tests all live in some
//! Q(ζ_N), so equality-with-zero has to be an exact decision, never a float
//! comparison. A [`CycNum`] is a rational linear combination of powers of a
//! fixed primitive N-th root of unity, kept in a canonical form: for every
//! prime power p^e dividing N exactly, the relation
//! `1 + ζ^{N/p} + ζ^{2N/p} + ... + ζ^{(p-1)N/p} = 0` is used to eliminate
//! exponents whose p-adic digit at p^{e-1} equals p-1. The surviving
//! exponents form the standard basis of size φ(N), so two values are equal
//! iff their canonical term maps are identical.

use std::collections::BTreeMap;
use std::fmt;

use num::bigint::BigInt;
use num::complex::Complex64;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};

/// An element of Q(ζ_N), in canonical form.
#[derive(Clone, PartialEq, Eq)]
pub struct CycNum {
    order: u32,
    terms: BTreeMap<u32, BigRational>,
}

fn factorize(mut n: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: u32) -> bool {
    n >= 2 && factorize(n) == vec![(n, 1)]
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: u32, b: u32) -> u32 {
    (a as u64 / gcd(a as u64, b as u64) * b as u64) as u32
}

/// Modular inverse for small moduli; `a` must be coprime to `m`.
fn inv_mod(a: u64, m: u64) -> u64 {
    let (mut t, mut new_t) = (0i64, 1i64);
    let (mut r, mut new_r) = (m as i64, (a % m) as i64);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    assert!(r == 1, "inv_mod: not coprime");
    t.rem_euclid(m as i64) as u64
}

impl CycNum {
    /// Builds a value from raw (exponent, coefficient) terms and reduces to
    /// canonical form. Exponents are taken modulo `order`.
    pub fn from_terms(order: u32, terms: impl IntoIterator<Item = (i64, BigRational)>) -> Self {
        assert!(order >= 1, "cyclotomic order must be positive");
        let mut map: BTreeMap<u32, BigRational> = BTreeMap::new();
        let n = order as i64;
        for (k, c) in terms {
            if c.is_zero() {
                continue;
            }
            let k = k.rem_euclid(n) as u32;
            add_term(&mut map, k, c);
        }
        let mut v = CycNum { order, terms: map };
        v.canonicalize();
        v
    }

    pub fn zero(order: u32) -> Self {
        assert!(order >= 1);
        CycNum {
            order,
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::from_rational(BigRational::one())
    }

    pub fn from_rational(r: BigRational) -> Self {
        Self::from_terms(1, [(0, r)])
    }

    pub fn from_integer(v: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(v)))
    }

    /// ζ_N^k for N ≥ 1 (k taken modulo N).
    pub fn root_of_unity(order: u32, k: i64) -> Self {
        Self::from_terms(order, [(k, BigRational::one())])
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &BigRational)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Returns the value as a rational if it lies in Q (i.e. only the ζ^0
    /// basis exponent occurs).
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.terms.is_empty() {
            return Some(BigRational::zero());
        }
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&0) {
                return Some(c.clone());
            }
        }
        None
    }

    /// Re-expresses the value in Q(ζ_M); `order` must divide `M`.
    pub fn embed(&self, m: u32) -> Self {
        assert!(m % self.order == 0, "embed: {} does not divide {}", self.order, m);
        let f = (m / self.order) as i64;
        Self::from_terms(m, self.terms().map(|(k, c)| (k as i64 * f, c.clone())))
    }

    /// Complex conjugate (ζ ↦ ζ⁻¹ termwise).
    pub fn conjugate(&self) -> Self {
        let n = self.order as i64;
        Self::from_terms(self.order, self.terms().map(|(k, c)| (n - k as i64, c.clone())))
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        if r.is_zero() {
            return Self::zero(self.order);
        }
        CycNum {
            order: self.order,
            terms: self.terms.iter().map(|(k, c)| (*k, c * r)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Numeric evaluation at ζ_N = exp(2πi/N). Display/report use only;
    /// never part of an exact decision.
    pub fn to_float(&self) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (k, c) in &self.terms {
            let theta = 2.0 * std::f64::consts::PI * (*k as f64) / (self.order as f64);
            let coeff = c.to_f64().unwrap_or(f64::NAN);
            acc += Complex64::new(theta.cos(), theta.sin()) * coeff;
        }
        acc
    }

    /// Greatest common rational content of the coefficients, for
    /// fraction-free row normalization. Zero for the zero value.
    pub fn rational_content(&self) -> BigRational {
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num::integer::gcd(num_gcd, c.numer().abs());
            den_lcm = num::integer::lcm(den_lcm, c.denom().clone());
        }
        if num_gcd.is_zero() {
            BigRational::zero()
        } else {
            BigRational::new(num_gcd, den_lcm)
        }
    }

    fn canonicalize(&mut self) {
        let n = self.order;
        for (p, e) in factorize(n) {
            let pe = p.pow(e);
            let pe1 = p.pow(e - 1);
            let q = (n / pe) as u64;
            // u ≡ 1 mod p^e, u ≡ 0 mod n/p^e: shifts the p-component only.
            let u = if q == 1 {
                1u64
            } else {
                q * inv_mod(q, pe as u64) % n as u64
            };
            let mut next: BTreeMap<u32, BigRational> = BTreeMap::new();
            for (k, c) in std::mem::take(&mut self.terms) {
                let kp = k % pe;
                let digit = kp / pe1;
                if digit == p - 1 {
                    // ζ^{r+(p-1)p^{e-1}} = -Σ_{d<p-1} ζ^{r+d·p^{e-1}} in the
                    // p-component; the CRT unit u moves only that component.
                    for d in 0..p - 1 {
                        let delta = (pe + d * pe1 - digit * pe1) % pe;
                        let k2 = ((k as u64 + delta as u64 * u) % n as u64) as u32;
                        add_term(&mut next, k2, -c.clone());
                    }
                } else {
                    add_term(&mut next, k, c);
                }
            }
            self.terms = next;
        }
    }
}

fn add_term(map: &mut BTreeMap<u32, BigRational>, k: u32, c: BigRational) {
    use std::collections::btree_map::Entry;
    match map.entry(k) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

fn binop(a: &CycNum, b: &CycNum, f: impl Fn(&CycNum, &CycNum) -> CycNum) -> CycNum {
    let m = lcm(a.order, b.order);
    if a.order == m && b.order == m {
        f(a, b)
    } else {
        f(&a.embed(m), &b.embed(m))
    }
}

impl std::ops::Add for &CycNum {
    type Output = CycNum;
    fn add(self, rhs: Self) -> CycNum {
        binop(self, rhs, |a, b| {
            CycNum::from_terms(
                a.order,
                a.terms()
                    .map(|(k, c)| (k as i64, c.clone()))
                    .chain(b.terms().map(|(k, c)| (k as i64, c.clone()))),
            )
        })
    }
}

impl std::ops::Sub for &CycNum {
    type Output = CycNum;
    fn sub(self, rhs: Self) -> CycNum {
        self + &(-rhs)
    }
}

impl std::ops::Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum {
            order: self.order,
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl std::ops::Mul for &CycNum {
    type Output = CycNum;
    fn mul(self, rhs: Self) -> CycNum {
        binop(self, rhs, |a, b| {
            let n = a.order as i64;
            let mut acc: Vec<(i64, BigRational)> = Vec::with_capacity(a.terms.len() * b.terms.len());
            for (k1, c1) in a.terms() {
                for (k2, c2) in b.terms() {
                    acc.push(((k1 as i64 + k2 as i64) % n, c1 * c2));
                }
            }
            CycNum::from_terms(a.order, acc)
        })
    }
}

macro_rules! owned_ops {
    ($($trait:ident :: $fn:ident),*) => {$(
        impl std::ops::$trait for CycNum {
            type Output = CycNum;
            fn $fn(self, rhs: CycNum) -> CycNum {
                std::ops::$trait::$fn(&self, &rhs)
            }
        }
    )*};
}
owned_ops!(Add::add, Sub::sub, Mul::mul);

impl std::ops::Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -&self
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in &self.terms {
            let (sign, mag) = if c.is_negative() {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sign)?;
            }
            if *k == 0 {
                write!(f, "{}", mag)?;
            } else if mag.is_one() {
                write!(f, "z{}^{}", self.order, k)?;
            } else {
                write!(f, "{}*z{}^{}", mag, self.order, k)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycNum({})", self)
    }
}

/// Equality across possibly different declared orders.
pub fn eq_embedded(a: &CycNum, b: &CycNum) -> bool {
    let m = lcm(a.order(), b.order());
    a.embed(m) == b.embed(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn zeta(n: u32, k: i64) -> CycNum {
        CycNum::root_of_unity(n, k)
    }

    #[test]
    fn root_of_unity_identity() {
        assert_eq!(zeta(1, 0), CycNum::one());
        assert_eq!(zeta(7, 0).as_rational(), Some(rat(1, 1)));
    }

    #[test]
    fn i_squared_is_minus_one() {
        let i = zeta(4, 1);
        let sq = &i * &i;
        assert!(eq_embedded(&sq, &zeta(2, 1)));
        assert!(eq_embedded(&sq, &CycNum::from_integer(-1)));
    }

    #[test]
    fn sum_of_pth_roots_vanishes() {
        let s = &(&zeta(3, 1) + &zeta(3, 2)) + &zeta(3, 0);
        assert!(s.is_zero());
        // but ζ₃ + ζ₃² alone is -1, not 0
        let t = &zeta(3, 1) + &zeta(3, 2);
        assert!(!t.is_zero());
        assert!(eq_embedded(&t, &CycNum::from_integer(-1)));
    }

    #[test]
    fn conjugate_of_i() {
        assert_eq!(zeta(4, 1).conjugate(), zeta(4, 3));
        assert!(eq_embedded(&zeta(4, 1).conjugate(), &(-zeta(4, 1))));
    }

    #[test]
    fn two_cos_pi_over_4_squared_is_two() {
        // (ζ₈ + ζ₈⁻¹)² = 2 + ζ₄ + ζ₄⁻¹ = 2, expanded and reduced by hand
        let c = &zeta(8, 1) + &zeta(8, 7);
        let sq = &c * &c;
        assert_eq!(sq.as_rational(), Some(rat(2, 1)));
        let ident = &CycNum::from_integer(2) + &(&zeta(4, 1) + &zeta(4, 3));
        assert!(eq_embedded(&sq, &ident));
    }

    #[test]
    fn norm_is_real_positive() {
        let x = &zeta(5, 1) + &CycNum::from_integer(2);
        let n = &x.conjugate() * &x;
        let v = n.to_float();
        assert!(v.im.abs() < 1e-12);
        assert!(v.re > 0.0);
    }

    #[test]
    fn is_zero_examples() {
        assert!((&zeta(4, 1) + &zeta(4, 3)).is_zero());
        assert!(!(&zeta(3, 1) + &zeta(3, 2)).is_zero());
    }

    #[test]
    fn to_float_sqrt2() {
        let c = &zeta(8, 1) + &zeta(8, 7);
        let v = c.to_float();
        assert!((v.re - std::f64::consts::SQRT_2).abs() < 1e-12);
        assert!(v.im.abs() < 1e-12);
    }

    #[test]
    fn embedding_consistency() {
        // ζ₂ = -1 = ζ₆³
        assert!(eq_embedded(&zeta(2, 1), &zeta(6, 3)));
        assert!(eq_embedded(&zeta(6, 1), &(-zeta(3, 2))));
    }

    #[test]
    fn rational_content_normalizes() {
        let a = (&zeta(12, 1) + &zeta(12, 5)).scale(&rat(4, 6));
        assert_eq!(a.rational_content(), rat(2, 3));
        assert!(CycNum::zero(12).rational_content().is_zero());
    }

    fn arb_cyc() -> impl Strategy<Value = CycNum> {
        let orders = prop_oneof![Just(1u32), Just(2), Just(3), Just(4), Just(6), Just(8), Just(12), Just(24), Just(200)];
        (orders, proptest::collection::vec((0i64..200, -1000i64..1000), 0..5)).prop_map(|(n, ts)| {
            CycNum::from_terms(
                n,
                ts.into_iter()
                    .map(|(k, c)| (k, BigRational::from_integer(BigInt::from(c)))),
            )
        })
    }

    proptest! {
        #[test]
        fn field_axioms(a in arb_cyc(), b in arb_cyc(), c in arb_cyc()) {
            let ab_c = &(&a * &b) * &c;
            let a_bc = &a * &(&b * &c);
            prop_assert!(eq_embedded(&ab_c, &a_bc));
            let dist = &a * &(&b + &c);
            let dist2 = &(&a * &b) + &(&a * &c);
            prop_assert!(eq_embedded(&dist, &dist2));
            let conj_mul = (&a * &b).conjugate();
            let mul_conj = &a.conjugate() * &b.conjugate();
            prop_assert!(eq_embedded(&conj_mul, &mul_conj));
        }

        #[test]
        fn zero_iff_float_small(a in arb_cyc()) {
            // float check is a test oracle only
            let v = a.to_float();
            prop_assert_eq!(a.is_zero(), v.norm() < 1e-9);
        }

        #[test]
        fn conj_times_self_is_real(a in arb_cyc()) {
            let n = &a.conjugate() * &a;
            prop_assert!(n.to_float().im.abs() < 1e-9);
        }
    }
}
