//! Exact arithmetic in `F_q` (`q = p^m`) and in the extension `L` over `F_q`
//! containing a primitive `r`-th root of unity for every configured length
//! `r`, together with root-of-unity bookkeeping.
//!
//! `L = F_p[x]/(f)` where `f` is the lexicographically least monic
//! irreducible polynomial of degree `m*t` over `F_p` and
//! `t = lcm_i ord_{r_i}(q)`. Elements are stored packed: the integer
//! `sum c_i p^i` of the coefficient digits. Arithmetic runs on discrete-log
//! tables built once per context; everything is exact.

use std::sync::atomic::{AtomicU32, Ordering};

use crate::{Error, Result};

/// Largest supported extension field; all instances in the bundled tables
/// need at most 2^12 elements.
const ORDER_LIMIT: u64 = 1 << 20;

static NEXT_TAG: AtomicU32 = AtomicU32::new(1);

/// An element of the extension field `L`, valid only for the context that
/// produced it. Mixing elements across contexts is a logic error and panics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    packed: u32,
    tag: u32,
}

impl FieldElement {
    /// Packed digit representation (the canonical integer encoding used in
    /// JSON output).
    pub fn packed(&self) -> u32 {
        self.packed
    }

    pub fn is_zero(&self) -> bool {
        self.packed == 0
    }
}

/// Field context: `F_q` with `q = p^m` inside `L` with `|L| = q^t`.
#[derive(Debug)]
pub struct FieldCtx {
    p: u32,
    m: u32,
    t: u32,
    q: u64,
    order: u64,
    lengths: Vec<u32>,
    modulus: Vec<u32>,
    generator: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
    tag: u32,
}

/// Builds the deterministic field context for characteristic `p`, base degree
/// `m` and the given lengths. Rejects non-prime `p` and any length divisible
/// by `p` (the group algebra must be semisimple).
pub fn make_context(p: u32, m: u32, lengths: &[u32]) -> Result<FieldCtx> {
    if !is_prime(p) {
        return Err(Error::NotPrime { p });
    }
    if m == 0 {
        return Err(Error::invalid("base degree m must be positive"));
    }
    if lengths.is_empty() || lengths.iter().any(|&r| r == 0) {
        return Err(Error::invalid("lengths must be positive"));
    }
    for &r in lengths {
        if r % p == 0 {
            return Err(Error::NotSemisimple { r, p });
        }
    }
    let q = (p as u64).checked_pow(m).ok_or(Error::FieldTooLarge {
        order: (p as u128).pow(m),
        limit: ORDER_LIMIT,
    })?;
    let t = lengths
        .iter()
        .map(|&r| multiplicative_order(q, r))
        .fold(1u64, lcm);
    let degree = (m as u64)
        .checked_mul(t)
        .filter(|&d| d <= 32)
        .ok_or_else(|| Error::FieldTooLarge {
            order: (q as u128).pow(t.min(u32::MAX as u64) as u32),
            limit: ORDER_LIMIT,
        })? as u32;
    let order = (p as u128).pow(degree);
    if order > ORDER_LIMIT as u128 {
        return Err(Error::FieldTooLarge {
            order,
            limit: ORDER_LIMIT,
        });
    }
    let order = order as u64;

    let modulus = least_irreducible(p, degree);
    let (exp, log, generator) = build_tables(p, order, &modulus);

    Ok(FieldCtx {
        p,
        m,
        t: t as u32,
        q,
        order,
        lengths: lengths.to_vec(),
        modulus,
        generator,
        exp,
        log,
        tag: NEXT_TAG.fetch_add(1, Ordering::Relaxed),
    })
}

impl FieldCtx {
    pub fn characteristic(&self) -> u32 {
        self.p
    }

    /// `q = p^m`, the base field size.
    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn base_degree(&self) -> u32 {
        self.m
    }

    /// Degree of `L` over `F_q`.
    pub fn ext_degree(&self) -> u32 {
        self.t
    }

    /// `|L|`.
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn lengths(&self) -> &[u32] {
        &self.lengths
    }

    /// Coefficients of the defining irreducible polynomial over `F_p`,
    /// lowest degree first, monic.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// Packed representation of the fixed primitive element.
    pub fn generator_packed(&self) -> u32 {
        self.generator
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { packed: 0, tag: self.tag }
    }

    pub fn one(&self) -> FieldElement {
        FieldElement { packed: 1, tag: self.tag }
    }

    pub fn generator(&self) -> FieldElement {
        FieldElement { packed: self.generator, tag: self.tag }
    }

    /// Element from its packed integer encoding.
    pub fn element(&self, packed: u32) -> Result<FieldElement> {
        if (packed as u64) < self.order {
            Ok(FieldElement { packed, tag: self.tag })
        } else {
            Err(Error::invalid(format!(
                "packed value {packed} out of range for field of order {}",
                self.order
            )))
        }
    }

    /// Embeds an integer scalar via repeated addition of 1 (i.e. the image
    /// of `Z` in `F_p` inside `L`).
    pub fn from_int(&self, v: u64) -> FieldElement {
        FieldElement {
            packed: (v % self.p as u64) as u32,
            tag: self.tag,
        }
    }

    #[inline]
    fn check(&self, x: FieldElement) -> u32 {
        assert_eq!(
            x.tag, self.tag,
            "field element used with a context it does not belong to"
        );
        x.packed
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let (a, b) = (self.check(a), self.check(b));
        let packed = if self.p == 2 {
            a ^ b
        } else {
            digit_add(a, b, self.p)
        };
        FieldElement { packed, tag: self.tag }
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        let a = self.check(a);
        let packed = if self.p == 2 { a } else { digit_neg(a, self.p) };
        FieldElement { packed, tag: self.tag }
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let (a, b) = (self.check(a), self.check(b));
        if a == 0 || b == 0 {
            return self.zero();
        }
        let n = self.order - 1;
        let k = (self.log[a as usize] as u64 + self.log[b as usize] as u64) % n;
        FieldElement { packed: self.exp[k as usize], tag: self.tag }
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self, a: FieldElement) -> FieldElement {
        let a = self.check(a);
        assert_ne!(a, 0, "inverse of zero");
        let n = self.order - 1;
        let k = (n - self.log[a as usize] as u64) % n;
        FieldElement { packed: self.exp[k as usize], tag: self.tag }
    }

    pub fn pow(&self, a: FieldElement, e: u64) -> FieldElement {
        let a = self.check(a);
        if a == 0 {
            return if e == 0 { self.one() } else { self.zero() };
        }
        let n = self.order - 1;
        if n == 0 {
            return self.one();
        }
        let k = (self.log[a as usize] as u128 * e as u128 % n as u128) as u64;
        FieldElement { packed: self.exp[k as usize], tag: self.tag }
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: FieldElement) -> u64 {
        let a = self.check(a);
        assert_ne!(a, 0, "order of zero");
        let n = self.order - 1;
        if n == 0 {
            return 1;
        }
        n / gcd(n, self.log[a as usize] as u64)
    }

    /// The Frobenius `x -> x^q` over the base field.
    pub fn frobenius(&self, a: FieldElement) -> FieldElement {
        self.pow(a, self.q)
    }

    /// True iff `x^q = x`, i.e. `x` lies in the base field `F_q`.
    pub fn in_base_field(&self, a: FieldElement) -> bool {
        self.frobenius(a) == a
    }

    /// Deterministic primitive `r`-th root of unity: `g^{(|L|-1)/r}` for the
    /// fixed generator `g`. Fails when `r` does not divide `|L| - 1`.
    pub fn primitive_root(&self, r: u32) -> Result<FieldElement> {
        let n = self.order - 1;
        if r == 0 || (r as u64 > 1 && (n == 0 || n % r as u64 != 0)) {
            return Err(Error::NotARootOrder { r, group: n });
        }
        if r == 1 {
            return Ok(self.one());
        }
        Ok(self.pow(self.generator(), n / r as u64))
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Order of `q` in the unit group modulo `r` (1 when `r == 1`).
pub fn multiplicative_order(q: u64, r: u32) -> u64 {
    if r <= 1 {
        return 1;
    }
    let r64 = r as u64;
    assert_eq!(gcd(q % r64, r64), 1, "order undefined: gcd(q, r) != 1");
    let mut acc = q % r64;
    let mut k = 1u64;
    while acc != 1 {
        acc = acc * (q % r64) % r64;
        k += 1;
    }
    k
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

fn digit_add(a: u32, b: u32, p: u32) -> u32 {
    let mut out = 0u32;
    let (mut a, mut b) = (a, b);
    let mut scale = 1u32;
    while a != 0 || b != 0 {
        let d = (a % p + b % p) % p;
        out += d * scale;
        a /= p;
        b /= p;
        scale *= p;
    }
    out
}

fn digit_neg(a: u32, p: u32) -> u32 {
    let mut out = 0u32;
    let mut a = a;
    let mut scale = 1u32;
    while a != 0 {
        let d = (p - a % p) % p;
        out += d * scale;
        a /= p;
        scale *= p;
    }
    out
}

// ---- polynomial helpers over F_p used only during context construction ----

fn poly_trim(v: &mut Vec<u32>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn poly_mul_mod(a: &[u32], b: &[u32], f: &[u32], p: u32) -> Vec<u32> {
    let mut prod = vec![0u32; a.len() + b.len()];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + ai * bj) % p;
        }
    }
    poly_rem(&mut prod, f, p);
    prod
}

/// Remainder of `a` modulo the monic polynomial `f`, in place.
fn poly_rem(a: &mut Vec<u32>, f: &[u32], p: u32) {
    let d = f.len() - 1;
    while a.len() > d {
        let lead = *a.last().unwrap() % p;
        let k = a.len() - 1 - d;
        if lead != 0 {
            for (i, &fi) in f.iter().enumerate() {
                let idx = k + i;
                a[idx] = (a[idx] + p - lead * fi % p) % p;
            }
        }
        a.pop();
    }
    poly_trim(a);
}

fn poly_powmod(base: &[u32], mut e: u64, f: &[u32], p: u32) -> Vec<u32> {
    let mut result = vec![1u32];
    let mut acc = base.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            result = poly_mul_mod(&result, &acc, f, p);
        }
        acc = poly_mul_mod(&acc, &acc, f, p);
        e >>= 1;
    }
    result
}

fn poly_gcd(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    poly_trim(&mut a);
    poly_trim(&mut b);
    while !b.is_empty() {
        // make b monic, then reduce a mod b
        let inv_lead = mod_inv(*b.last().unwrap(), p);
        let monic: Vec<u32> = b.iter().map(|&c| c * inv_lead % p).collect();
        poly_rem(&mut a, &monic, p);
        std::mem::swap(&mut a, &mut b);
        poly_trim(&mut b);
    }
    a
}

fn mod_inv(a: u32, p: u32) -> u32 {
    // p is a small prime
    let mut x = 1u64;
    let mut acc = a as u64 % p as u64;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            x = x * acc % p as u64;
        }
        acc = acc * acc % p as u64;
        e >>= 1;
    }
    x as u32
}

/// Rabin irreducibility test for a monic polynomial of degree `d` over `F_p`.
fn is_irreducible(f: &[u32], p: u32) -> bool {
    let d = (f.len() - 1) as u32;
    if d == 0 {
        return false;
    }
    let mut x = vec![0u32, 1];
    poly_rem(&mut x, f, p);
    // x^{p^d} == x mod f
    let mut acc = x.clone();
    for _ in 0..d {
        acc = poly_powmod(&acc, p as u64, f, p);
    }
    let mut lhs = acc;
    poly_trim(&mut lhs);
    if lhs != x {
        return false;
    }
    // gcd(x^{p^{d/l}} - x, f) == 1 for every prime l | d
    for l in prime_divisors(d as u64) {
        let k = d / l as u32;
        let mut acc = x.clone();
        for _ in 0..k {
            acc = poly_powmod(&acc, p as u64, f, p);
        }
        // acc - x
        let mut diff = acc;
        while diff.len() < 2 {
            diff.push(0);
        }
        diff[1] = (diff[1] + p - 1) % p;
        poly_trim(&mut diff);
        if diff.is_empty() {
            return false;
        }
        let g = poly_gcd(&diff, f, p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Lexicographically least monic irreducible polynomial of degree `d` over
/// `F_p`: least when the low coefficients `(c_0, ..., c_{d-1})` are read as
/// the integer `sum c_i p^i`.
fn least_irreducible(p: u32, d: u32) -> Vec<u32> {
    let span = (p as u64).pow(d);
    for low in 0..span {
        let mut f = packed_digits(low, p, d as usize);
        f.push(1);
        if is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("an irreducible polynomial of every degree exists over F_p")
}

fn packed_digits(mut v: u64, p: u32, len: usize) -> Vec<u32> {
    let mut out = vec![0u32; len];
    for slot in out.iter_mut() {
        *slot = (v % p as u64) as u32;
        v /= p as u64;
    }
    out
}

fn digits_packed(digits: &[u32], p: u32) -> u32 {
    let mut out = 0u64;
    for &d in digits.iter().rev() {
        out = out * p as u64 + d as u64;
    }
    out as u32
}

/// Finds the least primitive element and builds exp/log tables.
fn build_tables(p: u32, order: u64, modulus: &[u32]) -> (Vec<u32>, Vec<u32>, u32) {
    let n = order - 1;
    let degree = modulus.len() - 1;
    if n == 0 {
        // L = F_2: the only nonzero element is 1
        return (vec![1], vec![0, 0], 1);
    }
    let factors = prime_divisors(n);
    let mut generator = 0u32;
    'cand: for cand in 2..order as u32 {
        let digits = packed_digits(cand as u64, p, degree);
        for &l in &factors {
            let e = poly_powmod(&digits, n / l, modulus, p);
            if e == [1] {
                continue 'cand;
            }
        }
        generator = cand;
        break;
    }
    if generator == 0 {
        // order == 2 handled above; for order > 2 a generator always exists,
        // possibly the element 1 only when n == 1
        generator = 1;
    }
    let gen_digits = packed_digits(generator as u64, p, degree);
    let mut exp = vec![0u32; n as usize];
    let mut log = vec![0u32; order as usize];
    let mut acc = vec![1u32];
    for k in 0..n as usize {
        let packed = digits_packed(&acc, p);
        exp[k] = packed;
        log[packed as usize] = k as u32;
        acc = poly_mul_mod(&acc, &gen_digits, modulus, p);
    }
    (exp, log, generator)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf8_from_length_7() {
        let ctx = make_context(2, 1, &[7]).unwrap();
        assert_eq!(ctx.ext_degree(), 3);
        assert_eq!(ctx.order(), 8);
        // least irreducible of degree 3 over F_2 is x^3 + x + 1
        assert_eq!(ctx.modulus(), &[1, 1, 0, 1]);
        let g = ctx.generator();
        assert_eq!(ctx.element_order(g), 7);
    }

    #[test]
    fn gf4096_from_lengths_3_45() {
        let ctx = make_context(2, 1, &[3, 45]).unwrap();
        assert_eq!(ctx.ext_degree(), 12);
        assert_eq!(ctx.order(), 4096);
        // an element of order 45 exists: 45 | 4095 = 45 * 91
        assert_eq!(4095 % 45, 0);
        let a = ctx.primitive_root(45).unwrap();
        assert_eq!(ctx.element_order(a), 45);
    }

    #[test]
    fn trivial_length_gives_prime_field() {
        let ctx = make_context(2, 1, &[1]).unwrap();
        assert_eq!(ctx.ext_degree(), 1);
        assert_eq!(ctx.order(), 2);
        assert_eq!(ctx.primitive_root(1).unwrap(), ctx.one());
    }

    #[test]
    fn rejects_non_semisimple() {
        let err = make_context(2, 1, &[6]).unwrap_err();
        match err {
            Error::NotSemisimple { r, p } => {
                assert_eq!((r, p), (6, 2));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn rejects_bad_root_order() {
        let ctx = make_context(2, 1, &[7]).unwrap();
        assert!(ctx.primitive_root(5).is_err());
    }

    #[test]
    fn arithmetic_inverse_and_frobenius() {
        for (p, m, lengths) in [(2u32, 1u32, vec![7u32]), (3, 1, vec![4, 5]), (5, 1, vec![4, 6]), (2, 2, vec![5])] {
            let ctx = make_context(p, m, &lengths).unwrap();
            let n = ctx.order();
            for v in 1..n.min(200) as u32 {
                let x = ctx.element(v).unwrap();
                assert_eq!(ctx.mul(x, ctx.inv(x)), ctx.one());
            }
            // Frobenius is additive: (x + y)^q = x^q + y^q
            let mut rng = 0x12345u64;
            for _ in 0..1000 {
                rng = rng.wrapping_mul(6364136223846793005).wrapping_add(1);
                let a = ctx.element((rng >> 20) as u32 % n as u32).unwrap();
                rng = rng.wrapping_mul(6364136223846793005).wrapping_add(1);
                let b = ctx.element((rng >> 20) as u32 % n as u32).unwrap();
                assert_eq!(
                    ctx.frobenius(ctx.add(a, b)),
                    ctx.add(ctx.frobenius(a), ctx.frobenius(b))
                );
            }
        }
    }

    #[test]
    fn primitive_root_orders_exact() {
        let ctx = make_context(2, 1, &[3, 45]).unwrap();
        for r in [1u32, 3, 5, 9, 15, 45, 4095] {
            let a = ctx.primitive_root(r).unwrap();
            assert_eq!(ctx.pow(a, r as u64), ctx.one());
            for d in 1..r {
                if r % d == 0 {
                    assert_ne!(ctx.pow(a, d as u64), ctx.one(), "order divides proper divisor {d}");
                }
            }
        }
    }

    #[test]
    fn base_field_membership() {
        let ctx = make_context(2, 1, &[3]).unwrap();
        assert_eq!(ctx.order(), 4);
        assert!(ctx.in_base_field(ctx.zero()));
        assert!(ctx.in_base_field(ctx.one()));
        // the generator of GF(4) is not in F_2: x^2 != x
        let g = ctx.generator();
        assert!(!ctx.in_base_field(g));
        assert_ne!(ctx.mul(g, g), g);
    }

    #[test]
    fn construction_is_deterministic() {
        let a = make_context(2, 1, &[3, 45]).unwrap();
        let b = make_context(2, 1, &[3, 45]).unwrap();
        assert_eq!(a.modulus(), b.modulus());
        assert_eq!(a.generator_packed(), b.generator_packed());
        assert_eq!(a.order(), b.order());
    }

    #[test]
    fn cross_context_mixing_panics() {
        let a = make_context(2, 1, &[7]).unwrap();
        let b = make_context(2, 1, &[3]).unwrap();
        let x = a.one();
        let y = b.one();
        let result = std::panic::catch_unwind(|| a.add(x, y));
        assert!(result.is_err());
    }

    #[test]
    fn odd_characteristic_tables() {
        let ctx = make_context(3, 1, &[4, 5]).unwrap();
        assert_eq!(ctx.order(), 81);
        assert_eq!(ctx.ext_degree(), 4);
        let x = ctx.element(5).unwrap();
        let y = ctx.element(77).unwrap();
        assert_eq!(ctx.add(x, ctx.neg(x)), ctx.zero());
        assert_eq!(ctx.sub(ctx.add(x, y), y), x);
    }
}
