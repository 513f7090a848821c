//! Exact arithmetic in GF(p) and GF(p^m): Legendre symbol, trace map,
//! deterministic construction of an irreducible modulus and a primitive
//! element, and the residue convention used by the shift formulas.
//!
//! Coefficient vectors are always constant term first, so the polynomial
//! x^2 + 2x + 3 is stored and serialized as `3,2,1`.

use crate::arith::{distinct_prime_factors, gcd_u64, is_prime, mod_pow, order_mod_prime};
use crate::error::{Error, Result};
use std::fmt;

/// Default refusal threshold for the field order p^m.
pub const DEFAULT_MAX_ORDER: u64 = 1 << 31;

/// Hard ceiling keeping every coefficient product inside u64.
const ABSOLUTE_MAX_ORDER: u64 = 1 << 62;

/// Legendre symbol (a / p) via Euler's criterion.
///
/// Returns 0 iff p divides a, +1 for nonzero quadratic residues, -1 otherwise.
pub fn legendre(p: u64, a: i64) -> Result<i8> {
    if p < 3 || !is_prime(p) {
        return Err(Error::NotOddPrime { p });
    }
    let r = a.rem_euclid(p as i64) as u64;
    if r == 0 {
        return Ok(0);
    }
    Ok(if mod_pow(r, (p - 1) / 2, p) == 1 { 1 } else { -1 })
}

/// The representative of a modulo n drawn from {1, ..., n}: multiples of n
/// map to n itself, never to 0.
pub fn underline_mod(a: i64, n: i64) -> Result<i64> {
    if n <= 1 {
        return Err(Error::BadUnderlineModulus { n });
    }
    let r = a.rem_euclid(n);
    Ok(if r == 0 { n } else { r })
}

/// Parse a comma-separated coefficient list such as `3,2,1`.
pub fn parse_coeffs(s: &str) -> Result<Vec<u64>> {
    if s.trim().is_empty() {
        return Err(Error::BadCoefficientString { reason: "empty list" });
    }
    s.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<u64>()
                .map_err(|_| Error::BadCoefficientString { reason: "expected non-negative integers" })
        })
        .collect()
}

/// Render a coefficient list in the same comma-separated form `parse_coeffs` reads.
pub fn format_coeffs(coeffs: &[u64]) -> String {
    coeffs
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

// ---------------------------------------------------------------------------
// Dense polynomial arithmetic over GF(p), constant term first, trimmed.
// ---------------------------------------------------------------------------

fn ptrim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn inv_mod_p(x: u64, p: u64) -> u64 {
    debug_assert!(x % p != 0);
    mod_pow(x, p - 2, p)
}

fn pmul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + ai * bj) % p;
        }
    }
    ptrim(&mut out);
    out
}

fn psub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let len = a.len().max(b.len());
    let mut out = vec![0u64; len];
    for i in 0..len {
        let ai = a.get(i).copied().unwrap_or(0);
        let bi = b.get(i).copied().unwrap_or(0);
        out[i] = (ai + p - bi) % p;
    }
    ptrim(&mut out);
    out
}

/// Remainder of a modulo b; b must be nonzero (not necessarily monic).
fn pmod(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    debug_assert!(!b.is_empty());
    let db = b.len() - 1;
    let lead_inv = inv_mod_p(b[db], p);
    let mut r = a.to_vec();
    ptrim(&mut r);
    while r.len() > db {
        let dr = r.len() - 1;
        let c = r[dr] * lead_inv % p;
        let k = dr - db;
        for j in 0..=db {
            r[k + j] = (r[k + j] + p - c * b[j] % p) % p;
        }
        ptrim(&mut r);
    }
    r
}

fn pgcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    ptrim(&mut x);
    ptrim(&mut y);
    while !y.is_empty() {
        let r = pmod(&x, &y, p);
        x = y;
        y = r;
    }
    if let Some(&lead) = x.last() {
        if lead != 1 {
            let inv = inv_mod_p(lead, p);
            for c in &mut x {
                *c = *c * inv % p;
            }
        }
    }
    x
}

fn ppowmod(a: &[u64], mut exp: u64, f: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut base = pmod(a, f, p);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = pmod(&pmul(&acc, &base, p), f, p);
        }
        base = pmod(&pmul(&base, &base, p), f, p);
        exp >>= 1;
    }
    acc
}

/// Rabin irreducibility test: f of degree m >= 2 is irreducible over GF(p)
/// iff x^(p^m) = x mod f and gcd(x^(p^(m/q)) - x, f) = 1 for every prime q | m.
fn is_irreducible(f: &[u64], p: u64) -> bool {
    let m = f.len() - 1;
    let x = vec![0u64, 1];
    let frob = |steps: usize| -> Vec<u64> {
        let mut t = x.clone();
        for _ in 0..steps {
            t = ppowmod(&t, p, f, p);
        }
        t
    };
    if frob(m) != x {
        return false;
    }
    for q in distinct_prime_factors(m as u64) {
        let diff = psub(&frob(m / q as usize), &x, p);
        if pgcd(&diff, f, p).len() != 1 {
            return false;
        }
    }
    true
}

fn validate_instance(p: u64, m: u32, max_order: u64) -> Result<u64> {
    if p < 3 || !is_prime(p) {
        return Err(Error::NotOddPrime { p });
    }
    if m < 2 {
        return Err(Error::DegreeTooSmall { m });
    }
    let bound = max_order.min(ABSOLUTE_MAX_ORDER);
    match (p as u128).checked_pow(m) {
        Some(order) if order <= bound as u128 => Ok(order as u64),
        _ => Err(Error::OrderTooLarge { p, m, max: bound }),
    }
}

fn validate_modulus(p: u64, m: u32, f: &[u64]) -> Result<()> {
    if f.len() != m as usize + 1 {
        return Err(Error::BadModulus { reason: "degree must equal m" });
    }
    if f[m as usize] != 1 {
        return Err(Error::BadModulus { reason: "must be monic" });
    }
    if f.iter().any(|&c| c >= p) {
        return Err(Error::BadModulus { reason: "coefficients must be reduced mod p" });
    }
    Ok(())
}

/// Lexicographic successor of a base-p digit vector; last digit varies fastest.
fn next_vector(digits: &mut [u64], p: u64) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < p {
            return true;
        }
        *d = 0;
    }
    false
}

fn find_irreducible_bounded(p: u64, m: u32, max_order: u64) -> Result<Vec<u64>> {
    validate_instance(p, m, max_order)?;
    let mut digits = vec![0u64; m as usize];
    loop {
        let mut f = digits.clone();
        f.push(1);
        if is_irreducible(&f, p) {
            return Ok(f);
        }
        if !next_vector(&mut digits, p) {
            unreachable!("an irreducible polynomial of degree m exists for every (p, m)");
        }
    }
}

/// Lexicographically smallest monic irreducible polynomial of degree m over GF(p).
pub fn find_irreducible(p: u64, m: u32) -> Result<Vec<u64>> {
    find_irreducible_bounded(p, m, DEFAULT_MAX_ORDER)
}

// ---------------------------------------------------------------------------
// Extension field elements.
// ---------------------------------------------------------------------------

/// Element of GF(p^m) as a length-m coefficient vector, constant term first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExtFieldElement {
    coeffs: Vec<u64>,
}

impl ExtFieldElement {
    pub(crate) fn from_vec(coeffs: Vec<u64>) -> Self {
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for ExtFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_coeffs(&self.coeffs))
    }
}

fn ext_mul_raw(p: u64, f: &[u64], a: &[u64], b: &[u64]) -> Vec<u64> {
    let m = f.len() - 1;
    let mut prod = vec![0u64; 2 * m - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + ai * bj) % p;
        }
    }
    // Fold x^i = x^(i-m) * (x^m mod f) down from the top; f is monic.
    for i in (m..2 * m - 1).rev() {
        let c = prod[i];
        if c != 0 {
            prod[i] = 0;
            for j in 0..m {
                prod[i - m + j] = (prod[i - m + j] + (p - f[j]) % p * c) % p;
            }
        }
    }
    prod.truncate(m);
    prod
}

fn ext_pow_raw(p: u64, f: &[u64], a: &[u64], mut exp: u64) -> Vec<u64> {
    let m = f.len() - 1;
    let mut acc = vec![0u64; m];
    acc[0] = 1;
    let mut base = a.to_vec();
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ext_mul_raw(p, f, &acc, &base);
        }
        base = ext_mul_raw(p, f, &base, &base);
        exp >>= 1;
    }
    acc
}

fn one_vec(m: usize) -> Vec<u64> {
    let mut v = vec![0u64; m];
    v[0] = 1;
    v
}

/// Exact multiplicative order of a nonzero element (0 is reported as order 0).
fn element_order(p: u64, f: &[u64], a: &[u64], group: u64) -> u64 {
    if a.iter().all(|&c| c == 0) {
        return 0;
    }
    let one = one_vec(f.len() - 1);
    let mut order = group;
    for q in distinct_prime_factors(group) {
        while order % q == 0 && ext_pow_raw(p, f, a, order / q) == one {
            order /= q;
        }
    }
    order
}

fn find_primitive_bounded(p: u64, m: u32, f: &[u64], max_order: u64) -> Result<ExtFieldElement> {
    let order = validate_instance(p, m, max_order)?;
    validate_modulus(p, m, f)?;
    if !is_irreducible(f, p) {
        return Err(Error::Reducible);
    }
    let group = order - 1;
    let factors = distinct_prime_factors(group);
    let one = one_vec(m as usize);
    let mut digits = vec![0u64; m as usize];
    while next_vector(&mut digits, p) {
        let primitive = factors
            .iter()
            .all(|&q| ext_pow_raw(p, f, &digits, group / q) != one);
        if primitive {
            return Ok(ExtFieldElement::from_vec(digits));
        }
    }
    unreachable!("the multiplicative group of a finite field is cyclic");
}

/// First element, in lexicographic coefficient order, of multiplicative order
/// exactly p^m - 1 in GF(p)\[x\]/(f).
pub fn find_primitive(p: u64, m: u32, f: &[u64]) -> Result<ExtFieldElement> {
    find_primitive_bounded(p, m, f, DEFAULT_MAX_ORDER)
}

// ---------------------------------------------------------------------------
// Field context.
// ---------------------------------------------------------------------------

/// Construction parameters for a [`FieldContext`]. `irreducible` and `omega`
/// override the deterministic searches, which lets a known (modulus, generator)
/// pair be reproduced exactly.
#[derive(Debug, Clone)]
pub struct FieldParams {
    pub p: u64,
    pub m: u32,
    pub irreducible: Option<Vec<u64>>,
    pub omega: Option<Vec<u64>>,
    pub max_order: u64,
}

impl FieldParams {
    pub fn new(p: u64, m: u32) -> Self {
        Self { p, m, irreducible: None, omega: None, max_order: DEFAULT_MAX_ORDER }
    }
}

/// Immutable description of GF(p^m) together with the sequence parameters it
/// induces: the modulus f, a primitive element omega, and the common period
/// N = 2(p^m - 1)/(p - 1).
#[derive(Debug, Clone)]
pub struct FieldContext {
    p: u64,
    m: u32,
    f: Vec<u64>,
    omega: ExtFieldElement,
    order: u64,
    n: u64,
}

impl FieldContext {
    pub fn new(params: FieldParams) -> Result<Self> {
        let FieldParams { p, m, irreducible, omega, max_order } = params;
        let order = validate_instance(p, m, max_order)?;
        let f = match irreducible {
            Some(f) => {
                validate_modulus(p, m, &f)?;
                if !is_irreducible(&f, p) {
                    return Err(Error::Reducible);
                }
                f
            }
            None => find_irreducible_bounded(p, m, max_order)?,
        };
        let group = order - 1;
        let omega = match omega {
            Some(w) => {
                let w = normalize_element(p, m, w)?;
                let ord = element_order(p, &f, &w, group);
                if ord != group {
                    return Err(Error::NotPrimitive { order: ord });
                }
                ExtFieldElement::from_vec(w)
            }
            None => find_primitive_bounded(p, m, &f, max_order)?,
        };
        let n = 2 * (order - 1) / (p - 1);
        debug_assert_eq!(n % 2, 0);
        Ok(Self { p, m, f, omega, order, n })
    }

    pub fn with_defaults(p: u64, m: u32) -> Result<Self> {
        Self::new(FieldParams::new(p, m))
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// The monic irreducible modulus, constant term first.
    pub fn modulus(&self) -> &[u64] {
        &self.f
    }

    pub fn omega(&self) -> &ExtFieldElement {
        &self.omega
    }

    /// Field order p^m.
    pub fn order(&self) -> u64 {
        self.order
    }

    /// Common period N = 2(p^m - 1)/(p - 1) of the two sequence types.
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn zero(&self) -> ExtFieldElement {
        ExtFieldElement::from_vec(vec![0; self.m as usize])
    }

    pub fn one(&self) -> ExtFieldElement {
        ExtFieldElement::from_vec(one_vec(self.m as usize))
    }

    /// Build an element from up to m reduced coefficients (shorter vectors are
    /// zero-padded at the high end).
    pub fn element(&self, coeffs: &[u64]) -> Result<ExtFieldElement> {
        Ok(ExtFieldElement::from_vec(normalize_element(self.p, self.m, coeffs.to_vec())?))
    }

    pub fn ext_add(&self, a: &ExtFieldElement, b: &ExtFieldElement) -> ExtFieldElement {
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(&x, &y)| (x + y) % self.p)
            .collect();
        ExtFieldElement::from_vec(coeffs)
    }

    pub fn ext_mul(&self, a: &ExtFieldElement, b: &ExtFieldElement) -> ExtFieldElement {
        ExtFieldElement::from_vec(ext_mul_raw(self.p, &self.f, &a.coeffs, &b.coeffs))
    }

    pub fn ext_pow(&self, a: &ExtFieldElement, exp: u64) -> ExtFieldElement {
        ExtFieldElement::from_vec(ext_pow_raw(self.p, &self.f, &a.coeffs, exp))
    }

    pub fn ext_inverse(&self, a: &ExtFieldElement) -> Result<ExtFieldElement> {
        if a.is_zero() {
            return Err(Error::InverseOfZero);
        }
        Ok(self.ext_pow(a, self.order - 2))
    }

    /// Trace down to the prime field: a + a^p + ... + a^(p^(m-1)).
    pub fn trace(&self, a: &ExtFieldElement) -> u64 {
        let mut acc = a.clone();
        let mut conj = a.clone();
        for _ in 1..self.m {
            conj = self.ext_pow(&conj, self.p);
            acc = self.ext_add(&acc, &conj);
        }
        debug_assert!(acc.coeffs[1..].iter().all(|&c| c == 0), "trace must land in GF(p)");
        acc.coeffs[0]
    }
}

fn normalize_element(p: u64, m: u32, mut coeffs: Vec<u64>) -> Result<Vec<u64>> {
    if coeffs.is_empty() {
        return Err(Error::BadElement { reason: "empty coefficient vector" });
    }
    if coeffs.len() > m as usize {
        return Err(Error::BadElement { reason: "more than m coefficients" });
    }
    if coeffs.iter().any(|&c| c >= p) {
        return Err(Error::BadElement { reason: "coefficients must be reduced mod p" });
    }
    coeffs.resize(m as usize, 0);
    Ok(coeffs)
}

/// The half-period power omega^(N/2) lies in GF(p) and generates GF(p)*.
/// Exposed for verification harnesses; the claim underpins the complement
/// relation between the two sequence types.
pub fn half_period_power_is_prime_primitive(ctx: &FieldContext) -> bool {
    let w = ctx.ext_pow(ctx.omega(), ctx.n() / 2);
    if !w.coeffs()[1..].iter().all(|&c| c == 0) {
        return false;
    }
    let c = w.coeffs()[0];
    c % ctx.p() != 0 && order_mod_prime(c, ctx.p()) == ctx.p() - 1
}

/// gcd helper re-exported for the analysis modules.
pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    gcd_u64(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Exhaustive quadratic-residue search, the brute-force counterpart of
    /// Euler's criterion.
    fn legendre_brute(p: u64, a: u64) -> i8 {
        let r = a % p;
        if r == 0 {
            return 0;
        }
        for x in 1..p {
            if x * x % p == r {
                return 1;
            }
        }
        -1
    }

    /// Root search over GF(p); enough to expose the reducible fixtures used here.
    fn has_root(f: &[u64], p: u64) -> bool {
        (0..p).any(|x| {
            let mut acc = 0u64;
            for &c in f.iter().rev() {
                acc = (acc * x + c) % p;
            }
            acc == 0
        })
    }

    fn all_elements(ctx: &FieldContext) -> Vec<ExtFieldElement> {
        let m = ctx.m() as usize;
        let p = ctx.p();
        let mut digits = vec![0u64; m];
        let mut out = vec![ExtFieldElement::from_vec(digits.clone())];
        while next_vector(&mut digits, p) {
            out.push(ExtFieldElement::from_vec(digits.clone()));
        }
        out
    }

    fn example1() -> FieldContext {
        FieldContext::new(FieldParams {
            irreducible: Some(vec![3, 2, 1]),
            omega: Some(vec![0, 4]),
            ..FieldParams::new(5, 2)
        })
        .unwrap()
    }

    #[test]
    fn legendre_small_cases() {
        assert_eq!(legendre(5, 0).unwrap(), 0);
        assert_eq!(legendre(5, 4).unwrap(), 1);
        // frozen from the exhaustive search: no x in 1..5 has x^2 = 2 mod 5
        assert_eq!(legendre_brute(5, 2), -1);
        assert_eq!(legendre(5, 2).unwrap(), -1);
        assert_eq!(legendre(7, -1).unwrap(), -1);
        assert!(matches!(legendre(4, 1), Err(Error::NotOddPrime { p: 4 })));
        assert!(matches!(legendre(2, 1), Err(Error::NotOddPrime { p: 2 })));
    }

    #[test]
    fn legendre_matches_brute_force_and_is_multiplicative() {
        for p in [3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101] {
            for a in 0..p {
                assert_eq!(legendre(p, a as i64).unwrap(), legendre_brute(p, a), "p={p} a={a}");
            }
            for a in 0..p {
                for b in 0..p {
                    let lhs = legendre(p, (a * b) as i64).unwrap();
                    let rhs = legendre(p, a as i64).unwrap() * legendre(p, b as i64).unwrap();
                    assert_eq!(lhs, rhs, "p={p} a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn underline_mod_cases() {
        assert_eq!(underline_mod(5, 3).unwrap(), 2);
        assert_eq!(underline_mod(-3, 3).unwrap(), 3);
        assert_eq!(underline_mod(0, 7).unwrap(), 7);
        assert_eq!(underline_mod(-7, 3).unwrap(), 2);
        assert!(matches!(underline_mod(4, 1), Err(Error::BadUnderlineModulus { n: 1 })));
        assert!(matches!(underline_mod(4, 0), Err(Error::BadUnderlineModulus { n: 0 })));
    }

    #[test]
    fn coefficient_strings_round_trip() {
        assert_eq!(parse_coeffs("3,2,1").unwrap(), vec![3, 2, 1]);
        assert_eq!(parse_coeffs(" 0 , 4 ").unwrap(), vec![0, 4]);
        assert_eq!(format_coeffs(&[3, 2, 1]), "3,2,1");
        assert!(parse_coeffs("").is_err());
        assert!(parse_coeffs("1,,2").is_err());
        assert!(parse_coeffs("1,x").is_err());
    }

    #[test]
    fn accepts_known_irreducibles() {
        // x^2 + 2x + 3 over GF(5) and x^3 + 2x^2 + 1 over GF(3)
        assert!(!has_root(&[3, 2, 1], 5));
        assert!(is_irreducible(&[3, 2, 1], 5));
        assert!(!has_root(&[1, 0, 2, 1], 3));
        assert!(is_irreducible(&[1, 0, 2, 1], 3));
        assert!(FieldContext::new(FieldParams {
            irreducible: Some(vec![1, 0, 2, 1]),
            ..FieldParams::new(3, 3)
        })
        .is_ok());
    }

    #[test]
    fn rejects_reducible_override() {
        // x^2 + 1 = (x + 2)(x + 3) over GF(5); the root search agrees.
        assert!(has_root(&[1, 0, 1], 5));
        let err = FieldContext::new(FieldParams {
            irreducible: Some(vec![1, 0, 1]),
            ..FieldParams::new(5, 2)
        })
        .unwrap_err();
        assert_eq!(err, Error::Reducible);
    }

    #[test]
    fn rejects_malformed_modulus() {
        let make = |f: Vec<u64>| {
            FieldContext::new(FieldParams { irreducible: Some(f), ..FieldParams::new(5, 2) })
        };
        assert!(matches!(make(vec![3, 2, 1, 0]).unwrap_err(), Error::BadModulus { .. }));
        assert!(matches!(make(vec![3, 2, 2]).unwrap_err(), Error::BadModulus { .. }));
        assert!(matches!(make(vec![7, 2, 1]).unwrap_err(), Error::BadModulus { .. }));
    }

    #[test]
    fn find_irreducible_is_lexicographic_and_deterministic() {
        // Smallest monic irreducible quadratic over GF(5): x^2 + x + 1
        // (everything with constant term 0 has the root 0, and x^2 + 1
        // factors as (x+2)(x+3)).
        let f = find_irreducible(5, 2).unwrap();
        assert_eq!(f, vec![1, 1, 1]);
        assert!(!has_root(&f, 5));
        assert_eq!(find_irreducible(5, 2).unwrap(), f);
        // Smallest cubic over GF(3): x^3 + 2x^2 + 1 (x^3 + 1 and x^3 + x^2 + 1
        // both have roots).
        let g = find_irreducible(3, 3).unwrap();
        assert_eq!(g, vec![1, 0, 2, 1]);
        assert!(!has_root(&g, 3));
    }

    #[test]
    fn find_irreducible_validates_parameters() {
        assert!(matches!(find_irreducible(4, 2), Err(Error::NotOddPrime { p: 4 })));
        assert!(matches!(find_irreducible(2, 3), Err(Error::NotOddPrime { p: 2 })));
        assert!(matches!(find_irreducible(5, 1), Err(Error::DegreeTooSmall { m: 1 })));
        assert!(matches!(find_irreducible(3, 21), Err(Error::OrderTooLarge { .. })));
    }

    #[test]
    fn primitive_element_search_and_overrides() {
        // omega = 4a accepted for Example 1 parameters.
        let ctx = example1();
        assert_eq!(ctx.omega().coeffs(), &[0, 4]);
        assert_eq!(ctx.n(), 12);
        assert_eq!(ctx.order(), 25);

        // The identity has order 1 and must be rejected.
        let err = FieldContext::new(FieldParams {
            irreducible: Some(vec![3, 2, 1]),
            omega: Some(vec![1, 0]),
            ..FieldParams::new(5, 2)
        })
        .unwrap_err();
        assert_eq!(err, Error::NotPrimitive { order: 1 });

        // omega = 2a^2 accepted at (3, 3).
        let ctx = FieldContext::new(FieldParams {
            irreducible: Some(vec![1, 0, 2, 1]),
            omega: Some(vec![0, 0, 2]),
            ..FieldParams::new(3, 3)
        })
        .unwrap();
        assert_eq!(ctx.n(), 26);

        // Searched generator really has full order: walk the cycle.
        let f = find_irreducible(5, 2).unwrap();
        let w = find_primitive(5, 2, &f).unwrap();
        assert_eq!(find_primitive(5, 2, &f).unwrap(), w);
        let ctx = FieldContext::new(FieldParams {
            irreducible: Some(f),
            omega: Some(w.coeffs().to_vec()),
            ..FieldParams::new(5, 2)
        })
        .unwrap();
        let mut cur = ctx.one();
        let mut steps = 0u64;
        loop {
            cur = ctx.ext_mul(&cur, ctx.omega());
            steps += 1;
            if cur == ctx.one() {
                break;
            }
        }
        assert_eq!(steps, 24);
    }

    #[test]
    fn find_primitive_rejects_reducible_modulus() {
        assert_eq!(find_primitive(5, 2, &[1, 0, 1]).unwrap_err(), Error::Reducible);
    }

    #[test]
    fn ext_mul_examples() {
        let ctx = example1();
        let alpha = ctx.element(&[0, 1]).unwrap();
        // alpha^2 = -2 alpha - 3 = 3 alpha + 2 (mod 5), by polynomial division.
        assert_eq!(ctx.ext_mul(&alpha, &alpha).coeffs(), &[2, 3]);
        let a = ctx.element(&[4, 2]).unwrap();
        assert_eq!(ctx.ext_mul(&a, &ctx.one()), a);
        assert!(ctx.ext_mul(&a, &ctx.zero()).is_zero());
    }

    #[test]
    fn ext_mul_ring_axioms_exhaustive_gf9() {
        let ctx = FieldContext::with_defaults(3, 2).unwrap();
        let elems = all_elements(&ctx);
        for a in &elems {
            for b in &elems {
                assert_eq!(ctx.ext_mul(a, b), ctx.ext_mul(b, a));
                for c in &elems {
                    let lhs = ctx.ext_mul(&ctx.ext_mul(a, b), c);
                    let rhs = ctx.ext_mul(a, &ctx.ext_mul(b, c));
                    assert_eq!(lhs, rhs);
                    let dist_l = ctx.ext_mul(a, &ctx.ext_add(b, c));
                    let dist_r = ctx.ext_add(&ctx.ext_mul(a, b), &ctx.ext_mul(a, c));
                    assert_eq!(dist_l, dist_r);
                }
            }
        }
    }

    #[test]
    fn inverses_exhaustive() {
        for ctx in [FieldContext::with_defaults(3, 5).unwrap(), FieldContext::with_defaults(5, 2).unwrap()] {
            for a in all_elements(&ctx) {
                if a.is_zero() {
                    assert_eq!(ctx.ext_inverse(&a).unwrap_err(), Error::InverseOfZero);
                } else {
                    let inv = ctx.ext_inverse(&a).unwrap();
                    assert_eq!(ctx.ext_mul(&a, &inv), ctx.one());
                }
            }
        }
    }

    #[test]
    fn trace_examples() {
        let ctx = example1();
        assert_eq!(ctx.trace(&ctx.zero()), 0);
        // Base-field constant c has trace m*c mod p.
        assert_eq!(ctx.trace(&ctx.one()), 2);
        assert_eq!(ctx.trace(&ctx.element(&[3]).unwrap()), 6 % 5);

        // Oracle: explicit conjugate sum alpha + alpha^5 by repeated multiplication.
        let alpha = ctx.element(&[0, 1]).unwrap();
        let mut alpha5 = alpha.clone();
        for _ in 1..5 {
            alpha5 = ctx.ext_mul(&alpha5, &alpha);
        }
        let conj_sum = ctx.ext_add(&alpha, &alpha5);
        assert!(conj_sum.coeffs()[1..].iter().all(|&c| c == 0));
        assert_eq!(ctx.trace(&alpha), conj_sum.coeffs()[0]);
        assert_eq!(ctx.trace(&alpha), 3);
    }

    #[test]
    fn trace_is_additive_and_frobenius_invariant() {
        for ctx in [FieldContext::with_defaults(3, 3).unwrap(), FieldContext::with_defaults(5, 2).unwrap()] {
            let elems = all_elements(&ctx);
            for a in &elems {
                let frob = ctx.ext_pow(a, ctx.p());
                assert_eq!(ctx.trace(&frob), ctx.trace(a));
            }
            for a in &elems {
                for b in &elems {
                    let lhs = ctx.trace(&ctx.ext_add(a, b));
                    let rhs = (ctx.trace(a) + ctx.trace(b)) % ctx.p();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn half_period_power_lands_in_prime_field() {
        for ctx in [
            example1(),
            FieldContext::with_defaults(3, 3).unwrap(),
            FieldContext::with_defaults(7, 2).unwrap(),
            FieldContext::with_defaults(11, 2).unwrap(),
        ] {
            assert!(half_period_power_is_prime_primitive(&ctx));
        }
    }

    #[test]
    fn element_validation() {
        let ctx = example1();
        assert!(matches!(ctx.element(&[]), Err(Error::BadElement { .. })));
        assert!(matches!(ctx.element(&[0, 0, 1]), Err(Error::BadElement { .. })));
        assert!(matches!(ctx.element(&[5, 0]), Err(Error::BadElement { .. })));
        // Short vectors are padded.
        assert_eq!(ctx.element(&[4]).unwrap().coeffs(), &[4, 0]);
    }

    #[test]
    fn contexts_are_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<FieldContext>();
        assert_send_sync::<ExtFieldElement>();
        assert_send_sync::<crate::sequence::BinarySequence>();
    }

    #[test]
    fn n_is_even_across_instances() {
        for (p, m) in [(3, 2), (3, 3), (5, 2), (5, 3), (7, 2), (11, 2), (13, 2)] {
            let ctx = FieldContext::with_defaults(p, m).unwrap();
            assert_eq!(ctx.n() % 2, 0);
            assert_eq!(ctx.n(), 2 * (ctx.order() - 1) / (p - 1));
        }
    }
}
