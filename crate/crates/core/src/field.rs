//! Exact arithmetic in finite fields `F_{p^k}`.
//!
//! Elements are stored as their integer encoding `sum c_i p^i`, where
//! `c_0 + c_1 g + ... + c_{k-1} g^{k-1}` is the element in the power basis of a
//! root `g` of the field modulus. The same integer is used as the decimal
//! encoding in JSON reports.
//!
//! The modulus is the lexicographically smallest monic irreducible polynomial
//! of degree `k`, comparing the coefficient tuple `(c_0, ..., c_{k-1})` from
//! low to high degree. For `k = 1` this is the polynomial `x`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use thiserror::Error;

/// Largest field order for which exp/log tables are built.
const TABLE_LIMIT: u64 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    DegreeZero,
    #[error("field order {p}^{k} does not fit in 64 bits")]
    SizeOverflow { p: u64, k: u32 },
    #[error("operands belong to different fields (F_{a} vs F_{b})")]
    MixedFields { a: String, b: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("bad field element '{text}': {reason}")]
    Parse { text: String, reason: String },
}

/// A field element as its integer encoding.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fq(pub u64);

impl Fq {
    pub const ZERO: Fq = Fq(0);
    pub const ONE: Fq = Fq(1);

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// Descriptor of `F_{p^k}`: characteristic, degree, and modulus.
#[derive(Debug)]
pub struct FieldDesc {
    p: u64,
    k: u32,
    order: u64,
    /// Monic modulus, coefficients low to high, length `k + 1`.
    modulus: Vec<u64>,
    tables: Option<Tables>,
}

#[derive(Debug)]
struct Tables {
    exp: Vec<u32>,
    log: Vec<u32>,
}

/// Shared handle to a finite field. Cloning is cheap.
#[derive(Clone)]
pub struct Field(Arc<FieldDesc>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        // the modulus is a function of (p, k)
        self.0.p == other.0.p && self.0.k == other.0.k
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.name())
    }
}

impl Field {
    /// Constructs `F_{p^k}` with the deterministic modulus choice.
    pub fn new(p: u64, k: u32) -> Result<Field, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if k == 0 {
            return Err(FieldError::DegreeZero);
        }
        let order = p.checked_pow(k).ok_or(FieldError::SizeOverflow { p, k })?;
        static CACHE: OnceLock<Mutex<HashMap<(u64, u32), Field>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(f) = cache.lock().unwrap().get(&(p, k)) {
            return Ok(f.clone());
        }
        let modulus = if k == 1 {
            vec![0, 1]
        } else {
            smallest_irreducible(p, k as usize)
        };
        debug_assert!(is_irreducible(p, &modulus));
        let mut desc = FieldDesc {
            p,
            k,
            order,
            modulus,
            tables: None,
        };
        if k > 1 && order <= TABLE_LIMIT {
            desc.tables = Some(build_tables(&desc));
        }
        let f = Field(Arc::new(desc));
        cache.lock().unwrap().insert((p, k), f.clone());
        Ok(f)
    }

    pub fn prime(p: u64) -> Result<Field, FieldError> {
        Field::new(p, 1)
    }

    pub fn p(&self) -> u64 {
        self.0.p
    }

    pub fn k(&self) -> u32 {
        self.0.k
    }

    pub fn order(&self) -> u64 {
        self.0.order
    }

    /// The modulus coefficients, low to high, monic of length `k + 1`.
    pub fn modulus(&self) -> &[u64] {
        &self.0.modulus
    }

    /// Short name such as `2^2`.
    pub fn name(&self) -> String {
        if self.0.k == 1 {
            format!("{}", self.0.p)
        } else {
            format!("{}^{}", self.0.p, self.0.k)
        }
    }

    pub fn desc(&self) -> &FieldDesc {
        &self.0
    }

    /// The root `g` of the modulus.
    pub fn generator(&self) -> Fq {
        if self.0.k == 1 {
            Fq(0)
        } else {
            Fq(self.0.p)
        }
    }

    pub fn from_int(&self, n: i64) -> Fq {
        let p = self.0.p as i128;
        Fq((n as i128).rem_euclid(p) as u64)
    }

    pub fn from_coeffs(&self, coeffs: &[u64]) -> Fq {
        let p = self.0.p;
        let mut value = 0u64;
        for &c in coeffs.iter().take(self.0.k as usize).rev() {
            value = value * p + c % p;
        }
        Fq(value)
    }

    /// Coordinates of `a` in the power basis, length exactly `k`.
    pub fn coeffs(&self, a: Fq) -> Vec<u64> {
        let p = self.0.p;
        let mut v = a.0;
        (0..self.0.k)
            .map(|_| {
                let c = v % p;
                v /= p;
                c
            })
            .collect()
    }

    #[inline]
    pub fn contains(&self, a: Fq) -> bool {
        a.0 < self.0.order
    }

    pub fn elements(&self) -> impl Iterator<Item = Fq> {
        (0..self.0.order).map(Fq)
    }

    #[inline]
    pub fn add(&self, a: Fq, b: Fq) -> Fq {
        let d = &*self.0;
        if d.k == 1 {
            return Fq(add_mod(a.0, b.0, d.p));
        }
        if d.p == 2 {
            return Fq(a.0 ^ b.0);
        }
        let (mut x, mut y) = (a.0, b.0);
        let mut out = 0u64;
        let mut place = 1u64;
        for i in 0..d.k {
            let c = add_mod(x % d.p, y % d.p, d.p);
            out += c * place;
            x /= d.p;
            y /= d.p;
            if i + 1 < d.k {
                place *= d.p;
            }
        }
        Fq(out)
    }

    #[inline]
    pub fn neg(&self, a: Fq) -> Fq {
        let d = &*self.0;
        if d.k == 1 {
            return Fq(if a.0 == 0 { 0 } else { d.p - a.0 });
        }
        if d.p == 2 {
            return a;
        }
        let mut x = a.0;
        let mut out = 0u64;
        let mut place = 1u64;
        for i in 0..d.k {
            let c = x % d.p;
            out += (if c == 0 { 0 } else { d.p - c }) * place;
            x /= d.p;
            if i + 1 < d.k {
                place *= d.p;
            }
        }
        Fq(out)
    }

    #[inline]
    pub fn sub(&self, a: Fq, b: Fq) -> Fq {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Fq, b: Fq) -> Fq {
        let d = &*self.0;
        if a.0 == 0 || b.0 == 0 {
            return Fq(0);
        }
        if d.k == 1 {
            return Fq(mul_mod(a.0, b.0, d.p));
        }
        if let Some(t) = &d.tables {
            let s = t.log[a.0 as usize] as u64 + t.log[b.0 as usize] as u64;
            let n = d.order - 1;
            return Fq(t.exp[(s % n) as usize] as u64);
        }
        let prod = poly_mul(&self.coeffs(a), &self.coeffs(b), d.p);
        let r = poly_rem(&prod, &d.modulus, d.p);
        self.from_coeffs(&r)
    }

    /// `a * b + c`, the elimination kernel.
    #[inline]
    pub fn mul_add(&self, a: Fq, b: Fq, c: Fq) -> Fq {
        self.add(self.mul(a, b), c)
    }

    pub fn inv(&self, a: Fq) -> Result<Fq, FieldError> {
        if a.0 == 0 {
            return Err(FieldError::DivisionByZero);
        }
        let d = &*self.0;
        if let Some(t) = &d.tables {
            let n = d.order - 1;
            let l = t.log[a.0 as usize] as u64;
            return Ok(Fq(t.exp[((n - l) % n) as usize] as u64));
        }
        // a^(q-2)
        Ok(self.pow(a, d.order as u128 - 2))
    }

    pub fn pow(&self, a: Fq, mut e: u128) -> Fq {
        let mut base = a;
        let mut acc = Fq::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `a^(p^n)`.
    pub fn frobenius(&self, a: Fq, n: u32) -> Fq {
        // the Frobenius has order k
        let steps = n % self.0.k;
        (0..steps).fold(a, |x, _| self.pow(x, self.0.p as u128))
    }

    /// The unique `b` with `b^(p^n) = a`.
    pub fn frobenius_inverse(&self, a: Fq, n: u32) -> Fq {
        let k = self.0.k;
        let steps = (k - n % k) % k;
        (0..steps).fold(a, |x, _| self.pow(x, self.0.p as u128))
    }

    /// Formats in polynomial-in-`g` notation, highest degree first.
    pub fn format(&self, a: Fq) -> String {
        if a.0 == 0 {
            return "0".to_string();
        }
        let coeffs = self.coeffs(a);
        let mut terms = Vec::new();
        for (deg, &c) in coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let term = match (deg, c) {
                (0, c) => c.to_string(),
                (1, 1) => "g".to_string(),
                (1, c) => format!("{c}*g"),
                (d, 1) => format!("g^{d}"),
                (d, c) => format!("{c}*g^{d}"),
            };
            terms.push(term);
        }
        terms.join("+")
    }

    /// Parses polynomial-in-`g` notation (no parameters).
    pub fn parse(&self, text: &str) -> Result<Fq, FieldError> {
        self.parse_with(text, &|_| None)
    }

    /// Parses a scalar expression.
    ///
    /// Grammar: sums and differences of products of factors, where a factor
    /// is an integer, `g`, a name known to `resolve`, or a parenthesised
    /// expression, optionally raised to an integer power (`^-1` inverts).
    pub fn parse_with(
        &self,
        text: &str,
        resolve: &dyn Fn(&str) -> Option<Fq>,
    ) -> Result<Fq, FieldError> {
        let mut parser = ExprParser {
            field: self,
            src: text.as_bytes(),
            pos: 0,
            resolve,
        };
        let v = parser.expr().map_err(|reason| FieldError::Parse {
            text: text.to_string(),
            reason,
        })?;
        parser.skip_ws();
        if parser.pos != parser.src.len() {
            return Err(FieldError::Parse {
                text: text.to_string(),
                reason: format!("unexpected input at offset {}", parser.pos),
            });
        }
        Ok(v)
    }

    pub fn elem(&self, value: Fq) -> FieldElem {
        debug_assert!(self.contains(value));
        FieldElem {
            field: self.clone(),
            value,
        }
    }
}

struct ExprParser<'a> {
    field: &'a Field,
    src: &'a [u8],
    pos: usize,
    resolve: &'a dyn Fn(&str) -> Option<Fq>,
}

impl ExprParser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Fq, String> {
        let f = self.field;
        let mut negate = false;
        if self.peek() == Some(b'-') {
            self.pos += 1;
            negate = true;
        } else if self.peek() == Some(b'+') {
            self.pos += 1;
        }
        let mut acc = self.term()?;
        if negate {
            acc = f.neg(acc);
        }
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = f.add(acc, t);
                }
                Some(b'-') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = f.sub(acc, t);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Fq, String> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let x = self.factor()?;
            acc = self.field.mul(acc, x);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Fq, String> {
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        let negative = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let e = self.integer()?;
        let v = self.field.pow(base, e as u128);
        if negative {
            self.field
                .inv(v)
                .map_err(|_| "zero raised to a negative power".to_string())
        } else {
            Ok(v)
        }
    }

    fn integer(&mut self) -> Result<u64, String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(format!("expected integer at offset {start}"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse::<u64>()
            .map_err(|e| e.to_string())
    }

    fn atom(&mut self) -> Result<Fq, String> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err("missing ')'".to_string());
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(Fq(n % self.field.p()))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                if name == "g" {
                    if self.field.k() == 1 {
                        return Err("'g' is undefined over a prime field".to_string());
                    }
                    return Ok(self.field.generator());
                }
                (self.resolve)(name).ok_or_else(|| format!("unknown name '{name}'"))
            }
            Some(c) => Err(format!("unexpected '{}' at offset {}", c as char, self.pos)),
            None => Err("unexpected end of input".to_string()),
        }
    }
}

/// A field element bundled with its field, for checked arithmetic.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElem {
    field: Field,
    value: Fq,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Mul,
    Neg,
    Inv,
}

impl FieldElem {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn value(&self) -> Fq {
        self.value
    }

    pub fn coeffs(&self) -> Vec<u64> {
        self.field.coeffs(self.value)
    }

    fn same_field(&self, other: &FieldElem) -> Result<(), FieldError> {
        if self.field != other.field {
            return Err(FieldError::MixedFields {
                a: self.field.name(),
                b: other.field.name(),
            });
        }
        Ok(())
    }

    /// Binary operations use `other`; unary ones ignore it.
    pub fn arith(&self, other: &FieldElem, op: ArithOp) -> Result<FieldElem, FieldError> {
        self.same_field(other)?;
        let f = &self.field;
        let value = match op {
            ArithOp::Add => f.add(self.value, other.value),
            ArithOp::Mul => f.mul(self.value, other.value),
            ArithOp::Neg => f.neg(self.value),
            ArithOp::Inv => f.inv(self.value)?,
        };
        Ok(f.elem(value))
    }

    pub fn add(&self, other: &FieldElem) -> Result<FieldElem, FieldError> {
        self.arith(other, ArithOp::Add)
    }

    pub fn mul(&self, other: &FieldElem) -> Result<FieldElem, FieldError> {
        self.arith(other, ArithOp::Mul)
    }

    pub fn neg(&self) -> FieldElem {
        self.field.elem(self.field.neg(self.value))
    }

    pub fn inv(&self) -> Result<FieldElem, FieldError> {
        Ok(self.field.elem(self.field.inv(self.value)?))
    }

    pub fn frobenius(&self, n: u32) -> FieldElem {
        self.field.elem(self.field.frobenius(self.value, n))
    }

    pub fn frobenius_inverse(&self, n: u32) -> FieldElem {
        self.field.elem(self.field.frobenius_inverse(self.value, n))
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.field.format(self.value))
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {:?}", self, self.field)
    }
}

#[inline]
fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let (s, overflow) = a.overflowing_add(b);
    if overflow || s >= p {
        s.wrapping_sub(p)
    } else {
        s
    }
}

#[inline]
fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const SMALL: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &q in &SMALL {
        if n.is_multiple_of(q) {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &SMALL {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

// Dense polynomials over F_p, coefficients low to high. Results are trimmed.

fn trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = add_mod(out[i + j], mul_mod(x, y, p), p);
        }
    }
    trim(out)
}

/// Remainder modulo a monic polynomial.
fn poly_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r = trim(a.to_vec());
    let dm = m.len() - 1;
    let lead_inv = pow_mod(*m.last().unwrap(), p - 2, p);
    while r.len() > dm {
        let shift = r.len() - 1 - dm;
        let c = mul_mod(*r.last().unwrap(), lead_inv, p);
        for (i, &mi) in m.iter().enumerate() {
            let t = mul_mod(c, mi, p);
            r[shift + i] = (r[shift + i] + p - t) % p;
        }
        r = trim(r);
    }
    r
}

fn poly_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(out)
}

fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let inv = pow_mod(*b.last().unwrap(), p - 2, p);
        let monic: Vec<u64> = b.iter().map(|&c| mul_mod(c, inv, p)).collect();
        let r = poly_rem(&a, &monic, p);
        a = monic;
        b = r;
    }
    a
}

fn poly_powmod(base: &[u64], mut e: u64, m: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = poly_rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_rem(&poly_mul(&acc, &b, p), m, p);
        }
        b = poly_rem(&poly_mul(&b, &b, p), m, p);
        e >>= 1;
    }
    acc
}

/// Rabin's irreducibility test for a monic polynomial of degree `k >= 1`.
fn is_irreducible(p: u64, f: &[u64]) -> bool {
    let k = f.len() - 1;
    if k == 1 {
        return true;
    }
    let x = vec![0u64, 1];
    // x^(p^j) mod f for j = 0..=k
    let mut powers = vec![poly_rem(&x, f, p)];
    for j in 1..=k {
        let prev = &powers[j - 1];
        powers.push(poly_powmod(prev, p, f, p));
    }
    if trim(powers[k].clone()) != poly_rem(&x, f, p) {
        return false;
    }
    let mut m = k;
    let mut r = 2;
    let mut prime_factors = Vec::new();
    while r * r <= m {
        if m.is_multiple_of(r) {
            prime_factors.push(r);
            while m.is_multiple_of(r) {
                m /= r;
            }
        }
        r += 1;
    }
    if m > 1 {
        prime_factors.push(m);
    }
    prime_factors.into_iter().all(|r| {
        let h = poly_sub(&powers[k / r], &x, p);
        poly_gcd(&h, f, p).len() == 1
    })
}

fn smallest_irreducible(p: u64, k: usize) -> Vec<u64> {
    // lexicographic over (c_0, ..., c_{k-1}) with c_0 most significant
    let mut tail = vec![0u64; k];
    // a zero constant term means divisibility by x
    tail[0] = 1;
    loop {
        let mut f = tail.clone();
        f.push(1);
        if is_irreducible(p, &f) {
            return f;
        }
        let mut i = k;
        loop {
            i -= 1;
            tail[i] += 1;
            if tail[i] < p {
                break;
            }
            tail[i] = 0;
            assert!(i > 0, "no irreducible polynomial of degree {k} over F_{p}");
        }
    }
}

fn build_tables(d: &FieldDesc) -> Tables {
    let q = d.order;
    let k = d.k as usize;
    let to_int = |c: &[u64]| -> u64 {
        let mut v = 0u64;
        for &x in c.iter().take(k).rev() {
            v = v * d.p + x;
        }
        v
    };
    let to_coeffs = |mut v: u64| -> Vec<u64> {
        (0..k)
            .map(|_| {
                let c = v % d.p;
                v /= d.p;
                c
            })
            .collect()
    };
    let mut factors = Vec::new();
    let mut m = q - 1;
    let mut r = 2;
    while r * r <= m {
        if m.is_multiple_of(r) {
            factors.push(r);
            while m.is_multiple_of(r) {
                m /= r;
            }
        }
        r += 1;
    }
    if m > 1 {
        factors.push(m);
    }
    for cand in 2..q {
        let c = to_coeffs(cand);
        let primitive = factors
            .iter()
            .all(|&r| trim(poly_powmod(&c, (q - 1) / r, &d.modulus, d.p)) != [1]);
        if !primitive {
            continue;
        }
        let mut exp = Vec::with_capacity((q - 1) as usize);
        let mut x = vec![1u64];
        let mut ok = true;
        for i in 0..q - 1 {
            let v = to_int(&x);
            if i > 0 && v == 1 {
                ok = false;
                break;
            }
            exp.push(v as u32);
            x = poly_rem(&poly_mul(&x, &c, d.p), &d.modulus, d.p);
        }
        if ok {
            let mut log = vec![0u32; q as usize];
            for (i, &e) in exp.iter().enumerate() {
                log[e as usize] = i as u32;
            }
            return Tables { exp, log };
        }
    }
    unreachable!("multiplicative group of a finite field is cyclic")
}
