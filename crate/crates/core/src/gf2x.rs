//! Binary polynomials and arithmetic in GF(2^L).
//!
//! A polynomial over GF(2) is stored as a bitmask where bit `i` is the
//! coefficient of `x^i`, so `0x25` is `x^5 + x^2 + 1`. Field elements use the
//! same encoding in the polynomial basis `{1, α, …, α^(L-1)}`: bit `i` is the
//! coefficient of `α^i`.
//!
//! ```text
//! 0b0000_0111 = 0x07 → x^2 + x + 1
//! 0b0000_1011 = 0x0b → x^3 + x + 1
//! 0b0010_0101 = 0x25 → x^5 + x^2 + 1
//! ```

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use thiserror::Error;

/// Degrees accepted by [`validate_primitive`].
pub const DEFAULT_DEGREE_RANGE: RangeInclusive<u32> = 2..=24;

/// Largest degree the `u32` element representation can hold.
pub const MAX_SUPPORTED_DEGREE: u32 = 31;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("DegreeOutOfRange: degree {degree} is outside {min}..={max}")]
    DegreeOutOfRange { degree: u32, min: u32, max: u32 },
    #[error("NotIrreducible: {0}")]
    NotIrreducible(String),
    #[error("NotPrimitive: {0}")]
    NotPrimitive(String),
    #[error("FieldMismatch: elements belong to fields {left:#x} and {right:#x}")]
    FieldMismatch { left: u64, right: u64 },
    #[error("ZeroInverse: zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("ZeroLog: the discrete logarithm of zero is undefined")]
    ZeroLog,
    #[error("element {coords:#x} has more than {degree} coordinates")]
    CoordinatesOutOfRange { coords: u64, degree: u32 },
    #[error("bad polynomial: {0}")]
    Parse(#[from] PolyParseError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyParseError {
    #[error("empty polynomial")]
    Empty,
    #[error("unrecognised term `{0}`")]
    BadTerm(String),
    #[error("bad hex mask `{0}`")]
    BadHex(String),
    #[error("term x^{0} appears twice")]
    DuplicateTerm(u32),
    #[error("degree {0} exceeds the supported maximum {MAX_SUPPORTED_DEGREE}")]
    TooLarge(u32),
}

/// An unvalidated polynomial over GF(2).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryPoly(u64);

impl BinaryPoly {
    pub const fn from_mask(mask: u64) -> Self {
        BinaryPoly(mask)
    }

    pub const fn mask(self) -> u64 {
        self.0
    }

    /// `None` for the zero polynomial.
    pub fn degree(self) -> Option<u32> {
        poly_degree(self.0)
    }

    pub fn coefficient(self, i: u32) -> bool {
        i < 64 && (self.0 >> i) & 1 == 1
    }

    /// Hex mask form, e.g. `0x25`.
    pub fn to_hex(self) -> String {
        format!("{:#x}", self.0)
    }
}

impl fmt::Display for BinaryPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return f.write_str("0");
        }
        let mut first = true;
        for i in (0..64).rev().filter(|&i| self.coefficient(i)) {
            if !first {
                f.write_str("+")?;
            }
            first = false;
            match i {
                0 => f.write_str("1")?,
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for BinaryPoly {
    type Err = PolyParseError;

    /// Accepts either the symbolic form `x^5+x^2+1` or a hex mask `0x25`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(PolyParseError::Empty);
        }
        if let Some(hex) = compact
            .strip_prefix("0x")
            .or_else(|| compact.strip_prefix("0X"))
        {
            let mask = u64::from_str_radix(hex, 16)
                .map_err(|_| PolyParseError::BadHex(compact.clone()))?;
            if let Some(d) = poly_degree(mask) {
                if d > MAX_SUPPORTED_DEGREE {
                    return Err(PolyParseError::TooLarge(d));
                }
            }
            return Ok(BinaryPoly(mask));
        }

        let mut mask = 0u64;
        for term in compact.split('+') {
            let exp = parse_term(term)?;
            if exp > MAX_SUPPORTED_DEGREE {
                return Err(PolyParseError::TooLarge(exp));
            }
            if mask >> exp & 1 == 1 {
                return Err(PolyParseError::DuplicateTerm(exp));
            }
            mask |= 1 << exp;
        }
        Ok(BinaryPoly(mask))
    }
}

fn parse_term(term: &str) -> Result<u32, PolyParseError> {
    let bad = || PolyParseError::BadTerm(term.to_string());
    match term {
        "1" => Ok(0),
        "x" | "X" => Ok(1),
        _ => {
            let rest = term
                .strip_prefix("x^")
                .or_else(|| term.strip_prefix("X^"))
                .ok_or_else(bad)?;
            if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            rest.parse::<u32>().map_err(|_| bad())
        }
    }
}

fn poly_degree(mask: u64) -> Option<u32> {
    (mask != 0).then(|| 63 - mask.leading_zeros())
}

/// Carry-less product of two binary polynomials of degree < 32.
fn clmul(a: u64, b: u64) -> u64 {
    debug_assert!(a < 1 << 32 && b < 1 << 32);
    let mut acc = 0u64;
    let mut b = b;
    let mut shift = 0;
    while b != 0 {
        if b & 1 == 1 {
            acc ^= a << shift;
        }
        b >>= 1;
        shift += 1;
    }
    acc
}

/// Remainder of `a` divided by `m` over GF(2).
fn poly_rem(mut a: u64, m: u64) -> u64 {
    let dm = poly_degree(m).expect("division by the zero polynomial");
    while let Some(da) = poly_degree(a) {
        if da < dm {
            break;
        }
        a ^= m << (da - dm);
    }
    a
}

fn poly_gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = poly_rem(a, b);
        a = b;
        b = r;
    }
    a
}

fn mul_mod(a: u64, b: u64, modulus: u64) -> u64 {
    poly_rem(clmul(a, b), modulus)
}

/// `x^e mod modulus`.
fn x_pow_mod(mut e: u64, modulus: u64) -> u64 {
    let mut result = poly_rem(1, modulus);
    let mut base = poly_rem(0b10, modulus);
    while e > 0 {
        if e & 1 == 1 {
            result = mul_mod(result, base, modulus);
        }
        base = mul_mod(base, base, modulus);
        e >>= 1;
    }
    result
}

/// Distinct prime divisors of `n`, ascending.
fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut primes = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            primes.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        primes.push(n);
    }
    primes
}

/// A degree-L polynomial with `p_0 = p_L = 1` whose root generates the
/// multiplicative group of GF(2^L).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimitivePolynomial {
    mask: u64,
    degree: u32,
}

impl PrimitivePolynomial {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn as_binary(&self) -> BinaryPoly {
        BinaryPoly(self.mask)
    }

    /// `2^L - 1`, the period of the m-sequence and the order of α.
    pub fn period(&self) -> usize {
        (1usize << self.degree) - 1
    }

    /// Coefficients `p_0 … p_{L-1}` as a mask (the recurrence taps).
    pub fn taps(&self) -> u64 {
        self.mask & !(1 << self.degree)
    }

    pub fn coefficient(&self, i: u32) -> bool {
        self.as_binary().coefficient(i)
    }

    pub fn to_hex(&self) -> String {
        self.as_binary().to_hex()
    }
}

impl fmt::Display for PrimitivePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.as_binary().fmt(f)
    }
}

impl FromStr for PrimitivePolynomial {
    type Err = FieldError;

    /// Parses either input form and validates against [`DEFAULT_DEGREE_RANGE`].
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        validate_primitive(s.parse()?)
    }
}

/// Validates `poly` against [`DEFAULT_DEGREE_RANGE`].
pub fn validate_primitive(poly: BinaryPoly) -> Result<PrimitivePolynomial, FieldError> {
    validate_primitive_in(poly, DEFAULT_DEGREE_RANGE)
}

/// Checks degree range, irreducibility and primitivity, in that order.
///
/// Irreducibility uses the gcd test `gcd(x^(2^i) - x, p) = 1` for
/// `1 ≤ i ≤ L/2`. Primitivity checks that the order of `x` modulo `p` is
/// exactly `2^L - 1`: `x^(2^L-1) ≡ 1` and `x^((2^L-1)/r) ≢ 1` for every prime
/// divisor `r` of `2^L - 1`.
pub fn validate_primitive_in(
    poly: BinaryPoly,
    range: RangeInclusive<u32>,
) -> Result<PrimitivePolynomial, FieldError> {
    let max = (*range.end()).min(MAX_SUPPORTED_DEGREE);
    let min = *range.start();
    let degree = poly.degree().unwrap_or(0);
    if poly.mask() == 0 || degree < min || degree > max {
        return Err(FieldError::DegreeOutOfRange { degree, min, max });
    }
    let m = poly.mask();
    if m & 1 == 0 {
        return Err(FieldError::NotIrreducible(format!(
            "{poly} has zero constant term (divisible by x)"
        )));
    }

    let mut x_pow = poly_rem(0b10, m);
    for i in 1..=degree / 2 {
        x_pow = mul_mod(x_pow, x_pow, m);
        let g = poly_gcd(x_pow ^ 0b10, m);
        if g != 1 {
            return Err(FieldError::NotIrreducible(format!(
                "{poly} shares the factor {} with x^(2^{i}) - x",
                BinaryPoly(g)
            )));
        }
    }

    let order = (1u64 << degree) - 1;
    if x_pow_mod(order, m) != 1 {
        return Err(FieldError::NotPrimitive(format!(
            "x^{order} is not 1 modulo {poly}"
        )));
    }
    for r in prime_divisors(order) {
        if x_pow_mod(order / r, m) == 1 {
            return Err(FieldError::NotPrimitive(format!(
                "order of x modulo {poly} divides {} (prime divisor {r} of {order})",
                order / r
            )));
        }
    }
    Ok(PrimitivePolynomial { mask: m, degree })
}

/// Every primitive polynomial of the given degree, in ascending mask order.
pub fn primitive_polynomials(degree: u32) -> Vec<PrimitivePolynomial> {
    if !(1..=MAX_SUPPORTED_DEGREE).contains(&degree) {
        return Vec::new();
    }
    let top = 1u64 << degree;
    (0..top)
        .step_by(2)
        .filter_map(|low| validate_primitive_in(BinaryPoly(top | low | 1), degree..=degree).ok())
        .collect()
}

/// An element of GF(2^L). Carries its modulus so that mixing elements from
/// different fields is detected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    coords: u32,
    modulus: u64,
}

impl FieldElement {
    pub fn coords(self) -> u32 {
        self.coords
    }

    /// Coefficient of `α^i`.
    pub fn coordinate(self, i: u32) -> bool {
        i < 32 && (self.coords >> i) & 1 == 1
    }

    pub fn is_zero(self) -> bool {
        self.coords == 0
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }

    pub fn degree(self) -> u32 {
        poly_degree(self.modulus).unwrap_or(0)
    }

    fn same_field(self, other: Self) -> Result<(), FieldError> {
        if self.modulus == other.modulus {
            Ok(())
        } else {
            Err(FieldError::FieldMismatch {
                left: self.modulus,
                right: other.modulus,
            })
        }
    }

    fn with_coords(self, coords: u64) -> Self {
        FieldElement {
            coords: coords as u32,
            modulus: self.modulus,
        }
    }

    pub fn checked_add(self, other: Self) -> Result<Self, FieldError> {
        self.same_field(other)?;
        Ok(self.with_coords(u64::from(self.coords ^ other.coords)))
    }

    pub fn checked_mul(self, other: Self) -> Result<Self, FieldError> {
        self.same_field(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(self, other: Self) -> Self {
        self.with_coords(mul_mod(
            u64::from(self.coords),
            u64::from(other.coords),
            self.modulus,
        ))
    }

    pub fn square(self) -> Self {
        self.mul_unchecked(self)
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut result = self.with_coords(1);
        let mut base = self;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul_unchecked(base);
            }
            base = base.square();
            e >>= 1;
        }
        result
    }

    /// Inverse via `a^(2^L - 2)`.
    pub fn inverse(self) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Err(FieldError::ZeroInverse);
        }
        Ok(self.pow((1u64 << self.degree()) - 2))
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coords == 0 {
            return f.write_str("0");
        }
        let mut first = true;
        for i in (0..32).rev().filter(|&i| self.coordinate(i)) {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => f.write_str("1")?,
                1 => f.write_str("α")?,
                _ => write!(f, "α^{i}")?,
            }
        }
        Ok(())
    }
}

/// Materialized `n ↔ α^n` correspondence.
#[derive(Debug, Clone)]
pub struct DlogTable {
    forward: Vec<u32>,
    inverse: Vec<u32>,
}

impl DlogTable {
    /// Coordinates of `α^n` for `n` in `0..2^L - 1`.
    pub fn forward(&self) -> &[u32] {
        &self.forward
    }

    pub fn log_of(&self, coords: u32) -> Option<usize> {
        match self.inverse.get(coords as usize) {
            Some(&n) if coords != 0 => Some(n as usize),
            _ => None,
        }
    }
}

/// GF(2^L) built from a primitive polynomial, with full power/log tables.
#[derive(Debug, Clone)]
pub struct Field {
    poly: PrimitivePolynomial,
    table: DlogTable,
}

impl Field {
    pub fn new(poly: PrimitivePolynomial) -> Self {
        let n = poly.period();
        let mut forward = Vec::with_capacity(n);
        let mut inverse = vec![u32::MAX; 1 << poly.degree()];
        let top = 1u64 << poly.degree();
        let mut cur = 1u64;
        for i in 0..n {
            forward.push(cur as u32);
            inverse[cur as usize] = i as u32;
            cur <<= 1;
            if cur & top != 0 {
                cur ^= poly.mask();
            }
        }
        Field {
            poly,
            table: DlogTable { forward, inverse },
        }
    }

    pub fn poly(&self) -> &PrimitivePolynomial {
        &self.poly
    }

    pub fn degree(&self) -> u32 {
        self.poly.degree()
    }

    pub fn order(&self) -> usize {
        self.poly.period()
    }

    pub fn table(&self) -> &DlogTable {
        &self.table
    }

    pub fn element(&self, coords: u32) -> Result<FieldElement, FieldError> {
        if u64::from(coords) >> self.degree() != 0 {
            return Err(FieldError::CoordinatesOutOfRange {
                coords: u64::from(coords),
                degree: self.degree(),
            });
        }
        Ok(FieldElement {
            coords,
            modulus: self.poly.mask(),
        })
    }

    /// Element from coordinates `(c_0, …, c_{L-1})`.
    pub fn element_from_coords(&self, coords: &[bool]) -> Result<FieldElement, FieldError> {
        if coords.len() != self.degree() as usize {
            return Err(FieldError::CoordinatesOutOfRange {
                coords: coords.len() as u64,
                degree: self.degree(),
            });
        }
        let mask = coords
            .iter()
            .enumerate()
            .fold(0u32, |m, (i, &c)| m | (u32::from(c) << i));
        self.element(mask)
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            coords: 0,
            modulus: self.poly.mask(),
        }
    }

    pub fn one(&self) -> FieldElement {
        self.alpha_power(0)
    }

    pub fn alpha(&self) -> FieldElement {
        self.alpha_power(1)
    }

    /// `α^n` with `n` reduced mod `2^L - 1`; negative exponents are allowed.
    pub fn alpha_power(&self, n: i64) -> FieldElement {
        let idx = n.rem_euclid(self.order() as i64) as usize;
        FieldElement {
            coords: self.table.forward[idx],
            modulus: self.poly.mask(),
        }
    }

    fn check(&self, a: FieldElement) -> Result<(), FieldError> {
        if a.modulus == self.poly.mask() {
            Ok(())
        } else {
            Err(FieldError::FieldMismatch {
                left: self.poly.mask(),
                right: a.modulus,
            })
        }
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement, FieldError> {
        self.check(a)?;
        a.checked_add(b)
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement, FieldError> {
        self.check(a)?;
        a.checked_mul(b)
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement, FieldError> {
        self.check(a)?;
        a.inverse()
    }

    /// The unique `n` in `0..2^L - 1` with `α^n = a`.
    pub fn dlog(&self, a: FieldElement) -> Result<usize, FieldError> {
        self.check(a)?;
        self.table.log_of(a.coords).ok_or(FieldError::ZeroLog)
    }
}
