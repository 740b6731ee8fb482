//! Arithmetic in the small fields used by the code constructions: GF(2), GF(3),
//! GF(4) and odd prime fields GF(p) with p <= 251.
//!
//! Elements are plain `u8` indices. For GF(4) the indices are
//! `0, 1, 2, 3 <-> 0, 1, w, w^2` with `w^2 = w + 1`, which is exactly the
//! polynomial-basis encoding `a + b*w <-> a | (b << 1)`. Addition in GF(4) is
//! therefore XOR of indices.

use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Largest prime order accepted by [`Field::new`].
pub const MAX_PRIME: u32 = 251;

const GF4_MUL: [[u8; 4]; 4] = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]];
const GF4_INV: [u8; 4] = [0, 1, 3, 2];
const GF4_CONJ: [u8; 4] = [0, 1, 3, 2];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Prime,
    /// GF(p^2); only GF(4) is supported.
    QuadraticExtension,
}

/// One of the supported finite fields.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Field {
    order: u8,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.order)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.order)
    }
}

fn is_prime(n: u32) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// `INVERSES[p][a]` is the inverse of `a` modulo the prime `p`.
fn prime_inverses() -> &'static [[u8; 256]] {
    static TABLE: OnceLock<Vec<[u8; 256]>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut table = vec![[0u8; 256]; 256];
        for p in (3..=MAX_PRIME).filter(|&p| is_prime(p)) {
            for a in 1..p {
                // a^(p-2) mod p
                let (mut base, mut exp, mut acc) = (a, p - 2, 1u32);
                while exp > 0 {
                    if exp & 1 == 1 {
                        acc = acc * base % p;
                    }
                    base = base * base % p;
                    exp >>= 1;
                }
                table[p as usize][a as usize] = acc as u8;
            }
        }
        table[2][1] = 1;
        table
    })
}

impl Field {
    pub const GF2: Field = Field { order: 2 };
    pub const GF3: Field = Field { order: 3 };
    pub const GF4: Field = Field { order: 4 };

    /// Builds the field of order `q`; `q` must be 2, 3, 4 or an odd prime <= 251.
    pub fn new(q: u32) -> Result<Field> {
        if q == 4 || (q <= MAX_PRIME && is_prime(q)) {
            Ok(Field { order: q as u8 })
        } else {
            Err(Error::UnsupportedField(q))
        }
    }

    #[inline]
    pub fn order(self) -> u32 {
        self.order as u32
    }

    pub fn kind(self) -> FieldKind {
        if self.order == 4 {
            FieldKind::QuadraticExtension
        } else {
            FieldKind::Prime
        }
    }

    /// Exponent of the conjugation map `x -> x^e` (1 on prime fields, 2 on GF(4)).
    pub fn conj_exponent(self) -> u32 {
        match self.kind() {
            FieldKind::Prime => 1,
            FieldKind::QuadraticExtension => 2,
        }
    }

    pub fn characteristic(self) -> u32 {
        if self.order == 4 {
            2
        } else {
            self.order as u32
        }
    }

    #[inline]
    pub fn is_gf4(self) -> bool {
        self.order == 4
    }

    pub fn elements(self) -> impl Iterator<Item = u8> {
        0..self.order
    }

    pub fn nonzero_elements(self) -> impl Iterator<Item = u8> {
        1..self.order
    }

    #[inline]
    pub fn contains(self, a: u8) -> bool {
        a < self.order
    }

    #[inline]
    pub fn add(self, a: u8, b: u8) -> u8 {
        if self.order == 4 {
            a ^ b
        } else {
            let s = a as u16 + b as u16;
            let p = self.order as u16;
            (if s >= p { s - p } else { s }) as u8
        }
    }

    #[inline]
    pub fn neg(self, a: u8) -> u8 {
        if self.order == 4 || a == 0 {
            a
        } else {
            self.order - a
        }
    }

    #[inline]
    pub fn sub(self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(self, a: u8, b: u8) -> u8 {
        if self.order == 4 {
            GF4_MUL[a as usize][b as usize]
        } else {
            ((a as u16 * b as u16) % self.order as u16) as u8
        }
    }

    /// Multiplicative inverse; `None` for zero.
    #[inline]
    pub fn inv(self, a: u8) -> Option<u8> {
        if a == 0 {
            None
        } else if self.order == 4 {
            Some(GF4_INV[a as usize])
        } else if self.order == 2 {
            Some(1)
        } else {
            Some(prime_inverses()[self.order as usize][a as usize])
        }
    }

    /// The conjugation used by the Hermitian form: identity on prime fields,
    /// Frobenius `x -> x^2` on GF(4).
    #[inline]
    pub fn conj(self, a: u8) -> u8 {
        if self.order == 4 {
            GF4_CONJ[a as usize]
        } else {
            a
        }
    }

    pub fn pow(self, a: u8, mut e: u32) -> u8 {
        let (mut base, mut acc) = (a, 1u8);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Text token for an element: `0 1` / `0 1 2` / `0 1 w v` / decimal.
    pub fn symbol(self, a: u8) -> String {
        if self.order == 4 {
            ["0", "1", "w", "v"][a as usize].to_string()
        } else {
            a.to_string()
        }
    }

    /// Inverse of [`Field::symbol`]. Returns `None` for tokens outside the alphabet.
    pub fn parse_symbol(self, token: &str) -> Option<u8> {
        if self.order == 4 {
            return match token {
                "0" => Some(0),
                "1" => Some(1),
                "w" => Some(2),
                "v" => Some(3),
                _ => None,
            };
        }
        if token.is_empty() || !token.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        token.parse::<u32>().ok().filter(|&v| v < self.order()).map(|v| v as u8)
    }
}

/// A field element tagged with its field. Binary operations check that both
/// operands come from the same field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GfElement {
    field: Field,
    value: u8,
}

impl GfElement {
    pub fn new(field: Field, value: u8) -> Result<GfElement> {
        if field.contains(value) {
            Ok(GfElement { field, value })
        } else {
            Err(Error::ElementOutOfRange {
                value: value as u32,
                order: field.order(),
            })
        }
    }

    pub fn zero(field: Field) -> GfElement {
        GfElement { field, value: 0 }
    }

    pub fn one(field: Field) -> GfElement {
        GfElement { field, value: 1 }
    }

    pub fn field(self) -> Field {
        self.field
    }

    pub fn value(self) -> u8 {
        self.value
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    fn same_field(self, other: GfElement) -> Result<Field> {
        if self.field == other.field {
            Ok(self.field)
        } else {
            Err(Error::FieldMismatch)
        }
    }

    // Fallible: operands may come from different fields.
    #[allow(clippy::should_implement_trait)]
    pub fn add(self, other: GfElement) -> Result<GfElement> {
        let f = self.same_field(other)?;
        Ok(GfElement { field: f, value: f.add(self.value, other.value) })
    }

    #[allow(clippy::should_implement_trait)]
    pub fn sub(self, other: GfElement) -> Result<GfElement> {
        let f = self.same_field(other)?;
        Ok(GfElement { field: f, value: f.sub(self.value, other.value) })
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(self, other: GfElement) -> Result<GfElement> {
        let f = self.same_field(other)?;
        Ok(GfElement { field: f, value: f.mul(self.value, other.value) })
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(self) -> GfElement {
        GfElement { field: self.field, value: self.field.neg(self.value) }
    }

    pub fn inv(self) -> Result<GfElement> {
        let value = self.field.inv(self.value).ok_or(Error::ZeroInverse)?;
        Ok(GfElement { field: self.field, value })
    }

    pub fn conj(self) -> GfElement {
        GfElement { field: self.field, value: self.field.conj(self.value) }
    }
}

impl fmt::Display for GfElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.field.symbol(self.value))
    }
}
