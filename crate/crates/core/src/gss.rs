//! Generalized self-shrinking sequences and the family `B(a_n)`.
//!
//! A member is indexed either by the zero element (the mapping `1 → 0`) or
//! by a shift `s` (the mapping `1 → α^s`). The member keeps `v_n = a_{n+s}`
//! whenever the selector bit `a_n` is 1, so every member has `2^(L-1)` bits.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use thiserror::Error;

use crate::bits;
use crate::gf2x::{Field, FieldError, PrimitivePolynomial};
use crate::sequences::{self, MSequence, SequenceError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GssError {
    #[error("NoPartner: index {0} has no complement partner (α^s + 1 is 0 or 1)")]
    NoPartner(GssIndex),
    #[error("BadPeriodLength: {0} is not of the form 2^L - 1 with L >= 2")]
    BadPeriodLength(usize),
    #[error("bad index `{0}`: expected `zero`, `s=<int>`, `G=<bits>` or `ss`")]
    BadIndex(String),
    #[error(transparent)]
    Sequence(#[from] SequenceError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// Family index: the zero element or a shift `s` in `0..2^L - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GssIndex {
    Zero,
    Shift(usize),
}

impl GssIndex {
    pub fn shift(self) -> Option<usize> {
        match self {
            GssIndex::Zero => None,
            GssIndex::Shift(s) => Some(s),
        }
    }
}

impl fmt::Display for GssIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GssIndex::Zero => f.write_str("zero"),
            GssIndex::Shift(s) => write!(f, "{s}"),
        }
    }
}

impl FromStr for GssIndex {
    type Err = GssError;

    /// `zero` or a decimal shift, the same tokens [`fmt::Display`] writes.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "zero" => Ok(GssIndex::Zero),
            t => t
                .parse()
                .map(GssIndex::Shift)
                .map_err(|_| GssError::BadIndex(s.to_string())),
        }
    }
}

/// User-facing ways of naming a member; resolved against a polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IndexSpec {
    Zero,
    Shift(usize),
    /// `G = (g_0, …, g_{L-1})`.
    G(Vec<bool>),
    SelfShrinking,
}

impl FromStr for IndexSpec {
    type Err = GssError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GssError::BadIndex(s.to_string());
        let t = s.trim();
        if t == "zero" {
            Ok(IndexSpec::Zero)
        } else if t == "ss" {
            Ok(IndexSpec::SelfShrinking)
        } else if let Some(rest) = t.strip_prefix("s=") {
            rest.parse().map(IndexSpec::Shift).map_err(|_| bad())
        } else if let Some(rest) = t.strip_prefix("G=") {
            let g = bits::from_ascii(rest).map_err(|_| bad())?;
            if g.is_empty() {
                return Err(bad());
            }
            Ok(IndexSpec::G(g))
        } else {
            Err(bad())
        }
    }
}

impl IndexSpec {
    pub fn resolve(&self, poly: &PrimitivePolynomial) -> Result<GssIndex, GssError> {
        let index = match self {
            IndexSpec::Zero => GssIndex::Zero,
            IndexSpec::Shift(s) => GssIndex::Shift(*s),
            IndexSpec::SelfShrinking => self_shrinking_index(poly),
            IndexSpec::G(g) => sequences::shift_of_g(&Field::new(*poly), g)?,
        };
        if let GssIndex::Shift(s) = index {
            if s >= poly.period() {
                return Err(SequenceError::ShiftOutOfRange {
                    shift: s,
                    period: poly.period(),
                }
                .into());
            }
        }
        Ok(index)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GssSequence {
    pub index: GssIndex,
    pub bits: Vec<bool>,
}

/// All `2^L` members in fixed order: zero first, then shifts ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GssFamily {
    pub poly: PrimitivePolynomial,
    pub members: Vec<GssSequence>,
}

impl GssFamily {
    pub fn degree(&self) -> u32 {
        self.poly.degree()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn member(&self, index: GssIndex) -> Option<&GssSequence> {
        let slot = match index {
            GssIndex::Zero => 0,
            GssIndex::Shift(s) => s + 1,
        };
        self.members.get(slot).filter(|m| m.index == index)
    }

    pub fn bits(&self, index: GssIndex) -> Option<&[bool]> {
        self.member(index).map(|m| m.bits.as_slice())
    }

    /// Header `poly=<hex> L=<int>`, then `<index>\t<bits>` per member.
    pub fn export(&self) -> String {
        let mut out = format!("poly={} L={}\n", self.poly.to_hex(), self.degree());
        for m in &self.members {
            out.push_str(&format!("{}\t{}\n", m.index, bits::to_ascii(&m.bits)));
        }
        out
    }
}

/// Decimates the sliding sequence for `index` at the one-positions of `{a_n}`.
pub fn gss_generate(seq: &MSequence, index: GssIndex) -> Result<GssSequence, GssError> {
    let bits = match index {
        GssIndex::Zero => vec![false; seq.one_positions().len()],
        GssIndex::Shift(s) => {
            let period = seq.period();
            if s >= period {
                return Err(SequenceError::ShiftOutOfRange { shift: s, period }.into());
            }
            seq.one_positions()
                .iter()
                .map(|&n| seq.at(n + s))
                .collect()
        }
    };
    Ok(GssSequence { index, bits })
}

pub fn gss_family(seq: &MSequence) -> GssFamily {
    let indices: Vec<GssIndex> = std::iter::once(GssIndex::Zero)
        .chain((0..seq.period()).map(GssIndex::Shift))
        .collect();
    let members = indices
        .into_par_iter()
        .map(|i| gss_generate(seq, i).expect("indices are in range"))
        .collect();
    GssFamily {
        poly: *seq.poly(),
        members,
    }
}

/// The self-shrinking member is the mapping `1 → α^(2^(L-1))`.
pub fn self_shrinking_index(poly: &PrimitivePolynomial) -> GssIndex {
    GssIndex::Shift((1usize << (poly.degree() - 1)) % poly.period())
}

/// Classic self-shrinking of one period `z`: walk the pairs
/// `(z_{2n}, z_{2n+1})` for `n` over a full period with cyclic indices and
/// emit `z_{2n+1}` whenever `z_{2n} = 1`.
pub fn self_shrink_direct(z: &[bool]) -> Result<Vec<bool>, GssError> {
    let len = z.len();
    if len < 3 || !(len + 1).is_power_of_two() {
        return Err(GssError::BadPeriodLength(len));
    }
    Ok((0..len)
        .filter(|&n| z[(2 * n) % len])
        .map(|n| z[(2 * n + 1) % len])
        .collect())
}

/// Shift `s + d` with `α^(s+d) = α^s + 1`.
pub fn complement_partner(field: &Field, index: GssIndex) -> Result<GssIndex, GssError> {
    let s = match index {
        GssIndex::Shift(s) if s != 0 && s < field.order() => s,
        GssIndex::Shift(s) if s >= field.order() => {
            return Err(SequenceError::ShiftOutOfRange {
                shift: s,
                period: field.order(),
            }
            .into())
        }
        _ => return Err(GssError::NoPartner(index)),
    };
    let sum = field.add(field.alpha_power(s as i64), field.one())?;
    Ok(GssIndex::Shift(field.dlog(sum)?))
}

/// The offset `d` of the complement partner, `0 < d < 2^L - 1`.
pub fn complement_offset(field: &Field, s: usize) -> Result<usize, GssError> {
    let partner = complement_partner(field, GssIndex::Shift(s))?
        .shift()
        .expect("partners are shifts");
    let n = field.order();
    Ok((partner + n - s) % n)
}

/// One row of the decimation: selector `a_n`, the source index of `v_n`,
/// its value, and the output position when the bit is kept.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DecimationStep {
    pub n: usize,
    pub selector: bool,
    pub source: usize,
    pub value: bool,
    pub output: Option<usize>,
}

pub fn decimation_trace(seq: &MSequence, s: usize) -> Result<Vec<DecimationStep>, GssError> {
    let v = sequences::sliding_sequence(seq, s)?;
    let period = seq.period();
    let mut produced = 0;
    Ok((0..period)
        .map(|n| {
            let selector = seq.at(n);
            let output = selector.then(|| {
                produced += 1;
                produced - 1
            });
            DecimationStep {
                n,
                selector,
                source: (n + s) % period,
                value: v[n],
                output,
            }
        })
        .collect())
}
