//! The pinned m-sequence `{a_n}`, its trace representation and the sliding
//! sequences `v_n = a_{n+s}`.
//!
//! The m-sequence always starts from the state `(a_0, …, a_{L-1}) = (0, …, 0, 1)`.
//! With that start, `a_n` is exactly the `α^{L-1}` coordinate of `α^n`, which
//! is what ties bit positions to field elements throughout the crate.

use thiserror::Error;

use crate::gf2x::{Field, FieldElement, PrimitivePolynomial};
use crate::gss::GssIndex;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error("ShiftOutOfRange: shift {shift} is not in 0..{period}")]
    ShiftOutOfRange { shift: usize, period: usize },
    #[error("G has {got} coordinates, expected {expected}")]
    GLength { expected: usize, got: usize },
    #[error("SingularSystem: the trace system for {0} has no unique solution")]
    SingularSystem(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MSequence {
    poly: PrimitivePolynomial,
    bits: Vec<bool>,
    one_positions: Vec<usize>,
}

impl MSequence {
    pub fn poly(&self) -> &PrimitivePolynomial {
        &self.poly
    }

    pub fn degree(&self) -> u32 {
        self.poly.degree()
    }

    /// One full period, `2^L - 1` bits.
    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn period(&self) -> usize {
        self.bits.len()
    }

    /// Ascending indices `n_i` with `a_{n_i} = 1`.
    pub fn one_positions(&self) -> &[usize] {
        &self.one_positions
    }

    pub fn zero_positions(&self) -> Vec<usize> {
        (0..self.period()).filter(|&n| !self.bits[n]).collect()
    }

    /// `a_n` with the index reduced cyclically.
    pub fn at(&self, n: usize) -> bool {
        self.bits[n % self.bits.len()]
    }
}

/// Runs the L-stage recurrence `a_{n+L} = Σ_{i<L} p_i a_{n+i}` from the
/// pinned start for one period.
pub fn generate_msequence(poly: &PrimitivePolynomial) -> MSequence {
    let l = poly.degree();
    let period = poly.period();
    let taps = poly.taps();
    // bit i of the register holds a_{n+i}
    let mut state: u64 = 1 << (l - 1);
    let mut bits = Vec::with_capacity(period);
    for _ in 0..period {
        bits.push(state & 1 == 1);
        let feedback = u64::from((state & taps).count_ones() & 1);
        state = (state >> 1) | (feedback << (l - 1));
    }
    let one_positions = bits
        .iter()
        .enumerate()
        .filter_map(|(n, &b)| b.then_some(n))
        .collect();
    MSequence {
        poly: *poly,
        bits,
        one_positions,
    }
}

/// `Tr(x) = x + x^2 + … + x^(2^(L-1))`, which always lands in `{0, 1}`.
pub fn trace(x: FieldElement) -> bool {
    let mut acc = 0u32;
    let mut term = x;
    for _ in 0..x.degree() {
        acc ^= term.coords();
        term = term.square();
    }
    debug_assert!(acc <= 1, "trace left the prime field: {acc:#x}");
    acc == 1
}

/// The element `A` of `a_n = Tr(A α^n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TraceCoefficient(pub FieldElement);

impl TraceCoefficient {
    pub fn element(&self) -> FieldElement {
        self.0
    }

    /// `Tr(A α^n)`.
    pub fn evaluate(&self, field: &Field, n: usize) -> bool {
        trace(self.0.mul_unchecked(field.alpha_power(n as i64)))
    }
}

/// Solves the L×L system `Tr(A α^n) = a_n`, `n < L`, over GF(2) for the
/// coordinates of `A`.
pub fn solve_trace_coefficient(
    field: &Field,
    seq: &MSequence,
) -> Result<TraceCoefficient, SequenceError> {
    let l = field.degree() as usize;
    // Tr(A α^n) = Σ_j A_j Tr(α^{n+j}); row n has bit j = Tr(α^{n+j}) and
    // the right-hand side a_n in bit L.
    let mut rows: Vec<u64> = (0..l)
        .map(|n| {
            let coeffs = (0..l).fold(0u64, |acc, j| {
                acc | (u64::from(trace(field.alpha_power((n + j) as i64))) << j)
            });
            coeffs | (u64::from(seq.at(n)) << l)
        })
        .collect();

    for col in 0..l {
        let pivot = (col..l)
            .find(|&r| rows[r] >> col & 1 == 1)
            .ok_or_else(|| SequenceError::SingularSystem(seq.poly().to_string()))?;
        rows.swap(col, pivot);
        let pivot_row = rows[col];
        for (r, row) in rows.iter_mut().enumerate() {
            if r != col && *row >> col & 1 == 1 {
                *row ^= pivot_row;
            }
        }
    }
    let coords = (0..l).fold(0u32, |acc, j| acc | (((rows[j] >> l) as u32 & 1) << j));
    let a = field
        .element(coords)
        .map_err(|_| SequenceError::SingularSystem(seq.poly().to_string()))?;
    Ok(TraceCoefficient(a))
}

/// One period of `v_n = a_{(n+s) mod (2^L-1)}`.
pub fn sliding_sequence(seq: &MSequence, s: usize) -> Result<Vec<bool>, SequenceError> {
    let period = seq.period();
    if s >= period {
        return Err(SequenceError::ShiftOutOfRange { shift: s, period });
    }
    Ok(seq.bits[s..].iter().chain(&seq.bits[..s]).copied().collect())
}

/// Maps `G = (g_0, …, g_{L-1})` to the family index: zero for `G = 0`,
/// otherwise the shift `s = dlog(Σ g_i α^i)`, which satisfies
/// `Σ g_i a_{n+i} = a_{n+s}` for all `n`.
pub fn shift_of_g(field: &Field, g: &[bool]) -> Result<GssIndex, SequenceError> {
    let l = field.degree() as usize;
    if g.len() != l {
        return Err(SequenceError::GLength {
            expected: l,
            got: g.len(),
        });
    }
    let element = field
        .element_from_coords(g)
        .expect("length already checked");
    Ok(match field.dlog(element) {
        Ok(s) => GssIndex::Shift(s),
        Err(_) => GssIndex::Zero,
    })
}
