//! Per-sequence measurements: least period, linear complexity, balance,
//! cyclic runs and periodic correlation.
//!
//! Every analyzed sequence is treated as one period of an infinite periodic
//! sequence. Runs are therefore counted cyclically, and the linear
//! complexity is the degree of the minimal polynomial of the periodic
//! extension.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::gss::GssIndex;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("OddLength: parity subsequences need an even length, got {0}")]
    OddLength(usize),
    #[error("LengthMismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
}

/// Smallest `T` dividing the length with `bits[i] = bits[(i+T) mod len]`.
/// Returns 0 for the empty sequence.
pub fn least_period(bits: &[bool]) -> usize {
    let n = bits.len();
    (1..=n)
        .filter(|t| n.is_multiple_of(*t))
        .find(|&t| (t..n).all(|i| bits[i] == bits[i - t]))
        .unwrap_or(0)
}

/// Result of Berlekamp–Massey over GF(2).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShortestLfsr {
    pub length: usize,
    /// Connection polynomial `c_0 + c_1 x + … + c_L x^L`, `c_0 = 1`.
    pub connection: Vec<bool>,
}

fn window(words: &[u64], offset: usize) -> u64 {
    let (q, r) = (offset / 64, offset % 64);
    let lo = words.get(q).copied().unwrap_or(0) >> r;
    let hi = if r == 0 {
        0
    } else {
        words.get(q + 1).copied().unwrap_or(0) << (64 - r)
    };
    lo | hi
}

/// `dst ^= src · x^shift`, truncated to the length of `dst`.
fn xor_shifted(dst: &mut [u64], src: &[u64], shift: usize) {
    let (q, r) = (shift / 64, shift % 64);
    for (w, &word) in src.iter().enumerate().filter(|(_, &w)| w != 0) {
        if let Some(d) = dst.get_mut(w + q) {
            *d ^= word << r;
        }
        if r != 0 {
            if let Some(d) = dst.get_mut(w + q + 1) {
                *d ^= word >> (64 - r);
            }
        }
    }
}

/// Berlekamp–Massey on a finite binary sequence, bit-packed.
///
/// The sequence is stored reversed so that the window `s_i, s_{i-1}, …`
/// lines up with the connection polynomial word by word.
pub fn berlekamp_massey(s: &[bool]) -> ShortestLfsr {
    let n = s.len();
    let words = n / 64 + 2;
    let mut rev = vec![0u64; words];
    for (i, _) in s.iter().enumerate().filter(|(_, &b)| b) {
        let k = n - 1 - i;
        rev[k / 64] |= 1 << (k % 64);
    }

    let mut c = vec![0u64; words];
    c[0] = 1;
    let mut b = c.clone();
    let mut l = 0usize;
    let mut m = 1usize;
    for i in 0..n {
        let offset = n - 1 - i;
        let active = (l / 64 + 1).min(words);
        let parity = (0..active).fold(0u64, |acc, w| acc ^ (c[w] & window(&rev, offset + 64 * w)));
        if parity.count_ones() & 1 == 0 {
            m += 1;
            continue;
        }
        if 2 * l <= i {
            let previous = c.clone();
            xor_shifted(&mut c, &b, m);
            l = i + 1 - l;
            b = previous;
            m = 1;
        } else {
            xor_shifted(&mut c, &b, m);
            m += 1;
        }
    }

    let connection: Vec<bool> = (0..=l).map(|j| c[j / 64] >> (j % 64) & 1 == 1).collect();
    debug_assert!((l + 1..words * 64).all(|j| c[j / 64] >> (j % 64) & 1 == 0));
    ShortestLfsr {
        length: l,
        connection,
    }
}

/// Linear complexity of the periodic extension of `bits`, from
/// Berlekamp–Massey over two copies of the first `period` bits. Two periods
/// suffice because the complexity never exceeds the period.
pub fn linear_complexity(bits: &[bool], period: usize) -> usize {
    let period = period.clamp(1, bits.len().max(1));
    let one = &bits[..period.min(bits.len())];
    let doubled: Vec<bool> = one.iter().chain(one).copied().collect();
    berlekamp_massey(&doubled).length
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Balance {
    pub ones: usize,
    pub zeros: usize,
}

impl Balance {
    pub fn is_balanced(&self) -> bool {
        self.ones == self.zeros
    }
}

impl fmt::Display for Balance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.ones, self.zeros)
    }
}

pub fn balance(bits: &[bool]) -> Balance {
    let ones = bits.iter().filter(|&&b| b).count();
    Balance {
        ones,
        zeros: bits.len() - ones,
    }
}

/// Counts at even and at odd indices.
pub fn subsequence_balance(bits: &[bool]) -> Result<(Balance, Balance), AnalysisError> {
    if !bits.len().is_multiple_of(2) {
        return Err(AnalysisError::OddLength(bits.len()));
    }
    let even: Vec<bool> = bits.iter().step_by(2).copied().collect();
    let odd: Vec<bool> = bits.iter().skip(1).step_by(2).copied().collect();
    Ok((balance(&even), balance(&odd)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct RunCount {
    /// Runs of ones.
    pub blocks: usize,
    /// Runs of zeros.
    pub gaps: usize,
}

/// Run length → (blocks, gaps), read cyclically.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RunHistogram(pub BTreeMap<usize, RunCount>);

impl RunHistogram {
    pub fn iter(&self) -> impl Iterator<Item = (usize, RunCount)> + '_ {
        self.0.iter().map(|(&len, &count)| (len, count))
    }

    pub fn lengths(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.keys().copied()
    }

    pub fn total_blocks(&self) -> usize {
        self.0.values().map(|c| c.blocks).sum()
    }

    pub fn total_gaps(&self) -> usize {
        self.0.values().map(|c| c.gaps).sum()
    }

    /// Sum of length × count over all runs.
    pub fn total_length(&self) -> usize {
        self.0.iter().map(|(len, c)| len * (c.blocks + c.gaps)).sum()
    }

    /// Run lengths with multiplicity, ignoring whether each run is a block
    /// or a gap.
    pub fn length_multiset(&self) -> BTreeMap<usize, usize> {
        self.0.iter().map(|(&len, c)| (len, c.blocks + c.gaps)).collect()
    }
}

impl fmt::Display for RunHistogram {
    /// `len:blocks/gaps` entries joined by `;`, lengths ascending.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .iter()
            .map(|(len, c)| format!("{len}:{}/{}", c.blocks, c.gaps))
            .collect();
        f.write_str(&parts.join(";"))
    }
}

/// Cyclic run decomposition; `None` for a constant (or empty) sequence.
pub fn run_distribution(bits: &[bool]) -> Option<RunHistogram> {
    let n = bits.len();
    let start = (0..n).find(|&i| bits[i] != bits[(i + n - 1) % n])?;
    let mut hist = BTreeMap::<usize, RunCount>::new();
    let mut i = 0;
    while i < n {
        let value = bits[(start + i) % n];
        let mut len = 0;
        while i < n && bits[(start + i) % n] == value {
            len += 1;
            i += 1;
        }
        let entry = hist.entry(len).or_default();
        if value {
            entry.blocks += 1;
        } else {
            entry.gaps += 1;
        }
    }
    Some(RunHistogram(hist))
}

/// `(agreements - disagreements) / len`, kept as an exact ratio.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Correlation {
    pub agreements: usize,
    pub disagreements: usize,
}

impl Correlation {
    pub fn numerator(&self) -> i64 {
        self.agreements as i64 - self.disagreements as i64
    }

    pub fn denominator(&self) -> usize {
        self.agreements + self.disagreements
    }

    pub fn value(&self) -> f64 {
        self.numerator() as f64 / self.denominator() as f64
    }
}

/// Compares `x_i` with `y_{(i+shift) mod len}`.
pub fn periodic_correlation(
    x: &[bool],
    y: &[bool],
    shift: usize,
) -> Result<Correlation, AnalysisError> {
    if x.len() != y.len() {
        return Err(AnalysisError::LengthMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    let n = x.len();
    let agreements = (0..n).filter(|&i| x[i] == y[(i + shift) % n]).count();
    Ok(Correlation {
        agreements,
        disagreements: n - agreements,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceReport {
    pub index: Option<GssIndex>,
    pub length: usize,
    pub least_period: usize,
    pub linear_complexity: usize,
    pub balance: Balance,
    pub runs: Option<RunHistogram>,
    /// `None` when the length is odd.
    pub parity_balance: Option<(Balance, Balance)>,
}

pub fn analyze(index: Option<GssIndex>, bits: &[bool]) -> SequenceReport {
    let period = least_period(bits);
    SequenceReport {
        index,
        length: bits.len(),
        least_period: period,
        linear_complexity: if bits.is_empty() { 0 } else { linear_complexity(bits, period) },
        balance: balance(bits),
        runs: run_distribution(bits),
        parity_balance: subsequence_balance(bits).ok(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits::{complement, from_ascii};
    use crate::gf2x::primitive_polynomials;
    use crate::gss::gss_family;
    use crate::oracle;
    use crate::sequences::generate_msequence;
    use proptest::prelude::*;

    fn b(s: &str) -> Vec<bool> {
        from_ascii(s).unwrap()
    }

    #[test]
    fn least_period_examples() {
        assert_eq!(least_period(&b("1111")), 1);
        assert_eq!(least_period(&b("1010")), 2);
        assert_eq!(least_period(&b("0000110011001111")), 16);
        assert_eq!(least_period(&b("011011")), 3);
        assert_eq!(least_period(&[]), 0);
    }

    #[test]
    fn linear_complexity_examples() {
        assert_eq!(linear_complexity(&b("1111"), 1), 1);
        assert_eq!(berlekamp_massey(&b("11")).connection, [true, true]);
        assert_eq!(linear_complexity(&b("1010"), 2), 2);
        // (x+1)^2 = 1 + x^2
        assert_eq!(berlekamp_massey(&b("1010")).connection, [true, false, true]);
        assert_eq!(linear_complexity(&b("0000"), 1), 0);
        assert_eq!(linear_complexity(&b("0001"), 4), 4);
    }

    #[test]
    fn bm_recovers_msequence_polynomials() {
        for l in 2..=10 {
            for p in primitive_polynomials(l).into_iter().take(3) {
                let seq = generate_msequence(&p);
                let lfsr = berlekamp_massey(seq.bits());
                assert_eq!(lfsr.length, l as usize);
                // connection polynomial is the reciprocal of p(x)
                let recip: Vec<bool> = (0..=l).map(|j| p.coefficient(l - j)).collect();
                assert_eq!(lfsr.connection, recip, "{p}");
            }
        }
    }

    #[test]
    fn bm_handles_word_boundaries() {
        // 1 followed by zeros has complexity equal to its length.
        for n in [63, 64, 65, 127, 128, 200] {
            let mut s = vec![false; n];
            s[n - 1] = true;
            assert_eq!(berlekamp_massey(&s).length, n);
        }
    }

    #[test]
    fn l5_family_lc_within_theorem_interval_and_matches_oracle() {
        let p = "x^5+x^2+1".parse().unwrap();
        let fam = gss_family(&generate_msequence(&p));
        let mut full = 0;
        for m in &fam.members {
            let t = least_period(&m.bits);
            let lc = linear_complexity(&m.bits, t);
            assert_eq!(lc, oracle::brute_force_periodic_lc(&m.bits), "{}", m.index);
            if t == 16 {
                full += 1;
                assert!((9..=15).contains(&lc), "{} lc={lc}", m.index);
            }
        }
        assert_eq!(full, 28);
    }

    proptest! {
        #[test]
        fn bm_matches_brute_force_on_short_sequences(bits in proptest::collection::vec(any::<bool>(), 1..=20)) {
            prop_assert_eq!(berlekamp_massey(&bits).length, oracle::brute_force_lfsr_length(&bits));
        }

        #[test]
        fn bm_output_generates_input(bits in proptest::collection::vec(any::<bool>(), 1..=300)) {
            let lfsr = berlekamp_massey(&bits);
            for i in lfsr.length..bits.len() {
                let fb = (1..=lfsr.length).fold(false, |acc, j| acc ^ (lfsr.connection[j] & bits[i - j]));
                prop_assert_eq!(fb, bits[i]);
            }
        }

        #[test]
        fn period_is_one_iff_constant(bits in proptest::collection::vec(any::<bool>(), 1..=64)) {
            let constant = bits.iter().all(|&x| x == bits[0]);
            prop_assert_eq!(least_period(&bits) == 1, constant);
            prop_assert_eq!(least_period(&bits), oracle::naive_least_period(&bits));
        }

        #[test]
        fn runs_cover_the_sequence(bits in proptest::collection::vec(any::<bool>(), 1..=64)) {
            match run_distribution(&bits) {
                None => prop_assert!(bits.iter().all(|&x| x == bits[0])),
                Some(h) => {
                    prop_assert_eq!(h.total_length(), bits.len());
                    prop_assert_eq!(h.total_blocks(), h.total_gaps());
                }
            }
        }
    }

    #[test]
    fn balance_examples() {
        assert_eq!(balance(&b("1010")), Balance { ones: 2, zeros: 2 });
        assert_eq!(balance(&b("0000110011001111")), Balance { ones: 8, zeros: 8 });
        assert_eq!(balance(&b("0")), Balance { ones: 0, zeros: 1 });
    }

    #[test]
    fn subsequence_balance_examples() {
        let bits = b("0000110011001111");
        let even: Vec<bool> = bits.iter().step_by(2).copied().collect();
        let odd: Vec<bool> = bits.iter().skip(1).step_by(2).copied().collect();
        assert_eq!(even, b("00101011"));
        assert_eq!(odd, b("00101011"));
        let (e, o) = subsequence_balance(&bits).unwrap();
        assert_eq!((e, o), (Balance { ones: 4, zeros: 4 }, Balance { ones: 4, zeros: 4 }));

        let (e, o) = subsequence_balance(&b("1010")).unwrap();
        assert_eq!((e, o), (Balance { ones: 2, zeros: 0 }, Balance { ones: 0, zeros: 2 }));
        let (e, o) = subsequence_balance(&b("0101")).unwrap();
        assert_eq!((e, o), (Balance { ones: 0, zeros: 2 }, Balance { ones: 2, zeros: 0 }));
        assert_eq!(subsequence_balance(&b("010")), Err(AnalysisError::OddLength(3)));
    }

    #[test]
    fn run_examples() {
        let h = run_distribution(&b("0000110011001111")).unwrap();
        assert_eq!(h.to_string(), "2:2/2;4:1/1");

        let h = run_distribution(&b("1010011001100101")).unwrap();
        assert!(h.lengths().all(|l| l == 1 || l == 2));
        assert_eq!(h.total_length(), 16);
        // the trailing 1 and leading 1 join into one block of length 2
        assert_eq!(h.0[&2].blocks, 3);
        assert_eq!(h.0[&2].gaps, 3);

        let h = run_distribution(&b("0011")).unwrap();
        assert_eq!(h.to_string(), "2:1/1");
        assert!(run_distribution(&b("1111")).is_none());
        assert!(run_distribution(&[]).is_none());
    }

    #[test]
    fn correlation_examples() {
        let x = b("0000110011001111");
        assert_eq!(periodic_correlation(&x, &x, 0).unwrap().value(), 1.0);
        assert_eq!(periodic_correlation(&x, &complement(&x), 0).unwrap().value(), -1.0);
        let y = b("1111001100110000");
        assert_eq!(periodic_correlation(&x, &y, 0).unwrap().numerator(), -16);
        assert_eq!(
            periodic_correlation(&x, &x[..4], 0),
            Err(AnalysisError::LengthMismatch { left: 16, right: 4 })
        );
        // shifted comparison wraps around
        let c = periodic_correlation(&b("1000"), &b("0100"), 1).unwrap();
        assert_eq!(c.numerator(), 4);
    }

    #[test]
    fn report_invariants() {
        let r = analyze(Some(GssIndex::Shift(27)), &b("0000110011001111"));
        assert_eq!(r.least_period, 16);
        assert_eq!(r.length % r.least_period, 0);
        assert_eq!(r.balance.ones + r.balance.zeros, r.length);
        assert_eq!(r.runs.as_ref().unwrap().total_length(), r.length);
        let r = analyze(None, &b("111"));
        assert_eq!((r.least_period, r.linear_complexity), (1, 1));
        assert!(r.runs.is_none() && r.parity_balance.is_none());
    }
}
