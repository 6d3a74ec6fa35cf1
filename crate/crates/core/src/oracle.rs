//! Slow reference computations used only to cross-check the fast paths.
//! Nothing here shares code with the implementations it checks.

/// Tries every `T` from 1 upward with a cyclic comparison.
pub fn naive_least_period(bits: &[bool]) -> usize {
    let n = bits.len();
    (1..=n)
        .find(|&t| (0..n).all(|i| bits[i] == bits[(i + t) % n]))
        .unwrap_or(0)
}

/// Does some LFSR of length `len` reproduce `bits`? With `cyclic` the
/// recurrence must also hold across the end of the period.
fn lfsr_exists(bits: &[bool], len: usize, cyclic: bool) -> bool {
    let n = bits.len();
    let at = |i: isize| bits[i.rem_euclid(n as isize) as usize];
    let positions: Vec<usize> = if cyclic { (0..n).collect() } else { (len..n).collect() };
    if len <= 12 {
        // exhaustive over all tap vectors (c_1, …, c_len)
        return (0u32..1 << len).any(|taps| {
            positions.iter().all(|&i| {
                let fb = (1..=len)
                    .filter(|j| taps >> (j - 1) & 1 == 1)
                    .fold(false, |acc, j| acc ^ at(i as isize - j as isize));
                fb == bits[i]
            })
        });
    }
    // consistency of the linear system in the taps, by elimination
    assert!(len < 64, "oracle limited to LFSR lengths below 64");
    let mut rows: Vec<u64> = positions
        .iter()
        .map(|&i| {
            let coeffs = (1..=len).fold(0u64, |acc, j| acc | (u64::from(at(i as isize - j as isize)) << (j - 1)));
            coeffs | (u64::from(bits[i]) << len)
        })
        .collect();
    let mut rank = 0;
    for col in 0..len {
        if let Some(p) = (rank..rows.len()).find(|&r| rows[r] >> col & 1 == 1) {
            rows.swap(rank, p);
            let pivot = rows[rank];
            for (r, row) in rows.iter_mut().enumerate() {
                if r != rank && *row >> col & 1 == 1 {
                    *row ^= pivot;
                }
            }
            rank += 1;
        }
    }
    // inconsistent iff some row reduced to 0 = 1
    rows.iter().all(|&r| r != 1 << len)
}

/// Shortest LFSR generating the finite sequence, by search over lengths.
pub fn brute_force_lfsr_length(bits: &[bool]) -> usize {
    (0..=bits.len())
        .find(|&len| lfsr_exists(bits, len, false))
        .expect("an LFSR as long as the sequence always exists")
}

/// Linear complexity of the periodic extension of one least period.
pub fn brute_force_periodic_lc(bits: &[bool]) -> usize {
    let t = naive_least_period(bits);
    if t == 0 {
        return 0;
    }
    let period = &bits[..t];
    (0..=t)
        .find(|&len| lfsr_exists(period, len, true))
        .expect("length T always works")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits::from_ascii;

    #[test]
    fn known_values() {
        let b = |s| from_ascii(s).unwrap();
        assert_eq!(brute_force_lfsr_length(&b("0000")), 0);
        assert_eq!(brute_force_lfsr_length(&b("0001")), 4);
        assert_eq!(brute_force_lfsr_length(&b("1010")), 2);
        assert_eq!(brute_force_periodic_lc(&b("1111")), 1);
        assert_eq!(brute_force_periodic_lc(&b("10")), 2);
        assert_eq!(brute_force_periodic_lc(&b("0010111")), 3);
        assert_eq!(naive_least_period(&b("011011")), 3);
    }

    #[test]
    fn elimination_path_agrees_with_enumeration_boundary() {
        // 0^13 1 needs an LFSR of length 14, decided by the elimination branch.
        let mut bits = vec![false; 13];
        bits.push(true);
        assert_eq!(brute_force_lfsr_length(&bits), 14);
    }
}
