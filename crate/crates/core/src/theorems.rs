//! Exhaustive checkers for the structural results on GSS families.
//!
//! Each verifier inspects a whole family (or one shift) and returns a
//! [`VerdictReport`] instead of panicking, so a full scorecard can be produced
//! even when one result fails for an unusual polynomial. A counterexample
//! always carries a witness that names the member (and position, where one
//! applies) so it can be replayed.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use crate::analysis::{self, linear_complexity, least_period, run_distribution};
use crate::bits;
use crate::gf2x::{Field, FieldError, PrimitivePolynomial};
use crate::gss::{
    self, complement_partner, gss_family, self_shrink_direct, self_shrinking_index, GssError,
    GssFamily, GssIndex,
};
use crate::sequences::{generate_msequence, sliding_sequence, MSequence};

/// Families up to this degree get the literal all-pairs closure check.
/// Above it, closure is checked by spanning the family from a basis.
pub const PAIRWISE_CLOSURE_MAX_DEGREE: u32 = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TheoremError {
    #[error("unknown verifier `{0}`; known: {known}", known = VERIFIER_NAMES.join(", "))]
    UnknownVerifier(String),
    #[error("identity check failed for {poly}: {detail}")]
    IdentityFailed { poly: String, detail: String },
    #[error(transparent)]
    Gss(#[from] GssError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// `m = dlog(α + 1)`, `p = (2^L - 1) - m` so that `α^(p+1) = α^p + 1`, and
/// `q = 2p mod (2^L - 1)` so that `α^q + α^(q+1) = α^p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpecialExponents {
    pub m: usize,
    pub p: usize,
    pub q: usize,
    pub order: usize,
}

impl SpecialExponents {
    pub fn p_plus_one(&self) -> usize {
        (self.p + 1) % self.order
    }

    pub fn q_plus_one(&self) -> usize {
        (self.q + 1) % self.order
    }

    /// Whether `L - 1 <= p < 2^L - 2` holds. Reported, never enforced.
    pub fn p_within_stated_bound(&self, degree: u32) -> bool {
        let l = degree as usize;
        l - 1 <= self.p && self.p < self.order - 1
    }
}

pub fn find_special_exponents(field: &Field) -> Result<SpecialExponents, TheoremError> {
    let order = field.order();
    let one = field.one();
    let m = field.dlog(field.add(field.alpha(), one)?)?;
    let p = (order - m) % order;
    let q = 2 * p % order;
    let exps = SpecialExponents { m, p, q, order };

    let fail = |detail: String| TheoremError::IdentityFailed {
        poly: field.poly().to_string(),
        detail,
    };
    let ap = field.alpha_power(p as i64);
    if field.alpha_power(p as i64 + 1) != field.add(ap, one)? {
        return Err(fail(format!("α^(p+1) != α^p + 1 for p = {p}")));
    }
    let aq = field.alpha_power(q as i64);
    let aq1 = field.alpha_power(q as i64 + 1);
    if field.add(aq, aq1)? != ap {
        return Err(fail(format!("α^q + α^(q+1) != α^p for q = {q}")));
    }
    Ok(exps)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Confirmed,
    Counterexample,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Confirmed => "CONFIRMED",
            Status::Counterexample => "COUNTEREXAMPLE",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub index: Option<GssIndex>,
    pub position: Option<usize>,
    pub details: String,
}

impl Witness {
    fn member(index: GssIndex, details: impl Into<String>) -> Self {
        Witness {
            index: Some(index),
            position: None,
            details: details.into(),
        }
    }

    fn at(index: GssIndex, position: usize, details: impl Into<String>) -> Self {
        Witness {
            index: Some(index),
            position: Some(position),
            details: details.into(),
        }
    }

    fn field(details: impl Into<String>) -> Self {
        Witness {
            index: None,
            position: None,
            details: details.into(),
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(i) = self.index {
            write!(f, "index={i} ")?;
        }
        if let Some(p) = self.position {
            write!(f, "position={p} ")?;
        }
        f.write_str(&self.details)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerdictReport {
    /// Registry name, e.g. `periods`.
    pub name: &'static str,
    /// Which result is being checked.
    pub result: &'static str,
    pub status: Status,
    pub witness: Option<Witness>,
    pub poly: PrimitivePolynomial,
    pub notes: Vec<String>,
}

impl VerdictReport {
    fn new(name: &'static str, result: &'static str, poly: PrimitivePolynomial) -> Self {
        VerdictReport {
            name,
            result,
            status: Status::Confirmed,
            witness: None,
            poly,
            notes: Vec::new(),
        }
    }

    fn note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    fn fail(mut self, witness: Witness) -> Self {
        self.status = Status::Counterexample;
        self.witness = Some(witness);
        self
    }

    pub fn is_confirmed(&self) -> bool {
        self.status == Status::Confirmed
    }

    pub fn degree(&self) -> u32 {
        self.poly.degree()
    }

    /// `<name>: CONFIRMED|COUNTEREXAMPLE <witness>` plus bracketed notes.
    pub fn scorecard_line(&self) -> String {
        let mut line = format!("{}: {}", self.name, self.status);
        if let Some(w) = &self.witness {
            line.push(' ');
            line.push_str(&w.to_string());
        }
        for n in &self.notes {
            line.push_str(&format!(" [{n}]"));
        }
        line
    }
}

/// Everything the verifiers need, built once per polynomial.
#[derive(Debug, Clone)]
pub struct Workbench {
    pub field: Field,
    pub seq: MSequence,
    pub family: GssFamily,
    pub exps: SpecialExponents,
}

impl Workbench {
    pub fn new(poly: PrimitivePolynomial) -> Result<Self, TheoremError> {
        let field = Field::new(poly);
        let seq = generate_msequence(&poly);
        let family = gss_family(&seq);
        let exps = find_special_exponents(&field)?;
        Ok(Workbench {
            field,
            seq,
            family,
            exps,
        })
    }

    pub fn poly(&self) -> &PrimitivePolynomial {
        self.field.poly()
    }
}

fn half_length(degree: u32) -> usize {
    1 << (degree - 1)
}

fn alternating(len: usize, first: bool) -> Vec<bool> {
    (0..len).map(|i| (i % 2 == 0) == first).collect()
}

fn set_string(values: impl IntoIterator<Item = usize>) -> String {
    let parts: Vec<String> = values.into_iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

/// Least periods take values in `{1, 2, 2^(L-1)}`: 1 for the zero and
/// shift-0 members, 2 for shifts `p` and `p+1`, `2^(L-1)` otherwise.
pub fn verify_period_classification(family: &GssFamily, exps: &SpecialExponents) -> VerdictReport {
    let report = VerdictReport::new("periods", "least periods in {1, 2, 2^(L-1)}", family.poly);
    let full = half_length(family.degree());
    let expected = |index: GssIndex| match index {
        GssIndex::Zero | GssIndex::Shift(0) => 1,
        GssIndex::Shift(s) if s == exps.p || s == exps.p_plus_one() => 2,
        GssIndex::Shift(_) => full,
    };
    let mut counts = BTreeMap::<usize, usize>::new();
    for m in &family.members {
        let t = least_period(&m.bits);
        *counts.entry(t).or_default() += 1;
        if t != expected(m.index) {
            return report.fail(Witness::member(
                m.index,
                format!("least period {t}, expected {}", expected(m.index)),
            ));
        }
    }
    let histogram: Vec<String> = counts.iter().map(|(t, c)| format!("T={t}:{c}")).collect();
    report
        .note(format!("periods={}", set_string(counts.keys().copied())))
        .note(histogram.join(" "))
}

/// Shift `p+1` yields `0101…01` and shift `p` yields `1010…10`.
pub fn verify_theorem1_corollary1(family: &GssFamily, exps: &SpecialExponents) -> VerdictReport {
    let mut report = VerdictReport::new(
        "theorem1",
        "period-2 members at shifts p and p+1",
        family.poly,
    );
    let len = half_length(family.degree());
    let checks = [
        (GssIndex::Shift(exps.p_plus_one()), alternating(len, false)),
        (GssIndex::Shift(exps.p), alternating(len, true)),
    ];
    for (index, want) in checks {
        let got = family.bits(index).expect("shift in range");
        if let Some(pos) = got.iter().zip(&want).position(|(a, b)| a != b) {
            return report.fail(Witness::at(
                index,
                pos,
                format!("got {}, expected {}", bits::to_ascii(got), bits::to_ascii(&want)),
            ));
        }
    }
    let bound = if exps.p_within_stated_bound(family.degree()) {
        "within"
    } else {
        "outside"
    };
    report = report.note(format!("m={} p={} q={}", exps.m, exps.p, exps.q));
    report.note(format!("p {bound} L-1 <= p < 2^L-2"))
}

/// Members with least period above 2 have balanced even- and odd-index
/// subsequences.
pub fn verify_theorem2(family: &GssFamily) -> VerdictReport {
    let report = VerdictReport::new("theorem2", "balanced parity subsequences for T > 2", family.poly);
    let mut checked = 0;
    for m in &family.members {
        if least_period(&m.bits) <= 2 {
            continue;
        }
        checked += 1;
        match analysis::subsequence_balance(&m.bits) {
            Ok((even, odd)) if even.is_balanced() && odd.is_balanced() => {}
            Ok((even, odd)) => {
                return report.fail(Witness::member(
                    m.index,
                    format!("even ones/zeros {even}, odd ones/zeros {odd}"),
                ))
            }
            Err(e) => return report.fail(Witness::member(m.index, e.to_string())),
        }
    }
    report.note(format!("{checked} members checked"))
}

/// With `d` the complement offset of `s`: `a_n = 1 ⇒ v_n ≠ v_{n+d}` and
/// `a_n = 0 ⇒ v_n = v_{n+d}` over the whole period.
pub fn verify_theorem3(field: &Field, seq: &MSequence, s: usize) -> Result<VerdictReport, GssError> {
    let report = VerdictReport::new("theorem3", "sliding-sequence relation v_n vs v_(n+d)", *seq.poly());
    let d = gss::complement_offset(field, s)?;
    let v = sliding_sequence(seq, s)?;
    let n = seq.period();
    for i in 0..n {
        let (x, y) = (v[i], v[(i + d) % n]);
        if seq.at(i) == (x == y) {
            return Ok(report.fail(Witness::at(
                GssIndex::Shift(s),
                i,
                format!("a_n={} v_n={} v_(n+d)={} d={d}", u8::from(seq.at(i)), u8::from(x), u8::from(y)),
            )));
        }
    }
    Ok(report.note(format!("s={s} d={d}")))
}

/// Complement pairing over every eligible shift: the partner map is an
/// involution with `2^(L-1) - 1` pairs, partners generate complemented
/// members, and the sliding-sequence relation holds for each `s`.
pub fn verify_theorem3_family(field: &Field, seq: &MSequence, family: &GssFamily) -> VerdictReport {
    let report = VerdictReport::new(
        "theorem3",
        "complement pairs (s, s+d) and the v_n vs v_(n+d) relation",
        family.poly,
    );
    let mut pairs = BTreeSet::new();
    for s in 1..field.order() {
        let index = GssIndex::Shift(s);
        let partner = match complement_partner(field, index) {
            Ok(p) => p,
            Err(e) => return report.fail(Witness::member(index, e.to_string())),
        };
        let t = partner.shift().expect("partners are shifts");
        if t == 0 || complement_partner(field, partner).ok() != Some(index) {
            return report.fail(Witness::member(index, format!("partner {partner} is not an involution")));
        }
        pairs.insert((s.min(t), s.max(t)));

        let own = family.bits(index).expect("in range");
        let other = family.bits(partner).expect("in range");
        if let Some(pos) = own.iter().zip(other).position(|(a, b)| a == b) {
            return report.fail(Witness::at(index, pos, format!("member {partner} is not the complement")));
        }
        match verify_theorem3(field, seq, s) {
            Ok(r) if r.is_confirmed() => {}
            Ok(r) => return report.fail(r.witness.expect("counterexamples carry witnesses")),
            Err(e) => return report.fail(Witness::member(index, e.to_string())),
        }
    }
    let expected_pairs = half_length(family.degree()) - 1;
    if pairs.len() != expected_pairs {
        return report.fail(Witness::field(format!(
            "{} pairs, expected {expected_pairs}",
            pairs.len()
        )));
    }
    report.note(format!("{} pairs", pairs.len()))
}

/// No member has least period `2^j` with `2 <= j <= L-2`.
pub fn verify_theorem4(family: &GssFamily) -> VerdictReport {
    let report = VerdictReport::new("theorem4", "no least period 2^j for j = 2..L-2", family.poly);
    let l = family.degree();
    if l <= 3 {
        return report.note("vacuous: range j = 2..L-2 is empty");
    }
    let forbidden: BTreeSet<usize> = (2..=l - 2).map(|j| 1usize << j).collect();
    for m in &family.members {
        let t = least_period(&m.bits);
        if forbidden.contains(&t) {
            return report.fail(Witness::member(m.index, format!("least period {t}")));
        }
    }
    report.note(format!("excluded={}", set_string(forbidden)))
}

/// XOR closure, the zero sequence as identity, self-inverse members, and
/// balance for every non-constant member.
pub fn verify_group_and_balance(family: &GssFamily) -> VerdictReport {
    let report = VerdictReport::new("group", "abelian group under XOR; balance", family.poly);
    let l = family.degree();
    let packed: Vec<Vec<u64>> = family.members.iter().map(|m| bits::pack(&m.bits)).collect();
    let set: HashSet<&[u64]> = packed.iter().map(|p| p.as_slice()).collect();
    if set.len() != family.len() || family.len() != 1 << l {
        return report.fail(Witness::field(format!(
            "{} distinct members out of {}, expected {}",
            set.len(),
            family.len(),
            1usize << l
        )));
    }
    let zero = vec![0u64; packed[0].len()];
    if !set.contains(zero.as_slice()) {
        return report.fail(Witness::field("no all-zero member"));
    }

    let xor = |a: &[u64], b: &[u64]| -> Vec<u64> { a.iter().zip(b).map(|(x, y)| x ^ y).collect() };
    let method = if l <= PAIRWISE_CLOSURE_MAX_DEGREE {
        for i in 0..packed.len() {
            for j in i + 1..packed.len() {
                if !set.contains(xor(&packed[i], &packed[j]).as_slice()) {
                    let (a, b) = (family.members[i].index, family.members[j].index);
                    return report.fail(Witness::member(a, format!("{a} xor {b} is not a member")));
                }
            }
        }
        "pairwise"
    } else {
        // Span the family from the members at shifts 0..L-1 in Gray-code order.
        let basis: Vec<&[u64]> = (0..l as usize)
            .map(|s| packed[s + 1].as_slice())
            .collect();
        let mut acc = zero.clone();
        let mut spanned = HashSet::with_capacity(1 << l);
        spanned.insert(acc.clone());
        for k in 1u64..1 << l {
            let flip = k.trailing_zeros() as usize;
            acc = xor(&acc, basis[flip]);
            if !set.contains(acc.as_slice()) {
                return report.fail(Witness::field(format!("span element #{k} is not a member")));
            }
            spanned.insert(acc.clone());
        }
        if spanned.len() != set.len() {
            return report.fail(Witness::field(format!(
                "basis spans {} members of {}",
                spanned.len(),
                set.len()
            )));
        }
        "basis span"
    };

    let quarter = half_length(l) / 2;
    let mut constant = 0;
    for m in &family.members {
        let b = analysis::balance(&m.bits);
        if b.ones == 0 || b.zeros == 0 {
            constant += 1;
            continue;
        }
        if b.ones != quarter.max(1) || b.zeros != b.ones {
            return report.fail(Witness::member(m.index, format!("unbalanced: ones/zeros {b}")));
        }
    }
    if constant != 2 {
        return report.fail(Witness::field(format!("{constant} constant members, expected 2")));
    }
    report.note(format!("closure={method}"))
}

/// The member at shift `2^(L-1)` equals classic self-shrinking of the
/// m-sequence `z_n = a_(2^(L-1) n)`, its least period is `2^(L-1)` unless
/// `p = 2^(L-1)` (then 2), and it is at least `2^floor(L/2)`.
pub fn verify_self_shrinking(
    seq: &MSequence,
    family: &GssFamily,
    exps: &SpecialExponents,
) -> VerdictReport {
    let report = VerdictReport::new("self_shrinking", "self-shrinking member and its least period", family.poly);
    let l = family.degree();
    let half = half_length(l);
    let index = self_shrinking_index(&family.poly);
    let n = seq.period();
    let z: Vec<bool> = (0..n).map(|i| seq.at(half * i % n)).collect();
    let direct = match self_shrink_direct(&z) {
        Ok(d) => d,
        Err(e) => return report.fail(Witness::member(index, e.to_string())),
    };
    let member = family.bits(index).expect("in range");
    if direct.len() != member.len() {
        return report.fail(Witness::member(
            index,
            format!("direct output has {} bits, member has {}", direct.len(), member.len()),
        ));
    }
    if let Some(pos) = direct.iter().zip(member).position(|(a, b)| a != b) {
        return report.fail(Witness::at(index, pos, "direct self-shrinking output differs"));
    }

    let t = least_period(member);
    let exception = exps.p == half;
    let expected = if exception { 2 } else { half };
    if t != expected {
        return report.fail(Witness::member(index, format!("T_ss={t}, expected {expected}")));
    }
    let bound = 1usize << (l / 2);
    if t < bound {
        return report.fail(Witness::member(index, format!("T_ss={t} below 2^floor(L/2)={bound}")));
    }
    let mut report = report.note(format!("T_ss={t}"));
    if exception {
        report = report.note("p = 2^(L-1): period-2 exception");
    }
    report.note(format!("2^floor(L/2)={bound} slack={}", t - bound))
}

/// For members with least period `2^(L-1)` (and above 2):
/// `2^(L-2) < LC < 2^(L-1)`; for the self-shrinking member additionally
/// `LC < 2^(L-1) - (L-2)`. The bound `LC_ss >= 2^(floor(L/2)-1)` is only
/// reported.
pub fn verify_lc_bounds(family: &GssFamily, exps: &SpecialExponents) -> VerdictReport {
    let report = VerdictReport::new("lc_bounds", "linear complexity bounds", family.poly);
    let l = family.degree();
    let full = half_length(l);
    let lower = full / 2;
    let ss_index = self_shrinking_index(&family.poly);
    let _ = exps;

    let mut range: Option<(usize, usize)> = None;
    let mut counted = 0;
    let mut ss_lc = None;
    for m in &family.members {
        let t = least_period(&m.bits);
        let lc = linear_complexity(&m.bits, t);
        if m.index == ss_index {
            ss_lc = Some((t, lc));
        }
        if t != full || t <= 2 {
            continue;
        }
        counted += 1;
        range = Some(match range {
            None => (lc, lc),
            Some((lo, hi)) => (lo.min(lc), hi.max(lc)),
        });
        if !(lower < lc && lc < full) {
            return report.fail(Witness::member(
                m.index,
                format!("LC={lc} outside open interval ({lower}, {full})"),
            ));
        }
    }

    let mut report = match range {
        Some((lo, hi)) => report.note(format!("{counted} members with T={full}, LC in [{lo},{hi}]")),
        None => report.note(format!("vacuous: no members with T={full} > 2")),
    };
    let (ss_t, ss_lc) = ss_lc.expect("self-shrinking member is in the family");
    if ss_t == full && ss_t > 2 {
        let upper = full - (l as usize - 2);
        if ss_lc >= upper {
            let nonstrict = if ss_lc <= upper { "; LC <= bound holds" } else { "" };
            return report.fail(Witness::member(
                ss_index,
                format!("self-shrinking LC={ss_lc} not < 2^(L-1)-(L-2)={upper}{nonstrict}"),
            ));
        }
        report = report.note(format!("LC_ss={ss_lc} < {upper}"));
    } else {
        report = report.note(format!("self-shrinking member has T={ss_t}: upper bound not applicable"));
    }
    let ms_bound = 1usize << (l / 2).saturating_sub(1);
    let slack = if ss_lc >= ms_bound {
        format!("slack={}", ss_lc - ms_bound)
    } else {
        "violated".to_string()
    };
    report.note(format!("LC_ss >= 2^(floor(L/2)-1)={ms_bound} {slack}"))
}

/// Run lengths read cyclically, with a constant sequence counted as one
/// run spanning the whole period.
fn cyclic_run_lengths(bits: &[bool]) -> BTreeMap<usize, usize> {
    match run_distribution(bits) {
        Some(h) => h.length_multiset(),
        None => BTreeMap::from([(bits.len(), 1)]),
    }
}

/// Shift `q+1` has only even runs, shift `q` only runs of length 1 or 2,
/// their complements share the run-length multisets, exactly one of `α^q`,
/// `α^(q+1)` contains `α^(L-1)`, and `α^q + α^(q+1) = α^p`.
pub fn verify_nonpseudorandom(field: &Field, family: &GssFamily, exps: &SpecialExponents) -> VerdictReport {
    let report = VerdictReport::new("nonpseudorandom", "run structure at shifts q and q+1", family.poly);
    let l = family.degree();
    let aq = field.alpha_power(exps.q as i64);
    let aq1 = field.alpha_power(exps.q as i64 + 1);
    let ap = field.alpha_power(exps.p as i64);
    if aq.checked_add(aq1).ok() != Some(ap) {
        return report.fail(Witness::field(format!("α^q + α^(q+1) = {} != α^p = {ap}", aq.checked_add(aq1).map(|e| e.to_string()).unwrap_or_default())));
    }
    if aq.coordinate(l - 1) == aq1.coordinate(l - 1) {
        return report.fail(Witness::field(format!(
            "α^q = {aq} and α^(q+1) = {aq1} agree in the α^(L-1) coordinate"
        )));
    }

    let even_index = GssIndex::Shift(exps.q_plus_one());
    let short_index = GssIndex::Shift(exps.q);
    let even_runs = cyclic_run_lengths(family.bits(even_index).expect("in range"));
    if let Some(&bad) = even_runs.keys().find(|len| *len % 2 != 0) {
        return report.fail(Witness::member(even_index, format!("run of odd length {bad}")));
    }
    let short_runs = cyclic_run_lengths(family.bits(short_index).expect("in range"));
    if let Some(&bad) = short_runs.keys().find(|len| **len > 2) {
        return report.fail(Witness::member(short_index, format!("run of length {bad}")));
    }

    let mut report = report;
    for (index, runs) in [(even_index, &even_runs), (short_index, &short_runs)] {
        match complement_partner(field, index) {
            Ok(partner) => {
                let theirs = cyclic_run_lengths(family.bits(partner).expect("in range"));
                if &theirs != runs {
                    return report.fail(Witness::member(
                        partner,
                        format!("complement of {index} has a different run-length multiset"),
                    ));
                }
                report = report.note(format!("{index}<->{partner}"));
            }
            Err(_) => report = report.note(format!("{index} has no complement partner")),
        }
    }
    report.note(format!("q={}", exps.q))
}

/// Registry names, in the order [`verify_all`] reports them.
pub const VERIFIER_NAMES: [&str; 9] = [
    "periods",
    "theorem1",
    "theorem2",
    "theorem3",
    "theorem4",
    "group",
    "self_shrinking",
    "lc_bounds",
    "nonpseudorandom",
];

pub fn run_verifier(name: &str, wb: &Workbench) -> Result<VerdictReport, TheoremError> {
    let report = match name {
        "periods" => verify_period_classification(&wb.family, &wb.exps),
        "theorem1" => verify_theorem1_corollary1(&wb.family, &wb.exps),
        "theorem2" => verify_theorem2(&wb.family),
        "theorem3" => verify_theorem3_family(&wb.field, &wb.seq, &wb.family),
        "theorem4" => verify_theorem4(&wb.family),
        "group" => verify_group_and_balance(&wb.family),
        "self_shrinking" => verify_self_shrinking(&wb.seq, &wb.family, &wb.exps),
        "lc_bounds" => verify_lc_bounds(&wb.family, &wb.exps),
        "nonpseudorandom" => verify_nonpseudorandom(&wb.field, &wb.family, &wb.exps),
        other => return Err(TheoremError::UnknownVerifier(other.to_string())),
    };
    Ok(report)
}

/// Runs the named verifiers concurrently; output order follows `names`.
pub fn run_verifiers(names: &[&str], wb: &Workbench) -> Result<Vec<VerdictReport>, TheoremError> {
    names.par_iter().map(|n| run_verifier(n, wb)).collect()
}

pub fn verify_all_on(wb: &Workbench) -> Vec<VerdictReport> {
    run_verifiers(&VERIFIER_NAMES, wb).expect("registry names are all known")
}

pub fn verify_all(poly: PrimitivePolynomial) -> Result<Vec<VerdictReport>, TheoremError> {
    Ok(verify_all_on(&Workbench::new(poly)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits::{from_ascii, to_ascii};
    use crate::gf2x::primitive_polynomials;

    fn wb(p: &str) -> Workbench {
        Workbench::new(p.parse().unwrap()).unwrap()
    }

    #[test]
    fn special_exponent_examples() {
        let w = wb("x^3+x+1");
        assert_eq!((w.exps.m, w.exps.p), (3, 4));
        let w = wb("x^5+x^2+1");
        assert_eq!((w.exps.p, w.exps.q), (13, 26));
        assert_eq!(w.exps.m, 18);
        let w = wb("x^4+x+1");
        assert_eq!((w.exps.m, w.exps.p), (4, 11));
        let f = &w.field;
        assert_eq!(f.alpha_power(12), f.add(f.alpha_power(11), f.one()).unwrap());
    }

    #[test]
    fn special_exponent_identities_for_all_small_polynomials() {
        for l in 2..=12 {
            for p in primitive_polynomials(l) {
                let f = Field::new(p);
                let e = find_special_exponents(&f).unwrap();
                assert!(e.p < e.order && e.q < e.order);
                assert_eq!(e.p, (e.order - e.m) % e.order);
            }
        }
        // the L = 2 field sits at the edge of the stated range: p = 1 = L - 1
        let e = find_special_exponents(&Field::new("x^2+x+1".parse().unwrap())).unwrap();
        assert_eq!((e.m, e.p, e.q), (2, 1, 2));
        assert!(e.p_within_stated_bound(2));
    }

    #[test]
    fn period_classification_examples() {
        let w = wb("x^3+x+1");
        let r = verify_period_classification(&w.family, &w.exps);
        assert!(r.is_confirmed(), "{}", r.scorecard_line());
        for m in &w.family.members {
            let t = least_period(&m.bits);
            match m.index {
                GssIndex::Zero | GssIndex::Shift(0) => assert_eq!(t, 1),
                GssIndex::Shift(4) | GssIndex::Shift(5) => assert_eq!(t, 2),
                _ => assert_eq!(t, 4),
            }
        }
        let w = wb("x^2+x+1");
        let r = verify_period_classification(&w.family, &w.exps);
        assert!(r.is_confirmed());
        assert!(r.notes[0].contains("{1,2}"));
        let w = wb("x^4+x+1");
        let r = verify_period_classification(&w.family, &w.exps);
        assert_eq!(r.notes[0], "periods={1,2,8}");
    }

    #[test]
    fn theorem1_examples() {
        let w = wb("x^3+x+1");
        assert_eq!(to_ascii(w.family.bits(GssIndex::Shift(4)).unwrap()), "1010");
        assert!(verify_theorem1_corollary1(&w.family, &w.exps).is_confirmed());
        let w = wb("x^4+x+1");
        assert_eq!(to_ascii(w.family.bits(GssIndex::Shift(12)).unwrap()), "01010101");
        let w = wb("x^5+x^2+1");
        assert_eq!(to_ascii(w.family.bits(GssIndex::Shift(13)).unwrap()), "1010101010101010");
        assert!(verify_theorem1_corollary1(&w.family, &w.exps).is_confirmed());
    }

    #[test]
    fn theorem2_confirms_and_negative_control_fails() {
        for p in ["x^4+x+1", "x^5+x^2+1"] {
            let w = wb(p);
            assert!(verify_theorem2(&w.family).is_confirmed(), "{p}");
        }
        let mut w = wb("x^3+x+1");
        w.family.members[3].bits = from_ascii("0001").unwrap();
        let r = verify_theorem2(&w.family);
        assert_eq!(r.status, Status::Counterexample);
        assert_eq!(r.witness.unwrap().index, Some(GssIndex::Shift(2)));
    }

    #[test]
    fn theorem3_examples() {
        let w = wb("x^4+x+1");
        for (s, d) in [(7, 2), (3, 11), (14, 4), (9, 13)] {
            let r = verify_theorem3(&w.field, &w.seq, s).unwrap();
            assert!(r.is_confirmed());
            assert_eq!(r.notes, [format!("s={s} d={d}")]);
        }
        assert!(matches!(verify_theorem3(&w.field, &w.seq, 0), Err(GssError::NoPartner(_))));
        assert!(verify_theorem3_family(&w.field, &w.seq, &w.family).is_confirmed());
    }

    #[test]
    fn theorem4_examples() {
        let w = wb("x^3+x+1");
        let r = verify_theorem4(&w.family);
        assert!(r.is_confirmed());
        assert!(r.notes[0].starts_with("vacuous"));
        let w = wb("x^5+x^2+1");
        let r = verify_theorem4(&w.family);
        assert!(r.is_confirmed());
        assert_eq!(r.notes[0], "excluded={4,8}");
        let w = wb("x^8+x^4+x^3+x^2+1");
        let r = verify_theorem4(&w.family);
        assert!(r.is_confirmed());
        assert_eq!(r.notes[0], "excluded={4,8,16,32,64}");
    }

    #[test]
    fn group_examples() {
        let w = wb("x^4+x+1");
        assert!(verify_group_and_balance(&w.family).is_confirmed());
        let w = wb("x^5+x^2+1");
        let row1 = w.family.bits(GssIndex::Shift(27)).unwrap();
        let row3 = w.family.bits(GssIndex::Shift(26)).unwrap();
        assert_eq!(to_ascii(&bits::xor(row1, row3)), "1010101010101010");
        assert_eq!(bits::xor(row1, row3), w.family.bits(GssIndex::Shift(13)).unwrap());
        let zero = w.family.bits(GssIndex::Zero).unwrap();
        for m in &w.family.members {
            assert_eq!(bits::xor(zero, &m.bits), m.bits);
        }
    }

    #[test]
    fn group_span_path_agrees_with_pairwise() {
        let w = wb("x^11+x^2+1");
        let r = verify_group_and_balance(&w.family);
        assert!(r.is_confirmed(), "{}", r.scorecard_line());
        assert_eq!(r.notes, ["closure=basis span"]);

        let mut broken = w.family.clone();
        broken.members[100].bits[0] ^= true;
        assert!(!verify_group_and_balance(&broken).is_confirmed());
    }

    #[test]
    fn self_shrinking_examples() {
        let w = wb("x^3+x+1");
        let r = verify_self_shrinking(&w.seq, &w.family, &w.exps);
        assert!(r.is_confirmed());
        assert!(r.notes.contains(&"T_ss=2".to_string()));
        let w = wb("x^5+x^2+1");
        let r = verify_self_shrinking(&w.seq, &w.family, &w.exps);
        assert!(r.notes.contains(&"T_ss=16".to_string()));
        let w = wb("x^4+x+1");
        let r = verify_self_shrinking(&w.seq, &w.family, &w.exps);
        assert!(r.is_confirmed());
        assert!(r.notes.contains(&"2^floor(L/2)=4 slack=4".to_string()));
    }

    #[test]
    fn lc_bounds_examples() {
        let w = wb("x^4+x+1");
        let r = verify_lc_bounds(&w.family, &w.exps);
        assert!(r.is_confirmed(), "{}", r.scorecard_line());

        // every period-16 member of the L = 5 family is inside (8, 16)
        let w = wb("x^5+x^2+1");
        for m in &w.family.members {
            let t = least_period(&m.bits);
            if t == 16 {
                let lc = linear_complexity(&m.bits, t);
                assert!(8 < lc && lc < 16);
            }
        }
    }

    #[test]
    fn nonpseudorandom_examples() {
        let w = wb("x^5+x^2+1");
        let f = &w.family;
        assert_eq!(to_ascii(f.bits(GssIndex::Shift(27)).unwrap()), "0000110011001111");
        assert_eq!(to_ascii(f.bits(GssIndex::Shift(26)).unwrap()), "1010011001100101");
        let partner = complement_partner(&w.field, GssIndex::Shift(27)).unwrap();
        assert_eq!(to_ascii(f.bits(partner).unwrap()), "1111001100110000");
        let partner = complement_partner(&w.field, GssIndex::Shift(26)).unwrap();
        assert_eq!(to_ascii(f.bits(partner).unwrap()), "0101100110011010");
        assert!(verify_nonpseudorandom(&w.field, f, &w.exps).is_confirmed());
    }

    #[test]
    fn tampered_families_yield_replayable_witnesses() {
        let w = wb("x^5+x^2+1");
        let mut fam = w.family.clone();
        // make shift 3 periodic with period 8
        let b = fam.members[4].bits.clone();
        fam.members[4].bits = b[..8].iter().chain(&b[..8]).copied().collect();
        let r = verify_period_classification(&fam, &w.exps);
        let witness = r.witness.expect("counterexample");
        assert_eq!(witness.index, Some(GssIndex::Shift(3)));
        let replay = least_period(fam.bits(GssIndex::Shift(3)).unwrap());
        assert_eq!(replay, 8);
        assert!(!verify_theorem4(&fam).is_confirmed());

        let mut fam = w.family.clone();
        fam.members[14].bits[0] ^= true; // shift 13 = p
        let r = verify_theorem1_corollary1(&fam, &w.exps);
        let witness = r.witness.unwrap();
        assert_eq!((witness.index, witness.position), (Some(GssIndex::Shift(13)), Some(0)));
    }

    #[test]
    fn verify_all_small_degrees() {
        for p in ["x^3+x+1", "x^4+x+1"] {
            let reports = verify_all(p.parse().unwrap()).unwrap();
            let names: Vec<&str> = reports.iter().map(|r| r.name).collect();
            assert_eq!(names, VERIFIER_NAMES);
            for r in &reports {
                assert!(r.is_confirmed(), "{p}: {}", r.scorecard_line());
            }
        }
        let w = wb("x^3+x+1");
        assert!(run_verifier("nope", &w).is_err());
    }
}
