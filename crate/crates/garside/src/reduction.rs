//! Detection of invariant almost-round curves in positive braids.
//!
//! A positive braid can be viewed as a *dance* of the `n` punctures: one
//! letter `σ_i` is a clockwise exchange of the punctures at positions `i` and
//! `i+1`, the left one passing over the right one (the same convention as
//! the curve action in [`crate::curves`]). An essential curve that the braid
//! preserves and whose interior strands do not cross can be flattened to an
//! almost-horizontal arc joining two punctures — the *endpoints* — and the
//! punctures between the endpoints then lie consistently above or below the
//! arc at every moment of the dance.
//!
//! Labelling the punctures `a` (above) or `b` (below) turns that picture
//! into pure combinatorics: crossings with an endpoint force labels, exits
//! clear them, and crossings between two interior punctures propagate them.
//! Running the dance enough times either derives a contradiction — no such
//! arc exists for this endpoint pair — or stabilizes on a consistent
//! periodic labelling, which is returned as a machine-checkable witness.

use crate::canonical::CanonicalBraid;
use crate::curves::{self, coord_of_round, roundness, CurveCoord, RoundFamily};
use crate::word::GeneratorWord;
use crate::{Error, Result};
use std::collections::VecDeque;

/// Whether a puncture lies above or below the invariant arc.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum StrandLabel {
    /// Labelled `a`: the puncture lies above the arc.
    Above,
    /// Labelled `b`: the puncture lies below the arc.
    Below,
}

impl std::fmt::Display for StrandLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            StrandLabel::Above => write!(f, "a"),
            StrandLabel::Below => write!(f, "b"),
        }
    }
}

/// One clockwise exchange of the dance: the strands at positions
/// `position` and `position + 1` swap, the left one passing over.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DanceStep {
    position: usize,
    over: usize,
    under: usize,
}

impl DanceStep {
    /// The left position of the swapped pair.
    pub fn position(&self) -> usize {
        self.position
    }

    /// The strand moving rightward, passing over.
    pub fn over(&self) -> usize {
        self.over
    }

    /// The strand moving leftward, passing under.
    pub fn under(&self) -> usize {
        self.under
    }
}

/// The dance of a positive braid word: its swaps in order, with the
/// identities of the strands involved, plus the final positions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Dance {
    n: usize,
    steps: Vec<DanceStep>,
    /// `final_positions[s - 1]` = position of strand `s` after the word.
    final_positions: Vec<usize>,
}

impl Dance {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn steps(&self) -> &[DanceStep] {
        &self.steps
    }

    /// Where strand `s` (1-based start position) ends up.
    pub fn final_position(&self, s: usize) -> usize {
        self.final_positions[s - 1]
    }
}

/// Runs the dance of a positive word, recording each swap with the strand
/// identities involved.
pub fn dance(w: &GeneratorWord) -> Result<Dance> {
    let n = w.n();
    let mut at_pos: Vec<usize> = (0..=n).collect();
    let mut steps = Vec::new();
    for g in w.to_signed_letters() {
        if g < 0 {
            return Err(Error::NotPositive { letter: g });
        }
        let i = g as usize;
        steps.push(DanceStep { position: i, over: at_pos[i], under: at_pos[i + 1] });
        at_pos.swap(i, i + 1);
    }
    let mut final_positions = vec![0; n];
    for pos in 1..=n {
        final_positions[at_pos[pos] - 1] = pos;
    }
    Ok(Dance { n, steps, final_positions })
}

/// A consistent periodic labelling of the punctures for one endpoint pair:
/// the combinatorial shadow of an invariant almost-horizontal arc.
///
/// Row `t` (for `t = 0..=period`) gives each strand's label just before
/// step `t+1` of one period of the dance, together with each strand's
/// position; row `period` wraps around to row `0` position-wise.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Labelling {
    n: usize,
    period: usize,
    pair: (usize, usize),
    /// `rows[t][s - 1]` = label of strand `s` at time `t`.
    rows: Vec<Vec<Option<StrandLabel>>>,
    /// `positions[t][s - 1]` = position of strand `s` at time `t`.
    positions: Vec<Vec<usize>>,
}

impl Labelling {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of dance steps in one period (the word length).
    pub fn period(&self) -> usize {
        self.period
    }

    /// The endpoint pair `(p, q)` with `p < q`.
    pub fn pair(&self) -> (usize, usize) {
        self.pair
    }

    /// Label of strand `s` at time `t ∈ 0..=period`.
    pub fn label(&self, t: usize, s: usize) -> Option<StrandLabel> {
        self.rows[t][s - 1]
    }

    /// Position of strand `s` at time `t`.
    pub fn position(&self, t: usize, s: usize) -> usize {
        self.positions[t][s - 1]
    }

    /// The strand sitting at position `pos` at time `t`.
    pub fn strand_at(&self, t: usize, pos: usize) -> usize {
        self.positions[t]
            .iter()
            .position(|&x| x == pos)
            .expect("positions form a permutation")
            + 1
    }

    /// Label of the puncture at position `pos` at time `t`.
    pub fn label_at_position(&self, t: usize, pos: usize) -> Option<StrandLabel> {
        self.rows[t][self.strand_at(t, pos) - 1]
    }

    /// The labelling as one line per time step (`t = 0..period`), one
    /// character per position: `a`, `b`, or `·`.
    pub fn grid(&self) -> Vec<String> {
        (0..self.period.max(1))
            .map(|t| {
                let t = t.min(self.period);
                (1..=self.n)
                    .map(|pos| match self.label_at_position(t, pos) {
                        Some(l) => l.to_string(),
                        None => "·".to_string(),
                    })
                    .collect::<Vec<_>>()
                    .join("")
            })
            .collect()
    }

    /// Independently re-checks every labelling rule against the word.
    ///
    /// This does not trust how the labelling was produced: it verifies the
    /// position bookkeeping, that only strands strictly between the
    /// endpoints carry labels, that labels persist away from endpoint
    /// crossings, the forced labels and forbidden moves at endpoint
    /// crossings, the propagation rule between interior punctures, and
    /// periodicity of the position labelling.
    pub fn verify(&self, word: &GeneratorWord) -> bool {
        let n = self.n;
        let (p, q) = self.pair;
        if word.n() != n || p < 1 || q <= p || q > n {
            return false;
        }
        let letters: Vec<isize> = word.to_signed_letters();
        if letters.iter().any(|&g| g <= 0) || letters.len() != self.period {
            return false;
        }
        if self.rows.len() != self.period + 1 || self.positions.len() != self.period + 1 {
            return false;
        }
        for t in 0..=self.period {
            if self.rows[t].len() != n || self.positions[t].len() != n {
                return false;
            }
            let mut seen = vec![false; n + 1];
            for &pos in &self.positions[t] {
                if pos < 1 || pos > n || seen[pos] {
                    return false;
                }
                seen[pos] = true;
            }
            // Endpoints are unlabelled and never exchange sides.
            if self.rows[t][p - 1].is_some() || self.rows[t][q - 1].is_some() {
                return false;
            }
            let (pp, pq) = (self.positions[t][p - 1], self.positions[t][q - 1]);
            if pp >= pq {
                return false;
            }
            // Only strands strictly between the endpoints may be labelled.
            for s in 1..=n {
                if self.rows[t][s - 1].is_some() {
                    let ps = self.positions[t][s - 1];
                    if !(pp < ps && ps < pq) {
                        return false;
                    }
                }
            }
        }
        // The stored frame must start at a period boundary for the pair.
        if self.positions[0][p - 1] != p || self.positions[0][q - 1] != q {
            return false;
        }
        use StrandLabel::{Above, Below};
        for t in 0..self.period {
            let i = letters[t] as usize;
            if i >= n {
                return false;
            }
            let u = self.strand_at(t, i);
            let v = self.strand_at(t, i + 1);
            // Position bookkeeping: exactly u and v swap.
            for s in 1..=n {
                let expect = if s == u {
                    i + 1
                } else if s == v {
                    i
                } else {
                    self.positions[t][s - 1]
                };
                if self.positions[t + 1][s - 1] != expect {
                    return false;
                }
            }
            if (u == p && v == q) || (u == q && v == p) {
                return false;
            }
            // Labels of uninvolved strands persist.
            for s in 1..=n {
                if s != u && s != v && self.rows[t + 1][s - 1] != self.rows[t][s - 1] {
                    return false;
                }
            }
            let before = |s: usize| self.rows[t][s - 1];
            let after = |s: usize| self.rows[t + 1][s - 1];
            if u == p {
                // v passes under the left endpoint and exits leftward: it
                // must not be labelled `a`, and is unlabelled afterwards.
                if before(v) == Some(Above) || after(v).is_some() {
                    return false;
                }
            } else if u == q {
                // v passes under the right endpoint, entering: forced `b`.
                if after(v) != Some(Below) {
                    return false;
                }
            } else if v == p {
                // u passes over the left endpoint, entering: forced `a`.
                if after(u) != Some(Above) {
                    return false;
                }
            } else if v == q {
                // u passes over the right endpoint and exits rightward: it
                // must not be labelled `b`, and is unlabelled afterwards.
                if before(u) == Some(Below) || after(u).is_some() {
                    return false;
                }
            } else {
                // No endpoint involved: labels persist...
                if after(u) != before(u) || after(v) != before(v) {
                    return false;
                }
                // ...and between the endpoints the propagation rule binds:
                // whoever passes under an `a` is itself `a`, whoever passes
                // over a `b` is itself `b`.
                let pp = self.positions[t][p - 1];
                let pq = self.positions[t][q - 1];
                if pp < i && i + 1 < pq {
                    if before(v) == Some(Above) && before(u) != Some(Above) {
                        return false;
                    }
                    if before(u) == Some(Below) && before(v) != Some(Below) {
                        return false;
                    }
                }
            }
        }
        // Periodicity: the labelling by position repeats after one period.
        for pos in 1..=n {
            if self.label_at_position(0, pos) != self.label_at_position(self.period, pos) {
                return false;
            }
        }
        true
    }
}

/// The running state of the forced-label propagation.
struct Machine {
    p: usize,
    q: usize,
    labels: Vec<Option<StrandLabel>>,
    at_pos: Vec<usize>,
    pos_of: Vec<usize>,
}

impl Machine {
    fn new(n: usize, p: usize, q: usize) -> Machine {
        Machine {
            p,
            q,
            labels: vec![None; n + 1],
            at_pos: (0..=n).collect(),
            pos_of: (0..=n).collect(),
        }
    }

    /// Applies one swap at positions `(i, i+1)`, propagating forced labels.
    /// Returns `false` on a contradiction.
    fn swap(&mut self, i: usize) -> bool {
        use StrandLabel::{Above, Below};
        let u = self.at_pos[i];
        let v = self.at_pos[i + 1];
        debug_assert!(
            !(u == self.p && v == self.q || u == self.q && v == self.p),
            "endpoint crossings are screened before the run"
        );
        if u == self.p {
            if self.labels[v] == Some(Above) {
                return false;
            }
            self.labels[v] = None;
        } else if u == self.q {
            debug_assert!(self.labels[v].is_none(), "entering strand was outside");
            self.labels[v] = Some(Below);
        } else if v == self.p {
            debug_assert!(self.labels[u].is_none(), "entering strand was outside");
            self.labels[u] = Some(Above);
        } else if v == self.q {
            if self.labels[u] == Some(Below) {
                return false;
            }
            self.labels[u] = None;
        } else if self.pos_of[self.p] < i && i + 1 < self.pos_of[self.q] {
            if self.labels[v] == Some(Above) {
                if self.labels[u] == Some(Below) {
                    return false;
                }
                self.labels[u] = Some(Above);
            }
            if self.labels[u] == Some(Below) {
                self.labels[v] = Some(Below);
            }
        }
        self.at_pos.swap(i, i + 1);
        self.pos_of[u] = i + 1;
        self.pos_of[v] = i;
        true
    }

    fn row_by_position(&self) -> Vec<Option<StrandLabel>> {
        (1..=self.at_pos.len() - 1).map(|pos| self.labels[self.at_pos[pos]]).collect()
    }

    fn row_by_strand(&self) -> Vec<Option<StrandLabel>> {
        self.labels[1..].to_vec()
    }

    fn positions_by_strand(&self) -> Vec<usize> {
        self.pos_of[1..].to_vec()
    }
}

/// Searches for a consistent periodic labelling with endpoint pair
/// `(p, q)`, by propagating forced labels through `2n` repetitions of the
/// dance of `w`.
///
/// Returns `Ok(None)` when propagation derives a contradiction — either a
/// forbidden endpoint crossing by a labelled strand, or a violation of
/// periodicity (two different letters at the same position one period
/// apart). Returns an error if the pair itself is invalid: the endpoint
/// strands must be pure and must never cross each other.
pub fn label_search(w: &GeneratorWord, pair: (usize, usize)) -> Result<Option<Labelling>> {
    let n = w.n();
    let (p, q) = pair;
    if p < 1 || q > n || p >= q {
        return Err(Error::InvalidPair {
            p,
            q,
            reason: "endpoints must satisfy 1 ≤ p < q ≤ n".to_string(),
        });
    }
    let d = dance(w)?;
    if d.final_position(p) != p {
        return Err(Error::InvalidPair {
            p,
            q,
            reason: format!("strand {p} is not pure"),
        });
    }
    if d.final_position(q) != q {
        return Err(Error::InvalidPair {
            p,
            q,
            reason: format!("strand {q} is not pure"),
        });
    }
    // Pure endpoints restart each repetition from the same positions, so
    // the strand pairs meeting at each swap repeat; one period suffices to
    // detect an endpoint crossing.
    if d.steps().iter().any(|s| {
        (s.over() == p && s.under() == q) || (s.over() == q && s.under() == p)
    }) {
        return Err(Error::InvalidPair {
            p,
            q,
            reason: "endpoint strands cross each other".to_string(),
        });
    }
    let letters: Vec<usize> = d.steps().iter().map(|s| s.position()).collect();
    let ell = letters.len();
    if ell == 0 {
        return Ok(Some(Labelling {
            n,
            period: 0,
            pair,
            rows: vec![vec![None; n]],
            positions: vec![(1..=n).collect()],
        }));
    }
    let reps = 2 * n;
    let mut m = Machine::new(n, p, q);
    let mut window: VecDeque<Vec<Option<StrandLabel>>> = VecDeque::with_capacity(ell + 1);
    window.push_back(m.row_by_position());
    let mut rows = Vec::new();
    let mut positions = Vec::new();
    for rep in 0..reps {
        let last = rep == reps - 1;
        if last {
            rows.push(m.row_by_strand());
            positions.push(m.positions_by_strand());
        }
        for &i in &letters {
            if !m.swap(i) {
                return Ok(None);
            }
            let row = m.row_by_position();
            window.push_back(row.clone());
            if window.len() == ell + 2 {
                let old = window.pop_front().expect("window is nonempty");
                // Periodicity: two different letters one period apart at
                // the same position contradict any consistent labelling.
                for (a, b) in old.iter().zip(row.iter()) {
                    if let (Some(x), Some(y)) = (a, b) {
                        if x != y {
                            return Ok(None);
                        }
                    }
                }
                assert!(
                    !last || old == row,
                    "labelling failed to stabilize within 2n repetitions"
                );
            }
            if last {
                rows.push(m.row_by_strand());
                positions.push(m.positions_by_strand());
            }
        }
    }
    let found = Labelling { n, period: ell, pair, rows, positions };
    debug_assert!(found.verify(w), "propagated labelling fails its own rules");
    Ok(Some(found))
}

/// A machine-checkable certificate of reducibility.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ReductionWitness {
    /// A family of round curves permuted by the `power`-th power of the
    /// certified braid.
    RoundFamily { family: RoundFamily, power: i64 },
    /// A consistent labelling certifying an invariant almost-round curve of
    /// the positive braid `word`; the curve encloses the punctures
    /// `enclosed` (the endpoints and the unlabelled punctures between
    /// them).
    AlmostRound {
        word: GeneratorWord,
        pair: (usize, usize),
        labelling: Labelling,
        enclosed: Vec<usize>,
    },
}

/// The punctures enclosed by the arc's bounding curve: the endpoints plus
/// every puncture strictly between them that is unlabelled at time 0.
fn enclosed_punctures(lab: &Labelling) -> Vec<usize> {
    let (p, q) = lab.pair();
    let mut out = vec![p];
    for pos in (p + 1)..q {
        if lab.label_at_position(0, pos).is_none() {
            out.push(pos);
        }
    }
    out.push(q);
    out
}

impl ReductionWitness {
    /// The coordinate vector of the invariant curve an almost-round witness
    /// describes: the boundary of a neighborhood of the arc at time 0.
    ///
    /// The curve crosses exactly the walls between the endpoints, twice
    /// each, like the round curve on the same span; above each `a`-labelled
    /// puncture the vertical ray misses it while the ray below meets it
    /// twice (so `a = −1`), symmetrically `+1` below `b`-labelled ones, and
    /// `0` at punctures the arc traverses.
    pub fn curve(&self) -> Option<CurveCoord> {
        let ReductionWitness::AlmostRound { labelling, .. } = self else {
            return None;
        };
        let n = labelling.n();
        let (p, q) = labelling.pair();
        let mut a = vec![0i64; n - 2];
        let mut b = vec![0i64; n - 2];
        if p >= 2 {
            b[p - 2] = -1;
        }
        if q <= n - 1 {
            b[q - 2] = 1;
        }
        for pos in 2..=(n - 1) {
            if pos > p && pos < q {
                a[pos - 2] = match labelling.label_at_position(0, pos) {
                    None => 0,
                    Some(StrandLabel::Above) => -1,
                    Some(StrandLabel::Below) => 1,
                };
            }
        }
        Some(CurveCoord::new(n, a, b).expect("lengths match by construction"))
    }

    /// Fully re-checks the certificate against the braid it certifies.
    ///
    /// A round-family witness re-verifies by letting the stated power act
    /// on every member curve. An almost-round witness re-verifies its
    /// labelling rule by rule, the enclosed set, essentialness of the
    /// curve, invariance of the curve under the positive word, and that the
    /// word is the certified braid itself or one of its central positive
    /// companions `Δ^{-inf}·β^k` / `β^{-k}·Δ^{sup}` with even twisting.
    pub fn verify(&self, subject: &CanonicalBraid) -> bool {
        match self {
            ReductionWitness::RoundFamily { family, power } => {
                if *power < 1 {
                    return false;
                }
                let y = subject.pow(*power);
                let n = y.n();
                family.curves().iter().all(|&c| {
                    coord_of_round(c, n)
                        .ok()
                        .and_then(|coord| coord.apply(&y).ok())
                        .and_then(|img| roundness(&img))
                        .is_some_and(|d| family.contains(&d))
                })
            }
            ReductionWitness::AlmostRound { word, pair, labelling, enclosed } => {
                let n = word.n();
                if n != subject.n()
                    || !word.is_positive()
                    || labelling.pair() != *pair
                    || !labelling.verify(word)
                    || *enclosed != enclosed_punctures(labelling)
                    || enclosed.len() < 2
                    || enclosed.len() >= n
                {
                    return false;
                }
                let curve = self.curve().expect("almost-round witness has a curve");
                match curve.apply_word(word) {
                    Ok(img) if img == curve => {}
                    _ => return false,
                }
                let braid = CanonicalBraid::from_word(word);
                if braid == *subject {
                    return true;
                }
                let mut y = CanonicalBraid::trivial(n);
                for _ in 1..=n {
                    y = match y.multiply(subject) {
                        Ok(next) => next,
                        Err(_) => return false,
                    };
                    if y.inf() % 2 != 0 || y.sup() % 2 != 0 {
                        continue;
                    }
                    let from_inf = CanonicalBraid::delta_pow(n, -y.inf())
                        .multiply(&y)
                        .expect("same strand count");
                    let from_sup = y
                        .inverse()
                        .multiply(&CanonicalBraid::delta_pow(n, y.sup()))
                        .expect("same strand count");
                    if braid == from_inf || braid == from_sup {
                        return true;
                    }
                }
                false
            }
        }
    }
}

impl std::fmt::Display for ReductionWitness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ReductionWitness::RoundFamily { family, power } => {
                write!(f, "round family [{family}] preserved by power {power}")
            }
            ReductionWitness::AlmostRound { pair, enclosed, .. } => {
                let set: Vec<String> = enclosed.iter().map(|p| p.to_string()).collect();
                write!(
                    f,
                    "almost-round curve with endpoints ({},{}) enclosing {{{}}}",
                    pair.0,
                    pair.1,
                    set.join(",")
                )
            }
        }
    }
}

/// Scans all endpoint pairs in lexicographic order for an invariant
/// almost-round curve of the positive word `w`, returning the first
/// essential witness found.
///
/// Pairs whose strands are not pure or cross each other are skipped, as are
/// labellings whose bounding curve would enclose every puncture (such a
/// curve is parallel to the boundary and certifies nothing).
pub fn almost_round_invariant_arc(w: &GeneratorWord) -> Result<Option<ReductionWitness>> {
    if let Some(&letter) = w.to_signed_letters().iter().find(|&&g| g < 0) {
        return Err(Error::NotPositive { letter });
    }
    let n = w.n();
    for p in 1..=n {
        for q in (p + 1)..=n {
            let labelling = match label_search(w, (p, q)) {
                Ok(Some(l)) => l,
                Ok(None) => continue,
                Err(_) => continue,
            };
            let enclosed = enclosed_punctures(&labelling);
            if enclosed.len() >= n {
                continue;
            }
            return Ok(Some(ReductionWitness::AlmostRound {
                word: w.clone(),
                pair: (p, q),
                labelling,
                enclosed,
            }));
        }
    }
    Ok(None)
}

/// The reduction driver for a rigid, non-periodic braid: scans the powers
/// `β^k` for `k = 1..n`, first for an invariant family of round curves,
/// then — whenever both `inf(β^k)` and `sup(β^k)` are even — for an
/// invariant almost-round curve of the positive companions `Δ^{-inf}·β^k`
/// and `β^{-k}·Δ^{sup}` (central full twists do not move curves, so a curve
/// of a companion is a curve of `β^k`).
pub fn rigid_case_classify(beta: &CanonicalBraid) -> Result<Option<ReductionWitness>> {
    if !crate::sliding::is_rigid(beta) {
        return Err(Error::RigidCasePrecondition { reason: "braid is not rigid".to_string() });
    }
    let n = beta.n();
    if beta.pow(n as i64 - 1).canonical_length() == 0
        || beta.pow(n as i64).canonical_length() == 0
    {
        return Err(Error::RigidCasePrecondition { reason: "braid is periodic".to_string() });
    }
    let mut acc = beta.clone();
    for k in 1..=n {
        if k > 1 {
            acc = acc.multiply(beta).expect("same strand count");
        }
        if let Some(family) = curves::invariant_round_families(&acc).into_iter().next() {
            return Ok(Some(ReductionWitness::RoundFamily { family, power: k as i64 }));
        }
        if acc.inf() % 2 == 0 && acc.sup() % 2 == 0 {
            let from_inf = CanonicalBraid::delta_pow(n, -acc.inf())
                .multiply(&acc)
                .expect("same strand count");
            let from_sup = acc
                .inverse()
                .multiply(&CanonicalBraid::delta_pow(n, acc.sup()))
                .expect("same strand count");
            for cand in [from_inf, from_sup] {
                debug_assert!(cand.is_positive(), "companion braids are positive");
                if let Some(wit) = almost_round_invariant_arc(&cand.to_generator_word())? {
                    return Ok(Some(wit));
                }
            }
        }
    }
    Ok(None)
}
