//! Simple closed curves in the punctured disc and the braid action on them.
//!
//! Curves are tracked in triangle coordinates: with the `n` punctures on a
//! horizontal axis, put a vertical wall between each adjacent pair and count,
//! for a taut representative, the crossings `e_k` with wall `k` and the
//! crossings with the vertical rays above and below each interior puncture.
//! The coordinate vector packs, for `i = 1..n−2`,
//!
//! * `a_i` = (crossings above puncture `i+1` − crossings below) / 2,
//! * `b_i` = (`e_i` − `e_{i+1}`) / 2,
//!
//! which determines the isotopy class of an essential curve. A *round* curve
//! (one isotopic to a geometric circle) encloses a contiguous block of
//! punctures `lo..=hi`; its coordinates are `a ≡ 0` with a `−1`/`+1` pair in
//! `b` marking the block's ends.
//!
//! Generators act by a piecewise-linear update of the two coordinate pairs
//! around the swapped punctures. The positive generator `σ_i` exchanges
//! punctures `i` and `i+1` clockwise: the left puncture passes *over* (above
//! the axis), the right one under — the same convention as the puncture
//! dance in [`crate::reduction`], which the cross-module witness tests pin.

use crate::canonical::CanonicalBraid;
use crate::word::GeneratorWord;
use crate::{Error, Result};
use std::collections::{HashMap, HashSet};

/// A round curve: the circle enclosing punctures `lo..=hi`, where
/// `1 ≤ lo < hi ≤ n` and `(lo, hi) ≠ (1, n)` (it must enclose more than one
/// and fewer than all punctures).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct RoundCurve {
    lo: usize,
    hi: usize,
}

impl RoundCurve {
    pub fn new(lo: usize, hi: usize, n: usize) -> Result<Self> {
        if lo >= 1 && lo < hi && hi <= n && !(lo == 1 && hi == n) {
            Ok(RoundCurve { lo, hi })
        } else {
            Err(Error::InvalidRoundCurve { lo, hi, n })
        }
    }

    pub fn lo(&self) -> usize {
        self.lo
    }

    pub fn hi(&self) -> usize {
        self.hi
    }

    /// Number of enclosed punctures.
    pub fn width(&self) -> usize {
        self.hi - self.lo + 1
    }

    pub fn contains_puncture(&self, p: usize) -> bool {
        self.lo <= p && p <= self.hi
    }

    /// True iff the enclosed intervals are disjoint or strictly nested, i.e.
    /// disjoint representatives of the two circles exist.
    pub fn compatible(&self, other: &RoundCurve) -> bool {
        let disjoint = self.hi < other.lo || other.hi < self.lo;
        let nested = (self.lo <= other.lo && other.hi <= self.hi)
            || (other.lo <= self.lo && self.hi <= other.hi);
        disjoint || (nested && self != other)
    }

    /// All round curves on `n` strands, ordered.
    pub fn all(n: usize) -> Vec<RoundCurve> {
        let mut out = Vec::new();
        for lo in 1..=n {
            for hi in (lo + 1)..=n {
                if let Ok(c) = RoundCurve::new(lo, hi, n) {
                    out.push(c);
                }
            }
        }
        out
    }
}

impl std::fmt::Display for RoundCurve {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.lo, self.hi)
    }
}

/// Triangle coordinates of an isotopy class of curve on `n` punctures:
/// `2n−4` integers as described in the module docs.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CurveCoord {
    n: usize,
    a: Vec<i64>,
    b: Vec<i64>,
}

impl CurveCoord {
    /// Builds a coordinate vector from its two halves, which must both have
    /// `n − 2` entries. The zero vector denotes the empty multicurve.
    pub fn new(n: usize, a: Vec<i64>, b: Vec<i64>) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidStrandCount { n });
        }
        if a.len() != n - 2 || b.len() != n - 2 {
            let implied = a.len().max(b.len()) + 2;
            return Err(Error::StrandCountMismatch { left: n, right: implied });
        }
        Ok(CurveCoord { n, a, b })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The `a` half of the vector (`n−2` entries).
    pub fn a(&self) -> &[i64] {
        &self.a
    }

    /// The `b` half of the vector (`n−2` entries).
    pub fn b(&self) -> &[i64] {
        &self.b
    }

    fn get_a(&self, i: usize) -> i64 {
        self.a[i - 1]
    }

    fn get_b(&self, i: usize) -> i64 {
        self.b[i - 1]
    }

    /// Applies one signed generator (`g > 0` for `σ_g`, `g < 0` for its
    /// inverse).
    ///
    /// The interior update on the coordinate pairs `(a_{i−1}, b_{i−1})` and
    /// `(a_i, b_i)` is max-plus piecewise-linear; the end generators use the
    /// limit of the same rule as the missing outer pair degenerates into the
    /// pure loops of the boundary slab. The inverse is the vertical mirror:
    /// flipping the disc about the puncture axis negates every `a`, fixes
    /// every `b`, and exchanges over with under.
    pub fn apply_gen(&self, g: isize) -> CurveCoord {
        let i = g.unsigned_abs();
        assert!(i >= 1 && i < self.n, "generator out of range");
        if g < 0 {
            return self.negate_a().apply_gen(-g).negate_a();
        }
        let mut out = self.clone();
        if self.n < 3 {
            return out;
        }
        let pos = |x: i64| x.max(0);
        let neg = |x: i64| x.min(0);
        if i == 1 {
            let (a, b) = (self.get_a(1), self.get_b(1));
            out.a[0] = a + neg(b) + neg(pos(b) - a);
            out.b[0] = pos(b) - a;
        } else if i == self.n - 1 {
            let (a, b) = (self.get_a(self.n - 2), self.get_b(self.n - 2));
            out.a[self.n - 3] = a + pos(b) + pos(neg(b) - a);
            out.b[self.n - 3] = neg(b) - a;
        } else {
            let (x1, y1) = (self.get_a(i - 1), self.get_b(i - 1));
            let (x2, y2) = (self.get_a(i), self.get_b(i));
            let z = x1 - neg(y1) - x2 + pos(y2);
            out.a[i - 2] = x1 + pos(y1) + pos(pos(y2) - z);
            out.b[i - 2] = y2 - pos(z);
            out.a[i - 1] = x2 + neg(y2) + neg(neg(y1) + z);
            out.b[i - 1] = y1 + pos(z);
        }
        out
    }

    fn negate_a(&self) -> CurveCoord {
        CurveCoord {
            n: self.n,
            a: self.a.iter().map(|&x| -x).collect(),
            b: self.b.clone(),
        }
    }

    /// The image of the curve under a braid word, letter by letter (action
    /// on the right: `apply_word(uv) = apply_word(u)` then `apply_word(v)`).
    pub fn apply_word(&self, w: &GeneratorWord) -> Result<CurveCoord> {
        if w.n() != self.n {
            return Err(Error::StrandCountMismatch { left: self.n, right: w.n() });
        }
        let mut cur = self.clone();
        for g in w.to_signed_letters() {
            cur = cur.apply_gen(g);
        }
        Ok(cur)
    }

    /// The image of the curve under a braid in normal form.
    ///
    /// The full twist `Δ²` is the boundary Dehn twist and fixes every
    /// isotopy class, so only `inf(x) mod 2` half twists need to act.
    pub fn apply(&self, x: &CanonicalBraid) -> Result<CurveCoord> {
        if x.n() != self.n {
            return Err(Error::StrandCountMismatch { left: self.n, right: x.n() });
        }
        let mut w = GeneratorWord::empty(self.n)?;
        w.push_delta_pow(x.inf().rem_euclid(2));
        let mut cur = self.apply_word(&w)?;
        for f in x.factors() {
            for l in f.to_word_letters() {
                cur = cur.apply_gen(l as isize);
            }
        }
        Ok(cur)
    }
}

impl std::fmt::Display for CurveCoord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "a={:?} b={:?}", self.a, self.b)
    }
}

/// The coordinate vector of a round curve: `a ≡ 0`, and `b` carries `−1` at
/// `lo−1` (when `lo ≥ 2`) and `+1` at `hi−1` (when `hi ≤ n−1`), because the
/// taut circle crosses exactly the walls `lo..hi−1`, twice each.
pub fn coord_of_round(c: RoundCurve, n: usize) -> Result<CurveCoord> {
    let c = RoundCurve::new(c.lo, c.hi, n)?;
    let mut b = vec![0i64; n - 2];
    if c.lo >= 2 {
        b[c.lo - 2] = -1;
    }
    if c.hi <= n - 1 {
        b[c.hi - 2] = 1;
    }
    Ok(CurveCoord { n, a: vec![0; n - 2], b })
}

/// Decides whether a coordinate vector is a round curve, by lookup in the
/// table of all `n(n−1)/2 − 1` round-curve vectors.
pub fn roundness(coord: &CurveCoord) -> Option<RoundCurve> {
    round_table(coord.n).get(coord).copied()
}

fn round_table(n: usize) -> HashMap<CurveCoord, RoundCurve> {
    RoundCurve::all(n)
        .into_iter()
        .map(|c| (coord_of_round(c, n).expect("valid by construction"), c))
        .collect()
}

/// A family of round curves that a braid permutes: pairwise compatible
/// curves, organized into the cycles of the braid's action.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RoundFamily {
    orbits: Vec<Vec<RoundCurve>>,
}

impl RoundFamily {
    /// Builds a family from its orbits, validating that all member curves
    /// are pairwise compatible (disjoint or nested, no duplicates).
    pub fn new(orbits: Vec<Vec<RoundCurve>>) -> Result<Self> {
        let all: Vec<RoundCurve> = orbits.iter().flatten().copied().collect();
        for (i, c) in all.iter().enumerate() {
            for d in &all[i + 1..] {
                if !c.compatible(d) {
                    return Err(Error::FamilyNotInvariant);
                }
            }
        }
        if all.is_empty() {
            return Err(Error::EmptySubset);
        }
        Ok(RoundFamily { orbits })
    }

    /// The cycles of the braid action, each in action order.
    pub fn orbits(&self) -> &[Vec<RoundCurve>] {
        &self.orbits
    }

    /// All member curves, sorted.
    pub fn curves(&self) -> Vec<RoundCurve> {
        let mut all: Vec<RoundCurve> = self.orbits.iter().flatten().copied().collect();
        all.sort_unstable();
        all
    }

    pub fn contains(&self, c: &RoundCurve) -> bool {
        self.orbits.iter().flatten().any(|d| d == c)
    }
}

impl std::fmt::Display for RoundFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first_orbit = true;
        for orbit in &self.orbits {
            if !first_orbit {
                write!(f, " ; ")?;
            }
            first_orbit = false;
            let cycle: Vec<String> = orbit.iter().map(|c| c.to_string()).collect();
            write!(f, "{}", cycle.join(" -> "))?;
        }
        Ok(())
    }
}

/// Every maximal family of round curves that `x` permutes.
///
/// For each round curve the forward orbit under `x` is followed until it
/// either produces a non-round image (the curve and everything on its orbit
/// are discarded) or closes — by injectivity of the action, necessarily back
/// to its start. Closed orbits whose members are pairwise compatible are
/// kept, and compatible orbits are merged into maximal families.
pub fn invariant_round_families(x: &CanonicalBraid) -> Vec<RoundFamily> {
    let n = x.n();
    let all = RoundCurve::all(n);
    let cap = all.len();
    let mut dead: HashSet<RoundCurve> = HashSet::new();
    let mut claimed: HashSet<RoundCurve> = HashSet::new();
    let mut orbits: Vec<Vec<RoundCurve>> = Vec::new();
    for &start in &all {
        if dead.contains(&start) || claimed.contains(&start) {
            continue;
        }
        let mut orbit = vec![start];
        let mut coord = coord_of_round(start, n).expect("enumerated curve is valid");
        let closed = loop {
            coord = coord.apply(x).expect("same strand count");
            match roundness(&coord) {
                None => break false,
                Some(img) if img == start => break true,
                Some(img) => {
                    orbit.push(img);
                    assert!(
                        orbit.len() <= cap,
                        "round orbit failed to close within the table size"
                    );
                }
            }
        };
        if closed {
            let ok = orbit.iter().enumerate().all(|(i, c)| {
                orbit[i + 1..].iter().all(|d| c.compatible(d))
            });
            claimed.extend(orbit.iter().copied());
            if ok {
                orbits.push(orbit);
            }
        } else {
            dead.extend(orbit.iter().copied());
        }
    }
    // Maximal families = maximal cliques in the orbit-compatibility graph.
    let compat = |p: &[RoundCurve], q: &[RoundCurve]| {
        p.iter().all(|c| q.iter().all(|d| c.compatible(d)))
    };
    let m = orbits.len();
    let mut cliques: Vec<Vec<usize>> = Vec::new();
    let mut grow = vec![(Vec::<usize>::new(), (0..m).collect::<Vec<usize>>())];
    while let Some((base, cands)) = grow.pop() {
        if cands.is_empty() {
            // Maximal iff no outside orbit is compatible with the whole base.
            let maximal = (0..m).all(|j| {
                base.contains(&j) || !base.iter().all(|&i| compat(&orbits[i], &orbits[j]))
            });
            if maximal && !base.is_empty() && !cliques.contains(&base) {
                cliques.push(base);
            }
            continue;
        }
        let mut rest = cands.clone();
        let j = rest.remove(0);
        // Branch 1: include j, keep only candidates compatible with it.
        let mut with: Vec<usize> = base.clone();
        with.push(j);
        let filtered: Vec<usize> = rest
            .iter()
            .copied()
            .filter(|&k| compat(&orbits[j], &orbits[k]))
            .collect();
        grow.push((with, filtered));
        // Branch 2: exclude j.
        grow.push((base, rest));
    }
    let mut families: Vec<RoundFamily> = cliques
        .into_iter()
        .map(|ix| {
            let mut chosen: Vec<Vec<RoundCurve>> =
                ix.into_iter().map(|i| orbits[i].clone()).collect();
            chosen.sort();
            RoundFamily { orbits: chosen }
        })
        .collect();
    families.sort_by_key(|f| f.curves());
    families.dedup();
    families
}

/// The braid obtained by keeping only the strands that *start* at the given
/// punctures, with its crossings in original order, renumbered to
/// `1..=|strands|`.
pub fn subbraid(w: &GeneratorWord, strands: &[usize]) -> Result<GeneratorWord> {
    let n = w.n();
    if strands.is_empty() {
        return Err(Error::EmptySubset);
    }
    let mut member = vec![false; n + 1];
    for &s in strands {
        if s == 0 || s > n {
            return Err(Error::StrandOutOfRange { strand: s, n });
        }
        member[s] = true;
    }
    let m = member.iter().filter(|&&x| x).count();
    let mut at_pos: Vec<usize> = (0..=n).collect();
    let mut out = GeneratorWord::empty(m)?;
    for g in w.to_signed_letters() {
        let i = g.unsigned_abs();
        let (left, right) = (at_pos[i], at_pos[i + 1]);
        if member[left] && member[right] {
            let idx = (1..i).filter(|&p| member[at_pos[p]]).count() as isize + 1;
            out.push_signed(if g < 0 { -idx } else { idx })?;
        }
        at_pos.swap(i, i + 1);
    }
    Ok(out)
}

/// The component of `x` associated to one region of an invariant round
/// family: `curve = Some(c)` for the braid inside `c`, `curve = None` for
/// the external braid (the disc boundary).
///
/// The strand set keeps every puncture of the region not enclosed by a
/// directly nested family curve, plus one representative puncture (the
/// lowest) for each directly nested curve.
pub fn component(
    x: &CanonicalBraid,
    family: &RoundFamily,
    curve: Option<RoundCurve>,
) -> Result<CanonicalBraid> {
    component_with_choice(x, family, curve, |c| c.lo())
}

/// [`component`] with an explicit choice of representative puncture for
/// each directly nested curve; the result does not depend on the choice.
pub fn component_with_choice(
    x: &CanonicalBraid,
    family: &RoundFamily,
    curve: Option<RoundCurve>,
    pick: impl Fn(&RoundCurve) -> usize,
) -> Result<CanonicalBraid> {
    let n = x.n();
    let members = family.curves();
    // The family must really be invariant: each member must map to a member.
    for &c in &members {
        let img = coord_of_round(c, n)?.apply(x)?;
        match roundness(&img) {
            Some(d) if family.contains(&d) => {}
            _ => return Err(Error::FamilyNotInvariant),
        }
    }
    let (span_lo, span_hi) = match curve {
        Some(c) => {
            if !family.contains(&c) {
                return Err(Error::CurveNotInFamily { lo: c.lo, hi: c.hi });
            }
            (c.lo, c.hi)
        }
        None => (1, n),
    };
    // Directly nested curves: strictly inside the region, maximal there.
    let inner: Vec<RoundCurve> = members
        .iter()
        .copied()
        .filter(|d| span_lo <= d.lo && d.hi <= span_hi && Some(*d) != curve)
        .collect();
    let direct: Vec<RoundCurve> = inner
        .iter()
        .copied()
        .filter(|d| {
            !inner
                .iter()
                .any(|e| e != d && e.lo <= d.lo && d.hi <= e.hi)
        })
        .collect();
    let mut reps: Vec<usize> = Vec::new();
    for p in span_lo..=span_hi {
        match direct.iter().find(|d| d.contains_puncture(p)) {
            None => reps.push(p),
            Some(d) => {
                let chosen = pick(d);
                assert!(
                    d.contains_puncture(chosen),
                    "representative {chosen} not inside {d}"
                );
                if p == chosen {
                    reps.push(p);
                }
            }
        }
    }
    let sub = subbraid(&x.to_generator_word(), &reps)?;
    Ok(CanonicalBraid::from_word(&sub))
}
