//! Left normal forms in the braid group `B_n`.
//!
//! Every braid has a unique expression `Δ^p x_1 ⋯ x_r` where each `x_i` is a
//! simple braid other than 1 and Δ, and each adjacent pair is *left-weighted*:
//! `x_i` absorbs every atom it can from `x_{i+1}`, i.e. `∂(x_i) ∧ x_{i+1} = 1`.
//! The exponent `p = inf(x)` and the number of factors `r = ℓ(x)` (canonical
//! length, with `sup(x) = p + r`) are conjugacy-relevant invariants.
//!
//! [`CanonicalBraid`] stores exactly this data, so structural equality is
//! equality in the group, and the type can serve directly as a hash key.

use crate::simple::SimpleBraid;
use crate::word::{GeneratorWord, Letter};
use crate::{Error, Result};

/// A braid held in left normal form `Δ^p x_1 ⋯ x_r`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CanonicalBraid {
    n: usize,
    p: i64,
    factors: Vec<SimpleBraid>,
}

/// True iff the pair `(u, v)` is left-weighted: `∂(u) ∧ v = 1`, equivalently
/// the starting set of `v` is contained in the finishing set of `u`.
pub fn is_left_weighted(u: &SimpleBraid, v: &SimpleBraid) -> bool {
    u.complement().meet(v).map(|m| m.is_identity()).unwrap_or(false)
}

impl CanonicalBraid {
    /// The trivial braid on `n` strands.
    pub fn trivial(n: usize) -> Self {
        CanonicalBraid { n, p: 0, factors: Vec::new() }
    }

    /// The braid `Δ^k`. On one strand `Δ` is the identity, so the exponent
    /// is dropped there.
    pub fn delta_pow(n: usize, k: i64) -> Self {
        let p = if n <= 1 { 0 } else { k };
        CanonicalBraid { n, p, factors: Vec::new() }
    }

    /// The generator `σ_i` as a canonical braid.
    pub fn generator(n: usize, i: usize) -> Result<Self> {
        Ok(CanonicalBraid::from_simple(&SimpleBraid::generator(n, i)?))
    }

    /// A single simple factor in normal form.
    pub fn from_simple(s: &SimpleBraid) -> Self {
        if s.is_identity() {
            CanonicalBraid::trivial(s.n())
        } else if s.is_delta() {
            CanonicalBraid::delta_pow(s.n(), 1)
        } else {
            CanonicalBraid { n: s.n(), p: 0, factors: vec![s.clone()] }
        }
    }

    /// Computes the left normal form of a word, one letter at a time.
    pub fn from_word(word: &GeneratorWord) -> Self {
        let n = word.n();
        let mut acc = CanonicalBraid::trivial(n);
        for &letter in word.letters() {
            match letter {
                Letter::Sigma { index, inverse: false } => {
                    let s = SimpleBraid::generator(n, index).expect("validated by word");
                    acc = acc.multiply_unchecked(&CanonicalBraid::from_simple(&s));
                }
                Letter::Sigma { index, inverse: true } => {
                    // σ_i⁻¹ = Δ⁻¹ · (Δσ_i⁻¹), and Δσ_i⁻¹ is simple.
                    let s = SimpleBraid::generator(n, index).expect("validated by word");
                    let rem = SimpleBraid::delta(n).compose(&s.inverse_perm());
                    let piece = CanonicalBraid {
                        n,
                        p: -1,
                        factors: vec![rem],
                    };
                    acc = acc.multiply_unchecked(&piece);
                }
                Letter::DeltaPow(k) => {
                    acc = acc.multiply_unchecked(&CanonicalBraid::delta_pow(n, k));
                }
            }
        }
        acc
    }

    /// Parses a word (see [`GeneratorWord::parse`]) and normalizes it.
    pub fn parse(n: usize, input: &str) -> Result<Self> {
        Ok(CanonicalBraid::from_word(&GeneratorWord::parse(n, input)?))
    }

    /// Rebuilds normal form from an arbitrary simple-factor list following
    /// `Δ^p` (factors may include copies of 1 or Δ; they are absorbed).
    pub(crate) fn from_parts(n: usize, p: i64, factors: Vec<SimpleBraid>) -> Self {
        let mut b = CanonicalBraid { n, p, factors };
        let pairs = b.factors.len().saturating_sub(1);
        b.renormalize(0..pairs);
        b
    }

    /// Restores the left-weighted invariant by local slidings: for a dirty
    /// adjacent pair `(u, v)` move `t = ∂(u) ∧ v` from the head of `v` onto
    /// the tail of `u`. One sliding left-weights the pair it touches, so only
    /// the two neighboring pairs can newly break; a worklist seeded with
    /// `seed_pairs` (pair `i` couples `factors[i]` and `factors[i+1]`)
    /// therefore restores the invariant everywhere reachable from the seeds.
    /// Afterward full Δ factors have accumulated at the front (absorbed into
    /// `p`) and trivial factors at the back (dropped).
    fn renormalize(&mut self, seed_pairs: impl IntoIterator<Item = usize>) {
        let r = self.factors.len();
        if r >= 2 {
            let mut queued = vec![false; r - 1];
            let mut dirty = std::collections::VecDeque::new();
            for i in seed_pairs {
                if i < r - 1 && !queued[i] {
                    queued[i] = true;
                    dirty.push_back(i);
                }
            }
            while let Some(i) = dirty.pop_front() {
                queued[i] = false;
                let (head, tail) = self.factors.split_at_mut(i + 1);
                let u = &mut head[i];
                let v = &mut tail[0];
                if v.is_identity() || u.is_delta() {
                    continue;
                }
                let t = u.complement().meet(v).expect("same strand count");
                if !t.is_identity() {
                    *u = u.compose(&t);
                    *v = t.inverse_perm().compose(v);
                    for j in [i.checked_sub(1), i.checked_add(1)] {
                        if let Some(j) = j {
                            if j < r - 1 && !queued[j] {
                                queued[j] = true;
                                dirty.push_back(j);
                            }
                        }
                    }
                }
            }
        }
        // Leading Δs into the exponent. No τ adjustment: the local slidings
        // above already realize f·Δ = Δ·τ(f) while bubbling a Δ leftward, so
        // a Δ that sits at the front has nothing left to jump over.
        let lead = self.factors.iter().take_while(|f| f.is_delta()).count();
        if lead > 0 {
            self.factors.drain(..lead);
            self.p += lead as i64;
        }
        // Trailing identities vanish.
        while self.factors.last().is_some_and(|f| f.is_identity()) {
            self.factors.pop();
        }
        debug_assert!(self.factors.iter().all(|f| !f.is_identity() && !f.is_delta()));
        debug_assert!(self
            .factors
            .windows(2)
            .all(|w| is_left_weighted(&w[0], &w[1])));
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `inf(x)`: the exponent `p` of the leading Δ power.
    pub fn inf(&self) -> i64 {
        self.p
    }

    /// `sup(x) = inf(x) + ℓ(x)`.
    pub fn sup(&self) -> i64 {
        self.p + self.factors.len() as i64
    }

    /// Canonical length `ℓ(x)`: the number of non-Δ factors.
    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    /// The normal-form factors `x_1, …, x_r` (without the Δ power).
    pub fn factors(&self) -> &[SimpleBraid] {
        &self.factors
    }

    pub fn is_trivial(&self) -> bool {
        self.p == 0 && self.factors.is_empty()
    }

    /// True iff `x = Δ^k` for some `k` (canonical length zero).
    pub fn is_delta_power(&self) -> bool {
        self.factors.is_empty()
    }

    /// True iff the normal form has no negative Δ power (`inf(x) ≥ 0`).
    pub fn is_positive(&self) -> bool {
        self.p >= 0
    }

    fn multiply_unchecked(&self, other: &CanonicalBraid) -> CanonicalBraid {
        // Δ^a A · Δ^b B = Δ^{a+b} τ^b(A) B, then renormalize. Both factor
        // lists are internally left-weighted (τ preserves that), so only the
        // junction pair needs to seed the worklist.
        let mut factors: Vec<SimpleBraid> = if other.p % 2 == 0 {
            self.factors.clone()
        } else {
            self.factors.iter().map(|f| f.tau()).collect()
        };
        factors.extend(other.factors.iter().cloned());
        let mut b = CanonicalBraid { n: self.n, p: self.p + other.p, factors };
        let junction = self.factors.len().checked_sub(1);
        b.renormalize(junction.filter(|_| !other.factors.is_empty()));
        b
    }

    /// The product `self · other` in normal form.
    pub fn multiply(&self, other: &CanonicalBraid) -> Result<CanonicalBraid> {
        if self.n != other.n {
            return Err(Error::StrandCountMismatch { left: self.n, right: other.n });
        }
        Ok(self.multiply_unchecked(other))
    }

    /// The inverse: writing `x_j⁻¹ = ∂(x_j)·Δ⁻¹` and commuting the Δ's to
    /// the front gives `(Δ^p x_1⋯x_r)⁻¹ = Δ^{−p−r} x'_1⋯x'_r` with
    /// `x'_i = τ^{p+r+1−i}(∂(x_{r+1−i}))`, so `inf(x⁻¹) = −sup(x)`.
    pub fn inverse(&self) -> CanonicalBraid {
        let r = self.factors.len() as i64;
        let factors = (1..=r)
            .map(|i| {
                let c = self.factors[(r - i) as usize].complement();
                if (self.p + r + 1 - i).rem_euclid(2) == 1 {
                    c.tau()
                } else {
                    c
                }
            })
            .collect();
        CanonicalBraid::from_parts(self.n, -self.p - r, factors)
    }

    /// Integer power by repeated multiplication.
    pub fn pow(&self, k: i64) -> CanonicalBraid {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut acc = CanonicalBraid::trivial(self.n);
        for _ in 0..k.unsigned_abs() {
            acc = acc.multiply_unchecked(&base);
        }
        acc
    }

    /// `τ^k(x) = Δ^{−k} x Δ^k`; `inf`, `sup` and factor lengths are preserved.
    pub fn tau_pow(&self, k: i64) -> CanonicalBraid {
        if k.rem_euclid(2) == 0 {
            return self.clone();
        }
        let factors = self.factors.iter().map(|f| f.tau()).collect();
        // τ preserves left-weightedness, so no renormalization is needed.
        CanonicalBraid { n: self.n, p: self.p, factors }
    }

    /// The conjugate `c⁻¹ · self · c`.
    pub fn conjugate(&self, c: &CanonicalBraid) -> Result<CanonicalBraid> {
        c.inverse().multiply(self)?.multiply(c)
    }

    /// The initial factor `ι(x) = Δ ∧ (x Δ^{−inf x}) = τ^{−p}(x_1)`, or the
    /// trivial braid when `ℓ(x) = 0`.
    pub fn initial_factor(&self) -> SimpleBraid {
        match self.factors.first() {
            None => SimpleBraid::identity(self.n),
            Some(x1) => {
                if self.p.rem_euclid(2) == 1 {
                    x1.tau()
                } else {
                    x1.clone()
                }
            }
        }
    }

    /// The final factor `φ(x) = x_r`, or Δ when `ℓ(x) = 0`.
    pub fn final_factor(&self) -> SimpleBraid {
        match self.factors.last() {
            None => SimpleBraid::delta(self.n),
            Some(xr) => xr.clone(),
        }
    }

    /// The meet `x ∧ Δ^k` in the prefix order on the whole group:
    /// `Δ^{min(p,k)} x_1 ⋯ x_j` with `j = clamp(k − p, 0, ℓ(x))`.
    pub fn gcd_with_delta_power(&self, k: i64) -> CanonicalBraid {
        let j = (k - self.p).clamp(0, self.factors.len() as i64) as usize;
        CanonicalBraid {
            n: self.n,
            p: self.p.min(k),
            factors: self.factors[..j].to_vec(),
        }
    }

    /// The reversed braid: the image of `x` under the anti-automorphism
    /// fixing each generator (`rev(uv) = rev(v)rev(u)`).
    pub fn reverse(&self) -> CanonicalBraid {
        let mut letters = self.to_generator_word().to_signed_letters();
        letters.reverse();
        let word = GeneratorWord::from_signed(self.n, &letters).expect("letters valid");
        CanonicalBraid::from_word(&word)
    }

    /// Writes the normal form back out as a word: one `Δ^p` letter followed
    /// by the factors as positive generator runs.
    pub fn to_generator_word(&self) -> GeneratorWord {
        let mut w = GeneratorWord::empty(self.n).expect("n validated at construction");
        w.push_delta_pow(self.p);
        for f in &self.factors {
            for i in f.to_word_letters() {
                w.push_signed(i as isize).expect("in range");
            }
        }
        w
    }
}

impl std::fmt::Display for CanonicalBraid {
    /// Prints `D^p` followed by the factors as positive `s<i>` runs; the Δ
    /// power is omitted when `p = 0` and factors exist, printed bare as `D`
    /// when `p = 1`. The trivial braid prints as `D^0`. The output re-parses
    /// (with the same `n`) to an equal braid.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.p {
            0 => {}
            1 => parts.push("D".to_string()),
            p => parts.push(format!("D^{p}")),
        }
        for factor in &self.factors {
            parts.push(factor.to_string());
        }
        if parts.is_empty() {
            parts.push("D^0".to_string());
        }
        write!(f, "{}", parts.join(" "))
    }
}

impl std::fmt::Debug for CanonicalBraid {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "B{}[inf={} |", self.n, self.p)?;
        for factor in &self.factors {
            write!(f, " {factor} |")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn nf(n: usize, input: &str) -> CanonicalBraid {
        CanonicalBraid::parse(n, input).unwrap()
    }

    #[test]
    fn identity_and_delta_powers() {
        let one = CanonicalBraid::trivial(4);
        assert_eq!(one.inf(), 0);
        assert_eq!(one.canonical_length(), 0);
        let d = nf(3, "s1 s2 s1");
        assert_eq!(d, CanonicalBraid::delta_pow(3, 1));
        assert_eq!(nf(3, "s2 s1 s2"), d);
        assert_eq!(nf(3, "D^2"), nf(3, "s1 s2 s1 s1 s2 s1"));
    }

    #[test]
    fn braid_relations_hold() {
        assert_eq!(nf(3, "s1 s2 s1"), nf(3, "s2 s1 s2"));
        assert_eq!(nf(4, "s1 s3"), nf(4, "s3 s1"));
        assert_eq!(nf(4, "s2 s3 s2"), nf(4, "s3 s2 s3"));
    }

    #[test]
    fn single_inverse_generator() {
        // σ1⁻¹ = Δ⁻¹ · (σ1σ2) in B_3.
        let x = nf(3, "s1^-1");
        assert_eq!(x.inf(), -1);
        assert_eq!(x.canonical_length(), 1);
        assert_eq!(x.factors()[0].to_word_letters(), vec![1, 2]);
    }

    #[test]
    fn repeated_generator_stays_split() {
        let x = nf(3, "s2 s2");
        assert_eq!((x.inf(), x.canonical_length()), (0, 2));
        assert_eq!(x.factors()[0].to_word_letters(), vec![2]);
        assert_eq!(x.factors()[1].to_word_letters(), vec![2]);
    }

    #[test]
    fn mixed_word_normal_form() {
        // σ1σ2⁻¹ = Δ⁻¹ · σ2 · σ2σ1 in B_3.
        let x = nf(3, "s1 s2^-1");
        assert_eq!(x.inf(), -1);
        assert_eq!(x.canonical_length(), 2);
        assert_eq!(x.factors()[0].to_word_letters(), vec![2]);
        assert_eq!(x.factors()[1].to_word_letters(), vec![2, 1]);
    }

    #[test]
    fn initial_and_final_factors() {
        let x = nf(3, "s1 s2 s2");
        assert_eq!((x.inf(), x.canonical_length()), (0, 2));
        assert_eq!(x.initial_factor().to_word_letters(), vec![1, 2]);
        assert_eq!(x.final_factor().to_word_letters(), vec![2]);
        // ℓ = 0 conventions.
        let d = CanonicalBraid::delta_pow(3, 5);
        assert!(d.initial_factor().is_identity());
        assert!(d.final_factor().is_delta());
    }

    #[test]
    fn initial_factor_untwists_odd_inf() {
        let x = nf(3, "D^-1 s1");
        assert_eq!(x.inf(), -1);
        assert_eq!(x.initial_factor().to_word_letters(), vec![2]);
    }

    #[test]
    fn inverse_inf_is_negated_sup() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let n = rng.gen_range(2..=6);
            let len = rng.gen_range(0..=15);
            let w = GeneratorWord::random(n, len, &mut rng).unwrap();
            let x = CanonicalBraid::from_word(&w);
            let inv = x.inverse();
            assert_eq!(inv.inf(), -x.sup());
            assert_eq!(inv.sup(), -x.inf());
            assert!(x.multiply(&inv).unwrap().is_trivial());
            assert!(inv.multiply(&x).unwrap().is_trivial());
            assert_eq!(inv, CanonicalBraid::from_word(&w.inverse()));
        }
    }

    #[test]
    fn multiplication_is_associative_on_random_words() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..100 {
            let n = rng.gen_range(2..=5);
            let xs: Vec<CanonicalBraid> = (0..3)
                .map(|_| {
                    let len = rng.gen_range(0..=10);
                    CanonicalBraid::from_word(
                        &GeneratorWord::random(n, len, &mut rng).unwrap(),
                    )
                })
                .collect();
            let left = xs[0].multiply(&xs[1]).unwrap().multiply(&xs[2]).unwrap();
            let right = xs[0].multiply(&xs[1].multiply(&xs[2]).unwrap()).unwrap();
            assert_eq!(left, right);
        }
    }

    #[test]
    fn pow_matches_repeated_multiplication() {
        let x = nf(3, "s1 s2^-1");
        let mut acc = CanonicalBraid::trivial(3);
        for k in 0..=6 {
            assert_eq!(x.pow(k), acc);
            assert_eq!(x.pow(-k), acc.inverse());
            acc = acc.multiply(&x).unwrap();
        }
    }

    #[test]
    fn tau_pow_matches_delta_conjugation() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..100 {
            let n = rng.gen_range(2..=5);
            let len = rng.gen_range(0..=10);
            let x =
                CanonicalBraid::from_word(&GeneratorWord::random(n, len, &mut rng).unwrap());
            for k in -3..=3i64 {
                let direct = x.tau_pow(k);
                let conj = x.conjugate(&CanonicalBraid::delta_pow(n, k)).unwrap();
                assert_eq!(direct, conj);
            }
        }
    }

    #[test]
    fn gcd_with_delta_power_brackets_the_normal_form() {
        let x = nf(3, "s1 s2^-1 s1 s1");
        let (p, r) = (x.inf(), x.canonical_length() as i64);
        for k in (p - 2)..=(p + r + 2) {
            let g = x.gcd_with_delta_power(k);
            assert_eq!(g.inf(), p.min(k));
            let expect_len = (k - p).clamp(0, r);
            assert_eq!(g.canonical_length() as i64, expect_len);
            // g is a prefix: g⁻¹x is positive.
            assert!(g.inverse().multiply(&x).unwrap().inf() >= 0);
            // ...and Δ^k / g as well: g ≼ Δ^k.
            assert!(g.inverse().multiply(&CanonicalBraid::delta_pow(3, k)).unwrap().inf() >= 0);
        }
    }

    #[test]
    fn relator_insertion_leaves_normal_form_unchanged() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for _ in 0..300 {
            let n = rng.gen_range(3..=5);
            let len = rng.gen_range(0..=12);
            let w = GeneratorWord::random(n, len, &mut rng).unwrap();
            let mut letters = w.to_signed_letters();
            let pos = rng.gen_range(0..=letters.len());
            // Insert a relator or a cancelling pair at a random position.
            let insert: Vec<isize> = match rng.gen_range(0..4) {
                0 => {
                    let i = rng.gen_range(1..n) as isize;
                    vec![i, -i]
                }
                1 => {
                    let i = rng.gen_range(1..n) as isize;
                    vec![-i, i]
                }
                2 => {
                    let i = rng.gen_range(1..n.max(3) - 1) as isize;
                    // σ_i σ_{i+1} σ_i σ_{i+1}⁻¹ σ_i⁻¹ σ_{i+1}⁻¹ = 1
                    vec![i, i + 1, i, -(i + 1), -i, -(i + 1)]
                }
                _ => {
                    if n >= 4 {
                        vec![1, 3, -1, -3]
                    } else {
                        vec![1, -1]
                    }
                }
            };
            for (off, &g) in insert.iter().enumerate() {
                letters.insert(pos + off, g);
            }
            let mutated = GeneratorWord::from_signed(n, &letters).unwrap();
            assert_eq!(
                CanonicalBraid::from_word(&w),
                CanonicalBraid::from_word(&mutated),
                "normal form differs after inserting {insert:?} into {w}"
            );
        }
    }

    #[test]
    fn display_reparses_to_equal_braid() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..200 {
            let n = rng.gen_range(2..=6);
            let len = rng.gen_range(0..=12);
            let x =
                CanonicalBraid::from_word(&GeneratorWord::random(n, len, &mut rng).unwrap());
            let shown = x.to_string();
            assert_eq!(nf(n, &shown), x, "display {shown:?} did not round-trip");
        }
        assert_eq!(CanonicalBraid::trivial(4).to_string(), "D^0");
    }

    #[test]
    fn reverse_is_an_antiautomorphism() {
        let mut rng = ChaCha8Rng::seed_from_u64(60);
        for _ in 0..100 {
            let n = rng.gen_range(2..=5);
            let a =
                CanonicalBraid::from_word(&GeneratorWord::random(n, 8, &mut rng).unwrap());
            let b =
                CanonicalBraid::from_word(&GeneratorWord::random(n, 8, &mut rng).unwrap());
            let lhs = a.multiply(&b).unwrap().reverse();
            let rhs = b.reverse().multiply(&a.reverse()).unwrap();
            assert_eq!(lhs, rhs);
            assert_eq!(a.reverse().reverse(), a);
        }
    }

    #[test]
    fn left_weighted_pairs_detected() {
        let s12 = SimpleBraid::generator(3, 1).unwrap().append_gen(2);
        let s2 = SimpleBraid::generator(3, 2).unwrap();
        assert!(is_left_weighted(&s12, &s2));
        assert!(!is_left_weighted(&s2, &s2.complement()));
    }
}
