//! Permutation braids: the simple elements of the Garside structure on `B_n`.
//!
//! A *simple braid* (also called a permutation braid) is a positive braid in
//! which every pair of strands crosses at most once. Simples are in bijection
//! with permutations of `{1..n}`; the identity permutation is the trivial
//! braid and the order reversal is the half twist Δ, the Garside element.
//! Under the prefix order `s ≼ t` (`t = s·u` with `u` positive) the simples
//! form a finite lattice with minimum 1 and maximum Δ.

use crate::{Error, Result};

/// A permutation braid on `n` strands.
///
/// Stored as the permutation sending the *starting* position of each strand
/// to its *ending* position. Internally 0-indexed; the public API speaks
/// 1-indexed strands like the rest of the crate.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleBraid {
    n: usize,
    /// `perm[i]` is the 0-indexed end position of the strand starting at `i`.
    perm: Vec<usize>,
}

impl SimpleBraid {
    /// The trivial braid on `n` strands.
    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "strand count must be at least 1");
        SimpleBraid { n, perm: (0..n).collect() }
    }

    /// The half twist Δ on `n` strands (order-reversing permutation).
    pub fn delta(n: usize) -> Self {
        assert!(n >= 1, "strand count must be at least 1");
        SimpleBraid { n, perm: (0..n).rev().collect() }
    }

    /// The Artin generator `σ_i` (1-indexed, `1 ≤ i ≤ n−1`) as a simple braid.
    pub fn generator(n: usize, i: usize) -> Result<Self> {
        if n < 2 || i == 0 || i > n - 1 {
            return Err(Error::GeneratorOutOfRange { index: i as isize, n });
        }
        let mut s = SimpleBraid::identity(n);
        s.perm.swap(i - 1, i);
        Ok(s)
    }

    /// Builds a simple braid from the 1-indexed image list `perm[i-1] = s(i)`.
    pub fn from_permutation(perm_one_indexed: &[usize]) -> Result<Self> {
        let n = perm_one_indexed.len();
        if n == 0 {
            return Err(Error::InvalidStrandCount { n: 0 });
        }
        let mut seen = vec![false; n];
        let mut perm = Vec::with_capacity(n);
        for &image in perm_one_indexed {
            if image == 0 || image > n || seen[image - 1] {
                return Err(Error::ParseWord {
                    reason: format!("{perm_one_indexed:?} is not a permutation of 1..={n}"),
                });
            }
            seen[image - 1] = true;
            perm.push(image - 1);
        }
        Ok(SimpleBraid { n, perm })
    }

    /// Strand count.
    pub fn n(&self) -> usize {
        self.n
    }

    /// End position of the strand starting at `start` (both 1-indexed).
    pub fn image_of(&self, start: usize) -> usize {
        self.perm[start - 1] + 1
    }

    /// The permutation as a 1-indexed image list.
    pub fn permutation(&self) -> Vec<usize> {
        self.perm.iter().map(|&p| p + 1).collect()
    }

    /// Word length `‖s‖`: the number of crossings, i.e. the inversion count
    /// of the permutation. `‖Δ‖ = n(n−1)/2`.
    pub fn word_len(&self) -> usize {
        let mut count = 0;
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.perm[i] > self.perm[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Maximal word length on `n` strands: `‖Δ‖ = n(n−1)/2`.
    pub fn delta_len(n: usize) -> usize {
        n * (n - 1) / 2
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }

    pub fn is_delta(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i + p == self.n - 1)
    }

    /// Permutation-level composition: `self` first, then `other`.
    ///
    /// This is composition of underlying permutations, not braid
    /// multiplication — the braid product of two simples need not be simple.
    /// It agrees with braid multiplication exactly when the word lengths add,
    /// which is the case everywhere this crate uses it.
    pub(crate) fn compose(&self, other: &SimpleBraid) -> SimpleBraid {
        debug_assert_eq!(self.n, other.n);
        let perm = self.perm.iter().map(|&mid| other.perm[mid]).collect();
        SimpleBraid { n: self.n, perm }
    }

    /// The inverse permutation (end position ↦ start position).
    pub(crate) fn inverse_perm(&self) -> SimpleBraid {
        let mut perm = vec![0; self.n];
        for (start, &end) in self.perm.iter().enumerate() {
            perm[end] = start;
        }
        SimpleBraid { n: self.n, perm }
    }

    /// The complement `∂(s) = s⁻¹Δ`, the unique simple with `s·∂(s) = Δ`.
    ///
    /// `‖∂(s)‖ = ‖Δ‖ − ‖s‖`, and `∂²(s) = τ(s)`.
    pub fn complement(&self) -> SimpleBraid {
        self.inverse_perm().compose(&SimpleBraid::delta(self.n))
    }

    /// Conjugation by the half twist: `τ(s) = Δ⁻¹sΔ`.
    ///
    /// On simples τ is the index-reversal automorphism `σ_i ↦ σ_{n−i}` and is
    /// an involution.
    pub fn tau(&self) -> SimpleBraid {
        let d = SimpleBraid::delta(self.n);
        d.compose(self).compose(&d)
    }

    /// True iff `σ_i` is a prefix of `s` (equivalently the permutation has a
    /// descent at `i`: strands currently entering at positions `i, i+1` must
    /// cross immediately for the word to start with `σ_i`).
    pub fn starts_with(&self, i: usize) -> bool {
        debug_assert!(i >= 1 && i < self.n);
        self.perm[i - 1] > self.perm[i]
    }

    /// True iff `σ_i` is a suffix of `s` (descent of the inverse permutation:
    /// the strands *ending* at positions `i, i+1` crossed last).
    pub fn ends_with(&self, i: usize) -> bool {
        debug_assert!(i >= 1 && i < self.n);
        // position i is reached from a higher start than position i+1
        let mut from_i = 0;
        let mut from_i1 = 0;
        for (start, &end) in self.perm.iter().enumerate() {
            if end == i - 1 {
                from_i = start;
            } else if end == i {
                from_i1 = start;
            }
        }
        from_i > from_i1
    }

    /// The starting set `{i : σ_i ≼ s}`.
    pub fn starting_set(&self) -> Vec<usize> {
        (1..self.n).filter(|&i| self.starts_with(i)).collect()
    }

    /// The finishing set `{i : s = t·σ_i for some simple t}`.
    pub fn finishing_set(&self) -> Vec<usize> {
        (1..self.n).filter(|&i| self.ends_with(i)).collect()
    }

    /// Removes a leading `σ_i` (caller must ensure `starts_with(i)`).
    pub(crate) fn strip_prefix_gen(&self, i: usize) -> SimpleBraid {
        debug_assert!(self.starts_with(i));
        let mut perm = self.perm.clone();
        perm.swap(i - 1, i);
        SimpleBraid { n: self.n, perm }
    }

    /// Appends a trailing `σ_i` at the permutation level.
    pub(crate) fn append_gen(&self, i: usize) -> SimpleBraid {
        let mut perm = self.perm.clone();
        for p in perm.iter_mut() {
            if *p == i - 1 {
                *p = i;
            } else if *p == i {
                *p = i - 1;
            }
        }
        SimpleBraid { n: self.n, perm }
    }

    /// Prefix-order divisibility `self ≼ other`.
    ///
    /// Decided by the crossing-set criterion: a simple braid left-divides
    /// another iff every pair of strands crossing in the first also crosses
    /// in the second. This is independent of the greedy machinery used by
    /// [`SimpleBraid::meet`], which the lattice tests exploit.
    pub fn left_divides(&self, other: &SimpleBraid) -> bool {
        debug_assert_eq!(self.n, other.n);
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.perm[i] > self.perm[j] && other.perm[i] < other.perm[j] {
                    return false;
                }
            }
        }
        true
    }

    /// The lattice meet `s ∧ t`: the greatest common prefix-order divisor.
    ///
    /// Computed greedily: while some atom `σ_i` divides both remainders,
    /// append it to the result and strip it from both. Left multiplication
    /// preserves the prefix order, so `gcd(σ_i a, σ_i b) = σ_i·gcd(a, b)` and
    /// the greedy loop is exact. `O(n²)` worst case.
    pub fn meet(&self, other: &SimpleBraid) -> Result<SimpleBraid> {
        if self.n != other.n {
            return Err(Error::StrandCountMismatch { left: self.n, right: other.n });
        }
        let mut acc = SimpleBraid::identity(self.n);
        let mut s = self.clone();
        let mut t = other.clone();
        loop {
            let mut advanced = false;
            for i in 1..self.n {
                if s.starts_with(i) && t.starts_with(i) {
                    // σ_i divides both remainders, hence divides the meet.
                    acc = acc.append_gen(i);
                    s = s.strip_prefix_gen(i);
                    t = t.strip_prefix_gen(i);
                    advanced = true;
                }
            }
            if !advanced {
                return Ok(acc);
            }
        }
    }

    /// The lattice join `s ∨ t`: the least common multiple in prefix order.
    ///
    /// Computed through two order (anti-)isomorphisms: `∂` maps the prefix
    /// order anti-monotonically onto the suffix order (`s ≼ t ⟹ ∂t` is a
    /// suffix of `∂s`), and word reversal (the inverse permutation) maps the
    /// suffix order back onto the prefix order. So
    /// `s ∨ t = ∂⁻¹(rev⁻¹(rev(∂s) ∧ rev(∂t)))` with `∂⁻¹(u) = Δu⁻¹`.
    pub fn join(&self, other: &SimpleBraid) -> Result<SimpleBraid> {
        if self.n != other.n {
            return Err(Error::StrandCountMismatch { left: self.n, right: other.n });
        }
        let rev = |s: &SimpleBraid| s.inverse_perm();
        let m = rev(&self.complement()).meet(&rev(&other.complement()))?;
        Ok(SimpleBraid::delta(self.n).compose(&rev(&m).inverse_perm()))
    }

    /// Writes the braid as a reduced positive word, leftmost descent first.
    pub fn to_word_letters(&self) -> Vec<usize> {
        let mut letters = Vec::with_capacity(self.word_len());
        let mut rest = self.clone();
        loop {
            let Some(i) = (1..self.n).find(|&i| rest.starts_with(i)) else {
                debug_assert!(rest.is_identity());
                return letters;
            };
            letters.push(i);
            rest = rest.strip_prefix_gen(i);
        }
    }
}

impl std::fmt::Debug for SimpleBraid {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_identity() {
            return write!(f, "1");
        }
        if self.is_delta() {
            return write!(f, "D");
        }
        let word: Vec<String> =
            self.to_word_letters().iter().map(|i| format!("s{i}")).collect();
        write!(f, "{}", word.join(" "))
    }
}

impl std::fmt::Display for SimpleBraid {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self:?}")
    }
}

/// All simple braids on `n` strands (test support: exhaustive lattice sweeps).
#[cfg(test)]
pub(crate) fn all_simples(n: usize) -> Vec<SimpleBraid> {
    fn rec(prefix: &mut Vec<usize>, left: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for k in 0..left.len() {
            let v = left.remove(k);
            prefix.push(v);
            rec(prefix, left, out);
            prefix.pop();
            left.insert(k, v);
        }
    }
    let mut images = Vec::new();
    rec(&mut Vec::new(), &mut (1..=n).collect(), &mut images);
    images
        .into_iter()
        .map(|im| SimpleBraid::from_permutation(&im).unwrap())
        .collect()
}
