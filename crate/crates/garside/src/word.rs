//! Braid words over the Artin generators, with parsing and printing.
//!
//! A [`GeneratorWord`] is an uninterpreted product of letters: generators
//! `σ_i`, their inverses, and integer powers of the half twist Δ. Words are
//! the input format of everything else in the crate; the grammar accepted by
//! [`GeneratorWord::parse`] is shared by the command-line tools.

use crate::simple::SimpleBraid;
use crate::{Error, Result};
use rand::Rng;

/// One letter of a braid word.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Letter {
    /// `σ_index` or its inverse (1-indexed, `1 ≤ index ≤ n−1`).
    Sigma { index: usize, inverse: bool },
    /// `Δ^k` for any integer `k`.
    DeltaPow(i64),
}

/// A word in the generators of `B_n`, remembered letter by letter.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GeneratorWord {
    n: usize,
    letters: Vec<Letter>,
}

impl GeneratorWord {
    /// The empty word on `n ≥ 1` strands. (One strand admits only the empty
    /// word, but it arises naturally as a braid restricted to one strand.)
    pub fn empty(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidStrandCount { n });
        }
        Ok(GeneratorWord { n, letters: Vec::new() })
    }

    /// Builds a word from signed generator indices: `i > 0` means `σ_i`,
    /// `i < 0` means `σ_{|i|}⁻¹`.
    pub fn from_signed(n: usize, signed: &[isize]) -> Result<Self> {
        let mut w = GeneratorWord::empty(n)?;
        for &g in signed {
            w.push_signed(g)?;
        }
        Ok(w)
    }

    /// Appends one signed generator.
    pub fn push_signed(&mut self, g: isize) -> Result<()> {
        let index = g.unsigned_abs();
        if g == 0 || index > self.n - 1 {
            return Err(Error::GeneratorOutOfRange { index: g, n: self.n });
        }
        self.letters.push(Letter::Sigma { index, inverse: g < 0 });
        Ok(())
    }

    /// Appends `Δ^k`.
    pub fn push_delta_pow(&mut self, k: i64) {
        if k != 0 {
            self.letters.push(Letter::DeltaPow(k));
        }
    }

    /// Parses a whitespace-separated word.
    ///
    /// Accepted tokens:
    /// - `s<i>` — the generator `σ_i`; `s<i>^-1` its inverse, and generally
    ///   `s<i>^<k>` for any integer `k`;
    /// - `D` — the half twist; `D^<k>` for any integer `k`;
    /// - a signed integer — `3` for `σ_3`, `-2` for `σ_2⁻¹`.
    ///
    /// The two token styles may be mixed. The empty string is the empty word.
    pub fn parse(n: usize, input: &str) -> Result<Self> {
        let mut w = GeneratorWord::empty(n)?;
        for token in input.split_whitespace() {
            w.push_token(token)?;
        }
        Ok(w)
    }

    fn push_token(&mut self, token: &str) -> Result<()> {
        let fail = |reason: String| Error::ParseWord { reason };
        let parse_int = |s: &str, what: &str| -> Result<i64> {
            s.parse::<i64>()
                .map_err(|_| fail(format!("bad {what} in token {token:?}")))
        };
        if let Some(rest) = token.strip_prefix('s') {
            let (idx_str, pow) = match rest.split_once('^') {
                Some((idx, p)) => (idx, parse_int(p, "exponent")?),
                None => (rest, 1),
            };
            let index = parse_int(idx_str, "generator index")? as isize;
            if index <= 0 || index as usize > self.n - 1 {
                return Err(Error::GeneratorOutOfRange { index, n: self.n });
            }
            for _ in 0..pow.unsigned_abs() {
                self.push_signed(if pow < 0 { -index } else { index })?;
            }
            Ok(())
        } else if let Some(rest) = token.strip_prefix('D') {
            let pow = match rest.strip_prefix('^') {
                Some(p) => parse_int(p, "exponent")?,
                None if rest.is_empty() => 1,
                None => return Err(fail(format!("unrecognized token {token:?}"))),
            };
            self.push_delta_pow(pow);
            Ok(())
        } else {
            let signed = parse_int(token, "generator")? as isize;
            self.push_signed(signed)
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The formal inverse: letters reversed, each inverted.
    pub fn inverse(&self) -> GeneratorWord {
        let letters = self
            .letters
            .iter()
            .rev()
            .map(|&l| match l {
                Letter::Sigma { index, inverse } => Letter::Sigma { index, inverse: !inverse },
                Letter::DeltaPow(k) => Letter::DeltaPow(-k),
            })
            .collect();
        GeneratorWord { n: self.n, letters }
    }

    /// Expands every letter to a signed generator, writing `Δ^k` as `|k|`
    /// copies of the positive half-twist word (inverted when `k < 0`).
    pub fn to_signed_letters(&self) -> Vec<isize> {
        let delta_word: Vec<usize> = SimpleBraid::delta(self.n).to_word_letters();
        let mut out = Vec::new();
        for &l in &self.letters {
            match l {
                Letter::Sigma { index, inverse } => {
                    out.push(if inverse { -(index as isize) } else { index as isize });
                }
                Letter::DeltaPow(k) => {
                    for _ in 0..k.unsigned_abs() {
                        if k > 0 {
                            out.extend(delta_word.iter().map(|&i| i as isize));
                        } else {
                            out.extend(delta_word.iter().rev().map(|&i| -(i as isize)));
                        }
                    }
                }
            }
        }
        out
    }

    /// True iff no letter is an inverse generator or a negative Δ power.
    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|&l| match l {
            Letter::Sigma { inverse, .. } => !inverse,
            Letter::DeltaPow(k) => k >= 0,
        })
    }

    /// A uniformly random word of `len` signed generator letters.
    pub fn random(n: usize, len: usize, rng: &mut impl Rng) -> Result<Self> {
        if n < 2 && len > 0 {
            return Err(Error::InvalidStrandCount { n });
        }
        let mut w = GeneratorWord::empty(n)?;
        for _ in 0..len {
            let index = rng.gen_range(1..n) as isize;
            let sign = if rng.gen::<bool>() { 1 } else { -1 };
            w.push_signed(sign * index)?;
        }
        Ok(w)
    }

    /// A uniformly random positive word of `len` generator letters.
    pub fn random_positive(n: usize, len: usize, rng: &mut impl Rng) -> Result<Self> {
        if n < 2 && len > 0 {
            return Err(Error::InvalidStrandCount { n });
        }
        let mut w = GeneratorWord::empty(n)?;
        for _ in 0..len {
            w.push_signed(rng.gen_range(1..n) as isize)?;
        }
        Ok(w)
    }
}

impl std::fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for &l in &self.letters {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            match l {
                Letter::Sigma { index, inverse: false } => write!(f, "s{index}")?,
                Letter::Sigma { index, inverse: true } => write!(f, "s{index}^-1")?,
                Letter::DeltaPow(1) => write!(f, "D")?,
                Letter::DeltaPow(k) => write!(f, "D^{k}")?,
            }
        }
        Ok(())
    }
}
