//! Braid words as diagrams: letters, strand tracing, braid permutations,
//! products, mirrors, inverses, and permutation (simple) braids.
//!
//! A word is read top to bottom. Strands are identified by their starting
//! position on the top bar (0-based internally, 1-based in all text formats).
//!
//! Sign convention: at a positive letter with generator index `i`, the strand
//! currently at position `i` passes *over* the strand at position `i + 1`; at
//! a negative letter it passes under. Under this convention the crossing
//! matrix of a permutation braid is strictly upper triangular.

use std::fmt;
use thiserror::Error;

/// Crossing sign of a single letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn flipped(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

/// One crossing of a diagram: an Artin generator index in `1..=n-1` plus a
/// sign. Index `i` crosses the strands at positions `i` and `i + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub index: usize,
    pub sign: Sign,
}

impl Letter {
    pub fn new(index: usize, sign: Sign) -> Letter {
        Letter { index, sign }
    }

    /// Decode the text encoding: `|k|` is the index, the sign of `k` the sign.
    pub fn from_signed(k: i64) -> Result<Letter, BraidError> {
        if k == 0 {
            return Err(BraidError::ZeroLetter);
        }
        Ok(Letter {
            index: k.unsigned_abs() as usize,
            sign: if k > 0 { Sign::Positive } else { Sign::Negative },
        })
    }

    pub fn to_signed(self) -> i64 {
        let k = self.index as i64;
        match self.sign {
            Sign::Positive => k,
            Sign::Negative => -k,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BraidError {
    #[error("letter 0 is not a crossing")]
    ZeroLetter,
    #[error("token `{0}` is not a nonzero integer")]
    BadToken(String),
    #[error("letter index {index} out of range on {n} strands")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("strand counts differ: {0} vs {1}")]
    StrandMismatch(usize, usize),
    #[error("`{0}` is not a permutation of 1..={1}")]
    NotAPermutation(String, usize),
}

/// A braid word: a strand count and an ordered sequence of letters, read top
/// to bottom. The empty word is the trivial diagram.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    n: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    /// Build a word, checking every letter index against the strand count.
    pub fn new(n: usize, letters: Vec<Letter>) -> Result<BraidWord, BraidError> {
        assert!(n >= 1, "a braid diagram has at least one strand");
        for l in &letters {
            if l.index == 0 || l.index >= n {
                return Err(BraidError::IndexOutOfRange { index: l.index, n });
            }
        }
        Ok(BraidWord { n, letters })
    }

    pub fn empty(n: usize) -> BraidWord {
        assert!(n >= 1, "a braid diagram has at least one strand");
        BraidWord { n, letters: Vec::new() }
    }

    /// Parse whitespace-separated nonzero integers. The strand count is the
    /// given `n`, or `1 + max|k|` when absent (1 for the empty word).
    pub fn parse(text: &str, n: Option<usize>) -> Result<BraidWord, BraidError> {
        let mut letters = Vec::new();
        let mut max_index = 0usize;
        for tok in text.split_whitespace() {
            let k: i64 = tok
                .parse()
                .map_err(|_| BraidError::BadToken(tok.to_string()))?;
            if k == 0 {
                return Err(BraidError::BadToken(tok.to_string()));
            }
            let letter = Letter::from_signed(k)?;
            max_index = max_index.max(letter.index);
            letters.push(letter);
        }
        let n = n.unwrap_or(max_index + 1);
        BraidWord::new(n.max(1), letters)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Braid product: this diagram placed above `other`.
    pub fn product(&self, other: &BraidWord) -> Result<BraidWord, BraidError> {
        if self.n != other.n {
            return Err(BraidError::StrandMismatch(self.n, other.n));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { n: self.n, letters })
    }

    /// The inverse diagram: letters reversed, signs flipped. The product of a
    /// word with its inverse has the identity braid permutation.
    pub fn inverse(&self) -> BraidWord {
        let letters = self
            .letters
            .iter()
            .rev()
            .map(|l| Letter::new(l.index, l.sign.flipped()))
            .collect();
        BraidWord { n: self.n, letters }
    }

    /// The 180-degree rotation about the vertical axis: each index `i`
    /// becomes `n - i`, order and signs preserved. The CN matrix of the
    /// mirrored diagram is the reverse of the original CN matrix.
    pub fn mirrored(&self) -> BraidWord {
        let letters = self
            .letters
            .iter()
            .map(|l| Letter::new(self.n - l.index, l.sign))
            .collect();
        BraidWord { n: self.n, letters }
    }

    /// The same diagram with every crossing made positive.
    pub fn positive(&self) -> BraidWord {
        let letters = self
            .letters
            .iter()
            .map(|l| Letter::new(l.index, Sign::Positive))
            .collect();
        BraidWord { n: self.n, letters }
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|l| l.sign == Sign::Positive)
    }

    /// Trace every crossing top to bottom, attributed to strand identities.
    pub fn crossings(&self) -> Crossings<'_> {
        Crossings {
            letters: self.letters.iter(),
            pos_to_strand: (0..self.n).collect(),
        }
    }

    /// The strand-start to strand-end position map.
    pub fn permutation(&self) -> Permutation {
        let mut pos_to_strand: Vec<usize> = (0..self.n).collect();
        for l in &self.letters {
            pos_to_strand.swap(l.index - 1, l.index);
        }
        let mut images = vec![0usize; self.n];
        for (pos, &strand) in pos_to_strand.iter().enumerate() {
            images[strand] = pos;
        }
        Permutation { images }
    }

    /// True iff every strand returns to its starting position.
    pub fn is_pure(&self) -> bool {
        self.permutation().is_identity()
    }

    /// The permutation (simple) braid of `p`: the all-positive word in which
    /// strands `a < b` cross exactly once iff `p(a) > p(b)`, built by bubble
    /// sorting positions toward their destinations, smallest index first per
    /// pass. Length equals the inversion count of `p`.
    pub fn permutation_braid(p: &Permutation) -> BraidWord {
        let n = p.n();
        let mut arrangement: Vec<usize> = (0..n).collect();
        let mut letters = Vec::with_capacity(p.inversions());
        loop {
            let mut swapped = false;
            for q in 0..n.saturating_sub(1) {
                if p.image(arrangement[q]) > p.image(arrangement[q + 1]) {
                    letters.push(Letter::new(q + 1, Sign::Positive));
                    arrangement.swap(q, q + 1);
                    swapped = true;
                }
            }
            if !swapped {
                break;
            }
        }
        BraidWord { n: n.max(1), letters }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for l in &self.letters {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{}", l.to_signed())?;
            first = false;
        }
        Ok(())
    }
}

/// One crossing seen during a sweep, with 0-based strand identities.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Crossing {
    pub over: usize,
    pub under: usize,
    pub sign: Sign,
}

/// Iterator over the crossings of a word, top to bottom.
pub struct Crossings<'a> {
    letters: std::slice::Iter<'a, Letter>,
    pos_to_strand: Vec<usize>,
}

impl Iterator for Crossings<'_> {
    type Item = Crossing;

    fn next(&mut self) -> Option<Crossing> {
        let l = self.letters.next()?;
        let q = l.index - 1;
        let left = self.pos_to_strand[q];
        let right = self.pos_to_strand[q + 1];
        self.pos_to_strand.swap(q, q + 1);
        let (over, under) = match l.sign {
            Sign::Positive => (left, right),
            Sign::Negative => (right, left),
        };
        Some(Crossing { over, under, sign: l.sign })
    }
}

/// A bijection on `{0..n-1}`: `image(k)` is where the strand starting at top
/// position `k` ends at the bottom. Text form is 1-based, e.g. `3,1,2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation { images: (0..n).collect() }
    }

    /// Build from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Permutation, BraidError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n || seen[v] {
                let shown: Vec<String> = images.iter().map(|k| (k + 1).to_string()).collect();
                return Err(BraidError::NotAPermutation(shown.join(","), n));
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    /// Parse comma-separated 1-based images, e.g. `3,1,2`.
    pub fn parse(text: &str) -> Result<Permutation, BraidError> {
        let n = text.split(',').count();
        let bad = || BraidError::NotAPermutation(text.trim().to_string(), n);
        let mut images = Vec::with_capacity(n);
        for tok in text.split(',') {
            let v: usize = tok.trim().parse().map_err(|_| bad())?;
            if v == 0 {
                return Err(bad());
            }
            images.push(v - 1);
        }
        Permutation::from_images(images)
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, k: usize) -> usize {
        self.images[k]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &v)| k == v)
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0usize; self.images.len()];
        for (k, &v) in self.images.iter().enumerate() {
            images[v] = k;
        }
        Permutation { images }
    }

    /// Left-to-right composition: apply `self` first, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n(), "composing permutations of different sizes");
        let images = self.images.iter().map(|&v| other.images[v]).collect();
        Permutation { images }
    }

    /// Number of pairs `a < b` with `image(a) > image(b)`; the minimum number
    /// of adjacent transpositions needed to sort.
    pub fn inversions(&self) -> usize {
        let n = self.images.len();
        let mut count = 0;
        for a in 0..n {
            for b in a + 1..n {
                if self.images[a] > self.images[b] {
                    count += 1;
                }
            }
        }
        count
    }

    /// All permutations of size `n` in lexicographic order of their images.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut images: Vec<usize> = (0..n).collect();
        loop {
            out.push(Permutation { images: images.clone() });
            // next_permutation in place
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| images[i] < images[i + 1])
            else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| images[j] > images[i]).unwrap();
            images.swap(i, j);
            images[i + 1..].reverse();
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shown: Vec<String> = self.images.iter().map(|k| (k + 1).to_string()).collect();
        write!(f, "{}", shown.join(","))
    }
}
