//! Words over the alphabet {1, 2, 3}: letter counts, initial and final runs,
//! the marker set `B`, the three ballot-style membership tests, and the
//! reversed complement.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::StatSet;

/// Letter multiplicities of a word: how many 1s, 2s, and 3s it holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WordType {
    pub c1: usize,
    pub c2: usize,
    pub c3: usize,
}

impl WordType {
    pub fn len(&self) -> usize {
        self.c1 + self.c2 + self.c3
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn as_tuple(&self) -> (usize, usize, usize) {
        (self.c1, self.c2, self.c3)
    }
}

/// A finite word over {1, 2, 3}.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<u8>,
}

impl Word {
    pub fn new(letters: Vec<u8>) -> Result<Self> {
        if let Some(&bad) = letters.iter().find(|&&l| !(1..=3).contains(&l)) {
            return Err(Error::InvalidWord(format!(
                "letter {bad} outside the alphabet {{1,2,3}}"
            )));
        }
        Ok(Word { letters })
    }

    pub fn empty() -> Self {
        Word {
            letters: Vec::new(),
        }
    }

    pub(crate) fn from_letters_unchecked(letters: Vec<u8>) -> Self {
        debug_assert!(letters.iter().all(|l| (1..=3).contains(l)));
        Word { letters }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn word_type(&self) -> WordType {
        let mut t = WordType {
            c1: 0,
            c2: 0,
            c3: 0,
        };
        for &l in &self.letters {
            match l {
                1 => t.c1 += 1,
                2 => t.c2 += 1,
                _ => t.c3 += 1,
            }
        }
        t
    }

    /// Length of the initial run: the prefix before the leftmost 3. A word
    /// with no 3 has an initial run covering the whole word.
    pub fn alpha(&self) -> usize {
        self.letters
            .iter()
            .position(|&l| l == 3)
            .unwrap_or(self.len())
    }

    /// Length of the final run: the suffix after the rightmost 1. A word with
    /// no 1 has a final run covering the whole word.
    pub fn beta(&self) -> usize {
        match self.letters.iter().rposition(|&l| l == 1) {
            Some(i) => self.len() - 1 - i,
            None => self.len(),
        }
    }

    /// The marker set B: {0} together with every position k <= alpha - 2 at
    /// which the factor "12" starts.
    pub fn stat_b(&self) -> StatSet {
        let mut set = BTreeSet::new();
        set.insert(0u32);
        let alpha = self.alpha();
        for k in 1..alpha.saturating_sub(1) {
            // k is 1-based; the factor occupies positions k, k + 1
            if self.letters[k - 1] == 1 && self.letters[k] == 2 {
                set.insert(k as u32);
            }
        }
        set.into_iter().collect()
    }

    /// Ballot test: every prefix holds at least as many 1s as 2s and at least
    /// as many 2s as 3s.
    pub fn is_yamanouchi(&self) -> bool {
        let (mut c1, mut c2, mut c3) = (0usize, 0usize, 0usize);
        for &l in &self.letters {
            match l {
                1 => c1 += 1,
                2 => c2 += 1,
                _ => c3 += 1,
            }
            if c1 < c2 || c2 < c3 {
                return false;
            }
        }
        true
    }

    /// 1-based index sets of the letters 1, 2, and 3, each in increasing
    /// order.
    pub fn index_sets(&self) -> (Vec<usize>, Vec<usize>, Vec<usize>) {
        let mut ones = Vec::new();
        let mut twos = Vec::new();
        let mut threes = Vec::new();
        for (i, &l) in self.letters.iter().enumerate() {
            match l {
                1 => ones.push(i + 1),
                2 => twos.push(i + 1),
                _ => threes.push(i + 1),
            }
        }
        (ones, twos, threes)
    }

    /// Membership in the skew family of type (n-1, n, n+1): with a/b/c the
    /// ascending index sets of 1s/2s/3s, requires b_n < c_n and
    /// a_j < b_j < c_j for 1 <= j <= n-1. Words of any other type fail.
    pub fn is_skew_yamanouchi(&self) -> bool {
        let t = self.word_type();
        let n = t.c2;
        if n < 1 || t.c1 + 1 != n || t.c3 != n + 1 {
            return false;
        }
        let (a, b, c) = self.index_sets();
        if b[n - 1] >= c[n - 1] {
            return false;
        }
        (0..n - 1).all(|j| a[j] < b[j] && b[j] < c[j])
    }

    /// Membership in the shifted family of type (n+1, n, n-1): requires
    /// a_2 < b_1 and a_{j+2} < b_{j+1} < c_j for 1 <= j <= n-1. Words of any
    /// other type fail.
    pub fn is_shifted_yamanouchi(&self) -> bool {
        let t = self.word_type();
        let n = t.c2;
        if n < 1 || t.c1 != n + 1 || t.c3 + 1 != n {
            return false;
        }
        let (a, b, c) = self.index_sets();
        if a[1] >= b[0] {
            return false;
        }
        (1..n).all(|j| a[j + 1] < b[j] && b[j] < c[j - 1])
    }

    /// Reverses the word and swaps 1s with 3s (letter x becomes 4 - x). An
    /// involution that exchanges initial runs with final runs.
    pub fn reversed_complement(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|&l| 4 - l).collect(),
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &l in &self.letters {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut letters = Vec::with_capacity(s.len());
        for c in s.chars() {
            match c {
                '1' => letters.push(1),
                '2' => letters.push(2),
                '3' => letters.push(3),
                _ => {
                    return Err(Error::InvalidWord(format!(
                        "unexpected character {c:?}; words use only 1, 2, 3"
                    )))
                }
            }
        }
        Ok(Word { letters })
    }
}
