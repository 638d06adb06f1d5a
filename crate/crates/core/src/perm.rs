//! Permutations in one-line notation: zigzag (alternating) classes, pattern
//! containment, the marker set `A`, and the prefix compositions that drive
//! the recursive encodings.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Default cap on the length accepted by the exhaustive enumerators.
pub const DEFAULT_LENGTH_LIMIT: usize = 12;

/// The two strict zigzag orders a permutation can follow.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlternationClass {
    /// Rises first: p1 < p2 > p3 < p4 > ...
    UpDown,
    /// Falls first: p1 > p2 < p3 > p4 < ...
    DownUp,
}

impl AlternationClass {
    /// The class obtained by complementing every member.
    pub fn opposite(self) -> Self {
        match self {
            AlternationClass::UpDown => AlternationClass::DownUp,
            AlternationClass::DownUp => AlternationClass::UpDown,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            AlternationClass::UpDown => "up-down",
            AlternationClass::DownUp => "down-up",
        }
    }
}

/// A finite set of non-negative integers, as produced by the marker
/// statistics on permutations and words. Sets built by those statistics
/// always contain 0.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct StatSet(BTreeSet<u32>);

impl StatSet {
    pub fn contains(&self, k: u32) -> bool {
        self.0.contains(&k)
    }

    /// Largest element; 0 for the sets produced by the statistics.
    pub fn max(&self) -> u32 {
        self.0.iter().next_back().copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Elements in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().copied()
    }
}

impl FromIterator<u32> for StatSet {
    fn from_iter<T: IntoIterator<Item = u32>>(iter: T) -> Self {
        StatSet(iter.into_iter().collect())
    }
}

impl fmt::Display for StatSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, k) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{k}")?;
        }
        write!(f, "}}")
    }
}

/// A permutation of {1, ..., n} in one-line notation.
///
/// The empty permutation is a valid value of length zero and belongs to both
/// alternation classes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    values: Vec<u32>,
}

impl Permutation {
    /// Builds a permutation, checking that `values` is a rearrangement of
    /// `1..=n` with no repeats.
    pub fn new(values: Vec<u32>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v < 1 || v as usize > n {
                return Err(Error::InvalidPermutation(format!(
                    "value {v} outside 1..={n}"
                )));
            }
            if seen[v as usize] {
                return Err(Error::InvalidPermutation(format!("value {v} repeats")));
            }
            seen[v as usize] = true;
        }
        Ok(Permutation { values })
    }

    pub fn empty() -> Self {
        Permutation { values: Vec::new() }
    }

    pub(crate) fn from_values_unchecked(values: Vec<u32>) -> Self {
        debug_assert!(Permutation::new(values.clone()).is_ok());
        Permutation { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    /// First entry, if any.
    pub fn first(&self) -> Option<u32> {
        self.values.first().copied()
    }

    /// True when the permutation follows the strict zigzag of `class`.
    /// Permutations of length 0 or 1 are in both classes.
    pub fn is_alternating(&self, class: AlternationClass) -> bool {
        self.values.windows(2).enumerate().all(|(i, w)| {
            let ascent = w[0] < w[1];
            match class {
                AlternationClass::UpDown => ascent == (i % 2 == 0),
                AlternationClass::DownUp => ascent == (i % 2 == 1),
            }
        })
    }

    /// The complement: each value v becomes n + 1 - v. Exchanges the up-down
    /// and down-up classes and is an involution.
    pub fn complement(&self) -> Permutation {
        let n = self.len() as u32;
        Permutation {
            values: self.values.iter().map(|&v| n + 1 - v).collect(),
        }
    }

    /// True when some subsequence is order-isomorphic to `pattern`.
    ///
    /// Direct subsequence search with early exit; fine at desk scale.
    pub fn contains_pattern(&self, pattern: &Permutation) -> bool {
        let pat = &pattern.values;
        if pat.is_empty() {
            return true;
        }
        if pat.len() > self.len() {
            return false;
        }
        fn dfs(vals: &[u32], pat: &[u32], start: usize, chosen: &mut Vec<u32>) -> bool {
            let role = chosen.len();
            if role == pat.len() {
                return true;
            }
            let need = pat.len() - role;
            for pos in start..=(vals.len() - need) {
                let v = vals[pos];
                let compatible = chosen
                    .iter()
                    .enumerate()
                    .all(|(i, &c)| (v < c) == (pat[role] < pat[i]));
                if compatible {
                    chosen.push(v);
                    if dfs(vals, pat, pos + 1, chosen) {
                        return true;
                    }
                    chosen.pop();
                }
            }
            false
        }
        dfs(&self.values, pat, 0, &mut Vec::with_capacity(pat.len()))
    }

    pub fn avoids(&self, pattern: &Permutation) -> bool {
        !self.contains_pattern(pattern)
    }

    /// The marker set A: {0} together with every k <= p1 - 2 such that the
    /// value k appears somewhere to the left of the value k + 1.
    ///
    /// Undefined on the empty permutation.
    pub fn stat_a(&self) -> Result<StatSet> {
        let first = self.first().ok_or_else(|| {
            Error::Domain("the marker set A is undefined for the empty permutation".into())
        })?;
        let mut position = vec![0usize; self.len() + 1];
        for (i, &v) in self.values.iter().enumerate() {
            position[v as usize] = i;
        }
        let mut set = BTreeSet::new();
        set.insert(0);
        // k <= first - 2, i.e. k < first - 1
        for k in 1..first.saturating_sub(1) {
            if position[k as usize] < position[k as usize + 1] {
                set.insert(k);
            }
        }
        Ok(StatSet(set))
    }

    /// Prefixes the pair (a, b), shifting the old entries so the tail stays
    /// order-isomorphic to `self`: values below b keep their value, values in
    /// [b, a-1) move up by one, values at least a-1 move up by two.
    ///
    /// Requires 1 <= b < a <= n + 2.
    pub fn prepend_pair(&self, a: u32, b: u32) -> Result<Permutation> {
        let n = self.len() as u32;
        if b >= a {
            return Err(Error::Domain(format!(
                "prepending the pair ({a}, {b}) requires b < a"
            )));
        }
        if b < 1 || a > n + 2 {
            return Err(Error::Domain(format!(
                "prepending the pair ({a}, {b}) requires 1 <= b < a <= {}",
                n + 2
            )));
        }
        let mut values = Vec::with_capacity(self.len() + 2);
        values.push(a);
        values.push(b);
        for &v in &self.values {
            values.push(if v < b {
                v
            } else if v + 1 < a {
                v + 1
            } else {
                v + 2
            });
        }
        Ok(Permutation::from_values_unchecked(values))
    }

    /// Prefixes the single value a, shifting old values >= a up by one so the
    /// tail stays order-isomorphic to `self`. Requires 1 <= a <= n + 1.
    pub fn prepend_one(&self, a: u32) -> Result<Permutation> {
        let n = self.len() as u32;
        if a < 1 || a > n + 1 {
            return Err(Error::Domain(format!(
                "prepending {a} requires 1 <= a <= {}",
                n + 1
            )));
        }
        let mut values = Vec::with_capacity(self.len() + 1);
        values.push(a);
        for &v in &self.values {
            values.push(if v < a { v } else { v + 1 });
        }
        Ok(Permutation::from_values_unchecked(values))
    }

    /// Removes the first entry and renumbers the rest down to {1..n-1}.
    /// Exact inverse of [`Permutation::prepend_one`].
    pub fn strip_first(&self) -> Result<(u32, Permutation)> {
        let a = self.first().ok_or_else(|| {
            Error::Domain("cannot strip the first entry of the empty permutation".into())
        })?;
        let rest = self.values[1..]
            .iter()
            .map(|&v| if v > a { v - 1 } else { v })
            .collect();
        Ok((a, Permutation::from_values_unchecked(rest)))
    }

    /// Removes the first two entries and renumbers the rest down to {1..n-2}.
    /// Exact inverse of [`Permutation::prepend_pair`] whenever p1 > p2.
    pub fn strip_first_two(&self) -> Result<(u32, u32, Permutation)> {
        if self.len() < 2 {
            return Err(Error::Domain(
                "stripping the first two entries requires length at least 2".into(),
            ));
        }
        let a = self.values[0];
        let b = self.values[1];
        let rest = self.values[2..]
            .iter()
            .map(|&v| v - u32::from(a < v) - u32::from(b < v))
            .collect();
        Ok((a, b, Permutation::from_values_unchecked(rest)))
    }
}

impl fmt::Display for Permutation {
    /// Canonical text form: a compact digit string when n <= 9, otherwise
    /// comma-separated decimal values.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            for &v in &self.values {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts "6,3,7,5,8,1,4,2", the compact form "63758142", and the
    /// compact form with parenthesized multi-digit values "658397(10)142".
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Permutation::empty());
        }
        let mut values = Vec::new();
        if s.contains(',') {
            for token in s.split(',') {
                let token = token.trim();
                let v: u32 = token.parse().map_err(|_| {
                    Error::InvalidPermutation(format!("cannot parse value {token:?}"))
                })?;
                values.push(v);
            }
        } else {
            let mut chars = s.chars();
            while let Some(c) = chars.next() {
                match c {
                    '1'..='9' => values.push(c as u32 - '0' as u32),
                    '(' => {
                        let mut digits = String::new();
                        let mut closed = false;
                        for d in chars.by_ref() {
                            if d == ')' {
                                closed = true;
                                break;
                            }
                            digits.push(d);
                        }
                        if !closed {
                            return Err(Error::InvalidPermutation(
                                "unterminated parenthesized value".into(),
                            ));
                        }
                        let v: u32 = digits.parse().map_err(|_| {
                            Error::InvalidPermutation(format!(
                                "cannot parse parenthesized value {digits:?}"
                            ))
                        })?;
                        values.push(v);
                    }
                    _ => {
                        return Err(Error::InvalidPermutation(format!(
                            "unexpected character {c:?} in compact form"
                        )))
                    }
                }
            }
        }
        Permutation::new(values)
    }
}

/// Does `prefix` followed by `last` contain `pat` with the new element in the
/// final pattern role? Any pattern instance inside a growing prefix is first
/// completed by its rightmost element, so checking this at every placement
/// step catches every instance exactly once.
fn completes_pattern(prefix: &[u32], last: u32, pat: &[u32]) -> bool {
    let k = pat.len();
    if k == 0 {
        return true;
    }
    if prefix.len() + 1 < k {
        return false;
    }
    if k == 1 {
        return true;
    }
    let final_letter = pat[k - 1];
    fn dfs(
        prefix: &[u32],
        last: u32,
        pat: &[u32],
        final_letter: u32,
        start: usize,
        chosen: &mut Vec<u32>,
    ) -> bool {
        let role = chosen.len();
        if role + 1 == pat.len() {
            return true;
        }
        let need = pat.len() - 1 - role;
        for pos in start..=(prefix.len() - need) {
            let v = prefix[pos];
            if (v < last) != (pat[role] < final_letter) {
                continue;
            }
            let compatible = chosen
                .iter()
                .enumerate()
                .all(|(i, &c)| (v < c) == (pat[role] < pat[i]));
            if compatible {
                chosen.push(v);
                if dfs(prefix, last, pat, final_letter, pos + 1, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    dfs(
        prefix,
        last,
        pat,
        final_letter,
        0,
        &mut Vec::with_capacity(k - 1),
    )
}

struct AvoiderSearch<'a, F: FnMut(&Permutation)> {
    n: usize,
    class: AlternationClass,
    pattern: &'a [u32],
    prefix: Vec<u32>,
    used: Vec<bool>,
    emit: F,
}

impl<F: FnMut(&Permutation)> AvoiderSearch<'_, F> {
    fn zigzag_allows(&self, v: u32) -> bool {
        match self.prefix.last() {
            None => true,
            Some(&prev) => {
                let pair = self.prefix.len() - 1;
                let want_ascent = match self.class {
                    AlternationClass::UpDown => pair.is_multiple_of(2),
                    AlternationClass::DownUp => !pair.is_multiple_of(2),
                };
                if want_ascent {
                    prev < v
                } else {
                    prev > v
                }
            }
        }
    }

    fn run(&mut self) {
        if self.prefix.len() == self.n {
            let p = Permutation::from_values_unchecked(self.prefix.clone());
            (self.emit)(&p);
            return;
        }
        for v in 1..=self.n as u32 {
            if self.used[v as usize] || !self.zigzag_allows(v) {
                continue;
            }
            if completes_pattern(&self.prefix, v, self.pattern) {
                continue;
            }
            self.used[v as usize] = true;
            self.prefix.push(v);
            self.run();
            self.prefix.pop();
            self.used[v as usize] = false;
        }
    }
}

/// Calls `f` on every length-`n` permutation in `class` avoiding `pattern`,
/// in lexicographic order. Backtracking prunes on both the zigzag constraint
/// and pattern containment of the placed prefix.
pub fn for_each_avoider_with_limit<F: FnMut(&Permutation)>(
    n: usize,
    class: AlternationClass,
    pattern: &Permutation,
    limit: usize,
    emit: F,
) -> Result<()> {
    if n > limit {
        return Err(Error::LimitExceeded(format!(
            "enumeration of length {n} exceeds the cap of {limit}"
        )));
    }
    let mut search = AvoiderSearch {
        n,
        class,
        pattern: &pattern.values,
        prefix: Vec::with_capacity(n),
        used: vec![false; n + 1],
        emit,
    };
    search.run();
    Ok(())
}

/// [`for_each_avoider_with_limit`] with the default cap.
pub fn for_each_avoider<F: FnMut(&Permutation)>(
    n: usize,
    class: AlternationClass,
    pattern: &Permutation,
    emit: F,
) -> Result<()> {
    for_each_avoider_with_limit(n, class, pattern, DEFAULT_LENGTH_LIMIT, emit)
}

/// Every length-`n` permutation in `class` avoiding `pattern`, in
/// lexicographic order.
///
/// # Example
///
/// ```
/// use zigzag_core::{enumerate_avoiders_with_limit, AlternationClass, Permutation};
///
/// let pattern: Permutation = "4123".parse()?;
/// let found = enumerate_avoiders_with_limit(4, AlternationClass::DownUp, &pattern, 12)?;
/// let listed: Vec<String> = found.iter().map(|p| p.to_string()).collect();
/// assert_eq!(listed, ["2143", "3142", "3241", "4132", "4231"]);
/// # Ok::<(), zigzag_core::Error>(())
/// ```
pub fn enumerate_avoiders_with_limit(
    n: usize,
    class: AlternationClass,
    pattern: &Permutation,
    limit: usize,
) -> Result<Vec<Permutation>> {
    let mut out = Vec::new();
    for_each_avoider_with_limit(n, class, pattern, limit, |p| out.push(p.clone()))?;
    Ok(out)
}

/// [`enumerate_avoiders_with_limit`] with the default cap.
pub fn enumerate_avoiders(
    n: usize,
    class: AlternationClass,
    pattern: &Permutation,
) -> Result<Vec<Permutation>> {
    enumerate_avoiders_with_limit(n, class, pattern, DEFAULT_LENGTH_LIMIT)
}
