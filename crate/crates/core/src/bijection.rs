//! The recursive encodings between 4123-avoiding alternating permutations
//! and their word and tableau counterparts, each with an exact inverse.
//!
//! Even-length down-up permutations map to balanced ballot words of type
//! (n, n, n); odd-length ones map to skew words of type (n-1, n, n+1). The
//! tableau forms compose those encodings with the reversed complement and
//! the row-reading correspondence. The two corner surgeries extend the
//! construction to up-down permutations of odd and even length.
//!
//! Every map validates its whole domain up front (alternation class, parity,
//! 4123-avoidance, or word/tableau membership) and reports the violated
//! precondition; the recursions produce garbage silently on bad input.
//! Recursion is unrolled into explicit loops so call depth stays constant.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::perm::{AlternationClass, Permutation};
use crate::tableau::{ShapeKind, Tableau};
use crate::word::Word;

fn pattern_4123() -> &'static Permutation {
    static PATTERN: OnceLock<Permutation> = OnceLock::new();
    PATTERN.get_or_init(|| Permutation::new(vec![4, 1, 2, 3]).expect("static pattern"))
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Parity {
    Even,
    Odd,
}

fn check_domain(
    p: &Permutation,
    op: &str,
    class: AlternationClass,
    parity: Parity,
    min_len: usize,
) -> Result<()> {
    let parity_ok = match parity {
        Parity::Even => p.len().is_multiple_of(2),
        Parity::Odd => !p.len().is_multiple_of(2),
    };
    if p.len() < min_len || !parity_ok {
        let word = match parity {
            Parity::Even => "even",
            Parity::Odd => "odd",
        };
        return Err(Error::Domain(format!(
            "{op}: input length must be {word} and at least {min_len}, got {}",
            p.len()
        )));
    }
    if !p.is_alternating(class) {
        return Err(Error::Domain(format!(
            "{op}: input must be a {} alternating permutation",
            class.name()
        )));
    }
    if p.contains_pattern(pattern_4123()) {
        return Err(Error::Domain(format!("{op}: input must avoid 4123")));
    }
    Ok(())
}

/// Peels (first, second) pairs off `p` until `base_len` entries remain.
fn strip_frames(p: &Permutation, base_len: usize) -> Result<(Vec<(u32, u32)>, Permutation)> {
    let mut frames = Vec::with_capacity((p.len() - base_len) / 2);
    let mut current = p.clone();
    while current.len() > base_len {
        let (a, b, rest) = current.strip_first_two()?;
        frames.push((a, b));
        current = rest;
    }
    Ok((frames, current))
}

/// Replays the peeled frames over a base word, innermost first. For a frame
/// (a, b): when a = b + 1 the block 123 goes in before position b; otherwise
/// 12 goes in before position b and a 3 after what was position a - 2.
fn build_word(frames: &[(u32, u32)], base: Vec<u8>) -> Word {
    let mut word = base;
    for &(a, b) in frames.iter().rev() {
        let (a, b) = (a as usize, b as usize);
        let mut next = Vec::with_capacity(word.len() + 3);
        if a == b + 1 {
            next.extend_from_slice(&word[..b - 1]);
            next.extend_from_slice(&[1, 2, 3]);
            next.extend_from_slice(&word[b - 1..]);
        } else {
            next.extend_from_slice(&word[..b - 1]);
            next.extend_from_slice(&[1, 2]);
            next.extend_from_slice(&word[b - 1..a - 2]);
            next.push(3);
            next.extend_from_slice(&word[a - 2..]);
        }
        word = next;
    }
    Word::from_letters_unchecked(word)
}

/// Recovers the (a, b) frames from a word, outermost first, then rebuilds the
/// permutation over `base_perm`. At each step a is the initial run length;
/// b is the largest marker in B when the letter after position a + 1 is a 3,
/// and otherwise the largest start q <= a - 1 of a "12" factor. Positions
/// b, b + 1, and a + 1 are then deleted.
fn unwind_word(
    w: &Word,
    base_word: &[u8],
    base_perm: Permutation,
    op: &str,
) -> Result<Permutation> {
    let mut current = w.clone();
    let mut frames: Vec<(u32, u32)> = Vec::new();
    while current.len() > base_word.len() {
        let a = current.alpha();
        let letters = current.letters();
        let b = if letters.get(a + 1) == Some(&3) {
            let b = current.stat_b().max() as usize;
            if b == 0 {
                return Err(Error::Domain(format!(
                    "{op}: no marker available while unwinding; the word is outside the image"
                )));
            }
            b
        } else {
            (1..a)
                .rev()
                .find(|&q| letters[q - 1] == 1 && letters[q] == 2)
                .ok_or_else(|| {
                    Error::Domain(format!(
                        "{op}: no 12 factor before the initial run end; the word is outside the image"
                    ))
                })?
        };
        let next: Vec<u8> = letters
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != b - 1 && i != b && i != a)
            .map(|(_, &l)| l)
            .collect();
        frames.push((a as u32, b as u32));
        current = Word::from_letters_unchecked(next);
    }
    if current.letters() != base_word {
        return Err(Error::Domain(format!(
            "{op}: unwinding did not reach the base word"
        )));
    }
    let mut perm = base_perm;
    for &(a, b) in frames.iter().rev() {
        perm = perm.prepend_pair(a, b)?;
    }
    Ok(perm)
}

/// Encodes a down-up 4123-avoiding permutation of even length 2n as a
/// balanced ballot word of type (n, n, n). The first entry becomes the
/// initial run length and the marker sets A and B coincide.
///
/// # Example
///
/// ```
/// use zigzag_core::{phi, phi_inverse, Permutation};
///
/// let p: Permutation = "63758142".parse()?;
/// let w = phi(&p)?;
/// assert_eq!(w.to_string(), "121211323233");
/// assert_eq!(w.alpha() as u32, p.first().unwrap());
/// assert_eq!(phi_inverse(&w)?, p);
/// # Ok::<(), zigzag_core::Error>(())
/// ```
pub fn phi(p: &Permutation) -> Result<Word> {
    check_domain(p, "phi", AlternationClass::DownUp, Parity::Even, 2)?;
    let (frames, base) = strip_frames(p, 2)?;
    debug_assert_eq!(base.values(), &[2, 1]);
    Ok(build_word(&frames, vec![1, 2, 3]))
}

/// Decodes a balanced ballot word of type (n, n, n) back to the down-up
/// permutation that [`phi`] encodes as it.
pub fn phi_inverse(w: &Word) -> Result<Permutation> {
    let t = w.word_type();
    if !(t.c1 == t.c2 && t.c2 == t.c3 && t.c1 >= 1) {
        return Err(Error::Domain(format!(
            "phi_inverse: word type must be (n, n, n) with n >= 1, got {:?}",
            t.as_tuple()
        )));
    }
    if !w.is_yamanouchi() {
        return Err(Error::Domain(
            "phi_inverse: word must be Yamanouchi (every prefix has #1s >= #2s >= #3s)".into(),
        ));
    }
    let base = Permutation::new(vec![2, 1]).expect("base permutation");
    unwind_word(w, &[1, 2, 3], base, "phi_inverse")
}

/// Encodes a down-up 4123-avoiding permutation of odd length 2n - 1 as a
/// skew word of type (n - 1, n, n + 1). Same recursive step as [`phi`], with
/// the single-entry permutation mapping to 233.
pub fn psi(p: &Permutation) -> Result<Word> {
    check_domain(p, "psi", AlternationClass::DownUp, Parity::Odd, 1)?;
    let (frames, base) = strip_frames(p, 1)?;
    debug_assert_eq!(base.values(), &[1]);
    Ok(build_word(&frames, vec![2, 3, 3]))
}

/// Decodes a skew word of type (n - 1, n, n + 1) back to the odd-length
/// down-up permutation that [`psi`] encodes as it.
pub fn psi_inverse(w: &Word) -> Result<Permutation> {
    if !w.is_skew_yamanouchi() {
        return Err(Error::Domain(
            "psi_inverse: word must be a skew Yamanouchi word of type (n-1, n, n+1)".into(),
        ));
    }
    let base = Permutation::new(vec![1]).expect("base permutation");
    unwind_word(w, &[2, 3, 3], base, "psi_inverse")
}

fn shape_family(parts: &[usize], first_offset: usize, last_deficit: usize) -> Option<usize> {
    // (n + first_offset, n, n - last_deficit), with the last part dropped
    // when it would be zero.
    match parts {
        [a, b] if *a == b + first_offset && *b == last_deficit => Some(*b),
        [a, b, c] if *a == b + first_offset && c + last_deficit == *b => Some(*b),
        _ => None,
    }
}

fn require_standard(
    t: &Tableau,
    op: &str,
    kind: ShapeKind,
    family: &str,
    n: Option<usize>,
) -> Result<usize> {
    if t.shape().kind() != kind {
        let want = match kind {
            ShapeKind::Ordinary => "an ordinary",
            ShapeKind::Shifted => "a shifted",
        };
        return Err(Error::Domain(format!(
            "{op}: tableau must use {want} shape"
        )));
    }
    let n = n.ok_or_else(|| {
        Error::Domain(format!(
            "{op}: shape {} is not of the form {family}",
            t.shape()
        ))
    })?;
    if !t.is_standard() {
        return Err(Error::Domain(format!("{op}: tableau must be standard")));
    }
    Ok(n)
}

/// Tableau form of [`phi`]: the reversed complement of the encoding word,
/// read back as a standard tableau of shape (n, n, n). Its (1, n)-entry is
/// always 3n minus the first entry of the permutation.
pub fn phi_bar(p: &Permutation) -> Result<Tableau> {
    let w = phi(p)?;
    Tableau::chi_inverse(&w.reversed_complement(), ShapeKind::Ordinary)
}

/// Inverse of [`phi_bar`].
pub fn phi_bar_inverse(t: &Tableau) -> Result<Permutation> {
    let parts = t.shape().parts();
    let n = match parts {
        [a, b, c] if a == b && b == c => Some(*a),
        _ => None,
    };
    require_standard(t, "phi_bar_inverse", ShapeKind::Ordinary, "(n, n, n)", n)?;
    phi_inverse(&t.chi()?.reversed_complement())
}

/// Tableau form of [`psi`]: a shifted standard tableau of shape
/// (n+1, n, n-1) whose (1, n+1)-entry is 3n minus the first entry.
pub fn psi_bar(p: &Permutation) -> Result<Tableau> {
    let w = psi(p)?;
    Tableau::chi_inverse(&w.reversed_complement(), ShapeKind::Shifted)
}

/// Inverse of [`psi_bar`].
pub fn psi_bar_inverse(t: &Tableau) -> Result<Permutation> {
    let n = shape_family(t.shape().parts(), 1, 1);
    require_standard(t, "psi_bar_inverse", ShapeKind::Shifted, "(n+1, n, n-1)", n)?;
    psi_inverse(&t.chi()?.reversed_complement())
}

/// Removes the final cell of the last row (always the largest entry, which
/// sits at the unique removable corner of the shapes used here), renumbers
/// the remaining entries around `value`, and appends `value` to row 1.
fn promote_corner(t: &Tableau, value: u32) -> Tableau {
    let kind = t.shape().kind();
    let mut rows: Vec<Vec<u32>> = t.rows().to_vec();
    let dropped = rows
        .last_mut()
        .and_then(Vec::pop)
        .expect("nonempty tableau");
    debug_assert_eq!(dropped as usize, t.cells());
    if rows.last().is_some_and(Vec::is_empty) {
        rows.pop();
    }
    for row in &mut rows {
        for e in row.iter_mut() {
            if *e >= value {
                *e += 1;
            }
        }
    }
    rows[0].push(value);
    Tableau::new(rows, kind).expect("corner promotion preserves validity")
}

/// Inverse surgery of [`promote_corner`]: removes the final cell of row 1,
/// closes the numbering gap, and reinserts the maximum at the end of row 3.
/// Returns the value 3n + 1 - (removed entry) alongside the tableau.
fn demote_corner(t: &Tableau, n: usize) -> (u32, Tableau) {
    let kind = t.shape().kind();
    let mut rows: Vec<Vec<u32>> = t.rows().to_vec();
    let removed = rows[0].pop().expect("nonempty first row");
    let a = 3 * n as u32 + 1 - removed;
    for row in &mut rows {
        for e in row.iter_mut() {
            if *e > removed {
                *e -= 1;
            }
        }
    }
    let max = 3 * n as u32;
    if rows.len() < 3 {
        rows.push(vec![max]);
    } else {
        rows[2].push(max);
    }
    (
        a,
        Tableau::new(rows, kind).expect("corner demotion preserves validity"),
    )
}

/// Maps an up-down 4123-avoiding permutation of odd length 2n + 1 to a
/// standard tableau of shape (n+1, n, n-1): strip the first entry, take the
/// tableau form of the remainder, and promote the corner with 3n + 1 minus
/// the stripped entry.
///
/// # Example
///
/// ```
/// use zigzag_core::{gamma, gamma_inverse, Permutation};
///
/// let p: Permutation = "4657132".parse()?;
/// let t = gamma(&p)?;
/// assert_eq!(t.rows(), &[vec![1, 2, 4, 6], vec![3, 5, 9], vec![7, 8]]);
/// assert_eq!(gamma_inverse(&t)?, p);
/// # Ok::<(), zigzag_core::Error>(())
/// ```
pub fn gamma(p: &Permutation) -> Result<Tableau> {
    check_domain(p, "gamma", AlternationClass::UpDown, Parity::Odd, 3)?;
    let (a, rest) = p.strip_first()?;
    let inner = phi_bar(&rest)?;
    let n = rest.len() / 2;
    Ok(promote_corner(&inner, 3 * n as u32 + 1 - a))
}

/// Inverse of [`gamma`].
pub fn gamma_inverse(t: &Tableau) -> Result<Permutation> {
    let n = shape_family(t.shape().parts(), 1, 1);
    let n = require_standard(t, "gamma_inverse", ShapeKind::Ordinary, "(n+1, n, n-1)", n)?;
    let (a, inner) = demote_corner(t, n);
    phi_bar_inverse(&inner)?.prepend_one(a)
}

/// Maps an up-down 4123-avoiding permutation of even length 2n (n >= 2) to a
/// shifted standard tableau of shape (n+2, n, n-2), by the same corner
/// promotion applied to the shifted tableau form of the stripped remainder.
pub fn delta(p: &Permutation) -> Result<Tableau> {
    check_domain(p, "delta", AlternationClass::UpDown, Parity::Even, 4)?;
    let (a, rest) = p.strip_first()?;
    let inner = psi_bar(&rest)?;
    let n = rest.len().div_ceil(2);
    Ok(promote_corner(&inner, 3 * n as u32 + 1 - a))
}

/// Inverse of [`delta`].
pub fn delta_inverse(t: &Tableau) -> Result<Permutation> {
    let n = shape_family(t.shape().parts(), 2, 2);
    let n = require_standard(t, "delta_inverse", ShapeKind::Shifted, "(n+2, n, n-2)", n)?;
    let (a, inner) = demote_corner(t, n);
    psi_bar_inverse(&inner)?.prepend_one(a)
}
