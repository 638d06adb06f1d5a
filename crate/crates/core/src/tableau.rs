//! Young diagrams and standard tableaux, ordinary and shifted: the
//! row-reading correspondence with words over {1, 2, 3}, standardness
//! checking, exhaustive generation, and exact counting.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::counting::factorial;
use crate::error::{Error, Result};
use crate::word::Word;

/// Default cap on the number of cells accepted by the exhaustive tableau
/// generator.
pub const DEFAULT_CELL_LIMIT: usize = 15;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ShapeKind {
    /// Left-justified rows, parts weakly decreasing.
    Ordinary,
    /// Row i indented i - 1 cells, parts strictly decreasing.
    Shifted,
}

/// An integer partition together with the diagram convention it uses.
/// Zero parts are never stored: (4, 2, 0) normalizes to (4, 2).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Shape {
    parts: Vec<usize>,
    kind: ShapeKind,
}

impl Shape {
    pub fn new(mut parts: Vec<usize>, kind: ShapeKind) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) {
            return Err(Error::InvalidShape(
                "zero part before a nonzero part".into(),
            ));
        }
        let monotone = match kind {
            ShapeKind::Ordinary => parts.windows(2).all(|w| w[0] >= w[1]),
            ShapeKind::Shifted => parts.windows(2).all(|w| w[0] > w[1]),
        };
        if !monotone {
            let how = match kind {
                ShapeKind::Ordinary => "weakly",
                ShapeKind::Shifted => "strictly",
            };
            return Err(Error::InvalidShape(format!(
                "parts {parts:?} must be {how} decreasing"
            )));
        }
        Ok(Shape { parts, kind })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn kind(&self) -> ShapeKind {
        self.kind
    }

    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    /// Total number of cells.
    pub fn cells(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))?;
        if self.kind == ShapeKind::Shifted {
            write!(f, " shifted")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TableauRepr {
    shape: Vec<usize>,
    shifted: bool,
    rows: Vec<Vec<u32>>,
}

/// A filling of a shape with the entries {1, ..., N}, each exactly once and
/// strictly increasing along every row. Column conditions are not part of the
/// type; see [`Tableau::is_standard`].
///
/// Cells are addressed as (row, index-within-row), both 1-based. In a shifted
/// tableau, row i occupies absolute columns i, i+1, ..., i-1+parts[i].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    shape: Shape,
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    pub fn new(mut rows: Vec<Vec<u32>>, kind: ShapeKind) -> Result<Self> {
        while rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        let shape = Shape::new(rows.iter().map(Vec::len).collect(), kind)?;
        let n = shape.cells();
        let mut seen = vec![false; n + 1];
        for row in &rows {
            for (i, &e) in row.iter().enumerate() {
                if e < 1 || e as usize > n {
                    return Err(Error::InvalidTableau(format!("entry {e} outside 1..={n}")));
                }
                if seen[e as usize] {
                    return Err(Error::InvalidTableau(format!("entry {e} repeats")));
                }
                seen[e as usize] = true;
                if i > 0 && row[i - 1] >= e {
                    return Err(Error::InvalidTableau(format!(
                        "row entries must strictly increase, found {} before {e}",
                        row[i - 1]
                    )));
                }
            }
        }
        Ok(Tableau { shape, rows })
    }

    pub(crate) fn from_rows_unchecked(shape: Shape, rows: Vec<Vec<u32>>) -> Self {
        debug_assert!(Tableau::new(rows.clone(), shape.kind())
            .map(|t| t.shape == shape)
            .unwrap_or(false));
        Tableau { shape, rows }
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn cells(&self) -> usize {
        self.shape.cells()
    }

    /// Entry at (row, index), both 1-based; `None` outside the shape.
    pub fn entry(&self, row: usize, index: usize) -> Option<u32> {
        self.rows
            .get(row.checked_sub(1)?)?
            .get(index.checked_sub(1)?)
            .copied()
    }

    /// Column conditions for standardness. Ordinary: every cell exceeds the
    /// cell directly above it. Shifted: the cell above (i+1, j) in the same
    /// absolute column is (i, j+1), so that one must be smaller.
    pub fn is_standard(&self) -> bool {
        let shift = match self.shape.kind {
            ShapeKind::Ordinary => 0,
            ShapeKind::Shifted => 1,
        };
        self.rows.windows(2).all(|pair| {
            let (above, below) = (&pair[0], &pair[1]);
            below
                .iter()
                .enumerate()
                .all(|(j, &e)| above.get(j + shift).is_some_and(|&u| u < e))
        })
    }

    /// The row-reading word: letter j is the row index (1..3) holding the
    /// entry j. Only defined for tableaux with at most 3 rows.
    pub fn chi(&self) -> Result<Word> {
        if self.rows.len() > 3 {
            return Err(Error::Domain(format!(
                "the row-reading word needs at most 3 rows, shape {} has {}",
                self.shape,
                self.rows.len()
            )));
        }
        let mut letters = vec![0u8; self.cells()];
        for (i, row) in self.rows.iter().enumerate() {
            for &e in row {
                letters[e as usize - 1] = i as u8 + 1;
            }
        }
        Ok(Word::from_letters_unchecked(letters))
    }

    /// Rebuilds the tableau whose row-reading word is `word`: row i collects
    /// the ascending indices of the letters equal to i. The letter counts
    /// must form a valid shape of the requested kind; standardness is not
    /// checked here.
    pub fn chi_inverse(word: &Word, kind: ShapeKind) -> Result<Tableau> {
        let mut rows: Vec<Vec<u32>> = vec![Vec::new(); 3];
        for (i, &l) in word.letters().iter().enumerate() {
            rows[l as usize - 1].push(i as u32 + 1);
        }
        while rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        if rows.iter().any(|r| r.is_empty()) {
            return Err(Error::InvalidShape(
                "word type has an empty row before a nonempty one".into(),
            ));
        }
        let shape = Shape::new(rows.iter().map(Vec::len).collect(), kind)?;
        Ok(Tableau::from_rows_unchecked(shape, rows))
    }

    pub fn to_json_string(&self) -> String {
        let repr = TableauRepr {
            shape: self.shape.parts.clone(),
            shifted: self.shape.kind == ShapeKind::Shifted,
            rows: self.rows.clone(),
        };
        serde_json::to_string(&repr).expect("tableau serialization cannot fail")
    }

    pub fn from_json_str(s: &str) -> Result<Tableau> {
        let repr: TableauRepr =
            serde_json::from_str(s).map_err(|e| Error::InvalidTableau(format!("bad JSON: {e}")))?;
        let kind = if repr.shifted {
            ShapeKind::Shifted
        } else {
            ShapeKind::Ordinary
        };
        let tableau = Tableau::new(repr.rows, kind)?;
        let mut declared = repr.shape;
        while declared.last() == Some(&0) {
            declared.pop();
        }
        if tableau.shape.parts != declared {
            return Err(Error::InvalidTableau(format!(
                "declared shape {:?} does not match row lengths {:?}",
                declared, tableau.shape.parts
            )));
        }
        Ok(tableau)
    }

    /// Plain-text diagram: one row per line, cells space-separated and
    /// right-aligned, shifted rows indented one cell width per row.
    pub fn render_text(&self) -> String {
        let width = self
            .rows
            .iter()
            .flatten()
            .map(|e| e.to_string().len())
            .max()
            .unwrap_or(1);
        let mut out = String::new();
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                out.push('\n');
            }
            if self.shape.kind == ShapeKind::Shifted {
                out.push_str(&" ".repeat(i * (width + 1)));
            }
            let cells: Vec<String> = row.iter().map(|e| format!("{e:>width$}")).collect();
            out.push_str(&cells.join(" "));
        }
        out
    }
}

fn exact_quotient(numerator: BigUint, denominator: BigUint, what: &str) -> BigUint {
    let q = &numerator / &denominator;
    assert!(
        (numerator - &q * denominator).is_zero(),
        "{what} must divide exactly"
    );
    q
}

/// Number of standard fillings of an ordinary shape: N! divided by the
/// product of hook lengths (arm + leg + 1) over all cells.
///
/// # Example
///
/// ```
/// use zigzag_core::{count_syt, Shape, ShapeKind};
///
/// let shape = Shape::new(vec![3, 3, 3], ShapeKind::Ordinary)?;
/// assert_eq!(count_syt(&shape)?, 42u32.into());
/// # Ok::<(), zigzag_core::Error>(())
/// ```
pub fn count_syt(shape: &Shape) -> Result<BigUint> {
    if shape.kind() != ShapeKind::Ordinary {
        return Err(Error::Domain(
            "the hook-length count applies to ordinary shapes; use the shifted count instead"
                .into(),
        ));
    }
    let parts = shape.parts();
    let mut hooks = BigUint::one();
    for (i, &len) in parts.iter().enumerate() {
        for j in 1..=len {
            let arm = len - j;
            let leg = parts[i + 1..].iter().take_while(|&&p| p >= j).count();
            hooks *= BigUint::from(arm + leg + 1);
        }
    }
    Ok(exact_quotient(
        factorial(shape.cells()),
        hooks,
        "the hook product",
    ))
}

/// Number of standard fillings of a shifted shape:
/// N! / (p1! ... pm!) * prod_{i<j} (pi - pj) / (pi + pj), evaluated exactly.
pub fn count_shifted_syt(shape: &Shape) -> Result<BigUint> {
    if shape.kind() != ShapeKind::Shifted {
        return Err(Error::Domain(
            "the shifted count applies to shifted shapes; use the hook-length count instead".into(),
        ));
    }
    let parts = shape.parts();
    let mut numerator = factorial(shape.cells());
    let mut denominator = BigUint::one();
    for &p in parts {
        denominator *= factorial(p);
    }
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            numerator *= BigUint::from(parts[i] - parts[j]);
            denominator *= BigUint::from(parts[i] + parts[j]);
        }
    }
    Ok(exact_quotient(
        numerator,
        denominator,
        "the shifted product",
    ))
}

/// All standard tableaux of `shape`, in lexicographic order of their
/// row-reading words. Entries 1..N are placed in order; entry e may extend
/// row i when its left neighbour and the cell above it (row i-1 in the same
/// absolute column) are already filled.
pub fn enumerate_tableaux_with_limit(shape: &Shape, max_cells: usize) -> Result<Vec<Tableau>> {
    let total = shape.cells();
    if total > max_cells {
        return Err(Error::LimitExceeded(format!(
            "shape {shape} has {total} cells, cap is {max_cells}"
        )));
    }
    let parts = shape.parts().to_vec();
    let min_gap = match shape.kind() {
        ShapeKind::Ordinary => 1,
        ShapeKind::Shifted => 2,
    };

    struct Filler<'a> {
        parts: &'a [usize],
        min_gap: usize,
        total: usize,
        shape: &'a Shape,
        rows: Vec<Vec<u32>>,
        out: Vec<Tableau>,
    }

    impl Filler<'_> {
        fn place(&mut self, entry: u32) {
            if entry as usize > self.total {
                self.out.push(Tableau::from_rows_unchecked(
                    self.shape.clone(),
                    self.rows.clone(),
                ));
                return;
            }
            for i in 0..self.parts.len() {
                if self.rows[i].len() >= self.parts[i] {
                    continue;
                }
                if i > 0 && self.rows[i - 1].len() < self.rows[i].len() + self.min_gap {
                    continue;
                }
                self.rows[i].push(entry);
                self.place(entry + 1);
                self.rows[i].pop();
            }
        }
    }

    let mut filler = Filler {
        parts: &parts,
        min_gap,
        total,
        shape,
        rows: vec![Vec::new(); parts.len()],
        out: Vec::new(),
    };
    filler.place(1);
    Ok(filler.out)
}

/// [`enumerate_tableaux_with_limit`] with the default cap.
pub fn enumerate_tableaux(shape: &Shape) -> Result<Vec<Tableau>> {
    enumerate_tableaux_with_limit(shape, DEFAULT_CELL_LIMIT)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(parts: &[usize], kind: ShapeKind) -> Shape {
        Shape::new(parts.to_vec(), kind).expect("test shape")
    }

    fn tab(rows: &[&[u32]], kind: ShapeKind) -> Tableau {
        Tableau::new(rows.iter().map(|r| r.to_vec()).collect(), kind).expect("test tableau")
    }

    fn w(s: &str) -> Word {
        s.parse().expect("test word")
    }

    #[test]
    fn shape_normalization_and_validation() {
        assert_eq!(shape(&[4, 2, 0], ShapeKind::Shifted).parts(), &[4, 2]);
        assert!(Shape::new(vec![4, 0, 2], ShapeKind::Ordinary).is_err());
        assert!(Shape::new(vec![2, 3], ShapeKind::Ordinary).is_err());
        assert!(Shape::new(vec![2, 2], ShapeKind::Shifted).is_err());
        assert!(Shape::new(vec![], ShapeKind::Ordinary).unwrap().is_empty());
    }

    #[test]
    fn tableau_validation() {
        assert!(Tableau::new(vec![vec![1, 2], vec![3]], ShapeKind::Ordinary).is_ok());
        // entries must be exactly 1..=N
        assert!(Tableau::new(vec![vec![1, 2], vec![4]], ShapeKind::Ordinary).is_err());
        assert!(Tableau::new(vec![vec![1, 2], vec![2]], ShapeKind::Ordinary).is_err());
        // rows must strictly increase
        assert!(Tableau::new(vec![vec![2, 1], vec![3]], ShapeKind::Ordinary).is_err());
        // shape kind constrains row lengths
        assert!(Tableau::new(vec![vec![1, 2], vec![3, 4]], ShapeKind::Shifted).is_err());
    }

    #[test]
    fn chi_examples() {
        let t = tab(&[&[1, 2, 5, 6], &[3, 7, 8], &[4, 9]], ShapeKind::Ordinary);
        assert_eq!(t.chi().unwrap(), w("112311223"));

        let single = tab(&[&[1]], ShapeKind::Ordinary);
        assert_eq!(single.chi().unwrap(), w("1"));

        let t2 = tab(&[&[1, 2, 4], &[3, 5, 8], &[6, 7, 9]], ShapeKind::Ordinary);
        assert_eq!(t2.chi().unwrap(), w("112123323"));

        let four_rows = tab(&[&[1], &[2], &[3], &[4]], ShapeKind::Ordinary);
        assert!(four_rows.chi().is_err());
    }

    #[test]
    fn chi_inverse_examples() {
        let t = Tableau::chi_inverse(&w("112311223"), ShapeKind::Ordinary).unwrap();
        assert_eq!(
            t,
            tab(&[&[1, 2, 5, 6], &[3, 7, 8], &[4, 9]], ShapeKind::Ordinary)
        );

        let single = Tableau::chi_inverse(&w("1"), ShapeKind::Ordinary).unwrap();
        assert_eq!(single, tab(&[&[1]], ShapeKind::Ordinary));

        let sh = Tableau::chi_inverse(&w("112"), ShapeKind::Shifted).unwrap();
        assert_eq!(sh, tab(&[&[1, 2], &[3]], ShapeKind::Shifted));
        assert_eq!(sh.shape().parts(), &[2, 1]);

        // type (1,2,0) is not weakly decreasing
        assert!(Tableau::chi_inverse(&w("122"), ShapeKind::Ordinary).is_err());
        // type (2,2,2) is not strictly decreasing
        assert!(Tableau::chi_inverse(&w("112233"), ShapeKind::Shifted).is_err());
        // a letter 3 with no 2 leaves a hole in the shape
        assert!(Tableau::chi_inverse(&w("113"), ShapeKind::Ordinary).is_err());
    }

    #[test]
    fn standardness_examples() {
        assert!(tab(&[&[1, 2, 5, 6], &[3, 7, 8], &[4, 9]], ShapeKind::Ordinary).is_standard());
        assert!(!tab(&[&[1, 3], &[2]], ShapeKind::Shifted).is_standard());
        assert!(tab(&[&[1, 2], &[3]], ShapeKind::Shifted).is_standard());
        assert!(tab(&[&[1, 3], &[2, 4]], ShapeKind::Ordinary).is_standard());
        assert!(!tab(&[&[2, 3], &[1, 4]], ShapeKind::Ordinary).is_standard());
    }

    #[test]
    fn count_syt_examples() {
        assert_eq!(
            count_syt(&shape(&[1], ShapeKind::Ordinary)).unwrap(),
            1u32.into()
        );
        assert_eq!(
            count_syt(&shape(&[3, 3, 3], ShapeKind::Ordinary)).unwrap(),
            42u32.into()
        );
        assert_eq!(
            count_syt(&shape(&[2, 2, 2], ShapeKind::Ordinary)).unwrap(),
            5u32.into()
        );
        assert!(count_syt(&shape(&[2, 1], ShapeKind::Shifted)).is_err());
    }

    #[test]
    fn count_shifted_syt_examples() {
        assert_eq!(
            count_shifted_syt(&shape(&[2, 1], ShapeKind::Shifted)).unwrap(),
            1u32.into()
        );
        assert_eq!(
            count_shifted_syt(&shape(&[3, 2, 1], ShapeKind::Shifted)).unwrap(),
            2u32.into()
        );
        assert_eq!(
            count_shifted_syt(&shape(&[4, 2], ShapeKind::Shifted)).unwrap(),
            5u32.into()
        );
        assert!(count_shifted_syt(&shape(&[2, 1], ShapeKind::Ordinary)).is_err());
    }

    #[test]
    fn enumerate_examples() {
        let only = enumerate_tableaux(&shape(&[2, 1], ShapeKind::Shifted)).unwrap();
        assert_eq!(only, vec![tab(&[&[1, 2], &[3]], ShapeKind::Shifted)]);

        let five = enumerate_tableaux(&shape(&[2, 2, 2], ShapeKind::Ordinary)).unwrap();
        assert_eq!(five.len(), 5);
        assert!(five.iter().all(Tableau::is_standard));

        let one = enumerate_tableaux(&shape(&[1], ShapeKind::Ordinary)).unwrap();
        assert_eq!(one.len(), 1);

        assert!(enumerate_tableaux(&shape(&[16], ShapeKind::Ordinary)).is_err());

        // lexicographic in the row-reading words
        let words: Vec<String> = five.iter().map(|t| t.chi().unwrap().to_string()).collect();
        let mut sorted = words.clone();
        sorted.sort();
        assert_eq!(words, sorted);
    }

    #[test]
    fn json_round_trip_and_schema() {
        let t = tab(&[&[1, 2, 4, 6], &[3, 5]], ShapeKind::Shifted);
        let json = t.to_json_string();
        assert_eq!(
            json,
            r#"{"shape":[4,2],"shifted":true,"rows":[[1,2,4,6],[3,5]]}"#
        );
        assert_eq!(Tableau::from_json_str(&json).unwrap(), t);

        assert!(
            Tableau::from_json_str(r#"{"shape":[3,2],"shifted":true,"rows":[[1,2],[3]]}"#).is_err()
        );
        assert!(Tableau::from_json_str("not json").is_err());
    }

    #[test]
    fn text_rendering() {
        let t = tab(&[&[1, 2, 5, 6], &[3, 7, 8], &[4, 9]], ShapeKind::Ordinary);
        assert_eq!(t.render_text(), "1 2 5 6\n3 7 8\n4 9");

        let sh = tab(&[&[1, 2, 4], &[3, 5], &[6]], ShapeKind::Shifted);
        assert_eq!(sh.render_text(), "1 2 4\n  3 5\n    6");

        let wide = tab(
            &[&[1, 2, 4, 6], &[3, 5, 9, 11], &[7, 8, 10, 12]],
            ShapeKind::Ordinary,
        );
        assert_eq!(wide.render_text(), " 1  2  4  6\n 3  5  9 11\n 7  8 10 12");
    }
}
