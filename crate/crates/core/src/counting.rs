//! Closed-form counts, brute-force cross-checks, and the verification
//! reports that pit every identity against independent computations.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::bijection::{
    delta, delta_inverse, gamma, gamma_inverse, phi, phi_bar, phi_bar_inverse, phi_inverse, psi,
    psi_bar, psi_bar_inverse, psi_inverse,
};
use crate::error::{Error, Result};
use crate::perm::{
    enumerate_avoiders_with_limit, for_each_avoider_with_limit, AlternationClass, Permutation,
    DEFAULT_LENGTH_LIMIT,
};
use crate::tableau::{
    count_shifted_syt, count_syt, enumerate_tableaux, Shape, ShapeKind, DEFAULT_CELL_LIMIT,
};

pub(crate) fn factorial(n: usize) -> BigUint {
    let mut out = BigUint::one();
    for k in 2..=n {
        out *= BigUint::from(k);
    }
    out
}

fn exact_quotient(numerator: BigUint, denominator: BigUint) -> BigUint {
    let q = &numerator / &denominator;
    debug_assert!((numerator - &q * denominator).is_zero());
    q
}

/// 2 (3n)! / (n! (n+1)! (n+2)!), the count of even-length zigzag
/// permutations in the families compared here, and of the tableaux of shape
/// (n, n, n).
pub fn formula_even_1234(n: u64) -> BigUint {
    let n = n as usize;
    let numerator = BigUint::from(2u32) * factorial(3 * n);
    let denominator = factorial(n) * factorial(n + 1) * factorial(n + 2);
    exact_quotient(numerator, denominator)
}

/// 16 (3n)! / ((n-1)! (n+1)! (n+3)!), the odd-length companion of
/// [`formula_even_1234`]. Undefined at n = 0.
pub fn formula_odd_1234(n: u64) -> Result<BigUint> {
    if n < 1 {
        return Err(Error::Domain(
            "the odd-length count formula requires n >= 1".into(),
        ));
    }
    let n = n as usize;
    let numerator = BigUint::from(16u32) * factorial(3 * n);
    let denominator = factorial(n - 1) * factorial(n + 1) * factorial(n + 3);
    Ok(exact_quotient(numerator, denominator))
}

/// Number of length-`n` permutations in `class` avoiding `pattern`, by
/// exhaustive backtracking.
pub fn brute_count_with_limit(
    n: usize,
    class: AlternationClass,
    pattern: &Permutation,
    limit: usize,
) -> Result<BigUint> {
    let mut count: u64 = 0;
    for_each_avoider_with_limit(n, class, pattern, limit, |_| count += 1)?;
    Ok(BigUint::from(count))
}

/// [`brute_count_with_limit`] with the default cap.
pub fn brute_count(n: usize, class: AlternationClass, pattern: &Permutation) -> Result<BigUint> {
    brute_count_with_limit(n, class, pattern, DEFAULT_LENGTH_LIMIT)
}

/// One enumeration identity checked through up to three independent routes.
///
/// `formula` is the count predicted by theory: a closed form, a hook-type
/// product, or the reference side of a transported identity. `brute` is a
/// direct permutation enumeration and `tableau` an exhaustive tableau
/// generation (or a second, independent counting route), when within limits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountReport {
    pub label: String,
    pub n: usize,
    pub formula: BigUint,
    pub brute: Option<BigUint>,
    pub tableau: Option<BigUint>,
    pub agree: bool,
}

impl CountReport {
    pub fn new(
        label: impl Into<String>,
        n: usize,
        formula: BigUint,
        brute: Option<BigUint>,
        tableau: Option<BigUint>,
    ) -> Self {
        let agree = brute.iter().chain(tableau.iter()).all(|v| *v == formula);
        CountReport {
            label: label.into(),
            n,
            formula,
            brute,
            tableau,
            agree,
        }
    }

    /// JSON line with big integers rendered as decimal strings.
    pub fn to_json_line(&self) -> String {
        let opt = |v: &Option<BigUint>| match v {
            Some(b) => format!("\"{b}\""),
            None => "null".to_string(),
        };
        format!(
            "{{\"label\":{},\"n\":{},\"formula\":\"{}\",\"brute\":{},\"tableau\":{},\"agree\":{}}}",
            serde_json::to_string(&self.label).expect("label serialization"),
            self.n,
            self.formula,
            opt(&self.brute),
            opt(&self.tableau),
            self.agree
        )
    }
}

fn sort_reports(mut reports: Vec<CountReport>) -> Vec<CountReport> {
    reports.sort_by(|a, b| (a.label.as_str(), a.n).cmp(&(b.label.as_str(), b.n)));
    reports
}

fn pattern(values: &[u32]) -> Permutation {
    Permutation::new(values.to_vec()).expect("static pattern")
}

/// One report per enumeration identity per n <= max_n: the four
/// permutation-to-tableau count identities, the complement transport between
/// the 1432 and 4123 families, and the equalities that transport resolves.
pub fn verify_theorems_with_limit(max_n: usize, length_limit: usize) -> Result<Vec<CountReport>> {
    let p4123 = pattern(&[4, 1, 2, 3]);
    let p1234 = pattern(&[1, 2, 3, 4]);
    let p1432 = pattern(&[1, 4, 3, 2]);
    let p2143 = pattern(&[2, 1, 4, 3]);
    let brute = |n: usize, class: AlternationClass, pat: &Permutation| {
        brute_count_with_limit(n, class, pat, length_limit)
    };

    let mut reports = Vec::new();
    for n in 1..=max_n {
        let balanced = Shape::new(vec![n, n, n], ShapeKind::Ordinary)?;
        reports.push(CountReport::new(
            "DU(2n,4123) = SYT(n,n,n)",
            n,
            formula_even_1234(n as u64),
            Some(brute(2 * n, AlternationClass::DownUp, &p4123)?),
            Some(count_syt(&balanced)?),
        ));

        let staircase_shifted = Shape::new(vec![n + 1, n, n - 1], ShapeKind::Shifted)?;
        let enumerated = if 3 * n <= DEFAULT_CELL_LIMIT {
            Some(BigUint::from(enumerate_tableaux(&staircase_shifted)?.len()))
        } else {
            None
        };
        reports.push(CountReport::new(
            "DU(2n-1,4123) = shifted SYT(n+1,n,n-1)",
            n,
            count_shifted_syt(&staircase_shifted)?,
            Some(brute(2 * n - 1, AlternationClass::DownUp, &p4123)?),
            enumerated,
        ));

        let staircase = Shape::new(vec![n + 1, n, n - 1], ShapeKind::Ordinary)?;
        reports.push(CountReport::new(
            "UD(2n+1,4123) = SYT(n+1,n,n-1)",
            n,
            formula_odd_1234(n as u64)?,
            Some(brute(2 * n + 1, AlternationClass::UpDown, &p4123)?),
            Some(count_syt(&staircase)?),
        ));

        let wide = if n >= 2 {
            Some(count_shifted_syt(&Shape::new(
                vec![n + 2, n, n - 2],
                ShapeKind::Shifted,
            )?)?)
        } else {
            None
        };
        reports.push(CountReport::new(
            "UD(2n,4123) = shifted SYT(n+2,n,n-2)",
            n,
            formula_even_1234(n as u64),
            Some(brute(2 * n, AlternationClass::UpDown, &p4123)?),
            wide,
        ));

        // The complement turns an up-down 1432-avoider into a down-up
        // 4123-avoider of the same length, so the two counts must match.
        for length in [2 * n - 1, 2 * n] {
            reports.push(CountReport::new(
                "UD(m,1432) = DU(m,4123)",
                length,
                brute(length, AlternationClass::DownUp, &p4123)?,
                Some(brute(length, AlternationClass::UpDown, &p1432)?),
                None,
            ));
        }

        reports.push(CountReport::new(
            "UD(2n,1432) = UD(2n,1234)",
            n,
            brute(2 * n, AlternationClass::UpDown, &p1234)?,
            Some(brute(2 * n, AlternationClass::UpDown, &p1432)?),
            None,
        ));
        reports.push(CountReport::new(
            "UD(2n+1,1432) = UD(2n+1,2143)",
            n,
            brute(2 * n + 1, AlternationClass::UpDown, &p2143)?,
            Some(brute(2 * n + 1, AlternationClass::UpDown, &p1432)?),
            None,
        ));
        reports.push(CountReport::new(
            "UD(2n,4123) = UD(2n,1234)",
            n,
            brute(2 * n, AlternationClass::UpDown, &p1234)?,
            Some(brute(2 * n, AlternationClass::UpDown, &p4123)?),
            None,
        ));
        reports.push(CountReport::new(
            "UD(2n+1,4123) = UD(2n+1,1234)",
            n,
            brute(2 * n + 1, AlternationClass::UpDown, &p1234)?,
            Some(brute(2 * n + 1, AlternationClass::UpDown, &p4123)?),
            None,
        ));
    }
    Ok(sort_reports(reports))
}

/// [`verify_theorems_with_limit`] with the default cap.
pub fn verify_theorems(max_n: usize) -> Result<Vec<CountReport>> {
    verify_theorems_with_limit(max_n, DEFAULT_LENGTH_LIMIT)
}

/// Runs every per-element check; on success returns a canonical text form
/// of the image, used to count distinct images.
type ImageCheck<'a> = Box<dyn Fn(&Permutation) -> Option<String> + 'a>;

struct RoundTrip<'a> {
    label: &'a str,
    length: usize,
    class: AlternationClass,
    target: BigUint,
    check: ImageCheck<'a>,
}

/// One report per bijection per n <= max_n. `formula` is the size of the
/// target set by exact counting, `brute` the number of domain permutations
/// that pass the round trip together with every codomain and statistic
/// check, and `tableau` the number of distinct images.
pub fn verify_bijections_with_limit(max_n: usize, length_limit: usize) -> Result<Vec<CountReport>> {
    let p4123 = pattern(&[4, 1, 2, 3]);
    let mut reports = Vec::new();

    for n in 1..=max_n {
        let balanced = Shape::new(vec![n, n, n], ShapeKind::Ordinary)?;
        let staircase = Shape::new(vec![n + 1, n, n - 1], ShapeKind::Ordinary)?;
        let staircase_shifted = Shape::new(vec![n + 1, n, n - 1], ShapeKind::Shifted)?;

        let mut suites: Vec<RoundTrip> = vec![
            RoundTrip {
                label: "phi bijective on DU(2n,4123)",
                length: 2 * n,
                class: AlternationClass::DownUp,
                target: count_syt(&balanced)?,
                check: Box::new(move |q: &Permutation| {
                    let w = phi(q).ok()?;
                    let t = w.word_type();
                    let ok = w.is_yamanouchi()
                        && t.as_tuple() == (n, n, n)
                        && w.alpha() as u32 == q.first()?
                        && w.stat_b() == q.stat_a().ok()?
                        && phi_inverse(&w).ok()? == *q;
                    ok.then(|| w.to_string())
                }),
            },
            RoundTrip {
                label: "psi bijective on DU(2n-1,4123)",
                length: 2 * n - 1,
                class: AlternationClass::DownUp,
                target: count_shifted_syt(&staircase_shifted)?,
                check: Box::new(move |q: &Permutation| {
                    let w = psi(q).ok()?;
                    let ok = w.is_skew_yamanouchi()
                        && w.alpha() as u32 == q.first()?
                        && w.stat_b() == q.stat_a().ok()?
                        && psi_inverse(&w).ok()? == *q;
                    ok.then(|| w.to_string())
                }),
            },
            RoundTrip {
                label: "phi-bar bijective on DU(2n,4123)",
                length: 2 * n,
                class: AlternationClass::DownUp,
                target: count_syt(&balanced)?,
                check: Box::new(move |q: &Permutation| {
                    let t = phi_bar(q).ok()?;
                    let ok = t.is_standard()
                        && t.shape().parts() == [n, n, n]
                        && t.entry(1, n)? == (3 * n) as u32 - q.first()?
                        && phi_bar_inverse(&t).ok()? == *q;
                    ok.then(|| t.to_json_string())
                }),
            },
            RoundTrip {
                label: "psi-bar bijective on DU(2n-1,4123)",
                length: 2 * n - 1,
                class: AlternationClass::DownUp,
                target: count_shifted_syt(&staircase_shifted)?,
                check: Box::new(move |q: &Permutation| {
                    let t = psi_bar(q).ok()?;
                    let parts_ok = if n == 1 {
                        t.shape().parts() == [2, 1]
                    } else {
                        t.shape().parts() == [n + 1, n, n - 1]
                    };
                    let ok = t.is_standard()
                        && t.shape().kind() == ShapeKind::Shifted
                        && parts_ok
                        && t.entry(1, n + 1)? == (3 * n) as u32 - q.first()?
                        && psi_bar_inverse(&t).ok()? == *q;
                    ok.then(|| t.to_json_string())
                }),
            },
            RoundTrip {
                label: "gamma bijective on UD(2n+1,4123)",
                length: 2 * n + 1,
                class: AlternationClass::UpDown,
                target: count_syt(&staircase)?,
                check: Box::new(move |q: &Permutation| {
                    let t = gamma(q).ok()?;
                    let parts_ok = if n == 1 {
                        t.shape().parts() == [2, 1]
                    } else {
                        t.shape().parts() == [n + 1, n, n - 1]
                    };
                    let ok = t.is_standard()
                        && t.shape().kind() == ShapeKind::Ordinary
                        && parts_ok
                        && gamma_inverse(&t).ok()? == *q;
                    ok.then(|| t.to_json_string())
                }),
            },
        ];
        if n >= 2 {
            let wide_shifted = Shape::new(vec![n + 2, n, n - 2], ShapeKind::Shifted)?;
            suites.push(RoundTrip {
                label: "delta bijective on UD(2n,4123)",
                length: 2 * n,
                class: AlternationClass::UpDown,
                target: count_shifted_syt(&wide_shifted)?,
                check: Box::new(move |q: &Permutation| {
                    let t = delta(q).ok()?;
                    let parts_ok = if n == 2 {
                        t.shape().parts() == [4, 2]
                    } else {
                        t.shape().parts() == [n + 2, n, n - 2]
                    };
                    let ok = t.is_standard()
                        && t.shape().kind() == ShapeKind::Shifted
                        && parts_ok
                        && delta_inverse(&t).ok()? == *q;
                    ok.then(|| t.to_json_string())
                }),
            });
        }

        for suite in suites {
            let domain =
                enumerate_avoiders_with_limit(suite.length, suite.class, &p4123, length_limit)?;
            let mut passing: u64 = 0;
            let mut images: BTreeSet<String> = BTreeSet::new();
            for q in &domain {
                if let Some(image) = (suite.check)(q) {
                    passing += 1;
                    images.insert(image);
                }
            }
            reports.push(CountReport::new(
                suite.label,
                n,
                suite.target.clone(),
                Some(BigUint::from(passing)),
                Some(BigUint::from(images.len())),
            ));
        }
    }
    Ok(sort_reports(reports))
}

/// [`verify_bijections_with_limit`] with the default cap.
pub fn verify_bijections(max_n: usize) -> Result<Vec<CountReport>> {
    verify_bijections_with_limit(max_n, DEFAULT_LENGTH_LIMIT)
}

/// The count identities and the bijection round-trip suites together,
/// sorted by (label, n).
pub fn verify_all_with_limit(max_n: usize, length_limit: usize) -> Result<Vec<CountReport>> {
    let mut reports = verify_theorems_with_limit(max_n, length_limit)?;
    reports.extend(verify_bijections_with_limit(max_n, length_limit)?);
    Ok(sort_reports(reports))
}

/// [`verify_all_with_limit`] with the default cap.
pub fn verify_all(max_n: usize) -> Result<Vec<CountReport>> {
    verify_all_with_limit(max_n, DEFAULT_LENGTH_LIMIT)
}
