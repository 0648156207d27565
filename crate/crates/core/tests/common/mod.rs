//! Shared test oracles, independent of the library's eigensolver path.
//!
//! The spectrum oracle expands the characteristic polynomial of a small
//! symmetric matrix exactly (elementary symmetric functions via principal
//! minors, cofactor-expansion determinants) and isolates its all-real roots
//! by recursive derivative bracketing plus bisection.

#![allow(dead_code)]

use uplap::{PointCloud, SplitMix64, SymMatrix};

/// Cofactor-expansion determinant, brute force, for tiny matrices.
fn det(m: &[Vec<f64>]) -> f64 {
    let n = m.len();
    match n {
        0 => 1.0,
        1 => m[0][0],
        _ => {
            let mut sum = 0.0;
            for j in 0..n {
                let minor: Vec<Vec<f64>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(c, _)| *c != j)
                            .map(|(_, v)| *v)
                            .collect()
                    })
                    .collect();
                let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
                sum += sign * m[0][j] * det(&minor);
            }
            sum
        }
    }
}

fn principal_minor(m: &SymMatrix, rows: &[usize]) -> f64 {
    let sub: Vec<Vec<f64>> = rows
        .iter()
        .map(|&i| rows.iter().map(|&j| m.get(i, j)).collect())
        .collect();
    det(&sub)
}

/// Monic characteristic polynomial coefficients, highest degree first:
/// `p(λ) = λⁿ − e₁λⁿ⁻¹ + e₂λⁿ⁻² − …` with `e_k` the sum of k×k principal
/// minors. Intended for n ≤ 4 (the subset walk is exponential).
pub fn char_poly(m: &SymMatrix) -> Vec<f64> {
    let n = m.n();
    assert!(n <= 4, "char_poly oracle is for n <= 4");
    let mut coeffs = vec![0.0; n + 1];
    coeffs[0] = 1.0;
    for mask in 1u32..(1 << n) {
        let rows: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        let k = rows.len();
        let sign = if k.is_multiple_of(2) { 1.0 } else { -1.0 };
        coeffs[k] += sign * principal_minor(m, &rows);
    }
    coeffs
}

fn eval(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().fold(0.0, |acc, c| acc * x + c)
}

fn derivative(coeffs: &[f64]) -> Vec<f64> {
    let degree = coeffs.len() - 1;
    coeffs[..degree]
        .iter()
        .enumerate()
        .map(|(i, c)| c * (degree - i) as f64)
        .collect()
}

fn bisect(coeffs: &[f64], mut lo: f64, mut hi: f64) -> f64 {
    let mut flo = eval(coeffs, lo);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid == lo || mid == hi {
            break;
        }
        let fmid = eval(coeffs, mid);
        if (flo <= 0.0) == (fmid <= 0.0) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// All real roots of a monic polynomial whose roots are known to be real
/// (characteristic polynomials of symmetric matrices), with multiplicity,
/// sorted ascending.
///
/// Simple roots come from sign-change bisection between consecutive critical
/// points; a critical point where `p` itself vanishes is a multiple root and
/// contributes its multiplicity in `p'` plus one.
pub fn real_roots(coeffs: &[f64]) -> Vec<f64> {
    let degree = coeffs.len() - 1;
    if degree == 0 {
        return Vec::new();
    }
    if degree == 1 {
        return vec![-coeffs[1] / coeffs[0]];
    }
    let crit = real_roots(&derivative(coeffs));
    let scale = coeffs.iter().fold(1.0f64, |acc, c| acc.max(c.abs()));
    let bound = 1.0 + coeffs[1..].iter().fold(0.0f64, |acc, c| acc.max(c.abs()));
    let root_eps = 1e-9 * scale;

    let mut roots: Vec<f64> = Vec::new();

    // multiple roots sit at critical points where p vanishes
    let mut i = 0;
    while i < crit.len() {
        let mut j = i + 1;
        while j < crit.len() && (crit[j] - crit[i]).abs() <= 1e-8 * crit[i].abs().max(1.0) {
            j += 1;
        }
        let c = crit[i];
        if eval(coeffs, c).abs() <= root_eps {
            for _ in 0..(j - i + 1) {
                roots.push(c);
            }
        }
        i = j;
    }

    // simple roots change sign between consecutive breakpoints
    let mut breakpoints = vec![-bound];
    for &c in &crit {
        if breakpoints.last().is_none_or(|&b| c > b) {
            breakpoints.push(c);
        }
    }
    breakpoints.push(bound);
    for w in breakpoints.windows(2) {
        let (a, b) = (w[0], w[1]);
        let (fa, fb) = (eval(coeffs, a), eval(coeffs, b));
        if fa * fb < 0.0 && fa.abs() > root_eps && fb.abs() > root_eps {
            roots.push(bisect(coeffs, a, b));
        }
    }
    roots.sort_by(f64::total_cmp);
    roots
}

/// Spectrum oracle: exact characteristic polynomial, then root isolation.
pub fn oracle_eigenvalues(m: &SymMatrix) -> Vec<f64> {
    real_roots(&char_poly(m))
}

/// Random symmetric matrix with entries in [-1, 1].
pub fn random_symmetric(rng: &mut SplitMix64, n: usize) -> SymMatrix {
    SymMatrix::from_fn(n, |_, _| rng.next_signed())
}

/// Random planar cloud in the unit square.
pub fn random_cloud(rng: &mut SplitMix64, n_points: usize) -> PointCloud {
    let points = (0..n_points)
        .map(|_| vec![rng.next_f64(), rng.next_f64()])
        .collect();
    PointCloud::new(points).expect("unit-square samples are valid")
}

#[cfg(test)]
mod self_checks {
    use super::*;

    #[test]
    fn char_poly_of_known_matrices() {
        // [[1,-1],[-1,1]]: λ² − 2λ
        let mut m = SymMatrix::zeros(2);
        m.set(0, 0, 1.0);
        m.set(1, 1, 1.0);
        m.set(0, 1, -1.0);
        assert_eq!(char_poly(&m), vec![1.0, -2.0, 0.0]);
    }

    #[test]
    fn roots_of_triangle_laplacian_polynomial() {
        // λ³ − 6λ² + 9λ = λ(λ − 3)²
        let roots = real_roots(&[1.0, -6.0, 9.0, 0.0]);
        assert_eq!(roots.len(), 3);
        assert!(roots[0].abs() < 1e-10);
        assert!((roots[1] - 3.0).abs() < 1e-8);
        assert!((roots[2] - 3.0).abs() < 1e-8);
    }

    #[test]
    fn roots_of_simple_quartic() {
        // (λ−1)(λ+1)(λ−2)(λ+2) = λ⁴ − 5λ² + 4
        let roots = real_roots(&[1.0, 0.0, -5.0, 0.0, 4.0]);
        let expected = [-2.0, -1.0, 1.0, 2.0];
        for (r, e) in roots.iter().zip(expected) {
            assert!((r - e).abs() < 1e-10, "{r} vs {e}");
        }
    }
}
