//! Floating-point root finding, used only as an independent numeric oracle.

use alloc::vec::Vec;

use num_complex::Complex64;

const MAX_ITERATIONS: usize = 500;
const STEP_TOLERANCE: f64 = 1e-13;

/// All complex roots of the monic polynomial with the given ascending
/// non-leading coefficients (`X^n + c[n-1] X^(n-1) + ... + c[0]`), by
/// Durand-Kerner iteration.
pub fn monic_roots(lower: &[f64]) -> Vec<Complex64> {
    let n = lower.len();
    if n == 0 {
        return Vec::new();
    }
    let eval = |z: Complex64| lower.iter().rev().fold(Complex64::new(1.0, 0.0), |acc, &c| acc * z + c);
    let seed = Complex64::new(0.4, 0.9);
    let mut roots: Vec<Complex64> = Vec::with_capacity(n);
    let mut z = Complex64::new(1.0, 0.0);
    for _ in 0..n {
        roots.push(z);
        z *= seed;
    }
    for _ in 0..MAX_ITERATIONS {
        let mut converged = true;
        for i in 0..n {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..n {
                if i != j {
                    denom *= roots[i] - roots[j];
                }
            }
            if denom.norm_sqr() == 0.0 {
                // perturb coincident iterates
                roots[i] += Complex64::new(1e-8, 1e-8);
                converged = false;
                continue;
            }
            let step = eval(roots[i]) / denom;
            roots[i] -= step;
            let scale = roots[i].norm_sqr().max(1.0);
            if step.norm_sqr() > STEP_TOLERANCE * STEP_TOLERANCE * scale {
                converged = false;
            }
        }
        if converged {
            break;
        }
    }
    roots
}
