//! Exact cone membership: is `target` a nonnegative rational combination of
//! `gens`? Decided by phase one of the simplex method over `BigRational`
//! with Bland's rule, so it terminates and never rounds.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

pub(crate) fn in_cone(target: &[i64], gens: &[&[i64]]) -> bool {
    let m = target.len();
    let n = gens.len();
    if target.iter().all(|&t| t == 0) {
        return true;
    }
    if n == 0 {
        return false;
    }
    let q = |x: i64| BigRational::from_integer(x.into());

    // rows: sum_j gens[j][i] * mu_j + a_i = |t_i|, signs flipped so rhs >= 0
    let width = n + m + 1;
    let mut tab: Vec<Vec<BigRational>> = (0..m)
        .map(|i| {
            let sign = if target[i] < 0 { -1 } else { 1 };
            let mut row = vec![BigRational::zero(); width];
            for (j, g) in gens.iter().enumerate() {
                row[j] = q(sign * g[i]);
            }
            row[n + i] = q(1);
            row[width - 1] = q(sign * target[i]);
            row
        })
        .collect();
    let mut basis: Vec<usize> = (n..n + m).collect();

    // reduced costs of the auxiliary objective sum(a_i)
    let mut obj = vec![BigRational::zero(); width];
    for row in &tab {
        for j in 0..n {
            obj[j] -= &row[j];
        }
        obj[width - 1] -= &row[width - 1];
    }

    while let Some(enter) = (0..width - 1).find(|&j| obj[j].is_negative()) {
        let mut leave: Option<(usize, BigRational)> = None;
        for (i, row) in tab.iter().enumerate() {
            if !row[enter].is_positive() {
                continue;
            }
            let ratio = &row[width - 1] / &row[enter];
            let better = match &leave {
                None => true,
                Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        // the auxiliary problem is bounded below by zero
        let (r, _) = leave.expect("phase one objective is bounded");
        let inv = tab[r][enter].recip();
        for x in tab[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = tab[r].clone();
        for (i, row) in tab.iter_mut().enumerate() {
            if i == r || row[enter].is_zero() {
                continue;
            }
            let f = row[enter].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x -= &f * p;
            }
        }
        let f = obj[enter].clone();
        for (x, p) in obj.iter_mut().zip(&pivot_row) {
            *x -= &f * p;
        }
        basis[r] = enter;
    }
    obj[width - 1].is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn membership_in_plane_cone() {
        let g: [&[i64]; 2] = [&[1, 0], &[1, 2]];
        assert!(in_cone(&[1, 1], &g));
        assert!(in_cone(&[3, 2], &g));
        assert!(!in_cone(&[0, 1], &g));
        assert!(!in_cone(&[1, 3], &g));
        assert!(in_cone(&[0, 0], &g));
    }

    #[test]
    fn empty_generators() {
        assert!(!in_cone(&[1], &[]));
        assert!(in_cone(&[0], &[]));
    }

    #[test]
    fn degenerate_and_redundant_generators() {
        let g: [&[i64]; 4] = [&[1, 0, 0], &[2, 0, 0], &[0, 1, 1], &[1, 1, 1]];
        assert!(in_cone(&[3, 2, 2], &g));
        assert!(!in_cone(&[1, 1, 0], &g));
        assert!(!in_cone(&[-1, 0, 0], &g));
    }
}
