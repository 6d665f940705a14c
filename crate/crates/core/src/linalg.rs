//! Exact Gaussian elimination over `ℚ(√·)(i)`.

use crate::scalar::ComplexRadical;

/// Row-reduces `rows` in place and returns the pivot column of each nonzero row.
pub fn row_reduce(rows: &mut Vec<Vec<ComplexRadical>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].invert().expect("pivot is nonzero");
        for v in &mut rows[r][col..ncols] {
            *v = &*v * &inv;
        }
        for i in 0..rows.len() {
            if i == r || rows[i][col].is_zero() {
                continue;
            }
            let factor = rows[i][col].clone();
            let pivot_row = rows[r].clone();
            for (v, p) in rows[i][col..ncols].iter_mut().zip(&pivot_row[col..ncols]) {
                if !p.is_zero() {
                    *v = &*v - &(&factor * p);
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// A basis of `{v | A v = 0}` for `A` given by rows of length `ncols`.
pub fn kernel(rows: &[Vec<ComplexRadical>], ncols: usize) -> Vec<Vec<ComplexRadical>> {
    let mut reduced = rows.to_vec();
    let pivots = row_reduce(&mut reduced, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![ComplexRadical::zero(); ncols];
            v[f] = ComplexRadical::one();
            for (row, &p) in reduced.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect()
}

pub fn rank(rows: &[Vec<ComplexRadical>], ncols: usize) -> usize {
    let mut reduced = rows.to_vec();
    row_reduce(&mut reduced, ncols).len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::RadicalScalar;

    fn q(n: i64) -> ComplexRadical {
        ComplexRadical::from_int(n)
    }

    fn apply(rows: &[Vec<ComplexRadical>], v: &[ComplexRadical]) -> Vec<ComplexRadical> {
        rows.iter().map(|row| row.iter().zip(v).fold(ComplexRadical::zero(), |acc, (a, b)| &acc + &(a * b))).collect()
    }

    #[test]
    fn rational_kernel() {
        let rows = vec![vec![q(1), q(2), q(3)], vec![q(2), q(4), q(6)]];
        let ker = kernel(&rows, 3);
        assert_eq!(ker.len(), 2);
        for v in &ker {
            assert!(apply(&rows, v).iter().all(ComplexRadical::is_zero));
        }
        assert_eq!(rank(&rows, 3), 1);
    }

    #[test]
    fn radical_kernel() {
        let s2 = ComplexRadical::real(RadicalScalar::sqrt_int(2));
        let i = ComplexRadical::i();
        let rows = vec![vec![s2.clone(), -q(1), q(0)], vec![q(0), i.clone(), s2.clone()]];
        let ker = kernel(&rows, 3);
        assert_eq!(ker.len(), 1);
        assert!(apply(&rows, &ker[0]).iter().all(ComplexRadical::is_zero));
    }

    #[test]
    fn full_rank() {
        let rows = vec![vec![q(1), q(0)], vec![q(0), q(1)]];
        assert!(kernel(&rows, 2).is_empty());
        assert!(kernel(&[], 2).len() == 2);
    }
}
