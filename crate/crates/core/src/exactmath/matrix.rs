use serde::Serialize;

use super::{ExactError, Rational};

/// Sylvester inertia of a symmetric bilinear form: the number of
/// negative, zero and positive squares in any diagonalization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Inertia {
    pub n_minus: usize,
    pub n_zero: usize,
    pub n_plus: usize,
}

impl Inertia {
    pub fn is_negative_definite(&self) -> bool {
        self.n_zero == 0 && self.n_plus == 0
    }
}

/// Dense symmetric matrix over the rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymMatrix {
    n: usize,
    entries: Vec<Rational>,
}

impl SymMatrix {
    pub fn zero(n: usize) -> Self {
        SymMatrix {
            n,
            entries: vec![Rational::zero(); n * n],
        }
    }

    /// Construct from full rows, checking symmetry.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, ExactError> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(ExactError::RaggedRows);
        }
        for i in 0..n {
            for j in 0..i {
                if rows[i][j] != rows[j][i] {
                    return Err(ExactError::NotSymmetric(i, j));
                }
            }
        }
        Ok(SymMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self, ExactError> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Rational::integer(v)).collect())
                .collect(),
        )
    }

    /// Tridiagonal matrix with the given diagonal and 1 on the first
    /// off-diagonals; the intersection form of a linear chain.
    pub fn tridiagonal_chain(diagonal: &[i64]) -> Self {
        let n = diagonal.len();
        let mut m = SymMatrix::zero(n);
        for (i, &d) in diagonal.iter().enumerate() {
            m.set(i, i, Rational::integer(d));
            if i + 1 < n {
                m.set(i, i + 1, Rational::one());
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.n + j]
    }

    /// Sets both `(i, j)` and `(j, i)`.
    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.entries[i * self.n + j] = v.clone();
        self.entries[j * self.n + i] = v;
    }

    pub fn rows(&self) -> Vec<Vec<Rational>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j).clone()).collect())
            .collect()
    }

    /// Sylvester inertia by symmetric elimination with pivot search.
    ///
    /// Zero diagonals are handled by a congruence row+column add onto a
    /// nonzero off-diagonal entry (valid away from characteristic 2),
    /// so the reduction never leaves the symmetric world and the counts
    /// are exact.
    pub fn inertia(&self) -> Inertia {
        self.reduce().0
    }

    /// Exact determinant (product of the congruence pivots; congruence
    /// transvections and symmetric swaps both preserve it).
    pub fn det(&self) -> Rational {
        self.reduce().1
    }

    fn reduce(&self) -> (Inertia, Rational) {
        let n = self.n;
        let mut m = self.entries.clone();
        let at = |m: &Vec<Rational>, i: usize, j: usize| -> Rational { m[i * n + j].clone() };
        let mut inertia = Inertia {
            n_minus: 0,
            n_zero: 0,
            n_plus: 0,
        };
        let mut det = Rational::one();
        for step in 0..n {
            // Pivot search on the diagonal of the trailing block.
            let mut pivot_row = (step..n).find(|&i| !at(&m, i, i).is_zero());
            if pivot_row.is_none() {
                // All diagonal zero: look for an off-diagonal entry.
                let mut found = None;
                'search: for i in step..n {
                    for j in (i + 1)..n {
                        if !at(&m, i, j).is_zero() {
                            found = Some((i, j));
                            break 'search;
                        }
                    }
                }
                match found {
                    None => {
                        inertia.n_zero += n - step;
                        return (inertia, Rational::zero());
                    }
                    Some((i, j)) => {
                        // Congruence add of row/col j onto row/col i makes
                        // the (i, i) entry 2*m[i][j] != 0.
                        for c in 0..n {
                            let v = at(&m, i, c) + at(&m, j, c);
                            m[i * n + c] = v;
                        }
                        for r in 0..n {
                            let v = at(&m, r, i) + at(&m, r, j);
                            m[r * n + i] = v;
                        }
                        pivot_row = Some(i);
                    }
                }
            }
            let p = pivot_row.unwrap();
            if p != step {
                // Symmetric swap; determinant picks up (-1)^2 = 1.
                for c in 0..n {
                    m.swap(p * n + c, step * n + c);
                }
                for r in 0..n {
                    m.swap(r * n + p, r * n + step);
                }
            }
            let pivot = at(&m, step, step);
            match pivot.signum() {
                -1 => inertia.n_minus += 1,
                1 => inertia.n_plus += 1,
                _ => unreachable!("pivot is nonzero by construction"),
            }
            det = det * &pivot;
            // Schur complement of the trailing block.
            for r in (step + 1)..n {
                let head = at(&m, r, step);
                if head.is_zero() {
                    continue;
                }
                let factor = head / &pivot;
                for c in (step + 1)..n {
                    let upd = at(&m, r, c) - &factor * at(&m, step, c);
                    m[r * n + c] = upd;
                }
            }
            // Mirror the eliminated column so the trailing block stays
            // symmetric for the next round of pivot searching.
            for r in (step + 1)..n {
                for c in (step + 1)..r {
                    let v = at(&m, r, c);
                    m[c * n + r] = v;
                }
                m[r * n + step] = Rational::zero();
                m[step * n + r] = Rational::zero();
            }
        }
        (inertia, det)
    }

    /// Exact solution of `self * x = rhs`.
    pub fn solve(&self, rhs: &[Rational]) -> Result<Vec<Rational>, ExactError> {
        assert_eq!(rhs.len(), self.n, "right-hand side has wrong length");
        let n = self.n;
        let mut a: Vec<Vec<Rational>> = self.rows();
        let mut b: Vec<Rational> = rhs.to_vec();
        for col in 0..n {
            let pivot_row = (col..n)
                .find(|&r| !a[r][col].is_zero())
                .ok_or(ExactError::SingularMatrix)?;
            a.swap(col, pivot_row);
            b.swap(col, pivot_row);
            let pivot = a[col][col].clone();
            for r in (col + 1)..n {
                if a[r][col].is_zero() {
                    continue;
                }
                let factor = &a[r][col] / &pivot;
                for c in col..n {
                    a[r][c] = &a[r][c] - &(&factor * &a[col][c]);
                }
                b[r] = &b[r] - &(&factor * &b[col]);
            }
        }
        let mut x = vec![Rational::zero(); n];
        for row in (0..n).rev() {
            let mut acc = b[row].clone();
            for c in (row + 1)..n {
                acc = acc - &a[row][c] * &x[c];
            }
            x[row] = acc / &a[row][row];
        }
        Ok(x)
    }

    /// `self * x` for a vector `x`.
    pub fn apply(&self, x: &[Rational]) -> Vec<Rational> {
        assert_eq!(x.len(), self.n);
        (0..self.n)
            .map(|i| {
                let mut acc = Rational::zero();
                for j in 0..self.n {
                    acc = acc + self.get(i, j) * &x[j];
                }
                acc
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> SymMatrix {
        SymMatrix::from_i64_rows(rows).unwrap()
    }

    #[test]
    fn rejects_asymmetric_input() {
        let err = SymMatrix::from_i64_rows(&[&[1, 2], &[3, 4]]).unwrap_err();
        assert_eq!(err, ExactError::NotSymmetric(1, 0));
    }

    #[test]
    fn inertia_sign_readoff() {
        assert_eq!(
            m(&[&[-4]]).inertia(),
            Inertia {
                n_minus: 1,
                n_zero: 0,
                n_plus: 0
            }
        );
        assert_eq!(
            m(&[&[0]]).inertia(),
            Inertia {
                n_minus: 0,
                n_zero: 1,
                n_plus: 0
            }
        );
    }

    #[test]
    fn inertia_of_a2_chain_matches_minor_signs() {
        // Leading principal minors -2, 3, -4 alternate strictly, so the
        // form is negative definite by the Jacobi criterion.
        let a = m(&[&[-2, 1, 0], &[1, -2, 1], &[0, 1, -2]]);
        assert_eq!(a.det(), Rational::integer(-4));
        assert_eq!(
            a.inertia(),
            Inertia {
                n_minus: 3,
                n_zero: 0,
                n_plus: 0
            }
        );
        // Independent minor oracle.
        let minors = [
            m(&[&[-2]]).det(),
            m(&[&[-2, 1], &[1, -2]]).det(),
            a.det(),
        ];
        assert_eq!(
            minors.map(|d| d.signum()),
            [-1, 1, -1],
            "minors must alternate for a negative definite form"
        );
    }

    #[test]
    fn inertia_with_zero_diagonal_hyperbolic_plane() {
        // [[0,1],[1,0]] has eigenvalues 1 and -1.
        let h = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(
            h.inertia(),
            Inertia {
                n_minus: 1,
                n_zero: 0,
                n_plus: 1
            }
        );
        assert_eq!(h.det(), Rational::integer(-1));
    }

    #[test]
    fn indefinite_and_degenerate_blocks() {
        let a = m(&[&[1, 2, 0], &[2, 4, 0], &[0, 0, -5]]);
        assert_eq!(
            a.inertia(),
            Inertia {
                n_minus: 1,
                n_zero: 1,
                n_plus: 1
            }
        );
        assert_eq!(a.det(), Rational::zero());
    }

    #[test]
    fn solve_exactly() {
        let a = m(&[&[-4]]);
        assert_eq!(
            a.solve(&[Rational::integer(2)]).unwrap(),
            vec![Rational::new(-1, 2)]
        );
        let b = m(&[&[-2, 1], &[1, -2]]);
        assert_eq!(
            b.solve(&[Rational::zero(), Rational::zero()]).unwrap(),
            vec![Rational::zero(), Rational::zero()]
        );
        assert_eq!(
            m(&[&[0]]).solve(&[Rational::one()]).unwrap_err(),
            ExactError::SingularMatrix
        );
    }

    #[test]
    fn solve_substitutes_back() {
        let a = m(&[&[-5, 1, 0], &[1, -2, 1], &[0, 1, -3]]);
        let rhs = vec![
            Rational::integer(3),
            Rational::integer(0),
            Rational::integer(1),
        ];
        let x = a.solve(&rhs).unwrap();
        assert_eq!(a.apply(&x), rhs);
    }
}
