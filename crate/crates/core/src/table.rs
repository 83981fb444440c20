//! Sparse bracket tables over the Eisenstein integers.

use crate::arith::{Eis, Fp};

/// A sparse vector: sorted `(basis index, coefficient)` pairs without zeros.
pub type SparseVec = Vec<(usize, Eis)>;

/// Adds `c · v` into a sparse vector, keeping it sorted and zero-free.
pub fn axpy_sparse(acc: &mut SparseVec, c: Eis, v: &[(usize, Eis)]) {
    if c.is_zero() || v.is_empty() {
        return;
    }
    let mut out = Vec::with_capacity(acc.len() + v.len());
    let (mut i, mut j) = (0, 0);
    while i < acc.len() || j < v.len() {
        if j == v.len() || (i < acc.len() && acc[i].0 < v[j].0) {
            out.push(acc[i]);
            i += 1;
        } else if i == acc.len() || v[j].0 < acc[i].0 {
            out.push((v[j].0, c * v[j].1));
            j += 1;
        } else {
            let s = acc[i].1 + c * v[j].1;
            if !s.is_zero() {
                out.push((acc[i].0, s));
            }
            i += 1;
            j += 1;
        }
    }
    *acc = out;
}

/// A finite-dimensional Lie algebra given by a basis and structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebraTable {
    pub labels: Vec<String>,
    br: Vec<SparseVec>,
}

impl LieAlgebraTable {
    /// The abelian algebra on the given labels.
    pub fn abelian(labels: Vec<String>) -> LieAlgebraTable {
        let n = labels.len();
        LieAlgebraTable { labels, br: vec![Vec::new(); n * n] }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    /// `[x_i, x_j]` as a sparse vector.
    pub fn get(&self, i: usize, j: usize) -> &[(usize, Eis)] {
        &self.br[i * self.dim() + j]
    }

    /// Sets `[x_i, x_j] = v` and `[x_j, x_i] = −v`.
    pub fn set(&mut self, i: usize, j: usize, mut v: SparseVec) {
        v.retain(|(_, c)| !c.is_zero());
        v.sort_by_key(|e| e.0);
        let n = self.dim();
        if i == j {
            assert!(v.is_empty(), "[x,x] must vanish");
            return;
        }
        let neg: SparseVec = v.iter().map(|&(k, c)| (k, -c)).collect();
        self.br[i * n + j] = v;
        self.br[j * n + i] = neg;
    }

    /// Copies one structure constant entry from another table.
    pub fn set_raw(&mut self, i: usize, j: usize, v: SparseVec) {
        let n = self.dim();
        self.br[i * n + j] = v;
    }

    /// Pairs `i < j` with a nonzero bracket.
    pub fn nonzero_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.dim();
        (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j))).filter(move |&(i, j)| !self.get(i, j).is_empty())
    }

    pub fn is_abelian(&self) -> bool {
        self.br.iter().all(|v| v.is_empty())
    }

    pub fn is_antisymmetric(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            self.get(i, i).is_empty()
                && (0..n).all(|j| {
                    let a = self.get(i, j);
                    let b = self.get(j, i);
                    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x.0 == y.0 && x.1 == -y.1)
                })
        })
    }

    /// Bracket of two sparse elements.
    pub fn bracket_sparse(&self, x: &[(usize, Eis)], y: &[(usize, Eis)]) -> SparseVec {
        let mut acc = SparseVec::new();
        for &(i, a) in x {
            for &(j, b) in y {
                axpy_sparse(&mut acc, a * b, self.get(i, j));
            }
        }
        acc
    }

    /// Bracket of two dense elements.
    pub fn bracket_dense(&self, x: &[Eis], y: &[Eis]) -> Vec<Eis> {
        let n = self.dim();
        let mut out = vec![Eis::ZERO; n];
        for (i, &a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for &(k, c) in self.get(i, j) {
                    out[k] += ab * c;
                }
            }
        }
        out
    }

    /// Bracket of two dense elements over `F_p`.
    pub fn bracket_fp(&self, x: &[Fp], y: &[Fp]) -> Vec<Fp> {
        let n = self.dim();
        let mut out = vec![Fp::ZERO; n];
        for (i, &a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for &(k, c) in self.get(i, j) {
                    out[k] += ab * c.to_fp();
                }
            }
        }
        out
    }

    /// Matrix of `ad x` over `F_p`: column `k` holds `[x, x_k]`.
    pub fn ad_fp(&self, x: &[Fp]) -> Vec<Vec<Fp>> {
        let n = self.dim();
        let mut m = vec![vec![Fp::ZERO; n]; n];
        for (i, &a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for k in 0..n {
                for &(l, c) in self.get(i, k) {
                    m[l][k] += a * c.to_fp();
                }
            }
        }
        m
    }

    /// Checks the Jacobi identity on every basis triple; returns the first
    /// failing triple.
    pub fn jacobi_failure(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim();
        let mut scratch = vec![Eis::ZERO; n];
        let mut touched: Vec<usize> = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let terms = [(self.get(i, j), k), (self.get(j, k), i), (self.get(k, i), j)];
                    if terms.iter().all(|(v, _)| v.is_empty()) {
                        continue;
                    }
                    for (v, z) in terms {
                        for &(l, c) in v {
                            for &(q, d) in self.get(l, z) {
                                if scratch[q].is_zero() {
                                    touched.push(q);
                                }
                                scratch[q] += c * d;
                            }
                        }
                    }
                    let bad = touched.iter().any(|&q| !scratch[q].is_zero());
                    for &q in &touched {
                        scratch[q] = Eis::ZERO;
                    }
                    touched.clear();
                    if bad {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    pub fn satisfies_jacobi(&self) -> bool {
        self.jacobi_failure().is_none()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sparse_axpy_cancels() {
        let mut a: SparseVec = vec![(0, Eis::int(1)), (2, Eis::int(3))];
        axpy_sparse(&mut a, Eis::int(-1), &[(0, Eis::int(1)), (1, Eis::int(5))]);
        assert_eq!(a, vec![(1, Eis::int(-5)), (2, Eis::int(3))]);
    }

    #[test]
    fn abelian_is_lie() {
        let t = LieAlgebraTable::abelian(vec!["a".into(), "b".into()]);
        assert!(t.is_abelian() && t.satisfies_jacobi() && t.is_antisymmetric());
    }
}
