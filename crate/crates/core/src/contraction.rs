//! Periodic and parabolic contractions as explicit bracket tables, plus the
//! centralizer identity relating `g^x` to coadjoint stabilizers in `g_(0)`.

use crate::arith::{kernel_fp, rank_fp, Fp};
use crate::chevalley::KillingPairing;
use crate::error::{Error, Result};
use crate::grading::GradedAlgebra;
use crate::table::{LieAlgebraTable, SparseVec};

/// Which degeneration of the bracket to build.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ContractionKind {
    ThetaZero,
    ThetaInfinity,
    /// Parabolic contraction for the Z-grading with the given labels `p_1..p_l`.
    Parabolic(Vec<i64>),
}

fn filtered(g: &GradedAlgebra, keep: impl Fn(usize, usize) -> bool) -> LieAlgebraTable {
    let mut out = LieAlgebraTable::abelian(g.table.labels.clone());
    for (i, j) in g.table.nonzero_pairs() {
        if keep(g.degree[i], g.degree[j]) {
            out.set(i, j, g.table.get(i, j).to_vec());
        }
    }
    out
}

/// `[g_i, g_j]_(0)` is the old bracket when `i + j ≤ m − 1` and zero otherwise.
pub fn contract_zero(g: &GradedAlgebra) -> LieAlgebraTable {
    filtered(g, |a, b| a + b < g.m)
}

/// The complementary bracket `[ , ] − [ , ]_(0)`.
pub fn contract_infinity(g: &GradedAlgebra) -> LieAlgebraTable {
    filtered(g, |a, b| a + b >= g.m)
}

pub fn contract(g: &GradedAlgebra, kind: &ContractionKind) -> Result<LieAlgebraTable> {
    match kind {
        ContractionKind::ThetaZero => Ok(contract_zero(g)),
        ContractionKind::ThetaInfinity => Ok(contract_infinity(g)),
        ContractionKind::Parabolic(labels) => {
            if g.weight.iter().any(|w| w.len() != labels.len()) {
                return Err(Error::Mismatch("parabolic labels need root coordinates of the same rank".into()));
            }
            let z: Vec<i64> = g.weight.iter().map(|w| w.iter().zip(labels).map(|(a, b)| a * b).sum()).collect();
            Ok(parabolic_contraction_with_zdeg(&g.table, &z))
        }
    }
}

/// `p ⋉ (n^−)^{ab}` for the Z-grading given on every basis vector: brackets
/// inside `p = g(≥0)` are kept, brackets inside `n^− = g(<0)` vanish, and
/// a mixed bracket is projected to `n^−`.
pub fn parabolic_contraction_with_zdeg(table: &LieAlgebraTable, z: &[i64]) -> LieAlgebraTable {
    let mut out = LieAlgebraTable::abelian(table.labels.clone());
    for (i, j) in table.nonzero_pairs() {
        let (a, b) = (z[i], z[j]);
        let keep = if a >= 0 && b >= 0 {
            true
        } else if a < 0 && b < 0 {
            false
        } else {
            a + b < 0
        };
        if keep {
            out.set(i, j, table.get(i, j).to_vec());
        }
    }
    out
}

/// Parabolic contraction of a Chevalley table for labels `p_1..p_l`;
/// `weight` holds the root coordinates of the basis vectors.
pub fn parabolic_contraction(table: &LieAlgebraTable, weight: &[Vec<i64>], labels: &[i64]) -> LieAlgebraTable {
    let z: Vec<i64> = weight.iter().map(|w| w.iter().zip(labels).map(|(a, b)| a * b).sum()).collect();
    parabolic_contraction_with_zdeg(table, &z)
}

/// Entrywise equality of structure constants on a shared basis.
pub fn same_bracket(a: &LieAlgebraTable, b: &LieAlgebraTable) -> Result<bool> {
    if a.labels != b.labels {
        return Err(Error::BasisMismatch);
    }
    Ok(a == b)
}

/// First basis vector whose `ad` is not nilpotent of order `≤ bound`.
pub fn nilpotency_failure(table: &LieAlgebraTable, bound: usize) -> Option<usize> {
    let n = table.dim();
    (0..n).find(|&x| {
        let mut unit = vec![Fp::ZERO; n];
        unit[x] = Fp::ONE;
        let ad = table.ad_fp(&unit);
        let mut cur = ad.clone();
        for _ in 1..bound {
            cur = matmul_fp(&ad, &cur);
        }
        cur.iter().any(|r| r.iter().any(|c| !c.is_zero()))
    })
}

pub(crate) fn matmul_fp(a: &[Vec<Fp>], b: &[Vec<Fp>]) -> Vec<Vec<Fp>> {
    let n = a.len();
    let k = b.len();
    let w = if k == 0 { 0 } else { b[0].len() };
    let mut out = vec![vec![Fp::ZERO; w]; n];
    for i in 0..n {
        for l in 0..k {
            let c = a[i][l];
            if c.is_zero() {
                continue;
            }
            for j in 0..w {
                out[i][j] += c * b[l][j];
            }
        }
    }
    out
}

/// Killing form over `F_p`.
pub fn killing_fp(k: &KillingPairing) -> Vec<Vec<Fp>> {
    k.matrix.iter().map(|r| r.iter().map(|c| c.to_fp()).collect()).collect()
}

/// Checks that `g^x` and the stabilizer of `ξ_x = κ(x, ·)` in `g_(0)`
/// coincide as subspaces, and that the `θ`-contraction of `g^x` carries the
/// bracket of `g_(0)` restricted to it. All arithmetic is over `F_p`.
pub fn verify_centralizer_contraction(g: &GradedAlgebra, kappa: &[Vec<Fp>], x: &[Fp]) -> bool {
    let n = g.dim();
    let m = g.m;
    let ad = g.table.ad_fp(x);
    // Homogeneous basis of g^x, piece by piece.
    let mut basis: Vec<(Vec<Fp>, usize)> = Vec::new();
    for (deg, piece) in g.pieces.iter().enumerate() {
        let rows: Vec<Vec<Fp>> = (0..n).map(|r| piece.iter().map(|&c| ad[r][c]).collect()).collect();
        for v in kernel_fp(rows, piece.len()) {
            let mut full = vec![Fp::ZERO; n];
            for (k, &c) in piece.iter().enumerate() {
                full[c] = v[k];
            }
            basis.push((full, deg));
        }
    }
    // Stabilizer of ξ_x in g_(0): y with ξ_x([y, z]_(0)) = 0 for all z.
    let g0 = contract_zero(g);
    let xi: Vec<Fp> = (0..n).map(|j| (0..n).fold(Fp::ZERO, |s, i| s + x[i] * kappa[i][j])).collect();
    let mut pencil = vec![vec![Fp::ZERO; n]; n];
    for (i, j) in g0.nonzero_pairs() {
        let v = g0.get(i, j).iter().fold(Fp::ZERO, |s, &(k, c)| s + xi[k] * c.to_fp());
        pencil[i][j] = v;
        pencil[j][i] = -v;
    }
    let stab_dim = n - rank_fp(pencil.clone());
    if stab_dim != basis.len() {
        return false;
    }
    for (v, _) in &basis {
        for row in &pencil {
            let s = row.iter().zip(v).fold(Fp::ZERO, |s, (&a, &b)| s + a * b);
            if !s.is_zero() {
                return false;
            }
        }
    }
    // Brackets: the induced contraction of g^x versus the g_(0) bracket.
    let span_rows: Vec<Vec<Fp>> = basis.iter().map(|(v, _)| v.clone()).collect();
    let span_rank = rank_fp(span_rows.clone());
    for a in 0..basis.len() {
        for b in a + 1..basis.len() {
            let (u, du) = &basis[a];
            let (v, dv) = &basis[b];
            let full = g.table.bracket_fp(u, v);
            let induced = if du + dv < m { full } else { vec![Fp::ZERO; n] };
            let contracted = g0.bracket_fp(u, v);
            if induced != contracted {
                return false;
            }
            let mut ext = span_rows.clone();
            ext.push(contracted);
            if rank_fp(ext) != span_rank {
                return false;
            }
        }
    }
    true
}

/// Converts a sparse vector to a dense `F_p` vector.
pub fn sparse_to_fp(v: &SparseVec, n: usize) -> Vec<Fp> {
    let mut out = vec![Fp::ZERO; n];
    for &(i, c) in v {
        out[i] = c.to_fp();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rng_for, Eis};
    use crate::chevalley::{chevalley, killing};
    use crate::grading::grading_of;
    use crate::kac::{collapse, KacDiagram};

    fn kd(s: &str) -> KacDiagram {
        s.parse().unwrap()
    }

    #[test]
    fn order_one_keeps_everything() {
        let g = grading_of(&kd("B2[1,0,0]")).unwrap();
        assert_eq!(contract_zero(&g), g.table);
        assert!(contract_infinity(&g).is_abelian());
    }

    #[test]
    fn involution_gives_semidirect_product() {
        let g = grading_of(&kd("C3[1,0,0,1]")).unwrap();
        let c = contract_zero(&g);
        for &i in &g.pieces[1] {
            for &j in &g.pieces[1] {
                assert!(c.get(i, j).is_empty());
            }
        }
        assert!(c.satisfies_jacobi());
    }

    #[test]
    fn sl2_infinity() {
        let g = grading_of(&kd("A1[1,1]")).unwrap();
        let c = contract_infinity(&g);
        assert_eq!(c.get(0, 2), &[(1, Eis::ONE)]);
        assert!(c.get(1, 0).is_empty());
        assert_eq!(nilpotency_failure(&c, 2), None);
    }

    #[test]
    fn contractions_sum_to_original() {
        let g = grading_of(&kd("G2[0,1,1]")).unwrap();
        let (z, i) = (contract_zero(&g), contract_infinity(&g));
        for a in 0..g.dim() {
            for b in 0..g.dim() {
                let mut s = z.get(a, b).to_vec();
                crate::table::axpy_sparse(&mut s, Eis::ONE, i.get(a, b));
                assert_eq!(s, g.table.get(a, b));
            }
        }
        assert!(z.satisfies_jacobi() && i.satisfies_jacobi());
        assert_eq!(nilpotency_failure(&i, g.m + 1), None);
    }

    #[test]
    fn sl2_parabolic() {
        let ch = chevalley("A1".parse().unwrap());
        let p = parabolic_contraction(&ch.table, &ch.weight, &[1]);
        assert!(p.get(0, 2).is_empty());
        assert_eq!(p.get(1, 0), &[(0, Eis::int(2))]);
        assert_eq!(p.get(1, 2), &[(2, Eis::int(-2))]);
        assert_eq!(same_bracket(&parabolic_contraction(&ch.table, &ch.weight, &[0]), &ch.table), Ok(true));
    }

    #[test]
    fn borel_example() {
        let g = grading_of(&kd("A2[1,1,1]")).unwrap();
        let ch = chevalley("A2".parse().unwrap());
        let p = parabolic_contraction(&ch.table, &ch.weight, &[1, 1]);
        assert_eq!(same_bracket(&contract_zero(&g), &p), Ok(true));
    }

    #[test]
    fn collapse_preserves_contraction() {
        let d = kd("C3[0,2,1,0]");
        let a = contract_zero(&grading_of(&d).unwrap());
        let b = contract_zero(&grading_of(&collapse(&d)).unwrap());
        assert_eq!(same_bracket(&a, &b), Ok(true));
    }

    #[test]
    fn basis_mismatch_is_an_error() {
        let a = chevalley("A1".parse().unwrap());
        let b = chevalley("A2".parse().unwrap());
        assert_eq!(same_bracket(&a.table, &b.table), Err(Error::BasisMismatch));
    }

    #[test]
    fn centralizer_identity() {
        for s in ["A1[1,1]", "A2[1,1,1]", "G2[0,1,1]", "C3[1,0,1,0]", "D4^3[1,0,1]"] {
            let g = grading_of(&kd(s)).unwrap();
            let kappa = killing_fp(&killing(&g.table).unwrap());
            let n = g.dim();
            assert!(verify_centralizer_contraction(&g, &kappa, &vec![Fp::ZERO; n]));
            let mut rng = rng_for(7, s);
            let mut x = vec![Fp::ZERO; n];
            let piece = if g.m > 1 { 1 } else { 0 };
            for &i in &g.pieces[piece] {
                x[i] = Fp::random(&mut rng);
            }
            assert!(verify_centralizer_contraction(&g, &kappa, &x), "{s}");
        }
    }
}
