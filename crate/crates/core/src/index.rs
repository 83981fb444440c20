//! Index of a bracket table by modular coadjoint rank, generic orbit data for
//! `G_0` acting on `g_1`, and exact tests on single elements.

use crate::arith::{rank_fp, rank_qw, rng_for, Eis, Fp, Qw};
use crate::contraction::matmul_fp;
use crate::error::{Error, Result};
use crate::grading::GradedAlgebra;
use crate::kac::{collapse, KacDiagram};
use crate::rootsystem::Family;
use crate::table::LieAlgebraTable;
use rand::Rng;
use serde::Serialize;

/// Outcome of a modular index computation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndexReport {
    pub dimension: usize,
    pub computed_index: usize,
    pub trials: usize,
    pub seed: u64,
    pub lower_bound: Option<usize>,
    /// True iff the computed value meets the supplied lower bound.
    pub certified: bool,
}

/// Rank of `B(ξ)_{ij} = ξ([x_i, x_j])` over `F_p`.
pub fn coadjoint_rank(table: &LieAlgebraTable, xi: &[Fp]) -> usize {
    let n = table.dim();
    let mut b = vec![vec![Fp::ZERO; n]; n];
    for (i, j) in table.nonzero_pairs() {
        let v = table.get(i, j).iter().fold(Fp::ZERO, |s, &(k, c)| s + xi[k] * c.to_fp());
        b[i][j] = v;
        b[j][i] = -v;
    }
    let r = rank_fp(b);
    assert_eq!(r % 2, 0, "an alternating form has even rank");
    r
}

/// `dim − max rank B(ξ)` over random `ξ ∈ F_p^n`. A modular rank never
/// exceeds the generic rank, so the result is an upper bound for the index;
/// it is certified when it meets `lower_bound`.
pub fn index_of(table: &LieAlgebraTable, trials: usize, seed: u64, lower_bound: Option<usize>) -> Result<IndexReport> {
    index_of_stream(table, trials, seed, "index", lower_bound)
}

/// As [`index_of`], drawing from the random stream named `stream`.
pub fn index_of_stream(
    table: &LieAlgebraTable,
    trials: usize,
    seed: u64,
    stream: &str,
    lower_bound: Option<usize>,
) -> Result<IndexReport> {
    if trials == 0 {
        return Err(Error::ZeroTrials);
    }
    let n = table.dim();
    let mut rng = rng_for(seed, stream);
    let mut best = 0;
    for _ in 0..trials {
        let xi: Vec<Fp> = (0..n).map(|_| Fp::random(&mut rng)).collect();
        best = best.max(coadjoint_rank(table, &xi));
    }
    let computed_index = n - best;
    Ok(IndexReport {
        dimension: n,
        computed_index,
        trials,
        seed,
        lower_bound,
        certified: lower_bound == Some(computed_index),
    })
}

/// The theorem, if any, that gives `ind g_(0) = rk g` for this diagram.
/// Diagrams whose collapse is covered are covered as well, since collapsing
/// labels does not change `g_(0)`.
pub fn index_theorem(d: &KacDiagram) -> Option<&'static str> {
    direct_theorem(d).or_else(|| direct_theorem(&collapse(d)).map(|_| "collapse of a covered diagram"))
}

fn direct_theorem(d: &KacDiagram) -> Option<&'static str> {
    let m = d.order();
    let t = d.base();
    if m == 1 {
        return Some("trivial grading");
    }
    if m == 2 {
        return Some("Z2-contraction");
    }
    if m == 3 {
        return Some("order three");
    }
    match (t.family, d.twist()) {
        (Family::A, 1) => return Some("sl inner"),
        (Family::B, _) | (Family::D, 1) | (Family::D, 2) => return Some("so_N"),
        (Family::A, 2) if t.rank == 3 => return Some("so_N"), // so_6
        (Family::C, _) if m % 2 == 1 => return Some("sp odd order"),
        (Family::G, _) => return Some("G2"),
        _ => {}
    }
    if d.is_inner() && (0..d.labels.len()).any(|i| d.diagram.marks[i] == 1 && d.labels[i] > 0) {
        return Some("parabolic contraction");
    }
    None
}

/// Generic stabilizer dimension of `G_0` on `g_1` and `dim g_1 − max orbit dim`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitData {
    pub stabilizer_dim: usize,
    pub quotient_dim: usize,
}

pub fn generic_orbit_data(g: &GradedAlgebra, trials: usize, seed: u64) -> Result<OrbitData> {
    if trials == 0 {
        return Err(Error::ZeroTrials);
    }
    let g0 = &g.pieces[0];
    if g.m == 1 {
        return Ok(OrbitData { stabilizer_dim: g0.len(), quotient_dim: 0 });
    }
    let g1 = &g.pieces[1];
    let n = g.dim();
    let mut rng = rng_for(seed, "orbit");
    let mut best = 0;
    for _ in 0..trials {
        let mut x = vec![Fp::ZERO; n];
        for &i in g1 {
            x[i] = Fp::random(&mut rng);
        }
        let ad = g.table.ad_fp(&x);
        let rows: Vec<Vec<Fp>> = g1.iter().map(|&r| g0.iter().map(|&c| ad[r][c]).collect()).collect();
        best = best.max(rank_fp(rows));
    }
    Ok(OrbitData { stabilizer_dim: g0.len() - best, quotient_dim: g1.len() - best })
}

fn ad_qw(table: &LieAlgebraTable, x: &[Eis]) -> Vec<Vec<Qw>> {
    let n = table.dim();
    let mut m = vec![vec![Qw::zero(); n]; n];
    for (i, &a) in x.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for k in 0..n {
            for &(l, c) in table.get(i, k) {
                m[l][k] = m[l][k].add(&(a * c).to_qw());
            }
        }
    }
    m
}

fn matmul_q(a: &[Vec<Qw>], b: &[Vec<Qw>]) -> Vec<Vec<Qw>> {
    crate::arith::matmul_qw(a, b)
}

/// Exact test of `(ad x)^{dim} = 0`. A nonzero power modulo `p` already
/// proves non-nilpotency; otherwise exact powers are taken until one vanishes.
pub fn is_nilpotent(table: &LieAlgebraTable, x: &[Eis]) -> bool {
    let n = table.dim();
    let xf: Vec<Fp> = x.iter().map(|c| c.to_fp()).collect();
    let adf = table.ad_fp(&xf);
    let mut pf = adf.clone();
    for _ in 1..n.max(1) {
        pf = matmul_fp(&adf, &pf);
        if pf.iter().all(|r| r.iter().all(|c| c.is_zero())) {
            break;
        }
    }
    if pf.iter().any(|r| r.iter().any(|c| !c.is_zero())) {
        return false;
    }
    let ad = ad_qw(table, x);
    let mut p = ad.clone();
    for _ in 0..=n {
        if p.iter().all(|r| r.iter().all(|c| c.is_zero())) {
            return true;
        }
        p = matmul_q(&ad, &p);
    }
    false
}

/// `dim ker(ad x) = l`, computed exactly.
pub fn is_regular(table: &LieAlgebraTable, x: &[Eis], l: usize) -> bool {
    table.dim() - rank_qw(ad_qw(table, x)) == l
}

/// Modular witness that `g_1` contains a regular element: a random `x ∈ g_1`
/// with `dim ker(ad x) = l` over `F_p` (a modular kernel is never smaller than
/// the true one, and `l` is the minimum).
pub fn g1_has_regular_element(g: &GradedAlgebra, l: usize, trials: usize, seed: u64) -> bool {
    if g.m == 1 {
        return true;
    }
    let n = g.dim();
    let mut rng = rng_for(seed, "regular");
    (0..trials).any(|_| {
        let mut x = vec![Fp::ZERO; n];
        for &i in &g.pieces[1] {
            x[i] = Fp::random(&mut rng);
        }
        n - rank_fp(g.table.ad_fp(&x)) == l
    })
}

/// Whether a random element of `g_1` is semisimple. For a homogeneous `x`,
/// `ad x` maps `g_i → g_{i+1}`, so `rank(ad x)` and `rank((ad x)^2)` are sums
/// of block ranks; `ad x` is semisimple iff the two agree. Each trial uses
/// exact rational arithmetic on small nonzero integer coordinates; an odd number of
/// trials is taken and the majority decides.
pub fn generic_semisimple(g: &GradedAlgebra, trials: usize, seed: u64) -> Result<bool> {
    if trials == 0 {
        return Err(Error::ZeroTrials);
    }
    let m = g.m;
    let target = if m == 1 { 0 } else { 1 };
    let mut rng = rng_for(seed, "semisimple");
    let block = |ad: &[Vec<Qw>], from: usize| -> Vec<Vec<Qw>> {
        let to = (from + target) % m;
        g.pieces[to].iter().map(|&r| g.pieces[from].iter().map(|&c| ad[r][c].clone()).collect()).collect()
    };
    let mut yes = 0;
    for _ in 0..trials {
        let mut x = vec![Eis::ZERO; g.dim()];
        for &i in &g.pieces[target] {
            let v: i64 = rng.gen_range(1..=5);
            x[i] = Eis::int(if rng.gen::<bool>() { v } else { -v });
        }
        let ad = ad_qw(&g.table, &x);
        let blocks: Vec<Vec<Vec<Qw>>> = (0..m).map(|i| block(&ad, i)).collect();
        let r1: usize = blocks.iter().map(|b| rank_qw(b.clone())).sum();
        let r2: usize = (0..m)
            .map(|i| {
                let next = (i + target) % m;
                if blocks[i].is_empty() || blocks[next].is_empty() {
                    0
                } else {
                    rank_qw(matmul_q(&blocks[next], &blocks[i]))
                }
            })
            .sum();
        if r1 == r2 {
            yes += 1;
        }
    }
    if 2 * yes == trials {
        return Err(Error::Inconclusive(trials));
    }
    Ok(2 * yes > trials)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chevalley::chevalley;
    use crate::contraction::contract_zero;
    use crate::grading::grading_of;

    fn kd(s: &str) -> KacDiagram {
        s.parse().unwrap()
    }

    #[test]
    fn index_of_small_algebras() {
        let ab = LieAlgebraTable::abelian(vec!["a".into(), "b".into(), "c".into()]);
        assert_eq!(index_of(&ab, 3, 1, None).unwrap().computed_index, 3);
        let sl2 = chevalley("A1".parse().unwrap());
        let r = index_of(&sl2.table, 5, 1, Some(1)).unwrap();
        assert_eq!(r.computed_index, 1);
        assert!(r.certified);
        assert_eq!(index_of(&sl2.table, 0, 1, None), Err(Error::ZeroTrials));
    }

    #[test]
    fn simple_algebras_have_index_rank() {
        for t in ["B3", "G2", "F4", "D5"] {
            let ch = chevalley(t.parse().unwrap());
            let l = ch.rs.rank();
            assert!(index_of(&ch.table, 3, 9, Some(l)).unwrap().certified, "{t}");
        }
    }

    #[test]
    fn g2_order_five() {
        let d = kd("G2[0,1,1]");
        let r = index_of(&contract_zero(&grading_of(&d).unwrap()), 5, 3, Some(2)).unwrap();
        assert!(r.certified);
        assert!(index_theorem(&d).is_some());
    }

    #[test]
    fn f4_is_not_covered() {
        assert_eq!(index_theorem(&kd("F4[0,0,1,0,0]")), None);
        assert!(index_theorem(&kd("F4[1,0,1,0,0]")).is_some());
    }

    #[test]
    fn orbit_data() {
        let g = grading_of(&kd("A2[1,1,1]")).unwrap();
        assert_eq!(generic_orbit_data(&g, 3, 1).unwrap().quotient_dim, 1);
        let id = grading_of(&kd("A2[1,0,0]")).unwrap();
        assert_eq!(generic_orbit_data(&id, 3, 1).unwrap(), OrbitData { stabilizer_dim: 8, quotient_dim: 0 });
    }

    #[test]
    fn nilpotent_and_regular() {
        let a1 = chevalley("A1".parse().unwrap());
        let z = vec![Eis::ZERO; 3];
        assert!(is_nilpotent(&a1.table, &z));
        assert!(!is_regular(&a1.table, &z, 1));
        let e = vec![Eis::ONE, Eis::ZERO, Eis::ZERO];
        assert!(is_nilpotent(&a1.table, &e) && is_regular(&a1.table, &e, 1));
        let h = vec![Eis::ZERO, Eis::ONE, Eis::ZERO];
        assert!(!is_nilpotent(&a1.table, &h));
        let a2 = chevalley("A2".parse().unwrap());
        let mut x = vec![Eis::ZERO; 8];
        x[0] = Eis::ONE;
        x[1] = Eis::ONE;
        assert!(is_nilpotent(&a2.table, &x) && is_regular(&a2.table, &x, 2));
    }

    #[test]
    fn stability_examples() {
        assert!(generic_semisimple(&grading_of(&kd("C3[1,0,0,1]")).unwrap(), 3, 1).unwrap());
        assert!(!generic_semisimple(&grading_of(&kd("G2[0,1,1]")).unwrap(), 3, 1).unwrap());
        assert!(!generic_semisimple(&grading_of(&kd("F4[0,0,1,0,0]")).unwrap(), 3, 1).unwrap());
        assert!(generic_semisimple(&grading_of(&kd("A2[1,1,1]")).unwrap(), 3, 1).unwrap());
    }

    #[test]
    fn regular_element_witness() {
        let g = grading_of(&kd("G2[0,1,1]")).unwrap();
        assert!(g1_has_regular_element(&g, 2, 3, 1));
        let f = grading_of(&kd("F4[0,0,1,0,0]")).unwrap();
        assert!(!g1_has_regular_element(&f, 4, 3, 1));
    }
}
