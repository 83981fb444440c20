//! The `Z_m`-grading attached to a Kac diagram, on the Chevalley basis
//! (inner case) or on the σ-eigenbasis (outer case).

use crate::chevalley::{chevalley, sigma_adapted, Chevalley, SigmaAdapted};
use crate::error::{Error, Result};
use crate::kac::KacDiagram;
use crate::table::LieAlgebraTable;

/// A bracket table with a residue mod `m` on every basis vector.
#[derive(Clone, Debug)]
pub struct GradedAlgebra {
    pub table: LieAlgebraTable,
    pub m: usize,
    pub degree: Vec<usize>,
    /// Inner case only: the integer degree `d(γ) = Σ [γ:α_i] p_i`.
    pub zdegree: Option<Vec<i64>>,
    /// Root coordinates (inner) or `t^σ`-weights (outer) of each basis vector.
    pub weight: Vec<Vec<i64>>,
    pub pieces: Vec<Vec<usize>>,
}

impl GradedAlgebra {
    pub fn new(table: LieAlgebraTable, m: usize, degree: Vec<usize>) -> GradedAlgebra {
        let weight = vec![Vec::new(); table.dim()];
        Self::assemble(table, m, degree, None, weight)
    }

    fn assemble(
        table: LieAlgebraTable,
        m: usize,
        degree: Vec<usize>,
        zdegree: Option<Vec<i64>>,
        weight: Vec<Vec<i64>>,
    ) -> GradedAlgebra {
        let mut pieces = vec![Vec::new(); m];
        for (i, &d) in degree.iter().enumerate() {
            pieces[d].push(i);
        }
        GradedAlgebra { table, m, degree, zdegree, weight, pieces }
    }

    pub fn dim(&self) -> usize {
        self.table.dim()
    }

    /// First basis pair whose bracket breaks additivity of the degree.
    pub fn additivity_failure(&self) -> Option<(usize, usize)> {
        self.table.nonzero_pairs().find(|&(i, j)| {
            self.table.get(i, j).iter().any(|&(k, _)| self.degree[k] != (self.degree[i] + self.degree[j]) % self.m)
        })
    }
}

fn root_degree(labels: &[i64], gamma: &[i64]) -> i64 {
    gamma.iter().zip(&labels[1..]).map(|(g, p)| g * p).sum()
}

fn inner_degrees(ch: &Chevalley, d: &KacDiagram) -> (Vec<usize>, Vec<i64>) {
    let m = d.order();
    let z: Vec<i64> = ch.weight.iter().map(|w| root_degree(&d.labels, w)).collect();
    (z.iter().map(|v| v.rem_euclid(m) as usize).collect(), z)
}

fn outer_degrees(sa: &SigmaAdapted, d: &KacDiagram) -> Vec<usize> {
    let m = d.order();
    let t = d.twist() as i64;
    sa.eigen
        .iter()
        .zip(&sa.weight)
        .map(|(&k, w)| (k as i64 * m / t + root_degree(&d.labels, w)).rem_euclid(m) as usize)
        .collect()
}

fn check_type(expected: &KacDiagram, base: crate::rootsystem::SimpleType, twist: usize) -> Result<()> {
    if expected.base() != base || expected.twist() != twist {
        return Err(Error::Mismatch(format!("diagram {expected} on algebra of type {base} with twist {twist}")));
    }
    Ok(())
}

/// `g_j = ⊕_k g(j + km)` for an inner diagram.
pub fn inner_grading(ch: &Chevalley, d: &KacDiagram) -> Result<GradedAlgebra> {
    check_type(d, ch.rs.ty, 1)?;
    let (deg, z) = inner_degrees(ch, d);
    Ok(GradedAlgebra::assemble(ch.table.clone(), d.order() as usize, deg, Some(z), ch.weight.clone()))
}

/// The grading of an outer diagram on the σ-eigenbasis: an eigenvector of
/// eigen-index `k` and `t^σ`-weight `c` has degree `k·m/t + Σ c_i p_i`.
pub fn outer_grading(sa: &SigmaAdapted, d: &KacDiagram) -> Result<GradedAlgebra> {
    check_type(d, sa.diagram.base, sa.twist())?;
    let deg = outer_degrees(sa, d);
    Ok(GradedAlgebra::assemble(sa.table.clone(), d.order() as usize, deg, None, sa.weight.clone()))
}

/// The grading of any diagram, using the cached tables.
pub fn grading_of(d: &KacDiagram) -> Result<GradedAlgebra> {
    if d.is_inner() {
        inner_grading(&chevalley(d.base()), d)
    } else {
        let sa = sigma_adapted(d.base(), d.twist())?;
        outer_grading(&sa, d)
    }
}

/// Degrees of the basis vectors without copying the table.
pub fn degrees_of(d: &KacDiagram) -> Vec<usize> {
    if d.is_inner() {
        inner_degrees(&chevalley(d.base()), d).0
    } else {
        let sa = sigma_adapted(d.base(), d.twist()).expect("diagram twist is supported");
        outer_degrees(&sa, d)
    }
}

/// `(dim g_0, …, dim g_{m−1})` of a diagram.
pub fn dims_of(d: &KacDiagram) -> Vec<usize> {
    let mut dims = vec![0; d.order() as usize];
    for k in degrees_of(d) {
        dims[k] += 1;
    }
    dims
}

pub fn dimension_vector(g: &GradedAlgebra) -> Vec<usize> {
    g.pieces.iter().map(|p| p.len()).collect()
}
