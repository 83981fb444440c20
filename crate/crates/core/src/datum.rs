//! The datum `(m, k⃗)` of a periodic automorphism and the arithmetic built on
//! it: `D_θ`, the bound `𝔜`, `b(g, θ)`, N-regular dimension vectors, bullet
//! degrees, label-shape checks, and friendly pairs.

use crate::error::{Error, Result};
use crate::grading::dims_of;
use crate::kac::{enumerate, equivalent, n_regular_inner, KacDiagram};
use crate::rootsystem::{root_system, Family, SimpleType};
use num_rational::Ratio;
use serde::Serialize;

/// `(m, twist, exponents, residues, k⃗)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Datum {
    pub ty: String,
    pub rank: usize,
    pub dim: usize,
    pub m: i64,
    pub twist: usize,
    pub exponents: Vec<i64>,
    /// `ε_j = ζ^{r_j}` is the eigenvalue of `θ` on the generator of degree `m_j + 1`.
    pub residues: Vec<i64>,
    pub k: Vec<usize>,
}

/// Residues `r_j` for the outer component of order `twist`, as multiples of `m / twist`.
fn residue_steps(t: SimpleType, twist: usize, exponents: &[i64]) -> Result<Vec<i64>> {
    let unsupported = || Error::UnsupportedTwist(format!("{t}^{twist}"));
    match (t.family, twist) {
        (_, 1) => Ok(vec![0; exponents.len()]),
        (Family::A, 2) if t.rank >= 2 => Ok(exponents.iter().map(|e| if e % 2 == 0 { 1 } else { 0 }).collect()),
        (Family::D, 2) => {
            // The Pfaffian has degree n; only that one generator changes sign.
            let pf = (t.rank - 1) as i64;
            let pos = exponents.iter().rposition(|&e| e == pf).ok_or_else(unsupported)?;
            Ok((0..exponents.len()).map(|j| if j == pos { 1 } else { 0 }).collect())
        }
        (Family::E, 2) if t.rank == 6 => Ok(exponents.iter().map(|&e| if e == 4 || e == 8 { 1 } else { 0 }).collect()),
        (Family::D, 3) if t.rank == 4 => Ok(vec![0, 1, 2, 0]),
        _ => Err(unsupported()),
    }
}

pub fn datum_of(t: SimpleType, twist: usize, m: i64) -> Result<Datum> {
    if m < 1 || m % twist as i64 != 0 {
        return Err(Error::Mismatch(format!("order {m} is not a positive multiple of {twist}")));
    }
    let rs = root_system(t);
    let exponents = rs.exponents.clone();
    let step = m / twist as i64;
    let residues: Vec<i64> = residue_steps(t, twist, &exponents)?.iter().map(|s| s * step).collect();
    let mut k = vec![0usize; m as usize];
    for (e, r) in exponents.iter().zip(&residues) {
        k[((e + r) % m) as usize] += 1;
    }
    Ok(Datum { ty: t.to_string(), rank: t.rank, dim: rs.dim(), m, twist, exponents, residues, k })
}

/// `D_θ = Σ i·dim g_i`, checked against `(m/2)(dim g − dim g_0)`.
pub fn d_theta(dims: &[usize]) -> Result<i64> {
    let m = dims.len() as i64;
    let dim: usize = dims.iter().sum();
    let direct: i64 = dims.iter().enumerate().map(|(i, &d)| i as i64 * d as i64).sum();
    let twice = m * (dim as i64 - dims[0] as i64);
    if 2 * direct != twice {
        return Err(Error::Mismatch(format!("D_theta {direct} vs {twice}/2")));
    }
    Ok(direct)
}

/// `𝔜(m, k⃗) = ½((m−1) dim g + Σ (2i+1−m) k_i)`.
pub fn upsilon(d: &Datum) -> i64 {
    let m = d.m;
    let s: i64 = d.k.iter().enumerate().map(|(i, &k)| (2 * i as i64 + 1 - m) * k as i64).sum();
    let twice = (m - 1) * d.dim as i64 + s;
    assert_eq!(twice % 2, 0);
    twice / 2
}

/// Dimension vector forced on an N-regular automorphism with this datum.
pub fn nreg_dims(d: &Datum) -> Result<Vec<usize>> {
    let m = d.m;
    let s: i64 = d.k.iter().enumerate().map(|(i, &k)| (m - 1 - 2 * i as i64) * k as i64).sum();
    let num = d.dim as i64 + s;
    if num % m != 0 {
        return Err(Error::Arithmetic(format!("dim g_0 = {num}/{m} is not an integer")));
    }
    let mut dims = vec![num / m];
    for i in 0..(m as usize - 1) {
        let next = dims[i] + d.k[m as usize - 1 - i] as i64 - d.k[i] as i64;
        dims.push(next);
    }
    if dims.iter().any(|&x| x < 0) || dims.iter().sum::<i64>() != d.dim as i64 {
        return Err(Error::Arithmetic(format!("inconsistent N-regular dimensions {dims:?}")));
    }
    Ok(dims.into_iter().map(|x| x as usize).collect())
}

/// `b(g, θ) = ½(dim g − dim g_0 + rk g + rk g_0)`.
pub fn b_value(dim_g: usize, dim_g0: usize, rk_g: usize, rk_g0: usize) -> Ratio<i64> {
    Ratio::new((dim_g + rk_g + rk_g0) as i64 - dim_g0 as i64, 2)
}

/// `b(g) − b(l) + rk g` for a parabolic subalgebra with Levi part `l`.
pub fn parabolic_trdeg(dim_g: usize, rk_g: usize, dim_levi: usize) -> Ratio<i64> {
    let b_g = Ratio::new((dim_g + rk_g) as i64, 2);
    let b_l = Ratio::new((dim_levi + rk_g) as i64, 2);
    b_g - b_l + Ratio::from_integer(rk_g as i64)
}

/// `d_j^• = (m−1) m_j + ((m_j + r_j) mod m)`.
pub fn bullet_degrees(d: &Datum) -> Vec<i64> {
    d.exponents.iter().zip(&d.residues).map(|(e, r)| (d.m - 1) * e + (e + r) % d.m).collect()
}

/// `Σ ((d_j^• − r_j)/m + 1)`.
pub fn main2_sum(d: &Datum) -> Result<i64> {
    let mut s = 0;
    for (b, r) in bullet_degrees(d).iter().zip(&d.residues) {
        if (b - r) % d.m != 0 {
            return Err(Error::Arithmetic(format!("d• − r = {} is not divisible by {}", b - r, d.m)));
        }
        s += (b - r) / d.m + 1;
    }
    Ok(s)
}

/// A friendly pair. For outer components the N-regular member is only a
/// candidate, identified by its dimension vector.
#[derive(Clone, Debug, Serialize)]
pub struct FriendlyPair {
    pub nreg: String,
    pub partner: String,
    pub nreg_dims: Vec<usize>,
    pub partner_dims: Vec<usize>,
    pub candidate: bool,
}

pub fn friendly_pairs(t: SimpleType, twist: usize, m: i64) -> Result<Vec<FriendlyPair>> {
    let all = enumerate(t, twist, m)?;
    let mut out = Vec::new();
    if twist == 1 {
        let nreg = n_regular_inner(t, m)?;
        let nd = dims_of(&nreg);
        for d in &all {
            if !equivalent(d, &nreg) {
                let dd = dims_of(d);
                if dd[0] == nd[0] {
                    out.push(FriendlyPair {
                        nreg: nreg.to_string(),
                        partner: d.to_string(),
                        nreg_dims: nd.clone(),
                        partner_dims: dd,
                        candidate: false,
                    });
                }
            }
        }
    } else {
        let expected = nreg_dims(&datum_of(t, twist, m)?)?;
        let cands: Vec<(&KacDiagram, Vec<usize>)> =
            all.iter().map(|d| (d, dims_of(d))).filter(|(_, dd)| *dd == expected).collect();
        for a in 0..cands.len() {
            for b in a + 1..cands.len() {
                out.push(FriendlyPair {
                    nreg: cands[a].0.to_string(),
                    partner: cands[b].0.to_string(),
                    nreg_dims: cands[a].1.clone(),
                    partner_dims: cands[b].1.clone(),
                    candidate: true,
                });
            }
        }
    }
    Ok(out)
}

/// The label constraints on an N-regular inner diagram.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShapeReport {
    /// `p_i ∈ {0, 1}` wherever `n_i > 1`.
    pub big_labels_at_mark_one: bool,
    /// A label above 1 forces every other label to equal 1.
    pub others_equal_one: bool,
    /// `m ≤ h` forces all labels into `{0, 1}`.
    pub small_when_order_at_most_h: bool,
    pub passed: bool,
}

pub fn nreg_label_shape_check(d: &KacDiagram) -> ShapeReport {
    let marks = &d.diagram.marks;
    let p = &d.labels;
    let big_labels_at_mark_one = (0..p.len()).all(|i| marks[i] == 1 || p[i] <= 1);
    let others_equal_one = (0..p.len()).all(|i| p[i] <= 1 || (0..p.len()).all(|j| j == i || p[j] == 1));
    let h = root_system(d.base()).coxeter;
    let small_when_order_at_most_h = d.order() > h || p.iter().all(|&x| x <= 1);
    ShapeReport {
        big_labels_at_mark_one,
        others_equal_one,
        small_when_order_at_most_h,
        passed: big_labels_at_mark_one && others_equal_one && small_when_order_at_most_h,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ty(s: &str) -> SimpleType {
        s.parse().unwrap()
    }

    #[test]
    fn datum_examples() {
        assert_eq!(datum_of(ty("A2"), 1, 3).unwrap().k, vec![0, 1, 1]);
        assert_eq!(datum_of(ty("A1"), 1, 2).unwrap().k, vec![0, 1]);
        assert!(datum_of(ty("D4"), 3, 4).is_err());
        assert!(datum_of(ty("B3"), 2, 4).is_err());
        let d = datum_of(ty("D4"), 2, 2).unwrap();
        assert_eq!(d.residues.iter().filter(|&&r| r == 1).count(), 1);
    }

    #[test]
    fn d_theta_examples() {
        assert_eq!(d_theta(&[2, 3, 3]), Ok(9));
        assert_eq!(d_theta(&[8]), Ok(0));
        assert_eq!(d_theta(&[4, 2, 2, 2, 2]), Ok(20));
        assert!(d_theta(&[2, 3, 4]).is_err());
    }

    #[test]
    fn upsilon_examples() {
        assert_eq!(upsilon(&datum_of(ty("A2"), 1, 3).unwrap()), 9);
        assert_eq!(upsilon(&datum_of(ty("A1"), 1, 2).unwrap()), 2);
    }

    #[test]
    fn nreg_dims_examples() {
        assert_eq!(nreg_dims(&datum_of(ty("A2"), 1, 3).unwrap()).unwrap(), vec![2, 3, 3]);
        assert_eq!(nreg_dims(&datum_of(ty("A7"), 2, 4).unwrap()).unwrap(), vec![16, 16, 15, 16]);
        assert_eq!(nreg_dims(&datum_of(ty("E8"), 1, 1).unwrap()).unwrap(), vec![248]);
    }

    #[test]
    fn b_and_bullets() {
        assert_eq!(b_value(8, 2, 2, 2), Ratio::from_integer(5));
        assert_eq!(b_value(14, 14, 2, 2), Ratio::from_integer(2));
        let d = datum_of(ty("A2"), 1, 3).unwrap();
        assert_eq!(bullet_degrees(&d), vec![3, 6]);
        assert_eq!(main2_sum(&d), Ok(5));
        let a1 = datum_of(ty("A1"), 1, 2).unwrap();
        assert_eq!(bullet_degrees(&a1), vec![2]);
        assert_eq!(main2_sum(&a1), Ok(2));
        assert_eq!(bullet_degrees(&datum_of(ty("G2"), 1, 1).unwrap()), vec![0, 0]);
        assert_eq!(parabolic_trdeg(8, 2, 2), Ratio::from_integer(5));
    }

    #[test]
    fn shape_checks() {
        let g2: KacDiagram = "G2[0,1,1]".parse().unwrap();
        assert!(nreg_label_shape_check(&g2).passed);
        let a2: KacDiagram = "A2[5,1,1]".parse().unwrap();
        assert!(nreg_label_shape_check(&a2).passed);
        let bad: KacDiagram = "G2[0,2,1]".parse().unwrap();
        assert!(!nreg_label_shape_check(&bad).passed);
    }

    #[test]
    fn friendly_examples() {
        assert!(friendly_pairs(ty("A1"), 1, 2).unwrap().is_empty());
        let e7 = friendly_pairs(ty("E7"), 1, 4).unwrap();
        assert!(e7.iter().any(|p| p.nreg_dims == vec![33, 35, 30, 35] && p.partner_dims == vec![33, 32, 36, 32]));
        let e6 = friendly_pairs(ty("E6"), 1, 4).unwrap();
        assert!(e6.iter().any(|p| p.nreg_dims == vec![20, 20, 18, 20] && p.partner_dims == vec![20, 20, 18, 20]));
        let a7 = friendly_pairs(ty("A7"), 2, 4).unwrap();
        assert!(a7.iter().any(|p| p.candidate && p.partner_dims == vec![16, 16, 15, 16]));
    }
}
