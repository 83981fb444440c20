//! Kac diagrams: parsing, validation, order, canonical forms, the readout of
//! `g_0`, alcove normalization, enumeration, and N-regular inner diagrams.

use crate::arith::gcd_all;
use crate::error::{Error, Result};
use crate::rootsystem::{affine_diagram, root_system, subdiagram_components, AffineDiagram, SimpleType};
use serde::Serialize;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

/// An affine or twisted affine diagram with nonnegative coprime labels.
#[derive(Clone, Debug)]
pub struct KacDiagram {
    pub diagram: Arc<AffineDiagram>,
    /// `p_0, p_1, …`, node 0 first.
    pub labels: Vec<i64>,
}

impl PartialEq for KacDiagram {
    fn eq(&self, other: &Self) -> bool {
        self.diagram.base == other.diagram.base
            && self.diagram.twist == other.diagram.twist
            && self.labels == other.labels
    }
}

impl Eq for KacDiagram {}

impl KacDiagram {
    /// Builds and validates a diagram.
    pub fn new(t: SimpleType, twist: usize, labels: Vec<i64>) -> Result<KacDiagram> {
        let d = KacDiagram { diagram: affine_diagram(t, twist)?, labels };
        validate(&d)?;
        Ok(d)
    }

    pub fn base(&self) -> SimpleType {
        self.diagram.base
    }

    pub fn twist(&self) -> usize {
        self.diagram.twist
    }

    pub fn is_inner(&self) -> bool {
        self.diagram.twist == 1
    }

    /// `m = p_0 + Σ n_i p_i` (inner) or `t · Σ a'_i p_i` (outer).
    pub fn order(&self) -> i64 {
        self.diagram.twist as i64 * self.labels.iter().zip(&self.diagram.marks).map(|(p, n)| p * n).sum::<i64>()
    }

    /// `L(θ)`, the nodes with nonzero label.
    pub fn support(&self) -> Vec<usize> {
        (0..self.labels.len()).filter(|&i| self.labels[i] != 0).collect()
    }

    fn with_labels(&self, labels: Vec<i64>) -> KacDiagram {
        KacDiagram { diagram: self.diagram.clone(), labels }
    }
}

impl fmt::Display for KacDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.labels.iter().map(|p| p.to_string()).collect();
        write!(f, "{}[{}]", self.diagram.name(), labels.join(","))
    }
}

impl FromStr for KacDiagram {
    type Err = Error;

    /// Grammar: `TYPE ['^' TWIST] '[' n (',' n)* ']'`.
    fn from_str(s: &str) -> Result<KacDiagram> {
        let err = |pos: usize, msg: &str| Error::Parse { pos, msg: msg.to_string() };
        let open = s.find('[').ok_or_else(|| err(s.len(), "expected '['"))?;
        let head = &s[..open];
        let (ty_text, twist) = match head.find('^') {
            Some(c) => {
                let tw: usize = head[c + 1..].parse().map_err(|_| err(c + 1, "expected twist 2 or 3"))?;
                (&head[..c], tw)
            }
            None => (head, 1),
        };
        let t: SimpleType = ty_text.parse().map_err(|e| match e {
            Error::Parse { msg, .. } => err(0, &msg),
            other => other,
        })?;
        if !s.ends_with(']') {
            return Err(err(s.len(), "expected ']'"));
        }
        let body = &s[open + 1..s.len() - 1];
        let mut labels = Vec::new();
        let mut pos = open + 1;
        for part in body.split(',') {
            let trimmed = part.trim();
            let v: i64 = trimmed.parse().map_err(|_| err(pos, "expected a nonnegative integer"))?;
            labels.push(v);
            pos += part.len() + 1;
        }
        KacDiagram::new(t, twist, labels)
    }
}

/// Accepts exactly the label vectors of the right length that are
/// nonnegative, not all zero, and coprime.
pub fn validate(d: &KacDiagram) -> Result<()> {
    let n = d.diagram.node_count();
    if d.labels.len() != n {
        return Err(Error::LabelCount { expected: n, found: d.labels.len() });
    }
    if let Some(i) = d.labels.iter().position(|&p| p < 0) {
        return Err(Error::NegativeLabel(i));
    }
    if d.labels.iter().all(|&p| p == 0) {
        return Err(Error::AllZero);
    }
    let g = gcd_all(&d.labels);
    if g != 1 {
        return Err(Error::NonCoprime(g));
    }
    Ok(())
}

/// The reductive subalgebra `g_0` read off the labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductiveReadout {
    pub semisimple_part: Vec<String>,
    pub center_dim: usize,
    pub g1_lowest_weight_nodes: Vec<usize>,
    pub dim_g0: usize,
    pub dim_g1: usize,
}

pub fn readout(d: &KacDiagram) -> ReductiveReadout {
    let zero: Vec<usize> = (0..d.labels.len()).filter(|&i| d.labels[i] == 0).collect();
    let comps = subdiagram_components(&d.diagram.cartan, &zero);
    let center_dim = d.support().len() - 1;
    let ss_dim: usize = comps.iter().map(|c| c.dim() - c.rank).sum();
    let dim_g0 = ss_dim + d.diagram.fixed_rank();
    let dims = crate::grading::dims_of(d);
    ReductiveReadout {
        semisimple_part: comps.iter().map(|c| c.to_string()).collect(),
        center_dim,
        g1_lowest_weight_nodes: (0..d.labels.len()).filter(|&i| d.labels[i] == 1).collect(),
        dim_g0,
        dim_g1: if dims.len() > 1 { dims[1] } else { dims[0] },
    }
}

pub(crate) fn apply_perm(labels: &[i64], perm: &[usize]) -> Vec<i64> {
    let mut out = vec![0; labels.len()];
    for (i, &p) in labels.iter().enumerate() {
        out[perm[i]] = p;
    }
    out
}

/// Lexicographically smallest label vector over the symmetry group of the diagram.
pub fn canonicalize(d: &KacDiagram) -> KacDiagram {
    let best = d.diagram.gamma.iter().map(|g| apply_perm(&d.labels, g)).min().unwrap_or_else(|| d.labels.clone());
    d.with_labels(best)
}

pub fn equivalent(a: &KacDiagram, b: &KacDiagram) -> bool {
    canonicalize(a) == canonicalize(b)
}

const ALCOVE_CAP: usize = 1_000_000;

/// Moves integer Kac coordinates into the fundamental alcove by simple
/// reflections (smallest negative index first), then divides by the gcd.
pub fn normalize_alcove(coords: &[i64], a: &Arc<AffineDiagram>) -> Result<KacDiagram> {
    let n = a.node_count();
    if coords.len() != n {
        return Err(Error::LabelCount { expected: n, found: coords.len() });
    }
    let weight = |c: &[i64]| c.iter().zip(&a.marks).map(|(x, y)| x * y).sum::<i64>();
    let w0 = weight(coords);
    if w0 <= 0 {
        return Err(Error::AllZero);
    }
    let mut c = coords.to_vec();
    let mut steps = 0;
    while let Some(i) = c.iter().position(|&x| x < 0) {
        steps += 1;
        if steps > ALCOVE_CAP {
            return Err(Error::NonTermination);
        }
        let ci = c[i];
        for j in 0..n {
            c[j] -= a.cartan[i][j] * ci;
        }
        debug_assert_eq!(weight(&c), w0);
    }
    let g = gcd_all(&c);
    let labels = c.iter().map(|x| x / g).collect();
    let d = KacDiagram { diagram: a.clone(), labels };
    validate(&d)?;
    Ok(d)
}

/// The inner N-regular diagram of order `m`: the Z-grading by height glued
/// mod `m`, in alcove-normal form (node 0 keeps the label `m + 1 − h` when
/// `m ≥ h`). Compare with other diagrams through [`equivalent`].
pub fn n_regular_inner(t: SimpleType, m: i64) -> Result<KacDiagram> {
    let a = affine_diagram(t, 1)?;
    let h = root_system(t).coxeter;
    let mut coords = vec![1i64; a.node_count()];
    coords[0] = m - (h - 1);
    normalize_alcove(&coords, &a)
}

/// All canonical valid diagrams of order exactly `m`, in lexicographic order.
pub fn enumerate(t: SimpleType, twist: usize, m: i64) -> Result<Vec<KacDiagram>> {
    let a = affine_diagram(t, twist)?;
    if m < 1 || m % twist as i64 != 0 {
        return Ok(Vec::new());
    }
    let target = m / twist as i64;
    let mut out = Vec::new();
    let mut cur = vec![0i64; a.node_count()];
    fn rec(k: usize, rest: i64, cur: &mut Vec<i64>, a: &Arc<AffineDiagram>, out: &mut Vec<KacDiagram>) {
        if k == cur.len() {
            if rest == 0 && gcd_all(cur) == 1 {
                let d = KacDiagram { diagram: a.clone(), labels: cur.clone() };
                if canonicalize(&d).labels == d.labels {
                    out.push(d);
                }
            }
            return;
        }
        let mark = a.marks[k];
        for p in 0..=rest / mark {
            cur[k] = p;
            rec(k + 1, rest - p * mark, cur, a, out);
        }
        cur[k] = 0;
    }
    rec(0, target, &mut cur, &a, &mut out);
    Ok(out)
}

/// All canonical valid diagrams with every label at most `max_label`.
pub fn enumerate_bounded(t: SimpleType, twist: usize, max_label: i64) -> Result<Vec<KacDiagram>> {
    let a = affine_diagram(t, twist)?;
    let n = a.node_count();
    let mut out = Vec::new();
    let mut cur = vec![0i64; n];
    loop {
        let d = KacDiagram { diagram: a.clone(), labels: cur.clone() };
        if validate(&d).is_ok() && canonicalize(&d).labels == d.labels {
            out.push(d);
        }
        let mut k = n;
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            if cur[k] < max_label {
                cur[k] += 1;
                break;
            }
            cur[k] = 0;
        }
    }
}

/// Replaces every nonzero label by 1.
pub fn collapse(d: &KacDiagram) -> KacDiagram {
    d.with_labels(d.labels.iter().map(|&p| p.min(1)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kd(s: &str) -> KacDiagram {
        s.parse().unwrap()
    }

    #[test]
    fn validation_and_order() {
        assert_eq!(kd("G2[0,1,1]").order(), 5);
        assert_eq!("G2[0,2,2]".parse::<KacDiagram>(), Err(Error::NonCoprime(2)));
        assert_eq!("A2[0,0,0]".parse::<KacDiagram>(), Err(Error::AllZero));
        assert_eq!(kd("D4^3[1,0,1]").order(), 6);
        assert_eq!(kd("A3^2[1,0,0]").order(), 2);
        assert_eq!("A2[1,1]".parse::<KacDiagram>(), Err(Error::LabelCount { expected: 3, found: 2 }));
    }

    #[test]
    fn parse_errors_carry_position() {
        match "A2[1,x,1]".parse::<KacDiagram>() {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 5),
            other => panic!("{other:?}"),
        }
        assert!(matches!("A2(1,1,1)".parse::<KacDiagram>(), Err(Error::Parse { .. })));
        assert!(matches!("A3^5[1,0,0]".parse::<KacDiagram>(), Err(Error::UnsupportedTwist(_))));
    }

    #[test]
    fn printer_round_trips() {
        for s in ["F4[0,0,1,0,0]", "A5^2[1,0,1,0]", "D4^3[1,0,1]", "E6^2[0,0,0,0,1]"] {
            assert_eq!(kd(s).to_string(), s);
        }
    }

    #[test]
    fn readout_examples() {
        let f4 = readout(&kd("F4[0,0,1,0,0]"));
        assert_eq!(f4.semisimple_part, vec!["A1".to_string(), "A3".to_string()]);
        assert_eq!(f4.center_dim, 0);
        assert_eq!(f4.dim_g0, 18);
        let d43 = readout(&kd("D4^3[1,0,1]"));
        assert_eq!(d43.semisimple_part, vec!["A1".to_string()]);
        assert_eq!(d43.center_dim, 1);
        assert_eq!(d43.dim_g0, 4);
        let ab = readout(&kd("B3[1,1,1,1]"));
        assert!(ab.semisimple_part.is_empty());
        assert_eq!(ab.dim_g0, 3);
    }

    #[test]
    fn canonical_forms() {
        assert_eq!(canonicalize(&kd("A2[1,1,0]")).labels, vec![0, 1, 1]);
        assert_eq!(canonicalize(&kd("G2[1,1,0]")).labels, vec![1, 1, 0]);
        assert_eq!(canonicalize(&kd("A3[1,0,1,0]")).labels, vec![0, 1, 0, 1]);
        let c = canonicalize(&kd("E6[1,0,0,0,0,0,2]"));
        assert_eq!(canonicalize(&c), c);
    }

    #[test]
    fn alcove_examples() {
        let a2 = affine_diagram("A2".parse().unwrap(), 1).unwrap();
        assert_eq!(normalize_alcove(&[-1, 1, 1], &a2).unwrap().labels, vec![1, 0, 0]);
        assert_eq!(normalize_alcove(&[2, 0, 1], &a2).unwrap().labels, vec![2, 0, 1]);
        let g2 = affine_diagram("G2".parse().unwrap(), 1).unwrap();
        assert_eq!(normalize_alcove(&[0, 1, 1], &g2).unwrap().labels, vec![0, 1, 1]);
    }

    #[test]
    fn n_regular_examples() {
        let t = |s: &str| s.parse::<SimpleType>().unwrap();
        assert_eq!(n_regular_inner(t("G2"), 5).unwrap().labels, vec![0, 1, 1]);
        assert_eq!(n_regular_inner(t("A2"), 1).unwrap().labels, vec![1, 0, 0]);
        assert_eq!(n_regular_inner(t("A2"), 3).unwrap().labels, vec![1, 1, 1]);
        assert_eq!(n_regular_inner(t("A2"), 7).unwrap().labels, vec![5, 1, 1]);
        for m in 1..20 {
            assert_eq!(n_regular_inner(t("E8"), m).unwrap().order(), m);
        }
    }

    #[test]
    fn enumeration_examples() {
        let t = |s: &str| s.parse::<SimpleType>().unwrap();
        let a1 = enumerate(t("A1"), 1, 2).unwrap();
        assert_eq!(a1.len(), 1);
        assert_eq!(a1[0].labels, vec![1, 1]);
        let g2: Vec<Vec<i64>> = enumerate(t("G2"), 1, 3).unwrap().into_iter().map(|d| d.labels).collect();
        assert_eq!(g2, vec![vec![0, 1, 0], vec![1, 0, 1]]);
        let d43 = enumerate(t("D4"), 3, 3).unwrap();
        assert!(d43.iter().any(|d| d.labels == vec![1, 0, 0]));
        assert!(enumerate(t("D4"), 3, 4).unwrap().is_empty());
    }

    #[test]
    fn collapse_examples() {
        assert_eq!(collapse(&kd("C3[0,2,1,0]")).labels, vec![0, 1, 1, 0]);
        assert_eq!(collapse(&kd("A2[1,1,1]")).order(), 3);
    }
}
