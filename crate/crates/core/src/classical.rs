//! Matrix realizations of periodic automorphisms of the classical algebras,
//! their basic invariants over `F_p`, φ-degrees by interpolation, and the
//! eigenvalue data of the defining representation.
//!
//! Inner automorphisms and outer ones of `so_{2l}` are conjugations by a
//! diagonal `A` (in a basis adapted to the form); outer automorphisms of
//! `sl_N` are conjugations composed with `τ(x) = −J⁻¹ xᵀ J`. In both cases
//! every matrix entry, or every `τ`-eigencomponent of it, is homogeneous, so
//! `φ(t)` acts entrywise.

use crate::arith::{kernel_fp, rank_fp, rng_for, Fp};
use crate::datum::{d_theta, datum_of};
use crate::error::{Error, Result};
use crate::grading::dims_of;
use crate::kac::{apply_perm, KacDiagram};
use crate::rootsystem::{root_system, Family};
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FormKind {
    None,
    Symmetric,
    Alternating,
}

/// A homogeneous element of `g ⊂ gl_N`, stored by its nonzero entries.
#[derive(Clone, Debug)]
pub struct GradedMatrix {
    pub degree: usize,
    /// Integer degree before reduction mod `m` (inner case).
    pub zdegree: i64,
    pub entries: Vec<(usize, usize, Fp)>,
}

#[derive(Clone, Debug)]
pub struct MatrixRealization {
    pub diagram: KacDiagram,
    pub n: usize,
    pub m: usize,
    pub form: FormKind,
    pub form_matrix: Vec<Vec<i64>>,
    /// `A = diag(ζ^{v/2})` for the doubled degrees `v`.
    pub doubled: Vec<i64>,
    /// Outer `sl_N`: `θ = Ad(A) ∘ τ`.
    pub transpose: bool,
    pub basis: Vec<GradedMatrix>,
}

impl MatrixRealization {
    pub fn dims(&self) -> Vec<usize> {
        let mut dims = vec![0; self.m];
        for b in &self.basis {
            dims[b.degree] += 1;
        }
        dims
    }

    /// Degrees of the defining-representation basis when `A^m = I`.
    pub fn v_degrees(&self) -> Option<Vec<usize>> {
        let m = self.m as i64;
        self.doubled.iter().map(|v| (v % 2 == 0).then(|| (v / 2).rem_euclid(m) as usize)).collect()
    }

    fn degree_bound(&self, fam: &InvariantFamily) -> usize {
        (self.m - 1) * fam.degrees.iter().copied().max().unwrap_or(0)
    }
}

fn antidiagonal(n: usize, alternating: bool) -> Vec<Vec<i64>> {
    let mut j = vec![vec![0; n]; n];
    for (a, row) in j.iter_mut().enumerate() {
        row[n - 1 - a] = if alternating && a >= n / 2 { -1 } else { 1 };
    }
    j
}

/// Labels transported to the simple roots of `g`.
fn root_labels(d: &KacDiagram) -> Vec<i64> {
    let l = d.base().rank;
    if d.is_inner() {
        return d.labels[1..].to_vec();
    }
    let mut q = vec![0; l];
    for (node, orbit) in d.diagram.orbits.iter().enumerate() {
        for &a in orbit {
            q[a] = d.labels[node];
        }
    }
    q
}

/// `X_a = X_{a+1} + 2 q_a` downwards from a given last coordinate.
fn descend(q: &[i64], last: i64, len: usize) -> Vec<i64> {
    let mut x = vec![0; len];
    x[len - 1] = last;
    for a in (0..len - 1).rev() {
        x[a] = x[a + 1] + 2 * q[a];
    }
    x
}

fn mirrored(x: &[i64], middle: &[i64]) -> Vec<i64> {
    x.iter().copied().chain(middle.iter().copied()).chain(x.iter().rev().map(|v| -v)).collect()
}

struct Shape {
    n: usize,
    doubled: Vec<i64>,
    form: FormKind,
    forms: Vec<Vec<Vec<i64>>>,
    transpose: bool,
}

fn shape(d: &KacDiagram) -> Result<Shape> {
    let t = d.base();
    let l = t.rank;
    let q = root_labels(d);
    let m = d.order();
    let shape = match (t.family, d.twist()) {
        (Family::A, 1) => {
            let mut x = vec![0; l + 1];
            for a in 0..l {
                x[a + 1] = x[a] - 2 * q[a];
            }
            Shape { n: l + 1, doubled: x, form: FormKind::None, forms: vec![Vec::new()], transpose: false }
        }
        (Family::A, 2) => {
            let n = l + 1;
            let mut x = vec![q.iter().sum::<i64>(); n];
            for a in 0..l {
                x[a + 1] = x[a] - 2 * q[a];
            }
            let mut forms = vec![antidiagonal(n, n.is_multiple_of(2))];
            if n.is_multiple_of(2) {
                forms.push(antidiagonal(n, false));
            }
            Shape { n, doubled: x, form: FormKind::None, forms, transpose: true }
        }
        (Family::B, 1) => Shape {
            n: 2 * l + 1,
            doubled: mirrored(&descend(&q, 2 * q[l - 1], l), &[0]),
            form: FormKind::Symmetric,
            forms: vec![antidiagonal(2 * l + 1, false)],
            transpose: false,
        },
        (Family::C, 1) => Shape {
            n: 2 * l,
            doubled: mirrored(&descend(&q, q[l - 1], l), &[]),
            form: FormKind::Alternating,
            forms: vec![antidiagonal(2 * l, true)],
            transpose: false,
        },
        (Family::D, 1) => {
            let mut x = descend(&q, q[l - 1] - q[l - 2], l);
            x[l - 2] = q[l - 1] + q[l - 2];
            for a in (0..l - 2).rev() {
                x[a] = x[a + 1] + 2 * q[a];
            }
            Shape {
                n: 2 * l,
                doubled: mirrored(&x, &[]),
                form: FormKind::Symmetric,
                forms: vec![antidiagonal(2 * l, false)],
                transpose: false,
            }
        }
        (Family::D, 2) => {
            // The two middle vectors are `e_l ± e_{l'}`, the ±1 eigenvectors of the reflection.
            let x = descend(&q, 2 * q[l - 2], l - 1);
            let mut j = antidiagonal(2 * l, false);
            j[l - 1][l] = 0;
            j[l][l - 1] = 0;
            j[l - 1][l - 1] = 2;
            j[l][l] = -2;
            Shape { n: 2 * l, doubled: mirrored(&x, &[0, m]), form: FormKind::Symmetric, forms: vec![j], transpose: false }
        }
        (Family::D, 3) => return Err(Error::UnsupportedTwist(d.diagram.name())),
        _ => return Err(Error::NotClassical(d.diagram.name())),
    };
    Ok(shape)
}

/// Kernel of `xᵀJ + εJx` (and of the trace, if asked) on the span of the given positions.
fn class_kernel(
    n: usize,
    pos: &[(usize, usize)],
    form: Option<(&[Vec<i64>], i64)>,
    traceless: bool,
) -> Vec<Vec<(usize, usize, Fp)>> {
    let mut eqs: BTreeMap<(usize, usize), Vec<Fp>> = BTreeMap::new();
    let k = pos.len();
    if let Some((j, eps)) = form {
        for (s, &(p, q)) in pos.iter().enumerate() {
            for b in 0..n {
                if j[p][b] != 0 {
                    eqs.entry((q, b)).or_insert_with(|| vec![Fp::ZERO; k])[s] += Fp::from_i64(j[p][b]);
                }
            }
            for a in 0..n {
                if j[a][p] != 0 {
                    eqs.entry((a, q)).or_insert_with(|| vec![Fp::ZERO; k])[s] += Fp::from_i64(eps * j[a][p]);
                }
            }
        }
    }
    let mut rows: Vec<Vec<Fp>> = eqs.into_values().collect();
    if traceless && pos.iter().any(|&(a, b)| a == b) {
        rows.push(pos.iter().map(|&(a, b)| if a == b { Fp::ONE } else { Fp::ZERO }).collect());
    }
    kernel_fp(rows, k)
        .into_iter()
        .map(|v| pos.iter().zip(v).filter(|(_, c)| !c.is_zero()).map(|(&(a, b), c)| (a, b, c)).collect())
        .collect()
}

fn build_basis(sh: &Shape, j: &[Vec<i64>], m: i64, outer: bool, shifts: (i64, i64)) -> Vec<GradedMatrix> {
    let n = sh.n;
    let v = &sh.doubled;
    let mut classes: BTreeMap<i64, Vec<(usize, usize)>> = BTreeMap::new();
    for a in 0..n {
        for b in 0..n {
            let z = (v[a] - v[b]) / 2;
            classes.entry(if outer { z.rem_euclid(m) } else { z }).or_default().push((a, b));
        }
    }
    let mut basis = Vec::new();
    for (z, pos) in classes {
        let mut push = |comps: Vec<Vec<(usize, usize, Fp)>>, shift: i64| {
            for entries in comps {
                basis.push(GradedMatrix { degree: (z + shift).rem_euclid(m) as usize, zdegree: z + shift, entries });
            }
        };
        match (sh.form, sh.transpose) {
            (FormKind::None, false) => push(class_kernel(n, &pos, None, true), 0),
            (_, false) => push(class_kernel(n, &pos, Some((j, 1)), false), 0),
            (_, true) => {
                push(class_kernel(n, &pos, Some((j, 1)), true), shifts.0);
                push(class_kernel(n, &pos, Some((j, -1)), true), shifts.1);
            }
        }
    }
    basis.sort_by_key(|b| b.degree);
    basis
}

/// The defining-representation realization of a classical diagram. The
/// induced dimension vector is checked against the abstract grading; for
/// outer `sl_N` the form and the sign of `τ` are chosen to match it.
pub fn realize(d: &KacDiagram) -> Result<MatrixRealization> {
    let sh = shape(d)?;
    let m = d.order();
    let expected = dims_of(d);
    let shifts: Vec<(i64, i64)> = if sh.transpose { vec![(0, m / 2), (m / 2, 0)] } else { vec![(0, 0)] };
    for j in &sh.forms {
        for &s in &shifts {
            let basis = build_basis(&sh, j, m, !d.is_inner(), s);
            let r = MatrixRealization {
                diagram: d.clone(),
                n: sh.n,
                m: m as usize,
                form: if sh.transpose {
                    if j[0][sh.n - 1] == j[sh.n - 1][0] {
                        FormKind::Symmetric
                    } else {
                        FormKind::Alternating
                    }
                } else {
                    sh.form
                },
                form_matrix: j.clone(),
                doubled: sh.doubled.clone(),
                transpose: sh.transpose,
                basis,
            };
            if r.dims() == expected {
                return Ok(r);
            }
        }
    }
    Err(Error::Mismatch(format!("no matrix realization of {d} reproduces {expected:?}")))
}

/// `b_j = dim V(λ_j)` for the eigenvalues `λ_j` of `A`: `ζ^j` when `A^m = I`,
/// `ζ^{j + 1/2}` otherwise.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EigenMultiplicities {
    pub m: usize,
    pub type_one: bool,
    pub orthogonal: bool,
    pub b: Vec<usize>,
}

pub fn eigen_multiplicities(r: &MatrixRealization) -> EigenMultiplicities {
    let type_one = r.doubled.iter().all(|v| v % 2 == 0);
    let mut b = vec![0; r.m];
    for v in &r.doubled {
        let j = if type_one { v / 2 } else { (v - 1) / 2 };
        b[j.rem_euclid(r.m as i64) as usize] += 1;
    }
    EigenMultiplicities { m: r.m, type_one, orthogonal: r.form == FormKind::Symmetric && !r.transpose, b }
}

/// `rk(g_0, g_1) = min{b_0, …, b_{⌊m/2⌋}}` for an orthogonal automorphism with `A^m = I`.
pub fn vinberg_rank_so(e: &EigenMultiplicities) -> Result<usize> {
    if !e.orthogonal || !e.type_one {
        return Err(Error::WrongType("the rank formula needs an orthogonal A with A^m = I".into()));
    }
    Ok(e.b[..=e.m / 2].iter().copied().min().unwrap_or(0))
}

/// Characteristic polynomial `det(λ − x) = Σ c_k λ^{N−k}` over `F_p`, by
/// reduction to Hessenberg form.
pub fn charpoly_fp(x: &[Vec<Fp>]) -> Vec<Fp> {
    let n = x.len();
    let mut h = x.to_vec();
    for j in 0..n.saturating_sub(2) {
        if h[j + 1][j].is_zero() {
            if let Some(i) = (j + 2..n).find(|&i| !h[i][j].is_zero()) {
                h.swap(i, j + 1);
                for row in h.iter_mut() {
                    row.swap(i, j + 1);
                }
            } else {
                continue;
            }
        }
        let inv = h[j + 1][j].inv();
        for i in j + 2..n {
            let f = h[i][j] * inv;
            if f.is_zero() {
                continue;
            }
            for c in 0..n {
                let t = h[j + 1][c];
                h[i][c] = h[i][c] - f * t;
            }
            for row in h.iter_mut() {
                let t = row[i];
                row[j + 1] += f * t;
            }
        }
    }
    // p[k] is the characteristic polynomial of the leading k×k block, ascending in λ.
    let mut p: Vec<Vec<Fp>> = vec![vec![Fp::ONE]];
    for k in 0..n {
        let mut next = vec![Fp::ZERO; k + 2];
        for (i, &c) in p[k].iter().enumerate() {
            next[i + 1] += c;
            next[i] = next[i] - h[k][k] * c;
        }
        let mut prod = Fp::ONE;
        for i in (0..k).rev() {
            prod = prod * h[i + 1][i];
            let f = h[i][k] * prod;
            if !f.is_zero() {
                for (e, &c) in p[i].iter().enumerate() {
                    next[e] = next[e] - f * c;
                }
            }
        }
        p.push(next);
    }
    p[n].iter().rev().copied().collect()
}

pub fn det_fp(x: &[Vec<Fp>]) -> Fp {
    let c = charpoly_fp(x);
    let n = x.len();
    if n.is_multiple_of(2) {
        c[n]
    } else {
        -c[n]
    }
}

/// Pfaffian of an alternating matrix over `F_p`, by congruence elimination.
pub fn pfaffian_fp(x: &[Vec<Fp>]) -> Fp {
    let n = x.len();
    if n % 2 == 1 {
        return Fp::ZERO;
    }
    let mut a = x.to_vec();
    let mut pf = Fp::ONE;
    let swap = |a: &mut Vec<Vec<Fp>>, i: usize, j: usize| {
        a.swap(i, j);
        for row in a.iter_mut() {
            row.swap(i, j);
        }
    };
    let add_multiple = |a: &mut Vec<Vec<Fp>>, target: usize, src: usize, f: Fp| {
        for c in 0..n {
            let t = a[src][c];
            a[target][c] = a[target][c] - f * t;
        }
        for row in a.iter_mut() {
            let t = row[src];
            row[target] = row[target] - f * t;
        }
    };
    for k in (0..n).step_by(2) {
        let Some(p) = (k + 1..n).find(|&j| !a[k][j].is_zero()) else {
            return Fp::ZERO;
        };
        if p != k + 1 {
            swap(&mut a, p, k + 1);
            pf = -pf;
        }
        let piv = a[k][k + 1];
        pf = pf * piv;
        let inv = piv.inv();
        for i in k + 2..n {
            let f = a[k][i] * inv;
            if !f.is_zero() {
                add_multiple(&mut a, i, k + 1, f);
            }
            let g = a[k + 1][i] * (-inv);
            if !g.is_zero() {
                add_multiple(&mut a, i, k, g);
            }
        }
    }
    pf
}

/// Coefficients (ascending) of the polynomial through `(xs_i, ys_i)`.
pub fn interpolate(xs: &[Fp], ys: &[Fp]) -> Vec<Fp> {
    let n = xs.len();
    let mut dd = ys.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (dd[i] - dd[i - 1]) * (xs[i] - xs[i - level]).inv();
        }
    }
    let mut coeffs = vec![Fp::ZERO; n];
    for i in (0..n).rev() {
        // coeffs ← coeffs·(λ − xs_i) + dd_i
        for e in (1..n).rev() {
            coeffs[e] = coeffs[e - 1] - xs[i] * coeffs[e];
        }
        coeffs[0] = dd[i] - xs[i] * coeffs[0];
    }
    coeffs
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Invariant {
    Coefficient(usize),
    Pfaffian,
}

/// A free generating set of `S(g)^g`: characteristic-polynomial
/// coefficients, with the Pfaffian of `Jx` for `so_{2l}`.
#[derive(Clone, Debug)]
pub struct InvariantFamily {
    pub degrees: Vec<usize>,
    members: Vec<Invariant>,
    form: Vec<Vec<Fp>>,
}

impl InvariantFamily {
    pub fn of(r: &MatrixRealization) -> InvariantFamily {
        let n = r.n;
        let members: Vec<Invariant> = if r.transpose || r.form == FormKind::None {
            (2..=n).map(Invariant::Coefficient).collect()
        } else if r.form == FormKind::Symmetric && n.is_multiple_of(2) {
            let mut v: Vec<Invariant> = (1..n / 2).map(|k| Invariant::Coefficient(2 * k)).collect();
            let pos = v.iter().position(|i| matches!(i, Invariant::Coefficient(k) if *k > n / 2)).unwrap_or(v.len());
            v.insert(pos, Invariant::Pfaffian);
            v
        } else {
            (1..=n / 2).map(|k| Invariant::Coefficient(2 * k)).collect()
        };
        let degrees = members
            .iter()
            .map(|i| match i {
                Invariant::Coefficient(k) => *k,
                Invariant::Pfaffian => n / 2,
            })
            .collect();
        let form = r.form_matrix.iter().map(|row| row.iter().map(|&c| Fp::from_i64(c)).collect()).collect();
        InvariantFamily { degrees, members, form }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn evaluate(&self, x: &[Vec<Fp>]) -> Vec<Fp> {
        let cp = charpoly_fp(x);
        let pf = if self.members.contains(&Invariant::Pfaffian) {
            pfaffian_fp(&matmul(&self.form, x))
        } else {
            Fp::ZERO
        };
        self.members
            .iter()
            .map(|i| match i {
                Invariant::Coefficient(k) => cp[*k],
                Invariant::Pfaffian => pf,
            })
            .collect()
    }
}

fn matmul(a: &[Vec<Fp>], b: &[Vec<Fp>]) -> Vec<Vec<Fp>> {
    let n = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            let mut out = vec![Fp::ZERO; n];
            for (k, &c) in row.iter().enumerate() {
                if !c.is_zero() {
                    for (o, &v) in out.iter_mut().zip(&b[k]) {
                        *o += c * v;
                    }
                }
            }
            out
        })
        .collect()
}

/// `Σ_k c_k w_k B_k` with per-element weights.
fn assemble(r: &MatrixRealization, coeffs: &[Fp], weight: impl Fn(&GradedMatrix) -> Fp) -> Vec<Vec<Fp>> {
    let mut x = vec![vec![Fp::ZERO; r.n]; r.n];
    for (b, &c) in r.basis.iter().zip(coeffs) {
        if c.is_zero() {
            continue;
        }
        let f = c * weight(b);
        for &(i, j, v) in &b.entries {
            x[i][j] += f * v;
        }
    }
    x
}

fn points(k: usize) -> Vec<Fp> {
    (1..=k as u64).map(Fp::new).collect()
}

/// The polynomials `t ↦ H_j(φ(t)x)` for one coefficient vector of `x`.
fn phi_polynomials(r: &MatrixRealization, fam: &InvariantFamily, coeffs: &[Fp]) -> Vec<Vec<Fp>> {
    let xs = points(r.degree_bound(fam) + 1);
    let values: Vec<Vec<Fp>> =
        xs.iter().map(|&t| fam.evaluate(&assemble(r, coeffs, |b| t.pow(b.degree as u64)))).collect();
    (0..fam.len()).map(|j| interpolate(&xs, &values.iter().map(|v| v[j]).collect::<Vec<_>>())).collect()
}

fn top_degree(p: &[Fp]) -> usize {
    p.iter().rposition(|c| !c.is_zero()).unwrap_or(0)
}

/// φ-degrees and bi-homogeneous supports, maximised over random points.
/// Both are one-sided: a value can only be missed, never invented.
#[derive(Clone, Debug, Serialize)]
pub struct PhiProfile {
    pub invariant_degrees: Vec<usize>,
    pub phi_degrees: Vec<usize>,
    pub supports: Vec<Vec<usize>>,
}

pub fn phi_profile(r: &MatrixRealization, trials: usize, seed: u64) -> Result<PhiProfile> {
    if trials == 0 {
        return Err(Error::ZeroTrials);
    }
    let fam = InvariantFamily::of(r);
    let mut rng = rng_for(seed, "phi");
    let mut phi_degrees = vec![0; fam.len()];
    let mut supports = vec![BTreeSet::new(); fam.len()];
    for _ in 0..trials {
        let coeffs: Vec<Fp> = r.basis.iter().map(|_| Fp::random(&mut rng)).collect();
        for (j, p) in phi_polynomials(r, &fam, &coeffs).iter().enumerate() {
            phi_degrees[j] = phi_degrees[j].max(top_degree(p));
            supports[j].extend(p.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(e, _)| e));
        }
    }
    Ok(PhiProfile {
        invariant_degrees: fam.degrees.clone(),
        phi_degrees,
        supports: supports.into_iter().map(|s| s.into_iter().collect()).collect(),
    })
}

pub fn phi_degree(r: &MatrixRealization, j: usize, trials: usize, seed: u64) -> Result<usize> {
    Ok(phi_profile(r, trials, seed)?.phi_degrees[j])
}

pub fn bihom_support(r: &MatrixRealization, j: usize, trials: usize, seed: u64) -> Result<Vec<usize>> {
    Ok(phi_profile(r, trials, seed)?.supports[j].clone())
}

/// `Σ deg_φ H_j` against `D_θ`; equality certifies a good generating system.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GgsReport {
    pub sum_phi: usize,
    pub d_theta: i64,
    pub certified: bool,
}

pub fn ggs_sum_check(r: &MatrixRealization, trials: usize, seed: u64) -> Result<GgsReport> {
    let profile = phi_profile(r, trials, seed)?;
    let sum_phi: usize = profile.phi_degrees.iter().sum();
    let d = d_theta(&r.dims())?;
    Ok(GgsReport { sum_phi, d_theta: d, certified: sum_phi as i64 == d })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SovpadReport {
    pub diagram: String,
    pub phi_degrees: Vec<usize>,
    pub nminus_degrees: Vec<usize>,
    pub passed: bool,
}

/// For an inner diagram with `p_0 > 0`, `H(φ(t)x) = H(x_p + t^m x_{n⁻})`.
/// Both sides are interpolated for the same `x` and compared coefficientwise.
/// A diagram with `p_0 = 0` is first moved by a symmetry of the affine diagram.
pub fn sovpad_check(d: &KacDiagram, trials: usize, seed: u64) -> Result<SovpadReport> {
    if !d.is_inner() {
        return Err(Error::Mismatch(format!("{d} is not inner")));
    }
    let moved = d
        .diagram
        .gamma
        .iter()
        .map(|g| KacDiagram { diagram: d.diagram.clone(), labels: apply_perm(&d.labels, g) })
        .find(|e| e.labels[0] > 0)
        .ok_or_else(|| Error::Mismatch(format!("{d} has no symmetric image with p_0 > 0")))?;
    let r = realize(&moved)?;
    let fam = InvariantFamily::of(&r);
    let m = r.m;
    let mut rng = rng_for(seed, "sovpad");
    let mut phi_degrees = vec![0; fam.len()];
    let mut nminus_degrees = vec![0; fam.len()];
    let mut passed = true;
    for _ in 0..trials.max(1) {
        let coeffs: Vec<Fp> = r.basis.iter().map(|_| Fp::random(&mut rng)).collect();
        let phi = phi_polynomials(&r, &fam, &coeffs);
        let maxdeg = fam.degrees.iter().copied().max().unwrap_or(0);
        let xs = points(maxdeg + 1);
        let values: Vec<Vec<Fp>> = xs
            .iter()
            .map(|&s| fam.evaluate(&assemble(&r, &coeffs, |b| if b.zdegree < 0 { s } else { Fp::ONE })))
            .collect();
        for j in 0..fam.len() {
            let q = interpolate(&xs, &values.iter().map(|v| v[j]).collect::<Vec<_>>());
            phi_degrees[j] = phi_degrees[j].max(top_degree(&phi[j]));
            nminus_degrees[j] = nminus_degrees[j].max(top_degree(&q));
            let len = phi[j].len().max(q.len() * m);
            passed &= (0..len).all(|k| {
                let lhs = phi[j].get(k).copied().unwrap_or(Fp::ZERO);
                let rhs = if k % m == 0 { q.get(k / m).copied().unwrap_or(Fp::ZERO) } else { Fp::ZERO };
                lhs == rhs
            });
        }
    }
    passed &= phi_degrees.iter().zip(&nminus_degrees).all(|(p, q)| *p == m * q);
    Ok(SovpadReport { diagram: moved.to_string(), phi_degrees, nminus_degrees, passed })
}

/// Rank of the Jacobian of the generators of type `m−1` restricted to `g_1`,
/// at random points. The remaining generators are checked to vanish on `g_1`.
pub fn restricted_jacobian_rank(r: &MatrixRealization, trials: usize, seed: u64) -> Result<usize> {
    if trials == 0 {
        return Err(Error::ZeroTrials);
    }
    let d = &r.diagram;
    let m = r.m as i64;
    let datum = datum_of(d.base(), d.twist(), m)?;
    let fam = InvariantFamily::of(r);
    let target: Vec<bool> = datum.exponents.iter().zip(&datum.residues).map(|(e, res)| (e + res) % m == m - 1).collect();
    let one = 1 % r.m;
    let g1: Vec<usize> = (0..r.basis.len()).filter(|&k| r.basis[k].degree == one).collect();
    let maxdeg = fam.degrees.iter().copied().max().unwrap_or(0);
    let xs: Vec<Fp> = (0..=maxdeg as u64).map(Fp::new).collect();
    let mut rng = rng_for(seed, "jacobian");
    let mut best = 0;
    for _ in 0..trials {
        let mut y = vec![Fp::ZERO; r.basis.len()];
        for &k in &g1 {
            y[k] = Fp::random(&mut rng);
        }
        let at_y = fam.evaluate(&assemble(r, &y, |_| Fp::ONE));
        if let Some(j) = (0..fam.len()).find(|&j| !target[j] && !at_y[j].is_zero()) {
            return Err(Error::Mismatch(format!("generator {j} of {d} does not vanish on g_1")));
        }
        let mut rows = vec![Vec::with_capacity(g1.len()); fam.len()];
        for &k in &g1 {
            let values: Vec<Vec<Fp>> = xs
                .iter()
                .map(|&s| {
                    let mut z = y.clone();
                    z[k] += s;
                    fam.evaluate(&assemble(r, &z, |_| Fp::ONE))
                })
                .collect();
            for (j, row) in rows.iter_mut().enumerate() {
                let p = interpolate(&xs, &values.iter().map(|v| v[j]).collect::<Vec<_>>());
                row.push(p.get(1).copied().unwrap_or(Fp::ZERO));
            }
        }
        let jac: Vec<Vec<Fp>> = rows.into_iter().zip(&target).filter(|(_, &t)| t).map(|(r, _)| r).collect();
        best = best.max(rank_fp(jac));
    }
    Ok(best)
}

/// Degrees `d_j = m_j + 1` of the basic invariants of the base type, sorted.
pub fn invariant_degrees_expected(d: &KacDiagram) -> Vec<usize> {
    root_system(d.base()).exponents.iter().map(|e| (*e + 1) as usize).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::datum::{bullet_degrees, main2_sum};
    use crate::kac::{enumerate, n_regular_inner};
    use crate::rootsystem::SimpleType;
    use rand::Rng;

    fn kd(s: &str) -> KacDiagram {
        s.parse().unwrap()
    }

    fn ty(s: &str) -> SimpleType {
        s.parse().unwrap()
    }

    #[test]
    fn small_realizations() {
        let r = realize(&kd("A1[1,1]")).unwrap();
        assert_eq!(r.v_degrees().unwrap(), vec![0, 1]);
        let r = realize(&kd("A2[1,1,1]")).unwrap();
        assert_eq!(eigen_multiplicities(&r).b, vec![1, 1, 1]);
        assert_eq!(eigen_multiplicities(&realize(&kd("B3[1,0,0,0]")).unwrap()).b, vec![7]);
        assert!(matches!(realize(&kd("G2[0,1,1]")), Err(Error::NotClassical(_))));
        assert!(matches!(realize(&kd("D4^3[1,0,1]")), Err(Error::UnsupportedTwist(_))));
    }

    #[test]
    fn realizations_match_abstract_gradings() {
        for t in SimpleType::all_up_to_rank(4).into_iter().filter(|t| t.is_classical()) {
            for twist in [1, 2] {
                for m in 1..=6 {
                    let Ok(ds) = enumerate(t, twist, m) else { continue };
                    for d in ds {
                        let r = realize(&d).unwrap_or_else(|e| panic!("{d}: {e}"));
                        assert_eq!(r.dims(), dims_of(&d), "{d}");
                    }
                }
            }
        }
    }

    #[test]
    fn outer_sl8_vector() {
        let r = realize(&kd("A7^2[1,0,0,0,1]")).unwrap();
        assert_eq!(r.dims(), vec![16, 16, 15, 16]);
    }

    fn random_matrix(n: usize, seed: u64) -> Vec<Vec<Fp>> {
        let mut rng = rng_for(seed, "matrix");
        (0..n).map(|_| (0..n).map(|_| Fp::from_i64(rng.gen_range(-3..=3))).collect()).collect()
    }

    #[test]
    fn charpoly_and_pfaffian() {
        let x = vec![vec![Fp::from_i64(1), Fp::from_i64(2)], vec![Fp::from_i64(3), Fp::from_i64(4)]];
        assert_eq!(charpoly_fp(&x), vec![Fp::ONE, Fp::from_i64(-5), Fp::from_i64(-2)]);
        for n in [2, 4, 6] {
            let a = random_matrix(n, n as u64);
            let skew: Vec<Vec<Fp>> = (0..n).map(|i| (0..n).map(|j| a[i][j] - a[j][i]).collect()).collect();
            let pf = pfaffian_fp(&skew);
            assert_eq!(pf * pf, det_fp(&skew));
        }
        let r = realize(&kd("D4[0,0,1,0,0]")).unwrap();
        let fam = InvariantFamily::of(&r);
        let mut rng = rng_for(3, "so8");
        let coeffs: Vec<Fp> = r.basis.iter().map(|_| Fp::random(&mut rng)).collect();
        let x = assemble(&r, &coeffs, |_| Fp::ONE);
        let jx = matmul(&fam.form, &x);
        let pf = pfaffian_fp(&jx);
        assert_eq!(pf * pf, det_fp(&fam.form) * det_fp(&x));
    }

    #[test]
    fn interpolation_roundtrip() {
        let poly = [Fp::from_i64(3), Fp::ZERO, Fp::from_i64(-2), Fp::from_i64(5)];
        let xs = points(6);
        let ys: Vec<Fp> = xs.iter().map(|&t| poly.iter().rev().fold(Fp::ZERO, |acc, &c| acc * t + c)).collect();
        let c = interpolate(&xs, &ys);
        assert_eq!(&c[..4], &poly);
        assert!(c[4..].iter().all(|v| v.is_zero()));
    }

    #[test]
    fn invariant_degrees_are_exponents_plus_one() {
        for s in ["A3[1,0,0,0]", "B3[1,0,0,0]", "C3[1,0,0,0]", "D4[1,0,0,0,0]", "D5[1,0,0,0,0,0]", "A4^2[1,0,0]", "D4^2[1,0,0,0]"] {
            let d = kd(s);
            let fam = InvariantFamily::of(&realize(&d).unwrap());
            assert_eq!(fam.degrees, invariant_degrees_expected(&d), "{s}");
        }
    }

    #[test]
    fn phi_degrees_small() {
        let r = realize(&kd("A1[1,1]")).unwrap();
        let p = phi_profile(&r, 3, 1).unwrap();
        assert_eq!(p.phi_degrees, vec![2]);
        assert_eq!(p.supports, vec![vec![0, 2]]);
        let r = realize(&kd("A2[0,1,0]")).unwrap();
        assert_eq!(phi_profile(&r, 3, 1).unwrap().phi_degrees, vec![0, 0]);
    }

    #[test]
    fn nregular_sl3_order_three() {
        let d = n_regular_inner(ty("A2"), 3).unwrap();
        let r = realize(&d).unwrap();
        let p = phi_profile(&r, 3, 7).unwrap();
        let datum = datum_of(ty("A2"), 1, 3).unwrap();
        assert_eq!(p.phi_degrees, bullet_degrees(&datum).iter().map(|&b| b as usize).collect::<Vec<_>>());
        assert_eq!(p.supports, vec![vec![0, 3], vec![0, 3, 6]]);
        let total: usize = p.supports.iter().map(|s| s.len()).sum();
        assert_eq!(total as i64, main2_sum(&datum).unwrap());
        assert!(ggs_sum_check(&r, 3, 7).unwrap().certified);
        assert_eq!(restricted_jacobian_rank(&r, 2, 7).unwrap(), datum.k[2]);
    }

    #[test]
    fn sovpad_small() {
        for s in ["A2[1,1,1]", "A3[0,1,1,0]", "C3[1,0,1,0]", "C3[0,1,0,1]"] {
            assert!(sovpad_check(&kd(s), 2, 5).unwrap().passed, "{s}");
        }
    }

    #[test]
    fn vinberg_rank() {
        let r = realize(&kd("D4^2[1,1,0,0]")).unwrap();
        let e = eigen_multiplicities(&r);
        assert!(e.type_one);
        assert_eq!(e.b.iter().sum::<usize>(), 8);
        for j in 1..e.m {
            assert_eq!(e.b[j], e.b[e.m - j]);
        }
        assert!(vinberg_rank_so(&e).unwrap() >= 1);
        assert!(vinberg_rank_so(&eigen_multiplicities(&realize(&kd("C3[1,0,0,1]")).unwrap())).is_err());
    }

    #[test]
    fn jacobian_identity_automorphism() {
        let r = realize(&kd("B3[1,0,0,0]")).unwrap();
        assert_eq!(restricted_jacobian_rank(&r, 2, 1).unwrap(), 3);
    }
}
