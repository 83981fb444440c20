//! Chevalley bases, diagram automorphisms and their eigenbases, the Killing
//! form, and centralizers.
//!
//! Basis order: positive root vectors (height, then lexicographic), then the
//! simple coroots `h_1..h_l`, then negative root vectors in the same order.
//! Signs come from the extraspecial-pair convention with
//! `N_{−α,−β} = −N_{α,β}` and `[e_α, e_{−α}] = h_α`.

use crate::arith::{rank_fp, rref_qw, Eis, Fp, Qw};
use crate::error::{Error, Result};
use crate::rootsystem::{affine_diagram, root_system, AffineDiagram, RootSystem, SimpleType};
use crate::table::{axpy_sparse, LieAlgebraTable, SparseVec};
use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// What a Chevalley basis vector is.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisKind {
    /// Root vector for `rs.roots[k]`.
    Root(usize),
    /// Simple coroot `h_{i+1}`.
    Cartan(usize),
}

/// The Chevalley table of a simple Lie algebra together with its root data.
#[derive(Clone, Debug)]
pub struct Chevalley {
    pub rs: Arc<RootSystem>,
    pub table: LieAlgebraTable,
    pub kind: Vec<BasisKind>,
    /// Root coordinates of each basis vector (zero on the Cartan part).
    pub weight: Vec<Vec<i64>>,
    /// `N_{α,β}` for every pair of root indices whose sum is a root.
    pub n: HashMap<(usize, usize), i64>,
}

impl Chevalley {
    pub fn dim(&self) -> usize {
        self.table.dim()
    }

    /// Basis index of the root vector for root index `k`.
    pub fn root_basis(&self, k: usize) -> usize {
        let p = self.rs.num_positive();
        if k < p {
            k
        } else {
            k + self.rs.rank()
        }
    }

    pub fn cartan_basis(&self, i: usize) -> usize {
        self.rs.num_positive() + i
    }

    /// Basis index of `e_γ` for a root given by coordinates.
    pub fn basis_of_root(&self, gamma: &[i64]) -> Option<usize> {
        self.rs.root_index(gamma).map(|k| self.root_basis(k))
    }

    /// Structure constant `N_{α,β}` by root index (0 when `α+β` is not a root).
    pub fn structure_constant(&self, a: usize, b: usize) -> i64 {
        self.n.get(&(a, b)).copied().unwrap_or(0)
    }
}

struct NSolver<'a> {
    rs: &'a RootSystem,
    np: usize,
    extra: HashMap<usize, (usize, usize)>,
    memo: HashMap<(usize, usize), i64>,
}

impl<'a> NSolver<'a> {
    fn add(&self, a: usize, b: usize) -> Option<usize> {
        let s: Vec<i64> = self.rs.roots[a].iter().zip(&self.rs.roots[b]).map(|(x, y)| x + y).collect();
        self.rs.root_index(&s)
    }

    fn neg(&self, a: usize) -> usize {
        if a < self.np {
            a + self.np
        } else {
            a - self.np
        }
    }

    fn norm(&self, a: usize) -> i64 {
        self.rs.inner(&self.rs.roots[a], &self.rs.roots[a])
    }

    /// Largest `p` with `β − pα` a root.
    fn p(&self, a: usize, b: usize) -> i64 {
        let (ra, rb) = (&self.rs.roots[a], &self.rs.roots[b]);
        let mut p = 0;
        loop {
            let v: Vec<i64> = rb.iter().zip(ra).map(|(y, x)| y - (p + 1) * x).collect();
            if self.rs.is_root(&v) {
                p += 1;
            } else {
                return p;
            }
        }
    }

    fn n(&mut self, a: usize, b: usize) -> i64 {
        if let Some(&v) = self.memo.get(&(a, b)) {
            return v;
        }
        let sum = self.add(a, b).expect("N requested for a pair whose sum is a root");
        let (pa, pb) = (a < self.np, b < self.np);
        let v = match (pa, pb) {
            (true, true) => self.positive(a, b, sum),
            (false, false) => {
                let (na, nb) = (self.neg(a), self.neg(b));
                -self.n(na, nb)
            }
            (false, true) => -self.n(b, a),
            (true, false) => {
                let nb = self.neg(b);
                if sum < self.np {
                    let r = Ratio::new(-self.norm(sum), self.norm(a)) * self.n(nb, sum);
                    assert!(r.is_integer());
                    r.to_integer()
                } else {
                    let ns = self.neg(sum);
                    let r = Ratio::new(self.norm(sum), self.norm(b)) * self.n(ns, a);
                    assert!(r.is_integer());
                    r.to_integer()
                }
            }
        };
        self.memo.insert((a, b), v);
        v
    }

    fn positive(&mut self, a: usize, b: usize, xi: usize) -> i64 {
        let (a1, b1) = self.extra[&xi];
        if (a, b) == (a1, b1) {
            return self.p(a1, b1) + 1;
        }
        if (b, a) == (a1, b1) {
            return -(self.p(a1, b1) + 1);
        }
        if a > b {
            return -self.n(b, a);
        }
        let (na, nb) = (self.neg(a), self.neg(b));
        let mut total = Ratio::new(0i64, 1);
        let diff = |s: &Self, x: usize, y: usize| -> Option<usize> {
            let v: Vec<i64> = s.rs.roots[x].iter().zip(&s.rs.roots[y]).map(|(p, q)| p - q).collect();
            s.rs.root_index(&v)
        };
        if let Some(d) = diff(self, b1, a) {
            total += Ratio::new(self.n(b1, na) * self.n(a1, nb), self.norm(d));
        }
        if let Some(d) = diff(self, a1, a) {
            total += Ratio::new(self.n(na, a1) * self.n(b1, nb), self.norm(d));
        }
        let r = total * Ratio::from_integer(self.norm(xi)) / Ratio::from_integer(self.n(a1, b1));
        assert!(r.is_integer(), "structure constant is integral");
        r.to_integer()
    }
}

/// Builds the Chevalley table of the simple Lie algebra with root system `rs`.
pub fn build_chevalley(rs: Arc<RootSystem>) -> Chevalley {
    let l = rs.rank();
    let np = rs.num_positive();
    let nroots = rs.roots.len();
    let mut extra = HashMap::new();
    for xi in 0..np {
        if RootSystem::height(&rs.positive[xi]) == 1 {
            continue;
        }
        for a in 0..np {
            let b: Vec<i64> = rs.positive[xi].iter().zip(&rs.positive[a]).map(|(x, y)| x - y).collect();
            if let Some(bi) = rs.root_index(&b) {
                if bi < np {
                    extra.insert(xi, (a, bi));
                    break;
                }
            }
        }
    }
    let mut solver = NSolver { rs: &rs, np, extra, memo: HashMap::new() };
    let mut n = HashMap::new();
    for a in 0..nroots {
        for b in 0..nroots {
            if solver.add(a, b).is_some() {
                n.insert((a, b), solver.n(a, b));
            }
        }
    }
    let dim = nroots + l;
    let mut kind = Vec::with_capacity(dim);
    let mut weight = Vec::with_capacity(dim);
    for k in 0..np {
        kind.push(BasisKind::Root(k));
        weight.push(rs.roots[k].clone());
    }
    for i in 0..l {
        kind.push(BasisKind::Cartan(i));
        weight.push(vec![0; l]);
    }
    for k in np..nroots {
        kind.push(BasisKind::Root(k));
        weight.push(rs.roots[k].clone());
    }
    let labels = kind
        .iter()
        .map(|k| match *k {
            BasisKind::Cartan(i) => format!("h{}", i + 1),
            BasisKind::Root(r) => {
                let coords: Vec<String> = rs.roots[r].iter().map(|c| c.abs().to_string()).collect();
                format!("{}[{}]", if r < np { "e" } else { "f" }, coords.join(""))
            }
        })
        .collect();
    let mut table = LieAlgebraTable::abelian(labels);
    let basis_of = |k: usize| if k < np { k } else { k + l };
    for i in 0..dim {
        for j in i + 1..dim {
            let v: SparseVec = match (kind[i], kind[j]) {
                (BasisKind::Cartan(_), BasisKind::Cartan(_)) => vec![],
                (BasisKind::Cartan(c), BasisKind::Root(r)) => {
                    vec![(j, Eis::int(rs.pairing(&rs.roots[r], c)))]
                }
                (BasisKind::Root(r), BasisKind::Cartan(c)) => {
                    vec![(i, Eis::int(-rs.pairing(&rs.roots[r], c)))]
                }
                (BasisKind::Root(r), BasisKind::Root(s)) => {
                    if r + np == s || s + np == r {
                        let pos = r.min(s);
                        let sign = if r < s { 1 } else { -1 };
                        rs.coroot(&rs.roots[pos])
                            .iter()
                            .enumerate()
                            .map(|(c, v)| (np + c, Eis::int(sign * v)))
                            .collect()
                    } else if let Some(t) = solver.add(r, s) {
                        vec![(basis_of(t), Eis::int(n[&(r, s)]))]
                    } else {
                        vec![]
                    }
                }
            };
            table.set(i, j, v);
        }
    }
    Chevalley { rs, table, kind, weight, n }
}

/// Cached Chevalley table for a type.
pub fn chevalley(t: SimpleType) -> Arc<Chevalley> {
    static CACHE: OnceLock<Mutex<HashMap<SimpleType, Arc<Chevalley>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(c) = cache.lock().unwrap().get(&t) {
        return c.clone();
    }
    let c = Arc::new(build_chevalley(root_system(t)));
    cache.lock().unwrap().insert(t, c.clone());
    c
}

/// A signed permutation of the Chevalley basis that preserves brackets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Automorphism {
    /// `σ(x_i) = sign · x_{target}`.
    pub map: Vec<(usize, i64)>,
    pub order: usize,
}

impl Automorphism {
    pub fn apply_sparse(&self, v: &[(usize, Eis)]) -> SparseVec {
        let mut out: SparseVec = v.iter().map(|&(i, c)| (self.map[i].0, c * Eis::int(self.map[i].1))).collect();
        out.sort_by_key(|e| e.0);
        out
    }

    /// `σ^k` as a signed permutation.
    pub fn power(&self, k: usize) -> Vec<(usize, i64)> {
        let n = self.map.len();
        let mut cur: Vec<(usize, i64)> = (0..n).map(|i| (i, 1)).collect();
        for _ in 0..k {
            cur = cur.iter().map(|&(t, s)| (self.map[t].0, s * self.map[t].1)).collect();
        }
        cur
    }

    pub fn preserves(&self, table: &LieAlgebraTable) -> bool {
        let n = table.dim();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let lhs = self.apply_sparse(table.get(i, j));
                let (ti, si) = self.map[i];
                let (tj, sj) = self.map[j];
                let rhs: SparseVec = table.get(ti, tj).iter().map(|&(k, c)| (k, c * Eis::int(si * sj))).collect();
                lhs == rhs
            })
        })
    }
}

/// Extends a Dynkin-diagram symmetry to an automorphism of `g` by bracketing
/// from the simple generators, then checks it.
pub fn diagram_automorphism(ch: &Chevalley, perm: &[usize]) -> Result<Automorphism> {
    let rs = &ch.rs;
    let l = rs.rank();
    if perm.len() != l || (0..l).any(|i| (0..l).any(|j| rs.cartan[perm[i]][perm[j]] != rs.cartan[i][j])) {
        return Err(Error::NotASymmetry);
    }
    let np = rs.num_positive();
    let permute = |g: &[i64]| -> Vec<i64> {
        let mut v = vec![0; l];
        for i in 0..l {
            v[perm[i]] += g[i];
        }
        v
    };
    let mut sign = vec![0i64; rs.roots.len()];
    for k in 0..np {
        let gamma = &rs.positive[k];
        if RootSystem::height(gamma) == 1 {
            sign[k] = 1;
            sign[k + np] = 1;
            continue;
        }
        let (i, beta) = (0..l)
            .find_map(|i| {
                let mut b = gamma.clone();
                b[i] -= 1;
                rs.root_index(&b).filter(|&bi| bi < np).map(|bi| (i, bi))
            })
            .expect("non-simple positive root decomposes");
        let mut ai = vec![0; l];
        ai[i] = 1;
        let a_idx = rs.root_index(&ai).unwrap();
        let pa = rs.root_index(&permute(&ai)).unwrap();
        let pb = rs.root_index(&permute(&rs.roots[beta])).unwrap();
        for (off, s_b) in [(0, sign[beta]), (np, sign[beta + np])] {
            let num = s_b * ch.structure_constant(pa + off, pb + off);
            let den = ch.structure_constant(a_idx + off, beta + off);
            if den == 0 || num % den != 0 || (num / den).abs() != 1 {
                return Err(Error::Automorphism("sign extension is inconsistent".into()));
            }
            sign[k + off] = num / den;
        }
    }
    let mut map = vec![(0usize, 0i64); ch.dim()];
    for (b, kind) in ch.kind.iter().enumerate() {
        map[b] = match *kind {
            BasisKind::Cartan(i) => (ch.cartan_basis(perm[i]), 1),
            BasisKind::Root(r) => {
                let target = rs.root_index(&permute(&rs.roots[r])).unwrap();
                (ch.root_basis(target), sign[r])
            }
        };
    }
    let mut order = 1;
    let mut p = perm.to_vec();
    while p.iter().enumerate().any(|(i, &x)| i != x) {
        p = p.iter().map(|&x| perm[x]).collect();
        order += 1;
    }
    let sigma = Automorphism { map, order };
    if !sigma.preserves(&ch.table) {
        return Err(Error::Automorphism("bracket not preserved".into()));
    }
    if sigma.power(order).iter().enumerate().any(|(i, &(t, s))| t != i || s != 1) {
        return Err(Error::Automorphism(format!("σ^{order} is not the identity")));
    }
    Ok(sigma)
}

/// `ζ_t^k` for `t ∈ {1, 2, 3}` as an Eisenstein integer.
fn root_of_unity(t: usize, k: i64) -> Eis {
    match t {
        1 => Eis::ONE,
        2 => Eis::int(if k.rem_euclid(2) == 0 { 1 } else { -1 }),
        3 => Eis::omega_pow(k),
        _ => panic!("unsupported automorphism order {t}"),
    }
}

/// The algebra `g` rewritten in a σ-eigenbasis.
#[derive(Clone, Debug)]
pub struct SigmaAdapted {
    pub diagram: Arc<AffineDiagram>,
    pub chevalley: Arc<Chevalley>,
    pub sigma: Automorphism,
    pub table: LieAlgebraTable,
    /// Eigen-index `k`: `σ u = ζ_t^k u`.
    pub eigen: Vec<usize>,
    /// `t^σ`-weight in the basis `ν_1..ν_r` of simple roots of `g^σ`.
    pub weight: Vec<Vec<i64>>,
    /// The eigenvectors in Chevalley coordinates.
    pub vectors: Vec<SparseVec>,
}

impl SigmaAdapted {
    pub fn twist(&self) -> usize {
        self.diagram.twist
    }
}

/// Eigenspace bases `g^{(σ)}_0, …, g^{(σ)}_{t−1}` of a diagram automorphism.
pub fn sigma_decomposition(sa: &SigmaAdapted) -> Vec<Vec<SparseVec>> {
    let t = sa.twist();
    let mut out = vec![Vec::new(); t];
    for (k, v) in sa.eigen.iter().zip(&sa.vectors) {
        out[*k].push(v.clone());
    }
    out
}

fn build_sigma_adapted(diagram: Arc<AffineDiagram>) -> Result<SigmaAdapted> {
    let ch = chevalley(diagram.base);
    let sigma = diagram_automorphism(&ch, &diagram.perm)?;
    let t = diagram.twist;
    let dim = ch.dim();
    let r = diagram.fixed_rank();
    let mut node_orbit = vec![0usize; ch.rs.rank()];
    for (o, nodes) in diagram.orbits.iter().enumerate().skip(1) {
        for &i in nodes {
            node_orbit[i] = o;
        }
    }
    let restrict = |w: &[i64]| -> Vec<i64> {
        let mut v = vec![0; r];
        for (i, c) in w.iter().enumerate() {
            v[node_orbit[i] - 1] += c;
        }
        v
    };
    let mut seen = vec![false; dim];
    let mut vectors = Vec::new();
    let mut eigen = Vec::new();
    let mut weight = Vec::new();
    let mut labels = Vec::new();
    let mut orbit_size = Vec::new();
    // For converting back: member basis index -> (orbit rep position, b, c_b, size).
    let mut member: Vec<(usize, i64, i64, usize)> = vec![(0, 0, 0, 0); dim];
    for start in 0..dim {
        if seen[start] {
            continue;
        }
        let mut orbit = vec![(start, 1i64)];
        let (mut cur, mut s) = sigma.map[start];
        while cur != start {
            orbit.push((cur, s));
            let (nx, ns) = sigma.map[cur];
            s *= ns;
            cur = nx;
        }
        let end_sign = s;
        for &(b, _) in &orbit {
            seen[b] = true;
        }
        let first = vectors.len();
        let w = restrict(&ch.weight[start]);
        if orbit.len() == 1 {
            let k = if end_sign == 1 { 0 } else { t / 2 };
            if t == 3 && end_sign != 1 {
                return Err(Error::Automorphism("fixed vector with eigenvalue -1 under order 3".into()));
            }
            vectors.push(vec![(start, Eis::ONE)]);
            eigen.push(k);
            weight.push(w);
            labels.push(ch.table.labels[start].clone());
            member[start] = (first, 0, 1, 1);
            orbit_size.push(1);
        } else {
            assert_eq!(orbit.len(), t, "orbit size equals the order");
            assert_eq!(end_sign, 1);
            for k in 0..t {
                let mut v: SparseVec = orbit
                    .iter()
                    .enumerate()
                    .map(|(a, &(b, c))| (b, root_of_unity(t, -((k * a) as i64)) * Eis::int(c)))
                    .collect();
                v.sort_by_key(|e| e.0);
                vectors.push(v);
                eigen.push(k);
                weight.push(w.clone());
                labels.push(format!("u{k}({})", ch.table.labels[start]));
                orbit_size.push(t);
            }
            for (a, &(b, c)) in orbit.iter().enumerate() {
                member[b] = (first, a as i64, c, t);
            }
        }
    }
    // Rewrite a Chevalley-coordinate vector in the eigenbasis.
    let convert = |v: &[(usize, Eis)]| -> Result<SparseVec> {
        let mut acc = SparseVec::new();
        for &(b, c) in v {
            let (first, a, cb, size) = member[b];
            if size == 1 {
                axpy_sparse(&mut acc, c, &[(first, Eis::ONE)]);
            } else {
                let part: SparseVec =
                    (0..size).map(|k| (first + k, root_of_unity(t, (k as i64) * a) * Eis::int(cb))).collect();
                axpy_sparse(&mut acc, c, &part);
            }
        }
        // Orbit coordinates carry a factor 1/t.
        acc.into_iter()
            .map(|(i, c)| {
                if orbit_size[i] == 1 {
                    return Ok((i, c));
                }
                c.div_exact(t as i64)
                    .map(|q| (i, q))
                    .ok_or_else(|| Error::Automorphism("eigenbasis coordinates are not integral".into()))
            })
            .collect::<Result<SparseVec>>()
    };
    let n = vectors.len();
    let mut table = LieAlgebraTable::abelian(labels);
    for i in 0..n {
        for j in i + 1..n {
            let br = ch.table.bracket_sparse(&vectors[i], &vectors[j]);
            table.set(i, j, convert(&br)?);
        }
    }
    Ok(SigmaAdapted { diagram, chevalley: ch, sigma, table, eigen, weight, vectors })
}

/// Cached σ-eigenbasis table for a twisted diagram.
pub fn sigma_adapted(t: SimpleType, twist: usize) -> Result<Arc<SigmaAdapted>> {
    static CACHE: OnceLock<Mutex<HashMap<(SimpleType, usize), Arc<SigmaAdapted>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(s) = cache.lock().unwrap().get(&(t, twist)) {
        return Ok(s.clone());
    }
    let d = affine_diagram(t, twist)?;
    if d.twist == 1 {
        return Err(Error::UnsupportedTwist(format!("{t}^1 has no outer automorphism")));
    }
    let s = Arc::new(build_sigma_adapted(d)?);
    cache.lock().unwrap().insert((t, twist), s.clone());
    Ok(s)
}

/// The Killing form as a dense matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KillingPairing {
    pub matrix: Vec<Vec<Eis>>,
}

impl KillingPairing {
    pub fn value(&self, x: &[Eis], y: &[Eis]) -> Eis {
        let mut s = Eis::ZERO;
        for (i, &a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in y.iter().enumerate() {
                if !b.is_zero() {
                    s += a * b * self.matrix[i][j];
                }
            }
        }
        s
    }

    pub fn is_nondegenerate(&self) -> bool {
        let rows: Vec<Vec<Fp>> = self.matrix.iter().map(|r| r.iter().map(|c| c.to_fp()).collect()).collect();
        rank_fp(rows) == self.matrix.len()
    }
}

/// `κ(x_i, x_j) = tr(ad x_i ∘ ad x_j)`.
pub fn killing(table: &LieAlgebraTable) -> Result<KillingPairing> {
    let n = table.dim();
    let coeff = |i: usize, l: usize, k: usize| -> Eis {
        let v = table.get(i, l);
        v.binary_search_by_key(&k, |e| e.0).map(|p| v[p].1).unwrap_or(Eis::ZERO)
    };
    let mut matrix = vec![vec![Eis::ZERO; n]; n];
    for i in 0..n {
        for j in i..n {
            let mut s = Eis::ZERO;
            for k in 0..n {
                for &(l, c) in table.get(j, k) {
                    let d = coeff(i, l, k);
                    if !d.is_zero() {
                        s += c * d;
                    }
                }
            }
            matrix[i][j] = s;
            matrix[j][i] = s;
        }
    }
    let kp = KillingPairing { matrix };
    if !kp.is_nondegenerate() {
        return Err(Error::DegenerateKilling);
    }
    Ok(kp)
}

/// Exact basis of `ker(ad x)` over `Q(ω)`, scaled to Eisenstein-integer vectors.
pub fn centralizer_basis(table: &LieAlgebraTable, x: &[Eis]) -> Vec<Vec<Qw>> {
    let n = table.dim();
    let mut rows = vec![vec![Qw::zero(); n]; n];
    for (i, &a) in x.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for k in 0..n {
            for &(l, c) in table.get(i, k) {
                rows[l][k] = rows[l][k].add(&(a * c).to_qw());
            }
        }
    }
    let pivots = rref_qw(&mut rows);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Qw::zero(); n];
            v[f] = Qw::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = Qw::zero().sub(&rows[r][f]);
            }
            v
        })
        .collect()
}

/// The centralizer `g^x` with its induced bracket. Kernel vectors are in
/// reduced form (coordinate 1 at their own free column), so coordinates of a
/// bracket are read off the free columns; the whole basis is then scaled by a
/// common denominator to make the structure constants integral.
pub fn centralizer(table: &LieAlgebraTable, x: &[Eis]) -> LieAlgebraTable {
    let basis = centralizer_basis(table, x);
    let n = table.dim();
    let free: Vec<usize> =
        basis.iter().map(|v| (0..n).find(|&c| v[c] == Qw::one() && basis.iter().filter(|w| !w[c].is_zero()).count() == 1).unwrap()).collect();
    let k = basis.len();
    let bracket_q = |u: &[Qw], v: &[Qw]| -> Vec<Qw> {
        let mut out = vec![Qw::zero(); n];
        for i in 0..n {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if v[j].is_zero() {
                    continue;
                }
                let uv = u[i].mul(&v[j]);
                for &(l, c) in table.get(i, j) {
                    out[l] = out[l].add(&uv.mul(&c.to_qw()));
                }
            }
        }
        out
    };
    let mut consts: Vec<Vec<Vec<Qw>>> = vec![vec![Vec::new(); k]; k];
    let mut denom = BigInt::one();
    for a in 0..k {
        for b in a + 1..k {
            let w = bracket_q(&basis[a], &basis[b]);
            let coords: Vec<Qw> = free.iter().map(|&f| w[f].clone()).collect();
            for c in &coords {
                denom = num_integer::Integer::lcm(&denom, &c.denominator_lcm());
            }
            consts[a][b] = coords;
        }
    }
    let scale = Qw::new(BigRational::from_integer(denom), BigRational::zero());
    let labels = (0..k).map(|i| format!("z{i}")).collect();
    let mut out = LieAlgebraTable::abelian(labels);
    for a in 0..k {
        for b in a + 1..k {
            let v: SparseVec = consts[a][b]
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i, c.mul(&scale).to_eis().expect("integral after scaling")))
                .collect();
            out.set(a, b, v);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ty(s: &str) -> SimpleType {
        s.parse().unwrap()
    }

    #[test]
    fn sl2_relations() {
        let ch = chevalley(ty("A1"));
        // basis: e, h, f
        assert_eq!(ch.table.get(0, 2), &[(1, Eis::int(1))]);
        assert_eq!(ch.table.get(1, 0), &[(0, Eis::int(2))]);
        assert_eq!(ch.table.get(1, 2), &[(2, Eis::int(-2))]);
    }

    #[test]
    fn g2_jacobi_and_root_strings() {
        let ch = chevalley(ty("G2"));
        assert_eq!(ch.dim(), 14);
        assert!(ch.table.satisfies_jacobi());
        assert!(ch.table.is_antisymmetric());
    }

    #[test]
    fn structure_constants_match_root_strings() {
        for t in SimpleType::all_up_to_rank(6).into_iter().chain([ty("E7")]) {
            let ch = chevalley(t);
            let rs = &ch.rs;
            for (&(a, b), &v) in &ch.n {
                let mut p = 0;
                loop {
                    let w: Vec<i64> = rs.roots[b].iter().zip(&rs.roots[a]).map(|(y, x)| y - (p + 1) * x).collect();
                    if rs.is_root(&w) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                assert_eq!(v.abs(), p + 1, "{t}");
            }
        }
    }

    #[test]
    fn jacobi_small_types() {
        for t in SimpleType::all_up_to_rank(5) {
            assert!(chevalley(t).table.satisfies_jacobi(), "{t}");
        }
    }

    #[test]
    fn identity_permutation_is_identity() {
        let ch = chevalley(ty("A3"));
        let s = diagram_automorphism(&ch, &[0, 1, 2]).unwrap();
        assert!(s.map.iter().enumerate().all(|(i, &(t, c))| t == i && c == 1));
        assert_eq!(s.order, 1);
    }

    #[test]
    fn non_symmetry_rejected() {
        let ch = chevalley(ty("B3"));
        assert_eq!(diagram_automorphism(&ch, &[2, 1, 0]), Err(Error::NotASymmetry));
    }

    #[test]
    fn sigma_eigenspace_dimensions() {
        let dims = |t: &str, tw| -> Vec<usize> {
            let sa = sigma_adapted(ty(t), tw).unwrap();
            sigma_decomposition(&sa).iter().map(|v| v.len()).collect()
        };
        assert_eq!(dims("A3", 2), vec![10, 5]);
        assert_eq!(dims("D4", 3), vec![14, 7, 7]);
        assert_eq!(dims("A4", 2), vec![10, 14]);
        assert_eq!(dims("D5", 2), vec![36, 9]);
        assert_eq!(dims("E6", 2), vec![52, 26]);
    }

    #[test]
    fn eigenbasis_tables_are_lie_algebras() {
        for (t, tw) in [("A2", 2), ("A3", 2), ("A4", 2), ("A5", 2), ("D4", 2), ("D5", 2), ("D4", 3), ("E6", 2)] {
            let sa = sigma_adapted(ty(t), tw).unwrap();
            assert!(sa.table.satisfies_jacobi(), "{t}^{tw}");
            // Eigen-index is additive on brackets.
            for (i, j) in sa.table.nonzero_pairs() {
                for &(k, _) in sa.table.get(i, j) {
                    assert_eq!(sa.eigen[k], (sa.eigen[i] + sa.eigen[j]) % tw);
                }
            }
        }
    }

    #[test]
    fn fixed_algebra_types() {
        // The eigenvalue-1 piece is closed and has the expected dimension.
        for (t, tw, fixed) in [("A3", 2, "C2"), ("D4", 3, "G2"), ("E6", 2, "F4"), ("A4", 2, "B2"), ("D5", 2, "B4")] {
            let sa = sigma_adapted(ty(t), tw).unwrap();
            let n0 = sa.eigen.iter().filter(|&&k| k == 0).count();
            assert_eq!(n0, ty(fixed).dim());
        }
    }

    #[test]
    fn highest_weight_of_first_eigenspace_is_delta_one() {
        for (t, tw) in [("A2", 2), ("A4", 2), ("A6", 2), ("A3", 2), ("A5", 2), ("A7", 2), ("D4", 2), ("D5", 2), ("D6", 2), ("E6", 2), ("D4", 3)] {
            let sa = sigma_adapted(ty(t), tw).unwrap();
            let marks = &sa.diagram.marks[1..];
            let top = sa
                .eigen
                .iter()
                .zip(&sa.weight)
                .filter(|(k, _)| **k == 1)
                .map(|(_, w)| w.clone())
                .max_by_key(|w| w.iter().sum::<i64>())
                .unwrap();
            assert_eq!(top, marks.to_vec(), "{t}^{tw}");
        }
    }

    #[test]
    fn sl2_killing() {
        let ch = chevalley(ty("A1"));
        let k = killing(&ch.table).unwrap();
        assert_eq!(k.matrix[1][1], Eis::int(8));
        assert_eq!(k.matrix[0][2], Eis::int(4));
        assert_eq!(k.matrix[0][0], Eis::ZERO);
    }

    #[test]
    fn killing_is_invariant() {
        let ch = chevalley(ty("B2"));
        let k = killing(&ch.table).unwrap();
        let n = ch.dim();
        let unit = |i: usize| -> Vec<Eis> {
            let mut v = vec![Eis::ZERO; n];
            v[i] = Eis::ONE;
            v
        };
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let xy = ch.table.bracket_dense(&unit(x), &unit(y));
                    let xz = ch.table.bracket_dense(&unit(x), &unit(z));
                    assert_eq!(k.value(&xy, &unit(z)) + k.value(&unit(y), &xz), Eis::ZERO);
                }
            }
        }
    }

    #[test]
    fn centralizer_examples() {
        let a1 = chevalley(ty("A1"));
        let c = centralizer(&a1.table, &[Eis::ONE, Eis::ZERO, Eis::ZERO]);
        assert_eq!(c.dim(), 1);
        let whole = centralizer(&a1.table, &[Eis::ZERO; 3]);
        assert_eq!(whole.dim(), 3);
        assert!(whole.satisfies_jacobi());
        let a2 = chevalley(ty("A2"));
        let mut x = vec![Eis::ZERO; 8];
        x[0] = Eis::ONE;
        x[1] = Eis::ONE;
        let c = centralizer(&a2.table, &x);
        assert_eq!(c.dim(), 2);
        assert!(c.is_abelian());
    }
}
