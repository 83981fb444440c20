//! Root systems in simple-root coordinates and affine (twisted) diagrams.
//!
//! Numbering follows Bourbaki for the classical and E types. F4 is numbered
//! with `α1, α2` short and `α3, α4` long, so the highest root has marks
//! `(2,4,3,2)`. G2 has `α1` short and highest root `3α1 + 2α2`.
//!
//! Cartan matrices use `A_ij = ⟨α_j, α_i^∨⟩`, so a reflection in node `i`
//! maps Kac coordinates by `p_j ↦ p_j − A_ij p_i` and marks form a right
//! null vector.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

/// A simple Lie algebra type such as `A5` or `E7`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SimpleType {
    pub family: Family,
    pub rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<SimpleType> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(SimpleType { family, rank })
        } else {
            Err(Error::InvalidRank { family: family.letter(), rank })
        }
    }

    /// Dimension of the simple Lie algebra.
    pub fn dim(self) -> usize {
        let l = self.rank;
        match self.family {
            Family::A => l * (l + 2),
            Family::B | Family::C => l * (2 * l + 1),
            Family::D => l * (2 * l - 1),
            Family::E => [78, 133, 248][l - 6],
            Family::F => 52,
            Family::G => 14,
        }
    }

    /// Every valid type of rank at most `max_rank`, in a fixed order.
    pub fn all_up_to_rank(max_rank: usize) -> Vec<SimpleType> {
        let mut out = Vec::new();
        for family in [Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G] {
            for rank in 1..=max_rank {
                if let Ok(t) = SimpleType::new(family, rank) {
                    out.push(t);
                }
            }
        }
        out
    }

    /// True for the families realized by matrices in the classical module.
    pub fn is_classical(self) -> bool {
        matches!(self.family, Family::A | Family::B | Family::C | Family::D)
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for SimpleType {
    type Err = Error;
    fn from_str(s: &str) -> Result<SimpleType> {
        let mut chars = s.chars();
        let letter = chars.next().ok_or(Error::Parse { pos: 0, msg: "empty type".into() })?;
        let family = match letter.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return Err(Error::Parse { pos: 0, msg: format!("unknown family '{letter}'") }),
        };
        let rest = &s[letter.len_utf8()..];
        let rank: usize = rest
            .parse()
            .map_err(|_| Error::Parse { pos: 1, msg: format!("bad rank '{rest}'") })?;
        SimpleType::new(family, rank)
    }
}

fn set_bond(a: &mut [Vec<i64>], i: usize, j: usize, aij: i64, aji: i64) {
    a[i][j] = aij;
    a[j][i] = aji;
}

/// Cartan matrix `A_ij = ⟨α_j, α_i^∨⟩` (0-based indices).
pub fn cartan_matrix(t: SimpleType) -> Vec<Vec<i64>> {
    let l = t.rank;
    let mut a = vec![vec![0i64; l]; l];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    match t.family {
        Family::A => (0..l - 1).for_each(|i| set_bond(&mut a, i, i + 1, -1, -1)),
        Family::B => {
            (0..l - 2).for_each(|i| set_bond(&mut a, i, i + 1, -1, -1));
            set_bond(&mut a, l - 2, l - 1, -1, -2);
        }
        Family::C => {
            (0..l - 2).for_each(|i| set_bond(&mut a, i, i + 1, -1, -1));
            set_bond(&mut a, l - 2, l - 1, -2, -1);
        }
        Family::D => {
            (0..l - 2).for_each(|i| set_bond(&mut a, i, i + 1, -1, -1));
            set_bond(&mut a, l - 3, l - 1, -1, -1);
        }
        Family::E => {
            set_bond(&mut a, 0, 2, -1, -1);
            set_bond(&mut a, 1, 3, -1, -1);
            (2..l - 1).for_each(|i| set_bond(&mut a, i, i + 1, -1, -1));
        }
        Family::F => {
            set_bond(&mut a, 0, 1, -1, -1);
            set_bond(&mut a, 1, 2, -2, -1);
            set_bond(&mut a, 2, 3, -1, -1);
        }
        Family::G => set_bond(&mut a, 0, 1, -3, -1),
    }
    a
}

/// Squared lengths `(α_i, α_i)`, scaled so the invariant form is integral.
pub fn root_norms(t: SimpleType) -> Vec<i64> {
    let l = t.rank;
    match t.family {
        Family::A | Family::D | Family::E => vec![2; l],
        Family::B => (0..l).map(|i| if i == l - 1 { 2 } else { 4 }).collect(),
        Family::C => (0..l).map(|i| if i == l - 1 { 4 } else { 2 }).collect(),
        Family::F => vec![2, 2, 4, 4],
        Family::G => vec![2, 6],
    }
}

/// Exact root data of a simple type.
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub ty: SimpleType,
    pub cartan: Vec<Vec<i64>>,
    pub norms: Vec<i64>,
    /// Invariant form on simple roots, `form[i][j] = (α_i, α_j)`.
    pub form: Vec<Vec<i64>>,
    /// Positive roots ordered by height, then lexicographically.
    pub positive: Vec<Vec<i64>>,
    /// Positive roots followed by their negatives in the same order.
    pub roots: Vec<Vec<i64>>,
    pub index: HashMap<Vec<i64>, usize>,
    pub highest: Vec<i64>,
    pub exponents: Vec<i64>,
    pub coxeter: i64,
}

impl RootSystem {
    pub fn rank(&self) -> usize {
        self.ty.rank
    }

    pub fn dim(&self) -> usize {
        self.roots.len() + self.rank()
    }

    pub fn num_positive(&self) -> usize {
        self.positive.len()
    }

    /// Marks `n_i = [δ:α_i]`.
    pub fn marks(&self) -> &[i64] {
        &self.highest
    }

    pub fn height(gamma: &[i64]) -> i64 {
        gamma.iter().sum()
    }

    pub fn inner(&self, x: &[i64], y: &[i64]) -> i64 {
        let l = self.rank();
        let mut s = 0;
        for i in 0..l {
            if x[i] == 0 {
                continue;
            }
            for j in 0..l {
                s += x[i] * self.form[i][j] * y[j];
            }
        }
        s
    }

    /// `⟨γ, α_i^∨⟩`.
    pub fn pairing(&self, gamma: &[i64], i: usize) -> i64 {
        gamma.iter().zip(&self.cartan[i]).map(|(g, a)| g * a).sum()
    }

    /// Coordinates of the coroot `γ^∨` in the basis of simple coroots.
    pub fn coroot(&self, gamma: &[i64]) -> Vec<i64> {
        let n = self.inner(gamma, gamma);
        gamma
            .iter()
            .zip(&self.norms)
            .map(|(g, ni)| {
                let v = g * ni;
                assert_eq!(v % n, 0, "coroot coefficients are integral");
                v / n
            })
            .collect()
    }

    pub fn root_index(&self, gamma: &[i64]) -> Option<usize> {
        self.index.get(gamma).copied()
    }

    pub fn is_root(&self, gamma: &[i64]) -> bool {
        self.index.contains_key(gamma)
    }
}

/// Builds the root system by closing the simple roots under root strings.
pub fn build_root_system(t: SimpleType) -> Result<RootSystem> {
    let t = SimpleType::new(t.family, t.rank)?;
    let l = t.rank;
    let cartan = cartan_matrix(t);
    let norms = root_norms(t);
    let form: Vec<Vec<i64>> = (0..l)
        .map(|i| (0..l).map(|j| norms[i] * cartan[i][j] / 2).collect())
        .collect();
    for i in 0..l {
        for j in 0..l {
            assert_eq!(form[i][j], form[j][i], "symmetrized Cartan matrix");
        }
    }
    let unit = |i: usize| -> Vec<i64> {
        let mut v = vec![0; l];
        v[i] = 1;
        v
    };
    let mut positive: Vec<Vec<i64>> = (0..l).map(unit).collect();
    let mut known: std::collections::HashSet<Vec<i64>> = positive.iter().cloned().collect();
    let mut layer = positive.clone();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for beta in &layer {
            for i in 0..l {
                let ai = unit(i);
                if *beta == ai {
                    continue;
                }
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if known.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pair: i64 = (0..l).map(|j| beta[j] * cartan[i][j]).sum();
                let q = p - pair;
                if q > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if known.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        next.sort();
        positive.extend(next.iter().cloned());
        layer = next;
    }
    positive.sort_by(|x, y| (RootSystem::height(x), x).cmp(&(RootSystem::height(y), y)));
    let mut roots = positive.clone();
    roots.extend(positive.iter().map(|r| r.iter().map(|c| -c).collect::<Vec<_>>()));
    let index = roots.iter().enumerate().map(|(k, r)| (r.clone(), k)).collect();
    let highest = positive.last().expect("nonempty root system").clone();
    let max_height = RootSystem::height(&highest);
    let mut hist = vec![0i64; max_height as usize + 2];
    for r in &positive {
        hist[RootSystem::height(r) as usize] += 1;
    }
    let mut exponents = Vec::new();
    for k in 1..=max_height as usize {
        for _ in 0..(hist[k] - hist[k + 1]) {
            exponents.push(k as i64);
        }
    }
    Ok(RootSystem {
        ty: t,
        cartan,
        norms,
        form,
        positive,
        roots,
        index,
        highest,
        exponents,
        coxeter: max_height + 1,
    })
}

/// Exponents from the height histogram of positive roots.
pub fn exponents_of(rs: &RootSystem) -> Vec<i64> {
    rs.exponents.clone()
}

/// Cached root system for a type.
pub fn root_system(t: SimpleType) -> Arc<RootSystem> {
    static CACHE: OnceLock<Mutex<HashMap<SimpleType, Arc<RootSystem>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(rs) = cache.lock().unwrap().get(&t) {
        return rs.clone();
    }
    let rs = Arc::new(build_root_system(t).expect("valid simple type"));
    cache.lock().unwrap().insert(t, rs.clone());
    rs
}

/// Affine or twisted affine Dynkin diagram with node 0 first.
#[derive(Clone, Debug)]
pub struct AffineDiagram {
    pub base: SimpleType,
    pub twist: usize,
    /// `n_i` (untwisted) or `a'_i` (twisted), node 0 first.
    pub marks: Vec<i64>,
    pub cartan: Vec<Vec<i64>>,
    /// Node permutations preserving the affine Cartan matrix.
    pub gamma: Vec<Vec<usize>>,
    /// Type of the fixed-point algebra `g^σ` (equal to `base` when untwisted).
    pub fixed_type: SimpleType,
    /// For node `i ≥ 1`, the σ-orbit of simple roots of `g` restricting to `ν_i`.
    pub orbits: Vec<Vec<usize>>,
    /// The diagram automorphism `σ` on the simple roots of `g`.
    pub perm: Vec<usize>,
}

impl AffineDiagram {
    pub fn node_count(&self) -> usize {
        self.marks.len()
    }

    pub fn name(&self) -> String {
        if self.twist == 1 {
            self.base.to_string()
        } else {
            format!("{}^{}", self.base, self.twist)
        }
    }

    /// Rank of `g^σ`, which is also the rank of `g_0` for every grading on this diagram.
    pub fn fixed_rank(&self) -> usize {
        self.node_count() - 1
    }
}

fn chain_cartan(n: usize) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    for i in 0..n.saturating_sub(1) {
        set_bond(&mut a, i, i + 1, -1, -1);
    }
    a
}

/// Graph automorphisms of a labeled diagram by backtracking search.
pub fn diagram_symmetries(a: &[Vec<i64>]) -> Vec<Vec<usize>> {
    let n = a.len();
    let mut out = Vec::new();
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn rec(
        k: usize,
        a: &[Vec<i64>],
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let n = a.len();
        if k == n {
            out.push(perm.clone());
            return;
        }
        for c in 0..n {
            if used[c] {
                continue;
            }
            if (0..k).all(|j| a[k][j] == a[c][perm[j]] && a[j][k] == a[perm[j]][c]) && a[k][k] == a[c][c] {
                perm[k] = c;
                used[c] = true;
                rec(k + 1, a, perm, used, out);
                used[c] = false;
            }
        }
        perm[k] = usize::MAX;
    }
    rec(0, a, &mut perm, &mut used, &mut out);
    out.sort();
    out
}

fn untwisted(t: SimpleType) -> AffineDiagram {
    let rs = root_system(t);
    let l = t.rank;
    let delta = &rs.highest;
    let n = l + 1;
    // Inner products among α_0 = −δ, α_1, …, α_l.
    let vec_of = |i: usize| -> Vec<i64> {
        if i == 0 {
            delta.iter().map(|c| -c).collect()
        } else {
            let mut v = vec![0; l];
            v[i - 1] = 1;
            v
        }
    };
    let vs: Vec<Vec<i64>> = (0..n).map(vec_of).collect();
    let mut cartan = vec![vec![0i64; n]; n];
    for i in 0..n {
        let nii = rs.inner(&vs[i], &vs[i]);
        for j in 0..n {
            let v = 2 * rs.inner(&vs[i], &vs[j]);
            assert_eq!(v % nii, 0);
            cartan[i][j] = v / nii;
        }
    }
    let mut marks = vec![1];
    marks.extend(delta.iter().copied());
    let gamma = diagram_symmetries(&cartan);
    AffineDiagram {
        base: t,
        twist: 1,
        marks,
        cartan,
        gamma,
        fixed_type: t,
        orbits: std::iter::once(vec![]).chain((0..l).map(|i| vec![i])).collect(),
        perm: (0..l).collect(),
    }
}

fn twisted(t: SimpleType, twist: usize) -> Result<AffineDiagram> {
    let unsupported = || Error::UnsupportedTwist(format!("{t}^{twist}"));
    let n = t.rank;
    let (cartan, marks, orbits, perm, fixed_type): (Vec<Vec<i64>>, Vec<i64>, Vec<Vec<usize>>, Vec<usize>, SimpleType) =
        match (t.family, twist) {
            (Family::A, 2) if n >= 2 && n.is_multiple_of(2) => {
                let r = n / 2;
                let mut a = chain_cartan(r + 1);
                if r == 1 {
                    set_bond(&mut a, 0, 1, -1, -4);
                } else {
                    set_bond(&mut a, 0, 1, -1, -2);
                    set_bond(&mut a, r - 1, r, -1, -2);
                }
                let mut marks = vec![1];
                marks.extend(std::iter::repeat_n(2, r));
                let orbits = std::iter::once(vec![])
                    .chain((1..=r).map(|i| vec![i - 1, n - i]))
                    .collect();
                let fixed = if r == 1 {
                    SimpleType::new(Family::A, 1)?
                } else {
                    SimpleType::new(Family::B, r)?
                };
                (a, marks, orbits, (0..n).rev().collect(), fixed)
            }
            (Family::A, 2) if n >= 3 => {
                let r = n.div_ceil(2);
                let mut a = vec![vec![0i64; r + 1]; r + 1];
                for (i, row) in a.iter_mut().enumerate() {
                    row[i] = 2;
                }
                let mut marks = vec![1, 1];
                if r == 2 {
                    set_bond(&mut a, 0, 2, -2, -1);
                    set_bond(&mut a, 1, 2, -2, -1);
                    marks.push(1);
                } else {
                    set_bond(&mut a, 0, 2, -1, -1);
                    set_bond(&mut a, 1, 2, -1, -1);
                    for i in 2..r - 1 {
                        set_bond(&mut a, i, i + 1, -1, -1);
                    }
                    set_bond(&mut a, r - 1, r, -2, -1);
                    marks.extend(std::iter::repeat_n(2, r - 2));
                    marks.push(1);
                }
                let orbits = std::iter::once(vec![])
                    .chain((1..r).map(|i| vec![i - 1, n - i]))
                    .chain(std::iter::once(vec![r - 1]))
                    .collect();
                (a, marks, orbits, (0..n).rev().collect(), SimpleType::new(Family::C, r)?)
            }
            (Family::D, 2) => {
                let r = n - 1;
                let mut a = chain_cartan(r + 1);
                set_bond(&mut a, 0, 1, -2, -1);
                set_bond(&mut a, r - 1, r, -1, -2);
                let marks = vec![1; r + 1];
                let orbits = std::iter::once(vec![])
                    .chain((1..r).map(|i| vec![i - 1]))
                    .chain(std::iter::once(vec![r - 1, r]))
                    .collect();
                let mut perm: Vec<usize> = (0..n).collect();
                perm.swap(n - 2, n - 1);
                (a, marks, orbits, perm, SimpleType::new(Family::B, r)?)
            }
            (Family::E, 2) if n == 6 => {
                let mut a = chain_cartan(5);
                set_bond(&mut a, 2, 3, -2, -1);
                let orbits = vec![vec![], vec![0, 5], vec![2, 4], vec![3], vec![1]];
                (a, vec![1, 2, 3, 2, 1], orbits, vec![5, 1, 4, 3, 2, 0], SimpleType::new(Family::F, 4)?)
            }
            (Family::D, 3) if n == 4 => {
                let mut a = chain_cartan(3);
                set_bond(&mut a, 1, 2, -3, -1);
                let orbits = vec![vec![], vec![0, 2, 3], vec![1]];
                (a, vec![1, 2, 1], orbits, vec![2, 1, 3, 0], SimpleType::new(Family::G, 2)?)
            }
            _ => return Err(unsupported()),
        };
    let gamma = diagram_symmetries(&cartan);
    Ok(AffineDiagram { base: t, twist, marks, cartan, gamma, fixed_type, orbits, perm })
}

fn build_affine_diagram(t: SimpleType, twist: usize) -> Result<AffineDiagram> {
    let t = SimpleType::new(t.family, t.rank)?;
    match twist {
        1 => Ok(untwisted(t)),
        2 | 3 => twisted(t, twist),
        _ => Err(Error::UnsupportedTwist(format!("{t}^{twist}"))),
    }
}

/// Cached affine diagram for a `(type, twist)` pair.
pub fn affine_diagram(t: SimpleType, twist: usize) -> Result<Arc<AffineDiagram>> {
    static CACHE: OnceLock<Mutex<HashMap<(SimpleType, usize), Arc<AffineDiagram>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(d) = cache.lock().unwrap().get(&(t, twist)) {
        return Ok(d.clone());
    }
    let d = Arc::new(build_affine_diagram(t, twist)?);
    cache.lock().unwrap().insert((t, twist), d.clone());
    Ok(d)
}

/// All supported `(type, twist)` pairs with `rank(type) ≤ max_rank`.
pub fn all_diagrams_up_to_rank(max_rank: usize, twists: &[usize]) -> Vec<(SimpleType, usize)> {
    let mut out = Vec::new();
    for &tw in twists {
        for t in SimpleType::all_up_to_rank(max_rank) {
            if affine_diagram(t, tw).is_ok() {
                out.push((t, tw));
            }
        }
    }
    out
}

/// Dynkin type of a connected finite-type subdiagram given by its Cartan matrix.
pub fn classify_connected(a: &[Vec<i64>]) -> SimpleType {
    let n = a.len();
    let t = |f, r| SimpleType::new(f, r).expect("classified type is valid");
    if n == 1 {
        return t(Family::A, 1);
    }
    let neighbors = |i: usize| (0..n).filter(move |&j| j != i && a[i][j] != 0);
    let mut multiple = None;
    for i in 0..n {
        for j in 0..n {
            if i != j && a[i][j] < -1 {
                multiple = Some((i, j, a[i][j]));
            }
        }
    }
    if let Some((i, _j, v)) = multiple {
        if v == -3 {
            return t(Family::G, 2);
        }
        if n == 2 {
            return t(Family::B, 2);
        }
        // a[i][j] = −2 means node i is the short end of the double bond.
        let deg_i = neighbors(i).count();
        if n == 4 && deg_i == 2 && neighbors(_j).count() == 2 {
            return t(Family::F, 4);
        }
        return if deg_i == 1 { t(Family::B, n) } else { t(Family::C, n) };
    }
    match (0..n).find(|&i| neighbors(i).count() == 3) {
        None => t(Family::A, n),
        Some(center) => {
            let mut arms: Vec<usize> = neighbors(center)
                .map(|start| {
                    let mut len = 1;
                    let (mut prev, mut cur) = (center, start);
                    loop {
                        let nxt: Vec<usize> = neighbors(cur).filter(|&x| x != prev).collect();
                        if nxt.is_empty() {
                            break;
                        }
                        prev = cur;
                        cur = nxt[0];
                        len += 1;
                    }
                    len
                })
                .collect();
            arms.sort();
            match (arms[0], arms[1]) {
                (1, 1) => t(Family::D, n),
                (1, 2) => t(Family::E, n),
                _ => panic!("subdiagram of an affine diagram is of finite type"),
            }
        }
    }
}

/// Connected components of the subdiagram on `nodes`, each classified.
pub fn subdiagram_components(a: &[Vec<i64>], nodes: &[usize]) -> Vec<SimpleType> {
    let mut seen = vec![false; nodes.len()];
    let mut out = Vec::new();
    for s in 0..nodes.len() {
        if seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut k = 0;
        while k < comp.len() {
            let u = comp[k];
            for v in 0..nodes.len() {
                if !seen[v] && a[nodes[u]][nodes[v]] != 0 {
                    seen[v] = true;
                    comp.push(v);
                }
            }
            k += 1;
        }
        comp.sort();
        let sub: Vec<Vec<i64>> = comp
            .iter()
            .map(|&u| comp.iter().map(|&v| a[nodes[u]][nodes[v]]).collect())
            .collect();
        out.push(classify_connected(&sub));
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ty(s: &str) -> SimpleType {
        s.parse().unwrap()
    }

    #[test]
    fn rank_one_case() {
        let rs = build_root_system(ty("A1")).unwrap();
        assert_eq!(rs.roots.len(), 2);
        assert_eq!(rs.highest, vec![1]);
        assert_eq!(rs.coxeter, 2);
        assert_eq!(rs.exponents, vec![1]);
    }

    #[test]
    fn g2_and_f4_marks() {
        let g2 = build_root_system(ty("G2")).unwrap();
        assert_eq!(g2.roots.len(), 12);
        assert_eq!(g2.highest, vec![3, 2]);
        assert_eq!(g2.coxeter, 6);
        let f4 = build_root_system(ty("F4")).unwrap();
        assert_eq!(f4.roots.len(), 48);
        assert_eq!(f4.highest, vec![2, 4, 3, 2]);
    }

    #[test]
    fn exponents_from_heights() {
        assert_eq!(build_root_system(ty("A2")).unwrap().exponents, vec![1, 2]);
        assert_eq!(build_root_system(ty("G2")).unwrap().exponents, vec![1, 5]);
        assert_eq!(build_root_system(ty("E8")).unwrap().exponents, vec![1, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(build_root_system(ty("D4")).unwrap().exponents, vec![1, 3, 3, 5]);
    }

    #[test]
    fn invariants_hold_for_all_types() {
        for t in SimpleType::all_up_to_rank(8) {
            let rs = build_root_system(t).unwrap();
            assert_eq!(rs.dim(), t.dim(), "{t}");
            let sum: i64 = rs.exponents.iter().sum();
            assert_eq!(sum as usize, rs.num_positive());
            let dimsum: i64 = rs.exponents.iter().map(|m| 2 * m + 1).sum();
            assert_eq!(dimsum as usize, t.dim());
            assert_eq!(RootSystem::height(&rs.highest) + 1, rs.coxeter);
            for r in &rs.roots {
                for i in 0..t.rank {
                    let p = rs.pairing(r, i);
                    let mut s = r.clone();
                    s[i] -= p;
                    assert!(rs.is_root(&s), "{t} reflection closure");
                }
            }
        }
    }

    #[test]
    fn affine_marks_are_null_vectors() {
        for (t, tw) in all_diagrams_up_to_rank(8, &[1, 2, 3]) {
            let d = affine_diagram(t, tw).unwrap();
            for row in &d.cartan {
                let s: i64 = row.iter().zip(&d.marks).map(|(a, n)| a * n).sum();
                assert_eq!(s, 0, "{}", d.name());
            }
        }
    }

    #[test]
    fn twisted_marks_match_tables() {
        let c3 = affine_diagram(ty("C3"), 1).unwrap();
        assert_eq!(c3.marks, vec![1, 2, 2, 1]);
        let a4 = affine_diagram(ty("A4"), 2).unwrap();
        assert_eq!(a4.marks, vec![1, 2, 2]);
        let d4 = affine_diagram(ty("D4"), 3).unwrap();
        assert_eq!(d4.marks, vec![1, 2, 1]);
        assert_eq!(affine_diagram(ty("E6"), 2).unwrap().fixed_type, ty("F4"));
        assert_eq!(affine_diagram(ty("A5"), 2).unwrap().fixed_type, ty("C3"));
        assert_eq!(affine_diagram(ty("A4"), 2).unwrap().fixed_type, ty("B2"));
        assert_eq!(affine_diagram(ty("D5"), 2).unwrap().fixed_type, ty("B4"));
        assert!(affine_diagram(ty("E7"), 2).is_err());
        assert!(affine_diagram(ty("D5"), 3).is_err());
    }

    #[test]
    fn gamma_transitive_on_mark_one_nodes() {
        for t in SimpleType::all_up_to_rank(8) {
            let d = affine_diagram(t, 1).unwrap();
            let ones: Vec<usize> = (0..d.node_count()).filter(|&i| d.marks[i] == 1).collect();
            for &i in &ones {
                assert!(d.gamma.iter().any(|g| g[0] == i), "{t}");
            }
        }
        let a3 = affine_diagram(ty("A3"), 1).unwrap();
        assert_eq!(a3.gamma.len(), 8);
    }

    #[test]
    fn rejects_small_d() {
        assert!(SimpleType::new(Family::D, 3).is_err());
        assert!("B1".parse::<SimpleType>().is_err());
    }

    #[test]
    fn classify_finite_parts() {
        for t in SimpleType::all_up_to_rank(8) {
            let expected = if t == ty("C2") { ty("B2") } else { t };
            assert_eq!(classify_connected(&cartan_matrix(t)), expected);
        }
    }
}
