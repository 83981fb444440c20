//! Named verification suites. Each suite sweeps a family of diagrams and
//! emits one record per check; a record is `certified` when a proven
//! statement backs the expected value and `observed` otherwise.

use crate::classical::{eigen_multiplicities, ggs_sum_check, realize, restricted_jacobian_rank, sovpad_check, vinberg_rank_so};
use crate::contraction::{contract_zero, parabolic_contraction_with_zdeg, same_bracket};
use crate::datum::{
    b_value, bullet_degrees, d_theta, datum_of, friendly_pairs, main2_sum, nreg_dims, nreg_label_shape_check, upsilon,
};
use crate::error::{Error, Result};
use crate::grading::{dims_of, grading_of};
use crate::index::{generic_orbit_data, index_of, index_theorem};
use crate::kac::{collapse, enumerate, enumerate_bounded, equivalent, n_regular_inner, KacDiagram};
use crate::rootsystem::{affine_diagram, all_diagrams_up_to_rank, root_system, Family, SimpleType};
use crate::chevalley::chevalley;
use serde::Serialize;
use std::collections::BTreeMap;

pub const SUITES: [&str; 16] = [
    "jacobi",
    "dtheta",
    "semidir",
    "collapse",
    "index-sl",
    "index-so",
    "index-sp",
    "index-g2",
    "index-small",
    "f4",
    "nreg",
    "friendly",
    "ggs",
    "arithmetic",
    "vinberg",
    "vklad",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Claim {
    Certified,
    Observed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Value {
    Int(i64),
    Ints(Vec<i64>),
    Flag(bool),
    Text(String),
}

impl From<i64> for Value {
    fn from(v: i64) -> Self {
        Value::Int(v)
    }
}

impl From<usize> for Value {
    fn from(v: usize) -> Self {
        Value::Int(v as i64)
    }
}

impl From<bool> for Value {
    fn from(v: bool) -> Self {
        Value::Flag(v)
    }
}

impl From<Vec<usize>> for Value {
    fn from(v: Vec<usize>) -> Self {
        Value::Ints(v.into_iter().map(|x| x as i64).collect())
    }
}

impl From<Vec<i64>> for Value {
    fn from(v: Vec<i64>) -> Self {
        Value::Ints(v)
    }
}

impl From<String> for Value {
    fn from(v: String) -> Self {
        Value::Text(v)
    }
}

impl From<&str> for Value {
    fn from(v: &str) -> Self {
        Value::Text(v.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub suite: String,
    pub check: String,
    pub diagram: String,
    pub values: BTreeMap<String, Value>,
    pub claim: Claim,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckRecord {
    /// A failed certified check; observed values never fail a run.
    pub fn is_failure(&self) -> bool {
        self.claim == Claim::Certified && !self.passed
    }
}

/// Sweep bounds; `None` selects the suite's default range.
#[derive(Clone, Debug)]
pub struct Bounds {
    pub seed: u64,
    pub trials: usize,
    pub max_rank: Option<usize>,
    pub max_order: Option<i64>,
    pub max_n: Option<usize>,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { seed: 1, trials: 5, max_rank: None, max_order: None, max_n: None }
    }
}

impl Bounds {
    fn rank(&self, default: usize) -> usize {
        self.max_rank.unwrap_or(default)
    }

    fn order(&self, default: i64) -> i64 {
        self.max_order.unwrap_or(default)
    }

    fn n(&self, default: usize) -> usize {
        self.max_n.unwrap_or(default)
    }

    /// Seed for one check, derived from the run seed and the check id.
    pub fn check_seed(&self, id: &str) -> u64 {
        let mut h: u64 = 0xcbf2_9ce4_8422_2325 ^ self.seed;
        for b in id.bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
        h
    }
}

struct Recorder {
    suite: &'static str,
    out: Vec<CheckRecord>,
}

impl Recorder {
    fn new(suite: &'static str) -> Self {
        Recorder { suite, out: Vec::new() }
    }

    fn push(
        &mut self,
        check: &str,
        diagram: impl ToString,
        values: Vec<(&str, Value)>,
        claim: Claim,
        passed: bool,
        note: Option<String>,
    ) {
        self.out.push(CheckRecord {
            suite: self.suite.to_string(),
            check: check.to_string(),
            diagram: diagram.to_string(),
            values: values.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
            claim,
            passed,
            note,
        });
    }
}

fn failures_note(failed: &[String]) -> Option<String> {
    (!failed.is_empty()).then(|| {
        let shown: Vec<&str> = failed.iter().take(5).map(|s| s.as_str()).collect();
        format!("failing: {}", shown.join(" "))
    })
}

fn ty(family: Family, rank: usize) -> SimpleType {
    SimpleType::new(family, rank).expect("valid type")
}

pub fn run_suite(name: &str, b: &Bounds) -> Result<Vec<CheckRecord>> {
    match name {
        "jacobi" => jacobi(b),
        "dtheta" => dtheta(b),
        "semidir" => semidir(b),
        "collapse" => collapse_suite(b),
        "index-sl" => index_sl(b),
        "index-so" => index_so(b),
        "index-sp" => index_sp(b),
        "index-g2" => index_g2(b),
        "index-small" => index_small(b),
        "f4" => f4(b),
        "nreg" => nreg(b),
        "friendly" => friendly(b),
        "ggs" => ggs(b),
        "arithmetic" => arithmetic(b),
        "vinberg" => vinberg(b),
        "vklad" => vklad(b),
        _ => Err(Error::UnknownSuite(name.to_string())),
    }
}

/// Exhaustive Jacobi identity and antisymmetry for every simple type with `dim ≤ 250`.
fn jacobi(b: &Bounds) -> Result<Vec<CheckRecord>> {
    let mut rec = Recorder::new("jacobi");
    for t in SimpleType::all_up_to_rank(b.rank(8)).into_iter().filter(|t| t.dim() <= 250) {
        let ch = chevalley(t);
        let ok = ch.table.is_antisymmetric() && ch.table.satisfies_jacobi();
        rec.push("jacobi", t, vec![("dim", ch.dim().into())], Claim::Certified, ok, None);
    }
    Ok(rec.out)
}

/// `Σ i·dim g_i = (m/2)(dim g − dim g_0)` on every enumerated diagram.
fn dtheta(b: &Bounds) -> Result<Vec<CheckRecord>> {
    let mut rec = Recorder::new("dtheta");
    let mut families = all_diagrams_up_to_rank(b.rank(6), &[1, 2, 3]);
    if b.max_rank.is_none() {
        families.push((ty(Family::E, 7), 1));
    }
    for (t, twist) in families {
        for m in 1..=b.order(10) {
            let ds = enumerate(t, twist, m)?;
            if ds.is_empty() {
                continue;
            }
            let failed: Vec<String> = ds.iter().filter(|d| d_theta(&dims_of(d)).is_err()).map(|d| d.to_string()).collect();
            let name = affine_diagram(t, twist)?.name();
            rec.push(
                "d_theta",
                format!("{name} m={m}"),
                vec![("diagrams", ds.len().into()), ("failures", failed.len().into())],
                Claim::Certified,
                failed.is_empty(),
                failures_note(&failed),
            );
        }
    }
    Ok(rec.out)
}

/// The node used for the parabolic description: node 0 if `p_0 > 0`, else
/// any other node of mark 1 with a nonzero label.
fn parabolic_node(d: &KacDiagram) -> Option<usize> {
    (0..d.labels.len()).find(|&i| d.diagram.marks[i] == 1 && d.labels[i] > 0)
}

/// `g_(0) ≅ p ⋉ (n^−)^{ab}` on the shared Chevalley basis.
pub fn semidir_holds(d: &KacDiagram) -> Result<Option<bool>> {
    let Some(i) = parabolic_node(d) else { return Ok(None) };
    let g = grading_of(d)?;
    let z = g.zdegree.clone().ok_or_else(|| Error::Mismatch(format!("{d} is not inner")))?;
    let m = d.order();
    let moved: Vec<i64> = if i == 0 {
        z
    } else {
        z.iter().zip(&g.weight).map(|(zk, w)| zk - w[i - 1] * m).collect()
    };
    let par = parabolic_contraction_with_zdeg(&g.table, &moved);
    Ok(Some(same_bracket(&par, &contract_zero(&g))?))
}

fn semidir(b: &Bounds) -> Result<Vec<CheckRecord>> {
    let mut rec = Recorder::new("semidir");
    let mut types: Vec<SimpleType> = SimpleType::all_up_to_rank(b.rank(5));
    for extra in [ty(Family::G, 2), ty(Family::F, 4)] {
        if !types.contains(&extra) {
            types.push(extra);
        }
    }
    for t in types {
        for m in 1..=b.order(8) {
            let mut count = 0usize;
            let mut failed = Vec::new();
            for d in enumerate(t, 1, m)? {
                if let Some(ok) = semidir_holds(&d)? {
                    count += 1;
                    if !ok {
                        failed.push(d.to_string());
                    }
                }
            }
            if count > 0 {
                rec.push(
                    "parabolic",
                    format!("{t} m={m}"),
                    vec![("diagrams", count.into()), ("failures", failed.len().into())],
                    Claim::Certified,
                    failed.is_empty(),
                    failures_note(&failed),
                );
            }
        }
    }
    Ok(rec.out)
}

/// `g_(0)` depends only on the support of the labels.
pub fn collapse_holds(d: &KacDiagram) -> Result<bool> {
    let a = contract_zero(&grading_of(d)?);
    let c = contract_zero(&grading_of(&collapse(d))?);
    same_bracket(&a, &c)
}

fn collapse_suite(b: &Bounds) -> Result<Vec<CheckRecord>> {
    let mut rec = Recorder::new("collapse");
    for (t, twist) in all_diagrams_up_to_rank(b.rank(5), &[1, 2, 3]) {
        let ds = enumerate_bounded(t, twist, 3)?;
        let mut failed = Vec::new();
        for d in &ds {
            if !collapse_holds(d)? {
                failed.push(d.to_string());
            }
        }
        rec.push(
            "same_bracket",
            affine_diagram(t, twist)?.name(),
            vec![("diagrams", ds.len().into()), ("failures", failed.len().into())],
            Claim::Certified,
            failed.is_empty(),
            failures_note(&failed),
        );
    }
    Ok(rec.out)
}

/// Modular index of `g_(0)` compared with `rk g`.
pub fn index_record(rec_suite: &'static str, d: &KacDiagram, b: &Bounds) -> Result<CheckRecord> {
    let g = grading_of(d)?;
    let rank = d.base().rank;
    let id = format!("{rec_suite}/{d}");
    let report = index_of(&contract_zero(&g), b.trials, b.check_seed(&id), Some(rank))?;
    let theorem = index_theorem(d);
    let mut rec = Recorder::new(rec_suite);
    rec.push(
        "index",
        d,
        vec![
            ("order", d.order().into()),
            ("dim", report.dimension.into()),
            ("rank", rank.into()),
            ("index", report.computed_index.into()),
            ("reaches_rank", report.certified.into()),
            ("certified", (report.certified && theorem.is_some()).into()),
        ],
        if theorem.is_some() { Claim::Certified } else { Claim::Observed },
        report.certified,
        Some(theorem.map_or_else(|| "not covered by a proven statement".to_string(), |s| s.to_string())),
    );
    Ok(rec.out.pop().expect("one record"))
}

fn index_sweep(
    suite: &'static str,
    families: &[(SimpleType, usize)],
    orders: impl Fn(i64) -> bool,
    max_m: i64,
    b: &Bounds,
) -> Result<Vec<CheckRecord>> {
    let mut out = Vec::new();
    for &(t, twist) in families {
        for m in (1..=max_m).filter(|&m| orders(m)) {
            for d in enumerate(t, twist, m)? {
                out.push(index_record(suite, &d, b)?);
            }
        }
    }
    Ok(out)
}

fn index_sl(b: &Bounds) -> Result<Vec<CheckRecord>> {
    let fams: Vec<(SimpleType, usize)> = (1..b.n(8)).map(|r| (ty(Family::A, r), 1)).collect();
    index_sweep("index-sl", &fams, |_| true, b.order(8), b)
}

/// Orthogonal algebras `so_N`, `5 ≤ N ≤ max`, inner and outer.
fn so_families(max_n: usize) -> Vec<(SimpleType, usize)> {
    let mut fams = Vec::new();
    if max_n >= 6 {
        fams.push((ty(Family::A, 3), 1));
        fams.push((ty(Family::A, 3), 2));
    }
    for l in 2.. {
        if 2 * l + 1 > max_n {
            break;
        }
        fams.push((ty(Family::B, l), 1));
    }
    for l in 4.. {
        if 2 * l > max_n {
            break;
        }
        fams.push((ty(Family::D, l), 1));
        fams.push((ty(Family::D, l), 2));
    }
    fams
}

fn index_so(b: &Bounds) -> Result<Vec<CheckRecord>> {
    index_sweep("index-so", &so_families(b.n(12)), |_| true, b.order(8), b)
}

fn index_sp(b: &Bounds) -> Result<Vec<CheckRecord>> {
    let fams: Vec<(SimpleType, usize)> = (2..=b.rank(4)).map(|l| (ty(Family::C, l), 1)).collect();
    index_sweep("index-sp", &fams, |m| m % 2 == 1, b.order(9), b)
}

fn index_g2(b: &Bounds) -> Result<Vec<CheckRecord>> {
    index_sweep("index-g2", &[(ty(Family::G, 2), 1)], |_| true, b.order(10), b)
}

fn index_small(b: &Bounds) -> Result<Vec<CheckRecord>> {
    let mut out = Vec::new();
    for (t, twist) in all_diagrams_up_to_rank(b.rank(6), &[1, 2, 3]) {
        for m in [2, 3] {
            for d in enumerate(t, twist, m)? {
                out.push(index_record("index-small", &d, b)?);
            }
        }
    }
    Ok(out)
}

/// F4 diagram of order 4 whose index is reported but not certified.
pub const F4_EXAMPLE: &str = "F4[0,0,1,0,0]";

fn f4(b: &Bounds) -> Result<Vec<CheckRecord>> {
    let d: KacDiagram = F4_EXAMPLE.parse()?;
    let g = grading_of(&d)?;
    let report = index_of(&contract_zero(&g), b.trials, b.check_seed("f4"), None)?;
    let covered = index_theorem(&d).is_some();
    let mut rec = Recorder::new("f4");
    rec.push(
        "index",
        &d,
        vec![
            ("order", d.order().into()),
            ("index", report.computed_index.into()),
            ("certified", report.certified.into()),
        ],
        Claim::Observed,
        report.computed_index >= 4 && !report.certified && !covered,
        Some("exact value unknown; reported as observed".into()),
    );
    Ok(rec.out)
}

/// `(dim g_i)` for the principal grading: roots by height mod `m`, Cartan in degree 0.
pub fn height_histogram(t: SimpleType, m: i64) -> Vec<usize> {
    let rs = root_system(t);
    let mut dims = vec![0usize; m as usize];
    dims[0] += t.rank;
    for r in &rs.roots {
        dims[crate::rootsystem::RootSystem::height(r).rem_euclid(m) as usize] += 1;
    }
    dims
}

fn nreg(b: &Bounds) -> Result<Vec<CheckRecord>> {
    let mut rec = Recorder::new("nreg");
    for t in SimpleType::all_up_to_rank(b.rank(8)) {
        let h = root_system(t).coxeter;
        for m in 1..=2 * h {
            let d = n_regular_inner(t, m)?;
            let p = &d.labels;
            let large_ok = m < h || (p[0] == m + 1 - h && p[1..].iter().all(|&x| x == 1));
            let small_ok = m > h || p.iter().all(|&x| x <= 1);
            let shape = nreg_label_shape_check(&d);
            let dims = dims_of(&d);
            let formula = nreg_dims(&datum_of(t, 1, m)?)?;
            let hist = height_histogram(t, m);
            let ok = large_ok && small_ok && shape.passed && dims == formula && dims == hist;
            rec.push(
                "n_regular",
                &d,
                vec![("order", m.into()), ("dims", dims.into()), ("formula", formula.into())],
                Claim::Certified,
                ok,
                None,
            );
        }
    }
    Ok(rec.out)
}

/// Known friendly pairs with their expected members.
pub const FRIENDLY_EXAMPLES: [(&str, usize, i64, &str, &str, [usize; 4], [usize; 4]); 3] = [
    ("E7", 1, 4, "E7[1,0,0,0,0,1,0,0]", "E7[0,0,0,0,1,0,0,0]", [33, 35, 30, 35], [33, 32, 36, 32]),
    ("E6", 1, 4, "E6[1,0,0,0,1,0,0]", "E6[0,1,1,0,0,0,1]", [20, 20, 18, 20], [20, 20, 18, 20]),
    ("A7", 2, 4, "A7^2[1,0,0,0,1]", "A7^2[0,0,1,0,0]", [16, 16, 15, 16], [16, 16, 15, 16]),
];

fn friendly(_b: &Bounds) -> Result<Vec<CheckRecord>> {
    let mut rec = Recorder::new("friendly");
    for (t, twist, m, a, c, da, dc) in FRIENDLY_EXAMPLES {
        let t: SimpleType = t.parse()?;
        let (a, c): (KacDiagram, KacDiagram) = (a.parse()?, c.parse()?);
        let pairs = friendly_pairs(t, twist, m)?;
        let found = pairs.iter().find(|p| {
            let (x, y): (KacDiagram, KacDiagram) = (p.nreg.parse().unwrap(), p.partner.parse().unwrap());
            (equivalent(&x, &a) && equivalent(&y, &c)) || (equivalent(&x, &c) && equivalent(&y, &a))
        });
        let ok = found.is_some() && dims_of(&a) == da.to_vec() && dims_of(&c) == dc.to_vec();
        rec.push(
            "friendly_pair",
            format!("{a} / {c}"),
            vec![
                ("dims", dims_of(&a).into()),
                ("partner_dims", dims_of(&c).into()),
                ("pairs_found", pairs.len().into()),
            ],
            Claim::Certified,
            ok,
            found.filter(|p| p.candidate).map(|_| "outer: N-regular member identified by its dimension vector".into()),
        );
    }
    Ok(rec.out)
}

fn ggs_record(rec: &mut Recorder, d: &KacDiagram, b: &Bounds) -> Result<()> {
    let r = realize(d)?;
    let seed = b.check_seed(&format!("ggs/{d}"));
    let trials = b.trials.clamp(1, 3);
    let g = ggs_sum_check(&r, trials, seed)?;
    let s = sovpad_check(d, trials, seed)?;
    rec.push(
        "ggs",
        d,
        vec![
            ("sum_phi", g.sum_phi.into()),
            ("d_theta", g.d_theta.into()),
            ("sovpad", s.passed.into()),
        ],
        Claim::Certified,
        g.certified && s.passed,
        None,
    );
    Ok(())
}

fn ggs(b: &Bounds) -> Result<Vec<CheckRecord>> {
    let mut rec = Recorder::new("ggs");
    let max_m = b.order(8);
    for r in 1..b.n(7) {
        for m in 1..=max_m {
            for d in enumerate(ty(Family::A, r), 1, m)? {
                ggs_record(&mut rec, &d, b)?;
            }
        }
    }
    for l in 2..=b.rank(3) {
        for m in 1..=max_m {
            for d in enumerate(ty(Family::C, l), 1, m)? {
                if d.labels[0] > 0 || d.labels[l] > 0 {
                    ggs_record(&mut rec, &d, b)?;
                }
            }
        }
    }
    Ok(rec.out)
}

fn arithmetic(b: &Bounds) -> Result<Vec<CheckRecord>> {
    let mut rec = Recorder::new("arithmetic");
    for (t, twist) in all_diagrams_up_to_rank(b.rank(8), &[1, 2, 3]) {
        let aff = affine_diagram(t, twist)?;
        for m in (1..=b.order(12)).filter(|m| m % twist as i64 == 0) {
            let datum = datum_of(t, twist, m)?;
            let dims = nreg_dims(&datum)?;
            let dt = d_theta(&dims)?;
            let ups = upsilon(&datum);
            let bullet: i64 = bullet_degrees(&datum).iter().sum();
            let main2 = main2_sum(&datum)?;
            let bv = b_value(datum.dim, dims[0], t.rank, aff.fixed_rank());
            let ok = bullet == ups && ups == dt && bv.is_integer() && bv.to_integer() == main2;
            rec.push(
                "main2",
                format!("{} m={m}", aff.name()),
                vec![
                    ("k", datum.k.clone().into()),
                    ("d_theta", dt.into()),
                    ("upsilon", ups.into()),
                    ("bullet_sum", bullet.into()),
                    ("main2_sum", main2.into()),
                    ("b", Value::Text(bv.to_string())),
                ],
                Claim::Certified,
                ok,
                None,
            );
        }
    }
    Ok(rec.out)
}

/// Orthogonal diagrams of the shapes where `g_1` has semisimple elements:
/// outer `so_{2l}` with labels in `{0,1}`, and inner `so_N` with labels in
/// `{0,1}` vanishing on the nodes of mark 1.
pub fn vinberg_diagrams(max_n: usize) -> Result<Vec<KacDiagram>> {
    let mut out = Vec::new();
    for (t, twist) in so_families(max_n) {
        if t.family == Family::A {
            continue;
        }
        for d in enumerate_bounded(t, twist, 1)? {
            let marks = &d.diagram.marks;
            let shape = twist == 2 || (0..d.labels.len()).all(|i| marks[i] != 1 || d.labels[i] == 0);
            if shape && d.order() > 1 {
                out.push(d);
            }
        }
    }
    Ok(out)
}

fn vinberg(b: &Bounds) -> Result<Vec<CheckRecord>> {
    let mut rec = Recorder::new("vinberg");
    for d in vinberg_diagrams(b.n(14))? {
        let e = eigen_multiplicities(&realize(&d)?);
        let formula = vinberg_rank_so(&e)?;
        let orbit = generic_orbit_data(&grading_of(&d)?, b.trials, b.check_seed(&format!("vinberg/{d}")))?;
        rec.push(
            "cartan_subspace",
            &d,
            vec![
                ("b", e.b.clone().into()),
                ("formula", formula.into()),
                ("quotient_dim", orbit.quotient_dim.into()),
            ],
            Claim::Certified,
            formula == orbit.quotient_dim && formula >= 1,
            None,
        );
    }
    Ok(rec.out)
}

fn vklad(b: &Bounds) -> Result<Vec<CheckRecord>> {
    let mut rec = Recorder::new("vklad");
    let max_m = b.order(6);
    for (t, twist) in all_diagrams_up_to_rank(b.rank(6), &[1, 2, 3]) {
        let name = affine_diagram(t, twist)?.name();
        for m in (1..=max_m).filter(|m| m % twist as i64 == 0) {
            let ds = enumerate(t, twist, m)?;
            if ds.is_empty() {
                continue;
            }
            let k_top = datum_of(t, twist, m)?.k[(m - 1) as usize];
            let mut failed = Vec::new();
            for d in &ds {
                let q = generic_orbit_data(&grading_of(d)?, b.trials, b.check_seed(&format!("vklad/{d}")))?.quotient_dim;
                if q > k_top {
                    failed.push(d.to_string());
                }
            }
            rec.push(
                "quotient_bound",
                format!("{name} m={m}"),
                vec![("diagrams", ds.len().into()), ("k_top", k_top.into()), ("failures", failed.len().into())],
                Claim::Certified,
                failed.is_empty(),
                failures_note(&failed),
            );
            if twist == 1 && t.is_classical() {
                let d = n_regular_inner(t, m)?;
                let seed = b.check_seed(&format!("vklad-nreg/{d}"));
                let q = generic_orbit_data(&grading_of(&d)?, b.trials, seed)?.quotient_dim;
                let jac = restricted_jacobian_rank(&realize(&d)?, b.trials.clamp(1, 3), seed)?;
                let expected = if m == 1 { 0 } else { k_top };
                rec.push(
                    "n_regular_quotient",
                    &d,
                    vec![("k_top", k_top.into()), ("quotient_dim", q.into()), ("jacobian_rank", jac.into())],
                    Claim::Certified,
                    q == expected && jac == k_top,
                    (m == 1).then(|| "m = 1: g_1 = g and the quotient is recorded as 0".into()),
                );
            }
        }
    }
    Ok(rec.out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick() -> Bounds {
        Bounds { max_rank: Some(2), max_order: Some(4), max_n: Some(5), trials: 3, ..Bounds::default() }
    }

    #[test]
    fn every_suite_runs_on_small_bounds() {
        for s in SUITES {
            let recs = run_suite(s, &quick()).unwrap_or_else(|e| panic!("{s}: {e}"));
            assert!(!recs.is_empty(), "{s}");
            for r in &recs {
                assert!(!r.is_failure(), "{s}: {r:?}");
            }
        }
    }

    #[test]
    fn unknown_suite() {
        assert!(matches!(run_suite("nope", &Bounds::default()), Err(Error::UnknownSuite(_))));
    }

    #[test]
    fn check_seeds_are_stable_and_distinct() {
        let b = Bounds::default();
        assert_eq!(b.check_seed("a"), b.check_seed("a"));
        assert_ne!(b.check_seed("a"), b.check_seed("b"));
    }

    #[test]
    fn histogram_matches_principal_grading() {
        assert_eq!(height_histogram("A2".parse().unwrap(), 3), vec![2, 3, 3]);
    }
}
