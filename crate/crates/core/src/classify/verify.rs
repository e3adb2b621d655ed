//! Checks of the classification results against brute-force ground truth.
//!
//! Every check compares a value predicted by a theorem (or lemma) with the
//! value observed by exhaustive search. Checks whose hypotheses fail are
//! recorded as not applicable.

use std::sync::OnceLock;

use rand::rngs::StdRng;
use rand::{RngExt, SeedableRng};
use serde::Serialize;
use serde_json::Value;

use crate::classify::{
    affine_frame, classify_structure, miller_moreno_frame, predict_profile, quotient_rank_condition,
    scalar_affine_condition, StructureTag,
};
use crate::error::{Error, Result};
use crate::flexibility::cyc::{triple_cyclic_counterexample, triple_cyclic_sampled};
use crate::flexibility::extension::constructive_affine_extension;
use crate::flexibility::{cycliciser, CycResult, FlexEngine, FlexOptions, FlexVerdict};
use crate::group::{elementary_abelian, iso::are_isomorphic, quotient, FiniteGroup};
use crate::subgroups::{
    all_normal_subgroups, all_subgroups, closure, is_cyclic_subgroup, join_elements, minimal_normal_subgroups,
    SubgroupSet,
};

/// Groups up to this order get the exhaustive triple-cyclic check.
pub const TRIPLE_EXHAUSTIVE_ORDER: usize = 24;
/// Groups up to this order get the exhaustive constructive-extension check.
pub const EXTENSION_EXHAUSTIVE_ORDER: usize = 32;

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub flex: FlexOptions,
    /// Cross-check the minimal-normal reduction against all normal subgroups.
    pub all_normals: bool,
    pub random_triples: usize,
    pub random_extensions: usize,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            flex: FlexOptions::default(),
            all_normals: false,
            random_triples: 10_000,
            random_extensions: 1_000,
            seed: 0x5eed,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub expected: Value,
    pub observed: Value,
    pub agree: bool,
    pub details: String,
}

impl CheckRecord {
    pub fn compare(
        name: impl Into<String>,
        expected: impl Into<Value>,
        observed: impl Into<Value>,
        details: impl Into<String>,
    ) -> Self {
        let (expected, observed) = (expected.into(), observed.into());
        CheckRecord { name: name.into(), agree: expected == observed, expected, observed, details: details.into() }
    }

    pub fn not_applicable(name: impl Into<String>, reason: impl Into<String>) -> Self {
        CheckRecord {
            name: name.into(),
            expected: Value::Null,
            observed: Value::Null,
            agree: true,
            details: format!("not applicable: {}", reason.into()),
        }
    }

    pub fn is_applicable(&self) -> bool {
        !(self.expected.is_null() && self.observed.is_null())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TheoremReport {
    pub group: String,
    pub checks: Vec<CheckRecord>,
}

impl TheoremReport {
    pub fn all_agree(&self) -> bool {
        self.checks.iter().all(|c| c.agree)
    }
}

/// Per-group computations shared by the verifiers.
pub struct Analysis<'g> {
    pub group: &'g FiniteGroup,
    pub engine: FlexEngine<'g>,
    pub tag: StructureTag,
    pub cyc: CycResult,
    profile: OnceLock<Vec<FlexVerdict>>,
    cyc_quotient: OnceLock<FiniteGroup>,
}

impl<'g> Analysis<'g> {
    pub fn new(group: &'g FiniteGroup, opts: &FlexOptions) -> Result<Self> {
        Ok(Analysis {
            group,
            engine: FlexEngine::with_options(group, opts.clone()),
            tag: classify_structure(group),
            cyc: cycliciser(group)?,
            profile: OnceLock::new(),
            cyc_quotient: OnceLock::new(),
        })
    }

    pub fn d(&self) -> usize {
        self.engine.rank()
    }

    pub fn profile(&self) -> &[FlexVerdict] {
        self.profile.get_or_init(|| self.engine.profile())
    }

    pub fn verdict(&self, k: usize) -> &FlexVerdict {
        &self.profile()[k - 1]
    }

    pub fn cyc_subgroup(&self) -> SubgroupSet {
        closure(self.group, &[self.cyc.generator]).expect("index in range")
    }

    pub fn cyc_quotient(&self) -> &FiniteGroup {
        self.cyc_quotient.get_or_init(|| quotient(self.group, &self.cyc_subgroup()).expect("normal").0)
    }
}

fn certificate(a: &Analysis, k: usize) -> String {
    let v = a.verdict(k);
    match &v.counterexample {
        Some(t) => {
            let labels: Vec<&str> = t.iter().map(|&x| a.group.label(x)).collect();
            format!(
                "{}: k={k} counterexample {:?} ({}) has rank {k} and no extension of size {} (exhaustive)",
                a.group.origin(),
                t,
                labels.join(", "),
                a.d() - k
            )
        }
        None => format!("{}: k={k} flexible (exhaustive)", a.group.origin()),
    }
}

/// 1-flexible iff `d(G/N) < d(G)` for every nontrivial normal `N`.
pub fn verify_thm_1_flexible(a: &Analysis, opts: &VerifyOptions) -> Result<Vec<CheckRecord>> {
    let g = a.group;
    if g.order() == 1 {
        return Err(Error::TrivialGroup);
    }
    let d = a.d();
    let (cond, witness) = quotient_rank_condition(g, d, false);
    let observed = a.verdict(1).flexible;
    let mut details = certificate(a, 1);
    if let Some((n, dq)) = witness {
        details.push_str(&format!("; minimal normal N of order {n} has d(G/N) = {dq} = d(G)"));
    }
    let mut out =
        vec![CheckRecord::compare("1-flexible: 1-flexible iff d(G/N) < d(G) for all N", cond, observed, details)];
    if opts.all_normals {
        let (all, _) = quotient_rank_condition(g, d, true);
        out.push(CheckRecord::compare(
            "1-flexible: minimal-normal reduction matches all normal subgroups",
            all,
            cond,
            format!("d(G) = {d}"),
        ));
    }
    Ok(out)
}

/// Predicted verdicts against the brute-force profile, `k < d(G)` (and `k = 2`
/// when `d(G) = 2`).
pub fn verify_predictions(a: &Analysis) -> Result<Vec<CheckRecord>> {
    let preds = match predict_profile(a.group, &a.tag, a.d()) {
        Ok(p) => p,
        Err(Error::UnclassifiedStructure) => {
            return Ok(vec![CheckRecord::not_applicable("profile prediction", "structure unclassified")])
        }
        Err(e) => return Err(e),
    };
    Ok(preds
        .iter()
        .map(|p| {
            CheckRecord::compare(
                format!("profile: predicted k={} verdict ({})", p.k, p.basis),
                p.flexible,
                a.verdict(p.k).flexible,
                certificate(a, p.k),
            )
        })
        .collect())
}

/// For `d(G) >= 3`: 2-flexible, k-flexible for all `2 <= k < d`, and
/// `G/Cyc(G) = p^r:<g>` scalar with `r = d - d(<g>)` are equivalent; adding
/// 1-flexibility corresponds to `G` itself having that shape.
pub fn verify_thm_2_flexible(a: &Analysis) -> Result<Vec<CheckRecord>> {
    let d = a.d();
    if d < 3 {
        return Err(Error::RankTooSmall(d));
    }
    let two = a.verdict(2).flexible;
    let all_k = (2..d).all(|k| a.verdict(k).flexible);
    let qtag = classify_structure(a.cyc_quotient());
    let shape = scalar_affine_condition(&qtag, d);
    let one_two = a.verdict(1).flexible && two;
    let all_from_one = (1..d).all(|k| a.verdict(k).flexible);
    let g_shape = scalar_affine_condition(&a.tag, d);

    let first_fail = |from: usize| match (from..d).find(|&k| !a.verdict(k).flexible) {
        Some(k) => certificate(a, k),
        None => format!("{}: k-flexible for all {from} <= k < {d} (exhaustive)", a.group.origin()),
    };
    let shape_note =
        format!("G/Cyc(G) (order {}) tagged {qtag}; G tagged {}; d = {d}", a.cyc_quotient().order(), a.tag);
    Ok(vec![
        CheckRecord::compare("2-flexible: (i) 2-flexible iff (ii) k-flexible for 2<=k<d", two, all_k, first_fail(2)),
        CheckRecord::compare("2-flexible: (iii) G/Cyc(G) scalar affine iff (i)", shape, two, shape_note.clone()),
        CheckRecord::compare("2-flexible: (iii) iff (ii)", shape, all_k, shape_note.clone()),
        CheckRecord::compare("scalar affine: G scalar affine iff 1- and 2-flexible", g_shape, one_two, first_fail(1)),
        CheckRecord::compare(
            "scalar affine: G scalar affine iff k-flexible for 1<=k<d",
            g_shape,
            all_from_one,
            shape_note,
        ),
    ])
}

/// For `d(G) = 2`: 2-flexible iff every proper subgroup is cyclic iff the
/// group is `p^2`, `Q8` or Miller–Moreno; 1- and 2-flexible iff `p^2` or
/// `p:<g>` with `g` of prime order.
pub fn verify_d2_case(a: &Analysis) -> Result<Vec<CheckRecord>> {
    let d = a.d();
    if d != 2 {
        return Err(Error::RankMismatch(d));
    }
    let g = a.group;
    let two = a.verdict(2).flexible;
    let one = a.verdict(1).flexible;
    let subs = all_subgroups(g)?;
    let noncyclic = subs.iter().find(|s| s.order() < g.order() && is_cyclic_subgroup(g, s).is_none());
    let proper_cyclic = noncyclic.is_none();
    let listed = a.tag.is_p_squared() || matches!(a.tag, StructureTag::Q8Tag | StructureTag::MillerMoreno { .. });
    let prime_order_action = a.tag.is_p_squared() || matches!(a.tag, StructureTag::MillerMoreno { m: 1, .. });
    let sub_note = match noncyclic {
        Some(s) => format!("noncyclic proper subgroup {:?}", s.members()),
        None => "every proper subgroup cyclic".to_string(),
    };
    let mut out = vec![
        CheckRecord::compare(
            "d2: 2-flexible iff every proper subgroup cyclic",
            proper_cyclic,
            two,
            format!("{}; {sub_note}", certificate(a, 2)),
        ),
        CheckRecord::compare(
            "d2: 2-flexible iff p^2, Q8 or Miller-Moreno",
            listed,
            two,
            format!("tag {}; {}", a.tag, certificate(a, 2)),
        ),
        CheckRecord::compare(
            "d2: 1- and 2-flexible iff p^2 or p:<g> with g of prime order",
            prime_order_action,
            one && two,
            format!("tag {}; {}", a.tag, certificate(a, 1)),
        ),
    ];
    if let StructureTag::MillerMoreno { q, m, .. } = a.tag {
        if m > 1 {
            let (_, _, b) = miller_moreno_frame(g).expect("tagged Miller-Moreno");
            let bq = g.pow(b, q as usize);
            let central = g.elements().all(|x| g.mul(bq, x) == g.mul(x, bq));
            let observed = a.verdict(1).counterexample.as_deref() == Some(&[bq][..]);
            out.push(CheckRecord::compare(
                "d2: central b^q obstructs 1-flexibility",
                true,
                observed && central && bq != g.identity(),
                format!("b^q = {} ({}); {}", bq, g.label(bq), certificate(a, 1)),
            ));
        }
    }
    Ok(out)
}

/// The supporting lemmas, each guarded by its hypotheses.
pub fn verify_lemma_suite(a: &Analysis, opts: &VerifyOptions) -> Result<Vec<CheckRecord>> {
    let g = a.group;
    let d = a.d();
    let mut out = Vec::new();
    let normals = all_normal_subgroups(g);
    let cyc = a.cyc_subgroup();

    // Quotients never need more generators; k-flexibility passes to
    // quotients of the same rank.
    let mut rank_violation = None;
    let mut pairs = 0usize;
    let mut quotient_violation = None;
    let mut cyc_min_violation = None;
    let mut cyc_min_checked = 0usize;
    for n in normals.iter().filter(|n| !n.is_trivial()) {
        let (q, _) = quotient(g, n)?;
        let qa = Analysis::new(&q, &opts.flex)?;
        if qa.d() > d && rank_violation.is_none() {
            rank_violation = Some((n.members(), qa.d()));
        }
        if qa.d() == d {
            for k in 1..d {
                if a.verdict(k).flexible {
                    pairs += 1;
                    if !qa.verdict(k).flexible && quotient_violation.is_none() {
                        quotient_violation = Some((n.members(), k));
                    }
                }
            }
        }
        if qa.cyc.is_trivial() {
            cyc_min_checked += 1;
            if !cyc.is_subgroup_of(n) && cyc_min_violation.is_none() {
                cyc_min_violation = Some(n.members());
            }
        }
    }
    if cyc.is_trivial() {
        // N = 1 is a normal subgroup with Cyc(G/N) = Cyc(G) trivial.
        cyc_min_checked += 1;
    }
    out.push(CheckRecord::compare(
        "rank: d(G/N) <= d(G) for every normal N",
        true,
        rank_violation.is_none(),
        match &rank_violation {
            Some((n, dq)) => format!("N = {n:?} gives d(G/N) = {dq} > {d}"),
            None => format!("{} normal subgroups", normals.len()),
        },
    ));
    out.push(if pairs == 0 {
        CheckRecord::not_applicable("quotient", "no k < d(G) with G k-flexible and a proper quotient of rank d(G)")
    } else {
        CheckRecord::compare(
            "quotient: k-flexibility passes to quotients with d(G/N) = d(G)",
            true,
            quotient_violation.is_none(),
            match &quotient_violation {
                Some((n, k)) => format!("N = {n:?}, k = {k}: G/N not k-flexible"),
                None => format!("{pairs} (N, k) pairs"),
            },
        )
    });

    let cq = a.cyc_quotient();
    let cqc = cycliciser(cq)?;
    out.push(CheckRecord::compare(
        "cycliciser: Cyc(G/Cyc(G)) is trivial",
        1,
        cqc.order(),
        format!("|Cyc(G)| = {}", a.cyc.order()),
    ));
    out.push(CheckRecord::compare(
        "cycliciser: Cyc(G) lies in every N with Cyc(G/N) trivial",
        true,
        cyc_min_violation.is_none(),
        match &cyc_min_violation {
            Some(n) => format!("N = {n:?} misses Cyc(G) = {:?}", a.cyc.members),
            None => format!("{cyc_min_checked} such N"),
        },
    ));

    let dq = FlexEngine::new(cq).rank();
    out.push(if d >= 2 {
        CheckRecord::compare(
            "cycliciser quotient rank: d(G/Cyc(G)) = d(G)",
            d,
            dq,
            format!("|Cyc(G)| = {}", a.cyc.order()),
        )
    } else {
        CheckRecord::not_applicable("cycliciser quotient rank", format!("d(G) = {d}"))
    });

    if d >= 3 {
        let qe = FlexEngine::with_options(cq, opts.flex.clone());
        for k in 2..d {
            let qk = if dq >= k { qe.verdict(k)?.flexible } else { false };
            out.push(CheckRecord::compare(
                format!("cycliciser quotient: k={k} G k-flexible iff G/Cyc(G) is"),
                qk,
                a.verdict(k).flexible,
                certificate(a, k),
            ));
        }
    } else {
        out.push(CheckRecord::not_applicable("cycliciser quotient", format!("no 2 <= k < d(G) = {d}")));
    }

    let two = d >= 2 && a.verdict(2).flexible;
    if two {
        out.push(CheckRecord::compare(
            "trivial cycliciser: for 2-flexible G, 1-flexible iff Cyc(G) = 1",
            a.cyc.is_trivial(),
            a.verdict(1).flexible,
            format!("Cyc(G) = {:?}; {}", a.cyc.members, certificate(a, 1)),
        ));
        let qv = FlexEngine::new(cq).verdict(1)?;
        out.push(CheckRecord::compare(
            "cycliciser quotient 1-flexible: for 2-flexible G, G/Cyc(G) is 1-flexible",
            true,
            qv.flexible,
            format!("G/Cyc(G) order {}", cq.order()),
        ));
    } else {
        out.push(CheckRecord::not_applicable("trivial cycliciser", "G is not 2-flexible"));
        out.push(CheckRecord::not_applicable("cycliciser quotient 1-flexible", "G is not 2-flexible"));
    }

    if d >= 3 && two {
        let mins = minimal_normal_subgroups(g)?;
        let bad = mins.iter().find(|n| is_cyclic_subgroup(g, n).is_none());
        out.push(CheckRecord::compare(
            "minimal normals cyclic: minimal normal subgroups are cyclic",
            true,
            bad.is_none(),
            match bad {
                Some(n) => format!("noncyclic minimal normal {:?}", n.members()),
                None => format!("{} minimal normal subgroups", mins.len()),
            },
        ));
    } else {
        out.push(CheckRecord::not_applicable("minimal normals cyclic", "needs d(G) >= 3 and 2-flexible"));
    }

    let (checked, bad) = if g.order() <= TRIPLE_EXHAUSTIVE_ORDER {
        (format!("exhaustive over {} elements", g.order()), triple_cyclic_counterexample(g))
    } else {
        let (n, bad) = triple_cyclic_sampled(g, opts.random_triples, opts.seed);
        (format!("{n} random pairwise-cyclic triples"), bad)
    };
    out.push(CheckRecord::compare(
        "triple-cyclic: pairwise cyclic triples generate a cyclic group",
        true,
        bad.is_none(),
        match bad {
            Some(t) => format!("{checked}; violated by {t:?}"),
            None => checked,
        },
    ));
    Ok(out)
}

/// Rank-k tuples (k <= r) of a scalar-affine group: all of them for small
/// groups, a seeded sample otherwise. Each entry is extended constructively
/// and the result checked to generate G.
/// A failing tuple and the reason.
type ExtensionFailure = (Vec<usize>, String);

fn extension_checks(a: &Analysis, r: usize, opts: &VerifyOptions) -> Result<(usize, Option<ExtensionFailure>)> {
    let g = a.group;
    let mut checked = 0;
    let mut run = |t: &[usize]| -> Result<Option<ExtensionFailure>> {
        checked += 1;
        match constructive_affine_extension(g, t) {
            Ok(ext) => {
                let all = closure(g, &[t, &ext[..]].concat())?;
                if all.order() == g.order() && ext.len() == a.d() - t.len() {
                    Ok(None)
                } else {
                    Ok(Some((t.to_vec(), format!("extension {ext:?} reaches order {}", all.order()))))
                }
            }
            Err(e) => Ok(Some((t.to_vec(), e.to_string()))),
        }
    };
    if g.order() <= EXTENSION_EXHAUSTIVE_ORDER {
        for k in 0..=r {
            for t in rank_tuples(a, k) {
                if let Some(f) = run(&t)? {
                    return Ok((checked, Some(f)));
                }
            }
        }
    } else {
        let mut rng = StdRng::seed_from_u64(opts.seed);
        let trivial = SubgroupSet::trivial(g);
        let mut accepted = 0;
        while accepted < opts.random_extensions {
            let k = rng.random_range(1..=r);
            let mut t: Vec<usize> = (0..k).map(|_| rng.random_range(0..g.order())).collect();
            t.sort();
            t.dedup();
            if t.len() != k {
                continue;
            }
            let s = join_elements(g, &trivial, &t);
            if a.engine.known_rank(&s) != Some(k) {
                continue;
            }
            accepted += 1;
            if let Some(f) = run(&t)? {
                return Ok((checked, Some(f)));
            }
        }
    }
    Ok((checked, None))
}

/// All sorted k-tuples generating a rank-k subgroup.
pub fn rank_tuples(a: &Analysis, k: usize) -> Vec<Vec<usize>> {
    let g = a.group;
    let mut out = Vec::new();
    let mut stack: Vec<(Vec<usize>, SubgroupSet)> = vec![(Vec::new(), SubgroupSet::trivial(g))];
    while let Some((t, s)) = stack.pop() {
        if t.len() == k {
            out.push(t);
            continue;
        }
        let lo = t.last().map_or(0, |&x| x + 1);
        for x in (lo..g.order()).rev() {
            if s.contains(x) {
                continue;
            }
            let next = join_elements(g, &s, &[x]);
            if a.engine.known_rank(&next) == Some(t.len() + 1) {
                let mut nt = t.clone();
                nt.push(x);
                stack.push((nt, next));
            }
        }
    }
    out
}

/// The worked examples: vector spaces, scalar-affine groups and `Q8`.
pub fn verify_examples(a: &Analysis, opts: &VerifyOptions) -> Result<Vec<CheckRecord>> {
    let g = a.group;
    let d = a.d();
    let mut out = Vec::new();
    match a.tag {
        StructureTag::ElementaryAbelian { p, .. } | StructureTag::CyclicPrime { p } => {
            let r = a.tag.affine_rank().expect("affine").0;
            out.push(CheckRecord::compare("vector space: d(p^r) = r", r, d, format!("p = {p}")));
            let all = (1..=d).all(|k| a.verdict(k).flexible);
            out.push(CheckRecord::compare("vector space: k-flexible for 1<=k<=r", true, all, certificate(a, 1)));
        }
        StructureTag::ScalarAffine { p, r, s, .. } if r >= 2 => {
            out.push(CheckRecord::compare("affine: d(p^r:<g>) = r+1", r + 1, d, format!("p={p} s={s}")));
            let first_fail = (1..=r).find(|&k| !a.verdict(k).flexible);
            out.push(CheckRecord::compare(
                "affine: k-flexible for 1<=k<=r",
                true,
                first_fail.is_none(),
                match first_fail {
                    Some(k) => certificate(a, k),
                    None => format!("k = 1..{r} flexible (exhaustive)"),
                },
            ));
            let (checked, fail) = extension_checks(a, r, opts)?;
            out.push(CheckRecord::compare(
                "affine: constructive extension generates G",
                true,
                fail.is_none(),
                match fail {
                    Some((t, why)) => format!("tuple {t:?}: {why}"),
                    None => format!("{checked} rank-k tuples"),
                },
            ));
        }
        StructureTag::Q8Tag => {
            out.push(CheckRecord::compare("Q8: d(Q8) = 2", 2, d, ""));
            let central = crate::subgroups::center(g);
            let inv = central.bits().iter().find(|&x| x != g.identity()).expect("centre of order 2");
            out.push(CheckRecord::compare(
                "Q8: not 1-flexible, central involution obstructs",
                Value::from(vec![inv]),
                a.verdict(1).counterexample.clone().map_or(Value::Null, Value::from),
                certificate(a, 1),
            ));
            out.push(CheckRecord::compare("Q8: 2-flexible", true, a.verdict(2).flexible, certificate(a, 2)));
            out.push(CheckRecord::compare("Q8: |Cyc(Q8)| = 2", 2, a.cyc.order(), format!("{:?}", a.cyc.members)));
            let v4 = elementary_abelian(2, 2)?;
            out.push(CheckRecord::compare(
                "Q8: Q8/Cyc(Q8) is elementary abelian of order 4",
                true,
                are_isomorphic(a.cyc_quotient(), &v4)?,
                "brute-force isomorphism search",
            ));
        }
        _ => out.push(CheckRecord::not_applicable("examples", format!("tag {}", a.tag))),
    }
    if let Some(f) = affine_frame(g) {
        if f.s != 1 && f.r == 1 {
            out.push(CheckRecord::compare("affine: d(p:<g>) = 2", 2, d, format!("tag {}", a.tag)));
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Thm1,
    Thm2,
    D2,
    Lemmas,
    Examples,
    All,
}

impl Suite {
    pub fn parse(name: &str) -> Option<Suite> {
        Some(match name {
            "thm1" => Suite::Thm1,
            "thm2" => Suite::Thm2,
            "d2" => Suite::D2,
            "lemmas" => Suite::Lemmas,
            "examples" => Suite::Examples,
            "all" => Suite::All,
            _ => return None,
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            Suite::Thm1 => "thm1",
            Suite::Thm2 => "thm2",
            Suite::D2 => "d2",
            Suite::Lemmas => "lemmas",
            Suite::Examples => "examples",
            Suite::All => "all",
        }
    }

    fn includes(self, other: Suite) -> bool {
        self == Suite::All || self == other
    }
}

fn guarded(name: &str, r: Result<Vec<CheckRecord>>) -> Result<Vec<CheckRecord>> {
    match r {
        Ok(v) => Ok(v),
        Err(e @ (Error::TrivialGroup | Error::RankTooSmall(_) | Error::RankMismatch(_))) => {
            Ok(vec![CheckRecord::not_applicable(name, e.to_string())])
        }
        Err(e) => Err(e),
    }
}

/// Runs a suite on one group. `expected_d`, when given, is checked first.
pub fn run_suite(
    g: &FiniteGroup,
    name: &str,
    suite: Suite,
    expected_d: Option<usize>,
    opts: &VerifyOptions,
) -> Result<TheoremReport> {
    let a = Analysis::new(g, &opts.flex)?;
    let mut checks = Vec::new();
    if let Some(e) = expected_d {
        checks.push(CheckRecord::compare(
            "catalog: expected d(G)",
            e,
            a.d(),
            format!("witness {:?}", a.engine.min_generators().witness),
        ));
    }
    if suite.includes(Suite::Thm1) {
        checks.extend(guarded("thm1", verify_thm_1_flexible(&a, opts))?);
        checks.extend(verify_predictions(&a)?);
    }
    if suite.includes(Suite::Thm2) {
        checks.extend(guarded("thm2", verify_thm_2_flexible(&a))?);
    }
    if suite.includes(Suite::D2) {
        checks.extend(guarded("d2", verify_d2_case(&a))?);
    }
    if suite.includes(Suite::Lemmas) {
        checks.extend(verify_lemma_suite(&a, opts)?);
    }
    if suite.includes(Suite::Examples) {
        checks.extend(verify_examples(&a, opts)?);
    }
    Ok(TheoremReport { group: name.to_string(), checks })
}

fn md_cell(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

/// Markdown summary: one table row per check.
pub fn render_markdown(reports: &[TheoremReport]) -> String {
    let mut out = String::from("| group | check | expected | observed | agree |\n|---|---|---|---|---|\n");
    for r in reports {
        for c in &r.checks {
            out.push_str(&format!(
                "| {} | {} | {} | {} | {} |\n",
                r.group,
                c.name,
                md_cell(&c.expected),
                md_cell(&c.observed),
                if !c.is_applicable() {
                    "n/a"
                } else if c.agree {
                    "yes"
                } else {
                    "**NO**"
                }
            ));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::spec::parse_group_spec as parse_spec;
    use crate::group::{cyclic, direct_product, miller_moreno, quaternion8, scalar_affine};

    fn analysis(g: &FiniteGroup) -> Analysis<'_> {
        Analysis::new(g, &FlexOptions::default()).unwrap()
    }

    #[test]
    fn thm1_examples() {
        let opts = VerifyOptions { all_normals: true, ..Default::default() };
        for (g, both) in [
            (elementary_abelian(3, 2).unwrap(), true),
            (quaternion8(), false),
            (direct_product(&cyclic(2).unwrap(), &cyclic(4).unwrap()).unwrap(), false),
        ] {
            let a = analysis(&g);
            let recs = verify_thm_1_flexible(&a, &opts).unwrap();
            assert!(recs.iter().all(|r| r.agree), "{recs:?}");
            assert_eq!(recs[0].expected, Value::Bool(both));
            assert_eq!(recs[0].observed, Value::Bool(both));
        }
        assert_eq!(verify_thm_1_flexible(&analysis(&cyclic(1).unwrap()), &opts).unwrap_err(), Error::TrivialGroup);
    }

    #[test]
    fn thm2_examples() {
        for (spec, truth) in [("E(2,3)", true), ("Aff(3,2,2)", true), ("E(2,2) x C4", false)] {
            let g = parse_spec(spec).unwrap();
            let a = analysis(&g);
            let recs = verify_thm_2_flexible(&a).unwrap();
            assert!(recs.iter().all(|r| r.agree), "{spec}: {recs:?}");
            assert_eq!(recs[0].observed, Value::Bool(truth), "{spec}");
        }
        assert_eq!(verify_thm_2_flexible(&analysis(&quaternion8())).unwrap_err(), Error::RankTooSmall(2));
    }

    #[test]
    fn d2_examples() {
        let g = miller_moreno(7, 3, 1, 2).unwrap();
        let a = analysis(&g);
        assert!(a.verdict(1).flexible && a.verdict(2).flexible);
        assert!(verify_d2_case(&a).unwrap().iter().all(|r| r.agree));

        let g = miller_moreno(5, 2, 2, 4).unwrap();
        let a = analysis(&g);
        assert!(!a.verdict(1).flexible && a.verdict(2).flexible);
        let recs = verify_d2_case(&a).unwrap();
        assert_eq!(recs.len(), 4);
        assert!(recs.iter().all(|r| r.agree), "{recs:?}");

        let g = direct_product(&cyclic(2).unwrap(), &cyclic(4).unwrap()).unwrap();
        let a = analysis(&g);
        assert!(!a.verdict(2).flexible);
        assert!(verify_d2_case(&a).unwrap().iter().all(|r| r.agree));
        assert_eq!(verify_d2_case(&analysis(&cyclic(4).unwrap())).unwrap_err(), Error::RankMismatch(1));
    }

    #[test]
    fn lemma_suite_examples() {
        let opts = VerifyOptions::default();
        let q = quaternion8();
        let recs = verify_lemma_suite(&analysis(&q), &opts).unwrap();
        let lem1 = recs.iter().find(|r| r.name.starts_with("trivial cycliciser")).unwrap();
        assert!(lem1.is_applicable() && lem1.agree);
        assert_eq!(lem1.observed, Value::Bool(false));

        let g = scalar_affine(3, 2, 2).unwrap();
        let recs = verify_lemma_suite(&analysis(&g), &opts).unwrap();
        let lem2 = recs.iter().find(|r| r.name.starts_with("minimal normals cyclic")).unwrap();
        assert!(lem2.is_applicable() && lem2.agree);
        assert!(recs.iter().all(|r| r.agree), "{recs:?}");

        let c6 = cyclic(6).unwrap();
        let recs = verify_lemma_suite(&analysis(&c6), &opts).unwrap();
        let dq = recs.iter().find(|r| r.name.starts_with("cycliciser quotient rank")).unwrap();
        assert!(!dq.is_applicable());
    }

    #[test]
    fn examples_suite() {
        let opts = VerifyOptions::default();
        for spec in ["Q8", "Aff(3,2,2)", "E(2,3)", "C5"] {
            let g = parse_spec(spec).unwrap();
            let recs = verify_examples(&analysis(&g), &opts).unwrap();
            assert!(recs.iter().all(|r| r.agree && r.is_applicable()), "{spec}: {recs:?}");
        }
    }

    #[test]
    fn report_serialisation_and_markdown() {
        let g = quaternion8();
        let rep = run_suite(&g, "Q8", Suite::Thm1, Some(2), &VerifyOptions::default()).unwrap();
        assert!(rep.all_agree());
        let json = serde_json::to_value(&rep).unwrap();
        assert_eq!(json["group"], "Q8");
        let c = &json["checks"][0];
        for key in ["name", "expected", "observed", "agree", "details"] {
            assert!(c.get(key).is_some(), "{key}");
        }
        let md = render_markdown(&[rep]);
        assert!(md.starts_with("| group | check |"));
        assert!(md.contains("| Q8 | catalog: expected d(G) | 2 | 2 | yes |"));
    }
}
