//! The reproduction suite: one check per acceptance criterion.

use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use orrforge::aut::{automorphism_group, fixed_points_of_stabiliser, stabiliser_generators, stabiliser_is_trivial};
use orrforge::classify::{
    brute_force_orr, classify, discover_caseiii_instance, find_beautiful_tuple, h_meets_every_a_coset,
    small_groups, ExceptionCatalog, Verdict, SMALL_GROUPS,
};
use orrforge::constructions::{
    abelian_2group_orr_in, b_distinct_check, b_family_group, bx2_counting_claim, c_family_group,
    construct_bi_set, construct_bii_set, construct_c_set, construct_iii_set, imrich_connection_set,
    mutual_inneighbour_property, verify_orr, CCase, CPreset, IIIBranch, ImrichTuple,
};
use orrforge::digraph::{cayley, ConnectionSet};
use orrforge::group::is_isomorphic;
use orrforge::{FiniteGroup, Subset};

type Check = std::result::Result<String, String>;

/// Fails the check with a message unless `cond` holds.
fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lib<T>(r: orrforge::Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CriterionResult {
    pub id: &'static str,
    pub tier: u8,
    pub status: Status,
    pub seconds: f64,
    pub detail: String,
}

pub struct Criterion {
    pub id: &'static str,
    /// The lowest tier at which the criterion runs at all.
    pub tier: u8,
    pub summary: &'static str,
    run: fn(u8) -> Check,
}

impl Criterion {
    pub fn run(&self, max_tier: u8) -> CriterionResult {
        if max_tier < self.tier {
            return CriterionResult {
                id: self.id,
                tier: self.tier,
                status: Status::Skip,
                seconds: 0.0,
                detail: format!("needs tier {}", self.tier),
            };
        }
        let start = Instant::now();
        let outcome = (self.run)(max_tier);
        let (status, detail) = match outcome {
            Ok(d) => (Status::Pass, d),
            Err(d) => (Status::Fail, d),
        };
        CriterionResult {
            id: self.id,
            tier: self.tier,
            status,
            seconds: start.elapsed().as_secs_f64(),
            detail,
        }
    }
}

pub fn theorem1() -> Vec<Criterion> {
    vec![
        Criterion { id: "exceptions", tier: 1, summary: "ten exceptions certified without ORR", run: exceptions },
        Criterion { id: "c4xc2^4-deep", tier: 2, summary: "C4 x C2^4 certified without ORR", run: c4_c2_4 },
        Criterion { id: "imrich-grr", tier: 1, summary: "Imrich sets give GRRs for k = 6, 7", run: imrich },
        Criterion { id: "abelian-orr", tier: 1, summary: "abelian 2-groups up to order 128", run: abelian },
        Criterion { id: "bi-2-4", tier: 2, summary: "split family l = 2, kappa = 4", run: bi_2_4 },
        Criterion { id: "bii-instances", tier: 1, summary: "square family (0, 7) and (3, 1)", run: bii },
        Criterion { id: "c-family-k6", tier: 1, summary: "C4 x C2^6 family, case two", run: c_family },
        Criterion { id: "case-iii-2048", tier: 1, summary: "discovered order-2048 half-inversion group", run: case_iii },
        Criterion { id: "catalog-partition", tier: 1, summary: "classification of the 42 groups of order <= 16", run: catalog },
        Criterion { id: "nowitz-watkins", tier: 1, summary: "fixed points of stabilisers form subgroups", run: nowitz_watkins },
        Criterion { id: "beautiful-tuples", tier: 1, summary: "groups with beautiful tuples have ORRs", run: beautiful },
    ]
}

pub fn run_suite(max_tier: u8) -> Vec<CriterionResult> {
    theorem1().iter().map(|c| c.run(max_tier)).collect()
}

fn certified_no_orr(g: &FiniteGroup, budget: Duration) -> std::result::Result<usize, String> {
    let start = Instant::now();
    let v = lib(brute_force_orr(g, Some(budget)))?;
    let elapsed = start.elapsed();
    match v {
        Verdict::NoOrrCertified(c) => {
            lib(c.revalidate(g))?;
            ensure(elapsed < budget, || format!("{} took {elapsed:.1?}", g.name()))?;
            Ok(c.certificates.len())
        }
        other => Err(format!("{}: expected a certificate, got {}", g.name(), other.kind())),
    }
}

fn exceptions(_: u8) -> Check {
    let cat = lib(ExceptionCatalog::new())?;
    let q8 = cat.get("Q8").expect("Q8 is listed");
    let c33 = cat.get("C3^2").expect("C3^2 is listed");
    let raw = |g| orrforge::classify::CandidateSpace::new(g).raw_count();
    ensure(raw(q8) == 27 && raw(c33) == 81, || "raw candidate counts are not 27 and 81".into())?;
    let mut total = 0;
    for (name, g) in cat.groups() {
        match classify(g) {
            Ok(Verdict::Exception(n)) if n == *name => {}
            other => return Err(format!("{name} classified as {:?}", other.map(|v| v.kind()))),
        }
        if *name == "C4xC2^4" {
            continue;
        }
        total += certified_no_orr(g, Duration::from_secs(60))?;
    }
    Ok(format!("10 groups certified, {total} canonical candidates"))
}

fn c4_c2_4(_: u8) -> Check {
    let g = lib(FiniteGroup::abelian(&[4, 2, 2, 2, 2]))?;
    let n = certified_no_orr(&g, Duration::from_secs(30 * 60))?;
    Ok(format!("{n} orbit representatives certified"))
}

fn imrich(_: u8) -> Check {
    let mut out = Vec::new();
    for (k, budget) in [(6u32, 1.0), (7, 10.0)] {
        let g = lib(FiniteGroup::elementary_abelian(k))?;
        let t = lib(ImrichTuple::new(&g, (0..k).map(|i| 1usize << i).collect()))?;
        let s = imrich_connection_set(&g, &t);
        ensure(s.len() == 2 * k as usize + 1, || format!("|S| = {} for k = {k}", s.len()))?;
        let start = Instant::now();
        let r = lib(stabiliser_is_trivial(cayley(&g, s).graph(), 0, None))?;
        let secs = start.elapsed().as_secs_f64();
        ensure(r.trivial, || format!("k = {k}: non-trivial stabiliser"))?;
        ensure(secs < budget, || format!("k = {k} took {secs:.2}s"))?;
        out.push(format!("k={k}"));
    }
    Ok(format!("trivial stabilisers for {}", out.join(", ")))
}

/// Partitions of `n` into positive parts, largest first.
fn partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=n.min(max)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn abelian(_: u8) -> Check {
    let start = Instant::now();
    let mut count = 0;
    for n in 1..=7 {
        for p in partitions(n, n) {
            let elementary = p.iter().all(|&e| e == 1);
            let c4_tail = p[0] == 2 && p[1..].iter().all(|&e| e == 1);
            if elementary || c4_tail {
                continue;
            }
            let moduli: Vec<usize> = p.iter().map(|&e| 1 << e).collect();
            let g = lib(FiniteGroup::abelian(&moduli))?;
            let orr = lib(abelian_2group_orr_in(&g, &Subset::full(g.order())))?;
            let v = lib(verify_orr(&g, &orr.set, None))?;
            ensure(v.is_orr(), || format!("{moduli:?}: not an ORR"))?;
            let (delta, _) = cayley(&g, orr.set.clone()).neighbourhood_digraph();
            ensure(delta.weakly_connected(), || format!("{moduli:?}: induced digraph disconnected"))?;
            ensure(lib(automorphism_group(&delta))?.order == 1, || {
                format!("{moduli:?}: induced digraph has symmetries")
            })?;
            ensure(orr.arcs_match(&g), || format!("{moduli:?}: arcs differ from the pattern"))?;
            count += 1;
        }
    }
    let secs = start.elapsed().as_secs_f64();
    ensure(secs < 120.0, || format!("took {secs:.1}s"))?;
    Ok(format!("{count} groups"))
}

fn verified(g: &FiniteGroup, s: &ConnectionSet, budget: Duration, what: &str) -> std::result::Result<(), String> {
    let start = Instant::now();
    let v = lib(verify_orr(g, s, Some(budget)))?;
    let t = start.elapsed();
    ensure(v.is_orr() && v.generates, || format!("{what}: not an ORR"))?;
    ensure(t < budget, || format!("{what}: took {t:.1?}"))
}

fn bi_2_4(_: u8) -> Check {
    let (g, w) = lib(b_family_group(2, 4, false))?;
    let c = lib(construct_bi_set(&g, &w))?;
    verified(&g, &c.set, Duration::from_secs(300), "B(2,4)")?;
    Ok(format!("{} vertices, |S| = {}", g.order(), c.set.len()))
}

fn bii(_: u8) -> Check {
    let mut out = Vec::new();
    for (ell, kappa) in [(0, 7), (3, 1)] {
        let (g, w) = lib(b_family_group(ell, kappa, true))?;
        let c = lib(construct_bii_set(&g, &w))?;
        verified(&g, &c.set, Duration::from_secs(60), "square family")?;
        out.push(format!("({ell},{kappa}) on {} vertices, |S| = {}", g.order(), c.set.len()));
    }
    Ok(out.join(", "))
}

fn c_family(max_tier: u8) -> Check {
    let (g, w) = lib(c_family_group(6, CPreset::SwapInvolutions))?;
    let c = lib(construct_c_set(&g, &w))?;
    ensure(c.case == CCase::Two && c.set.len() == 52, || {
        format!("case {:?} with |S| = {}", c.case, c.set.len())
    })?;
    ensure(mutual_inneighbour_property(&g, &c.set, &c.tuple, c.a, true), || {
        "mutual in-neighbour property fails".into()
    })?;
    ensure(lib(b_distinct_check(&g, &c.set, &c.tuple, c.a, None))?, || "B-distinctness fails".into())?;
    if max_tier < 2 {
        return Ok("predicates hold; ORR check needs tier 2".into());
    }
    verified(&g, &c.set, Duration::from_secs(30 * 60), "C(6)")?;
    Ok("1024 vertices, |S| = 52, predicates hold, ORR verified".into())
}

fn case_iii(max_tier: u8) -> Check {
    let (g, w) = lib(discover_caseiii_instance(2048))?;
    let z = lib(w.validate(&g))?;
    ensure(2 * w.h.len() == w.n_sub.len(), || "H is not half of N".into())?;
    ensure(w.n_sub.len() == 8 * z.len(), || "|N : Z(N)| != 8".into())?;
    ensure(!h_meets_every_a_coset(&g, &w), || "H meets every coset of A".into())?;
    let c = lib(construct_iii_set(&g, &w))?;
    ensure(c.branch == IIIBranch::Elementary, || format!("branch {:?}", c.branch))?;
    ensure(c.set.is_oriented() && c.set.generates(), || "S is not an oriented generating set".into())?;
    let (tuple, y, v) = match (&c.tuple, c.coset_rep, c.v) {
        (Some(t), Some(y), Some(v)) => (t, y, v),
        _ => return Err("construction is missing its coset data".into()),
    };
    let yd = g.mul(y, w.d);
    let r = tuple.rank() as i64;
    let expected = (1i64 << r) - 2 * r - 2;
    ensure(c.set.contains(yd), || "g x3 x4 d is not in S".into())?;
    ensure(c.outneighbours_in_b(&g, yd) as i64 == expected, || {
        format!("g x3 x4 d has {} out-neighbours in B, expected {expected}", c.outneighbours_in_b(&g, yd))
    })?;
    ensure(c.outneighbours_in_b(&g, v) <= 1, || "v has more than one out-neighbour in B".into())?;
    ensure(lib(bx2_counting_claim(&g, &c.set, tuple, y))?, || "B x^2 counting claim fails".into())?;
    ensure(mutual_inneighbour_property(&g, &c.set, tuple, y, true), || {
        "mutual in-neighbour property fails".into()
    })?;
    let mut detail = format!("|G| = 2048, |S| = {}, structural checks hold", c.set.len());
    if max_tier >= 3 {
        verified(&g, &c.set, Duration::from_secs(3600), "case III")?;
        detail.push_str(", ORR verified");
    }
    Ok(detail)
}

/// The expected classification of the shipped catalog, by file stem.
fn expected_kind(key: &str) -> (&'static str, Option<&'static str>) {
    match key {
        "c2_2" | "s3" | "c2_3" | "d4" | "d5" | "d6" | "d7" | "d8" | "d4xc2" | "c2_4" => ("GeneralisedDihedral", None),
        "q8" => ("Exception", Some("Q8")),
        "c4xc2" => ("Exception", Some("C4xC2")),
        "c3_2" => ("Exception", Some("C3^2")),
        "c4xc2_2" => ("Exception", Some("C4xC2^2")),
        "c4xc2_sd_c2" => ("Exception", Some("P16a")),
        "c4od4" => ("Exception", Some("P16b")),
        _ => ("HasORR", None),
    }
}

fn catalog(_: u8) -> Check {
    let groups = lib(small_groups())?;
    ensure(groups.len() == 42, || format!("{} groups", groups.len()))?;
    for i in 0..groups.len() {
        for j in i + 1..groups.len() {
            ensure(is_isomorphic(&groups[i], &groups[j]).is_none(), || {
                format!("{} and {} are isomorphic", SMALL_GROUPS[i].key, SMALL_GROUPS[j].key)
            })?;
        }
    }
    let mut tally = [0; 3];
    for (entry, g) in SMALL_GROUPS.iter().zip(&groups) {
        let v = lib(classify(g))?;
        let (kind, name) = expected_kind(entry.key);
        let got_name = match &v {
            Verdict::Exception(n) => Some(n.as_str()),
            _ => None,
        };
        ensure(v.kind() == kind && got_name == name, || {
            format!("{}: got {} {:?}, expected {kind} {name:?}", entry.key, v.kind(), got_name)
        })?;
        if let Verdict::HasOrr(s) = &v {
            ensure(lib(verify_orr(g, s, None))?.is_orr(), || format!("{}: set fails", entry.key))?;
        }
        tally[match kind {
            "GeneralisedDihedral" => 0,
            "Exception" => 1,
            _ => 2,
        }] += 1;
    }
    Ok(format!(
        "{} generalised dihedral, {} exceptions, {} with ORR",
        tally[0], tally[1], tally[2]
    ))
}

/// Groups of order at most 24 for the random digraphs.
fn small_pool() -> std::result::Result<Vec<FiniteGroup>, String> {
    let mut pool = lib(small_groups())?;
    for n in 17..=24 {
        pool.push(lib(FiniteGroup::cyclic(n))?);
    }
    for n in 9..=12 {
        pool.push(lib(FiniteGroup::dihedral(n))?);
    }
    pool.push(lib(FiniteGroup::abelian(&[6, 3]))?);
    pool.push(lib(FiniteGroup::abelian(&[6, 2, 2]))?);
    pool.push(lib(FiniteGroup::abelian(&[10, 2]))?);
    pool.push(lib(FiniteGroup::direct_product(&lib(FiniteGroup::dihedral(3))?, &lib(FiniteGroup::cyclic(4))?))?);
    pool.push(lib(FiniteGroup::direct_product(&FiniteGroup::quaternion8(), &lib(FiniteGroup::cyclic(3))?))?);
    Ok(pool)
}

fn nowitz_watkins(_: u8) -> Check {
    let start = Instant::now();
    let pool = small_pool()?;
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for trial in 0..100 {
        let g = pool.choose(&mut rng).expect("pool is non-empty");
        let s = ConnectionSet::from_elems(g, g.elements().skip(1).filter(|_| rng.gen_bool(0.3)));
        let cay = cayley(g, s);
        let graph = cay.graph();
        let fixed = lib(fixed_points_of_stabiliser(graph, 0))?;
        ensure(g.is_subgroup(&fixed), || format!("trial {trial}: fixed points are not a subgroup"))?;
        // Setwise: a union of stabiliser orbits is invariant, and so is the
        // subgroup it generates.
        let stab = lib(stabiliser_generators(graph, 0))?;
        let orbit_of = |v: usize| {
            let mut orbit = Subset::from_elems(g.order(), [v]);
            let mut stack = vec![v];
            while let Some(u) = stack.pop() {
                for p in &stab.generators {
                    if orbit.insert(p[u]) {
                        stack.push(p[u]);
                    }
                }
            }
            orbit
        };
        let mut x = Subset::empty(g.order());
        for v in g.elements().filter(|_| rng.gen_bool(0.2)) {
            x = x.union(&orbit_of(v));
        }
        let span = g.closure_of(&x);
        let invariant = stab.generators.iter().all(|p| span.iter().all(|v| span.contains(p[v])));
        ensure(invariant, || format!("trial {trial}: generated subgroup is not invariant"))?;
    }
    let secs = start.elapsed().as_secs_f64();
    ensure(secs < 120.0, || format!("took {secs:.1}s"))?;
    Ok("100 digraphs".into())
}

fn beautiful(_: u8) -> Check {
    let groups = lib(small_groups())?;
    let cat = lib(ExceptionCatalog::new())?;
    let excluded = ["Q8", "C3^2", "C3xC2^3"].map(|n| cat.get(n).expect("listed"));
    let mut count = 0;
    for (entry, g) in SMALL_GROUPS.iter().zip(&groups) {
        if find_beautiful_tuple(g).is_none() || excluded.iter().any(|h| is_isomorphic(g, h).is_some()) {
            continue;
        }
        ensure(lib(classify(g))?.has_orr(), || format!("{}: classify found no ORR", entry.key))?;
        ensure(lib(brute_force_orr(g, None))?.has_orr(), || format!("{}: search found no ORR", entry.key))?;
        count += 1;
    }
    Ok(format!("{count} groups with beautiful tuples, all with ORRs"))
}
