//! Check records and the built-in verification suites.

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::equations::{all_quotient_curves, BranchSet};
use crate::error::{Error, Result};
use crate::group::{
    enumerate_free_subgroups, hyperelliptic_extensions, index_pairs, non_hyperelliptic_extensions,
    pair_subgroup, quotient_profile, GroupContext, EXHAUSTIVE_CAP,
};
use crate::model::{
    apply_automorphism, fixed_locus_value, h_orbit, project, riemann_hurwitz_genus, sample_fiber, CurveSystem,
    PrecisionContext, SpherePoint,
};
use crate::moduli::{
    apply_word, factorial, orbit, single_point_classes, suborbit_count, Generator,
    ParameterTuple, DEFAULT_ORBIT_CAP,
};
use crate::rational::{int, ratio};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    /// A printed formula disagrees with the cover-consistent value; reported,
    /// not failing.
    Erratum,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub id: String,
    pub statement: String,
    pub status: CheckStatus,
    pub witness: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>) -> Self {
        Self {
            suite: suite.into(),
            checks: Vec::new(),
        }
    }

    pub fn record(
        &mut self,
        id: impl Into<String>,
        statement: impl Into<String>,
        ok: bool,
        witness: impl Into<String>,
    ) {
        self.push(
            id,
            statement,
            if ok { CheckStatus::Pass } else { CheckStatus::Fail },
            witness,
        );
    }

    pub fn push(
        &mut self,
        id: impl Into<String>,
        statement: impl Into<String>,
        status: CheckStatus,
        witness: impl Into<String>,
    ) {
        self.checks.push(Check {
            id: id.into(),
            statement: statement.into(),
            status,
            witness: witness.into(),
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {}", self.suite)?;
        for c in &self.checks {
            let tag = match c.status {
                CheckStatus::Pass => "PASS",
                CheckStatus::Fail => "FAIL",
                CheckStatus::Erratum => "ERRATUM",
            };
            writeln!(f, "  {tag:<7} {:<28} {} [{}]", c.id, c.statement, c.witness)?;
        }
        write!(
            f,
            "suite {}: {}",
            self.suite,
            if self.passed() { "pass" } else { "fail" }
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Counts,
    Profiles,
    Equations,
    Moduli,
    Model,
    All,
}

impl Suite {
    pub fn expand(&self) -> Vec<Suite> {
        match self {
            Suite::All => vec![
                Suite::Counts,
                Suite::Profiles,
                Suite::Equations,
                Suite::Moduli,
                Suite::Model,
            ],
            s => vec![*s],
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Counts => "counts",
            Suite::Profiles => "profiles",
            Suite::Equations => "equations",
            Suite::Moduli => "moduli",
            Suite::Model => "model",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "counts" => Suite::Counts,
            "profiles" => Suite::Profiles,
            "equations" => Suite::Equations,
            "moduli" => Suite::Moduli,
            "model" => Suite::Model,
            "all" => Suite::All,
            _ => return Err(Error::Parse(format!("unknown suite {s:?}"))),
        })
    }
}

/// Fixed seed so suite output is reproducible.
pub const SUITE_SEED: u64 = 0x4855_4d42;

pub fn run_suite(n: usize, suite: Suite) -> Result<Vec<VerificationReport>> {
    let ctx = GroupContext::new(n)?;
    suite
        .expand()
        .into_iter()
        .map(|s| match s {
            Suite::Counts => counts_suite(ctx),
            Suite::Profiles => profiles_suite(ctx),
            Suite::Equations => equations_suite(n, 20),
            Suite::Moduli => moduli_suite(n, 100),
            Suite::Model => model_suite(n),
            Suite::All => unreachable!("expanded"),
        })
        .collect()
}

/// Free-subgroup censuses against the closed-form counts.
pub fn counts_suite(ctx: GroupContext) -> Result<VerificationReport> {
    let n = ctx.n();
    let mut r = VerificationReport::new("counts");
    let pairs = n * (n + 1) / 2;
    if n > EXHAUSTIVE_CAP {
        return Err(Error::Capacity {
            what: format!("exhaustive census for type n = {n}"),
            cap: EXHAUSTIVE_CAP,
        });
    }
    let free = enumerate_free_subgroups(ctx, n - 2)?;
    r.record(
        "census.rank_n-2",
        format!("exactly n(n+1)/2 = {pairs} free subgroups of rank {}", n - 2),
        free.len() == pairs,
        format!("found {}", free.len()),
    );
    let mut witnessed = Vec::new();
    for k in &free {
        if quotient_profile(k)?.hyperelliptic_witness.is_some() {
            witnessed.push(k.clone());
        }
    }
    let mut pair_family: Vec<_> = index_pairs(ctx)
        .into_iter()
        .map(|(p, q)| pair_subgroup(ctx, p, q))
        .collect::<Result<_>>()?;
    pair_family.sort();
    witnessed.sort();
    r.record(
        "census.hyperelliptic_rank_n-2",
        format!("free rank-{} subgroups with hyperelliptic quotient are the {pairs} pair subgroups", n - 2),
        witnessed == pair_family,
        format!("{} witnessed, {} pair subgroups", witnessed.len(), pair_family.len()),
    );
    let top = enumerate_free_subgroups(ctx, n - 1)?;
    let want = if n % 2 == 1 { 1 } else { 0 };
    r.record(
        "census.rank_n-1",
        format!("free subgroups of rank {}: {want}", n - 1),
        top.len() == want,
        format!("found {}", top.len()),
    );
    if n % 2 == 0 {
        let hyp = hyperelliptic_extensions(ctx)?;
        let non = non_hyperelliptic_extensions(ctx)?;
        r.record(
            "extensions.hyperelliptic",
            format!("n(n+1)/2 = {pairs} hyperelliptic extensions"),
            hyp.len() == pairs,
            format!("found {}", hyp.len()),
        );
        r.record(
            "extensions.non_hyperelliptic",
            format!("n+1 = {} non-hyperelliptic extensions", n + 1),
            non.len() == n + 1,
            format!("found {}", non.len()),
        );
    }
    Ok(r)
}

/// Fixed-point profiles of the quotients by free rank-`(n−2)` subgroups.
pub fn profiles_suite(ctx: GroupContext) -> Result<VerificationReport> {
    let n = ctx.n();
    let mut r = VerificationReport::new("profiles");
    let free = enumerate_free_subgroups(ctx, n - 2)?;
    let mut bad_all = 0usize;
    let mut bad_pair = 0usize;
    for k in &free {
        let p = quotient_profile(k)?;
        let ok = p.hyperelliptic_witness.is_some()
            && if n % 2 == 0 {
                p.count_with_fixed_points(2) == 2
            } else {
                p.count_with_fixed_points(0) == 1 && p.count_with_fixed_points(4) == 1
            }
            && p.quotient_genus == n as i64 - 2;
        if !ok {
            bad_all += 1;
            if crate::group::pair_form(k).is_some() {
                bad_pair += 1;
            }
        }
    }
    let shape = if n % 2 == 0 {
        "one witness and two involutions with 2 fixed points"
    } else {
        "one witness, one free involution, one with 4 fixed points"
    };
    r.record(
        "profile.all_free",
        format!("every free rank-{} subgroup: {shape}", n - 2),
        bad_all == 0,
        format!("{bad_all} of {} deviate", free.len()),
    );
    r.record(
        "profile.pair_family",
        format!("every pair subgroup: {shape}"),
        bad_pair == 0,
        format!("{bad_pair} of {} deviate", n * (n + 1) / 2),
    );
    Ok(r)
}

/// Exact cover self-consistency and genus bookkeeping on random tuples.
pub fn equations_suite(n: usize, samples: usize) -> Result<VerificationReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(SUITE_SEED ^ n as u64);
    let mut r = VerificationReport::new("equations");
    let mut total = 0usize;
    let mut failures = Vec::new();
    let mut genus_bad = 0usize;
    for _ in 0..samples {
        let p = ParameterTuple::random(n, &mut rng)?;
        let b = BranchSet::new(p.lambdas())?;
        for c in all_quotient_curves(&b)? {
            total += 1;
            if !c.verify()? {
                failures.push(format!("{p}: {:?}", c.family));
            }
            if c.equation.branch_count() as i64 != 2 * c.equation.genus() + 2 {
                genus_bad += 1;
            }
        }
    }
    r.record(
        "equations.cover_consistency",
        "every emitted equation maps onto its branch data exactly",
        failures.is_empty(),
        format!(
            "{} of {total} consistent{}",
            total - failures.len(),
            failures.first().map(|f| format!("; first failure {f}")).unwrap_or_default()
        ),
    );
    r.record(
        "equations.genus",
        "branch count equals 2g + 2 for every equation",
        genus_bad == 0,
        format!("{genus_bad} mismatches"),
    );
    Ok(r)
}

/// Generator relations and orbit counting.
pub fn moduli_suite(n: usize, samples: usize) -> Result<VerificationReport> {
    use Generator::*;
    let mut rng = ChaCha8Rng::seed_from_u64(SUITE_SEED ^ (n as u64) << 8);
    let mut r = VerificationReport::new("moduli");
    let mut bad = Vec::new();
    for _ in 0..samples {
        let p = ParameterTuple::random(n, &mut rng)?;
        let rels: [(&str, Vec<Generator>, Vec<Generator>); 5] = [
            ("b^2", vec![B, B], vec![]),
            ("c^2", vec![C, C], vec![]),
            ("t^(n+1)", vec![T; n + 1], vec![]),
            ("sc=cs", vec![S, C], vec![C, S]),
            ("bc=cb", vec![B, C], vec![C, B]),
        ];
        for (name, lhs, rhs) in rels {
            if apply_word(&lhs, &p) != apply_word(&rhs, &p) {
                bad.push(format!("{name} at {p}"));
            }
        }
    }
    r.record(
        "moduli.relations",
        "b^2 = c^2 = t^(n+1) = 1, sc = cs, bc = cb",
        bad.is_empty(),
        format!("{samples} tuples, {} violations", bad.len()),
    );
    if factorial(n + 1) <= DEFAULT_ORBIT_CAP {
        let seed = generic_seed(n)?;
        let whole = orbit(&seed, &[T, B], DEFAULT_ORBIT_CAP)?;
        r.record(
            "moduli.full_orbit",
            format!("<t,b>-orbit of a generic seed has (n+1)! = {}", factorial(n + 1)),
            whole.size() == factorial(n + 1),
            format!("seed ({seed}), size {}", whole.size()),
        );
        let sub = suborbit_count(&seed)?;
        r.record(
            "moduli.degree_pairs",
            format!("<s,b,c> splits it into n(n+1)/2 = {} classes", n * (n + 1) / 2),
            sub.count() == n * (n + 1) / 2,
            format!("{} classes of sizes {:?}", sub.count(), dedup_sizes(&sub.suborbit_sizes)),
        );
        let single = single_point_classes(&seed)?;
        r.record(
            "moduli.degree_points",
            format!("a point stabilizer splits it into n+1 = {} classes", n + 1),
            single.count() == n + 1,
            format!("{} classes", single.count()),
        );
        let sbc = orbit(&seed, &[S, B, C], DEFAULT_ORBIT_CAP)?;
        r.record(
            "moduli.sbc_order",
            format!("<s,b,c>-orbit size divides 2(n-1)! = {}", 2 * factorial(n - 1)),
            (2 * factorial(n - 1)) % sbc.size() == 0,
            format!("size {}", sbc.size()),
        );
    }
    Ok(r)
}

fn dedup_sizes(v: &[usize]) -> Vec<usize> {
    let mut s = v.to_vec();
    s.sort_unstable();
    s.dedup();
    s
}

/// The first tuple `(3, 7, 11, 13, …)`-style seed with a full orbit.
pub fn generic_seed(n: usize) -> Result<ParameterTuple> {
    const PRIMES: [i64; 12] = [3, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43];
    if n < 4 || n - 2 > PRIMES.len() {
        return Err(Error::Domain(format!("no built-in seed for type n = {n}")));
    }
    ParameterTuple::new(PRIMES[..n - 2].iter().map(|&p| int(p)).collect())
}

/// Seeds used by the ambient-model suite.
pub fn model_seed(n: usize) -> Result<ParameterTuple> {
    ParameterTuple::new((0..n - 2).map(|i| int([2, 3, 5, 7, 11, 13, 17, 19][i % 8] + 20 * (i / 8) as i64)).collect())
}

/// Fiber structure of the ambient model.
pub fn model_suite(n: usize) -> Result<VerificationReport> {
    model_checks(&model_seed(n)?, &PrecisionContext::from_env()?)
}

pub fn model_checks(params: &ParameterTuple, prec: &PrecisionContext) -> Result<VerificationReport> {
    let mut r = VerificationReport::new("model");
    let n = params.n();
    let prec = prec.clone();
    let sys = CurveSystem::new(params, &prec);
    let branch = params.branch_set();
    let generic = SpherePoint::from_extended(&crate::rational::ExtendedRational::Finite(ratio(-7, 3)), &prec);
    let fiber = sample_fiber(&sys, &generic, &prec)?;
    r.record(
        "model.generic_fiber",
        format!("2^n = {} points off the branch set", 1u64 << n),
        fiber.len() == 1 << n,
        format!("{} points over -7/3", fiber.len()),
    );
    let orbit = h_orbit(&fiber[0], &prec)?;
    r.record(
        "model.single_orbit",
        "the generic fiber is one orbit of the sign action",
        orbit.len() == fiber.len() && fiber.iter().all(|q| orbit.iter().any(|o| o.approx_eq(q, &prec))),
        format!("orbit size {}", orbit.len()),
    );
    let mut invariant = true;
    for pt in &fiber {
        let z = project(pt, &prec);
        for j in 1..=n + 1 {
            let w = project(&apply_automorphism(pt, j, &prec)?, &prec);
            invariant &= w.approx_eq(&z, &prec);
        }
        invariant &= z.approx_eq(&generic, &prec);
    }
    r.record(
        "model.projection_invariant",
        "projection is invariant under every a_j and lands on the base point",
        invariant,
        format!("{} points x {} generators", fiber.len(), n + 1),
    );
    let mut sizes = Vec::new();
    let mut fixed_ok = true;
    for (k, v) in branch.values().iter().enumerate() {
        let z = SpherePoint::from_extended(v, &prec);
        let f = sample_fiber(&sys, &z, &prec)?;
        sizes.push(f.len());
        // points over B_k are exactly the fixed points of a_k
        for pt in &f {
            fixed_ok &= prec.negligible(&pt.coords()[k]);
            fixed_ok &= apply_automorphism(pt, k + 1, &prec)?.approx_eq(pt, &prec);
            fixed_ok &= fixed_locus_value(params, k + 1)? == *v;
            fixed_ok &= project(pt, &prec).approx_eq(&z, &prec);
        }
    }
    r.record(
        "model.branch_fibers",
        format!("2^(n-1) = {} points over each branch value", 1u64 << (n - 1)),
        sizes.iter().all(|&s| s == 1 << (n - 1)),
        format!("sizes {sizes:?}"),
    );
    r.record(
        "model.fixed_loci",
        "fiber over the k-th branch value is Fix(a_k)",
        fixed_ok,
        format!("{} branch values", sizes.len()),
    );
    let g = riemann_hurwitz_genus(n, &sizes);
    let want = GroupContext::new(n)?.ambient_genus();
    r.record(
        "model.genus",
        format!("Riemann-Hurwitz on the fibers gives genus {want}"),
        g == want,
        format!("computed {g}"),
    );
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n4_suites_pass() {
        for rep in run_suite(4, Suite::All).unwrap() {
            assert!(rep.passed(), "{rep}");
        }
    }

    #[test]
    fn n5_census_check_is_honest() {
        let rep = counts_suite(GroupContext::new(5).unwrap()).unwrap();
        let c = rep.checks.iter().find(|c| c.id == "census.rank_n-2").unwrap();
        assert_eq!(c.status, CheckStatus::Fail);
        assert_eq!(c.witness, "found 30");
        let c = rep
            .checks
            .iter()
            .find(|c| c.id == "census.hyperelliptic_rank_n-2")
            .unwrap();
        assert_eq!(c.status, CheckStatus::Pass);
    }

    #[test]
    fn suite_names_parse() {
        for s in ["counts", "profiles", "equations", "moduli", "model", "all"] {
            assert_eq!(s.parse::<Suite>().unwrap().name(), s);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn generic_seeds_have_full_orbits() {
        for n in 4..=5 {
            let s = generic_seed(n).unwrap();
            let o = orbit(&s, &[Generator::T, Generator::B], DEFAULT_ORBIT_CAP).unwrap();
            assert_eq!(o.size(), factorial(n + 1));
        }
    }
}
