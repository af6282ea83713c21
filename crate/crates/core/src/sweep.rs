//! Exhaustive identity sweeps over ranges of degree types.
//!
//! Each check walks every type in its range, compares the two sides of one
//! identity exactly, and stops at the first falsification it finds (in range
//! order), reporting the witnessing instance.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{closed_hookp, closed_hookp2, int, rat};
use crate::bijection::{code_box_size, decode, encode, for_each_code, psi, PsiCase};
use crate::colored::{
    for_each_colored, lemma_ccf_lhs, partitions, prop_cf_count, proper_set_labelling_counts, thm_cfs_count,
    ColoredFilter, ColoredLabelledForest, PartitionS,
};
use crate::degree::DegreeSequence;
use crate::enumerate::{count_forests, enumerate_forests};
use crate::error::Error;
use crate::hook::{brute_hookp, brute_hookp2, lascoux_check, postnikov_check, transformation_holds};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Check {
    Cpf,
    Hookp,
    Hookp2,
    Ccf,
    Propcf,
    Cfs,
    Psi,
    Codes,
    Postnikov,
    Lascoux,
}

impl Check {
    pub const ALL: [Check; 10] = [
        Check::Cpf,
        Check::Hookp,
        Check::Hookp2,
        Check::Ccf,
        Check::Propcf,
        Check::Cfs,
        Check::Psi,
        Check::Codes,
        Check::Postnikov,
        Check::Lascoux,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Cpf => "cpf",
            Check::Hookp => "hookp",
            Check::Hookp2 => "hookp2",
            Check::Ccf => "ccf",
            Check::Propcf => "propcf",
            Check::Cfs => "cfs",
            Check::Psi => "psi",
            Check::Codes => "codes",
            Check::Postnikov => "postnikov",
            Check::Lascoux => "lascoux",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s.trim())
            .ok_or_else(|| Error::Parse(format!("unknown check {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifySweepConfig {
    pub max_total_vertices: u64,
    pub max_degree: usize,
    pub k_values: Vec<u32>,
    pub checks: Vec<Check>,
    /// Largest `n` for the binary-tree identities.
    pub max_n: u64,
    /// Largest `n` for the code bijection check.
    pub max_code_internal: u64,
}

impl Default for VerifySweepConfig {
    fn default() -> Self {
        VerifySweepConfig {
            max_total_vertices: 7,
            max_degree: 4,
            k_values: vec![0, 1, 2],
            checks: Check::ALL.to_vec(),
            max_n: 5,
            max_code_internal: 4,
        }
    }
}

impl VerifySweepConfig {
    pub fn validate(&self) -> Result<(), Error> {
        if self.max_total_vertices == 0 || self.max_degree == 0 || self.max_n == 0 || self.max_code_internal == 0 {
            return Err(Error::Parse("sweep bounds must be positive".into()));
        }
        if self.checks.is_empty() {
            return Err(Error::Parse("at least one check must be selected".into()));
        }
        if self.k_values.is_empty() {
            return Err(Error::Parse("at least one k value is required".into()));
        }
        Ok(())
    }

    pub fn types(&self) -> Vec<DegreeSequence> {
        DegreeSequence::all_up_to(self.max_total_vertices, self.max_degree)
    }
}

/// The instance on which an identity failed, with both sides rendered.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub r: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub partition: Option<PartitionS>,
    pub expected: String,
    pub actual: String,
    pub detail: String,
}

impl Counterexample {
    fn new(r: impl ToString, expected: impl ToString, actual: impl ToString, detail: &str) -> Self {
        Counterexample {
            r: r.to_string(),
            k: None,
            partition: None,
            expected: expected.to_string(),
            actual: actual.to_string(),
            detail: detail.to_string(),
        }
    }

    fn with_k(mut self, k: u32) -> Self {
        self.k = Some(k.to_string());
        self
    }

    fn with_partition(mut self, s: &PartitionS) -> Self {
        self.partition = Some(s.clone());
        self
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckOutcome {
    pub instances: u64,
    /// Reported values, for checks whose values are of interest by themselves.
    pub values: Vec<String>,
    /// How often each ψ case fired.
    pub psi_cases: BTreeMap<PsiCase, u64>,
    pub counterexample: Option<Counterexample>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }

    fn merge(mut self, other: CheckOutcome) -> CheckOutcome {
        self.instances += other.instances;
        self.values.extend(other.values);
        for (case, n) in other.psi_cases {
            *self.psi_cases.entry(case).or_default() += n;
        }
        if self.counterexample.is_none() {
            self.counterexample = other.counterexample;
        }
        self
    }

    fn single(result: Result<(), Counterexample>) -> CheckOutcome {
        CheckOutcome { instances: 1, counterexample: result.err(), ..Default::default() }
    }
}

/// Runs `cell` on every item in parallel and merges in input order.
fn sweep<T: Sync>(items: &[T], cell: impl Fn(&T) -> CheckOutcome + Sync + Send) -> CheckOutcome {
    let outcomes: Vec<CheckOutcome> = items.par_iter().map(cell).collect();
    outcomes.into_iter().fold(CheckOutcome::default(), CheckOutcome::merge)
}

fn cells(types: &[DegreeSequence], k_values: &[u32]) -> Vec<(DegreeSequence, u32)> {
    types.iter().flat_map(|r| k_values.iter().map(move |&k| (r.clone(), k))).collect()
}

fn count_colored(r: &DegreeSequence, k: u32, filter: &ColoredFilter) -> BigUint {
    let mut count = 0u64;
    for_each_colored(r, k, filter, |_| count += 1).expect("filter matches type");
    BigUint::from(count)
}

/// `|enumerate_forests(r)| = count_forests(r)`.
pub fn check_cpf(types: &[DegreeSequence]) -> CheckOutcome {
    sweep(types, |r| {
        let enumerated = BigUint::from(enumerate_forests(r).len());
        let formula = count_forests(r);
        CheckOutcome::single(if enumerated == formula {
            Ok(())
        } else {
            Err(Counterexample::new(r, formula, enumerated, "forest count"))
        })
    })
}

/// `brute_hookp(r) = closed_hookp(r)` as polynomials.
pub fn check_hookp(types: &[DegreeSequence]) -> CheckOutcome {
    sweep(types, |r| {
        let (brute, closed) = (brute_hookp(r), closed_hookp(r));
        CheckOutcome::single(if brute == closed {
            Ok(())
        } else {
            Err(Counterexample::new(r, &closed, &brute, "hook length polynomial"))
        })
    })
}

/// Points at which the two polynomial forms are linked by substitution.
pub fn transformation_points() -> Vec<BigRational> {
    vec![int(0), int(1), int(2), rat(1, 2)]
}

/// `brute_hookp2(r) = closed_hookp2(r)`, plus the substitution linking it to
/// the first form at each of [`transformation_points`].
pub fn check_hookp2(types: &[DegreeSequence]) -> CheckOutcome {
    sweep(types, |r| {
        let (brute, closed) = (brute_hookp2(r), closed_hookp2(r));
        if brute != closed {
            return CheckOutcome::single(Err(Counterexample::new(r, &closed, &brute, "second-form polynomial")));
        }
        let first = brute_hookp(r);
        for t in transformation_points() {
            if !transformation_holds(r, &first, &brute, &t) {
                let shifted = BigRational::from_integer(1.into()) + &t;
                let expected = num_traits::pow(-shifted.clone(), r.internal() as usize)
                    * first.eval(&(-shifted.recip()));
                return CheckOutcome::single(Err(Counterexample::new(
                    r,
                    expected,
                    brute.eval(&t),
                    &format!("substitution at t = {t}"),
                )));
            }
        }
        CheckOutcome::single(Ok(()))
    })
}

/// The counting-sum side is integral and equals the exhaustive count of
/// proper `k`-colored labelled forests.
pub fn check_ccf(types: &[DegreeSequence], k_values: &[u32]) -> CheckOutcome {
    sweep(&cells(types, k_values), |(r, k)| {
        let lhs = lemma_ccf_lhs(r, *k);
        let enumerated = count_colored(r, *k, &ColoredFilter::default());
        let ok = lhs == BigRational::from_integer(BigInt::from(enumerated.clone()));
        CheckOutcome::single(if ok {
            Ok(())
        } else {
            Err(Counterexample::new(r, lhs, enumerated, "colored forest counting sum").with_k(*k))
        })
    })
}

/// The product formula equals the exhaustive count of proper `k`-colored
/// labelled forests.
pub fn check_propcf(types: &[DegreeSequence], k_values: &[u32]) -> CheckOutcome {
    sweep(&cells(types, k_values), |(r, k)| {
        let formula = prop_cf_count(r, *k);
        let enumerated = count_colored(r, *k, &ColoredFilter::default());
        CheckOutcome::single(if formula == enumerated {
            Ok(())
        } else {
            Err(Counterexample::new(r, formula, enumerated, "colored forest product formula").with_k(*k))
        })
    })
}

/// For every partition `S`: `|𝓒𝓕_{r,k,S}|` matches the formula, and for
/// `n ≥ 1` it is `ℓ` times the count with label 1 in the first tree.
pub fn check_cfs(types: &[DegreeSequence], k_values: &[u32]) -> CheckOutcome {
    sweep(&cells(types, k_values), |(r, k)| {
        let formula = thm_cfs_count(r, *k);
        let mut out = CheckOutcome::default();
        for s in partitions(r) {
            out.instances += 1;
            let filter = ColoredFilter { partition: Some(s.clone()), first_tree_min: false };
            let enumerated = count_colored(r, *k, &filter);
            if enumerated != formula {
                out.counterexample = Some(
                    Counterexample::new(r, &formula, enumerated, "partition class count").with_k(*k).with_partition(&s),
                );
                return out;
            }
            if r.internal() >= 1 {
                let first = ColoredFilter { partition: Some(s.clone()), first_tree_min: true };
                let restricted = count_colored(r, *k, &first) * r.trees();
                if restricted != enumerated {
                    out.counterexample = Some(
                        Counterexample::new(r, enumerated, restricted, "tree-count factorization")
                            .with_k(*k)
                            .with_partition(&s),
                    );
                    return out;
                }
            }
        }
        out
    })
}

fn class_members(r: &DegreeSequence, k: u32, s: &PartitionS) -> Vec<ColoredLabelledForest> {
    let mut out = Vec::new();
    let filter = ColoredFilter { partition: Some(s.clone()), first_tree_min: false };
    for_each_colored(r, k, &filter, |f| out.push(f)).expect("partition has type r");
    out
}

/// `ψ` maps `𝓒𝓕_{r,k,S1}` injectively onto `𝓒𝓕_{r,k,S2}` for every ordered
/// adjacent pair, and preserves type, tree count and degree multiset.
pub fn check_psi(types: &[DegreeSequence], k_values: &[u32]) -> CheckOutcome {
    sweep(&cells(types, k_values), |(r, k)| {
        let mut out = CheckOutcome::default();
        let all = partitions(r);
        let members: BTreeMap<&PartitionS, HashSet<ColoredLabelledForest>> =
            all.iter().map(|s| (s, class_members(r, *k, s).into_iter().collect())).collect();
        for s1 in &all {
            for i in 1..s1.len() as u32 {
                let s2 = s1.swapped(i);
                if &s2 == s1 {
                    continue;
                }
                out.instances += 1;
                let source = &members[s1];
                let target = &members[&s2];
                let fail = |detail: String, expected: String, actual: String| {
                    Some(Counterexample::new(r, expected, actual, &detail).with_k(*k).with_partition(s1))
                };
                if source.len() != target.len() {
                    out.counterexample = fail(
                        format!("class sizes differ for swap of {i}"),
                        target.len().to_string(),
                        source.len().to_string(),
                    );
                    return out;
                }
                let mut images = HashSet::with_capacity(source.len());
                for f in source {
                    let (g, case) = match psi(f, s1, &s2) {
                        Ok(v) => v,
                        Err(e) => {
                            out.counterexample = fail(format!("psi failed: {e}"), "a forest".into(), f.to_json());
                            return out;
                        }
                    };
                    *out.psi_cases.entry(case).or_default() += 1;
                    let preserved = g.shape().degree_sequence() == *r
                        && g.shape().trees().len() == f.shape().trees().len()
                        && (case == PsiCase::Vi || (g.shape() == f.shape() && g.colors() == f.colors()));
                    if !preserved || !target.contains(&g) {
                        out.counterexample =
                            fail(format!("image outside target class (case {case})"), f.to_json(), g.to_json());
                        return out;
                    }
                    if !images.insert(g.clone()) {
                        out.counterexample = fail(format!("psi not injective (case {case})"), f.to_json(), g.to_json());
                        return out;
                    }
                }
            }
        }
        out
    })
}

/// `decode ∘ encode = id` on `𝓒𝓕_{r,k,S,1}` and `encode ∘ decode = id` on
/// the code box, whose size is `|𝓒𝓕_{r,k,S}| / ℓ`.
pub fn check_codes(types: &[DegreeSequence], k_values: &[u32]) -> CheckOutcome {
    let types: Vec<DegreeSequence> = types.iter().filter(|r| r.internal() >= 1).cloned().collect();
    sweep(&cells(&types, k_values), |(r, k)| {
        let mut out = CheckOutcome::default();
        let ell = r.trees();
        for s in partitions(r) {
            out.instances += 1;
            let fail = |detail: &str, expected: String, actual: String| {
                Some(Counterexample::new(r, expected, actual, detail).with_k(*k).with_partition(&s))
            };
            let size = code_box_size(&s, *k, ell).expect("n ≥ 1");
            if size.clone() * ell != thm_cfs_count(r, *k) {
                out.counterexample = fail("code box size", (thm_cfs_count(r, *k) / ell).to_string(), size.to_string());
                return out;
            }
            let filter = ColoredFilter { partition: Some(s.clone()), first_tree_min: true };
            let mut members = 0u64;
            let mut failure = None;
            for_each_colored(r, *k, &filter, |f| {
                members += 1;
                if failure.is_some() {
                    return;
                }
                let back = encode(&f, &s).and_then(|c| decode(&s, *k, ell, &c));
                if back.as_ref() != Ok(&f) {
                    failure = fail("decode(encode(F)) != F", f.to_json(), format!("{back:?}"));
                }
            })
            .expect("n ≥ 1");
            if failure.is_some() {
                out.counterexample = failure;
                return out;
            }
            if BigUint::from(members) != size {
                out.counterexample = fail("first-tree class size", size.to_string(), members.to_string());
                return out;
            }
            let mut failure = None;
            for_each_code(&s, *k, ell, |c| {
                if failure.is_some() {
                    return;
                }
                let result = decode(&s, *k, ell, c).and_then(|f| {
                    if f.in_class(&s) && f.min_label_in_first_tree() {
                        encode(&f, &s)
                    } else {
                        Err(Error::MinimumNotInFirstTree)
                    }
                });
                if result.as_ref() != Ok(c) {
                    let want = serde_json::to_string(c).expect("codes serialize");
                    failure = fail("encode(decode(c)) != c", want, format!("{result:?}"));
                }
            })
            .expect("n ≥ 1");
            if failure.is_some() {
                out.counterexample = failure;
                return out;
            }
        }
        out
    })
}

/// The binary-tree hook length sum against `(n+1)^{n-1}` for `n = 1..=max_n`.
pub fn check_postnikov(max_n: u64) -> CheckOutcome {
    let mut out = CheckOutcome::default();
    for n in 1..=max_n {
        let c = postnikov_check(n);
        out.instances += 1;
        out.values.push(c.lhs.to_string());
        if !c.equal && out.counterexample.is_none() {
            let r = DegreeSequence::new(vec![n + 1, 0, n]).expect("binary type");
            out.counterexample = Some(Counterexample::new(r, c.rhs, c.lhs, &format!("binary trees, n = {n}")));
        }
    }
    out
}

/// The binary-tree hook length polynomial against its product form for
/// `n = 1..=max_n`.
pub fn check_lascoux(max_n: u64) -> CheckOutcome {
    let mut out = CheckOutcome::default();
    for n in 1..=max_n {
        let c = lascoux_check(n);
        out.instances += 1;
        if !c.equal && out.counterexample.is_none() {
            let r = DegreeSequence::new(vec![n + 1, 0, n]).expect("binary type");
            out.counterexample = Some(Counterexample::new(r, &c.rhs, &c.lhs, &format!("binary trees, n = {n}")));
        }
    }
    out
}

/// For every plane forest of a type in `types` with at most `max_internal`
/// internal vertices, and every subset `J` of them: the number of labellings
/// making all of `J` proper, times `Π_{v∈J} h_v`, is `n!`.
pub fn check_proper_subsets(types: &[DegreeSequence], max_internal: u64) -> CheckOutcome {
    let types: Vec<DegreeSequence> = types.iter().filter(|r| r.internal() <= max_internal).cloned().collect();
    sweep(&types, |r| {
        let nfact = crate::algebra::factorial(r.internal());
        let mut out = CheckOutcome::default();
        for shape in enumerate_forests(r) {
            let hooks: Vec<u64> = shape.internal_vertices().iter().map(|v| v.hook as u64).collect();
            for (subset, &count) in proper_set_labelling_counts(&shape).iter().enumerate() {
                out.instances += 1;
                let hook_product: u64 =
                    hooks.iter().enumerate().filter(|(i, _)| subset >> i & 1 == 1).map(|(_, h)| h).product();
                if BigUint::from(count * hook_product) != nfact {
                    out.counterexample = Some(Counterexample::new(
                        r,
                        &nfact,
                        count * hook_product,
                        &format!("forest {} subset mask {subset:b}", shape.to_json()),
                    ));
                    return out;
                }
            }
        }
        out
    })
}

/// Runs every selected check of `config`, in the configured order.
pub fn run(config: &VerifySweepConfig) -> Vec<(Check, CheckOutcome)> {
    let types = config.types();
    let code_types: Vec<DegreeSequence> =
        types.iter().filter(|r| r.internal() <= config.max_code_internal).cloned().collect();
    config
        .checks
        .iter()
        .map(|&check| {
            let outcome = match check {
                Check::Cpf => check_cpf(&types),
                Check::Hookp => check_hookp(&types),
                Check::Hookp2 => check_hookp2(&types),
                Check::Ccf => check_ccf(&types, &config.k_values),
                Check::Propcf => check_propcf(&types, &config.k_values),
                Check::Cfs => check_cfs(&types, &config.k_values),
                Check::Psi => check_psi(&types, &config.k_values),
                Check::Codes => check_codes(&code_types, &config.k_values),
                Check::Postnikov => check_postnikov(config.max_n),
                Check::Lascoux => check_lascoux(config.max_n),
            };
            (check, outcome)
        })
        .collect()
}
