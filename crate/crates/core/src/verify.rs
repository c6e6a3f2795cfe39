//! Executable checks of the structural results about `C(G)` and its series.
//!
//! Each check returns a [`ClaimResult`]. A failing claim always carries a
//! [`Witness`] that can be re-checked against the group without rerunning
//! the claim (see [`Witness::reproduces`]). Claims that quantify over all
//! subgroups use the sampled family from [`sampled_subgroups`] unless
//! exhaustive enumeration is requested.

use std::cell::{OnceCell, RefCell};
use std::collections::HashMap;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::bitset::ElementSet;
use crate::error::{GroupError, Result};
use crate::families::FamilySpec;
use crate::group::{ElementId, FiniteGroup, DEFAULT_ORDER_CAP};
use crate::quotient::quotient;
use crate::series::{
    baer_norm, baer_norm_exhaustive, centralizer_norm, centralizer_norm_naive, commutator_subgroup,
    derived_series, derived_subgroup, engel_witness, is_nilpotent, iterated_commutator,
    upper_central_series, Analysis, GroupProfile,
};
use crate::subgroup::{
    all_subgroups, center, cyclic_subgroups, distinct_centralizer_count, is_subnormal,
    sampled_subgroups, Restriction, SubgroupCoverage, SubgroupSet,
};

/// Largest order for which exhaustive subgroup enumeration is offered.
pub const EXHAUSTIVE_SUBGROUP_LIMIT: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimStatus {
    Holds,
    HoldsVacuously,
    Fails,
}

/// Counterexample data for a failed claim. Element indices refer to the
/// verified group unless the variant says otherwise.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// `element` belongs to `subset` but not to `superset`.
    NotContained {
        relation: String,
        term: Option<usize>,
        subgroup: Option<Vec<ElementId>>,
        element: ElementId,
        subset: Vec<ElementId>,
        superset: Vec<ElementId>,
    },
    /// Two sets asserted equal differ.
    SetsDiffer {
        relation: String,
        term: Option<usize>,
        left: Vec<ElementId>,
        right: Vec<ElementId>,
    },
    /// `[x, n y] = value ≠ 1`.
    NotEngel {
        x: ElementId,
        y: ElementId,
        n: usize,
        value: ElementId,
    },
    /// `value > bound`.
    BoundExceeded {
        quantity: String,
        value: u64,
        bound: u64,
    },
    /// A computed quantity differs from its predicted value.
    ValueMismatch {
        quantity: String,
        expected: u64,
        actual: u64,
    },
    /// Predicates asserted equivalent take different values.
    Disagreement {
        predicates: Vec<(String, bool)>,
        term: Option<usize>,
        subgroup: Option<Vec<ElementId>>,
    },
    /// Every premise holds but the conclusion does not.
    ImplicationFails {
        premises: Vec<(String, bool)>,
        conclusion: (String, bool),
        subgroup: Option<Vec<ElementId>>,
    },
    /// A subgroup whose normal-closure descent stalls above it.
    NotSubnormal {
        subgroup: Vec<ElementId>,
        stalled_at: Vec<ElementId>,
    },
    /// `t⁻¹ h t` leaves `subgroup`.
    NotNormal {
        term: Option<usize>,
        subgroup: Vec<ElementId>,
        h: ElementId,
        t: ElementId,
    },
}

impl Witness {
    /// Re-evaluates the failed predicate from the witness data (and, where
    /// elements must be multiplied, the group). `true` means the failure is
    /// confirmed.
    pub fn reproduces(&self, g: &FiniteGroup) -> bool {
        match self {
            Witness::NotContained {
                element,
                subset,
                superset,
                ..
            } => subset.contains(element) && !superset.contains(element),
            Witness::SetsDiffer { left, right, .. } => {
                let (mut l, mut r) = (left.clone(), right.clone());
                l.sort_unstable();
                r.sort_unstable();
                l != r
            }
            Witness::NotEngel { x, y, n, value } => {
                *x < g.order()
                    && *y < g.order()
                    && *n >= 1
                    && iterated_commutator(g, *x, *y, *n) == *value
                    && *value != g.identity()
            }
            Witness::BoundExceeded { value, bound, .. } => value > bound,
            Witness::ValueMismatch {
                expected, actual, ..
            } => expected != actual,
            Witness::Disagreement { predicates, .. } => {
                predicates.windows(2).any(|w| w[0].1 != w[1].1)
            }
            Witness::ImplicationFails {
                premises,
                conclusion,
                ..
            } => premises.iter().all(|p| p.1) && !conclusion.1,
            Witness::NotSubnormal { subgroup, .. } => match SubgroupSet::new(g, subgroup) {
                Ok(h) => !is_subnormal(g, &h).is_subnormal,
                Err(_) => false,
            },
            Witness::NotNormal { subgroup, h, t, .. } => {
                *h < g.order()
                    && *t < g.order()
                    && subgroup.contains(h)
                    && !subgroup.contains(&g.conj(*h, *t))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClaimResult {
    pub claim_id: String,
    pub status: ClaimStatus,
    /// What was checked, in a few words; for sampled claims, how many
    /// subgroups.
    pub detail: String,
    pub coverage: Option<SubgroupCoverage>,
    pub witness: Option<Witness>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl ClaimResult {
    pub fn holds(&self) -> bool {
        self.status != ClaimStatus::Fails
    }
}

enum Outcome {
    Holds(String),
    Vacuous(String),
    Fails(String, Witness),
}

fn timed(
    claim_id: &str,
    coverage: Option<SubgroupCoverage>,
    check: impl FnOnce() -> Outcome,
) -> ClaimResult {
    let start = Instant::now();
    let outcome = check();
    let (status, detail, witness) = match outcome {
        Outcome::Holds(d) => (ClaimStatus::Holds, d, None),
        Outcome::Vacuous(d) => (ClaimStatus::HoldsVacuously, d, None),
        Outcome::Fails(d, w) => (ClaimStatus::Fails, d, Some(w)),
    };
    ClaimResult {
        claim_id: claim_id.to_string(),
        status,
        detail,
        coverage,
        witness,
        elapsed: start.elapsed(),
    }
}

fn not_contained(
    relation: &str,
    term: Option<usize>,
    subset: &ElementSet,
    superset: &ElementSet,
) -> Option<Witness> {
    subset
        .first_outside(superset)
        .map(|element| Witness::NotContained {
            relation: relation.to_string(),
            term,
            subgroup: None,
            element,
            subset: subset.to_vec(),
            superset: superset.to_vec(),
        })
}

fn sets_differ(
    relation: &str,
    term: Option<usize>,
    left: &ElementSet,
    right: &ElementSet,
) -> Option<Witness> {
    (left != right).then(|| Witness::SetsDiffer {
        relation: relation.to_string(),
        term,
        left: left.to_vec(),
        right: right.to_vec(),
    })
}

#[derive(Clone, Copy, Debug, Default)]
pub struct VerifyOptions {
    /// Replace the sampled subgroup family by every subgroup. Only allowed up
    /// to [`EXHAUSTIVE_SUBGROUP_LIMIT`].
    pub exhaustive_subgroups: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub group_name: String,
    pub group_order: usize,
    pub results: Vec<ClaimResult>,
    pub profile: GroupProfile,
}

impl VerificationReport {
    pub fn all_hold(&self) -> bool {
        self.results.iter().all(ClaimResult::holds)
    }
}

/// Shared, lazily filled state for the claims on one group.
pub struct Verifier<'g> {
    g: &'g FiniteGroup,
    analysis: Analysis,
    c_norm: SubgroupSet,
    coverage: SubgroupCoverage,
    subgroups: OnceCell<Vec<SubgroupSet>>,
    nilpotent_cache: RefCell<HashMap<SubgroupSet, bool>>,
}

impl<'g> Verifier<'g> {
    pub fn new(g: &'g FiniteGroup, opts: VerifyOptions) -> Result<Self> {
        if opts.exhaustive_subgroups && g.order() > EXHAUSTIVE_SUBGROUP_LIMIT {
            return Err(GroupError::BadParameter(format!(
                "exhaustive subgroup checks are limited to order <= {EXHAUSTIVE_SUBGROUP_LIMIT}"
            )));
        }
        let analysis = Analysis::new(g)?;
        let c_norm = analysis.c_series.term(1).clone();
        Ok(Verifier {
            g,
            analysis,
            c_norm,
            coverage: if opts.exhaustive_subgroups {
                SubgroupCoverage::Exhaustive
            } else {
                SubgroupCoverage::Sampled
            },
            subgroups: OnceCell::new(),
            nilpotent_cache: RefCell::new(HashMap::new()),
        })
    }

    pub fn analysis(&self) -> &Analysis {
        &self.analysis
    }

    fn subgroups(&self) -> &[SubgroupSet] {
        self.subgroups.get_or_init(|| match self.coverage {
            SubgroupCoverage::Exhaustive => all_subgroups(self.g),
            SubgroupCoverage::Sampled => {
                let mut extra = vec![center(self.g), derived_subgroup(self.g)];
                extra.extend(self.analysis.c_series.terms.iter().cloned());
                extra.extend(self.analysis.upper_central.terms.iter().cloned());
                sampled_subgroups(self.g, &extra)
            }
        })
    }

    /// Nilpotency of a subgroup of `G`, memoized.
    fn subgroup_nilpotent(&self, h: &SubgroupSet) -> bool {
        if let Some(&v) = self.nilpotent_cache.borrow().get(h) {
            return v;
        }
        let v = if h.is_whole() {
            self.analysis.profile.is_nilpotent
        } else {
            is_nilpotent(&Restriction::new(self.g, h).group)
        };
        self.nilpotent_cache.borrow_mut().insert(h.clone(), v);
        v
    }

    fn quotient_nilpotent(&self, n: &SubgroupSet) -> bool {
        is_nilpotent(
            &quotient(self.g, n)
                .expect("quotient by a normal subgroup")
                .quotient,
        )
    }

    fn c_range(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.analysis.c_series.stabilized_at.max(1)
    }

    /// `C(G)` is 2-Engel, nilpotent of class at most 3, derived length at most 2.
    pub fn c_nilpotent_class3(&self) -> ClaimResult {
        timed("c-norm-structure", None, || {
            let g = self.g;
            let c = &self.c_norm;
            for x in c.iter() {
                for y in c.iter() {
                    let v = iterated_commutator(g, x, y, 2);
                    if v != g.identity() {
                        return Outcome::Fails(
                            "C(G) is not 2-Engel".into(),
                            Witness::NotEngel {
                                x,
                                y,
                                n: 2,
                                value: v,
                            },
                        );
                    }
                }
            }
            let r = Restriction::new(g, c);
            let upper = upper_central_series(&r.group);
            if !upper.reaches_whole_group {
                return Outcome::Fails(
                    "C(G) is not nilpotent".into(),
                    Witness::SetsDiffer {
                        relation: "terminal upper central term of C(G) vs C(G)".into(),
                        term: Some(upper.stabilized_at),
                        left: r.lift(upper.terminal().members()).to_vec(),
                        right: c.to_vec(),
                    },
                );
            }
            let class = upper.stabilized_at;
            if class > 3 {
                return Outcome::Fails(
                    format!("C(G) has class {class}"),
                    Witness::BoundExceeded {
                        quantity: "nilpotency class of C(G)".into(),
                        value: class as u64,
                        bound: 3,
                    },
                );
            }
            let derived = derived_series(&r.group);
            let dl = derived.stabilized_at;
            if dl > 2 {
                return Outcome::Fails(
                    format!("C(G) has derived length {dl}"),
                    Witness::BoundExceeded {
                        quantity: "derived length of C(G)".into(),
                        value: dl as u64,
                        bound: 2,
                    },
                );
            }
            Outcome::Holds(format!(
                "|C(G)| = {}, 2-Engel, class {class}, derived length {dl}",
                c.size()
            ))
        })
    }

    /// A group with `C_n(G) = G` has derived length at most `2n`.
    pub fn soluble_length_bound(&self) -> ClaimResult {
        timed("soluble-length-bound", None, || {
            let p = &self.analysis.profile;
            let Some(n) = p.c_length else {
                return Outcome::Vacuous("C-series never reaches G".into());
            };
            let Some(dl) = p.derived_length else {
                let d = &self.analysis.derived;
                return Outcome::Fails(
                    format!("c-length {n} but G is not soluble"),
                    Witness::SetsDiffer {
                        relation: "terminal derived term vs trivial subgroup".into(),
                        term: Some(d.stabilized_at),
                        left: d.terminal().to_vec(),
                        right: vec![self.g.identity()],
                    },
                );
            };
            if dl > 2 * n {
                return Outcome::Fails(
                    format!("derived length {dl} exceeds 2·{n}"),
                    Witness::BoundExceeded {
                        quantity: "derived length".into(),
                        value: dl as u64,
                        bound: 2 * n as u64,
                    },
                );
            }
            Outcome::Holds(format!("c-length {n}, derived length {dl} <= {}", 2 * n))
        })
    }

    /// `H ∩ C(G) ≤ C(H)` for every subgroup in the family.
    pub fn subgroup_monotonicity(&self) -> ClaimResult {
        timed("subgroup-monotone", Some(self.coverage), || {
            let subs = self.subgroups();
            for h in subs {
                let mut meet = h.members().clone();
                meet.intersect_with(self.c_norm.members());
                let r = Restriction::new(self.g, h);
                let ch = r.lift(centralizer_norm(&r.group).members());
                if let Some(Witness::NotContained {
                    relation,
                    element,
                    subset,
                    superset,
                    ..
                }) = not_contained("H ∩ C(G) ≤ C(H)", None, &meet, &ch)
                {
                    return Outcome::Fails(
                        format!("fails for a subgroup of order {}", h.size()),
                        Witness::NotContained {
                            relation,
                            term: None,
                            subgroup: Some(h.to_vec()),
                            element,
                            subset,
                            superset,
                        },
                    );
                }
            }
            Outcome::Holds(format!("{} subgroups", subs.len()))
        })
    }

    /// `Z_{i+1}(G) ≤ C_i(G) ⊆ R_{2i}(G)` for `i ≥ 1`.
    pub fn sandwich(&self) -> ClaimResult {
        timed("c-series-sandwich", None, || {
            let a = &self.analysis;
            let top = a
                .c_series
                .stabilized_at
                .max(a.upper_central.stabilized_at)
                .max(1);
            let mut strict = Vec::new();
            for i in 1..=top {
                let z = a.upper_central.term(i + 1);
                let c = a.c_series.term(i);
                if let Some(w) = not_contained("Z_{i+1} ≤ C_i", Some(i), z.members(), c.members())
                {
                    return Outcome::Fails(format!("i = {i}"), w);
                }
                if z != c {
                    strict.push(i);
                }
                for x in c.iter() {
                    if let Some(y) = engel_witness(self.g, x, 2 * i) {
                        return Outcome::Fails(
                            format!("C_{i} has an element that is not right {}-Engel", 2 * i),
                            Witness::NotEngel {
                                x,
                                y,
                                n: 2 * i,
                                value: iterated_commutator(self.g, x, y, 2 * i),
                            },
                        );
                    }
                }
            }
            let strict = if strict.is_empty() {
                String::new()
            } else {
                format!(
                    "; strict Z_(i+1) < C_i at i = {}",
                    strict
                        .iter()
                        .map(|i| i.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                )
            };
            Outcome::Holds(format!("i = 1..={top}{strict}"))
        })
    }

    /// Hall's criterion on every normal subgroup of the family:
    /// `N` and `G/N'` nilpotent imply `G` nilpotent.
    pub fn hall_criterion(&self) -> ClaimResult {
        timed("hall-criterion", Some(self.coverage), || {
            let g_nil = self.analysis.profile.is_nilpotent;
            let mut quotient_cache: HashMap<SubgroupSet, bool> = HashMap::new();
            let mut tested = 0;
            let mut live = 0;
            for n in self.subgroups().iter().filter(|n| n.is_normal_in(self.g)) {
                tested += 1;
                let n_nil = self.subgroup_nilpotent(n);
                if !n_nil {
                    continue;
                }
                let nd = commutator_subgroup(self.g, n, n);
                let q_nil = *quotient_cache
                    .entry(nd.clone())
                    .or_insert_with(|| self.quotient_nilpotent(&nd));
                if !q_nil {
                    continue;
                }
                live += 1;
                if !g_nil {
                    return Outcome::Fails(
                        format!("normal subgroup of order {}", n.size()),
                        Witness::ImplicationFails {
                            premises: vec![
                                ("N nilpotent".into(), true),
                                ("G/N' nilpotent".into(), true),
                            ],
                            conclusion: ("G nilpotent".into(), false),
                            subgroup: Some(n.to_vec()),
                        },
                    );
                }
            }
            if live == 0 {
                Outcome::Vacuous(format!("{tested} normal subgroups, no premise satisfied"))
            } else {
                Outcome::Holds(format!(
                    "{tested} normal subgroups, {live} with premises satisfied"
                ))
            }
        })
    }

    /// The equivalence of nilpotency, `C_n(G) = G` and nilpotency of some
    /// `G/C_m(G)`; the subgroup form `H/C_i` nilpotent iff `H` nilpotent for
    /// family members containing `C_i`; and, when `G/C(G)` is nilpotent,
    /// subnormality of every cyclic subgroup.
    pub fn quotient_equivalences(&self) -> ClaimResult {
        timed("quotient-equivalences", Some(self.coverage), || {
            let a = &self.analysis;
            let nilpotent = a.profile.is_nilpotent;
            let has_c_length = a.profile.c_length.is_some();
            let quotient_nil: Vec<(usize, bool)> = self
                .c_range()
                .map(|m| (m, self.quotient_nilpotent(a.c_series.term(m))))
                .collect();
            let some_quotient = quotient_nil.iter().any(|&(_, v)| v);
            let first_quotient = quotient_nil[0].1;
            let preds = vec![
                ("G nilpotent".to_string(), nilpotent),
                ("G = C_n(G) for some n".to_string(), has_c_length),
                ("G/C_m(G) nilpotent for some m".to_string(), some_quotient),
                ("G/C(G) nilpotent".to_string(), first_quotient),
            ];
            if preds.windows(2).any(|w| w[0].1 != w[1].1) {
                return Outcome::Fails(
                    "predicates disagree".into(),
                    Witness::Disagreement {
                        predicates: preds,
                        term: None,
                        subgroup: None,
                    },
                );
            }

            let mut pairs = 0;
            for i in self.c_range() {
                let ci = a.c_series.term(i);
                for h in self.subgroups().iter().filter(|h| ci.is_subgroup_of(h)) {
                    pairs += 1;
                    let h_nil = self.subgroup_nilpotent(h);
                    let r = Restriction::new(self.g, h);
                    let kernel = SubgroupSet::from_closed(r.pull(ci.members()));
                    let q = quotient(&r.group, &kernel).expect("C_i is normal in G");
                    let q_nil = is_nilpotent(&q.quotient);
                    if q_nil != h_nil {
                        return Outcome::Fails(
                            format!("H/C_{i} vs H for a subgroup of order {}", h.size()),
                            Witness::Disagreement {
                                predicates: vec![
                                    (format!("H/C_{i} nilpotent"), q_nil),
                                    ("H nilpotent".into(), h_nil),
                                ],
                                term: Some(i),
                                subgroup: Some(h.to_vec()),
                            },
                        );
                    }
                }
            }

            if first_quotient {
                for (_, c) in cyclic_subgroups(self.g) {
                    let v = is_subnormal(self.g, &c);
                    if !v.is_subnormal {
                        return Outcome::Fails(
                            "G/C(G) nilpotent but a cyclic subgroup is not subnormal".into(),
                            Witness::NotSubnormal {
                                subgroup: c.to_vec(),
                                stalled_at: v.chain.last().expect("non-empty").to_vec(),
                            },
                        );
                    }
                }
            }
            Outcome::Holds(format!(
                "all predicates {}; {pairs} (H, C_i) pairs with C_i ≤ H",
                if nilpotent { "true" } else { "false" }
            ))
        })
    }

    /// `[G : C(G)] ≤ (n − 1)!` with `n` the number of distinct centralizers.
    pub fn centralizer_count_bound(&self) -> ClaimResult {
        timed("centralizer-count-bound", None, || {
            let n = distinct_centralizer_count(self.g);
            let index = (self.g.order() / self.c_norm.size()) as u64;
            let bound = factorial_saturating(n - 1, index);
            if index > bound {
                return Outcome::Fails(
                    format!("{n} centralizers"),
                    Witness::BoundExceeded {
                        quantity: "[G : C(G)]".into(),
                        value: index,
                        bound,
                    },
                );
            }
            Outcome::Holds(format!("n = {n}, [G : C(G)] = {index} <= ({n}-1)!"))
        })
    }

    /// `Z(G) ≤ B_1(G) ≤ Z_2(G)`.
    pub fn norm_sandwich(&self) -> ClaimResult {
        timed("norm-sandwich", None, || {
            let b1 = baer_norm(self.g);
            let z1 = self.analysis.upper_central.term(1);
            let z2 = self.analysis.upper_central.term(2);
            if let Some(w) = not_contained("Z(G) ≤ B_1(G)", None, z1.members(), b1.members()) {
                return Outcome::Fails("center escapes B_1".into(), w);
            }
            if let Some(w) = not_contained("B_1(G) ≤ Z_2(G)", None, b1.members(), z2.members()) {
                return Outcome::Fails("B_1 escapes Z_2".into(), w);
            }
            Outcome::Holds(format!(
                "|Z| = {}, |B_1| = {}, |Z_2| = {}",
                z1.size(),
                b1.size(),
                z2.size()
            ))
        })
    }

    /// `B_1(G) ≤ C(G)`.
    pub fn norm_ordering(&self) -> ClaimResult {
        timed("norm-ordering", None, || {
            let b1 = baer_norm(self.g);
            match not_contained("B_1(G) ≤ C(G)", None, b1.members(), self.c_norm.members()) {
                Some(w) => Outcome::Fails("B_1 escapes C(G)".into(), w),
                None => Outcome::Holds(format!(
                    "|B_1| = {}, |C| = {}",
                    b1.size(),
                    self.c_norm.size()
                )),
            }
        })
    }

    /// Class-representative `C(G)` equals the all-elements intersection.
    pub fn c_norm_oracle(&self) -> ClaimResult {
        timed("c-norm-oracle", None, || {
            let naive = centralizer_norm_naive(self.g);
            match sets_differ(
                "C(G) by class representatives vs all elements",
                None,
                self.c_norm.members(),
                naive.members(),
            ) {
                Some(w) => Outcome::Fails("routes disagree".into(), w),
                None => Outcome::Holds(format!("|C(G)| = {} both ways", naive.size())),
            }
        })
    }

    /// `B_1` via cyclic subgroups equals `B_1` via all subgroups.
    pub fn b1_oracle(&self) -> ClaimResult {
        timed("b1-oracle", None, || {
            if self.g.order() > EXHAUSTIVE_SUBGROUP_LIMIT {
                return Outcome::Vacuous(format!(
                    "not evaluated: subgroup enumeration limited to order <= {EXHAUSTIVE_SUBGROUP_LIMIT}"
                ));
            }
            let cyc = baer_norm(self.g);
            let full = baer_norm_exhaustive(self.g);
            match sets_differ(
                "B_1 via cyclic subgroups vs all subgroups",
                None,
                cyc.members(),
                full.members(),
            ) {
                Some(w) => Outcome::Fails("routes disagree".into(), w),
                None => Outcome::Holds(format!("|B_1| = {} both ways", cyc.size())),
            }
        })
    }

    /// Nilpotency class from above equals class from below.
    pub fn class_agreement(&self) -> ClaimResult {
        timed("class-agreement", None, || {
            let up = &self.analysis.upper_central;
            let low = &self.analysis.lower_central;
            if up.reaches_whole_group != low.reaches_trivial {
                return Outcome::Fails(
                    "series disagree on nilpotency".into(),
                    Witness::Disagreement {
                        predicates: vec![
                            ("upper central reaches G".into(), up.reaches_whole_group),
                            ("lower central reaches 1".into(), low.reaches_trivial),
                        ],
                        term: None,
                        subgroup: None,
                    },
                );
            }
            if up.reaches_whole_group && up.stabilized_at != low.stabilized_at {
                return Outcome::Fails(
                    "class mismatch".into(),
                    Witness::ValueMismatch {
                        quantity: "nilpotency class (upper vs lower)".into(),
                        expected: up.stabilized_at as u64,
                        actual: low.stabilized_at as u64,
                    },
                );
            }
            if up.reaches_whole_group {
                Outcome::Holds(format!("class {} both ways", up.stabilized_at))
            } else {
                Outcome::Holds("neither series terminates".into())
            }
        })
    }

    /// `Z_j(G/Z_i) = Z_{i+j}/Z_i`, compared inside `G/Z_i`.
    pub fn quotient_central_series(&self) -> ClaimResult {
        timed("quotient-central-series", None, || {
            let z = &self.analysis.upper_central;
            let top = z.stabilized_at;
            for i in 0..=top {
                let q = quotient(self.g, z.term(i)).expect("Z_i is normal");
                let zq = upper_central_series(&q.quotient);
                for j in 0..=(top - i + 1) {
                    let image = q.image(z.term(i + j).members());
                    if let Some(w) = sets_differ(
                        "Z_j(G/Z_i) vs Z_(i+j)/Z_i (quotient indices)",
                        Some(i * 1000 + j),
                        zq.term(j).members(),
                        &image,
                    ) {
                        return Outcome::Fails(format!("i = {i}, j = {j}"), w);
                    }
                }
            }
            Outcome::Holds(format!("0 <= i <= {top}"))
        })
    }

    /// Each `C_i` is normal in `G` and contains `C_{i-1}`.
    pub fn c_series_normal(&self) -> ClaimResult {
        timed("c-series-normal", None, || {
            let terms = &self.analysis.c_series.terms;
            for (i, t) in terms.iter().enumerate() {
                if let Some((h, c)) = t.normality_witness(self.g) {
                    return Outcome::Fails(
                        format!("C_{i} not normal"),
                        Witness::NotNormal {
                            term: Some(i),
                            subgroup: t.to_vec(),
                            h,
                            t: c,
                        },
                    );
                }
                if i > 0 {
                    if let Some(w) = not_contained(
                        "C_(i-1) ≤ C_i",
                        Some(i),
                        terms[i - 1].members(),
                        t.members(),
                    ) {
                        return Outcome::Fails(format!("C_{} ⊄ C_{i}", i - 1), w);
                    }
                }
            }
            Outcome::Holds(format!("{} terms", terms.len()))
        })
    }

    /// A nilpotent group of class `c ≥ 2` has `C_{c−1}(G) = G`.
    pub fn nilpotent_class_bound(&self) -> ClaimResult {
        timed("nilpotent-class-bound", None, || {
            let p = &self.analysis.profile;
            let Some(class) = p.nilpotency_class else {
                return Outcome::Vacuous("G is not nilpotent".into());
            };
            let bound = class.saturating_sub(1).max(1);
            match p.c_length {
                None => Outcome::Fails(
                    "nilpotent but C-series stalls".into(),
                    Witness::Disagreement {
                        predicates: vec![
                            ("G nilpotent".into(), true),
                            ("G = C_n(G) for some n".into(), false),
                        ],
                        term: None,
                        subgroup: None,
                    },
                ),
                Some(n) if n > bound => Outcome::Fails(
                    format!("class {class}, c-length {n}"),
                    Witness::BoundExceeded {
                        quantity: "c-length".into(),
                        value: n as u64,
                        bound: bound as u64,
                    },
                ),
                Some(n) => Outcome::Holds(format!("class {class}, c-length {n} <= {bound}")),
            }
        })
    }

    /// Baer (all cyclic subgroups subnormal) iff nilpotent.
    pub fn baer_nilpotent(&self) -> ClaimResult {
        timed("baer-nilpotent", None, || {
            let p = &self.analysis.profile;
            if p.is_baer != p.is_nilpotent {
                return Outcome::Fails(
                    "Baer and nilpotent disagree".into(),
                    Witness::Disagreement {
                        predicates: vec![
                            ("every cyclic subgroup subnormal".into(), p.is_baer),
                            ("G nilpotent".into(), p.is_nilpotent),
                        ],
                        term: None,
                        subgroup: None,
                    },
                );
            }
            Outcome::Holds(format!("both {}", p.is_nilpotent))
        })
    }

    /// Every registered claim, in fixed order.
    pub fn run_all(&self) -> Vec<ClaimResult> {
        vec![
            self.c_nilpotent_class3(),
            self.soluble_length_bound(),
            self.subgroup_monotonicity(),
            self.sandwich(),
            self.hall_criterion(),
            self.quotient_equivalences(),
            self.centralizer_count_bound(),
            self.norm_sandwich(),
            self.norm_ordering(),
            self.c_norm_oracle(),
            self.b1_oracle(),
            self.class_agreement(),
            self.quotient_central_series(),
            self.c_series_normal(),
            self.nilpotent_class_bound(),
            self.baer_nilpotent(),
        ]
    }
}

/// Claim identifiers in [`Verifier::run_all`] order.
pub const CLAIM_IDS: [&str; 16] = [
    "c-norm-structure",
    "soluble-length-bound",
    "subgroup-monotone",
    "c-series-sandwich",
    "hall-criterion",
    "quotient-equivalences",
    "centralizer-count-bound",
    "norm-sandwich",
    "norm-ordering",
    "c-norm-oracle",
    "b1-oracle",
    "class-agreement",
    "quotient-central-series",
    "c-series-normal",
    "nilpotent-class-bound",
    "baer-nilpotent",
];

/// `k!`, or any value above `limit` once the product exceeds it.
fn factorial_saturating(k: usize, limit: u64) -> u64 {
    let mut acc: u64 = 1;
    for i in 2..=k as u64 {
        acc = acc.saturating_mul(i);
        if acc > limit {
            return acc;
        }
    }
    acc
}

pub fn run_all(g: &FiniteGroup, name: &str) -> Result<VerificationReport> {
    run_all_with(g, name, VerifyOptions::default())
}

pub fn run_all_with(
    g: &FiniteGroup,
    name: &str,
    opts: VerifyOptions,
) -> Result<VerificationReport> {
    let v = Verifier::new(g, opts)?;
    Ok(VerificationReport {
        group_name: name.to_string(),
        group_order: g.order(),
        results: v.run_all(),
        profile: v.analysis.profile.clone(),
    })
}

macro_rules! single_claim {
    ($(#[$doc:meta])* $name:ident => $method:ident) => {
        $(#[$doc])*
        pub fn $name(g: &FiniteGroup) -> Result<ClaimResult> {
            Ok(Verifier::new(g, VerifyOptions::default())?.$method())
        }
    };
}

single_claim!(check_c_nilpotent_class3 => c_nilpotent_class3);
single_claim!(check_remark_soluble_2n => soluble_length_bound);
single_claim!(check_subgroup_monotonicity => subgroup_monotonicity);
single_claim!(check_sandwich => sandwich);
single_claim!(check_hall_criterion => hall_criterion);
single_claim!(check_quotient_equivalences => quotient_equivalences);
single_claim!(check_centralizer_count_bound => centralizer_count_bound);

/// `ν₂(n)`.
pub fn two_adic_valuation(n: usize) -> u32 {
    assert!(n > 0);
    n.trailing_zeros()
}

/// Predicted `|C_1(D)|` from the case table: 1 for `α ≤ 1`, 2 for `α = 2`,
/// 4 for `α ≥ 3`.
pub fn dihedral_case_table(alpha: u32) -> usize {
    match alpha {
        0 | 1 => 1,
        2 => 2,
        _ => 4,
    }
}

/// Result of [`measure_dihedral`], with the measured quantities.
#[derive(Clone, Debug)]
pub struct DihedralCheck {
    pub n: usize,
    pub order: usize,
    pub alpha: u32,
    pub c1_order: usize,
    pub table_value: usize,
    pub table_matches: bool,
    /// `C_i = Z_{2i}` for every `i` up to stabilization of both series.
    pub series_identity_holds: bool,
    pub result: ClaimResult,
}

/// Checks the dihedral predictions on `D_n` (order `2n`): the `|C_1|` case table
/// with `n = 2^α·m`, `m` odd, and `C_i = Z_{2i}` as sets.
pub fn check_dihedral_lemma(n: usize) -> Result<ClaimResult> {
    measure_dihedral(n).map(|d| d.result)
}

/// [`check_dihedral_lemma`] together with the measured quantities.
pub fn measure_dihedral(n: usize) -> Result<DihedralCheck> {
    measure_dihedral_capped(n, DEFAULT_ORDER_CAP)
}

pub fn measure_dihedral_capped(n: usize, cap: usize) -> Result<DihedralCheck> {
    let g = FamilySpec::Dihedral(n).build(cap)?;
    let c = crate::series::c_series(&g)?;
    let z = upper_central_series(&g);
    let alpha = two_adic_valuation(n);
    let table_value = dihedral_case_table(alpha);
    let c1_order = c.term(1).size();
    let top = c.stabilized_at.max(z.stabilized_at);
    let series_witness = (0..=top).find_map(|i| {
        sets_differ(
            "C_i = Z_2i",
            Some(i),
            c.term(i).members(),
            z.term(2 * i).members(),
        )
    });
    let series_identity_holds = series_witness.is_none();
    let table_matches = c1_order == table_value;
    let result = timed("dihedral-c-series", None, || {
        let detail = format!(
            "D_{n} (order {}), alpha = {alpha}: |C_1| = {c1_order}, table {table_value}; C_i = Z_2i {}",
            2 * n,
            if series_identity_holds { "holds" } else { "fails" }
        );
        if !table_matches {
            Outcome::Fails(
                detail,
                Witness::ValueMismatch {
                    quantity: format!("|C_1(D_{n})| against the alpha = {alpha} case"),
                    expected: table_value as u64,
                    actual: c1_order as u64,
                },
            )
        } else if let Some(w) = series_witness.clone() {
            Outcome::Fails(detail, w)
        } else {
            Outcome::Holds(detail)
        }
    });
    Ok(DihedralCheck {
        n,
        order: 2 * n,
        alpha,
        c1_order,
        table_value,
        table_matches,
        series_identity_holds,
        result,
    })
}
