//! The centralizer norm `C(G)`, Baer's norm, the ascending C-series and the
//! classical central and derived series, plus commutator and Engel calculus.

use serde::{Deserialize, Serialize};

use crate::bitset::ElementSet;
use crate::error::{GroupError, Result};
use crate::group::{ElementId, FiniteGroup};
use crate::quotient::quotient;
use crate::subgroup::{
    all_subgroups, center, centralizer, cyclic_subgroups, generated, is_subnormal, normalizer_of,
    SubgroupSet,
};

/// `[x, y] = x⁻¹ y⁻¹ x y`.
#[inline]
pub fn commutator(g: &FiniteGroup, x: ElementId, y: ElementId) -> ElementId {
    g.mul(g.mul(g.inv(x), g.inv(y)), g.mul(x, y))
}

/// Left-normed `[x, m y]`: `[x, 1 y] = [x, y]`, `[x, (m+1) y] = [[x, m y], y]`.
pub fn iterated_commutator(g: &FiniteGroup, x: ElementId, y: ElementId, m: usize) -> ElementId {
    assert!(m >= 1, "Engel length must be positive");
    let mut c = x;
    for _ in 0..m {
        c = commutator(g, c, y);
        if c == g.identity() {
            break;
        }
    }
    c
}

/// First `y` with `[x, n y] ≠ 1`.
pub fn engel_witness(g: &FiniteGroup, x: ElementId, n: usize) -> Option<ElementId> {
    g.elements()
        .find(|&y| iterated_commutator(g, x, y, n) != g.identity())
}

pub fn is_right_n_engel(g: &FiniteGroup, x: ElementId, n: usize) -> bool {
    engel_witness(g, x, n).is_none()
}

/// `R_n(G)` as a raw element set. Not asserted to be a subgroup.
pub fn right_engel_set(g: &FiniteGroup, n: usize) -> ElementSet {
    ElementSet::from_indices(
        g.order(),
        g.elements().filter(|&x| is_right_n_engel(g, x, n)),
    )
}

pub fn is_n_engel_group(g: &FiniteGroup, n: usize) -> bool {
    g.elements().all(|x| is_right_n_engel(g, x, n))
}

/// Largest Engel length any claim about `c_series` needs.
pub fn engel_scan_cap(c_series: &SeriesReport) -> usize {
    2 * c_series.stabilized_at + 2
}

/// Normal core: the largest normal subgroup of `g` inside `h`.
pub fn normal_core(g: &FiniteGroup, h: &SubgroupSet) -> SubgroupSet {
    SubgroupSet::from_closed(ElementSet::from_indices(
        g.order(),
        h.iter()
            .filter(|&x| g.elements().all(|t| h.contains(g.conj(x, t)))),
    ))
}

/// `C(G) = ⋂_{a ∈ G} N_G(C_G(a))`.
///
/// Uses one representative per conjugacy class: `N(C(a^t)) = N(C(a))^t`, so
/// the intersection over a class is the normal core of `N(C(a))`.
pub fn centralizer_norm(g: &FiniteGroup) -> SubgroupSet {
    if g.is_abelian() {
        return SubgroupSet::whole(g);
    }
    let mut acc = ElementSet::full(g.order());
    for class in g.conjugacy_classes() {
        let n = normalizer_of(g, &centralizer(g, class.representative));
        acc.intersect_with(normal_core(g, &n).members());
    }
    SubgroupSet::from_closed(acc)
}

/// `C(G)` by intersecting the normalizer of every element's centralizer.
pub fn centralizer_norm_naive(g: &FiniteGroup) -> SubgroupSet {
    let mut acc = ElementSet::full(g.order());
    for a in g.elements() {
        acc.intersect_with(normalizer_of(g, &centralizer(g, a)).members());
    }
    SubgroupSet::from_closed(acc)
}

/// Baer's norm `B_1(G)` via cyclic subgroups only: an element normalizing
/// every `⟨x⟩` maps each generator of any subgroup back into it.
pub fn baer_norm(g: &FiniteGroup) -> SubgroupSet {
    let mut acc = ElementSet::full(g.order());
    for (_, c) in cyclic_subgroups(g) {
        acc.intersect_with(normalizer_of(g, &c).members());
    }
    SubgroupSet::from_closed(acc)
}

/// `B_1(G)` intersecting normalizers of every subgroup. Small orders only.
pub fn baer_norm_exhaustive(g: &FiniteGroup) -> SubgroupSet {
    let mut acc = ElementSet::full(g.order());
    for h in all_subgroups(g) {
        acc.intersect_with(normalizer_of(g, &h).members());
    }
    SubgroupSet::from_closed(acc)
}

/// `G' = ⟨[x, y] : x, y ∈ G⟩`.
pub fn derived_subgroup(g: &FiniteGroup) -> SubgroupSet {
    commutator_subgroup(g, &SubgroupSet::whole(g), &SubgroupSet::whole(g))
}

/// `[A, B] = ⟨[a, b] : a ∈ A, b ∈ B⟩`.
pub fn commutator_subgroup(g: &FiniteGroup, a: &SubgroupSet, b: &SubgroupSet) -> SubgroupSet {
    let mut seeds = ElementSet::empty(g.order());
    for x in a.iter() {
        for y in b.iter() {
            seeds.insert(commutator(g, x, y));
        }
    }
    generated(g, seeds.iter())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SeriesKind {
    CSeries,
    UpperCentral,
    LowerCentral,
    Derived,
}

/// A chain of subgroups up to and including the first repeated term.
///
/// `terms` holds terms `0..=stabilized_at`; every later term equals the last.
#[derive(Clone, Debug)]
pub struct SeriesReport {
    pub kind: SeriesKind,
    pub terms: Vec<SubgroupSet>,
    pub stabilized_at: usize,
    pub reaches_whole_group: bool,
    pub reaches_trivial: bool,
}

impl SeriesReport {
    fn from_terms(kind: SeriesKind, terms: Vec<SubgroupSet>) -> Self {
        let last = terms.last().expect("series has a first term");
        SeriesReport {
            kind,
            stabilized_at: terms.len() - 1,
            reaches_whole_group: last.is_whole(),
            reaches_trivial: last.is_trivial(),
            terms,
        }
    }

    /// Term `i`, clamped to the terminal term.
    pub fn term(&self, i: usize) -> &SubgroupSet {
        &self.terms[i.min(self.stabilized_at)]
    }

    pub fn terminal(&self) -> &SubgroupSet {
        &self.terms[self.stabilized_at]
    }

    pub fn orders(&self) -> Vec<usize> {
        self.terms.iter().map(SubgroupSet::size).collect()
    }
}

/// Iterates `next` from `first` until two consecutive terms coincide.
fn iterate(
    kind: SeriesKind,
    first: SubgroupSet,
    mut next: impl FnMut(&SubgroupSet) -> Result<SubgroupSet>,
) -> Result<SeriesReport> {
    let mut terms = vec![first];
    loop {
        let t = next(terms.last().expect("non-empty"))?;
        if &t == terms.last().expect("non-empty") {
            return Ok(SeriesReport::from_terms(kind, terms));
        }
        terms.push(t);
    }
}

/// `C_0 = 1`, `C_{i+1} = { x : xC_i ∈ C(G/C_i) }`.
pub fn c_series(g: &FiniteGroup) -> Result<SeriesReport> {
    iterate(SeriesKind::CSeries, SubgroupSet::trivial(g), |term| {
        let q = quotient(g, term).map_err(|e| match e {
            GroupError::NotNormal { h, t } => GroupError::InternalInvariantViolated(format!(
                "C-series term of order {} is not normal: conjugating {h} by {t} leaves it",
                term.size()
            )),
            other => other,
        })?;
        Ok(q.preimage_subgroup(&centralizer_norm(&q.quotient)))
    })
}

/// `Z_0 = 1`, `Z_{i+1} = { x : [x, y] ∈ Z_i for all y }`.
pub fn upper_central_series(g: &FiniteGroup) -> SeriesReport {
    iterate(SeriesKind::UpperCentral, SubgroupSet::trivial(g), |z| {
        Ok(SubgroupSet::from_closed(ElementSet::from_indices(
            g.order(),
            g.elements()
                .filter(|&x| g.elements().all(|y| z.contains(commutator(g, x, y)))),
        )))
    })
    .expect("upper central step cannot fail")
}

/// Upper central series through explicit quotients, `Z_{i+1} / Z_i = Z(G / Z_i)`.
pub fn upper_central_series_via_quotients(g: &FiniteGroup) -> Result<SeriesReport> {
    iterate(SeriesKind::UpperCentral, SubgroupSet::trivial(g), |z| {
        let q = quotient(g, z)?;
        Ok(q.preimage_subgroup(&center(&q.quotient)))
    })
}

/// `γ_1 = G` (term 0), `γ_{i+1} = [γ_i, G]`.
pub fn lower_central_series(g: &FiniteGroup) -> SeriesReport {
    let whole = SubgroupSet::whole(g);
    iterate(SeriesKind::LowerCentral, whole.clone(), |gamma| {
        Ok(commutator_subgroup(g, gamma, &whole))
    })
    .expect("lower central step cannot fail")
}

/// `G^(0) = G`, `G^(i+1) = [G^(i), G^(i)]`.
pub fn derived_series(g: &FiniteGroup) -> SeriesReport {
    iterate(SeriesKind::Derived, SubgroupSet::whole(g), |d| {
        Ok(commutator_subgroup(g, d, d))
    })
    .expect("derived step cannot fail")
}

/// Structural summary of a group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupProfile {
    pub is_nilpotent: bool,
    pub nilpotency_class: Option<usize>,
    pub is_soluble: bool,
    pub derived_length: Option<usize>,
    /// Least `n ≥ 1` with `C_n(G) = G`.
    pub c_length: Option<usize>,
    /// Every cyclic subgroup is subnormal.
    pub is_baer: bool,
}

/// Every series of one group, computed once and shared by later checks.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub c_series: SeriesReport,
    pub upper_central: SeriesReport,
    pub lower_central: SeriesReport,
    pub derived: SeriesReport,
    pub profile: GroupProfile,
}

impl Analysis {
    pub fn new(g: &FiniteGroup) -> Result<Self> {
        let c = c_series(g)?;
        let upper = upper_central_series(g);
        let lower = lower_central_series(g);
        let derived = derived_series(g);
        let is_baer = cyclic_subgroups(g)
            .iter()
            .all(|(_, h)| is_subnormal(g, h).is_subnormal);
        let profile = GroupProfile {
            is_nilpotent: upper.reaches_whole_group,
            nilpotency_class: upper.reaches_whole_group.then_some(upper.stabilized_at),
            is_soluble: derived.reaches_trivial,
            derived_length: derived.reaches_trivial.then_some(derived.stabilized_at),
            c_length: c.reaches_whole_group.then_some(c.stabilized_at.max(1)),
            is_baer,
        };
        Ok(Analysis {
            c_series: c,
            upper_central: upper,
            lower_central: lower,
            derived,
            profile,
        })
    }
}

pub fn profile(g: &FiniteGroup) -> Result<GroupProfile> {
    Analysis::new(g).map(|a| a.profile)
}

/// Nilpotency test without building the full profile.
pub fn is_nilpotent(g: &FiniteGroup) -> bool {
    upper_central_series(g).reaches_whole_group
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;
    use crate::subgroup::cyclic;

    fn orders(s: &SeriesReport) -> Vec<usize> {
        s.orders()
    }

    fn s3_parts(g: &FiniteGroup) -> (ElementId, ElementId) {
        let t = g.elements().find(|&x| g.element_order(x) == 2).unwrap();
        let c = g.elements().find(|&x| g.element_order(x) == 3).unwrap();
        (t, c)
    }

    #[test]
    fn commutators() {
        let z6 = make_cyclic(6).unwrap();
        assert!(z6
            .elements()
            .all(|x| z6.elements().all(|y| commutator(&z6, x, y) == 0)));
        let s3 = make_symmetric(3).unwrap();
        let (t, c) = s3_parts(&s3);
        let k = commutator(&s3, t, c);
        assert_eq!(s3.element_order(k), 3);
        assert_eq!(commutator(&s3, 0, c), 0);
    }

    #[test]
    fn engel_in_d4() {
        let g = make_dihedral(4).unwrap();
        let (r, s) = (1, 4);
        assert_eq!(commutator(&g, s, r), 2);
        assert_eq!(iterated_commutator(&g, s, r, 2), 0);
        assert!(is_n_engel_group(&g, 2));
        assert!(!is_n_engel_group(&g, 1));
    }

    #[test]
    fn engel_sets() {
        let s3 = make_symmetric(3).unwrap();
        let (t, _) = s3_parts(&s3);
        assert!(!is_right_n_engel(&s3, t, 2));
        assert_eq!(right_engel_set(&s3, 2).to_vec(), vec![0]);
        for n in 1..=10 {
            assert!(!is_n_engel_group(&s3, n));
        }
        for entry in standard_corpus(24).unwrap() {
            let g = &entry.group;
            assert_eq!(right_engel_set(g, 1), center(g).members().clone());
        }
        let z5 = make_cyclic(5).unwrap();
        assert_eq!(right_engel_set(&z5, 3).count(), 5);
    }

    #[test]
    fn centralizer_norm_examples() {
        assert!(centralizer_norm(&make_cyclic(6).unwrap()).is_whole());
        let s3 = make_symmetric(3).unwrap();
        assert!(centralizer_norm(&s3).is_trivial());
        assert!(centralizer_norm_naive(&s3).is_trivial());
        let q8 = make_generalized_quaternion(8).unwrap();
        assert!(centralizer_norm(&q8).is_whole());
    }

    #[test]
    fn baer_norm_examples() {
        assert!(baer_norm(&make_cyclic(4).unwrap()).is_whole());
        assert!(baer_norm(&make_symmetric(3).unwrap()).is_trivial());
        let q8 = make_generalized_quaternion(8).unwrap();
        assert!(baer_norm(&q8).is_whole());
        assert_eq!(baer_norm_exhaustive(&q8), baer_norm(&q8));
    }

    #[test]
    fn c_series_examples() {
        let d16 = make_dihedral(16).unwrap();
        let c = c_series(&d16).unwrap();
        assert_eq!(orders(&c), vec![1, 4, 32]);
        let z = upper_central_series(&d16);
        assert_eq!(orders(&z), vec![1, 2, 4, 8, 32]);
        assert!(z.term(3).is_subgroup_of(c.term(2)) && z.term(3) != c.term(2));
        assert_eq!(c.term(2), z.term(4));

        let z6 = make_cyclic(6).unwrap();
        let c = c_series(&z6).unwrap();
        assert_eq!(c.stabilized_at, 1);
        assert!(c.reaches_whole_group);

        let s3 = make_symmetric(3).unwrap();
        let c = c_series(&s3).unwrap();
        assert_eq!(c.stabilized_at, 0);
        assert!(!c.reaches_whole_group);
        assert!(c.term(1).is_trivial());
    }

    #[test]
    fn upper_central_examples() {
        assert_eq!(
            upper_central_series(&make_cyclic(5).unwrap()).stabilized_at,
            1
        );
        let s3 = upper_central_series(&make_symmetric(3).unwrap());
        assert_eq!(s3.stabilized_at, 0);
        assert!(!s3.reaches_whole_group);
        let d8 = make_dihedral(8).unwrap();
        assert_eq!(orders(&upper_central_series(&d8)), vec![1, 2, 4, 16]);
        assert_eq!(
            orders(&upper_central_series_via_quotients(&d8).unwrap()),
            vec![1, 2, 4, 16]
        );
    }

    #[test]
    fn lower_central_examples() {
        assert_eq!(
            orders(&lower_central_series(&make_cyclic(4).unwrap())),
            vec![4, 1]
        );
        let s3 = lower_central_series(&make_symmetric(3).unwrap());
        assert_eq!(orders(&s3), vec![6, 3]);
        assert!(!s3.reaches_trivial);
        let d4 = make_dihedral(4).unwrap();
        let l = lower_central_series(&d4);
        assert_eq!(orders(&l), vec![8, 2, 1]);
        assert_eq!(l.terms[1].to_vec(), vec![0, 2]);
    }

    #[test]
    fn derived_examples() {
        assert_eq!(derived_series(&make_cyclic(7).unwrap()).stabilized_at, 1);
        assert_eq!(
            orders(&derived_series(&make_symmetric(3).unwrap())),
            vec![6, 3, 1]
        );
        let s5 = derived_series(&make_symmetric(5).unwrap());
        assert_eq!(orders(&s5), vec![120, 60]);
        assert!(!s5.reaches_trivial);
    }

    #[test]
    fn profiles() {
        let p = profile(&make_cyclic(6).unwrap()).unwrap();
        assert_eq!(
            p,
            GroupProfile {
                is_nilpotent: true,
                nilpotency_class: Some(1),
                is_soluble: true,
                derived_length: Some(1),
                c_length: Some(1),
                is_baer: true,
            }
        );
        let p = profile(&make_dihedral(8).unwrap()).unwrap();
        assert_eq!(p.nilpotency_class, Some(3));
        assert_eq!(p.c_length, Some(2));
        let p = profile(&make_symmetric(3).unwrap()).unwrap();
        assert!(!p.is_nilpotent && !p.is_baer);
        assert_eq!(p.derived_length, Some(2));
        assert_eq!(p.c_length, None);
        let p = profile(&make_cyclic(1).unwrap()).unwrap();
        assert_eq!(p.nilpotency_class, Some(0));
        assert_eq!(p.c_length, Some(1));
    }

    #[test]
    fn normal_core_of_transposition_subgroup() {
        let s3 = make_symmetric(3).unwrap();
        let (t, _) = s3_parts(&s3);
        assert!(normal_core(&s3, &cyclic(&s3, t)).is_trivial());
    }
}
