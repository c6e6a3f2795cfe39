//! Subgroup-level computations: centralizers, normalizers, generated
//! subgroups, normal closures and subnormality.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::bitset::ElementSet;
use crate::error::{GroupError, Result};
use crate::group::{ElementId, FiniteGroup};

/// A subgroup of a parent group, stored as a membership bitset.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SubgroupSet {
    members: ElementSet,
    size: usize,
}

impl SubgroupSet {
    /// Validates that `elements` form a subgroup of `g`.
    pub fn new(g: &FiniteGroup, elements: &[ElementId]) -> Result<Self> {
        if elements.iter().any(|&x| x >= g.order()) {
            return Err(GroupError::NotASubgroup);
        }
        let members = ElementSet::from_indices(g.order(), elements.iter().copied());
        if !members.contains(g.identity()) {
            return Err(GroupError::NotASubgroup);
        }
        for a in members.iter() {
            if !members.contains(g.inv(a)) {
                return Err(GroupError::NotASubgroup);
            }
            for b in members.iter() {
                if !members.contains(g.mul(a, b)) {
                    return Err(GroupError::NotASubgroup);
                }
            }
        }
        Ok(Self::from_closed(members))
    }

    /// Wraps a set already known to be closed.
    pub(crate) fn from_closed(members: ElementSet) -> Self {
        let size = members.count();
        SubgroupSet { members, size }
    }

    pub fn trivial(g: &FiniteGroup) -> Self {
        Self::from_closed(ElementSet::from_indices(g.order(), [g.identity()]))
    }

    pub fn whole(g: &FiniteGroup) -> Self {
        Self::from_closed(ElementSet::full(g.order()))
    }

    #[inline]
    pub fn contains(&self, x: ElementId) -> bool {
        self.members.contains(x)
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn parent_order(&self) -> usize {
        self.members.universe()
    }

    pub fn members(&self) -> &ElementSet {
        &self.members
    }

    pub fn iter(&self) -> impl Iterator<Item = ElementId> + '_ {
        self.members.iter()
    }

    pub fn to_vec(&self) -> Vec<ElementId> {
        self.members.to_vec()
    }

    pub fn is_subgroup_of(&self, other: &SubgroupSet) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn is_whole(&self) -> bool {
        self.size == self.parent_order()
    }

    pub fn is_trivial(&self) -> bool {
        self.size == 1
    }

    /// A pair `(h, t)` with `t⁻¹ h t` outside `self`, if any.
    pub fn normality_witness(&self, g: &FiniteGroup) -> Option<(ElementId, ElementId)> {
        for t in g.elements() {
            for h in self.iter() {
                if !self.contains(g.conj(h, t)) {
                    return Some((h, t));
                }
            }
        }
        None
    }

    pub fn is_normal_in(&self, g: &FiniteGroup) -> bool {
        self.normality_witness(g).is_none()
    }
}

/// A subgroup re-indexed as a standalone group, with the index maps back to
/// the parent. The parent identity becomes local index 0; other members
/// follow in increasing parent order.
#[derive(Clone, Debug)]
pub struct Restriction {
    pub group: FiniteGroup,
    pub to_parent: Vec<ElementId>,
    from_parent: Vec<Option<ElementId>>,
}

impl Restriction {
    pub fn new(g: &FiniteGroup, h: &SubgroupSet) -> Self {
        let mut to_parent = vec![g.identity()];
        to_parent.extend(h.iter().filter(|&x| x != g.identity()));
        let mut from_parent = vec![None; g.order()];
        for (local, &x) in to_parent.iter().enumerate() {
            from_parent[x] = Some(local);
        }
        let labels = to_parent.iter().map(|&x| g.label(x).to_string()).collect();
        let group = FiniteGroup::from_product_fn(to_parent.len(), labels, |i, j| {
            from_parent[g.mul(to_parent[i], to_parent[j])].expect("subgroup is closed")
        });
        Restriction {
            group,
            to_parent,
            from_parent,
        }
    }

    pub fn local(&self, parent: ElementId) -> Option<ElementId> {
        self.from_parent[parent]
    }

    /// Image in the parent of a local subset.
    pub fn lift(&self, local: &ElementSet) -> ElementSet {
        ElementSet::from_indices(
            self.from_parent.len(),
            local.iter().map(|i| self.to_parent[i]),
        )
    }

    pub fn lift_subgroup(&self, local: &SubgroupSet) -> SubgroupSet {
        SubgroupSet::from_closed(self.lift(local.members()))
    }

    /// Local indices of the parent elements of `set` lying in the subgroup.
    pub fn pull(&self, set: &ElementSet) -> ElementSet {
        ElementSet::from_indices(
            self.to_parent.len(),
            set.iter().filter_map(|x| self.from_parent[x]),
        )
    }
}

/// `{ y : xy = yx }`.
pub fn centralizer(g: &FiniteGroup, x: ElementId) -> SubgroupSet {
    let members = ElementSet::from_indices(
        g.order(),
        g.elements().filter(|&y| g.mul(x, y) == g.mul(y, x)),
    );
    SubgroupSet::from_closed(members)
}

pub fn center(g: &FiniteGroup) -> SubgroupSet {
    let members = ElementSet::from_indices(
        g.order(),
        g.elements()
            .filter(|&x| g.elements().all(|y| g.mul(x, y) == g.mul(y, x))),
    );
    SubgroupSet::from_closed(members)
}

fn check_parent(g: &FiniteGroup, h: &SubgroupSet) -> Result<()> {
    if h.parent_order() != g.order() {
        return Err(GroupError::NotASubgroup);
    }
    Ok(())
}

/// `{ x : x⁻¹ h x = h }`.
pub fn normalizer(g: &FiniteGroup, h: &SubgroupSet) -> Result<SubgroupSet> {
    check_parent(g, h)?;
    Ok(normalizer_of(g, h))
}

pub(crate) fn normalizer_of(g: &FiniteGroup, h: &SubgroupSet) -> SubgroupSet {
    if h.is_whole() || h.is_trivial() {
        return SubgroupSet::whole(g);
    }
    let members = ElementSet::from_indices(
        g.order(),
        g.elements()
            .filter(|&x| h.contains(x) || h.iter().all(|m| h.contains(g.conj(m, x)))),
    );
    SubgroupSet::from_closed(members)
}

/// Smallest subgroup containing every seed. Seeds already in the running
/// closure are skipped, so at most log₂ of the result's order are used.
pub fn generated<I: IntoIterator<Item = ElementId>>(g: &FiniteGroup, seeds: I) -> SubgroupSet {
    let mut members = ElementSet::empty(g.order());
    members.insert(g.identity());
    let mut list = vec![g.identity()];
    let mut gens: Vec<ElementId> = Vec::new();
    for s in seeds {
        if members.contains(s) {
            continue;
        }
        gens.push(s);
        let old_len = list.len();
        let mut i = 0;
        while i < list.len() {
            let x = list[i];
            let use_gens: &[ElementId] = if i < old_len { &[s] } else { &gens };
            for &t in use_gens {
                let y = g.mul(x, t);
                if members.insert(y) {
                    list.push(y);
                }
            }
            i += 1;
        }
    }
    SubgroupSet::from_closed(members)
}

/// `⟨x⟩`.
pub fn cyclic(g: &FiniteGroup, x: ElementId) -> SubgroupSet {
    generated(g, [x])
}

pub fn intersect(a: &SubgroupSet, b: &SubgroupSet) -> Result<SubgroupSet> {
    if a.parent_order() != b.parent_order() {
        return Err(GroupError::ParentMismatch {
            left: a.parent_order(),
            right: b.parent_order(),
        });
    }
    let mut members = a.members.clone();
    members.intersect_with(&b.members);
    Ok(SubgroupSet::from_closed(members))
}

/// Smallest subgroup of `ambient` containing `h` and normalized by `ambient`.
pub fn normal_closure(
    g: &FiniteGroup,
    h: &SubgroupSet,
    ambient: &SubgroupSet,
) -> Result<SubgroupSet> {
    check_parent(g, h)?;
    check_parent(g, ambient)?;
    if let Some(x) = h.members().first_outside(ambient.members()) {
        return Err(GroupError::NotContained(x));
    }
    Ok(normal_closure_of(g, h, ambient))
}

fn normal_closure_of(g: &FiniteGroup, h: &SubgroupSet, ambient: &SubgroupSet) -> SubgroupSet {
    let mut conjugates = ElementSet::empty(g.order());
    for t in ambient.iter() {
        for m in h.iter() {
            conjugates.insert(g.conj(m, t));
        }
    }
    generated(g, conjugates.iter())
}

/// Outcome of the normal-closure descent `K₀ = G, K_{i+1} = ⟨h^{K_i}⟩`.
#[derive(Clone, Debug)]
pub struct SubnormalVerdict {
    pub is_subnormal: bool,
    /// Chain length minus one; present only when subnormal.
    pub defect: Option<usize>,
    /// The descent from `G`. Ends at `h` exactly when subnormal.
    pub chain: Vec<SubgroupSet>,
}

pub fn is_subnormal(g: &FiniteGroup, h: &SubgroupSet) -> SubnormalVerdict {
    let mut chain = vec![SubgroupSet::whole(g)];
    loop {
        let current = chain.last().expect("chain starts non-empty");
        if current == h {
            let defect = chain.len() - 1;
            return SubnormalVerdict {
                is_subnormal: true,
                defect: Some(defect),
                chain,
            };
        }
        let next = normal_closure_of(g, h, current);
        if &next == current {
            return SubnormalVerdict {
                is_subnormal: false,
                defect: None,
                chain,
            };
        }
        chain.push(next);
    }
}

/// Number of distinct sets among `{ C_G(x) : x ∈ G }`.
pub fn distinct_centralizer_count(g: &FiniteGroup) -> usize {
    g.elements()
        .map(|x| centralizer(g, x))
        .collect::<HashSet<_>>()
        .len()
}

/// Distinct cyclic subgroups, each paired with its least generator, in order
/// of that generator.
pub fn cyclic_subgroups(g: &FiniteGroup) -> Vec<(ElementId, SubgroupSet)> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for x in g.elements() {
        let c = cyclic(g, x);
        if seen.insert(c.clone()) {
            out.push((x, c));
        }
    }
    out
}

/// Every subgroup of `g`, by joining cyclic subgroups until nothing new
/// appears. Exponential in general; meant for small orders. Sorted by size,
/// then membership.
pub fn all_subgroups(g: &FiniteGroup) -> Vec<SubgroupSet> {
    let cyclics = cyclic_subgroups(g);
    let mut seen: HashSet<SubgroupSet> = HashSet::new();
    let mut list = Vec::new();
    for (_, c) in &cyclics {
        if seen.insert(c.clone()) {
            list.push(c.clone());
        }
    }
    let mut i = 0;
    while i < list.len() {
        let h = list[i].clone();
        for (x, _) in &cyclics {
            if h.contains(*x) {
                continue;
            }
            let joined = generated(g, h.iter().chain([*x]));
            if seen.insert(joined.clone()) {
                list.push(joined);
            }
        }
        i += 1;
    }
    list.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| a.cmp(b)));
    list
}

/// Subgroups used when a claim quantifies over all subgroups: every cyclic
/// subgroup, every subgroup generated by a pair of conjugacy-class
/// representatives, and the caller's `extra` terms (center, derived subgroup,
/// series terms). Deduplicated, in first-seen order.
pub fn sampled_subgroups(g: &FiniteGroup, extra: &[SubgroupSet]) -> Vec<SubgroupSet> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut push = |h: SubgroupSet| {
        if seen.insert(h.clone()) {
            out.push(h);
        }
    };
    for (_, c) in cyclic_subgroups(g) {
        push(c);
    }
    let reps: Vec<ElementId> = g
        .conjugacy_classes()
        .into_iter()
        .map(|c| c.representative)
        .collect();
    for (i, &a) in reps.iter().enumerate() {
        for &b in &reps[i + 1..] {
            push(generated(g, [a, b]));
        }
    }
    for h in extra {
        push(h.clone());
    }
    out
}

/// How a claim's subgroup family was chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SubgroupCoverage {
    Sampled,
    Exhaustive,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{make_dihedral, make_symmetric};

    fn transposition(g: &FiniteGroup) -> ElementId {
        g.elements().find(|&x| g.element_order(x) == 2).unwrap()
    }

    #[test]
    fn centralizer_of_rotation_in_d4() {
        let g = make_dihedral(4).unwrap();
        let c = centralizer(&g, 1);
        assert_eq!(c.size(), 4);
        assert_eq!(c, cyclic(&g, 1));
        assert!(centralizer(&g, g.identity()).is_whole());
    }

    #[test]
    fn centers() {
        let d4 = make_dihedral(4).unwrap();
        assert_eq!(center(&d4).to_vec(), vec![0, 2]);
        assert!(center(&make_symmetric(3).unwrap()).is_trivial());
    }

    #[test]
    fn transposition_is_self_normalizing_in_s3() {
        let g = make_symmetric(3).unwrap();
        let h = cyclic(&g, transposition(&g));
        assert_eq!(normalizer(&g, &h).unwrap(), h);
        let whole = SubgroupSet::whole(&g);
        assert_eq!(normalizer(&g, &whole).unwrap(), whole);
    }

    #[test]
    fn normalizer_rejects_foreign_subgroup() {
        let g = make_symmetric(3).unwrap();
        let other = SubgroupSet::whole(&make_dihedral(4).unwrap());
        assert_eq!(normalizer(&g, &other), Err(GroupError::NotASubgroup));
    }

    #[test]
    fn generation() {
        let g = make_symmetric(3).unwrap();
        assert!(generated(&g, []).is_trivial());
        let ts: Vec<_> = g.elements().filter(|&x| g.element_order(x) == 2).collect();
        assert!(generated(&g, [ts[0], ts[1]]).is_whole());
        let d8 = make_dihedral(8).unwrap();
        assert_eq!(cyclic(&d8, 1).size(), 8);
    }

    #[test]
    fn rotations_meet_reflections_trivially() {
        let g = make_dihedral(4).unwrap();
        let r = cyclic(&g, 1);
        let s = cyclic(&g, 4);
        assert!(intersect(&r, &s).unwrap().is_trivial());
        assert_eq!(intersect(&r, &r).unwrap(), r);
        let other = SubgroupSet::whole(&make_symmetric(3).unwrap());
        assert!(matches!(
            intersect(&r, &other),
            Err(GroupError::ParentMismatch { .. })
        ));
    }

    #[test]
    fn normal_closures() {
        let g = make_symmetric(3).unwrap();
        let whole = SubgroupSet::whole(&g);
        let h = cyclic(&g, transposition(&g));
        assert!(normal_closure(&g, &h, &whole).unwrap().is_whole());
        let triv = SubgroupSet::trivial(&g);
        assert!(normal_closure(&g, &triv, &whole).unwrap().is_trivial());
        assert_eq!(
            normal_closure(&g, &whole, &h),
            Err(GroupError::NotContained(
                whole.members().first_outside(h.members()).unwrap()
            ))
        );
    }

    #[test]
    fn subnormality() {
        let d4 = make_dihedral(4).unwrap();
        let s = cyclic(&d4, 4);
        let v = is_subnormal(&d4, &s);
        assert!(v.is_subnormal);
        assert_eq!(v.defect, Some(2));
        assert_eq!(v.chain.last(), Some(&s));
        let s3 = make_symmetric(3).unwrap();
        let t = cyclic(&s3, transposition(&s3));
        let v = is_subnormal(&s3, &t);
        assert!(!v.is_subnormal);
        assert_eq!(v.defect, None);
        let whole = is_subnormal(&s3, &SubgroupSet::whole(&s3));
        assert_eq!(whole.defect, Some(0));
    }

    #[test]
    fn s3_subnormal_subgroups_are_exactly_1_a3_s3() {
        let g = make_symmetric(3).unwrap();
        let subs = all_subgroups(&g);
        assert_eq!(subs.len(), 6);
        let sizes: Vec<_> = subs
            .iter()
            .filter(|h| is_subnormal(&g, h).is_subnormal)
            .map(|h| h.size())
            .collect();
        assert_eq!(sizes, vec![1, 3, 6]);
    }

    #[test]
    fn centralizer_census() {
        assert_eq!(distinct_centralizer_count(&make_symmetric(3).unwrap()), 5);
        assert_eq!(distinct_centralizer_count(&make_dihedral(4).unwrap()), 4);
        assert_eq!(distinct_centralizer_count(&make_dihedral(2).unwrap()), 1);
    }

    #[test]
    fn subgroup_validation() {
        let g = make_symmetric(3).unwrap();
        assert!(SubgroupSet::new(&g, &[0]).is_ok());
        assert_eq!(SubgroupSet::new(&g, &[1]), Err(GroupError::NotASubgroup));
        let t = transposition(&g);
        let u = g
            .elements()
            .filter(|&x| g.element_order(x) == 2)
            .nth(1)
            .unwrap();
        assert_eq!(
            SubgroupSet::new(&g, &[0, t, u]),
            Err(GroupError::NotASubgroup)
        );
    }

    #[test]
    fn restriction_round_trip() {
        let g = make_dihedral(6).unwrap();
        let h = cyclic(&g, 1);
        let r = Restriction::new(&g, &h);
        assert_eq!(r.group.order(), 6);
        assert!(r.group.is_abelian());
        let all = ElementSet::full(6);
        assert_eq!(r.lift(&all), h.members().clone());
        assert_eq!(r.pull(h.members()), all);
    }
}
