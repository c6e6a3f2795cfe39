use crate::bitset::ElementSet;
use crate::error::{GroupError, Result};
use crate::group::{ElementId, FiniteGroup};
use crate::subgroup::SubgroupSet;

/// The natural surjection `G → G/N`.
///
/// Cosets are numbered by their least member, so the coset of the identity
/// is not necessarily index 0 when the parent identity is not index 0.
#[derive(Clone, Debug)]
pub struct QuotientMap {
    pub kernel: SubgroupSet,
    pub coset_of: Vec<ElementId>,
    /// Least member of each coset.
    pub representatives: Vec<ElementId>,
    pub quotient: FiniteGroup,
}

impl QuotientMap {
    /// Full preimage of a set of quotient elements.
    pub fn preimage(&self, set: &ElementSet) -> ElementSet {
        ElementSet::from_indices(
            self.coset_of.len(),
            (0..self.coset_of.len()).filter(|&x| set.contains(self.coset_of[x])),
        )
    }

    pub fn preimage_subgroup(&self, h: &SubgroupSet) -> SubgroupSet {
        SubgroupSet::from_closed(self.preimage(h.members()))
    }

    /// Image of a set of parent elements.
    pub fn image(&self, set: &ElementSet) -> ElementSet {
        ElementSet::from_indices(self.quotient.order(), set.iter().map(|x| self.coset_of[x]))
    }

    pub fn image_subgroup(&self, h: &SubgroupSet) -> SubgroupSet {
        SubgroupSet::from_closed(self.image(h.members()))
    }
}

/// Forms `g / n`, failing with a conjugation witness when `n` is not normal.
pub fn quotient(g: &FiniteGroup, n: &SubgroupSet) -> Result<QuotientMap> {
    if n.parent_order() != g.order() {
        return Err(GroupError::NotASubgroup);
    }
    if let Some((h, t)) = n.normality_witness(g) {
        return Err(GroupError::NotNormal { h, t });
    }
    let mut coset_of = vec![usize::MAX; g.order()];
    let mut representatives = Vec::with_capacity(g.order() / n.size());
    for a in g.elements() {
        if coset_of[a] != usize::MAX {
            continue;
        }
        let c = representatives.len();
        representatives.push(a);
        for k in n.iter() {
            coset_of[g.mul(a, k)] = c;
        }
    }
    let m = representatives.len();
    // relocate the identity coset to index 0 for the table builder, then map back
    let id_coset = coset_of[g.identity()];
    let swap = |c: usize| {
        if c == id_coset {
            0
        } else if c == 0 {
            id_coset
        } else {
            c
        }
    };
    let reps_sorted: Vec<ElementId> = (0..m).map(|c| representatives[swap(c)]).collect();
    let labels: Vec<String> = (0..m)
        .map(|c| {
            let r = reps_sorted[c];
            if n.is_trivial() {
                g.label(r).to_string()
            } else {
                format!("{}N", g.label(r))
            }
        })
        .collect();
    let shifted = FiniteGroup::from_product_fn(m, labels, |i, j| {
        swap(coset_of[g.mul(reps_sorted[i], reps_sorted[j])])
    });
    let quotient = if id_coset == 0 {
        shifted
    } else {
        relabel(&shifted, &swap)
    };
    Ok(QuotientMap {
        kernel: n.clone(),
        coset_of,
        representatives,
        quotient,
    })
}

/// Applies an involutive index permutation to a group built with identity 0.
fn relabel(g: &FiniteGroup, perm: &impl Fn(usize) -> usize) -> FiniteGroup {
    let n = g.order();
    let rows: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).map(|j| perm(g.mul(perm(i), perm(j)))).collect())
        .collect();
    let labels = (0..n).map(|i| g.label(perm(i)).to_string()).collect();
    FiniteGroup::from_cayley_table_with_labels(n, &rows, Some(labels))
        .expect("relabelling preserves the group axioms")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{make_dihedral, make_symmetric};
    use crate::subgroup::{center, cyclic};

    fn check_invariants(g: &FiniteGroup, q: &QuotientMap) {
        assert_eq!(q.quotient.order() * q.kernel.size(), g.order());
        for a in g.elements() {
            for b in g.elements() {
                assert_eq!(
                    q.coset_of[g.mul(a, b)],
                    q.quotient.mul(q.coset_of[a], q.coset_of[b])
                );
                let same = q.coset_of[a] == q.coset_of[b];
                assert_eq!(same, q.kernel.contains(g.mul(a, g.inv(b))));
            }
        }
    }

    #[test]
    fn quotient_by_whole_group_is_trivial() {
        let g = make_symmetric(3).unwrap();
        let q = quotient(&g, &SubgroupSet::whole(&g)).unwrap();
        assert_eq!(q.quotient.order(), 1);
        check_invariants(&g, &q);
    }

    #[test]
    fn d4_mod_center_is_klein_four() {
        let g = make_dihedral(4).unwrap();
        let q = quotient(&g, &center(&g)).unwrap();
        assert_eq!(q.quotient.order(), 4);
        assert!(q
            .quotient
            .elements()
            .skip(1)
            .all(|x| q.quotient.element_order(x) == 2));
        // cosets ordered by least member: {0,2}, {1,3}, {4,6}, {5,7}
        assert_eq!(q.representatives, vec![0, 1, 4, 5]);
        check_invariants(&g, &q);
    }

    #[test]
    fn transposition_subgroup_is_not_normal() {
        let g = make_symmetric(3).unwrap();
        let t = g.elements().find(|&x| g.element_order(x) == 2).unwrap();
        match quotient(&g, &cyclic(&g, t)) {
            Err(GroupError::NotNormal { h, t: c }) => {
                assert!(!cyclic(&g, t).contains(g.conj(h, c)));
            }
            other => panic!("expected NotNormal, got {other:?}"),
        }
    }

    #[test]
    fn identity_coset_need_not_be_first() {
        // Z_4 relabelled by swapping 0 and 3, so 3 is the identity
        let sigma = |i: usize| match i {
            0 => 3,
            3 => 0,
            x => x,
        };
        let rows: Vec<Vec<usize>> = (0..4)
            .map(|i| (0..4).map(|j| sigma((sigma(i) + sigma(j)) % 4)).collect())
            .collect();
        let g = FiniteGroup::from_cayley_table(4, &rows).unwrap();
        assert_eq!(g.identity(), 3);
        let involution = g.elements().find(|&x| g.element_order(x) == 2).unwrap();
        let q = quotient(&g, &cyclic(&g, involution)).unwrap();
        check_invariants(&g, &q);
        assert_eq!(q.quotient.identity(), q.coset_of[g.identity()]);
    }
}
